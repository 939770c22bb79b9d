#include "nn/interval.hpp"

#include <algorithm>

namespace nn {

bool IClause::subset_of(const IClause& o) const {
  return std::includes(o.lits.begin(), o.lits.end(), lits.begin(), lits.end());
}

bool IClause::operator<(const IClause& o) const {
  if (lits.size() != o.lits.size()) return lits.size() < o.lits.size();
  return lits < o.lits;
}

Interval Interval::one() {
  Interval r;
  r.cls_.push_back(IClause{});
  return r;
}

Interval Interval::var(uint32_t v) {
  Interval r;
  r.cls_.push_back(IClause{{ilit(v, false)}});
  return r;
}

Interval Interval::inv_var(uint32_t v) {
  Interval r;
  r.cls_.push_back(IClause{{ilit(v, true)}});
  return r;
}

Interval Interval::make(std::vector<IClause> cs) {
  for (auto& c : cs) {
    std::sort(c.lits.begin(), c.lits.end());
    c.lits.erase(std::unique(c.lits.begin(), c.lits.end()), c.lits.end());
  }
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  // Absorption: drop any clause that includes another (distinct) clause.
  std::vector<IClause> keep;
  for (size_t i = 0; i < cs.size(); ++i) {
    bool absorbed = false;
    for (size_t j = 0; j < cs.size() && !absorbed; ++j)
      if (i != j && cs[j].subset_of(cs[i])) absorbed = true;
    if (!absorbed) keep.push_back(cs[i]);
  }
  Interval r;
  r.cls_ = std::move(keep);
  return r;
}

uint32_t Interval::var_bound() const {
  uint32_t n = 0;
  for (const auto& c : cls_)
    for (ILit l : c.lits) n = std::max(n, ilit_var(l) + 1);
  return n;
}

Interval Interval::map_vars(const std::function<uint32_t(uint32_t)>& f) const {
  std::vector<IClause> cs;
  cs.reserve(cls_.size());
  for (const auto& c : cls_) {
    IClause nc;
    nc.lits.reserve(c.lits.size());
    for (ILit l : c.lits) nc.lits.push_back(ilit(f(ilit_var(l)), ilit_inv(l)));
    cs.push_back(std::move(nc));
  }
  return make(std::move(cs));
}

std::string Interval::show(const std::function<std::string(uint32_t)>& name) const {
  if (is_zero()) return "0";
  if (is_one()) return "1";
  std::string out;
  bool paren_clauses = cls_.size() > 1;
  for (size_t i = 0; i < cls_.size(); ++i) {
    if (i) out += " \\/ ";
    const auto& c = cls_[i];
    std::string cc;
    for (size_t j = 0; j < c.lits.size(); ++j) {
      if (j) cc += " /\\ ";
      ILit l = c.lits[j];
      if (ilit_inv(l)) cc += "~";
      cc += name(ilit_var(l));
    }
    if (paren_clauses && c.lits.size() > 1) cc = "(" + cc + ")";
    out += cc;
  }
  return out;
}

std::string Interval::show() const {
  return show([](uint32_t v) { return "i" + std::to_string(v); });
}

Interval ijoin(const Interval& a, const Interval& b) {
  std::vector<IClause> cs = a.clauses();
  cs.insert(cs.end(), b.clauses().begin(), b.clauses().end());
  return Interval::make(std::move(cs));
}

Interval imeet(const Interval& a, const Interval& b) {
  std::vector<IClause> cs;
  cs.reserve(a.clauses().size() * b.clauses().size());
  for (const auto& ca : a.clauses())
    for (const auto& cb : b.clauses()) {
      IClause c;
      c.lits = ca.lits;
      c.lits.insert(c.lits.end(), cb.lits.begin(), cb.lits.end());
      cs.push_back(std::move(c));
    }
  return Interval::make(std::move(cs));
}

Interval ineg(const Interval& a) {
  // De Morgan expansion: ~(\/_i /\_j l_ij) = /\_i \/_j ~l_ij.
  Interval acc = Interval::one();
  for (const auto& c : a.clauses()) {
    Interval clause_neg = Interval::zero();
    for (ILit l : c.lits) {
      ILit fl = ilit_flip(l);
      clause_neg = ijoin(clause_neg,
                         ilit_inv(fl) ? Interval::inv_var(ilit_var(fl))
                                      : Interval::var(ilit_var(fl)));
    }
    acc = imeet(acc, clause_neg);
  }
  return acc;
}

Interval isubst(const Interval& a, const std::function<Interval(uint32_t)>& f) {
  Interval acc = Interval::zero();
  for (const auto& c : a.clauses()) {
    Interval m = Interval::one();
    for (ILit l : c.lits) {
      Interval v = f(ilit_var(l));
      m = imeet(m, ilit_inv(l) ? ineg(v) : v);
    }
    acc = ijoin(acc, m);
  }
  return acc;
}

Interval inorm(const IExpr& e) {
  switch (e.kind) {
    case IExpr::Zero: return Interval::zero();
    case IExpr::One: return Interval::one();
    case IExpr::Var: return Interval::var(e.v);
    case IExpr::Neg: return ineg(inorm(*e.l));
    case IExpr::Meet: return imeet(inorm(*e.l), inorm(*e.r));
    case IExpr::Join: return ijoin(inorm(*e.l), inorm(*e.r));
  }
  return Interval::zero();
}

}  // namespace nn
