#include "nn/term.hpp"

namespace nn {

int cat_level(Cat c) {
  switch (c) {
    case Cat::Dravya:
    case Cat::Guna:
    case Cat::Karman:
    case Cat::Visesa: return 1;
    case Cat::Samanya:
    case Cat::Samavaya:
    case Cat::AbhavaCat: return 2;
    case Cat::None: return 0;
  }
  return 0;
}

const char* cat_name(Cat c) {
  switch (c) {
    case Cat::Dravya: return "dravya";
    case Cat::Guna: return "guna";
    case Cat::Karman: return "karman";
    case Cat::Samanya: return "samanya";
    case Cat::Visesa: return "visesa";
    case Cat::Samavaya: return "samavaya";
    case Cat::AbhavaCat: return "abhava";
    case Cat::None: return "";
  }
  return "";
}

TPtr mk(Tk k, std::vector<TPtr> kids) {
  auto t = std::make_shared<Term>(k);
  t->kid = std::move(kids);
  return t;
}

TPtr mk_var(int idx) {
  auto t = std::make_shared<Term>(Tk::Var);
  t->idx = idx;
  return t;
}

TPtr mk_post(const std::string& name) {
  auto t = std::make_shared<Term>(Tk::Post);
  t->name = name;
  return t;
}

TPtr mk_gdef(const std::string& name) {
  auto t = std::make_shared<Term>(Tk::Gdef);
  t->name = name;
  return t;
}

TPtr mk_univ(int level, Cat c) {
  auto t = std::make_shared<Term>(Tk::Univ);
  t->level = level;
  t->cat = c;
  return t;
}

TPtr mk_fin(int n) {
  auto t = std::make_shared<Term>(Tk::FinT);
  t->level = n;
  return t;
}

bool term_eq(const TPtr& a, const TPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->k != b->k) return false;
  switch (a->k) {
    case Tk::Var: if (a->idx != b->idx) return false; break;
    case Tk::Post:
    case Tk::Gdef: if (a->name != b->name) return false; break;
    case Tk::Univ:
      if (a->level != b->level || a->cat != b->cat) return false;
      break;
    case Tk::FinT: if (a->level != b->level) return false; break;
    case Tk::PathApp:
    case Tk::Transp:
      if (a->iv != b->iv) return false;
      break;
    default: break;
  }
  if (a->kid.size() != b->kid.size()) return false;
  for (size_t i = 0; i < a->kid.size(); ++i)
    if (!term_eq(a->kid[i], b->kid[i])) return false;
  return true;
}

// Binder arity of each child slot: how many term binders the i-th child
// sits under, relative to the node.
static int child_term_binders(Tk k, size_t i) {
  switch (k) {
    case Tk::Let: return i == 2 ? 1 : 0;
    case Tk::Pi:
    case Tk::Sigma: return i == 1 ? 1 : 0;
    case Tk::Lam: return 1;
    default: return 0;
  }
}

TPtr term_shift(const TPtr& t, int d, int cutoff) {
  if (!t) return t;
  if (t->k == Tk::Var) {
    if (t->idx < cutoff) return t;
    auto n = std::make_shared<Term>(*t);
    n->idx += d;
    return n;
  }
  bool changed = false;
  std::vector<TPtr> kids;
  kids.reserve(t->kid.size());
  for (size_t i = 0; i < t->kid.size(); ++i) {
    TPtr nk = term_shift(t->kid[i], d, cutoff + child_term_binders(t->k, i));
    if (nk != t->kid[i]) changed = true;
    kids.push_back(nk);
  }
  if (!changed) return t;
  auto n = std::make_shared<Term>(*t);
  n->kid = std::move(kids);
  return n;
}

}  // namespace nn
