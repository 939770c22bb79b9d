#include <algorithm>
#include <sstream>

#include "nn/eval.hpp"
#include "nn/pretty.hpp"
#include "nn/surface.hpp"

namespace nn {

// Precedence levels, loosest first.
enum Prec { PArrow = 0, PSig = 1, PJoin = 2, PMeet = 3, PNeg = 4, PApp = 5, PAtom = 6 };

namespace {

std::string parens_if(bool b, const std::string& s) {
  return b ? "(" + s + ")" : s;
}

// ------------------------------------------------------------- core terms

struct CorePrinter {
  std::vector<std::string> tn, in;

  std::string fresh(const std::string& hint, bool interval) {
    std::string base = hint.empty() || hint == "%_" ? (interval ? "i" : "x") : hint;
    std::string cand = base;
    int n = 0;
    auto used = [&](const std::string& s) {
      return std::find(tn.begin(), tn.end(), s) != tn.end() ||
             std::find(in.begin(), in.end(), s) != in.end();
    };
    while (used(cand)) cand = base + std::to_string(++n);
    return cand;
  }

  std::string ivar_name(uint32_t idx) {
    int i = static_cast<int>(in.size()) - 1 - static_cast<int>(idx);
    if (i < 0) return "i?" + std::to_string(idx);
    return in[static_cast<size_t>(i)];
  }

  std::string show_iv(const Interval& iv) {
    return iv.show([this](uint32_t v) { return ivar_name(v); });
  }

  bool iv_atom(const Interval& iv) {
    if (iv.is_zero() || iv.is_one()) return true;
    const auto& cs = iv.clauses();
    return cs.size() == 1 && cs[0].lits.size() == 1 && !ilit_inv(cs[0].lits[0]);
  }

  std::string go(const TPtr& t, int prec) {
    if (!t) return "_";
    switch (t->k) {
      case Tk::Var: {
        int i = static_cast<int>(tn.size()) - 1 - t->idx;
        if (i < 0) return "x?" + std::to_string(t->idx);
        return tn[static_cast<size_t>(i)];
      }
      case Tk::Post:
      case Tk::Gdef: return t->name;
      case Tk::Let: {
        std::string n = fresh(t->name, false);
        std::string ty = go(t->kid[0], PArrow);
        std::string val = go(t->kid[1], PArrow);
        tn.push_back(n);
        std::string body = go(t->kid[2], PArrow);
        tn.pop_back();
        return parens_if(prec > PArrow,
                         "let " + n + " : " + ty + " = " + val + " in " + body);
      }
      case Tk::Pi: {
        bool dep = term_mentions(t->kid[1], 0);
        std::string dom = go(t->kid[0], dep ? PArrow : PSig);
        std::string n = dep ? fresh(t->name, false) : "%_";
        tn.push_back(n);
        std::string cod = go(t->kid[1], PArrow);
        tn.pop_back();
        std::string s = dep ? "(" + n + " : " + dom + ") -> " + cod
                            : dom + " -> " + cod;
        return parens_if(prec > PArrow, s);
      }
      case Tk::Sigma: {
        bool dep = term_mentions(t->kid[1], 0);
        std::string dom = go(t->kid[0], dep ? PArrow : PJoin);
        std::string n = dep ? fresh(t->name, false) : "%_";
        tn.push_back(n);
        std::string cod = go(t->kid[1], PSig);
        tn.pop_back();
        std::string s = dep ? "(" + n + " : " + dom + ") * " + cod
                            : dom + " * " + cod;
        return parens_if(prec > PSig, s);
      }
      case Tk::Lam: {
        std::string n = fresh(t->name, false);
        tn.push_back(n);
        std::string body = go(t->kid[0], PArrow);
        tn.pop_back();
        return parens_if(prec > PArrow, "\\" + n + ". " + body);
      }
      case Tk::App:
        return parens_if(prec > PApp,
                         go(t->kid[0], PApp) + " " + go(t->kid[1], PAtom));
      case Tk::Pair:
        return "(" + go(t->kid[0], PArrow) + ", " + go(t->kid[1], PArrow) + ")";
      case Tk::Fst: return go(t->kid[0], PAtom) + ".fst";
      case Tk::Snd: return go(t->kid[0], PAtom) + ".snd";
      case Tk::Univ: {
        if (t->cat != Cat::None) return std::string("U_") + cat_name(t->cat);
        return "Type" + std::to_string(t->level);
      }
      case Tk::PathT: {
        if (!term_mentions_ivar(t->kid[0], 0)) {
          in.push_back("%");
          std::string fam = go(t->kid[0], PAtom);
          in.pop_back();
          return parens_if(prec > PApp, "Path " + fam + " " +
                                            go(t->kid[1], PAtom) + " " +
                                            go(t->kid[2], PAtom));
        }
        std::string n = fresh(t->name, true);
        in.push_back(n);
        std::string fam = go(t->kid[0], PArrow);
        in.pop_back();
        return parens_if(prec > PApp, "PathP (<" + n + "> " + fam + ") " +
                                          go(t->kid[1], PAtom) + " " +
                                          go(t->kid[2], PAtom));
      }
      case Tk::PathLam: {
        std::string n = fresh(t->name, true);
        in.push_back(n);
        std::string body = go(t->kid[0], PArrow);
        in.pop_back();
        return parens_if(prec > PArrow, "<" + n + "> " + body);
      }
      case Tk::PathApp: {
        std::string r = show_iv(t->iv);
        return parens_if(prec > PApp, go(t->kid[0], PAtom) + " @ " +
                                          parens_if(!iv_atom(t->iv), r));
      }
      case Tk::Transp: {
        std::string r = show_iv(t->iv);
        return parens_if(prec > PApp, "transp " + go(t->kid[0], PAtom) + " " +
                                          parens_if(!iv_atom(t->iv), r) + " " +
                                          go(t->kid[1], PAtom));
      }
      case Tk::Ua:
        return parens_if(prec > PApp, "ua " + go(t->kid[2], PAtom));
      case Tk::Refl: return "refl";
      case Tk::Abhava:
        return parens_if(prec > PApp, "Abhava " + go(t->kid[0], PAtom) + " " +
                                          go(t->kid[1], PAtom) + " " +
                                          go(t->kid[2], PAtom));
      case Tk::AbhavaHolds:
        return parens_if(prec > PApp,
                         "AbhavaHolds " + go(t->kid[0], PAtom) + " " +
                             go(t->kid[1], PAtom) + " " + go(t->kid[2], PAtom) +
                             " " + go(t->kid[3], PAtom));
      case Tk::S1: return "S1";
      case Tk::Base: return "Base";
      case Tk::Loop: return "Loop";
      case Tk::FinT:
        return parens_if(prec > PApp, "Fin " + std::to_string(t->level));
      case Tk::NatT: return "Nat";
      case Tk::Zero: return "zero";
      case Tk::Suc:
        return parens_if(prec > PApp, "suc " + go(t->kid[0], PAtom));
      case Tk::EmptyT: return "Empty";
      case Tk::EmptyElim:
        return parens_if(prec > PApp, "EmptyElim " + go(t->kid[0], PAtom) + " " +
                                          go(t->kid[1], PAtom));
      case Tk::UnitT: return "Unit";
      case Tk::Star: return "Star";
      case Tk::ListT:
        return parens_if(prec > PApp, "List " + go(t->kid[0], PAtom));
      case Tk::Nil: return "nil";
      case Tk::Cons:
        return parens_if(prec > PApp, "cons " + go(t->kid[0], PAtom) + " " +
                                          go(t->kid[1], PAtom));
      case Tk::PratyT: return "Pratyasatti";
      case Tk::MSamyoga: return "samyoga";
      case Tk::MSamavaya: return "samavaya";
      case Tk::MSvarupa: return "svarupa";
      case Tk::MTadatmya: return "tadatmya";
      case Tk::MParampara:
        return parens_if(prec > PApp, "parampara " + go(t->kid[0], PAtom));
    }
    return "?";
  }

  static bool term_mentions(const TPtr& t, int idx) {
    if (!t) return false;
    if (t->k == Tk::Var) return t->idx == idx;
    for (size_t i = 0; i < t->kid.size(); ++i) {
      int bump = 0;
      switch (t->k) {
        case Tk::Let: bump = (i == 2) ? 1 : 0; break;
        case Tk::Pi:
        case Tk::Sigma: bump = (i == 1) ? 1 : 0; break;
        case Tk::Lam: bump = 1; break;
        default: break;
      }
      if (term_mentions(t->kid[i], idx + bump)) return true;
    }
    return false;
  }
};

}  // namespace

std::string pretty_term(const TPtr& t, std::vector<std::string> tnames,
                        std::vector<std::string> inames) {
  CorePrinter p;
  p.tn = std::move(tnames);
  p.in = std::move(inames);
  return p.go(t, PArrow);
}

// ---------------------------------------------------------- surface terms

namespace {

struct SurfacePrinter {
  std::string go(const SPtr& t, int prec) {
    switch (t->k) {
      case Sk::Name: return t->name;
      case Sk::Num: return std::to_string(t->num);
      case Sk::Lam:
        return parens_if(prec > PArrow, "\\" + t->name + ". " + go(t->kid[0], PArrow));
      case Sk::PathLam:
        return parens_if(prec > PArrow, "<" + t->name + "> " + go(t->kid[0], PArrow));
      case Sk::Pi: {
        if (t->name.empty())
          return parens_if(prec > PArrow,
                           go(t->kid[0], PSig) + " -> " + go(t->kid[1], PArrow));
        return parens_if(prec > PArrow, "(" + t->name + " : " + go(t->kid[0], PArrow) +
                                            ") -> " + go(t->kid[1], PArrow));
      }
      case Sk::Sigma: {
        if (t->name.empty())
          return parens_if(prec > PSig,
                           go(t->kid[0], PJoin) + " * " + go(t->kid[1], PSig));
        return parens_if(prec > PSig, "(" + t->name + " : " + go(t->kid[0], PArrow) +
                                          ") * " + go(t->kid[1], PSig));
      }
      case Sk::App:
        return parens_if(prec > PApp,
                         go(t->kid[0], PApp) + " " + go(t->kid[1], PAtom));
      case Sk::PathApp:
        return parens_if(prec > PApp,
                         go(t->kid[0], PApp) + " @ " + go(t->kid[1], PAtom));
      case Sk::Fst: return go(t->kid[0], PAtom) + ".fst";
      case Sk::Snd: return go(t->kid[0], PAtom) + ".snd";
      case Sk::Pair:
        return "(" + go(t->kid[0], PArrow) + ", " + go(t->kid[1], PArrow) + ")";
      case Sk::Meet:
        return parens_if(prec > PMeet,
                         go(t->kid[0], PMeet) + " /\\ " + go(t->kid[1], PNeg));
      case Sk::Join:
        return parens_if(prec > PJoin,
                         go(t->kid[0], PJoin) + " \\/ " + go(t->kid[1], PMeet));
      case Sk::Neg:
        return parens_if(prec > PNeg, "~ " + go(t->kid[0], PNeg));
      case Sk::Let:
        return parens_if(prec > PArrow, "let " + t->name + " : " +
                                            go(t->kid[0], PArrow) + " = " +
                                            go(t->kid[1], PArrow) + " in " +
                                            go(t->kid[2], PArrow));
      case Sk::Universe: {
        if (t->cat != Cat::None) return std::string("U_") + cat_name(t->cat);
        return "Type" + std::to_string(t->level);
      }
      case Sk::Kw: {
        switch (t->kw) {
          case Bk::Abhava: return "Abhava";
          case Bk::AbhavaHolds: return "AbhavaHolds";
          case Bk::S1: return "S1";
          case Bk::Base: return "Base";
          case Bk::Loop: return "Loop";
          case Bk::Fin: return "Fin";
          case Bk::Nat: return "Nat";
          case Bk::Zero: return "zero";
          case Bk::Suc: return "suc";
          case Bk::Empty: return "Empty";
          case Bk::EmptyElim: return "EmptyElim";
          case Bk::Unit: return "Unit";
          case Bk::Star: return "Star";
          case Bk::List: return "List";
          case Bk::Nil: return "nil";
          case Bk::Cons: return "cons";
          case Bk::Praty: return "Pratyasatti";
          case Bk::Samyoga: return "samyoga";
          case Bk::Samavaya: return "samavaya";
          case Bk::Svarupa: return "svarupa";
          case Bk::Tadatmya: return "tadatmya";
          case Bk::Parampara: return "parampara";
          case Bk::Transp: return "transp";
          case Bk::Ua: return "ua";
          case Bk::Refl: return "refl";
          case Bk::Sym: return "sym";
          case Bk::Path: return "Path";
          case Bk::PathP: return "PathP";
        }
        return "?";
      }
    }
    return "?";
  }
};

std::string names_line(const std::vector<std::string>& ns) {
  std::string s;
  for (size_t i = 0; i < ns.size(); ++i) {
    if (i) s += " ";
    s += ns[i];
  }
  return s;
}

void print_decl(std::ostringstream& o, const Decl& d, int indent) {
  std::string pad(static_cast<size_t>(indent), ' ');
  switch (d.k) {
    case Decl::Postulate:
      o << pad << "postulate " << d.name << " : " << pretty_sterm(d.type) << "\n";
      break;
    case Decl::Def:
      o << pad << "def " << d.name << " : " << pretty_sterm(d.type) << " =\n"
        << pad << "  " << pretty_sterm(d.body) << "\n";
      break;
    case Decl::Check:
      o << pad << "check " << pretty_sterm(d.body) << " : " << pretty_sterm(d.type)
        << "\n";
      break;
    case Decl::FailCheck:
      o << pad << "fail-check " << pretty_sterm(d.body) << " : "
        << pretty_sterm(d.type) << " expecting " << d.expect << "\n";
      break;
    case Decl::Model: {
      o << pad << "model " << d.model.name << " {\n";
      if (!d.model.loci.empty())
        o << pad << "  loci: " << names_line(d.model.loci) << ";\n";
      for (const auto& p : d.model.preds)
        o << pad << "  pred " << p.name << " = {" << names_line(p.extent) << "};\n";
      for (const auto& ih : d.model.inherents)
        o << pad << "  inheres " << ih.first << " = {" << names_line(ih.second)
          << "};\n";
      if (d.model.paksa) o << pad << "  paksa " << *d.model.paksa << ";\n";
      for (const auto& oa : d.model.observed_absent)
        o << pad << "  observed-absent " << oa.first << " at " << oa.second << ";\n";
      o << pad << "}\n";
      break;
    }
    case Decl::Example: {
      o << pad << "example " << d.name << " paper \"" << d.anchor << "\" {\n";
      for (const Decl& s : d.sub) print_decl(o, s, indent + 2);
      o << pad << "}\n";
      break;
    }
    case Decl::VyaptiVerdict:
      o << pad << "vyapti-verdict " << d.name << " " << d.a1 << " " << d.a2
        << " expecting " << d.expect << "\n";
      break;
    case Decl::ParyaptiCount:
      o << pad << "paryapti-count " << d.name << " " << d.a1 << " " << d.num
        << " expecting " << d.expect << "\n";
      break;
  }
}

}  // namespace

std::string pretty_sterm(const SPtr& t) {
  SurfacePrinter p;
  return p.go(t, PArrow);
}

std::string pretty_module(const SourceModule& m) {
  std::ostringstream o;
  for (size_t i = 0; i < m.decls.size(); ++i) {
    if (i) o << "\n";
    print_decl(o, m.decls[i], 0);
  }
  return o.str();
}

// ------------------------------------------------------ structural equality

bool sterm_eq(const SPtr& a, const SPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->k != b->k) return false;
  switch (a->k) {
    case Sk::Name:
      if (a->name != b->name) return false;
      break;
    case Sk::Num:
      if (a->num != b->num) return false;
      break;
    case Sk::Lam:
    case Sk::PathLam:
    case Sk::Pi:
    case Sk::Sigma:
    case Sk::Let:
      if (a->name != b->name) return false;
      break;
    case Sk::Universe:
      if (a->level != b->level || a->cat != b->cat) return false;
      break;
    case Sk::Kw:
      if (a->kw != b->kw) return false;
      break;
    default: break;
  }
  if (a->kid.size() != b->kid.size()) return false;
  for (size_t i = 0; i < a->kid.size(); ++i)
    if (!sterm_eq(a->kid[i], b->kid[i])) return false;
  return true;
}

static bool decl_eq(const Decl& a, const Decl& b) {
  if (a.k != b.k || a.name != b.name || a.expect != b.expect || a.a1 != b.a1 ||
      a.a2 != b.a2 || a.num != b.num || a.anchor != b.anchor)
    return false;
  if (!sterm_eq(a.type, b.type) || !sterm_eq(a.body, b.body)) return false;
  if (a.k == Decl::Model) {
    const ModelDecl& x = a.model;
    const ModelDecl& y = b.model;
    if (x.name != y.name || x.loci != y.loci || x.paksa != y.paksa ||
        x.inherents != y.inherents || x.observed_absent != y.observed_absent)
      return false;
    if (x.preds.size() != y.preds.size()) return false;
    for (size_t i = 0; i < x.preds.size(); ++i)
      if (x.preds[i].name != y.preds[i].name || x.preds[i].extent != y.preds[i].extent)
        return false;
  }
  if (a.sub.size() != b.sub.size()) return false;
  for (size_t i = 0; i < a.sub.size(); ++i)
    if (!decl_eq(a.sub[i], b.sub[i])) return false;
  return true;
}

bool module_eq(const SourceModule& a, const SourceModule& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (size_t i = 0; i < a.decls.size(); ++i)
    if (!decl_eq(a.decls[i], b.decls[i])) return false;
  return true;
}

}  // namespace nn
