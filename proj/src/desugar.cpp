#include <algorithm>

#include "nn/surface.hpp"

namespace nn {

namespace {

[[noreturn]] void derr(Code c, const Span& sp, const std::string& msg) {
  Diagnostic d;
  d.code = c;
  d.span = sp;
  d.message = msg;
  throw TypeError(std::move(d));
}

int rfind_name(const std::vector<std::string>& v, const std::string& n) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (v[static_cast<size_t>(i)] == n)
      return static_cast<int>(v.size()) - 1 - i;  // de Bruijn index
  return -1;
}

TPtr with_span(TPtr t, const Span& sp) {
  auto n = std::make_shared<Term>(*t);
  n->span = sp;
  return n;
}

// Collects the application spine: f a b c -> (f, [a, b, c]).
void spine(const SPtr& s, SPtr& base, std::vector<SPtr>& args) {
  if (s->k == Sk::App) {
    spine(s->kid[0], base, args);
    args.push_back(s->kid[1]);
  } else {
    base = s;
  }
}

int builtin_arity(Bk b) {
  switch (b) {
    case Bk::Abhava: return 3;
    case Bk::AbhavaHolds: return 4;
    case Bk::Suc: return 1;
    case Bk::EmptyElim: return 2;
    case Bk::List: return 1;
    case Bk::Cons: return 2;
    case Bk::Fin: return 1;
    case Bk::Parampara: return 1;
    case Bk::Transp: return 3;
    case Bk::Ua: return 1;
    case Bk::Sym: return 1;
    case Bk::Path: return 3;
    case Bk::PathP: return 3;
    default: return 0;
  }
}

const char* builtin_spelling(Bk b);

TPtr desugar_kw(const SPtr& base, std::vector<SPtr>& args, Scope& sc);

TPtr numeral(int n, const Span& sp) {
  TPtr t = mk(Tk::Zero);
  for (int i = 0; i < n; ++i) t = mk(Tk::Suc, {t});
  return with_span(t, sp);
}

}  // namespace

Interval desugar_interval(const SPtr& s, Scope& sc) {
  switch (s->k) {
    case Sk::Num:
      if (s->num == 0) return Interval::zero();
      if (s->num == 1) return Interval::one();
      derr(Code::ParseError, s->span, "interval literals are 0 and 1");
    case Sk::Name: {
      int idx = rfind_name(sc.ivars, s->name);
      if (idx >= 0) return Interval::var(static_cast<uint32_t>(idx));
      if (rfind_name(sc.tvars, s->name) >= 0)
        derr(Code::UnresolvedName, s->span,
             "term variable '" + s->name + "' used in an interval expression");
      derr(Code::UnresolvedName, s->span,
           "unbound interval variable '" + s->name + "'");
    }
    case Sk::Meet:
      return imeet(desugar_interval(s->kid[0], sc), desugar_interval(s->kid[1], sc));
    case Sk::Join:
      return ijoin(desugar_interval(s->kid[0], sc), desugar_interval(s->kid[1], sc));
    case Sk::Neg:
      return ineg(desugar_interval(s->kid[0], sc));
    default:
      derr(Code::ParseError, s->span, "expected an interval expression");
  }
}

namespace {

TPtr desugar_kw(const SPtr& base, std::vector<SPtr>& args, Scope& sc) {
  Bk b = base->kw;
  int arity = builtin_arity(b);
  if (b == Bk::Refl && !args.empty()) arity = 1;  // refl also takes one argument
  if (static_cast<int>(args.size()) < arity)
    derr(Code::ParseError, base->span,
         std::string("'") + builtin_spelling(b) + "' expects " +
             std::to_string(arity) + " argument(s)");

  auto term_arg = [&](int i) { return desugar_term(args[static_cast<size_t>(i)], sc); };

  TPtr t;
  switch (b) {
    case Bk::Abhava:
      t = mk(Tk::Abhava, {term_arg(0), term_arg(1), term_arg(2)});
      break;
    case Bk::AbhavaHolds:
      t = mk(Tk::AbhavaHolds, {term_arg(0), term_arg(1), term_arg(2), term_arg(3)});
      break;
    case Bk::S1: t = mk(Tk::S1); break;
    case Bk::Base: t = mk(Tk::Base); break;
    case Bk::Loop: t = mk(Tk::Loop); break;
    case Bk::Fin: {
      const SPtr& n = args[0];
      if (n->k != Sk::Num)
        derr(Code::ParseError, n->span, "Fin expects a numeral bound");
      t = mk_fin(n->num);
      break;
    }
    case Bk::Nat: t = mk(Tk::NatT); break;
    case Bk::Zero: t = mk(Tk::Zero); break;
    case Bk::Suc: t = mk(Tk::Suc, {term_arg(0)}); break;
    case Bk::Empty: t = mk(Tk::EmptyT); break;
    case Bk::EmptyElim: t = mk(Tk::EmptyElim, {term_arg(0), term_arg(1)}); break;
    case Bk::Unit: t = mk(Tk::UnitT); break;
    case Bk::Star: t = mk(Tk::Star); break;
    case Bk::List: t = mk(Tk::ListT, {term_arg(0)}); break;
    case Bk::Nil: t = mk(Tk::Nil); break;
    case Bk::Cons: t = mk(Tk::Cons, {term_arg(0), term_arg(1)}); break;
    case Bk::Praty: t = mk(Tk::PratyT); break;
    case Bk::Samyoga: t = mk(Tk::MSamyoga); break;
    case Bk::Samavaya: t = mk(Tk::MSamavaya); break;
    case Bk::Svarupa: t = mk(Tk::MSvarupa); break;
    case Bk::Tadatmya: t = mk(Tk::MTadatmya); break;
    case Bk::Parampara: t = mk(Tk::MParampara, {term_arg(0)}); break;
    case Bk::Transp: {
      TPtr line = term_arg(0);
      Interval r = desugar_interval(args[1], sc);
      TPtr elem = term_arg(2);
      auto n = std::make_shared<Term>(Tk::Transp);
      n->iv = r;
      n->kid = {line, elem};
      t = n;
      break;
    }
    case Bk::Ua: t = mk(Tk::Ua, {nullptr, nullptr, term_arg(0)}); break;
    case Bk::Refl: {
      if (args.empty()) {
        t = mk(Tk::Refl);
        break;
      }
      // refl x desugars to <_> x.
      sc.ivars.push_back("%refl");
      TPtr body = desugar_term(args[0], sc);
      sc.ivars.pop_back();
      auto n = std::make_shared<Term>(Tk::PathLam);
      n->name = "_";
      n->kid = {body};
      t = n;
      break;
    }
    case Bk::Sym: {
      // sym p desugars to <i> p @ (~ i), hygienically.
      sc.ivars.push_back("%sym");
      TPtr body_fn = desugar_term(args[0], sc);
      auto pa = std::make_shared<Term>(Tk::PathApp);
      pa->span = base->span;
      pa->iv = ineg(Interval::var(0));
      pa->kid = {body_fn, nullptr, nullptr};
      sc.ivars.pop_back();
      auto n = std::make_shared<Term>(Tk::PathLam);
      n->name = "i";
      n->kid = {pa};
      t = n;
      break;
    }
    case Bk::Path: {
      sc.ivars.push_back("%path");
      TPtr fam = desugar_term(args[0], sc);
      sc.ivars.pop_back();
      auto n = std::make_shared<Term>(Tk::PathT);
      n->name = "_";
      n->kid = {fam, term_arg(1), term_arg(2)};
      t = n;
      break;
    }
    case Bk::PathP: {
      const SPtr& famS = args[0];
      if (famS->k != Sk::PathLam)
        derr(Code::ParseError, famS->span,
             "PathP expects an interval abstraction family");
      sc.ivars.push_back(famS->name);
      TPtr fam = desugar_term(famS->kid[0], sc);
      sc.ivars.pop_back();
      auto n = std::make_shared<Term>(Tk::PathT);
      n->name = famS->name;
      n->kid = {fam, term_arg(1), term_arg(2)};
      t = n;
      break;
    }
  }
  t = with_span(t, base->span);
  // Remaining arguments become ordinary applications (the checker rejects
  // over-application of non-functions).
  for (size_t i = static_cast<size_t>(arity); i < args.size(); ++i)
    t = with_span(mk(Tk::App, {t, desugar_term(args[i], sc)}), base->span);
  return t;
}

const char* builtin_spelling(Bk b) {
  switch (b) {
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

}  // namespace

TPtr desugar_term(const SPtr& s, Scope& sc) {
  switch (s->k) {
    case Sk::Name: {
      int idx = rfind_name(sc.tvars, s->name);
      if (idx >= 0) return with_span(mk_var(idx), s->span);
      if (rfind_name(sc.ivars, s->name) >= 0)
        derr(Code::UnresolvedName, s->span,
             "interval variable '" + s->name + "' used as a term");
      if (sc.K) {
        const GlobalEntry* g = sc.K->global(s->name);
        if (g)
          return with_span(g->is_def ? mk_gdef(s->name) : mk_post(s->name), s->span);
      }
      derr(Code::UnresolvedName, s->span, "unbound name '" + s->name + "'");
    }
    case Sk::Num: return numeral(s->num, s->span);
    case Sk::Lam: {
      sc.tvars.push_back(s->name);
      TPtr body = desugar_term(s->kid[0], sc);
      sc.tvars.pop_back();
      auto n = std::make_shared<Term>(Tk::Lam);
      n->span = s->span;
      n->name = s->name;
      n->kid = {body};
      return n;
    }
    case Sk::PathLam: {
      sc.ivars.push_back(s->name);
      TPtr body = desugar_term(s->kid[0], sc);
      sc.ivars.pop_back();
      auto n = std::make_shared<Term>(Tk::PathLam);
      n->span = s->span;
      n->name = s->name;
      n->kid = {body};
      return n;
    }
    case Sk::Pi:
    case Sk::Sigma: {
      TPtr dom = desugar_term(s->kid[0], sc);
      sc.tvars.push_back(s->name.empty() ? "%_" : s->name);
      TPtr cod = desugar_term(s->kid[1], sc);
      sc.tvars.pop_back();
      auto n = std::make_shared<Term>(s->k == Sk::Pi ? Tk::Pi : Tk::Sigma);
      n->span = s->span;
      n->name = s->name.empty() ? "_" : s->name;
      n->kid = {dom, cod};
      return n;
    }
    case Sk::App: {
      SPtr base;
      std::vector<SPtr> args;
      spine(s, base, args);
      if (base->k == Sk::Kw) return desugar_kw(base, args, sc);
      TPtr t = desugar_term(base, sc);
      for (const SPtr& a : args)
        t = with_span(mk(Tk::App, {t, desugar_term(a, sc)}), s->span);
      return t;
    }
    case Sk::PathApp: {
      TPtr f = desugar_term(s->kid[0], sc);
      Interval r = desugar_interval(s->kid[1], sc);
      auto n = std::make_shared<Term>(Tk::PathApp);
      n->span = s->span;
      n->iv = r;
      n->kid = {f, nullptr, nullptr};
      return n;
    }
    case Sk::Fst:
    case Sk::Snd: {
      TPtr t = desugar_term(s->kid[0], sc);
      auto n = std::make_shared<Term>(s->k == Sk::Fst ? Tk::Fst : Tk::Snd);
      n->span = s->span;
      n->kid = {t};
      return n;
    }
    case Sk::Pair: {
      auto n = std::make_shared<Term>(Tk::Pair);
      n->span = s->span;
      n->kid = {desugar_term(s->kid[0], sc), desugar_term(s->kid[1], sc)};
      return n;
    }
    case Sk::Meet:
    case Sk::Join:
    case Sk::Neg:
      derr(Code::ParseError, s->span, "interval expression used as a term");
    case Sk::Let: {
      TPtr ty = desugar_term(s->kid[0], sc);
      TPtr val = desugar_term(s->kid[1], sc);
      sc.tvars.push_back(s->name);
      TPtr body = desugar_term(s->kid[2], sc);
      sc.tvars.pop_back();
      auto n = std::make_shared<Term>(Tk::Let);
      n->span = s->span;
      n->name = s->name;
      n->kid = {ty, val, body};
      return n;
    }
    case Sk::Universe: return with_span(mk_univ(s->level, s->cat), s->span);
    case Sk::Kw: {
      std::vector<SPtr> args;
      return desugar_kw(s, args, sc);
    }
  }
  derr(Code::ParseError, s->span, "malformed term");
}

}  // namespace nn
