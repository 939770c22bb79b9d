#include "nn/typecheck.hpp"

#include "nn/pretty.hpp"

namespace nn {

Context Context::push(const std::string& name, VPtr ty) const {
  Context c = *this;
  c.env = env.push(v_nvar(tdepth()));
  c.tele.push_back(CtxEntry{name, std::move(ty)});
  return c;
}

Context Context::push_def(const std::string& name, VPtr ty, VPtr val) const {
  Context c = *this;
  c.env = env.push(std::move(val));
  c.tele.push_back(CtxEntry{name, std::move(ty)});
  return c;
}

Context Context::push_ivar(const std::string& name) const {
  Context c = *this;
  c.env = env.push_i(Interval::var(idepth()));
  c.ivars.push_back(name);
  return c;
}

ConvCtx Context::conv_ctx() const {
  ConvCtx cc;
  cc.tdepth = tdepth();
  cc.idepth = idepth();
  cc.lvl_types.reserve(tele.size());
  for (const auto& e : tele) cc.lvl_types.push_back(e.type);
  return cc;
}

bool conv_in(const Context& ctx, const VPtr& v1, const VPtr& v2, const VPtr& ty) {
  ConvCtx cc = ctx.conv_ctx();
  return conv(*ctx.K, cc, v1, v2, ty);
}

std::string show_value(const Context& ctx, const VPtr& v) {
  std::vector<std::string> tn, in;
  for (const auto& e : ctx.tele) tn.push_back(e.name);
  for (const auto& s : ctx.ivars) in.push_back(s);
  return pretty_term(quote(*ctx.K, ctx.tdepth(), ctx.idepth(), v), tn, in);
}

std::optional<std::pair<int, Cat>> sort_of_value(const Context& ctx, const VPtr& v) {
  if (v->k == Vk::Univ) return std::make_pair(v->level + 1, Cat::None);
  try {
    TPtr tq = quote(*ctx.K, ctx.tdepth(), ctx.idepth(), v);
    Inferred i = infer(ctx, tq);
    if (i.type->k == Vk::Univ) return std::make_pair(i.type->level, i.type->cat);
  } catch (const TypeError&) {
  }
  return std::nullopt;
}

static bool term_mentions_var(const TPtr& t, int idx) {
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
    if (term_mentions_var(t->kid[i], idx + bump)) return true;
  }
  return false;
}

// The tag of a type value, when its sort carries one.
static Cat tag_of(const Context& ctx, const VPtr& ty) {
  auto s = sort_of_value(ctx, ty);
  return s ? s->second : Cat::None;
}

[[noreturn]] static void mismatch(const Context& ctx, const Span& sp,
                                  const VPtr& expected, const VPtr& actual,
                                  const std::string& msg) {
  Diagnostic d;
  d.code = Code::TypeMismatch;
  // Thm 4.1 rule: an element of one tagged universe supplied where an
  // element of a differently tagged universe is expected is a categorial
  // error, not a plain mismatch.
  Cat ce = tag_of(ctx, expected);
  Cat ca = tag_of(ctx, actual);
  if (ce != Cat::None && ca != Cat::None && ce != ca) d.code = Code::CategorialMismatch;
  if (expected->k == Vk::Univ && actual->k == Vk::Univ &&
      expected->cat != Cat::None && actual->cat != Cat::None &&
      expected->cat != actual->cat)
    d.code = Code::CategorialMismatch;
  d.span = sp;
  d.message = msg;
  d.expected = show_value(ctx, expected);
  d.actual = show_value(ctx, actual);
  throw TypeError(std::move(d));
}

TypeResult infer_type(const Context& ctx, const TPtr& t) {
  Inferred i = infer(ctx, t);
  if (i.type->k != Vk::Univ) {
    Diagnostic d;
    d.code = Code::UniverseInconsistency;
    d.span = t->span;
    d.message = "expected a type";
    d.actual = show_value(ctx, i.type);
    throw TypeError(std::move(d));
  }
  TypeResult r;
  r.term = i.term;
  r.value = eval(*ctx.K, ctx.env, i.term);
  r.level = i.type->level;
  r.cat = i.type->cat;
  return r;
}

static VPtr fam_at(const Context& ctx, const IClosure& fam, const Interval& r) {
  return inst_i(*ctx.K, fam, r);
}

// Thm 4.1 side condition on path formation: endpoints drawn from universes
// with distinct categorial tags cannot be connected by a path.
static void categorial_gate(const Context& ctx, const TPtr& a, const TPtr& b,
                            const Span& sp) {
  Cat ca = Cat::None, cb = Cat::None;
  try {
    Inferred ia = infer(ctx, a);
    if (ia.type->k == Vk::Univ) ca = ia.type->cat;
  } catch (const TypeError&) { return; }
  try {
    Inferred ib = infer(ctx, b);
    if (ib.type->k == Vk::Univ) cb = ib.type->cat;
  } catch (const TypeError&) { return; }
  if (ca != Cat::None && cb != Cat::None && ca != cb) {
    Diagnostic d;
    d.code = Code::CategorialMismatch;
    d.span = sp;
    d.message = std::string("path formation across categorial universes (") +
                cat_name(ca) + " vs " + cat_name(cb) + ")";
    throw TypeError(std::move(d));
  }
}

static VPtr locus_type(const Context& ctx, const Span& sp) {
  const GlobalEntry* g = ctx.K->global("Locus");
  if (!g)
    fail(Code::UnresolvedName, sp, "Abhava requires the Locus postulate in scope");
  return v_npost("Locus");
}

Inferred infer(const Context& ctx, const TPtr& t) {
  const Kernel& K = *ctx.K;
  K.tick();
  switch (t->k) {
    case Tk::Var: {
      int lvl = ctx.tdepth() - 1 - t->idx;
      if (t->idx < 0 || lvl < 0)
        fail(Code::UnboundVariable, t->span, "unbound variable");
      return {ctx.tele[lvl].type, t};
    }
    case Tk::Post: {
      const GlobalEntry* g = K.global(t->name);
      if (!g) fail(Code::UnresolvedName, t->span, "unknown constant '" + t->name + "'");
      return {g->type, t};
    }
    case Tk::Gdef: {
      const GlobalEntry* g = K.global(t->name);
      if (!g) fail(Code::UnresolvedName, t->span, "unknown definition '" + t->name + "'");
      return {g->type, t};
    }
    case Tk::Let: {
      TypeResult ty = infer_type(ctx, t->kid[0]);
      TPtr val = check(ctx, t->kid[1], ty.value);
      VPtr vv = eval(K, ctx.env, val);
      Context c2 = ctx.push_def(t->name, ty.value, vv);
      Inferred body = infer(c2, t->kid[2]);
      auto e = std::make_shared<Term>(Tk::Let);
      e->span = t->span;
      e->name = t->name;
      e->kid = {ty.term, val, body.term};
      return {body.type, e};
    }
    case Tk::Pi:
    case Tk::Sigma: {
      TypeResult dom = infer_type(ctx, t->kid[0]);
      Context c2 = ctx.push(t->name, dom.value);
      TypeResult cod = infer_type(c2, t->kid[1]);
      auto e = std::make_shared<Term>(t->k);
      e->span = t->span;
      e->name = t->name;
      e->kid = {dom.term, cod.term};
      return {v_univ(std::max(dom.level, cod.level)), e};
    }
    case Tk::Lam:
      fail(Code::CannotInfer, t->span,
           "cannot infer the type of a lambda; annotate the enclosing definition");
    case Tk::App: {
      Inferred f = infer(ctx, t->kid[0]);
      if (f.type->k != Vk::Pi) {
        Diagnostic d;
        d.code = Code::NotAFunction;
        d.span = t->span;
        d.message = "application head is not a function";
        d.actual = show_value(ctx, f.type);
        throw TypeError(std::move(d));
      }
      TPtr arg = check(ctx, t->kid[1], f.type->a);
      VPtr va = eval(K, ctx.env, arg);
      auto e = std::make_shared<Term>(Tk::App);
      e->span = t->span;
      e->kid = {f.term, arg};
      return {inst(K, f.type->clo, va), e};
    }
    case Tk::Pair:
      fail(Code::CannotInfer, t->span, "cannot infer the type of a pair");
    case Tk::Fst: {
      Inferred p = infer(ctx, t->kid[0]);
      if (p.type->k != Vk::Sigma) {
        Diagnostic d;
        d.code = Code::NotAPair;
        d.span = t->span;
        d.message = "projection from a non-pair";
        d.actual = show_value(ctx, p.type);
        throw TypeError(std::move(d));
      }
      auto e = std::make_shared<Term>(Tk::Fst);
      e->span = t->span;
      e->kid = {p.term};
      return {p.type->a, e};
    }
    case Tk::Snd: {
      Inferred p = infer(ctx, t->kid[0]);
      if (p.type->k != Vk::Sigma) {
        Diagnostic d;
        d.code = Code::NotAPair;
        d.span = t->span;
        d.message = "projection from a non-pair";
        d.actual = show_value(ctx, p.type);
        throw TypeError(std::move(d));
      }
      VPtr pv = eval(K, ctx.env, p.term);
      auto e = std::make_shared<Term>(Tk::Snd);
      e->span = t->span;
      e->kid = {p.term};
      return {inst(K, p.type->clo, v_fst(K, pv)), e};
    }
    case Tk::Univ: return {v_univ(t->level + 1), t};
    case Tk::PathT: {
      Context c2 = ctx.push_ivar(t->name.empty() ? "i" : t->name);
      TypeResult fam = infer_type(c2, t->kid[0]);
      IClosure famClo{ctx.env, fam.term, t->name};
      TPtr a = check(ctx, t->kid[1], fam_at(ctx, famClo, Interval::zero()));
      TPtr b = check(ctx, t->kid[2], fam_at(ctx, famClo, Interval::one()));
      categorial_gate(ctx, t->kid[1], t->kid[2], t->span);
      auto e = std::make_shared<Term>(Tk::PathT);
      e->span = t->span;
      e->name = t->name;
      e->kid = {fam.term, a, b};
      return {v_univ(fam.level), e};
    }
    case Tk::PathLam: {
      Context c2 = ctx.push_ivar(t->name.empty() ? "i" : t->name);
      Inferred body = infer(c2, t->kid[0]);
      TPtr famTerm = quote(K, ctx.tdepth(), ctx.idepth() + 1, body.type);
      IClosure famClo{ctx.env, famTerm, t->name};
      auto pt = std::make_shared<Value>(Vk::PathT);
      pt->iclo = famClo;
      pt->a = eval(K, ctx.env.push_i(Interval::zero()), body.term);
      pt->b = eval(K, ctx.env.push_i(Interval::one()), body.term);
      auto e = std::make_shared<Term>(Tk::PathLam);
      e->span = t->span;
      e->name = t->name;
      e->kid = {body.term};
      return {pt, e};
    }
    case Tk::PathApp: {
      Inferred f = infer(ctx, t->kid[0]);
      if (f.type->k != Vk::PathT) {
        Diagnostic d;
        d.code = Code::NotAPath;
        d.span = t->span;
        d.message = "path application of a non-path";
        d.actual = show_value(ctx, f.type);
        throw TypeError(std::move(d));
      }
      Interval r = eval_interval(ctx.env, t->iv);
      auto e = std::make_shared<Term>(Tk::PathApp);
      e->span = t->span;
      e->iv = t->iv;
      e->kid = {f.term, quote(K, ctx.tdepth(), ctx.idepth(), f.type->a),
                quote(K, ctx.tdepth(), ctx.idepth(), f.type->b)};
      return {inst_i(K, f.type->iclo, r), e};
    }
    case Tk::Transp: {
      Inferred line = infer(ctx, t->kid[0]);
      if (line.type->k != Vk::PathT) {
        Diagnostic d;
        d.code = Code::NotAPath;
        d.span = t->span;
        d.message = "transport expects a line of types";
        d.actual = show_value(ctx, line.type);
        throw TypeError(std::move(d));
      }
      VPtr famProbe = inst_i(K, line.type->iclo, Interval::var(ctx.idepth()));
      if (famProbe->k != Vk::Univ)
        fail(Code::UniverseInconsistency, t->span,
             "transport line must live in a universe");
      Interval r = eval_interval(ctx.env, t->iv);
      VPtr lineV = eval(K, ctx.env, line.term);
      VPtr src = v_papp(K, lineV, r, line.type->a, line.type->b);
      TPtr elem = check(ctx, t->kid[1], src);
      auto e = std::make_shared<Term>(Tk::Transp);
      e->span = t->span;
      e->iv = t->iv;
      e->kid = {line.term, elem};
      return {v_papp(K, lineV, Interval::one(), line.type->a, line.type->b), e};
    }
    case Tk::Ua: {
      Inferred eq = infer(ctx, t->kid[2]);
      VPtr w = eq.type;
      if (w->k != Vk::Sigma || !w->a || w->a->k != Vk::Pi)
        mismatch(ctx, t->span, v_npost("Equiv"), w, "ua expects an equivalence");
      VPtr A = w->a->a;
      VPtr Bv = inst(K, w->a->clo, v_nvar(ctx.tdepth()));
      TPtr tB = quote(K, ctx.tdepth() + 1, ctx.idepth(), Bv);
      if (term_mentions_var(tB, 0))
        mismatch(ctx, t->span, v_npost("Equiv"), w,
                 "ua expects a non-dependent equivalence");
      tB = term_shift(tB, -1);
      TPtr tA = quote(K, ctx.tdepth(), ctx.idepth(), A);
      VPtr B = eval(K, ctx.env, tB);
      // When the prelude's Equiv is in scope, insist on the full shape.
      if (const GlobalEntry* g = K.global("Equiv"); g && g->is_def) {
        TPtr app = mk(Tk::App, {mk(Tk::App, {mk_gdef("Equiv"), tA}), tB});
        VPtr expected = eval(K, ctx.env, app);
        if (!conv_in(ctx, w, expected, nullptr))
          mismatch(ctx, t->span, expected, w, "ua expects an equivalence");
      }
      auto sortA = sort_of_value(ctx, A);
      int lvl = sortA ? sortA->first : 0;
      auto e = std::make_shared<Term>(Tk::Ua);
      e->span = t->span;
      e->kid = {tA, tB, eq.term};
      auto pt = std::make_shared<Value>(Vk::PathT);
      pt->iclo = IClosure{Env{}, mk_univ(lvl > 0 ? lvl - 1 : 0), "_"};
      pt->a = A;
      pt->b = B;
      return {pt, e};
    }
    case Tk::Refl:
      fail(Code::CannotInfer, t->span, "bare refl needs an expected path type");
    case Tk::Abhava: {
      TypeResult P = infer_type(ctx, t->kid[0]);
      TPtr L = check(ctx, t->kid[1], locus_type(ctx, t->span));
      TPtr s = check(ctx, t->kid[2], v_atom(Vk::Praty));
      auto e = std::make_shared<Term>(Tk::Abhava);
      e->span = t->span;
      e->kid = {P.term, L, s};
      return {v_univ(P.level), e};
    }
    case Tk::AbhavaHolds: {
      TypeResult P = infer_type(ctx, t->kid[0]);
      TPtr L = check(ctx, t->kid[1], locus_type(ctx, t->span));
      TPtr s = check(ctx, t->kid[2], v_atom(Vk::Praty));
      if (!K.global("RelatesTo"))
        fail(Code::UnresolvedName, t->span,
             "AbhavaHolds requires the RelatesTo postulate in scope");
      VPtr vP = P.value;
      VPtr vL = eval(K, ctx.env, L);
      VPtr vs = eval(K, ctx.env, s);
      // Expected witness type: (p : P) -> RelatesTo P Locus s p L -> Empty.
      Env wenv = Env{}.push(vP).push(vL).push(vs);  // s=0, L=1, P=2 (+1 under p)
      TPtr rel = mk(Tk::App,
                    {mk(Tk::App,
                        {mk(Tk::App,
                            {mk(Tk::App,
                                {mk(Tk::App, {mk_post("RelatesTo"), mk_var(3)}),
                                 mk_post("Locus")}),
                             mk_var(1)}),
                         mk_var(0)}),
                     mk_var(2)});
      TPtr wbody = mk(Tk::Pi, {rel, mk(Tk::EmptyT)});
      auto wty = std::make_shared<Value>(Vk::Pi);
      wty->a = vP;
      wty->clo = Closure{wenv, wbody, "p"};
      TPtr wit = check(ctx, t->kid[3], wty);
      auto e = std::make_shared<Term>(Tk::AbhavaHolds);
      e->span = t->span;
      e->kid = {P.term, L, s, wit};
      TPtr tyterm = mk(Tk::Abhava, {P.term, L, s});
      return {eval(K, ctx.env, tyterm), e};
    }
    case Tk::S1:
    case Tk::NatT:
    case Tk::EmptyT:
    case Tk::UnitT:
    case Tk::PratyT:
    case Tk::FinT: return {v_univ(0), t};
    case Tk::ListT: {
      TypeResult el = infer_type(ctx, t->kid[0]);
      auto e = std::make_shared<Term>(Tk::ListT);
      e->span = t->span;
      e->kid = {el.term};
      return {v_univ(el.level), e};
    }
    case Tk::Base: return {v_atom(Vk::S1), t};
    case Tk::Loop: {
      auto pt = std::make_shared<Value>(Vk::PathT);
      pt->iclo = IClosure{Env{}, mk(Tk::S1), "_"};
      pt->a = v_atom(Vk::Base);
      pt->b = v_atom(Vk::Base);
      return {pt, t};
    }
    case Tk::Zero: return {v_atom(Vk::Nat), t};
    case Tk::Suc: {
      TPtr n = check(ctx, t->kid[0], v_atom(Vk::Nat));
      auto e = std::make_shared<Term>(Tk::Suc);
      e->span = t->span;
      e->kid = {n};
      return {v_atom(Vk::Nat), e};
    }
    case Tk::Star: return {v_atom(Vk::Unit), t};
    case Tk::EmptyElim: {
      TypeResult motive = infer_type(ctx, t->kid[0]);
      TPtr arg = check(ctx, t->kid[1], v_atom(Vk::Empty));
      auto e = std::make_shared<Term>(Tk::EmptyElim);
      e->span = t->span;
      e->kid = {motive.term, arg};
      return {motive.value, e};
    }
    case Tk::MSamyoga:
    case Tk::MSamavaya:
    case Tk::MSvarupa:
    case Tk::MTadatmya: return {v_atom(Vk::Praty), t};
    case Tk::MParampara: {
      auto lty = std::make_shared<Value>(Vk::List);
      lty->a = v_atom(Vk::Praty);
      TPtr arg = check(ctx, t->kid[0], lty);
      auto e = std::make_shared<Term>(Tk::MParampara);
      e->span = t->span;
      e->kid = {arg};
      return {v_atom(Vk::Praty), e};
    }
    case Tk::Nil:
    case Tk::Cons:
      fail(Code::CannotInfer, t->span, "list literals need an expected type");
  }
  fail(Code::CannotInfer, t->span, "cannot infer type");
}

TPtr check(const Context& ctx, const TPtr& t, const VPtr& ty) {
  const Kernel& K = *ctx.K;
  K.tick();
  switch (t->k) {
    case Tk::Lam: {
      if (ty->k != Vk::Pi)
        mismatch(ctx, t->span, ty, v_npost("<function>"),
                 "lambda checked against a non-function type");
      Context c2 = ctx.push(t->name, ty->a);
      VPtr fresh = v_nvar(ctx.tdepth());
      TPtr body = check(c2, t->kid[0], inst(K, ty->clo, fresh));
      auto e = std::make_shared<Term>(Tk::Lam);
      e->span = t->span;
      e->name = t->name;
      e->kid = {body};
      return e;
    }
    case Tk::Pair: {
      if (ty->k != Vk::Sigma)
        mismatch(ctx, t->span, ty, v_npost("<pair>"),
                 "pair checked against a non-pair type");
      TPtr a = check(ctx, t->kid[0], ty->a);
      VPtr va = eval(K, ctx.env, a);
      TPtr b = check(ctx, t->kid[1], inst(K, ty->clo, va));
      auto e = std::make_shared<Term>(Tk::Pair);
      e->span = t->span;
      e->kid = {a, b};
      return e;
    }
    case Tk::PathLam: {
      if (ty->k != Vk::PathT)
        mismatch(ctx, t->span, ty, v_npost("<path>"),
                 "path abstraction checked against a non-path type");
      Context c2 = ctx.push_ivar(t->name.empty() ? "i" : t->name);
      TPtr body = check(c2, t->kid[0], inst_i(K, ty->iclo, Interval::var(ctx.idepth())));
      // Endpoint boundary conditions: body[0] and body[1] must be the
      // stated endpoints, definitionally.
      VPtr at0 = eval(K, ctx.env.push_i(Interval::zero()), body);
      if (!conv_in(ctx, at0, ty->a, inst_i(K, ty->iclo, Interval::zero())))
        mismatch(ctx, t->span, ty->a, at0, "path endpoint mismatch at 0");
      VPtr at1 = eval(K, ctx.env.push_i(Interval::one()), body);
      if (!conv_in(ctx, at1, ty->b, inst_i(K, ty->iclo, Interval::one())))
        mismatch(ctx, t->span, ty->b, at1, "path endpoint mismatch at 1");
      auto e = std::make_shared<Term>(Tk::PathLam);
      e->span = t->span;
      e->name = t->name;
      e->kid = {body};
      return e;
    }
    case Tk::Refl: {
      if (ty->k != Vk::PathT)
        mismatch(ctx, t->span, ty, v_npost("<path>"),
                 "refl checked against a non-path type");
      if (!conv_in(ctx, ty->a, ty->b, inst_i(K, ty->iclo, Interval::zero())))
        mismatch(ctx, t->span, ty->a, ty->b,
                 "refl requires definitionally equal endpoints");
      auto e = std::make_shared<Term>(Tk::PathLam);
      e->span = t->span;
      e->name = "_";
      e->kid = {quote(K, ctx.tdepth(), ctx.idepth() + 1, ty->a)};
      return e;
    }
    case Tk::Nil: {
      if (ty->k != Vk::List)
        mismatch(ctx, t->span, ty, v_npost("<list>"), "nil checked against a non-list");
      return t;
    }
    case Tk::Cons: {
      if (ty->k != Vk::List)
        mismatch(ctx, t->span, ty, v_npost("<list>"), "cons checked against a non-list");
      TPtr hd = check(ctx, t->kid[0], ty->a);
      TPtr tl = check(ctx, t->kid[1], ty);
      auto e = std::make_shared<Term>(Tk::Cons);
      e->span = t->span;
      e->kid = {hd, tl};
      return e;
    }
    case Tk::Let: {
      TypeResult lty = infer_type(ctx, t->kid[0]);
      TPtr val = check(ctx, t->kid[1], lty.value);
      VPtr vv = eval(K, ctx.env, val);
      Context c2 = ctx.push_def(t->name, lty.value, vv);
      TPtr body = check(c2, t->kid[2], ty);
      auto e = std::make_shared<Term>(Tk::Let);
      e->span = t->span;
      e->name = t->name;
      e->kid = {lty.term, val, body};
      return e;
    }
    default: {
      Inferred i = infer(ctx, t);
      ConvCtx cc = ctx.conv_ctx();
      if (!subtype(K, cc, i.type, ty))
        mismatch(ctx, t->span, ty, i.type, "type mismatch");
      return i.term;
    }
  }
}

}  // namespace nn
