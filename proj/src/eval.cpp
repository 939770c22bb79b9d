#include "nn/eval.hpp"

namespace nn {

void Kernel::tick() const {
  if (++steps > fuel) {
    Diagnostic d;
    d.code = Code::FuelExhausted;
    d.message = "evaluation fuel exhausted (" + std::to_string(fuel) + " steps)";
    throw TypeError(std::move(d));
  }
}

Interval eval_interval(const Env& env, const Interval& iv) {
  return isubst(iv, [&](uint32_t v) {
    const Interval* r = env.lookup_i(static_cast<int>(v));
    if (!r) {
      Diagnostic d;
      d.code = Code::UnboundVariable;
      d.message = "unbound interval variable";
      throw TypeError(std::move(d));
    }
    return *r;
  });
}

VPtr inst(const Kernel& K, const Closure& c, const VPtr& arg) {
  return eval(K, c.env.push(arg), c.body);
}

VPtr inst_i(const Kernel& K, const IClosure& c, const Interval& arg) {
  return eval(K, c.env.push_i(arg), c.body);
}

static VPtr opaque_neutral(VPtr v, std::vector<Elim> spine = {}) {
  Head h;
  h.k = Head::Opaque;
  h.h1 = std::move(v);
  return v_neutral(std::move(h), std::move(spine));
}

static VPtr spine_push(const VPtr& n, Elim e) {
  auto v = std::make_shared<Value>(*n);
  v->spine.push_back(std::move(e));
  return v;
}

VPtr v_app(const Kernel& K, const VPtr& f, const VPtr& x) {
  K.tick();
  if (f->k == Vk::Lam) return inst(K, f->clo, x);
  Elim e;
  e.k = Elim::App;
  e.v = x;
  if (f->k == Vk::Neutral) return spine_push(f, std::move(e));
  return opaque_neutral(f, {std::move(e)});
}

VPtr v_fst(const Kernel& K, const VPtr& v) {
  K.tick();
  if (v->k == Vk::Pair) return v->a;
  Elim e;
  e.k = Elim::Fst;
  if (v->k == Vk::Neutral) return spine_push(v, std::move(e));
  return opaque_neutral(v, {std::move(e)});
}

VPtr v_snd(const Kernel& K, const VPtr& v) {
  K.tick();
  if (v->k == Vk::Pair) return v->b;
  Elim e;
  e.k = Elim::Snd;
  if (v->k == Vk::Neutral) return spine_push(v, std::move(e));
  return opaque_neutral(v, {std::move(e)});
}

VPtr v_papp(const Kernel& K, const VPtr& v, const Interval& r, VPtr lhs, VPtr rhs) {
  K.tick();
  if (v->k == Vk::PathLam && K.rules.r1) return inst_i(K, v->iclo, r);
  if (v->k == Vk::Ua) {
    // ua of the literal identity equivalence behaves as refl.
    if (v->level == 1 && v->a) return v->a;
    if (K.rules.r2) {
      if (r.is_zero() && v->a) return v->a;
      if (r.is_one() && v->b) return v->b;
    }
    Head h;
    h.k = Head::UaHead;
    h.h1 = v->a;
    h.h2 = v->b;
    h.h3 = v->c;
    Elim e;
    e.k = Elim::PApp;
    e.iv = r;
    e.lhs = v->a;
    e.rhs = v->b;
    return v_neutral(std::move(h), {std::move(e)});
  }
  if (v->k == Vk::Neutral) {
    if (K.rules.r2) {
      if (r.is_zero() && lhs) return lhs;
      if (r.is_one() && rhs) return rhs;
    }
    Elim e;
    e.k = Elim::PApp;
    e.iv = r;
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    return spine_push(v, std::move(e));
  }
  Elim e;
  e.k = Elim::PApp;
  e.iv = r;
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  return opaque_neutral(v, {std::move(e)});
}

bool term_mentions_ivar(const TPtr& t, int idx) {
  if (!t) return false;
  if ((t->k == Tk::PathApp || t->k == Tk::Transp)) {
    for (const auto& c : t->iv.clauses())
      for (ILit l : c.lits)
        if (static_cast<int>(ilit_var(l)) == idx) return true;
  }
  for (size_t i = 0; i < t->kid.size(); ++i) {
    int bump = 0;
    if ((t->k == Tk::PathLam && i == 0) || (t->k == Tk::PathT && i == 0)) bump = 1;
    if (term_mentions_ivar(t->kid[i], idx + bump)) return true;
  }
  return false;
}

VPtr v_transp(const Kernel& K, const VPtr& line, const Interval& r, const VPtr& elem) {
  K.tick();
  if (line->k == Vk::PathLam && K.rules.r3 && !term_mentions_ivar(line->iclo.body, 0))
    return elem;
  if (line->k == Vk::Ua && K.rules.r4 && r.is_zero())
    return v_app(K, v_fst(K, line->c), elem);
  Head h;
  h.k = Head::TranspStuck;
  h.h1 = line;
  h.hiv = r;
  h.h3 = elem;
  return v_neutral(std::move(h));
}

// Recognizes the literal identity function as an equivalence's forward map.
static bool is_identity_equiv(const VPtr& e) {
  if (e->k != Vk::Pair || !e->a) return false;
  const VPtr& f = e->a;
  return f->k == Vk::Lam && f->clo.body && f->clo.body->k == Tk::Var &&
         f->clo.body->idx == 0;
}

VPtr eval(const Kernel& K, const Env& env, const TPtr& t) {
  K.tick();
  switch (t->k) {
    case Tk::Var: {
      VPtr v = env.lookup(t->idx);
      if (!v) {
        Diagnostic d;
        d.code = Code::UnboundVariable;
        d.span = t->span;
        d.message = "unbound variable during evaluation";
        throw TypeError(std::move(d));
      }
      return v;
    }
    case Tk::Post: return v_npost(t->name);
    case Tk::Gdef: {
      const GlobalEntry* g = K.global(t->name);
      if (!g || !g->is_def) {
        Diagnostic d;
        d.code = Code::UnresolvedName;
        d.span = t->span;
        d.message = "undefined global '" + t->name + "'";
        throw TypeError(std::move(d));
      }
      return g->value;
    }
    case Tk::Let: {
      VPtr v = eval(K, env, t->kid[1]);
      return eval(K, env.push(v), t->kid[2]);
    }
    case Tk::Pi: {
      auto v = std::make_shared<Value>(Vk::Pi);
      v->a = eval(K, env, t->kid[0]);
      v->clo = Closure{env, t->kid[1], t->name};
      return v;
    }
    case Tk::Lam: {
      auto v = std::make_shared<Value>(Vk::Lam);
      v->clo = Closure{env, t->kid[0], t->name};
      return v;
    }
    case Tk::App:
      return v_app(K, eval(K, env, t->kid[0]), eval(K, env, t->kid[1]));
    case Tk::Sigma: {
      auto v = std::make_shared<Value>(Vk::Sigma);
      v->a = eval(K, env, t->kid[0]);
      v->clo = Closure{env, t->kid[1], t->name};
      return v;
    }
    case Tk::Pair: {
      auto v = std::make_shared<Value>(Vk::Pair);
      v->a = eval(K, env, t->kid[0]);
      v->b = eval(K, env, t->kid[1]);
      return v;
    }
    case Tk::Fst: return v_fst(K, eval(K, env, t->kid[0]));
    case Tk::Snd: return v_snd(K, eval(K, env, t->kid[0]));
    case Tk::Univ: return v_univ(t->level, t->cat);
    case Tk::PathT: {
      auto v = std::make_shared<Value>(Vk::PathT);
      v->iclo = IClosure{env, t->kid[0], t->name};
      v->a = eval(K, env, t->kid[1]);
      v->b = eval(K, env, t->kid[2]);
      return v;
    }
    case Tk::PathLam: {
      auto v = std::make_shared<Value>(Vk::PathLam);
      v->iclo = IClosure{env, t->kid[0], t->name};
      return v;
    }
    case Tk::PathApp: {
      Interval r = eval_interval(env, t->iv);
      VPtr lhs = t->kid.size() > 1 && t->kid[1] ? eval(K, env, t->kid[1]) : nullptr;
      VPtr rhs = t->kid.size() > 2 && t->kid[2] ? eval(K, env, t->kid[2]) : nullptr;
      return v_papp(K, eval(K, env, t->kid[0]), r, lhs, rhs);
    }
    case Tk::Transp: {
      Interval r = eval_interval(env, t->iv);
      return v_transp(K, eval(K, env, t->kid[0]), r, eval(K, env, t->kid[1]));
    }
    case Tk::Ua: {
      auto v = std::make_shared<Value>(Vk::Ua);
      v->a = t->kid[0] ? eval(K, env, t->kid[0]) : nullptr;
      v->b = t->kid[1] ? eval(K, env, t->kid[1]) : nullptr;
      v->c = eval(K, env, t->kid[2]);
      if (K.rules.r4 && v->a && is_identity_equiv(v->c)) v->level = 1;
      return v;
    }
    case Tk::Refl:
      // Bare refl only survives elaboration failure; keep it opaque.
      return opaque_neutral(v_atom(Vk::Star));
    case Tk::Abhava: {
      VPtr p = eval(K, env, t->kid[0]);
      VPtr l = eval(K, env, t->kid[1]);
      VPtr s = eval(K, env, t->kid[2]);
      if (K.rules.r5 && p->k == Vk::Abhava && v_struct_eq(p->b, l) &&
          v_struct_eq(p->c, s)) {
        K.tick();
        return p->a;
      }
      auto v = std::make_shared<Value>(Vk::Abhava);
      v->a = p; v->b = l; v->c = s;
      return v;
    }
    case Tk::AbhavaHolds: {
      auto v = std::make_shared<Value>(Vk::AbhavaHolds);
      v->a = eval(K, env, t->kid[0]);
      v->b = eval(K, env, t->kid[1]);
      v->c = eval(K, env, t->kid[2]);
      v->d = eval(K, env, t->kid[3]);
      return v;
    }
    case Tk::S1: return v_atom(Vk::S1);
    case Tk::Base: return v_atom(Vk::Base);
    case Tk::Loop: {
      Head h;
      h.k = Head::LoopHead;
      return v_neutral(std::move(h));
    }
    case Tk::FinT: return v_fin(t->level);
    case Tk::NatT: return v_atom(Vk::Nat);
    case Tk::Zero: return v_atom(Vk::Zero);
    case Tk::Suc: {
      auto v = std::make_shared<Value>(Vk::Suc);
      v->a = eval(K, env, t->kid[0]);
      return v;
    }
    case Tk::EmptyT: return v_atom(Vk::Empty);
    case Tk::EmptyElim: {
      VPtr motive = eval(K, env, t->kid[0]);
      VPtr arg = eval(K, env, t->kid[1]);
      Elim e;
      e.k = Elim::EmptyElim;
      e.v = motive;
      if (arg->k == Vk::Neutral) return spine_push(arg, std::move(e));
      return opaque_neutral(arg, {std::move(e)});
    }
    case Tk::UnitT: return v_atom(Vk::Unit);
    case Tk::Star: return v_atom(Vk::Star);
    case Tk::ListT: {
      auto v = std::make_shared<Value>(Vk::List);
      v->a = eval(K, env, t->kid[0]);
      return v;
    }
    case Tk::Nil: return v_atom(Vk::Nil);
    case Tk::Cons: {
      auto v = std::make_shared<Value>(Vk::Cons);
      v->a = eval(K, env, t->kid[0]);
      v->b = eval(K, env, t->kid[1]);
      return v;
    }
    case Tk::PratyT: return v_atom(Vk::Praty);
    case Tk::MSamyoga: return v_mode(0);
    case Tk::MSamavaya: return v_mode(1);
    case Tk::MSvarupa: return v_mode(2);
    case Tk::MTadatmya: return v_mode(3);
    case Tk::MParampara: {
      auto v = std::make_shared<Value>(Vk::Parampara);
      v->a = eval(K, env, t->kid[0]);
      return v;
    }
  }
  return opaque_neutral(v_atom(Vk::Star));
}

// ---------------------------------------------------------------- quote --

static Interval lvl_to_idx(const Interval& iv, int idepth) {
  return iv.map_vars([idepth](uint32_t v) {
    return static_cast<uint32_t>(idepth - 1 - static_cast<int>(v));
  });
}

TPtr quote(const Kernel& K, int td, int id, const VPtr& v) {
  K.tick();
  switch (v->k) {
    case Vk::Neutral: {
      TPtr acc;
      switch (v->head.k) {
        case Head::Lvl: acc = mk_var(td - 1 - v->head.lvl); break;
        case Head::Post: acc = mk_post(v->head.name); break;
        case Head::TranspStuck: {
          auto t = std::make_shared<Term>(Tk::Transp);
          t->iv = lvl_to_idx(v->head.hiv, id);
          t->kid = {quote(K, td, id, v->head.h1), quote(K, td, id, v->head.h3)};
          acc = t;
          break;
        }
        case Head::UaHead: {
          auto t = std::make_shared<Term>(Tk::Ua);
          t->kid = {v->head.h1 ? quote(K, td, id, v->head.h1) : nullptr,
                    v->head.h2 ? quote(K, td, id, v->head.h2) : nullptr,
                    quote(K, td, id, v->head.h3)};
          acc = t;
          break;
        }
        case Head::LoopHead: acc = mk(Tk::Loop); break;
        case Head::Opaque: acc = quote(K, td, id, v->head.h1); break;
      }
      for (const Elim& e : v->spine) {
        switch (e.k) {
          case Elim::App: acc = mk(Tk::App, {acc, quote(K, td, id, e.v)}); break;
          case Elim::Fst: acc = mk(Tk::Fst, {acc}); break;
          case Elim::Snd: acc = mk(Tk::Snd, {acc}); break;
          case Elim::PApp: {
            auto t = std::make_shared<Term>(Tk::PathApp);
            t->iv = lvl_to_idx(e.iv, id);
            t->kid = {acc, e.lhs ? quote(K, td, id, e.lhs) : nullptr,
                      e.rhs ? quote(K, td, id, e.rhs) : nullptr};
            acc = t;
            break;
          }
          case Elim::EmptyElim:
            acc = mk(Tk::EmptyElim, {quote(K, td, id, e.v), acc});
            break;
        }
      }
      return acc;
    }
    case Vk::Lam: {
      auto t = std::make_shared<Term>(Tk::Lam);
      t->name = v->clo.hint;
      t->kid = {quote(K, td + 1, id, inst(K, v->clo, v_nvar(td)))};
      return t;
    }
    case Vk::Pi: {
      auto t = std::make_shared<Term>(Tk::Pi);
      t->name = v->clo.hint;
      t->kid = {quote(K, td, id, v->a),
                quote(K, td + 1, id, inst(K, v->clo, v_nvar(td)))};
      return t;
    }
    case Vk::Sigma: {
      auto t = std::make_shared<Term>(Tk::Sigma);
      t->name = v->clo.hint;
      t->kid = {quote(K, td, id, v->a),
                quote(K, td + 1, id, inst(K, v->clo, v_nvar(td)))};
      return t;
    }
    case Vk::Pair:
      return mk(Tk::Pair, {quote(K, td, id, v->a), quote(K, td, id, v->b)});
    case Vk::Univ: return mk_univ(v->level, v->cat);
    case Vk::PathT: {
      auto t = std::make_shared<Term>(Tk::PathT);
      t->name = v->iclo.hint;
      t->kid = {quote(K, td, id + 1, inst_i(K, v->iclo, Interval::var(id))),
                quote(K, td, id, v->a), quote(K, td, id, v->b)};
      return t;
    }
    case Vk::PathLam: {
      auto t = std::make_shared<Term>(Tk::PathLam);
      t->name = v->iclo.hint;
      t->kid = {quote(K, td, id + 1, inst_i(K, v->iclo, Interval::var(id)))};
      return t;
    }
    case Vk::Ua: {
      auto t = std::make_shared<Term>(Tk::Ua);
      t->kid = {v->a ? quote(K, td, id, v->a) : nullptr,
                v->b ? quote(K, td, id, v->b) : nullptr, quote(K, td, id, v->c)};
      return t;
    }
    case Vk::Abhava:
      return mk(Tk::Abhava, {quote(K, td, id, v->a), quote(K, td, id, v->b),
                             quote(K, td, id, v->c)});
    case Vk::AbhavaHolds:
      return mk(Tk::AbhavaHolds,
                {quote(K, td, id, v->a), quote(K, td, id, v->b),
                 quote(K, td, id, v->c), quote(K, td, id, v->d)});
    case Vk::S1: return mk(Tk::S1);
    case Vk::Base: return mk(Tk::Base);
    case Vk::Fin: return mk_fin(v->level);
    case Vk::Nat: return mk(Tk::NatT);
    case Vk::Zero: return mk(Tk::Zero);
    case Vk::Suc: return mk(Tk::Suc, {quote(K, td, id, v->a)});
    case Vk::Empty: return mk(Tk::EmptyT);
    case Vk::Unit: return mk(Tk::UnitT);
    case Vk::Star: return mk(Tk::Star);
    case Vk::List: return mk(Tk::ListT, {quote(K, td, id, v->a)});
    case Vk::Nil: return mk(Tk::Nil);
    case Vk::Cons:
      return mk(Tk::Cons, {quote(K, td, id, v->a), quote(K, td, id, v->b)});
    case Vk::Praty: return mk(Tk::PratyT);
    case Vk::Mode:
      switch (v->level) {
        case 0: return mk(Tk::MSamyoga);
        case 1: return mk(Tk::MSamavaya);
        case 2: return mk(Tk::MSvarupa);
        default: return mk(Tk::MTadatmya);
      }
    case Vk::Parampara: return mk(Tk::MParampara, {quote(K, td, id, v->a)});
  }
  return mk(Tk::Star);
}

// ----------------------------------------------------------------- conv --

static bool conv_at(const Kernel& K, ConvCtx& cc, const VPtr& v1, const VPtr& v2,
                    const VPtr& ty);

static bool is_pathish(const VPtr& v) {
  return v->k == Vk::PathLam || v->k == Vk::Ua;
}

// Typed spine comparison: walks both spines refining the head's type when
// it is known, so arguments are compared type-directed where possible.
static bool conv_neutral(const Kernel& K, ConvCtx& cc, const VPtr& n1, const VPtr& n2) {
  const Head& h1 = n1->head;
  const Head& h2 = n2->head;
  if (h1.k != h2.k) return false;
  VPtr hty;  // type of the neutral built so far, when known
  switch (h1.k) {
    case Head::Lvl:
      if (h1.lvl != h2.lvl) return false;
      if (h1.lvl >= 0 && h1.lvl < static_cast<int>(cc.lvl_types.size()))
        hty = cc.lvl_types[h1.lvl];
      break;
    case Head::Post: {
      if (h1.name != h2.name) return false;
      const GlobalEntry* g = K.global(h1.name);
      if (g) hty = g->type;
      break;
    }
    case Head::TranspStuck:
      if (h1.hiv != h2.hiv) return false;
      if (!conv_at(K, cc, h1.h1, h2.h1, nullptr)) return false;
      if (!conv_at(K, cc, h1.h3, h2.h3, nullptr)) return false;
      break;
    case Head::UaHead:
      if (!conv_at(K, cc, h1.h3, h2.h3, nullptr)) return false;
      break;
    case Head::LoopHead: break;
    case Head::Opaque: return false;
  }
  if (n1->spine.size() != n2->spine.size()) return false;
  // Partial value for Snd's dependent type refinement.
  for (size_t i = 0; i < n1->spine.size(); ++i) {
    const Elim& e1 = n1->spine[i];
    const Elim& e2 = n2->spine[i];
    if (e1.k != e2.k) return false;
    switch (e1.k) {
      case Elim::App: {
        VPtr dom, codv;
        if (hty && hty->k == Vk::Pi) {
          dom = hty->a;
          codv = inst(K, hty->clo, e1.v);
        }
        if (!conv_at(K, cc, e1.v, e2.v, dom)) return false;
        hty = codv;
        break;
      }
      case Elim::Fst:
        hty = (hty && hty->k == Vk::Sigma) ? hty->a : nullptr;
        break;
      case Elim::Snd: {
        if (hty && hty->k == Vk::Sigma) {
          auto part = std::make_shared<Value>(*n1);
          part->spine.assign(n1->spine.begin(), n1->spine.begin() + i);
          hty = inst(K, hty->clo, v_fst(K, part));
        } else {
          hty = nullptr;
        }
        break;
      }
      case Elim::PApp: {
        if (e1.iv != e2.iv) return false;
        hty = (hty && hty->k == Vk::PathT) ? inst_i(K, hty->iclo, e1.iv) : nullptr;
        break;
      }
      case Elim::EmptyElim:
        if (!conv_at(K, cc, e1.v, e2.v, nullptr)) return false;
        hty = e1.v;
        break;
    }
  }
  return true;
}

static bool conv_at(const Kernel& K, ConvCtx& cc, const VPtr& v1, const VPtr& v2,
                    const VPtr& ty) {
  K.tick();
  if (v1 == v2 && v1) return true;
  if (!v1 || !v2) return false;

  if (ty) {
    switch (ty->k) {
      case Vk::Unit: return true;  // eta for Unit
      case Vk::Pi: {
        VPtr fresh = v_nvar(cc.tdepth);
        cc.tdepth++;
        cc.lvl_types.push_back(ty->a);
        bool r = conv_at(K, cc, v_app(K, v1, fresh), v_app(K, v2, fresh),
                         inst(K, ty->clo, fresh));
        cc.lvl_types.pop_back();
        cc.tdepth--;
        return r;
      }
      case Vk::Sigma: {
        VPtr f1 = v_fst(K, v1);
        VPtr f2 = v_fst(K, v2);
        if (!conv_at(K, cc, f1, f2, ty->a)) return false;
        return conv_at(K, cc, v_snd(K, v1), v_snd(K, v2), inst(K, ty->clo, f1));
      }
      case Vk::PathT: {
        Interval gen = Interval::var(cc.idepth);
        cc.idepth++;
        bool r = conv_at(K, cc, v_papp(K, v1, gen, ty->a, ty->b),
                         v_papp(K, v2, gen, ty->a, ty->b), inst_i(K, ty->iclo, gen));
        cc.idepth--;
        return r;
      }
      default: break;
    }
  }

  // Shape-directed. Eta cases first so closures meet neutrals correctly.
  if (v1->k == Vk::Lam || v2->k == Vk::Lam) {
    VPtr fresh = v_nvar(cc.tdepth);
    cc.tdepth++;
    cc.lvl_types.push_back(nullptr);
    bool r = conv_at(K, cc, v_app(K, v1, fresh), v_app(K, v2, fresh), nullptr);
    cc.lvl_types.pop_back();
    cc.tdepth--;
    return r;
  }
  if (v1->k == Vk::Pair || v2->k == Vk::Pair) {
    return conv_at(K, cc, v_fst(K, v1), v_fst(K, v2), nullptr) &&
           conv_at(K, cc, v_snd(K, v1), v_snd(K, v2), nullptr);
  }
  if (is_pathish(v1) || is_pathish(v2)) {
    Interval gen = Interval::var(cc.idepth);
    VPtr lhs = v1->k == Vk::Ua ? v1->a : (v2->k == Vk::Ua ? v2->a : nullptr);
    VPtr rhs = v1->k == Vk::Ua ? v1->b : (v2->k == Vk::Ua ? v2->b : nullptr);
    cc.idepth++;
    bool r = conv_at(K, cc, v_papp(K, v1, gen, lhs, rhs),
                     v_papp(K, v2, gen, lhs, rhs), nullptr);
    cc.idepth--;
    return r;
  }

  if (v1->k != v2->k) return false;
  switch (v1->k) {
    case Vk::Neutral: return conv_neutral(K, cc, v1, v2);
    case Vk::Univ: return v1->level == v2->level && v1->cat == v2->cat;
    case Vk::Pi:
    case Vk::Sigma: {
      if (!conv_at(K, cc, v1->a, v2->a, nullptr)) return false;
      VPtr fresh = v_nvar(cc.tdepth);
      cc.tdepth++;
      cc.lvl_types.push_back(v1->a);
      bool r = conv_at(K, cc, inst(K, v1->clo, fresh), inst(K, v2->clo, fresh), nullptr);
      cc.lvl_types.pop_back();
      cc.tdepth--;
      return r;
    }
    case Vk::PathT: {
      Interval gen = Interval::var(cc.idepth);
      cc.idepth++;
      bool famok =
          conv_at(K, cc, inst_i(K, v1->iclo, gen), inst_i(K, v2->iclo, gen), nullptr);
      cc.idepth--;
      if (!famok) return false;
      VPtr at0 = inst_i(K, v1->iclo, Interval::zero());
      VPtr at1 = inst_i(K, v1->iclo, Interval::one());
      return conv_at(K, cc, v1->a, v2->a, at0) && conv_at(K, cc, v1->b, v2->b, at1);
    }
    case Vk::Abhava:
      return conv_at(K, cc, v1->a, v2->a, nullptr) &&
             conv_at(K, cc, v1->b, v2->b, nullptr) &&
             conv_at(K, cc, v1->c, v2->c, nullptr);
    case Vk::AbhavaHolds:
      return conv_at(K, cc, v1->a, v2->a, nullptr) &&
             conv_at(K, cc, v1->b, v2->b, nullptr) &&
             conv_at(K, cc, v1->c, v2->c, nullptr) &&
             conv_at(K, cc, v1->d, v2->d, nullptr);
    case Vk::Fin: return v1->level == v2->level;
    case Vk::Mode: return v1->level == v2->level;
    case Vk::Suc:
    case Vk::List:
    case Vk::Parampara: return conv_at(K, cc, v1->a, v2->a, nullptr);
    case Vk::Cons:
      return conv_at(K, cc, v1->a, v2->a, nullptr) &&
             conv_at(K, cc, v1->b, v2->b, nullptr);
    case Vk::S1:
    case Vk::Base:
    case Vk::Nat:
    case Vk::Zero:
    case Vk::Empty:
    case Vk::Unit:
    case Vk::Star:
    case Vk::Nil:
    case Vk::Praty: return true;
    case Vk::Lam:
    case Vk::Pair:
    case Vk::PathLam:
    case Vk::Ua: return false;  // unreachable: handled by eta above
  }
  return false;
}

bool conv(const Kernel& K, ConvCtx& cc, const VPtr& v1, const VPtr& v2, const VPtr& ty) {
  return conv_at(K, cc, v1, v2, ty);
}

bool subtype(const Kernel& K, ConvCtx& cc, const VPtr& t1, const VPtr& t2) {
  K.tick();
  if (t1->k == Vk::Univ && t2->k == Vk::Univ) {
    if (t1->level > t2->level) return false;
    return t1->cat == t2->cat || t2->cat == Cat::None;
  }
  if (t1->k == Vk::Pi && t2->k == Vk::Pi) {
    if (!conv_at(K, cc, t1->a, t2->a, nullptr)) return false;
    VPtr fresh = v_nvar(cc.tdepth);
    cc.tdepth++;
    cc.lvl_types.push_back(t1->a);
    bool r = subtype(K, cc, inst(K, t1->clo, fresh), inst(K, t2->clo, fresh));
    cc.lvl_types.pop_back();
    cc.tdepth--;
    return r;
  }
  if (t1->k == Vk::Sigma && t2->k == Vk::Sigma) {
    if (!subtype(K, cc, t1->a, t2->a)) return false;
    VPtr fresh = v_nvar(cc.tdepth);
    cc.tdepth++;
    cc.lvl_types.push_back(t1->a);
    bool r = subtype(K, cc, inst(K, t1->clo, fresh), inst(K, t2->clo, fresh));
    cc.lvl_types.pop_back();
    cc.tdepth--;
    return r;
  }
  return conv_at(K, cc, t1, t2, nullptr);
}

}  // namespace nn
