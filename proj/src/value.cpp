#include "nn/value.hpp"

namespace nn {

Env Env::push(VPtr v) const {
  Env e = *this;
  auto n = std::make_shared<EnvNode>();
  n->v = std::move(v);
  n->next = ts;
  e.ts = n;
  return e;
}

Env Env::push_i(Interval iv) const {
  Env e = *this;
  auto n = std::make_shared<IEnvNode>();
  n->iv = std::move(iv);
  n->next = is;
  e.is = n;
  return e;
}

VPtr Env::lookup(int idx) const {
  const EnvNode* n = ts.get();
  while (n && idx > 0) { n = n->next.get(); --idx; }
  return n ? n->v : nullptr;
}

const Interval* Env::lookup_i(int idx) const {
  const IEnvNode* n = is.get();
  while (n && idx > 0) { n = n->next.get(); --idx; }
  return n ? &n->iv : nullptr;
}

VPtr v_atom(Vk k) { return std::make_shared<Value>(k); }

VPtr v_univ(int level, Cat c) {
  auto v = std::make_shared<Value>(Vk::Univ);
  v->level = level;
  v->cat = c;
  return v;
}

VPtr v_fin(int n) {
  auto v = std::make_shared<Value>(Vk::Fin);
  v->level = n;
  return v;
}

VPtr v_mode(int which) {
  auto v = std::make_shared<Value>(Vk::Mode);
  v->level = which;
  return v;
}

VPtr v_neutral(Head h, std::vector<Elim> spine) {
  auto v = std::make_shared<Value>(Vk::Neutral);
  v->head = std::move(h);
  v->spine = std::move(spine);
  return v;
}

VPtr v_nvar(int lvl) {
  Head h;
  h.k = Head::Lvl;
  h.lvl = lvl;
  return v_neutral(h);
}

VPtr v_npost(const std::string& name) {
  Head h;
  h.k = Head::Post;
  h.name = name;
  return v_neutral(h);
}

static bool head_struct_eq(const Head& x, const Head& y) {
  if (x.k != y.k) return false;
  switch (x.k) {
    case Head::Lvl: return x.lvl == y.lvl;
    case Head::Post: return x.name == y.name;
    case Head::TranspStuck:
      return x.hiv == y.hiv && v_struct_eq(x.h1, y.h1) && v_struct_eq(x.h3, y.h3);
    case Head::UaHead:
      return v_struct_eq(x.h1, y.h1) && v_struct_eq(x.h2, y.h2) &&
             v_struct_eq(x.h3, y.h3);
    case Head::LoopHead: return true;
    case Head::Opaque: return false;
  }
  return false;
}

bool v_struct_eq(const VPtr& x, const VPtr& y) {
  if (x == y) return x != nullptr;
  if (!x || !y) return false;
  if (x->k != y->k) return false;
  switch (x->k) {
    case Vk::Neutral: {
      if (!head_struct_eq(x->head, y->head)) return false;
      if (x->spine.size() != y->spine.size()) return false;
      for (size_t i = 0; i < x->spine.size(); ++i) {
        const Elim& ex = x->spine[i];
        const Elim& ey = y->spine[i];
        if (ex.k != ey.k) return false;
        switch (ex.k) {
          case Elim::App:
          case Elim::EmptyElim:
            if (!v_struct_eq(ex.v, ey.v)) return false;
            break;
          case Elim::PApp:
            if (ex.iv != ey.iv) return false;
            break;
          case Elim::Fst:
          case Elim::Snd:
            break;
        }
      }
      return true;
    }
    case Vk::Univ: return x->level == y->level && x->cat == y->cat;
    case Vk::Fin: return x->level == y->level;
    case Vk::Mode: return x->level == y->level;
    case Vk::Lam:
    case Vk::Pi:
    case Vk::Sigma:
    case Vk::PathLam:
    case Vk::PathT:
      return false;  // closure-carrying values: stay conservative
    default: break;
  }
  // Remaining kinds carry only child values.
  auto cmp = [](const VPtr& p, const VPtr& q) {
    if (!p && !q) return true;
    return v_struct_eq(p, q);
  };
  return cmp(x->a, y->a) && cmp(x->b, y->b) && cmp(x->c, y->c) && cmp(x->d, y->d);
}

}  // namespace nn
