#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nn/term.hpp"

namespace nn {

struct Value;
using VPtr = std::shared_ptr<const Value>;

// Persistent environments: one chain per binder namespace. Term variables
// map to Values, interval variables to Intervals over de Bruijn levels.
struct EnvNode {
  VPtr v;
  std::shared_ptr<const EnvNode> next;
};
struct IEnvNode {
  Interval iv;
  std::shared_ptr<const IEnvNode> next;
};

struct Env {
  std::shared_ptr<const EnvNode> ts;
  std::shared_ptr<const IEnvNode> is;

  Env push(VPtr v) const;
  Env push_i(Interval iv) const;
  VPtr lookup(int idx) const;          // nullptr when out of range
  const Interval* lookup_i(int idx) const;
};

// A term closure awaiting one term-variable Value.
struct Closure {
  Env env;
  TPtr body;
  std::string hint;  // binder name hint for read-back
};

// A path closure awaiting one IntervalElem.
struct IClosure {
  Env env;
  TPtr body;
  std::string hint;
};

// Heads of neutral values.
struct Head {
  enum K { Lvl, Post, TranspStuck, UaHead, LoopHead, Opaque } k = Lvl;
  int lvl = 0;            // Lvl
  std::string name;       // Post
  VPtr h1, h2, h3;        // TranspStuck: line, -, elem ; UaHead: A, B, e ; Opaque: h1
  Interval hiv;           // TranspStuck source endpoint
};

struct Elim {
  enum K { App, Fst, Snd, PApp, EmptyElim } k = App;
  VPtr v;                 // App argument / EmptyElim motive
  Interval iv;            // PApp argument
  VPtr lhs, rhs;          // PApp endpoint annotations (may be null)
};

enum class Vk : uint8_t {
  Neutral,
  Lam, Pi, Sigma, Pair,
  Univ,
  PathT, PathLam, Ua,
  Abhava, AbhavaHolds,
  S1, Base,
  Fin, Nat, Zero, Suc,
  Empty, Unit, Star,
  List, Nil, Cons,
  Praty, Mode,      // Mode: which = 0 samyoga, 1 samavaya, 2 svarupa, 3 tadatmya
  Parampara
};

struct Value {
  Vk k;
  int level = 0;        // Univ level / Fin bound / Mode which
  Cat cat = Cat::None;  // Univ tag
  VPtr a, b, c, d;      // generic children (see constructors below)
  Closure clo;          // Lam body / Pi cod / Sigma snd
  IClosure iclo;        // PathLam body / PathT family
  Head head;            // Neutral
  std::vector<Elim> spine;

  explicit Value(Vk kk) : k(kk) {}
};

// Child slot conventions:
//   Pi:    a = dom, clo = cod          Sigma: a = fst, clo = snd
//   Pair:  a, b                        PathT: iclo = fam, a = lhs, b = rhs
//   Ua:    a = A, b = B, c = e         Abhava: a = P, b = L, c = s
//   AbhavaHolds: a,b,c,d = P,L,s,w     Suc: a    List: a    Cons: a = hd, b = tl
//   Parampara: a = list argument

VPtr v_atom(Vk k);
VPtr v_univ(int level, Cat c = Cat::None);
VPtr v_fin(int n);
VPtr v_mode(int which);
VPtr v_neutral(Head h, std::vector<Elim> spine = {});
VPtr v_nvar(int lvl);
VPtr v_npost(const std::string& name);

// Conservative structural equality on values: used only by the doubled
// Abhava reduction. Closures never compare equal.
bool v_struct_eq(const VPtr& x, const VPtr& y);

}  // namespace nn
