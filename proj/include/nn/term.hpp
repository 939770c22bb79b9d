#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nn/diagnostics.hpp"
#include "nn/interval.hpp"

namespace nn {

// Categorial tag carried by universes. Levels are fixed:
// dravya/guna/karman/visesa live at level 1, samanya/samavaya/abhava at 2.
enum class Cat : uint8_t {
  None, Dravya, Guna, Karman, Samanya, Visesa, Samavaya, AbhavaCat
};

int cat_level(Cat c);
const char* cat_name(Cat c);  // surface spelling (ASCII)

// Core term syntax after desugaring. Nameless: term variables and interval
// variables are de Bruijn indices in separate binder namespaces.
enum class Tk : uint8_t {
  Var,       // idx
  Post,      // name (postulated constant, opaque)
  Gdef,      // name (global definition, unfolds)
  Let,       // kid: ty, val, body(+1 term binder); name hint
  Pi,        // kid: dom, cod(+1); name
  Lam,       // kid: body(+1); name
  App,       // kid: fn, arg
  Sigma,     // kid: fst, snd(+1); name
  Pair,      // kid: a, b
  Fst, Snd,  // kid: t
  Univ,      // level, cat
  PathT,     // kid: fam(+1 interval binder), lhs, rhs; name = ivar hint
  PathLam,   // kid: body(+1 ivar); name
  PathApp,   // kid: fn, [lhs, rhs] endpoint annotations (may be null); iv
  Transp,    // kid: line, elem; iv = source endpoint
  Ua,        // kid: A, B, e  (A and B filled in by elaboration; may be null)
  Refl,      // bare refl, check-only
  Abhava,      // kid: P, L, s
  AbhavaHolds, // kid: P, L, s, w
  S1, Base, Loop,
  FinT,      // level = numeral bound
  NatT, Zero, Suc,   // Suc kid: t
  EmptyT,
  EmptyElim, // kid: motive, arg
  UnitT, Star,
  ListT,     // kid: elem type
  Nil,       // check-only
  Cons,      // kid: hd, tl
  PratyT,    // the Pratyasatti type
  MSamyoga, MSamavaya, MSvarupa, MTadatmya,
  MParampara // kid: List Pratyasatti argument
};

struct Term;
using TPtr = std::shared_ptr<const Term>;

struct Term {
  Tk k;
  Span span;
  std::string name;        // global name or binder name hint
  int idx = 0;             // Var index
  int level = 0;           // Univ level / Fin bound
  Cat cat = Cat::None;     // Univ tag
  Interval iv;             // PathApp / Transp interval argument
  std::vector<TPtr> kid;

  explicit Term(Tk kk) : k(kk) {}
};

TPtr mk(Tk k, std::vector<TPtr> kids = {});
TPtr mk_var(int idx);
TPtr mk_post(const std::string& name);
TPtr mk_gdef(const std::string& name);
TPtr mk_univ(int level, Cat c = Cat::None);
TPtr mk_fin(int n);

// Structural equality up to spans and name hints.
bool term_eq(const TPtr& a, const TPtr& b);

// Shift free term-variable indices >= cutoff by d. Interval indices are
// untouched (separate namespace).
TPtr term_shift(const TPtr& t, int d, int cutoff = 0);

}  // namespace nn
