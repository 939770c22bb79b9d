#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nn/eval.hpp"
#include "nn/term.hpp"

namespace nn {

// Builtin keywords appearing as surface atoms.
enum class Bk : uint8_t {
  Abhava, AbhavaHolds, S1, Base, Loop, Fin, Nat, Zero, Suc, Empty, EmptyElim,
  Unit, Star, List, Nil, Cons, Praty,
  Samyoga, Samavaya, Svarupa, Tadatmya, Parampara,
  Transp, Ua, Refl, Sym, Path, PathP
};

struct STerm;
using SPtr = std::shared_ptr<const STerm>;

enum class Sk : uint8_t {
  Name, Num,
  Lam,      // name, kid: body
  PathLam,  // name (interval binder), kid: body
  Pi,       // name ("" = non-dependent), kid: dom, cod
  Sigma,    // name, kid: fst, snd
  App,      // kid: f, a
  PathApp,  // kid: f, r
  Fst, Snd, // kid: t
  Pair,     // kid: a, b
  Meet, Join, Neg,  // interval operations
  Let,      // name, kid: ty, val, body
  Universe, // level, cat
  Kw        // builtin keyword atom
};

struct STerm {
  Sk k;
  Span span;
  std::string name;
  int num = 0;
  int level = 0;
  Cat cat = Cat::None;
  Bk kw = Bk::Abhava;
  std::vector<SPtr> kid;

  explicit STerm(Sk kk) : k(kk) {}
};

struct ModelPred {
  std::string name;
  std::vector<std::string> extent;
  Span span;
};

struct ModelDecl {
  std::string name;
  std::vector<std::string> loci;
  std::vector<ModelPred> preds;
  std::vector<std::pair<std::string, std::vector<std::string>>> inherents;
  std::optional<std::string> paksa;
  std::vector<std::pair<std::string, std::string>> observed_absent;  // (pred, locus)
  Span span;
};

struct Decl {
  enum K {
    Postulate, Def, Check, FailCheck, Model, Example, VyaptiVerdict, ParyaptiCount
  } k = Postulate;
  Span span;
  std::string name;   // postulate/def/example/model name; vyapti: model name
  SPtr type;
  SPtr body;
  std::string expect; // fail-check code or label; verdict outcome
  std::string a1, a2; // vyapti-verdict: hetu, sadhya; paryapti: a1 = locus
  int num = 0;        // paryapti count
  std::string anchor; // example paper anchor
  std::vector<Decl> sub;
  ModelDecl model;
};

struct SourceModule {
  std::string file;
  std::vector<Decl> decls;
};

SourceModule parse_module(const std::string& text, const std::string& filename);

// Structural equality ignoring spans.
bool sterm_eq(const SPtr& a, const SPtr& b);
bool module_eq(const SourceModule& a, const SourceModule& b);

// Deterministic canonical printing; parse(pretty(m)) round-trips.
std::string pretty_sterm(const SPtr& t);
std::string pretty_module(const SourceModule& m);

// Name resolution scope for desugaring.
struct Scope {
  const Kernel* K = nullptr;
  std::vector<std::string> tvars;  // innermost last
  std::vector<std::string> ivars;
};

TPtr desugar_term(const SPtr& s, Scope& sc);
Interval desugar_interval(const SPtr& s, Scope& sc);

}  // namespace nn
