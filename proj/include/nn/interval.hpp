#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nn {

// A literal of the interval algebra: a generator index plus a polarity bit.
// (v << 1) encodes the variable v, (v << 1) | 1 encodes its involution ~v.
// Literals are independent generators: no complementation law relates v and ~v.
using ILit = uint32_t;

inline ILit ilit(uint32_t v, bool inv) { return (v << 1) | (inv ? 1u : 0u); }
inline uint32_t ilit_var(ILit l) { return l >> 1; }
inline bool ilit_inv(ILit l) { return (l & 1u) != 0; }
inline ILit ilit_flip(ILit l) { return l ^ 1u; }

// One meet-clause: a sorted, duplicate-free set of literals.
struct IClause {
  std::vector<ILit> lits;

  bool subset_of(const IClause& o) const;
  bool operator==(const IClause& o) const { return lits == o.lits; }
  bool operator<(const IClause& o) const;
};

// An element of the free De Morgan algebra over interval variables, kept in
// canonical irredundant disjunctive normal form: an antichain of clauses
// under clause inclusion, sorted. ZERO is the empty join, ONE the join
// containing the empty clause. Two elements are equal in the algebra iff
// their canonical forms are identical.
class Interval {
 public:
  Interval() = default;  // ZERO

  static Interval zero() { return Interval(); }
  static Interval one();
  static Interval var(uint32_t v);
  static Interval inv_var(uint32_t v);

  bool is_zero() const { return cls_.empty(); }
  bool is_one() const { return cls_.size() == 1 && cls_[0].lits.empty(); }

  bool operator==(const Interval& o) const { return cls_ == o.cls_; }
  bool operator!=(const Interval& o) const { return !(*this == o); }
  bool operator<(const Interval& o) const { return cls_ < o.cls_; }

  const std::vector<IClause>& clauses() const { return cls_; }

  // Smallest n such that every generator index is < n.
  uint32_t var_bound() const;

  // Rename generators (used for de Bruijn level/index conversion).
  Interval map_vars(const std::function<uint32_t(uint32_t)>& f) const;

  std::string show(const std::function<std::string(uint32_t)>& name) const;
  std::string show() const;

  // Builds the canonical form: sorts clause literals, drops duplicate and
  // absorbed (superset) clauses, sorts the remaining antichain.
  static Interval make(std::vector<IClause> cs);

 private:
  std::vector<IClause> cls_;
};

Interval imeet(const Interval& a, const Interval& b);
Interval ijoin(const Interval& a, const Interval& b);
Interval ineg(const Interval& a);

// Homomorphic substitution of generators.
Interval isubst(const Interval& a, const std::function<Interval(uint32_t)>& f);

inline bool ieq(const Interval& a, const Interval& b) { return a == b; }

// Raw interval expressions, the input of inorm. Kept simple; the oracle
// tests evaluate these trees directly into finite De Morgan algebras.
struct IExpr {
  enum Kind { Zero, One, Var, Neg, Meet, Join } kind;
  uint32_t v = 0;
  const IExpr* l = nullptr;
  const IExpr* r = nullptr;
};

Interval inorm(const IExpr& e);

}  // namespace nn
