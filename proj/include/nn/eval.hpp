#pragma once

#include <map>
#include <string>
#include <vector>

#include "nn/value.hpp"

namespace nn {

// Reduction rule toggles. All on by default; tests flip individual rules to
// confirm the corpus is sensitive to each one.
struct Rules {
  bool r1 = true;  // path-application of a path-abstraction (interval beta)
  bool r2 = true;  // path value applied at 0/1 yields the stored endpoints
  bool r3 = true;  // transport over a constant family is the identity
  bool r4 = true;  // transport along ua(e) applies the function component
  bool r5 = true;  // doubled Abhava former collapses to its pratiyogin
};

struct GlobalEntry {
  bool is_def = false;  // definitions unfold; postulates stay neutral
  VPtr type;
  VPtr value;      // definitions only
  TPtr type_term;  // elaborated
  TPtr body_term;  // elaborated, definitions only
  int order = 0;   // declaration order, for deterministic printing
};

// One checking session's kernel: fuel accounting, rule toggles, and the
// global table (postulates + definitions). Sessions never share a Kernel.
struct Kernel {
  long long fuel = 10000000;
  mutable long long steps = 0;
  Rules rules;
  std::map<std::string, GlobalEntry> globals;

  void tick() const;
  const GlobalEntry* global(const std::string& n) const {
    auto it = globals.find(n);
    return it == globals.end() ? nullptr : &it->second;
  }
};

VPtr eval(const Kernel& K, const Env& env, const TPtr& t);
Interval eval_interval(const Env& env, const Interval& iv);

VPtr inst(const Kernel& K, const Closure& c, const VPtr& arg);
VPtr inst_i(const Kernel& K, const IClosure& c, const Interval& arg);

VPtr v_app(const Kernel& K, const VPtr& f, const VPtr& x);
VPtr v_fst(const Kernel& K, const VPtr& v);
VPtr v_snd(const Kernel& K, const VPtr& v);
VPtr v_papp(const Kernel& K, const VPtr& v, const Interval& r, VPtr lhs, VPtr rhs);
VPtr v_transp(const Kernel& K, const VPtr& line, const Interval& r, const VPtr& elem);

// Does t mention the interval variable with de Bruijn index idx?
bool term_mentions_ivar(const TPtr& t, int idx);

// Read-back to beta-normal terms. tdepth/idepth are the current binder
// depths of the two namespaces.
TPtr quote(const Kernel& K, int tdepth, int idepth, const VPtr& v);

// Context slice used by conversion for typed spine comparison.
struct ConvCtx {
  int tdepth = 0;
  int idepth = 0;
  std::vector<VPtr> lvl_types;  // type of each term level; entries may be null
};

// Type-directed conversion with eta for Pi, Sigma, Unit, and path types.
// ty may be null, in which case comparison is shape-directed.
bool conv(const Kernel& K, ConvCtx& cc, const VPtr& v1, const VPtr& v2, const VPtr& ty);

// Cumulativity: t1 usable where t2 is expected.
bool subtype(const Kernel& K, ConvCtx& cc, const VPtr& t1, const VPtr& t2);

}  // namespace nn
