#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nn/eval.hpp"

namespace nn {

struct CtxEntry {
  std::string name;
  VPtr type;
};

// Local checking context: term telescope + interval binders + the identity
// environment matching them. Contexts are values; pushes copy.
struct Context {
  const Kernel* K = nullptr;
  std::vector<CtxEntry> tele;       // indexed by level
  std::vector<std::string> ivars;   // indexed by level
  Env env;

  int tdepth() const { return static_cast<int>(tele.size()); }
  int idepth() const { return static_cast<int>(ivars.size()); }

  Context push(const std::string& name, VPtr ty) const;
  Context push_def(const std::string& name, VPtr ty, VPtr val) const;
  Context push_ivar(const std::string& name) const;

  ConvCtx conv_ctx() const;
};

struct Inferred {
  VPtr type;
  TPtr term;  // elaborated
};

struct TypeResult {
  TPtr term;   // elaborated type expression
  VPtr value;  // the type as a Value
  int level = 0;
  Cat cat = Cat::None;
};

Inferred infer(const Context& ctx, const TPtr& t);
TPtr check(const Context& ctx, const TPtr& t, const VPtr& ty);
TypeResult infer_type(const Context& ctx, const TPtr& t);

bool conv_in(const Context& ctx, const VPtr& v1, const VPtr& v2, const VPtr& ty);

// Quote + print a value for diagnostics, using the context's binder names.
std::string show_value(const Context& ctx, const VPtr& v);

// Sort of a type value, when it can be inferred: (level, tag).
std::optional<std::pair<int, Cat>> sort_of_value(const Context& ctx, const VPtr& v);

}  // namespace nn
