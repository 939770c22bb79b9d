#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace nn {

struct Span {
  std::string file;
  int line = 0;   // 1-based; 0 = unknown
  int col = 0;    // 1-based byte column
  int offset = 0; // byte offset into the source
  int len = 0;
};

enum class Code {
  None,
  ParseError,
  UnresolvedName,
  UnboundVariable,
  DuplicateName,
  NotAFunction,
  NotAPair,
  NotAPath,
  CannotInfer,
  TypeMismatch,
  UniverseInconsistency,
  CategorialMismatch,
  FuelExhausted,
  UnknownPredicate,
  UnknownLocus,
  MissingEntry,
};

const char* code_name(Code c);
std::optional<Code> code_from_name(const std::string& s);

// Hetvabhasa classification attached to some failures.
enum class Fallacy { None, Asiddha, Viruddha, Anaikantika, Badhita };

const char* fallacy_name(Fallacy f);
std::optional<Fallacy> fallacy_from_name(const std::string& s);

struct Diagnostic {
  Code code = Code::None;
  Span span;
  std::string message;
  std::string expected;  // printed expected type, when applicable
  std::string actual;    // printed actual type, when applicable
  Fallacy hetvabhasa = Fallacy::None;

  std::string render() const;
};

// Thrown by the checker; caught at declaration boundaries.
struct TypeError : std::runtime_error {
  Diagnostic diag;
  explicit TypeError(Diagnostic d) : std::runtime_error(d.message), diag(std::move(d)) {}
};

struct ParseError : std::runtime_error {
  Diagnostic diag;
  explicit ParseError(Diagnostic d) : std::runtime_error(d.message), diag(std::move(d)) {}
};

[[noreturn]] void fail(Code c, const Span& sp, const std::string& msg);

}  // namespace nn
