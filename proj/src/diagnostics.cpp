#include "nn/diagnostics.hpp"

namespace nn {

const char* code_name(Code c) {
  switch (c) {
    case Code::None: return "None";
    case Code::ParseError: return "ParseError";
    case Code::UnresolvedName: return "UnresolvedName";
    case Code::UnboundVariable: return "UnboundVariable";
    case Code::DuplicateName: return "DuplicateName";
    case Code::NotAFunction: return "NotAFunction";
    case Code::NotAPair: return "NotAPair";
    case Code::NotAPath: return "NotAPath";
    case Code::CannotInfer: return "CannotInfer";
    case Code::TypeMismatch: return "TypeMismatch";
    case Code::UniverseInconsistency: return "UniverseInconsistency";
    case Code::CategorialMismatch: return "CategorialMismatch";
    case Code::FuelExhausted: return "FuelExhausted";
    case Code::UnknownPredicate: return "UnknownPredicate";
    case Code::UnknownLocus: return "UnknownLocus";
    case Code::MissingEntry: return "MissingEntry";
  }
  return "None";
}

std::optional<Code> code_from_name(const std::string& s) {
  static const Code all[] = {
      Code::ParseError,     Code::UnresolvedName, Code::UnboundVariable,
      Code::DuplicateName,  Code::NotAFunction,   Code::NotAPair,
      Code::NotAPath,       Code::CannotInfer,    Code::TypeMismatch,
      Code::UniverseInconsistency, Code::CategorialMismatch,
      Code::FuelExhausted,  Code::UnknownPredicate, Code::UnknownLocus,
      Code::MissingEntry};
  for (Code c : all)
    if (s == code_name(c)) return c;
  return std::nullopt;
}

const char* fallacy_name(Fallacy f) {
  switch (f) {
    case Fallacy::None: return "none";
    case Fallacy::Asiddha: return "asiddha";
    case Fallacy::Viruddha: return "viruddha";
    case Fallacy::Anaikantika: return "anaikantika";
    case Fallacy::Badhita: return "badhita";
  }
  return "none";
}

std::optional<Fallacy> fallacy_from_name(const std::string& s) {
  if (s == "asiddha") return Fallacy::Asiddha;
  if (s == "viruddha") return Fallacy::Viruddha;
  if (s == "anaikantika" || s == "sadharana") return Fallacy::Anaikantika;
  if (s == "badhita") return Fallacy::Badhita;
  return std::nullopt;
}

std::string Diagnostic::render() const {
  std::string out;
  if (!span.file.empty()) {
    out += span.file + ":" + std::to_string(span.line) + ":" +
           std::to_string(span.col) + ": ";
  }
  out += "error[";
  out += code_name(code);
  out += "]: " + message;
  if (!expected.empty()) out += "\n  expected: " + expected;
  if (!actual.empty()) out += "\n  actual:   " + actual;
  if (hetvabhasa != Fallacy::None) {
    out += "\n  hetvabhasa: ";
    out += fallacy_name(hetvabhasa);
  }
  return out;
}

void fail(Code c, const Span& sp, const std::string& msg) {
  Diagnostic d;
  d.code = c;
  d.span = sp;
  d.message = msg;
  throw TypeError(std::move(d));
}

}  // namespace nn
