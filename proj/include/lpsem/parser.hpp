#pragma once

#include <string>
#include <string_view>

#include "lpsem/core.hpp"

namespace lpsem {

/// 1-based position of an offending token.
struct SourceSpan {
  int line = 1;
  int col = 1;
  int length = 1;
  bool operator==(const SourceSpan&) const = default;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, SourceSpan span) : Error(msg), span(span) {}
  SourceSpan span;
};

/// Parses the text program format:
///   program := (rule | comment)*
///   rule    := atom ( ":-" literal ("," literal)* )? "."
///   literal := atom | "not" atom | "~" atom
///   atom    := [a-z][a-zA-Z0-9_]*   ("not" is reserved)
///   comment := "%" to end of line
/// Empty input is the empty program. Syntax errors carry a SourceSpan.
Program parse_program(std::string_view text);

/// Canonical text: one rule per line, positive literals sorted by name, then
/// "not" literals sorted by name. parse(serialize(p)) == p.
std::string serialize_program(const Program& p);

std::string serialize_rule(const AtomTable& atoms, const Rule& r);

}  // namespace lpsem
