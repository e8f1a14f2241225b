#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skew/error.hpp"
#include "skew/formula.hpp"

namespace skew {

Formula parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

/// Categorical sequent `S |- C` (stoup `-` or a formula). The general form
/// `S | |- C` is accepted too; a non-empty context is rejected.
Sequent parse_cat_sequent(std::string_view text);

/// Untyped term syntax shared by every calculus:
///   term ::= app ("." term)?
///   app  ::= name ("[" bracket "]")? ("(" term ("," term)* ")")? | "(" term ")"
/// `g . f` is sugar for `comp(f, g)`. A bracket is `label ; p1, ..., pn` or
/// `p1, ..., pn`; parameters stay raw text for the typechecker to interpret.
struct RawParam {
  std::string text;
  std::size_t offset = 0;
};

struct RawTerm {
  std::string head;
  std::size_t offset = 0;
  bool has_bracket = false;
  std::optional<std::string> label;
  std::vector<RawParam> params;
  std::vector<RawTerm> children;
  /// True when written as `name(...)` with parentheses, even if empty.
  bool has_parens = false;
};

RawTerm parse_term(std::string_view text);

/// Parameter helpers used by the per-calculus checkers. Failures raise
/// TypeError at `path`.
Formula param_formula(const RawTerm& t, std::size_t i, const std::string& path);
std::size_t param_index(const RawTerm& t, std::size_t i, const std::string& path);

std::string to_string(const RawTerm& t);

}  // namespace skew
