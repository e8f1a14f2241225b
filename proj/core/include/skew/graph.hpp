#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skew/formula.hpp"

namespace skew {

/// A generating multimap `name : T | Y1, ..., Yn |- Z` over atoms. A clause
/// with T empty is loose, otherwise tight.
struct Clause {
  std::string name;
  std::optional<std::string> stoup;
  std::vector<std::string> premises;
  std::string conclusion;

  Sequent sequent() const;
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Skew multigraph: declared atoms plus definite clauses.
class Multigraph {
 public:
  Multigraph() = default;
  /// Validates that every referenced atom is declared and names are unique.
  Multigraph(std::vector<std::string> atoms, std::vector<Clause> clauses);

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  /// nullptr when absent.
  const Clause* find(std::string_view name) const noexcept;

 private:
  std::vector<std::string> atoms_;
  std::vector<Clause> clauses_;
};

/// Text format, one declaration per line, `#` comments:
///   atom X
///   clause f : X | Y |- Z
///   clause g : - | X |- Z
Multigraph parse_graph(std::string_view text);
std::string to_string(const Multigraph& g);

}  // namespace skew
