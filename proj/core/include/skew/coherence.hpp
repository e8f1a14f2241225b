#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "skew/cat_calc.hpp"
#include "skew/focused.hpp"
#include "skew/graph.hpp"

namespace skew::coherence {

struct Options {
  /// Largest homset materialized before CapExceeded is thrown.
  std::size_t cap = 1'000'000;
  /// Clause applications are searched when set.
  const Multigraph* graph = nullptr;
  /// Maximal nesting of clause applications. Loose or cyclic clauses can make
  /// homsets infinite; branches cut by this bound mark the search truncated.
  std::size_t fuel = 16;
};

/// Root-first search in the focused calculus, memoized per (phase, sequent).
/// Results come in a fixed order: impR before p2i, pass before f2p, ax
/// before impL before clauses, splits left-short-first.
class Search {
 public:
  explicit Search(Options opts = {});

  const std::vector<foc::Derivation>& enumerate(const Sequent& s, foc::Phase phase = foc::Phase::I);
  std::uint64_t count(const Sequent& s, foc::Phase phase = foc::Phase::I);
  /// True if some branch was cut off by the fuel bound.
  bool truncated() const noexcept { return truncated_; }

 private:
  struct Key {
    foc::Phase phase;
    std::size_t fuel;
    Sequent seq;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  using List = std::vector<foc::Derivation>;

  const List& list(foc::Phase phase, const Sequent& s, std::size_t fuel);
  std::uint64_t number(foc::Phase phase, const Sequent& s, std::size_t fuel);
  void push(List& out, foc::Derivation d) const;

  Options opts_;
  bool truncated_ = false;
  std::unordered_map<Key, std::unique_ptr<List>, KeyHash> lists_;
  std::unordered_map<Key, std::uint64_t, KeyHash> counts_;
};

/// All focused phase I derivations of `s`, without duplicates.
std::vector<foc::Derivation> enumerate(const Sequent& s, std::size_t cap = 1'000'000);
/// Number of focused phase I derivations; throws CapExceeded on overflow.
std::uint64_t count(const Sequent& s);

/// Canonical representative of a categorical map: focus(cmplt(d, [])).
foc::Derivation normal_form(const cat::Derivation& d);

struct Verdict {
  bool equal;
  foc::Derivation lhs, rhs;
};

/// Decides the congruence on categorical derivations of the same sequent.
Verdict decide_eq(const cat::Derivation& a, const cat::Derivation& b);

}  // namespace skew::coherence
