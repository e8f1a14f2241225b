#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skew {

/// A formula: an atom or a right implication `A -o B`. Immutable and cheap to
/// copy; equality is structural.
class Formula {
 public:
  static Formula atom(std::string_view name);
  static Formula imp(Formula antecedent, Formula consequent);

  bool is_atom() const noexcept { return rep_->lhs == nullptr; }
  bool is_imp() const noexcept { return !is_atom(); }

  /// Atom name; empty for implications.
  const std::string& name() const noexcept { return rep_->name; }
  Formula antecedent() const;
  Formula consequent() const;

  /// Number of atoms plus number of implications.
  std::size_t size() const noexcept { return rep_->size; }
  /// Nesting depth of `-o`; atoms have depth 0.
  std::size_t depth() const noexcept { return rep_->depth; }
  std::size_t hash() const noexcept { return rep_->hash; }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  struct Rep {
    std::string name;
    std::shared_ptr<const Rep> lhs, rhs;
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static bool equal(const Rep* a, const Rep* b) noexcept;

  std::shared_ptr<const Rep> rep_;
};

/// Optional formula in the distinguished antecedent position; nullopt is `-`.
using Stoup = std::optional<Formula>;
/// Ordered, order-significant antecedent list.
using Context = std::vector<Formula>;

/// `S | Gamma |- C`. Categorical sequents are the ones with an empty context.
struct Sequent {
  Stoup stoup;
  Context context;
  Formula succedent;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::size_t size(const Context& ctx) noexcept;
std::size_t size(const Sequent& s) noexcept;

Context concat(const Context& a, const Context& b);
/// Sub-list `ctx[from, to)`.
Context slice(const Context& ctx, std::size_t from, std::size_t to);

std::string to_string(const Formula& f);
std::string to_string(const Stoup& s);
std::string to_string(const Context& ctx);
std::string to_string(const Sequent& s);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};
struct SequentHash {
  std::size_t operator()(const Sequent& s) const noexcept;
};

}  // namespace skew
