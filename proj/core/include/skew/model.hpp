#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skew/cat_calc.hpp"

namespace skew::model {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// Finite cardinality drawn from M, the least set containing 3 and closed
/// under n^m.
struct CardObject {
  std::uint64_t n = 3;
  /// Throws std::invalid_argument if n is not in M, CapExceeded if n > cap.
  static CardObject make(std::uint64_t n, std::uint64_t cap = kDefaultCap);
  friend bool operator==(const CardObject&, const CardObject&) = default;
};

/// True if n is in M (all members up to cap are generated).
bool in_M(std::uint64_t n, std::uint64_t cap = kDefaultCap);

enum class Mode { Plain, Kleisli };

/// Plain finite sets, or the skewing by the reader monad T m = m^k where
/// m -o n = n^(k*m). Plain behaves as Kleisli with k = 1.
struct ModelSpec {
  Mode mode = Mode::Plain;
  CardObject k{1};
  std::map<std::string, CardObject, std::less<>> atoms;
  std::uint64_t cap = kDefaultCap;

  std::uint64_t readers() const noexcept { return mode == Mode::Plain ? 1 : k.n; }
};

/// Lines `mode plain`, `mode kleisli <k>`, `atom <name> <card>`; `#` comments.
ModelSpec parse_model_spec(std::string_view text);
/// Every atom mapped to 3, plain or with k = 3.
ModelSpec uniform(Mode mode, const std::vector<std::string>& atoms);

/// Cardinality of the interpretation; throws TypeError for unassigned atoms
/// and CapExceeded beyond the cap.
CardObject interp_formula(const ModelSpec& spec, const Formula& f);
/// Same, saturating at UINT64_MAX instead of throwing on size.
std::uint64_t cardinality(const ModelSpec& spec, const Formula& f);

/// A -> B table, big-endian encoded entries.
struct FiniteMap {
  CardObject domain, codomain;
  std::vector<std::uint64_t> table;
  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;
};
struct Element {
  CardObject object;
  std::uint64_t index = 0;
  friend bool operator==(const Element&, const Element&) = default;
};
using Interpretation = std::variant<FiniteMap, Element>;

/// Semantic value: an atom element or a function of (argument, reader).
class Value {
 public:
  using Fn = std::function<Value(const Value&, std::uint64_t)>;
  explicit Value(std::uint64_t atom = 0) : atom_(atom) {}
  /// `code`, when known, is the element's index in its object.
  explicit Value(Fn f, std::optional<std::uint64_t> code = std::nullopt)
      : code_(code), fn_(std::make_shared<const Fn>(std::move(f))) {}

  std::uint64_t atom() const noexcept { return atom_; }
  const std::optional<std::uint64_t>& code() const noexcept { return code_; }
  Value operator()(const Value& a, std::uint64_t r) const { return (*fn_)(a, r); }

 private:
  std::uint64_t atom_ = 0;
  std::optional<std::uint64_t> code_;
  std::shared_ptr<const Fn> fn_;
};

/// A map S |- C as a function (source, reader) -> element of C; a loose
/// source is passed as Value(0).
using Map = Value::Fn;

Map eval(const ModelSpec& spec, const cat::Derivation& d);

/// Table form of eval. In Kleisli mode a map A |- C is tabulated into
/// T C = C^k and a loose map is an element of T C.
Interpretation interp_cat(const ModelSpec& spec, const cat::Derivation& d);

/// Extensional comparison of two maps of the same sequent; nullopt when the
/// comparison would exceed the cap.
std::optional<bool> agree(const ModelSpec& spec, const cat::Derivation& a,
                          const cat::Derivation& b);

struct AxiomReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Instantiates the unit, associativity, functoriality, naturality and
/// c1-c5 families at the given objects and compares both sides in the
/// model. Map arguments are drawn from derivable maps between the objects.
AxiomReport check_axioms(const ModelSpec& spec, const std::vector<Formula>& objects);

}  // namespace skew::model
