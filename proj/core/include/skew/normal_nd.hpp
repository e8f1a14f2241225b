#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skew/nat_ded.hpp"
#include "skew/parse.hpp"
#include "skew/tree.hpp"

namespace skew::nf {

/// Phase nf: ImpI, P2Nf. Phase p: Pass, Ne2P. Phase ne: Ax (any formula),
/// ImpE.
enum class Rule { ImpI, P2Nf, Pass, Ne2P, Ax, ImpE };
enum class Phase { Nf, P, Ne };

Phase phase(Rule r) noexcept;
const char* name(Phase p) noexcept;

/// Normal natural deduction derivation (beta-normal, eta-long). ImpE stores
/// its split as param(0).
using Derivation = Tree<Rule>;

inline Phase phase(const Derivation& d) noexcept { return phase(d.rule()); }

Derivation impI(const Derivation& f);
Derivation p2nf(const Derivation& f);
Derivation pass(const Derivation& f);
Derivation ne2p(const Derivation& f);
Derivation ax(const Formula& a);
/// f : S | G |-ne A -o B, g : - | D |-nf A gives S | G, D |-ne B.
Derivation impE(const Derivation& f, const Derivation& g);

/// Neutrals are inferred; normal forms are checked.
Derivation check(const RawTerm& t, const Sequent& goal, Phase phase = Phase::Nf,
                 const std::string& path = "root");
void validate(const Derivation& d);
std::string to_string(const Derivation& d);

/// Erase phases.
nd::Derivation emb(const Derivation& d);

/// Semantic value of a formula at some antecedent. At an atom it carries a
/// normal form; at A -o B it is a function from values of A (over any
/// context D, loose) to values of B (over the extended context).
class Value {
 public:
  using Fn = std::function<Value(const Value&)>;

  static Value atomic(Derivation nf);
  static Value function(Formula type, Fn fn);

  const Formula& type() const noexcept { return rep_->type; }
  const Derivation& normal() const { return *rep_->nf; }
  Value apply(const Value& arg) const { return rep_->fn(arg); }

 private:
  struct Rep {
    Formula type;
    std::optional<Derivation> nf;
    Fn fn;
  };
  explicit Value(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

/// Interpretation of an antecedent S | G: an optional stoup value and one
/// value per context formula, each over its own block of the world.
struct Environment {
  std::optional<Value> stoup;
  std::vector<Value> entries;
};

Value eval(const nd::Derivation& d, const Environment& env);
/// n : A | G |-ne C gives a value of C over A | G.
Value reflect(const Derivation& n);
Derivation reify(const Value& v);
/// A value over A | G viewed over - | A, G.
Value sem_pass(const Value& v);
/// Identity environment for an antecedent.
Environment gamma(const Stoup& s, const Context& ctx);

Derivation nbe(const nd::Derivation& d);

}  // namespace skew::nf
