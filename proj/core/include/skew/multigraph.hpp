#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "skew/coherence.hpp"
#include "skew/focused.hpp"
#include "skew/graph.hpp"
#include "skew/parse.hpp"
#include "skew/tree.hpp"

namespace skew::mg {

/// Sequent calculus over a multigraph: the set-case rules plus a primitive
/// rule impC acting on an implication in the context, and clause
/// application iota with loose argument premises and a tight continuation.
enum class Rule { Ax, Pass, ImpR, ImpL, ImpC, Iota };

/// ImpL stores its split as param(0). ImpC stores (position of A -o B, length
/// of the loose premise's context). Iota stores the clause name as label and
/// its argument block lengths as params.
using Derivation = Tree<Rule>;

Derivation ax(const Formula& a);
Derivation pass(const Derivation& f);
Derivation impR(const Derivation& f);
Derivation impL(const Derivation& f, const Derivation& g);
/// f : - | G |- A, g : S | D0, B, D1 |- C (B at index pos) gives
/// S | D0, A -o B, G, D1 |- C.
Derivation impC(const Derivation& f, const Derivation& g, std::size_t pos);
/// Clause c : T | Y1..Yn |- X, args[i] : - | Gi |- Yi, cont : X | D |- C.
Derivation iota(const Clause& c, const std::vector<Derivation>& args, const Derivation& cont);
/// The clause itself: iota(c; pass(ax), ..., ax).
Derivation iota(const Clause& c);

/// Accepts `ax`, `pass(f)`, `impR(f)`, `impL[k](f, g)`, `impC[p, k](f, g)`,
/// `iota[c; l1, ..., ln](a1, ..., an, k)` and the shorthand `iota(c)`.
Derivation check(const Multigraph& g, const RawTerm& t, const Sequent& goal,
                 const std::string& path = "root");
void validate(const Multigraph& g, const Derivation& d);
std::string to_string(const Derivation& d);

/// f : S | G |- A, g : A | D |- C gives S | G, D |- C.
Derivation scut(const Derivation& f, const Derivation& g);
/// e : - | G |- A, g : S | D0, A, D1 |- C gives S | D0, G, D1 |- C.
Derivation ccut(const Derivation& e, const Derivation& g, std::size_t pos);
/// f : A' | G |- A, g : S | D0, A, D1 |- C gives S | D0, A', G, D1 |- C.
Derivation ccut_fma(const Derivation& f, const Derivation& g, std::size_t pos);

/// Normal form in the focused calculus with clause application.
foc::Derivation focus(const Derivation& d);
/// Erase phases, keeping clause applications.
Derivation emb(const foc::Derivation& d);

/// Stuck case of the attempted inverse of pass.
struct Counterexample {
  Derivation node;
  std::string reason;
};
using ActResult = std::variant<Derivation, Counterexample>;

/// Tries to turn f : - | A, G |- C into A | G |- C.
ActResult act_attempt(const Derivation& f);

/// Enumerates focused derivations with clause application.
struct Enumeration {
  std::vector<foc::Derivation> derivations;
  bool truncated = false;
};
Enumeration enumerate(const Multigraph& g, const Sequent& s, std::size_t fuel = 16,
                      std::size_t cap = 1'000'000);
struct Count {
  std::uint64_t value = 0;
  bool truncated = false;
};
Count count(const Multigraph& g, const Sequent& s, std::size_t fuel = 16);

/// Commutative conversions of impC.
enum class Law {
  ImpCImpR,    // impC(f, impR g) = impR(impC(f, g))
  PassImpC,    // pass(impC(f, g)) = impC(f, pass g)
  PassImpL,    // pass(impL(f, g)) = impC(f, pass g)
  ImpCImpLR,   // impC(f, impL(g, h)) = impL(g, impC(f, h))
  ImpCImpLL,   // impC(f, impL(g, h)) = impL(impC(f, g), h)
  ImpCSwap,    // impC(f, impC(g, h)) = impC(g, impC(f, h))
  ImpCNest,    // impC(f, impC(g, h)) = impC(impC(f, g), h)
};
inline constexpr int kLawCount = 7;
const char* name(Law law);

struct Equation {
  Law law;
  Derivation lhs, rhs;
};

/// f : - | G |- A', g : S | D0, B', D1, A |- B; p = |D0|.
Equation conv_impR(const Derivation& f, const Derivation& g, std::size_t p);
/// f : - | G |- A, g : A' | D0, B, D1 |- C; p = |D0|.
Equation conv_pass_impC(const Derivation& f, const Derivation& g, std::size_t p);
/// f : - | G |- A, g : B | D |- C.
Equation conv_pass_impL(const Derivation& f, const Derivation& g);
/// f : - | G |- A, g : - | G' |- A', h : B' | D0, B, D1 |- C; p = |D0|.
Equation conv_impL_right(const Derivation& f, const Derivation& g, const Derivation& h,
                         std::size_t p);
/// f : - | G |- A, g : - | D0, B, D1 |- A', h : B' | D |- C; p = |D0|.
Equation conv_impL_left(const Derivation& f, const Derivation& g, const Derivation& h,
                        std::size_t p);
/// f : - | G |- A, g : - | G' |- A', h : S | D0, B, D1, B', D2 |- C;
/// p = |D0| (B), q = |D0| + 1 + |D1| (B').
Equation conv_swap(const Derivation& f, const Derivation& g, const Derivation& h, std::size_t p,
                   std::size_t q);
/// f : - | G |- A, g : - | D0, B, D1 |- A', h : S | D2, B', D3 |- C;
/// p = |D0|, q = |D2|.
Equation conv_nest(const Derivation& f, const Derivation& g, const Derivation& h, std::size_t p,
                   std::size_t q);

}  // namespace skew::mg
