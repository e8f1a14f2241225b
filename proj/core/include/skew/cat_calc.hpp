#pragma once

#include <string>
#include <vector>

#include "skew/graph.hpp"
#include "skew/parse.hpp"
#include "skew/tree.hpp"

namespace skew::cat {

enum class Rule { Id, Comp, ImpF, J, I, L, Gen };

/// Derivation of `S |- C` in the categorical calculus (context always empty).
using Derivation = Tree<Rule>;

Derivation id(const Formula& a);
/// `g . f`: f : S |- B, g : B |- C.
Derivation comp(const Derivation& f, const Derivation& g);
/// f : C |- A, g : B |- D gives A -o B |- C -o D.
Derivation imp(const Derivation& f, const Derivation& g);
Derivation j(const Formula& a);
/// e : - |- A gives A -o B |- B.
Derivation i(const Derivation& e, const Formula& b);
/// B -o C |- (A -o B) -o (A -o C).
Derivation L(const Formula& a, const Formula& b, const Formula& c);
/// Generator `T |- <Phi>Z` for a clause T | Phi |- Z.
Derivation gen(const Clause& c);

/// f : A |- B gives - |- A -o B, as `(A -o f) . j`.
Derivation jhat(const Derivation& f);

/// Typecheck untyped syntax. Gen nodes need a graph.
Derivation infer(const RawTerm& t, const Multigraph* graph = nullptr,
                 const std::string& path = "root");
Derivation check(const RawTerm& t, const Sequent& goal, const Multigraph* graph = nullptr);
/// Re-derives every conclusion from the rules; throws TypeError on mismatch.
void validate(const Derivation& d, const Multigraph* graph = nullptr);

std::string to_string(const Derivation& d);

/// Generating equation families of the congruence.
enum class Law {
  RightUnit,   // f . id = f
  LeftUnit,    // id . f = f
  Assoc,       // (h . g) . f = h . (g . f)
  ImpId,       // id -o id = id
  ImpComp,     // (f . h) -o (k . g) = (h -o k) . (f -o g)
  JNat,        // (f -o id) . j = (id -o f) . j
  INat,        // g . i(e) . (h -o id) = i(h . e) . (id -o g)
  LNat,        // ((f -o g) -o (id -o h)) . L = (id -o (f -o id)) . L . (g -o h)
  C1,          // i(e) . j = e
  C2,          // i(j) . L = id
  C3,          // L . j = j
  C4,          // (id -o i(e)) . L = i(e) -o id
  C5,          // (id -o L) . L = (L -o id) . L . L
};
inline constexpr int kLawCount = 13;

struct LawShape {
  const char* name;
  std::size_t maps;
  std::size_t formulas;
};
const LawShape& shape(Law law);
const char* name(Law law);

struct Equation {
  Law law;
  Derivation lhs, rhs;
};

/// Instantiates one family. `maps` and `formulas` are read in the order
/// listed below; composability is checked and reported as TypeError.
///   RightUnit, LeftUnit: maps f
///   Assoc: maps f, g, h (f then g then h)
///   ImpId: formulas A, B
///   ImpComp: maps f : C |- A, g : B |- D, h : E |- C, k : D |- F
///   JNat: maps f : A |- B
///   INat: maps e : - |- A', g : B |- B', h : A' |- A
///   LNat: maps f : A' |- A, g : B |- B', h : C |- C'
///   C1: maps e : - |- A
///   C2: formulas A, C
///   C3: formulas A, B
///   C4: maps e : - |- A; formulas B, C
///   C5: formulas A, B, C, D
/// Arity mismatch raises std::invalid_argument.
Equation instantiate(Law law, const std::vector<Derivation>& maps,
                     const std::vector<Formula>& formulas);

}  // namespace skew::cat

namespace skew::sf {

/// Stoup-free combinator calculus: every sequent is `- |- C`.
enum class Rule { App, J, IPrime, LPrime };
using Derivation = Tree<Rule>;

/// b : - |- B, f : - |- B -o C gives - |- C.
Derivation app(const Derivation& b, const Derivation& f);
Derivation j(const Formula& a);
/// e : - |- A gives - |- (A -o B) -o B.
Derivation i_prime(const Derivation& e, const Formula& b);
/// - |- (B -o C) -o (A -o B) -o A -o C.
Derivation L_prime(const Formula& a, const Formula& b, const Formula& c);

Derivation infer(const RawTerm& t, const std::string& path = "root");
Derivation check(const RawTerm& t, const Sequent& goal);
std::string to_string(const Derivation& d);

/// Loose categorical derivations to combinators. A stoup A is first routed
/// through jhat, so a map A |- C becomes a combinator of type A -o C.
Derivation from_cat(const cat::Derivation& d);
/// Back to the categorical calculus; result has an empty stoup.
cat::Derivation to_cat(const Derivation& d);

}  // namespace skew::sf
