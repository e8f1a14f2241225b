#pragma once

#include <string>

#include "skew/parse.hpp"
#include "skew/tree.hpp"

namespace skew::nd {

enum class Rule { Ax, Pass, ImpI, ImpE };

/// Natural deduction derivation, i.e. a skew planar lambda term. ImpE
/// carries its split as param(0): the function premise receives the first k
/// context formulas.
using Derivation = Tree<Rule>;

Derivation ax(const Formula& a);
/// f : A | G |- C gives - | A, G |- C.
Derivation pass(const Derivation& f);
/// f : S | G, A |- B gives S | G |- A -o B.
Derivation impI(const Derivation& f);
/// f : S | G |- A -o B, g : - | D |- A gives S | G, D |- B.
Derivation impE(const Derivation& f, const Derivation& g);

/// Bidirectional checking. `impI` in function position needs an annotation
/// `impI[A](f)` naming its bound formula.
Derivation check(const RawTerm& t, const Sequent& goal, const std::string& path = "root");
void validate(const Derivation& d);
std::string to_string(const Derivation& d);

/// f : S | G |- A, g : A | D |- C gives S | G, D |- C.
Derivation scut(const Derivation& f, const Derivation& g);
/// e : - | G |- A, g : S | D0, A, D1 |- C (A at index pos) gives
/// S | D0, G, D1 |- C.
Derivation ccut(const Derivation& e, const Derivation& g, std::size_t pos);

enum class Law { Beta, Eta, PassImpI, PassImpE };
const char* name(Law law);

struct Equation {
  Law law;
  Derivation lhs, rhs;
};

/// f : S | G, A |- B, g : - | D |- A.
Equation beta(const Derivation& f, const Derivation& g);
/// f : S | G |- A -o B.
Equation eta(const Derivation& f);
/// f : A' | G, A |- B.
Equation comm_pass_impI(const Derivation& f);
/// f : A' | G |- A -o B, g : - | D |- A.
Equation comm_pass_impE(const Derivation& f, const Derivation& g);

}  // namespace skew::nd
