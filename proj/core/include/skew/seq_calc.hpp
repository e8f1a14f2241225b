#pragma once

#include <string>

#include "skew/parse.hpp"
#include "skew/tree.hpp"

namespace skew::seq {

enum class Rule { Ax, Pass, ImpR, ImpL };

/// Cut-free sequent calculus derivation. ImpL carries its split index as
/// param(0): the loose premise receives the first k context formulas.
using Derivation = Tree<Rule>;

Derivation ax(const Formula& a);
/// f : A | G |- C gives - | A, G |- C.
Derivation pass(const Derivation& f);
/// f : S | G, A |- B gives S | G |- A -o B.
Derivation impR(const Derivation& f);
/// f : - | G |- A, g : B | D |- C gives A -o B | G, D |- C.
Derivation impL(const Derivation& f, const Derivation& g);

Derivation check(const RawTerm& t, const Sequent& goal, const std::string& path = "root");
void validate(const Derivation& d);
std::string to_string(const Derivation& d);

/// f : S | G |- A, g : A | D |- C gives S | G, D |- C.
Derivation scut(const Derivation& f, const Derivation& g);
/// e : - | G |- A, g : S | D0, A, D1 |- C (A at index pos) gives
/// S | D0, G, D1 |- C.
Derivation ccut(const Derivation& e, const Derivation& g, std::size_t pos);
/// e : - | G |- A, g : S | D0, B, D1 |- C (B at index pos) gives
/// S | D0, A -o B, G, D1 |- C, as ccut(pass(impL(e, ax)), g).
Derivation impC(const Derivation& e, const Derivation& g, std::size_t pos);
/// Inverse of pass: f : - | A, G |- C gives A | G |- C.
Derivation act(const Derivation& f);
/// Inverse of impR: h : S | G |- A -o B gives S | G, A |- B.
Derivation invR(const Derivation& h);

enum class Law { Eta, PassImpR, ImpLImpR };
const char* name(Law law);

struct Equation {
  Law law;
  Derivation lhs, rhs;
};

/// ax at A -o B against its expansion.
Equation eta(const Formula& imp);
/// f : A' | G, A |- B.
Equation comm_pass_impR(const Derivation& f);
/// f : - | G |- A', g : B' | D, A |- B.
Equation comm_impL_impR(const Derivation& f, const Derivation& g);

}  // namespace skew::seq
