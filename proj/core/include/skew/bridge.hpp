#pragma once

#include "skew/cat_calc.hpp"
#include "skew/focused.hpp"
#include "skew/normal_nd.hpp"
#include "skew/seq_calc.hpp"

namespace skew::bridge {

/// <G>C: <>C = C, <A, G>C = A -o <G>C.
Formula iterated_hom(const Context& ctx, const Formula& c);

/// f : S | G |- C gives S |- <G>C.
cat::Derivation sound(const seq::Derivation& f);
/// A -o D |- <G>A -o <G>D by iterating L.
cat::Derivation Lstar(const Context& ctx, const Formula& a, const Formula& d);
/// f : S |- <G>C gives S | G |- C. Throws TypeError when the succedent
/// does not unfold along G.
seq::Derivation cmplt(const cat::Derivation& f, const Context& ctx = {});

/// Normal natural deduction and focused derivations, phase by phase.
foc::Derivation nf2I(const nf::Derivation& f);
foc::Derivation p2P(const nf::Derivation& f);
foc::Derivation ne2F(const nf::Derivation& f);
/// n : S | G |-ne A, g : A | D |-F C gives S | G, D |-F C.
foc::Derivation ne2F_acc(const nf::Derivation& n, const foc::Derivation& g);

nf::Derivation I2nf(const foc::Derivation& f);
nf::Derivation P2p(const foc::Derivation& f);
nf::Derivation F2ne(const foc::Derivation& f);
/// acc : S | G |-ne A, h : A | D |-F C gives S | G, D |-ne C.
nf::Derivation F2ne_acc(const nf::Derivation& acc, const foc::Derivation& h);

}  // namespace skew::bridge
