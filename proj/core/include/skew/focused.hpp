#pragma once

#include <string>
#include <vector>

#include "skew/graph.hpp"
#include "skew/nat_ded.hpp"
#include "skew/parse.hpp"
#include "skew/seq_calc.hpp"
#include "skew/tree.hpp"

namespace skew::foc {

/// Phase I: ImpR, P2I. Phase P: Pass, F2P. Phase F: Ax (atomic), ImpL, and
/// Iota for clause application over a multigraph.
enum class Rule { ImpR, P2I, Pass, F2P, Ax, ImpL, Iota };
enum class Phase { I, P, F };

Phase phase(Rule r) noexcept;
const char* name(Phase p) noexcept;

/// Focused derivation. The phase of a node is determined by its rule. ImpL
/// stores its split as param(0); Iota stores the clause name as label and
/// the lengths of its argument blocks as params.
using Derivation = Tree<Rule>;

inline Phase phase(const Derivation& d) noexcept { return phase(d.rule()); }

Derivation impR(const Derivation& f);
Derivation p2i(const Derivation& f);
Derivation pass(const Derivation& f);
Derivation f2p(const Derivation& f);
Derivation ax(const Formula& x);
Derivation impL(const Derivation& f, const Derivation& g);
/// Clause c : T | Y1..Yn |- X, args[i] : - | Gi |-I Yi, cont : X | D |-F C
/// gives T | G1..Gn, D |-F C.
Derivation iota(const Clause& c, const std::vector<Derivation>& args, const Derivation& cont);

Derivation check(const RawTerm& t, const Sequent& goal, Phase phase = Phase::I,
                 const Multigraph* graph = nullptr, const std::string& path = "root");
void validate(const Derivation& d, const Multigraph* graph = nullptr);
std::string to_string(const Derivation& d);

/// Erase phases. Iota has no sequent calculus counterpart and is rejected.
seq::Derivation emb(const Derivation& d);
/// Spine-style embedding into natural deduction; ImpL becomes impE.
nd::Derivation emb_nd(const Derivation& d);

/// Admissible rules in phase I.
Derivation pass_I(const Derivation& f);
Derivation impL_I(const Derivation& f, const Derivation& g);
Derivation ax_I(const Formula& a);

/// Normal form of a sequent calculus derivation.
Derivation focus(const seq::Derivation& f);

/// Hereditary substitutions. Each scut_k takes both premises in phase k; each
/// ccut_k substitutes a phase I loose derivation into a phase k one.
Derivation scut_I(const Derivation& f, const Derivation& g);
Derivation scut_P(const Derivation& f, const Derivation& g);
Derivation scut_F(const Derivation& f, const Derivation& g);
Derivation ccut_I(const Derivation& e, const Derivation& g, std::size_t pos);
Derivation ccut_P(const Derivation& e, const Derivation& g, std::size_t pos);
Derivation ccut_F(const Derivation& e, const Derivation& g, std::size_t pos);

/// f : S | G |-I A -o B, g : - | D |-I A gives S | G, D |-I B.
Derivation impE_I(const Derivation& f, const Derivation& g);
/// The eta-long identity built from an explicit spine, without impL_I.
Derivation ax_I_nd(const Formula& a);

/// Normal form of a natural deduction derivation.
Derivation hered(const nd::Derivation& f);

}  // namespace skew::foc
