#include <doctest.h>

#include "gen.hpp"
#include "skew/coherence.hpp"
#include "skew/error.hpp"
#include "skew/focused.hpp"
#include "skew/parse.hpp"

using namespace skew;
using namespace skew::testing;

namespace {

std::vector<foc::Derivation> corpus(std::size_t max_size, foc::Phase phase = foc::Phase::I) {
  std::vector<foc::Derivation> out;
  coherence::Search search;
  for (const auto& s : sequents_up_to(max_size, {"X", "Y"})) {
    if (phase == foc::Phase::F && (!s.stoup || !s.succedent.is_atom())) continue;
    if (phase == foc::Phase::P && !s.succedent.is_atom()) continue;
    const auto& ds = search.enumerate(s, phase);
    out.insert(out.end(), ds.begin(), ds.end());
  }
  return out;
}

}  // namespace

TEST_SUITE("focused") {
  TEST_CASE("phase discipline of the constructors") {
    CHECK_THROWS_AS(foc::ax(imp(X(), Y())), TypeError);
    CHECK_THROWS_AS(foc::p2i(foc::ax(X())), TypeError);
    CHECK_THROWS_AS(foc::pass(foc::ax(X())), TypeError);
    CHECK_NOTHROW(foc::p2i(foc::f2p(foc::ax(X()))));
    CHECK_NOTHROW(foc::check(parse_term("p2i(pass(f2p(ax)))"), sq("- | X |- X")));
    CHECK_THROWS_AS(foc::check(parse_term("p2i(f2p(ax))"), sq("X -o Y | |- X -o Y")), TypeError);
  }

  TEST_CASE("embedding") {
    CHECK(foc::emb(foc::ax(X())) == seq::ax(X()));
    CHECK(foc::emb(foc::p2i(foc::pass(foc::f2p(foc::ax(X()))))) == seq::pass(seq::ax(X())));
    for (const auto& g : corpus(6)) {
      seq::Derivation e = foc::emb(g);
      CHECK(e.conclusion() == g.conclusion());
      CHECK_NOTHROW(seq::validate(e));
    }
  }

  TEST_CASE("admissible rules") {
    CHECK(foc::ax_I(X()) == foc::p2i(foc::f2p(foc::ax(X()))));
    const Formula xy = imp(X(), Y());
    CHECK(foc::ax_I(xy) == foc::focus(seq::ax(xy)));
    CHECK(foc::ax_I(xy).rule() == foc::Rule::ImpR);
    for (const auto& f : corpus(6)) {
      if (!f.conclusion().stoup || f.rule() != foc::Rule::ImpR) continue;
      CHECK(foc::pass_I(f) == foc::impR(foc::pass_I(f.premise(0))));
    }
  }

  TEST_CASE("focus") {
    CHECK(foc::focus(seq::ax(X())) == foc::ax_I(X()));
    seq::Equation eta = seq::eta(imp(X(), Y()));
    CHECK(foc::focus(eta.lhs) == foc::focus(eta.rhs));
    for (const auto& g : corpus(6)) CHECK(foc::focus(foc::emb(g)) == g);
  }

  TEST_CASE("hereditary substitution identities") {
    for (const auto& f : corpus(6, foc::Phase::F))
      CHECK(foc::scut_F(f, foc::ax(f.conclusion().succedent)) == f);
    for (const auto& g : corpus(6)) {
      const Context& ctx = g.conclusion().context;
      for (std::size_t pos = 0; pos < ctx.size(); ++pos)
        CHECK(foc::ccut_I(foc::pass_I(foc::ax_I(ctx[pos])), g, pos) == g);
    }
  }

  TEST_CASE("impE_I is a context cut") {
    auto all = corpus(6);
    int done = 0;
    for (const auto& f : all) {
      if (f.rule() != foc::Rule::ImpR) continue;
      const Formula a = f.conclusion().succedent.antecedent();
      for (const auto& g : all) {
        if (g.conclusion().stoup || !(g.conclusion().succedent == a)) continue;
        CHECK(foc::impE_I(f, g) ==
              foc::ccut_I(g, f.premise(0), f.conclusion().context.size()));
        ++done;
      }
    }
    CHECK(done > 0);
  }

  TEST_CASE("spine identity") {
    CHECK(foc::ax_I_nd(X()) == foc::ax_I(X()));
    for (const auto& a : formulas_up_to(9, {"X", "Y"})) CHECK(foc::ax_I_nd(a) == foc::ax_I(a));
    CHECK(coherence::count(sq("X -o Y | |- X -o Y")) == 1);
    // j can be consumed in place of the argument, so this homset is not a singleton
    CHECK(coherence::count(sq("(X -o X) -o X -o X | |- (X -o X) -o X -o X")) == 2);
  }

  TEST_CASE("natural deduction embedding and hered") {
    CHECK(foc::emb_nd(foc::ax(X())) == nd::ax(X()));
    foc::Derivation e = foc::p2i(foc::pass(foc::f2p(foc::ax(X()))));
    foc::Derivation sp = foc::impL(e, foc::ax(Y()));
    CHECK(foc::emb_nd(sp) == nd::impE(nd::ax(imp(X(), Y())), foc::emb_nd(e)));
    CHECK(foc::hered(nd::ax(X())) == foc::ax_I(X()));
    for (const auto& g : corpus(6)) {
      nd::Derivation d = foc::emb_nd(g);
      CHECK_NOTHROW(nd::validate(d));
      CHECK(foc::hered(d) == g);
    }
  }

  TEST_CASE("hered respects beta") {
    Rng rng(31);
    auto pool = nd_pool(rng, 150, 8);
    int done = 0;
    for (const auto& f : pool) {
      if (f.conclusion().context.empty()) continue;
      const Formula a = f.conclusion().context.back();
      for (const auto& g : pool) {
        if (g.conclusion().stoup || !(g.conclusion().succedent == a)) continue;
        nd::Equation b = nd::beta(f, g);
        CHECK(foc::hered(b.lhs) == foc::hered(b.rhs));
        ++done;
      }
    }
    CHECK(done > 10);
  }

  TEST_CASE("printer output re-parses") {
    for (const auto& g : corpus(5))
      CHECK(foc::check(parse_term(foc::to_string(g)), g.conclusion()) == g);
  }
}
