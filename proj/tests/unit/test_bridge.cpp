#include <doctest.h>

#include "gen.hpp"
#include "skew/bridge.hpp"
#include "skew/coherence.hpp"
#include "skew/error.hpp"
#include "skew/parse.hpp"

using namespace skew;
using namespace skew::testing;

namespace {

bool same(const cat::Derivation& a, const cat::Derivation& b) {
  return coherence::decide_eq(a, b).equal;
}

}  // namespace

TEST_SUITE("bridge") {
  TEST_CASE("sound") {
    CHECK(bridge::sound(seq::ax(X())) == cat::id(X()));
    CHECK(same(bridge::sound(seq::impR(seq::pass(seq::ax(X())))), cat::j(X())));
    seq::Equation eta = seq::eta(imp(X(), Y()));
    CHECK(same(bridge::sound(eta.lhs), bridge::sound(eta.rhs)));
    Rng rng(41);
    for (const auto& d : seq_pool(rng, 120, 9)) {
      cat::Derivation c = bridge::sound(d);
      CHECK_NOTHROW(cat::validate(c));
      CHECK(c.conclusion() == Sequent{d.conclusion().stoup, {},
                                      bridge::iterated_hom(d.conclusion().context,
                                                           d.conclusion().succedent)});
    }
  }

  TEST_CASE("Lstar") {
    const Formula a = X(), d = Y();
    CHECK(bridge::Lstar({}, a, d) == cat::id(imp(a, d)));
    CHECK(bridge::Lstar({Z()}, a, d) == cat::L(Z(), a, d));
    cat::Derivation two = bridge::Lstar({X(), Y()}, a, d);
    CHECK_NOTHROW(cat::validate(two));
    CHECK(two.conclusion() ==
          parse_cat_sequent("X -o Y |- (X -o Y -o X) -o (X -o Y -o Y)"));
  }

  TEST_CASE("cmplt") {
    CHECK(bridge::cmplt(cat::j(X())) == seq::impR(seq::pass(seq::ax(X()))));
    cat::Derivation e = cat::j(X());
    CHECK(bridge::cmplt(cat::i(e, Y())) == seq::impL(bridge::cmplt(e), seq::ax(Y())));
    cat::Derivation l = cat::L(X(), Y(), Z());
    seq::Derivation cl = bridge::cmplt(l);
    CHECK_NOTHROW(seq::validate(cl));
    CHECK(cl.conclusion() == l.conclusion());
    CHECK(same(bridge::sound(cl), l));
    seq::Derivation opened = bridge::cmplt(l, {imp(X(), Y()), X()});
    CHECK(opened.conclusion() == sq("Y -o Z | X -o Y, X |- Z"));
    CHECK_THROWS_AS(bridge::cmplt(cat::id(X()), {X()}), TypeError);
  }

  TEST_CASE("cmplt after sound is the identity up to focusing") {
    Rng rng(43);
    for (const auto& d : seq_pool(rng, 120, 9)) {
      seq::Derivation back = bridge::cmplt(bridge::sound(d), d.conclusion().context);
      CHECK(back.conclusion() == d.conclusion());
      CHECK(foc::focus(back) == foc::focus(d));
    }
  }

  TEST_CASE("translations between focused and normal derivations") {
    coherence::Search search;
    for (const auto& s : sequents_up_to(6, {"X", "Y"})) {
      for (const auto& g : search.enumerate(s)) {
        nf::Derivation n = bridge::I2nf(g);
        CHECK_NOTHROW(nf::validate(n));
        CHECK(bridge::nf2I(n) == g);
      }
      if (!s.succedent.is_atom()) continue;
      for (const auto& g : search.enumerate(s, foc::Phase::P)) CHECK(bridge::p2P(bridge::P2p(g)) == g);
      if (!s.stoup) continue;
      for (const auto& g : search.enumerate(s, foc::Phase::F)) {
        nf::Derivation n = bridge::F2ne(g);
        CHECK(bridge::ne2F(n) == g);
        CHECK(bridge::ne2F_acc(nf::ax(*s.stoup), g) == g);
      }
    }
  }

  TEST_CASE("F2ne accumulates spines") {
    const Formula xy = imp(X(), Y());
    foc::Derivation a = foc::p2i(foc::pass(foc::f2p(foc::ax(X()))));
    foc::Derivation h = foc::impL(a, foc::ax(Y()));
    nf::Derivation acc = nf::ax(xy);
    CHECK(bridge::F2ne_acc(acc, h) ==
          bridge::F2ne_acc(nf::impE(acc, bridge::I2nf(a)), foc::ax(Y())));
    CHECK(bridge::ne2F(nf::ax(X())) == foc::ax(X()));
  }

  TEST_CASE("sound after cmplt is the identity up to the congruence") {
    Rng rng(47);
    for (const auto& d : cat_pool(rng, 60, 7)) CHECK(same(bridge::sound(bridge::cmplt(d)), d));
  }
}
