#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "skew/bridge.hpp"
#include "skew/coherence.hpp"
#include "skew/error.hpp"
#include "skew/parse.hpp"

using namespace skew;
using namespace skew::testing;

TEST_SUITE("coherence") {
  TEST_CASE("homset sizes") {
    CHECK(coherence::count(sq("(X -o Y) -o (X -o Z) | X -o Y, X -o X, X |- Z")) == 2);
    CHECK(coherence::count(sq("X | |- X")) == 1);
    CHECK(coherence::count(sq("- | |- X")) == 0);
    CHECK(coherence::count(sq("- | |- X -o X")) == 1);
    CHECK(coherence::count(sq("X | |- Y")) == 0);
    CHECK(coherence::enumerate(sq("(X -o Y) -o (X -o Z) | X -o Y, X -o X, X |- Z")).size() == 2);
    CHECK(coherence::enumerate(sq("X | |- X")).front() == foc::p2i(foc::f2p(foc::ax(X()))));
  }

  // Reference values from an independent spine-form counter of
  // beta-normal eta-long terms.
  TEST_CASE("homset sizes against frozen reference counts") {
    const std::vector<std::pair<const char*, std::uint64_t>> table{
        {"(X -o Y) -o (X -o Z) | X -o Y, X -o X, X |- Z", 2},
        {"(X -o X) -o X -o X | |- (X -o X) -o X -o X", 2},
        {"(X -o X) -o X -o X | X -o X, X -o X, X |- X", 3},
        {"- | X -o X, X -o X, X -o X, X -o X, X |- X", 1},
        {"- | |- (X -o X) -o X -o X", 1},
        {"- | |- ((X -o X) -o X) -o X", 1},
        {"(X -o X) -o X | |- (X -o X) -o X", 1},
        {"- | |- (X -o X) -o (X -o X) -o X -o X", 1},
        {"X -o X -o X | X, X |- X", 1},
    };
    for (const auto& [text, n] : table) CHECK_MESSAGE(coherence::count(sq(text)) == n, text);
    auto total = [](std::size_t size) {
      std::uint64_t sum = 0;
      auto all = sequents_up_to(size, {"X", "Y"});
      for (const auto& s : all) sum += coherence::count(s);
      return std::make_pair(all.size(), sum);
    };
    CHECK(total(7) == std::make_pair(std::size_t{2366}, std::uint64_t{38}));
    CHECK(total(9) == std::make_pair(std::size_t{20862}, std::uint64_t{166}));
  }

  TEST_CASE("enumeration agrees with counting and has no duplicates") {
    coherence::Search search;
    for (const auto& s : sequents_up_to(7, {"X", "Y"})) {
      const auto& ds = search.enumerate(s);
      CHECK(search.count(s) == ds.size());
      for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(ds[i].conclusion() == s);
        for (std::size_t j = 0; j < i; ++j) CHECK(!(ds[i] == ds[j]));
      }
    }
  }

  TEST_CASE("cap") {
    CHECK_THROWS_AS(
        coherence::enumerate(sq("(X -o X) -o X -o X | X -o X, X -o X, X |- X"), 2),
        CapExceeded);
  }

  TEST_CASE("decide_eq") {
    cat::Equation c2 = cat::instantiate(cat::Law::C2, {}, {X(), Y()});
    CHECK(coherence::decide_eq(c2.lhs, c2.rhs).equal);
    cat::Equation c3 = cat::instantiate(cat::Law::C3, {}, {X(), Y()});
    CHECK(coherence::decide_eq(c3.lhs, c3.rhs).equal);
    const Sequent s = sq("(X -o Y) -o (X -o Z) | X -o Y, X -o X, X |- Z");
    auto two = coherence::enumerate(s);
    REQUIRE(two.size() == 2);
    cat::Derivation a = bridge::sound(foc::emb(two[0]));
    cat::Derivation b = bridge::sound(foc::emb(two[1]));
    coherence::Verdict v = coherence::decide_eq(a, b);
    CHECK(!v.equal);
    CHECK(!(v.lhs == v.rhs));
    CHECK_THROWS_AS(coherence::decide_eq(cat::id(X()), cat::id(Y())), TypeError);
  }

  TEST_CASE("generating equations are identified") {
    Rng rng(53);
    for (int l = 0; l < cat::kLawCount; ++l)
      for (int n = 0; n < 10; ++n) {
        cat::Equation eq = random_cat_instance(rng, static_cast<cat::Law>(l));
        CHECK_MESSAGE(coherence::decide_eq(eq.lhs, eq.rhs).equal, cat::name(eq.law));
      }
  }

  TEST_CASE("normal forms are fixed by the round trip") {
    coherence::Search search;
    for (const auto& s : sequents_up_to(6, {"X", "Y"})) {
      if (!s.context.empty()) continue;
      for (const auto& g : search.enumerate(s))
        CHECK(coherence::normal_form(bridge::sound(foc::emb(g))) == g);
    }
  }
}
