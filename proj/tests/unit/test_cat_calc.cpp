#include <doctest.h>

#include "gen.hpp"
#include "skew/cat_calc.hpp"
#include "skew/error.hpp"
#include "skew/parse.hpp"

using namespace skew;
using namespace skew::testing;

namespace {
cat::Derivation cterm(const char* t, const char* s) {
  return cat::check(parse_term(t), parse_cat_sequent(s));
}
}  // namespace

TEST_SUITE("cat_calc") {
  TEST_CASE("typechecking") {
    CHECK_NOTHROW(cterm("id[X]", "X |- X"));
    CHECK_NOTHROW(cterm("L[X, Y, Z]", "Y -o Z |- (X -o Y) -o (X -o Z)"));
    CHECK_NOTHROW(cterm("j[X]", "- |- X -o X"));
    CHECK_NOTHROW(cterm("comp(L[X,X,Y], i[X -o X, (X -o X) -o (X -o Y)](j[X]))",
                        "X -o Y |- X -o Y"));
    CHECK_NOTHROW(cterm("i[X -o X, (X -o X) -o X -o Y](j[X]) . L[X, X, Y]", "X -o Y |- X -o Y"));
    CHECK_THROWS_AS(cterm("i[X, X -o Y](j[X])", "Y |- Y"), TypeError);
    CHECK_THROWS_AS(cterm("id[X]", "Y |- Y"), TypeError);
    CHECK_THROWS_AS(cterm("comp(id[X], id[Y])", "X |- Y"), TypeError);
  }

  TEST_CASE("error paths point into the term") {
    try {
      cterm("comp(id[X], comp(id[X], j[Y]))", "X |- Y -o Y");
      FAIL("expected a type error");
    } catch (const TypeError& e) {
      CHECK(e.path().rfind("root", 0) == 0);
    }
  }

  TEST_CASE("jhat") {
    cat::Derivation d = cat::jhat(cat::id(X()));
    CHECK(d.conclusion() == parse_cat_sequent("- |- X -o X"));
  }

  TEST_CASE("generating equations typecheck on both sides") {
    Rng rng(7);
    for (int l = 0; l < cat::kLawCount; ++l)
      for (int n = 0; n < 5; ++n) {
        cat::Equation eq = random_cat_instance(rng, static_cast<cat::Law>(l));
        CHECK(eq.lhs.conclusion() == eq.rhs.conclusion());
        CHECK_NOTHROW(cat::validate(eq.lhs));
        CHECK_NOTHROW(cat::validate(eq.rhs));
      }
  }

  TEST_CASE("specific instances") {
    cat::Equation c2 = cat::instantiate(cat::Law::C2, {}, {X(), Y()});
    CHECK(c2.rhs == cat::id(imp(X(), Y())));
    CHECK(c2.lhs.rule() == cat::Rule::Comp);
    cat::Equation c3 = cat::instantiate(cat::Law::C3, {}, {X(), Y()});
    CHECK(c3.rhs == cat::j(imp(X(), Y())));
    cat::Equation lu = cat::instantiate(cat::Law::LeftUnit, {cat::j(X())}, {});
    CHECK(lu.rhs == cat::j(X()));
    CHECK(lu.lhs == cat::comp(cat::j(X()), cat::id(imp(X(), X()))));
    CHECK_THROWS_AS(cat::instantiate(cat::Law::C2, {}, {X()}), std::invalid_argument);
  }

  TEST_CASE("printer output re-parses") {
    Rng rng(11);
    for (const auto& d : cat_pool(rng, 80, 8))
      CHECK(cat::check(parse_term(cat::to_string(d)), d.conclusion()) == d);
  }

  TEST_CASE("stoup-free combinators") {
    CHECK(sf::from_cat(cat::j(X())) == sf::j(X()));
    sf::Derivation l = sf::from_cat(cat::L(X(), Y(), Z()));
    CHECK(l.conclusion().succedent ==
          imp(imp(Y(), Z()), imp(imp(X(), Y()), imp(X(), Z()))));
    Rng rng(5);
    for (const auto& d : cat_pool(rng, 60, 7)) {
      sf::Derivation s = sf::from_cat(d);
      CHECK(!s.conclusion().stoup);
      cat::Derivation back = sf::to_cat(s);
      CHECK(!back.conclusion().stoup);
      CHECK_NOTHROW(cat::validate(back));
      CHECK(sf::check(parse_term(sf::to_string(s)), s.conclusion()) == s);
    }
  }
}
