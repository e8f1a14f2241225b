#include <doctest.h>

#include "gen.hpp"
#include "skew/error.hpp"
#include "skew/model.hpp"
#include "skew/parse.hpp"

using namespace skew;
using namespace skew::testing;
using namespace skew::model;

namespace {
cat::Derivation cterm(const char* t, const char* s) {
  return cat::check(parse_term(t), parse_cat_sequent(s));
}
}  // namespace

TEST_SUITE("model") {
  TEST_CASE("the set M") {
    CHECK(in_M(3));
    CHECK(in_M(27));
    CHECK(in_M(19683));
    CHECK(!in_M(2));
    CHECK(!in_M(9));
    CHECK_THROWS_AS(CardObject::make(4), std::invalid_argument);
    CHECK_THROWS_AS(CardObject::make(100'000'000), CapExceeded);
  }

  TEST_CASE("spec files") {
    ModelSpec s = parse_model_spec("# demo\nmode kleisli 3\natom X 3\natom Y 27\n");
    CHECK(s.mode == Mode::Kleisli);
    CHECK(s.readers() == 3);
    CHECK(s.atoms.at("Y").n == 27);
    CHECK(parse_model_spec("mode plain\natom X 3").readers() == 1);
    CHECK_THROWS_AS(parse_model_spec("atom X 4"), SyntaxError);
    CHECK_THROWS_AS(parse_model_spec("mode lazy"), SyntaxError);
  }

  TEST_CASE("interpreting formulas") {
    ModelSpec plain = uniform(Mode::Plain, {"X", "Y"});
    CHECK(interp_formula(plain, X()).n == 3);
    CHECK(interp_formula(plain, imp(X(), X())).n == 27);
    ModelSpec kl = uniform(Mode::Kleisli, {"X", "Y"});
    CHECK(interp_formula(kl, imp(X(), Y())).n == 19683);
    CHECK_THROWS_AS(interp_formula(plain, parse_formula("(X -o X) -o X -o X")), CapExceeded);
    CHECK_THROWS_AS(interp_formula(plain, Z()), TypeError);
  }

  TEST_CASE("interpreting maps") {
    ModelSpec plain = uniform(Mode::Plain, {"X", "Y"});
    Interpretation j = interp_cat(plain, cat::j(X()));
    REQUIRE(std::holds_alternative<Element>(j));
    CHECK(std::get<Element>(j).object.n == 27);
    CHECK(std::get<Element>(j).index == 0 * 9 + 1 * 3 + 2);
    Interpretation id = interp_cat(plain, cat::id(X()));
    REQUIRE(std::holds_alternative<FiniteMap>(id));
    CHECK(std::get<FiniteMap>(id).table == std::vector<std::uint64_t>{0, 1, 2});
    cat::Derivation e = cterm("comp(j[X -o X], i[X -o X, (X -o X) -o X -o X](j[X]))", "- |- X -o X");
    CHECK(interp_cat(plain, e) == j);
    Interpretation ev = interp_cat(plain, cat::imp(cat::id(X()), cat::id(X())));
    REQUIRE(std::holds_alternative<FiniteMap>(ev));
    const FiniteMap& t = std::get<FiniteMap>(ev);
    CHECK(t.domain.n == 27);
    for (std::uint64_t x = 0; x < 27; ++x) CHECK(t.table[x] == x);
    CHECK_THROWS_AS(interp_cat(plain, cat::i(cat::j(X()), X())), CapExceeded);
  }

  TEST_CASE("Kleisli tables") {
    ModelSpec kl = uniform(Mode::Kleisli, {"X"});
    Interpretation id = interp_cat(kl, cat::id(X()));
    REQUIRE(std::holds_alternative<FiniteMap>(id));
    const FiniteMap& m = std::get<FiniteMap>(id);
    CHECK(m.codomain.n == 27);
    CHECK(m.table == std::vector<std::uint64_t>{0, 13, 26});
  }

  TEST_CASE("axioms hold") {
    for (Mode mode : {Mode::Plain, Mode::Kleisli}) {
      ModelSpec spec = uniform(mode, {"X"});
      AxiomReport r = check_axioms(spec, {X()});
      CHECK(r.ok());
      CHECK(r.checked > 0);
      AxiomReport r2 = check_axioms(spec, {X(), imp(X(), X())});
      CHECK(r2.ok());
      CHECK(r2.checked > r.checked);
    }
    AxiomReport r3 = check_axioms(uniform(Mode::Plain, {"X"}), {imp(X(), X())});
    CHECK(r3.ok());
  }

  TEST_CASE("functor laws on identities") {
    ModelSpec plain = uniform(Mode::Plain, {"X"});
    cat::Derivation idxx = cat::id(imp(X(), X()));
    cat::Derivation viaj = cterm("imp(id[X], id[X])", "X -o X |- X -o X");
    CHECK(agree(plain, idxx, viaj) == std::optional<bool>(true));
  }

  TEST_CASE("equal maps agree in the model") {
    Rng rng(67);
    for (Mode mode : {Mode::Plain, Mode::Kleisli}) {
      ModelSpec spec = uniform(mode, {"X", "Y", "Z"});
      std::size_t checked = 0;
      for (int l = 0; l < cat::kLawCount; ++l)
        for (int n = 0; n < 8; ++n) {
          cat::Equation eq = random_cat_instance(rng, static_cast<cat::Law>(l));
          std::optional<bool> same = agree(spec, eq.lhs, eq.rhs);
          if (!same) continue;
          ++checked;
          CHECK_MESSAGE(*same, cat::name(eq.law));
        }
      CHECK(checked > 20);
    }
  }
}
