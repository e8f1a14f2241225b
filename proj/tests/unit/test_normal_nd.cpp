#include <doctest.h>

#include "gen.hpp"
#include "skew/bridge.hpp"
#include "skew/coherence.hpp"
#include "skew/error.hpp"
#include "skew/normal_nd.hpp"
#include "skew/parse.hpp"

using namespace skew;
using namespace skew::testing;

namespace {

nf::Derivation atomic_ax(const Formula& x) { return nf::p2nf(nf::ne2p(nf::ax(x))); }

std::vector<nf::Derivation> nf_corpus(std::size_t max_size) {
  std::vector<nf::Derivation> out;
  coherence::Search search;
  for (const auto& s : sequents_up_to(max_size, {"X", "Y"}))
    for (const auto& g : search.enumerate(s)) out.push_back(bridge::I2nf(g));
  return out;
}

}  // namespace

TEST_SUITE("normal_nd") {
  TEST_CASE("phase discipline") {
    CHECK_THROWS_AS(nf::p2nf(nf::ne2p(nf::ax(imp(X(), Y())))), TypeError);
    CHECK_NOTHROW(nf::check(parse_term("impI(p2nf(pass(ne2p(ax))))"), sq("- | |- X -o X")));
    CHECK_NOTHROW(nf::check(parse_term("p2nf(ne2p(impE[0](ax, p2nf(pass(ne2p(ax))))))"),
                            sq("X -o Y | X |- Y")));
  }

  TEST_CASE("evaluation") {
    nf::Environment env = nf::gamma(X(), {});
    REQUIRE(env.stoup);
    CHECK(nf::reify(nf::eval(nd::ax(X()), env)) == atomic_ax(X()));
    nf::Environment two = nf::gamma(std::nullopt, {X(), Y()});
    CHECK(two.entries.size() == 2);
    CHECK(nf::reify(two.entries[0]) == nf::reify(nf::sem_pass(nf::reflect(nf::ax(X())))));
  }

  TEST_CASE("reflect and reify") {
    CHECK(nf::reify(nf::reflect(nf::ax(X()))) == atomic_ax(X()));
    const Formula xy = imp(X(), Y());
    nf::Derivation id = nf::reify(nf::reflect(nf::ax(xy)));
    CHECK(id == bridge::I2nf(foc::ax_I(xy)));
    CHECK(coherence::count(Sequent{xy, {}, xy}) == 1);
    nf::Derivation arg = nf::p2nf(nf::pass(nf::ne2p(nf::ax(X()))));
    nf::Derivation app = nf::impE(nf::ax(xy), arg);
    CHECK(nf::reify(nf::reflect(app)) == nf::p2nf(nf::ne2p(app)));
  }

  TEST_CASE("sem_pass") {
    nf::Value v = nf::Value::atomic(atomic_ax(X()));
    CHECK(nf::reify(nf::sem_pass(v)) == nf::p2nf(nf::pass(nf::ne2p(nf::ax(X())))));
    const Formula xy = imp(X(), Y());
    nf::Derivation moved = nf::reify(nf::sem_pass(nf::reflect(nf::ax(xy))));
    CHECK(moved == bridge::I2nf(foc::pass_I(foc::ax_I(xy))));
  }

  TEST_CASE("nbe") {
    CHECK(nf::nbe(nd::ax(X())) == atomic_ax(X()));
    nd::Derivation idl = nd::impI(nd::pass(nd::ax(X())));
    CHECK(nf::nbe(idl) == nf::impI(nf::p2nf(nf::pass(nf::ne2p(nf::ax(X()))))));
    Rng rng(37);
    for (const auto& f : nd_pool(rng, 150, 8)) {
      if (!f.conclusion().succedent.is_imp()) continue;
      nd::Equation eta = nd::eta(f);
      CHECK(nf::nbe(eta.lhs) == nf::nbe(eta.rhs));
    }
  }

  TEST_CASE("nbe is a retraction of the embedding") {
    for (const auto& g : nf_corpus(6)) {
      nd::Derivation d = nf::emb(g);
      CHECK_NOTHROW(nd::validate(d));
      CHECK(nf::nbe(d) == g);
    }
  }

  TEST_CASE("printer output re-parses") {
    for (const auto& g : nf_corpus(5))
      CHECK(nf::check(parse_term(nf::to_string(g)), g.conclusion()) == g);
  }
}
