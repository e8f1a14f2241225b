#include <doctest.h>

#include "gen.hpp"
#include "skew/coherence.hpp"
#include "skew/error.hpp"
#include "skew/multigraph.hpp"
#include "skew/parse.hpp"

using namespace skew;
using namespace skew::testing;

namespace {

Multigraph worked() { return parse_graph("atom X\natom Y\natom Z\natom A\nclause f : X | Y |- Z\n"); }

std::vector<foc::Derivation> graph_corpus(const Multigraph& g, std::size_t max_size) {
  std::vector<foc::Derivation> out;
  coherence::Search search(coherence::Options{100000, &g, 3});
  for (const auto& s : sequents_up_to(max_size, g.atoms())) {
    const auto& ds = search.enumerate(s);
    out.insert(out.end(), ds.begin(), ds.end());
  }
  return out;
}

}  // namespace

TEST_SUITE("multigraph") {
  TEST_CASE("typechecking") {
    Multigraph w = witness_graph();
    mg::Derivation c = mg::check(w, parse_term("iota(c)"), sq("- | X |- Z"));
    CHECK(c.rule() == mg::Rule::Iota);
    CHECK_THROWS_AS(mg::check(w, parse_term("iota(c)"), sq("X | |- Z")), TypeError);
    Multigraph g = worked();
    mg::Derivation d = mg::check(g, parse_term("impC[0, 1](pass(ax), iota[f; 1](pass(ax), ax))"),
                                 sq("X | A -o Y, A |- Z"));
    CHECK(d.conclusion() == sq("X | A -o Y, A |- Z"));
    CHECK(mg::check(g, parse_term(mg::to_string(d)), d.conclusion()) == d);
    CHECK_THROWS_AS(mg::check(g, parse_term("iota(nope)"), sq("X | Y |- Z")), TypeError);
    CHECK_THROWS(parse_graph("atom X\natom Z\nclause c : - | X -o X |- Z\n"));
  }

  TEST_CASE("printer output re-parses") {
    Rng rng(59);
    Multigraph g = test_graph();
    for (const auto& d : mg_pool(rng, g, 120, 9))
      CHECK(mg::check(g, parse_term(mg::to_string(d)), d.conclusion()) == d);
  }

  TEST_CASE("cuts agree with hereditary substitution") {
    Rng rng(61);
    Multigraph g = test_graph();
    auto pool = mg_pool(rng, g, 150, 8);
    int done = 0;
    for (const auto& f : pool) {
      const Formula a = f.conclusion().succedent;
      CHECK(mg::focus(mg::scut(f, mg::emb(foc::ax_I(a)))) == mg::focus(f));
      for (const auto& h : pool) {
        if (h.conclusion().stoup && *h.conclusion().stoup == a) {
          mg::Derivation c = mg::scut(f, h);
          CHECK_NOTHROW(mg::validate(g, c));
          CHECK(mg::focus(c) == foc::scut_I(mg::focus(f), mg::focus(h)));
          ++done;
        }
        const Context& ctx = h.conclusion().context;
        for (std::size_t p = 0; p < ctx.size(); ++p) {
          if (!(ctx[p] == a)) continue;
          if (f.conclusion().stoup) {
            mg::Derivation c = mg::ccut_fma(f, h, p);
            CHECK_NOTHROW(mg::validate(g, c));
            CHECK(mg::focus(c) == foc::ccut_I(foc::pass_I(mg::focus(f)), mg::focus(h), p));
          } else {
            mg::Derivation c = mg::ccut(f, h, p);
            CHECK_NOTHROW(mg::validate(g, c));
            CHECK(mg::focus(c) == foc::ccut_I(mg::focus(f), mg::focus(h), p));
          }
          ++done;
        }
      }
    }
    CHECK(done > 20);
  }

  TEST_CASE("focus is a retraction of the embedding") {
    for (const auto& gr : {test_graph(), witness_graph(), worked()})
      for (const auto& g : graph_corpus(gr, 5)) {
        mg::Derivation e = mg::emb(g);
        CHECK_NOTHROW(mg::validate(gr, e));
        CHECK(mg::focus(e) == g);
      }
  }

  TEST_CASE("commutative conversions") {
    Multigraph g = worked();
    mg::Derivation f = mg::pass(mg::ax(Formula::atom("A")));
    mg::Derivation y = mg::pass(mg::ax(Y()));
    mg::Equation pl = mg::conv_pass_impL(f, mg::impR(mg::impL(y, mg::ax(Z()))));
    CHECK(pl.lhs.conclusion() == pl.rhs.conclusion());
    CHECK(mg::focus(pl.lhs) == mg::focus(pl.rhs));
    mg::Equation r = mg::conv_impR(f, mg::check(g, parse_term("pass(impL[1](pass(ax), ax))"),
                                                sq("- | Y -o Y, Y |- Y")),
                                   0);
    CHECK(r.lhs.conclusion() == r.rhs.conclusion());
    CHECK(mg::focus(r.lhs) == mg::focus(r.rhs));
  }

  TEST_CASE("counts") {
    Multigraph w = witness_graph();
    CHECK(mg::count(w, sq("- | X |- Z")).value == 1);
    CHECK(mg::count(w, sq("X | |- Z")).value == 0);
    CHECK(mg::count(Multigraph{}, sq("X | |- X")).value == 1);
    CHECK(mg::count(worked(), sq("X | A -o Y, A |- Z")).value >= 1);
    CHECK(mg::enumerate(w, sq("- | X |- Z")).derivations.size() == 1);
  }

  TEST_CASE("act") {
    Multigraph w = witness_graph();
    mg::ActResult r = mg::act_attempt(mg::iota(*w.find("c")));
    REQUIRE(std::holds_alternative<mg::Counterexample>(r));
    CHECK(std::get<mg::Counterexample>(r).node.label() == "c");
    for (const auto& g : graph_corpus(Multigraph{}, 6)) {
      const Sequent& s = g.conclusion();
      if (s.stoup || s.context.empty()) continue;
      mg::ActResult a = mg::act_attempt(mg::emb(g));
      REQUIRE(std::holds_alternative<mg::Derivation>(a));
      const mg::Derivation& d = std::get<mg::Derivation>(a);
      CHECK(d.conclusion().stoup == std::optional<Formula>(s.context.front()));
      CHECK(mg::focus(mg::pass(d)) == g);
    }
    mg::Derivation inner = mg::pass(mg::ax(X()));
    mg::ActResult viaR = mg::act_attempt(mg::impR(mg::pass(mg::impL(inner, mg::ax(Y())))));
    REQUIRE(std::holds_alternative<mg::Derivation>(viaR));
    CHECK(std::get<mg::Derivation>(viaR).rule() == mg::Rule::ImpR);
  }
}
