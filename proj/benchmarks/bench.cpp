#include <benchmark/benchmark.h>

#include "skew/bridge.hpp"
#include "skew/cat_calc.hpp"
#include "skew/coherence.hpp"
#include "skew/focused.hpp"
#include "skew/model.hpp"
#include "skew/nat_ded.hpp"
#include "skew/normal_nd.hpp"
#include "skew/parse.hpp"
#include "skew/seq_calc.hpp"

using namespace skew;

namespace {

const char* const kGoals[] = {
    "(X -o Y) -o (X -o Z) | X -o Y, X -o X, X |- Z",
    "(X -o X) -o X -o X | X -o X, X -o X, X |- X",
    "(X -o X) -o (X -o X) -o X -o X | |- (X -o X) -o (X -o X) -o X -o X",
};

std::vector<foc::Derivation> derivations(int which) {
  return coherence::Search(coherence::Options{}).enumerate(parse_sequent(kGoals[which]));
}

void BM_Enumerate(benchmark::State& st) {
  Sequent s = parse_sequent(kGoals[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(coherence::Search(coherence::Options{}).enumerate(s));
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 2);

void BM_Count(benchmark::State& st) {
  Sequent s = parse_sequent(kGoals[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(coherence::Search(coherence::Options{}).count(s));
}
BENCHMARK(BM_Count)->DenseRange(0, 2);

void BM_Focus(benchmark::State& st) {
  std::vector<seq::Derivation> in;
  for (const auto& d : derivations(st.range(0))) in.push_back(foc::emb(d));
  for (auto _ : st)
    for (const auto& d : in) benchmark::DoNotOptimize(foc::focus(d));
}
BENCHMARK(BM_Focus)->DenseRange(0, 2);

void BM_Hered(benchmark::State& st) {
  std::vector<nd::Derivation> in;
  for (const auto& d : derivations(st.range(0))) in.push_back(foc::emb_nd(d));
  for (auto _ : st)
    for (const auto& d : in) benchmark::DoNotOptimize(foc::hered(d));
}
BENCHMARK(BM_Hered)->DenseRange(0, 2);

void BM_Nbe(benchmark::State& st) {
  std::vector<nd::Derivation> in;
  for (const auto& d : derivations(st.range(0))) in.push_back(foc::emb_nd(d));
  for (auto _ : st)
    for (const auto& d : in) benchmark::DoNotOptimize(nf::nbe(d));
}
BENCHMARK(BM_Nbe)->DenseRange(0, 2);

void BM_DecideEq(benchmark::State& st) {
  std::vector<cat::Derivation> in;
  for (const auto& d : derivations(st.range(0))) in.push_back(bridge::sound(foc::emb(d)));
  for (auto _ : st)
    for (const auto& a : in)
      for (const auto& b : in) benchmark::DoNotOptimize(coherence::decide_eq(a, b));
}
BENCHMARK(BM_DecideEq)->DenseRange(0, 2);

void BM_ModelInterp(benchmark::State& st) {
  model::ModelSpec spec = model::uniform(st.range(0) ? model::Mode::Kleisli : model::Mode::Plain,
                                         {"X", "Y", "Z"});
  std::vector<cat::Derivation> in;
  const std::vector<std::pair<const char*, const char*>> plain = {
      {"id[X -o Y]", "X -o Y |- X -o Y"},
      {"imp(id[X], id[Y]) . id[X -o Y]", "X -o Y |- X -o Y"},
      {"j[X]", "- |- X -o X"},
  };
  const std::vector<std::pair<const char*, const char*>> kleisli = {
      {"id[X]", "X |- X"},
      {"id[X] . id[X]", "X |- X"},
  };
  for (const auto& [t, s] : st.range(0) ? kleisli : plain) in.push_back(cat::check(parse_term(t), parse_cat_sequent(s)));
  for (auto _ : st)
    for (const auto& d : in) benchmark::DoNotOptimize(model::interp_cat(spec, d));
}
BENCHMARK(BM_ModelInterp)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
