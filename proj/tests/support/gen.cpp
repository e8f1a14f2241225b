#include "gen.hpp"

#include <functional>

#include "skew/bridge.hpp"
#include "skew/coherence.hpp"
#include "skew/error.hpp"
#include "skew/focused.hpp"
#include "skew/parse.hpp"

namespace skew::testing {

Formula X() { return Formula::atom("X"); }
Formula Y() { return Formula::atom("Y"); }
Formula Z() { return Formula::atom("Z"); }
Formula imp(const Formula& a, const Formula& b) { return Formula::imp(a, b); }
Sequent sq(const char* text) { return parse_sequent(text); }

std::size_t below(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Formula random_formula(Rng& rng, std::size_t depth, const std::vector<std::string>& atoms) {
  if (depth == 0 || coin(rng, 0.35)) return Formula::atom(pick(rng, atoms));
  Formula a = random_formula(rng, depth - 1, atoms);
  Formula b = random_formula(rng, depth - 1, atoms);
  return Formula::imp(a, b);
}

std::vector<Formula> formulas_up_to(std::size_t max_size, const std::vector<std::string>& atoms) {
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  if (max_size >= 1)
    for (const auto& a : atoms) by_size[1].push_back(Formula::atom(a));
  for (std::size_t n = 3; n <= max_size; ++n)
    for (std::size_t i = 1; i + 1 < n; ++i)
      for (const auto& a : by_size[i])
        for (const auto& b : by_size[n - 1 - i]) by_size[n].push_back(Formula::imp(a, b));
  std::vector<Formula> out;
  for (const auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Sequent> sequents_up_to(std::size_t max_size, const std::vector<std::string>& atoms) {
  const std::vector<Formula> fs = formulas_up_to(max_size, atoms);
  std::vector<Sequent> out;
  std::function<void(Stoup, Context, std::size_t)> contexts = [&](Stoup s, Context ctx,
                                                                  std::size_t left) {
    for (const auto& c : fs)
      if (c.size() <= left) out.push_back(Sequent{s, ctx, c});
    for (const auto& a : fs)
      if (a.size() + 1 <= left) {
        Context next = ctx;
        next.push_back(a);
        contexts(s, next, left - a.size());
      }
  };
  contexts(std::nullopt, {}, max_size);
  for (const auto& s : fs)
    if (s.size() < max_size) contexts(s, {}, max_size - s.size());
  return out;
}

std::optional<cat::Derivation> random_map(Rng& rng, const Stoup& s, const Formula& c,
                                          std::size_t cap) {
  try {
    coherence::Search search(coherence::Options{cap, nullptr, 16});
    const auto& all = search.enumerate(Sequent{s, {}, c});
    if (all.empty()) return std::nullopt;
    return bridge::sound(foc::emb(pick(rng, all)));
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

namespace {

const std::vector<std::string> kAtoms{"X", "Y", "Z"};

template <class D, class Step>
std::vector<D> grow(Rng& rng, std::vector<D> pool, std::size_t n, std::size_t max_size,
                    Step step) {
  for (std::size_t attempts = 0; pool.size() < n && attempts < 200 * n; ++attempts) {
    std::optional<D> d;
    try {
      d = step(pool);
    } catch (const TypeError&) {
    }
    if (d && d->size() <= max_size) pool.push_back(*d);
  }
  return pool;
}

template <class D, class Pred>
std::optional<D> pick_if(Rng& rng, const std::vector<D>& pool, Pred pred) {
  std::vector<const D*> hits;
  for (const auto& d : pool)
    if (pred(d)) hits.push_back(&d);
  if (hits.empty()) return std::nullopt;
  return *hits[below(rng, hits.size())];
}

bool tight(const Sequent& s) { return s.stoup.has_value(); }

}  // namespace

std::vector<seq::Derivation> seq_pool(Rng& rng, std::size_t n, std::size_t max_size,
                                      std::size_t depth) {
  std::vector<seq::Derivation> pool;
  for (int k = 0; k < 6; ++k) {
    Formula a = random_formula(rng, depth, kAtoms);
    pool.push_back(seq::ax(a));
    pool.push_back(seq::pass(seq::ax(a)));
  }
  return grow(rng, pool, n, max_size, [&](const auto& p) -> std::optional<seq::Derivation> {
    auto is_tight = [](const seq::Derivation& d) { return tight(d.conclusion()); };
    auto is_loose = [](const seq::Derivation& d) { return !tight(d.conclusion()); };
    switch (below(rng, 3)) {
      case 0:
        if (auto t = pick_if(rng, p, is_tight)) return seq::pass(*t);
        return std::nullopt;
      case 1:
        if (auto t = pick_if(rng, p, [](const auto& d) { return !d.conclusion().context.empty(); }))
          return seq::impR(*t);
        return std::nullopt;
      default: {
        auto f = pick_if(rng, p, is_loose);
        auto g = pick_if(rng, p, is_tight);
        if (f && g) return seq::impL(*f, *g);
        return std::nullopt;
      }
    }
  });
}

std::vector<nd::Derivation> nd_pool(Rng& rng, std::size_t n, std::size_t max_size,
                                    std::size_t depth) {
  std::vector<nd::Derivation> pool;
  for (int k = 0; k < 6; ++k) {
    Formula a = random_formula(rng, depth, kAtoms);
    pool.push_back(nd::ax(a));
    pool.push_back(nd::pass(nd::ax(a)));
  }
  return grow(rng, pool, n, max_size, [&](const auto& p) -> std::optional<nd::Derivation> {
    switch (below(rng, 4)) {
      case 0:
        if (auto t = pick_if(rng, p, [](const auto& d) { return tight(d.conclusion()); }))
          return nd::pass(*t);
        return std::nullopt;
      case 1:
        if (auto t = pick_if(rng, p, [](const auto& d) { return !d.conclusion().context.empty(); }))
          return nd::impI(*t);
        return std::nullopt;
      default: {
        auto f = pick_if(rng, p, [](const auto& d) { return d.conclusion().succedent.is_imp(); });
        if (!f) return std::nullopt;
        const Formula a = f->conclusion().succedent.antecedent();
        auto g = pick_if(rng, p, [&](const auto& d) {
          return !tight(d.conclusion()) && d.conclusion().succedent == a;
        });
        return nd::impE(*f, g ? *g : nd::pass(nd::ax(a)));
      }
    }
  });
}

std::vector<cat::Derivation> cat_pool(Rng& rng, std::size_t n, std::size_t max_size,
                                      std::size_t depth) {
  std::vector<cat::Derivation> pool;
  auto fm = [&] { return random_formula(rng, depth, kAtoms); };
  for (int k = 0; k < 4; ++k) {
    pool.push_back(cat::id(fm()));
    pool.push_back(cat::j(fm()));
    pool.push_back(cat::L(fm(), fm(), fm()));
    pool.push_back(cat::i(cat::j(fm()), fm()));
  }
  return grow(rng, pool, n, max_size, [&](const auto& p) -> std::optional<cat::Derivation> {
    auto is_tight = [](const cat::Derivation& d) { return tight(d.conclusion()); };
    switch (below(rng, 4)) {
      case 0:
      case 1: {
        const auto& f = pick(rng, p);
        const Formula b = f.conclusion().succedent;
        auto g = pick_if(rng, p, [&](const auto& d) {
          return d.conclusion().stoup && *d.conclusion().stoup == b;
        });
        if (g) return cat::comp(f, *g);
        return std::nullopt;
      }
      case 2: {
        auto f = pick_if(rng, p, is_tight);
        auto g = pick_if(rng, p, is_tight);
        if (f && g) return cat::imp(*f, *g);
        return std::nullopt;
      }
      default:
        if (auto e = pick_if(rng, p, [](const auto& d) { return !tight(d.conclusion()); }))
          return cat::i(*e, fm());
        return std::nullopt;
    }
  });
}

std::vector<mg::Derivation> mg_pool(Rng& rng, const Multigraph& g, std::size_t n,
                                    std::size_t max_size) {
  std::vector<mg::Derivation> pool;
  for (const auto& a : g.atoms()) {
    pool.push_back(mg::ax(Formula::atom(a)));
    pool.push_back(mg::pass(mg::ax(Formula::atom(a))));
  }
  for (const auto& c : g.clauses()) pool.push_back(mg::iota(c));
  auto is_tight = [](const mg::Derivation& d) { return tight(d.conclusion()); };
  auto is_loose = [](const mg::Derivation& d) { return !tight(d.conclusion()); };
  auto has_ctx = [](const mg::Derivation& d) { return !d.conclusion().context.empty(); };
  return grow(rng, pool, n, max_size, [&](const auto& p) -> std::optional<mg::Derivation> {
    switch (below(rng, 5)) {
      case 0:
        if (auto t = pick_if(rng, p, is_tight)) return mg::pass(*t);
        return std::nullopt;
      case 1:
        if (auto t = pick_if(rng, p, has_ctx)) return mg::impR(*t);
        return std::nullopt;
      case 2: {
        auto f = pick_if(rng, p, is_loose);
        auto h = pick_if(rng, p, is_tight);
        if (f && h) return mg::impL(*f, *h);
        return std::nullopt;
      }
      case 3: {
        auto f = pick_if(rng, p, is_loose);
        auto h = pick_if(rng, p, has_ctx);
        if (f && h) return mg::impC(*f, *h, below(rng, h->conclusion().context.size()));
        return std::nullopt;
      }
      default: {
        const Clause& c = pick(rng, g.clauses());
        const Sequent cs = c.sequent();
        std::vector<mg::Derivation> args;
        for (const auto& y : cs.context) {
          auto a = pick_if(rng, p, [&](const auto& d) {
            return is_loose(d) && d.conclusion().succedent == y;
          });
          args.push_back(a ? *a : mg::pass(mg::ax(y)));
        }
        auto k = pick_if(rng, p, [&](const auto& d) {
          return d.conclusion().stoup && *d.conclusion().stoup == cs.succedent;
        });
        return mg::iota(c, args, k ? *k : mg::ax(cs.succedent));
      }
    }
  });
}

namespace {

Formula fm(Rng& rng) { return random_formula(rng, 2, kAtoms); }

cat::Derivation map_from(Rng& rng, const Stoup& s) {
  for (int k = 0; k < 30; ++k)
    if (auto m = random_map(rng, s, fm(rng))) return *m;
  if (!s) return cat::j(fm(rng));
  return cat::id(*s);
}

cat::Derivation map_to(Rng& rng, const Formula& c) {
  for (int k = 0; k < 30; ++k)
    if (auto m = random_map(rng, fm(rng), c)) return *m;
  return cat::id(c);
}

cat::Derivation loose_map(Rng& rng) {
  for (int k = 0; k < 30; ++k)
    if (auto m = random_map(rng, std::nullopt, fm(rng))) return *m;
  return cat::j(fm(rng));
}

cat::Derivation any_map(Rng& rng) {
  return coin(rng, 0.25) ? loose_map(rng) : map_from(rng, fm(rng));
}

Formula src(const cat::Derivation& d) { return *d.conclusion().stoup; }
Formula tgt(const cat::Derivation& d) { return d.conclusion().succedent; }

}  // namespace

cat::Equation random_cat_instance(Rng& rng, cat::Law law) {
  using cat::Law;
  switch (law) {
    case Law::LeftUnit: return cat::instantiate(law, {any_map(rng)}, {});
    case Law::RightUnit: return cat::instantiate(law, {map_from(rng, fm(rng))}, {});
    case Law::Assoc: {
      cat::Derivation f = any_map(rng);
      cat::Derivation g = map_from(rng, tgt(f));
      cat::Derivation h = map_from(rng, tgt(g));
      return cat::instantiate(law, {f, g, h}, {});
    }
    case Law::ImpId:
    case Law::C2:
    case Law::C3: return cat::instantiate(law, {}, {fm(rng), fm(rng)});
    case Law::ImpComp: {
      cat::Derivation f = map_from(rng, fm(rng));
      cat::Derivation g = map_from(rng, fm(rng));
      cat::Derivation h = map_to(rng, src(f));
      cat::Derivation k = map_from(rng, tgt(g));
      return cat::instantiate(law, {f, g, h, k}, {});
    }
    case Law::JNat: return cat::instantiate(law, {map_from(rng, fm(rng))}, {});
    case Law::INat: {
      cat::Derivation e = loose_map(rng);
      cat::Derivation g = map_from(rng, fm(rng));
      cat::Derivation h = map_from(rng, tgt(e));
      return cat::instantiate(law, {e, g, h}, {});
    }
    case Law::LNat:
      return cat::instantiate(
          law, {map_from(rng, fm(rng)), map_from(rng, fm(rng)), map_from(rng, fm(rng))}, {});
    case Law::C1: return cat::instantiate(law, {loose_map(rng)}, {});
    case Law::C4: return cat::instantiate(law, {loose_map(rng)}, {fm(rng), fm(rng)});
    case Law::C5: return cat::instantiate(law, {}, {fm(rng), fm(rng), fm(rng), fm(rng)});
  }
  throw InternalError("unknown law");
}

Multigraph test_graph() {
  return parse_graph(
      "atom X\natom Y\natom Z\n"
      "clause f : X | Y |- Z\n"
      "clause g : - | Z |- Y\n"
      "clause h : Z | X, X |- X\n");
}

Multigraph witness_graph() {
  return parse_graph("atom X\natom Z\nclause c : - | X |- Z\n");
}

}  // namespace skew::testing
