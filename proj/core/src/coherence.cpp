#include "skew/coherence.hpp"

#include <algorithm>
#include <limits>

#include "skew/bridge.hpp"
#include "skew/error.hpp"

namespace skew::coherence {

using foc::Phase;

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw CapExceeded("count overflows 64 bits");
  return a + b;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw CapExceeded("count overflows 64 bits");
  return a * b;
}

bool matches(const Clause& c, const Stoup& s) {
  if (!c.stoup) return !s;
  return s && s->is_atom() && s->name() == *c.stoup;
}

// True if a tight chain of clauses leads from atom `from` to the atomic goal.
bool reaches(const Multigraph& g, const std::string& from, const Formula& goal) {
  if (!goal.is_atom()) return false;
  std::vector<std::string> todo{from}, seen{from};
  while (!todo.empty()) {
    std::string a = todo.back();
    todo.pop_back();
    if (a == goal.name()) return true;
    for (const Clause& c : g.clauses())
      if (c.stoup && *c.stoup == a &&
          std::find(seen.begin(), seen.end(), c.conclusion) == seen.end()) {
        seen.push_back(c.conclusion);
        todo.push_back(c.conclusion);
      }
  }
  return false;
}

// Calls visit(lengths) for every way to cut `total` formulas into n blocks
// followed by a remainder, left-short-first.
template <class F>
void compositions(std::size_t n, std::size_t total, std::vector<std::size_t>& lens, F&& visit) {
  if (lens.size() == n) {
    visit(lens);
    return;
  }
  std::size_t used = 0;
  for (std::size_t l : lens) used += l;
  for (std::size_t l = 0; used + l <= total; ++l) {
    lens.push_back(l);
    compositions(n, total, lens, visit);
    lens.pop_back();
  }
}

}  // namespace

std::size_t Search::KeyHash::operator()(const Key& k) const noexcept {
  return SequentHash{}(k.seq) * 31 + static_cast<std::size_t>(k.phase) * 7 + k.fuel;
}

Search::Search(Options opts) : opts_(opts) {}

void Search::push(List& out, foc::Derivation d) const {
  if (out.size() >= opts_.cap)
    throw CapExceeded("more than " + std::to_string(opts_.cap) + " derivations");
  out.push_back(std::move(d));
}

const std::vector<foc::Derivation>& Search::enumerate(const Sequent& s, Phase phase) {
  return list(phase, s, opts_.graph ? opts_.fuel : 0);
}

std::uint64_t Search::count(const Sequent& s, Phase phase) {
  return number(phase, s, opts_.graph ? opts_.fuel : 0);
}

const Search::List& Search::list(Phase phase, const Sequent& s, std::size_t fuel) {
  Key key{phase, fuel, s};
  if (auto it = lists_.find(key); it != lists_.end()) return *it->second;
  auto out = std::make_unique<List>();
  const Context& ctx = s.context;
  switch (phase) {
    case Phase::I:
      if (s.succedent.is_imp()) {
        Sequent sub{s.stoup, ctx, s.succedent.consequent()};
        sub.context.push_back(s.succedent.antecedent());
        for (const auto& f : list(Phase::I, sub, fuel)) push(*out, foc::impR(f));
      } else {
        for (const auto& p : list(Phase::P, s, fuel)) push(*out, foc::p2i(p));
      }
      break;
    case Phase::P:
      if (!s.stoup && !ctx.empty()) {
        Sequent sub{ctx.front(), slice(ctx, 1, ctx.size()), s.succedent};
        for (const auto& p : list(Phase::P, sub, fuel)) push(*out, foc::pass(p));
      }
      if (s.stoup || opts_.graph)
        for (const auto& h : list(Phase::F, s, fuel)) push(*out, foc::f2p(h));
      break;
    case Phase::F: {
      if (s.stoup && s.stoup->is_atom() && ctx.empty() && *s.stoup == s.succedent)
        push(*out, foc::ax(s.succedent));
      if (s.stoup && s.stoup->is_imp()) {
        const Formula& a = s.stoup->antecedent();
        const Formula& b = s.stoup->consequent();
        for (std::size_t k = 0; k <= ctx.size(); ++k) {
          const List& fs = list(Phase::I, {std::nullopt, slice(ctx, 0, k), a}, fuel);
          if (fs.empty()) continue;
          const List& gs = list(Phase::F, {b, slice(ctx, k, ctx.size()), s.succedent}, fuel);
          for (const auto& f : fs)
            for (const auto& g : gs) push(*out, foc::impL(f, g));
        }
      }
      if (opts_.graph) {
        for (const Clause& c : opts_.graph->clauses()) {
          if (!matches(c, s.stoup) || !reaches(*opts_.graph, c.conclusion, s.succedent)) continue;
          if (fuel == 0) {
            truncated_ = true;
            continue;
          }
          Sequent cs = c.sequent();
          std::size_t n = cs.context.size();
          std::vector<std::size_t> lens;
          compositions(n, ctx.size(), lens, [&](const std::vector<std::size_t>& ls) {
            std::vector<const List*> arg_lists;
            std::size_t off = 0;
            for (std::size_t i = 0; i < n; ++i) {
              const List& l = list(Phase::I, {std::nullopt, slice(ctx, off, off + ls[i]), cs.context[i]},
                                   fuel - 1);
              if (l.empty()) return;
              arg_lists.push_back(&l);
              off += ls[i];
            }
            const List& conts = list(Phase::F, {cs.succedent, slice(ctx, off, ctx.size()), s.succedent},
                                     fuel - 1);
            if (conts.empty()) return;
            std::vector<std::size_t> idx(n, 0);
            while (true) {
              std::vector<foc::Derivation> args;
              for (std::size_t i = 0; i < n; ++i) args.push_back((*arg_lists[i])[idx[i]]);
              for (const auto& k : conts) push(*out, foc::iota(c, args, k));
              std::size_t i = n;
              while (i > 0) {
                --i;
                if (++idx[i] < arg_lists[i]->size()) break;
                idx[i] = 0;
                if (i == 0) return;
              }
              if (n == 0) return;
            }
          });
        }
      }
      break;
    }
  }
  return *lists_.emplace(std::move(key), std::move(out)).first->second;
}

std::uint64_t Search::number(Phase phase, const Sequent& s, std::size_t fuel) {
  Key key{phase, fuel, s};
  if (auto it = counts_.find(key); it != counts_.end()) return it->second;
  std::uint64_t total = 0;
  const Context& ctx = s.context;
  switch (phase) {
    case Phase::I:
      if (s.succedent.is_imp()) {
        Sequent sub{s.stoup, ctx, s.succedent.consequent()};
        sub.context.push_back(s.succedent.antecedent());
        total = number(Phase::I, sub, fuel);
      } else {
        total = number(Phase::P, s, fuel);
      }
      break;
    case Phase::P:
      if (!s.stoup && !ctx.empty())
        total = number(Phase::P, {ctx.front(), slice(ctx, 1, ctx.size()), s.succedent}, fuel);
      if (s.stoup || opts_.graph) total = add(total, number(Phase::F, s, fuel));
      break;
    case Phase::F:
      if (s.stoup && s.stoup->is_atom() && ctx.empty() && *s.stoup == s.succedent) total = 1;
      if (s.stoup && s.stoup->is_imp()) {
        const Formula& a = s.stoup->antecedent();
        const Formula& b = s.stoup->consequent();
        for (std::size_t k = 0; k <= ctx.size(); ++k) {
          std::uint64_t nf = number(Phase::I, {std::nullopt, slice(ctx, 0, k), a}, fuel);
          if (nf == 0) continue;
          std::uint64_t ng = number(Phase::F, {b, slice(ctx, k, ctx.size()), s.succedent}, fuel);
          total = add(total, mul(nf, ng));
        }
      }
      if (opts_.graph) {
        for (const Clause& c : opts_.graph->clauses()) {
          if (!matches(c, s.stoup) || !reaches(*opts_.graph, c.conclusion, s.succedent)) continue;
          if (fuel == 0) {
            truncated_ = true;
            continue;
          }
          Sequent cs = c.sequent();
          std::size_t n = cs.context.size();
          std::vector<std::size_t> lens;
          compositions(n, ctx.size(), lens, [&](const std::vector<std::size_t>& ls) {
            std::uint64_t prod = 1;
            std::size_t off = 0;
            for (std::size_t i = 0; i < n && prod != 0; ++i) {
              prod = mul(prod, number(Phase::I,
                                      {std::nullopt, slice(ctx, off, off + ls[i]), cs.context[i]},
                                      fuel - 1));
              off += ls[i];
            }
            if (prod == 0) return;
            prod = mul(prod, number(Phase::F, {cs.succedent, slice(ctx, off, ctx.size()), s.succedent},
                                    fuel - 1));
            total = add(total, prod);
          });
        }
      }
      break;
  }
  counts_.emplace(std::move(key), total);
  return total;
}

std::vector<foc::Derivation> enumerate(const Sequent& s, std::size_t cap) {
  Options opts;
  opts.cap = cap;
  Search search(opts);
  return search.enumerate(s);
}

std::uint64_t count(const Sequent& s) {
  Search search;
  return search.count(s);
}

foc::Derivation normal_form(const cat::Derivation& d) { return foc::focus(bridge::cmplt(d)); }

Verdict decide_eq(const cat::Derivation& a, const cat::Derivation& b) {
  if (!(a.conclusion() == b.conclusion()))
    throw TypeError("decide_eq: " + to_string(a.conclusion()) + " and " +
                    to_string(b.conclusion()) + " are different homsets");
  foc::Derivation x = normal_form(a);
  foc::Derivation y = normal_form(b);
  bool eq = x == y;
  return {eq, std::move(x), std::move(y)};
}

}  // namespace skew::coherence
