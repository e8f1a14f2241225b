#include "skew/formula.hpp"

#include <fmt/format.h>

namespace skew {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(std::string_view name) {
  auto rep = std::make_shared<Rep>();
  rep->name = std::string(name);
  rep->hash = std::hash<std::string_view>{}(name);
  return Formula(std::move(rep));
}

Formula Formula::imp(Formula antecedent, Formula consequent) {
  auto rep = std::make_shared<Rep>();
  rep->size = antecedent.size() + consequent.size() + 1;
  rep->depth = 1 + std::max(antecedent.depth(), consequent.depth());
  rep->hash = mix(mix(0x51ed270b, antecedent.hash()), consequent.hash());
  rep->lhs = std::move(antecedent.rep_);
  rep->rhs = std::move(consequent.rep_);
  return Formula(std::move(rep));
}

Formula Formula::antecedent() const { return Formula(rep_->lhs); }
Formula Formula::consequent() const { return Formula(rep_->rhs); }

bool Formula::equal(const Rep* a, const Rep* b) noexcept {
  while (true) {
    if (a == b) return true;
    if (a->hash != b->hash || a->size != b->size) return false;
    if (a->lhs == nullptr || b->lhs == nullptr)
      return a->lhs == b->lhs && a->name == b->name;
    if (!equal(a->lhs.get(), b->lhs.get())) return false;
    a = a->rhs.get();
    b = b->rhs.get();
  }
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  return Formula::equal(a.rep_.get(), b.rep_.get());
}

std::size_t size(const Context& ctx) noexcept {
  std::size_t n = 0;
  for (const auto& f : ctx) n += f.size();
  return n;
}

std::size_t size(const Sequent& s) noexcept {
  return (s.stoup ? s.stoup->size() : 0) + size(s.context) + s.succedent.size();
}

Context concat(const Context& a, const Context& b) {
  Context out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Context slice(const Context& ctx, std::size_t from, std::size_t to) {
  return Context(ctx.begin() + static_cast<std::ptrdiff_t>(from),
                 ctx.begin() + static_cast<std::ptrdiff_t>(to));
}

std::string to_string(const Formula& f) {
  if (f.is_atom()) return f.name();
  auto lhs = to_string(f.antecedent());
  if (f.antecedent().is_imp()) lhs = "(" + lhs + ")";
  return lhs + " -o " + to_string(f.consequent());
}

std::string to_string(const Stoup& s) { return s ? to_string(*s) : "-"; }

std::string to_string(const Context& ctx) {
  std::string out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ctx[i]);
  }
  return out;
}

std::string to_string(const Sequent& s) {
  if (s.context.empty())
    return fmt::format("{} | |- {}", to_string(s.stoup), to_string(s.succedent));
  return fmt::format("{} | {} |- {}", to_string(s.stoup), to_string(s.context),
                     to_string(s.succedent));
}

std::size_t SequentHash::operator()(const Sequent& s) const noexcept {
  std::size_t h = s.stoup ? s.stoup->hash() : 0x2545f491;
  for (const auto& f : s.context) h = mix(h, f.hash());
  return mix(mix(h, s.context.size()), s.succedent.hash());
}

}  // namespace skew
