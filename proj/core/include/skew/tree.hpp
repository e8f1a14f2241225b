#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skew/formula.hpp"

namespace skew {

/// Immutable derivation tree shared by every calculus. Each node records the
/// rule, its conclusion, its premises, integer rule parameters (split
/// indices, positions, block lengths) and an optional label (generator or
/// clause name). Equality is structural.
template <class Rule>
class Tree {
 public:
  Tree(Rule rule, Sequent conclusion, std::vector<Tree> premises = {},
       std::vector<std::size_t> params = {}, std::string label = {})
      : node_(std::make_shared<const Node>(rule, std::move(conclusion), std::move(premises),
                                           std::move(params), std::move(label))) {}

  Rule rule() const noexcept { return node_->rule; }
  const Sequent& conclusion() const noexcept { return node_->conclusion; }
  const std::vector<Tree>& premises() const noexcept { return node_->premises; }
  const Tree& premise(std::size_t i) const { return node_->premises.at(i); }
  const std::vector<std::size_t>& params() const noexcept { return node_->params; }
  std::size_t param(std::size_t i) const { return node_->params.at(i); }
  const std::string& label() const noexcept { return node_->label; }

  /// Number of rule applications.
  std::size_t size() const noexcept { return node_->size; }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const Tree& a, const Tree& b) noexcept {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    return x.hash == y.hash && x.size == y.size && x.rule == y.rule &&
           x.params == y.params && x.label == y.label && x.premises == y.premises &&
           x.conclusion == y.conclusion;
  }

 private:
  struct Node {
    Node(Rule r, Sequent c, std::vector<Tree> p, std::vector<std::size_t> ps, std::string l)
        : rule(r), conclusion(std::move(c)), premises(std::move(p)), params(std::move(ps)),
          label(std::move(l)) {
      std::size_t h = SequentHash{}(conclusion) ^ (static_cast<std::size_t>(rule) * 0x9e3779b1);
      auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
      for (std::size_t v : params) mix(v);
      mix(std::hash<std::string>{}(label));
      for (const Tree& t : premises) {
        size += t.size();
        mix(t.hash());
      }
      hash = h;
    }
    Rule rule;
    Sequent conclusion;
    std::vector<Tree> premises;
    std::vector<std::size_t> params;
    std::string label;
    std::size_t size = 1;
    std::size_t hash = 0;
  };

  std::shared_ptr<const Node> node_;
};

struct TreeHash {
  template <class Rule>
  std::size_t operator()(const Tree<Rule>& t) const noexcept {
    return t.hash();
  }
};

/// Path of the i-th premise below `path`, as reported in TypeError.
inline std::string sub_path(const std::string& path, std::size_t i) {
  return path + "." + std::to_string(i);
}

}  // namespace skew
