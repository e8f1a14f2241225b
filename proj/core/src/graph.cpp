#include "skew/graph.hpp"

#include <algorithm>
#include <sstream>

#include "skew/error.hpp"
#include "skew/parse.hpp"

namespace skew {

Sequent Clause::sequent() const {
  Sequent s{std::nullopt, {}, Formula::atom(conclusion)};
  if (stoup) s.stoup = Formula::atom(*stoup);
  for (const auto& p : premises) s.context.push_back(Formula::atom(p));
  return s;
}

Multigraph::Multigraph(std::vector<std::string> atoms, std::vector<Clause> clauses)
    : atoms_(std::move(atoms)), clauses_(std::move(clauses)) {
  auto declared = [&](const std::string& a) {
    return std::find(atoms_.begin(), atoms_.end(), a) != atoms_.end();
  };
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const Clause& c = clauses_[i];
    for (std::size_t j = 0; j < i; ++j)
      if (clauses_[j].name == c.name)
        throw std::invalid_argument("duplicate clause name '" + c.name + "'");
    auto check = [&](const std::string& a) {
      if (!declared(a))
        throw std::invalid_argument("clause '" + c.name + "' uses undeclared atom '" + a + "'");
    };
    if (c.stoup) check(*c.stoup);
    for (const auto& p : c.premises) check(p);
    check(c.conclusion);
  }
}

const Clause* Multigraph::find(std::string_view name) const noexcept {
  for (const auto& c : clauses_)
    if (c.name == name) return &c;
  return nullptr;
}

Multigraph parse_graph(std::string_view text) {
  std::vector<std::string> atoms;
  std::vector<Clause> clauses;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string kw;
    if (!(words >> kw)) continue;
    if (kw == "atom") {
      std::string name;
      if (!(words >> name)) throw SyntaxError("atom name expected", line_start);
      if (parse_formula(name).is_imp()) throw SyntaxError("atom name expected", line_start);
      atoms.push_back(name);
    } else if (kw == "clause") {
      std::string name, colon;
      if (!(words >> name >> colon) || colon != ":")
        throw SyntaxError("expected 'clause <name> : <sequent>'", line_start);
      std::string rest;
      std::getline(words, rest);
      std::optional<Sequent> parsed;
      try {
        parsed = parse_sequent(rest);
      } catch (const SyntaxError& e) {
        throw SyntaxError(std::string("clause '") + name + "': " + e.what(), line_start);
      }
      const Sequent& s = *parsed;
      Clause c{name, std::nullopt, {}, {}};
      auto atom_of = [&](const Formula& f) {
        if (!f.is_atom())
          throw SyntaxError("clause '" + name + "' must only mention atoms", line_start);
        return f.name();
      };
      if (s.stoup) c.stoup = atom_of(*s.stoup);
      for (const auto& f : s.context) c.premises.push_back(atom_of(f));
      c.conclusion = atom_of(s.succedent);
      clauses.push_back(std::move(c));
    } else {
      throw SyntaxError("unknown declaration '" + kw + "'", line_start);
    }
  }
  return Multigraph(std::move(atoms), std::move(clauses));
}

std::string to_string(const Multigraph& g) {
  std::string out;
  for (const auto& a : g.atoms()) out += "atom " + a + "\n";
  for (const auto& c : g.clauses()) out += "clause " + c.name + " : " + to_string(c.sequent()) + "\n";
  return out;
}

}  // namespace skew
