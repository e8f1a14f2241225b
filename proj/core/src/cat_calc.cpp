#include "skew/cat_calc.hpp"

#include <stdexcept>

#include "skew/error.hpp"

namespace skew::cat {

namespace {

Sequent seq(Stoup s, Formula c) { return {std::move(s), {}, std::move(c)}; }

const Formula& stoup_formula(const Derivation& d, const char* who) {
  if (!d.conclusion().stoup)
    throw TypeError(std::string(who) + " needs a map with a stoup, got " +
                    to_string(d.conclusion()));
  return *d.conclusion().stoup;
}

}  // namespace

Derivation id(const Formula& a) { return Derivation(Rule::Id, seq(a, a)); }

Derivation comp(const Derivation& f, const Derivation& g) {
  const Formula& b = stoup_formula(g, "comp");
  if (!(f.conclusion().succedent == b))
    throw TypeError("comp: cannot compose " + to_string(f.conclusion()) + " with " +
                    to_string(g.conclusion()));
  return Derivation(Rule::Comp, seq(f.conclusion().stoup, g.conclusion().succedent), {f, g});
}

Derivation imp(const Derivation& f, const Derivation& g) {
  const Formula& c = stoup_formula(f, "imp");
  const Formula& b = stoup_formula(g, "imp");
  const Formula& a = f.conclusion().succedent;
  const Formula& d = g.conclusion().succedent;
  return Derivation(Rule::ImpF, seq(Formula::imp(a, b), Formula::imp(c, d)), {f, g});
}

Derivation j(const Formula& a) { return Derivation(Rule::J, seq(std::nullopt, Formula::imp(a, a))); }

Derivation i(const Derivation& e, const Formula& b) {
  if (e.conclusion().stoup)
    throw TypeError("i: argument must have an empty stoup, got " + to_string(e.conclusion()));
  return Derivation(Rule::I, seq(Formula::imp(e.conclusion().succedent, b), b), {e});
}

Derivation L(const Formula& a, const Formula& b, const Formula& c) {
  return Derivation(Rule::L, seq(Formula::imp(b, c), Formula::imp(Formula::imp(a, b), Formula::imp(a, c))));
}

Derivation gen(const Clause& c) {
  Sequent s = c.sequent();
  Formula out = s.succedent;
  for (auto it = s.context.rbegin(); it != s.context.rend(); ++it) out = Formula::imp(*it, out);
  return Derivation(Rule::Gen, seq(s.stoup, out), {}, {}, c.name);
}

Derivation jhat(const Derivation& f) {
  const Formula& a = stoup_formula(f, "jhat");
  return comp(j(a), imp(id(a), f));
}

namespace {

void arity(const RawTerm& t, std::size_t children, std::size_t params, const std::string& path) {
  if (t.children.size() != children)
    throw TypeError(t.head + " expects " + std::to_string(children) + " argument(s)", path);
  if (t.params.size() != params)
    throw TypeError(t.head + " expects " + std::to_string(params) + " annotation(s)", path);
}

template <class F>
Derivation at(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const TypeError& e) {
    throw TypeError(e.message(), path);
  }
}

}  // namespace

Derivation infer(const RawTerm& t, const Multigraph* graph, const std::string& path) {
  const std::string& h = t.head;
  if (h == "id") {
    arity(t, 0, 1, path);
    return id(param_formula(t, 0, path));
  }
  if (h == "j") {
    arity(t, 0, 1, path);
    return j(param_formula(t, 0, path));
  }
  if (h == "L") {
    arity(t, 0, 3, path);
    return L(param_formula(t, 0, path), param_formula(t, 1, path), param_formula(t, 2, path));
  }
  if (h == "comp" || h == "imp") {
    arity(t, 2, 0, path);
    Derivation f = infer(t.children[0], graph, sub_path(path, 0));
    Derivation g = infer(t.children[1], graph, sub_path(path, 1));
    return at(path, [&] { return h == "comp" ? comp(f, g) : imp(f, g); });
  }
  if (h == "i") {
    arity(t, 1, 2, path);
    Formula a = param_formula(t, 0, path);
    Formula ab = param_formula(t, 1, path);
    if (!ab.is_imp() || !(ab.antecedent() == a))
      throw TypeError("i[A, A -o B]: second annotation must be " + to_string(a) + " -o B", path);
    Derivation e = infer(t.children[0], graph, sub_path(path, 0));
    if (!(e.conclusion() == seq(std::nullopt, a)))
      throw TypeError("i: argument proves " + to_string(e.conclusion()) + ", expected - | |- " +
                          to_string(a),
                      sub_path(path, 0));
    return at(path, [&] { return i(e, ab.consequent()); });
  }
  if (h == "gen") {
    if (t.children.size() != 1 || t.children[0].has_parens || t.children[0].has_bracket)
      throw TypeError("gen expects a clause name", path);
    if (!graph) throw TypeError("gen needs a multigraph", path);
    const Clause* c = graph->find(t.children[0].head);
    if (!c) throw TypeError("unknown clause '" + t.children[0].head + "'", path);
    return gen(*c);
  }
  throw TypeError("unknown categorical rule '" + h + "'", path);
}

Derivation check(const RawTerm& t, const Sequent& goal, const Multigraph* graph) {
  if (!goal.context.empty()) throw TypeError("categorical sequents have an empty context");
  Derivation d = infer(t, graph);
  if (!(d.conclusion() == goal))
    throw TypeError("derivation proves " + to_string(d.conclusion()) + ", expected " +
                    to_string(goal));
  return d;
}

namespace {

void validate_at(const Derivation& d, const Multigraph* graph, const std::string& path) {
  for (std::size_t k = 0; k < d.premises().size(); ++k)
    validate_at(d.premise(k), graph, sub_path(path, k));
  const Sequent& s = d.conclusion();
  auto rebuilt = at(path, [&]() -> Derivation {
    switch (d.rule()) {
      case Rule::Id: return id(s.succedent);
      case Rule::Comp: return comp(d.premise(0), d.premise(1));
      case Rule::ImpF: return imp(d.premise(0), d.premise(1));
      case Rule::J:
        if (!s.succedent.is_imp()) throw TypeError("j at a non-implication");
        return j(s.succedent.antecedent());
      case Rule::I: return i(d.premise(0), s.succedent);
      case Rule::L: {
        const Formula& c = s.succedent;
        if (!c.is_imp() || !c.antecedent().is_imp()) throw TypeError("malformed L");
        return L(c.antecedent().antecedent(), c.antecedent().consequent(),
                 c.consequent().consequent());
      }
      case Rule::Gen: {
        const Clause* c = graph ? graph->find(d.label()) : nullptr;
        if (!c) throw TypeError("unknown clause '" + d.label() + "'");
        return gen(*c);
      }
    }
    throw InternalError("bad categorical rule");
  });
  if (!(rebuilt.conclusion() == s))
    throw TypeError("node claims " + to_string(s) + " but proves " +
                        to_string(rebuilt.conclusion()),
                    path);
}

}  // namespace

void validate(const Derivation& d, const Multigraph* graph) { validate_at(d, graph, "root"); }

std::string to_string(const Derivation& d) {
  const Sequent& s = d.conclusion();
  switch (d.rule()) {
    case Rule::Id: return "id[" + skew::to_string(s.succedent) + "]";
    case Rule::J: return "j[" + skew::to_string(s.succedent.antecedent()) + "]";
    case Rule::L: {
      const Formula& c = s.succedent;
      return "L[" + skew::to_string(c.antecedent().antecedent()) + ", " +
             skew::to_string(c.antecedent().consequent()) + ", " +
             skew::to_string(c.consequent().consequent()) + "]";
    }
    case Rule::I:
      return "i[" + skew::to_string(d.premise(0).conclusion().succedent) + ", " +
             skew::to_string(*s.stoup) + "](" + to_string(d.premise(0)) + ")";
    case Rule::ImpF: return "imp(" + to_string(d.premise(0)) + ", " + to_string(d.premise(1)) + ")";
    case Rule::Gen: return "gen(" + d.label() + ")";
    case Rule::Comp: {
      std::string g = to_string(d.premise(1));
      if (d.premise(1).rule() == Rule::Comp) g = "(" + g + ")";
      return g + " . " + to_string(d.premise(0));
    }
  }
  throw InternalError("bad categorical rule");
}

namespace {

constexpr LawShape kShapes[kLawCount] = {
    {"right-unit", 1, 0}, {"left-unit", 1, 0}, {"assoc", 3, 0},   {"imp-id", 0, 2},
    {"imp-comp", 4, 0},   {"j-nat", 1, 0},     {"i-nat", 3, 0},   {"L-nat", 3, 0},
    {"c1", 1, 0},         {"c2", 0, 2},        {"c3", 0, 2},      {"c4", 1, 2},
    {"c5", 0, 4},
};

}  // namespace

const LawShape& shape(Law law) { return kShapes[static_cast<int>(law)]; }
const char* name(Law law) { return shape(law).name; }

Equation instantiate(Law law, const std::vector<Derivation>& maps,
                     const std::vector<Formula>& formulas) {
  const LawShape& sh = shape(law);
  if (maps.size() != sh.maps || formulas.size() != sh.formulas)
    throw std::invalid_argument(std::string(sh.name) + " expects " + std::to_string(sh.maps) +
                                " map(s) and " + std::to_string(sh.formulas) + " formula(s)");
  auto m = [&](std::size_t k) -> const Derivation& { return maps[k]; };
  auto fm = [&](std::size_t k) -> const Formula& { return formulas[k]; };
  auto cod = [](const Derivation& d) { return d.conclusion().succedent; };
  auto dom = [](const Derivation& d) { return stoup_formula(d, "law"); };
  switch (law) {
    case Law::LeftUnit: return {law, comp(m(0), id(cod(m(0)))), m(0)};
    case Law::RightUnit: return {law, comp(id(dom(m(0))), m(0)), m(0)};
    case Law::Assoc:
      return {law, comp(comp(m(0), m(1)), m(2)), comp(m(0), comp(m(1), m(2)))};
    case Law::ImpId:
      return {law, imp(id(fm(0)), id(fm(1))), id(Formula::imp(fm(0), fm(1)))};
    case Law::ImpComp: {
      const auto &f = m(0), &g = m(1), &h = m(2), &k = m(3);
      return {law, imp(comp(h, f), comp(g, k)), comp(imp(f, g), imp(h, k))};
    }
    case Law::JNat: {
      const auto& f = m(0);
      return {law, comp(j(cod(f)), imp(f, id(cod(f)))), comp(j(dom(f)), imp(id(dom(f)), f))};
    }
    case Law::INat: {
      const auto &e = m(0), &g = m(1), &h = m(2);
      Formula b = dom(g);
      return {law, comp(imp(h, id(b)), comp(i(e, b), g)),
              comp(imp(id(cod(h)), g), i(comp(e, h), cod(g)))};
    }
    case Law::LNat: {
      const auto &f = m(0), &g = m(1), &h = m(2);
      Formula a = cod(f), a1 = dom(f), b = dom(g), b1 = cod(g), c = dom(h), c1 = cod(h);
      return {law, comp(L(a1, b1, c), imp(imp(f, g), imp(id(a1), h))),
              comp(comp(imp(g, h), L(a, b, c1)),
                   imp(id(Formula::imp(a, b)), imp(f, id(c1))))};
    }
    case Law::C1: {
      const auto& e = m(0);
      return {law, comp(j(cod(e)), i(e, cod(e))), e};
    }
    case Law::C2: {
      const Formula &a = fm(0), &c = fm(1);
      return {law, comp(L(a, a, c), i(j(a), Formula::imp(a, c))), id(Formula::imp(a, c))};
    }
    case Law::C3: {
      const Formula &a = fm(0), &b = fm(1);
      return {law, comp(j(b), L(a, b, b)), j(Formula::imp(a, b))};
    }
    case Law::C4: {
      const auto& e = m(0);
      Formula a = cod(e);
      const Formula &b = fm(0), &c = fm(1);
      return {law, comp(L(a, b, c), imp(id(Formula::imp(a, b)), i(e, c))),
              imp(i(e, b), id(c))};
    }
    case Law::C5: {
      const Formula &a = fm(0), &b = fm(1), &c = fm(2), &d = fm(3);
      auto ab = Formula::imp(a, b), ac = Formula::imp(a, c), ad = Formula::imp(a, d);
      return {law, comp(L(b, c, d), imp(id(Formula::imp(b, c)), L(a, b, d))),
              comp(L(a, c, d), comp(L(ab, ac, ad), imp(L(a, b, c), id(Formula::imp(ab, ad)))))};
    }
  }
  throw InternalError("bad law");
}

}  // namespace skew::cat

namespace skew::sf {

namespace {

Sequent loose(Formula c) { return {std::nullopt, {}, std::move(c)}; }

}  // namespace

Derivation app(const Derivation& b, const Derivation& f) {
  const Formula& fc = f.conclusion().succedent;
  if (!fc.is_imp() || !(fc.antecedent() == b.conclusion().succedent))
    throw TypeError("comp': cannot apply " + to_string(fc) + " to " +
                    to_string(b.conclusion().succedent));
  return Derivation(Rule::App, loose(fc.consequent()), {b, f});
}

Derivation j(const Formula& a) { return Derivation(Rule::J, loose(Formula::imp(a, a))); }

Derivation i_prime(const Derivation& e, const Formula& b) {
  const Formula& a = e.conclusion().succedent;
  return Derivation(Rule::IPrime, loose(Formula::imp(Formula::imp(a, b), b)), {e});
}

Derivation L_prime(const Formula& a, const Formula& b, const Formula& c) {
  return Derivation(Rule::LPrime,
                    loose(Formula::imp(Formula::imp(b, c),
                                       Formula::imp(Formula::imp(a, b), Formula::imp(a, c)))));
}

Derivation infer(const RawTerm& t, const std::string& path) {
  const std::string& h = t.head;
  auto arity = [&](std::size_t children, std::size_t params) {
    if (t.children.size() != children || t.params.size() != params)
      throw TypeError(h + " expects " + std::to_string(children) + " argument(s) and " +
                          std::to_string(params) + " annotation(s)",
                      path);
  };
  if (h == "j") {
    arity(0, 1);
    return j(param_formula(t, 0, path));
  }
  if (h == "L'") {
    arity(0, 3);
    return L_prime(param_formula(t, 0, path), param_formula(t, 1, path),
                   param_formula(t, 2, path));
  }
  if (h == "i'") {
    arity(1, 2);
    Formula a = param_formula(t, 0, path);
    Formula b = param_formula(t, 1, path);
    Derivation e = infer(t.children[0], sub_path(path, 0));
    if (!(e.conclusion().succedent == a))
      throw TypeError("i': argument proves " + to_string(e.conclusion()), sub_path(path, 0));
    return i_prime(e, b);
  }
  if (h == "comp'") {
    arity(2, 0);
    Derivation b = infer(t.children[0], sub_path(path, 0));
    Derivation f = infer(t.children[1], sub_path(path, 1));
    try {
      return app(b, f);
    } catch (const TypeError& e) {
      throw TypeError(e.message(), path);
    }
  }
  throw TypeError("unknown stoup-free rule '" + h + "'", path);
}

Derivation check(const RawTerm& t, const Sequent& goal) {
  if (goal.stoup || !goal.context.empty())
    throw TypeError("stoup-free sequents have the form - |- C");
  Derivation d = infer(t);
  if (!(d.conclusion() == goal))
    throw TypeError("derivation proves " + skew::to_string(d.conclusion()) + ", expected " +
                    skew::to_string(goal));
  return d;
}

std::string to_string(const Derivation& d) {
  const Formula& c = d.conclusion().succedent;
  switch (d.rule()) {
    case Rule::J: return "j[" + skew::to_string(c.antecedent()) + "]";
    case Rule::LPrime: {
      Formula ab = c.consequent().antecedent();
      return "L'[" + skew::to_string(ab.antecedent()) + ", " + skew::to_string(ab.consequent()) +
             ", " + skew::to_string(c.antecedent().consequent()) + "]";
    }
    case Rule::IPrime:
      return "i'[" + skew::to_string(c.antecedent().antecedent()) + ", " +
             skew::to_string(c.consequent()) + "](" + to_string(d.premise(0)) + ")";
    case Rule::App:
      return "comp'(" + to_string(d.premise(0)) + ", " + to_string(d.premise(1)) + ")";
  }
  throw InternalError("bad stoup-free rule");
}

namespace {

Derivation tight(const cat::Derivation& d);

Derivation loose_part(const cat::Derivation& d) {
  switch (d.rule()) {
    case cat::Rule::J: return j(d.conclusion().succedent.antecedent());
    case cat::Rule::Comp: return app(loose_part(d.premise(0)), tight(d.premise(1)));
    default: throw TypeError("stoup-free translation: unsupported loose node");
  }
}

bool is_id(const cat::Derivation& d) { return d.rule() == cat::Rule::Id; }

// d : A |- C  gives  - |- A -o C.
Derivation tight(const cat::Derivation& d) {
  const Sequent& s = d.conclusion();
  switch (d.rule()) {
    case cat::Rule::Id: return j(s.succedent);
    case cat::Rule::Comp: {
      const auto& f = d.premise(0);
      const auto& g = d.premise(1);
      Formula a = *f.conclusion().stoup, b = f.conclusion().succedent, c = g.conclusion().succedent;
      return app(tight(f), app(tight(g), L_prime(a, b, c)));
    }
    case cat::Rule::L: {
      const Formula& c = s.succedent;
      return L_prime(c.antecedent().antecedent(), c.antecedent().consequent(),
                     c.consequent().consequent());
    }
    case cat::Rule::I: return i_prime(loose_part(d.premise(0)), s.succedent);
    case cat::Rule::ImpF: {
      const auto& f = d.premise(0);
      const auto& g = d.premise(1);
      if (is_id(f) && is_id(g)) return j(*s.stoup);
      Formula a = f.conclusion().succedent, b = *g.conclusion().stoup;
      Formula c = *f.conclusion().stoup, dd = g.conclusion().succedent;
      std::optional<Derivation> contra, cov;
      if (!is_id(f))
        contra = tight(cat::comp(cat::L(c, a, b), cat::i(cat::jhat(f), Formula::imp(c, b))));
      if (!is_id(g)) cov = app(tight(g), L_prime(c, b, dd));
      if (!contra) return *cov;
      if (!cov) return *contra;
      Formula ab = Formula::imp(a, b), cb = Formula::imp(c, b), cd = Formula::imp(c, dd);
      return app(*contra, app(*cov, L_prime(ab, cb, cd)));
    }
    case cat::Rule::J:
    case cat::Rule::Gen: break;
  }
  throw TypeError("stoup-free translation: unsupported node");
}

}  // namespace

Derivation from_cat(const cat::Derivation& d) {
  return d.conclusion().stoup ? tight(d) : loose_part(d);
}

cat::Derivation to_cat(const Derivation& d) {
  const Formula& c = d.conclusion().succedent;
  switch (d.rule()) {
    case Rule::J: return cat::j(c.antecedent());
    case Rule::App:
      return cat::comp(to_cat(d.premise(1)),
                       cat::i(to_cat(d.premise(0)), c));
    case Rule::IPrime:
      return cat::jhat(cat::i(to_cat(d.premise(0)), c.consequent()));
    case Rule::LPrime: {
      Formula ab = c.consequent().antecedent();
      return cat::jhat(cat::L(ab.antecedent(), ab.consequent(), c.antecedent().consequent()));
    }
  }
  throw InternalError("bad stoup-free rule");
}

}  // namespace skew::sf
