#include "skew/model.hpp"

#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skew/bridge.hpp"
#include "skew/coherence.hpp"
#include "skew/error.hpp"
#include "skew/focused.hpp"

namespace skew::model {

namespace {

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kInf / b ? kInf : a * b;
}

std::uint64_t power(std::uint64_t n, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    out = mul(out, n);
    if (out == kInf) return kInf;
    if (n == 1) break;
  }
  return out;
}

std::set<std::uint64_t> members(std::uint64_t cap) {
  std::set<std::uint64_t> m{3};
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint64_t a : std::set<std::uint64_t>(m))
      for (std::uint64_t b : std::set<std::uint64_t>(m)) {
        std::uint64_t p = power(a, b);
        if (p <= cap && m.insert(p).second) grew = true;
      }
  }
  return m;
}

// Evaluation step budget shared by one comparison.
thread_local std::uint64_t steps = 0;
thread_local std::uint64_t budget = kInf;

void tick() {
  if (++steps > budget) throw CapExceeded("model evaluation exceeded the step budget");
}

struct Universe {
  const ModelSpec& spec;

  std::uint64_t card(const Formula& f) const { return cardinality(spec, f); }

  std::uint64_t card_checked(const Formula& f) const {
    std::uint64_t n = card(f);
    if (n > spec.cap)
      throw CapExceeded(to_string(f) + " has more than " + std::to_string(spec.cap) + " elements");
    return n;
  }

  // Element number idx of f; tables are indexed a-major, r-minor.
  Value element(const Formula& f, std::uint64_t idx) const {
    if (f.is_atom()) return Value(idx);
    const Formula a = f.antecedent(), b = f.consequent();
    const std::uint64_t nb = card_checked(b);
    const std::uint64_t len = mul(card_checked(a), spec.readers());
    const Universe u = *this;
    return Value([u, a, b, nb, len, idx](const Value& x, std::uint64_t r) {
      std::uint64_t pos = u.index(a, x) * u.spec.readers() + r;
      std::uint64_t digit = (idx / power(nb, len - 1 - pos)) % nb;
      return u.element(b, digit);
    }, idx);
  }

  std::uint64_t index(const Formula& f, const Value& v) const {
    tick();
    if (f.is_atom()) return v.atom();
    if (v.code()) return *v.code();
    card_checked(f);
    const Formula a = f.antecedent(), b = f.consequent();
    const std::uint64_t na = card_checked(a), nb = card_checked(b);
    std::uint64_t out = 0;
    for (std::uint64_t x = 0; x < na; ++x) {
      Value arg = element(a, x);
      for (std::uint64_t r = 0; r < spec.readers(); ++r) out = out * nb + index(b, v(arg, r));
    }
    return out;
  }

  bool equal(const Formula& f, const Value& v, const Value& w) const {
    tick();
    if (f.is_atom()) return v.atom() == w.atom();
    const Formula a = f.antecedent(), b = f.consequent();
    const std::uint64_t na = card_checked(a);
    for (std::uint64_t x = 0; x < na; ++x) {
      Value arg = element(a, x);
      for (std::uint64_t r = 0; r < spec.readers(); ++r)
        if (!equal(b, v(arg, r), w(arg, r))) return false;
    }
    return true;
  }

  // Upper bound on the work of equal().
  std::uint64_t cost(const Formula& f) const {
    if (f.is_atom()) return 1;
    return mul(mul(card(f.antecedent()), spec.readers()), cost(f.consequent()));
  }
};

std::uint64_t source_card(const Universe& u, const Sequent& s) {
  return s.stoup ? u.card(*s.stoup) : 1;
}

}  // namespace

bool in_M(std::uint64_t n, std::uint64_t cap) {
  if (n > cap) return false;
  return members(cap).count(n) > 0;
}

CardObject CardObject::make(std::uint64_t n, std::uint64_t cap) {
  if (n > cap) throw CapExceeded("cardinality " + std::to_string(n) + " exceeds the cap");
  if (!in_M(n, cap)) throw std::invalid_argument(std::to_string(n) + " is not in M");
  return CardObject{n};
}

ModelSpec parse_model_spec(std::string_view text) {
  ModelSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string kw;
    if (!(words >> kw)) continue;
    auto bad = [&](const std::string& msg) {
      throw SyntaxError("line " + std::to_string(lineno) + ": " + msg, 0);
    };
    std::string extra;
    if (kw == "mode") {
      std::string m;
      words >> m;
      if (m == "plain") {
        spec.mode = Mode::Plain;
        spec.k = CardObject{1};
      } else if (m == "kleisli") {
        std::uint64_t k = 0;
        if (!(words >> k)) bad("kleisli needs a cardinality");
        spec.mode = Mode::Kleisli;
        try {
          spec.k = CardObject::make(k, spec.cap);
        } catch (const std::invalid_argument& e) {
          bad(e.what());
        }
      } else {
        bad("mode must be plain or kleisli");
      }
    } else if (kw == "atom") {
      std::string name;
      std::uint64_t n = 0;
      if (!(words >> name >> n)) bad("expected `atom <name> <cardinality>`");
      try {
        spec.atoms[name] = CardObject::make(n, spec.cap);
      } catch (const std::invalid_argument& e) {
        bad(e.what());
      }
    } else {
      bad("unknown declaration '" + kw + "'");
    }
    if (words >> extra) bad("trailing text '" + extra + "'");
  }
  return spec;
}

ModelSpec uniform(Mode mode, const std::vector<std::string>& atoms) {
  ModelSpec spec;
  spec.mode = mode;
  spec.k = mode == Mode::Plain ? CardObject{1} : CardObject{3};
  for (const auto& a : atoms) spec.atoms[a] = CardObject{3};
  return spec;
}

std::uint64_t cardinality(const ModelSpec& spec, const Formula& f) {
  if (f.is_atom()) {
    auto it = spec.atoms.find(f.name());
    if (it == spec.atoms.end()) throw TypeError("atom " + f.name() + " has no cardinality");
    return it->second.n;
  }
  std::uint64_t m = cardinality(spec, f.antecedent());
  std::uint64_t n = cardinality(spec, f.consequent());
  return power(n, mul(spec.readers(), m));
}

CardObject interp_formula(const ModelSpec& spec, const Formula& f) {
  std::uint64_t n = cardinality(spec, f);
  if (n > spec.cap)
    throw CapExceeded(to_string(f) + " has more than " + std::to_string(spec.cap) + " elements");
  return CardObject{n};
}

Map eval(const ModelSpec& spec, const cat::Derivation& d) {
  switch (d.rule()) {
    case cat::Rule::Id: return [](const Value& s, std::uint64_t) { return s; };
    case cat::Rule::Comp: {
      Map f = eval(spec, d.premise(0)), g = eval(spec, d.premise(1));
      return [f, g](const Value& s, std::uint64_t r) { return g(f(s, r), r); };
    }
    case cat::Rule::ImpF: {
      Map f = eval(spec, d.premise(0)), g = eval(spec, d.premise(1));
      return [f, g](const Value& h, std::uint64_t) {
        return Value([f, g, h](const Value& c, std::uint64_t r) { return g(h(f(c, r), r), r); });
      };
    }
    case cat::Rule::J:
      return [](const Value&, std::uint64_t) {
        return Value([](const Value& a, std::uint64_t) { return a; });
      };
    case cat::Rule::I: {
      Map e = eval(spec, d.premise(0));
      return [e](const Value& h, std::uint64_t r) { return h(e(Value(0), r), r); };
    }
    case cat::Rule::L:
      return [](const Value& g, std::uint64_t) {
        return Value([g](const Value& h, std::uint64_t) {
          return Value([g, h](const Value& a, std::uint64_t r) { return g(h(a, r), r); });
        });
      };
    case cat::Rule::Gen: break;
  }
  throw TypeError("generator " + d.label() + " has no interpretation in a finite-set model");
}

Interpretation interp_cat(const ModelSpec& spec, const cat::Derivation& d) {
  cat::validate(d);
  const Universe u{spec};
  const Sequent& s = d.conclusion();
  const Map f = eval(spec, d);
  const std::uint64_t nc = u.card_checked(s.succedent);
  const CardObject target = interp_formula(spec, s.succedent);
  const CardObject tc{power(nc, spec.readers())};
  if (tc.n > spec.cap) throw CapExceeded("reader object exceeds the cap");
  steps = 0;
  budget = kInf;
  auto column = [&](const Value& x) {
    std::uint64_t out = 0;
    for (std::uint64_t r = 0; r < spec.readers(); ++r) out = out * nc + u.index(s.succedent, f(x, r));
    return out;
  };
  const CardObject codomain = spec.readers() == 1 ? target : tc;
  if (!s.stoup) return Element{codomain, column(Value(0))};
  const CardObject dom = interp_formula(spec, *s.stoup);
  FiniteMap out{dom, codomain, {}};
  out.table.reserve(dom.n);
  for (std::uint64_t x = 0; x < dom.n; ++x) out.table.push_back(column(u.element(*s.stoup, x)));
  return out;
}

std::optional<bool> agree(const ModelSpec& spec, const cat::Derivation& a,
                          const cat::Derivation& b) {
  if (!(a.conclusion() == b.conclusion()))
    throw TypeError("maps of " + to_string(a.conclusion()) + " and " + to_string(b.conclusion()) +
                    " cannot be compared");
  const Universe u{spec};
  const Sequent& s = a.conclusion();
  const std::uint64_t n = source_card(u, s);
  if (mul(mul(n, spec.readers()), u.cost(s.succedent)) > spec.cap) return std::nullopt;
  const Map f = eval(spec, a), g = eval(spec, b);
  steps = 0;
  budget = spec.cap;
  try {
    for (std::uint64_t x = 0; x < n; ++x) {
      Value arg = s.stoup ? u.element(*s.stoup, x) : Value(0);
      for (std::uint64_t r = 0; r < spec.readers(); ++r)
        if (!u.equal(s.succedent, f(arg, r), g(arg, r))) {
          budget = kInf;
          return false;
        }
    }
  } catch (const CapExceeded&) {
    budget = kInf;
    return std::nullopt;
  }
  budget = kInf;
  return true;
}

namespace {

constexpr std::size_t kMapsPerHom = 2;
constexpr std::size_t kInstancesPerLaw = 400;

std::vector<cat::Derivation> derivable(const Sequent& s) {
  std::vector<cat::Derivation> out;
  try {
    coherence::Search search(coherence::Options{1000, nullptr, 16});
    for (const auto& d : search.enumerate(s)) {
      out.push_back(bridge::sound(foc::emb(d)));
      if (out.size() == kMapsPerHom) break;
    }
  } catch (const CapExceeded&) {
  }
  return out;
}

}  // namespace

AxiomReport check_axioms(const ModelSpec& spec, const std::vector<Formula>& objects) {
  AxiomReport report;
  std::vector<cat::Derivation> tight, loose;
  for (const auto& a : objects) {
    for (const auto& e : derivable(Sequent{std::nullopt, {}, a})) loose.push_back(e);
    for (const auto& b : objects)
      for (const auto& f : derivable(Sequent{a, {}, b})) tight.push_back(f);
  }
  auto src = [](const cat::Derivation& d) { return *d.conclusion().stoup; };
  auto tgt = [](const cat::Derivation& d) { return d.conclusion().succedent; };

  for (int l = 0; l < cat::kLawCount; ++l) {
    const auto law = static_cast<cat::Law>(l);
    std::size_t made = 0;
    auto run = [&](const std::vector<cat::Derivation>& maps, const std::vector<Formula>& fs) {
      if (made >= kInstancesPerLaw) return;
      cat::Equation eq = cat::instantiate(law, maps, fs);
      ++made;
      std::optional<bool> same;
      try {
        same = agree(spec, eq.lhs, eq.rhs);
      } catch (const CapExceeded&) {
      }
      if (!same) {
        ++report.skipped;
        return;
      }
      ++report.checked;
      if (!*same)
        report.failures.push_back(std::string(cat::name(law)) + ": " + cat::to_string(eq.lhs) +
                                  " vs " + cat::to_string(eq.rhs));
    };
    std::vector<cat::Derivation> all = tight;
    all.insert(all.end(), loose.begin(), loose.end());
    switch (law) {
      case cat::Law::LeftUnit:
        for (const auto& f : all) run({f}, {});
        break;
      case cat::Law::RightUnit:
        for (const auto& f : tight) run({f}, {});
        break;
      case cat::Law::Assoc:
        for (const auto& f : all)
          for (const auto& g : tight)
            if (tgt(f) == src(g))
              for (const auto& h : tight)
                if (tgt(g) == src(h)) run({f, g, h}, {});
        break;
      case cat::Law::ImpId:
      case cat::Law::C2:
      case cat::Law::C3:
        for (const auto& a : objects)
          for (const auto& b : objects) run({}, {a, b});
        break;
      case cat::Law::ImpComp:
        for (const auto& f : tight)
          for (const auto& g : tight)
            for (const auto& h : tight)
              if (tgt(h) == src(f))
                for (const auto& k : tight)
                  if (src(k) == tgt(g)) run({f, g, h, k}, {});
        break;
      case cat::Law::JNat:
        for (const auto& f : tight) run({f}, {});
        break;
      case cat::Law::INat:
        for (const auto& e : loose)
          for (const auto& g : tight)
            for (const auto& h : tight)
              if (src(h) == tgt(e)) run({e, g, h}, {});
        break;
      case cat::Law::LNat:
        for (const auto& f : tight)
          for (const auto& g : tight)
            for (const auto& h : tight) run({f, g, h}, {});
        break;
      case cat::Law::C1:
        for (const auto& e : loose) run({e}, {});
        break;
      case cat::Law::C4:
        for (const auto& e : loose)
          for (const auto& b : objects)
            for (const auto& c : objects) run({e}, {b, c});
        break;
      case cat::Law::C5:
        for (const auto& a : objects)
          for (const auto& b : objects)
            for (const auto& c : objects)
              for (const auto& d : objects) run({}, {a, b, c, d});
        break;
    }
  }
  return report;
}

}  // namespace skew::model
