#include "skew/seq_calc.hpp"

#include "skew/error.hpp"

namespace skew::seq {

Derivation ax(const Formula& a) { return Derivation(Rule::Ax, {a, {}, a}); }

Derivation pass(const Derivation& f) {
  const Sequent& s = f.conclusion();
  if (!s.stoup) throw TypeError("pass: premise has an empty stoup");
  Context ctx{*s.stoup};
  ctx.insert(ctx.end(), s.context.begin(), s.context.end());
  return Derivation(Rule::Pass, {std::nullopt, std::move(ctx), s.succedent}, {f});
}

Derivation impR(const Derivation& f) {
  const Sequent& s = f.conclusion();
  if (s.context.empty()) throw TypeError("impR: premise has an empty context");
  Context ctx(s.context.begin(), s.context.end() - 1);
  return Derivation(Rule::ImpR, {s.stoup, std::move(ctx), Formula::imp(s.context.back(), s.succedent)},
                    {f});
}

Derivation impL(const Derivation& f, const Derivation& g) {
  const Sequent& a = f.conclusion();
  const Sequent& b = g.conclusion();
  if (a.stoup) throw TypeError("impL: loose premise has a stoup");
  if (!b.stoup) throw TypeError("impL: second premise has an empty stoup");
  return Derivation(Rule::ImpL,
                    {Formula::imp(a.succedent, *b.stoup), concat(a.context, b.context), b.succedent},
                    {f, g}, {a.context.size()});
}

namespace {

void arity(const RawTerm& t, std::size_t children, std::size_t params, const std::string& path) {
  if (t.children.size() != children || t.params.size() != params)
    throw TypeError(t.head + " expects " + std::to_string(children) + " argument(s) and " +
                        std::to_string(params) + " index(es)",
                    path);
}

}  // namespace

Derivation check(const RawTerm& t, const Sequent& goal, const std::string& path) {
  const std::string& h = t.head;
  auto fail = [&](const std::string& msg) -> Derivation {
    throw TypeError(h + " cannot prove " + to_string(goal) + ": " + msg, path);
  };
  if (h == "ax") {
    arity(t, 0, 0, path);
    if (!goal.stoup || !goal.context.empty() || !(*goal.stoup == goal.succedent))
      return fail("needs A | |- A");
    return ax(goal.succedent);
  }
  if (h == "pass") {
    arity(t, 1, 0, path);
    if (goal.stoup || goal.context.empty()) return fail("needs an empty stoup and a non-empty context");
    Sequent sub{goal.context.front(), slice(goal.context, 1, goal.context.size()), goal.succedent};
    return pass(check(t.children[0], sub, sub_path(path, 0)));
  }
  if (h == "impR") {
    arity(t, 1, 0, path);
    if (!goal.succedent.is_imp()) return fail("succedent is not an implication");
    Sequent sub{goal.stoup, goal.context, goal.succedent.consequent()};
    sub.context.push_back(goal.succedent.antecedent());
    return impR(check(t.children[0], sub, sub_path(path, 0)));
  }
  if (h == "impL") {
    arity(t, 2, 1, path);
    std::size_t k = param_index(t, 0, path);
    if (!goal.stoup || !goal.stoup->is_imp()) return fail("stoup is not an implication");
    if (k > goal.context.size()) return fail("split " + std::to_string(k) + " out of range");
    Sequent s1{std::nullopt, slice(goal.context, 0, k), goal.stoup->antecedent()};
    Sequent s2{goal.stoup->consequent(), slice(goal.context, k, goal.context.size()),
               goal.succedent};
    return impL(check(t.children[0], s1, sub_path(path, 0)),
                check(t.children[1], s2, sub_path(path, 1)));
  }
  throw TypeError("unknown sequent calculus rule '" + h + "'", path);
}

namespace {

void validate_at(const Derivation& d, const std::string& path) {
  for (std::size_t k = 0; k < d.premises().size(); ++k) validate_at(d.premise(k), sub_path(path, k));
  std::optional<Derivation> r;
  try {
    switch (d.rule()) {
      case Rule::Ax:
        if (!d.conclusion().stoup) throw TypeError("ax without stoup");
        r = ax(*d.conclusion().stoup);
        break;
      case Rule::Pass: r = pass(d.premise(0)); break;
      case Rule::ImpR: r = impR(d.premise(0)); break;
      case Rule::ImpL: r = impL(d.premise(0), d.premise(1)); break;
    }
  } catch (const TypeError& e) {
    throw TypeError(e.message(), path);
  }
  if (!(r->conclusion() == d.conclusion()) || r->params() != d.params())
    throw TypeError("node claims " + to_string(d.conclusion()) + " but proves " +
                        to_string(r->conclusion()),
                    path);
}

}  // namespace

void validate(const Derivation& d) { validate_at(d, "root"); }

std::string to_string(const Derivation& d) {
  switch (d.rule()) {
    case Rule::Ax: return "ax";
    case Rule::Pass: return "pass(" + to_string(d.premise(0)) + ")";
    case Rule::ImpR: return "impR(" + to_string(d.premise(0)) + ")";
    case Rule::ImpL:
      return "impL[" + std::to_string(d.param(0)) + "](" + to_string(d.premise(0)) + ", " +
             to_string(d.premise(1)) + ")";
  }
  throw InternalError("bad sequent rule");
}

Derivation scut(const Derivation& f, const Derivation& g) {
  switch (f.rule()) {
    case Rule::Ax: return g;
    case Rule::Pass: return pass(scut(f.premise(0), g));
    case Rule::ImpL: return impL(f.premise(0), scut(f.premise(1), g));
    case Rule::ImpR:
      switch (g.rule()) {
        case Rule::Ax: return f;
        case Rule::ImpR: return impR(scut(f, g.premise(0)));
        case Rule::ImpL: {
          const Derivation& f1 = f.premise(0);
          std::size_t pos = f.conclusion().context.size();
          return scut(ccut(g.premise(0), f1, pos), g.premise(1));
        }
        case Rule::Pass: break;
      }
      break;
  }
  throw InternalError("scut: ill-typed premises");
}

Derivation ccut(const Derivation& e, const Derivation& g, std::size_t pos) {
  switch (g.rule()) {
    case Rule::Pass:
      if (pos == 0) return scut(e, g.premise(0));
      return pass(ccut(e, g.premise(0), pos - 1));
    case Rule::ImpR: return impR(ccut(e, g.premise(0), pos));
    case Rule::ImpL: {
      std::size_t k = g.param(0);
      if (pos < k) return impL(ccut(e, g.premise(0), pos), g.premise(1));
      return impL(g.premise(0), ccut(e, g.premise(1), pos - k));
    }
    case Rule::Ax: break;
  }
  throw InternalError("ccut: position outside the context");
}

Derivation impC(const Derivation& e, const Derivation& g, std::size_t pos) {
  const Formula& b = g.conclusion().context.at(pos);
  return ccut(pass(impL(e, ax(b))), g, pos);
}

Derivation act(const Derivation& f) {
  switch (f.rule()) {
    case Rule::Pass: return f.premise(0);
    case Rule::ImpR: return impR(act(f.premise(0)));
    default: throw InternalError("act: premise is neither pass nor impR");
  }
}

Derivation invR(const Derivation& h) {
  const Formula& c = h.conclusion().succedent;
  if (!c.is_imp()) throw TypeError("invR: succedent is not an implication");
  return scut(h, impL(pass(ax(c.antecedent())), ax(c.consequent())));
}

const char* name(Law law) {
  switch (law) {
    case Law::Eta: return "eta";
    case Law::PassImpR: return "comm-pass-impR";
    case Law::ImpLImpR: return "comm-impL-impR";
  }
  return "?";
}

Equation eta(const Formula& imp) {
  if (!imp.is_imp()) throw TypeError("eta needs an implication");
  return {Law::Eta, ax(imp), impR(impL(pass(ax(imp.antecedent())), ax(imp.consequent())))};
}

Equation comm_pass_impR(const Derivation& f) {
  return {Law::PassImpR, pass(impR(f)), impR(pass(f))};
}

Equation comm_impL_impR(const Derivation& f, const Derivation& g) {
  return {Law::ImpLImpR, impL(f, impR(g)), impR(impL(f, g))};
}

}  // namespace skew::seq
