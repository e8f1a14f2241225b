#include "skew/nat_ded.hpp"

#include "skew/error.hpp"

namespace skew::nd {

Derivation ax(const Formula& a) { return Derivation(Rule::Ax, {a, {}, a}); }

Derivation pass(const Derivation& f) {
  const Sequent& s = f.conclusion();
  if (!s.stoup) throw TypeError("pass: premise has an empty stoup");
  Context ctx{*s.stoup};
  ctx.insert(ctx.end(), s.context.begin(), s.context.end());
  return Derivation(Rule::Pass, {std::nullopt, std::move(ctx), s.succedent}, {f});
}

Derivation impI(const Derivation& f) {
  const Sequent& s = f.conclusion();
  if (s.context.empty()) throw TypeError("impI: premise has an empty context");
  Context ctx(s.context.begin(), s.context.end() - 1);
  return Derivation(Rule::ImpI, {s.stoup, std::move(ctx), Formula::imp(s.context.back(), s.succedent)},
                    {f});
}

Derivation impE(const Derivation& f, const Derivation& g) {
  const Sequent& a = f.conclusion();
  const Sequent& b = g.conclusion();
  if (b.stoup) throw TypeError("impE: argument has a stoup");
  if (!a.succedent.is_imp() || !(a.succedent.antecedent() == b.succedent))
    throw TypeError("impE: cannot apply " + to_string(a.succedent) + " to " +
                    to_string(b.succedent));
  return Derivation(Rule::ImpE, {a.stoup, concat(a.context, b.context), a.succedent.consequent()},
                    {f, g}, {a.context.size()});
}

namespace {

void arity(const RawTerm& t, std::size_t children, std::size_t max_params,
           const std::string& path) {
  if (t.children.size() != children || t.params.size() > max_params)
    throw TypeError(t.head + " expects " + std::to_string(children) + " argument(s)", path);
}

Derivation infer(const RawTerm& t, const Stoup& s, const Context& ctx, const std::string& path);

Derivation check_at(const RawTerm& t, const Sequent& goal, const std::string& path) {
  if (t.head == "impI" && t.params.empty()) {
    arity(t, 1, 0, path);
    if (!goal.succedent.is_imp())
      throw TypeError("impI cannot prove " + to_string(goal) + ": succedent is not an implication",
                      path);
    Sequent sub{goal.stoup, goal.context, goal.succedent.consequent()};
    sub.context.push_back(goal.succedent.antecedent());
    return impI(check_at(t.children[0], sub, sub_path(path, 0)));
  }
  if (t.head == "pass" && !goal.stoup && !goal.context.empty()) {
    arity(t, 1, 0, path);
    Sequent sub{goal.context.front(), slice(goal.context, 1, goal.context.size()), goal.succedent};
    return pass(check_at(t.children[0], sub, sub_path(path, 0)));
  }
  Derivation d = infer(t, goal.stoup, goal.context, path);
  if (!(d.conclusion().succedent == goal.succedent))
    throw TypeError(t.head + " proves " + to_string(d.conclusion()) + ", expected " +
                        to_string(goal),
                    path);
  return d;
}

Derivation infer(const RawTerm& t, const Stoup& s, const Context& ctx, const std::string& path) {
  const std::string& h = t.head;
  auto here = [&] { return to_string(Sequent{s, ctx, Formula::atom("?")}); };
  if (h == "ax") {
    arity(t, 0, 0, path);
    if (!s || !ctx.empty()) throw TypeError("ax needs A | |- A, got " + here(), path);
    return ax(*s);
  }
  if (h == "pass") {
    arity(t, 1, 0, path);
    if (s || ctx.empty())
      throw TypeError("pass needs an empty stoup and a non-empty context, got " + here(), path);
    return pass(infer(t.children[0], ctx.front(), slice(ctx, 1, ctx.size()), sub_path(path, 0)));
  }
  if (h == "impE") {
    arity(t, 2, 1, path);
    std::size_t k = param_index(t, 0, path);
    if (k > ctx.size()) throw TypeError("impE split " + std::to_string(k) + " out of range", path);
    Derivation f = infer(t.children[0], s, slice(ctx, 0, k), sub_path(path, 0));
    const Formula& fc = f.conclusion().succedent;
    if (!fc.is_imp())
      throw TypeError("impE: function part proves " + to_string(fc), sub_path(path, 0));
    Derivation g = check_at(t.children[1], {std::nullopt, slice(ctx, k, ctx.size()), fc.antecedent()},
                            sub_path(path, 1));
    return impE(f, g);
  }
  if (h == "impI") {
    arity(t, 1, 1, path);
    if (t.params.empty())
      throw TypeError("cannot infer the bound formula of impI; write impI[A](f)", path);
    Formula a = param_formula(t, 0, path);
    Context sub = ctx;
    sub.push_back(a);
    return impI(infer(t.children[0], s, sub, sub_path(path, 0)));
  }
  throw TypeError("unknown natural deduction rule '" + h + "'", path);
}

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
      case Rule::ImpI: r = impI(d.premise(0)); break;
      case Rule::ImpE: r = impE(d.premise(0), d.premise(1)); break;
    }
  } catch (const TypeError& e) {
    throw TypeError(e.message(), path);
  }
  if (!(r->conclusion() == d.conclusion()) || r->params() != d.params())
    throw TypeError("node claims " + to_string(d.conclusion()) + " but proves " +
                        to_string(r->conclusion()),
                    path);
}

std::string print(const Derivation& d, bool annotate) {
  switch (d.rule()) {
    case Rule::Ax: return "ax";
    case Rule::Pass: return "pass(" + print(d.premise(0), annotate) + ")";
    case Rule::ImpI:
      if (annotate)
        return "impI[" + to_string(d.conclusion().succedent.antecedent()) + "](" +
               print(d.premise(0), true) + ")";
      return "impI(" + print(d.premise(0), false) + ")";
    case Rule::ImpE:
      return "impE[" + std::to_string(d.param(0)) + "](" + print(d.premise(0), true) + ", " +
             print(d.premise(1), false) + ")";
  }
  throw InternalError("bad natural deduction rule");
}

}  // namespace

Derivation check(const RawTerm& t, const Sequent& goal, const std::string& path) {
  return check_at(t, goal, path);
}

void validate(const Derivation& d) { validate_at(d, "root"); }

std::string to_string(const Derivation& d) { return print(d, false); }

Derivation scut(const Derivation& f, const Derivation& g) {
  switch (g.rule()) {
    case Rule::Ax: return f;
    case Rule::ImpI: return impI(scut(f, g.premise(0)));
    case Rule::ImpE: return impE(scut(f, g.premise(0)), g.premise(1));
    case Rule::Pass: break;
  }
  throw InternalError("scut: ill-typed premises");
}

Derivation ccut(const Derivation& e, const Derivation& g, std::size_t pos) {
  switch (g.rule()) {
    case Rule::Pass:
      if (pos == 0) return scut(e, g.premise(0));
      return pass(ccut(e, g.premise(0), pos - 1));
    case Rule::ImpI: return impI(ccut(e, g.premise(0), pos));
    case Rule::ImpE: {
      std::size_t k = g.param(0);
      if (pos < k) return impE(ccut(e, g.premise(0), pos), g.premise(1));
      return impE(g.premise(0), ccut(e, g.premise(1), pos - k));
    }
    case Rule::Ax: break;
  }
  throw InternalError("ccut: position outside the context");
}

const char* name(Law law) {
  switch (law) {
    case Law::Beta: return "beta";
    case Law::Eta: return "eta";
    case Law::PassImpI: return "comm-pass-impI";
    case Law::PassImpE: return "comm-pass-impE";
  }
  return "?";
}

Equation beta(const Derivation& f, const Derivation& g) {
  std::size_t pos = f.conclusion().context.size() - 1;
  return {Law::Beta, impE(impI(f), g), ccut(g, f, pos)};
}

Equation eta(const Derivation& f) {
  const Formula& c = f.conclusion().succedent;
  if (!c.is_imp()) throw TypeError("eta needs an implication");
  return {Law::Eta, f, impI(impE(f, pass(ax(c.antecedent()))))};
}

Equation comm_pass_impI(const Derivation& f) {
  return {Law::PassImpI, pass(impI(f)), impI(pass(f))};
}

Equation comm_pass_impE(const Derivation& f, const Derivation& g) {
  return {Law::PassImpE, pass(impE(f, g)), impE(pass(f), g)};
}

}  // namespace skew::nd
