#include "skew/normal_nd.hpp"

#include "skew/error.hpp"

namespace skew::nf {

Phase phase(Rule r) noexcept {
  switch (r) {
    case Rule::ImpI:
    case Rule::P2Nf: return Phase::Nf;
    case Rule::Pass:
    case Rule::Ne2P: return Phase::P;
    default: return Phase::Ne;
  }
}

const char* name(Phase p) noexcept {
  switch (p) {
    case Phase::Nf: return "nf";
    case Phase::P: return "p";
    case Phase::Ne: return "ne";
  }
  return "?";
}

namespace {

void need(const Derivation& d, Phase p, const char* who) {
  if (phase(d) != p)
    throw TypeError(std::string(who) + ": premise is in phase " + name(phase(d)) +
                    ", expected " + name(p));
}

}  // namespace

Derivation impI(const Derivation& f) {
  need(f, Phase::Nf, "impI");
  const Sequent& s = f.conclusion();
  if (s.context.empty()) throw TypeError("impI: premise has an empty context");
  Context ctx(s.context.begin(), s.context.end() - 1);
  return Derivation(Rule::ImpI, {s.stoup, std::move(ctx), Formula::imp(s.context.back(), s.succedent)},
                    {f});
}

Derivation p2nf(const Derivation& f) {
  need(f, Phase::P, "p2nf");
  if (!f.conclusion().succedent.is_atom()) throw TypeError("p2nf: succedent is not atomic");
  return Derivation(Rule::P2Nf, f.conclusion(), {f});
}

Derivation pass(const Derivation& f) {
  need(f, Phase::P, "pass");
  const Sequent& s = f.conclusion();
  if (!s.stoup) throw TypeError("pass: premise has an empty stoup");
  Context ctx{*s.stoup};
  ctx.insert(ctx.end(), s.context.begin(), s.context.end());
  return Derivation(Rule::Pass, {std::nullopt, std::move(ctx), s.succedent}, {f});
}

Derivation ne2p(const Derivation& f) {
  need(f, Phase::Ne, "ne2p");
  return Derivation(Rule::Ne2P, f.conclusion(), {f});
}

Derivation ax(const Formula& a) { return Derivation(Rule::Ax, {a, {}, a}); }

Derivation impE(const Derivation& f, const Derivation& g) {
  need(f, Phase::Ne, "impE");
  need(g, Phase::Nf, "impE");
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

void arity(const RawTerm& t, std::size_t children, std::size_t params, const std::string& path) {
  if (t.children.size() != children || t.params.size() != params)
    throw TypeError(t.head + " expects " + std::to_string(children) + " argument(s) and " +
                        std::to_string(params) + " index(es)",
                    path);
}

Derivation infer_ne(const RawTerm& t, const Stoup& s, const Context& ctx, const std::string& path) {
  if (t.head == "ax") {
    arity(t, 0, 0, path);
    if (!s || !ctx.empty())
      throw TypeError("ax needs A | |- A, got " + to_string(Sequent{s, ctx, Formula::atom("?")}),
                      path);
    return ax(*s);
  }
  if (t.head == "impE") {
    arity(t, 2, 1, path);
    std::size_t k = param_index(t, 0, path);
    if (k > ctx.size()) throw TypeError("impE split " + std::to_string(k) + " out of range", path);
    Derivation f = infer_ne(t.children[0], s, slice(ctx, 0, k), sub_path(path, 0));
    const Formula& fc = f.conclusion().succedent;
    if (!fc.is_imp())
      throw TypeError("impE: function part proves " + to_string(fc), sub_path(path, 0));
    Derivation g = check(t.children[1], {std::nullopt, slice(ctx, k, ctx.size()), fc.antecedent()},
                         Phase::Nf, sub_path(path, 1));
    return impE(f, g);
  }
  throw TypeError("'" + t.head + "' is not a neutral rule", path);
}

}  // namespace

Derivation check(const RawTerm& t, const Sequent& goal, Phase ph, const std::string& path) {
  const std::string& h = t.head;
  auto fail = [&](const std::string& msg) -> Derivation {
    throw TypeError(h + " cannot prove " + to_string(goal) + " in phase " + name(ph) + ": " + msg,
                    path);
  };
  Phase want = (h == "impI" || h == "p2nf") ? Phase::Nf
               : (h == "pass" || h == "ne2p") ? Phase::P
               : Phase::Ne;
  if (h != "impI" && h != "p2nf" && h != "pass" && h != "ne2p" && h != "ax" && h != "impE")
    throw TypeError("unknown normal form rule '" + h + "'", path);
  if (want != ph) return fail("rule belongs to phase " + std::string(name(want)));
  if (h == "impI") {
    arity(t, 1, 0, path);
    if (!goal.succedent.is_imp()) return fail("succedent is not an implication");
    Sequent sub{goal.stoup, goal.context, goal.succedent.consequent()};
    sub.context.push_back(goal.succedent.antecedent());
    return impI(check(t.children[0], sub, Phase::Nf, sub_path(path, 0)));
  }
  if (h == "p2nf") {
    arity(t, 1, 0, path);
    if (!goal.succedent.is_atom()) return fail("succedent is not atomic");
    return p2nf(check(t.children[0], goal, Phase::P, sub_path(path, 0)));
  }
  if (h == "pass") {
    arity(t, 1, 0, path);
    if (goal.stoup || goal.context.empty()) return fail("needs an empty stoup and a non-empty context");
    Sequent sub{goal.context.front(), slice(goal.context, 1, goal.context.size()), goal.succedent};
    return pass(check(t.children[0], sub, Phase::P, sub_path(path, 0)));
  }
  if (h == "ne2p") {
    arity(t, 1, 0, path);
    return ne2p(check(t.children[0], goal, Phase::Ne, sub_path(path, 0)));
  }
  Derivation n = infer_ne(t, goal.stoup, goal.context, path);
  if (!(n.conclusion().succedent == goal.succedent))
    return fail("neutral proves " + to_string(n.conclusion()));
  return n;
}

namespace {

void validate_at(const Derivation& d, const std::string& path) {
  for (std::size_t k = 0; k < d.premises().size(); ++k) validate_at(d.premise(k), sub_path(path, k));
  std::optional<Derivation> r;
  try {
    switch (d.rule()) {
      case Rule::ImpI: r = impI(d.premise(0)); break;
      case Rule::P2Nf: r = p2nf(d.premise(0)); break;
      case Rule::Pass: r = pass(d.premise(0)); break;
      case Rule::Ne2P: r = ne2p(d.premise(0)); break;
      case Rule::Ax:
        if (!d.conclusion().stoup) throw TypeError("ax without stoup");
        r = ax(*d.conclusion().stoup);
        break;
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

}  // namespace

void validate(const Derivation& d) { validate_at(d, "root"); }

std::string to_string(const Derivation& d) {
  auto un = [&](const char* n) { return std::string(n) + "(" + to_string(d.premise(0)) + ")"; };
  switch (d.rule()) {
    case Rule::ImpI: return un("impI");
    case Rule::P2Nf: return un("p2nf");
    case Rule::Pass: return un("pass");
    case Rule::Ne2P: return un("ne2p");
    case Rule::Ax: return "ax";
    case Rule::ImpE:
      return "impE[" + std::to_string(d.param(0)) + "](" + to_string(d.premise(0)) + ", " +
             to_string(d.premise(1)) + ")";
  }
  throw InternalError("bad normal form rule");
}

nd::Derivation emb(const Derivation& d) {
  switch (d.rule()) {
    case Rule::ImpI: return nd::impI(emb(d.premise(0)));
    case Rule::P2Nf:
    case Rule::Ne2P: return emb(d.premise(0));
    case Rule::Pass: return nd::pass(emb(d.premise(0)));
    case Rule::Ax: return nd::ax(d.conclusion().succedent);
    case Rule::ImpE: return nd::impE(emb(d.premise(0)), emb(d.premise(1)));
  }
  throw InternalError("bad normal form rule");
}

Value Value::atomic(Derivation nf) {
  auto rep = std::make_shared<Rep>(Rep{nf.conclusion().succedent, std::move(nf), {}});
  return Value(std::move(rep));
}

Value Value::function(Formula type, Fn fn) {
  auto rep = std::make_shared<Rep>(Rep{std::move(type), std::nullopt, std::move(fn)});
  return Value(std::move(rep));
}

Value eval(const nd::Derivation& d, const Environment& env) {
  switch (d.rule()) {
    case nd::Rule::Ax:
      if (!env.stoup) throw InternalError("eval: ax under an empty stoup");
      return *env.stoup;
    case nd::Rule::Pass: {
      Environment inner{env.entries.at(0), {env.entries.begin() + 1, env.entries.end()}};
      return eval(d.premise(0), inner);
    }
    case nd::Rule::ImpI: {
      nd::Derivation body = d.premise(0);
      return Value::function(d.conclusion().succedent, [body, env](const Value& a) {
        Environment ext = env;
        ext.entries.push_back(a);
        return eval(body, ext);
      });
    }
    case nd::Rule::ImpE: {
      std::size_t k = d.param(0);
      auto mid = env.entries.begin() + static_cast<std::ptrdiff_t>(k);
      Environment fun{env.stoup, {env.entries.begin(), mid}};
      Environment arg{std::nullopt, {mid, env.entries.end()}};
      return eval(d.premise(0), fun).apply(eval(d.premise(1), arg));
    }
  }
  throw InternalError("bad natural deduction rule");
}

Value reflect(const Derivation& n) {
  const Formula& c = n.conclusion().succedent;
  if (c.is_atom()) return Value::atomic(p2nf(ne2p(n)));
  return Value::function(c, [n](const Value& a) { return reflect(impE(n, reify(a))); });
}

Value sem_pass(const Value& v) {
  if (v.type().is_atom()) {
    const Derivation& d = v.normal();
    if (d.rule() != Rule::P2Nf) throw InternalError("sem_pass: atomic value is not p2nf");
    return Value::atomic(p2nf(pass(d.premise(0))));
  }
  return Value::function(v.type(), [v](const Value& a) { return sem_pass(v.apply(a)); });
}

Derivation reify(const Value& v) {
  const Formula& t = v.type();
  if (t.is_atom()) return v.normal();
  Value fresh = sem_pass(reflect(ax(t.antecedent())));
  return impI(reify(v.apply(fresh)));
}

Environment gamma(const Stoup& s, const Context& ctx) {
  Environment env;
  if (s) env.stoup = reflect(ax(*s));
  for (const auto& a : ctx) env.entries.push_back(sem_pass(reflect(ax(a))));
  return env;
}

Derivation nbe(const nd::Derivation& d) {
  const Sequent& s = d.conclusion();
  return reify(eval(d, gamma(s.stoup, s.context)));
}

}  // namespace skew::nf
