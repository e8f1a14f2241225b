#include "skew/multigraph.hpp"

#include "skew/error.hpp"

namespace skew::mg {

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

Derivation impC(const Derivation& f, const Derivation& g, std::size_t pos) {
  const Sequent& a = f.conclusion();
  const Sequent& b = g.conclusion();
  if (a.stoup) throw TypeError("impC: loose premise has a stoup");
  if (pos >= b.context.size()) throw TypeError("impC: position out of range");
  Context ctx = slice(b.context, 0, pos);
  ctx.push_back(Formula::imp(a.succedent, b.context[pos]));
  ctx.insert(ctx.end(), a.context.begin(), a.context.end());
  ctx.insert(ctx.end(), b.context.begin() + static_cast<std::ptrdiff_t>(pos) + 1, b.context.end());
  return Derivation(Rule::ImpC, {b.stoup, std::move(ctx), b.succedent}, {f, g},
                    {pos, a.context.size()});
}

namespace {

Derivation iota_node(const std::string& label, const Stoup& t, const std::vector<Formula>& ys,
                     const Formula& x, const std::vector<Derivation>& args, const Derivation& cont) {
  if (args.size() != ys.size())
    throw TypeError("iota " + label + ": expects " + std::to_string(ys.size()) + " argument(s)");
  Context ctx;
  std::vector<std::size_t> lens;
  std::vector<Derivation> prem;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const Sequent& s = args[k].conclusion();
    if (s.stoup || !(s.succedent == ys[k]))
      throw TypeError("iota " + label + ": argument " + std::to_string(k) + " proves " +
                      to_string(s));
    ctx.insert(ctx.end(), s.context.begin(), s.context.end());
    lens.push_back(s.context.size());
    prem.push_back(args[k]);
  }
  const Sequent& cs = cont.conclusion();
  if (!cs.stoup || !(*cs.stoup == x))
    throw TypeError("iota " + label + ": continuation must have stoup " + to_string(x));
  ctx.insert(ctx.end(), cs.context.begin(), cs.context.end());
  prem.push_back(cont);
  return Derivation(Rule::Iota, {t, std::move(ctx), cs.succedent}, std::move(prem), std::move(lens),
                    label);
}

Derivation rebuild_iota(const Derivation& old, const std::vector<Derivation>& args,
                        const Derivation& cont) {
  std::vector<Formula> ys;
  for (std::size_t k = 0; k + 1 < old.premises().size(); ++k)
    ys.push_back(old.premise(k).conclusion().succedent);
  const Formula& x = *old.premises().back().conclusion().stoup;
  return iota_node(old.label(), old.conclusion().stoup, ys, x, args, cont);
}

std::vector<Derivation> args_of(const Derivation& d) {
  return {d.premises().begin(), d.premises().end() - 1};
}

}  // namespace

Derivation iota(const Clause& c, const std::vector<Derivation>& args, const Derivation& cont) {
  Sequent s = c.sequent();
  return iota_node(c.name, s.stoup, s.context, s.succedent, args, cont);
}

Derivation iota(const Clause& c) {
  Sequent s = c.sequent();
  std::vector<Derivation> args;
  for (const auto& y : s.context) args.push_back(pass(ax(y)));
  return iota(c, args, ax(s.succedent));
}

namespace {

void arity(const RawTerm& t, std::size_t children, std::size_t params, const std::string& path) {
  if (t.children.size() != children || t.params.size() != params)
    throw TypeError(t.head + " expects " + std::to_string(children) + " argument(s) and " +
                        std::to_string(params) + " index(es)",
                    path);
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

Derivation check(const Multigraph& gr, const RawTerm& t, const Sequent& goal,
                 const std::string& path) {
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
    return pass(check(gr, t.children[0], sub, sub_path(path, 0)));
  }
  if (h == "impR") {
    arity(t, 1, 0, path);
    if (!goal.succedent.is_imp()) return fail("succedent is not an implication");
    Sequent sub{goal.stoup, goal.context, goal.succedent.consequent()};
    sub.context.push_back(goal.succedent.antecedent());
    return impR(check(gr, t.children[0], sub, sub_path(path, 0)));
  }
  if (h == "impL") {
    arity(t, 2, 1, path);
    std::size_t k = param_index(t, 0, path);
    if (!goal.stoup || !goal.stoup->is_imp()) return fail("stoup is not an implication");
    if (k > goal.context.size()) return fail("split out of range");
    Sequent s1{std::nullopt, slice(goal.context, 0, k), goal.stoup->antecedent()};
    Sequent s2{goal.stoup->consequent(), slice(goal.context, k, goal.context.size()),
               goal.succedent};
    return impL(check(gr, t.children[0], s1, sub_path(path, 0)),
                check(gr, t.children[1], s2, sub_path(path, 1)));
  }
  if (h == "impC") {
    arity(t, 2, 2, path);
    std::size_t p = param_index(t, 0, path);
    std::size_t k = param_index(t, 1, path);
    const Context& ctx = goal.context;
    if (p >= ctx.size() || p + 1 + k > ctx.size()) return fail("position or length out of range");
    if (!ctx[p].is_imp()) return fail("context formula " + std::to_string(p) + " is not an implication");
    Sequent s1{std::nullopt, slice(ctx, p + 1, p + 1 + k), ctx[p].antecedent()};
    Context rest = slice(ctx, 0, p);
    rest.push_back(ctx[p].consequent());
    for (std::size_t i = p + 1 + k; i < ctx.size(); ++i) rest.push_back(ctx[i]);
    Sequent s2{goal.stoup, std::move(rest), goal.succedent};
    Derivation f = check(gr, t.children[0], s1, sub_path(path, 0));
    Derivation g = check(gr, t.children[1], s2, sub_path(path, 1));
    return impC(f, g, p);
  }
  if (h == "iota") {
    bool bare = !t.has_bracket && t.children.size() == 1 && !t.children[0].has_parens &&
                !t.children[0].has_bracket;
    std::string cname = bare ? t.children[0].head : (t.label ? *t.label : "");
    if (cname.empty()) return fail("iota needs a clause name");
    const Clause* c = gr.find(cname);
    if (!c) return fail("unknown clause '" + cname + "'");
    Sequent cs = c->sequent();
    if (bare) {
      if (!(goal == cs)) return fail("clause " + cname + " proves " + to_string(cs));
      return iota(*c);
    }
    std::size_t n = cs.context.size();
    arity(t, n + 1, n, path);
    if (goal.stoup != cs.stoup) return fail("stoup does not match clause " + cname);
    std::vector<Derivation> args;
    std::size_t off = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t len = param_index(t, k, path);
      if (off + len > goal.context.size()) return fail("argument blocks exceed the context");
      Sequent sk{std::nullopt, slice(goal.context, off, off + len), cs.context[k]};
      args.push_back(check(gr, t.children[k], sk, sub_path(path, k)));
      off += len;
    }
    Sequent rest{cs.succedent, slice(goal.context, off, goal.context.size()), goal.succedent};
    Derivation cont = check(gr, t.children[n], rest, sub_path(path, n));
    return at(path, [&] { return iota(*c, args, cont); });
  }
  throw TypeError("unknown multigraph rule '" + h + "'", path);
}

namespace {

void validate_at(const Multigraph& gr, const Derivation& d, const std::string& path) {
  for (std::size_t k = 0; k < d.premises().size(); ++k)
    validate_at(gr, d.premise(k), sub_path(path, k));
  Derivation r = at(path, [&]() -> Derivation {
    switch (d.rule()) {
      case Rule::Ax:
        if (!d.conclusion().stoup) throw TypeError("ax without stoup");
        return ax(*d.conclusion().stoup);
      case Rule::Pass: return pass(d.premise(0));
      case Rule::ImpR: return impR(d.premise(0));
      case Rule::ImpL: return impL(d.premise(0), d.premise(1));
      case Rule::ImpC: return impC(d.premise(0), d.premise(1), d.param(0));
      case Rule::Iota: {
        const Clause* c = gr.find(d.label());
        if (!c) throw TypeError("unknown clause '" + d.label() + "'");
        return iota(*c, args_of(d), d.premises().back());
      }
    }
    throw InternalError("bad multigraph rule");
  });
  if (!(r.conclusion() == d.conclusion()) || r.params() != d.params())
    throw TypeError("node claims " + to_string(d.conclusion()) + " but proves " +
                        to_string(r.conclusion()),
                    path);
}

}  // namespace

void validate(const Multigraph& g, const Derivation& d) { validate_at(g, d, "root"); }

std::string to_string(const Derivation& d) {
  auto two = [&](std::string head) {
    return head + "(" + to_string(d.premise(0)) + ", " + to_string(d.premise(1)) + ")";
  };
  switch (d.rule()) {
    case Rule::Ax: return "ax";
    case Rule::Pass: return "pass(" + to_string(d.premise(0)) + ")";
    case Rule::ImpR: return "impR(" + to_string(d.premise(0)) + ")";
    case Rule::ImpL: return two("impL[" + std::to_string(d.param(0)) + "]");
    case Rule::ImpC:
      return two("impC[" + std::to_string(d.param(0)) + ", " + std::to_string(d.param(1)) + "]");
    case Rule::Iota: {
      std::string out = "iota[" + d.label() + ";";
      for (std::size_t k = 0; k < d.params().size(); ++k)
        out += (k ? ", " : " ") + std::to_string(d.param(k));
      out += "](";
      for (std::size_t k = 0; k < d.premises().size(); ++k)
        out += (k ? ", " : "") + to_string(d.premise(k));
      return out + ")";
    }
  }
  throw InternalError("bad multigraph rule");
}

Derivation scut(const Derivation& f, const Derivation& g) {
  switch (f.rule()) {
    case Rule::Ax: return g;
    case Rule::Pass: return pass(scut(f.premise(0), g));
    case Rule::ImpL: return impL(f.premise(0), scut(f.premise(1), g));
    case Rule::ImpC: return impC(f.premise(0), scut(f.premise(1), g), f.param(0));
    case Rule::Iota: return rebuild_iota(f, args_of(f), scut(f.premises().back(), g));
    case Rule::ImpR: break;
  }
  std::size_t n = f.conclusion().context.size();
  switch (g.rule()) {
    case Rule::Ax: return f;
    case Rule::ImpR: return impR(scut(f, g.premise(0)));
    case Rule::ImpL: return scut(ccut(g.premise(0), f.premise(0), n), g.premise(1));
    case Rule::ImpC: return impC(g.premise(0), scut(f, g.premise(1)), n + g.param(0));
    default: break;
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
    case Rule::ImpC: {
      std::size_t p = g.param(0), k = g.param(1);
      const Derivation& g1 = g.premise(0);
      const Derivation& g2 = g.premise(1);
      std::size_t n = e.conclusion().context.size();
      if (pos < p) return impC(g1, ccut(e, g2, pos), p + n - 1);
      if (pos == p) {
        const Formula& b = g.conclusion().context[p].consequent();
        return ccut(scut(e, impL(g1, ax(b))), g2, p);
      }
      if (pos <= p + k) return impC(ccut(e, g1, pos - p - 1), g2, p);
      return impC(g1, ccut(e, g2, pos - k), p);
    }
    case Rule::Iota: {
      std::vector<Derivation> args = args_of(g);
      std::size_t off = 0;
      for (std::size_t k = 0; k < args.size(); ++k) {
        if (pos < off + g.param(k)) {
          args[k] = ccut(e, args[k], pos - off);
          return rebuild_iota(g, args, g.premises().back());
        }
        off += g.param(k);
      }
      return rebuild_iota(g, args, ccut(e, g.premises().back(), pos - off));
    }
    case Rule::Ax: break;
  }
  throw InternalError("ccut: position outside the context");
}

Derivation ccut_fma(const Derivation& f, const Derivation& g, std::size_t pos) {
  return ccut(pass(f), g, pos);
}

namespace {

foc::Derivation rebuild_foc_iota(const Derivation& node, const std::vector<foc::Derivation>& args,
                                 const foc::Derivation& cont) {
  Clause c;
  c.name = node.label();
  if (node.conclusion().stoup) c.stoup = node.conclusion().stoup->name();
  for (std::size_t k = 0; k + 1 < node.premises().size(); ++k)
    c.premises.push_back(node.premise(k).conclusion().succedent.name());
  c.conclusion = node.premises().back().conclusion().stoup->name();
  return foc::iota(c, args, cont);
}

foc::Derivation iota_I(const Derivation& node, const std::vector<foc::Derivation>& args,
                       const foc::Derivation& k) {
  switch (k.rule()) {
    case foc::Rule::ImpR: return foc::impR(iota_I(node, args, k.premise(0)));
    case foc::Rule::P2I: {
      const foc::Derivation& p = k.premise(0);
      if (p.rule() != foc::Rule::F2P) break;
      return foc::p2i(foc::f2p(rebuild_foc_iota(node, args, p.premise(0))));
    }
    default: break;
  }
  throw InternalError("iota_I: continuation is not tight");
}

}  // namespace

foc::Derivation focus(const Derivation& d) {
  switch (d.rule()) {
    case Rule::Ax: return foc::ax_I(d.conclusion().succedent);
    case Rule::Pass: return foc::pass_I(focus(d.premise(0)));
    case Rule::ImpR: return foc::impR(focus(d.premise(0)));
    case Rule::ImpL: return foc::impL_I(focus(d.premise(0)), focus(d.premise(1)));
    case Rule::ImpC: {
      const Formula& ab = d.conclusion().context[d.param(0)];
      foc::Derivation e =
          foc::pass_I(foc::impL_I(focus(d.premise(0)), foc::ax_I(ab.consequent())));
      return foc::ccut_I(e, focus(d.premise(1)), d.param(0));
    }
    case Rule::Iota: {
      std::vector<foc::Derivation> args;
      for (std::size_t k = 0; k + 1 < d.premises().size(); ++k) args.push_back(focus(d.premise(k)));
      return iota_I(d, args, focus(d.premises().back()));
    }
  }
  throw InternalError("bad multigraph rule");
}

Derivation emb(const foc::Derivation& d) {
  switch (d.rule()) {
    case foc::Rule::ImpR: return impR(mg::emb(d.premise(0)));
    case foc::Rule::P2I:
    case foc::Rule::F2P: return mg::emb(d.premise(0));
    case foc::Rule::Pass: return pass(mg::emb(d.premise(0)));
    case foc::Rule::Ax: return ax(d.conclusion().succedent);
    case foc::Rule::ImpL: return impL(mg::emb(d.premise(0)), mg::emb(d.premise(1)));
    case foc::Rule::Iota: {
      std::vector<Derivation> args;
      for (std::size_t k = 0; k + 1 < d.premises().size(); ++k) args.push_back(mg::emb(d.premise(k)));
      std::vector<Formula> ys;
      for (const auto& a : args) ys.push_back(a.conclusion().succedent);
      const Derivation cont = mg::emb(d.premises().back());
      return iota_node(d.label(), d.conclusion().stoup, ys, *cont.conclusion().stoup, args, cont);
    }
  }
  throw InternalError("bad focused rule");
}

ActResult act_attempt(const Derivation& f) {
  switch (f.rule()) {
    case Rule::Pass: return f.premise(0);
    case Rule::ImpR: {
      ActResult r = act_attempt(f.premise(0));
      if (auto* d = std::get_if<Derivation>(&r)) return impR(*d);
      return r;
    }
    case Rule::ImpC: {
      ActResult r = act_attempt(f.premise(1));
      auto* d = std::get_if<Derivation>(&r);
      if (!d) return r;
      if (f.param(0) == 0) return impL(f.premise(0), *d);
      return impC(f.premise(0), *d, f.param(0) - 1);
    }
    case Rule::Iota:
      return Counterexample{f, "clause " + f.label() +
                                   " is loose; no rule moves its first premise into the stoup"};
    case Rule::Ax:
    case Rule::ImpL: break;
  }
  throw InternalError("act_attempt: premise has a stoup");
}

Enumeration enumerate(const Multigraph& g, const Sequent& s, std::size_t fuel, std::size_t cap) {
  coherence::Options opts;
  opts.graph = &g;
  opts.fuel = fuel;
  opts.cap = cap;
  coherence::Search search(opts);
  Enumeration out;
  out.derivations = search.enumerate(s);
  out.truncated = search.truncated();
  return out;
}

Count count(const Multigraph& g, const Sequent& s, std::size_t fuel) {
  coherence::Options opts;
  opts.graph = &g;
  opts.fuel = fuel;
  coherence::Search search(opts);
  Count out;
  out.value = search.count(s);
  out.truncated = search.truncated();
  return out;
}

const char* name(Law law) {
  switch (law) {
    case Law::ImpCImpR: return "impC/impR";
    case Law::PassImpC: return "pass/impC";
    case Law::PassImpL: return "pass/impL";
    case Law::ImpCImpLR: return "impC/impL-right";
    case Law::ImpCImpLL: return "impC/impL-left";
    case Law::ImpCSwap: return "impC/impC-swap";
    case Law::ImpCNest: return "impC/impC-nest";
  }
  return "?";
}

Equation conv_impR(const Derivation& f, const Derivation& g, std::size_t p) {
  return {Law::ImpCImpR, impC(f, impR(g), p), impR(impC(f, g, p))};
}

Equation conv_pass_impC(const Derivation& f, const Derivation& g, std::size_t p) {
  return {Law::PassImpC, pass(impC(f, g, p)), impC(f, pass(g), p + 1)};
}

Equation conv_pass_impL(const Derivation& f, const Derivation& g) {
  return {Law::PassImpL, pass(impL(f, g)), impC(f, pass(g), 0)};
}

Equation conv_impL_right(const Derivation& f, const Derivation& g, const Derivation& h,
                         std::size_t p) {
  std::size_t n = g.conclusion().context.size();
  return {Law::ImpCImpLR, impC(f, impL(g, h), n + p), impL(g, impC(f, h, p))};
}

Equation conv_impL_left(const Derivation& f, const Derivation& g, const Derivation& h,
                        std::size_t p) {
  return {Law::ImpCImpLL, impC(f, impL(g, h), p), impL(impC(f, g, p), h)};
}

Equation conv_swap(const Derivation& f, const Derivation& g, const Derivation& h, std::size_t p,
                   std::size_t q) {
  std::size_t n = f.conclusion().context.size();
  return {Law::ImpCSwap, impC(f, impC(g, h, q), p), impC(g, impC(f, h, p), q + n)};
}

Equation conv_nest(const Derivation& f, const Derivation& g, const Derivation& h, std::size_t p,
                   std::size_t q) {
  return {Law::ImpCNest, impC(f, impC(g, h, q), q + 1 + p), impC(impC(f, g, p), h, q)};
}

}  // namespace skew::mg
