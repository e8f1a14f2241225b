#include "skew/focused.hpp"

#include "skew/error.hpp"

namespace skew::foc {

Phase phase(Rule r) noexcept {
  switch (r) {
    case Rule::ImpR:
    case Rule::P2I: return Phase::I;
    case Rule::Pass:
    case Rule::F2P: return Phase::P;
    default: return Phase::F;
  }
}

const char* name(Phase p) noexcept {
  switch (p) {
    case Phase::I: return "I";
    case Phase::P: return "P";
    case Phase::F: return "F";
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

Derivation impR(const Derivation& f) {
  need(f, Phase::I, "impR");
  const Sequent& s = f.conclusion();
  if (s.context.empty()) throw TypeError("impR: premise has an empty context");
  Context ctx(s.context.begin(), s.context.end() - 1);
  return Derivation(Rule::ImpR, {s.stoup, std::move(ctx), Formula::imp(s.context.back(), s.succedent)},
                    {f});
}

Derivation p2i(const Derivation& f) {
  need(f, Phase::P, "p2i");
  if (!f.conclusion().succedent.is_atom()) throw TypeError("p2i: succedent is not atomic");
  return Derivation(Rule::P2I, f.conclusion(), {f});
}

Derivation pass(const Derivation& f) {
  need(f, Phase::P, "pass");
  const Sequent& s = f.conclusion();
  if (!s.stoup) throw TypeError("pass: premise has an empty stoup");
  Context ctx{*s.stoup};
  ctx.insert(ctx.end(), s.context.begin(), s.context.end());
  return Derivation(Rule::Pass, {std::nullopt, std::move(ctx), s.succedent}, {f});
}

Derivation f2p(const Derivation& f) {
  need(f, Phase::F, "f2p");
  return Derivation(Rule::F2P, f.conclusion(), {f});
}

Derivation ax(const Formula& x) {
  if (!x.is_atom()) throw TypeError("ax: focused axiom must be atomic, got " + to_string(x));
  return Derivation(Rule::Ax, {x, {}, x});
}

Derivation impL(const Derivation& f, const Derivation& g) {
  need(f, Phase::I, "impL");
  need(g, Phase::F, "impL");
  const Sequent& a = f.conclusion();
  const Sequent& b = g.conclusion();
  if (a.stoup) throw TypeError("impL: loose premise has a stoup");
  if (!b.stoup) throw TypeError("impL: second premise has an empty stoup");
  return Derivation(Rule::ImpL,
                    {Formula::imp(a.succedent, *b.stoup), concat(a.context, b.context), b.succedent},
                    {f, g}, {a.context.size()});
}

namespace {

// Clause application from the clause's visible shape; shared by iota and by
// the cuts that rebuild an existing Iota node.
Derivation iota_node(const std::string& label, const Stoup& t, const std::vector<Formula>& ys,
                     const Formula& x, const std::vector<Derivation>& args, const Derivation& cont) {
  if (args.size() != ys.size())
    throw TypeError("iota " + label + ": expects " + std::to_string(ys.size()) + " argument(s)");
  Context ctx;
  std::vector<std::size_t> lens;
  std::vector<Derivation> prem;
  for (std::size_t k = 0; k < args.size(); ++k) {
    need(args[k], Phase::I, "iota");
    const Sequent& s = args[k].conclusion();
    if (s.stoup || !(s.succedent == ys[k]))
      throw TypeError("iota " + label + ": argument " + std::to_string(k) + " proves " +
                      to_string(s) + ", expected - | ... |- " + to_string(ys[k]));
    ctx.insert(ctx.end(), s.context.begin(), s.context.end());
    lens.push_back(s.context.size());
    prem.push_back(args[k]);
  }
  need(cont, Phase::F, "iota");
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

}  // namespace

Derivation iota(const Clause& c, const std::vector<Derivation>& args, const Derivation& cont) {
  Sequent s = c.sequent();
  return iota_node(c.name, s.stoup, s.context, s.succedent, args, cont);
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

Derivation check(const RawTerm& t, const Sequent& goal, Phase ph, const Multigraph* graph,
                 const std::string& path) {
  const std::string& h = t.head;
  auto fail = [&](const std::string& msg) -> Derivation {
    throw TypeError(h + " cannot prove " + to_string(goal) + " in phase " + name(ph) + ": " + msg,
                    path);
  };
  auto want = [&](Phase p) {
    if (p != ph) fail("rule belongs to phase " + std::string(name(p)));
  };
  if (h == "impR") {
    want(Phase::I);
    arity(t, 1, 0, path);
    if (!goal.succedent.is_imp()) return fail("succedent is not an implication");
    Sequent sub{goal.stoup, goal.context, goal.succedent.consequent()};
    sub.context.push_back(goal.succedent.antecedent());
    return impR(check(t.children[0], sub, Phase::I, graph, sub_path(path, 0)));
  }
  if (h == "p2i") {
    want(Phase::I);
    arity(t, 1, 0, path);
    if (!goal.succedent.is_atom()) return fail("succedent is not atomic");
    return p2i(check(t.children[0], goal, Phase::P, graph, sub_path(path, 0)));
  }
  if (h == "pass") {
    want(Phase::P);
    arity(t, 1, 0, path);
    if (goal.stoup || goal.context.empty()) return fail("needs an empty stoup and a non-empty context");
    Sequent sub{goal.context.front(), slice(goal.context, 1, goal.context.size()), goal.succedent};
    return pass(check(t.children[0], sub, Phase::P, graph, sub_path(path, 0)));
  }
  if (h == "f2p") {
    want(Phase::P);
    arity(t, 1, 0, path);
    return f2p(check(t.children[0], goal, Phase::F, graph, sub_path(path, 0)));
  }
  if (h == "ax") {
    want(Phase::F);
    arity(t, 0, 0, path);
    if (!goal.stoup || !goal.context.empty() || !(*goal.stoup == goal.succedent) ||
        !goal.succedent.is_atom())
      return fail("needs X | |- X with X atomic");
    return ax(goal.succedent);
  }
  if (h == "impL") {
    want(Phase::F);
    arity(t, 2, 1, path);
    std::size_t k = param_index(t, 0, path);
    if (!goal.stoup || !goal.stoup->is_imp()) return fail("stoup is not an implication");
    if (k > goal.context.size()) return fail("split " + std::to_string(k) + " out of range");
    Sequent s1{std::nullopt, slice(goal.context, 0, k), goal.stoup->antecedent()};
    Sequent s2{goal.stoup->consequent(), slice(goal.context, k, goal.context.size()),
               goal.succedent};
    return impL(check(t.children[0], s1, Phase::I, graph, sub_path(path, 0)),
                check(t.children[1], s2, Phase::F, graph, sub_path(path, 1)));
  }
  if (h == "iota") {
    want(Phase::F);
    if (!graph) return fail("iota needs a multigraph");
    if (!t.label) return fail("iota needs a clause name: iota[c; l1, ..., ln](...)");
    const Clause* c = graph->find(*t.label);
    if (!c) return fail("unknown clause '" + *t.label + "'");
    Sequent cs = c->sequent();
    std::size_t n = cs.context.size();
    arity(t, n + 1, n, path);
    if (goal.stoup != cs.stoup) return fail("stoup does not match clause " + c->name);
    std::vector<Derivation> args;
    std::size_t off = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t len = param_index(t, k, path);
      if (off + len > goal.context.size()) return fail("argument blocks exceed the context");
      Sequent sk{std::nullopt, slice(goal.context, off, off + len), cs.context[k]};
      args.push_back(check(t.children[k], sk, Phase::I, graph, sub_path(path, k)));
      off += len;
    }
    Sequent rest{cs.succedent, slice(goal.context, off, goal.context.size()), goal.succedent};
    Derivation cont = check(t.children[n], rest, Phase::F, graph, sub_path(path, n));
    return at(path, [&] { return iota(*c, args, cont); });
  }
  throw TypeError("unknown focused rule '" + h + "'", path);
}

namespace {

void validate_at(const Derivation& d, const Multigraph* graph, const std::string& path) {
  for (std::size_t k = 0; k < d.premises().size(); ++k)
    validate_at(d.premise(k), graph, sub_path(path, k));
  Derivation r = at(path, [&]() -> Derivation {
    switch (d.rule()) {
      case Rule::ImpR: return impR(d.premise(0));
      case Rule::P2I: return p2i(d.premise(0));
      case Rule::Pass: return pass(d.premise(0));
      case Rule::F2P: return f2p(d.premise(0));
      case Rule::Ax:
        if (!d.conclusion().stoup) throw TypeError("ax without stoup");
        return ax(*d.conclusion().stoup);
      case Rule::ImpL: return impL(d.premise(0), d.premise(1));
      case Rule::Iota: {
        std::vector<Derivation> args(d.premises().begin(), d.premises().end() - 1);
        if (graph) {
          const Clause* c = graph->find(d.label());
          if (!c) throw TypeError("unknown clause '" + d.label() + "'");
          return iota(*c, args, d.premises().back());
        }
        return rebuild_iota(d, args, d.premises().back());
      }
    }
    throw InternalError("bad focused rule");
  });
  if (!(r.conclusion() == d.conclusion()) || r.params() != d.params())
    throw TypeError("node claims " + to_string(d.conclusion()) + " but proves " +
                        to_string(r.conclusion()),
                    path);
}

}  // namespace

void validate(const Derivation& d, const Multigraph* graph) { validate_at(d, graph, "root"); }

std::string to_string(const Derivation& d) {
  auto un = [&](const char* n) { return std::string(n) + "(" + to_string(d.premise(0)) + ")"; };
  switch (d.rule()) {
    case Rule::ImpR: return un("impR");
    case Rule::P2I: return un("p2i");
    case Rule::Pass: return un("pass");
    case Rule::F2P: return un("f2p");
    case Rule::Ax: return "ax";
    case Rule::ImpL:
      return "impL[" + std::to_string(d.param(0)) + "](" + to_string(d.premise(0)) + ", " +
             to_string(d.premise(1)) + ")";
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
  throw InternalError("bad focused rule");
}

seq::Derivation emb(const Derivation& d) {
  switch (d.rule()) {
    case Rule::ImpR: return seq::impR(emb(d.premise(0)));
    case Rule::P2I:
    case Rule::F2P: return emb(d.premise(0));
    case Rule::Pass: return seq::pass(emb(d.premise(0)));
    case Rule::Ax: return seq::ax(d.conclusion().succedent);
    case Rule::ImpL: return seq::impL(emb(d.premise(0)), emb(d.premise(1)));
    case Rule::Iota: break;
  }
  throw TypeError("emb: clause applications have no sequent calculus image");
}

namespace {

nd::Derivation emb_nd_F(const nd::Derivation& acc, const Derivation& h) {
  switch (h.rule()) {
    case Rule::Ax: return acc;
    case Rule::ImpL: return emb_nd_F(nd::impE(acc, emb_nd(h.premise(0))), h.premise(1));
    default: break;
  }
  throw TypeError("emb_nd: clause applications have no natural deduction image");
}

}  // namespace

nd::Derivation emb_nd(const Derivation& d) {
  switch (d.rule()) {
    case Rule::ImpR: return nd::impI(emb_nd(d.premise(0)));
    case Rule::P2I: return emb_nd(d.premise(0));
    case Rule::Pass: return nd::pass(emb_nd(d.premise(0)));
    case Rule::F2P:
    case Rule::Ax:
    case Rule::ImpL:
    case Rule::Iota: {
      const Derivation& h = d.rule() == Rule::F2P ? d.premise(0) : d;
      if (!h.conclusion().stoup) break;
      return emb_nd_F(nd::ax(*h.conclusion().stoup), h);
    }
  }
  throw TypeError("emb_nd: clause applications have no natural deduction image");
}

Derivation pass_I(const Derivation& f) {
  switch (f.rule()) {
    case Rule::ImpR: return impR(pass_I(f.premise(0)));
    case Rule::P2I: return p2i(pass(f.premise(0)));
    default: throw InternalError("pass_I: premise is not in phase I");
  }
}

Derivation impL_I(const Derivation& f, const Derivation& g) {
  switch (g.rule()) {
    case Rule::ImpR: return impR(impL_I(f, g.premise(0)));
    case Rule::P2I: {
      const Derivation& p = g.premise(0);
      if (p.rule() != Rule::F2P) break;
      return p2i(f2p(impL(f, p.premise(0))));
    }
    default: break;
  }
  throw InternalError("impL_I: second premise is not a tight phase I derivation");
}

Derivation ax_I(const Formula& a) {
  if (a.is_atom()) return p2i(f2p(ax(a)));
  return impR(impL_I(pass_I(ax_I(a.antecedent())), ax_I(a.consequent())));
}

Derivation focus(const seq::Derivation& f) {
  switch (f.rule()) {
    case seq::Rule::Ax: return ax_I(f.conclusion().succedent);
    case seq::Rule::Pass: return pass_I(focus(f.premise(0)));
    case seq::Rule::ImpR: return impR(focus(f.premise(0)));
    case seq::Rule::ImpL: return impL_I(focus(f.premise(0)), focus(f.premise(1)));
  }
  throw InternalError("bad sequent rule");
}

namespace {

Derivation scut_IF(const Derivation& f, const Derivation& h);

// p0 : S | G |-P A, h : A | D |-F C gives S | G, D |-P C.
Derivation scut_PF(const Derivation& p0, const Derivation& h) {
  switch (p0.rule()) {
    case Rule::Pass: return pass(scut_PF(p0.premise(0), h));
    case Rule::F2P: return f2p(scut_F(p0.premise(0), h));
    default: throw InternalError("scut_PF: first premise is not in phase P");
  }
}

// f : S | G |-I A, h : A | D |-F C gives S | G, D |-P C.
Derivation scut_IF(const Derivation& f, const Derivation& h) {
  const Formula& a = f.conclusion().succedent;
  if (a.is_atom()) {
    if (f.rule() != Rule::P2I) throw InternalError("scut_IF: atomic phase I without p2i");
    return scut_PF(f.premise(0), h);
  }
  if (f.rule() != Rule::ImpR || h.rule() != Rule::ImpL)
    throw InternalError("scut_IF: non-atomic cut without impR/impL");
  const Derivation& f1 = f.premise(0);
  std::size_t pos = f.conclusion().context.size();
  return scut_IF(ccut_I(h.premise(0), f1, pos), h.premise(1));
}

}  // namespace

Derivation scut_I(const Derivation& f, const Derivation& g) {
  switch (g.rule()) {
    case Rule::ImpR: return impR(scut_I(f, g.premise(0)));
    case Rule::P2I: {
      const Derivation& p = g.premise(0);
      if (p.rule() != Rule::F2P) break;
      return p2i(scut_IF(f, p.premise(0)));
    }
    default: break;
  }
  throw InternalError("scut_I: ill-typed premises");
}

Derivation scut_P(const Derivation& f, const Derivation& g) {
  if (g.rule() != Rule::F2P) throw InternalError("scut_P: second premise is not tight");
  return scut_PF(f, g.premise(0));
}

Derivation scut_F(const Derivation& f, const Derivation& g) {
  switch (f.rule()) {
    case Rule::Ax: return g;
    case Rule::ImpL: return impL(f.premise(0), scut_F(f.premise(1), g));
    case Rule::Iota: {
      std::vector<Derivation> args(f.premises().begin(), f.premises().end() - 1);
      return rebuild_iota(f, args, scut_F(f.premises().back(), g));
    }
    default: throw InternalError("scut_F: first premise is not in phase F");
  }
}

Derivation ccut_I(const Derivation& e, const Derivation& g, std::size_t pos) {
  switch (g.rule()) {
    case Rule::ImpR: return impR(ccut_I(e, g.premise(0), pos));
    case Rule::P2I: return p2i(ccut_P(e, g.premise(0), pos));
    default: throw InternalError("ccut_I: second premise is not in phase I");
  }
}

Derivation ccut_P(const Derivation& e, const Derivation& g, std::size_t pos) {
  switch (g.rule()) {
    case Rule::Pass: {
      const Derivation& p = g.premise(0);
      if (pos > 0) return pass(ccut_P(e, p, pos - 1));
      if (p.rule() != Rule::F2P) throw InternalError("ccut_P: passivated premise is not tight");
      return scut_IF(e, p.premise(0));
    }
    case Rule::F2P: return f2p(ccut_F(e, g.premise(0), pos));
    default: throw InternalError("ccut_P: second premise is not in phase P");
  }
}

Derivation ccut_F(const Derivation& e, const Derivation& g, std::size_t pos) {
  switch (g.rule()) {
    case Rule::ImpL: {
      std::size_t k = g.param(0);
      if (pos < k) return impL(ccut_I(e, g.premise(0), pos), g.premise(1));
      return impL(g.premise(0), ccut_F(e, g.premise(1), pos - k));
    }
    case Rule::Iota: {
      std::vector<Derivation> args(g.premises().begin(), g.premises().end() - 1);
      std::size_t off = 0;
      for (std::size_t k = 0; k < args.size(); ++k) {
        if (pos < off + g.param(k)) {
          args[k] = ccut_I(e, args[k], pos - off);
          return rebuild_iota(g, args, g.premises().back());
        }
        off += g.param(k);
      }
      return rebuild_iota(g, args, ccut_F(e, g.premises().back(), pos - off));
    }
    default: throw InternalError("ccut_F: position outside the context");
  }
}

Derivation impE_I(const Derivation& f, const Derivation& g) {
  if (f.rule() != Rule::ImpR) throw InternalError("impE_I: function is not an impR");
  return ccut_I(g, f.premise(0), f.conclusion().context.size());
}

Derivation ax_I_nd(const Formula& a) {
  std::vector<Formula> args;
  Formula x = a;
  while (x.is_imp()) {
    args.push_back(x.antecedent());
    x = x.consequent();
  }
  // Spine for stoup a: impL(arg1, impL(arg2, ... ax X)), built inside out.
  Derivation spine = ax(x);
  for (std::size_t k = args.size(); k-- > 0;) spine = impL(pass_I(ax_I_nd(args[k])), spine);
  Derivation out = p2i(f2p(spine));
  for (std::size_t k = 0; k < args.size(); ++k) out = impR(out);
  return out;
}

Derivation hered(const nd::Derivation& f) {
  switch (f.rule()) {
    case nd::Rule::Ax: return ax_I_nd(f.conclusion().succedent);
    case nd::Rule::Pass: return pass_I(hered(f.premise(0)));
    case nd::Rule::ImpI: return impR(hered(f.premise(0)));
    case nd::Rule::ImpE: return impE_I(hered(f.premise(0)), hered(f.premise(1)));
  }
  throw InternalError("bad natural deduction rule");
}

}  // namespace skew::foc
