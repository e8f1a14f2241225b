#include "skew/bridge.hpp"

#include "skew/error.hpp"

namespace skew::bridge {

Formula iterated_hom(const Context& ctx, const Formula& c) {
  Formula out = c;
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) out = Formula::imp(*it, out);
  return out;
}

cat::Derivation Lstar(const Context& ctx, const Formula& a, const Formula& d) {
  if (ctx.empty()) return cat::id(Formula::imp(a, d));
  const Formula& b = ctx.front();
  Context rest = slice(ctx, 1, ctx.size());
  cat::Derivation l = cat::L(b, iterated_hom(rest, a), iterated_hom(rest, d));
  if (rest.empty()) return l;
  return cat::comp(Lstar(rest, a, d), l);
}

cat::Derivation sound(const seq::Derivation& f) {
  switch (f.rule()) {
    case seq::Rule::Ax: return cat::id(f.conclusion().succedent);
    case seq::Rule::ImpR: return sound(f.premise(0));
    case seq::Rule::Pass: return cat::jhat(sound(f.premise(0)));
    case seq::Rule::ImpL: {
      const seq::Derivation& l = f.premise(0);
      const seq::Derivation& r = f.premise(1);
      const Formula& a = l.conclusion().succedent;
      const Context& gamma = l.conclusion().context;
      Formula d = iterated_hom(r.conclusion().context, r.conclusion().succedent);
      cat::Derivation tail = cat::comp(Lstar(gamma, a, d),
                                       cat::i(sound(l), iterated_hom(gamma, d)));
      return cat::comp(cat::imp(cat::id(a), sound(r)), tail);
    }
  }
  throw InternalError("bad sequent rule");
}

namespace {

seq::Derivation cmplt0(const cat::Derivation& f) {
  const Sequent& s = f.conclusion();
  switch (f.rule()) {
    case cat::Rule::Id: return seq::ax(s.succedent);
    case cat::Rule::Comp: return seq::scut(cmplt0(f.premise(0)), cmplt0(f.premise(1)));
    case cat::Rule::ImpF:
      return seq::impR(seq::impL(seq::pass(cmplt0(f.premise(0))), cmplt0(f.premise(1))));
    case cat::Rule::J: return seq::impR(seq::pass(seq::ax(s.succedent.antecedent())));
    case cat::Rule::I: return seq::impL(cmplt0(f.premise(0)), seq::ax(s.succedent));
    case cat::Rule::L: {
      const Formula& c = s.succedent;
      Formula a = c.antecedent().antecedent(), b = c.antecedent().consequent();
      Formula cc = c.consequent().consequent();
      using namespace seq;
      return impR(impR(impL(pass(impL(pass(ax(a)), ax(b))), ax(cc))));
    }
    case cat::Rule::Gen: break;
  }
  throw TypeError("cmplt: generators have no sequent calculus image");
}

}  // namespace

seq::Derivation cmplt(const cat::Derivation& f, const Context& ctx) {
  Formula c = f.conclusion().succedent;
  for (const auto& a : ctx) {
    if (!c.is_imp() || !(c.antecedent() == a))
      throw TypeError("cmplt: " + to_string(f.conclusion().succedent) + " does not unfold along " +
                      to_string(ctx));
    c = c.consequent();
  }
  seq::Derivation out = cmplt0(f);
  for (std::size_t k = 0; k < ctx.size(); ++k) out = seq::invR(out);
  return out;
}

foc::Derivation nf2I(const nf::Derivation& f) {
  switch (f.rule()) {
    case nf::Rule::ImpI: return foc::impR(nf2I(f.premise(0)));
    case nf::Rule::P2Nf: return foc::p2i(p2P(f.premise(0)));
    default: throw TypeError("nf2I: input is not in phase nf");
  }
}

foc::Derivation p2P(const nf::Derivation& f) {
  switch (f.rule()) {
    case nf::Rule::Pass: return foc::pass(p2P(f.premise(0)));
    case nf::Rule::Ne2P: return foc::f2p(ne2F(f.premise(0)));
    default: throw TypeError("p2P: input is not in phase p");
  }
}

foc::Derivation ne2F(const nf::Derivation& f) {
  if (nf::phase(f) != nf::Phase::Ne) throw TypeError("ne2F: input is not in phase ne");
  const Formula& c = f.conclusion().succedent;
  if (!c.is_atom()) throw TypeError("ne2F: neutral at non-atomic type " + to_string(c));
  return ne2F_acc(f, foc::ax(c));
}

foc::Derivation ne2F_acc(const nf::Derivation& n, const foc::Derivation& g) {
  switch (n.rule()) {
    case nf::Rule::Ax: return g;
    case nf::Rule::ImpE: return ne2F_acc(n.premise(0), foc::impL(nf2I(n.premise(1)), g));
    default: throw TypeError("ne2F: input is not in phase ne");
  }
}

nf::Derivation I2nf(const foc::Derivation& f) {
  switch (f.rule()) {
    case foc::Rule::ImpR: return nf::impI(I2nf(f.premise(0)));
    case foc::Rule::P2I: return nf::p2nf(P2p(f.premise(0)));
    default: throw TypeError("I2nf: input is not in phase I");
  }
}

nf::Derivation P2p(const foc::Derivation& f) {
  switch (f.rule()) {
    case foc::Rule::Pass: return nf::pass(P2p(f.premise(0)));
    case foc::Rule::F2P: return nf::ne2p(F2ne(f.premise(0)));
    default: throw TypeError("P2p: input is not in phase P");
  }
}

nf::Derivation F2ne(const foc::Derivation& f) {
  if (foc::phase(f) != foc::Phase::F || !f.conclusion().stoup)
    throw TypeError("F2ne: input is not a tight phase F derivation");
  return F2ne_acc(nf::ax(*f.conclusion().stoup), f);
}

nf::Derivation F2ne_acc(const nf::Derivation& acc, const foc::Derivation& h) {
  switch (h.rule()) {
    case foc::Rule::Ax: return acc;
    case foc::Rule::ImpL: return F2ne_acc(nf::impE(acc, I2nf(h.premise(0))), h.premise(1));
    default: throw TypeError("F2ne: input is not in phase F or uses clauses");
  }
}

}  // namespace skew::bridge
