// skewcl: command-line front end for the skew closed calculi.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skew/bridge.hpp"
#include "skew/coherence.hpp"
#include "skew/error.hpp"
#include "skew/focused.hpp"
#include "skew/graph.hpp"
#include "skew/model.hpp"
#include "skew/multigraph.hpp"
#include "skew/nat_ded.hpp"
#include "skew/normal_nd.hpp"
#include "skew/parse.hpp"
#include "skew/seq_calc.hpp"

using namespace skew;

namespace {

enum Exit { kOk = 0, kError = 1, kDistinct = 2, kCap = 3 };

// A term argument naming an existing file is read from it.
std::string text_arg(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Context parse_context(const std::string& text) {
  if (text.empty()) return {};
  return parse_sequent("- | " + text + " |- X").context;
}

foc::Phase foc_phase(const RawTerm& t) {
  if (t.head == "impR" || t.head == "p2i") return foc::Phase::I;
  if (t.head == "pass" || t.head == "f2p") return foc::Phase::P;
  return foc::Phase::F;
}

nf::Phase nf_phase(const RawTerm& t) {
  if (t.head == "impI" || t.head == "p2nf") return nf::Phase::Nf;
  if (t.head == "pass" || t.head == "ne2p") return nf::Phase::P;
  return nf::Phase::Ne;
}

struct Graph {
  std::string file;
  std::optional<Multigraph> g;
  const Multigraph* get() {
    if (!file.empty() && !g) g = parse_graph(text_arg(file));
    return g ? &*g : nullptr;
  }
};

Sequent goal_for(const std::string& calculus, const std::string& text) {
  if (calculus == "cat" || calculus == "sf") return parse_cat_sequent(text);
  return parse_sequent(text);
}

// Typechecks `term` in `calculus` and returns its printed form.
std::string check_term(const std::string& calculus, const RawTerm& t, const Sequent& s,
                       Graph& graph) {
  if (calculus == "cat") return cat::to_string(cat::check(t, s, graph.get()));
  if (calculus == "sf") return sf::to_string(sf::check(t, s));
  if (calculus == "seq") return seq::to_string(seq::check(t, s));
  if (calculus == "nd") return nd::to_string(nd::check(t, s));
  if (calculus == "focused") return foc::to_string(foc::check(t, s, foc_phase(t), graph.get()));
  if (calculus == "nf") return nf::to_string(nf::check(t, s, nf_phase(t)));
  if (calculus == "mg") {
    const Multigraph* g = graph.get();
    if (!g) throw std::invalid_argument("calculus mg needs --graph");
    return mg::to_string(mg::check(*g, t, s));
  }
  throw std::invalid_argument("unknown calculus '" + calculus + "'");
}

std::string translate(const std::string& from, const std::string& to, const RawTerm& t,
                      const Sequent& s, const Context& ctx, Graph& graph) {
  auto bad = [&]() -> std::string {
    throw std::invalid_argument("no translation from " + from + " to " + to);
  };
  if (from == "seq") {
    seq::Derivation d = seq::check(t, s);
    if (to == "cat") return cat::to_string(bridge::sound(d));
    if (to == "focused") return foc::to_string(foc::focus(d));
    if (to == "act") return seq::to_string(seq::act(d));
    return bad();
  }
  if (from == "cat") {
    cat::Derivation d = cat::check(t, s, graph.get());
    if (to == "seq") return seq::to_string(bridge::cmplt(d, ctx));
    if (to == "sf") return sf::to_string(sf::from_cat(d));
    if (to == "focused") return foc::to_string(coherence::normal_form(d));
    return bad();
  }
  if (from == "sf") {
    if (to == "cat") return cat::to_string(sf::to_cat(sf::check(t, s)));
    return bad();
  }
  if (from == "nd") {
    nd::Derivation d = nd::check(t, s);
    if (to == "focused") return foc::to_string(foc::hered(d));
    if (to == "nf") return nf::to_string(nf::nbe(d));
    return bad();
  }
  if (from == "focused") {
    const foc::Phase ph = foc_phase(t);
    foc::Derivation d = foc::check(t, s, ph, graph.get());
    if (to == "seq") return seq::to_string(foc::emb(d));
    if (to == "nd") return nd::to_string(foc::emb_nd(d));
    if (to == "nf") {
      switch (ph) {
        case foc::Phase::I: return nf::to_string(bridge::I2nf(d));
        case foc::Phase::P: return nf::to_string(bridge::P2p(d));
        case foc::Phase::F: return nf::to_string(bridge::F2ne(d));
      }
    }
    if (to == "mg") return mg::to_string(mg::emb(d));
    return bad();
  }
  if (from == "nf") {
    const nf::Phase ph = nf_phase(t);
    nf::Derivation d = nf::check(t, s, ph);
    if (to == "nd") return nd::to_string(nf::emb(d));
    if (to == "focused") {
      switch (ph) {
        case nf::Phase::Nf: return foc::to_string(bridge::nf2I(d));
        case nf::Phase::P: return foc::to_string(bridge::p2P(d));
        case nf::Phase::Ne: return foc::to_string(bridge::ne2F(d));
      }
    }
    return bad();
  }
  if (from == "mg") {
    const Multigraph* g = graph.get();
    if (!g) throw std::invalid_argument("calculus mg needs --graph");
    mg::Derivation d = mg::check(*g, t, s);
    if (to == "focused") return foc::to_string(mg::focus(d));
    if (to == "act") {
      mg::ActResult r = mg::act_attempt(d);
      if (auto* ok = std::get_if<mg::Derivation>(&r)) return mg::to_string(*ok);
      const auto& c = std::get<mg::Counterexample>(r);
      throw TypeError(c.reason + " at " + mg::to_string(c.node));
    }
    return bad();
  }
  return bad();
}

void print_interpretation(const model::Interpretation& r) {
  if (const auto* m = std::get_if<model::FiniteMap>(&r)) {
    std::cout << "map " << m->domain.n << " -> " << m->codomain.n << ":";
    for (auto v : m->table) std::cout << ' ' << v;
    std::cout << '\n';
  } else {
    const auto& e = std::get<model::Element>(r);
    std::cout << "element " << e.index << " of " << e.object.n << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof calculi, normalization and coherence for skew closed categories"};
  app.require_subcommand(1);
  int code = kOk;
  Graph graph;

  std::string calculus, term, sequent, term2, via = "focus", from, to, context, spec_file;
  bool count_only = false;
  std::size_t fuel = 16, cap = 1'000'000;

  auto* check = app.add_subcommand("check", "Typecheck a derivation against a sequent");
  check->add_option("calculus", calculus, "cat, sf, seq, nd, focused, nf or mg")->required();
  check->add_option("term", term, "Term text or file")->required();
  check->add_option("sequent", sequent, "Goal sequent")->required();
  check->add_option("--graph", graph.file, "Multigraph file");

  auto* normalize = app.add_subcommand("normalize", "Normal form of a derivation");
  normalize->add_option("--via", via, "focus (sequent calculus), hered or nbe (natural deduction)")
      ->check(CLI::IsMember({"focus", "hered", "nbe"}));
  normalize->add_option("term", term)->required();
  normalize->add_option("sequent", sequent)->required();

  auto* trans = app.add_subcommand("translate", "Translate between calculi");
  trans->add_option("--from", from)->required();
  trans->add_option("--to", to)->required();
  trans->add_option("term", term)->required();
  trans->add_option("sequent", sequent, "Sequent the input term proves")->required();
  trans->add_option("--context", context, "Context to open with cmplt, comma separated");
  trans->add_option("--graph", graph.file, "Multigraph file");

  auto* enumerate = app.add_subcommand("enumerate", "List or count focused derivations");
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_option("--graph", graph.file, "Multigraph file");
  enumerate->add_option("--fuel", fuel, "Clause nesting bound with a graph");
  enumerate->add_option("--cap", cap, "Largest homset listed");
  enumerate->add_option("sequent", sequent)->required();

  auto* eq = app.add_subcommand("eq", "Decide equality of two categorical derivations");
  eq->add_option("lhs", term)->required();
  eq->add_option("rhs", term2)->required();
  eq->add_option("sequent", sequent)->required();

  auto* model_cmd = app.add_subcommand("model", "Finite-set models");
  model_cmd->require_subcommand(1);
  auto* eval = model_cmd->add_subcommand("eval", "Interpret a categorical derivation");
  eval->add_option("spec", spec_file, "Model spec file")->required();
  eval->add_option("term", term)->required();
  eval->add_option("sequent", sequent)->required();
  std::vector<std::string> objects;
  auto* axioms = model_cmd->add_subcommand("axioms", "Check the equations at some objects");
  axioms->add_option("spec", spec_file, "Model spec file")->required();
  axioms->add_option("objects", objects, "Formulas")->required();

  auto* demo = app.add_subcommand("demo", "Built-in examples");
  demo->require_subcommand(1);
  auto* nln = demo->add_subcommand("nonleftnormal", "A free structure that is not left-normal");

  check->callback([&] {
    std::string shown =
        check_term(calculus, parse_term(text_arg(term)), goal_for(calculus, sequent), graph);
    std::cout << "ok: " << shown << '\n';
  });
  normalize->callback([&] {
    RawTerm t = parse_term(text_arg(term));
    Sequent s = parse_sequent(sequent);
    if (via == "focus")
      std::cout << foc::to_string(foc::focus(seq::check(t, s))) << '\n';
    else if (via == "hered")
      std::cout << foc::to_string(foc::hered(nd::check(t, s))) << '\n';
    else
      std::cout << nf::to_string(nf::nbe(nd::check(t, s))) << '\n';
  });
  trans->callback([&] {
    std::cout << translate(from, to, parse_term(text_arg(term)), goal_for(from, sequent),
                           parse_context(context), graph)
              << '\n';
  });
  enumerate->callback([&] {
    coherence::Options opts;
    opts.graph = graph.get();
    opts.fuel = fuel;
    opts.cap = cap;
    coherence::Search search(opts);
    Sequent s = parse_sequent(sequent);
    if (count_only) {
      std::cout << search.count(s) << '\n';
    } else {
      for (const auto& d : search.enumerate(s)) std::cout << foc::to_string(d) << '\n';
    }
    if (search.truncated()) std::cerr << "note: clause nesting cut at fuel " << fuel << '\n';
  });
  eq->callback([&] {
    Sequent s = parse_cat_sequent(sequent);
    cat::Derivation a = cat::check(parse_term(text_arg(term)), s);
    cat::Derivation b = cat::check(parse_term(text_arg(term2)), s);
    coherence::Verdict v = coherence::decide_eq(a, b);
    if (v.equal) {
      std::cout << "equal\n";
    } else {
      std::cout << "distinct\n" << foc::to_string(v.lhs) << '\n' << foc::to_string(v.rhs) << '\n';
      code = kDistinct;
    }
  });
  eval->callback([&] {
    model::ModelSpec spec = model::parse_model_spec(text_arg(spec_file));
    cat::Derivation d = cat::check(parse_term(text_arg(term)), parse_cat_sequent(sequent));
    print_interpretation(model::interp_cat(spec, d));
  });
  axioms->callback([&] {
    model::ModelSpec spec = model::parse_model_spec(text_arg(spec_file));
    std::vector<Formula> fs;
    for (const auto& o : objects) fs.push_back(parse_formula(o));
    model::AxiomReport r = model::check_axioms(spec, fs);
    std::cout << r.checked << " checked, " << r.skipped << " skipped, " << r.failures.size()
              << " failed\n";
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    if (!r.ok()) code = kError;
  });
  nln->callback([&] {
    Multigraph g = parse_graph("atom X\natom Z\nclause c : - | X |- Z\n");
    std::cout << "graph: clause c : - | X |- Z\n";
    mg::Count loose = mg::count(g, parse_sequent("- | X |- Z"));
    mg::Count tight = mg::count(g, parse_sequent("X | |- Z"));
    std::cout << "count(- | X |- Z) = " << loose.value << '\n'
              << "count(X | |- Z) = " << tight.value << '\n';
    mg::ActResult r = mg::act_attempt(mg::iota(*g.find("c")));
    if (const auto* c = std::get_if<mg::Counterexample>(&r))
      std::cout << "act fails on " << mg::to_string(c->node) << ": " << c->reason << '\n';
    std::cout << (loose.value != tight.value ? "not left-normal\n" : "left-normal\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kError;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return code;
}
