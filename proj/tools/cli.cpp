#include "treealg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "treealg/acceptance.hpp"
#include "treealg/affine.hpp"
#include "treealg/congruence.hpp"
#include "treealg/homomorphisms.hpp"
#include "treealg/json_io.hpp"
#include "treealg/monoid.hpp"
#include "treealg/universe.hpp"

namespace treealg {

namespace {

constexpr const char* kGrammar =
    "tree grammar:  tree ::= LETTER | '<' tree '*' tree '>'\n"
    "  LETTER is one --alphabet symbol (default abc); no whitespace inside trees;\n"
    "  '<' '*' '>' stand for the shape symbols; 'x' is the polynomial variable.\n"
    "grafting: a->TREE    substitution: a=>WORD\n"
    "functions: identity | mirror | recolor:c | const:TREE | poly:TREE | table:FILE\n";

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string alphabet = "abc";
  std::optional<std::size_t> bound;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool unicode = false;
};

class Session {
 public:
  Session(const Globals& g, std::ostream& out) : g_(g), sigma_(g.alphabet), out_(out) {}

  const Alphabet& sigma() const { return sigma_; }
  std::size_t bound_or(std::size_t fallback) const { return g_.bound.value_or(fallback); }
  std::uint64_t seed() const { return g_.seed; }
  bool json_mode() const { return g_.json; }
  bool unicode() const { return g_.unicode; }

  Tree tree(const std::string& text) const { return parse_tree(from_unicode(text), sigma_); }
  std::string show(const Tree& t) const { return render(encode(t), g_.unicode); }
  std::string show(std::string_view ascii) const { return render(ascii, g_.unicode); }

  void emit(const json& j) const { out_ << j.dump() << '\n'; }
  void emit_text(const std::string& line) const { out_ << line << '\n'; }
  /// Text mode prints `text`; JSON mode prints `j`.
  void emit(const std::string& text, const json& j) const { g_.json ? emit(j) : emit_text(text); }

  void require_three_letters() const {
    if (sigma_.size() < 3)
      throw AlphabetTooSmall("this command needs an alphabet of at least three letters", {sigma_.symbols()});
  }

 private:
  const Globals& g_;
  Alphabet sigma_;
  std::ostream& out_;
};

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file '" + path + "'");
  return in;
}

CandidateFunction parse_function(const std::string& spec, const Session& s) {
  const Alphabet& sigma = s.sigma();
  if (spec == "identity") return CandidateFunction::identity(sigma);
  if (spec == "mirror") return CandidateFunction::mirror(sigma);
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("unknown function '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "recolor") {
    if (arg.size() != 1) throw UsageError("recolor takes a single letter, e.g. recolor:c");
    return CandidateFunction::recolor(arg[0], sigma);
  }
  if (kind == "const") return CandidateFunction::constant(s.tree(arg), sigma);
  if (kind == "poly") return CandidateFunction::polynomial(parse_polynomial(from_unicode(arg), sigma), sigma);
  if (kind == "table") {
    std::ifstream in = open_file(arg);
    std::unordered_map<Tree, Tree, TreeHash> values;
    for (auto& [from, to] : read_two_column(in, "function table")) {
      Tree key = s.tree(from);
      if (!values.emplace(key, s.tree(to)).second)
        throw MalformedInput("function table lists a tree twice", {encode(key)});
    }
    return CandidateFunction::table(std::move(values), spec, sigma);
  }
  throw UsageError("unknown function kind '" + kind + "'");
}

std::string project_if(const std::string& encoding, bool sigma_only, bool phi_only, const Alphabet& alphabet) {
  if (sigma_only) return project(Projection::sigma(), encoding);
  if (phi_only) return project(Projection::phi(alphabet), encoding);
  return encoding;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free algebra of complete binary trees: skeletons, graftings, congruences and polynomials", "treealg"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--alphabet", g.alphabet, "ordered alphabet, one character per letter")->capture_default_str();
  app.add_option("--bound", g.bound, "maximum number of leaves of the tree universe")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();
  app.add_flag("--json", g.json, "emit JSON");
  app.add_flag("--unicode", g.unicode, "render shape symbols as U+25C2, U+2022, U+25B8");

  std::function<int(Session&)> action;

  std::string tree_arg, second_arg;
  bool sigma_flag = false, phi_flag = false;

  auto* parse_cmd = app.add_subcommand("parse", "parse a tree and print its encoding");
  parse_cmd->add_option("tree", tree_arg, "tree in the ASCII grammar")->required();
  parse_cmd->add_flag("--sigma", sigma_flag, "print the skeleton projection");
  parse_cmd->add_flag("--phi", phi_flag, "print the foliage projection");
  parse_cmd->callback([&] {
    action = [&](Session& s) {
      const Tree t = s.tree(tree_arg);
      const std::string enc = encode(t);
      const std::string shown = project_if(enc, sigma_flag, phi_flag, s.sigma());
      s.emit(s.show(shown), json{{"tree", s.show(enc)},
                                 {"leaves", t.leaf_count()},
                                 {"skeleton", s.show(skeleton(t).word)},
                                 {"foliage", foliage(t).word},
                                 {"projection", s.show(shown)}});
      return kExitOk;
    };
  });

  auto* skeleton_cmd = app.add_subcommand("skeleton", "print the skeleton of a tree");
  skeleton_cmd->add_option("tree", tree_arg)->required();
  skeleton_cmd->callback([&] {
    action = [&](Session& s) {
      const std::string w = skeleton(s.tree(tree_arg)).word;
      s.emit(s.show(w), json{{"skeleton", s.show(w)}});
      return kExitOk;
    };
  });

  auto* foliage_cmd = app.add_subcommand("foliage", "print the foliage of a tree");
  foliage_cmd->add_option("tree", tree_arg)->required();
  foliage_cmd->callback([&] {
    action = [&](Session& s) {
      const std::string w = foliage(s.tree(tree_arg)).word;
      s.emit(w, json{{"foliage", w}});
      return kExitOk;
    };
  });

  std::string foliage_opt, skeleton_opt;
  auto* rebuild_cmd = app.add_subcommand("rebuild", "rebuild the tree with a given foliage and skeleton");
  rebuild_cmd->add_option("--foliage", foliage_opt)->required();
  rebuild_cmd->add_option("--skeleton", skeleton_opt)->required();
  rebuild_cmd->callback([&] {
    action = [&](Session& s) {
      for (char c : foliage_opt)
        if (!s.sigma().contains(c))
          throw MalformedInput(std::string("foliage letter '") + c + "' is not in the alphabet", {foliage_opt});
      const Tree t = rebuild(Foliage{foliage_opt}, Skeleton{from_unicode(skeleton_opt)});
      s.emit(s.show(t), json{{"tree", s.show(t)}});
      return kExitOk;
    };
  });

  std::string rule_arg;
  auto* graft_cmd = app.add_subcommand("graft", "apply a grafting a->TREE to a tree, or a substitution a=>WORD to a word");
  graft_cmd->add_option("rule", rule_arg, "a->TREE or a=>WORD")->required();
  graft_cmd->add_option("target", second_arg, "tree (grafting) or word (substitution)")->required();
  graft_cmd->add_flag("--sigma", sigma_flag, "print the skeleton of the result");
  graft_cmd->add_flag("--phi", phi_flag, "print the foliage of the result");
  graft_cmd->callback([&] {
    action = [&](Session& s) {
      if (rule_arg.find("=>") != std::string::npos) {
        const WordSubstitution psi = parse_substitution(rule_arg, s.sigma());
        for (char c : second_arg)
          if (!s.sigma().contains(c))
            throw MalformedInput(std::string("word letter '") + c + "' is not in the alphabet", {second_arg});
        const std::string w = substitute(psi, second_arg);
        s.emit(w, json{{"word", w}});
        return kExitOk;
      }
      const Grafting gamma = parse_grafting(from_unicode(rule_arg), s.sigma());
      const Tree t = s.tree(second_arg);
      const Tree result = graft(gamma, t);
      const std::string shown = project_if(encode(result), sigma_flag, phi_flag, s.sigma());
      s.emit(s.show(shown), json{{"tree", s.show(result)},
                                 {"projection", s.show(shown)},
                                 {"idempotent", is_idempotent(gamma)},
                                 {"commutes", commute_check(gamma, t)}});
      return kExitOk;
    };
  });

  std::size_t cap = kDefaultUniverseCap;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every tree with at most --bound leaves");
  enumerate_cmd->add_option("--cap", cap, "refuse universes larger than this")->capture_default_str();
  enumerate_cmd->callback([&] {
    action = [&](Session& s) {
      const std::vector<Tree> trees = enumerate_universe(s.sigma(), s.bound_or(3), cap);
      if (s.json_mode()) {
        json list = json::array();
        for (const Tree& t : trees) list.push_back(s.show(t));
        s.emit(json{{"count", trees.size()}, {"trees", std::move(list)}});
      } else {
        for (const Tree& t : trees) s.emit_text(s.show(t));
      }
      return kExitOk;
    };
  });

  std::string file_arg;
  auto* closure_cmd = app.add_subcommand("closure", "bounded congruence closure of a set of pairs");
  closure_cmd->add_option("--pairs", file_arg, "file with one 'TREE TREE' pair per line")->required();
  closure_cmd->callback([&] {
    action = [&](Session& s) {
      std::ifstream in = open_file(file_arg);
      const PairSet pairs = read_pairs(in, s.sigma());
      s.emit(partition_to_json(bounded_closure(pairs, s.sigma(), s.bound_or(kDefaultClosureBound)), s.unicode()));
      return kExitOk;
    };
  });

  auto* synthesize_cmd = app.add_subcommand("synthesize", "polynomial taking the tabled values on the letters");
  synthesize_cmd->add_option("--table", file_arg, "file with lines 'a TREE'")->required();
  synthesize_cmd->callback([&] {
    action = [&](Session& s) {
      s.require_three_letters();
      std::ifstream in = open_file(file_arg);
      const Polynomial p = synthesize(read_generator_table(in, s.sigma()));
      s.emit(s.show(p.term), json{{"polynomial", s.show(p.term)}});
      return kExitOk;
    };
  });

  std::string function_arg;
  auto* check_cmd = app.add_subcommand("check-cp", "necessary-condition evidence for congruence preservation");
  check_cmd->add_option("--function", function_arg)->required();
  check_cmd->callback([&] {
    action = [&](Session& s) {
      const CandidateFunction f = parse_function(function_arg, s);
      const EvidenceReport report = cp_evidence(f, s.sigma(), s.bound_or(4), s.seed());
      s.emit(report_to_json(report, s.unicode()));
      return report.all_passed() ? kExitOk : kExitPropertyFailure;
    };
  });

  std::size_t verify_bound = kDefaultVerifyBound;
  auto* to_poly_cmd = app.add_subcommand("to-poly", "recover the polynomial of a congruence-preserving function");
  to_poly_cmd->add_option("--function", function_arg)->required();
  to_poly_cmd->add_option("--verify-bound", verify_bound)->check(CLI::PositiveNumber)->capture_default_str();
  to_poly_cmd->callback([&] {
    action = [&](Session& s) {
      const CandidateFunction f = parse_function(function_arg, s);
      const Polynomial p = cp_to_polynomial(f, s.sigma(), verify_bound);
      s.emit(s.show(p.term), json{{"polynomial", s.show(p.term)}, {"verify_bound", verify_bound}});
      return kExitOk;
    };
  });

  auto* word_cmd = app.add_subcommand("word-synthesize", "word polynomial taking the tabled values on the letters");
  word_cmd->add_option("--table", file_arg, "file with lines 'a WORD'")->required();
  word_cmd->callback([&] {
    action = [&](Session& s) {
      s.require_three_letters();
      std::ifstream in = open_file(file_arg);
      const WordPolynomial p = synthesize_word(read_word_table(in, s.sigma()));
      s.emit(p.term, json{{"polynomial", p.term}});
      return kExitOk;
    };
  });

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite over the alphabet abc");
  selftest_cmd->callback([&] {
    action = [&](Session& s) {
      std::size_t failed = 0;
      const auto results = run_acceptance(s.seed(), [&](const CriterionResult& r) {
        failed += !r.passed;
        print_result(out, r);
      });
      out << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
      return failed == 0 ? kExitOk : kExitPropertyFailure;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << kGrammar;
    return kExitUsage;
  }

  try {
    Session session(g, out);
    return action(session);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << kGrammar;
    return kExitUsage;
  } catch (const Error& e) {
    if (g.json) {
      out << error_to_json(e, g.unicode).dump() << '\n';
    } else {
      err << "error: " << e.name() << ": " << e.what() << "\n";
      if (!e.witness().empty()) {
        err << "witness:";
        for (const std::string& w : e.witness()) err << ' ' << render(w, g.unicode);
        err << "\n";
      }
    }
    return kExitDomainError;
  }
}

}  // namespace treealg
