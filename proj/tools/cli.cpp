#include "cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gl2n/errors.hpp"
#include "gl2n/expr.hpp"
#include "gl2n/matrix.hpp"
#include "gl2n/module_action.hpp"
#include "gl2n/verify.hpp"

namespace gl2n::cli {

namespace {

constexpr Rank kDefaultMaxRank = 3;
constexpr std::uint32_t kDefaultMaxDegree = 4;

const std::vector<std::string> kSuites = {"bracket", "glemma",      "gelfand", "rel",
                                          "mod",     "equivalence", "socle",   "singular",
                                          "degree",  "eigenvalues", "filtration", "all"};

/// Raised for bad flags or values; mapped to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  Rank n = 0;
  std::string q;
  std::string s;
  std::string element;
  std::string vector;
  std::string suite;
  std::string mutate = "none";
  std::string output = "pretty";
  std::uint32_t deg = 2;
  std::uint32_t k = 3;
  bool unbounded = false;
};

nlohmann::json read_json(const std::string& text) {
  std::string source = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read " + text.substr(1));
    std::stringstream buffer;
    buffer << in.rdbuf();
    source = buffer.str();
  }
  try {
    return nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("invalid JSON matrix: ") + e.what());
  }
}

RationalMatrix read_matrix(const std::string& text, Rank n, const char* flag) {
  RationalMatrix m;
  try {
    m = matrix_from_json(read_json(text));
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (m.rows() != n || m.cols() != n) {
    throw UsageError(std::string(flag) + " must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  return m;
}

ModuleSpec module_spec(const Options& o) {
  if (o.q.empty()) return ModuleSpec::identity(o.n);
  return ModuleSpec(read_matrix(o.q, o.n, "--q"));
}

void check_bounds(const Options& o) {
  if (o.n == 0) throw UsageError("--n must be at least 1");
  if (o.unbounded) return;
  if (o.n > kDefaultMaxRank) {
    throw UsageError("--n above " + std::to_string(kDefaultMaxRank) + " needs --unbounded");
  }
  if (o.deg > kDefaultMaxDegree || o.k > kDefaultMaxDegree + 1) {
    throw UsageError("--deg above " + std::to_string(kDefaultMaxDegree) + " or --k above " +
                     std::to_string(kDefaultMaxDegree + 1) + " needs --unbounded");
  }
}

Mutation mutation_of(const Options& o) {
  const auto m = parse_mutation(o.mutate);
  if (!m) throw UsageError("unknown mutation '" + o.mutate + "'");
  return *m;
}

bool json_output(const Options& o) { return o.output == "json"; }

void print_element(std::ostream& out, const Options& o, const UeaElement& a) {
  if (json_output(o)) {
    nlohmann::ordered_json j;
    j["text"] = print_normal(a);
    j["terms"] = uea_to_json(a);
    out << j.dump() << '\n';
  } else {
    out << print_normal(a) << '\n';
  }
}

int cmd_act(const Options& o, std::ostream& out, std::ostream& err) {
  const ModuleSpec spec = module_spec(o);
  const Gl2nElement x = parse_gl2n(o.element, o.n);
  const UeaElement a = parse_uea(o.vector, o.n);
  const Mutation mutation = mutation_of(o);
  const bool parabolic = x.c().is_zero() && x.d().is_zero();
  UeaElement result(o.n);
  if (parabolic && mutation == Mutation::none) {
    result = act_parabolic(spec, x, a);
  } else if (!spec.nonsingular()) {
    err << "Q singular: C-action undefined\n";
    return kExitFailure;
  } else {
    result = act(spec, x, a, mutation);
  }
  print_element(out, o, result);
  return kExitOk;
}

std::vector<VerificationReport> run_suite(const Options& o, const std::string& suite) {
  const ModuleSpec spec = module_spec(o);
  const bool all = suite == "all";
  const bool nonsingular = spec.nonsingular();
  auto wanted = [&](const char* name, bool applies) {
    return (all && applies) || suite == name;
  };
  std::vector<VerificationReport> reports;
  if (wanted("bracket", nonsingular)) {
    reports.push_back(check_bracket_axiom(spec, o.deg, mutation_of(o)));
  }
  if (wanted("glemma", true)) reports.push_back(check_glemma(o.n, o.k));
  if (wanted("gelfand", true)) reports.push_back(check_gelfand_central(o.n, o.k));
  if (wanted("rel", true)) reports.push_back(check_rel_operator(o.n, o.k, o.deg));
  if (wanted("mod", true)) reports.push_back(check_mod_leading(o.n, o.deg));
  if (wanted("equivalence", nonsingular)) reports.push_back(check_equivalence(spec, o.deg));
  if (wanted("socle", nonsingular)) reports.push_back(check_socle(spec, o.k));
  if (wanted("singular", !nonsingular)) {
    reports.push_back(check_singular_submodule(spec, o.deg));
  }
  if (wanted("degree", nonsingular)) reports.push_back(check_degree_contract(spec, o.deg));
  if (wanted("eigenvalues", true)) reports.push_back(check_eigenvalues(spec));
  if (wanted("filtration", true)) reports.push_back(check_filtration_dimension(o.n, o.deg));
  return reports;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto reports = run_suite(o, o.suite);
  bool ok = true;
  if (json_output(o)) {
    auto list = nlohmann::ordered_json::array();
    for (const auto& r : reports) list.push_back(r.to_json());
    out << list.dump(2) << '\n';
  }
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (json_output(o)) continue;
    if (r.passed()) {
      out << r.suite << ": PASS (" << r.attempted << " checks)\n";
    } else {
      out << r.suite << ": FAIL (" << r.failed << " of " << r.attempted << " checks)\n";
      for (const auto& f : r.failures) {
        out << "  " << f.input << "\n    expected: " << f.expected << "\n    got:      " << f.got
            << '\n';
      }
    }
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
  }
  if (!ok) err << "verification failed\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_socle(const Options& o, std::ostream& out, std::ostream& err) {
  const ModuleSpec spec = module_spec(o);
  if (!spec.nonsingular()) {
    err << "Q singular: socle layers need a nonsingular Q\n";
    return kExitFailure;
  }
  const SocleLayers s = socle_layers(spec, o.k);
  const std::size_t n2 = std::size_t{o.n} * o.n;
  std::vector<std::size_t> expected;
  for (std::uint32_t k = 1; k <= o.k; ++k) expected.push_back(binomial(n2 + k - 2, k - 1));
  if (json_output(o)) {
    nlohmann::ordered_json j;
    j["layers"] = s.layers;
    j["cumulative"] = s.cumulative;
    j["expected_layers"] = expected;
    out << j.dump() << '\n';
  } else {
    out << "layers " << nlohmann::json(s.layers).dump() << '\n'
        << "cumulative " << nlohmann::json(s.cumulative).dump() << '\n';
  }
  return s.layers == expected ? kExitOk : kExitFailure;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  const UeaElement f = parse_uea(o.vector, o.n);
  const Reduction r = reduce_to_constant(f);
  if (json_output(o)) {
    nlohmann::ordered_json j;
    j["scalar"] = r.scalar().get_str();
    j["word"] = r.word;
    j["pivot"] = print_monomial(r.pivot);
    j["result"] = print_normal(r.result);
    out << j.dump() << '\n';
  } else {
    out << "scalar " << r.scalar().get_str() << '\n'
        << "word " << (r.word.empty() ? "1" : r.word) << '\n'
        << "pivot " << print_monomial(r.pivot) << '\n';
  }
  if (!r.is_witness()) {
    err << "reduction did not reach a nonzero constant: " << print_normal(r.result) << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_gelfand(const Options& o, std::ostream& out, std::ostream&) {
  if (o.k == 0) throw UsageError("--k must be at least 1");
  print_element(out, o, gelfand(o.n, o.k));
  return kExitOk;
}

int cmd_twist(const Options& o, std::ostream& out, std::ostream&) {
  const RationalMatrix s = read_matrix(o.s, o.n, "--s");
  const Gl2nElement x = parse_gl2n(o.element, o.n);
  const Gl2nElement y = twist(s, x);
  if (json_output(o)) {
    nlohmann::ordered_json j;
    j["text"] = print_gl2n(y);
    j["matrix"] = matrix_to_json(y.matrix());
    out << j.dump() << '\n';
  } else {
    out << print_gl2n(y) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the gl_2n-modules M_Q on U(gl_n)", "gl2n"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_q) {
    sub->add_option("--n", o.n, "rank n")->required()->check(CLI::PositiveNumber);
    if (needs_q) sub->add_option("--q", o.q, "Q as JSON rows of rationals, or @file");
    sub->add_option("--output", o.output, "pretty or json")
        ->check(CLI::IsMember({"pretty", "json"}));
    sub->add_flag("--unbounded", o.unbounded, "allow n > 3 and degree bounds above 4");
  };

  std::function<int()> handler;
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&, std::ostream&, std::ostream&)) {
    sub->callback([&, fn] { handler = [&, fn] { return fn(o, out, err); }; });
  };

  auto* act_cmd = app.add_subcommand("act", "apply a gl_2n element to a vector of M_Q");
  common(act_cmd, true);
  act_cmd->add_option("--element", o.element, "gl_2n element, e.g. \"e[1,3] - 2 e[4,1]\"")
      ->required();
  act_cmd->add_option("--vector", o.vector, "U(gl_n) element")->required();
  act_cmd->add_option("--mutate", o.mutate, "diagnostic corruption of the action");
  bind(act_cmd, cmd_act);

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  common(verify_cmd, true);
  verify_cmd->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(kSuites));
  verify_cmd->add_option("--deg", o.deg, "monomial degree bound");
  verify_cmd->add_option("--k", o.k, "power / order bound");
  verify_cmd->add_option("--mutate", o.mutate, "diagnostic corruption for the bracket suite");
  bind(verify_cmd, cmd_verify);

  auto* socle_cmd = app.add_subcommand("socle", "socle layer dimensions");
  common(socle_cmd, true);
  socle_cmd->add_option("--k", o.k, "number of layers")->required()->check(CLI::PositiveNumber);
  bind(socle_cmd, cmd_socle);

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a vector of M_I to a constant");
  common(reduce_cmd, false);
  reduce_cmd->add_option("--vector", o.vector, "nonzero U(gl_n) element")->required();
  bind(reduce_cmd, cmd_reduce);

  auto* gelfand_cmd = app.add_subcommand("gelfand", "Gelfand invariant tr(F^k)");
  common(gelfand_cmd, false);
  gelfand_cmd->add_option("--k", o.k, "power")->required();
  bind(gelfand_cmd, cmd_gelfand);

  auto* twist_cmd = app.add_subcommand("twist", "apply the automorphism phi_S");
  common(twist_cmd, false);
  twist_cmd->add_option("--s", o.s, "S as JSON rows of rationals, or @file")->required();
  twist_cmd->add_option("--element", o.element, "gl_2n element")->required();
  bind(twist_cmd, cmd_twist);

  std::vector<std::string> storage = {"gl2n"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    check_bounds(o);
    return handler();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RankMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SingularMatrix& e) {
    err << "singular matrix: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace gl2n::cli
