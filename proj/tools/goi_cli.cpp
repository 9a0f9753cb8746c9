// goi: command line front end for graphs, projects, proofs and the seeded
// verification suites.
//
// Exit status: 0 on success, 1 when a check fails, 2 on usage or input
// errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "goi/goi.hpp"

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename F>
auto parse_file(const std::string& path, F parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const goi::ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

goi::WeightedGraph load_graph(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return goi::parse_graph(t); });
}

goi::Project load_project(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return goi::parse_project(t); });
}

goi::logic::ParsedProof load_proof(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return goi::logic::parse_proof(t); });
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GOI_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("GOI_SEED is not a number: ") + env);
    }
  }
  return 42;
}

void print_graph(const goi::WeightedGraph& g, const std::string& format) {
  std::cout << (format == "dot" ? goi::write_dot(g) : goi::write_graph(g));
}

void print_graph(const goi::SimpleGraph& g, const std::string& format) {
  std::cout << (format == "dot" ? goi::write_dot(g) : goi::write_graph(g));
}

int report(const goi::SuiteReport& r) {
  for (const auto& f : r.failures) {
    std::cerr << r.name << " trial " << f.trial << ": " << f.detail << "\n";
  }
  std::cout << r.summary() << "\n";
  return r.ok() ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-based geometry of interaction for multiplicative linear logic"};
  app.require_subcommand(1);
  int status = 0;

  // graph
  auto* graph = app.add_subcommand("graph", "Weighted graphs");
  graph->require_subcommand(1);
  std::string format = "text";
  std::string g1, g2, route = "exact";
  std::size_t max_len = 8;

  auto* simplify_cmd = graph->add_subcommand("simplify", "Merge parallel edges");
  simplify_cmd->add_option("graph", g1, "Graph file")->required();
  simplify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));
  simplify_cmd->callback([&] { print_graph(goi::simplify(load_graph(g1)), format); });

  auto* reduce_cmd = graph->add_subcommand("reduce", "Reduct F::G");
  reduce_cmd->add_option("f", g1, "Graph file")->required();
  reduce_cmd->add_option("g", g2, "Graph file")->required();
  reduce_cmd->add_option("--route", route)->check(CLI::IsMember({"exact", "enum"}));
  reduce_cmd->add_option("--max-len", max_len, "Path length bound for --route enum");
  reduce_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));
  reduce_cmd->callback([&] {
    const auto f = load_graph(g1);
    const auto g = load_graph(g2);
    if (route == "exact") {
      print_graph(goi::reduce_exact(f, g), format);
      return;
    }
    const goi::Reduction r = goi::reduce_truncated(f, g, max_len);
    if (r.truncated) std::cerr << "warning: paths longer than " << max_len << " exist\n";
    print_graph(r.graph, format);
  });

  auto* measure_cmd = graph->add_subcommand("measure", "Measurement <F,G>");
  measure_cmd->add_option("f", g1, "Graph file")->required();
  measure_cmd->add_option("g", g2, "Graph file")->required();
  measure_cmd->add_option("--route", route)->check(CLI::IsMember({"exact", "enum"}));
  measure_cmd->add_option("--max-len", max_len, "Circuit length bound for --route enum");
  measure_cmd->callback([&] {
    const auto f = load_graph(g1);
    const auto g = load_graph(g2);
    if (route == "enum" && (max_len < 2 || max_len % 2)) throw CLI::ValidationError("--max-len", "must be even and at least 2");
    const goi::Measurement m = route == "exact" ? goi::measure_exact(f, g) : goi::measure_truncated(f, g, max_len);
    std::cout << "value=" << goi::format_decimal(m.value) << " route=" << goi::route_name(m.route)
              << " truncated=" << goi::format_bool(m.truncated()) << "\n";
  });

  auto* dot_cmd = graph->add_subcommand("dot", "DOT export; with two files, their plugging");
  dot_cmd->add_option("f", g1, "Graph file")->required();
  dot_cmd->add_option("g", g2, "Graph file");
  dot_cmd->callback([&] {
    const auto f = load_graph(g1);
    std::cout << (g2.empty() ? goi::write_dot(f) : goi::write_dot(goi::plug(f, load_graph(g2))));
  });

  // project
  auto* project = app.add_subcommand("project", "Projects");
  project->require_subcommand(1);
  std::string p1, p2;

  auto* tensor_cmd = project->add_subcommand("tensor", "a (x) b");
  tensor_cmd->add_option("a", p1)->required();
  tensor_cmd->add_option("b", p2)->required();
  tensor_cmd->callback([&] { std::cout << goi::write_project(goi::tensor(load_project(p1), load_project(p2))); });

  auto* cut_cmd = project->add_subcommand("cut", "a :: b");
  cut_cmd->add_option("a", p1)->required();
  cut_cmd->add_option("b", p2)->required();
  cut_cmd->callback([&] { std::cout << goi::write_project(goi::cut(load_project(p1), load_project(p2))); });

  auto* ortho_cmd = project->add_subcommand("ortho", "Orthogonality of two projects");
  ortho_cmd->add_option("a", p1)->required();
  ortho_cmd->add_option("b", p2)->required();
  ortho_cmd->callback([&] {
    const auto a = load_project(p1);
    const auto b = load_project(p2);
    const bool ok = goi::orthogonal(a, b);
    std::cout << "interaction=" << goi::format_decimal(goi::interaction(a, b))
              << " orthogonal=" << goi::format_bool(ok) << "\n";
    if (!ok) status = kCheckFailed;
  });

  auto* success_cmd = project->add_subcommand("success", "Is the project successful");
  success_cmd->add_option("a", p1)->required();
  success_cmd->callback([&] {
    const goi::SuccessVerdict v = goi::is_successful(load_project(p1));
    std::cout << "successful=" << goi::format_bool(v.successful);
    for (auto c : v.reasons) std::cout << " fails=" << goi::clause_name(c);
    std::cout << "\n";
    if (!v.successful) status = kCheckFailed;
  });

  // proof
  auto* proof = app.add_subcommand("proof", "Localized MLL proofs");
  proof->require_subcommand(1);
  std::string pf;

  auto* check_cmd = proof->add_subcommand("check", "Print the conclusion");
  check_cmd->add_option("proof", pf)->required();
  check_cmd->callback([&] {
    const auto pp = load_proof(pf);
    std::cout << goi::logic::to_string(goi::logic::check_proof(*pp.proof, pp.basis)) << "\n";
  });

  auto* interpret_cmd = proof->add_subcommand("interpret", "Project of the proof");
  interpret_cmd->add_option("proof", pf)->required();
  interpret_cmd->callback([&] {
    const auto pp = load_proof(pf);
    goi::logic::check_proof(*pp.proof, pp.basis);
    std::cout << goi::write_project(goi::logic::interpret(*pp.proof, pp.basis));
  });

  auto* normalize_cmd = proof->add_subcommand("normalize", "Cut-free form");
  normalize_cmd->add_option("proof", pf)->required();
  normalize_cmd->callback([&] {
    auto pp = load_proof(pf);
    goi::logic::check_proof(*pp.proof, pp.basis);
    pp.proof = goi::logic::normalize(pp.proof);
    std::cout << goi::logic::write_proof(pp);
  });

  auto* tests_cmd = proof->add_subcommand("tests", "Switching tests of the conclusion");
  tests_cmd->add_option("proof", pf)->required();
  tests_cmd->callback([&] {
    const auto pp = load_proof(pf);
    const auto s = goi::logic::check_proof(*pp.proof, pp.basis);
    const auto f = goi::logic::interpret(*pp.proof, pp.basis);
    const auto tests = goi::logic::switching_tests(s, pp.basis, f);
    for (std::size_t i = 0; i < tests.size(); ++i) {
      const bool ok = goi::orthogonal(f, tests[i]);
      std::cout << "# test " << i << " interaction=" << goi::format_decimal(goi::interaction(f, tests[i]))
                << " orthogonal=" << goi::format_bool(ok) << "\n"
                << goi::write_project(tests[i]);
      if (!ok) status = kCheckFailed;
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Seeded property suites");
  verify->require_subcommand(1);
  goi::SuiteOptions opt;
  std::uint64_t seed = 0;
  bool seed_given = false;
  auto add_suite_options = [&](CLI::App* cmd) {
    cmd->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
    cmd->add_option_function<std::uint64_t>("--seed", [&](std::uint64_t s) { seed = s, seed_given = true; },
                                            "Master seed (default: GOI_SEED or 42)");
    cmd->add_option("--max-vertices", opt.max_vertices)->check(CLI::PositiveNumber);
  };
  auto suite = [&](const char* name, const char* help, auto run) {
    auto* cmd = verify->add_subcommand(name, help);
    add_suite_options(cmd);
    cmd->callback([&, run] {
      opt.seed = seed_given ? seed : default_seed();
      status = run(opt);
    });
  };
  suite("adjunction", "<F,GuH> = <F,G> + <F::G,H>", [](const goi::SuiteOptions& o) { return report(goi::verify_adjunction(o)); });
  suite("invariance", "Measurement is invariant under simplification",
        [](const goi::SuiteOptions& o) { return report(goi::verify_invariance(o)); });
  suite("assoc", "Associativity of reduction", [](const goi::SuiteOptions& o) {
    const auto c = goi::assoc_counterexample();
    std::cout << "counterexample with a shared vertex: " << (c.differ ? "orders differ" : "orders agree") << "\n";
    const int s = report(goi::verify_assoc(o));
    return c.differ ? s : kCheckFailed;
  });
  suite("category", "Category and coherence laws", [](const goi::SuiteOptions& o) {
    const goi::CoherenceReport c = goi::check_coherence_samples(o.seed);
    for (const auto& f : c.failures) std::cerr << "coherence " << f.law << " fails at " << f.point << "\n";
    std::cout << "coherence: " << c.points_checked << " points, " << c.samples_checked << " samples, "
              << c.failures.size() << " failures\n";
    const int s = report(goi::verify_category(o));
    return c.ok() ? s : kCheckFailed;
  });
  suite("matrix", "Feedback equation and matrix adjunction",
        [](const goi::SuiteOptions& o) { return report(goi::verify_matrix(o)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const goi::ProofError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const goi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return status;
}
