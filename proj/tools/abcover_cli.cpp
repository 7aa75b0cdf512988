// abcover: command-line front end for the decision procedures and campaigns.
//
// Exit codes: 0 pass, 1 fail, 2 usage or input error, 3 resource/numeric error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abcover/covered.hpp"
#include "abcover/enumeration.hpp"
#include "abcover/factor.hpp"
#include "abcover/graph6.hpp"
#include "abcover/harness.hpp"
#include "abcover/spectral.hpp"

namespace {

using namespace abcover;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct GraphInput {
  std::string graph6;
  std::string file;
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  auto* g = cmd->add_option("--graph6", in.graph6, "graph in graph6 form");
  auto* f = cmd->add_option("--file", in.file, "file with one graph6 string per line");
  g->excludes(f);
  f->excludes(g);
}

std::vector<Graph> load_graphs(const GraphInput& in) {
  if (!in.graph6.empty()) return {parse_graph6(in.graph6)};
  if (!in.file.empty()) return ingest_graph6_file(in.file);
  throw InvalidParameter("one of --graph6 or --file is required");
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot write '" + path + "'");
  out << text;
}

std::string real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

int check_covered(const GraphInput& in, int a, int b, const std::string& method) {
  if (method != "structural" && method != "definitional") {
    throw InvalidParameter("--method must be structural or definitional");
  }
  bool all = true;
  for (const auto& g : load_graphs(in)) {
    const auto v = method == "structural" ? is_ab_covered_structural(g, a, b)
                                          : is_ab_covered_definitional(g, a, b);
    std::cout << encode_graph6(g) << (v.covered ? " covered" : " not-covered");
    if (v.structural_witness) std::cout << ' ' << to_string(*v.structural_witness);
    if (v.edge_witness) std::cout << " edge=" << to_string(*v.edge_witness);
    std::cout << '\n';
    all &= v.covered;
  }
  return all ? kPass : kFail;
}

int check_factor(const GraphInput& in, int a, int b, bool show_factor) {
  bool all = true;
  for (const auto& g : load_graphs(in)) {
    const auto spec = DegreeSpec::uniform(g.order(), a, b);
    const auto r = has_gf_factor(g, spec);
    std::cout << encode_graph6(g) << (r.exists ? " factor" : " no-factor");
    if (r.certificate) {
      std::cout << " S=" << to_string(r.certificate->s) << " T=" << to_string(r.certificate->t)
                << " value=" << r.certificate->value;
    }
    if (r.exists && show_factor) {
      const auto w = find_factor(g, spec);
      if (!w) throw InvariantViolation("deficiency test and search disagree on " + encode_graph6(g));
      std::cout << " edges=";
      for (std::size_t i = 0; i < w->edges.size(); ++i) {
        std::cout << (i ? "," : "") << to_string(w->edges[i]);
      }
    }
    std::cout << '\n';
    all &= r.exists;
  }
  return all ? kPass : kFail;
}

int rho(const std::string& graph6, const std::vector<int>& h, double tol) {
  Graph g(0);
  if (!graph6.empty()) {
    g = parse_graph6(graph6);
  } else if (h.size() == 2) {
    g = h_graph(h[0], h[1]);
  } else {
    throw InvalidParameter("one of --graph6 or --H n gamma is required");
  }
  const auto r = spectral_radius(g, tol);
  std::cout << "graph6=" << encode_graph6(g) << '\n'
            << "rho=" << real(r.rho) << '\n'
            << "residual=" << r.residual << '\n'
            << "enclosure_radius=" << r.enclosure_radius() << '\n'
            << "iterations=" << r.iterations << '\n';
  return kPass;
}

int enumerate(int n, int budget, const std::string& filter, const std::string& out) {
  EnumerationTask task;
  task.n = n;
  if (budget >= 0) {
    task.mode = EnumerationTask::Mode::ComplementBudget;
    task.budget = budget;
  }
  if (!filter.empty()) task.filter = filter;
  const auto graphs = run_enumeration(task);
  std::ostringstream text;
  write_graph6(text, graphs);
  write_text(out, text.str());
  std::cerr << graphs.size() << " classes\n";
  return kPass;
}

int verify_cmd(const std::string& theorem, int n, int a, int b, const std::string& corpus,
               const CampaignOptions& options, const std::string& report, bool with_elapsed) {
  const auto r = verify(parse_theorem(theorem), n, a, b, Corpus::parse(corpus), options);
  write_text(report, format_report(r, with_elapsed));
  std::cout << summarize(r) << '\n';
  return r.pass ? kPass : kFail;
}

std::vector<Graph> suite_corpus(const std::string& corpus, int n, std::string& scope) {
  const Corpus c = Corpus::parse(corpus);
  switch (c.kind) {
    case Corpus::Kind::All: {
      if (n < 1 || n > 8) throw InvalidParameter("--corpus all needs 1 <= --n <= 8");
      std::vector<Graph> out;
      for (int m = 1; m <= n; ++m) {
        auto part = enumerate_all(m);
        out.insert(out.end(), part.begin(), part.end());
      }
      scope = "all graphs of order 1.." + std::to_string(n);
      return out;
    }
    case Corpus::Kind::Dense: {
      if (c.budget < 0) throw InvalidParameter("suites need an explicit budget: --corpus dense:K");
      scope = "dense candidates n=" + std::to_string(n) + " e(complement) <= " +
              std::to_string(c.budget);
      return enumerate_dense_candidates(n, c.budget);
    }
    case Corpus::Kind::File:
      scope = "file " + c.path;
      return ingest_graph6_file(c.path);
  }
  return {};
}

int suite_cmd(const std::vector<std::string>& names, const std::string& corpus, int n,
              const SuiteParams& params, const std::string& report, bool with_elapsed) {
  std::string scope;
  std::vector<Graph> graphs;
  const bool needs_corpus =
      std::any_of(names.begin(), names.end(), [](const auto& s) { return s != "lemma23"; });
  if (needs_corpus) {
    graphs = suite_corpus(corpus, n, scope);
  }
  const auto reports = run_property_suites(graphs, scope, names, params);
  if (!report.empty()) write_text(report, format_reports(reports, with_elapsed));
  bool pass = true;
  for (const auto& r : reports) {
    std::cout << summarize(r) << '\n';
    pass &= r.pass;
  }
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abcover: [a,b]-covered graphs, factors and spectral extremal checks"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs,-j", jobs, "worker threads (default: all cores)");

  GraphInput cov_in;
  int cov_a = 1, cov_b = 1;
  std::string method = "structural";
  auto* cov = app.add_subcommand("check-covered", "decide [a,b]-coverage");
  cov->add_option("--a", cov_a)->required();
  cov->add_option("--b", cov_b)->required();
  cov->add_option("--method", method, "structural or definitional")->capture_default_str();
  add_graph_input(cov, cov_in);

  GraphInput fac_in;
  int fac_a = 1, fac_b = 1;
  bool show_factor = false;
  auto* fac = app.add_subcommand("check-factor", "decide [a,b]-factor existence");
  fac->add_option("--a", fac_a)->required();
  fac->add_option("--b", fac_b)->required();
  fac->add_flag("--show-factor", show_factor, "print a factor when one exists");
  add_graph_input(fac, fac_in);

  std::string rho_g6;
  std::vector<int> rho_h;
  double rho_tol = 1e-10;
  auto* rho_cmd = app.add_subcommand("rho", "spectral radius");
  auto* rg = rho_cmd->add_option("--graph6", rho_g6);
  auto* rh = rho_cmd->add_option("--H", rho_h, "n gamma")->expected(2);
  rg->excludes(rh);
  rh->excludes(rg);
  rho_cmd->add_option("--tol", rho_tol)->capture_default_str();

  int en_n = 0, en_budget = -1;
  std::string en_filter, en_out;
  auto* en = app.add_subcommand("enumerate", "write isomorphism-class representatives");
  en->add_option("--n", en_n)->required();
  en->add_option("--complement-budget", en_budget);
  en->add_option("--filter", en_filter, "connected, bipartite or min-degree:K");
  en->add_option("--out", en_out, "output path, - for stdout")->required();

  std::string theorem, corpus = "all", report;
  int v_n = 0, v_a = 1, v_b = 1;
  CampaignOptions options;
  bool no_elapsed = false;
  auto* ver = app.add_subcommand("verify", "run an extremal campaign");
  ver->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"main0", "main1", "hao-li-size", "hao-li-spectral"}));
  ver->add_option("--n", v_n)->required();
  ver->add_option("--a", v_a)->required();
  ver->add_option("--b", v_b)->required();
  ver->add_option("--corpus", corpus, "all, dense, dense:K or file:PATH")->capture_default_str();
  ver->add_option("--tol", options.tol)->capture_default_str();
  ver->add_option("--jobs", options.jobs);
  ver->add_flag("--cross-check", options.cross_check, "also run the definitional oracle");
  ver->add_flag("--no-elapsed", no_elapsed, "omit elapsed_ms for byte-stable reports");
  ver->add_option("--report", report, "report path, - for stdout")->required();

  std::vector<std::string> names;
  std::string s_corpus = "all", s_report;
  int s_n = 0;
  SuiteParams params;
  auto* su = app.add_subcommand("suite", "run property suites");
  su->add_option("--names", names)->required()->delimiter(',');
  su->add_option("--corpus", s_corpus, "all (orders 1..n), dense:K or file:PATH")
      ->capture_default_str();
  su->add_option("--n", s_n);
  su->add_option("--a", params.a)->capture_default_str();
  su->add_option("--b", params.b)->capture_default_str();
  su->add_option("--trials", params.lemma23_trials)->capture_default_str();
  su->add_option("--max-order", params.lemma23_max_order)->capture_default_str();
  su->add_option("--seed", params.seed)->capture_default_str();
  su->add_option("--tol", params.tol)->capture_default_str();
  su->add_flag("--no-elapsed", no_elapsed);
  su->add_option("--report", s_report, "report path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (jobs > 0) set_worker_count(jobs);
    if (*cov) return check_covered(cov_in, cov_a, cov_b, method);
    if (*fac) return check_factor(fac_in, fac_a, fac_b, show_factor);
    if (*rho_cmd) return rho(rho_g6, rho_h, rho_tol);
    if (*en) return enumerate(en_n, en_budget, en_filter, en_out);
    if (*ver) return verify_cmd(theorem, v_n, v_a, v_b, corpus, options, report, !no_elapsed);
    if (*su) return suite_cmd(names, s_corpus, s_n, params, s_report, !no_elapsed);
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  }
  return kUsage;
}
