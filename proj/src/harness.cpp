#include "abcover/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "abcover/covered.hpp"
#include "abcover/detail/kernels.hpp"
#include "abcover/detail/parallel.hpp"
#include "abcover/detail/ternary_scan.hpp"
#include "abcover/enumeration.hpp"
#include "abcover/factor.hpp"
#include "abcover/graph6.hpp"
#include "abcover/spectral.hpp"

namespace abcover {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Main0:
      return "main0";
    case TheoremId::Main1:
      return "main1";
    case TheoremId::HaoLiSize:
      return "hao_li_size";
    case TheoremId::HaoLiSpectral:
      return "hao_li_spectral";
  }
  return "?";
}

TheoremId parse_theorem(std::string_view text) {
  if (text == "main0") return TheoremId::Main0;
  if (text == "main1") return TheoremId::Main1;
  if (text == "hao-li-size" || text == "hao_li_size") return TheoremId::HaoLiSize;
  if (text == "hao-li-spectral" || text == "hao_li_spectral") return TheoremId::HaoLiSpectral;
  throw InvalidParameter("unknown theorem '" + std::string(text) + "'");
}

Corpus Corpus::parse(std::string_view text) {
  Corpus c;
  if (text == "all") return c;
  if (text == "dense") {
    c.kind = Kind::Dense;
    return c;
  }
  if (text.starts_with("dense:")) {
    c.kind = Kind::Dense;
    try {
      c.budget = std::stoi(std::string(text.substr(6)));
    } catch (const std::exception&) {
      throw InvalidParameter("bad complement budget in corpus '" + std::string(text) + "'");
    }
    if (c.budget < 0) throw InvalidParameter("complement budget must be non-negative");
    return c;
  }
  if (text.starts_with("file:") && text.size() > 5) {
    c.kind = Kind::File;
    c.path = std::string(text.substr(5));
    return c;
  }
  throw InvalidParameter("corpus must be all, dense, dense:K or file:PATH, got '" +
                         std::string(text) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

bool spectral_theorem(TheoremId id) {
  return id == TheoremId::Main1 || id == TheoremId::HaoLiSpectral;
}

bool factor_theorem(TheoremId id) {
  return id == TheoremId::HaoLiSize || id == TheoremId::HaoLiSpectral;
}

long ceil_half(long x) { return (x + 1) / 2; }

void check_hypothesis(TheoremId id, int n, int a, int b) {
  if (a < 1 || a > b) {
    throw InvalidParameter("need 1 <= a <= b, got a=" + std::to_string(a) +
                           " b=" + std::to_string(b));
  }
  if (a == b && (static_cast<long>(n) * a) % 2 != 0) {
    throw HypothesisViolation("parity: a = b requires n*a even (n=" + std::to_string(n) +
                              ", a=" + std::to_string(a) + ")");
  }
  if (factor_theorem(id)) {
    if (n < a + 1) throw HypothesisViolation("the factor extremal statements need n >= a + 1");
    return;
  }
  if (b >= 2 && n < 3 * a + 4) {
    throw HypothesisViolation("for b >= 2 the covered extremal statements need n >= 3a + 4 (n=" +
                              std::to_string(n) + ", 3a+4=" + std::to_string(3 * a + 4) + ")");
  }
  if (b == 1 && n < 4) throw HypothesisViolation("for a = b = 1 the statements need n >= 4");
}

/// Predicted maximum size.
long expected_size(TheoremId id, int n, int a, int b) {
  if (!factor_theorem(id) && a == 1 && b == 1) return binomial2(n - 1) + 2;
  return binomial2(n - 1) + a - 1;
}

std::vector<Graph> expected_graphs(TheoremId id, int n, int a, int b) {
  std::vector<Graph> out;
  switch (id) {
    case TheoremId::Main0:
      if (a == 1 && b == 1) {
        out.push_back(h_graph(n, 3));
        if (n == 6) out.push_back(join(complete(3), empty_graph(3)));
      } else {
        out.push_back(h_graph(n, a));
      }
      break;
    case TheoremId::Main1:
      out.push_back(a == 1 && b == 1 ? h_graph(n, 3) : h_graph(n, a));
      break;
    case TheoremId::HaoLiSize:
      out.push_back(h_graph(n, a));
      if ((a * b == 1 || a * b == 2) && n == 4) out.push_back(star(3));
      if (a == 2 && b == 2 && n == 5) out.push_back(join(complete(2), empty_graph(3)));
      break;
    case TheoremId::HaoLiSpectral:
      out.push_back(h_graph(n, a));
      break;
  }
  return out;
}

std::vector<std::string> canonical_keys(const std::vector<Graph>& graphs) {
  std::set<std::string> keys;
  for (const auto& g : graphs) keys.insert(canonical_form(g).bytes);
  return {keys.begin(), keys.end()};
}

struct LoadedCorpus {
  std::vector<Graph> graphs;  // canonically labelled, sorted by key
  std::vector<std::string> keys;
  std::string scope;
  std::vector<std::string> notes;
};

LoadedCorpus load_corpus(TheoremId id, int n, int a, int b, const Corpus& corpus) {
  const int need = required_budget(id, n, a, b);
  LoadedCorpus out;
  Corpus::Kind kind = corpus.kind;
  int budget = corpus.budget;
  if (kind == Corpus::Kind::All && n > 8) {
    kind = Corpus::Kind::Dense;
    budget = -1;
    out.notes.push_back("exhaustive enumeration is capped at n <= 8; switched to dense candidates");
  }

  switch (kind) {
    case Corpus::Kind::All:
      out.graphs = enumerate_all(n);
      out.scope = "all graphs of order " + std::to_string(n);
      break;
    case Corpus::Kind::Dense: {
      const int k = budget < 0 ? need : budget;
      if (k < need) {
        throw CorpusInsufficient("complement budget " + std::to_string(k) +
                                 " is below the required " + std::to_string(need));
      }
      out.graphs = enumerate_dense_candidates(n, k);
      out.scope = "dense candidates only: e(complement) <= " + std::to_string(k);
      break;
    }
    case Corpus::Kind::File: {
      const auto raw = ingest_graph6_file(corpus.path);
      std::set<std::string> keys;
      for (const auto& g : raw) {
        if (g.order() != n) {
          throw InvalidParameter("corpus file contains a graph of order " +
                                 std::to_string(g.order()) + ", expected " + std::to_string(n));
        }
        keys.insert(canonical_form(g).bytes);
      }
      for (const auto& g : enumerate_dense_candidates(n, need)) {
        if (!keys.contains(encode_graph6(g))) {
          throw CorpusInsufficient("corpus file lacks " + encode_graph6(g) +
                                   ", so it does not cover e(complement) <= " +
                                   std::to_string(need));
        }
      }
      for (const auto& k : keys) out.graphs.push_back(parse_graph6(k));
      out.scope = "file " + corpus.path + " (covers e(complement) <= " + std::to_string(need) + ")";
      break;
    }
  }
  for (const auto& g : out.graphs) out.keys.push_back(encode_graph6(g));
  return out;
}

std::string structural_witness_text(const StructuralWitness& w) {
  return "structural S=" + to_string(w.s) + " T=" + to_string(w.t) +
         " theta=" + std::to_string(w.theta) + " epsilon=" + std::to_string(w.epsilon);
}

std::string deficiency_witness_text(const DeficiencyCertificate& c) {
  return "deficiency S=" + to_string(c.s) + " T=" + to_string(c.t) +
         " value=" + std::to_string(c.value);
}

struct Judgement {
  bool bad = false;  // not covered / no factor
  std::string witness;
  std::optional<std::string> disagreement;
};

Judgement judge(TheoremId id, const Graph& g, int a, int b, bool cross_check) {
  const ScanOptions serial{16, Execution::Serial};
  Judgement j;
  if (factor_theorem(id)) {
    const auto spec = DegreeSpec::uniform(g.order(), a, b);
    const auto r = has_gf_factor(g, spec, serial);
    j.bad = !r.exists;
    if (r.certificate) j.witness = deficiency_witness_text(*r.certificate);
    if (cross_check && find_factor(g, spec).has_value() != r.exists) {
      j.disagreement = "oracle-disagreement deficiency=" + std::string(r.exists ? "factor" : "none") +
                       " search=" + std::string(r.exists ? "none" : "factor");
    }
  } else {
    const auto v = is_ab_covered_structural(g, a, b, serial);
    j.bad = !v.covered;
    if (v.structural_witness) j.witness = structural_witness_text(*v.structural_witness);
    if (cross_check && is_ab_covered_definitional(g, a, b).covered != v.covered) {
      j.disagreement = "oracle-disagreement structural=" +
                       std::string(v.covered ? "covered" : "not-covered") + " definitional=" +
                       std::string(v.covered ? "not-covered" : "covered");
    }
  }
  return j;
}

std::vector<Judgement> judge_corpus(TheoremId id, const LoadedCorpus& corpus, int a, int b,
                                    bool cross_check) {
  std::vector<Judgement> out(corpus.graphs.size());
  detail::parallel_for(corpus.graphs.size(), [&](std::size_t i) {
    out[i] = judge(id, corpus.graphs[i], a, b, cross_check);
  });
  return out;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

VerificationReport start_report(TheoremId id, int n, int a, int b, const LoadedCorpus& corpus) {
  VerificationReport r;
  r.theorem = to_string(id);
  r.n = n;
  r.a = a;
  r.b = b;
  r.scope = corpus.scope;
  r.corpus_size = corpus.graphs.size();
  r.notes = corpus.notes;
  return r;
}

void add_disagreements(VerificationReport& r, const LoadedCorpus& corpus,
                       const std::vector<Judgement>& judged) {
  for (std::size_t i = 0; i < judged.size(); ++i) {
    if (judged[i].disagreement) r.counterexamples.push_back({corpus.keys[i], *judged[i].disagreement});
  }
}

VerificationReport size_campaign(TheoremId id, int n, int a, int b, const Corpus& corpus,
                                 const CampaignOptions& options) {
  const auto started = Clock::now();
  check_hypothesis(id, n, a, b);
  if (options.jobs > 0) set_worker_count(options.jobs);
  const auto loaded = load_corpus(id, n, a, b, corpus);
  const auto judged = judge_corpus(id, loaded, a, b, options.cross_check);

  VerificationReport r = start_report(id, n, a, b, loaded);
  const long predicted = expected_size(id, n, a, b);
  r.expected_set = canonical_keys(expected_graphs(id, n, a, b));
  const std::set<std::string> expected(r.expected_set.begin(), r.expected_set.end());

  long best = -1;
  for (std::size_t i = 0; i < judged.size(); ++i) {
    if (judged[i].bad) best = std::max(best, loaded.graphs[i].size());
  }
  for (std::size_t i = 0; i < judged.size(); ++i) {
    if (!judged[i].bad) continue;
    const long e = loaded.graphs[i].size();
    if (e == best) r.extremal_set.push_back(loaded.keys[i]);
    if (e > predicted || (e == predicted && !expected.contains(loaded.keys[i]))) {
      r.counterexamples.push_back({loaded.keys[i], judged[i].witness + " edges=" + std::to_string(e)});
    }
  }
  for (const auto& key : r.expected_set) {
    const auto it = std::find(loaded.keys.begin(), loaded.keys.end(), key);
    if (it == loaded.keys.end()) {
      r.notes.push_back("predicted extremal graph " + key + " is missing from the corpus");
    } else if (!judged[static_cast<std::size_t>(it - loaded.keys.begin())].bad) {
      r.counterexamples.push_back({key, std::string(factor_theorem(id) ? "expected-has-factor"
                                                                        : "expected-covered")});
    }
  }
  add_disagreements(r, loaded, judged);
  r.extremal_value = best < 0 ? "-" : std::to_string(best);
  r.pass = r.counterexamples.empty() && best == predicted && r.extremal_set == r.expected_set;
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return r;
}

VerificationReport spectral_campaign(TheoremId id, int n, int a, int b, const Corpus& corpus,
                                     const CampaignOptions& options) {
  const auto started = Clock::now();
  check_hypothesis(id, n, a, b);
  if (!(options.tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  if (options.jobs > 0) set_worker_count(options.jobs);
  const auto loaded = load_corpus(id, n, a, b, corpus);
  const auto judged = judge_corpus(id, loaded, a, b, options.cross_check);

  VerificationReport r = start_report(id, n, a, b, loaded);
  if (corpus.kind != Corpus::Kind::All || n > 8) {
    r.notes.push_back("scope: dense candidates only; graphs with rho below n-2 are not examined");
  }
  r.expected_set = canonical_keys(expected_graphs(id, n, a, b));
  const std::string& predicted = r.expected_set.front();

  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < judged.size(); ++i) {
    if (judged[i].bad) bad.push_back(i);
  }
  std::vector<SpectralResult> rho(bad.size());
  detail::parallel_for(bad.size(), [&](std::size_t j) {
    rho[j] = spectral_radius(loaded.graphs[bad[j]], options.tol);
  });

  std::size_t top = 0;
  for (std::size_t j = 1; j < bad.size(); ++j) {
    if (rho[j].rho > rho[top].rho) top = j;
  }
  std::optional<std::size_t> expected_pos;
  for (std::size_t j = 0; j < bad.size(); ++j) {
    if (loaded.keys[bad[j]] == predicted) expected_pos = j;
  }

  if (!bad.empty()) {
    r.extremal_value = format_real(rho[top].rho);
    for (std::size_t j = 0; j < bad.size(); ++j) {
      if (j == top || compare_rho(rho[top], rho[j]) != RhoOrder::Greater) {
        r.extremal_set.push_back(loaded.keys[bad[j]]);
      }
    }
  }

  if (!expected_pos) {
    const bool present = std::find(loaded.keys.begin(), loaded.keys.end(), predicted) != loaded.keys.end();
    if (present) {
      r.counterexamples.push_back({predicted, std::string(factor_theorem(id) ? "expected-has-factor"
                                                                              : "expected-covered")});
    } else {
      r.notes.push_back("predicted extremal graph " + predicted + " is missing from the corpus");
    }
  } else {
    const auto& ref = rho[*expected_pos];
    bool undecided = false;
    for (std::size_t j = 0; j < bad.size(); ++j) {
      if (j == *expected_pos) continue;
      const auto order = compare_rho(ref, rho[j]);
      if (order == RhoOrder::Greater) continue;
      undecided |= order == RhoOrder::Indistinguishable;
      r.counterexamples.push_back({loaded.keys[bad[j]],
                                   judged[bad[j]].witness + " rho=" + format_real(rho[j].rho) +
                                       " against_expected=" + to_string(order)});
    }
    if (undecided) {
      r.notes.push_back("some radii are indistinguishable from the predicted maximum at tol " +
                        format_real(options.tol) + "; rerun with a tighter --tol");
    }
  }
  add_disagreements(r, loaded, judged);
  r.pass = r.counterexamples.empty() && r.extremal_set == r.expected_set;
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return r;
}

}  // namespace

int required_budget(TheoremId id, int n, int a, int b) {
  const long size_budget = binomial2(n) - expected_size(id, n, a, b);
  if (!spectral_theorem(id)) return static_cast<int>(std::max(0L, size_budget));
  // Candidates with rho >= n-2 and minimum degree at least the predicted graph's satisfy
  // e(complement) <= n - ceil(d/2) - 1.
  const long d = (id == TheoremId::Main1 && a == 1 && b == 1) ? 3 : a;
  return static_cast<int>(std::max({0L, size_budget, n - ceil_half(d) - 1}));
}

VerificationReport verify_size_extremal(int n, int a, int b, const Corpus& corpus,
                                        const CampaignOptions& options) {
  return size_campaign(TheoremId::Main0, n, a, b, corpus, options);
}

VerificationReport verify_spectral_extremal(int n, int a, int b, const Corpus& corpus,
                                            const CampaignOptions& options) {
  return spectral_campaign(TheoremId::Main1, n, a, b, corpus, options);
}

VerificationReport verify_factor_extremal(int n, int a, int b, const Corpus& corpus, bool spectral,
                                          const CampaignOptions& options) {
  return spectral ? spectral_campaign(TheoremId::HaoLiSpectral, n, a, b, corpus, options)
                  : size_campaign(TheoremId::HaoLiSize, n, a, b, corpus, options);
}

VerificationReport verify(TheoremId id, int n, int a, int b, const Corpus& corpus,
                          const CampaignOptions& options) {
  return spectral_theorem(id) ? spectral_campaign(id, n, a, b, corpus, options)
                              : size_campaign(id, n, a, b, corpus, options);
}

// ------------------------------------------------------------------- suites

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma21", "lemma22", "lemma23",
                                              "lemma31", "lemma32", "lemma33"};
  return names;
}

namespace {

struct SuiteOutcome {
  std::vector<Counterexample> violations;
  long checks = 0;
};

SuiteOutcome lemma21(const std::vector<Graph>& corpus, const SuiteParams& p) {
  SuiteOutcome out;
  std::vector<std::optional<Counterexample>> hits(corpus.size());
  detail::parallel_for(corpus.size(), [&](std::size_t i) {
    const double rho = spectral_radius(corpus[i], p.tol).rho;
    const double bound = hong_nikiforov_bound(corpus[i]);
    if (rho > bound + 1e-9) {
      hits[i] = Counterexample{encode_graph6(corpus[i]),
                               "rho=" + format_real(rho) + " bound=" + format_real(bound)};
    }
  });
  for (auto& h : hits) {
    if (h) out.violations.push_back(*h);
  }
  out.checks = static_cast<long>(corpus.size());
  return out;
}

SuiteOutcome lemma22(const std::vector<Graph>& corpus, const SuiteParams& p) {
  SuiteOutcome out;
  std::vector<std::vector<Counterexample>> hits(corpus.size());
  std::vector<long> checks(corpus.size(), 0);
  detail::parallel_for(corpus.size(), [&](std::size_t i) {
    const int delta = min_degree(corpus[i]);
    for (int a = 1; a <= delta; ++a) {
      ++checks[i];
      if (!lemma22_check(corpus[i], a, p.tol)) {
        hits[i].push_back({encode_graph6(corpus[i]), "a=" + std::to_string(a)});
      }
    }
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.checks += checks[i];
    out.violations.insert(out.violations.end(), hits[i].begin(), hits[i].end());
  }
  return out;
}

SuiteOutcome lemma23(const SuiteParams& p) {
  SuiteOutcome out;
  std::mt19937_64 rng(p.seed);
  for (int trial = 0; trial < p.lemma23_trials; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, p.lemma23_max_order)(rng);
    const int s = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int q = std::uniform_int_distribution<int>(1, n - s)(rng);
    // Random composition of n - s into q positive parts, sorted non-increasing.
    std::vector<int> cuts;
    for (int i = 1; i < n - s; ++i) cuts.push_back(i);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(static_cast<std::size_t>(q - 1));
    cuts.push_back(0);
    cuts.push_back(n - s);
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> parts;
    for (std::size_t i = 1; i < cuts.size(); ++i) parts.push_back(cuts[i] - cuts[i - 1]);
    std::sort(parts.rbegin(), parts.rend());

    Graph cliques(0);
    for (int l : parts) cliques = disjoint_union(cliques, complete(l));
    const Graph lhs = join(complete(s), cliques);
    const Graph rhs = join(complete(s), disjoint_union(complete(n - s - q + 1), empty_graph(q - 1)));
    ++out.checks;
    if (lhs.order() != n || rhs.order() != n || lhs.size() > rhs.size()) {
      std::string text = "s=" + std::to_string(s) + " parts=";
      for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? "," : "") + std::to_string(parts[i]);
      out.violations.push_back({encode_graph6(lhs), text});
    }
  }
  return out;
}

// Every violating (S, T) with |S| <= |T| + 1 has |T| <= 4, under the size hypotheses.
SuiteOutcome lemma31(const std::vector<Graph>& corpus, const SuiteParams& p) {
  SuiteOutcome out;
  if (p.b < 2) throw InvalidParameter("lemma31 needs b >= 2");
  std::vector<std::optional<Counterexample>> hits(corpus.size());
  std::vector<long> checks(corpus.size(), 0);
  detail::parallel_for(corpus.size(), [&](std::size_t i) {
    const Graph& g = corpus[i];
    const int n = g.order();
    if (n < 3 * p.a + 4 || binomial2(n) - g.size() > n - ceil_half(p.a) - 1) return;
    if (n > 16) throw ResourceLimit("lemma31 scans are limited to order 16");
    const detail::MaskGraph mg(g);
    const detail::CoverKernel kernel{&mg, p.a, p.b};
    detail::for_each_pair(n, [&](const PairMasks& pair) {
      const int s = detail::popcount(pair.s);
      const int t = detail::popcount(pair.t);
      if (s > t + 1 || !kernel(pair)) return true;
      ++checks[i];
      if (t > 4) {
        hits[i] = Counterexample{encode_graph6(g), "S=" + to_string(VertexSet::from_mask(pair.s)) +
                                                       " T=" + to_string(VertexSet::from_mask(pair.t))};
        return false;
      }
      return true;
    });
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.checks += checks[i];
    if (hits[i]) out.violations.push_back(*hits[i]);
  }
  return out;
}

SuiteOutcome lemma32(const std::vector<Graph>& corpus, const SuiteParams& p) {
  SuiteOutcome out;
  if (p.a >= p.b) throw InvalidParameter("lemma32 needs a < b");
  std::vector<std::optional<Counterexample>> hits(corpus.size());
  detail::parallel_for(corpus.size(), [&](std::size_t i) {
    const Graph& g = corpus[i];
    if (g.order() > 16) throw ResourceLimit("lemma32 scans are limited to order 16");
    const detail::MaskGraph mg(g);
    const detail::CoverKernel kernel{&mg, p.a, p.b};
    detail::for_each_pair(g.order(), [&](const PairMasks& pair) {
      const int eps = kernel.epsilon(pair);
      if (eps <= detail::popcount(pair.s)) return true;
      hits[i] = Counterexample{encode_graph6(g), "S=" + to_string(VertexSet::from_mask(pair.s)) +
                                                     " T=" + to_string(VertexSet::from_mask(pair.t)) +
                                                     " epsilon=" + std::to_string(eps)};
      return false;
    });
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    long pairs = 1;
    for (int v = 0; v < corpus[i].order(); ++v) pairs *= 3;
    out.checks += pairs;
    if (hits[i]) out.violations.push_back(*hits[i]);
  }
  return out;
}

SuiteOutcome lemma33(const std::vector<Graph>& corpus, const SuiteParams& p) {
  SuiteOutcome out;
  const int a = p.a;
  const int b = p.b;
  std::vector<std::optional<Counterexample>> hits(corpus.size());
  std::vector<long> checks(corpus.size(), 0);
  detail::parallel_for(corpus.size(), [&](std::size_t i) {
    const Graph& g = corpus[i];
    const int n = g.order();
    if (n < 3 * a + 4 || min_degree(g) < a) return;
    if (a == b && (static_cast<long>(n) * a) % 2 != 0) return;
    const long missing = binomial2(n) - g.size();
    const bool part_one = b >= 2 && missing <= n - ceil_half(a) - 1;
    const bool part_two = a == 1 && b >= 2 && missing <= n - 1;
    if (!part_one && !part_two) return;
    ++checks[i];
    const auto v = is_ab_covered_structural(g, a, b, {16, Execution::Serial});
    if (!v.covered) {
      hits[i] = Counterexample{encode_graph6(g), structural_witness_text(*v.structural_witness)};
    }
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.checks += checks[i];
    if (hits[i]) out.violations.push_back(*hits[i]);
  }
  return out;
}

}  // namespace

std::vector<VerificationReport> run_property_suites(const std::vector<Graph>& corpus,
                                                    const std::string& scope,
                                                    const std::vector<std::string>& suites,
                                                    const SuiteParams& params) {
  if (suites.empty()) throw InvalidParameter("no suites named");
  for (const auto& name : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw InvalidParameter("unknown suite '" + name + "'");
    }
  }
  int order = 0;
  for (const auto& g : corpus) order = std::max(order, g.order());

  std::vector<VerificationReport> reports;
  for (const auto& name : suites) {
    const auto started = Clock::now();
    SuiteOutcome outcome;
    if (name == "lemma21") outcome = lemma21(corpus, params);
    else if (name == "lemma22") outcome = lemma22(corpus, params);
    else if (name == "lemma23") outcome = lemma23(params);
    else if (name == "lemma31") outcome = lemma31(corpus, params);
    else if (name == "lemma32") outcome = lemma32(corpus, params);
    else outcome = lemma33(corpus, params);

    VerificationReport r;
    r.theorem = name;
    r.n = name == "lemma23" ? params.lemma23_max_order : order;
    r.a = params.a;
    r.b = params.b;
    r.scope = name == "lemma23" ? "random instances seed=" + std::to_string(params.seed) : scope;
    r.corpus_size = name == "lemma23" ? static_cast<std::size_t>(params.lemma23_trials) : corpus.size();
    r.extremal_value = std::to_string(outcome.checks);
    r.notes.push_back("extremal_value counts the instances checked");
    r.counterexamples = std::move(outcome.violations);
    r.pass = r.counterexamples.empty();
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace abcover
