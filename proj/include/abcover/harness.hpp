#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "abcover/errors.hpp"
#include "abcover/graph.hpp"

namespace abcover {

/// Raised when a corpus cannot be shown to contain every graph the claim quantifies over.
class CorpusInsufficient : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

/// Raised when (n, a, b) lies outside the hypothesis of the theorem being checked.
class HypothesisViolation : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

enum class TheoremId { Main0, Main1, HaoLiSize, HaoLiSpectral };

/// Report identifier: main0, main1, hao_li_size, hao_li_spectral.
std::string to_string(TheoremId id);
/// Accepts the CLI spellings (main0, main1, hao-li-size, hao-li-spectral) and the report ids.
TheoremId parse_theorem(std::string_view text);

/// Where campaign graphs come from.
struct Corpus {
  enum class Kind { All, Dense, File };

  Kind kind = Kind::All;
  /// Complement-edge budget for Dense; negative selects the smallest sufficient budget.
  int budget = -1;
  std::string path;

  /// "all", "dense", "dense:K" or "file:PATH".
  static Corpus parse(std::string_view text);
};

struct CampaignOptions {
  double tol = 1e-8;
  /// Worker threads; <= 0 keeps the runtime default.
  int jobs = 0;
  /// Also run the definitional/search oracle on every corpus graph and report disagreements.
  bool cross_check = false;
};

struct Counterexample {
  std::string graph6;
  std::string witness;
};

struct VerificationReport {
  std::string theorem;
  int n = 0;
  int a = 0;
  int b = 0;
  std::string scope;
  std::size_t corpus_size = 0;
  std::string extremal_value = "-";
  std::vector<std::string> extremal_set;
  std::vector<std::string> expected_set;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  bool pass = false;
  double elapsed_seconds = 0.0;
};

/// Largest e(G) over non-[a,b]-covered graphs of the corpus and its maximisers,
/// compared with the predicted H_{n,a} (b >= 2) or H_{n,3} / K_3 ∨ 3K_1 (a = b = 1).
VerificationReport verify_size_extremal(int n, int a, int b, const Corpus& corpus,
                                        const CampaignOptions& options = {});

/// Largest rho(G) over non-[a,b]-covered graphs; passes only if the predicted
/// graph beats every other candidate by a certified margin.
VerificationReport verify_spectral_extremal(int n, int a, int b, const Corpus& corpus,
                                            const CampaignOptions& options = {});

/// Same campaigns over graphs without an [a,b]-factor (the Hao-Li statements).
VerificationReport verify_factor_extremal(int n, int a, int b, const Corpus& corpus,
                                          bool spectral, const CampaignOptions& options = {});

VerificationReport verify(TheoremId id, int n, int a, int b, const Corpus& corpus,
                          const CampaignOptions& options = {});

/// Complement-edge budget a Dense corpus needs for the given campaign.
int required_budget(TheoremId id, int n, int a, int b);

struct SuiteParams {
  int a = 1;
  int b = 2;
  int lemma23_trials = 1000;
  int lemma23_max_order = 40;
  std::uint64_t seed = 20240917;
  double tol = 1e-10;
};

/// Known suite ids: lemma21, lemma22, lemma23, lemma31, lemma32, lemma33.
const std::vector<std::string>& suite_names();

/// Runs each named suite over `corpus`; one report per suite.
/// Throws InvalidParameter for an unknown suite id or an empty list.
std::vector<VerificationReport> run_property_suites(const std::vector<Graph>& corpus,
                                                    const std::string& scope,
                                                    const std::vector<std::string>& suites,
                                                    const SuiteParams& params = {});

/// Key/value record; see README for the field list.
std::string format_report(const VerificationReport& report, bool with_elapsed = true);
std::string format_reports(const std::vector<VerificationReport>& reports,
                           bool with_elapsed = true);
std::vector<VerificationReport> parse_reports(std::string_view text);

/// One line per report for terminals.
std::string summarize(const VerificationReport& report);

/// Re-checks a counterexample witness string against the graph it names.
/// Returns true when the witness is confirmed by an independent evaluation.
bool replay_witness(const Counterexample& c, int a, int b);

}  // namespace abcover
