#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abcover/covered.hpp"
#include "abcover/enumeration.hpp"
#include "abcover/factor.hpp"
#include "abcover/graph6.hpp"
#include "abcover/harness.hpp"

using namespace abcover;

namespace {

std::string g6(const Graph& g) { return canonical_form(g).bytes; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return read_file(std::string(ABCOVER_GOLDEN_DIR) + "/" + name);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("abcover_test_" + name);
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("corpus spellings") {
  CHECK(Corpus::parse("all").kind == Corpus::Kind::All);
  CHECK(Corpus::parse("dense").budget == -1);
  const auto d = Corpus::parse("dense:8");
  CHECK(d.kind == Corpus::Kind::Dense);
  CHECK(d.budget == 8);
  const auto f = Corpus::parse("file:/tmp/x.g6");
  CHECK(f.kind == Corpus::Kind::File);
  CHECK(f.path == "/tmp/x.g6");
  CHECK_THROWS_AS(Corpus::parse("dense:x"), InvalidParameter);
  CHECK_THROWS_AS(Corpus::parse("dense:-1"), InvalidParameter);
  CHECK_THROWS_AS(Corpus::parse("random"), InvalidParameter);
  CHECK(parse_theorem("hao-li-size") == TheoremId::HaoLiSize);
  CHECK(to_string(TheoremId::HaoLiSpectral) == "hao_li_spectral");
  CHECK_THROWS_AS(parse_theorem("main2"), InvalidParameter);
}

TEST_CASE("required budgets") {
  CHECK(required_budget(TheoremId::Main0, 10, 2, 2) == 8);
  CHECK(required_budget(TheoremId::Main0, 8, 1, 1) == 5);
  CHECK(required_budget(TheoremId::Main0, 7, 1, 2) == 6);
  CHECK(required_budget(TheoremId::Main1, 10, 2, 2) == 8);
  CHECK(required_budget(TheoremId::HaoLiSize, 7, 1, 3) == 6);
}

TEST_CASE("size campaign at n = 6 for matchings") {
  const auto r = verify_size_extremal(6, 1, 1, Corpus{});
  CHECK(r.pass);
  CHECK(r.extremal_value == "12");
  CHECK(r.corpus_size == 156);
  CHECK(r.extremal_set.size() == 2);
  const std::vector<std::string> expected{g6(h_graph(6, 3)), g6(join(complete(3), empty_graph(3)))};
  CHECK(std::is_permutation(r.extremal_set.begin(), r.extremal_set.end(), expected.begin(),
                            expected.end()));
  CHECK(r.counterexamples.empty());
}

TEST_CASE("size campaign at (7,1,2)") {
  const auto r = verify_size_extremal(7, 1, 2, Corpus{});
  CHECK(r.pass);
  CHECK(r.extremal_value == "15");
  CHECK(r.extremal_set == std::vector<std::string>{g6(h_graph(7, 1))});
  CHECK(g6(h_graph(7, 1)) == g6(disjoint_union(complete(6), empty_graph(1))));
}

TEST_CASE("spectral campaigns") {
  const auto r = verify_spectral_extremal(6, 1, 1, Corpus{}, {1e-8});
  CHECK(r.pass);
  CHECK(r.extremal_set == std::vector<std::string>{g6(h_graph(6, 3))});
  CHECK(r.extremal_value == "4.201472338219");
  const auto s = verify_spectral_extremal(7, 1, 2, Corpus{}, {1e-8});
  CHECK(s.pass);
  CHECK(s.extremal_set == std::vector<std::string>{g6(h_graph(7, 1))});
  CHECK_THROWS_AS(verify_spectral_extremal(6, 1, 1, Corpus{}, {0.0}), InvalidParameter);
}

TEST_CASE("factor campaigns") {
  const auto a = verify_factor_extremal(4, 1, 2, Corpus{}, false);
  CHECK(a.pass);
  CHECK(a.extremal_value == "3");
  CHECK(a.extremal_set.size() == 2);
  CHECK(std::count(a.extremal_set.begin(), a.extremal_set.end(), g6(star(3))) == 1);
  const auto b = verify_factor_extremal(5, 2, 2, Corpus{}, false);
  CHECK(b.pass);
  CHECK(b.extremal_value == "7");
  CHECK(std::count(b.extremal_set.begin(), b.extremal_set.end(),
                   g6(join(complete(2), empty_graph(3)))) == 1);
  const auto c = verify_factor_extremal(7, 1, 3, Corpus{}, false);
  CHECK(c.pass);
  CHECK(c.extremal_set == std::vector<std::string>{g6(h_graph(7, 1))});
  CHECK(verify_factor_extremal(7, 1, 3, Corpus{}, true).pass);
}

TEST_CASE("dense mode at (10,2,2)") {
  const auto r = verify(TheoremId::Main0, 10, 2, 2, Corpus::parse("dense"));
  CHECK(r.pass);
  CHECK(r.extremal_value == "37");
  CHECK(r.extremal_set == std::vector<std::string>{g6(h_graph(10, 2))});
  CHECK(r.scope == "dense candidates only: e(complement) <= 8");
  const auto automatic = verify(TheoremId::Main0, 10, 2, 2, Corpus{});
  CHECK(automatic.pass);
  CHECK(automatic.scope == r.scope);
  CHECK_FALSE(automatic.notes.empty());
}

TEST_CASE("insufficient corpora are refused") {
  CHECK_THROWS_AS(verify(TheoremId::Main0, 10, 2, 2, Corpus::parse("dense:7")), CorpusInsufficient);
  const auto path = temp_file("partial.g6");
  {
    std::ofstream out(path);
    write_graph6(out, enumerate_dense_candidates(7, 3));
  }
  CHECK_THROWS_AS(verify(TheoremId::Main0, 7, 1, 2, Corpus::parse("file:" + path.string())),
                  CorpusInsufficient);
  {
    std::ofstream out(path);
    write_graph6(out, enumerate_dense_candidates(7, 6));
  }
  const auto r = verify(TheoremId::Main0, 7, 1, 2, Corpus::parse("file:" + path.string()));
  CHECK(r.pass);
  CHECK(r.extremal_set == std::vector<std::string>{g6(h_graph(7, 1))});
  {
    std::ofstream out(path);
    write_graph6(out, enumerate_dense_candidates(6, 6));
  }
  CHECK_THROWS_AS(verify(TheoremId::Main0, 7, 1, 2, Corpus::parse("file:" + path.string())),
                  InvalidParameter);
  std::filesystem::remove(path);
}

TEST_CASE("hypotheses are enforced") {
  CHECK_THROWS_AS(verify(TheoremId::Main0, 5, 1, 1, Corpus{}), HypothesisViolation);
  CHECK_THROWS_AS(verify(TheoremId::Main0, 6, 1, 2, Corpus{}), HypothesisViolation);
  CHECK_THROWS_AS(verify(TheoremId::Main0, 8, 2, 1, Corpus{}), InvalidParameter);
  CHECK_THROWS_AS(verify(TheoremId::HaoLiSize, 3, 3, 3, Corpus{}), HypothesisViolation);
  CHECK_THROWS_AS(verify(TheoremId::HaoLiSize, 5, 1, 1, Corpus{}), HypothesisViolation);
  try {
    verify(TheoremId::Main0, 7, 1, 1, Corpus{});
    FAIL("expected HypothesisViolation");
  } catch (const HypothesisViolation& e) {
    CHECK(std::string(e.what()).find("parity") != std::string::npos);
  }
}

TEST_CASE("cross-checked campaign finds no disagreement") {
  CampaignOptions opts;
  opts.cross_check = true;
  const auto r = verify(TheoremId::Main0, 6, 1, 1, Corpus{}, opts);
  CHECK(r.pass);
  const auto f = verify(TheoremId::HaoLiSize, 5, 2, 2, Corpus{}, opts);
  CHECK(f.pass);
}

TEST_CASE("reports are deterministic and match the golden files") {
  const auto main0 = verify(TheoremId::Main0, 6, 1, 1, Corpus{});
  CHECK(format_report(main0, false) == golden("main0_n6_a1_b1.txt"));
  CHECK(format_report(verify(TheoremId::Main0, 6, 1, 1, Corpus{}), false) ==
        format_report(main0, false));
  CHECK(format_report(verify(TheoremId::Main1, 6, 1, 1, Corpus{}), false) ==
        golden("main1_n6_a1_b1.txt"));
  CHECK(format_report(verify(TheoremId::HaoLiSize, 4, 1, 2, Corpus{}), false) ==
        golden("hao_li_size_n4_a1_b2.txt"));
  CHECK(format_report(verify(TheoremId::Main0, 10, 2, 2, Corpus::parse("dense")), false) ==
        golden("main0_n10_a2_b2_dense.txt"));
}

TEST_CASE("report round trip") {
  VerificationReport r;
  r.theorem = "main0";
  r.n = 6;
  r.a = 1;
  r.b = 1;
  r.scope = "unit";
  r.corpus_size = 3;
  r.extremal_value = "12";
  r.extremal_set = {"E~~?", "EF~w"};
  r.expected_set = {"E~~?"};
  r.counterexamples = {{"EF~w", "structural S={0} T={} theta=0 epsilon=2"}};
  r.notes = {"first\nsecond"};
  r.pass = false;
  r.elapsed_seconds = 0.25;
  const auto text = format_report(r);
  const auto parsed = parse_reports(text + "\n" + format_report(r, false));
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].theorem == "main0");
  CHECK(parsed[0].extremal_set == r.extremal_set);
  CHECK(parsed[0].counterexamples[0].witness == r.counterexamples[0].witness);
  CHECK(parsed[0].notes[0] == "first second");
  CHECK_FALSE(parsed[0].pass);
  CHECK(parsed[0].elapsed_seconds == doctest::Approx(0.25));
  CHECK(format_report(parsed[1], false) == format_report(parsed[0], false));
  CHECK(summarize(r).rfind("[FAIL] main0 n=6 a=1 b=1", 0) == 0);

  CHECK_THROWS_AS(parse_reports("theorem=main0\n"), ParseError);
  CHECK_THROWS_AS(parse_reports("record=verification\nn=x\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_reports("record=verification\ncounterexample_count=1\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_reports("record=verification\nstatus=pass\n"), ParseError);
  CHECK_THROWS_AS(parse_reports("record=verification\ncolour=red\nend\n"), ParseError);
}

TEST_CASE("structural and deficiency witnesses replay") {
  for (const auto& g : enumerate_all(6)) {
    const auto v = is_ab_covered_structural(g, 1, 1);
    if (!v.covered) {
      CHECK(replay_witness({encode_graph6(g), "structural " + to_string(*v.structural_witness)}, 1, 1));
    }
    const auto f = has_gf_factor(g, DegreeSpec::uniform(6, 1, 2));
    if (!f.exists) {
      const auto& c = *f.certificate;
      const std::string w = "deficiency S=" + to_string(c.s) + " T=" + to_string(c.t) +
                            " value=" + std::to_string(c.value);
      CHECK(replay_witness({encode_graph6(g), w}, 1, 2));
    }
  }
  const std::string h = encode_graph6(h_graph(6, 3));
  CHECK(replay_witness({h, "structural S={0,1} T={5} theta=0 epsilon=2 edges=12"}, 1, 1));
  CHECK_FALSE(replay_witness({h, "structural S={0,1} T={5} theta=1 epsilon=2"}, 1, 1));
  CHECK_FALSE(replay_witness({encode_graph6(complete(4)), "structural S={} T={} theta=0 epsilon=0"}, 1, 1));
  CHECK(replay_witness({h, "edge uv=0-1"}, 1, 1));
  CHECK_FALSE(replay_witness({h, "edge uv=2-3"}, 1, 1));
  CHECK(replay_witness({encode_graph6(complete(4)), "expected-covered"}, 1, 1));
  CHECK_THROWS_AS(replay_witness({h, "rho=4.2 bound=5"}, 1, 1), InvalidParameter);
  CHECK_THROWS_AS(replay_witness({h, "structural T={5}"}, 1, 1), ParseError);
}

TEST_CASE("property suites") {
  std::vector<Graph> upto5;
  for (int n = 1; n <= 5; ++n) {
    const auto part = enumerate_all(n);
    upto5.insert(upto5.end(), part.begin(), part.end());
  }
  SuiteParams p;
  const auto reports = run_property_suites(upto5, "orders 1..5", {"lemma21", "lemma22", "lemma32"}, p);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) CHECK(r.pass);
  CHECK(reports[0].theorem == "lemma21");

  p.lemma23_trials = 200;
  const auto l23 = run_property_suites({}, "", {"lemma23"}, p);
  CHECK(l23[0].pass);
  CHECK(l23[0].corpus_size == 200);

  p.a = 2;
  p.b = 2;
  const auto dense = enumerate_dense_candidates(10, 8);
  const auto l3 = run_property_suites(dense, "dense", {"lemma31", "lemma33"}, p);
  CHECK(l3[0].pass);
  CHECK(l3[0].extremal_value != "0");
  CHECK(l3[1].pass);

  CHECK_THROWS_AS(run_property_suites(upto5, "", {"lemma99"}, p), InvalidParameter);
  CHECK_THROWS_AS(run_property_suites(upto5, "", {}, p), InvalidParameter);
  CHECK_THROWS_AS(run_property_suites(upto5, "", {"lemma32"}, p), InvalidParameter);
}

}
