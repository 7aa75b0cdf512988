#include <cmath>
#include <map>
#include <sstream>

#include "abcover/covered.hpp"
#include "abcover/factor.hpp"
#include "abcover/graph6.hpp"
#include "abcover/harness.hpp"

namespace abcover {

namespace {

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i];
  }
  return out;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.emplace_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(value, &used);
    if (used == value.size()) return x;
  } catch (const std::exception&) {
  }
  throw ParseError("field " + key + " is not an integer: '" + value + "'", 0);
}

VertexSet parse_set(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ParseError("malformed vertex set '" + std::string(text) + "'", 0);
  }
  VertexSet s;
  for (const auto& item : split_list(text.substr(1, text.size() - 2))) {
    const int v = to_int("vertex", item);
    if (v < 0) throw ParseError("negative vertex in '" + std::string(text) + "'", 0);
    s.insert(v);
  }
  return s;
}

}  // namespace

std::string format_report(const VerificationReport& r, bool with_elapsed) {
  std::ostringstream out;
  out << "record=verification\n";
  out << "theorem=" << r.theorem << '\n';
  out << "n=" << r.n << '\n';
  out << "a=" << r.a << '\n';
  out << "b=" << r.b << '\n';
  out << "scope=" << one_line(r.scope) << '\n';
  out << "corpus_size=" << r.corpus_size << '\n';
  out << "extremal_value=" << r.extremal_value << '\n';
  out << "extremal_set=" << join_list(r.extremal_set) << '\n';
  out << "expected_set=" << join_list(r.expected_set) << '\n';
  out << "counterexample_count=" << r.counterexamples.size() << '\n';
  for (const auto& c : r.counterexamples) {
    out << "counterexample=" << c.graph6 << ' ' << one_line(c.witness) << '\n';
  }
  for (const auto& note : r.notes) out << "note=" << one_line(note) << '\n';
  out << "status=" << (r.pass ? "pass" : "fail") << '\n';
  if (with_elapsed) out << "elapsed_ms=" << std::llround(r.elapsed_seconds * 1000.0) << '\n';
  out << "end\n";
  return out.str();
}

std::string format_reports(const std::vector<VerificationReport>& reports, bool with_elapsed) {
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += '\n';
    out += format_report(reports[i], with_elapsed);
  }
  return out;
}

std::vector<VerificationReport> parse_reports(std::string_view text) {
  std::vector<VerificationReport> out;
  std::optional<VerificationReport> cur;
  long declared = -1;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + what, 0, line_no);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "end") {
      if (!cur) throw fail("'end' without a record");
      if (declared >= 0 && static_cast<std::size_t>(declared) != cur->counterexamples.size()) {
        throw fail("counterexample_count does not match the listed counterexamples");
      }
      out.push_back(std::move(*cur));
      cur.reset();
      declared = -1;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw fail("expected key=value");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "record") {
      if (cur) throw fail("record started before the previous one ended");
      cur.emplace();
      continue;
    }
    if (!cur) throw fail("field outside a record");
    auto& r = *cur;
    if (key == "theorem") r.theorem = value;
    else if (key == "n") r.n = to_int(key, value);
    else if (key == "a") r.a = to_int(key, value);
    else if (key == "b") r.b = to_int(key, value);
    else if (key == "scope") r.scope = value;
    else if (key == "corpus_size") r.corpus_size = static_cast<std::size_t>(to_int(key, value));
    else if (key == "extremal_value") r.extremal_value = value;
    else if (key == "extremal_set") r.extremal_set = split_list(value);
    else if (key == "expected_set") r.expected_set = split_list(value);
    else if (key == "counterexample_count") declared = to_int(key, value);
    else if (key == "counterexample") {
      const auto space = value.find(' ');
      r.counterexamples.push_back({value.substr(0, space),
                                   space == std::string::npos ? "" : value.substr(space + 1)});
    } else if (key == "note") r.notes.push_back(value);
    else if (key == "status") {
      if (value != "pass" && value != "fail") throw fail("status must be pass or fail");
      r.pass = value == "pass";
    } else if (key == "elapsed_ms") r.elapsed_seconds = to_int(key, value) / 1000.0;
    else throw fail("unknown field '" + key + "'");
  }
  if (cur) throw fail("unterminated record");
  return out;
}

std::string summarize(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.pass ? "[PASS] " : "[FAIL] ") << r.theorem << " n=" << r.n << " a=" << r.a
      << " b=" << r.b << " (" << r.scope << "): corpus=" << r.corpus_size
      << " extremal_value=" << r.extremal_value << " extremal=" << r.extremal_set.size()
      << " counterexamples=" << r.counterexamples.size();
  return out.str();
}

bool replay_witness(const Counterexample& c, int a, int b) {
  const Graph g = parse_graph6(c.graph6);
  std::istringstream words(c.witness);
  std::string kind;
  words >> kind;
  std::map<std::string, std::string> fields;
  for (std::string w; words >> w;) {
    const auto eq = w.find('=');
    if (eq != std::string::npos) fields[w.substr(0, eq)] = w.substr(eq + 1);
  }
  auto field = [&](const std::string& key) -> const std::string& {
    const auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("witness lacks " + key + "=", 0);
    return it->second;
  };

  if (kind == "structural") {
    const VertexSet s = parse_set(field("S"));
    const VertexSet t = parse_set(field("T"));
    const long th = theta(g, s, t, a, b);
    const int eps = epsilon(g, s, t, a, b);
    if (th != to_int("theta", field("theta")) || eps != to_int("epsilon", field("epsilon"))) {
      return false;
    }
    if (th >= eps) return false;
    if (g.size() <= SearchOptions{}.max_edges) return !is_ab_covered_definitional(g, a, b).covered;
    return true;
  }
  if (kind == "deficiency") {
    const VertexSet s = parse_set(field("S"));
    const VertexSet t = parse_set(field("T"));
    const auto spec = DegreeSpec::uniform(g.order(), a, b);
    const long value = lovasz_deficiency(g, spec, s, t);
    if (value != to_int("value", field("value")) || value >= 0) return false;
    if (g.size() <= SearchOptions{}.max_edges) return !find_factor(g, spec).has_value();
    return true;
  }
  if (kind == "edge") {
    const auto& text = field("uv");
    const auto dash = text.find('-');
    if (dash == std::string::npos) throw ParseError("malformed edge '" + text + "'", 0);
    const Edge e{to_int("u", text.substr(0, dash)), to_int("v", text.substr(dash + 1))};
    if (!g.adjacent(e.u, e.v)) return false;
    return !has_factor_containing_edge(g, a, b, e);
  }
  if (kind == "expected-covered") return is_ab_covered_structural(g, a, b).covered;
  if (kind == "expected-has-factor") return has_ab_factor(g, a, b);
  throw InvalidParameter("witness kind '" + kind + "' cannot be replayed");
}

}  // namespace abcover
