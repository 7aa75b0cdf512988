#include "abcover/graph6.hpp"

#include "abcover/errors.hpp"

namespace abcover {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) +
                         " outside printable range 63-126 at offset " + std::to_string(pos),
                     pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);
  if (text[pos] == ':' || text[pos] == '&') {
    throw ParseError("graph6: sparse6/digraph6 input is not supported", pos);
  }

  long n = 0;
  if (text[pos] != '~') {
    n = decode_byte(text, pos++);
  } else {
    ++pos;
    if (pos < text.size() && text[pos] == '~') {
      throw ParseError("graph6: orders above 258047 are not supported", pos);
    }
    if (pos + 3 > text.size()) throw ParseError("graph6: truncated size header", text.size());
    for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(text, pos++);
  }
  if (n > Graph::kMaxOrder) {
    throw ParseError("graph6: order " + std::to_string(n) + " above supported maximum", 0);
  }

  const long bits = binomial2(n);
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != body) {
    throw ParseError("graph6: expected " + std::to_string(body) + " data bytes for order " +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos),
                     text.size() < pos + body ? text.size() : pos + body);
  }

  Graph g(static_cast<int>(n));
  long k = 0;
  int row = 0;
  int col = 1;  // current pair (row, col), row < col, advanced column by column
  for (std::size_t i = 0; i < body; ++i) {
    const int value = decode_byte(text, pos + i);
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (value >> b) & 1;
      if (k >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bit", pos + i);
        continue;
      }
      if (set) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace abcover
