#include "arcmatch/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <vector>

namespace arcmatch {
namespace {

[[noreturn]] void parse_error(std::string_view what, std::size_t offset) {
  throw Error(ErrorCode::ParseError, std::string(what) + " at position " + std::to_string(offset + 1),
              static_cast<long>(offset + 1));
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

Vertex parse_vertex(std::string_view digits, std::size_t offset) {
  if (digits.empty()) parse_error("expected a vertex number", offset);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) parse_error("unexpected character", offset + i);
  }
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) parse_error("vertex number too large", offset);
  return v;
}

std::pair<Vertex, Vertex> parse_pair(const Token& tok) {
  const auto dash = tok.text.find('-');
  if (dash == std::string_view::npos) parse_error("expected a-b", tok.offset);
  const Vertex a = parse_vertex(tok.text.substr(0, dash), tok.offset);
  const Vertex b = parse_vertex(tok.text.substr(dash + 1), tok.offset + dash + 1);
  return {a, b};
}

Matching parse_chord_word(std::string_view text) {
  const auto tokens = tokenize(text);
  std::vector<Token> labels;
  if (tokens.size() == 1) {
    for (std::size_t i = 0; i < tokens[0].text.size(); ++i) {
      labels.push_back({tokens[0].text.substr(i, 1), tokens[0].offset + i});
    }
  } else {
    labels = tokens;
  }

  std::map<std::string_view, Vertex> first_seen;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::map<std::string_view, std::size_t> offsets;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& lab = labels[i];
    for (std::size_t j = 0; j < lab.text.size(); ++j) {
      if (lab.text[j] < 'A' || lab.text[j] > 'Z') parse_error("unexpected character", lab.offset + j);
    }
    const auto v = static_cast<Vertex>(i + 1);
    if (auto it = first_seen.find(lab.text); it == first_seen.end()) {
      first_seen.emplace(lab.text, v);
      offsets[lab.text] = lab.offset;
    } else if (it->second == 0) {
      parse_error("label occurs more than twice", lab.offset);
    } else {
      pairs.emplace_back(it->second, v);
      it->second = 0;
    }
  }
  for (const auto& [label, v] : first_seen) {
    if (v != 0) parse_error("label occurs only once", offsets[label]);
  }
  return Matching::from_pairs(pairs);
}

}  // namespace

Matching parse_matching(std::string_view text) {
  if (text.find('-') != std::string_view::npos) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& tok : tokenize(text)) pairs.push_back(parse_pair(tok));
    return Matching::from_pairs(pairs);
  }
  return parse_chord_word(text);
}

Edge parse_edge(std::string_view token) {
  const auto tokens = tokenize(token);
  if (tokens.size() != 1) parse_error("expected a single a-b edge", tokens.empty() ? 0 : tokens[1].offset);
  auto [a, b] = parse_pair(tokens[0]);
  if (a < 1 || b < 1) throw Error(ErrorCode::VertexOutOfRange, "vertices are 1-based", std::min(a, b));
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string chord_label(std::size_t index) {
  std::string out;
  std::size_t x = index + 1;
  while (x > 0) {
    --x;
    out.push_back(static_cast<char>('A' + x % 26));
    x /= 26;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string format_edges(std::span<const Edge> edges) {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(e.left);
    out.push_back('-');
    out += std::to_string(e.right);
  }
  return out;
}

std::string format_matching(const Matching& m, TextForm form) {
  if (form == TextForm::EdgeList) return format_edge_list(m);
  // Edges are sorted by left endpoint, which is first-occurrence order.
  std::vector<std::string> labels(m.vertex_count());
  std::size_t next = 0;
  for (const auto& e : m.edges()) labels[e.left - 1] = labels[e.right - 1] = chord_label(next++);
  const bool spaced = m.edge_count() > 26;
  std::string out;
  for (const auto& l : labels) {
    if (spaced && !out.empty()) out.push_back(' ');
    out += l;
  }
  return out;
}

}  // namespace arcmatch
