#include "qconv/lab/formats.hpp"

#include <charconv>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <vector>

#include "qconv/error.hpp"

namespace qconv::lab {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

long long to_integer(const std::string& token, const std::string& source, int line, const char* what) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(source, line, std::string("expected an integer ") + what + ", got '" + token + "'");
  }
  return value;
}

Rational to_rational(const std::string& token, const std::string& source, int line) {
  try {
    return Rational::parse(token);
  } catch (const Error& e) {
    throw ParseError(source, line, "bad rational '" + token + "': " + e.what());
  }
}

void expect_tokens(const Line& l, std::size_t count, const std::string& source, const char* what) {
  if (l.tokens.size() != count) {
    throw ParseError(source, l.number,
                     "expected " + std::to_string(count) + " fields (" + what + "), got " +
                         std::to_string(l.tokens.size()));
  }
}

// Number of the last line, not counting the empty remainder after a final newline.
int last_line(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  int n = 1;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text, const std::string& source) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(source, 1, "missing header line 'n m'");
  expect_tokens(lines[0], 2, source, "n m");
  const long long n = to_integer(lines[0].tokens[0], source, lines[0].number, "node count");
  const long long m = to_integer(lines[0].tokens[1], source, lines[0].number, "edge count");
  if (n < 0 || n > SimpleGraph::kMaxNodes) {
    throw ParseError(source, lines[0].number, "node count must lie in [0, 64]");
  }
  if (m < 0 || m > n * (n - 1) / 2) {
    throw ParseError(source, lines[0].number, "edge count " + std::to_string(m) + " impossible for a simple graph on " +
                                                  std::to_string(n) + " nodes");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const int where = static_cast<long long>(lines.size()) - 1 < m ? last_line(text)
                                                                   : lines[static_cast<std::size_t>(m + 1)].number;
    throw ParseError(source, where, "header announces " + std::to_string(m) + " edges, file has " +
                                        std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_tokens(l, 2, source, "u v");
    long long u = to_integer(l.tokens[0], source, l.number, "node");
    long long v = to_integer(l.tokens[1], source, l.number, "node");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(source, l.number, "node out of range [0, n)");
    if (u == v) throw ParseError(source, l.number, "loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({static_cast<int>(u), static_cast<int>(v)}).second) {
      throw ParseError(source, l.number, "repeated edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return SimpleGraph(static_cast<int>(n), std::move(edges));
}

std::string format_edge_list(const SimpleGraph& g) {
  std::string out = std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

StepGraphon parse_step_graphon(std::string_view text, const std::string& source) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(source, 1, "missing step count");
  expect_tokens(lines[0], 1, source, "r");
  const long long r = to_integer(lines[0].tokens[0], source, lines[0].number, "step count");
  if (r < 1 || r > 64) throw ParseError(source, lines[0].number, "step count must lie in [1, 64]");

  std::vector<Rational> breaks;
  std::size_t li = 1;
  while (static_cast<long long>(breaks.size()) < r) {
    if (li >= lines.size()) throw ParseError(source, last_line(text), "missing breakpoints");
    for (const auto& t : lines[li].tokens) {
      if (static_cast<long long>(breaks.size()) == r) {
        throw ParseError(source, lines[li].number, "too many breakpoints");
      }
      breaks.push_back(to_rational(t, source, lines[li].number));
    }
    ++li;
  }
  const int break_line = lines[li - 1].number;
  std::vector<std::vector<Rational>> values;
  for (long long row = 0; row < r; ++row, ++li) {
    if (li >= lines.size()) throw ParseError(source, last_line(text), "missing value rows");
    expect_tokens(lines[li], static_cast<std::size_t>(r), source, "one value per step");
    std::vector<Rational> vals;
    for (const auto& t : lines[li].tokens) vals.push_back(to_rational(t, source, lines[li].number));
    values.push_back(std::move(vals));
  }
  if (li != lines.size()) throw ParseError(source, lines[li].number, "trailing content after the value rows");
  try {
    return StepGraphon(std::move(breaks), std::move(values));
  } catch (const InvalidArgumentError& e) {
    throw ParseError(source, break_line, e.what());
  }
}

std::shared_ptr<LinearMatroid> parse_gf_matrix(std::string_view text, const std::string& source) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(source, 1, "missing header line 'q n c'");
  expect_tokens(lines[0], 3, source, "q n c");
  const long long q = to_integer(lines[0].tokens[0], source, lines[0].number, "field order");
  const long long n = to_integer(lines[0].tokens[1], source, lines[0].number, "dimension");
  const long long c = to_integer(lines[0].tokens[2], source, lines[0].number, "column count");
  if (q < 2 || q > 256) throw ParseError(source, lines[0].number, "field order must lie in [2, 256]");
  if (n < 0 || n > 64) throw ParseError(source, lines[0].number, "dimension must lie in [0, 64]");
  if (c < 0 || c > 64) throw ParseError(source, lines[0].number, "column count must lie in [0, 64]");
  if (static_cast<long long>(lines.size()) - 1 != n) {
    throw ParseError(source, static_cast<long long>(lines.size()) - 1 < n ? last_line(text) : lines[static_cast<std::size_t>(n + 1)].number,
                     "header announces " + std::to_string(n) + " rows, file has " + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<int>> columns(static_cast<std::size_t>(c), std::vector<int>(static_cast<std::size_t>(n)));
  for (long long row = 0; row < n; ++row) {
    const Line& l = lines[static_cast<std::size_t>(row + 1)];
    expect_tokens(l, static_cast<std::size_t>(c), source, "one entry per column");
    for (long long col = 0; col < c; ++col) {
      const long long v = to_integer(l.tokens[static_cast<std::size_t>(col)], source, l.number, "field element");
      if (v < 0 || v >= q) throw ParseError(source, l.number, "entry " + std::to_string(v) + " outside GF(" + std::to_string(q) + ")");
      columns[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)] = static_cast<int>(v);
    }
  }
  try {
    return std::make_shared<LinearMatroid>(static_cast<int>(q), static_cast<int>(n), std::move(columns));
  } catch (const InvalidArgumentError& e) {
    throw ParseError(source, lines[0].number, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SimpleGraph read_edge_list(const std::string& path) { return parse_edge_list(read_file(path), path); }
StepGraphon read_step_graphon(const std::string& path) { return parse_step_graphon(read_file(path), path); }
std::shared_ptr<LinearMatroid> read_gf_matrix(const std::string& path) {
  return parse_gf_matrix(read_file(path), path);
}

SimpleGraph named_graph(std::string_view name) {
  static const std::regex pattern(R"(([KCPE])(\d+)(?:,(\d+))?)");
  std::cmatch m;
  if (!std::regex_match(name.begin(), name.end(), m, pattern)) {
    throw InvalidArgumentError("unknown graph name '" + std::string(name) + "' (expected Kn, Cn, Pn, En or Ka,b)");
  }
  const int a = std::stoi(m[2].str());
  if (m[3].matched) {
    if (m[1].str() != "K") throw InvalidArgumentError("only K takes two sizes, as in K3,2");
    return SimpleGraph::complete_bipartite(a, std::stoi(m[3].str()));
  }
  switch (m[1].str()[0]) {
    case 'K': return SimpleGraph::complete(a);
    case 'C': return SimpleGraph::cycle(a);
    case 'P': return SimpleGraph::path(a);
    default: return SimpleGraph::empty(a);
  }
}

SimpleGraph graph_argument(const std::string& text) {
  static const std::regex pattern(R"([KCPE]\d+(,\d+)?)");
  if (std::regex_match(text, pattern)) return named_graph(text);
  return read_edge_list(text);
}

}  // namespace qconv::lab
