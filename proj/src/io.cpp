#include "omt/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "omt/error.hpp"

namespace omt {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text, std::size_t first_number = 1) {
  std::vector<Line> out;
  std::size_t number = first_number;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    ++number;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

bool is_integer(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int parse_label(const std::string& token, std::size_t line) {
  if (!is_integer(token)) fail(line, "expected an integer element label, got '" + token + "'");
  try {
    return std::stoi(token);
  } catch (const std::out_of_range&) {
    fail(line, "element label out of range: " + token);
  }
}

Rational parse_rational(const std::string& token, std::size_t line) {
  const auto slash = token.find('/');
  const std::string num = token.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+')
    fail(line, "expected an integer or p/q entry, got '" + token + "'");
  Rational q(Integer(num[0] == '+' ? num.substr(1) : num), Integer(den));
  if (q.get_den() == 0) fail(line, "zero denominator in '" + token + "'");
  q.canonicalize();
  return q;
}

Digraph digraph_from(const std::vector<Line>& lines) {
  Digraph g;
  for (const auto& l : lines) {
    if (l.tokens.size() != 3) fail(l.number, "expected '<label> <tail> <head>'");
    g.arcs.push_back({parse_label(l.tokens[0], l.number), l.tokens[1], l.tokens[2]});
  }
  if (g.arcs.empty()) throw InputError("digraph has no arcs");
  return g;
}

Realization matrix_from(const std::vector<Line>& lines) {
  if (lines.empty()) throw InputError("empty matrix file");
  const auto& head = lines.front();
  if (head.tokens.size() != 2 || !is_integer(head.tokens[0]) || !is_integer(head.tokens[1]) ||
      head.tokens[0][0] == '-' || head.tokens[1][0] == '-')
    fail(head.number, "expected '<rows> <cols>'");
  const std::size_t rows = std::stoul(head.tokens[0]);
  const std::size_t cols = std::stoul(head.tokens[1]);
  if (cols > kHardElementLimit) fail(head.number, "too many columns");
  RationalMatrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t i = 1; i < lines.size(); ++i)
    for (const auto& t : lines[i].tokens) {
      if (k == rows * cols) fail(lines[i].number, "more entries than " + std::to_string(rows * cols));
      m(k / cols, k % cols) = parse_rational(t, lines[i].number);
      ++k;
    }
  if (k != rows * cols)
    throw InputError("matrix has " + std::to_string(k) + " entries, expected " + std::to_string(rows * cols));
  return Realization(GroundSet::iota(cols), std::move(m));
}

Realization realization_from(const std::vector<Line>& lines, InputFormat format) {
  if (format == InputFormat::digraph) return from_digraph(digraph_from(lines));
  if (format == InputFormat::matrix) return matrix_from(lines);
  throw InputError("expected a digraph or matrix body");
}

std::string strip_header(std::string token) {
  if (!token.empty() && token.back() == ':') token.pop_back();
  return token;
}

}  // namespace

InputFormat parse_format_name(std::string_view name) {
  if (name == "digraph") return InputFormat::digraph;
  if (name == "matrix") return InputFormat::matrix;
  if (name == "perspective") return InputFormat::perspective;
  throw InputError("unknown format '" + std::string(name) + "' (expected digraph, matrix or perspective)");
}

InputFormat infer_format(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("empty input");
  const auto& first = lines.front();
  if (first.tokens[0] == "major:" || first.tokens[0] == "pair:") return InputFormat::perspective;
  if (first.tokens.size() == 2) return InputFormat::matrix;
  if (first.tokens.size() == 3) return InputFormat::digraph;
  fail(first.number, "cannot infer the input format; pass --format");
}

Digraph parse_digraph(std::string_view text) { return digraph_from(content_lines(text)); }

Realization parse_matrix(std::string_view text) { return matrix_from(content_lines(text)); }

Realization parse_realization(std::string_view text, InputFormat format) {
  return realization_from(content_lines(text), format);
}

Perspective parse_perspective(std::string_view text, const SweepOptions& opts) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("empty perspective file");
  const auto& head = lines.front();
  const std::string kind = head.tokens[0];
  if ((kind != "major:" && kind != "pair:") || head.tokens.size() != 2)
    fail(head.number, "expected 'major: digraph|matrix' or 'pair: digraph|matrix'");
  const InputFormat body = parse_format_name(head.tokens[1]);
  if (body == InputFormat::perspective) fail(head.number, "a perspective body must be a digraph or a matrix");

  if (kind == "major:") {
    std::vector<Line> major;
    std::vector<int> contracted;
    bool seen_contract = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto& l = lines[i];
      if (strip_header(l.tokens[0]) == "contract") {
        if (seen_contract) fail(l.number, "repeated 'contract:' line");
        seen_contract = true;
        for (std::size_t j = 1; j < l.tokens.size(); ++j) {
          std::istringstream parts(l.tokens[j]);
          std::string piece;
          while (std::getline(parts, piece, ','))
            if (!piece.empty()) contracted.push_back(parse_label(piece, l.number));
        }
        continue;
      }
      if (seen_contract) fail(l.number, "unexpected line after 'contract:'");
      major.push_back(l);
    }
    if (!seen_contract) throw InputError("perspective file has no 'contract:' line");
    return from_major(realization_from(major, body), contracted, opts);
  }

  std::vector<Line> first, second;
  bool split = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() == 1 && l.tokens[0] == "---") {
      if (split) fail(l.number, "more than one '---' separator");
      split = true;
      continue;
    }
    (split ? second : first).push_back(l);
  }
  if (!split) throw InputError("pair perspective needs a '---' line between M and M'");
  Realization m = realization_from(first, body);
  Realization mprime = realization_from(second, body);
  if (!(m.ground() == mprime.ground())) throw InputError("pair perspective: M and M' have different element labels");
  return Perspective::create(OrientedMatroid(std::move(m), opts), OrientedMatroid(std::move(mprime), opts), opts);
}

std::string to_tsv(const GroundSet& ground, const ExpansionReport& report) {
  std::string out = "A\tO*\tO\tΘ*\tΘ̄*\tΘ\tΘ̄\tmonomial\n";
  for (const auto& r : report.rows) {
    for (Subset s : {r.a, r.ostar, r.o, r.theta_star, r.theta_bar_star, r.theta, r.theta_bar}) {
      out += format_subset(ground, s);
      out += '\t';
    }
    out += to_string(r.monomial);
    out += '\n';
  }
  return out;
}

namespace {

Subset parse_subset_text(const GroundSet& ground, const std::string& token, std::size_t line) {
  if (token == "-") return {};
  std::vector<int> labels;
  if (token.find(',') != std::string::npos) {
    std::istringstream parts(token);
    std::string piece;
    while (std::getline(parts, piece, ',')) labels.push_back(parse_label(piece, line));
  } else {
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(line, "bad set '" + token + "'");
      labels.push_back(c - '0');
    }
  }
  try {
    return ground.subset(labels);
  } catch (const InputError& e) {
    fail(line, e.what());
  }
}

}  // namespace

std::vector<ThetaRecord> parse_tsv(const GroundSet& ground, std::string_view text) {
  std::vector<ThetaRecord> rows;
  for (const auto& l : content_lines(text)) {
    if (l.tokens[0] == "A") continue;
    if (l.tokens.size() != 8) fail(l.number, "expected 8 columns");
    std::array<Subset, 7> s;
    for (std::size_t i = 0; i < 7; ++i) s[i] = parse_subset_text(ground, l.tokens[i], l.number);
    Polynomial m;
    try {
      m = parse_polynomial(l.tokens[7]);
    } catch (const ParseError& e) {
      fail(l.number, e.what());
    }
    if (m.size() != 1 || m.terms().begin()->second != 1) fail(l.number, "monomial column is not a monomial");
    ThetaRecord r;
    r.a = s[0];
    r.ostar = s[1];
    r.o = s[2];
    r.theta_star = s[3];
    r.theta_bar_star = s[4];
    r.theta = s[5];
    r.theta_bar = s[6];
    r.monomial = m.terms().begin()->first;
    rows.push_back(r);
  }
  return rows;
}

nlohmann::json to_json(const GroundSet& ground, const ExpansionReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"A", format_subset(ground, r.a)},
                    {"O*", format_subset(ground, r.ostar)},
                    {"O", format_subset(ground, r.o)},
                    {"theta*", format_subset(ground, r.theta_star)},
                    {"thetabar*", format_subset(ground, r.theta_bar_star)},
                    {"theta", format_subset(ground, r.theta)},
                    {"thetabar", format_subset(ground, r.theta_bar)},
                    {"monomial", to_string(r.monomial)}});
  return {{"pass", report.pass},
          {"sum", to_string(report.sum)},
          {"reference", to_string(report.reference)},
          {"rows", std::move(rows)}};
}

}  // namespace omt
