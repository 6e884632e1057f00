// Copyright 2026 The strongprops Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "strongprops/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace strongprops::io {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool is_blank(const std::string& line) { return split_ws(line).empty(); }

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

long long parse_integer(const std::string& tok, std::size_t line) {
  long long v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

double parse_real(const std::string& tok, std::size_t line) {
  double v = 0;
  const char* first = tok.data();
  const auto* end = tok.data() + tok.size();
  if (first != end && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected a number, got '" + tok + "'");
  if (!std::isfinite(v)) throw ParseError(line, "non-finite entry '" + tok + "'");
  return v;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

// Reads all lines, dropping trailing blank lines.
std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(strip_cr(line));
  while (!lines.empty() && is_blank(lines.back())) lines.pop_back();
  return lines;
}

}  // namespace

Graph read_graph(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError(1, "empty graph file");
  const auto head = split_ws(lines[0]);
  if (head.size() != 2) throw ParseError(1, "expected header 'n m'");
  const long long n = parse_integer(head[0], 1);
  const long long m = parse_integer(head[1], 1);
  if (n < 0 || m < 0) throw ParseError(1, "n and m must be non-negative");
  if (lines.size() != std::size_t(m) + 1)
    throw ParseError(lines.size() < std::size_t(m) + 1 ? lines.size() + 1 : std::size_t(m) + 2,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));
  Graph G(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto tok = split_ws(lines[k]);
    if (tok.size() != 2) throw ParseError(k + 1, "expected edge 'i j'");
    const long long i = parse_integer(tok[0], k + 1);
    const long long j = parse_integer(tok[1], k + 1);
    if (i < 0 || j < 0 || i >= n || j >= n) throw ParseError(k + 1, "vertex out of range");
    if (i == j) throw ParseError(k + 1, "loops are not allowed");
    if (G.has_edge(i, j)) throw ParseError(k + 1, "duplicate edge");
    G.add_edge(i, j);
  }
  return G;
}

SignPattern read_sign_pattern(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError(1, "empty sign pattern file");
  std::vector<std::string> rows;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto tok = split_ws(lines[k]);
    if (tok.size() != 1) throw ParseError(k + 1, "expected one word of '+', '-', '0' characters");
    rows.push_back(tok[0]);
  }
  const std::size_t n = rows.size();
  SignPattern P(static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ParseError(i + 1, "expected " + std::to_string(n) + " cells, found " +
                                  std::to_string(rows[i].size()));
    for (std::size_t j = 0; j < n; ++j) {
      switch (rows[i][j]) {
        case '+': P(Index(i), Index(j)) = Sign::Plus; break;
        case '-': P(Index(i), Index(j)) = Sign::Minus; break;
        case '0': P(Index(i), Index(j)) = Sign::Zero; break;
        default:
          throw ParseError(i + 1, std::string("invalid sign character '") + rows[i][j] + "'");
      }
    }
  }
  return P;
}

Matrix read_matrix(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError(1, "empty matrix file");
  const std::size_t n = split_ws(lines[0]).size();
  if (lines.size() != n)
    throw ParseError(std::min(lines.size(), n) + 1,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size()));
  Matrix A(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto tok = split_ws(lines[i]);
    if (tok.size() != n)
      throw ParseError(i + 1, "expected " + std::to_string(n) + " entries, found " +
                                  std::to_string(tok.size()));
    for (std::size_t j = 0; j < n; ++j) A(Index(i), Index(j)) = parse_real(tok[j], i + 1);
  }
  return A;
}

Graph read_graph(const std::filesystem::path& path) {
  auto in = open(path);
  return read_graph(in);
}

SignPattern read_sign_pattern(const std::filesystem::path& path) {
  auto in = open(path);
  return read_sign_pattern(in);
}

Matrix read_matrix(const std::filesystem::path& path) {
  auto in = open(path);
  return read_matrix(in);
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, ptr);
}

char sign_char(Sign s) {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    default: return '0';
  }
}

void write_graph(std::ostream& out, const Graph& G) {
  out << G.order() << ' ' << G.size() << '\n';
  for (const auto& [i, j] : G.edges()) out << i << ' ' << j << '\n';
}

void write_sign_pattern(std::ostream& out, const SignPattern& P) {
  for (Index i = 0; i < P.order(); ++i) {
    for (Index j = 0; j < P.order(); ++j) out << sign_char(P(i, j));
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const Matrix& A) {
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < A.cols(); ++j) out << (j ? " " : "") << format_double(A(i, j));
    out << '\n';
  }
}

void write_matrix(const std::filesystem::path& path, const Matrix& A) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  write_matrix(out, A);
}

}  // namespace strongprops::io
