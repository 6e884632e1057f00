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

#include "strongprops/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace strongprops {

namespace {

void require_vertex(Index n, Index v) {
  if (v < 0 || v >= n)
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(n));
}

void require_order(const Matrix& A, Index n, const char* what) {
  require_square(A, what);
  if (A.rows() != n)
    throw InputError(std::string(what) + ": matrix order " + std::to_string(A.rows()) +
                     " does not match pattern order " + std::to_string(n));
}

Matrix unit(Index n, Index i, Index j) {
  Matrix E = Matrix::Zero(n, n);
  E(i, j) = 1.0;
  return E;
}

Matrix sym_unit(Index n, Index i, Index j) {
  Matrix E = Matrix::Zero(n, n);
  E(i, j) = E(j, i) = M_SQRT1_2;
  return E;
}

Matrix skew_unit(Index n, Index i, Index j) {
  Matrix E = Matrix::Zero(n, n);
  E(i, j) = M_SQRT1_2;
  E(j, i) = -M_SQRT1_2;
  return E;
}

}  // namespace

// --- Graph ----------------------------------------------------------------

Graph::Graph(Index n) : n_(n) {
  if (n < 0) throw InputError("graph order must be non-negative");
}

Graph::Graph(Index n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [i, j] : edges) {
    if (has_edge(i, j))
      throw InputError("duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    add_edge(i, j);
  }
}

Graph Graph::path(Index n) {
  Graph g(n);
  for (Index i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(Index n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph Graph::complete(Index n) {
  Graph g(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::empty(Index n) { return Graph(n); }

void Graph::add_edge(Index i, Index j) {
  require_vertex(n_, i);
  require_vertex(n_, j);
  if (i == j) throw InputError("loop at vertex " + std::to_string(i));
  edges_.insert({std::min(i, j), std::max(i, j)});
}

bool Graph::has_edge(Index i, Index j) const {
  return edges_.count({std::min(i, j), std::max(i, j)}) > 0;
}

std::vector<Graph::Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (Index i = 0; i < n_; ++i)
    for (Index j = i + 1; j < n_; ++j)
      if (!has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

Graph Graph::relabeled(const std::vector<Index>& perm) const {
  if (Index(perm.size()) != n_) throw InputError("permutation length does not match graph order");
  Graph g(n_);
  for (const auto& [i, j] : edges_) g.add_edge(perm[std::size_t(i)], perm[std::size_t(j)]);
  return g;
}

// --- SignPattern ----------------------------------------------------------

SignPattern::SignPattern(Index n) : n_(n), cells_(std::size_t(n * n), Sign::Zero) {
  if (n < 0) throw InputError("pattern order must be non-negative");
}

SignPattern SignPattern::of(const Matrix& A, const Tolerances& tol) {
  require_square(A, "sign pattern");
  require_finite(A, "sign pattern");
  const double thr = zero_threshold(A, tol);
  SignPattern P(A.rows());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j) {
      const double a = A(i, j);
      P(i, j) = std::abs(a) <= thr ? Sign::Zero : (a > 0 ? Sign::Plus : Sign::Minus);
    }
  return P;
}

SignPattern SignPattern::full(Index n, Sign s) {
  SignPattern P(n);
  std::fill(P.cells_.begin(), P.cells_.end(), s);
  return P;
}

Index SignPattern::nonzero_count() const {
  return Index(std::count_if(cells_.begin(), cells_.end(), [](Sign s) { return s != Sign::Zero; }));
}

// --- membership -----------------------------------------------------------

double zero_threshold(const Matrix& A, const Tolerances& tol) {
  const double n = double(std::max<Index>(1, A.rows()));
  return tol.zero_tol * A.norm() / n;
}

double eigen_zero_threshold(const Matrix& A, const Tolerances& tol) {
  return tol.eig_zero_tol * std::max(1.0, A.norm());
}

bool matrix_in_graph_class(const Matrix& A, const Graph& G, const Tolerances& tol) {
  require_order(A, G.order(), "matrix_in_graph_class");
  const Matrix S = symmetrized(A);
  const double thr = zero_threshold(S, tol);
  for (Index i = 0; i < S.rows(); ++i)
    for (Index j = i + 1; j < S.cols(); ++j)
      if ((std::abs(S(i, j)) > thr) != G.has_edge(i, j)) return false;
  return true;
}

bool matrix_in_sign_class(const Matrix& A, const SignPattern& P, const Tolerances& tol) {
  require_order(A, P.order(), "matrix_in_sign_class");
  require_finite(A, "matrix_in_sign_class");
  const double thr = zero_threshold(A, tol);
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j) {
      const double a = A(i, j);
      const Sign s = std::abs(a) <= thr ? Sign::Zero : (a > 0 ? Sign::Plus : Sign::Minus);
      if (s != P(i, j)) return false;
    }
  return true;
}

bool is_superpattern(const SignPattern& P2, const SignPattern& P1) {
  if (P1.order() != P2.order()) throw InputError("is_superpattern: pattern orders differ");
  for (Index i = 0; i < P1.order(); ++i)
    for (Index j = 0; j < P1.order(); ++j)
      if (P1(i, j) != Sign::Zero && P2(i, j) != P1(i, j)) return false;
  return true;
}

// --- subspaces ------------------------------------------------------------

Matrix PatternBasis::columns() const {
  Matrix C(n * n, dimension());
  for (Index k = 0; k < dimension(); ++k) C.col(k) = vec(basis[std::size_t(k)]);
  return C;
}

Matrix PatternBasis::combine(const Vector& coeffs) const {
  if (coeffs.size() != dimension()) throw InputError("PatternBasis::combine: wrong coefficient count");
  Matrix X = Matrix::Zero(n, n);
  for (Index k = 0; k < dimension(); ++k) X += coeffs(k) * basis[std::size_t(k)];
  return X;
}

namespace {

struct BasisBuilder {
  PatternBasis operator()(const subspace::GraphClosure& s) const {
    const Index n = s.graph.order();
    PatternBasis b{n, n * (n + 1) / 2, {}};
    for (Index i = 0; i < n; ++i) b.basis.push_back(unit(n, i, i));
    for (const auto& [i, j] : s.graph.edges()) b.basis.push_back(sym_unit(n, i, j));
    return b;
  }
  PatternBasis operator()(const subspace::GraphComplement& s) const {
    const Index n = s.graph.order();
    PatternBasis b{n, n * (n + 1) / 2, {}};
    for (const auto& [i, j] : s.graph.non_edges()) b.basis.push_back(sym_unit(n, i, j));
    return b;
  }
  PatternBasis operator()(const subspace::SignTangent& s) const {
    const Index n = s.pattern.order();
    PatternBasis b{n, n * n, {}};
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i)
        if (s.pattern(i, j) != Sign::Zero) b.basis.push_back(unit(n, i, j));
    return b;
  }
  PatternBasis operator()(const subspace::SignComplement& s) const {
    const Index n = s.pattern.order();
    PatternBasis b{n, n * n, {}};
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i)
        if (s.pattern(i, j) == Sign::Zero) b.basis.push_back(unit(n, i, j));
    return b;
  }
  PatternBasis operator()(const subspace::Symmetric& s) const {
    const Index n = s.n;
    PatternBasis b{n, n * (n + 1) / 2, {}};
    for (Index i = 0; i < n; ++i) b.basis.push_back(unit(n, i, i));
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) b.basis.push_back(sym_unit(n, i, j));
    return b;
  }
  PatternBasis operator()(const subspace::Skew& s) const {
    const Index n = s.n;
    PatternBasis b{n, n * (n - 1) / 2, {}};
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) b.basis.push_back(skew_unit(n, i, j));
    return b;
  }
  PatternBasis operator()(const subspace::Full& s) const {
    const Index n = s.n;
    PatternBasis b{n, n * n, {}};
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) b.basis.push_back(unit(n, i, j));
    return b;
  }
  PatternBasis operator()(const subspace::HollowSymmetric& s) const {
    const Index n = s.n;
    PatternBasis b{n, n * (n + 1) / 2, {}};
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) b.basis.push_back(sym_unit(n, i, j));
    return b;
  }
};

}  // namespace

PatternBasis subspace_basis(const SubspaceKind& kind) { return std::visit(BasisBuilder{}, kind); }

Vector symmetric_coordinates(const Matrix& X) {
  const Index n = X.rows();
  Vector v(n * (n + 1) / 2);
  Index k = 0;
  for (Index i = 0; i < n; ++i) v(k++) = X(i, i);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) v(k++) = M_SQRT1_2 * (X(i, j) + X(j, i));
  return v;
}

Matrix from_symmetric_coordinates(const Vector& v, Index n) {
  if (v.size() != n * (n + 1) / 2) throw InputError("symmetric coordinate vector has wrong length");
  Matrix X(n, n);
  Index k = 0;
  for (Index i = 0; i < n; ++i) X(i, i) = v(k++);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) X(i, j) = X(j, i) = M_SQRT1_2 * v(k++);
  return X;
}

// --- multiplicity lists ---------------------------------------------------

int OrderedMultiplicityList::total() const {
  int s = 0;
  for (int x : m) s += x;
  return s;
}

std::string to_string(const OrderedMultiplicityList& list) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < list.m.size(); ++i) os << (i ? "," : "") << list.m[i];
  os << ')';
  return os.str();
}

std::vector<std::pair<Index, Index>> eigenvalue_clusters(const Vector& ev, const Tolerances& tol) {
  std::vector<std::pair<Index, Index>> out;
  const Index n = ev.size();
  if (n == 0) return out;
  const double spread = ev(n - 1) - ev(0);
  const double gap = tol.cluster_tol * std::max(1.0, spread);
  Index first = 0;
  for (Index i = 1; i < n; ++i) {
    if (ev(i) - ev(i - 1) > gap) {
      out.emplace_back(first, i);
      first = i;
    }
  }
  out.emplace_back(first, n);
  return out;
}

OrderedMultiplicityList ordered_multiplicity_list(const Vector& ev, const Tolerances& tol) {
  OrderedMultiplicityList list;
  for (const auto& [a, b] : eigenvalue_clusters(ev, tol)) list.m.push_back(int(b - a));
  return list;
}

bool is_refinement(const OrderedMultiplicityList& fine, const OrderedMultiplicityList& coarse) {
  if (fine.total() != coarse.total()) return false;
  std::size_t k = 0;
  for (int target : coarse.m) {
    int sum = 0;
    while (sum < target && k < fine.m.size()) sum += fine.m[k++];
    if (sum != target) return false;
  }
  return k == fine.m.size();
}

std::vector<OrderedMultiplicityList> refinements(const OrderedMultiplicityList& m) {
  // Compositions of each block, combined left to right.
  std::vector<std::vector<int>> out{{}};
  for (int block : m.m) {
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    auto compose = [&](auto&& self, int left) -> void {
      if (left == 0) {
        parts.push_back(current);
        return;
      }
      for (int first = 1; first <= left; ++first) {
        current.push_back(first);
        self(self, left - first);
        current.pop_back();
      }
    };
    compose(compose, block);
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out)
      for (const auto& part : parts) {
        auto joined = prefix;
        joined.insert(joined.end(), part.begin(), part.end());
        next.push_back(std::move(joined));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  std::vector<OrderedMultiplicityList> lists;
  for (auto& v : out) lists.push_back(OrderedMultiplicityList{std::move(v)});
  return lists;
}

bool cycle_spectrum_admissible(const Vector& ev, const Tolerances& tol) {
  const Index n = ev.size();
  if (n < 3) throw InputError("cycle spectrum needs at least 3 values");
  for (Index i = 1; i < n; ++i)
    if (ev(i) < ev(i - 1)) throw InputError("cycle spectrum must be sorted ascending");
  const double spread = ev(n - 1) - ev(0);
  const double gap = tol.cluster_tol * std::max(1.0, spread);
  bool tie_odd = false, tie_even = false;
  // Tie between l_i and l_{i+1} in 1-based numbering; i = k + 1.
  for (Index k = 0; k + 1 < n; ++k) {
    if (ev(k + 1) - ev(k) <= gap) {
      if ((k + 1) % 2 == 1)
        tie_odd = true;
      else
        tie_even = true;
    }
  }
  return !(tie_odd && tie_even);
}

// --- inertia --------------------------------------------------------------

Inertia inertia_of(const ComplexVector& ev, double zero) {
  Inertia in;
  for (Index i = 0; i < ev.size(); ++i) {
    const double re = ev(i).real();
    if (re > zero)
      ++in.positive;
    else if (re < -zero)
      ++in.negative;
    else
      ++in.zero;
  }
  return in;
}

RefinedInertia rin_of(const ComplexVector& ev, double zero) {
  RefinedInertia r;
  for (Index i = 0; i < ev.size(); ++i) {
    const double re = ev(i).real();
    if (re > zero)
      ++r.positive;
    else if (re < -zero)
      ++r.negative;
    else if (std::abs(ev(i).imag()) <= zero)
      ++r.zero;
    else
      ++r.imaginary;
  }
  return r;
}

PartialInertia pin(const Matrix& A, const Tolerances& tol) {
  const Vector ev = sym_eig(A).eigenvalues;
  const double zero = eigen_zero_threshold(A, tol);
  PartialInertia p;
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > zero) ++p.positive;
    if (ev(i) < -zero) ++p.negative;
  }
  return p;
}

Inertia inertia(const Matrix& A, const Tolerances& tol) {
  return inertia_of(eigenvalues(A), eigen_zero_threshold(A, tol));
}

RefinedInertia rin(const Matrix& A, const Tolerances& tol) {
  return rin_of(eigenvalues(A), eigen_zero_threshold(A, tol));
}

}  // namespace strongprops
