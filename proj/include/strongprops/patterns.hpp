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

// Graphs, sign patterns and the matrix subspaces they cut out, plus the
// combinatorial spectral bookkeeping (multiplicity lists, inertias, cycle
// spectra) used to state and check realization targets.

#ifndef STRONGPROPS_PATTERNS_HPP
#define STRONGPROPS_PATTERNS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strongprops/numerics.hpp"

namespace strongprops {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  using Edge = std::pair<Index, Index>;  // stored with first < second

  explicit Graph(Index n = 0);
  Graph(Index n, const std::vector<Edge>& edges);

  static Graph path(Index n);
  static Graph cycle(Index n);
  static Graph complete(Index n);
  static Graph empty(Index n);

  Index order() const { return n_; }
  Index size() const { return Index(edges_.size()); }
  const std::set<Edge>& edges() const { return edges_; }

  void add_edge(Index i, Index j);
  bool has_edge(Index i, Index j) const;
  std::vector<Edge> non_edges() const;

  // Graph on the same vertex set with vertex v renamed perm[v].
  Graph relabeled(const std::vector<Index>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Index n_;
  std::set<Edge> edges_;
};

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

class SignPattern {
 public:
  explicit SignPattern(Index n = 0);

  // Signs of the entries of A, with |a_ij| <= tol_zero counted as zero.
  static SignPattern of(const Matrix& A, const Tolerances& tol = {});
  static SignPattern full(Index n, Sign s = Sign::Plus);

  Index order() const { return n_; }
  Sign operator()(Index i, Index j) const { return cells_[std::size_t(i * n_ + j)]; }
  Sign& operator()(Index i, Index j) { return cells_[std::size_t(i * n_ + j)]; }

  Index nonzero_count() const;
  bool is_full() const { return nonzero_count() == n_ * n_; }

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  Index n_;
  std::vector<Sign> cells_;
};

// Absolute cutoff below which an entry of A counts as zero.
double zero_threshold(const Matrix& A, const Tolerances& tol);

// Absolute cutoff below which an eigenvalue (or its real part) counts as zero.
double eigen_zero_threshold(const Matrix& A, const Tolerances& tol);

bool matrix_in_graph_class(const Matrix& A, const Graph& G, const Tolerances& tol = {});
bool matrix_in_sign_class(const Matrix& A, const SignPattern& P, const Tolerances& tol = {});

// P2 agrees with P1 on every nonzero cell of P1.
bool is_superpattern(const SignPattern& P2, const SignPattern& P1);

// --- pattern subspaces ----------------------------------------------------

namespace subspace {
struct GraphClosure { Graph graph; };        // S^cl(G)
struct GraphComplement { Graph graph; };     // hollow symmetric on non-edges
struct SignTangent { SignPattern pattern; }; // Q^v(P)
struct SignComplement { SignPattern pattern; };  // supported on zero cells of P
struct Symmetric { Index n; };
struct Skew { Index n; };
struct Full { Index n; };
struct HollowSymmetric { Index n; };
}  // namespace subspace

using SubspaceKind =
    std::variant<subspace::GraphClosure, subspace::GraphComplement, subspace::SignTangent,
                 subspace::SignComplement, subspace::Symmetric, subspace::Skew, subspace::Full,
                 subspace::HollowSymmetric>;

// Orthonormal (under <A, B> = tr(B^T A)) basis of a pattern subspace.
struct PatternBasis {
  Index n = 0;
  Index ambient_dim = 0;  // n^2, n(n+1)/2 or n(n-1)/2 depending on the host space
  std::vector<Matrix> basis;

  Index dimension() const { return Index(basis.size()); }
  // n^2 x dimension matrix whose columns are vec(b_i).
  Matrix columns() const;
  // sum_i coeffs(i) * b_i
  Matrix combine(const Vector& coeffs) const;
};

PatternBasis subspace_basis(const SubspaceKind& kind);

// Coordinates of X in an orthonormal basis of the symmetric matrices
// (diagonal entries, then sqrt(2) * x_ij for i < j). Isometric.
Vector symmetric_coordinates(const Matrix& X);
Matrix from_symmetric_coordinates(const Vector& v, Index n);

// --- spectral bookkeeping -------------------------------------------------

struct OrderedMultiplicityList {
  std::vector<int> m;

  int total() const;
  Index distinct() const { return Index(m.size()); }
  friend bool operator==(const OrderedMultiplicityList&, const OrderedMultiplicityList&) = default;
};

std::string to_string(const OrderedMultiplicityList& list);

// Cluster ascending eigenvalues: neighbours closer than
// cluster_tol * max(1, spread) share a cluster.
OrderedMultiplicityList ordered_multiplicity_list(const Vector& ascending, const Tolerances& tol = {});

// Index ranges [first, last) of the clusters above.
std::vector<std::pair<Index, Index>> eigenvalue_clusters(const Vector& ascending,
                                                         const Tolerances& tol = {});

// `fine` is obtained from `coarse` by splitting entries into consecutive
// parts (equivalently, coarse is recovered by summing consecutive blocks).
bool is_refinement(const OrderedMultiplicityList& fine, const OrderedMultiplicityList& coarse);
// Every refinement of m (m itself included), in lexicographic order.
std::vector<OrderedMultiplicityList> refinements(const OrderedMultiplicityList& m);

// Spectrum of some matrix in S(C_n): ties only at odd positions
// (l1 <= l2 < l3 <= l4 ...) or only at even positions (l1 < l2 <= l3 < ...).
bool cycle_spectrum_admissible(const Vector& ascending, const Tolerances& tol = {});

struct PartialInertia {
  Index positive = 0;
  Index negative = 0;
  friend bool operator==(const PartialInertia&, const PartialInertia&) = default;
};

struct Inertia {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct RefinedInertia {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;       // exactly zero eigenvalues
  Index imaginary = 0;  // nonzero pure-imaginary eigenvalues (2 n_p)
  friend bool operator==(const RefinedInertia&, const RefinedInertia&) = default;
};

PartialInertia pin(const Matrix& A, const Tolerances& tol = {});
Inertia inertia(const Matrix& A, const Tolerances& tol = {});
RefinedInertia rin(const Matrix& A, const Tolerances& tol = {});

// Same counts for an explicit eigenvalue list at absolute threshold `zero`.
Inertia inertia_of(const ComplexVector& ev, double zero);
RefinedInertia rin_of(const ComplexVector& ev, double zero);

}  // namespace strongprops

#endif  // STRONGPROPS_PATTERNS_HPP
