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

// Constructive bifurcation. Each strong property is equivalent to the
// surjectivity at zero of a perturbation map
//
//   SSP                F(B, K)    = e^{-K} (A + B) e^{K}
//   SMP                F(B, K, c) = e^{-K} p(A + B) e^{K},  p(x) = x + sum c_k x^k
//   SAP                F(B, L)    = (I + L)^T (A + B) (I + L)
//   nSSP (similarity)  F(B, L)    = (I + L)^{-1} (A + B) (I + L)
//   nSSP (superpattern) F(B, L)   = (I + L)^{-1} A (I + L) + B
//
// with B in the pattern subspace, K skew and L arbitrary (||L||_F < 1/2).
// A Gauss-Newton iteration with minimum-norm steps inverts the map near
// zero, so every nearby target in the image is realized constructively.
// Longer moves are split into waypoints; after each accepted
// waypoint the realized matrix becomes the new base.

#ifndef STRONGPROPS_BIFURCATE_HPP
#define STRONGPROPS_BIFURCATE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strongprops/verify.hpp"

namespace strongprops {

enum class MapKind { SSP, SMP, SAP, NSSPSimilarity, NSSPSuperpattern };

std::string to_string(MapKind kind);

class PerturbationMap {
 public:
  static PerturbationMap ssp(const Matrix& A, const Graph& G);
  static PerturbationMap smp(const Matrix& A, const Graph& G, int q);
  static PerturbationMap sap(const Matrix& A, const Graph& G);
  static PerturbationMap nssp_similarity(const Matrix& A, const SignPattern& P);
  static PerturbationMap nssp_superpattern(const Matrix& A, const SignPattern& P);

  MapKind kind() const { return kind_; }
  const Matrix& base() const { return base_; }
  Index order() const { return base_.rows(); }
  bool symmetric() const;

  // Parameter layout: [B coordinates | K or L coordinates | c].
  Index b_dim() const { return b_basis_.dimension(); }
  Index group_dim() const { return group_basis_.dimension(); }
  Index coeff_dim() const { return q_; }
  Index param_dim() const { return b_dim() + group_dim() + coeff_dim(); }
  // n(n+1)/2 for the symmetric maps, n^2 otherwise.
  Index ambient_dim() const;

  Matrix b_part(const Vector& params) const;
  Matrix group_part(const Vector& params) const;
  Vector coeff_part(const Vector& params) const;

  // Orthonormal coordinates of X in the codomain.
  Vector coordinates(const Matrix& X) const;

  const PatternBasis& b_basis() const { return b_basis_; }
  const PatternBasis& group_basis() const { return group_basis_; }
  const std::variant<Graph, SignPattern>& pattern() const { return pattern_; }

 private:
  PerturbationMap(MapKind kind, Matrix A, PatternBasis b, PatternBasis group, int q,
                  std::variant<Graph, SignPattern> pattern);

  MapKind kind_;
  Matrix base_;
  PatternBasis b_basis_;
  PatternBasis group_basis_;
  int q_ = 0;
  std::variant<Graph, SignPattern> pattern_;
};

Matrix evaluate_map(const PerturbationMap& F, const Vector& params);

// Jacobian in codomain coordinates, ambient_dim x param_dim. At params = 0
// the columns are the tangent directions themselves (basis matrices,
// K^T A + A K, A^k, L^T A + A L, A L - L A); elsewhere they come from the
// exact first-order expansion of each factor.
Matrix derivative_at(const PerturbationMap& F, const Vector& params);

// Numerical rank of the derivative at zero equals ambient_dim.
bool surjective_at_zero(const PerturbationMap& F, const Tolerances& tol = {});

struct TraceEntry {
  Index waypoint = 0;
  Index iteration = 0;
  double residual = 0.0;
  // Fraction of the full homotopy (or split size) attempted at this waypoint.
  double step = 0.0;
};

struct RealizationResult {
  Matrix a_prime;
  std::string target_kind;
  std::vector<double> target;
  std::vector<double> achieved;
  Matrix last_target;  // matrix M handed to the final solve
  Index iterations = 0;
  Index waypoints = 0;
  Index halvings = 0;
  std::vector<TraceEntry> trace;
  double final_residual = 0.0;
  bool pattern_check = false;
  // Smallest |a'_ij| over the required support, to flag marginal entries.
  double smallest_support_entry = 0.0;
  StrongPropertyReport property_recheck;
};

// Trust radius used around base A: trust_factor * (1 + ||A||_F).
double trust_radius(const Matrix& A, const Tolerances& tol);

// Single Gauss-Newton solve F(params) = M from params = 0. Throws
// SurjectivityFailure, NoConvergence (also when ||M - A||_F exceeds the
// trust radius), PatternViolation or PropertyLost.
RealizationResult solve_to_target(const PerturbationMap& F, const Matrix& M, const Tolerances& tol = {},
                                  std::optional<double> trust = std::nullopt);

struct RealizeOptions {
  // Fixed number of homotopy waypoints; 0 picks the smallest count whose
  // steps fit the trust radius.
  Index waypoints = 0;
};

RealizationResult realize_spectrum(const Matrix& A, const Graph& G, const Vector& target,
                                   const Tolerances& tol = {}, const RealizeOptions& opts = {});
RealizationResult realize_multiplicity_list(const Matrix& A, const Graph& G,
                                            const OrderedMultiplicityList& target,
                                            const Tolerances& tol = {});
RealizationResult realize_inertia(const Matrix& A, const Graph& G, const PartialInertia& target,
                                  const Tolerances& tol = {});
RealizationResult realize_rank(const Matrix& A, const Graph& G, Index target_rank,
                               const Tolerances& tol = {});
RealizationResult realize_q(const Matrix& A, const Graph& G, int target_q, const Tolerances& tol = {});
RealizationResult realize_similar(const Matrix& A, const SignPattern& P, const Matrix& M,
                                  const Tolerances& tol = {}, const RealizeOptions& opts = {});
// s <= 0 picks the step automatically from the trust radius.
RealizationResult realize_superpattern(const Matrix& A, const SignPattern& P,
                                       const SignPattern& P_super, double s = 0.0,
                                       const Tolerances& tol = {});

}  // namespace strongprops

#endif  // STRONGPROPS_BIFURCATE_HPP
