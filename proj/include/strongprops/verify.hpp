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

// Verifiers for the strong spectral, multiplicity and Arnold properties of a
// symmetric matrix relative to a graph, and the non-symmetric strong spectral
// property of a square matrix relative to its own sign pattern.
//
// Every verdict is computed twice. The primal route stacks the images of a
// basis of the constrained subspace U (hollow symmetric matrices on the
// non-edges, or matrices on the zero cells) under the defining linear
// constraints and asks for a trivial nullspace. The dual route asks whether
// U^perp plus the tangent directions span the whole ambient space. The two
// must agree; a disagreement throws std::logic_error.

#ifndef STRONGPROPS_VERIFY_HPP
#define STRONGPROPS_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "strongprops/patterns.hpp"

namespace strongprops {

enum class Property { SSP, SMP, SAP, NSSP };

std::string to_string(Property p);
// Accepts "ssp", "smp", "sap", "nssp" (any case).
Property parse_property(const std::string& name);

// Verdict of the SMP check under an alternative distinct-eigenvalue count,
// reported when the clustering of the spectrum is close to the threshold.
struct QCandidate {
  int q = 0;
  bool holds = false;
  Index nullspace_dim = 0;
};

struct StrongPropertyReport {
  Property property = Property::SSP;
  bool holds = false;
  // dim of {X in U : constraints(X) = 0}
  Index nullspace_dim = 0;
  // dim U; zero means the property holds without solving anything
  Index constraint_dim = 0;
  // sigma_min / sigma_max of the primal system; empty when constraint_dim == 0
  std::optional<double> smallest_structural_singular_value;
  // Unit-norm nonzero solution when the property fails.
  std::optional<Matrix> witness;
  Index dual_span_dim = 0;
  Index ambient_dim = 0;
  bool dual_verdict = false;
  // SMP only: the q used, and alternatives when clustering is ambiguous.
  std::optional<int> q;
  std::vector<QCandidate> ambiguous_q;
};

StrongPropertyReport verify_ssp(const Matrix& A, const Graph& G, const Tolerances& tol = {});
StrongPropertyReport verify_smp(const Matrix& A, const Graph& G, const Tolerances& tol = {});
// SMP with an explicitly supplied q (no clustering).
StrongPropertyReport verify_smp(const Matrix& A, const Graph& G, int q, const Tolerances& tol = {});
StrongPropertyReport verify_sap(const Matrix& A, const Graph& G, const Tolerances& tol = {});
// nSSP relative to the support of A.
StrongPropertyReport verify_nssp(const Matrix& A, const Tolerances& tol = {});
// nSSP after checking A is in Q(P).
StrongPropertyReport verify_nssp(const Matrix& A, const SignPattern& P, const Tolerances& tol = {});

// Number of distinct eigenvalues of a symmetric matrix under cluster_tol.
int distinct_eigenvalue_count(const Matrix& A, const Tolerances& tol = {});

// Residual of a witness against the defining equations of its property,
// ||constraints(X)||_F / (||A||_F ||X||_F), plus the off-support mass of X.
double witness_residual(Property p, const Matrix& A, const Matrix& X, int q = 0);

}  // namespace strongprops

#endif  // STRONGPROPS_VERIFY_HPP
