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

#include "strongprops/verify.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace strongprops {

std::string to_string(Property p) {
  switch (p) {
    case Property::SSP: return "SSP";
    case Property::SMP: return "SMP";
    case Property::SAP: return "SAP";
    case Property::NSSP: return "nSSP";
  }
  return "?";
}

Property parse_property(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return char(std::tolower(c)); });
  if (s == "ssp") return Property::SSP;
  if (s == "smp") return Property::SMP;
  if (s == "sap") return Property::SAP;
  if (s == "nssp") return Property::NSSP;
  throw InputError("unknown property '" + name + "' (expected ssp, smp, sap or nssp)");
}

namespace {

using ConstraintImage = std::function<Vector(const Matrix&)>;

// The verifiers work with A / ||A||_F so that every threshold is scale free.
Matrix normalized(const Matrix& A) {
  const double s = A.norm();
  return s > 0 ? Matrix(A / s) : A;
}

Matrix matrix_power(const Matrix& A, int k) {
  Matrix P = Matrix::Identity(A.rows(), A.cols());
  for (int i = 0; i < k; ++i) P = P * A;
  return P;
}

void run_primal(StrongPropertyReport& r, const PatternBasis& U, const ConstraintImage& image,
                const Tolerances& tol) {
  r.constraint_dim = U.dimension();
  if (U.dimension() == 0) {
    r.nullspace_dim = 0;
    return;
  }
  Matrix system;
  for (Index k = 0; k < U.dimension(); ++k) {
    const Vector col = image(U.basis[std::size_t(k)]);
    if (k == 0) system.resize(col.size(), U.dimension());
    system.col(k) = col;
  }
  const Nullspace ns = nullspace(system, tol);
  r.nullspace_dim = ns.dimension;

  const Vector& sv = ns.singular_values;
  const double smax = sv.size() ? sv.maxCoeff() : 0.0;
  double smin = (sv.size() < U.dimension() || sv.size() == 0) ? 0.0 : sv.minCoeff();
  r.smallest_structural_singular_value = smax > 0 ? smin / smax : 0.0;

  if (ns.dimension > 0) {
    Matrix X = U.combine(ns.basis.col(0));
    X /= X.norm();
    r.witness = X;
  }
}

void run_dual(StrongPropertyReport& r, const std::vector<Matrix>& spanning, Index ambient,
              const Tolerances& tol) {
  r.ambient_dim = ambient;
  if (spanning.empty()) {
    r.dual_span_dim = 0;
  } else {
    const Index n = spanning.front().rows();
    Matrix C(n * n, Index(spanning.size()));
    for (std::size_t k = 0; k < spanning.size(); ++k) C.col(Index(k)) = vec(spanning[k]);
    r.dual_span_dim = numerical_rank(C, tol);
  }
  r.dual_verdict = r.dual_span_dim == ambient;
}

void finish(StrongPropertyReport& r) {
  r.holds = r.nullspace_dim == 0;
  if (r.holds != r.dual_verdict)
    throw std::logic_error(to_string(r.property) + " verifier: primal verdict (nullspace dim " +
                           std::to_string(r.nullspace_dim) + ") disagrees with dual verdict (span " +
                           std::to_string(r.dual_span_dim) + " of " + std::to_string(r.ambient_dim) +
                           ")");
}

void require_in_graph_class(const Matrix& A, const Graph& G, const Tolerances& tol) {
  if (!matrix_in_graph_class(A, G, tol))
    throw PatternMismatch("matrix is not in S(G): off-diagonal support differs from the edge set");
}

std::vector<Matrix> skew_tangents(const Matrix& A) {
  std::vector<Matrix> out;
  for (const Matrix& K : subspace_basis(subspace::Skew{A.rows()}).basis)
    out.push_back(K.transpose() * A + A * K);
  return out;
}

StrongPropertyReport smp_with_q(const Matrix& An, const Graph& G, int q, const Tolerances& tol) {
  const Index n = An.rows();
  StrongPropertyReport r;
  r.property = Property::SMP;
  r.q = q;
  std::vector<Matrix> powers;
  for (int k = 0; k < q; ++k) powers.push_back(matrix_power(An, k));

  run_primal(r, subspace_basis(subspace::GraphComplement{G}),
             [&](const Matrix& X) {
               Vector out(n * n + q);
               out.head(n * n) = vec(commutator(An, X));
               for (int k = 0; k < q; ++k) out(n * n + k) = (powers[std::size_t(k)] * X).trace();
               return out;
             },
             tol);

  std::vector<Matrix> span = subspace_basis(subspace::GraphClosure{G}).basis;
  for (Matrix& T : skew_tangents(An)) span.push_back(std::move(T));
  for (const Matrix& P : powers) span.push_back(P);
  run_dual(r, span, n * (n + 1) / 2, tol);
  finish(r);
  return r;
}

}  // namespace

int distinct_eigenvalue_count(const Matrix& A, const Tolerances& tol) {
  return int(ordered_multiplicity_list(sym_eig(A).eigenvalues, tol).distinct());
}

StrongPropertyReport verify_ssp(const Matrix& A, const Graph& G, const Tolerances& tol) {
  tol.validate();
  require_in_graph_class(A, G, tol);
  const Matrix An = normalized(symmetrized(A));
  const Index n = An.rows();

  StrongPropertyReport r;
  r.property = Property::SSP;
  run_primal(r, subspace_basis(subspace::GraphComplement{G}),
             [&](const Matrix& X) { return vec(commutator(An, X)); }, tol);

  std::vector<Matrix> span = subspace_basis(subspace::GraphClosure{G}).basis;
  for (Matrix& T : skew_tangents(An)) span.push_back(std::move(T));
  run_dual(r, span, n * (n + 1) / 2, tol);
  finish(r);
  return r;
}

StrongPropertyReport verify_smp(const Matrix& A, const Graph& G, int q, const Tolerances& tol) {
  tol.validate();
  require_in_graph_class(A, G, tol);
  if (q < 1 || q > A.rows()) throw InputError("SMP: q must lie in [1, n]");
  return smp_with_q(normalized(symmetrized(A)), G, q, tol);
}

StrongPropertyReport verify_smp(const Matrix& A, const Graph& G, const Tolerances& tol) {
  tol.validate();
  require_in_graph_class(A, G, tol);
  const Matrix S = symmetrized(A);
  const Matrix An = normalized(S);
  const Vector ev = sym_eig(S).eigenvalues;
  const int q = int(ordered_multiplicity_list(ev, tol).distinct());
  StrongPropertyReport r = smp_with_q(An, G, q, tol);

  // Clustering within a factor of two of the threshold: surface the verdicts
  // for the neighbouring q values instead of choosing silently.
  std::set<int> alternatives;
  for (double factor : {0.5, 2.0}) {
    Tolerances t = tol;
    t.cluster_tol *= factor;
    const int qa = int(ordered_multiplicity_list(ev, t).distinct());
    if (qa != q) alternatives.insert(qa);
  }
  for (int qa : alternatives) {
    const StrongPropertyReport alt = smp_with_q(An, G, qa, tol);
    r.ambiguous_q.push_back({qa, alt.holds, alt.nullspace_dim});
  }
  return r;
}

StrongPropertyReport verify_sap(const Matrix& A, const Graph& G, const Tolerances& tol) {
  tol.validate();
  require_in_graph_class(A, G, tol);
  const Matrix An = normalized(symmetrized(A));
  const Index n = An.rows();

  StrongPropertyReport r;
  r.property = Property::SAP;
  run_primal(r, subspace_basis(subspace::GraphComplement{G}),
             [&](const Matrix& X) { return vec(Matrix(An * X)); }, tol);

  std::vector<Matrix> span = subspace_basis(subspace::GraphClosure{G}).basis;
  for (const Matrix& L : subspace_basis(subspace::Full{n}).basis)
    span.push_back(L.transpose() * An + An * L);
  run_dual(r, span, n * (n + 1) / 2, tol);
  finish(r);
  return r;
}

StrongPropertyReport verify_nssp(const Matrix& A, const SignPattern& P, const Tolerances& tol) {
  tol.validate();
  require_square(A, "verify_nssp");
  require_finite(A, "verify_nssp");
  if (!matrix_in_sign_class(A, P, tol))
    throw PatternMismatch("matrix is not in Q(P): entry signs differ from the pattern");
  const Matrix An = normalized(A);
  const Index n = An.rows();

  StrongPropertyReport r;
  r.property = Property::NSSP;
  run_primal(r, subspace_basis(subspace::SignComplement{P}),
             [&](const Matrix& X) { return vec(commutator(An, X.transpose())); }, tol);

  std::vector<Matrix> span = subspace_basis(subspace::SignTangent{P}).basis;
  for (const Matrix& L : subspace_basis(subspace::Full{n}).basis) span.push_back(An * L - L * An);
  run_dual(r, span, n * n, tol);
  finish(r);
  return r;
}

StrongPropertyReport verify_nssp(const Matrix& A, const Tolerances& tol) {
  require_square(A, "verify_nssp");
  require_finite(A, "verify_nssp");
  return verify_nssp(A, SignPattern::of(A, tol), tol);
}

double witness_residual(Property p, const Matrix& A, const Matrix& X, int q) {
  const double scale = std::max(A.norm(), 1e-300) * std::max(X.norm(), 1e-300);
  double res = A.cwiseProduct(X).norm();
  switch (p) {
    case Property::SSP:
      res += X.diagonal().norm() + commutator(A, X).norm();
      break;
    case Property::SMP: {
      res += X.diagonal().norm() + commutator(A, X).norm();
      Matrix P = Matrix::Identity(A.rows(), A.cols());
      const double an = std::max(A.norm(), 1e-300);
      for (int k = 0; k < q; ++k) {
        // tr(A^k X) measured on the normalized A so each term is O(||X||).
        res += std::abs((P * X).trace()) * an;
        P = P * (A / an);
      }
      break;
    }
    case Property::SAP:
      res += X.diagonal().norm() + (A * X).norm();
      break;
    case Property::NSSP:
      res += commutator(A, Matrix(X.transpose())).norm();
      break;
  }
  return res / scale;
}

}  // namespace strongprops
