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

// Dense kernels shared by every module: symmetric eigendecomposition, real
// Schur form, SVD-based rank / nullspace, minimum-norm least squares, the
// matrix exponential and characteristic polynomials. All tolerances flow in
// through `Tolerances`; nothing here keeps state.

#ifndef STRONGPROPS_NUMERICS_HPP
#define STRONGPROPS_NUMERICS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

#include "strongprops/errors.hpp"

namespace strongprops {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct Tolerances {
  // Singular values <= rank_tol * sigma_max count as zero.
  double rank_tol = 1e-8;
  // Neighbouring eigenvalues closer than cluster_tol * max(1, spread) merge.
  double cluster_tol = 1e-6;
  // Gauss-Newton stops once ||M - F(params)||_F <= newton_tol * max(1, ||M||_F).
  double newton_tol = 1e-11;
  int max_iter = 50;
  // An entry is structurally zero when |a_ij| <= zero_tol * ||A||_F / n.
  double zero_tol = 1e-10;
  // An eigenvalue (or real part) is zero when |.| <= eig_zero_tol * max(1, ||A||_F).
  double eig_zero_tol = 1e-6;
  // Homotopy trust radius: trust_factor * (1 + ||A||_F).
  double trust_factor = 0.1;
  int max_halvings = 20;
  // Nilpotency: ||A^n||_F <= nilpotent_tol * max(1, ||A||_F^n), and the same
  // relative bound on every characteristic-polynomial coefficient.
  double nilpotent_tol = 1e-8;

  // Throws InputError unless every threshold is positive and max_iter >= 1.
  void validate() const;
};

// --- validation -----------------------------------------------------------

void require_square(const Matrix& A, const char* what);
void require_finite(const Matrix& A, const char* what);

// Returns (A + A^T) / 2 after checking ||A - A^T||_F <= 1e-10 ||A||_F.
Matrix symmetrized(const Matrix& A);

// --- expression helpers ---------------------------------------------------

template <typename DerivedA, typename DerivedX>
auto commutator(const Eigen::MatrixBase<DerivedA>& A,
                const Eigen::MatrixBase<DerivedX>& X) {
  return (A * X - X * A).eval();
}

// Column-major vectorization, matching <A, B> = tr(B^T A).
template <typename Derived>
VectorX<typename Derived::Scalar> vec(const Eigen::MatrixBase<Derived>& A) {
  VectorX<typename Derived::Scalar> v(A.size());
  Eigen::Map<MatrixX<typename Derived::Scalar>>(v.data(), A.rows(), A.cols()) = A;
  return v;
}

template <typename Derived>
MatrixX<typename Derived::Scalar> unvec(const Eigen::MatrixBase<Derived>& v,
                                        Index rows, Index cols) {
  return Eigen::Map<const MatrixX<typename Derived::Scalar>>(v.derived().data(), rows, cols);
}

// --- decompositions -------------------------------------------------------

struct EigenDecomposition {
  Vector eigenvalues;  // ascending
  Matrix eigenvectors; // orthogonal, column i pairs with eigenvalues(i)
};

EigenDecomposition sym_eig(const Matrix& A);

struct SchurBlock {
  Index start;
  Index size;  // 1 or 2
};

struct RealSchurForm {
  Matrix Q;
  Matrix T;
  std::vector<SchurBlock> blocks;

  ComplexVector eigenvalues() const;
};

RealSchurForm real_schur(const Matrix& A);

// Eigenvalues of a general square matrix, read off its real Schur form.
ComplexVector eigenvalues(const Matrix& A);

struct Nullspace {
  Index dimension = 0;
  Matrix basis;            // cols x dimension, orthonormal columns
  Vector singular_values;  // descending, length min(rows, cols)
  double threshold = 0.0;  // rank_tol * sigma_max
};

Nullspace nullspace(const Matrix& A, const Tolerances& tol);

Vector singular_values(const Matrix& A);

// Number of singular values above rank_tol * sigma_max (0 for a zero matrix).
Index numerical_rank(const Vector& singular_values, double rank_tol);
Index numerical_rank(const Matrix& A, const Tolerances& tol);

// Pseudo-inverse solution of min ||A x - b||.
Vector lstsq_min_norm(const Matrix& A, const Vector& b, const Tolerances& tol);

// --- polynomials ----------------------------------------------------------

// Coefficients (c_0, ..., c_{n-1}) of the monic polynomial prod (x - r_i).
Vector poly_from_roots(const ComplexVector& roots);

// det(xI - A) = x^n + c_{n-1} x^{n-1} + ... + c_0, computed from the real
// Schur eigenvalues. Returns (c_0, ..., c_{n-1}).
Vector characteristic_polynomial(const Matrix& A);

// Faddeev-LeVerrier recursion. Exact polynomial arithmetic in the entries,
// so it differentiates cleanly with Eigen::AutoDiffScalar. Returns
// (c_0, ..., c_{n-1}) of det(xI - A).
template <typename Derived>
VectorX<typename Derived::Scalar> charpoly_leverrier(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  const Index n = A.rows();
  VectorX<Scalar> c(n);
  MatrixX<Scalar> M = MatrixX<Scalar>::Zero(n, n);
  Scalar lead(1.0);
  for (Index k = 1; k <= n; ++k) {
    M = A * M;
    for (Index i = 0; i < n; ++i) M(i, i) += lead;
    MatrixX<Scalar> AM = A * M;
    Scalar trace = AM(0, 0);
    for (Index i = 1; i < n; ++i) trace += AM(i, i);
    lead = -trace / Scalar(double(k));
    c(n - k) = lead;
  }
  return c;
}

// --- matrix exponential ---------------------------------------------------

// Scaling and squaring with a diagonal [6/6] Pade approximant; the argument
// is scaled until ||X||_1 <= 1/2.
template <typename Derived>
MatrixX<typename Derived::Scalar> matrix_exp(const Eigen::MatrixBase<Derived>& X) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  const Index n = X.rows();
  if (n == 0) return MatrixX<Scalar>(0, 0);

  double norm1 = 0.0;
  for (Index j = 0; j < n; ++j) norm1 = std::max(norm1, double(X.col(j).cwiseAbs().sum()));
  int squarings = 0;
  if (norm1 > 0.5) squarings = int(std::ceil(std::log2(norm1 / 0.5)));
  const MatrixX<Scalar> S = X / Scalar(std::ldexp(1.0, squarings));

  static constexpr double kPade[7] = {1.0,
                                      1.0 / 2.0,
                                      5.0 / 44.0,
                                      1.0 / 66.0,
                                      1.0 / 792.0,
                                      1.0 / 15840.0,
                                      1.0 / 665280.0};
  const MatrixX<Scalar> I = MatrixX<Scalar>::Identity(n, n);
  MatrixX<Scalar> power = I;
  MatrixX<Scalar> numer = kPade[0] * I;
  MatrixX<Scalar> denom = kPade[0] * I;
  for (int k = 1; k <= 6; ++k) {
    power = power * S;
    numer += kPade[k] * power;
    denom += ((k % 2) ? -kPade[k] : kPade[k]) * power;
  }
  MatrixX<Scalar> E = denom.partialPivLu().solve(numer);
  for (int s = 0; s < squarings; ++s) E = E * E;
  return E;
}

// Frechet derivative of exp at K in direction D, i.e. d/dt exp(K + tD) at
// t = 0, read from the upper-right block of exp([[K, D], [0, K]]).
Matrix exp_frechet(const Matrix& K, const Matrix& D);

}  // namespace strongprops

#endif  // STRONGPROPS_NUMERICS_HPP
