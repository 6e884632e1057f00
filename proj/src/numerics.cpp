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

#include "strongprops/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <string>

namespace strongprops {

void Tolerances::validate() const {
  if (!(rank_tol > 0) || !(cluster_tol > 0) || !(newton_tol > 0) || !(zero_tol > 0) ||
      !(eig_zero_tol > 0) || !(trust_factor > 0) || !(nilpotent_tol > 0))
    throw InputError("tolerances must be strictly positive");
  if (max_iter < 1) throw InputError("max_iter must be at least 1");
  if (max_halvings < 0) throw InputError("max_halvings must be non-negative");
}

void require_square(const Matrix& A, const char* what) {
  if (A.rows() != A.cols())
    throw InputError(std::string(what) + ": matrix is " + std::to_string(A.rows()) + "x" +
                     std::to_string(A.cols()) + ", expected square");
}

void require_finite(const Matrix& A, const char* what) {
  if (!A.allFinite()) throw InputError(std::string(what) + ": matrix has non-finite entries");
}

Matrix symmetrized(const Matrix& A) {
  require_square(A, "symmetrize");
  require_finite(A, "symmetrize");
  const double asym = (A - A.transpose()).norm();
  if (asym > 1e-10 * A.norm())
    throw InputError("matrix is not symmetric (||A - A^T||_F = " + std::to_string(asym) + ")");
  return (A + A.transpose()) / 2.0;
}

EigenDecomposition sym_eig(const Matrix& A) {
  const Matrix S = symmetrized(A);
  if (S.rows() == 0) return {Vector(0), Matrix(0, 0)};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(S);
  if (solver.info() != Eigen::Success) throw NumericalFailure("symmetric eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealSchurForm real_schur(const Matrix& A) {
  require_square(A, "real_schur");
  require_finite(A, "real_schur");
  RealSchurForm out;
  const Index n = A.rows();
  if (n == 0) return out;
  Eigen::RealSchur<Matrix> schur(A);
  if (schur.info() != Eigen::Success) throw NumericalFailure("real Schur iteration did not converge");
  out.Q = schur.matrixU();
  out.T = schur.matrixT();
  for (Index i = 0; i < n;) {
    if (i + 1 < n && out.T(i + 1, i) != 0.0) {
      out.blocks.push_back({i, 2});
      i += 2;
    } else {
      out.blocks.push_back({i, 1});
      i += 1;
    }
  }
  return out;
}

ComplexVector RealSchurForm::eigenvalues() const {
  ComplexVector ev(T.rows());
  for (const SchurBlock& b : blocks) {
    if (b.size == 1) {
      ev(b.start) = T(b.start, b.start);
      continue;
    }
    const Index i = b.start;
    const double p = 0.5 * (T(i, i) - T(i + 1, i + 1));
    const double z = p * p + T(i, i + 1) * T(i + 1, i);
    const double mid = T(i + 1, i + 1) + p;
    if (z >= 0) {
      // Not standardized; a real pair can still hide in the block.
      const double r = std::sqrt(z);
      ev(i) = mid - r;
      ev(i + 1) = mid + r;
    } else {
      const double im = std::sqrt(-z);
      ev(i) = {mid, -im};
      ev(i + 1) = {mid, im};
    }
  }
  return ev;
}

ComplexVector eigenvalues(const Matrix& A) { return real_schur(A).eigenvalues(); }

Index numerical_rank(const Vector& sv, double rank_tol) {
  if (sv.size() == 0) return 0;
  const double smax = sv.maxCoeff();
  if (!(smax > 0)) return 0;
  const double thr = rank_tol * smax;
  return Index((sv.array() > thr).count());
}

Vector singular_values(const Matrix& A) {
  if (A.rows() == 0 || A.cols() == 0) return Vector(0);
  Eigen::JacobiSVD<Matrix> svd(A);
  return svd.singularValues();
}

Index numerical_rank(const Matrix& A, const Tolerances& tol) {
  return numerical_rank(singular_values(A), tol.rank_tol);
}

Nullspace nullspace(const Matrix& A, const Tolerances& tol) {
  require_finite(A, "nullspace");
  Nullspace ns;
  const Index cols = A.cols();
  if (cols == 0) {
    ns.basis = Matrix(0, 0);
    ns.singular_values = Vector(0);
    return ns;
  }
  if (A.rows() == 0) {
    ns.dimension = cols;
    ns.basis = Matrix::Identity(cols, cols);
    ns.singular_values = Vector(0);
    return ns;
  }
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullV);
  ns.singular_values = svd.singularValues();
  const double smax = ns.singular_values.size() ? ns.singular_values.maxCoeff() : 0.0;
  ns.threshold = tol.rank_tol * smax;
  const Index rank = numerical_rank(ns.singular_values, tol.rank_tol);
  ns.dimension = cols - rank;
  ns.basis = svd.matrixV().rightCols(ns.dimension);
  return ns;
}

Vector lstsq_min_norm(const Matrix& A, const Vector& b, const Tolerances& tol) {
  if (A.rows() != b.size())
    throw InputError("lstsq_min_norm: A has " + std::to_string(A.rows()) + " rows but b has " +
                     std::to_string(b.size()) + " entries");
  require_finite(A, "lstsq_min_norm");
  if (A.cols() == 0) return Vector(0);
  if (A.rows() == 0) return Vector::Zero(A.cols());
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  const Index rank = numerical_rank(s, tol.rank_tol);
  Vector x = Vector::Zero(A.cols());
  for (Index k = 0; k < rank; ++k)
    x += (svd.matrixU().col(k).dot(b) / s(k)) * svd.matrixV().col(k);
  return x;
}

Vector poly_from_roots(const ComplexVector& roots) {
  const Index n = roots.size();
  // coeff[k] multiplies x^k; start from the constant polynomial 1.
  std::vector<std::complex<double>> coeff(n + 1, 0.0);
  coeff[0] = 1.0;
  for (Index r = 0; r < n; ++r) {
    for (Index k = r + 1; k >= 1; --k) coeff[k] = coeff[k - 1] - roots(r) * coeff[k];
    coeff[0] = -roots(r) * coeff[0];
  }
  Vector c(n);
  for (Index k = 0; k < n; ++k) c(k) = coeff[k].real();
  return c;
}

Vector characteristic_polynomial(const Matrix& A) { return poly_from_roots(eigenvalues(A)); }

Matrix exp_frechet(const Matrix& K, const Matrix& D) {
  const Index n = K.rows();
  Matrix big = Matrix::Zero(2 * n, 2 * n);
  big.topLeftCorner(n, n) = K;
  big.topRightCorner(n, n) = D;
  big.bottomRightCorner(n, n) = K;
  return matrix_exp(big).topRightCorner(n, n);
}

}  // namespace strongprops
