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

#include <random>

#include <gtest/gtest.h>

#include "strongprops/arbitrary.hpp"
#include "test_util.hpp"

namespace sp = strongprops;
using sp::ConjInvariantSpectrum;
using sp::Index;
using sp::Matrix;
using sp::SignPattern;
using sp::Vector;
namespace T = sp::testing;

namespace {

Matrix jordan(Index n) {
  Matrix J = Matrix::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i) J(i, i + 1) = 1.0;
  return J;
}

Matrix witness2() {
  Matrix A(2, 2);
  A << 1, -1, 1, -1;
  return A;
}

double max_abs_diff(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Oracle for the char-poly of a conjugation-invariant spectrum: expand the
// product over all n roots with complex arithmetic.
Vector oracle_charpoly(const ConjInvariantSpectrum& s) {
  std::vector<std::complex<double>> c{1.0};
  const auto multiply = [&](std::complex<double> r) {
    std::vector<std::complex<double>> out(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      out[k + 1] += c[k];
      out[k] -= r * c[k];
    }
    c = out;
  };
  for (double x : s.reals) multiply(x);
  for (const auto& [a, b] : s.pairs) {
    multiply({a, b});
    multiply({a, -b});
  }
  Vector v(Index(c.size()) - 1);
  for (Index k = 0; k < v.size(); ++k) v(k) = c[std::size_t(k)].real();
  return v;
}

ConjInvariantSpectrum random_spectrum(Index n, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), pos(0.1, 1.0);
  std::uniform_int_distribution<Index> pairs_dist(0, n / 2);
  ConjInvariantSpectrum s;
  const Index pairs = pairs_dist(rng);
  for (Index k = 0; k < pairs; ++k) s.pairs.emplace_back(u(rng), pos(rng));
  for (Index k = 0; k < n - 2 * pairs; ++k) s.reals.push_back(u(rng));
  return s.scaled(radius / std::sqrt(std::max(s.squared_norm(), 1e-300)));
}

}  // namespace

TEST(Spectrum, CharpolyMatchesComplexExpansion) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_spectrum(1 + trial % 8, 2.0, rng);
    EXPECT_EQ(s.size(), 1 + trial % 8);
    EXPECT_LE(max_abs_diff(s.charpoly(), oracle_charpoly(s)), 1e-12);
    EXPECT_LE(max_abs_diff(s.charpoly(), sp::poly_from_roots(s.values())), 1e-12);
    EXPECT_NEAR(s.squared_norm(), s.values().squaredNorm(), 1e-12);
  }
}

TEST(Spectrum, Parse) {
  const auto s = sp::parse_spectrum("1 2 0.5+0.25i -3i");
  EXPECT_EQ(s.reals, (std::vector<double>{1, 2}));
  ASSERT_EQ(s.pairs.size(), 2u);
  EXPECT_EQ(s.pairs[0], (std::pair<double, double>{0.5, 0.25}));
  EXPECT_EQ(s.pairs[1], (std::pair<double, double>{0.0, 3.0}));
  EXPECT_EQ(s.size(), 6);
  EXPECT_EQ(sp::parse_spectrum("+i").pairs[0], (std::pair<double, double>{0.0, 1.0}));
  EXPECT_THROW(sp::parse_spectrum("1 abc"), sp::InputError);
  EXPECT_THROW(sp::parse_spectrum("0i"), sp::InputError);
  EXPECT_EQ(sp::to_string(sp::parse_spectrum("1 2 0.5+0.25i")), "{1, 2, 0.5+-0.25i}");
}

TEST(Nilpotency, RankOneNilpotentHasIndexTwo) {
  const Matrix A = T::rank_one_nilpotent();
  const auto c = sp::check_nilpotent(A);
  EXPECT_TRUE(c.nilpotent);
  EXPECT_EQ(c.index, 2);
  EXPECT_LE((A * A).norm(), 1e-12);
  EXPECT_GT(A.norm(), 0.0);
  EXPECT_LE(c.max_schur_diagonal, 1e-7);
}

TEST(Nilpotency, Examples) {
  EXPECT_EQ(sp::check_nilpotent(jordan(4)).index, 4);
  EXPECT_TRUE(sp::check_nilpotent(Matrix::Zero(3, 3)).nilpotent);
  EXPECT_EQ(sp::check_nilpotent(Matrix::Zero(3, 3)).index, 1);
  EXPECT_FALSE(sp::check_nilpotent(Matrix::Identity(2, 2)).nilpotent);
  Matrix R(2, 2);
  R << 0, -1, 1, 0;
  EXPECT_FALSE(sp::check_nilpotent(R).nilpotent);
  std::mt19937_64 rng(2);
  for (Index n = 2; n <= 6; ++n)
    for (Index k = 1; k <= n; ++k) {
      const auto c = sp::check_nilpotent(T::random_nilpotent(n, k, rng));
      EXPECT_TRUE(c.nilpotent);
      EXPECT_EQ(c.index, k);
    }
}

TEST(NilpotentNearby, ZeroSpectrumReturnsA) {
  const Matrix A = T::rank_one_nilpotent();
  EXPECT_LE((sp::nilpotent_nearby(A, ConjInvariantSpectrum::zeros(3)) - A).norm(), 1e-12);
}

TEST(NilpotentNearby, JordanPair) {
  const Matrix J = jordan(2);
  ConjInvariantSpectrum s;
  s.pairs.emplace_back(0.0, 0.1);
  const Matrix M = sp::nilpotent_nearby(J, s);
  // |x| = 1 > b, so the block is [[0, x], [-b^2/x, 0]]: distance b^2.
  EXPECT_NEAR((M - J).norm(), 0.01, 1e-14);
  EXPECT_NEAR(M.trace(), 0.0, 1e-14);
  EXPECT_NEAR(M.determinant(), 0.01, 1e-14);
  EXPECT_NEAR(std::abs(M(0, 1)), 1.0, 1e-14);
}

TEST(NilpotentNearby, ZeroMatrixReals) {
  ConjInvariantSpectrum s;
  s.reals = {0.1, -0.1};
  const Matrix M = sp::nilpotent_nearby(Matrix::Zero(2, 2), s);
  EXPECT_NEAR(M.squaredNorm(), 0.02, 1e-15);
  EXPECT_NEAR(M.trace(), 0.0, 1e-15);
  EXPECT_NEAR(M.determinant(), -0.01, 1e-15);
}

TEST(NilpotentNearby, CaseTable) {
  // Superdiagonal entry x against b for each of the three cases.
  for (double x : {-0.05, -0.1, 0.0, 0.05, 0.1, 0.3, -0.3}) {
    Matrix A = Matrix::Zero(2, 2);
    A(0, 1) = x;
    ConjInvariantSpectrum s;
    s.pairs.emplace_back(0.02, 0.1);
    const Matrix M = sp::nilpotent_nearby(A, s);
    EXPECT_NEAR(M.trace(), 0.04, 1e-14) << x;
    EXPECT_NEAR(M.determinant(), 0.02 * 0.02 + 0.01, 1e-14) << x;
    EXPECT_LE((M - A).squaredNorm(), s.squared_norm() + 1e-15) << x;
  }
}

TEST(NilpotentNearby, Errors) {
  ConjInvariantSpectrum s;
  s.reals = {0.1, 0.1};
  EXPECT_THROW(sp::nilpotent_nearby(Matrix::Identity(2, 2), s), sp::HypothesisFailure);
  EXPECT_THROW(sp::nilpotent_nearby(jordan(3), s), sp::InputError);
  EXPECT_THROW(sp::nilpotent_nearby(jordan(2), s, 0.1), sp::InputError);
  ConjInvariantSpectrum pairs;
  pairs.pairs = {{0.0, 0.1}, {0.0, 0.1}};
  EXPECT_THROW(sp::nilpotent_nearby(jordan(3), pairs), sp::InputError);
}

TEST(NilpotentNearby, DistanceAndSpectrumProperty) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 1 + trial % 8;
    const Index index = 1 + Index(rng() % std::uint64_t(n));
    const Matrix A = T::random_nilpotent(n, index, rng);
    const auto s = random_spectrum(n, 0.3, rng);
    const Matrix M = sp::nilpotent_nearby(A, s);
    EXPECT_LE((M - A).squaredNorm(), s.squared_norm() + 1e-9) << trial;
    EXPECT_LE(max_abs_diff(sp::charpoly_leverrier(M), oracle_charpoly(s)), 1e-9) << trial;
  }
}

TEST(CertifySpectral, RankOneNilpotent) {
  const Matrix A = T::rank_one_nilpotent();
  const SignPattern P = SignPattern::of(A);
  const std::vector<ConjInvariantSpectrum> targets = {sp::parse_spectrum("1 2 3"), sp::parse_spectrum("0 0.5i"),
                                                      ConjInvariantSpectrum::zeros(3)};
  const auto c = sp::certify_spectrally_arbitrary(P, A, targets);
  ASSERT_EQ(c.verdict, sp::Verdict::Complete) << c.hypothesis.failure;
  EXPECT_TRUE(c.hypothesis.holds);
  EXPECT_TRUE(c.hypothesis.nssp.holds);
  ASSERT_EQ(c.evidence.size(), 3u);
  for (const auto& e : c.evidence) {
    EXPECT_TRUE(e.ok) << e.error;
    EXPECT_TRUE(sp::matrix_in_sign_class(e.realized, P));
    const Vector want = e.spectrum->charpoly();
    EXPECT_LE(max_abs_diff(sp::charpoly_leverrier(e.realized), want), 1e-7 * std::max(1.0, want.cwiseAbs().maxCoeff()));
    EXPECT_GE(e.scale, 1.0);
    EXPECT_EQ(std::exp2(std::round(std::log2(e.scale))), e.scale);
  }
  EXPECT_EQ(c.evidence[2].scale, 1.0);
}

TEST(CertifySpectral, ScaledTargetFitsTrustRadius) {
  const Matrix A = T::rank_one_nilpotent();
  const auto s = sp::parse_spectrum("1 2 3");
  const auto c = sp::certify_spectrally_arbitrary(SignPattern::of(A), A, {s});
  const double k = c.evidence[0].scale;
  const double trust = sp::trust_radius(A, {});
  EXPECT_LT(s.scaled(1.0 / k).squared_norm(), 0.25 * trust * trust);
  EXPECT_GE(s.scaled(2.0 / k).squared_norm(), 0.25 * trust * trust);
}

TEST(CertifySpectral, SecondFullWitness) {
  const Matrix A = witness2();
  const auto c = sp::certify_spectrally_arbitrary(SignPattern::of(A), A,
                                                  {sp::parse_spectrum("-1 4"), sp::parse_spectrum("2+3i")});
  EXPECT_EQ(c.verdict, sp::Verdict::Complete);
}

TEST(CertifySpectral, Superpattern) {
  Matrix A(3, 3);
  A << 0, 1, 0, 0, 0, 1, 0, 0, 0;
  // J3(0) lacks the nSSP in its own pattern; a full witness is needed.
  const auto fail = sp::certify_spectrally_arbitrary(SignPattern::of(A), A, {sp::parse_spectrum("1 2 3")});
  EXPECT_EQ(fail.verdict, sp::Verdict::HypothesisFailed);
  const Matrix E = T::rank_one_nilpotent();
  const auto c = sp::certify_spectrally_arbitrary(SignPattern::of(E), E, {sp::parse_spectrum("1 -1 0.5")},
                                                  {}, SignPattern::of(E));
  EXPECT_EQ(c.verdict, sp::Verdict::Complete);
}

TEST(CertifySpectral, HypothesisFailures) {
  const Matrix I = Matrix::Identity(2, 2);
  const auto c = sp::certify_spectrally_arbitrary(SignPattern::of(I), I, {sp::parse_spectrum("1 2")});
  EXPECT_EQ(c.verdict, sp::Verdict::HypothesisFailed);
  EXPECT_FALSE(c.hypothesis.nilpotency.nilpotent);
  EXPECT_TRUE(c.evidence.empty());
  const auto d = sp::certify_spectrally_arbitrary(SignPattern::full(3), T::rank_one_nilpotent(), {});
  EXPECT_EQ(d.verdict, sp::Verdict::HypothesisFailed);
  EXPECT_FALSE(d.hypothesis.in_pattern);
}

TEST(CertifySpectral, WrongSizeTargetIsIncomplete) {
  const Matrix A = T::rank_one_nilpotent();
  const auto c = sp::certify_spectrally_arbitrary(SignPattern::of(A), A, {sp::parse_spectrum("1 2")});
  EXPECT_EQ(c.verdict, sp::Verdict::Incomplete);
  EXPECT_FALSE(c.evidence[0].ok);
  EXPECT_FALSE(c.evidence[0].error.empty());
}

TEST(RaiseIndex, RankOneNilpotent) {
  const Matrix A = T::rank_one_nilpotent();
  const SignPattern P = SignPattern::of(A);
  const Matrix B = sp::raise_nilpotent_index(A, P);
  EXPECT_TRUE(sp::matrix_in_sign_class(B, P));
  EXPECT_GT((B * B).norm(), 1e-4);
  EXPECT_LE((B * B * B).norm(), 1e-8 * std::max(1.0, std::pow(B.norm(), 3)));
  EXPECT_TRUE(sp::verify_nssp(B, P).holds);
  EXPECT_EQ(sp::check_nilpotent(B).index, 3);
}

TEST(RaiseIndex, AlreadyFullIndex) {
  const Matrix J = jordan(2);
  EXPECT_EQ(sp::raise_nilpotent_index(J, SignPattern::of(J)), J);
  const Matrix W = witness2();
  EXPECT_EQ(sp::raise_nilpotent_index(W, SignPattern::of(W)), W);
  EXPECT_THROW(sp::raise_nilpotent_index(Matrix::Identity(2, 2), SignPattern::of(Matrix::Identity(2, 2))),
               sp::HypothesisFailure);
}

TEST(CertifyInertia, TwoByTwo) {
  const Matrix A = witness2();
  const auto c = sp::certify_inertially_arbitrary(SignPattern::of(A), A);
  ASSERT_EQ(c.verdict, sp::Verdict::Complete) << c.hypothesis.failure;
  ASSERT_TRUE(c.hypothesis.refined_inertia);
  EXPECT_EQ(*c.hypothesis.refined_inertia, (sp::RefinedInertia{0, 0, 2, 0}));
  ASSERT_EQ(c.evidence.size(), 6u);
  const auto all = sp::all_inertias(2);
  for (std::size_t k = 0; k < c.evidence.size(); ++k) {
    const auto& e = c.evidence[k];
    EXPECT_TRUE(e.ok) << e.target << ": " << e.error;
    EXPECT_EQ(*e.inertia, all[k]);
    EXPECT_EQ(sp::inertia(e.realized), all[k]);
    EXPECT_TRUE(sp::matrix_in_sign_class(e.realized, c.pattern));
  }
  // Oracle for the 2x2 case: trace and determinant fix the inertia.
  for (const auto& e : c.evidence) {
    const double t = e.realized.trace(), d = e.realized.determinant();
    const double zero = 1e-6 * std::max(1.0, e.realized.norm());
    if (e.inertia->zero == 2) EXPECT_LE(std::abs(t) + std::abs(d), zero);
    if (e.inertia->positive == 1 && e.inertia->negative == 1) EXPECT_LT(d, 0.0);
    if (e.inertia->positive == 2) EXPECT_TRUE(d > 0.0 && t > 0.0);
    if (e.inertia->negative == 2) EXPECT_TRUE(d > 0.0 && t < 0.0);
  }
}

TEST(CertifyInertia, CountsEveryInertia) {
  for (Index n = 1; n <= 6; ++n) EXPECT_EQ(Index(sp::all_inertias(n).size()), (n + 1) * (n + 2) / 2);
}

TEST(CertifyInertia, RankOneNilpotent) {
  const Matrix A = T::rank_one_nilpotent();
  const auto c = sp::certify_inertially_arbitrary(SignPattern::of(A), A);
  EXPECT_EQ(c.verdict, sp::Verdict::Complete);
  EXPECT_EQ(c.evidence.size(), 10u);
  for (const auto& e : c.evidence) EXPECT_EQ(sp::inertia(e.realized), *e.inertia) << e.target;
}

TEST(CertifyInertia, HypothesisFailure) {
  const Matrix J = jordan(2);
  EXPECT_EQ(sp::certify_inertially_arbitrary(SignPattern::of(J), J).verdict, sp::Verdict::HypothesisFailed);
  const Matrix D = (Vector(2) << 1, 0).finished().asDiagonal();
  EXPECT_EQ(sp::certify_inertially_arbitrary(SignPattern::of(D), D).verdict, sp::Verdict::HypothesisFailed);
}

TEST(NilpotentJacobian, RankOneNilpotentHasZeroConstantRow) {
  const Matrix A = T::rank_one_nilpotent();
  std::vector<std::pair<Index, Index>> cells;
  for (Index k = 0; k < 9; ++k) cells.emplace_back(k / 3, k % 3);
  int choices = 0;
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      for (int c = b + 1; c < 9; ++c) {
        const auto nj = sp::nj_jacobian_diagnostic(A, {cells[a], cells[b], cells[c]});
        EXPECT_EQ(nj.jacobian.row(0).cwiseAbs().maxCoeff(), 0.0);
        EXPECT_FALSE(nj.surjective);
        ++choices;
      }
  EXPECT_EQ(choices, 84);
}

TEST(NilpotentJacobian, TwoByTwoHandExpansion) {
  // det(xI - A - B) = x^2 - tr(A + B) x + det(A + B). With A = [[1,-1],[1,-1]]
  // the c_1 gradient is -1 on diagonal cells and the c_0 gradient is the
  // cofactor matrix [[-1,-1],[1,1]].
  const Matrix A = witness2();
  const auto diag = sp::nj_jacobian_diagnostic(A, {{0, 0}, {1, 1}});
  EXPECT_LE((diag.jacobian - (Matrix(2, 2) << -1, 1, -1, -1).finished()).norm(), 1e-14);
  EXPECT_TRUE(diag.surjective);
  const auto row = sp::nj_jacobian_diagnostic(A, {{0, 0}, {0, 1}});
  EXPECT_LE((row.jacobian - (Matrix(2, 2) << -1, -1, -1, 0).finished()).norm(), 1e-14);
  EXPECT_TRUE(row.surjective);
  const auto off = sp::nj_jacobian_diagnostic(A, {{0, 1}, {1, 0}});
  EXPECT_FALSE(off.surjective);
  EXPECT_EQ(off.rank, 1);
}

TEST(NilpotentJacobian, AgreesWithIndexAndNssp) {
  // A full nilpotent has the nSSP, so some choice of n cells is surjective
  // exactly when the index is n.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 12; ++trial) {
    const Index n = 3;
    const Index index = trial % 2 ? 3 : 2;
    Matrix A = T::random_nilpotent(n, index, rng);
    if (A.cwiseAbs().minCoeff() < 1e-3) continue;
    ASSERT_TRUE(sp::verify_nssp(A).holds);
    bool any = false;
    for (int a = 0; a < 9; ++a)
      for (int b = a + 1; b < 9; ++b)
        for (int c = b + 1; c < 9; ++c) {
          const auto nj = sp::nj_jacobian_diagnostic(A, {{a / 3, a % 3}, {b / 3, b % 3}, {c / 3, c % 3}});
          any = any || nj.surjective;
        }
    EXPECT_EQ(any, index == n) << trial;
    if (any) EXPECT_GT((A * A).norm(), 1e-8);
  }
}

TEST(NilpotentJacobian, Errors) {
  const Matrix J = jordan(2);
  EXPECT_THROW(sp::nj_jacobian_diagnostic(J, {{0, 1}, {1, 0}}), sp::PatternMismatch);
  EXPECT_THROW(sp::nj_jacobian_diagnostic(J, {{0, 1}}), sp::InputError);
  EXPECT_THROW(sp::nj_jacobian_diagnostic(witness2(), {{0, 1}, {0, 1}}), sp::InputError);
  EXPECT_THROW(sp::nj_jacobian_diagnostic(Matrix::Identity(2, 2), {{0, 0}, {1, 1}}), sp::HypothesisFailure);
}
