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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "strongprops/patterns.hpp"
#include "test_util.hpp"

namespace sp = strongprops;
using sp::Graph;
using sp::Index;
using sp::Matrix;
using sp::Sign;
using sp::SignPattern;
using sp::Vector;

namespace {

SignPattern pattern(const std::vector<std::string>& rows) {
  const Index n = Index(rows.size());
  SignPattern P(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const char c = rows[std::size_t(i)][std::size_t(j)];
      P(i, j) = c == '+' ? Sign::Plus : c == '-' ? Sign::Minus : Sign::Zero;
    }
  return P;
}

Vector values(std::initializer_list<double> v) {
  Vector x(Index(v.size()));
  std::copy(v.begin(), v.end(), x.data());
  return x;
}

sp::OrderedMultiplicityList list(std::initializer_list<int> m) { return {std::vector<int>(m)}; }

Matrix permutation_matrix(const std::vector<Index>& perm) {
  const Index n = Index(perm.size());
  Matrix P = Matrix::Zero(n, n);
  for (Index v = 0; v < n; ++v) P(v, perm[std::size_t(v)]) = 1.0;
  return P;
}

}  // namespace

TEST(Graph, RejectsLoopsAndOutOfRange) {
  Graph G(3);
  EXPECT_THROW(G.add_edge(1, 1), sp::InputError);
  EXPECT_THROW(G.add_edge(0, 3), sp::InputError);
  G.add_edge(2, 0);
  G.add_edge(0, 2);
  EXPECT_EQ(G.size(), 1);
  EXPECT_TRUE(G.has_edge(0, 2));
  EXPECT_EQ(G.non_edges().size(), 2u);
}

TEST(Graph, Families) {
  EXPECT_EQ(Graph::path(5).size(), 4);
  EXPECT_EQ(Graph::cycle(5).size(), 5);
  EXPECT_EQ(Graph::complete(5).size(), 10);
  EXPECT_EQ(Graph::empty(5).size(), 0);
}

TEST(GraphClass, Examples) {
  Matrix A(2, 2);
  A << 5, 1, 1, -2;
  EXPECT_TRUE(sp::matrix_in_graph_class(A, Graph::path(2)));
  A << 5, 0, 0, -2;
  EXPECT_FALSE(sp::matrix_in_graph_class(A, Graph::path(2)));
  EXPECT_TRUE(sp::matrix_in_graph_class(sp::testing::cycle_matrix(4, false), Graph::cycle(4)));
  EXPECT_THROW(sp::matrix_in_graph_class(A, Graph::path(3)), sp::InputError);
}

TEST(GraphClass, PermutationInvariance) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + trial % 6;
    const Graph G = sp::testing::random_graph(n, 0.5, rng);
    const Matrix A = sp::testing::random_in_graph(G, false, rng);
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Matrix P = permutation_matrix(perm);
    const Graph H = sp::testing::random_graph(n, 0.5, rng);
    EXPECT_TRUE(sp::matrix_in_graph_class(P.transpose() * A * P, G.relabeled(perm)));
    EXPECT_EQ(sp::matrix_in_graph_class(A, H),
              sp::matrix_in_graph_class(P.transpose() * A * P, H.relabeled(perm)));
  }
}

TEST(SignClass, Examples) {
  EXPECT_TRUE(sp::matrix_in_sign_class(sp::testing::rank_one_nilpotent(), pattern({"-+-", "-+-", "-+-"})));
  EXPECT_FALSE(sp::matrix_in_sign_class(Matrix::Zero(2, 2), pattern({"+0", "00"})));
  EXPECT_TRUE(sp::matrix_in_sign_class(Matrix::Identity(2, 2), pattern({"+0", "0+"})));
  EXPECT_EQ(SignPattern::of(sp::testing::rank_one_nilpotent()), pattern({"-+-", "-+-", "-+-"}));
}

TEST(Superpattern, Examples) {
  const SignPattern P = pattern({"+0", "0-"});
  EXPECT_TRUE(sp::is_superpattern(P, P));
  EXPECT_TRUE(sp::is_superpattern(pattern({"++", "0-"}), P));
  EXPECT_FALSE(sp::is_superpattern(pattern({"-+", "0-"}), P));
  EXPECT_FALSE(sp::is_superpattern(P, pattern({"++", "0-"})));
  EXPECT_THROW(sp::is_superpattern(P, SignPattern(3)), sp::InputError);
}

TEST(SubspaceBasis, Examples) {
  EXPECT_EQ(sp::subspace_basis(sp::subspace::GraphClosure{Graph::path(2)}).dimension(), 3);
  EXPECT_EQ(sp::subspace_basis(sp::subspace::Skew{3}).dimension(), 3);
  EXPECT_EQ(sp::subspace_basis(sp::subspace::SignTangent{SignPattern::of(sp::testing::rank_one_nilpotent())}).dimension(),
            9);
}

TEST(SubspaceBasis, DimensionsAndOrthonormality) {
  std::mt19937_64 rng(41);
  for (Index n = 1; n <= 8; ++n) {
    const Graph G = sp::testing::random_graph(n, 0.4, rng);
    const SignPattern P = SignPattern::of(sp::testing::random_square(n, 0.4, true, rng));
    const Index e = G.size(), nz = P.nonzero_count();
    const std::vector<std::pair<sp::SubspaceKind, Index>> cases = {
        {sp::subspace::GraphClosure{G}, n + e},
        {sp::subspace::GraphComplement{G}, n * (n - 1) / 2 - e},
        {sp::subspace::SignTangent{P}, nz},
        {sp::subspace::SignComplement{P}, n * n - nz},
        {sp::subspace::Symmetric{n}, n * (n + 1) / 2},
        {sp::subspace::Skew{n}, n * (n - 1) / 2},
        {sp::subspace::Full{n}, n * n},
        {sp::subspace::HollowSymmetric{n}, n * (n - 1) / 2},
    };
    for (const auto& [kind, dim] : cases) {
      const auto B = sp::subspace_basis(kind);
      ASSERT_EQ(B.dimension(), dim) << n << " kind " << kind.index();
      if (dim == 0) continue;
      const Matrix C = B.columns();
      EXPECT_LE((C.transpose() * C - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-12);
    }
    // Closure basis vanishes exactly on non-edges; tangent basis on zero cells.
    for (const Matrix& b : sp::subspace_basis(sp::subspace::GraphClosure{G}).basis)
      for (const auto& [i, j] : G.non_edges()) {
        EXPECT_EQ(b(i, j), 0.0);
        EXPECT_EQ(b(j, i), 0.0);
      }
    for (const Matrix& b : sp::subspace_basis(sp::subspace::SignTangent{P}).basis)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          if (P(i, j) == Sign::Zero) EXPECT_EQ(b(i, j), 0.0);
  }
}

TEST(SymmetricCoordinates, RoundTrip) {
  std::mt19937_64 rng(3);
  Matrix A = sp::testing::random_square(5, 0.0, false, rng);
  A = (A + A.transpose()).eval();
  const Vector v = sp::symmetric_coordinates(A);
  EXPECT_EQ(v.size(), 15);
  EXPECT_NEAR(v.norm(), A.norm(), 1e-12);
  EXPECT_LE((sp::from_symmetric_coordinates(v, 5) - A).norm(), 1e-13);
}

TEST(MultiplicityList, Examples) {
  EXPECT_EQ(sp::ordered_multiplicity_list(values({1, 1, 2})), list({2, 1}));
  EXPECT_EQ(sp::ordered_multiplicity_list(values({-2, 0, 0, 2})), list({1, 2, 1}));
  EXPECT_EQ(sp::ordered_multiplicity_list(values({0, 0, 0})), list({3}));
  EXPECT_EQ(sp::ordered_multiplicity_list(sp::sym_eig(sp::testing::cycle_matrix(4, false)).eigenvalues),
            list({1, 2, 1}));
}

TEST(MultiplicityList, SumsToLengthAndScales) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Vector x(1 + trial % 9);
    for (Index i = 0; i < x.size(); ++i) x(i) = pick(rng);
    std::sort(x.data(), x.data() + x.size());
    const auto m = sp::ordered_multiplicity_list(x);
    EXPECT_EQ(m.total(), x.size());
    EXPECT_EQ(sp::ordered_multiplicity_list(Vector(1e3 * x)), m);
    EXPECT_EQ(sp::ordered_multiplicity_list(Vector(1e-3 * x)), m);
  }
}

TEST(Refinement, Examples) {
  EXPECT_TRUE(sp::is_refinement(list({2, 1, 1}), list({2, 2})));
  EXPECT_TRUE(sp::is_refinement(list({1, 1, 2}), list({2, 2})));
  EXPECT_FALSE(sp::is_refinement(list({1, 2, 1}), list({2, 2})));
  EXPECT_TRUE(sp::is_refinement(list({2, 2}), list({2, 2})));
  EXPECT_FALSE(sp::is_refinement(list({2, 2}), list({1, 1, 2})));
}

TEST(Refinement, EnumerationMatchesPredicate) {
  // Oracle: every composition of the total, filtered by the predicate.
  for (const auto& coarse : {list({2, 2}), list({1, 3}), list({3, 1, 2}), list({5})}) {
    const int n = coarse.total();
    std::vector<sp::OrderedMultiplicityList> brute;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      sp::OrderedMultiplicityList c;
      int run = 1;
      for (int k = 0; k < n - 1; ++k) {
        if (mask & (1u << k)) {
          c.m.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      c.m.push_back(run);
      if (sp::is_refinement(c, coarse)) brute.push_back(c);
    }
    auto got = sp::refinements(coarse);
    EXPECT_EQ(got.size(), brute.size());
    for (const auto& c : brute) EXPECT_NE(std::find(got.begin(), got.end(), c), got.end());
  }
}

TEST(CycleAdmissible, Examples) {
  EXPECT_TRUE(sp::cycle_spectrum_admissible(values({-2, 0, 0, 2})));
  EXPECT_FALSE(sp::cycle_spectrum_admissible(values({0, 0, 0})));
  EXPECT_TRUE(sp::cycle_spectrum_admissible(values({1, 1, 2, 2})));
  EXPECT_FALSE(sp::cycle_spectrum_admissible(values({1, 2, 2, 3, 3})) &&
               sp::cycle_spectrum_admissible(values({1, 1, 2, 2, 2})));
  EXPECT_THROW(sp::cycle_spectrum_admissible(values({0, 1})), sp::InputError);
}

TEST(CycleAdmissible, MatchesRefinementDescription) {
  // Oracle: admissible iff the list refines (2,...,2[,1]) or (1,2,...,2[,1]).
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const Index n = 3 + trial % 6;
    Vector x(n);
    for (Index i = 0; i < n; ++i) x(i) = pick(rng);
    std::sort(x.data(), x.data() + n);
    const auto m = sp::ordered_multiplicity_list(x);
    sp::OrderedMultiplicityList a, b;
    for (Index k = 0; k < n / 2; ++k) a.m.push_back(2);
    if (n % 2) a.m.push_back(1);
    b.m.push_back(1);
    for (Index k = 0; k < (n - 1) / 2; ++k) b.m.push_back(2);
    if (n % 2 == 0) b.m.push_back(1);
    const bool oracle = sp::is_refinement(m, a) || sp::is_refinement(m, b);
    EXPECT_EQ(sp::cycle_spectrum_admissible(x), oracle) << trial;
  }
}

TEST(CycleAdmissible, AffineInvariance) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> pick(-2, 2);
  std::uniform_real_distribution<double> a(0.1, 10.0), c(-5.0, 5.0);
  for (int trial = 0; trial < 300; ++trial) {
    Vector x(3 + trial % 5);
    for (Index i = 0; i < x.size(); ++i) x(i) = pick(rng);
    std::sort(x.data(), x.data() + x.size());
    const Vector y = (a(rng) * x).array() + c(rng);
    EXPECT_EQ(sp::cycle_spectrum_admissible(x), sp::cycle_spectrum_admissible(y));
  }
}

TEST(Inertia, Examples) {
  const Matrix D = Vector(values({1, -1, 0})).asDiagonal();
  EXPECT_EQ(sp::pin(D), (sp::PartialInertia{1, 1}));
  EXPECT_EQ(sp::inertia(D), (sp::Inertia{1, 1, 1}));
  EXPECT_EQ(sp::rin(D), (sp::RefinedInertia{1, 1, 1, 0}));
  Matrix R(2, 2);
  R << 0, -1, 1, 0;
  EXPECT_EQ(sp::rin(R), (sp::RefinedInertia{0, 0, 0, 2}));
  EXPECT_EQ(sp::rin(sp::testing::rank_one_nilpotent()), (sp::RefinedInertia{0, 0, 3, 0}));
  EXPECT_THROW(sp::rin(Matrix::Zero(2, 3)), sp::InputError);
}

TEST(Inertia, ComponentsSumToOrder) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 1 + trial % 7;
    const Matrix A = sp::testing::random_square(n, 0.5, true, rng);
    const auto r = sp::rin(A);
    EXPECT_EQ(r.positive + r.negative + r.zero + r.imaginary, n);
    const auto in = sp::inertia(A);
    EXPECT_EQ(in.positive + in.negative + in.zero, n);
    EXPECT_EQ(in.zero, r.zero + r.imaginary);
  }
}
