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

// Sign-pattern certification from a nilpotent witness with the nSSP:
// explicit nearby matrices with a prescribed spectrum, spectrally and
// inertially arbitrary certificates, index raising, and the classic
// nilpotent-Jacobian test for comparison.

#ifndef STRONGPROPS_ARBITRARY_HPP
#define STRONGPROPS_ARBITRARY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongprops/bifurcate.hpp"

namespace strongprops {

// A multiset of n complex numbers closed under conjugation.
struct ConjInvariantSpectrum {
  std::vector<double> reals;
  std::vector<std::pair<double, double>> pairs;  // (a, b), b > 0, for a +- bi

  Index size() const { return Index(reals.size() + 2 * pairs.size()); }
  ComplexVector values() const;
  // sum |lambda_i|^2
  double squared_norm() const;
  ConjInvariantSpectrum scaled(double k) const;
  // c_0..c_{n-1} of prod (x - lambda_i); real by construction.
  Vector charpoly() const;

  static ConjInvariantSpectrum zeros(Index n);
};

std::string to_string(const ConjInvariantSpectrum& s);

// Whitespace-separated tokens; "a+bi" / "a-bi" / "bi" stands for the pair
// a +- |b| i, anything else is a real eigenvalue.
ConjInvariantSpectrum parse_spectrum(const std::string& line);

struct NilpotencyCheck {
  bool nilpotent = false;
  double power_norm = 0.0;          // ||A^n||_F
  double max_charpoly_coeff = 0.0;  // max_k |c_k| / max(1, ||A||_F)^(n-k)
  double max_schur_diagonal = 0.0;  // largest |eigenvalue| from the Schur form
  Index index = 0;                  // smallest k with A^k ~ 0 (0 if none <= n)
};

NilpotencyCheck check_nilpotent(const Matrix& A, const Tolerances& tol = {});

// Perturbs the real Schur form of nilpotent A block by block so the result
// has spectrum `spec` and ||M - A||_F^2 <= sum |lambda_i|^2. Complex pairs
// take the lowest adjacent diagonal slots, reals the rest. With `epsilon`
// the target must satisfy sum |lambda_i|^2 < epsilon^2.
Matrix nilpotent_nearby(const Matrix& A, const ConjInvariantSpectrum& spec,
                        std::optional<double> epsilon = std::nullopt, const Tolerances& tol = {});

enum class CertificateKind { SpectrallyArbitrary, InertiallyArbitrary };
enum class Verdict { Complete, Incomplete, HypothesisFailed };

std::string to_string(CertificateKind kind);
std::string to_string(Verdict verdict);

struct Hypothesis {
  bool in_pattern = false;
  NilpotencyCheck nilpotency;                 // spectrally arbitrary only
  std::optional<RefinedInertia> refined_inertia;  // inertially arbitrary only
  StrongPropertyReport nssp;
  bool holds = false;
  std::string failure;  // empty when holds
};

struct Evidence {
  std::string target;  // human-readable target
  std::optional<ConjInvariantSpectrum> spectrum;
  std::optional<Inertia> inertia;
  double scale = 1.0;
  Matrix realized;
  std::vector<double> target_charpoly;
  std::vector<double> achieved_charpoly;
  std::optional<Inertia> achieved_inertia;
  double residual = 0.0;
  bool ok = false;
  std::string error;
};

// Evidence is sampled: the certificate checks the hypothesis and realizes
// the supplied targets, it does not prove the statement for all targets.
struct Certificate {
  CertificateKind kind = CertificateKind::SpectrallyArbitrary;
  std::string label = "hypothesis verified + sampled realizations";
  SignPattern pattern;
  std::optional<SignPattern> superpattern;
  Matrix witness;
  Hypothesis hypothesis;
  std::vector<Evidence> evidence;
  Verdict verdict = Verdict::HypothesisFailed;
};

// Char-poly agreement required of each spectral evidence entry, relative to
// max(1, max |c_k| of the target).
inline constexpr double kCharpolyTolerance = 1e-7;

// Realizes every target in Q(P) (or Q(superpattern) when given) from the
// nilpotent witness A: scale the target down by a power of two, build a
// nearby matrix with nilpotent_nearby, realize it similarly and scale back.
Certificate certify_spectrally_arbitrary(const SignPattern& P, const Matrix& A,
                                         const std::vector<ConjInvariantSpectrum>& targets,
                                         const Tolerances& tol = {},
                                         const std::optional<SignPattern>& superpattern = std::nullopt);

// Returns a nilpotent A' in Q(P) of index n with the nSSP. A itself comes
// back unchanged when its index is already n; the nSSP is only required
// when a perturbation is needed. Throws HypothesisFailure or the
// realization error.
Matrix raise_nilpotent_index(const Matrix& A, const SignPattern& P, const Tolerances& tol = {});

// Zero and pure-imaginary eigenvalues of A (all real parts zero, at least
// two zero eigenvalues, nSSP) are pushed left or right to hit every inertia
// (p, q, n - p - q).
Certificate certify_inertially_arbitrary(const SignPattern& P, const Matrix& A, const Tolerances& tol = {});

// Targets (p, q, n - p - q) in the order p = 0..n, q = 0..n-p.
std::vector<Inertia> all_inertias(Index n);

struct NilpotentJacobian {
  std::vector<std::pair<Index, Index>> cells;
  Matrix jacobian;  // row k: gradient of c_k over the chosen cells
  Index rank = 0;
  bool surjective = false;
};

// Jacobian at B = O of (c_0, ..., c_{n-1}) of A + B with B supported on n
// chosen cells of A's support, by forward-mode automatic differentiation.
NilpotentJacobian nj_jacobian_diagnostic(const Matrix& A, const std::vector<std::pair<Index, Index>>& cells,
                                         const Tolerances& tol = {});

}  // namespace strongprops

#endif  // STRONGPROPS_ARBITRARY_HPP
