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

#include "strongprops/arbitrary.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <unsupported/Eigen/AutoDiff>

#include "strongprops/io.hpp"

namespace strongprops {

// --- spectra ------------------------------------------------------------------

ComplexVector ConjInvariantSpectrum::values() const {
  ComplexVector v(size());
  Index k = 0;
  for (double r : reals) v(k++) = {r, 0.0};
  for (const auto& [a, b] : pairs) {
    v(k++) = {a, b};
    v(k++) = {a, -b};
  }
  return v;
}

double ConjInvariantSpectrum::squared_norm() const {
  double s = 0.0;
  for (double r : reals) s += r * r;
  for (const auto& [a, b] : pairs) s += 2.0 * (a * a + b * b);
  return s;
}

ConjInvariantSpectrum ConjInvariantSpectrum::scaled(double k) const {
  ConjInvariantSpectrum out = *this;
  for (double& r : out.reals) r *= k;
  for (auto& [a, b] : out.pairs) {
    a *= k;
    b *= k;
  }
  return out;
}

Vector ConjInvariantSpectrum::charpoly() const {
  // Multiply out real linear and quadratic factors, lowest degree first.
  std::vector<double> p{1.0};
  auto times = [&p](const std::vector<double>& f) {
    std::vector<double> out(p.size() + f.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += p[i] * f[j];
    p = std::move(out);
  };
  for (double r : reals) times({-r, 1.0});
  for (const auto& [a, b] : pairs) times({a * a + b * b, -2.0 * a, 1.0});
  Vector c(size());
  for (Index k = 0; k < size(); ++k) c(k) = p[std::size_t(k)];
  return c;
}

ConjInvariantSpectrum ConjInvariantSpectrum::zeros(Index n) {
  ConjInvariantSpectrum s;
  s.reals.assign(std::size_t(n), 0.0);
  return s;
}

std::string to_string(const ConjInvariantSpectrum& s) {
  std::string out = "{";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ", ";
    first = false;
  };
  for (double r : s.reals) {
    sep();
    out += io::format_double(r);
  }
  for (const auto& [a, b] : s.pairs) {
    sep();
    out += io::format_double(a) + "+-" + io::format_double(b) + "i";
  }
  return out + "}";
}

namespace {

double parse_number(std::string_view s, const std::string& token) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw InputError("bad spectrum token '" + token + "'");
  return v;
}

}  // namespace

ConjInvariantSpectrum parse_spectrum(const std::string& line) {
  ConjInvariantSpectrum s;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    if (token.back() != 'i') {
      s.reals.push_back(parse_number(token, token));
      continue;
    }
    const std::string_view body(token.data(), token.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t cut = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;)
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        cut = k;
        break;
      }
    double a = 0.0;
    std::string_view imag = body;
    if (cut != std::string_view::npos) {
      a = parse_number(body.substr(0, cut), token);
      imag = body.substr(cut);
    }
    double b = 1.0;
    if (imag == "+" || imag == "-" || imag.empty())
      b = 1.0;
    else
      b = std::abs(parse_number(imag, token));
    if (b == 0.0) throw InputError("spectrum token '" + token + "' has zero imaginary part");
    s.pairs.emplace_back(a, b);
  }
  return s;
}

// --- nilpotency ---------------------------------------------------------------

NilpotencyCheck check_nilpotent(const Matrix& A, const Tolerances& tol) {
  tol.validate();
  require_square(A, "nilpotency check");
  require_finite(A, "nilpotency check");
  const Index n = A.rows();
  const double scale = std::max(1.0, A.norm());
  NilpotencyCheck out;
  Matrix P = Matrix::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    P = P * A;
    if (out.index == 0 && P.norm() <= tol.nilpotent_tol * std::pow(scale, double(k))) out.index = k;
  }
  out.power_norm = P.norm();
  const Vector c = characteristic_polynomial(A);
  for (Index k = 0; k < n; ++k)
    out.max_charpoly_coeff = std::max(out.max_charpoly_coeff, std::abs(c(k)) / std::pow(scale, double(n - k)));
  const ComplexVector ev = eigenvalues(A);
  for (Index k = 0; k < n; ++k) out.max_schur_diagonal = std::max(out.max_schur_diagonal, std::abs(ev(k)));
  out.nilpotent = n > 0 && out.power_norm <= tol.nilpotent_tol * std::pow(scale, double(n)) &&
                  out.max_charpoly_coeff <= tol.nilpotent_tol;
  return out;
}

namespace {

// Orthogonal Q with Q^T A Q = [[N, X], [0, B]]: N strictly upper triangular
// on the generalized null space (built from the flag ker A, ker A^2, ...),
// B in real Schur form. Exact zeros on the diagonal of N avoid the
// sqrt(eps)-size diagonal a Schur solver leaves on defective zeros. With
// `nilpotent` set, every step keeps at least its smallest singular direction
// so an ill-conditioned nilpotent matrix still yields nz = n.
struct ZeroFirstSchur {
  Matrix Q;
  Matrix T;
  Index nz = 0;
  std::vector<SchurBlock> blocks;  // blocks of B, offset by nz
};

ZeroFirstSchur zero_first_schur(const Matrix& A, const Tolerances& tol, bool nilpotent = false) {
  const Index n = A.rows();
  const double thr = tol.nilpotent_tol * std::max(1.0, A.norm());
  Matrix U(n, 0);
  for (;;) {
    // Complement of span(U) and the part of A mapping into span(U).
    Matrix C;
    if (U.cols() == 0) {
      C = Matrix::Identity(n, n);
    } else {
      Eigen::JacobiSVD<Matrix> svd(Matrix(U.transpose()), Eigen::ComputeFullV);
      C = svd.matrixV().rightCols(n - U.cols());
    }
    if (C.cols() == 0) break;
    const Matrix R = A * C - U * (U.transpose() * A * C);
    Eigen::JacobiSVD<Matrix> svd(R, Eigen::ComputeFullV);
    Index rank = 0;
    for (Index k = 0; k < svd.singularValues().size(); ++k)
      if (svd.singularValues()(k) > thr) ++rank;
    if (nilpotent) rank = std::min(rank, C.cols() - 1);
    if (rank == C.cols()) break;
    const Matrix fresh = C * svd.matrixV().rightCols(C.cols() - rank);
    Matrix grown(n, U.cols() + fresh.cols());
    grown << U, fresh;
    U = grown;
  }
  ZeroFirstSchur out;
  out.nz = U.cols();
  out.Q.resize(n, n);
  if (out.nz < n) {
    Matrix C;
    if (out.nz == 0) {
      C = Matrix::Identity(n, n);
    } else {
      Eigen::JacobiSVD<Matrix> svd(Matrix(U.transpose()), Eigen::ComputeFullV);
      C = svd.matrixV().rightCols(n - out.nz);
    }
    const RealSchurForm rest = real_schur(Matrix(C.transpose() * A * C));
    out.Q << U, C * rest.Q;
    for (SchurBlock b : rest.blocks) {
      b.start += out.nz;
      out.blocks.push_back(b);
    }
  } else {
    out.Q = U;
  }
  out.T = out.Q.transpose() * A * out.Q;
  // Clear what is zero in exact arithmetic.
  for (Index j = 0; j < out.nz; ++j)
    for (Index i = j; i < n; ++i) out.T(i, j) = 0.0;
  for (Index j = out.nz; j < n; ++j)
    for (Index i = j + 1; i < n; ++i) {
      bool inside = false;
      for (const SchurBlock& b : out.blocks)
        if (b.size == 2 && b.start == j && i == j + 1) inside = true;
      if (!inside) out.T(i, j) = 0.0;
    }
  return out;
}

}  // namespace

Matrix nilpotent_nearby(const Matrix& A, const ConjInvariantSpectrum& spec, std::optional<double> epsilon,
                        const Tolerances& tol) {
  const NilpotencyCheck check = check_nilpotent(A, tol);
  if (!check.nilpotent) throw HypothesisFailure("matrix is not nilpotent");
  const Index n = A.rows();
  if (spec.size() != n) throw InputError("target spectrum must have n values");
  if (epsilon && !(spec.squared_norm() < *epsilon * *epsilon))
    throw InputError("target spectrum is too large: sum |lambda|^2 must be below epsilon^2");
  if (Index(2 * spec.pairs.size()) > n) throw InputError("more complex pairs than 2x2 diagonal slots");

  const ZeroFirstSchur S = zero_first_schur(A, tol, true);
  if (S.nz != n) throw HypothesisFailure("matrix is not nilpotent (generalized null space too small)");
  Matrix T = S.T;
  Index pos = 0;
  for (const auto& [a, b] : spec.pairs) {
    const double x = T(pos, pos + 1);
    double upper = b;
    double lower = -b;
    if (-b <= x && x < 0.0) {
      upper = -b;
      lower = b;
    } else if (std::abs(x) > b) {
      upper = x;
      lower = -b * b / x;
    }
    T(pos, pos) = a;
    T(pos + 1, pos + 1) = a;
    T(pos, pos + 1) = upper;
    T(pos + 1, pos) = lower;
    pos += 2;
  }
  for (double r : spec.reals) T(pos, pos) = r, ++pos;
  return S.Q * T * S.Q.transpose();
}

// --- certificates -------------------------------------------------------------

std::string to_string(CertificateKind kind) {
  return kind == CertificateKind::SpectrallyArbitrary ? "spectrally-arbitrary" : "inertially-arbitrary";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Complete: return "complete";
    case Verdict::Incomplete: return "incomplete";
    case Verdict::HypothesisFailed: return "hypothesis-failed";
  }
  return "?";
}

namespace {

void check_membership(Hypothesis& h, const SignPattern& P, const Matrix& A, const Tolerances& tol) {
  require_square(A, "witness");
  require_finite(A, "witness");
  if (A.rows() != P.order()) throw InputError("witness size does not match the pattern");
  h.in_pattern = matrix_in_sign_class(A, P, tol);
  if (h.in_pattern) {
    h.nssp = verify_nssp(A, P, tol);
  } else {
    h.failure = "witness is not in Q(P)";
  }
}

void finish(Certificate& c) {
  if (!c.hypothesis.holds) {
    c.verdict = Verdict::HypothesisFailed;
    return;
  }
  const bool all = std::all_of(c.evidence.begin(), c.evidence.end(), [](const Evidence& e) { return e.ok; });
  c.verdict = all ? Verdict::Complete : Verdict::Incomplete;
}

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

std::string inertia_string(const Inertia& in) {
  return "(" + std::to_string(in.positive) + "," + std::to_string(in.negative) + "," + std::to_string(in.zero) + ")";
}

}  // namespace

Certificate certify_spectrally_arbitrary(const SignPattern& P, const Matrix& A,
                                         const std::vector<ConjInvariantSpectrum>& targets,
                                         const Tolerances& tol, const std::optional<SignPattern>& superpattern) {
  tol.validate();
  Certificate c;
  c.kind = CertificateKind::SpectrallyArbitrary;
  c.pattern = P;
  c.superpattern = superpattern;
  c.witness = A;
  Hypothesis& h = c.hypothesis;
  check_membership(h, P, A, tol);
  h.nilpotency = check_nilpotent(A, tol);
  if (h.failure.empty() && !h.nilpotency.nilpotent) h.failure = "witness is not nilpotent";
  if (h.failure.empty() && !h.nssp.holds) h.failure = "witness does not have the nSSP";
  h.holds = h.failure.empty();
  if (!h.holds) {
    finish(c);
    return c;
  }
  if (superpattern && superpattern->order() != P.order())
    throw InputError("superpattern size does not match the pattern");

  Matrix W = A;
  SignPattern target_pattern = P;
  std::string setup_error;
  if (superpattern) {
    target_pattern = *superpattern;
    try {
      W = realize_superpattern(A, P, *superpattern, 0.0, tol).a_prime;
    } catch (const Error& e) {
      setup_error = std::string("superpattern step failed: ") + e.what();
    }
  }

  const Index n = A.rows();
  for (const ConjInvariantSpectrum& t : targets) {
    Evidence e;
    e.spectrum = t;
    e.target = to_string(t);
    if (t.size() != n) {
      e.error = "target has " + std::to_string(t.size()) + " values, expected " + std::to_string(n);
      c.evidence.push_back(std::move(e));
      continue;
    }
    e.target_charpoly = to_std(t.charpoly());
    if (!setup_error.empty()) {
      e.error = setup_error;
      c.evidence.push_back(std::move(e));
      continue;
    }
    try {
      const double eps = 0.5 * trust_radius(W, tol);
      double k = 1.0;
      while (!(t.squared_norm() / (k * k) < eps * eps)) k *= 2.0;
      e.scale = k;
      const Matrix M = nilpotent_nearby(W, t.scaled(1.0 / k), eps, tol);
      const RealizationResult r = realize_similar(W, target_pattern, M, tol);
      e.realized = k * r.a_prime;
      const Vector got = characteristic_polynomial(e.realized);
      e.achieved_charpoly = to_std(got);
      const Vector want = t.charpoly();
      const double ref = std::max(1.0, want.size() ? want.cwiseAbs().maxCoeff() : 0.0);
      e.residual = n ? (got - want).cwiseAbs().maxCoeff() / ref : 0.0;
      const bool in_class = matrix_in_sign_class(e.realized, target_pattern, tol);
      e.ok = in_class && e.residual <= kCharpolyTolerance;
      if (!in_class)
        e.error = "realized matrix is not in the pattern class";
      else if (!e.ok)
        e.error = "characteristic polynomial residual above tolerance";
    } catch (const Error& err) {
      e.error = err.what();
    }
    c.evidence.push_back(std::move(e));
  }
  finish(c);
  return c;
}

Matrix raise_nilpotent_index(const Matrix& A, const SignPattern& P, const Tolerances& tol) {
  tol.validate();
  Hypothesis h;
  check_membership(h, P, A, tol);
  if (!h.failure.empty()) throw HypothesisFailure(h.failure);
  const NilpotencyCheck check = check_nilpotent(A, tol);
  if (!check.nilpotent) throw HypothesisFailure("matrix is not nilpotent");
  const Index n = A.rows();
  if (check.index == n) return A;
  if (!h.nssp.holds) throw HypothesisFailure("matrix does not have the nSSP");

  const ZeroFirstSchur S = zero_first_schur(A, tol, true);
  if (S.nz != n) throw HypothesisFailure("matrix is not nilpotent (generalized null space too small)");
  Matrix T = S.T;
  const double delta = 0.25 * trust_radius(A, tol) / std::sqrt(double(std::max<Index>(1, n - 1)));
  for (Index i = 0; i + 1 < n; ++i) T(i, i + 1) += T(i, i + 1) >= 0.0 ? delta : -delta;
  const Matrix M = S.Q * T * S.Q.transpose();
  const Matrix Ap = realize_similar(A, P, M, tol).a_prime;
  const NilpotencyCheck after = check_nilpotent(Ap, tol);
  if (!after.nilpotent || after.index != n)
    throw NumericalFailure("realized matrix does not have nilpotency index n");
  return Ap;
}

std::vector<Inertia> all_inertias(Index n) {
  std::vector<Inertia> out;
  for (Index p = 0; p <= n; ++p)
    for (Index q = 0; p + q <= n; ++q) out.push_back({p, q, n - p - q});
  return out;
}

Certificate certify_inertially_arbitrary(const SignPattern& P, const Matrix& A, const Tolerances& tol) {
  tol.validate();
  Certificate c;
  c.kind = CertificateKind::InertiallyArbitrary;
  c.pattern = P;
  c.witness = A;
  Hypothesis& h = c.hypothesis;
  check_membership(h, P, A, tol);
  if (!h.failure.empty()) {
    finish(c);
    return c;
  }

  const Index n = A.rows();
  const ZeroFirstSchur S = zero_first_schur(A, tol);
  const double zero = eigen_zero_threshold(A, tol);
  RefinedInertia ri{0, 0, S.nz, 0};
  std::vector<Index> pair_blocks;
  for (const SchurBlock& b : S.blocks) {
    if (b.size == 1) {
      const double v = S.T(b.start, b.start);
      if (std::abs(v) <= zero)
        ++ri.zero;
      else
        ++(v > 0 ? ri.positive : ri.negative);
      continue;
    }
    const double re = 0.5 * (S.T(b.start, b.start) + S.T(b.start + 1, b.start + 1));
    if (std::abs(re) <= zero) {
      ri.imaginary += 2;
      pair_blocks.push_back(b.start);
    } else {
      ri.positive += re > 0 ? 2 : 0;
      ri.negative += re < 0 ? 2 : 0;
    }
  }
  h.refined_inertia = ri;
  if (ri.positive + ri.negative > 0 || ri.zero != S.nz)
    h.failure = "not every eigenvalue has zero real part (up to a pure-imaginary pair)";
  else if (ri.zero < 2)
    h.failure = "fewer than two zero eigenvalues";
  else if (!h.nssp.holds)
    h.failure = "witness does not have the nSSP";
  h.holds = h.failure.empty();
  if (!h.holds) {
    finish(c);
    return c;
  }

  // Base: exact zeros in the nilpotent block, pure-imaginary pairs centred.
  Matrix T0 = S.T;
  for (Index z = 0; z < S.nz; ++z) T0(z, z) = 0.0;
  for (Index s : pair_blocks) {
    const double re = 0.5 * (T0(s, s) + T0(s + 1, s + 1));
    T0(s, s) -= re;
    T0(s + 1, s + 1) -= re;
  }
  const double delta = 0.25 * trust_radius(A, tol) / std::sqrt(double(n));

  for (const Inertia& target : all_inertias(n)) {
    Evidence e;
    e.inertia = target;
    e.target = inertia_string(target);
    try {
      Matrix T = T0;
      std::vector<Index> pairs_left = pair_blocks;
      Index zeros_used = 0;
      auto push = [&](Index count, double sign) {
        Index take_pairs = 0;
        Index take_zeros = 0;
        if (Index(2 * pairs_left.size()) >= count) {
          take_pairs = count / 2;
          take_zeros = count % 2;
        } else {
          take_pairs = Index(pairs_left.size());
          take_zeros = count - 2 * take_pairs;
        }
        if (zeros_used + take_zeros > S.nz) throw UnreachableTarget("not enough zero eigenvalues to move");
        for (Index k = 0; k < take_pairs; ++k) {
          const Index s = pairs_left.front();
          pairs_left.erase(pairs_left.begin());
          T(s, s) += sign * delta;
          T(s + 1, s + 1) += sign * delta;
        }
        for (Index k = 0; k < take_zeros; ++k, ++zeros_used)
          T(zeros_used, zeros_used) = sign * delta * (1.0 + double(zeros_used) / double(n));
      };
      push(target.positive, 1.0);
      push(target.negative, -1.0);
      const Matrix M = S.Q * T * S.Q.transpose();
      const RealizationResult r = realize_similar(A, P, M, tol);
      e.realized = r.a_prime;
      e.residual = r.final_residual;
      e.target_charpoly = to_std(characteristic_polynomial(M));
      e.achieved_charpoly = to_std(characteristic_polynomial(r.a_prime));
      e.achieved_inertia = inertia(r.a_prime, tol);
      const bool in_class = matrix_in_sign_class(r.a_prime, P, tol);
      e.ok = in_class && *e.achieved_inertia == target;
      if (!in_class)
        e.error = "realized matrix is not in the pattern class";
      else if (!e.ok)
        e.error = "achieved inertia " + inertia_string(*e.achieved_inertia) + " differs from target";
    } catch (const Error& err) {
      e.error = err.what();
    }
    c.evidence.push_back(std::move(e));
  }
  finish(c);
  return c;
}

// --- nilpotent-Jacobian ---------------------------------------------------------

NilpotentJacobian nj_jacobian_diagnostic(const Matrix& A, const std::vector<std::pair<Index, Index>>& cells,
                                         const Tolerances& tol) {
  tol.validate();
  require_square(A, "nilpotent-Jacobian diagnostic");
  const Index n = A.rows();
  if (Index(cells.size()) != n) throw InputError("the diagnostic needs exactly n cells");
  if (std::set<std::pair<Index, Index>>(cells.begin(), cells.end()).size() != cells.size())
    throw InputError("cells must be distinct");
  const double zero = zero_threshold(A, tol);
  for (const auto& [i, j] : cells) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw InputError("cell outside the matrix");
    if (std::abs(A(i, j)) <= zero)
      throw PatternMismatch("cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") is outside the support of A");
  }
  if (!check_nilpotent(A, tol).nilpotent) throw HypothesisFailure("matrix is not nilpotent");

  using AD = Eigen::AutoDiffScalar<Vector>;
  MatrixX<AD> X(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) X(i, j) = AD(A(i, j), Vector::Zero(n));
  for (Index k = 0; k < n; ++k) X(cells[std::size_t(k)].first, cells[std::size_t(k)].second).derivatives()(k) = 1.0;
  const VectorX<AD> c = charpoly_leverrier(X);

  NilpotentJacobian out;
  out.cells = cells;
  out.jacobian.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    const Vector& d = c(k).derivatives();
    if (d.size())
      out.jacobian.row(k) = d.transpose();
    else
      out.jacobian.row(k).setZero();
  }
  out.rank = numerical_rank(out.jacobian, tol);
  out.surjective = out.rank == n;
  return out;
}

}  // namespace strongprops
