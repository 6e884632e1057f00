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

#include "strongprops/bifurcate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace strongprops {

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::SSP: return "SSP";
    case MapKind::SMP: return "SMP";
    case MapKind::SAP: return "SAP";
    case MapKind::NSSPSimilarity: return "nSSP-similarity";
    case MapKind::NSSPSuperpattern: return "nSSP-superpattern";
  }
  return "?";
}

// --- PerturbationMap --------------------------------------------------------

PerturbationMap::PerturbationMap(MapKind kind, Matrix A, PatternBasis b, PatternBasis group, int q,
                                 std::variant<Graph, SignPattern> pattern)
    : kind_(kind),
      base_(std::move(A)),
      b_basis_(std::move(b)),
      group_basis_(std::move(group)),
      q_(q),
      pattern_(std::move(pattern)) {}

namespace {

Matrix checked_symmetric(const Matrix& A, const Graph& G) {
  if (A.rows() != G.order()) throw InputError("matrix order does not match graph order");
  return symmetrized(A);
}

Matrix checked_square(const Matrix& A, const SignPattern& P) {
  require_square(A, "perturbation map");
  require_finite(A, "perturbation map");
  if (A.rows() != P.order()) throw InputError("matrix order does not match pattern order");
  return A;
}

}  // namespace

PerturbationMap PerturbationMap::ssp(const Matrix& A, const Graph& G) {
  const Index n = G.order();
  return {MapKind::SSP, checked_symmetric(A, G), subspace_basis(subspace::GraphClosure{G}),
          subspace_basis(subspace::Skew{n}), 0, G};
}

PerturbationMap PerturbationMap::smp(const Matrix& A, const Graph& G, int q) {
  const Index n = G.order();
  if (q < 1 || q > n) throw InputError("SMP map: q must lie in [1, n]");
  return {MapKind::SMP, checked_symmetric(A, G), subspace_basis(subspace::GraphClosure{G}),
          subspace_basis(subspace::Skew{n}), q, G};
}

PerturbationMap PerturbationMap::sap(const Matrix& A, const Graph& G) {
  const Index n = G.order();
  return {MapKind::SAP, checked_symmetric(A, G), subspace_basis(subspace::GraphClosure{G}),
          subspace_basis(subspace::Full{n}), 0, G};
}

PerturbationMap PerturbationMap::nssp_similarity(const Matrix& A, const SignPattern& P) {
  const Index n = P.order();
  return {MapKind::NSSPSimilarity, checked_square(A, P), subspace_basis(subspace::SignTangent{P}),
          subspace_basis(subspace::Full{n}), 0, P};
}

PerturbationMap PerturbationMap::nssp_superpattern(const Matrix& A, const SignPattern& P) {
  const Index n = P.order();
  return {MapKind::NSSPSuperpattern, checked_square(A, P), subspace_basis(subspace::SignTangent{P}),
          subspace_basis(subspace::Full{n}), 0, P};
}

bool PerturbationMap::symmetric() const {
  return kind_ == MapKind::SSP || kind_ == MapKind::SMP || kind_ == MapKind::SAP;
}

Index PerturbationMap::ambient_dim() const {
  const Index n = order();
  return symmetric() ? n * (n + 1) / 2 : n * n;
}

Matrix PerturbationMap::b_part(const Vector& p) const { return b_basis_.combine(p.head(b_dim())); }

Matrix PerturbationMap::group_part(const Vector& p) const {
  return group_basis_.combine(p.segment(b_dim(), group_dim()));
}

Vector PerturbationMap::coeff_part(const Vector& p) const { return p.tail(coeff_dim()); }

Vector PerturbationMap::coordinates(const Matrix& X) const {
  return symmetric() ? symmetric_coordinates(X) : Vector(vec(X));
}

// --- evaluation and derivative ------------------------------------------------

namespace {

void require_params(const PerturbationMap& F, const Vector& p) {
  if (p.size() != F.param_dim())
    throw InputError("perturbation map expects " + std::to_string(F.param_dim()) +
                     " parameters, got " + std::to_string(p.size()));
  if (!p.allFinite()) throw InputError("perturbation map parameters are not finite");
}

void require_small_l(const Matrix& L) {
  if (!(L.norm() < 0.5))
    throw InputError("||L||_F = " + std::to_string(L.norm()) + " is outside the domain ||L||_F < 0.5");
}

std::vector<Matrix> powers(const Matrix& M, Index count) {
  std::vector<Matrix> out;
  Matrix P = Matrix::Identity(M.rows(), M.cols());
  for (Index k = 0; k < count; ++k) {
    out.push_back(P);
    P = P * M;
  }
  return out;
}

// p(M) = M + sum_k c_k M^k
Matrix apply_poly(const Matrix& M, const Vector& c) {
  Matrix out = M;
  const auto pw = powers(M, c.size());
  for (Index k = 0; k < c.size(); ++k) out += c(k) * pw[std::size_t(k)];
  return out;
}

// Directional derivative of p at M along D.
Matrix poly_derivative(const Matrix& M, const Vector& c, const Matrix& D) {
  Matrix out = D;
  const auto pw = powers(M, c.size());
  for (Index k = 1; k < c.size(); ++k) {
    Matrix dk = Matrix::Zero(M.rows(), M.cols());
    for (Index j = 0; j < k; ++j) dk += pw[std::size_t(j)] * D * pw[std::size_t(k - 1 - j)];
    out += c(k) * dk;
  }
  return out;
}

Matrix derivative_at_zero(const PerturbationMap& F) {
  const Matrix& A = F.base();
  const Index n = F.order();
  Matrix J(F.ambient_dim(), F.param_dim());
  Index col = 0;
  for (const Matrix& b : F.b_basis().basis) J.col(col++) = F.coordinates(b);
  for (const Matrix& G : F.group_basis().basis) {
    switch (F.kind()) {
      case MapKind::SSP:
      case MapKind::SMP:
      case MapKind::SAP:
        J.col(col++) = F.coordinates(G.transpose() * A + A * G);
        break;
      case MapKind::NSSPSimilarity:
      case MapKind::NSSPSuperpattern:
        J.col(col++) = F.coordinates(A * G - G * A);
        break;
    }
  }
  Matrix P = Matrix::Identity(n, n);
  for (Index k = 0; k < F.coeff_dim(); ++k) {
    J.col(col++) = F.coordinates(P);
    P = P * A;
  }
  return J;
}

}  // namespace

Matrix evaluate_map(const PerturbationMap& F, const Vector& params) {
  require_params(F, params);
  const Matrix& A = F.base();
  const Index n = F.order();
  const Matrix B = F.b_part(params);
  const Matrix G = F.group_part(params);
  const Matrix I = Matrix::Identity(n, n);
  switch (F.kind()) {
    case MapKind::SSP:
      return matrix_exp(Matrix(-G)) * (A + B) * matrix_exp(G);
    case MapKind::SMP:
      return matrix_exp(Matrix(-G)) * apply_poly(A + B, F.coeff_part(params)) * matrix_exp(G);
    case MapKind::SAP:
      require_small_l(G);
      return (I + G).transpose() * (A + B) * (I + G);
    case MapKind::NSSPSimilarity:
      require_small_l(G);
      return (I + G).partialPivLu().solve(Matrix((A + B) * (I + G)));
    case MapKind::NSSPSuperpattern:
      require_small_l(G);
      return Matrix((I + G).partialPivLu().solve(Matrix(A * (I + G)))) + B;
  }
  return A;
}

Matrix derivative_at(const PerturbationMap& F, const Vector& params) {
  require_params(F, params);
  if (params.isZero(0.0)) return derivative_at_zero(F);

  const Matrix& A = F.base();
  const Index n = F.order();
  const Matrix B = F.b_part(params);
  const Matrix G = F.group_part(params);
  const Vector c = F.coeff_part(params);
  const Matrix I = Matrix::Identity(n, n);
  const Matrix M = A + B;

  Matrix J(F.ambient_dim(), F.param_dim());
  Index col = 0;
  switch (F.kind()) {
    case MapKind::SSP:
    case MapKind::SMP: {
      const Matrix E = matrix_exp(G);
      const Matrix Einv = matrix_exp(Matrix(-G));
      const Matrix PM = F.kind() == MapKind::SMP ? apply_poly(M, c) : M;
      for (const Matrix& b : F.b_basis().basis) {
        const Matrix db = F.kind() == MapKind::SMP ? poly_derivative(M, c, b) : b;
        J.col(col++) = F.coordinates(Einv * db * E);
      }
      for (const Matrix& D : F.group_basis().basis) {
        const Matrix dE = exp_frechet(G, D);
        const Matrix dEinv = exp_frechet(Matrix(-G), Matrix(-D));
        J.col(col++) = F.coordinates(dEinv * PM * E + Einv * PM * dE);
      }
      const auto pw = powers(M, c.size());
      for (Index k = 0; k < c.size(); ++k) J.col(col++) = F.coordinates(Einv * pw[std::size_t(k)] * E);
      break;
    }
    case MapKind::SAP: {
      require_small_l(G);
      const Matrix S = I + G;
      for (const Matrix& b : F.b_basis().basis) J.col(col++) = F.coordinates(S.transpose() * b * S);
      for (const Matrix& D : F.group_basis().basis)
        J.col(col++) = F.coordinates(D.transpose() * M * S + S.transpose() * M * D);
      break;
    }
    case MapKind::NSSPSimilarity:
    case MapKind::NSSPSuperpattern: {
      require_small_l(G);
      const Matrix S = I + G;
      const Matrix W = S.inverse();
      const bool sim = F.kind() == MapKind::NSSPSimilarity;
      const Matrix& core = sim ? M : A;
      for (const Matrix& b : F.b_basis().basis) J.col(col++) = F.coordinates(sim ? Matrix(W * b * S) : b);
      for (const Matrix& D : F.group_basis().basis)
        J.col(col++) = F.coordinates(-W * D * W * core * S + W * core * D);
      break;
    }
  }
  return J;
}

bool surjective_at_zero(const PerturbationMap& F, const Tolerances& tol) {
  return numerical_rank(derivative_at(F, Vector::Zero(F.param_dim())), tol) == F.ambient_dim();
}

// --- solving ------------------------------------------------------------------

double trust_radius(const Matrix& A, const Tolerances& tol) {
  return tol.trust_factor * (1.0 + A.norm());
}

namespace {

struct Solved {
  RealizationResult result;
  Vector params;
};

bool retryable(const Error& e) {
  return dynamic_cast<const NoConvergence*>(&e) || dynamic_cast<const PatternViolation*>(&e) ||
         dynamic_cast<const PropertyLost*>(&e);
}

StrongPropertyReport recheck(const PerturbationMap& F, const Matrix& Ap, const Tolerances& tol) {
  switch (F.kind()) {
    case MapKind::SSP: return verify_ssp(Ap, std::get<Graph>(F.pattern()), tol);
    case MapKind::SMP: return verify_smp(Ap, std::get<Graph>(F.pattern()), tol);
    case MapKind::SAP: return verify_sap(Ap, std::get<Graph>(F.pattern()), tol);
    default: return verify_nssp(Ap, tol);
  }
}

double smallest_support_entry(const Matrix& Ap, const std::variant<Graph, SignPattern>& pat) {
  double best = std::numeric_limits<double>::infinity();
  if (const Graph* G = std::get_if<Graph>(&pat)) {
    for (const auto& [i, j] : G->edges()) best = std::min(best, std::abs(Ap(i, j)));
  } else {
    const SignPattern& P = std::get<SignPattern>(pat);
    for (Index i = 0; i < P.order(); ++i)
      for (Index j = 0; j < P.order(); ++j)
        if (P(i, j) != Sign::Zero) best = std::min(best, std::abs(Ap(i, j)));
  }
  return std::isfinite(best) ? best : 0.0;
}

Solved solve_internal(const PerturbationMap& F, const Matrix& M, const Tolerances& tol,
                      std::optional<double> trust) {
  tol.validate();
  const Matrix& A = F.base();
  const Index n = F.order();
  if (M.rows() != n || M.cols() != n) throw InputError("target matrix has the wrong size");
  require_finite(M, "target matrix");
  if (F.symmetric()) (void)symmetrized(M);

  const double radius = trust.value_or(trust_radius(A, tol));
  const double distance = (M - A).norm();
  if (distance > radius)
    throw NoConvergence("target is outside the trust radius (" + std::to_string(distance) + " > " +
                            std::to_string(radius) + ")",
                        distance);
  if (!surjective_at_zero(F, tol))
    throw SurjectivityFailure(to_string(F.kind()) +
                              " map: derivative at zero is not surjective; the base matrix lacks the "
                              "matching strong property");

  Solved out;
  RealizationResult& r = out.result;
  Vector p = Vector::Zero(F.param_dim());
  const double stop = tol.newton_tol * std::max(1.0, M.norm());
  double best = std::numeric_limits<double>::infinity();
  double residual = 0.0;
  Index it = 0;
  for (;; ++it) {
    Matrix value;
    try {
      value = evaluate_map(F, p);
    } catch (const InputError& e) {
      throw NoConvergence(std::string("Gauss-Newton left the map domain: ") + e.what(), best);
    }
    const Matrix R = M - value;
    residual = R.norm();
    r.trace.push_back({0, it, residual, 1.0});
    best = std::min(best, residual);
    if (residual <= stop) break;
    if (it >= tol.max_iter || !std::isfinite(residual) || residual > 1e3 * std::max(distance, stop))
      throw NoConvergence("Gauss-Newton did not converge (best residual " + std::to_string(best) + ")",
                          best);
    Matrix J;
    try {
      J = derivative_at(F, p);
    } catch (const InputError& e) {
      throw NoConvergence(std::string("Gauss-Newton left the map domain: ") + e.what(), best);
    }
    p += lstsq_min_norm(J, F.coordinates(R), tol);
  }
  r.iterations = it;
  r.final_residual = residual;
  r.last_target = M;
  r.waypoints = 1;

  Matrix Ap = F.kind() == MapKind::NSSPSuperpattern ? Matrix(M - F.b_part(p)) : Matrix(A + F.b_part(p));
  std::variant<Graph, SignPattern> required = F.pattern();
  bool in_class = false;
  if (F.symmetric()) {
    Ap = (Ap + Ap.transpose()) / 2.0;
    in_class = matrix_in_graph_class(Ap, std::get<Graph>(required), tol);
  } else {
    if (F.kind() == MapKind::NSSPSuperpattern) required = SignPattern::of(M, tol);
    in_class = matrix_in_sign_class(Ap, std::get<SignPattern>(required), tol);
  }
  r.a_prime = Ap;
  r.pattern_check = in_class;
  r.smallest_support_entry = smallest_support_entry(Ap, required);
  if (!in_class) throw PatternViolation("realized matrix left the required pattern class; target too far");

  r.property_recheck = recheck(F, Ap, tol);
  if (!r.property_recheck.holds)
    throw PropertyLost(to_string(r.property_recheck.property) + " does not hold at the realized matrix");
  out.params = std::move(p);
  return out;
}

// Accumulates per-waypoint solves into one result.
struct Walk {
  RealizationResult total;

  void absorb(RealizationResult step, double size) {
    const Index w = total.waypoints;
    for (TraceEntry e : step.trace) {
      e.waypoint = w;
      e.step = size;
      total.trace.push_back(e);
    }
    total.iterations += step.iterations;
    total.waypoints += 1;
    total.a_prime = std::move(step.a_prime);
    total.last_target = std::move(step.last_target);
    total.final_residual = step.final_residual;
    total.pattern_check = step.pattern_check;
    total.smallest_support_entry = step.smallest_support_entry;
    total.property_recheck = std::move(step.property_recheck);
  }
};

// Walks t from 0 to 1 in `steps` equal pieces, halving the piece on a
// retryable failure.
template <class Step>
void homotopy(Walk& walk, Index steps, const Tolerances& tol, Step&& step) {
  double t = 0.0;
  double h = 1.0 / double(std::max<Index>(1, steps));
  while (t < 1.0) {
    const double tn = (t + h >= 1.0 - 1e-12) ? 1.0 : t + h;
    try {
      walk.absorb(step(tn), tn - t);
      t = tn;
    } catch (const Error& e) {
      if (!retryable(e) || ++walk.total.halvings > tol.max_halvings) throw;
      h /= 2.0;
    }
  }
}

// Retries attempt(size) with halved size on a retryable failure.
template <class Attempt>
void shrinking(Walk& walk, double size, const Tolerances& tol, Attempt&& attempt) {
  for (;;) {
    try {
      walk.absorb(attempt(size), size);
      return;
    } catch (const Error& e) {
      if (!retryable(e) || ++walk.total.halvings > tol.max_halvings) throw;
      size /= 2.0;
    }
  }
}

RealizationResult unchanged(const Matrix& A, StrongPropertyReport report,
                            const std::variant<Graph, SignPattern>& pat) {
  RealizationResult r;
  r.a_prime = A;
  r.last_target = A;
  r.pattern_check = true;
  r.smallest_support_entry = smallest_support_entry(A, pat);
  r.property_recheck = std::move(report);
  return r;
}

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

std::vector<double> to_std(const OrderedMultiplicityList& m) { return {m.m.begin(), m.m.end()}; }

void require_base_property(const StrongPropertyReport& r) {
  if (!r.holds)
    throw SurjectivityFailure("base matrix lacks the " + to_string(r.property) +
                              "; the bifurcation map is not surjective");
}

void require_graph_class(const Matrix& A, const Graph& G, const Tolerances& tol) {
  if (!matrix_in_graph_class(A, G, tol)) throw PatternMismatch("base matrix is not in S(G)");
}

Matrix spectral_target(const Matrix& base, const Vector& values) {
  const EigenDecomposition e = sym_eig(base);
  const Matrix M = e.eigenvectors * values.asDiagonal() * e.eigenvectors.transpose();
  return (M + M.transpose()) / 2.0;
}

double min_cluster_gap(const Vector& ev, const std::vector<std::pair<Index, Index>>& clusters) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t c = 1; c < clusters.size(); ++c)
    gap = std::min(gap, ev(clusters[c].first) - ev(clusters[c].first - 1));
  return gap;
}

}  // namespace

RealizationResult solve_to_target(const PerturbationMap& F, const Matrix& M, const Tolerances& tol,
                                  std::optional<double> trust) {
  RealizationResult r = solve_internal(F, M, tol, trust).result;
  r.target_kind = "matrix";
  return r;
}

// --- symmetric realizations ---------------------------------------------------

RealizationResult realize_spectrum(const Matrix& A, const Graph& G, const Vector& target,
                                   const Tolerances& tol, const RealizeOptions& opts) {
  tol.validate();
  require_graph_class(A, G, tol);
  const Matrix A0 = symmetrized(A);
  const Index n = A0.rows();
  if (target.size() != n) throw InputError("target spectrum must have n values");
  if (!target.allFinite()) throw InputError("target spectrum is not finite");
  Vector mu = target;
  std::sort(mu.data(), mu.data() + n);
  const Vector lam0 = sym_eig(A0).eigenvalues;

  StrongPropertyReport base = verify_ssp(A0, G, tol);
  require_base_property(base);

  Walk walk;
  const double distance = (mu - lam0).norm();
  if (distance == 0.0) {
    walk.total = unchanged(A0, std::move(base), G);
  } else {
    Index steps = opts.waypoints;
    if (steps <= 0) steps = Index(std::ceil(distance / trust_radius(A0, tol)));
    Matrix current = A0;
    homotopy(walk, steps, tol, [&](double t) {
      const Vector D = lam0 + t * (mu - lam0);
      RealizationResult r =
          solve_internal(PerturbationMap::ssp(current, G), spectral_target(current, D), tol, {}).result;
      current = r.a_prime;
      return r;
    });
  }
  RealizationResult& r = walk.total;
  r.target_kind = "spectrum";
  r.target = to_std(mu);
  r.achieved = to_std(sym_eig(r.a_prime).eigenvalues);
  return r;
}

RealizationResult realize_multiplicity_list(const Matrix& A, const Graph& G,
                                            const OrderedMultiplicityList& target,
                                            const Tolerances& tol) {
  tol.validate();
  require_graph_class(A, G, tol);
  const Matrix A0 = symmetrized(A);
  const Index n = A0.rows();
  if (target.total() != n) throw NotARefinement("target list does not sum to n");
  for (int m : target.m)
    if (m < 1) throw NotARefinement("target list entries must be positive");

  const Vector ev0 = sym_eig(A0).eigenvalues;
  const auto clusters = eigenvalue_clusters(ev0, tol);
  const OrderedMultiplicityList current = ordered_multiplicity_list(ev0, tol);
  if (!is_refinement(target, current))
    throw NotARefinement(to_string(target) + " is not a refinement of " + to_string(current));

  StrongPropertyReport base = verify_smp(A0, G, tol);
  require_base_property(base);

  Walk walk;
  if (target == current) {
    walk.total = unchanged(A0, std::move(base), G);
  } else {
    // The SMP map uses monomials in A + B; keep ||A||_F <= 1 and scale back.
    const double scale = 1.0 / std::max(1.0, A0.norm());
    const Matrix As = scale * A0;
    const Vector ev = scale * ev0;
    const int q = int(clusters.size());
    const double radius = trust_radius(As, tol);
    const double delta0 = std::min(0.25 * min_cluster_gap(ev, clusters), radius);

    // Parts of each cluster, in order.
    std::vector<std::vector<int>> parts(clusters.size());
    std::size_t k = 0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      int sum = 0;
      const int size = int(clusters[c].second - clusters[c].first);
      while (sum < size) {
        parts[c].push_back(target.m[k]);
        sum += target.m[k++];
      }
    }

    shrinking(walk, delta0, tol, [&](double delta) {
      Vector D(n);
      for (std::size_t c = 0; c < clusters.size(); ++c) {
        const auto [first, last] = clusters[c];
        const double centre = ev.segment(first, last - first).mean();
        const int r = int(parts[c].size());
        Index pos = first;
        for (int i = 0; i < r; ++i) {
          const double offset = r > 1 ? delta * (double(i) / double(r - 1) - 0.5) : 0.0;
          for (int j = 0; j < parts[c][std::size_t(i)]; ++j) D(pos++) = centre + offset;
        }
      }
      RealizationResult step =
          solve_internal(PerturbationMap::smp(As, G, q), spectral_target(As, D), tol, radius).result;
      const OrderedMultiplicityList got = ordered_multiplicity_list(sym_eig(step.a_prime).eigenvalues, tol);
      if (!(got == target))
        throw NoConvergence("realized multiplicity list " + to_string(got) + " differs from target " +
                                to_string(target),
                            step.final_residual);
      return step;
    });
    walk.total.a_prime = walk.total.a_prime / scale;
    walk.total.last_target = walk.total.last_target / scale;
    walk.total.property_recheck = verify_smp(walk.total.a_prime, G, tol);
    if (!walk.total.property_recheck.holds) throw PropertyLost("SMP lost after rescaling");
    walk.total.smallest_support_entry /= scale;
  }
  RealizationResult& r = walk.total;
  r.target_kind = "multiplicity_list";
  r.target = to_std(target);
  r.achieved = to_std(ordered_multiplicity_list(sym_eig(r.a_prime).eigenvalues, tol));
  return r;
}

RealizationResult realize_inertia(const Matrix& A, const Graph& G, const PartialInertia& target,
                                  const Tolerances& tol) {
  tol.validate();
  require_graph_class(A, G, tol);
  const Matrix A0 = symmetrized(A);
  const Index n = A0.rows();
  const PartialInertia start = pin(A0, tol);
  if (target.positive < start.positive || target.negative < start.negative ||
      target.positive + target.negative > n)
    throw UnreachableTarget("partial inertia (" + std::to_string(target.positive) + "," +
                            std::to_string(target.negative) + ") is not northeast of (" +
                            std::to_string(start.positive) + "," + std::to_string(start.negative) + ")");

  StrongPropertyReport base = verify_sap(A0, G, tol);
  require_base_property(base);

  Walk walk;
  walk.total = unchanged(A0, std::move(base), G);
  walk.total.waypoints = 0;
  Matrix current = A0;
  PartialInertia have = start;
  // Positive steps first, then negative ones.
  while (!(have == target)) {
    const bool up = have.positive < target.positive;
    PartialInertia want = have;
    (up ? want.positive : want.negative) += 1;

    const EigenDecomposition e = sym_eig(current);
    const double zero = eigen_zero_threshold(current, tol);
    std::vector<Index> zeros;
    double gap = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
      if (std::abs(e.eigenvalues(i)) <= zero)
        zeros.push_back(i);
      else
        gap = std::min(gap, std::abs(e.eigenvalues(i)));
    }
    if (zeros.empty()) throw UnreachableTarget("no zero eigenvalue left to move");
    const Index pick = up ? zeros.back() : zeros.front();
    const double radius = trust_radius(current, tol);

    shrinking(walk, std::min(0.25 * gap, radius), tol, [&](double delta) {
      Vector D = e.eigenvalues;
      for (Index z : zeros) D(z) = 0.0;
      D(pick) = up ? delta : -delta;
      const Matrix M = e.eigenvectors * D.asDiagonal() * e.eigenvectors.transpose();
      RealizationResult step =
          solve_internal(PerturbationMap::sap(current, G), (M + M.transpose()) / 2.0, tol, radius).result;
      if (!(pin(step.a_prime, tol) == want))
        throw NoConvergence("northeast step did not reach the intended partial inertia", step.final_residual);
      return step;
    });
    current = walk.total.a_prime;
    have = want;
  }
  RealizationResult& r = walk.total;
  r.target_kind = "inertia";
  r.target = {double(target.positive), double(target.negative)};
  const PartialInertia got = pin(r.a_prime, tol);
  r.achieved = {double(got.positive), double(got.negative)};
  return r;
}

RealizationResult realize_rank(const Matrix& A, const Graph& G, Index target_rank, const Tolerances& tol) {
  tol.validate();
  require_graph_class(A, G, tol);
  const PartialInertia start = pin(symmetrized(A), tol);
  const Index rank = start.positive + start.negative;
  if (target_rank < rank || target_rank > A.rows())
    throw UnreachableTarget("target rank " + std::to_string(target_rank) + " is outside [" +
                            std::to_string(rank) + ", " + std::to_string(A.rows()) + "]");
  RealizationResult r =
      realize_inertia(A, G, {start.positive + (target_rank - rank), start.negative}, tol);
  r.target_kind = "rank";
  r.target = {double(target_rank)};
  r.achieved = {r.achieved[0] + r.achieved[1]};
  return r;
}

RealizationResult realize_q(const Matrix& A, const Graph& G, int target_q, const Tolerances& tol) {
  tol.validate();
  require_graph_class(A, G, tol);
  const Matrix A0 = symmetrized(A);
  const Index n = A0.rows();
  const int q0 = distinct_eigenvalue_count(A0, tol);
  if (target_q < q0 || target_q > n)
    throw UnreachableTarget("target q " + std::to_string(target_q) + " is outside [" +
                            std::to_string(q0) + ", " + std::to_string(n) + "]");

  StrongPropertyReport ssp = verify_ssp(A0, G, tol);
  const bool use_ssp = ssp.holds;
  StrongPropertyReport smp = use_ssp ? ssp : verify_smp(A0, G, tol);
  require_base_property(smp);

  Walk walk;
  walk.total = unchanged(A0, use_ssp ? std::move(ssp) : std::move(smp), G);
  walk.total.waypoints = 0;
  Matrix current = A0;
  for (int q = q0; q < target_q; ++q) {
    const Vector ev = sym_eig(current).eigenvalues;
    const auto clusters = eigenvalue_clusters(ev, tol);
    OrderedMultiplicityList split;
    bool done = false;
    for (const auto& [first, last] : clusters) {
      const int m = int(last - first);
      if (!done && m >= 2) {
        split.m.push_back(1);
        split.m.push_back(m - 1);
        done = true;
      } else {
        split.m.push_back(m);
      }
    }
    RealizationResult step;
    if (use_ssp) {
      // Move the lowest member of the first multiple cluster down by delta.
      Vector target = ev;
      for (const auto& [first, last] : clusters) {
        if (last - first < 2) continue;
        const double centre = ev.segment(first, last - first).mean();
        const double delta = std::min(0.25 * min_cluster_gap(ev, clusters), trust_radius(current, tol));
        target.segment(first, last - first).setConstant(centre);
        target(first) = centre - delta;
        break;
      }
      step = realize_spectrum(current, G, target, tol);
    } else {
      step = realize_multiplicity_list(current, G, split, tol);
    }
    const Index w = walk.total.waypoints;
    const Index halvings = walk.total.halvings;
    walk.absorb(step, 1.0);
    walk.total.waypoints = w + step.waypoints;
    walk.total.halvings = halvings + step.halvings;
    current = walk.total.a_prime;
  }
  RealizationResult& r = walk.total;
  r.target_kind = "q";
  r.target = {double(target_q)};
  r.achieved = {double(distinct_eigenvalue_count(r.a_prime, tol))};
  return r;
}

// --- sign-pattern realizations ------------------------------------------------

RealizationResult realize_similar(const Matrix& A, const SignPattern& P, const Matrix& M,
                                  const Tolerances& tol, const RealizeOptions& opts) {
  tol.validate();
  require_square(A, "realize_similar");
  const Index n = A.rows();
  if (M.rows() != n || M.cols() != n) throw InputError("target matrix has the wrong size");
  require_finite(M, "target matrix");
  StrongPropertyReport base = verify_nssp(A, P, tol);
  require_base_property(base);

  Walk walk;
  const double distance = (M - A).norm();
  if (distance == 0.0) {
    walk.total = unchanged(A, std::move(base), P);
  } else {
    Index steps = opts.waypoints;
    if (steps <= 0) steps = Index(std::ceil(distance / trust_radius(A, tol)));
    Matrix current = A;
    // current = S W(t) S^{-1} with W(t) = A + t (M - A).
    Matrix S = Matrix::Identity(n, n);
    homotopy(walk, steps, tol, [&](double t) {
      const Matrix W = A + t * (M - A);
      const Matrix target = (S * W) * S.inverse();
      const PerturbationMap F = PerturbationMap::nssp_similarity(current, P);
      Solved solved = solve_internal(F, target, tol, {});
      S = (Matrix::Identity(n, n) + F.group_part(solved.params)) * S;
      current = solved.result.a_prime;
      return solved.result;
    });
  }
  RealizationResult& r = walk.total;
  r.target_kind = "similar";
  r.target = to_std(characteristic_polynomial(M));
  r.achieved = to_std(characteristic_polynomial(r.a_prime));
  return r;
}

RealizationResult realize_superpattern(const Matrix& A, const SignPattern& P, const SignPattern& P_super,
                                       double s, const Tolerances& tol) {
  tol.validate();
  require_square(A, "realize_superpattern");
  if (P.order() != P_super.order() || A.rows() != P.order())
    throw InputError("realize_superpattern: orders of A, P and P' differ");
  if (!is_superpattern(P_super, P)) throw NotASuperpattern("P' is not a superpattern of P");
  StrongPropertyReport base = verify_nssp(A, P, tol);
  require_base_property(base);

  const Index n = A.rows();
  Walk walk;
  if (P_super == P) {
    walk.total = unchanged(A, std::move(base), P);
  } else {
    Matrix E = Matrix::Zero(n, n);
    Index added = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (P(i, j) == Sign::Zero && P_super(i, j) != Sign::Zero) {
          E(i, j) = P_super(i, j) == Sign::Plus ? 1.0 : -1.0;
          ++added;
        }
    const double radius = trust_radius(A, tol);
    const double cap = 0.5 * radius / std::sqrt(double(added));
    const double s0 = s > 0 ? std::min(s, cap) : cap;
    shrinking(walk, s0, tol, [&](double step) {
      return solve_internal(PerturbationMap::nssp_superpattern(A, P), A + step * E, tol, radius).result;
    });
  }
  RealizationResult& r = walk.total;
  r.target_kind = "superpattern";
  r.target = to_std(characteristic_polynomial(A));
  r.achieved = to_std(characteristic_polynomial(r.a_prime));
  return r;
}

}  // namespace strongprops
