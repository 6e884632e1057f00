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

#include "strongprops/report.hpp"

#include <cmath>

#include "strongprops/io.hpp"

namespace strongprops::report {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json numbers(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

}  // namespace

Json to_json(const Matrix& A) {
  Json rows = Json::array();
  for (Index i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < A.cols(); ++j) row.push_back(number(A(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Tolerances& tol) {
  return {{"rank_tol", tol.rank_tol},         {"cluster_tol", tol.cluster_tol},
          {"newton_tol", tol.newton_tol},     {"max_iter", tol.max_iter},
          {"zero_tol", tol.zero_tol},         {"eig_zero_tol", tol.eig_zero_tol},
          {"trust_factor", tol.trust_factor}, {"max_halvings", tol.max_halvings},
          {"nilpotent_tol", tol.nilpotent_tol}};
}

Json to_json(const Graph& G) {
  Json edges = Json::array();
  for (const auto& [i, j] : G.edges()) edges.push_back({i, j});
  return {{"order", G.order()}, {"edges", std::move(edges)}};
}

Json to_json(const SignPattern& P) {
  Json rows = Json::array();
  for (Index i = 0; i < P.order(); ++i) {
    std::string row;
    for (Index j = 0; j < P.order(); ++j) row += io::sign_char(P(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const StrongPropertyReport& r) {
  Json j = {{"property", to_string(r.property)},
            {"holds", r.holds},
            {"primal", {{"constraint_dim", r.constraint_dim}, {"nullspace_dim", r.nullspace_dim}}},
            {"dual", {{"span_dim", r.dual_span_dim}, {"ambient_dim", r.ambient_dim}, {"holds", r.dual_verdict}}}};
  j["primal"]["smallest_structural_singular_value"] =
      r.smallest_structural_singular_value ? number(*r.smallest_structural_singular_value) : Json(nullptr);
  if (r.q) {
    j["q"] = *r.q;
    Json alts = Json::array();
    for (const QCandidate& c : r.ambiguous_q)
      alts.push_back({{"q", c.q}, {"holds", c.holds}, {"nullspace_dim", c.nullspace_dim}});
    j["ambiguous_q"] = std::move(alts);
  }
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const RealizationResult& r) {
  Json trace = Json::array();
  for (const TraceEntry& e : r.trace)
    trace.push_back({{"waypoint", e.waypoint}, {"iteration", e.iteration}, {"residual", number(e.residual)},
                     {"step", number(e.step)}});
  return {{"target_kind", r.target_kind},
          {"target", numbers(r.target)},
          {"achieved", numbers(r.achieved)},
          {"matrix", to_json(r.a_prime)},
          {"iterations", r.iterations},
          {"waypoints", r.waypoints},
          {"halvings", r.halvings},
          {"final_residual", number(r.final_residual)},
          {"pattern_check", r.pattern_check},
          {"smallest_support_entry", number(r.smallest_support_entry)},
          {"property_recheck", to_json(r.property_recheck)},
          {"trace", std::move(trace)}};
}

Json to_json(const ConjInvariantSpectrum& s) {
  Json pairs = Json::array();
  for (const auto& [a, b] : s.pairs) pairs.push_back({number(a), number(b)});
  return {{"reals", numbers(s.reals)}, {"pairs", std::move(pairs)}};
}

Json to_json(const Inertia& in) { return Json::array({in.positive, in.negative, in.zero}); }

Json to_json(const RefinedInertia& in) {
  return Json::array({in.positive, in.negative, in.zero, in.imaginary});
}

Json to_json(const NilpotencyCheck& c) {
  return {{"nilpotent", c.nilpotent},
          {"power_norm", number(c.power_norm)},
          {"max_charpoly_coeff", number(c.max_charpoly_coeff)},
          {"max_schur_diagonal", number(c.max_schur_diagonal)},
          {"index", c.index}};
}

Json to_json(const Certificate& c) {
  Json hyp = {{"holds", c.hypothesis.holds},
              {"failure", c.hypothesis.failure},
              {"in_pattern", c.hypothesis.in_pattern}};
  if (c.kind == CertificateKind::SpectrallyArbitrary) hyp["nilpotency"] = to_json(c.hypothesis.nilpotency);
  if (c.hypothesis.refined_inertia) hyp["refined_inertia"] = to_json(*c.hypothesis.refined_inertia);
  hyp["nssp"] = c.hypothesis.in_pattern ? to_json(c.hypothesis.nssp) : Json(nullptr);

  Json evidence = Json::array();
  for (const Evidence& e : c.evidence) {
    Json item = {{"target", e.target}};
    if (e.spectrum) item["spectrum"] = to_json(*e.spectrum);
    if (e.inertia) item["inertia"] = to_json(*e.inertia);
    item["scale"] = number(e.scale);
    item["realized"] = e.realized.size() ? to_json(e.realized) : Json(nullptr);
    item["target_charpoly"] = numbers(e.target_charpoly);
    item["achieved_charpoly"] = numbers(e.achieved_charpoly);
    if (e.inertia) item["achieved_inertia"] = e.achieved_inertia ? to_json(*e.achieved_inertia) : Json(nullptr);
    item["residual"] = number(e.residual);
    item["ok"] = e.ok;
    item["error"] = e.error;
    evidence.push_back(std::move(item));
  }
  Json j = {{"kind", to_string(c.kind)},
            {"label", c.label},
            {"verdict", to_string(c.verdict)},
            {"pattern", to_json(c.pattern)}};
  j["superpattern"] = c.superpattern ? to_json(*c.superpattern) : Json(nullptr);
  j["witness"] = to_json(c.witness);
  j["hypothesis"] = std::move(hyp);
  j["evidence"] = std::move(evidence);
  return j;
}

Json to_json(const NilpotentJacobian& nj) {
  Json cells = Json::array();
  for (const auto& [i, j] : nj.cells) cells.push_back({i, j});
  return {{"cells", std::move(cells)},
          {"jacobian", to_json(nj.jacobian)},
          {"rank", nj.rank},
          {"surjective", nj.surjective}};
}

Json envelope(const std::string& command, const Tolerances& tol, Json body, std::optional<std::uint64_t> seed) {
  Json j = {{"schema", kSchema}, {"command", command}, {"tolerances", to_json(tol)}};
  if (seed) j["seed"] = *seed;
  j["result"] = std::move(body);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace strongprops::report
