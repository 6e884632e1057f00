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

// strongprops command-line front end.
//
//   strongprops verify    --matrix A --property ssp|smp|sap|nssp [--graph G | --pattern P]
//   strongprops bifurcate --matrix A --map KIND [--graph G | --pattern P]
//   strongprops realize   --matrix A [--graph G | --pattern P] <one target flag>
//   strongprops certify   --pattern P --witness A (--spectrally-arbitrary FILE | --inertially-arbitrary)
//   strongprops sweep     --family path|cycle|complete|empty --n-min a --n-max b
//
// Exit codes: 0 success, 1 property fails / hypothesis fails, 2 input error,
// 3 surjectivity failure, 4 no convergence, 5 pattern violation,
// 6 unreachable target, 7 incomplete certificate, 8 property lost.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "strongprops/io.hpp"
#include "strongprops/report.hpp"

namespace sp = strongprops;
using sp::report::Json;

namespace {

enum Exit : int {
  kOk = 0,
  kFails = 1,
  kInput = 2,
  kSurjectivity = 3,
  kNoConvergence = 4,
  kPatternViolation = 5,
  kUnreachable = 6,
  kIncomplete = 7,
  kPropertyLost = 8,
};

// --- shared options ---------------------------------------------------------

sp::Tolerances profile_from_env() {
  sp::Tolerances tol;
  const char* env = std::getenv("STRONGPROPS_TOL_PROFILE");
  const std::string name = env ? env : "default";
  if (name == "default" || name.empty()) return tol;
  if (name == "strict") {
    tol.rank_tol = 1e-10;
    tol.cluster_tol = 1e-8;
    tol.newton_tol = 1e-13;
    tol.eig_zero_tol = 1e-8;
    return tol;
  }
  if (name == "loose") {
    tol.rank_tol = 1e-6;
    tol.cluster_tol = 1e-4;
    tol.newton_tol = 1e-9;
    tol.eig_zero_tol = 1e-4;
    tol.nilpotent_tol = 1e-6;
    return tol;
  }
  throw sp::InputError("STRONGPROPS_TOL_PROFILE must be default, strict or loose, got '" + name + "'");
}

struct Common {
  sp::Tolerances tol;
  std::string json_path;
  bool json_stdout = false;
};

void add_common(CLI::App* app, Common& c) {
  auto* g = "Tolerances";
  app->add_option("--rank-tol", c.tol.rank_tol, "relative singular-value cutoff")->capture_default_str()->group(g);
  app->add_option("--cluster-tol", c.tol.cluster_tol, "eigenvalue clustering tolerance")
      ->capture_default_str()
      ->group(g);
  app->add_option("--newton-tol", c.tol.newton_tol, "Gauss-Newton residual tolerance")->capture_default_str()->group(g);
  app->add_option("--max-iter", c.tol.max_iter, "Gauss-Newton iteration cap")->capture_default_str()->group(g);
  app->add_option("--zero-tol", c.tol.zero_tol, "structural zero threshold")->capture_default_str()->group(g);
  app->add_option("--eig-zero-tol", c.tol.eig_zero_tol, "zero eigenvalue threshold")->capture_default_str()->group(g);
  app->add_option("--trust-factor", c.tol.trust_factor, "trust radius factor")->capture_default_str()->group(g);
  app->add_option("--max-halvings", c.tol.max_halvings, "step halvings before giving up")
      ->capture_default_str()
      ->group(g);
  app->add_option("--nilpotent-tol", c.tol.nilpotent_tol, "nilpotency threshold")->capture_default_str()->group(g);
  app->add_option("--json-out", c.json_path, "write the JSON report to this file")->group("Output");
  app->add_flag("--json", c.json_stdout, "print the JSON report instead of the summary")->group("Output");
}

void emit(const Common& c, const Json& doc, const std::string& summary) {
  const std::string text = sp::report::dump(doc);
  if (c.json_stdout)
    std::cout << text;
  else
    std::cout << summary << "\n";
  if (!c.json_path.empty()) {
    std::ofstream out(c.json_path, std::ios::binary);
    if (!out) throw sp::InputError("cannot write " + c.json_path);
    out << text;
  }
}

std::vector<double> parse_numbers(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !std::isfinite(v)) throw sp::InputError("bad number '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_numbers(text)) {
    if (v != std::floor(v) || v < 0 || v > 1e6) throw sp::InputError("expected non-negative integers");
    out.push_back(int(v));
  }
  return out;
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const sp::InputError*>(&e)) return kInput;
  if (dynamic_cast<const sp::SurjectivityFailure*>(&e)) return kSurjectivity;
  if (dynamic_cast<const sp::NoConvergence*>(&e)) return kNoConvergence;
  if (dynamic_cast<const sp::PatternViolation*>(&e)) return kPatternViolation;
  if (dynamic_cast<const sp::NotARefinement*>(&e) || dynamic_cast<const sp::UnreachableTarget*>(&e) ||
      dynamic_cast<const sp::NotASuperpattern*>(&e))
    return kUnreachable;
  if (dynamic_cast<const sp::PropertyLost*>(&e)) return kPropertyLost;
  if (dynamic_cast<const sp::HypothesisFailure*>(&e)) return kFails;
  return kNoConvergence;
}

std::string failure_name(int code) {
  switch (code) {
    case kInput: return "input error";
    case kSurjectivity: return "surjectivity failure";
    case kNoConvergence: return "no convergence";
    case kPatternViolation: return "pattern violation";
    case kUnreachable: return "unreachable target";
    case kPropertyLost: return "property lost";
    default: return "failure";
  }
}

std::string verdict(bool holds) { return holds ? "holds" : "fails"; }

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string matrix, graph, pattern, property, witness_out;
  int q = 0;
};

int run_verify(const VerifyArgs& a) {
  const sp::Property prop = sp::parse_property(a.property);
  const sp::Matrix A = sp::io::read_matrix(a.matrix);
  std::optional<sp::Graph> G;
  std::optional<sp::SignPattern> P;
  if (prop != sp::Property::NSSP) {
    if (a.graph.empty()) throw sp::InputError("--graph is required for " + a.property);
    G = sp::io::read_graph(a.graph);
  } else if (!a.pattern.empty()) {
    P = sp::io::read_sign_pattern(a.pattern);
  }
  const sp::Tolerances& tol = a.common.tol;
  sp::StrongPropertyReport r;
  switch (prop) {
    case sp::Property::SSP: r = sp::verify_ssp(A, *G, tol); break;
    case sp::Property::SMP: r = a.q > 0 ? sp::verify_smp(A, *G, a.q, tol) : sp::verify_smp(A, *G, tol); break;
    case sp::Property::SAP: r = sp::verify_sap(A, *G, tol); break;
    case sp::Property::NSSP: r = P ? sp::verify_nssp(A, *P, tol) : sp::verify_nssp(A, tol); break;
  }
  if (!r.holds && r.witness && !a.witness_out.empty()) sp::io::write_matrix(a.witness_out, *r.witness);
  std::ostringstream s;
  s << sp::to_string(r.property) << " " << verdict(r.holds) << ": primal nullspace " << r.nullspace_dim << " of "
    << r.constraint_dim << ", dual span " << r.dual_span_dim << " of " << r.ambient_dim;
  if (r.q) s << ", q = " << *r.q;
  if (r.witness) {
    s << "\nwitness:\n";
    sp::io::write_matrix(s, *r.witness);
  }
  std::string summary = s.str();
  if (!summary.empty() && summary.back() == '\n') summary.pop_back();
  emit(a.common, sp::report::envelope("verify", tol, {{"report", sp::report::to_json(r)}}), summary);
  return r.holds ? kOk : kFails;
}

// --- bifurcate ----------------------------------------------------------------

struct BifurcateArgs {
  Common common;
  std::string matrix, graph, pattern, map;
  int q = 0;
};

int run_bifurcate(const BifurcateArgs& a) {
  const sp::Matrix A = sp::io::read_matrix(a.matrix);
  const sp::Tolerances& tol = a.common.tol;
  const bool symmetric = a.map == "ssp" || a.map == "smp" || a.map == "sap";
  std::optional<sp::Graph> G;
  std::optional<sp::SignPattern> P;
  if (symmetric) {
    if (a.graph.empty()) throw sp::InputError("--graph is required for map " + a.map);
    G = sp::io::read_graph(a.graph);
  } else {
    P = a.pattern.empty() ? sp::SignPattern::of(A, tol) : sp::io::read_sign_pattern(a.pattern);
  }
  std::optional<sp::PerturbationMap> F;
  if (a.map == "ssp") F = sp::PerturbationMap::ssp(A, *G);
  if (a.map == "smp") {
    const int q = a.q > 0 ? a.q : sp::distinct_eigenvalue_count(sp::symmetrized(A), tol);
    F = sp::PerturbationMap::smp(A, *G, q);
  }
  if (a.map == "sap") F = sp::PerturbationMap::sap(A, *G);
  if (a.map == "nssp-similarity") F = sp::PerturbationMap::nssp_similarity(A, *P);
  if (a.map == "nssp-superpattern") F = sp::PerturbationMap::nssp_superpattern(A, *P);
  if (!F) throw sp::InputError("unknown map '" + a.map + "'");

  const sp::Matrix J = sp::derivative_at(*F, sp::Vector::Zero(F->param_dim()));
  const sp::Index rank = sp::numerical_rank(J, tol);
  const bool surjective = rank == F->ambient_dim();
  Json body = {{"map", sp::to_string(F->kind())},
               {"param_dim", F->param_dim()},
               {"ambient_dim", F->ambient_dim()},
               {"rank", rank},
               {"surjective", surjective},
               {"trust_radius", sp::trust_radius(F->base(), tol)}};
  std::ostringstream s;
  s << sp::to_string(F->kind()) << " map: derivative rank " << rank << " of " << F->ambient_dim() << " ("
    << (surjective ? "surjective" : "not surjective") << ")";
  emit(a.common, sp::report::envelope("bifurcate", tol, std::move(body)), s.str());
  return surjective ? kOk : kFails;
}

// --- realize ------------------------------------------------------------------

struct RealizeArgs {
  Common common;
  std::string matrix, graph, pattern, out;
  std::string spectrum, mlist, inertia, similar_to, superpattern;
  long long rank = -1;
  int q = -1;
  long long waypoints = 0;
  double step = 0.0;
};

int run_realize(const RealizeArgs& a) {
  const sp::Tolerances& tol = a.common.tol;
  const int targets = int(!a.spectrum.empty()) + int(!a.mlist.empty()) + int(!a.inertia.empty()) +
                      int(a.rank >= 0) + int(a.q >= 0) + int(!a.similar_to.empty()) + int(!a.superpattern.empty());
  if (targets != 1) throw sp::InputError("give exactly one target flag");
  const bool nonsymmetric = !a.similar_to.empty() || !a.superpattern.empty();

  // Parse every input before computing.
  const sp::Matrix A = sp::io::read_matrix(a.matrix);
  std::optional<sp::Graph> G;
  std::optional<sp::SignPattern> P, P_super;
  std::optional<sp::Matrix> M;
  if (nonsymmetric) {
    P = a.pattern.empty() ? sp::SignPattern::of(A, tol) : sp::io::read_sign_pattern(a.pattern);
    if (!a.similar_to.empty()) M = sp::io::read_matrix(a.similar_to);
    if (!a.superpattern.empty()) P_super = sp::io::read_sign_pattern(a.superpattern);
  } else {
    if (a.graph.empty()) throw sp::InputError("--graph is required for symmetric targets");
    G = sp::io::read_graph(a.graph);
  }
  sp::RealizeOptions opts;
  opts.waypoints = a.waypoints;

  sp::RealizationResult r;
  if (!a.spectrum.empty()) {
    const auto v = parse_numbers(a.spectrum);
    r = sp::realize_spectrum(A, *G, Eigen::Map<const sp::Vector>(v.data(), sp::Index(v.size())), tol, opts);
  } else if (!a.mlist.empty()) {
    r = sp::realize_multiplicity_list(A, *G, sp::OrderedMultiplicityList{parse_ints(a.mlist)}, tol);
  } else if (!a.inertia.empty()) {
    const auto v = parse_ints(a.inertia);
    if (v.size() != 2) throw sp::InputError("--target-inertia expects 'n+ n-'");
    r = sp::realize_inertia(A, *G, {v[0], v[1]}, tol);
  } else if (a.rank >= 0) {
    r = sp::realize_rank(A, *G, a.rank, tol);
  } else if (a.q >= 0) {
    r = sp::realize_q(A, *G, a.q, tol);
  } else if (M) {
    r = sp::realize_similar(A, *P, *M, tol, opts);
  } else {
    r = sp::realize_superpattern(A, *P, *P_super, a.step, tol);
  }
  if (!a.out.empty()) sp::io::write_matrix(a.out, r.a_prime);
  std::ostringstream s;
  s << "realized " << r.target_kind << " in " << r.iterations << " iterations over " << r.waypoints
    << " waypoints (residual " << sp::io::format_double(r.final_residual) << ", "
    << sp::to_string(r.property_recheck.property) << " " << verdict(r.property_recheck.holds) << ")\n";
  sp::io::write_matrix(s, r.a_prime);
  std::string summary = s.str();
  summary.pop_back();
  emit(a.common, sp::report::envelope("realize", tol, sp::report::to_json(r)), summary);
  return kOk;
}

// --- certify ------------------------------------------------------------------

struct CertifyArgs {
  Common common;
  std::string pattern, witness, targets, superpattern;
  bool inertially = false;
};

std::vector<sp::ConjInvariantSpectrum> read_targets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sp::InputError("cannot open " + path);
  std::vector<sp::ConjInvariantSpectrum> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(sp::parse_spectrum(line));
    } catch (const sp::InputError& e) {
      throw sp::ParseError(number, e.what());
    }
  }
  if (out.empty()) throw sp::InputError("targets file " + path + " has no spectra");
  return out;
}

int run_certify(const CertifyArgs& a) {
  const sp::Tolerances& tol = a.common.tol;
  if (a.inertially == !a.targets.empty())
    throw sp::InputError("give exactly one of --spectrally-arbitrary and --inertially-arbitrary");
  const sp::SignPattern P = sp::io::read_sign_pattern(a.pattern);
  const sp::Matrix A = sp::io::read_matrix(a.witness);
  if (A.rows() != P.order()) throw sp::InputError("witness size does not match the pattern");
  std::optional<sp::SignPattern> P_super;
  if (!a.superpattern.empty()) P_super = sp::io::read_sign_pattern(a.superpattern);
  std::vector<sp::ConjInvariantSpectrum> targets;
  if (!a.inertially) targets = read_targets(a.targets);

  const sp::Certificate c = a.inertially ? sp::certify_inertially_arbitrary(P, A, tol)
                                         : sp::certify_spectrally_arbitrary(P, A, targets, tol, P_super);
  std::ostringstream s;
  s << sp::to_string(c.kind) << " certificate: " << sp::to_string(c.verdict) << " (" << c.label << ")";
  if (!c.hypothesis.holds) s << "\nhypothesis: " << c.hypothesis.failure;
  if (c.kind == sp::CertificateKind::SpectrallyArbitrary)
    s << "\nnilpotency: ||A^n||_F = " << sp::io::format_double(c.hypothesis.nilpotency.power_norm)
      << ", max scaled char-poly coefficient = " << sp::io::format_double(c.hypothesis.nilpotency.max_charpoly_coeff)
      << ", index = " << c.hypothesis.nilpotency.index;
  for (const sp::Evidence& e : c.evidence)
    s << "\n  " << e.target << ": " << (e.ok ? "ok" : "FAILED") << " (residual "
      << sp::io::format_double(e.residual) << ")" << (e.error.empty() ? "" : " " + e.error);
  emit(a.common, sp::report::envelope("certify", tol, sp::report::to_json(c)), s.str());
  switch (c.verdict) {
    case sp::Verdict::Complete: return kOk;
    case sp::Verdict::HypothesisFailed: return kFails;
    case sp::Verdict::Incomplete: return kIncomplete;
  }
  return kIncomplete;
}

// --- sweep --------------------------------------------------------------------

struct SweepArgs {
  Common common;
  std::string family, property = "ssp", format = "tsv";
  int n_min = 1, n_max = 6;
  std::uint64_t seed = 0;
  int jobs = 1;
};

sp::Graph family_graph(const std::string& family, sp::Index n) {
  if (family == "path") return sp::Graph::path(n);
  if (family == "cycle") return sp::Graph::cycle(n);
  if (family == "complete") return sp::Graph::complete(n);
  return sp::Graph::empty(n);
}

// Random base matrix in S(G): off-diagonal magnitudes in [0.5, 1.5] with
// random signs, diagonal in [-1, 1]. The empty family gets a diagonal with
// its first value repeated.
sp::Matrix random_base(const std::string& family, const sp::Graph& G, std::uint64_t seed) {
  const sp::Index n = G.order();
  std::seed_seq seq{std::uint64_t(seed), std::uint64_t(n)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> mag(0.5, 1.5), diag(-1.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  sp::Matrix A = sp::Matrix::Zero(n, n);
  for (sp::Index i = 0; i < n; ++i) A(i, i) = diag(rng);
  if (family == "empty" && n >= 2) A(1, 1) = A(0, 0);
  for (const auto& [i, j] : G.edges()) {
    const double v = (coin(rng) ? 1.0 : -1.0) * mag(rng);
    A(i, j) = A(j, i) = v;
  }
  return A;
}

sp::Matrix cycle_base(sp::Index n, bool signed_edge) {
  sp::Matrix A = sp::Matrix::Zero(n, n);
  for (sp::Index i = 0; i < n; ++i) A(i, (i + 1) % n) = A((i + 1) % n, i) = 1.0;
  if (signed_edge) A(0, n - 1) = A(n - 1, 0) = -1.0;
  return A;
}

std::string list_string(const std::vector<int>& m) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? " " : "") + std::to_string(m[k]);
  return s;
}

template <class Row>
std::vector<Row> run_parallel(const std::vector<std::function<Row()>>& tasks, int jobs) {
  std::vector<Row> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) rows[k] = tasks[k]();
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

int run_sweep(const SweepArgs& a) {
  const sp::Tolerances& tol = a.common.tol;
  const bool cycle = a.family == "cycle";
  const int lowest = cycle ? 3 : 1;
  if (a.n_min < lowest || a.n_max > 12 || a.n_min > a.n_max)
    throw sp::InputError("n range must satisfy " + std::to_string(lowest) + " <= n-min <= n-max <= 12");
  if (a.jobs < 1) throw sp::InputError("--jobs must be positive");
  const sp::Property prop = sp::parse_property(a.property);
  if (!cycle && prop == sp::Property::NSSP) throw sp::InputError("sweep supports ssp, smp and sap");

  std::vector<std::string> header;
  std::vector<std::function<Json()>> tasks;
  if (cycle) {
    header = {"family", "n", "base", "base_list", "target", "realized", "achieved", "admissible", "error"};
    for (int n = a.n_min; n <= a.n_max; ++n)
      for (bool signed_edge : {false, true}) {
        const sp::Matrix base = cycle_base(n, signed_edge);
        const auto list = sp::ordered_multiplicity_list(sp::sym_eig(base).eigenvalues, tol);
        for (const auto& target : sp::refinements(list))
          tasks.push_back([=, &tol]() -> Json {
            Json row = {{"family", "cycle"},
                        {"n", n},
                        {"base", signed_edge ? "signed" : "adjacency"},
                        {"base_list", list_string(list.m)},
                        {"target", list_string(target.m)}};
            try {
              const auto r = sp::realize_multiplicity_list(base, sp::Graph::cycle(n), target, tol);
              const sp::Vector ev = sp::sym_eig(r.a_prime).eigenvalues;
              row["realized"] = true;
              row["achieved"] = list_string(sp::ordered_multiplicity_list(ev, tol).m);
              row["admissible"] = sp::cycle_spectrum_admissible(ev, tol);
              row["error"] = "";
            } catch (const sp::Error& e) {
              row["realized"] = false;
              row["achieved"] = "";
              row["admissible"] = false;
              row["error"] = e.what();
            }
            return row;
          });
      }
  } else {
    header = {"family", "n", "property", "holds", "nullspace_dim", "dual_span_dim", "ambient_dim", "list", "q"};
    for (int n = a.n_min; n <= a.n_max; ++n)
      tasks.push_back([=, &tol]() -> Json {
        const sp::Graph G = family_graph(a.family, n);
        const sp::Matrix A = random_base(a.family, G, a.seed);
        sp::StrongPropertyReport r;
        if (prop == sp::Property::SSP) r = sp::verify_ssp(A, G, tol);
        if (prop == sp::Property::SMP) r = sp::verify_smp(A, G, tol);
        if (prop == sp::Property::SAP) r = sp::verify_sap(A, G, tol);
        const auto list = sp::ordered_multiplicity_list(sp::sym_eig(A).eigenvalues, tol);
        return {{"family", a.family},       {"n", n},
                {"property", sp::to_string(prop)}, {"holds", r.holds},
                {"nullspace_dim", r.nullspace_dim}, {"dual_span_dim", r.dual_span_dim},
                {"ambient_dim", r.ambient_dim},     {"list", list_string(list.m)},
                {"q", list.distinct()}};
      });
  }
  const std::vector<Json> rows = run_parallel(tasks, a.jobs);

  if (a.format == "json") {
    Json body = {{"family", a.family}, {"n_min", a.n_min}, {"n_max", a.n_max}, {"rows", rows}};
    std::cout << sp::report::dump(sp::report::envelope("sweep", tol, std::move(body), a.seed));
    return kOk;
  }
  std::ostringstream s;
  for (std::size_t k = 0; k < header.size(); ++k) s << (k ? "\t" : "") << header[k];
  s << "\n";
  for (const Json& row : rows) {
    for (std::size_t k = 0; k < header.size(); ++k) {
      const Json& v = row[header[k]];
      s << (k ? "\t" : "") << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    s << "\n";
  }
  std::cout << s.str();
  if (!a.common.json_path.empty()) {
    Json body = {{"family", a.family}, {"n_min", a.n_min}, {"n_max", a.n_max}, {"rows", rows}};
    std::ofstream out(a.common.json_path, std::ios::binary);
    out << sp::report::dump(sp::report::envelope("sweep", tol, std::move(body), a.seed));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong spectral, multiplicity and Arnold properties: verification, bifurcation and "
               "sign-pattern certification.\nSTRONGPROPS_TOL_PROFILE=default|strict|loose sets the "
               "tolerance defaults; flags override them."};
  app.require_subcommand(1);

  sp::Tolerances base;
  try {
    base = profile_from_env();
  } catch (const sp::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }

  VerifyArgs va;
  BifurcateArgs ba;
  RealizeArgs ra;
  CertifyArgs ca;
  SweepArgs sa;
  for (Common* c : {&va.common, &ba.common, &ra.common, &ca.common, &sa.common}) c->tol = base;

  auto* verify = app.add_subcommand("verify", "check a strong property of a matrix");
  verify->add_option("--matrix", va.matrix, "matrix file")->required()->check(CLI::ExistingFile);
  verify->add_option("--graph", va.graph, "graph file (ssp, smp, sap)")->check(CLI::ExistingFile);
  verify->add_option("--pattern", va.pattern, "sign pattern file (nssp; default: own support)")
      ->check(CLI::ExistingFile);
  verify->add_option("--property", va.property, "ssp, smp, sap or nssp")->required();
  verify->add_option("--q", va.q, "SMP: number of distinct eigenvalues (default: clustered count)");
  verify->add_option("--witness-out", va.witness_out, "write the failure witness X here");
  add_common(verify, va.common);

  auto* bif = app.add_subcommand("bifurcate", "rank of the perturbation map derivative at zero");
  bif->add_option("--matrix", ba.matrix, "matrix file")->required()->check(CLI::ExistingFile);
  bif->add_option("--graph", ba.graph, "graph file (symmetric maps)")->check(CLI::ExistingFile);
  bif->add_option("--pattern", ba.pattern, "sign pattern file (nssp maps)")->check(CLI::ExistingFile);
  bif->add_option("--map", ba.map, "ssp, smp, sap, nssp-similarity or nssp-superpattern")
      ->required()
      ->check(CLI::IsMember({"ssp", "smp", "sap", "nssp-similarity", "nssp-superpattern"}));
  bif->add_option("--q", ba.q, "SMP map: polynomial degree bound (default: distinct eigenvalues)");
  add_common(bif, ba.common);

  auto* realize = app.add_subcommand("realize", "move a matrix to a nearby target keeping its pattern");
  realize->add_option("--matrix", ra.matrix, "base matrix file")->required()->check(CLI::ExistingFile);
  realize->add_option("--graph", ra.graph, "graph file (symmetric targets)")->check(CLI::ExistingFile);
  realize->add_option("--pattern", ra.pattern, "sign pattern file (default: own support)")
      ->check(CLI::ExistingFile);
  auto* tg = "Target (exactly one)";
  realize->add_option("--target-spectrum", ra.spectrum, "eigenvalues, e.g. \"-1,0,1\"")->group(tg);
  realize->add_option("--target-mlist", ra.mlist, "ordered multiplicity list, e.g. \"1 1 2\"")->group(tg);
  realize->add_option("--target-inertia", ra.inertia, "partial inertia \"n+ n-\"")->group(tg);
  realize->add_option("--target-rank", ra.rank, "rank")->group(tg);
  realize->add_option("--target-q", ra.q, "number of distinct eigenvalues")->group(tg);
  realize->add_option("--similar-to", ra.similar_to, "matrix file to become similar to")
      ->check(CLI::ExistingFile)
      ->group(tg);
  realize->add_option("--superpattern", ra.superpattern, "sign pattern file of a superpattern")
      ->check(CLI::ExistingFile)
      ->group(tg);
  realize->add_option("--waypoints", ra.waypoints, "fixed homotopy waypoint count (0: automatic)");
  realize->add_option("--step", ra.step, "superpattern step size (0: automatic)");
  realize->add_option("--out", ra.out, "write the realized matrix here");
  add_common(realize, ra.common);

  auto* certify = app.add_subcommand("certify", "certify a sign pattern from a nilpotent witness");
  certify->add_option("--pattern", ca.pattern, "sign pattern file")->required()->check(CLI::ExistingFile);
  certify->add_option("--witness", ca.witness, "witness matrix file")->required()->check(CLI::ExistingFile);
  certify->add_option("--spectrally-arbitrary", ca.targets, "targets file, one spectrum per line ('a+bi' = pair)")
      ->check(CLI::ExistingFile);
  certify->add_flag("--inertially-arbitrary", ca.inertially, "realize every inertia");
  certify->add_option("--superpattern", ca.superpattern, "certify this superpattern instead")
      ->check(CLI::ExistingFile);
  add_common(certify, ca.common);

  auto* sweep = app.add_subcommand("sweep", "verdict tables over graph families");
  sweep->add_option("--family", sa.family, "path, cycle, complete or empty")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "empty"}));
  sweep->add_option("--n-min", sa.n_min, "smallest order")->capture_default_str();
  sweep->add_option("--n-max", sa.n_max, "largest order (<= 12)")->capture_default_str();
  sweep->add_option("--property", sa.property, "ssp, smp or sap (cycle family: smp)")->capture_default_str();
  sweep->add_option("--seed", sa.seed, "seed for random base matrices")->capture_default_str();
  sweep->add_option("--format", sa.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  sweep->add_option("--jobs", sa.jobs, "worker threads")->capture_default_str();
  add_common(sweep, sa.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    for (const Common* c : {&va.common, &ba.common, &ra.common, &ca.common, &sa.common}) c->tol.validate();
    if (*verify) return run_verify(va);
    if (*bif) return run_bifurcate(ba);
    if (*realize) return run_realize(ra);
    if (*certify) return run_certify(ca);
    if (*sweep) return run_sweep(sa);
  } catch (const sp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    const int code = exit_code(e);
    std::cerr << failure_name(code) << ": " << e.what() << "\n";
    if (const auto* nc = dynamic_cast<const sp::NoConvergence*>(&e))
      std::cerr << "best residual: " << sp::io::format_double(nc->best_residual()) << "\n";
    return code;
  }
  return kInput;
}
