// Copyright 2026 The tsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tsolve: command-line front end. Exit codes: 0 ran to completion (an
// infeasible answer included), 1 usage or input error, 2 resource cap,
// 3 internal invariant violation or a failed fixture check.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsolve/families.hpp"
#include "tsolve/groups.hpp"
#include "tsolve/kernels.hpp"
#include "tsolve/lp.hpp"
#include "tsolve/simulator.hpp"
#include "tsolve/stabilizer.hpp"

using json = nlohmann::json;
using namespace tsolve;

namespace {

constexpr const char* kSchema = "tsolve/1";
// Full Gram matrices are used up to this many amplitude visits; beyond it the
// oracle evaluates one entry per pair orbit.
constexpr double kFullGramBudget = 1 << 30;
// States with at most this many qubits are embedded in solve/codes reports.
constexpr int kEmbedStateQubits = 12;

struct FixtureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  double tol = kDefaultTol;
  int max_qubits = 0;  // resolved in main
  std::uint64_t seed = 0;
  bool deterministic = false;
};

struct GroupOpts {
  std::string group = "sym";
  std::string generators;
  int n = 0;
  int m = -1;
};

// ---- helpers ----

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(fmt::format("cannot open '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int resolve_max_qubits(int flag) {
  int cap = kMaxStateQubits;
  if (const char* env = std::getenv("TSOLVE_MAX_QUBITS"); env && *env) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(fmt::format("TSOLVE_MAX_QUBITS='{}' is not an integer", env));
    }
  }
  if (flag > 0) cap = flag;
  if (cap < 1 || cap > kMaxStateQubits)
    throw std::invalid_argument(
        fmt::format("statevector cap must be within 1..{}, got {}", kMaxStateQubits, cap));
  return cap;
}

void require_state_cap(int n, const Common& c) {
  if (n > c.max_qubits)
    throw ResourceLimitError(
        fmt::format("{} qubits exceed the statevector cap of {} (--max-qubits / TSOLVE_MAX_QUBITS)",
                    n, c.max_qubits));
}

GroupKind parse_kind(const std::string& s) {
  if (s == "sym") return GroupKind::symmetric;
  if (s == "cyc") return GroupKind::cyclic;
  if (s == "generic") return GroupKind::generic;
  throw std::invalid_argument(fmt::format("unknown group '{}' (sym, cyc, generic)", s));
}

PermutationGroup make_group(GroupOpts& g) {
  const GroupKind kind = parse_kind(g.group);
  if (kind == GroupKind::generic) {
    if (g.generators.empty()) throw std::invalid_argument("--group generic needs --generators FILE");
    auto grp = PermutationGroup::parse_generators(read_file(g.generators));
    if (g.n != 0 && g.n != grp.n())
      throw std::invalid_argument(fmt::format("-n {} disagrees with generator degree {}", g.n, grp.n()));
    g.n = grp.n();
    return grp;
  }
  if (!g.generators.empty()) throw std::invalid_argument("--generators requires --group generic");
  if (g.n < 1) throw std::invalid_argument("-n is required and must be positive");
  return kind == GroupKind::symmetric ? PermutationGroup::symmetric(g.n) : PermutationGroup::cyclic(g.n);
}

void require_m(const GroupOpts& g) {
  if (g.m < 0 || g.m > g.n)
    throw std::invalid_argument(fmt::format("-m must be within 0..{} (got {})", g.n, g.m));
}

MatrixVariant resolve_variant(const std::string& s, GroupKind kind) {
  if (s.empty()) return kind == GroupKind::symmetric ? MatrixVariant::Aprime : MatrixVariant::A;
  if (s == "A") return MatrixVariant::A;
  if (s == "Aprime") {
    if (kind != GroupKind::symmetric)
      throw std::invalid_argument("--matrix Aprime is defined for the symmetric group only");
    return MatrixVariant::Aprime;
  }
  throw std::invalid_argument(fmt::format("unknown matrix variant '{}' (A, Aprime)", s));
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json state_json(const StateVector& psi, double eps = 1e-15) {
  json out = json::array();
  for (std::size_t b = 0; b < psi.dim(); ++b)
    if (std::abs(psi[b]) > eps)
      out.push_back({BitString::from_index(psi.n(), b).str(), psi[b].real(), psi[b].imag()});
  return out;
}

json ts_report_json(const TsReport& r, const char* method) {
  return {{"is_ts", r.is_ts}, {"max_offdiag", r.max_offdiag}, {"max_diag_dev", r.max_diag_dev},
          {"method", method}};
}

json gram_json(const GramMatrix& g) {
  json rows = json::array();
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    json row = json::array();
    for (Eigen::Index b = 0; b < g.cols(); ++b) row.push_back({g(a, b).real(), g(a, b).imag()});
    rows.push_back(row);
  }
  return rows;
}

json trajectories_json(const TrajectorySet& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back(t.str());
  return out;
}

// Oracle verdict for a state that is invariant under the group behind `pairs`.
json oracle(const StateVector& psi, const TrajectorySet& ts, const std::vector<PairOrbit>& pairs,
            const Angle& theta, double tol) {
  const double work = double(ts.size()) * double(ts.size()) * double(psi.dim());
  if (work <= kFullGramBudget) return ts_report_json(verify_ts_state(psi, ts, theta, tol), "full_gram");
  return ts_report_json(verify_ts_state_on_orbits(psi, pairs, theta, tol), "pair_orbit_reps");
}

// ---- rendering ----

void render_text(const json& j, std::ostream& os, int indent = 0) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render_text(v, os, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << it.key() << ":\n";
      for (const auto& e : v) {
        os << pad << "  -\n";
        render_text(e, os, indent + 4);
      }
    } else if (v.is_string()) {
      os << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      os << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt::format("{:.12g}", v.get<double>());
  return v.dump();
}

void render_csv(const json& report, std::ostream& os) {
  const json& result = report.at("result");
  if (result.contains("rows") && result.contains("columns")) {
    const auto& cols = result.at("columns");
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i].get<std::string>();
    os << "\n";
    for (const auto& row : result.at("rows")) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << csv_cell(row.at(cols[i].get<std::string>()));
      os << "\n";
    }
    return;
  }
  // One row of scalars; nested objects contribute "outer.inner" columns.
  std::vector<std::pair<std::string, json>> cells;
  for (auto it = result.begin(); it != result.end(); ++it) {
    if (it.value().is_primitive()) {
      cells.emplace_back(it.key(), it.value());
    } else if (it.value().is_object()) {
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
        if (jt.value().is_primitive()) cells.emplace_back(it.key() + "." + jt.key(), jt.value());
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i].first;
  os << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i].second);
  os << "\n";
}

void emit(const Common& c, const std::string& command, json config, json result, double wall_ms) {
  config["format"] = c.format;
  config["tol"] = c.tol;
  config["max_qubits"] = c.max_qubits;
  config["seed"] = c.seed;
  config["deterministic"] = c.deterministic;
  json report = {{"schema", kSchema},
                 {"version", TSOLVE_VERSION},
                 {"command", command},
                 {"config", std::move(config)},
                 {"result", std::move(result)},
                 {"timing", {{"wall_ms", c.deterministic ? 0.0 : wall_ms}}}};
  if (c.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (c.format == "csv") {
    render_csv(report, std::cout);
  } else {
    render_text(report, std::cout);
  }
}

// ---- commands ----

struct SolveOpts {
  GroupOpts g;
  std::string theta;
  std::string matrix;
  bool construct = false;
  bool lp_fallback = false;
  std::string state_out;
};

json cmd_solve(SolveOpts& o, const Common& c, json& config) {
  const PermutationGroup grp = make_group(o.g);
  require_m(o.g);
  const int n = o.g.n, m = o.g.m;
  const GroupKind kind = grp.kind();
  const Angle theta = Angle::parse(o.theta);
  const MatrixVariant variant = resolve_variant(o.matrix, kind);
  config.update({{"group", o.g.group}, {"n", n}, {"m", m}, {"theta", theta.theta},
                 {"matrix", variant_name(variant)}, {"construct", o.construct},
                 {"lp_fallback", o.lp_fallback}});
  if (!o.g.generators.empty()) config["generators"] = o.g.generators;

  json r = {{"n", n}, {"m", m}, {"group", kind_name(kind)}, {"theta", theta.theta}};
  std::optional<StateVector> psi;
  std::optional<OrbitTable> table;
  const bool can_simulate = n <= c.max_qubits;

  auto need_table = [&]() -> const OrbitTable& {
    if (!table) {
      OrbitOptions opt;
      opt.max_generic_qubits = c.max_qubits;
      table = build_orbit_table(grp, generate_transitive_set(grp, m), opt);
    }
    return *table;
  };

  bool constructed = false;
  if (o.construct) {
    // Closed forms: symmetric (any m) and cyclic with m | n.
    std::optional<ThresholdFormula> f;
    if (kind == GroupKind::symmetric)
      f = (m == 1 || m == n - 1) && n > 1 ? threshold_sym_m1(n) : threshold_sym(n, m);
    else if (kind == GroupKind::cyclic && m > 0 && n % m == 0 && n / m > 1)
      f = threshold_cyc(m, n / m);
    else
      throw std::invalid_argument("--construct supports sym, and cyc with m dividing n");
    r["formula"] = {{"family", family_name(f->family)}, {"theta_star", f->theta_star}};
    if (theta.theta >= f->theta_star - 1e-12) {
      require_state_cap(n, c);
      if (kind == GroupKind::cyclic)
        psi = construct_ts_cyc(m, n / m, theta);
      else if (f->family == Family::sym_m1)
        psi = construct_ts_sym_m1(n, theta);
      else
        psi = construct_ts_sym(n, m, theta);
      constructed = true;
      r["method"] = "closed_form";
      r["feasible"] = true;
    } else if (!o.lp_fallback) {
      throw std::invalid_argument(fmt::format(
          "theta = {:.12g} is below the closed-form threshold {:.12g}; pass --lp-fallback to use "
          "the linear program",
          theta.theta, f->theta_star));
    }
  }

  if (!constructed) {
    ReducedMatrix mat;
    if (kind == GroupKind::symmetric)
      mat = ReducedSystem::symmetric(n, m, variant).matrix(theta);
    else
      mat = build_A_generic(need_table(), theta);
    LpOptions lp;
    lp.tol = c.tol;
    const FeasibilityResult res = solve_feasibility(mat, lp);
    r["method"] = "lp";
    r["matrix_variant"] = variant_name(mat.variant);
    r["M"] = mat.M();
    r["N"] = mat.N();
    r["omega_sizes"] = mat.omega_sizes;
    r["feasible"] = res.feasible;
    r["certificate"] = res.certificate;
    r["iterations"] = res.iterations;
    if (res.feasible) {
      r["c"] = std::vector<double>(res.c.data(), res.c.data() + res.c.size());
      r["residual"] = res.residual;
      if (can_simulate) {
        psi = kind == GroupKind::symmetric ? state_from_solution_symmetric(res.c, n, c.tol)
                                           : state_from_solution(res.c, need_table(), c.tol);
      }
    }
  }

  if (psi) {
    const OrbitTable& t = need_table();
    r["oracle"] = oracle(*psi, t.ts, t.pairs, theta, c.tol);
    if (n <= kEmbedStateQubits) r["state"] = state_json(*psi);
    if (!o.state_out.empty()) {
      std::ofstream out(o.state_out);
      if (!out) throw std::invalid_argument(fmt::format("cannot write '{}'", o.state_out));
      out << psi->str();
      r["state_file"] = o.state_out;
    }
  } else if (r.value("feasible", false) && !can_simulate) {
    r["oracle"] = nullptr;
    r["note"] = fmt::format("state not reconstructed: n = {} exceeds the statevector cap {}", n, c.max_qubits);
  }
  return r;
}

struct ThresholdOpts {
  GroupOpts g;
  std::string matrix;
};

json cmd_threshold(ThresholdOpts& o, const Common& c, json& config) {
  const PermutationGroup grp = make_group(o.g);
  require_m(o.g);
  const int n = o.g.n, m = o.g.m;
  const GroupKind kind = grp.kind();
  const MatrixVariant variant = resolve_variant(o.matrix, kind);
  config.update({{"group", o.g.group}, {"n", n}, {"m", m}, {"matrix", variant_name(variant)}});
  if (!o.g.generators.empty()) config["generators"] = o.g.generators;

  ReducedSystem sys;
  if (kind == GroupKind::symmetric) {
    sys = ReducedSystem::symmetric(n, m, variant);
  } else {
    OrbitOptions opt;
    opt.max_generic_qubits = c.max_qubits;
    sys = ReducedSystem::from_orbits(build_orbit_table(grp, generate_transitive_set(grp, m), opt));
  }
  ThresholdOptions topt;
  topt.lp.tol = c.tol;
  const ThresholdResult t = find_threshold(sys, topt);
  json r = {{"n", n}, {"m", m}, {"group", kind_name(kind)}, {"matrix_variant", variant_name(variant)},
            {"M", sys.M()}, {"N", sys.N()}, {"solves", t.solves}};
  r["theta_lp"] = t.found ? json(t.theta) : json(nullptr);
  json segs = json::array();
  for (const auto& [lo, hi] : t.segments) segs.push_back({lo, hi});
  r["feasible_segments"] = segs;
  const auto f = best_formula(kind, n, m);
  if (f) {
    r["theta_formula"] = f->theta_star;
    r["formula"] = {{"family", family_name(f->family)}, {"sufficient", f->sufficient},
                    {"necessary", f->necessary}};
    if (f->kappa) r["formula"]["kappa"] = f->kappa;
    r["delta"] = t.found ? json(std::abs(t.theta - f->theta_star)) : json(nullptr);
  } else {
    r["theta_formula"] = nullptr;
    r["delta"] = nullptr;
  }
  return r;
}

struct SweepOpts {
  std::string group = "sym";
  int n_min = 2, n_max = 10;
  std::string m_rule = "half";
};

json cmd_sweep(SweepOpts& o, const Common& c, json& config) {
  const GroupKind kind = parse_kind(o.group);
  MRule rule = MRule::fixed;
  int fixed = 0;
  if (o.m_rule == "half")
    rule = MRule::half;
  else if (o.m_rule == "one")
    rule = MRule::one;
  else if (o.m_rule == "all")
    rule = MRule::all;
  else {
    try {
      std::size_t used = 0;
      fixed = std::stoi(o.m_rule, &used);
      if (used != o.m_rule.size()) throw std::invalid_argument(o.m_rule);
    } catch (const std::exception&) {
      throw std::invalid_argument(fmt::format("--m-rule must be half, one, all or an integer, got '{}'", o.m_rule));
    }
  }
  config.update({{"group", o.group}, {"n_min", o.n_min}, {"n_max", o.n_max}, {"m_rule", o.m_rule}});
  if (kind == GroupKind::cyclic && o.n_max > c.max_qubits)
    throw ResourceLimitError(fmt::format("cyclic sweep to n = {} exceeds the qubit cap {}", o.n_max, c.max_qubits));
  ThresholdOptions topt;
  topt.lp.tol = c.tol;
  const auto rows = sweep_thresholds(kind, o.n_min, o.n_max, rule, fixed, topt);
  json out = json::array();
  for (const auto& row : rows)
    out.push_back({{"n", row.n}, {"m", row.m}, {"group", kind_name(row.group)},
                   {"theta_formula", optional_number(row.theta_formula)},
                   {"theta_lp", optional_number(row.theta_lp)}, {"delta", optional_number(row.delta)}});
  return {{"columns", {"n", "m", "group", "theta_formula", "theta_lp", "delta"}}, {"rows", out}};
}

struct VerifyOpts {
  std::string state_file, trajectories_file, theta;
  int n = 0;
};

// Qubit count from the first data line of a state file, checked before the
// dense allocation.
int peek_state_qubits(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok) return static_cast<int>(tok.size());
  }
  throw std::invalid_argument("state file has no amplitudes");
}

json cmd_verify(VerifyOpts& o, const Common& c, json& config) {
  const std::string state_text = read_file(o.state_file);
  const int n = o.n > 0 ? o.n : peek_state_qubits(state_text);
  require_state_cap(n, c);
  const Angle theta = Angle::parse(o.theta);
  config.update({{"state", o.state_file}, {"trajectories", o.trajectories_file}, {"theta", theta.theta}, {"n", n}});
  const StateVector psi = StateVector::parse(state_text, n);
  const TrajectorySet ts = TrajectorySet::parse(read_file(o.trajectories_file), n);
  const GramMatrix g = gram_matrix(psi, ts, theta);
  const TsReport rep = verify_ts_state(psi, ts, theta, c.tol);
  return {{"n", n},
          {"theta", theta.theta},
          {"trajectories", trajectories_json(ts)},
          {"is_ts", rep.is_ts},
          {"max_offdiag", rep.max_offdiag},
          {"max_diag_dev", rep.max_diag_dev},
          {"gram", gram_json(g)}};
}

struct CodesOpts {
  std::string example;
  int n = 0, m = -1, n_prime = 3;
  std::string theta;
};

json check(const std::string& name, bool passed, json detail = json::object()) {
  detail["name"] = name;
  detail["passed"] = passed;
  return detail;
}

json fixture_checks(const CodeFixture& f, const Common& c) {
  require_state_cap(f.group.n(), c);
  json checks = json::array();
  const CodeSpace code = stabilizer_state(f.group);
  const StateVector& psi = code.basis.at(0);
  checks.push_back(check("unique_state", code.dimension() == 1,
                         {{"rank", f.group.rank()}, {"dimension", code.dimension()}}));
  double fixed_dev = 0;
  for (const auto& g : f.group.generators()) {
    const StateVector gv = apply_pauli(g, psi);
    for (std::size_t i = 0; i < psi.dim(); ++i) fixed_dev = std::max(fixed_dev, std::abs(gv[i] - psi[i]));
  }
  checks.push_back(check("fixed_by_generators", fixed_dev <= 1e-10, {{"max_deviation", fixed_dev}}));
  const TsReport rep = verify_ts_state(psi, f.ts, f.theta, c.tol);
  checks.push_back(check("ts_state", rep.is_ts,
                         {{"max_offdiag", rep.max_offdiag}, {"max_diag_dev", rep.max_diag_dev},
                          {"trajectories", trajectories_json(f.ts)}, {"theta", f.theta.theta}}));
  for (const auto& cs : f.cases) {
    const auto a = projected_anticommutator_check(cs.d, cs.t, cs.t2, f.theta, cs.v_spec);
    json v = json::array();
    bool v_contains_state = true;
    for (const auto& p : cs.v_spec) {
      v.push_back(p.str());
      const StateVector pv = apply_pauli(p, psi);
      for (std::size_t i = 0; i < psi.dim(); ++i)
        if (std::abs(pv[i] - psi[i]) > 1e-10) v_contains_state = false;
    }
    checks.push_back(check(fmt::format("anticommutation {} ({},{})", cs.d.str(), cs.t.str(), cs.t2.str()),
                           a.holds && v_contains_state,
                           {{"norm", a.norm}, {"dim_v", a.dim_v}, {"v", v},
                            {"v_contains_state", v_contains_state}}));
  }
  if (f.name != "toric") {
    // Exhaustive over ordered pairs of distinct trajectories.
    int found = 0, total = 0;
    json missing = json::array();
    for (const auto& a : f.ts)
      for (const auto& b : f.ts) {
        if (a == b) continue;
        ++total;
        if (find_anticommutation_witness(f.group, a, b, f.theta))
          ++found;
        else
          missing.push_back(pair_str({a, b}));
      }
    checks.push_back(check("anticommutation_all_pairs", found == total,
                           {{"pairs", total}, {"with_witness", found}, {"missing", missing}}));
  } else {
    const auto sym = toric_symmetry_group();
    bool invariant = true;
    for (const auto& p : sym.generators()) {
      const StateVector q = permutation_matrix_action(p, psi);
      for (std::size_t i = 0; i < psi.dim(); ++i)
        if (std::abs(q[i] - psi[i]) > 1e-10) invariant = false;
    }
    // -Z4 Z8 is in the group, so the state is fixed by it as well.
    const Pauli z48 = Pauli::parse("-IIIZIIIZ");
    const StateVector zv = apply_pauli(z48, psi);
    double z_dev = 0;
    for (std::size_t i = 0; i < psi.dim(); ++i) z_dev = std::max(z_dev, std::abs(zv[i] - psi[i]));
    checks.push_back(check("fixed_by_-Z4Z8", z_dev <= 1e-10, {{"max_deviation", z_dev}}));
    checks.push_back(check("symmetry_invariance", invariant, {{"generators", {"(1 2)(4 8)", "(3 7)(4 8)"}}}));
    const auto orbits = orbits_pairs(sym, f.ts);
    json dump = json::array();
    for (const auto& o : orbits) {
      json members = json::array();
      for (const auto& p : o.members)
        members.push_back(fmt::format("{}{}", f.ts.find(p.first) + 1, f.ts.find(p.second) + 1));
      dump.push_back(members);
    }
    const json expected = {{"11", "22", "33", "44"}, {"12", "21", "34", "43"}, {"13", "24", "31", "42"}, {"14", "23", "32", "41"}};
    json sorted = dump;
    for (auto& o : sorted) std::sort(o.begin(), o.end());
    std::sort(sorted.begin(), sorted.end());
    checks.push_back(check("pair_orbits", sorted == expected, {{"orbits", dump}}));
  }
  return checks;
}

json cmd_codes(CodesOpts& o, const Common& c, json& config) {
  config["example"] = o.example;
  json r = {{"example", o.example}};
  json checks = json::array();
  if (o.example == "c4" || o.example == "c6" || o.example == "toric") {
    const CodeFixture f = o.example == "c4" ? c4_fixture() : o.example == "c6" ? c6_fixture() : toric_fixture();
    r["generators"] = json::array();
    for (const auto& g : f.group.generators()) r["generators"].push_back(g.str());
    checks = fixture_checks(f, c);
    r["state"] = state_json(stabilizer_state(f.group).basis.at(0));
  } else if (o.example == "cts") {
    const int n = o.n ? o.n : 3;
    const int m = o.m >= 0 ? o.m : 1;
    require_state_cap(n, c);
    Angle theta;
    if (!o.theta.empty())
      theta = Angle::parse(o.theta);
    else
      theta = Angle((m == 1 || m == n - 1) && n > 1 ? threshold_sym_m1(n).theta_star : threshold_sym(n, m).theta_star);
    config.update({{"n", n}, {"m", m}, {"theta", theta.theta}});
    const CtsCode code = build_cts_code(n, m, theta);
    const CodeReport rep = verify_ts_code(code.code.basis, code.ts, code.theta, c.tol);
    checks.push_back(check("ts_code", rep.is_ts_code,
                           {{"max_offdiag", rep.max_offdiag}, {"max_diag_dev", rep.max_diag_dev}}));
    const auto& zero = code.code.basis[0];
    const auto& one = code.code.basis[1];
    auto dist = [](const StateVector& a, const StateVector& b) {
      double d = 0;
      for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
      return d;
    };
    StateVector neg_one = one;
    for (std::size_t i = 0; i < neg_one.dim(); ++i) neg_one[i] = -neg_one[i];
    const double x_swap = std::max(dist(apply_logical_x(zero), one), dist(apply_logical_x(one), zero));
    const double z_phase = std::max(dist(apply_logical_z(zero), zero), dist(apply_logical_z(one), neg_one));
    double anti = 0;
    for (const auto* v : {&zero, &one}) {
      const StateVector xz = apply_logical_x(apply_logical_z(*v));
      const StateVector zx = apply_logical_z(apply_logical_x(*v));
      for (std::size_t i = 0; i < xz.dim(); ++i) anti = std::max(anti, std::abs(xz[i] + zx[i]));
    }
    checks.push_back(check("logical_x_swaps", x_swap <= 1e-12, {{"max_deviation", x_swap}}));
    checks.push_back(check("logical_z_phase", z_phase <= 1e-12, {{"max_deviation", z_phase}}));
    checks.push_back(check("logical_xz_anticommute", anti <= 1e-12, {{"max_deviation", anti}}));
    if (n <= kEmbedStateQubits) {
      r["zero_L"] = state_json(zero);
      r["one_L"] = state_json(one);
    }
  } else if (o.example == "steane-demo") {
    require_state_cap(14, c);
    const SteaneDemo demo = run_steane_demo(c.tol);
    checks.push_back(check("ts_state_14_qubits", demo.clean.is_ts,
                           {{"max_offdiag", demo.clean.max_offdiag}, {"max_diag_dev", demo.clean.max_diag_dev},
                            {"trajectories", {"{1,...,7}", "{8,...,14}"}}, {"theta", std::numbers::pi / 2}}));
    int passed = 0;
    json trials = json::array();
    for (const auto& t : demo.trials) {
      passed += t.passed;
      trials.push_back({{"error", fmt::format("{}{}", t.kind, t.qubit)}, {"syndrome", t.syndrome},
                        {"fidelity", t.fidelity}, {"max_offdiag", t.report.max_offdiag}, {"passed", t.passed}});
    }
    checks.push_back(check("single_error_resilience", passed == static_cast<int>(demo.trials.size()),
                           {{"trials", demo.trials.size()}, {"passed_trials", passed}}));
    r["trials"] = trials;
  } else if (o.example == "repetition-demo") {
    if (o.n_prime < 1) throw std::invalid_argument("--n-prime must be at least 1");
    config["n_prime"] = o.n_prime;
    require_state_cap(2 * o.n_prime, c);
    StateVector logical(2);
    logical[1] = logical[2] = std::sqrt(0.5);
    const TrajectorySet lts(2, {Trajectory::parse("{1}", 2), Trajectory::parse("{2}", 2)});
    const Concatenated cc = concat_repetition(logical, lts, Angle(std::numbers::pi / 2), o.n_prime);
    const TsReport rep = verify_ts_state(cc.state, cc.ts, cc.theta, c.tol);
    checks.push_back(check("ts_state", rep.is_ts,
                           {{"theta", cc.theta.theta}, {"max_offdiag", rep.max_offdiag},
                            {"max_diag_dev", rep.max_diag_dev}, {"trajectories", trajectories_json(cc.ts)}}));
    if (cc.state.n() <= kEmbedStateQubits) r["state"] = state_json(cc.state);
  } else {
    throw std::invalid_argument(fmt::format(
        "unknown example '{}' (c4, c6, toric, cts, steane-demo, repetition-demo)", o.example));
  }
  bool all = true;
  for (const auto& ch : checks) all = all && ch.at("passed").get<bool>();
  r["checks"] = checks;
  r["passed"] = all;
  return r;
}

struct OrbitsOpts {
  GroupOpts g;
};

json cmd_orbits(OrbitsOpts& o, const Common& c, json& config) {
  const PermutationGroup grp = make_group(o.g);
  const int n = o.g.n;
  config.update({{"group", o.g.group}, {"n", n}});
  if (o.g.m >= 0) config["m"] = o.g.m;
  OrbitOptions opt;
  opt.max_generic_qubits = c.max_qubits;
  json r = {{"n", n}, {"group", kind_name(grp.kind())}};
  const auto strings = orbits_bitstrings(grp, opt);
  json so = json::array();
  for (const auto& s : strings) {
    json members = json::array();
    for (const auto& b : s.members) members.push_back(b.str());
    so.push_back({{"rep", s.rep.str()}, {"size", s.size}, {"members", members}});
  }
  r["N"] = strings.size();
  r["string_orbits"] = so;
  if (grp.kind() == GroupKind::symmetric) r["N_closed_form"] = symmetric_string_orbit_count(n);
  if (grp.kind() == GroupKind::cyclic) r["N_closed_form"] = cyclic_string_orbit_count(n);
  if (o.g.m >= 0) {
    require_m(o.g);
    const TrajectorySet ts = generate_transitive_set(grp, o.g.m);
    const auto pairs = orbits_pairs(grp, ts, opt);
    json po = json::array();
    for (const auto& p : pairs) {
      json members = json::array();
      for (const auto& q : p.members) members.push_back(pair_str(q));
      po.push_back({{"rep", pair_str(p.rep)}, {"size", p.size}, {"members", members}});
    }
    r["M"] = pairs.size();
    r["pair_orbits"] = po;
    r["trajectories"] = ts.size();
    if (grp.kind() == GroupKind::symmetric) r["M_closed_form"] = symmetric_pair_orbit_count(n, o.g.m);
    if (grp.kind() == GroupKind::cyclic) r["M_closed_form"] = cyclic_pair_orbit_count(n, o.g.m);
    const auto b = burnside_bounds(grp, ts);
    r["burnside"] = {{"M_lower", b.lower_M}, {"M_upper", b.upper_M}, {"N_lower", b.lower_N}, {"N_upper", b.upper_N}};
  }
  return r;
}

void add_group_options(CLI::App* sub, GroupOpts& g, bool m_required) {
  sub->add_option("--group", g.group, "Permutation group: sym, cyc or generic")
      ->check(CLI::IsMember({"sym", "cyc", "generic"}));
  sub->add_option("--generators", g.generators, "File of image arrays, one generator per line");
  sub->add_option("-n", g.n, "Number of qubits");
  auto* m = sub->add_option("-m", g.m, "Trajectory size");
  if (m_required) m->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trajectory-sensing state solver"};
  app.set_version_flag("--version", std::string(TSOLVE_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  int max_qubits_flag = 0;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--tol", common.tol, "Tolerance for feasibility and orthogonality verdicts");
  app.add_option("--max-qubits", max_qubits_flag, "Statevector qubit cap (default 24 or TSOLVE_MAX_QUBITS)");
  app.add_option("--seed", common.seed, "Seed recorded in the report for reproducible runs");
  app.add_flag("--deterministic", common.deterministic, "Report zero wall time so reruns are byte-identical");

  SolveOpts solve;
  auto* s_solve = app.add_subcommand("solve", "Decide TS-state existence and build a state");
  add_group_options(s_solve, solve.g, true);
  s_solve->add_option("--theta", solve.theta, "Angle, e.g. 2.356 or 3pi/4")->required();
  s_solve->add_option("--matrix", solve.matrix, "Reduced matrix: A or Aprime (sym default Aprime)");
  s_solve->add_flag("--construct", solve.construct, "Use the closed-form constructions");
  s_solve->add_flag("--lp-fallback", solve.lp_fallback, "With --construct, fall back to the LP below the closed-form threshold");
  s_solve->add_option("--state-out", solve.state_out, "Write the state in 'bits re im' format");

  ThresholdOpts thr;
  auto* s_thr = app.add_subcommand("threshold", "Lowest feasible angle by scan and bisection");
  add_group_options(s_thr, thr.g, true);
  s_thr->add_option("--matrix", thr.matrix, "Reduced matrix: A or Aprime");

  SweepOpts sweep;
  auto* s_sweep = app.add_subcommand("sweep", "Formula vs LP thresholds over a range of n");
  s_sweep->add_option("--group", sweep.group, "sym or cyc")->check(CLI::IsMember({"sym", "cyc"}));
  s_sweep->add_option("--n-min", sweep.n_min, "Smallest n");
  s_sweep->add_option("--n-max", sweep.n_max, "Largest n");
  s_sweep->add_option("--m-rule", sweep.m_rule, "half, one, all or a fixed m");

  VerifyOpts ver;
  auto* s_ver = app.add_subcommand("verify", "Gram-matrix check of a state against trajectories");
  s_ver->add_option("--state", ver.state_file, "State file ('bits re im' per line)")->required();
  s_ver->add_option("--trajectories", ver.trajectories_file, "Trajectory file ('{1,2}' per line)")->required();
  s_ver->add_option("--theta", ver.theta, "Angle")->required();
  s_ver->add_option("-n", ver.n, "Number of qubits (default: from the state file)");

  CodesOpts codes;
  auto* s_codes = app.add_subcommand("codes", "Worked stabilizer and concatenation examples");
  s_codes->add_option("example", codes.example, "c4, c6, toric, cts, steane-demo or repetition-demo")->required();
  s_codes->add_option("-n", codes.n, "Qubits for cts (odd)");
  s_codes->add_option("-m", codes.m, "Trajectory size for cts");
  s_codes->add_option("--theta", codes.theta, "Angle for cts (default: threshold)");
  s_codes->add_option("--n-prime", codes.n_prime, "Repetition factor for repetition-demo");

  OrbitsOpts orb;
  auto* s_orb = app.add_subcommand("orbits", "Dump bit-string and trajectory-pair orbits");
  add_group_options(s_orb, orb.g, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string command;
  int exit_code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    common.max_qubits = resolve_max_qubits(max_qubits_flag);
    json config;
    json result;
    if (s_solve->parsed()) {
      command = "solve";
      result = cmd_solve(solve, common, config);
    } else if (s_thr->parsed()) {
      command = "threshold";
      result = cmd_threshold(thr, common, config);
    } else if (s_sweep->parsed()) {
      command = "sweep";
      result = cmd_sweep(sweep, common, config);
    } else if (s_ver->parsed()) {
      command = "verify";
      result = cmd_verify(ver, common, config);
    } else if (s_codes->parsed()) {
      command = "codes";
      result = cmd_codes(codes, common, config);
      if (!result.at("passed").get<bool>()) exit_code = 3;
    } else if (s_orb->parsed()) {
      command = "orbits";
      result = cmd_orbits(orb, common, config);
    }
    config["isa"] = kernels::isa_name(kernels::active_isa());
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(common, command, std::move(config), std::move(result), ms);
    return exit_code;
  } catch (const ResourceLimitError& e) {
    exit_code = 2;
    std::cerr << "tsolve: resource limit: " << e.what() << "\n";
  } catch (const InvariantError& e) {
    exit_code = 3;
    std::cerr << "tsolve: invariant violation: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    exit_code = 1;
    std::cerr << "tsolve: error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    exit_code = 3;
    std::cerr << "tsolve: internal error: " << e.what() << "\n";
  }
  if (common.format == "json") {
    const char* kind = exit_code == 1 ? "usage" : exit_code == 2 ? "resource_limit" : "invariant";
    json err = {{"schema", kSchema}, {"version", TSOLVE_VERSION}, {"command", command},
                {"error", {{"kind", kind}, {"exit_code", exit_code}}}};
    std::cout << err.dump(2) << "\n";
  }
  return exit_code;
}
