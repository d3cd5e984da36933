// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

// Named input presets, structured-record serialization, and the alpha grid
// used by batch sweeps. Machine output is one JSON object per line; every
// polynomial is emitted in the flat term grammar the parser accepts, and all
// rational values are exact strings.

#ifndef EQSING_IO_HPP
#define EQSING_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqsing/lattice.hpp"
#include "eqsing/localsing.hpp"
#include "eqsing/stabilize.hpp"
#include "eqsing/stratum.hpp"
#include "json.hpp"

namespace eqsing {

using Json = nlohmann::ordered_json;

// One pinned input: the exact spec a named example runs on.
struct Preset {
  std::string name;
  std::vector<int> alpha;
  long degree;
  std::string note;
};

inline const std::vector<Preset>& presets() {
  static const std::vector<Preset> list = {
      {"gur1-d6", {6, 5}, 6, "curve with tau 20 and one obstruction"},
      {"gur1-d7a", {7, 5}, 7, "curve ladder step with quadratic rank 2"},
      {"gur1-d7b", {6, 6}, 7, "curve ladder step with quadratic rank 2"},
      {"gur1-d8a", {8, 5}, 8, "curve ladder step with quadratic rank 3"},
      {"gur1-d8b", {7, 6}, 8, "curve ladder step with quadratic rank 3"},
      {"qhomn-n4d3", {3, 3, 3, 3}, 3, "empty slot set, smooth non-expected"},
      {"qhomn-n3d5", {4, 4, 4}, 5, "direct regime surface case"},
      {"case2-n2d9", {10, 4}, 9, "chained regime curve case"},
      {"synth-d4", {5, 4}, 4, "small base with one obstruction"},
  };
  return list;
}

inline const Preset* find_preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

inline SingularitySpec preset_spec(const std::string& name) {
  const Preset* p = find_preset(name);
  if (p == nullptr) {
    std::string msg = "unknown preset '" + name + "'; available:";
    for (const auto& q : presets()) msg += " " + q.name;
    throw DomainError(msg);
  }
  return SingularitySpec::make(p->alpha, p->degree);
}

// Machine integers stay JSON numbers; anything that can leave the long range
// is emitted as an exact string instead.
inline long z_long(const Z& v) {
  if (!v.fits_slong_p())
    throw DomainError("value exceeds the machine integer range");
  return mpz_get_si(v.get_mpz_t());
}

inline Json q_json(const Q& v) { return v.get_str(); }

inline Json exponent_json(const Exponent& e) {
  Json a = Json::array();
  for (std::size_t i = 0; i < e.nvars(); ++i) a.push_back(e[i]);
  return a;
}

// Fully distributed term emission. The native renderer parenthesizes
// multi-term coefficients; this form re-parses with parse_param_polynomial.
inline std::string flat_param_str(const ParamPolynomial& f) {
  const ParamTable& table = *f.table();
  std::string s;
  bool first = true;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    std::string xmono;
    for (std::size_t i = 0; i < it->first.nvars(); ++i) {
      if (it->first[i] == 0) continue;
      if (!xmono.empty()) xmono += "*";
      xmono += "x" + std::to_string(i + 1);
      if (it->first[i] > 1) xmono += "^" + std::to_string(it->first[i]);
    }
    for (const auto& [m, c] : it->second.terms()) {
      Q v = c;
      bool neg = v < 0;
      if (first) {
        if (neg) s += "-";
        first = false;
      } else {
        s += neg ? " - " : " + ";
      }
      if (neg) v = -v;
      std::string t;
      if (v != 1 || (m.is_one() && xmono.empty())) t = v.get_str();
      for (const auto& [id, e] : m.factors) {
        if (!t.empty()) t += "*";
        t += table.name(id);
        if (e > 1) t += "^" + std::to_string(e);
      }
      if (!xmono.empty()) {
        if (!t.empty()) t += "*";
        t += xmono;
      }
      s += t;
    }
  }
  return s.empty() ? "0" : s;
}

inline Json spec_json(const SingularitySpec& spec) {
  Json j;
  j["alpha"] = spec.alpha;
  j["degree"] = spec.d;
  bool any_lambda = false;
  for (const Q& l : spec.lambda) any_lambda = any_lambda || l != 0;
  if (any_lambda) {
    Json ls = Json::array();
    for (const Q& l : spec.lambda) ls.push_back(q_json(l));
    j["lambda"] = ls;
  }
  return j;
}

inline Json invariants_json(const SingularitySpec& spec) {
  Json j = spec_json(spec);
  long mu = milnor_number(spec);
  j["milnor"] = mu;
  j["tau"] = mu;
  j["h1"] = h1(spec, spec.d);
  j["expected_dimension"] = expected_dimension(spec);
  j["case"] = to_string(derivation_case_of(spec));
  return j;
}

inline Json castelnuovo_json(const CastelnuovoProfile& p) {
  Json j;
  j["k_first"] = p.k_first;
  j["values"] = p.values;
  j["a"] = p.a ? Json(*p.a) : Json(nullptr);
  j["t"] = p.t ? Json(*p.t) : Json(nullptr);
  return j;
}

inline Json polytope_json(const NewtonPolytope& np) {
  Json j;
  Json vs = Json::array();
  for (const auto& v : np.vertices) vs.push_back(exponent_json(v));
  j["vertices"] = vs;
  if (np.quasihomogeneous_weights) {
    Json ws = Json::array();
    for (const Q& w : *np.quasihomogeneous_weights) ws.push_back(q_json(w));
    j["quasihomogeneous_weights"] = ws;
  } else {
    j["quasihomogeneous_weights"] = nullptr;
  }
  return j;
}

inline Json last_equation_json(const LastEquationReport& last) {
  Json j;
  j["present"] = last.present;
  j["identically_zero"] = last.identically_zero;
  j["linear_part_zero"] = last.linear_part_zero;
  Json pairs = Json::array();
  for (const auto& p : last.pairing) {
    Json e;
    e["slot_a"] = exponent_json(p.slot_a);
    e["slot_b"] = exponent_json(p.slot_b);
    e["coefficient"] = q_json(p.coefficient);
    pairs.push_back(e);
  }
  j["pairing"] = pairs;
  j["pairing_matches_dual_structure"] = last.pairing_matches_dual_structure;
  j["all_pair_coefficients_positive"] = last.all_pair_coefficients_positive;
  j["quadratic_rank"] = last.quadratic_rank;
  j["tail_in_edge_square_times_maximal"] = last.tail_in_edge_square_times_maximal;
  j["derivatives_in_edge_ideal"] = last.derivatives_in_edge_ideal;
  return j;
}

inline Json classification_json(const StratumClassification& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["case"] = to_string(c.derivation_case);
  j["tau"] = z_long(c.tau);
  j["h1"] = c.h1;
  j["rank_linear_virtual"] = c.rank_linear_virtual;
  j["rank_linear_emitted"] = c.rank_linear_emitted;
  j["rank_linear_total"] = c.rank_linear_total;
  j["rank_matches_tau_minus_h1"] = c.rank_matches_tau_minus_h1;
  j["quadratic_rank"] = c.quadratic_rank;
  j["effective_free_set_empty"] = c.effective_free_set_empty;
  j["expected_dimension"] = z_long(c.expected_dimension);
  j["group_orbit_dimension"] = z_long(c.group_orbit_dimension);
  j["substratum_free_dimension"] = z_long(c.substratum_free_dimension);
  j["tangent_dimension"] = z_long(c.tangent_dimension);
  j["last_equation"] = last_equation_json(c.last);
  j["certificates"] = c.certificates;
  return j;
}

inline Json equation_json(const StratumEquation& eq, const ParamTable& table) {
  Json j;
  j["target"] = eq.target ? exponent_json(*eq.target) : Json(nullptr);
  j["role"] = eq.is_last ? "last" : role_letter(eq.role);
  j["equation"] = eq.full.str(table);
  if (!eq.tail_certificate.empty()) j["tail"] = eq.tail_certificate;
  return j;
}

inline Json system_json(const EquationSystem& sys, bool include_rows) {
  Json j;
  j["alpha"] = sys.spec.alpha;
  j["degree"] = sys.spec.d;
  j["case"] = to_string(sys.derivation_case);
  j["slots"] = sys.roles.size();
  Json edges = Json::array();
  for (const auto& e : sys.edge_slots) edges.push_back(exponent_json(e));
  j["edge_slots"] = edges;
  j["virtual_rows"] = sys.virtual_rows.size();
  j["rows_basis_low"] = sys.rows_basis_low;
  j["rows_pure_sub"] = sys.rows_pure_sub;
  j["rows_basis_above"] = sys.rows_basis_above;
  j["coordinate_changes"] = sys.changes.size();
  if (include_rows) {
    Json rows = Json::array();
    for (const auto& eq : sys.equations) rows.push_back(equation_json(eq, *sys.table));
    j["equations"] = rows;
  }
  j["last_equation"] = last_equation_json(sys.last);
  return j;
}

inline Json suspended_json(const SuspendedSystem& ss) {
  Json j;
  j["alpha"] = ss.spec.base.alpha;
  j["degree"] = ss.spec.d;
  j["squares"] = ss.spec.m;
  j["suspended_alpha"] = ss.suspended.alpha;
  j["case"] = to_string(ss.sys.derivation_case);
  j["tau"] = ss.tau;
  j["h1"] = ss.h1;
  j["rank_linear_total"] = ss.rank_linear_total;
  j["block_ranks"] = ss.block_ranks;
  if (ss.h1 == 1) {
    long combined = 0;
    for (long b : ss.block_ranks) combined += b;
    j["combined_quadratic_rank"] = combined;
  } else {
    j["combined_quadratic_rank"] = nullptr;
  }
  return j;
}

inline Json witness_json(const WitnessCertificate& w, const ParamTable& table) {
  Json j;
  j["found"] = w.found;
  if (w.found) {
    j["special"] = exponent_json(w.special);
    j["split_j"] = exponent_json(w.J);
    j["split_k"] = exponent_json(w.K);
    j["slot_j"] = table.name(table.id_of(w.slot_J));
    j["slot_k"] = table.name(table.id_of(w.slot_K));
    Json pt;
    for (const auto& [id, v] : w.point) pt[table.name(id)] = q_json(v);
    j["point"] = pt;
    j["minor"] = q_json(w.minor_value);
    j["jacobian_rank"] = w.jacobian_rank;
  }
  j["note"] = w.note;
  return j;
}

// Descending exponent tuples with every entry >= 2 and bounded sum, in
// ascending lexicographic order. The sweep driver iterates this grid.
namespace detail {

inline void alpha_grid_rec(int remaining_vars, long sum_left, int max_entry,
                           std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (remaining_vars == 0) {
    out.push_back(cur);
    return;
  }
  long reserve = 2L * (remaining_vars - 1);
  for (int a = 2; a <= max_entry && a + reserve <= sum_left; ++a) {
    cur.push_back(a);
    alpha_grid_rec(remaining_vars - 1, sum_left - a, a, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<std::vector<int>> canonical_alpha_grid(int nvars,
                                                          long sum_max) {
  if (nvars < 1) throw DomainError("alpha grid needs at least one variable");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  int cap = static_cast<int>(sum_max);
  detail::alpha_grid_rec(nvars, sum_max, cap, cur, out);
  return out;
}

}  // namespace eqsing

#endif  // EQSING_IO_HPP
