// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line driver. Dispatches to the library modules, prints either
// human-readable lines or one JSON record per line, and maps error classes
// to fixed exit codes: 0 success, 2 parse error, 3 domain error,
// 4 certificate inconclusive.

#include <atomic>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "eqsing/io.hpp"
#include "eqsing/parse.hpp"
#include "eqsing/reduction.hpp"

namespace {

using namespace eqsing;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInconclusive = 4;

struct Output {
  bool machine = false;
  void record(const Json& j) const { std::cout << j.dump() << "\n"; }
  void line(const std::string& s) const { std::cout << s << "\n"; }
};

Q parse_rational(const std::string& s) {
  Q v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("invalid rational '" + s + "'", 0);
  if (v.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  v.canonicalize();
  return v;
}

// Spec selection shared by the singularity subcommands: either a named
// preset or an explicit exponent list.
struct SpecFlags {
  std::string preset;
  std::vector<int> alpha;
  long degree = 0;
  std::vector<std::string> lambda;
  CLI::Option* opt_preset = nullptr;
  CLI::Option* opt_alpha = nullptr;
  CLI::Option* opt_degree = nullptr;

  void attach(CLI::App* cmd) {
    opt_preset = cmd->add_option("--preset", preset,
                                 "named example input (see 'presets')");
    opt_alpha = cmd->add_option("--alpha", alpha,
                                "pure-power exponents, e.g. 6,5")
                    ->delimiter(',');
    opt_degree = cmd->add_option(
        "--degree", degree, "ambient degree d (default: sum(alpha) - 2n - 1)");
    cmd->add_option("--lambda", lambda,
                    "deformation multipliers, one rational per variable")
        ->delimiter(',');
  }

  SingularitySpec resolve() const {
    if (opt_preset->count() > 0) {
      if (opt_alpha->count() > 0 || opt_degree->count() > 0 ||
          !lambda.empty())
        throw ParseError("--preset excludes --alpha/--degree/--lambda", 0);
      const Preset* p = find_preset(preset);
      if (p == nullptr) {
        std::string msg = "unknown preset '" + preset + "'; available:";
        for (const auto& q : presets()) msg += " " + q.name;
        throw ParseError(msg, 0);
      }
      return SingularitySpec::make(p->alpha, p->degree);
    }
    if (opt_alpha->count() == 0)
      throw ParseError("need --preset or --alpha", 0);
    std::optional<long> d;
    if (opt_degree->count() > 0) d = degree;
    std::vector<Q> ls;
    for (const auto& s : lambda) ls.push_back(parse_rational(s));
    return SingularitySpec::make(alpha, d, ls);
  }
};

std::string exponent_str(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.nvars(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

// ---- h1 ----

struct H1Args {
  SpecFlags spec;
  long level = 0;
  CLI::Option* opt_level = nullptr;
};

int run_h1(const H1Args& a, const Output& out) {
  SingularitySpec spec = a.spec.resolve();
  long level = a.opt_level->count() > 0 ? a.level : spec.d;
  long v = h1(spec, level);
  long mu = milnor_number(spec);
  if (out.machine) {
    Json j = spec_json(spec);
    j["level"] = level;
    j["h1"] = v;
    j["tau"] = mu;
    out.record(j);
  } else {
    out.line("h1(" + std::to_string(level) + ") = " + std::to_string(v));
    out.line("tau = " + std::to_string(mu));
  }
  return kExitOk;
}

// ---- tjurina ----

struct TjurinaArgs {
  SpecFlags spec;
  std::string poly;
  std::size_t nvars = 0;
  CLI::Option* opt_poly = nullptr;
};

int run_tjurina(const TjurinaArgs& a, const Output& out) {
  long tau = 0;
  Json j;
  if (a.opt_poly->count() > 0) {
    if (a.nvars == 0) throw ParseError("--poly needs --nvars", 0);
    Polynomial f = parse_polynomial(a.poly, a.nvars);
    tau = tjurina_number(f);
    j["poly"] = f.str();
  } else {
    SingularitySpec spec = a.spec.resolve();
    tau = milnor_number(spec);
    j = spec_json(spec);
  }
  if (out.machine) {
    j["tjurina"] = tau;
    j["determinacy_bound"] = determinacy_bound(tau);
    out.record(j);
  } else {
    out.line("tjurina = " + std::to_string(tau));
  }
  return kExitOk;
}

// ---- polytope ----

int run_polytope(const std::string& poly, std::size_t nvars,
                 const Output& out) {
  Polynomial f = parse_polynomial(poly, nvars);
  NewtonPolytope np = newton_polytope(f);
  if (out.machine) {
    Json j;
    j["poly"] = f.str();
    Json body = polytope_json(np);
    j["vertices"] = body["vertices"];
    j["quasihomogeneous_weights"] = body["quasihomogeneous_weights"];
    out.record(j);
    return kExitOk;
  }
  std::string vs = "vertices:";
  for (const auto& v : np.vertices) vs += " " + exponent_str(v);
  out.line(vs);
  if (np.quasihomogeneous_weights) {
    std::string ws = "weights:";
    for (const Q& w : *np.quasihomogeneous_weights) ws += " " + w.get_str();
    out.line(ws);
  } else {
    out.line("weights: none (not quasihomogeneous)");
  }
  return kExitOk;
}

// ---- castelnuovo ----

int run_castelnuovo(const SpecFlags& sf, const Output& out) {
  SingularitySpec spec = sf.resolve();
  CastelnuovoProfile p = castelnuovo_profile(spec);
  if (out.machine) {
    Json j = spec_json(spec);
    Json body = castelnuovo_json(p);
    for (auto& [k, v] : body.items()) j[k] = v;
    out.record(j);
    return kExitOk;
  }
  std::string vs = "C =";
  for (long v : p.values) vs += " " + std::to_string(v);
  out.line(vs + " (from k = " + std::to_string(p.k_first) + ")");
  out.line("a = " + (p.a ? std::to_string(*p.a) : "none") + ", t = " +
           (p.t ? std::to_string(*p.t) : "none"));
  return kExitOk;
}

// ---- nf ----

struct NfArgs {
  std::string poly;
  std::vector<std::string> gens;
  std::string ord = "lp";
  std::vector<std::string> weights;
  std::size_t nvars = 0;
};

Ordering make_ordering(const NfArgs& a) {
  if (a.ord == "lp") return Ordering::lp();
  if (a.ord == "Dp") return Ordering::Dp();
  if (a.ord == "ls") return Ordering::ls();
  if (a.ord == "Ds") return Ordering::Ds();
  std::vector<Q> w;
  for (const auto& s : a.weights) w.push_back(parse_rational(s));
  if (w.size() != a.nvars)
    throw ParseError("weighted ordering needs one --weights entry per variable",
                     0);
  for (const Q& x : w)
    if (x <= 0) throw ParseError("ordering weights must be positive", 0);
  if (a.ord == "Wp") return Ordering::Wp(std::move(w));
  return Ordering::Ws(std::move(w));
}

int run_nf(const NfArgs& a, const Output& out) {
  if (a.nvars == 0) throw ParseError("--nvars is required", 0);
  Polynomial f = parse_polynomial(a.poly, a.nvars);
  std::vector<Polynomial> gens;
  for (const auto& g : a.gens) gens.push_back(parse_polynomial(g, a.nvars));
  if (gens.empty()) throw ParseError("--gens is required", 0);
  Ordering ord = make_ordering(a);

  Json j;
  std::string nf_str;
  std::size_t steps = 0;
  if (ord.kind() == OrderKind::NegWeightLex) {
    auto table = std::make_shared<ParamTable>();
    std::vector<ParamPolynomial> pgens;
    std::vector<Exponent> lms;
    for (const auto& g : gens) {
      pgens.push_back(ParamPolynomial::from_polynomial(g, table, -1));
      lms.push_back(detail::param_leading_exponent(pgens.back(), ord));
    }
    Exponent hc = highest_corner(lms, ord);
    ParamPolynomial pf = ParamPolynomial::from_polynomial(f, table, -1);
    LocalNFResult res = truncated_local_nf(pf, pgens, ord, hc, true);
    Polynomial r(f.nvars());
    for (const auto& [e, c] : res.remainder) r.add_term(e, c.constant_part());
    nf_str = r.str();
    steps = res.steps.size();
    j["highest_corner"] = exponent_json(hc);
  } else {
    std::vector<NFTraceStep> trace;
    Polynomial r = red_nf_buchberger(f, gens, ord, &trace);
    nf_str = r.str();
    steps = trace.size();
  }
  if (out.machine) {
    j["nf"] = nf_str;
    j["steps"] = steps;
    out.record(j);
  } else {
    out.line(nf_str);
  }
  return kExitOk;
}

// ---- stratum ----

int run_stratum(const SpecFlags& sf, const std::string& emit, int cap,
                const Output& out) {
  SingularitySpec spec = sf.resolve();
  if (emit == "system") {
    EquationSystem sys = derive_stratum(spec, cap);
    if (out.machine) {
      out.record(system_json(sys, true));
      return kExitOk;
    }
    out.line("case: " + std::string(to_string(sys.derivation_case)));
    out.line("virtual rows: " + std::to_string(sys.virtual_rows.size()));
    for (const auto& eq : sys.equations) {
      std::string head = eq.is_last ? "last" : role_letter(eq.role);
      std::string target =
          eq.target ? " " + exponent_str(*eq.target) : std::string();
      out.line(head + target + ": " + eq.full.str(*sys.table));
    }
    return kExitOk;
  }

  StratumClassification cls = classify_stratum(spec, cap);
  if (emit == "certificates") {
    if (out.machine) {
      Json j = spec_json(spec);
      j["verdict"] = to_string(cls.verdict);
      j["certificates"] = cls.certificates;
      j["last_equation"] = last_equation_json(cls.last);
      out.record(j);
      return kExitOk;
    }
    for (const auto& c : cls.certificates) out.line(c);
    return kExitOk;
  }
  if (out.machine) {
    Json j = spec_json(spec);
    Json body = classification_json(cls);
    for (auto& [k, v] : body.items()) j[k] = v;
    out.record(j);
    return kExitOk;
  }
  out.line("verdict: " + std::string(to_string(cls.verdict)));
  out.line("tau = " + std::to_string(z_long(cls.tau)) + ", h1 = " +
           std::to_string(cls.h1) + ", quadratic rank = " +
           std::to_string(cls.quadratic_rank));
  out.line("tangent dimension = " + std::to_string(z_long(cls.tangent_dimension)) +
           ", expected = " + std::to_string(z_long(cls.expected_dimension)));
  return kExitOk;
}

// ---- stabilize ----

struct StabilizeArgs {
  SpecFlags spec;
  int squares = 0;
  long suspension_degree = 0;
  bool unisingular = false;
  std::string emit = "invariants";
  int height_budget = 8;
  CLI::Option* opt_sdeg = nullptr;
};

int run_stabilize(const StabilizeArgs& a, int cap, const Output& out) {
  SingularitySpec base = a.spec.resolve();
  std::optional<long> sd;
  if (a.opt_sdeg->count() > 0) sd = a.suspension_degree;
  SuspensionSpec spec = SuspensionSpec::make(base, a.squares, sd, a.unisingular);
  SuspendedSystem ss = derive_suspended_system(spec, cap);

  if (a.emit == "certificate") {
    WitnessCertificate w = witness_reduced_component(ss, a.height_budget);
    if (out.machine) {
      Json j = suspended_json(ss);
      Json body = witness_json(w, *ss.sys.table);
      for (auto& [k, v] : body.items()) j[k] = v;
      out.record(j);
    } else {
      out.line(w.note);
      if (w.found) {
        out.line("special slot: " + exponent_str(w.special) +
                 ", jacobian rank = " + std::to_string(w.jacobian_rank));
        out.line("minor = " + w.minor_value.get_str());
      }
    }
    return w.found ? kExitOk : kExitInconclusive;
  }

  Json j = suspended_json(ss);
  j["unisingular"] = spec.unisingular;
  if (a.emit == "system") j["system"] = system_json(ss.sys, true);
  if (out.machine) {
    out.record(j);
    return kExitOk;
  }
  out.line("suspended alpha: " + j["suspended_alpha"].dump());
  out.line("tau = " + std::to_string(ss.tau) + ", h1 = " + std::to_string(ss.h1) +
           ", linear rank = " + std::to_string(ss.rank_linear_total));
  std::string blocks = "block ranks:";
  for (long b : ss.block_ranks) blocks += " " + std::to_string(b);
  out.line(blocks);
  if (a.emit == "system") {
    for (const auto& eq : ss.sys.equations) {
      std::string head = eq.is_last ? "last" : role_letter(eq.role);
      std::string target =
          eq.target ? " " + exponent_str(*eq.target) : std::string();
      out.line(head + target + ": " + eq.full.str(*ss.sys.table));
    }
  }
  return kExitOk;
}

// ---- sweep ----

struct SweepArgs {
  int nvars = 2;
  long sum_max = 10;
  unsigned jobs = 0;
};

int run_sweep(const SweepArgs& a, const Output& out) {
  std::vector<std::vector<int>> grid;
  for (auto& alpha : canonical_alpha_grid(a.nvars, a.sum_max))
    if (SingularitySpec::default_degree(alpha) >= 1)
      grid.push_back(std::move(alpha));

  std::vector<std::string> lines(grid.size());
  auto work = [&](std::size_t i) {
    SingularitySpec spec = SingularitySpec::make(grid[i]);
    long mu = milnor_number(spec);
    long hd = h1(spec, spec.d);
    long h2d2 = h1(spec, 2 * spec.d - 2);
    CastelnuovoProfile p = castelnuovo_profile(spec);
    if (out.machine) {
      Json j = spec_json(spec);
      j["tau"] = mu;
      j["h1"] = hd;
      j["h1_2d_minus_2"] = h2d2;
      j["castelnuovo_t"] = p.t ? Json(*p.t) : Json(nullptr);
      lines[i] = j.dump();
    } else {
      std::string s = "alpha=";
      for (std::size_t k = 0; k < grid[i].size(); ++k)
        s += (k ? "," : "") + std::to_string(grid[i][k]);
      s += " d=" + std::to_string(spec.d) + " tau=" + std::to_string(mu) +
           " h1=" + std::to_string(hd) +
           " h1(2d-2)=" + std::to_string(h2d2);
      lines[i] = s;
    }
  };

  unsigned jobs = a.jobs > 0 ? a.jobs : std::thread::hardware_concurrency();
  if (jobs < 1) jobs = 1;
  if (jobs > grid.size()) jobs = static_cast<unsigned>(grid.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= lines.size()) return;
          work(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& s : lines) out.line(s);
  return kExitOk;
}

// ---- presets listing ----

int run_presets(const Output& out) {
  for (const auto& p : presets()) {
    if (out.machine) {
      Json j;
      j["name"] = p.name;
      j["alpha"] = p.alpha;
      j["degree"] = p.degree;
      j["note"] = p.note;
      out.record(j);
    } else {
      std::string s = p.name + ": alpha=";
      for (std::size_t k = 0; k < p.alpha.size(); ++k)
        s += (k ? "," : "") + std::to_string(p.alpha[k]);
      s += " d=" + std::to_string(p.degree) + " (" + p.note + ")";
      out.line(s);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact invariants and equisingular stratum germs of quasihomogeneous "
      "hypersurface singularities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "eqsing 0.1.0");

  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->transform(CLI::IsMember({"human", "machine"}));
  int param_cap = 0;
  CLI::Option* opt_cap = app.add_option(
      "--param-cap", param_cap,
      "parameter-degree truncation; negative means exact (default: "
      "EQSING_MAX_PARAM_DEG or 3)");
  unsigned long long seed = 0;
  app.add_option("--seed", seed, "sampling seed recorded in the run config");

  H1Args h1a;
  CLI::App* cmd_h1 = app.add_subcommand("h1", "lattice obstruction dimension");
  h1a.spec.attach(cmd_h1);
  h1a.opt_level = cmd_h1->add_option("--level", h1a.level,
                                     "twist level k (default: degree)");

  TjurinaArgs tja;
  CLI::App* cmd_tj = app.add_subcommand("tjurina", "tjurina number");
  tja.spec.attach(cmd_tj);
  tja.opt_poly = cmd_tj->add_option("--poly", tja.poly, "explicit polynomial");
  cmd_tj->add_option("--nvars", tja.nvars, "variable count for --poly");

  std::string pt_poly;
  std::size_t pt_nvars = 0;
  CLI::App* cmd_pt = app.add_subcommand("polytope", "newton polytope");
  cmd_pt->add_option("--poly", pt_poly, "polynomial")->required();
  cmd_pt->add_option("--nvars", pt_nvars, "variable count")->required();

  SpecFlags casf;
  CLI::App* cmd_ca = app.add_subcommand("castelnuovo", "castelnuovo function");
  casf.attach(cmd_ca);

  NfArgs nfa;
  CLI::App* cmd_nf = app.add_subcommand("nf", "normal form reduction");
  cmd_nf->add_option("--poly", nfa.poly, "polynomial to reduce")->required();
  cmd_nf->add_option("--gens", nfa.gens, "divisor list, ';'-separated")
      ->required()
      ->delimiter(';');
  cmd_nf->add_option("--ord", nfa.ord, "monomial ordering")
      ->required()
      ->transform(CLI::IsMember({"lp", "Dp", "ls", "Ds", "Wp", "Ws"}));
  cmd_nf->add_option("--weights", nfa.weights, "ordering weights, rational")
      ->delimiter(',');
  cmd_nf->add_option("--nvars", nfa.nvars, "variable count")->required();

  SpecFlags stf;
  std::string st_emit = "verdict";
  CLI::App* cmd_st = app.add_subcommand("stratum", "equisingular stratum germ");
  stf.attach(cmd_st);
  cmd_st->add_option("--emit", st_emit, "what to print")
      ->transform(CLI::IsMember({"verdict", "system", "certificates"}));

  StabilizeArgs sba;
  CLI::App* cmd_sb =
      app.add_subcommand("stabilize", "suspension by squares of new variables");
  sba.spec.attach(cmd_sb);
  cmd_sb->add_option("--squares", sba.squares, "number of added squares")
      ->required();
  sba.opt_sdeg = cmd_sb->add_option("--suspension-degree", sba.suspension_degree,
                                    "ambient degree of the suspended family "
                                    "(default: base degree)");
  cmd_sb->add_flag("--unisingular", sba.unisingular,
                   "add lambda terms for the new variables");
  cmd_sb->add_option("--emit", sba.emit, "what to print")
      ->transform(CLI::IsMember({"invariants", "system", "certificate"}));
  cmd_sb->add_option("--height-budget", sba.height_budget,
                     "witness point height bound");

  SweepArgs swa;
  CLI::App* cmd_sw = app.add_subcommand("sweep", "batch run over an alpha grid");
  cmd_sw->add_option("--nvars", swa.nvars, "variable count")->required();
  cmd_sw->add_option("--sum-max", swa.sum_max, "maximal exponent sum")
      ->required();
  cmd_sw->add_option("--jobs", swa.jobs, "worker threads (default: hardware)");

  CLI::App* cmd_pr = app.add_subcommand("presets", "list the named inputs");

  // Global flags may follow the subcommand on the command line.
  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  Output out;
  out.machine = format == "machine";
  int cap = opt_cap->count() > 0 ? param_cap : default_param_cap();

  auto fail = [&](const char* kind, const std::string& msg, int code) {
    if (out.machine) {
      Json j;
      j["error"] = kind;
      j["message"] = msg;
      out.record(j);
    } else {
      std::cerr << "error (" << kind << "): " << msg << "\n";
    }
    return code;
  };

  try {
    if (cmd_h1->parsed()) return run_h1(h1a, out);
    if (cmd_tj->parsed()) return run_tjurina(tja, out);
    if (cmd_pt->parsed()) return run_polytope(pt_poly, pt_nvars, out);
    if (cmd_ca->parsed()) return run_castelnuovo(casf, out);
    if (cmd_nf->parsed()) return run_nf(nfa, out);
    if (cmd_st->parsed()) return run_stratum(stf, st_emit, cap, out);
    if (cmd_sb->parsed()) return run_stabilize(sba, cap, out);
    if (cmd_sw->parsed()) return run_sweep(swa, out);
    if (cmd_pr->parsed()) return run_presets(out);
  } catch (const ParseError& e) {
    return fail("parse", e.what(), kExitParse);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), kExitDomain);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
  return kExitOk;
}
