// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

// Python bindings. Scalar results cross as native ints; structured results
// cross as JSON strings produced by the same serializers the command-line
// driver uses, so both surfaces stay byte-compatible.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "eqsing/io.hpp"
#include "eqsing/parse.hpp"
#include "eqsing/reduction.hpp"

namespace py = pybind11;
using namespace eqsing;

namespace {

SingularitySpec make_spec(const std::vector<int>& alpha,
                          std::optional<long> degree,
                          const std::vector<std::string>& lambda) {
  std::vector<Q> ls;
  for (const auto& s : lambda) ls.emplace_back(s);
  for (auto& l : ls) l.canonicalize();
  return SingularitySpec::make(alpha, degree, ls);
}

int effective_cap(std::optional<int> cap) {
  return cap ? *cap : default_param_cap();
}

}  // namespace

PYBIND11_MODULE(_eqsing, m) {
  m.doc() =
      "exact invariants and equisingular stratum germs of quasihomogeneous "
      "hypersurface singularities";

  m.def(
      "h1",
      [](const std::vector<int>& alpha, std::optional<long> level,
         std::optional<long> degree, const std::vector<std::string>& lambda) {
        SingularitySpec spec = make_spec(alpha, degree, lambda);
        return h1(spec, level ? *level : spec.d);
      },
      py::arg("alpha"), py::arg("level") = std::nullopt,
      py::arg("degree") = std::nullopt,
      py::arg("lambda_") = std::vector<std::string>{},
      "Obstruction dimension h1 at the given twist level (default: degree).");

  m.def(
      "milnor",
      [](const std::vector<int>& alpha, std::optional<long> degree) {
        return milnor_number(make_spec(alpha, degree, {}));
      },
      py::arg("alpha"), py::arg("degree") = std::nullopt,
      "Milnor number of the pure-power singularity; equals its tjurina "
      "number.");

  m.def(
      "tjurina",
      [](const std::string& poly, std::size_t nvars) {
        return tjurina_number(parse_polynomial(poly, nvars));
      },
      py::arg("poly"), py::arg("nvars"),
      "Tjurina number of an explicit polynomial by jet stabilization.");

  m.def(
      "expected_dimension",
      [](const std::vector<int>& alpha, std::optional<long> degree) {
        return expected_dimension(make_spec(alpha, degree, {}));
      },
      py::arg("alpha"), py::arg("degree") = std::nullopt);

  m.def(
      "castelnuovo_json",
      [](const std::vector<int>& alpha, std::optional<long> degree) {
        SingularitySpec spec = make_spec(alpha, degree, {});
        Json j = spec_json(spec);
        Json body = castelnuovo_json(castelnuovo_profile(spec));
        for (auto& [k, v] : body.items()) j[k] = v;
        return j.dump();
      },
      py::arg("alpha"), py::arg("degree") = std::nullopt);

  m.def(
      "polytope_json",
      [](const std::string& poly, std::size_t nvars) {
        return polytope_json(newton_polytope(parse_polynomial(poly, nvars)))
            .dump();
      },
      py::arg("poly"), py::arg("nvars"));

  m.def(
      "nf",
      [](const std::string& poly, const std::vector<std::string>& gens,
         const std::string& ord_name, const std::vector<std::string>& weights,
         std::size_t nvars) {
        Polynomial f = parse_polynomial(poly, nvars);
        std::vector<Polynomial> gs;
        for (const auto& g : gens) gs.push_back(parse_polynomial(g, nvars));
        std::vector<Q> w;
        for (const auto& s : weights) {
          w.emplace_back(s);
          w.back().canonicalize();
        }
        Ordering ord = Ordering::lp();
        if (ord_name == "lp") {
          ord = Ordering::lp();
        } else if (ord_name == "Dp") {
          ord = Ordering::Dp();
        } else if (ord_name == "ls") {
          ord = Ordering::ls();
        } else if (ord_name == "Ds") {
          ord = Ordering::Ds();
        } else if (ord_name == "Wp" || ord_name == "Ws") {
          if (w.size() != nvars)
            throw DomainError("weighted ordering needs one weight per variable");
          ord = ord_name == "Wp" ? Ordering::Wp(w) : Ordering::Ws(w);
        } else {
          throw DomainError("unknown ordering '" + ord_name + "'");
        }
        if (ord.kind() == OrderKind::NegWeightLex) {
          auto table = std::make_shared<ParamTable>();
          std::vector<ParamPolynomial> pgens;
          std::vector<Exponent> lms;
          for (const auto& g : gs) {
            pgens.push_back(ParamPolynomial::from_polynomial(g, table, -1));
            lms.push_back(detail::param_leading_exponent(pgens.back(), ord));
          }
          Exponent hc = highest_corner(lms, ord);
          LocalNFResult res = truncated_local_nf(
              ParamPolynomial::from_polynomial(f, table, -1), pgens, ord, hc);
          Polynomial r(f.nvars());
          for (const auto& [e, c] : res.remainder)
            r.add_term(e, c.constant_part());
          return r.str();
        }
        return red_nf_buchberger(f, gs, ord).str();
      },
      py::arg("poly"), py::arg("gens"), py::arg("ord") = "lp",
      py::arg("weights") = std::vector<std::string>{}, py::arg("nvars"),
      "Normal form string under the named monomial ordering.");

  m.def(
      "classify_json",
      [](const std::vector<int>& alpha, std::optional<long> degree,
         std::optional<int> cap) {
        SingularitySpec spec = make_spec(alpha, degree, {});
        Json j = spec_json(spec);
        Json body =
            classification_json(classify_stratum(spec, effective_cap(cap)));
        for (auto& [k, v] : body.items()) j[k] = v;
        return j.dump();
      },
      py::arg("alpha"), py::arg("degree") = std::nullopt,
      py::arg("cap") = std::nullopt,
      "Stratum classification record as a JSON string.");

  m.def(
      "system_json",
      [](const std::vector<int>& alpha, std::optional<long> degree,
         std::optional<int> cap, bool include_rows) {
        SingularitySpec spec = make_spec(alpha, degree, {});
        return system_json(derive_stratum(spec, effective_cap(cap)),
                           include_rows)
            .dump();
      },
      py::arg("alpha"), py::arg("degree") = std::nullopt,
      py::arg("cap") = std::nullopt, py::arg("include_rows") = true,
      "Derived equation system as a JSON string.");

  m.def(
      "stabilize_json",
      [](const std::vector<int>& alpha, int squares,
         std::optional<long> degree, std::optional<long> suspension_degree,
         bool unisingular, std::optional<int> cap) {
        SingularitySpec base = make_spec(alpha, degree, {});
        SuspensionSpec spec =
            SuspensionSpec::make(base, squares, suspension_degree, unisingular);
        SuspendedSystem ss = derive_suspended_system(spec, effective_cap(cap));
        Json j = suspended_json(ss);
        j["unisingular"] = spec.unisingular;
        return j.dump();
      },
      py::arg("alpha"), py::arg("squares"), py::arg("degree") = std::nullopt,
      py::arg("suspension_degree") = std::nullopt,
      py::arg("unisingular") = false, py::arg("cap") = std::nullopt,
      "Suspension invariants and block ranks as a JSON string.");

  m.def(
      "witness_json",
      [](const std::vector<int>& alpha, int squares,
         std::optional<long> degree, int height_budget,
         std::optional<int> cap) {
        SingularitySpec base = make_spec(alpha, degree, {});
        SuspensionSpec spec = SuspensionSpec::make(base, squares);
        SuspendedSystem ss = derive_suspended_system(spec, effective_cap(cap));
        WitnessCertificate w = witness_reduced_component(ss, height_budget);
        Json j = suspended_json(ss);
        Json body = witness_json(w, *ss.sys.table);
        for (auto& [k, v] : body.items()) j[k] = v;
        return j.dump();
      },
      py::arg("alpha"), py::arg("squares"), py::arg("degree") = std::nullopt,
      py::arg("height_budget") = 8, py::arg("cap") = std::nullopt,
      "Reduced-component witness certificate as a JSON string.");

  m.def("presets_json", [] {
    Json out = Json::array();
    for (const auto& p : presets()) {
      Json j;
      j["name"] = p.name;
      j["alpha"] = p.alpha;
      j["degree"] = p.degree;
      j["note"] = p.note;
      out.push_back(j);
    }
    return out.dump();
  });

  py::register_exception<ParseError>(m, "PolynomialParseError",
                                     PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
}
