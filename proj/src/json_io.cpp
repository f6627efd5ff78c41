#include "permfact/json_io.hpp"

namespace permfact {

Json permutation_to_json(const Permutation& p) {
  Json arr = Json::array();
  for (const auto& c : p.disjoint_cycles()) arr.push_back(c.symbols());
  return arr;
}

Permutation permutation_from_json(int n, const Json& cycles) {
  if (!cycles.is_array()) throw UsageError("permutation must be an array of cycles");
  std::vector<std::vector<int>> cs;
  for (const auto& c : cycles) cs.push_back(c.get<std::vector<int>>());
  return Permutation::from_cycles(n, cs);
}

Json cycle_factorization_to_json(const CycleFactorization& f) {
  Json j;
  j["n"] = f.n;
  Json factors = Json::array();
  for (const auto& c : f.factors) factors.push_back(Json::array({c.symbols()}));
  j["factors"] = factors;
  return j;
}

CycleFactorization cycle_factorization_from_json(const Json& j) {
  CycleFactorization f;
  f.n = j.at("n").get<int>();
  for (const auto& factor : j.at("factors")) {
    if (!factor.is_array() || factor.size() != 1)
      throw UsageError("cycle factorization factors must be single cycles");
    f.factors.emplace_back(factor[0].get<std::vector<int>>());
  }
  validate(f);
  return f;
}

Json general_factorization_to_json(const GeneralFactorization& f) {
  Json j;
  j["n"] = f.n;
  Json factors = Json::array();
  for (const auto& p : f.factors) factors.push_back(permutation_to_json(p));
  j["factors"] = factors;
  return j;
}

GeneralFactorization general_factorization_from_json(const Json& j) {
  GeneralFactorization f;
  f.n = j.at("n").get<int>();
  for (const auto& factor : j.at("factors"))
    f.factors.push_back(permutation_from_json(f.n, factor));
  validate(f);
  return f;
}

Json signature_to_json(const Signature& b) {
  Json j = Json::object();
  for (size_t i = 0; i < b.raw().size(); ++i)
    if (b.raw()[i] != 0) j[std::to_string(i + 2)] = b.raw()[i];
  return j;
}

Signature signature_from_json(const Json& j) {
  Signature b;
  for (auto it = j.begin(); it != j.end(); ++it)
    b.add(std::stoi(it.key()), it.value().get<long long>());
  return b;
}

Json int_to_json(const Int& v) {
  static const Int kLimit = Int(1) << 53;
  if (abs(v) <= kLimit && v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json rat_to_json(const Rat& v) {
  if (v.get_den() == 1) return int_to_json(v.get_num());
  return Json(v.get_str());
}

Json map_stats_to_json(const MapStats& st) {
  Json j;
  j["vertices"] = st.vertex_count;
  j["edges"] = st.edge_count;
  j["faces"] = st.face_count;
  j["components"] = st.components;
  j["genus"] = st.genus;
  j["acyclic"] = st.acyclic;
  j["alternating"] = st.alternating;
  Json faces = Json::array();
  for (const auto& f : st.faces) {
    Json jf;
    jf["darts"] = f.dart_count;
    jf["sources"] = f.source_symbols;
    jf["sinks"] = f.sink_symbols;
    faces.push_back(jf);
  }
  j["face_details"] = faces;
  return j;
}

Json connections_report_to_json(const ConnectionsReport& r) {
  Json j;
  j["alpha"] = r.alpha.parts();
  j["genus"] = r.g;
  j["monotone_side"] = int_to_json(r.monotone_side);
  j["inequivalent_side"] = int_to_json(r.inequivalent_side);
  j["proper_side"] = int_to_json(r.proper_side);
  j["polynomial_side"] = rat_to_json(r.polynomial_side);
  j["ok"] = r.ok;
  return j;
}

Json identity_report_to_json(const IdentityReport& r) {
  Json j;
  j["n"] = r.n;
  j["degree_bound"] = r.degree_bound;
  j["ok"] = r.ok;
  j["terms"] = Json{{"proper_or_monotone", r.proper_terms},
                    {"inequivalent", r.inequivalent_terms}};
  Json ms = Json::array();
  for (const auto& m : r.mismatches) {
    Json jm;
    jm["where"] = m.where;
    jm["permutation"] = m.permutation;
    jm["difference"] = m.monomial;
    jm["lhs"] = m.lhs;
    jm["rhs"] = m.rhs;
    ms.push_back(jm);
  }
  j["mismatches"] = ms;
  return j;
}

Json jm_report_to_json(const JMReport& r) {
  Json j;
  j["n"] = r.n;
  j["ok"] = r.ok;
  j["failures"] = r.failures;
  return j;
}

Json bijection_report_to_json(const BijectionReport& r) {
  Json j;
  j["alpha"] = r.alpha.parts();
  j["beta"] = signature_to_json(r.beta);
  j["genus"] = r.g;
  j["classes"] = r.class_count;
  j["maps"] = r.map_count;
  j["ok"] = r.ok;
  Json fs = Json::array();
  for (const auto& f : r.failures) fs.push_back(Json{{"what", f.what}, {"witness", f.witness}});
  j["failures"] = fs;
  return j;
}

Json appendix_report_to_json(const AppendixReport& r) {
  Json j;
  j["instances"] = r.instances;
  j["ok"] = r.ok;
  Json fs = Json::array();
  for (const auto& f : r.failures)
    fs.push_back(Json{{"lemma", f.lemma}, {"detail", f.detail}});
  j["failures"] = fs;
  return j;
}

Json kcycle_report_to_json(const KCycleReport& r) {
  Json j;
  j["m"] = r.m;
  j["k"] = r.k;
  j["order"] = r.order;
  j["d_form"] = r.d_form;
  j["printed_form_matches"] = r.matches;
  Json ds = Json::array();
  for (const auto& d : r.discrepancies) {
    Json jd;
    jd["x_exponents"] = d.x_exponents;
    jd["specialized"] = rat_to_json(d.specialized);
    jd["printed"] = rat_to_json(d.printed);
    ds.push_back(jd);
  }
  j["discrepancies"] = ds;
  return j;
}

Json series_table_to_json(const SeriesBuildResult& r) {
  Json j;
  j["family"] = family_name(r.family);
  j["m"] = r.m;
  j["order"] = r.order;
  if (r.family == Family::KCycle) j["k"] = r.k;
  j["d_form"] = r.d_form;
  j["normalization"] =
      r.norm == SeriesNorm::OrdinaryCycle ? "ordinary-cycle" : "inequivalent";
  Json table = Json::array();
  for (const auto& [xe, poly] : r.series.coeffs()) {
    if (r.symbolic_q) {
      for (const auto& [qe, c] : poly.terms()) {
        Json row;
        row["alpha"] = xe;
        Json beta = Json::object();
        for (size_t i = 0; i < qe.size(); ++i)
          if (qe[i] != 0) beta[std::to_string(i + 2)] = qe[i];
        row["beta"] = beta;
        row["coefficient"] = c.get_str();
        // scaled count when alpha has exactly m positive parts
        bool full = true;
        for (int e : xe) full = full && e > 0;
        if (full) {
          Rat scaled = c;
          long long total = 0;
          for (int e : xe) {
            scaled *= Rat(static_cast<long>(e));
            total += e;
          }
          if (r.d_form) scaled /= Rat(static_cast<long>(total));
          if (r.norm == SeriesNorm::OrdinaryCycle) {
            long long cycles = 0;
            for (int q : qe) cycles += q;
            scaled *= Rat(factorial(cycles));
          }
          scaled.canonicalize();
          if (scaled.get_den() == 1) row["count"] = int_to_json(scaled.get_num());
        }
        table.push_back(row);
      }
    } else {
      Json row;
      row["alpha"] = xe;
      Rat c = poly.constant_term();
      row["coefficient"] = c.get_str();
      bool full = true;
      for (int e : xe) full = full && e > 0;
      if (full && r.norm == SeriesNorm::Inequivalent) {
        Rat scaled = c;
        long long total = 0;
        for (int e : xe) {
          scaled *= Rat(static_cast<long>(e));
          total += e;
        }
        if (r.d_form) scaled /= Rat(static_cast<long>(total));
        scaled.canonicalize();
        if (scaled.get_den() == 1) row["count"] = int_to_json(scaled.get_num());
      }
      table.push_back(row);
    }
  }
  j["table"] = table;
  return j;
}

}  // namespace permfact
