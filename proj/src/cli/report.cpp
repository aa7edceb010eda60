#include "gausscong/report.hpp"

namespace gausscong {

using nlohmann::json;

namespace {

json document(const char* kind) { return json{{"schema", kSchemaVersion}, {"kind", kind}}; }

json valuation(std::int64_t v) {
  if (v == kInfiniteValuation) return "inf";
  return v;
}

json form_json(const LinearForm& f) { return json(f); }

json minton_body(const MintonVerdict& v) {
  json out{{"has_gauss", v.has_gauss}, {"certified", true}};
  if (v.has_gauss) {
    json terms = json::array();
    for (const auto& t : v.decomposition->terms) {
      terms.push_back({{"c", to_fraction_string(t.c)}, {"u", t.u.to_string()}});
    }
    out["decomposition"] = {{"constant", to_fraction_string(v.decomposition->constant)}, {"terms", terms}};
  } else {
    out["reason"] = minton_reason_name(v.reason);
  }
  return out;
}

json mostly_linear_body(const MostlyLinearVerdict& v) {
  json entries = json::array();
  for (const auto& e : v.per_k) {
    json item{{"k", exponent_json(e.k)},
              {"kind", mostly_linear_kind_name(e.kind)},
              {"p_k", e.p_k.to_string()},
              {"q_k", e.q_k.to_string()}};
    if (e.minton) item["minton"] = minton_body(*e.minton);
    entries.push_back(item);
  }
  return {{"z", "x" + std::to_string(v.z + 1)}, {"overall", v.overall}, {"certified", true}, {"per_k", entries}};
}

}  // namespace

json exponent_json(const ExponentVector& k) { return json(std::vector<std::int64_t>(k.entries().begin(), k.entries().end())); }

json ratfun_json(const RationalFunction& f) {
  json out = document("rational-function");
  out["nvars"] = f.nvars();
  out["numerator"] = f.numerator().to_string();
  out["denominator"] = f.denominator().to_string();
  out["text"] = f.to_string();
  return out;
}

json series_json(const TruncatedLaurentSeries& s) {
  json out = document("series");
  out["nvars"] = s.nvars();
  out["vertex"] = exponent_json(s.vertex());
  out["grading"] = form_json(s.grading());
  out["bound"] = s.bound();
  out["safe_bound"] = s.safe_bound();
  json coeffs = json::array();
  for (const auto& k : s.sorted_support()) {
    coeffs.push_back({{"k", exponent_json(k)}, {"c", to_fraction_string(s.coefficient(k))}});
  }
  out["coefficients"] = coeffs;
  return out;
}

json gauss_json(const GaussReport& r) {
  json out = document("gauss-check");
  out["strength"] = r.strength;
  out["r_max"] = r.r_max;
  out["bound"] = r.bound;
  out["m_budget"] = r.m_budget;
  out["certified"] = r.certified;
  json primes = json::array();
  for (const auto& p : r.primes) {
    json item{{"prime", p.prime},
              {"strength", r.strength},
              {"r_max", r.r_max},
              {"verdict", verdict_name(p.verdict)},
              {"checked_count", p.checked_count}};
    if (p.witness) {
      item["witness"] = {{"m", exponent_json(p.witness->m)},
                         {"r", p.witness->r},
                         {"valuation_found", valuation(p.witness->valuation_found)},
                         {"valuation_required", p.witness->valuation_required},
                         {"reason", p.witness->reason}};
    } else {
      item["witness"] = nullptr;
    }
    primes.push_back(item);
  }
  out["primes"] = primes;
  return out;
}

json minton_json(const MintonVerdict& v) {
  json out = document("minton");
  out.update(minton_body(v));
  return out;
}

json mostly_linear_json(const MostlyLinearVerdict& v) {
  json out = document("mostly-linear");
  out.update(mostly_linear_body(v));
  return out;
}

json degree2_json(const Degree2Classification& c) {
  json out = document("degree2");
  out["route"] = c.route;
  out["has_gauss"] = c.has_gauss;
  out["certified"] = true;
  if (c.dim) out["dim"] = *c.dim;
  out["special_monomials"] = c.special_monomials;
  json basis = json::array();
  for (const auto& b : c.basis) basis.push_back(b.to_string());
  out["basis"] = basis;
  if (c.reduction) {
    json rows = json::array();
    for (const auto& row : c.reduction->a) {
      json r = json::array();
      for (const auto& x : row) r.push_back(to_fraction_string(x));
      rows.push_back(r);
    }
    out["reduction"] = rows;
  }
  if (c.mostly_linear) out["mostly_linear"] = mostly_linear_body(*c.mostly_linear);
  return out;
}

json linear_json(bool verdict) {
  json out = document("linear");
  out["has_gauss"] = verdict;
  out["certified"] = true;
  return out;
}

json faces_json(const NewtonPolytope& np, const std::vector<Face>& fs) {
  json out = document("faces");
  out["dim"] = np.dim;
  json vertices = json::array();
  for (const auto& v : np.vertices) vertices.push_back(exponent_json(v));
  out["vertices"] = vertices;
  json list = json::array();
  for (const auto& f : fs) {
    json members = json::array();
    for (const auto& m : f.members) members.push_back(exponent_json(m));
    list.push_back({{"dim", f.dim}, {"form", form_json(f.form)}, {"offset", f.offset}, {"members", members}});
  }
  out["faces"] = list;
  return out;
}

}  // namespace gausscong
