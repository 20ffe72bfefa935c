#include "qw22/format.hpp"

#include <sstream>

#include <json.hpp>

namespace qw22 {

namespace {

using json = nlohmann::ordered_json;

json poly_json(const LaurentPoly& c) {
  json terms = json::array();
  for (const auto& [m, coeff] : c.terms()) {
    json t;
    t["eq"] = m.q_exp;
    if (c.profile() == VarProfile::two_var) t["ep"] = m.p_exp;
    t["c"] = coeff.get_str();
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}};
}

json block_json(const std::vector<Power>& block) {
  json out = json::array();
  for (const auto& p : block) out.push_back(json::array({p.index, p.mult}));
  return out;
}

void put_word(json& j, const NormalWord& w) {
  j["t"] = w.t_exp;
  j["l"] = block_json(w.l_block);
  j["w"] = block_json(w.w_block);
}

json report_json(const CheckReport& r) {
  json j;
  j["suite"] = r.suite;
  j["profile"] = r.profile;
  j["bounds"] = json{{"max_index", r.bounds.max_index},
                     {"max_len", r.bounds.max_len},
                     {"k_range", json::array({r.bounds.k_lo, r.bounds.k_hi})},
                     {"cases", r.bounds.cases}};
  j["seed"] = r.bounds.seed;
  j["cases_run"] = r.cases_run;
  j["cases_failed"] = r.cases_failed;
  j["first_counterexample"] =
      r.cases_failed == 0 ? json(nullptr) : json(r.first_counterexample);
  return j;
}

std::string report_text(const CheckReport& r) {
  std::ostringstream os;
  os << "suite: " << r.suite << '\n'
     << "profile: " << r.profile << '\n'
     << "bounds: max-index=" << r.bounds.max_index
     << " max-len=" << r.bounds.max_len << " k-range=" << r.bounds.k_lo << ".."
     << r.bounds.k_hi << " cases=" << r.bounds.cases << '\n'
     << "seed: " << r.bounds.seed << '\n'
     << "cases run: " << r.cases_run << '\n'
     << "cases failed: " << r.cases_failed << '\n'
     << "first counterexample: "
     << (r.cases_failed == 0 ? std::string("none") : r.first_counterexample)
     << '\n';
  return os.str();
}

}  // namespace

std::string format(const LaurentPoly& c, OutputMode mode) {
  return mode == OutputMode::text ? c.to_string() : poly_json(c).dump();
}

std::string format(const Element& x, OutputMode mode) {
  if (mode == OutputMode::text) return x.to_string();
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) {
    json t;
    t["coeff"] = poly_json(c);
    put_word(t, w);
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}}.dump();
}

std::string format(const TensorElement& x, OutputMode mode) {
  if (mode == OutputMode::text) return x.to_string();
  json terms = json::array();
  for (const auto& [k, c] : x.terms()) {
    json a, b;
    put_word(a, k.first);
    put_word(b, k.second);
    json t;
    t["coeff"] = poly_json(c);
    t["slots"] = json::array({std::move(a), std::move(b)});
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}}.dump();
}

std::string format(const NumericElement& x, OutputMode mode) {
  if (mode == OutputMode::text) return x.to_string();
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) {
    json t;
    t["coeff"] = to_string(c);
    put_word(t, w);
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}}.dump();
}

std::string format(const ModuleVector& v, OutputMode mode) {
  if (mode == OutputMode::text) return v.to_string();
  json terms = json::array();
  for (const auto& [l, c] : v.terms()) {
    json t;
    t["coeff"] = poly_json(c);
    t["k"] = l.k;
    t["eps"] = l.eps;
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}}.dump();
}

std::string format(const CheckReport& r, OutputMode mode) {
  return mode == OutputMode::text ? report_text(r) : report_json(r).dump();
}

std::string format(const std::vector<CheckReport>& reports, OutputMode mode) {
  if (mode == OutputMode::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump();
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += '\n';
    out += report_text(reports[i]);
  }
  return out;
}

}  // namespace qw22
