#include "vvmf/json_io.hpp"

namespace vvmf {

namespace {

[[noreturn]] void bad(const std::string& what, const Json& j) {
  fail_parse(what + " (got: " + j.dump() + ")");
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected a rational as \"p/q\" string or integer", j);
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  if (c.is_rational()) return rational_to_json(c.to_rational());
  Json terms = Json::array();
  for (const auto& [e, coeff] : c.terms()) terms.push_back(Json::array({e, to_string(coeff)}));
  return Json{{"conductor", c.conductor()}, {"terms", terms}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return Cyclotomic(rational_from_json(j));
  if (j.is_object() && j.contains("conductor") && j.contains("terms")) {
    unsigned n = j.at("conductor").get<unsigned>();
    if (n == 0) bad("conductor must be positive", j);
    std::vector<std::pair<long, Rational>> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 2) bad("cyclotomic term must be [exponent, coeff]", t);
      terms.emplace_back(t.at(0).get<long>(), rational_from_json(t.at(1)));
    }
    return Cyclotomic(n, terms);
  }
  bad("expected a scalar (rational string or cyclotomic object)", j);
}

Json series_to_json(const SeriesQ& s) {
  Json coeffs = Json::array();
  if (s.is_zero()) {
    auto fr = s.frontier();
    return Json{{"offset", to_string(fr ? *fr : Rational(0))}, {"coeffs", coeffs}, {"order", -1}};
  }
  long n = long(s.coeff_count());
  for (long i = 0; i < n; ++i) coeffs.push_back(rational_to_json(s.coeff(s.base() + Rational(i))));
  return Json{{"offset", to_string(s.base())}, {"coeffs", coeffs}, {"order", n - 1}};
}

SeriesQ series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("coeffs"))
    bad("expected a series object with offset/coeffs", j);
  Rational base = rational_from_json(j.at("offset"));
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) c.push_back(rational_from_json(v));
  if (c.empty()) return SeriesQ::zero_through(base);
  return SeriesQ::from_coeffs(base, std::move(c));
}

Json repdata_to_json(const RepData& rep) {
  Json lambda = Json::array();
  for (const auto& l : rep.lambda) lambda.push_back(to_string(l));
  Json out{{"lambda", lambda}, {"X", matrix_to_json(rep.x)}};
  if (rep.s) {
    Json s = Json::array();
    for (size_t i = 0; i < rep.s->rows(); ++i) {
      Json row = Json::array();
      for (size_t jj = 0; jj < rep.s->cols(); ++jj) row.push_back(cyclotomic_to_json((*rep.s)(i, jj)));
      s.push_back(row);
    }
    out["S"] = s;
  }
  return out;
}

RepData repdata_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("X"))
    bad("expected representation data with lambda/X", j);
  RepData rep;
  for (const auto& v : j.at("lambda")) rep.lambda.push_back(rational_from_json(v));
  if (rep.lambda.empty()) bad("empty exponent matrix", j);
  rep.x = matrix_from_json(j.at("X"));
  if (rep.x.rows() != rep.lambda.size() || rep.x.cols() != rep.lambda.size())
    bad("X must be square with the same dimension as lambda", j.at("X"));
  if (j.contains("S")) {
    const Json& js = j.at("S");
    size_t d = js.size();
    Matrix<Cyclotomic> s(d, d);
    for (size_t i = 0; i < d; ++i) {
      if (!js.at(i).is_array() || js.at(i).size() != d) bad("S must be square", js);
      for (size_t c = 0; c < d; ++c) s(i, c) = cyclotomic_from_json(js.at(i).at(c));
    }
    rep.s = std::move(s);
  }
  rep.validate_shape();
  return rep;
}

Json modrep_to_json(const ModularRep& rep) {
  Json s = Json::array();
  for (size_t i = 0; i < rep.dim(); ++i) {
    Json row = Json::array();
    for (size_t jj = 0; jj < rep.dim(); ++jj) row.push_back(cyclotomic_to_json(rep.s(i, jj)));
    s.push_back(row);
  }
  Json t = Json::array();
  for (const auto& v : rep.t_diag) t.push_back(cyclotomic_to_json(v));
  return Json{{"conductor", rep.conductor}, {"S", s}, {"T_diag", t}};
}

ModularRep modrep_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("S") || !j.contains("T_diag"))
    bad("expected a modular representation with conductor/S/T_diag", j);
  ModularRep rep;
  rep.conductor = j.at("conductor").get<unsigned>();
  if (rep.conductor == 0) bad("conductor must be positive", j);
  const Json& jt = j.at("T_diag");
  size_t d = jt.size();
  if (d == 0) bad("empty T_diag", j);
  for (const auto& v : jt) rep.t_diag.push_back(cyclotomic_from_json(v));
  const Json& js = j.at("S");
  if (js.size() != d) bad("S and T_diag dimensions differ", j);
  rep.s = Matrix<Cyclotomic>(d, d);
  for (size_t i = 0; i < d; ++i) {
    if (!js.at(i).is_array() || js.at(i).size() != d) bad("S must be square", js);
    for (size_t c = 0; c < d; ++c) rep.s(i, c) = cyclotomic_from_json(js.at(i).at(c));
  }
  return rep;
}

Json principal_part_to_json(const PrincipalPart& p) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : p.terms) {
    terms.push_back(
        Json{{"component", key.first}, {"order", key.second}, {"coeff", rational_to_json(coeff)}});
  }
  return Json{{"terms", terms}};
}

PrincipalPart principal_part_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) bad("expected a principal part with terms", j);
  PrincipalPart p;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("component") || !t.contains("order") || !t.contains("coeff"))
      bad("principal part term needs component/order/coeff", t);
    size_t comp = t.at("component").get<size_t>();
    long n = t.at("order").get<long>();
    if (n < 1) bad("pole orders must be positive", t);
    Rational coeff = rational_from_json(t.at("coeff"));
    if (coeff != 0) p.terms[{comp, n}] += coeff;
  }
  for (auto it = p.terms.begin(); it != p.terms.end();)
    it = it->second == 0 ? p.terms.erase(it) : std::next(it);
  return p;
}

Json fundamental_to_json(const FundamentalMatrix& f) {
  Json lambda = Json::array();
  for (const auto& l : f.lambda) lambda.push_back(to_string(l));
  Json psi = Json::array();
  for (size_t i = 0; i < f.dim(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < f.dim(); ++j) row.push_back(series_to_json(f.entry(i, j)));
    psi.push_back(row);
  }
  Json out{{"lambda", lambda}, {"psi", psi}, {"order", f.order()}};
  if (!f.resonances.empty()) {
    Json res = Json::array();
    for (const auto& [n, xi, eta] : f.resonances) res.push_back(Json::array({n, xi, eta}));
    out["resonances"] = res;
  }
  return out;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc{{"check", c.name}, {"pass", c.pass}};
    if (!c.lhs.empty()) jc["lhs"] = c.lhs;
    if (!c.rhs.empty()) jc["rhs"] = c.rhs;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  return checks;
}

Json matrix_to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix<Rational> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a nonempty matrix", j);
  size_t rows = j.size();
  size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
  if (cols == 0) bad("expected a matrix of rows", j);
  Matrix<Rational> m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols) bad("ragged matrix", j);
    for (size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j.at(i).at(c));
  }
  return m;
}

}  // namespace vvmf
