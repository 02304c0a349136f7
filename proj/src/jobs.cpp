#include "vvmf/jobs.hpp"

#include <cstdlib>
#include <random>

#include "vvmf/json_io.hpp"

namespace vvmf {

namespace {

struct Options {
  long order = -1;
  long max_pole = -1;
  long bi_q = -1, bi_z = -1;
  std::optional<size_t> component;
  std::optional<size_t> shift_i, shift_j;
  std::vector<std::vector<size_t>> blocks;
  std::optional<Rational> weight;
};

Options parse_options(const std::string& options_json) {
  Options o;
  if (options_json.empty()) return o;
  Json j = Json::parse(options_json, nullptr, /*allow_exceptions=*/true);
  if (j.is_null()) return o;
  if (!j.is_object()) fail_parse("options must be a JSON object");
  if (j.contains("order")) o.order = j.at("order").get<long>();
  if (j.contains("max_pole")) o.max_pole = j.at("max_pole").get<long>();
  if (j.contains("bi_order")) {
    const Json& b = j.at("bi_order");
    if (!b.is_array() || b.size() != 2) fail_parse("bi_order must be [Mq, Mz]");
    o.bi_q = b.at(0).get<long>();
    o.bi_z = b.at(1).get<long>();
  }
  if (j.contains("component")) o.component = j.at("component").get<size_t>();
  if (j.contains("i")) o.shift_i = j.at("i").get<size_t>();
  if (j.contains("j")) o.shift_j = j.at("j").get<size_t>();
  if (j.contains("block")) {
    for (const auto& blk : j.at("block")) {
      std::vector<size_t> b;
      for (const auto& v : blk) b.push_back(v.get<size_t>());
      o.blocks.push_back(std::move(b));
    }
  }
  if (j.contains("weight")) {
    const Json& w = j.at("weight");
    o.weight = w.is_string() ? parse_rational(w.get<std::string>()) : Rational(w.get<long>());
  }
  return o;
}

long capped(long requested, long fallback, const char* what) {
  long v = requested >= 0 ? requested : fallback;
  if (const char* cap_env = std::getenv("VVMF_MAX_ORDER")) {
    long cap = std::atol(cap_env);
    if (cap > 0 && v > cap)
      fail_pre(std::string(what) + " " + std::to_string(v) + " exceeds VVMF_MAX_ORDER=" +
               std::to_string(cap));
  }
  return v;
}

// FNV-1a over the canonicalized inputs; stable across runs by construction.
std::string digest(const std::string& command, const Json& input, const Json& options) {
  std::string payload = command + "\n" + input.dump() + "\n" + options.dump();
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return std::string(buf);
}

Signature require_signature(const RepData& rep, Report& rpt, ABPair& ab_out) {
  ab_out = derive_ab(rep);
  auto sig = spectral_signature(ab_out, &rpt);
  if (!sig) fail_pre("spectral condition fails on this data");
  return *sig;
}

Json signature_json(const Signature& s) {
  return Json{{"d", s.d}, {"alpha", s.alpha}, {"beta1", s.beta1}, {"beta2", s.beta2}};
}

// ---- individual commands ------------------------------------------------

void cmd_validate(const Json& input, const Options& o, Json& results, Report& rpt) {
  RepData rep = repdata_from_json(input);
  ABPair ab = derive_ab(rep);
  auto sig = spectral_signature(ab, &rpt);
  if (sig) {
    results["signature"] = signature_json(*sig);
    rpt.add("monodromy", monodromy_equation_check(rep.lambda, ab.a));
    Report audit = trace_audit(rep, *sig, o.blocks);
    rpt.merge(audit);
  }
  results["A"] = matrix_to_json(ab.a);
  results["B"] = matrix_to_json(ab.b);
}

void cmd_expand(const Json& input, const Options& o, Json& results, Report& rpt) {
  RepData rep = repdata_from_json(input);
  long order = capped(o.order, 10, "order");
  FundamentalMatrix f = expand_fundamental(rep, order);
  results["fundamental"] = fundamental_to_json(f);
  rpt.add("expand.boundary-Psi0-Psi1", true, "Psi[0] = 1 and Psi[1] = X verified");
  rpt.add("expand.resonance-free", f.resonances.empty(),
          f.resonances.empty() ? "" : std::to_string(f.resonances.size()) + " resonant coefficients set to 0");
}

void cmd_det_check(const Json& input, const Options& o, Json& results, Report& rpt) {
  RepData rep = repdata_from_json(input);
  long order = capped(o.order, 30, "order");
  ABPair ab;
  Signature sig = require_signature(rep, rpt, ab);
  FundamentalMatrix f = expand_fundamental(rep, order + long(rep.dim()) + 1);
  rpt.merge(det_check(f, sig));
  rpt.merge(determinant_ode_check(f, rep));
  results["signature"] = signature_json(sig);
}

void cmd_hyper_check(const Json& input, const Options& o, Json& results, Report& rpt) {
  RepData rep = repdata_from_json(input);
  long order = capped(o.order, 20, "order");
  ABPair ab;
  Signature sig = require_signature(rep, rpt, ab);
  FundamentalMatrix f = expand_fundamental(rep, order + 2);
  rpt.merge(hypergeometric_check(f, ab));
  results["signature"] = signature_json(sig);
}

void cmd_dual(const Json& input, const Options& o, Json& results, Report& rpt) {
  RepData rep = repdata_from_json(input);
  RepData d = dual(rep);
  results["dual"] = repdata_to_json(d);
  auto sig_d = spectral_signature(derive_ab(d), &rpt);
  rpt.add("dual.spectral-preserved", sig_d.has_value());
  long order = o.order >= 0 ? capped(o.order, 0, "order") : 0;
  if (order > 0) {
    FundamentalMatrix f = expand_fundamental(rep, order);
    FundamentalMatrix fd = dual_fundamental(f);
    rpt.add("dual.boundary-for-dual-data", fd.psi.size() >= 2 && fd.psi[1] == d.x,
            "Psi_dual[1] vs 4 - X^t");
    bool lambda_ok = fd.lambda == d.lambda;
    rpt.add("dual.exponents", lambda_ok);
    FundamentalMatrix fdd = dual_fundamental(fd);
    bool involution = true;
    for (size_t n = 0; n < std::min(fdd.psi.size(), f.psi.size()); ++n)
      if (!(fdd.psi[n] == f.psi[n])) involution = false;
    rpt.add("dual.double-dual-identity", involution,
            "compared through order " + std::to_string(std::min(fdd.order(), f.order())));
  }
}

void cmd_shift(const Json& input, const Options& o, Json& results, Report& rpt) {
  RepData rep = repdata_from_json(input);
  require_pre(o.shift_i && o.shift_j, "shift requires --i and --j indices");
  long order = capped(o.order, 10, "order");
  FundamentalMatrix f = expand_fundamental(rep, order);
  ShiftResult sr = lambda_shift(f, rep, *o.shift_i, *o.shift_j);
  results["shifted"] = repdata_to_json(sr.rep);
  results["constant"] = to_string(sr.constant);
  results["fundamental"] = fundamental_to_json(sr.fundamental);
  rpt.add("shift.trace-preserved", sr.rep.trace_lambda() == rep.trace_lambda());
  rpt.add("shift.boundary", true, "Psi'[0] = 1 verified, X' read off Psi'[1]");
}

void cmd_basis(const Json& input, const Options& o, Json& results, Report& rpt) {
  RepData rep = repdata_from_json(input);
  long order = capped(o.order, 10, "order");
  long max_pole = capped(o.max_pole, 4, "max_pole");
  FundamentalMatrix f = expand_fundamental(rep, order + max_pole);
  CanonicalBasis b = canonical_basis(f, max_pole, order);
  Json vecs = Json::array();
  for (size_t xi = 0; xi < b.dim(); ++xi)
    for (long n = 1; n <= max_pole; ++n) {
      const CanonicalVector& v = b.at(xi, n);
      Json comps = Json::array(), consts = Json::array();
      for (size_t eta = 0; eta < b.dim(); ++eta) {
        comps.push_back(series_to_json(v.comp[eta]));
        consts.push_back(to_string(v.constant_part[eta]));
      }
      vecs.push_back(Json{{"component", xi},
                          {"order", n},
                          {"normalized_series", comps},
                          {"constant_part", consts}});
    }
  results["vectors"] = vecs;
  rpt.add("basis.principal-parts", true,
          "all principal parts verified equal to q^{-n} delta during construction");
}

void cmd_invert(const Json& input, const Options& o, Json& results, Report& rpt) {
  if (!input.is_object() || !input.contains("rep") || !input.contains("principal_part"))
    fail_parse("invert expects {\"rep\": .., \"principal_part\": ..}");
  RepData rep = repdata_from_json(input.at("rep"));
  PrincipalPart p = principal_part_from_json(input.at("principal_part"));
  long order = capped(o.order, 10, "order");
  long max_pole = 1;
  for (const auto& [key, coeff] : p.terms) max_pole = std::max(max_pole, key.second);
  if (o.max_pole >= 0) {
    require_pre(max_pole <= o.max_pole, "principal part pole order exceeds --max-pole");
    max_pole = o.max_pole;
  }
  FundamentalMatrix f = expand_fundamental(rep, order + max_pole);
  CanonicalBasis b = canonical_basis(f, max_pole, order);
  std::vector<SeriesQ> y = invert_principal_part(b, p);
  Json comps = Json::array();
  for (size_t eta = 0; eta < y.size(); ++eta)
    comps.push_back(series_to_json(y[eta].shifted(rep.lambda[eta])));
  results["components"] = comps;
  rpt.add("invert.principal-part-round-trip", principal_part(y) == p);
}

void cmd_gf_check(const Json& input, const Options& o, Json& results, Report& rpt) {
  RepData rep = repdata_from_json(input);
  long mq = capped(o.bi_q, 8, "bi_order q");
  long mz = capped(o.bi_z, 8, "bi_order z");
  FundamentalMatrix f = expand_fundamental(rep, mq + mz + 3);
  rpt.merge(generating_function_check(f, mq, mz));
  results["bi_order"] = Json::array({mq, mz});
}

void cmd_dims(const Json& input, const Options& o, Json& results, Report& rpt) {
  ModularRep rep = modrep_from_json(input);
  require_pre(o.weight.has_value(), "dims requires --weight");
  FormDimensions fd = dim_forms(rep, *o.weight);
  rpt.add("dims.genuine-representation", fd.genuine,
          fd.genuine ? "" : "rho tensor mu^{-2k} is not a true PSL2 representation; space is trivial");
  results["dim_forms"] = fd.dim_forms;
  results["dim_cusp"] = fd.dim_cusp;
  Json lam = Json::array();
  for (const auto& l : fd.lambda) lam.push_back(to_string(l));
  results["induced_lambda"] = lam;
}

void cmd_form_basis(const Json& input, const Options& o, Json& results, Report& rpt) {
  require_pre(o.weight.has_value(), "form-basis requires --weight");
  long order = capped(o.order, 10, "order");
  RepData induced;
  if (input.is_object() && input.contains("induced")) {
    induced = repdata_from_json(input.at("induced"));
  } else {
    ModularRep rep = input.is_object() && input.contains("rep") ? modrep_from_json(input.at("rep"))
                                                                : modrep_from_json(input);
    InducedRep ind = induce_rep(rep, *o.weight);
    require_pre(ind.genuine, "induced representation is not a true PSL2 representation");
    require_pre(ind.rep.dim() == 1,
                "for dimension > 1, supply the induced fundamental data under \"induced\"");
    std::vector<Rational> lam = choose_exponents(ind.rep);
    induced = one_dimensional_repdata(lam[0]);
  }
  FormBasis fb = form_basis(induced, *o.weight, order);
  results["dim_by_trace"] = fb.dim_by_trace;
  results["cardinality"] = fb.cardinality;
  Json lam = Json::array();
  for (const auto& l : fb.lambda) lam.push_back(to_string(l));
  results["induced_lambda"] = lam;
  Json vecs = Json::array();
  for (const auto& v : fb.vectors) {
    Json comps = Json::array();
    for (const auto& s : v) comps.push_back(series_to_json(s));
    vecs.push_back(comps);
  }
  results["basis"] = vecs;
  rpt.add("form-basis.holomorphic-at-infinity", true, "no negative exponents after eta^{2k}");
  rpt.add("form-basis.cardinality-matches-trace-dim", fb.cardinality == fb.dim_by_trace,
          "cardinality " + std::to_string(fb.cardinality) + " vs trace formula " +
              std::to_string(fb.dim_by_trace));
}

void cmd_rep_audit(const Json& input, const Options& o, Json& results, Report& rpt) {
  ModularRep rep = modrep_from_json(input);
  rpt.merge(rep.relations_check(/*require_psl2=*/true));
  rpt.merge(rationality_test(rep));
  rpt.merge(congruence_heuristic(rep));
  rpt.merge(nonnegativity_test(rep, o.component));
  results["dimension"] = rep.dim();
  results["conductor"] = rep.conductor;
}

void cmd_reduce(const Json& input, const Options&, Json& results, Report& rpt) {
  ModularRep rep = modrep_from_json(input);
  ModularRep reduced = reduce_representation(rep, &rpt);
  results["reduced"] = modrep_to_json(reduced);
}

}  // namespace

JobResult run_job(const std::string& command, const std::string& input_json,
                  const std::string& options_json) {
  JobResult res;
  Json report;
  report["command"] = command;
  try {
    Json input = input_json.empty() ? Json(nullptr) : Json::parse(input_json);
    Json options = options_json.empty() ? Json(nullptr) : Json::parse(options_json);
    Options o = parse_options(options_json);
    report["inputs-digest"] = digest(command, input, options);
    Json results = Json::object();
    Report rpt;
    if (command == "validate")
      cmd_validate(input, o, results, rpt);
    else if (command == "expand")
      cmd_expand(input, o, results, rpt);
    else if (command == "det-check")
      cmd_det_check(input, o, results, rpt);
    else if (command == "hyper-check")
      cmd_hyper_check(input, o, results, rpt);
    else if (command == "dual")
      cmd_dual(input, o, results, rpt);
    else if (command == "shift")
      cmd_shift(input, o, results, rpt);
    else if (command == "basis")
      cmd_basis(input, o, results, rpt);
    else if (command == "invert")
      cmd_invert(input, o, results, rpt);
    else if (command == "gf-check")
      cmd_gf_check(input, o, results, rpt);
    else if (command == "dims")
      cmd_dims(input, o, results, rpt);
    else if (command == "form-basis")
      cmd_form_basis(input, o, results, rpt);
    else if (command == "rep-audit")
      cmd_rep_audit(input, o, results, rpt);
    else if (command == "reduce")
      cmd_reduce(input, o, results, rpt);
    else
      fail_parse("unknown command '" + command + "'");
    report["results"] = results;
    report["checks"] = report_to_json(rpt);
    res.status = rpt.all_pass() ? 0 : 1;
  } catch (const Json::exception& e) {
    report["error"] = {{"kind", "parse"}, {"message", e.what()}};
    res.status = 2;
  } catch (const error& e) {
    const char* kind = e.kind() == errc::parse ? "parse"
                       : e.kind() == errc::precondition ? "precondition"
                                                        : "internal";
    report["error"] = {{"kind", kind}, {"message", e.what()}};
    res.status = e.kind() == errc::parse ? 2 : e.kind() == errc::precondition ? 3 : 4;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    res.status = 4;
  }
  res.report_json = report.dump(2) + "\n";
  return res;
}

}  // namespace vvmf
