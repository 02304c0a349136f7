#include "vvmf.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "vvmf/jobs.hpp"
#include "vvmf/json_io.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

vvmf_status status_of(const vvmf::error& e) {
  switch (e.kind()) {
    case vvmf::errc::parse:
      return VVMF_PARSE_ERROR;
    case vvmf::errc::precondition:
      return VVMF_PRECONDITION_FAILED;
    default:
      return VVMF_INTERNAL_ERROR;
  }
}

template <typename Fn>
vvmf_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const vvmf::error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return VVMF_PARSE_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VVMF_INTERNAL_ERROR;
  }
}

vvmf_status report_status(const vvmf::Report& rpt) {
  return rpt.all_pass() ? VVMF_OK : VVMF_CHECK_FAILED;
}

}  // namespace

struct vvmf_repdata_t {
  vvmf::RepData rep;
};
struct vvmf_fundamental_t {
  vvmf::FundamentalMatrix f;
};
struct vvmf_modrep_t {
  vvmf::ModularRep rep;
};

extern "C" {

const char* vvmf_version(void) { return "1.0.0"; }

const char* vvmf_last_error(void) { return g_last_error.c_str(); }

void vvmf_string_free(char* s) { std::free(s); }

vvmf_status vvmf_run_job(const char* command, const char* input_json, const char* options_json,
                         char** report_json_out) {
  if (!command || !report_json_out) {
    g_last_error = "null argument";
    return VVMF_PARSE_ERROR;
  }
  vvmf::JobResult res =
      vvmf::run_job(command, input_json ? input_json : "", options_json ? options_json : "");
  *report_json_out = dup_string(res.report_json);
  if (res.status != 0) {
    g_last_error = "job finished with status " + std::to_string(res.status);
    switch (res.status) {
      case 1:
        return VVMF_CHECK_FAILED;
      case 2:
        return VVMF_PARSE_ERROR;
      case 3:
        return VVMF_PRECONDITION_FAILED;
      default:
        return VVMF_INTERNAL_ERROR;
    }
  }
  return VVMF_OK;
}

vvmf_status vvmf_repdata_parse(const char* json, vvmf_repdata_t** out) {
  return guarded([&]() {
    if (!json || !out) vvmf::fail_parse("null argument");
    auto j = nlohmann::json::parse(json);
    *out = new vvmf_repdata_t{vvmf::repdata_from_json(j)};
    return VVMF_OK;
  });
}

void vvmf_repdata_free(vvmf_repdata_t* rep) { delete rep; }

int vvmf_repdata_dim(const vvmf_repdata_t* rep) { return rep ? int(rep->rep.dim()) : 0; }

vvmf_status vvmf_repdata_to_json(const vvmf_repdata_t* rep, char** json_out) {
  return guarded([&]() {
    if (!rep || !json_out) vvmf::fail_parse("null argument");
    *json_out = dup_string(vvmf::repdata_to_json(rep->rep).dump(2));
    return VVMF_OK;
  });
}

vvmf_status vvmf_repdata_dual(const vvmf_repdata_t* rep, vvmf_repdata_t** out) {
  return guarded([&]() {
    if (!rep || !out) vvmf::fail_parse("null argument");
    *out = new vvmf_repdata_t{vvmf::dual(rep->rep)};
    return VVMF_OK;
  });
}

vvmf_status vvmf_repdata_validate(const vvmf_repdata_t* rep, char** report_json_out) {
  return guarded([&]() {
    if (!rep || !report_json_out) vvmf::fail_parse("null argument");
    vvmf::Report rpt;
    vvmf::ABPair ab = vvmf::derive_ab(rep->rep);
    auto sig = vvmf::spectral_signature(ab, &rpt);
    if (sig) {
      rpt.add("monodromy", vvmf::monodromy_equation_check(rep->rep.lambda, ab.a));
      rpt.merge(vvmf::trace_audit(rep->rep, *sig));
    }
    *report_json_out = dup_string(vvmf::report_to_json(rpt).dump(2));
    return report_status(rpt);
  });
}

vvmf_status vvmf_fundamental_expand(const vvmf_repdata_t* rep, long order,
                                    vvmf_fundamental_t** out) {
  return guarded([&]() {
    if (!rep || !out) vvmf::fail_parse("null argument");
    *out = new vvmf_fundamental_t{vvmf::expand_fundamental(rep->rep, order)};
    return VVMF_OK;
  });
}

void vvmf_fundamental_free(vvmf_fundamental_t* f) { delete f; }

long vvmf_fundamental_order(const vvmf_fundamental_t* f) { return f ? f->f.order() : -1; }

vvmf_status vvmf_fundamental_to_json(const vvmf_fundamental_t* f, char** json_out) {
  return guarded([&]() {
    if (!f || !json_out) vvmf::fail_parse("null argument");
    *json_out = dup_string(vvmf::fundamental_to_json(f->f).dump(2));
    return VVMF_OK;
  });
}

vvmf_status vvmf_fundamental_entry(const vvmf_fundamental_t* f, size_t row, size_t col,
                                   char** series_json_out) {
  return guarded([&]() {
    if (!f || !series_json_out) vvmf::fail_parse("null argument");
    if (row >= f->f.dim() || col >= f->f.dim()) vvmf::fail_pre("entry index out of range");
    *series_json_out = dup_string(vvmf::series_to_json(f->f.entry(row, col)).dump(2));
    return VVMF_OK;
  });
}

vvmf_status vvmf_modrep_parse(const char* json, vvmf_modrep_t** out) {
  return guarded([&]() {
    if (!json || !out) vvmf::fail_parse("null argument");
    auto j = nlohmann::json::parse(json);
    *out = new vvmf_modrep_t{vvmf::modrep_from_json(j)};
    return VVMF_OK;
  });
}

void vvmf_modrep_free(vvmf_modrep_t* rep) { delete rep; }

vvmf_status vvmf_modrep_audit(const vvmf_modrep_t* rep, int distinguished_component,
                              char** report_json_out) {
  return guarded([&]() {
    if (!rep || !report_json_out) vvmf::fail_parse("null argument");
    vvmf::Report rpt;
    rpt.merge(rep->rep.relations_check(true));
    rpt.merge(vvmf::rationality_test(rep->rep));
    rpt.merge(vvmf::congruence_heuristic(rep->rep));
    std::optional<size_t> comp;
    if (distinguished_component >= 0) comp = size_t(distinguished_component);
    rpt.merge(vvmf::nonnegativity_test(rep->rep, comp));
    *report_json_out = dup_string(vvmf::report_to_json(rpt).dump(2));
    return report_status(rpt);
  });
}

}  // extern "C"
