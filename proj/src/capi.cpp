#include "qcu/qcu.h"

#include <string>

#include "qcu/betti.hpp"
#include "qcu/commands.hpp"

struct qcu_config {
  qcu::RunConfig cfg;
  std::string field_text;
};

struct qcu_report {
  qcu::Transcript transcript;
  std::string text;
};

struct qcu_candidate {
  qcu::UlrichCandidate cand;
  mutable std::string json;
};

namespace {

thread_local std::string last_error;

qcu_status fail(qcu_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
qcu_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return QCU_OK;
  } catch (const qcu::InvalidInput& e) {
    return fail(QCU_ERR_INVALID_INPUT, e.what());
  } catch (const qcu::FieldMismatch& e) {
    return fail(QCU_ERR_FIELD_MISMATCH, e.what());
  } catch (const qcu::DivisionByZero& e) {
    return fail(QCU_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const qcu::NotASquare& e) {
    return fail(QCU_ERR_NOT_A_SQUARE, e.what());
  } catch (const qcu::FieldTooSmall& e) {
    return fail(QCU_ERR_FIELD_TOO_SMALL, e.what());
  } catch (const qcu::VerificationFailure& e) {
    return fail(QCU_ERR_VERIFICATION, e.what());
  } catch (const qcu::IoError& e) {
    return fail(QCU_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(QCU_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QCU_ERR_INTERNAL, "unknown exception");
  }
}

qcu::Params to_params(const char* const* keys, const char* const* values, size_t count) {
  qcu::Params p;
  if (count && (!keys || !values)) throw qcu::InvalidInput("parameter arrays are NULL");
  for (size_t i = 0; i < count; ++i) {
    if (!keys[i] || !values[i]) throw qcu::InvalidInput("NULL parameter name or value");
    p[keys[i]] = values[i];
  }
  return p;
}

qcu_report* make_report(const qcu_config* cfg, qcu::Transcript t) {
  auto* r = new qcu_report{std::move(t), {}};
  r->text = r->transcript.render(cfg->cfg);
  return r;
}

}  // namespace

extern "C" {

const char* qcu_version(void) { return "1.0.0"; }

const char* qcu_status_name(qcu_status status) {
  switch (status) {
    case QCU_OK: return "ok";
    case QCU_ERR_INVALID_INPUT: return "invalid input";
    case QCU_ERR_FIELD_MISMATCH: return "field mismatch";
    case QCU_ERR_DIVISION_BY_ZERO: return "division by zero";
    case QCU_ERR_FIELD_TOO_SMALL: return "field too small";
    case QCU_ERR_NOT_A_SQUARE: return "not a square";
    case QCU_ERR_VERIFICATION: return "verification failure";
    case QCU_ERR_IO: return "i/o error";
    case QCU_ERR_NULL_ARGUMENT: return "null argument";
    case QCU_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qcu_last_error(void) { return last_error.c_str(); }

qcu_status qcu_config_new(const char* field, uint64_t seed, qcu_config** out) {
  if (!out) return fail(QCU_ERR_NULL_ARGUMENT, "out is NULL");
  return guarded([&] {
    auto c = std::make_unique<qcu_config>();
    c->cfg.field = field ? qcu::Field::parse(field) : qcu::Field::default_prime();
    c->cfg.seed = seed;
    c->field_text = c->cfg.field.to_string();
    *out = c.release();
  });
}

void qcu_config_free(qcu_config* cfg) { delete cfg; }

qcu_status qcu_config_set_format(qcu_config* cfg, const char* format) {
  if (!cfg || !format) return fail(QCU_ERR_NULL_ARGUMENT, "cfg or format is NULL");
  return guarded([&] {
    qcu::RunConfig next = cfg->cfg;
    next.format = format;
    qcu::validate_config(next);
    cfg->cfg = next;
  });
}

qcu_status qcu_config_set_degree_cap(qcu_config* cfg, int cap) {
  if (!cfg) return fail(QCU_ERR_NULL_ARGUMENT, "cfg is NULL");
  cfg->cfg.degree_cap = cap < 0 ? std::nullopt : std::optional<int>(cap);
  return QCU_OK;
}

qcu_status qcu_config_set_verbosity(qcu_config* cfg, int verbosity) {
  if (!cfg) return fail(QCU_ERR_NULL_ARGUMENT, "cfg is NULL");
  cfg->cfg.verbosity = verbosity;
  return QCU_OK;
}

const char* qcu_config_field(const qcu_config* cfg) { return cfg ? cfg->field_text.c_str() : ""; }

qcu_status qcu_run_command(const qcu_config* cfg, const char* command, const char* const* keys,
                           const char* const* values, size_t count, qcu_report** out) {
  if (!cfg || !command || !out) return fail(QCU_ERR_NULL_ARGUMENT, "cfg, command or out is NULL");
  return guarded([&] {
    const qcu::Params p = to_params(keys, values, count);
    const std::string c = command;
    qcu::Transcript t;
    if (c == "pencil") t = qcu::pencil_command(cfg->cfg, p);
    else if (c == "mf") t = qcu::mf_command(cfg->cfg, p);
    else if (c == "clifford") t = qcu::clifford_command(cfg->cfg, p);
    else if (c == "betti") t = qcu::betti_command(cfg->cfg, p);
    else if (c == "ulrich") t = qcu::ulrich_command(cfg->cfg, p);
    else throw qcu::InvalidInput("unknown command '" + c + "'");
    *out = make_report(cfg, std::move(t));
  });
}

qcu_status qcu_run_suite(const qcu_config* cfg, const char* suite, const char* const* keys, const char* const* values,
                         size_t count, qcu_report** out) {
  if (!cfg || !suite || !out) return fail(QCU_ERR_NULL_ARGUMENT, "cfg, suite or out is NULL");
  return guarded([&] { *out = make_report(cfg, qcu::run_suite(cfg->cfg, suite, to_params(keys, values, count))); });
}

qcu_status qcu_export(const qcu_config* cfg, const char* object, const char* const* keys, const char* const* values,
                      size_t count, const char* path, const char* format, qcu_report** out) {
  if (!cfg || !object || !path || !format || !out) return fail(QCU_ERR_NULL_ARGUMENT, "NULL argument to qcu_export");
  return guarded([&] {
    *out = make_report(cfg, qcu::export_object(cfg->cfg, object, to_params(keys, values, count), path, format));
  });
}

void qcu_report_free(qcu_report* report) { delete report; }

int qcu_report_passed(const qcu_report* report) { return report && report->transcript.pass() ? 1 : 0; }

const char* qcu_report_text(const qcu_report* report) { return report ? report->text.c_str() : ""; }

size_t qcu_report_check_count(const qcu_report* report) { return report ? report->transcript.checks.size() : 0; }

const char* qcu_report_check_name(const qcu_report* report, size_t index) {
  if (!report || index >= report->transcript.checks.size()) return "";
  return report->transcript.checks[index].name.c_str();
}

int qcu_report_check_passed(const qcu_report* report, size_t index) {
  if (!report || index >= report->transcript.checks.size()) return 0;
  return report->transcript.checks[index].pass ? 1 : 0;
}

qcu_status qcu_candidate_from_json(const char* json, qcu_candidate** out) {
  if (!json || !out) return fail(QCU_ERR_NULL_ARGUMENT, "json or out is NULL");
  return guarded([&] {
    qcu::Json j;
    try {
      j = qcu::Json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      throw qcu::InvalidInput(std::string("not JSON: ") + e.what());
    }
    *out = new qcu_candidate{qcu::candidate_from_json(j.contains("candidate") ? j["candidate"] : j), {}};
  });
}

qcu_status qcu_candidate_construct(const qcu_config* cfg, int n, const char* d, qcu_candidate** out) {
  if (!cfg || !d || !out) return fail(QCU_ERR_NULL_ARGUMENT, "cfg, d or out is NULL");
  return guarded([&] {
    *out = new qcu_candidate{qcu::build_candidate(n, qcu::diagonal_lambda(qcu::parse_scalar_list(cfg->cfg.field, d))), {}};
  });
}

void qcu_candidate_free(qcu_candidate* cand) { delete cand; }

size_t qcu_candidate_rows(const qcu_candidate* cand) { return cand ? cand->cand.a.rows() : 0; }

size_t qcu_candidate_cols(const qcu_candidate* cand) { return cand ? cand->cand.a.cols() : 0; }

size_t qcu_candidate_variables(const qcu_candidate* cand) { return cand ? cand->cand.ring->nvars() : 0; }

const char* qcu_candidate_json(const qcu_candidate* cand) {
  if (!cand) return "";
  cand->json = qcu::canonical_dump(qcu::candidate_to_json(cand->cand));
  return cand->json.c_str();
}

qcu_status qcu_candidate_certificates(const qcu_candidate* cand, int* ok) {
  if (!cand || !ok) return fail(QCU_ERR_NULL_ARGUMENT, "cand or ok is NULL");
  return guarded([&] { *ok = qcu::verify_certificates(cand->cand).ok() ? 1 : 0; });
}

qcu_status qcu_candidate_set_entry(qcu_candidate* cand, size_t row, size_t col, const char* poly) {
  if (!cand || !poly) return fail(QCU_ERR_NULL_ARGUMENT, "cand or poly is NULL");
  return guarded([&] {
    if (row >= cand->cand.a.rows() || col >= cand->cand.a.cols()) throw qcu::InvalidInput("entry out of range");
    cand->cand.a.set(row, col, qcu::parse_poly(cand->cand.ring, poly));
  });
}

qcu_status qcu_candidate_hilbert(const qcu_candidate* cand, int trials, uint64_t seed, int* passed) {
  if (!cand || !passed) return fail(QCU_ERR_NULL_ARGUMENT, "cand or passed is NULL");
  return guarded([&] {
    if (trials < 1) throw qcu::InvalidInput("trials must be positive");
    *passed = qcu::artinian_hilbert_check(cand->cand, trials, seed).pass ? 1 : 0;
  });
}

qcu_status qcu_betti_number(int g, int i, long* out) {
  if (!out) return fail(QCU_ERR_NULL_ARGUMENT, "out is NULL");
  return guarded([&] { *out = qcu::betti_number(g, i); });
}

qcu_status qcu_knorrer_check(int n, int* ok) {
  if (!ok) return fail(QCU_ERR_NULL_ARGUMENT, "ok is NULL");
  *ok = 0;
  const qcu_status s = guarded([&] { qcu::knorrer_pair(n); });
  if (s == QCU_OK) *ok = 1;
  return s == QCU_ERR_VERIFICATION ? QCU_OK : s;
}

}  // extern "C"
