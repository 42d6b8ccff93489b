#include "qtorb/qtorb.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qtorb/blowup.hpp"
#include "qtorb/cohomology.hpp"
#include "qtorb/model.hpp"
#include "qtorb/report.hpp"

struct qtorb_model {
  qtorb::Model model;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
qtorb_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return QTORB_OK;
  } catch (const qtorb::ValidationError& e) {
    g_last_error = e.what();
    return QTORB_ERROR_INVALID_MODEL;
  } catch (const qtorb::NotQuasiSl& e) {
    g_last_error = e.what();
    return QTORB_ERROR_NOT_QUASI_SL;
  } catch (const qtorb::NonIntegralAge& e) {
    g_last_error = e.what();
    return QTORB_ERROR_NOT_QUASI_SL;
  } catch (const qtorb::BlowupError& e) {
    g_last_error = e.what();
    return QTORB_ERROR_INVALID_BLOWUP;
  } catch (const qtorb::Error& e) {
    g_last_error = e.what();
    return QTORB_ERROR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QTORB_ERROR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QTORB_ERROR_INTERNAL;
  }
}

qtorb::BlowupSpec make_spec(const int* face, const char* const* weights, std::size_t len) {
  qtorb::BlowupSpec spec;
  for (std::size_t i = 0; i < len; ++i) {
    if (weights[i] == nullptr) throw qtorb::Error("null weight string");
    spec.face.push_back(face[i]);
    spec.weights.push_back(qtorb::parse_rat(weights[i]));
  }
  return spec;
}

}  // namespace

extern "C" {

const char* qtorb_status_string(qtorb_status status) {
  switch (status) {
    case QTORB_OK:
      return "ok";
    case QTORB_ERROR_NULL_ARGUMENT:
      return "null argument";
    case QTORB_ERROR_INVALID_MODEL:
      return "invalid model";
    case QTORB_ERROR_NOT_QUASI_SL:
      return "model is not quasi-SL";
    case QTORB_ERROR_INVALID_BLOWUP:
      return "invalid blowup";
    case QTORB_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case QTORB_ERROR_OUT_OF_MEMORY:
      return "out of memory";
    case QTORB_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* qtorb_last_error(void) { return g_last_error.c_str(); }

void qtorb_string_free(char* str) { std::free(str); }

qtorb_status qtorb_model_parse(const char* json, qtorb_model** out) {
  if (json == nullptr || out == nullptr) return QTORB_ERROR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new qtorb_model{qtorb::parse_model(json)}; });
}

void qtorb_model_free(qtorb_model* model) { delete model; }

qtorb_status qtorb_model_to_json(const qtorb_model* model, char** out) {
  if (model == nullptr || out == nullptr) return QTORB_ERROR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(qtorb::model_to_json_text(model->model)); });
}

int qtorb_model_dimension(const qtorb_model* model) { return model ? model->model.n : -1; }

int qtorb_model_facet_count(const qtorb_model* model) { return model ? model->model.m : -1; }

qtorb_status qtorb_validate(const char* json, char** report) {
  if (json == nullptr || report == nullptr) return QTORB_ERROR_NULL_ARGUMENT;
  *report = nullptr;
  std::vector<std::string> violations;
  qtorb_status st = guarded([&] {
    try {
      qtorb::Model m = qtorb::parse_model(json);
      *report = dup_string(qtorb::report::validate_ok(m).dump());
    } catch (const qtorb::ValidationError& e) {
      violations = e.violations();
      throw;
    }
  });
  if (st == QTORB_ERROR_INVALID_MODEL) {
    qtorb_status st2 = guarded([&] { *report = dup_string(qtorb::report::validate_failed(violations).dump()); });
    if (st2 != QTORB_OK) return st2;
    g_last_error = "invalid model";
  }
  return st;
}

qtorb_status qtorb_faces_report(const qtorb_model* model, char** out) {
  if (model == nullptr || out == nullptr) return QTORB_ERROR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(qtorb::report::faces(model->model).dump()); });
}

qtorb_status qtorb_sectors_report(const qtorb_model* model, char** out) {
  if (model == nullptr || out == nullptr) return QTORB_ERROR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(qtorb::report::sectors(model->model).dump()); });
}

qtorb_status qtorb_betti_report(const qtorb_model* model, char** out) {
  if (model == nullptr || out == nullptr) return QTORB_ERROR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(qtorb::report::betti(model->model).dump()); });
}

qtorb_status qtorb_cr_report(const qtorb_model* model, char** out, int* identities_ok) {
  if (model == nullptr || out == nullptr || identities_ok == nullptr) return QTORB_ERROR_NULL_ARGUMENT;
  return guarded([&] {
    qtorb::CrReport r = qtorb::cr_report(model->model);
    *identities_ok = r.routes_agree() && r.all_identities_pass() ? 1 : 0;
    *out = dup_string(qtorb::report::cr(r).dump());
  });
}

qtorb_status qtorb_ehrhart_report(const qtorb_model* model, int use_oracle, char** out, int* consistent) {
  if (model == nullptr || out == nullptr || consistent == nullptr) return QTORB_ERROR_NULL_ARGUMENT;
  return guarded([&] {
    bool ok = true;
    auto j = qtorb::report::ehrhart(model->model, use_oracle != 0, ok);
    *consistent = ok ? 1 : 0;
    *out = dup_string(j.dump());
  });
}

qtorb_status qtorb_blow_up(const qtorb_model* model, const int* face, const char* const* weights,
                           size_t len, qtorb_model** out, char** summary) {
  if (model == nullptr || face == nullptr || weights == nullptr || out == nullptr)
    return QTORB_ERROR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    qtorb::BlowupSpec spec = make_spec(face, weights, len);
    qtorb::Model result = qtorb::blow_up(model->model, spec);
    if (summary != nullptr) *summary = dup_string(qtorb::report::blowup(spec, result).dump());
    *out = new qtorb_model{std::move(result)};
  });
}

qtorb_status qtorb_mckay_report(const qtorb_model* model, const int* face, const char* const* weights,
                                size_t len, char** out, int* verdict) {
  if (model == nullptr || face == nullptr || weights == nullptr || out == nullptr || verdict == nullptr)
    return QTORB_ERROR_NULL_ARGUMENT;
  return guarded([&] {
    qtorb::McKayReport r = qtorb::mckay_check(model->model, make_spec(face, weights, len));
    *verdict = r.verdict ? 1 : 0;
    *out = dup_string(qtorb::report::mckay(r).dump());
  });
}

qtorb_status qtorb_fuzz_report(uint64_t seed, int count, int n, int budget, int use_oracle, char** out,
                               int* all_pass) {
  if (out == nullptr || all_pass == nullptr) return QTORB_ERROR_NULL_ARGUMENT;
  return guarded([&] {
    if (count < 0 || budget < 1) throw qtorb::Error("count must be >= 0 and budget >= 1");
    bool pass = true;
    auto j = qtorb::report::fuzz(seed, count, n, budget, use_oracle != 0, pass);
    *all_pass = pass ? 1 : 0;
    *out = dup_string(j.dump());
  });
}

}  // extern "C"
