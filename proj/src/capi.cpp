#include "bihom.h"

#include <cstring>
#include <new>
#include <string>

#include "catalog.hpp"
#include "serialize.hpp"

using namespace bihom;

struct bh_record {
  Record rec;
};

struct bh_report {
  ViolationReport<R> rep;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

CheckOptions options(int max_witnesses) {
  CheckOptions opt;
  if (max_witnesses > 0) opt.max_witnesses = max_witnesses;
  return opt;
}

#define BH_EXPORT __attribute__((visibility("default")))

}  // namespace

extern "C" {

BH_EXPORT const char* bh_version(void) { return "bihom 1.0.0"; }

BH_EXPORT bh_record* bh_record_parse(const char* json, char** err) {
  if (!json) {
    set_err(err, "null input");
    return nullptr;
  }
  try {
    return new bh_record{deserialize(json)};
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return nullptr;
  }
}

BH_EXPORT char* bh_record_serialize(const bh_record* rec) {
  if (!rec) return nullptr;
  try {
    return dup_string(serialize(rec->rec));
  } catch (const std::exception&) {
    return nullptr;
  }
}

BH_EXPORT const char* bh_record_kind(const bh_record* rec) {
  return rec ? rec->rec.kind.c_str() : nullptr;
}

BH_EXPORT void bh_record_free(bh_record* rec) { delete rec; }

BH_EXPORT void bh_string_free(char* s) { std::free(s); }

BH_EXPORT bh_report* bh_check(const bh_record* rec, int max_witnesses, char** err) {
  if (!rec) {
    set_err(err, "null record");
    return nullptr;
  }
  try {
    return new bh_report{check_record(rec->rec, options(max_witnesses))};
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return nullptr;
  }
}

BH_EXPORT int bh_report_passed(const bh_report* rep) {
  return rep && rep->rep.passed() ? 1 : 0;
}

BH_EXPORT long long bh_report_total_violations(const bh_report* rep) {
  return rep ? rep->rep.total_violations() : 0;
}

BH_EXPORT char* bh_report_to_json(const bh_report* rep) {
  return rep ? dup_string(report_to_json(rep->rep)) : nullptr;
}

BH_EXPORT char* bh_report_to_text(const bh_report* rep) {
  return rep ? dup_string(report_to_text(rep->rep)) : nullptr;
}

BH_EXPORT void bh_report_free(bh_report* rep) { delete rep; }

BH_EXPORT int bh_construct(const char* op, const bh_record* const* inputs, int n_inputs,
                           const char* variant, int max_witnesses, bh_record** out,
                           bh_report** report, char** err) {
  if (out) *out = nullptr;
  if (report) *report = nullptr;
  if (!op || n_inputs < 0 || (n_inputs > 0 && !inputs)) {
    set_err(err, "bad arguments");
    return BH_ERROR;
  }
  try {
    std::vector<const Record*> in;
    for (int i = 0; i < n_inputs; ++i) {
      if (!inputs[i]) {
        set_err(err, "null input record");
        return BH_ERROR;
      }
      in.push_back(&inputs[i]->rec);
    }
    ConstructOutcome oc =
        construct_record(op, in, variant ? variant : "", options(max_witnesses));
    bool ok = oc.record.has_value() && oc.report.passed();
    if (report) *report = new bh_report{std::move(oc.report)};
    if (oc.record && out) *out = new bh_record{std::move(*oc.record)};
    return ok ? BH_OK : BH_VIOLATIONS;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return BH_ERROR;
  }
}

BH_EXPORT char* bh_catalog_list(void) {
  std::string s;
  for (const auto& n : catalog_names()) {
    s += n;
    s += "\n";
  }
  return dup_string(s);
}

BH_EXPORT bh_record* bh_catalog_get(const char* name, char** err) {
  if (!name) {
    set_err(err, "null preset name");
    return nullptr;
  }
  try {
    return new bh_record{catalog_get(name)};
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return nullptr;
  }
}

BH_EXPORT bh_record* bh_random_structure(const char* kind, int dim,
                                         unsigned long long seed, int sparsity,
                                         int* passed, char** err) {
  if (!kind) {
    set_err(err, "null kind");
    return nullptr;
  }
  try {
    RandomResult rr = random_structure(kind, dim, seed, sparsity > 0 ? sparsity : 3);
    if (passed) *passed = rr.passed ? 1 : 0;
    return new bh_record{std::move(rr.record)};
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return nullptr;
  }
}

BH_EXPORT int bh_residual(const bh_record* rec, char** json, char** err) {
  if (json) *json = nullptr;
  if (!rec) {
    set_err(err, "null record");
    return BH_ERROR;
  }
  try {
    Vec<R> res;
    int dim = 0;
    if (rec->rec.kind == "qt") {
      const auto& q = std::get<QtStructure<R>>(rec->rec.value);
      R w = q.kind == QtKind::quasi ? q.lambda : -q.lambda;
      res = abhybe_residual(q.base, q.psi, q.omega, q.r, w);
      dim = q.base.dim;
    } else if (rec->rec.kind == "coqt") {
      const auto& c = std::get<CoqtStructure<R>>(rec->rec.value);
      R w = c.kind == QtKind::quasi ? c.lambda : -c.lambda;
      res = coabhybe_residual(c.base, c.alpha, c.beta, c.sigma, w);
      dim = c.base.dim;
    } else {
      set_err(err, "residual expects a 'qt' or 'coqt' record, got '" + rec->rec.kind + "'");
      return BH_ERROR;
    }
    if (json) *json = dup_string(residual_to_json(res, dim));
    return is_zero(res) ? BH_OK : BH_VIOLATIONS;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return BH_ERROR;
  }
}

}  // extern "C"
