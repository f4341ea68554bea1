#include "clusterhodge/clusterhodge.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "basis.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "io.hpp"
#include "pointcount.hpp"
#include "quiver.hpp"

using namespace clusterhodge;

struct clh_seed {
  Seed seed;
};

namespace {

thread_local std::string last_error;

clh_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return CLH_ERR_PARSE;
    case ErrorCode::InvalidIndex: return CLH_ERR_INVALID_INDEX;
    case ErrorCode::NotSkewSymmetric: return CLH_ERR_NOT_SKEW_SYMMETRIC;
    case ErrorCode::Precondition: return CLH_ERR_PRECONDITION;
    case ErrorCode::NotLouise: return CLH_ERR_NOT_LOUISE;
    case ErrorCode::UnsupportedDimension: return CLH_ERR_UNSUPPORTED_DIMENSION;
    case ErrorCode::OpenCase: return CLH_OPEN_CASE;
    case ErrorCode::NotFiniteType: return CLH_ERR_NOT_FINITE_TYPE;
    case ErrorCode::InconsistentRank: return CLH_ERR_INCONSISTENT_RANK;
    case ErrorCode::DualityUnavailable: return CLH_ERR_DOMAIN;
    case ErrorCode::Domain: return CLH_ERR_DOMAIN;
    case ErrorCode::InsufficientSamples:
    case ErrorCode::NonIntegral:
    case ErrorCode::HeldOutMismatch: return CLH_ERR_INTERPOLATION;
    case ErrorCode::Overflow: return CLH_ERR_OVERFLOW;
  }
  return CLH_ERR_INTERNAL;
}

clh_status fail(clh_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

/// Runs `body`, translating exceptions into status codes.
template <typename F>
clh_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CLH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CLH_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

bool bad_format(clh_format f) { return f != CLH_FORMAT_TEXT && f != CLH_FORMAT_JSON && f != CLH_FORMAT_CSV; }

clh_status check_args(const void* seed, const void* out) {
  if (!seed || !out) return fail(CLH_ERR_INVALID_ARGUMENT, "null argument");
  return CLH_OK;
}

}  // namespace

extern "C" {

const char* clh_version(void) { return "0.1.0"; }

const char* clh_last_error(void) { return last_error.c_str(); }

const char* clh_status_name(clh_status status) {
  switch (status) {
    case CLH_OK: return "ok";
    case CLH_ERR_PARSE: return "parse error";
    case CLH_OPEN_CASE: return "open case";
    case CLH_ERR_INVALID_INDEX: return "invalid index";
    case CLH_ERR_NOT_SKEW_SYMMETRIC: return "principal part not skew-symmetric";
    case CLH_ERR_UNSUPPORTED_DIMENSION: return "unsupported dimension";
    case CLH_ERR_NOT_FINITE_TYPE: return "not of finite type";
    case CLH_ERR_NOT_LOUISE: return "no separating edge";
    case CLH_ERR_PRECONDITION: return "precondition violated";
    case CLH_ERR_DOMAIN: return "domain error";
    case CLH_ERR_INTERPOLATION: return "interpolation failed";
    case CLH_ERR_OVERFLOW: return "overflow";
    case CLH_ERR_INCONSISTENT_RANK: return "inconsistent rank data";
    case CLH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CLH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void clh_string_free(char* text) { std::free(text); }

clh_status clh_seed_from_json(const char* json, clh_seed** out) {
  if (out) *out = nullptr;
  if (auto s = check_args(json, out)) return s;
  return guarded([&] {
    *out = new clh_seed{seed_from_json(json)};
    return CLH_OK;
  });
}

void clh_seed_free(clh_seed* seed) { delete seed; }

clh_status clh_seed_to_json(const clh_seed* seed, char** out) {
  if (out) *out = nullptr;
  if (auto s = check_args(seed, out)) return s;
  return guarded([&] {
    *out = duplicate(seed_to_json(seed->seed));
    return CLH_OK;
  });
}

clh_status clh_seed_shape(const clh_seed* seed, size_t* mutable_count, size_t* frozen_count) {
  if (!seed || !mutable_count || !frozen_count) return fail(CLH_ERR_INVALID_ARGUMENT, "null argument");
  *mutable_count = seed->seed.mutable_count();
  *frozen_count = seed->seed.frozen_count();
  return CLH_OK;
}

clh_status clh_seed_mutate(const clh_seed* seed, size_t k, clh_seed** out) {
  if (out) *out = nullptr;
  if (auto s = check_args(seed, out)) return s;
  if (k == 0) return fail(CLH_ERR_INVALID_INDEX, "vertex indices are 1-based");
  return guarded([&] {
    *out = new clh_seed{seed->seed.mutated(k - 1)};
    return CLH_OK;
  });
}

clh_status clh_seed_freeze(const clh_seed* seed, const size_t* indices, size_t count, clh_seed** out) {
  if (out) *out = nullptr;
  if (auto s = check_args(seed, out)) return s;
  if (count > 0 && !indices) return fail(CLH_ERR_INVALID_ARGUMENT, "null index list");
  return guarded([&] {
    std::vector<std::size_t> zero_based;
    for (size_t i = 0; i < count; ++i) {
      if (indices[i] == 0) return fail(CLH_ERR_INVALID_INDEX, "vertex indices are 1-based");
      zero_based.push_back(indices[i] - 1);
    }
    *out = new clh_seed{freeze(seed->seed, zero_based)};
    return CLH_OK;
  });
}

clh_status clh_classify(const clh_seed* seed, clh_format format, char** out) {
  if (out) *out = nullptr;
  if (auto s = check_args(seed, out)) return s;
  if (bad_format(format)) return fail(CLH_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    const Classification c = classify(seed->seed);
    switch (format) {
      case CLH_FORMAT_JSON: *out = duplicate(classification_to_json(c)); break;
      case CLH_FORMAT_CSV: *out = duplicate(classification_to_csv(c)); break;
      default: *out = duplicate(classification_to_text(c)); break;
    }
    if (c.tag == CaseTag::Unsupported) return fail(CLH_OPEN_CASE, c.reason);
    return CLH_OK;
  });
}

clh_status clh_table(const clh_seed* seed, int ih, clh_format format, char** out) {
  if (out) *out = nullptr;
  if (auto s = check_args(seed, out)) return s;
  if (bad_format(format)) return fail(CLH_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    const auto variant = ih ? CohomologyVariant::IntersectionCohomology : CohomologyVariant::Cohomology;
    const MixedHodgeTable t = table_for(classify(seed->seed), variant);
    switch (format) {
      case CLH_FORMAT_JSON: *out = duplicate(table_to_json(t)); break;
      case CLH_FORMAT_CSV: *out = duplicate(table_to_csv(t)); break;
      default: *out = duplicate(table_to_ascii(t)); break;
    }
    return CLH_OK;
  });
}

clh_status clh_basis(const clh_seed* seed, clh_basis_variant variant, clh_format format, char** out) {
  if (out) *out = nullptr;
  if (auto s = check_args(seed, out)) return s;
  if (bad_format(format)) return fail(CLH_ERR_INVALID_ARGUMENT, "unknown format");
  if (variant != CLH_BASIS_STATEMENT && variant != CLH_BASIS_EQ21) return fail(CLH_ERR_INVALID_ARGUMENT, "unknown basis variant");
  return guarded([&] {
    const Basis b = basis_for(classify(seed->seed),
                              variant == CLH_BASIS_EQ21 ? Prop2mVariant::Eq21 : Prop2mVariant::Statement);
    switch (format) {
      case CLH_FORMAT_JSON: *out = duplicate(basis_to_json(b)); break;
      case CLH_FORMAT_CSV: *out = duplicate(basis_to_csv(b)); break;
      default: *out = duplicate(basis_to_text(b)); break;
    }
    return CLH_OK;
  });
}

clh_status clh_count(const clh_seed* seed, uint64_t prime, uint64_t* count) {
  if (auto s = check_args(seed, count)) return s;
  return guarded([&] {
    *count = count_variety(seed->seed, PrimeField(prime));
    return CLH_OK;
  });
}

clh_status clh_verify(const clh_seed* seed, const uint64_t* primes, size_t prime_count, clh_format format,
                      char** out, clh_verdict* verdict) {
  if (out) *out = nullptr;
  if (auto s = check_args(seed, out)) return s;
  if (bad_format(format)) return fail(CLH_ERR_INVALID_ARGUMENT, "unknown format");
  if (prime_count > 0 && !primes) return fail(CLH_ERR_INVALID_ARGUMENT, "null prime list");
  return guarded([&] {
    std::optional<PrimePlan> plan;
    if (prime_count > 0) plan = PrimePlan::from_list(std::vector<std::uint64_t>(primes, primes + prime_count));
    const VerificationReport r = verify_table(seed->seed, plan);
    switch (format) {
      case CLH_FORMAT_JSON: *out = duplicate(report_to_json(r)); break;
      case CLH_FORMAT_CSV: *out = duplicate(report_to_csv(r)); break;
      default: *out = duplicate(report_to_text(r)); break;
    }
    if (verdict) {
      *verdict = r.verdict == Verdict::Pass ? CLH_VERDICT_PASS
                 : r.verdict == Verdict::CountOnly ? CLH_VERDICT_COUNT_ONLY
                                                   : CLH_VERDICT_FAIL;
    }
    return CLH_OK;
  });
}

clh_status clh_finite_type(const clh_seed* seed, clh_format format, char** out) {
  if (out) *out = nullptr;
  if (auto s = check_args(seed, out)) return s;
  if (bad_format(format)) return fail(CLH_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    const FiniteTypeResult r = finite_type_check(seed->seed);
    switch (format) {
      case CLH_FORMAT_JSON: *out = duplicate(finite_type_to_json(r)); break;
      case CLH_FORMAT_CSV: *out = duplicate(finite_type_to_csv(r)); break;
      default: *out = duplicate(finite_type_to_text(r)); break;
    }
    return CLH_OK;
  });
}

}  // extern "C"
