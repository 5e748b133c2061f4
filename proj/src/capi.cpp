#include "thompsonf/thompsonf.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "thompsonf/classify.hpp"
#include "thompsonf/error.hpp"
#include "thompsonf/report.hpp"
#include "thompsonf/thompson.hpp"
#include "thompsonf/word.hpp"

using namespace thompsonf;

struct tf_element {
  PLMap map;
};

struct tf_env {
  Environment names;
};

struct tf_subgroup {
  FIFSubgroup group;
};

namespace {

thread_local std::string last_error;

tf_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return TF_PARSE_ERROR;
    case ErrorCode::NotPowerOfTwo: return TF_NOT_POWER_OF_TWO;
    case ErrorCode::NotMonotone: return TF_NOT_MONOTONE;
    case ErrorCode::SlopeNotPowerOfTwo: return TF_SLOPE_NOT_POWER_OF_TWO;
    case ErrorCode::CoordinateOutOfRange: return TF_COORDINATE_OUT_OF_RANGE;
    case ErrorCode::OutOfRange: return TF_OUT_OF_RANGE;
    case ErrorCode::NotInOrbital: return TF_NOT_IN_ORBITAL;
    case ErrorCode::IterationCap: return TF_ITERATION_CAP;
    case ErrorCode::BadInput: return TF_BAD_INPUT;
    case ErrorCode::NegativeIndex: return TF_NEGATIVE_INDEX;
    case ErrorCode::SyntaxError: return TF_SYNTAX_ERROR;
    case ErrorCode::UnboundName: return TF_UNBOUND_NAME;
    case ErrorCode::SupportOutOfRange: return TF_SUPPORT_OUT_OF_RANGE;
    case ErrorCode::NotFiniteIndex: return TF_NOT_FINITE_INDEX;
  }
  return TF_INTERNAL_ERROR;
}

// Runs body, translating exceptions into a status and the thread's last error.
template <typename Body>
tf_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return TF_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("ParseError: ") + e.what();
    return TF_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TF_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return TF_INTERNAL_ERROR;
  }
}

tf_status null_argument() {
  last_error = "null argument";
  return TF_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

char* emit(const Json& report, tf_format fmt) {
  return dup_string(fmt == TF_FORMAT_JSON ? report.dump(2) + "\n" : render_text(report));
}

template <typename Make>
tf_status make_element(tf_element** out, Make&& make) {
  if (!out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new tf_element{make()}; });
}

}  // namespace

extern "C" {

const char* tf_last_error(void) { return last_error.c_str(); }

const char* tf_status_name(tf_status status) {
  switch (status) {
    case TF_OK: return "OK";
    case TF_NULL_ARGUMENT: return "NullArgument";
    case TF_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  if (status > TF_OK && status <= TF_NOT_FINITE_INDEX)
    return error_code_name(static_cast<ErrorCode>(status - 1)).data();
  return "Unknown";
}

int tf_status_is_validation(tf_status status) {
  if (status == TF_NULL_ARGUMENT) return 1;
  if (status > TF_OK && status <= TF_NOT_FINITE_INDEX) return is_validation_error(static_cast<ErrorCode>(status - 1));
  return 0;
}

void tf_string_free(char* s) { std::free(s); }

tf_status tf_element_from_breaks(const char* breaks, tf_element** out) {
  if (!breaks) return null_argument();
  return make_element(out, [&] { return PLMap::parse_breaks(breaks); });
}

tf_status tf_element_from_json(const char* json, tf_element** out) {
  if (!json) return null_argument();
  return make_element(out, [&] { return element_from_json(Json::parse(json)); });
}

tf_status tf_element_standard(const char* name, tf_element** out) {
  if (!name) return null_argument();
  return make_element(out, [&] {
    static const Environment env = standard_environment();
    auto it = env.find(std::string_view(name));
    if (it == env.end()) fail(ErrorCode::UnboundName, std::string("no standard element named '") + name + "'");
    return it->second;
  });
}

void tf_element_free(tf_element* f) { delete f; }

tf_status tf_element_compose(const tf_element* f, const tf_element* g, tf_element** out) {
  if (!f || !g) return null_argument();
  return make_element(out, [&] { return compose(f->map, g->map); });
}

tf_status tf_element_inverse(const tf_element* f, tf_element** out) {
  if (!f) return null_argument();
  return make_element(out, [&] { return inverse(f->map); });
}

tf_status tf_element_conjugate(const tf_element* f, const tf_element* g, tf_element** out) {
  if (!f || !g) return null_argument();
  return make_element(out, [&] { return conjugate(f->map, g->map); });
}

tf_status tf_element_commutator(const tf_element* f, const tf_element* g, tf_element** out) {
  if (!f || !g) return null_argument();
  return make_element(out, [&] { return commutator(f->map, g->map); });
}

tf_status tf_element_power(const tf_element* f, int64_t n, tf_element** out) {
  if (!f) return null_argument();
  return make_element(out, [&] { return power(f->map, n); });
}

tf_status tf_element_rev(const tf_element* f, tf_element** out) {
  if (!f) return null_argument();
  return make_element(out, [&] { return rev(f->map); });
}

tf_status tf_element_equal(const tf_element* f, const tf_element* g, int* out) {
  if (!f || !g || !out) return null_argument();
  return guarded([&] { *out = f->map == g->map; });
}

tf_status tf_element_phi(const tf_element* f, int64_t* e0, int64_t* e1) {
  if (!f || !e0 || !e1) return null_argument();
  return guarded([&] {
    PhiImage p = phi(f->map);
    *e0 = p.e0;
    *e1 = p.e1;
  });
}

tf_status tf_element_evaluate(const tf_element* f, const char* at, tf_format fmt, char** out) {
  if (!f || !at || !out) return null_argument();
  return guarded([&] { *out = emit(value_report(evaluate(f->map, Rational::parse(at))), fmt); });
}

tf_status tf_element_report(const tf_element* f, tf_element_view view, tf_format fmt, char** out) {
  if (!f || !out) return null_argument();
  return guarded([&] {
    switch (view) {
      case TF_VIEW_PHI: *out = emit(phi_report(f->map), fmt); break;
      case TF_VIEW_ORBITALS: *out = emit(orbitals_report(f->map), fmt); break;
      default: *out = emit(element_report(f->map), fmt); break;
    }
  });
}

tf_status tf_element_to_json(const tf_element* f, char** out) {
  if (!f || !out) return null_argument();
  return guarded([&] { *out = dup_string(element_to_json(f->map).dump()); });
}

tf_status tf_element_push_to_end(const tf_element* f, const char* c, const char* eps, uint64_t cap, tf_format fmt,
                                 char** out) {
  if (!f || !c || !eps || !out) return null_argument();
  return guarded([&] {
    Rational start = Rational::parse(c);
    Rational e = Rational::parse(eps);
    std::int64_t limit = cap == 0 ? kDefaultIterationCap
                                  : static_cast<std::int64_t>(std::min<uint64_t>(cap, INT64_MAX));
    for (const auto& orb : orbitals(f->map)) {
      if (orb.lo < start && start < orb.hi) {
        std::int64_t n = push_to_end(f->map, orb, start, e, limit);
        *out = emit(push_report(n, evaluate(power(f->map, n), start)), fmt);
        return;
      }
    }
    fail(ErrorCode::NotInOrbital, start.to_string() + " is a fixed point of the element");
  });
}

tf_status tf_env_create(tf_env** out) {
  if (!out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new tf_env{standard_environment()}; });
}

void tf_env_free(tf_env* env) { delete env; }

tf_status tf_env_load_json(tf_env* env, const char* json) {
  if (!env || !json) return null_argument();
  return guarded([&] { env->names = environment_from_json(Json::parse(json), env->names); });
}

tf_status tf_env_set(tf_env* env, const char* name, const tf_element* f) {
  if (!env || !name || !f) return null_argument();
  return guarded([&] { env->names.insert_or_assign(name, f->map); });
}

tf_status tf_word_eval(const tf_env* env, const char* word, tf_element** out) {
  if (!env || !word) return null_argument();
  return make_element(out, [&] { return eval_word(parse_word(word), env->names); });
}

tf_status tf_subgroup_from_phi_pairs(const char* pairs, tf_subgroup** out) {
  if (!pairs || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new tf_subgroup{from_phi_pairs(parse_generator_list(pairs))}; });
}

tf_status tf_subgroup_from_json(const char* json, tf_subgroup** out) {
  if (!json || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new tf_subgroup{subgroup_from_json(Json::parse(json))}; });
}

tf_status tf_subgroup_from_elements(const tf_element* const* elements, int64_t count, tf_subgroup** out) {
  if (!out || (count > 0 && !elements) || count < 0) return null_argument();
  *out = nullptr;
  std::vector<PLMap> gens;
  for (int64_t i = 0; i < count; ++i) {
    if (!elements[i]) return null_argument();
    gens.push_back(elements[i]->map);
  }
  return guarded([&] { *out = new tf_subgroup{from_f_generators(gens)}; });
}

void tf_subgroup_free(tf_subgroup* h) { delete h; }

tf_status tf_subgroup_canonical(const tf_subgroup* h, int64_t* g, int64_t* hh, int64_t* m) {
  if (!h || !g || !hh || !m) return null_argument();
  *g = h->group.lattice.g();
  *hh = h->group.lattice.h();
  *m = h->group.lattice.m();
  last_error.clear();
  return TF_OK;
}

tf_status tf_subgroup_analyze(const tf_subgroup* h, tf_format fmt, char** out) {
  if (!h || !out) return null_argument();
  return guarded([&] { *out = emit(subgroup_report(h->group), fmt); });
}

tf_status tf_subgroup_iso_check(const tf_subgroup* h1, const tf_subgroup* h2, tf_format fmt, int* isomorphic,
                                char** out) {
  if (!h1 || !h2 || !out) return null_argument();
  return guarded([&] {
    Json r = iso_report(h1->group, h2->group);
    if (isomorphic) *isomorphic = r["isomorphic"].get<bool>();
    *out = emit(r, fmt);
  });
}

tf_status tf_enumerate_index(int64_t n, tf_format fmt, char** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = emit(enumerate_report(n), fmt); });
}

tf_status tf_classify_index(int64_t n, tf_format fmt, char** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = emit(classify_report(n), fmt); });
}

tf_status tf_kab_report(int64_t a, int64_t b, int has_seed, uint64_t seed, tf_format fmt, int* all_passed,
                        char** out) {
  if (!out) return null_argument();
  return guarded([&] {
    std::optional<std::uint64_t> s;
    if (has_seed) s = seed;
    GeneratorPair ys = kab_generators(a, b, s);
    KabCertificate cert = verify_kab_certificate(a, b, ys.first, ys.second);
    if (all_passed) *all_passed = cert.all_passed();
    *out = emit(kab_report(a, b, s, ys, cert), fmt);
  });
}

}  // extern "C"
