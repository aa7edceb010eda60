#include "gausscong/gausscong.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "gausscong/error.hpp"
#include "gausscong/expr.hpp"
#include "gausscong/report.hpp"

struct gc_ratfun {
  gausscong::RationalFunction value;
};

struct gc_series {
  gausscong::TruncatedLaurentSeries value;
};

namespace {

using namespace gausscong;

thread_local std::string last_error;
thread_local std::int64_t last_offset = -1;

gc_status fail(gc_status s, const std::string& message, std::int64_t offset = -1) {
  last_error = message;
  last_offset = offset;
  return s;
}

/// Runs body, mapping exceptions to status codes.
template <typename Body>
gc_status guarded(Body&& body) {
  last_error.clear();
  last_offset = -1;
  try {
    body();
    return GC_OK;
  } catch (const ParseError& e) {
    return fail(GC_ERR_PARSE, e.what(), e.offset());
  } catch (const Error& e) {
    return fail(static_cast<gc_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GC_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const nlohmann::json& j) {
  require(out, "output");
  *out = copy_string(j.dump());
}

ExponentVector vector_of(const int64_t* k, size_t len) {
  if (len > kMaxVars) throw Error(ErrorCode::kInvalidArgument, "too many exponents");
  if (len) require(k, "exponent vector");
  return ExponentVector(std::span<const std::int64_t>(k, len));
}

std::vector<RationalFunction> list_of(const gc_ratfun* const* fs, size_t n) {
  if (n) require(fs, "function list");
  std::vector<RationalFunction> out;
  for (size_t i = 0; i < n; ++i) {
    require(fs[i], "function");
    out.push_back(fs[i]->value);
  }
  return out;
}

gc_ratfun* wrap(RationalFunction f) { return new gc_ratfun{std::move(f)}; }

}  // namespace

extern "C" {

const char* gc_version(void) { return "1.0.0"; }

const char* gc_status_name(gc_status status) {
  if (status == GC_OK) return "ok";
  if (status == GC_ERR_INTERNAL) return "internal";
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
}

const char* gc_last_error(void) { return last_error.c_str(); }

int64_t gc_last_error_offset(void) { return last_offset; }

void gc_string_free(char* s) { std::free(s); }

gc_status gc_expression_nvars(const char* text, size_t* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = expression_nvars(parse_expression(text));
  });
}

gc_status gc_ratfun_parse(const char* num, const char* den, size_t nvars, gc_ratfun** out) {
  return guarded([&] {
    require(num, "numerator");
    require(out, "output");
    const Expr p = parse_expression(num);
    const Expr q = parse_expression(den ? den : "1");
    size_t n = nvars;
    if (n == 0) n = std::max<size_t>({1, expression_nvars(p), expression_nvars(q)});
    if (n > kMaxVars) throw Error(ErrorCode::kInvalidArgument, "at most 8 variables");
    if (expression_nvars(p) > n || expression_nvars(q) > n) {
      throw Error(ErrorCode::kVariableMismatch, "expression uses more than " + std::to_string(n) + " variables");
    }
    const RationalFunction denominator = evaluate(q, n);
    if (denominator.is_zero()) throw ParseError("division by the zero polynomial", 0);
    *out = wrap(evaluate(p, n) / denominator);
  });
}

void gc_ratfun_free(gc_ratfun* f) { delete f; }

size_t gc_ratfun_nvars(const gc_ratfun* f) { return f ? f->value.nvars() : 0; }

gc_status gc_ratfun_to_string(const gc_ratfun* f, char** out) {
  return guarded([&] {
    require(f, "function");
    require(out, "output");
    *out = copy_string(f->value.to_string());
  });
}

gc_status gc_ratfun_to_json(const gc_ratfun* f, char** out) {
  return guarded([&] {
    require(f, "function");
    emit(out, ratfun_json(f->value));
  });
}

gc_status gc_expand(const gc_ratfun* f, const int64_t* vertex, size_t vertex_len, int64_t bound, gc_series** out) {
  return guarded([&] {
    require(f, "function");
    require(out, "output");
    const ExponentVector v = vertex ? vector_of(vertex, vertex_len) : canonical_vertex(f->value.denominator());
    *out = new gc_series{expand_at_vertex(f->value, v, bound)};
  });
}

void gc_series_free(gc_series* s) { delete s; }

gc_status gc_series_dump(const gc_series* s, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "output");
    *out = copy_string(s->value.dump());
  });
}

gc_status gc_series_to_json(const gc_series* s, char** out) {
  return guarded([&] {
    require(s, "series");
    emit(out, series_json(s->value));
  });
}

gc_status gc_series_coefficient(const gc_series* s, const int64_t* k, size_t len, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "output");
    const ExponentVector e = vector_of(k, len);
    if (e.size() != s->value.nvars()) throw Error(ErrorCode::kVariableMismatch, "exponent has the wrong length");
    *out = copy_string(to_fraction_string(s->value.coefficient(e)));
  });
}

gc_status gc_series_apply_up(const gc_series* s, uint64_t p, gc_series** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "output");
    *out = new gc_series{apply_up(s->value, p)};
  });
}

void gc_check_options_init(gc_check_options* opts) {
  if (!opts) return;
  *opts = gc_check_options{};
  opts->r_max = 2;
  opts->strength = 1;
  opts->m_budget = -1;
  opts->jobs = 1;
  opts->bound = 60;
}

gc_status gc_check_gauss(const gc_ratfun* f, const gc_check_options* opts, char** json_out) {
  return guarded([&] {
    require(f, "function");
    require(opts, "options");
    GaussCheckConfig cfg;
    if (opts->primes) cfg.primes.assign(opts->primes, opts->primes + opts->nprimes);
    cfg.r_max = opts->r_max;
    cfg.strength = opts->strength;
    if (opts->m_budget >= 0) cfg.m_budget = opts->m_budget;
    cfg.jobs = opts->jobs;
    const ExponentVector v =
        opts->vertex ? vector_of(opts->vertex, opts->vertex_len) : canonical_vertex(f->value.denominator());
    emit(json_out, gauss_json(check_gauss(f->value, v, cfg, opts->bound)));
  });
}

gc_status gc_minton(const gc_ratfun* f, char** json_out) {
  return guarded([&] {
    require(f, "function");
    emit(json_out, minton_json(minton_decide(f->value)));
  });
}

gc_status gc_classify_linear(const gc_ratfun* f, char** json_out) {
  return guarded([&] {
    require(f, "function");
    emit(json_out, linear_json(classify_linear(f->value.numerator(), f->value.denominator())));
  });
}

gc_status gc_classify_mostly_linear(const gc_ratfun* f, size_t z, char** json_out) {
  return guarded([&] {
    require(f, "function");
    emit(json_out, mostly_linear_json(classify_mostly_linear(f->value.numerator(), f->value.denominator(), z)));
  });
}

gc_status gc_classify_degree2(const gc_ratfun* f, char** json_out) {
  return guarded([&] {
    require(f, "function");
    emit(json_out, degree2_json(classify_degree2(f->value.numerator(), f->value.denominator())));
  });
}

gc_status gc_construct_log_det(const gc_ratfun* const* fs, size_t m, size_t nvars, gc_ratfun** out) {
  return guarded([&] {
    require(out, "output");
    *out = wrap(log_det_construct(list_of(fs, m), nvars));
  });
}

gc_status gc_construct_qdet(const gc_ratfun* q, const size_t* linear_vars, size_t nlinear, const int64_t* k,
                            const gc_ratfun* const* fs, size_t m, const size_t* log_vars, size_t nlog,
                            gc_ratfun** out) {
  return guarded([&] {
    require(q, "denominator");
    require(out, "output");
    if (nlinear) require(linear_vars, "linear variables");
    if (nlog) require(log_vars, "log variables");
    const std::vector<RationalFunction> list = list_of(fs, m);
    *out = wrap(qdet_construct(as_laurent(q->value), std::span<const size_t>(linear_vars, nlinear),
                               vector_of(k, nlinear), list, std::span<const size_t>(log_vars, nlog)));
  });
}

gc_status gc_substitute_univariate(const gc_ratfun* f, const gc_ratfun* const* gs, size_t n, gc_ratfun** out) {
  return guarded([&] {
    require(f, "function");
    require(out, "output");
    *out = wrap(substitute_univariate(f->value, list_of(gs, n)));
  });
}

gc_status gc_substitute_multivariate(const gc_ratfun* f, const gc_ratfun* const* gs, size_t n, gc_ratfun** out) {
  return guarded([&] {
    require(f, "function");
    require(out, "output");
    *out = wrap(substitute_multivariate(f->value, list_of(gs, n)));
  });
}

gc_status gc_toroidal_substitute(const gc_ratfun* f, const char* const* entries, size_t rows, size_t cols,
                                 gc_ratfun** out) {
  return guarded([&] {
    require(f, "function");
    require(out, "output");
    if (rows != 0 && cols != 0) require(entries, "matrix entries");
    ToroidalMap map;
    map.a.assign(rows, std::vector<Rational>(cols));
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < cols; ++c) {
        require(entries[r * cols + c], "matrix entry");
        map.a[r][c] = parse_rational(entries[r * cols + c]);
      }
    }
    *out = wrap(toroidal_substitute(f->value, map));
  });
}

gc_status gc_restrict_face(const gc_ratfun* f, const int64_t* form, size_t len, int64_t offset, gc_ratfun** out) {
  return guarded([&] {
    require(f, "function");
    require(out, "output");
    if (len) require(form, "form");
    Face face;
    face.form.assign(form, form + len);
    face.offset = offset;
    *out = wrap(restrict_face(f->value, face));
  });
}

gc_status gc_faces_json(const gc_ratfun* f, char** json_out) {
  return guarded([&] {
    require(f, "function");
    const NewtonPolytope np = newton_polytope(f->value.denominator());
    emit(json_out, faces_json(np, faces(np)));
  });
}

}  // extern "C"
