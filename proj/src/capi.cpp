// C interface: opaque handles over the core types, exceptions mapped to
// status codes, strings duplicated onto the C heap.

#include "hgc.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <utility>

#include "axioms.hpp"
#include "category.hpp"
#include "error.hpp"
#include "examples.hpp"
#include "gspace.hpp"
#include "hypergroupoid.hpp"
#include "io.hpp"
#include "representations.hpp"

struct hgc_groupoid {
  hgc::GroupoidPtr ptr;
};

struct hgc_space {
  hgc::MeasuredPtr ptr;
};

struct hgc_arrow {
  hgc::io::ArrowBundle bundle;
};

namespace {

thread_local std::string g_last_error = "no error";

hgc_status fail(hgc_status code, const char* message) {
  g_last_error = message;
  return code;
}

// Runs the body and maps exceptions onto status codes.
template <typename F>
hgc_status guarded(F&& body) {
  try {
    return body();
  } catch (const hgc::ParseError& e) {
    return fail(HGC_ERROR_PARSE, e.what());
  } catch (const hgc::ValidationError& e) {
    return fail(HGC_ERROR_INVALID, e.what());
  } catch (const hgc::ArgumentError& e) {
    return fail(HGC_ERROR_ARGUMENT, e.what());
  } catch (const hgc::IoError& e) {
    return fail(HGC_ERROR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(HGC_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(HGC_ERROR_INTERNAL, "unknown error");
  }
}

hgc_status require(bool ok, const char* message) {
  return ok ? HGC_OK : fail(HGC_ERROR_ARGUMENT, message);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hgc::io::Json parse_text(const char* text, const char* what) {
  try {
    return hgc::io::Json::parse(text);
  } catch (const hgc::io::Json::exception& e) {
    throw hgc::ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

extern "C" {

const char* hgc_last_error(void) { return g_last_error.c_str(); }

void hgc_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

hgc_status hgc_groupoid_parse(const char* json_text, hgc_groupoid** out) {
  if (require(json_text && out, "hgc_groupoid_parse: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const auto data = hgc::io::groupoid_from_json(parse_text(json_text, "groupoid"));
    *out = new hgc_groupoid{hgc::FiniteGroupoid::make(data)};
    return HGC_OK;
  });
}

hgc_status hgc_groupoid_check(const char* json_text, char** out_report_json) {
  if (require(json_text && out_report_json, "hgc_groupoid_check: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const auto data = hgc::io::groupoid_from_json(parse_text(json_text, "groupoid"));
    const auto report = hgc::FiniteGroupoid::validate(data);
    *out_report_json = dup_string(hgc::io::canonical_dump(hgc::io::report_to_json(report)));
    return HGC_OK;
  });
}

hgc_status hgc_groupoid_to_json(const hgc_groupoid* g, char** out_json) {
  if (require(g && out_json, "hgc_groupoid_to_json: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    *out_json = dup_string(hgc::io::canonical_dump(hgc::io::groupoid_to_json(g->ptr->data())));
    return HGC_OK;
  });
}

void hgc_groupoid_free(hgc_groupoid* g) { delete g; }

/* ------------------------------------------------------------------ */

hgc_status hgc_space_parse(const hgc_groupoid* g, const char* json_text, hgc_space** out) {
  if (require(g && json_text && out, "hgc_space_parse: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const auto data = hgc::io::space_from_json(parse_text(json_text, "space"));
    auto space = hgc::FiniteGSpace::make(g->ptr, data);
    *out = new hgc_space{hgc::MeasuredGSpace::make(std::move(space), data.weights)};
    return HGC_OK;
  });
}

hgc_status hgc_space_check(const hgc_groupoid* g, const char* json_text,
                           char** out_report_json) {
  if (require(g && json_text && out_report_json, "hgc_space_check: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const auto data = hgc::io::space_from_json(parse_text(json_text, "space"));
    auto report = hgc::FiniteGSpace::validate(*g->ptr, data);
    if (report.ok()) {
      // Weight axioms only make sense over a valid action.
      auto space = hgc::FiniteGSpace::make(g->ptr, data);
      report = hgc::MeasuredGSpace::validate(*space, data.weights);
    }
    *out_report_json = dup_string(hgc::io::canonical_dump(hgc::io::report_to_json(report)));
    return HGC_OK;
  });
}

hgc_status hgc_space_to_json(const hgc_space* x, char** out_json) {
  if (require(x && out_json, "hgc_space_to_json: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    *out_json = dup_string(hgc::io::canonical_dump(hgc::io::space_to_json(x->ptr->data())));
    return HGC_OK;
  });
}

void hgc_space_free(hgc_space* x) { delete x; }

/* ------------------------------------------------------------------ */

hgc_status hgc_orbits(const hgc_space* left, const hgc_space* right, char** out_json) {
  if (require(left && right && out_json, "hgc_orbits: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const auto os = hgc::OrbitSpace::make(left->ptr, right->ptr);
    *out_json = dup_string(hgc::io::canonical_dump(hgc::io::orbits_to_json(*os)));
    return HGC_OK;
  });
}

hgc_status hgc_hyper(const hgc_space* x, char** out_json) {
  if (require(x && out_json, "hgc_hyper: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const auto table = hgc::build_hypergroupoid(x->ptr);
    *out_json = dup_string(hgc::io::canonical_dump(hgc::io::table_to_json(table)));
    return HGC_OK;
  });
}

/* ------------------------------------------------------------------ */

hgc_status hgc_arrow_parse(const char* json_text, const char* base_dir, hgc_arrow** out) {
  if (require(json_text && out, "hgc_arrow_parse: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const auto j = parse_text(json_text, "function");
    *out = new hgc_arrow{hgc::io::arrow_from_json(j, base_dir ? base_dir : ".")};
    return HGC_OK;
  });
}

hgc_status hgc_arrow_to_json(const hgc_arrow* f, char** out_json) {
  if (require(f && out_json, "hgc_arrow_to_json: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    *out_json = dup_string(hgc::io::canonical_dump(hgc::io::arrow_to_json(f->bundle.arrow)));
    return HGC_OK;
  });
}

void hgc_arrow_free(hgc_arrow* f) { delete f; }

hgc_status hgc_convolve(const hgc_arrow* f, const hgc_arrow* g, hgc_arrow** out) {
  if (require(f && g && out, "hgc_convolve: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    auto result = hgc::convolve(f->bundle.arrow, g->bundle.arrow);
    auto dst = result.orbits->left_ptr();
    auto src = result.orbits->right_ptr();
    *out = new hgc_arrow{{f->bundle.groupoid, std::move(dst), std::move(src),
                          std::move(result)}};
    return HGC_OK;
  });
}

hgc_status hgc_involute(const hgc_arrow* f, hgc_arrow** out) {
  if (require(f && out, "hgc_involute: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    auto result = hgc::involute(f->bundle.arrow);
    *out = new hgc_arrow{{f->bundle.groupoid, f->bundle.src, f->bundle.dst,
                          std::move(result)}};
    return HGC_OK;
  });
}

hgc_status hgc_norm(const hgc_arrow* f, const char* kind, double* out) {
  if (require(f && kind && out, "hgc_norm: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const std::string k = kind;
    if (k == "i") {
      *out = hgc::i_norm(f->bundle.arrow);
    } else if (k == "reduced") {
      *out = hgc::reduced_norm(f->bundle.arrow);
    } else {
      throw hgc::ArgumentError("unknown norm kind \"" + k + "\" (expected \"i\" or \"reduced\")");
    }
    return HGC_OK;
  });
}

hgc_status hgc_unit(const hgc_space* x, int* out_found, char** out_arrow_json) {
  if (require(x && out_found && out_arrow_json, "hgc_unit: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const std::optional<hgc::Arrow> unit = hgc::find_unit(x->ptr);
    *out_found = unit.has_value() ? 1 : 0;
    *out_arrow_json =
        unit ? dup_string(hgc::io::canonical_dump(hgc::io::arrow_to_json(*unit))) : nullptr;
    return HGC_OK;
  });
}

hgc_status hgc_rep_matrix(const hgc_arrow* f, char** out_json) {
  if (require(f && out_json, "hgc_rep_matrix: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const auto m = hgc::rep_matrix(f->bundle.arrow);
    *out_json = dup_string(hgc::io::canonical_dump(hgc::io::matrix_to_json(m)));
    return HGC_OK;
  });
}

/* ------------------------------------------------------------------ */

hgc_status hgc_axioms(uint64_t seed, int trials, int* out_ok, char** out_transcript) {
  if (require(out_ok && out_transcript, "hgc_axioms: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    if (trials < 0) throw hgc::ArgumentError("trials must be nonnegative");
    const auto run = hgc::run_axioms(seed, trials);
    *out_ok = run.ok() ? 1 : 0;
    *out_transcript = dup_string(run.transcript());
    return HGC_OK;
  });
}

hgc_status hgc_example_names(char** out_names) {
  if (require(out_names != nullptr, "hgc_example_names: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    std::string joined;
    for (const auto& name : hgc::shipped_example_names()) {
      joined += name;
      joined += '\n';
    }
    *out_names = dup_string(joined);
    return HGC_OK;
  });
}

hgc_status hgc_example(const char* name, char** out_groupoid_json, char** out_space_json,
                       char** out_table_json) {
  if (require(name != nullptr, "hgc_example: NULL argument") != HGC_OK)
    return HGC_ERROR_ARGUMENT;
  return guarded([&] {
    const auto ex = hgc::shipped_example(name);
    if (out_groupoid_json) {
      *out_groupoid_json =
          dup_string(hgc::io::canonical_dump(hgc::io::groupoid_to_json(ex.groupoid->data())));
    }
    if (out_space_json) {
      *out_space_json =
          dup_string(hgc::io::canonical_dump(hgc::io::space_to_json(ex.space->data())));
    }
    if (out_table_json) {
      const auto table = hgc::build_hypergroupoid(ex.space);
      *out_table_json = dup_string(hgc::io::canonical_dump(hgc::io::table_to_json(table)));
    }
    return HGC_OK;
  });
}

}  // extern "C"
