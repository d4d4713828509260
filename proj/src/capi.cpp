// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "omcube/omcube.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "omcube/codec.hpp"
#include "omcube/errors.hpp"
#include "omcube/extensions.hpp"
#include "omcube/generators.hpp"
#include "omcube/isomorphism.hpp"
#include "omcube/realization.hpp"
#include "omcube/search.hpp"
#include "omcube/verify.hpp"

struct omcube_om {
  omcube::OrientedMatroid value;
};

struct omcube_config {
  omcube::PointConfig value;
};

namespace {

thread_local std::string g_last_error;

omcube_status set_error(omcube_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
omcube_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return OMCUBE_OK;
  } catch (const omcube::Error& e) {
    return set_error(static_cast<omcube_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(OMCUBE_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(OMCUBE_INTERNAL, e.what());
  }
}

void need(const void* p, const char* name) {
  omcube::require(p != nullptr, omcube::ErrorCode::kInvalidArgument,
                  std::string(name) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out != nullptr) *out = copy_string(s);
}

void put(char** out, const omcube::Json& j) {
  if (out != nullptr) *out = copy_string(omcube::dump(j));
}

omcube_om* wrap(omcube::OrientedMatroid om) { return new omcube_om{std::move(om)}; }
omcube_config* wrap(omcube::PointConfig pc) { return new omcube_config{std::move(pc)}; }

template <class Make>
omcube_status generate(size_t n, omcube_om** out, Make&& make) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(make(n));
  });
}

}  // namespace

extern "C" {

const char* omcube_version(void) { return "1.0.0"; }

const char* omcube_last_error(void) { return g_last_error.c_str(); }

const char* omcube_status_name(omcube_status status) {
  switch (status) {
    case OMCUBE_OK:
      return "ok";
    case OMCUBE_INVALID_ARGUMENT:
      return "invalid argument";
    case OMCUBE_PARSE:
      return "parse error";
    case OMCUBE_PRECONDITION:
      return "precondition violated";
    case OMCUBE_INVARIANT:
      return "invariant violated";
    case OMCUBE_SCALE_GUARD:
      return "scale guard exceeded";
    case OMCUBE_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void omcube_string_free(char* s) { std::free(s); }

void omcube_om_free(omcube_om* om) { delete om; }

omcube_status omcube_om_clone(const omcube_om* om, omcube_om** out) {
  return guarded([&] {
    need(om, "om");
    need(out, "out");
    *out = wrap(om->value);
  });
}

omcube_status omcube_om_from_json(const char* json, omcube_om** out, char** notes) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    auto decoded = omcube::om_from_json(omcube::parse_json(json));
    put(notes, omcube::Json(decoded.notes));
    *out = wrap(std::move(decoded.value));
  });
}

omcube_status omcube_om_to_json(const omcube_om* om, char** out) {
  return guarded([&] {
    need(om, "om");
    need(out, "out");
    put(out, omcube::write_om(om->value));
  });
}

omcube_status omcube_om_size(const omcube_om* om, size_t* out) {
  return guarded([&] {
    need(om, "om");
    need(out, "out");
    *out = om->value.size();
  });
}

omcube_status omcube_om_rank(const omcube_om* om, size_t* out) {
  return guarded([&] {
    need(om, "om");
    need(out, "out");
    *out = static_cast<size_t>(om->value.rank());
  });
}

omcube_status omcube_om_circuit_count(const omcube_om* om, size_t* out) {
  return guarded([&] {
    need(om, "om");
    need(out, "out");
    *out = om->value.circuits().size();
  });
}

omcube_status omcube_om_cocircuit_count(const omcube_om* om, size_t* out) {
  return guarded([&] {
    need(om, "om");
    need(out, "out");
    *out = om->value.cocircuits().size();
  });
}

omcube_status omcube_om_hyperplane_count(const omcube_om* om, size_t* out) {
  return guarded([&] {
    need(om, "om");
    need(out, "out");
    *out = om->value.hyperplanes().size();
  });
}

omcube_status omcube_om_equal(const omcube_om* a, const omcube_om* b, int* out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = a->value == b->value ? 1 : 0;
  });
}

omcube_status omcube_isomorphism(const omcube_om* a, const omcube_om* b, int reorient,
                                 int* found, char** out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    auto iso = omcube::find_isomorphism(a->value, b->value, reorient != 0);
    if (found != nullptr) *found = iso ? 1 : 0;
    omcube::Json j;
    j["found"] = iso.has_value();
    j["reorientation_allowed"] = reorient != 0;
    if (iso) {
      j["isomorphism"] = omcube::isomorphism_to_json(a->value.ground(), b->value.ground(), *iso);
    } else {
      j["isomorphism"] = nullptr;
    }
    put(out, j);
  });
}

omcube_status omcube_validate(const omcube_om* om, int* ok, char** out) {
  return guarded([&] {
    need(om, "om");
    auto violations = omcube::validate_circuit_axioms(om->value.ground(), om->value.circuits());
    const bool orth = om->value.families_orthogonal();
    omcube::Json list = omcube::Json::array();
    for (const auto& v : violations) {
      list.push_back(omcube::Json{{"kind", v.kind}, {"detail", v.detail}});
    }
    if (!orth) {
      list.push_back(omcube::Json{{"kind", "orthogonality"},
                                  {"detail", "a circuit is not orthogonal to a cocircuit"}});
    }
    if (ok != nullptr) *ok = list.empty() ? 1 : 0;
    omcube::Json j;
    j["valid"] = list.empty();
    j["violations"] = std::move(list);
    put(out, j);
  });
}

omcube_status omcube_gen_cross_polytope(size_t n, omcube_om** out) {
  return generate(n, out, [](size_t k) { return omcube::cross_polytope(k); });
}

omcube_status omcube_gen_real_cube(size_t n, omcube_om** out) {
  return generate(n, out, [](size_t k) { return omcube::real_cube(k); });
}

omcube_status omcube_gen_canonical_adjoint(size_t n, omcube_om** out) {
  return generate(n, out, [](size_t k) { return omcube::canonical_adjoint(k); });
}

omcube_status omcube_gen_cross_polytope_plus_zero(size_t n, omcube_om** out) {
  return generate(n, out, [](size_t k) { return omcube::cross_polytope_plus_zero(k); });
}

omcube_status omcube_check_cube(const omcube_om* om, int* ok, char** report) {
  return guarded([&] {
    need(om, "om");
    auto rep = omcube::check_oriented_cube(om->value);
    if (ok != nullptr) *ok = rep.ok() ? 1 : 0;
    put(report, omcube::cube_report_to_json(rep));
  });
}

omcube_status omcube_check_adjoint(const omcube_om* om, size_t n, int strong, int* ok,
                                   char** report) {
  return guarded([&] {
    need(om, "om");
    const auto mode = strong ? omcube::AdjointMode::kStrong : omcube::AdjointMode::kWeak;
    auto rep = omcube::check_adjoint(om->value, n, mode);
    if (ok != nullptr) *ok = rep.ok() ? 1 : 0;
    put(report, omcube::adjoint_report_to_json(rep, n, mode));
  });
}

omcube_status omcube_check_localization(const omcube_om* base, const char* localization, int* ok,
                                        char** report) {
  return guarded([&] {
    need(base, "base");
    need(localization, "localization");
    auto loc = omcube::read_localization(localization, base->value);
    auto rep = omcube::check_localization(loc.value);
    if (ok != nullptr) *ok = rep.ok() ? 1 : 0;
    auto j = omcube::localization_report_to_json(rep);
    j["notes"] = loc.notes;
    put(report, j);
  });
}

omcube_status omcube_extend(const omcube_om* base, const char* localization, const char* label,
                            omcube_om** out) {
  return guarded([&] {
    need(base, "base");
    need(localization, "localization");
    need(label, "label");
    need(out, "out");
    auto loc = omcube::read_localization(localization, base->value);
    *out = wrap(omcube::extend(loc.value, label));
  });
}

omcube_status omcube_infinity_localization(const omcube_om* cube, size_t axis, char** out) {
  return guarded([&] {
    need(cube, "cube");
    need(out, "out");
    put(out, omcube::write_localization(omcube::infinity_localization(cube->value, axis)));
  });
}

omcube_status omcube_cube_to_adjoint(const omcube_om* cube, omcube_om** out) {
  return guarded([&] {
    need(cube, "cube");
    need(out, "out");
    *out = wrap(omcube::cube_to_adjoint(cube->value));
  });
}

omcube_status omcube_adjoint_to_cube(const omcube_om* adjoint, omcube_om** out) {
  return guarded([&] {
    need(adjoint, "adjoint");
    need(out, "out");
    *out = wrap(omcube::adjoint_to_cube(adjoint->value));
  });
}

omcube_status omcube_reorient_facet(const omcube_om* cube, size_t axis, omcube_om** out) {
  return guarded([&] {
    need(cube, "cube");
    need(out, "out");
    *out = wrap(omcube::reorient_facet(cube->value, axis));
  });
}

void omcube_config_free(omcube_config* config) { delete config; }

omcube_status omcube_config_from_json(const char* json, omcube_config** out, char** notes) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    auto decoded = omcube::read_config(json);
    put(notes, omcube::Json(decoded.notes));
    *out = wrap(std::move(decoded.value));
  });
}

omcube_status omcube_config_to_json(const omcube_config* config, char** out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    put(out, omcube::write_config(config->value));
  });
}

omcube_status omcube_realize(const omcube_config* config, omcube_om** out, char** report) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    omcube::Realized r = omcube::om_from_points(config->value);
    if (report != nullptr) {
      omcube::Json j;
      std::size_t nonzero = 0;
      for (const auto& [basis, s] : r.chirotope) nonzero += s != 0;
      j["rank"] = r.om.rank();
      j["bases"] = nonzero;
      omcube::Json witnesses = omcube::Json::array();
      for (std::size_t k = 0; k < r.om.circuits().size(); ++k) {
        omcube::Json w;
        w["circuit"] = omcube::signed_set_to_json(r.om.ground(), r.om.circuits()[k]);
        omcube::Json coeffs = omcube::Json::array();
        for (const auto& z : r.witnesses[k]) coeffs.push_back(z.get_str());
        w["coefficients"] = std::move(coeffs);
        witnesses.push_back(std::move(w));
      }
      j["witnesses"] = std::move(witnesses);
      omcube::Json parallel = omcube::Json::array();
      for (const auto& [a, b] : r.parallel) parallel.push_back({a, b});
      j["parallel"] = std::move(parallel);
      put(report, j);
    }
    *out = wrap(std::move(r.om));
  });
}

omcube_status omcube_transform(const omcube_config* config, const char* matrix,
                               omcube_config** out) {
  return guarded([&] {
    need(config, "config");
    need(matrix, "matrix");
    need(out, "out");
    omcube::Matrix m = omcube::matrix_from_json(omcube::parse_json(matrix));
    *out = wrap(omcube::projective_map(config->value, m).config);
  });
}

omcube_status omcube_center(const omcube_config* config, char** out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    omcube::Json j;
    j["center"] = omcube::vec_to_json(omcube::center(config->value));
    const std::size_t n = omcube::cube_dimension(config->value);
    if (n >= 3) {
      omcube::PolarCenters p = omcube::facet_centers_polar(config->value);
      omcube::Json facets = omcube::Json::object();
      for (std::size_t i = 0; i < n; ++i) {
        facets["H" + std::to_string(i + 1) + "+"] = omcube::vec_to_json(p.plus[i]);
        facets["H" + std::to_string(i + 1) + "-"] = omcube::vec_to_json(p.minus[i]);
      }
      j["facet_centers"] = std::move(facets);
      j["polar"] = omcube::config_to_json(p.polar);
      j["polar_is_cross_polytope"] =
          omcube::find_isomorphism(p.om, omcube::cross_polytope(n)).has_value();
    }
    put(out, j);
  });
}

omcube_status omcube_meet(const omcube_config* config, size_t axis, char** out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    omcube::Vec p = omcube::edge_meeting_point(config->value, axis);
    omcube::Json j;
    j["axis"] = axis;
    j["homogeneous"] = omcube::vec_to_json(p);
    j["at_infinity"] = omcube::sign(p.back()) == 0;
    if (omcube::sign(p.back()) != 0) {
      omcube::Vec affine(p.begin(), p.end() - 1);
      for (auto& x : affine) x /= p.back();
      j["affine"] = omcube::vec_to_json(affine);
    }
    put(out, j);
  });
}

omcube_status omcube_adjoint_realization(const omcube_config* config, omcube_config** out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    *out = wrap(omcube::adjoint_realization_from_cube(config->value));
  });
}

omcube_verify_options omcube_verify_default_options(void) {
  omcube::VerifyOptions d;
  return omcube_verify_options{d.n, d.seed, d.transforms, d.search_budget, nullptr};
}

omcube_status omcube_verify(const omcube_verify_options* options, int* ok, char** report) {
  return guarded([&] {
    need(options, "options");
    omcube::VerifyOptions opts;
    opts.n = options->n;
    opts.seed = options->seed;
    opts.transforms = options->transforms;
    opts.search_budget = options->search_budget;
    if (options->only != nullptr) {
      std::stringstream ss(options->only);
      std::string id;
      while (std::getline(ss, id, ',')) {
        if (!id.empty()) opts.only.push_back(id);
      }
    }
    auto rep = omcube::verify_suite(opts);
    if (ok != nullptr) *ok = rep.ok() ? 1 : 0;
    put(report, omcube::verification_report_to_json(rep));
  });
}

omcube_status omcube_verify_claims(char** out) {
  return guarded([&] {
    need(out, "out");
    omcube::Json list = omcube::Json::array();
    for (const auto& c : omcube::registered_claims()) {
      list.push_back(omcube::Json{{"id", c.id}, {"description", c.description}, {"max_n", c.max_n}});
    }
    put(out, list);
  });
}

omcube_search_options omcube_search_default_options(void) {
  omcube::SearchOptions d;
  return omcube_search_options{d.n,        "cubes",  "exhaustive", d.budget_seconds,
                               nullptr,    d.checkpoint_interval, d.threads};
}

omcube_status omcube_search(const omcube_search_options* options, int* complete, char** report) {
  return guarded([&] {
    need(options, "options");
    omcube::SearchOptions opts;
    opts.n = options->n;
    opts.kind = omcube::parse_search_kind(options->kind ? options->kind : "cubes");
    opts.strategy =
        omcube::parse_search_strategy(options->strategy ? options->strategy : "exhaustive");
    opts.budget_seconds = options->budget_seconds;
    if (options->checkpoint_path != nullptr) opts.checkpoint_path = options->checkpoint_path;
    opts.checkpoint_interval = options->checkpoint_interval;
    opts.threads = options->threads;
    auto rep = omcube::run_search(opts);
    if (complete != nullptr) *complete = rep.complete ? 1 : 0;
    put(report, omcube::search_report_to_json(rep));
  });
}

}  // extern "C"
