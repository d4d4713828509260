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


// omcube: command-line front end of the C API.
//
// JSON goes to standard output, diagnostics to standard error. Exit codes:
// 0 success, 1 verification failure, 2 input error, 3 budget truncation.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "omcube/omcube.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitTruncated = 3;

// Thrown to unwind with a status from the C API.
struct ApiError {
  omcube_status status;
  std::string message;
};

struct InputError {
  std::string message;
};

void call(omcube_status status) {
  if (status != OMCUBE_OK) throw ApiError{status, omcube_last_error()};
}

struct StringFree {
  void operator()(char* s) const { omcube_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringFree>;

struct OmFree {
  void operator()(omcube_om* p) const { omcube_om_free(p); }
};
using Om = std::unique_ptr<omcube_om, OmFree>;

struct ConfigFree {
  void operator()(omcube_config* p) const { omcube_config_free(p); }
};
using Config = std::unique_ptr<omcube_config, ConfigFree>;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const char* text) { std::cout << text << std::flush; }

void report_notes(const std::string& path, char* notes) {
  OwnedString owned(notes);
  if (notes == nullptr) return;
  auto list = nlohmann::json::parse(notes);
  for (const auto& n : list) std::cerr << path << ": note: " << n.get<std::string>() << "\n";
}

Om load_om(const std::string& path) {
  omcube_om* om = nullptr;
  char* notes = nullptr;
  call(omcube_om_from_json(read_input(path).c_str(), &om, &notes));
  report_notes(path, notes);
  return Om(om);
}

Config load_config(const std::string& path) {
  omcube_config* pc = nullptr;
  char* notes = nullptr;
  call(omcube_config_from_json(read_input(path).c_str(), &pc, &notes));
  report_notes(path, notes);
  return Config(pc);
}

void emit_om(const omcube_om* om) {
  char* out = nullptr;
  call(omcube_om_to_json(om, &out));
  OwnedString owned(out);
  emit(out);
}

void emit_config(const omcube_config* pc) {
  char* out = nullptr;
  call(omcube_config_to_json(pc, &out));
  OwnedString owned(out);
  emit(out);
}

// Prints a report and returns 0 or 1 from the verdict.
int emit_verdict(int ok, char* report) {
  OwnedString owned(report);
  emit(report);
  return ok ? kExitOk : kExitFailure;
}

int exit_code_for(omcube_status status) {
  return status == OMCUBE_INVARIANT ? kExitFailure : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact oriented matroids of cubes, cross-polytopes and their adjoints", "omcube"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(omcube_version()));
  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a named oriented matroid");
  std::string gen_kind;
  std::size_t gen_n = 2;
  gen->add_option("kind", gen_kind, "cross-polytope | cube | adjoint | cross-polytope-plus-zero")
      ->required()
      ->check(CLI::IsMember({"cross-polytope", "cube", "adjoint", "cross-polytope-plus-zero"}));
  gen->add_option("n", gen_n, "Dimension")->required();
  gen->callback([&] {
    action = [&] {
      omcube_om* om = nullptr;
      if (gen_kind == "cross-polytope") call(omcube_gen_cross_polytope(gen_n, &om));
      if (gen_kind == "cube") call(omcube_gen_real_cube(gen_n, &om));
      if (gen_kind == "adjoint") call(omcube_gen_canonical_adjoint(gen_n, &om));
      if (gen_kind == "cross-polytope-plus-zero") call(omcube_gen_cross_polytope_plus_zero(gen_n, &om));
      Om owned(om);
      emit_om(om);
      return kExitOk;
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Check a property of an oriented matroid");
  check->require_subcommand(1);
  std::string check_file, check_loc;
  std::size_t check_n = 0;
  bool check_strong = false;
  auto* check_cube = check->add_subcommand("cube", "Signed rectangles are circuits, facets hyperplanes");
  check_cube->add_option("file", check_file, "Oriented matroid JSON ('-' for stdin)")->required();
  check_cube->callback([&] {
    action = [&] {
      Om om = load_om(check_file);
      int ok = 0;
      char* report = nullptr;
      call(omcube_check_cube(om.get(), &ok, &report));
      return emit_verdict(ok, report);
    };
  });
  auto* check_adj = check->add_subcommand("adjoint", "Adjoint of the cross-polytope O_n");
  check_adj->add_option("file", check_file, "Oriented matroid JSON ('-' for stdin)")->required();
  check_adj->add_option("--n", check_n, "n of O_n")->required();
  check_adj->add_flag("--strong", check_strong, "Also check the flat embedding");
  check_adj->callback([&] {
    action = [&] {
      Om om = load_om(check_file);
      int ok = 0;
      char* report = nullptr;
      call(omcube_check_adjoint(om.get(), check_n, check_strong ? 1 : 0, &ok, &report));
      return emit_verdict(ok, report);
    };
  });
  auto* check_local = check->add_subcommand("localization", "Sign assignment on half the cocircuits");
  check_local->add_option("base", check_file, "Base oriented matroid JSON")->required();
  check_local->add_option("localization", check_loc, "Localization JSON")->required();
  check_local->callback([&] {
    action = [&] {
      Om om = load_om(check_file);
      int ok = 0;
      char* report = nullptr;
      call(omcube_check_localization(om.get(), read_input(check_loc).c_str(), &ok, &report));
      return emit_verdict(ok, report);
    };
  });

  // validate
  auto* validate = app.add_subcommand("validate", "Circuit axioms and orthogonality");
  std::string validate_file;
  validate->add_option("file", validate_file, "Oriented matroid JSON")->required();
  validate->callback([&] {
    action = [&] {
      Om om = load_om(validate_file);
      int ok = 0;
      char* report = nullptr;
      call(omcube_validate(om.get(), &ok, &report));
      return emit_verdict(ok, report);
    };
  });

  // extend
  auto* ext = app.add_subcommand("extend", "Single-element extension by a localization");
  std::string ext_base, ext_loc, ext_label = "p";
  ext->add_option("base", ext_base, "Base oriented matroid JSON")->required();
  ext->add_option("localization", ext_loc, "Localization JSON")->required();
  ext->add_option("--label", ext_label, "Label of the new element");
  ext->callback([&] {
    action = [&] {
      Om base = load_om(ext_base);
      omcube_om* out = nullptr;
      call(omcube_extend(base.get(), read_input(ext_loc).c_str(), ext_label.c_str(), &out));
      Om owned(out);
      emit_om(out);
      return kExitOk;
    };
  });

  // infinity
  auto* inf = app.add_subcommand("infinity", "Localization of the point at infinity of an axis");
  std::string inf_file;
  std::size_t inf_axis = 1;
  inf->add_option("file", inf_file, "Oriented cube JSON")->required();
  inf->add_option("--dir", inf_axis, "Axis (1-based)")->required();
  inf->callback([&] {
    action = [&] {
      Om om = load_om(inf_file);
      char* out = nullptr;
      call(omcube_infinity_localization(om.get(), inf_axis, &out));
      OwnedString owned(out);
      emit(out);
      return kExitOk;
    };
  });

  // map
  auto* map = app.add_subcommand("map", "Cube <-> adjoint correspondence");
  std::string map_dir, map_file;
  map->add_option("direction", map_dir, "cube-to-adjoint | adjoint-to-cube")
      ->required()
      ->check(CLI::IsMember({"cube-to-adjoint", "adjoint-to-cube"}));
  map->add_option("file", map_file, "Oriented matroid JSON")->required();
  map->callback([&] {
    action = [&] {
      Om om = load_om(map_file);
      omcube_om* out = nullptr;
      if (map_dir == "cube-to-adjoint") {
        call(omcube_cube_to_adjoint(om.get(), &out));
      } else {
        call(omcube_adjoint_to_cube(om.get(), &out));
      }
      Om owned(out);
      emit_om(out);
      return kExitOk;
    };
  });

  // reorient-facet
  auto* reo = app.add_subcommand("reorient-facet", "Reverse the signs on the facet H_i-");
  std::string reo_file;
  std::size_t reo_axis = 1;
  reo->add_option("file", reo_file, "Oriented cube JSON")->required();
  reo->add_option("--dir", reo_axis, "Axis (1-based)")->required();
  reo->callback([&] {
    action = [&] {
      Om om = load_om(reo_file);
      omcube_om* out = nullptr;
      call(omcube_reorient_facet(om.get(), reo_axis, &out));
      Om owned(out);
      emit_om(out);
      return kExitOk;
    };
  });

  // iso
  auto* iso = app.add_subcommand("iso", "Isomorphism between two oriented matroids");
  std::string iso_a, iso_b;
  bool iso_reorient = false;
  iso->add_option("first", iso_a, "Oriented matroid JSON")->required();
  iso->add_option("second", iso_b, "Oriented matroid JSON")->required();
  iso->add_flag("--reorient", iso_reorient, "Allow reorientation");
  iso->callback([&] {
    action = [&] {
      Om a = load_om(iso_a);
      Om b = load_om(iso_b);
      int found = 0;
      char* out = nullptr;
      call(omcube_isomorphism(a.get(), b.get(), iso_reorient ? 1 : 0, &found, &out));
      return emit_verdict(found, out);
    };
  });

  // realize
  auto* realize = app.add_subcommand("realize", "Oriented matroid of a point configuration");
  std::string realize_file;
  bool realize_report = false;
  realize->add_option("file", realize_file, "Point configuration JSON")->required();
  realize->add_flag("--witnesses", realize_report,
                    "Print dependence witnesses instead of the oriented matroid");
  realize->callback([&] {
    action = [&] {
      Config pc = load_config(realize_file);
      omcube_om* om = nullptr;
      char* report = nullptr;
      call(omcube_realize(pc.get(), &om, realize_report ? &report : nullptr));
      Om owned(om);
      if (realize_report) {
        OwnedString r(report);
        emit(report);
      } else {
        emit_om(om);
      }
      return kExitOk;
    };
  });

  // transform
  auto* transform = app.add_subcommand("transform", "Apply an admissible projective map");
  std::string tr_file, tr_matrix;
  transform->add_option("file", tr_file, "Point configuration JSON")->required();
  transform->add_option("--matrix", tr_matrix, "Matrix JSON ((d+1) x (d+1))")->required();
  transform->callback([&] {
    action = [&] {
      Config pc = load_config(tr_file);
      omcube_config* out = nullptr;
      call(omcube_transform(pc.get(), read_input(tr_matrix).c_str(), &out));
      Config owned(out);
      emit_config(out);
      return kExitOk;
    };
  });

  // center
  auto* center = app.add_subcommand("center", "Center of a realized cube (and polar for n >= 3)");
  std::string center_file;
  center->add_option("file", center_file, "Point configuration JSON")->required();
  center->callback([&] {
    action = [&] {
      Config pc = load_config(center_file);
      char* out = nullptr;
      call(omcube_center(pc.get(), &out));
      OwnedString owned(out);
      emit(out);
      return kExitOk;
    };
  });

  // meet
  auto* meet = app.add_subcommand("meet", "Common point of the edges of one direction");
  std::string meet_file;
  std::size_t meet_axis = 1;
  meet->add_option("file", meet_file, "Point configuration JSON")->required();
  meet->add_option("--dir", meet_axis, "Axis (1-based)")->required();
  meet->callback([&] {
    action = [&] {
      Config pc = load_config(meet_file);
      char* out = nullptr;
      call(omcube_meet(pc.get(), meet_axis, &out));
      OwnedString owned(out);
      emit(out);
      return kExitOk;
    };
  });

  // lift
  auto* lift = app.add_subcommand("lift", "Extend a realized cube by its edge-meeting points");
  std::string lift_file;
  lift->add_option("file", lift_file, "Point configuration JSON")->required();
  lift->callback([&] {
    action = [&] {
      Config pc = load_config(lift_file);
      omcube_config* out = nullptr;
      call(omcube_adjoint_realization(pc.get(), &out));
      Config owned(out);
      emit_config(out);
      return kExitOk;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  omcube_verify_options vopts = omcube_verify_default_options();
  std::string verify_only;
  bool verify_list = false;
  std::size_t verify_n = 2;
  verify->add_option("--n", verify_n, "Size (2..5)");
  verify->add_option("--seed", vopts.seed, "Seed of the random experiments");
  verify->add_option("--transforms", vopts.transforms, "Random projective transforms");
  verify->add_option("--budget", vopts.search_budget, "Seconds per search");
  verify->add_option("--only", verify_only, "Comma-separated claim ids");
  verify->add_flag("--list", verify_list, "List the registered claims");
  verify->callback([&] {
    action = [&] {
      if (verify_list) {
        char* out = nullptr;
        call(omcube_verify_claims(&out));
        OwnedString owned(out);
        emit(out);
        return kExitOk;
      }
      vopts.n = verify_n;
      vopts.only = verify_only.empty() ? nullptr : verify_only.c_str();
      int ok = 0;
      char* report = nullptr;
      call(omcube_verify(&vopts, &ok, &report));
      OwnedString owned(report);
      auto j = nlohmann::ordered_json::parse(report);
      for (const auto& c : j["claims"]) {
        std::fprintf(stderr, "%-4s %-36s %8.3fs  %s\n", c["status"].get<std::string>().c_str(),
                     c["id"].get<std::string>().c_str(), c["seconds"].get<double>(),
                     c["witness"].get<std::string>().c_str());
      }
      emit(report);
      return ok ? kExitOk : kExitFailure;
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Enumerate oriented cubes, adjoints or orientations");
  omcube_search_options sopts = omcube_search_default_options();
  std::string search_kind, search_strategy = "exhaustive", search_checkpoint;
  search->add_option("kind", search_kind, "cubes | adjoints | orientations")
      ->required()
      ->check(CLI::IsMember({"cubes", "adjoints", "orientations"}));
  search->add_option("--n", sopts.n, "Dimension")->required();
  search->add_option("--strategy", search_strategy, "exhaustive | pruned")
      ->check(CLI::IsMember({"exhaustive", "pruned"}));
  search->add_option("--budget", sopts.budget_seconds, "Wall-clock budget in seconds (0: none)");
  search->add_option("--checkpoint", search_checkpoint, "Checkpoint file (resumed if present)");
  search->add_option("--checkpoint-interval", sopts.checkpoint_interval, "Seconds between checkpoints");
  search->add_option("--threads", sopts.threads, "Worker threads (0: OMCUBE_THREADS or all cores)");
  search->callback([&] {
    action = [&] {
      sopts.kind = search_kind.c_str();
      sopts.strategy = search_strategy.c_str();
      sopts.checkpoint_path = search_checkpoint.empty() ? nullptr : search_checkpoint.c_str();
      int complete = 0;
      char* report = nullptr;
      call(omcube_search(&sopts, &complete, &report));
      OwnedString owned(report);
      auto j = nlohmann::ordered_json::parse(report);
      std::fprintf(stderr, "%s n=%zu %s: %zu classes, %s, %.3fs\n", search_kind.c_str(), sopts.n,
                   search_strategy.c_str(), j["isomorphism_classes"].get<std::size_t>(),
                   j["completeness"].get<std::string>().c_str(), j["wall_time"].get<double>());
      emit(report);
      return complete ? kExitOk : kExitTruncated;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  try {
    return action ? action() : kExitInput;
  } catch (const ApiError& e) {
    std::cerr << "omcube: " << omcube_status_name(e.status) << ": " << e.message << "\n";
    return exit_code_for(e.status);
  } catch (const InputError& e) {
    std::cerr << "omcube: " << e.message << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "omcube: malformed report: " << e.what() << "\n";
    return kExitFailure;
  }
}
