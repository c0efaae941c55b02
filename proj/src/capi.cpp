#include "polypack/polypack.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "polypack/circuit.hpp"
#include "polypack/errors.hpp"
#include "polypack/packcheck.hpp"
#include "polypack/serialize.hpp"
#include "polypack/svg.hpp"

using namespace polypack;

struct pp_instance {
  GridSatInstance inst;
};

struct pp_gadgets {
  GadgetPolygons g;
};

namespace {

thread_local std::string g_last_error;

struct NullArgument {
  std::string name;
};

pp_status null_argument(const char* what = "a required pointer argument is null") {
  g_last_error = what;
  return PP_ERR_NULL_ARGUMENT;
}

pp_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return PP_ERR_DOMAIN;
    case ErrorKind::SizeLimitExceeded: return PP_ERR_SIZE_LIMIT;
    case ErrorKind::UnsupportedKind: return PP_ERR_UNSUPPORTED_KIND;
    case ErrorKind::LayoutConflict: return PP_ERR_LAYOUT_CONFLICT;
    case ErrorKind::UnroutedConnection: return PP_ERR_UNROUTED;
    case ErrorKind::InvalidRotation: return PP_ERR_INVALID_ROTATION;
    case ErrorKind::ParityMismatch: return PP_ERR_PARITY_MISMATCH;
    case ErrorKind::ParamViolation: return PP_ERR_PARAM_VIOLATION;
    case ErrorKind::NonSimpleResult: return PP_ERR_NON_SIMPLE;
    case ErrorKind::Parse: return PP_ERR_PARSE;
  }
  return PP_ERR_INTERNAL;
}

template <typename Fn>
pp_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return PP_OK;
  } catch (const NullArgument& n) {
    return null_argument(("argument '" + n.name + "' must not be null").c_str());
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return PP_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* name) {
  if (p == nullptr) throw NullArgument{name};
}

Json parse_arg(const char* text, const char* name) {
  need(text, name);
  return parse_json(text);
}

}  // namespace

extern "C" {

const char* pp_status_name(pp_status status) {
  switch (status) {
    case PP_OK: return "ok";
    case PP_ERR_DOMAIN: return "Domain";
    case PP_ERR_SIZE_LIMIT: return "SizeLimitExceeded";
    case PP_ERR_UNSUPPORTED_KIND: return "UnsupportedKind";
    case PP_ERR_LAYOUT_CONFLICT: return "LayoutConflict";
    case PP_ERR_UNROUTED: return "UnroutedConnection";
    case PP_ERR_INVALID_ROTATION: return "InvalidRotation";
    case PP_ERR_PARITY_MISMATCH: return "ParityMismatch";
    case PP_ERR_PARAM_VIOLATION: return "ParamViolation";
    case PP_ERR_NON_SIMPLE: return "NonSimpleResult";
    case PP_ERR_PARSE: return "Parse";
    case PP_ERR_NULL_ARGUMENT: return "NullArgument";
    case PP_ERR_INTERNAL: return "Internal";
  }
  return "?";
}

const char* pp_last_error(void) { return g_last_error.c_str(); }

void pp_string_free(char* s) { std::free(s); }

pp_status pp_instance_from_json(const char* json, pp_instance** out) {
  if (out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    auto inst = std::make_unique<pp_instance>();
    inst->inst = instance_from_json(parse_arg(json, "json"));
    *out = inst.release();
  });
}

void pp_instance_free(pp_instance* inst) { delete inst; }

pp_status pp_instance_to_json(const pp_instance* inst, char** json) {
  if (inst == nullptr || json == nullptr) return null_argument();
  return guarded([&] { *json = copy_out(dump(to_json(inst->inst))); });
}

pp_status pp_instance_dimensions(const pp_instance* inst, int* width, int* height) {
  if (inst == nullptr || width == nullptr || height == nullptr) return null_argument();
  *width = inst->inst.width;
  *height = inst->inst.height;
  return PP_OK;
}

pp_status pp_instance_validate(const pp_instance* inst, int* ok, char** violations_json) {
  if (inst == nullptr || ok == nullptr) return null_argument();
  return guarded([&] {
    auto v = validate_instance(inst->inst);
    *ok = v.empty();
    if (violations_json) *violations_json = copy_out(dump(to_json(v)));
  });
}

pp_status pp_check_assignment(const pp_instance* inst, const char* assignment_json, int* ok,
                              char** violations_json) {
  if (inst == nullptr || ok == nullptr) return null_argument();
  return guarded([&] {
    Assignment a = assignment_from_json(parse_arg(assignment_json, "assignment_json"));
    auto v = check_assignment(inst->inst, a);
    *ok = v.empty();
    if (violations_json) *violations_json = copy_out(dump(to_json(v)));
  });
}

pp_status pp_solve(const pp_instance* inst, int method, int* satisfiable, char** assignment_json) {
  if (inst == nullptr || satisfiable == nullptr) return null_argument();
  return guarded([&] {
    auto problems = validate_instance(inst->inst);
    if (!problems.empty()) throw Error(ErrorKind::Domain, "invalid instance: " + problems.front().detail);
    if (method != 0 && method != 1) throw Error(ErrorKind::Domain, "method must be 0 or 1");
    auto a = method == 0 ? solve_bruteforce(inst->inst) : solve_propagated(inst->inst);
    *satisfiable = a.has_value();
    if (assignment_json) *assignment_json = a ? copy_out(dump(to_json(*a))) : nullptr;
  });
}

pp_status pp_expand_macros(const char* netlist_json, char** expanded_json) {
  if (expanded_json == nullptr) return null_argument();
  return guarded([&] {
    Netlist n = netlist_from_json(parse_arg(netlist_json, "netlist_json"));
    *expanded_json = copy_out(dump(to_json(expand_macros(n))));
  });
}

pp_status pp_lower(const char* netlist_json, const char* layout_json, int width, int height,
                   char** instance_json) {
  if (instance_json == nullptr) return null_argument();
  return guarded([&] {
    Netlist n = expand_macros(netlist_from_json(parse_arg(netlist_json, "netlist_json")));
    Json lj = parse_arg(layout_json, "layout_json");
    LayoutHint h = layout_from_json(lj);
    int w = width, ht = height;
    int max_x = 0, max_y = 0;
    for (const auto& [id, v] : h.nodes) max_x = std::max(max_x, v.x), max_y = std::max(max_y, v.y);
    for (const Route& r : h.routes)
      for (const Vertex& v : r.path) max_x = std::max(max_x, v.x), max_y = std::max(max_y, v.y);
    if (w <= 0) w = lj.contains("width") && lj["width"].is_number_integer() ? lj["width"].get<int>() : max_x + 1;
    if (ht <= 0)
      ht = lj.contains("height") && lj["height"].is_number_integer() ? lj["height"].get<int>() : max_y + 1;
    *instance_json = copy_out(dump(to_json(lower_to_gridsat(n, h, w, ht))));
  });
}

pp_status pp_default_params(int width, int height, char** params_json) {
  if (params_json == nullptr) return null_argument();
  return guarded([&] {
    if (width < 1 || height < 1) throw Error(ErrorKind::Domain, "grid dimensions must be positive");
    *params_json = copy_out(dump(to_json(GadgetParams::defaults(width, height))));
  });
}

pp_status pp_validate_params(const char* params_json, int width, int height, int* ok, char** violations_json) {
  if (ok == nullptr) return null_argument();
  return guarded([&] {
    if (width < 1 || height < 1) throw Error(ErrorKind::Domain, "grid dimensions must be positive");
    GadgetParams p = params_from_json(parse_arg(params_json, "params_json"), GadgetParams::defaults(width, height));
    auto v = validate_params(p, width, height);
    *ok = v.empty();
    if (violations_json) *violations_json = copy_out(dump(to_json(v)));
  });
}

pp_status pp_synth(const pp_instance* inst, int phase, const char* params_json, int printed_tables,
                   pp_gadgets** out) {
  if (inst == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    const GridSatInstance& i = inst->inst;
    if (i.width < 1 || i.height < 1) throw Error(ErrorKind::Domain, "grid dimensions must be positive");
    GadgetParams p = GadgetParams::defaults(i.width, i.height);
    if (params_json != nullptr) p = params_from_json(parse_json(params_json), p);
    BuildOptions opts;
    opts.table = printed_tables ? TableVariant::Printed : TableVariant::Filtered;
    auto g = std::make_unique<pp_gadgets>();
    g->g = build_phase(phase, i, p, opts);
    *out = g.release();
  });
}

void pp_gadgets_free(pp_gadgets* g) { delete g; }

pp_status pp_gadgets_to_json(const pp_gadgets* g, char** json) {
  if (g == nullptr || json == nullptr) return null_argument();
  return guarded([&] { *json = copy_out(dump(to_json(g->g))); });
}

pp_status pp_gadgets_from_json(const char* json, pp_gadgets** out) {
  if (out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    auto g = std::make_unique<pp_gadgets>();
    g->g = polygons_from_json(parse_arg(json, "json"));
    *out = g.release();
  });
}

pp_status pp_gadgets_copy_count(const pp_gadgets* g, int* copies) {
  if (g == nullptr || copies == nullptr) return null_argument();
  *copies = g->g.frame.width * g->g.frame.height;
  return PP_OK;
}

pp_status pp_canonical_certificate(const pp_instance* inst, const pp_gadgets* g, const char* assignment_json,
                                   char** certificate_json) {
  if (inst == nullptr || g == nullptr || certificate_json == nullptr) return null_argument();
  return guarded([&] {
    Assignment a = assignment_from_json(parse_arg(assignment_json, "assignment_json"));
    if (inst->inst.width != g->g.frame.width || inst->inst.height != g->g.frame.height)
      throw Error(ErrorKind::Domain, "instance and gadgets have different grid sizes");
    *certificate_json = copy_out(dump(to_json(canonical_certificate(inst->inst, a, g->g.frame))));
  });
}

pp_status pp_verify(const pp_gadgets* g, const char* certificate_json, int first_only, int* valid,
                    char** report_json) {
  if (g == nullptr || valid == nullptr) return null_argument();
  return guarded([&] {
    PackingCertificate c = certificate_from_json(parse_arg(certificate_json, "certificate_json"));
    std::size_t expected = static_cast<std::size_t>(g->g.frame.width) * g->g.frame.height;
    if (c.placements.size() != expected)
      throw Error(ErrorKind::Domain, "certificate has " + std::to_string(c.placements.size()) +
                                         " placements, the grid needs " + std::to_string(expected));
    VerifyOptions opts;
    opts.first_only = first_only != 0;
    PackingReport r = verify_packing(g->g.big, g->g.small, c, opts);
    *valid = r.valid;
    if (report_json) *report_json = copy_out(dump(to_json(r)));
  });
}

pp_status pp_render_svg(const pp_gadgets* g, const char* certificate_json, char** svg) {
  if (g == nullptr || svg == nullptr) return null_argument();
  return guarded([&] {
    PackingCertificate c;
    if (certificate_json != nullptr)
      c = certificate_from_json(parse_json(certificate_json));
    else
      c.placements.push_back(Placement{});
    *svg = copy_out(render_svg(g->g, c, shifts_of(c, g->g.frame)));
  });
}

pp_status pp_equivalence(int max_w, int max_h, int seeds, int rand_w, int rand_h, uint64_t seed_base, int jobs,
                         int* all_agree, char** summary_json) {
  if (all_agree == nullptr) return null_argument();
  return guarded([&] {
    auto instances = battery_instances(max_w, max_h, seeds, rand_w, rand_h, seed_base);
    BatteryOptions opts;
    opts.jobs = jobs;
    BatterySummary sum = equivalence_battery(instances, opts);
    *all_agree = sum.all_agree();
    if (summary_json == nullptr) return;
    std::size_t sat = 0, grids = 0, assignments = 0;
    Json failures = Json::array();
    Json by_size = Json::object();
    for (const InstanceOutcome& o : sum.outcomes) {
      sat += o.sat;
      grids += o.state_grids_checked;
      assignments += o.assignments_checked;
      std::string key = std::to_string(o.instance.width) + "x" + std::to_string(o.instance.height);
      Json& row = by_size[key];
      if (row.is_null()) row = {{"instances", 0}, {"agreements", 0}, {"sat", 0}};
      row["instances"] = row["instances"].get<int>() + 1;
      row["agreements"] = row["agreements"].get<int>() + (o.agrees() ? 1 : 0);
      row["sat"] = row["sat"].get<int>() + (o.sat ? 1 : 0);
      if (!o.agrees())
        failures.push_back({{"instance", to_json(o.instance)},
                            {"sat", o.sat},
                            {"sem", o.sem},
                            {"geo_sound", o.geo_sound},
                            {"reason", o.failure}});
    }
    Json j = {{"instances", sum.outcomes.size()},
              {"agreements", sum.agreements()},
              {"satisfiable", sat},
              {"assignments_verified", assignments},
              {"state_grids_verified", grids},
              {"by_size", by_size},
              {"failures", failures}};
    *summary_json = copy_out(dump(j));
  });
}

pp_status pp_dump_tables(int filtered, char** csv) {
  if (csv == nullptr) return null_argument();
  return guarded([&] { *csv = copy_out(dump_tables_csv(filtered ? TableVariant::Filtered : TableVariant::Printed)); });
}

}  // extern "C"
