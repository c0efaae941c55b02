// polypack command-line tool. Everything goes through the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "polypack/polypack.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kInvalid = 1, kInput = 2, kParams = 3, kSize = 4 };

struct Failure {
  int code;
};

int exit_for(pp_status s) {
  switch (s) {
    case PP_OK: return kOk;
    case PP_ERR_PARAM_VIOLATION: return kParams;
    case PP_ERR_SIZE_LIMIT: return kSize;
    case PP_ERR_INTERNAL: return kInvalid;
    default: return kInput;
  }
}

void diagnose(const std::string& kind, const std::string& message) {
  Json j = {{"error", kind}, {"message", message}};
  std::cerr << j.dump() << "\n";
}

// Throws Failure after reporting when `s` is not PP_OK.
void check(pp_status s) {
  if (s == PP_OK) return;
  diagnose(pp_status_name(s), pp_last_error());
  throw Failure{exit_for(s)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    diagnose("Io", "cannot read " + path);
    throw Failure{kInput};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    diagnose("Io", "cannot write " + path);
    throw Failure{kInput};
  }
  out << text;
}

// Owns a char* returned by the library.
struct Text {
  char* p = nullptr;
  ~Text() { pp_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
};

struct Instance {
  pp_instance* p = nullptr;
  ~Instance() { pp_instance_free(p); }
};

struct Gadgets {
  pp_gadgets* p = nullptr;
  ~Gadgets() { pp_gadgets_free(p); }
};

Instance load_instance(const std::string& path) {
  Instance inst;
  check(pp_instance_from_json(read_file(path).c_str(), &inst.p));
  return inst;
}

std::string all_true_assignment(const pp_instance* inst) {
  int w = 0, h = 0;
  check(pp_instance_dimensions(inst, &w, &h));
  Json rows = Json::array();
  for (int y = 0; y < h; ++y) rows.push_back(Json(std::vector<bool>(static_cast<std::size_t>(w), true)));
  return Json{{"truth", rows}}.dump();
}

// --- subcommands -----------------------------------------------------------

struct LowerArgs {
  std::string netlist, layout, out;
  int width = 0, height = 0;
  bool expand_only = false;
};

int run_lower(const LowerArgs& a) {
  std::string netlist = read_file(a.netlist);
  Text result;
  if (a.expand_only) {
    check(pp_expand_macros(netlist.c_str(), result.out()));
  } else {
    std::string layout = read_file(a.layout);
    check(pp_lower(netlist.c_str(), layout.c_str(), a.width, a.height, result.out()));
  }
  write_out(a.out, result.str());
  return kOk;
}

struct SolveArgs {
  std::string instance, out, method = "brute";
};

int run_solve(const SolveArgs& a) {
  Instance inst = load_instance(a.instance);
  Text violations;
  int ok = 0;
  check(pp_instance_validate(inst.p, &ok, violations.out()));
  if (!ok) {
    diagnose("Domain", violations.str());
    return kInput;
  }
  int sat = 0;
  Text assignment;
  check(pp_solve(inst.p, a.method == "brute" ? 0 : 1, &sat, assignment.out()));
  if (!sat) {
    write_out(a.out, Json{{"satisfiable", false}}.dump(2) + "\n");
    return kInvalid;
  }
  write_out(a.out, assignment.str());
  return kOk;
}

struct SynthArgs {
  std::string instance, params, out, svg, certificate, assignment;
  int phase = 5;
  bool printed = false;
};

int run_synth(const SynthArgs& a) {
  Instance inst = load_instance(a.instance);
  std::string params = a.params.empty() ? std::string() : read_file(a.params);
  Gadgets g;
  pp_status s = pp_synth(inst.p, a.phase, a.params.empty() ? nullptr : params.c_str(), a.printed, &g.p);
  if (s == PP_ERR_PARAM_VIOLATION) {
    int w = 0, h = 0, ok = 0;
    Text violations;
    check(pp_instance_dimensions(inst.p, &w, &h));
    if (pp_validate_params(params.c_str(), w, h, &ok, violations.out()) == PP_OK && !ok) {
      Json j = {{"error", "ParamViolation"}, {"violations", Json::parse(violations.str())}};
      std::cerr << j.dump() << "\n";
      return kParams;
    }
  }
  check(s);
  Text json;
  check(pp_gadgets_to_json(g.p, json.out()));
  write_out(a.out, json.str());

  if (a.svg.empty() && a.certificate.empty()) return kOk;
  std::string assignment;
  if (!a.assignment.empty()) {
    assignment = read_file(a.assignment);
  } else {
    int sat = 0;
    Text found;
    check(pp_solve(inst.p, 1, &sat, found.out()));
    assignment = sat ? found.str() : all_true_assignment(inst.p);
  }
  Text cert;
  check(pp_canonical_certificate(inst.p, g.p, assignment.c_str(), cert.out()));
  if (!a.certificate.empty()) write_out(a.certificate, cert.str());
  if (!a.svg.empty()) {
    Text svg;
    check(pp_render_svg(g.p, cert.str().c_str(), svg.out()));
    write_out(a.svg, svg.str());
  }
  return kOk;
}

struct VerifyArgs {
  std::string polygons, certificate, out;
  bool first_only = false;
};

int run_verify(const VerifyArgs& a) {
  Gadgets g;
  check(pp_gadgets_from_json(read_file(a.polygons).c_str(), &g.p));
  std::string cert = read_file(a.certificate);
  int valid = 0;
  Text report;
  check(pp_verify(g.p, cert.c_str(), a.first_only, &valid, report.out()));
  write_out(a.out, report.str());
  return valid ? kOk : kInvalid;
}

struct RenderArgs {
  std::string polygons, certificate, out;
};

int run_render(const RenderArgs& a) {
  Gadgets g;
  check(pp_gadgets_from_json(read_file(a.polygons).c_str(), &g.p));
  std::string cert = a.certificate.empty() ? std::string() : read_file(a.certificate);
  Text svg;
  check(pp_render_svg(g.p, a.certificate.empty() ? nullptr : cert.c_str(), svg.out()));
  write_out(a.out, svg.str());
  return kOk;
}

struct EquivArgs {
  int max_w = 2, max_h = 2, seeds = 200, rand_w = 3, rand_h = 3, jobs = 1;
  std::uint64_t seed = 1;
  std::string json_out;
};

int run_equiv(const EquivArgs& a) {
  int agree = 0;
  Text summary;
  check(pp_equivalence(a.max_w, a.max_h, a.seeds, a.rand_w, a.rand_h, a.seed, a.jobs, &agree, summary.out()));
  Json s = Json::parse(summary.str());
  std::printf("%-8s %10s %10s %12s\n", "grid", "instances", "sat", "agreements");
  for (const auto& [size, row] : s["by_size"].items())
    std::printf("%-8s %10d %10d %12d\n", size.c_str(), row["instances"].get<int>(), row["sat"].get<int>(),
                row["agreements"].get<int>());
  std::size_t n = s["instances"].get<std::size_t>(), ok = s["agreements"].get<std::size_t>();
  std::printf("certificates verified: %zu, state grids verified: %zu\n",
              s["assignments_verified"].get<std::size_t>(), s["state_grids_verified"].get<std::size_t>());
  double pct = n == 0 ? 100.0 : 100.0 * static_cast<double>(ok) / static_cast<double>(n);
  if (ok == n)
    std::printf("agreements: 100%% (%zu/%zu)\n", ok, n);
  else
    std::printf("agreements: %.2f%% (%zu/%zu)\n", pct, ok, n);
  if (!a.json_out.empty()) write_out(a.json_out, summary.str());
  return agree ? kOk : kInvalid;
}

int run_dump_tables(bool filtered, const std::string& out) {
  Text csv;
  check(pp_dump_tables(filtered, csv.out()));
  write_out(out, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar-Grid-SAT to polygon packing toolkit"};
  app.require_subcommand(1);

  LowerArgs lower;
  auto* c_lower = app.add_subcommand("lower", "Lower a gate netlist onto a Planar-Grid-SAT instance");
  c_lower->add_option("netlist", lower.netlist, "netlist JSON")->required();
  c_lower->add_option("layout", lower.layout, "layout JSON");
  c_lower->add_option("-o,--output", lower.out, "output path (default stdout)");
  c_lower->add_option("--width", lower.width, "grid width (default from layout)");
  c_lower->add_option("--height", lower.height, "grid height (default from layout)");
  c_lower->add_flag("--expand-only", lower.expand_only, "print the macro-expanded netlist and stop");

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "Decide a Planar-Grid-SAT instance");
  c_solve->add_option("instance", solve.instance, "instance JSON")->required();
  c_solve->add_option("-o,--output", solve.out, "assignment output path");
  c_solve->add_option("--method", solve.method, "brute or propagate")
      ->check(CLI::IsMember({"brute", "propagate"}));

  SynthArgs synth;
  auto* c_synth = app.add_subcommand("synth", "Build the big and small polygons");
  c_synth->add_option("instance", synth.instance, "instance JSON")->required();
  c_synth->add_option("--phase", synth.phase, "construction phase 1-5")->check(CLI::Range(1, 5));
  c_synth->add_option("--params", synth.params, "JSON object overriding default parameters");
  c_synth->add_flag("--printed-tables", synth.printed, "program micronotches from the unfiltered tables");
  c_synth->add_option("-o,--output", synth.out, "polygons JSON output path");
  c_synth->add_option("--svg", synth.svg, "also render the canonical packing to this SVG");
  c_synth->add_option("--certificate", synth.certificate, "also write the canonical certificate");
  c_synth->add_option("--assignment", synth.assignment, "assignment for the certificate (default: solved)");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Check a packing certificate");
  c_verify->add_option("polygons", verify.polygons, "polygons JSON")->required();
  c_verify->add_option("certificate", verify.certificate, "certificate JSON")->required();
  c_verify->add_option("-o,--output", verify.out, "report output path");
  c_verify->add_flag("--first-only", verify.first_only, "stop at the first violation");

  RenderArgs render;
  auto* c_render = app.add_subcommand("render", "Render polygons and an optional certificate to SVG");
  c_render->add_option("polygons", render.polygons, "polygons JSON")->required();
  c_render->add_option("certificate", render.certificate, "certificate JSON");
  c_render->add_option("-o,--output", render.out, "SVG output path");

  EquivArgs equiv;
  auto* c_equiv = app.add_subcommand("equiv", "Run the satisfiability/packing equivalence battery");
  c_equiv->add_option("--max-w", equiv.max_w, "exhaustive grid width bound");
  c_equiv->add_option("--max-h", equiv.max_h, "exhaustive grid height bound");
  c_equiv->add_option("--seeds", equiv.seeds, "number of random instances");
  c_equiv->add_option("--rand-w", equiv.rand_w, "random instance width");
  c_equiv->add_option("--rand-h", equiv.rand_h, "random instance height");
  c_equiv->add_option("--seed", equiv.seed, "first random seed");
  c_equiv->add_option("--jobs", equiv.jobs, "worker threads")->check(CLI::PositiveNumber);
  c_equiv->add_option("--json", equiv.json_out, "write the summary JSON here");

  bool filtered = false;
  std::string tables_out;
  auto* c_tables = app.add_subcommand("dump-tables", "Print the state and transition tables as CSV");
  c_tables->add_flag("--filtered", filtered, "apply the left-consistency filter to the horizontal rows");
  c_tables->add_option("-o,--output", tables_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*c_lower) {
      if (!lower.expand_only && lower.layout.empty()) {
        diagnose("Usage", "lower needs a layout file unless --expand-only is given");
        return kInput;
      }
      return run_lower(lower);
    }
    if (*c_solve) return run_solve(solve);
    if (*c_synth) return run_synth(synth);
    if (*c_verify) return run_verify(verify);
    if (*c_render) return run_render(render);
    if (*c_equiv) return run_equiv(equiv);
    if (*c_tables) return run_dump_tables(filtered, tables_out);
  } catch (const Failure& f) {
    return f.code;
  } catch (const nlohmann::json::exception& e) {
    diagnose("Parse", e.what());
    return kInput;
  }
  return kInput;
}
