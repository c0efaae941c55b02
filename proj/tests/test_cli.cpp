#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polypack/circuit.hpp"
#include "polypack/serialize.hpp"

using namespace polypack;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct ScratchDir {
  fs::path path = fs::temp_directory_path() / ("polypack-cli-" + std::to_string(::getpid()));
  ScratchDir() { fs::create_directories(path); }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

fs::path workdir() {
  static ScratchDir dir;
  return dir.path;
}

fs::path data(const std::string& name) { return fs::path(POLYPACK_TEST_DATA) / name; }

Run run(const std::string& args) {
  fs::path err = workdir() / "stderr.txt";
  std::string cmd = std::string("\"") + POLYPACK_CLI + "\" " + args + " 2>\"" + err.string() + "\"";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

fs::path write_instance(const std::string& name, const GridSatInstance& inst) {
  fs::path p = workdir() / name;
  spit(p, dump(to_json(inst)));
  return p;
}

GridSatInstance wire_2x2() {
  GridSatInstance g;
  g.width = 2;
  g.height = 2;
  g.h_edges[{0, 0}] = EdgeClass::Wire;
  g.v_edges[{1, 0}] = EdgeClass::Inverter;
  return g;
}

}  // namespace

TEST_CASE("lower: identity netlist") {
  spit(workdir() / "id_net.json", R"({"nodes":[{"id":"a","kind":"input"},{"id":"o","kind":"output"}],
    "edges":[{"from":"a","to":"o"}]})");
  spit(workdir() / "id_lay.json", R"({"nodes":[{"id":"a","x":1,"y":0},{"id":"o","x":0,"y":0}],
    "routes":[{"from":"a","to":"o","path":[[1,0],[0,0]]}]})");
  Run r = run("lower " + q(workdir() / "id_net.json") + " " + q(workdir() / "id_lay.json"));
  REQUIRE(r.code == 0);
  auto inst = instance_from_json(parse_json(r.out));
  CHECK(inst.width == 2);
  CHECK(inst.height == 1);
  CHECK(validate_instance(inst).empty());
  CHECK(inst.h_class(0, 0) == EdgeClass::Wire);
}

TEST_CASE("lower: crossover fixture matches the library") {
  Run r = run("lower " + q(data("crossover_netlist.json")) + " " + q(data("crossover_layout.json")));
  REQUIRE(r.code == 0);
  Netlist n = expand_macros(netlist_from_json(parse_json(slurp(data("crossover_netlist.json")))));
  LayoutHint h = layout_from_json(parse_json(slurp(data("crossover_layout.json"))));
  CHECK(r.out == dump(to_json(lower_to_gridsat(n, h, 59, 30))));

  Run e = run("lower --expand-only " + q(data("crossover_netlist.json")));
  REQUIRE(e.code == 0);
  CHECK(netlist_from_json(parse_json(e.out)) == n);
}

TEST_CASE("lower: xor fixture solves to a True output") {
  fs::path out = workdir() / "xor_inst.json";
  REQUIRE(run("lower " + q(data("xor_netlist.json")) + " " + q(data("xor_layout.json")) + " -o " + q(out)).code == 0);
  Run s = run("solve --method propagate " + q(out));
  REQUIRE(s.code == 0);
  Assignment a = assignment_from_json(parse_json(s.out));
  CHECK(a.at(0, 0));
  CHECK(check_assignment(instance_from_json(parse_json(slurp(out))), a).empty());
  CHECK(run("solve " + q(out)).code == 4);  // too many vertices for exhaustive search
}

TEST_CASE("input errors exit 2 with a JSON diagnostic") {
  spit(workdir() / "broken.json", "{\"nodes\": [");
  Run r = run("lower " + q(workdir() / "broken.json") + " " + q(data("xor_layout.json")));
  CHECK(r.code == 2);
  auto diag = parse_json(r.err);
  CHECK(diag["error"] == "Parse");
  CHECK_FALSE(diag["message"].get<std::string>().empty());

  CHECK(run("solve " + q(workdir() / "missing.json")).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("synth " + q(data("xor_layout.json")) + " --phase 9").code == 2);
}

TEST_CASE("solve: satisfiable and unsatisfiable") {
  Run r = run("solve " + q(write_instance("w.json", wire_2x2())));
  REQUIRE(r.code == 0);
  CHECK(check_assignment(wire_2x2(), assignment_from_json(parse_json(r.out))).empty());

  GridSatInstance unsat;
  unsat.width = 2;
  unsat.height = 2;
  unsat.h_edges[{0, 0}] = EdgeClass::Inverter;
  unsat.h_edges[{0, 1}] = EdgeClass::Inverter;
  unsat.v_edges[{0, 0}] = EdgeClass::Inverter;
  unsat.v_edges[{1, 0}] = EdgeClass::Wire;
  Run u = run("solve " + q(write_instance("u.json", unsat)));
  CHECK(u.code == 1);
  CHECK(parse_json(u.out)["satisfiable"] == false);

  GridSatInstance bad;
  bad.width = 5;
  bad.height = 1;
  bad.and_gates.insert({4, 0});
  Run b = run("solve " + q(write_instance("bad.json", bad)));
  CHECK(b.code == 2);
  CHECK(b.err.find("and-odd-x") != std::string::npos);
}

TEST_CASE("synth: phase 1 2x2 small polygon has 4 vertices") {
  GridSatInstance g;
  g.width = 2;
  g.height = 2;
  Run r = run("synth --phase 1 " + q(write_instance("e22.json", g)));
  REQUIRE(r.code == 0);
  auto polys = polygons_from_json(parse_json(r.out));
  CHECK(polys.small.size() == 4);
  CHECK(polys.big.size() == 4);
  CHECK(polys.frame.phase == 1);
}

TEST_CASE("synth: phase 5 SVG draws every copy plus the container") {
  fs::path svg = workdir() / "w.svg", cert = workdir() / "w.cert.json", polys = workdir() / "w.polys.json";
  Run r = run("synth " + q(write_instance("w.json", wire_2x2())) + " -o " + q(polys) + " --svg " + q(svg) +
              " --certificate " + q(cert));
  REQUIRE(r.code == 0);
  std::string text = slurp(svg);
  CHECK(count(text, "<polygon") == 2 * 2 + 1);
  CHECK(certificate_from_json(parse_json(slurp(cert))).placements.size() == 4);
  Run rendered = run("render " + q(polys) + " " + q(cert));
  REQUIRE(rendered.code == 0);
  CHECK(rendered.out == text);
}

TEST_CASE("synth: invalid params exit 3 naming the inequality") {
  spit(workdir() / "bad_params.json", R"({"eps": "1/2"})");
  Run r = run("synth " + q(write_instance("w.json", wire_2x2())) + " --params " + q(workdir() / "bad_params.json"));
  CHECK(r.code == 3);
  auto diag = parse_json(r.err);
  CHECK(diag["error"] == "ParamViolation");
  bool named = false;
  for (const auto& v : diag["violations"]) named = named || v["rule"] == "whitespace-budget";
  CHECK(named);
}

TEST_CASE("verify: valid, perturbed and mismatched certificates") {
  fs::path cert = workdir() / "v.cert.json", polys = workdir() / "v.polys.json";
  REQUIRE(run("synth " + q(write_instance("w.json", wire_2x2())) + " -o " + q(polys) + " --certificate " + q(cert))
              .code == 0);
  Run ok = run("verify " + q(polys) + " " + q(cert));
  CHECK(ok.code == 0);
  CHECK(report_from_json(parse_json(ok.out)).valid);

  auto gadgets = polygons_from_json(parse_json(slurp(polys)));
  auto c = certificate_from_json(parse_json(slurp(cert)));
  c.placements[3].tx += gadgets.frame.params.nailer_notch_pitch;
  spit(workdir() / "moved.json", dump(to_json(c)));
  Run moved = run("verify " + q(polys) + " " + q(workdir() / "moved.json"));
  CHECK(moved.code == 1);
  auto rep = report_from_json(parse_json(moved.out));
  CHECK_FALSE(rep.valid);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(rep.violations[0].witness.has_value());

  c.placements.pop_back();
  spit(workdir() / "short.json", dump(to_json(c)));
  CHECK(run("verify " + q(polys) + " " + q(workdir() / "short.json")).code == 2);
}

TEST_CASE("equiv: exhaustive-only and size limit") {
  Run r = run("equiv --max-w 2 --max-h 1 --seeds 0");
  CHECK(r.code == 0);
  CHECK(r.out.find("agreements: 100% (4/4)") != std::string::npos);
  CHECK(run("equiv --max-w 3 --max-h 3 --seeds 0").code == 4);
  CHECK(run("equiv --seeds 1 --rand-w 5 --rand-h 5").code == 4);
}

TEST_CASE("equiv: defaults report full agreement") {
  fs::path summary = workdir() / "summary.json";
  Run r = run("equiv --json " + q(summary));
  CHECK(r.code == 0);
  CHECK(r.out.find("agreements: 100%") != std::string::npos);
  auto s = parse_json(slurp(summary));
  CHECK(s["instances"] == 1 + 3 + 3 + 81 + 200);
  CHECK(s["agreements"] == s["instances"]);
}

TEST_CASE("dump-tables matches the transcription") {
  Run r = run("dump-tables");
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(data("tables.csv")));
  Run f = run("dump-tables --filtered");
  CHECK(f.code == 0);
  CHECK(f.out != r.out);
}

TEST_CASE("outputs are deterministic") {
  fs::path inst = write_instance("det.json", random_instance(3, 3, 5));
  for (const char* sub : {"synth", "solve --method propagate"}) {
    Run a = run(std::string(sub) + " " + q(inst));
    Run b = run(std::string(sub) + " " + q(inst));
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  fs::path s1 = workdir() / "d1.svg", s2 = workdir() / "d2.svg";
  REQUIRE(run("synth " + q(inst) + " -o - --svg " + q(s1)).code == 0);
  REQUIRE(run("synth " + q(inst) + " -o - --svg " + q(s2)).code == 0);
  CHECK(slurp(s1) == slurp(s2));
  CHECK(run("equiv --max-w 1 --max-h 1 --seeds 5 --seed 9").out ==
        run("equiv --max-w 1 --max-h 1 --seeds 5 --seed 9").out);
}
