#include "polypack/serialize.hpp"

#include <cctype>

#include "polypack/errors.hpp"

namespace polypack {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) bad(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) bad(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) bad(std::string("field '") + name + "' must be an array");
  return v;
}

std::size_t index_value(const Json& v) {
  if (!v.is_number_unsigned()) bad("indices must be non-negative integers");
  return v.get<std::size_t>();
}

Scalar scalar_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  bad(std::string("field '") + name + "' must be a \"p/q\" string");
}

EdgeClass parse_edge_class(const std::string& s) {
  if (s == "wire") return EdgeClass::Wire;
  if (s == "inverter") return EdgeClass::Inverter;
  if (s == "dontcare") return EdgeClass::DontCare;
  bad("edge class must be \"wire\", \"inverter\" or \"dontcare\", got \"" + s + "\"");
}

const char* edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::Wire: return "wire";
    case EdgeClass::Inverter: return "inverter";
    default: return "dontcare";
  }
}

FeatureKind parse_feature(const std::string& s) {
  for (FeatureKind k : {FeatureKind::Body, FeatureKind::ToothH, FeatureKind::PocketH, FeatureKind::RodV,
                        FeatureKind::ChannelV, FeatureKind::PocketV, FeatureKind::Nail,
                        FeatureKind::NailerChannel, FeatureKind::NailerNotch, FeatureKind::Anchor})
    if (s == to_string(k)) return k;
  bad("unknown feature kind \"" + s + "\"");
}

Json features_json(const std::vector<Feature>& fs) {
  Json a = Json::array();
  for (const Feature& f : fs) {
    Json o = {{"kind", to_string(f.kind)}, {"first", f.first}, {"count", f.count}};
    if (f.x >= 0) o["x"] = f.x;
    if (f.y >= 0) o["y"] = f.y;
    if (f.delta != 0) o["delta"] = f.delta;
    a.push_back(std::move(o));
  }
  return a;
}

std::vector<Feature> features_from(const Json& a) {
  if (!a.is_array()) bad("feature map must be an array");
  std::vector<Feature> out;
  for (const Json& o : a) {
    Feature f{parse_feature(string_field(o, "kind"))};
    f.first = static_cast<std::size_t>(int_field(o, "first"));
    f.count = static_cast<std::size_t>(int_field(o, "count"));
    f.x = o.contains("x") ? int_field(o, "x") : -1;
    f.y = o.contains("y") ? int_field(o, "y") : -1;
    f.delta = o.contains("delta") ? int_field(o, "delta") : 0;
    out.push_back(f);
  }
  return out;
}

Vertex vertex_from(const Json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return {j[0].get<int>(), j[1].get<int>()};
  return {int_field(j, "x"), int_field(j, "y")};
}

Connection connection_from(const Json& o) {
  Connection c;
  c.from = string_field(o, "from");
  c.to = string_field(o, "to");
  c.from_port = o.contains("from_port") ? int_field(o, "from_port") : 0;
  c.to_port = o.contains("to_port") ? int_field(o, "to_port") : 0;
  return c;
}

Json connection_json(const Connection& c) {
  return {{"from", c.from}, {"from_port", c.from_port}, {"to", c.to}, {"to_port", c.to_port}};
}

Json witness_json(const GeomWitness& w) {
  Json o = {{"x", format_scalar(w.point.x)}, {"y", format_scalar(w.point.y)}};
  if (w.edge_a) o["edge_a"] = *w.edge_a;
  if (w.edge_b) o["edge_b"] = *w.edge_b;
  return o;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_text(num) || !is_integer_text(den))
    bad("malformed rational \"" + std::string(text) + "\"; expected \"p/q\"");
  auto strip = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
  mpz_class p(strip(num)), q(strip(den));
  if (q == 0) bad("zero denominator in \"" + std::string(text) + "\"");
  Scalar v(p, q);
  v.canonicalize();
  return v;
}

std::string format_scalar(const Scalar& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- Instances and assignments ---------------------------------------------

Json to_json(const GridSatInstance& inst) {
  Json h = Json::array(), v = Json::array(), g = Json::array();
  for (const auto& [at, c] : inst.h_edges)
    if (c != EdgeClass::DontCare) h.push_back({{"x", at.x}, {"y", at.y}, {"class", edge_class_name(c)}});
  for (const auto& [at, c] : inst.v_edges)
    if (c != EdgeClass::DontCare) v.push_back({{"x", at.x}, {"y", at.y}, {"class", edge_class_name(c)}});
  for (const Vertex& a : inst.and_gates) g.push_back({{"x", a.x}, {"y", a.y}});
  return {{"width", inst.width}, {"height", inst.height}, {"h_edges", h}, {"v_edges", v}, {"and_gates", g}};
}

GridSatInstance instance_from_json(const Json& j) {
  GridSatInstance inst;
  inst.width = int_field(j, "width");
  inst.height = int_field(j, "height");
  for (const char* key : {"h_edges", "v_edges"}) {
    if (!j.contains(key)) continue;
    auto& dst = std::string(key) == "h_edges" ? inst.h_edges : inst.v_edges;
    for (const Json& e : array_field(j, key)) {
      Vertex at = vertex_from(e);
      EdgeClass c = parse_edge_class(string_field(e, "class"));
      if (!dst.emplace(at, c).second) bad(std::string("duplicate entry in ") + key);
    }
  }
  if (j.contains("and_gates"))
    for (const Json& g : array_field(j, "and_gates")) inst.and_gates.insert(vertex_from(g));
  return inst;
}

Json to_json(const Assignment& a) {
  Json rows = Json::array();
  for (const auto& r : a.truth) {
    Json row = Json::array();
    for (bool b : r) row.push_back(b);
    rows.push_back(std::move(row));
  }
  return {{"truth", rows}};
}

Assignment assignment_from_json(const Json& j) {
  Assignment a;
  for (const Json& row : array_field(j, "truth")) {
    if (!row.is_array()) bad("assignment rows must be arrays");
    std::vector<bool> r;
    for (const Json& b : row) {
      if (!b.is_boolean()) bad("assignment entries must be booleans");
      r.push_back(b.get<bool>());
    }
    a.truth.push_back(std::move(r));
  }
  return a;
}

Json to_json(const StateGrid& g) {
  Json rows = Json::array();
  for (const auto& r : g) {
    Json row = Json::array();
    for (State s : r) row.push_back(to_string(s));
    rows.push_back(std::move(row));
  }
  return {{"states", rows}};
}

StateGrid state_grid_from_json(const Json& j) {
  StateGrid g;
  for (const Json& row : array_field(j, "states")) {
    if (!row.is_array()) bad("state rows must be arrays");
    std::vector<State> r;
    for (const Json& s : row) {
      auto st = s.is_string() ? parse_state(s.get<std::string>()) : std::nullopt;
      if (!st) bad("unknown state " + s.dump());
      r.push_back(*st);
    }
    g.push_back(std::move(r));
  }
  return g;
}

// --- Circuits ----------------------------------------------------------------

Json to_json(const Netlist& n) {
  Json nodes = Json::array(), edges = Json::array();
  for (const Node& node : n.nodes) nodes.push_back({{"id", node.id}, {"kind", to_string(node.kind)}});
  for (const Connection& c : n.edges) edges.push_back(connection_json(c));
  return {{"nodes", nodes}, {"edges", edges}};
}

Netlist netlist_from_json(const Json& j) {
  Netlist n;
  for (const Json& o : array_field(j, "nodes")) n.nodes.push_back({string_field(o, "id"), parse_node_kind(string_field(o, "kind"))});
  for (const Json& o : array_field(j, "edges")) n.edges.push_back(connection_from(o));
  return n;
}

Json to_json(const LayoutHint& h) {
  Json nodes = Json::array(), routes = Json::array();
  for (const auto& [id, v] : h.nodes) nodes.push_back({{"id", id}, {"x", v.x}, {"y", v.y}});
  for (const Route& r : h.routes) {
    Json o = connection_json(r.connection);
    Json path = Json::array();
    for (const Vertex& v : r.path) path.push_back({v.x, v.y});
    o["path"] = path;
    routes.push_back(std::move(o));
  }
  return {{"nodes", nodes}, {"routes", routes}};
}

LayoutHint layout_from_json(const Json& j) {
  LayoutHint h;
  for (const Json& o : array_field(j, "nodes"))
    if (!h.nodes.emplace(string_field(o, "id"), vertex_from(o)).second) bad("node placed twice in layout");
  for (const Json& o : array_field(j, "routes")) {
    Route r{connection_from(o), {}};
    for (const Json& v : array_field(o, "path")) r.path.push_back(vertex_from(v));
    h.routes.push_back(std::move(r));
  }
  return h;
}

// --- Geometry ----------------------------------------------------------------

Json to_json(const GadgetParams& p) {
  return {{"unit", format_scalar(p.unit)},
          {"eps", format_scalar(p.eps)},
          {"notch_pitch", format_scalar(p.notch_pitch)},
          {"micronotch_pitch", format_scalar(p.micronotch_pitch)},
          {"protrusion_depth", format_scalar(p.protrusion_depth)},
          {"nail_length", format_scalar(p.nail_length)},
          {"nailer_notch_pitch", format_scalar(p.nailer_notch_pitch)},
          {"delta", format_scalar(p.delta)},
          {"copies", p.copies}};
}

GadgetParams params_from_json(const Json& j, const GadgetParams& base) {
  if (!j.is_object()) bad("params must be an object");
  GadgetParams p = base;
  const std::pair<const char*, Scalar*> fields[] = {
      {"unit", &p.unit},
      {"eps", &p.eps},
      {"notch_pitch", &p.notch_pitch},
      {"micronotch_pitch", &p.micronotch_pitch},
      {"protrusion_depth", &p.protrusion_depth},
      {"nail_length", &p.nail_length},
      {"nailer_notch_pitch", &p.nailer_notch_pitch},
      {"delta", &p.delta}};
  for (const auto& [name, dst] : fields)
    if (j.contains(name)) *dst = scalar_field(j, name);
  if (j.contains("copies")) p.copies = int_field(j, "copies");
  for (const auto& [key, _] : j.items()) {
    bool known = key == "copies";
    for (const auto& [name, dst] : fields) known = known || key == name;
    if (!known) bad("unknown parameter '" + key + "'");
  }
  return p;
}

Json to_json(const Polygon& p) {
  Json verts = Json::array();
  for (const Point& v : p.vertices) verts.push_back({format_scalar(v.x), format_scalar(v.y)});
  Json o = {{"vertices", verts}};
  if (!p.tags.empty()) o["tags"] = p.tags;
  return o;
}

Polygon polygon_from_json(const Json& j) {
  Polygon p;
  for (const Json& v : array_field(j, "vertices")) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
      bad("polygon vertices must be [\"p/q\", \"p/q\"] pairs");
    p.vertices.push_back({parse_scalar(v[0].get<std::string>()), parse_scalar(v[1].get<std::string>())});
  }
  if (j.contains("tags")) {
    for (const Json& t : array_field(j, "tags")) {
      if (!t.is_string()) bad("tags must be strings");
      p.tags.push_back(t.get<std::string>());
    }
    if (p.tags.size() != p.vertices.size()) bad("tag count differs from vertex count");
  }
  if (p.vertices.size() < 3) bad("polygon needs at least 3 vertices");
  return p;
}

Json to_json(const GadgetPolygons& g) {
  return {{"phase", g.frame.phase},
          {"width", g.frame.width},
          {"height", g.frame.height},
          {"params", to_json(g.frame.params)},
          {"small", to_json(g.small)},
          {"big", to_json(g.big)},
          {"small_features", features_json(g.small_features)},
          {"big_features", features_json(g.big_features)}};
}

GadgetPolygons polygons_from_json(const Json& j) {
  GadgetPolygons g;
  g.frame.phase = int_field(j, "phase");
  g.frame.width = int_field(j, "width");
  g.frame.height = int_field(j, "height");
  g.frame.params = params_from_json(field(j, "params"), GadgetParams::defaults(g.frame.width, g.frame.height));
  g.small = polygon_from_json(field(j, "small"));
  g.big = polygon_from_json(field(j, "big"));
  if (j.contains("small_features")) g.small_features = features_from(j["small_features"]);
  if (j.contains("big_features")) g.big_features = features_from(j["big_features"]);
  return g;
}

Json to_json(const PackingCertificate& c) {
  Json a = Json::array();
  for (const Placement& p : c.placements)
    a.push_back({{"tx", format_scalar(p.tx)}, {"ty", format_scalar(p.ty)}, {"c", format_scalar(p.c)},
                 {"s", format_scalar(p.s)}});
  return a;
}

PackingCertificate certificate_from_json(const Json& j) {
  if (!j.is_array()) bad("certificate must be an array of placements");
  PackingCertificate c;
  for (const Json& o : j) {
    Placement p;
    p.tx = scalar_field(o, "tx");
    p.ty = scalar_field(o, "ty");
    p.c = o.contains("c") ? scalar_field(o, "c") : Scalar(1);
    p.s = o.contains("s") ? scalar_field(o, "s") : Scalar(0);
    c.placements.push_back(p);
  }
  return c;
}

Json to_json(const PackingReport& r) {
  Json vs = Json::array();
  for (const PackingViolation& v : r.violations) {
    Json o = {{"kind", to_string(v.kind)}, {"indices", v.indices}, {"detail", v.detail}};
    if (v.witness) o["witness"] = witness_json(*v.witness);
    vs.push_back(std::move(o));
  }
  return {{"valid", r.valid}, {"violations", vs}};
}

PackingReport report_from_json(const Json& j) {
  PackingReport r;
  const Json& valid = field(j, "valid");
  if (!valid.is_boolean()) bad("'valid' must be a boolean");
  r.valid = valid.get<bool>();
  for (const Json& o : array_field(j, "violations")) {
    PackingViolation v{};
    std::string kind = string_field(o, "kind");
    if (kind == "NotContained") v.kind = ViolationKind::NotContained;
    else if (kind == "Overlap") v.kind = ViolationKind::Overlap;
    else if (kind == "NotSimple") v.kind = ViolationKind::NotSimple;
    else bad("unknown violation kind \"" + kind + "\"");
    for (const Json& i : array_field(o, "indices")) v.indices.push_back(index_value(i));
    if (o.contains("detail")) v.detail = string_field(o, "detail");
    if (o.contains("witness")) {
      const Json& w = o["witness"];
      GeomWitness g{{scalar_field(w, "x"), scalar_field(w, "y")}, std::nullopt, std::nullopt};
      if (w.contains("edge_a")) g.edge_a = index_value(w["edge_a"]);
      if (w.contains("edge_b")) g.edge_b = index_value(w["edge_b"]);
      v.witness = g;
    }
    r.violations.push_back(std::move(v));
  }
  return r;
}

Json to_json(const std::vector<Violation>& v) {
  Json a = Json::array();
  for (const Violation& x : v) a.push_back({{"rule", x.rule}, {"x", x.at.x}, {"y", x.at.y}, {"detail", x.detail}});
  return a;
}

Json to_json(const std::vector<ParamViolation>& v) {
  Json a = Json::array();
  for (const ParamViolation& x : v) a.push_back({{"rule", x.rule}, {"detail", x.detail}});
  return a;
}

}  // namespace polypack
