#include "milnor/io.hpp"

#include <set>
#include <sstream>

namespace milnor {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw PipelineError(ErrorCode::Malformed, "input", what); }

Int parse_int(const Json& j, const std::string& where) {
  try {
    return int_from_json(j);
  } catch (const std::exception&) {
    malformed(where + ": expected an integer");
  }
}

template <Side S>
Vec3<S> parse_triple(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) malformed(where + ": expected an integer triple");
  return {parse_int(j[0], where), parse_int(j[1], where), parse_int(j[2], where)};
}

Rational parse_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(parse_int(j, where));
  if (!j.is_string()) malformed(where + ": expected a rational \"p/q\"");
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  Int p, q;
  if (num.empty() || den.empty() || p.set_str(num, 10) != 0 || q.set_str(den, 10) != 0 || q == 0)
    malformed(where + ": bad rational \"" + s + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

template <Side S>
Json triple_json(const Vec3<S>& v) {
  return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}

template <Side S>
Vec3<S> triple_from(const Json& j) {
  return {int_from_json(j.at(0)), int_from_json(j.at(1)), int_from_json(j.at(2))};
}

Json measures_json(const FaceMeasures& m) {
  return {{"dim", m.dim}, {"length", to_json(m.length)}, {"interior", to_json(m.interior)},
          {"boundary", to_json(m.boundary)}, {"volume", to_json(m.volume)}};
}

FaceMeasures measures_from(const Json& j) {
  FaceMeasures m;
  m.dim = j.at("dim").get<int>();
  m.length = int_from_json(j.at("length"));
  m.interior = int_from_json(j.at("interior"));
  m.boundary = int_from_json(j.at("boundary"));
  m.volume = int_from_json(j.at("volume"));
  return m;
}

std::string place_name(RayPlace p) {
  switch (p) {
    case RayPlace::Interior: return "interior";
    case RayPlace::BoundaryFace: return "boundary_face";
    case RayPlace::BoundaryRay: return "boundary_ray";
  }
  return "?";
}

RayPlace place_from(const std::string& s) {
  if (s == "interior") return RayPlace::Interior;
  if (s == "boundary_face") return RayPlace::BoundaryFace;
  if (s == "boundary_ray") return RayPlace::BoundaryRay;
  throw std::invalid_argument("unknown ray place " + s);
}

std::string kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::Exceptional: return "exceptional";
    case CurveKind::Strict: return "strict";
    case CurveKind::Arrowhead: return "arrowhead";
  }
  return "?";
}

CurveKind kind_from(const std::string& s) {
  if (s == "exceptional") return CurveKind::Exceptional;
  if (s == "strict") return CurveKind::Strict;
  if (s == "arrowhead") return CurveKind::Arrowhead;
  throw std::invalid_argument("unknown vertex kind " + s);
}

Sign sign_from(const std::string& s) {
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  throw std::invalid_argument("unknown sign " + s);
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges)
    out.push_back({{"u", e.u}, {"v", e.v}, {"sign", std::string(1, symbol(e.sign))}, {"count", e.count}});
  return out;
}

std::vector<Edge> edges_from(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j)
    out.push_back({e.at("u").get<int>(), e.at("v").get<int>(), sign_from(e.at("sign").get<std::string>()),
                   e.at("count").get<std::size_t>()});
  return out;
}

Json string_json(const HJString& s) {
  Json ks = Json::array(), mus = Json::array();
  for (const auto& k : s.ks) ks.push_back(to_json(k));
  for (const auto& m : s.mus) mus.push_back(to_json(m));
  return {{"sign", std::string(1, symbol(s.sign))}, {"a", to_json(s.a)}, {"b", to_json(s.b)}, {"c", to_json(s.c)},
          {"delta", to_json(s.delta)}, {"alpha", to_json(s.alpha)}, {"ks", ks}, {"mus", mus}};
}

HJString string_from(const Json& j) {
  HJString s;
  s.sign = sign_from(j.at("sign").get<std::string>());
  s.a = int_from_json(j.at("a"));
  s.b = int_from_json(j.at("b"));
  s.c = int_from_json(j.at("c"));
  s.delta = int_from_json(j.at("delta"));
  s.alpha = int_from_json(j.at("alpha"));
  for (const auto& k : j.at("ks")) s.ks.push_back(int_from_json(k));
  for (const auto& m : j.at("mus")) s.mus.push_back(int_from_json(m));
  return s;
}

std::string edge_label(const Edge& e) {
  std::string s(1, symbol(e.sign));
  if (e.count > 1) s += " x" + std::to_string(e.count);
  return s;
}

void dot_edges(std::ostringstream& os, const std::vector<Edge>& edges) {
  for (const auto& e : edges) os << "  n" << e.u << " -- n" << e.v << " [label=\"" << edge_label(e) << "\"];\n";
}

}  // namespace

Json to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw std::invalid_argument("expected an integer");
}

ProblemInput parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("top level must be an object");
  for (const auto& [k, v] : j.items())
    if (k != "cone_rays" && k != "support" && k != "options") malformed("unknown field \"" + k + "\"");
  if (!j.contains("cone_rays") || !j["cone_rays"].is_array() || j["cone_rays"].empty()) malformed("cone_rays must be a non-empty list");
  if (!j.contains("support") || !j["support"].is_array() || j["support"].empty()) malformed("support must be a non-empty list");

  std::vector<NVec> rays;
  for (const auto& r : j["cone_rays"]) {
    auto v = parse_triple<Side::N>(r, "cone_rays");
    if (v.is_zero()) malformed("cone_rays: zero vector");
    rays.push_back(v);
  }
  ProblemInput pi;
  try {
    pi.f.sigma = NCone::generated_by(rays);
  } catch (const NotStronglyConvex& e) {
    throw PipelineError(ErrorCode::NotStronglyConvex, "input", e.what());
  }
  if (pi.f.sigma.dim() != 3) malformed("cone_rays do not span a three-dimensional cone");

  bool any_coeff = false;
  std::set<MVec> seen;
  std::vector<std::optional<GaussRational>> coeffs;
  for (const auto& s : j["support"]) {
    if (!s.is_object() || !s.contains("exponent")) malformed("support entries need an exponent");
    for (const auto& [k, v] : s.items())
      if (k != "exponent" && k != "coefficient") malformed("unknown support field \"" + k + "\"");
    auto m = parse_triple<Side::M>(s["exponent"], "exponent");
    if (!seen.insert(m).second) malformed("repeated exponent " + to_string(m));
    pi.f.support.push_back(m);
    if (s.contains("coefficient") && !s["coefficient"].is_null()) {
      const auto& c = s["coefficient"];
      if (!c.is_array() || c.size() != 2) malformed("coefficient must be a pair [re, im]");
      GaussRational z{parse_rational(c[0], "coefficient"), parse_rational(c[1], "coefficient")};
      if (z.is_zero()) malformed("zero coefficient at " + to_string(m));
      coeffs.emplace_back(z);
      any_coeff = true;
    } else {
      coeffs.emplace_back(std::nullopt);
    }
  }
  if (any_coeff) pi.f.coefficients = coeffs;

  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) malformed("options must be an object");
    for (const auto& [k, v] : o.items()) {
      if (k == "stage") {
        auto s = v.is_string() ? parse_stage(v.get<std::string>()) : std::nullopt;
        if (!s) malformed("options.stage: unknown stage");
        pi.options.stage = *s;
      } else if (k == "emit") {
        if (v == "json") pi.options.emit = Emit::Json;
        else if (v == "dot") pi.options.emit = Emit::Dot;
        else malformed("options.emit must be json or dot");
      } else if (k == "check_nnd" || k == "check-nnd") {
        if (!v.is_boolean()) malformed("options." + k + " must be a boolean");
        pi.options.check_nnd = v.get<bool>();
      } else if (k == "oracle") {
        if (!v.is_boolean()) malformed("options.oracle must be a boolean");
        pi.options.oracle = v.get<bool>();
      } else if (k == "subdivision_budget") {
        if (!v.is_number_unsigned()) malformed("options.subdivision_budget must be a non-negative integer");
        pi.options.subdivision_budget = v.get<std::size_t>();
      } else {
        malformed("unknown option \"" + k + "\"");
      }
    }
  }

  auto hyp = check_hypotheses(pi.f);
  if (!hyp.ok()) {
    std::ostringstream os;
    for (std::size_t i = 0; i < hyp.violations.size(); ++i) os << (i ? "; " : "") << hyp.violations[i].detail;
    throw PipelineError(error_code_of(hyp), "input", os.str());
  }
  return pi;
}

Json to_json(const ClassifiedFan& c) {
  Json vs = Json::array();
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    const auto& r = c.rays[i];
    vs.push_back({{"id", i}, {"ray", triple_json(r.ray)}, {"place", place_name(r.place)}, {"sigma_face", r.sigma_face},
                  {"hf", to_json(r.hf)}, {"hg", to_json(r.hg)}, {"delta_f", measures_json(r.delta_f)},
                  {"pertinent", r.pertinent}});
  }
  Json es = Json::array();
  for (const auto& t : c.two_cones)
    es.push_back({{"u", t.rays[0]}, {"v", t.rays[1]}, {"interior", t.interior}, {"cutting", t.cutting},
                  {"pertinent", t.pertinent}, {"regular", t.regular}, {"delta_f", measures_json(t.delta_f)}});
  Json sigma = Json::array();
  for (const auto& r : c.fan.support().rays()) sigma.push_back(triple_json(r));
  Json three = Json::array();
  for (const auto& t : c.three_cones) three.push_back(Json::array({t[0], t[1], t[2]}));
  return {{"stage", "fan"},
          {"vertices", vs},
          {"edges", es},
          {"decorations", {{"sigma", sigma}, {"three_cones", three}, {"zero_locus_faces", c.zero_locus_faces}}}};
}

ClassifiedFan fan_from_json(const Json& j) {
  const auto& d = j.at("decorations");
  std::vector<NVec> sigma_rays;
  for (const auto& r : d.at("sigma")) sigma_rays.push_back(triple_from<Side::N>(r));
  std::vector<NVec> rays;
  for (const auto& v : j.at("vertices")) rays.push_back(triple_from<Side::N>(v.at("ray")));
  ClassifiedFan c;
  std::vector<NCone> maximal;
  for (const auto& t : d.at("three_cones")) {
    std::array<int, 3> idx{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
    c.three_cones.push_back(idx);
    maximal.push_back(NCone::generated_by({rays.at(idx[0]), rays.at(idx[1]), rays.at(idx[2])}));
  }
  c.fan = Fan(NCone::generated_by(sigma_rays), maximal);
  if (c.fan.rays() != rays) throw std::invalid_argument("fan rays do not match the vertex list");
  for (const auto& v : j.at("vertices")) {
    RayInfo r;
    r.ray = triple_from<Side::N>(v.at("ray"));
    r.place = place_from(v.at("place").get<std::string>());
    r.sigma_face = v.at("sigma_face").get<int>();
    r.hf = int_from_json(v.at("hf"));
    r.hg = int_from_json(v.at("hg"));
    r.delta_f = measures_from(v.at("delta_f"));
    r.pertinent = v.at("pertinent").get<bool>();
    c.rays.push_back(r);
  }
  for (const auto& e : j.at("edges")) {
    TwoConeInfo t;
    t.rays = {e.at("u").get<int>(), e.at("v").get<int>()};
    t.interior = e.at("interior").get<bool>();
    t.cutting = e.at("cutting").get<bool>();
    t.pertinent = e.at("pertinent").get<bool>();
    t.regular = e.at("regular").get<bool>();
    t.delta_f = measures_from(e.at("delta_f"));
    c.two_cones.push_back(t);
  }
  c.zero_locus_faces = d.at("zero_locus_faces").get<std::vector<bool>>();
  return c;
}

Json to_json(const CurveConfigGraph& g) {
  Json vs = Json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    vs.push_back({{"id", i}, {"kind", kind_name(v.kind)}, {"genus", to_json(v.genus)}, {"m1", to_json(v.m1)},
                  {"m2", to_json(v.m2)}, {"n2", to_json(v.n2)}, {"source", v.source}, {"component", v.component}});
  }
  return {{"stage", "gcdt"}, {"vertices", vs}, {"edges", edges_json(g.edges)}, {"decorations", Json::object()}};
}

CurveConfigGraph gcdt_from_json(const Json& j) {
  CurveConfigGraph g;
  for (const auto& v : j.at("vertices")) {
    CurveVertex c;
    c.kind = kind_from(v.at("kind").get<std::string>());
    c.genus = int_from_json(v.at("genus"));
    c.m1 = int_from_json(v.at("m1"));
    c.m2 = int_from_json(v.at("m2"));
    c.n2 = int_from_json(v.at("n2"));
    c.source = v.at("source").get<std::string>();
    c.component = v.at("component").get<int>();
    g.vertices.push_back(c);
  }
  g.edges = edges_from(j.at("edges"));
  return g;
}

Json to_json(const MultResult& m) {
  Json vs = Json::array();
  for (std::size_t i = 0; i < m.graph.vertices.size(); ++i) {
    const auto& v = m.graph.vertices[i];
    vs.push_back({{"id", i}, {"arrowhead", v.arrowhead}, {"genus", to_json(v.genus)}, {"mu", to_json(v.mu)},
                  {"origin", v.origin}});
  }
  Json strings = Json::array();
  for (const auto& s : m.strings) strings.push_back(string_json(s));
  return {{"stage", "gmult"}, {"vertices", vs}, {"edges", edges_json(m.graph.edges)}, {"decorations", {{"strings", strings}}}};
}

MultResult gmult_from_json(const Json& j) {
  MultResult m;
  for (const auto& v : j.at("vertices"))
    m.graph.vertices.push_back({v.at("arrowhead").get<bool>(), int_from_json(v.at("genus")), int_from_json(v.at("mu")),
                                v.at("origin").get<std::string>()});
  m.graph.edges = edges_from(j.at("edges"));
  for (const auto& s : j.at("decorations").at("strings")) m.strings.push_back(string_from(s));
  return m;
}

Json to_json(const PlumbGraph& g, const std::string& stage) {
  Json vs = Json::array();
  for (const auto& v : g.vertices) vs.push_back({{"id", v.id}, {"genus", to_json(v.genus)}, {"euler", to_json(v.euler)}});
  return {{"stage", stage}, {"vertices", vs}, {"edges", edges_json(g.edges)}, {"decorations", Json::object()}};
}

PlumbGraph plumb_from_json(const Json& j) {
  PlumbGraph g;
  for (const auto& v : j.at("vertices"))
    g.vertices.push_back({v.at("id").get<int>(), int_from_json(v.at("genus")), int_from_json(v.at("euler"))});
  g.edges = edges_from(j.at("edges"));
  g.normalize();
  return g;
}

Json to_json(const ReductionTrace& t) {
  Json out = Json::array();
  for (const auto& s : t.steps) out.push_back({{"move", s.move}, {"site", s.site}, {"before", s.before}, {"after", s.after}});
  return out;
}

ReductionTrace trace_from_json(const Json& j) {
  ReductionTrace t;
  for (const auto& s : j)
    t.steps.push_back({s.at("move").get<std::string>(), s.at("site").get<std::vector<int>>(), s.at("before").get<std::string>(),
                       s.at("after").get<std::string>()});
  return t;
}

Json to_json(const GraphInvariants& inv) {
  Json m = Json::array();
  for (const auto& row : inv.matrix) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    m.push_back(r);
  }
  Json out = {{"intersection_matrix", m},
              {"abs_det", to_json(inv.abs_det)},
              {"negative_definite", inv.negative_definite},
              {"plus_forest", inv.plus_forest}};
  if (inv.h1_supported) {
    Json tor = Json::array();
    for (const auto& x : inv.h1_torsion) tor.push_back(to_json(x));
    out["h1"] = {{"rank", to_json(inv.h1_rank)}, {"torsion", tor}};
  } else {
    out["h1"] = "unsupported";
  }
  return out;
}

std::string to_dot(const ClassifiedFan& c) {
  std::ostringstream os;
  os << "graph fan {\n";
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    const auto& r = c.rays[i];
    os << "  n" << i << " [label=\"" << to_string(r.ray) << " h=" << r.hf.get_str() << "," << r.hg.get_str() << "\"";
    if (r.place != RayPlace::Interior) os << ", shape=box";
    if (r.pertinent) os << ", style=bold";
    os << "];\n";
  }
  for (const auto& t : c.two_cones) {
    os << "  n" << t.rays[0] << " -- n" << t.rays[1];
    std::vector<std::string> attrs;
    if (t.cutting) attrs.push_back("color=red");
    if (t.pertinent) attrs.push_back("style=bold");
    if (!t.regular) attrs.push_back("style=dashed");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const CurveConfigGraph& g) {
  std::ostringstream os;
  os << "graph gcdt {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    os << "  n" << i << " [label=\"(" << v.m1.get_str() << ";" << v.m2.get_str() << "," << v.n2.get_str() << ") ["
       << v.genus.get_str() << "]\"";
    if (v.kind == CurveKind::Arrowhead) os << ", shape=plaintext";
    if (v.kind == CurveKind::Strict) os << ", shape=box";
    os << "];\n";
  }
  dot_edges(os, g.edges);
  os << "}\n";
  return os.str();
}

std::string to_dot(const MultGraph& g) {
  std::ostringstream os;
  os << "graph gmult {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    os << "  n" << i << " [label=\"" << v.mu.get_str();
    if (v.genus != 0) os << " [" << v.genus.get_str() << "]";
    os << "\"";
    if (v.arrowhead) os << ", shape=plaintext";
    os << "];\n";
  }
  dot_edges(os, g.edges);
  os << "}\n";
  return os.str();
}

std::string to_dot(const PlumbGraph& g, const std::string& stage) {
  std::ostringstream os;
  os << "graph " << stage << " {\n";
  for (const auto& v : g.vertices)
    os << "  n" << v.id << " [label=\"" << v.euler.get_str() << " [" << v.genus.get_str() << "]\"];\n";
  dot_edges(os, g.edges);
  os << "}\n";
  return os.str();
}

Json stage_json(const Artifacts& a, Stage s) {
  switch (s) {
    case Stage::Fan: {
      Json j = to_json(a.fans.adapted);
      j["decorations"]["subdivisions"] = a.fans.subdivisions;
      return j;
    }
    case Stage::Gcdt: return to_json(a.gcdt);
    case Stage::Gmult: return to_json(a.gmult);
    case Stage::Gplomb: return to_json(a.gplomb, "gplomb");
    case Stage::Reduced: {
      Json j = to_json(a.reduced, "reduced");
      j["decorations"] = {{"label", "reduced form"},
                          {"trace", to_json(a.trace)},
                          {"invariants", to_json(a.invariants)},
                          {"planarity", {{"planar", a.planarity.planar}, {"tag", a.planarity.label()}}}};
      return j;
    }
  }
  return {};
}

std::string render(const Artifacts& a, Stage s, Emit e) {
  if (e == Emit::Json) return stage_json(a, s).dump(2) + "\n";
  switch (s) {
    case Stage::Fan: return to_dot(a.fans.adapted);
    case Stage::Gcdt: return to_dot(a.gcdt);
    case Stage::Gmult: return to_dot(a.gmult.graph);
    case Stage::Gplomb: return to_dot(a.gplomb, "gplomb");
    case Stage::Reduced: return to_dot(a.reduced, "reduced");
  }
  return {};
}

}  // namespace milnor
