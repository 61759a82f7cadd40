#include "smg/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "smg/errors.hpp"

namespace smg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double as_number(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) throw FormatError(where + ": expected a number");
  return j.get<double>();
}

int as_index(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(where + ": expected an integer vertex index");
  const auto v = j.get<long long>();
  if (v < 0 || v > std::numeric_limits<int>::max()) {
    throw FormatError(where + ": vertex index " + std::to_string(v) + " out of range");
  }
  return static_cast<int>(v);
}

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["ids"] = w.ids;
  j["value"] = w.value;
  j["detail"] = w.detail;
  if (w.point) j["point"] = {w.point->x(), w.point->y(), w.point->z()};
  return j;
}

}  // namespace

std::string to_smg(const GraphFile& file) {
  const EmbeddedGraph& g = file.graph;
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": \"" << kFormatTag << "\",\n";
  os << "  \"lambda\": " << num(g.lambda()) << ",\n";
  os << "  \"vertices\": [";
  for (int i = 0; i < g.vertex_count(); ++i) {
    const auto& p = g.vertices()[i];
    os << (i ? ",\n    " : "\n    ") << '[' << num(p.x()) << ", " << num(p.y()) << ", "
       << num(p.z()) << ']';
  }
  os << (g.vertex_count() ? "\n  ],\n" : "],\n");
  os << "  \"edges\": [";
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    os << (i ? ",\n    " : "\n    ") << '[' << e.u << ", " << e.v << ']';
  }
  os << (g.edge_count() ? "\n  ]" : "]");
  if (file.metadata) {
    const auto& m = *file.metadata;
    os << ",\n  \"metadata\": {\n";
    os << "    \"name\": " << ordered_json(m.name).dump() << ",\n";
    if (m.residual_max) os << "    \"residual_max\": " << num(*m.residual_max) << ",\n";
    os << "    \"generator\": " << ordered_json(m.generator).dump() << "\n  }";
  }
  os << "\n}\n";
  return os.str();
}

GraphFile parse_smg(const std::string& text, std::vector<std::string>* warnings) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("top level must be an object");
  if (!j.contains("format") || j["format"] != kFormatTag) {
    throw FormatError(std::string("format tag must be \"") + kFormatTag + "\"");
  }
  if (!j.contains("lambda")) throw FormatError("missing \"lambda\"");
  const double lambda = as_number(j["lambda"], "lambda");
  if (!(lambda > 0.0 && lambda < std::numbers::pi)) {
    throw FormatError("lambda: " + num(lambda) + " is outside (0, pi)");
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw FormatError("missing \"vertices\" array");
  if (!j.contains("edges") || !j["edges"].is_array()) throw FormatError("missing \"edges\" array");

  std::vector<UnitVector> vertices;
  const auto& jv = j["vertices"];
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!jv[i].is_array() || jv[i].size() != 3) throw FormatError(where + ": expected [x, y, z]");
    const Vec3 v(as_number(jv[i][0], where), as_number(jv[i][1], where), as_number(jv[i][2], where));
    const double drift = std::abs(v.norm() - 1.0);
    if (!(drift <= kNormTolerance)) {
      throw FormatError(where + ": norm " + num(v.norm()) + " is not 1 within 1e-9");
    }
    if (drift > 4.0 * std::numeric_limits<double>::epsilon() && warnings) {
      warnings->push_back(where + ": renormalized (norm drift " + short_num(drift) + ")");
    }
    vertices.emplace_back(v);
  }

  std::vector<Edge> edges;
  bool flipped = false;
  const auto& je = j["edges"];
  const int n = static_cast<int>(vertices.size());
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!je[i].is_array() || je[i].size() != 2) throw FormatError(where + ": expected [i, j]");
    Edge e{as_index(je[i][0], where), as_index(je[i][1], where)};
    if (e.u >= n || e.v >= n) throw FormatError(where + ": vertex index out of range");
    if (e.u == e.v) throw FormatError(where + ": loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      flipped = true;
    }
    edges.push_back(e);
  }
  const auto sorted = canonical_edges(edges);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw FormatError("edges: duplicate edge [" + std::to_string(sorted[i].u) + ", " +
                        std::to_string(sorted[i].v) + "]");
    }
  }
  if ((flipped || sorted != edges) && warnings) warnings->push_back("edges: reordered into canonical order");

  GraphFile out;
  out.graph = EmbeddedGraph(std::move(vertices), sorted, lambda);
  if (j.contains("metadata")) {
    const auto& m = j["metadata"];
    if (!m.is_object()) throw FormatError("metadata: expected an object");
    GraphMetadata meta;
    meta.name = m.value("name", "");
    if (m.contains("residual_max")) meta.residual_max = as_number(m["residual_max"], "metadata.residual_max");
    meta.generator = m.value("generator", "");
    out.metadata = meta;
  }
  return out;
}

GraphFile read_graph(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_smg(ss.str(), warnings);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) {
      std::filesystem::remove(tmp);
      throw Error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

void write_graph(const std::filesystem::path& path, const GraphFile& file) {
  write_text(path, to_smg(file));
}

GraphFile to_graph_file(const ConstructionResult& r) {
  return {r.graph, GraphMetadata{r.name, r.residual_max, kGeneratorVersion}};
}

ExportFormat export_format_from_string(const std::string& s) {
  if (s == "off") return ExportFormat::Off;
  if (s == "svg") return ExportFormat::Svg;
  if (s == "csv") return ExportFormat::Csv;
  throw InvalidInput("unknown export format '" + s + "' (expected off, svg or csv)");
}

std::string export_off(const EmbeddedGraph& g) {
  const FaceSet fs = trace_faces(g);
  std::ostringstream os;
  os << "OFF\n" << g.vertex_count() << ' ' << fs.size() << ' ' << g.edge_count() << '\n';
  for (const auto& p : g.vertices()) os << num(p.x()) << ' ' << num(p.y()) << ' ' << num(p.z()) << '\n';
  for (const auto& f : fs.faces) {
    os << f.degree();
    for (int v : f.walk) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

std::string export_csv(const EmbeddedGraph& g) {
  std::ostringstream os;
  os << "i,j,length_rad\n";
  for (const auto& e : g.edges()) {
    os << e.u << ',' << e.v << ',' << num(angular_distance(g.vertices()[e.u], g.vertices()[e.v]))
       << '\n';
  }
  return os.str();
}

std::string export_svg(const EmbeddedGraph& g, const SvgOptions& opt) {
  const Vec3 view = opt.view_axis.normalized();
  Vec3 helper = std::abs(view.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX();
  const Vec3 right = helper.cross(view).normalized();
  const Vec3 up = view.cross(right);
  const double c = opt.size / 2.0;
  const double r = opt.size * 0.45;
  auto project = [&](const Vec3& p) {
    return std::pair{c + r * p.dot(right), c - r * p.dot(up)};
  };
  char buf[64];
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size
     << "\" height=\"" << opt.size << "\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\">\n";
  os << "  <circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << r
     << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  const int samples = std::max(2, opt.samples_per_arc);
  for (const auto& e : g.edges()) {
    const UnitVector& a = g.vertices()[e.u];
    const UnitVector& b = g.vertices()[e.v];
    const Arc arc(a, b);
    const bool hidden = arc.point_at(arc.length() / 2.0).vec().dot(view) < 0.0;
    os << "  <path d=\"";
    for (int s = 0; s < samples; ++s) {
      const auto [x, y] = project(arc.point_at(arc.length() * s / (samples - 1)).vec());
      std::snprintf(buf, sizeof buf, "%c%.3f %.3f", s == 0 ? 'M' : 'L', x, y);
      os << (s ? " " : "") << buf;
    }
    os << "\" fill=\"none\" stroke=\"" << (hidden ? "#bbb" : "#222") << "\" stroke-width=\"1\""
       << (hidden ? " stroke-dasharray=\"3 3\"" : "") << "/>\n";
  }
  for (const auto& p : g.vertices()) {
    const auto [x, y] = project(p.vec());
    const bool hidden = p.vec().dot(view) < 0.0;
    std::snprintf(buf, sizeof buf, "%.3f\" cy=\"%.3f", x, y);
    os << "  <circle cx=\"" << buf << "\" r=\"2\" fill=\"" << (hidden ? "#bbb" : "#c00") << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string export_graph(const EmbeddedGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::Off: return export_off(g);
    case ExportFormat::Svg: return export_svg(g);
    case ExportFormat::Csv: return export_csv(g);
  }
  return {};
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "verification (min degree " << r.profile.min_degree << (r.profile.regular ? ", regular" : "")
     << ", tol " << short_num(r.profile.tol) << ")\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.summary;
    if (c.margin) os << " (margin " << short_num(*c.margin) << ")";
    os << '\n';
    for (const auto& w : c.witnesses) {
      os << "      witness";
      for (int id : w.ids) os << ' ' << id;
      os << ": " << w.detail << " (" << num(w.value) << ")";
      if (w.point) os << " at (" << num(w.point->x()) << ", " << num(w.point->y()) << ", " << num(w.point->z()) << ")";
      os << '\n';
    }
  }
  os << "overall: " << (r.overall ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string report_json(const VerificationReport& r) {
  ordered_json j;
  j["profile"] = {{"min_degree", r.profile.min_degree},
                  {"regular", r.profile.regular},
                  {"tol", r.profile.tol},
                  {"unit_norm_tol", kIdentityTolerance}};
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["summary"] = c.summary;
    if (c.margin) cj["margin"] = *c.margin;
    cj["witnesses"] = ordered_json::array();
    for (const auto& w : c.witnesses) cj["witnesses"].push_back(witness_json(w));
    j["checks"].push_back(cj);
  }
  j["overall"] = r.overall;
  return j.dump(2) + "\n";
}

std::string ledger_text(const AuditResult& a) {
  const auto& l = a.ledger;
  std::ostringstream os;
  os << "euler: V=" << a.euler.vertices << " E=" << a.euler.edges << " F=" << a.euler.faces
     << " V-E+F=" << a.euler.characteristic << " connected=" << (a.euler.connected ? "yes" : "no")
     << '\n';
  os << "vertices (initial -> final):\n";
  for (std::size_t v = 0; v < l.vertex_initial.size(); ++v) {
    os << "  v" << v << "  " << short_num(l.vertex_initial[v]) << " -> " << short_num(l.vertex_final[v]) << '\n';
  }
  os << "faces (degree, area, initial -> final):\n";
  for (std::size_t f = 0; f < l.face_initial.size(); ++f) {
    os << "  f" << f << "  " << a.faces.faces[f].degree() << "  " << short_num(a.faces.faces[f].area)
       << "  " << short_num(l.face_initial[f]) << " -> " << short_num(l.face_final[f]) << '\n';
  }
  os << "transfers: " << l.transfers.size() << '\n';
  os << "total initial: " << num(l.total_initial) << '\n';
  os << "total final:   " << num(l.total_final) << '\n';
  os << "closed form:   " << num(a.closed_form_total) << '\n';
  os << "min final: vertex " << num(a.min_vertex_final) << ", face " << num(a.min_face_final) << '\n';
  os << "max |final|: " << num(a.max_abs_final) << '\n';
  os << "equality flags: connected=" << l.equality.connected
     << " all_faces_345=" << l.equality.all_faces_345
     << " all_angles_in_interval=" << l.equality.all_angles_in_interval
     << " all_degree_5=" << l.equality.all_degree_5 << '\n';
  os << "all finals zero: " << (a.finals_zero ? "yes" : "no") << '\n';
  return os.str();
}

std::string ledger_json(const AuditResult& a) {
  const auto& l = a.ledger;
  ordered_json j;
  j["euler"] = {{"V", a.euler.vertices},
                {"E", a.euler.edges},
                {"F", a.euler.faces},
                {"characteristic", a.euler.characteristic},
                {"connected", a.euler.connected}};
  j["vertex_initial"] = l.vertex_initial;
  j["vertex_final"] = l.vertex_final;
  j["face_initial"] = l.face_initial;
  j["face_final"] = l.face_final;
  j["transfers"] = ordered_json::array();
  for (const auto& t : l.transfers) {
    j["transfers"].push_back({{"face", t.face}, {"vertex", t.vertex}, {"angle", t.angle}, {"amount", t.amount}});
  }
  j["total_initial"] = l.total_initial;
  j["total_final"] = l.total_final;
  j["closed_form_total"] = a.closed_form_total;
  j["min_vertex_final"] = a.min_vertex_final;
  j["min_face_final"] = a.min_face_final;
  j["max_abs_final"] = a.max_abs_final;
  j["equality_flags"] = {{"connected", l.equality.connected},
                         {"all_faces_345", l.equality.all_faces_345},
                         {"all_angles_in_interval", l.equality.all_angles_in_interval},
                         {"all_degree_5", l.equality.all_degree_5}};
  j["finals_nonnegative"] = a.finals_nonnegative;
  j["finals_zero"] = a.finals_zero;
  j["theorem_consistent"] = a.theorem_consistent;
  return j.dump(2) + "\n";
}

}  // namespace smg
