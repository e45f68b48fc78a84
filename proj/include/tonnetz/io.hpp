#pragma once

// One self-describing JSON document format for complexes and labellings, so
// verify/report/export compose over pipes, plus DOT (dual graph) and SVG
// (fundamental-domain net) exporters.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tonnetz/catalog.hpp"
#include "tonnetz/report.hpp"
#include "tonnetz/tonnetz.hpp"

namespace tonnetz {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A well-formed document whose labelling breaks the coherence axioms (or
/// whose complex is not a closed surface). Loaders raise this only in
/// checked mode; unchecked loads surface the reports instead.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A tonnetz together with the optional extras a document may carry.
struct Document {
  Tonnetz tonnetz;
  std::optional<Layout> layout;
  std::vector<QuadInfo> quads;
  std::string provenance;
};

inline Document document_for(const CatalogEntry& entry) {
  return {entry.tonnetz, entry.layout, entry.quads, entry.provenance};
}

// ------------------------------------------------------------------- save

inline nlohmann::json to_json(const Document& doc) {
  using nlohmann::json;
  const SimplicialSurface& s = doc.tonnetz.surface();
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < s.vertex_count(); ++v) j["vertices"].push_back(s.vertex_name(v));
  j["edges"] = json::array();
  for (int e = 0; e < s.edge_count(); ++e) {
    j["edges"].push_back({{"name", s.edge_name(e)},
                          {"verts", {s.vertex_name(s.edge_vertices(e)[0]),
                                     s.vertex_name(s.edge_vertices(e)[1])}}});
  }
  j["faces"] = json::array();
  for (int f = 0; f < s.face_count(); ++f) {
    j["faces"].push_back({{"name", s.face_name(f)},
                          {"edges", {s.edge_name(s.face_edges(f)[0]),
                                     s.edge_name(s.face_edges(f)[1]),
                                     s.edge_name(s.face_edges(f)[2])}}});
  }
  json labels = json::object();
  auto put_labels = [&](int dim) {
    for (int i = 0; i < s.simplex_count(dim); ++i) {
      json notes = json::array();
      for (PitchClass p : doc.tonnetz.label({dim, i}).expand())
        notes.push_back(print_note(p));
      labels[s.name({dim, i})] = notes;
    }
  };
  put_labels(0);
  put_labels(1);
  put_labels(2);
  j["labels"] = labels;

  if (doc.layout) {
    json faces = json::object(), edges = json::object();
    for (int f = 0; f < s.face_count(); ++f) {
      json tri = json::array();
      for (const auto& pt : doc.layout->face_corners[f]) tri.push_back({pt[0], pt[1]});
      faces[s.face_name(f)] = tri;
    }
    for (int e = 0; e < s.edge_count(); ++e)
      edges[s.edge_name(e)] = {doc.layout->edge_anchors[e][0],
                               doc.layout->edge_anchors[e][1]};
    j["layout"] = {{"faces", faces}, {"edges", edges}};
  }
  if (!doc.quads.empty()) {
    json quads = json::array();
    for (const QuadInfo& q : doc.quads)
      quads.push_back({{"faces", {s.face_name(q.face_a), s.face_name(q.face_b)}},
                       {"diagonal", s.edge_name(q.diagonal_edge)}});
    j["quads"] = quads;
  }
  if (!doc.provenance.empty()) j["provenance"] = doc.provenance;
  return j;
}

inline void save(const Document& doc, std::ostream& os) {
  os << to_json(doc).dump(2) << "\n";
}

inline void save(const Document& doc, const std::string& path) {
  if (path == "-") {
    save(doc, std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  save(doc, out);
}

// ------------------------------------------------------------------- load

struct LoadResult {
  Document document;
  ValidationReport validation;
  VerifyResult verification;
};

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& j, const char* key,
                                     const char* what) {
  if (!j.contains(key))
    throw SchemaError(std::string("document is missing key '") + key + "' (" + what + ")");
  return j.at(key);
}

inline std::string require_string(const nlohmann::json& j, const std::string& context) {
  if (!j.is_string()) throw SchemaError(context + ": expected a string");
  return j.get<std::string>();
}

}  // namespace detail

/// Parse and structurally check a document. Unknown references, duplicate
/// names, missing or malformed labels all raise SchemaError naming the
/// offending simplex. Validation and verification reports are attached;
/// with checked=true a failing verification raises.
inline LoadResult load(const nlohmann::json& j, bool checked = true) {
  using nlohmann::json;
  if (!j.is_object()) throw SchemaError("document root must be an object");

  const json& jv = detail::require(j, "vertices", "list of vertex names");
  const json& je = detail::require(j, "edges", "list of {name, verts}");
  const json& jf = detail::require(j, "faces", "list of {name, edges}");
  const json& jl = detail::require(j, "labels", "map simplex name -> note list");
  if (!jv.is_array() || !je.is_array() || !jf.is_array())
    throw SchemaError("vertices/edges/faces must be arrays");

  SimplicialSurface s;
  std::map<std::string, int> vindex, eindex, findex;
  std::map<std::string, SimplexId> by_name;
  for (const auto& item : jv) {
    const std::string name = detail::require_string(item, "vertex name");
    if (by_name.count(name)) throw SchemaError("duplicate simplex name '" + name + "'");
    by_name[name] = vertex_id(s.add_vertex(name));
    vindex[name] = by_name[name].index;
  }
  for (const auto& item : je) {
    if (!item.is_object()) throw SchemaError("edge entries must be objects");
    const std::string name =
        detail::require_string(detail::require(item, "name", "edge name"), "edge name");
    const json& verts = detail::require(item, "verts", "edge endpoints");
    if (!verts.is_array() || verts.size() != 2)
      throw SchemaError("edge " + name + ": verts must list exactly 2 vertices");
    std::array<int, 2> vs{};
    for (int i = 0; i < 2; ++i) {
      const std::string vn = detail::require_string(verts[i], "edge " + name + " vertex");
      if (!vindex.count(vn))
        throw SchemaError("edge " + name + " references missing vertex '" + vn + "'");
      vs[i] = vindex[vn];
    }
    if (by_name.count(name)) throw SchemaError("duplicate simplex name '" + name + "'");
    by_name[name] = edge_id(s.add_edge(name, vs[0], vs[1]));
    eindex[name] = by_name[name].index;
  }
  for (const auto& item : jf) {
    if (!item.is_object()) throw SchemaError("face entries must be objects");
    const std::string name =
        detail::require_string(detail::require(item, "name", "face name"), "face name");
    const json& edges = detail::require(item, "edges", "face edge list");
    if (!edges.is_array() || edges.size() != 3)
      throw SchemaError("face " + name + ": edges must list exactly 3 edges");
    std::array<int, 3> es{};
    for (int i = 0; i < 3; ++i) {
      const std::string en = detail::require_string(edges[i], "face " + name + " edge");
      if (!eindex.count(en))
        throw SchemaError("face " + name + " references missing edge '" + en + "'");
      es[i] = eindex[en];
    }
    if (by_name.count(name)) throw SchemaError("duplicate simplex name '" + name + "'");
    by_name[name] = face_id(s.add_face(name, es[0], es[1], es[2]));
    findex[name] = by_name[name].index;
  }
  s.finalize();

  if (!jl.is_object()) throw SchemaError("labels must be an object");
  std::array<std::vector<PitchMultiset>, 3> labels = {
      std::vector<PitchMultiset>(s.vertex_count()),
      std::vector<PitchMultiset>(s.edge_count()),
      std::vector<PitchMultiset>(s.face_count())};
  std::array<std::vector<char>, 3> seen = {std::vector<char>(s.vertex_count(), 0),
                                           std::vector<char>(s.edge_count(), 0),
                                           std::vector<char>(s.face_count(), 0)};
  for (const auto& [name, notes] : jl.items()) {
    const auto it = by_name.find(name);
    if (it == by_name.end())
      throw SchemaError("label for unknown simplex '" + name + "'");
    if (!notes.is_array())
      throw SchemaError("label of " + name + " must be a list of note names");
    PitchMultiset m;
    for (const auto& note : notes) {
      const std::string text = detail::require_string(note, "label of " + name);
      try {
        m.add(parse_note(text));
      } catch (const ParseError& pe) {
        throw SchemaError("label of " + name + ": " + pe.what());
      }
    }
    labels[it->second.dim][it->second.index] = m;
    seen[it->second.dim][it->second.index] = 1;
  }
  for (int d = 0; d < 3; ++d)
    for (int i = 0; i < s.simplex_count(d); ++i)
      if (!seen[d][i]) throw SchemaError("no label for simplex '" + s.name({d, i}) + "'");

  LoadResult result;
  result.document.tonnetz =
      Tonnetz(std::move(s), std::move(labels[0]), std::move(labels[1]), std::move(labels[2]));
  const SimplicialSurface& surf = result.document.tonnetz.surface();

  if (j.contains("layout")) {
    const json& jlay = j.at("layout");
    Layout layout;
    layout.face_corners.assign(surf.face_count(), {});
    layout.edge_anchors.assign(surf.edge_count(), {0, 0});
    const json& lfaces = detail::require(jlay, "faces", "layout face triangles");
    const json& ledges = detail::require(jlay, "edges", "layout edge anchors");
    for (const auto& [name, tri] : lfaces.items()) {
      if (!findex.count(name)) throw SchemaError("layout for unknown face '" + name + "'");
      if (!tri.is_array() || tri.size() != 3)
        throw SchemaError("layout of face " + name + " must hold 3 points");
      for (int i = 0; i < 3; ++i)
        layout.face_corners[findex[name]][i] = {tri[i].at(0).get<double>(),
                                                tri[i].at(1).get<double>()};
    }
    for (const auto& [name, pt] : ledges.items()) {
      if (!eindex.count(name)) throw SchemaError("layout for unknown edge '" + name + "'");
      layout.edge_anchors[eindex[name]] = {pt.at(0).get<double>(), pt.at(1).get<double>()};
    }
    result.document.layout = std::move(layout);
  }
  if (j.contains("quads")) {
    for (const auto& q : j.at("quads")) {
      const json& faces = detail::require(q, "faces", "quad face pair");
      const std::string diag = detail::require_string(
          detail::require(q, "diagonal", "quad diagonal"), "quad diagonal");
      if (!faces.is_array() || faces.size() != 2)
        throw SchemaError("quad must name exactly 2 faces");
      const std::string fa = detail::require_string(faces[0], "quad face");
      const std::string fb = detail::require_string(faces[1], "quad face");
      if (!findex.count(fa) || !findex.count(fb) || !eindex.count(diag))
        throw SchemaError("quad references unknown simplices");
      result.document.quads.push_back({findex[fa], findex[fb], eindex[diag]});
    }
  }
  if (j.contains("provenance"))
    result.document.provenance = detail::require_string(j.at("provenance"), "provenance");

  result.validation = validate(surf);
  result.verification = verify(result.document.tonnetz);
  if (checked && !result.validation.ok)
    throw VerificationError("document is not a closed surface: " +
                            result.validation.issues.front().message);
  if (checked && !result.verification.ok)
    throw VerificationError("document does not verify: " +
                            result.verification.failures.front().message);
  return result;
}

inline LoadResult load_stream(std::istream& is, bool checked = true) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaError(std::string("malformed JSON: ") + ex.what());
  }
  return load(j, checked);
}

inline LoadResult load_file(const std::string& path, bool checked = true) {
  if (path == "-") return load_stream(std::cin, checked);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return load_stream(in, checked);
}

// ------------------------------------------------------- structured report

inline nlohmann::json inventory_to_json(const Inventory& inv) {
  using nlohmann::json;
  json j;
  j["faces"] = json::array();
  for (const auto& f : inv.faces) {
    json notes = json::array();
    for (PitchClass p : f.label.expand()) notes.push_back(print_note(p));
    j["faces"].push_back({{"name", f.name}, {"notes", notes}, {"chord", f.chord.str()}});
  }
  j["distinct_face_chords"] = json::array();
  for (const auto& q : inv.distinct_face_chords)
    j["distinct_face_chords"].push_back(q.str());
  j["edges"] = json::array();
  for (const auto& e : inv.edges) {
    json notes = json::array();
    for (PitchClass p : e.label.expand()) notes.push_back(print_note(p));
    j["edges"].push_back({{"name", e.name}, {"notes", notes}});
  }
  j["vertices_by_valency"] = json::object();
  for (const auto& [valency, vs] : inv.vertices_by_valency) {
    json arr = json::array();
    for (const auto& v : vs) {
      json notes = json::array();
      for (PitchClass p : v.label.expand()) notes.push_back(print_note(p));
      arr.push_back({{"name", v.name}, {"notes", notes}, {"chord", v.chord.str()}});
    }
    j["vertices_by_valency"][std::to_string(valency)] = arr;
  }
  j["omitted"] = json::array();
  for (PitchClass p : inv.omitted) j["omitted"].push_back(print_note(p));
  return j;
}

inline nlohmann::json section7_to_json(const Section7Table& table) {
  using nlohmann::json;
  json j;
  j["columns"] = table.columns;
  j["rows"] = json::array();
  for (const auto& row : table.rows) {
    json cells = json::array();
    for (const auto& cell : row.cells) cells.push_back(cell);
    j["rows"].push_back({{"label", row.label}, {"cells", cells}});
  }
  return j;
}

// ---------------------------------------------------------------- exports

/// Dual graph: one node per face labelled with its chord, one link per edge
/// labelled with the edge notes.
inline void export_dot(const Tonnetz& t, std::ostream& os) {
  const SimplicialSurface& s = t.surface();
  os << "graph tonnetz_dual {\n";
  os << "  node [shape=ellipse];\n";
  for (int f = 0; f < s.face_count(); ++f) {
    os << "  \"" << s.face_name(f) << "\" [label=\""
       << classify(t.label(face_id(f))).str() << "\"];\n";
  }
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& cof = s.edge_faces(e);
    if (cof.size() != 2) continue;
    std::string notes;
    for (PitchClass p : t.label(edge_id(e)).support()) {
      if (!notes.empty()) notes += " ";
      notes += print_note(p);
    }
    os << "  \"" << s.face_name(cof[0]) << "\" -- \"" << s.face_name(cof[1])
       << "\" [label=\"" << notes << "\"];\n";
  }
  os << "}\n";
}

/// Fundamental-domain net: one polygon per face, one text label per edge at
/// its anchor. Requires layout hints (catalog metadata carried in the
/// document).
inline void export_svg(const Tonnetz& t, const Layout& layout, std::ostream& os) {
  const SimplicialSurface& s = t.surface();
  if (static_cast<int>(layout.face_corners.size()) != s.face_count() ||
      static_cast<int>(layout.edge_anchors.size()) != s.edge_count())
    throw std::invalid_argument("layout does not match the complex");

  double min_x = 1e30, min_y = 1e30, max_x = -1e30, max_y = -1e30;
  for (const auto& tri : layout.face_corners)
    for (const auto& p : tri) {
      min_x = std::min(min_x, p[0]);
      max_x = std::max(max_x, p[0]);
      min_y = std::min(min_y, p[1]);
      max_y = std::max(max_y, p[1]);
    }
  const double scale = 96.0, margin = 28.0;
  auto X = [&](double x) { return margin + (x - min_x) * scale; };
  auto Y = [&](double y) { return margin + (max_y - y) * scale; };
  const double width = 2 * margin + (max_x - min_x) * scale;
  const double height = 2 * margin + (max_y - min_y) * scale;

  std::ostringstream body;
  body << std::fixed << std::setprecision(2);
  for (int f = 0; f < s.face_count(); ++f) {
    const auto& tri = layout.face_corners[f];
    body << "  <polygon points=\"";
    for (int i = 0; i < 3; ++i)
      body << (i ? " " : "") << X(tri[i][0]) << "," << Y(tri[i][1]);
    body << "\" fill=\"#f7f3e3\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  for (int e = 0; e < s.edge_count(); ++e) {
    std::string notes;
    for (PitchClass p : t.label(edge_id(e)).support()) {
      if (!notes.empty()) notes += " ";
      notes += print_note(p);
    }
    const auto& a = layout.edge_anchors[e];
    body << "  <text x=\"" << X(a[0]) << "\" y=\"" << Y(a[1])
         << "\" font-size=\"13\" font-family=\"sans-serif\" text-anchor=\"middle\" "
            "dominant-baseline=\"middle\" fill=\"#7a1f1f\">"
         << notes << "</text>\n";
  }

  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
     << "\">\n";
  os << body.str();
  os << "</svg>\n";
}

}  // namespace tonnetz
