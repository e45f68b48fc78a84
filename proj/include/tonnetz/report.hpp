#pragma once

// Chord inventories, coverage summaries, and the four-column overview table
// for the b2/c2/g2 family.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tonnetz/catalog.hpp"
#include "tonnetz/tonnetz.hpp"

namespace tonnetz {

struct Inventory {
  struct FaceEntry {
    std::string name;
    PitchMultiset label;
    ChordQuality chord;
  };
  struct EdgeEntry {
    std::string name;
    PitchMultiset label;
  };
  struct VertexEntry {
    std::string name;
    PitchMultiset label;
    ChordQuality chord;  // of the support
  };

  std::vector<FaceEntry> faces;
  std::vector<EdgeEntry> edges;
  std::map<int, std::vector<VertexEntry>> vertices_by_valency;
  std::map<ChordQuality, int> face_census;
  std::vector<ChordQuality> distinct_face_chords;
  std::vector<PitchClass> omitted;  // pitch classes appearing on no edge
};

inline Inventory inventory(const Tonnetz& t) {
  Inventory inv;
  const auto& s = t.surface();
  for (int f = 0; f < s.face_count(); ++f) {
    const auto& m = t.label(face_id(f));
    inv.faces.push_back({s.face_name(f), m, classify(m)});
    ++inv.face_census[classify(m)];
  }
  for (const auto& [q, n] : inv.face_census) inv.distinct_face_chords.push_back(q);
  for (int e = 0; e < s.edge_count(); ++e)
    inv.edges.push_back({s.edge_name(e), t.label(edge_id(e))});
  for (int v = 0; v < s.vertex_count(); ++v) {
    const auto& m = t.label(vertex_id(v));
    inv.vertices_by_valency[s.valency(v)].push_back({s.vertex_name(v), m, classify(m)});
  }
  inv.omitted = detail::omitted_notes(t);
  return inv;
}

inline std::string render_note_list(const std::vector<PitchClass>& notes) {
  std::string out;
  for (PitchClass p : notes) {
    if (!out.empty()) out += ",";
    out += print_note(p);
  }
  return out;
}

/// "all 12" for the full gamut, otherwise "all but ..." over the complement.
inline std::string render_gamut(const std::vector<PitchClass>& present) {
  if (present.size() == kPitchClasses) return "all 12";
  std::vector<PitchClass> missing;
  std::array<bool, kPitchClasses> has{};
  for (PitchClass p : present) has[p.value] = true;
  for (int v = 0; v < kPitchClasses; ++v)
    if (!has[v]) missing.push_back(PitchClass(v));
  return "all but " + render_note_list(missing);
}

inline std::string render_inventory(const Inventory& inv) {
  std::ostringstream os;
  os << "faces (" << inv.faces.size() << "):\n";
  for (const auto& f : inv.faces)
    os << "  " << f.name << "  " << f.label.str() << "  " << f.chord.str() << "\n";
  os << "distinct face chords:";
  for (const auto& q : inv.distinct_face_chords) os << " " << q.str() << ";";
  os << "\nedges (" << inv.edges.size() << "):\n";
  for (const auto& e : inv.edges) os << "  " << e.name << "  " << e.label.str() << "\n";
  for (const auto& [valency, vs] : inv.vertices_by_valency) {
    os << "vertices of valency " << valency << " (" << vs.size() << "):\n";
    for (const auto& v : vs)
      os << "  " << v.name << "  " << v.label.str() << "  " << v.chord.str() << "\n";
  }
  os << "omitted pitch classes: "
     << (inv.omitted.empty() ? std::string("none") : render_note_list(inv.omitted)) << "\n";
  return os.str();
}

/// The overview table over b2, c2, g2, g2_dual. Cell contents are kept
/// structured (sorted line lists) so they can be compared order-normalized;
/// render_section7 produces the aligned text.
struct Section7Table {
  std::array<std::string, 4> columns;
  struct Row {
    std::string label;
    std::array<std::vector<std::string>, 4> cells;
  };
  std::vector<Row> rows;
};

inline Section7Table section7_table() {
  Section7Table table;
  table.columns = {"b2 (A,F)", "c2 (A,F)", "g2 (A,D)", "g2_dual (D,A)"};
  const std::array<CatalogKey, 4> keys = {CatalogKey::b2, CatalogKey::c2, CatalogKey::g2,
                                          CatalogKey::g2_dual};
  std::array<Inventory, 4> invs;
  for (int c = 0; c < 4; ++c) invs[c] = inventory(build(keys[c]).tonnetz);

  auto chord_lines = [](const Inventory& inv, ChordQuality::Tag tag) {
    std::vector<std::string> out;
    for (const auto& q : inv.distinct_face_chords)
      if (q.tag == tag) out.push_back(q.str());
    return out;
  };
  auto vertex_lines = [](const Inventory& inv, int valency, ChordQuality::Tag tag) {
    std::vector<std::string> out;
    const auto it = inv.vertices_by_valency.find(valency);
    if (it == inv.vertices_by_valency.end()) return out;
    std::set<std::string> distinct;
    for (const auto& v : it->second)
      if (v.chord.tag == tag) distinct.insert(render_note_list(v.label.support()));
    out.assign(distinct.begin(), distinct.end());
    return out;
  };
  auto vertex_gamut_lines = [](const Inventory& inv, int valency) {
    std::vector<std::string> out;
    const auto it = inv.vertices_by_valency.find(valency);
    if (it == inv.vertices_by_valency.end()) return out;
    std::set<std::string> distinct;
    for (const auto& v : it->second) distinct.insert(render_gamut(v.label.support()));
    out.assign(distinct.begin(), distinct.end());
    return out;
  };

  Section7Table::Row majors{"major triads (faces)", {}};
  Section7Table::Row minors{"minor triads (faces)", {}};
  Section7Table::Row edges{"all edges", {}};
  Section7Table::Row augmented{"augmented triads (valence-6 vertices)", {}};
  Section7Table::Row dim7{"diminished sevenths (valence-4 vertices)", {}};
  Section7Table::Row val8{"other (valence-8 vertices)", {}};
  Section7Table::Row val12{"other (valence-12 vertices)", {}};
  for (int c = 0; c < 4; ++c) {
    const Inventory& inv = invs[c];
    majors.cells[c] = chord_lines(inv, ChordQuality::Tag::Major);
    minors.cells[c] = chord_lines(inv, ChordQuality::Tag::Minor);
    std::vector<PitchClass> present;
    std::array<bool, kPitchClasses> has{};
    for (const auto& e : inv.edges)
      for (PitchClass p : e.label.support()) has[p.value] = true;
    for (int v = 0; v < kPitchClasses; ++v)
      if (has[v]) present.push_back(PitchClass(v));
    edges.cells[c] = {render_gamut(present)};
    augmented.cells[c] = vertex_lines(inv, 6, ChordQuality::Tag::Augmented);
    dim7.cells[c] = vertex_lines(inv, 4, ChordQuality::Tag::DiminishedSeventh);
    val8.cells[c] = vertex_gamut_lines(inv, 8);
    val12.cells[c] = vertex_gamut_lines(inv, 12);
  }
  table.rows = {majors, minors, edges, augmented, dim7, val8, val12};
  return table;
}

inline std::string render_section7(const Section7Table& table) {
  std::array<std::size_t, 5> width = {0, 0, 0, 0, 0};
  for (const auto& row : table.rows) width[0] = std::max(width[0], row.label.size());
  for (int c = 0; c < 4; ++c) {
    width[c + 1] = table.columns[c].size();
    for (const auto& row : table.rows)
      for (const auto& line : row.cells[c]) width[c + 1] = std::max(width[c + 1], line.size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  os << pad("", width[0]);
  for (int c = 0; c < 4; ++c) os << " | " << pad(table.columns[c], width[c + 1]);
  os << "\n";
  os << std::string(width[0], '-');
  for (int c = 0; c < 4; ++c) os << "-+-" << std::string(width[c + 1], '-');
  os << "\n";
  for (const auto& row : table.rows) {
    std::size_t lines = 1;
    for (const auto& cell : row.cells) lines = std::max(lines, cell.size());
    for (std::size_t l = 0; l < lines; ++l) {
      os << pad(l == 0 ? row.label : "", width[0]);
      for (int c = 0; c < 4; ++c)
        os << " | " << pad(l < row.cells[c].size() ? row.cells[c][l] : "", width[c + 1]);
      os << "\n";
    }
  }
  return os.str();
}

/// Union face-chord coverage over several tonnetzes.
struct Coverage {
  std::map<ChordQuality, int> face_chords;
  bool all_majors = false;
  bool all_minors = false;
  bool complete_major_minor = false;
};

inline Coverage completeness(const std::vector<Tonnetz>& ts) {
  Coverage cov;
  for (const Tonnetz& t : ts)
    for (int f = 0; f < t.surface().face_count(); ++f)
      ++cov.face_chords[classify(t.label(face_id(f)))];
  cov.all_majors = cov.all_minors = true;
  for (int r = 0; r < kPitchClasses; ++r) {
    if (!cov.face_chords.count({ChordQuality::Tag::Major, PitchClass(r)}))
      cov.all_majors = false;
    if (!cov.face_chords.count({ChordQuality::Tag::Minor, PitchClass(r)}))
      cov.all_minors = false;
  }
  cov.complete_major_minor = cov.all_majors && cov.all_minors;
  return cov;
}

}  // namespace tonnetz
