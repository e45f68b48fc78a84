#pragma once

// Built-in tonnetz constructions. Each builder embeds its gluing data as an
// explicit combinatorial table, locked by construction-time assertions,
// returns a verified Tonnetz, and carries layout hints for the SVG net
// exporter plus the facts the construction is expected to satisfy.

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tonnetz/tonnetz.hpp"

namespace tonnetz {

enum class CatalogKey {
  euler,
  b2,
  b2_up2,
  b2_down2,
  c2,
  c2_up2,
  c2_down2,
  g2,
  g2_dual,
  tritone1,
  tritone2,
  bauble,
  tetra_dim,
};

inline const std::vector<std::pair<CatalogKey, std::string>>& catalog_key_names() {
  static const std::vector<std::pair<CatalogKey, std::string>> kNames = {
      {CatalogKey::euler, "euler"},         {CatalogKey::b2, "b2"},
      {CatalogKey::b2_up2, "b2_up2"},       {CatalogKey::b2_down2, "b2_down2"},
      {CatalogKey::c2, "c2"},               {CatalogKey::c2_up2, "c2_up2"},
      {CatalogKey::c2_down2, "c2_down2"},   {CatalogKey::g2, "g2"},
      {CatalogKey::g2_dual, "g2_dual"},     {CatalogKey::tritone1, "tritone1"},
      {CatalogKey::tritone2, "tritone2"},   {CatalogKey::bauble, "bauble"},
      {CatalogKey::tetra_dim, "tetra_dim"},
  };
  return kNames;
}

inline std::string catalog_key_name(CatalogKey k) {
  for (const auto& [key, name] : catalog_key_names())
    if (key == k) return name;
  throw std::invalid_argument("unknown catalog key");
}

inline std::optional<CatalogKey> parse_catalog_key(const std::string& name) {
  for (const auto& [key, n] : catalog_key_names())
    if (n == name) return key;
  return std::nullopt;
}

/// 2D net hints for rendering: one triangle per face (boundary simplices may
/// appear at several net positions; each face uses the copy it was drawn at)
/// and one label anchor per edge.
struct Layout {
  std::vector<std::array<std::array<double, 2>, 3>> face_corners;
  std::vector<std::array<double, 2>> edge_anchors;
};

/// A folded-in-half equilateral of the bauble: two faces sharing a diagonal
/// edge; the five edges involved spell a major ninth chord.
struct QuadInfo {
  int face_a = 0, face_b = 0;
  int diagonal_edge = 0;
};

struct SymmetryFact {
  Interval k;
  bool exists = true;
  std::optional<int> order;  // when set, some realizing automorphism has this order
};

struct ExpectedFacts {
  std::array<int, 3> f_vector{};  // vertices, edges, faces
  int euler_characteristic = 0;
  std::vector<std::pair<ChordQuality, int>> face_chords;   // census, sorted
  std::vector<std::pair<PitchMultiset, int>> vertex_labels;  // census, sorted
  std::optional<std::vector<PitchClass>> omitted;  // pitch classes on no edge
  std::vector<SymmetryFact> symmetries;
  std::optional<TonnetzKind> kind_flags;

  ExpectedFacts transposed(Interval k) const {
    ExpectedFacts out = *this;
    std::map<ChordQuality, int> fc;
    for (const auto& [q, n] : face_chords) fc[q.shifted(k)] += n;
    out.face_chords.assign(fc.begin(), fc.end());
    std::map<PitchMultiset, int> vl;
    for (const auto& [m, n] : vertex_labels) vl[m.transposed(k)] += n;
    out.vertex_labels.assign(vl.begin(), vl.end());
    if (omitted) {
      std::vector<PitchClass> om;
      for (PitchClass p : *omitted) om.push_back(p + k);
      std::sort(om.begin(), om.end());
      out.omitted = om;
    }
    return out;
  }
};

struct CatalogEntry {
  CatalogKey key{};
  std::string name;
  Tonnetz tonnetz;
  std::string provenance;
  ExpectedFacts expected;
  Layout layout;
  std::vector<QuadInfo> quads;  // bauble only
};

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::map<ChordQuality, int> face_chord_census(const Tonnetz& t) {
  std::map<ChordQuality, int> out;
  for (int f = 0; f < t.surface().face_count(); ++f)
    ++out[classify(t.label(face_id(f)))];
  return out;
}

inline std::map<PitchMultiset, int> vertex_label_census(const Tonnetz& t) {
  std::map<PitchMultiset, int> out;
  for (int v = 0; v < t.surface().vertex_count(); ++v) ++out[t.label(vertex_id(v))];
  return out;
}

inline std::vector<PitchClass> omitted_notes(const Tonnetz& t) {
  std::array<bool, kPitchClasses> seen{};
  for (int e = 0; e < t.surface().edge_count(); ++e)
    for (PitchClass p : t.label(edge_id(e)).support()) seen[p.value] = true;
  std::vector<PitchClass> out;
  for (int v = 0; v < kPitchClasses; ++v)
    if (!seen[v]) out.push_back(PitchClass(v));
  return out;
}

}  // namespace detail

/// Check a built entry against its embedded facts; throws CatalogError with
/// the violated fact. Guards against transcription slips in the tables.
inline void check_expected(const CatalogEntry& entry) {
  const Tonnetz& t = entry.tonnetz;
  const auto& ex = entry.expected;
  auto fail = [&entry](const std::string& what) {
    throw CatalogError("catalog entry " + entry.name + ": " + what);
  };

  const auto vrep = validate(t.surface());
  if (!vrep.ok) fail("surface does not validate: " + vrep.issues.front().message);
  if (!verify(t).ok) fail("tonnetz does not verify");

  const std::array<int, 3> fv = {t.surface().vertex_count(), t.surface().edge_count(),
                                 t.surface().face_count()};
  if (fv != ex.f_vector)
    fail("f-vector (" + std::to_string(fv[0]) + "," + std::to_string(fv[1]) + "," +
         std::to_string(fv[2]) + ") != expected");
  if (t.surface().euler_characteristic() != ex.euler_characteristic)
    fail("euler characteristic mismatch");

  if (!ex.face_chords.empty()) {
    const auto census = detail::face_chord_census(t);
    std::map<ChordQuality, int> want(ex.face_chords.begin(), ex.face_chords.end());
    if (census != want) {
      std::string got;
      for (const auto& [q, n] : census) got += q.str() + " x" + std::to_string(n) + "; ";
      fail("face chords differ: got " + got);
    }
  }
  if (!ex.vertex_labels.empty()) {
    const auto census = detail::vertex_label_census(t);
    std::map<PitchMultiset, int> want(ex.vertex_labels.begin(), ex.vertex_labels.end());
    if (census != want) {
      std::string got;
      for (const auto& [m, n] : census) got += m.str() + " x" + std::to_string(n) + "; ";
      fail("vertex labels differ: got " + got);
    }
  }
  if (ex.omitted && detail::omitted_notes(t) != *ex.omitted) fail("omitted-note set differs");

  if (!ex.symmetries.empty()) {
    for (const auto& sf : ex.symmetries) {
      const auto syms = find_transposition_symmetries(t, sf.k);
      if (sf.exists != !syms.empty())
        fail("transposition symmetry k=" + std::to_string(sf.k.semitones) +
             (sf.exists ? " missing" : " unexpectedly present"));
      if (sf.order) {
        bool found = false;
        for (const auto& phi : syms)
          if (phi.order() == *sf.order) found = true;
        if (!found)
          fail("no k=" + std::to_string(sf.k.semitones) + " symmetry of order " +
               std::to_string(*sf.order));
      }
    }
  }

  if (ex.kind_flags) {
    const TonnetzKind k = kind(t);
    const TonnetzKind& w = *ex.kind_flags;
    if (k.is_vertex_tonnetz != w.is_vertex_tonnetz || k.is_edge_tonnetz != w.is_edge_tonnetz ||
        k.is_major != w.is_major || k.is_minor != w.is_minor ||
        k.is_major_minor != w.is_major_minor ||
        k.is_complete_major_minor != w.is_complete_major_minor)
      fail("kind flags differ");
  }

  // Layout sanity: every edge's label anchor must be the midpoint of a side
  // of some incident face's net triangle.
  const auto& s = t.surface();
  if (static_cast<int>(entry.layout.face_corners.size()) != s.face_count() ||
      static_cast<int>(entry.layout.edge_anchors.size()) != s.edge_count())
    fail("layout does not cover the complex");
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& a = entry.layout.edge_anchors[e];
    bool on_side = false;
    for (int f : s.edge_faces(e)) {
      const auto& tri = entry.layout.face_corners[f];
      for (int i = 0; i < 3 && !on_side; ++i) {
        const auto& p = tri[i];
        const auto& q = tri[(i + 1) % 3];
        const double mx = (p[0] + q[0]) / 2, my = (p[1] + q[1]) / 2;
        on_side = std::abs(mx - a[0]) < 1e-6 && std::abs(my - a[1]) < 1e-6;
      }
    }
    if (!on_side)
      fail("edge anchor of " + s.edge_name(e) + " sits on no incident net triangle");
  }
}

namespace detail {

inline SimplicialSurface make_surface(int nv, const std::vector<std::array<int, 2>>& edges,
                                      const std::vector<std::array<int, 3>>& faces) {
  SimplicialSurface s;
  for (int i = 0; i < nv; ++i) s.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 0; i < edges.size(); ++i)
    s.add_edge("e" + std::to_string(i), edges[i][0], edges[i][1]);
  for (std::size_t i = 0; i < faces.size(); ++i)
    s.add_face("f" + std::to_string(i), faces[i][0], faces[i][1], faces[i][2]);
  s.finalize();
  return s;
}

inline std::vector<PitchClass> pcs(std::initializer_list<int> vals) {
  std::vector<PitchClass> out;
  for (int v : vals) out.push_back(PitchClass(v));
  return out;
}

inline std::pair<ChordQuality, int> major_x(int root, int n) {
  return {{ChordQuality::Tag::Major, PitchClass(root)}, n};
}
inline std::pair<ChordQuality, int> minor_x(int root, int n) {
  return {{ChordQuality::Tag::Minor, PitchClass(root)}, n};
}

// -------------------------------------------------------------- square tori

// Square-with-center fundamental domain, eight 45-45-90 alcoves. Vertices:
// center, glued corner, top/bottom side midpoint, left/right side midpoint.
inline CatalogEntry build_b2() {
  const std::vector<std::array<int, 2>> edges = {
      {0, 1}, {0, 2}, {0, 1}, {0, 3}, {0, 1}, {0, 2},  // spokes ul,u,ur,r,dr,d
      {0, 1}, {0, 3},                                  // spokes dl,l
      {1, 2}, {2, 1}, {1, 3}, {3, 1},                  // boundary tl,tr,lu,ll
  };
  const std::vector<std::array<int, 3>> faces = {
      {0, 8, 1}, {1, 9, 2}, {2, 10, 3}, {3, 11, 4},
      {4, 9, 5}, {5, 8, 6}, {6, 11, 7}, {7, 10, 0},
  };
  // Ab C F A D F# B Eb around the center; Eb A C F# on the boundary.
  const std::vector<PitchClass> notes =
      pcs({11, 3, 8, 0, 5, 9, 2, 6, 6, 0, 3, 9});

  CatalogEntry entry;
  entry.key = CatalogKey::b2;
  entry.name = "b2";
  entry.provenance =
      "major edge labelling of the square-with-center torus (8 alcoves); "
      "Dynkin pair A,F";
  entry.tonnetz = from_edge_map(make_surface(4, edges, faces), notes);

  entry.expected.f_vector = {4, 12, 8};
  entry.expected.euler_characteristic = 0;
  entry.expected.face_chords = {major_x(8, 2), major_x(11, 2), major_x(2, 2), major_x(5, 2)};
  entry.expected.vertex_labels = {
      {PitchMultiset::of_values({0, 2, 3, 5, 6, 8, 9, 11}), 2},
      {PitchMultiset::of_values({0, 3, 6, 9}), 2},
  };
  entry.expected.omitted = pcs({1, 4, 7, 10});
  entry.expected.symmetries = {{Interval(1), false, {}},
                               {Interval(3), true, 4},
                               {Interval(6), true, 2}};
  TonnetzKind k;
  k.is_edge_tonnetz = true;
  k.is_major = true;
  k.is_major_minor = true;
  entry.expected.kind_flags = k;

  auto P = [](double x, double y) { return std::array<double, 2>{x, y}; };
  const auto O = P(1, 1), TL = P(0, 2), T = P(1, 2), TR = P(2, 2), R = P(2, 1),
             BR = P(2, 0), B = P(1, 0), BL = P(0, 0), L = P(0, 1);
  entry.layout.face_corners = {{O, TL, T}, {O, T, TR}, {O, TR, R}, {O, R, BR},
                               {O, BR, B}, {O, B, BL}, {O, BL, L}, {O, L, TL}};
  entry.layout.edge_anchors = {P(0.5, 1.5), P(1, 1.5), P(1.5, 1.5), P(1.5, 1),
                               P(1.5, 0.5), P(1, 0.5), P(0.5, 0.5), P(0.5, 1),
                               P(0.5, 2),   P(1.5, 2), P(0, 1.5),   P(0, 0.5)};
  return entry;
}

// Same complex shape, rotated 45 degrees; the triads come out minor.
inline CatalogEntry build_c2() {
  const std::vector<std::array<int, 2>> edges = {
      {0, 1}, {0, 1}, {0, 1}, {0, 1},  // spokes to the glued corner: t,r,b,l
      {0, 2}, {0, 3}, {0, 2}, {0, 3},  // spokes to side midpoints: ne,se,sw,nw
      {1, 2}, {2, 1}, {1, 3}, {3, 1},  // boundary
  };
  const std::vector<std::array<int, 3>> faces = {
      {0, 8, 4}, {4, 9, 1}, {1, 10, 5}, {5, 11, 2},
      {2, 9, 6}, {6, 8, 3}, {3, 11, 7}, {7, 10, 0},
  };
  // C A F# Eb (corner spokes), F D B Ab (midpoint spokes), Ab D F B (boundary).
  const std::vector<PitchClass> notes =
      pcs({3, 0, 9, 6, 8, 5, 2, 11, 11, 5, 8, 2});

  CatalogEntry entry;
  entry.key = CatalogKey::c2;
  entry.name = "c2";
  entry.provenance =
      "minor edge labelling of the square-with-center torus, long/short sides "
      "swapped relative to b2; Dynkin pair A,F";
  entry.tonnetz = from_edge_map(make_surface(4, edges, faces), notes);

  entry.expected.f_vector = {4, 12, 8};
  entry.expected.euler_characteristic = 0;
  entry.expected.face_chords = {minor_x(5, 2), minor_x(8, 2), minor_x(11, 2), minor_x(2, 2)};
  entry.expected.vertex_labels = {
      {PitchMultiset::of_values({0, 2, 3, 5, 6, 8, 9, 11}), 2},
      {PitchMultiset::of_values({2, 5, 8, 11}), 2},
  };
  entry.expected.omitted = pcs({1, 4, 7, 10});
  entry.expected.symmetries = {{Interval(1), false, {}},
                               {Interval(3), true, 4},
                               {Interval(6), true, 2}};
  TonnetzKind k;
  k.is_edge_tonnetz = true;
  k.is_minor = true;
  k.is_major_minor = true;
  entry.expected.kind_flags = k;

  auto P = [](double x, double y) { return std::array<double, 2>{x, y}; };
  const auto O = P(0, 0), T = P(0, 2), R = P(2, 0), B = P(0, -2), L = P(-2, 0),
             NE = P(1, 1), SE = P(1, -1), SW = P(-1, -1), NW = P(-1, 1);
  entry.layout.face_corners = {{O, T, NE}, {O, NE, R}, {O, R, SE}, {O, SE, B},
                               {O, B, SW}, {O, SW, L}, {O, L, NW}, {O, NW, T}};
  entry.layout.edge_anchors = {P(0, 1),      P(1, 0),      P(0, -1),     P(-1, 0),
                               P(0.5, 0.5),  P(0.5, -0.5), P(-0.5, -0.5), P(-0.5, 0.5),
                               P(0.5, 1.5),  P(1.5, 0.5),  P(1.5, -0.5), P(0.5, -1.5)};
  return entry;
}

// ---------------------------------------------------------- hexagonal tori

// Twelve-alcove hexagon: spokes run through the circle of fifths, opposite
// hexagon sides are glued. K1/K2 are the two corner classes, M* the three
// side-midpoint classes.
inline CatalogEntry build_g2_like(bool dual) {
  // vertices: 0 center, 1 K1, 2 K2, 3 M14, 4 M25, 5 M36
  const std::vector<std::array<int, 2>> edges = {
      {0, 1}, {0, 3}, {0, 2}, {0, 4}, {0, 1}, {0, 5},
      {0, 2}, {0, 3}, {0, 1}, {0, 4}, {0, 2}, {0, 5},
      {1, 3}, {3, 2}, {2, 4}, {4, 1}, {1, 5}, {2, 5},
  };
  const std::vector<std::array<int, 3>> faces = {
      {0, 12, 1}, {1, 13, 2}, {2, 14, 3},  {3, 15, 4},  {4, 16, 5},   {5, 17, 6},
      {6, 13, 7}, {7, 12, 8}, {8, 15, 9},  {9, 14, 10}, {10, 17, 11}, {11, 16, 0},
  };
  // Spokes around the circle of fifths starting from the left corner; then
  // the six glued boundary edges.
  const std::vector<PitchClass> g2_notes =
      pcs({1, 8, 3, 10, 5, 0, 7, 2, 9, 4, 11, 6, 5, 11, 7, 1, 9, 3});
  const std::vector<PitchClass> dual_notes =
      pcs({8, 3, 10, 5, 0, 7, 2, 9, 4, 11, 6, 1, 0, 6, 2, 8, 4, 10});

  CatalogEntry entry;
  entry.key = dual ? CatalogKey::g2_dual : CatalogKey::g2;
  entry.name = dual ? "g2_dual" : "g2";
  entry.provenance =
      dual ? "dual major/minor edge labelling of the 12-alcove hexagonal torus; "
             "Dynkin pair D,A"
           : "major/minor edge labelling of the 12-alcove hexagonal torus along "
             "the circle of fifths; Dynkin pair A,D";
  entry.tonnetz =
      from_edge_map(make_surface(6, edges, faces), dual ? dual_notes : g2_notes);

  entry.expected.f_vector = {6, 18, 12};
  entry.expected.euler_characteristic = 0;
  if (!dual) {
    entry.expected.face_chords = {major_x(5, 1),  major_x(7, 1),  major_x(9, 1),
                                  major_x(11, 1), major_x(1, 1),  major_x(3, 1),
                                  minor_x(0, 1),  minor_x(2, 1),  minor_x(4, 1),
                                  minor_x(6, 1),  minor_x(8, 1),  minor_x(10, 1)};
    entry.expected.vertex_labels = {
        {PitchMultiset::of_values({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}), 1},
        {PitchMultiset::of_values({1, 1, 5, 5, 9, 9}), 1},
        {PitchMultiset::of_values({3, 3, 7, 7, 11, 11}), 1},
        {PitchMultiset::of_values({2, 5, 8, 11}), 1},
        {PitchMultiset::of_values({1, 4, 7, 10}), 1},
        {PitchMultiset::of_values({0, 3, 6, 9}), 1},
    };
  } else {
    entry.expected.face_chords = {major_x(0, 1),  major_x(2, 1),  major_x(4, 1),
                                  major_x(6, 1),  major_x(8, 1),  major_x(10, 1),
                                  minor_x(5, 1),  minor_x(7, 1),  minor_x(9, 1),
                                  minor_x(11, 1), minor_x(1, 1),  minor_x(3, 1)};
    entry.expected.vertex_labels = {
        {PitchMultiset::of_values({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}), 1},
        {PitchMultiset::of_values({0, 0, 4, 4, 8, 8}), 1},
        {PitchMultiset::of_values({2, 2, 6, 6, 10, 10}), 1},
        {PitchMultiset::of_values({0, 3, 6, 9}), 1},
        {PitchMultiset::of_values({2, 5, 8, 11}), 1},
        {PitchMultiset::of_values({1, 4, 7, 10}), 1},
    };
  }
  entry.expected.omitted = std::vector<PitchClass>{};
  entry.expected.symmetries = {{Interval(2), true, 6},
                               {Interval(4), true, 3},
                               {Interval(6), true, 2}};
  TonnetzKind k;
  k.is_edge_tonnetz = true;
  k.is_major_minor = true;
  entry.expected.kind_flags = k;

  // Net: corners at radius 2, side midpoints at radius sqrt(3), boundary
  // points in spoke order counterclockwise from the left corner.
  const double pi = 3.14159265358979323846;
  std::array<std::array<double, 2>, 12> ring;
  for (int i = 0; i < 12; ++i) {
    const double ang = pi - i * pi / 6.0;
    const double r = (i % 2 == 0) ? 2.0 : std::sqrt(3.0);
    ring[i] = {r * std::cos(ang), r * std::sin(ang)};
  }
  entry.layout.face_corners.resize(12);
  for (int i = 0; i < 12; ++i)
    entry.layout.face_corners[i] = {std::array<double, 2>{0, 0}, ring[i], ring[(i + 1) % 12]};
  entry.layout.edge_anchors.resize(18);
  for (int i = 0; i < 12; ++i)
    entry.layout.edge_anchors[i] = {ring[i][0] / 2, ring[i][1] / 2};
  // boundary edge 12+i is the outer side of face i, between ring points i, i+1
  for (int i = 0; i < 6; ++i) {
    const auto& a = ring[i];
    const auto& b = ring[i + 1];
    entry.layout.edge_anchors[12 + i] = {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
  }
  return entry;
}

// ------------------------------------------------------- tritone labellings

// Six triangles around one vertex; every edge carries a tritone pair and the
// faces are the major triads rooted on a whole-tone scale.
inline CatalogEntry build_tritone1() {
  const std::vector<std::array<int, 2>> edges = {
      {0, 1}, {0, 2}, {0, 2}, {0, 1}, {0, 1}, {0, 2}, {2, 1}, {1, 2}, {1, 2},
  };
  const std::vector<std::array<int, 3>> faces = {
      {0, 7, 2}, {2, 6, 4}, {4, 8, 1}, {1, 7, 3}, {3, 6, 5}, {5, 8, 0},
  };
  const std::array<std::array<int, 2>, 9> edge_notes = {
      {{0, 6}, {0, 6}, {2, 8}, {2, 8}, {4, 10}, {4, 10}, {5, 11}, {3, 9}, {1, 7}}};
  const std::array<std::array<int, 3>, 6> face_notes = {
      {{8, 0, 3}, {10, 2, 5}, {0, 4, 7}, {2, 6, 9}, {4, 8, 11}, {6, 10, 1}}};
  const std::array<std::array<int, 6>, 3> vertex_notes = {
      {{0, 2, 4, 6, 8, 10}, {0, 1, 4, 5, 8, 9}, {2, 3, 6, 7, 10, 11}}};

  SimplicialSurface s = make_surface(3, edges, faces);
  std::vector<PitchMultiset> vl(3), el(9), fl(6);
  for (int v = 0; v < 3; ++v)
    for (int n : vertex_notes[v]) vl[v].add(PitchClass(n));
  for (int e = 0; e < 9; ++e)
    for (int n : edge_notes[e]) el[e].add(PitchClass(n));
  for (int f = 0; f < 6; ++f)
    for (int n : face_notes[f]) fl[f].add(PitchClass(n));

  CatalogEntry entry;
  entry.key = CatalogKey::tritone1;
  entry.name = "tritone1";
  entry.provenance = "tritone-edge labelling of the 6-triangle hexagonal torus";
  entry.tonnetz = Tonnetz(std::move(s), std::move(vl), std::move(el), std::move(fl));

  entry.expected.f_vector = {3, 9, 6};
  entry.expected.euler_characteristic = 0;
  entry.expected.face_chords = {major_x(8, 1), major_x(10, 1), major_x(0, 1),
                                major_x(2, 1), major_x(4, 1),  major_x(6, 1)};
  entry.expected.vertex_labels = {
      {PitchMultiset::of_values({0, 2, 4, 6, 8, 10}), 1},
      {PitchMultiset::of_values({0, 1, 4, 5, 8, 9}), 1},
      {PitchMultiset::of_values({2, 3, 6, 7, 10, 11}), 1},
  };
  entry.expected.omitted = std::vector<PitchClass>{};
  entry.expected.symmetries = {{Interval(1), false, {}},
                               {Interval(2), true, {}},
                               {Interval(4), true, {}}};
  TonnetzKind k;
  k.is_major = true;
  k.is_major_minor = true;
  entry.expected.kind_flags = k;

  const double pi = 3.14159265358979323846;
  std::array<std::array<double, 2>, 6> hex;  // L UL UR R LR LL
  const std::array<double, 6> angles = {pi, 2 * pi / 3, pi / 3, 0, -pi / 3, -2 * pi / 3};
  for (int i = 0; i < 6; ++i) hex[i] = {std::cos(angles[i]), std::sin(angles[i])};
  const std::array<double, 2> O = {0, 0};
  const auto &L = hex[0], &UL = hex[1], &UR = hex[2], &R = hex[3], &LR = hex[4],
             &LL = hex[5];
  entry.layout.face_corners = {{O, L, UL},  {O, UL, UR}, {O, UR, R},
                               {O, R, LR},  {O, LR, LL}, {O, LL, L}};
  auto mid = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::array<double, 2>{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
  };
  entry.layout.edge_anchors = {mid(O, L),  mid(O, R),   mid(O, UL),
                               mid(O, LR), mid(O, UR),  mid(O, LL),
                               mid(UL, UR), mid(L, UL), mid(UR, R)};
  return entry;
}

// Twenty-four triangles, same chords four times over, but the notes are
// allocated to vertices differently ("petals"), which changes the symmetries.
inline CatalogEntry build_tritone2() {
  // vertices: 0..6 interior P1..P7, 7 KA, 8 KB, 9 M1, 10 M2, 11 M3
  const std::vector<std::array<int, 2>> edges = {
      // H1..H12
      {8, 10}, {10, 7}, {11, 0}, {0, 1}, {1, 9}, {7, 2},
      {2, 3},  {3, 4},  {4, 8},  {9, 5}, {5, 6}, {6, 11},
      // N1..N12
      {8, 0}, {10, 1}, {7, 9}, {11, 2}, {0, 3}, {1, 4},
      {9, 8}, {2, 5},  {3, 6}, {4, 11}, {5, 10}, {6, 7},
      // W1..W12
      {8, 11}, {10, 0}, {7, 1}, {11, 7}, {0, 2}, {1, 3},
      {9, 4},  {2, 9},  {3, 5}, {4, 6},  {5, 8}, {6, 10},
  };
  const std::vector<std::array<int, 3>> faces = {
      {0, 12, 25}, {1, 13, 26}, {2, 12, 24}, {3, 13, 25}, {4, 14, 26},
      {2, 15, 28}, {3, 16, 29}, {4, 17, 30}, {5, 15, 27}, {6, 16, 28},
      {7, 17, 29}, {8, 18, 30}, {5, 14, 31}, {6, 19, 32}, {7, 20, 33},
      {8, 21, 24}, {9, 19, 31}, {10, 20, 32}, {11, 21, 33}, {9, 18, 34},
      {10, 22, 35}, {11, 23, 27}, {0, 22, 34}, {1, 23, 35},
  };
  const std::array<std::array<int, 2>, 36> edge_notes = {{
      {0, 6}, {0, 6}, {0, 6}, {5, 11}, {0, 6}, {5, 11},
      {0, 6}, {0, 6}, {5, 11}, {0, 6}, {5, 11}, {0, 6},
      {3, 9}, {4, 10}, {4, 10}, {4, 10}, {4, 10}, {3, 9},
      {4, 10}, {3, 9}, {4, 10}, {4, 10}, {4, 10}, {3, 9},
      {2, 8}, {2, 8}, {1, 7}, {2, 8}, {1, 7}, {2, 8},
      {2, 8}, {2, 8}, {2, 8}, {1, 7}, {1, 7}, {2, 8},
  }};
  // Face roots: F A B G Eb | A Db F G Eb B G | Db F A Db B G Eb | A Db F Eb B
  const std::array<int, 24> face_roots = {8,  0, 2, 10, 6, 0, 4, 8,  10, 6, 2, 10,
                                          4,  8, 0, 4,  2, 10, 6, 0, 4,  8, 6, 2};
  const std::array<std::array<int, 6>, 12> vertex_notes = {{
      {5, 6, 7, 8, 9, 10},    // P1
      {9, 10, 11, 0, 1, 2},   // P2
      {1, 2, 3, 4, 5, 6},     // P3
      {0, 0, 4, 4, 8, 8},     // P4 (petal center)
      {1, 2, 3, 4, 5, 6},     // P5
      {9, 10, 11, 0, 1, 2},   // P6
      {5, 6, 7, 8, 9, 10},    // P7
      {0, 3, 4, 7, 8, 11},    // KA
      {0, 3, 4, 7, 8, 11},    // KB
      {6, 6, 8, 8, 10, 10},   // M1
      {2, 2, 4, 4, 6, 6},     // M2
      {0, 0, 2, 2, 10, 10},   // M3
  }};

  SimplicialSurface s = make_surface(12, edges, faces);
  std::vector<PitchMultiset> vl(12), el(36), fl(24);
  for (int v = 0; v < 12; ++v)
    for (int n : vertex_notes[v]) vl[v].add(PitchClass(n));
  for (int e = 0; e < 36; ++e)
    for (int n : edge_notes[e]) el[e].add(PitchClass(n));
  for (int f = 0; f < 24; ++f) {
    fl[f].add(PitchClass(face_roots[f]));
    fl[f].add(PitchClass(face_roots[f] + 4));
    fl[f].add(PitchClass(face_roots[f] + 7));
  }

  CatalogEntry entry;
  entry.key = CatalogKey::tritone2;
  entry.name = "tritone2";
  entry.provenance =
      "tritone-edge labelling of a 24-triangle torus with petal vertex allocation";
  entry.tonnetz = Tonnetz(std::move(s), std::move(vl), std::move(el), std::move(fl));

  entry.expected.f_vector = {12, 36, 24};
  entry.expected.euler_characteristic = 0;
  entry.expected.face_chords = {major_x(0, 4), major_x(2, 4), major_x(4, 4),
                                major_x(6, 4), major_x(8, 4), major_x(10, 4)};
  entry.expected.vertex_labels = {
      {PitchMultiset::of_values({5, 6, 7, 8, 9, 10}), 2},
      {PitchMultiset::of_values({9, 10, 11, 0, 1, 2}), 2},
      {PitchMultiset::of_values({1, 2, 3, 4, 5, 6}), 2},
      {PitchMultiset::of_values({0, 0, 4, 4, 8, 8}), 1},
      {PitchMultiset::of_values({0, 3, 4, 7, 8, 11}), 2},
      {PitchMultiset::of_values({6, 6, 8, 8, 10, 10}), 1},
      {PitchMultiset::of_values({2, 2, 4, 4, 6, 6}), 1},
      {PitchMultiset::of_values({0, 0, 2, 2, 10, 10}), 1},
  };
  entry.expected.omitted = std::vector<PitchClass>{};
  entry.expected.symmetries = {{Interval(4), true, 3}, {Interval(2), false, {}}};
  TonnetzKind k;
  k.is_major = true;
  k.is_major_minor = true;
  entry.expected.kind_flags = k;

  // Net hexagon on the triangular lattice; y is scaled by sqrt(3) at render
  // time via these precomputed values.
  const double q = std::sqrt(3.0);
  auto P = [q](double x, double y) { return std::array<double, 2>{x, y * q}; };
  const auto P1 = P(2, 0.5), P2 = P(3, 0.5), P3 = P(1.5, 1), P4 = P(2.5, 1),
             P5 = P(3.5, 1), P6 = P(2, 1.5), P7 = P(3, 1.5);
  const auto A1 = P(0.5, 1), A2 = P(3.5, 2), A3 = P(3.5, 0);
  const auto B1 = P(1.5, 2), B2 = P(4.5, 1), B3 = P(1.5, 0);
  const auto M1a = P(1, 1.5), M1b = P(4, 0.5), M2a = P(2.5, 2), M2b = P(2.5, 0),
             M3a = P(4, 1.5), M3b = P(1, 0.5);
  entry.layout.face_corners = {
      {B3, M2b, P1}, {M2b, A3, P2}, {M3b, P1, B3}, {P1, P2, M2b}, {P2, M1b, A3},
      {M3b, P1, P3}, {P1, P2, P4},  {P2, M1b, P5}, {A1, P3, M3b}, {P3, P4, P1},
      {P4, P5, P2},  {P5, B2, M1b}, {A1, P3, M1a}, {P3, P4, P6},  {P4, P5, P7},
      {P5, B2, M3a}, {M1a, P6, P3}, {P6, P7, P4},  {P7, M3a, P5}, {M1a, P6, B1},
      {P6, P7, M2a}, {P7, M3a, A2}, {B1, M2a, P6}, {M2a, A2, P7},
  };
  entry.layout.edge_anchors = {
      P(2, 0),     P(3, 0),     P(1.5, 0.5), P(2.5, 0.5), P(3.5, 0.5), P(1, 1),
      P(2, 1),     P(3, 1),     P(4, 1),     P(1.5, 1.5), P(2.5, 1.5), P(3.5, 1.5),
      P(1.75, 0.25), P(2.75, 0.25), P(3.75, 0.25), P(1.25, 0.75), P(2.25, 0.75),
      P(3.25, 0.75), P(4.25, 0.75), P(1.75, 1.25), P(2.75, 1.25), P(3.75, 1.25),
      P(2.25, 1.75), P(3.25, 1.75),
      P(1.25, 0.25), P(2.25, 0.25), P(3.25, 0.25), P(0.75, 0.75), P(1.75, 0.75),
      P(2.75, 0.75), P(3.75, 0.75), P(1.25, 1.25), P(2.25, 1.25), P(3.25, 1.25),
      P(1.75, 1.75), P(2.75, 1.75),
  };
  return entry;
}

// ------------------------------------------------------------------ sphere

// Barycentric subdivision of the tetrahedron's faces: 4 corners, 6 edge
// midpoints, 4 face centers; 24 small triangles. The edge labelling realizes
// each major ninth chord once, on a folded equilateral per tetrahedron
// half-edge.
inline CatalogEntry build_bauble() {
  // vertices: 0 X, 1 Y, 2 Z, 3 W, 4..9 mids XY YZ XZ XW YW ZW, 10..13 centers A..D
  const std::vector<std::array<int, 2>> edges = {
      {0, 4},  {4, 1},  {1, 5},  {5, 2},  {0, 6},  {6, 2},
      {0, 7},  {7, 3},  {1, 8},  {8, 3},  {2, 9},  {9, 3},
      {10, 0}, {10, 1}, {10, 2}, {10, 4}, {10, 5}, {10, 6},
      {11, 0}, {11, 1}, {11, 3}, {11, 4}, {11, 7}, {11, 8},
      {12, 1}, {12, 2}, {12, 3}, {12, 5}, {12, 8}, {12, 9},
      {13, 0}, {13, 2}, {13, 3}, {13, 6}, {13, 7}, {13, 9},
  };
  const std::vector<std::array<int, 3>> faces = {
      {0, 15, 12},  {1, 13, 15},  {2, 16, 13},  {3, 14, 16},  {5, 17, 14},
      {4, 12, 17},  {0, 21, 18},  {1, 19, 21},  {8, 23, 19},  {9, 20, 23},
      {7, 22, 20},  {6, 18, 22},  {2, 27, 24},  {3, 25, 27},  {10, 29, 25},
      {11, 26, 29}, {9, 28, 26},  {8, 24, 28},  {4, 33, 30},  {5, 31, 33},
      {10, 35, 31}, {11, 32, 35}, {7, 34, 32},  {6, 30, 34},
  };
  const std::array<int, 36> edge_notes = {
      1, 7, 5, 11, 3, 9, 0, 10, 4, 2, 8, 6,                    // half-sides
      8, 0, 4, 4, 8, 0,                                        // center A spokes
      9, 2, 7, 11, 2, 9,                                       // center B spokes
      1, 6, 11, 3, 6, 1,                                       // center C spokes
      10, 5, 3, 7, 5, 10,                                      // center D spokes
  };

  SimplicialSurface s = make_surface(14, edges, faces);
  std::vector<PitchClass> notes;
  for (int n : edge_notes) notes.push_back(PitchClass(n));

  CatalogEntry entry;
  entry.key = CatalogKey::bauble;
  entry.name = "bauble";
  entry.provenance =
      "major-ninth edge labelling of the barycentrically subdivided "
      "tetrahedron (jazz bauble)";
  entry.tonnetz = from_edge_map(s, notes);

  entry.quads = {
      {0, 6, 0},  {1, 7, 1},  {2, 12, 2},  {3, 13, 3},  {5, 18, 4},  {4, 19, 5},
      {11, 23, 6}, {10, 22, 7}, {8, 17, 8}, {9, 16, 9}, {14, 20, 10}, {15, 21, 11},
  };

  entry.expected.f_vector = {14, 36, 24};
  entry.expected.euler_characteristic = 2;
  entry.expected.omitted = std::vector<PitchClass>{};
  entry.expected.symmetries = {{Interval(4), true, 3}};
  TonnetzKind k;
  k.is_edge_tonnetz = true;
  entry.expected.kind_flags = k;

  const double q = std::sqrt(3.0);
  auto P = [q](double x, double y) { return std::array<double, 2>{x, y * q}; };
  const auto X = P(1, 0.5), Y = P(2.5, 0), Z = P(2.5, 1);
  const auto m1 = P(1.75, 0.25), m2 = P(2.5, 0.5), m3 = P(1.75, 0.75),
             m4 = P(1, 0), m5 = P(3.25, 0.25), m6 = P(1.75, 1.25);
  const auto cA = P(2, 0.5), cB = P(1.5, 0), cC = P(3, 0.5), cD = P(1.5, 1);
  const auto W1 = P(1, -0.5), W2 = P(4, 0.5), W3 = P(1, 1.5);
  const auto cB2 = P(3.5, 0), cC2 = P(2, 1.5), cD2 = P(0.5, 0);
  entry.layout.face_corners = {
      {X, m1, cA},  {m1, Y, cA},  {Y, m2, cA},   {m2, Z, cA},  {Z, m3, cA},
      {m3, X, cA},  {X, m1, cB},  {m1, Y, cB},   {Y, m5, cB2}, {m5, W2, cB2},
      {W1, m4, cB}, {m4, X, cB},  {Y, m2, cC},   {m2, Z, cC},  {Z, m6, cC2},
      {m6, W3, cC2}, {W2, m5, cC}, {m5, Y, cC},  {X, m3, cD},  {m3, Z, cD},
      {Z, m6, cD},  {m6, W3, cD}, {W1, m4, cD2}, {m4, X, cD2},
  };
  entry.layout.edge_anchors = {
      P(1.375, 0.375), P(2.125, 0.125), P(2.5, 0.25),   P(2.5, 0.75),
      P(1.375, 0.625), P(2.125, 0.875), P(1, 0.25),     P(1, -0.25),
      P(2.875, 0.125), P(3.625, 0.375), P(2.125, 1.125), P(1.375, 1.375),
      P(1.5, 0.5),     P(2.25, 0.25),   P(2.25, 0.75),  P(1.875, 0.375),
      P(2.25, 0.5),    P(1.875, 0.625), P(1.25, 0.25),  P(2, 0),
      P(1.25, -0.25),  P(1.625, 0.125), P(1.25, 0),     P(3.375, 0.125),
      P(2.75, 0.25),   P(2.75, 0.75),   P(3.5, 0.5),    P(2.75, 0.5),
      P(3.125, 0.375), P(1.875, 1.375), P(1.25, 0.75),  P(2, 1),
      P(1.25, 1.25),   P(1.625, 0.875), P(0.75, 0),     P(1.625, 1.125),
  };
  return entry;
}

// ------------------------------------------------------------- vertex tori

// Quotient of the classic fifths/major-thirds plane labelling; the quotient
// lattice is chosen so the twelve vertex classes carry the twelve pitch
// classes. Vertex n sits at lattice points with 7i+4j = n (mod 12); its east
// neighbour is n+7 and its north-east neighbour n+4.
inline CatalogEntry build_euler() {
  std::vector<std::array<int, 2>> edges(36);
  for (int n = 0; n < 12; ++n) {
    edges[n] = {n, (n + 7) % 12};        // east
    edges[12 + n] = {n, (n + 4) % 12};   // north-east
    edges[24 + n] = {n, (n + 9) % 12};   // north-west
  }
  std::vector<std::array<int, 3>> faces(24);
  for (int n = 0; n < 12; ++n) {
    faces[n] = {n, 24 + (n + 7) % 12, 12 + n};                       // upward
    faces[12 + n] = {12 + (n + 7) % 12, (n + 4) % 12, 24 + (n + 7) % 12};  // downward
  }
  SimplicialSurface s = make_surface(12, edges, faces);
  std::vector<PitchClass> values;
  for (int n = 0; n < 12; ++n) values.push_back(PitchClass(n));

  CatalogEntry entry;
  entry.key = CatalogKey::euler;
  entry.name = "euler";
  entry.provenance =
      "classic fifths/thirds vertex labelling quotiented to a 24-triangle torus";
  entry.tonnetz = from_vertex_map(s, values);

  entry.expected.f_vector = {12, 36, 24};
  entry.expected.euler_characteristic = 0;
  for (int r = 0; r < 12; ++r) {
    entry.expected.face_chords.push_back(major_x(r, 1));
    entry.expected.face_chords.push_back(minor_x(r, 1));
  }
  for (int n = 0; n < 12; ++n) {
    PitchMultiset m;
    m.add(PitchClass(n), 6);
    entry.expected.vertex_labels.push_back({m, 1});
  }
  entry.expected.omitted = std::vector<PitchClass>{};
  entry.expected.symmetries = {{Interval(1), true, {}}, {Interval(2), true, {}}};
  TonnetzKind k;
  k.is_vertex_tonnetz = true;
  k.is_major_minor = true;
  k.is_complete_major_minor = true;
  entry.expected.kind_flags = k;

  // Net: the 4x3 parallelogram of cells, vertex (i,j) drawn at
  // (i + j/2, j*sqrt(3)/2).
  const double q = std::sqrt(3.0) / 2;
  auto at = [q](int i, int j) { return std::array<double, 2>{i + j / 2.0, j * q}; };
  entry.layout.face_corners.resize(24);
  entry.layout.edge_anchors.assign(36, {0, 0});
  std::vector<char> have(36, 0);
  auto anchor = [&](int e, std::array<double, 2> a, std::array<double, 2> b) {
    if (!have[e]) {
      entry.layout.edge_anchors[e] = {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
      have[e] = 1;
    }
  };
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 4; ++i) {
      const int n = ((7 * i + 4 * j) % 12 + 12) % 12;
      const auto p00 = at(i, j), p10 = at(i + 1, j), p01 = at(i, j + 1),
                 p11 = at(i + 1, j + 1);
      entry.layout.face_corners[n] = {p00, p10, p01};
      entry.layout.face_corners[12 + n] = {p10, p01, p11};
      anchor(n, p00, p10);
      anchor(12 + n, p00, p01);
      anchor(24 + (n + 7) % 12, p10, p01);
    }
  }
  return entry;
}

// The vertex labelling of the plain tetrahedron whose faces all come out
// diminished.
inline CatalogEntry build_tetra_dim() {
  const std::vector<std::array<int, 2>> edges = {
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const std::vector<std::array<int, 3>> faces = {
      {0, 3, 1}, {0, 4, 2}, {1, 5, 2}, {3, 5, 4}};
  SimplicialSurface s = make_surface(4, edges, faces);

  CatalogEntry entry;
  entry.key = CatalogKey::tetra_dim;
  entry.name = "tetra_dim";
  entry.provenance = "diminished vertex labelling of the tetrahedron (C,Eb,F#,A)";
  entry.tonnetz = from_vertex_map(s, pcs({3, 6, 9, 0}));

  entry.expected.f_vector = {4, 6, 4};
  entry.expected.euler_characteristic = 2;
  entry.expected.face_chords = {
      {{ChordQuality::Tag::Diminished, PitchClass(3)}, 1},
      {{ChordQuality::Tag::Diminished, PitchClass(0)}, 1},
      {{ChordQuality::Tag::Diminished, PitchClass(9)}, 1},
      {{ChordQuality::Tag::Diminished, PitchClass(6)}, 1},
  };
  entry.expected.vertex_labels = {
      {PitchMultiset::of_values({3, 3, 3}), 1},
      {PitchMultiset::of_values({6, 6, 6}), 1},
      {PitchMultiset::of_values({9, 9, 9}), 1},
      {PitchMultiset::of_values({0, 0, 0}), 1},
  };
  entry.expected.symmetries = {{Interval(3), true, 4}, {Interval(6), true, 2}};
  TonnetzKind k;
  k.is_vertex_tonnetz = true;
  entry.expected.kind_flags = k;

  const double q = std::sqrt(3.0);
  auto P = [q](double x, double y) { return std::array<double, 2>{x, y * q}; };
  const auto v0 = P(1, 1), v1 = P(3, 1), v2 = P(2, 0);
  const auto w1 = P(2, 2), w2 = P(0, 0), w3 = P(4, 0);
  entry.layout.face_corners = {{v0, v1, v2}, {v0, v1, w1}, {v0, v2, w2}, {v1, v2, w3}};
  auto mid = [](std::array<double, 2> a, std::array<double, 2> b) {
    return std::array<double, 2>{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
  };
  entry.layout.edge_anchors = {mid(v0, v1), mid(v0, v2), mid(v0, w2),
                               mid(v1, v2), mid(v1, w1), mid(v2, w3)};
  return entry;
}

inline CatalogEntry build_transposed(CatalogKey key, const std::string& name,
                                     CatalogEntry base, Interval k,
                                     const std::string& provenance) {
  base.key = key;
  base.name = name;
  base.provenance = provenance;
  base.tonnetz = transpose_tonnetz(base.tonnetz, k);
  base.expected = base.expected.transposed(k);
  return base;
}

}  // namespace detail

/// Build a catalog entry. The tonnetz is verified and all embedded facts are
/// checked on the spot; a transcription slip throws CatalogError rather than
/// returning a wrong object.
inline CatalogEntry build(CatalogKey key) {
  using detail::build_transposed;
  CatalogEntry entry;
  switch (key) {
    case CatalogKey::euler: entry = detail::build_euler(); break;
    case CatalogKey::b2: entry = detail::build_b2(); break;
    case CatalogKey::b2_up2:
      entry = build_transposed(key, "b2_up2", detail::build_b2(), Interval(2),
                               "b2 transposed up a whole tone; Dynkin pair B,G");
      break;
    case CatalogKey::b2_down2:
      entry = build_transposed(key, "b2_down2", detail::build_b2(), Interval(10),
                               "b2 transposed down a whole tone; Dynkin pair G,Eb");
      break;
    case CatalogKey::c2: entry = detail::build_c2(); break;
    case CatalogKey::c2_up2:
      entry = build_transposed(key, "c2_up2", detail::build_c2(), Interval(2),
                               "c2 transposed up a whole tone; Dynkin pair B,G");
      break;
    case CatalogKey::c2_down2:
      entry = build_transposed(key, "c2_down2", detail::build_c2(), Interval(10),
                               "c2 transposed down a whole tone; Dynkin pair G,Eb");
      break;
    case CatalogKey::g2: entry = detail::build_g2_like(false); break;
    case CatalogKey::g2_dual: entry = detail::build_g2_like(true); break;
    case CatalogKey::tritone1: entry = detail::build_tritone1(); break;
    case CatalogKey::tritone2: entry = detail::build_tritone2(); break;
    case CatalogKey::bauble: entry = detail::build_bauble(); break;
    case CatalogKey::tetra_dim: entry = detail::build_tetra_dim(); break;
    default: throw std::invalid_argument("unknown catalog key");
  }
  check_expected(entry);
  return entry;
}

inline CatalogEntry build(const std::string& name) {
  const auto key = parse_catalog_key(name);
  if (!key) throw std::invalid_argument("unknown catalog key '" + name + "'");
  return build(*key);
}

struct Quadrilateral {
  std::array<int, 2> faces;
  int diagonal_edge;
  PitchMultiset notes;  // the five edge notes, diagonal counted once
  ChordQuality chord;
};

/// The twelve folded equilaterals of the bauble with their five-note chords.
inline std::vector<Quadrilateral> bauble_quadrilaterals(const CatalogEntry& entry) {
  if (entry.key != CatalogKey::bauble)
    throw std::invalid_argument("quadrilaterals exist only for the bauble");
  std::vector<Quadrilateral> out;
  const Tonnetz& t = entry.tonnetz;
  for (const QuadInfo& q : entry.quads) {
    std::set<int> edge_set;
    for (int e : t.surface().face_edges(q.face_a)) edge_set.insert(e);
    for (int e : t.surface().face_edges(q.face_b)) edge_set.insert(e);
    if (edge_set.size() != 5 || !edge_set.count(q.diagonal_edge))
      throw CatalogError("bauble quadrilateral tables are inconsistent");
    PitchMultiset notes;
    for (int e : edge_set) {
      const auto sup = t.label(edge_id(e)).support();
      for (PitchClass p : sup) notes.add(p);
    }
    out.push_back({{q.face_a, q.face_b}, q.diagonal_edge, notes, classify(notes)});
  }
  return out;
}

}  // namespace tonnetz
