#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "oracles.hpp"
#include "tonnetz/catalog.hpp"
#include "tonnetz/report.hpp"

using namespace tonnetz;

namespace {

std::set<int> major_roots(const Tonnetz& t) {
  std::set<int> out;
  for (int f = 0; f < t.surface().face_count(); ++f) {
    const auto q = classify(t.label(face_id(f)));
    if (q.tag == ChordQuality::Tag::Major) out.insert(q.root.value);
  }
  return out;
}

std::set<int> minor_roots(const Tonnetz& t) {
  std::set<int> out;
  for (int f = 0; f < t.surface().face_count(); ++f) {
    const auto q = classify(t.label(face_id(f)));
    if (q.tag == ChordQuality::Tag::Minor) out.insert(q.root.value);
  }
  return out;
}

}  // namespace

TEST_CASE("all thirteen keys build, verify and satisfy their fact sheets") {
  CHECK(catalog_key_names().size() == 13);
  for (const auto& [key, name] : catalog_key_names()) {
    const CatalogEntry entry = build(key);
    CHECK(entry.name == name);
    CHECK(verify(entry.tonnetz).ok);
    CHECK_NOTHROW(check_expected(entry));
    CHECK(build(name).name == name);  // by-name builder agrees
    // layout hints cover the whole complex
    CHECK(static_cast<int>(entry.layout.face_corners.size()) ==
          entry.tonnetz.surface().face_count());
    CHECK(static_cast<int>(entry.layout.edge_anchors.size()) ==
          entry.tonnetz.surface().edge_count());
  }
  CHECK_THROWS_AS(build("nonesuch"), std::invalid_argument);
}

TEST_CASE("square torus carries the four flat-side major triads twice each") {
  const auto entry = build(CatalogKey::b2);
  CHECK(entry.tonnetz.surface().vertex_count() == 4);
  CHECK(entry.tonnetz.surface().edge_count() == 12);
  CHECK(entry.tonnetz.surface().face_count() == 8);
  CHECK(major_roots(entry.tonnetz) == std::set<int>{8, 11, 2, 5});  // F Ab B D
  // 4-valent vertices carry the diminished seventh on A
  const auto& s = entry.tonnetz.surface();
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.valency(v) == 4)
      CHECK(entry.tonnetz.label(vertex_id(v)) == PitchMultiset::of_values({0, 3, 6, 9}));
    else
      CHECK(entry.tonnetz.label(vertex_id(v)) ==
            PitchMultiset::of_values({0, 2, 3, 5, 6, 8, 9, 11}));
  }
}

TEST_CASE("b2 and c2 pair up by relative keys and omit the same four notes") {
  const auto b2 = build(CatalogKey::b2).tonnetz;
  const auto c2 = build(CatalogKey::c2).tonnetz;
  CHECK(major_roots(b2) == std::set<int>{8, 11, 2, 5});
  CHECK(minor_roots(c2) == std::set<int>{5, 8, 11, 2});
  CHECK(major_roots(b2) == minor_roots(c2));  // same root names
  CHECK(inventory(b2).omitted == oracles::pcs_of({1, 4, 7, 10}));
  CHECK(inventory(c2).omitted == oracles::pcs_of({1, 4, 7, 10}));
}

TEST_CASE("whole-tone transposed copies of b2 cover all twelve major triads") {
  const auto cov = completeness({build(CatalogKey::b2).tonnetz,
                                 build(CatalogKey::b2_up2).tonnetz,
                                 build(CatalogKey::b2_down2).tonnetz});
  CHECK(cov.all_majors);
  CHECK_FALSE(cov.all_minors);
  const auto cov_c = completeness({build(CatalogKey::c2).tonnetz,
                                   build(CatalogKey::c2_up2).tonnetz,
                                   build(CatalogKey::c2_down2).tonnetz});
  CHECK(cov_c.all_minors);
}

TEST_CASE("the hexagonal pair is a disconnected complete major/minor tonnetz") {
  const auto g2 = build(CatalogKey::g2).tonnetz;
  const auto dual = build(CatalogKey::g2_dual).tonnetz;
  CHECK(major_roots(g2) == std::set<int>{5, 7, 9, 11, 1, 3});
  CHECK(minor_roots(g2) == std::set<int>{0, 2, 4, 6, 8, 10});
  CHECK(major_roots(dual) == std::set<int>{0, 2, 4, 6, 8, 10});
  CHECK(minor_roots(dual) == std::set<int>{5, 7, 9, 11, 1, 3});
  const auto cov = completeness({g2, dual});
  CHECK(cov.complete_major_minor);
  for (const auto& [chord, count] : cov.face_chords) CHECK(count == 1);

  // the center vertex sees every pitch class; the corners the two augmented
  // triads left out by the dual
  const auto& s = g2.surface();
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.valency(v) == 12) CHECK(g2.label(vertex_id(v)).support_size() == 12);
    if (s.valency(v) == 6) {
      const auto q = classify(g2.label(vertex_id(v)));
      CHECK(q.tag == ChordQuality::Tag::Augmented);
    }
  }
}

TEST_CASE("tritone tonnetz pair: same chords, different vertex worlds") {
  const auto t1 = build(CatalogKey::tritone1).tonnetz;
  const auto t2 = build(CatalogKey::tritone2).tonnetz;
  CHECK(t1.surface().face_count() == 6);
  CHECK(t1.surface().vertex_count() == 3);
  CHECK(t2.surface().face_count() == 24);

  std::map<ChordQuality, int> census1, census2;
  for (int f = 0; f < 6; ++f) ++census1[classify(t1.label(face_id(f)))];
  for (int f = 0; f < 24; ++f) ++census2[classify(t2.label(face_id(f)))];
  for (auto& [q, n] : census1) CHECK(census2[q] == 4 * n);

  // vertex-support profiles differ
  std::multiset<PitchMultiset> profile1, profile2;
  for (int v = 0; v < t1.surface().vertex_count(); ++v)
    profile1.insert(t1.label(vertex_id(v)));
  for (int v = 0; v < t2.surface().vertex_count(); ++v)
    profile2.insert(t2.label(vertex_id(v)));
  CHECK(profile1 != profile2);
  CHECK(profile1.count(PitchMultiset::of_values({0, 2, 4, 6, 8, 10})) == 1);
  CHECK(profile2.count(PitchMultiset::of_values({0, 2, 4, 6, 8, 10})) == 0);

  // every edge of both is a tritone pair
  for (const auto* t : {&t1, &t2})
    for (int e = 0; e < t->surface().edge_count(); ++e) {
      const auto sup = t->label(edge_id(e)).support();
      REQUIRE(sup.size() == 2);
      CHECK((sup[1] - sup[0]) == Interval(6));
    }
}

TEST_CASE("bauble quadrilaterals spell every major ninth chord once") {
  const auto entry = build(CatalogKey::bauble);
  const auto quads = bauble_quadrilaterals(entry);
  REQUIRE(quads.size() == 12);
  std::set<int> roots;
  for (const auto& q : quads) {
    CHECK(q.notes.order() == 5);
    CHECK(q.chord.tag == ChordQuality::Tag::MajorNinth);
    roots.insert(q.chord.root.value);
    // the diagonal belongs to both faces
    const auto& s = entry.tonnetz.surface();
    for (int face : q.faces) {
      bool has = false;
      for (int e : s.face_edges(face)) has = has || e == q.diagonal_edge;
      CHECK(has);
    }
  }
  CHECK(roots.size() == 12);

  // the C-based chord is C,E,G,B,D
  bool found_c = false;
  for (const auto& q : quads)
    if (q.chord.root == PitchClass(3)) {
      found_c = true;
      CHECK(q.notes == PitchMultiset::of_values({3, 7, 10, 2, 5}));
    }
  CHECK(found_c);

  // three chords cluster around each corner: F,F#,G / A,Bb,B / Db,D,Eb / C,E,Ab
  const auto& s = entry.tonnetz.surface();
  std::map<int, std::set<int>> roots_at_corner;  // tetra corner vertex -> roots
  for (const auto& q : quads) {
    const auto& uv = s.edge_vertices(q.diagonal_edge);
    const int corner = std::min(uv[0], uv[1]);  // corners are vertices 0..3
    REQUIRE(corner <= 3);
    roots_at_corner[corner].insert(q.chord.root.value);
  }
  CHECK(roots_at_corner[0] == std::set<int>{8, 9, 10});   // X: F F# G
  CHECK(roots_at_corner[1] == std::set<int>{0, 1, 2});    // Y: A Bb B
  CHECK(roots_at_corner[2] == std::set<int>{4, 5, 6});    // Z: Db D Eb
  CHECK(roots_at_corner[3] == std::set<int>{3, 7, 11});   // W: C E Ab
  CHECK_THROWS_AS(bauble_quadrilaterals(build(CatalogKey::b2)), std::invalid_argument);
}

TEST_CASE("the diminished tetrahedron") {
  const auto entry = build(CatalogKey::tetra_dim);
  for (int f = 0; f < 4; ++f)
    CHECK(classify(entry.tonnetz.label(face_id(f))).tag == ChordQuality::Tag::Diminished);
  CHECK(kind(entry.tonnetz).is_vertex_tonnetz);
}

TEST_CASE("tampering with a builder table is caught by the fact sheet") {
  auto entry = build(CatalogKey::b2);
  entry.expected.f_vector = {5, 12, 8};
  CHECK_THROWS_AS(check_expected(entry), CatalogError);

  auto entry2 = build(CatalogKey::g2);
  entry2.tonnetz.set_label(edge_id(0), PitchMultiset::of_values({0, 0}));
  CHECK_THROWS_AS(check_expected(entry2), CatalogError);
}
