// Acceptance suite: the contract this library is expected to honor, one
// criterion per block, each printed as a single pass/fail line. All checks
// are combinatorial and exact (zero tolerance); everything runs at desk
// scale.

#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "tonnetz/io.hpp"
#include "tonnetz/report.hpp"

using namespace tonnetz;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << "criterion " << (number < 10 ? "0" : "") << number << " "
            << (ok ? "PASS" : "FAIL") << " — " << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

std::set<int> roots_of(const Tonnetz& t, ChordQuality::Tag tag) {
  std::set<int> out;
  for (int f = 0; f < t.surface().face_count(); ++f) {
    const auto q = classify(t.label(face_id(f)));
    if (q.tag == tag) out.insert(q.root.value);
  }
  return out;
}

// 1. the matching-based verifier and the exhaustive oracle agree on every
//    catalog tonnetz and on 1000 random face-labelled 24-face tori
void criterion_1() {
  bool ok = true;
  std::string detail;
  for (const auto& [key, name] : catalog_key_names()) {
    const auto t = build(key).tonnetz;
    if (verify(t).ok != oracles::verify_by_enumeration(t)) {
      ok = false;
      detail = "disagreement on " + name;
    }
  }
  const auto surface = build(CatalogKey::euler).tonnetz.surface();
  std::mt19937_64 rng(101);
  for (int i = 0; i < 1000 && ok; ++i) {
    const auto labels = oracles::random_face_labels(surface, rng);
    const auto t = extend_from_faces(surface, labels, i);
    const bool a = verify(t).ok;
    const bool b = oracles::verify_by_enumeration(t);
    if (a != b || !a) {
      ok = false;
      detail = "random instance " + std::to_string(i);
    }
  }
  report(1, "verifier agrees with the all-assignments oracle (catalog + 1000 random)",
         ok, detail);
}

// 2. extension from face labels always verifies
void criterion_2() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(202);
  const auto& keys = catalog_key_names();
  std::vector<SimplicialSurface> surfaces;
  for (const auto& [key, name] : keys) surfaces.push_back(build(key).tonnetz.surface());
  for (int i = 0; i < 1000 && ok; ++i) {
    const auto& surface = surfaces[i % surfaces.size()];
    const auto labels = oracles::random_face_labels(surface, rng);
    std::uniform_int_distribution<std::uint64_t> seed;
    if (!verify(extend_from_faces(surface, labels, seed(rng))).ok) {
      ok = false;
      detail = "triple " + std::to_string(i) + " on " + keys[i % keys.size()].second;
    }
  }
  report(2, "face-label extension verifies for 1000 random (surface,labels,seed)", ok,
         detail);
}

// 3. uniqueness of the vertex/edge constructions under single-label
//    perturbation, exhaustively on the tetrahedron and the square torus:
//    everything the construction derives (edges for a vertex map; vertices
//    and faces for an edge map) is rigid.
void criterion_3() {
  int counterexamples = 0;
  auto sweep = [&counterexamples](const Tonnetz& t, std::initializer_list<int> dims) {
    for (int d : dims) {
      for (int i = 0; i < t.surface().simplex_count(d); ++i) {
        for (const auto& m : oracles::single_note_perturbations(t.label({d, i}))) {
          Tonnetz p = t;
          p.set_label({d, i}, m);
          if (verify(p).ok) ++counterexamples;
        }
      }
    }
  };

  const auto tetra = oracles::tetrahedron();
  sweep(from_vertex_map(tetra, oracles::pcs_of({3, 6, 9, 0})), {1});
  sweep(from_edge_map(tetra, oracles::pcs_of({0, 1, 2, 3, 4, 5})), {0, 2});

  const auto b2 = build(CatalogKey::b2).tonnetz;
  sweep(from_vertex_map(b2.surface(), oracles::pcs_of({0, 3, 6, 9})), {1});
  std::vector<PitchClass> b2_edges;
  for (int e = 0; e < b2.surface().edge_count(); ++e)
    b2_edges.push_back(b2.label(edge_id(e)).support()[0]);
  sweep(from_edge_map(b2.surface(), b2_edges), {0, 2});

  report(3, "vertex/edge tonnetz uniqueness under exhaustive single-label perturbation",
         counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
}

// 4. the b2 torus fact sheet
void criterion_4() {
  const auto entry = build(CatalogKey::b2);
  const auto& t = entry.tonnetz;
  bool ok = t.surface().vertex_count() == 4 && t.surface().edge_count() == 12 &&
            t.surface().face_count() == 8;

  std::map<ChordQuality, int> census;
  for (int f = 0; f < 8; ++f) ++census[classify(t.label(face_id(f)))];
  for (int root : {8, 11, 2, 5})
    ok = ok && census[{ChordQuality::Tag::Major, PitchClass(root)}] == 2;
  ok = ok && census.size() == 4;

  for (int v = 0; v < 4; ++v)
    if (t.surface().valency(v) == 4)
      ok = ok && t.label(vertex_id(v)) == PitchMultiset::of_values({0, 3, 6, 9});

  ok = ok && inventory(t).omitted == oracles::pcs_of({1, 4, 7, 10});
  report(4, "b2: f-vector (4,12,8), {F,Ab,B,D} major x2, dim7 4-valent vertices, "
            "omits Bb,Db,E,G", ok);
}

// 5. the c2 torus fact sheet
void criterion_5() {
  const auto t = build(CatalogKey::c2).tonnetz;
  std::map<ChordQuality, int> census;
  for (int f = 0; f < t.surface().face_count(); ++f)
    ++census[classify(t.label(face_id(f)))];
  bool ok = census.size() == 4;
  for (int root : {5, 8, 11, 2})
    ok = ok && census[{ChordQuality::Tag::Minor, PitchClass(root)}] == 2;
  ok = ok && inventory(t).omitted == oracles::pcs_of({1, 4, 7, 10});
  ok = ok && inventory(build(CatalogKey::b2).tonnetz).omitted == inventory(t).omitted;
  report(5, "c2: {D,F,Ab,B} minor x2, same omitted notes as b2", ok);
}

// 6. the g2 pair
void criterion_6() {
  const auto g2 = build(CatalogKey::g2).tonnetz;
  const auto dual = build(CatalogKey::g2_dual).tonnetz;
  bool ok = roots_of(g2, ChordQuality::Tag::Major) == std::set<int>{5, 7, 9, 11, 1, 3};
  ok = ok && roots_of(g2, ChordQuality::Tag::Minor) == std::set<int>{0, 2, 4, 6, 8, 10};
  ok = ok && roots_of(dual, ChordQuality::Tag::Major) == std::set<int>{0, 2, 4, 6, 8, 10};
  ok = ok && roots_of(dual, ChordQuality::Tag::Minor) == std::set<int>{5, 7, 9, 11, 1, 3};

  const auto cov = completeness({g2, dual});
  ok = ok && cov.complete_major_minor && cov.face_chords.size() == 24;
  for (const auto& [q, n] : cov.face_chords) ok = ok && n == 1;

  // center vertex sees all 12; the 6-valent corners carry the stated augmented
  // triads
  auto aug_supports = [](const Tonnetz& t) {
    std::set<std::vector<PitchClass>> out;
    for (int v = 0; v < t.surface().vertex_count(); ++v) {
      if (t.surface().valency(v) == 12) {
        if (t.label(vertex_id(v)).support_size() != 12) out.insert({});  // poison
      }
      if (t.surface().valency(v) == 6) out.insert(t.label(vertex_id(v)).support());
    }
    return out;
  };
  ok = ok && aug_supports(g2) == std::set<std::vector<PitchClass>>{
                                     oracles::pcs_of({3, 7, 11}),   // C E G#
                                     oracles::pcs_of({1, 5, 9})};   // D F# A#
  ok = ok && aug_supports(dual) == std::set<std::vector<PitchClass>>{
                                       oracles::pcs_of({0, 4, 8}),    // F A C#
                                       oracles::pcs_of({2, 6, 10})};  // G B D#
  report(6, "g2 pair: stated 6+6 triads each, union complete, center sees all 12, "
            "augmented corners", ok);
}

// 7. existence (and stated orders) of transposition symmetries
void criterion_7() {
  bool ok = true;
  std::string detail;
  auto expect = [&](CatalogKey key, int k, bool exists,
                    std::optional<int> order = std::nullopt) {
    const auto t = build(key).tonnetz;
    const auto syms = find_transposition_symmetries(t, Interval(k));
    if (syms.empty() == exists) {
      ok = false;
      detail = catalog_key_name(key) + " k=" + std::to_string(k);
      return;
    }
    if (order) {
      bool found = false;
      for (const auto& phi : syms) found = found || phi.order() == *order;
      if (!found) {
        ok = false;
        detail = catalog_key_name(key) + " k=" + std::to_string(k) + " order " +
                 std::to_string(*order);
      }
    }
  };
  expect(CatalogKey::g2, 2, true, 6);
  expect(CatalogKey::g2, 4, true, 3);
  expect(CatalogKey::g2, 6, true, 2);
  expect(CatalogKey::tritone1, 2, true);
  expect(CatalogKey::tritone1, 4, true);
  expect(CatalogKey::tritone2, 4, true);
  expect(CatalogKey::bauble, 4, true);
  expect(CatalogKey::b2, 1, false);
  report(7, "transposition symmetries: g2 k=2/4/6 with orders 6/3/2, tritone1 k=2,4, "
            "tritone2 k=4, bauble k=4; b2 k=1 none", ok, detail);
}

// 8. the tritone tonnetz fact sheets
void criterion_8() {
  const auto t1 = build(CatalogKey::tritone1).tonnetz;
  bool ok = t1.surface().face_count() == 6 && t1.surface().vertex_count() == 3;
  std::multiset<PitchMultiset> supports1;
  for (int v = 0; v < 3; ++v) supports1.insert(t1.label(vertex_id(v)));
  ok = ok && supports1 == std::multiset<PitchMultiset>{
                              PitchMultiset::of_values({0, 2, 4, 6, 8, 10}),
                              PitchMultiset::of_values({0, 1, 4, 5, 8, 9}),
                              PitchMultiset::of_values({2, 3, 6, 7, 10, 11})};

  const auto t2 = build(CatalogKey::tritone2).tonnetz;
  ok = ok && t2.surface().face_count() == 24;
  std::multiset<PitchMultiset> supports2;
  for (int v = 0; v < t2.surface().vertex_count(); ++v)
    supports2.insert(t2.label(vertex_id(v)));
  // sampled vertices: the petal center {A,C#,F} doubled, the cluster
  // {Bb,B,C,Db,D,D#}, the cluster {F#,G,Ab,A,Bb,B}, the whole-tone {G,G,A,A,B,B}
  ok = ok && supports2.count(PitchMultiset::of_values({0, 0, 4, 4, 8, 8})) == 1;
  ok = ok && supports2.count(PitchMultiset::of_values({1, 2, 3, 4, 5, 6})) == 2;
  ok = ok && supports2.count(PitchMultiset::of_values({9, 10, 11, 0, 1, 2})) == 2;
  ok = ok && supports2.count(PitchMultiset::of_values({0, 0, 2, 2, 10, 10})) == 1;
  report(8, "tritone1: 6 faces / 3 vertices with the stated supports; tritone2: 24 "
            "faces and the sampled vertex supports", ok);
}

// 9. the bauble fact sheet
void criterion_9() {
  const auto entry = build(CatalogKey::bauble);
  const auto& t = entry.tonnetz;
  bool ok = t.surface().euler_characteristic() == 2 &&
            t.surface().vertex_count() == 14 && t.surface().edge_count() == 36 &&
            t.surface().face_count() == 24;

  const auto quads = bauble_quadrilaterals(entry);
  ok = ok && quads.size() == 12;
  std::set<int> roots;
  for (const auto& q : quads) {
    ok = ok && q.chord.tag == ChordQuality::Tag::MajorNinth;
    roots.insert(q.chord.root.value);
  }
  ok = ok && roots.size() == 12;

  std::map<int, std::set<int>> at_corner;
  for (const auto& q : quads) {
    const auto& uv = t.surface().edge_vertices(q.diagonal_edge);
    at_corner[std::min(uv[0], uv[1])].insert(q.chord.root.value);
  }
  ok = ok && at_corner[0] == std::set<int>{8, 9, 10};   // X: F F# G
  ok = ok && at_corner[1] == std::set<int>{0, 1, 2};    // Y: A Bb B
  ok = ok && at_corner[2] == std::set<int>{4, 5, 6};    // Z: Db D Eb
  ok = ok && at_corner[3] == std::set<int>{3, 7, 11};   // W: C E Ab
  report(9, "bauble: sphere (14,36,24), 12 major-ninth quadrilaterals covering all "
            "roots, corner groupings", ok);
}

// 10. the overview table equals its golden transcription
void criterion_10() {
  const auto table = section7_table();
  using Lines = std::vector<std::string>;
  using Cells = std::array<Lines, 4>;
  auto cells = [](Lines a, Lines b, Lines c, Lines d) {
    Cells out;
    out[0] = std::move(a);
    out[1] = std::move(b);
    out[2] = std::move(c);
    out[3] = std::move(d);
    return out;
  };
  const std::array<Cells, 7> golden = {
      cells({"B major", "D major", "F major", "Ab major"}, {},
            {"Bb major", "C major", "D major", "E major", "Gb major", "Ab major"},
            {"A major", "B major", "Db major", "Eb major", "F major", "G major"}),
      cells({}, {"B minor", "D minor", "F minor", "Ab minor"},
            {"A minor", "B minor", "Db minor", "Eb minor", "F minor", "G minor"},
            {"Bb minor", "C minor", "D minor", "E minor", "Gb minor", "Ab minor"}),
      cells({"all but Bb,Db,E,G"}, {"all but Bb,Db,E,G"}, {"all 12"}, {"all 12"}),
      cells({}, {}, {"Bb,D,Gb", "C,E,Ab"}, {"A,Db,F", "B,Eb,G"}),
      cells({"A,C,Eb,Gb"}, {"B,D,F,Ab"}, {"A,C,Eb,Gb", "B,D,F,Ab", "Bb,Db,E,G"},
            {"A,C,Eb,Gb", "B,D,F,Ab", "Bb,Db,E,G"}),
      cells({"all but Bb,Db,E,G"}, {"all but Bb,Db,E,G"}, {}, {}),
      cells({}, {}, {"all 12"}, {"all 12"}),
  };
  bool ok = table.rows.size() == golden.size();
  std::string detail;
  for (std::size_t r = 0; ok && r < golden.size(); ++r)
    for (int c = 0; c < 4; ++c)
      if (table.rows[r].cells[c] != golden[r][c]) {
        ok = false;
        detail = "row '" + table.rows[r].label + "' column " + std::to_string(c);
      }
  ok = ok && render_section7(table) == render_section7(section7_table());
  report(10, "overview table matches the golden transcription cell-for-cell", ok,
         detail);
}

// 11. the classic vertex tonnetz on the torus
void criterion_11() {
  const auto t = build(CatalogKey::euler).tonnetz;
  const auto k = kind(t);
  bool ok = k.is_vertex_tonnetz && k.is_major_minor && k.is_complete_major_minor;
  std::map<ChordQuality, int> census;
  for (int f = 0; f < t.surface().face_count(); ++f)
    ++census[classify(t.label(face_id(f)))];
  ok = ok && census.size() == 24;
  for (const auto& [q, n] : census)
    ok = ok && n == 1 &&
         (q.tag == ChordQuality::Tag::Major || q.tag == ChordQuality::Tag::Minor);
  report(11, "euler torus: complete major/minor vertex tonnetz, all 24 triads once",
         ok);
}

// 12. save/load round-trip identity on all catalog keys
void criterion_12() {
  bool ok = true;
  std::string detail;
  for (const auto& [key, name] : catalog_key_names()) {
    const auto entry = build(key);
    std::stringstream ss;
    save(document_for(entry), ss);
    const auto loaded = load_stream(ss);
    if (!(loaded.document.tonnetz == entry.tonnetz) || !loaded.verification.ok) {
      ok = false;
      detail = name;
    }
  }
  report(12, "save/load round-trip is the identity on all 13 catalog keys", ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASS"
                                : std::to_string(g_failures) + " CRITERIA FAILED")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
