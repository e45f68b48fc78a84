#pragma once

// The labelling map, the coherence verifier, and the constructive builders.
//
// A tonnetz is a closed triangulated (pseudo-)surface together with a total
// map from simplices to pitch-class multisets such that every simplex admits
// a bijection between its facets and its label (downward) and between its
// cofaces and its label (upward), where "bijection to a multiset" matches
// fiber sizes to multiplicities. Feasibility of each bijection is a perfect
// matching question on at most a dozen slots.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tonnetz/complex.hpp"
#include "tonnetz/matching.hpp"
#include "tonnetz/pitch.hpp"

namespace tonnetz {

class Tonnetz {
 public:
  Tonnetz() = default;
  Tonnetz(SimplicialSurface surface, std::vector<PitchMultiset> vertex_labels,
          std::vector<PitchMultiset> edge_labels, std::vector<PitchMultiset> face_labels)
      : surface_(std::move(surface)),
        labels_{std::move(vertex_labels), std::move(edge_labels), std::move(face_labels)} {
    if (!surface_.finalized()) surface_.finalize();
    for (int d = 0; d < 3; ++d)
      if (static_cast<int>(labels_[d].size()) != surface_.simplex_count(d))
        throw std::invalid_argument("labels must cover every simplex");
  }

  const SimplicialSurface& surface() const { return surface_; }
  const PitchMultiset& label(SimplexId s) const { return labels_[s.dim][s.index]; }
  const std::vector<PitchMultiset>& labels(int dim) const { return labels_[dim]; }

  void set_label(SimplexId s, PitchMultiset m) { labels_[s.dim][s.index] = std::move(m); }

  Tonnetz transposed(Interval k) const {
    Tonnetz t = *this;
    for (auto& dim : t.labels_)
      for (auto& m : dim) m = m.transposed(k);
    return t;
  }

  /// Witness bijections are not part of the data, so equality is surface +
  /// labels only.
  friend bool operator==(const Tonnetz& a, const Tonnetz& b) {
    return a.surface_ == b.surface_ && a.labels_ == b.labels_;
  }

 private:
  SimplicialSurface surface_;
  std::array<std::vector<PitchMultiset>, 3> labels_;
};

/// One verified bijection: the note matched to each facet/coface slot of a
/// simplex, in slot order.
struct CoherenceWitness {
  // down[1][e] = notes assigned to the edge's two vertex slots, etc.
  std::array<std::vector<std::vector<PitchClass>>, 3> down;  // dims 1, 2 used
  std::array<std::vector<std::vector<PitchClass>>, 3> up;    // dims 0, 1 used
};

struct MatchFailure {
  SimplexId simplex;
  bool downward = true;        // which coherence direction failed
  std::string reason;          // "cardinality" or "infeasible"
  std::vector<SimplexId> hall_facets;  // evidence: slots with too-small joint support
  std::string message;
};

struct VerifyResult {
  bool ok = false;
  CoherenceWitness witness;
  std::vector<MatchFailure> failures;

  explicit operator bool() const { return ok; }
};

namespace detail {

// facet/coface slot lists, with multiplicity
inline std::vector<SimplexId> facet_slots(const SimplicialSurface& s, SimplexId id) {
  std::vector<SimplexId> out;
  if (id.dim == 1) {
    for (int v : s.edge_vertices(id.index)) out.push_back(vertex_id(v));
  } else if (id.dim == 2) {
    for (int e : s.face_edges(id.index)) out.push_back(edge_id(e));
  }
  return out;
}

inline std::vector<SimplexId> coface_slots(const SimplicialSurface& s, SimplexId id) {
  std::vector<SimplexId> out;
  if (id.dim == 0) {
    for (int e : s.vertex_edges(id.index)) out.push_back(edge_id(e));
  } else if (id.dim == 1) {
    for (int f : s.edge_faces(id.index)) out.push_back(face_id(f));
  }
  return out;
}

inline void run_matching(const Tonnetz& t, SimplexId id, bool downward,
                         VerifyResult& result) {
  const auto slots = downward ? facet_slots(t.surface(), id)
                              : coface_slots(t.surface(), id);
  const PitchMultiset& label = t.label(id);
  auto& target = downward ? result.witness.down[id.dim][id.index]
                          : result.witness.up[id.dim][id.index];

  if (label.order() != static_cast<int>(slots.size())) {
    result.ok = false;
    result.failures.push_back(
        {id, downward, "cardinality", {},
         "label " + label.str() + " of " + t.surface().name(id) + " has order " +
             std::to_string(label.order()) + " but there are " +
             std::to_string(slots.size()) + (downward ? " facets" : " cofaces")});
    return;
  }

  const std::vector<PitchClass> notes = label.expand();
  const auto res = match_bipartite(
      static_cast<int>(slots.size()), static_cast<int>(notes.size()),
      [&](int i, int j) { return t.label(slots[i]).contains(notes[j]); });
  if (res.perfect) {
    target.resize(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) target[i] = notes[res.match_left[i]];
  } else {
    result.ok = false;
    MatchFailure mf{id, downward, "infeasible", {}, ""};
    for (int i : res.hall_violator) mf.hall_facets.push_back(slots[i]);
    std::string names;
    for (SimplexId sid : mf.hall_facets) {
      if (!names.empty()) names += ",";
      names += t.surface().name(sid);
    }
    mf.message = "no " + std::string(downward ? "downward" : "upward") +
                 " bijection for " + t.surface().name(id) + " " + label.str() +
                 "; Hall violator {" + names + "}";
    result.failures.push_back(std::move(mf));
  }
}

}  // namespace detail

/// Check both coherence axioms on every simplex. On success the witness
/// holds one concrete system of bijections (reproducible: slots are matched
/// in index order against notes in ascending pitch order). On failure, every
/// infeasible simplex is reported with a Hall-violating facet set.
inline VerifyResult verify(const Tonnetz& t) {
  VerifyResult result;
  result.ok = true;
  const SimplicialSurface& s = t.surface();
  for (int d = 0; d < 3; ++d) {
    result.witness.down[d].resize(s.simplex_count(d));
    result.witness.up[d].resize(s.simplex_count(d));
  }
  for (int e = 0; e < s.edge_count(); ++e) detail::run_matching(t, edge_id(e), true, result);
  for (int f = 0; f < s.face_count(); ++f) detail::run_matching(t, face_id(f), true, result);
  for (int v = 0; v < s.vertex_count(); ++v) detail::run_matching(t, vertex_id(v), false, result);
  for (int e = 0; e < s.edge_count(); ++e) detail::run_matching(t, edge_id(e), false, result);
  return result;
}

/// Extend a faces-only labelling to a full tonnetz, making the arbitrary
/// choices with a seeded generator so runs are reproducible. Every face label
/// must have order 3; the result always verifies.
inline Tonnetz extend_from_faces(const SimplicialSurface& surface,
                                 const std::vector<PitchMultiset>& face_labels,
                                 std::uint64_t seed) {
  if (static_cast<int>(face_labels.size()) != surface.face_count())
    throw std::invalid_argument("need one label per face");
  for (const auto& m : face_labels)
    if (m.order() != 3)
      throw std::invalid_argument("face label " + m.str() + " does not have order 3");

  std::mt19937_64 rng(seed);
  auto shuffled = [&rng](std::vector<PitchClass> v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::uniform_int_distribution<std::size_t> d(0, i - 1);
      std::swap(v[i - 1], v[d(rng)]);
    }
    return v;
  };

  // Choose a bijection from each face's edge slots to its label, then read
  // off each edge label from the two face slots it occupies.
  std::vector<std::array<PitchClass, 3>> face_choice(surface.face_count());
  for (int f = 0; f < surface.face_count(); ++f) {
    const auto notes = shuffled(face_labels[f].expand());
    for (int i = 0; i < 3; ++i) face_choice[f][i] = notes[i];
  }
  std::vector<PitchMultiset> edge_labels(surface.edge_count());
  for (int f = 0; f < surface.face_count(); ++f)
    for (int i = 0; i < 3; ++i)
      edge_labels[surface.face_edges(f)[i]].add(face_choice[f][i]);

  // Then a bijection from each edge's endpoint slots to its label, and read
  // off the vertex labels.
  std::vector<std::array<PitchClass, 2>> edge_choice(surface.edge_count());
  for (int e = 0; e < surface.edge_count(); ++e) {
    const auto notes = shuffled(edge_labels[e].expand());
    edge_choice[e] = {notes[0], notes[1]};
  }
  std::vector<PitchMultiset> vertex_labels(surface.vertex_count());
  for (int e = 0; e < surface.edge_count(); ++e) {
    vertex_labels[surface.edge_vertices(e)[0]].add(edge_choice[e][0]);
    vertex_labels[surface.edge_vertices(e)[1]].add(edge_choice[e][1]);
  }

  return Tonnetz(surface, std::move(vertex_labels), std::move(edge_labels),
                 std::vector<PitchMultiset>(face_labels));
}

/// The unique vertex tonnetz over a vertex assignment: edges take their
/// endpoint values, faces their corner values, and each vertex its own value
/// with multiplicity equal to its valency.
inline Tonnetz from_vertex_map(const SimplicialSurface& surface,
                               const std::vector<PitchClass>& vertex_values) {
  if (static_cast<int>(vertex_values.size()) != surface.vertex_count())
    throw std::invalid_argument("need one value per vertex");
  std::vector<PitchMultiset> vl(surface.vertex_count()), el(surface.edge_count()),
      fl(surface.face_count());
  for (int v = 0; v < surface.vertex_count(); ++v)
    vl[v].add(vertex_values[v], surface.valency(v));
  for (int e = 0; e < surface.edge_count(); ++e) {
    el[e].add(vertex_values[surface.edge_vertices(e)[0]]);
    el[e].add(vertex_values[surface.edge_vertices(e)[1]]);
  }
  for (int f = 0; f < surface.face_count(); ++f) {
    if (!surface.face_chainable(f))
      throw std::invalid_argument("face " + surface.face_name(f) + " has no corners");
    for (int c : surface.face_corners(f)) fl[f].add(vertex_values[c]);
  }
  return Tonnetz(surface, std::move(vl), std::move(el), std::move(fl));
}

/// The unique edge tonnetz over an edge assignment: each edge becomes a
/// unison pair, faces collect their three edge values, vertices the values of
/// their incident edge slots (a loop contributes twice).
inline Tonnetz from_edge_map(const SimplicialSurface& surface,
                             const std::vector<PitchClass>& edge_values) {
  if (static_cast<int>(edge_values.size()) != surface.edge_count())
    throw std::invalid_argument("need one value per edge");
  std::vector<PitchMultiset> vl(surface.vertex_count()), el(surface.edge_count()),
      fl(surface.face_count());
  for (int e = 0; e < surface.edge_count(); ++e) el[e].add(edge_values[e], 2);
  for (int f = 0; f < surface.face_count(); ++f)
    for (int e : surface.face_edges(f)) fl[f].add(edge_values[e]);
  for (int v = 0; v < surface.vertex_count(); ++v)
    for (int e : surface.vertex_edges(v)) vl[v].add(edge_values[e]);
  return Tonnetz(surface, std::move(vl), std::move(el), std::move(fl));
}

struct TonnetzKind {
  bool is_vertex_tonnetz = false;
  bool is_edge_tonnetz = false;
  bool is_major = false;
  bool is_minor = false;
  bool is_major_minor = false;
  bool is_complete_major_minor = false;
};

inline TonnetzKind kind(const Tonnetz& t) {
  TonnetzKind k;
  const auto& s = t.surface();
  k.is_vertex_tonnetz = true;
  for (int v = 0; v < s.vertex_count(); ++v)
    if (t.label(vertex_id(v)).support_size() != 1) k.is_vertex_tonnetz = false;
  k.is_edge_tonnetz = true;
  for (int e = 0; e < s.edge_count(); ++e)
    if (t.label(edge_id(e)).support_size() != 1) k.is_edge_tonnetz = false;

  k.is_major = k.is_minor = k.is_major_minor = s.face_count() > 0;
  std::set<ChordQuality> seen;
  for (int f = 0; f < s.face_count(); ++f) {
    const ChordQuality q = classify(t.label(face_id(f)));
    seen.insert(q);
    if (q.tag != ChordQuality::Tag::Major) k.is_major = false;
    if (q.tag != ChordQuality::Tag::Minor) k.is_minor = false;
    if (q.tag != ChordQuality::Tag::Major && q.tag != ChordQuality::Tag::Minor)
      k.is_major_minor = false;
  }
  if (k.is_major_minor) {
    int covered = 0;
    for (int r = 0; r < kPitchClasses; ++r) {
      covered += seen.count({ChordQuality::Tag::Major, PitchClass(r)});
      covered += seen.count({ChordQuality::Tag::Minor, PitchClass(r)});
    }
    k.is_complete_major_minor = covered == 24;
  }
  return k;
}

inline Tonnetz transpose_tonnetz(const Tonnetz& t, Interval k) { return t.transposed(k); }

/// Does the automorphism carry every label to its transposition by k?
inline bool is_transposition_symmetry(const Tonnetz& t, const ComplexAutomorphism& phi,
                                      Interval k) {
  const auto& s = t.surface();
  for (int v = 0; v < s.vertex_count(); ++v)
    if (t.label(vertex_id(phi.vertex_perm[v])) != t.label(vertex_id(v)).transposed(k))
      return false;
  for (int e = 0; e < s.edge_count(); ++e)
    if (t.label(edge_id(phi.edge_perm[e])) != t.label(edge_id(e)).transposed(k))
      return false;
  for (int f = 0; f < s.face_count(); ++f)
    if (t.label(face_id(phi.face_perm[f])) != t.label(face_id(f)).transposed(k))
      return false;
  return true;
}

/// All automorphisms realizing transposition by k, in canonical order.
inline std::vector<ComplexAutomorphism> find_transposition_symmetries(const Tonnetz& t,
                                                                      Interval k) {
  std::vector<ComplexAutomorphism> out;
  for (const auto& phi : find_automorphisms(t.surface()))
    if (is_transposition_symmetry(t, phi, k)) out.push_back(phi);
  return out;
}

/// First automorphism realizing transposition by k, if any. For k = 0 this
/// is always the identity.
inline std::optional<ComplexAutomorphism> find_transposition_symmetry(const Tonnetz& t,
                                                                      Interval k) {
  auto all = find_transposition_symmetries(t, k);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace tonnetz
