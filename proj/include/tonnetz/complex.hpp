#pragma once

// Finite abstract 2-complexes for triangulated closed surfaces and their
// quotients. Faces reference edges and edges reference vertices by explicit
// slot lists, never by geometric data, so torus quotients with parallel edges
// (and in principle loops) are first-class citizens.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tonnetz {

struct SimplexId {
  int dim = 0;  // 0 vertex, 1 edge, 2 face
  int index = 0;

  friend bool operator==(SimplexId, SimplexId) = default;
  friend auto operator<=>(SimplexId, SimplexId) = default;
};

inline SimplexId vertex_id(int i) { return {0, i}; }
inline SimplexId edge_id(int i) { return {1, i}; }
inline SimplexId face_id(int i) { return {2, i}; }

class SimplicialSurface {
 public:
  int add_vertex(std::string name) {
    vertex_names_.push_back(std::move(name));
    finalized_ = false;
    return static_cast<int>(vertex_names_.size()) - 1;
  }

  int add_edge(std::string name, int v0, int v1) {
    edge_names_.push_back(std::move(name));
    edge_verts_.push_back({v0, v1});
    finalized_ = false;
    return static_cast<int>(edge_names_.size()) - 1;
  }

  int add_face(std::string name, int e0, int e1, int e2) {
    face_names_.push_back(std::move(name));
    face_edges_.push_back({e0, e1, e2});
    finalized_ = false;
    return static_cast<int>(face_names_.size()) - 1;
  }

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edge_names_.size()); }
  int face_count() const { return static_cast<int>(face_names_.size()); }

  const std::array<int, 2>& edge_vertices(int e) const { return edge_verts_[e]; }
  const std::array<int, 3>& face_edges(int f) const { return face_edges_[f]; }

  const std::string& vertex_name(int i) const { return vertex_names_[i]; }
  const std::string& edge_name(int i) const { return edge_names_[i]; }
  const std::string& face_name(int i) const { return face_names_[i]; }
  const std::string& name(SimplexId s) const {
    switch (s.dim) {
      case 0: return vertex_names_[s.index];
      case 1: return edge_names_[s.index];
      default: return face_names_[s.index];
    }
  }

  int simplex_count(int dim) const {
    return dim == 0 ? vertex_count() : dim == 1 ? edge_count() : face_count();
  }

  /// The two face slots of an edge, sorted. Requires finalize().
  const std::vector<int>& edge_faces(int e) const { return edge_faces_[e]; }

  /// Incident edge slots of a vertex (a loop appears twice). Requires finalize().
  const std::vector<int>& vertex_edges(int v) const { return vertex_edge_slots_[v]; }

  /// Number of edge slots attached to the vertex; loops count twice.
  int valency(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("unknown vertex id");
    return static_cast<int>(vertex_edge_slots_[v].size());
  }

  /// Corner vertices of a face in some chained order (edge i of the chain
  /// runs corner i -> corner i+1). Requires a chainable face; see validate().
  const std::array<int, 3>& face_corners(int f) const { return face_corners_[f]; }
  bool face_chainable(int f) const { return face_chain_ok_[f]; }

  int euler_characteristic() const {
    return vertex_count() - edge_count() + face_count();
  }

  /// Builds the incidence caches. Call after construction and before any
  /// query; id ranges are checked here.
  void finalize() {
    for (auto& [a, b] : edge_verts_)
      if (a < 0 || a >= vertex_count() || b < 0 || b >= vertex_count())
        throw std::out_of_range("edge references unknown vertex");
    for (auto& es : face_edges_)
      for (int e : es)
        if (e < 0 || e >= edge_count())
          throw std::out_of_range("face references unknown edge");

    edge_faces_.assign(edge_count(), {});
    for (int f = 0; f < face_count(); ++f)
      for (int e : face_edges_[f]) edge_faces_[e].push_back(f);

    vertex_edge_slots_.assign(vertex_count(), {});
    for (int e = 0; e < edge_count(); ++e) {
      vertex_edge_slots_[edge_verts_[e][0]].push_back(e);
      vertex_edge_slots_[edge_verts_[e][1]].push_back(e);
    }

    face_corners_.assign(face_count(), {-1, -1, -1});
    face_chain_ok_.assign(face_count(), false);
    for (int f = 0; f < face_count(); ++f) chain_face(f);
    finalized_ = true;
  }

  bool finalized() const { return finalized_; }

  friend bool operator==(const SimplicialSurface& a, const SimplicialSurface& b) {
    return a.vertex_names_ == b.vertex_names_ && a.edge_names_ == b.edge_names_ &&
           a.face_names_ == b.face_names_ && a.edge_verts_ == b.edge_verts_ &&
           a.face_edges_ == b.face_edges_;
  }

 private:
  // A face is well-formed when its three edges can be arranged in a cycle,
  // consecutive edges sharing an endpoint; the three shared endpoints are the
  // corners. Slot order is respected if possible, otherwise any permutation
  // is accepted (builders order slots, validation does not care).
  void chain_face(int f) {
    static const std::array<std::array<int, 3>, 6> kPerms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& perm : kPerms) {
      for (int bits = 0; bits < 8; ++bits) {
        std::array<int, 3> start{}, end{};
        for (int i = 0; i < 3; ++i) {
          const int e = face_edges_[f][perm[i]];
          const int o = (bits >> i) & 1;
          start[i] = edge_verts_[e][o];
          end[i] = edge_verts_[e][1 - o];
        }
        if (end[0] == start[1] && end[1] == start[2] && end[2] == start[0]) {
          face_corners_[f] = {start[0], start[1], start[2]};
          face_chain_ok_[f] = true;
          return;
        }
      }
    }
  }

  std::vector<std::string> vertex_names_, edge_names_, face_names_;
  std::vector<std::array<int, 2>> edge_verts_;
  std::vector<std::array<int, 3>> face_edges_;

  std::vector<std::vector<int>> edge_faces_;
  std::vector<std::vector<int>> vertex_edge_slots_;
  std::vector<std::array<int, 3>> face_corners_;
  std::vector<char> face_chain_ok_;
  bool finalized_ = false;
};

struct ValidationIssue {
  SimplexId simplex;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;

  void flag(SimplexId s, std::string msg) {
    ok = false;
    issues.push_back({s, std::move(msg)});
  }
};

/// Closed-pseudo-surface check: every edge in exactly two face slots, every
/// face chainable into a 3-cycle of edges, no stray vertices. Violations are
/// report entries, not exceptions.
inline ValidationReport validate(const SimplicialSurface& s) {
  ValidationReport report;
  if (!s.finalized()) throw std::logic_error("surface not finalized");

  for (int e = 0; e < s.edge_count(); ++e) {
    const int n = static_cast<int>(s.edge_faces(e).size());
    if (n != 2)
      report.flag(edge_id(e), "edge " + s.edge_name(e) + " lies in " +
                                  std::to_string(n) + " face slots, expected 2");
  }
  for (int f = 0; f < s.face_count(); ++f) {
    if (!s.face_chainable(f))
      report.flag(face_id(f), "face " + s.face_name(f) +
                                  " edges do not close into a triangle");
  }
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.vertex_edges(v).empty())
      report.flag(vertex_id(v), "vertex " + s.vertex_name(v) + " is isolated");
  }
  return report;
}

/// Bijections on vertices, edges and faces that preserve incidence with
/// multiplicity.
struct ComplexAutomorphism {
  std::vector<int> vertex_perm, edge_perm, face_perm;

  friend bool operator==(const ComplexAutomorphism&, const ComplexAutomorphism&) = default;
  friend auto operator<=>(const ComplexAutomorphism& a, const ComplexAutomorphism& b) {
    if (auto c = a.face_perm <=> b.face_perm; c != 0) return c;
    if (auto c = a.edge_perm <=> b.edge_perm; c != 0) return c;
    return a.vertex_perm <=> b.vertex_perm;
  }

  static ComplexAutomorphism identity(const SimplicialSurface& s) {
    ComplexAutomorphism a;
    a.vertex_perm.resize(s.vertex_count());
    a.edge_perm.resize(s.edge_count());
    a.face_perm.resize(s.face_count());
    std::iota(a.vertex_perm.begin(), a.vertex_perm.end(), 0);
    std::iota(a.edge_perm.begin(), a.edge_perm.end(), 0);
    std::iota(a.face_perm.begin(), a.face_perm.end(), 0);
    return a;
  }

  bool is_identity() const {
    auto id = [](const std::vector<int>& p) {
      for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) return false;
      return true;
    };
    return id(vertex_perm) && id(edge_perm) && id(face_perm);
  }

  /// this∘other: apply `other` first.
  ComplexAutomorphism compose(const ComplexAutomorphism& other) const {
    auto comp = [](const std::vector<int>& f, const std::vector<int>& g) {
      std::vector<int> h(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
      return h;
    };
    return {comp(vertex_perm, other.vertex_perm), comp(edge_perm, other.edge_perm),
            comp(face_perm, other.face_perm)};
  }

  ComplexAutomorphism inverse() const {
    auto inv = [](const std::vector<int>& p) {
      std::vector<int> q(p.size());
      for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
      return q;
    };
    return {inv(vertex_perm), inv(edge_perm), inv(face_perm)};
  }

  int order() const {
    auto perm_order = [](const std::vector<int>& p) {
      std::vector<char> seen(p.size(), 0);
      long long ord = 1;
      for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
          seen[j] = 1;
          j = p[j];
          ++len;
        }
        ord = std::lcm(ord, static_cast<long long>(len));
      }
      return ord;
    };
    long long o = std::lcm(perm_order(vertex_perm), perm_order(edge_perm));
    return static_cast<int>(std::lcm(o, perm_order(face_perm)));
  }
};

namespace detail {

struct AutoSearch {
  const SimplicialSurface& s;
  // BFS order over the dual graph: first entry is the anchor, later entries
  // carry the edge and parent face through which they were first reached.
  struct Step {
    int face;
    int via_edge = -1;
    int parent = -1;
  };
  std::vector<Step> order;
  std::vector<ComplexAutomorphism> found;

  explicit AutoSearch(const SimplicialSurface& surface) : s(surface) {
    std::vector<char> seen(s.face_count(), 0);
    std::vector<int> queue;
    if (s.face_count() > 0) {
      order.push_back({0});
      seen[0] = 1;
      queue.push_back(0);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int f = queue[qi];
      for (int e : s.face_edges(f)) {
        for (int g : s.edge_faces(e)) {
          if (!seen[g]) {
            seen[g] = 1;
            order.push_back({g, e, f});
            queue.push_back(g);
          }
        }
      }
    }
    if (static_cast<int>(order.size()) != s.face_count())
      throw std::invalid_argument("automorphism search requires a connected surface");
  }

  // Map face `f` onto `g` assigning f's edge slots through `perm`;
  // returns false on conflict (caller snapshots state).
  bool assign_face(std::vector<int>& emap, std::vector<char>& eused, int f, int g,
                   const std::array<int, 3>& perm) {
    const auto& fe = s.face_edges(f);
    const auto& ge = s.face_edges(g);
    for (int i = 0; i < 3; ++i) {
      const int e = fe[i], e2 = ge[perm[i]];
      if (emap[e] == -1) {
        if (eused[e2]) return false;
        emap[e] = e2;
        eused[e2] = 1;
      } else if (emap[e] != e2) {
        return false;
      }
    }
    return true;
  }

  void recurse(std::size_t step, std::vector<int> fmap, std::vector<char> fused,
               std::vector<int> emap, std::vector<char> eused) {
    if (step == order.size()) {
      emit(fmap, emap);
      return;
    }
    const Step& st = order[step];
    // The image face is forced: the coface of emap[via_edge] other than the
    // parent's image (slots counted with multiplicity).
    const int e2 = emap[st.via_edge];
    const auto& cof = s.edge_faces(e2);
    const int pimg = fmap[st.parent];
    int g = -1;
    if (cof.size() == 2) {
      if (cof[0] == pimg)
        g = cof[1];
      else if (cof[1] == pimg)
        g = cof[0];
    }
    if (g < 0 || fused[g]) return;

    static const std::array<std::array<int, 3>, 6> kPerms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& perm : kPerms) {
      auto fmap2 = fmap;
      auto fused2 = fused;
      auto emap2 = emap;
      auto eused2 = eused;
      fmap2[st.face] = g;
      fused2[g] = 1;
      if (!assign_face(emap2, eused2, st.face, g, perm)) continue;
      recurse(step + 1, std::move(fmap2), std::move(fused2), std::move(emap2),
              std::move(eused2));
    }
  }

  // With faces and edges mapped, enumerate every vertex bijection compatible
  // with all edge endpoint pairs.
  void emit(const std::vector<int>& fmap, const std::vector<int>& emap) {
    std::vector<int> vmap(s.vertex_count(), -1);
    std::vector<char> vused(s.vertex_count(), 0);

    auto try_set = [&](int x, int y, int& placed) -> bool {
      if (vmap[x] != -1) return vmap[x] == y;
      if (vused[y]) return false;
      vmap[x] = y;
      vused[y] = 1;
      placed = x;
      return true;
    };

    std::function<void(int)> place = [&](int e) {
      if (e == s.edge_count()) {
        for (int v = 0; v < s.vertex_count(); ++v)
          if (vmap[v] == -1) return;  // isolated vertex; not covered
        found.push_back({vmap, emap, fmap});
        return;
      }
      const auto& uv = s.edge_vertices(e);
      const auto& uv2 = s.edge_vertices(emap[e]);
      for (int flip = 0; flip < 2; ++flip) {
        if (flip == 1 && uv2[0] == uv2[1]) break;  // same assignment twice
        const int a = uv2[flip], b = uv2[1 - flip];
        int placed_u = -1, placed_v = -1;
        if (try_set(uv[0], a, placed_u) && try_set(uv[1], b, placed_v)) place(e + 1);
        if (placed_v >= 0) {
          vused[vmap[placed_v]] = 0;
          vmap[placed_v] = -1;
        }
        if (placed_u >= 0) {
          vused[vmap[placed_u]] = 0;
          vmap[placed_u] = -1;
        }
      }
    };
    place(0);
  }
};

}  // namespace detail

/// All incidence-preserving bijections of a connected closed pseudo-surface,
/// sorted canonically (the identity comes first). With `limit`, only the
/// first `limit` in that order are returned.
inline std::vector<ComplexAutomorphism> find_automorphisms(
    const SimplicialSurface& s, std::optional<int> limit = std::nullopt) {
  if (s.face_count() == 0) return {};
  detail::AutoSearch search(s);

  static const std::array<std::array<int, 3>, 6> kPerms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int g0 = 0; g0 < s.face_count(); ++g0) {
    for (const auto& perm : kPerms) {
      std::vector<int> fmap(s.face_count(), -1), emap(s.edge_count(), -1);
      std::vector<char> fused(s.face_count(), 0), eused(s.edge_count(), 0);
      fmap[0] = g0;
      fused[g0] = 1;
      if (!search.assign_face(emap, eused, 0, g0, perm)) continue;
      search.recurse(1, fmap, fused, emap, eused);
    }
  }

  std::sort(search.found.begin(), search.found.end());
  search.found.erase(std::unique(search.found.begin(), search.found.end()),
                     search.found.end());
  if (limit && static_cast<int>(search.found.size()) > *limit)
    search.found.resize(*limit);
  return search.found;
}

}  // namespace tonnetz
