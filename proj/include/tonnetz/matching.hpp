#pragma once

// Small deterministic bipartite matcher (augmenting paths). Instances here
// never exceed a dozen slots per side, so there is no need for anything
// fancier; what matters is reproducible output and a usable certificate of
// infeasibility.

#include <functional>
#include <vector>

namespace tonnetz {

struct MatchingResult {
  bool perfect = false;
  /// match_left[i] = matched right index, or -1.
  std::vector<int> match_left;
  /// On failure: a Hall-violating set of left indices (their joint
  /// neighbourhood is strictly smaller than the set).
  std::vector<int> hall_violator;
};

/// Maximum matching that tries to saturate every left vertex. `admissible`
/// answers whether left i may pair with right j. Left vertices are processed
/// in index order and right candidates scanned in index order, so results are
/// deterministic for a fixed adjacency.
inline MatchingResult match_bipartite(
    int n_left, int n_right,
    const std::function<bool(int, int)>& admissible) {
  MatchingResult res;
  res.match_left.assign(n_left, -1);
  std::vector<int> match_right(n_right, -1);

  std::vector<char> visited(n_right, 0);
  std::function<bool(int)> augment = [&](int u) -> bool {
    for (int v = 0; v < n_right; ++v) {
      if (visited[v] || !admissible(u, v)) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || augment(match_right[v])) {
        match_right[v] = u;
        res.match_left[u] = v;
        return true;
      }
    }
    return false;
  };

  bool all = true;
  for (int u = 0; u < n_left; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(u)) all = false;
  }
  res.perfect = all && n_left == n_right;

  if (!res.perfect) {
    // Alternating-path reachability from the unmatched left vertices gives a
    // left set S with |N(S)| < |S|.
    std::vector<char> left_in(n_left, 0), right_in(n_right, 0);
    std::vector<int> stack;
    for (int u = 0; u < n_left; ++u)
      if (res.match_left[u] < 0) {
        left_in[u] = 1;
        stack.push_back(u);
      }
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n_right; ++v) {
        if (!admissible(u, v) || right_in[v]) continue;
        right_in[v] = 1;
        const int w = match_right[v];
        if (w >= 0 && !left_in[w]) {
          left_in[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (int u = 0; u < n_left; ++u)
      if (left_in[u]) res.hall_violator.push_back(u);
  }
  return res;
}

}  // namespace tonnetz
