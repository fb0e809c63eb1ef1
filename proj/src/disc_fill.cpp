#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "systolic/helly.hpp"

namespace systolic {

namespace {

// Does the image set of up to three labels span a simplex of target?
bool spans(const Complex& target, VertexId a, VertexId b) {
  if (a == b) return target.has_vertex(a);
  return target.has_edge(a, b);
}

bool spans3(const Complex& target, VertexId a, VertexId b, VertexId c) {
  std::vector<VertexId> v{a, b, c};
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return target.contains(Simplex(v));
}

struct DiscSearch {
  const Complex& target;
  int max_area;
  long long budget;
  long long expansions = 0;
  std::vector<VertexId> phi;                  // node labels, grows
  std::vector<std::array<int, 3>> triangles;  // current partial filling
  std::map<std::vector<VertexId>, int> failed;  // canonical labels -> area
  bool aborted = false;

  explicit DiscSearch(const Complex& t, int area, long long b)
      : target(t), max_area(area), budget(b) {}

  std::vector<VertexId> canonical_labels(const std::vector<int>& hole) const {
    const std::size_t n = hole.size();
    std::vector<VertexId> best;
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t start = 0; start < n; ++start) {
        std::vector<VertexId> cand(n);
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t idx =
              dir == 0 ? (start + i) % n : (start + 2 * n - i) % n;
          cand[i] = phi[hole[idx]];
        }
        if (best.empty() || cand < best) best = std::move(cand);
      }
    }
    return best;
  }

  // Candidates u with {a, b, u} spanning a real triangle of target.
  std::vector<VertexId> push_candidates(VertexId a, VertexId b) const {
    std::vector<VertexId> out;
    if (a == b) {
      return out;  // degenerate hole edge: ears will consume it
    }
    for (VertexId u : target.neighbors(a)) {
      if (u == b) continue;
      std::vector<VertexId> tri{a, b, u};
      std::sort(tri.begin(), tri.end());
      if (target.contains(Simplex(tri))) out.push_back(u);
    }
    return out;
  }

  bool dfs(std::vector<int>& hole, int area_left) {
    if (aborted) return false;
    if (++expansions > budget) {
      aborted = true;
      return false;
    }
    const int n = static_cast<int>(hole.size());
    if (n - 2 > area_left) return false;
    if (n == 3) {
      if (spans3(target, phi[hole[0]], phi[hole[1]], phi[hole[2]])) {
        triangles.push_back({hole[0], hole[1], hole[2]});
        return true;
      }
    }
    auto key = canonical_labels(hole);
    auto it = failed.find(key);
    if (it != failed.end() && it->second >= area_left) return false;

    // Ears (only meaningful for holes of length >= 4).
    if (n >= 4) {
      for (int t = 0; t < n; ++t) {
        const int a = hole[(t + n - 1) % n], m = hole[t],
                  b = hole[(t + 1) % n];
        if (!spans3(target, phi[a], phi[m], phi[b])) continue;
        triangles.push_back({a, m, b});
        std::vector<int> next;
        next.reserve(n - 1);
        for (int i = 0; i < n; ++i) {
          if (i != t) next.push_back(hole[i]);
        }
        if (dfs(next, area_left - 1)) return true;
        triangles.pop_back();
        if (aborted) return false;
      }
    }
    // Cone over the whole hole.
    if (n >= 3 && n <= area_left) {
      std::vector<VertexId> cands;
      int anchor = -1;
      for (int t = 0; t < n; ++t) {
        if (phi[hole[t]] != phi[hole[(t + 1) % n]]) {
          anchor = t;
          break;
        }
      }
      if (anchor >= 0) {
        cands = push_candidates(phi[hole[anchor]],
                                phi[hole[(anchor + 1) % n]]);
      } else {
        cands.push_back(phi[hole[0]]);  // fully degenerate hole
      }
      for (VertexId u : cands) {
        bool ok = true;
        for (int t = 0; t < n && ok; ++t) {
          const VertexId a = phi[hole[t]], b = phi[hole[(t + 1) % n]];
          if (a == b) {
            ok = spans(target, a, u) || a == u;
          } else {
            ok = spans3(target, a, b, u);
          }
        }
        if (!ok) continue;
        const int w = static_cast<int>(phi.size());
        phi.push_back(u);
        for (int t = 0; t < n; ++t) {
          triangles.push_back({hole[t], hole[(t + 1) % n], w});
        }
        return true;  // hole fully closed
      }
    }
    // Edge pushes: bulge one hole edge inward through a new node.
    if (n + 1 - 2 <= area_left - 1) {
      for (int t = 0; t < n; ++t) {
        const int a = hole[t], b = hole[(t + 1) % n];
        for (VertexId u : push_candidates(phi[a], phi[b])) {
          const int w = static_cast<int>(phi.size());
          phi.push_back(u);
          triangles.push_back({a, b, w});
          std::vector<int> next;
          next.reserve(n + 1);
          for (int i = 0; i <= t; ++i) next.push_back(hole[i]);
          next.push_back(w);
          for (int i = t + 1; i < n; ++i) next.push_back(hole[i]);
          if (dfs(next, area_left - 1)) return true;
          triangles.pop_back();
          phi.pop_back();
          if (aborted) return false;
        }
      }
    }
    if (it == failed.end()) {
      if (failed.size() < (1u << 20)) failed[key] = area_left;
    } else if (it->second < area_left) {
      it->second = area_left;
    }
    return false;
  }
};

bool walk_is_closed(const Complex& target,
                    const std::vector<VertexId>& walk) {
  const std::size_t n = walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId a = walk[i], b = walk[(i + 1) % n];
    if (!target.has_vertex(a)) return false;
    if (a != b && !target.has_edge(a, b)) return false;
  }
  return true;
}

// A closed walk is collapsible if spur and degenerate-edge folds reduce it
// to at most one vertex.
bool walk_collapses(std::vector<VertexId> w) {
  bool progress = true;
  while (w.size() > 2 && progress) {
    progress = false;
    const int n = static_cast<int>(w.size());
    for (int t = 0; t < n; ++t) {
      if (w[t] == w[(t + 1) % n]) {
        w.erase(w.begin() + (t + 1) % n);
        progress = true;
        break;
      }
      if (w[(t + n - 1) % n] == w[(t + 1) % n]) {
        // Fold the spur at t: drop t and one copy of its equal neighbors.
        int i1 = t, i2 = (t + 1) % n;
        if (i1 < i2) {
          w.erase(w.begin() + i2);
          w.erase(w.begin() + i1);
        } else {
          w.erase(w.begin() + i1);
          w.erase(w.begin() + i2);
        }
        progress = true;
        break;
      }
    }
  }
  return w.size() <= 2;
}

}  // namespace

DiscResult fill_disc(const Complex& target,
                     const std::vector<VertexId>& boundary_walk, int max_area,
                     long long node_budget) {
  DiscResult res;
  if (!walk_is_closed(target, boundary_walk)) {
    res.status = SearchStatus::BadInput;
    return res;
  }
  const int m = static_cast<int>(boundary_walk.size());
  if (m < 3) {
    if (walk_collapses(boundary_walk)) {
      res.status = SearchStatus::Found;
      res.disc.boundary_len = m;
      res.disc.node_count = m;
      res.disc.phi = boundary_walk;
      res.disc.collapsed = true;
    } else {
      res.status = SearchStatus::BadInput;
    }
    return res;
  }
  const int lower = m - 2;
  long long spent = 0;
  for (int area = lower; area <= max_area; ++area) {
    DiscSearch search(target, area, node_budget - spent);
    search.phi = boundary_walk;
    std::vector<int> hole(m);
    for (int i = 0; i < m; ++i) hole[i] = i;
    const bool found = search.dfs(hole, area);
    spent += search.expansions;
    res.expansions = spent;
    if (found) {
      res.status = SearchStatus::Found;
      res.disc.boundary_len = m;
      res.disc.node_count = static_cast<int>(search.phi.size());
      res.disc.phi = std::move(search.phi);
      res.disc.triangles = std::move(search.triangles);
      return res;
    }
    if (search.aborted || spent >= node_budget) {
      res.status = SearchStatus::Exhausted;
      return res;
    }
  }
  res.status = SearchStatus::Exhausted;
  return res;
}

Validation verify_disc_filling(const Complex& target,
                               const std::vector<VertexId>& boundary_walk,
                               const DiscFilling& d) {
  const int m = static_cast<int>(boundary_walk.size());
  if (d.boundary_len != m) {
    return Validation::fail("disc boundary length mismatch");
  }
  for (int i = 0; i < m; ++i) {
    if (d.phi[i] != boundary_walk[i]) {
      return Validation::fail("disc boundary labels do not match the walk");
    }
  }
  if (d.collapsed) {
    if (!d.triangles.empty()) {
      return Validation::fail("collapsed disc with triangles");
    }
    if (m >= 3 || !walk_collapses(boundary_walk)) {
      return Validation::fail("walk does not collapse to a point");
    }
    return {};
  }
  if (m < 3) return Validation::fail("regular disc needs a walk of length 3");
  if (static_cast<int>(d.phi.size()) != d.node_count) {
    return Validation::fail("phi size mismatch");
  }
  // Every triangle: distinct nodes in range, image spans in target.
  std::set<std::array<int, 3>> seen;
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& t : d.triangles) {
    std::array<int, 3> s = t;
    std::sort(s.begin(), s.end());
    if (s[0] < 0 || s[2] >= d.node_count) {
      return Validation::fail("triangle node out of range");
    }
    if (s[0] == s[1] || s[1] == s[2]) {
      return Validation::fail("triangle with repeated node");
    }
    if (!seen.insert(s).second) {
      return Validation::fail("duplicate triangle");
    }
    if (!spans3(target, d.phi[s[0]], d.phi[s[1]], d.phi[s[2]])) {
      return Validation::fail("triangle image does not span a simplex");
    }
    edge_count[{s[0], s[1]}]++;
    edge_count[{s[0], s[2]}]++;
    edge_count[{s[1], s[2]}]++;
  }
  // Boundary edges exactly once, interior edges exactly twice.
  std::set<std::pair<int, int>> boundary_edges;
  for (int i = 0; i < m; ++i) {
    int a = i, b = (i + 1) % m;
    if (a > b) std::swap(a, b);
    boundary_edges.insert({a, b});
  }
  if (boundary_edges.size() != static_cast<std::size_t>(m)) {
    return Validation::fail("boundary walk repeats an abstract edge");
  }
  for (const auto& [e, c] : edge_count) {
    const bool on_boundary = boundary_edges.count(e) > 0;
    if (on_boundary && c != 1) {
      return Validation::fail("boundary edge not in exactly one triangle");
    }
    if (!on_boundary && c != 2) {
      return Validation::fail("interior edge not in exactly two triangles");
    }
  }
  for (const auto& e : boundary_edges) {
    if (!edge_count.count(e)) {
      return Validation::fail("boundary edge missing from the filling");
    }
  }
  // Euler characteristic of a disc.
  std::set<int> used;
  for (const auto& t : d.triangles) used.insert(t.begin(), t.end());
  if (static_cast<int>(used.size()) != d.node_count) {
    return Validation::fail("disc has an unused node");
  }
  const long long v = d.node_count;
  const long long e = static_cast<long long>(edge_count.size());
  const long long f = static_cast<long long>(d.triangles.size());
  if (v - e + f != 1) {
    return Validation::fail("disc Euler characteristic is not 1");
  }
  // Connectivity of the triangle dual graph.
  if (!d.triangles.empty()) {
    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (std::size_t i = 0; i < d.triangles.size(); ++i) {
      std::array<int, 3> s = d.triangles[i];
      std::sort(s.begin(), s.end());
      edge_tris[{s[0], s[1]}].push_back(static_cast<int>(i));
      edge_tris[{s[0], s[2]}].push_back(static_cast<int>(i));
      edge_tris[{s[1], s[2]}].push_back(static_cast<int>(i));
    }
    std::vector<bool> vis(d.triangles.size(), false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    std::size_t reach = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (const auto& [e2, tris] : edge_tris) {
        if (tris.size() == 2 && (tris[0] == i || tris[1] == i)) {
          int j = tris[0] == i ? tris[1] : tris[0];
          if (!vis[j]) {
            vis[j] = true;
            ++reach;
            q.push(j);
          }
        }
      }
    }
    if (reach != d.triangles.size()) {
      return Validation::fail("disc is not connected");
    }
  }
  return {};
}

}  // namespace systolic
