#include "systolic/largeness.hpp"

#include <set>
#include <stdexcept>

namespace systolic {

std::vector<VertexId> Wheel::all_vertices() const {
  std::vector<VertexId> out = rim;
  out.push_back(hub);
  out.push_back(pendant);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// DFS over induced paths [s, v1, ..., vk]: every vertex > s, each new vertex
// adjacent to the last only (among interior path vertices). A neighbor of s
// closes a chordless cycle and is not extended further.
void full_cycle_dfs(const Complex& x, std::vector<VertexId>& path, int max_len,
                    std::vector<FullCycle>& out) {
  const VertexId s = path.front();
  const VertexId last = path.back();
  for (VertexId u : x.neighbors(last)) {
    if (u <= s) continue;
    bool on_path = false;
    bool chord = false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (path[i] == u) {
        on_path = true;
        break;
      }
      if (x.has_edge(path[i], u)) {
        chord = true;
        break;
      }
    }
    if (on_path || chord) continue;
    if (x.has_edge(u, s)) {
      const int len = static_cast<int>(path.size()) + 1;
      if (len >= 3 && len <= max_len && path[1] < u) {
        if (len == 3 && x.contains(Simplex{s, path[1], u})) continue;
        FullCycle c;
        c.vertices = path;
        c.vertices.push_back(u);
        out.push_back(std::move(c));
      }
      continue;
    }
    if (static_cast<int>(path.size()) + 2 <= max_len) {
      path.push_back(u);
      full_cycle_dfs(x, path, max_len, out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<FullCycle> enumerate_full_cycles(const Complex& x, int max_len) {
  if (max_len < 3) return {};
  std::vector<FullCycle> out;
  for (VertexId s : x.vertices()) {
    for (VertexId v : x.neighbors(s)) {
      if (v <= s) continue;
      std::vector<VertexId> path{s, v};
      full_cycle_dfs(x, path, max_len, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_k_large(const Complex& x, int k) {
  if (k < 4) throw std::domain_error("is_k_large: need k >= 4");
  if (!is_flag(x)) {
    throw std::domain_error("is_k_large: largeness is defined for flag "
                            "complexes");
  }
  return enumerate_full_cycles(x, k - 1).empty();
}

bool is_locally_k_large(const Complex& x, int k) {
  if (!is_k_large(x, k)) return false;
  for (const Simplex& s : x.simplices()) {
    if (!enumerate_full_cycles(link(x, s), k - 1).empty()) return false;
  }
  return true;
}

namespace {

// Lexicographically least representative over rotations and reflections.
std::vector<VertexId> canonical_cycle(const std::vector<VertexId>& cyc) {
  const std::size_t n = cyc.size();
  std::vector<VertexId> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<VertexId> cand(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t idx =
            dir == 0 ? (start + i) % n : (start + n - i % n) % n;
        cand[i] = cyc[idx];
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

// All closed k-cycles (not necessarily induced) through vertices of `verts`
// using edges of x, up to rotation/reflection.
void rim_dfs(const Complex& x, const std::vector<VertexId>& verts,
             std::vector<VertexId>& path, int k,
             std::set<std::vector<VertexId>>& out) {
  const VertexId s = path.front();
  const VertexId last = path.back();
  if (static_cast<int>(path.size()) == k) {
    if (x.has_edge(last, s) && path[1] < path.back()) {
      out.insert(path);
    }
    return;
  }
  for (VertexId u : verts) {
    if (u <= s) continue;
    if (!x.has_edge(last, u)) continue;
    if (std::find(path.begin(), path.end(), u) != path.end()) continue;
    path.push_back(u);
    rim_dfs(x, verts, path, k, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Wheel> enumerate_wheels_with_pendant(const Complex& x, int k,
                                                 bool require_triangle) {
  if (k < 4) throw std::domain_error("wheels: need k >= 4");
  std::set<Wheel> found;
  for (VertexId hub : x.vertices()) {
    const std::vector<VertexId>& nbrs = x.neighbors(hub);
    if (static_cast<int>(nbrs.size()) < k) continue;
    std::set<std::vector<VertexId>> rims;
    for (VertexId a : nbrs) {
      std::vector<VertexId> path{a};
      rim_dfs(x, nbrs, path, k, rims);
    }
    for (const std::vector<VertexId>& rim : rims) {
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          VertexId a = rim[i], b = rim[j];
          if (require_triangle && !x.has_edge(a, b)) continue;
          for (VertexId p : x.neighbors(std::min(a, b))) {
            if (p == hub || !x.has_edge(p, std::max(a, b))) continue;
            if (std::find(rim.begin(), rim.end(), p) != rim.end()) continue;
            Wheel w;
            w.hub = hub;
            w.rim = canonical_cycle(rim);
            w.pendant = p;
            w.attach = {std::min(a, b), std::max(a, b)};
            found.insert(std::move(w));
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

Sd2Result sd2star_witness(const Complex& x) {
  if (!is_flag(x)) {
    throw std::domain_error("sd2star: defined for flag complexes");
  }
  Sd2Result res;
  auto own = enumerate_full_cycles(x, 4);
  if (!own.empty()) {
    res.small_cycle = own.front();
    return res;
  }
  for (const Simplex& s : x.simplices()) {
    auto cycles = enumerate_full_cycles(link(x, s), 4);
    if (!cycles.empty()) {
      res.small_cycle = cycles.front();
      return res;
    }
  }
  for (const Wheel& w : enumerate_wheels_with_pendant(x, 5)) {
    const std::vector<VertexId> verts = w.all_vertices();
    bool in_some_ball = false;
    for (VertexId v : x.vertices()) {
      bool all = true;
      for (VertexId u : verts) {
        if (u != v && !x.has_edge(u, v)) {
          all = false;
          break;
        }
      }
      if (all) {
        in_some_ball = true;
        break;
      }
    }
    if (!in_some_ball) {
      res.witness = w;
      return res;
    }
  }
  res.ok = true;
  return res;
}

bool satisfies_sd2star(const Complex& x) { return sd2star_witness(x).ok; }

bool has_sd2star_links(const Complex& x) {
  if (!is_flag(x)) {
    throw std::domain_error("sd2star links: defined for flag complexes");
  }
  for (const Simplex& s : x.simplices()) {
    if (!satisfies_sd2star(link(x, s))) return false;
  }
  return true;
}

}  // namespace systolic
