#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "systolic/helly.hpp"

namespace systolic {

namespace {

std::array<int, 3> sorted3(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Indices {i, j} with {i, j, k, l} = {0, 1, 2, 3}.
std::pair<int, int> complement_pair(int k, int l) {
  std::array<bool, 4> used{};
  used[k] = used[l] = true;
  int a = -1, b = -1;
  for (int i = 0; i < 4; ++i) {
    if (!used[i]) (a < 0 ? a : b) = i;
  }
  return {a, b};
}

}  // namespace

std::array<VertexId, 4> pick_triple_points(const std::array<Complex, 4>& A) {
  std::array<VertexId, 4> z{};
  for (int l = 0; l < 4; ++l) {
    std::vector<int> idx;
    for (int m = 0; m < 4; ++m) {
      if (m != l) idx.push_back(m);
    }
    Complex triple = intersect(intersect(A[idx[0]], A[idx[1]]), A[idx[2]]);
    if (triple.vertices().empty()) {
      throw std::domain_error("triple intersection omitting index " +
                              std::to_string(l) + " is empty");
    }
    z[l] = triple.vertices().front();
  }
  return z;
}

std::vector<VertexId> connect_path(const Complex& region, VertexId a,
                                   VertexId b) {
  if (!region.has_vertex(a) || !region.has_vertex(b)) {
    throw std::domain_error("connect_path: endpoint outside the region");
  }
  std::map<VertexId, VertexId> parent;
  parent[a] = a;
  std::queue<VertexId> q;
  q.push(a);
  while (!q.empty() && !parent.count(b)) {
    VertexId v = q.front();
    q.pop();
    for (VertexId u : region.neighbors(v)) {
      if (!parent.count(u)) {
        parent[u] = v;
        q.push(u);
      }
    }
  }
  if (!parent.count(b)) {
    throw std::domain_error("connect_path: endpoints lie in different "
                            "components of the region");
  }
  std::vector<VertexId> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::array<std::vector<VertexId>, 4> make_disc_walks(
    const std::array<VertexId, 4>& /*z*/,
    const std::map<std::pair<int, int>, std::vector<VertexId>>& gamma) {
  std::array<std::vector<VertexId>, 4> walks;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> c;
    for (int m = 0; m < 4; ++m) {
      if (m != i) c.push_back(m);
    }
    // Corners visited in sorted order: c0 -> c1 -> c2 -> c0.
    auto append = [&](int from, int to) {
      const bool forward = from < to;
      const auto& g = gamma.at({std::min(from, to), std::max(from, to)});
      std::vector<VertexId> seg = g;
      if (!forward) std::reverse(seg.begin(), seg.end());
      seg.pop_back();  // next segment starts with the shared corner
      walks[i].insert(walks[i].end(), seg.begin(), seg.end());
    };
    append(c[0], c[1]);
    append(c[1], c[2]);
    append(c[2], c[0]);
  }
  return walks;
}

SphereAssembly assemble_sphere(
    const std::array<VertexId, 4>& z,
    const std::map<std::pair<int, int>, std::vector<VertexId>>& gamma,
    const std::array<DiscFilling, 4>& discs) {
  for (const DiscFilling& d : discs) {
    if (d.collapsed || d.boundary_len < 3) {
      throw std::logic_error("assemble_sphere: degenerate disc filling");
    }
  }
  SphereAssembly s;
  s.z = z;
  s.gamma = gamma;
  // Allocate corner nodes, then seam interiors, then disc interiors.
  for (int l = 0; l < 4; ++l) {
    s.corner_node[l] = s.node_count++;
    s.phi.push_back(z[l]);
  }
  for (const auto& [pair, path] : gamma) {
    std::vector<int> nodes;
    nodes.push_back(s.corner_node[pair.first]);
    for (std::size_t t = 1; t + 1 < path.size(); ++t) {
      nodes.push_back(s.node_count++);
      s.phi.push_back(path[t]);
    }
    nodes.push_back(s.corner_node[pair.second]);
    s.seam_nodes[pair] = std::move(nodes);
  }
  const auto walks = make_disc_walks(z, gamma);
  for (int i = 0; i < 4; ++i) {
    const DiscFilling& d = discs[i];
    const auto& walk = walks[i];
    if (static_cast<int>(walk.size()) != d.boundary_len) {
      throw std::logic_error("assemble_sphere: disc boundary length "
                             "mismatch");
    }
    // Map disc boundary positions to sphere seam nodes.
    std::vector<int> node_of(d.node_count, -1);
    std::vector<int> corners;
    for (int m = 0; m < 4; ++m) {
      if (m != i) corners.push_back(m);
    }
    int pos = 0;
    auto lay_segment = [&](int from, int to) {
      const bool forward = from < to;
      const auto key = std::make_pair(std::min(from, to),
                                      std::max(from, to));
      const auto& seam = s.seam_nodes.at(key);
      const int len = static_cast<int>(seam.size());
      for (int t = 0; t + 1 < len; ++t) {
        const int seam_idx = forward ? t : len - 1 - t;
        node_of[pos] = seam[seam_idx];
        if (s.phi[seam[seam_idx]] != d.phi[pos]) {
          throw std::logic_error("assemble_sphere: seam label mismatch");
        }
        ++pos;
      }
    };
    lay_segment(corners[0], corners[1]);
    lay_segment(corners[1], corners[2]);
    lay_segment(corners[2], corners[0]);
    if (pos != d.boundary_len) {
      throw std::logic_error("assemble_sphere: walk labelling mismatch");
    }
    for (int n = d.boundary_len; n < d.node_count; ++n) {
      node_of[n] = s.node_count++;
      s.phi.push_back(d.phi[n]);
    }
    for (const auto& t : d.triangles) {
      s.triangles.push_back(
          sorted3({node_of[t[0]], node_of[t[1]], node_of[t[2]]}));
      s.tri_disc.push_back(i);
    }
  }
  // Resolve duplicated triangles (possible only along shared seams) by a
  // stellar subdivision of the later copy, labelled from one of its corners.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::array<int, 3>, int> first_at;
    for (std::size_t idx = 0; idx < s.triangles.size(); ++idx) {
      auto [it, fresh] = first_at.emplace(s.triangles[idx], idx);
      if (fresh) continue;
      const int disc = s.tri_disc[idx];
      const std::array<int, 3> t = s.triangles[idx];
      const int w = s.node_count++;
      s.phi.push_back(s.phi[t[0]]);
      s.triangles[idx] = sorted3({t[0], t[1], w});
      s.triangles.push_back(sorted3({t[0], t[2], w}));
      s.tri_disc.push_back(disc);
      s.triangles.push_back(sorted3({t[1], t[2], w}));
      s.tri_disc.push_back(disc);
      changed = true;
      break;
    }
  }
  return s;
}

Complex sphere_complex(const SphereAssembly& s) {
  std::vector<Simplex> tris;
  tris.reserve(s.triangles.size());
  for (const auto& t : s.triangles) {
    tris.push_back(Simplex{t[0], t[1], t[2]});
  }
  return make_complex(tris);
}

Validation verify_sphere(const Complex& X, const SphereAssembly& s) {
  if (s.triangles.size() < 4) return Validation::fail("sphere too small");
  std::set<std::array<int, 3>> distinct;
  std::map<std::pair<int, int>, int> edge_count;
  std::vector<bool> used(s.node_count, false);
  for (const auto& t : s.triangles) {
    auto st = sorted3(t);
    if (st[0] < 0 || st[2] >= s.node_count) {
      return Validation::fail("sphere triangle node out of range");
    }
    if (st[0] == st[1] || st[1] == st[2]) {
      return Validation::fail("sphere triangle with repeated node");
    }
    if (!distinct.insert(st).second) {
      return Validation::fail("duplicate sphere triangle");
    }
    for (int v : st) used[v] = true;
    edge_count[{st[0], st[1]}]++;
    edge_count[{st[0], st[2]}]++;
    edge_count[{st[1], st[2]}]++;
    // Simplicial map condition.
    std::vector<VertexId> img{s.phi[st[0]], s.phi[st[1]], s.phi[st[2]]};
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (!X.contains(Simplex(img))) {
      return Validation::fail("sphere triangle image does not span in X");
    }
  }
  for (int v = 0; v < s.node_count; ++v) {
    if (!used[v]) return Validation::fail("sphere has an isolated node");
  }
  for (const auto& [e, c] : edge_count) {
    if (c != 2) {
      return Validation::fail("sphere edge not in exactly two triangles");
    }
  }
  // Connectivity over triangles.
  {
    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (std::size_t i = 0; i < s.triangles.size(); ++i) {
      auto st = sorted3(s.triangles[i]);
      edge_tris[{st[0], st[1]}].push_back(static_cast<int>(i));
      edge_tris[{st[0], st[2]}].push_back(static_cast<int>(i));
      edge_tris[{st[1], st[2]}].push_back(static_cast<int>(i));
    }
    std::vector<bool> vis(s.triangles.size(), false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    std::size_t reach = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (const auto& [e, tris] : edge_tris) {
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
    if (reach != s.triangles.size()) {
      return Validation::fail("sphere is disconnected");
    }
  }
  const long long v = s.node_count;
  const long long e = static_cast<long long>(edge_count.size());
  const long long f = static_cast<long long>(s.triangles.size());
  if (v - e + f != 2) {
    return Validation::fail("sphere Euler characteristic is not 2");
  }
  // Corner and seam bookkeeping.
  for (int l = 0; l < 4; ++l) {
    if (s.phi[s.corner_node[l]] != s.z[l]) {
      return Validation::fail("corner label mismatch");
    }
  }
  for (const auto& [pair, nodes] : s.seam_nodes) {
    const auto& g = s.gamma.at(pair);
    if (nodes.size() != g.size()) {
      return Validation::fail("seam length mismatch");
    }
    for (std::size_t t = 0; t < nodes.size(); ++t) {
      if (s.phi[nodes[t]] != g[t]) {
        return Validation::fail("seam label mismatch");
      }
    }
    for (std::size_t t = 0; t + 1 < nodes.size(); ++t) {
      int a = std::min(nodes[t], nodes[t + 1]);
      int b = std::max(nodes[t], nodes[t + 1]);
      if (!edge_count.count({a, b})) {
        return Validation::fail("seam step is not a sphere edge");
      }
    }
  }
  return {};
}

}  // namespace systolic
