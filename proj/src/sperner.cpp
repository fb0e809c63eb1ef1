#include "systolic/sperner.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "systolic/io.hpp"

namespace systolic {

std::vector<VertexId> Ball3::vertex_set() const {
  std::vector<VertexId> out;
  for (const auto& t : tetrahedra) {
    out.insert(out.end(), t.begin(), t.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Ball3 make_ball(std::vector<std::array<VertexId, 4>> tets, Complex boundary) {
  for (auto& t : tets) {
    std::sort(t.begin(), t.end());
    for (int i = 0; i < 3; ++i) {
      if (t[i] == t[i + 1]) {
        throw std::invalid_argument("tetrahedron has a repeated vertex");
      }
    }
  }
  return Ball3{std::move(tets), std::move(boundary)};
}

std::pair<std::set<Simplex>, bool> boundary_triangles(
    const std::vector<std::array<VertexId, 4>>& tets) {
  std::map<Simplex, int> count;
  for (const auto& t : tets) {
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<VertexId> tri;
      for (int i = 0; i < 4; ++i) {
        if (i != skip) tri.push_back(t[i]);
      }
      count[Simplex(std::move(tri))]++;
    }
  }
  std::set<Simplex> boundary;
  for (const auto& [tri, c] : count) {
    if (c > 2) return {{}, false};
    if (c == 1) boundary.insert(tri);
  }
  return {std::move(boundary), true};
}

namespace {

// Closed-surface check: every edge in exactly two triangles, every vertex
// star a single cycle, connected, Euler characteristic 2.
Validation sphere_check(const Complex& s) {
  if (s.empty()) return Validation::fail("boundary is empty");
  std::size_t v = 0, e = 0, f = 0;
  for (const Simplex& sx : s.simplices()) {
    if (sx.dim() == 0) ++v;
    if (sx.dim() == 1) ++e;
    if (sx.dim() == 2) ++f;
    if (sx.dim() > 2) return Validation::fail("boundary has a 3-simplex");
  }
  std::map<Simplex, std::vector<const Simplex*>> edge_tris;
  for (const Simplex& sx : s.simplices()) {
    if (sx.dim() != 2) continue;
    const VertexId a = sx[0], b = sx[1], c = sx[2];
    edge_tris[Simplex{a, b}].push_back(&sx);
    edge_tris[Simplex{a, c}].push_back(&sx);
    edge_tris[Simplex{b, c}].push_back(&sx);
  }
  if (edge_tris.size() != e) {
    return Validation::fail("boundary has an edge in no triangle");
  }
  for (const auto& [edge, tris] : edge_tris) {
    if (tris.size() != 2) {
      std::ostringstream msg;
      msg << "boundary edge " << edge[0] << ' ' << edge[1] << " lies in "
          << tris.size() << " triangles";
      return Validation::fail(msg.str());
    }
  }
  // Vertex stars: triangles around each vertex form one cycle through
  // opposite edges.
  for (VertexId vx : s.vertices()) {
    std::vector<const Simplex*> star;
    for (const Simplex& sx : s.simplices()) {
      if (sx.dim() == 2 && sx.contains(vx)) star.push_back(&sx);
    }
    if (star.empty()) {
      return Validation::fail("boundary vertex " + std::to_string(vx) +
                              " is in no triangle");
    }
    std::map<VertexId, std::vector<int>> by_other;  // link edges
    for (std::size_t i = 0; i < star.size(); ++i) {
      for (VertexId u : star[i]->vertices()) {
        if (u != vx) by_other[u].push_back(static_cast<int>(i));
      }
    }
    for (const auto& [u, tris] : by_other) {
      if (tris.size() != 2) {
        return Validation::fail("vertex star of " + std::to_string(vx) +
                                " is not a closed fan");
      }
    }
    // Connectivity of the star through shared link vertices.
    std::vector<bool> seen(star.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (const auto& [u, tris] : by_other) {
        if (tris[0] == i || tris[1] == i) {
          int j = tris[0] == i ? tris[1] : tris[0];
          if (!seen[j]) {
            seen[j] = true;
            ++reached;
            q.push(j);
          }
        }
      }
    }
    if (reached != star.size()) {
      return Validation::fail("vertex star of " + std::to_string(vx) +
                              " is pinched");
    }
  }
  if (!is_connected(s)) return Validation::fail("boundary is disconnected");
  if (static_cast<long long>(v) - static_cast<long long>(e) +
          static_cast<long long>(f) !=
      2) {
    return Validation::fail("boundary Euler characteristic is not 2");
  }
  return {};
}

}  // namespace

Validation validate_ball(const Ball3& b, bool require_no_internal) {
  if (b.tetrahedra.empty()) return Validation::fail("no tetrahedra");
  std::set<std::array<VertexId, 4>> distinct;
  for (const auto& t : b.tetrahedra) {
    if (!std::is_sorted(t.begin(), t.end()) ||
        std::adjacent_find(t.begin(), t.end()) != t.end()) {
      return Validation::fail("tetrahedron vertices not sorted and distinct");
    }
    if (!distinct.insert(t).second) {
      return Validation::fail("duplicate tetrahedron");
    }
  }
  auto [census, ok] = boundary_triangles(b.tetrahedra);
  if (!ok) return Validation::fail("a triangle lies in more than two "
                                   "tetrahedra");
  std::set<Simplex> declared;
  for (const Simplex& s : b.boundary.simplices()) {
    if (s.dim() == 2) declared.insert(s);
  }
  if (declared != census) {
    return Validation::fail("declared boundary does not match the boundary "
                            "triangle census");
  }
  Validation sphere = sphere_check(b.boundary);
  if (!sphere.ok) return sphere;
  // Dual graph connectivity through interior triangles.
  std::map<Simplex, std::vector<int>> tri_tets;
  for (std::size_t i = 0; i < b.tetrahedra.size(); ++i) {
    const auto& t = b.tetrahedra[i];
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<VertexId> tri;
      for (int j = 0; j < 4; ++j) {
        if (j != skip) tri.push_back(t[j]);
      }
      tri_tets[Simplex(std::move(tri))].push_back(static_cast<int>(i));
    }
  }
  std::vector<bool> seen(b.tetrahedra.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (const auto& [tri, owners] : tri_tets) {
      if (owners.size() == 2 && (owners[0] == i || owners[1] == i)) {
        int j = owners[0] == i ? owners[1] : owners[0];
        if (!seen[j]) {
          seen[j] = true;
          ++reached;
          q.push(j);
        }
      }
    }
  }
  if (reached != b.tetrahedra.size()) {
    return Validation::fail("tetrahedra dual graph is disconnected");
  }
  // Edge stars: tetrahedra around an edge form a single cycle (interior
  // edge) or a single path (boundary edge).
  std::map<Simplex, std::vector<int>> edge_tets;
  for (std::size_t i = 0; i < b.tetrahedra.size(); ++i) {
    const auto& t = b.tetrahedra[i];
    for (int a = 0; a < 4; ++a) {
      for (int c = a + 1; c < 4; ++c) {
        edge_tets[Simplex{t[a], t[c]}].push_back(static_cast<int>(i));
      }
    }
  }
  for (const auto& [edge, owners] : edge_tets) {
    // Count triangles containing this edge and their tetrahedron
    // multiplicity: around an edge, the star is a disc (boundary edge) or a
    // sphere slice (interior edge); both force #tets = #interior triangles
    // + (boundary ? 1 : 0) - ... checked via the face census instead:
    int boundary_faces = 0;
    int interior_faces = 0;
    for (const auto& [tri, ts] : tri_tets) {
      if (tri.contains(edge[0]) && tri.contains(edge[1])) {
        if (ts.size() == 1) ++boundary_faces;
        if (ts.size() == 2) ++interior_faces;
      }
    }
    const bool on_boundary = boundary_faces > 0;
    if (on_boundary && boundary_faces != 2) {
      return Validation::fail("edge star has a wrong boundary face count");
    }
    // Path: faces = tets + 1; cycle: faces = tets.
    const int faces = boundary_faces + interior_faces;
    const int expected =
        on_boundary ? static_cast<int>(owners.size()) + 1
                    : static_cast<int>(owners.size());
    if (faces != expected) {
      return Validation::fail("edge star of " + std::to_string(edge[0]) +
                              "-" + std::to_string(edge[1]) +
                              " is not a single fan");
    }
  }
  if (require_no_internal) {
    for (VertexId v : b.vertex_set()) {
      if (!b.boundary.has_vertex(v)) {
        return Validation::fail("internal vertex " + std::to_string(v) +
                                " present in no-internal mode");
      }
    }
  }
  return {};
}

Validation validate_dual(const Ball3& b, const DualStructure& d) {
  const Complex& s = b.boundary;
  for (int i = 0; i < 4; ++i) {
    if (!s.has_vertex(d.apex[i])) {
      return Validation::fail("apex " + std::to_string(i) +
                              " is not a boundary vertex");
    }
    auto it = d.roles.find(d.apex[i]);
    if (it == d.roles.end() || it->second.kind != RoleKind::Apex ||
        it->second.a != i) {
      return Validation::fail("apex " + std::to_string(i) +
                              " has an inconsistent role tag");
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      auto it = d.arcs.find({i, j});
      if (it == d.arcs.end()) {
        return Validation::fail("missing arc");
      }
      const auto& path = it->second;
      if (path.size() < 2 || path.front() != d.apex[i] ||
          path.back() != d.apex[j]) {
        return Validation::fail("arc endpoints do not match its apexes");
      }
      std::set<VertexId> distinct(path.begin(), path.end());
      if (distinct.size() != path.size()) {
        return Validation::fail("arc is not simple");
      }
      for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        if (!s.has_edge(path[t], path[t + 1])) {
          return Validation::fail("arc step is not a boundary edge");
        }
      }
      for (std::size_t t = 1; t + 1 < path.size(); ++t) {
        auto rit = d.roles.find(path[t]);
        if (rit == d.roles.end() || rit->second.kind != RoleKind::Arc ||
            rit->second.a != i || rit->second.b != j) {
          return Validation::fail("arc interior vertex has a wrong role");
        }
      }
    }
  }
  // Pairwise intersections: empty, or exactly one shared apex.
  for (auto it1 = d.arcs.begin(); it1 != d.arcs.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != d.arcs.end(); ++it2) {
      std::set<VertexId> a(it1->second.begin(), it1->second.end());
      std::vector<VertexId> common;
      for (VertexId v : it2->second) {
        if (a.count(v)) common.push_back(v);
      }
      if (common.empty()) continue;
      const auto [i, j] = it1->first;
      const auto [k, l] = it2->first;
      if (common.size() > 1) {
        return Validation::fail("two arcs share more than one vertex");
      }
      bool shares_index = i == k || i == l || j == k || j == l;
      if (!shares_index) {
        return Validation::fail("arcs with disjoint index pairs intersect");
      }
      // The shared vertex must be the common apex.
      int shared_apex = i == k || i == l ? i : j;
      if (common[0] != d.apex[shared_apex]) {
        return Validation::fail("arcs meet outside their shared apex");
      }
    }
  }
  // Roles must cover the boundary vertex set, with region tags only where
  // apexes/arcs do not claim the vertex.
  for (VertexId v : s.vertices()) {
    auto it = d.roles.find(v);
    if (it == d.roles.end()) {
      return Validation::fail("vertex " + std::to_string(v) +
                              " has no role tag");
    }
    if (it->second.kind == RoleKind::Region &&
        (it->second.a < 0 || it->second.a > 3)) {
      return Validation::fail("region tag out of range");
    }
  }
  return {};
}

Validation validate_coloring(const Ball3& b, const DualStructure& d,
                             const Coloring& c) {
  for (VertexId v : b.vertex_set()) {
    auto it = c.find(v);
    if (it == c.end()) {
      return Validation::fail("vertex " + std::to_string(v) +
                              " is not colored");
    }
    if (it->second < 0 || it->second > 3) {
      return Validation::fail("color out of range at vertex " +
                              std::to_string(v));
    }
  }
  for (VertexId v : b.boundary.vertices()) {
    auto rit = d.roles.find(v);
    if (rit == d.roles.end()) {
      return Validation::fail("dual structure does not cover vertex " +
                              std::to_string(v));
    }
    const VertexRole& role = rit->second;
    const int col = c.at(v);
    switch (role.kind) {
      case RoleKind::Apex:
        if (col != role.a) {
          return Validation::fail("apex " + std::to_string(role.a) +
                                  " has color " + std::to_string(col));
        }
        break;
      case RoleKind::Arc:
        if (col != role.a && col != role.b) {
          return Validation::fail("arc vertex " + std::to_string(v) +
                                  " colored outside its index pair");
        }
        break;
      case RoleKind::Region:
        if (col == role.a) {
          return Validation::fail("region vertex " + std::to_string(v) +
                                  " colored with the omitted index");
        }
        break;
    }
  }
  return {};
}

std::optional<std::array<VertexId, 4>> find_rainbow(const Ball3& b,
                                                    const Coloring& c) {
  for (const auto& t : b.tetrahedra) {
    unsigned mask = 0;
    for (VertexId v : t) {
      auto it = c.find(v);
      if (it == c.end() || it->second < 0 || it->second > 3) {
        mask = 0;
        break;
      }
      mask |= 1u << it->second;
    }
    if (mask == 0b1111u) return t;
  }
  return std::nullopt;
}

int count_rainbow(const Ball3& b, const Coloring& c) {
  int n = 0;
  for (const auto& t : b.tetrahedra) {
    unsigned mask = 0;
    for (VertexId v : t) {
      auto it = c.find(v);
      if (it == c.end() || it->second < 0 || it->second > 3) {
        mask = 0;
        break;
      }
      mask |= 1u << it->second;
    }
    if (mask == 0b1111u) ++n;
  }
  return n;
}

Ball3 cone_ball(const Complex& sphere, VertexId v0) {
  if (!sphere.has_vertex(v0)) {
    throw std::domain_error("cone_ball: vertex is not on the sphere");
  }
  std::vector<std::array<VertexId, 4>> tets;
  for (const Simplex& s : sphere.simplices()) {
    if (s.dim() != 2 || s.contains(v0)) continue;
    std::array<VertexId, 4> t{v0, s[0], s[1], s[2]};
    std::sort(t.begin(), t.end());
    tets.push_back(t);
  }
  return Ball3{std::move(tets), sphere};
}

// ---- text formats ----

Ball3 load_ball(std::istream& in) {
  std::vector<std::array<VertexId, 4>> tets;
  std::vector<Simplex> boundary;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "t") {
      std::array<VertexId, 4> t{};
      if (!(ss >> t[0] >> t[1] >> t[2] >> t[3])) {
        throw ParseError(line_no, "tetrahedron line needs four vertices");
      }
      std::sort(t.begin(), t.end());
      if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
        throw ParseError(line_no, "tetrahedron has a repeated vertex");
      }
      tets.push_back(t);
    } else if (tag == "bt") {
      VertexId a, b, c;
      if (!(ss >> a >> b >> c)) {
        throw ParseError(line_no, "boundary triangle line needs three "
                                  "vertices");
      }
      boundary.push_back(Simplex{a, b, c});
    } else {
      throw ParseError(line_no, "expected 't' or 'bt', got '" + tag + "'");
    }
  }
  return Ball3{std::move(tets), make_complex(boundary)};
}

void write_ball(std::ostream& out, const Ball3& b) {
  for (const auto& t : b.tetrahedra) {
    out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
  }
  for (const Simplex& s : b.boundary.simplices()) {
    if (s.dim() == 2) {
      out << "bt " << s[0] << ' ' << s[1] << ' ' << s[2] << '\n';
    }
  }
}

Coloring load_coloring(std::istream& in) {
  Coloring c;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag != "c") throw ParseError(line_no, "expected 'c'");
    VertexId v;
    int k;
    if (!(ss >> v >> k)) throw ParseError(line_no, "malformed color line");
    if (!c.emplace(v, k).second) {
      throw ParseError(line_no, "vertex colored twice");
    }
  }
  return c;
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (const auto& [v, k] : c) out << "c " << v << ' ' << k << '\n';
}

DualStructure load_dual(std::istream& in) {
  DualStructure d;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "w") {
      int i;
      VertexId v;
      if (!(ss >> i >> v) || i < 0 || i > 3) {
        throw ParseError(line_no, "malformed apex line");
      }
      d.apex[i] = v;
      d.roles[v] = {RoleKind::Apex, i, -1};
    } else if (tag == "a") {
      int i, j;
      if (!(ss >> i >> j) || i < 0 || j < 0 || i >= j || j > 3) {
        throw ParseError(line_no, "malformed arc line");
      }
      std::vector<VertexId> path;
      VertexId v;
      while (ss >> v) path.push_back(v);
      d.arcs[{i, j}] = path;
      for (std::size_t t = 1; t + 1 < path.size(); ++t) {
        d.roles[path[t]] = {RoleKind::Arc, i, j};
      }
    } else if (tag == "r") {
      int l;
      VertexId v;
      if (!(ss >> l >> v) || l < 0 || l > 3) {
        throw ParseError(line_no, "malformed region line");
      }
      d.roles[v] = {RoleKind::Region, l, -1};
    } else {
      throw ParseError(line_no, "expected 'w', 'a' or 'r'");
    }
  }
  return d;
}

void write_dual(std::ostream& out, const DualStructure& d) {
  for (int i = 0; i < 4; ++i) out << "w " << i << ' ' << d.apex[i] << '\n';
  for (const auto& [key, path] : d.arcs) {
    out << "a " << key.first << ' ' << key.second;
    for (VertexId v : path) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [v, role] : d.roles) {
    if (role.kind == RoleKind::Region) {
      out << "r " << role.a << ' ' << v << '\n';
    }
  }
}

}  // namespace systolic
