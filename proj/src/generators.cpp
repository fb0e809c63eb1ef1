#include "systolic/generators.hpp"

#include <stdexcept>

namespace systolic {

Complex cycle_complex(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back(Simplex{i, (i + 1) % n});
  }
  return make_complex(edges);
}

Complex octahedron() {
  // Antipodal pairs (0,1), (2,3), (4,5); triangles pick one from each pair.
  std::vector<Simplex> tris;
  for (int a : {0, 1}) {
    for (int b : {2, 3}) {
      for (int c : {4, 5}) {
        tris.push_back(Simplex{a, b, c});
      }
    }
  }
  return make_complex(tris);
}

Complex icosahedron() {
  // North pole 0 over ring 1..5, south pole 11 under ring 6..10.
  auto u = [](int i) { return 1 + (i % 5); };
  auto w = [](int i) { return 6 + (i % 5); };
  std::vector<Simplex> tris;
  for (int i = 0; i < 5; ++i) {
    tris.push_back(Simplex{0, u(i), u(i + 1)});
    tris.push_back(Simplex{11, w(i), w(i + 1)});
    tris.push_back(Simplex{u(i), u(i + 1), w(i)});
    tris.push_back(Simplex{u(i + 1), w(i), w(i + 1)});
  }
  return make_complex(tris);
}

Complex tri_grid(int w, int h) {
  if (w < 1 || h < 1) throw std::invalid_argument("tri_grid: need w,h >= 1");
  auto id = [w](int x, int y) { return y * (w + 1) + x; };
  std::vector<Simplex> tris;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      tris.push_back(Simplex{id(x, y), id(x + 1, y), id(x, y + 1)});
      tris.push_back(Simplex{id(x + 1, y), id(x, y + 1), id(x + 1, y + 1)});
    }
  }
  return make_complex(tris);
}

Complex deg7_patch(int radius) {
  if (radius < 1 || radius > 5) {
    throw std::invalid_argument("deg7_patch: need 1 <= radius <= 5");
  }
  std::vector<Simplex> tris;
  int next_id = 1;
  std::vector<int> ring;
  std::vector<int> ring_deg;  // degree acquired so far, per ring vertex
  for (int i = 0; i < 7; ++i) ring.push_back(next_id++);
  for (int i = 0; i < 7; ++i) {
    tris.push_back(Simplex{0, ring[i], ring[(i + 1) % 7]});
  }
  ring_deg.assign(7, 3);  // center + two ring neighbors
  for (int layer = 2; layer <= radius; ++layer) {
    const int m = static_cast<int>(ring.size());
    // Arc length per ring vertex: grow each to total degree 7.
    std::vector<int> arc_len(m);
    for (int i = 0; i < m; ++i) arc_len[i] = 7 - ring_deg[i];
    // Shared vertices between consecutive arcs, then fresh interiors.
    std::vector<int> shared(m);
    for (int i = 0; i < m; ++i) shared[i] = next_id++;  // between v_{i-1},v_i
    std::vector<int> new_ring;
    std::vector<int> new_deg;
    for (int i = 0; i < m; ++i) {
      std::vector<int> arc;
      arc.push_back(shared[i]);
      for (int j = 0; j < arc_len[i] - 2; ++j) arc.push_back(next_id++);
      arc.push_back(shared[(i + 1) % m]);
      for (std::size_t j = 0; j + 1 < arc.size(); ++j) {
        tris.push_back(Simplex{ring[i], arc[j], arc[j + 1]});
      }
      tris.push_back(
          Simplex{ring[i], ring[(i + 1) % m], shared[(i + 1) % m]});
      for (std::size_t j = 0; j + 1 < arc.size(); ++j) {
        new_ring.push_back(arc[j]);
        new_deg.push_back(j == 0 ? 4 : 3);
      }
    }
    ring = std::move(new_ring);
    ring_deg = std::move(new_deg);
  }
  return make_complex(tris);
}

Complex tetra_boundary() {
  return make_complex(
      {Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{0, 2, 3}, Simplex{1, 2, 3}});
}

Complex cone_complex(const Complex& base) {
  if (base.empty()) return make_complex({Simplex{0}});
  const VertexId apex = base.vertices().back() + 1;
  std::vector<Simplex> simplices;
  simplices.push_back(Simplex{apex});
  for (const Simplex& s : base.simplices()) {
    simplices.push_back(s);
    simplices.push_back(s.union_with(Simplex{apex}));
  }
  return make_complex(simplices);
}

Complex generate(const std::string& name,
                 const std::vector<long long>& params) {
  auto want = [&](std::size_t n) {
    if (params.size() != n) {
      throw std::invalid_argument("generator '" + name + "' expects " +
                                  std::to_string(n) + " parameter(s)");
    }
  };
  if (name == "cycle") {
    want(1);
    return cycle_complex(static_cast<int>(params[0]));
  }
  if (name == "octahedron") {
    want(0);
    return octahedron();
  }
  if (name == "icosahedron") {
    want(0);
    return icosahedron();
  }
  if (name == "tri_grid") {
    want(2);
    return tri_grid(static_cast<int>(params[0]), static_cast<int>(params[1]));
  }
  if (name == "deg7_patch") {
    want(1);
    return deg7_patch(static_cast<int>(params[0]));
  }
  if (name == "tetra_boundary") {
    want(0);
    return tetra_boundary();
  }
  if (name == "cone") {
    want(1);
    return cone_complex(cycle_complex(static_cast<int>(params[0])));
  }
  throw std::invalid_argument("unknown generator: " + name);
}

std::vector<std::string> generator_names() {
  return {"cycle",      "octahedron",     "icosahedron", "tri_grid",
          "deg7_patch", "tetra_boundary", "cone"};
}

}  // namespace systolic
