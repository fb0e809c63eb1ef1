#include "systolic/simplicial.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace systolic {

Simplex::Simplex(std::vector<VertexId> verts) : verts_(std::move(verts)) {
  if (verts_.empty()) {
    throw std::invalid_argument("simplex must have at least one vertex");
  }
  std::sort(verts_.begin(), verts_.end());
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (verts_[i] < 0) {
      throw std::invalid_argument("vertex ids must be non-negative");
    }
    if (i > 0 && verts_[i] == verts_[i - 1]) {
      throw std::invalid_argument("simplex has a duplicate vertex: " +
                                  std::to_string(verts_[i]));
    }
  }
}

bool Simplex::contains_all(const Simplex& other) const {
  return std::includes(verts_.begin(), verts_.end(), other.verts_.begin(),
                       other.verts_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
  std::size_t i = 0, j = 0;
  while (i < verts_.size() && j < other.verts_.size()) {
    if (verts_[i] == other.verts_[j]) return false;
    if (verts_[i] < other.verts_[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

Simplex Simplex::union_with(const Simplex& other) const {
  std::vector<VertexId> merged;
  merged.reserve(verts_.size() + other.verts_.size());
  std::set_union(verts_.begin(), verts_.end(), other.verts_.begin(),
                 other.verts_.end(), std::back_inserter(merged));
  Simplex s;
  s.verts_ = std::move(merged);
  return s;
}

std::vector<Simplex> Simplex::faces() const {
  const std::size_t n = verts_.size();
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(verts_[i]);
    }
    Simplex s;
    s.verts_ = std::move(sub);
    out.push_back(std::move(s));
  }
  return out;
}

Complex Complex::closure_of(const std::vector<Simplex>& simplices) {
  std::set<Simplex> closed;
  for (const Simplex& s : simplices) {
    if (s.dim() > 25) {
      throw std::invalid_argument("simplex dimension too large to enumerate");
    }
    for (Simplex& f : s.faces()) closed.insert(std::move(f));
  }
  return from_closed_set(std::move(closed));
}

Complex Complex::from_closed_set(std::set<Simplex> simplices) {
  Complex x;
  x.simplices_ = std::move(simplices);
  x.build_index();
  return x;
}

void Complex::build_index() {
  vertices_.clear();
  dim_ = -1;
  VertexId max_id = -1;
  for (const Simplex& s : simplices_) {
    dim_ = std::max(dim_, s.dim());
    if (s.dim() == 0) vertices_.push_back(s[0]);
    max_id = std::max(max_id, s.vertices().back());
  }
  adj_.assign(static_cast<std::size_t>(max_id + 1), {});
  for (const Simplex& s : simplices_) {
    if (s.dim() == 1) {
      adj_[s[0]].push_back(s[1]);
      adj_[s[1]].push_back(s[0]);
    }
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Complex::has_edge(VertexId u, VertexId v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return contains(Simplex{u, v});
}

const std::vector<VertexId>& Complex::neighbors(VertexId v) const {
  static const std::vector<VertexId> kEmpty;
  if (v < 0 || static_cast<std::size_t>(v) >= adj_.size()) return kEmpty;
  return adj_[v];
}

std::size_t Complex::count_of_dim(int d) const {
  std::size_t n = 0;
  for (const Simplex& s : simplices_) {
    if (s.dim() == d) ++n;
  }
  return n;
}

std::vector<Simplex> Complex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (const Simplex& s : simplices_) {
    // s is maximal iff no vertex extends it to a member simplex.
    bool maximal = true;
    const std::vector<VertexId>& cand = neighbors(s[0]);
    for (VertexId v : cand) {
      if (s.contains(v)) continue;
      if (contains(s.union_with(Simplex{v}))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

bool Complex::is_subcomplex_of(const Complex& other) const {
  for (const Simplex& s : simplices_) {
    if (!other.contains(s)) return false;
  }
  return true;
}

bool Complex::is_face_closed() const {
  for (const Simplex& s : simplices_) {
    for (const Simplex& f : s.faces()) {
      if (!contains(f)) return false;
    }
  }
  return true;
}

Graph::Graph(std::vector<VertexId> verts,
             std::vector<std::pair<VertexId, VertexId>> edge_list) {
  vertices = std::move(verts);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  VertexId max_id = vertices.empty() ? -1 : vertices.back();
  adj_.assign(static_cast<std::size_t>(max_id + 1), {});
  for (auto [u, v] : edge_list) {
    if (u == v) throw std::invalid_argument("graph loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!std::binary_search(vertices.begin(), vertices.end(), u) ||
        !std::binary_search(vertices.begin(), vertices.end(), v)) {
      throw std::invalid_argument("edge endpoint is not a listed vertex");
    }
    if (edges.insert({u, v}).second) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  return edges.count({u, v}) > 0;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  static const std::vector<VertexId> kEmpty;
  if (v < 0 || static_cast<std::size_t>(v) >= adj_.size()) return kEmpty;
  return adj_[v];
}

FiniteMetric::FiniteMetric(int n, std::vector<double> distances)
    : size(n), dist(std::move(distances)) {
  if (static_cast<int>(dist.size()) != n * n) {
    throw std::invalid_argument("distance matrix has wrong size");
  }
  for (int i = 0; i < n; ++i) {
    if (dist[i * n + i] != 0.0) {
      throw std::invalid_argument("distance matrix diagonal must be zero");
    }
    for (int j = 0; j < n; ++j) {
      if (dist[i * n + j] < 0.0) {
        throw std::invalid_argument("distances must be non-negative");
      }
      if (dist[i * n + j] != dist[j * n + i]) {
        throw std::invalid_argument("distance matrix must be symmetric");
      }
    }
  }
}

Complex make_complex(const std::vector<Simplex>& maximal) {
  return Complex::closure_of(maximal);
}

namespace {

// Extends `clique` by vertices above its last element, collecting every
// clique found. `cand` is sorted and contains only common neighbors.
void extend_cliques(const Graph& g, std::vector<VertexId>& clique,
                    const std::vector<VertexId>& cand, int max_size,
                    std::set<Simplex>& out) {
  for (std::size_t i = 0; i < cand.size(); ++i) {
    VertexId v = cand[i];
    clique.push_back(v);
    out.insert(Simplex(clique));
    if (static_cast<int>(clique.size()) < max_size) {
      std::vector<VertexId> next;
      const auto& nv = g.neighbors(v);
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (std::binary_search(nv.begin(), nv.end(), cand[j])) {
          next.push_back(cand[j]);
        }
      }
      if (!next.empty()) extend_cliques(g, clique, next, max_size, out);
    }
    clique.pop_back();
  }
}

}  // namespace

Complex flag_complex(const Graph& g, std::optional<int> max_dim) {
  const int max_size = max_dim ? *max_dim + 1 : static_cast<int>(
                                                    g.vertices.size());
  std::set<Simplex> cliques;
  if (max_size >= 1) {
    for (VertexId v : g.vertices) {
      cliques.insert(Simplex{v});
      if (max_size >= 2) {
        std::vector<VertexId> clique{v};
        std::vector<VertexId> cand;
        for (VertexId u : g.neighbors(v)) {
          if (u > v) cand.push_back(u);
        }
        extend_cliques(g, clique, cand, max_size, cliques);
      }
    }
  }
  return Complex::from_closed_set(std::move(cliques));
}

bool is_flag(const Complex& x) {
  // Sufficient by induction on clique size: the smallest clique that is not
  // a simplex has all proper subsets present, so it is caught here.
  for (const Simplex& s : x.simplices()) {
    const std::vector<VertexId>& verts = s.vertices();
    for (VertexId v : x.neighbors(verts.back())) {
      if (v <= verts.back()) continue;
      bool common = true;
      for (VertexId u : verts) {
        if (!x.has_edge(u, v)) {
          common = false;
          break;
        }
      }
      if (common && !x.contains(s.union_with(Simplex{v}))) return false;
    }
  }
  return true;
}

Complex link(const Complex& x, const Simplex& s) {
  if (!x.contains(s)) {
    throw std::domain_error("link: simplex is not in the complex");
  }
  std::set<Simplex> out;
  for (const Simplex& t : x.simplices()) {
    if (t.disjoint_from(s) && x.contains(t.union_with(s))) {
      out.insert(t);
    }
  }
  return Complex::from_closed_set(std::move(out));
}

Complex full_subcomplex(const Complex& x, const std::vector<VertexId>& vs) {
  std::vector<VertexId> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId v : sorted) {
    if (!x.has_vertex(v)) {
      throw std::domain_error("full_subcomplex: vertex " + std::to_string(v) +
                              " is not in the complex");
    }
  }
  std::set<Simplex> out;
  for (const Simplex& s : x.simplices()) {
    bool inside = true;
    for (VertexId v : s.vertices()) {
      if (!std::binary_search(sorted.begin(), sorted.end(), v)) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(s);
  }
  return Complex::from_closed_set(std::move(out));
}

Complex complement_complex(const Complex& x, const Complex& y) {
  if (!y.is_subcomplex_of(x)) {
    throw std::domain_error("complement: y is not a subcomplex of x");
  }
  std::vector<Simplex> difference;
  for (const Simplex& s : x.simplices()) {
    if (!y.contains(s)) difference.push_back(s);
  }
  return Complex::closure_of(difference);
}

Complex one_ball(const Complex& x, VertexId v, bool full_ball) {
  if (!x.has_vertex(v)) {
    throw std::domain_error("one_ball: vertex is not in the complex");
  }
  if (full_ball) {
    std::vector<VertexId> vs = x.neighbors(v);
    vs.push_back(v);
    return full_subcomplex(x, vs);
  }
  // Alternative reading: union of simplices containing v, closed under faces.
  std::vector<Simplex> star;
  for (const Simplex& s : x.simplices()) {
    if (s.contains(v)) star.push_back(s);
  }
  return Complex::closure_of(star);
}

Complex intersect(const Complex& a, const Complex& b) {
  std::set<Simplex> out;
  for (const Simplex& s : a.simplices()) {
    if (b.contains(s)) out.insert(s);
  }
  return Complex::from_closed_set(std::move(out));
}

Graph skeleton(const Complex& x) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Simplex& s : x.simplices()) {
    if (s.dim() == 1) edges.push_back({s[0], s[1]});
  }
  return Graph(x.vertices(), std::move(edges));
}

Complex rips_complex(const FiniteMetric& m, double r, int max_dim) {
  if (r < 0.0) throw std::invalid_argument("rips: r must be non-negative");
  if (max_dim < 0) throw std::invalid_argument("rips: max_dim must be >= 0");
  std::vector<VertexId> verts(m.size);
  for (int i = 0; i < m.size; ++i) verts[i] = i;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < m.size; ++i) {
    for (int j = i + 1; j < m.size; ++j) {
      if (m(i, j) <= r) edges.push_back({i, j});
    }
  }
  return flag_complex(Graph(std::move(verts), std::move(edges)), max_dim);
}

std::vector<std::vector<VertexId>> connected_components(const Complex& x) {
  std::map<VertexId, int> comp;
  std::vector<std::vector<VertexId>> out;
  for (VertexId start : x.vertices()) {
    if (comp.count(start)) continue;
    std::vector<VertexId> cls;
    std::queue<VertexId> q;
    q.push(start);
    comp[start] = static_cast<int>(out.size());
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      cls.push_back(v);
      for (VertexId u : x.neighbors(v)) {
        if (!comp.count(u)) {
          comp[u] = static_cast<int>(out.size());
          q.push(u);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

bool is_connected(const Complex& x) {
  return connected_components(x).size() == 1;
}

}  // namespace systolic
