#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace systolic {

using VertexId = int;

/// A simplex is a nonempty, strictly increasing list of vertex ids.
/// dim() = number of vertices - 1.
class Simplex {
 public:
  Simplex() = default;
  // Sorts and validates; throws std::invalid_argument on duplicates or
  // negative ids.
  explicit Simplex(std::vector<VertexId> verts);
  Simplex(std::initializer_list<VertexId> verts)
      : Simplex(std::vector<VertexId>(verts)) {}

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  std::size_t size() const { return verts_.size(); }
  bool empty() const { return verts_.empty(); }
  const std::vector<VertexId>& vertices() const { return verts_; }
  VertexId operator[](std::size_t i) const { return verts_[i]; }

  bool contains(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }
  bool contains_all(const Simplex& other) const;
  bool disjoint_from(const Simplex& other) const;
  Simplex union_with(const Simplex& other) const;
  // All nonempty faces, including the simplex itself.
  std::vector<Simplex> faces() const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<VertexId> verts_;
};

/// Finite abstract simplicial complex, stored fully enumerated and closed
/// under faces. Immutable after construction; all operations below are pure.
class Complex {
 public:
  Complex() = default;

  // Face closure of the given simplices (they need not be maximal).
  static Complex closure_of(const std::vector<Simplex>& simplices);
  // Trusted constructor: `simplices` must already be face-closed.
  static Complex from_closed_set(std::set<Simplex> simplices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::set<Simplex>& simplices() const { return simplices_; }

  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  bool has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool has_edge(VertexId u, VertexId v) const;
  // Sorted; empty for vertices not in the complex.
  const std::vector<VertexId>& neighbors(VertexId v) const;

  int dim() const { return dim_; }
  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  std::size_t count_of_dim(int d) const;

  std::vector<Simplex> maximal_simplices() const;
  bool is_subcomplex_of(const Complex& other) const;
  // Self-check used by tests: every nonempty subset of a member is a member.
  bool is_face_closed() const;

  bool operator==(const Complex& other) const {
    return simplices_ == other.simplices_;
  }

 private:
  void build_index();

  std::vector<VertexId> vertices_;
  std::set<Simplex> simplices_;
  std::vector<std::vector<VertexId>> adj_;  // indexed by vertex id
  int dim_ = -1;
};

/// Undirected simple graph on integer vertex ids.
struct Graph {
  Graph() = default;
  Graph(std::vector<VertexId> vertices,
        std::vector<std::pair<VertexId, VertexId>> edges);

  std::vector<VertexId> vertices;
  std::set<std::pair<VertexId, VertexId>> edges;  // stored with first < second

  bool has_edge(VertexId u, VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;

 private:
  std::vector<std::vector<VertexId>> adj_;
};

/// Symmetric nonnegative distance matrix with zero diagonal. The triangle
/// inequality is not required; Rips construction only reads pairwise values.
struct FiniteMetric {
  FiniteMetric() = default;
  FiniteMetric(int n, std::vector<double> distances);

  int size = 0;
  std::vector<double> dist;  // row-major n*n

  double operator()(int i, int j) const { return dist[i * size + j]; }
};

// ---- basic operators ----

// Face closure of a list of (maximal) simplices.
Complex make_complex(const std::vector<Simplex>& maximal);

// All cliques of g, truncated at max_dim when given.
Complex flag_complex(const Graph& g, std::optional<int> max_dim = std::nullopt);

// True iff every clique of the 1-skeleton is a simplex of x.
bool is_flag(const Complex& x);

// { tau : tau disjoint from s, tau union s in x }. Throws std::domain_error
// if s is not in x.
Complex link(const Complex& x, const Simplex& s);

// All simplices of x whose vertices lie in vs. Throws std::domain_error if
// some vertex of vs is not in x.
Complex full_subcomplex(const Complex& x, const std::vector<VertexId>& vs);

// Smallest subcomplex of x containing the set difference x \ y. Throws
// std::domain_error if y is not a subcomplex of x.
Complex complement_complex(const Complex& x, const Complex& y);

// Full subcomplex on the closed neighborhood of v. With full_ball=false the
// alternative reading (union of simplices containing v, plus their faces)
// is returned instead.
Complex one_ball(const Complex& x, VertexId v, bool full_ball = true);

// Intersection of two subcomplexes (simplex-set intersection).
Complex intersect(const Complex& a, const Complex& b);

Graph skeleton(const Complex& x);

// Flag complex of the graph { {p,q} : dist(p,q) <= r }, truncated at max_dim.
Complex rips_complex(const FiniteMetric& m, double r, int max_dim);

// Equivalence classes of 1-skeleton reachability, each sorted; classes
// ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Complex& x);

bool is_connected(const Complex& x);

}  // namespace systolic
