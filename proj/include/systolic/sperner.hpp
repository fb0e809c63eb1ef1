#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "systolic/simplicial.hpp"

namespace systolic {

struct Validation {
  bool ok = true;
  std::string message;

  explicit operator bool() const { return ok; }
  static Validation fail(std::string msg) { return {false, std::move(msg)}; }
};

/// Triangulation of the 3-disc: a tetrahedra list plus its distinguished
/// boundary sphere. Face-level invariants are checked by validate_ball, not
/// on construction.
struct Ball3 {
  std::vector<std::array<VertexId, 4>> tetrahedra;  // each sorted ascending
  Complex boundary;

  std::vector<VertexId> vertex_set() const;
};

Ball3 make_ball(std::vector<std::array<VertexId, 4>> tets,
                Complex boundary);

// Boundary triangles of the tetrahedra multiset: triangles lying in exactly
// one tetrahedron. Fails (second member of pair false) if some triangle lies
// in more than two.
std::pair<std::set<Simplex>, bool> boundary_triangles(
    const std::vector<std::array<VertexId, 4>>& tets);

// Checks the 3-ball invariants: boundary census matches `boundary`,
// `boundary` is a triangulated 2-sphere, tetrahedra dual graph is connected,
// edge and vertex stars are manifold-like. With require_no_internal, every
// vertex must lie on the boundary.
Validation validate_ball(const Ball3& b, bool require_no_internal);

enum class RoleKind { Apex, Arc, Region };

struct VertexRole {
  RoleKind kind = RoleKind::Region;
  int a = -1;  // Apex: index i. Arc: smaller index i. Region: omitted index l.
  int b = -1;  // Arc: larger index j.

  bool operator==(const VertexRole&) const = default;
};

/// Tetrahedral cell structure on the boundary sphere: four apex vertices,
/// six arcs (simple edge-paths joining apexes), and region role tags for the
/// remaining vertices. Region l is the triangle spanned by the apexes other
/// than l.
struct DualStructure {
  std::array<VertexId, 4> apex{};
  std::map<std::pair<int, int>, std::vector<VertexId>> arcs;
  std::map<VertexId, VertexRole> roles;  // total on boundary vertices
};

// Structural checks: arcs are simple paths in the boundary 1-skeleton with
// the right endpoints, pairwise intersections are empty or one shared apex,
// and roles cover the boundary vertex set consistently.
Validation validate_dual(const Ball3& b, const DualStructure& d);

using Coloring = std::map<VertexId, int>;

// Coloring rules: c(apex_i) = i, arc(i,j) vertices colored in {i,j}, region
// l vertices colored in {0..3} minus {l}... specifically within the triple
// of apex indices spanning that region. The coloring must be total on the
// ball vertex set with values in 0..3.
Validation validate_coloring(const Ball3& b, const DualStructure& d,
                             const Coloring& c);

// A tetrahedron whose vertices carry all four colors, if any (first in the
// stored order). Vertices missing from the coloring never match.
std::optional<std::array<VertexId, 4>> find_rainbow(const Ball3& b,
                                                    const Coloring& c);
int count_rainbow(const Ball3& b, const Coloring& c);

// Universal no-internal-vertex filling: the cone from boundary vertex v0
// over the complement of its star. Valid for any triangulated 2-sphere.
Ball3 cone_ball(const Complex& sphere, VertexId v0);

// ---- text formats ----
// Ball: lines `t v1 v2 v3 v4` and `bt v1 v2 v3`. Coloring: lines `c v k`.
// Dual: lines `w i v`, `a i j v1 ... vk`, `r l v`.
Ball3 load_ball(std::istream& in);
void write_ball(std::ostream& out, const Ball3& b);
Coloring load_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& c);
DualStructure load_dual(std::istream& in);
void write_dual(std::ostream& out, const DualStructure& d);

}  // namespace systolic
