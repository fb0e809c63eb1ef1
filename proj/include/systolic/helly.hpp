#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "systolic/classify.hpp"
#include "systolic/simplicial.hpp"
#include "systolic/sperner.hpp"
#include "systolic/tristate.hpp"

namespace systolic {

struct HellyBudgets {
  int max_disc_area = 256;        // triangles per disc filling
  long long disc_nodes = 2000000; // disc search expansions
  long long ball_nodes = 2000000; // ball search expansions
  int effort = 10000;             // Tietze budget for the advisory classify
};

/// Four subcomplexes of an ambient complex, plus search budgets.
struct HellyInput {
  Complex X;
  std::array<Complex, 4> A;
  HellyBudgets budgets;
};

struct HypothesisCheck {
  bool ok = false;
  std::string failure;               // first failing hypothesis, with witness
  TriState systolic = TriState::Unknown;  // advisory only
};

// Containment, connectivity of each A_i and each pairwise intersection,
// nonemptiness of triple intersections. Runs classify(X) for the advisory
// systolicity verdict; the pipeline itself proceeds on any X.
HypothesisCheck check_hypotheses(const HellyInput& in);

// ---- disc fillings ----

/// Triangulated 2-disc with a simplicial map into a target complex.
/// Abstract nodes are 0..node_count-1; the boundary walk occupies nodes
/// 0..boundary_len-1 in cyclic order. phi[node] is the target vertex.
/// A collapsed filling (walk of length < 3 that folds to a point) has no
/// triangles and `collapsed` set.
struct DiscFilling {
  int boundary_len = 0;
  int node_count = 0;
  std::vector<VertexId> phi;
  std::vector<std::array<int, 3>> triangles;
  bool collapsed = false;
};

enum class SearchStatus { Found, Exhausted, BadInput };

struct DiscResult {
  SearchStatus status = SearchStatus::Exhausted;
  DiscFilling disc;
  long long expansions = 0;
};

// Bounded search for a simplicial filling of a closed walk (consecutive
// entries adjacent or equal in `target`). Ear moves, interior cone vertices
// and chord splits, iterative-deepening on area.
DiscResult fill_disc(const Complex& target,
                     const std::vector<VertexId>& boundary_walk, int max_area,
                     long long node_budget);

// Independent re-verification: honest triangulated disc, boundary matches
// the walk, every triangle image spans a simplex of target.
Validation verify_disc_filling(const Complex& target,
                               const std::vector<VertexId>& boundary_walk,
                               const DiscFilling& d);

// ---- sphere assembly ----

/// Simplicial 2-sphere glued from four disc fillings, with its map into X
/// and the corner/seam bookkeeping needed downstream. Nodes are abstract.
struct SphereAssembly {
  int node_count = 0;
  std::vector<VertexId> phi;                     // node -> X vertex
  std::vector<std::array<int, 3>> triangles;     // sphere triangles
  std::vector<int> tri_disc;                     // owning disc per triangle
  std::array<int, 4> corner_node{};              // image of each z_l
  std::array<VertexId, 4> z{};                   // chosen triple points
  // Seam nodes for each unordered pair {k,l}: the glued gamma_kl path.
  std::map<std::pair<int, int>, std::vector<int>> seam_nodes;
  std::map<std::pair<int, int>, std::vector<VertexId>> gamma;  // X paths
};

// z_l = lexicographically least vertex of the triple intersection omitting
// index l. Throws std::domain_error if some triple intersection is empty.
std::array<VertexId, 4> pick_triple_points(const std::array<Complex, 4>& A);

// Shortest edge-path from a to b inside `region`, deterministic tie-breaks.
// Throws std::domain_error if a and b are disconnected in region.
std::vector<VertexId> connect_path(const Complex& region, VertexId a,
                                   VertexId b);

// Glues four disc fillings along shared gamma boundaries. The disc for
// index i must fill the walk gamma_kl + gamma_lj + gamma_jk (cyclically, in
// the canonical orientation produced by make_disc_walks). Throws
// std::logic_error on boundary mismatch.
SphereAssembly assemble_sphere(
    const std::array<VertexId, 4>& z,
    const std::map<std::pair<int, int>, std::vector<VertexId>>& gamma,
    const std::array<DiscFilling, 4>& discs);

// The boundary walk of disc i (walks[i]) plus the seam positions each walk
// segment occupies; used by assemble_sphere and the pipeline.
std::array<std::vector<VertexId>, 4> make_disc_walks(
    const std::array<VertexId, 4>& z,
    const std::map<std::pair<int, int>, std::vector<VertexId>>& gamma);

Validation verify_sphere(const Complex& X, const SphereAssembly& s);

Complex sphere_complex(const SphereAssembly& s);  // on abstract node ids

// ---- dual structure on the sphere ----

struct DualizedSphere {
  SphereAssembly sphere;  // possibly subdivided
  DualStructure dual;     // on sphere node ids
};

// Chooses an apex inside each disc (subdividing when a disc has no interior
// node), routes six pairwise-compatible arcs, and tags every node with its
// region. Subdivision nodes receive phi images that keep the map simplicial
// and inside the right subcomplexes. Throws std::logic_error if routing
// fails after refinement.
DualizedSphere dualize(const Complex& X, const std::array<Complex, 4>& A,
                       SphereAssembly s);

// ---- ball filling ----

struct BallFilling {
  std::vector<std::array<int, 4>> tets;  // over sphere node ids
};

struct BallResult {
  SearchStatus status = SearchStatus::Exhausted;
  BallFilling ball;
  long long expansions = 0;
};

// Bounded search for a triangulation of the 3-disc with boundary s and no
// internal vertices, every tetrahedron image spanning a simplex of X.
// Vertex-peeling with link re-triangulation, backtracking, node budget.
BallResult fill_ball(const Complex& X, const SphereAssembly& s,
                     long long node_budget);

// Condition check on a finished filling: valid no-internal-vertex 3-ball,
// boundary equal to the sphere, every tetrahedron image spans in X.
Validation verify_ball_filling(const Complex& X, const SphereAssembly& s,
                               const BallFilling& b);

Ball3 to_ball3(const SphereAssembly& s, const BallFilling& b);

// Deterministic admissible coloring (lowest admissible color per role).
// Throws std::logic_error if some node has no admissible color.
Coloring sperner_color(const SphereAssembly& s, const DualStructure& dual,
                       const std::array<Complex, 4>& A);

// ---- certificates ----

struct HellyCertificate {
  std::array<VertexId, 4> v{};
  bool trivial = false;
  // Witness bundle (absent in the trivial case).
  std::optional<SphereAssembly> sphere;
  std::optional<DualStructure> dual;
  std::optional<BallFilling> ball;
  std::optional<Coloring> coloring;
  std::optional<std::array<int, 4>> rainbow_nodes;
};

enum class HellyStatus { Certified, Unknown, HypothesisFailure };

struct HellyOutcome {
  HellyStatus status = HellyStatus::Unknown;
  std::optional<HellyCertificate> certificate;
  HypothesisCheck hypotheses;
  std::string message;
};

// Certificate with v0=v1=v2=v3 when the quadruple intersection is nonempty.
std::optional<HellyCertificate> trivial_case(const HellyInput& in);

// Full pipeline: trivial case, else sphere construction, dualization, ball
// filling, Sperner coloring and rainbow extraction. Every certificate is
// re-verified before being returned.
HellyOutcome helly_point(const HellyInput& in);

// Independent check reading only X, the four subcomplexes and the vertices:
// v_i in A_i and {v_0..v_3} spans a simplex of X.
bool verify_certificate(const Complex& X, const std::array<Complex, 4>& A,
                        const std::array<VertexId, 4>& v);

}  // namespace systolic
