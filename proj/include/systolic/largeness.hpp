#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "systolic/simplicial.hpp"

namespace systolic {

/// An induced cycle of the 1-skeleton that is a full subcomplex (no chords,
/// and for length 3 no spanning triangle). Stored in canonical order:
/// smallest vertex first, smaller neighbor second.
struct FullCycle {
  std::vector<VertexId> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const FullCycle&) const = default;
  auto operator<=>(const FullCycle&) const = default;
};

// All full cycles of length 3..max_len, each reported once up to
// rotation/reflection. Length-3 cycles appear only when the triangle they
// trace is not filled by a 2-simplex.
std::vector<FullCycle> enumerate_full_cycles(const Complex& x, int max_len);

// True iff x has no full cycle of length < k. Defined for flag complexes
// (throws std::domain_error otherwise) and k >= 4; every flag complex is
// 4-large.
bool is_k_large(const Complex& x, int k);

// True iff x and the links of all its simplices are k-large.
bool is_locally_k_large(const Complex& x, int k);

/// A k-wheel with a pendant triangle, detected as an embedded subgraph:
/// hub adjacent to every rim vertex, rim a closed k-cycle, pendant adjacent
/// to the two attach vertices. Extra adjacencies do not disqualify a match.
struct Wheel {
  VertexId hub;
  std::vector<VertexId> rim;  // cyclic, canonical rotation/reflection
  VertexId pendant;
  std::pair<VertexId, VertexId> attach;  // attach.first < attach.second

  std::vector<VertexId> all_vertices() const;
  bool operator==(const Wheel&) const = default;
  auto operator<=>(const Wheel&) const = default;
};

// All embedded k-wheels with a pendant triangle, up to pattern symmetry.
// With require_triangle (default) the attach vertices must be adjacent;
// the looser reading admits any two distinct rim vertices.
std::vector<Wheel> enumerate_wheels_with_pendant(const Complex& x, int k,
                                                 bool require_triangle = true);

struct Sd2Result {
  bool ok = false;
  std::optional<Wheel> witness;         // a wheel outside every 1-ball
  std::optional<FullCycle> small_cycle; // a short full cycle in some link
};

// SD2*: locally 5-large, and every 5-wheel with a pendant triangle lies in
// the 1-ball around some vertex of x. Throws std::domain_error on non-flag
// input.
Sd2Result sd2star_witness(const Complex& x);
bool satisfies_sd2star(const Complex& x);

// satisfies_sd2star holds for the link of every simplex of x.
bool has_sd2star_links(const Complex& x);

}  // namespace systolic
