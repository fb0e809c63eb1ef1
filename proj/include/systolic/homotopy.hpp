#pragma once

#include <vector>

#include "systolic/simplicial.hpp"
#include "systolic/tristate.hpp"

namespace systolic {

/// Finite presentation with unnamed generators 0..generators-1. Relator
/// letters are +-(g+1).
struct GroupPresentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;
};

// Edge-path group presentation: generators are the 1-skeleton edges outside
// a breadth-first spanning tree rooted at `basepoint`, one relator per
// triangle. Throws std::domain_error if x is disconnected or the basepoint
// is missing.
GroupPresentation fundamental_group_presentation(const Complex& x,
                                                 VertexId basepoint);

// Abelianization test: true iff Z^generators modulo the relator rows is
// trivial (all Smith invariant factors are 1).
bool first_homology_trivial(const GroupPresentation& p);

// Bounded Tietze simplification: true iff the presentation reaches zero
// generators and zero relators within `effort` elementary moves.
bool tietze_trivializes(GroupPresentation p, int effort);

// No if the abelianized relator matrix has nontrivial cokernel; Yes if
// bounded simplification reaches the empty presentation; Unknown otherwise.
TriState is_simply_connected_bounded(const Complex& x, int effort);

}  // namespace systolic
