#pragma once

#include <string>
#include <vector>

#include "systolic/simplicial.hpp"

namespace systolic {

// Cycle C_n, n >= 3: vertices 0..n-1, edges between consecutive ids.
Complex cycle_complex(int n);

// Boundary of the octahedron: flag complex of K_{2,2,2}. Antipodal pairs
// are (0,1), (2,3), (4,5).
Complex octahedron();

// Boundary of the icosahedron: 12 vertices, 30 edges, 20 triangles.
Complex icosahedron();

// Equilateral-triangulation patch on (w+1) x (h+1) lattice points with
// edges in the x, y and antidiagonal (x+1,y-1) directions. Interior
// vertices have degree 6. Vertex (x,y) gets id y*(w+1)+x.
Complex tri_grid(int w, int h);

// Planar triangulation patch grown in rings from a center vertex so that
// every interior vertex has degree 7.
Complex deg7_patch(int radius);

// Boundary of the tetrahedron: 4 triangles, no 3-simplex.
Complex tetra_boundary();

// Cone over `base`: a fresh apex joined to every simplex of the base.
Complex cone_complex(const Complex& base);

// Dispatcher used by the CLI: name in {cycle, octahedron, icosahedron,
// tri_grid, deg7_patch, tetra_boundary, cone_cycle}, with integer params.
// Throws std::invalid_argument for unknown names or bad params.
Complex generate(const std::string& name, const std::vector<long long>& params);

std::vector<std::string> generator_names();

}  // namespace systolic
