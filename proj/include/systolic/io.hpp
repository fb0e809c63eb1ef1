#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "systolic/simplicial.hpp"

namespace systolic {

struct ParseError : std::invalid_argument {
  ParseError(int line_number, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line_number) + ": " +
                              what),
        line(line_number) {}
  int line;
};

/// A complex with dense vertex ids 0..n-1; original file labels are kept in
/// a side table (labels[id] = original label, ascending).
struct LoadedComplex {
  Complex cx;
  std::vector<long long> labels;

  long long label_of(VertexId v) const { return labels.at(v); }
  VertexId id_of(long long label) const;
};

// Complex text format: lines `s v1 v2 ... vk`, '#' comments, blank lines
// ignored. The loader takes the face closure.
LoadedComplex load_complex(std::istream& in);
LoadedComplex load_complex_file(const std::string& path);

// Same format; vertices are interpreted through the ambient label table and
// the result is checked to be a subcomplex of the ambient complex.
Complex load_subcomplex(std::istream& in, const LoadedComplex& ambient);
Complex load_subcomplex_file(const std::string& path,
                             const LoadedComplex& ambient);

// Writes maximal simplices, one `s ...` line each, in deterministic order.
// When `labels` is given, dense ids are translated back to labels.
void write_complex(std::ostream& out, const Complex& x,
                   const std::vector<long long>* labels = nullptr);
std::string complex_to_string(const Complex& x);

}  // namespace systolic
