#include "systolic/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace systolic {

VertexId LoadedComplex::id_of(long long label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) {
    throw std::domain_error("unknown vertex label: " + std::to_string(label));
  }
  return static_cast<VertexId>(it - labels.begin());
}

namespace {

// Parses `s v1 ... vk` lines into label lists.
std::vector<std::vector<long long>> parse_simplex_lines(std::istream& in) {
  std::vector<std::vector<long long>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag != "s") {
      throw ParseError(line_no, "expected 's', got '" + tag + "'");
    }
    std::vector<long long> verts;
    long long v;
    while (ss >> v) {
      if (v < 0) throw ParseError(line_no, "negative vertex label");
      verts.push_back(v);
    }
    if (!ss.eof()) throw ParseError(line_no, "malformed vertex token");
    if (verts.empty()) throw ParseError(line_no, "empty simplex line");
    std::vector<long long> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(line_no, "duplicate vertex in simplex");
    }
    rows.push_back(std::move(sorted));
  }
  return rows;
}

}  // namespace

LoadedComplex load_complex(std::istream& in) {
  auto rows = parse_simplex_lines(in);
  std::vector<long long> labels;
  for (const auto& row : rows) {
    labels.insert(labels.end(), row.begin(), row.end());
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  LoadedComplex out;
  out.labels = std::move(labels);
  std::vector<Simplex> simplices;
  simplices.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<VertexId> ids;
    ids.reserve(row.size());
    for (long long label : row) ids.push_back(out.id_of(label));
    simplices.push_back(Simplex(std::move(ids)));
  }
  out.cx = make_complex(simplices);
  return out;
}

LoadedComplex load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return load_complex(in);
}

Complex load_subcomplex(std::istream& in, const LoadedComplex& ambient) {
  auto rows = parse_simplex_lines(in);
  std::vector<Simplex> simplices;
  simplices.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<VertexId> ids;
    ids.reserve(row.size());
    for (long long label : row) ids.push_back(ambient.id_of(label));
    simplices.push_back(Simplex(std::move(ids)));
  }
  Complex sub = make_complex(simplices);
  for (const Simplex& s : sub.simplices()) {
    if (!ambient.cx.contains(s)) {
      std::ostringstream msg;
      msg << "subcomplex simplex not contained in ambient complex:";
      for (VertexId v : s.vertices()) msg << ' ' << ambient.label_of(v);
      throw std::domain_error(msg.str());
    }
  }
  return sub;
}

Complex load_subcomplex_file(const std::string& path,
                             const LoadedComplex& ambient) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return load_subcomplex(in, ambient);
}

void write_complex(std::ostream& out, const Complex& x,
                   const std::vector<long long>* labels) {
  for (const Simplex& s : x.maximal_simplices()) {
    out << 's';
    for (VertexId v : s.vertices()) {
      out << ' ' << (labels ? (*labels)[v] : static_cast<long long>(v));
    }
    out << '\n';
  }
}

std::string complex_to_string(const Complex& x) {
  std::ostringstream ss;
  write_complex(ss, x);
  return ss.str();
}

}  // namespace systolic
