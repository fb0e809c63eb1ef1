#include "systolic/homotopy.hpp"

#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>

namespace systolic {

GroupPresentation fundamental_group_presentation(const Complex& x,
                                                 VertexId basepoint) {
  if (!x.has_vertex(basepoint)) {
    throw std::domain_error("presentation: basepoint is not in the complex");
  }
  if (!is_connected(x)) {
    throw std::domain_error("presentation: complex is disconnected");
  }
  // Breadth-first spanning tree with sorted adjacency.
  std::set<std::pair<VertexId, VertexId>> tree;
  std::set<VertexId> visited{basepoint};
  std::queue<VertexId> q;
  q.push(basepoint);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId u : x.neighbors(v)) {
      if (visited.insert(u).second) {
        tree.insert({std::min(u, v), std::max(u, v)});
        q.push(u);
      }
    }
  }
  std::map<std::pair<VertexId, VertexId>, int> gen_index;
  for (const Simplex& s : x.simplices()) {
    if (s.dim() != 1) continue;
    std::pair<VertexId, VertexId> e{s[0], s[1]};
    if (!tree.count(e)) {
      int idx = static_cast<int>(gen_index.size());
      gen_index.emplace(e, idx);
    }
  }
  GroupPresentation pres;
  pres.generators = static_cast<int>(gen_index.size());
  // Letter for traversing u -> v, or 0 for tree edges.
  auto letter = [&](VertexId u, VertexId v) -> int {
    std::pair<VertexId, VertexId> e{std::min(u, v), std::max(u, v)};
    auto it = gen_index.find(e);
    if (it == gen_index.end()) return 0;
    return u < v ? it->second + 1 : -(it->second + 1);
  };
  for (const Simplex& s : x.simplices()) {
    if (s.dim() != 2) continue;
    std::vector<int> word;
    const VertexId a = s[0], b = s[1], c = s[2];
    for (int l : {letter(a, b), letter(b, c), letter(c, a)}) {
      if (l == 0) continue;
      if (!word.empty() && word.back() == -l) {
        word.pop_back();
      } else {
        word.push_back(l);
      }
    }
    pres.relators.push_back(std::move(word));
  }
  return pres;
}

namespace {

using Matrix = std::vector<std::vector<long long>>;

long long checked_mul(long long a, long long b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > static_cast<__int128>(1) << 62 || r < -(static_cast<__int128>(1) << 62)) {
    throw std::overflow_error("integer reduction overflow");
  }
  return static_cast<long long>(r);
}

// Reduces m to Smith-like diagonal form in place; returns the invariant
// factors (absolute values, possibly zero).
std::vector<long long> smith_invariants(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<long long> invariants;
  std::size_t r0 = 0, c0 = 0;
  while (r0 < rows && c0 < cols) {
    // Find the nonzero pivot of least absolute value.
    std::size_t pr = rows, pc = cols;
    long long best = 0;
    for (std::size_t i = r0; i < rows; ++i) {
      for (std::size_t j = c0; j < cols; ++j) {
        long long v = std::llabs(m[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (best == 0) break;
    std::swap(m[r0], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = r0 + 1; i < rows; ++i) {
        if (m[i][c0] == 0) continue;
        long long f = m[i][c0] / m[r0][c0];
        for (std::size_t j = c0; j < cols; ++j) {
          m[i][j] -= checked_mul(f, m[r0][j]);
        }
        if (m[i][c0] != 0) {        // remainder smaller than pivot
          std::swap(m[r0], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = c0 + 1; j < cols; ++j) {
        if (m[r0][j] == 0) continue;
        long long f = m[r0][j] / m[r0][c0];
        for (std::size_t i = r0; i < rows; ++i) {
          m[i][j] -= checked_mul(f, m[i][c0]);
        }
        if (m[r0][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][j]);
          clean = false;
        }
      }
    }
    invariants.push_back(std::llabs(m[r0][c0]));
    ++r0;
    ++c0;
  }
  return invariants;
}

}  // namespace

bool first_homology_trivial(const GroupPresentation& p) {
  if (p.generators == 0) return true;
  Matrix m;
  for (const auto& rel : p.relators) {
    std::vector<long long> row(p.generators, 0);
    for (int l : rel) {
      row[std::abs(l) - 1] += l > 0 ? 1 : -1;
    }
    m.push_back(std::move(row));
  }
  if (m.empty()) return false;
  auto inv = smith_invariants(std::move(m));
  if (static_cast<int>(inv.size()) < p.generators) return false;  // free rank
  for (long long d : inv) {
    if (d != 1) return false;  // torsion
  }
  return true;
}

namespace {

void free_reduce(std::vector<int>& w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  while (out.size() >= 2 && out.front() == -out.back()) {
    out.erase(out.begin());
    out.pop_back();
    // Interior may now cancel at the seam; redo cheaply.
    std::vector<int> again;
    for (int l : out) {
      if (!again.empty() && again.back() == -l) {
        again.pop_back();
      } else {
        again.push_back(l);
      }
    }
    out = std::move(again);
  }
  w = std::move(out);
}

std::vector<int> invert_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

}  // namespace

bool tietze_trivializes(GroupPresentation p, int effort) {
  constexpr std::size_t kMaxWordLength = 1 << 16;
  int moves = 0;
  std::vector<bool> alive(p.generators, true);
  int live = p.generators;
  while (true) {
    for (auto& r : p.relators) free_reduce(r);
    std::erase_if(p.relators, [](const std::vector<int>& r) { return r.empty(); });
    if (p.relators.empty()) return live == 0;
    // Pick the shortest relator containing a generator exactly once.
    std::size_t best = p.relators.size();
    int best_gen = 0;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      const auto& r = p.relators[i];
      if (best < p.relators.size() &&
          r.size() >= p.relators[best].size()) {
        continue;
      }
      std::map<int, int> count;
      for (int l : r) count[std::abs(l)]++;
      for (auto [g, c] : count) {
        if (c == 1) {
          best = i;
          best_gen = g;
          break;
        }
      }
    }
    if (best == p.relators.size()) return false;  // stuck
    if (++moves > effort) return false;
    // Rotate so the chosen letter leads, then solve for the generator.
    std::vector<int> r = p.relators[best];
    std::size_t pos = 0;
    while (std::abs(r[pos]) != best_gen) ++pos;
    std::rotate(r.begin(), r.begin() + pos, r.end());
    std::vector<int> rhs(r.begin() + 1, r.end());  // g^e * rhs = 1
    std::vector<int> g_word =
        r[0] > 0 ? invert_word(rhs) : rhs;  // value of generator best_gen
    p.relators.erase(p.relators.begin() + best);
    alive[best_gen - 1] = false;
    --live;
    for (auto& rel : p.relators) {
      std::vector<int> replaced;
      for (int l : rel) {
        if (std::abs(l) == best_gen) {
          const auto& sub = l > 0 ? g_word : invert_word(g_word);
          replaced.insert(replaced.end(), sub.begin(), sub.end());
        } else {
          replaced.push_back(l);
        }
      }
      if (replaced.size() > kMaxWordLength) return false;
      rel = std::move(replaced);
    }
  }
}

TriState is_simply_connected_bounded(const Complex& x, int effort) {
  if (!is_connected(x)) {
    throw std::domain_error("simply connected check: complex must be "
                            "connected and nonempty");
  }
  GroupPresentation pres =
      fundamental_group_presentation(x, x.vertices().front());
  try {
    if (!first_homology_trivial(pres)) return TriState::No;
  } catch (const std::overflow_error&) {
    return TriState::Unknown;
  }
  return tietze_trivializes(std::move(pres), effort) ? TriState::Yes
                                                     : TriState::Unknown;
}

}  // namespace systolic
