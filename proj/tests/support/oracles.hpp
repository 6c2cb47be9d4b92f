#pragma once

// Independent reference computations used to check the library. None of
// these call into the code they check.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Poly = std::map<int, long long>;
using Pd = std::vector<std::array<int, 4>>;

inline void add(Poly& p, int e, long long c) {
  if ((p[e] += c) == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (auto [e1, c1] : a)
    for (auto [e2, c2] : b) add(out, e1 + e2, c1 * c2);
  return out;
}

// Loops of a smoothing, found by walking half-edges instead of merging sets.
inline int count_loops(const Pd& pd, std::uint32_t state) {
  const int n = static_cast<int>(pd.size());
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) ends[pd[c][s]].push_back({c, s});
  auto paired = [&](int c, int s) {
    bool b = state >> c & 1u;
    static const int a_pair[4] = {1, 0, 3, 2};
    static const int b_pair[4] = {3, 2, 1, 0};
    return b ? b_pair[s] : a_pair[s];
  };
  std::set<std::pair<int, int>> seen;
  int loops = 0;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (seen.count({c, s})) continue;
      ++loops;
      int cc = c, ss = s;
      while (!seen.count({cc, ss})) {
        seen.insert({cc, ss});
        int t = paired(cc, ss);
        seen.insert({cc, t});
        const auto& e = ends[pd[cc][t]];
        auto other = (e[0] == std::make_pair(cc, t)) ? e[1] : e[0];
        cc = other.first;
        ss = other.second;
      }
    }
  return loops;
}

// <D> = sum over states A^(#A - #B) d^(loops - 1), d = -A^2 - A^-2.
inline Poly bracket(const Pd& pd, int free_loops = 0) {
  const int n = static_cast<int>(pd.size());
  const Poly d{{2, -1}, {-2, -1}};
  Poly total;
  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    int b = __builtin_popcount(state);
    int loops = count_loops(pd, state) + free_loops;
    Poly term{{n - 2 * b, 1}};
    for (int k = 1; k < loops; ++k) term = mul(term, d);
    for (auto [e, c] : term) add(total, e, c);
  }
  return total;
}

// Writhe from a direct strand walk: under strands run from slot 0 to slot 2,
// a crossing is positive when its over strand is entered at slot 3.
inline int writhe(const Pd& pd) {
  const int n = static_cast<int>(pd.size());
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) ends[pd[c][s]].push_back({c, s});
  std::vector<int> over_entry(n, -1);
  std::set<std::pair<int, int>> entered;
  for (int c0 = 0; c0 < n; ++c0) {
    if (entered.count({c0, 0})) continue;
    int c = c0, s = 0;
    while (!entered.count({c, s})) {
      entered.insert({c, s});
      if (s % 2 == 1) over_entry[c] = s;
      int out = (s + 2) % 4;
      const auto& e = ends[pd[c][out]];
      auto other = (e[0] == std::make_pair(c, out)) ? e[1] : e[0];
      c = other.first;
      s = other.second;
    }
  }
  int w = 0;
  for (int c = 0; c < n; ++c) w += over_entry[c] == 3 ? 1 : (over_entry[c] == 1 ? -1 : 0);
  return w;
}

inline Poly normalized(const Pd& pd, int free_loops = 0) {
  int w = writhe(pd);
  Poly f = bracket(pd, free_loops);
  Poly out;
  for (auto [e, c] : f) add(out, e - 3 * w, (w % 2 == 0) ? c : -c);
  return out;
}

inline Poly invert(const Poly& p) {
  Poly out;
  for (auto [e, c] : p) out[-e] = c;
  return out;
}

inline bool equal_up_to_mirror(const Poly& a, const Poly& b) { return a == b || invert(a) == b; }

// 2-colorability by exhaustive search; loops make a graph non-bipartite.
inline bool bipartite(int vertices, const std::vector<std::pair<int, int>>& edges) {
  for (std::uint32_t mask = 0; mask < (1u << vertices); ++mask) {
    bool ok = true;
    for (auto [u, v] : edges) ok = ok && ((mask >> u & 1u) != (mask >> v & 1u));
    if (ok) return true;
  }
  return false;
}

// An edge whose removal disconnects its endpoints, or a loop.
inline bool is_bridge_or_loop(int vertices, const std::vector<std::pair<int, int>>& edges, int which) {
  auto [s, t] = edges[which];
  if (s == t) return true;
  std::vector<char> reached(vertices, 0);
  std::vector<int> stack{s};
  reached[s] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      if (i == which) continue;
      auto [u, v] = edges[i];
      int y = u == x ? v : (v == x ? u : -1);
      if (y >= 0 && !reached[y]) {
        reached[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return !reached[t];
}

// Re-walks a closed odd walk against an edge list.
inline bool odd_closed_walk(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& vertices,
                            const std::vector<int>& walk) {
  const std::size_t k = walk.size();
  if (k % 2 == 0 || vertices.size() != k) return false;
  for (std::size_t j = 0; j < k; ++j) {
    auto [u, v] = edges.at(walk[j]);
    int a = vertices[j], b = vertices[(j + 1) % k];
    if (std::minmax(u, v) != std::minmax(a, b)) return false;
  }
  return true;
}

struct ChordArc {
  int a, b, page;
};

// Chords between points on the unit circle, intersected in floating point.
inline bool chords_cross(int m, int a, int b, int c, int d) {
  if (a == c || a == d || b == c || b == d) return false;
  auto pt = [m](int k) {
    double t = 2 * std::numbers::pi * k / m;
    return std::pair<double, double>{std::cos(t), std::sin(t)};
  };
  auto orient = [](std::pair<double, double> p, std::pair<double, double> q, std::pair<double, double> r) {
    return (q.first - p.first) * (r.second - p.second) - (q.second - p.second) * (r.first - p.first);
  };
  auto A = pt(a), B = pt(b), C = pt(c), D = pt(d);
  return (orient(A, B, C) > 0) != (orient(A, B, D) > 0) && (orient(C, D, A) > 0) != (orient(C, D, B) > 0);
}

inline bool presentation_valid(int m, const std::vector<ChordArc>& arcs) {
  if (m <= 0) return false;
  std::vector<std::vector<int>> pages(m);
  for (const auto& arc : arcs) {
    if (arc.a < 0 || arc.a >= m || arc.b < 0 || arc.b >= m || arc.a == arc.b) return false;
    pages[arc.a].push_back(arc.page);
    pages[arc.b].push_back(arc.page);
  }
  for (const auto& at : pages)
    if (at.size() != 2 || at[0] == at[1]) return false;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs[i].page == arcs[j].page && chords_cross(m, arcs[i].a, arcs[i].b, arcs[j].a, arcs[j].b)) return false;
  return true;
}

inline int inner_crossings(int m, const std::vector<ChordArc>& arcs) {
  int count = 0;
  for (const auto& x : arcs)
    for (const auto& y : arcs)
      if (x.page == 1 && y.page == 2 && chords_cross(m, x.a, x.b, y.a, y.b)) ++count;
  return count;
}

}  // namespace oracle
