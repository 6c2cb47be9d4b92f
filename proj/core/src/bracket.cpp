#include "ribbonlink/bracket.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ribbonlink/error.hpp"

namespace ribbonlink {

LaurentPolynomial kauffman_bracket(const LinkDiagram& diagram, int limit) {
  const int n = diagram.crossing_count();
  if (n > limit) {
    throw Error(ErrorKind::LimitExceeded, "state sum over " + std::to_string(n) + " crossings exceeds the limit of " +
                                              std::to_string(limit) + "; use sampled checks instead");
  }
  if (n == 0 && diagram.free_loops() == 0) throw Error(ErrorKind::EmptyInput, "bracket of the empty diagram");
  if (n >= 31) throw Error(ErrorKind::LimitExceeded, "state index does not fit");

  const int labels = diagram.edge_count();
  const int max_loops = labels + diagram.free_loops();
  // histogram[b][loops]: states with b B-smoothings and that many loops.
  std::vector<std::vector<std::int64_t>> histogram(n + 1, std::vector<std::int64_t>(max_loops + 1, 0));
  std::vector<int> parent(labels + 1);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto& crossings = diagram.crossings();
  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = labels;
    auto join = [&](int a, int b) {
      a = root(a);
      b = root(b);
      if (a != b) {
        parent[a] = b;
        --loops;
      }
    };
    int b_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& s = crossings[c].slots;
      if (state >> c & 1u) {
        ++b_count;
        join(s[0], s[3]);
        join(s[1], s[2]);
      } else {
        join(s[0], s[1]);
        join(s[2], s[3]);
      }
    }
    ++histogram[b_count][loops + diagram.free_loops()];
  }

  const LaurentPolynomial delta = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  std::vector<LaurentPolynomial> delta_pow{LaurentPolynomial(1)};
  for (int k = 1; k <= max_loops; ++k) delta_pow.push_back(delta_pow.back() * delta);

  LaurentPolynomial total;
  for (int b = 0; b <= n; ++b)
    for (int loops = 1; loops <= max_loops; ++loops)
      if (histogram[b][loops] != 0) total += (delta_pow[loops - 1] * histogram[b][loops]).shifted(n - 2 * b);
  return total;
}

LaurentPolynomial normalized_invariant(const LinkDiagram& diagram, int limit) {
  const int w = diagram.writhe();
  return kauffman_bracket(diagram, limit) * LaurentPolynomial::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
}

bool equivalent_up_to_mirror(const LaurentPolynomial& f1, const LaurentPolynomial& f2) {
  return f1 == f2 || f1.inverted_variable() == f2;
}

}  // namespace ribbonlink
