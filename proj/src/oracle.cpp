// Brute-force minimax value by vertex enumeration.
//
// An optimum of min_x max_G phi_G(x) over the simplex sits at a vertex of the
// epigraph polytope. Eliminating t, such a vertex is the unique solution of
// n equations taken from {sum x = 1} and {x_s = 0} and {phi_G = phi_H}, where
// H is any one of the forms active at the vertex. We enumerate every such
// system, keep feasible solutions, and take the best objective.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "hausdorff/minimax.hpp"

namespace hausdorff {

namespace {

using Row = std::vector<Rat>;  // n coefficients followed by the RHS

// Gauss-Jordan on a square system; nullopt when singular.
std::optional<std::vector<Rat>> solve_square(std::vector<Row> sys, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sys[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(sys[piv], sys[col]);
    const Rat p = sys[col][col];
    for (auto& e : sys[col]) e /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sys[r][col].is_zero()) continue;
      const Rat f = sys[r][col];
      for (std::size_t c = col; c <= n; ++c) sys[r][c] -= f * sys[col][c];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = sys[i][n];
  return x;
}

}  // namespace

Rat oracle_minimax(const MinimaxProblem& p) {
  const auto ground = p.ground_set();
  const std::size_t n = ground.size();
  if (n > kOracleMaxGround) {
    throw TooLarge("oracle_minimax supports at most " + std::to_string(kOracleMaxGround) +
                   " ground vertices, got " + std::to_string(n));
  }
  const auto forms = p.face_forms();
  if (forms.empty()) return Rat(0);

  std::vector<std::vector<int>> member(forms.size(), std::vector<int>(n, 0));
  for (std::size_t g = 0; g < forms.size(); ++g) {
    for (std::size_t j = 0; j < n; ++j) member[g][j] = forms[g].contains(ground[j]) ? 1 : 0;
  }

  Row simplex_row(n + 1, Rat(1));
  std::optional<Rat> best;

  for (std::size_t anchor = 0; anchor < forms.size(); ++anchor) {
    std::vector<Row> candidates;
    for (std::size_t j = 0; j < n; ++j) {
      Row r(n + 1, Rat(0));
      r[j] = Rat(1);
      candidates.push_back(std::move(r));
    }
    for (std::size_t g = 0; g < forms.size(); ++g) {
      if (g == anchor) continue;
      Row r(n + 1, Rat(0));
      for (std::size_t j = 0; j < n; ++j) r[j] = Rat(member[g][j] - member[anchor][j]);
      candidates.push_back(std::move(r));
    }

    // Choose n - 1 candidate equations; the simplex equation is always active.
    const std::size_t k = n - 1;
    if (k > candidates.size()) continue;
    std::vector<char> pick(candidates.size(), 0);
    std::fill_n(pick.begin(), k, 1);
    do {
      std::vector<Row> sys{simplex_row};
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (pick[i]) sys.push_back(candidates[i]);
      }
      auto x = solve_square(std::move(sys), n);
      if (!x) continue;
      if (std::any_of(x->begin(), x->end(), [](const Rat& v) { return v.sign() < 0; })) continue;
      Rat worst(0);
      for (std::size_t g = 0; g < forms.size(); ++g) {
        Rat phi(0);
        for (std::size_t j = 0; j < n; ++j) {
          if (member[g][j]) phi += (*x)[j];
        }
        worst = std::max(worst, phi);
      }
      if (!best || worst < *best) best = worst;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  // Simplex vertices are always among the candidates, so best is set.
  return *best;
}

}  // namespace hausdorff
