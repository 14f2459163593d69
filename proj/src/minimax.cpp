#include "hausdorff/minimax.hpp"

#include <algorithm>
#include <stdexcept>

namespace hausdorff {

MinimaxProblem::MinimaxProblem(std::vector<VertexId> ground_set, std::vector<Face> face_forms)
    : ground_(std::move(ground_set)) {
  if (ground_.empty()) throw EmptyInput("minimax ground set must be nonempty");
  std::sort(ground_.begin(), ground_.end());
  ground_.erase(std::unique(ground_.begin(), ground_.end()), ground_.end());
  for (const auto& g : face_forms) {
    if (!g.is_subset_of(ground_)) throw std::invalid_argument("face form not contained in ground set");
  }
  if (!face_forms.empty()) {
    const auto c = Complex::from_faces(face_forms);
    forms_.assign(c.maximal_faces().begin(), c.maximal_faces().end());
  }
}

namespace {

// Dense simplex tableau for
//   minimize t
//   s.t.  sum_j x_j                    = 1
//         sum_{j in G_i} x_j - t + s_i = 0     (i = 0..m-1)
//         x, t, s >= 0
// Columns: x_0..x_{n-1}, t, s_0..s_{m-1}; the last column holds the RHS.
// Row `rows_` is the reduced-cost row of the objective.
class EpigraphTableau {
 public:
  EpigraphTableau(std::size_t n, const std::vector<std::vector<std::size_t>>& forms)
      : n_(n), m_(forms.size()), rows_(m_ + 1), cols_(n_ + 1 + m_),
        a_((rows_ + 1) * (cols_ + 1)), basis_(rows_) {
    for (std::size_t j = 0; j < n_; ++j) at(0, j) = 1;
    rhs(0) = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j : forms[i]) at(i + 1, j) = 1;
      at(i + 1, t_col()) = -1;
      at(i + 1, n_ + 1 + i) = 1;
      basis_[i + 1] = n_ + 1 + i;
    }
    // Feasible start: all mass on a vertex v of the first form, t = 1, with
    // the first form's constraint tight.
    const std::size_t v = forms[0][0];
    pivot(0, v);
    pivot(1, t_col());
    at(rows_, t_col()) = 1;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rat c = at(rows_, basis_[r]);
      if (!c.is_zero()) eliminate(rows_, r, c);
    }
  }

  void optimize() {
    while (true) {
      // Bland: lowest-index column with negative reduced cost enters.
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (at(rows_, j).sign() < 0) { enter = j; break; }
      }
      if (enter == cols_) return;
      std::size_t leave = rows_;
      Rat best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, enter).sign() <= 0) continue;
        Rat ratio = rhs(r) / at(r, enter);
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_) throw std::logic_error("minimax program reported unbounded");
      pivot(leave, enter);
    }
  }

  Rat value_of(std::size_t col) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] == col) return rhs(r);
    }
    return Rat(0);
  }

  std::size_t t_col() const { return n_; }

 private:
  Rat& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
  Rat& rhs(std::size_t r) { return at(r, cols_); }
  const Rat& rhs(std::size_t r) const { return at(r, cols_); }

  // row_target -= factor * row_src
  void eliminate(std::size_t target, std::size_t src, const Rat& factor) {
    for (std::size_t c = 0; c <= cols_; ++c) {
      if (!at(src, c).is_zero()) at(target, c) -= factor * at(src, c);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rat p = at(row, col);
    for (std::size_t c = 0; c <= cols_; ++c) at(row, c) /= p;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == row) continue;
      const Rat f = at(r, col);
      if (!f.is_zero()) eliminate(r, row, f);
    }
    basis_[row] = col;
  }

  std::size_t n_, m_, rows_, cols_;
  std::vector<Rat> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

MinimaxSolution solve_minimax(const MinimaxProblem& p) {
  const auto ground = p.ground_set();
  MinimaxSolution sol;
  if (p.face_forms().empty()) {
    for (VertexId v : ground) sol.witness[v] = Rat(0);
    sol.witness[ground[0]] = Rat(1);
    sol.value = Rat(0);
    return sol;
  }
  std::vector<std::vector<std::size_t>> forms;
  for (const auto& g : p.face_forms()) {
    std::vector<std::size_t> idx;
    for (VertexId v : g.vertices()) {
      idx.push_back(static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), v) - ground.begin()));
    }
    forms.push_back(std::move(idx));
  }
  EpigraphTableau tab(ground.size(), forms);
  tab.optimize();
  for (std::size_t j = 0; j < ground.size(); ++j) sol.witness[ground[j]] = tab.value_of(j);
  sol.value = tab.value_of(tab.t_col());
  return sol;
}

Rat harmonic_combine(std::span<const Rat> values) {
  if (values.empty()) throw EmptyInput("harmonic_combine needs at least one value");
  Rat inv_sum(0);
  for (const auto& v : values) {
    if (v.is_zero()) return Rat(0);
    inv_sum += v.reciprocal();
  }
  return inv_sum.reciprocal();
}

}  // namespace hausdorff
