// Minimax of face-sum linear forms over the probability simplex.
//
// For a ground set F and faces G_1..G_m inside F, the value is
//
//     D = min_{x >= 0, sum x = 1}  max_i  sum_{s in G_i} x_s
//
// solve_minimax computes it with an exact rational simplex on the epigraph
// program (minimize t s.t. sum_{G_i} x - t <= 0), using Bland's rule.
// oracle_minimax recomputes it independently by enumerating candidate
// vertices of the arrangement; it is meant for cross-checking only.

#ifndef HAUSDORFF_MINIMAX_HPP
#define HAUSDORFF_MINIMAX_HPP

#include <map>
#include <span>
#include <vector>

#include "hausdorff/complex.hpp"
#include "hausdorff/rational.hpp"

namespace hausdorff {

class MinimaxProblem {
 public:
  /// Throws EmptyInput on an empty ground set and std::invalid_argument if a
  /// form is not contained in the ground set. Forms are reduced to their
  /// maximal elements.
  MinimaxProblem(std::vector<VertexId> ground_set, std::vector<Face> face_forms);

  std::span<const VertexId> ground_set() const { return ground_; }
  std::span<const Face> face_forms() const { return forms_; }

 private:
  std::vector<VertexId> ground_;
  std::vector<Face> forms_;
};

struct MinimaxSolution {
  Rat value;
  /// An optimal point of the simplex; every ground vertex has an entry.
  std::map<VertexId, Rat> witness;
};

MinimaxSolution solve_minimax(const MinimaxProblem& p);

/// Largest ground set oracle_minimax accepts.
inline constexpr std::size_t kOracleMaxGround = 7;

/// Independent vertex-enumeration value. Throws TooLarge above
/// kOracleMaxGround.
Rat oracle_minimax(const MinimaxProblem& p);

/// 0 if any value is 0, else 1 / sum(1 / v_i). Throws EmptyInput when empty.
Rat harmonic_combine(std::span<const Rat> values);

}  // namespace hausdorff

#endif  // HAUSDORFF_MINIMAX_HPP
