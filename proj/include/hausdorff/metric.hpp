// Hausdorff distance between finite simplicial complexes, realized as sets of
// probability laws on their vertices (half-L1 metric).
//
// For a face F and a complex K, the distance from the closed simplex on F to
// the realization of K is 1 - D(F, K), where D is the minimax value over the
// simplex on F of the total weight carried by faces of K inside F. The open
// simplex (laws with support exactly F) has the same supremum, since the
// objective is continuous.

#ifndef HAUSDORFF_METRIC_HPP
#define HAUSDORFF_METRIC_HPP

#include <map>
#include <optional>

#include "hausdorff/complex.hpp"
#include "hausdorff/minimax.hpp"
#include "hausdorff/rational.hpp"

namespace hausdorff {

/// Probability law on a finite vertex set, exact weights.
class Law {
 public:
  /// Throws InvalidLaw on negative weights, weights not summing to 1, or
  /// an empty support.
  explicit Law(std::map<VertexId, Rat> weights);

  const std::map<VertexId, Rat>& weights() const { return weights_; }
  Rat weight(VertexId v) const;
  /// Vertices with positive weight, sorted.
  std::vector<VertexId> support() const;

 private:
  std::map<VertexId, Rat> weights_;
};

/// Minimax problem D(F, K): the maximal faces of K restricted to F.
MinimaxProblem face_problem(const Face& f, const Complex& k);

Rat face_distance(const Face& f, const Complex& k);

/// Same value through the connected components of K, combined harmonically.
Rat face_distance_by_components(const Face& f, const Complex& k);

/// sup over points of |k1| of the distance to |k2|.
Rat directed_distance(const Complex& k1, const Complex& k2);

Rat distance(const Complex& k1, const Complex& k2);

/// min over faces F of K inside the support of alpha of 1 - alpha(F).
Rat law_distance(const Law& alpha, const Complex& k);

/// Largest n with equal n-skeleta; -1 when the vertex sets differ.
/// nullopt when the complexes are equal.
std::optional<long> common_skeleton_dimension(const Complex& k1, const Complex& k2);

/// 1/(N+2) for N = common_skeleton_dimension; a lower bound on distance.
std::optional<Rat> skeleton_disagreement_bound(const Complex& k1, const Complex& k2);

}  // namespace hausdorff

#endif  // HAUSDORFF_METRIC_HPP
