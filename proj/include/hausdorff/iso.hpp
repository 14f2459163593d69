// Distances between isomorphism classes of simplicial complexes.
//
// The class distance is the minimum Hausdorff distance over all vertex
// bijections between representatives. Everything here is brute force over
// permutations, which is fine up to kMaxIsoVertices vertices.

#ifndef HAUSDORFF_ISO_HPP
#define HAUSDORFF_ISO_HPP

#include <span>
#include <string>
#include <vector>

#include "hausdorff/complex.hpp"
#include "hausdorff/rational.hpp"

namespace hausdorff {

inline constexpr std::size_t kMaxIsoVertices = 8;
inline constexpr std::size_t kMaxEnumerateVertices = 5;

/// A representative over {0, ..., n-1} whose maximal-face list is
/// lexicographically least among all relabelings.
struct CanonicalComplex {
  Complex complex;
  /// Serialized maximal faces, e.g. "[0,1][1,2]". Equal iff isomorphic.
  std::string encoding;

  friend bool operator==(const CanonicalComplex& a, const CanonicalComplex& b) {
    return a.encoding == b.encoding;
  }
};

/// Throws TooLarge above `max_vertices`.
CanonicalComplex canonical_form(const Complex& k, std::size_t max_vertices = kMaxIsoVertices);

/// All classes with vertex set exactly {0..n-1}, sorted by (face count,
/// maximal-face list). Throws TooLarge for n > kMaxEnumerateVertices.
std::vector<CanonicalComplex> enumerate_classes(std::size_t n);

struct ClassDistanceResult {
  Rat value;
  /// Vertex map of k1 with distance(apply_vertex_map(k1, witness), k2) == value.
  VertexMap witness;
};

ClassDistanceResult class_distance(const Complex& k1, const Complex& k2,
                                   std::size_t max_vertices = kMaxIsoVertices);

class DistanceMatrix {
 public:
  DistanceMatrix(std::vector<std::string> labels, std::vector<Rat> cells);

  std::size_t size() const { return labels_.size(); }
  const Rat& at(std::size_t i, std::size_t j) const { return cells_[i * size() + j]; }
  std::span<const std::string> labels() const { return labels_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Rat> cells_;
};

/// Pairwise class distances, evaluated in parallel over pairs with up to
/// `jobs` threads (0 = OpenMP default). Output does not depend on `jobs`.
DistanceMatrix class_distance_matrix(std::span<const CanonicalComplex> classes, int jobs = 0);

/// Reference version: one class_distance call per pair, single thread.
DistanceMatrix class_distance_matrix_serial(std::span<const CanonicalComplex> classes);

}  // namespace hausdorff

#endif  // HAUSDORFF_ISO_HPP
