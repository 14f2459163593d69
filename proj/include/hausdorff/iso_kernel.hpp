// Bitmask kernels behind the class-distance search.
//
// Complexes on at most kMaxIsoVertices vertices are re-indexed to {0..n-1}
// and faces become bitmasks. For a fixed complex B the face distance of every
// subset of its vertices is tabulated once; the distance between sigma(A) and
// B is then a max of table lookups:
//
//   max( max_{F max in A} table_B[sigma F], max_{G max in B} table_A[sigma^-1 G] )
//
// Tables are compared through integer ranks into a shared sorted value list.

#ifndef HAUSDORFF_ISO_KERNEL_HPP
#define HAUSDORFF_ISO_KERNEL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hausdorff/complex.hpp"
#include "hausdorff/rational.hpp"

namespace hausdorff::kernel {

using Mask = std::uint32_t;

struct MaskedComplex {
  std::size_t n = 0;
  std::vector<Mask> maximal;
};

/// Vertex i of the result is the i-th smallest vertex of k.
MaskedComplex to_masked(const Complex& k);
Complex from_masked(const MaskedComplex& k);
Mask apply_permutation(Mask face, std::span<const std::uint8_t> perm);

/// Entry m is face_distance(face(m), k) for every nonempty mask m < 2^n.
std::vector<Rat> face_distance_table(const MaskedComplex& k);

/// Sorted distinct values and, per table, the rank of each entry.
struct RankedTables {
  std::vector<Rat> values;
  std::vector<std::vector<std::uint32_t>> ranks;
};
RankedTables rank_tables(std::span<const std::vector<Rat>> tables);

struct BestBijection {
  std::uint32_t rank = 0;
  /// perm[i] is the vertex of b that vertex i of a maps to.
  std::vector<std::uint8_t> perm;
};

/// Minimizes the distance over all bijections; a and b must have the same n.
/// Stops early at rank `floor` (0 means the identity-of-classes bound).
BestBijection best_bijection(const MaskedComplex& a, std::span<const std::uint32_t> rank_a,
                             const MaskedComplex& b, std::span<const std::uint32_t> rank_b,
                             std::uint32_t floor = 0);

}  // namespace hausdorff::kernel

#endif  // HAUSDORFF_ISO_KERNEL_HPP
