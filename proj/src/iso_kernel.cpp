#include "hausdorff/iso_kernel.hpp"

#include <algorithm>
#include <numeric>

#include "hausdorff/metric.hpp"

namespace hausdorff::kernel {

MaskedComplex to_masked(const Complex& k) {
  const auto verts = k.vertex_set();
  if (verts.size() > 8 * sizeof(Mask) - 1) throw TooLarge("too many vertices for a bitmask");
  MaskedComplex out;
  out.n = verts.size();
  for (const auto& f : k.maximal_faces()) {
    Mask m = 0;
    for (VertexId v : f.vertices()) {
      m |= Mask{1} << (std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    }
    out.maximal.push_back(m);
  }
  return out;
}

Complex from_masked(const MaskedComplex& k) {
  std::vector<Face> faces;
  for (Mask m : k.maximal) {
    std::vector<VertexId> vs;
    for (std::size_t i = 0; i < k.n; ++i) {
      if (m & (Mask{1} << i)) vs.push_back(i);
    }
    faces.emplace_back(std::move(vs));
  }
  return Complex::from_faces(faces);
}

Mask apply_permutation(Mask face, std::span<const std::uint8_t> perm) {
  Mask out = 0;
  for (std::size_t i = 0; face; ++i, face >>= 1) {
    if (face & 1U) out |= Mask{1} << perm[i];
  }
  return out;
}

std::vector<Rat> face_distance_table(const MaskedComplex& k) {
  const Complex complex = from_masked(k);
  const Mask count = Mask{1} << k.n;
  std::vector<Rat> table(count);
  for (Mask m = 1; m < count; ++m) {
    std::vector<VertexId> vs;
    for (std::size_t i = 0; i < k.n; ++i) {
      if (m & (Mask{1} << i)) vs.push_back(i);
    }
    table[m] = face_distance(Face(std::move(vs)), complex);
  }
  return table;
}

RankedTables rank_tables(std::span<const std::vector<Rat>> tables) {
  RankedTables out;
  for (const auto& t : tables) out.values.insert(out.values.end(), t.begin(), t.end());
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  out.ranks.reserve(tables.size());
  for (const auto& t : tables) {
    std::vector<std::uint32_t> r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      r[i] = static_cast<std::uint32_t>(
          std::lower_bound(out.values.begin(), out.values.end(), t[i]) - out.values.begin());
    }
    out.ranks.push_back(std::move(r));
  }
  return out;
}

BestBijection best_bijection(const MaskedComplex& a, std::span<const std::uint32_t> rank_a,
                             const MaskedComplex& b, std::span<const std::uint32_t> rank_b,
                             std::uint32_t floor) {
  const std::size_t n = a.n;
  std::vector<std::uint8_t> perm(n), inverse(n);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});

  BestBijection best;
  bool have_best = false;
  do {
    for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = static_cast<std::uint8_t>(i);
    // Partial maxima are lower bounds for this bijection: abandon it as soon
    // as one reaches the running minimum.
    std::uint32_t worst = 0;
    bool pruned = false;
    for (Mask f : a.maximal) {
      worst = std::max(worst, rank_b[apply_permutation(f, perm)]);
      if (have_best && worst >= best.rank) { pruned = true; break; }
    }
    if (!pruned) {
      for (Mask g : b.maximal) {
        worst = std::max(worst, rank_a[apply_permutation(g, inverse)]);
        if (have_best && worst >= best.rank) { pruned = true; break; }
      }
    }
    if (!pruned) {
      best.rank = worst;
      best.perm = perm;
      have_best = true;
      if (best.rank <= floor) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace hausdorff::kernel
