#include "hausdorff/iso.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hausdorff/iso_kernel.hpp"

namespace hausdorff {

using kernel::Mask;
using kernel::MaskedComplex;

namespace {

// Sorted vertex list of a mask as a string of small integers, so that string
// order matches lexicographic order of vertex lists.
std::string face_key(Mask m) {
  std::string s;
  for (char i = 0; m; ++i, m >>= 1) {
    if (m & 1U) s.push_back(i);
  }
  return s;
}

std::string serialize(const Complex& k) {
  std::string out;
  for (const auto& f : k.maximal_faces()) {
    out += '[';
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(f.vertices()[i]);
    }
    out += ']';
  }
  return out;
}

void check_vertex_bound(const Complex& k, std::size_t max_vertices) {
  const std::size_t cap = std::min(max_vertices, kMaxIsoVertices);
  if (k.vertex_count() > cap) {
    throw TooLarge("complex has " + std::to_string(k.vertex_count()) +
                   " vertices; isomorphism search is capped at " + std::to_string(cap));
  }
}

CanonicalComplex canonicalize_masked(const MaskedComplex& k) {
  std::vector<std::uint8_t> perm(k.n);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  std::vector<std::string> best, current(k.maximal.size());
  std::vector<std::uint8_t> best_perm;
  do {
    for (std::size_t i = 0; i < k.maximal.size(); ++i) {
      current[i] = face_key(kernel::apply_permutation(k.maximal[i], perm));
    }
    std::sort(current.begin(), current.end());
    if (best.empty() || current < best) {
      best = current;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  MaskedComplex relabeled{k.n, {}};
  for (Mask m : k.maximal) relabeled.maximal.push_back(kernel::apply_permutation(m, best_perm));
  Complex c = kernel::from_masked(relabeled);
  std::string enc = serialize(c);
  return CanonicalComplex{std::move(c), std::move(enc)};
}

// Maximal faces of the downward-closed family `in` (indexed by mask).
MaskedComplex maximal_of(std::size_t n, const std::vector<bool>& in) {
  MaskedComplex k{n, {}};
  const Mask count = Mask{1} << n;
  for (Mask m = 1; m < count; ++m) {
    if (!in[m]) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      const Mask up = m | (Mask{1} << v);
      if (up != m && in[up]) maximal = false;
    }
    if (maximal) k.maximal.push_back(m);
  }
  return k;
}

std::vector<std::uint8_t> bits_of(Mask m) {
  std::vector<std::uint8_t> out;
  for (std::uint8_t i = 0; m; ++i, m >>= 1) {
    if (m & 1U) out.push_back(i);
  }
  return out;
}

void pad_witness(const Complex& k1, const Complex& k2, VertexMap& witness) {
  // Different vertex counts: any injection gives distance 1.
  const auto v1 = k1.vertex_set();
  const auto v2 = k2.vertex_set();
  VertexId fresh = v2.back() + 1;
  for (std::size_t i = 0; i < v1.size(); ++i) {
    witness[v1[i]] = i < v2.size() ? v2[i] : fresh++;
  }
}

}  // namespace

CanonicalComplex canonical_form(const Complex& k, std::size_t max_vertices) {
  check_vertex_bound(k, max_vertices);
  return canonicalize_masked(kernel::to_masked(k));
}

std::vector<CanonicalComplex> enumerate_classes(std::size_t n) {
  if (n == 0) throw EmptyInput("enumerate_classes needs n >= 1");
  if (n > kMaxEnumerateVertices) {
    throw TooLarge("class enumeration is capped at " + std::to_string(kMaxEnumerateVertices) + " vertices");
  }
  const Mask count = Mask{1} << n;
  // Non-singleton subsets by increasing size; each may be added only when
  // all its facets are present, which keeps every family downward closed.
  std::vector<Mask> order;
  for (Mask m = 1; m < count; ++m) {
    if (std::popcount(m) >= 2) order.push_back(m);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

  std::map<std::string, CanonicalComplex> classes;
  std::vector<bool> in(count, false);
  for (std::size_t v = 0; v < n; ++v) in[Mask{1} << v] = true;

  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      auto c = canonicalize_masked(maximal_of(n, in));
      classes.try_emplace(c.encoding, std::move(c));
      return;
    }
    self(self, pos + 1);
    const Mask m = order[pos];
    bool facets_present = true;
    for (auto v : bits_of(m)) {
      if (!in[m & ~(Mask{1} << v)]) { facets_present = false; break; }
    }
    if (facets_present) {
      in[m] = true;
      self(self, pos + 1);
      in[m] = false;
    }
  };
  recurse(recurse, 0);

  std::vector<std::pair<std::size_t, CanonicalComplex>> keyed;
  for (auto& [enc, c] : classes) keyed.emplace_back(face_count(c.complex), std::move(c));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return std::ranges::lexicographical_compare(a.second.complex.maximal_faces(),
                                                b.second.complex.maximal_faces());
  });
  std::vector<CanonicalComplex> out;
  out.reserve(keyed.size());
  for (auto& [fc, c] : keyed) out.push_back(std::move(c));
  return out;
}

ClassDistanceResult class_distance(const Complex& k1, const Complex& k2, std::size_t max_vertices) {
  check_vertex_bound(k1, max_vertices);
  check_vertex_bound(k2, max_vertices);
  ClassDistanceResult result;
  if (k1.vertex_count() != k2.vertex_count()) {
    result.value = Rat(1);
    pad_witness(k1, k2, result.witness);
    return result;
  }
  const MaskedComplex a = kernel::to_masked(k1);
  const MaskedComplex b = kernel::to_masked(k2);
  const std::vector<std::vector<Rat>> tables{kernel::face_distance_table(a), kernel::face_distance_table(b)};
  const auto ranked = kernel::rank_tables(tables);
  const auto best = kernel::best_bijection(a, ranked.ranks[0], b, ranked.ranks[1]);
  result.value = ranked.values[best.rank];
  const auto v1 = k1.vertex_set();
  const auto v2 = k2.vertex_set();
  for (std::size_t i = 0; i < v1.size(); ++i) result.witness[v1[i]] = v2[best.perm[i]];
  return result;
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<Rat> cells)
    : labels_(std::move(labels)), cells_(std::move(cells)) {
  if (cells_.size() != labels_.size() * labels_.size()) {
    throw std::invalid_argument("distance matrix cells do not match label count");
  }
}

namespace {

std::vector<std::string> labels_of(std::span<const CanonicalComplex> classes) {
  std::vector<std::string> labels;
  labels.reserve(classes.size());
  for (const auto& c : classes) labels.push_back(c.encoding);
  return labels;
}

}  // namespace

DistanceMatrix class_distance_matrix(std::span<const CanonicalComplex> classes, int jobs) {
  const std::size_t n = classes.size();
#ifdef _OPENMP
  const int team = jobs > 0 ? jobs : omp_get_max_threads();
#else
  [[maybe_unused]] const int team = 1;
  (void)jobs;
#endif

  std::vector<MaskedComplex> masked(n);
  std::vector<std::vector<Rat>> tables(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    masked[i] = kernel::to_masked(classes[i].complex);
    tables[i] = kernel::face_distance_table(masked[i]);
  }
  const auto ranked = kernel::rank_tables(tables);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  // Rank per cell, merged by index; value 1 marks differing vertex counts.
  std::vector<std::int64_t> cell_rank(n * n, 0);
  const auto pair_count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(team)
  for (std::ptrdiff_t p = 0; p < pair_count; ++p) {
    const auto [i, j] = pairs[p];
    std::int64_t r = -1;
    if (masked[i].n == masked[j].n) {
      r = kernel::best_bijection(masked[i], ranked.ranks[i], masked[j], ranked.ranks[j]).rank;
    }
    cell_rank[i * n + j] = r;
    cell_rank[j * n + i] = r;
  }

  std::vector<Rat> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto r = cell_rank[i * n + j];
      cells[i * n + j] = r < 0 ? Rat(1) : ranked.values[static_cast<std::size_t>(r)];
    }
  }
  return DistanceMatrix(labels_of(classes), std::move(cells));
}

DistanceMatrix class_distance_matrix_serial(std::span<const CanonicalComplex> classes) {
  const std::size_t n = classes.size();
  std::vector<Rat> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat d = class_distance(classes[i].complex, classes[j].complex).value;
      cells[j * n + i] = d;
      cells[i * n + j] = std::move(d);
    }
  }
  return DistanceMatrix(labels_of(classes), std::move(cells));
}

}  // namespace hausdorff
