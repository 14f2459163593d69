#include "hausdorff/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace hausdorff {

namespace {

// Subset expansion is exponential in face size.
constexpr std::size_t kMaxExpandableFace = 24;

std::vector<Face> maximal_antichain(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<Face> kept;
  for (auto& f : faces) {
    const bool absorbed = std::any_of(kept.begin(), kept.end(),
                                      [&](const Face& m) { return f.is_subset_of(m); });
    if (!absorbed) kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<VertexId> sorted_intersection(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Calls fn(subset) for each `size`-element subset of `items`.
template <typename Fn>
void for_each_combination(std::span<const VertexId> items, std::size_t size, Fn&& fn) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = items.size();
  if (size > n) return;
  std::vector<VertexId> subset(size);
  while (true) {
    for (std::size_t i = 0; i < size; ++i) subset[i] = items[idx[i]];
    fn(subset);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_expandable(const Face& f) {
  if (f.size() > kMaxExpandableFace) {
    throw TooLarge("face of size " + std::to_string(f.size()) + " is too large to expand");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Face

Face::Face(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw EmptyInput("face must be nonempty");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Face::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const { return is_subset_of(other.vertices()); }

bool Face::is_subset_of(std::span<const VertexId> sorted_set) const {
  return std::includes(sorted_set.begin(), sorted_set.end(), vertices_.begin(), vertices_.end());
}

// ---------------------------------------------------------------------------
// Complex

Complex Complex::from_faces(std::span<const Face> faces) {
  if (faces.empty()) throw EmptyInput("complex needs at least one face");
  Complex k;
  k.maximal_ = maximal_antichain(std::vector<Face>(faces.begin(), faces.end()));
  for (const auto& f : k.maximal_) {
    k.vertices_.insert(k.vertices_.end(), f.vertices().begin(), f.vertices().end());
  }
  std::sort(k.vertices_.begin(), k.vertices_.end());
  k.vertices_.erase(std::unique(k.vertices_.begin(), k.vertices_.end()), k.vertices_.end());
  return k;
}

Complex Complex::from_faces(std::initializer_list<std::initializer_list<VertexId>> faces) {
  std::vector<Face> fs;
  fs.reserve(faces.size());
  for (auto f : faces) fs.emplace_back(f);
  return from_faces(fs);
}

std::size_t Complex::dimension() const {
  std::size_t d = 0;
  for (const auto& f : maximal_) d = std::max(d, f.dimension());
  return d;
}

bool Complex::contains(const Face& f) const {
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [&](const Face& m) { return f.is_subset_of(m); });
}

Complex complex_from_faces(std::span<const Face> faces) { return Complex::from_faces(faces); }

std::vector<Face> all_faces(const Complex& k) {
  std::set<Face> faces;
  for (const auto& m : k.maximal_faces()) {
    check_expandable(m);
    const auto verts = m.vertices();
    const std::uint64_t count = std::uint64_t{1} << verts.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
      std::vector<VertexId> sub;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) sub.push_back(verts[i]);
      }
      faces.emplace(std::move(sub));
    }
  }
  return {faces.begin(), faces.end()};
}

std::size_t face_count(const Complex& k) { return all_faces(k).size(); }

std::vector<std::size_t> f_vector(const Complex& k) {
  std::vector<std::size_t> counts(k.dimension() + 1, 0);
  for (const auto& f : all_faces(k)) ++counts[f.dimension()];
  return counts;
}

Complex skeleton(const Complex& k, std::size_t n) {
  std::vector<Face> faces;
  for (const auto& m : k.maximal_faces()) {
    if (m.size() <= n + 1) {
      faces.push_back(m);
    } else {
      for_each_combination(m.vertices(), n + 1,
                           [&](const std::vector<VertexId>& sub) { faces.emplace_back(sub); });
    }
  }
  return Complex::from_faces(faces);
}

Complex intersect(const Complex& a, const Complex& b) {
  std::vector<Face> faces;
  for (const auto& ma : a.maximal_faces()) {
    for (const auto& mb : b.maximal_faces()) {
      auto common = sorted_intersection(ma.vertices(), mb.vertices());
      if (!common.empty()) faces.emplace_back(std::move(common));
    }
  }
  if (faces.empty()) throw EmptyIntersection("complexes share no face");
  return Complex::from_faces(faces);
}

std::vector<Complex> connected_components(const Complex& k) {
  const auto verts = k.vertex_set();
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index_of = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (const auto& m : k.maximal_faces()) {
    const std::size_t root = find(index_of(m.vertices()[0]));
    for (VertexId v : m.vertices()) parent[find(index_of(v))] = root;
  }
  // Roots in order of first appearance along the sorted vertex list.
  std::map<std::size_t, std::size_t> slot_of_root;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    slot_of_root.try_emplace(find(i), slot_of_root.size());
  }
  std::vector<std::vector<Face>> groups(slot_of_root.size());
  for (const auto& m : k.maximal_faces()) {
    groups[slot_of_root.at(find(index_of(m.vertices()[0])))].push_back(m);
  }
  std::vector<Complex> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(Complex::from_faces(g));
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    return a.vertex_set()[0] < b.vertex_set()[0];
  });
  return out;
}

// ---------------------------------------------------------------------------
// Barycentric subdivision

FaceEncoding::FaceEncoding(std::vector<Face> faces) : faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

FaceEncoding FaceEncoding::of(std::span<const Complex> complexes) {
  std::vector<Face> faces;
  for (const auto& k : complexes) {
    auto fs = all_faces(k);
    faces.insert(faces.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
  }
  return FaceEncoding(std::move(faces));
}

VertexId FaceEncoding::id_of(const Face& f) const {
  const auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
  if (it == faces_.end() || *it != f) throw UndefinedVertex("face missing from encoding");
  return static_cast<VertexId>(it - faces_.begin());
}

const Face& FaceEncoding::face_of(VertexId id) const {
  if (id >= faces_.size()) throw UndefinedVertex("no face with id " + std::to_string(id));
  return faces_[id];
}

Complex barycentric_subdivision(const Complex& k, const FaceEncoding& encoding) {
  // Maximal chains are the full flags {v1} < {v1,v2} < ... < M of each
  // maximal face M, one per ordering of M's vertices.
  std::vector<Face> chains;
  for (const auto& m : k.maximal_faces()) {
    check_expandable(m);
    std::vector<VertexId> order(m.vertices().begin(), m.vertices().end());
    do {
      std::vector<VertexId> chain;
      chain.reserve(order.size());
      for (std::size_t len = 1; len <= order.size(); ++len) {
        chain.push_back(encoding.id_of(Face(std::vector<VertexId>(order.begin(), order.begin() + len))));
      }
      chains.emplace_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return Complex::from_faces(chains);
}

Subdivision barycentric_subdivision(const Complex& k) {
  FaceEncoding encoding(all_faces(k));
  Complex sd = barycentric_subdivision(k, encoding);
  return Subdivision{std::move(sd), std::move(encoding)};
}

// ---------------------------------------------------------------------------

Complex apply_vertex_map(const Complex& k, const VertexMap& sigma) {
  std::set<VertexId> images;
  for (VertexId v : k.vertex_set()) {
    const auto it = sigma.find(v);
    if (it == sigma.end()) throw UndefinedVertex("vertex " + std::to_string(v) + " has no image");
    if (!images.insert(it->second).second) {
      throw NotInjective("vertex map sends two vertices to " + std::to_string(it->second));
    }
  }
  std::vector<Face> faces;
  faces.reserve(k.maximal_faces().size());
  for (const auto& m : k.maximal_faces()) {
    std::vector<VertexId> img;
    img.reserve(m.size());
    for (VertexId v : m.vertices()) img.push_back(sigma.at(v));
    faces.emplace_back(std::move(img));
  }
  return Complex::from_faces(faces);
}

}  // namespace hausdorff
