// Finite abstract simplicial complexes.
//
// A Complex is stored through its maximal faces (an antichain under
// inclusion); the full downward-closed family is expanded on demand.
// Values are immutable once built and safe to share across threads.

#ifndef HAUSDORFF_COMPLEX_HPP
#define HAUSDORFF_COMPLEX_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "hausdorff/errors.hpp"

namespace hausdorff {

using VertexId = std::uint64_t;

/// A simplex: nonempty, strictly increasing list of vertex labels.
class Face {
 public:
  /// Sorts and deduplicates. Throws EmptyInput on an empty list.
  explicit Face(std::vector<VertexId> vertices);
  Face(std::initializer_list<VertexId> vertices) : Face(std::vector<VertexId>(vertices)) {}

  std::span<const VertexId> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t dimension() const { return vertices_.size() - 1; }

  bool contains(VertexId v) const;
  bool is_subset_of(const Face& other) const;
  bool is_subset_of(std::span<const VertexId> sorted_set) const;

  friend bool operator==(const Face&, const Face&) = default;
  /// Lexicographic on the sorted vertex list.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  std::vector<VertexId> vertices_;
};

class Complex {
 public:
  /// Smallest complex containing every face in `faces`. Throws EmptyInput
  /// if `faces` is empty.
  static Complex from_faces(std::span<const Face> faces);
  static Complex from_faces(std::initializer_list<std::initializer_list<VertexId>> faces);

  /// Maximal faces, sorted lexicographically.
  std::span<const Face> maximal_faces() const { return maximal_; }
  /// Union of all faces, sorted.
  std::span<const VertexId> vertex_set() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  /// Largest face cardinality minus one.
  std::size_t dimension() const;
  bool contains(const Face& f) const;

  /// Same face family.
  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  Complex() = default;
  std::vector<Face> maximal_;
  std::vector<VertexId> vertices_;
};

Complex complex_from_faces(std::span<const Face> faces);

/// Every face of the downward closure, sorted lexicographically.
std::vector<Face> all_faces(const Complex& k);
std::size_t face_count(const Complex& k);
/// Entry d counts the faces of dimension d.
std::vector<std::size_t> f_vector(const Complex& k);

/// Faces of cardinality at most n + 1.
Complex skeleton(const Complex& k, std::size_t n);

/// Complex of the faces common to `a` and `b`. Throws EmptyIntersection.
Complex intersect(const Complex& a, const Complex& b);

/// Components ordered by their smallest vertex.
std::vector<Complex> connected_components(const Complex& k);

/// Maps faces to consecutive fresh vertex ids (position in a lexicographically
/// sorted face list). Shared encodings make subdivisions of different
/// complexes comparable.
class FaceEncoding {
 public:
  explicit FaceEncoding(std::vector<Face> faces);
  /// Encoding of every face of every given complex.
  static FaceEncoding of(std::span<const Complex> complexes);

  VertexId id_of(const Face& f) const;  // throws UndefinedVertex
  const Face& face_of(VertexId id) const;
  std::span<const Face> faces() const { return faces_; }

 private:
  std::vector<Face> faces_;
};

struct Subdivision {
  Complex complex;
  FaceEncoding encoding;
};

/// Complex of chains of faces under strict inclusion, with vertex ids taken
/// from the complex's own face encoding.
Subdivision barycentric_subdivision(const Complex& k);
Complex barycentric_subdivision(const Complex& k, const FaceEncoding& encoding);

using VertexMap = std::map<VertexId, VertexId>;

/// Relabels vertices. Throws UndefinedVertex if a vertex of `k` is missing
/// from `sigma`, NotInjective if two vertices of `k` share an image.
Complex apply_vertex_map(const Complex& k, const VertexMap& sigma);

}  // namespace hausdorff

#endif  // HAUSDORFF_COMPLEX_HPP
