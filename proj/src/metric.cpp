#include "hausdorff/metric.hpp"

#include <algorithm>
#include <string>

namespace hausdorff {

namespace {

bool spans_vertices(const Face& f, const Complex& k) { return f.is_subset_of(k.vertex_set()); }

}  // namespace

Law::Law(std::map<VertexId, Rat> weights) : weights_(std::move(weights)) {
  Rat total(0);
  bool any_positive = false;
  for (const auto& [v, w] : weights_) {
    if (w.sign() < 0) throw InvalidLaw("negative weight on vertex " + std::to_string(v));
    any_positive = any_positive || w.sign() > 0;
    total += w;
  }
  if (!any_positive) throw InvalidLaw("law has empty support");
  if (total != Rat(1)) throw InvalidLaw("weights sum to " + total.to_string() + ", expected 1/1");
}

Rat Law::weight(VertexId v) const {
  const auto it = weights_.find(v);
  return it == weights_.end() ? Rat(0) : it->second;
}

std::vector<VertexId> Law::support() const {
  std::vector<VertexId> s;
  for (const auto& [v, w] : weights_) {
    if (w.sign() > 0) s.push_back(v);
  }
  return s;
}

MinimaxProblem face_problem(const Face& f, const Complex& k) {
  std::vector<Face> forms;
  for (const auto& m : k.maximal_faces()) {
    std::vector<VertexId> common;
    std::set_intersection(m.vertices().begin(), m.vertices().end(), f.vertices().begin(),
                          f.vertices().end(), std::back_inserter(common));
    if (!common.empty()) forms.emplace_back(std::move(common));
  }
  return MinimaxProblem(std::vector<VertexId>(f.vertices().begin(), f.vertices().end()), std::move(forms));
}

Rat face_distance(const Face& f, const Complex& k) {
  if (!spans_vertices(f, k)) return Rat(1);
  if (k.contains(f)) return Rat(0);
  return Rat(1) - solve_minimax(face_problem(f, k)).value;
}

Rat face_distance_by_components(const Face& f, const Complex& k) {
  if (!spans_vertices(f, k)) return Rat(1);
  std::vector<Rat> parts;
  for (const auto& comp : connected_components(k)) {
    std::vector<VertexId> local;
    std::set_intersection(f.vertices().begin(), f.vertices().end(), comp.vertex_set().begin(),
                          comp.vertex_set().end(), std::back_inserter(local));
    if (local.empty()) continue;
    parts.push_back(solve_minimax(face_problem(Face(std::move(local)), comp)).value);
  }
  return Rat(1) - harmonic_combine(parts);
}

Rat directed_distance(const Complex& k1, const Complex& k2) {
  Rat worst(0);
  for (const auto& f : k1.maximal_faces()) {
    worst = std::max(worst, face_distance(f, k2));
    if (worst == Rat(1)) break;
  }
  return worst;
}

Rat distance(const Complex& k1, const Complex& k2) {
  if (!std::ranges::equal(k1.vertex_set(), k2.vertex_set())) return Rat(1);
  if (k1 == k2) return Rat(0);
  return std::max(directed_distance(k1, k2), directed_distance(k2, k1));
}

Rat law_distance(const Law& alpha, const Complex& k) {
  // Restricting a maximal face to the support keeps its mass, so the best
  // face inside the support is found among the maximal faces.
  Rat best(0);
  for (const auto& m : k.maximal_faces()) {
    Rat mass(0);
    for (VertexId v : m.vertices()) mass += alpha.weight(v);
    best = std::max(best, mass);
  }
  return Rat(1) - best;
}

std::optional<long> common_skeleton_dimension(const Complex& k1, const Complex& k2) {
  if (k1 == k2) return std::nullopt;
  if (!std::ranges::equal(k1.vertex_set(), k2.vertex_set())) return -1;
  const std::size_t top = std::max(k1.dimension(), k2.dimension());
  long n = 0;
  while (static_cast<std::size_t>(n + 1) <= top &&
         skeleton(k1, static_cast<std::size_t>(n + 1)) == skeleton(k2, static_cast<std::size_t>(n + 1))) {
    ++n;
  }
  return n;
}

std::optional<Rat> skeleton_disagreement_bound(const Complex& k1, const Complex& k2) {
  const auto n = common_skeleton_dimension(k1, k2);
  if (!n) return std::nullopt;
  return Rat(1, *n + 2);
}

}  // namespace hausdorff
