// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails.
//
//   acceptance [--extended] [--only=N]

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hausdorff/iso.hpp"
#include "hausdorff/metric.hpp"
#include "hausdorff/minimax.hpp"
#include "support/generators.hpp"
#include "support/reference_tables.hpp"

using namespace hausdorff;
using hausdorff::testing::Rng;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Complex full_simplex(std::size_t n) {
  std::vector<VertexId> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(i);
  return Complex::from_faces(std::vector<Face>{Face(v)});
}

Complex points(std::size_t n) {
  std::vector<Face> fs;
  for (VertexId i = 0; i < n; ++i) fs.push_back(Face{i});
  return Complex::from_faces(fs);
}

std::size_t index_of(const std::vector<CanonicalComplex>& classes, const Complex& k) {
  const auto enc = canonical_form(k).encoding;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].encoding == enc) return i;
  }
  return classes.size();
}

void match_table(Outcome& o, std::size_t n, const std::vector<testing::FaceList>& reps,
                 const std::vector<std::string>& upper) {
  const auto classes = enumerate_classes(n);
  o.expect(classes.size() == reps.size(), "class count " + std::to_string(classes.size()));
  if (!o.ok) return;
  const auto m = class_distance_matrix(classes);
  const auto expected = testing::expand_upper(upper);
  std::vector<std::size_t> where;
  std::set<std::size_t> seen;
  for (const auto& r : reps) {
    where.push_back(index_of(classes, testing::complex_of(r)));
    seen.insert(where.back());
  }
  o.expect(seen.size() == reps.size() && !seen.contains(classes.size()), "representatives do not cover the classes");
  if (!o.ok) return;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const Rat& got = m.at(where[i], where[j]);
      o.expect(got == expected[i][j], "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          ") = " + got.to_string() + ", expected " + expected[i][j].to_string());
    }
  }
}

std::set<Rat> off_diagonal_values(const DistanceMatrix& m) {
  std::set<Rat> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) out.insert(m.at(i, j));
  }
  return out;
}

std::string join(const std::set<Rat>& values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : " ") + v.to_string();
  return s;
}

Outcome ac1() {
  Outcome o;
  match_table(o, 3, testing::kS3Representatives, testing::kS3UpperTriangle);
  return o;
}

Outcome ac2() {
  Outcome o;
  match_table(o, 4, testing::kS4Representatives, testing::kS4UpperTriangle);
  const auto classes = enumerate_classes(4);
  const auto values = off_diagonal_values(class_distance_matrix(classes));
  const std::set<Rat> want{Rat(1, 4), Rat(1, 3), Rat(2, 5), Rat(1, 2), Rat(3, 5), Rat(2, 3), Rat(3, 4)};
  o.expect(values == want, "value set {" + join(values) + "}");
  o.expect(class_distance(points(4), full_simplex(4)).value == Rat(3, 4), "points vs solid tetrahedron");
  o.expect(class_distance(skeleton(full_simplex(4), 2), full_simplex(4)).value == Rat(1, 4),
           "hollow vs solid tetrahedron");
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto classes = enumerate_classes(5);
  o.expect(classes.size() == 180, "class count " + std::to_string(classes.size()));
  if (!o.ok) return o;
  const auto values = off_diagonal_values(class_distance_matrix(classes));
  std::set<Rat> want;
  for (long b = 1; b <= 5; ++b) {
    for (long a = 1; a < b; ++a) want.insert(Rat(a, b));
  }
  for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 7}, {3, 8}, {3, 7}, {4, 9}, {5, 9}, {4, 7}, {5, 8}, {5, 7}})
    want.insert(Rat(a, b));
  // Off-diagonal entries are never zero, so 0 is added from the diagonal.
  std::set<Rat> got = values;
  got.insert(Rat(0));
  want.insert(Rat(0));
  o.expect(got == want, "value set {" + join(got) + "}");
  return o;
}

Outcome ac4() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto full = full_simplex(n);
    const long ln = static_cast<long>(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const auto truncated = skeleton(full, k - 1);
      o.expect(distance(full, truncated) == Rat(1) - Rat(static_cast<long>(k), ln),
               "truncated simplex n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    o.expect(directed_distance(full, points(n)) == Rat(ln - 1, ln), "simplex vs points n=" + std::to_string(n));
    for (std::size_t r = 1; r <= n; ++r) {
      std::vector<Face> forms;
      for (const auto& f : all_faces(full)) {
        if (f.size() == r) forms.push_back(f);
      }
      std::vector<VertexId> ground(full.vertex_set().begin(), full.vertex_set().end());
      const auto value = solve_minimax(MinimaxProblem(ground, forms)).value;
      o.expect(value == Rat(static_cast<long>(r), ln), "r-subsets n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  Rng rng(5);
  for (int trial = 0; trial < 600; ++trial) {
    const auto p = testing::random_problem(rng, 6, 7);
    const Rat a = solve_minimax(p).value;
    const Rat b = oracle_minimax(p);
    o.expect(a == b, "trial " + std::to_string(trial) + ": " + a.to_string() + " vs " + b.to_string());
  }
  return o;
}

Rat directed_over_all_faces(const Complex& a, const Complex& b) {
  Rat worst(0);
  for (const auto& f : all_faces(a)) worst = std::max(worst, face_distance(f, b));
  return worst;
}

Outcome ac6() {
  Outcome o;
  const auto classes = enumerate_classes(4);
  const auto m = class_distance_matrix(classes);
  std::size_t triangles = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    o.expect(m.at(i, i) == Rat(0), "diagonal");
    for (std::size_t j = 0; j < m.size(); ++j) {
      o.expect(m.at(i, j) == m.at(j, i), "symmetry");
      o.expect(i == j || m.at(i, j).sign() > 0, "separation");
      for (std::size_t k = 0; k < m.size(); ++k) {
        o.expect(m.at(i, k) <= m.at(i, j) + m.at(j, k), "triangle inequality");
        if (i < j && j < k) ++triangles;
      }
    }
  }
  o.expect(triangles == 1140, "triangle count " + std::to_string(triangles));

  Rng rng(6);
  const int trials = 120;
  for (int t = 0; t < trials; ++t) {
    const auto a = testing::random_spanning_complex(rng, 5, 4, 4);
    const auto b = testing::random_spanning_complex(rng, 5, 4, 4);
    const auto k = testing::random_complex(rng, 5, 3, 4);
    const Rat dab = distance(a, b);

    try {
      o.expect(distance(intersect(a, k), intersect(b, k)) <= dab, "intersection contraction");
    } catch (const EmptyIntersection&) {
    }
    for (std::size_t n = 0; n <= 4; ++n) {
      o.expect(distance(skeleton(a, n), skeleton(b, n)) <= dab, "skeleton Lipschitz");
    }
    for (const auto& f : all_faces(a)) {
      o.expect(face_distance_by_components(f, b) == face_distance(f, b), "component route");
    }
    o.expect(directed_distance(a, b) == directed_over_all_faces(a, b), "maximal-face reduction");
    const auto sigma = testing::random_relabeling(rng, a, 50);
    o.expect(distance(apply_vertex_map(a, sigma), apply_vertex_map(b, sigma)) == dab, "label invariance");
  }

  int separated = 0;
  while (separated < 100) {
    const auto a = testing::random_complex(rng, 4, 3, 3);
    const auto b = testing::random_complex(rng, 4, 3, 3);
    if (a == b) continue;
    const std::vector<Complex> both{a, b};
    const auto enc = FaceEncoding::of(both);
    o.expect(distance(barycentric_subdivision(a, enc), barycentric_subdivision(b, enc)) == Rat(1), "sd separation");
    ++separated;
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  namespace fs = std::filesystem;
  const std::regex forbidden(R"(\b(float|double|cmath|math\.h|strtod|stod|stof|atof|sqrt|pow)\b)");
  std::size_t scanned = 0;
  for (const char* dir : {"src", "include"}) {
    for (const auto& entry : fs::recursive_directory_iterator(fs::path(HAUSDORFF_SOURCE_DIR) / dir)) {
      if (!entry.is_regular_file()) continue;
      std::ifstream in(entry.path());
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        o.expect(!std::regex_search(line, forbidden),
                 entry.path().filename().string() + ":" + std::to_string(lineno) + " uses floating point");
      }
      ++scanned;
    }
  }
  o.expect(scanned > 0, "no sources found");

  const auto m = class_distance_matrix(enumerate_classes(4));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) o.expect(m.at(i, j).is_reduced(), "unreduced matrix entry");
  }
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = testing::random_complex(rng, 6, 4, 4);
    const auto b = testing::random_complex(rng, 6, 4, 4);
    o.expect(distance(a, b).is_reduced(), "unreduced distance");
    o.expect(solve_minimax(testing::random_problem(rng, 6, 6)).value.is_reduced(), "unreduced minimax value");
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  bool extended;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      extended = true;
    } else if (std::strncmp(argv[i], "--only=", 7) == 0) {
      only = std::atoi(argv[i] + 7);
    } else {
      std::cerr << "usage: acceptance [--extended] [--only=N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "3-vertex class matrix", 1, false, ac1},
      {2, "4-vertex class matrix", 60, false, ac2},
      {3, "5-vertex classes and value set", 3600, true, ac3},
      {4, "closed forms", 10, false, ac4},
      {5, "simplex vs vertex enumeration", 600, false, ac5},
      {6, "property suites", 600, false, ac6},
      {7, "exact reduced rationals", 600, false, ac7},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    if (c.extended && !extended) {
      std::cout << "SKIP AC" << c.id << " " << c.name << " (needs --extended)\n";
      continue;
    }
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.expect(secs < c.budget_seconds, "over time budget");
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " AC" << c.id << " " << c.name << " (" << std::fixed;
    line.precision(3);
    line << secs << " s)";
    if (!o.ok) line << ": " << o.detail;
    std::cout << line.str() << "\n";
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
