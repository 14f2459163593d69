#include "doctest.h"
#include "hausdorff/minimax.hpp"
#include "support/generators.hpp"

using namespace hausdorff;
using hausdorff::testing::Rng;

namespace {

std::vector<Face> r_subsets(std::size_t n, std::size_t r) {
  std::vector<Face> out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != r) continue;
    std::vector<VertexId> f;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) f.push_back(i + 1);
    }
    out.emplace_back(std::move(f));
  }
  return out;
}

std::vector<VertexId> iota_ids(std::size_t n) {
  std::vector<VertexId> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

void check_witness(const MinimaxProblem& p, const MinimaxSolution& s) {
  Rat total(0);
  for (const auto& [v, w] : s.witness) {
    CHECK(w.sign() >= 0);
    total += w;
  }
  CHECK(total == Rat(1));
  Rat worst(0);
  for (const auto& g : p.face_forms()) {
    Rat phi(0);
    for (VertexId v : g.vertices()) phi += s.witness.at(v);
    worst = std::max(worst, phi);
  }
  CHECK(worst == s.value);
}

}  // namespace

TEST_CASE("Rat arithmetic and formatting") {
  CHECK(Rat(0).to_string() == "0/1");
  CHECK(Rat(1).to_string() == "1/1");
  CHECK(Rat(6, -4).to_string() == "-3/2");
  CHECK(Rat::parse("4/6") == Rat(2, 3));
  CHECK(Rat::parse(" 5 ") == Rat(5));
  CHECK(Rat::parse("-2/4").to_string() == "-1/2");
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 3) / Rat(4, 3) == Rat(1, 2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(2, 4).is_reduced());
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("MinimaxProblem validation") {
  CHECK_THROWS_AS(MinimaxProblem({}, {}), EmptyInput);
  CHECK_THROWS_AS(MinimaxProblem({1, 2}, {Face{3}}), std::invalid_argument);
  const MinimaxProblem p({1, 2, 3}, {Face{1}, Face{1, 2}, Face{1, 2}});
  CHECK(p.face_forms().size() == 1);
}

TEST_CASE("solve_minimax examples") {
  SUBCASE("hollow triangle forms") {
    const MinimaxProblem p({1, 2, 3}, {Face{1, 2}, Face{1, 3}, Face{2, 3}});
    const auto s = solve_minimax(p);
    CHECK(s.value == Rat(2, 3));
    CHECK(s.witness.at(1) == Rat(1, 3));
    CHECK(s.witness.at(2) == Rat(1, 3));
    CHECK(s.witness.at(3) == Rat(1, 3));
    check_witness(p, s);
  }
  SUBCASE("all 2-subsets of 4") {
    const MinimaxProblem p(iota_ids(4), r_subsets(4, 2));
    CHECK(solve_minimax(p).value == Rat(1, 2));
  }
  SUBCASE("edge plus point") {
    const MinimaxProblem p({1, 2, 3}, {Face{1, 2}, Face{3}});
    CHECK(oracle_minimax(p) == Rat(1, 2));
    CHECK(solve_minimax(p).value == Rat(1, 2));
    check_witness(p, solve_minimax(p));
  }
  SUBCASE("empty forms") {
    const MinimaxProblem p({4, 5}, {});
    const auto s = solve_minimax(p);
    CHECK(s.value == Rat(0));
    check_witness(p, s);
  }
  SUBCASE("ground set is a form") {
    const MinimaxProblem p({1, 2, 3}, {Face{1, 2, 3}});
    CHECK(solve_minimax(p).value == Rat(1));
  }
}

TEST_CASE("oracle_minimax examples") {
  CHECK(oracle_minimax(MinimaxProblem({1, 2, 3}, {Face{1, 2}, Face{1, 3}, Face{2, 3}})) == Rat(2, 3));
  CHECK(oracle_minimax(MinimaxProblem(iota_ids(4), r_subsets(4, 2))) == Rat(1, 2));
  CHECK(oracle_minimax(MinimaxProblem({1, 2, 3}, {Face{1, 2, 3}})) == Rat(1));
  CHECK(oracle_minimax(MinimaxProblem({1, 2, 3}, {})) == Rat(0));
  CHECK_THROWS_AS(oracle_minimax(MinimaxProblem(iota_ids(8), {Face{1}})), TooLarge);
}

TEST_CASE("r-subsets give r/n") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      const MinimaxProblem p(iota_ids(n), r_subsets(n, r));
      const auto s = solve_minimax(p);
      CHECK(s.value == Rat(static_cast<long>(r), static_cast<long>(n)));
      check_witness(p, s);
    }
  }
}

TEST_CASE("simplex agrees with vertex enumeration") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_problem(rng, 6, 6);
    const auto s = solve_minimax(p);
    CHECK(s.value == oracle_minimax(p));
    check_witness(p, s);
  }
}

TEST_CASE("value range and full-form characterization") {
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_problem(rng, 5, 5);
    const Rat v = solve_minimax(p).value;
    CHECK(v.sign() >= 0);
    CHECK(v <= Rat(1));
    const bool has_full = std::any_of(p.face_forms().begin(), p.face_forms().end(),
                                      [&](const Face& g) { return g.size() == p.ground_set().size(); });
    CHECK((v == Rat(1)) == has_full);
    CHECK((oracle_minimax(p) == Rat(1)) == has_full);
  }
}

TEST_CASE("adding a form never decreases the value") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testing::random_problem(rng, 6, 4);
    std::vector<Face> forms(p.face_forms().begin(), p.face_forms().end());
    const auto extra = testing::random_subset(rng, p.ground_set().size(), 3);
    std::vector<VertexId> g;
    for (auto i : extra) g.push_back(p.ground_set()[i]);
    forms.emplace_back(std::move(g));
    const MinimaxProblem bigger(std::vector<VertexId>(p.ground_set().begin(), p.ground_set().end()), forms);
    CHECK(solve_minimax(bigger).value >= solve_minimax(p).value);
  }
}

TEST_CASE("relabeling the ground set leaves the value unchanged") {
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testing::random_problem(rng, 6, 5);
    const auto ground = p.ground_set();
    std::vector<VertexId> targets;
    for (std::size_t i = 0; i < ground.size(); ++i) targets.push_back(1000 - 5 * i);
    std::shuffle(targets.begin(), targets.end(), rng);
    VertexMap sigma;
    for (std::size_t i = 0; i < ground.size(); ++i) sigma[ground[i]] = targets[i];
    std::vector<Face> forms;
    for (const auto& g : p.face_forms()) {
      std::vector<VertexId> img;
      for (VertexId v : g.vertices()) img.push_back(sigma.at(v));
      forms.emplace_back(std::move(img));
    }
    const MinimaxProblem q(targets, forms);
    CHECK(solve_minimax(q).value == solve_minimax(p).value);
  }
}

TEST_CASE("harmonic_combine") {
  const std::vector<Rat> ones{Rat(1), Rat(1)};
  CHECK(harmonic_combine(ones) == Rat(1, 2));
  const std::vector<Rat> single{Rat(3, 7)};
  CHECK(harmonic_combine(single) == Rat(3, 7));
  const std::vector<Rat> with_zero{Rat(2, 3), Rat(1, 2), Rat(0)};
  CHECK(harmonic_combine(with_zero) == Rat(0));
  const std::vector<Rat> ab{Rat(2, 3), Rat(1, 5)};
  const std::vector<Rat> ba{Rat(1, 5), Rat(2, 3)};
  CHECK(harmonic_combine(ab) == harmonic_combine(ba));
  const std::vector<Rat> twice{Rat(3, 4), Rat(3, 4)};
  CHECK(harmonic_combine(twice) == Rat(3, 8));
  CHECK_THROWS_AS(harmonic_combine(std::vector<Rat>{}), EmptyInput);
}
