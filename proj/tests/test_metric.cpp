#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "qlie/metric.hpp"
#include "qlie/soliton.hpp"

using namespace qlie;

namespace {

DiagonalMetric random_metric(const QuiverLieAlgebra& alg,
                             std::mt19937_64& rng) {
  DiagonalMetric g;
  for (int i = 0; i < alg.dim(); ++i) {
    g.norms_squared.push_back(
        rat(1 + bounded_rand(rng, 9), 1 + bounded_rand(rng, 9)));
  }
  return g;
}

// numerical evaluation of the full curvature formula on the orthonormal
// basis, square roots and all; independent of the rational reformulation
std::vector<std::vector<double>> float_ricci(const QuiverLieAlgebra& alg,
                                             const DiagonalMetric& g) {
  int n = alg.dim();
  std::vector<double> norm(n);
  for (int i = 0; i < n; ++i) {
    norm[i] = std::sqrt(rat_double(g.norms_squared[i]));
  }
  // pairing[i][j] = (k, <[xb_i, xb_j], xb_k>)
  auto pairing = [&](int i, int j) -> std::pair<int, double> {
    if (i == j) return {-1, 0.0};
    auto b = alg.bracket(i, j);
    if (!b) return {-1, 0.0};
    return {b->index, b->sign * norm[b->index] / (norm[i] * norm[j])};
  };
  std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      double first = 0.0, second = 0.0;
      for (int i = 0; i < n; ++i) {
        auto [kp, cp] = pairing(p, i);
        auto [kq, cq] = pairing(q, i);
        if (kp >= 0 && kp == kq) first += cp * cq;
        for (int j = 0; j < n; ++j) {
          auto [k, c] = pairing(i, j);
          if (k == p && k == q) second += c * c;
        }
      }
      r[p][q] = -0.5 * first + 0.25 * second;
    }
  }
  return r;
}

}  // namespace

TEST_CASE("soliton metric curvature on the smallest example") {
  QuiverLieAlgebra alg = build_algebra(line2());
  DiagonalMetric g{{rat(3, 2), rat(1), rat(1)}};
  RicciResult res = ricci_form(alg, g);
  REQUIRE(res.operator_diagonal());
  CHECK(res.diagonal ==
        std::vector<Rat>{rat(-1, 3), rat(-1, 3), rat(1, 3)});
  CHECK(ricci_diagonal_nice(alg, g) == res.diagonal);
}

TEST_CASE("all-ones metric on the smallest example") {
  QuiverLieAlgebra alg = build_algebra(line2());
  RicciResult res = ricci_form(alg, ones_metric(3));
  REQUIRE(res.operator_diagonal());
  CHECK(res.diagonal ==
        std::vector<Rat>{rat(-1, 2), rat(-1, 2), rat(1, 2)});
}

TEST_CASE("abelian algebras are Ricci flat") {
  QuiverLieAlgebra alg = build_algebra(disjoint2());
  DiagonalMetric g{{rat(7, 3), rat(5)}};
  RicciResult res = ricci_form(alg, g);
  CHECK(res.diagonal == std::vector<Rat>{rat(0), rat(0)});
  for (const auto& row : res.form) {
    for (const Rat& v : row) CHECK(v == 0);
  }
}

TEST_CASE("metric validation") {
  QuiverLieAlgebra alg = build_algebra(line2());
  CHECK_THROWS_AS(ricci_form(alg, ones_metric(2)), DimensionMismatch);
  DiagonalMetric bad{{rat(1), rat(0), rat(1)}};
  CHECK_THROWS_AS(ricci_form(alg, bad), NonPositiveNorm);
  CHECK_THROWS_AS(ricci_diagonal_nice(alg, bad), NonPositiveNorm);
}

TEST_CASE("the two curvature routes agree on random metrics") {
  std::mt19937_64 rng(2024);
  for (unsigned long long seed = 1; seed <= 40; ++seed) {
    Quiver q = sample_quiver(seed, 2 + seed % 5, 1 + seed % 9);
    CAPTURE(serialize(q));
    QuiverLieAlgebra alg = build_algebra(q);
    DiagonalMetric g = random_metric(alg, rng);
    RicciResult res = ricci_form(alg, g);
    // symmetric form, diagonal operator
    for (int i = 0; i < alg.dim(); ++i) {
      for (int j = 0; j < alg.dim(); ++j) {
        CHECK(res.form[i][j] == res.form[j][i]);
        if (i != j) CHECK(res.op[i][j] == 0);
      }
    }
    REQUIRE(res.operator_diagonal());
    CHECK(res.diagonal == ricci_diagonal_nice(alg, g));
  }
}

TEST_CASE("rational curvature matches the floating-point oracle") {
  std::mt19937_64 rng(99);
  std::vector<std::pair<Quiver, DiagonalMetric>> cases;
  cases.push_back({line2(), DiagonalMetric{{rat(3, 2), rat(1), rat(1)}}});
  cases.push_back({line2(), ones_metric(3)});
  cases.push_back({merge5(), construct_soliton_metric(merge5())});
  cases.push_back({twin3(), construct_soliton_metric(twin3())});
  for (unsigned long long seed = 1; seed <= 6; ++seed) {
    Quiver q = sample_quiver(seed, 3 + seed % 3, 2 + seed % 5);
    DiagonalMetric g = random_metric(build_algebra(q), rng);
    cases.push_back({q, g});
  }
  for (const auto& [q, g] : cases) {
    CAPTURE(serialize(q));
    QuiverLieAlgebra alg = build_algebra(q);
    RicciResult exact = ricci_form(alg, g);
    auto approx = float_ricci(alg, g);
    for (int i = 0; i < alg.dim(); ++i) {
      for (int j = 0; j < alg.dim(); ++j) {
        // the float oracle works on the orthonormal basis, so compare
        // against form[i][j] / (|x_i| |x_j|)
        double expected =
            rat_double(exact.form[i][j]) /
            std::sqrt(rat_double(g.norms_squared[i] * g.norms_squared[j]));
        CHECK(std::abs(approx[i][j] - expected) < 1e-9);
      }
    }
  }
}

TEST_CASE("scaling the metric scales the curvature inversely") {
  Quiver q = twin3();
  QuiverLieAlgebra alg = build_algebra(q);
  DiagonalMetric g = construct_soliton_metric(q);
  Rat lambda = rat(7, 3);
  DiagonalMetric scaled;
  for (const Rat& w : g.norms_squared) {
    scaled.norms_squared.push_back(lambda * w);
  }
  auto r = ricci_diagonal_nice(alg, g);
  auto rs = ricci_diagonal_nice(alg, scaled);
  for (int i = 0; i < alg.dim(); ++i) {
    CHECK(rs[i] == r[i] / lambda);
  }
}

TEST_CASE("scalar curvature equals the operator trace") {
  std::mt19937_64 rng(7);
  for (unsigned long long seed = 50; seed <= 70; ++seed) {
    Quiver q = sample_quiver(seed, 2 + seed % 5, 1 + seed % 8);
    QuiverLieAlgebra alg = build_algebra(q);
    DiagonalMetric g = random_metric(alg, rng);
    RicciResult res = ricci_form(alg, g);
    Rat scalar = rat(0);
    for (int i = 0; i < alg.dim(); ++i) {
      scalar += res.form[i][i] / g.norms_squared[i];
    }
    Rat from_nice = rat(0);
    for (const Rat& r : ricci_diagonal_nice(alg, g)) from_nice += r;
    CHECK(scalar == from_nice);
  }
}

TEST_CASE("bracket norm coefficient") {
  Quiver q = line2();
  QuiverLieAlgebra alg = build_algebra(q);
  DiagonalMetric g{{rat(3, 2), rat(1), rat(1)}};
  // <[ab, xb], (ax)b>^2 = 1/|a|^2 = 2/3
  CHECK(bracket_norm_coefficient(alg, g, 0, 1) == rat(2, 3));

  DiagonalMetric perturbed{{rat(3, 2), rat(1), rat(4)}};
  CHECK_THROWS_AS(bracket_norm_coefficient(alg, perturbed, 0, 1),
                  NormMismatch);
  CHECK_THROWS_AS(bracket_norm_coefficient(alg, g, 1, 0), NotComposable);
}

TEST_CASE("bracket norm coefficient across constructed metrics") {
  for (unsigned long long seed = 80; seed <= 110; ++seed) {
    Quiver q = sample_quiver(seed, 2 + seed % 5, 2 + seed % 8);
    if (quiver_length(q) < 2) continue;
    QuiverLieAlgebra alg = build_algebra(q);
    DiagonalMetric g = construct_soliton_metric(q);
    QuiverPartition part = partition(q);
    for (size_t j = 0; j < part.s_blocks.size(); ++j) {
      for (int a : part.s_blocks[j]) {
        int ai = *alg.index_of(PathSeq{{a}});
        for (int x = 0; x < alg.dim(); ++x) {
          if (!alg.concat(ai, x)) continue;
          CHECK(bracket_norm_coefficient(alg, g, ai, x) ==
                1 / g.norms_squared[ai]);
        }
      }
    }
  }
}

TEST_CASE("four-case curvature decomposition") {
  CHECK_NOTHROW(
      ricci_decomposition_check(line2(), construct_soliton_metric(line2())));
  CHECK_NOTHROW(
      ricci_decomposition_check(merge5(), construct_soliton_metric(merge5())));
  CHECK_NOTHROW(
      ricci_decomposition_check(twin3(), construct_soliton_metric(twin3())));
  CHECK_THROWS_AS(ricci_decomposition_check(disjoint2(), ones_metric(2)),
                  LengthOne);
  for (unsigned long long seed = 120; seed <= 170; ++seed) {
    Quiver q = sample_quiver(seed, 2 + seed % 5, 2 + seed % 9);
    if (quiver_length(q) < 2) continue;
    CAPTURE(serialize(q));
    CHECK_NOTHROW(ricci_decomposition_check(q, construct_soliton_metric(q)));
  }
}

TEST_CASE("metric files") {
  QuiverLieAlgebra alg = build_algebra(line2());
  DiagonalMetric g = parse_metric_file(alg, "# soliton\na = 3/2\n\nb = 1\n");
  CHECK(g == DiagonalMetric{{rat(3, 2), rat(1), rat(1)}});  // a.b defaults

  CHECK(parse_metric_file(alg, "") == ones_metric(3));

  try {
    parse_metric_file(alg, "a = 3/2\nz = 1\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_metric_file(alg, "a = 1\na = 2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_metric_file(alg, "a == 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_metric_file(alg, "a = -1\n"), NonPositiveNorm);
  CHECK_THROWS_AS(parse_metric_file(alg, "a = 0\n"), NonPositiveNorm);
  CHECK_THROWS_AS(parse_metric_file(alg, "a = 1/0\n"), SyntaxError);
}
