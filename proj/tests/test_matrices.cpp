#include <sstream>

#include "doctest.h"
#include "hypergrowth/core.hpp"
#include "hypergrowth/matrices.hpp"
#include "hypergrowth/verify.hpp"

using namespace hypergrowth;

namespace {

StarMatrix2 random2(Lcg& rng, int r, int s, bool stars = false) {
  StarMatrix2 m(r, s);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j) m.set(i, j, static_cast<Entry>(rng.next() % (stars ? 3u : 2u)));
  return m;
}

StarMatrix3 random3(Lcg& rng, int r, int s, int t) {
  StarMatrix3 m(r, s, t);
  for (int k = 1; k <= t; ++k)
    for (int j = 1; j <= s; ++j)
      for (int i = 1; i <= r; ++i) m.set(i, j, k, static_cast<Entry>(rng.next() % 2));
  return m;
}

// Count of pairs along every line, straight from the definition.
int al_oracle(const StarMatrix3& m) {
  int best = 0;
  auto scan = [&](auto get, int len) {
    int c = 0;
    for (int x = 1; x < len; ++x) c += alternates(get(x), get(x + 1));
    best = std::max(best, c);
  };
  for (int j = 1; j <= m.dim2(); ++j)
    for (int k = 1; k <= m.dim3(); ++k) scan([&](int x) { return m(x, j, k); }, m.dim1());
  for (int i = 1; i <= m.dim1(); ++i)
    for (int k = 1; k <= m.dim3(); ++k) scan([&](int x) { return m(i, x, k); }, m.dim2());
  for (int i = 1; i <= m.dim1(); ++i)
    for (int j = 1; j <= m.dim2(); ++j) scan([&](int x) { return m(i, j, x); }, m.dim3());
  return best + 1;
}

}  // namespace

TEST_CASE("2D metrics") {
  const auto z = metrics2(StarMatrix2(4, 4));
  CHECK(z.al == 1);
  CHECK(z.R.empty());
  CHECK(z.C.empty());
  const auto i3 = metrics2(StarMatrix2::identity(3));
  CHECK(i3.al == 3);
  CHECK(i3.R == std::vector<int>{1, 2});
  CHECK(i3.C == std::vector<int>{1, 2});
  const auto star = metrics2(StarMatrix2::from_rows({"0*1"}));
  CHECK(star.al == 1);
  CHECK(star.R.empty());
  CHECK(metrics2(StarMatrix2::from_rows({"00011**11*010"})).R == std::vector<int>{3, 11, 12});
}

TEST_CASE("3D metrics") {
  const auto s = metrics3(StarMatrix3(2, 3, 2, Entry::Star));
  CHECK(s.al == 1);
  CHECK(s.R.empty());
  CHECK(s.S.empty());
  StarMatrix3 m(2, 2, 2, Entry::One);
  m.set(1, 1, 1, Entry::Zero);
  const auto x = metrics3(m);
  CHECK(x.al == 2);
  CHECK(x.R == std::vector<int>{1});
  CHECK(x.C == std::vector<int>{1});
  CHECK(x.S == std::vector<int>{1});
  Lcg rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto r = random3(rng, rng.range(1, 5), rng.range(1, 5), rng.range(1, 5));
    CHECK(metrics3(r).al == al_oracle(r));
  }
}

TEST_CASE("lemma inequalities on samples") {
  Lcg rng(42);
  for (int t = 0; t < 500; ++t) {
    const auto x = metrics2(random2(rng, rng.range(1, 12), rng.range(1, 12)));
    const long R = static_cast<long>(x.R.size()), C = static_cast<long>(x.C.size());
    CHECK(R <= (x.al - 1) * (2 * C + 1));
    CHECK(C <= (x.al - 1) * (2 * R + 1));
  }
  for (int t = 0; t < 100; ++t) {
    const auto x = metrics3(random3(rng, rng.range(1, 8), rng.range(1, 8), rng.range(1, 8)));
    const long m = static_cast<long>(std::max(x.R.size(), x.C.size()));
    CHECK(static_cast<long>(x.S.size()) <= (x.al - 1) * (m + 1) * (m + 1));
  }
}

TEST_CASE("submatrix monotonicity of al") {
  Lcg rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto m = random3(rng, 5, 5, 5);
    const std::vector<int> a{1, 3, 4}, b{2, 5}, c{1, 2, 5};
    CHECK(metrics3(submatrix(m, a, b, c)).al <= metrics3(m).al);
  }
}

TEST_CASE("pattern search") {
  const auto hit = find_pattern2(StarMatrix2::identity(4), Pattern2::of_class(PatternClass::IdentityStrong, 2));
  REQUIRE(hit);
  CHECK(hit->rows == std::vector<int>{1, 2});
  CHECK(hit->cols == std::vector<int>{1, 2});
  CHECK(hit->variant == "plain");
  CHECK_FALSE(find_pattern2(StarMatrix2(5, 5), Pattern2::of_class(PatternClass::UpperStrong, 2)));
  CHECK(pattern_variants(PatternClass::IdentityStrong, 3).size() == 4);
  CHECK(pattern_variants(PatternClass::IdentitySimilar, 3).size() == 4);
  CHECK(pattern_variants(PatternClass::UpperStrong, 3).size() == 4);
  CHECK(pattern_variants(PatternClass::UpperSimilar, 3).size() == 8);

  // exhaustive oracle: all row/column selections
  Lcg rng(4);
  for (int t = 0; t < 150; ++t) {
    const auto hay = random2(rng, rng.range(2, 6), rng.range(2, 6));
    const auto pat = random2(rng, rng.range(1, 3), rng.range(1, 3), true);
    bool brute = false;
    if (pat.rows() <= hay.rows() && pat.cols() <= hay.cols()) {
      std::vector<int> rows(static_cast<std::size_t>(pat.rows()));
      for (int i = 0; i < pat.rows(); ++i) rows[static_cast<std::size_t>(i)] = i + 1;
      do {
        std::vector<int> cols(static_cast<std::size_t>(pat.cols()));
        for (int j = 0; j < pat.cols(); ++j) cols[static_cast<std::size_t>(j)] = j + 1;
        do {
          if (submatrix(hay, rows, cols) == pat) brute = true;
        } while (!brute && next_combination(cols, hay.cols()));
      } while (!brute && next_combination(rows, hay.rows()));
    }
    const auto got = find_submatrix(hay, pat);
    CHECK(got.has_value() == brute);
    if (got) CHECK(submatrix(hay, got->rows, got->cols) == pat);
  }
}

TEST_CASE("layers and crosses") {
  Lcg rng(6);
  const auto m = random3(rng, 2, 3, 4);
  const auto l3 = layer(m, 3, 2);
  CHECK(l3.rows() == 3);
  CHECK(l3.cols() == 2);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 2; ++b) CHECK(l3(a, b) == m(b, a, 2));
  const auto l1 = layer(m, 1, 1);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 3; ++b) CHECK(l1(a, b) == m(1, b, a));
  CHECK_THROWS(layer(m, 1, 3));

  StarMatrix3 c(3, 2, 2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) c.set(i, j, k, static_cast<Entry>((i + 2 * j + k) % 2));
  const auto d = cross(c, 2, 3, CrossMode::Diag);
  CHECK(d.rows() == 2);
  CHECK(d.cols() == 3);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 3; ++b) CHECK(d(a, b) == c(b, a, a));
  StarMatrix3 one(2, 2, 2);
  one.set(1, 2, 1, Entry::One);
  const auto ad = cross(one, 2, 3, CrossMode::Antidiag);
  CHECK(ad(2, 1) == Entry::One);
  CHECK(ad(1, 1) == Entry::Zero);
  CHECK(ad(1, 2) == Entry::Zero);
  CHECK(ad(2, 2) == Entry::Zero);
  CHECK_THROWS_AS(cross(random3(rng, 2, 3, 4), 2, 3, CrossMode::Diag), DimensionMismatch);
  const StarMatrix3 unit(1, 1, 1, Entry::One);
  CHECK(cross(unit, 1, 2, CrossMode::Diag)(1, 1) == Entry::One);
}

TEST_CASE("fullness uses matching") {
  const auto z = fullness(StarMatrix2(3, 3));
  CHECK_FALSE(z.r_full);
  CHECK_FALSE(z.c_full);
  const auto f = fullness(StarMatrix2::from_rows({"100", "010"}));
  CHECK(f.r_full);
  REQUIRE(f.row_assignment);
  CHECK(*f.row_assignment == std::vector<int>{1, 2});
  CHECK_FALSE(fullness(StarMatrix2::identity(3)).r_full);
}

TEST_CASE("al along (2,3)-diagonals") {
  CHECK(al_23d(StarMatrix3(2, 3, 3)) == 1);
  StarMatrix3 m(1, 3, 3);
  m.set(1, 2, 2, Entry::One);
  CHECK(al_23d(m) == 3);
  CHECK_THROWS_AS(al_23d(StarMatrix3(1, 2, 3)), DimensionMismatch);
  Lcg rng(10);
  for (int t = 0; t < 50; ++t) {
    const auto r = random3(rng, 3, 4, 4);
    CHECK(al_23d(r) <= metrics2(cross(r, 2, 3, CrossMode::Diag)).al);
  }
}

TEST_CASE("matrix text format") {
  Lcg rng(12);
  const auto m = random2(rng, 3, 5, true);
  std::ostringstream os;
  write_matrix(os, m);
  std::istringstream is(os.str());
  CHECK(read_matrix2(is) == m);
  StarMatrix3 c(2, 2, 3, Entry::Star);
  c.set(1, 2, 3, Entry::One);
  std::ostringstream o3;
  write_matrix(o3, c);
  std::istringstream i3(o3.str());
  CHECK(read_matrix3(i3) == c);
}
