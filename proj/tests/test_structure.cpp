#include "doctest.h"
#include "hypergrowth/constructions.hpp"
#include "hypergrowth/structure.hpp"
#include "hypergrowth/verify.hpp"

using namespace hypergrowth;

namespace {

Coloring random_coloring(Lcg& rng, int n) {
  Coloring c(3, 2, n);
  for (std::size_t r = 0; r < c.edge_count(); ++r) c.set(r, static_cast<Color>(rng.bit()));
  return c;
}

std::vector<Vertex> range(int lo, int hi) {
  std::vector<Vertex> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("nuclear decomposition") {
  const auto one = nuclear_decomposition(Coloring(3, 2, 6));
  REQUIRE(one.length() == 1);
  CHECK(one.intervals[0] == Interval{1, 6});
  Coloring c(3, 2, 7);
  c.set({1, 2, 3}, 1);
  const auto nu = nuclear_decomposition(c);
  REQUIRE(nu.length() == 2);
  CHECK(nu.intervals[0] == Interval{1, 3});
  CHECK(nu.intervals[1] == Interval{4, 7});

  Lcg rng(3);
  for (int t = 0; t < 60; ++t) {
    const Coloring r = random_coloring(rng, rng.range(3, 9));
    const auto d = nuclear_decomposition(r);
    int next = 1;
    for (int i = 0; i < d.length(); ++i) {
      const auto& iv = d.intervals[static_cast<std::size_t>(i)];
      CHECK(iv.lo == next);
      next = iv.hi + 1;
      CHECK(homogeneity(r, iv.vertices()).kind != Homogeneity::Kind::NotHomogeneous);
      if (i + 1 < d.length()) {
        CHECK(iv.size() >= 3);
        auto ext = iv.vertices();
        ext.push_back(iv.hi + 1);
        CHECK(homogeneity(r, ext).kind == Homogeneity::Kind::NotHomogeneous);
      }
    }
    CHECK(next == r.n() + 1);
  }
}

TEST_CASE("long nuclear decompositions contain W4.1 colorings") {
  // 4r consecutive triples alternating in color give nu length >= 2r
  const int r = 2;
  const Coloring w = make_wealthy(WealthyFamily::W41, r);
  CHECK(nuclear_decomposition(w).length() >= 2);
  CHECK(is_wealthy(w, WealthyFamily::W41, r));
}

TEST_CASE("crossing matrices") {
  Lcg rng(1);
  const Coloring c = random_coloring(rng, 6);
  const auto m = crossing_matrix(c, {1, 2}, {3, 4}, {5, 6});
  CHECK(m.is_binary());
  CHECK(m(2, 1, 2) == static_cast<Entry>(c({2, 3, 6})));
  const auto s = crossing_matrix(c, {1, 2}, {1, 2}, {3});
  CHECK(s(1, 1, 1) == Entry::Star);
  CHECK(s(1, 2, 1) == static_cast<Entry>(c({1, 2, 3})));
  CHECK(s(2, 1, 1) == static_cast<Entry>(c({1, 2, 3})));
  CHECK(s(2, 2, 1) == Entry::Star);
  CHECK_THROWS_AS(crossing_matrix(c, {}, {1}, {2}), InvalidArgument);

  // star rule: each line has at most two stars or only stars
  for (int t = 0; t < 40; ++t) {
    const Coloring h = random_coloring(rng, 9);
    auto pick = [&] {
      std::vector<Vertex> v;
      for (int x = 1; x <= 9; ++x)
        if (rng.bit()) v.push_back(x);
      if (v.empty()) v.push_back(rng.range(1, 9));
      return v;
    };
    const auto x = pick(), y = pick(), z = pick();
    const auto M = crossing_matrix(h, x, y, z);
    auto check_line = [&](auto get, int len) {
      int stars = 0;
      for (int i = 1; i <= len; ++i) stars += get(i) == Entry::Star;
      CHECK((stars <= 2 || stars == len));
    };
    for (int j = 1; j <= M.dim2(); ++j)
      for (int k = 1; k <= M.dim3(); ++k) check_line([&](int i) { return M(i, j, k); }, M.dim1());
    for (int i = 1; i <= M.dim1(); ++i)
      for (int k = 1; k <= M.dim3(); ++k) check_line([&](int j) { return M(i, j, k); }, M.dim2());
    for (int i = 1; i <= M.dim1(); ++i)
      for (int j = 1; j <= M.dim2(); ++j) check_line([&](int k) { return M(i, j, k); }, M.dim3());
  }
}

TEST_CASE("layer of a crossing matrix is a crossing matrix") {
  Lcg rng(2);
  const Coloring c = random_coloring(rng, 9);
  const std::vector<Vertex> x{1, 4, 7}, y{2, 5, 8}, z{3, 6, 9};
  const auto m = crossing_matrix(c, x, y, z);
  for (int i = 1; i <= 3; ++i) {
    const auto n = layer(m, 1, i);
    const auto direct = crossing_matrix(c, {x[static_cast<std::size_t>(i - 1)]}, y, z);
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) CHECK(n(a, b) == direct(1, b, a));
  }
}

TEST_CASE("p-tameness") {
  CHECK(is_p_tame(Coloring(3, 2, 8), 3).tame());
  CHECK_THROWS_AS(is_p_tame(Coloring(3, 2, 8), 2), InvalidArgument);
  // alternating consecutive triples: many nuclear intervals
  Coloring c(3, 2, 12, 0);
  for (int s = 1; s + 2 <= 12; s += 3) c.set({s, s + 1, s + 2}, 1);
  const auto nu = nuclear_decomposition(c).length();
  const auto rep = is_p_tame(c, 3);
  if (nu > 3) {
    REQUIRE_FALSE(rep.tame());
    CHECK(rep.witness->condition == 1);
  }
  Lcg rng(4);
  for (int t = 0; t < 30; ++t) {
    const Coloring r = random_coloring(rng, rng.range(3, 8));
    if (is_p_tame(r, 3).tame()) {
      CHECK(is_p_tame(r, 4).tame());
      CHECK(is_p_tame(r, 6).tame());
    }
  }
}

TEST_CASE("p-tameness condition 2 witness") {
  // three nuclear intervals of size 5; crossing triples alternate in color
  Coloring c(3, 2, 15, 0);
  auto block = [](Vertex v) { return (v - 1) / 5; };
  for_each_subset(1, 15, 3, [&](std::span<const Vertex> e) {
    const int b0 = block(e[0]), b1 = block(e[1]), b2 = block(e[2]);
    if (b0 != b1 && b1 != b2) c.set(e, static_cast<Color>((e[0] + e[1] + e[2]) % 2));
    else if (b0 == b1 && b1 != b2 && b2 == b0 + 1) c.set(e, 1);  // breaks the interval at its right end
    return true;
  });
  const auto nu = nuclear_decomposition(c);
  REQUIRE(nu.length() == 3);
  CHECK(nu.intervals[1] == Interval{6, 10});
  CHECK(metrics3(crossing_matrix(c, range(1, 5), range(6, 10), range(11, 15))).al == 5);
  const auto rep = is_p_tame(c, 3);
  REQUIRE_FALSE(rep.tame());
  CHECK(rep.verdicts[0] == true);
  CHECK(rep.verdicts[1] == false);
  CHECK(rep.witness->condition == 2);
  CHECK(rep.witness->value == 5);
  CHECK_FALSE(rep.verdicts[2].has_value());
}

TEST_CASE("richness") {
  const Coloring r = make_rich(3, 3, 0, 3, 0, 0, 1);
  const auto w = is_r_rich(r, 3);
  REQUIRE(w);
  // the reported witness is the lex-first type, which need not be the one used to build r
  REQUIRE(w->edges.size() == 2);
  CHECK(r(w->edges[0]) != r(w->edges[1]));
  CHECK(rich_edges(3, 3, 0, 3, 0) == std::vector<Edge>{{1, 2, 3}, {2, 3, 4}});
  CHECK_FALSE(is_r_rich(Coloring(3, 2, 4, 1), 3));
  CHECK_FALSE(is_r_rich(r, 4));
  for (int k = 2; k <= 4; ++k)
    for (int rr = k; rr <= 6; ++rr)
      for (int f = 0; f < k; ++f)
        for (int g = 1; f + g <= k; ++g) {
          const int h = k - f - g;
          const Coloring c = make_rich(k, rr, f, g, h, 1, 0);
          CHECK(c.n() == 2 * rr - k + 1);
          CHECK(is_r_rich(c, rr));
        }
}

TEST_CASE("simplicity") {
  Lcg rng(5);
  CHECK_FALSE(is_c_simple(random_coloring(rng, 7), 2));  // n <= 2c+k
  CHECK_FALSE(is_c_simple(Coloring(3, 2, 20, 1), 3));
  const int cp = 2, n = 5 * cp + 2;
  Coloring c(3, 2, n, 0);
  // one C2 edge with anchor v1 = 1 differs from its neighbours
  c.set({1, 2, 2 * cp + 2}, 1);
  const auto v = is_c_simple(c, cp);
  REQUIRE(v);
  CHECK(v->condition == 2);
  const bool names_planted = v->first == Edge{1, 2, 2 * cp + 2} || v->second == Edge{1, 2, 2 * cp + 2};
  CHECK(names_planted);
  Coloring mid(3, 2, n, 0);
  mid.set({cp + 2, cp + 3, cp + 4}, 1);
  const auto m = is_c_simple(mid, cp);
  REQUIRE(m);
  CHECK(m->condition == 1);
}

TEST_CASE("wealthy recognition examples") {
  const auto w = is_wealthy(make_wealthy(WealthyFamily::W21, 2), WealthyFamily::W21, 2);
  REQUIRE(w);
  CHECK(to_string(*w) == "wealthy family=W2.1 r=2 variant=swap:0,rev:00,perm:123 base=[1,2]|[3,4]|[5]");
  Lcg rng(6);
  for (int n = 1; n <= 2; ++n) {
    Coloring c(3, 2, n);
    CHECK(is_wealthy(c, WealthyFamily::W1p, n));
  }
  CHECK_FALSE(is_wealthy(Coloring(3, 2, 8, 0), WealthyFamily::W41, 2));
  CHECK_THROWS_AS(is_wealthy(Coloring(3, 2, 7), WealthyFamily::W41, 2), SizeMismatch);
  const Coloring w31 = make_wealthy(WealthyFamily::W31, 1);
  CHECK(w31.n() == 3);
  CHECK(w31({1, 2, 3}) == 1);
  const Coloring w1 = make_wealthy(WealthyFamily::W1p, 6);
  for (int i = 3; i <= 6; ++i) CHECK(w1({1, 2, i}) == (i % 2 == 0 ? 1 : 0));
}

TEST_CASE("W4.1 with interval edges 0 is an S(3) member") {
  Coloring c = make_wealthy(WealthyFamily::W41, 2, {}, 1);
  CHECK(c({1, 2, 3}) == 0);
  CHECK(c({5, 6, 7}) == 0);
  CHECK(is_wealthy(c, WealthyFamily::W41, 2));
}

TEST_CASE("wealthy round trips and closure") {
  for (auto f : all_families()) {
    CHECK(parse_family(to_string(f)) == f);
    for (int r = 1; r <= 4; ++r)
      for (const auto& v : wealthy_variants(f)) {
        CHECK(parse_variant(f, to_string(f, v)) == v);
        const Coloring c = make_wealthy(f, r, v);
        CHECK(c.n() == wealthy_size(f, r));
        const auto w = is_wealthy(c, f, r, v);
        REQUIRE(w);
        CHECK(w->variant == v);
        CHECK(is_wealthy(c, f, r));
        CHECK(contains(make_wealthy_partial(f, r, v), c));
      }
  }
  for (auto f : {WealthyFamily::W1p, WealthyFamily::W1pp, WealthyFamily::W41, WealthyFamily::W42})
    for (int r = 1; r <= 4; ++r) CHECK(is_wealthy(reverse(make_wealthy(f, r)), f, r));
  CHECK_THROWS(parse_family("W9"));
}
