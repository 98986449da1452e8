#include <sstream>

#include "doctest.h"
#include "hypergrowth/constructions.hpp"
#include "hypergrowth/core.hpp"
#include "hypergrowth/verify.hpp"

using namespace hypergrowth;

namespace {

Coloring random_coloring(Lcg& rng, int k, int l, int n) {
  Coloring c(k, l, n);
  for (std::size_t r = 0; r < c.edge_count(); ++r) c.set(r, static_cast<Color>(rng.next() % static_cast<unsigned>(l)));
  return c;
}

// every increasing injection, no pruning
bool contains_brute(const Coloring& a, const Coloring& b) {
  const int m = a.n(), n = b.n();
  if (m > n) return false;
  if (m == 0) return true;
  std::vector<Vertex> f(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) f[static_cast<std::size_t>(i)] = i + 1;
  do {
    if (restrict_normalize(b, f) == a) return true;
  } while (next_combination(f, n));
  return false;
}

}  // namespace

TEST_CASE("edge ranks follow lexicographic order") {
  CHECK(edge_index(std::vector<Vertex>{1, 2, 3}, 5, 3) == 0);
  CHECK(edge_index(std::vector<Vertex>{2, 3, 5}, 5, 3) == 7);
  CHECK(edge_index(std::vector<Vertex>{3, 4, 5}, 5, 3) == 9);
  CHECK_THROWS_AS(edge_index(std::vector<Vertex>{1, 1, 2}, 5, 3), InvalidEdge);
  CHECK_THROWS_AS(edge_index(std::vector<Vertex>{1, 2, 6}, 5, 3), InvalidEdge);
  CHECK_THROWS_AS(edge_index(std::vector<Vertex>{1, 2}, 5, 3), InvalidEdge);
  for (int k = 1; k <= 4; ++k)
    for (int n = k; n <= 12; ++n) {
      std::size_t expect = 0;
      for_each_subset(1, n, k, [&](std::span<const Vertex> e) {
        CHECK(edge_index(e, n, k) == expect);
        CHECK(edge_unindex(expect, n, k) == Edge(e.begin(), e.end()));
        ++expect;
        return true;
      });
      CHECK(expect == binomial(n, k));
    }
}

TEST_CASE("restriction and normalization") {
  const Coloring zero(3, 2, 5);
  CHECK(restrict_normalize(zero, std::vector<Vertex>{1, 3, 5}) == Coloring(3, 2, 3));
  Coloring c(3, 2, 5);
  c.set({1, 2, 5}, 1);
  Coloring want(3, 2, 4);
  want.set({1, 2, 4}, 1);
  CHECK(restrict_normalize(c, std::vector<Vertex>{1, 2, 4, 5}) == want);
  const Coloring tiny = restrict_normalize(c, std::vector<Vertex>{2, 4});
  CHECK(tiny.n() == 2);
  CHECK(tiny.empty());
  CHECK_THROWS_AS(restrict_normalize(c, std::vector<Vertex>{}), InvalidArgument);
  std::vector<Vertex> all{1, 2, 3, 4, 5};
  CHECK(restrict_normalize(c, all) == c);
}

TEST_CASE("restriction composes") {
  Lcg rng(7);
  for (int t = 0; t < 50; ++t) {
    const Coloring c = random_coloring(rng, 3, 2, 8);
    const std::vector<Vertex> x{1, 3, 4, 6, 8};
    const std::vector<Vertex> y{2, 3, 5};  // positions inside x
    const std::vector<Vertex> composed{3, 4, 8};
    CHECK(restrict_normalize(restrict_normalize(c, x), y) == restrict_normalize(c, composed));
  }
}

TEST_CASE("reversal") {
  const Coloring one(3, 2, 6, 1);
  CHECK(reverse(one) == one);
  Coloring c(3, 2, 4);
  c.set({1, 2, 3}, 1);
  Coloring want(3, 2, 4);
  want.set({2, 3, 4}, 1);
  CHECK(reverse(c) == want);
  Lcg rng(3);
  for (int t = 0; t < 30; ++t) {
    const Coloring r = random_coloring(rng, 3, 3, 7);
    CHECK(reverse(reverse(r)) == r);
  }
}

TEST_CASE("containment examples") {
  Lcg rng(11);
  const Coloring c = random_coloring(rng, 3, 2, 7);
  const auto self = contains(c, c);
  REQUIRE(self);
  CHECK(self->images == std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7});

  Coloring a(3, 2, 4);
  a.set({1, 2, 4}, 1);
  const Coloring w1 = make_wealthy(WealthyFamily::W1p, 6);
  const auto inj = contains(a, w1);
  REQUIRE(inj);
  CHECK(restrict_normalize(w1, inj->images) == a);

  CHECK_FALSE(contains(Coloring(3, 2, 3, 1), Coloring(3, 2, 5, 0)));
  CHECK_THROWS_AS(contains(Coloring(3, 2, 3), Coloring(2, 2, 5)), IncompatibleColorings);
  CHECK(contains(Coloring(3, 2, 2), Coloring(3, 2, 4)));
}

TEST_CASE("containment agrees with brute force") {
  Lcg rng(2024);
  for (int t = 0; t < 300; ++t) {
    const int k = rng.range(2, 3);
    const int m = rng.range(1, 5), n = rng.range(m, 7);
    const Coloring a = random_coloring(rng, k, 2, m), b = random_coloring(rng, k, 2, n);
    const auto got = contains(a, b);
    CHECK(got.has_value() == contains_brute(a, b));
    if (got) CHECK(restrict_normalize(b, got->images) == a);
    // reversal preserves and reflects containment
    CHECK(contains(reverse(a), reverse(b)).has_value() == got.has_value());
  }
}

TEST_CASE("containment is transitive on samples") {
  Lcg rng(5);
  for (int t = 0; t < 40; ++t) {
    const Coloring c = random_coloring(rng, 3, 2, 8);
    const Coloring b = restrict_normalize(c, std::vector<Vertex>{1, 2, 4, 5, 7, 8});
    const Coloring a = restrict_normalize(b, std::vector<Vertex>{2, 3, 5});
    CHECK(contains(b, c));
    CHECK(contains(a, b));
    CHECK(contains(a, c));
  }
}

TEST_CASE("wildcard containment") {
  PartialColoring p(3, 2, 4);
  p.set({1, 2, 4}, 1);
  Coloring host(3, 2, 5);
  host.set({2, 3, 5}, 1);
  const auto inj = contains(p, host);
  REQUIRE(inj);
  CHECK(inj->images == std::vector<Vertex>{2, 3, 4, 5});
  PartialColoring q(3, 2, 4);
  q.set({1, 2, 3}, 1);
  CHECK_FALSE(contains(q, host));
  CHECK(p.specified_count() == 1);
}

TEST_CASE("homogeneity") {
  Coloring c(3, 2, 4);
  CHECK(homogeneity(c, std::vector<Vertex>{1, 2}).kind == Homogeneity::Kind::Indeterminate);
  const auto h = homogeneity(c, std::vector<Vertex>{1, 2, 3, 4});
  CHECK(h.kind == Homogeneity::Kind::Homogeneous);
  CHECK(h.color == 0);
  c.set({1, 2, 3}, 1);
  const auto d = homogeneity(c, std::vector<Vertex>{1, 2, 3, 4});
  CHECK(d.kind == Homogeneity::Kind::NotHomogeneous);
  CHECK(d.first == Edge{1, 2, 3});
  CHECK(d.second == Edge{1, 2, 4});
}

TEST_CASE("text format round trip") {
  Lcg rng(1);
  for (int l : {2, 3}) {
    const Coloring c = random_coloring(rng, 3, l, 6);
    std::ostringstream os;
    write_coloring(os, c);
    if (l == 2) CHECK(os.str().find("bits ") != std::string::npos);
    CHECK(parse_coloring(os.str()) == c);
  }
  CHECK(parse_coloring("# note\ncoloring k=3 l=2 n=2\n") == Coloring(3, 2, 2));
  CHECK_THROWS_AS(parse_coloring("coloring k=3 l=2 n=4\nbits 01\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("colouring k=3\n"), ParseError);
  CHECK(to_string(std::vector<Vertex>{1, 2}) == "{1,2}");
}
