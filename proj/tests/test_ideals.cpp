#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hypergrowth/constructions.hpp"
#include "hypergrowth/ideals.hpp"
#include "hypergrowth/structure.hpp"
#include "hypergrowth/verify.hpp"

using namespace hypergrowth;

namespace {

// |Avoid(basis)_n| by testing every coloring of [n]
BigInt avoid_brute(const std::vector<Coloring>& basis, int k, int n) {
  const std::size_t E = binomial(n, k);
  BigInt count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << E); ++mask) {
    std::vector<Color> cols(E);
    for (std::size_t i = 0; i < E; ++i) cols[i] = static_cast<Color>((mask >> i) & 1);
    const Coloring c(k, 2, n, cols);
    bool ok = true;
    for (const auto& b : basis) ok = ok && !contains(b, c);
    count += ok;
  }
  return count;
}

Coloring bits(int k, int n, const std::string& s) { return parse_coloring("coloring k=" + std::to_string(k) + " l=2 n=" + std::to_string(n) + "\nbits " + s + "\n"); }

}  // namespace

TEST_CASE("sequences") {
  const int g[] = {1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41};
  for (int n = 0; n <= 11; ++n) CHECK(g_sequence(n) == g[n]);
  CHECK(fibonacci(8) == 21);
  CHECK(sequence("G", 11) == 41);
  CHECK(sequence("F", 8) == 21);
  CHECK_THROWS(sequence("F", 0));
  CHECK_THROWS(sequence("H", 3));
  for (int n = 0; n <= 20; ++n) {
    CHECK(gk_sequence(2, n) == fibonacci(n + 1));
    for (int k = 2; k <= 5; ++k) CHECK(gk_sequence(k, n) == compositions_1k(n, k));
    CHECK(gk_sequence(3, n) == g_sequence(n));
  }
  CHECK(g_sequence(200) > 0);
}

TEST_CASE("spec parsing and digests") {
  const auto s = parse_spec_argument("builtin:S,k=3");
  CHECK(s.kind == IdealSpec::Kind::Builtin);
  CHECK(s.builtin == Builtin::S);
  CHECK(parse_spec_argument("builtin:lineartight,k=4").k == 4);
  CHECK_THROWS_AS(parse_spec_argument("builtin:nope"), ParseError);
  CHECK_THROWS_AS(parse_spec_argument("list:foo"), ParseError);
  std::istringstream in("# two constants\nideal avoid k=3 l=2\ncoloring k=3 l=2 n=3\nbits 1\ncoloring k=3 l=2 n=3\nbits 0\n");
  const auto a = read_ideal(in);
  CHECK(a.basis.size() == 2);
  // digest is independent of basis order
  const auto b = IdealSpec::avoid({bits(3, 3, "0"), bits(3, 3, "1")}, 3, 2);
  CHECK(spec_digest(a) == spec_digest(b));
  CHECK(spec_digest(a).size() == 16);
  CHECK(spec_digest(a) != spec_digest(s));
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK_THROWS_AS(IdealSpec::avoid({bits(3, 3, "0")}, 2, 2), IncompatibleColorings);
  std::istringstream bi("ideal builtin name=w1tight k=3\n");
  CHECK(read_ideal(bi).builtin == Builtin::W1Tight);
}

TEST_CASE("growth of the full class and of builtins") {
  const auto full = growth(IdealSpec::avoid({}, 3, 2), {6});
  for (int n = 1; n <= 6; ++n) CHECK(*full.counts.at(n).count == BigInt(1) << binomial(n, 3));
  const auto s = growth(IdealSpec::make_builtin(Builtin::S, 3), {11});
  const int g[] = {1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41};
  for (int n = 1; n <= 11; ++n) CHECK(*s.counts.at(n).count == g[n - 1]);
  const auto lin = growth(IdealSpec::make_builtin(Builtin::LinearTight, 3), {10});
  for (int n = 3; n <= 10; ++n) CHECK(*lin.counts.at(n).count == n - 1);
  for (int k = 2; k <= 4; ++k)
    for (auto b : {Builtin::S, Builtin::LinearTight, Builtin::W1Tight}) {
      if (b == Builtin::W1Tight && k < 3) continue;
      const auto rec = growth(IdealSpec::make_builtin(b, k), {8});
      for (int n = 1; n <= 8; ++n) CHECK(*rec.counts.at(n).count == builtin_count_by_enumeration(b, k, n));
    }
}

TEST_CASE("enumerated builtin members satisfy their predicate") {
  std::vector<Coloring> out;
  builtin_count_by_enumeration(Builtin::S, 3, 8, &out);
  CHECK(out.size() == 13);
  CHECK(census_distinct(out) == 13);
  auto fam = s_family_colorings(3, 8);
  std::sort(fam.begin(), fam.end());
  std::sort(out.begin(), out.end());
  CHECK(fam == out);
  CHECK(census_distinct({out[0], out[0], out[0]}) == 1);
  CHECK_THROWS_AS(census_distinct({Coloring(3, 2, 4), Coloring(3, 2, 5)}), IncompatibleColorings);
}

TEST_CASE("avoid engine agrees with brute force") {
  Lcg rng(17);
  for (int t = 0; t < 25; ++t) {
    std::vector<Coloring> basis;
    const int size = rng.range(1, 2);
    for (int i = 0; i < size; ++i) {
      const int m = rng.range(3, 5);
      Coloring b(3, 2, m);
      for (std::size_t r = 0; r < b.edge_count(); ++r) b.set(r, static_cast<Color>(rng.bit()));
      basis.push_back(b);
    }
    // 2^20 colorings at n = 6, so only a few trials go that far
    const int top = t < 4 ? 6 : 5;
    const auto rec = growth(IdealSpec::avoid(basis, 3, 2), {top});
    for (int n = 1; n <= top; ++n) CHECK(*rec.counts.at(n).count == avoid_brute(basis, 3, n));
  }
  // graphs: avoid an edge-free triple
  const auto tri = growth(IdealSpec::avoid({bits(2, 3, "000")}, 2, 2), {6});
  for (int n = 1; n <= 6; ++n) CHECK(*tri.counts.at(n).count == avoid_brute({bits(2, 3, "000")}, 2, n));
}

TEST_CASE("basis elements smaller than k") {
  const auto rec = growth(IdealSpec::avoid({Coloring(3, 2, 2)}, 3, 2), {5});
  CHECK(*rec.counts.at(1).count == 1);
  CHECK(*rec.counts.at(2).count == 0);
  CHECK(*rec.counts.at(5).count == 0);
}

TEST_CASE("members are downward closed") {
  const auto spec = IdealSpec::avoid({bits(3, 4, "0110")}, 3, 2);
  for (int n = 2; n <= 6; ++n) {
    const auto members = avoid_members(spec, n);
    const auto smaller = avoid_members(spec, n - 1);
    std::set<Coloring> lower(smaller.begin(), smaller.end());
    for (const auto& c : members)
      for (int v = 1; v <= n; ++v) {
        std::vector<Vertex> keep;
        for (int x = 1; x <= n; ++x)
          if (x != v) keep.push_back(x);
        CHECK(lower.count(restrict_normalize(c, keep)) == 1);
      }
  }
}

TEST_CASE("growth is deterministic across jobs") {
  const auto spec = IdealSpec::avoid({bits(3, 4, "1001"), bits(3, 5, "0101010101")}, 3, 2);
  const auto one = growth(spec, {6, 100'000'000, 1});
  for (int jobs : {2, 3, 8}) {
    const auto many = growth(spec, {6, 100'000'000, jobs});
    for (int n = 1; n <= 6; ++n) CHECK(*many.counts.at(n).count == *one.counts.at(n).count);
    CHECK(many.nodes == one.nodes);
  }
}

TEST_CASE("budget produces partial records") {
  const auto spec = IdealSpec::avoid({bits(3, 4, "0000")}, 3, 2);
  const auto rec = growth(spec, {6, 5000, 2});
  CHECK_FALSE(rec.complete());
  CHECK(rec.last_exact() >= 3);
  CHECK(rec.last_exact() < 6);
  CHECK_FALSE(rec.counts.at(6).count.has_value());
  for (int n = 1; n <= rec.last_exact(); ++n) CHECK(rec.counts.at(n).exact);
  CHECK_THROWS(avoid_members(spec, 6, 1, 5000));
}

TEST_CASE("verdicts") {
  const auto lin = growth(IdealSpec::make_builtin(Builtin::LinearTight, 3), {10});
  const auto v = dichotomy_verdict(lin, Theorem::Constant, 3);
  CHECK(v.linear_floor);
  CHECK(v.linear_floor_tight);
  CHECK_FALSE(v.violation);

  const auto mono = growth(IdealSpec::avoid({bits(3, 3, "0"), bits(3, 3, "1")}, 3, 2), {8});
  for (int n = 3; n <= 8; ++n) CHECK(*mono.counts.at(n).count == 0);
  const auto mv = dichotomy_verdict(mono, Theorem::Constant, 3);
  CHECK(mv.constant_tail);
  CHECK_FALSE(mv.violation);

  const auto s = growth(IdealSpec::make_builtin(Builtin::S, 3), {12});
  const auto sv = dichotomy_verdict(s, Theorem::QuasiFibonacci, 3);
  CHECK(sv.equals_g);
  CHECK(sv.meets_g_floor);
  CHECK(sv.classification == "g-floor-equality");
  CHECK(sv.caveat.find("window") != std::string::npos);

  CHECK_THROWS(dichotomy_verdict(GrowthRecord{}, Theorem::Constant, 3));
}

TEST_CASE("cache round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "hypergrowth_test_cache.tsv").string();
  std::remove(path.c_str());
  const auto spec = IdealSpec::avoid({bits(3, 4, "0110")}, 3, 2);
  const auto first = growth_cached(spec, {5}, path);
  const auto stored = cache_lookup(path, spec_digest(spec));
  CHECK(stored.size() == 5);
  CHECK(*stored.at(5).count == *first.counts.at(5).count);
  const auto again = growth_cached(spec, {5}, path);
  CHECK(again.nodes == 0);  // served from the cache
  CHECK(*again.counts.at(4).count == *first.counts.at(4).count);
  CHECK(cache_lookup(path, "0000000000000000").empty());
  std::remove(path.c_str());
}

TEST_CASE("p-tame count sanity") {
  // every coloring on at most 5 vertices is 3-tame; the n = 6 figure is a regression value
  // from an exhaustive run, far below the n^(10 p^6) bound
  for (int n = 1; n <= 6; ++n) {
    const std::size_t E = binomial(n, 3);
    std::size_t tame = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << E); ++mask) {
      std::vector<Color> cols(E);
      for (std::size_t i = 0; i < E; ++i) cols[i] = static_cast<Color>((mask >> i) & 1);
      tame += is_p_tame(Coloring(3, 2, n, cols), 3).tame();
    }
    CHECK(tame == (n <= 5 ? std::size_t{1} << E : std::size_t{1031116}));
  }
}
