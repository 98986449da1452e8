#include "hypergrowth/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "hypergrowth/constructions.hpp"
#include "hypergrowth/ideals.hpp"
#include "hypergrowth/matrices.hpp"
#include "hypergrowth/structure.hpp"

namespace hypergrowth {

namespace {

std::string str(const BigInt& x) { return x.str(); }

struct Check {
  bool ok = true;
  std::ostringstream why;
  void fail(const std::string& s) {
    if (ok) why << s;
    ok = false;
  }
};

std::string join(const std::vector<int>& xs) { return format_indices(xs); }

// --- 1 -----------------------------------------------------------------------
void sequences_check(Check& ck) {
  const int g[] = {1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41};
  const int f[] = {1, 1, 2, 3, 5, 8, 13, 21};
  for (int n = 1; n <= 11; ++n)
    if (g_sequence(n) != g[n - 1]) ck.fail("G_" + std::to_string(n) + "=" + str(g_sequence(n)));
  for (int n = 1; n <= 8; ++n)
    if (fibonacci(n) != f[n - 1]) ck.fail("F_" + std::to_string(n) + "=" + str(fibonacci(n)));
  if (ck.ok) ck.why << "G_1..G_11 and F_1..F_8 exact";
}

// --- 2 -----------------------------------------------------------------------
void s3_check(Check& ck, int jobs) {
  for (int n = 1; n <= 12; ++n) {
    const BigInt fam = s_family_count(3, n, jobs);
    const BigInt pred = builtin_count_by_enumeration(Builtin::S, 3, n);
    const BigInt comp = compositions_1k(n, 3);
    const auto listed = s_family_colorings(3, n);
    bool members = std::all_of(listed.begin(), listed.end(), [](const Coloring& c) { return builtin_member(Builtin::S, 3, c); });
    if (fam != g_sequence(n) || pred != g_sequence(n) || comp != g_sequence(n) || !members ||
        census_distinct(listed) != listed.size())
      ck.fail("n=" + std::to_string(n) + " families=" + str(fam) + " predicate=" + str(pred) + " compositions=" + str(comp));
  }
  if (ck.ok) ck.why << "|S(3)_n|=G_n for n=1..12 by families, predicate enumeration and compositions";
}

// --- 3, 4 --------------------------------------------------------------------
void linear_check(Check& ck) {
  for (int n = 3; n <= 12; ++n) {
    const BigInt c = builtin_count_by_enumeration(Builtin::LinearTight, 3, n);
    if (c != n - 1) ck.fail("n=" + std::to_string(n) + " count=" + str(c));
  }
  if (ck.ok) ck.why << "|X_n|=n-1 for n=3..12";
}

void w1_check(Check& ck) {
  for (int n = 2; n <= 10; ++n) {
    const BigInt c = builtin_count_by_enumeration(Builtin::W1Tight, 3, n);
    if (c != BigInt(1) << (n - 2)) ck.fail("n=" + std::to_string(n) + " count=" + str(c));
  }
  if (ck.ok) ck.why << "|X_n|=2^(n-2) for n=2..10";
}

// --- 5 -----------------------------------------------------------------------
void constructions_check(Check& ck) {
  {
    const auto e = embed_string("0100101", StringMode::Identity);
    const auto hay = StarMatrix2::identity(8);
    if (e.rows != std::vector<int>{2, 4, 5, 7} || e.cols != std::vector<int>{1, 2, 5, 7})
      ck.fail("string-identity selection rows=" + join(e.rows) + " cols=" + join(e.cols));
    if (!(submatrix(hay, e.rows, e.cols) == e.matrix) || !find_submatrix(hay, e.matrix)) ck.fail("string-identity not a submatrix");
  }
  {
    const auto e = embed_string("01110", StringMode::Upper);
    const auto hay = StarMatrix2::upper(9);
    if (e.rows != std::vector<int>{3, 4, 9} || e.cols != std::vector<int>{1, 4, 7})
      ck.fail("string-upper selection rows=" + join(e.rows) + " cols=" + join(e.cols));
    if (!(submatrix(hay, e.rows, e.cols) == e.matrix) || !find_submatrix(hay, e.matrix)) ck.fail("string-upper not a submatrix");
  }
  {
    const Chain a{9, {{1, 2}, {3, 4}, {4, 6}, {8, 8}}};
    const auto e = embed_chain(a);
    StarMatrix2 bar(10, 10);
    for (auto [i, j] : a.points) bar.set(i, j, Entry::One);
    bar.set(10, 10, Entry::One);
    if (e.bar_size != 15 || !(submatrix(StarMatrix2::identity(15), e.bar_rows, e.bar_cols) == bar) ||
        !find_submatrix(StarMatrix2::identity(15), bar))
      ck.fail("chain embedding into I_15 failed");
    if (e.size != 14 || !(submatrix(StarMatrix2::identity(14), e.rows, e.cols) == chain_matrix(a)))
      ck.fail("chain A* not in I_14");
  }
  {
    const auto s = make_string_coloring("01010001010", 1, 13);
    const std::vector<Vertex> want{1, 17, 20, 21, 26, 27, 32, 35, 38, 39, 44, 45, 50};
    if (s.S != want) ck.fail("string-coloring S=" + to_string(s.S));
    const auto inj = contains(s.member, s.host);
    if (!inj || !(restrict_normalize(s.host, inj->images) == s.member)) ck.fail("string-coloring member not contained");
    if (!(restrict_normalize(s.host, s.S) == s.member)) ck.fail("string-coloring restriction to S differs");
  }
  {
    const auto d = make_disobedient(26, {1, 2, 6, 7, 9}, {2, 3, 4, 6, 8});
    if (d.spec.r != 16 || d.host.n() != 64 || d.spec.S.size() != 26 || d.member.n() != 26)
      ck.fail("disobedient sizes r=" + std::to_string(d.spec.r) + " host=" + std::to_string(d.host.n()));
    if (!(restrict_normalize(d.host, d.embedding.images) == d.member)) ck.fail("disobedient embedding does not restrict to member");
    const auto inj = contains(d.member, d.host);
    if (!inj) ck.fail("disobedient containment search found nothing");
  }
  if (ck.ok) ck.why << "string, chain, string-coloring and disobedient examples reproduced and checked by search";
}

// --- 6 -----------------------------------------------------------------------
void inequalities_check(Check& ck, std::uint64_t seed) {
  Lcg rng(seed);
  int bad2 = 0, bad3 = 0;
  for (int t = 0; t < 10000; ++t) {
    const int r = rng.range(1, 12), s = rng.range(1, 12);
    StarMatrix2 m(r, s);
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= s; ++j) m.set(i, j, rng.bit() ? Entry::One : Entry::Zero);
    const auto x = metrics2(m);
    const long R = static_cast<long>(x.R.size()), C = static_cast<long>(x.C.size()), a = x.al - 1;
    if (R > a * (2 * C + 1) || C > a * (2 * R + 1)) {
      if (!bad2) ck.fail("2D violation at sample " + std::to_string(t));
      ++bad2;
    }
  }
  for (int t = 0; t < 1000; ++t) {
    const int r = rng.range(1, 8), s = rng.range(1, 8), u = rng.range(1, 8);
    StarMatrix3 m(r, s, u);
    for (int k = 1; k <= u; ++k)
      for (int j = 1; j <= s; ++j)
        for (int i = 1; i <= r; ++i) m.set(i, j, k, rng.bit() ? Entry::One : Entry::Zero);
    const auto x = metrics3(m);
    const long R = static_cast<long>(x.R.size()), C = static_cast<long>(x.C.size()), S = static_cast<long>(x.S.size());
    const long a = x.al - 1;
    auto bound = [&](long p, long q) { const long mm = std::max(p, q); return a * (mm + 1) * (mm + 1); };
    if (S > bound(R, C) || R > bound(C, S) || C > bound(R, S)) {
      if (!bad3) ck.fail("3D violation at sample " + std::to_string(t));
      ++bad3;
    }
  }
  if (ck.ok) ck.why << "10000 2D and 1000 3D samples, seed=" << seed << ", zero violations";
}

// --- 7 -----------------------------------------------------------------------
void chains_check(Check& ck) {
  for (int m = 1; m <= 6; ++m) {
    const auto chains = all_chains(m);
    const auto paths = all_paths(m);
    const auto want = binomial(2 * m, m);
    if (chains.size() != want || paths.size() != want)
      ck.fail("m=" + std::to_string(m) + " chains=" + std::to_string(chains.size()) + " paths=" + std::to_string(paths.size()));
    std::set<std::vector<std::pair<int, int>>> images;
    for (const auto& c : chains) {
      const auto p = chain_to_path(c);
      if (!(path_to_chain(p) == c)) ck.fail("round trip failed for a chain, m=" + std::to_string(m));
      images.insert(p.points);
    }
    for (const auto& p : paths)
      if (!(chain_to_path(path_to_chain(p)) == p)) ck.fail("round trip failed for a path, m=" + std::to_string(m));
    if (images.size() != want) ck.fail("chain_to_path not injective, m=" + std::to_string(m));
    std::size_t corner = 0;
    for (const auto& c : chains)
      if (std::none_of(c.points.begin(), c.points.end(), [&](auto pt) { return pt.first == m || pt.second == m; })) ++corner;
    if (corner != binomial(2 * m - 2, m - 1))
      ck.fail("m=" + std::to_string(m) + " zero last row/col chains=" + std::to_string(corner));
  }
  if (ck.ok) ck.why << "C(2m,m) chains and paths, bijective round trip, corner count C(2m-2,m-1), m=1..6";
}

// --- 8 -----------------------------------------------------------------------
void embeddings_check(Check& ck) {
  std::size_t strings = 0, chains = 0;
  for (auto mode : {StringMode::Identity, StringMode::Upper}) {
    for (int n = 1; n <= 4; ++n) {
      const int len = 2 * n - 1;
      for (int bits = 0; bits < (1 << len); ++bits) {
        std::string w;
        for (int i = len - 1; i >= 0; --i) w += ((bits >> i) & 1) ? '1' : '0';
        if (!string_admissible(w, mode)) continue;
        const auto e = embed_string(w, mode);
        const auto host = string_host(n, mode);
        bool ok = submatrix(host, e.rows, e.cols) == e.matrix && find_submatrix(host, e.matrix).has_value();
        for (int i = 1; i <= n && ok; ++i) {
          ok = e.matrix(i, i) == entry_from_char(w[static_cast<std::size_t>(2 * i - 2)]);
          if (ok && i < n) ok = e.matrix(i, i + 1) == entry_from_char(w[static_cast<std::size_t>(2 * i - 1)]);
        }
        if (!ok) ck.fail("string " + w + " failed");
        ++strings;
      }
    }
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : all_chains(n)) {
      const auto e = embed_chain(a);
      const int k = static_cast<int>(a.points.size());
      const auto host = StarMatrix2::identity(2 * n - k);
      if (e.size != 2 * n - k || !(submatrix(host, e.rows, e.cols) == chain_matrix(a)) ||
          !find_submatrix(host, chain_matrix(a)))
        ck.fail("chain embedding failed, n=" + std::to_string(n));
      ++chains;
    }
  if (ck.ok) ck.why << strings << " strings and " << chains << " chains embedded and verified";
}

// --- 9 -----------------------------------------------------------------------
void wealthy_check(Check& ck) {
  std::size_t trips = 0;
  for (auto f : all_families()) {
    const auto variants = wealthy_variants(f);
    const bool global_rev = f == WealthyFamily::W1p || f == WealthyFamily::W1pp || f == WealthyFamily::W41 ||
                            f == WealthyFamily::W42;
    for (int r = 1; r <= 5; ++r)
      for (const auto& v : variants) {
        const std::string tag = to_string(f) + " r=" + std::to_string(r) + " " + to_string(f, v);
        const Coloring c = make_wealthy(f, r, v);
        const auto w = is_wealthy(c, f, r, v);
        if (!w || !(w->variant == v)) {
          ck.fail(tag + " not recognized with its variant");
          continue;
        }
        const auto all = matching_variants(c, f, r);
        if (std::find(all.begin(), all.end(), v) == all.end()) ck.fail(tag + " missing from matching variants");
        if (!is_wealthy(c, f, r)) ck.fail(tag + " not recognized without a variant filter");
        // closure: reversing the colors' vertex order stays inside the family
        if (global_rev && !is_wealthy(reverse(c), f, r)) ck.fail(tag + " reversal left the family");
        ++trips;
      }
  }
  if (ck.ok) ck.why << trips << " family/r/variant round trips, reversal closure for W1 and W4";
}

// --- 10 ----------------------------------------------------------------------
void worked_example_check(Check& ck) {
  const auto m = StarMatrix2::from_rows({"00011**11*010"});
  const auto x = metrics2(m);
  if (x.R != std::vector<int>{3, 11, 12}) ck.fail("R=" + join(x.R));
  else ck.why << "R=" << join(x.R);
}

// --- 11 ----------------------------------------------------------------------
void window_check(Check& ck, int jobs, std::uint64_t budget) {
  const auto recs = window_scan(jobs, budget);
  for (const auto& r : recs)
    if (!r.ok) ck.fail("basis " + r.basis + " -> " + r.classification);
  if (ck.ok) {
    std::size_t with7 = 0;
    for (const auto& r : recs) with7 += r.counts.size() >= 7;
    ck.why << recs.size() << " bases classified, " << with7 << " extended to n=7";
  }
}

// --- 12 ----------------------------------------------------------------------
void rich_strings_check(Check& ck) {
  for (int r = 4; r <= 7; ++r)
    for (int f = 0; f <= 3; ++f)
      for (int g = 1; f + g <= 3; ++g) {
        const int h = 3 - f - g;
        const Coloring rich = make_rich(3, r, f, g, h, 0, 1);
        const auto dels = rich_deletions(rich, r, f, g, h);
        if (dels.size() != static_cast<std::size_t>(r - 1) || census_distinct(dels) != dels.size())
          ck.fail("rich r=" + std::to_string(r) + " type (" + std::to_string(f) + "," + std::to_string(g) + "," +
                  std::to_string(h) + ") deletions not distinct");
      }
  for (int n = 2; n <= 18; ++n) {
    const BigInt want = fibonacci(n);
    if (strings_avoiding(n - 2, "00").size() != want || strings_avoiding(n - 2, "11").size() != want)
      ck.fail("part 1 fails at n=" + std::to_string(n));
    std::size_t p = 0, q = 0;
    for (const auto& w : strings_avoiding(n - 2, "")) {
      p += avoids_paired(w, "01", "10");
      q += avoids_paired(w, "10", "01");
    }
    if (p != want || q != want) ck.fail("part 2 fails at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 40; ++n) {
    const BigInt f = fibonacci(n), g = g_sequence(n);
    if (!(BigInt(1) << n > f) || f < g || (n > 4 && f == g)) ck.fail("part 3 fails at n=" + std::to_string(n));
  }
  if (ck.ok) ck.why << "rich deletions distinct for r=4..7, string counts F_n for n<=18, F_n>G_n for 4<n<=40";
}

// --- 13 ----------------------------------------------------------------------
void determinism_check(Check& ck, std::uint64_t budget) {
  for (int n = 1; n <= 12; ++n)
    if (s_family_count(3, n, 1) != s_family_count(3, n, 8)) ck.fail("S(3) census differs at n=" + std::to_string(n));
  const auto a = window_scan(1, budget);
  const auto b = window_scan(8, budget);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].counts != b[i].counts) ck.fail("window counts differ for basis " + a[i].basis);
  if (ck.ok) ck.why << "criteria 2 and 11 counts identical for jobs=1 and jobs=8";
}

struct Def {
  const char* name;
  double limit;
};

const Def kDefs[kCriteria] = {
    {"sequences", 1},        {"tight-s3", 1},          {"linear-tight", 1},  {"w1-tight", 1},
    {"worked-constructions", 5},          {"matrix-inequalities", 30}, {"chains-paths", 10}, {"embeddings", 30},
    {"wealthy-round-trips", 30}, {"worked-example", 1},  {"window-scan", 600}, {"rich-and-strings", 10},
    {"determinism", 1200},
};

}  // namespace

BigInt s_family_count(int k, int n, int jobs) {
  const int starts = std::max(0, n - k + 1);
  const std::uint64_t total = std::uint64_t{1} << starts;
  jobs = std::max(1, jobs);
  std::vector<std::uint64_t> part(static_cast<std::size_t>(jobs), 0);
  auto work = [&](int w) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(jobs);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(jobs);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      int last = -k;
      bool ok = true;
      for (int s = 1; s <= starts && ok; ++s)
        if ((mask >> (s - 1)) & 1) {
          ok = s >= last + k;
          last = s;
        }
      part[static_cast<std::size_t>(w)] += ok;
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();
  BigInt sum = 0;
  for (auto p : part) sum += p;
  return sum;
}

std::vector<WindowRecord> window_scan(int jobs, std::uint64_t budget) {
  std::vector<WindowRecord> out;
  for (int bits = 0; bits < 16; ++bits) {
    std::vector<Color> cols(4);
    for (int i = 0; i < 4; ++i) cols[static_cast<std::size_t>(i)] = static_cast<Color>((bits >> (3 - i)) & 1);
    const Coloring basis(3, 2, 4, cols);
    const auto spec = IdealSpec::avoid({basis}, 3, 2);
    WindowRecord rec;
    for (auto c : cols) rec.basis += static_cast<char>('0' + c);
    GrowthRecord g = growth(spec, {6, budget, jobs});
    if (g.complete() && *g.counts.at(6).count <= 100000) {
      GrowthRecord g7 = growth(spec, {7, budget, jobs});
      if (g7.complete()) g = g7;
    }
    for (const auto& [n, e] : g.counts) {
      if (!e.exact) break;
      rec.counts.push_back(str(*e.count));
    }
    if (!g.complete()) {
      rec.classification = "budget exceeded";
      out.push_back(rec);
      continue;
    }
    const auto v = dichotomy_verdict(g, Theorem::Constant, 3);
    rec.classification = v.classification;
    rec.ok = !v.violation && (v.constant_tail || v.linear_floor);
    out.push_back(rec);
  }
  return out;
}

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
  if (id < 1 || id > kCriteria) throw InvalidArgument("no acceptance criterion " + std::to_string(id));
  CriterionResult res;
  res.id = id;
  res.name = kDefs[id - 1].name;
  res.limit = kDefs[id - 1].limit;
  Check ck;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: sequences_check(ck); break;
      case 2: s3_check(ck, opt.jobs); break;
      case 3: linear_check(ck); break;
      case 4: w1_check(ck); break;
      case 5: constructions_check(ck); break;
      case 6: inequalities_check(ck, opt.seed); break;
      case 7: chains_check(ck); break;
      case 8: embeddings_check(ck); break;
      case 9: wealthy_check(ck); break;
      case 10: worked_example_check(ck); break;
      case 11: window_check(ck, opt.jobs, opt.budget); break;
      case 12: rich_strings_check(ck); break;
      case 13: determinism_check(ck, opt.budget); break;
    }
  } catch (const std::exception& e) {
    ck.fail(std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.pass = ck.ok && res.seconds < res.limit;
  res.detail = ck.why.str();
  if (ck.ok && !res.pass) res.detail += " (over the time limit)";
  return res;
}

std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<int> ids;
  if (suite == "all") {
    for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
  } else {
    std::istringstream is(suite);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        ids.push_back(std::stoi(tok));
      } catch (const std::logic_error&) {
        throw InvalidArgument("bad suite entry '" + tok + "'");
      }
    }
  }
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id, opt));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion=" << r.id << " name=" << r.name << " status=" << (r.pass ? "pass" : "FAIL") << " time="
     << std::fixed;
  os.precision(3);
  os << r.seconds << "s limit=" << r.limit << "s detail=" << r.detail;
  return os.str();
}

}  // namespace hypergrowth
