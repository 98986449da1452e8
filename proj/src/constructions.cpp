#include "hypergrowth/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hypergrowth {

Coloring make_rich(int k, int r, int f, int g, int h, Color a, Color b, Color filler, int l) {
  if (a == b) throw InvalidArgument("rich colorings need a != b");
  if (a >= l || b >= l || filler >= l) throw InvalidArgument("color out of range");
  const auto edges = rich_edges(k, r, f, g, h);
  Coloring c(k, l, 2 * r - k + 1, filler);
  for (std::size_t i = 0; i < edges.size(); ++i) c.set(edges[i], i + 1 < edges.size() ? a : b);
  return c;
}

std::vector<std::vector<Vertex>> rich_deletion_sets(int k, int r, int f, int g, int h) {
  rich_edges(k, r, f, g, h);  // validates the type
  const int n = 2 * r - k + 1, drop = r - k + 1;
  std::vector<std::vector<Vertex>> out;
  for (int j = 0; j <= drop; ++j) {
    const int left_hi = f + j;                      // removes f+1 .. f+j
    const int right_lo = n - h - (drop - j) + 1;    // removes right_lo .. n-h
    std::vector<Vertex> keep;
    for (int v = 1; v <= n; ++v)
      if (!(v > f && v <= left_hi) && !(v >= right_lo && v <= n - h)) keep.push_back(v);
    out.push_back(std::move(keep));
  }
  return out;
}

std::vector<Coloring> rich_deletions(const Coloring& rich, int r, int f, int g, int h) {
  if (rich.n() != 2 * r - rich.k() + 1) throw SizeMismatch("coloring is not of rich size 2r-k+1");
  std::vector<Coloring> out;
  for (const auto& keep : rich_deletion_sets(rich.k(), r, f, g, h)) out.push_back(restrict_normalize(rich, keep));
  return out;
}

namespace {

template <class Out>
void push_forward(WealthyFamily f, int r, const WealthyVariant& v, Out& out) {
  const PartialColoring pat = canonical_pattern(f, r);
  const auto map = variant_map(f, r, v);
  const int n = pat.n();
  for (std::size_t rank = 0; rank < pat.edge_count(); ++rank) {
    const int col = pat.at(rank);
    if (col == PartialColoring::kWild) continue;
    Edge e = edge_unindex(rank, n, 3);
    for (auto& x : e) x = map[static_cast<std::size_t>(x)];
    std::sort(e.begin(), e.end());
    out.set(std::span<const Vertex>(e), static_cast<Color>(col ^ (v.swap ? 1 : 0)));
  }
}

}  // namespace

Coloring make_wealthy(WealthyFamily f, int r, const WealthyVariant& v, Color filler) {
  if (filler > 1) throw InvalidArgument("wealthy colorings use colors 0 and 1");
  Coloring out(3, 2, wealthy_size(f, r), filler);
  push_forward(f, r, v, out);
  return out;
}

PartialColoring make_wealthy_partial(WealthyFamily f, int r, const WealthyVariant& v) {
  PartialColoring out(3, 2, wealthy_size(f, r));
  push_forward(f, r, v, out);
  return out;
}

// ---------------------------------------------------------------------------

void validate(const Chain& c) {
  if (c.m < 0) throw InvalidArgument("chain size must be nonnegative");
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const auto [row, col] = c.points[i];
    if (row < 1 || row > c.m || col < 1 || col > c.m) throw InvalidArgument("chain point outside [m]^2");
    if (i && (row <= c.points[i - 1].first || col <= c.points[i - 1].second))
      throw InvalidArgument("chain points must increase in both coordinates");
  }
}

void validate(const SoutheastPath& p) {
  if (p.m < 0) throw InvalidArgument("path size must be nonnegative");
  if (static_cast<int>(p.points.size()) != 2 * p.m + 1) throw InvalidArgument("southeast path needs 2m+1 points");
  if (p.points.front() != std::pair{1, 1} || p.points.back() != std::pair{p.m + 1, p.m + 1})
    throw InvalidArgument("southeast path must run from (1,1) to (m+1,m+1)");
  for (std::size_t i = 1; i < p.points.size(); ++i) {
    const int dr = p.points[i].first - p.points[i - 1].first;
    const int dc = p.points[i].second - p.points[i - 1].second;
    if (!((dr == 1 && dc == 0) || (dr == 0 && dc == 1))) throw InvalidArgument("southeast path step must be right or down");
  }
}

StarMatrix2 chain_matrix(const Chain& c) {
  validate(c);
  if (c.m < 1) throw InvalidArgument("chain matrix needs m >= 1");
  StarMatrix2 a(c.m, c.m);
  for (auto [row, col] : c.points) a.set(row, col, Entry::One);
  return a;
}

SoutheastPath chain_to_path(const Chain& c) {
  validate(c);
  SoutheastPath p{c.m, {{1, 1}}};
  int row = 1, col = 1;
  auto right = [&] { p.points.push_back({row, ++col}); };
  auto down = [&] { p.points.push_back({++row, col}); };
  for (auto [cr, cc] : c.points) {
    while (col < cc) right();
    while (row < cr + 1) down();
    right();
  }
  while (col < c.m + 1) right();
  while (row < c.m + 1) down();
  return p;
}

Chain path_to_chain(const SoutheastPath& p) {
  validate(p);
  Chain c{p.m, {}};
  for (std::size_t t = 1; t + 1 < p.points.size(); ++t) {
    const bool came_down = p.points[t].first == p.points[t - 1].first + 1;
    const bool goes_right = p.points[t + 1].second == p.points[t].second + 1;
    if (came_down && goes_right) c.points.push_back(p.points[t - 1]);
  }
  return c;
}

std::vector<Chain> all_chains(int m) {
  std::vector<Chain> out;
  Chain cur{m, {}};
  auto rec = [&](auto&& self, int row0, int col0) -> void {
    out.push_back(cur);
    for (int row = row0 + 1; row <= m; ++row)
      for (int col = col0 + 1; col <= m; ++col) {
        cur.points.push_back({row, col});
        self(self, row, col);
        cur.points.pop_back();
      }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<SoutheastPath> all_paths(int m) {
  std::vector<SoutheastPath> out;
  SoutheastPath cur{m, {{1, 1}}};
  auto rec = [&](auto&& self, int row, int col) -> void {
    if (row == m + 1 && col == m + 1) {
      out.push_back(cur);
      return;
    }
    if (col <= m) {
      cur.points.push_back({row, col + 1});
      self(self, row, col + 1);
      cur.points.pop_back();
    }
    if (row <= m) {
      cur.points.push_back({row + 1, col});
      self(self, row + 1, col);
      cur.points.pop_back();
    }
  };
  rec(rec, 1, 1);
  return out;
}

ChainEmbedding embed_chain(const Chain& a) {
  validate(a);
  const int n = a.m, k = static_cast<int>(a.points.size());
  if (n < 1) throw InvalidArgument("chain embedding needs n >= 1");
  std::vector<int> c{0}, d{0};
  for (auto [row, col] : a.points) {
    c.push_back(row);
    d.push_back(col);
  }
  c.push_back(n + 1);
  d.push_back(n + 1);

  ChainEmbedding e;
  e.bar_size = 2 * n + 1 - k;
  e.bar_rows.assign(static_cast<std::size_t>(n + 1), 0);
  e.bar_cols.assign(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= k + 1; ++i) {
    const int offset = c[i - 1] + d[i - 1] - (i - 1);
    const int cp = c[i] - c[i - 1], dp = d[i] - d[i - 1];
    const int len = cp + dp - 1;
    for (int u = 1; u <= cp; ++u) e.bar_rows[static_cast<std::size_t>(c[i - 1] + u - 1)] = offset + dp - 1 + u;
    for (int v = 1; v <= dp; ++v) e.bar_cols[static_cast<std::size_t>(d[i - 1] + v - 1)] = offset + (v < dp ? v : len);
  }
  e.size = 2 * n - k;
  e.rows.assign(e.bar_rows.begin(), e.bar_rows.end() - 1);
  e.cols.assign(e.bar_cols.begin(), e.bar_cols.end() - 1);

  StarMatrix2 bar(n + 1, n + 1);
  for (auto [row, col] : a.points) bar.set(row, col, Entry::One);
  bar.set(n + 1, n + 1, Entry::One);
  if (submatrix(StarMatrix2::identity(e.bar_size), e.bar_rows, e.bar_cols) != bar)
    throw Error("chain embedding failed its own check");
  if (submatrix(StarMatrix2::identity(e.size), e.rows, e.cols) != chain_matrix(a))
    throw Error("chain embedding failed its own check");
  return e;
}

// ---------------------------------------------------------------------------

bool avoids_paired(const std::string& w, const std::string& odd_bad, const std::string& even_bad) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    // p is 0-based; (w_{p+1}, w_{p+2}) starts at an odd 1-based index when p is even
    const std::string pair = w.substr(p, 2);
    if (p % 2 == 0 && pair == odd_bad) return false;
    if (p % 2 == 1 && pair == even_bad) return false;
  }
  return true;
}

bool string_admissible(const std::string& w, StringMode mode) {
  if (w.size() % 2 == 0) return false;
  if (w.find_first_not_of("01") != std::string::npos) return false;
  if (mode == StringMode::Identity) return w.find("11") == std::string::npos;
  return avoids_paired(w, "10", "01");
}

StarMatrix2 string_host(int n, StringMode mode) {
  return mode == StringMode::Identity ? StarMatrix2::identity(2 * n) : StarMatrix2::upper(3 * n);
}

StringEmbedding embed_string(const std::string& w, StringMode mode) {
  if (!string_admissible(w, mode))
    throw InvalidArgument("string '" + w + "' is not admissible for the " +
                          (mode == StringMode::Identity ? std::string("identity") : std::string("upper")) + " embedding");
  const int n = (static_cast<int>(w.size()) + 1) / 2;
  auto bit = [&](int pos) { return w[static_cast<std::size_t>(pos - 1)] - '0'; };
  StringEmbedding e;
  e.host_size = mode == StringMode::Identity ? 2 * n : 3 * n;
  e.cols.push_back(1);
  for (int i = 1; i <= n; ++i) {
    const int a = bit(2 * i - 1);
    e.rows.push_back(mode == StringMode::Identity ? 2 * i - a : 3 * i - 2 * a);
    if (i < n) {
      const int b = bit(2 * i);
      e.cols.push_back(mode == StringMode::Identity ? 2 * i + 1 - b : 3 * i - 1 + 2 * b);
    }
  }
  e.matrix = submatrix(string_host(n, mode), e.rows, e.cols);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(e.matrix(i, i)) != bit(2 * i - 1)) throw Error("string embedding failed its own check");
    if (i < n && static_cast<int>(e.matrix(i, i + 1)) != bit(2 * i)) throw Error("string embedding failed its own check");
  }
  return e;
}

// ---------------------------------------------------------------------------

StringColoring make_string_coloring(const std::string& w, Color t, int r, Color filler) {
  if (t > 1 || filler > 1) throw InvalidArgument("string colorings use colors 0 and 1");
  if (w.find_first_not_of("01") != std::string::npos) throw InvalidArgument("string must be binary");
  const Color s = static_cast<Color>(1 - t);
  const std::string tt(2, static_cast<char>('0' + t));
  if (w.find(tt) != std::string::npos) throw InvalidArgument("string contains the forbidden substring " + tt);
  if (r < static_cast<int>(w.size()) + 2) throw InvalidArgument("host needs r >= |w| + 2");

  const int n = 4 * r;
  Coloring host(3, 2, n, filler);
  auto block = [&](Vertex y) { return (y - r + 2) / 3; };
  for (int z = 1; z <= r; ++z)
    for (int y1 = r + 1; y1 <= n; ++y1)
      for (int y2 = y1 + 1; y2 <= n; ++y2)
        if (block(y1) != block(y2)) host.set({z, y1, y2}, s);
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j < i; ++j) host.set({j, r + 3 * i - 2, r + 3 * i - 1}, t);
    host.set({i, r + 3 * i - 2, r + 3 * i - 1}, 0);
    host.set({i, r + 3 * i - 2, r + 3 * i}, 1);
  }

  StringColoring out;
  std::set<Vertex> S{1, r + 4};
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    if (w[static_cast<std::size_t>(i - 1)] - '0' == s) {
      out.C.push_back(i);
      S.insert(3 * i + r + 4);
    } else {
      out.D.push_back(i);
      S.insert(3 * i + r + 2);
    }
  }
  out.S.assign(S.begin(), S.end());
  out.member = restrict_normalize(host, out.S);
  out.host = std::move(host);
  for (int i = 2; i + 1 <= out.member.n(); ++i)
    if (out.member({1, i, i + 1}) != w[static_cast<std::size_t>(i - 2)] - '0') throw Error("string coloring failed its own check");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_subset(const std::vector<int>& X, int m, int top, const char* name) {
  if (static_cast<int>(X.size()) != m) throw InvalidArgument(std::string(name) + " must have m elements");
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X[i] < 1 || X[i] > top) throw InvalidArgument(std::string(name) + " element out of range");
    if (i && X[i] <= X[i - 1]) throw InvalidArgument(std::string(name) + " must be strictly increasing");
  }
}

}  // namespace

bool is_disobedient(const Coloring& c, int m, int eps, const std::vector<int>& A, const std::vector<int>& B) {
  const int n = 5 * m + eps, split = 2 * m + eps;
  if (c.k() != 3 || c.n() != n) return false;
  std::set<std::array<Vertex, 3>> F;
  for (int i = 1; i <= m; ++i)
    F.insert({A[static_cast<std::size_t>(i - 1)], split + B[static_cast<std::size_t>(i - 1)] + i - 1,
              split + B[static_cast<std::size_t>(i - 1)] + i});
  for (int z = 1; z <= split; ++z)
    for (int y1 = split + 1; y1 <= n; ++y1)
      for (int y2 = y1 + 1; y2 <= n; ++y2) {
        const Color want = F.count({z, y1, y2}) ? 0 : 1;
        if (c({z, y1, y2}) != want) return false;
      }
  return true;
}

Disobedient make_disobedient(int n, const std::vector<int>& A, const std::vector<int>& B, int host_r, Color filler) {
  if (n < 5) throw InvalidArgument("disobedient colorings need n >= 5");
  if (filler > 1) throw InvalidArgument("disobedient colorings use colors 0 and 1");
  DisobedientSpec sp;
  sp.m = n / 5;
  sp.eps = n % 5;
  sp.n = n;
  sp.r = 3 * sp.m + sp.eps;
  if (host_r != 0 && host_r != sp.r) throw InvalidArgument("host r must be 3m + eps");
  const int m = sp.m, eps = sp.eps, r = sp.r;
  check_subset(A, m, 2 * m + eps, "A");
  check_subset(B, m, 2 * m, "B");
  sp.A = A;
  sp.B = B;

  std::vector<int> a{0}, b{0};
  a.insert(a.end(), A.begin(), A.end());
  b.insert(b.end(), B.begin(), B.end());
  a.push_back(2 * m + eps + 1);
  b.push_back(2 * m + 1);
  sp.t.assign(static_cast<std::size_t>(m + 1), 0);
  for (int i = 0; i <= m; ++i) {
    sp.alpha.push_back(a[i + 1] - a[i] - 1);
    sp.beta.push_back(b[i + 1] - b[i] - 1);
    if (i) sp.t[static_cast<std::size_t>(i)] = a[i] + b[i] - i;
  }
  std::set<Vertex> S;
  for (int i = 0; i <= m; ++i) {
    const int ti = sp.t[static_cast<std::size_t>(i)];
    const int al = sp.alpha[static_cast<std::size_t>(i)], be = sp.beta[static_cast<std::size_t>(i)];
    std::vector<int> Ci, Di;
    for (int x = ti + 1; x <= ti + al; ++x) Ci.push_back(x);
    for (int x = ti + al + 1; x <= ti + al + be; ++x) Di.push_back(x);
    for (int j : Ci) S.insert(j);
    for (int j : Di) S.insert(r + 3 * j - 2);
    if (i) S.insert({ti, r + 3 * ti - 2, r + 3 * ti - 1});
    sp.C.push_back(std::move(Ci));
    sp.D.push_back(std::move(Di));
  }
  sp.S.assign(S.begin(), S.end());
  if (static_cast<int>(sp.S.size()) != n) throw Error("disobedient embedding set has the wrong size");
  for (int i = 1; i <= m; ++i)
    sp.F.push_back({a[i], 2 * m + eps + b[i] + i - 1, 2 * m + eps + b[i] + i});

  for (int i = 1; i <= m; ++i) {
    const int ti = sp.t[static_cast<std::size_t>(i)];
    const auto below = [&](Vertex lim, Vertex floor) {
      return static_cast<int>(std::count_if(sp.S.begin(), sp.S.end(), [&](Vertex x) { return x > floor && x < lim; }));
    };
    sp.z_predecessors.push_back(below(ti, 0));
    sp.y_predecessors.push_back(below(r + 3 * ti - 2, r));
    if (sp.z_predecessors.back() != a[i] - 1 || sp.y_predecessors.back() != b[i] + i - 2)
      throw Error("disobedient predecessor counts disagree");
  }

  Coloring host(3, 2, 4 * r, filler);
  for (int z = 1; z <= r; ++z)
    for (int y1 = r + 1; y1 <= 4 * r; ++y1)
      for (int y2 = y1 + 1; y2 <= 4 * r; ++y2) host.set({z, y1, y2}, 1);
  for (int i = 1; i <= r; ++i) host.set({i, r + 3 * i - 2, r + 3 * i - 1}, 0);

  Disobedient out;
  out.member = restrict_normalize(host, sp.S);
  out.embedding = Injection{sp.S};
  out.host = std::move(host);
  if (!is_disobedient(out.member, m, eps, A, B)) throw Error("disobedient member failed its own check");
  out.spec = std::move(sp);
  return out;
}

// ---------------------------------------------------------------------------

Coloring slice_to_pair_coloring(const Coloring& c) {
  if (c.k() != 3) throw InvalidArgument("the slice takes a coloring of triples");
  if (c.n() < 2) throw InvalidArgument("the slice needs n >= 2");
  const int n = c.n();
  Coloring out(2, c.l(), n - 1);
  for (int x = 1; x <= n - 1; ++x)
    for (int y = x + 1; y <= n - 1; ++y) out.set({x, y}, c({x, y, n}));
  return out;
}

bool is_pair_type2_wealthy(const Coloring& pairs, int r) {
  if (pairs.k() != 2) throw InvalidArgument("expected a coloring of pairs");
  if (pairs.n() != 3 * r) throw SizeMismatch("type-2 wealthy pair colorings have 3r vertices");
  for (int i = 1; i <= r; ++i) {
    const Color x = pairs({3 * i - 2, 3 * i - 1});
    if (pairs({3 * i - 2, 3 * i}) == x && pairs({3 * i - 1, 3 * i}) == x) return false;
  }
  return true;
}

PartialColoring lw2_pattern(const std::string& w) {
  if (w.size() % 2 == 0 || w.find_first_not_of("01") != std::string::npos)
    throw InvalidArgument("pattern string must be binary of odd length 2m-1");
  const int m = (static_cast<int>(w.size()) + 1) / 2;
  PartialColoring p(3, 2, 2 * m + 1);
  for (int i = 1; i <= m; ++i) p.set({i, m + i, 2 * m + 1}, w[static_cast<std::size_t>(2 * i - 2)] - '0');
  for (int i = 1; i < m; ++i) p.set({i, m + 1 + i, 2 * m + 1}, w[static_cast<std::size_t>(2 * i - 1)] - '0');
  return p;
}

std::vector<std::string> strings_avoiding(int length, const std::string& bad) {
  if (length < 0 || length > 30) throw InvalidArgument("string length out of range");
  std::vector<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
    std::string w(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i)
      if ((mask >> (length - 1 - i)) & 1) w[static_cast<std::size_t>(i)] = '1';
    if (bad.empty() || w.find(bad) == std::string::npos) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace hypergrowth
