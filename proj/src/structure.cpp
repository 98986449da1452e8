#include "hypergrowth/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hypergrowth {

std::vector<Vertex> Interval::vertices() const {
  std::vector<Vertex> v(static_cast<std::size_t>(std::max(0, size())));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// ---------------------------------------------------------------------------

NuclearDecomposition nuclear_decomposition(const Coloring& c) {
  NuclearDecomposition out;
  const int n = c.n(), k = c.k();
  int lo = 1;
  while (lo <= n) {
    int hi = lo;
    std::optional<Color> ref;
    // [lo, hi] is monochromatic; try to absorb hi + 1
    while (hi < n) {
      const int v = hi + 1;
      bool ok = true;
      if (v - lo + 1 >= k) {
        std::vector<Vertex> e(static_cast<std::size_t>(k));
        for_each_subset(lo, hi, k - 1, [&](std::span<const Vertex> s) {
          std::copy(s.begin(), s.end(), e.begin());
          e.back() = v;
          const Color col = c.at(edge_rank(e.data(), n, k));
          if (!ref) ref = col;
          if (col != *ref) ok = false;
          return ok;
        });
      }
      if (!ok) break;
      hi = v;
    }
    out.intervals.push_back({lo, hi});
    const auto verts = out.intervals.back().vertices();
    out.verdicts.push_back(homogeneity(c, verts));
    lo = hi + 1;
  }
  return out;
}

StarMatrix3 crossing_matrix(const Coloring& c, const std::vector<Vertex>& x, const std::vector<Vertex>& y,
                            const std::vector<Vertex>& z) {
  if (c.k() != 3) throw InvalidArgument("crossing matrices are defined for k = 3");
  if (x.empty() || y.empty() || z.empty()) throw InvalidArgument("crossing matrix base sets must be nonempty");
  for (const auto* set : {&x, &y, &z})
    for (Vertex v : *set)
      if (v < 1 || v > c.n()) throw InvalidArgument("base set vertex out of range");
  StarMatrix3 m(static_cast<int>(x.size()), static_cast<int>(y.size()), static_cast<int>(z.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      for (std::size_t k = 0; k < z.size(); ++k) {
        std::array<Vertex, 3> e{x[i], y[j], z[k]};
        std::sort(e.begin(), e.end());
        Entry val = Entry::Star;
        if (e[0] != e[1] && e[1] != e[2]) val = c.at(edge_rank(e.data(), c.n(), 3)) ? Entry::One : Entry::Zero;
        m.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, static_cast<int>(k) + 1, val);
      }
  return m;
}

TameReport is_p_tame(const Coloring& c, int p) {
  if (p < 3) throw InvalidArgument("p-tameness needs p >= 3");
  if (c.k() != 3 || c.l() != 2) throw InvalidArgument("p-tameness is defined for two-colorings of triples");
  TameReport rep;
  rep.p = p;
  const auto nu = nuclear_decomposition(c);
  const int s = nu.length();
  auto fail = [&](int cond, std::vector<int> tuple, std::string metric, int value) {
    rep.verdicts[static_cast<std::size_t>(cond - 1)] = false;
    rep.witness = TameViolation{cond, std::move(tuple), std::move(metric), value};
    return rep;
  };
  if (s > p) return fail(1, {}, "s", s);
  rep.verdicts[0] = true;

  std::vector<std::vector<Vertex>> I;
  for (const auto& iv : nu.intervals) I.push_back(iv.vertices());

  std::vector<std::pair<std::vector<int>, Metrics3>> triples;
  for (int u = 1; u <= s; ++u)
    for (int v = u + 1; v <= s; ++v)
      for (int w = v + 1; w <= s; ++w)
        triples.push_back({{u, v, w}, metrics3(crossing_matrix(c, I[u - 1], I[v - 1], I[w - 1]))});
  // pairs: M_{Iu,Iu,Iv} then M_{Iu,Iv,Iv}
  std::vector<std::pair<std::vector<int>, std::array<Metrics3, 2>>> pairs;
  for (int u = 1; u <= s; ++u)
    for (int v = u + 1; v <= s; ++v)
      pairs.push_back({{u, v},
                       {metrics3(crossing_matrix(c, I[u - 1], I[u - 1], I[v - 1])),
                        metrics3(crossing_matrix(c, I[u - 1], I[v - 1], I[v - 1]))}});

  for (const auto& [t, m] : triples)
    if (m.al > p) return fail(2, t, "al", m.al);
  rep.verdicts[1] = true;
  for (const auto& [t, m] : triples) {
    if (static_cast<int>(m.R.size()) > p) return fail(3, t, "|R|", static_cast<int>(m.R.size()));
    if (static_cast<int>(m.C.size()) > p) return fail(3, t, "|C|", static_cast<int>(m.C.size()));
  }
  rep.verdicts[2] = true;
  for (const auto& [t, ms] : pairs)
    for (const auto& m : ms)
      if (m.al > p) return fail(4, t, "al", m.al);
  rep.verdicts[3] = true;
  for (const auto& [t, ms] : pairs)
    for (const auto& m : ms) {
      if (static_cast<int>(m.R.size()) > p) return fail(5, t, "|R|", static_cast<int>(m.R.size()));
      if (static_cast<int>(m.C.size()) > p) return fail(5, t, "|C|", static_cast<int>(m.C.size()));
    }
  rep.verdicts[4] = true;
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<Edge> rich_edges(int k, int r, int f, int g, int h) {
  if (f < 0 || h < 0 || g < 1 || f + g + h != k) throw InvalidArgument("rich type needs f,h >= 0, g >= 1, f+g+h = k");
  if (r < k) throw InvalidArgument("rich colorings need r >= k");
  const int n = 2 * r - k + 1;
  std::vector<Edge> out;
  for (int i = 1; i <= r - k + 2; ++i) {
    Edge e;
    for (int x = 1; x <= f; ++x) e.push_back(x);
    for (int x = f + i; x <= f + g + i - 1; ++x) e.push_back(x);
    for (int x = n - h + 1; x <= n; ++x) e.push_back(x);
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<RichWitness> is_r_rich(const Coloring& c, int r) {
  const int k = c.k();
  if (r < k || c.n() != 2 * r - k + 1) return std::nullopt;
  for (int f = 0; f <= k - 1; ++f)
    for (int g = 1; f + g <= k; ++g) {
      const int h = k - f - g;
      auto edges = rich_edges(k, r, f, g, h);
      const Color a = c(edges.front());
      bool ok = true;
      for (std::size_t i = 1; i + 1 < edges.size() && ok; ++i) ok = c(edges[i]) == a;
      const Color b = c(edges.back());
      if (ok && b != a) return RichWitness{r, f, g, h, a, b, std::move(edges)};
    }
  return std::nullopt;
}

std::optional<SimplicityViolation> is_c_simple(const Coloring& c, int cpar) {
  const int n = c.n(), k = c.k();
  if (cpar < 0) throw InvalidArgument("simplicity parameter must be nonnegative");
  if (n <= 2 * cpar + k) return std::nullopt;

  std::vector<Vertex> middle;
  for (int v = cpar + 1; v <= n - cpar; ++v) middle.push_back(v);
  const auto hom = homogeneity(c, middle);
  if (hom.kind == Homogeneity::Kind::NotHomogeneous) return SimplicityViolation{1, hom.first, hom.second};

  std::vector<Vertex> anchors;
  for (int v = 1; v <= cpar; ++v) anchors.push_back(v);
  for (int v = n - cpar + 1; v <= n; ++v) anchors.push_back(v);

  std::optional<SimplicityViolation> found;
  for (Vertex v1 : anchors) {
    // remaining k-2 vertices: any subset of [n] \ {v1}
    std::vector<Vertex> others;
    for (int v = 1; v <= n; ++v)
      if (v != v1) others.push_back(v);
    std::vector<int> pick(static_cast<std::size_t>(k - 2));
    std::iota(pick.begin(), pick.end(), 1);
    const int m = static_cast<int>(others.size());
    do {
      Edge vs{v1};
      for (int idx : pick) vs.push_back(others[static_cast<std::size_t>(idx - 1)]);
      std::optional<Edge> first;
      Color ref = 0;
      for (int w = 2 * cpar + 1; w <= n - 2 * cpar; ++w) {
        if (std::find(vs.begin(), vs.end(), w) != vs.end()) continue;
        Edge e = vs;
        e.push_back(w);
        std::sort(e.begin(), e.end());
        const Color col = c(e);
        if (!first) {
          first = e;
          ref = col;
        } else if (col != ref) {
          return SimplicityViolation{2, *first, e};
        }
      }
    } while (k > 2 && next_combination(pick, m));
  }
  return found;
}

// ---------------------------------------------------------------------------

std::string to_string(WealthyFamily f) {
  switch (f) {
    case WealthyFamily::W1p: return "W1'";
    case WealthyFamily::W1pp: return "W1''";
    case WealthyFamily::W21: return "W2.1";
    case WealthyFamily::W22: return "W2.2";
    case WealthyFamily::W31: return "W3.1";
    case WealthyFamily::W32: return "W3.2";
    case WealthyFamily::W33: return "W3.3";
    case WealthyFamily::W41: return "W4.1";
    case WealthyFamily::W42: return "W4.2";
  }
  return "?";
}

WealthyFamily parse_family(const std::string& name) {
  for (auto f : all_families())
    if (to_string(f) == name) return f;
  if (name == "W1p" || name == "W1") return WealthyFamily::W1p;
  if (name == "W1pp") return WealthyFamily::W1pp;
  throw ParseError("unknown wealthy family '" + name + "'");
}

std::vector<WealthyFamily> all_families() {
  return {WealthyFamily::W1p, WealthyFamily::W1pp, WealthyFamily::W21, WealthyFamily::W22, WealthyFamily::W31,
          WealthyFamily::W32, WealthyFamily::W33, WealthyFamily::W41, WealthyFamily::W42};
}

int wealthy_size(WealthyFamily f, int r) {
  if (r < 1) throw InvalidArgument("wealthy colorings need r >= 1");
  switch (f) {
    case WealthyFamily::W1p:
    case WealthyFamily::W1pp: return r;
    case WealthyFamily::W21:
    case WealthyFamily::W22: return 2 * r + 1;
    case WealthyFamily::W31:
    case WealthyFamily::W32: return 3 * r;
    case WealthyFamily::W33: return 3 * r + 1;
    case WealthyFamily::W41:
    case WealthyFamily::W42: return 4 * r;
  }
  return 0;
}

namespace {

bool uses_global_reversal(WealthyFamily f) {
  return f == WealthyFamily::W1p || f == WealthyFamily::W1pp || f == WealthyFamily::W33 || f == WealthyFamily::W41;
}

// Canonical block sizes and how many leading blocks may be reversed.
std::vector<int> block_sizes(WealthyFamily f, int r) {
  switch (f) {
    case WealthyFamily::W21:
    case WealthyFamily::W22: return {r, r, 1};
    case WealthyFamily::W31:
    case WealthyFamily::W32: return {r, r, r};
    case WealthyFamily::W42: return {r, 3 * r};
    default: return {};
  }
}

int reversible_blocks(WealthyFamily f) {
  switch (f) {
    case WealthyFamily::W21:
    case WealthyFamily::W22: return 2;
    case WealthyFamily::W31:
    case WealthyFamily::W32: return 3;
    case WealthyFamily::W42: return 1;
    default: return 0;
  }
}

int block_count(WealthyFamily f) {
  switch (f) {
    case WealthyFamily::W21:
    case WealthyFamily::W22:
    case WealthyFamily::W31:
    case WealthyFamily::W32: return 3;
    case WealthyFamily::W42: return 2;
    default: return 0;
  }
}

std::string interval_text(const std::vector<Vertex>& s) {
  std::vector<Vertex> v = s;
  std::sort(v.begin(), v.end());
  bool contiguous = true;
  for (std::size_t i = 1; i < v.size(); ++i) contiguous = contiguous && v[i] == v[i - 1] + 1;
  if (v.empty()) return "[]";
  if (contiguous) {
    if (v.size() == 1) return "[" + std::to_string(v[0]) + "]";
    return "[" + std::to_string(v.front()) + "," + std::to_string(v.back()) + "]";
  }
  return to_string(std::span<const Vertex>(v));
}

}  // namespace

std::string to_string(WealthyFamily f, const WealthyVariant& v) {
  std::string s = std::string("swap:") + (v.swap ? "1" : "0");
  if (uses_global_reversal(f)) return s + ",grev:" + (v.grev ? "1" : "0");
  s += ",rev:";
  for (bool b : v.rev) s += b ? '1' : '0';
  s += ",perm:";
  for (int p : v.perm) s += std::to_string(p);
  return s;
}

WealthyVariant parse_variant(WealthyFamily f, const std::string& text) {
  WealthyVariant v;
  if (!uses_global_reversal(f)) {
    v.rev.assign(static_cast<std::size_t>(reversible_blocks(f)), false);
    v.perm.resize(static_cast<std::size_t>(block_count(f)));
    std::iota(v.perm.begin(), v.perm.end(), 1);
  }
  if (text.empty() || text == "plain") return v;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError("variant fields look like key:value");
    const std::string key = tok.substr(0, colon), val = tok.substr(colon + 1);
    auto bit = [&](const std::string& b) {
      if (b != "0" && b != "1") throw ParseError("variant flag must be 0 or 1");
      return b == "1";
    };
    if (key == "swap") {
      v.swap = bit(val);
    } else if (key == "grev" && uses_global_reversal(f)) {
      v.grev = bit(val);
    } else if (key == "rev" && !uses_global_reversal(f)) {
      if (val.size() != v.rev.size()) throw ParseError("wrong number of reversal flags for " + to_string(f));
      for (std::size_t i = 0; i < val.size(); ++i) v.rev[i] = bit(val.substr(i, 1));
    } else if (key == "perm" && !uses_global_reversal(f)) {
      if (val.size() != v.perm.size()) throw ParseError("wrong permutation length for " + to_string(f));
      std::vector<int> p;
      for (char ch : val) p.push_back(ch - '0');
      std::vector<int> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) throw ParseError("variant permutation is not a permutation");
      v.perm = p;
    } else {
      throw ParseError("variant field '" + key + "' does not apply to " + to_string(f));
    }
  }
  return v;
}

std::vector<WealthyVariant> wealthy_variants(WealthyFamily f) {
  std::vector<WealthyVariant> out;
  for (int swap = 0; swap < 2; ++swap) {
    if (uses_global_reversal(f)) {
      for (int g = 0; g < 2; ++g) {
        WealthyVariant v;
        v.swap = swap;
        v.grev = g;
        out.push_back(v);
      }
      continue;
    }
    const int nr = reversible_blocks(f), nb = block_count(f);
    for (int mask = 0; mask < (1 << nr); ++mask) {
      std::vector<int> perm(static_cast<std::size_t>(nb));
      std::iota(perm.begin(), perm.end(), 1);
      do {
        WealthyVariant v;
        v.swap = swap;
        for (int b = 0; b < nr; ++b) v.rev.push_back((mask >> (nr - 1 - b)) & 1);
        v.perm = perm;
        out.push_back(v);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

std::vector<Vertex> variant_map(WealthyFamily f, int r, const WealthyVariant& v) {
  const int n = wealthy_size(f, r);
  std::vector<Vertex> map(static_cast<std::size_t>(n + 1), 0);
  if (uses_global_reversal(f)) {
    for (int x = 1; x <= n; ++x) map[static_cast<std::size_t>(x)] = v.grev ? n - x + 1 : x;
    return map;
  }
  const auto sizes = block_sizes(f, r);
  const int nb = static_cast<int>(sizes.size());
  if (v.perm.empty() && v.rev.empty()) {
    // a default-constructed variant means the family's identity arrangement
    WealthyVariant id = v;
    id.rev.assign(static_cast<std::size_t>(reversible_blocks(f)), 0);
    id.perm.resize(static_cast<std::size_t>(nb));
    std::iota(id.perm.begin(), id.perm.end(), 1);
    return variant_map(f, r, id);
  }
  if (static_cast<int>(v.perm.size()) != nb || static_cast<int>(v.rev.size()) != reversible_blocks(f))
    throw InvalidArgument("variant does not fit family " + to_string(f));
  std::vector<int> start(static_cast<std::size_t>(nb), 0), offset(static_cast<std::size_t>(nb), 0);
  for (int b = 1; b < nb; ++b) start[static_cast<std::size_t>(b)] = start[static_cast<std::size_t>(b - 1)] + sizes[static_cast<std::size_t>(b - 1)];
  int run = 0;
  for (int p : v.perm) {
    offset[static_cast<std::size_t>(p - 1)] = run;
    run += sizes[static_cast<std::size_t>(p - 1)];
  }
  for (int b = 0; b < nb; ++b) {
    const int sz = sizes[static_cast<std::size_t>(b)];
    const bool rv = b < static_cast<int>(v.rev.size()) && v.rev[static_cast<std::size_t>(b)];
    for (int u = 1; u <= sz; ++u)
      map[static_cast<std::size_t>(start[static_cast<std::size_t>(b)] + u)] =
          offset[static_cast<std::size_t>(b)] + (rv ? sz - u + 1 : u);
  }
  return map;
}

PartialColoring canonical_pattern(WealthyFamily f, int r) {
  const int n = wealthy_size(f, r);
  PartialColoring p(3, 2, n);
  switch (f) {
    case WealthyFamily::W1p:
      for (int i = 3; i <= r; ++i) p.set({1, 2, i}, i % 2 == 0 ? 1 : 0);
      break;
    case WealthyFamily::W1pp:
      for (int i = 2; i <= r - 1; ++i) p.set({1, i, r}, i % 2 == 0 ? 1 : 0);
      break;
    case WealthyFamily::W21:
    case WealthyFamily::W22:
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
          p.set({i, r + j, 2 * r + 1}, f == WealthyFamily::W21 ? i == j : i <= j);
      break;
    case WealthyFamily::W31:
    case WealthyFamily::W32:
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
          p.set({i, r + i, 2 * r + j}, f == WealthyFamily::W31 ? i == j : i <= j);
      break;
    case WealthyFamily::W33:
      for (int i = 1; i <= r; ++i) {
        p.set({3 * i - 2, 3 * i - 1, n}, 1);
        p.set({3 * i - 2, 3 * i, n}, 0);
      }
      break;
    case WealthyFamily::W41:
      for (int i = 1; i <= r; ++i) {
        const int a = 4 * i - 3;
        p.set({a, a + 1, a + 2}, 0);
        p.set({a, a + 1, a + 3}, 1);
        p.set({a, a + 2, a + 3}, 1);
        p.set({a + 1, a + 2, a + 3}, 1);
      }
      break;
    case WealthyFamily::W42:
      for (int i = 1; i <= r; ++i) {
        p.set({i, r + 3 * i - 2, r + 3 * i - 1}, 0);
        p.set({i, r + 3 * i - 2, r + 3 * i}, 1);
      }
      break;
  }
  return p;
}

namespace {

// q(E) = c(map(E)) xor swap, over the canonical frame.
Coloring pull_back(const Coloring& c, const std::vector<Vertex>& map, bool swap) {
  const int n = c.n();
  Coloring q(3, 2, n);
  std::vector<Vertex> e(3);
  std::size_t rank = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int d = b + 1; d <= n; ++d) {
        std::array<Vertex, 3> img{map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)],
                                  map[static_cast<std::size_t>(d)]};
        std::sort(img.begin(), img.end());
        q.set(rank++, static_cast<Color>(c.at(edge_rank(img.data(), n, 3)) ^ (swap ? 1 : 0)));
      }
  return q;
}

Color col3(const Coloring& q, Vertex a, Vertex b, Vertex c) {
  std::array<Vertex, 3> e{a, b, c};
  std::sort(e.begin(), e.end());
  return q.at(edge_rank(e.data(), q.n(), 3));
}

// First (a, b, c) of distinct block members with col(a,b) != col(a,c), b < c.
template <class PairColor>
std::optional<std::array<Vertex, 3>> split_triple(const std::array<Vertex, 3>& block, PairColor col) {
  for (Vertex a : block)
    for (Vertex b : block)
      for (Vertex d : block) {
        if (a == b || a == d || b >= d) continue;
        if (col(a, b) != col(a, d)) return std::array<Vertex, 3>{a, b, d};
      }
  return std::nullopt;
}

std::optional<WealthyWitness> check_variant(const Coloring& c, WealthyFamily f, int r, const WealthyVariant& v) {
  const auto map = variant_map(f, r, v);
  const Coloring q = pull_back(c, map, v.swap);
  const int n = c.n();
  WealthyWitness w;
  w.family = f;
  w.r = r;
  w.variant = v;
  auto img = [&](Vertex x) { return map[static_cast<std::size_t>(x)]; };
  auto image_set = [&](int lo, int hi) {
    std::vector<Vertex> s;
    for (int x = lo; x <= hi; ++x) s.push_back(img(x));
    std::sort(s.begin(), s.end());
    return s;
  };

  switch (f) {
    case WealthyFamily::W33: {
      for (int i = 1; i <= r; ++i) {
        const std::array<Vertex, 3> blk{3 * i - 2, 3 * i - 1, 3 * i};
        auto t = split_triple(blk, [&](Vertex x, Vertex y) { return col3(q, x, y, n); });
        if (!t) return std::nullopt;
        w.triples.push_back({img((*t)[0]), img((*t)[1]), img((*t)[2])});
        w.base_sets.push_back(image_set(3 * i - 2, 3 * i));
      }
      w.base_sets.push_back({img(n)});
      return w;
    }
    case WealthyFamily::W41: {
      for (int i = 1; i <= r; ++i) {
        const int a = 4 * i - 3;
        const Color c0 = col3(q, a, a + 1, a + 2);
        if (col3(q, a, a + 1, a + 3) == c0 && col3(q, a, a + 2, a + 3) == c0 && col3(q, a + 1, a + 2, a + 3) == c0)
          return std::nullopt;
        w.base_sets.push_back(image_set(a, a + 3));
      }
      return w;
    }
    case WealthyFamily::W42: {
      for (int i = 1; i <= r; ++i) {
        const std::array<Vertex, 3> blk{r + 3 * i - 2, r + 3 * i - 1, r + 3 * i};
        auto t = split_triple(blk, [&](Vertex x, Vertex y) { return col3(q, i, x, y); });
        if (!t) return std::nullopt;
        w.triples.push_back({img((*t)[0]), img((*t)[1]), img((*t)[2])});
      }
      w.base_sets = {image_set(1, r), image_set(r + 1, 4 * r)};
      return w;
    }
    default: break;
  }

  const PartialColoring pat = canonical_pattern(f, r);
  for (std::size_t rank = 0; rank < pat.edge_count(); ++rank) {
    const int want = pat.at(rank);
    if (want != PartialColoring::kWild && q.at(rank) != want) return std::nullopt;
  }
  switch (f) {
    case WealthyFamily::W21:
    case WealthyFamily::W22: w.base_sets = {image_set(1, r), image_set(r + 1, 2 * r), image_set(n, n)}; break;
    case WealthyFamily::W31:
    case WealthyFamily::W32: w.base_sets = {image_set(1, r), image_set(r + 1, 2 * r), image_set(2 * r + 1, 3 * r)}; break;
    default: w.base_sets = {image_set(1, n)}; break;
  }
  return w;
}

void check_input(const Coloring& c, WealthyFamily f, int r) {
  if (c.k() != 3 || c.l() != 2) throw InvalidArgument("wealthy families are two-colorings of triples");
  const int n = wealthy_size(f, r);
  if (c.n() != n)
    throw SizeMismatch(to_string(f) + " with r=" + std::to_string(r) + " needs n=" + std::to_string(n) + ", got n=" +
                       std::to_string(c.n()));
}

}  // namespace

std::optional<WealthyWitness> is_wealthy(const Coloring& c, WealthyFamily f, int r,
                                         const std::optional<WealthyVariant>& only) {
  check_input(c, f, r);
  if (only) return check_variant(c, f, r, *only);
  for (const auto& v : wealthy_variants(f))
    if (auto w = check_variant(c, f, r, v)) return w;
  return std::nullopt;
}

std::vector<WealthyVariant> matching_variants(const Coloring& c, WealthyFamily f, int r) {
  check_input(c, f, r);
  std::vector<WealthyVariant> out;
  for (const auto& v : wealthy_variants(f))
    if (check_variant(c, f, r, v)) out.push_back(v);
  return out;
}

std::string to_string(const WealthyWitness& w) {
  std::string s = "wealthy family=" + to_string(w.family) + " r=" + std::to_string(w.r) +
                  " variant=" + to_string(w.family, w.variant) + " base=";
  for (std::size_t i = 0; i < w.base_sets.size(); ++i) {
    if (i) s += '|';
    s += interval_text(w.base_sets[i]);
  }
  if (!w.triples.empty()) {
    s += " triples=";
    for (std::size_t i = 0; i < w.triples.size(); ++i) {
      if (i) s += ';';
      s += "(" + std::to_string(w.triples[i][0]) + "," + std::to_string(w.triples[i][1]) + "," +
           std::to_string(w.triples[i][2]) + ")";
    }
  }
  return s;
}

}  // namespace hypergrowth
