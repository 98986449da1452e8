#include "hypergrowth/core.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>

namespace hypergrowth {

namespace {

constexpr int kTableSize = 160;

struct BinomialTable {
  std::array<std::array<std::uint64_t, kTableSize>, kTableSize> v{};
  BinomialTable() {
    for (int n = 0; n < kTableSize; ++n) {
      v[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        // saturate instead of wrapping; entries this large are never used as sizes
        const std::uint64_t a = v[n - 1][k - 1];
        const std::uint64_t b = k < n ? v[n - 1][k] : 0;
        v[n][k] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
      }
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

void check_shape(int k, int l, int n) {
  if (k < 1) throw InvalidArgument("uniformity k must be >= 1");
  if (l < 1 || l > 255) throw InvalidArgument("color count l must be in [1, 255]");
  if (n < 0 || n >= kTableSize) throw InvalidArgument("vertex count n out of range");
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n < kTableSize) return table().v[n][k];
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::size_t edge_rank(const Vertex* edge, int n, int k) {
  // sum over positions of the number of subsets that agree on the prefix and
  // have a smaller entry at this position
  const auto& t = table().v;
  std::size_t rank = 0;
  Vertex prev = 0;
  for (int i = 0; i < k; ++i) {
    const int m = k - i;  // remaining slots including this one
    rank += t[n - prev][m] - t[n - edge[i] + 1][m];
    prev = edge[i];
  }
  return rank;
}

std::size_t edge_index(std::span<const Vertex> edge, int n, int k) {
  if (static_cast<int>(edge.size()) != k) throw InvalidEdge("edge arity differs from k");
  if (n >= kTableSize) throw InvalidEdge("vertex count too large");
  Vertex prev = 0;
  for (Vertex v : edge) {
    if (v <= prev || v > n) throw InvalidEdge("edge " + to_string(edge) + " is not a sorted subset of [" + std::to_string(n) + "]");
    prev = v;
  }
  return edge_rank(edge.data(), n, k);
}

Edge edge_unindex(std::size_t rank, int n, int k) {
  if (k < 0 || k > n || rank >= binomial(n, k)) throw InvalidEdge("edge rank out of range");
  Edge e;
  e.reserve(static_cast<std::size_t>(k));
  Vertex v = 1;
  for (int i = 0; i < k; ++i) {
    const int m = k - i;
    for (;; ++v) {
      const std::uint64_t block = binomial(n - v, m - 1);  // subsets with this entry here
      if (rank < block) break;
      rank -= block;
    }
    e.push_back(v);
    ++v;
  }
  return e;
}

bool next_combination(std::vector<Vertex>& tuple, int n) {
  const int m = static_cast<int>(tuple.size());
  int i = m - 1;
  while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - m + i + 1) --i;
  if (i < 0) return false;
  ++tuple[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < m; ++j) tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

void for_each_subset(int lo, int hi, int m, const std::function<bool(std::span<const Vertex>)>& fn) {
  const int width = hi - lo + 1;
  if (m < 0 || m > std::max(width, 0)) return;
  std::vector<Vertex> idx(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Vertex> cur(static_cast<std::size_t>(m));
  do {
    for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)] + lo - 1;
    if (!fn(cur)) return;
  } while (next_combination(idx, width));
}

// ---------------------------------------------------------------------------

Coloring::Coloring(int k, int l, int n, Color fill) : k_(k), l_(l), n_(n) {
  check_shape(k, l, n);
  if (fill >= l) throw InvalidArgument("fill color out of range");
  colors_.assign(static_cast<std::size_t>(binomial(n, k)), fill);
}

Coloring::Coloring(int k, int l, int n, std::vector<Color> colors) : k_(k), l_(l), n_(n), colors_(std::move(colors)) {
  check_shape(k, l, n);
  if (colors_.size() != binomial(n, k)) throw InvalidArgument("color vector length must be C(n, k)");
  for (Color c : colors_)
    if (c >= l) throw InvalidArgument("color out of range");
}

Color Coloring::operator()(std::span<const Vertex> edge) const { return colors_[edge_index(edge, n_, k_)]; }

Color Coloring::operator()(std::initializer_list<Vertex> edge) const {
  return (*this)(std::span<const Vertex>(edge.begin(), edge.size()));
}

void Coloring::set(std::size_t rank, Color c) {
  if (c >= l_) throw InvalidArgument("color out of range");
  colors_.at(rank) = c;
}

void Coloring::set(std::span<const Vertex> edge, Color c) { set(edge_index(edge, n_, k_), c); }

void Coloring::set(std::initializer_list<Vertex> edge, Color c) { set(std::span<const Vertex>(edge.begin(), edge.size()), c); }

bool Coloring::operator<(const Coloring& o) const {
  if (k_ != o.k_) return k_ < o.k_;
  if (l_ != o.l_) return l_ < o.l_;
  if (n_ != o.n_) return n_ < o.n_;
  return colors_ < o.colors_;
}

PartialColoring::PartialColoring(int k, int l, int n) : k_(k), l_(l), n_(n) {
  check_shape(k, l, n);
  colors_.assign(static_cast<std::size_t>(binomial(n, k)), static_cast<std::int8_t>(kWild));
}

PartialColoring::PartialColoring(const Coloring& c) : k_(c.k()), l_(c.l()), n_(c.n()) {
  colors_.reserve(c.edge_count());
  for (Color x : c.colors()) colors_.push_back(static_cast<std::int8_t>(x));
}

int PartialColoring::operator()(std::initializer_list<Vertex> edge) const {
  return colors_[edge_index(std::span<const Vertex>(edge.begin(), edge.size()), n_, k_)];
}

void PartialColoring::set_rank(std::size_t rank, int c) {
  if (c != kWild && (c < 0 || c >= l_)) throw InvalidArgument("color out of range");
  colors_.at(rank) = static_cast<std::int8_t>(c);
}

void PartialColoring::set(std::span<const Vertex> edge, int c) { set_rank(edge_index(edge, n_, k_), c); }

void PartialColoring::set(std::initializer_list<Vertex> edge, int c) {
  set(std::span<const Vertex>(edge.begin(), edge.size()), c);
}

Coloring PartialColoring::fill(Color fill) const {
  std::vector<Color> out;
  out.reserve(colors_.size());
  for (auto x : colors_) out.push_back(x == kWild ? fill : static_cast<Color>(x));
  return Coloring(k_, l_, n_, std::move(out));
}

std::size_t PartialColoring::specified_count() const {
  return static_cast<std::size_t>(std::count_if(colors_.begin(), colors_.end(), [](auto x) { return x != kWild; }));
}

// ---------------------------------------------------------------------------

Coloring restrict_normalize(const Coloring& c, std::span<const Vertex> subset) {
  if (subset.empty()) throw InvalidArgument("restriction to an empty vertex set");
  std::vector<Vertex> xs(subset.begin(), subset.end());
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) throw InvalidArgument("repeated vertex in restriction set");
  if (xs.front() < 1 || xs.back() > c.n()) throw InvalidArgument("restriction set is not a subset of [n]");

  const int m = static_cast<int>(xs.size());
  const int k = c.k();
  Coloring out(k, c.l(), m);
  if (m < k) return out;
  std::vector<Vertex> local(static_cast<std::size_t>(k));
  std::vector<Vertex> image(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(i)] = i + 1;
  std::size_t rank = 0;
  do {
    for (int i = 0; i < k; ++i) image[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(local[static_cast<std::size_t>(i)] - 1)];
    out.set(rank++, c.at(edge_rank(image.data(), c.n(), k)));
  } while (next_combination(local, m));
  return out;
}

Coloring reverse(const Coloring& c) {
  const int n = c.n();
  const int k = c.k();
  Coloring out(k, c.l(), n);
  if (n < k) return out;
  std::vector<Vertex> e(static_cast<std::size_t>(k));
  std::vector<Vertex> mirrored(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  std::size_t rank = 0;
  do {
    for (int i = 0; i < k; ++i) mirrored[static_cast<std::size_t>(k - 1 - i)] = n - e[static_cast<std::size_t>(i)] + 1;
    out.set(rank++, c.at(edge_rank(mirrored.data(), n, k)));
  } while (next_combination(e, n));
  return out;
}

namespace {

// Depth-first extension of an increasing injection. Before vertex j is placed
// every pattern edge whose largest vertex is j is checked against `big`.
template <class PatternColor>
std::optional<Injection> embed(int m, int k, std::size_t pattern_edges, PatternColor pattern_color, const Coloring& big) {
  const int n = big.n();
  if (m > n) return std::nullopt;
  if (m == 0) return Injection{};

  struct Check {
    std::vector<Vertex> others;  // k-1 smaller pattern vertices
    int color;
  };
  std::vector<std::vector<Check>> checks(static_cast<std::size_t>(m + 1));
  for (std::size_t r = 0; r < pattern_edges; ++r) {
    const int col = pattern_color(r);
    if (col < 0) continue;
    Edge e = edge_unindex(r, m, k);
    const Vertex last = e.back();
    e.pop_back();
    checks[static_cast<std::size_t>(last)].push_back(Check{std::move(e), col});
  }

  // Dense lookup by vertex tuple (base n+1) when it fits comfortably.
  std::vector<Color> dense;
  double cells = 1;
  for (int i = 0; i < k; ++i) cells *= n + 1;
  if (cells <= 1 << 24) {
    dense.assign(static_cast<std::size_t>(cells), 0);
    std::vector<Vertex> e(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    std::size_t r = 0;
    if (n >= k) do {
        std::size_t key = 0;
        for (Vertex v : e) key = key * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(v);
        dense[key] = big.at(r++);
      } while (next_combination(e, n));
  }

  std::vector<Vertex> f(static_cast<std::size_t>(m + 1), 0);
  std::vector<Vertex> buf(static_cast<std::size_t>(k));
  auto fits = [&](int j) {
    for (const Check& ch : checks[static_cast<std::size_t>(j)]) {
      Color got;
      if (!dense.empty()) {
        std::size_t key = 0;
        for (Vertex v : ch.others) key = key * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(f[static_cast<std::size_t>(v)]);
        got = dense[key * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(f[static_cast<std::size_t>(j)])];
      } else {
        for (int i = 0; i + 1 < k; ++i) buf[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(ch.others[static_cast<std::size_t>(i)])];
        buf[static_cast<std::size_t>(k - 1)] = f[static_cast<std::size_t>(j)];
        got = big.at(edge_rank(buf.data(), n, k));
      }
      if (got != ch.color) return false;
    }
    return true;
  };

  // iterative DFS over f(1) < f(2) < ... < f(m)
  int j = 1;
  f[1] = 0;
  while (j >= 1) {
    ++f[static_cast<std::size_t>(j)];
    if (f[static_cast<std::size_t>(j)] > n - (m - j)) {
      --j;
      continue;
    }
    if (!fits(j)) continue;
    if (j == m) {
      Injection inj;
      inj.images.assign(f.begin() + 1, f.end());
      return inj;
    }
    f[static_cast<std::size_t>(j + 1)] = f[static_cast<std::size_t>(j)];
    ++j;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Injection> contains(const Coloring& small, const Coloring& big) {
  if (small.k() != big.k() || small.l() != big.l())
    throw IncompatibleColorings("containment needs equal uniformity and color count");
  return embed(small.n(), small.k(), small.edge_count(), [&](std::size_t r) { return static_cast<int>(small.at(r)); }, big);
}

std::optional<Injection> contains(const PartialColoring& small, const Coloring& big) {
  if (small.k() != big.k() || small.l() != big.l())
    throw IncompatibleColorings("containment needs equal uniformity and color count");
  return embed(small.n(), small.k(), small.edge_count(), [&](std::size_t r) { return small.at(r); }, big);
}

Homogeneity homogeneity(const Coloring& c, std::span<const Vertex> vertices) {
  std::vector<Vertex> a(vertices.begin(), vertices.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  Homogeneity h;
  const int k = c.k();
  if (static_cast<int>(a.size()) < k) return h;

  std::vector<Vertex> idx(static_cast<std::size_t>(k));
  std::vector<Vertex> e(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  bool first = true;
  do {
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)] - 1)];
    const Color col = c(e);
    if (first) {
      h.first = e;
      h.color = col;
      first = false;
    } else if (col != h.color) {
      h.kind = Homogeneity::Kind::NotHomogeneous;
      h.second = e;
      return h;
    }
  } while (next_combination(idx, static_cast<int>(a.size())));
  h.kind = Homogeneity::Kind::Homogeneous;
  h.first.clear();
  return h;
}

// ---------------------------------------------------------------------------

std::string to_string(std::span<const Vertex> vertices) {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vertices[i]);
  }
  return s + "}";
}

void write_coloring(std::ostream& out, const Coloring& c) {
  out << "coloring k=" << c.k() << " l=" << c.l() << " n=" << c.n() << '\n';
  if (c.n() < c.k()) return;
  if (c.l() == 2) {
    out << "bits ";
    for (Color x : c.colors()) out << static_cast<char>('0' + x);
    out << '\n';
    return;
  }
  for (std::size_t r = 0; r < c.edge_count(); ++r) {
    for (Vertex v : edge_unindex(r, c.n(), c.k())) out << v << ' ';
    out << static_cast<int>(c.at(r)) << '\n';
  }
}

std::string to_string(const Coloring& c) {
  std::ostringstream os;
  write_coloring(os, c);
  return os.str();
}

namespace {

int parse_key(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) throw ParseError("expected " + key + "=<int>, got '" + token + "'");
  try {
    std::size_t used = 0;
    const int v = std::stoi(token.substr(key.size() + 1), &used);
    if (used != token.size() - key.size() - 1) throw ParseError("bad integer in '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer in '" + token + "'");
  }
}

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Coloring read_coloring(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("missing coloring header");
  std::istringstream hs(line);
  std::string word, tk, tl, tn;
  hs >> word >> tk >> tl >> tn;
  if (word != "coloring") throw ParseError("expected 'coloring' header, got '" + line + "'");
  const int k = parse_key(tk, "k");
  const int l = parse_key(tl, "l");
  const int n = parse_key(tn, "n");
  if (k < 1 || l < 1 || l > 255 || n < 0 || n >= kTableSize) throw ParseError("coloring header out of range: " + line);
  Coloring c(k, l, n);
  if (n < k) return c;

  if (!next_content_line(in, line)) throw ParseError("missing coloring body");
  std::istringstream first(line);
  std::string head;
  first >> head;
  if (head == "bits") {
    if (l != 2) throw ParseError("bits form requires l=2");
    std::string bits;
    first >> bits;
    if (bits.size() != c.edge_count()) throw ParseError("bits length differs from C(n,k)");
    for (std::size_t r = 0; r < bits.size(); ++r) {
      if (bits[r] != '0' && bits[r] != '1') throw ParseError("bits must be 0/1");
      c.set(r, static_cast<Color>(bits[r] - '0'));
    }
    return c;
  }

  std::vector<bool> seen(c.edge_count(), false);
  for (std::size_t count = 0; count < c.edge_count(); ++count) {
    if (count > 0 && !next_content_line(in, line)) throw ParseError("coloring body ended early");
    std::istringstream ls(line);
    Edge e(static_cast<std::size_t>(k));
    int col = -1;
    for (auto& v : e) ls >> v;
    ls >> col;
    if (!ls) throw ParseError("malformed edge line '" + line + "'");
    std::size_t r = 0;
    try {
      r = edge_index(e, n, k);
    } catch (const InvalidEdge& err) {
      throw ParseError(err.what());
    }
    if (seen[r]) throw ParseError("edge listed twice: " + to_string(e));
    if (col < 0 || col >= l) throw ParseError("color out of range in '" + line + "'");
    seen[r] = true;
    c.set(r, static_cast<Color>(col));
  }
  return c;
}

Coloring parse_coloring(const std::string& text) {
  std::istringstream is(text);
  return read_coloring(is);
}

}  // namespace hypergrowth
