#include "hypergrowth/ideals.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <climits>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

namespace hypergrowth {

std::string to_string(Builtin b) {
  switch (b) {
    case Builtin::S: return "S";
    case Builtin::LinearTight: return "lineartight";
    case Builtin::W1Tight: return "w1tight";
  }
  return "?";
}

IdealSpec IdealSpec::avoid(std::vector<Coloring> basis, int k, int l) {
  if (k < 2 || l < 2) throw InvalidArgument("ideals need k >= 2 and l >= 2");
  for (const auto& b : basis)
    if (b.k() != k || b.l() != l) throw IncompatibleColorings("basis coloring does not match the ideal's (k, l)");
  IdealSpec s;
  s.kind = Kind::Avoid;
  s.k = k;
  s.l = l;
  s.basis = std::move(basis);
  return s;
}

IdealSpec IdealSpec::make_builtin(hypergrowth::Builtin b, int k) {
  if (k < 2) throw InvalidArgument("ideals need k >= 2");
  if (b == hypergrowth::Builtin::W1Tight && k < 3) throw InvalidArgument("w1tight needs k >= 3");
  IdealSpec s;
  s.kind = Kind::Builtin;
  s.k = k;
  s.l = 2;
  s.builtin = b;
  return s;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string canonical_text(const IdealSpec& spec) {
  std::ostringstream os;
  if (spec.kind == IdealSpec::Kind::Builtin) {
    os << "ideal builtin name=" << to_string(spec.builtin) << " k=" << spec.k << '\n';
    return os.str();
  }
  os << "ideal avoid k=" << spec.k << " l=" << spec.l << '\n';
  auto basis = spec.basis;
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  for (const auto& b : basis) write_coloring(os, b);
  return os.str();
}

std::string spec_digest(const IdealSpec& spec) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(canonical_text(spec));
  return os.str();
}

namespace {

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

Builtin parse_builtin(const std::string& name) {
  const std::string n = lower(name);
  if (n == "s" || n == "s(k)") return Builtin::S;
  if (n == "lineartight" || n == "linear") return Builtin::LinearTight;
  if (n == "w1tight" || n == "w1") return Builtin::W1Tight;
  throw ParseError("unknown builtin ideal '" + name + "'");
}

int key_value(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) throw ParseError("expected " + key + "=<int>, got '" + token + "'");
  try {
    return std::stoi(token.substr(key.size() + 1));
  } catch (const std::logic_error&) {
    throw ParseError("bad integer in '" + token + "'");
  }
}

}  // namespace

IdealSpec read_ideal(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("empty ideal specification");
  std::istringstream hs(lines.front());
  std::string word, kind;
  hs >> word >> kind;
  if (word != "ideal") throw ParseError("expected 'ideal' header");
  if (kind == "builtin") {
    std::string tname, tk;
    hs >> tname >> tk;
    if (tname.rfind("name=", 0) != 0) throw ParseError("expected name=<builtin>");
    const int k = tk.empty() ? 3 : key_value(tk, "k");
    if (lines.size() > 1) throw ParseError("builtin ideal takes no body");
    return IdealSpec::make_builtin(parse_builtin(tname.substr(5)), k);
  }
  if (kind != "avoid") throw ParseError("ideal kind must be avoid or builtin");
  std::string tk, tl;
  hs >> tk >> tl;
  const int k = key_value(tk, "k"), l = key_value(tl, "l");
  std::vector<Coloring> basis;
  std::string block;
  auto flush = [&] {
    if (!block.empty()) basis.push_back(parse_coloring(block));
    block.clear();
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].rfind("coloring", lines[i].find_first_not_of(" \t")) == lines[i].find_first_not_of(" \t")) flush();
    block += lines[i] + "\n";
  }
  flush();
  return IdealSpec::avoid(std::move(basis), k, l);
}

IdealSpec load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ideal file '" + path + "'");
  return read_ideal(in);
}

IdealSpec parse_spec_argument(const std::string& arg) {
  if (arg.rfind("avoid:", 0) == 0) return load_ideal_file(arg.substr(6));
  if (arg.rfind("builtin:", 0) == 0) {
    std::string rest = arg.substr(8);
    int k = 3;
    const auto comma = rest.find(',');
    if (comma != std::string::npos) {
      k = key_value(rest.substr(comma + 1), "k");
      rest = rest.substr(0, comma);
    }
    return IdealSpec::make_builtin(parse_builtin(rest), k);
  }
  throw ParseError("--spec must be avoid:<file> or builtin:<name>,k=<k>");
}

// ---------------------------------------------------------------------------

namespace {

bool is_interval(std::span<const Vertex> e) {
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] != e[i - 1] + 1) return false;
  return true;
}

bool contains_12(std::span<const Vertex> e) { return e.size() >= 2 && e[0] == 1 && e[1] == 2; }

}  // namespace

bool builtin_member(Builtin b, int k, const Coloring& c) {
  if (c.k() != k || c.l() != 2) return false;
  const int n = c.n();
  std::size_t ones = 0;
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t r = 0; r < c.edge_count(); ++r) {
    const Edge e = edge_unindex(r, n, k);
    const Color col = c.at(r);
    switch (b) {
      case Builtin::S:
        if (col == 0) {
          if (!is_interval(e)) return false;
          for (Vertex v : e) {
            if (used[static_cast<std::size_t>(v)]) return false;
            used[static_cast<std::size_t>(v)] = 1;
          }
        }
        break;
      case Builtin::LinearTight:
        if (col == 1 && (++ones > 1 || !is_interval(e))) return false;
        break;
      case Builtin::W1Tight:
        if (col == 1 && !contains_12(e)) return false;
        break;
    }
  }
  return true;
}

BigInt enumerate_members(int k, int l, int n, const std::function<bool(const Coloring&, std::size_t)>& allowed,
                         const std::function<bool(const Coloring&)>& member, std::vector<Coloring>* out) {
  Coloring c(k, l, n);
  const std::size_t E = c.edge_count();
  BigInt count = 0;
  auto rec = [&](auto&& self, std::size_t rank) -> void {
    if (rank == E) {
      if (member(c)) {
        ++count;
        if (out) out->push_back(c);
      }
      return;
    }
    for (int col = 0; col < l; ++col) {
      c.set(rank, static_cast<Color>(col));
      if (allowed(c, rank)) self(self, rank + 1);
    }
  };
  rec(rec, 0);
  return count;
}

BigInt builtin_count_by_enumeration(Builtin b, int k, int n, std::vector<Coloring>* out) {
  auto allowed = [&](const Coloring& c, std::size_t rank) {
    const Edge e = edge_unindex(rank, n, k);
    const Color col = c.at(rank);
    switch (b) {
      case Builtin::S: {
        if (col == 1) return true;
        if (!is_interval(e)) return false;
        for (std::size_t r = 0; r < rank; ++r) {
          if (c.at(r) != 0) continue;
          const Edge f = edge_unindex(r, n, k);
          if (f.back() >= e.front()) return false;  // earlier zero interval overlaps
        }
        return true;
      }
      case Builtin::LinearTight: {
        if (col == 0) return true;
        if (!is_interval(e)) return false;
        for (std::size_t r = 0; r < rank; ++r)
          if (c.at(r) == 1) return false;
        return true;
      }
      case Builtin::W1Tight: return col == 0 || contains_12(e);
    }
    return false;
  };
  return enumerate_members(k, 2, n, allowed, [&](const Coloring& c) { return builtin_member(b, k, c); }, out);
}

std::vector<Coloring> s_family_colorings(int k, int n) {
  std::vector<Coloring> out;
  const int starts = std::max(0, n - k + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << starts); ++mask) {
    std::vector<int> picked;
    bool ok = true;
    for (int s = 1; s <= starts && ok; ++s)
      if ((mask >> (s - 1)) & 1) {
        if (!picked.empty() && s < picked.back() + k) ok = false;
        picked.push_back(s);
      }
    if (!ok) continue;
    Coloring c(k, 2, n, 1);
    for (int s : picked) {
      Edge e(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = s + i;
      c.set(e, 0);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t census_distinct(const std::vector<Coloring>& colorings) {
  if (colorings.empty()) return 0;
  const auto& f = colorings.front();
  std::set<std::vector<Color>> seen;
  for (const auto& c : colorings) {
    if (c.k() != f.k() || c.l() != f.l() || c.n() != f.n()) throw IncompatibleColorings("census needs a shared (k, l, n)");
    seen.insert(std::vector<Color>(c.colors().begin(), c.colors().end()));
  }
  return seen.size();
}

// ---------------------------------------------------------------------------
// Avoid engine. Colorings are held in colex edge order, so a coloring of [n]
// is its restriction to [n-1] followed by the edges through n.

namespace {

std::size_t colex_rank(const Vertex* e, int k) {
  std::size_t r = 0;
  for (int i = 0; i < k; ++i) r += binomial(e[i] - 1, i + 1);
  return r;
}

struct BasisPlan {
  int m = 0;
  // steps[s]: edges completed once positions m-1, m and 1..s are mapped
  std::vector<std::vector<std::pair<std::vector<int>, Color>>> steps;
};

BasisPlan plan_for(const Coloring& b) {
  BasisPlan p;
  p.m = b.n();
  const int m = p.m, k = b.k();
  p.steps.resize(static_cast<std::size_t>(std::max(0, m - 1)));
  for (std::size_t r = 0; r < b.edge_count(); ++r) {
    const Edge e = edge_unindex(r, m, k);
    int s = 0;
    for (Vertex v : e)
      if (v <= m - 2) s = std::max(s, v);
    p.steps[static_cast<std::size_t>(s)].push_back({e, b.at(r)});
  }
  return p;
}

class AvoidEngine {
 public:
  explicit AvoidEngine(const IdealSpec& spec) : k_(spec.k), l_(spec.l) {
    for (const auto& b : spec.basis) {
      if (b.n() < k_) {
        edgeless_min_ = std::min(edgeless_min_, b.n());
        continue;
      }
      plans_.push_back(plan_for(b));
    }
  }

  // Processes level n from the stored parents. Returns false on budget overrun.
  bool step(int n, bool keep, int jobs, std::uint64_t budget, BigInt& count) {
    const std::size_t parent_stride = binomial(n - 1, k_);
    const std::size_t stride = binomial(n, k_);
    const std::size_t parents = n == 1 ? 1 : (parent_stride ? parents_.size() / parent_stride : parent_count_);

    if (n >= edgeless_min_) {
      count = 0;
      parents_.clear();
      parent_count_ = 0;
      return true;
    }

    // new (k-1)-subsets of [n-1] in colex order, with checkpoint markers
    std::vector<std::vector<Vertex>> subs;
    if (n - 1 >= k_ - 1) {
      std::vector<Vertex> t(static_cast<std::size_t>(k_ - 1));
      for (int i = 0; i < k_ - 1; ++i) t[static_cast<std::size_t>(i)] = i + 1;
      // colex successor
      while (true) {
        subs.push_back(t);
        int i = 0;
        while (i < k_ - 1 && (i + 1 == k_ - 1 ? t[static_cast<std::size_t>(i)] == n - 1
                                             : t[static_cast<std::size_t>(i)] + 1 == t[static_cast<std::size_t>(i + 1)]))
          ++i;
        if (i == k_ - 1) break;
        ++t[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) t[static_cast<std::size_t>(j)] = j + 1;
      }
    }
    std::vector<int> checkpoint(subs.size(), 0);
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (i + 1 == subs.size() || subs[i + 1].back() != subs[i].back()) checkpoint[i] = subs[i].back();
    if (k_ - 1 == 0) subs.clear();

    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(parents, 1))));
    std::vector<std::vector<Color>> child_arena(static_cast<std::size_t>(jobs));
    std::vector<std::uint64_t> child_count(static_cast<std::size_t>(jobs), 0);
    std::atomic<std::uint64_t> spent{nodes_};
    std::atomic<bool> abort{false};

    auto worker = [&](int w) {
      const std::size_t lo = parents * static_cast<std::size_t>(w) / static_cast<std::size_t>(jobs);
      const std::size_t hi = parents * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(jobs);
      std::vector<Color> cur(stride);
      std::vector<int> img;
      std::uint64_t local = 0;
      auto flush = [&] {
        if (spent.fetch_add(local) + local > budget) abort = true;
        local = 0;
      };
      auto violates = [&](int v) {
        for (const auto& plan : plans_) {
          if (plan.m > n || v < plan.m - 1) continue;
          if (embeds(plan, cur, v, n, img)) return true;
        }
        return false;
      };
      auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (abort) return;
        if (idx == subs.size()) {
          ++child_count[static_cast<std::size_t>(w)];
          if (keep) child_arena[static_cast<std::size_t>(w)].insert(child_arena[static_cast<std::size_t>(w)].end(), cur.begin(), cur.end());
          return;
        }
        for (int col = 0; col < l_; ++col) {
          if (++local >= 4096) flush();
          cur[parent_stride + idx] = static_cast<Color>(col);
          if (checkpoint[idx] && violates(checkpoint[idx])) continue;
          self(self, idx + 1);
        }
      };
      for (std::size_t p = lo; p < hi && !abort; ++p) {
        if (parent_stride) std::copy_n(parents_.begin() + static_cast<std::ptrdiff_t>(p * parent_stride), parent_stride, cur.begin());
        rec(rec, 0);
      }
      flush();
    };

    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
      for (auto& t : pool) t.join();
    }
    nodes_ = spent.load();
    if (abort || nodes_ > budget) return false;

    count = 0;
    std::uint64_t total = 0;
    for (auto c : child_count) total += c;
    count = total;
    if (keep) {
      parents_.clear();
      for (auto& a : child_arena) parents_.insert(parents_.end(), a.begin(), a.end());
    } else {
      parents_.clear();
    }
    parent_count_ = total;
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Color>& members() const { return parents_; }
  std::size_t member_count() const { return parent_count_; }

 private:
  // An embedding of the basis element with f(m) = n and f(m-1) = v.
  bool embeds(const BasisPlan& plan, const std::vector<Color>& cur, int v, int n, std::vector<int>& img) const {
    const int m = plan.m;
    img.assign(static_cast<std::size_t>(m + 1), 0);
    img[static_cast<std::size_t>(m - 1)] = v;
    img[static_cast<std::size_t>(m)] = n;
    std::vector<Vertex> e(static_cast<std::size_t>(k_));
    auto ok_step = [&](int s) {
      for (const auto& [edge, col] : plan.steps[static_cast<std::size_t>(s)]) {
        for (int i = 0; i < k_; ++i) e[static_cast<std::size_t>(i)] = img[static_cast<std::size_t>(edge[static_cast<std::size_t>(i)])];
        if (cur[colex_rank(e.data(), k_)] != col) return false;
      }
      return true;
    };
    if (!ok_step(0)) return false;
    auto rec = [&](auto&& self, int p) -> bool {
      if (p > m - 2) return true;
      const int lo = p == 1 ? 1 : img[static_cast<std::size_t>(p - 1)] + 1;
      const int hi = v - 1 - (m - 2 - p);
      for (int x = lo; x <= hi; ++x) {
        img[static_cast<std::size_t>(p)] = x;
        if (ok_step(p) && self(self, p + 1)) return true;
      }
      return false;
    };
    return rec(rec, 1);
  }

  int k_, l_;
  int edgeless_min_ = INT_MAX;
  std::vector<BasisPlan> plans_;
  std::vector<Color> parents_;
  std::size_t parent_count_ = 1;
  std::uint64_t nodes_ = 0;
};

Coloring from_colex(const Color* colors, int k, int l, int n) {
  Coloring c(k, l, n);
  for (std::size_t r = 0; r < c.edge_count(); ++r) {
    const Edge e = edge_unindex(r, n, k);
    c.set(r, colors[colex_rank(e.data(), k)]);
  }
  return c;
}

BigInt ipow(int base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt builtin_count(Builtin b, int k, int n) {
  switch (b) {
    case Builtin::S: return gk_sequence(k, n);
    case Builtin::LinearTight: return BigInt(1 + std::max(0, n - k + 1));
    case Builtin::W1Tight: return n < 2 ? BigInt(1) : ipow(2, binomial(n - 2, k - 2));
  }
  return 0;
}

}  // namespace

bool GrowthRecord::complete() const {
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second.exact; });
}

int GrowthRecord::last_exact() const {
  int last = 0;
  for (const auto& [n, e] : counts) {
    if (!e.exact || n != last + 1) break;
    last = n;
  }
  return last;
}

GrowthRecord growth(const IdealSpec& spec, const GrowthOptions& opt) {
  if (opt.n_max < 1) throw InvalidArgument("n_max must be >= 1");
  GrowthRecord rec;
  rec.digest = spec_digest(spec);
  if (spec.kind == IdealSpec::Kind::Builtin) {
    for (int n = 1; n <= opt.n_max; ++n) rec.counts[n] = {builtin_count(spec.builtin, spec.k, n), true};
    return rec;
  }
  for (const auto& b : spec.basis)
    if (b.k() != spec.k || b.l() != spec.l) throw IncompatibleColorings("basis coloring does not match the ideal's (k, l)");
  if (spec.basis.empty()) {
    for (int n = 1; n <= opt.n_max; ++n) rec.counts[n] = {ipow(spec.l, binomial(n, spec.k)), true};
    return rec;
  }
  AvoidEngine eng(spec);
  bool ok = true;
  for (int n = 1; n <= opt.n_max; ++n) {
    BigInt count = 0;
    if (ok) ok = eng.step(n, n < opt.n_max, opt.jobs, opt.budget, count);
    rec.counts[n] = ok ? GrowthEntry{count, true} : GrowthEntry{std::nullopt, false};
  }
  rec.nodes = eng.nodes();
  return rec;
}

std::vector<Coloring> avoid_members(const IdealSpec& spec, int n, int jobs, std::uint64_t budget) {
  if (spec.kind != IdealSpec::Kind::Avoid) throw InvalidArgument("avoid_members needs an avoidance ideal");
  if (n < 1) throw InvalidArgument("n must be >= 1");
  AvoidEngine eng(spec);
  for (int level = 1; level <= n; ++level) {
    BigInt count;
    if (!eng.step(level, true, jobs, budget, count)) throw Error("member enumeration exceeded the node budget");
  }
  std::vector<Coloring> out;
  const std::size_t stride = binomial(n, spec.k);
  for (std::size_t i = 0; i < eng.member_count(); ++i)
    out.push_back(stride ? from_colex(eng.members().data() + i * stride, spec.k, spec.l, n) : Coloring(spec.k, spec.l, n));
  return out;
}

// ---------------------------------------------------------------------------

DichotomyVerdict dichotomy_verdict(const GrowthRecord& record, Theorem theorem, int k) {
  std::vector<std::pair<int, BigInt>> exact;
  for (const auto& [n, e] : record.counts)
    if (e.exact && e.count) exact.push_back({n, *e.count});
  if (exact.empty()) throw InvalidArgument("verdict needs at least one exact count");
  DichotomyVerdict v;
  v.theorem = theorem;
  const int N = exact.back().first;
  v.caveat = "window-relative: based on exact counts for n <= " + std::to_string(N) + "; no asymptotic claim";

  if (theorem == Theorem::Constant) {
    if (exact.size() >= 3) {
      const auto& c = exact;
      const std::size_t s = c.size();
      v.constant_tail = c[s - 1].second == c[s - 2].second && c[s - 2].second == c[s - 3].second;
    }
    v.linear_floor = true;
    v.linear_floor_tight = true;
    bool any = false;
    for (const auto& [n, c] : exact) {
      if (n < k) continue;
      any = true;
      const BigInt floor = n - k + 2;
      if (c < floor) {
        v.linear_floor = false;
        if (!v.first_failure) v.first_failure = n;
      }
      if (c != floor) v.linear_floor_tight = false;
    }
    if (!any) v.linear_floor_tight = false;
    v.violation = !v.constant_tail && !v.linear_floor;
    if (v.violation)
      v.classification = "violation";
    else if (v.constant_tail && v.linear_floor)
      v.classification = "constant-tail+linear-floor";
    else if (v.constant_tail)
      v.classification = "constant-tail";
    else
      v.classification = v.linear_floor_tight ? "linear-floor-tight" : "linear-floor";
    return v;
  }

  // quasi-Fibonacci: least c with count <= n^c over n >= 2, and the G floor
  int c = 0;
  bool fits = false;
  while (!fits && c <= 64) {
    fits = true;
    for (const auto& [n, cnt] : exact) {
      if (n < 2) continue;
      if (cnt > ipow(n, static_cast<std::uint64_t>(c))) {
        fits = false;
        break;
      }
    }
    if (!fits) ++c;
  }
  if (fits) v.poly_degree = c;
  v.meets_g_floor = true;
  v.equals_g = true;
  for (const auto& [n, cnt] : exact) {
    const BigInt g = g_sequence(n);
    if (cnt < g) {
      v.meets_g_floor = false;
      if (!v.first_failure) v.first_failure = n;
    }
    if (cnt != g) v.equals_g = false;
  }
  v.classification = v.equals_g ? "g-floor-equality" : v.meets_g_floor ? "g-floor" : "below-g-floor";
  return v;
}

// ---------------------------------------------------------------------------

std::map<int, GrowthEntry> cache_lookup(const std::string& path, const std::string& digest) {
  std::map<int, GrowthEntry> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string d, n, count, exact;
    if (!std::getline(ls, d, '\t') || !std::getline(ls, n, '\t') || !std::getline(ls, count, '\t') ||
        !std::getline(ls, exact))
      continue;
    if (d != digest) continue;
    try {
      const int level = std::stoi(n);
      if (exact == "1" && count != "?") out[level] = {BigInt(count), true};
    } catch (const std::exception&) {
      continue;  // tolerate a damaged line
    }
  }
  return out;
}

void cache_store(const std::string& path, const GrowthRecord& record) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot write growth cache '" + path + "'");
  for (const auto& [n, e] : record.counts)
    if (e.exact && e.count) out << record.digest << '\t' << n << '\t' << *e.count << '\t' << 1 << '\n';
}

GrowthRecord growth_cached(const IdealSpec& spec, const GrowthOptions& opt, const std::string& path) {
  if (path.empty()) return growth(spec, opt);
  const std::string digest = spec_digest(spec);
  const auto cached = cache_lookup(path, digest);
  bool hit = true;
  for (int n = 1; n <= opt.n_max && hit; ++n) hit = cached.count(n) > 0;
  if (hit) {
    GrowthRecord rec;
    rec.digest = digest;
    for (int n = 1; n <= opt.n_max; ++n) rec.counts[n] = cached.at(n);
    return rec;
  }
  GrowthRecord rec = growth(spec, opt);
  GrowthRecord fresh;
  fresh.digest = digest;
  for (const auto& [n, e] : rec.counts)
    if (e.exact && !cached.count(n)) fresh.counts[n] = e;
  if (!fresh.counts.empty()) cache_store(path, fresh);
  return rec;
}

}  // namespace hypergrowth
