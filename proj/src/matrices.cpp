#include "hypergrowth/matrices.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace hypergrowth {

char to_char(Entry e) {
  switch (e) {
    case Entry::Zero: return '0';
    case Entry::One: return '1';
    case Entry::Star: return '*';
  }
  return '?';
}

Entry entry_from_char(char ch) {
  switch (ch) {
    case '0': return Entry::Zero;
    case '1': return Entry::One;
    case '*': return Entry::Star;
    default: throw ParseError(std::string("matrix entry must be 0, 1 or *, got '") + ch + "'");
  }
}

StarMatrix2::StarMatrix2(int rows, int cols, Entry fill) : r_(rows), s_(cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("matrix dimensions must be positive");
  e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
}

StarMatrix2 StarMatrix2::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidArgument("matrix dimensions must be positive");
  StarMatrix2 m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 1; i <= m.rows(); ++i) {
    const std::string& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != m.cols()) throw InvalidArgument("ragged matrix rows");
    for (int j = 1; j <= m.cols(); ++j) m.set(i, j, entry_from_char(row[static_cast<std::size_t>(j - 1)]));
  }
  return m;
}

StarMatrix2 StarMatrix2::identity(int r) {
  StarMatrix2 m(r, r);
  for (int i = 1; i <= r; ++i) m.set(i, i, Entry::One);
  return m;
}

StarMatrix2 StarMatrix2::upper(int r) {
  StarMatrix2 m(r, r);
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) m.set(i, j, Entry::One);
  return m;
}

bool StarMatrix2::is_binary() const {
  return std::none_of(e_.begin(), e_.end(), [](Entry e) { return e == Entry::Star; });
}

StarMatrix2 StarMatrix2::transposed() const {
  StarMatrix2 t(s_, r_);
  for (int i = 1; i <= r_; ++i)
    for (int j = 1; j <= s_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

std::vector<std::string> StarMatrix2::row_strings() const {
  std::vector<std::string> out;
  for (int i = 1; i <= r_; ++i) {
    std::string row;
    for (int j = 1; j <= s_; ++j) row += to_char((*this)(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

StarMatrix3::StarMatrix3(int r, int s, int t, Entry fill) : r_(r), s_(s), t_(t) {
  if (r < 1 || s < 1 || t < 1) throw InvalidArgument("matrix dimensions must be positive");
  e_.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(s) * static_cast<std::size_t>(t), fill);
}

bool StarMatrix3::is_binary() const {
  return std::none_of(e_.begin(), e_.end(), [](Entry e) { return e == Entry::Star; });
}

// ---------------------------------------------------------------------------

std::vector<int> pair_positions(const std::vector<Entry>& line) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < line.size(); ++i)
    if (alternates(line[i], line[i + 1])) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Metrics2 metrics2(const StarMatrix2& n) {
  Metrics2 out;
  std::set<int> R, C;
  int best = 0;
  for (int i = 1; i <= n.rows(); ++i) {
    int pairs = 0;
    for (int j = 1; j < n.cols(); ++j)
      if (alternates(n(i, j), n(i, j + 1))) {
        ++pairs;
        R.insert(j);
      }
    best = std::max(best, pairs);
  }
  for (int j = 1; j <= n.cols(); ++j) {
    int pairs = 0;
    for (int i = 1; i < n.rows(); ++i)
      if (alternates(n(i, j), n(i + 1, j))) {
        ++pairs;
        C.insert(i);
      }
    best = std::max(best, pairs);
  }
  out.al = best + 1;
  out.R.assign(R.begin(), R.end());
  out.C.assign(C.begin(), C.end());
  return out;
}

Metrics3 metrics3(const StarMatrix3& m) {
  const int r = m.dim1(), s = m.dim2(), t = m.dim3();
  std::vector<char> R(static_cast<std::size_t>(r), 0), C(static_cast<std::size_t>(s), 0), S(static_cast<std::size_t>(t), 0);
  int best = 0;
  // rows: first coordinate varies
  for (int k = 1; k <= t; ++k)
    for (int j = 1; j <= s; ++j) {
      int pairs = 0;
      for (int i = 1; i < r; ++i)
        if (alternates(m(i, j, k), m(i + 1, j, k))) {
          ++pairs;
          R[static_cast<std::size_t>(i)] = 1;
        }
      best = std::max(best, pairs);
    }
  // columns
  for (int k = 1; k <= t; ++k)
    for (int i = 1; i <= r; ++i) {
      int pairs = 0;
      for (int j = 1; j < s; ++j)
        if (alternates(m(i, j, k), m(i, j + 1, k))) {
          ++pairs;
          C[static_cast<std::size_t>(j)] = 1;
        }
      best = std::max(best, pairs);
    }
  // shafts
  for (int j = 1; j <= s; ++j)
    for (int i = 1; i <= r; ++i) {
      int pairs = 0;
      for (int k = 1; k < t; ++k)
        if (alternates(m(i, j, k), m(i, j, k + 1))) {
          ++pairs;
          S[static_cast<std::size_t>(k)] = 1;
        }
      best = std::max(best, pairs);
    }
  Metrics3 out;
  out.al = best + 1;
  for (int i = 1; i < r; ++i)
    if (R[static_cast<std::size_t>(i)]) out.R.push_back(i);
  for (int j = 1; j < s; ++j)
    if (C[static_cast<std::size_t>(j)]) out.C.push_back(j);
  for (int k = 1; k < t; ++k)
    if (S[static_cast<std::size_t>(k)]) out.S.push_back(k);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

StarMatrix2 flip_rows(const StarMatrix2& m) {
  StarMatrix2 out(m.rows(), m.cols());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) out.set(i, j, m(m.rows() - i + 1, j));
  return out;
}

StarMatrix2 flip_cols(const StarMatrix2& m) {
  StarMatrix2 out(m.rows(), m.cols());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) out.set(i, j, m(i, m.cols() - j + 1));
  return out;
}

StarMatrix2 swap_colors(const StarMatrix2& m) {
  StarMatrix2 out(m.rows(), m.cols());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) {
      const Entry e = m(i, j);
      out.set(i, j, e == Entry::Zero ? Entry::One : e == Entry::One ? Entry::Zero : Entry::Star);
    }
  return out;
}

// Greedy leftmost column matching of the first `depth` pattern rows against
// the chosen haystack rows. Leftmost choices are optimal for subsequence
// matching, so failure here is definitive.
bool match_columns(const StarMatrix2& hay, const StarMatrix2& pat, const std::vector<int>& rows, int depth,
                   std::vector<int>* cols_out) {
  int next = 1;
  std::vector<int> cols;
  for (int j = 1; j <= pat.cols(); ++j) {
    bool found = false;
    for (; next <= hay.cols(); ++next) {
      bool ok = true;
      for (int i = 1; i <= depth && ok; ++i) ok = hay(rows[static_cast<std::size_t>(i - 1)], next) == pat(i, j);
      if (ok) {
        cols.push_back(next++);
        found = true;
        break;
      }
    }
    if (!found) return false;
    if (hay.cols() - next + 1 < pat.cols() - j) return false;
  }
  if (cols_out) *cols_out = std::move(cols);
  return true;
}

}  // namespace

std::vector<std::pair<std::string, StarMatrix2>> pattern_variants(PatternClass c, int r) {
  if (r < 1) throw InvalidArgument("pattern class size must be >= 1");
  std::vector<std::pair<std::string, StarMatrix2>> out;
  const bool upper = c == PatternClass::UpperStrong || c == PatternClass::UpperSimilar;
  const StarMatrix2 base = upper ? StarMatrix2::upper(r) : StarMatrix2::identity(r);
  auto add = [&](std::string name, StarMatrix2 m) {
    for (const auto& [_, existing] : out)
      if (existing == m) return;
    out.emplace_back(std::move(name), std::move(m));
  };
  add("plain", base);
  add("vflip", flip_rows(base));
  add("swap", swap_colors(base));
  add("vflip+swap", swap_colors(flip_rows(base)));
  if (c == PatternClass::IdentitySimilar || c == PatternClass::UpperSimilar) {
    add("hflip", flip_cols(base));
    add("hflip+swap", swap_colors(flip_cols(base)));
    add("hvflip", flip_cols(flip_rows(base)));
    add("hvflip+swap", swap_colors(flip_cols(flip_rows(base))));
  }
  return out;
}

std::optional<PatternMatch> find_submatrix(const StarMatrix2& hay, const StarMatrix2& pat) {
  const int R = pat.rows();
  if (R > hay.rows() || pat.cols() > hay.cols()) return std::nullopt;
  std::vector<int> rows(static_cast<std::size_t>(R), 0);
  int d = 0;  // rows[0..d) fixed
  rows[0] = 0;
  while (d >= 0) {
    int& cur = rows[static_cast<std::size_t>(d)];
    ++cur;
    if (cur > hay.rows() - (R - 1 - d)) {
      --d;
      continue;
    }
    if (!match_columns(hay, pat, rows, d + 1, nullptr)) continue;
    if (d + 1 == R) {
      PatternMatch m;
      m.rows = rows;
      match_columns(hay, pat, rows, R, &m.cols);
      m.variant = "explicit";
      return m;
    }
    rows[static_cast<std::size_t>(d + 1)] = cur;
    ++d;
  }
  return std::nullopt;
}

std::optional<PatternMatch> find_pattern2(const StarMatrix2& hay, const Pattern2& pattern) {
  if (pattern.kind == PatternClass::Explicit) return find_submatrix(hay, pattern.matrix);
  for (const auto& [name, m] : pattern_variants(pattern.kind, pattern.size)) {
    if (auto hit = find_submatrix(hay, m)) {
      hit->variant = name;
      return hit;
    }
  }
  return std::nullopt;
}

StarMatrix2 submatrix(const StarMatrix2& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  StarMatrix2 out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) out.set(static_cast<int>(a) + 1, static_cast<int>(b) + 1, m(rows[a], cols[b]));
  return out;
}

StarMatrix3 submatrix(const StarMatrix3& m, const std::vector<int>& s1, const std::vector<int>& s2,
                      const std::vector<int>& s3) {
  StarMatrix3 out(static_cast<int>(s1.size()), static_cast<int>(s2.size()), static_cast<int>(s3.size()));
  for (std::size_t a = 0; a < s1.size(); ++a)
    for (std::size_t b = 0; b < s2.size(); ++b)
      for (std::size_t c = 0; c < s3.size(); ++c)
        out.set(static_cast<int>(a) + 1, static_cast<int>(b) + 1, static_cast<int>(c) + 1, m(s1[a], s2[b], s3[c]));
  return out;
}

// ---------------------------------------------------------------------------

StarMatrix2 layer(const StarMatrix3& m, int axis, int z) {
  const int r = m.dim1(), s = m.dim2(), t = m.dim3();
  switch (axis) {
    case 1: {
      if (z < 1 || z > r) throw InvalidArgument("layer index out of range");
      StarMatrix2 n(t, s);
      for (int a = 1; a <= t; ++a)
        for (int b = 1; b <= s; ++b) n.set(a, b, m(z, b, a));
      return n;
    }
    case 2: {
      if (z < 1 || z > s) throw InvalidArgument("layer index out of range");
      StarMatrix2 n(t, r);
      for (int a = 1; a <= t; ++a)
        for (int b = 1; b <= r; ++b) n.set(a, b, m(b, z, a));
      return n;
    }
    case 3: {
      if (z < 1 || z > t) throw InvalidArgument("layer index out of range");
      StarMatrix2 n(s, r);
      for (int a = 1; a <= s; ++a)
        for (int b = 1; b <= r; ++b) n.set(a, b, m(b, a, z));
      return n;
    }
    default: throw InvalidArgument("layer axis must be 1, 2 or 3");
  }
}

StarMatrix2 cross(const StarMatrix3& m, int first, int second, CrossMode mode) {
  const int r = m.dim1(), s = m.dim2(), t = m.dim3();
  const bool diag = mode == CrossMode::Diag;
  if (first == 1 && second == 2) {
    if (r != s) throw DimensionMismatch("(1,2)-cross-matrix needs r = s");
    StarMatrix2 n(t, r);
    for (int a = 1; a <= t; ++a)
      for (int b = 1; b <= r; ++b) n.set(a, b, diag ? m(b, b, a) : m(b, s - b + 1, a));
    return n;
  }
  if (first == 1 && second == 3) {
    if (r != t) throw DimensionMismatch("(1,3)-cross-matrix needs r = t");
    StarMatrix2 n(s, r);
    for (int a = 1; a <= s; ++a)
      for (int b = 1; b <= r; ++b) n.set(a, b, diag ? m(b, a, b) : m(b, a, t - b + 1));
    return n;
  }
  if (first == 2 && second == 3) {
    if (s != t) throw DimensionMismatch("(2,3)-cross-matrix needs s = t");
    StarMatrix2 n(s, r);
    for (int a = 1; a <= s; ++a)
      for (int b = 1; b <= r; ++b) n.set(a, b, diag ? m(b, a, a) : m(b, a, t - a + 1));
    return n;
  }
  throw InvalidArgument("cross-matrix coordinate pair must be (1,2), (1,3) or (2,3)");
}

namespace {

// Kuhn's augmenting-path matching of `left` items onto slot indices.
std::optional<std::vector<int>> distinct_representatives(const std::vector<std::vector<int>>& eligible, int slots) {
  std::vector<int> owner(static_cast<std::size_t>(slots + 1), -1);
  std::vector<int> assigned(eligible.size(), 0);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int u) {
    for (int slot : eligible[static_cast<std::size_t>(u)]) {
      if (visited[static_cast<std::size_t>(slot)]) continue;
      visited[static_cast<std::size_t>(slot)] = 1;
      const int prev = owner[static_cast<std::size_t>(slot)];
      if (prev < 0 || augment(prev)) {
        owner[static_cast<std::size_t>(slot)] = u;
        assigned[static_cast<std::size_t>(u)] = slot;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < eligible.size(); ++u) {
    visited.assign(static_cast<std::size_t>(slots + 1), 0);
    if (!augment(static_cast<int>(u))) return std::nullopt;
  }
  return assigned;
}

}  // namespace

Fullness fullness(const StarMatrix2& n) {
  Fullness out;
  std::vector<std::vector<int>> row_slots(static_cast<std::size_t>(n.rows()));
  for (int i = 1; i <= n.rows(); ++i)
    for (int j = 1; j < n.cols(); ++j)
      if (alternates(n(i, j), n(i, j + 1))) row_slots[static_cast<std::size_t>(i - 1)].push_back(j);
  out.row_assignment = distinct_representatives(row_slots, n.cols());
  out.r_full = out.row_assignment.has_value();

  std::vector<std::vector<int>> col_slots(static_cast<std::size_t>(n.cols()));
  for (int j = 1; j <= n.cols(); ++j)
    for (int i = 1; i < n.rows(); ++i)
      if (alternates(n(i, j), n(i + 1, j))) col_slots[static_cast<std::size_t>(j - 1)].push_back(i);
  out.col_assignment = distinct_representatives(col_slots, n.rows());
  out.c_full = out.col_assignment.has_value();
  return out;
}

int al_23d(const StarMatrix3& m) {
  if (m.dim2() != m.dim3()) throw DimensionMismatch("(2,3)-diagonals need s = t");
  int best = 0;
  for (int x = 1; x <= m.dim1(); ++x) {
    int pairs = 0;
    for (int i = 1; i < m.dim2(); ++i)
      if (alternates(m(x, i, i), m(x, i + 1, i + 1))) ++pairs;
    best = std::max(best, pairs);
  }
  return best + 1;
}

// ---------------------------------------------------------------------------

void write_matrix(std::ostream& out, const StarMatrix2& m) {
  out << "matrix2 r=" << m.rows() << " s=" << m.cols() << '\n';
  for (const auto& row : m.row_strings()) out << row << '\n';
}

void write_matrix(std::ostream& out, const StarMatrix3& m) {
  out << "matrix3 r=" << m.dim1() << " s=" << m.dim2() << " t=" << m.dim3() << '\n';
  for (int k = 1; k <= m.dim3(); ++k) {
    if (k > 1) out << '\n';
    for (int i = 1; i <= m.dim1(); ++i) {
      for (int j = 1; j <= m.dim2(); ++j) out << to_char(m(i, j, k));
      out << '\n';
    }
  }
}

namespace {

int header_value(std::istringstream& hs, const std::string& key) {
  std::string tok;
  hs >> tok;
  if (tok.rfind(key + "=", 0) != 0) throw ParseError("expected " + key + "=<int> in matrix header");
  try {
    return std::stoi(tok.substr(key.size() + 1));
  } catch (const std::logic_error&) {
    throw ParseError("bad integer in matrix header");
  }
}

std::string next_row(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return line;
  }
  throw ParseError("matrix body ended early");
}

}  // namespace

StarMatrix2 read_matrix2(std::istream& in) {
  std::string header = next_row(in);
  std::istringstream hs(header);
  std::string word;
  hs >> word;
  if (word != "matrix2") throw ParseError("expected 'matrix2' header");
  const int r = header_value(hs, "r");
  const int s = header_value(hs, "s");
  if (r < 1 || s < 1) throw ParseError("matrix dimensions must be positive");
  std::vector<std::string> rows;
  for (int i = 0; i < r; ++i) {
    rows.push_back(next_row(in));
    if (static_cast<int>(rows.back().size()) != s) throw ParseError("matrix row has wrong length");
  }
  return StarMatrix2::from_rows(rows);
}

StarMatrix3 read_matrix3(std::istream& in) {
  std::string header = next_row(in);
  std::istringstream hs(header);
  std::string word;
  hs >> word;
  if (word != "matrix3") throw ParseError("expected 'matrix3' header");
  const int r = header_value(hs, "r");
  const int s = header_value(hs, "s");
  const int t = header_value(hs, "t");
  if (r < 1 || s < 1 || t < 1) throw ParseError("matrix dimensions must be positive");
  StarMatrix3 m(r, s, t);
  for (int k = 1; k <= t; ++k)
    for (int i = 1; i <= r; ++i) {
      const std::string row = next_row(in);
      if (static_cast<int>(row.size()) != s) throw ParseError("matrix row has wrong length");
      for (int j = 1; j <= s; ++j) m.set(i, j, k, entry_from_char(row[static_cast<std::size_t>(j - 1)]));
    }
  return m;
}

std::string to_string(const StarMatrix2& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

std::string format_indices(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

}  // namespace hypergrowth
