#pragma once

// Two- and three-dimensional matrices over {0, 1, *}: alternation metrics,
// submatrix search, layer and cross slices, R/C-fullness.
//
// Indices are 1-based everywhere. A "pair" in any line is two adjacent entries
// equal to {0, 1}; a star never takes part in a pair.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypergrowth/error.hpp"

namespace hypergrowth {

enum class Entry : std::uint8_t { Zero = 0, One = 1, Star = 2 };

char to_char(Entry e);
Entry entry_from_char(char ch);

inline bool alternates(Entry a, Entry b) {
  return (a == Entry::Zero && b == Entry::One) || (a == Entry::One && b == Entry::Zero);
}

class StarMatrix2 {
 public:
  StarMatrix2() = default;
  StarMatrix2(int rows, int cols, Entry fill = Entry::Zero);
  /// One string per row over the characters 0, 1, *.
  static StarMatrix2 from_rows(const std::vector<std::string>& rows);
  static StarMatrix2 identity(int r);
  static StarMatrix2 upper(int r);

  int rows() const { return r_; }
  int cols() const { return s_; }
  Entry operator()(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, Entry v) { e_.at(idx(i, j)) = v; }
  bool is_binary() const;

  StarMatrix2 transposed() const;
  std::vector<std::string> row_strings() const;

  bool operator==(const StarMatrix2&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(s_) + static_cast<std::size_t>(j - 1);
  }
  int r_ = 0;
  int s_ = 0;
  std::vector<Entry> e_;
};

class StarMatrix3 {
 public:
  StarMatrix3() = default;
  StarMatrix3(int r, int s, int t, Entry fill = Entry::Zero);

  int dim1() const { return r_; }
  int dim2() const { return s_; }
  int dim3() const { return t_; }
  Entry operator()(int i, int j, int k) const { return e_[idx(i, j, k)]; }
  void set(int i, int j, int k, Entry v) { e_.at(idx(i, j, k)) = v; }
  bool is_binary() const;

  bool operator==(const StarMatrix3&) const = default;

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(k - 1) * static_cast<std::size_t>(s_) + static_cast<std::size_t>(j - 1)) *
               static_cast<std::size_t>(r_) +
           static_cast<std::size_t>(i - 1);
  }
  int r_ = 0;
  int s_ = 0;
  int t_ = 0;
  std::vector<Entry> e_;
};

struct Metrics2 {
  int al = 1;
  std::vector<int> R;  // column indices j with a row pair at (j, j+1)
  std::vector<int> C;  // row indices i with a column pair at (i, i+1)
};

struct Metrics3 {
  int al = 1;
  std::vector<int> R;  // first-coordinate indices where some row alternates
  std::vector<int> C;
  std::vector<int> S;
};

/// Positions i with {line[i], line[i+1]} = {0, 1}, 1-based.
std::vector<int> pair_positions(const std::vector<Entry>& line);

Metrics2 metrics2(const StarMatrix2& n);
Metrics3 metrics3(const StarMatrix3& m);

// --- pattern search --------------------------------------------------------

enum class PatternClass { Explicit, IdentityStrong, UpperStrong, IdentitySimilar, UpperSimilar };

struct Pattern2 {
  PatternClass kind = PatternClass::Explicit;
  StarMatrix2 matrix;  // for Explicit
  int size = 0;        // r for the classes

  static Pattern2 explicit_matrix(StarMatrix2 m) { return {PatternClass::Explicit, std::move(m), 0}; }
  static Pattern2 of_class(PatternClass c, int r) { return {c, {}, r}; }
};

struct PatternMatch {
  std::vector<int> rows;  // increasing row selection in the haystack
  std::vector<int> cols;
  std::string variant;  // "explicit", or the symmetry that produced the matched matrix
};

/// Named members of a pattern class, in search order. Strong classes never use
/// the horizontal (column-reversing) flip.
std::vector<std::pair<std::string, StarMatrix2>> pattern_variants(PatternClass c, int r);

std::optional<PatternMatch> find_submatrix(const StarMatrix2& hay, const StarMatrix2& pattern);
std::optional<PatternMatch> find_pattern2(const StarMatrix2& hay, const Pattern2& pattern);

StarMatrix2 submatrix(const StarMatrix2& m, const std::vector<int>& rows, const std::vector<int>& cols);
StarMatrix3 submatrix(const StarMatrix3& m, const std::vector<int>& s1, const std::vector<int>& s2,
                      const std::vector<int>& s3);

// --- slices ----------------------------------------------------------------

/// axis 1: N(a,b) = M(z,b,a); axis 2: N(a,b) = M(b,z,a); axis 3: N(a,b) = M(b,a,z).
StarMatrix2 layer(const StarMatrix3& m, int axis, int index);

enum class CrossMode { Diag, Antidiag };

/// Cross-matrix for the coordinate pair (1,2), (1,3) or (2,3).
StarMatrix2 cross(const StarMatrix3& m, int first, int second, CrossMode mode);

struct Fullness {
  bool r_full = false;
  bool c_full = false;
  std::optional<std::vector<int>> row_assignment;  // s_i per row i when R-full
  std::optional<std::vector<int>> col_assignment;  // r_j per column j when C-full
};

Fullness fullness(const StarMatrix2& n);

/// 1 + max over x of the number of pairs along the diagonal L(x, y, y).
int al_23d(const StarMatrix3& m);

// --- text format -----------------------------------------------------------

void write_matrix(std::ostream& out, const StarMatrix2& m);
void write_matrix(std::ostream& out, const StarMatrix3& m);
StarMatrix2 read_matrix2(std::istream& in);
StarMatrix3 read_matrix3(std::istream& in);
std::string to_string(const StarMatrix2& m);

/// `{1,2,3}` style listing; `{}` when empty.
std::string format_indices(const std::vector<int>& xs);

}  // namespace hypergrowth
