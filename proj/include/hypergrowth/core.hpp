#pragma once

// Colorings of ordered complete k-uniform hypergraphs and the induced ordered
// subhypergraph order between them.
//
// Vertices are 1-based, colors are 0-based. Edges (k-subsets of [n]) are
// stored in lexicographic order of their sorted vertex tuples.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypergrowth/error.hpp"

namespace hypergrowth {

using Vertex = int;
using Color = std::uint8_t;
using Edge = std::vector<Vertex>;

/// Exact binomial coefficient for the small arguments used throughout;
/// returns 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// Lexicographic rank of a sorted k-subset of [n]. Throws InvalidEdge.
std::size_t edge_index(std::span<const Vertex> edge, int n, int k);
/// Inverse of edge_index.
Edge edge_unindex(std::size_t rank, int n, int k);

// Unchecked rank for hot loops; `edge` must be strictly increasing in [1, n].
std::size_t edge_rank(const Vertex* edge, int n, int k);

/// Calls fn(subset) for every m-subset of [lo, hi] in lexicographic order.
/// Returning false from fn stops the enumeration.
void for_each_subset(int lo, int hi, int m, const std::function<bool(std::span<const Vertex>)>& fn);

/// Advances a strictly increasing tuple over [1, n] to its lexicographic
/// successor. Returns false after the last tuple.
bool next_combination(std::vector<Vertex>& tuple, int n);

struct Injection {
  std::vector<Vertex> images;  // strictly increasing, 1-based

  bool operator==(const Injection&) const = default;
};

class Coloring {
 public:
  Coloring() = default;
  Coloring(int k, int l, int n, Color fill = 0);
  Coloring(int k, int l, int n, std::vector<Color> colors);

  int k() const { return k_; }
  int l() const { return l_; }
  int n() const { return n_; }
  std::size_t edge_count() const { return colors_.size(); }
  bool empty() const { return colors_.empty(); }

  Color at(std::size_t rank) const { return colors_[rank]; }
  Color operator()(std::span<const Vertex> edge) const;
  Color operator()(std::initializer_list<Vertex> edge) const;

  void set(std::size_t rank, Color c);
  void set(std::span<const Vertex> edge, Color c);
  void set(std::initializer_list<Vertex> edge, Color c);

  std::span<const Color> colors() const { return colors_; }

  bool operator==(const Coloring&) const = default;
  // Total order used for canonical sorting of member sets.
  bool operator<(const Coloring& other) const;

 private:
  int k_ = 2;
  int l_ = 2;
  int n_ = 0;
  std::vector<Color> colors_;
};

/// A coloring whose edges may also be left unspecified; used as the left side
/// of wildcard containment.
class PartialColoring {
 public:
  static constexpr int kWild = -1;

  PartialColoring() = default;
  PartialColoring(int k, int l, int n);
  explicit PartialColoring(const Coloring& c);

  int k() const { return k_; }
  int l() const { return l_; }
  int n() const { return n_; }
  std::size_t edge_count() const { return colors_.size(); }

  int at(std::size_t rank) const { return colors_[rank]; }
  int operator()(std::initializer_list<Vertex> edge) const;
  void set(std::span<const Vertex> edge, int c);
  void set(std::initializer_list<Vertex> edge, int c);
  void set_rank(std::size_t rank, int c);

  /// Fills every unspecified edge with `fill`.
  Coloring fill(Color fill) const;
  std::size_t specified_count() const;

  bool operator==(const PartialColoring&) const = default;

 private:
  int k_ = 2;
  int l_ = 2;
  int n_ = 0;
  std::vector<std::int8_t> colors_;
};

Coloring restrict_normalize(const Coloring& c, std::span<const Vertex> subset);
Coloring reverse(const Coloring& c);

/// Induced ordered containment. Returns an increasing injection f with
/// small(E) == big(f(E)) for every edge E, or nullopt when none exists.
std::optional<Injection> contains(const Coloring& small, const Coloring& big);
/// Same search with unspecified pattern edges treated as wildcards.
std::optional<Injection> contains(const PartialColoring& small, const Coloring& big);

struct Homogeneity {
  enum class Kind { Homogeneous, Indeterminate, NotHomogeneous };
  Kind kind = Kind::Indeterminate;
  Color color = 0;  // valid when Homogeneous
  Edge first;       // valid when NotHomogeneous: two edges of different color
  Edge second;
};

Homogeneity homogeneity(const Coloring& c, std::span<const Vertex> vertices);

// Text format: `coloring k=<k> l=<l> n=<n>` then either `bits <0/1 string>`
// (l = 2) or one `v1 ... vk c` line per edge in rank order.
void write_coloring(std::ostream& out, const Coloring& c);
std::string to_string(const Coloring& c);
Coloring read_coloring(std::istream& in);
Coloring parse_coloring(const std::string& text);

std::string to_string(std::span<const Vertex> vertices);

}  // namespace hypergrowth
