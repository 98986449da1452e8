#pragma once

// Structural classifiers on colorings: nuclear decomposition, crossing
// matrices, p-tameness, richness, simplicity and wealthy families.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypergrowth/core.hpp"
#include "hypergrowth/matrices.hpp"

namespace hypergrowth {

struct Interval {
  int lo = 1;
  int hi = 0;
  int size() const { return hi - lo + 1; }
  std::vector<Vertex> vertices() const;
  bool operator==(const Interval&) const = default;
};

struct NuclearDecomposition {
  std::vector<Interval> intervals;
  std::vector<Homogeneity> verdicts;  // one per interval
  int length() const { return static_cast<int>(intervals.size()); }
};

NuclearDecomposition nuclear_decomposition(const Coloring& c);

/// M(i,j,k) = c({x_i, y_j, z_k}), or * when two of the three coincide.
StarMatrix3 crossing_matrix(const Coloring& c, const std::vector<Vertex>& x, const std::vector<Vertex>& y,
                            const std::vector<Vertex>& z);

struct TameViolation {
  int condition = 0;
  std::vector<int> tuple;  // interval indices (u,v,w) or (u,v); empty for condition 1
  std::string metric;      // "s", "al", "|R|", "|C|"
  int value = 0;
};

struct TameReport {
  int p = 0;
  std::array<std::optional<bool>, 5> verdicts;  // unset once an earlier condition failed
  std::optional<TameViolation> witness;
  bool tame() const { return !witness.has_value(); }
};

TameReport is_p_tame(const Coloring& c, int p);

struct RichWitness {
  int r = 0;
  int f = 0, g = 0, h = 0;
  Color a = 0, b = 0;
  std::vector<Edge> edges;  // E_1 .. E_{r-k+2}
};

/// E_i = [f] + [f+i, f+g+i-1] + [n-h+1, n] for i = 1 .. r-k+2, n = 2r-k+1.
std::vector<Edge> rich_edges(int k, int r, int f, int g, int h);

std::optional<RichWitness> is_r_rich(const Coloring& c, int r);

struct SimplicityViolation {
  int condition = 0;  // 1 or 2
  Edge first;
  Edge second;
};

std::optional<SimplicityViolation> is_c_simple(const Coloring& c, int cpar);

// --- wealthy families ------------------------------------------------------

enum class WealthyFamily { W1p, W1pp, W21, W22, W31, W32, W33, W41, W42 };

std::string to_string(WealthyFamily f);
WealthyFamily parse_family(const std::string& name);
std::vector<WealthyFamily> all_families();

/// Vertex count of an r-wealthy coloring of the family.
int wealthy_size(WealthyFamily f, int r);

// A symmetry applied to the canonical (primed) form. W1, W3.3 and W4.1 use a
// global reversal; W2, W3.1, W3.2 reverse blocks and permute them; W4.2
// reverses [r] and optionally swaps the two blocks.
struct WealthyVariant {
  bool swap = false;
  bool grev = false;
  std::vector<bool> rev;
  std::vector<int> perm;  // canonical block numbers in their new left-to-right order

  bool operator==(const WealthyVariant&) const = default;
};

std::string to_string(WealthyFamily f, const WealthyVariant& v);
WealthyVariant parse_variant(WealthyFamily f, const std::string& text);

/// The full symmetry set of a family, in search order (identity first).
std::vector<WealthyVariant> wealthy_variants(WealthyFamily f);

/// Image of each canonical vertex (index 0 unused) under the variant.
std::vector<Vertex> variant_map(WealthyFamily f, int r, const WealthyVariant& v);

/// Canonical constraint pattern in the primed frame; other edges are wild.
/// W3.3, W4.1 and W4.2 get one concrete non-monochromatic choice per block.
PartialColoring canonical_pattern(WealthyFamily f, int r);

struct WealthyWitness {
  WealthyFamily family = WealthyFamily::W1p;
  int r = 0;
  WealthyVariant variant;
  std::vector<std::vector<Vertex>> base_sets;
  std::vector<std::array<Vertex, 3>> triples;  // (a_i, b_i, c_i) for W3.3 and W4.2
};

/// Exact membership at the given r. Throws SizeMismatch when n is not the
/// family's size. With `only` set, the single variant is tested.
std::optional<WealthyWitness> is_wealthy(const Coloring& c, WealthyFamily f, int r,
                                         const std::optional<WealthyVariant>& only = std::nullopt);

std::vector<WealthyVariant> matching_variants(const Coloring& c, WealthyFamily f, int r);

/// `wealthy family=W2.1 r=2 variant=swap:0,rev:00,perm:123 base=[1,2]|[3,4]|[5]`
std::string to_string(const WealthyWitness& w);

}  // namespace hypergrowth
