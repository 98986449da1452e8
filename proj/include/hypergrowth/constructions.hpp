#pragma once

// Generators for the explicit objects behind the lower bounds: rich and
// wealthy colorings, chains and southeast paths, identity/upper embeddings,
// string-driven and disobedient colorings, and the pair-coloring slice.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hypergrowth/core.hpp"
#include "hypergrowth/matrices.hpp"
#include "hypergrowth/structure.hpp"

namespace hypergrowth {

Coloring make_rich(int k, int r, int f, int g, int h, Color a, Color b, Color filler = 0, int l = 2);

/// Vertex sets kept by the r-k+2 deletions: j vertices removed right after
/// [f] and r-k+1-j right before the last h vertices, j = 0 .. r-k+1.
std::vector<std::vector<Vertex>> rich_deletion_sets(int k, int r, int f, int g, int h);
std::vector<Coloring> rich_deletions(const Coloring& rich, int r, int f, int g, int h);

Coloring make_wealthy(WealthyFamily f, int r, const WealthyVariant& v = {}, Color filler = 0);
/// Same coloring with unspecified edges left as wildcards.
PartialColoring make_wealthy_partial(WealthyFamily f, int r, const WealthyVariant& v = {});

// --- chains and paths ------------------------------------------------------

struct Chain {
  int m = 0;
  std::vector<std::pair<int, int>> points;  // (row, col), both strictly increasing
  bool operator==(const Chain&) const = default;
};

struct SoutheastPath {
  int m = 0;
  std::vector<std::pair<int, int>> points;  // 2m+1 lattice points from (1,1) to (m+1,m+1)
  bool operator==(const SoutheastPath&) const = default;
};

void validate(const Chain& c);
void validate(const SoutheastPath& p);

/// A*: the m x m 0/1 matrix with ones exactly at the chain points.
StarMatrix2 chain_matrix(const Chain& c);

/// A one sits at (i,j) exactly when the path turns down-then-right there.
SoutheastPath chain_to_path(const Chain& c);
Chain path_to_chain(const SoutheastPath& p);

std::vector<Chain> all_chains(int m);
std::vector<SoutheastPath> all_paths(int m);

struct ChainEmbedding {
  // Abar (A* with an extra 1 at (n+1,n+1)) inside I_{2n+1-k}
  int bar_size = 0;
  std::vector<int> bar_rows, bar_cols;
  // A* inside I_{2n-k}
  int size = 0;
  std::vector<int> rows, cols;
};

ChainEmbedding embed_chain(const Chain& a);

enum class StringMode { Identity, Upper };

struct StringEmbedding {
  StarMatrix2 matrix;  // n x n with w on the diagonal and superdiagonal
  int host_size = 0;   // 2n (identity) or 3n (upper)
  std::vector<int> rows, cols;
};

/// Whether w (length 2n-1) is admissible for the mode.
bool string_admissible(const std::string& w, StringMode mode);
StringEmbedding embed_string(const std::string& w, StringMode mode);
StarMatrix2 string_host(int n, StringMode mode);

// --- string-driven coloring (Step 3) ---------------------------------------

struct StringColoring {
  std::vector<int> C, D;  // string positions colored s, resp. t
  std::vector<Vertex> S;
  Coloring host;
  Coloring member;
};

/// Host on 4r vertices; member is its restriction to S and satisfies
/// member({1, i, i+1}) = w_{i-1}.
StringColoring make_string_coloring(const std::string& w, Color t, int r, Color filler = 0);

// --- disobedient colorings (Step 4) ----------------------------------------

struct DisobedientSpec {
  int m = 0, eps = 0, n = 0, r = 0;
  std::vector<int> A, B;
  std::vector<int> alpha, beta;  // indices 0..m
  std::vector<int> t;            // t[0] = 0, t[1..m]
  std::vector<std::vector<int>> C, D;
  std::vector<Vertex> S;
  std::vector<std::array<Vertex, 3>> F;  // F_1 .. F_m
  std::vector<int> z_predecessors;       // of t_i inside S
  std::vector<int> y_predecessors;       // of S_{t_i}^{23} inside Y and S
};

struct Disobedient {
  DisobedientSpec spec;
  Coloring member;
  Coloring host;
  Injection embedding;
};

Disobedient make_disobedient(int n, const std::vector<int>& A, const std::vector<int>& B, int host_r = 0,
                             Color filler = 0);
bool is_disobedient(const Coloring& c, int m, int eps, const std::vector<int>& A, const std::vector<int>& B);

// --- misc ------------------------------------------------------------------

/// Pair coloring psi({x,y}) = chi({x,y,n}) on n-1 vertices.
Coloring slice_to_pair_coloring(const Coloring& c);
/// No triple {3i-2, 3i-1, 3i} of the pair coloring is monochromatic.
bool is_pair_type2_wealthy(const Coloring& pairs, int r);

/// Pattern on 2m+1 vertices: {i, m+i, 2m+1} -> w_{2i-1}, {i, m+1+i, 2m+1} -> w_{2i}.
PartialColoring lw2_pattern(const std::string& w);

/// Binary strings of the given length avoiding the consecutive substring `bad`.
std::vector<std::string> strings_avoiding(int length, const std::string& bad);
/// No pair (w_{2i-1}, w_{2i}) equals odd_bad and no pair (w_{2i}, w_{2i+1}) equals even_bad.
bool avoids_paired(const std::string& w, const std::string& odd_bad, const std::string& even_bad);

}  // namespace hypergrowth
