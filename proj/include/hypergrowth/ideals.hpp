#pragma once

// Finitely described ideals of colorings, their growth functions, and
// window-relative verdicts against the two dichotomy theorems.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypergrowth/core.hpp"
#include "hypergrowth/sequences.hpp"

namespace hypergrowth {

enum class Builtin { S, LinearTight, W1Tight };

std::string to_string(Builtin b);

struct IdealSpec {
  enum class Kind { Avoid, Builtin };
  Kind kind = Kind::Avoid;
  int k = 3;
  int l = 2;
  std::vector<Coloring> basis;  // Avoid
  hypergrowth::Builtin builtin = hypergrowth::Builtin::S;

  static IdealSpec avoid(std::vector<Coloring> basis, int k, int l);
  static IdealSpec make_builtin(hypergrowth::Builtin b, int k);
};

/// Canonical text (`ideal avoid k= l=` plus sorted basis, or `ideal builtin ...`).
std::string canonical_text(const IdealSpec& spec);
/// FNV-1a 64-bit over canonical_text, as 16 hex digits.
std::string spec_digest(const IdealSpec& spec);
std::uint64_t fnv1a64(const std::string& bytes);

IdealSpec read_ideal(std::istream& in);
IdealSpec load_ideal_file(const std::string& path);
/// `avoid:<file>` or `builtin:<name>,k=<k>`.
IdealSpec parse_spec_argument(const std::string& arg);

/// Direct membership test for the built-in families.
bool builtin_member(Builtin b, int k, const Coloring& c);

struct GrowthEntry {
  std::optional<BigInt> count;  // unset when the level ran out of budget
  bool exact = false;
};

struct GrowthRecord {
  std::string digest;
  std::map<int, GrowthEntry> counts;
  std::uint64_t nodes = 0;  // extension-tree nodes spent (Avoid only)
  bool complete() const;
  int last_exact() const;  // 0 when nothing is exact
};

struct GrowthOptions {
  int n_max = 1;
  std::uint64_t budget = 100'000'000;
  int jobs = 1;
};

GrowthRecord growth(const IdealSpec& spec, const GrowthOptions& opt);

/// Members of Avoid(basis) on exactly n vertices, in the engine's order.
/// Throws when the work exceeds the budget.
std::vector<Coloring> avoid_members(const IdealSpec& spec, int n, int jobs = 1,
                                    std::uint64_t budget = 100'000'000);

/// Count colorings on [n] satisfying a membership predicate, by depth-first
/// assignment in edge rank order. `allowed(c, rank)` may veto a color for an
/// edge given the colors of all lower-ranked edges; `member` is applied at
/// the leaves.
BigInt enumerate_members(int k, int l, int n, const std::function<bool(const Coloring&, std::size_t)>& allowed,
                         const std::function<bool(const Coloring&)>& member,
                         std::vector<Coloring>* out = nullptr);

/// Builtin counts recomputed by predicate enumeration.
BigInt builtin_count_by_enumeration(Builtin b, int k, int n, std::vector<Coloring>* out = nullptr);

/// S(k) members listed from their interval families, one coloring per family.
std::vector<Coloring> s_family_colorings(int k, int n);

/// Number of pairwise distinct colorings; throws on mixed shapes.
std::size_t census_distinct(const std::vector<Coloring>& colorings);

// --- verdicts --------------------------------------------------------------

enum class Theorem { Constant, QuasiFibonacci };

struct DichotomyVerdict {
  Theorem theorem = Theorem::Constant;
  std::string classification;
  bool violation = false;
  // Constant theorem
  bool constant_tail = false;
  bool linear_floor = false;
  bool linear_floor_tight = false;  // equality n-k+2 at every exact n >= k
  std::optional<int> first_failure;
  // Quasi-Fibonacci theorem
  std::optional<int> poly_degree;  // least integer c with count <= n^c on the window
  bool meets_g_floor = false;
  bool equals_g = false;
  std::string caveat;
};

DichotomyVerdict dichotomy_verdict(const GrowthRecord& record, Theorem theorem, int k);

// --- cache -----------------------------------------------------------------

/// Lines `digest<TAB>n<TAB>count<TAB>exact`; later lines win.
std::map<int, GrowthEntry> cache_lookup(const std::string& path, const std::string& digest);
void cache_store(const std::string& path, const GrowthRecord& record);

/// growth() that first consults the cache at `path` (empty path: no cache)
/// and stores newly computed exact levels.
GrowthRecord growth_cached(const IdealSpec& spec, const GrowthOptions& opt, const std::string& path);

}  // namespace hypergrowth
