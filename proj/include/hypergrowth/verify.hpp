#pragma once

// The acceptance criteria as callable checks, shared by the acceptance binary
// and `hypergrowth verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "hypergrowth/sequences.hpp"

namespace hypergrowth {

// 64-bit LCG: state = a*state + c (mod 2^64), output = state >> 32.
class Lcg {
 public:
  static constexpr std::uint64_t kMul = 6364136223846793005ULL;
  static constexpr std::uint64_t kInc = 1442695040888963407ULL;
  explicit Lcg(std::uint64_t seed = 0) : state_(seed) {}
  std::uint32_t next() {
    state_ = state_ * kMul + kInc;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  // Uniform in [lo, hi] up to modulo bias, which is irrelevant here.
  int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint32_t>(hi - lo + 1)); }
  int bit() { return static_cast<int>(next() >> 31); }

 private:
  std::uint64_t state_;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int jobs = 1;
  std::uint64_t budget = 100'000'000;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit = 0;  // seconds
};

constexpr int kCriteria = 13;

CriterionResult run_criterion(int id, const VerifyOptions& opt);
/// `all`, a single id, or a comma-separated list of ids.
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opt);
std::string format_result(const CriterionResult& r);

/// Interval-family census behind S(k)_n, split across `jobs` threads.
BigInt s_family_count(int k, int n, int jobs);

struct WindowRecord {
  std::string basis;  // bits of the size-4 basis coloring
  std::vector<std::string> counts;
  bool ok = false;
  std::string classification;
};
/// Growth of Avoid(B) for each of the 16 colorings B of K_4^(3).
std::vector<WindowRecord> window_scan(int jobs, std::uint64_t budget);

}  // namespace hypergrowth
