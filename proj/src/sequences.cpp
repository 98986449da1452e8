#include "hypergrowth/sequences.hpp"

#include <vector>

#include "hypergrowth/error.hpp"

namespace hypergrowth {

BigInt fibonacci(int n) {
  if (n < 0) throw InvalidArgument("F_n needs n >= 0");
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

BigInt gk_sequence(int k, int n) {
  if (k < 2) throw InvalidArgument("G^k needs k >= 2");
  if (n < 0) throw InvalidArgument("G^k_n needs n >= 0");
  std::vector<BigInt> g(static_cast<std::size_t>(n + 1), 1);
  for (int i = k; i <= n; ++i) g[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i - 1)] + g[static_cast<std::size_t>(i - k)];
  return g[static_cast<std::size_t>(n)];
}

BigInt g_sequence(int n) { return gk_sequence(3, n); }

BigInt compositions_1k(int n, int k) {
  if (k < 1 || n < 0) throw InvalidArgument("compositions need n >= 0 and k >= 1");
  // ways[i] = number of ways to write i as an ordered sum of parts 1 and k
  std::vector<BigInt> ways(static_cast<std::size_t>(n + 1), 0);
  ways[0] = 1;
  for (int i = 1; i <= n; ++i) {
    ways[static_cast<std::size_t>(i)] += ways[static_cast<std::size_t>(i - 1)];
    if (k != 1 && i >= k) ways[static_cast<std::size_t>(i)] += ways[static_cast<std::size_t>(i - k)];
  }
  return ways[static_cast<std::size_t>(n)];
}

BigInt sequence(const std::string& name, int n, int k) {
  if (name == "F") {
    if (n < 1) throw InvalidArgument("F_n is indexed from 1");
    return fibonacci(n);
  }
  if (name == "G") return g_sequence(n);
  if (name == "Gk") return gk_sequence(k, n);
  throw InvalidArgument("unknown sequence '" + name + "' (expected F, G or Gk)");
}

}  // namespace hypergrowth
