#pragma once

// Exact integer sequences: Fibonacci F, the G sequence and its k-analogue.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypergrowth {

using BigInt = boost::multiprecision::cpp_int;

/// F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}. F_0 = 0.
BigInt fibonacci(int n);

/// G_0 = G_1 = G_2 = 1, G_n = G_{n-1} + G_{n-3}.
BigInt g_sequence(int n);

/// G^k_n = G^k_{n-1} + G^k_{n-k} with G^k_0 = ... = G^k_{k-1} = 1. This is the
/// number of compositions of n into parts 1 and k.
BigInt gk_sequence(int k, int n);

/// Compositions of n into parts from {1, k}, counted by a separate table walk.
BigInt compositions_1k(int n, int k);

/// name is F, G or Gk (the last needs k >= 2).
BigInt sequence(const std::string& name, int n, int k = 0);

}  // namespace hypergrowth
