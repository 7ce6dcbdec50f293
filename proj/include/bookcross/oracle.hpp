#pragma once

#include <cstdint>

#include "bookcross/error.hpp"

namespace bookcross {

struct OracleLimits {
    int max_vertices = 10;  // m + n
    int max_pages = 3;
    std::uint64_t max_nodes = 2'000'000'000;
};

/// Thrown when an instance is outside the oracle's limits or the node
/// budget runs out.
class OracleLimitError : public InputError {
public:
    using InputError::InputError;
};

struct OracleResult {
    std::int64_t value = 0;
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

/// Exact nu_k(K_{m,n}) by exhaustive search: every layout orbit
/// representative, and for each a branch and bound over page assignments
/// (first edge on page 0, new pages opened in order). With
/// seed_from_constructions the incumbent starts at the best constructed
/// drawing; otherwise it starts above C(mn, 2).
OracleResult brute_force_nu(int m, int n, int k, const OracleLimits& limits = {}, bool seed_from_constructions = true);

/// Smallest k with nu_k(K_{m,n}) = 0. K_{m,n} always embeds in min(m,n)
/// pages (one star per page), so only smaller k are searched.
int brute_force_pagenumber(int m, int n, const OracleLimits& limits = {});

}  // namespace bookcross
