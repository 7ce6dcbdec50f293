#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bookcross {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parameters of a bound evaluation; the derived quantities are always
/// recomputed from (k, m, n).
struct BoundQuery {
    int k;
    int m;
    int n;
    std::int64_t ell;    // floor((k+1)^2 / 4)
    std::int64_t q;      // n mod ell
    std::int64_t r;      // m mod k
    std::int64_t s_mod;  // n mod k

    static BoundQuery make(int k, int m, int n);
};

struct BoundValue {
    Rational value;
    bool valid = false;  // preconditions of the source result hold
    std::string source;

    double approx() const { return value.convert_to<double>(); }
};

/// floor(m/2) floor((m-1)/2) floor(n/2) floor((n-1)/2)
std::int64_t zarankiewicz(int m, int n);

/// n(m-1)(2mn-3m-n)/12, exact one-page crossing number when m | n.
BoundValue riskin_value(int m, int n);

/// q C((n-q)/s + 1, 2) + (s-q) C((n-q)/s, 2) with q = n mod s: the edge
/// count of the complement of the Turan graph T(n, s). A lower bound on
/// nu_k(K_{k+1,n}) whenever K_{k+1,s+1} has no k-page embedding.
std::int64_t turan_lower(int k, std::int64_t n, std::int64_t s);

/// Exact nu_k(K_{k+1,n}) for k in 2..6.
std::int64_t main1_value(int k, std::int64_t n);

/// Upper bound of the blow-up construction, valid for every k:
/// turan_lower(k, n, floor((k+1)^2/4)).
std::int64_t blowup_upper(int k, std::int64_t n);

struct RationalBounds {
    Rational lower;  // never above 2n^2/(k^2 + 2000 k^{7/4}) - n
    Rational upper;  // 2n^2/k^2 + n/2, exact
};

RationalBounds main2_bounds(int k, std::int64_t n);

/// Rational bracket [lo, hi] of k^{7/4} with hi - lo <= 10^-15.
std::pair<Rational, Rational> seven_fourths_power(int k);

/// Lower bound for even k, evaluated exactly as the closed form is stated:
/// f (n - (k/2)(k-1)(f-1)) with f = floor(n / (k(k-1))).
std::int64_t sssv_lower_even(int k, std::int64_t n);

/// C(m,2) C(n,2) / (3 (3 ceil(k/2) - 1)^2); valid for m >= 6 ceil(k/2) - 1
/// and n >= max(6 ceil(k/2) - 1, 2 ceil(k/2)^2).
BoundValue general_lower(int k, int m, int n);

/// (m-r)(n-s)(m-k+r)(n-k+s)/(4k^2) with r = m mod k, s = n mod k.
std::int64_t upp1_bound(int k, int m, int n);

/// ceil(k^2/4 + 500 k^{7/4}), computed exactly.
std::int64_t nonembeddable_width(int k);

struct ScanEntry {
    int k;
    int m;
    int n;
    std::string formula;
    bool is_lower;
    BoundValue bound;
};

struct Violation {
    int k;
    int n;
    std::string lower_source;
    Rational lower;
    std::string upper_source;
    Rational upper;
};

struct ScanReport {
    std::vector<ScanEntry> entries;
    std::vector<Violation> violations;
};

/// Every lower and upper bound on nu_k(K_{m,n}) that applies at (k, m, n).
/// Entries whose preconditions fail are reported with valid = false.
/// When construct_limit > 0, drawings with at most that many edges are
/// built and their crossings counted as extra upper bounds.
std::vector<ScanEntry> evaluate_bounds(int k, int m, int n, std::int64_t construct_limit = 0);

/// Evaluates the K_{k+1,n} family over the given ranges and lists every
/// valid lower bound exceeding a valid upper bound. Reports, never throws
/// on a violation.
ScanReport consistency_scan(int k_min, int k_max, int n_min, int n_max, std::int64_t construct_limit = 0);

}  // namespace bookcross
