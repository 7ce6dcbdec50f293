#include "bookcross/bounds.hpp"

#include <algorithm>

#include "bookcross/constructions.hpp"
#include "bookcross/error.hpp"

namespace bookcross {

namespace {

using boost::multiprecision::pow;

std::int64_t to_int64(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<std::int64_t>::max()) || v < BigInt(std::numeric_limits<std::int64_t>::min()))
        throw OverflowError("bound value exceeds 64 bits");
    return v.convert_to<std::int64_t>();
}

// floor(x^{1/4}) for x >= 0
BigInt floor_fourth_root(const BigInt& x) { return boost::multiprecision::sqrt(boost::multiprecision::sqrt(x)); }

BigInt ceil_fourth_root(const BigInt& x) {
    BigInt r = floor_fourth_root(x);
    return pow(r, 4) == x ? r : r + 1;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

int half_up(int k) { return (k + 1) / 2; }

void require_positive(int k, const char* what) {
    if (k < 1) throw InputError(std::string(what) + " must be >= 1");
}

const BigInt& precision() {
    static const BigInt d = pow(BigInt(10), 15);
    return d;
}

}  // namespace

BoundQuery BoundQuery::make(int k, int m, int n) {
    require_positive(k, "k");
    if (m < 1 || n < 1) throw InputError("m and n must be >= 1");
    const std::int64_t ell = checked::mul(k + 1, k + 1) / 4;
    return {k, m, n, ell, n % ell, m % k, n % k};
}

std::int64_t zarankiewicz(int m, int n) {
    if (m < 0 || n < 0) throw InputError("zarankiewicz needs m, n >= 0");
    return checked::mul(checked::mul(m / 2, (m - 1) / 2), checked::mul(n / 2, (n - 1) / 2));
}

BoundValue riskin_value(int m, int n) {
    if (m < 1 || n < 1) throw InputError("riskin_value needs m, n >= 1");
    const BigInt num = BigInt(n) * (m - 1) * (BigInt(2) * m * n - 3 * BigInt(m) - n);
    return {Rational(num, 12), n % m == 0, "riskin"};
}

std::int64_t turan_lower(int /*k*/, std::int64_t n, std::int64_t s) {
    if (s < 1) throw InputError("turan_lower needs s >= 1");
    if (n < 0) throw InputError("turan_lower needs n >= 0");
    const std::int64_t q = n % s;
    const std::int64_t base = (n - q) / s;
    return checked::add(checked::mul(q, checked::choose2(base + 1)), checked::mul(s - q, checked::choose2(base)));
}

std::int64_t main1_value(int k, std::int64_t n) {
    if (k < 2 || k > 6) throw InputError("main1_value is stated for k in 2..6");
    if (n < 1) throw InputError("main1_value needs n >= 1");
    return turan_lower(k, n, (k + 1) * (k + 1) / 4);
}

std::int64_t blowup_upper(int k, std::int64_t n) {
    require_positive(k, "k");
    if (n < 1) throw InputError("blowup_upper needs n >= 1");
    return turan_lower(k, n, checked::mul(k + 1, k + 1) / 4);
}

std::pair<Rational, Rational> seven_fourths_power(int k) {
    require_positive(k, "k");
    const BigInt scaled = pow(BigInt(k), 7) * pow(precision(), 4);
    return {Rational(floor_fourth_root(scaled), precision()), Rational(ceil_fourth_root(scaled), precision())};
}

RationalBounds main2_bounds(int k, std::int64_t n) {
    require_positive(k, "k");
    if (n < 1) throw InputError("main2_bounds needs n >= 1");
    const BigInt nn = BigInt(n) * n;
    // Rounding k^{7/4} up enlarges the denominator, so the lower bound is
    // never overstated.
    const Rational upper_power = seven_fourths_power(k).second;
    Rational lower = Rational(2 * nn) / (Rational(BigInt(k) * k) + 2000 * upper_power) - Rational(n);
    Rational upper = Rational(2 * nn, BigInt(k) * k) + Rational(BigInt(n), 2);
    return {lower, upper};
}

std::int64_t sssv_lower_even(int k, std::int64_t n) {
    if (k < 2 || k % 2 != 0) throw InputError("sssv_lower_even needs an even k >= 2");
    if (n < 0) throw InputError("sssv_lower_even needs n >= 0");
    const std::int64_t f = n / checked::mul(k, k - 1);
    return checked::mul(f, checked::sub(n, checked::mul(checked::mul(k / 2, k - 1), f - 1)));
}

BoundValue general_lower(int k, int m, int n) {
    require_positive(k, "k");
    if (m < 1 || n < 1) throw InputError("general_lower needs m, n >= 1");
    const int h = half_up(k);
    const BigInt denom = BigInt(3) * (3 * h - 1) * (3 * h - 1);
    const BigInt num = BigInt(checked::choose2(m)) * checked::choose2(n);
    const bool valid = m >= 6 * h - 1 && n >= std::max(6 * h - 1, 2 * h * h);
    return {Rational(num, denom), valid, "general_lower"};
}

std::int64_t upp1_bound(int k, int m, int n) {
    require_positive(k, "k");
    if (m < 0 || n < 0) throw InputError("upp1_bound needs m, n >= 0");
    const int r = m % k;
    const int s = n % k;
    const BigInt num = BigInt(m - r) * (n - s) * (m - k + r) * (n - k + s);
    const BigInt den = BigInt(4) * k * k;
    if (num % den != 0) throw std::logic_error("upp1_bound numerator not divisible by 4k^2");
    return to_int64(num / den);
}

std::int64_t nonembeddable_width(int k) {
    require_positive(k, "k");
    // W >= k^2/4 + 500 k^{7/4}  <=>  4W - k^2 >= 2000 k^{7/4}  <=>  4W - k^2 >= T,
    // T = ceil(2000 k^{7/4}) = ceil((2000^4 k^7)^{1/4}).
    const BigInt t = ceil_fourth_root(pow(BigInt(2000), 4) * pow(BigInt(k), 7));
    return to_int64(ceil_div(BigInt(k) * k + t, 4));
}

std::vector<ScanEntry> evaluate_bounds(int k, int m, int n, std::int64_t construct_limit) {
    const auto query = BoundQuery::make(k, m, n);
    const bool family = m == k + 1;
    std::vector<ScanEntry> out;
    auto add = [&](std::string name, bool is_lower, Rational value, bool valid) {
        out.push_back({k, m, n, name, is_lower, {std::move(value), valid, name}});
    };
    auto integer = [](std::int64_t v) { return Rational(BigInt(v)); };

    // lower bounds
    add("turan_exact_pagenumber", true, integer(turan_lower(k, n, query.ell)), family && k >= 2 && k <= 6);
    if (k % 2 == 0)
        add("sssv_even", true, integer(sssv_lower_even(k, n)), family);
    else
        add("sssv_even", true, Rational(0), false);
    {
        auto g = general_lower(k, m, n);
        add("general_lower", true, g.value, g.valid);
    }
    add("turan_width", true, integer(turan_lower(k, n, nonembeddable_width(k) - 1)), family);
    const auto m2 = main2_bounds(k, n);
    add("main2_lower", true, m2.lower, family);

    // upper bounds
    add("main1", false, family && k >= 2 && k <= 6 ? integer(main1_value(k, n)) : Rational(0),
        family && k >= 2 && k <= 6);
    add("blowup_formula", false, integer(blowup_upper(k, n)), family);
    add("upp1", false, integer(upp1_bound(k, m, n)), true);
    add("main2_upper", false, m2.upper, family);
    add("zarankiewicz", false, integer(zarankiewicz(m, n)), k >= 2);
    {
        auto rv = riskin_value(m, n);
        add("riskin", false, rv.value, rv.valid);
    }
    const std::int64_t edges = static_cast<std::int64_t>(m) * n;
    if (construct_limit > 0 && edges <= construct_limit) {
        if (family && n >= query.ell)
            add("blowup_drawing", false, integer(count_crossings(blowup(balanced_embedding(k), n)).total), true);
        add("block_cyclic_drawing", false, integer(count_crossings(block_cyclic(m, n, k)).total), true);
    }
    return out;
}

ScanReport consistency_scan(int k_min, int k_max, int n_min, int n_max, std::int64_t construct_limit) {
    if (k_min < 1 || k_max < k_min || n_min < 1 || n_max < n_min) throw InputError("empty or invalid scan range");
    ScanReport report;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = n_min; n <= n_max; ++n) {
            auto entries = evaluate_bounds(k, k + 1, n, construct_limit);
            for (const auto& lo : entries) {
                if (!lo.is_lower || !lo.bound.valid) continue;
                for (const auto& up : entries) {
                    if (up.is_lower || !up.bound.valid) continue;
                    if (lo.bound.value > up.bound.value)
                        report.violations.push_back({k, n, lo.formula, lo.bound.value, up.formula, up.bound.value});
                }
            }
            for (auto& e : entries) report.entries.push_back(std::move(e));
        }
    }
    return report;
}

}  // namespace bookcross
