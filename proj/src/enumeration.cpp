#include "bookcross/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "bookcross/error.hpp"

namespace bookcross {

namespace {

using boost::multiprecision::cpp_int;

// Arrangements of length N live in the low N bits; string position 0 is
// bit N-1, so numeric order equals lexicographic order of the strings.
struct Ring {
    int size;
    std::uint64_t mask;

    explicit Ring(int n) : size(n), mask(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) {}

    std::uint64_t rotate(std::uint64_t x, int r) const {
        if (r == 0) return x;
        return ((x << r) | (x >> (size - r))) & mask;
    }

    std::uint64_t reverse(std::uint64_t x) const {
        std::uint64_t y = 0;
        for (int i = 0; i < size; ++i, x >>= 1) y = (y << 1) | (x & 1U);
        return y;
    }

    bool is_canonical(std::uint64_t x) const {
        for (int r = 1; r < size; ++r)
            if (rotate(x, r) < x) return false;
        const auto rev = reverse(x);
        for (int r = 0; r < size; ++r)
            if (rotate(rev, r) < x) return false;
        return true;
    }

    int orbit_size(std::uint64_t x) const {
        std::set<std::uint64_t> images;
        const auto rev = reverse(x);
        for (int r = 0; r < size; ++r) {
            images.insert(rotate(x, r));
            images.insert(rotate(rev, r));
        }
        return static_cast<int>(images.size());
    }

    std::string to_string(std::uint64_t x) const {
        std::string s(static_cast<std::size_t>(size), '0');
        for (int i = 0; i < size; ++i)
            if ((x >> (size - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }
};

void check_bits(std::string_view s) {
    if (s.empty()) throw InputError("arrangement string must be nonempty");
    for (char c : s)
        if (c != '0' && c != '1') throw InputError("arrangement string must contain only '0' and '1'");
}

void check_sizes(int m, int n) {
    if (m < 1 || n < 1) throw InputError("enumeration needs m >= 1 and n >= 1");
    if (m + n > max_enumeration_size)
        throw InputError("enumeration supports m+n <= " + std::to_string(max_enumeration_size));
}

cpp_int binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    cpp_int r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

}  // namespace

std::string canonical_form(std::string_view s) {
    check_bits(s);
    const std::string forward(s);
    const std::string backward(s.rbegin(), s.rend());
    std::string best = forward;
    for (const auto* base : {&forward, &backward}) {
        for (std::size_t r = 0; r < base->size(); ++r) {
            std::string image = base->substr(r) + base->substr(0, r);
            if (image < best) best = std::move(image);
        }
    }
    return best;
}

int orbit_size(std::string_view s) {
    check_bits(s);
    const std::string forward(s);
    const std::string backward(s.rbegin(), s.rend());
    std::set<std::string> images;
    for (const auto* base : {&forward, &backward})
        for (std::size_t r = 0; r < base->size(); ++r) images.insert(base->substr(r) + base->substr(0, r));
    return static_cast<int>(images.size());
}

std::vector<NecklaceClass> enumerate_classes(int m, int n) {
    check_sizes(m, n);
    const Ring ring(m + n);
    std::vector<NecklaceClass> classes;
    // Gosper's hack walks all words with m ones in increasing numeric order.
    std::uint64_t x = (std::uint64_t{1} << m) - 1;
    const std::uint64_t end = std::uint64_t{1} << (m + n);
    while (x < end) {
        if (ring.is_canonical(x)) classes.push_back({ring.to_string(x), ring.orbit_size(x)});
        const std::uint64_t low = x & (~x + 1);
        const std::uint64_t ripple = x + low;
        x = ripple | (((x ^ ripple) >> 2) / low);
    }
    return classes;
}

std::vector<CircularLayout> enumerate_layouts(int m, int n) {
    std::vector<CircularLayout> layouts;
    for (const auto& c : enumerate_classes(m, n)) layouts.push_back(CircularLayout::from_bits(c.canonical));
    return layouts;
}

std::uint64_t count_formula(int m, int n) {
    if (m < 1 || n < 1) throw InputError("count_formula needs m >= 1 and n >= 1");
    if (m % 2 == 0 && n % 2 == 1) std::swap(m, n);
    const int total = m + n;
    const int d = std::gcd(m, n);

    // rotations: k = 0..d-1 with o(k) the additive order of k mod d
    cpp_int rotations = 0;
    for (int k = 0; k < d; ++k) {
        const int order = d / std::gcd(k, d);
        rotations += binomial(total / order, m / order);
    }

    cpp_int reflections;
    if (m % 2 == 0 && n % 2 == 0) {
        reflections = cpp_int(total / 2) *
                      (binomial(total / 2, n / 2) + binomial((total - 2) / 2, m / 2) + binomial((total - 2) / 2, n / 2));
    } else if (m % 2 == 1 && n % 2 == 0) {
        reflections = cpp_int(total) * binomial((total - 1) / 2, n / 2);
    } else {
        reflections = cpp_int(total) * binomial((total - 2) / 2, (m - 1) / 2);
    }

    const cpp_int sum = reflections + rotations;
    if (sum % (2 * total) != 0) throw std::logic_error("orbit count is not an integer");
    const cpp_int count = sum / (2 * total);
    if (count > cpp_int(std::numeric_limits<std::uint64_t>::max())) throw OverflowError("orbit count exceeds 64 bits");
    return count.convert_to<std::uint64_t>();
}

}  // namespace bookcross
