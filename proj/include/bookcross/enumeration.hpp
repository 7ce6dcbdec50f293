#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bookcross/drawing.hpp"

namespace bookcross {

/// A D_{m+n} orbit of black/white arrangements ('1' = black), represented
/// by its lexicographically smallest member.
struct NecklaceClass {
    std::string canonical;
    int orbit_size = 0;

    friend bool operator==(const NecklaceClass&, const NecklaceClass&) = default;
};

/// Lexicographic minimum over all rotations of s and of reversed s.
std::string canonical_form(std::string_view s);

/// Number of distinct images of s under the dihedral group.
int orbit_size(std::string_view s);

/// Largest m+n accepted by the enumerators.
inline constexpr int max_enumeration_size = 40;

/// One class per orbit, canonical strings in lexicographic order.
std::vector<NecklaceClass> enumerate_classes(int m, int n);

/// One layout per orbit, in the order of enumerate_classes.
std::vector<CircularLayout> enumerate_layouts(int m, int n);

/// Closed-form orbit count via the Burnside counting. The (m even,
/// n odd) case is evaluated with m and n swapped.
std::uint64_t count_formula(int m, int n);

}  // namespace bookcross
