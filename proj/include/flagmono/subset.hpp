#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace flagmono {

// Subsets of the ground set [n] = {1,...,n} as bitmasks; element e is bit e-1.
// The fixed ground-set order 1 < 2 < ... < n is used everywhere.
using Subset = std::uint32_t;

inline constexpr int kMaxGround = 16;

constexpr Subset element_bit(int e) { return Subset{1} << (e - 1); }
constexpr bool contains(Subset s, int e) { return (s >> (e - 1)) & 1u; }
constexpr bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr Subset full_set(int n) { return n == 0 ? 0u : ((Subset{1} << n) - 1); }
constexpr int set_size(Subset s) { return std::popcount(s); }

// Smallest element (1-based); 0 for the empty set.
constexpr int min_element(Subset s) { return s == 0 ? 0 : std::countr_zero(s) + 1; }

// Flat order of the lexicographic-order definition: F < G when the first
// ground-set element lying in exactly one of F, G lies in F.
constexpr bool flat_lex_less(Subset a, Subset b) {
    Subset d = a ^ b;
    return d != 0 && (a & (d & (~d + 1u))) != 0;
}

inline std::vector<int> elements(Subset s) {
    std::vector<int> out;
    for (Subset t = s; t != 0; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
    return out;
}

inline std::string to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

}  // namespace flagmono
