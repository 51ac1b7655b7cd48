#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace flagmono {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Rank over the rationals by fraction-free (Bareiss) elimination.  Runs on
// overflow-checked 64-bit integers and redoes the computation with
// arbitrary-precision integers if any intermediate product overflows.
int exact_rank(const IntMat& m);

// Basis of the integer kernel {x : m x = 0}, by exact rational Gauss-Jordan
// elimination with each basis vector scaled to coprime integers.
std::vector<std::vector<BigInt>> kernel_basis(const IntMat& m);

}  // namespace flagmono
