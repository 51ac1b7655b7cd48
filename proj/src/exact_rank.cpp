#include "flagmono/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <vector>

namespace flagmono {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct OverflowSignal {};

// 64-bit integer whose arithmetic reports overflow instead of wrapping.
struct Checked {
    long long v = 0;
    Checked() = default;
    Checked(long long x) : v(x) {}
    friend Checked operator*(Checked a, Checked b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw OverflowSignal{};
        return r;
    }
    friend Checked operator-(Checked a, Checked b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw OverflowSignal{};
        return r;
    }
    friend Checked operator/(Checked a, Checked b) { return a.v / b.v; }
    bool is_zero() const { return v == 0; }
    bool abs_less(const Checked& o) const {
        unsigned long long xa = v < 0 ? -static_cast<unsigned long long>(v) : v;
        unsigned long long xb = o.v < 0 ? -static_cast<unsigned long long>(o.v) : o.v;
        return xa < xb;
    }
};

struct Big {
    BigInt v;
    Big() = default;
    Big(long long x) : v(x) {}
    Big(BigInt x) : v(std::move(x)) {}
    friend Big operator*(const Big& a, const Big& b) { return Big(BigInt(a.v * b.v)); }
    friend Big operator-(const Big& a, const Big& b) { return Big(BigInt(a.v - b.v)); }
    friend Big operator/(const Big& a, const Big& b) { return Big(BigInt(a.v / b.v)); }
    bool is_zero() const { return v == 0; }
    bool abs_less(const Big& o) const { return abs(v) < abs(o.v); }
};

// Fraction-free elimination; the divisions are exact.  Pivots prefer the
// smallest nonzero magnitude to limit entry growth.
template <class T>
int bareiss_rank(int rows, int cols, std::vector<T> a) {
    auto at = [&](int r, int c) -> T& { return a[static_cast<std::size_t>(r) * cols + c]; };
    T prev(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (at(i, col).is_zero()) continue;
            if (pivot < 0 || at(i, col).abs_less(at(pivot, col))) pivot = i;
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
        for (int i = rank + 1; i < rows; ++i) {
            for (int c = col + 1; c < cols; ++c)
                at(i, c) = (at(i, c) * at(rank, col) - at(i, col) * at(rank, c)) / prev;
            at(i, col) = T(0);
        }
        prev = at(rank, col);
        ++rank;
    }
    return rank;
}

}  // namespace

int exact_rank(const IntMat& m) {
    try {
        std::vector<Checked> a(m.a.begin(), m.a.end());
        return bareiss_rank(m.rows, m.cols, std::move(a));
    } catch (const OverflowSignal&) {
        std::vector<Big> a(m.a.begin(), m.a.end());
        return bareiss_rank(m.rows, m.cols, std::move(a));
    }
}

std::vector<std::vector<BigInt>> kernel_basis(const IntMat& m) {
    const int rows = m.rows, cols = m.cols;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    // reduced row echelon form
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (a[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        Rational inv = a[row][col];
        for (int j = col; j < cols; ++j) a[row][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<BigInt>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> x(cols, 0);
        x[free_col] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -a[i][free_col];
        BigInt scale = 1;
        for (const Rational& q : x) scale = boost::multiprecision::lcm(scale, BigInt(denominator(q)));
        std::vector<BigInt> xi(cols);
        BigInt g = 0;
        for (int j = 0; j < cols; ++j) {
            Rational scaled = x[j] * Rational(scale);
            xi[j] = BigInt(numerator(scaled));
            g = boost::multiprecision::gcd(g, xi[j]);
        }
        if (g > 1)
            for (BigInt& v : xi) v /= g;
        basis.push_back(std::move(xi));
    }
    return basis;
}

}  // namespace flagmono
