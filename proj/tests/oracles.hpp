#pragma once

// Test-side reference implementations. None of these share code with the
// library paths they check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Number of partitions of n into exactly k positive parts.
inline long long partition_count(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n <= 0 || k <= 0 || k > n) return 0;
    return partition_count(n - 1, k - 1) + partition_count(n - k, k);
}

// All non-increasing k-tuples of positive integers summing to n, bounded by
// `cap`, in whatever order recursion produces.
inline void brute_partitions(int n, int k, int cap, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (k == 0) {
        if (n == 0) out.push_back(prefix);
        return;
    }
    for (int v = std::min(n, cap); v >= 1; --v) {
        prefix.push_back(v);
        brute_partitions(n - v, k - 1, v, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> brute_partitions(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    brute_partitions(n, k, n, prefix, out);
    return out;
}

// Prefix-sum dominance of descending tuples of equal length and total.
inline bool dominates(const std::vector<int>& x, const std::vector<int>& y) {
    long a = 0, b = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        a += x[i];
        b += y[i];
        if (a < b) return false;
    }
    return a == b;
}

// Squared distance matrix of K_{parts} written out entry by entry.
inline std::vector<std::vector<int>> block_matrix(const std::vector<int>& parts) {
    std::vector<int> owner;
    for (std::size_t i = 0; i < parts.size(); ++i) owner.insert(owner.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    const std::size_t n = owner.size();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m[i][j] = owner[i] == owner[j] ? 4 : 1;
    return m;
}

// Rational Gaussian elimination determinant.
inline cpp_rational det_gauss(std::vector<std::vector<cpp_rational>> a) {
    const std::size_t n = a.size();
    cpp_rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const cpp_rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// det(xI - M) at integer x.
inline cpp_int charpoly_at(const std::vector<std::vector<int>>& m, long long x) {
    const std::size_t n = m.size();
    std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? x : 0) - m[i][j];
    const cpp_rational d = det_gauss(std::move(a));
    return boost::multiprecision::numerator(d);
}

// Coefficients (ascending) of the degree-n polynomial through (x_i, y_i),
// by Newton divided differences over Q.
inline std::vector<cpp_rational> interpolate(const std::vector<long long>& xs, const std::vector<cpp_int>& ys) {
    const std::size_t n = xs.size();
    std::vector<cpp_rational> c(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / cpp_rational(xs[i] - xs[i - j]);
    std::vector<cpp_rational> poly(n, 0);
    std::vector<cpp_rational> basis{1};
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += c[j] * basis[k];
        std::vector<cpp_rational> next(basis.size() + 1, 0);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            next[k + 1] += basis[k];
            next[k] -= basis[k] * xs[j];
        }
        basis = std::move(next);
    }
    return poly;
}

// Deterministic small-tuple generator for property tests.
class TupleGen {
public:
    explicit TupleGen(std::uint64_t seed) : rng_(seed) {}

    // Random composition of n into t parts >= 1, returned unsorted.
    std::vector<int> composition(int n, int t) {
        std::vector<int> parts(static_cast<std::size_t>(t), 1);
        for (int left = n - t; left > 0; --left) {
            std::uniform_int_distribution<int> pick(0, t - 1);
            ++parts[static_cast<std::size_t>(pick(rng_))];
        }
        return parts;
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
