#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sqdist/partitions.hpp"

namespace sqdist {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, ascending degree. Always normalized: no trailing zero
/// coefficients, and the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<ExactInt> ascending);

    static IntPolynomial constant(const ExactInt& c);
    /// x + c
    static IntPolynomial linear(const ExactInt& c);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    const std::vector<ExactInt>& coefficients() const noexcept { return coeffs_; }
    ExactInt coefficient(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : ExactInt(0); }

    ExactInt operator()(const ExactInt& x) const;
    ExactRational operator()(const ExactRational& x) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const IntPolynomial& other);
    IntPolynomial& operator*=(const ExactInt& scalar);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const ExactInt& s) { return a *= s; }

    IntPolynomial pow(unsigned exponent) const;

    /// e.g. "x^2 - 8*x + 12"
    std::string to_string() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void normalize();

    std::vector<ExactInt> coeffs_;
};

/// Row-major square matrix of exact integers.
struct ExactMatrix {
    std::size_t order = 0;
    std::vector<ExactInt> entries;

    explicit ExactMatrix(std::size_t n = 0) : order(n), entries(n * n) {}
    ExactInt& operator()(std::size_t i, std::size_t j) { return entries[i * order + j]; }
    const ExactInt& operator()(std::size_t i, std::size_t j) const { return entries[i * order + j]; }
};

/// t x t quotient matrix: diagonal 4(n_i - 1), off-diagonal entries of row i
/// equal to n_i.
ExactMatrix reduced_matrix_B(const Partition& p);

/// det(xI_t - B) = prod (x+4-3n_i) - sum_i n_i prod_{j != i} (x+4-3n_j),
/// expanded exactly. Monic of degree t.
IntPolynomial det_B_charpoly(const Partition& p);

/// Same value computed straight from the product form, without expansion.
ExactRational det_B_charpoly_at(const Partition& p, const ExactRational& x);

/// p(G,x) = (x+1) det(xI - B_s) - h prod_{i<=s} (x+4-3n_i), with B_s built
/// from the s non-singleton parts. Monic of degree s+1; equals x+1-h when
/// s = 0. Throws NoSingletonParts when h = 0.
IntPolynomial reduced_poly_p(const Partition& p);

/// P_Delta(G,x) = (x+4)^{n-t} (x+1)^{h-1} r(x), where r is det_B_charpoly
/// when h = 0 and reduced_poly_p when h >= 1.
struct FactoredCharPoly {
    unsigned minus_four_power = 0;  // exponent of (x+4)
    unsigned minus_one_power = 0;   // exponent of (x+1)
    IntPolynomial residual;

    int degree() const { return static_cast<int>(minus_four_power + minus_one_power) + residual.degree(); }
    IntPolynomial expand() const;
};

FactoredCharPoly char_poly_factored(const Partition& p);

/// det Delta = (-4)^{n-t} [sum_i n_i prod_{j != i}(3n_j-4) + prod_i (3n_i-4)].
ExactInt det_delta_exact(const Partition& p);

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

std::string_view to_string(Sign s);

/// Sign of lambda_{s+1}, decided by comparing (h-1) prod (3n_i-4) with
/// sum n_i prod_{j != i} (3n_j-4) over the non-singleton parts. Every factor
/// 3n_i-4 is >= 2, so the integer comparison has the same direction as the
/// rational one. Throws NotApplicable unless h >= 1 and s >= 1.
Sign lambda_s1_sign(const Partition& p);

}  // namespace sqdist
