#include "sqdist/charpoly.hpp"

#include <sstream>

#include "sqdist/error.hpp"

namespace sqdist {

IntPolynomial::IntPolynomial(std::vector<ExactInt> ascending) : coeffs_(std::move(ascending)) {
    normalize();
}

IntPolynomial IntPolynomial::constant(const ExactInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::linear(const ExactInt& c) { return IntPolynomial({c, ExactInt(1)}); }

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactInt IntPolynomial::operator()(const ExactInt& x) const {
    ExactInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExactRational IntPolynomial::operator()(const ExactRational& x) const {
    ExactRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + ExactRational(*it);
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<ExactInt> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const ExactInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    normalize();
    return *this;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent) base *= base;
    }
    return result;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const ExactInt& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        ExactInt mag = c < 0 ? ExactInt(-c) : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (d == 0 || mag != 1) {
            out << mag;
            if (d > 0) out << '*';
        }
        if (d >= 1) out << 'x';
        if (d >= 2) out << '^' << d;
    }
    return out.str();
}

ExactMatrix reduced_matrix_B(const Partition& p) {
    const auto t = static_cast<std::size_t>(p.t());
    ExactMatrix b(t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) b(i, j) = i == j ? 4 * (p[i] - 1) : p[i];
    }
    return b;
}

namespace {

// prod (x+4-3n_i) - sum_i n_i prod_{j != i} (x+4-3n_j) over the given parts.
IntPolynomial quotient_charpoly(std::span<const int> parts) {
    IntPolynomial full = IntPolynomial::constant(1);
    IntPolynomial sum;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        full *= IntPolynomial::linear(4 - 3 * parts[i]);
        IntPolynomial omitted = IntPolynomial::constant(parts[i]);
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != i) omitted *= IntPolynomial::linear(4 - 3 * parts[j]);
        }
        sum += omitted;
    }
    return full - sum;
}

IntPolynomial shifted_product(std::span<const int> parts) {
    IntPolynomial out = IntPolynomial::constant(1);
    for (int m : parts) out *= IntPolynomial::linear(4 - 3 * m);
    return out;
}

}  // namespace

IntPolynomial det_B_charpoly(const Partition& p) { return quotient_charpoly(p.parts()); }

ExactRational det_B_charpoly_at(const Partition& p, const ExactRational& x) {
    ExactRational full = 1;
    ExactRational sum = 0;
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        full *= x + 4 - 3 * parts[i];
        ExactRational omitted = parts[i];
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != i) omitted *= x + 4 - 3 * parts[j];
        }
        sum += omitted;
    }
    return full - sum;
}

IntPolynomial reduced_poly_p(const Partition& p) {
    if (p.h() == 0) {
        throw Error(ErrorCode::NoSingletonParts, "p(G,x) needs at least one part of size 1; use det_B_charpoly");
    }
    const auto big = p.non_singleton_parts();
    IntPolynomial out = IntPolynomial::linear(1) * quotient_charpoly(big);
    out -= shifted_product(big) * ExactInt(p.h());
    return out;
}

IntPolynomial FactoredCharPoly::expand() const {
    return IntPolynomial::linear(4).pow(minus_four_power) * IntPolynomial::linear(1).pow(minus_one_power) *
           residual;
}

FactoredCharPoly char_poly_factored(const Partition& p) {
    FactoredCharPoly f;
    f.minus_four_power = static_cast<unsigned>(p.n() - p.t());
    if (p.h() == 0) {
        f.residual = det_B_charpoly(p);
    } else {
        f.minus_one_power = static_cast<unsigned>(p.h() - 1);
        f.residual = reduced_poly_p(p);
    }
    return f;
}

ExactInt det_delta_exact(const Partition& p) {
    ExactInt full = 1;
    ExactInt sum = 0;
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        full *= 3 * parts[i] - 4;
        ExactInt omitted = parts[i];
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != i) omitted *= 3 * parts[j] - 4;
        }
        sum += omitted;
    }
    return boost::multiprecision::pow(ExactInt(-4), static_cast<unsigned>(p.n() - p.t())) * (sum + full);
}

std::string_view to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "negative";
        case Sign::Zero: return "zero";
        case Sign::Positive: return "positive";
    }
    return "unknown";
}

Sign lambda_s1_sign(const Partition& p) {
    if (p.h() < 1 || p.s() < 1) {
        throw Error(ErrorCode::NotApplicable, "sign criterion needs h >= 1 and s >= 1 (partition " +
                                                  p.to_string() + ")");
    }
    const auto big = p.non_singleton_parts();
    ExactInt product = 1;
    ExactInt weighted = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        product *= 3 * big[i] - 4;
        ExactInt omitted = big[i];
        for (std::size_t j = 0; j < big.size(); ++j) {
            if (j != i) omitted *= 3 * big[j] - 4;
        }
        weighted += omitted;
    }
    const ExactInt lhs = ExactInt(p.h() - 1) * product;
    if (lhs > weighted) return Sign::Positive;
    if (lhs < weighted) return Sign::Negative;
    return Sign::Zero;
}

}  // namespace sqdist
