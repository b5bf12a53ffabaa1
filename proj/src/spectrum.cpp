#include "sqdist/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "sqdist/error.hpp"

namespace sqdist {

namespace {

ExactRational to_rational(double x) {
    if (x == 0.0) return 0;
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent);
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    ExactRational r{ExactInt(scaled)};
    const int shift = exponent - 53;
    const ExactInt two_pow = ExactInt(1) << std::abs(shift);
    if (shift >= 0) {
        r *= ExactRational(two_pow);
    } else {
        r /= ExactRational(two_pow);
    }
    return r;
}

Sign sign_of(const ExactRational& v) {
    if (v > 0) return Sign::Positive;
    if (v < 0) return Sign::Negative;
    return Sign::Zero;
}

using RationalPoly = std::vector<ExactRational>;

void trim(RationalPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const ExactRational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RationalPoly polynomial_gcd(const IntPolynomial& x, const IntPolynomial& y) {
    RationalPoly a;
    RationalPoly b;
    for (const auto& c : x.coefficients()) a.emplace_back(c);
    for (const auto& c : y.coefficients()) b.emplace_back(c);
    trim(a);
    trim(b);
    while (!b.empty()) {
        RationalPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ExactRational evaluate(const RationalPoly& p, const ExactRational& x) {
    ExactRational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Orders two simple roots known only through isolating brackets.
std::strong_ordering compare_roots(const SecularEquation& ea, const RootBracket& ra, const SecularEquation& eb,
                                   const RootBracket& rb) {
    if (ra.hi < rb.lo) return std::strong_ordering::less;
    if (ra.lo > rb.hi) return std::strong_ordering::greater;

    const RationalPoly common = polynomial_gcd(ea.polynomial(), eb.polynomial());
    ExactRational width = ExactRational(1) / ExactRational(ExactInt(1) << 64);
    for (int round = 0; round < 4; ++round) {
        const ExactBracket a = ea.refine(ra, width);
        const ExactBracket b = eb.refine(rb, width);
        if (a.hi < b.lo) return std::strong_ordering::less;
        if (a.lo > b.hi) return std::strong_ordering::greater;
        if (common.size() >= 2) {
            const ExactRational lo = std::max(a.lo, b.lo);
            const ExactRational hi = std::min(a.hi, b.hi);
            const Sign at_lo = sign_of(evaluate(common, lo));
            const Sign at_hi = sign_of(evaluate(common, hi));
            if (at_lo == Sign::Zero || at_hi == Sign::Zero || at_lo != at_hi) {
                return std::strong_ordering::equal;
            }
        }
        width *= width;
    }
    throw Error(ErrorCode::BracketFailure, "could not separate two roots");
}

}  // namespace

SecularEquation::SecularEquation(const Partition& p) {
    std::map<int, int> count_by_size;
    for (int m : p.parts()) ++count_by_size[m];
    for (const auto& [m, k] : count_by_size) {
        sizes_.push_back(m);
        counts_.push_back(k);
        poles_.push_back(3 * m - 4);
        weights_.push_back(k * m);
    }
    upper_ = 3 * p.largest() + p.n() - 4;
}

double SecularEquation::value(double x) const {
    double sum = 1.0;
    for (std::size_t i = 0; i < poles_.size(); ++i) sum -= weights_[i] / (x - poles_[i]);
    return sum;
}

ExactRational SecularEquation::value(const ExactRational& x) const {
    ExactRational sum = 1;
    for (std::size_t i = 0; i < poles_.size(); ++i) sum -= ExactRational(weights_[i]) / (x - poles_[i]);
    return sum;
}

Sign SecularEquation::sign_at(double x) const {
    double sum = 1.0;
    double magnitude = 1.0;
    for (std::size_t i = 0; i < poles_.size(); ++i) {
        const double term = weights_[i] / (x - poles_[i]);
        sum -= term;
        magnitude += std::abs(term);
    }
    const double bound =
        8.0 * static_cast<double>(poles_.size() + 2) * std::numeric_limits<double>::epsilon() * magnitude;
    if (sum > bound) return Sign::Positive;
    if (sum < -bound) return Sign::Negative;
    return sign_at(to_rational(x));
}

Sign SecularEquation::sign_at(const ExactRational& x) const { return sign_of(value(x)); }

IntPolynomial SecularEquation::polynomial() const {
    IntPolynomial full = IntPolynomial::constant(1);
    IntPolynomial sum;
    for (std::size_t i = 0; i < poles_.size(); ++i) {
        full *= IntPolynomial::linear(-poles_[i]);
        IntPolynomial omitted = IntPolynomial::constant(weights_[i]);
        for (std::size_t j = 0; j < poles_.size(); ++j) {
            if (j != i) omitted *= IntPolynomial::linear(-poles_[j]);
        }
        sum += omitted;
    }
    return full - sum;
}

std::pair<double, double> SecularEquation::interval(std::size_t i) const {
    const double lo = poles_[i];
    const double hi = i + 1 < poles_.size() ? poles_[i + 1] : upper_;
    return {lo, hi};
}

RootBracket SecularEquation::isolate(std::size_t i, std::optional<double> lo_opt, std::optional<double> hi_opt,
                                     double width, int max_steps) const {
    if (i >= poles_.size()) {
        throw Error(ErrorCode::BracketFailure, "root index out of range");
    }
    const auto [pole_lo, limit_hi] = interval(i);
    double lo = lo_opt.value_or(pole_lo);
    double hi = hi_opt.value_or(limit_hi);
    const bool hi_is_pole = i + 1 < poles_.size();

    // f -> -inf just right of a pole and -> +inf just left of one.
    const Sign s_lo = lo == pole_lo ? Sign::Negative : sign_at(lo);
    const Sign s_hi = hi_is_pole && hi == limit_hi ? Sign::Positive : sign_at(hi);
    if (s_lo == Sign::Zero) return {lo, lo, lo};
    if (s_hi == Sign::Zero) return {hi, hi, hi};
    if (!(s_lo == Sign::Negative && s_hi == Sign::Positive) || !(lo < hi)) {
        throw Error(ErrorCode::BracketFailure,
                    "secular function does not change sign on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    for (int step = 0; step < max_steps && hi - lo > width; ++step) {
        const double mid = lo + 0.5 * (hi - lo);
        if (!(mid > lo && mid < hi)) break;
        switch (sign_at(mid)) {
            case Sign::Zero: return {mid, mid, mid};
            case Sign::Negative: lo = mid; break;
            case Sign::Positive: hi = mid; break;
        }
    }
    return {lo + 0.5 * (hi - lo), lo, hi};
}

ExactBracket SecularEquation::refine(const RootBracket& start, const ExactRational& width) const {
    ExactBracket b{to_rational(start.lo), to_rational(start.hi)};
    if (b.lo == b.hi) return b;
    const auto is_pole = [&](const ExactRational& x) {
        return std::any_of(poles_.begin(), poles_.end(), [&](int p) { return x == p; });
    };
    const Sign s_lo = is_pole(b.lo) ? Sign::Negative : sign_at(b.lo);
    if (s_lo == Sign::Zero) return {b.lo, b.lo};
    if (!is_pole(b.hi) && sign_at(b.hi) == Sign::Zero) return {b.hi, b.hi};
    while (b.hi - b.lo > width) {
        const ExactRational mid = (b.lo + b.hi) / 2;
        switch (sign_at(mid)) {
            case Sign::Zero: return {mid, mid};
            case Sign::Negative: b.lo = mid; break;
            case Sign::Positive: b.hi = mid; break;
        }
    }
    return b;
}

std::vector<IsolatedEigenvalue> secular_roots(const Partition& p) {
    const SecularEquation eq(p);
    std::vector<IsolatedEigenvalue> out;
    for (std::size_t i = 0; i < eq.root_count(); ++i) {
        RootBracket r;
        if (eq.poles()[i] == -1 && p.s() >= 1) {
            // lambda_{s+1}: sign known exactly, so 0 splits the gap.
            switch (lambda_s1_sign(p)) {
                case Sign::Zero: r = {0.0, 0.0, 0.0}; break;
                case Sign::Negative: r = eq.isolate(i, std::nullopt, 0.0); break;
                case Sign::Positive: r = eq.isolate(i, 0.0, std::nullopt); break;
            }
        } else {
            r = eq.isolate(i);
        }
        out.push_back({r.value, r.lo, r.hi, i});
    }
    std::reverse(out.begin(), out.end());
    return out;
}

int SpectrumReport::total_multiplicity() const {
    int total = static_cast<int>(isolated_part.size());
    for (const auto& e : exact_part) total += e.multiplicity;
    return total;
}

std::vector<double> SpectrumReport::eigenvalues() const {
    std::vector<double> out;
    for (const auto& e : exact_part) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value.convert_to<double>());
    for (const auto& r : isolated_part) out.push_back(r.value);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double SpectrumReport::trace() const {
    double sum = 0.0;
    for (double v : eigenvalues()) sum += v;
    return sum;
}

SpectrumReport full_spectrum(const Partition& p) {
    SpectrumReport report;
    const SecularEquation eq(p);
    if (p.n() > p.t()) report.exact_part.push_back({ExactRational(-4), p.n() - p.t()});
    for (std::size_t i = 0; i < eq.sizes().size(); ++i) {
        if (eq.counts()[i] >= 2) report.exact_part.push_back({ExactRational(eq.poles()[i]), eq.counts()[i] - 1});
    }
    std::sort(report.exact_part.begin(), report.exact_part.end(),
              [](const ExactEigenvalue& a, const ExactEigenvalue& b) { return a.value > b.value; });
    report.isolated_part = secular_roots(p);
    return report;
}

std::string_view to_string(InertiaDerivation d) {
    switch (d) {
        case InertiaDerivation::AllPartsAtLeastTwo: return "all-parts-ge-2";
        case InertiaDerivation::SingletonCasePositive: return "singleton-case-positive";
        case InertiaDerivation::SingletonCaseZero: return "singleton-case-zero";
        case InertiaDerivation::SingletonCaseNegative: return "singleton-case-negative";
    }
    return "unknown";
}

InertiaTriple inertia(const Partition& p) {
    const int n = p.n();
    const int s = p.s();
    if (p.h() == 0) return {p.t(), 0, n - p.t(), InertiaDerivation::AllPartsAtLeastTwo};
    // s = 0 is the complete graph: h-1 > 0 = empty sum, the positive case.
    const Sign sign = s == 0 ? Sign::Positive : lambda_s1_sign(p);
    switch (sign) {
        case Sign::Positive: return {s + 1, 0, n - s - 1, InertiaDerivation::SingletonCasePositive};
        case Sign::Zero: return {s, 1, n - s - 1, InertiaDerivation::SingletonCaseZero};
        case Sign::Negative: break;
    }
    return {s, 0, n - s, InertiaDerivation::SingletonCaseNegative};
}

EnergyReport energy(const Partition& p) {
    EnergyReport report;
    report.integer_part = ExactInt(8) * (p.n() - p.t());
    if (p.h() >= 1) report.integer_part += 2 * (p.h() - 1);
    if (p.h() >= 1 && p.s() >= 1 && lambda_s1_sign(p) == Sign::Negative) {
        const SecularEquation eq(p);
        const RootBracket root = eq.isolate(0, std::nullopt, 0.0);
        report.theta = -root.value;
        report.theta_bracket = RootBracket{-root.value, -root.hi, -root.lo};
    }
    report.value = report.integer_part.convert_to<double>() + 2.0 * report.theta.value_or(0.0);
    return report;
}

RootBracket spectral_radius(const Partition& p) {
    const SecularEquation eq(p);
    const double lower = 4.0 * (p.largest() - 1);
    return eq.isolate(eq.root_count() - 1, lower, static_cast<double>(eq.upper_bound()));
}

double radius_bipartite_closed(int n1, int n2) {
    if (n1 < 1 || n2 < 1) {
        throw Error(ErrorCode::InfeasibleParameters, "part sizes must be >= 1");
    }
    const double a = n1;
    const double b = n2;
    return 2.0 * (a + b) + std::sqrt(4.0 * (a - b) * (a - b) + a * b) - 4.0;
}

std::strong_ordering compare_energy(const Partition& a, const Partition& b) {
    const EnergyReport ea = energy(a);
    const EnergyReport eb = energy(b);
    if (ea.integer_part != eb.integer_part) {
        // Integer parts are even and 0 <= 2*theta < 2.
        return ea.integer_part < eb.integer_part ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (!ea.theta && !eb.theta) return std::strong_ordering::equal;
    if (!ea.theta) return std::strong_ordering::less;
    if (!eb.theta) return std::strong_ordering::greater;
    // theta = -lambda_{s+1}: larger eigenvalue means smaller energy.
    const SecularEquation qa(a);
    const SecularEquation qb(b);
    const RootBracket ra = qa.isolate(0, std::nullopt, 0.0);
    const RootBracket rb = qb.isolate(0, std::nullopt, 0.0);
    return compare_roots(qb, rb, qa, ra);
}

std::strong_ordering compare_radius(const Partition& a, const Partition& b) {
    const SecularEquation qa(a);
    const SecularEquation qb(b);
    return compare_roots(qa, spectral_radius(a), qb, spectral_radius(b));
}

}  // namespace sqdist
