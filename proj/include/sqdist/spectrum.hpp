#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sqdist/charpoly.hpp"
#include "sqdist/partitions.hpp"

namespace sqdist {

inline constexpr double kBracketWidth = 1e-12;
inline constexpr int kMaxBisectionSteps = 60;

/// A simple root of a secular equation together with an isolating bracket
/// [lo, hi]. The bracket is certified: the sign test at both ends is exact
/// whenever floating point cannot decide it.
struct RootBracket {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
};

/// Exact-endpoint bracket produced by rational refinement.
struct ExactBracket {
    ExactRational lo;
    ExactRational hi;
};

/// The eigenvalues of Delta(K_{n_1,...,n_t}) other than the known values
/// 3m-4 (multiplicity k-1 for a part size m occurring k times) and -4
/// (multiplicity n-t) are the zeros of
///
///     f(x) = 1 - sum_m  k_m m / (x - (3m - 4))
///
/// over the distinct part sizes m. Singleton parts contribute the pole at -1
/// with weight h. f increases strictly between consecutive poles, running
/// from -inf to +inf, so each gap holds exactly one root and one more root
/// lies above the largest pole, below the maximum row sum 3n_1+n-4.
class SecularEquation {
public:
    explicit SecularEquation(const Partition& p);

    /// Distinct poles 3m-4, ascending, with weights k_m * m.
    const std::vector<int>& poles() const noexcept { return poles_; }
    const std::vector<int>& weights() const noexcept { return weights_; }
    /// Part sizes matching poles().
    const std::vector<int>& sizes() const noexcept { return sizes_; }
    const std::vector<int>& counts() const noexcept { return counts_; }

    std::size_t root_count() const noexcept { return poles_.size(); }
    int upper_bound() const noexcept { return upper_; }

    double value(double x) const;
    ExactRational value(const ExactRational& x) const;

    /// Sign of f(x); falls back to exact rational evaluation when the
    /// floating-point value is within its rounding-error bound of zero.
    Sign sign_at(double x) const;
    Sign sign_at(const ExactRational& x) const;

    /// prod (x - pole) * f(x): integer polynomial of degree root_count()
    /// whose zeros are exactly the secular roots.
    IntPolynomial polynomial() const;

    /// Open interval that holds root i (ascending index). The top interval
    /// is closed at upper_bound().
    std::pair<double, double> interval(std::size_t i) const;

    /// Root i by bisection from `lo`/`hi` (defaults: interval(i)) until the
    /// bracket is narrower than `width` or `max_steps` halvings were done.
    /// Throws BracketFailure if f does not change sign across the start.
    RootBracket isolate(std::size_t i, std::optional<double> lo = std::nullopt,
                        std::optional<double> hi = std::nullopt, double width = kBracketWidth,
                        int max_steps = kMaxBisectionSteps) const;

    /// Exact-rational bisection of a known bracket down to `width`.
    ExactBracket refine(const RootBracket& start, const ExactRational& width) const;

private:
    std::vector<int> sizes_;
    std::vector<int> counts_;
    std::vector<int> poles_;
    std::vector<int> weights_;
    int upper_ = 0;
};

/// Simple roots of the secular equation, descending. For h >= 1 and s >= 1
/// the root in (-1, next pole) is lambda_{s+1}; its sign comes from the
/// exact criterion, and when that sign is zero the root is reported as
/// exactly 0.
struct IsolatedEigenvalue {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t secular_index = 0;  // ascending index into SecularEquation roots
};

std::vector<IsolatedEigenvalue> secular_roots(const Partition& p);

struct ExactEigenvalue {
    ExactRational value;
    int multiplicity = 0;
};

struct SpectrumReport {
    std::vector<ExactEigenvalue> exact_part;        // descending by value
    std::vector<IsolatedEigenvalue> isolated_part;  // descending

    int total_multiplicity() const;
    /// All eigenvalues with multiplicity, descending.
    std::vector<double> eigenvalues() const;
    double trace() const;
};

SpectrumReport full_spectrum(const Partition& p);

enum class InertiaDerivation {
    AllPartsAtLeastTwo,
    SingletonCasePositive,
    SingletonCaseZero,
    SingletonCaseNegative,
};

std::string_view to_string(InertiaDerivation d);

struct InertiaTriple {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;
    InertiaDerivation derivation = InertiaDerivation::AllPartsAtLeastTwo;

    friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

/// Decided from the exact integer criterion only.
InertiaTriple inertia(const Partition& p);

struct EnergyReport {
    ExactInt integer_part;                 // 8(n-t) or 8(n-t)+2(h-1)
    std::optional<double> theta;           // -lambda_{s+1}, present iff that eigenvalue is negative
    std::optional<RootBracket> theta_bracket;
    double value = 0.0;                    // integer_part + 2*theta
};

EnergyReport energy(const Partition& p);

/// Largest eigenvalue, bisected on [4(n_1-1), 3n_1+n-4].
RootBracket spectral_radius(const Partition& p);

/// 2(n1+n2) + sqrt(4(n1-n2)^2 + n1 n2) - 4.
double radius_bipartite_closed(int n1, int n2);

/// Certified comparison of squared distance energies. Integer parts decide
/// whenever they differ or a theta term is missing; otherwise theta brackets
/// are compared, refined exactly when they overlap, and exact equality is
/// settled through a polynomial gcd.
std::strong_ordering compare_energy(const Partition& a, const Partition& b);

/// Certified comparison of spectral radii, same strategy as compare_energy.
std::strong_ordering compare_radius(const Partition& a, const Partition& b);

}  // namespace sqdist
