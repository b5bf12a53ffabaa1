#include "sqdist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sqdist/charpoly.hpp"
#include "sqdist/error.hpp"
#include "sqdist/parallel.hpp"

namespace sqdist {

EigenResult symmetric_eigenvalues(const DenseSymMatrix& m, double tol) {
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InfeasibleParameters, "tolerance must be positive");
    }
    const std::size_t n = m.order();
    std::vector<double> a(m.entries().begin(), m.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    auto off_norm = [&] {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) sum += at(i, j) * at(i, j);
        return std::sqrt(sum);
    };

    const double target = tol * m.frobenius_norm();
    EigenResult result;
    double off = off_norm();
    while (off > target) {
        if (result.iterations == kJacobiMaxSweeps) {
            throw Error(ErrorCode::NoConvergence,
                        "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
            }
        }
        ++result.iterations;
        off = off_norm();
    }
    result.off_norm = off;
    result.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = at(i, i);
    std::sort(result.eigenvalues.begin(), result.eigenvalues.end(), std::greater<>());
    return result;
}

namespace {

using boost::multiprecision::cpp_int;

cpp_int bareiss(std::vector<cpp_int> a, std::size_t n) {
    if (n == 0) return 1;
    auto at = [&](std::size_t i, std::size_t j) -> cpp_int& { return a[i * n + j]; };
    cpp_int previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous;
            }
        }
        previous = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

}  // namespace

cpp_int exact_determinant(const DenseSymMatrix& m) { return exact_char_poly_at(m, 0) * (m.order() % 2 ? -1 : 1); }

cpp_int exact_char_poly_at(const DenseSymMatrix& m, long long x) {
    const std::size_t n = m.order();
    std::vector<cpp_int> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = (i == j ? x : 0) - m.integer_entry(i, j);
    }
    return bareiss(std::move(a), n);
}

VerificationRecord verify_partition(const Partition& p, const VerifyTolerances& tol) {
    VerificationRecord rec(p);
    const DenseSymMatrix delta = sqdist_from_partition(p);
    const EigenResult oracle = symmetric_eigenvalues(delta);

    const std::vector<double> closed = full_spectrum(p).eigenvalues();
    if (closed.size() == oracle.eigenvalues.size()) {
        for (std::size_t i = 0; i < closed.size(); ++i) {
            rec.max_eigenvalue_deviation =
                std::max(rec.max_eigenvalue_deviation, std::abs(closed[i] - oracle.eigenvalues[i]));
        }
        rec.eigenvalues_ok = rec.max_eigenvalue_deviation <= tol.eigenvalue;
    }

    rec.closed_form_inertia = inertia(p);
    for (double v : oracle.eigenvalues) {
        if (v > tol.zero_threshold) {
            ++rec.oracle_plus;
        } else if (v < -tol.zero_threshold) {
            ++rec.oracle_minus;
        } else {
            ++rec.oracle_zero;
        }
    }
    rec.inertia_ok = rec.closed_form_inertia.n_plus == rec.oracle_plus &&
                     rec.closed_form_inertia.n_zero == rec.oracle_zero &&
                     rec.closed_form_inertia.n_minus == rec.oracle_minus;

    rec.energy_closed_form = energy(p).value;
    for (double v : oracle.eigenvalues) rec.energy_oracle += std::abs(v);
    rec.energy_deviation = std::abs(rec.energy_closed_form - rec.energy_oracle);
    rec.energy_ok = rec.energy_deviation <= tol.energy;

    const ExactInt det = det_delta_exact(p);
    rec.det_exact = det.str();
    rec.det_oracle_product = 1.0;
    for (double v : oracle.eigenvalues) rec.det_oracle_product *= v;
    const bool elimination_agrees = exact_determinant(delta) == det;
    if (det == 0) {
        const bool has_zero = std::any_of(oracle.eigenvalues.begin(), oracle.eigenvalues.end(),
                                          [&](double v) { return std::abs(v) <= tol.zero_threshold; });
        rec.det_relative_deviation = 0.0;
        rec.det_ok = elimination_agrees && has_zero;
    } else {
        const double exact = det.convert_to<double>();
        rec.det_relative_deviation = std::abs(rec.det_oracle_product - exact) / std::abs(exact);
        rec.det_ok = elimination_agrees && rec.det_relative_deviation <= tol.det_relative;
    }
    return rec;
}

SweepSummary sweep(int n_max, const VerifyTolerances& tol) {
    SweepSummary summary;
    summary.n_max = n_max;
    const auto partitions = enumerate_all(n_max);
    summary.records = parallel_map(partitions, [&](const Partition& p) { return verify_partition(p, tol); });
    for (const auto& rec : summary.records) {
        if (!rec.passed()) ++summary.failures;
        summary.worst_eigenvalue_deviation = std::max(summary.worst_eigenvalue_deviation, rec.max_eigenvalue_deviation);
        summary.worst_energy_deviation = std::max(summary.worst_energy_deviation, rec.energy_deviation);
        summary.worst_det_relative_deviation =
            std::max(summary.worst_det_relative_deviation, rec.det_relative_deviation);
    }
    return summary;
}

}  // namespace sqdist
