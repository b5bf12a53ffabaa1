#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sqdist/matrices.hpp"
#include "sqdist/partitions.hpp"
#include "sqdist/spectrum.hpp"

namespace sqdist {

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

struct EigenResult {
    std::vector<double> eigenvalues;  // descending
    int iterations = 0;               // sweeps performed
    double off_norm = 0.0;            // final off-diagonal Frobenius norm
};

/// Cyclic Jacobi rotations on a private copy until the off-diagonal
/// Frobenius norm is at most tol * ||M||_F. Throws NoConvergence after
/// kJacobiMaxSweeps sweeps.
EigenResult symmetric_eigenvalues(const DenseSymMatrix& m, double tol = kJacobiTolerance);

/// Fraction-free (Bareiss) determinant of an integer-valued matrix.
boost::multiprecision::cpp_int exact_determinant(const DenseSymMatrix& m);

/// det(xI - M) for integer x, by the same elimination.
boost::multiprecision::cpp_int exact_char_poly_at(const DenseSymMatrix& m, long long x);

struct VerifyTolerances {
    double eigenvalue = 1e-9;
    double zero_threshold = 1e-7;
    double energy = 1e-7;
    double det_relative = 1e-6;
};

/// Closed-form results for one partition checked against the dense oracle.
struct VerificationRecord {
    explicit VerificationRecord(Partition p) : partition(std::move(p)) {}

    Partition partition;
    double max_eigenvalue_deviation = 0.0;
    InertiaTriple closed_form_inertia;
    int oracle_plus = 0;
    int oracle_zero = 0;
    int oracle_minus = 0;
    double energy_closed_form = 0.0;
    double energy_oracle = 0.0;
    double energy_deviation = 0.0;
    std::string det_exact;         // decimal
    double det_oracle_product = 0.0;
    double det_relative_deviation = 0.0;
    bool eigenvalues_ok = false;
    bool inertia_ok = false;
    bool energy_ok = false;
    bool det_ok = false;

    bool passed() const { return eigenvalues_ok && inertia_ok && energy_ok && det_ok; }
};

VerificationRecord verify_partition(const Partition& p, const VerifyTolerances& tol = {});

struct SweepSummary {
    int n_max = 0;
    std::vector<VerificationRecord> records;
    int failures = 0;
    double worst_eigenvalue_deviation = 0.0;
    double worst_energy_deviation = 0.0;
    double worst_det_relative_deviation = 0.0;
};

/// verify_partition over every partition with 2 <= t <= n <= n_max, in
/// parallel. Throws InfeasibleParameters for n_max < 2.
SweepSummary sweep(int n_max, const VerifyTolerances& tol = {});

}  // namespace sqdist
