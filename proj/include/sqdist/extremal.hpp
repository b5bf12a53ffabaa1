#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqdist/charpoly.hpp"
#include "sqdist/partitions.hpp"
#include "sqdist/spectrum.hpp"

namespace sqdist {

/// Per-partition values collected by a scan.
struct ScanEntry {
    Partition partition;
    EnergyReport energy;
    RootBracket radius;
    InertiaTriple inertia;
    std::optional<Sign> lambda_s1;  // present when h >= 1 and s >= 1
};

enum class ScanKind { Energy, EnergyH, Radius };

std::string_view to_string(ScanKind k);

struct ScanReport {
    ScanKind kind = ScanKind::Energy;
    int n = 0;
    int t = 0;
    std::optional<int> h;

    std::vector<ScanEntry> entries;  // reverse-lexicographic, S first
    std::vector<Partition> energy_argmax;
    std::vector<Partition> energy_argmin;
    std::vector<Partition> radius_argmax;
    std::vector<Partition> radius_argmin;

    bool energy_max_unique() const { return energy_argmax.size() == 1; }
    bool energy_min_unique() const { return energy_argmin.size() == 1; }
    bool radius_max_unique() const { return radius_argmax.size() == 1; }
    bool radius_min_unique() const { return radius_argmin.size() == 1; }

    /// Claims checked and failed. Empty on a correct implementation.
    std::vector<std::string> violated_claims;
    /// Observations that are recorded but not asserted.
    std::vector<std::string> notes;
};

/// All partitions of n into t parts. Claims: energy max uniquely at S_{n,t};
/// min at T_{n,t}, unique iff n <= 2t+1.
ScanReport scan_energy(int n, int t);

/// Members of M(n,t,h). Claims: S_{n,t,h} attains the max and T_{n,t,h}
/// the min; both unique when h >= 1 and lambda_{s+1}(T_{n,t,h}) <= 0.
ScanReport scan_energy_h(int n, int t, int h);

/// All partitions of n into t parts. Claims: radius max uniquely at S_{n,t},
/// min uniquely at T_{n,t}, and rho > 4(n_1 - 1) everywhere.
ScanReport scan_radius(int n, int t);

struct ChainLink {
    Partition from;
    Partition to;
    MajorizationStep step;
    double radius_gap = 0.0;  // from.radius.lo - to.radius.hi
    bool radius_decreases = false;
    std::strong_ordering energy_order = std::strong_ordering::equal;  // E(from) vs E(to)
    bool energy_non_increasing = false;
};

struct ChainReport {
    std::vector<ScanEntry> members;
    std::vector<ChainLink> links;
    std::vector<std::string> violated_claims;

    bool ok() const { return violated_claims.empty(); }
};

/// Builds elementary_chain(y, x) and checks every link: rho strictly
/// decreases, E does not increase. Throws NotMajorized / Identical.
ChainReport verify_chain_monotone(const Partition& y, const Partition& x);

/// Same checks over an explicit chain. Throws NotMajorized if a link is not
/// a single elementary step.
ChainReport verify_chain_monotone(std::span<const Partition> chain);

/// Fixed (n, t): h_H < h_G implies E(H) < E(G) for every pair. Returns the
/// violating pairs as text.
std::vector<std::string> check_h_monotonicity(int n, int t);

/// For t+2 <= n < 2t: every non-Turan partition has more singletons than
/// T_{n,t}. Returns violations; empty outside that range.
std::vector<std::string> check_singleton_excess(int n, int t);

ScanEntry evaluate_entry(const Partition& p);

}  // namespace sqdist
