#include "sqdist/extremal.hpp"

#include <algorithm>
#include <map>

#include "sqdist/error.hpp"
#include "sqdist/parallel.hpp"

namespace sqdist {

std::string_view to_string(ScanKind k) {
    switch (k) {
        case ScanKind::Energy: return "energy";
        case ScanKind::EnergyH: return "energy-h";
        case ScanKind::Radius: return "radius";
    }
    return "unknown";
}

ScanEntry evaluate_entry(const Partition& p) {
    ScanEntry e{p, energy(p), spectral_radius(p), inertia(p), std::nullopt};
    if (p.h() >= 1 && p.s() >= 1) e.lambda_s1 = lambda_s1_sign(p);
    return e;
}

namespace {

using Compare = std::strong_ordering (*)(const Partition&, const Partition&);

// Argmax and argmin sets under a certified comparison.
void extremes(const std::vector<ScanEntry>& entries, Compare cmp, std::vector<Partition>& argmax,
              std::vector<Partition>& argmin) {
    argmax.clear();
    argmin.clear();
    for (const auto& e : entries) {
        if (argmax.empty()) {
            argmax.push_back(e.partition);
            argmin.push_back(e.partition);
            continue;
        }
        const auto hi = cmp(e.partition, argmax.front());
        if (hi == std::strong_ordering::greater) {
            argmax.assign(1, e.partition);
        } else if (hi == std::strong_ordering::equal) {
            argmax.push_back(e.partition);
        }
        const auto lo = cmp(e.partition, argmin.front());
        if (lo == std::strong_ordering::less) {
            argmin.assign(1, e.partition);
        } else if (lo == std::strong_ordering::equal) {
            argmin.push_back(e.partition);
        }
    }
}

bool contains(const std::vector<Partition>& set, const Partition& p) {
    return std::find(set.begin(), set.end(), p) != set.end();
}

std::string names(const std::vector<Partition>& set) {
    std::string out;
    for (const auto& p : set) {
        if (!out.empty()) out += ' ';
        out += '(' + p.to_string() + ')';
    }
    return out;
}

ScanReport base_scan(ScanKind kind, int n, int t, std::optional<int> h, const std::vector<Partition>& members) {
    ScanReport r;
    r.kind = kind;
    r.n = n;
    r.t = t;
    r.h = h;
    r.entries = parallel_map(members, evaluate_entry);
    extremes(r.entries, compare_energy, r.energy_argmax, r.energy_argmin);
    extremes(r.entries, compare_radius, r.radius_argmax, r.radius_argmin);
    return r;
}

void expect_unique(ScanReport& r, const std::vector<Partition>& set, const Partition& who, const std::string& what) {
    if (set.size() != 1 || set.front() != who) {
        r.violated_claims.push_back(what + " expected uniquely at (" + who.to_string() + "), found " + names(set));
    }
}

void expect_member(ScanReport& r, const std::vector<Partition>& set, const Partition& who, const std::string& what) {
    if (!contains(set, who)) {
        r.violated_claims.push_back(what + " expected at (" + who.to_string() + "), found " + names(set));
    }
}

}  // namespace

ScanReport scan_energy(int n, int t) {
    const Partition s = complete_split(n, t);
    const Partition tu = turan(n, t);
    ScanReport r = base_scan(ScanKind::Energy, n, t, std::nullopt, enumerate_partitions(n, t));
    expect_unique(r, r.energy_argmax, s, "energy max");
    expect_member(r, r.energy_argmin, tu, "energy min");
    const bool should_be_unique = n <= 2 * t + 1;
    if (should_be_unique != r.energy_min_unique()) {
        r.violated_claims.push_back(std::string("energy min ") + (should_be_unique ? "should" : "should not") +
                                    " be unique, found " + names(r.energy_argmin));
    }
    return r;
}

ScanReport scan_energy_h(int n, int t, int h) {
    const Partition s = split_h(n, t, h);
    const Partition tu = turan_h(n, t, h);
    ScanReport r = base_scan(ScanKind::EnergyH, n, t, h, enumerate_class(n, t, h));
    expect_member(r, r.energy_argmax, s, "energy max");
    expect_member(r, r.energy_argmin, tu, "energy min");
    if (h >= 1) {
        const Sign at_turan = lambda_s1_sign(tu);
        if (at_turan != Sign::Positive) {
            expect_unique(r, r.energy_argmax, s, "energy max");
            expect_unique(r, r.energy_argmin, tu, "energy min");
        } else {
            r.notes.push_back("lambda_{s+1}(T) > 0: uniqueness not asserted; max unique = " +
                              std::string(r.energy_max_unique() ? "yes" : "no") +
                              ", min unique = " + std::string(r.energy_min_unique() ? "yes" : "no"));
        }
    }
    return r;
}

ScanReport scan_radius(int n, int t) {
    ScanReport r = base_scan(ScanKind::Radius, n, t, std::nullopt, enumerate_partitions(n, t));
    expect_unique(r, r.radius_argmax, complete_split(n, t), "radius max");
    expect_unique(r, r.radius_argmin, turan(n, t), "radius min");
    for (const auto& e : r.entries) {
        const double bound = 4.0 * (e.partition.largest() - 1);
        if (SecularEquation(e.partition).sign_at(bound) != Sign::Negative) {
            r.violated_claims.push_back("rho(" + e.partition.to_string() + ") not above 4(n_1-1)");
        }
    }
    return r;
}

ChainReport verify_chain_monotone(std::span<const Partition> chain) {
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!elementary_step_between(chain[i - 1], chain[i]) ||
            majorizes(chain[i - 1], chain[i]) != MajorizationVerdict::Strict) {
            throw Error(ErrorCode::NotMajorized,
                        "(" + chain[i - 1].to_string() + ") -> (" + chain[i].to_string() + ") is not an elementary step");
        }
    }
    ChainReport report;
    report.members = parallel_map(std::vector<Partition>(chain.begin(), chain.end()), evaluate_entry);
    for (std::size_t i = 1; i < report.members.size(); ++i) {
        const ScanEntry& a = report.members[i - 1];
        const ScanEntry& b = report.members[i];
        ChainLink link{a.partition, b.partition, *elementary_step_between(a.partition, b.partition)};
        link.radius_gap = a.radius.lo - b.radius.hi;
        link.radius_decreases =
            link.radius_gap > 0.0 || compare_radius(a.partition, b.partition) == std::strong_ordering::greater;
        link.energy_order = compare_energy(a.partition, b.partition);
        link.energy_non_increasing = link.energy_order != std::strong_ordering::less;
        const std::string label = "(" + a.partition.to_string() + ") -> (" + b.partition.to_string() + ")";
        if (!link.radius_decreases) report.violated_claims.push_back("radius does not decrease on " + label);
        if (!link.energy_non_increasing) report.violated_claims.push_back("energy increases on " + label);
        report.links.push_back(std::move(link));
    }
    return report;
}

ChainReport verify_chain_monotone(const Partition& y, const Partition& x) {
    const MajorizationChain chain = elementary_chain(y, x);
    return verify_chain_monotone(chain.members);
}

std::vector<std::string> check_h_monotonicity(int n, int t) {
    std::map<int, std::vector<ScanEntry>> by_h;
    for (auto& e : parallel_map(enumerate_partitions(n, t), evaluate_entry)) by_h[e.partition.h()].push_back(std::move(e));

    struct Range {
        int h;
        std::vector<Partition> max, min;
    };
    std::vector<Range> ranges;
    for (const auto& [h, group] : by_h) {
        Range range{h, {}, {}};
        extremes(group, compare_energy, range.max, range.min);
        ranges.push_back(std::move(range));
    }
    std::vector<std::string> violations;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        for (std::size_t j = i + 1; j < ranges.size(); ++j) {
            // Every member with fewer singletons must lie strictly below every member with more.
            const Partition& top_low_h = ranges[i].max.front();
            const Partition& bottom_high_h = ranges[j].min.front();
            if (compare_energy(top_low_h, bottom_high_h) != std::strong_ordering::less) {
                violations.push_back("E(" + top_low_h.to_string() + ") >= E(" + bottom_high_h.to_string() + ")");
            }
        }
    }
    return violations;
}

std::vector<std::string> check_singleton_excess(int n, int t) {
    std::vector<std::string> violations;
    if (!(t >= 2 && t + 2 <= n && n < 2 * t)) return violations;
    const Partition tu = turan(n, t);
    for (const auto& p : enumerate_partitions(n, t)) {
        if (p != tu && p.h() <= tu.h()) {
            violations.push_back("(" + p.to_string() + ") has h = " + std::to_string(p.h()) + " <= h(T) = " +
                                 std::to_string(tu.h()));
        }
    }
    return violations;
}

}  // namespace sqdist
