#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqdist {

/// Part sizes of a complete multipartite graph K_{n_1,...,n_t}, held in
/// canonical (non-increasing) order. Two graphs are isomorphic exactly when
/// their canonical partitions compare equal.
///
/// Invariants: t >= 2, every part >= 1, parts sorted non-increasing.
/// Derived: n = sum of parts, h = number of singleton parts, s = t - h.
class Partition {
public:
    /// Sorts and validates. Throws EmptyInput, PartCountBelowTwo or
    /// NonPositivePart.
    static Partition canonicalize(std::span<const int> raw);
    static Partition canonicalize(std::initializer_list<int> raw);

    /// Parses the textual form "5,2,2,1" (whitespace tolerated).
    static Partition parse(std::string_view text);

    std::span<const int> parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int largest() const noexcept { return parts_.front(); }

    int n() const noexcept { return n_; }
    int t() const noexcept { return static_cast<int>(parts_.size()); }
    int h() const noexcept { return h_; }
    int s() const noexcept { return t() - h_; }

    /// The s parts of size >= 2, still descending.
    std::span<const int> non_singleton_parts() const noexcept {
        return std::span<const int>(parts_).first(static_cast<std::size_t>(s()));
    }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    explicit Partition(std::vector<int> parts);

    std::vector<int> parts_;
    int n_ = 0;
    int h_ = 0;
};

/// Adds E_{from,to}: one unit leaves index `from` and lands on index `to`,
/// with to > from. Indices refer to the canonical tuple the step is
/// applied to.
struct MajorizationStep {
    std::size_t from = 0;
    std::size_t to = 0;

    friend bool operator==(const MajorizationStep&, const MajorizationStep&) = default;
};

enum class MajorizationVerdict {
    Strict,         // X majorizes Y and the tuples differ
    Equal,          // identical after sorting
    NotMajorized,   // Y strictly majorizes X
    Incomparable,   // neither dominates the other
};

std::string_view to_string(MajorizationVerdict v);

/// Prefix-sum comparison of X against Y. Requires equal totals and equal
/// part counts (MismatchedTotals / MismatchedLength otherwise).
MajorizationVerdict majorizes(const Partition& x, const Partition& y);

/// Applies an elementary step. Requires from < to and
/// parts[from] >= parts[to] + 2; the result is re-canonicalized.
Partition apply_step(const Partition& p, MajorizationStep step);

/// If `next` is obtained from `prev` by one elementary step (compared on
/// the canonical tuples), returns that step.
std::optional<MajorizationStep> elementary_step_between(const Partition& prev, const Partition& next);

struct MajorizationChain {
    std::vector<Partition> members;       // members.front() == Y, members.back() == X
    std::vector<MajorizationStep> steps;  // steps[i] takes members[i] to members[i+1]
};

/// Deterministic chain Y = Y_0 > Y_1 > ... > Y_l = X of elementary steps.
///
/// Each step takes one unit from the first index j where the current tuple
/// exceeds X entrywise and gives it to the first index k > j where the
/// current tuple falls short of X. All positions in [j, k) are at least
/// their target, so the prefix sums on [j, k) stay strictly above those of
/// X and the step never overshoots. The recorded step uses the last index of
/// the source value block and the first index of the target value block so
/// that the tuple stays non-increasing without re-sorting.
///
/// Throws Identical when Y == X, NotMajorized when Y does not strictly
/// majorize X.
MajorizationChain elementary_chain(const Partition& y, const Partition& x);

/// True when every consecutive pair is one elementary step with strict
/// majorization.
bool is_elementary_chain(std::span<const Partition> members);

/// S_{n,t} = (n-t+1, 1, ..., 1).
Partition complete_split(int n, int t);
/// T_{n,t}: t parts of sizes ceil(n/t) or floor(n/t).
Partition turan(int n, int t);
/// S_{n,t,h} = (n-2(t-1)+h, 2, ..., 2, 1, ..., 1) with t-h-1 twos and h ones.
Partition split_h(int n, int t, int h);
/// T_{n,t,h}: balanced split of n-h into t-h parts, then h ones.
Partition turan_h(int n, int t, int h);

/// Single-consumer stream over all partitions of n into exactly t parts in
/// reverse-lexicographic order, starting from S_{n,t} and ending at T_{n,t}.
class PartitionStream {
public:
    PartitionStream(int n, int t);

    std::optional<Partition> next();

private:
    bool advance();

    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> enumerate_partitions(int n, int t);

/// Every partition with 2 <= t <= n <= n_max.
std::vector<Partition> enumerate_all(int n_max);

/// Members of M(n, t, h): partitions of n into t parts with exactly h
/// singletons. Feasibility as for split_h.
std::vector<Partition> enumerate_class(int n, int t, int h);

}  // namespace sqdist
