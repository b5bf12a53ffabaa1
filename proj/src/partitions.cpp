#include "sqdist/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "sqdist/error.hpp"

namespace sqdist {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    h_ = static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
}

Partition Partition::canonicalize(std::span<const int> raw) {
    if (raw.empty()) {
        throw Error(ErrorCode::EmptyInput, "partition has no parts");
    }
    for (int v : raw) {
        if (v < 1) {
            throw Error(ErrorCode::NonPositivePart, "part " + std::to_string(v) + " is not >= 1");
        }
    }
    if (raw.size() < 2) {
        throw Error(ErrorCode::PartCountBelowTwo, "a complete multipartite graph needs t >= 2 parts");
    }
    std::vector<int> parts(raw.begin(), raw.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::canonicalize(std::initializer_list<int> raw) {
    return canonicalize(std::span<const int>(raw.begin(), raw.size()));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> raw;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view field = text.substr(pos, comma - pos);
        while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
        while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
        if (field.empty()) {
            if (text.find_first_not_of(" \t") == std::string_view::npos) break;
            throw Error(ErrorCode::ParseError, "empty field in partition '" + std::string(text) + "'");
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size()) {
            throw Error(ErrorCode::ParseError, "'" + std::string(field) + "' is not an integer");
        }
        raw.push_back(value);
        pos = comma + 1;
    }
    return canonicalize(raw);
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

std::string_view to_string(MajorizationVerdict v) {
    switch (v) {
        case MajorizationVerdict::Strict: return "strict";
        case MajorizationVerdict::Equal: return "equal";
        case MajorizationVerdict::NotMajorized: return "not-majorized";
        case MajorizationVerdict::Incomparable: return "incomparable";
    }
    return "unknown";
}

MajorizationVerdict majorizes(const Partition& x, const Partition& y) {
    if (x.n() != y.n()) {
        throw Error(ErrorCode::MismatchedTotals,
                    "totals differ (" + std::to_string(x.n()) + " vs " + std::to_string(y.n()) + ")");
    }
    if (x.t() != y.t()) {
        throw Error(ErrorCode::MismatchedLength,
                    "part counts differ (" + std::to_string(x.t()) + " vs " + std::to_string(y.t()) + ")");
    }
    bool x_above = false;
    bool y_above = false;
    int px = 0;
    int py = 0;
    for (int i = 0; i < x.t(); ++i) {
        px += x[i];
        py += y[i];
        if (px > py) x_above = true;
        if (py > px) y_above = true;
    }
    if (x_above && y_above) return MajorizationVerdict::Incomparable;
    if (x_above) return MajorizationVerdict::Strict;
    if (y_above) return MajorizationVerdict::NotMajorized;
    return MajorizationVerdict::Equal;
}

Partition apply_step(const Partition& p, MajorizationStep step) {
    const auto t = static_cast<std::size_t>(p.t());
    if (step.from >= step.to || step.to >= t) {
        throw Error(ErrorCode::InfeasibleParameters, "step indices must satisfy from < to < t");
    }
    if (p[step.from] < p[step.to] + 2) {
        throw Error(ErrorCode::InfeasibleParameters, "step needs parts[from] >= parts[to] + 2");
    }
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    --parts[step.from];
    ++parts[step.to];
    return Partition::canonicalize(parts);
}

std::optional<MajorizationStep> elementary_step_between(const Partition& prev, const Partition& next) {
    if (prev.t() != next.t() || prev.n() != next.n()) return std::nullopt;
    std::optional<std::size_t> minus;
    std::optional<std::size_t> plus;
    for (std::size_t i = 0; i < static_cast<std::size_t>(prev.t()); ++i) {
        const int d = next[i] - prev[i];
        if (d == 0) continue;
        if (d == -1 && !minus) {
            minus = i;
        } else if (d == 1 && !plus) {
            plus = i;
        } else {
            return std::nullopt;
        }
    }
    if (!minus || !plus || *minus >= *plus) return std::nullopt;
    return MajorizationStep{*minus, *plus};
}

MajorizationChain elementary_chain(const Partition& y, const Partition& x) {
    const auto verdict = majorizes(y, x);
    if (verdict == MajorizationVerdict::Equal) {
        throw Error(ErrorCode::Identical, "chain endpoints are identical (" + y.to_string() + ")");
    }
    if (verdict != MajorizationVerdict::Strict) {
        throw Error(ErrorCode::NotMajorized, y.to_string() + " does not strictly majorize " + x.to_string());
    }

    MajorizationChain chain;
    chain.members.push_back(y);
    std::vector<int> cur(y.parts().begin(), y.parts().end());
    const auto t = cur.size();

    while (!std::equal(cur.begin(), cur.end(), x.parts().begin())) {
        std::size_t j = 0;
        while (cur[j] <= x[j]) ++j;
        std::size_t k = j + 1;
        while (cur[k] >= x[k]) ++k;
        // cur[j] > x[j] >= x[k] > cur[k], so the blocks are distinct.
        std::size_t from = j;
        while (from + 1 < t && cur[from + 1] == cur[j]) ++from;
        std::size_t to = k;
        while (to > 0 && cur[to - 1] == cur[k]) --to;
        --cur[from];
        ++cur[to];
        chain.steps.push_back({from, to});
        chain.members.push_back(Partition::canonicalize(cur));
    }
    return chain;
}

bool is_elementary_chain(std::span<const Partition> members) {
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (!elementary_step_between(members[i - 1], members[i])) return false;
        if (majorizes(members[i - 1], members[i]) != MajorizationVerdict::Strict) return false;
    }
    return true;
}

namespace {

void require_n_t(int n, int t) {
    if (t < 2 || n < t) {
        throw Error(ErrorCode::InfeasibleParameters,
                    "need n >= t >= 2 (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
    }
}

void require_n_t_h(int n, int t, int h) {
    require_n_t(n, t);
    const int s = t - h;
    if (h < 0 || s < 2 || n - h < 2 * s) {
        throw Error(ErrorCode::InfeasibleParameters,
                    "need h >= 0, s = t-h >= 2 and n-h >= 2s (n=" + std::to_string(n) + ", t=" +
                        std::to_string(t) + ", h=" + std::to_string(h) + ")");
    }
}

std::vector<int> balanced(int total, int parts) {
    std::vector<int> out(static_cast<std::size_t>(parts), total / parts);
    for (int i = 0; i < total % parts; ++i) ++out[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace

Partition complete_split(int n, int t) {
    require_n_t(n, t);
    std::vector<int> parts(static_cast<std::size_t>(t), 1);
    parts[0] = n - t + 1;
    return Partition::canonicalize(parts);
}

Partition turan(int n, int t) {
    require_n_t(n, t);
    return Partition::canonicalize(balanced(n, t));
}

Partition split_h(int n, int t, int h) {
    require_n_t_h(n, t, h);
    std::vector<int> parts;
    parts.push_back(n - 2 * (t - 1) + h);
    parts.insert(parts.end(), static_cast<std::size_t>(t - h - 1), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(h), 1);
    return Partition::canonicalize(parts);
}

Partition turan_h(int n, int t, int h) {
    require_n_t_h(n, t, h);
    auto parts = balanced(n - h, t - h);
    parts.insert(parts.end(), static_cast<std::size_t>(h), 1);
    return Partition::canonicalize(parts);
}

PartitionStream::PartitionStream(int n, int t) {
    require_n_t(n, t);
    current_.assign(static_cast<std::size_t>(t), 1);
    current_[0] = n - t + 1;
}

std::optional<Partition> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (started_ && !advance()) {
        done_ = true;
        return std::nullopt;
    }
    started_ = true;
    return Partition::canonicalize(current_);
}

// Lexicographic predecessor with the same length and total: lower the
// rightmost position that still admits a valid suffix, then fill the suffix
// as large as possible.
bool PartitionStream::advance() {
    const int t = static_cast<int>(current_.size());
    int suffix = current_[static_cast<std::size_t>(t - 1)];
    for (int i = t - 2; i >= 0; --i) {
        const auto ui = static_cast<std::size_t>(i);
        suffix += current_[ui];
        const int v = current_[ui] - 1;
        const int len = t - 1 - i;
        const int rest = suffix - v;
        if (v < 1 || rest < len || rest > len * v) continue;
        current_[ui] = v;
        int remaining = rest;
        for (int p = i + 1; p < t; ++p) {
            const int slots_after = t - 1 - p;
            const int take = std::min(v, remaining - slots_after);
            current_[static_cast<std::size_t>(p)] = take;
            remaining -= take;
        }
        return true;
    }
    return false;
}

std::vector<Partition> enumerate_partitions(int n, int t) {
    if (t > n) {
        throw Error(ErrorCode::InfeasibleParameters, "t > n has no partitions");
    }
    std::vector<Partition> out;
    PartitionStream stream(n, t);
    while (auto p = stream.next()) out.push_back(std::move(*p));
    return out;
}

std::vector<Partition> enumerate_all(int n_max) {
    if (n_max < 2) {
        throw Error(ErrorCode::InfeasibleParameters, "n_max must be >= 2");
    }
    std::vector<Partition> out;
    for (int n = 2; n <= n_max; ++n) {
        for (int t = 2; t <= n; ++t) {
            auto batch = enumerate_partitions(n, t);
            out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
        }
    }
    return out;
}

std::vector<Partition> enumerate_class(int n, int t, int h) {
    require_n_t_h(n, t, h);
    const int s = t - h;
    const int reduced = n - h - s;  // subtract one from each non-singleton part
    std::vector<Partition> out;
    PartitionStream stream(reduced, s);
    while (auto p = stream.next()) {
        std::vector<int> parts;
        for (int v : p->parts()) parts.push_back(v + 1);
        parts.insert(parts.end(), static_cast<std::size_t>(h), 1);
        out.push_back(Partition::canonicalize(parts));
    }
    return out;
}

}  // namespace sqdist
