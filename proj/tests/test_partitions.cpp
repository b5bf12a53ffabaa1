#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sqdist/error.hpp"
#include "sqdist/partitions.hpp"

using namespace sqdist;

namespace {

std::vector<int> tuple(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an sqdist::Error");
    return ErrorCode::ParseError;
}

// Appends h ones to an s-tuple.
Partition with_ones(std::vector<int> parts, int h) {
    parts.insert(parts.end(), static_cast<std::size_t>(h), 1);
    return Partition::canonicalize(parts);
}

}  // namespace

TEST_CASE("canonicalize sorts and derives n, t, h, s") {
    const auto a = Partition::canonicalize({1, 2, 2});
    CHECK(tuple(a) == std::vector<int>{2, 2, 1});
    CHECK(a.n() == 5);
    CHECK(a.t() == 3);
    CHECK(a.h() == 1);
    CHECK(a.s() == 2);

    const auto k2 = Partition::canonicalize({1, 1});
    CHECK(k2.n() == 2);
    CHECK(k2.h() == 2);
    CHECK(k2.s() == 0);

    const auto b = Partition::canonicalize({5, 2, 2, 2});
    CHECK(b.n() == 11);
    CHECK(b.t() == 4);
    CHECK(b.h() == 0);
    CHECK(b.s() == 4);
    CHECK(b.non_singleton_parts().size() == 4);
}

TEST_CASE("canonicalize rejects bad input") {
    CHECK(code_of([] { Partition::canonicalize(std::span<const int>{}); }) == ErrorCode::EmptyInput);
    CHECK(code_of([] { Partition::canonicalize({3}); }) == ErrorCode::PartCountBelowTwo);
    CHECK(code_of([] { Partition::canonicalize({3, 0}); }) == ErrorCode::NonPositivePart);
    CHECK(code_of([] { Partition::canonicalize({3, -1, 2}); }) == ErrorCode::NonPositivePart);
}

TEST_CASE("parse") {
    CHECK(Partition::parse("5,2,2,1") == Partition::canonicalize({5, 2, 2, 1}));
    CHECK(Partition::parse(" 1, 2 ,2") == Partition::canonicalize({2, 2, 1}));
    CHECK(Partition::parse("5,2,2,1").to_string() == "5,2,2,1");
    CHECK(code_of([] { Partition::parse("5,,1"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Partition::parse("5,x"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Partition::parse(""); }) == ErrorCode::EmptyInput);
    CHECK(code_of([] { Partition::parse("7"); }) == ErrorCode::PartCountBelowTwo);
}

TEST_CASE("majorizes verdicts") {
    const auto p = [](std::initializer_list<int> v) { return Partition::canonicalize(v); };
    CHECK(majorizes(p({3, 1}), p({2, 2})) == MajorizationVerdict::Strict);
    CHECK(majorizes(p({2, 2}), p({3, 1})) == MajorizationVerdict::NotMajorized);
    CHECK(majorizes(p({2, 2}), p({2, 2})) == MajorizationVerdict::Equal);
    CHECK(majorizes(p({5, 2, 2, 1}), p({4, 4, 1, 1})) == MajorizationVerdict::Incomparable);
    CHECK(code_of([&] { majorizes(p({4, 1, 1}), p({3, 3})); }) == ErrorCode::MismatchedLength);
    CHECK(code_of([&] { majorizes(p({4, 1, 1}), p({3, 3, 1})); }) == ErrorCode::MismatchedTotals);
    CHECK(code_of([&] { majorizes(p({4, 2}), p({2, 2, 2})); }) == ErrorCode::MismatchedLength);
}

TEST_CASE("majorizes agrees with the prefix-sum oracle") {
    for (int n = 2; n <= 10; ++n) {
        for (int t = 2; t <= n; ++t) {
            const auto all = enumerate_partitions(n, t);
            for (const auto& x : all) {
                for (const auto& y : all) {
                    const bool xy = oracle::dominates(tuple(x), tuple(y));
                    const bool yx = oracle::dominates(tuple(y), tuple(x));
                    const auto v = majorizes(x, y);
                    if (xy && yx) CHECK(v == MajorizationVerdict::Equal);
                    if (xy && !yx) CHECK(v == MajorizationVerdict::Strict);
                    if (!xy && yx) CHECK(v == MajorizationVerdict::NotMajorized);
                    if (!xy && !yx) CHECK(v == MajorizationVerdict::Incomparable);
                }
            }
        }
    }
}

TEST_CASE("apply_step") {
    const auto p = Partition::canonicalize({4, 1, 1});
    CHECK(apply_step(p, {0, 1}) == Partition::canonicalize({3, 2, 1}));
    CHECK(code_of([&] { apply_step(p, {1, 2}); }) == ErrorCode::InfeasibleParameters);
    CHECK(code_of([&] { apply_step(p, {1, 0}); }) == ErrorCode::InfeasibleParameters);
    CHECK(code_of([&] { apply_step(p, {0, 3}); }) == ErrorCode::InfeasibleParameters);
    // Re-canonicalization: (3,3,1) with 0->2 gives (2,3,2) -> (3,2,2).
    CHECK(apply_step(Partition::canonicalize({3, 3, 1}), {0, 2}) == Partition::canonicalize({3, 2, 2}));
}

TEST_CASE("elementary_chain small example") {
    const auto chain = elementary_chain(Partition::canonicalize({4, 1, 1}), Partition::canonicalize({2, 2, 2}));
    REQUIRE(chain.members.size() == 3);
    CHECK(chain.members[0] == Partition::canonicalize({4, 1, 1}));
    CHECK(chain.members[1] == Partition::canonicalize({3, 2, 1}));
    CHECK(chain.members[2] == Partition::canonicalize({2, 2, 2}));
    REQUIRE(chain.steps.size() == 2);
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        CHECK(chain.steps[i].from < chain.steps[i].to);
        CHECK(apply_step(chain.members[i], chain.steps[i]) == chain.members[i + 1]);
    }
}

TEST_CASE("elementary_chain errors") {
    const auto a = Partition::canonicalize({2, 2});
    CHECK(code_of([&] { elementary_chain(a, a); }) == ErrorCode::Identical);
    CHECK(code_of([&] { elementary_chain(Partition::canonicalize({2, 2, 2}), Partition::canonicalize({4, 1, 1})); }) ==
          ErrorCode::NotMajorized);
    CHECK(code_of([&] { elementary_chain(Partition::canonicalize({5, 2, 2, 1}), Partition::canonicalize({4, 4, 1, 1})); }) ==
          ErrorCode::NotMajorized);
}

TEST_CASE("a largest-short-index rule would leave the order; the chain rule does not") {
    // Moving a unit from index 0 to the last short index 3 turns (5,3,3,1)
    // into (4,3,3,2), whose second prefix 7 falls below the target's 8.
    const auto y = Partition::canonicalize({5, 3, 3, 1});
    const auto x = Partition::canonicalize({4, 4, 2, 2});
    CHECK(majorizes(Partition::canonicalize({4, 3, 3, 2}), x) == MajorizationVerdict::NotMajorized);
    const auto chain = elementary_chain(y, x);
    CHECK(is_elementary_chain(chain.members));
    CHECK(chain.members.back() == x);
}

TEST_CASE("the worked chain of M(31,15,7) is a valid elementary chain") {
    const std::vector<std::vector<int>> rows = {
        {10, 2, 2, 2, 2, 2, 2, 2}, {9, 3, 2, 2, 2, 2, 2, 2}, {8, 4, 2, 2, 2, 2, 2, 2}, {7, 4, 3, 2, 2, 2, 2, 2},
        {6, 4, 4, 2, 2, 2, 2, 2},  {5, 4, 4, 3, 2, 2, 2, 2}, {4, 4, 4, 4, 2, 2, 2, 2}, {4, 4, 4, 3, 3, 2, 2, 2},
        {4, 4, 3, 3, 3, 3, 2, 2},  {4, 3, 3, 3, 3, 3, 3, 2}, {3, 3, 3, 3, 3, 3, 3, 3},
    };
    std::vector<Partition> chain;
    for (const auto& r : rows) chain.push_back(with_ones(r, 7));
    CHECK(chain.size() == 11);
    CHECK(is_elementary_chain(chain));
    CHECK(chain.front() == split_h(31, 15, 7));
    CHECK(chain.back() == turan_h(31, 15, 7));

    const auto generated = elementary_chain(chain.front(), chain.back());
    CHECK(is_elementary_chain(generated.members));
    CHECK(generated.members.front() == chain.front());
    CHECK(generated.members.back() == chain.back());
    // Each step lowers sum of squares by at least 2, so length is bounded by
    // half the drop.
    const auto sq = [](const Partition& p) {
        int s = 0;
        for (int v : p.parts()) s += v * v;
        return s;
    };
    CHECK(static_cast<int>(generated.steps.size()) <= (sq(chain.front()) - sq(chain.back())) / 2);
}

TEST_CASE("property: generated chains are elementary and strictly decreasing") {
    for (int n = 2; n <= 11; ++n) {
        for (int t = 2; t <= n; ++t) {
            const auto all = enumerate_partitions(n, t);
            for (const auto& y : all) {
                for (const auto& x : all) {
                    if (majorizes(y, x) != MajorizationVerdict::Strict) continue;
                    const auto chain = elementary_chain(y, x);
                    REQUIRE(chain.members.front() == y);
                    REQUIRE(chain.members.back() == x);
                    REQUIRE(chain.steps.size() + 1 == chain.members.size());
                    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
                        REQUIRE(majorizes(chain.members[i], chain.members[i + 1]) == MajorizationVerdict::Strict);
                        REQUIRE(majorizes(chain.members[i + 1], x) != MajorizationVerdict::Incomparable);
                        REQUIRE(apply_step(chain.members[i], chain.steps[i]) == chain.members[i + 1]);
                        REQUIRE(elementary_step_between(chain.members[i], chain.members[i + 1]).has_value());
                    }
                }
            }
        }
    }
}

TEST_CASE("is_elementary_chain rejects non-steps") {
    const auto p = [](std::initializer_list<int> v) { return Partition::canonicalize(v); };
    const std::vector<Partition> jump{p({5, 1, 1}), p({3, 2, 2})};
    CHECK_FALSE(is_elementary_chain(jump));
    const std::vector<Partition> up{p({3, 2, 1}), p({4, 1, 1})};
    CHECK_FALSE(is_elementary_chain(up));
}

TEST_CASE("family constructors") {
    const auto s = complete_split(31, 15);
    CHECK(s[0] == 17);
    CHECK(s.h() == 14);
    CHECK(s.n() == 31);

    CHECK(split_h(31, 15, 7) == with_ones({10, 2, 2, 2, 2, 2, 2, 2}, 7));
    CHECK(turan_h(31, 15, 7) == with_ones({3, 3, 3, 3, 3, 3, 3, 3}, 7));
    CHECK(split_h(30, 15, 7) == with_ones({9, 2, 2, 2, 2, 2, 2, 2}, 7));
    CHECK(turan_h(30, 15, 7) == with_ones({3, 3, 3, 3, 3, 3, 3, 2}, 7));
    CHECK(split_h(17, 10, 6) == with_ones({5, 2, 2, 2}, 6));

    CHECK(turan(8, 3) == Partition::canonicalize({3, 3, 2}));
    CHECK(turan(6, 3) == Partition::canonicalize({2, 2, 2}));
    CHECK(complete_split(6, 3) == Partition::canonicalize({4, 1, 1}));

    CHECK(code_of([] { complete_split(3, 4); }) == ErrorCode::InfeasibleParameters);
    CHECK(code_of([] { turan(5, 1); }) == ErrorCode::InfeasibleParameters);
    CHECK(code_of([] { split_h(10, 5, 4); }) == ErrorCode::InfeasibleParameters);  // s = 1
    CHECK(code_of([] { turan_h(7, 5, 2); }) == ErrorCode::InfeasibleParameters);   // n-h < 2s
}

TEST_CASE("split and Turan bound every partition") {
    for (int n = 2; n <= 12; ++n) {
        for (int t = 2; t <= n; ++t) {
            const auto s = complete_split(n, t);
            const auto tu = turan(n, t);
            for (const auto& p : enumerate_partitions(n, t)) {
                CHECK(majorizes(s, p) != MajorizationVerdict::NotMajorized);
                CHECK(majorizes(s, p) != MajorizationVerdict::Incomparable);
                CHECK(majorizes(p, tu) != MajorizationVerdict::NotMajorized);
                CHECK(majorizes(p, tu) != MajorizationVerdict::Incomparable);
                if (p.h() == 0) {
                    std::vector<int> twos(static_cast<std::size_t>(t), 2);
                    twos[0] = n - 2 * (t - 1);
                    CHECK(oracle::dominates(twos, tuple(p)));
                }
            }
        }
    }
}

TEST_CASE("enumerate_partitions examples") {
    const auto a = enumerate_partitions(5, 2);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == Partition::canonicalize({4, 1}));
    CHECK(a[1] == Partition::canonicalize({3, 2}));

    const auto b = enumerate_partitions(6, 3);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == Partition::canonicalize({4, 1, 1}));
    CHECK(b[1] == Partition::canonicalize({3, 2, 1}));
    CHECK(b[2] == Partition::canonicalize({2, 2, 2}));

    CHECK(enumerate_partitions(12, 4).size() == 15);
    CHECK(oracle::partition_count(12, 4) == 15);
    CHECK(code_of([] { enumerate_partitions(3, 4); }) == ErrorCode::InfeasibleParameters);
}

TEST_CASE("enumeration is complete, duplicate-free and reverse-lexicographic") {
    for (int n = 2; n <= 18; ++n) {
        for (int t = 2; t <= n; ++t) {
            const auto got = enumerate_partitions(n, t);
            CHECK(static_cast<long long>(got.size()) == oracle::partition_count(n, t));
            std::set<std::vector<int>> seen;
            for (const auto& p : got) seen.insert(tuple(p));
            CHECK(seen.size() == got.size());
            auto brute = oracle::brute_partitions(n, t);
            CHECK(std::set<std::vector<int>>(brute.begin(), brute.end()) == seen);
            for (std::size_t i = 1; i < got.size(); ++i) CHECK(tuple(got[i - 1]) > tuple(got[i]));
            CHECK(got.front() == complete_split(n, t));
            CHECK(got.back() == turan(n, t));
        }
    }
}

TEST_CASE("enumerate_all and enumerate_class") {
    long long expected = 0;
    for (int n = 2; n <= 9; ++n)
        for (int t = 2; t <= n; ++t) expected += oracle::partition_count(n, t);
    CHECK(static_cast<long long>(enumerate_all(9).size()) == expected);
    CHECK(code_of([] { enumerate_all(1); }) == ErrorCode::InfeasibleParameters);

    const auto cls = enumerate_class(17, 10, 6);
    REQUIRE(cls.size() == 3);
    CHECK(cls[0] == with_ones({5, 2, 2, 2}, 6));
    CHECK(cls[1] == with_ones({4, 3, 2, 2}, 6));
    CHECK(cls[2] == with_ones({3, 3, 3, 2}, 6));

    for (int n = 4; n <= 14; ++n) {
        for (int t = 2; t <= n; ++t) {
            for (int h = 0; t - h >= 2; ++h) {
                if (n - h < 2 * (t - h)) continue;
                const auto c = enumerate_class(n, t, h);
                long long brute = 0;
                for (const auto& p : enumerate_partitions(n, t)) brute += p.h() == h;
                CHECK(static_cast<long long>(c.size()) == brute);
                for (const auto& p : c) CHECK(p.h() == h);
                CHECK(c.front() == split_h(n, t, h));
                CHECK(c.back() == turan_h(n, t, h));
            }
        }
    }
}

TEST_CASE("PartitionStream yields S first and stops") {
    PartitionStream stream(7, 3);
    auto first = stream.next();
    REQUIRE(first);
    CHECK(*first == Partition::canonicalize({5, 1, 1}));
    int count = 1;
    while (stream.next()) ++count;
    CHECK(count == 4);
    CHECK_FALSE(stream.next());
}
