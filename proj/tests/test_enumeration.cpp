#include <algorithm>

#include "doctest.h"
#include "fibperm/enumeration.hpp"
#include "fibperm/sequences.hpp"

using namespace fibperm;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }

// Independent oracle: filter all n! permutations with the containment test.
std::vector<Permutation> naive_avoiders(int n, const PatternSet& r) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        Permutation pi(v);
        if (avoids_all(pi, r)) out.push_back(std::move(pi));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

TEST_CASE("stated small enumerations") {
    const auto got = enumerate_avoiders(3, PatternSet::parse("123,132,213"));
    REQUIRE(got.size() == 3);
    CHECK(got[0] == P("231"));
    CHECK(got[1] == P("312"));
    CHECK(got[2] == P("321"));

    const auto s0 = enumerate_avoiders(0, PatternSet::parse("132"));
    REQUIRE(s0.size() == 1);
    CHECK(s0[0].empty());

    CHECK(enumerate_avoiders(4, PatternSet::parse("123,132,213")).size() == 5); // F_5
}

TEST_CASE("stated counts") {
    CHECK(count_avoiders(4, PatternSet::parse("132")) == 14); // Catalan
    CHECK(count_avoiders(5, PatternSet::parse("1234,132,213")) == 13);
    CHECK(count_avoiders(6, PatternSet{}) == factorial(6));
    CHECK(count_avoiders(25, PatternSet{}) == factorial(25)); // exceeds 64-bit
    CHECK(count_avoiders(0, PatternSet::parse("123")) == 1);
    CHECK(count_avoiders(3, PatternSet{Permutation{}}) == 0); // empty pattern kills everything
}

TEST_CASE("pruned search equals the naive filter") {
    const PatternSet sets[] = {
        PatternSet::parse("123,132,213"),
        PatternSet::parse("132,213,1234"),
        PatternSet::parse("132"),
        PatternSet::parse("321,2143"),
        PatternSet{},
    };
    for (const auto& r : sets) {
        for (int n = 0; n <= 7; ++n) {
            const auto fast = enumerate_avoiders(n, r);
            const auto slow = naive_avoiders(n, r);
            REQUIRE(fast.size() == slow.size());
            CHECK(std::is_sorted(fast.begin(), fast.end()));
            CHECK(std::adjacent_find(fast.begin(), fast.end()) == fast.end());
            CHECK(fast == slow); // next_permutation emits lexicographic order too
            CHECK(count_avoiders(n, r) == static_cast<long long>(slow.size()));
        }
    }
}

TEST_CASE("counts forced by structure") {
    for (int n = 1; n <= 12; ++n)
        CHECK(count_avoiders(n, PatternSet::parse("132,213")) == pow_int(2, n - 1));
    const char* s3[] = {"123", "132", "213", "231", "312", "321"};
    for (const char* p : s3)
        for (int n = 0; n <= 8; ++n)
            CHECK(count_avoiders(n, PatternSet::parse(p)) == catalan(n));
}
