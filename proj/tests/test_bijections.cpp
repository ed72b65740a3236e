#include <array>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "fibperm/bijections.hpp"
#include "fibperm/enumeration.hpp"

using namespace fibperm;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }
Tiling T(std::string_view s) { return Tiling::parse(s); }

} // namespace

TEST_CASE("run-length map on {132,213}-avoiders") {
    CHECK(perm_to_tiling(P("978652341")) == T("1,2,1,1,3,1"));
    CHECK(perm_to_tiling(P("56782341")) == T("4,3,1"));
    CHECK(perm_to_tiling(P("1")) == T("1"));
    CHECK(perm_to_tiling(Permutation{}).empty());
    CHECK_THROWS_WITH_AS(perm_to_tiling(P("132")), doctest::Contains("132"),
                         std::invalid_argument);

    CHECK(tiling_to_perm(T("1,2,1,1,3,1")) == P("978652341"));
    CHECK(tiling_to_perm(T("6")) == P("123456"));
    CHECK(tiling_to_perm(T("1,1,1,1")) == P("4321"));
    CHECK(tiling_to_perm(Tiling{}).empty());
}

TEST_CASE("run-length map is a bijection onto all tilings") {
    const PatternSet cls = PatternSet::parse("132,213");
    for (int n = 0; n <= 12; ++n) {
        const auto tilings = enumerate_tilings(n, TilingConstraint::none());
        std::set<Permutation> image;
        for (const auto& t : tilings) {
            const Permutation pi = tiling_to_perm(t);
            CHECK(avoids_all(pi, cls));
            CHECK(perm_to_tiling(pi) == t);
            image.insert(pi);
        }
        const auto avoiders = enumerate_avoiders(n, cls);
        CHECK(image.size() == avoiders.size());
        for (const auto& pi : avoiders) CHECK(tiling_to_perm(perm_to_tiling(pi)) == pi);
    }
}

TEST_CASE("tile-length characterizations of the tau subclasses") {
    // ascending pattern of length k <-> all tiles at most k-1
    for (int k = 3; k <= 5; ++k) {
        std::vector<int> asc;
        for (int v = 1; v <= k; ++v) asc.push_back(v);
        const PatternSet cls{P("132"), P("213"), Permutation(asc)};
        for (int n = 0; n <= 9; ++n) {
            std::set<Permutation> image;
            for (const auto& t : enumerate_tilings(n, TilingConstraint::max_len(k - 1)))
                image.insert(tiling_to_perm(t));
            const auto avoiders = enumerate_avoiders(n, cls);
            CHECK(std::set<Permutation>(avoiders.begin(), avoiders.end()) == image);
        }
    }
    // alpha(s,t) <-> all but the rightmost s tiles have length at most t
    for (int s = 1; s <= 3; ++s)
        for (int t = 1; t <= 3; ++t) {
            const PatternSet cls{P("132"), P("213"), alpha_perm(s, t)};
            for (int n = 0; n <= 8; ++n) {
                std::set<Permutation> image;
                for (const auto& tl :
                     enumerate_tilings(n, TilingConstraint::last_s_unbounded(s, t)))
                    image.insert(tiling_to_perm(tl));
                const auto avoiders = enumerate_avoiders(n, cls);
                CHECK(std::set<Permutation>(avoiders.begin(), avoiders.end()) == image);
            }
        }
    // beta(a,b,c) <-> all but the leftmost a and rightmost c tiles shorter than b
    const std::vector<std::array<int, 3>> params = {{1, 2, 1}, {0, 2, 1}, {1, 3, 0}, {2, 2, 2}};
    for (auto [a, b, c] : params) {
        const PatternSet cls{P("132"), P("213"), beta_perm(a, b, c)};
        for (int n = 0; n <= 8; ++n) {
            std::set<Permutation> image;
            for (const auto& tl : enumerate_tilings(n, TilingConstraint::ends_free(a, c, b - 1)))
                image.insert(tiling_to_perm(tl));
            const auto avoiders = enumerate_avoiders(n, cls);
            CHECK(std::set<Permutation>(avoiders.begin(), avoiders.end()) == image);
        }
    }
}

TEST_CASE("worked examples of the five maps") {
    CHECK(themed_bijection(ThemedMap::T44, T("4,1,1,2,1"), 4) == P("876954231"));
    CHECK(themed_bijection_inverse(ThemedMap::T44, P("986743512"), 4) == T("1,1,2,3,2"));
    CHECK(themed_bijection(ThemedMap::T47, T("3,1,1,5"), 3) == P("879653214"));
    CHECK(themed_bijection(ThemedMap::T47, T("1,3,2,2,2"), 3) == P("976845231"));
    CHECK(themed_bijection(ThemedMap::T410, T("1,2,1,5"), 3) == P("978643215"));
    CHECK(themed_bijection(ThemedMap::T410, T("3,1,4,1"), 3) == P("879643251"));
    CHECK(themed_bijection(ThemedMap::T410, T("5,2"), 3) == P("6543712"));
    CHECK(themed_bijection(ThemedMap::T54, T("1,1,2,1,2,1,1")) == P("87564123"));
    CHECK(themed_bijection_inverse(ThemedMap::T54, P("86745321")) == T("1,2,2,1,1,2"));
    CHECK(themed_bijection(ThemedMap::T58, T("1,2,2,1,1,1")) == P("7563214"));
    CHECK(themed_bijection_inverse(ThemedMap::T58, P("897564321")) == T("2,1,2,1,1,1,2"));
}

TEST_CASE("domain and class rejections carry the reason") {
    CHECK_THROWS_WITH_AS(themed_bijection(ThemedMap::T44, T("4,1"), 3),
                         doctest::Contains("length"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(themed_bijection(ThemedMap::T54, T("1,1,1")),
                         doctest::Contains("length 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(themed_bijection_inverse(ThemedMap::T54, P("132")),
                         doctest::Contains("1,3,2"), std::invalid_argument);
    CHECK_THROWS_AS(themed_bijection(ThemedMap::T44, T("2,2"), 1), std::invalid_argument);
}

TEST_CASE("each map carries its domain onto its class") {
    struct Setup {
        ThemedMap map;
        int b;
    };
    const Setup setups[] = {{ThemedMap::T44, 2},  {ThemedMap::T44, 3},  {ThemedMap::T44, 4},
                            {ThemedMap::T47, 2},  {ThemedMap::T47, 3},  {ThemedMap::T47, 4},
                            {ThemedMap::T410, 2}, {ThemedMap::T410, 3}, {ThemedMap::T410, 4},
                            {ThemedMap::T54, 2},  {ThemedMap::T58, 2}};
    for (const auto& s : setups) {
        const PatternSet cls = themed_class(s.map, s.b);
        for (int n = 1; n <= 8; ++n) {
            const int board = themed_board_length(s.map, n);
            const auto domain = enumerate_tilings(board, themed_domain(s.map, s.b));
            std::set<Permutation> image;
            for (const auto& t : domain) {
                const Permutation pi = themed_bijection(s.map, t, s.b);
                CHECK(pi.size() == n);
                CHECK(avoids_all(pi, cls));
                CHECK(themed_bijection_inverse(s.map, pi, s.b) == t);
                image.insert(pi);
            }
            CHECK(image.size() == domain.size()); // injective
            const auto avoiders = enumerate_avoiders(n, cls);
            CHECK(std::set<Permutation>(avoiders.begin(), avoiders.end()) == image);
        }
    }
}
