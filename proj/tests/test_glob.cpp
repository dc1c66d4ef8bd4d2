#include "doctest.h"

#include <set>

#include "gpd/error.hpp"
#include "gpd/format.hpp"
#include "gpd/globalization.hpp"
#include "support/gen.hpp"

using namespace gpd;
using namespace gpd::testsup;

namespace {

LoadedPaction pact(const std::string& file) { return load_partial_action(fixture_path(file)); }

// q extended by a fresh translation orbit: one new point per object,
// acted on by g as fresh(d(g)) -> fresh(r(g))
PartialActionTable with_extra_orbit(const PartialActionTable& q) {
    PartialActionTable out = q;
    out.name = q.name + "_ext";
    const auto& t = q.groupoid;
    std::map<int, int> fresh;
    for (int e : t.object_list()) {
        fresh[e] = out.points();
        out.carrier.push_back("fresh_" + t.id(e));
    }
    for (int g = 0; g < t.size(); ++g) out.act[{g, fresh[t.d(g)]}] = fresh[t.r(g)];
    return out;
}

}  // namespace

TEST_CASE("globalization of an already global action collapses to it") {
    auto global = pact("global_pair.pact");
    Globalization gl = globalize(global.action);
    CHECK(static_cast<int>(gl.carrier_y.size()) == global.action.points());
    CHECK(is_global(gl.beta));
    // iota is a bijective morphism with a morphism inverse
    PointMap back;
    for (const auto& [x, y] : gl.iota) back[y] = x;
    CHECK(is_action_morphism(gl.iota, global.action, gl.beta));
    CHECK(is_action_morphism(back, gl.beta, global.action));
}

TEST_CASE("identity-only actions globalize to translation orbits") {
    auto idonly = pact("idonly.pact");
    Globalization gl = globalize(idonly.action);
    const auto& t = idonly.action.groupoid;
    // one class per pair (g, x) with d(g) = e_x, classes are singletons
    int expected = 0;
    for (int g = 0; g < t.size(); ++g) {
        if (t.d(g) == t.require("x")) ++expected;  // point m
        if (t.d(g) == t.require("y")) ++expected;  // point n
    }
    CHECK(static_cast<int>(gl.carrier_y.size()) == expected);
    for (const auto& [cid, reps] : gl.classes) CHECK(reps.size() == 1);
    CHECK(is_global(gl.beta));
    CHECK(is_strict(gl.beta));
}

TEST_CASE("carrier never shrinks; equality exactly for global actions") {
    Rng rng(97);
    for (int i = 0; i < 25; ++i) {
        GroupoidTable t = random_groupoid(rng, 8);
        PartialActionTable p = random_partial_action(rng, t, 4, false);
        Globalization gl = globalize(p);
        CHECK(static_cast<int>(gl.carrier_y.size()) >= p.points());
        bool equal = static_cast<int>(gl.carrier_y.size()) == p.points();
        CHECK(equal == is_global(p));
    }
}

TEST_CASE("nu embeds the action groupoid") {
    auto restricted = pact("restricted.pact");
    Globalization gl = globalize(restricted.action);
    auto nu = nu_embedding(gl);
    CHECK(is_functor(nu));
    CHECK(is_injective_functor(nu));
    CHECK(nu.source.size() == 1);

    // for a global action nu is onto
    auto global = pact("global_pair.pact");
    Globalization gl2 = globalize(global.action);
    auto nu2 = nu_embedding(gl2);
    CHECK(is_bijective_functor(nu2));
}

TEST_CASE("the embedded image is full and dense") {
    for (const char* f : {"restricted.pact", "idonly.pact", "global_pair.pact"}) {
        CAPTURE(f);
        auto p = pact(f);
        auto rep = check_full_dense(globalize(p.action));
        CHECK(rep.full);
        CHECK(rep.dense);
    }
    Rng rng(101);
    for (int i = 0; i < 15; ++i) {
        GroupoidTable t = random_groupoid(rng, 8);
        PartialActionTable p = random_partial_action(rng, t, 4, false);
        auto rep = check_full_dense(globalize(p));
        CHECK(rep.full);
        CHECK(rep.dense);
    }
}

TEST_CASE("an unreachable extra orbit breaks density") {
    auto restricted = pact("restricted.pact");
    Globalization gl = globalize(restricted.action);
    Globalization enlarged = gl;
    enlarged.beta = with_extra_orbit(gl.beta);
    auto rep = check_full_dense(enlarged);
    CHECK_FALSE(rep.dense);
    bool dense_witness = false;
    for (const auto& v : rep.failures) dense_witness |= v.tag == "dense";
    CHECK(dense_witness);
}

TEST_CASE("the mediating morphism exists uniquely") {
    auto restricted = pact("restricted.pact");
    auto extended = pact("extended_pair.pact");
    Globalization gl = globalize(restricted.action);

    SUBCASE("against the globalization itself") {
        PointMap k = verify_universal(gl, gl.beta, gl.iota);
        for (const auto& [y, z] : k) CHECK(y == z);  // identity
        auto n = count_mediating_morphisms(gl, gl.beta, gl.iota);
        REQUIRE(n.has_value());
        CHECK(*n == 1);
    }
    SUBCASE("against a larger globalization") {
        PointMap j{{"p", "p"}};
        PointMap k = verify_universal(gl, extended.action, j);
        CHECK(k.at("[(x|x)|p]") == "p");
        CHECK(k.at("[(x|y)|p]") == "q");
        auto n = count_mediating_morphisms(gl, extended.action, j);
        REQUIRE(n.has_value());
        CHECK(*n == 1);
    }
    SUBCASE("against the globalization plus a fresh orbit") {
        PartialActionTable big = with_extra_orbit(gl.beta);
        PointMap j = gl.iota;
        PointMap k = verify_universal(gl, big, j);
        for (const auto& [y, z] : k) CHECK(y == z);  // inclusion
        auto n = count_mediating_morphisms(gl, big, j);
        REQUIRE(n.has_value());
        CHECK(*n == 1);
    }
    SUBCASE("a non-morphism j is rejected") {
        PointMap j{{"p", "q"}};
        CHECK_THROWS_AS(verify_universal(gl, extended.action, j), MathError);
    }
    SUBCASE("a non-global target is rejected") {
        PointMap j{{"p", "p"}};
        CHECK_THROWS_AS(verify_universal(gl, restricted.action, j), MathError);
    }
}

TEST_CASE("globalizing the globalization is a bijection on points") {
    Rng rng(103);
    for (int i = 0; i < 10; ++i) {
        GroupoidTable t = random_groupoid(rng, 8);
        PartialActionTable p = random_partial_action(rng, t, 4, false);
        Globalization gl = globalize(p);
        Globalization gl2 = globalize(gl.beta);
        CHECK(gl2.carrier_y.size() == gl.carrier_y.size());
        std::set<std::string> image;
        for (const auto& [x, y] : gl2.iota) image.insert(y);
        CHECK(image.size() == gl2.carrier_y.size());
    }
}

TEST_CASE("globalization rejects non-strict actions") {
    auto global = pact("global_pair.pact");
    PartialActionTable bad = global.action;
    bad.act[{bad.groupoid.require("(y|y)"), bad.require_point("p")}] = bad.require_point("p");
    CHECK_THROWS_AS(globalize(bad), MathError);
}
