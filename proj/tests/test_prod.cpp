#include "doctest.h"

#include <algorithm>

#include "gpd/error.hpp"
#include "gpd/format.hpp"
#include "gpd/product.hpp"
#include "gpd/subgroupoid.hpp"
#include "support/gen.hpp"

using namespace gpd;
using namespace gpd::testsup;

namespace {
GroupoidTable fixture(const std::string& file) { return load_groupoid(fixture_path(file)); }
}

TEST_CASE("direct products") {
    GroupoidTable z2 = fixture("z2.gpd");
    GroupoidTable zz = direct_product({z2, z2});
    CHECK(zz.size() == 4);
    CHECK(validate_groupoid(zz).passed());
    CHECK(zz.object_list().size() == 1);

    GroupoidTable pr = fixture("pair_xy.gpd");
    GroupoidTable px = direct_product({pr, z2});
    CHECK(px.size() == 8);
    CHECK(validate_groupoid(px).passed());
    CHECK(find_isomorphism(px, fixture("e8.gpd")).has_value());

    GroupoidTable single = direct_product({z2});
    CHECK(single.size() == z2.size());
    CHECK(find_isomorphism(single, z2).has_value());

    CHECK_THROWS_AS(direct_product({}), FormatError);
}

TEST_CASE("product is associative up to tuple flattening") {
    GroupoidTable z2 = fixture("z2.gpd");
    GroupoidTable pr = fixture("pair_xy.gpd");
    GroupoidTable s3 = fixture("s3.gpd");
    GroupoidTable left = direct_product({direct_product({pr, z2}), s3});
    GroupoidTable right = direct_product({pr, direct_product({z2, s3})});
    CHECK(left.size() == right.size());
    CHECK(find_isomorphism(left, right).has_value());
}

TEST_CASE("aut action validation") {
    GroupoidTable e8 = fixture("e8.gpd");
    GroupoidTable z2 = fixture("z2.gpd");

    AutAction trivial;
    trivial.group = z2;
    trivial.target = e8;
    trivial.omega.assign(z2.size(), perm_identity(e8.size()));
    CHECK(validate_aut_action(trivial).passed());

    AutAction broken = trivial;
    std::swap(broken.omega[1][e8.require("u")], broken.omega[1][e8.require("a")]);
    auto rep = validate_aut_action(broken);
    CHECK_FALSE(rep.passed());
    CHECK(rep.has_tag("aut-functorial"));

    AutAction not_hom = trivial;
    // an involution assigned to the identity element of the group
    auto auts = find_automorphisms(e8);
    for (const auto& a : auts)
        if (a != perm_identity(e8.size())) {
            not_hom.omega[0] = a;
            break;
        }
    CHECK(validate_aut_action(not_hom).has_tag("aut-identity"));
}

TEST_CASE("twisted product with a trivial action is the direct product") {
    GroupoidTable e8 = fixture("e8.gpd");
    GroupoidTable z2 = fixture("z2.gpd");
    AutAction trivial;
    trivial.group = z2;
    trivial.target = e8;
    trivial.omega.assign(z2.size(), perm_identity(e8.size()));

    GroupoidTable tw = semidirect_product(e8, trivial);
    GroupoidTable dp = direct_product({e8, z2});
    CHECK(validate_groupoid(tw).passed());
    REQUIRE(tw.size() == dp.size());
    // identical as set maps: same ids, same structure maps, same table
    for (int g = 0; g < tw.size(); ++g) {
        CHECK(tw.id(g) == dp.id(g));
        CHECK(tw.d(g) == dp.d(g));
        CHECK(tw.r(g) == dp.r(g));
        CHECK(tw.inverse(g) == dp.inverse(g));
        for (int h = 0; h < tw.size(); ++h) CHECK(tw.cmp(g, h) == dp.cmp(g, h));
    }
}

TEST_CASE("the coarse-times-group model composes as advertised") {
    // connected table pair({x,y}) x S3, with the isotropy group acting on
    // itself by conjugation
    GroupoidTable s3 = fixture("s3.gpd");
    GroupoidTable base = direct_product({pair_groupoid({"x", "y"}), s3});
    REQUIRE(validate_groupoid(base).passed());

    AutAction conj;
    conj.group = s3;
    conj.target = base;
    for (int a = 0; a < s3.size(); ++a) {
        std::vector<int> perm(base.size());
        for (int g = 0; g < base.size(); ++g) {
            // (p|q, h) -> (p|q, a h a^-1)
            auto bar = base.id(g);
            auto split = bar.rfind('|');
            std::string pq = bar.substr(1, split - 1);
            std::string h = bar.substr(split + 1, bar.size() - split - 2);
            int ah = s3.cmp(s3.cmp(a, s3.require(h)), s3.inverse(a));
            perm[g] = base.require("(" + pq + "|" + s3.id(ah) + ")");
        }
        conj.omega.push_back(perm);
    }
    REQUIRE(validate_aut_action(conj).passed());

    GroupoidTable tw = semidirect_product(base, conj);
    CHECK(validate_groupoid(tw).passed());
    CHECK(tw.size() == base.size() * s3.size());

    // ((y|z),g,a)((x|y),h,b) = ((x|z), g (a.h), ab) with a.h = conjugation
    auto elt = [&](const std::string& pq, const std::string& h, const std::string& a) {
        return tw.require(tuple_id({tuple_id({pq, h}), a}));
    };
    int lhs = tw.cmp(elt("(y|x)", "r", "s"), elt("(x|y)", "r2", "r"));
    // a.h = s r2 s = r, g(a.h) = r r = r2, ab = s r = sr
    CHECK(lhs == elt("(x|x)", "r2", "sr"));
}

TEST_CASE("trichotomy conditions on object-fixing actions") {
    GroupoidTable px = fixture("pairxz2.gpd");
    GroupoidTable z2 = fixture("z2.gpd");

    auto flip = load_aut_action(fixture_path("flip.aut"));  // fixes every object
    auto rep = semidirect_trichotomy(px, flip.action);
    CHECK(rep.consistent());
    CHECK_FALSE(rep.identity_is_homomorphism);
    CHECK_FALSE(rep.omega_trivial);
    CHECK_FALSE(rep.object_part_normal);

    AutAction trivial;
    trivial.group = z2;
    trivial.target = px;
    trivial.omega.assign(z2.size(), perm_identity(px.size()));
    auto rep2 = semidirect_trichotomy(px, trivial);
    CHECK(rep2.consistent());
    CHECK(rep2.omega_trivial);
}

TEST_CASE("twisted products of valid actions are valid groupoids") {
    Rng rng(29);
    for (int i = 0; i < 15; ++i) {
        GroupoidTable t = random_groupoid(rng, 8);
        GroupoidTable g = random_group(rng, 4);
        AutAction act = random_aut_action(rng, t, g);
        GroupoidTable tw = semidirect_product(t, act);
        CHECK(validate_groupoid(tw).passed());
        CHECK(tw.size() == t.size() * g.size());
    }
}

TEST_CASE("trichotomy implications that hold for every action") {
    // For arbitrary actions only these are theorems: the identity map is a
    // homomorphism exactly when the action is trivial, and triviality makes
    // the object part normal.  The converse of the latter fails when the
    // action moves objects (see the pinned counterexample below).
    Rng rng(23);
    for (int i = 0; i < 30; ++i) {
        GroupoidTable t = random_groupoid(rng, 8);
        GroupoidTable g = random_group(rng, 4);
        AutAction act = random_aut_action(rng, t, g);
        REQUIRE(validate_aut_action(act).passed());
        auto rep = semidirect_trichotomy(t, act);
        CHECK(rep.identity_is_homomorphism == rep.omega_trivial);
        if (rep.omega_trivial) CHECK(rep.object_part_normal);

        bool fixes_objects = true;
        for (int a = 0; a < g.size(); ++a)
            for (int e : t.object_list())
                if (act.omega[a][e] != e) fixes_objects = false;
        if (fixes_objects) CHECK(rep.consistent());
    }
}

TEST_CASE("an object-swapping action breaks the normality condition") {
    // The swap automorphism of the coarse groupoid on {x,y} gives a valid
    // twisted product in which objects x group is normal even though the
    // action is nontrivial: the elements (e,g) with moved e are not loops,
    // so conjugation never inspects them.
    auto swap = load_aut_action(fixture_path("swap.aut"));
    GroupoidTable pr = fixture("pair_xy.gpd");
    REQUIRE(validate_aut_action(swap.action).passed());
    GroupoidTable tw = semidirect_product(pr, swap.action);
    CHECK(validate_groupoid(tw).passed());
    auto rep = semidirect_trichotomy(pr, swap.action);
    CHECK_FALSE(rep.identity_is_homomorphism);
    CHECK_FALSE(rep.omega_trivial);
    CHECK(rep.object_part_normal);
    CHECK_FALSE(rep.consistent());

    // both normality definitions agree that the object part is normal
    std::vector<int> part;
    for (int g = 0; g < tw.size(); ++g)
        for (const char* e : {"((x|x)|", "((y|y)|"})
            if (tw.id(g).rfind(e, 0) == 0) part.push_back(g);
    std::sort(part.begin(), part.end());
    REQUIRE(part.size() == 4);
    CHECK(is_normal(tw, part));
    CHECK(is_normal_bw(tw, part));
}

TEST_CASE("internal twisted products are recognized") {
    // abelian case: the two factors of Z2 x Z2
    GroupoidTable k4 = group_by_name("K4");
    auto phi = recognize_internal_semidirect(k4, element_set(k4, {"e", "a"}),
                                             element_set(k4, {"e", "b"}));
    CHECK(is_functor(phi));
    CHECK(is_bijective_functor(phi));
    CHECK(phi.source.size() == 4);

    // S3 = A3 x_w <s> with a nontrivial twist
    GroupoidTable s3 = fixture("s3.gpd");
    auto psi = recognize_internal_semidirect(s3, element_set(s3, {"e", "r", "r2"}),
                                             element_set(s3, {"e", "s"}));
    CHECK(is_functor(psi));
    CHECK(is_bijective_functor(psi));
    CHECK(psi.source.size() == 6);
    CHECK(psi.apply_id("sr") == "(r2|s)");  // sr = r2 s in the table

    // oversized intersection is rejected
    std::vector<int> all(s3.size());
    for (int i = 0; i < s3.size(); ++i) all[i] = i;
    CHECK_THROWS_AS(recognize_internal_semidirect(s3, all, element_set(s3, {"e", "s"})),
                    MathError);
    // non-normal first factor is rejected
    CHECK_THROWS_AS(recognize_internal_semidirect(s3, element_set(s3, {"e", "s"}),
                                                  element_set(s3, {"e", "rs"})),
                    MathError);
}
