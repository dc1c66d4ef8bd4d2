#include "doctest.h"

#include "gpd/closure.hpp"
#include "gpd/error.hpp"
#include "gpd/format.hpp"
#include "gpd/groupoid.hpp"
#include "support/gen.hpp"

using namespace gpd;
using namespace gpd::testsup;

namespace {
GroupoidTable fixture(const std::string& file) { return load_groupoid(fixture_path(file)); }
}

TEST_CASE("closing the printed table adds exactly the product uv") {
    GroupoidTable e7 = fixture("e7.gpd");
    GroupoidTable c = complete_closure(e7);
    CHECK(c.size() == 8);
    CHECK(validate_groupoid(c).passed());

    int p = c.require("_p0");
    int u = c.require("u"), v = c.require("v");
    CHECK(c.cmp(u, v) == p);
    CHECK(c.d(p) == c.require("y"));
    CHECK(c.r(p) == c.require("y"));
    CHECK(c.inverse(p) == p);
    CHECK(c.cmp(p, p) == c.require("y"));

    // forced products agree with the eight-element fixture
    CHECK(c.id(c.cmp(c.require("a"), v)) == "u-");
    CHECK(c.id(c.cmp(u, c.require("a"))) == "v-");
    CHECK(c.id(c.cmp(c.require("u-"), c.require("v-"))) == "a");

    auto iso = find_isomorphism(c, fixture("e8.gpd"));
    CHECK(iso.has_value());
}

TEST_CASE("closing the eight-element table minus its extra element") {
    GroupoidTable e8 = fixture("e8.gpd");
    std::vector<int> keep;
    for (int g = 0; g < e8.size(); ++g)
        if (e8.id(g) != "b") keep.push_back(g);
    // drop b and every product involving it
    GroupoidTable partial;
    partial.name = "E8_minus_b";
    for (int g : keep) {
        partial.elements.push_back(e8.id(g));
        partial.obj.push_back(e8.obj[g]);
    }
    auto back = [&](int g) {
        return static_cast<int>(std::find(keep.begin(), keep.end(), g) - keep.begin());
    };
    for (int g : keep) {
        partial.dom.push_back(back(e8.d(g)));
        partial.rng.push_back(back(e8.r(g)));
        partial.inv.push_back(back(e8.inverse(g)));
    }
    const int n = static_cast<int>(keep.size());
    partial.comp.assign(static_cast<size_t>(n) * n, -1);
    int b = e8.require("b");
    for (int g : keep)
        for (int h : keep) {
            int w = e8.cmp(g, h);
            if (w != -1 && w != b) partial.set_cmp(back(g), back(h), back(w));
        }

    GroupoidTable c = complete_closure(partial);
    CHECK(c.size() == 8);
    CHECK(c.index_of("_p0") >= 0);
    CHECK(c.id(c.cmp(c.require("u"), c.require("v"))) == "_p0");
    CHECK(validate_groupoid(c).passed());
}

TEST_CASE("closure is the identity on complete tables") {
    for (const char* f : {"z2.gpd", "e8.gpd", "s3.gpd", "pair_xy.gpd"}) {
        GroupoidTable t = fixture(f);
        CHECK(complete_closure(t) == t);
    }
}

TEST_CASE("conflicting products are contradictions") {
    GroupoidTable t = fixture("e8.gpd");
    t.set_cmp(t.require("v"), t.require("u"), t.require("x"));  // vu = x instead of a
    CHECK_THROWS_AS(complete_closure(t), MathError);
}

TEST_CASE("derived conflicts surface too") {
    // On the seven-element table a.v is forced to u- by (a.v).u = a.(v.u);
    // declaring a.v = v is type-correct but contradicts the consequence.
    GroupoidTable t = fixture("e7.gpd");
    t.set_cmp(t.require("a"), t.require("v"), t.require("v"));
    CHECK_THROWS_AS(complete_closure(t), MathError);
}

TEST_CASE("free loops exceed the element limit") {
    // one object, one loop with a distinct inverse and no relations
    GroupoidTable t = make_table("free", {"e"}, {{"t", "e", "e"}, {"t-", "e", "e"}},
                                 {{"t", "t-"}}, {});
    ClosureOptions opts;
    opts.max_elements = 64;
    CHECK_THROWS_AS(complete_closure(t, opts), MathError);
}

TEST_CASE("closure output validates and extends random partial tables") {
    Rng rng(99);
    int completed = 0;
    for (int i = 0; i < 20; ++i) {
        GroupoidTable full = random_groupoid(rng, 8);
        GroupoidTable t = full;
        // erase a random batch of non-forced products
        for (int g = 0; g < t.size(); ++g)
            for (int h = 0; h < t.size(); ++h) {
                if (t.cmp(g, h) == -1 || t.is_object(g) || t.is_object(h)) continue;
                if (pick(rng, 0, 3) == 0) t.set_cmp(g, h, -1);
            }
        GroupoidTable c;
        try {
            c = complete_closure(t);
        } catch (const MathError&) {
            continue;  // an underdetermined presentation may be infinite
        }
        ++completed;
        CHECK(validate_groupoid(c).passed());
        CHECK(c.size() >= t.size());
        // every declared product survives with its value
        for (int g = 0; g < t.size(); ++g)
            for (int h = 0; h < t.size(); ++h) {
                int w = t.cmp(g, h);
                if (w == -1) continue;
                CHECK(c.cmp(c.require(t.id(g)), c.require(t.id(h))) == c.require(t.id(w)));
            }
        CHECK(complete_closure(c) == c);  // idempotent
    }
    CHECK(completed > 0);
}

TEST_CASE("a single erased product is recovered") {
    GroupoidTable z5 = group_by_name("Z5");
    int a = z5.require("a");
    GroupoidTable t = z5;
    t.set_cmp(a, a, -1);
    GroupoidTable c = complete_closure(t);
    CHECK(c == z5);
}
