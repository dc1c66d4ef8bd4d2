#include "doctest.h"

#include "gpd/error.hpp"
#include "gpd/format.hpp"
#include "support/gen.hpp"

using namespace gpd;
using namespace gpd::testsup;

TEST_CASE("parsing the minimal example") {
    auto doc = parse_document(
        "groupoid Z2\nobjects: e\narrow a : e -> e\ninv a = a\ncomp a a = e\nend");
    CHECK(doc.kind == DocKind::groupoid);
    CHECK(doc.name == "Z2");
    GroupoidTable t = table_from_document(doc);
    CHECK(t.size() == 2);
    CHECK(validate_groupoid(t).passed());
}

TEST_CASE("the eight-element fixture parses fully") {
    auto doc = parse_document(read_file(fixture_path("e8.gpd")));
    CHECK(doc.objects.size() == 2);
    CHECK(doc.arrows.size() == 6);
    CHECK(doc.comps.size() == 18);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_document("groupoid G\nobjects: e f\narrow a : e -> f\n"
                                        "inv a = a\ncomp a a = e\nend"),
                         doctest::Contains("line 5"), FormatError);  // d(a) != r(a)
    CHECK_THROWS_WITH_AS(parse_document("groupoid G\nobjects: e\nnonsense here\nend"),
                         doctest::Contains("line 3"), FormatError);
    CHECK_THROWS_WITH_AS(parse_document("groupoid G\nobjects: e\narrow a : e -> e\n"
                                        "inv a = a\ncomp a a = e\ncomp a a = a\nend"),
                         doctest::Contains("line 6"), FormatError);
    CHECK_THROWS_AS(parse_document("groupoid G\nobjects: e\n"), FormatError);  // no end
    CHECK_THROWS_WITH_AS(parse_document("groupoid G\nobjects: e\narrow a : e -> e\nend"),
                         doctest::Contains("inverse"), FormatError);  // inv not total
}

TEST_CASE("comments and blank lines are ignored") {
    auto doc = parse_document(
        "# a comment\ngroupoid Z2 # trailing\n\nobjects: e\narrow a : e -> e\n"
        "inv a = a\ncomp a a = e\nend\n");
    CHECK(doc.name == "Z2");
}

TEST_CASE("canonical files round-trip byte-exactly") {
    for (const char* f :
         {"z2.gpd", "e8.gpd", "e7.gpd", "s3.gpd", "pair_xy.gpd", "pairxz2.gpd", "h1.gpd"}) {
        CAPTURE(f);
        std::string text = read_file(fixture_path(f));
        CHECK(groupoid_text(table_from_document(parse_document(text))) == text);
    }
    for (const char* f : {"global_pair.pact", "restricted.pact", "broken.pact", "idonly.pact",
                          "extended_pair.pact"}) {
        CAPTURE(f);
        std::string text = read_file(fixture_path(f));
        auto p = load_partial_action(fixture_path(f));
        CHECK(partial_action_text(p.action, p.groupoid_ref) == text);
    }
    {
        std::string text = read_file(fixture_path("incl_h1.func"));
        auto lf = load_functor(fixture_path("incl_h1.func"));
        CHECK(functor_text(lf.functor, lf.source_ref, lf.target_ref) == text);
    }
    for (const char* f : {"flip.aut", "trivial.aut", "swap.aut"}) {
        CAPTURE(f);
        std::string text = read_file(fixture_path(f));
        auto la = load_aut_action(fixture_path(f));
        CHECK(aut_action_text(la.action, la.name, la.group_ref, la.groupoid_ref) == text);
    }
}

TEST_CASE("serialization canonicalizes and is stable") {
    // redundant but consistent declarations are dropped on re-serialization
    std::string text =
        "groupoid G\nobjects: e\narrow a : e -> e\ninv a = a\n"
        "comp e a = a\ncomp a a = e\nend\n";
    std::string canon = groupoid_text(table_from_document(parse_document(text)));
    CHECK(canon != text);
    CHECK(groupoid_text(table_from_document(parse_document(canon))) == canon);

    Rng rng(107);
    for (int i = 0; i < 10; ++i) {
        GroupoidTable t = random_groupoid(rng, 10);
        std::string once = groupoid_text(t);
        GroupoidTable back = table_from_document(parse_document(once));
        CHECK(groupoid_text(back) == once);
        CHECK(validate_groupoid(back).passed());
        CHECK(find_isomorphism(t, back).has_value());
    }
}

TEST_CASE("duplicate and unknown references are rejected") {
    CHECK_THROWS_AS(parse_document("groupoid G\nobjects: e e\nend"), FormatError);
    CHECK_THROWS_AS(parse_document("groupoid G\nobjects: e\narrow a : e -> f\nend"), FormatError);
    CHECK_THROWS_AS(
        parse_document("paction P on g.gpd\nset: x\nact a x = x\nact a x = x\nend"),
        FormatError);
    CHECK_THROWS_AS(parse_document("functor F : a -> b\nmap x = y\nmap x = z\nend"), FormatError);
    CHECK_THROWS_AS(load_groupoid(fixture_path("missing.gpd")), FormatError);
}
