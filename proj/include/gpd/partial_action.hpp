#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/report.hpp"

namespace gpd {

// A partially defined map (element, point) -> point with explicit domain D.
// D is stored extensionally; nothing is ever inferred.
struct PartialActionTable {
    std::string name;
    GroupoidTable groupoid;
    std::vector<std::string> carrier;       // point ids
    std::map<std::pair<int, int>, int> act; // (element, point) -> point

    int points() const { return static_cast<int>(carrier.size()); }
    const std::string& point(int x) const { return carrier[x]; }
    int point_index(const std::string& id) const;  // -1 if unknown
    int require_point(const std::string& id) const;
    bool defined(int g, int x) const { return act.count({g, x}) != 0; }
    int value(int g, int x) const;  // -1 when undefined

    bool operator==(const PartialActionTable&) const = default;
};

// FormatError on unknown element/point ids or duplicate pairs.
PartialActionTable make_partial_action(
    std::string name, GroupoidTable g, std::vector<std::string> carrier,
    const std::vector<std::tuple<std::string, std::string, std::string>>& entries);

// Tags: PGrA1 (existence of an identity per point and identities acting
// trivially), PGrA2, PGrA3, range-compat ((g,x) in D forces (r(g), g.x)
// and (d(g), x) in D).
ValidationReport validate_partial_action(const PartialActionTable& p);
bool is_valid_action(const PartialActionTable& p);

// The identity domains X_e are pairwise disjoint.
bool is_strict(const PartialActionTable& p);

// PGrA4: whenever d(g) acts on x, so does g.
bool is_global(const PartialActionTable& p);

// X_g = {x : (g^-1, x) in D}.
std::vector<int> domain_set(const PartialActionTable& p, int g);

// The unique object acting on x; MathError when missing or ambiguous.
int identity_object_of(const PartialActionTable& p, int x);

// Elements are the pairs of D, named "(g|x)"; comp((g,x),(h,y)) = (gh,y)
// when d(g) = r(h) and x = h.y.  Validates p first (MathError).
GroupoidTable action_groupoid(const PartialActionTable& p);

// Triples (g|x|y) with g.x = y; isomorphic to the action groupoid.
GroupoidTable graph_groupoid(const PartialActionTable& p);

// (g|x) |-> (g|x|g.x); verified bijective and functorial.
GroupoidFunctor graph_iso(const PartialActionTable& p);

using PointMap = std::map<std::string, std::string>;

// f equivariant: (g,x) in D_p implies (g, f(x)) in D_q with matching value.
// p and q must act by the same groupoid, f must be a total map into q's
// carrier (FormatError otherwise).
bool is_action_morphism(const PointMap& f, const PartialActionTable& p,
                        const PartialActionTable& q);

// Restriction to a point subset: keeps (g,x) when both x and g.x survive.
PartialActionTable restrict_action(const PartialActionTable& p, const std::vector<int>& pts,
                                   std::string name);

}  // namespace gpd
