#pragma once

#include "gpd/functor.hpp"
#include "gpd/partial_action.hpp"
#include "gpd/report.hpp"

namespace gpd {

// Universal globalization of a strict partial action: Y is the set of
// pairs (g,x) with d(g) = e_x modulo (g,x) ~ (h,y) iff r(g) = r(h) and
// (h^-1 g).x = y; the global action is g'.[g,x] = [g'g, x].  Class ids are
// "[g|x]" for the least representative in declaration order.
struct Globalization {
    PartialActionTable base;
    std::vector<std::string> carrier_y;
    PartialActionTable beta;  // global action on carrier_y
    PointMap iota;            // base carrier -> carrier_y, injective morphism
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> classes;
};

// MathError when p is not strict; internal consistency failures (a
// non-equivalence relation, an ill-defined class action, a non-global
// result) are hard errors, never repaired.
Globalization globalize(const PartialActionTable& p);

// (g|x) |-> (g|iota(x)) between the two action groupoids; verified
// injective, with projection after nu equal to the base projection.
GroupoidFunctor nu_embedding(const Globalization& gl);

struct FullDenseReport {
    bool full;   // arrows between image objects stay in the image
    bool dense;  // every identity connects to an image identity
    std::vector<Violation> failures;
};

FullDenseReport check_full_dense(const Globalization& gl);

// The unique morphism k with j = k after iota, computed classwise as
// k[g,x] = g.j(x) and verified.  q must be a global action of the same
// groupoid and j a morphism base -> q (MathError otherwise).
PointMap verify_universal(const Globalization& gl, const PartialActionTable& q,
                          const PointMap& j);

}  // namespace gpd
