#pragma once

#include "gpd/functor.hpp"
#include "gpd/partial_action.hpp"

namespace gpd {

struct FunctorClass {
    bool star_injective;
    bool star_surjective;
    bool covering() const { return star_injective && star_surjective; }
};

// MathError when f is not functorial.
FunctorClass classify_functor(const GroupoidFunctor& f);

// (g|x) |-> g, from the action groupoid to the acting groupoid.  Always
// star injective; a covering exactly when the action is global.
GroupoidFunctor projection_functor(const PartialActionTable& p);

// The partial action of f.target on the objects of f.source: g acts on x
// through the unique h with d(h) = x and f(h) = g.  Requires star
// injectivity (MathError).  The result is always strict.
PartialActionTable induced_partial_action(const GroupoidFunctor& f);

// x |-> (e_x|x), the verified equivariant bijection from a strict action
// onto induced_partial_action(projection_functor(p)).  MathError when p is
// not strict.
PointMap tau(const PartialActionTable& p);

// h |-> (f(h)|d(h)), the verified isomorphism from f.source onto the
// action groupoid of induced_partial_action(f), with projection after eta
// giving back f.  MathError when f is not star injective.
GroupoidFunctor eta(const GroupoidFunctor& f);

// A functor into finite sets: a fiber per object, a bijection per element.
struct SetFunctor {
    std::string name;
    GroupoidTable source;
    std::vector<std::string> points;          // union of all fibers
    std::map<int, std::vector<int>> fibers;   // object element -> point indices
    std::map<int, std::map<int, int>> morph;  // element -> fiber(d) -> fiber(r)

    bool operator==(const SetFunctor&) const = default;
};

// Tags: setf-shape, setf-bijective, setf-identity, setf-composition.
ValidationReport validate_set_functor(const SetFunctor& f);

// Fibers pairwise disjoint.
bool is_strongly_injective(const SetFunctor& f);

// Strict global actions correspond to strongly injective set functors;
// these two translate back and forth exactly.
SetFunctor action_to_setfunctor(const PartialActionTable& p);  // MathError if not strict+global
PartialActionTable setfunctor_to_action(const SetFunctor& f);

}  // namespace gpd
