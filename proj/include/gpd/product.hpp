#pragma once

#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/report.hpp"

namespace gpd {

// Componentwise composition, defined exactly when every component composes.
// Elements are named "(a|b|...)".
GroupoidTable direct_product(const std::vector<GroupoidTable>& factors, std::string name = "");

// A group acting on a groupoid by automorphisms: one permutation of the
// target's elements per group element.
struct AutAction {
    GroupoidTable group;   // single-object groupoid
    GroupoidTable target;
    std::vector<std::vector<int>> omega;  // omega[g][x], permutation per group element

    bool operator==(const AutAction&) const = default;
};

// Tags: aut-group (group not a one-object groupoid), aut-shape,
// aut-bijective, aut-functorial, aut-identity, aut-homomorphism.
ValidationReport validate_aut_action(const AutAction& a);

// Twisted product on t x group: (x,g)(z,h) = (x w_g(z), gh) defined iff
// d(x) = r(w_g(z)).  MathError when the action is invalid or targets a
// different table.
GroupoidTable semidirect_product(const GroupoidTable& t, const AutAction& a, std::string name = "");

struct TrichotomyReport {
    bool identity_is_homomorphism;    // id : t x group -> twisted product
    bool omega_trivial;               // every permutation is the identity
    bool object_part_normal;          // objects x group normal in the twisted product
    bool consistent() const {
        return identity_is_homomorphism == omega_trivial &&
               omega_trivial == object_part_normal;
    }
};

// All three conditions evaluated independently, never short-circuited.
TrichotomyReport semidirect_trichotomy(const GroupoidTable& t, const AutAction& a);

// Recognizes H G inside the parent as a twisted product, where h is a
// normal subgroupoid, sub a subgroup (contained in one isotropy group),
// h and sub meet only in the identity of sub, and conjugation by every
// element of sub is everywhere defined on h.  Returns the verified
// isomorphism hg |-> (h|g).  MathError when a precondition fails.
GroupoidFunctor recognize_internal_semidirect(const GroupoidTable& parent,
                                              const std::vector<int>& h,
                                              const std::vector<int>& sub);

// For a connected table: the verified isomorphism onto
// pair_groupoid(objects) x isotropy(e), using as transversal to each
// object the first linking element in declaration order.
GroupoidFunctor build_connected_iso(const GroupoidTable& t, int e);

}  // namespace gpd
