#pragma once

#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

// Subsets are sorted index vectors into the parent table.

// Closed under inverse and under defined composition; false when empty.
bool is_subgroupoid(const GroupoidTable& t, const std::vector<int>& s);

// Contains every object of the parent.  MathError if s is not a subgroupoid.
bool is_wide(const GroupoidTable& t, const std::vector<int>& s);

// g^-1 s g = { g^-1 h g : h in s, r(h) = d(h) = r(g) }.
std::vector<int> conjugate_set(const GroupoidTable& t, const std::vector<int>& s, int g);

// Wide subgroupoid with conjugate_set(s, g) contained in s for every g.
bool is_normal(const GroupoidTable& t, const std::vector<int>& s);

// Per-object variant: g^-1 H_{r(g)} g = H_{d(g)} for every g.  Must agree
// with is_normal on wide subgroupoids.  MathError if s is not wide.
bool is_normal_bw(const GroupoidTable& t, const std::vector<int>& s);

// All chain products x_1...x_n over composable tuples, deduplicated.
// The empty family yields the object set.
std::vector<int> product_set(const GroupoidTable& t, const std::vector<std::vector<int>>& sets);

// All tuples whose chain product exists, i.e. d(x_i) = r(x_{i+1}) for all i.
std::vector<std::vector<int>> restricted_tuples(const GroupoidTable& t,
                                                const std::vector<std::vector<int>>& sets);

struct TupleCheck {
    bool closed_in_power;   // tuple set closed under componentwise inverse/comp
    bool chain_criterion;   // r(h_i) = d(h_{i+1}) on every tuple
    bool agree() const { return closed_in_power == chain_criterion; }
};

// Both routes computed independently; MathError if some input is not a
// subgroupoid.
TupleCheck tuples_subgroupoid_check(const GroupoidTable& t,
                                    const std::vector<std::vector<int>>& subs);

struct InternalDirectReport {
    bool generates;             // (1) parent = H_1 ... H_n
    bool all_normal;            // (2) every H_i normal
    bool trivial_intersection;  // (3) H_i meets the product of the others in the objects
    bool unique_factorization;  // (4) unique composable factorization of every element
    bool cross_commutation;     // (5) xy = yx across distinct factors when both loops match
    std::vector<Violation> failures;

    bool first_three() const { return generates && all_normal && trivial_intersection; }
    bool last_two() const { return unique_factorization && cross_commutation; }
    bool all_five() const { return first_three() && last_two(); }
    std::string summary() const;
};

// Evaluates all five conditions independently with witnesses for failures.
// MathError if some input is not a wide subgroupoid.
InternalDirectReport internal_direct_report(const GroupoidTable& t,
                                            const std::vector<std::vector<int>>& subs);

// g = h_1...h_n  |->  (h_1,...,h_n) into the n-fold direct power of the
// parent.  Requires internal_direct_report all-true (MathError citing the
// first failed condition).  The image is exactly restricted_tuples(subs).
GroupoidFunctor embed_direct(const GroupoidTable& t, const std::vector<std::vector<int>>& subs);

// Oracle support; MathError when the parent exceeds max_size elements.
std::vector<std::vector<int>> enumerate_subgroupoids(const GroupoidTable& t, int max_size = 12);
std::vector<std::vector<int>> enumerate_wide_subgroupoids(const GroupoidTable& t, int max_size = 12);

}  // namespace gpd
