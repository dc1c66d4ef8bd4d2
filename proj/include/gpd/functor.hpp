#pragma once

#include <map>
#include <string>

#include "gpd/groupoid.hpp"
#include "gpd/report.hpp"

namespace gpd {

// A total element map between two tables.  Functoriality is a property,
// checked by validate_functor, not an invariant of the struct.
struct GroupoidFunctor {
    std::string name;
    GroupoidTable source, target;
    std::vector<int> map;  // source index -> target index

    int apply(int g) const { return map[g]; }
    const std::string& apply_id(const std::string& id) const;

    bool operator==(const GroupoidFunctor&) const = default;
};

// Tags: func-objects, func-domain, func-range, func-inverse, func-composition.
ValidationReport validate_functor(const GroupoidFunctor& f);
bool is_functor(const GroupoidFunctor& f);
bool is_injective_functor(const GroupoidFunctor& f);
bool is_bijective_functor(const GroupoidFunctor& f);

GroupoidFunctor identity_functor(const GroupoidTable& t);
GroupoidFunctor inverse_functor(const GroupoidFunctor& f);  // MathError if not bijective

// outer(inner(x)); inner.target must equal outer.source.
GroupoidFunctor compose_functors(const GroupoidFunctor& outer, const GroupoidFunctor& inner);

// Inclusion of a closed subset, as a functor subtable -> parent.
GroupoidFunctor inclusion_functor(const GroupoidTable& parent, const std::vector<int>& members,
                                  std::string name);

// From string-level data; FormatError on unknown ids or a non-total map.
GroupoidFunctor make_functor(std::string name, GroupoidTable source, GroupoidTable target,
                             const std::map<std::string, std::string>& m);

}  // namespace gpd
