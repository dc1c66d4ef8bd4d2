#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gpd/report.hpp"

namespace gpd {

// A finite groupoid as an explicit composition table.  Element ids are
// opaque strings; all computation runs on dense indices in declaration
// order.  comp is a flat n*n matrix with -1 meaning "undefined".
//
// Convention: cmp(g, h) is "g after h", defined exactly when d(g) = r(h).
struct GroupoidTable {
    std::string name;
    std::vector<std::string> elements;  // declaration order
    std::vector<char> obj;              // obj[g] != 0 iff g is an object
    std::vector<int> dom, rng, inv;
    std::vector<int> comp;              // comp[g * n + h], -1 undefined

    int size() const { return static_cast<int>(elements.size()); }
    bool is_object(int g) const { return obj[g] != 0; }
    int d(int g) const { return dom[g]; }
    int r(int g) const { return rng[g]; }
    int inverse(int g) const { return inv[g]; }
    int cmp(int g, int h) const { return comp[g * size() + h]; }
    void set_cmp(int g, int h, int v) { comp[g * size() + h] = v; }
    bool composable(int g, int h) const { return dom[g] == rng[h]; }

    const std::string& id(int g) const { return elements[g]; }
    int index_of(const std::string& id) const;  // -1 if unknown
    int require(const std::string& id) const;   // FormatError if unknown

    std::vector<int> object_list() const;
    std::vector<int> star(int e) const;    // {g : d(g) = e}
    std::vector<int> costar(int e) const;  // {g : r(g) = e}

    bool operator==(const GroupoidTable&) const = default;
};

// Joins component ids into a tuple id: ("a","b") -> "(a|b)".
std::string tuple_id(const std::vector<std::string>& parts);

// FormatError when two elements carry the same id (possible when raw ids
// contain the tuple separator).
void ensure_unique_ids(const GroupoidTable& t);

struct ArrowDecl {
    std::string id, dom, rng;
};

// Builds a table from string-level declarations, mirroring the GPD file
// format.  Identity products and object self-maps are filled in; inverse
// pairs may be stated in either direction.  Throws FormatError on unknown
// ids, duplicates, non-object endpoints, non-composable comp entries and
// arrows without an inverse.
GroupoidTable make_table(std::string name,
                         const std::vector<std::string>& objects,
                         const std::vector<ArrowDecl>& arrows,
                         const std::vector<std::pair<std::string, std::string>>& inverses,
                         const std::vector<std::tuple<std::string, std::string, std::string>>& comps);

// Scans every groupoid axiom and reports each violation with witnesses.
// Tags: objects-nonempty, object-maps, dr-into-objects, inverse-involutive,
// inverse-dr, comp-extraneous, comp-missing, identity-neutrality,
// product-domain-range, inverse-identities, inverse-antihom, associativity.
ValidationReport validate_groupoid(const GroupoidTable& t);
bool is_groupoid(const GroupoidTable& t);

// G_e = {g : d(g) = r(g) = e}.  MathError if e is not an object.
std::vector<int> isotropy_group(const GroupoidTable& t, int e);

// Union of all isotropy groups; always a wide subgroupoid.
std::vector<int> iso_subgroupoid(const GroupoidTable& t);

// True iff every ordered pair of objects is linked by some element.
bool is_connected(const GroupoidTable& t);

// The coarse groupoid on objs: one arrow (x|y) per ordered pair, going
// x -> y, with comp((y|z),(x|y)) = (x|z).
GroupoidTable pair_groupoid(const std::vector<std::string>& objs, std::string name = "pair");

// Restriction of t to a closed subset of elements (MathError otherwise).
// Objects of the result are the objects of t that belong to the subset.
GroupoidTable subtable(const GroupoidTable& t, const std::vector<int>& members, std::string name);

// Block-diagonal union; element ids must not collide.
GroupoidTable disjoint_union(const GroupoidTable& a, const GroupoidTable& b, std::string name);

// Left fold of cmp over the chain; nullopt when some step is undefined.
std::optional<int> chain_product(const GroupoidTable& t, const std::vector<int>& chain);

// Resolves ids to a sorted, duplicate-free index set.  FormatError on
// unknown ids.
std::vector<int> element_set(const GroupoidTable& t, const std::vector<std::string>& ids);
std::vector<std::string> id_set(const GroupoidTable& t, const std::vector<int>& s);

}  // namespace gpd
