#include "gpd/functor.hpp"

#include <algorithm>

#include "gpd/error.hpp"

namespace gpd {

const std::string& GroupoidFunctor::apply_id(const std::string& id) const {
    return target.id(map[source.require(id)]);
}

ValidationReport validate_functor(const GroupoidFunctor& f) {
    ValidationReport rep;
    const auto& s = f.source;
    const auto& t = f.target;
    if (static_cast<int>(f.map.size()) != s.size()) {
        rep.add("func-total", {}, "element map is not total");
        return rep;
    }
    for (int g = 0; g < s.size(); ++g) {
        int fg = f.map[g];
        if (fg < 0 || fg >= t.size()) {
            rep.add("func-total", {s.id(g)}, "image out of range");
            return rep;
        }
        if (s.is_object(g) && !t.is_object(fg))
            rep.add("func-objects", {s.id(g)}, "objects must map to objects");
        if (f.map[s.d(g)] != t.d(fg))
            rep.add("func-domain", {s.id(g)}, "F(d(g)) != d(F(g))");
        if (f.map[s.r(g)] != t.r(fg))
            rep.add("func-range", {s.id(g)}, "F(r(g)) != r(F(g))");
        if (f.map[s.inverse(g)] != t.inverse(fg))
            rep.add("func-inverse", {s.id(g)}, "F(inv(g)) != inv(F(g))");
    }
    for (int g = 0; g < s.size(); ++g)
        for (int h = 0; h < s.size(); ++h) {
            if (!s.composable(g, h)) continue;
            int gh = s.cmp(g, h);
            if (gh == -1) continue;
            int fg = f.map[g], fh = f.map[h];
            if (!t.composable(fg, fh) || t.cmp(fg, fh) == -1) {
                rep.add("func-composition", {s.id(g), s.id(h)},
                        "images of a composable pair do not compose");
                continue;
            }
            if (t.cmp(fg, fh) != f.map[gh])
                rep.add("func-composition", {s.id(g), s.id(h)}, "F(gh) != F(g)F(h)");
        }
    return rep;
}

bool is_functor(const GroupoidFunctor& f) { return validate_functor(f).passed(); }

bool is_injective_functor(const GroupoidFunctor& f) {
    std::vector<int> sorted = f.map;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_bijective_functor(const GroupoidFunctor& f) {
    return f.source.size() == f.target.size() && is_injective_functor(f);
}

GroupoidFunctor identity_functor(const GroupoidTable& t) {
    GroupoidFunctor f{"id_" + t.name, t, t, {}};
    f.map.resize(t.size());
    for (int g = 0; g < t.size(); ++g) f.map[g] = g;
    return f;
}

GroupoidFunctor inverse_functor(const GroupoidFunctor& f) {
    if (!is_bijective_functor(f))
        throw MathError("inverse_functor: '" + f.name + "' is not bijective");
    GroupoidFunctor inv{f.name + "^-1", f.target, f.source, std::vector<int>(f.target.size(), -1)};
    for (int g = 0; g < f.source.size(); ++g) inv.map[f.map[g]] = g;
    return inv;
}

GroupoidFunctor compose_functors(const GroupoidFunctor& outer, const GroupoidFunctor& inner) {
    if (!(inner.target == outer.source))
        throw MathError("compose_functors: inner target differs from outer source");
    GroupoidFunctor f{outer.name + "*" + inner.name, inner.source, outer.target, {}};
    f.map.resize(inner.source.size());
    for (int g = 0; g < inner.source.size(); ++g) f.map[g] = outer.map[inner.map[g]];
    return f;
}

GroupoidFunctor inclusion_functor(const GroupoidTable& parent, const std::vector<int>& members,
                                  std::string name) {
    GroupoidTable sub = subtable(parent, members, name);
    GroupoidFunctor f{"incl_" + sub.name, sub, parent, {}};
    for (const auto& id : sub.elements) f.map.push_back(parent.require(id));
    return f;
}

GroupoidFunctor make_functor(std::string name, GroupoidTable source, GroupoidTable target,
                             const std::map<std::string, std::string>& m) {
    GroupoidFunctor f{std::move(name), std::move(source), std::move(target),
                      std::vector<int>(0)};
    f.map.assign(f.source.size(), -1);
    for (const auto& [from, to] : m) f.map[f.source.require(from)] = f.target.require(to);
    for (int g = 0; g < f.source.size(); ++g)
        if (f.map[g] < 0)
            throw FormatError("functor '" + f.name + "': no image for '" + f.source.id(g) + "'");
    return f;
}

}  // namespace gpd
