#include "gpd/partial_action.hpp"

#include <algorithm>
#include <set>

#include "gpd/error.hpp"

namespace gpd {

int PartialActionTable::point_index(const std::string& id) const {
    for (int i = 0; i < points(); ++i)
        if (carrier[i] == id) return i;
    return -1;
}

int PartialActionTable::require_point(const std::string& id) const {
    int i = point_index(id);
    if (i < 0) throw FormatError("unknown point id '" + id + "' in action '" + name + "'");
    return i;
}

int PartialActionTable::value(int g, int x) const {
    auto it = act.find({g, x});
    return it == act.end() ? -1 : it->second;
}

PartialActionTable make_partial_action(
    std::string name, GroupoidTable g, std::vector<std::string> carrier,
    const std::vector<std::tuple<std::string, std::string, std::string>>& entries) {
    PartialActionTable p;
    p.name = std::move(name);
    p.groupoid = std::move(g);
    p.carrier = std::move(carrier);
    std::set<std::string> seen;
    for (const auto& pt : p.carrier)
        if (!seen.insert(pt).second)
            throw FormatError("duplicate point id '" + pt + "' in action '" + p.name + "'");
    for (const auto& [gs, xs, ys] : entries) {
        int gi = p.groupoid.require(gs);
        int xi = p.require_point(xs);
        int yi = p.require_point(ys);
        if (p.act.count({gi, xi}))
            throw FormatError("duplicate action entry (" + gs + ", " + xs + ")");
        p.act[{gi, xi}] = yi;
    }
    return p;
}

ValidationReport validate_partial_action(const PartialActionTable& p) {
    ValidationReport rep;
    const auto& t = p.groupoid;

    for (int x = 0; x < p.points(); ++x) {
        bool has_identity = false;
        for (int e : t.object_list())
            if (p.defined(e, x)) has_identity = true;
        if (!has_identity)
            rep.add("PGrA1", {p.point(x)}, "no identity acts on the point");
    }
    for (const auto& [key, y] : p.act) {
        auto [g, x] = key;
        if (t.is_object(g) && y != x)
            rep.add("PGrA1", {t.id(g), p.point(x)}, "identity must act trivially");
    }
    for (const auto& [key, y] : p.act) {
        auto [g, x] = key;
        int gi = t.inverse(g);
        if (!p.defined(gi, y) || p.value(gi, y) != x)
            rep.add("PGrA2", {t.id(g), p.point(x)},
                    "inverse must act back: inv(g).(g.x) = x");
    }
    // PGrA3: gh exists, h.x and g.(h.x) exist  =>  (gh).x = g.(h.x)
    for (const auto& [key, hx] : p.act) {
        auto [h, x] = key;
        for (int g = 0; g < t.size(); ++g) {
            if (!t.composable(g, h)) continue;
            int gh = t.cmp(g, h);
            if (gh == -1) continue;
            if (!p.defined(g, hx)) continue;
            int ghx = p.value(g, hx);
            if (!p.defined(gh, x) || p.value(gh, x) != ghx)
                rep.add("PGrA3", {t.id(g), t.id(h), p.point(x)},
                        "g.(h.x) exists but (gh).x is missing or differs");
        }
    }
    // (g,x) in D forces (r(g), g.x) in D and (d(g), x) in D
    for (const auto& [key, y] : p.act) {
        auto [g, x] = key;
        if (!p.defined(t.r(g), y) || p.value(t.r(g), y) != y)
            rep.add("range-compat", {t.id(g), p.point(x)},
                    "(g,x) defined but r(g) does not act on g.x");
        if (!p.defined(t.d(g), x) || p.value(t.d(g), x) != x)
            rep.add("range-compat", {t.id(g), p.point(x)},
                    "(g,x) defined but d(g) does not act on x");
    }
    return rep;
}

bool is_valid_action(const PartialActionTable& p) { return validate_partial_action(p).passed(); }

bool is_strict(const PartialActionTable& p) {
    const auto& t = p.groupoid;
    for (int x = 0; x < p.points(); ++x) {
        int hits = 0;
        for (int e : t.object_list())
            if (p.defined(e, x)) ++hits;
        if (hits > 1) return false;
    }
    return true;
}

bool is_global(const PartialActionTable& p) {
    const auto& t = p.groupoid;
    for (int g = 0; g < t.size(); ++g)
        for (int x = 0; x < p.points(); ++x)
            if (p.defined(t.d(g), x) && !p.defined(g, x)) return false;
    return true;
}

std::vector<int> domain_set(const PartialActionTable& p, int g) {
    if (g < 0 || g >= p.groupoid.size()) throw FormatError("domain_set: element out of range");
    std::vector<int> out;
    int gi = p.groupoid.inverse(g);
    for (int x = 0; x < p.points(); ++x)
        if (p.defined(gi, x)) out.push_back(x);
    return out;
}

int identity_object_of(const PartialActionTable& p, int x) {
    int found = -1;
    for (int e : p.groupoid.object_list()) {
        if (!p.defined(e, x)) continue;
        if (found != -1)
            throw MathError("action '" + p.name + "' is not strict: point '" + p.point(x) +
                            "' has identities '" + p.groupoid.id(found) + "' and '" +
                            p.groupoid.id(e) + "'");
        found = e;
    }
    if (found == -1)
        throw MathError("action '" + p.name + "': no identity acts on '" + p.point(x) + "'");
    return found;
}

GroupoidTable action_groupoid(const PartialActionTable& p) {
    auto rep = validate_partial_action(p);
    if (!rep.passed())
        throw MathError("action_groupoid: invalid action '" + p.name + "':\n" + rep.summary());
    const auto& t = p.groupoid;

    std::vector<std::pair<int, int>> elems;  // (g, x) pairs of D, map order
    for (const auto& [key, y] : p.act) elems.push_back(key);
    auto at = [&](int g, int x) {
        auto it = std::lower_bound(elems.begin(), elems.end(), std::make_pair(g, x));
        return static_cast<int>(it - elems.begin());
    };

    GroupoidTable a;
    a.name = "(" + t.name + "," + p.name + ")";
    const int n = static_cast<int>(elems.size());
    a.comp.assign(static_cast<size_t>(n) * n, -1);
    for (const auto& [g, x] : elems) {
        a.elements.push_back(tuple_id({t.id(g), p.point(x)}));
        a.obj.push_back(t.is_object(g) ? 1 : 0);
        int gx = p.value(g, x);
        a.dom.push_back(at(t.d(g), x));
        a.rng.push_back(at(t.r(g), gx));
        a.inv.push_back(at(t.inverse(g), gx));
    }
    // (g,x)(h,y) = (gh,y) iff d(g) = r(h) and x = h.y
    for (int i = 0; i < n; ++i) {
        auto [g, x] = elems[i];
        for (int j = 0; j < n; ++j) {
            auto [h, y] = elems[j];
            if (t.d(g) != t.r(h)) continue;
            if (p.value(h, y) != x) continue;
            int gh = t.cmp(g, h);
            if (gh == -1) continue;
            a.set_cmp(i, j, at(gh, y));
        }
    }
    ensure_unique_ids(a);
    return a;
}

GroupoidTable graph_groupoid(const PartialActionTable& p) {
    auto rep = validate_partial_action(p);
    if (!rep.passed())
        throw MathError("graph_groupoid: invalid action '" + p.name + "':\n" + rep.summary());
    const auto& t = p.groupoid;

    std::vector<std::tuple<int, int, int>> elems;  // (g, x, g.x)
    for (const auto& [key, y] : p.act) elems.push_back({key.first, key.second, y});
    auto at = [&](int g, int x, int y) {
        auto it = std::lower_bound(elems.begin(), elems.end(), std::make_tuple(g, x, y));
        return static_cast<int>(it - elems.begin());
    };

    GroupoidTable a;
    a.name = "Gr(" + p.name + ")";
    const int n = static_cast<int>(elems.size());
    a.comp.assign(static_cast<size_t>(n) * n, -1);
    for (const auto& [g, x, y] : elems) {
        a.elements.push_back(tuple_id({t.id(g), p.point(x), p.point(y)}));
        a.obj.push_back(t.is_object(g) ? 1 : 0);
        a.dom.push_back(at(t.d(g), x, x));
        a.rng.push_back(at(t.r(g), y, y));
        a.inv.push_back(at(t.inverse(g), y, x));
    }
    // triple composition: (g,x,y) after (h,v,x) is (gh,v,y) when gh exists
    for (int i = 0; i < n; ++i) {
        auto [g, x, y] = elems[i];
        for (int j = 0; j < n; ++j) {
            auto [h, v, w] = elems[j];
            if (w != x || t.d(g) != t.r(h)) continue;
            int gh = t.cmp(g, h);
            if (gh == -1) continue;
            a.set_cmp(i, j, at(gh, v, y));
        }
    }
    ensure_unique_ids(a);
    return a;
}

GroupoidFunctor graph_iso(const PartialActionTable& p) {
    GroupoidTable src = action_groupoid(p);
    GroupoidTable dst = graph_groupoid(p);
    const auto& t = p.groupoid;
    GroupoidFunctor f{"graph_iso_" + p.name, src, dst, {}};
    for (const auto& [key, y] : p.act) {
        auto [g, x] = key;
        f.map.push_back(dst.require(tuple_id({t.id(g), p.point(x), p.point(y)})));
    }
    auto rep = validate_functor(f);
    if (!rep.passed() || !is_bijective_functor(f))
        throw MathError("graph_iso: verification failed (internal error):\n" + rep.summary());
    return f;
}

bool is_action_morphism(const PointMap& f, const PartialActionTable& p,
                        const PartialActionTable& q) {
    if (!(p.groupoid == q.groupoid))
        throw FormatError("is_action_morphism: actions live over different groupoids");
    std::vector<int> img(p.points(), -1);
    for (int x = 0; x < p.points(); ++x) {
        auto it = f.find(p.point(x));
        if (it == f.end())
            throw FormatError("is_action_morphism: map undefined on '" + p.point(x) + "'");
        img[x] = q.require_point(it->second);
    }
    for (const auto& [key, y] : p.act) {
        auto [g, x] = key;
        if (!q.defined(g, img[x])) return false;
        if (q.value(g, img[x]) != img[y]) return false;
    }
    return true;
}

PartialActionTable restrict_action(const PartialActionTable& p, const std::vector<int>& pts,
                                   std::string name) {
    std::vector<char> keep(p.points(), 0);
    for (int x : pts) {
        if (x < 0 || x >= p.points()) throw FormatError("restrict_action: point out of range");
        keep[x] = 1;
    }
    PartialActionTable out;
    out.name = std::move(name);
    out.groupoid = p.groupoid;
    std::vector<int> remap(p.points(), -1);
    for (int x = 0; x < p.points(); ++x)
        if (keep[x]) {
            remap[x] = static_cast<int>(out.carrier.size());
            out.carrier.push_back(p.point(x));
        }
    for (const auto& [key, y] : p.act) {
        auto [g, x] = key;
        if (keep[x] && keep[y]) out.act[{g, remap[x]}] = remap[y];
    }
    return out;
}

}  // namespace gpd
