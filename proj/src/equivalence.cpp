#include "gpd/equivalence.hpp"

#include <algorithm>
#include <set>

#include "gpd/error.hpp"

namespace gpd {

FunctorClass classify_functor(const GroupoidFunctor& f) {
    auto rep = validate_functor(f);
    if (!rep.passed())
        throw MathError("classify_functor: '" + f.name + "' is not a functor:\n" + rep.summary());
    const auto& s = f.source;
    const auto& t = f.target;

    bool inj = true;
    for (int g = 0; g < s.size() && inj; ++g)
        for (int h = g + 1; h < s.size(); ++h)
            if (s.d(g) == s.d(h) && f.map[g] == f.map[h]) {
                inj = false;
                break;
            }

    bool surj = true;
    for (int e : s.object_list()) {
        for (int gp = 0; gp < t.size() && surj; ++gp) {
            if (t.d(gp) != f.map[e]) continue;
            bool hit = false;
            for (int g = 0; g < s.size(); ++g)
                if (s.d(g) == e && f.map[g] == gp) {
                    hit = true;
                    break;
                }
            if (!hit) surj = false;
        }
        if (!surj) break;
    }
    return {inj, surj};
}

GroupoidFunctor projection_functor(const PartialActionTable& p) {
    GroupoidTable src = action_groupoid(p);
    GroupoidFunctor f{"proj_" + p.name, src, p.groupoid, {}};
    for (const auto& [key, y] : p.act) f.map.push_back(key.first);
    return f;
}

PartialActionTable induced_partial_action(const GroupoidFunctor& f) {
    auto cls = classify_functor(f);
    if (!cls.star_injective)
        throw MathError("induced_partial_action: '" + f.name + "' is not star injective");
    const auto& h = f.source;
    const auto& g = f.target;

    PartialActionTable p;
    p.name = "act_" + f.name;
    p.groupoid = g;
    std::vector<int> pt_of(h.size(), -1);
    for (int e : h.object_list()) {
        pt_of[e] = static_cast<int>(p.carrier.size());
        p.carrier.push_back(h.id(e));
    }
    // g acts on x through the unique arrow from x mapping to g
    for (int a = 0; a < h.size(); ++a) p.act[{f.map[a], pt_of[h.d(a)]}] = pt_of[h.r(a)];
    return p;
}

PointMap tau(const PartialActionTable& p) {
    auto rep = validate_partial_action(p);
    if (!rep.passed()) throw MathError("tau: invalid action:\n" + rep.summary());
    const auto& t = p.groupoid;

    PointMap m;
    for (int x = 0; x < p.points(); ++x) {
        int e = identity_object_of(p, x);  // throws when not strict
        m[p.point(x)] = tuple_id({t.id(e), p.point(x)});
    }
    // verify: equivariant bijection onto the induced action of the projection
    PartialActionTable q = induced_partial_action(projection_functor(p));
    std::set<std::string> image;
    for (const auto& [from, to] : m) image.insert(to);
    if (static_cast<int>(image.size()) != p.points() || q.points() != p.points())
        throw MathError("tau: not a bijection (internal error)");
    if (!is_action_morphism(m, p, q))
        throw MathError("tau: not equivariant (internal error)");
    PointMap back;
    for (const auto& [from, to] : m) back[to] = from;
    if (!is_action_morphism(back, q, p))
        throw MathError("tau: inverse not equivariant (internal error)");
    return m;
}

GroupoidFunctor eta(const GroupoidFunctor& f) {
    PartialActionTable q = induced_partial_action(f);  // checks star injectivity
    GroupoidTable ag = action_groupoid(q);
    const auto& h = f.source;
    const auto& g = f.target;

    GroupoidFunctor n{"eta_" + f.name, h, ag, {}};
    for (int a = 0; a < h.size(); ++a)
        n.map.push_back(ag.require(tuple_id({g.id(f.map[a]), h.id(h.d(a))})));

    auto rep = validate_functor(n);
    if (!rep.passed() || !is_bijective_functor(n))
        throw MathError("eta: verification failed:\n" + rep.summary());
    // projection after eta must give back f
    GroupoidFunctor proj = projection_functor(q);
    for (int a = 0; a < h.size(); ++a)
        if (proj.map[n.map[a]] != f.map[a])
            throw MathError("eta: projection composed with eta differs from the functor");
    return n;
}

ValidationReport validate_set_functor(const SetFunctor& f) {
    ValidationReport rep;
    const auto& t = f.source;
    const int np = static_cast<int>(f.points.size());

    for (int e : t.object_list())
        if (!f.fibers.count(e)) {
            rep.add("setf-shape", {t.id(e)}, "object without a fiber");
            return rep;
        }
    for (const auto& [e, fib] : f.fibers) {
        if (e < 0 || e >= t.size() || !t.is_object(e)) {
            rep.add("setf-shape", {}, "fiber key is not an object");
            return rep;
        }
        for (int x : fib)
            if (x < 0 || x >= np) {
                rep.add("setf-shape", {t.id(e)}, "fiber point out of range");
                return rep;
            }
    }
    for (int g = 0; g < t.size(); ++g) {
        auto it = f.morph.find(g);
        if (it == f.morph.end()) {
            rep.add("setf-shape", {t.id(g)}, "element without a map");
            return rep;
        }
        const auto& dm = f.fibers.at(t.d(g));
        const auto& rm = f.fibers.at(t.r(g));
        if (it->second.size() != dm.size()) {
            rep.add("setf-bijective", {t.id(g)}, "map not total on its fiber");
            continue;
        }
        std::set<int> img;
        for (int x : dm) {
            auto v = it->second.find(x);
            if (v == it->second.end()) {
                rep.add("setf-bijective", {t.id(g)}, "map not total on its fiber");
                break;
            }
            if (!std::count(rm.begin(), rm.end(), v->second)) {
                rep.add("setf-bijective", {t.id(g)}, "image leaves the target fiber");
                break;
            }
            img.insert(v->second);
        }
        if (img.size() != rm.size())
            rep.add("setf-bijective", {t.id(g)}, "map is not onto its target fiber");
    }
    if (!rep.passed()) return rep;

    for (int e : t.object_list())
        for (int x : f.fibers.at(e))
            if (f.morph.at(e).at(x) != x) {
                rep.add("setf-identity", {t.id(e)}, "identity must map to the identity bijection");
                break;
            }
    for (int g = 0; g < t.size(); ++g)
        for (int h = 0; h < t.size(); ++h) {
            if (!t.composable(g, h)) continue;
            int gh = t.cmp(g, h);
            if (gh == -1) continue;
            for (int x : f.fibers.at(t.d(h)))
                if (f.morph.at(gh).at(x) != f.morph.at(g).at(f.morph.at(h).at(x))) {
                    rep.add("setf-composition", {t.id(g), t.id(h)},
                            "map of gh differs from map of g after map of h");
                    break;
                }
        }
    return rep;
}

bool is_strongly_injective(const SetFunctor& f) {
    std::set<int> seen;
    for (const auto& [e, fib] : f.fibers)
        for (int x : fib)
            if (!seen.insert(x).second) return false;
    return true;
}

SetFunctor action_to_setfunctor(const PartialActionTable& p) {
    auto rep = validate_partial_action(p);
    if (!rep.passed()) throw MathError("action_to_setfunctor: invalid action:\n" + rep.summary());
    if (!is_strict(p)) throw MathError("action_to_setfunctor: action is not strict");
    if (!is_global(p)) throw MathError("action_to_setfunctor: action is not global");
    const auto& t = p.groupoid;

    SetFunctor f;
    f.name = p.name;
    f.source = t;
    f.points = p.carrier;
    for (int e : t.object_list()) {
        std::vector<int> fib;
        for (int x = 0; x < p.points(); ++x)
            if (p.defined(e, x)) fib.push_back(x);
        f.fibers[e] = fib;
    }
    for (int g = 0; g < t.size(); ++g) {
        std::map<int, int> m;
        for (int x : f.fibers.at(t.d(g))) m[x] = p.value(g, x);  // defined by globality
        f.morph[g] = m;
    }
    auto srep = validate_set_functor(f);
    if (!srep.passed() || !is_strongly_injective(f))
        throw MathError("action_to_setfunctor: result failed verification:\n" + srep.summary());
    return f;
}

PartialActionTable setfunctor_to_action(const SetFunctor& f) {
    auto rep = validate_set_functor(f);
    if (!rep.passed())
        throw MathError("setfunctor_to_action: invalid set functor:\n" + rep.summary());
    PartialActionTable p;
    p.name = f.name;
    p.groupoid = f.source;
    p.carrier = f.points;
    for (int g = 0; g < f.source.size(); ++g)
        for (int x : f.fibers.at(f.source.d(g))) p.act[{g, x}] = f.morph.at(g).at(x);
    return p;
}

}  // namespace gpd
