#include "gpd/globalization.hpp"

#include <algorithm>
#include <set>

#include "gpd/equivalence.hpp"
#include "gpd/error.hpp"

namespace gpd {

Globalization globalize(const PartialActionTable& p) {
    auto rep = validate_partial_action(p);
    if (!rep.passed()) throw MathError("globalize: invalid action:\n" + rep.summary());
    const auto& t = p.groupoid;

    std::vector<int> ex(p.points());
    for (int x = 0; x < p.points(); ++x) ex[x] = identity_object_of(p, x);  // strictness

    // pairs (g,x) with d(g) = e_x, in declaration order
    std::vector<std::pair<int, int>> pairs;
    for (int g = 0; g < t.size(); ++g)
        for (int x = 0; x < p.points(); ++x)
            if (t.d(g) == ex[x]) pairs.push_back({g, x});
    const int np = static_cast<int>(pairs.size());

    // (g,x) ~ (h,y) iff r(g) = r(h) and (h^-1 g).x = y
    auto related = [&](int i, int j) {
        auto [g, x] = pairs[i];
        auto [h, y] = pairs[j];
        if (t.r(g) != t.r(h)) return false;
        int w = t.cmp(t.inverse(h), g);
        if (w == -1) return false;
        return p.defined(w, x) && p.value(w, x) == y;
    };
    for (int i = 0; i < np; ++i) {
        if (!related(i, i)) throw MathError("globalize: relation is not reflexive (internal error)");
        for (int j = 0; j < np; ++j) {
            if (related(i, j) != related(j, i))
                throw MathError("globalize: relation is not symmetric (internal error)");
            if (!related(i, j)) continue;
            for (int k = 0; k < np; ++k)
                if (related(j, k) && !related(i, k))
                    throw MathError("globalize: relation is not transitive (internal error)");
        }
    }

    // classes, canonical representative = least pair in declaration order
    std::vector<int> cls(np, -1);
    std::vector<int> rep_of;
    for (int i = 0; i < np; ++i) {
        if (cls[i] != -1) continue;
        int c = static_cast<int>(rep_of.size());
        rep_of.push_back(i);
        for (int j = i; j < np; ++j)
            if (cls[j] == -1 && related(i, j)) cls[j] = c;
    }
    const int ny = static_cast<int>(rep_of.size());

    Globalization gl;
    gl.base = p;
    for (int c = 0; c < ny; ++c) {
        auto [g, x] = pairs[rep_of[c]];
        gl.carrier_y.push_back("[" + t.id(g) + "|" + p.point(x) + "]");
    }
    if (std::set<std::string>(gl.carrier_y.begin(), gl.carrier_y.end()).size() !=
        gl.carrier_y.size())
        throw FormatError("globalize: colliding class ids");
    for (int i = 0; i < np; ++i) {
        auto [g, x] = pairs[i];
        gl.classes[gl.carrier_y[cls[i]]].push_back({t.id(g), p.point(x)});
    }

    // beta: g'.[g,x] = [g'g, x] whenever g'g exists
    PartialActionTable beta;
    beta.name = p.name + "_glob";
    beta.groupoid = t;
    beta.carrier = gl.carrier_y;
    auto class_of_pair = [&](int g, int x) {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(g, x));
        if (it == pairs.end() || *it != std::make_pair(g, x))
            throw MathError("globalize: missing pair (internal error)");
        return cls[it - pairs.begin()];
    };
    for (int gp = 0; gp < t.size(); ++gp) {
        for (int c = 0; c < ny; ++c) {
            auto [g0, x0] = pairs[rep_of[c]];
            if (t.d(gp) != t.r(g0)) continue;
            int target = -1;
            // well-definedness: every representative must land in one class
            for (int i = 0; i < np; ++i) {
                if (cls[i] != c) continue;
                auto [g, x] = pairs[i];
                if (t.d(gp) != t.r(g))
                    throw MathError("globalize: composability depends on the representative (internal error)");
                int w = t.cmp(gp, g);
                int cw = class_of_pair(w, x);
                if (target == -1) target = cw;
                if (target != cw)
                    throw MathError("globalize: class action is ill-defined (internal error)");
            }
            beta.act[{gp, c}] = target;
        }
    }
    auto brep = validate_partial_action(beta);
    if (!brep.passed())
        throw MathError("globalize: result is not a partial action (internal error):\n" +
                        brep.summary());
    if (!is_global(beta)) throw MathError("globalize: result is not global (internal error)");
    gl.beta = beta;

    for (int x = 0; x < p.points(); ++x)
        gl.iota[p.point(x)] = gl.carrier_y[class_of_pair(ex[x], x)];
    std::set<std::string> image;
    for (const auto& [from, to] : gl.iota) image.insert(to);
    if (static_cast<int>(image.size()) != p.points())
        throw MathError("globalize: iota is not injective (internal error)");
    if (!is_action_morphism(gl.iota, p, beta))
        throw MathError("globalize: iota is not a morphism (internal error)");
    return gl;
}

GroupoidFunctor nu_embedding(const Globalization& gl) {
    GroupoidTable src = action_groupoid(gl.base);
    GroupoidTable dst = action_groupoid(gl.beta);
    const auto& t = gl.base.groupoid;

    GroupoidFunctor nu{"nu_" + gl.base.name, src, dst, {}};
    for (const auto& [key, y] : gl.base.act) {
        auto [g, x] = key;
        nu.map.push_back(dst.require(tuple_id({t.id(g), gl.iota.at(gl.base.point(x))})));
    }
    auto rep = validate_functor(nu);
    if (!rep.passed() || !is_injective_functor(nu))
        throw MathError("nu_embedding: verification failed:\n" + rep.summary());
    // projection after nu equals the base projection
    GroupoidFunctor pi = projection_functor(gl.beta);
    GroupoidFunctor gamma = projection_functor(gl.base);
    for (int i = 0; i < src.size(); ++i)
        if (pi.map[nu.map[i]] != gamma.map[i])
            throw MathError("nu_embedding: projections disagree (internal error)");
    return nu;
}

FullDenseReport check_full_dense(const Globalization& gl) {
    GroupoidFunctor nu = nu_embedding(gl);
    const GroupoidTable& c = nu.target;

    std::vector<char> in_image(c.size(), 0);
    for (int i = 0; i < nu.source.size(); ++i) in_image[nu.map[i]] = 1;

    FullDenseReport out{true, true, {}};
    for (int w = 0; w < c.size(); ++w) {
        if (in_image[w]) continue;
        if (in_image[c.d(w)] && in_image[c.r(w)]) {
            out.full = false;
            out.failures.push_back({"full", {c.id(w)},
                                    "arrow between image objects misses the image"});
        }
    }
    for (int o = 0; o < c.size(); ++o) {
        if (!c.is_object(o)) continue;
        bool linked = false;
        for (int w = 0; w < c.size() && !linked; ++w)
            linked = (c.d(w) == o && in_image[c.r(w)]);
        if (!linked) {
            out.dense = false;
            out.failures.push_back({"dense", {c.id(o)},
                                    "identity not isomorphic to an image identity"});
        }
    }
    return out;
}

PointMap verify_universal(const Globalization& gl, const PartialActionTable& q,
                          const PointMap& j) {
    if (!(q.groupoid == gl.base.groupoid))
        throw FormatError("verify_universal: q acts by a different groupoid");
    auto qrep = validate_partial_action(q);
    if (!qrep.passed())
        throw MathError("verify_universal: q is not a partial action:\n" + qrep.summary());
    if (!is_global(q)) throw MathError("verify_universal: q is not global");
    if (!is_action_morphism(j, gl.base, q))
        throw MathError("verify_universal: j is not a morphism into q");

    const auto& t = gl.base.groupoid;
    // forced values: k[g,x] = g.j(x); every representative must agree
    PointMap k;
    for (const auto& [cid, reps] : gl.classes) {
        int val = -1;
        for (const auto& [gid, xid] : reps) {
            int g = t.require(gid);
            int jx = q.require_point(j.at(xid));
            if (!q.defined(g, jx))
                throw MathError("verify_universal: no mediating morphism, g.j(x) undefined at (" +
                                gid + ", " + xid + ")");
            int v = q.value(g, jx);
            if (val == -1) val = v;
            if (val != v)
                throw MathError("verify_universal: mediating morphism ill-defined on class " + cid);
        }
        k[cid] = q.point(val);
    }
    if (!is_action_morphism(k, gl.beta, q))
        throw MathError("verify_universal: candidate is not a morphism");
    for (const auto& [x, y] : gl.iota)
        if (k.at(y) != j.at(x))
            throw MathError("verify_universal: candidate does not factor j through iota");
    return k;
}

}  // namespace gpd
