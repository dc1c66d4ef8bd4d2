#include "gpd/product.hpp"

#include <algorithm>

#include "gpd/error.hpp"
#include "gpd/subgroupoid.hpp"

namespace gpd {

GroupoidTable direct_product(const std::vector<GroupoidTable>& factors, std::string name) {
    if (factors.empty()) throw FormatError("direct_product: empty family");
    if (name.empty()) {
        name = "(";
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) name += "x";
            name += factors[i].name;
        }
        name += ")";
    }
    const int k = static_cast<int>(factors.size());
    std::vector<int> sizes(k), stride(k);
    long long total = 1;
    for (int i = 0; i < k; ++i) {
        sizes[i] = factors[i].size();
        total *= sizes[i];
        if (total > 1 << 20) throw MathError("direct_product: result too large");
    }
    const int n = static_cast<int>(total);
    stride[k - 1] = 1;
    for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * sizes[i + 1];

    auto decode = [&](int idx) {
        std::vector<int> parts(k);
        for (int i = 0; i < k; ++i) {
            parts[i] = idx / stride[i];
            idx %= stride[i];
        }
        return parts;
    };
    auto encode = [&](const std::vector<int>& parts) {
        int idx = 0;
        for (int i = 0; i < k; ++i) idx += parts[i] * stride[i];
        return idx;
    };

    GroupoidTable t;
    t.name = std::move(name);
    t.elements.reserve(n);
    for (int idx = 0; idx < n; ++idx) {
        auto parts = decode(idx);
        std::vector<std::string> ids;
        bool is_obj = true;
        for (int i = 0; i < k; ++i) {
            ids.push_back(factors[i].id(parts[i]));
            is_obj = is_obj && factors[i].is_object(parts[i]);
        }
        t.elements.push_back(tuple_id(ids));
        t.obj.push_back(is_obj ? 1 : 0);
        std::vector<int> dd(k), rr(k), ii(k);
        for (int i = 0; i < k; ++i) {
            dd[i] = factors[i].d(parts[i]);
            rr[i] = factors[i].r(parts[i]);
            ii[i] = factors[i].inverse(parts[i]);
        }
        t.dom.push_back(encode(dd));
        t.rng.push_back(encode(rr));
        t.inv.push_back(encode(ii));
    }
    t.comp.assign(static_cast<size_t>(n) * n, -1);
    for (int g = 0; g < n; ++g) {
        auto gp = decode(g);
        for (int h = 0; h < n; ++h) {
            if (t.dom[g] != t.rng[h]) continue;
            auto hp = decode(h);
            std::vector<int> wp(k);
            bool ok = true;
            for (int i = 0; i < k; ++i) {
                int w = factors[i].cmp(gp[i], hp[i]);
                if (w == -1) {
                    ok = false;
                    break;
                }
                wp[i] = w;
            }
            if (ok) t.set_cmp(g, h, encode(wp));
        }
    }
    ensure_unique_ids(t);
    return t;
}

ValidationReport validate_aut_action(const AutAction& a) {
    ValidationReport rep;
    const auto& gr = a.group;
    const auto& t = a.target;
    if (gr.object_list().size() != 1 ||
        static_cast<int>(iso_subgroupoid(gr).size()) != gr.size())
        rep.add("aut-group", {gr.name}, "acting table is not a one-object groupoid");
    if (static_cast<int>(a.omega.size()) != gr.size()) {
        rep.add("aut-shape", {}, "one permutation per group element required");
        return rep;
    }
    for (int g = 0; g < gr.size(); ++g) {
        const auto& p = a.omega[g];
        if (static_cast<int>(p.size()) != t.size()) {
            rep.add("aut-shape", {gr.id(g)}, "permutation has wrong length");
            return rep;
        }
        std::vector<char> hit(t.size(), 0);
        for (int x : p) {
            if (x < 0 || x >= t.size() || hit[x]) {
                rep.add("aut-bijective", {gr.id(g)}, "not a permutation of the target");
                return rep;
            }
            hit[x] = 1;
        }
        GroupoidFunctor f{"omega_" + gr.id(g), t, t, p};
        if (!is_functor(f))
            rep.add("aut-functorial", {gr.id(g)}, "permutation is not an automorphism");
    }
    if (rep.passed()) {
        int e = gr.object_list()[0];
        for (int x = 0; x < t.size(); ++x)
            if (a.omega[e][x] != x) {
                rep.add("aut-identity", {gr.id(e)}, "identity must act as the identity map");
                break;
            }
        for (int g = 0; g < gr.size(); ++g)
            for (int h = 0; h < gr.size(); ++h) {
                int gh = gr.cmp(g, h);
                if (gh == -1) continue;
                for (int x = 0; x < t.size(); ++x)
                    if (a.omega[gh][x] != a.omega[g][a.omega[h][x]]) {
                        rep.add("aut-homomorphism", {gr.id(g), gr.id(h)},
                                "omega(gh) != omega(g) after omega(h)");
                        break;
                    }
            }
    }
    return rep;
}

GroupoidTable semidirect_product(const GroupoidTable& t, const AutAction& a, std::string name) {
    if (!(a.target == t))
        throw MathError("semidirect_product: action targets a different table");
    auto rep = validate_aut_action(a);
    if (!rep.passed())
        throw MathError("semidirect_product: invalid action:\n" + rep.summary());
    const auto& gr = a.group;
    if (name.empty()) name = "(" + t.name + "x_w" + gr.name + ")";
    const int nt = t.size(), ng = gr.size();
    const int one = gr.object_list()[0];
    const int n = nt * ng;
    auto enc = [ng](int x, int g) { return x * ng + g; };

    GroupoidTable s;
    s.name = std::move(name);
    s.comp.assign(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < nt; ++x)
        for (int g = 0; g < ng; ++g) {
            s.elements.push_back(tuple_id({t.id(x), gr.id(g)}));
            s.obj.push_back(t.is_object(x) && g == one ? 1 : 0);
            int gi = gr.inverse(g);
            // d(x,g) = (w_{g^-1}(d(x)), 1),  r(x,g) = (r(x), 1)
            s.dom.push_back(enc(a.omega[gi][t.d(x)], one));
            s.rng.push_back(enc(t.r(x), one));
            // (x,g)^-1 = (w_{g^-1}(x^-1), g^-1)
            s.inv.push_back(enc(a.omega[gi][t.inverse(x)], gi));
        }
    // (x,g)(z,h) = (x w_g(z), gh) iff d(x) = r(w_g(z))
    for (int x = 0; x < nt; ++x)
        for (int g = 0; g < ng; ++g)
            for (int z = 0; z < nt; ++z)
                for (int h = 0; h < ng; ++h) {
                    int wz = a.omega[g][z];
                    if (t.d(x) != t.r(wz)) continue;
                    int xz = t.cmp(x, wz);
                    int gh = gr.cmp(g, h);
                    if (xz == -1 || gh == -1) continue;
                    s.set_cmp(enc(x, g), enc(z, h), enc(xz, gh));
                }
    ensure_unique_ids(s);
    return s;
}

TrichotomyReport semidirect_trichotomy(const GroupoidTable& t, const AutAction& a) {
    auto rep = validate_aut_action(a);
    if (!rep.passed() || !(a.target == t))
        throw MathError("semidirect_trichotomy: invalid action");
    const auto& gr = a.group;
    const int one = gr.object_list()[0];
    GroupoidTable direct = direct_product({t, gr});
    GroupoidTable twisted = semidirect_product(t, a);

    TrichotomyReport out{true, true, true};

    // (1) the identity set-map direct -> twisted is a homomorphism
    // (element ids coincide, so compare tables entrywise)
    for (int g = 0; g < direct.size() && out.identity_is_homomorphism; ++g)
        for (int h = 0; h < direct.size(); ++h) {
            int w = direct.cmp(g, h);
            if (w == -1) continue;
            if (twisted.cmp(g, h) != w) {
                out.identity_is_homomorphism = false;
                break;
            }
        }

    // (2) omega trivial
    for (int g = 0; g < gr.size() && out.omega_trivial; ++g)
        for (int x = 0; x < t.size(); ++x)
            if (a.omega[g][x] != x) {
                out.omega_trivial = false;
                break;
            }

    // (3) objects x group normal in the twisted product
    std::vector<int> part;
    for (int x = 0; x < t.size(); ++x)
        if (t.is_object(x))
            for (int g = 0; g < gr.size(); ++g)
                part.push_back(twisted.require(tuple_id({t.id(x), gr.id(g)})));
    std::sort(part.begin(), part.end());
    (void)one;
    out.object_part_normal = is_normal(twisted, part);
    return out;
}

GroupoidFunctor recognize_internal_semidirect(const GroupoidTable& parent,
                                              const std::vector<int>& h,
                                              const std::vector<int>& sub) {
    if (!is_normal(parent, h))
        throw MathError("recognize_internal_semidirect: first factor is not a normal subgroupoid");
    if (!is_subgroupoid(parent, sub))
        throw MathError("recognize_internal_semidirect: second factor is not a subgroupoid");
    // a subgroup lives inside a single isotropy group
    int e = -1;
    for (int g : sub) {
        if (parent.d(g) != parent.r(g))
            throw MathError("recognize_internal_semidirect: '" + parent.id(g) +
                            "' is not an isotropy element; second factor is not a subgroup");
        if (e == -1) e = parent.d(g);
        if (parent.d(g) != e)
            throw MathError("recognize_internal_semidirect: second factor spans several objects");
    }
    // intersection must be exactly the identity of the subgroup
    {
        std::vector<int> inter;
        std::set_intersection(h.begin(), h.end(), sub.begin(), sub.end(),
                              std::back_inserter(inter));
        if (inter != std::vector<int>{e})
            throw MathError("recognize_internal_semidirect: factors meet beyond the identity");
    }

    // conjugation by each subgroup element must be everywhere defined on h
    GroupoidTable htab = subtable(parent, h, parent.name + "_H");
    GroupoidTable stab = subtable(parent, sub, parent.name + "_K");
    AutAction act;
    act.group = stab;
    act.target = htab;
    act.omega.assign(stab.size(), std::vector<int>(htab.size(), -1));
    for (int gi = 0; gi < stab.size(); ++gi) {
        int g = parent.require(stab.id(gi));
        int ginv = parent.inverse(g);
        for (int ki = 0; ki < htab.size(); ++ki) {
            int k = parent.require(htab.id(ki));
            // w_g(k) = g k g^-1, needs d(k) = r(k) = d(g) = r(g) = e
            if (!(parent.r(k) == parent.d(g) && parent.d(k) == parent.r(ginv)))
                throw MathError("recognize_internal_semidirect: conjugation by '" + parent.id(g) +
                                "' is undefined on '" + parent.id(k) + "'");
            int gk = parent.cmp(g, k);
            int c = gk == -1 ? -1 : parent.cmp(gk, ginv);
            if (c == -1)
                throw MathError("recognize_internal_semidirect: conjugation by '" + parent.id(g) +
                                "' is undefined on '" + parent.id(k) + "'");
            int ci = htab.index_of(parent.id(c));
            if (ci < 0)
                throw MathError("recognize_internal_semidirect: conjugate of '" + parent.id(k) +
                                "' leaves the normal factor");
            act.omega[gi][ki] = ci;
        }
    }
    auto arep = validate_aut_action(act);
    if (!arep.passed())
        throw MathError("recognize_internal_semidirect: conjugation is not an action by automorphisms:\n" +
                        arep.summary());

    GroupoidTable twisted = semidirect_product(htab, act);

    // HG with unique factorizations hg
    auto hg_set = product_set(parent, {h, sub});
    std::vector<std::pair<int, int>> fact(parent.size(), {-1, -1});
    for (int x : h)
        for (int g : sub) {
            if (!parent.composable(x, g)) continue;
            int w = parent.cmp(x, g);
            if (w == -1) continue;
            if (fact[w].first != -1 && fact[w] != std::make_pair(x, g))
                throw MathError("recognize_internal_semidirect: factorization of '" + parent.id(w) +
                                "' is not unique");
            fact[w] = {x, g};
        }

    GroupoidTable hg_tab = subtable(parent, hg_set, parent.name + "_HK");
    GroupoidFunctor phi{"phi_" + parent.name, hg_tab, twisted, {}};
    for (const auto& id : hg_tab.elements) {
        int w = parent.require(id);
        auto [x, g] = fact[w];
        phi.map.push_back(twisted.require(tuple_id({parent.id(x), parent.id(g)})));
    }
    auto frep = validate_functor(phi);
    if (!frep.passed() || !is_bijective_functor(phi))
        throw MathError("recognize_internal_semidirect: map hg -> (h,g) failed verification:\n" +
                        frep.summary());
    return phi;
}

GroupoidFunctor build_connected_iso(const GroupoidTable& t, int e) {
    if (e < 0 || e >= t.size() || !t.is_object(e))
        throw MathError("build_connected_iso: base is not an object");
    if (!is_connected(t)) throw MathError("build_connected_iso: '" + t.name + "' is not connected");

    auto objs = t.object_list();
    std::vector<std::string> obj_ids;
    for (int o : objs) obj_ids.push_back(t.id(o));
    GroupoidTable pairs = pair_groupoid(obj_ids, "pair_" + t.name);
    GroupoidTable iso = subtable(t, isotropy_group(t, e), t.name + "_iso_" + t.id(e));
    GroupoidTable target = direct_product({pairs, iso});

    // transversal tau_x : e -> x, first linking element in declaration order
    std::vector<int> tau(t.size(), -1);
    for (int o : objs)
        for (int g = 0; g < t.size(); ++g)
            if (t.d(g) == e && t.r(g) == o) {
                tau[o] = g;
                break;
            }

    GroupoidFunctor f{"split_" + t.name, t, target, {}};
    for (int g = 0; g < t.size(); ++g) {
        int de = t.d(g), re = t.r(g);
        // tau_{r(g)}^-1 g tau_{d(g)} lands in the isotropy group at e
        int w = t.cmp(t.cmp(t.inverse(tau[re]), g), tau[de]);
        std::string pair_part = tuple_id({t.id(de), t.id(re)});
        f.map.push_back(target.require(tuple_id({pair_part, t.id(w)})));
    }
    auto rep = validate_functor(f);
    if (!rep.passed() || !is_bijective_functor(f))
        throw MathError("build_connected_iso: verification failed (internal error):\n" +
                        rep.summary());
    return f;
}

}  // namespace gpd
