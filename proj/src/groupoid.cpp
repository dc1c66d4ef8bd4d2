#include "gpd/groupoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gpd/error.hpp"

namespace gpd {

int GroupoidTable::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (elements[i] == id) return i;
    return -1;
}

int GroupoidTable::require(const std::string& id) const {
    int i = index_of(id);
    if (i < 0) throw FormatError("unknown element id '" + id + "' in groupoid '" + name + "'");
    return i;
}

std::vector<int> GroupoidTable::object_list() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (is_object(i)) out.push_back(i);
    return out;
}

std::vector<int> GroupoidTable::star(int e) const {
    std::vector<int> out;
    for (int g = 0; g < size(); ++g)
        if (dom[g] == e) out.push_back(g);
    return out;
}

std::vector<int> GroupoidTable::costar(int e) const {
    std::vector<int> out;
    for (int g = 0; g < size(); ++g)
        if (rng[g] == e) out.push_back(g);
    return out;
}

void ensure_unique_ids(const GroupoidTable& t) {
    std::set<std::string> seen;
    for (const auto& id : t.elements)
        if (!seen.insert(id).second)
            throw FormatError("constructed table '" + t.name + "' has colliding element id '" +
                              id + "'");
}

std::string tuple_id(const std::vector<std::string>& parts) {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "|";
        out += parts[i];
    }
    out += ")";
    return out;
}

GroupoidTable make_table(
    std::string name, const std::vector<std::string>& objects,
    const std::vector<ArrowDecl>& arrows,
    const std::vector<std::pair<std::string, std::string>>& inverses,
    const std::vector<std::tuple<std::string, std::string, std::string>>& comps) {
    GroupoidTable t;
    t.name = std::move(name);

    if (objects.empty()) throw FormatError("groupoid '" + t.name + "' declares no objects");
    std::set<std::string> seen;
    for (const auto& o : objects) {
        if (!seen.insert(o).second) throw FormatError("duplicate element id '" + o + "'");
        t.elements.push_back(o);
        t.obj.push_back(1);
    }
    for (const auto& a : arrows) {
        if (!seen.insert(a.id).second) throw FormatError("duplicate element id '" + a.id + "'");
        t.elements.push_back(a.id);
        t.obj.push_back(0);
    }

    const int n = t.size();
    t.dom.assign(n, -1);
    t.rng.assign(n, -1);
    t.inv.assign(n, -1);
    for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
        t.dom[i] = t.rng[i] = t.inv[i] = i;
    }
    for (const auto& a : arrows) {
        int g = t.require(a.id);
        int de = t.require(a.dom);
        int re = t.require(a.rng);
        if (!t.is_object(de)) throw FormatError("arrow '" + a.id + "': '" + a.dom + "' is not an object");
        if (!t.is_object(re)) throw FormatError("arrow '" + a.id + "': '" + a.rng + "' is not an object");
        t.dom[g] = de;
        t.rng[g] = re;
    }

    for (const auto& [x, y] : inverses) {
        int g = t.require(x), h = t.require(y);
        if ((t.inv[g] != -1 && t.inv[g] != h) || (t.inv[h] != -1 && t.inv[h] != g))
            throw FormatError("conflicting inverse declaration for '" + x + "'");
        t.inv[g] = h;
        t.inv[h] = g;
    }
    for (int g = 0; g < n; ++g)
        if (t.inv[g] == -1)
            throw FormatError("no inverse declared for '" + t.id(g) + "'");

    t.comp.assign(static_cast<size_t>(n) * n, -1);
    // identity products are implied
    for (int g = 0; g < n; ++g) {
        t.set_cmp(t.rng[g], g, g);
        t.set_cmp(g, t.dom[g], g);
    }
    std::set<std::pair<int, int>> declared;
    for (const auto& [gs, hs, ks] : comps) {
        int g = t.require(gs), h = t.require(hs), k = t.require(ks);
        if (!t.composable(g, h))
            throw FormatError("comp " + gs + " " + hs + ": not composable (d(" + gs + ") != r(" +
                              hs + "))");
        if (!declared.insert({g, h}).second)
            throw FormatError("duplicate comp declaration for (" + gs + ", " + hs + ")");
        int cur = t.cmp(g, h);
        if (cur != -1 && cur != k)
            throw FormatError("comp " + gs + " " + hs + " = " + ks +
                              " conflicts with the identity product '" + t.id(cur) + "'");
        t.set_cmp(g, h, k);
    }
    return t;
}

ValidationReport validate_groupoid(const GroupoidTable& t) {
    ValidationReport rep;
    const int n = t.size();
    if (n == 0 || t.object_list().empty()) {
        rep.add("objects-nonempty", {}, "a groupoid needs at least one object");
        return rep;
    }

    for (int g = 0; g < n; ++g) {
        if (t.is_object(g) && (t.d(g) != g || t.r(g) != g || t.inverse(g) != g))
            rep.add("object-maps", {t.id(g)}, "object must satisfy d(e)=r(e)=inv(e)=e");
    }
    for (int g = 0; g < n; ++g) {
        if (!t.is_object(t.d(g)) || !t.is_object(t.r(g)))
            rep.add("dr-into-objects", {t.id(g)}, "d and r must map into the objects");
    }
    for (int g = 0; g < n; ++g) {
        if (t.inverse(t.inverse(g)) != g)
            rep.add("inverse-involutive", {t.id(g)}, "inv(inv(g)) != g");
    }
    for (int g = 0; g < n; ++g) {
        if (t.d(t.inverse(g)) != t.r(g) || t.r(t.inverse(g)) != t.d(g))
            rep.add("inverse-dr", {t.id(g)}, "inverse must swap domain and range");
    }

    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            int w = t.cmp(g, h);
            bool comp = t.composable(g, h);
            if (w != -1 && !comp)
                rep.add("comp-extraneous", {t.id(g), t.id(h)},
                        "product defined for a non-composable pair");
            if (w == -1 && comp)
                rep.add("comp-missing", {t.id(g), t.id(h)},
                        "composable pair without a product");
            if (w != -1 && comp) {
                if (t.d(w) != t.d(h) || t.r(w) != t.r(g))
                    rep.add("product-domain-range", {t.id(g), t.id(h), t.id(w)},
                            "d(gh) must be d(h) and r(gh) must be r(g)");
                if (t.is_object(g) && w != h)
                    rep.add("identity-neutrality", {t.id(g), t.id(h)},
                            "identity must act trivially on the left");
                if (t.is_object(h) && w != g)
                    rep.add("identity-neutrality", {t.id(g), t.id(h)},
                            "identity must act trivially on the right");
            }
        }
    }

    for (int g = 0; g < n; ++g) {
        int gi = t.inverse(g);
        int left = t.composable(gi, g) ? t.cmp(gi, g) : -1;
        if (left != -1 && left != t.d(g))
            rep.add("inverse-identities", {t.id(g)}, "inv(g)g != d(g)");
        int right = t.composable(g, gi) ? t.cmp(g, gi) : -1;
        if (right != -1 && right != t.r(g))
            rep.add("inverse-identities", {t.id(g)}, "g inv(g) != r(g)");
    }

    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            int w = t.composable(g, h) ? t.cmp(g, h) : -1;
            if (w == -1) continue;
            int wh = t.composable(t.inverse(h), t.inverse(g)) ? t.cmp(t.inverse(h), t.inverse(g)) : -1;
            if (wh != -1 && wh != t.inverse(w))
                rep.add("inverse-antihom", {t.id(g), t.id(h)},
                        "(gh)^-1 != inv(h) inv(g)");
        }
    }

    // associativity over composable triples, grouped by junction objects
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            if (!t.composable(g, h)) continue;
            int gh = t.cmp(g, h);
            if (gh == -1) continue;
            for (int k = 0; k < n; ++k) {
                if (!t.composable(h, k)) continue;
                int hk = t.cmp(h, k);
                if (hk == -1) continue;
                int a = t.composable(gh, k) ? t.cmp(gh, k) : -1;
                int b = t.composable(g, hk) ? t.cmp(g, hk) : -1;
                if (a != -1 && b != -1 && a != b)
                    rep.add("associativity", {t.id(g), t.id(h), t.id(k)},
                            "(gh)k != g(hk)");
            }
        }
    }
    return rep;
}

bool is_groupoid(const GroupoidTable& t) { return validate_groupoid(t).passed(); }

std::vector<int> isotropy_group(const GroupoidTable& t, int e) {
    if (e < 0 || e >= t.size() || !t.is_object(e))
        throw MathError("isotropy_group: '" + (e >= 0 && e < t.size() ? t.id(e) : std::to_string(e)) +
                        "' is not an object of '" + t.name + "'");
    std::vector<int> out;
    for (int g = 0; g < t.size(); ++g)
        if (t.d(g) == e && t.r(g) == e) out.push_back(g);
    return out;
}

std::vector<int> iso_subgroupoid(const GroupoidTable& t) {
    std::vector<int> out;
    for (int g = 0; g < t.size(); ++g)
        if (t.d(g) == t.r(g)) out.push_back(g);
    return out;
}

bool is_connected(const GroupoidTable& t) {
    auto objs = t.object_list();
    for (int e : objs) {
        for (int f : objs) {
            bool linked = false;
            for (int g = 0; g < t.size() && !linked; ++g)
                linked = (t.d(g) == e && t.r(g) == f);
            if (!linked) return false;
        }
    }
    return true;
}

GroupoidTable pair_groupoid(const std::vector<std::string>& objs, std::string name) {
    if (objs.empty()) throw FormatError("pair_groupoid: empty object set");
    std::set<std::string> seen(objs.begin(), objs.end());
    if (seen.size() != objs.size()) throw FormatError("pair_groupoid: duplicate object ids");

    const int k = static_cast<int>(objs.size());
    GroupoidTable t;
    t.name = std::move(name);
    // element (x|y) at index x*k + y is the arrow x -> y
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            t.elements.push_back(tuple_id({objs[x], objs[y]}));
            t.obj.push_back(x == y ? 1 : 0);
        }
    const int n = k * k;
    t.dom.resize(n);
    t.rng.resize(n);
    t.inv.resize(n);
    t.comp.assign(static_cast<size_t>(n) * n, -1);
    auto at = [k](int x, int y) { return x * k + y; };
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            t.dom[at(x, y)] = at(x, x);
            t.rng[at(x, y)] = at(y, y);
            t.inv[at(x, y)] = at(y, x);
        }
    // (y|z)(x|y) = (x|z)
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z)
                t.set_cmp(at(y, z), at(x, y), at(x, z));
    ensure_unique_ids(t);
    return t;
}

GroupoidTable subtable(const GroupoidTable& t, const std::vector<int>& members, std::string name) {
    std::vector<int> ms = members;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    if (ms.empty()) throw MathError("subtable: empty member set");

    std::vector<int> back(t.size(), -1);
    for (size_t i = 0; i < ms.size(); ++i) back[ms[i]] = static_cast<int>(i);

    GroupoidTable s;
    s.name = std::move(name);
    const int n = static_cast<int>(ms.size());
    s.comp.assign(static_cast<size_t>(n) * n, -1);
    for (int g : ms) {
        s.elements.push_back(t.id(g));
        s.obj.push_back(t.is_object(g) ? 1 : 0);
        if (back[t.d(g)] < 0 || back[t.r(g)] < 0 || back[t.inverse(g)] < 0)
            throw MathError("subtable: member set of '" + t.name + "' not closed at '" + t.id(g) + "'");
        s.dom.push_back(back[t.d(g)]);
        s.rng.push_back(back[t.r(g)]);
        s.inv.push_back(back[t.inverse(g)]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int w = t.cmp(ms[i], ms[j]);
            if (w == -1) continue;
            if (back[w] < 0)
                throw MathError("subtable: member set of '" + t.name + "' not closed under composition at (" +
                                t.id(ms[i]) + ", " + t.id(ms[j]) + ")");
            s.set_cmp(i, j, back[w]);
        }
    return s;
}

GroupoidTable disjoint_union(const GroupoidTable& a, const GroupoidTable& b, std::string name) {
    for (const auto& id : b.elements)
        if (a.index_of(id) >= 0)
            throw FormatError("disjoint_union: element id '" + id + "' appears in both tables");
    GroupoidTable t;
    t.name = std::move(name);
    const int na = a.size(), nb = b.size(), n = na + nb;
    t.elements = a.elements;
    t.elements.insert(t.elements.end(), b.elements.begin(), b.elements.end());
    t.obj = a.obj;
    t.obj.insert(t.obj.end(), b.obj.begin(), b.obj.end());
    t.dom = a.dom;
    t.rng = a.rng;
    t.inv = a.inv;
    for (int g = 0; g < nb; ++g) {
        t.dom.push_back(b.dom[g] + na);
        t.rng.push_back(b.rng[g] + na);
        t.inv.push_back(b.inv[g] + na);
    }
    t.comp.assign(static_cast<size_t>(n) * n, -1);
    for (int g = 0; g < na; ++g)
        for (int h = 0; h < na; ++h)
            if (a.cmp(g, h) != -1) t.set_cmp(g, h, a.cmp(g, h));
    for (int g = 0; g < nb; ++g)
        for (int h = 0; h < nb; ++h)
            if (b.cmp(g, h) != -1) t.set_cmp(g + na, h + na, b.cmp(g, h) + na);
    return t;
}

std::optional<int> chain_product(const GroupoidTable& t, const std::vector<int>& chain) {
    if (chain.empty()) return std::nullopt;
    int acc = chain[0];
    for (size_t i = 1; i < chain.size(); ++i) {
        if (!t.composable(acc, chain[i])) return std::nullopt;
        acc = t.cmp(acc, chain[i]);
        if (acc == -1) return std::nullopt;
    }
    return acc;
}

std::vector<int> element_set(const GroupoidTable& t, const std::vector<std::string>& ids) {
    std::vector<int> out;
    for (const auto& id : ids) out.push_back(t.require(id));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> id_set(const GroupoidTable& t, const std::vector<int>& s) {
    std::vector<std::string> out;
    for (int g : s) out.push_back(t.id(g));
    return out;
}

}  // namespace gpd
