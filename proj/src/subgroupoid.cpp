#include "gpd/subgroupoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gpd/error.hpp"
#include "gpd/product.hpp"

namespace gpd {

namespace {

bool member(const std::vector<int>& s, int g) {
    return std::binary_search(s.begin(), s.end(), g);
}

std::string join_ids(const GroupoidTable& t, const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += t.id(s[i]);
    }
    return out + "}";
}

}  // namespace

bool is_subgroupoid(const GroupoidTable& t, const std::vector<int>& s) {
    if (s.empty()) return false;
    for (int g : s) {
        if (g < 0 || g >= t.size()) throw FormatError("is_subgroupoid: index out of range");
        if (!member(s, t.inverse(g))) return false;
    }
    for (int g : s)
        for (int h : s) {
            if (!t.composable(g, h)) continue;
            int w = t.cmp(g, h);
            if (w == -1 || !member(s, w)) return false;
        }
    return true;
}

bool is_wide(const GroupoidTable& t, const std::vector<int>& s) {
    if (!is_subgroupoid(t, s))
        throw MathError("is_wide: " + join_ids(t, s) + " is not a subgroupoid of '" + t.name + "'");
    for (int e : t.object_list())
        if (!member(s, e)) return false;
    return true;
}

std::vector<int> conjugate_set(const GroupoidTable& t, const std::vector<int>& s, int g) {
    std::vector<int> out;
    for (int h : s) {
        if (!(t.r(h) == t.d(h) && t.d(h) == t.r(g))) continue;
        int gi = t.inverse(g);
        int w = t.cmp(gi, h);
        if (w == -1) continue;  // cannot happen in a valid table
        int c = t.cmp(w, g);
        if (c == -1) continue;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_normal(const GroupoidTable& t, const std::vector<int>& s) {
    if (!is_subgroupoid(t, s)) return false;
    for (int e : t.object_list())
        if (!member(s, e)) return false;
    for (int g = 0; g < t.size(); ++g)
        for (int c : conjugate_set(t, s, g))
            if (!member(s, c)) return false;
    return true;
}

bool is_normal_bw(const GroupoidTable& t, const std::vector<int>& s) {
    if (!is_wide(t, s))
        throw MathError("is_normal_bw: " + join_ids(t, s) + " is not wide in '" + t.name + "'");
    // H_e = isotropy of the subgroupoid at e
    auto iso_of = [&](int e) {
        std::vector<int> out;
        for (int h : s)
            if (t.d(h) == e && t.r(h) == e) out.push_back(h);
        return out;
    };
    for (int g = 0; g < t.size(); ++g) {
        auto upper = iso_of(t.r(g));
        std::vector<int> conj;
        int gi = t.inverse(g);
        for (int h : upper) {
            int w = t.cmp(gi, h);
            if (w == -1) return false;
            int c = t.cmp(w, g);
            if (c == -1) return false;
            conj.push_back(c);
        }
        std::sort(conj.begin(), conj.end());
        conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
        if (conj != iso_of(t.d(g))) return false;
    }
    return true;
}

std::vector<std::vector<int>> restricted_tuples(const GroupoidTable& t,
                                                const std::vector<std::vector<int>>& sets) {
    std::vector<std::vector<int>> out;
    if (sets.empty()) return out;
    std::vector<int> tuple;
    // chain composable iff adjacent pairs compose: d(x_i) = r(x_{i+1})
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == sets.size()) {
            out.push_back(tuple);
            return;
        }
        for (int g : sets[i]) {
            if (!tuple.empty() && t.d(tuple.back()) != t.r(g)) continue;
            tuple.push_back(g);
            self(self, i + 1);
            tuple.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<int> product_set(const GroupoidTable& t, const std::vector<std::vector<int>>& sets) {
    if (sets.empty()) return t.object_list();  // empty product
    std::vector<int> out;
    for (const auto& tup : restricted_tuples(t, sets)) {
        auto w = chain_product(t, tup);
        if (w) out.push_back(*w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TupleCheck tuples_subgroupoid_check(const GroupoidTable& t,
                                    const std::vector<std::vector<int>>& subs) {
    for (const auto& s : subs)
        if (!is_subgroupoid(t, s))
            throw MathError("tuples_subgroupoid_check: input " + join_ids(t, s) +
                            " is not a subgroupoid");
    auto tuples = restricted_tuples(t, subs);
    std::set<std::vector<int>> in_set(tuples.begin(), tuples.end());

    // direct route: closure of the tuple set inside the direct power
    bool closed = true;
    for (const auto& tup : tuples) {
        std::vector<int> inv_tup;
        for (int g : tup) inv_tup.push_back(t.inverse(g));
        if (!in_set.count(inv_tup)) {
            closed = false;
            break;
        }
    }
    if (closed) {
        for (const auto& a : tuples) {
            for (const auto& b : tuples) {
                bool comp = true;
                std::vector<int> prod;
                for (size_t i = 0; i < a.size(); ++i) {
                    if (!t.composable(a[i], b[i]) || t.cmp(a[i], b[i]) == -1) {
                        comp = false;
                        break;
                    }
                    prod.push_back(t.cmp(a[i], b[i]));
                }
                if (comp && !in_set.count(prod)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
    }

    // criterion route: r(h_i) = d(h_{i+1}) on every tuple
    bool criterion = true;
    for (const auto& tup : tuples) {
        for (size_t i = 0; i + 1 < tup.size(); ++i)
            if (t.r(tup[i]) != t.d(tup[i + 1])) {
                criterion = false;
                break;
            }
        if (!criterion) break;
    }
    return {closed, criterion};
}

std::string InternalDirectReport::summary() const {
    std::ostringstream os;
    os << "(1) generates:            " << (generates ? "true" : "false") << "\n"
       << "(2) all normal:           " << (all_normal ? "true" : "false") << "\n"
       << "(3) trivial intersection: " << (trivial_intersection ? "true" : "false") << "\n"
       << "(4) unique factorization: " << (unique_factorization ? "true" : "false") << "\n"
       << "(5) cross commutation:    " << (cross_commutation ? "true" : "false") << "\n";
    for (const auto& v : failures) {
        os << "  " << v.tag << ": " << v.message;
        if (!v.witnesses.empty()) {
            os << " [";
            for (size_t i = 0; i < v.witnesses.size(); ++i) {
                if (i) os << ", ";
                os << v.witnesses[i];
            }
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

InternalDirectReport internal_direct_report(const GroupoidTable& t,
                                            const std::vector<std::vector<int>>& subs) {
    for (const auto& s : subs)
        if (!is_wide(t, s))
            throw MathError("internal_direct_report: input " + join_ids(t, s) +
                            " is not a wide subgroupoid");
    InternalDirectReport rep{true, true, true, true, true, {}};
    const int n = static_cast<int>(subs.size());

    // (1) the factors generate the parent
    {
        auto prod = product_set(t, subs);
        std::vector<int> all(t.size());
        for (int i = 0; i < t.size(); ++i) all[i] = i;
        if (prod != all) {
            rep.generates = false;
            for (int g : all)
                if (!std::binary_search(prod.begin(), prod.end(), g)) {
                    rep.failures.push_back({"generates", {t.id(g)}, "element has no factorization"});
                    break;
                }
        }
    }
    // (2) each factor normal
    for (int i = 0; i < n; ++i)
        if (!is_normal(t, subs[i])) {
            rep.all_normal = false;
            rep.failures.push_back({"normal", {std::to_string(i + 1)},
                                    "factor " + std::to_string(i + 1) + " is not normal"});
        }
    // (3) H_i meets the product of the others exactly in the objects
    {
        auto objs = t.object_list();
        for (int i = 0; i < n; ++i) {
            std::vector<std::vector<int>> others;
            for (int j = 0; j < n; ++j)
                if (j != i) others.push_back(subs[j]);
            auto rest = product_set(t, others);
            std::vector<int> inter;
            std::set_intersection(subs[i].begin(), subs[i].end(), rest.begin(), rest.end(),
                                  std::back_inserter(inter));
            if (inter != objs) {
                rep.trivial_intersection = false;
                std::vector<std::string> wit;
                for (int g : inter)
                    if (!std::binary_search(objs.begin(), objs.end(), g)) wit.push_back(t.id(g));
                rep.failures.push_back({"intersection", wit,
                                        "factor " + std::to_string(i + 1) +
                                            " meets the others beyond the objects"});
            }
        }
    }
    // (4) unique composable factorization of every element
    {
        auto tuples = restricted_tuples(t, subs);
        std::vector<int> count(t.size(), 0);
        std::vector<std::vector<int>> witness(t.size());
        for (const auto& tup : tuples) {
            auto w = chain_product(t, tup);
            if (w) {
                ++count[*w];
                witness[*w] = tup;
            }
        }
        for (int g = 0; g < t.size(); ++g) {
            if (count[g] == 1) continue;
            rep.unique_factorization = false;
            rep.failures.push_back({"unique-factorization", {t.id(g)},
                                    count[g] == 0 ? "no composable factorization"
                                                  : "several composable factorizations"});
            break;
        }
    }
    // (5) cross commutation between distinct factors
    {
        bool done = false;
        for (int i = 0; i < n && !done; ++i)
            for (int j = 0; j < n && !done; ++j) {
                if (i == j) continue;
                for (int x : subs[i]) {
                    for (int y : subs[j]) {
                        if (!(t.r(y) == t.d(x) && t.d(x) == t.r(x) && t.r(x) == t.d(y))) continue;
                        int xy = t.cmp(x, y), yx = t.cmp(y, x);
                        if (xy != yx) {
                            rep.cross_commutation = false;
                            rep.failures.push_back({"commutation", {t.id(x), t.id(y)}, "xy != yx"});
                            done = true;
                            break;
                        }
                    }
                    if (done) break;
                }
            }
    }
    return rep;
}

GroupoidFunctor embed_direct(const GroupoidTable& t, const std::vector<std::vector<int>>& subs) {
    auto rep = internal_direct_report(t, subs);
    if (!rep.all_five()) {
        const char* names[] = {"generates", "all normal", "trivial intersection",
                               "unique factorization", "cross commutation"};
        const bool flags[] = {rep.generates, rep.all_normal, rep.trivial_intersection,
                              rep.unique_factorization, rep.cross_commutation};
        for (int i = 0; i < 5; ++i)
            if (!flags[i])
                throw MathError(std::string("embed_direct: condition '") + names[i] +
                                "' fails on '" + t.name + "'");
    }
    const int n = static_cast<int>(subs.size());
    std::vector<GroupoidTable> powers(n, t);
    GroupoidTable power = direct_product(powers, t.name + "^" + std::to_string(n));

    // unique factorization assigns each element its tuple
    auto tuples = restricted_tuples(t, subs);
    std::vector<std::vector<int>> fact(t.size());
    for (const auto& tup : tuples) {
        auto w = chain_product(t, tup);
        if (w) fact[*w] = tup;
    }
    GroupoidFunctor f{"embed_" + t.name, t, power, {}};
    for (int g = 0; g < t.size(); ++g) {
        std::vector<std::string> parts;
        for (int x : fact[g]) parts.push_back(t.id(x));
        f.map.push_back(power.require(tuple_id(parts)));
    }

    // The direct power does not compose every image pair (the tuple set need
    // not be closed); the embedding is injective, maps objects to object
    // tuples, and is multiplicative wherever the image tuples compose.
    if (!is_injective_functor(f))
        throw MathError("embed_direct: embedding is not injective (internal error)");
    for (int g = 0; g < t.size(); ++g)
        if (t.is_object(g) && !power.is_object(f.map[g]))
            throw MathError("embed_direct: object image is not an object tuple (internal error)");
    for (int g = 0; g < t.size(); ++g)
        for (int h = 0; h < t.size(); ++h) {
            if (!t.composable(g, h) || t.cmp(g, h) == -1) continue;
            int fg = f.map[g], fh = f.map[h];
            int w = power.composable(fg, fh) ? power.cmp(fg, fh) : -1;
            if (w != -1 && w != f.map[t.cmp(g, h)])
                throw MathError("embed_direct: images compose to the wrong tuple at (" + t.id(g) +
                                ", " + t.id(h) + ")");
        }
    // image = all composable tuples
    {
        std::set<int> image(f.map.begin(), f.map.end());
        std::set<int> expected;
        for (const auto& tup : tuples) {
            std::vector<std::string> parts;
            for (int x : tup) parts.push_back(t.id(x));
            expected.insert(power.require(tuple_id(parts)));
        }
        if (image != expected)
            throw MathError("embed_direct: image differs from the composable tuple set");
    }
    return f;
}

std::vector<std::vector<int>> enumerate_subgroupoids(const GroupoidTable& t, int max_size) {
    if (t.size() > max_size)
        throw MathError("enumerate_subgroupoids: table larger than " + std::to_string(max_size));
    std::vector<std::vector<int>> out;
    const int n = t.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        if (is_subgroupoid(t, s)) out.push_back(s);
    }
    return out;
}

std::vector<std::vector<int>> enumerate_wide_subgroupoids(const GroupoidTable& t, int max_size) {
    if (t.size() > max_size)
        throw MathError("enumerate_wide_subgroupoids: table larger than " + std::to_string(max_size));
    std::vector<std::vector<int>> out;
    auto objs = t.object_list();
    std::vector<int> arrows;
    for (int g = 0; g < t.size(); ++g)
        if (!t.is_object(g)) arrows.push_back(g);
    const int m = static_cast<int>(arrows.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> s = objs;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(arrows[i]);
        std::sort(s.begin(), s.end());
        if (is_subgroupoid(t, s)) out.push_back(s);
    }
    return out;
}

}  // namespace gpd
