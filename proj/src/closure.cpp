#include "gpd/closure.hpp"

#include <deque>
#include <map>
#include <set>

#include "gpd/error.hpp"

namespace gpd {

namespace {

// Coincidence-merging completion.  Nodes are the input elements plus fresh
// product nodes; forced equalities between nodes go through a union-find.
// Two distinct input elements forced equal is a contradiction.
struct Completer {
    const GroupoidTable& in;
    int n0;
    int limit;

    std::vector<int> parent;         // union-find
    std::vector<int> dom, rng, invv;
    std::vector<char> is_obj;
    std::map<std::pair<int, int>, int> prod;
    std::deque<std::pair<int, int>> merges;
    std::vector<int> fresh_order;    // creation order of fresh nodes
    bool dirty = false;

    explicit Completer(const GroupoidTable& t, int max_elements) : in(t), n0(t.size()), limit(max_elements) {
        parent.resize(n0);
        for (int i = 0; i < n0; ++i) parent[i] = i;
        dom = t.dom;
        rng = t.rng;
        invv = t.inv;
        is_obj.assign(t.obj.begin(), t.obj.end());
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    std::string node_name(int x) {
        x = find(x);
        if (x < n0) return in.id(x);
        return "<fresh #" + std::to_string(x - n0) + ">";
    }

    int get(int g, int h) {
        auto it = prod.find({find(g), find(h)});
        return it == prod.end() ? -1 : find(it->second);
    }

    void queue_merge(int a, int b, const std::string& why) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < n0 && b < n0)
            throw MathError("closure conflict: '" + in.id(a) + "' and '" + in.id(b) +
                            "' forced equal (" + why + ")");
        merges.push_back({a, b});
    }

    void force(int g, int h, int v, const char* why) {
        g = find(g);
        h = find(h);
        v = find(v);
        int cur = get(g, h);
        if (cur == -1) {
            prod[{g, h}] = v;
            dirty = true;
        } else if (cur != v) {
            queue_merge(cur, v, std::string(why) + " at (" + node_name(g) + ", " + node_name(h) + ")");
        }
    }

    void process_merges() {
        while (!merges.empty()) {
            auto [a, b] = merges.front();
            merges.pop_front();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            if (a < n0 && b < n0)
                throw MathError("closure conflict: '" + in.id(a) + "' and '" + in.id(b) +
                                "' forced equal");
            int root = a, other = b;
            if (b < a) std::swap(root, other);  // keep the older node (originals first)
            parent[other] = root;
            dirty = true;
            queue_merge(dom[root], dom[other], "merged domains");
            queue_merge(rng[root], rng[other], "merged ranges");
            queue_merge(invv[root], invv[other], "merged inverses");

            // re-canonicalize the product table
            std::map<std::pair<int, int>, int> next;
            for (const auto& [key, val] : prod) {
                std::pair<int, int> ck{find(key.first), find(key.second)};
                int cv = find(val);
                auto it = next.find(ck);
                if (it == next.end())
                    next[ck] = cv;
                else if (it->second != cv)
                    queue_merge(it->second, cv, "product collision after merge");
            }
            prod = std::move(next);
        }
    }

    bool alive(int x) { return find(x) == x; }

    std::vector<int> alive_nodes() {
        std::vector<int> out;
        for (int x = 0; x < static_cast<int>(parent.size()); ++x)
            if (alive(x)) out.push_back(x);
        return out;
    }

    int canon_d(int x) { return find(dom[find(x)]); }
    int canon_r(int x) { return find(rng[find(x)]); }
    int canon_i(int x) { return find(invv[find(x)]); }

    void propagate() {
        do {
            dirty = false;
            process_merges();
            auto nodes = alive_nodes();
            // identities and inverse products
            for (int g : nodes) {
                if (!alive(g)) continue;
                force(canon_r(g), g, g, "identity product");
                force(g, canon_d(g), g, "identity product");
                force(canon_i(g), g, canon_d(g), "inverse product");
                force(g, canon_i(g), canon_r(g), "inverse product");
            }
            process_merges();
            // antihomomorphism of inverses over current entries
            {
                auto snapshot = prod;
                for (const auto& [key, val] : snapshot)
                    force(canon_i(key.second), canon_i(key.first), canon_i(val), "inverse of product");
            }
            process_merges();
            // associativity: extend every entry (g,h) on the right by k
            {
                auto snapshot = prod;
                auto nodes2 = alive_nodes();
                for (const auto& [key, val] : snapshot) {
                    int g = find(key.first), h = find(key.second), gh = find(val);
                    if (get(g, h) != gh) continue;  // stale after merges
                    for (int k : nodes2) {
                        if (!alive(k)) continue;
                        if (canon_d(h) != canon_r(k)) continue;
                        int hk = get(h, k);
                        int ghk = get(gh, k);
                        if (hk != -1 && ghk != -1)
                            force(g, hk, ghk, "associativity");
                        else if (hk != -1 && get(g, hk) != -1)
                            force(gh, k, get(g, hk), "associativity");
                        else if (ghk != -1 && hk == -1) {
                            // nothing to do: hk itself is not yet known
                        }
                    }
                }
            }
            process_merges();
        } while (dirty || !merges.empty());
    }

    // first composable-but-undefined pair in scan order, or nullopt
    std::optional<std::pair<int, int>> missing_pair() {
        auto nodes = alive_nodes();
        for (int g : nodes)
            for (int h : nodes)
                if (canon_d(g) == canon_r(h) && get(g, h) == -1) return std::make_pair(g, h);
        return std::nullopt;
    }

    void add_fresh(int g, int h) {
        if (static_cast<int>(parent.size()) + 2 > limit)
            throw MathError("closure limit: more than " + std::to_string(limit) +
                            " elements required; presentation may be infinite");
        int p = static_cast<int>(parent.size());
        int q = p + 1;
        parent.push_back(p);
        parent.push_back(q);
        is_obj.push_back(0);
        is_obj.push_back(0);
        dom.push_back(canon_d(h));
        rng.push_back(canon_r(g));
        dom.push_back(canon_r(g));
        rng.push_back(canon_d(h));
        invv.push_back(q);
        invv.push_back(p);
        fresh_order.push_back(p);
        fresh_order.push_back(q);
        force(g, h, p, "fresh product");
    }
};

}  // namespace

GroupoidTable complete_closure(const GroupoidTable& partial, const ClosureOptions& opts) {
    const auto& t = partial;
    if (t.size() == 0 || t.object_list().empty())
        throw MathError("closure: input has no objects");
    for (int g = 0; g < t.size(); ++g) {
        if (t.is_object(g) && (t.d(g) != g || t.r(g) != g || t.inverse(g) != g))
            throw MathError("closure: inconsistent object maps at '" + t.id(g) + "'");
        if (!t.is_object(t.d(g)) || !t.is_object(t.r(g)))
            throw MathError("closure: d/r of '" + t.id(g) + "' is not an object");
        if (t.inverse(t.inverse(g)) != g)
            throw MathError("closure: inv not involutive at '" + t.id(g) + "'");
        if (t.d(t.inverse(g)) != t.r(g) || t.r(t.inverse(g)) != t.d(g))
            throw MathError("closure: inv of '" + t.id(g) + "' has inconsistent d/r");
    }
    for (int g = 0; g < t.size(); ++g)
        for (int h = 0; h < t.size(); ++h)
            if (t.cmp(g, h) != -1 && !t.composable(g, h))
                throw MathError("closure: product declared for non-composable pair (" + t.id(g) +
                                ", " + t.id(h) + ")");

    Completer c(t, opts.max_elements);
    for (int g = 0; g < t.size(); ++g)
        for (int h = 0; h < t.size(); ++h)
            if (t.cmp(g, h) != -1) c.force(g, h, t.cmp(g, h), "declared product");

    c.propagate();
    while (auto gap = c.missing_pair()) {
        c.add_fresh(gap->first, gap->second);
        c.propagate();
    }

    // assemble: originals in input order, surviving fresh nodes in creation order
    std::vector<int> nodes;
    for (int i = 0; i < c.n0; ++i) nodes.push_back(i);
    for (int f : c.fresh_order)
        if (c.alive(f)) nodes.push_back(f);

    std::vector<int> back(c.parent.size(), -1);
    for (size_t i = 0; i < nodes.size(); ++i) back[nodes[i]] = static_cast<int>(i);

    std::set<std::string> used(t.elements.begin(), t.elements.end());
    GroupoidTable out;
    out.name = t.name;
    int fresh_counter = 0;
    for (int x : nodes) {
        if (x < c.n0) {
            out.elements.push_back(t.id(x));
            out.obj.push_back(t.obj[x]);
        } else {
            std::string id;
            do {
                id = "_p" + std::to_string(fresh_counter++);
            } while (used.count(id));
            used.insert(id);
            out.elements.push_back(id);
            out.obj.push_back(0);
        }
        out.dom.push_back(back[c.canon_d(x)]);
        out.rng.push_back(back[c.canon_r(x)]);
        out.inv.push_back(back[c.canon_i(x)]);
    }
    const int n = static_cast<int>(nodes.size());
    out.comp.assign(static_cast<size_t>(n) * n, -1);
    for (const auto& [key, val] : c.prod) {
        int g = back[c.find(key.first)], h = back[c.find(key.second)], v = back[c.find(val)];
        out.set_cmp(g, h, v);
    }

    auto rep = validate_groupoid(out);
    if (!rep.passed())
        throw MathError("closure: completed table fails validation (internal error):\n" +
                        rep.summary());
    return out;
}

}  // namespace gpd
