#include "gpd/format.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gpd/error.hpp"

namespace gpd {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw FormatError("line " + std::to_string(lineno) + ": " + msg);
}

struct Lines {
    std::vector<std::pair<int, std::vector<std::string>>> rows;  // (lineno, tokens)
};

Lines split_lines(const std::string& text) {
    Lines out;
    std::istringstream is(text);
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = tokenize(line);
        if (!toks.empty()) out.rows.push_back({no, toks});
    }
    return out;
}

}  // namespace

GpdDocument parse_document(const std::string& text) {
    Lines ls = split_lines(text);
    if (ls.rows.empty()) throw FormatError("line 1: empty document");

    GpdDocument doc;
    const auto& [hline, head] = ls.rows.front();
    const std::string& kw = head[0];

    size_t i = 1;
    bool ended = false;
    auto expect_end = [&](size_t row) {
        if (row + 1 != ls.rows.size()) fail(ls.rows[row + 1].first, "content after 'end'");
    };

    if (kw == "groupoid") {
        doc.kind = DocKind::groupoid;
        if (head.size() != 2) fail(hline, "expected: groupoid <name>");
        doc.name = head[1];
        std::set<std::string> ids;
        std::map<std::string, std::pair<std::string, std::string>> dr;  // id -> (dom, rng)
        std::map<std::string, std::string> inv_of;
        std::set<std::pair<std::string, std::string>> comp_pairs;
        bool have_objects = false;
        int end_line = hline;
        for (; i < ls.rows.size(); ++i) {
            const auto& [no, tk] = ls.rows[i];
            if (tk[0] == "end") {
                ended = true;
                end_line = no;
                expect_end(i);
                break;
            }
            if (tk[0] == "objects:") {
                if (have_objects) fail(no, "duplicate objects declaration");
                have_objects = true;
                if (tk.size() < 2) fail(no, "a groupoid needs at least one object");
                for (size_t j = 1; j < tk.size(); ++j) {
                    if (!ids.insert(tk[j]).second) fail(no, "duplicate element id '" + tk[j] + "'");
                    doc.objects.push_back(tk[j]);
                    dr[tk[j]] = {tk[j], tk[j]};
                    inv_of[tk[j]] = tk[j];
                }
            } else if (tk[0] == "arrow") {
                if (tk.size() != 6 || tk[2] != ":" || tk[4] != "->")
                    fail(no, "expected: arrow <id> : <obj> -> <obj>");
                if (!have_objects) fail(no, "arrow before objects declaration");
                if (!ids.insert(tk[1]).second) fail(no, "duplicate element id '" + tk[1] + "'");
                for (const auto& o : {tk[3], tk[5]})
                    if (!std::count(doc.objects.begin(), doc.objects.end(), o))
                        fail(no, "'" + o + "' is not a declared object");
                doc.arrows.push_back({tk[1], tk[3], tk[5]});
                dr[tk[1]] = {tk[3], tk[5]};
            } else if (tk[0] == "inv") {
                if (tk.size() != 4 || tk[2] != "=") fail(no, "expected: inv <id> = <id>");
                for (const auto& x : {tk[1], tk[3]})
                    if (!ids.count(x)) fail(no, "unknown element id '" + x + "'");
                for (const auto& [x, y] : {std::pair(tk[1], tk[3]), std::pair(tk[3], tk[1])}) {
                    auto it = inv_of.find(x);
                    if (it != inv_of.end() && it->second != y)
                        fail(no, "conflicting inverse declaration for '" + x + "'");
                    inv_of[x] = y;
                }
                doc.inverses.push_back({tk[1], tk[3]});
            } else if (tk[0] == "comp") {
                if (tk.size() != 5 || tk[3] != "=") fail(no, "expected: comp <id> <id> = <id>");
                for (const auto& x : {tk[1], tk[2], tk[4]})
                    if (!ids.count(x)) fail(no, "unknown element id '" + x + "'");
                if (dr.at(tk[1]).first != dr.at(tk[2]).second)
                    fail(no, "pair (" + tk[1] + ", " + tk[2] + ") is not composable: d(" + tk[1] +
                                 ") != r(" + tk[2] + ")");
                if (!comp_pairs.insert({tk[1], tk[2]}).second)
                    fail(no, "duplicate comp declaration for (" + tk[1] + ", " + tk[2] + ")");
                doc.comps.push_back({tk[1], tk[2], tk[4]});
            } else {
                fail(no, "unknown declaration '" + tk[0] + "'");
            }
        }
        if (ended)
            for (const auto& id : ids)
                if (!inv_of.count(id)) fail(end_line, "no inverse declared for '" + id + "'");
    } else if (kw == "paction") {
        doc.kind = DocKind::paction;
        if (head.size() != 4 || head[2] != "on") fail(hline, "expected: paction <name> on <file>");
        doc.name = head[1];
        doc.groupoid_ref = head[3];
        std::set<std::string> pts;
        std::set<std::pair<std::string, std::string>> entries;
        bool have_set = false;
        for (; i < ls.rows.size(); ++i) {
            const auto& [no, tk] = ls.rows[i];
            if (tk[0] == "end") {
                ended = true;
                expect_end(i);
                break;
            }
            if (tk[0] == "set:") {
                if (have_set) fail(no, "duplicate set declaration");
                have_set = true;
                for (size_t j = 1; j < tk.size(); ++j) {
                    if (!pts.insert(tk[j]).second) fail(no, "duplicate point id '" + tk[j] + "'");
                    doc.points.push_back(tk[j]);
                }
            } else if (tk[0] == "act") {
                if (tk.size() != 5 || tk[3] != "=") fail(no, "expected: act <g> <x> = <y>");
                for (const auto& x : {tk[2], tk[4]})
                    if (!pts.count(x)) fail(no, "unknown point id '" + x + "'");
                if (!entries.insert({tk[1], tk[2]}).second)
                    fail(no, "duplicate act declaration for (" + tk[1] + ", " + tk[2] + ")");
                doc.actions.push_back({tk[1], tk[2], tk[4]});
            } else {
                fail(no, "unknown declaration '" + tk[0] + "'");
            }
        }
    } else if (kw == "functor") {
        doc.kind = DocKind::functor_map;
        if (head.size() != 6 || head[2] != ":" || head[4] != "->")
            fail(hline, "expected: functor <name> : <src-file> -> <tgt-file>");
        doc.name = head[1];
        doc.source_ref = head[3];
        doc.target_ref = head[5];
        std::set<std::string> seen;
        for (; i < ls.rows.size(); ++i) {
            const auto& [no, tk] = ls.rows[i];
            if (tk[0] == "end") {
                ended = true;
                expect_end(i);
                break;
            }
            if (tk[0] == "map") {
                if (tk.size() != 4 || tk[2] != "=") fail(no, "expected: map <id> = <id>");
                if (!seen.insert(tk[1]).second) fail(no, "duplicate map for '" + tk[1] + "'");
                doc.mappings.push_back({tk[1], tk[3]});
            } else {
                fail(no, "unknown declaration '" + tk[0] + "'");
            }
        }
    } else if (kw == "autaction") {
        doc.kind = DocKind::autaction;
        if (head.size() != 6 || head[2] != ":" || head[4] != "on")
            fail(hline, "expected: autaction <name> : <group-file> on <groupoid-file>");
        doc.name = head[1];
        doc.group_ref = head[3];
        doc.groupoid_ref = head[5];
        std::set<std::string> seen;
        for (; i < ls.rows.size(); ++i) {
            const auto& [no, tk] = ls.rows[i];
            if (tk[0] == "end") {
                ended = true;
                expect_end(i);
                break;
            }
            if (tk[0] == "perm") {
                if (tk.size() < 2 || tk[1].back() != ':')
                    fail(no, "expected: perm <group-elt>: <id>-><id> ...");
                std::string g = tk[1].substr(0, tk[1].size() - 1);
                if (!seen.insert(g).second) fail(no, "duplicate perm for '" + g + "'");
                std::vector<std::pair<std::string, std::string>> moves;
                for (size_t j = 2; j < tk.size(); ++j) {
                    auto arrow = tk[j].find("->");
                    if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= tk[j].size())
                        fail(no, "expected <id>-><id>, got '" + tk[j] + "'");
                    moves.push_back({tk[j].substr(0, arrow), tk[j].substr(arrow + 2)});
                }
                doc.perms.push_back({g, moves});
            } else {
                fail(no, "unknown declaration '" + tk[0] + "'");
            }
        }
    } else {
        fail(hline, "unknown document kind '" + kw + "'");
    }
    if (!ended) throw FormatError("line " + std::to_string(ls.rows.back().first) + ": missing 'end'");
    return doc;
}

std::string serialize_document(const GpdDocument& doc) {
    std::ostringstream os;
    switch (doc.kind) {
        case DocKind::groupoid: {
            os << "groupoid " << doc.name << "\n";
            os << "objects:";
            for (const auto& o : doc.objects) os << " " << o;
            os << "\n";
            for (const auto& a : doc.arrows)
                os << "arrow " << a.id << " : " << a.dom << " -> " << a.rng << "\n";
            for (const auto& [x, y] : doc.inverses) os << "inv " << x << " = " << y << "\n";
            for (const auto& c : doc.comps)
                os << "comp " << c[0] << " " << c[1] << " = " << c[2] << "\n";
            break;
        }
        case DocKind::paction: {
            os << "paction " << doc.name << " on " << doc.groupoid_ref << "\n";
            os << "set:";
            for (const auto& p : doc.points) os << " " << p;
            os << "\n";
            for (const auto& a : doc.actions)
                os << "act " << a[0] << " " << a[1] << " = " << a[2] << "\n";
            break;
        }
        case DocKind::functor_map: {
            os << "functor " << doc.name << " : " << doc.source_ref << " -> " << doc.target_ref
               << "\n";
            for (const auto& [x, y] : doc.mappings) os << "map " << x << " = " << y << "\n";
            break;
        }
        case DocKind::autaction: {
            os << "autaction " << doc.name << " : " << doc.group_ref << " on " << doc.groupoid_ref
               << "\n";
            for (const auto& [g, moves] : doc.perms) {
                os << "perm " << g << ":";
                for (const auto& [x, y] : moves) os << " " << x << "->" << y;
                os << "\n";
            }
            break;
        }
    }
    os << "end\n";
    return os.str();
}

GroupoidTable table_from_document(const GpdDocument& doc) {
    if (doc.kind != DocKind::groupoid)
        throw FormatError("document '" + doc.name + "' is not a groupoid");
    std::vector<std::tuple<std::string, std::string, std::string>> comps;
    for (const auto& c : doc.comps) comps.push_back({c[0], c[1], c[2]});
    return make_table(doc.name, doc.objects, doc.arrows, doc.inverses, comps);
}

GpdDocument document_from_table(const GroupoidTable& t) {
    GpdDocument doc;
    doc.kind = DocKind::groupoid;
    doc.name = t.name;
    for (int g = 0; g < t.size(); ++g)
        if (t.is_object(g)) doc.objects.push_back(t.id(g));
    for (int g = 0; g < t.size(); ++g)
        if (!t.is_object(g)) doc.arrows.push_back({t.id(g), t.id(t.d(g)), t.id(t.r(g))});
    for (int g = 0; g < t.size(); ++g)
        if (!t.is_object(g) && g <= t.inverse(g)) doc.inverses.push_back({t.id(g), t.id(t.inverse(g))});
    for (int g = 0; g < t.size(); ++g) {
        if (t.is_object(g)) continue;
        for (int h = 0; h < t.size(); ++h) {
            if (t.is_object(h)) continue;
            int w = t.cmp(g, h);
            if (w != -1) doc.comps.push_back({t.id(g), t.id(h), t.id(w)});
        }
    }
    return doc;
}

std::string groupoid_text(const GroupoidTable& t) {
    return serialize_document(document_from_table(t));
}

std::string partial_action_text(const PartialActionTable& p, const std::string& groupoid_ref) {
    GpdDocument doc;
    doc.kind = DocKind::paction;
    doc.name = p.name;
    doc.groupoid_ref = groupoid_ref;
    doc.points = p.carrier;
    for (const auto& [key, y] : p.act)
        doc.actions.push_back({p.groupoid.id(key.first), p.point(key.second), p.point(y)});
    return serialize_document(doc);
}

std::string functor_text(const GroupoidFunctor& f, const std::string& source_ref,
                         const std::string& target_ref) {
    GpdDocument doc;
    doc.kind = DocKind::functor_map;
    doc.name = f.name;
    doc.source_ref = source_ref;
    doc.target_ref = target_ref;
    for (int g = 0; g < f.source.size(); ++g)
        doc.mappings.push_back({f.source.id(g), f.target.id(f.map[g])});
    return serialize_document(doc);
}

std::string aut_action_text(const AutAction& a, const std::string& name,
                            const std::string& group_ref, const std::string& groupoid_ref) {
    GpdDocument doc;
    doc.kind = DocKind::autaction;
    doc.name = name;
    doc.group_ref = group_ref;
    doc.groupoid_ref = groupoid_ref;
    for (int g = 0; g < a.group.size(); ++g) {
        if (a.group.is_object(g)) continue;  // identity acts as the identity
        std::vector<std::pair<std::string, std::string>> moves;
        for (int x = 0; x < a.target.size(); ++x)
            if (a.omega[g][x] != x) moves.push_back({a.target.id(x), a.target.id(a.omega[g][x])});
        if (!moves.empty()) doc.perms.push_back({a.group.id(g), moves});
    }
    return serialize_document(doc);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << text;
}

namespace {

std::string resolve_ref(const std::string& from_path, const std::string& ref) {
    std::filesystem::path p(ref);
    if (p.is_absolute()) return ref;
    return (std::filesystem::path(from_path).parent_path() / p).string();
}

}  // namespace

GroupoidTable load_groupoid(const std::string& path) {
    auto doc = parse_document(read_file(path));
    if (doc.kind != DocKind::groupoid) throw FormatError("'" + path + "' is not a groupoid file");
    try {
        return table_from_document(doc);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

LoadedPaction load_partial_action(const std::string& path) {
    auto doc = parse_document(read_file(path));
    if (doc.kind != DocKind::paction) throw FormatError("'" + path + "' is not a paction file");
    GroupoidTable t = load_groupoid(resolve_ref(path, doc.groupoid_ref));
    std::vector<std::tuple<std::string, std::string, std::string>> entries;
    for (const auto& a : doc.actions) entries.push_back({a[0], a[1], a[2]});
    try {
        return {make_partial_action(doc.name, std::move(t), doc.points, entries),
                doc.groupoid_ref};
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

LoadedFunctor load_functor(const std::string& path) {
    auto doc = parse_document(read_file(path));
    if (doc.kind != DocKind::functor_map) throw FormatError("'" + path + "' is not a functor file");
    GroupoidTable src = load_groupoid(resolve_ref(path, doc.source_ref));
    GroupoidTable tgt = load_groupoid(resolve_ref(path, doc.target_ref));
    std::map<std::string, std::string> m(doc.mappings.begin(), doc.mappings.end());
    try {
        return {make_functor(doc.name, std::move(src), std::move(tgt), m), doc.source_ref,
                doc.target_ref};
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

LoadedAutAction load_aut_action(const std::string& path) {
    auto doc = parse_document(read_file(path));
    if (doc.kind != DocKind::autaction) throw FormatError("'" + path + "' is not an autaction file");
    AutAction a;
    a.group = load_groupoid(resolve_ref(path, doc.group_ref));
    a.target = load_groupoid(resolve_ref(path, doc.groupoid_ref));
    a.omega.assign(a.group.size(), {});
    for (int g = 0; g < a.group.size(); ++g) {
        a.omega[g].resize(a.target.size());
        for (int x = 0; x < a.target.size(); ++x) a.omega[g][x] = x;
    }
    try {
        for (const auto& [gid, moves] : doc.perms) {
            int g = a.group.require(gid);
            std::vector<char> touched(a.target.size(), 0);
            for (const auto& [from, to] : moves) {
                int x = a.target.require(from);
                int y = a.target.require(to);
                if (touched[x]) throw FormatError("perm " + gid + ": '" + from + "' moved twice");
                touched[x] = 1;
                a.omega[g][x] = y;
            }
        }
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
    return {a, doc.name, doc.group_ref, doc.groupoid_ref};
}

}  // namespace gpd
