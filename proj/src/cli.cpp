#include "gpd/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "gpd/closure.hpp"
#include "gpd/equivalence.hpp"
#include "gpd/error.hpp"
#include "gpd/format.hpp"
#include "gpd/globalization.hpp"
#include "gpd/product.hpp"
#include "gpd/subgroupoid.hpp"

namespace gpd {

namespace {

struct Args {
    std::string command;
    std::vector<std::string> positional;
    std::string subs, map_arg, output, classes_out;
};

Args parse_args(const std::vector<std::string>& argv) {
    Args a;
    if (argv.empty()) throw FormatError("no command given");
    a.command = argv[0];
    for (size_t i = 1; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        auto next = [&](const char* flag) -> const std::string& {
            if (i + 1 >= argv.size()) throw FormatError(std::string(flag) + " needs a value");
            return argv[++i];
        };
        if (s == "--subs")
            a.subs = next("--subs");
        else if (s == "--map")
            a.map_arg = next("--map");
        else if (s == "-o" || s == "--output")
            a.output = next("-o");
        else if (s == "--classes")
            a.classes_out = next("--classes");
        else if (!s.empty() && s[0] == '-' && s.size() > 1 && !std::isdigit(static_cast<unsigned char>(s[1])))
            throw FormatError("unknown option '" + s + "'");
        else
            a.positional.push_back(s);
    }
    return a;
}

const std::string& positional(const Args& a, size_t i, const char* what) {
    if (i >= a.positional.size()) throw FormatError(std::string("missing argument: ") + what);
    return a.positional[i];
}

// "u,u-,x,y;v,v-,x,y" -> index sets
std::vector<std::vector<int>> parse_subs(const GroupoidTable& t, const std::string& arg) {
    if (arg.empty()) throw FormatError("--subs is required");
    std::vector<std::vector<int>> out;
    std::istringstream groups(arg);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<std::string> ids;
        std::istringstream items(group);
        std::string id;
        while (std::getline(items, id, ','))
            if (!id.empty()) ids.push_back(id);
        if (ids.empty()) throw FormatError("--subs: empty element list");
        out.push_back(element_set(t, ids));
    }
    if (out.empty()) throw FormatError("--subs: no element lists");
    return out;
}

PointMap parse_point_map(const std::string& arg) {
    PointMap out;
    std::istringstream items(arg);
    std::string item;
    while (std::getline(items, item, ';')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
            throw FormatError("--map: expected <point>=<point>, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    if (out.empty()) throw FormatError("--map is required");
    return out;
}

void emit(const Args& a, const std::string& text, std::ostream& out) {
    if (a.output.empty())
        out << text;
    else
        write_file(a.output, text);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const Args& a, std::ostream& out) {
    GroupoidTable t = load_groupoid(positional(a, 0, "groupoid file"));
    auto rep = validate_groupoid(t);
    if (rep.passed()) {
        out << "valid groupoid '" << t.name << "': " << t.size() << " elements, "
            << t.object_list().size() << " objects\n";
        return 0;
    }
    out << "invalid groupoid '" << t.name << "':\n" << rep.summary();
    return 1;
}

int cmd_complete(const Args& a, std::ostream& out) {
    GroupoidTable t = load_groupoid(positional(a, 0, "groupoid file"));
    GroupoidTable c = complete_closure(t);
    out << "closure of '" << t.name << "': " << t.size() << " -> " << c.size() << " elements\n";
    for (int g = t.size(); g < c.size(); ++g) out << "fresh: " << c.id(g) << "\n";
    emit(a, groupoid_text(c), out);
    return 0;
}

int cmd_check_sub(const Args& a, std::ostream& out, int mode) {
    GroupoidTable t = load_groupoid(positional(a, 0, "groupoid file"));
    auto subs = parse_subs(t, a.subs);
    bool all = true;
    for (const auto& s : subs) {
        bool ok = false;
        switch (mode) {
            case 0: ok = is_subgroupoid(t, s); break;
            case 1: ok = is_subgroupoid(t, s) && is_wide(t, s); break;
            case 2: ok = is_normal(t, s); break;
        }
        const char* what = mode == 0 ? "subgroupoid" : mode == 1 ? "wide subgroupoid" : "normal subgroupoid";
        out << what << " {";
        for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << t.id(s[i]);
        out << "}: " << yesno(ok) << "\n";
        all = all && ok;
    }
    return all ? 0 : 1;
}

int cmd_direct_report(const Args& a, std::ostream& out) {
    GroupoidTable t = load_groupoid(positional(a, 0, "groupoid file"));
    auto rep = internal_direct_report(t, parse_subs(t, a.subs));
    out << rep.summary();
    return rep.all_five() ? 0 : 1;
}

int cmd_embed(const Args& a, std::ostream& out) {
    GroupoidTable t = load_groupoid(positional(a, 0, "groupoid file"));
    auto f = embed_direct(t, parse_subs(t, a.subs));
    for (int g = 0; g < t.size(); ++g)
        out << "F(" << t.id(g) << ") = " << f.target.id(f.map[g]) << "\n";
    out << "injective functor onto " << f.target.name << "\n";
    return 0;
}

int cmd_product(const Args& a, std::ostream& out) {
    if (a.positional.size() < 2) throw FormatError("product needs at least two groupoid files");
    std::vector<GroupoidTable> factors;
    for (const auto& path : a.positional) factors.push_back(load_groupoid(path));
    emit(a, groupoid_text(direct_product(factors)), out);
    return 0;
}

int cmd_semidirect(const Args& a, std::ostream& out) {
    GroupoidTable t = load_groupoid(positional(a, 0, "groupoid file"));
    auto act = load_aut_action(positional(a, 1, "autaction file"));
    if (!(act.action.target == t))
        throw FormatError("autaction targets '" + act.action.target.name + "', not '" + t.name + "'");
    emit(a, groupoid_text(semidirect_product(t, act.action)), out);
    return 0;
}

int cmd_trichotomy(const Args& a, std::ostream& out) {
    GroupoidTable t = load_groupoid(positional(a, 0, "groupoid file"));
    auto act = load_aut_action(positional(a, 1, "autaction file"));
    if (!(act.action.target == t))
        throw FormatError("autaction targets '" + act.action.target.name + "', not '" + t.name + "'");
    auto rep = semidirect_trichotomy(t, act.action);
    out << "identity map is a homomorphism: " << yesno(rep.identity_is_homomorphism) << "\n";
    out << "action is trivial:              " << yesno(rep.omega_trivial) << "\n";
    out << "objects x group is normal:      " << yesno(rep.object_part_normal) << "\n";
    if (!rep.consistent()) {
        out << "the three conditions disagree\n";
        return 1;
    }
    return 0;
}

int cmd_pact_validate(const Args& a, std::ostream& out) {
    auto p = load_partial_action(positional(a, 0, "paction file"));
    auto rep = validate_partial_action(p.action);
    if (rep.passed()) {
        out << "valid partial action '" << p.action.name << "': |D| = " << p.action.act.size()
            << ", strict: " << yesno(is_strict(p.action)) << ", global: "
            << yesno(is_global(p.action)) << "\n";
        return 0;
    }
    out << "invalid partial action '" << p.action.name << "':\n" << rep.summary();
    return 1;
}

int cmd_action_groupoid(const Args& a, std::ostream& out) {
    auto p = load_partial_action(positional(a, 0, "paction file"));
    emit(a, groupoid_text(action_groupoid(p.action)), out);
    return 0;
}

int cmd_graph_iso(const Args& a, std::ostream& out) {
    auto p = load_partial_action(positional(a, 0, "paction file"));
    auto f = graph_iso(p.action);
    for (int g = 0; g < f.source.size(); ++g)
        out << "F(" << f.source.id(g) << ") = " << f.target.id(f.map[g]) << "\n";
    out << "isomorphism verified between " << f.source.name << " and " << f.target.name << "\n";
    return 0;
}

int cmd_classify(const Args& a, std::ostream& out) {
    auto lf = load_functor(positional(a, 0, "functor file"));
    auto cls = classify_functor(lf.functor);
    out << "star injective:  " << yesno(cls.star_injective) << "\n";
    out << "star surjective: " << yesno(cls.star_surjective) << "\n";
    out << "covering:        " << yesno(cls.covering()) << "\n";
    return 0;
}

int cmd_induce(const Args& a, std::ostream& out) {
    auto lf = load_functor(positional(a, 0, "functor file"));
    auto p = induced_partial_action(lf.functor);
    emit(a, partial_action_text(p, lf.target_ref), out);
    return 0;
}

int cmd_roundtrip(const Args& a, std::ostream& out) {
    const std::string& path = positional(a, 0, "paction or functor file");
    auto doc = parse_document(read_file(path));
    if (doc.kind == DocKind::paction) {
        auto p = load_partial_action(path);
        auto m = tau(p.action);
        for (const auto& [x, y] : m) out << "tau(" << x << ") = " << y << "\n";
        out << "equivariant bijection verified onto the induced action\n";
        return 0;
    }
    if (doc.kind == DocKind::functor_map) {
        auto lf = load_functor(path);
        auto n = eta(lf.functor);
        for (int g = 0; g < n.source.size(); ++g)
            out << "eta(" << n.source.id(g) << ") = " << n.target.id(n.map[g]) << "\n";
        out << "isomorphism verified onto the action groupoid of the induced action\n";
        return 0;
    }
    throw FormatError("roundtrip expects a paction or functor file");
}

int cmd_globalize(const Args& a, std::ostream& out) {
    const std::string& path = positional(a, 0, "paction file");
    auto p = load_partial_action(path);
    auto gl = globalize(p.action);
    out << "globalization of '" << p.action.name << "': |X| = " << p.action.points()
        << ", |Y| = " << gl.carrier_y.size() << "\n";
    std::ostringstream classes;
    for (const auto& cid : gl.carrier_y) {
        classes << "class " << cid << ":";
        for (const auto& [g, x] : gl.classes.at(cid)) classes << " " << g << "|" << x;
        classes << "\n";
    }
    emit(a, partial_action_text(gl.beta, p.groupoid_ref), out);
    if (!a.classes_out.empty())
        write_file(a.classes_out, classes.str());
    else if (!a.output.empty())
        write_file(a.output + ".classes", classes.str());
    else
        out << classes.str();
    return 0;
}

int cmd_full_dense(const Args& a, std::ostream& out) {
    auto p = load_partial_action(positional(a, 0, "paction file"));
    auto gl = globalize(p.action);
    auto rep = check_full_dense(gl);
    out << "full:  " << yesno(rep.full) << "\n";
    out << "dense: " << yesno(rep.dense) << "\n";
    for (const auto& v : rep.failures) {
        out << v.tag << ": " << v.message << " [";
        for (size_t i = 0; i < v.witnesses.size(); ++i) out << (i ? ", " : "") << v.witnesses[i];
        out << "]\n";
    }
    return rep.full && rep.dense ? 0 : 1;
}

int cmd_universal(const Args& a, std::ostream& out) {
    auto p = load_partial_action(positional(a, 0, "paction file"));
    auto q = load_partial_action(positional(a, 1, "paction file"));
    PointMap j = parse_point_map(a.map_arg);
    auto gl = globalize(p.action);
    auto k = verify_universal(gl, q.action, j);
    for (const auto& [y, z] : k) out << "k(" << y << ") = " << z << "\n";
    out << "unique mediating morphism verified\n";
    return 0;
}

int cmd_dot(const Args& a, std::ostream& out) {
    GroupoidTable t = load_groupoid(positional(a, 0, "groupoid file"));
    std::ostringstream os;
    os << "digraph \"" << t.name << "\" {\n";
    for (int e = 0; e < t.size(); ++e)
        if (t.is_object(e)) os << "  \"" << t.id(e) << "\";\n";
    for (int g = 0; g < t.size(); ++g)
        if (!t.is_object(g))
            os << "  \"" << t.id(t.d(g)) << "\" -> \"" << t.id(t.r(g)) << "\" [label=\"" << t.id(g)
               << "\"];\n";
    os << "}\n";
    emit(a, os.str(), out);
    return 0;
}

}  // namespace

std::string cli_usage() {
    return "usage: gpd <command> [args]\n"
           "  validate <g.gpd>                      check every groupoid axiom\n"
           "  complete <g.gpd> [-o out.gpd]         close a partial table\n"
           "  check-sub <g.gpd> --subs a,b;c,d      subgroupoid test per list\n"
           "  check-wide <g.gpd> --subs ...         wide subgroupoid test\n"
           "  check-normal <g.gpd> --subs ...       normal subgroupoid test\n"
           "  direct-report <g.gpd> --subs ...      five internal direct product conditions\n"
           "  embed <g.gpd> --subs ...              embedding into the direct power\n"
           "  product <a.gpd> <b.gpd> ... [-o out]  direct product\n"
           "  semidirect <g.gpd> <w.aut> [-o out]   twisted product by a group action\n"
           "  trichotomy <g.gpd> <w.aut>            direct-vs-twisted equivalent conditions\n"
           "  pact-validate <p.pact>                check the partial action axioms\n"
           "  action-groupoid <p.pact> [-o out]     build the action groupoid\n"
           "  graph-iso <p.pact>                    action groupoid vs graph groupoid\n"
           "  classify <f.func>                     star injective / star surjective / covering\n"
           "  induce <f.func> [-o out.pact]         partial action induced by a star injection\n"
           "  roundtrip <p.pact|f.func>             verify the equivalence round-trips\n"
           "  globalize <p.pact> [-o out.pact] [--classes out]  universal globalization\n"
           "  full-dense <p.pact>                   image of the embedding is full and dense\n"
           "  universal <p.pact> <q.pact> --map x=y;...  unique mediating morphism\n"
           "  dot <g.gpd> [-o out.dot]              graph description of a groupoid\n";
}

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Args a;
    try {
        a = parse_args(argv);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n" << cli_usage();
        return 2;
    }
    try {
        if (a.command == "validate") return cmd_validate(a, out);
        if (a.command == "complete") return cmd_complete(a, out);
        if (a.command == "check-sub") return cmd_check_sub(a, out, 0);
        if (a.command == "check-wide") return cmd_check_sub(a, out, 1);
        if (a.command == "check-normal") return cmd_check_sub(a, out, 2);
        if (a.command == "direct-report") return cmd_direct_report(a, out);
        if (a.command == "embed") return cmd_embed(a, out);
        if (a.command == "product") return cmd_product(a, out);
        if (a.command == "semidirect") return cmd_semidirect(a, out);
        if (a.command == "trichotomy") return cmd_trichotomy(a, out);
        if (a.command == "pact-validate") return cmd_pact_validate(a, out);
        if (a.command == "action-groupoid") return cmd_action_groupoid(a, out);
        if (a.command == "graph-iso") return cmd_graph_iso(a, out);
        if (a.command == "classify") return cmd_classify(a, out);
        if (a.command == "induce") return cmd_induce(a, out);
        if (a.command == "roundtrip") return cmd_roundtrip(a, out);
        if (a.command == "globalize") return cmd_globalize(a, out);
        if (a.command == "full-dense") return cmd_full_dense(a, out);
        if (a.command == "universal") return cmd_universal(a, out);
        if (a.command == "dot") return cmd_dot(a, out);
        err << "error: unknown command '" << a.command << "'\n" << cli_usage();
        return 2;
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gpd
