// Batch front end: one command per invocation, JSON or plain-text report.
//
// Exit codes: 0 success, 2 budget exceeded, 3 parse error, 4 precondition
// violation (including bad command-line usage).

#include "gtop/bridge.hpp"
#include "gtop/homology.hpp"
#include "gtop/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace gtop;
using nlohmann::json;

namespace {

struct Common {
    std::uint64_t budget = default_budget;
    int max_dim = 4;
    std::string group_file;
    bool subgroup_all = false;
    std::string format = "json";
    std::uint64_t seed = 0;
    bool seeded = false;
    std::string output;
};

Common common;

void add_common(CLI::App* cmd)
{
    cmd->add_option("--budget", common.budget, "search node budget")->check(CLI::PositiveNumber);
    cmd->add_option("--max-dim", common.max_dim, "homology dimension cap")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", common.format, "report format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("-o,--output", common.output, "write the report here instead of stdout");
}

void add_group(CLI::App* cmd)
{
    cmd->add_option("--group", common.group_file, "generators in image notation over the carrier labels");
}

std::optional<GroupAction> load_group(const std::vector<std::string>& carrier)
{
    if (common.group_file.empty())
        return std::nullopt;
    return io::parse_group(io::read_file(common.group_file), carrier);
}

GroupAction load_group_or_trivial(const std::vector<std::string>& carrier)
{
    auto g = load_group(carrier);
    return g ? *g : GroupAction::trivial_on(carrier.size());
}

json group_json(const FiniteGroup& g)
{
    return {{"order", g.size()}, {"elements", g.labels()}};
}

json subgroup_json(const FiniteGroup& g, const Subgroup& s)
{
    json out = json::array();
    for (int x : s)
        out.push_back(g.label(x));
    return out;
}

json certificate_json(const PosetCertificate& c)
{
    json out = json::array();
    for (const auto& s : c)
        out.push_back({{"elements", s.elements},
                       {"witnesses", s.witnesses},
                       {"kind", s.kind == BeatKind::upper ? "upper" : "lower"}});
    return out;
}

json certificate_json(const ComplexCertificate& c)
{
    json out = json::array();
    for (const auto& s : c)
        out.push_back({{"vertices", s.vertices}, {"witnesses", s.witnesses}});
    return out;
}

json graph_summary(const Graph& g)
{
    return {{"vertices", g.size()}, {"edges", g.edge_count()}, {"looped", g.looped_vertices().count()}};
}

bool is_poset_text(const std::string& text)
{
    std::istringstream in(text);
    std::string w;
    while (in >> w) {
        if (w.front() == '#') {
            std::getline(in, w);
            continue;
        }
        return w == "el" || w == "le";
    }
    return false;
}

Subgroup parse_subgroup(const FiniteGroup& g, const std::string& text)
{
    Subgroup s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int x = 0;
        try {
            x = std::stoi(item);
        } catch (const std::exception&) {
            throw ParseError("subgroup elements are comma-separated indices");
        }
        if (x < 0 || x >= static_cast<int>(g.size()))
            throw PreconditionError("subgroup element " + item + " is out of range");
        s.push_back(x);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!is_subgroup(g, s))
        throw PreconditionError("the listed elements do not form a subgroup");
    return s;
}

// ------------------------------------------------------------ commands

json cmd_gen(const std::string& family, const std::vector<int>& params, std::string& payload)
{
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw PreconditionError("family '" + family + "' takes " + std::to_string(n) + " parameter(s)");
    };
    const bool text = common.format == "text";
    auto graph_out = [&](const Graph& g) {
        payload = text ? io::graph_to_text(g) : io::graph_to_json(g);
        return json{{"kind", "graph"}};
    };
    auto complex_out = [&](const SimplicialComplex& k) {
        payload = text ? io::complex_to_text(k) : io::complex_to_json(k);
        return json{{"kind", "complex"}};
    };
    if (family == "complete")
        return need(1), graph_out(complete_graph(params[0]));
    if (family == "cycle")
        return need(1), graph_out(cycle_graph(params[0]));
    if (family == "path")
        return need(1), graph_out(path_graph(params[0]));
    if (family == "sigma")
        return need(1), graph_out(sigma_graph(params[0]));
    if (family == "point")
        return need(0), graph_out(looped_point());
    if (family == "stable-kneser")
        return need(2), graph_out(stable_kneser_graph(params[0], params[1]));
    if (family == "simplex")
        return need(1), complex_out(simplex_complex(params[0]));
    if (family == "boundary")
        return need(1), complex_out(boundary_complex(params[0]));
    if (family == "horn")
        return need(2), complex_out(horn_complex(params[0], params[1]));
    throw PreconditionError("unknown family '" + family + "'");
}

json cmd_hom(const std::string& gfile, const std::string& hfile, std::string& payload)
{
    Graph g = io::parse_graph(io::read_file(gfile));
    Graph h = io::parse_graph(io::read_file(hfile));
    auto action = load_group(g.labels());
    HomOptions opts;
    opts.budget = common.budget;
    auto hom = hom_complex(g, h, action ? &*action : nullptr, opts);
    if (common.format == "text") {
        payload = io::hom_poset_to_text(hom);
        return {};
    }
    json out{{"elements", hom.elements.size()},
             {"components", component_count(hom.poset)},
             {"reduced_betti", hom.elements.empty() ? json::array() : json(poset_reduced_betti(hom.poset, common.max_dim))}};
    if (action) {
        json orbits_by = json::array();
        for (const auto& sub : subgroup_lattice(action->group)) {
            if (!common.subgroup_all && sub.size() != action->group.size())
                continue;
            auto fixed = fixed_points(*hom.action, sub);
            orbits_by.push_back({{"subgroup", subgroup_json(action->group, sub)},
                                 {"fixed_elements", fixed.size()},
                                 {"fixed_components", component_count(hom.poset.induced(fixed))}});
        }
        out["fixed"] = orbits_by;
    }
    return out;
}

json cmd_box(const std::string& gfile)
{
    Graph g = io::parse_graph(io::read_file(gfile));
    HomOptions opts;
    opts.budget = common.budget;
    auto box = box_complex(g, opts);
    auto hom = hom_complex(complete_graph(2), g, nullptr, opts);
    bool iso = validate_box_isomorphism(box, hom);
    return {{"elements", box.elements.size()},
            {"hom_k2_elements", hom.elements.size()},
            {"isomorphism_verified", iso},
            {"verdict", iso ? "VERIFIED" : "REFUTED"},
            {"reduced_betti", box.elements.empty() ? json::array() : json(poset_reduced_betti(box.poset, common.max_dim))}};
}

json cmd_core(const std::string& gfile, std::string& payload)
{
    Graph g = io::parse_graph(io::read_file(gfile));
    std::mt19937_64 rng(common.seed);
    auto fa = fold_analysis(g, common.seeded ? &rng : nullptr);
    json folds = json::array();
    for (const auto& f : fa.folds)
        folds.push_back({{"removed", g.label(f.removed)}, {"witness", g.label(f.witness)}});
    if (common.format == "text")
        payload = io::graph_to_text(fa.core);
    return {{"input", graph_summary(g)},
            {"stiff", fa.folds.empty()},
            {"folds", folds},
            {"core", json::parse(io::graph_to_json(fa.core))}};
}

json cmd_collapse(const std::string& pfile, const std::string& qfile, bool exhaustive, bool exact)
{
    const std::string text = io::read_file(pfile);
    std::mt19937_64 rng(common.seed);
    if (is_poset_text(text)) {
        Poset p = io::parse_poset(text);
        std::optional<Poset> q;
        if (!qfile.empty())
            q = io::parse_poset(io::read_file(qfile));
        auto action = load_group(p.labels());
        PosetCollapseOptions opts;
        opts.budget = common.budget;
        opts.exhaustive = exhaustive;
        opts.rng = common.seeded ? &rng : nullptr;
        auto r = strong_collapse_decide(p, q, action ? &*action : nullptr, opts);
        json out{{"kind", "poset"},
                 {"elements", p.size()},
                 {"residue", r.residue.labels()},
                 {"certificate", certificate_json(r.certificate)}};
        if (q)
            out["verdict"] = r.yes ? "YES" : "NO";
        else
            out["core_size"] = r.residue.size();
        if (r.exhaustive_answer)
            out["exhaustive_agrees"] = *r.exhaustive_answer == r.yes;
        return out;
    }
    SimplicialComplex k = io::parse_complex(text);
    SimplicialComplex l = qfile.empty() ? empty_complex() : io::parse_complex(io::read_file(qfile));
    auto action = load_group(k.labels());
    ComplexCollapseOptions opts;
    opts.budget = common.budget;
    opts.exact = exact;
    opts.rng = common.seeded ? &rng : nullptr;
    auto r = strong_collapse_complex(k, l, action ? &*action : nullptr, opts);
    const char* verdict = r.verdict == CollapseVerdict::yes ? "YES" : r.verdict == CollapseVerdict::no ? "NO" : "STUCK";
    return {{"kind", "complex"},
            {"verdict", verdict},
            {"exact", r.exact},
            {"residue", json::parse(io::complex_to_json(r.residue))["simplices"]},
            {"certificate", certificate_json(r.certificate)}};
}

json cmd_sd(const std::string& kfile, int times, std::string& payload)
{
    SimplicialComplex k = io::parse_complex(io::read_file(kfile));
    if (times < 0)
        throw PreconditionError("--times must be non-negative");
    if (!subdivision_size(k, times, 1'000'000))
        throw PreconditionError("subdivision exceeds 1e6 simplices");
    auto action = load_group(k.labels());
    auto sd = barycentric_subdivision(k, action, times);
    if (common.format == "text")
        payload = io::complex_to_text(sd.complex);
    return {{"vertices", sd.complex.size()},
            {"f_vector", sd.complex.f_vector()},
            {"equivariant", sd.action.has_value()},
            {"complex", json::parse(io::complex_to_json(sd.complex))["simplices"]}};
}

json cmd_ndr(const std::string& kfile, const std::string& lfile, int r)
{
    SimplicialComplex k = io::parse_complex(io::read_file(kfile));
    SimplicialComplex l = io::parse_complex(io::read_file(lfile));
    auto action = load_group(k.labels());
    auto res = ndr_builder(k, l, action, r);
    bool ok = res.containment_verified && res.certificate_verified;
    return {{"subdivisions", res.subdivisions},
            {"radius", res.radius},
            {"subdivided_k_vertices", res.subdivided_k.size()},
            {"a_vertices", res.a.size()},
            {"a_f_vector", res.a.f_vector()},
            {"containment_verified", res.containment_verified},
            {"certificate_verified", res.certificate_verified},
            {"certificate_steps", res.certificate.size()},
            {"verdict", ok ? "VERIFIED" : "REFUTED"}};
}

json report_json(const ConditionReport& r)
{
    json out{{"condition", std::string(1, r.condition)},
             {"verdict", to_string(r.verdict)},
             {"reason", r.reason},
             {"diameter", r.diameter},
             {"gate_k", r.gate_k},
             {"group_order", r.group_order}};
    if (r.condition == 'B') {
        out["stiff"] = r.stiff;
        out["automorphisms"] = r.automorphism_count;
        out["endomorphisms"] = r.endomorphism_count;
        out["action_injective"] = r.action_injective;
    }
    return out;
}

json cmd_check(char which, const std::string& tfile)
{
    Graph t = io::parse_graph(io::read_file(tfile));
    RightGraph rt{t, load_group_or_trivial(t.labels())};
    if (which == 'A') {
        auto r = check_condition_A(rt, common.budget, common.max_dim);
        json out = report_json(r);
        json ev = json::array();
        for (const auto& e : r.evidence)
            ev.push_back({{"quotient_by", subgroup_json(rt.action.group, e.quotient_by)},
                          {"fixed_by", subgroup_json(rt.action.group, e.fixed_by)},
                          {"fixed_cosets", e.fixed_cosets},
                          {"components", e.components},
                          {"bijective", e.bijective},
                          {"core_sizes", e.core_sizes},
                          {"note", e.note}});
        out["evidence"] = ev;
        return out;
    }
    return report_json(check_condition_B(rt, common.budget));
}

json cmd_bound(const std::string& gfile)
{
    Graph g = io::parse_graph(io::read_file(gfile));
    auto b = chromatic_lower_bound(g, common.max_dim, common.budget);
    return {{"bound", b.bound},
            {"reduced_betti", b.betti},
            {"box_elements", b.box_size},
            {"core_elements", b.core_size},
            {"vanished_through_cap", b.vanished_through_cap},
            {"looped", b.looped}};
}

json cmd_sing(const std::string& tfile, const std::string& gfile)
{
    Graph t = io::parse_graph(io::read_file(tfile));
    Graph g = io::parse_graph(io::read_file(gfile));
    HomOptions opts;
    opts.budget = common.budget;
    auto sing = pi0_sing(t, g, common.budget);
    auto hom = pi0_hom(t, g, opts);
    return {{"pi0_sing", sing}, {"pi0_hom", hom}, {"verdict", sing == hom ? "AGREE" : "DISAGREE"}};
}

json cmd_gencof(const std::string& tfile, int k, int n, const std::string& kind, int horn_vertex,
                const std::string& subgroup, std::string& payload)
{
    Graph t = io::parse_graph(io::read_file(tfile));
    RightGraph rt{t, load_group_or_trivial(t.labels())};
    const FiniteGroup& group = rt.action.group;
    std::vector<Subgroup> subs;
    if (common.subgroup_all)
        subs = subgroup_lattice(group);
    else
        subs.push_back(subgroup.empty() ? Subgroup{group.identity()} : parse_subgroup(group, subgroup));
    std::vector<CofibrationKind> kinds;
    if (kind == "boundary" || kind == "all")
        kinds.push_back(CofibrationKind::boundary);
    if ((kind == "horn" || kind == "all") && n >= 1)
        kinds.push_back(CofibrationKind::horn);
    json maps = json::array();
    for (const auto& s : subs)
        for (auto kd : kinds) {
            auto gm = generating_cofibration(rt, k, n, s, kd, horn_vertex);
            json m{{"subgroup", subgroup_json(group, s)},
                   {"kind", kd == CofibrationKind::boundary ? "boundary" : "horn"},
                   {"source", graph_summary(gm.source)},
                   {"target", graph_summary(gm.target)},
                   {"injective", is_injective(gm.map)},
                   {"induced", is_induced_subgraph(gm.source, gm.target)},
                   {"homomorphism", is_homomorphism(gm.source, gm.target, gm.map)}};
            if (gm.target.size() <= 64)
                m["target_graph"] = json::parse(io::graph_to_json(gm.target));
            maps.push_back(m);
            if (common.format == "text")
                payload += io::graph_to_text(gm.target);
        }
    return {{"maps", maps}};
}

json cmd_betti(const std::string& file)
{
    const std::string text = io::read_file(file);
    std::vector<std::size_t> b;
    if (is_poset_text(text)) {
        Poset p = io::parse_poset(text);
        if (p.empty())
            throw PreconditionError("reduced homology of the empty poset is not defined here");
        b = poset_reduced_betti(p, common.max_dim);
    } else {
        SimplicialComplex k = io::parse_complex(text);
        if (k.empty())
            throw PreconditionError("reduced homology of the empty complex is not defined here");
        b = reduced_betti(k, common.max_dim);
    }
    return {{"reduced_betti", b}};
}

VertexMap parse_map(const std::string& text, const Graph& from, const Graph& to)
{
    VertexMap f(from.size(), -1);
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream words(line);
        std::string a, b, extra;
        if (!(words >> a) || a.front() == '#')
            continue;
        if (!(words >> b) || (words >> extra))
            throw ParseError("line " + std::to_string(number) + ": expected '<source> <target>'");
        auto x = from.find(a);
        auto y = to.find(b);
        if (!x || !y)
            throw ParseError("line " + std::to_string(number) + ": unknown label");
        f[*x] = *y;
    }
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] < 0)
            throw ParseError("the map leaves '" + from.label(static_cast<int>(v)) + "' unassigned");
    return f;
}

json cmd_pushout(const std::string& gfile, const std::string& hfile, const std::string& yfile,
                 const std::string& mapfile, bool exact, std::string& payload)
{
    Graph g = io::parse_graph(io::read_file(gfile));
    Graph h = io::parse_graph(io::read_file(hfile));
    Graph y = io::parse_graph(io::read_file(yfile));
    VertexMap f = parse_map(io::read_file(mapfile), h, y);
    HomOptions opts;
    opts.budget = common.budget;
    auto r = pushout_retract(g, h, y, f, exact, opts);
    if (common.format == "text")
        payload = io::graph_to_text(r.pushout.x);
    const char* source = r.source_retract.verdict == RetractVerdict::yes   ? "YES"
                         : r.source_retract.verdict == RetractVerdict::no ? "NO"
                                                                          : "STUCK";
    const char* verdict = r.path_valid ? "VERIFIED" : r.source_retract.verdict == RetractVerdict::yes ? "REFUTED"
                                                                                                      : "INCONCLUSIVE";
    return {{"pushout", graph_summary(r.pushout.x)},
            {"source_retract", source},
            {"path_length", r.path.size()},
            {"path_valid", r.path_valid},
            {"verdict", verdict}};
}

std::string to_text(const json& report)
{
    std::string out;
    for (auto it = report.begin(); it != report.end(); ++it)
        out += it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
    return out;
}

void emit(const json& report, const std::string& payload)
{
    std::string body;
    if (common.format == "json")
        body = payload.empty() ? report.dump(2) + "\n" : payload;
    else
        body = payload.empty() ? to_text(report) : payload;
    if (common.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(common.output, std::ios::binary);
    if (!out)
        throw PreconditionError("cannot write '" + common.output + "'");
    out << body;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"finite graph homotopy toolkit"};
    app.require_subcommand(1);

    std::string a, b, c, d, family, kind = "all", subgroup;
    std::vector<int> params;
    int times = 1, r = 2, k = 3, n = 0, horn_vertex = 0;
    bool exhaustive = false, exact = false;

    auto* gen = app.add_subcommand("gen", "write a standard graph or complex");
    gen->add_option("family", family, "complete|cycle|path|sigma|point|stable-kneser|simplex|boundary|horn")->required();
    gen->add_option("params", params, "family parameters");
    add_common(gen);

    auto* hom = app.add_subcommand("hom", "Hom(G,H) summary or export");
    hom->add_option("G", a)->required();
    hom->add_option("H", b)->required();
    hom->add_flag("--subgroup-all", common.subgroup_all, "report fixed subposets for every subgroup");
    add_group(hom);
    add_common(hom);

    auto* box = app.add_subcommand("box", "box complex and its isomorphism with Hom(K2,G)");
    box->add_option("G", a)->required();
    add_common(box);

    auto* core = app.add_subcommand("core", "fold a graph to its stiff core");
    core->add_option("G", a)->required();
    core->add_option("--seed", common.seed, "random fold order");
    add_common(core);

    auto* collapse = app.add_subcommand("collapse", "strong collapse of a poset or complex");
    collapse->add_option("P", a, "poset or complex")->required();
    collapse->add_option("Q", b, "subobject; omit for the core");
    collapse->add_flag("--exhaustive", exhaustive, "cross-check posets by backtracking");
    collapse->add_flag("--exact", exact, "exhaustive search for complexes when greedy is stuck");
    collapse->add_option("--seed", common.seed, "random removal order");
    add_group(collapse);
    add_common(collapse);

    auto* sd = app.add_subcommand("sd", "iterated barycentric subdivision");
    sd->add_option("K", a)->required();
    sd->add_option("--times", times, "number of subdivisions");
    add_group(sd);
    add_common(sd);

    auto* ndr = app.add_subcommand("ndr", "NDR neighbourhood with its collapse certificate");
    ndr->add_option("K", a)->required();
    ndr->add_option("L", b)->required();
    ndr->add_option("-r,--subdivisions", r, "number of subdivisions (>= 2)");
    add_group(ndr);
    add_common(ndr);

    auto* check_a = app.add_subcommand("check-a", "condition (A) for a group graph");
    check_a->add_option("T", a)->required();
    add_group(check_a);
    add_common(check_a);

    auto* check_b = app.add_subcommand("check-b", "condition (B) for a group graph");
    check_b->add_option("T", a)->required();
    add_group(check_b);
    add_common(check_b);

    auto* bound = app.add_subcommand("bound", "homological lower bound on the chromatic number");
    bound->add_option("G", a)->required();
    add_common(bound);

    auto* sing = app.add_subcommand("sing-pi0", "components of Sing(T,G) and Hom(T,G)");
    sing->add_option("T", a)->required();
    sing->add_option("G", b)->required();
    add_common(sing);

    auto* gencof = app.add_subcommand("gencof", "generating cofibrations");
    gencof->add_option("T", a)->required();
    gencof->add_option("-k", k, "subdivisions");
    gencof->add_option("-n", n, "simplex dimension");
    gencof->add_option("--kind", kind)->check(CLI::IsMember({"boundary", "horn", "all"}));
    gencof->add_option("--horn-vertex", horn_vertex);
    gencof->add_option("--subgroup", subgroup, "comma-separated element indices");
    gencof->add_flag("--subgroup-all", common.subgroup_all, "every subgroup");
    add_group(gencof);
    add_common(gencof);

    auto* betti = app.add_subcommand("betti", "reduced GF(2) betti numbers");
    betti->add_option("X", a, "complex or poset")->required();
    add_common(betti);

    auto* pushout = app.add_subcommand("pushout", "transport a retract of H in G to the pushout");
    pushout->add_option("G", a)->required();
    pushout->add_option("H", b)->required();
    pushout->add_option("Y", c)->required();
    pushout->add_option("MAP", d, "lines '<h-label> <y-label>'")->required();
    pushout->add_flag("--exact", exact, "exact retract search");
    add_common(pushout);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    }
    for (auto* cmd : app.get_subcommands())
        if (auto* opt = cmd->get_option_no_throw("--seed"); opt && opt->count() > 0)
            common.seeded = true;

    try {
        json report;
        std::string payload;
        if (*gen)
            report = cmd_gen(family, params, payload);
        else if (*hom)
            report = cmd_hom(a, b, payload);
        else if (*box)
            report = cmd_box(a);
        else if (*core)
            report = cmd_core(a, payload);
        else if (*collapse)
            report = cmd_collapse(a, b, exhaustive, exact);
        else if (*sd)
            report = cmd_sd(a, times, payload);
        else if (*ndr)
            report = cmd_ndr(a, b, r);
        else if (*check_a)
            report = cmd_check('A', a);
        else if (*check_b)
            report = cmd_check('B', a);
        else if (*bound)
            report = cmd_bound(a);
        else if (*sing)
            report = cmd_sing(a, b);
        else if (*gencof)
            report = cmd_gencof(a, k, n, kind, horn_vertex, subgroup, payload);
        else if (*betti)
            report = cmd_betti(a);
        else if (*pushout)
            report = cmd_pushout(a, b, c, d, exact, payload);
        emit(report, payload);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
