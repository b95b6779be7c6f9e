#include "gtop/bridge.hpp"

#include "gtop/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gtop {

Graph complex_to_graph(const SimplicialComplex& k)
{
    Graph g(k.labels());
    for (int v = 0; v < static_cast<int>(k.size()); ++v)
        g.add_edge(v, v);
    for (const auto& f : k.facets())
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                g.add_edge(f[i], f[j]);
    return g;
}

namespace {

Perm right_perm(const GroupAction& action, int g)
{
    return action.side == Side::right ? action.perm[g] : action.perm[action.group.inverse(g)];
}

Subgroup whole_group(const FiniteGroup& g)
{
    Subgroup all(g.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

void check_right_graph(const RightGraph& t)
{
    if (auto v = validate_action(t.action, t.t); !v)
        throw PreconditionError("invalid action on T: " + v.message);
}

} // namespace

ATGraph a_t(const SimplicialComplex& k, const GroupAction* k_action, const RightGraph& t)
{
    check_right_graph(t);
    const FiniteGroup& group = t.action.group;
    GroupAction trivial = GroupAction::trivial_on(k.size(), group);
    const GroupAction& ka = k_action ? *k_action : trivial;
    if (!(ka.group == group))
        throw PreconditionError("A_T: the complex and T carry different groups");
    if (k.size() > 0)
        if (auto v = validate_action(ka, k); !v)
            throw PreconditionError("A_T: invalid action on the complex: " + v.message);

    const std::size_t nt = t.t.size(), nk = k.size();
    Graph product = tensor_product(t.t, complex_to_graph(k));
    ATGraph out;
    if (product.empty()) {
        out.graph = product;
        return out;
    }
    GroupAction act{group, Side::left, {}};
    for (std::size_t g = 0; g < group.size(); ++g) {
        Perm tr = right_perm(t.action, group.inverse(static_cast<int>(g)));
        Perm kl = ka.left_perm(static_cast<int>(g));
        Perm p(nt * nk);
        for (std::size_t x = 0; x < nt; ++x)
            for (std::size_t v = 0; v < nk; ++v)
                p[x * nk + v] = static_cast<int>(static_cast<std::size_t>(tr[x]) * nk + static_cast<std::size_t>(kl[v]));
        act.perm.push_back(std::move(p));
    }
    auto q = quotient_and_fixed(product, act, whole_group(group));
    std::vector<std::string> labels;
    for (const auto& orbit : q.orbits) {
        std::string best = product.label(orbit.front());
        for (int m : orbit)
            best = std::min(best, product.label(m));
        labels.push_back(best);
    }
    out.graph = Graph::from_edges(std::move(labels), q.quotient.edges());
    out.projection = q.projection;
    return out;
}

ATPair a_t_pair(const SimplicialComplex& k, const SimplicialComplex& l, const GroupAction* k_action,
                const RightGraph& t)
{
    if (!is_subcomplex(l, k))
        throw PreconditionError("A_T pair: L is not a subcomplex of K");
    ATPair out;
    out.big = a_t(k, k_action, t);
    if (k_action) {
        auto la = restrict_action(*k_action, k, l);
        out.small = a_t(l, &la, t);
    } else {
        out.small = a_t(l, nullptr, t);
    }
    out.inclusion = embed_vertices(out.small.graph, out.big.graph);
    return out;
}

GeneratingMap generating_cofibration(const RightGraph& t, int k, int n, const Subgroup& sub, CofibrationKind kind,
                                     int horn_vertex, std::size_t cap)
{
    if (k < 0 || n < 0)
        throw PreconditionError("generating map needs k >= 0 and n >= 0");
    const FiniteGroup& group = t.action.group;
    auto big = coset_product(group, sub, simplex_complex(n));
    SimplicialComplex part =
        kind == CofibrationKind::boundary ? boundary_complex(n) : horn_complex(n, horn_vertex);
    auto small = coset_product(group, sub, part);
    if (!subdivision_size(big.complex, k, cap))
        throw PreconditionError("generating map: Sd^" + std::to_string(k) + " exceeds " + std::to_string(cap) +
                                " simplices");
    SimplicialComplex small_k = in_host_order(big.complex, small.complex);
    auto small_action = restrict_action(big.action, big.complex, small_k);
    auto sd_big = barycentric_subdivision(big.complex, big.action, k);
    auto sd_small = barycentric_subdivision(small_k, small_action, k);
    auto pair = a_t_pair(sd_big.complex, sd_small.complex, &*sd_big.action, t);
    return {pair.small.graph, pair.big.graph, pair.inclusion};
}

// ------------------------------------------------------------ conditions

std::string to_string(ConditionVerdict v)
{
    switch (v) {
    case ConditionVerdict::verified:
        return "VERIFIED";
    case ConditionVerdict::refuted:
        return "REFUTED";
    default:
        return "INCONCLUSIVE";
    }
}

int diameter_gate(int d)
{
    int k = 2;
    while ((1L << (k - 2)) <= d)
        ++k;
    return k;
}

namespace {

void check_condition_input(const RightGraph& t)
{
    check_right_graph(t);
    if (t.t.edge_count() == 0 || !is_connected(t.t))
        throw PreconditionError("condition checks need a connected T with at least one edge");
}

std::string subgroup_text(const FiniteGroup& g, const Subgroup& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + g.label(s[i]);
    return out + "}";
}

} // namespace

ConditionReport check_condition_A(const RightGraph& t, std::uint64_t budget, int max_dim)
{
    check_condition_input(t);
    ConditionReport report;
    report.condition = 'A';
    report.diameter = diameter(t.t);
    report.gate_k = diameter_gate(report.diameter);
    const FiniteGroup& group = t.action.group;
    report.group_order = group.size();
    auto lattice = subgroup_lattice(group);

    bool all_verified = true;
    try {
        for (const auto& gp : lattice) {
            auto quotient = quotient_and_fixed(t.t, t.action, gp);
            HomOptions opts;
            opts.budget = budget;
            auto hom = hom_complex(t.t, quotient.quotient, &t.action, opts);
            auto cosets = left_cosets(group, gp);
            auto coset_act = coset_action(group, gp);
            // unit map: coset of g -> p o alpha_g
            std::vector<int> unit;
            for (const auto& c : cosets) {
                Perm a = right_perm(t.action, c.front());
                VertexMap f(t.t.size());
                for (std::size_t v = 0; v < f.size(); ++v)
                    f[v] = quotient.projection[a[v]];
                unit.push_back(*hom.index_of(as_multihom(f, quotient.quotient.size())));
            }
            for (const auto& gpp : lattice) {
                SubgroupEvidence ev;
                ev.quotient_by = gp;
                ev.fixed_by = gpp;
                auto fixed_cosets = fixed_points(coset_act, gpp);
                auto fixed_elems = fixed_points(*hom.action, gpp);
                Poset fixed = hom.poset.induced(fixed_elems);
                auto comp = poset_components(fixed);
                ev.fixed_cosets = fixed_cosets.size();
                ev.components = component_count(fixed);
                std::map<int, int> pos;
                for (std::size_t i = 0; i < fixed_elems.size(); ++i)
                    pos[fixed_elems[i]] = static_cast<int>(i);
                std::vector<int> hit(ev.components, 0);
                bool injective = true;
                for (int c : fixed_cosets) {
                    int idx = comp[pos.at(unit[c])];
                    if (hit[idx]++)
                        injective = false;
                }
                ev.bijective = injective && ev.fixed_cosets == ev.components;
                if (!ev.bijective) {
                    ev.note = "pi0 mismatch: " + std::to_string(ev.fixed_cosets) + " fixed cosets, " +
                              std::to_string(ev.components) + " components";
                    report.evidence.push_back(std::move(ev));
                    report.verdict = ConditionVerdict::refuted;
                    report.reason = "quotient by " + subgroup_text(group, gp) + ", fixed by " +
                                    subgroup_text(group, gpp) + ": " + report.evidence.back().note;
                    return report;
                }
                for (std::size_t c = 0; c < ev.components; ++c) {
                    std::vector<int> members;
                    for (std::size_t i = 0; i < comp.size(); ++i)
                        if (comp[i] == static_cast<int>(c))
                            members.push_back(static_cast<int>(i));
                    Poset part = fixed.induced(members);
                    auto core = strong_collapse_decide(part, std::nullopt);
                    ev.core_sizes.push_back(core.residue.size());
                    ev.certificates.push_back(core.certificate);
                    if (core.residue.size() == 1)
                        continue;
                    auto b = poset_reduced_betti(core.residue, max_dim);
                    ev.betti.push_back(b);
                    if (std::any_of(b.begin(), b.end(), [](std::size_t x) { return x != 0; })) {
                        ev.note = "component with non-zero reduced homology";
                        report.evidence.push_back(std::move(ev));
                        report.verdict = ConditionVerdict::refuted;
                        report.reason = "quotient by " + subgroup_text(group, gp) + ", fixed by " +
                                        subgroup_text(group, gpp) + ": " + report.evidence.back().note;
                        return report;
                    }
                    all_verified = false;
                    ev.note = "component core is not a point but is acyclic through the cap";
                }
                report.evidence.push_back(std::move(ev));
            }
        }
    } catch (const BudgetExceeded& e) {
        report.verdict = ConditionVerdict::inconclusive;
        report.reason = e.what();
        return report;
    }
    report.verdict = all_verified ? ConditionVerdict::verified : ConditionVerdict::inconclusive;
    report.reason = all_verified ? "every fixed component collapses to the image of its coset"
                                 : "some fixed component is acyclic but not collapsible";
    return report;
}

ConditionReport check_condition_B(const RightGraph& t, std::uint64_t budget)
{
    check_condition_input(t);
    ConditionReport report;
    report.condition = 'B';
    report.diameter = diameter(t.t);
    report.gate_k = diameter_gate(report.diameter);
    const FiniteGroup& group = t.action.group;
    report.group_order = group.size();
    report.stiff = is_stiff(t.t);
    if (!report.stiff) {
        report.verdict = ConditionVerdict::inconclusive;
        report.reason = "T is not stiff; fold it to its core first";
        return report;
    }
    try {
        Budget b(budget, "endomorphism enumeration");
        auto analysis = endo_auto_analysis(t.t, b);
        report.automorphism_count = analysis.automorphisms.perms.size();
        report.endomorphism_count = analysis.endomorphism_count;
        std::vector<Perm> images;
        for (std::size_t g = 0; g < group.size(); ++g)
            images.push_back(right_perm(t.action, static_cast<int>(g)));
        std::sort(images.begin(), images.end());
        report.action_injective = std::adjacent_find(images.begin(), images.end()) == images.end();
        const bool onto = report.action_injective && images.size() == report.automorphism_count;
        // automorphisms of a stiff graph are isolated points of Hom(T,T)
        if (!report.action_injective) {
            report.verdict = ConditionVerdict::refuted;
            report.reason = "two group elements act alike, so their images share an isolated point of Hom(T,T)";
        } else if (!onto) {
            report.verdict = ConditionVerdict::refuted;
            report.reason = "pi0 mismatch: " + std::to_string(report.automorphism_count) +
                            " automorphisms are isolated points but the group has " + std::to_string(group.size()) +
                            " elements";
        } else if (!analysis.all_endomorphisms_are_automorphisms) {
            report.verdict = ConditionVerdict::refuted;
            report.reason = "pi0 mismatch: an endomorphism that is not an automorphism lies outside the image";
        } else {
            report.verdict = ConditionVerdict::verified;
            report.reason = "T is stiff, the group maps onto Aut(T) bijectively and every endomorphism is an "
                            "automorphism";
        }
    } catch (const BudgetExceeded& e) {
        report.verdict = ConditionVerdict::inconclusive;
        report.reason = e.what();
    }
    return report;
}

// --------------------------------------------------------- chromatic bound

ChromaticBound chromatic_lower_bound(const Graph& g, int cap, std::uint64_t budget)
{
    if (cap < 0)
        throw PreconditionError("dimension cap must be non-negative");
    ChromaticBound out;
    out.looped = g.looped_vertices().any();
    HomOptions opts;
    opts.budget = budget;
    auto box = box_complex(g, opts);
    out.box_size = box.elements.size();
    if (box.elements.empty()) {
        out.bound = 1;
        return out;
    }
    auto core = strong_collapse_decide(box.poset, std::nullopt).residue;
    out.core_size = core.size();
    for (int d = 0; d <= cap; ++d) {
        auto b = poset_reduced_betti(core, d);
        if (static_cast<int>(b.size()) <= d) {
            out.betti = b;
            break; // the order complex has no cells in degree d or above
        }
        out.betti = b;
        if (b[d] != 0) {
            out.bound = d + 2;
            return out;
        }
    }
    out.vanished_through_cap = true;
    out.bound = cap + 3;
    return out;
}

// ---------------------------------------------------------- NDR transfer

PushoutRetract pushout_retract(const Graph& g, const Graph& h, const Graph& y, const VertexMap& f, bool exact,
                               const HomOptions& options)
{
    PushoutRetract out;
    out.pushout = pushout_attach(g, h, y, f);
    out.source_retract = def_retract(g, h, exact, options);
    if (out.source_retract.verdict != RetractVerdict::yes)
        return out;
    const Graph& x = out.pushout.x;
    const auto in_h = embed_vertices(h, g);
    std::vector<char> is_h(g.size(), 0);
    for (int v : in_h)
        is_h[v] = 1;
    for (const auto& eta : out.source_retract.path) {
        MultiHom phi(x.size(), Bits(x.size()));
        for (std::size_t v = 0; v < y.size(); ++v)
            phi[out.pushout.from_y[v]].set(out.pushout.from_y[v]);
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (is_h[v])
                continue;
            eta[v].for_each([&](int w) { phi[out.pushout.from_g[v]].set(out.pushout.from_g[w]); });
        }
        out.path.push_back(std::move(phi));
    }
    out.path_valid = validate_retract_path(x, x.induced(out.pushout.from_y), out.path);
    return out;
}

namespace {

bool retract_holds(const Graph& g, const Graph& h)
{
    auto r = def_retract(g, h, false);
    if (r.verdict == RetractVerdict::yes)
        return validate_retract_path(g, h, r.path);
    if (g.size() - h.size() <= 6)
        return def_retract(g, h, true).verdict == RetractVerdict::yes;
    return false;
}

} // namespace

NdrTransferReport ndr_transfer(const SimplicialComplex& k, const SimplicialComplex& l, const GroupAction* k_action,
                               const RightGraph& t, int r, int subdivisions, const Graph* y, const VertexMap* f)
{
    if (r < 0)
        throw PreconditionError("neighbourhood radius must be non-negative");
    NdrTransferReport out;
    auto pair = a_t_pair(k, l, k_action, t);
    auto lhs = graph_neighborhood(pair.big.graph, pair.small.graph, r);
    auto nu = complex_neighborhood(k, l, r);
    ATGraph rhs;
    if (k_action) {
        auto na = restrict_action(*k_action, k, nu);
        rhs = a_t(nu, &na, t);
    } else {
        rhs = a_t(nu, nullptr, t);
    }
    out.containment = is_subgraph(lhs, rhs.graph);

    if (subdivisions >= 2) {
        std::optional<GroupAction> action;
        if (k_action)
            action = *k_action;
        auto ndr = ndr_builder(k, l, action, subdivisions);
        auto a_graph = a_t(ndr.a, ndr.a_action ? &*ndr.a_action : nullptr, t);
        ATPair sub = a_t_pair(ndr.subdivided_k, ndr.subdivided_l, ndr.action ? &*ndr.action : nullptr, t);
        const Graph& h = sub.small.graph;
        out.ndr_containment = is_subgraph(graph_neighborhood(sub.big.graph, h, ndr.radius), a_graph.graph);
        Graph h_in_a = a_graph.graph.induced(embed_vertices(h, a_graph.graph));
        out.ndr_retract = is_induced_subgraph(h, a_graph.graph) && retract_holds(a_graph.graph, h_in_a);
        if (y && f) {
            auto pr = pushout_retract(a_graph.graph, h_in_a, *y, *f, false);
            out.pushout_retract = pr.path_valid;
        }
    }
    return out;
}

} // namespace gtop
