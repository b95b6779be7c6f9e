// Acceptance run: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails.

#include "gtop/bridge.hpp"
#include "gtop/homology.hpp"
#include "gtop/ndr.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace gtop;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// records the first failure; later ones are only counted
class Tally {
public:
    void check(bool ok, const std::string& what)
    {
        if (ok)
            return;
        if (failures_++ == 0)
            first_ = what;
    }
    Outcome result(const std::string& summary) const
    {
        if (failures_ == 0)
            return {true, summary};
        return {false, summary + "; " + std::to_string(failures_) + " failure(s), first: " + first_};
    }

private:
    int failures_ = 0;
    std::string first_;
};

std::string join(const std::vector<std::size_t>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

Graph random_loopless(std::mt19937_64& rng, int max_n)
{
    std::uniform_int_distribution<int> n(1, max_n);
    std::uniform_real_distribution<double> p(0.2, 0.8);
    return oracle::random_graph(rng, n(rng), p(rng));
}

// ------------------------------------------------------------ criterion 1

Outcome box_hom_agreement()
{
    std::mt19937_64 rng(101);
    Tally t;
    auto flip = flip_action_on_k2();
    std::size_t total = 0;
    for (int i = 0; i < 50; ++i) {
        Graph g = random_loopless(rng, 7);
        auto box = box_complex(g);
        auto hom = hom_complex(complete_graph(2), g, &flip);
        total += box.elements.size();
        t.check(validate_box_isomorphism(box, hom), "isomorphism rejected on graph " + std::to_string(i));
        t.check(box.elements.size() == oracle::box_pairs(oracle::adjacency(g)).size(),
                "box size differs from brute force on graph " + std::to_string(i));
        // swap corresponds to the flip action on Hom(K2,G)
        for (std::size_t x = 0; x < box.elements.size(); ++x)
            t.check(hom.action->left(1, box.iso[x]) == box.iso[box.swap.left(1, static_cast<int>(x))],
                    "swap not intertwined on graph " + std::to_string(i));
    }
    return t.result("50 random loopless graphs, " + std::to_string(total) + " box elements");
}

// ------------------------------------------------------------ criterion 2

Outcome sphere_homology()
{
    Tally t;
    const std::size_t sizes[] = {2, 12, 50, 180};
    std::string seen;
    for (int n = 2; n <= 5; ++n) {
        auto box = box_complex(complete_graph(n));
        auto b = oracle::padded(poset_reduced_betti(box.poset, n - 1), static_cast<std::size_t>(n));
        std::vector<std::size_t> sphere(static_cast<std::size_t>(n), 0);
        sphere[static_cast<std::size_t>(n - 2)] = 1;
        t.check(box.elements.size() == sizes[n - 2], "|B(K" + std::to_string(n) + ")| = " +
                                                         std::to_string(box.elements.size()));
        t.check(b == sphere, "B(K" + std::to_string(n) + ") betti " + join(b));
        seen += (n > 2 ? " " : "") + std::to_string(box.elements.size()) + ":" + join(b);
    }
    return t.result("B(K_n), n = 2..5: " + seen);
}

// ------------------------------------------------------------ criterion 3

Outcome chromatic_bounds()
{
    Tally t;
    struct Case {
        std::string name;
        Graph g;
        int expected;
    };
    std::vector<Case> cases{{"K2", complete_graph(2), 2}, {"C5", cycle_graph(5), 3}, {"K4", complete_graph(4), 4}};
    for (int n = 2; n <= 5; ++n)
        cases.push_back({"K" + std::to_string(n), complete_graph(n), n});
    for (const auto& c : cases) {
        int b = chromatic_lower_bound(c.g).bound;
        t.check(b == c.expected, c.name + " bound " + std::to_string(b));
    }
    std::mt19937_64 rng(103);
    int violations = 0, tight = 0;
    for (int i = 0; i < 100; ++i) {
        Graph g = random_loopless(rng, 8);
        int chi = oracle::chromatic_number(oracle::adjacency(g));
        auto b = chromatic_lower_bound(g);
        violations += b.bound > chi;
        tight += b.bound == chi;
        t.check(b.bound <= chi, "bound " + std::to_string(b.bound) + " exceeds chi " + std::to_string(chi));
    }
    return t.result("exact on K2, C5, K4, K2..K5; 100 random graphs, " + std::to_string(violations) +
                    " violations, " + std::to_string(tight) + " tight");
}

// ------------------------------------------------------------ criterion 4

// Beat point removal keeps the homotopy type; small posets are also computed
// in full as a cross-check.
std::vector<std::size_t> betti_via_core(const Poset& p, Tally& t)
{
    auto core = strong_collapse_decide(p, std::nullopt).residue;
    auto b = oracle::padded(poset_reduced_betti(core, 3), 4);
    if (p.size() <= 600)
        t.check(b == oracle::padded(poset_reduced_betti(p, 3), 4), "core homology differs from full homology");
    return b;
}

Outcome fold_invariance()
{
    std::mt19937_64 rng(107);
    Tally t;
    int done = 0, attempts = 0;
    while (done < 30 && attempts < 5000) {
        ++attempts;
        Graph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 3), 0.45, 0.15);
        auto folds = dismantlable_vertices(g);
        if (folds.empty())
            continue;
        Graph tg = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 2), 0.7, 0.0);
        if (tg.edge_count() == 0)
            continue;
        Graph smaller = g.without_vertex(folds[rng() % folds.size()].removed);
        auto big = hom_complex(tg, g);
        auto small = hom_complex(tg, smaller);
        ++done;
        if (big.elements.empty() || small.elements.empty()) {
            t.check(big.elements.empty() == small.elements.empty(), "one side empty");
            continue;
        }
        t.check(component_count(big.poset) == component_count(small.poset), "pi0 differs");
        auto bb = betti_via_core(big.poset, t);
        auto bs = betti_via_core(small.poset, t);
        t.check(bb == bs, "betti " + join(bb) + " vs " + join(bs));
    }
    t.check(done == 30, "only " + std::to_string(done) + " instances generated");
    return t.result(std::to_string(done) + " (T, G, v) instances, pi0 and betti through degree 3");
}

// ------------------------------------------------------------ criterion 5

Outcome beat_point_engine()
{
    std::mt19937_64 rng(109);
    Tally t;
    int yes = 0;
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng() % 8);
        Poset p = oracle::random_poset(rng, n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
        auto leq = oracle::relation(p);

        // core mode against the library backtracking and the brute-force oracle
        PosetCollapseOptions exhaustive;
        exhaustive.exhaustive = true;
        auto core = strong_collapse_decide(p, std::nullopt, nullptr, exhaustive);
        Budget budget;
        const std::size_t best = exhaustive_core_size(p, nullptr, budget);
        t.check(core.residue.size() == best, "greedy core larger than exhaustive core");
        t.check(best == oracle::min_core_size(leq), "exhaustive core disagrees with oracle");

        // relative mode on a random induced Q
        std::uint32_t keep = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
        std::vector<int> kept;
        for (int x = 0; x < n; ++x)
            if (keep >> x & 1u)
                kept.push_back(x);
        auto rel = strong_collapse_decide(p, p.induced(kept), nullptr, exhaustive);
        t.check(rel.exhaustive_answer && *rel.exhaustive_answer == rel.yes, "greedy and exhaustive disagree");
        t.check(rel.yes == oracle::collapses_to(leq, keep), "greedy disagrees with oracle");
        yes += rel.yes;

        // order independence
        for (int s = 0; s < 10; ++s) {
            std::mt19937_64 order(static_cast<std::uint64_t>(i) * 31 + static_cast<std::uint64_t>(s));
            PosetCollapseOptions shuffled;
            shuffled.rng = &order;
            auto other = strong_collapse_decide(p, std::nullopt, nullptr, shuffled);
            t.check(are_isomorphic(other.residue, core.residue), "core depends on removal order");
        }
    }
    return t.result("500 random posets with at most 8 elements (" + std::to_string(yes) +
                    " relative YES), 10 shuffles each");
}

// ------------------------------------------------------------ criterion 6

SimplicialComplex cone(const SimplicialComplex& k)
{
    std::vector<std::vector<std::string>> simplices;
    for (const auto& f : k.facets()) {
        std::vector<std::string> s{"apex"};
        for (int v : f)
            s.push_back(k.label(v));
        simplices.push_back(s);
    }
    return SimplicialComplex::from_labelled(simplices);
}

Outcome transfer_laws()
{
    std::mt19937_64 rng(113);
    Tally t;
    int poset_yes = 0, complex_yes = 0;
    for (int i = 0; i < 50; ++i) {
        // poset YES, order complex YES
        Poset p = oracle::random_poset(rng, 3 + static_cast<int>(rng() % 6), 0.4);
        PosetCollapseOptions opts;
        opts.rng = &rng;
        auto full = strong_collapse_decide(p, std::nullopt, nullptr, opts);
        PosetCertificate prefix(full.certificate.begin(),
                                full.certificate.begin() +
                                    static_cast<long>(full.certificate.empty() ? 0 : rng() % (full.certificate.size() + 1)));
        Poset q = replay_collapse(p, prefix);
        auto decided = strong_collapse_decide(p, q);
        t.check(decided.yes, "poset collapse to a replayed prefix was refused");
        if (decided.yes) {
            ++poset_yes;
            auto kp = order_complex(p);
            auto kq = in_host_order(kp, order_complex(q));
            auto r = strong_collapse_complex(kp, kq);
            t.check(r.verdict == CollapseVerdict::yes, "order complex collapse failed after poset YES");
            if (r.verdict == CollapseVerdict::yes)
                t.check(same_complex(replay_collapse(kp, r.certificate), kq), "complex certificate does not replay");
        }

        // complex YES, face poset YES
        auto base = oracle::random_complex(rng, 4 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 3), 2);
        auto k = (i % 2 == 0) ? cone(base) : base;
        auto l = subcomplex_from(k, {{k.index_of(i % 2 == 0 ? "apex" : k.label(0))}});
        auto r = strong_collapse_complex(k, l);
        if (r.verdict != CollapseVerdict::yes) {
            t.check(i % 2 == 1, "a cone did not collapse to its apex");
            continue;
        }
        ++complex_yes;
        Poset fk = face_poset(k);
        Poset fl = face_poset(l);
        t.check(strong_collapse_decide(fk, fk.induced(embed_elements(fl, fk))).yes,
                "face poset collapse failed after complex YES");
    }
    return t.result(std::to_string(poset_yes) + " poset YES instances transferred to order complexes, " +
                    std::to_string(complex_yes) + " complex YES instances transferred to face posets");
}

// ------------------------------------------------------------ criterion 7

Outcome ndr_machinery()
{
    std::mt19937_64 rng(127);
    Tally t;
    for (int i = 0; i < 30; ++i) {
        auto k = oracle::random_complex(rng, 5 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 4), 2);
        auto l = subcomplex_from(k, {k.facets()[rng() % k.facets().size()]});
        auto lhs = complex_neighborhood(barycentric_subdivision(k), barycentric_subdivision(l), 2);
        auto rhs = barycentric_subdivision(in_host_order(k, complex_neighborhood(k, l, 1)));
        t.check(is_subcomplex(lhs, rhs), "nu^2(Sd L) not inside Sd(nu L)");
    }

    struct Case {
        std::string name;
        SimplicialComplex k, l;
        std::optional<GroupAction> action;
        int r;
    };
    auto d2 = simplex_complex(2);
    auto b3 = boundary_complex(3);
    auto swap = GroupAction::from_permutation_group(close_permutations({{1, 0, 3, 2}}, 4));
    std::vector<Case> cases{
        {"(D2, vertex)", d2, subcomplex_from(d2, {{0}}), std::nullopt, 2},
        {"(D2, vertex)", d2, subcomplex_from(d2, {{0}}), std::nullopt, 3},
        {"(dD2, edge)", boundary_complex(2), subcomplex_from(boundary_complex(2), {{0, 1}}), std::nullopt, 3},
        {"(dD3, Z2-edge)", b3, subcomplex_from(b3, {{0, 1}}), swap, 2},
        {"(dD3, Z2-edge)", b3, subcomplex_from(b3, {{0, 1}}), swap, 3},
    };
    for (int i = 0; i < 3; ++i) {
        auto k = oracle::random_complex(rng, 5, 3, 2);
        cases.push_back({"random", k, subcomplex_from(k, {k.facets().front()}), std::nullopt, 2 + i % 2});
    }
    std::string radii;
    for (const auto& c : cases) {
        auto res = ndr_builder(c.k, c.l, c.action, c.r);
        const std::string tag = c.name + " r=" + std::to_string(c.r);
        t.check(res.radius == 1 << (c.r - 2), tag + ": radius " + std::to_string(res.radius));
        t.check(is_subcomplex(complex_neighborhood(res.subdivided_k, res.subdivided_l, res.radius), res.a),
                tag + ": neighbourhood escapes A");
        auto residue = replay_collapse(res.a, res.certificate, res.a_action ? &*res.a_action : nullptr);
        t.check(same_complex(residue, in_host_order(res.a, res.subdivided_l)), tag + ": certificate residue");
        if (c.action) {
            t.check(res.a_action && validate_action(*res.a_action, res.a), tag + ": action on A");
            radii += " Z2 radius " + std::to_string(res.radius) + " at r=" + std::to_string(c.r) + ";";
        }
    }
    return t.result("30 containment pairs; " + std::to_string(cases.size()) + " builder runs;" + radii);
}

// ------------------------------------------------------------ criterion 8

Outcome condition_checkers()
{
    Tally t;
    auto expect = [&](const ConditionReport& r, ConditionVerdict v, const std::string& name) {
        t.check(r.verdict == v, name + " gave " + to_string(r.verdict) + " (" + r.reason + ")");
    };
    expect(check_condition_A({looped_point(), GroupAction::trivial_on(1)}), ConditionVerdict::verified, "A(1)");
    expect(check_condition_A({complete_graph(2), flip_action_on_k2()}), ConditionVerdict::verified, "A(K2)");
    for (int n = 3; n <= 4; ++n)
        expect(check_condition_B({complete_graph(n), symmetric_action_on_complete(n)}), ConditionVerdict::verified,
               "B(K" + std::to_string(n) + ")");
    expect(check_condition_B({cycle_graph(5), dihedral_action_on_cycle(5)}), ConditionVerdict::verified, "B(C5)");
    auto d6 = dihedral_action_on_stable_kneser(6, 2);
    t.check(d6.group.size() == 12, "D6 has order " + std::to_string(d6.group.size()));
    expect(check_condition_B({stable_kneser_graph(6, 2), d6}), ConditionVerdict::verified, "B(SG62)");

    auto k3 = check_condition_A({complete_graph(3), symmetric_action_on_complete(3)});
    expect(k3, ConditionVerdict::refuted, "A(K3)");
    t.check(!k3.evidence.empty() && !k3.evidence.back().bijective, "A(K3) lacks a pi0 witness");
    expect(check_condition_B({complete_graph(2), GroupAction::trivial_on(2)}), ConditionVerdict::refuted,
           "B(K2, trivial)");

    // oracle: for the stiff instances the endomorphism count must equal the group order
    struct Stiff {
        Graph g;
        std::size_t order;
    };
    for (const auto& s : {Stiff{complete_graph(3), 6}, Stiff{complete_graph(4), 24}, Stiff{cycle_graph(5), 10},
                          Stiff{stable_kneser_graph(6, 2), 12}}) {
        auto a = oracle::adjacency(s.g);
        t.check(oracle::count_homomorphisms(a, a) == s.order, "endomorphism count differs from the group order");
    }
    // oracle: Hom(K3, K3/A3) has a single element but there are two cosets
    t.check(oracle::multihoms(oracle::adjacency(complete_graph(3)), oracle::adjacency(looped_point())).size() == 1,
            "Hom(K3, 1) is not a point");
    return t.result("A: (1,1) (K2,Z2) VERIFIED, (K3,S3) REFUTED [" + k3.reason + "]; B: (K3,S3) (K4,S4) (C5,D5) "
                    "(SG62,D6) VERIFIED, (K2,1) REFUTED");
}

// ------------------------------------------------------------ criterion 9

Outcome sing_hom_pi0()
{
    std::mt19937_64 rng(131);
    Tally t;
    int explicit_posets = 0;
    t.check(pi0_sing(complete_graph(2), complete_graph(2)) == 2, "pi0 Sing(K2,K2) != 2");
    t.check(pi0_sing(complete_graph(2), complete_graph(3)) == 1, "pi0 Sing(K2,K3) != 1");
    for (int i = 0; i < 20; ++i) {
        const int nt = 1 + static_cast<int>(rng() % 4);
        const int ng = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(20 / nt));
        Graph tg = oracle::random_graph(rng, nt, 0.6, 0.2);
        Graph g = oracle::random_graph(rng, ng, 0.5, 0.3);
        const auto sing = pi0_sing(tg, g);
        t.check(sing == pi0_hom(tg, g), "pi0 Sing != pi0 Hom on instance " + std::to_string(i));
        try {
            auto hom = hom_complex(tg, g);
            ++explicit_posets;
            t.check(sing == component_count(hom.poset), "pi0 Sing != components of the explicit Hom poset");
        } catch (const BudgetExceeded&) {
        }
        if (nt * ng <= 12)
            t.check(sing == oracle::pi0_sing(oracle::adjacency(tg), oracle::adjacency(g)),
                    "pi0 Sing differs from brute force on instance " + std::to_string(i));
    }
    return t.result("20 random (T, G) with |V(T)||V(G)| <= 20, " + std::to_string(explicit_posets) +
                    " checked against the explicit Hom poset; Sing(K2,K2) = 2, Sing(K2,K3) = 1");
}

// ----------------------------------------------------------- criterion 10

Outcome generating_maps()
{
    Tally t;
    RightGraph k2{complete_graph(2), flip_action_on_k2()};
    const auto subs = subgroup_lattice(k2.action.group);
    int count = 0;
    for (int n = 0; n <= 2; ++n)
        for (const auto& sub : subs) {
            std::vector<std::pair<CofibrationKind, int>> kinds{{CofibrationKind::boundary, 0}};
            for (int r = 0; n >= 1 && r <= n; ++r)
                kinds.emplace_back(CofibrationKind::horn, r);
            for (auto [kind, r] : kinds) {
                auto m = generating_cofibration(k2, 3, n, sub, kind, r);
                ++count;
                t.check(is_homomorphism(m.source, m.target, m.map) && is_injective(m.map) &&
                            is_induced_subgraph(m.source, m.target),
                        "map n=" + std::to_string(n) + " is not an induced embedding");
                if (n == 0) {
                    t.check(m.source.empty(), "n=0 source is not empty");
                    const Graph expected = sub.size() == 1 ? complete_graph(2) : looped_point();
                    t.check(are_isomorphic(m.target, expected), "n=0 target differs from the hand computation");
                }
            }
        }
    return t.result(std::to_string(count) + " maps for T = K2, k = 3, n = 0..2, both subgroups");
}

// ----------------------------------------------------------- criterion 11

// independent check of a path certificate in Def(X, Y)
bool path_ok(const Graph& x, const std::vector<int>& y, const std::vector<MultiHom>& path)
{
    auto a = oracle::adjacency(x);
    std::vector<char> in_y(x.size(), 0);
    for (int v : y)
        in_y[v] = 1;
    auto multihom = [&](const MultiHom& eta) {
        for (int u = 0; u < a.n; ++u) {
            if (eta[u].none())
                return false;
            for (int v = 0; v < a.n; ++v)
                if (a.has(u, v))
                    for (int p = 0; p < a.n; ++p)
                        for (int q = 0; q < a.n; ++q)
                            if (eta[u].test(p) && eta[v].test(q) && !a.has(p, q))
                                return false;
        }
        for (int v : y)
            if (eta[v].count() != 1 || !eta[v].test(v))
                return false;
        return true;
    };
    auto leq = [](const MultiHom& s, const MultiHom& t) {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!s[i].is_subset_of(t[i]))
                return false;
        return true;
    };
    if (path.empty())
        return false;
    for (int v = 0; v < a.n; ++v)
        if (path.front()[v].count() != 1 || !path.front()[v].test(v))
            return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!multihom(path[i]))
            return false;
        if (i > 0 && !leq(path[i - 1], path[i]) && !leq(path[i], path[i - 1]))
            return false;
    }
    for (int v = 0; v < a.n; ++v) {
        const auto& last = path.back()[v];
        if (last.count() != 1)
            return false;
        bool target_in_y = false;
        last.for_each([&](int w) { target_in_y = in_y[w] != 0; });
        if (!target_in_y)
            return false;
    }
    return true;
}

Outcome pushout_retracts()
{
    std::mt19937_64 rng(137);
    Tally t;
    int built = 0, attempts = 0;
    while (built < 10 && attempts < 1000) {
        ++attempts;
        // H, then vertices that fold onto existing ones
        Graph h = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 3), 0.7, 0.3);
        if (h.edge_count() == 0)
            continue;
        auto labels = h.labels();
        auto edges = h.edges();
        std::size_t n = h.size();
        const int extra = 1 + static_cast<int>(rng() % 3);
        for (int e = 0; e < extra; ++e) {
            Graph cur = Graph::from_edges(labels, edges);
            const int w = static_cast<int>(rng() % n);
            std::vector<int> nbrs;
            cur.neighbors(w).for_each([&](int x) { nbrs.push_back(x); });
            if (nbrs.empty())
                break;
            const int v = static_cast<int>(n++);
            labels.push_back("x" + std::to_string(e));
            bool any = false;
            for (int x : nbrs)
                if (rng() % 2 || (!any && x == nbrs.back())) {
                    edges.emplace_back(v, x);
                    any = true;
                }
        }
        Graph g = Graph::from_edges(labels, edges);
        if (g.size() == h.size())
            continue;
        auto source = def_retract(g, h, false);
        if (source.verdict != RetractVerdict::yes || !validate_retract_path(g, h, source.path))
            continue;
        Graph y = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 3), 0.7, 0.4);
        auto homs = enumerate_homomorphisms(h, y);
        if (homs.empty())
            continue;
        const VertexMap f = homs[rng() % homs.size()];
        auto r = pushout_retract(g, h, y, f, false);
        ++built;
        t.check(r.path_valid, "pushout path rejected by the library on instance " + std::to_string(built));
        t.check(path_ok(r.pushout.x, r.pushout.from_y, r.path),
                "pushout path rejected by the independent check on instance " + std::to_string(built));
    }
    t.check(built == 10, "only " + std::to_string(built) + " instances built");
    // the hand example: fold a onto the looped point
    Graph p = Graph::from_edges({"a", "b", "c"}, {{0, 1}, {1, 2}});
    auto r = pushout_retract(p, p.induced({1, 2}), looped_point(), {0, 0}, false);
    t.check(r.path_valid && path_ok(r.pushout.x, r.pushout.from_y, r.path), "path a-b-c onto the looped point");
    return t.result(std::to_string(built) + " constructed (G, H, f) plus the folded path");
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        std::string name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "box/Hom agreement", box_hom_agreement},
        {2, "sphere homology of B(K_n)", sphere_homology},
        {3, "chromatic bounds", chromatic_bounds},
        {4, "fold invariance", fold_invariance},
        {5, "beat point engine", beat_point_engine},
        {6, "transfer laws", transfer_laws},
        {7, "NDR machinery", ndr_machinery},
        {8, "condition checkers", condition_checkers},
        {9, "Sing/Hom pi0", sing_hom_pi0},
        {10, "generating maps", generating_maps},
        {11, "pushout retract", pushout_retracts},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char time[32];
        std::snprintf(time, sizeof time, "%.2fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail
                  << " [" << time << "]" << std::endl;
        failed += !o.pass;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
              << criteria.size() << std::endl;
    return failed ? 1 : 0;
}
