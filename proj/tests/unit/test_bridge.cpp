#include "gtop/bridge.hpp"
#include "gtop/homology.hpp"
#include "support/oracles.hpp"

#include "support/printing.hpp"

using namespace gtop;

namespace {

RightGraph k2_flip()
{
    return {complete_graph(2), flip_action_on_k2()};
}

Graph path_abc()
{
    return Graph::from_edges({"a", "b", "c"}, {{0, 1}, {1, 2}});
}

} // namespace

TEST_CASE("looped 1-skeletons")
{
    Graph p = complex_to_graph(point_complex());
    CHECK(p.size() == 1);
    CHECK(p.has_loop(0));
    for (int n = 0; n <= 3; ++n)
        CHECK(are_isomorphic(complex_to_graph(simplex_complex(n)), sigma_graph(n)));
    CHECK(complex_to_graph(boundary_complex(2)) == complex_to_graph(simplex_complex(2)));
}

TEST_CASE("A_T of small complexes")
{
    auto pt = a_t(point_complex(), nullptr, k2_flip());
    CHECK(pt.graph.size() == 1);
    CHECK(pt.graph.has_loop(0));

    auto two = coset_product(FiniteGroup::cyclic(2), {0}, point_complex());
    auto swapped = a_t(two.complex, &two.action, k2_flip());
    CHECK(are_isomorphic(swapped.graph, complete_graph(2)));

    RightGraph plain{cycle_graph(5), GroupAction::trivial_on(5)};
    auto k = boundary_complex(2);
    CHECK(are_isomorphic(a_t(k, nullptr, plain).graph, tensor_product(cycle_graph(5), complex_to_graph(k))));
}

TEST_CASE("A_T of a subcomplex is an induced subgraph")
{
    auto big = coset_product(FiniteGroup::cyclic(2), {0}, simplex_complex(2));
    auto small = in_host_order(big.complex, coset_product(FiniteGroup::cyclic(2), {0}, horn_complex(2, 1)).complex);
    auto pair = a_t_pair(big.complex, small, &big.action, k2_flip());
    CHECK(is_injective(pair.inclusion));
    CHECK(is_homomorphism(pair.small.graph, pair.big.graph, pair.inclusion));
}

TEST_CASE("generating maps for K2")
{
    auto free0 = generating_cofibration(k2_flip(), 3, 0, {0}, CofibrationKind::boundary);
    CHECK(free0.source.empty());
    CHECK(are_isomorphic(free0.target, complete_graph(2)));
    auto fixed0 = generating_cofibration(k2_flip(), 3, 0, {0, 1}, CofibrationKind::boundary);
    CHECK(fixed0.source.empty());
    CHECK(are_isomorphic(fixed0.target, looped_point()));
    for (auto kind : {CofibrationKind::boundary, CofibrationKind::horn}) {
        auto m = generating_cofibration(k2_flip(), 3, 1, {0}, kind);
        CHECK(is_injective(m.map));
        CHECK(is_induced_subgraph(m.source, m.target));
    }
    CHECK_THROWS_AS(generating_cofibration(k2_flip(), 3, 0, {0}, CofibrationKind::horn), PreconditionError);
}

TEST_CASE("condition B")
{
    for (int n = 2; n <= 4; ++n)
        CHECK(check_condition_B({complete_graph(n), symmetric_action_on_complete(n)}).verdict ==
              ConditionVerdict::verified);
    CHECK(check_condition_B({cycle_graph(5), dihedral_action_on_cycle(5)}).verdict == ConditionVerdict::verified);
    auto triv = check_condition_B({complete_graph(2), GroupAction::trivial_on(2)});
    CHECK(triv.verdict == ConditionVerdict::refuted);
    CHECK(triv.automorphism_count == 2);
    CHECK(check_condition_B({path_abc(), GroupAction::trivial_on(3)}).verdict == ConditionVerdict::inconclusive);
    CHECK_THROWS_AS(check_condition_B({Graph::from_edges({"a", "b"}, {}), GroupAction::trivial_on(2)}),
                    PreconditionError);
}

TEST_CASE("condition A")
{
    CHECK(check_condition_A(k2_flip()).verdict == ConditionVerdict::verified);
    CHECK(check_condition_A({looped_point(), GroupAction::trivial_on(1)}).verdict == ConditionVerdict::verified);
    auto k3 = check_condition_A({complete_graph(3), symmetric_action_on_complete(3)});
    CHECK(k3.verdict == ConditionVerdict::refuted);
    CHECK(k3.reason.find("pi0") != std::string::npos);
    REQUIRE_FALSE(k3.evidence.empty());
    CHECK_FALSE(k3.evidence.back().bijective);
    CHECK(check_condition_A(k2_flip(), 1).verdict == ConditionVerdict::inconclusive);
}

TEST_CASE("diameter gate")
{
    CHECK(diameter_gate(0) == 2);
    CHECK(diameter_gate(1) == 3);
    CHECK(diameter_gate(2) == 4);
    CHECK(diameter_gate(3) == 4);
    CHECK(diameter_gate(4) == 5);
}

TEST_CASE("chromatic bounds")
{
    CHECK(chromatic_lower_bound(complete_graph(2)).bound == 2);
    CHECK(chromatic_lower_bound(cycle_graph(5)).bound == 3);
    CHECK(chromatic_lower_bound(complete_graph(4)).bound == 4);
    CHECK(chromatic_lower_bound(Graph::from_edges({"a", "b"}, {})).bound == 1);
    auto capped = chromatic_lower_bound(complete_graph(5), 1);
    CHECK(capped.vanished_through_cap);
    CHECK(capped.bound == 4);
    CHECK(chromatic_lower_bound(looped_point()).looped);
}

TEST_CASE("pushout retract of the folded path")
{
    Graph p = path_abc();
    Graph h = p.induced({1, 2});
    auto r = pushout_retract(p, h, looped_point(), {0, 0}, false);
    CHECK(r.source_retract.verdict == RetractVerdict::yes);
    CHECK(r.path_valid);
}

TEST_CASE("NDR transfer")
{
    auto k = simplex_complex(2);
    auto l = subcomplex_from(k, {{0}});
    RightGraph t = k2_flip();
    auto rep = ndr_transfer(k, k, nullptr, t, 2);
    CHECK(rep.containment);
    rep = ndr_transfer(k, l, nullptr, t, 1, 2);
    CHECK(rep.containment);
    REQUIRE(rep.ndr_containment);
    CHECK(*rep.ndr_containment);
    REQUIRE(rep.ndr_retract);
    CHECK(*rep.ndr_retract);
}
