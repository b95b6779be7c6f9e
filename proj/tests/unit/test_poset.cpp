#include "gtop/homology.hpp"
#include "gtop/poset.hpp"
#include "support/oracles.hpp"

#include "support/printing.hpp"

#include <set>

using namespace gtop;

namespace {

Poset chain3()
{
    return Poset::from_relations({"a", "b", "c"}, {{0, 1}, {1, 2}});
}

Poset antichain(int n)
{
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back("x" + std::to_string(i));
    return Poset::from_relations(labels, {});
}

GroupAction swap2()
{
    return {FiniteGroup::cyclic(2), Side::left, {{0, 1}, {1, 0}}};
}

} // namespace

TEST_CASE("poset axioms are checked")
{
    CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{0, 1}, {1, 0}}), PreconditionError);
    std::vector<Bits> not_transitive{Bits(3, {0, 1}), Bits(3, {1, 2}), Bits(3, {2})};
    CHECK_THROWS_AS(Poset({"a", "b", "c"}, not_transitive), PreconditionError);
    Poset c = chain3();
    CHECK(c.leq(0, 2));
    CHECK(c.covers().size() == 2);
}

TEST_CASE("order complexes")
{
    auto k = order_complex(chain3());
    CHECK(k.facets().size() == 1);
    CHECK(k.facets()[0].size() == 3);

    auto a = order_complex(antichain(4));
    CHECK(a.size() == 4);
    CHECK(a.dimension() == 0);

    auto hex = order_complex(face_poset(boundary_complex(2)));
    CHECK(hex.f_vector() == std::vector<std::size_t>{6, 6});
}

TEST_CASE("order complex simplices are exactly the chains")
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
        Poset p = oracle::random_poset(rng, 7, 0.3);
        auto chains = oracle::all_chains(oracle::relation(p));
        auto k = order_complex(p);
        CHECK(k.faces().size() == chains.size());
        for (auto c : chains) {
            Simplex s;
            for (int x : c)
                s.push_back(k.index_of(p.label(x)));
            std::sort(s.begin(), s.end());
            CHECK(k.contains(s));
        }
    }
}

TEST_CASE("face posets")
{
    Poset d1 = face_poset(simplex_complex(1));
    CHECK(d1.size() == 3);
    CHECK(d1.maximal_elements().size() == 1);
    CHECK(d1.minimal_elements().size() == 2);
    CHECK(face_poset(boundary_complex(2)).size() == 6);
    CHECK(face_poset(simplex_complex(2)).size() == 7);
}

TEST_CASE("beat points")
{
    auto bp = beat_points(chain3());
    std::set<int> elements;
    for (const auto& b : bp)
        elements.insert(b.element);
    CHECK(elements == std::set<int>{0, 1, 2});
    CHECK(beat_point(chain3(), 0)->kind == BeatKind::upper);
    CHECK(beat_point(chain3(), 2)->kind == BeatKind::lower);

    CHECK(beat_points(antichain(1)).empty());
    CHECK(beat_points(face_poset(boundary_complex(2))).empty());
}

TEST_CASE("closure operator images are collapse targets")
{
    // two minimal elements under a top; c sends everything to the top
    Poset p = Poset::from_relations({"a", "b", "t"}, {{0, 2}, {1, 2}});
    Poset q = p.induced({2});
    GroupAction swap{FiniteGroup::cyclic(2), Side::left, {{0, 1, 2}, {1, 0, 2}}};
    auto r = strong_collapse_decide(p, q, &swap);
    CHECK(r.yes);
    CHECK(replay_collapse(p, r.certificate, &swap) == q);
}

TEST_CASE("the face poset of a simplex collapses to a point")
{
    auto r = strong_collapse_decide(face_poset(simplex_complex(2)), std::nullopt);
    CHECK(r.residue.size() == 1);
    Budget b;
    CHECK(exhaustive_core_size(face_poset(simplex_complex(2)), nullptr, b) == 1);
}

TEST_CASE("the swapped antichain")
{
    Poset p = antichain(2);
    auto sw = swap2();
    CHECK_THROWS_AS(strong_collapse_decide(p, p.induced({0}), &sw), PreconditionError);
    auto core = strong_collapse_decide(p, std::nullopt, &sw);
    CHECK(core.residue.size() == 2);
    CHECK(core.certificate.empty());
}

TEST_CASE("non-induced targets are rejected")
{
    Poset p = chain3();
    Poset q = Poset::from_relations({"a", "c"}, {});
    CHECK_THROWS_AS(strong_collapse_decide(p, q), PreconditionError);
}

TEST_CASE("orbit removals never pick a witness in the orbit")
{
    // S3 permutes the faces of a triangle; orbits go as wholes
    auto action = GroupAction::from_permutation_group(symmetric_group(3));
    Poset p = face_poset(simplex_complex(2));
    auto fa = face_action(simplex_complex(2), action);
    auto r = strong_collapse_decide(p, std::nullopt, &fa);
    for (const auto& step : r.certificate)
        for (const auto& w : step.witnesses)
            CHECK(std::find(step.elements.begin(), step.elements.end(), w) == step.elements.end());
    CHECK(r.residue.size() == 1);
    CHECK(replay_collapse(p, r.certificate, &fa).size() == 1);
}

TEST_CASE("greedy decision agrees with a brute-force removal search")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 150; ++i) {
        Poset p = oracle::random_poset(rng, 2 + i % 7, 0.35);
        auto leq = oracle::relation(p);
        CHECK(strong_collapse_decide(p, std::nullopt).residue.size() == oracle::min_core_size(leq));
        std::uint32_t keep = static_cast<std::uint32_t>(rng()) & ((1u << p.size()) - 1);
        std::vector<int> kept;
        for (std::size_t x = 0; x < p.size(); ++x)
            if (keep >> x & 1u)
                kept.push_back(static_cast<int>(x));
        auto r = strong_collapse_decide(p, p.induced(kept));
        CHECK(r.yes == oracle::collapses_to(leq, keep));
    }
}

TEST_CASE("certificates replay and bad certificates are rejected")
{
    Poset p = chain3();
    auto r = strong_collapse_decide(p, p.induced({1}));
    REQUIRE(r.yes);
    CHECK(replay_collapse(p, r.certificate).labels() == std::vector<std::string>{"b"});
    Poset hex = face_poset(boundary_complex(2));
    PosetCertificate bogus{{{hex.label(0)}, {hex.label(1)}, BeatKind::upper}};
    CHECK_THROWS_AS(replay_collapse(hex, bogus), PreconditionError);
}

TEST_CASE("components and isomorphism")
{
    CHECK(component_count(antichain(3)) == 3);
    CHECK(component_count(chain3()) == 1);
    Poset a = Poset::from_relations({"x", "y", "z"}, {{2, 0}, {2, 1}});
    Poset b = Poset::from_relations({"p", "q", "r"}, {{0, 1}, {0, 2}});
    CHECK(are_isomorphic(a, b));
    CHECK_FALSE(are_isomorphic(a, chain3()));
}

TEST_CASE("poset quotients")
{
    Poset p = Poset::from_relations({"a", "b", "t"}, {{0, 2}, {1, 2}});
    GroupAction swap{FiniteGroup::cyclic(2), Side::left, {{0, 1, 2}, {1, 0, 2}}};
    auto q = quotient_and_fixed(p, swap, {0, 1});
    CHECK(q.quotient.size() == 2);
    CHECK(q.fixed.size() == 1);
    CHECK(q.fixed.label(0) == "t");
}
