#pragma once

#include "gtop/bits.hpp"
#include "gtop/graph.hpp"
#include "gtop/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gtop {

/// Assignment of a non-empty target vertex set to each source vertex.
using MultiHom = std::vector<Bits>;

/// Edges map into complete bipartite blocks: eta(v) x eta(w) within E(H).
bool is_multihom(const Graph& g, const Graph& h, const MultiHom& eta);

/// Singleton-valued multi-homomorphism of a vertex map.
MultiHom as_multihom(const VertexMap& f, std::size_t target_size);
std::optional<VertexMap> as_vertex_map(const MultiHom& eta); // nullopt unless every set is a singleton

/// Pointwise inclusion.
bool multihom_leq(const MultiHom& a, const MultiHom& b);

/// "{x,y}|{z}|...": the image sets in source vertex order.
std::string multihom_label(const Graph& h, const MultiHom& eta);

/// (tau * eta)(v) = union of tau(w) over w in eta(v).
MultiHom compose(const MultiHom& tau, const MultiHom& eta, std::size_t target_size);

/// The poset Hom(G,H) with its elements.
struct HomPoset {
    Graph source;
    Graph target;
    std::vector<MultiHom> elements; // ordered by total size, then lexicographically
    Poset poset;                    // labels are multihom_label()
    std::optional<GroupAction> action;

    std::optional<int> index_of(const MultiHom& eta) const;
};

struct HomOptions {
    std::uint64_t budget = default_budget;
    std::size_t max_elements = 100'000;
    /// Optional per-vertex requirement: eta(v) must equal fixed[v] when set.
    std::vector<std::optional<Bits>> fixed;
};

/// Every multi-homomorphism G -> H. With an action of a group on G, the
/// group acts on Hom(G,H) by (g.eta)(v) = eta(v.g), where v.g is the right
/// action (a left action is converted by inverses).
HomPoset hom_complex(const Graph& g, const Graph& h, const GroupAction* action_on_g = nullptr,
                     const HomOptions& options = {});

/// The box complex: pairs (s, t) of non-empty vertex sets with s x t in E(G),
/// under the product order, with the coordinate swap.
struct BoxComplex {
    Graph graph;
    std::vector<std::pair<Bits, Bits>> elements;
    Poset poset; // labels "(s,t)"
    GroupAction swap;
    /// iso[i] is the index in Hom(K2,G) of box element i, via (s,t) -> (1 -> s, 2 -> t).
    std::vector<int> iso;
};

BoxComplex box_complex(const Graph& g, const HomOptions& options = {});

/// Checks that iso is an order isomorphism B(G) -> hom and intertwines the
/// swap with the Z2-action on hom.
bool validate_box_isomorphism(const BoxComplex& box, const HomPoset& hom);

/// f_*: Hom(G,H) -> Hom(G,K), eta -> f * eta, as element indices.
std::vector<int> pushforward(const HomPoset& from, const HomPoset& to, const VertexMap& f);
/// f^*: Hom(H,K) -> Hom(G,K), tau -> tau * f, as element indices.
std::vector<int> pullback(const HomPoset& from, const HomPoset& to, const VertexMap& f);

// --------------------------------------------------------- x-homotopy

/// Components of Hom(G,H). Past max_elements the poset is not built and the
/// count comes from the homomorphisms (its minimal elements) instead.
std::size_t pi0_hom(const Graph& g, const Graph& h, const HomOptions& options = {});

/// f and g lie in one component of Hom(G,H).
bool x_homotopic(const Graph& g, const Graph& h, const VertexMap& f, const VertexMap& k,
                 const HomOptions& options = {});

/// Searches every homomorphism H -> G for an inverse up to x-homotopy.
std::optional<VertexMap> x_homotopy_inverse(const Graph& g, const Graph& h, const VertexMap& f,
                                            const HomOptions& options = {});

enum class RetractVerdict { yes, no, stuck };

struct DefRetractResult {
    RetractVerdict verdict = RetractVerdict::stuck;
    bool exact = false;
    /// Comparability path from the identity to a retraction G -> H; each entry
    /// fixes H pointwise.
    std::vector<MultiHom> path;
    VertexMap retraction; // host indices of G, values in V(H)
};

/// Whether the induced subgraph H is a x-deformation retract of G. Exact mode
/// searches the identity component of Def(G,H) (at most max_free vertices
/// outside H); sufficient mode folds vertices outside H greedily and can
/// only answer yes or stuck.
DefRetractResult def_retract(const Graph& g, const Graph& h, bool exact, const HomOptions& options = {},
                             int max_free = 6);

/// Checks a path certificate: starts at the identity, consecutive entries are
/// comparable, each is a multi-homomorphism fixing H, and the last one is a
/// homomorphism into H.
bool validate_retract_path(const Graph& g, const Graph& h, const std::vector<MultiHom>& path);

// --------------------------------------------------------- Sing skeleton

struct SingSkeleton {
    Graph t;
    Graph g;
    /// simplices[n] are the homomorphisms T x Sigma^n -> G; vertex (x, i) of
    /// the product has index x * (n + 1) + i.
    std::vector<std::vector<VertexMap>> simplices;
};

/// Simplices of dimension 0..n (n <= 2).
SingSkeleton sing_skeleton(const Graph& t, const Graph& g, int n, std::uint64_t budget = default_budget);

/// Restriction of an n-simplex along the vertex i of Sigma^n.
VertexMap sing_vertex(const VertexMap& simplex, std::size_t t_size, int n, int i);

/// 0-simplices modulo the relation generated by the endpoints of 1-simplices.
std::size_t pi0_sing(const Graph& t, const Graph& g, std::uint64_t budget = default_budget);

} // namespace gtop
