#pragma once

#include "gtop/bits.hpp"
#include "gtop/errors.hpp"
#include "gtop/group.hpp"

#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gtop {

/// Finite graph with a symmetric edge relation; loops are allowed.
///
/// Vertices are indices 0..size()-1 carrying unique text labels. Sub-objects
/// (subgraphs, neighbourhoods) are separate Graph values identified with the
/// host by label.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> labels);

    static Graph from_edges(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find(const std::string& label) const;
    int index_of(const std::string& label) const; // throws PreconditionError

    /// Adds the symmetric pair (u,v),(v,u); u == v adds a loop.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool adjacent(int u, int v) const { return adj_[u].test(static_cast<std::size_t>(v)); }
    bool has_loop(int v) const { return adjacent(v, v); }
    const Bits& neighbors(int v) const { return adj_[v]; }
    std::size_t degree(int v) const { return adj_[v].count(); }

    /// Undirected edge list: pairs (u,v) with u <= v, sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const { return edges().size(); }
    Bits looped_vertices() const;

    /// Induced subgraph on the given vertices, in the given order.
    Graph induced(const std::vector<int>& vertices) const;
    Graph without_vertex(int v) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Bits> adj_;
};

using VertexMap = std::vector<int>;

/// A graph homomorphism together with its endpoints.
struct GraphHom {
    Graph source;
    Graph target;
    VertexMap map;
};

bool is_homomorphism(const Graph& g, const Graph& h, const VertexMap& f);
bool is_injective(const VertexMap& f);

/// Every homomorphism G -> H in lexicographic order of the image vector.
std::vector<VertexMap> enumerate_homomorphisms(const Graph& g, const Graph& h, Budget& budget);
std::vector<VertexMap> enumerate_homomorphisms(const Graph& g, const Graph& h);

/// First homomorphism found, if any.
std::optional<VertexMap> find_homomorphism(const Graph& g, const Graph& h, Budget& budget);

/// Categorical (tensor) product: (x,v) ~ (y,w) iff x ~ y and v ~ w.
/// Vertex (i,j) has index i * |H| + j and label "(x,v)".
Graph tensor_product(const Graph& g, const Graph& h);

/// Subgraph test by label: every vertex and edge of sub is present in host.
bool is_subgraph(const Graph& sub, const Graph& host);
bool is_induced_subgraph(const Graph& sub, const Graph& host);

/// Host indices of the vertices of sub (matched by label).
std::vector<int> embed_vertices(const Graph& sub, const Graph& host);

// ---------------------------------------------------------------- folds

struct Fold {
    int removed;
    int witness; // N(removed) is contained in N(witness) at the time of removal
};

/// Vertices v with a witness w != v such that N(v) is contained in N(w).
std::vector<Fold> dismantlable_vertices(const Graph& g);
bool is_stiff(const Graph& g);

struct FoldAnalysis {
    std::vector<Fold> dismantlable; // of the input graph
    std::vector<Fold> folds;        // removal sequence, indices into the input graph
    std::vector<int> core_vertices; // surviving input vertices
    Graph core;                     // induced on core_vertices
};

/// Repeatedly removes a dismantlable vertex until the graph is stiff. The
/// default picks the least vertex and least witness; passing an engine picks
/// a random dismantlable vertex each round instead.
FoldAnalysis fold_analysis(const Graph& g, std::mt19937_64* rng = nullptr);

// ------------------------------------------------------- neighbourhoods

/// Iterated neighbourhood of a subgraph. One step keeps the vertices of the
/// subgraph, adds every host vertex adjacent to one of them, and keeps every
/// host edge with an endpoint in the subgraph. r = 0 returns sub unchanged.
Graph graph_neighborhood(const Graph& host, const Graph& sub, int r);

struct Pushout {
    Graph x;
    VertexMap from_y; // Y -> X
    VertexMap from_g; // G -> X
};

/// The pushout Y u_H G of a homomorphism f : H -> Y along a subgraph H of G.
/// X has the vertices of Y first, then those of G outside H.
Pushout pushout_attach(const Graph& g, const Graph& h, const Graph& y, const VertexMap& f);

// ------------------------------------------------------------ invariants

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
std::vector<int> distances_from(const Graph& g, int source); // -1 when unreachable
int diameter(const Graph& g);                                 // throws on disconnected input

/// Least k with a homomorphism to K_k; nullopt when a loop makes colouring
/// impossible.
std::optional<int> chromatic_number(const Graph& g, Budget& budget);
std::optional<int> chromatic_number(const Graph& g);

/// Backtracking isomorphism search for small graphs.
std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b, Budget& budget);
bool are_isomorphic(const Graph& a, const Graph& b);

struct EndoAutoAnalysis {
    std::size_t endomorphism_count = 0;
    PermutationGroup automorphisms;
    bool all_endomorphisms_are_automorphisms = false;
};

EndoAutoAnalysis endo_auto_analysis(const Graph& g, Budget& budget);
EndoAutoAnalysis endo_auto_analysis(const Graph& g);

// --------------------------------------------------------------- actions

/// Group laws plus: every element acts by a graph automorphism.
Validation validate_action(const GroupAction& action, const Graph& g);

struct GraphQuotient {
    Graph quotient;             // one vertex per orbit, labelled by the least member
    VertexMap projection;       // G -> quotient
    std::vector<std::vector<int>> orbits;
    std::vector<int> fixed_vertices; // fixed by every element of the subgroup
    Graph fixed;                     // induced on fixed_vertices
};

/// Orbit graph of the subgroup's action and its fixed subgraph. An edge
/// joining two vertices of one orbit becomes a loop.
GraphQuotient quotient_and_fixed(const Graph& g, const GroupAction& action, const Subgroup& sub);

// ------------------------------------------------------------- families

Graph complete_graph(int n);               // labels 1..n
Graph cycle_graph(int n);                  // labels 0..n-1
Graph path_graph(int n);                   // labels 0..n-1
Graph looped_point();                      // the one-vertex looped graph
Graph sigma_graph(int n);                  // looped complete graph on 0..n
Graph stable_kneser_graph(int n, int k);   // stable k-subsets of Z_n, disjointness
Graph empty_graph();

/// Stable k-subsets of Z_n in lexicographic order.
std::vector<std::vector<int>> stable_subsets(int n, int k);

GroupAction symmetric_action_on_complete(int n);     // S_n on K_n
GroupAction dihedral_action_on_cycle(int n);         // D_n on C_n
GroupAction dihedral_action_on_stable_kneser(int n, int k);
GroupAction flip_action_on_k2();                     // Z_2 flipping K_2

} // namespace gtop
