#pragma once

#include "gtop/complex.hpp"
#include "gtop/graph.hpp"
#include "gtop/hom_complex.hpp"
#include "gtop/ndr.hpp"
#include "gtop/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gtop {

/// The looped 1-skeleton: vertices of K, v ~ w iff {v,w} is a simplex.
/// Every vertex carries a loop.
Graph complex_to_graph(const SimplicialComplex& k);

/// A right group graph: T with a group acting on the right.
struct RightGraph {
    Graph t;
    GroupAction action; // any side; used through its right-action form
};

struct ATGraph {
    Graph graph;
    /// Orbit of the product vertex (x, v) (index x * |K| + v).
    std::vector<int> projection;
};

/// A_T(K): the quotient of T x A(K) by g(x, v) = (x g^-1, g v). Each vertex
/// is an orbit labelled by the least "(x,v)" label among its members, so
/// sub-complexes give sub-graphs with matching labels. A null action means
/// the trivial action of T's group on K.
ATGraph a_t(const SimplicialComplex& k, const GroupAction* k_action, const RightGraph& t);

struct ATPair {
    ATGraph big;   // A_T(K)
    ATGraph small; // A_T(L)
    VertexMap inclusion;
};

ATPair a_t_pair(const SimplicialComplex& k, const SimplicialComplex& l, const GroupAction* k_action,
                const RightGraph& t);

enum class CofibrationKind { boundary, horn };

struct GeneratingMap {
    Graph source;
    Graph target;
    VertexMap map;
};

/// A_T(Sd^k((G/H) x A)) -> A_T(Sd^k((G/H) x Delta^n)) where A is the
/// boundary of Delta^n or the horn Lambda^n_r.
GeneratingMap generating_cofibration(const RightGraph& t, int k, int n, const Subgroup& sub, CofibrationKind kind,
                                     int horn_vertex = 0, std::size_t cap = 1'000'000);

// ------------------------------------------------------------ conditions

enum class ConditionVerdict { verified, refuted, inconclusive };
std::string to_string(ConditionVerdict v);

struct SubgroupEvidence {
    Subgroup quotient_by; // G'
    Subgroup fixed_by;    // G''
    std::size_t fixed_cosets = 0;
    std::size_t components = 0;
    bool bijective = false;
    std::vector<std::size_t> core_sizes;           // per component of the fixed subposet
    std::vector<std::vector<std::size_t>> betti;   // per component, only when the core is not a point
    std::vector<PosetCertificate> certificates;    // per component collapse to its core
    std::string note;
};

struct ConditionReport {
    char condition = 'A';
    ConditionVerdict verdict = ConditionVerdict::inconclusive;
    std::string reason;
    int diameter = 0;
    int gate_k = 0; // least k with 2^(k-2) > diameter(T)
    std::vector<SubgroupEvidence> evidence;
    // condition B
    std::size_t group_order = 0;
    std::size_t automorphism_count = 0;
    std::size_t endomorphism_count = 0;
    bool stiff = false;
    bool action_injective = false;
};

/// Condition (A) checked per subgroup pair through fixed subposets of
/// Hom(T, T/G'). Budget overruns make the verdict inconclusive.
ConditionReport check_condition_A(const RightGraph& t, std::uint64_t budget = default_budget, int max_dim = 4);

/// Condition (B) for stiff T: G -> Aut(T) must be bijective and every
/// endomorphism an automorphism.
ConditionReport check_condition_B(const RightGraph& t, std::uint64_t budget = default_budget);

// --------------------------------------------------------- chromatic bound

struct ChromaticBound {
    int bound = 1;
    std::vector<std::size_t> betti; // reduced betti of B(G) up to the first non-zero entry
    std::size_t box_size = 0;
    std::size_t core_size = 0; // B(G) after removing beat points
    bool vanished_through_cap = false;
    bool looped = false; // a loop makes colourings impossible
};

/// bound = i0 + 2 for the least i0 with non-zero reduced homology of B(G);
/// 1 when B(G) is empty and cap + 3 when nothing shows up through cap.
ChromaticBound chromatic_lower_bound(const Graph& g, int cap = 4, std::uint64_t budget = default_budget);

// ---------------------------------------------------------- NDR transfer

struct PushoutRetract {
    Pushout pushout;
    DefRetractResult source_retract; // H in G
    std::vector<MultiHom> path;      // transported certificate in Def(X, Y)
    bool path_valid = false;
};

/// Builds X = Y u_H G and transports a retract certificate of H in G to
/// one of Y in X by eta -> (v in Y: {v}; v from G: u(eta(v))).
PushoutRetract pushout_retract(const Graph& g, const Graph& h, const Graph& y, const VertexMap& f, bool exact,
                               const HomOptions& options = {});

struct NdrTransferReport {
    bool containment = false;        // nu^r(A_T(L)) within A_T(nu^r(L))
    std::optional<bool> ndr_retract; // A_T(Sd^s L) is a x-def retract of A_T(A)
    std::optional<bool> ndr_containment;
    std::optional<bool> pushout_retract;
};

/// Checks the neighbourhood containment at radius r; with subdivisions >= 2
/// also runs the NDR builder and checks the graph-level retract; with an
/// attachment f : A_T(Sd^s L) -> Y also the pushout retract.
NdrTransferReport ndr_transfer(const SimplicialComplex& k, const SimplicialComplex& l, const GroupAction* k_action,
                               const RightGraph& t, int r, int subdivisions = 0, const Graph* y = nullptr,
                               const VertexMap* f = nullptr);

/// Least k with 2^(k-2) > d.
int diameter_gate(int d);

} // namespace gtop
