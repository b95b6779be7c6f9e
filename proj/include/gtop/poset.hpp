#pragma once

#include "gtop/bits.hpp"
#include "gtop/complex.hpp"
#include "gtop/errors.hpp"
#include "gtop/group.hpp"

#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gtop {

/// Finite partial order on labelled elements 0..size()-1.
///
/// The relation is kept as two bit matrices: up(x) holds every y >= x and
/// down(x) every y <= x. Both include x itself.
class Poset {
public:
    Poset() = default;

    /// Takes a full relation matrix (leq[x] = elements >= x) and checks the
    /// partial order axioms; throws PreconditionError on failure.
    Poset(std::vector<std::string> labels, std::vector<Bits> leq);

    /// Reflexive-transitive closure of the given pairs (a <= b). A cycle of
    /// distinct elements violates antisymmetry and throws PreconditionError.
    static Poset from_relations(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& pairs);

    /// Skips the axiom checks; for relations that are partial orders by
    /// construction (inclusion orders, induced orders).
    static Poset trusted(std::vector<std::string> labels, std::vector<Bits> leq);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(int x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find(const std::string& label) const;
    int index_of(const std::string& label) const;

    bool leq(int a, int b) const { return up_[a].test(static_cast<std::size_t>(b)); }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    const Bits& up(int x) const { return up_[x]; }
    const Bits& down(int x) const { return down_[x]; }

    /// Cover pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    /// Induced subposet on the given elements, in the given order.
    Poset induced(const std::vector<int>& elements) const;

    friend bool operator==(const Poset& a, const Poset& b)
    {
        return a.labels_ == b.labels_ && a.up_ == b.up_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Bits> up_;
    std::vector<Bits> down_;
};

/// Host indices of the elements of sub (matched by label).
std::vector<int> embed_elements(const Poset& sub, const Poset& host);

/// sub's elements are in host and its order is the restriction of host's.
bool is_induced_subposet(const Poset& sub, const Poset& host);

std::optional<std::vector<int>> find_isomorphism(const Poset& a, const Poset& b, Budget& budget);
bool are_isomorphic(const Poset& a, const Poset& b);

/// Group laws plus: every element acts by an order automorphism.
Validation validate_action(const GroupAction& action, const Poset& p);

struct PosetQuotient {
    Poset quotient; // orbits, labelled by their least member
    std::vector<int> projection;
    std::vector<int> fixed_elements;
    Poset fixed;
};

/// Orbit order (closure of a <= b between representatives) and the fixed
/// subposet. Throws PreconditionError when the orbit relation is not
/// antisymmetric.
PosetQuotient quotient_and_fixed(const Poset& p, const GroupAction& action, const Subgroup& sub);

/// Component index of each element in the comparability graph; components
/// are numbered by their least element.
std::vector<int> poset_components(const Poset& p);
std::size_t component_count(const Poset& p);

/// Chains as simplices; vertices are the poset's elements.
SimplicialComplex order_complex(const Poset& p);

/// Non-empty simplices under inclusion, in k.faces() order and labelled by
/// simplex_label().
Poset face_poset(const SimplicialComplex& k);

/// Chains with at most max_size elements, each sorted by element index.
/// Ordered by size and then lexicographically.
std::vector<std::vector<int>> chains(const Poset& p, std::size_t max_size);

// ---------------------------------------------------------- beat points

enum class BeatKind { upper, lower };

struct BeatPoint {
    int element;
    BeatKind kind;
    int witness; // min of P_{>x} (upper) or max of P_{<x} (lower)
};

/// Every beat point; an element that is both upper and lower is reported
/// once per kind.
std::vector<BeatPoint> beat_points(const Poset& p);
std::optional<BeatPoint> beat_point(const Poset& p, int x);

// ------------------------------------------------------ strong collapse

/// Removal of one orbit of beat points; elements[i] retracts to witnesses[i].
struct PosetCollapseStep {
    std::vector<std::string> elements;
    std::vector<std::string> witnesses;
    BeatKind kind = BeatKind::upper;
};
using PosetCertificate = std::vector<PosetCollapseStep>;

struct PosetCollapseOptions {
    std::mt19937_64* rng = nullptr; // random choice among removable orbits
    bool exhaustive = false;        // also run the backtracking decision
    std::uint64_t budget = default_budget;
};

struct PosetCollapseResult {
    bool yes = false; // residue equals Q (always true in core mode)
    PosetCertificate certificate;
    Poset residue;
    std::vector<int> residue_elements;     // input indices
    std::optional<bool> exhaustive_answer; // set when options.exhaustive
};

/// Greedy strong collapse: while an element outside Q is a beat point of
/// the current poset, remove its whole orbit. Q = nullopt collapses as far
/// as possible and the residue is the core. Q must be an induced subposet
/// and invariant under the action.
PosetCollapseResult strong_collapse_decide(const Poset& p, const std::optional<Poset>& q,
                                           const GroupAction* action = nullptr,
                                           const PosetCollapseOptions& options = {});

/// Tries every order of orbit removals (memoized on the surviving set) and
/// reports whether some order reaches exactly Q. Refuses more than 20
/// elements.
bool strong_collapse_exhaustive(const Poset& p, const Poset& q, const GroupAction* action, Budget& budget);

/// Core mode of the exhaustive search: smallest residue size reachable.
std::size_t exhaustive_core_size(const Poset& p, const GroupAction* action, Budget& budget);

/// Checks each step against the current poset and returns the residue;
/// throws PreconditionError naming the first invalid step.
Poset replay_collapse(const Poset& p, const PosetCertificate& certificate, const GroupAction* action = nullptr);

/// Replays a poset certificate on the order complex as vertex removals and
/// returns the equivalent complex certificate. Each beat point is dominated
/// by its witness in the order complex.
ComplexCertificate order_complex_certificate(const PosetCertificate& certificate);

} // namespace gtop
