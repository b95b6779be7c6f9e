#pragma once

#include "gtop/errors.hpp"
#include "gtop/group.hpp"

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace gtop {

/// Sorted vertex indices.
using Simplex = std::vector<int>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept
    {
        std::size_t h = s.size();
        for (int v : s)
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

namespace detail {
struct FaceCache;
}

/// Finite abstract simplicial complex stored by its maximal simplices.
///
/// Every label is a vertex, so {v} is always a simplex. The full face list
/// is built on first use and shared between copies; the complex itself is
/// immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex();
    SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& simplices);

    /// Builds from simplices written with labels; new labels become vertices
    /// in order of first appearance.
    static SimplicialComplex from_labelled(const std::vector<std::vector<std::string>>& simplices);

    /// Skips the maximality pass: facets must be sorted, distinct, mutually
    /// non-nested and cover every label.
    static SimplicialComplex from_maximal(std::vector<std::string> labels, std::vector<Simplex> facets);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find(const std::string& label) const;
    int index_of(const std::string& label) const;

    const std::vector<Simplex>& facets() const { return facets_; }
    int dimension() const; // -1 for the empty complex

    /// All non-empty simplices, ordered by size and then lexicographically.
    const std::vector<Simplex>& faces() const;
    std::optional<int> face_index(const Simplex& s) const;
    bool contains(const Simplex& s) const; // s sorted; the empty simplex is contained
    std::vector<std::size_t> f_vector() const;

    std::string simplex_label(const Simplex& s) const; // "{a,b,c}"

    /// Complex on the surviving vertices whose simplices avoid `removed`.
    SimplicialComplex without_vertices(const std::vector<int>& removed) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.labels_ == b.labels_ && a.facets_ == b.facets_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Simplex> facets_;
    std::shared_ptr<detail::FaceCache> cache_;
};

/// Host vertex index of each vertex of sub (matched by label).
std::vector<int> embed_vertices(const SimplicialComplex& sub, const SimplicialComplex& host);
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& host);
/// Same simplices, compared by label.
bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b);

/// sub re-expressed with vertices in host order, so that simplex labels (and
/// therefore subdivision labels) agree with the host's.
SimplicialComplex in_host_order(const SimplicialComplex& host, const SimplicialComplex& sub);

/// Subcomplex of host spanned by the given simplices (host indices).
SimplicialComplex subcomplex_from(const SimplicialComplex& host, const std::vector<Simplex>& simplices);
/// Induced subcomplex on a vertex subset (host indices).
SimplicialComplex induced_subcomplex(const SimplicialComplex& host, const std::vector<int>& vertices);

/// Group laws plus: every element acts by a simplicial automorphism.
Validation validate_action(const GroupAction& action, const SimplicialComplex& k);

/// Action induced on a subcomplex identified by label; sub must be invariant.
GroupAction restrict_action(const GroupAction& action, const SimplicialComplex& host,
                            const SimplicialComplex& sub);

/// Action induced on the faces() of k.
GroupAction face_action(const SimplicialComplex& k, const GroupAction& action);

struct ComplexQuotient {
    SimplicialComplex quotient; // vertices = orbits, simplices = images
    std::vector<int> projection;
    std::vector<int> fixed_vertices;
    SimplicialComplex fixed; // induced on fixed vertices
};
ComplexQuotient quotient_and_fixed(const SimplicialComplex& k, const GroupAction& action, const Subgroup& sub);

// ------------------------------------------------------- standard complexes

SimplicialComplex simplex_complex(int n);             // Delta^n on 0..n
SimplicialComplex boundary_complex(int n);            // boundary of Delta^n
SimplicialComplex horn_complex(int n, int r);         // Lambda^n_r
SimplicialComplex point_complex();
SimplicialComplex empty_complex();

struct EquivariantComplex {
    SimplicialComplex complex;
    GroupAction action;
};

/// (G/H) x K: one copy of K per left coset, labelled "c<i>|<v>", with the
/// group permuting the copies by left multiplication.
EquivariantComplex coset_product(const FiniteGroup& g, const Subgroup& h, const SimplicialComplex& k);

// -------------------------------------------------------- neighbourhoods

/// Closed star: simplices s with s u {v} in K.
SimplicialComplex star(const SimplicialComplex& k, int v);

/// Union of the stars of the vertices of sub, iterated r times.
/// r = 0 returns sub (re-expressed over the host's labels).
SimplicialComplex complex_neighborhood(const SimplicialComplex& host, const SimplicialComplex& sub, int r);

// ---------------------------------------------------------- subdivision

/// Sd(K) = order complex of the face poset, built directly from flags of
/// facets. Vertices are the faces of K in faces() order, labelled by
/// simplex_label().
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k, int iterations);

/// Number of simplices Sd^k(K) would have, or nullopt once it passes cap.
std::optional<std::size_t> subdivision_size(const SimplicialComplex& k, int iterations, std::size_t cap);

/// Action on Sd(K) induced from an action on K.
GroupAction subdivision_action(const SimplicialComplex& k, const GroupAction& action);

struct EquivariantSubdivision {
    SimplicialComplex complex;
    std::optional<GroupAction> action;
};
EquivariantSubdivision barycentric_subdivision(const SimplicialComplex& k, const std::optional<GroupAction>& action,
                                               int iterations);

// ------------------------------------------------------ strong collapse

struct Domination {
    int vertex;
    int witness; // every facet containing vertex also contains witness
};

std::vector<Domination> dominated_vertices(const SimplicialComplex& k);

/// Certificate of a collapse, with vertex references by label so that it can
/// be replayed against a reloaded complex.
struct ComplexCollapseStep {
    std::vector<std::string> vertices;
    std::vector<std::string> witnesses;
};
using ComplexCertificate = std::vector<ComplexCollapseStep>;

enum class CollapseVerdict { yes, stuck, no };

struct ComplexCollapseResult {
    CollapseVerdict verdict = CollapseVerdict::stuck;
    ComplexCertificate certificate;
    SimplicialComplex residue;
    bool exact = false; // verdict comes from the exhaustive search
};

struct ComplexCollapseOptions {
    bool exact = false;               // run the exhaustive search when greedy is stuck
    std::mt19937_64* rng = nullptr;   // random choice among removable orbits
    std::uint64_t budget = default_budget;
};

/// Greedy removal of dominated vertex orbits outside L. An orbit Gv can go
/// when the equivariant retraction gv -> gw is contiguous to the identity;
/// without a group this is plain domination. YES means the residue equals L.
ComplexCollapseResult strong_collapse_complex(const SimplicialComplex& k, const SimplicialComplex& l,
                                              const GroupAction* action = nullptr,
                                              const ComplexCollapseOptions& options = {});

/// Checks each step is a valid orbit removal and returns the residue;
/// throws PreconditionError naming the first invalid step.
SimplicialComplex replay_collapse(const SimplicialComplex& k, const ComplexCertificate& certificate,
                                  const GroupAction* action = nullptr);

/// Exhaustive decision: searches the identity component of the poset of
/// equivariant simplicial multi-maps fixing L for a simplicial map into L.
/// Refuses more than max_free vertices outside L.
bool strong_collapse_exact(const SimplicialComplex& k, const SimplicialComplex& l, const GroupAction* action,
                           Budget& budget, int max_free = 6);

} // namespace gtop
