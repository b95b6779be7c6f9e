#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gtop {

/// Permutation in image notation over carrier indices: p[x] is the image of x.
using Perm = std::vector<int>;

Perm compose(const Perm& outer, const Perm& inner); // outer o inner
Perm inverse(const Perm& p);
Perm identity_perm(std::size_t n);
bool is_permutation(const Perm& p);

/// Finite group given by an explicit multiplication table on element indices.
///
/// A table that fails the group axioms can still be held in this type so that
/// validate_group() can report what is wrong with it; all other operations
/// assume a validated group.
class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup(trivial()) {}

    /// Raw construction; the identity index may be -1 when the table has none.
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table, int identity);

    /// Looks for a two-sided identity in the table; identity() is -1 if absent.
    static FiniteGroup from_table(std::vector<std::string> labels, std::vector<std::vector<int>> table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);

    std::size_t size() const { return labels_.size(); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    int identity_ = -1;
    std::vector<int> inverse_;
};

/// Outcome of checking a group table or an action against its axioms.
struct Validation {
    enum class Status { ok, structural, axiom };
    Status status = Status::ok;
    std::string message;
    std::vector<int> witnesses;

    explicit operator bool() const { return status == Status::ok; }
    static Validation pass() { return {}; }
    static Validation structural_error(std::string m, std::vector<int> w = {})
    {
        return {Status::structural, std::move(m), std::move(w)};
    }
    static Validation axiom_failure(std::string m, std::vector<int> w = {})
    {
        return {Status::axiom, std::move(m), std::move(w)};
    }
};

Validation validate_group(const FiniteGroup& g);

/// A group together with the permutations realising its elements.
struct PermutationGroup {
    FiniteGroup group;
    std::vector<Perm> perms; // perms[g] for each element index g
};

/// Closes a set of generating permutations of {0..degree-1} into a full
/// group. Elements are sorted lexicographically by image vector, so the
/// identity is element 0. Labels are the image vectors written with
/// carrier labels when given, otherwise with indices.
PermutationGroup close_permutations(const std::vector<Perm>& generators, std::size_t degree,
                                    const std::vector<std::string>& carrier_labels = {});

PermutationGroup symmetric_group(int n);
PermutationGroup dihedral_group(int n); // symmetries of the n-gon on {0..n-1}
PermutationGroup cyclic_rotation_group(int n);

enum class Side { left, right };

/// An action of a finite group on the points {0..n-1} of some carrier.
///
/// perm[g][x] is g.x for a left action and x.g for a right action. The
/// library works with left actions internally; left(g, x) converts.
struct GroupAction {
    FiniteGroup group;
    Side side = Side::left;
    std::vector<Perm> perm;

    std::size_t degree() const { return perm.empty() ? 0 : perm.front().size(); }
    int apply(int g, int x) const { return perm[g][x]; }
    int left(int g, int x) const { return side == Side::left ? perm[g][x] : perm[group.inverse(g)][x]; }
    Perm left_perm(int g) const { return side == Side::left ? perm[g] : perm[group.inverse(g)]; }

    static GroupAction trivial_on(std::size_t n, const FiniteGroup& g = FiniteGroup::trivial());
    static GroupAction from_permutation_group(const PermutationGroup& pg, Side side = Side::left);

    /// Same group acting on the same points through the opposite side.
    GroupAction as_side(Side s) const;
};

/// Checks the permutations are bijections of a common degree and satisfy the
/// composition law for the declared side. Carrier-specific checks (that each
/// permutation is an automorphism) live with the carrier types.
Validation validate_action_laws(const GroupAction& action);

using Subgroup = std::vector<int>; // sorted element indices

/// Every subgroup exactly once, ordered by size then element indices.
std::vector<Subgroup> subgroup_lattice(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, const Subgroup& s);

/// Left cosets gH ordered by their least element; each coset sorted.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h);

/// Left multiplication action of g on the left cosets of h.
GroupAction coset_action(const FiniteGroup& g, const Subgroup& h);

/// Orbits of the action restricted to a subgroup (all of the group when
/// sub is empty). Each orbit is sorted; orbits are ordered by least member.
std::vector<std::vector<int>> orbits(const GroupAction& action, const Subgroup& sub = {});

/// Points fixed by every element of sub.
std::vector<int> fixed_points(const GroupAction& action, const Subgroup& sub);

/// Restriction of an action to the points of an invariant subset; points
/// are renumbered in the order given.
GroupAction restrict_action(const GroupAction& action, const std::vector<int>& points);

/// Checks that the subset of points is carried into itself by every element.
bool is_invariant(const GroupAction& action, const std::vector<int>& points);

} // namespace gtop
