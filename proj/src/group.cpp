#include "gtop/group.hpp"

#include "gtop/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace gtop {

Perm compose(const Perm& outer, const Perm& inner)
{
    Perm out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i)
        out[i] = outer[inner[i]];
    return out;
}

Perm inverse(const Perm& p)
{
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[p[i]] = static_cast<int>(i);
    return out;
}

Perm identity_perm(std::size_t n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_permutation(const Perm& p)
{
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table, int identity)
    : labels_(std::move(labels)), table_(std::move(table)), identity_(identity)
{
    const int n = static_cast<int>(labels_.size());
    bool square = static_cast<int>(table_.size()) == n;
    for (const auto& row : table_)
        square = square && static_cast<int>(row.size()) == n &&
                 std::all_of(row.begin(), row.end(), [n](int x) { return x >= 0 && x < n; });
    if (!square || identity_ < 0 || identity_ >= n)
        return;
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels, std::vector<std::vector<int>> table)
{
    const int n = static_cast<int>(labels.size());
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        if (static_cast<int>(table.size()) != n || static_cast<int>(table[e].size()) != n)
            break;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = static_cast<int>(table[a].size()) == n && table[e][a] == a && table[a][e] == a;
        if (ok)
            id = e;
    }
    return FiniteGroup(std::move(labels), std::move(table), id);
}

FiniteGroup FiniteGroup::trivial()
{
    return FiniteGroup({"e"}, {{0}}, 0);
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    if (n < 1)
        throw PreconditionError("cyclic group order must be positive");
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(labels), std::move(table), 0);
}

Validation validate_group(const FiniteGroup& g)
{
    const int n = static_cast<int>(g.size());
    if (n == 0)
        return Validation::structural_error("group has no elements");
    const auto& t = g.table();
    if (static_cast<int>(t.size()) != n)
        return Validation::structural_error("table has " + std::to_string(t.size()) + " rows, expected " +
                                            std::to_string(n));
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(t[a].size()) != n)
            return Validation::structural_error("table row is not total", {a});
        for (int b = 0; b < n; ++b)
            if (t[a][b] < 0 || t[a][b] >= n)
                return Validation::structural_error("product out of range", {a, b});
    }
    if (g.identity() < 0 || g.identity() >= n)
        return Validation::structural_error("table has no identity element");
    const int e = g.identity();
    for (int a = 0; a < n; ++a)
        if (t[e][a] != a || t[a][e] != a)
            return Validation::axiom_failure("declared identity is not two-sided", {a});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    return Validation::axiom_failure("associativity fails", {a, b, c});
    for (int a = 0; a < n; ++a)
        if (g.inverse(a) < 0)
            return Validation::axiom_failure("element has no inverse", {a});
    return Validation::pass();
}

PermutationGroup close_permutations(const std::vector<Perm>& generators, std::size_t degree,
                                    const std::vector<std::string>& carrier_labels)
{
    for (const auto& p : generators)
        if (p.size() != degree || !is_permutation(p))
            throw PreconditionError("generator is not a permutation of the carrier");

    std::set<Perm> elements{identity_perm(degree)};
    std::queue<Perm> frontier;
    frontier.push(identity_perm(degree));
    while (!frontier.empty()) {
        Perm cur = frontier.front();
        frontier.pop();
        for (const auto& gen : generators) {
            Perm next = compose(gen, cur);
            if (elements.insert(next).second)
                frontier.push(std::move(next));
        }
    }

    std::vector<Perm> perms(elements.begin(), elements.end());
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i)
        index[perms[i]] = static_cast<int>(i);

    const std::size_t n = perms.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = index.at(compose(perms[a], perms[b]));

    std::vector<std::string> labels;
    for (const auto& p : perms) {
        std::string s;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i)
                s += ' ';
            s += carrier_labels.empty() ? std::to_string(p[i]) : carrier_labels[p[i]];
        }
        labels.push_back(s.empty() ? "e" : s);
    }
    return {FiniteGroup(std::move(labels), std::move(table), 0), std::move(perms)};
}

PermutationGroup symmetric_group(int n)
{
    if (n < 1)
        throw PreconditionError("symmetric group degree must be positive");
    std::vector<Perm> gens;
    if (n >= 2) {
        Perm swap = identity_perm(n);
        std::swap(swap[0], swap[1]);
        Perm cycle(n);
        for (int i = 0; i < n; ++i)
            cycle[i] = (i + 1) % n;
        gens = {swap, cycle};
    }
    return close_permutations(gens, n);
}

PermutationGroup dihedral_group(int n)
{
    if (n < 3)
        throw PreconditionError("dihedral group needs n >= 3");
    Perm rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return close_permutations({rot, refl}, n);
}

PermutationGroup cyclic_rotation_group(int n)
{
    if (n < 1)
        throw PreconditionError("cyclic group order must be positive");
    Perm rot(n);
    for (int i = 0; i < n; ++i)
        rot[i] = (i + 1) % n;
    return close_permutations({rot}, n);
}

GroupAction GroupAction::trivial_on(std::size_t n, const FiniteGroup& g)
{
    return {g, Side::left, std::vector<Perm>(g.size(), identity_perm(n))};
}

GroupAction GroupAction::from_permutation_group(const PermutationGroup& pg, Side side)
{
    GroupAction a{pg.group, Side::left, pg.perms};
    return a.as_side(side);
}

GroupAction GroupAction::as_side(Side s) const
{
    if (s == side)
        return *this;
    GroupAction out{group, s, {}};
    out.perm.resize(perm.size());
    for (std::size_t g = 0; g < perm.size(); ++g)
        out.perm[g] = perm[group.inverse(static_cast<int>(g))];
    return out;
}

Validation validate_action_laws(const GroupAction& a)
{
    if (auto v = validate_group(a.group); !v)
        return v;
    if (a.perm.size() != a.group.size())
        return Validation::structural_error("action lists " + std::to_string(a.perm.size()) +
                                            " permutations for a group of order " +
                                            std::to_string(a.group.size()));
    const std::size_t n = a.degree();
    for (std::size_t g = 0; g < a.perm.size(); ++g)
        if (a.perm[g].size() != n || !is_permutation(a.perm[g]))
            return Validation::structural_error("element does not act by a permutation", {static_cast<int>(g)});
    const int e = a.group.identity();
    for (std::size_t x = 0; x < n; ++x)
        if (a.perm[e][x] != static_cast<int>(x))
            return Validation::axiom_failure("identity does not act trivially", {static_cast<int>(x)});
    const int order = static_cast<int>(a.group.size());
    for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h) {
            const int gh = a.group.mul(g, h);
            for (std::size_t x = 0; x < n; ++x) {
                const int lhs = a.perm[gh][x];
                const int rhs = a.side == Side::left ? a.perm[g][a.perm[h][x]] : a.perm[h][a.perm[g][x]];
                if (lhs != rhs)
                    return Validation::axiom_failure("composition law fails", {g, h, static_cast<int>(x)});
            }
        }
    return Validation::pass();
}

namespace {

Subgroup close_under_mul(const FiniteGroup& g, std::set<int> elems)
{
    std::vector<int> work(elems.begin(), elems.end());
    while (!work.empty()) {
        int a = work.back();
        work.pop_back();
        std::vector<int> current(elems.begin(), elems.end());
        for (int b : current) {
            for (int p : {g.mul(a, b), g.mul(b, a)})
                if (elems.insert(p).second)
                    work.push_back(p);
        }
    }
    return {elems.begin(), elems.end()};
}

} // namespace

bool is_subgroup(const FiniteGroup& g, const Subgroup& s)
{
    if (s.empty())
        return false;
    std::set<int> members(s.begin(), s.end());
    if (!members.count(g.identity()))
        return false;
    for (int a : s) {
        if (!members.count(g.inverse(a)))
            return false;
        for (int b : s)
            if (!members.count(g.mul(a, b)))
                return false;
    }
    return true;
}

std::vector<Subgroup> subgroup_lattice(const FiniteGroup& g)
{
    std::set<Subgroup> found;
    std::queue<Subgroup> frontier;
    Subgroup trivial{g.identity()};
    found.insert(trivial);
    frontier.push(trivial);
    while (!frontier.empty()) {
        Subgroup s = frontier.front();
        frontier.pop();
        std::set<int> base(s.begin(), s.end());
        for (int a = 0; a < static_cast<int>(g.size()); ++a) {
            if (base.count(a))
                continue;
            auto extended = base;
            extended.insert(a);
            Subgroup next = close_under_mul(g, std::move(extended));
            if (found.insert(next).second)
                frontier.push(std::move(next));
        }
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h)
{
    std::vector<int> owner(g.size(), -1);
    std::vector<std::vector<int>> cosets;
    for (int a = 0; a < static_cast<int>(g.size()); ++a) {
        if (owner[a] >= 0)
            continue;
        std::vector<int> coset;
        for (int x : h)
            coset.push_back(g.mul(a, x));
        std::sort(coset.begin(), coset.end());
        for (int x : coset)
            owner[x] = static_cast<int>(cosets.size());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

GroupAction coset_action(const FiniteGroup& g, const Subgroup& h)
{
    auto cosets = left_cosets(g, h);
    std::vector<int> owner(g.size());
    for (std::size_t c = 0; c < cosets.size(); ++c)
        for (int x : cosets[c])
            owner[x] = static_cast<int>(c);
    GroupAction a{g, Side::left, {}};
    for (int x = 0; x < static_cast<int>(g.size()); ++x) {
        Perm p(cosets.size());
        for (std::size_t c = 0; c < cosets.size(); ++c)
            p[c] = owner[g.mul(x, cosets[c].front())];
        a.perm.push_back(std::move(p));
    }
    return a;
}

std::vector<std::vector<int>> orbits(const GroupAction& action, const Subgroup& sub)
{
    Subgroup elems = sub;
    if (elems.empty()) {
        elems.resize(action.group.size());
        std::iota(elems.begin(), elems.end(), 0);
    }
    const std::size_t n = action.degree();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (std::size_t x = 0; x < n; ++x) {
        if (seen[x])
            continue;
        std::set<int> orbit;
        for (int g : elems)
            orbit.insert(action.apply(g, static_cast<int>(x)));
        for (int y : orbit)
            seen[y] = 1;
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

std::vector<int> fixed_points(const GroupAction& action, const Subgroup& sub)
{
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(action.degree()); ++x)
        if (std::all_of(sub.begin(), sub.end(), [&](int g) { return action.apply(g, x) == x; }))
            out.push_back(x);
    return out;
}

bool is_invariant(const GroupAction& action, const std::vector<int>& points)
{
    std::vector<char> in(action.degree(), 0);
    for (int x : points)
        in[x] = 1;
    for (const auto& p : action.perm)
        for (int x : points)
            if (!in[p[x]])
                return false;
    return true;
}

GroupAction restrict_action(const GroupAction& action, const std::vector<int>& points)
{
    std::vector<int> local(action.degree(), -1);
    for (std::size_t i = 0; i < points.size(); ++i)
        local[points[i]] = static_cast<int>(i);
    GroupAction out{action.group, action.side, {}};
    for (const auto& p : action.perm) {
        Perm q(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            q[i] = local[p[points[i]]];
            if (q[i] < 0)
                throw PreconditionError("restriction to a non-invariant subset");
        }
        out.perm.push_back(std::move(q));
    }
    return out;
}

} // namespace gtop
