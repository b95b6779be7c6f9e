#include "gtop/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace gtop {

Poset::Poset(std::vector<std::string> labels, std::vector<Bits> leq) : labels_(std::move(labels)), up_(std::move(leq))
{
    const std::size_t n = labels_.size();
    if (up_.size() != n)
        throw PreconditionError("relation matrix does not match the element count");
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
            throw PreconditionError("duplicate element label '" + labels_[i] + "'");
        if (up_[i].size() != n)
            throw PreconditionError("relation matrix row has the wrong width");
    }
    down_.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a) {
        if (!up_[a].test(a))
            throw PreconditionError("relation is not reflexive at '" + labels_[a] + "'");
        up_[a].for_each([&](int b) { down_[b].set(a); });
    }
    for (std::size_t a = 0; a < n; ++a)
        up_[a].for_each([&](int b) {
            if (static_cast<std::size_t>(b) != a && up_[b].test(a))
                throw PreconditionError("relation is not antisymmetric: '" + labels_[a] + "' and '" + labels_[b] + "'");
            if (!up_[b].is_subset_of(up_[a]))
                throw PreconditionError("relation is not transitive through '" + labels_[b] + "'");
        });
}

Poset Poset::trusted(std::vector<std::string> labels, std::vector<Bits> leq)
{
    Poset p;
    p.labels_ = std::move(labels);
    p.up_ = std::move(leq);
    const std::size_t n = p.labels_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!p.index_.emplace(p.labels_[i], static_cast<int>(i)).second)
            throw PreconditionError("duplicate element label '" + p.labels_[i] + "'");
    p.down_.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
        p.up_[a].for_each([&](int b) { p.down_[b].set(a); });
    return p;
}

Poset Poset::from_relations(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& pairs)
{
    const std::size_t n = labels.size();
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        up[i].set(i);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
            throw PreconditionError("relation refers to an unknown element");
        up[a].set(b);
    }
    // Warshall on bit rows
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (up[i].test(k))
                up[i] |= up[k];
    return Poset(std::move(labels), std::move(up));
}

std::optional<int> Poset::find(const std::string& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int Poset::index_of(const std::string& label) const
{
    auto x = find(label);
    if (!x)
        throw PreconditionError("no element labelled '" + label + "'");
    return *x;
}

std::vector<std::pair<int, int>> Poset::covers() const
{
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(size());
    for (int a = 0; a < n; ++a)
        up_[a].for_each([&](int b) {
            if (b == a)
                return;
            // a < c < b for some c?
            Bits between = up_[a] & down_[b];
            if (between.count() == 2)
                out.emplace_back(a, b);
        });
    return out;
}

std::vector<int> Poset::minimal_elements() const
{
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(size()); ++x)
        if (down_[x].count() == 1)
            out.push_back(x);
    return out;
}

std::vector<int> Poset::maximal_elements() const
{
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(size()); ++x)
        if (up_[x].count() == 1)
            out.push_back(x);
    return out;
}

Poset Poset::induced(const std::vector<int>& elements) const
{
    const std::size_t m = elements.size();
    std::vector<std::string> labels;
    std::vector<Bits> up(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(labels_[elements[i]]);
        for (std::size_t j = 0; j < m; ++j)
            if (leq(elements[i], elements[j]))
                up[i].set(j);
    }
    return trusted(std::move(labels), std::move(up));
}

std::vector<int> embed_elements(const Poset& sub, const Poset& host)
{
    std::vector<int> out;
    out.reserve(sub.size());
    for (const auto& l : sub.labels()) {
        auto x = host.find(l);
        if (!x)
            throw PreconditionError("element '" + l + "' is not in the host poset");
        out.push_back(*x);
    }
    return out;
}

bool is_induced_subposet(const Poset& sub, const Poset& host)
{
    for (const auto& l : sub.labels())
        if (!host.find(l))
            return false;
    auto emb = embed_elements(sub, host);
    for (std::size_t a = 0; a < sub.size(); ++a)
        for (std::size_t b = 0; b < sub.size(); ++b)
            if (sub.leq(static_cast<int>(a), static_cast<int>(b)) != host.leq(emb[a], emb[b]))
                return false;
    return true;
}

std::optional<std::vector<int>> find_isomorphism(const Poset& a, const Poset& b, Budget& budget)
{
    const int n = static_cast<int>(a.size());
    if (a.size() != b.size())
        return std::nullopt;
    auto signature = [](const Poset& p, int x) { return std::make_pair(p.up(x).count(), p.down(x).count()); };
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int x) {
        budget.tick();
        if (x == n)
            return true;
        for (int y = 0; y < n; ++y) {
            if (used[y] || signature(a, x) != signature(b, y))
                continue;
            bool ok = true;
            for (int z = 0; z < x && ok; ++z)
                ok = a.leq(x, z) == b.leq(y, map[z]) && a.leq(z, x) == b.leq(map[z], y);
            if (!ok)
                continue;
            map[x] = y;
            used[y] = 1;
            if (rec(x + 1))
                return true;
            used[y] = 0;
        }
        map[x] = -1;
        return false;
    };
    if (rec(0))
        return map;
    return std::nullopt;
}

bool are_isomorphic(const Poset& a, const Poset& b)
{
    Budget budget;
    return find_isomorphism(a, b, budget).has_value();
}

Validation validate_action(const GroupAction& action, const Poset& p)
{
    if (auto v = validate_action_laws(action); !v)
        return v;
    if (action.degree() != p.size())
        return Validation::structural_error("action degree does not match the element count");
    const int n = static_cast<int>(p.size());
    for (std::size_t g = 0; g < action.perm.size(); ++g)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (p.leq(a, b) != p.leq(action.perm[g][a], action.perm[g][b]))
                    return Validation::axiom_failure("element does not act by an order automorphism",
                                                     {static_cast<int>(g), a, b});
    return Validation::pass();
}

PosetQuotient quotient_and_fixed(const Poset& p, const GroupAction& action, const Subgroup& sub)
{
    if (action.degree() != p.size())
        throw PreconditionError("action does not match the poset");
    if (!is_subgroup(action.group, sub))
        throw PreconditionError("quotient by a subset that is not a subgroup");
    PosetQuotient out;
    auto orbs = orbits(action, sub);
    out.projection.assign(p.size(), -1);
    std::vector<std::string> labels;
    for (std::size_t o = 0; o < orbs.size(); ++o) {
        labels.push_back(p.label(orbs[o].front()));
        for (int x : orbs[o])
            out.projection[x] = static_cast<int>(o);
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < static_cast<int>(p.size()); ++a)
        p.up(a).for_each([&](int b) {
            if (out.projection[a] != out.projection[b])
                pairs.emplace_back(out.projection[a], out.projection[b]);
        });
    try {
        out.quotient = Poset::from_relations(std::move(labels), pairs);
    } catch (const PreconditionError&) {
        throw PreconditionError("orbit relation is not antisymmetric; the quotient is not a poset");
    }
    out.fixed_elements = fixed_points(action, sub);
    out.fixed = p.induced(out.fixed_elements);
    return out;
}

std::vector<int> poset_components(const Poset& p)
{
    const int n = static_cast<int>(p.size());
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            (p.up(x) | p.down(x)).for_each([&](int y) {
                if (comp[y] < 0) {
                    comp[y] = next;
                    stack.push_back(y);
                }
            });
        }
        ++next;
    }
    return comp;
}

std::size_t component_count(const Poset& p)
{
    auto comp = poset_components(p);
    return comp.empty() ? 0 : static_cast<std::size_t>(*std::max_element(comp.begin(), comp.end()) + 1);
}

SimplicialComplex order_complex(const Poset& p)
{
    // maximal chains = paths in the Hasse diagram from a minimal to a maximal element
    const int n = static_cast<int>(p.size());
    std::vector<std::vector<int>> upper_covers(n);
    for (auto [a, b] : p.covers())
        upper_covers[a].push_back(b);
    std::vector<Simplex> facets;
    Simplex path;
    std::function<void(int)> walk = [&](int x) {
        path.push_back(x);
        if (upper_covers[x].empty()) {
            Simplex s = path;
            std::sort(s.begin(), s.end());
            facets.push_back(std::move(s));
        }
        for (int y : upper_covers[x])
            walk(y);
        path.pop_back();
    };
    for (int x : p.minimal_elements())
        walk(x);
    return SimplicialComplex::from_maximal(p.labels(), std::move(facets));
}

Poset face_poset(const SimplicialComplex& k)
{
    const auto& faces = k.faces();
    const std::size_t m = faces.size();
    std::vector<std::string> labels;
    labels.reserve(m);
    std::vector<Bits> up(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(k.simplex_label(faces[i]));
        up[i].set(i);
    }
    // cofaces of s: add one vertex at a time, then close upward
    for (std::size_t i = m; i-- > 0;) {
        const auto& s = faces[i];
        for (const auto& f : k.facets()) {
            if (!std::includes(f.begin(), f.end(), s.begin(), s.end()))
                continue;
            for (int v : f) {
                if (std::binary_search(s.begin(), s.end(), v))
                    continue;
                Simplex t = s;
                t.insert(std::upper_bound(t.begin(), t.end(), v), v);
                std::size_t j = static_cast<std::size_t>(*k.face_index(t));
                up[i] |= up[j];
            }
        }
    }
    return Poset::trusted(std::move(labels), std::move(up));
}

std::vector<std::vector<int>> chains(const Poset& p, std::size_t max_size)
{
    const int n = static_cast<int>(p.size());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // extend upward from each element; each chain is generated once from its bottom
    std::function<void(int)> rec = [&](int top) {
        out.push_back(cur);
        if (cur.size() == max_size)
            return;
        p.up(top).for_each([&](int y) {
            if (y == top)
                return;
            cur.push_back(y);
            rec(y);
            cur.pop_back();
        });
    };
    if (max_size > 0)
        for (int x = 0; x < n; ++x) {
            cur = {x};
            rec(x);
        }
    for (auto& c : out)
        std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

// ---------------------------------------------------------- beat points

namespace {

std::optional<int> upper_witness(const Poset& p, const Bits& alive, int x)
{
    Bits above = p.up(x) & alive;
    above.reset(x);
    if (above.none())
        return std::nullopt;
    int m = static_cast<int>(above.first());
    above.for_each([&](int y) {
        if (p.less(y, m))
            m = y;
    });
    if (above.is_subset_of(p.up(m)))
        return m;
    return std::nullopt;
}

std::optional<int> lower_witness(const Poset& p, const Bits& alive, int x)
{
    Bits below = p.down(x) & alive;
    below.reset(x);
    if (below.none())
        return std::nullopt;
    int m = static_cast<int>(below.first());
    below.for_each([&](int y) {
        if (p.less(m, y))
            m = y;
    });
    if (below.is_subset_of(p.down(m)))
        return m;
    return std::nullopt;
}

/// Beat point test inside the subposet given by alive; upper is preferred.
std::optional<BeatPoint> beat_in(const Poset& p, const Bits& alive, int x)
{
    if (auto w = upper_witness(p, alive, x))
        return BeatPoint{x, BeatKind::upper, *w};
    if (auto w = lower_witness(p, alive, x))
        return BeatPoint{x, BeatKind::lower, *w};
    return std::nullopt;
}

std::vector<int> orbit_of(const GroupAction* action, int x)
{
    if (!action)
        return {x};
    std::set<int> o;
    for (std::size_t g = 0; g < action->perm.size(); ++g)
        o.insert(action->apply(static_cast<int>(g), x));
    return {o.begin(), o.end()};
}

/// The orbit removal for beat point b: gx -> g(witness) for each g.
std::vector<std::pair<int, int>> orbit_removal(const Poset& p, const GroupAction* action, const BeatPoint& b)
{
    std::map<int, int> r;
    if (!action) {
        r[b.element] = b.witness;
    } else {
        for (std::size_t g = 0; g < action->perm.size(); ++g)
            r.emplace(action->apply(static_cast<int>(g), b.element), action->apply(static_cast<int>(g), b.witness));
    }
    for (auto [x, y] : r)
        for (auto [x2, y2] : r)
            if (x != x2 && p.comparable(x, x2))
                throw std::logic_error("distinct orbit elements are comparable");
    for (auto [x, y] : r)
        if (r.count(y))
            throw std::logic_error("beat point witness lies in its own orbit");
    return {r.begin(), r.end()};
}

void check_target(const Poset& p, const Poset& q, const GroupAction* action, std::vector<int>& q_elements)
{
    if (!is_induced_subposet(q, p))
        throw PreconditionError("collapse target is not an induced subposet");
    q_elements = embed_elements(q, p);
    if (action && !is_invariant(*action, q_elements))
        throw PreconditionError("collapse target is not invariant under the group");
}

} // namespace

std::optional<BeatPoint> beat_point(const Poset& p, int x)
{
    return beat_in(p, Bits::full(p.size()), x);
}

std::vector<BeatPoint> beat_points(const Poset& p)
{
    std::vector<BeatPoint> out;
    const Bits all = Bits::full(p.size());
    for (int x = 0; x < static_cast<int>(p.size()); ++x) {
        if (auto w = upper_witness(p, all, x))
            out.push_back({x, BeatKind::upper, *w});
        if (auto w = lower_witness(p, all, x))
            out.push_back({x, BeatKind::lower, *w});
    }
    return out;
}

PosetCollapseResult strong_collapse_decide(const Poset& p, const std::optional<Poset>& q, const GroupAction* action,
                                           const PosetCollapseOptions& options)
{
    std::vector<int> q_elements;
    if (q)
        check_target(p, *q, action, q_elements);
    if (action)
        if (auto v = validate_action(*action, p); !v)
            throw PreconditionError("invalid action: " + v.message);
    Bits keep(p.size());
    for (int x : q_elements)
        keep.set(x);

    Bits alive = Bits::full(p.size());
    PosetCollapseResult out;
    while (true) {
        std::vector<BeatPoint> found;
        for (std::size_t x = alive.first(); x < alive.size(); x = alive.next(x + 1)) {
            if (keep.test(x))
                continue;
            if (auto b = beat_in(p, alive, static_cast<int>(x))) {
                found.push_back(*b);
                if (!options.rng)
                    break;
            }
        }
        if (found.empty())
            break;
        std::size_t pick = 0;
        if (options.rng)
            pick = std::uniform_int_distribution<std::size_t>(0, found.size() - 1)(*options.rng);
        PosetCollapseStep step;
        step.kind = found[pick].kind;
        for (auto [x, y] : orbit_removal(p, action, found[pick])) {
            step.elements.push_back(p.label(x));
            step.witnesses.push_back(p.label(y));
            alive.reset(x);
        }
        out.certificate.push_back(std::move(step));
    }
    out.residue_elements = alive.members();
    out.residue = p.induced(out.residue_elements);
    out.yes = !q || out.residue_elements.size() == q_elements.size();
    if (options.exhaustive && q) {
        Budget budget(options.budget, "exhaustive strong collapse");
        out.exhaustive_answer = strong_collapse_exhaustive(p, *q, action, budget);
    }
    return out;
}

namespace {

struct ExhaustiveSearch {
    const Poset& p;
    const GroupAction* action;
    Bits keep;
    Budget& budget;
    std::unordered_map<std::uint32_t, std::size_t> memo; // alive mask -> least reachable residue size

    std::size_t least(std::uint32_t alive)
    {
        if (auto it = memo.find(alive); it != memo.end())
            return it->second;
        budget.tick();
        Bits a(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            if (alive & (std::uint32_t{1} << i))
                a.set(i);
        std::size_t best = static_cast<std::size_t>(std::popcount(alive));
        for (std::size_t x = a.first(); x < a.size(); x = a.next(x + 1)) {
            if (keep.test(x))
                continue;
            if (auto b = beat_in(p, a, static_cast<int>(x))) {
                std::uint32_t next = alive;
                for (int y : orbit_of(action, b->element))
                    next &= ~(std::uint32_t{1} << y);
                best = std::min(best, least(next));
            }
        }
        memo[alive] = best;
        return best;
    }
};

} // namespace

bool strong_collapse_exhaustive(const Poset& p, const Poset& q, const GroupAction* action, Budget& budget)
{
    if (p.size() > 20)
        throw PreconditionError("exhaustive collapse search refuses more than 20 elements");
    std::vector<int> q_elements;
    check_target(p, q, action, q_elements);
    Bits keep(p.size());
    for (int x : q_elements)
        keep.set(x);
    ExhaustiveSearch search{p, action, keep, budget, {}};
    const std::uint32_t all = p.size() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << p.size()) - 1;
    // every element outside Q can only leave, so reaching |Q| means reaching Q
    return search.least(all) == q.size();
}

std::size_t exhaustive_core_size(const Poset& p, const GroupAction* action, Budget& budget)
{
    if (p.size() > 20)
        throw PreconditionError("exhaustive collapse search refuses more than 20 elements");
    ExhaustiveSearch search{p, action, Bits(p.size()), budget, {}};
    return search.least((std::uint32_t{1} << p.size()) - 1);
}

Poset replay_collapse(const Poset& p, const PosetCertificate& certificate, const GroupAction* action)
{
    Bits alive = Bits::full(p.size());
    for (std::size_t i = 0; i < certificate.size(); ++i) {
        const auto& step = certificate[i];
        const std::string where = "certificate step " + std::to_string(i);
        if (step.elements.empty() || step.elements.size() != step.witnesses.size())
            throw PreconditionError(where + ": malformed");
        std::map<int, int> r;
        for (std::size_t j = 0; j < step.elements.size(); ++j)
            r[p.index_of(step.elements[j])] = p.index_of(step.witnesses[j]);
        auto orbit = orbit_of(action, r.begin()->first);
        if (orbit.size() != r.size() || !std::equal(orbit.begin(), orbit.end(), r.begin(),
                                                    [](int x, const auto& kv) { return x == kv.first; }))
            throw PreconditionError(where + ": elements do not form one orbit");
        for (auto [x, y] : r) {
            if (!alive.test(x) || !alive.test(y))
                throw PreconditionError(where + ": refers to a removed element");
            auto w = step.kind == BeatKind::upper ? upper_witness(p, alive, x) : lower_witness(p, alive, x);
            if (!w || *w != y)
                throw PreconditionError(where + ": '" + p.label(x) + "' is not a beat point witnessed by '" +
                                        p.label(y) + "'");
        }
        for (auto [x, y] : r)
            alive.reset(x);
    }
    return p.induced(alive.members());
}

ComplexCertificate order_complex_certificate(const PosetCertificate& certificate)
{
    ComplexCertificate out;
    for (const auto& step : certificate)
        out.push_back({step.elements, step.witnesses});
    return out;
}

} // namespace gtop
