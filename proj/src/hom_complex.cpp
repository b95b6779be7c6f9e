#include "gtop/hom_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace gtop {

namespace {

struct MultiHomHash {
    std::size_t operator()(const MultiHom& eta) const noexcept
    {
        std::size_t h = eta.size();
        for (const auto& b : eta)
            h ^= b.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

std::size_t total_size(const MultiHom& eta)
{
    std::size_t t = 0;
    for (const auto& b : eta)
        t += b.count();
    return t;
}

bool canonical_less(const MultiHom& a, const MultiHom& b)
{
    const auto ta = total_size(a), tb = total_size(b);
    if (ta != tb)
        return ta < tb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string set_label(const Graph& h, const Bits& s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](int x) {
        if (!first)
            out += ',';
        first = false;
        out += h.label(x);
    });
    return out + "}";
}

/// Inclusion order on a family in which every intermediate assignment
/// between two members is again a member, so covers add a single vertex.
std::vector<Bits> inclusion_order(const std::vector<MultiHom>& elements, std::size_t target_size)
{
    const std::size_t n = elements.size();
    std::unordered_map<MultiHom, int, MultiHomHash> index;
    index.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        index.emplace(elements[i], static_cast<int>(i));
    std::vector<Bits> up(n, Bits(n));
    // elements are sorted by total size, so every cover of i comes later
    for (std::size_t i = n; i-- > 0;) {
        up[i].set(i);
        MultiHom eta = elements[i];
        for (std::size_t v = 0; v < eta.size(); ++v)
            for (std::size_t x = 0; x < target_size; ++x) {
                if (eta[v].test(x))
                    continue;
                eta[v].set(x);
                if (auto it = index.find(eta); it != index.end())
                    up[i] |= up[it->second];
                eta[v].reset(x);
            }
    }
    return up;
}

Perm right_perm(const GroupAction& action, int g)
{
    return action.side == Side::right ? action.perm[g] : action.perm[action.group.inverse(g)];
}

} // namespace

bool is_multihom(const Graph& g, const Graph& h, const MultiHom& eta)
{
    if (eta.size() != g.size())
        return false;
    for (const auto& s : eta)
        if (s.size() != h.size() || s.none())
            return false;
    for (auto [u, v] : g.edges()) {
        bool ok = true;
        eta[u].for_each([&](int x) {
            if (!eta[v].is_subset_of(h.neighbors(x)))
                ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

MultiHom as_multihom(const VertexMap& f, std::size_t target_size)
{
    MultiHom eta;
    eta.reserve(f.size());
    for (int x : f) {
        Bits b(target_size);
        b.set(x);
        eta.push_back(std::move(b));
    }
    return eta;
}

std::optional<VertexMap> as_vertex_map(const MultiHom& eta)
{
    VertexMap f;
    for (const auto& b : eta) {
        if (b.count() != 1)
            return std::nullopt;
        f.push_back(static_cast<int>(b.first()));
    }
    return f;
}

bool multihom_leq(const MultiHom& a, const MultiHom& b)
{
    for (std::size_t v = 0; v < a.size(); ++v)
        if (!a[v].is_subset_of(b[v]))
            return false;
    return true;
}

std::string multihom_label(const Graph& h, const MultiHom& eta)
{
    std::string out;
    for (std::size_t v = 0; v < eta.size(); ++v) {
        if (v)
            out += '|';
        out += set_label(h, eta[v]);
    }
    return out;
}

MultiHom compose(const MultiHom& tau, const MultiHom& eta, std::size_t target_size)
{
    MultiHom out;
    out.reserve(eta.size());
    for (const auto& s : eta) {
        Bits b(target_size);
        s.for_each([&](int w) { b |= tau[w]; });
        out.push_back(std::move(b));
    }
    return out;
}

std::optional<int> HomPoset::index_of(const MultiHom& eta) const
{
    auto it = std::lower_bound(elements.begin(), elements.end(), eta, canonical_less);
    if (it == elements.end() || *it != eta)
        return std::nullopt;
    return static_cast<int>(it - elements.begin());
}

HomPoset hom_complex(const Graph& g, const Graph& h, const GroupAction* action_on_g, const HomOptions& options)
{
    const std::size_t n = g.size(), m = h.size();
    if (!options.fixed.empty() && options.fixed.size() != n)
        throw PreconditionError("fixed assignment does not match the source graph");
    Budget budget(options.budget, "multi-homomorphism enumeration");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<MultiHom> found;
    MultiHom eta(n, Bits(m));
    std::vector<char> assigned(n, 0);

    std::function<void(std::size_t)> place = [&](std::size_t i) {
        budget.tick();
        if (i == n) {
            if (found.size() >= options.max_elements)
                throw BudgetExceeded("Hom complex exceeds " + std::to_string(options.max_elements) + " elements");
            found.push_back(eta);
            return;
        }
        const int v = order[i];
        Bits allowed = Bits::full(m);
        g.neighbors(v).for_each([&](int w) {
            if (w != v && assigned[w])
                eta[w].for_each([&](int x) { allowed &= h.neighbors(x); });
        });
        const bool loop = g.has_loop(v);
        auto recurse = [&] {
            assigned[v] = 1;
            place(i + 1);
            assigned[v] = 0;
        };
        if (!options.fixed.empty() && options.fixed[v]) {
            const Bits& s = *options.fixed[v];
            bool ok = s.any() && s.is_subset_of(allowed);
            if (ok && loop)
                s.for_each([&](int x) { ok = ok && s.is_subset_of(h.neighbors(x)); });
            if (ok) {
                eta[v] = s;
                recurse();
                eta[v] = Bits(m);
            }
            return;
        }
        // non-empty subsets of allowed, grown in increasing vertex order
        auto members = allowed.members();
        Bits& cur = eta[v];
        std::function<void(std::size_t, const Bits&)> grow = [&](std::size_t start, const Bits& room) {
            for (std::size_t k = start; k < members.size(); ++k) {
                const int x = members[k];
                if (!room.test(x))
                    continue;
                budget.tick();
                cur.set(x);
                if (loop) {
                    if (h.has_loop(x)) {
                        recurse();
                        grow(k + 1, room & h.neighbors(x));
                    }
                } else {
                    recurse();
                    grow(k + 1, room);
                }
                cur.reset(x);
            }
        };
        grow(0, allowed);
    };
    place(0);
    std::sort(found.begin(), found.end(), canonical_less);

    HomPoset out;
    out.source = g;
    out.target = h;
    std::vector<std::string> labels;
    labels.reserve(found.size());
    for (const auto& e : found)
        labels.push_back(multihom_label(h, e));
    auto up = inclusion_order(found, m);
    out.elements = std::move(found);
    out.poset = Poset::trusted(std::move(labels), std::move(up));

    if (action_on_g) {
        if (auto v = validate_action(*action_on_g, g); !v)
            throw PreconditionError("invalid action on the source graph: " + v.message);
        GroupAction act{action_on_g->group, Side::left, {}};
        for (std::size_t e = 0; e < action_on_g->group.size(); ++e) {
            Perm r = right_perm(*action_on_g, static_cast<int>(e));
            Perm q(out.elements.size());
            for (std::size_t i = 0; i < out.elements.size(); ++i) {
                MultiHom moved(n);
                for (std::size_t v = 0; v < n; ++v)
                    moved[v] = out.elements[i][r[v]];
                q[i] = *out.index_of(moved);
            }
            act.perm.push_back(std::move(q));
        }
        out.action = std::move(act);
    }
    return out;
}

BoxComplex box_complex(const Graph& g, const HomOptions& options)
{
    const std::size_t n = g.size();
    Budget budget(options.budget, "box complex enumeration");
    std::vector<MultiHom> found;
    Bits s(n);
    // s grows in increasing order while its common neighbourhood stays non-empty
    std::function<void(std::size_t, const Bits&)> grow_s = [&](std::size_t start, const Bits& common) {
        for (std::size_t x = start; x < n; ++x) {
            Bits next = common & g.neighbors(static_cast<int>(x));
            if (next.none())
                continue;
            budget.tick();
            s.set(x);
            auto cands = next.members();
            Bits t(n);
            std::function<void(std::size_t)> grow_t = [&](std::size_t k0) {
                for (std::size_t k = k0; k < cands.size(); ++k) {
                    budget.tick();
                    t.set(cands[k]);
                    if (found.size() >= options.max_elements)
                        throw BudgetExceeded("box complex exceeds " + std::to_string(options.max_elements) +
                                             " elements");
                    found.push_back({s, t});
                    grow_t(k + 1);
                    t.reset(cands[k]);
                }
            };
            grow_t(0);
            grow_s(x + 1, next);
            s.reset(x);
        }
    };
    grow_s(0, Bits::full(n));
    std::sort(found.begin(), found.end(), canonical_less);

    BoxComplex out;
    out.graph = g;
    std::vector<std::string> labels;
    for (const auto& e : found)
        labels.push_back("(" + set_label(g, e[0]) + "," + set_label(g, e[1]) + ")");
    auto up = inclusion_order(found, n);
    out.poset = Poset::trusted(std::move(labels), std::move(up));

    std::unordered_map<MultiHom, int, MultiHomHash> index;
    for (std::size_t i = 0; i < found.size(); ++i)
        index.emplace(found[i], static_cast<int>(i));
    auto z2 = symmetric_group(2);
    out.swap = GroupAction{z2.group, Side::left, {}};
    for (std::size_t e = 0; e < z2.perms.size(); ++e) {
        Perm q(found.size());
        for (std::size_t i = 0; i < found.size(); ++i)
            q[i] = z2.perms[e][0] == 0 ? static_cast<int>(i) : index.at(MultiHom{found[i][1], found[i][0]});
        out.swap.perm.push_back(std::move(q));
    }

    auto k2 = complete_graph(2);
    auto flip = flip_action_on_k2();
    auto hom = hom_complex(k2, g, &flip, options);
    for (const auto& e : found) {
        auto idx = hom.index_of(e);
        if (!idx)
            throw std::logic_error("box element missing from Hom(K2,G)");
        out.iso.push_back(*idx);
    }
    for (auto& e : found)
        out.elements.emplace_back(std::move(e[0]), std::move(e[1]));
    return out;
}

bool validate_box_isomorphism(const BoxComplex& box, const HomPoset& hom)
{
    const std::size_t n = box.elements.size();
    if (hom.elements.size() != n || box.iso.size() != n || !hom.action)
        return false;
    std::vector<char> hit(n, 0);
    for (int j : box.iso) {
        if (j < 0 || static_cast<std::size_t>(j) >= n || hit[j])
            return false;
        hit[j] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& eta = hom.elements[box.iso[i]];
        if (eta.size() != 2 || eta[0] != box.elements[i].first || eta[1] != box.elements[i].second)
            return false;
        for (std::size_t j = 0; j < n; ++j)
            if (box.poset.leq(static_cast<int>(i), static_cast<int>(j)) != hom.poset.leq(box.iso[i], box.iso[j]))
                return false;
    }
    if (!(box.swap.group == hom.action->group))
        return false;
    for (std::size_t g = 0; g < box.swap.perm.size(); ++g)
        for (std::size_t i = 0; i < n; ++i)
            if (hom.action->perm[g][box.iso[i]] != box.iso[box.swap.perm[g][i]])
                return false;
    return true;
}

std::vector<int> pushforward(const HomPoset& from, const HomPoset& to, const VertexMap& f)
{
    if (!is_homomorphism(from.target, to.target, f) || from.source.labels() != to.source.labels())
        throw PreconditionError("pushforward: maps are not composable");
    auto tau = as_multihom(f, to.target.size());
    std::vector<int> out;
    for (const auto& eta : from.elements)
        out.push_back(*to.index_of(compose(tau, eta, to.target.size())));
    return out;
}

std::vector<int> pullback(const HomPoset& from, const HomPoset& to, const VertexMap& f)
{
    if (!is_homomorphism(to.source, from.source, f) || from.target.labels() != to.target.labels())
        throw PreconditionError("pullback: maps are not composable");
    auto eta = as_multihom(f, from.source.size());
    std::vector<int> out;
    for (const auto& tau : from.elements)
        out.push_back(*to.index_of(compose(tau, eta, to.target.size())));
    return out;
}

// --------------------------------------------------------- x-homotopy

namespace {

// Minimal elements of Hom(G,H) are the homomorphisms, and two of them have a
// common upper bound iff their pointwise union is a multi-homomorphism.
std::size_t pi0_from_minimal(const Graph& g, const Graph& h, std::uint64_t budget)
{
    Budget b(budget, "homomorphisms for pi0");
    auto homs = enumerate_homomorphisms(g, h, b);
    std::vector<int> parent(homs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    std::size_t classes = homs.size();
    const auto edges = g.edges();
    for (std::size_t i = 0; i < homs.size(); ++i)
        for (std::size_t j = i + 1; j < homs.size(); ++j) {
            b.tick();
            bool joint = true;
            for (auto [u, v] : edges)
                joint = joint && h.adjacent(homs[i][u], homs[j][v]) && h.adjacent(homs[j][u], homs[i][v]);
            int a = root(static_cast<int>(i)), c = root(static_cast<int>(j));
            if (joint && a != c) {
                parent[std::max(a, c)] = std::min(a, c);
                --classes;
            }
        }
    return classes;
}

} // namespace

std::size_t pi0_hom(const Graph& g, const Graph& h, const HomOptions& options)
{
    try {
        return component_count(hom_complex(g, h, nullptr, options).poset);
    } catch (const BudgetExceeded&) {
        // too many elements to materialize; components are decided by the minimal elements
        return pi0_from_minimal(g, h, options.budget);
    }
}

bool x_homotopic(const Graph& g, const Graph& h, const VertexMap& f, const VertexMap& k, const HomOptions& options)
{
    if (!is_homomorphism(g, h, f) || !is_homomorphism(g, h, k))
        throw PreconditionError("x_homotopic expects two homomorphisms");
    auto hom = hom_complex(g, h, nullptr, options);
    auto comp = poset_components(hom.poset);
    return comp[*hom.index_of(as_multihom(f, h.size()))] == comp[*hom.index_of(as_multihom(k, h.size()))];
}

std::optional<VertexMap> x_homotopy_inverse(const Graph& g, const Graph& h, const VertexMap& f,
                                            const HomOptions& options)
{
    if (!is_homomorphism(g, h, f))
        throw PreconditionError("x_homotopy_inverse expects a homomorphism");
    auto gg = hom_complex(g, g, nullptr, options);
    auto hh = hom_complex(h, h, nullptr, options);
    auto cg = poset_components(gg.poset);
    auto ch = poset_components(hh.poset);
    VertexMap id_g(g.size()), id_h(h.size());
    std::iota(id_g.begin(), id_g.end(), 0);
    std::iota(id_h.begin(), id_h.end(), 0);
    const int home_g = cg[*gg.index_of(as_multihom(id_g, g.size()))];
    const int home_h = ch[*hh.index_of(as_multihom(id_h, h.size()))];
    Budget budget(options.budget, "x-homotopy inverse search");
    for (const auto& k : enumerate_homomorphisms(h, g, budget)) {
        VertexMap kf(g.size()), fk(h.size());
        for (std::size_t v = 0; v < g.size(); ++v)
            kf[v] = k[f[v]];
        for (std::size_t v = 0; v < h.size(); ++v)
            fk[v] = f[k[v]];
        if (cg[*gg.index_of(as_multihom(kf, g.size()))] == home_g &&
            ch[*hh.index_of(as_multihom(fk, h.size()))] == home_h)
            return k;
    }
    return std::nullopt;
}

namespace {

std::vector<int> check_retract_target(const Graph& g, const Graph& h)
{
    if (!is_induced_subgraph(h, g))
        throw PreconditionError("retract target is not an induced subgraph");
    return embed_vertices(h, g);
}

} // namespace

DefRetractResult def_retract(const Graph& g, const Graph& h, bool exact, const HomOptions& options, int max_free)
{
    const std::size_t n = g.size();
    auto emb = check_retract_target(g, h);
    Bits in_h(n);
    for (int v : emb)
        in_h.set(v);
    VertexMap id(n);
    std::iota(id.begin(), id.end(), 0);

    DefRetractResult out;
    out.exact = exact;
    if (exact) {
        if (n - emb.size() > static_cast<std::size_t>(max_free))
            throw PreconditionError("exact retract search refuses " + std::to_string(n - emb.size()) +
                                    " vertices outside the subgraph");
        HomOptions opts = options;
        opts.fixed.assign(n, std::nullopt);
        for (int v : emb) {
            Bits b(n);
            b.set(v);
            opts.fixed[v] = b;
        }
        auto def = hom_complex(g, g, nullptr, opts);
        const int start = *def.index_of(as_multihom(id, n));
        std::vector<int> parent(def.elements.size(), -2);
        parent[start] = -1;
        std::queue<int> q;
        q.push(start);
        int goal = -1;
        while (!q.empty() && goal < 0) {
            int cur = q.front();
            q.pop();
            auto f = as_vertex_map(def.elements[cur]);
            if (f && std::all_of(f->begin(), f->end(), [&](int x) { return in_h.test(x); })) {
                goal = cur;
                break;
            }
            (def.poset.up(cur) | def.poset.down(cur)).for_each([&](int nb) {
                if (parent[nb] == -2) {
                    parent[nb] = cur;
                    q.push(nb);
                }
            });
        }
        if (goal < 0) {
            out.verdict = RetractVerdict::no;
            return out;
        }
        for (int cur = goal; cur >= 0; cur = parent[cur])
            out.path.push_back(def.elements[cur]);
        std::reverse(out.path.begin(), out.path.end());
        out.retraction = *as_vertex_map(out.path.back());
        out.verdict = RetractVerdict::yes;
        return out;
    }

    // sufficient mode: fold v onto w, passing through eta(u) = {v, w} where f(u) = v
    Bits alive = Bits::full(n);
    VertexMap f = id;
    out.path.push_back(as_multihom(f, n));
    while (true) {
        bool folded = false;
        for (std::size_t v = alive.first(); v < n && !folded; v = alive.next(v + 1)) {
            if (in_h.test(v))
                continue;
            Bits nv = g.neighbors(static_cast<int>(v)) & alive;
            for (std::size_t w = alive.first(); w < n; w = alive.next(w + 1)) {
                if (w == v || !nv.is_subset_of(g.neighbors(static_cast<int>(w))))
                    continue;
                MultiHom eta = as_multihom(f, n);
                for (std::size_t u = 0; u < n; ++u)
                    if (f[u] == static_cast<int>(v)) {
                        eta[u].set(w);
                        f[u] = static_cast<int>(w);
                    }
                out.path.push_back(std::move(eta));
                out.path.push_back(as_multihom(f, n));
                alive.reset(v);
                folded = true;
                break;
            }
        }
        if (!folded)
            break;
    }
    if (alive == in_h) {
        out.verdict = RetractVerdict::yes;
        out.retraction = f;
    } else {
        out.verdict = RetractVerdict::stuck;
    }
    return out;
}

bool validate_retract_path(const Graph& g, const Graph& h, const std::vector<MultiHom>& path)
{
    const std::size_t n = g.size();
    auto emb = check_retract_target(g, h);
    if (path.empty())
        return false;
    VertexMap id(n);
    std::iota(id.begin(), id.end(), 0);
    if (path.front() != as_multihom(id, n))
        return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!is_multihom(g, g, path[i]))
            return false;
        for (int v : emb)
            if (path[i][v].count() != 1 || !path[i][v].test(v))
                return false;
        if (i && !multihom_leq(path[i - 1], path[i]) && !multihom_leq(path[i], path[i - 1]))
            return false;
    }
    auto f = as_vertex_map(path.back());
    if (!f)
        return false;
    Bits in_h(n);
    for (int v : emb)
        in_h.set(v);
    return std::all_of(f->begin(), f->end(), [&](int x) { return in_h.test(x); });
}

// --------------------------------------------------------- Sing skeleton

SingSkeleton sing_skeleton(const Graph& t, const Graph& g, int n, std::uint64_t budget)
{
    if (n < 0 || n > 2)
        throw PreconditionError("Sing skeleton is limited to dimensions 0..2");
    SingSkeleton out{t, g, {}};
    Budget b(budget, "Sing simplex enumeration");
    for (int d = 0; d <= n; ++d)
        out.simplices.push_back(enumerate_homomorphisms(tensor_product(t, sigma_graph(d)), g, b));
    return out;
}

VertexMap sing_vertex(const VertexMap& simplex, std::size_t t_size, int n, int i)
{
    VertexMap f(t_size);
    for (std::size_t x = 0; x < t_size; ++x)
        f[x] = simplex[x * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(i)];
    return f;
}

std::size_t pi0_sing(const Graph& t, const Graph& g, std::uint64_t budget)
{
    auto sk = sing_skeleton(t, g, 1, budget);
    const auto& zero = sk.simplices[0];
    std::map<VertexMap, int> index;
    for (std::size_t i = 0; i < zero.size(); ++i)
        index.emplace(zero[i], static_cast<int>(i));
    std::vector<int> parent(zero.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    std::size_t classes = zero.size();
    for (const auto& s : sk.simplices[1]) {
        int a = root(index.at(sing_vertex(s, t.size(), 1, 0)));
        int b = root(index.at(sing_vertex(s, t.size(), 1, 1)));
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
            --classes;
        }
    }
    return classes;
}

} // namespace gtop
