#include "gtop/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace gtop {

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels))
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
            throw PreconditionError("duplicate vertex label '" + labels_[i] + "'");
    adj_.assign(labels_.size(), Bits(labels_.size()));
}

Graph Graph::from_edges(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges)
{
    Graph g(std::move(labels));
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

std::optional<int> Graph::find(const std::string& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int Graph::index_of(const std::string& label) const
{
    auto v = find(label);
    if (!v)
        throw PreconditionError("no vertex labelled '" + label + "'");
    return *v;
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= size() || static_cast<std::size_t>(v) >= size())
        throw PreconditionError("edge endpoint is not a vertex");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v)
{
    adj_[u].reset(v);
    adj_[v].reset(u);
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < static_cast<int>(size()); ++u)
        adj_[u].for_each([&](int v) {
            if (u <= v)
                out.emplace_back(u, v);
        });
    return out;
}

Bits Graph::looped_vertices() const
{
    Bits b(size());
    for (int v = 0; v < static_cast<int>(size()); ++v)
        if (has_loop(v))
            b.set(v);
    return b;
}

Graph Graph::induced(const std::vector<int>& vertices) const
{
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (int v : vertices)
        labels.push_back(labels_[v]);
    Graph out(std::move(labels));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph Graph::without_vertex(int v) const
{
    std::vector<int> keep;
    for (int u = 0; u < static_cast<int>(size()); ++u)
        if (u != v)
            keep.push_back(u);
    return induced(keep);
}

bool is_homomorphism(const Graph& g, const Graph& h, const VertexMap& f)
{
    if (f.size() != g.size())
        return false;
    for (int x : f)
        if (x < 0 || static_cast<std::size_t>(x) >= h.size())
            return false;
    for (auto [u, v] : g.edges())
        if (!h.adjacent(f[u], f[v]))
            return false;
    return true;
}

bool is_injective(const VertexMap& f)
{
    std::set<int> seen(f.begin(), f.end());
    return seen.size() == f.size();
}

namespace {

/// Backtracking over vertices in descending-degree order. The visitor
/// returns false to stop the search.
void search_homomorphisms(const Graph& g, const Graph& h, Budget& budget,
                          const std::function<bool(const VertexMap&)>& visit)
{
    const int n = static_cast<int>(g.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    const Bits looped = h.looped_vertices();
    VertexMap f(n, -1);
    bool stop = false;

    std::function<void(int)> rec = [&](int depth) {
        if (stop)
            return;
        budget.tick();
        if (depth == n) {
            if (!visit(f))
                stop = true;
            return;
        }
        const int v = order[depth];
        Bits cand = Bits::full(h.size());
        if (g.has_loop(v))
            cand &= looped;
        g.neighbors(v).for_each([&](int u) {
            if (u != v && f[u] >= 0)
                cand &= h.neighbors(f[u]);
        });
        for (std::size_t x = cand.first(); x < cand.size() && !stop; x = cand.next(x + 1)) {
            f[v] = static_cast<int>(x);
            rec(depth + 1);
        }
        f[v] = -1;
    };
    rec(0);
}

} // namespace

std::vector<VertexMap> enumerate_homomorphisms(const Graph& g, const Graph& h, Budget& budget)
{
    std::vector<VertexMap> out;
    search_homomorphisms(g, h, budget, [&](const VertexMap& f) {
        out.push_back(f);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexMap> enumerate_homomorphisms(const Graph& g, const Graph& h)
{
    Budget budget;
    return enumerate_homomorphisms(g, h, budget);
}

std::optional<VertexMap> find_homomorphism(const Graph& g, const Graph& h, Budget& budget)
{
    std::optional<VertexMap> found;
    search_homomorphisms(g, h, budget, [&](const VertexMap& f) {
        found = f;
        return false;
    });
    return found;
}

Graph tensor_product(const Graph& g, const Graph& h)
{
    const int m = static_cast<int>(h.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j)
            labels.push_back("(" + g.label(static_cast<int>(i)) + "," + h.label(static_cast<int>(j)) + ")");
    Graph out(std::move(labels));
    for (auto [x, y] : g.edges())
        for (auto [v, w] : h.edges()) {
            out.add_edge(x * m + v, y * m + w);
            out.add_edge(x * m + w, y * m + v);
        }
    return out;
}

std::vector<int> embed_vertices(const Graph& sub, const Graph& host)
{
    std::vector<int> out;
    out.reserve(sub.size());
    for (const auto& l : sub.labels()) {
        auto v = host.find(l);
        if (!v)
            throw PreconditionError("vertex '" + l + "' is not in the host graph");
        out.push_back(*v);
    }
    return out;
}

bool is_subgraph(const Graph& sub, const Graph& host)
{
    for (const auto& l : sub.labels())
        if (!host.find(l))
            return false;
    auto emb = embed_vertices(sub, host);
    for (auto [u, v] : sub.edges())
        if (!host.adjacent(emb[u], emb[v]))
            return false;
    return true;
}

bool is_induced_subgraph(const Graph& sub, const Graph& host)
{
    if (!is_subgraph(sub, host))
        return false;
    return sub == host.induced(embed_vertices(sub, host));
}

// ---------------------------------------------------------------- folds

namespace {

std::optional<int> dismantling_witness(const Graph& g, const Bits& alive, int v)
{
    Bits nv = g.neighbors(v) & alive;
    for (std::size_t w = alive.first(); w < alive.size(); w = alive.next(w + 1)) {
        if (static_cast<int>(w) == v)
            continue;
        if (nv.is_subset_of(g.neighbors(static_cast<int>(w)) & alive))
            return static_cast<int>(w);
    }
    return std::nullopt;
}

} // namespace

std::vector<Fold> dismantlable_vertices(const Graph& g)
{
    std::vector<Fold> out;
    Bits alive = Bits::full(g.size());
    for (int v = 0; v < static_cast<int>(g.size()); ++v)
        if (auto w = dismantling_witness(g, alive, v))
            out.push_back({v, *w});
    return out;
}

bool is_stiff(const Graph& g)
{
    return dismantlable_vertices(g).empty();
}

FoldAnalysis fold_analysis(const Graph& g, std::mt19937_64* rng)
{
    FoldAnalysis out;
    out.dismantlable = dismantlable_vertices(g);
    Bits alive = Bits::full(g.size());
    while (true) {
        std::vector<Fold> options;
        for (std::size_t v = alive.first(); v < alive.size(); v = alive.next(v + 1))
            if (auto w = dismantling_witness(g, alive, static_cast<int>(v))) {
                options.push_back({static_cast<int>(v), *w});
                if (!rng)
                    break;
            }
        if (options.empty())
            break;
        Fold pick = options.front();
        if (rng)
            pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(*rng)];
        alive.reset(pick.removed);
        out.folds.push_back(pick);
    }
    out.core_vertices = alive.members();
    out.core = g.induced(out.core_vertices);
    return out;
}

// ------------------------------------------------------- neighbourhoods

Graph graph_neighborhood(const Graph& host, const Graph& sub, int r)
{
    if (r < 0)
        throw PreconditionError("neighbourhood radius must be non-negative");
    if (!is_subgraph(sub, host))
        throw PreconditionError("neighbourhood of a non-subgraph");
    Graph current = sub;
    for (int step = 0; step < r; ++step) {
        auto emb = embed_vertices(current, host);
        Bits in(host.size());
        for (int v : emb)
            in.set(v);
        Bits verts = in;
        for (int v : emb)
            verts |= host.neighbors(v);
        std::vector<int> vs = verts.members();
        std::vector<std::string> labels;
        for (int v : vs)
            labels.push_back(host.label(v));
        Graph next(std::move(labels));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i; j < vs.size(); ++j)
                if (host.adjacent(vs[i], vs[j]) && (in.test(vs[i]) || in.test(vs[j])))
                    next.add_edge(static_cast<int>(i), static_cast<int>(j));
        current = std::move(next);
    }
    return current;
}

Pushout pushout_attach(const Graph& g, const Graph& h, const Graph& y, const VertexMap& f)
{
    if (!is_subgraph(h, g))
        throw PreconditionError("pushout along a non-subgraph");
    if (!is_homomorphism(h, y, f))
        throw PreconditionError("attaching map is not a homomorphism H -> Y");

    auto emb = embed_vertices(h, g);
    std::vector<int> h_of(g.size(), -1);
    for (std::size_t i = 0; i < emb.size(); ++i)
        h_of[emb[i]] = static_cast<int>(i);

    std::vector<std::string> labels = y.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    Pushout out;
    out.from_y.resize(y.size());
    std::iota(out.from_y.begin(), out.from_y.end(), 0);
    out.from_g.assign(g.size(), -1);
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        if (h_of[v] >= 0) {
            out.from_g[v] = f[h_of[v]];
            continue;
        }
        std::string l = g.label(v);
        while (used.count(l))
            l += "'";
        used.insert(l);
        out.from_g[v] = static_cast<int>(labels.size());
        labels.push_back(l);
    }
    out.x = Graph(std::move(labels));
    for (auto [a, b] : y.edges())
        out.x.add_edge(a, b);
    for (auto [a, b] : g.edges())
        out.x.add_edge(out.from_g[a], out.from_g[b]);
    return out;
}

// ------------------------------------------------------------ invariants

std::vector<int> distances_from(const Graph& g, int source)
{
    std::vector<int> dist(g.size(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        g.neighbors(u).for_each([&](int v) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        });
    }
    return dist;
}

std::vector<std::vector<int>> connected_components(const Graph& g)
{
    std::vector<int> comp(g.size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < static_cast<int>(g.size()); ++s) {
        if (comp[s] >= 0)
            continue;
        auto dist = distances_from(g, s);
        std::vector<int> members;
        for (int v = 0; v < static_cast<int>(g.size()); ++v)
            if (dist[v] >= 0) {
                comp[v] = static_cast<int>(out.size());
                members.push_back(v);
            }
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

int diameter(const Graph& g)
{
    if (g.empty())
        throw PreconditionError("diameter of the empty graph");
    int best = 0;
    for (int s = 0; s < static_cast<int>(g.size()); ++s)
        for (int d : distances_from(g, s)) {
            if (d < 0)
                throw PreconditionError("diameter of a disconnected graph");
            best = std::max(best, d);
        }
    return best;
}

std::optional<int> chromatic_number(const Graph& g, Budget& budget)
{
    for (int v = 0; v < static_cast<int>(g.size()); ++v)
        if (g.has_loop(v))
            return std::nullopt;
    for (int k = 0;; ++k)
        if (find_homomorphism(g, complete_graph(k), budget))
            return k;
}

std::optional<int> chromatic_number(const Graph& g)
{
    Budget budget;
    return chromatic_number(g, budget);
}

std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b, Budget& budget)
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return std::nullopt;
    std::vector<std::size_t> da, db;
    for (int v = 0; v < static_cast<int>(a.size()); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return std::nullopt;

    const int n = static_cast<int>(a.size());
    VertexMap f(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        budget.tick();
        if (v == n)
            return true;
        for (int x = 0; x < n; ++x) {
            if (used[x] || a.degree(v) != b.degree(x) || a.has_loop(v) != b.has_loop(x))
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = a.adjacent(u, v) == b.adjacent(f[u], x);
            if (!ok)
                continue;
            f[v] = x;
            used[x] = 1;
            if (rec(v + 1))
                return true;
            used[x] = 0;
        }
        f[v] = -1;
        return false;
    };
    if (rec(0))
        return f;
    return std::nullopt;
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    Budget budget;
    return find_isomorphism(a, b, budget).has_value();
}

EndoAutoAnalysis endo_auto_analysis(const Graph& g, Budget& budget)
{
    EndoAutoAnalysis out;
    std::vector<Perm> autos;
    const auto edge_count = g.edge_count();
    bool all = true;
    search_homomorphisms(g, g, budget, [&](const VertexMap& f) {
        ++out.endomorphism_count;
        bool is_auto = is_injective(f);
        if (is_auto) {
            // a bijective endomorphism of a finite graph maps E onto E
            Graph img(g.labels());
            for (auto [u, v] : g.edges())
                img.add_edge(f[u], f[v]);
            is_auto = img.edge_count() == edge_count;
        }
        if (is_auto)
            autos.push_back(f);
        else
            all = false;
        return true;
    });
    out.all_endomorphisms_are_automorphisms = all;
    out.automorphisms = close_permutations(autos, g.size(), g.labels());
    return out;
}

EndoAutoAnalysis endo_auto_analysis(const Graph& g)
{
    Budget budget;
    return endo_auto_analysis(g, budget);
}

// --------------------------------------------------------------- actions

Validation validate_action(const GroupAction& action, const Graph& g)
{
    if (auto v = validate_action_laws(action); !v)
        return v;
    if (action.degree() != g.size())
        return Validation::structural_error("action degree " + std::to_string(action.degree()) +
                                            " does not match " + std::to_string(g.size()) + " vertices");
    for (std::size_t e = 0; e < action.perm.size(); ++e)
        for (auto [u, v] : g.edges())
            if (!g.adjacent(action.perm[e][u], action.perm[e][v]))
                return Validation::axiom_failure("element does not act by a graph automorphism",
                                                 {static_cast<int>(e), u, v});
    return Validation::pass();
}

GraphQuotient quotient_and_fixed(const Graph& g, const GroupAction& action, const Subgroup& sub)
{
    if (action.degree() != g.size())
        throw PreconditionError("action does not match the graph");
    if (!is_subgroup(action.group, sub))
        throw PreconditionError("quotient by a subset that is not a subgroup");
    GraphQuotient out;
    out.orbits = orbits(action, sub);
    out.projection.assign(g.size(), -1);
    std::vector<std::string> labels;
    for (std::size_t o = 0; o < out.orbits.size(); ++o) {
        labels.push_back(g.label(out.orbits[o].front()));
        for (int v : out.orbits[o])
            out.projection[v] = static_cast<int>(o);
    }
    out.quotient = Graph(std::move(labels));
    for (auto [u, v] : g.edges())
        out.quotient.add_edge(out.projection[u], out.projection[v]);
    out.fixed_vertices = fixed_points(action, sub);
    out.fixed = g.induced(out.fixed_vertices);
    return out;
}

} // namespace gtop
