#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

Adj adjacency(const gtop::Graph& g)
{
    Adj a;
    a.n = static_cast<int>(g.size());
    a.e.assign(a.n, std::vector<char>(a.n, 0));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            a.e[i][j] = g.adjacent(i, j) ? 1 : 0;
    return a;
}

int chromatic_number(const Adj& g)
{
    for (int v = 0; v < g.n; ++v)
        if (g.has(v, v))
            return -1;
    if (g.n == 0)
        return 0;
    for (int k = 1; k <= g.n; ++k) {
        std::vector<int> c(g.n, 0);
        // odometer over all k^n colourings
        while (true) {
            bool ok = true;
            for (int a = 0; a < g.n && ok; ++a)
                for (int b = a + 1; b < g.n && ok; ++b)
                    if (g.has(a, b) && c[a] == c[b])
                        ok = false;
            if (ok)
                return k;
            int i = 0;
            while (i < g.n && ++c[i] == k)
                c[i++] = 0;
            if (i == g.n)
                break;
        }
    }
    return g.n;
}

std::size_t count_homomorphisms(const Adj& g, const Adj& h)
{
    // vertices in input order, each checked against the earlier ones
    std::vector<int> f(g.n, 0);
    std::function<std::size_t(int)> rec = [&](int v) -> std::size_t {
        if (v == g.n)
            return 1;
        std::size_t total = 0;
        for (int x = 0; x < h.n; ++x) {
            f[v] = x;
            bool ok = true;
            for (int w = 0; w <= v && ok; ++w)
                if (g.has(v, w) && !h.has(x, f[w]))
                    ok = false;
            if (ok)
                total += rec(v + 1);
        }
        return total;
    };
    return rec(0);
}

namespace {

bool block_ok(const Adj& h, std::uint32_t s, std::uint32_t t)
{
    for (int x = 0; x < h.n; ++x)
        if (s >> x & 1u)
            for (int y = 0; y < h.n; ++y)
                if ((t >> y & 1u) && !h.has(x, y))
                    return false;
    return true;
}

} // namespace

std::vector<std::vector<std::uint32_t>> multihoms(const Adj& g, const Adj& h)
{
    std::vector<std::vector<std::uint32_t>> out;
    if (h.n == 0)
        return g.n == 0 ? std::vector<std::vector<std::uint32_t>>{{}} : out;
    const std::uint32_t top = (1u << h.n) - 1;
    std::vector<std::uint32_t> eta(g.n, 1);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            out.push_back(eta);
            return;
        }
        for (std::uint32_t s = 1; s <= top; ++s) {
            eta[v] = s;
            bool ok = true;
            for (int w = 0; w <= v && ok; ++w)
                if (g.has(v, w) && !block_ok(h, s, eta[w]))
                    ok = false;
            if (ok)
                rec(v + 1);
        }
    };
    rec(0);
    return out;
}

std::size_t multihom_components(const std::vector<std::vector<std::uint32_t>>& elems)
{
    const std::size_t n = elems.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto leq = [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if ((a[i] & ~b[i]) != 0)
                return false;
        return true;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq(elems[i], elems[j]) || leq(elems[j], elems[i]))
                parent[find(i)] = find(j);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += find(i) == i;
    return c;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> box_pairs(const Adj& g)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    const std::uint32_t top = (1u << g.n) - 1;
    for (std::uint32_t s = 1; s <= top; ++s)
        for (std::uint32_t t = 1; t <= top; ++t)
            if (block_ok(g, s, t))
                out.emplace_back(s, t);
    return out;
}

std::vector<std::size_t> padded(std::vector<std::size_t> v, std::size_t n)
{
    if (v.size() < n)
        v.resize(n, 0);
    return v;
}

std::vector<std::vector<int>> close_faces(const std::vector<std::vector<int>>& facets)
{
    std::set<std::vector<int>> faces;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        const std::size_t m = f.size();
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> s;
            for (std::size_t i = 0; i < m; ++i)
                if (mask >> i & 1u)
                    s.push_back(f[i]);
            faces.insert(s);
        }
    }
    return {faces.begin(), faces.end()};
}

std::vector<std::size_t> reduced_betti_dense(const std::vector<std::vector<int>>& simplices, int max_dim)
{
    // cells by dimension; the empty simplex sits in dimension -1
    std::vector<std::vector<std::vector<int>>> by_dim(max_dim + 3);
    by_dim[0].push_back({});
    for (const auto& s : simplices)
        if (static_cast<int>(s.size()) <= max_dim + 2)
            by_dim[s.size()].push_back(s);
    // rank of the boundary from size d to size d-1
    auto rank = [&](std::size_t d) -> std::size_t {
        if (d == 0 || d >= by_dim.size() || by_dim[d].empty())
            return 0;
        std::map<std::vector<int>, std::size_t> row;
        for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i)
            row[by_dim[d - 1][i]] = i;
        std::vector<std::vector<char>> m(by_dim[d].size(), std::vector<char>(by_dim[d - 1].size(), 0));
        for (std::size_t c = 0; c < by_dim[d].size(); ++c)
            for (std::size_t drop = 0; drop < d; ++drop) {
                auto f = by_dim[d][c];
                f.erase(f.begin() + static_cast<long>(drop));
                m[c][row.at(f)] = 1;
            }
        std::size_t r = 0;
        const std::size_t cols = by_dim[d - 1].size();
        for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
            std::size_t piv = r;
            while (piv < m.size() && !m[piv][col])
                ++piv;
            if (piv == m.size())
                continue;
            std::swap(m[piv], m[r]);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (i != r && m[i][col])
                    for (std::size_t k = col; k < cols; ++k)
                        m[i][k] ^= m[r][k];
            ++r;
        }
        return r;
    };
    std::vector<std::size_t> out;
    for (int d = 0; d <= max_dim; ++d) {
        std::size_t size = static_cast<std::size_t>(d) + 1;
        std::size_t cells = by_dim[size].size();
        out.push_back(cells - rank(size) - rank(size + 1));
    }
    return out;
}

std::vector<std::vector<char>> relation(const gtop::Poset& p)
{
    std::vector<std::vector<char>> r(p.size(), std::vector<char>(p.size(), 0));
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            r[a][b] = p.leq(static_cast<int>(a), static_cast<int>(b));
    return r;
}

std::vector<std::vector<int>> all_chains(const std::vector<std::vector<char>>& leq)
{
    const int n = static_cast<int>(leq.size());
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u)
                s.push_back(i);
        bool chain = true;
        for (std::size_t i = 0; i < s.size() && chain; ++i)
            for (std::size_t j = i + 1; j < s.size() && chain; ++j)
                chain = leq[s[i]][s[j]] || leq[s[j]][s[i]];
        if (chain)
            out.push_back(s);
    }
    return out;
}

namespace {

bool is_beat(const std::vector<std::vector<char>>& leq, std::uint32_t alive, int x)
{
    const int n = static_cast<int>(leq.size());
    std::vector<int> above, below;
    for (int y = 0; y < n; ++y) {
        if (y == x || !(alive >> y & 1u))
            continue;
        if (leq[x][y])
            above.push_back(y);
        if (leq[y][x])
            below.push_back(y);
    }
    for (int m : above)
        if (std::all_of(above.begin(), above.end(), [&](int y) { return leq[m][y] != 0; }))
            return true;
    for (int m : below)
        if (std::all_of(below.begin(), below.end(), [&](int y) { return leq[y][m] != 0; }))
            return true;
    return false;
}

} // namespace

std::size_t min_core_size(const std::vector<std::vector<char>>& leq)
{
    const int n = static_cast<int>(leq.size());
    std::map<std::uint32_t, std::size_t> memo;
    std::function<std::size_t(std::uint32_t)> rec = [&](std::uint32_t alive) {
        if (auto it = memo.find(alive); it != memo.end())
            return it->second;
        std::size_t best = static_cast<std::size_t>(__builtin_popcount(alive));
        for (int x = 0; x < n; ++x)
            if ((alive >> x & 1u) && is_beat(leq, alive, x))
                best = std::min(best, rec(alive & ~(1u << x)));
        return memo[alive] = best;
    };
    return rec(n == 32 ? ~0u : (1u << n) - 1);
}

bool collapses_to(const std::vector<std::vector<char>>& leq, std::uint32_t keep)
{
    const int n = static_cast<int>(leq.size());
    std::map<std::uint32_t, bool> memo;
    std::function<bool(std::uint32_t)> rec = [&](std::uint32_t alive) {
        if (alive == keep)
            return true;
        if (auto it = memo.find(alive); it != memo.end())
            return it->second;
        bool ok = false;
        for (int x = 0; x < n && !ok; ++x)
            if ((alive >> x & 1u) && !(keep >> x & 1u) && is_beat(leq, alive, x))
                ok = rec(alive & ~(1u << x));
        return memo[alive] = ok;
    };
    return rec((1u << n) - 1);
}

std::size_t poset_components(const std::vector<std::vector<char>>& leq)
{
    const std::size_t n = leq.size();
    std::vector<int> seen(n, 0);
    std::size_t c = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        ++c;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < n; ++y)
                if (!seen[y] && (leq[x][y] || leq[y][x])) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
    }
    return c;
}

std::size_t pi0_sing(const Adj& t, const Adj& g)
{
    // vertices: homomorphisms T -> G as maps; edges from maps T x Sigma^1 -> G
    std::vector<std::vector<int>> homs;
    if (t.n == 0)
        return 1;
    if (g.n == 0)
        return 0;
    std::vector<int> f(t.n, 0);
    while (true) {
        bool ok = true;
        for (int a = 0; a < t.n && ok; ++a)
            for (int b = 0; b < t.n && ok; ++b)
                if (t.has(a, b) && !g.has(f[a], f[b]))
                    ok = false;
        if (ok)
            homs.push_back(f);
        int i = 0;
        while (i < t.n && ++f[i] == g.n)
            f[i++] = 0;
        if (i == t.n)
            break;
    }
    // T x Sigma^1 with Sigma^1 looped K_2: (x,i) ~ (y,j) iff x ~ y. A map is a
    // pair (f0, f1) with f_i(x) ~ f_j(y) for all x ~ y and all i, j.
    const std::size_t n = homs.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool ok = true;
            for (int a = 0; a < t.n && ok; ++a)
                for (int b = 0; b < t.n && ok; ++b)
                    if (t.has(a, b) && !g.has(homs[i][a], homs[j][b]))
                        ok = false;
            if (ok)
                parent[find(i)] = find(j);
        }
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += find(i) == i;
    return c;
}

gtop::Graph random_graph(std::mt19937_64& rng, int n, double p, double loop_p)
{
    std::bernoulli_distribution edge(p), loop(loop_p);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (loop_p > 0 && loop(rng))
            edges.emplace_back(i, i);
        for (int j = i + 1; j < n; ++j)
            if (edge(rng))
                edges.emplace_back(i, j);
    }
    return gtop::Graph::from_edges(labels, edges);
}

gtop::Poset random_poset(std::mt19937_64& rng, int n, double p)
{
    // random DAG on a shuffled order, then closed
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng))
                pairs.emplace_back(order[i], order[j]);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back("p" + std::to_string(i));
    return gtop::Poset::from_relations(labels, pairs);
}

gtop::SimplicialComplex random_complex(std::mt19937_64& rng, int n, int facets, int max_dim)
{
    std::vector<std::vector<std::string>> simplices;
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    for (int i = 0; i < facets; ++i) {
        std::shuffle(verts.begin(), verts.end(), rng);
        int d = std::min(dim(rng), n - 1);
        std::vector<std::string> s;
        for (int j = 0; j <= d; ++j)
            s.push_back(std::to_string(verts[j]));
        simplices.push_back(s);
    }
    return gtop::SimplicialComplex::from_labelled(simplices);
}

} // namespace oracle
