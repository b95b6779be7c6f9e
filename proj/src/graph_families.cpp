#include "gtop/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gtop {

namespace {

std::vector<std::string> numbered(int from, int count)
{
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i)
        out.push_back(std::to_string(from + i));
    return out;
}

std::string subset_label(const std::vector<int>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

} // namespace

Graph empty_graph()
{
    return Graph(std::vector<std::string>{});
}

Graph complete_graph(int n)
{
    if (n < 0)
        throw PreconditionError("complete graph needs n >= 0");
    Graph g(numbered(1, n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw PreconditionError("cycle needs n >= 3");
    Graph g(numbered(0, n));
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n)
{
    if (n < 1)
        throw PreconditionError("path needs n >= 1");
    Graph g(numbered(0, n));
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph looped_point()
{
    Graph g(std::vector<std::string>{"*"});
    g.add_edge(0, 0);
    return g;
}

Graph sigma_graph(int n)
{
    if (n < 0)
        throw PreconditionError("sigma graph needs n >= 0");
    Graph g(numbered(0, n + 1));
    for (int u = 0; u <= n; ++u)
        for (int v = u; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

std::vector<std::vector<int>> stable_subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            // cyclic stability: n-1 and 0 are consecutive in Z_n
            if (!(k > 0 && cur.front() == 0 && cur.back() == n - 1 && n > 1))
                out.push_back(cur);
            return;
        }
        for (int x = start; x < n; ++x) {
            if (!cur.empty() && x == cur.back() + 1)
                continue;
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Graph stable_kneser_graph(int n, int k)
{
    if (k < 1 || n < 2 * k)
        throw PreconditionError("stable Kneser graph needs k >= 1 and n >= 2k");
    auto subsets = stable_subsets(n, k);
    std::vector<std::string> labels;
    for (const auto& s : subsets)
        labels.push_back(subset_label(s));
    Graph g(std::move(labels));
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(), subsets[b].end(),
                                  std::back_inserter(common));
            if (common.empty())
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

GroupAction symmetric_action_on_complete(int n)
{
    return GroupAction::from_permutation_group(symmetric_group(n));
}

GroupAction dihedral_action_on_cycle(int n)
{
    return GroupAction::from_permutation_group(dihedral_group(n));
}

GroupAction dihedral_action_on_stable_kneser(int n, int k)
{
    auto dn = dihedral_group(n);
    auto subsets = stable_subsets(n, k);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        index[subsets[i]] = static_cast<int>(i);
    GroupAction a{dn.group, Side::left, {}};
    for (const auto& p : dn.perms) {
        Perm induced(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            std::vector<int> img;
            for (int x : subsets[i])
                img.push_back(p[x]);
            std::sort(img.begin(), img.end());
            induced[i] = index.at(img);
        }
        a.perm.push_back(std::move(induced));
    }
    return a;
}

GroupAction flip_action_on_k2()
{
    return GroupAction::from_permutation_group(symmetric_group(2));
}

} // namespace gtop
