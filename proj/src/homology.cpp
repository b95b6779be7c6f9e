#include "gtop/homology.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace gtop {

namespace {

ChainComplexGF2 assemble(std::vector<std::vector<Simplex>> cells, bool truncated)
{
    ChainComplexGF2 c;
    c.truncated = truncated;
    for (auto& level : cells)
        std::sort(level.begin(), level.end());
    c.boundary.resize(cells.size());
    if (!cells.empty())
        c.boundary[0].assign(cells[0].size(), std::vector<int>{0});
    for (std::size_t d = 1; d < cells.size(); ++d) {
        std::unordered_map<Simplex, int, SimplexHash> index;
        index.reserve(cells[d - 1].size());
        for (std::size_t i = 0; i < cells[d - 1].size(); ++i)
            index.emplace(cells[d - 1][i], static_cast<int>(i));
        auto& cols = c.boundary[d];
        cols.reserve(cells[d].size());
        for (const auto& s : cells[d]) {
            std::vector<int> col;
            col.reserve(s.size());
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                Simplex f;
                f.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != skip)
                        f.push_back(s[i]);
                col.push_back(index.at(f));
            }
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
    }
    c.cells = std::move(cells);
    return c;
}

std::vector<std::size_t> betti_from(const ChainComplexGF2& c, int max_dim)
{
    const int top = static_cast<int>(c.cells.size()) - 1;
    std::vector<std::size_t> rank(c.cells.size() + 1, 0);
    for (int d = 0; d <= top; ++d)
        rank[d] = rank_gf2(c.boundary[d]);
    std::vector<std::size_t> out;
    const int last = std::min(max_dim, c.truncated ? top - 1 : top);
    for (int d = 0; d <= last; ++d)
        out.push_back(c.cells[d].size() - rank[d] - rank[d + 1]);
    return out;
}

} // namespace

ChainComplexGF2 chain_complex(const SimplicialComplex& k, std::optional<int> top_dim)
{
    const int dim = k.dimension();
    const int top = top_dim ? std::min(*top_dim, dim) : dim;
    std::vector<std::vector<Simplex>> cells(static_cast<std::size_t>(std::max(top + 1, 0)));
    if (top == dim) {
        for (const auto& s : k.faces())
            cells[s.size() - 1].push_back(s);
    } else {
        std::unordered_set<Simplex, SimplexHash> seen;
        for (const auto& f : k.facets()) {
            Simplex cur;
            auto rec = [&](auto& self, std::size_t start) -> void {
                if (!cur.empty() && seen.insert(cur).second)
                    cells[cur.size() - 1].push_back(cur);
                if (static_cast<int>(cur.size()) == top + 1)
                    return;
                for (std::size_t i = start; i < f.size(); ++i) {
                    cur.push_back(f[i]);
                    self(self, i + 1);
                    cur.pop_back();
                }
            };
            rec(rec, 0);
        }
    }
    return assemble(std::move(cells), top < dim);
}

ChainComplexGF2 chain_complex(const Poset& p, std::optional<int> top_dim)
{
    const std::size_t max_size = top_dim ? static_cast<std::size_t>(*top_dim + 2) : p.size() + 1;
    auto all = chains(p, max_size);
    std::size_t longest = 0;
    for (const auto& c : all)
        longest = std::max(longest, c.size());
    bool truncated = top_dim && longest == max_size;
    std::vector<std::vector<Simplex>> cells(longest);
    for (auto& c : all)
        cells[c.size() - 1].push_back(std::move(c));
    if (truncated) {
        // the extra level only served to detect truncation
        cells.pop_back();
    }
    return assemble(std::move(cells), truncated);
}

std::size_t rank_gf2(std::vector<std::vector<int>> columns)
{
    // column reduction with pivot on the largest row index
    std::unordered_map<int, std::size_t> pivot_of;
    std::size_t rank = 0;
    std::vector<int> scratch;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto& col = columns[j];
        while (!col.empty()) {
            auto it = pivot_of.find(col.back());
            if (it == pivot_of.end())
                break;
            const auto& other = columns[it->second];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
        if (!col.empty()) {
            pivot_of.emplace(col.back(), j);
            ++rank;
        }
    }
    return rank;
}

bool boundary_squared_zero(const ChainComplexGF2& c)
{
    for (std::size_t d = 1; d < c.boundary.size(); ++d)
        for (const auto& col : c.boundary[d]) {
            std::vector<int> sum;
            for (int f : col) {
                std::vector<int> next;
                const auto& face = c.boundary[d - 1][f];
                std::set_symmetric_difference(sum.begin(), sum.end(), face.begin(), face.end(),
                                              std::back_inserter(next));
                sum.swap(next);
            }
            if (!sum.empty())
                return false;
        }
    return true;
}

std::vector<DegreeAudit> homology_audit(const ChainComplexGF2& c)
{
    const int top = static_cast<int>(c.cells.size()) - 1;
    std::vector<std::size_t> rank(c.cells.size() + 1, 0);
    for (int d = 0; d <= top; ++d)
        rank[d] = rank_gf2(c.boundary[d]);
    std::vector<DegreeAudit> out;
    const int last = c.truncated ? top - 1 : top;
    for (int d = 0; d <= last; ++d)
        out.push_back({d, c.cells[d].size(), rank[d], rank[d + 1], c.cells[d].size() - rank[d] - rank[d + 1]});
    return out;
}

std::vector<std::size_t> reduced_betti(const SimplicialComplex& k, int max_dim)
{
    if (k.empty())
        throw PreconditionError("reduced homology of the empty complex");
    if (max_dim < 0)
        throw PreconditionError("dimension cap must be non-negative");
    return betti_from(chain_complex(k, max_dim + 1), max_dim);
}

std::vector<std::size_t> poset_reduced_betti(const Poset& p, int max_dim)
{
    if (p.empty())
        throw PreconditionError("reduced homology of the empty poset");
    if (max_dim < 0)
        throw PreconditionError("dimension cap must be non-negative");
    return betti_from(chain_complex(p, max_dim + 1), max_dim);
}

HomologyComparison homologically_equal(const SimplicialComplex& a, const SimplicialComplex& b, int max_dim)
{
    HomologyComparison out{false, reduced_betti(a, max_dim), reduced_betti(b, max_dim)};
    auto x = out.first, y = out.second;
    x.resize(std::max(x.size(), y.size()), 0);
    y.resize(x.size(), 0);
    out.equal = x == y;
    return out;
}

long euler_characteristic(const SimplicialComplex& k)
{
    long chi = 0;
    auto f = k.f_vector();
    for (std::size_t d = 0; d < f.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f[d]);
    return chi;
}

} // namespace gtop
