#include "gtop/complex.hpp"

#include "gtop/bits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

namespace gtop {

namespace detail {

struct FaceCache {
    std::once_flag once;
    std::vector<Simplex> faces;
    std::unordered_map<Simplex, int, SimplexHash> index;
};

} // namespace detail

namespace {

bool sorted_subset(const Simplex& a, const Simplex& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool face_order(const Simplex& a, const Simplex& b)
{
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::vector<Simplex> maximal_only(std::vector<Simplex> simplices, std::size_t vertex_count)
{
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

    std::vector<std::vector<int>> containing(vertex_count); // vertex -> kept facets
    std::vector<Simplex> kept;
    for (auto& s : simplices) {
        if (s.empty())
            continue;
        bool dominated = false;
        for (int f : containing[s.front()])
            if (kept[f].size() > s.size() && sorted_subset(s, kept[f])) {
                dominated = true;
                break;
            }
        if (dominated)
            continue;
        for (int v : s)
            containing[v].push_back(static_cast<int>(kept.size()));
        kept.push_back(std::move(s));
    }
    std::vector<char> covered(vertex_count, 0);
    for (const auto& f : kept)
        for (int v : f)
            covered[v] = 1;
    for (std::size_t v = 0; v < vertex_count; ++v)
        if (!covered[v])
            kept.push_back({static_cast<int>(v)});
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<detail::FaceCache>()) {}

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& simplices)
    : labels_(std::move(labels)), cache_(std::make_shared<detail::FaceCache>())
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
            throw PreconditionError("duplicate vertex label '" + labels_[i] + "'");
    for (const auto& s : simplices)
        for (int v : s)
            if (v < 0 || static_cast<std::size_t>(v) >= labels_.size())
                throw PreconditionError("simplex refers to an unknown vertex");
    facets_ = maximal_only(simplices, labels_.size());
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<std::string> labels, std::vector<Simplex> facets)
{
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    for (std::size_t i = 0; i < k.labels_.size(); ++i)
        k.index_.emplace(k.labels_[i], static_cast<int>(i));
    std::sort(facets.begin(), facets.end());
    k.facets_ = std::move(facets);
    return k;
}

SimplicialComplex SimplicialComplex::from_labelled(const std::vector<std::vector<std::string>>& simplices)
{
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::vector<Simplex> out;
    for (const auto& s : simplices) {
        Simplex t;
        for (const auto& l : s) {
            auto [it, inserted] = index.emplace(l, static_cast<int>(labels.size()));
            if (inserted)
                labels.push_back(l);
            t.push_back(it->second);
        }
        out.push_back(std::move(t));
    }
    return SimplicialComplex(std::move(labels), out);
}

std::optional<int> SimplicialComplex::find(const std::string& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int SimplicialComplex::index_of(const std::string& label) const
{
    auto v = find(label);
    if (!v)
        throw PreconditionError("no vertex labelled '" + label + "'");
    return *v;
}

int SimplicialComplex::dimension() const
{
    int d = -1;
    for (const auto& f : facets_)
        d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

const std::vector<Simplex>& SimplicialComplex::faces() const
{
    std::call_once(cache_->once, [this] {
        std::unordered_set<Simplex, SimplexHash> all;
        for (const auto& f : facets_) {
            const std::size_t m = f.size();
            if (m > 24)
                throw PreconditionError("facet too large to enumerate its faces");
            for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
                Simplex s;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (std::uint32_t{1} << i))
                        s.push_back(f[i]);
                all.insert(std::move(s));
            }
        }
        cache_->faces.assign(all.begin(), all.end());
        std::sort(cache_->faces.begin(), cache_->faces.end(), face_order);
        cache_->index.reserve(cache_->faces.size());
        for (std::size_t i = 0; i < cache_->faces.size(); ++i)
            cache_->index.emplace(cache_->faces[i], static_cast<int>(i));
    });
    return cache_->faces;
}

std::optional<int> SimplicialComplex::face_index(const Simplex& s) const
{
    faces();
    auto it = cache_->index.find(s);
    if (it == cache_->index.end())
        return std::nullopt;
    return it->second;
}

bool SimplicialComplex::contains(const Simplex& s) const
{
    return s.empty() || face_index(s).has_value();
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& s : faces())
        ++f[s.size() - 1];
    return f;
}

std::string SimplicialComplex::simplex_label(const Simplex& s) const
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += labels_[s[i]];
    }
    return out + "}";
}

SimplicialComplex SimplicialComplex::without_vertices(const std::vector<int>& removed) const
{
    std::vector<char> gone(size(), 0);
    for (int v : removed)
        gone[v] = 1;
    std::vector<int> local(size(), -1);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < size(); ++v)
        if (!gone[v]) {
            local[v] = static_cast<int>(labels.size());
            labels.push_back(labels_[v]);
        }
    std::vector<Simplex> simplices;
    for (const auto& f : facets_) {
        Simplex t;
        for (int v : f)
            if (!gone[v])
                t.push_back(local[v]);
        if (!t.empty())
            simplices.push_back(std::move(t));
    }
    return SimplicialComplex(std::move(labels), simplices);
}

std::vector<int> embed_vertices(const SimplicialComplex& sub, const SimplicialComplex& host)
{
    std::vector<int> out;
    out.reserve(sub.size());
    for (const auto& l : sub.labels()) {
        auto v = host.find(l);
        if (!v)
            throw PreconditionError("vertex '" + l + "' is not in the host complex");
        out.push_back(*v);
    }
    return out;
}

namespace {

Simplex mapped(const Simplex& s, const std::vector<int>& f)
{
    Simplex t;
    t.reserve(s.size());
    for (int v : s)
        t.push_back(f[v]);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

} // namespace

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& host)
{
    for (const auto& l : sub.labels())
        if (!host.find(l))
            return false;
    auto emb = embed_vertices(sub, host);
    for (const auto& f : sub.facets())
        if (!host.contains(mapped(f, emb)))
            return false;
    return true;
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return a.size() == b.size() && a.facets().size() == b.facets().size() && is_subcomplex(a, b) &&
           is_subcomplex(b, a);
}

SimplicialComplex subcomplex_from(const SimplicialComplex& host, const std::vector<Simplex>& simplices)
{
    std::set<int> verts;
    for (const auto& s : simplices)
        verts.insert(s.begin(), s.end());
    std::vector<int> local(host.size(), -1);
    std::vector<std::string> labels;
    for (int v : verts) {
        local[v] = static_cast<int>(labels.size());
        labels.push_back(host.label(v));
    }
    std::vector<Simplex> out;
    out.reserve(simplices.size());
    for (const auto& s : simplices)
        out.push_back(mapped(s, local));
    return SimplicialComplex(std::move(labels), out);
}

SimplicialComplex in_host_order(const SimplicialComplex& host, const SimplicialComplex& sub)
{
    auto emb = embed_vertices(sub, host);
    std::vector<Simplex> simplices;
    for (const auto& f : sub.facets())
        simplices.push_back(mapped(f, emb));
    return subcomplex_from(host, simplices);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& host, const std::vector<int>& vertices)
{
    std::vector<char> keep(host.size(), 0);
    for (int v : vertices)
        keep[v] = 1;
    std::vector<int> removed;
    for (int v = 0; v < static_cast<int>(host.size()); ++v)
        if (!keep[v])
            removed.push_back(v);
    return host.without_vertices(removed);
}

Validation validate_action(const GroupAction& action, const SimplicialComplex& k)
{
    if (auto v = validate_action_laws(action); !v)
        return v;
    if (action.degree() != k.size())
        return Validation::structural_error("action degree does not match the vertex count");
    std::set<Simplex> facets(k.facets().begin(), k.facets().end());
    for (std::size_t g = 0; g < action.perm.size(); ++g)
        for (std::size_t f = 0; f < k.facets().size(); ++f)
            if (!facets.count(mapped(k.facets()[f], action.perm[g])))
                return Validation::axiom_failure("element does not act by a simplicial automorphism",
                                                 {static_cast<int>(g), static_cast<int>(f)});
    return Validation::pass();
}

GroupAction restrict_action(const GroupAction& action, const SimplicialComplex& host, const SimplicialComplex& sub)
{
    auto emb = embed_vertices(sub, host);
    if (!is_invariant(action, emb))
        throw PreconditionError("subcomplex is not invariant under the group");
    return restrict_action(action, emb);
}

GroupAction face_action(const SimplicialComplex& k, const GroupAction& action)
{
    const auto& faces = k.faces();
    GroupAction out{action.group, action.side, {}};
    out.perm.reserve(action.perm.size());
    for (const auto& p : action.perm) {
        Perm q(faces.size());
        for (std::size_t i = 0; i < faces.size(); ++i) {
            auto idx = k.face_index(mapped(faces[i], p));
            if (!idx)
                throw PreconditionError("action does not preserve the complex");
            q[i] = *idx;
        }
        out.perm.push_back(std::move(q));
    }
    return out;
}

ComplexQuotient quotient_and_fixed(const SimplicialComplex& k, const GroupAction& action, const Subgroup& sub)
{
    if (action.degree() != k.size())
        throw PreconditionError("action does not match the complex");
    if (!is_subgroup(action.group, sub))
        throw PreconditionError("quotient by a subset that is not a subgroup");
    ComplexQuotient out;
    auto orbs = orbits(action, sub);
    out.projection.assign(k.size(), -1);
    std::vector<std::string> labels;
    for (std::size_t o = 0; o < orbs.size(); ++o) {
        labels.push_back(k.label(orbs[o].front()));
        for (int v : orbs[o])
            out.projection[v] = static_cast<int>(o);
    }
    std::vector<Simplex> images;
    for (const auto& f : k.facets())
        images.push_back(mapped(f, out.projection));
    out.quotient = SimplicialComplex(std::move(labels), images);
    out.fixed_vertices = fixed_points(action, sub);
    out.fixed = induced_subcomplex(k, out.fixed_vertices);
    return out;
}

// ------------------------------------------------------- standard complexes

namespace {

std::vector<std::string> numbered(int count)
{
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i)
        out.push_back(std::to_string(i));
    return out;
}

} // namespace

SimplicialComplex simplex_complex(int n)
{
    if (n < 0)
        throw PreconditionError("simplex dimension must be non-negative");
    Simplex all(n + 1);
    std::iota(all.begin(), all.end(), 0);
    return SimplicialComplex(numbered(n + 1), {all});
}

SimplicialComplex boundary_complex(int n)
{
    if (n < 0)
        throw PreconditionError("simplex dimension must be non-negative");
    if (n == 0)
        return empty_complex();
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= n; ++skip) {
        Simplex f;
        for (int v = 0; v <= n; ++v)
            if (v != skip)
                f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(numbered(n + 1), facets);
}

SimplicialComplex horn_complex(int n, int r)
{
    if (n < 1 || r < 0 || r > n)
        throw PreconditionError("horn needs n >= 1 and 0 <= r <= n");
    // simplices s with s u {r} != [n]: the faces opposite the vertices other than r
    std::vector<std::vector<std::string>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        if (skip == r)
            continue;
        std::vector<std::string> f;
        for (int v = 0; v <= n; ++v)
            if (v != skip)
                f.push_back(std::to_string(v));
        facets.push_back(std::move(f));
    }
    auto k = SimplicialComplex::from_labelled(facets);
    // relabel so vertices appear in numeric order
    std::vector<int> present;
    for (int v = 0; v <= n; ++v)
        if (k.find(std::to_string(v)))
            present.push_back(v);
    std::vector<std::string> labels;
    for (int v : present)
        labels.push_back(std::to_string(v));
    std::vector<Simplex> simplices;
    for (const auto& f : k.facets()) {
        Simplex s;
        for (int v : f)
            s.push_back(static_cast<int>(std::find(present.begin(), present.end(), std::stoi(k.label(v))) -
                                         present.begin()));
        simplices.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(labels), simplices);
}

SimplicialComplex point_complex()
{
    return simplex_complex(0);
}

SimplicialComplex empty_complex()
{
    return SimplicialComplex(std::vector<std::string>{}, {});
}

EquivariantComplex coset_product(const FiniteGroup& g, const Subgroup& h, const SimplicialComplex& k)
{
    if (!is_subgroup(g, h))
        throw PreconditionError("coset product needs a subgroup");
    auto act = coset_action(g, h);
    const std::size_t copies = act.degree();
    const std::size_t n = k.size();
    std::vector<std::string> labels;
    std::vector<Simplex> simplices;
    for (std::size_t c = 0; c < copies; ++c) {
        for (std::size_t v = 0; v < n; ++v)
            labels.push_back("c" + std::to_string(c) + "|" + k.label(static_cast<int>(v)));
        for (const auto& f : k.facets()) {
            Simplex s;
            for (int v : f)
                s.push_back(static_cast<int>(c * n) + v);
            simplices.push_back(std::move(s));
        }
    }
    GroupAction action{g, Side::left, {}};
    for (const auto& p : act.perm) {
        Perm q(copies * n);
        for (std::size_t c = 0; c < copies; ++c)
            for (std::size_t v = 0; v < n; ++v)
                q[c * n + v] = static_cast<int>(static_cast<std::size_t>(p[c]) * n + v);
        action.perm.push_back(std::move(q));
    }
    return {SimplicialComplex(std::move(labels), simplices), std::move(action)};
}

// -------------------------------------------------------- neighbourhoods

SimplicialComplex star(const SimplicialComplex& k, int v)
{
    std::vector<Simplex> facets;
    for (const auto& f : k.facets())
        if (std::binary_search(f.begin(), f.end(), v))
            facets.push_back(f);
    return subcomplex_from(k, facets);
}

SimplicialComplex complex_neighborhood(const SimplicialComplex& host, const SimplicialComplex& sub, int r)
{
    if (r < 0)
        throw PreconditionError("neighbourhood radius must be non-negative");
    if (!is_subcomplex(sub, host))
        throw PreconditionError("neighbourhood of a non-subcomplex");
    auto emb = embed_vertices(sub, host);
    std::vector<Simplex> simplices;
    for (const auto& f : sub.facets())
        simplices.push_back(mapped(f, emb));
    SimplicialComplex current = subcomplex_from(host, simplices);
    for (int step = 0; step < r; ++step) {
        Bits in(host.size());
        for (int v : embed_vertices(current, host))
            in.set(v);
        std::vector<Simplex> next;
        for (const auto& f : host.facets())
            if (std::any_of(f.begin(), f.end(), [&](int v) { return in.test(v); }))
                next.push_back(f);
        current = subcomplex_from(host, next);
    }
    return current;
}

// ---------------------------------------------------------- subdivision

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k)
{
    const auto& faces = k.faces();
    std::vector<std::string> labels;
    labels.reserve(faces.size());
    for (const auto& s : faces)
        labels.push_back(k.simplex_label(s));
    std::vector<Simplex> facets;
    for (const auto& f : k.facets()) {
        Simplex order = f;
        do {
            Simplex prefix, chain;
            for (int v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(*k.face_index(prefix));
            }
            std::sort(chain.begin(), chain.end());
            facets.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex::from_maximal(std::move(labels), std::move(facets));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k, int iterations)
{
    if (iterations < 0)
        throw PreconditionError("subdivision count must be non-negative");
    SimplicialComplex out = k;
    for (int i = 0; i < iterations; ++i)
        out = barycentric_subdivision(out);
    return out;
}

std::optional<std::size_t> subdivision_size(const SimplicialComplex& k, int iterations, std::size_t cap)
{
    // f'_i = sum_j f_j (i+1)! S(j+1, i+1)
    auto f = k.f_vector();
    const auto dim = f.size();
    std::vector<std::vector<double>> stirling(dim + 1, std::vector<double>(dim + 1, 0.0));
    stirling[0][0] = 1;
    for (std::size_t n = 1; n <= dim; ++n)
        for (std::size_t c = 1; c <= n; ++c)
            stirling[n][c] = static_cast<double>(c) * stirling[n - 1][c] + stirling[n - 1][c - 1];
    std::vector<double> cur(f.begin(), f.end());
    for (int it = 0; it < iterations; ++it) {
        std::vector<double> next(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            double fact = 1;
            for (std::size_t t = 2; t <= i + 1; ++t)
                fact *= static_cast<double>(t);
            for (std::size_t j = i; j < dim; ++j)
                next[i] += cur[j] * fact * stirling[j + 1][i + 1];
        }
        cur = std::move(next);
        if (std::accumulate(cur.begin(), cur.end(), 0.0) > static_cast<double>(cap))
            return std::nullopt;
    }
    double total = std::accumulate(cur.begin(), cur.end(), 0.0);
    if (total > static_cast<double>(cap))
        return std::nullopt;
    return static_cast<std::size_t>(total + 0.5);
}

GroupAction subdivision_action(const SimplicialComplex& k, const GroupAction& action)
{
    return face_action(k, action);
}

EquivariantSubdivision barycentric_subdivision(const SimplicialComplex& k, const std::optional<GroupAction>& action,
                                               int iterations)
{
    if (iterations < 0)
        throw PreconditionError("subdivision count must be non-negative");
    EquivariantSubdivision out{k, action};
    for (int i = 0; i < iterations; ++i) {
        if (out.action)
            out.action = subdivision_action(out.complex, *out.action);
        out.complex = barycentric_subdivision(out.complex);
    }
    return out;
}

// ------------------------------------------------------ strong collapse

std::vector<Domination> dominated_vertices(const SimplicialComplex& k)
{
    const std::size_t n = k.size();
    std::vector<Bits> facet_bits;
    std::vector<std::vector<int>> incident(n);
    for (std::size_t f = 0; f < k.facets().size(); ++f) {
        Bits b(n);
        for (int v : k.facets()[f]) {
            b.set(v);
            incident[v].push_back(static_cast<int>(f));
        }
        facet_bits.push_back(std::move(b));
    }
    std::vector<Domination> out;
    for (std::size_t v = 0; v < n; ++v) {
        Bits common = Bits::full(n);
        for (int f : incident[v])
            common &= facet_bits[f];
        common.reset(v);
        if (common.any())
            out.push_back({static_cast<int>(v), static_cast<int>(common.first())});
    }
    return out;
}

namespace {

/// Working state for collapse: the original complex with a mask of
/// surviving vertices. A simplex survives iff it avoids removed vertices.
struct CollapseState {
    const SimplicialComplex& k;
    const GroupAction* action;
    Bits alive;
    std::vector<std::vector<int>> incident; // vertex -> facets

    CollapseState(const SimplicialComplex& complex, const GroupAction* a)
        : k(complex), action(a), alive(Bits::full(complex.size())), incident(complex.size())
    {
        for (std::size_t f = 0; f < k.facets().size(); ++f)
            for (int v : k.facets()[f])
                incident[v].push_back(static_cast<int>(f));
    }

    std::vector<int> orbit_of(int v) const
    {
        if (!action)
            return {v};
        std::set<int> o;
        for (std::size_t g = 0; g < action->perm.size(); ++g)
            o.insert(action->apply(static_cast<int>(g), v));
        return {o.begin(), o.end()};
    }

    Simplex alive_part(const Simplex& f) const
    {
        Simplex s;
        for (int v : f)
            if (alive.test(v))
                s.push_back(v);
        return s;
    }

    /// Retraction gv -> gw on the orbit of v, or nullopt if ill-defined.
    std::optional<std::map<int, int>> retraction(int v, int w) const
    {
        std::map<int, int> r;
        if (!action) {
            r[v] = w;
            return r;
        }
        for (std::size_t g = 0; g < action->perm.size(); ++g) {
            int gv = action->apply(static_cast<int>(g), v);
            int gw = action->apply(static_cast<int>(g), w);
            auto [it, inserted] = r.emplace(gv, gw);
            if (!inserted && it->second != gw)
                return std::nullopt;
        }
        for (auto [from, to] : r)
            if (r.count(to))
                return std::nullopt; // witness orbit meets the removed orbit
        return r;
    }

    /// id and the retraction are contiguous on every surviving simplex.
    bool removal_valid(const std::map<int, int>& r) const
    {
        for (auto [from, to] : r)
            if (!alive.test(from) || !alive.test(to))
                return false;
        std::set<int> touched;
        for (auto [from, to] : r)
            touched.insert(incident[from].begin(), incident[from].end());
        for (int f : touched) {
            Simplex s = alive_part(k.facets()[f]);
            Simplex ext = s;
            for (int v : s)
                if (auto it = r.find(v); it != r.end())
                    ext.push_back(it->second);
            std::sort(ext.begin(), ext.end());
            ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
            if (!k.contains(ext))
                return false;
        }
        return true;
    }

    std::optional<std::map<int, int>> find_removal(int v) const
    {
        Bits candidates = alive;
        candidates.reset(v);
        for (std::size_t w = candidates.first(); w < candidates.size(); w = candidates.next(w + 1)) {
            auto r = retraction(v, static_cast<int>(w));
            if (r && removal_valid(*r))
                return r;
        }
        return std::nullopt;
    }

    void remove(const std::map<int, int>& r)
    {
        for (auto [from, to] : r)
            alive.reset(from);
    }

    SimplicialComplex residue() const
    {
        std::vector<int> removed;
        for (int v = 0; v < static_cast<int>(k.size()); ++v)
            if (!alive.test(v))
                removed.push_back(v);
        return k.without_vertices(removed);
    }
};

ComplexCollapseStep to_step(const SimplicialComplex& k, const std::map<int, int>& r)
{
    ComplexCollapseStep step;
    for (auto [from, to] : r) {
        step.vertices.push_back(k.label(from));
        step.witnesses.push_back(k.label(to));
    }
    return step;
}

} // namespace

ComplexCollapseResult strong_collapse_complex(const SimplicialComplex& k, const SimplicialComplex& l,
                                              const GroupAction* action, const ComplexCollapseOptions& options)
{
    if (!is_subcomplex(l, k))
        throw PreconditionError("collapse target is not a subcomplex");
    auto l_vertices = embed_vertices(l, k);
    if (action) {
        if (auto v = validate_action(*action, k); !v)
            throw PreconditionError("invalid action: " + v.message);
        if (!is_invariant(*action, l_vertices))
            throw PreconditionError("collapse target is not invariant under the group");
    }
    Bits in_l(k.size());
    for (int v : l_vertices)
        in_l.set(v);

    CollapseState state(k, action);
    ComplexCollapseResult out;
    while (true) {
        std::vector<std::map<int, int>> options_found;
        for (std::size_t v = state.alive.first(); v < state.alive.size(); v = state.alive.next(v + 1)) {
            if (in_l.test(v))
                continue;
            if (auto r = state.find_removal(static_cast<int>(v))) {
                options_found.push_back(std::move(*r));
                if (!options.rng)
                    break;
            }
        }
        if (options_found.empty())
            break;
        std::size_t pick = 0;
        if (options.rng)
            pick = std::uniform_int_distribution<std::size_t>(0, options_found.size() - 1)(*options.rng);
        out.certificate.push_back(to_step(k, options_found[pick]));
        state.remove(options_found[pick]);
    }
    out.residue = state.residue();
    if (same_complex(out.residue, l)) {
        out.verdict = CollapseVerdict::yes;
        return out;
    }
    out.verdict = CollapseVerdict::stuck;
    if (options.exact) {
        Budget budget(options.budget, "strong collapse exact search");
        out.exact = true;
        out.verdict = strong_collapse_exact(k, l, action, budget) ? CollapseVerdict::yes : CollapseVerdict::no;
    }
    return out;
}

SimplicialComplex replay_collapse(const SimplicialComplex& k, const ComplexCertificate& certificate,
                                  const GroupAction* action)
{
    CollapseState state(k, action);
    for (std::size_t i = 0; i < certificate.size(); ++i) {
        const auto& step = certificate[i];
        const std::string where = "certificate step " + std::to_string(i);
        if (step.vertices.empty() || step.vertices.size() != step.witnesses.size())
            throw PreconditionError(where + ": malformed");
        std::map<int, int> r;
        for (std::size_t j = 0; j < step.vertices.size(); ++j)
            r[k.index_of(step.vertices[j])] = k.index_of(step.witnesses[j]);
        auto expected = state.retraction(r.begin()->first, r.begin()->second);
        if (!expected || *expected != r)
            throw PreconditionError(where + ": not an equivariant orbit retraction");
        if (!state.removal_valid(r))
            throw PreconditionError(where + ": retraction is not contiguous to the identity");
        state.remove(r);
    }
    return state.residue();
}

bool strong_collapse_exact(const SimplicialComplex& k, const SimplicialComplex& l, const GroupAction* action,
                           Budget& budget, int max_free)
{
    const int n = static_cast<int>(k.size());
    auto l_vertices = embed_vertices(l, k);
    std::vector<char> in_l(n, 0);
    for (int v : l_vertices)
        in_l[v] = 1;
    std::vector<int> free;
    for (int v = 0; v < n; ++v)
        if (!in_l[v])
            free.push_back(v);
    if (static_cast<int>(free.size()) > max_free)
        throw PreconditionError("exact collapse search refuses " + std::to_string(free.size()) +
                                " vertices outside the subcomplex");

    const auto& faces = k.faces();
    // assignment: vertex -> face index of K
    std::vector<int> identity(n);
    for (int v = 0; v < n; ++v)
        identity[v] = *k.face_index({v});

    // free orbits with a representative; images elsewhere follow by equivariance
    std::vector<int> reps;
    std::vector<char> seen(n, 0);
    for (int v : free) {
        if (seen[v])
            continue;
        reps.push_back(v);
        if (action)
            for (std::size_t g = 0; g < action->perm.size(); ++g)
                seen[action->apply(static_cast<int>(g), v)] = 1;
        else
            seen[v] = 1;
    }

    auto image_of = [&](const Simplex& s, const Perm& p) {
        return mapped(s, p);
    };

    std::vector<std::vector<int>> maps;
    std::vector<int> assign(n, -1);
    for (int v : l_vertices)
        assign[v] = identity[v];

    auto consistent = [&]() {
        for (const auto& f : k.facets()) {
            Simplex u;
            for (int v : f)
                if (assign[v] >= 0)
                    u.insert(u.end(), faces[assign[v]].begin(), faces[assign[v]].end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            if (!k.contains(u))
                return false;
        }
        return true;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        budget.tick();
        if (i == reps.size()) {
            maps.push_back(assign);
            return;
        }
        const int rep = reps[i];
        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            bool ok = true;
            std::vector<int> set_here;
            if (action) {
                for (std::size_t g = 0; g < action->perm.size() && ok; ++g) {
                    int gv = action->apply(static_cast<int>(g), rep);
                    auto img = k.face_index(image_of(faces[fi], action->perm[g]));
                    if (assign[gv] >= 0) {
                        ok = assign[gv] == *img;
                    } else {
                        assign[gv] = *img;
                        set_here.push_back(gv);
                    }
                }
            } else {
                assign[rep] = static_cast<int>(fi);
                set_here.push_back(rep);
            }
            if (ok && consistent())
                rec(i + 1);
            for (int v : set_here)
                assign[v] = -1;
        }
    };
    rec(0);

    auto leq = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int v = 0; v < n; ++v)
            if (!sorted_subset(faces[a[v]], faces[b[v]]))
                return false;
        return true;
    };
    auto is_target = [&](const std::vector<int>& m) {
        std::vector<int> f(n);
        for (int v = 0; v < n; ++v) {
            if (faces[m[v]].size() != 1)
                return false;
            f[v] = faces[m[v]].front();
            if (!in_l[f[v]])
                return false;
        }
        for (const auto& facet : k.facets()) {
            Simplex img = mapped(facet, f);
            Simplex local;
            for (int v : img)
                local.push_back(static_cast<int>(std::find(l_vertices.begin(), l_vertices.end(), v) -
                                                 l_vertices.begin()));
            std::sort(local.begin(), local.end());
            if (!l.contains(local))
                return false;
        }
        return true;
    };

    std::size_t start = maps.size();
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (maps[i] == identity) {
            start = i;
            break;
        }
    if (start == maps.size())
        return false;
    std::vector<char> visited(maps.size(), 0);
    std::queue<std::size_t> q;
    q.push(start);
    visited[start] = 1;
    while (!q.empty()) {
        std::size_t cur = q.front();
        q.pop();
        if (is_target(maps[cur]))
            return true;
        for (std::size_t j = 0; j < maps.size(); ++j) {
            budget.tick();
            if (!visited[j] && (leq(maps[cur], maps[j]) || leq(maps[j], maps[cur]))) {
                visited[j] = 1;
                q.push(j);
            }
        }
    }
    return false;
}

} // namespace gtop
