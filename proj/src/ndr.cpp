#include "gtop/ndr.hpp"

#include <set>

namespace gtop {

namespace {

/// Face poset of k with the induced action on faces.
std::pair<Poset, std::optional<GroupAction>> faces_with_action(const SimplicialComplex& k,
                                                              const std::optional<GroupAction>& action)
{
    std::optional<GroupAction> act;
    if (action)
        act = face_action(k, *action);
    return {face_poset(k), std::move(act)};
}

} // namespace

NdrResult ndr_builder(const SimplicialComplex& k, const SimplicialComplex& l_in,
                      const std::optional<GroupAction>& action, int r, std::size_t cap)
{
    if (r < 2)
        throw PreconditionError("NDR builder needs at least two subdivisions");
    if (!is_subcomplex(l_in, k))
        throw PreconditionError("NDR builder: L is not a subcomplex of K");
    // re-express L in K's vertex order so that subdivision labels agree
    const SimplicialComplex l = in_host_order(k, l_in);
    if (action) {
        if (auto v = validate_action(*action, k); !v)
            throw PreconditionError("invalid action: " + v.message);
        if (!is_invariant(*action, embed_vertices(l, k)))
            throw PreconditionError("NDR builder: L is not invariant under the group");
    }
    if (!subdivision_size(k, r, cap))
        throw PreconditionError("NDR builder: Sd^" + std::to_string(r) + " exceeds " + std::to_string(cap) +
                                " simplices");

    NdrResult out;
    out.subdivisions = r;
    out.radius = 1 << (r - 2);

    // level two: chains of faces of K meeting L
    auto sd1 = barycentric_subdivision(k, action, 1);
    std::set<std::string> l_faces;
    for (const auto& s : l.faces())
        l_faces.insert(l.simplex_label(s));
    auto [fsd, fsd_action] = faces_with_action(sd1.complex, sd1.action);
    std::vector<int> meet;
    const auto& chains_of_faces = sd1.complex.faces();
    for (std::size_t c = 0; c < chains_of_faces.size(); ++c)
        for (int sigma : chains_of_faces[c])
            if (l_faces.count(sd1.complex.label(sigma))) {
                meet.push_back(static_cast<int>(c));
                break;
            }
    Poset p = fsd.induced(meet);
    std::optional<GroupAction> p_action;
    if (fsd_action)
        p_action = restrict_action(*fsd_action, meet);
    SimplicialComplex sd_l = barycentric_subdivision(l, 1);

    // levels three and up: A_{j+1} = Sd(A_j), whose face poset carries the collapse
    for (int level = 3; level <= r; ++level) {
        SimplicialComplex a = order_complex(p);
        auto [fa, fa_action] = faces_with_action(a, p_action);
        p = std::move(fa);
        p_action = std::move(fa_action);
        sd_l = barycentric_subdivision(sd_l);
    }
    Poset q = face_poset(sd_l);

    const GroupAction* act = p_action ? &*p_action : nullptr;
    auto collapse = strong_collapse_decide(p, q, act);
    if (!collapse.yes)
        throw std::logic_error("closure-operator collapse did not reach the subcomplex");
    out.poset_certificate = collapse.certificate;
    out.certificate = order_complex_certificate(collapse.certificate);
    out.a = order_complex(p);
    out.a_action = p_action;

    auto full = barycentric_subdivision(k, action, r);
    out.subdivided_k = std::move(full.complex);
    out.action = std::move(full.action);
    out.subdivided_l = barycentric_subdivision(sd_l);

    auto nbhd = complex_neighborhood(out.subdivided_k, out.subdivided_l, out.radius);
    out.containment_verified = is_subcomplex(nbhd, out.a) && is_subcomplex(out.a, out.subdivided_k);
    try {
        auto residue = replay_collapse(out.a, out.certificate, out.a_action ? &*out.a_action : nullptr);
        out.certificate_verified = same_complex(residue, out.subdivided_l);
    } catch (const PreconditionError&) {
        out.certificate_verified = false;
    }
    return out;
}

} // namespace gtop
