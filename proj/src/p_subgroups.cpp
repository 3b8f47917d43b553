#include "orbitmorse/p_subgroups.hpp"

#include <set>

#include "orbitmorse/error.hpp"

namespace orbitmorse {

std::vector<Subgroup> subgroups_of_p_group(const PermGroup& G, const Subgroup& S)
{
    std::set<Subgroup> found;
    std::vector<Subgroup> worklist;
    for (ElementId x : S.members())
    {
        if (x == PermGroup::identity_id)
            continue;
        ElementId gens[] = {x};
        Subgroup C = generate_subgroup(G, gens);
        if (found.insert(C).second)
            worklist.push_back(std::move(C));
    }
    // Every subgroup is reached from a cyclic one by adjoining elements.
    while (!worklist.empty())
    {
        Subgroup H = std::move(worklist.back());
        worklist.pop_back();
        for (ElementId x : S.members())
        {
            if (H.contains(x))
                continue;
            Subgroup J = join(G, H, x);
            if (found.insert(J).second)
                worklist.push_back(std::move(J));
        }
    }
    return {found.begin(), found.end()};
}

std::vector<Subgroup> all_p_subgroups(const PermGroup& G, std::uint64_t p)
{
    if (!is_prime(p))
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (G.order() % p != 0)
        return {};

    Subgroup sylow = sylow_extension(G, whole_group(G), trivial_subgroup(G), p);
    std::vector<Subgroup> local = subgroups_of_p_group(G, sylow);

    std::set<Subgroup> all;
    for (const Subgroup& H : local)
    {
        if (all.contains(H))
            continue;
        // Conjugating by the elements of N_G(H) fixes H, so one element per
        // left coset of the normalizer is enough.
        Subgroup N = normalizer(G, H);
        std::vector<bool> covered(G.order(), false);
        for (std::size_t g = 0; g < G.order(); ++g)
        {
            if (covered[g])
                continue;
            for (ElementId n : N.members())
                covered[G.mul(static_cast<ElementId>(g), n)] = true;
            all.insert(conjugate_subgroup(G, static_cast<ElementId>(g), H));
        }
    }
    return {all.begin(), all.end()};
}

} // namespace orbitmorse
