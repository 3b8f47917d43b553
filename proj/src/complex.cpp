#include "orbitmorse/complex.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "orbitmorse/error.hpp"
#include "orbitmorse/p_subgroups.hpp"

namespace orbitmorse {

PSubgroupTable::PSubgroupTable(std::shared_ptr<const PermGroup> group, std::uint64_t p)
    : group_(std::move(group)), p_(p)
{
    const PermGroup& G = *group_;
    subgroups_ = all_p_subgroups(G, p);
    if (subgroups_.empty())
        throw Error(ErrorKind::EmptyComplex,
                    std::to_string(p) + " does not divide |G| = " + std::to_string(G.order()));
    t_ = p_valuation(G.order(), p);

    const std::size_t n = subgroups_.size();
    for (std::size_t i = 0; i < n; ++i)
        index_.emplace(subgroups_[i].canonical_key(), static_cast<SubgroupId>(i));
    log_order_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        log_order_[i] = p_valuation(subgroups_[i].order(), p);

    // Conjugation rows are filled along a breadth-first spanning tree of the
    // Cayley graph: row(x * s) = row(x) ∘ row(s) for a generator s.
    std::vector<ElementId> gens;
    for (const auto& s : G.generators())
        gens.push_back(*G.index_of(s));
    conj_.assign(G.order() * n, 0);
    std::vector<SubgroupId> gen_rows(gens.size() * n);
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t h = 0; h < n; ++h)
            gen_rows[k * n + h] = index_.at(conjugate_subgroup(G, gens[k], subgroups_[h]).canonical_key());
    std::vector<bool> done(G.order(), false);
    std::vector<ElementId> queue{PermGroup::identity_id};
    done[PermGroup::identity_id] = true;
    for (std::size_t h = 0; h < n; ++h)
        conj_[h] = static_cast<SubgroupId>(h);
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
    {
        ElementId x = queue[qi];
        for (std::size_t k = 0; k < gens.size(); ++k)
        {
            ElementId y = G.mul(x, gens[k]);
            if (done[y])
                continue;
            done[y] = true;
            queue.push_back(y);
            // (x s) H (x s)^-1 = x (s H s^-1) x^-1
            for (std::size_t h = 0; h < n; ++h)
                conj_[y * n + h] = conj_[x * n + gen_rows[k * n + h]];
        }
    }

    below_.assign(n * n, false);
    normal_below_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
    {
        for (std::size_t b = 0; b < n; ++b)
        {
            if (!subgroups_[a].is_proper_subgroup_of(subgroups_[b]))
                continue;
            below_[a * n + b] = true;
            normal_below_[a * n + b] = is_normal_in(G, subgroups_[a], subgroups_[b]);
        }
    }
}

std::optional<SubgroupId> PSubgroupTable::index_of(const Subgroup& H) const
{
    auto it = index_.find(H.canonical_key());
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool is_strict_chain(const PSubgroupTable& table, const ChainCell& chain)
{
    if (chain.subgroup_ids.empty())
        return false;
    for (SubgroupId id : chain.subgroup_ids)
        if (id >= table.size())
            return false;
    for (std::size_t i = 1; i < chain.subgroup_ids.size(); ++i)
        if (!table.below(chain.subgroup_ids[i - 1], chain.subgroup_ids[i]))
            return false;
    return true;
}

bool is_robinson_chain(const PSubgroupTable& table, const ChainCell& chain)
{
    if (!is_strict_chain(table, chain))
        return false;
    for (std::size_t i = 0; i + 1 < chain.subgroup_ids.size(); ++i)
        if (!table.normal_below(chain.subgroup_ids[i], chain.top()))
            return false;
    return true;
}

ChainCell conjugate_chain(const PSubgroupTable& table, ElementId g, const ChainCell& chain)
{
    ChainCell out;
    out.subgroup_ids.reserve(chain.subgroup_ids.size());
    for (SubgroupId id : chain.subgroup_ids)
        out.subgroup_ids.push_back(table.conjugate(g, id));
    return out;
}

ChainCell canonical_orbit_rep(const ChainCell& chain, const PSubgroupTable& table)
{
    const std::size_t order = table.group().order();
    ChainCell best = chain;
    std::vector<SubgroupId> candidate(chain.subgroup_ids.size());
    for (std::size_t g = 1; g < order; ++g)
    {
        for (std::size_t i = 0; i < candidate.size(); ++i)
            candidate[i] = table.conjugate(static_cast<ElementId>(g), chain.subgroup_ids[i]);
        if (candidate < best.subgroup_ids)
            best.subgroup_ids = candidate;
    }
    return best;
}

namespace {

// Chains ending at each top group T, extended downward through the members
// of `allowed(S, T)`.
template <typename Allowed>
std::vector<std::vector<ChainCell>> build_chains(const PSubgroupTable& table, Allowed allowed)
{
    const std::size_t n = table.size();
    std::vector<std::vector<ChainCell>> by_dim;
    std::vector<SubgroupId> descending;
    std::vector<SubgroupId> candidates;

    auto emit = [&]() {
        ChainCell c{std::vector<SubgroupId>(descending.rbegin(), descending.rend())};
        if (by_dim.size() <= c.dim())
            by_dim.resize(c.dim() + 1);
        by_dim[c.dim()].push_back(std::move(c));
    };

    for (SubgroupId top = 0; top < n; ++top)
    {
        candidates.clear();
        for (SubgroupId s = 0; s < n; ++s)
            if (allowed(s, top))
                candidates.push_back(s);

        descending.assign(1, top);
        auto extend = [&](auto&& self) -> void {
            emit();
            SubgroupId bottom = descending.back();
            for (SubgroupId s : candidates)
            {
                if (!table.below(s, bottom))
                    continue;
                descending.push_back(s);
                self(self);
                descending.pop_back();
            }
        };
        extend(extend);
    }
    for (auto& cells : by_dim)
        std::sort(cells.begin(), cells.end());
    return by_dim;
}

struct ChainHash
{
    std::size_t operator()(const std::vector<SubgroupId>& v) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (SubgroupId x : v)
        {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

std::vector<std::vector<ChainCell>> build_robinson_cells(const PSubgroupTable& table)
{
    return build_chains(table, [&](SubgroupId s, SubgroupId top) { return table.normal_below(s, top); });
}

std::vector<std::vector<ChainCell>> build_brown_cells(const PSubgroupTable& table)
{
    return build_chains(table, [&](SubgroupId s, SubgroupId top) { return table.below(s, top); });
}

std::string_view to_string(MorseClass c)
{
    switch (c)
    {
        case MorseClass::Unassigned: return "unassigned";
        case MorseClass::Critical: return "critical";
        case MorseClass::Redundant: return "redundant";
        case MorseClass::Collapsible: return "collapsible";
    }
    return "unknown";
}

std::vector<std::size_t> FaceTable::dim_counts() const
{
    std::vector<std::size_t> counts;
    for (std::size_t d : dims)
    {
        if (counts.size() <= d)
            counts.resize(d + 1, 0);
        ++counts[d];
    }
    return counts;
}

std::optional<CellId> QuotientComplex::find_canonical(const ChainCell& rep) const
{
    auto it = index_.find(rep.subgroup_ids);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<CellId> QuotientComplex::find(const ChainCell& chain) const
{
    if (!is_strict_chain(*table_, chain))
        return std::nullopt;
    return find_canonical(canonical_orbit_rep(chain, *table_));
}

QuotientComplex build_quotient_of(std::shared_ptr<const PSubgroupTable> table, ComplexKind kind)
{
    const PSubgroupTable& T = *table;
    const std::size_t order = T.group().order();
    auto chains = kind == ComplexKind::Robinson ? build_robinson_cells(T) : build_brown_cells(T);

    QuotientComplex X;
    X.table_ = table;
    X.kind_ = kind;

    for (const auto& dim_chains : chains)
    {
        // Mark whole orbits at once; the minimum seen is the representative.
        std::unordered_set<std::vector<SubgroupId>, ChainHash> visited;
        std::vector<ChainCell> reps;
        for (const ChainCell& c : dim_chains)
        {
            if (visited.contains(c.subgroup_ids))
                continue;
            ChainCell best = c;
            for (std::size_t g = 0; g < order; ++g)
            {
                ChainCell image = conjugate_chain(T, static_cast<ElementId>(g), c);
                if (image < best)
                    best = image;
                visited.insert(std::move(image.subgroup_ids));
            }
            reps.push_back(std::move(best));
        }
        std::sort(reps.begin(), reps.end());
        for (auto& rep : reps)
        {
            CellId id = static_cast<CellId>(X.cells_.size());
            X.index_.emplace(rep.subgroup_ids, id);
            X.cells_.push_back(OrbitCell{std::move(rep), id, MorseClass::Unassigned});
        }
    }

    X.faces_.dims.reserve(X.cells_.size());
    X.faces_.faces.reserve(X.cells_.size());
    for (const OrbitCell& cell : X.cells_)
    {
        X.faces_.dims.push_back(cell.dim());
        std::vector<CellId> faces;
        if (cell.dim() >= 1)
        {
            for (std::size_t i = 0; i <= cell.dim(); ++i)
            {
                ChainCell f = cell.rep;
                f.subgroup_ids.erase(f.subgroup_ids.begin() + static_cast<std::ptrdiff_t>(i));
                // Deleting an entry of a strict chain keeps it strict and
                // keeps the normality condition, so the face is a stored cell.
                auto id = X.find_canonical(canonical_orbit_rep(f, T));
                if (!id)
                    throw Error(ErrorKind::InvalidChain, "face of a stored cell is missing");
                faces.push_back(*id);
            }
        }
        X.faces_.faces.push_back(std::move(faces));
    }
    return X;
}

CellId face(const QuotientComplex& X, CellId cell, std::size_t i)
{
    if (cell >= X.size())
        throw Error(ErrorKind::IndexOutOfRange, "cell id " + std::to_string(cell) + " out of range");
    const OrbitCell& c = X.cell(cell);
    if (c.dim() == 0 || i > c.dim())
        throw Error(ErrorKind::IndexOutOfRange, "face index " + std::to_string(i) +
                                                    " invalid for a cell of dimension " +
                                                    std::to_string(c.dim()));
    return X.faces(cell)[i];
}

long long euler_characteristic(std::span<const std::size_t> dim_counts)
{
    long long chi = 0;
    for (std::size_t d = 0; d < dim_counts.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(dim_counts[d]);
    return chi;
}

std::vector<std::string> check_simplicial_identities(const FaceTable& table)
{
    std::vector<std::string> problems;
    const std::size_t n = table.size();
    for (std::size_t c = 0; c < n; ++c)
    {
        const std::size_t dim = table.dims[c];
        const auto& f = table.faces[c];
        if (f.size() != (dim == 0 ? 0 : dim + 1))
        {
            problems.push_back("cell " + std::to_string(c) + " has " + std::to_string(f.size()) +
                               " faces, expected " + std::to_string(dim == 0 ? 0 : dim + 1));
            continue;
        }
        bool ok = true;
        for (CellId x : f)
            if (x >= n || table.dims[x] + 1 != dim)
                ok = false;
        if (!ok)
        {
            problems.push_back("cell " + std::to_string(c) + " has a face of the wrong dimension");
            continue;
        }
        if (dim < 2)
            continue;
        for (std::size_t j = 1; j <= dim; ++j)
        {
            for (std::size_t i = 0; i < j; ++i)
            {
                CellId lhs = table.faces[f[j]][i];
                CellId rhs = table.faces[f[i]][j - 1];
                if (lhs != rhs)
                    problems.push_back("cell " + std::to_string(c) + ": d_" + std::to_string(i) +
                                       " d_" + std::to_string(j) + " != d_" + std::to_string(j - 1) +
                                       " d_" + std::to_string(i));
            }
        }
    }
    return problems;
}

bool check_orbit_soundness(const QuotientComplex& X, std::size_t trials, std::uint64_t seed)
{
    if (X.size() == 0)
        return true;
    const PSubgroupTable& T = X.table();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_cell(0, X.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_elem(0, T.group().order() - 1);
    for (std::size_t k = 0; k < trials; ++k)
    {
        const ChainCell& rep = X.cell(static_cast<CellId>(pick_cell(rng))).rep;
        ChainCell moved = conjugate_chain(T, static_cast<ElementId>(pick_elem(rng)), rep);
        if (canonical_orbit_rep(moved, T) != canonical_orbit_rep(rep, T))
            return false;
        if (canonical_orbit_rep(rep, T) != rep)
            return false;
    }
    return true;
}

} // namespace orbitmorse
