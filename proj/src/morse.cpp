#include "orbitmorse/morse.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "orbitmorse/error.hpp"

namespace orbitmorse {

namespace {

std::vector<Subgroup> chain_subgroups(const PSubgroupTable& T, const ChainCell& chain)
{
    std::vector<Subgroup> out;
    out.reserve(chain.subgroup_ids.size());
    for (SubgroupId id : chain.subgroup_ids)
        out.push_back(T.subgroup(id));
    return out;
}

std::string cell_name(CellId c) { return "cell " + std::to_string(c); }

} // namespace

MorseClass classify_chain(const PSubgroupTable& T, const ChainCell& chain)
{
    if (chain.dim() == 0 && T.is_sylow(chain.top()))
        return MorseClass::Critical;
    auto members = chain_subgroups(T, chain);
    Subgroup N = chain_normalizer(T.group(), members);
    if (!is_sylow_in(T.subgroup(chain.top()), N, T.prime()))
        return MorseClass::Redundant;
    if (chain.dim() == 0)
        throw Error(ErrorKind::MatchingFailure,
                    "non-Sylow vertex is Sylow in its own normalizer");
    return MorseClass::Collapsible;
}

MorseClass classify(const QuotientComplex& X, CellId cell)
{
    return classify_chain(X.table(), X.cell(cell).rep);
}

void assign_morse_classes(QuotientComplex& X)
{
    for (CellId c = 0; c < X.size(); ++c)
        X.set_morse_class(c, classify(X, c));
}

MorseClassCounts count_classes(const QuotientComplex& X)
{
    const std::size_t dims = X.size() == 0 ? 0 : X.max_dim() + 1;
    MorseClassCounts counts{std::vector<std::size_t>(dims, 0), std::vector<std::size_t>(dims, 0),
                            std::vector<std::size_t>(dims, 0)};
    for (const OrbitCell& cell : X.cells())
    {
        switch (cell.morse_class)
        {
            case MorseClass::Critical: ++counts.critical[cell.dim()]; break;
            case MorseClass::Redundant: ++counts.redundant[cell.dim()]; break;
            case MorseClass::Collapsible: ++counts.collapsible[cell.dim()]; break;
            case MorseClass::Unassigned: break;
        }
    }
    return counts;
}

std::map<CellId, CellId> MorseMatching::inverse() const
{
    std::map<CellId, CellId> inv;
    for (const auto& [tau, target] : pairs)
        inv.emplace(target.collapsible, tau);
    return inv;
}

MorseMatching build_matching(const QuotientComplex& X)
{
    const PSubgroupTable& T = X.table();
    MorseMatching M;
    std::set<CellId> images;
    std::size_t collapsible_count = 0;

    for (const OrbitCell& cell : X.cells())
    {
        switch (cell.morse_class)
        {
            case MorseClass::Unassigned:
                throw Error(ErrorKind::MatchingFailure, "cells must be classified first");
            case MorseClass::Critical: M.critical.push_back(cell.cell_id); continue;
            case MorseClass::Collapsible: ++collapsible_count; continue;
            case MorseClass::Redundant: break;
        }

        auto members = chain_subgroups(T, cell.rep);
        Subgroup N = chain_normalizer(T.group(), members);
        Subgroup sylow = sylow_extension(T.group(), N, members.back(), T.prime());
        auto sylow_id = T.index_of(sylow);
        if (!sylow_id)
            throw Error(ErrorKind::MatchingFailure, "Sylow extension is not a listed p-subgroup");

        ChainCell extended = cell.rep;
        extended.subgroup_ids.push_back(*sylow_id);
        auto image = X.find(extended);
        if (!image)
            throw Error(ErrorKind::MatchingFailure,
                        "extension of " + cell_name(cell.cell_id) + " is not a cell");
        if (X.cell(*image).morse_class != MorseClass::Collapsible)
            throw Error(ErrorKind::MatchingFailure,
                        "image of " + cell_name(cell.cell_id) + " is not collapsible");
        const std::size_t iota = cell.dim() + 1;
        if (face(X, *image, iota) != cell.cell_id)
            throw Error(ErrorKind::MatchingFailure,
                        "top face of c(" + cell_name(cell.cell_id) + ") is not the cell itself");
        if (!images.insert(*image).second)
            throw Error(ErrorKind::MatchingFailure, "c is not injective at " + cell_name(*image));
        M.pairs.emplace(cell.cell_id, MatchTarget{*image, iota});
    }
    if (images.size() != collapsible_count)
        throw Error(ErrorKind::MatchingFailure, "c is not surjective onto the collapsible cells");
    return M;
}

std::vector<std::string> validate_matching(const QuotientComplex& X, const MorseMatching& M)
{
    std::vector<std::string> problems;
    std::vector<int> role(X.size(), 0); // 1 critical, 2 redundant, 3 collapsible

    auto claim = [&](CellId c, int r) {
        if (c >= X.size())
        {
            problems.push_back(cell_name(c) + " does not exist");
            return;
        }
        if (role[c] != 0)
            problems.push_back(cell_name(c) + " is assigned more than one role");
        role[c] = r;
    };
    for (CellId c : M.critical)
        claim(c, 1);
    for (const auto& [tau, target] : M.pairs)
    {
        claim(tau, 2);
        claim(target.collapsible, 3);
    }
    for (CellId c = 0; c < X.size(); ++c)
    {
        if (role[c] == 0)
            problems.push_back(cell_name(c) + " is in no class of the partition");
        static constexpr MorseClass expected[] = {MorseClass::Unassigned, MorseClass::Critical,
                                                  MorseClass::Redundant, MorseClass::Collapsible};
        if (role[c] != 0 && X.cell(c).morse_class != expected[role[c]])
            problems.push_back(cell_name(c) + " role disagrees with its classification");
    }

    for (const auto& [tau, target] : M.pairs)
    {
        const CellId sigma = target.collapsible;
        if (tau >= X.size() || sigma >= X.size())
            continue;
        if (X.cell(sigma).dim() != X.cell(tau).dim() + 1)
        {
            problems.push_back("pair " + std::to_string(tau) + " -> " + std::to_string(sigma) +
                               " does not raise dimension by one");
            continue;
        }
        auto faces = X.faces(sigma);
        if (target.iota >= faces.size() || faces[target.iota] != tau)
            problems.push_back("pair " + std::to_string(tau) + " -> " + std::to_string(sigma) +
                               ": face at index " + std::to_string(target.iota) +
                               " is not the redundant cell");
        for (std::size_t j = 0; j < faces.size(); ++j)
            if (j != target.iota && faces[j] == tau)
                problems.push_back("pair " + std::to_string(tau) + " -> " + std::to_string(sigma) +
                                   ": redundant cell is also face " + std::to_string(j));
    }
    return problems;
}

std::vector<std::string> check_critical_cells(const QuotientComplex& X, const MorseMatching& M)
{
    std::vector<std::string> problems;
    if (M.critical.size() != 1)
    {
        problems.push_back("expected one critical cell, found " + std::to_string(M.critical.size()));
        return problems;
    }
    const OrbitCell& c = X.cell(M.critical.front());
    if (c.dim() != 0 || !X.table().is_sylow(c.rep.top()))
        problems.push_back("critical cell is not the Sylow vertex");
    return problems;
}

MorseDigraph::MorseDigraph(std::vector<CellId> vertices, std::vector<DigraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges))
{
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        local_.emplace(vertices_[i], i);
    out_.resize(vertices_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e)
        out_[local_.at(edges_[e].from)].push_back(e);
}

MorseDigraph build_digraph(const QuotientComplex& X, const MorseMatching& M)
{
    std::set<CellId> vertex_set;
    for (const auto& [tau, target] : M.pairs)
    {
        vertex_set.insert(tau);
        vertex_set.insert(target.collapsible);
    }
    std::vector<DigraphEdge> edges;
    for (const auto& [tau, target] : M.pairs)
    {
        edges.push_back({tau, target.collapsible, EdgeKind::MatchUp});
        auto faces = X.faces(target.collapsible);
        for (std::size_t j = 0; j < faces.size(); ++j)
        {
            if (j == target.iota || !vertex_set.contains(faces[j]))
                continue;
            edges.push_back({target.collapsible, faces[j], EdgeKind::FaceDown});
        }
    }
    return MorseDigraph({vertex_set.begin(), vertex_set.end()}, std::move(edges));
}

AcyclicityCertificate check_acyclic(const MorseDigraph& D)
{
    const auto& V = D.vertices();
    std::map<CellId, std::size_t> indegree;
    for (CellId v : V)
        indegree[v] = 0;
    for (const auto& e : D.edges())
        ++indegree[e.to];

    // Kahn's algorithm; the queue is seeded in vertex order for determinism.
    AcyclicityCertificate cert;
    std::deque<CellId> ready;
    for (CellId v : V)
        if (indegree[v] == 0)
            ready.push_back(v);
    while (!ready.empty())
    {
        CellId v = ready.front();
        ready.pop_front();
        cert.order.push_back(v);
        for (std::size_t e : D.out_edges(v))
            if (--indegree[D.edges()[e].to] == 0)
                ready.push_back(D.edges()[e].to);
    }
    if (cert.order.size() == V.size())
        return cert;

    // Every leftover vertex has a leftover predecessor; walking predecessors
    // must revisit a vertex, which closes a cycle.
    cert.acyclic = false;
    std::map<CellId, CellId> pred;
    for (const auto& e : D.edges())
        if (indegree[e.from] > 0 && indegree[e.to] > 0)
            pred[e.to] = e.from;
    CellId v = pred.begin()->first;
    std::map<CellId, std::size_t> seen_at;
    std::vector<CellId> walk;
    while (!seen_at.contains(v))
    {
        seen_at[v] = walk.size();
        walk.push_back(v);
        v = pred.at(v);
    }
    cert.cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
    std::reverse(cert.cycle.begin(), cert.cycle.end());
    cert.order.clear();
    return cert;
}

bool verify_certificate(const MorseDigraph& D, const AcyclicityCertificate& cert)
{
    if (cert.acyclic)
    {
        if (cert.order.size() != D.vertices().size())
            return false;
        std::map<CellId, std::size_t> pos;
        for (std::size_t i = 0; i < cert.order.size(); ++i)
            if (!D.contains(cert.order[i]) || !pos.emplace(cert.order[i], i).second)
                return false;
        for (const auto& e : D.edges())
            if (pos.at(e.from) >= pos.at(e.to))
                return false;
        return true;
    }
    if (cert.cycle.empty())
        return false;
    for (std::size_t i = 0; i < cert.cycle.size(); ++i)
    {
        CellId from = cert.cycle[i];
        CellId to = cert.cycle[(i + 1) % cert.cycle.size()];
        if (!D.contains(from))
            return false;
        bool found = false;
        for (std::size_t e : D.out_edges(from))
            found = found || D.edges()[e].to == to;
        if (!found)
            return false;
    }
    return true;
}

unsigned height(const QuotientComplex& X, CellId cell)
{
    return X.table().log_order(X.cell(cell).rep.top());
}

std::size_t longest_alternating_path(const MorseDigraph& D, const MorseMatching& M)
{
    // from_redundant[τ] = 1 + from_collapsible[c(τ)];
    // from_collapsible[σ] = max over face edges σ -> τ' (τ' redundant) of
    // 1 + from_redundant[τ'], or 0.
    std::map<CellId, std::size_t> memo;
    std::set<CellId> active;

    auto from_redundant = [&](auto&& self, CellId tau) -> std::size_t {
        if (auto it = memo.find(tau); it != memo.end())
            return it->second;
        if (!active.insert(tau).second)
            throw Error(ErrorKind::MatchingFailure, "alternating path revisits a cell; D has a cycle");
        const CellId sigma = M.pairs.at(tau).collapsible;
        std::size_t best_tail = 0;
        for (std::size_t e : D.out_edges(sigma))
        {
            const auto& edge = D.edges()[e];
            if (edge.kind == EdgeKind::FaceDown && M.pairs.contains(edge.to))
                best_tail = std::max(best_tail, 1 + self(self, edge.to));
        }
        active.erase(tau);
        return memo[tau] = 1 + best_tail;
    };

    std::size_t best = 0;
    for (const auto& [tau, target] : M.pairs)
        best = std::max(best, from_redundant(from_redundant, tau));
    return best;
}

void enforce_alternating_bound(std::size_t length, unsigned t)
{
    const std::size_t bound = t == 0 ? 0 : 2 * (static_cast<std::size_t>(t) - 1);
    if (length > bound)
        throw Error(ErrorKind::BoundViolated, "alternating path of length " + std::to_string(length) +
                                                  " exceeds 2(t-1) = " + std::to_string(bound));
}

std::vector<std::string> check_height_discipline(const QuotientComplex& X, const MorseDigraph& D)
{
    std::vector<std::string> problems;
    for (const auto& e : D.edges())
    {
        unsigned hf = height(X, e.from);
        unsigned ht = height(X, e.to);
        if (e.kind == EdgeKind::MatchUp && !(hf < ht))
            problems.push_back("height does not increase on match edge " + std::to_string(e.from) +
                               " -> " + std::to_string(e.to));
        if (e.kind == EdgeKind::FaceDown && hf != ht)
            problems.push_back("height changes on face edge " + std::to_string(e.from) + " -> " +
                               std::to_string(e.to));
    }
    return problems;
}

std::vector<std::string> check_dimension_discipline(const QuotientComplex& X,
                                                    const MorseDigraph& D,
                                                    const MorseMatching& M)
{
    // Paths between consecutive redundant cells leave τ by its match edge and
    // then pass only through collapsible cells; longer paths concatenate
    // these segments.
    std::vector<std::string> problems;
    for (const auto& [tau, target] : M.pairs)
    {
        const std::size_t dim_tau = X.cell(tau).dim();
        auto walk = [&](auto&& self, CellId sigma, std::size_t collapsible_seen) -> void {
            for (std::size_t e : D.out_edges(sigma))
            {
                CellId next = D.edges()[e].to;
                if (M.pairs.contains(next))
                {
                    const std::size_t dim_next = X.cell(next).dim();
                    const bool alternating = collapsible_seen == 1;
                    if (dim_next > dim_tau || ((dim_next == dim_tau) != alternating))
                        problems.push_back("segment " + std::to_string(tau) + " -> " +
                                           std::to_string(next) + " breaks dimension monotonicity");
                }
                else
                {
                    self(self, next, collapsible_seen + 1);
                }
            }
        };
        walk(walk, target.collapsible, 1);
    }
    return problems;
}

namespace {

struct LiveComplex
{
    const FaceTable& faces;
    std::vector<bool> alive;
    std::vector<std::size_t> cofaces;

    explicit LiveComplex(const FaceTable& f) : faces(f), alive(f.size(), true), cofaces(f.size(), 0)
    {
        for (const auto& fs : f.faces)
            for (CellId x : fs)
                ++cofaces[x];
    }

    // σ is maximal and τ has σ as its only remaining coface.
    bool collapsible_pair(CellId sigma, CellId tau) const
    {
        if (sigma >= alive.size() || tau >= alive.size() || !alive[sigma] || !alive[tau])
            return false;
        if (cofaces[sigma] != 0 || cofaces[tau] != 1)
            return false;
        const auto& fs = faces.faces[sigma];
        return std::find(fs.begin(), fs.end(), tau) != fs.end();
    }

    void remove(CellId c)
    {
        alive[c] = false;
        for (CellId x : faces.faces[c])
            --cofaces[x];
    }
};

} // namespace

CollapseSchedule collapse_schedule(const QuotientComplex& X, const MorseMatching& M,
                                   const AcyclicityCertificate& cert)
{
    if (!cert.acyclic)
        throw Error(ErrorKind::StuckCollapse, "digraph is not acyclic");
    if (M.critical.size() != 1 || X.cell(M.critical.front()).dim() != 0)
        throw Error(ErrorKind::StuckCollapse, "expected a single critical vertex");

    std::map<CellId, std::size_t> position;
    for (std::size_t i = 0; i < cert.order.size(); ++i)
        position[cert.order[i]] = i;
    std::vector<CollapseStep> pending;
    for (const auto& [tau, target] : M.pairs)
        pending.push_back({target.collapsible, tau});
    std::sort(pending.begin(), pending.end(), [&](const CollapseStep& a, const CollapseStep& b) {
        return position.at(a.collapsible) < position.at(b.collapsible);
    });

    LiveComplex live(X.face_table());
    CollapseSchedule schedule;
    // Collapsibility of a pair is never destroyed by removing other cells, so
    // taking the first executable pair each round cannot dead-end.
    while (!pending.empty())
    {
        auto it = std::find_if(pending.begin(), pending.end(), [&](const CollapseStep& s) {
            return live.collapsible_pair(s.collapsible, s.free_face);
        });
        if (it == pending.end())
            throw Error(ErrorKind::StuckCollapse,
                        std::to_string(pending.size()) + " pairs left without a free face");
        live.remove(it->collapsible);
        live.remove(it->free_face);
        schedule.steps.push_back(*it);
        pending.erase(it);
    }

    std::vector<CellId> survivors;
    for (CellId c = 0; c < X.size(); ++c)
        if (live.alive[c])
            survivors.push_back(c);
    if (survivors.size() != 1 || survivors.front() != M.critical.front())
        throw Error(ErrorKind::StuckCollapse, "collapse did not end at the critical vertex");
    schedule.terminal_cell = survivors.front();
    return schedule;
}

std::vector<std::string> verify_collapse_schedule(const FaceTable& faces,
                                                  const CollapseSchedule& schedule)
{
    std::vector<std::string> problems;
    LiveComplex live(faces);
    for (std::size_t k = 0; k < schedule.steps.size(); ++k)
    {
        const auto& s = schedule.steps[k];
        if (!live.collapsible_pair(s.collapsible, s.free_face))
        {
            problems.push_back("step " + std::to_string(k) + " is not an elementary collapse");
            return problems;
        }
        live.remove(s.collapsible);
        live.remove(s.free_face);
    }
    for (CellId c = 0; c < faces.size(); ++c)
        if (live.alive[c] && c != schedule.terminal_cell)
            problems.push_back(cell_name(c) + " survives the schedule");
    if (schedule.terminal_cell >= faces.size() || !live.alive[schedule.terminal_cell])
        problems.push_back("terminal cell does not survive");
    return problems;
}

IndependenceReport representative_independence_test(const QuotientComplex& X,
                                                     const MorseMatching& M, std::size_t trials,
                                                     std::uint64_t seed)
{
    IndependenceReport report;
    report.trials = trials;
    if (trials == 0 || X.size() == 0)
        return report;

    const PSubgroupTable& T = X.table();
    const PermGroup& G = T.group();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_cell(0, X.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_elem(0, G.order() - 1);
    std::vector<CellId> redundant;
    for (const auto& [tau, target] : M.pairs)
        redundant.push_back(tau);

    for (std::size_t k = 0; k < trials; ++k)
    {
        bool ok = true;
        const OrbitCell& cell = X.cell(static_cast<CellId>(pick_cell(rng)));
        ChainCell moved = conjugate_chain(T, static_cast<ElementId>(pick_elem(rng)), cell.rep);
        if (classify_chain(T, moved) != cell.morse_class)
        {
            ok = false;
            report.details.push_back("trial " + std::to_string(k) + ": class of " +
                                     cell_name(cell.cell_id) + " changes under conjugation");
        }

        if (!redundant.empty())
        {
            std::uniform_int_distribution<std::size_t> pick_red(0, redundant.size() - 1);
            const CellId tau = redundant[pick_red(rng)];
            ChainCell rep = conjugate_chain(T, static_cast<ElementId>(pick_elem(rng)), X.cell(tau).rep);
            std::vector<Subgroup> members;
            for (SubgroupId id : rep.subgroup_ids)
                members.push_back(T.subgroup(id));
            Subgroup N = chain_normalizer(G, members);
            Subgroup sylow = sylow_extension(G, N, members.back(), T.prime(), &rng);
            rep.subgroup_ids.push_back(*T.index_of(sylow));
            auto image = X.find(rep);
            if (!image || *image != M.pairs.at(tau).collapsible)
            {
                ok = false;
                report.details.push_back("trial " + std::to_string(k) + ": c(" +
                                         cell_name(tau) + ") depends on the representative");
            }
        }
        if (!ok)
            ++report.failures;
    }
    return report;
}

} // namespace orbitmorse
