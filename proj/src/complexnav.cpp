#include "infassoc/complexnav.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace infassoc {

namespace {

void require_in_window(const StandardPartition& w, const FTessellation& t) {
    if (!w.refines(support_polygon(t)))
        throw WindowViolation("tessellation support exceeds the window");
}

int breakpoint_index(const std::vector<Dyadic>& bp, const Dyadic& x) {
    auto it = std::lower_bound(bp.begin(), bp.end(), x);
    return static_cast<int>(it - bp.begin()) + 1; // 1-based corner label
}

bool polygon_side(int i, int j, int m) { return j - i == 1 || (i == 1 && j == m); }

// Shortest flip path between two triangulations of the window polygon.
// Frontier expansion is the parallel kernel; bookkeeping stays serial so the
// result is deterministic either way.
int window_bfs(const PolygonTessellation& src, const PolygonTessellation& dst,
               long long node_budget, bool parallel) {
    if (src == dst) return 0;
    std::set<std::vector<std::pair<int, int>>> visited{src.diagonals};
    std::vector<PolygonTessellation> frontier{src};
    long long nodes = 1;
    for (int dist = 1; !frontier.empty(); ++dist) {
        std::vector<std::vector<PolygonTessellation>> buckets(frontier.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(frontier.size()); ++i) {
            const PolygonTessellation& f = frontier[static_cast<std::size_t>(i)];
            auto& bucket = buckets[static_cast<std::size_t>(i)];
            bucket.reserve(f.diagonals.size());
            for (const auto& d : f.diagonals) bucket.push_back(flip(f, d));
        }
        std::vector<PolygonTessellation> next;
        for (auto& bucket : buckets)
            for (auto& cand : bucket) {
                if (cand == dst) return dist;
                if (!visited.insert(cand.diagonals).second) continue;
                if (++nodes > node_budget)
                    throw BudgetExceeded("flip search exceeded its node budget");
                next.push_back(std::move(cand));
            }
        frontier = std::move(next);
    }
    throw DomainError("no flip path inside the window");
}

int bfs_impl(const FTessellation& a, const FTessellation& b, const WindowPolicy& w,
             bool parallel) {
    if (rank(a) != 0 || rank(b) != 0) throw DomainError("distances are between triangulations");
    if (w.max_expansions < 0) throw DomainError("max_expansions must be >= 0");
    require_in_window(w.base, a);
    require_in_window(w.base, b);
    int best = -1;
    for (int layer = 0; layer <= w.max_expansions; ++layer) {
        StandardPartition win = expand_window(w.base, layer);
        const int m = static_cast<int>(win.breakpoints().size());
        PolygonTessellation src = PolygonTessellation::make(m, window_diagonals(a, win));
        PolygonTessellation dst = PolygonTessellation::make(m, window_diagonals(b, win));
        int d = window_bfs(src, dst, w.node_budget, parallel);
        best = best < 0 ? d : std::min(best, d);
        if (best == 0) break; // larger windows cannot improve on 0
    }
    return best;
}

} // namespace

std::string shape_name(LinkShape s) {
    switch (s) {
    case LinkShape::square_cycle: return "square-cycle";
    case LinkShape::pentagon_cycle: return "pentagon-cycle";
    case LinkShape::cube: return "cube";
    case LinkShape::prism: return "prism";
    case LinkShape::associahedron: return "associahedron";
    }
    throw DomainError("unknown shape");
}

StandardPartition expand_window(const StandardPartition& w, int layers) {
    if (layers < 0) throw DomainError("expansion layers must be >= 0");
    StandardPartition cur = w;
    for (int step = 0; step < layers; ++step) {
        std::vector<Dyadic> pts;
        pts.reserve(cur.interval_count() * 2);
        for (std::size_t g = 0; g < cur.interval_count(); ++g) {
            const Dyadic& lo = cur.interval_lo(g);
            pts.push_back(lo);
            pts.push_back(lo.plus_mod1(Dyadic::from_parts(1, cur.interval_level(g) + 1)));
        }
        cur = StandardPartition::from_breakpoints(std::move(pts));
    }
    return cur;
}

FTessellation drop_arc(const FTessellation& t, const Arc& a) {
    if (!contains_arc(t, a)) throw DomainError("cannot drop an absent arc");
    FTessellation out = t;
    if (out.added.erase(a) == 0) out.removed.insert(a);
    return out;
}

std::vector<std::pair<int, int>> window_diagonals(const FTessellation& a,
                                                  const StandardPartition& w) {
    require_in_window(w, a);
    const std::vector<Dyadic>& bp = w.breakpoints();
    const int m = static_cast<int>(bp.size());
    std::vector<std::pair<int, int>> out;
    auto push_if_inside = [&](const Arc& x) {
        int i = breakpoint_index(bp, x.lo());
        int j = breakpoint_index(bp, x.hi());
        if (!polygon_side(i, j, m)) out.emplace_back(i, j);
    };
    for (const Arc& x : base_arcs_in_window(w))
        if (!a.removed.count(x)) push_if_inside(x);
    for (const Arc& x : a.added) push_if_inside(x);
    std::sort(out.begin(), out.end());
    return out;
}

FTessellation tessellation_in_window(const StandardPartition& w,
                                     const std::vector<std::pair<int, int>>& diagonals) {
    const std::vector<Dyadic>& bp = w.breakpoints();
    const int m = static_cast<int>(bp.size());
    if (m < 3) throw DomainError("window must have at least 3 corners");
    PolygonTessellation face = PolygonTessellation::make(m, diagonals);
    std::set<Arc> chords;
    for (const auto& [i, j] : face.diagonals) chords.insert(Arc(bp[i - 1], bp[j - 1]));
    std::set<Arc> removed, added;
    for (const Arc& x : base_arcs_in_window(w)) {
        int i = breakpoint_index(bp, x.lo());
        int j = breakpoint_index(bp, x.hi());
        if (polygon_side(i, j, m)) continue; // window boundary, always kept
        if (!chords.count(x)) removed.insert(x);
    }
    for (const Arc& x : chords)
        if (!in_base_triangulation(x)) added.insert(x);
    return make_tessellation(std::move(removed), std::move(added));
}

std::vector<std::pair<Arc, FTessellation>> neighbors(const FTessellation& a,
                                                     const WindowPolicy& w) {
    if (rank(a) != 0) throw DomainError("neighbors are defined for triangulations");
    std::vector<std::pair<int, int>> diags = window_diagonals(a, w.base);
    const std::vector<Dyadic>& bp = w.base.breakpoints();
    PolygonTessellation t = PolygonTessellation::make(static_cast<int>(bp.size()), diags);
    std::vector<std::pair<Arc, FTessellation>> out;
    out.reserve(t.diagonals.size());
    for (const auto& d : t.diagonals) {
        PolygonTessellation flipped = flip(t, d);
        out.emplace_back(Arc(bp[d.first - 1], bp[d.second - 1]),
                         tessellation_in_window(w.base, flipped.diagonals));
    }
    return out;
}

int bfs_distance(const FTessellation& a, const FTessellation& b, const WindowPolicy& w) {
    return bfs_impl(a, b, w, true);
}

int bfs_distance_serial(const FTessellation& a, const FTessellation& b, const WindowPolicy& w) {
    return bfs_impl(a, b, w, false);
}

CellLink minimal_cycle(const FTessellation& e1, const FTessellation& e2) {
    if (rank(e1) != 1 || rank(e2) != 1)
        throw DomainError("minimal cycles pass through two rank-1 edges");
    if (e1 == e2) throw DomainError("the two edges must be distinct");
    std::vector<FTessellation> u = containing_triangulations(e1);
    std::vector<FTessellation> v = containing_triangulations(e2);
    bool consecutive = false;
    for (const FTessellation& x : u)
        for (const FTessellation& y : v)
            if (x == y) consecutive = true;
    if (!consecutive) throw DomainError("the edges do not share an endpoint");
    return classify_link(intersect(e1, e2));
}

CellLink classify_link(const FTessellation& b) {
    const int r = rank(b);
    if (r != 2 && r != 3)
        throw DomainError("links are classified for rank-2 and rank-3 cells");
    CellStructure cs = cell_of(b);
    std::vector<std::size_t> sizes;
    sizes.reserve(cs.components.size());
    for (const auto& comp : cs.components) sizes.push_back(comp.size());
    std::sort(sizes.begin(), sizes.end());
    using Sizes = std::vector<std::size_t>;
    CellLink link;
    link.center = b;
    if (sizes == Sizes{4, 4}) {
        link.shape = LinkShape::square_cycle;
        link.vertex_count = 4;
    } else if (sizes == Sizes{5}) {
        link.shape = LinkShape::pentagon_cycle;
        link.vertex_count = 5;
    } else if (sizes == Sizes{4, 4, 4}) {
        link.shape = LinkShape::cube;
        link.vertex_count = 8;
    } else if (sizes == Sizes{4, 5}) {
        link.shape = LinkShape::prism;
        link.vertex_count = 10;
    } else if (sizes == Sizes{6}) {
        link.shape = LinkShape::associahedron;
        link.vertex_count = 14;
    } else {
        throw DomainError("face sizes do not match any rank-2 or rank-3 cell");
    }
    return link;
}

std::vector<FTessellation> boundary_cycle(const FTessellation& b) {
    if (rank(b) != 2) throw DomainError("boundary cycles are for rank-2 cells");
    std::vector<FTessellation> verts = containing_triangulations(b);
    auto adjacent = [](const FTessellation& x, const FTessellation& y) {
        return rank(intersect(x, y)) == 1;
    };
    std::vector<FTessellation> cycle{verts[0]};
    std::vector<bool> used(verts.size(), false);
    used[0] = true;
    while (cycle.size() < verts.size()) {
        bool advanced = false;
        for (std::size_t i = 0; i < verts.size() && !advanced; ++i) {
            if (used[i] || !adjacent(cycle.back(), verts[i])) continue;
            cycle.push_back(verts[i]);
            used[i] = true;
            advanced = true;
        }
        if (!advanced) throw DomainError("boundary vertices do not close a cycle");
    }
    if (!adjacent(cycle.front(), cycle.back()))
        throw DomainError("boundary vertices do not close a cycle");
    return cycle;
}

FTessellation induced_cell_action(const ThompsonElement& t, const FTessellation& b) {
    return act_tessellation(t, b);
}

Rational translation_length_upper(const ThompsonElement& t, int radius, const WindowPolicy& w) {
    if (radius < 0) throw DomainError("radius must be >= 0");
    const FTessellation origin = FTessellation::base();
    require_in_window(w.base, origin);
    const int m = static_cast<int>(w.base.breakpoints().size());
    PolygonTessellation start = PolygonTessellation::make(m, window_diagonals(origin, w.base));

    // the ball of the given flip radius around the base triangulation
    std::set<std::vector<std::pair<int, int>>> visited{start.diagonals};
    std::vector<PolygonTessellation> frontier{start};
    std::vector<PolygonTessellation> ball{start};
    long long nodes = 1;
    for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
        std::vector<PolygonTessellation> next;
        for (const PolygonTessellation& f : frontier)
            for (const auto& d : f.diagonals) {
                PolygonTessellation cand = flip(f, d);
                if (!visited.insert(cand.diagonals).second) continue;
                if (++nodes > w.node_budget)
                    throw BudgetExceeded("ball exploration exceeded its node budget");
                ball.push_back(cand);
                next.push_back(std::move(cand));
            }
        frontier = std::move(next);
    }

    std::optional<int> best;
    for (const PolygonTessellation& state : ball) {
        FTessellation a = tessellation_in_window(w.base, state.diagonals);
        FTessellation moved = act_tessellation(t, a);
        WindowPolicy reach{refine_common(w.base, support_polygon(moved)), w.max_expansions,
                           w.node_budget};
        int d = bfs_distance(a, moved, reach);
        if (!best || d < *best) best = d;
        if (*best == 0) break;
    }
    return Rational(*best);
}

namespace {

std::vector<Arc> sample_arc_pool() {
    std::vector<Arc> pool;
    pool.emplace_back(Dyadic(), Dyadic::from_parts(1, 1));
    for (int level = 2; level <= 3; ++level)
        for (long long mth = 0; mth < (1LL << level); ++mth) {
            Dyadic lo = Dyadic::from_parts(mth, level);
            pool.emplace_back(lo, lo.plus_mod1(Dyadic::from_parts(1, level)));
        }
    return pool;
}

std::vector<Arc> present_from_pool(const FTessellation& t, const std::vector<Arc>& pool) {
    std::vector<Arc> out;
    for (const Arc& a : pool)
        if (contains_arc(t, a)) out.push_back(a);
    for (const Arc& a : t.added) out.push_back(a);
    return out;
}

} // namespace

ConsistencyReport isometry_consistency_check(const ThompsonElement& t, int samples,
                                             std::uint64_t seed) {
    if (samples < 0) throw DomainError("samples must be >= 0");
    std::mt19937_64 rng(seed);
    const std::vector<Arc> pool = sample_arc_pool();
    ConsistencyReport rep;
    for (int iter = 0; iter < samples; ++iter) {
        FTessellation a = FTessellation::base();
        const int flips = static_cast<int>(rng() % 4);
        for (int i = 0; i < flips; ++i) {
            std::vector<Arc> present = present_from_pool(a, pool);
            a = flip_arc(a, present[rng() % present.size()]);
        }
        std::vector<Arc> present = present_from_pool(a, pool);
        std::size_t i = rng() % present.size();
        std::size_t j = rng() % (present.size() - 1);
        if (j >= i) ++j;
        FTessellation e1 = drop_arc(a, present[i]);
        FTessellation e2 = drop_arc(a, present[j]);
        CellLink before = minimal_cycle(e1, e2);
        CellLink after = minimal_cycle(induced_cell_action(t, e1), induced_cell_action(t, e2));
        ++rep.checked;
        if (before.vertex_count != after.vertex_count || before.shape != after.shape)
            ++rep.violations;
    }
    return rep;
}

} // namespace infassoc
