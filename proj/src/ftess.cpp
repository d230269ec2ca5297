#include "infassoc/ftess.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "dsu.hpp"
#include "infassoc/associahedron.hpp"

namespace infassoc {

std::string FTessellation::str() const {
    auto join = [](const std::set<Arc>& arcs) {
        std::string s = "{";
        bool first = true;
        for (const auto& a : arcs) {
            if (!first) s += ",";
            s += a.str();
            first = false;
        }
        return s + "}";
    };
    return "removed=" + join(removed) + " added=" + join(added);
}

std::string Violation::str() const {
    switch (kind) {
    case ViolationKind::RemovedNotInBase:
        return "removed arc " + arc.str() + " is not a base arc";
    case ViolationKind::AddedInBase:
        return "added arc " + arc.str() + " is already a base arc";
    case ViolationKind::AddedCrossesBase:
        return "added arc " + arc.str() + " crosses surviving base arc " + other->str();
    case ViolationKind::AddedCrossesAdded:
        return "added arcs " + arc.str() + " and " + other->str() + " cross";
    }
    return "unknown violation";
}

ValidationResult validate(const FTessellation& t) {
    ValidationResult res;
    for (const auto& a : t.removed)
        if (!in_base_triangulation(a))
            res.violations.push_back({ViolationKind::RemovedNotInBase, a, {}});
    for (const auto& a : t.added) {
        if (in_base_triangulation(a)) {
            res.violations.push_back({ViolationKind::AddedInBase, a, {}});
            continue;
        }
        for (const auto& c : base_arcs_crossing(a))
            if (!t.removed.count(c))
                res.violations.push_back({ViolationKind::AddedCrossesBase, a, c});
    }
    for (auto i = t.added.begin(); i != t.added.end(); ++i)
        for (auto j = std::next(i); j != t.added.end(); ++j)
            if (arcs_cross(*i, *j))
                res.violations.push_back({ViolationKind::AddedCrossesAdded, *i, *j});
    return res;
}

FTessellation make_tessellation(std::set<Arc> removed, std::set<Arc> added) {
    FTessellation t{std::move(removed), std::move(added)};
    auto res = validate(t);
    if (!res.ok()) throw DomainError(res.violations.front().str());
    return t;
}

int rank(const FTessellation& t) { return int(t.removed.size()) - int(t.added.size()); }

bool contains_arc(const FTessellation& t, const Arc& a) {
    return in_base_triangulation(a) ? !t.removed.count(a) : t.added.count(a) > 0;
}

namespace {

void ensure_valid(const FTessellation& t) {
    auto res = validate(t);
    if (!res.ok()) throw DomainError("invalid tessellation: " + res.violations.front().str());
}

} // namespace

CellStructure cell_of(const FTessellation& t) {
    ensure_valid(t);
    // base triangles sit over standard intervals; removing an arc merges the
    // triangle over its interval with the one over the parent interval
    std::map<std::pair<Dyadic, int>, int> tri;
    auto tri_id = [&](const Dyadic& lo, int level) {
        auto [it, fresh] = tri.try_emplace(std::make_pair(lo, level), int(tri.size()));
        (void)fresh;
        return it->second;
    };
    std::vector<std::pair<int, int>> merges;
    for (const auto& a : t.removed) {
        auto [lo, n] = *base_arc_interval(a);
        int child = tri_id(lo, n);
        int parent = n == 1 ? tri_id(Dyadic::from_parts(1, 1), 1) // diameter: the other half
                            : tri_id(Dyadic::from_parts(lo.scaled(n) >> 1, n - 1), n - 1);
        merges.emplace_back(child, parent);
    }
    detail::Dsu dsu(int(tri.size()));
    for (auto [a, b] : merges) dsu.unite(a, b);

    std::map<int, std::set<Dyadic>> verts;
    for (const auto& [key, id] : tri) {
        auto& vs = verts[dsu.find(id)];
        vs.insert(key.first);
        vs.insert(key.first.plus_mod1(Dyadic::from_parts(1, key.second + 1)));
        vs.insert(key.first.plus_mod1(Dyadic::from_parts(1, key.second)));
    }
    std::vector<std::vector<Dyadic>> regions;
    for (auto& [root, vs] : verts) regions.emplace_back(vs.begin(), vs.end());
    std::sort(regions.begin(), regions.end());

    // each added arc is a strict diagonal of exactly one merged region
    std::vector<std::vector<std::pair<int, int>>> chords(regions.size());
    for (const auto& a : t.added) {
        bool placed = false;
        for (std::size_t r = 0; r < regions.size() && !placed; ++r) {
            const auto& vs = regions[r];
            auto ilo = std::lower_bound(vs.begin(), vs.end(), a.lo());
            auto ihi = std::lower_bound(vs.begin(), vs.end(), a.hi());
            if (ilo != vs.end() && *ilo == a.lo() && ihi != vs.end() && *ihi == a.hi()) {
                chords[r].emplace_back(int(ilo - vs.begin()), int(ihi - vs.begin()));
                placed = true;
            }
        }
        if (!placed)
            throw DomainError("added arc " + a.str() + " is not a diagonal of any merged face");
    }

    CellStructure cs;
    for (std::size_t r = 0; r < regions.size(); ++r)
        for (const auto& face : split_cycle_faces(int(regions[r].size()), chords[r])) {
            if (face.size() <= 3) continue;
            std::vector<Dyadic> poly;
            poly.reserve(face.size());
            for (int idx : face) poly.push_back(regions[r][idx]);
            cs.components.push_back(std::move(poly));
        }
    std::sort(cs.components.begin(), cs.components.end());
    for (const auto& c : cs.components) cs.dim += int(c.size()) - 3;
    return cs;
}

FTessellation intersect(const FTessellation& a, const FTessellation& b) {
    FTessellation out;
    std::set_union(a.removed.begin(), a.removed.end(), b.removed.begin(), b.removed.end(),
                   std::inserter(out.removed, out.removed.end()));
    std::set_intersection(a.added.begin(), a.added.end(), b.added.begin(), b.added.end(),
                          std::inserter(out.added, out.added.end()));
    return out;
}

bool leq(const FTessellation& a, const FTessellation& b) {
    return std::includes(b.removed.begin(), b.removed.end(), a.removed.begin(), a.removed.end()) &&
           std::includes(a.added.begin(), a.added.end(), b.added.begin(), b.added.end());
}

StandardPartition support_polygon(const FTessellation& t) {
    ensure_valid(t);
    std::vector<Arc> arcs(t.removed.begin(), t.removed.end());
    arcs.insert(arcs.end(), t.added.begin(), t.added.end());

    std::vector<Dyadic> pts{Dyadic()};
    for (const auto& a : arcs) {
        pts.push_back(a.lo());
        pts.push_back(a.hi());
    }
    auto part = StandardPartition::closure(std::move(pts));

    // every difference arc must become a strict diagonal of the inscribed
    // polygon: while one still spans a single gap, halve that gap
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& a : arcs) {
            const auto& bp = part.breakpoints();
            std::size_t k = bp.size();
            for (std::size_t i = 0; i < k && !changed; ++i) {
                const Dyadic& x = bp[i];
                const Dyadic& y = bp[(i + 1) % k];
                if ((x == a.lo() && y == a.hi()) || (x == a.hi() && y == a.lo())) {
                    std::vector<Dyadic> np(bp.begin(), bp.end());
                    np.push_back(part.interval_lo(i).plus_mod1(
                        Dyadic::from_parts(1, part.interval_level(i) + 1)));
                    part = StandardPartition::closure(std::move(np));
                    changed = true;
                }
            }
            if (changed) break;
        }
    }
    while (part.interval_count() < 3) {
        std::size_t last = part.interval_count() - 1;
        std::vector<Dyadic> np(part.breakpoints().begin(), part.breakpoints().end());
        np.push_back(
            part.interval_lo(last).plus_mod1(Dyadic::from_parts(1, part.interval_level(last) + 1)));
        part = StandardPartition::closure(std::move(np));
    }
    return part;
}

std::vector<FTessellation> containing_triangulations(const FTessellation& t) {
    ensure_valid(t);
    auto cs = cell_of(t);

    std::vector<std::vector<std::vector<Arc>>> choices;
    long long total = 1;
    for (const auto& comp : cs.components) {
        std::vector<std::vector<Arc>> variants;
        for (const auto& tri : all_triangulations(int(comp.size()))) {
            std::vector<Arc> chordarcs;
            for (auto [i, j] : tri.diagonals) chordarcs.emplace_back(comp[i - 1], comp[j - 1]);
            variants.push_back(std::move(chordarcs));
        }
        total *= static_cast<long long>(variants.size());
        if (total > 100000)
            throw BudgetExceeded("cell has more than 100000 refining triangulations");
        choices.push_back(std::move(variants));
    }

    std::vector<FTessellation> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        FTessellation r = t;
        for (std::size_t c = 0; c < choices.size(); ++c)
            for (const auto& arc : choices[c][pick[c]]) {
                if (in_base_triangulation(arc))
                    r.removed.erase(arc); // a base chord refills its slot
                else
                    r.added.insert(arc);
            }
        out.push_back(std::move(r));
        std::size_t c = 0;
        while (c < pick.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
        if (c == pick.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

FTessellation flip_arc(const FTessellation& t, const Arc& a) {
    ensure_valid(t);
    if (rank(t) != 0) throw DomainError("flip needs a rank-0 tessellation");
    if (!contains_arc(t, a)) throw DomainError("arc " + a.str() + " is not in the tessellation");

    FTessellation cut = t;
    if (in_base_triangulation(a))
        cut.removed.insert(a);
    else
        cut.added.erase(a);

    auto cs = cell_of(cut);
    if (cs.components.size() != 1 || cs.components[0].size() != 4)
        throw DomainError("arc " + a.str() + " does not span a quadrilateral");
    const auto& q = cs.components[0];
    Arc d1(q[0], q[2]), d2(q[1], q[3]);
    const Arc& fresh = d1 == a ? d2 : d1;
    if (in_base_triangulation(fresh))
        cut.removed.erase(fresh);
    else
        cut.added.insert(fresh);
    return cut;
}

} // namespace infassoc
