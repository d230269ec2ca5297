#include "infassoc/verify.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "infassoc/associahedron.hpp"
#include "infassoc/complexnav.hpp"
#include "infassoc/dyadic.hpp"
#include "infassoc/errors.hpp"
#include "infassoc/ftess.hpp"
#include "infassoc/thompson.hpp"

namespace infassoc {

namespace {

CriterionResult result(int number, std::string name, bool passed, std::string detail) {
    return {number, std::move(name), passed, std::move(detail)};
}

long long catalan(int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

// total face counts of the n-gon subdivision poset, indexed by n - 2:
// a(0) = a(1) = 1, (m + 1) a(m) = (6m - 3) a(m-1) - (m - 2) a(m-2)
long long subdivision_total(int m) {
    long long prev = 1, cur = 1;
    for (int i = 2; i <= m; ++i) {
        long long next = ((6 * i - 3) * cur - (i - 2) * prev) / (i + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

// Counts of non-crossing diagonal subsets of the n-gon by size, found by
// filtering every subset. Deliberately naive: this is the oracle the fast
// enumerator is measured against.
std::vector<long long> brute_force_counts(int n) {
    std::vector<std::pair<int, int>> diags;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (!(i == 1 && j == n)) diags.emplace_back(i, j);
    const int d = static_cast<int>(diags.size());
    std::vector<std::vector<bool>> cross(d, std::vector<bool>(d, false));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) cross[i][j] = polygon_diagonals_cross(diags[i], diags[j]);
    std::vector<long long> counts(n - 2, 0);
    std::vector<int> chosen(d);
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        int taken = 0;
        bool ok = true;
        for (int b = 0; b < d && ok; ++b) {
            if (!((mask >> b) & 1u)) continue;
            for (int t = 0; t < taken && ok; ++t) ok = !cross[b][chosen[t]];
            if (ok) chosen[taken++] = b;
        }
        if (ok) ++counts[taken];
    }
    return counts;
}

ThompsonElement slope_generator() {
    return ThompsonElement::from_images(
        {Dyadic(), Dyadic::from_parts(1, 1), Dyadic::from_parts(3, 2)},
        {Dyadic(), Dyadic::from_parts(1, 2), Dyadic::from_parts(1, 1)}, 1);
}

ThompsonElement random_element(std::mt19937_64& rng, int letters) {
    static const std::vector<ThompsonElement> gens = [] {
        ThompsonElement slope = slope_generator();
        return std::vector<ThompsonElement>{ThompsonElement::rotation(Dyadic::from_parts(1, 1)),
                                            ThompsonElement::rotation(Dyadic::from_parts(1, 2)),
                                            ThompsonElement::reflection(), slope, inverse(slope)};
    }();
    ThompsonElement t;
    for (int i = 0; i < letters; ++i) t = compose(gens[rng() % gens.size()], t);
    return t;
}

std::vector<Arc> base_pool() {
    std::vector<Arc> pool;
    pool.emplace_back(Dyadic(), Dyadic::from_parts(1, 1));
    for (int level = 2; level <= 3; ++level)
        for (long long m = 0; m < (1LL << level); ++m) {
            Dyadic lo = Dyadic::from_parts(m, level);
            pool.emplace_back(lo, lo.plus_mod1(Dyadic::from_parts(1, level)));
        }
    return pool;
}

std::vector<Arc> present_arcs(const FTessellation& t, const std::vector<Arc>& pool) {
    std::vector<Arc> out;
    for (const Arc& a : pool)
        if (contains_arc(t, a)) out.push_back(a);
    for (const Arc& a : t.added) out.push_back(a);
    return out;
}

FTessellation random_triangulation(std::mt19937_64& rng, const std::vector<Arc>& pool,
                                   int flips) {
    FTessellation t;
    for (int i = 0; i < flips; ++i) {
        std::vector<Arc> present = present_arcs(t, pool);
        t = flip_arc(t, present[rng() % present.size()]);
    }
    return t;
}

FTessellation random_cell(std::mt19937_64& rng, const std::vector<Arc>& pool, int max_drops) {
    FTessellation t = random_triangulation(rng, pool, static_cast<int>(rng() % 4));
    const int drops = static_cast<int>(rng() % (max_drops + 1));
    for (int i = 0; i < drops; ++i) {
        std::vector<Arc> present = present_arcs(t, pool);
        t = drop_arc(t, present[rng() % present.size()]);
    }
    return t;
}

CriterionResult criterion_counts() {
    bool ok = true;
    std::ostringstream detail;
    for (int n = 3; n <= 8; ++n) {
        std::vector<long long> oracle = brute_force_counts(n);
        FaceLattice lat = face_lattice(n);
        std::vector<long long> fv = lat.f_vector();
        long long total = 0;
        for (int dim = 0; dim <= n - 3; ++dim) {
            ok = ok && fv[dim] == oracle[n - 3 - dim];
            total += fv[dim];
        }
        ok = ok && fv[0] == catalan(n - 2);
        ok = ok && total == subdivision_total(n - 2);
        if (n == 5) ok = ok && fv == std::vector<long long>{5, 5, 1};
    }
    detail << "f-vectors for n=3..8 match subset enumeration, Catalan vertex counts, "
           << "and subdivision totals; the pentagon case is (5,5,1)";
    return result(1, "face counts", ok, detail.str());
}

CriterionResult criterion_dimension() {
    bool ok = true;
    long long checked = 0;
    for (int n = 3; n <= 8; ++n) {
        FaceLattice lat = face_lattice(n);
        for (const PolygonTessellation& f : lat.faces) {
            int via_cuts = 0;
            for (int sides : cut_polygons(f)) via_cuts += sides - 3;
            const int dim = face_dim(f);
            ok = ok && dim == n - 3 - static_cast<int>(f.diagonals.size());
            ok = ok && dim == via_cuts;
            ++checked;
        }
    }
    std::ostringstream detail;
    detail << "corner count minus 3 minus diagonals equals the cut-polygon sum on all " << checked
           << " faces, n=3..8";
    return result(2, "dimension formula", ok, detail.str());
}

CriterionResult criterion_boundary() {
    bool ok = true;
    std::ostringstream detail;
    detail << "boundary shadows for n=4..8: Euler";
    for (int n = 4; n <= 8; ++n) {
        SphereCheckReport rep = check_sphere_boundary(n);
        ok = ok && rep.pass();
        detail << " " << rep.euler;
    }
    detail << ", component counts and incidence as expected";
    return result(3, "boundary spheres", ok, detail.str());
}

CriterionResult criterion_rank2() {
    bool ok = true;
    int squares = 0, pentagons = 0;
    const StandardPartition w3 = StandardPartition::uniform(3);
    FaceLattice lat = face_lattice(8);
    for (const PolygonTessellation& f : lat.faces) {
        if (face_dim(f) != 2) continue;
        FTessellation cell = tessellation_in_window(w3, f.diagonals);

        std::vector<std::size_t> sizes;
        for (const auto& comp : cell_of(cell).components) sizes.push_back(comp.size());
        std::sort(sizes.begin(), sizes.end());
        const bool two_squares = sizes == std::vector<std::size_t>{4, 4};
        const bool one_pentagon = sizes == std::vector<std::size_t>{5};

        // rebuild the cell as the minimal cycle through two consecutive edges
        FTessellation vertex = containing_triangulations(cell).front();
        std::vector<Arc> missing;
        std::set_difference(cell.removed.begin(), cell.removed.end(), vertex.removed.begin(),
                            vertex.removed.end(), std::back_inserter(missing));
        std::set_difference(vertex.added.begin(), vertex.added.end(), cell.added.begin(),
                            cell.added.end(), std::back_inserter(missing));
        ok = ok && missing.size() == 2;
        if (!ok) break;
        CellLink link = minimal_cycle(drop_arc(vertex, missing[0]), drop_arc(vertex, missing[1]));
        ok = ok && link.center == cell;
        ok = ok && (link.vertex_count == 4) == two_squares;
        ok = ok && (link.vertex_count == 5) == one_pentagon;
        two_squares ? ++squares : ++pentagons;
    }
    std::ostringstream detail;
    detail << "octagon window has " << squares << " square and " << pentagons
           << " pentagon rank-2 cells; cycle length 4 iff two squares, 5 iff one pentagon";
    return result(4, "rank-2 cycles", ok, detail.str());
}

CriterionResult criterion_rank3() {
    const Dyadic half = Dyadic::from_parts(1, 1);
    const Dyadic quarter = Dyadic::from_parts(1, 2);
    const Dyadic three_quarters = Dyadic::from_parts(3, 2);
    const Dyadic seven_eighths = Dyadic::from_parts(7, 3);
    struct Case {
        std::set<Arc> removed;
        LinkShape shape;
        int count;
    };
    const std::vector<Case> cases = {
        {{Arc(Dyadic(), quarter), Arc(half, three_quarters), Arc(three_quarters, seven_eighths)},
         LinkShape::cube,
         8},
        {{Arc(Dyadic(), quarter), Arc(quarter, half), Arc(half, three_quarters)},
         LinkShape::prism,
         10},
        {{Arc(Dyadic(), quarter), Arc(quarter, half), Arc(Dyadic(), half)},
         LinkShape::associahedron,
         14},
    };
    bool ok = true;
    for (const Case& c : cases) {
        FTessellation cell = make_tessellation(c.removed, {});
        CellLink link = classify_link(cell);
        ok = ok && link.shape == c.shape;
        ok = ok && link.vertex_count == c.count;
        ok = ok && containing_triangulations(cell).size() == static_cast<std::size_t>(c.count);
    }
    return result(5, "rank-3 links", ok,
                  "three-square, square+pentagon, and hexagon cells have 8, 10, and 14 "
                  "boundary triangulations (cube, prism, associahedron)");
}

CriterionResult criterion_group_laws(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    bool ok = true;
    int triples = 0;
    const ThompsonElement id = ThompsonElement::identity();
    for (int iter = 0; iter < 200; ++iter) {
        ThompsonElement a = random_element(rng, 1 + static_cast<int>(rng() % 4));
        ThompsonElement b = random_element(rng, 1 + static_cast<int>(rng() % 4));
        ThompsonElement c = random_element(rng, 1 + static_cast<int>(rng() % 4));
        ok = ok && compose(compose(a, b), c) == compose(a, compose(b, c));
        ok = ok && compose(a, id) == a && compose(id, a) == a;
        ok = ok && compose(a, inverse(a)) == id && compose(inverse(a), a) == id;
        ok = ok && reduce_minimal(a) == a;
        const bool reversing_product = (sign(a) == OrientationSign::reversing) !=
                                       (sign(b) == OrientationSign::reversing);
        ok = ok && (sign(compose(a, b)) == OrientationSign::reversing) == reversing_product;
        ok = ok && element_defects(a).empty() && element_defects(b).empty() &&
             element_defects(c).empty() && element_defects(compose(a, b)).empty();
        ++triples;
        if (!ok) break;
    }
    std::ostringstream detail;
    detail << triples
           << " random triples: associativity, identity, inverses, reduced form, the "
              "orientation sign, and every representation invariant hold";
    return result(6, "group laws", ok, detail.str());
}

CriterionResult criterion_action(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 1);
    const std::vector<Arc> pool = base_pool();
    bool ok = true;
    int checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
        ThompsonElement t = random_element(rng, 1 + static_cast<int>(rng() % 4));
        FTessellation b = random_cell(rng, pool, 2);
        FTessellation b2 = random_cell(rng, pool, 2);

        FTessellation tb = act_tessellation(t, b);
        ok = ok && rank(tb) == rank(b);
        ok = ok && validate(tb).ok();
        ok = ok && act_tessellation(ThompsonElement::identity(), b) == b;
        ok = ok && act_tessellation(t, intersect(b, b2)) == intersect(tb, act_tessellation(t, b2));

        FTessellation refinement = containing_triangulations(b).front();
        ok = ok && leq(refinement, b);
        ok = ok && leq(act_tessellation(t, refinement), tb);
        ok = ok && leq(b, refinement) == leq(tb, act_tessellation(t, refinement));
        ++checked;
        if (!ok) break;
    }
    const FTessellation base = FTessellation::base();
    ok = ok && act_tessellation(ThompsonElement::rotation(Dyadic::from_parts(1, 1)), base) == base;
    ok = ok &&
         !(act_tessellation(ThompsonElement::rotation(Dyadic::from_parts(1, 2)), base) == base);
    std::ostringstream detail;
    detail << checked
           << " random (element, cell) pairs: rank preserved, meets and refinement order "
              "transported; the half rotation fixes the base triangulation, the quarter "
              "rotation moves it";
    return result(7, "action properties", ok, detail.str());
}

CriterionResult criterion_faithfulness(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 2);
    bool ok = true;
    const std::vector<ThompsonElement> gens = {
        ThompsonElement::rotation(Dyadic::from_parts(1, 1)),
        ThompsonElement::rotation(Dyadic::from_parts(1, 2)), slope_generator(),
        ThompsonElement::reflection()};
    auto witnessed = [&](const ThompsonElement& t) {
        try {
            std::optional<FTessellation> w = faithfulness_witness(t);
            return w.has_value() && !(act_tessellation(t, *w) == *w);
        } catch (const BudgetExceeded&) {
            return false;
        }
    };
    for (const ThompsonElement& g : gens) ok = ok && witnessed(g);
    int products = 0;
    while (products < 50) {
        ThompsonElement t = random_element(rng, 1 + static_cast<int>(rng() % 6));
        if (t == ThompsonElement::identity()) continue;
        ok = ok && witnessed(t);
        ++products;
        if (!ok) break;
    }
    std::ostringstream detail;
    detail << "moved triangulations found for all 4 generators and " << products
           << " random nonidentity products within the default search budget";
    return result(8, "faithfulness witnesses", ok, detail.str());
}

CriterionResult criterion_distances(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 3);
    bool ok = true;
    const StandardPartition w3 = StandardPartition::uniform(3);
    WindowPolicy oct{w3};
    const std::vector<PolygonTessellation> tris = all_triangulations(8);
    auto pick = [&] {
        return tessellation_in_window(w3, tris[rng() % tris.size()].diagonals);
    };
    int triples = 0;
    for (int iter = 0; iter < 100; ++iter) {
        FTessellation x = pick(), y = pick(), z = pick();
        ok = ok && bfs_distance(x, x, oct) == 0;
        int dxy = bfs_distance(x, y, oct);
        ok = ok && dxy == bfs_distance(y, x, oct);
        ok = ok && bfs_distance(x, z, oct) <= dxy + bfs_distance(y, z, oct);
        ++triples;
        if (!ok) break;
    }
    for (int iter = 0; iter < 20 && ok; ++iter) {
        FTessellation x = pick();
        auto star = neighbors(x, oct);
        ok = ok && bfs_distance(x, star[rng() % star.size()].second, oct) == 1;
    }
    WindowPolicy quad{StandardPartition::uniform(2)};
    ok = ok && translation_length_upper(ThompsonElement::identity(), 1, quad) == 0;
    ok = ok &&
         translation_length_upper(ThompsonElement::rotation(Dyadic::from_parts(1, 1)), 1, quad) ==
             0;
    std::ostringstream detail;
    detail << triples
           << " sampled octagon-window triples: distance is zero on the diagonal, symmetric, "
              "triangular, and 1 to every flip neighbor; identity and the half rotation have "
              "translation bound 0";
    return result(9, "distance sanity", ok, detail.str());
}

CriterionResult criterion_isometry(std::uint64_t seed) {
    bool ok = true;
    std::ostringstream detail;
    const std::vector<ThompsonElement> gens = {
        ThompsonElement::rotation(Dyadic::from_parts(1, 1)),
        ThompsonElement::rotation(Dyadic::from_parts(1, 2)), slope_generator(),
        ThompsonElement::reflection()};
    int checked = 0;
    for (const ThompsonElement& g : gens) {
        ConsistencyReport rep = isometry_consistency_check(g, 50, seed + 4);
        ok = ok && rep.ok() && rep.checked == 50;
        checked += rep.checked;
    }
    detail << checked
           << " consecutive-edge pairs across the 4 generators: minimal-cycle shapes and "
              "lengths are invariant, zero violations";
    return result(10, "isometry consistency", ok, detail.str());
}

} // namespace

CriterionResult run_criterion(int number, std::uint64_t seed) {
    switch (number) {
    case 1: return criterion_counts();
    case 2: return criterion_dimension();
    case 3: return criterion_boundary();
    case 4: return criterion_rank2();
    case 5: return criterion_rank3();
    case 6: return criterion_group_laws(seed);
    case 7: return criterion_action(seed);
    case 8: return criterion_faithfulness(seed);
    case 9: return criterion_distances(seed);
    case 10: return criterion_isometry(seed);
    default: throw DomainError("criteria are numbered 1..10");
    }
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    out.reserve(10);
    for (int number = 1; number <= 10; ++number) out.push_back(run_criterion(number, seed));
    return out;
}

} // namespace infassoc
