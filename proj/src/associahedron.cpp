#include "infassoc/associahedron.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dsu.hpp"

namespace infassoc {

namespace {

// diagonals of the n-gon in lex order; (1,n) is a side, not a diagonal
std::vector<std::pair<int, int>> diagonal_list(int n) {
    std::vector<std::pair<int, int>> d;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (!(i == 1 && j == n)) d.emplace_back(i, j);
    return d;
}

void require_polygon(int n, int cap, const char* what) {
    if (n < 3) throw DomainError("polygon needs at least 3 vertices");
    if (n > cap)
        throw BudgetExceeded(std::string(what) + " capped at " + std::to_string(cap) +
                             "-gons, got n=" + std::to_string(n));
}

void collect_masks(int idx, int total, const std::vector<uint64_t>& cross, uint64_t chosen,
                   uint64_t blocked, std::vector<uint64_t>& out) {
    if (idx == total) {
        out.push_back(chosen);
        return;
    }
    collect_masks(idx + 1, total, cross, chosen, blocked, out);
    if (!(blocked >> idx & 1))
        collect_masks(idx + 1, total, cross, chosen | (uint64_t{1} << idx),
                      blocked | cross[idx], out);
}

// pairwise crossing masks over the diagonal list
std::vector<uint64_t> crossing_masks(const std::vector<std::pair<int, int>>& diags) {
    std::vector<uint64_t> cross(diags.size(), 0);
    for (size_t i = 0; i < diags.size(); ++i)
        for (size_t j = i + 1; j < diags.size(); ++j)
            if (polygon_diagonals_cross(diags[i], diags[j])) {
                cross[i] |= uint64_t{1} << j;
                cross[j] |= uint64_t{1} << i;
            }
    return cross;
}

std::vector<PolygonTessellation> masks_to_faces(int n,
                                                const std::vector<std::pair<int, int>>& diags,
                                                const std::vector<uint64_t>& masks) {
    std::vector<PolygonTessellation> faces;
    faces.reserve(masks.size());
    for (uint64_t m : masks) {
        PolygonTessellation t;
        t.n = n;
        for (size_t i = 0; i < diags.size(); ++i)
            if (m >> i & 1) t.diagonals.push_back(diags[i]);
        faces.push_back(std::move(t));
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

} // namespace

bool polygon_diagonals_cross(std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

PolygonTessellation PolygonTessellation::make(int n, std::vector<std::pair<int, int>> diagonals) {
    if (n < 3) throw DomainError("polygon needs at least 3 vertices");
    std::sort(diagonals.begin(), diagonals.end());
    diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
    for (auto [i, j] : diagonals) {
        if (i < 1 || j > n || i >= j)
            throw DomainError("diagonal endpoints must satisfy 1 <= i < j <= n");
        if (j - i < 2 || (i == 1 && j == n))
            throw DomainError("(" + std::to_string(i) + "," + std::to_string(j) +
                              ") is a side of the " + std::to_string(n) + "-gon, not a diagonal");
    }
    for (size_t a = 0; a < diagonals.size(); ++a)
        for (size_t b = a + 1; b < diagonals.size(); ++b)
            if (polygon_diagonals_cross(diagonals[a], diagonals[b]))
                throw DomainError("diagonals cross: (" + std::to_string(diagonals[a].first) +
                                  "," + std::to_string(diagonals[a].second) + ") and (" +
                                  std::to_string(diagonals[b].first) + "," +
                                  std::to_string(diagonals[b].second) + ")");
    PolygonTessellation t;
    t.n = n;
    t.diagonals = std::move(diagonals);
    return t;
}

std::string PolygonTessellation::str() const {
    std::string s = "{";
    for (size_t k = 0; k < diagonals.size(); ++k) {
        if (k) s += ",";
        s += "(" + std::to_string(diagonals[k].first) + "," +
             std::to_string(diagonals[k].second) + ")";
    }
    return s + "}";
}

int face_dim(const PolygonTessellation& t) { return t.n - 3 - int(t.diagonals.size()); }

std::vector<PolygonTessellation> enumerate_tessellations_serial(int n) {
    require_polygon(n, kPolygonCap, "face enumeration");
    auto diags = diagonal_list(n);
    auto cross = crossing_masks(diags);
    std::vector<uint64_t> masks;
    collect_masks(0, int(diags.size()), cross, 0, 0, masks);
    return masks_to_faces(n, diags, masks);
}

std::vector<PolygonTessellation> enumerate_tessellations(int n) {
    require_polygon(n, kPolygonCap, "face enumeration");
    auto diags = diagonal_list(n);
    auto cross = crossing_masks(diags);
    int total = int(diags.size());

    // split the search tree at a fixed prefix depth, one task per prefix state
    struct Prefix {
        uint64_t chosen, blocked;
    };
    int depth = std::min(total, 12);
    std::vector<Prefix> states{{0, 0}};
    for (int i = 0; i < depth; ++i) {
        std::vector<Prefix> next;
        next.reserve(states.size() * 2);
        for (auto s : states) {
            next.push_back(s);
            if (!(s.blocked >> i & 1))
                next.push_back({s.chosen | (uint64_t{1} << i), s.blocked | cross[i]});
        }
        states = std::move(next);
    }

    std::vector<std::vector<uint64_t>> buckets(states.size());
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < int(states.size()); ++s)
        collect_masks(depth, total, cross, states[s].chosen, states[s].blocked, buckets[s]);

    std::vector<uint64_t> masks;
    for (auto& b : buckets) masks.insert(masks.end(), b.begin(), b.end());
    return masks_to_faces(n, diags, masks);
}

namespace {

FaceLattice lattice_from_faces(int n, std::vector<PolygonTessellation> faces, bool parallel) {
    FaceLattice lat;
    lat.n = n;
    lat.faces = std::move(faces);

    std::vector<std::vector<std::pair<int, int>>> buckets(lat.faces.size());
    auto fill = [&](int a) {
        const auto& f = lat.faces[a];
        for (size_t d = 0; d < f.diagonals.size(); ++d) {
            PolygonTessellation up;
            up.n = n;
            up.diagonals = f.diagonals;
            up.diagonals.erase(up.diagonals.begin() + d);
            int b = lat.index_of(up);
            buckets[a].emplace_back(a, b);
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (int a = 0; a < int(lat.faces.size()); ++a) fill(a);
    } else {
        for (int a = 0; a < int(lat.faces.size()); ++a) fill(a);
    }
    for (auto& b : buckets) lat.covers.insert(lat.covers.end(), b.begin(), b.end());
    return lat;
}

} // namespace

FaceLattice face_lattice(int n) { return lattice_from_faces(n, enumerate_tessellations(n), true); }

FaceLattice face_lattice_serial(int n) {
    return lattice_from_faces(n, enumerate_tessellations_serial(n), false);
}

std::vector<long long> FaceLattice::f_vector() const {
    std::vector<long long> f(n - 2, 0);
    for (const auto& face : faces) ++f[face_dim(face)];
    return f;
}

int FaceLattice::index_of(const PolygonTessellation& t) const {
    auto it = std::lower_bound(faces.begin(), faces.end(), t);
    if (it == faces.end() || !(*it == t)) return -1;
    return int(it - faces.begin());
}

namespace {

void split_rec(std::vector<int> cycle, std::vector<std::pair<int, int>> chords,
               std::vector<std::vector<int>>& out) {
    if (chords.empty()) {
        out.push_back(std::move(cycle));
        return;
    }
    auto [a, b] = chords.back();
    chords.pop_back();
    // ascending vertex order is the cyclic order, so the chord splits the
    // region into the slice [a..b] and its complement (endpoints shared)
    std::vector<int> side1, side2;
    for (int v : cycle) {
        if (v >= a && v <= b) side1.push_back(v);
        if (v <= a || v >= b) side2.push_back(v);
    }
    std::vector<std::pair<int, int>> ch1, ch2;
    for (auto c : chords) {
        if (c.first >= a && c.second <= b)
            ch1.push_back(c);
        else
            ch2.push_back(c);
    }
    split_rec(std::move(side1), std::move(ch1), out);
    split_rec(std::move(side2), std::move(ch2), out);
}

} // namespace

std::vector<std::vector<int>> split_cycle_faces(int m,
                                                const std::vector<std::pair<int, int>>& chords) {
    if (m < 3) throw DomainError("cycle needs at least 3 vertices");
    for (auto [a, b] : chords) {
        if (a < 0 || b >= m || a >= b) throw DomainError("chord endpoints must satisfy 0 <= a < b < m");
        if (b - a < 2 || (a == 0 && b == m - 1))
            throw DomainError("chord joins cyclically adjacent vertices");
    }
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
            if (chords[i] == chords[j]) throw DomainError("duplicate chord");
            if (polygon_diagonals_cross(chords[i], chords[j])) throw DomainError("chords cross");
        }
    std::vector<int> cycle(m);
    std::iota(cycle.begin(), cycle.end(), 0);
    std::vector<std::vector<int>> out;
    split_rec(std::move(cycle), chords, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> cut_faces(const PolygonTessellation& t) {
    std::vector<std::pair<int, int>> chords;
    for (auto [i, j] : t.diagonals) chords.emplace_back(i - 1, j - 1);
    auto faces0 = split_cycle_faces(t.n, chords);
    for (auto& f : faces0)
        for (int& v : f) ++v;
    return faces0;
}

std::vector<int> cut_polygons(const PolygonTessellation& t) {
    std::vector<int> sizes;
    for (const auto& f : cut_faces(t)) sizes.push_back(int(f.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

PolygonTessellation flip(const PolygonTessellation& t, std::pair<int, int> diagonal) {
    if (face_dim(t) != 0) throw DomainError("flip needs a triangulation (a dimension-0 face)");
    if (!std::binary_search(t.diagonals.begin(), t.diagonals.end(), diagonal))
        throw DomainError("flip diagonal is not in the tessellation");
    auto [a, b] = diagonal;
    auto edge_present = [&](int x, int y) {
        if (x > y) std::swap(x, y);
        if (y - x == 1 || (x == 1 && y == t.n)) return true; // polygon side
        return std::binary_search(t.diagonals.begin(), t.diagonals.end(), std::make_pair(x, y));
    };
    // the two triangles on (a,b) have apexes k with both (a,k) and (k,b) present
    std::vector<int> apexes;
    for (int k = 1; k <= t.n; ++k)
        if (k != a && k != b && edge_present(a, k) && edge_present(k, b)) apexes.push_back(k);
    if (apexes.size() != 2) throw DomainError("tessellation has no quadrilateral on that diagonal");
    std::pair<int, int> other{apexes[0], apexes[1]};
    auto diags = t.diagonals;
    diags.erase(std::find(diags.begin(), diags.end(), diagonal));
    diags.push_back(other);
    return PolygonTessellation::make(t.n, std::move(diags));
}

namespace {

using DiagList = std::vector<std::pair<int, int>>;

// triangulations of the span i..j of the n-gon, diagonals in full-polygon labels
std::vector<DiagList> span_triangulations(int i, int j, std::vector<std::vector<std::vector<DiagList>>>& memo) {
    if (!memo[i][j].empty()) return memo[i][j]; // every span has >= 1 triangulation
    std::vector<DiagList> out;
    if (j - i == 1) {
        out.push_back({});
    } else {
        for (int k = i + 1; k < j; ++k) {
            auto left = span_triangulations(i, k, memo);
            auto right = span_triangulations(k, j, memo);
            for (const auto& L : left)
                for (const auto& R : right) {
                    DiagList d = L;
                    d.insert(d.end(), R.begin(), R.end());
                    if (k - i >= 2) d.emplace_back(i, k);
                    if (j - k >= 2) d.emplace_back(k, j);
                    out.push_back(std::move(d));
                }
        }
    }
    memo[i][j] = out;
    return out;
}

} // namespace

std::vector<PolygonTessellation> all_triangulations(int n) {
    require_polygon(n, 14, "triangulation listing");
    std::vector memo(n + 1, std::vector(n + 1, std::vector<DiagList>{}));
    auto lists = span_triangulations(1, n, memo);
    std::vector<PolygonTessellation> out;
    out.reserve(lists.size());
    for (auto& d : lists) out.push_back(PolygonTessellation::make(n, std::move(d)));
    std::sort(out.begin(), out.end());
    return out;
}

int DualTree::leaf_count() const {
    int c = 0;
    for (const auto& node : nodes)
        if (node.left < 0) ++c;
    return c;
}

namespace {

std::string tree_str_rec(const DualTree& t, int idx) {
    const auto& node = t.nodes[idx];
    if (node.left < 0) return std::to_string(node.side);
    return "(" + tree_str_rec(t, node.left) + " " + tree_str_rec(t, node.right) + ")";
}

} // namespace

std::string DualTree::str() const {
    if (root < 0) return "()";
    return tree_str_rec(*this, root);
}

namespace {

struct TreeBuild {
    int n = 0, root_side = 0;
    const std::set<std::pair<int, int>>* diags = nullptr; // relabeled, root side = (n,1)
    DualTree* out = nullptr;

    int unmap(int v) const { return (v + root_side - 1) % n + 1; }

    bool edge(int x, int y) const { // span labels, x < y
        return y - x == 1 || diags->count({x, y}) > 0;
    }

    int build(int i, int j) {
        DualTree::Node node;
        if (j - i == 1) {
            node.side = unmap(i);
        } else {
            int apex = 0;
            for (int k = i + 1; k < j; ++k)
                if (edge(i, k) && edge(k, j)) {
                    apex = k;
                    break;
                }
            if (apex == 0) throw DomainError("no triangle closes the span; not a triangulation");
            node.left = build(i, apex);
            node.right = build(apex, j);
        }
        out->nodes.push_back(node);
        return int(out->nodes.size()) - 1;
    }
};

} // namespace

DualTree dual_tree(const PolygonTessellation& t, int root_side) {
    if (face_dim(t) != 0) throw DomainError("dual tree needs a triangulation (a dimension-0 face)");
    if (root_side < 1 || root_side > t.n) throw DomainError("root side out of range");
    // relabel so the root side (r, r+1) becomes (n, 1) and the spanned path is 1..n
    std::set<std::pair<int, int>> diags;
    int shift = (root_side + 1) % t.n;
    for (auto [i, j] : t.diagonals) {
        int a = (i - shift + t.n) % t.n + 1;
        int b = (j - shift + t.n) % t.n + 1;
        diags.insert({std::min(a, b), std::max(a, b)});
    }
    DualTree tree;
    TreeBuild builder{t.n, root_side, &diags, &tree};
    tree.root = builder.build(1, t.n);
    return tree;
}

namespace {

struct TreeRead {
    int n = 0, root_side = 0;
    const DualTree* tree = nullptr;
    std::vector<std::pair<int, int>>* chords = nullptr; // span labels
    int visited = 0;

    int unmap(int v) const { return (v + root_side - 1) % n + 1; }

    // walks the span starting at vertex i, returns the end vertex
    int walk(int idx, int i) {
        if (idx < 0 || idx >= int(tree->nodes.size())) throw DomainError("dual tree child index out of range");
        ++visited;
        const auto& node = tree->nodes[idx];
        if (node.left < 0 || node.right < 0) {
            if (node.left >= 0 || node.right >= 0)
                throw DomainError("dual tree node must have zero or two children");
            if (node.side != unmap(i))
                throw DomainError("leaf sides do not match the planar order for that root side");
            return i + 1;
        }
        int k = walk(node.left, i);
        int j = walk(node.right, k);
        if (j > n) throw DomainError("dual tree has too many leaves for the polygon");
        if (k - i >= 2) chords->emplace_back(i, k);
        if (j - k >= 2) chords->emplace_back(k, j);
        return j;
    }
};

} // namespace

PolygonTessellation tree_to_tessellation(const DualTree& tree, int n, int root_side) {
    if (n < 3) throw DomainError("polygon needs at least 3 vertices");
    if (root_side < 1 || root_side > n) throw DomainError("root side out of range");
    if (tree.root < 0 || tree.root >= int(tree.nodes.size())) throw DomainError("dual tree has no root");
    std::vector<std::pair<int, int>> chords;
    TreeRead reader{n, root_side, &tree, &chords};
    int end = reader.walk(tree.root, 1);
    if (end != n || reader.visited != int(tree.nodes.size()))
        throw DomainError("dual tree shape does not match an " + std::to_string(n) + "-gon");
    std::vector<std::pair<int, int>> diags;
    for (auto [x, y] : chords) {
        int a = reader.unmap(x), b = reader.unmap(y);
        diags.emplace_back(std::min(a, b), std::max(a, b));
    }
    return PolygonTessellation::make(n, std::move(diags));
}

SphereCheckReport check_sphere_boundary(int n) {
    if (n < 4) throw DomainError("boundary sphere checks need n >= 4");
    require_polygon(n, kPolygonCap, "boundary sphere check");
    auto lat = face_lattice(n);
    PolygonTessellation top;
    top.n = n;
    int top_idx = lat.index_of(top);

    SphereCheckReport rep;
    rep.n = n;
    rep.expected_components = n == 4 ? 2 : 1;
    rep.expected_euler = 1 + (n % 2 == 0 ? 1 : -1); // Euler characteristic of S^{n-4}

    detail::Dsu dsu(int(lat.faces.size()));
    std::vector<int> cofaces(lat.faces.size(), 0);
    for (auto [a, b] : lat.covers)
        if (b != top_idx) {
            dsu.unite(a, b);
            ++cofaces[a];
        }

    std::set<int> roots;
    for (int i = 0; i < int(lat.faces.size()); ++i)
        if (i != top_idx) roots.insert(dsu.find(i));
    rep.components = int(roots.size());

    rep.incidence_ok = true;
    long long euler = 0;
    for (int i = 0; i < int(lat.faces.size()); ++i) {
        if (i == top_idx) continue;
        int dim = face_dim(lat.faces[i]);
        euler += dim % 2 == 0 ? 1 : -1;
        if (dim <= n - 5 && cofaces[i] < 2) rep.incidence_ok = false;
    }
    rep.euler = euler;
    return rep;
}

} // namespace infassoc
