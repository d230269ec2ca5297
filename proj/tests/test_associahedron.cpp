#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "infassoc/associahedron.hpp"

using namespace infassoc;

namespace {

PolygonTessellation pt(int n, std::vector<std::pair<int, int>> d) {
    return PolygonTessellation::make(n, std::move(d));
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// little Schroeder numbers s(1), s(2), ... ; s(n-1) counts the faces of A(P_n)
std::vector<long long> schroeder_upto(int k) {
    std::vector<long long> s(k + 1, 0);
    s[1] = s[2] = 1;
    for (int i = 3; i <= k; ++i) s[i] = ((6 * i - 9) * s[i - 1] - (i - 3) * s[i - 2]) / i;
    return s;
}

const long long kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};

// independent crossing test: exactly one endpoint of b lies strictly
// between the endpoints of a
bool oracle_cross(std::pair<int, int> a, std::pair<int, int> b) {
    if (a.first == b.first || a.first == b.second || a.second == b.first ||
        a.second == b.second)
        return false;
    auto inside = [&](int x) { return a.first < x && x < a.second; };
    return inside(b.first) != inside(b.second);
}

// brute-force face list: every pairwise non-crossing subset of diagonals
std::vector<std::vector<std::pair<int, int>>> oracle_faces(int n) {
    std::vector<std::pair<int, int>> diags;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (!(i == 1 && j == n)) diags.emplace_back(i, j);
    std::vector<std::vector<std::pair<int, int>>> out;
    for (uint32_t m = 0; m < (uint32_t{1} << diags.size()); ++m) {
        std::vector<std::pair<int, int>> sub;
        for (size_t i = 0; i < diags.size(); ++i)
            if (m >> i & 1) sub.push_back(diags[i]);
        bool ok = true;
        for (size_t a = 0; a < sub.size() && ok; ++a)
            for (size_t b = a + 1; b < sub.size() && ok; ++b)
                if (oracle_cross(sub[a], sub[b])) ok = false;
        if (ok) out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("tessellation validation") {
    CHECK(pt(5, {{1, 4}, {1, 3}}).diagonals == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}});
    CHECK(pt(5, {}).n == 5);
    CHECK(pt(5, {{1, 3}, {1, 3}}).diagonals.size() == 1); // deduped
    CHECK_THROWS_AS(pt(2, {}), DomainError);
    CHECK_THROWS_AS(pt(5, {{1, 2}}), DomainError);  // side
    CHECK_THROWS_AS(pt(5, {{1, 5}}), DomainError);  // wrap side
    CHECK_THROWS_AS(pt(5, {{3, 1}}), DomainError);  // unordered
    CHECK_THROWS_AS(pt(5, {{0, 2}}), DomainError);  // out of range
    CHECK_THROWS_AS(pt(5, {{4, 7}}), DomainError);  // out of range
    CHECK_THROWS_AS(pt(5, {{1, 3}, {2, 4}}), DomainError); // crossing
    CHECK(pt(6, {{1, 3}, {3, 5}, {1, 5}}).diagonals.size() == 3);
    CHECK(pt(5, {{1, 3}, {1, 4}}).str() == "{(1,3),(1,4)}");
    CHECK(pt(5, {}).str() == "{}");
}

TEST_CASE("diagonal crossing matches the separation formulation") {
    CHECK(polygon_diagonals_cross({1, 3}, {2, 4}));
    CHECK_FALSE(polygon_diagonals_cross({1, 3}, {1, 4}));
    CHECK_FALSE(polygon_diagonals_cross({1, 3}, {3, 5}));
    for (int n = 4; n <= 8; ++n) {
        std::vector<std::pair<int, int>> diags;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 2; j <= n; ++j)
                if (!(i == 1 && j == n)) diags.emplace_back(i, j);
        for (auto a : diags)
            for (auto b : diags) CHECK(polygon_diagonals_cross(a, b) == oracle_cross(a, b));
    }
}

TEST_CASE("face dimension") {
    CHECK(face_dim(pt(5, {})) == 2);
    CHECK(face_dim(pt(5, {{1, 3}})) == 1);
    CHECK(face_dim(pt(5, {{1, 3}, {1, 4}})) == 0);
    CHECK(face_dim(pt(3, {})) == 0);
}

TEST_CASE("enumeration matches the brute-force subset oracle") {
    for (int n = 4; n <= 8; ++n) {
        auto expect = oracle_faces(n);
        auto got = enumerate_tessellations(n);
        REQUIRE(got.size() == expect.size());
        for (size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].n == n);
            CHECK(got[i].diagonals == expect[i]);
        }
    }
}

TEST_CASE("serial and parallel enumeration agree") {
    for (int n = 3; n <= 9; ++n) CHECK(enumerate_tessellations(n) == enumerate_tessellations_serial(n));
}

TEST_CASE("face counts follow the little Schroeder numbers") {
    auto s = schroeder_upto(11);
    CHECK(enumerate_tessellations(3).size() == 1);
    for (int n = 4; n <= 9; ++n) CHECK(enumerate_tessellations_serial(n).size() == size_t(s[n - 1]));
    for (int n = 10; n <= 12; ++n) CHECK(enumerate_tessellations(n).size() == size_t(s[n - 1]));
    CHECK(s[8] == 4279);
    CHECK_THROWS_AS(enumerate_tessellations(13), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_tessellations(2), DomainError);
}

TEST_CASE("frozen f-vectors and the Kirkman-Cayley counts") {
    CHECK(face_lattice(5).f_vector() == std::vector<long long>{5, 5, 1});
    CHECK(face_lattice(6).f_vector() == std::vector<long long>{14, 21, 9, 1});
    for (int n = 4; n <= 9; ++n) {
        auto f = face_lattice_serial(n).f_vector();
        REQUIRE(f.size() == size_t(n - 2));
        for (int k = 0; k <= n - 3; ++k) {
            long long expect = binom(n - 3, k) * binom(n + k - 1, k) / (k + 1);
            CHECK(f[n - 3 - k] == expect);
        }
    }
}

TEST_CASE("lattice covers remove exactly one diagonal") {
    for (int n : {5, 6, 7}) {
        auto lat = face_lattice(n);
        CHECK(lat.faces == enumerate_tessellations(n));
        std::vector<int> out_count(lat.faces.size(), 0);
        for (auto [a, b] : lat.covers) {
            const auto& fa = lat.faces[a].diagonals;
            const auto& fb = lat.faces[b].diagonals;
            CHECK(fa.size() == fb.size() + 1);
            CHECK(std::includes(fa.begin(), fa.end(), fb.begin(), fb.end()));
            ++out_count[a];
        }
        for (size_t i = 0; i < lat.faces.size(); ++i)
            CHECK(out_count[i] == int(lat.faces[i].diagonals.size()));
        auto serial = face_lattice_serial(n);
        CHECK(lat.faces == serial.faces);
        CHECK(lat.covers == serial.covers);
    }
    CHECK(face_lattice(5).covers.size() == 15);
    CHECK(face_lattice(6).covers.size() == 93);
}

TEST_CASE("lattice index lookup") {
    auto lat = face_lattice(5);
    for (size_t i = 0; i < lat.faces.size(); ++i) CHECK(lat.index_of(lat.faces[i]) == int(i));
    CHECK(lat.index_of(pt(6, {})) == -1);
}

TEST_CASE("polygon cuts") {
    CHECK(cut_polygons(pt(5, {})) == std::vector<int>{5});
    CHECK(cut_polygons(pt(5, {{1, 3}})) == std::vector<int>{3, 4});
    CHECK(cut_polygons(pt(6, {{1, 3}, {1, 5}})) == std::vector<int>{3, 3, 4});
    CHECK(cut_faces(pt(6, {{1, 3}, {1, 5}})) ==
          std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 4, 5}, {1, 5, 6}});
    CHECK(cut_faces(pt(4, {})) == std::vector<std::vector<int>>{{1, 2, 3, 4}});

    // a face of dim d cuts the polygon into d+1 fewer pieces than a triangulation
    for (const auto& f : enumerate_tessellations(7)) {
        auto pieces = cut_polygons(f);
        CHECK(int(pieces.size()) == int(f.diagonals.size()) + 1);
        int side_sum = 0;
        for (int s : pieces) side_sum += s;
        CHECK(side_sum == 7 + 2 * int(f.diagonals.size()));
    }
}

TEST_CASE("cycle splitting on raw indices") {
    CHECK(split_cycle_faces(6, {{0, 2}, {2, 5}}) ==
          std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 5}, {2, 3, 4, 5}});
    CHECK(split_cycle_faces(4, {}) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK_THROWS_AS(split_cycle_faces(6, {{0, 1}}), DomainError);
    CHECK_THROWS_AS(split_cycle_faces(6, {{0, 5}}), DomainError);
    CHECK_THROWS_AS(split_cycle_faces(6, {{0, 2}, {0, 2}}), DomainError);
    CHECK_THROWS_AS(split_cycle_faces(6, {{0, 2}, {1, 3}}), DomainError);
    CHECK_THROWS_AS(split_cycle_faces(2, {}), DomainError);
}

TEST_CASE("diagonal flips") {
    CHECK(flip(pt(5, {{1, 3}, {1, 4}}), {1, 4}) == pt(5, {{1, 3}, {3, 5}}));
    CHECK(flip(pt(5, {{1, 3}, {1, 4}}), {1, 3}) == pt(5, {{1, 4}, {2, 4}}));
    CHECK(flip(pt(4, {{1, 3}}), {1, 3}) == pt(4, {{2, 4}}));
    CHECK_THROWS_AS(flip(pt(5, {{1, 3}}), {1, 3}), DomainError);       // not a triangulation
    CHECK_THROWS_AS(flip(pt(5, {{1, 3}, {1, 4}}), {2, 4}), DomainError); // not present

    // flipping the fresh diagonal undoes the move; exhaustive on the 7-gon
    for (const auto& t : all_triangulations(7))
        for (auto d : t.diagonals) {
            auto t2 = flip(t, d);
            std::vector<std::pair<int, int>> fresh;
            std::set_difference(t2.diagonals.begin(), t2.diagonals.end(), t.diagonals.begin(),
                                t.diagonals.end(), std::back_inserter(fresh));
            REQUIRE(fresh.size() == 1);
            CHECK(flip(t2, fresh[0]) == t);
        }
}

TEST_CASE("triangulation listing matches Catalan and the enumerator") {
    for (int n = 3; n <= 12; ++n) CHECK(all_triangulations(n).size() == size_t(kCatalan[n - 2]));
    for (int n = 3; n <= 9; ++n) {
        std::vector<PolygonTessellation> dim0;
        for (const auto& f : enumerate_tessellations(n))
            if (face_dim(f) == 0) dim0.push_back(f);
        CHECK(all_triangulations(n) == dim0);
    }
    CHECK_THROWS_AS(all_triangulations(15), BudgetExceeded);
    CHECK_THROWS_AS(all_triangulations(2), DomainError);
}

TEST_CASE("flip graph of the hexagon is 3-regular and connected") {
    auto verts = all_triangulations(6);
    REQUIRE(verts.size() == 14);
    std::map<PolygonTessellation, int> index;
    for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = int(i);
    std::vector<std::vector<int>> adj(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        for (auto d : verts[i].diagonals) adj[i].push_back(index.at(flip(verts[i], d)));
        CHECK(adj[i].size() == 3);
    }
    std::vector<char> seen(verts.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == 14);
}

TEST_CASE("dual trees of small triangulations") {
    auto square = pt(4, {{1, 3}});
    CHECK(dual_tree(square, 4).str() == "((1 2) 3)");
    CHECK(dual_tree(square, 1).str() == "(2 (3 4))");
    CHECK(dual_tree(square, 4).leaf_count() == 3);
    CHECK(dual_tree(pt(5, {{1, 3}, {1, 4}}), 5).str() == "(((1 2) 3) 4)");
    CHECK_THROWS_AS(dual_tree(pt(5, {{1, 3}}), 1), DomainError); // not a triangulation
    CHECK_THROWS_AS(dual_tree(square, 0), DomainError);
    CHECK_THROWS_AS(dual_tree(square, 5), DomainError);
}

TEST_CASE("dual tree round trip over all roots") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& t : all_triangulations(n))
            for (int r = 1; r <= n; ++r) {
                auto tree = dual_tree(t, r);
                CHECK(tree.leaf_count() == n - 1);
                CHECK(tree_to_tessellation(tree, n, r) == t);
            }
}

TEST_CASE("dual tree reading rejects inconsistent input") {
    auto tree = dual_tree(pt(4, {{1, 3}}), 4);
    CHECK_THROWS_AS(tree_to_tessellation(tree, 4, 1), DomainError); // sides off by rotation
    CHECK_THROWS_AS(tree_to_tessellation(tree, 5, 5), DomainError); // too few leaves
    DualTree broken;
    broken.nodes.push_back({-1, 0, 1}); // one child only
    broken.root = 0;
    CHECK_THROWS_AS(tree_to_tessellation(broken, 3, 3), DomainError);
    DualTree empty;
    CHECK_THROWS_AS(tree_to_tessellation(empty, 4, 1), DomainError);
}

TEST_CASE("boundary complex looks like a sphere") {
    for (int n = 4; n <= 8; ++n) {
        auto rep = check_sphere_boundary(n);
        CHECK(rep.n == n);
        CHECK(rep.components == (n == 4 ? 2 : 1));
        CHECK(rep.expected_components == rep.components);
        CHECK(rep.euler == (n % 2 == 0 ? 2 : 0));
        CHECK(rep.incidence_ok);
        CHECK(rep.pass());
    }
    CHECK_THROWS_AS(check_sphere_boundary(3), DomainError);
}
