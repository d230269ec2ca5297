#pragma once
// Finite Stasheff associahedra A(P_n): faces as minimal tessellations of the
// convex n-gon, the graded face lattice, flips, polygon cuts, dual trees, and
// the boundary-sphere shadow checks.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "infassoc/errors.hpp"

namespace infassoc {

// Enumeration state is kept in 64-bit diagonal masks; n(n-3)/2 <= 64 holds
// up to 12-gons, which is plenty for desk-scale work.
inline constexpr int kPolygonCap = 12;

// A face of A(P_n): a non-crossing set of diagonals of the convex n-gon,
// vertices labeled 1..n counterclockwise. Empty set = top cell,
// triangulations = vertices of the polytope.
struct PolygonTessellation {
    int n = 3;
    std::vector<std::pair<int, int>> diagonals; // sorted, each (i,j) with i < j

    // validates labels, non-adjacency and pairwise non-crossing
    static PolygonTessellation make(int n, std::vector<std::pair<int, int>> diagonals);

    std::string str() const;

    auto operator<=>(const PolygonTessellation&) const = default;
};

// strict crossing of polygon diagonals; shared endpoints do not cross
bool polygon_diagonals_cross(std::pair<int, int> a, std::pair<int, int> b);

// dim f = n - 3 - #diagonals
int face_dim(const PolygonTessellation& t);

// All faces of A(P_n) in a canonical order. The default entry point may use
// OpenMP; the serial variant is the reference it is tested against.
std::vector<PolygonTessellation> enumerate_tessellations(int n);
std::vector<PolygonTessellation> enumerate_tessellations_serial(int n);

struct FaceLattice {
    int n = 3;
    std::vector<PolygonTessellation> faces;
    // (a, b) with faces[b] == faces[a] minus one diagonal: the face of index
    // a sits in the closure of the face of index b, one dimension up
    std::vector<std::pair<int, int>> covers;

    std::vector<long long> f_vector() const; // counts by dimension 0..n-3
    int index_of(const PolygonTessellation& t) const; // -1 when absent
};

FaceLattice face_lattice(int n);
FaceLattice face_lattice_serial(int n);

// Faces of an m-cycle (vertices 0..m-1 in cyclic order) after cutting along
// non-crossing chords; each face is its sorted vertex list, faces sorted.
std::vector<std::vector<int>> split_cycle_faces(int m,
                                                const std::vector<std::pair<int, int>>& chords);

// the sub-polygons the diagonals cut the n-gon into, as vertex cycles
std::vector<std::vector<int>> cut_faces(const PolygonTessellation& t);
// their side counts, ascending
std::vector<int> cut_polygons(const PolygonTessellation& t);

// diagonal flip on a triangulation
PolygonTessellation flip(const PolygonTessellation& t, std::pair<int, int> diagonal);

// dim-0 faces only, by direct span recursion (independent of the enumerator)
std::vector<PolygonTessellation> all_triangulations(int n);

// Rooted planar binary tree dual to a triangulation. Leaves are the polygon
// sides other than the root side, in planar order; side i is (i, i+1), with
// side n = (n, 1).
struct DualTree {
    struct Node {
        int left = -1, right = -1; // children, internal nodes only
        int side = 0;              // original side index, leaves only
    };
    std::vector<Node> nodes;
    int root = -1;

    int leaf_count() const;
    std::string str() const; // "((1 2) 3)" style
};

DualTree dual_tree(const PolygonTessellation& t, int root_side);
PolygonTessellation tree_to_tessellation(const DualTree& tree, int n, int root_side);

// Shadow checks that the boundary complex of A(P_n) looks like S^{n-4}:
// component count, interior incidence, Euler characteristic.
struct SphereCheckReport {
    int n = 0;
    int components = 0, expected_components = 0;
    bool incidence_ok = false; // every boundary face of dim <= n-5 in >= 2 cofaces
    long long euler = 0, expected_euler = 0;
    bool pass() const {
        return components == expected_components && incidence_ok && euler == expected_euler;
    }
};

SphereCheckReport check_sphere_boundary(int n);

} // namespace infassoc
