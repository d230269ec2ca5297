#pragma once
// Local navigation of the flip complex: window-restricted neighbors and BFS
// distances, minimal cycles through consecutive edges, link classification of
// rank-2 and rank-3 cells, the induced cell action, and translation-length
// bounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "infassoc/associahedron.hpp"
#include "infassoc/dyadic.hpp"
#include "infassoc/errors.hpp"
#include "infassoc/ftess.hpp"
#include "infassoc/thompson.hpp"

namespace infassoc {

using Rational = boost::multiprecision::cpp_rational;

// Every triangulation has infinitely many flip neighbors, so searches are
// confined to a window polygon: only tessellations supported inside it and
// flips of arcs strictly inside it are explored. Distances are therefore
// window-certified upper bounds.
struct WindowPolicy {
    StandardPartition base;         // exploration window; must contain query supports
    int max_expansions = 0;         // extra halving layers to try for shorter paths
    long long node_budget = 200000; // search states allowed before BudgetExceeded
};

enum class LinkShape { square_cycle, pentagon_cycle, cube, prism, associahedron };

std::string shape_name(LinkShape s);

// A rank-2 or rank-3 cell together with the shape and size of its boundary;
// the shape is read off the multiset of merged-face sizes.
struct CellLink {
    FTessellation center;
    int vertex_count = 0;
    LinkShape shape = LinkShape::square_cycle;
};

// The window halved `layers` times: each interval split at its midpoint.
StandardPartition expand_window(const StandardPartition& w, int layers);

// Coarsen by one present arc (rank goes up by one).
FTessellation drop_arc(const FTessellation& t, const Arc& a);

// Tessellations supported in a window correspond to faces of the window
// polygon: the present arcs with both endpoints on breakpoints, written as
// 1-based index pairs. Requires the support to sit inside the window.
std::vector<std::pair<int, int>> window_diagonals(const FTessellation& a,
                                                  const StandardPartition& w);
FTessellation tessellation_in_window(const StandardPartition& w,
                                     const std::vector<std::pair<int, int>>& diagonals);

// All flips of arcs of the triangulation lying strictly inside the window,
// each at distance exactly 1.
std::vector<std::pair<Arc, FTessellation>> neighbors(const FTessellation& a,
                                                     const WindowPolicy& w);

// Length of a shortest flip path between two triangulations staying inside
// the window (an upper bound on the true distance, non-increasing as the
// window grows). The default entry point may use OpenMP; the serial variant
// is the reference it is tested against.
int bfs_distance(const FTessellation& a, const FTessellation& b, const WindowPolicy& w);
int bfs_distance_serial(const FTessellation& a, const FTessellation& b, const WindowPolicy& w);

// The unique minimal closed path through two edges sharing an endpoint: the
// boundary of their meet, a 4- or 5-cycle.
CellLink minimal_cycle(const FTessellation& e1, const FTessellation& e2);

// Shape and boundary size of a rank-2 or rank-3 cell.
CellLink classify_link(const FTessellation& b);

// The boundary of a rank-2 cell as its 4 or 5 triangulations in cyclic flip
// order.
std::vector<FTessellation> boundary_cycle(const FTessellation& b);

// The action on cells is the tessellation action; dimension and boundary
// inclusions are preserved.
FTessellation induced_cell_action(const ThompsonElement& t, const FTessellation& b);

// Minimum of bfs_distance(A, t . A) over all vertices A within the given
// flip radius of the base triangulation inside the window: a certified upper
// bound on the vertex-restricted translation length of t.
Rational translation_length_upper(const ThompsonElement& t, int radius, const WindowPolicy& w);

struct ConsistencyReport {
    int checked = 0;
    int violations = 0;
    bool ok() const { return violations == 0; }
};

// Samples pairs of consecutive edges and verifies that the minimal-cycle
// shape and length through them are invariant under the action of t.
ConsistencyReport isometry_consistency_check(const ThompsonElement& t, int samples,
                                             std::uint64_t seed = 2026);

} // namespace infassoc
