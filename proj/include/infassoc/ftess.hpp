#pragma once
// Tessellations of the disk differing from the base triangulation in finitely
// many arcs: validity, rank, cell structure, the refinement order, support
// polygons, flips, and the triangulations refining a cell.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "infassoc/dyadic.hpp"
#include "infassoc/errors.hpp"

namespace infassoc {

// A finite difference against the base triangulation: its arcs are
// (base \ removed) u added. The pair is the cell label in the complex;
// removed must lie in the base family and added outside it.
struct FTessellation {
    std::set<Arc> removed;
    std::set<Arc> added;

    static FTessellation base() { return {}; }

    std::string str() const;

    auto operator<=>(const FTessellation&) const = default;
};

enum class ViolationKind {
    RemovedNotInBase,  // removed arc outside the base family
    AddedInBase,       // added arc already a base arc
    AddedCrossesBase,  // added arc crosses a surviving base arc
    AddedCrossesAdded, // two added arcs cross
};

struct Violation {
    ViolationKind kind;
    Arc arc;                  // the offending arc
    std::optional<Arc> other; // the arc it collides with, when applicable

    std::string str() const;
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationResult validate(const FTessellation& t);

// Validating constructor: throws DomainError naming the first violation.
FTessellation make_tessellation(std::set<Arc> removed, std::set<Arc> added);

// Dimension of the cell the tessellation labels: |removed| - |added|.
int rank(const FTessellation& t);

// Whether the arc is present in the tessellation.
bool contains_arc(const FTessellation& t, const Arc& a);

// The non-triangular faces. Each face is the sorted vertex list of an
// inscribed polygon (ascending = counterclockwise); faces sorted.
struct CellStructure {
    std::vector<std::vector<Dyadic>> components;
    int dim = 0; // equals the sum of (size - 3) over components, and the rank
};

CellStructure cell_of(const FTessellation& t);

// Finest common coarsening: arc sets intersect, so removed sets unite and
// added sets intersect.
FTessellation intersect(const FTessellation& a, const FTessellation& b);

// a <= b in the refinement order: every arc of b is an arc of a, i.e. the
// cell of a lies in the closure of the cell of b.
bool leq(const FTessellation& a, const FTessellation& b);

// Smallest standard partition whose polygon contains the difference region:
// every removed or added arc is a strict diagonal of the inscribed polygon,
// which has at least 3 corners; outside it the tessellation is the base one.
StandardPartition support_polygon(const FTessellation& t);

// All rank-0 refinements of the cell, i.e. the triangulations obtained by
// triangulating each non-triangular face, sorted.
std::vector<FTessellation> containing_triangulations(const FTessellation& t);

// Diagonal flip across the quadrilateral the arc spans; t must have rank 0.
FTessellation flip_arc(const FTessellation& t, const Arc& a);

} // namespace infassoc
