#pragma once
// Piecewise-affine bijections of the dyadic circle with power-of-2 slopes and
// dyadic breakpoints, orientation-reversing ones included: normal forms,
// group operations, and the action on tessellations.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infassoc/dyadic.hpp"
#include "infassoc/errors.hpp"
#include "infassoc/ftess.hpp"

namespace infassoc {

enum class OrientationSign : int { preserving = 0, reversing = 1 };

// One piece of a piecewise-affine map: [src_lo, src_hi] -> [dst_lo, dst_hi],
// traversed backwards when the element reverses orientation. A high endpoint
// equal to 0 means the wrap point 1.
struct IntervalMap {
    Dyadic src_lo, src_hi, dst_lo, dst_hi;
};

// Stored as the domain breakpoints 0 = x_0 < ... < x_{k-1}, their images
// y_i = t(x_i), and the orientation; the map is affine on each gap. Always
// kept in reduced form (minimal breakpoint set), so structural equality is
// group equality.
class ThompsonElement {
public:
    ThompsonElement(); // the identity

    static ThompsonElement identity();
    static ThompsonElement rotation(const Dyadic& by);
    static ThompsonElement reflection(); // x -> -x

    // Raw form; validates both partitions, the anchor y_i = 0, and cyclic
    // monotonicity in the direction of the orientation, then reduces.
    static ThompsonElement from_images(std::vector<Dyadic> breakpoints,
                                       std::vector<Dyadic> images, int orientation);

    // Piece list form; pieces may come in any order and must tile the circle
    // consistently on both sides.
    static ThompsonElement make_element(std::vector<IntervalMap> pieces, int orientation);

    const StandardPartition& domain_partition() const { return domain_; }
    const std::vector<Dyadic>& image_points() const { return images_; }
    int orientation() const { return orientation_; }
    std::size_t wrap_index() const { return wrap_; } // the i with t(x_i) = 0

    std::string str() const;

    bool operator==(const ThompsonElement& o) const {
        return orientation_ == o.orientation_ && domain_ == o.domain_ && images_ == o.images_;
    }

private:
    ThompsonElement(StandardPartition domain, std::vector<Dyadic> images, int orientation);
    void reduce_();

    StandardPartition domain_;
    std::vector<Dyadic> images_;
    int orientation_ = 1;
    std::size_t wrap_ = 0;
};

Dyadic evaluate(const ThompsonElement& t, const Dyadic& x);

// s after t: x -> s(t(x))
ThompsonElement compose(const ThompsonElement& s, const ThompsonElement& t);

ThompsonElement inverse(const ThompsonElement& t);

// Re-normalization; idempotent, and a no-op on anything this class hands out.
ThompsonElement reduce_minimal(const ThompsonElement& t);

OrientationSign sign(const ThompsonElement& t);

// Representation invariants re-checked from scratch; empty when healthy.
std::vector<std::string> element_defects(const ThompsonElement& t);

// The image tessellation, as a difference against the base: arcs inside the
// common refinement of b's support and t's partition map pointwise, the base
// fans outside map onto base fans.
FTessellation act_tessellation(const ThompsonElement& t, const FTessellation& b);

// A tessellation moved by t, or nothing iff t is the identity. Searches the
// base tessellation, then its single flips by increasing arc level; throws
// BudgetExceeded if the search runs out (distinct from "is the identity").
std::optional<FTessellation> faithfulness_witness(const ThompsonElement& t);

} // namespace infassoc
