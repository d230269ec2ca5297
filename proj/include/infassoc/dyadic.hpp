#pragma once
// Exact dyadic points on the unit circle (perimeter 1), dyadic arcs (chords),
// membership in the base triangulation, and standard dyadic partitions.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "infassoc/errors.hpp"

namespace infassoc {

using BigInt = boost::multiprecision::cpp_int;

// m / 2^n taken mod 1. Canonical form: numerator odd and 0 < m < 2^n when
// n > 0; the value 0 is stored as (0, 0). Exponents are plain ints, the
// numerators are arbitrary precision so compositions can't overflow.
class Dyadic {
public:
    Dyadic() = default;

    // Reduces an arbitrary (numerator, exponent) pair mod 1. Negative
    // exponents denote integers and wrap to 0; negative numerators wrap the
    // other way around the circle.
    static Dyadic from_parts(BigInt numerator, int exponent);

    // "m/2^n" with a power-of-two denominator, or "0" / "1" (1 wraps to 0).
    static Dyadic parse(const std::string& text);

    const BigInt& numerator() const { return num_; }
    int exponent() const { return exp_; }
    bool is_zero() const { return exp_ == 0; }

    // Numerator rescaled to denominator 2^level; requires level >= exponent.
    BigInt scaled(int level) const;

    Dyadic plus_mod1(const Dyadic& o) const;
    Dyadic minus_mod1(const Dyadic& o) const;
    // Multiplies by 2^k (k may be negative), reduced mod 1.
    Dyadic times_pow2(int k) const;

    std::string str() const;

    std::strong_ordering operator<=>(const Dyadic& o) const;
    bool operator==(const Dyadic& o) const = default;

private:
    BigInt num_ = 0;
    int exp_ = 0;
};

// True when x lies strictly inside the counterclockwise arc from a to b.
// a == b is a degenerate interval and an error.
bool cyclically_between(const Dyadic& x, const Dyadic& a, const Dyadic& b);

// Chord between two distinct dyadic circle points; endpoints are kept in
// canonical ascending order.
class Arc {
public:
    Arc(const Dyadic& a, const Dyadic& b);

    static Arc parse(const std::string& text); // "[a,b]"

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }

    std::string str() const;

    auto operator<=>(const Arc& o) const = default;

private:
    Dyadic lo_, hi_;
};

// Strict crossing test. Arcs sharing an endpoint never cross.
bool arcs_cross(const Arc& u, const Arc& v);

// If the arc belongs to the base triangulation, the standard dyadic interval
// it spans, as (left endpoint, level). The diameter (0,1/2) is reported as
// [0, 1/2], i.e. (0, 1). Level-n family arcs (n >= 2) give ((m, n)) with the
// wrap arc ((2^n-1)/2^n, 0) spanning [(2^n-1)/2^n, 1].
std::optional<std::pair<Dyadic, int>> base_arc_interval(const Arc& a);

bool in_base_triangulation(const Arc& a);

// The finitely many base-triangulation arcs crossing the given arc, sorted.
// Candidates are the chords of standard intervals strictly containing one of
// the arc's endpoints, plus the diameter; nothing deeper can interleave.
std::vector<Arc> base_arcs_crossing(const Arc& a);

// Finite partition 0 = x_0 < x_1 < ... < x_{k-1} (< 1 implicit) of the unit
// interval into standard dyadic intervals [m/2^n, (m+1)/2^n]. [0,1] itself is
// not a standard interval, so every partition has at least 2 pieces.
class StandardPartition {
public:
    // Validates that consecutive gaps are standard dyadic intervals.
    static StandardPartition from_breakpoints(std::vector<Dyadic> pts);

    // Coarsest standard partition whose breakpoints contain the given points
    // (unique: leaves of the union of binary subdivision paths).
    static StandardPartition closure(std::vector<Dyadic> pts);

    // All 2^level intervals of size 2^-level; level >= 1.
    static StandardPartition uniform(int level);

    static StandardPartition parse(const std::string& text); // "0,1/4,1/2"

    const std::vector<Dyadic>& breakpoints() const { return pts_; }
    std::size_t interval_count() const { return pts_.size(); }
    const Dyadic& interval_lo(std::size_t i) const { return pts_[i]; }
    int interval_level(std::size_t i) const { return levels_[i]; }

    // Breakpoint-superset test (inscribed-polygon containment).
    bool refines(const StandardPartition& coarser) const;

    std::string str() const;

    bool operator==(const StandardPartition& o) const { return pts_ == o.pts_; }

private:
    StandardPartition() = default;
    std::vector<Dyadic> pts_;
    std::vector<int> levels_;
};

// Coarsest standard partition refining both arguments (breakpoint union).
StandardPartition refine_common(const StandardPartition& p, const StandardPartition& q);

// The finitely many base-triangulation arcs with both endpoints among the
// partition's breakpoints, i.e. those lying inside or on the inscribed
// polygon. Requires at least 3 intervals (a nondegenerate polygon).
std::set<Arc> base_arcs_in_window(const StandardPartition& p);

} // namespace infassoc
