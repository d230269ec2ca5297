#include "infassoc/thompson.hpp"

#include <algorithm>
#include <utility>

namespace infassoc {

namespace {

struct ImagePiece {
    Dyadic start; // counterclockwise left endpoint of the piece's image
    int level;
};

// Piece i maps [x_i, x_{i+1}] onto the interval between y_i and y_{i+1},
// traversed backwards when the orientation is -1.
ImagePiece image_piece(const std::vector<Dyadic>& ys, int orientation, std::size_t i) {
    std::size_t j = (i + 1) % ys.size();
    Dyadic len = orientation == 1 ? ys[j].minus_mod1(ys[i]) : ys[i].minus_mod1(ys[j]);
    if (len.numerator() != 1)
        throw DomainError("piece " + std::to_string(i) +
                          " maps onto a non-standard interval; slope is not a power of 2");
    return {orientation == 1 ? ys[i] : ys[j], len.exponent()};
}

std::size_t zero_index(const std::vector<Dyadic>& ys) {
    std::size_t i = 0;
    while (i < ys.size() && !ys[i].is_zero()) ++i;
    if (i == ys.size()) throw DomainError("no image point equals 0");
    return i;
}

} // namespace

ThompsonElement::ThompsonElement()
    : domain_(StandardPartition::uniform(1)),
      images_(StandardPartition::uniform(1).breakpoints()) {}

ThompsonElement::ThompsonElement(StandardPartition domain, std::vector<Dyadic> images,
                                 int orientation)
    : domain_(std::move(domain)), images_(std::move(images)), orientation_(orientation) {
    wrap_ = zero_index(images_);
}

ThompsonElement ThompsonElement::identity() { return ThompsonElement(); }

ThompsonElement ThompsonElement::rotation(const Dyadic& by) {
    StandardPartition part = StandardPartition::uniform(std::max(by.exponent(), 1));
    std::vector<Dyadic> ys;
    for (const Dyadic& x : part.breakpoints()) ys.push_back(x.plus_mod1(by));
    return from_images(part.breakpoints(), std::move(ys), 1);
}

ThompsonElement ThompsonElement::reflection() {
    std::vector<Dyadic> pts = StandardPartition::uniform(1).breakpoints();
    return from_images(pts, pts, -1);
}

ThompsonElement ThompsonElement::from_images(std::vector<Dyadic> breakpoints,
                                             std::vector<Dyadic> images, int orientation) {
    if (orientation != 1 && orientation != -1)
        throw DomainError("orientation must be +1 or -1");
    StandardPartition domain = StandardPartition::from_breakpoints(std::move(breakpoints));
    const std::size_t k = domain.interval_count();
    if (images.size() != k)
        throw DomainError("need exactly one image point per breakpoint");

    std::vector<Dyadic> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("image points must be distinct");
    StandardPartition::from_breakpoints(std::move(sorted)); // image partition, anchored at 0

    int descents = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (images[(i + 1) % k] < images[i]) ++descents;
    if (orientation == 1 && descents != 1)
        throw DomainError("image points must be cyclically increasing");
    if (orientation == -1 && descents != static_cast<int>(k) - 1)
        throw DomainError("image points must be cyclically decreasing");

    ThompsonElement t(std::move(domain), std::move(images), orientation);
    t.reduce_();
    return t;
}

ThompsonElement ThompsonElement::make_element(std::vector<IntervalMap> pieces, int orientation) {
    if (pieces.empty()) throw DomainError("need at least one piece");
    std::sort(pieces.begin(), pieces.end(),
              [](const IntervalMap& a, const IntervalMap& b) { return a.src_lo < b.src_lo; });
    const std::size_t k = pieces.size();
    std::vector<Dyadic> xs, ys;
    for (std::size_t i = 0; i < k; ++i) {
        const IntervalMap& p = pieces[i];
        const IntervalMap& q = pieces[(i + 1) % k];
        if (p.src_hi != q.src_lo)
            throw DomainError("source intervals do not tile the circle at " + p.src_hi.str());
        // t(x_{i+1}) as seen from piece i must be where piece i+1 starts
        const Dyadic& handoff = orientation == -1 ? p.dst_lo : p.dst_hi;
        const Dyadic& start = orientation == -1 ? q.dst_hi : q.dst_lo;
        if (handoff != start)
            throw DomainError("target intervals do not chain at " + handoff.str() +
                              "; non-bijective target layout");
        xs.push_back(p.src_lo);
        ys.push_back(orientation == -1 ? p.dst_hi : p.dst_lo);
    }
    return from_images(std::move(xs), std::move(ys), orientation);
}

void ThompsonElement::reduce_() {
    std::vector<Dyadic> xs = domain_.breakpoints();
    std::vector<Dyadic> ys = images_;
    bool merged = true;
    while (merged && xs.size() > 2) {
        merged = false;
        StandardPartition part = StandardPartition::from_breakpoints(xs);
        for (std::size_t i = 1; i < xs.size(); ++i) {
            // drop x_i, merging pieces i-1 and i; the anchor y = 0 must stay
            if (ys[i].is_zero()) continue;
            int l = part.interval_level(i - 1);
            if (part.interval_level(i) != l || l < 2) continue;
            if (xs[i - 1].exponent() > l - 1) continue; // merged source not standard
            ImagePiece a = image_piece(ys, orientation_, i - 1);
            ImagePiece b = image_piece(ys, orientation_, i);
            if (a.level != b.level || a.level < 2) continue; // slopes differ
            const Dyadic& c = orientation_ == 1 ? a.start : b.start;
            if (c.exponent() > a.level - 1) continue; // merged image not standard
            xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
            ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(i));
            merged = true;
            break;
        }
    }
    domain_ = StandardPartition::from_breakpoints(std::move(xs));
    images_ = std::move(ys);
    wrap_ = zero_index(images_);
}

std::string ThompsonElement::str() const {
    std::string s(orientation_ == 1 ? "+" : "-");
    const std::vector<Dyadic>& xs = domain_.breakpoints();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += i == 0 ? " " : ", ";
        s += xs[i].str() + "->" + images_[i].str();
    }
    return s;
}

Dyadic evaluate(const ThompsonElement& t, const Dyadic& x) {
    const std::vector<Dyadic>& xs = t.domain_partition().breakpoints();
    std::size_t i =
        static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin()) - 1;
    int l = t.domain_partition().interval_level(i);
    ImagePiece img = image_piece(t.image_points(), t.orientation(), i);
    Dyadic off = x.minus_mod1(xs[i]).times_pow2(l - img.level);
    return t.orientation() == 1 ? img.start.plus_mod1(off)
                                : t.image_points()[i].minus_mod1(off);
}

ThompsonElement compose(const ThompsonElement& s, const ThompsonElement& t) {
    ThompsonElement t_inv = inverse(t);
    std::vector<Dyadic> pts = t.domain_partition().breakpoints();
    for (const Dyadic& b : s.domain_partition().breakpoints())
        pts.push_back(evaluate(t_inv, b));
    StandardPartition part = StandardPartition::closure(std::move(pts));

    std::vector<Dyadic> xs = part.breakpoints();
    std::vector<Dyadic> ys;
    ys.reserve(xs.size());
    for (const Dyadic& x : xs) ys.push_back(evaluate(s, evaluate(t, x)));
    int orient = s.orientation() * t.orientation();

    // The composite is affine on every gap, but a gap's image need not be a
    // standard interval yet; halving the gap realigns it, and power-of-2
    // slopes make this bottom out.
    std::size_t i = 0;
    while (i < xs.size()) {
        if (xs.size() > (1u << 20))
            throw BudgetExceeded("composition exceeded 2^20 breakpoints");
        std::size_t j = (i + 1) % xs.size();
        Dyadic len = xs[j].minus_mod1(xs[i]);
        Dyadic ilen = orient == 1 ? ys[j].minus_mod1(ys[i]) : ys[i].minus_mod1(ys[j]);
        if (ilen.numerator() != 1)
            throw DomainError("composite piece has a non-power-of-2 slope");
        const Dyadic& c = orient == 1 ? ys[i] : ys[j];
        if (c.exponent() <= ilen.exponent()) {
            ++i;
            continue;
        }
        Dyadic mid = xs[i].plus_mod1(Dyadic::from_parts(1, len.exponent() + 1));
        Dyadic val = evaluate(s, evaluate(t, mid));
        xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(i) + 1, mid);
        ys.insert(ys.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(val));
    }
    return ThompsonElement::from_images(std::move(xs), std::move(ys), orient);
}

ThompsonElement inverse(const ThompsonElement& t) {
    const std::vector<Dyadic>& xs = t.domain_partition().breakpoints();
    const std::vector<Dyadic>& ys = t.image_points();
    std::vector<std::pair<Dyadic, Dyadic>> pairs;
    pairs.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) pairs.emplace_back(ys[i], xs[i]);
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Dyadic> nx, ny;
    nx.reserve(pairs.size());
    ny.reserve(pairs.size());
    for (auto& [y, x] : pairs) {
        nx.push_back(std::move(y));
        ny.push_back(std::move(x));
    }
    return ThompsonElement::from_images(std::move(nx), std::move(ny), t.orientation());
}

ThompsonElement reduce_minimal(const ThompsonElement& t) {
    return ThompsonElement::from_images(t.domain_partition().breakpoints(), t.image_points(),
                                        t.orientation());
}

OrientationSign sign(const ThompsonElement& t) {
    return t.orientation() == 1 ? OrientationSign::preserving : OrientationSign::reversing;
}

std::vector<std::string> element_defects(const ThompsonElement& t) {
    std::vector<std::string> out;
    const std::vector<Dyadic>& xs = t.domain_partition().breakpoints();
    const std::vector<Dyadic>& ys = t.image_points();
    try {
        StandardPartition::from_breakpoints(xs);
    } catch (const std::exception& e) {
        out.push_back(std::string("domain partition: ") + e.what());
    }
    if (t.orientation() != 1 && t.orientation() != -1)
        out.push_back("orientation is not +1 or -1");
    if (ys.size() != xs.size()) {
        out.push_back("image count differs from breakpoint count");
        return out;
    }
    std::vector<Dyadic> sorted = ys;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        out.push_back("image points are not distinct");
    } else {
        try {
            StandardPartition::from_breakpoints(std::move(sorted));
        } catch (const std::exception& e) {
            out.push_back(std::string("image partition: ") + e.what());
        }
    }
    int descents = 0;
    for (std::size_t i = 0; i < ys.size(); ++i)
        if (ys[(i + 1) % ys.size()] < ys[i]) ++descents;
    int want = t.orientation() == 1 ? 1 : static_cast<int>(ys.size()) - 1;
    if (descents != want) out.push_back("image points are not cyclically monotone");
    try {
        for (std::size_t i = 0; i < ys.size(); ++i) image_piece(ys, t.orientation(), i);
    } catch (const std::exception& e) {
        out.push_back(e.what());
    }
    if (t.wrap_index() >= ys.size() || !ys[t.wrap_index()].is_zero())
        out.push_back("wrap index does not point at the zero image");
    if (out.empty() && !(reduce_minimal(t) == t)) out.push_back("not in reduced form");
    return out;
}

FTessellation act_tessellation(const ThompsonElement& t, const FTessellation& b) {
    StandardPartition window = refine_common(support_polygon(b), t.domain_partition());

    std::set<Arc> present;
    for (const Arc& a : base_arcs_in_window(window))
        if (!b.removed.count(a)) present.insert(a);
    for (const Arc& a : b.added) present.insert(a);

    std::vector<Dyadic> image_pts;
    image_pts.reserve(window.interval_count());
    for (const Dyadic& x : window.breakpoints()) image_pts.push_back(evaluate(t, x));
    std::sort(image_pts.begin(), image_pts.end());
    StandardPartition out_window = StandardPartition::from_breakpoints(std::move(image_pts));

    std::set<Arc> images;
    for (const Arc& a : present) images.insert(Arc(evaluate(t, a.lo()), evaluate(t, a.hi())));

    std::set<Arc> removed, added;
    for (const Arc& a : base_arcs_in_window(out_window))
        if (!images.count(a)) removed.insert(a);
    for (const Arc& a : images)
        if (!in_base_triangulation(a)) added.insert(a);
    return make_tessellation(std::move(removed), std::move(added));
}

std::optional<FTessellation> faithfulness_witness(const ThompsonElement& t) {
    if (t == ThompsonElement::identity()) return std::nullopt;
    const FTessellation base = FTessellation::base();
    auto moved = [&](const FTessellation& cand) { return act_tessellation(t, cand) != cand; };
    if (moved(base)) return base;
    // If t fixes the base, it permutes its arcs; flipping at any arc t moves
    // yields a witness, and some arc moves or t would fix every dyadic.
    int budget = 4096;
    for (int level = 1; level <= 24; ++level) {
        long long count = level == 1 ? 1 : (1LL << level);
        for (long long m = 0; m < count; ++m) {
            Dyadic lo = Dyadic::from_parts(m, level == 1 ? 1 : level);
            Arc arc(lo, lo.plus_mod1(Dyadic::from_parts(1, level == 1 ? 1 : level)));
            FTessellation cand = flip_arc(base, arc);
            if (moved(cand)) return cand;
            if (--budget <= 0)
                throw BudgetExceeded("no moved tessellation within the flip search budget");
        }
    }
    throw BudgetExceeded("no moved tessellation within the flip search budget");
}

} // namespace infassoc
