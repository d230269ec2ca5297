#include "infassoc/dyadic.hpp"

#include <algorithm>
#include <sstream>

namespace infassoc {

Dyadic Dyadic::from_parts(BigInt numerator, int exponent) {
    if (exponent < 0) {
        numerator <<= -exponent;
        exponent = 0;
    }
    BigInt den = BigInt(1) << exponent;
    numerator %= den;
    if (numerator < 0) numerator += den;
    while (exponent > 0 && (numerator & 1) == 0) {
        numerator >>= 1;
        --exponent;
    }
    if (exponent == 0) numerator = 0; // integers wrap to the base point
    Dyadic d;
    d.num_ = std::move(numerator);
    d.exp_ = exponent;
    return d;
}

Dyadic Dyadic::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty dyadic literal");
    auto slash = text.find('/');
    auto digits_only = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    if (slash == std::string::npos) {
        if (!digits_only(text)) throw ParseError("bad dyadic literal '" + text + "'");
        return from_parts(BigInt(text), 0); // "0" or an integer, wraps to 0
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den))
        throw ParseError("bad dyadic literal '" + text + "'");
    BigInt d(den);
    if (d <= 0) throw ParseError("bad dyadic denominator in '" + text + "'");
    int exp = 0;
    while (d > 1) {
        if ((d & 1) != 0)
            throw ParseError("denominator of '" + text + "' is not a power of two");
        d >>= 1;
        ++exp;
    }
    return from_parts(BigInt(num), exp);
}

BigInt Dyadic::scaled(int level) const {
    return num_ << (level - exp_);
}

Dyadic Dyadic::plus_mod1(const Dyadic& o) const {
    int l = std::max(exp_, o.exp_);
    return from_parts(scaled(l) + o.scaled(l), l);
}

Dyadic Dyadic::minus_mod1(const Dyadic& o) const {
    int l = std::max(exp_, o.exp_);
    return from_parts(scaled(l) - o.scaled(l), l);
}

Dyadic Dyadic::times_pow2(int k) const {
    return from_parts(num_, exp_ - k);
}

std::string Dyadic::str() const {
    if (is_zero()) return "0";
    return num_.str() + "/" + (BigInt(1) << exp_).str();
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
    int l = std::max(exp_, o.exp_);
    BigInt a = scaled(l), b = o.scaled(l);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool cyclically_between(const Dyadic& x, const Dyadic& a, const Dyadic& b) {
    if (a == b) throw DomainError("cyclically_between: degenerate interval a == b");
    if (a < b) return a < x && x < b;
    return x > a || x < b;
}

Arc::Arc(const Dyadic& a, const Dyadic& b) {
    if (a == b) throw DomainError("arc endpoints coincide at " + a.str());
    if (a < b) {
        lo_ = a;
        hi_ = b;
    } else {
        lo_ = b;
        hi_ = a;
    }
}

Arc Arc::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError("arc literal must look like \"[a,b]\", got '" + text + "'");
    std::string body = text.substr(1, text.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string::npos)
        throw ParseError("arc literal missing comma: '" + text + "'");
    return Arc(Dyadic::parse(body.substr(0, comma)), Dyadic::parse(body.substr(comma + 1)));
}

std::string Arc::str() const {
    return "[" + lo_.str() + "," + hi_.str() + "]";
}

bool arcs_cross(const Arc& u, const Arc& v) {
    if (u.lo() == v.lo() || u.lo() == v.hi() || u.hi() == v.lo() || u.hi() == v.hi())
        return false; // shared endpoints never cross
    bool in1 = cyclically_between(v.lo(), u.lo(), u.hi());
    bool in2 = cyclically_between(v.hi(), u.lo(), u.hi());
    return in1 != in2;
}

std::optional<std::pair<Dyadic, int>> base_arc_interval(const Arc& a) {
    int n = std::max(a.lo().exponent(), a.hi().exponent());
    if (n < 1) return std::nullopt;
    BigInt slo = a.lo().scaled(n), shi = a.hi().scaled(n);
    // consecutive at the canonical level: (m/2^n, (m+1)/2^n); n = 1 gives the
    // diameter (0,1/2), which is such an arc by convention
    if (shi - slo == 1) return std::make_pair(a.lo(), n);
    if (n >= 2 && slo == 0 && shi == (BigInt(1) << n) - 1)
        return std::make_pair(a.hi(), n); // wrap arc spans [(2^n-1)/2^n, 1]
    return std::nullopt;
}

bool in_base_triangulation(const Arc& a) {
    return base_arc_interval(a).has_value();
}

std::vector<Arc> base_arcs_crossing(const Arc& a) {
    std::set<Arc> out;
    auto consider = [&](const Arc& cand) {
        if (arcs_cross(cand, a)) out.insert(cand);
    };
    consider(Arc(Dyadic(), Dyadic::from_parts(1, 1)));
    for (const Dyadic& z : {a.lo(), a.hi()})
        for (int n = 1; n < z.exponent(); ++n) {
            // the level-n standard interval strictly containing z
            Dyadic lo = Dyadic::from_parts(z.numerator() >> (z.exponent() - n), n);
            consider(Arc(lo, lo.plus_mod1(Dyadic::from_parts(1, n))));
        }
    return {out.begin(), out.end()};
}

namespace {

// d compared against num/2^level (the fraction may equal 1)
int cmp_frac(const Dyadic& d, const BigInt& num, int level) {
    int l = std::max(d.exponent(), level);
    BigInt a = d.scaled(l), b = num << (l - level);
    return a < b ? -1 : (a == b ? 0 : 1);
}

void closure_rec(const BigInt& lo, int level, const std::vector<Dyadic>& pts,
                 std::vector<Dyadic>& out) {
    bool interior = false;
    for (const auto& p : pts) {
        if (cmp_frac(p, lo, level) > 0 && cmp_frac(p, lo + 1, level) < 0) {
            interior = true;
            break;
        }
    }
    if (level == 0 || interior) { // [0,1] is not standard, always split it
        closure_rec(lo * 2, level + 1, pts, out);
        closure_rec(lo * 2 + 1, level + 1, pts, out);
    } else {
        out.push_back(Dyadic::from_parts(lo, level));
    }
}

} // namespace

StandardPartition StandardPartition::from_breakpoints(std::vector<Dyadic> pts) {
    if (pts.empty() || !pts.front().is_zero())
        throw DomainError("partition must start at 0");
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i - 1] < pts[i]))
            throw DomainError("partition breakpoints must be strictly increasing");

    StandardPartition p;
    p.levels_.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Dyadic& lo = pts[i];
        bool last = i + 1 == pts.size();
        int l = std::max(lo.exponent(), last ? 0 : pts[i + 1].exponent());
        BigInt len = (last ? BigInt(1) << l : pts[i + 1].scaled(l)) - lo.scaled(l);
        // standard: len = 2^k/2^l with lo aligned to the same grid, level >= 1
        if (len <= 0 || (len & (len - 1)) != 0)
            throw DomainError("interval starting at " + lo.str() + " is not standard dyadic");
        int k = 0;
        while ((len & 1) == 0) {
            len >>= 1;
            ++k;
        }
        int level = l - k;
        if (level < 1 || lo.exponent() > level)
            throw DomainError("interval starting at " + lo.str() + " is not standard dyadic");
        p.levels_.push_back(level);
    }
    p.pts_ = std::move(pts);
    return p;
}

StandardPartition StandardPartition::closure(std::vector<Dyadic> pts) {
    std::vector<Dyadic> out;
    closure_rec(BigInt(0), 0, pts, out);
    return from_breakpoints(std::move(out));
}

StandardPartition StandardPartition::uniform(int level) {
    if (level < 1) throw DomainError("uniform partition level must be >= 1");
    std::vector<Dyadic> pts;
    for (BigInt m = 0; m < (BigInt(1) << level); ++m)
        pts.push_back(Dyadic::from_parts(m, level));
    return from_breakpoints(std::move(pts));
}

StandardPartition StandardPartition::parse(const std::string& text) {
    std::vector<Dyadic> pts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty breakpoint in partition");
        pts.push_back(Dyadic::parse(item.substr(b, e - b + 1)));
    }
    try {
        return from_breakpoints(std::move(pts));
    } catch (const DomainError& err) {
        throw ParseError(std::string("bad partition '") + text + "': " + err.what());
    }
}

bool StandardPartition::refines(const StandardPartition& coarser) const {
    return std::includes(pts_.begin(), pts_.end(), coarser.pts_.begin(), coarser.pts_.end());
}

std::string StandardPartition::str() const {
    std::string s;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i) s += ",";
        s += pts_[i].str();
    }
    return s;
}

StandardPartition refine_common(const StandardPartition& p, const StandardPartition& q) {
    std::vector<Dyadic> pts = p.breakpoints();
    pts.insert(pts.end(), q.breakpoints().begin(), q.breakpoints().end());
    // the breakpoint union of two standard partitions is itself standard;
    // closure() realizes it and would also repair a hypothetical gap
    return StandardPartition::closure(std::move(pts));
}

std::set<Arc> base_arcs_in_window(const StandardPartition& p) {
    if (p.interval_count() < 3)
        throw DomainError("window polygon needs at least 3 vertices");
    const auto& v = p.breakpoints();
    std::set<Arc> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            Arc a(v[i], v[j]);
            if (in_base_triangulation(a)) out.insert(a);
        }
    return out;
}

} // namespace infassoc
