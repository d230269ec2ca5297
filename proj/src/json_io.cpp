#include "infassoc/json_io.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace infassoc {

namespace {

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<Arc> arcs_from_json(const Json& j, const char* key) {
    std::vector<Arc> out;
    if (!j.contains(key)) return out;
    const Json& list = j[key];
    if (!list.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    for (const Json& item : list) {
        if (!item.is_string())
            throw ParseError(std::string("\"") + key + "\" entries must be arc strings");
        out.push_back(Arc::parse(item.get<std::string>()));
    }
    return out;
}

} // namespace

Json tessellation_to_json(const FTessellation& t) {
    Json j;
    j["removed"] = Json::array();
    for (const Arc& a : t.removed) j["removed"].push_back(a.str());
    j["added"] = Json::array();
    for (const Arc& a : t.added) j["added"].push_back(a.str());
    return j;
}

FTessellation tessellation_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("tessellation JSON must be an object");
    std::vector<Arc> removed = arcs_from_json(j, "removed");
    std::vector<Arc> added = arcs_from_json(j, "added");
    return make_tessellation(std::set<Arc>(removed.begin(), removed.end()),
                             std::set<Arc>(added.begin(), added.end()));
}

Json element_to_json(const ThompsonElement& t) {
    const std::vector<Dyadic>& xs = t.domain_partition().breakpoints();
    const std::vector<Dyadic>& ys = t.image_points();
    const std::size_t k = xs.size();
    Json intervals = Json::array();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t next = (i + 1) % k;
        Json piece;
        piece["src"] = {xs[i].str(), xs[next].str()};
        if (t.orientation() == 1)
            piece["dst"] = {ys[i].str(), ys[next].str()};
        else
            piece["dst"] = {ys[next].str(), ys[i].str()};
        intervals.push_back(std::move(piece));
    }
    Json j;
    j["intervals"] = std::move(intervals);
    j["orientation"] = t.orientation();
    return j;
}

ThompsonElement element_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("element JSON must be an object");
    if (!j.contains("intervals") || !j["intervals"].is_array())
        throw ParseError("element JSON needs an \"intervals\" array");
    if (!j.contains("orientation") || !j["orientation"].is_number_integer())
        throw ParseError("element JSON needs an integer \"orientation\"");
    auto pair_of = [](const Json& q, const char* what) {
        if (!q.is_array() || q.size() != 2 || !q[0].is_string() || !q[1].is_string())
            throw ParseError(std::string("\"") + what + "\" must be a pair of dyadic strings");
        return std::pair(Dyadic::parse(q[0].get<std::string>()),
                         Dyadic::parse(q[1].get<std::string>()));
    };
    std::vector<IntervalMap> pieces;
    for (const Json& p : j["intervals"]) {
        if (!p.is_object() || !p.contains("src") || !p.contains("dst"))
            throw ParseError("each interval needs \"src\" and \"dst\" pairs");
        auto [sl, sh] = pair_of(p["src"], "src");
        auto [dl, dh] = pair_of(p["dst"], "dst");
        pieces.push_back({sl, sh, dl, dh});
    }
    return ThompsonElement::make_element(std::move(pieces), j["orientation"].get<int>());
}

ThompsonElement parse_element(const std::string& text) {
    const std::string s = trimmed(text);
    if (s == "id") return ThompsonElement::identity();
    if (s == "refl") return ThompsonElement::reflection();
    if (s.rfind("rot ", 0) == 0) return ThompsonElement::rotation(Dyadic::parse(s.substr(4)));
    if (!s.empty() && s.front() == '{') {
        Json j = Json::parse(s, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed element JSON");
        return element_from_json(j);
    }
    throw ParseError("expected \"id\", \"refl\", \"rot m/2^n\", or an element JSON object");
}

Json polygon_to_json(const PolygonTessellation& t) {
    Json j;
    j["n"] = t.n;
    j["diagonals"] = Json::array();
    for (const auto& [a, b] : t.diagonals) j["diagonals"].push_back({a, b});
    return j;
}

PolygonTessellation polygon_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("polygon JSON needs an integer \"n\"");
    std::vector<std::pair<int, int>> diagonals;
    if (j.contains("diagonals")) {
        if (!j["diagonals"].is_array()) throw ParseError("\"diagonals\" must be an array");
        for (const Json& d : j["diagonals"]) {
            if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() ||
                !d[1].is_number_integer())
                throw ParseError("each diagonal must be a pair of integers");
            diagonals.emplace_back(d[0].get<int>(), d[1].get<int>());
        }
    }
    return PolygonTessellation::make(j["n"].get<int>(), std::move(diagonals));
}

Json lattice_to_json(const FaceLattice& lat) {
    Json j;
    j["n"] = lat.n;
    j["faces"] = Json::array();
    for (const PolygonTessellation& f : lat.faces) j["faces"].push_back(polygon_to_json(f));
    j["covers"] = Json::array();
    for (const auto& [a, b] : lat.covers) j["covers"].push_back({a, b});
    return j;
}

Json link_to_json(const CellLink& link) {
    Json j;
    j["center"] = tessellation_to_json(link.center);
    j["vertex_count"] = link.vertex_count;
    j["shape"] = shape_name(link.shape);
    return j;
}

std::string dot_flip_graph(int n) {
    const std::vector<PolygonTessellation> tris = all_triangulations(n);
    std::map<std::vector<std::pair<int, int>>, std::size_t> index;
    for (std::size_t i = 0; i < tris.size(); ++i) index[tris[i].diagonals] = i;
    std::ostringstream out;
    out << "graph flips {\n";
    for (std::size_t i = 0; i < tris.size(); ++i)
        out << "  t" << i << " [label=\"" << tris[i].str() << "\"];\n";
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (const auto& d : tris[i].diagonals) {
            const std::size_t j = index.at(flip(tris[i], d).diagonals);
            if (i < j) out << "  t" << i << " -- t" << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string dot_neighborhood(const FTessellation& a, const WindowPolicy& w) {
    const auto star = neighbors(a, w);
    std::ostringstream out;
    out << "graph neighborhood {\n";
    out << "  v0 [label=\"" << a.str() << "\"];\n";
    for (std::size_t i = 0; i < star.size(); ++i) {
        out << "  v" << i + 1 << " [label=\"" << star[i].second.str() << "\"];\n";
        out << "  v0 -- v" << i + 1 << " [label=\"" << star[i].first.str() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string dot_boundary_cycle(const FTessellation& b) {
    const std::vector<FTessellation> cycle = boundary_cycle(b);
    std::ostringstream out;
    out << "graph cycle {\n";
    out << "  label=\"" << shape_name(classify_link(b).shape) << "\";\n";
    for (std::size_t i = 0; i < cycle.size(); ++i)
        out << "  v" << i << " [label=\"" << cycle[i].str() << "\"];\n";
    for (std::size_t i = 0; i < cycle.size(); ++i)
        out << "  v" << i << " -- v" << (i + 1) % cycle.size() << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace infassoc
