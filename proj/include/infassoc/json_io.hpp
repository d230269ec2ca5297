#pragma once
// JSON and DOT interchange for the core types. Leaf encodings are the textual
// forms: dyadics "m/2^n" (or "0"), arcs "[a,b]", partitions as comma-separated
// breakpoint lists. Serialization is canonical: equal values produce
// byte-identical JSON and vice versa.

#include <json.hpp>

#include <string>

#include "infassoc/associahedron.hpp"
#include "infassoc/complexnav.hpp"
#include "infassoc/dyadic.hpp"
#include "infassoc/errors.hpp"
#include "infassoc/ftess.hpp"
#include "infassoc/thompson.hpp"

namespace infassoc {

using Json = nlohmann::ordered_json;

// {"removed": [arc,...], "added": [arc,...]}; missing keys read as empty.
Json tessellation_to_json(const FTessellation& t);
FTessellation tessellation_from_json(const Json& j);

// {"intervals": [{"src": ["a","b"], "dst": ["c","d"]},...], "orientation": 1|-1}
// with "0" as an interval's upper endpoint standing for the wrap to 1; for
// reversing elements the dst pair is the image interval in circle order.
Json element_to_json(const ThompsonElement& t);
ThompsonElement element_from_json(const Json& j);

// Accepts the JSON object form or the shorthands "id", "refl", "rot m/2^n".
ThompsonElement parse_element(const std::string& text);

// {"n": int, "diagonals": [[i,j],...]} with 1 <= i < j <= n.
Json polygon_to_json(const PolygonTessellation& t);
PolygonTessellation polygon_from_json(const Json& j);

// {"n": int, "faces": [face,...], "covers": [[a,b],...]} with index pairs
// into the faces array.
Json lattice_to_json(const FaceLattice& lat);

// {"center": tessellation, "vertex_count": int, "shape": name}
Json link_to_json(const CellLink& link);

// Graphviz exports: the flip graph of the n-gon, the star of a triangulation
// inside a window, and the boundary cycle of a rank-2 cell.
std::string dot_flip_graph(int n);
std::string dot_neighborhood(const FTessellation& a, const WindowPolicy& w);
std::string dot_boundary_cycle(const FTessellation& b);

} // namespace infassoc
