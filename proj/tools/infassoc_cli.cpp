// Command-line front end: exact associahedron data, tessellation algebra,
// circle-map arithmetic, and window-restricted navigation of the flip
// complex. Output is deterministic for fixed inputs and seed. Exit codes:
// 0 success, 1 check failure, 2 usage error, 3 budget exhausted.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "infassoc/complexnav.hpp"
#include "infassoc/json_io.hpp"
#include "infassoc/verify.hpp"

using namespace infassoc;

namespace {

std::string read_input(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw ParseError("cannot read input file " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

Json json_arg(const std::string& raw) {
    Json j = Json::parse(read_input(raw), nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON input");
    return j;
}

FTessellation tess_arg(const std::string& raw) { return tessellation_from_json(json_arg(raw)); }

ThompsonElement element_arg(const std::string& raw) { return parse_element(read_input(raw)); }

void require_inputs(const std::vector<std::string>& inputs, std::size_t count,
                    const std::string& what) {
    if (inputs.size() != count)
        throw ParseError(what + " takes " + std::to_string(count) + " input argument" +
                         (count == 1 ? "" : "s"));
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

// smallest window containing the quadrilateral one and every given support
StandardPartition resolve_window(const std::string& window_text,
                                 const std::vector<const FTessellation*>& supports) {
    if (!window_text.empty()) return StandardPartition::parse(window_text);
    StandardPartition w = StandardPartition::uniform(2);
    for (const FTessellation* t : supports) w = refine_common(w, support_polygon(*t));
    return w;
}

int cmd_associahedron(int n, const std::string& what, int max_n, const std::string& format) {
    if (n < 3 || n > max_n)
        throw DomainError("n must be between 3 and " + std::to_string(max_n));
    if (what == "fvector") {
        const std::vector<long long> fv = face_lattice(n).f_vector();
        if (format == "json") {
            Json j;
            j["n"] = n;
            j["fvector"] = fv;
            emit(j);
        } else {
            for (std::size_t i = 0; i < fv.size(); ++i)
                std::cout << (i ? " " : "") << fv[i];
            std::cout << "\n";
        }
        return 0;
    }
    if (what == "lattice") {
        FaceLattice lat = face_lattice(n);
        if (format == "json") {
            emit(lattice_to_json(lat));
        } else {
            std::cout << "n=" << n << " faces=" << lat.faces.size()
                      << " covers=" << lat.covers.size() << "\n";
        }
        return 0;
    }
    if (what == "flipgraph") {
        if (format == "json") {
            const std::vector<PolygonTessellation> tris = all_triangulations(n);
            Json j;
            j["n"] = n;
            j["vertices"] = Json::array();
            for (const PolygonTessellation& t : tris) j["vertices"].push_back(polygon_to_json(t));
            emit(j);
        } else {
            std::cout << dot_flip_graph(n);
        }
        return 0;
    }
    if (what == "sphere-check") {
        SphereCheckReport rep = check_sphere_boundary(n);
        if (format == "json") {
            Json j;
            j["n"] = rep.n;
            j["pass"] = rep.pass();
            j["components"] = rep.components;
            j["expected_components"] = rep.expected_components;
            j["incidence_ok"] = rep.incidence_ok;
            j["euler"] = rep.euler;
            j["expected_euler"] = rep.expected_euler;
            emit(j);
        } else {
            std::cout << "n=" << rep.n << " " << (rep.pass() ? "pass" : "FAIL")
                      << " euler=" << rep.euler << " components=" << rep.components
                      << " incidence=" << (rep.incidence_ok ? "ok" : "bad") << "\n";
        }
        return rep.pass() ? 0 : 1;
    }
    throw ParseError("unknown associahedron query: " + what);
}

int cmd_tessellation(const std::string& action, const std::vector<std::string>& inputs,
                     const std::string& format) {
    if (action == "validate") {
        require_inputs(inputs, 1, "validate");
        // build without the validating constructor so violations can be listed
        Json j = json_arg(inputs[0]);
        if (!j.is_object()) throw ParseError("tessellation JSON must be an object");
        FTessellation t;
        for (const char* key : {"removed", "added"}) {
            if (!j.contains(key)) continue;
            if (!j[key].is_array())
                throw ParseError(std::string("\"") + key + "\" must be an array");
            for (const Json& item : j[key]) {
                if (!item.is_string())
                    throw ParseError(std::string("\"") + key + "\" entries must be arc strings");
                Arc a = Arc::parse(item.get<std::string>());
                (key[0] == 'r' ? t.removed : t.added).insert(a);
            }
        }
        ValidationResult v = validate(t);
        if (format == "json") {
            Json out;
            out["ok"] = v.ok();
            out["rank"] = rank(t);
            out["violations"] = Json::array();
            for (const Violation& viol : v.violations) out["violations"].push_back(viol.str());
            emit(out);
        } else if (v.ok()) {
            std::cout << "ok rank=" << rank(t) << "\n";
        } else {
            std::cout << "invalid\n";
            for (const Violation& viol : v.violations) std::cout << "  " << viol.str() << "\n";
        }
        return v.ok() ? 0 : 1;
    }
    if (action == "rank") {
        require_inputs(inputs, 1, "rank");
        FTessellation t = tess_arg(inputs[0]);
        if (format == "json") {
            Json out;
            out["rank"] = rank(t);
            emit(out);
        } else {
            std::cout << rank(t) << "\n";
        }
        return 0;
    }
    if (action == "components" || action == "cell") {
        require_inputs(inputs, 1, action);
        FTessellation t = tess_arg(inputs[0]);
        CellStructure cs = cell_of(t);
        if (format == "json") {
            Json out;
            out["dim"] = cs.dim;
            out["components"] = Json::array();
            for (const auto& comp : cs.components) {
                Json face = Json::array();
                for (const Dyadic& v : comp) face.push_back(v.str());
                out["components"].push_back(face);
            }
            emit(out);
        } else {
            std::cout << "dim=" << cs.dim << "\n";
            for (const auto& comp : cs.components) {
                for (std::size_t i = 0; i < comp.size(); ++i)
                    std::cout << (i ? " " : "  ") << comp[i].str();
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (action == "intersect") {
        require_inputs(inputs, 2, "intersect");
        FTessellation t = intersect(tess_arg(inputs[0]), tess_arg(inputs[1]));
        if (format == "json")
            emit(tessellation_to_json(t));
        else
            std::cout << t.str() << "\n";
        return 0;
    }
    throw ParseError("unknown tessellation action: " + action);
}

int cmd_group(const std::string& action, const std::vector<std::string>& inputs,
              const std::string& format) {
    auto emit_element = [&](const ThompsonElement& t) {
        if (format == "json")
            emit(element_to_json(t));
        else
            std::cout << t.str() << "\n";
    };
    if (action == "compose") {
        require_inputs(inputs, 2, "compose");
        emit_element(compose(element_arg(inputs[0]), element_arg(inputs[1])));
        return 0;
    }
    if (action == "inverse") {
        require_inputs(inputs, 1, "inverse");
        emit_element(inverse(element_arg(inputs[0])));
        return 0;
    }
    if (action == "reduce") {
        require_inputs(inputs, 1, "reduce");
        emit_element(reduce_minimal(element_arg(inputs[0])));
        return 0;
    }
    if (action == "sign") {
        require_inputs(inputs, 1, "sign");
        const int value = sign(element_arg(inputs[0])) == OrientationSign::reversing ? 1 : 0;
        if (format == "json") {
            Json out;
            out["sign"] = value;
            emit(out);
        } else {
            std::cout << value << "\n";
        }
        return 0;
    }
    if (action == "eval") {
        require_inputs(inputs, 2, "eval");
        Dyadic value = evaluate(element_arg(inputs[0]), Dyadic::parse(read_input(inputs[1])));
        if (format == "json") {
            Json out;
            out["value"] = value.str();
            emit(out);
        } else {
            std::cout << value.str() << "\n";
        }
        return 0;
    }
    if (action == "act") {
        require_inputs(inputs, 2, "act");
        FTessellation image = act_tessellation(element_arg(inputs[0]), tess_arg(inputs[1]));
        if (format == "json")
            emit(tessellation_to_json(image));
        else
            std::cout << image.str() << "\n";
        return 0;
    }
    if (action == "witness") {
        require_inputs(inputs, 1, "witness");
        ThompsonElement t = element_arg(inputs[0]);
        std::optional<FTessellation> w = faithfulness_witness(t);
        if (format == "json") {
            Json out;
            out["witness"] = w ? tessellation_to_json(*w) : Json();
            out["image"] = w ? tessellation_to_json(act_tessellation(t, *w)) : Json();
            emit(out);
        } else if (w) {
            std::cout << w->str() << " -> " << act_tessellation(t, *w).str() << "\n";
        } else {
            std::cout << "identity\n";
        }
        return 0;
    }
    throw ParseError("unknown group action: " + action);
}

int cmd_complex(const std::string& action, const std::vector<std::string>& inputs,
                const std::string& format, const std::string& window_text, int expansions,
                long long budget, int radius, int samples, std::uint64_t seed) {
    if (action == "neighbors") {
        require_inputs(inputs, 1, "neighbors");
        FTessellation a = tess_arg(inputs[0]);
        WindowPolicy w{resolve_window(window_text, {&a}), expansions, budget};
        if (format == "dot") {
            std::cout << dot_neighborhood(a, w);
            return 0;
        }
        auto star = neighbors(a, w);
        if (format == "json") {
            Json out;
            out["query"] = "neighbors";
            out["window"] = w.base.str();
            out["count"] = star.size();
            out["neighbors"] = Json::array();
            for (const auto& [arc, t] : star) {
                Json entry;
                entry["arc"] = arc.str();
                entry["tessellation"] = tessellation_to_json(t);
                out["neighbors"].push_back(std::move(entry));
            }
            emit(out);
        } else {
            for (const auto& [arc, t] : star)
                std::cout << arc.str() << " -> " << t.str() << "\n";
        }
        return 0;
    }
    if (action == "distance") {
        require_inputs(inputs, 2, "distance");
        FTessellation a = tess_arg(inputs[0]);
        FTessellation b = tess_arg(inputs[1]);
        WindowPolicy w{resolve_window(window_text, {&a, &b}), expansions, budget};
        const int bound = bfs_distance(a, b, w);
        if (format == "json") {
            Json out;
            out["query"] = "distance";
            out["bound"] = bound;
            out["window"] = w.base.str();
            out["expansions"] = w.max_expansions;
            emit(out);
        } else {
            std::cout << bound << "\n";
        }
        return 0;
    }
    if (action == "cycle") {
        require_inputs(inputs, 2, "cycle");
        CellLink link = minimal_cycle(tess_arg(inputs[0]), tess_arg(inputs[1]));
        if (format == "dot") {
            std::cout << dot_boundary_cycle(link.center);
            return 0;
        }
        std::vector<FTessellation> cycle = boundary_cycle(link.center);
        if (format == "json") {
            Json out;
            out["query"] = "cycle";
            out["shape"] = shape_name(link.shape);
            out["length"] = link.vertex_count;
            out["center"] = tessellation_to_json(link.center);
            out["vertices"] = Json::array();
            for (const FTessellation& v : cycle) out["vertices"].push_back(tessellation_to_json(v));
            emit(out);
        } else {
            std::cout << shape_name(link.shape) << " " << link.vertex_count << "\n";
            for (const FTessellation& v : cycle) std::cout << "  " << v.str() << "\n";
        }
        return 0;
    }
    if (action == "link") {
        require_inputs(inputs, 1, "link");
        FTessellation b = tess_arg(inputs[0]);
        CellLink link = classify_link(b);
        if (format == "dot") {
            std::cout << dot_boundary_cycle(b); // rank-2 cells only
            return 0;
        }
        if (format == "json") {
            Json out = link_to_json(link);
            out["query"] = "link";
            emit(out);
        } else {
            std::cout << shape_name(link.shape) << " " << link.vertex_count << "\n";
        }
        return 0;
    }
    if (action == "translation") {
        require_inputs(inputs, 1, "translation");
        ThompsonElement t = element_arg(inputs[0]);
        WindowPolicy w{resolve_window(window_text, {}), expansions, budget};
        Rational bound = translation_length_upper(t, radius, w);
        if (format == "json") {
            Json out;
            out["query"] = "translation";
            out["bound"] = bound.str();
            out["window"] = w.base.str();
            out["expansions"] = w.max_expansions;
            out["radius"] = radius;
            emit(out);
        } else {
            std::cout << bound.str() << "\n";
        }
        return 0;
    }
    if (action == "isometry-check") {
        require_inputs(inputs, 1, "isometry-check");
        ConsistencyReport rep = isometry_consistency_check(element_arg(inputs[0]), samples, seed);
        if (format == "json") {
            Json out;
            out["query"] = "isometry-check";
            out["checked"] = rep.checked;
            out["violations"] = rep.violations;
            emit(out);
        } else {
            std::cout << "checked=" << rep.checked << " violations=" << rep.violations << "\n";
        }
        return rep.ok() ? 0 : 1;
    }
    throw ParseError("unknown complex action: " + action);
}

int cmd_verify_all(std::uint64_t seed, const std::string& format) {
    const std::vector<CriterionResult> results = run_all_criteria(seed);
    bool all = true;
    for (const CriterionResult& r : results) all = all && r.passed;
    if (format == "json") {
        Json out;
        out["seed"] = seed;
        out["passed"] = all;
        out["criteria"] = Json::array();
        for (const CriterionResult& r : results) {
            Json entry;
            entry["number"] = r.number;
            entry["name"] = r.name;
            entry["passed"] = r.passed;
            entry["detail"] = r.detail;
            out["criteria"].push_back(std::move(entry));
        }
        emit(out);
    } else {
        for (const CriterionResult& r : results)
            std::printf("criterion %2d %s %s: %s\n", r.number, r.passed ? "PASS" : "FAIL",
                        r.name.c_str(), r.detail.c_str());
        std::cout << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of finite associahedra, dyadic tessellations of the disk, "
                 "piecewise-dyadic circle maps, and the flip complex they act on"};
    app.require_subcommand(1);

    std::string format = "text";
    std::uint64_t seed = 2026;
    std::string window_text;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--seed", seed, "seed for sampled checks");
    app.add_option("--window", window_text,
                   "exploration window as a breakpoint list, e.g. 0,1/4,1/2,3/4 "
                   "(default: smallest window containing the inputs)");

    int assoc_n = 0;
    std::string assoc_what;
    int max_n = 9;
    CLI::App* assoc = app.add_subcommand("associahedron", "face data of the n-gon associahedron");
    assoc->fallthrough();
    assoc->add_option("n", assoc_n, "polygon size")->required();
    assoc->add_option("what", assoc_what, "query")
        ->required()
        ->check(CLI::IsMember({"fvector", "lattice", "flipgraph", "sphere-check"}));
    assoc->add_option("--max-n", max_n, "hard cap on n");

    std::string tess_action;
    std::vector<std::string> tess_inputs;
    CLI::App* tess = app.add_subcommand("tessellation", "tessellation algebra");
    tess->fallthrough();
    tess->add_option("action", tess_action, "one of validate|rank|components|cell|intersect")
        ->required();
    tess->add_option("inputs", tess_inputs, "tessellation JSON (inline or @file)");

    std::string group_action;
    std::vector<std::string> group_inputs;
    CLI::App* group = app.add_subcommand("group", "piecewise-dyadic circle maps");
    group->fallthrough();
    group->add_option("action", group_action,
                      "one of compose|inverse|reduce|sign|eval|act|witness")
        ->required();
    group->add_option("inputs", group_inputs, "element JSON/shorthand, then point or tessellation");

    std::string complex_action;
    std::vector<std::string> complex_inputs;
    int expansions = 0;
    long long budget = 200000;
    int radius = 1;
    int samples = 50;
    CLI::App* complex_cmd = app.add_subcommand("complex", "window-restricted flip navigation");
    complex_cmd->fallthrough();
    complex_cmd
        ->add_option("action", complex_action,
                     "one of neighbors|distance|cycle|link|translation|isometry-check")
        ->required();
    complex_cmd->add_option("inputs", complex_inputs, "tessellations or element");
    complex_cmd->add_option("--expansions", expansions, "extra window halving layers");
    complex_cmd->add_option("--budget", budget, "search node budget");
    complex_cmd->add_option("--radius", radius, "ball radius for translation bounds");
    complex_cmd->add_option("--samples", samples, "sample count for isometry checks");

    CLI::App* verify = app.add_subcommand("verify-all", "run the full acceptance checklist");
    verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (assoc->parsed()) return cmd_associahedron(assoc_n, assoc_what, max_n, format);
        if (tess->parsed()) return cmd_tessellation(tess_action, tess_inputs, format);
        if (group->parsed()) return cmd_group(group_action, group_inputs, format);
        if (complex_cmd->parsed())
            return cmd_complex(complex_action, complex_inputs, format, window_text, expansions,
                               budget, radius, samples, seed);
        if (verify->parsed()) return cmd_verify_all(seed, format);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
