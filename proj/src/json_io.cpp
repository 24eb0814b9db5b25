#include "promdig/json_io.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace promdig {

using nlohmann::json;

namespace {

json grid_to_json(const Grid& grid) {
    json rows = json::array();
    for (const auto& row : grid) rows.push_back(row);
    return rows;
}

json tableau_json(const char* kind, const Partition& shape, const Grid& rows,
                  const RotatedAlphabet& alphabet) {
    return json{{"kind", kind},
                {"shape", shape.parts()},
                {"rows", grid_to_json(rows)},
                {"q", alphabet.size()},
                {"offset", alphabet.offset()}};
}

template <typename T>
T field(const json& j, const char* name) {
    if (!j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad field \"") + name + "\": " + e.what());
    }
}

}  // namespace

json tableau_to_json(const StandardTableau& t) {
    return tableau_json("standard", t.shape(), t.rows(), t.alphabet());
}

json tableau_to_json(const IncreasingTableau& t) {
    return tableau_json("increasing", t.shape(), t.rows(), t.alphabet());
}

AnyTableau tableau_from_json(const json& j) {
    const auto kind = field<std::string>(j, "kind");
    const auto shape = Partition(field<std::vector<int>>(j, "shape"));
    const auto rows = field<Grid>(j, "rows");
    const int q = field<int>(j, "q");
    const int offset = j.contains("offset") ? field<int>(j, "offset") : 0;
    const RotatedAlphabet alphabet(q, offset);
    if (kind == "standard") return validate_standard(shape, rows, alphabet);
    if (kind == "increasing") return validate_increasing(shape, rows, alphabet);
    throw ParseError("unknown tableau kind \"" + kind + "\"");
}

json lattice_word_to_json(const LatticeWord& w) {
    json letters = json::array();
    for (int pos = 1; pos <= w.length(); ++pos) letters.push_back(w.letter(pos));
    return json{{"row_count", w.row_count()}, {"letters", letters}};
}

LatticeWord lattice_word_from_json(const json& j) {
    return LatticeWord::from_sets(field<int>(j, "row_count"),
                                  field<std::vector<std::vector<int>>>(j, "letters"));
}

json digraph_to_json(const PromotionDigraph& d) {
    json edges = json::array();
    for (const auto& [a, b] : d.edges()) edges.push_back(json::array({a, b}));
    return json{{"n", d.n()}, {"i", d.index()}, {"edges", edges}};
}

json digraph_to_json(const TripDigraph& d) {
    json edges = json::array();
    for (const auto& [a, b] : d.edges()) edges.push_back(json::array({a, b}));
    return json{{"n", d.n()}, {"i", d.i()}, {"edges", edges}};
}

PromotionDigraph digraph_from_json(const json& j) {
    auto raw = field<std::vector<std::vector<int>>>(j, "edges");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : raw) {
        if (e.size() != 2) throw ParseError("digraph edges must be pairs");
        edges.push_back({e[0], e[1]});
    }
    try {
        return PromotionDigraph(field<int>(j, "n"), field<int>(j, "i"), std::move(edges));
    } catch (const Error& e) {
        throw ParseError(std::string("bad digraph: ") + e.what());
    }
}

json nc_partition_to_json(const NoncrossingSetPartition& p) {
    json blocks = json::array();
    for (const auto& block : p.blocks()) blocks.push_back(block);
    return json{{"q", p.q()}, {"blocks", blocks}};
}

NoncrossingSetPartition nc_partition_from_json(const json& j) {
    return NoncrossingSetPartition::validate(
        field<int>(j, "q"), field<std::vector<std::vector<int>>>(j, "blocks"));
}

json plabic_to_json(const PlabicGraph& g) {
    json interior = json::array();
    for (const auto& iv : g.interior()) {
        interior.push_back(json{{"id", iv.id}, {"color", iv.color == Color::black ? "black" : "white"}});
    }
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    json rotation = json::object();
    for (const auto& [v, rot] : g.rotation()) rotation[std::to_string(v)] = rot;
    return json{{"n", g.n()}, {"interior", interior}, {"edges", edges}, {"rotation", rotation}};
}

PlabicGraph plabic_from_json(const json& j) {
    std::vector<PlabicGraph::InteriorVertex> interior;
    if (!j.contains("interior") || !j.at("interior").is_array()) {
        throw ParseError("missing field \"interior\"");
    }
    for (const auto& item : j.at("interior")) {
        const auto color = field<std::string>(item, "color");
        if (color != "black" && color != "white") {
            throw ParseError("interior color must be \"black\" or \"white\"");
        }
        interior.push_back({field<int>(item, "id"),
                            color == "black" ? Color::black : Color::white});
    }
    auto raw_edges = field<std::vector<std::vector<int>>>(j, "edges");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : raw_edges) {
        if (e.size() != 2) throw ParseError("plabic edges must be pairs");
        edges.push_back({e[0], e[1]});
    }
    std::map<int, std::vector<int>> rotation;
    if (j.contains("rotation")) {
        for (const auto& [key, value] : j.at("rotation").items()) {
            try {
                rotation[std::stoi(key)] = value.get<std::vector<int>>();
            } catch (const std::exception&) {
                throw ParseError("bad rotation entry for vertex \"" + key + "\"");
            }
        }
    }
    return PlabicGraph::validate(field<int>(j, "n"), std::move(interior), std::move(edges),
                                 std::move(rotation));
}

namespace {

std::string edges_to_dot(int n, const std::vector<std::pair<int, int>>& edges) {
    std::ostringstream out;
    out << "digraph prom {\n";
    for (int v = 1; v <= n; ++v) out << "  " << v << ";\n";
    std::set<std::pair<int, int>> edge_set(edges.begin(), edges.end());
    std::set<std::pair<int, int>> done;
    for (const auto& [a, b] : edges) {
        if (done.count({a, b})) continue;
        if (a < b && edge_set.count({b, a})) {
            out << "  " << a << " -> " << b << " [dir=both];\n";
            done.insert({b, a});
        } else {
            out << "  " << a << " -> " << b << ";\n";
        }
        done.insert({a, b});
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string digraph_to_dot(const PromotionDigraph& d) { return edges_to_dot(d.n(), d.edges()); }
std::string digraph_to_dot(const TripDigraph& d) { return edges_to_dot(d.n(), d.edges()); }

std::string plabic_to_dot(const PlabicGraph& g) {
    std::ostringstream out;
    out << "graph plabic {\n";
    for (int b = 1; b <= g.n(); ++b) {
        out << "  " << b << " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
    }
    for (const auto& iv : g.interior()) {
        out << "  " << iv.id << " [shape=circle, style=filled, fillcolor="
            << (iv.color == Color::black ? "black, fontcolor=white" : "white") << "];\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<json> parse_json_stream(std::istream& in) {
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<json> out;
    // Try a single JSON value first; an array of objects counts as a stream.
    try {
        json whole = json::parse(content);
        if (whole.is_array()) {
            for (auto& item : whole) out.push_back(std::move(item));
        } else {
            out.push_back(std::move(whole));
        }
        return out;
    } catch (const json::exception&) {
        // Fall through to JSON-lines.
    }
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(json::parse(line));
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad JSON line: ") + e.what());
        }
    }
    if (out.empty()) throw ParseError("no JSON values found");
    return out;
}

}  // namespace promdig
