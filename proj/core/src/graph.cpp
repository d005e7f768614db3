#include "kneser/graph.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "kneser/errors.hpp"

namespace kneser {

long Graph::edge_count() const {
    long total = 0;
    for (int v = 0; v < m; ++v) total += adj[v].count();
    return total / 2;
}

std::string Graph::to_json_string() const {
    nlohmann::json j;
    j["m"] = m;
    auto arr = nlohmann::json::array();
    for (int u = 0; u < m; ++u)
        adj[u].for_each([&](int v) {
            if (u < v) arr.push_back({u + 1, v + 1});
        });
    j["adj"] = arr;
    return j.dump();
}

Graph Graph::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("graph: bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("adj") ||
        !j["m"].is_number_integer() || !j["adj"].is_array())
        throw InvalidInput("graph: expected {\"m\": int, \"adj\": [[u,v],...]}");
    int m = j["m"].get<int>();
    if (m < 0) throw InvalidInput("graph: negative vertex count");
    Graph g(m);
    std::set<std::pair<int, int>> seen;
    for (const auto& je : j["adj"]) {
        if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
            !je[1].is_number_integer())
            throw InvalidInput("graph: adjacency entry must be [u, v]");
        int u = je[0].get<int>(), v = je[1].get<int>();
        if (u < 1 || u > m || v < 1 || v > m) throw InvalidInput("graph: vertex out of range");
        if (u == v) throw InvalidInput("graph: loop edge");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw InvalidInput("graph: duplicate edge");
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

bool Coloring::proper_on(const Graph& g) const {
    if (int(color.size()) != g.m) return false;
    for (int v = 0; v < g.m; ++v) {
        if (color[v] < 1 || color[v] > t) return false;
        bool ok = true;
        g.adj[v].for_each([&](int u) {
            if (color[u] == color[v]) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool Coloring::surjective() const {
    std::vector<char> used(t + 1, 0);
    for (int c : color) {
        if (c < 1 || c > t) return false;
        used[c] = 1;
    }
    for (int c = 1; c <= t; ++c)
        if (!used[c]) return false;
    return true;
}

bool Coloring::canonical() const {
    int max_used = 0;
    for (int c : color) {
        if (c < 1 || c > max_used + 1) return false;
        max_used = std::max(max_used, c);
    }
    return max_used == t;
}

std::string Coloring::to_json_string() const {
    nlohmann::json j;
    j["t"] = t;
    j["colors"] = color;
    return j.dump();
}

Coloring Coloring::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("coloring: bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("t") || !j.contains("colors") ||
        !j["t"].is_number_integer() || !j["colors"].is_array())
        throw InvalidInput("coloring: expected {\"t\": int, \"colors\": [int,...]}");
    Coloring c;
    c.t = j["t"].get<int>();
    for (const auto& jv : j["colors"]) {
        if (!jv.is_number_integer()) throw InvalidInput("coloring: color must be an integer");
        c.color.push_back(jv.get<int>());
    }
    return c;
}

} // namespace kneser
