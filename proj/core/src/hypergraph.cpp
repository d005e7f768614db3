#include "kneser/hypergraph.hpp"

#include <algorithm>

#include <json.hpp>

#include "kneser/bits.hpp"
#include "kneser/errors.hpp"

namespace kneser {

Hypergraph Hypergraph::create(int n, const std::vector<std::vector<int>>& edge_lists) {
    std::vector<std::uint64_t> masks;
    masks.reserve(edge_lists.size());
    for (const auto& vs : edge_lists) {
        if (vs.empty()) throw InvalidInput("hypergraph: empty edge");
        std::uint64_t m = 0;
        for (int v : vs) {
            if (v < 1 || v > n) throw InvalidInput("hypergraph: vertex out of range");
            if (m & mask_bit(v)) throw InvalidInput("hypergraph: repeated vertex in edge");
            m |= mask_bit(v);
        }
        masks.push_back(m);
    }
    return from_masks(n, std::move(masks));
}

Hypergraph Hypergraph::from_masks(int n, std::vector<std::uint64_t> masks) {
    if (n < 1 || n > 64) throw InvalidInput("hypergraph: n must be in [1,64]");
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    for (std::uint64_t m : masks) {
        if (m == 0) throw InvalidInput("hypergraph: empty edge");
        if (m & ~all) throw InvalidInput("hypergraph: vertex out of range");
    }
    std::sort(masks.begin(), masks.end(), mask_lex_less);
    for (std::size_t i = 1; i < masks.size(); ++i)
        if (masks[i] == masks[i - 1]) throw InvalidInput("hypergraph: duplicate edge");
    Hypergraph h;
    h.n = n;
    h.edges = std::move(masks);
    return h;
}

bool Hypergraph::has_singleton() const {
    for (std::uint64_t e : edges)
        if (mask_count(e) == 1) return true;
    return false;
}

std::vector<int> Hypergraph::edge_vertices(int e) const {
    std::vector<int> vs;
    std::uint64_t m = edges[e];
    for (int v = 1; v <= n; ++v)
        if (m & mask_bit(v)) vs.push_back(v);
    return vs;
}

std::string Hypergraph::to_json_string() const {
    nlohmann::json j;
    j["n"] = n;
    auto arr = nlohmann::json::array();
    for (std::size_t e = 0; e < edges.size(); ++e) arr.push_back(edge_vertices(int(e)));
    j["edges"] = arr;
    return j.dump();
}

Hypergraph Hypergraph::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("hypergraph: bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j["n"].is_number_integer() || !j["edges"].is_array())
        throw InvalidInput("hypergraph: expected {\"n\": int, \"edges\": [[int,...],...]}");
    std::vector<std::vector<int>> lists;
    for (const auto& je : j["edges"]) {
        if (!je.is_array()) throw InvalidInput("hypergraph: edge must be an array");
        std::vector<int> vs;
        for (const auto& jv : je) {
            if (!jv.is_number_integer()) throw InvalidInput("hypergraph: vertex must be an integer");
            vs.push_back(jv.get<int>());
        }
        lists.push_back(std::move(vs));
    }
    return create(j["n"].get<int>(), lists);
}

} // namespace kneser
