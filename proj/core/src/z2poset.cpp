#include "kneser/z2poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include <json.hpp>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

constexpr int kPosetCap = 20000;
constexpr std::size_t kFaceCap = 100000;

void validate_nu(int size, const std::vector<int>& nu) {
    if (static_cast<int>(nu.size()) != size)
        throw InvalidInput("Z2-poset: involution size mismatch");
    for (int p = 0; p < size; ++p) {
        if (nu[p] < 0 || nu[p] >= size)
            throw InvalidInput("Z2-poset: involution out of range");
        if (nu[p] == p)
            throw InvalidInput("Z2-poset: involution has a fixed point");
        if (nu[nu[p]] != p)
            throw InvalidInput("Z2-poset: involution is not an involution");
    }
}

} // namespace

int FreeZ2Poset::levels() const {
    int h = -1;
    for (int x : height) h = std::max(h, x);
    return h + 1;
}

std::vector<int> FreeZ2Poset::topo_order() const {
    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return height[a] < height[b]; });
    return order;
}

FreeZ2Poset FreeZ2Poset::from_relations(
    int size, std::vector<int> nu, const std::vector<std::pair<int, int>>& rel) {
    if (size < 0) throw InvalidInput("Z2-poset: negative size");
    if (size > kPosetCap)
        throw CapExceeded("Z2-poset: " + std::to_string(size) +
                          " elements exceeds the matrix cap " +
                          std::to_string(kPosetCap));
    validate_nu(size, nu);

    std::vector<std::vector<int>> succ(size);
    for (auto [a, b] : rel) {
        if (a < 0 || b < 0 || a >= size || b >= size)
            throw InvalidInput("Z2-poset: relation index out of range");
        if (a == b) throw InvalidInput("Z2-poset: reflexive strict relation");
        succ[a].push_back(b);
    }

    FreeZ2Poset p;
    p.size = size;
    p.nu = std::move(nu);
    std::vector<Bits> above(size, Bits(size));
    std::vector<int> state(size, 0); // 0 fresh, 1 on stack, 2 done
    // above[v] = everything reachable from v through the relation
    std::function<void(int)> close = [&](int v) {
        state[v] = 1;
        for (int w : succ[v]) {
            if (state[w] == 1)
                throw InvalidInput("Z2-poset: order relation contains a cycle");
            if (state[w] == 0) close(w);
            above[v].set(w);
            above[v] |= above[w];
        }
        if (above[v].test(v))
            throw InvalidInput("Z2-poset: order relation contains a cycle");
        state[v] = 2;
    };
    for (int v = 0; v < size; ++v)
        if (state[v] == 0) close(v);

    p.below.assign(size, Bits(size));
    for (int v = 0; v < size; ++v)
        above[v].for_each([&](int w) { p.below[w].set(v); });

    for (int v = 0; v < size; ++v) {
        if (above[v].test(p.nu[v]) || p.below[v].test(p.nu[v]))
            throw InvalidInput("Z2-poset: element comparable with its partner");
        bool ok = true;
        above[v].for_each([&](int w) {
            if (!above[p.nu[v]].test(p.nu[w])) ok = false;
        });
        if (!ok)
            throw InvalidInput("Z2-poset: involution is not order-preserving");
    }

    p.height.assign(size, 0);
    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return p.below[a].count() < p.below[b].count();
    });
    for (int v : order) {
        int h = 0;
        p.below[v].for_each([&](int w) { h = std::max(h, p.height[w] + 1); });
        p.height[v] = h;
    }
    return p;
}

FreeZ2Poset FreeZ2Poset::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("Z2-poset: bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("size") || !j.contains("nu") ||
        !j.contains("less"))
        throw InvalidInput("Z2-poset: expected {size, nu, less}");
    int size = j.at("size").get<int>();
    std::vector<int> nu;
    for (const auto& x : j.at("nu")) nu.push_back(x.get<int>() - 1);
    std::vector<std::pair<int, int>> rel;
    for (const auto& pr : j.at("less")) {
        if (!pr.is_array() || pr.size() != 2)
            throw InvalidInput("Z2-poset: each relation must be a pair");
        rel.emplace_back(pr[0].get<int>() - 1, pr[1].get<int>() - 1);
    }
    return from_relations(size, std::move(nu), rel);
}

std::string FreeZ2Poset::to_json_string() const {
    nlohmann::json j;
    j["size"] = size;
    std::vector<int> nu1;
    for (int x : nu) nu1.push_back(x + 1);
    j["nu"] = nu1;
    auto rel = nlohmann::json::array();
    for (int b = 0; b < size; ++b)
        below[b].for_each([&](int a) {
            rel.push_back(nlohmann::json::array({a + 1, b + 1}));
        });
    j["less"] = rel;
    return j.dump();
}

FacePoset face_poset(const Z2Complex& k) {
    if (k.vertices < 1 || k.vertices > 64)
        throw InvalidInput("face_poset: vertex count must be in [1,64]");
    validate_nu(k.vertices, k.nu);

    // Downward closure, faces as vertex masks.
    std::vector<std::uint64_t> closed;
    {
        std::map<std::uint64_t, bool> seen;
        std::vector<std::uint64_t> stack;
        for (const auto& f : k.faces) {
            std::uint64_t m = 0;
            for (int v : f) {
                if (v < 0 || v >= k.vertices)
                    throw InvalidInput("face_poset: face vertex out of range");
                m |= 1ULL << v;
            }
            if (m) stack.push_back(m);
        }
        while (!stack.empty()) {
            std::uint64_t m = stack.back();
            stack.pop_back();
            if (seen.count(m)) continue;
            seen[m] = true;
            if (seen.size() > kFaceCap)
                throw CapExceeded("face_poset: more than " +
                                  std::to_string(kFaceCap) + " faces");
            std::uint64_t rest = m;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint64_t sub = m & ~(1ULL << v);
                if (sub && !seen.count(sub)) stack.push_back(sub);
            }
        }
        for (const auto& [m, _] : seen) closed.push_back(m);
        std::sort(closed.begin(), closed.end(), mask_lex_less);
    }
    if (closed.empty()) throw InvalidInput("face_poset: complex has no faces");

    std::map<std::uint64_t, int> index;
    for (std::size_t i = 0; i < closed.size(); ++i)
        index[closed[i]] = static_cast<int>(i);

    int n = static_cast<int>(closed.size());
    std::vector<int> face_nu(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t img = 0;
        std::uint64_t m = closed[i];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            img |= 1ULL << k.nu[v];
        }
        auto it = index.find(img);
        if (it == index.end())
            throw InvalidInput("face_poset: complex is not closed under the "
                               "involution");
        if (it->second == i)
            throw InvalidInput("face_poset: a face is fixed by the involution");
        face_nu[i] = it->second;
    }

    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && (closed[i] & ~closed[j]) == 0) rel.emplace_back(i, j);

    FacePoset fp;
    fp.poset = FreeZ2Poset::from_relations(n, face_nu, rel);
    fp.face_masks = closed;
    return fp;
}

} // namespace kneser
