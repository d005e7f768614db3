#include <kneser/circuit.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>

#include <kneser/errors.hpp>

namespace kneser {

namespace {

constexpr int kCircuitCap = 6;

bool alternating_labels(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    for (std::size_t i = 1; i < labels.size(); ++i) {
        if (std::abs(labels[i]) == std::abs(labels[i - 1])) return false;
        if ((labels[i] > 0) == (labels[i - 1] > 0)) return false;
    }
    return true;
}

struct ChainRecord {
    MaximalChain codes;
    std::vector<int> labels;
    bool alternating = false;
    std::vector<int> alt_facets; // dropped positions leaving an alternating facet
};

void enumerate_chains(const FanLabeling& l, std::vector<ChainRecord>& out) {
    const int n = l.n;
    MaximalChain codes;
    std::vector<int> labels;
    SignVector x(n);
    auto dfs = [&](auto&& self, int depth, std::size_t code) -> void {
        if (depth == n) {
            out.push_back({codes, labels, false, {}});
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (x.e[i] != 0) continue;
            for (int s : {+1, -1}) {
                std::size_t next = code + std::size_t(s == 1 ? 1 : 2) * pow3(i);
                x.e[i] = std::int8_t(s);
                codes.push_back(next);
                labels.push_back(l.label[next]);
                self(self, depth + 1, next);
                labels.pop_back();
                codes.pop_back();
                x.e[i] = 0;
            }
        }
    };
    dfs(dfs, 0, 0);
}

} // namespace

FanCircuit fan_symmetric_circuit(const FanLabeling& l) {
    if (l.n < 2) throw InvalidInput("circuit search needs dimension at least 2");
    if (l.n > kCircuitCap)
        throw CapExceeded("circuit search supports dimension at most " +
                          std::to_string(kCircuitCap) + ", got " +
                          std::to_string(l.n));
    LabelingCheck check = validate_labeling(l);
    if (!check.ok) throw InvalidInput("invalid labeling: " + check.reason);

    const int n = l.n;
    std::vector<ChainRecord> chains;
    enumerate_chains(l, chains);

    // Keep the alternating and almost-alternating chains; they are the
    // vertices of the circuit graph.
    std::vector<int> members;
    for (std::size_t id = 0; id < chains.size(); ++id) {
        ChainRecord& rec = chains[id];
        rec.alternating = alternating_labels(rec.labels);
        for (int drop = 0; drop < n; ++drop) {
            std::vector<int> facet;
            for (int i = 0; i < n; ++i)
                if (i != drop) facet.push_back(rec.labels[i]);
            if (alternating_labels(facet)) rec.alt_facets.push_back(drop);
        }
        if (rec.alternating || !rec.alt_facets.empty()) {
            if (rec.alt_facets.size() != 2)
                throw ClaimFailure("a chain in the circuit graph does not have "
                                   "exactly two alternating facets");
            members.push_back(int(id));
        }
    }

    // Two member chains are adjacent when they share an alternating facet.
    std::map<MaximalChain, std::vector<int>> facet_owners;
    for (int id : members) {
        const ChainRecord& rec = chains[id];
        for (int drop : rec.alt_facets) {
            MaximalChain facet;
            for (int i = 0; i < n; ++i)
                if (i != drop) facet.push_back(rec.codes[i]);
            facet_owners[facet].push_back(id);
        }
    }
    for (const auto& [facet, owners] : facet_owners)
        if (owners.size() != 2)
            throw ClaimFailure("an alternating facet is not shared by exactly "
                               "two chains of the circuit graph");

    auto facet_of = [&](int id, int drop) {
        MaximalChain facet;
        for (int i = 0; i < n; ++i)
            if (i != drop) facet.push_back(chains[id].codes[i]);
        return facet;
    };
    auto partner = [&](int id, const MaximalChain& facet) {
        const auto& owners = facet_owners.at(facet);
        return owners[0] == id ? owners[1] : owners[0];
    };

    std::map<MaximalChain, int> member_index;
    for (int id : members) member_index[chains[id].codes] = id;
    auto negated_id = [&](int id) {
        MaximalChain neg = chains[id].codes;
        for (std::size_t& c : neg) c = sv_negate_code(c, n);
        auto it = member_index.find(neg);
        if (it == member_index.end())
            throw ClaimFailure("the negation of a circuit-graph chain left the "
                               "circuit graph");
        return it->second;
    };

    // Walk the circuits; each is recorded once, starting from its smallest
    // member id. Pick the first circuit that negation maps onto itself.
    std::vector<bool> visited(chains.size(), false);
    for (int start : members) {
        if (visited[start]) continue;
        std::vector<int> circuit;
        int cur = start;
        MaximalChain via = facet_of(start, chains[start].alt_facets[0]);
        for (;;) {
            visited[cur] = true;
            circuit.push_back(cur);
            int next = partner(cur, via);
            if (next == start) break;
            MaximalChain f0 = facet_of(next, chains[next].alt_facets[0]);
            via = f0 == via ? facet_of(next, chains[next].alt_facets[1]) : f0;
            cur = next;
        }

        std::vector<int> ids = circuit, neg_ids;
        for (int id : circuit) neg_ids.push_back(negated_id(id));
        std::sort(ids.begin(), ids.end());
        std::sort(neg_ids.begin(), neg_ids.end());
        if (ids != neg_ids) continue;

        FanCircuit result;
        for (int id : circuit) {
            result.chains.push_back(chains[id].codes);
            result.alternating.push_back(chains[id].alternating);
            result.alternating_count += chains[id].alternating ? 1 : 0;
        }
        if (result.alternating_count < 2)
            throw ClaimFailure("the negation-symmetric circuit contains fewer "
                               "than two alternating chains");
        return result;
    }
    throw ClaimFailure("no circuit of the circuit graph is preserved by "
                       "global negation");
}

} // namespace kneser
