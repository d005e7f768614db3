#include <kneser/chen.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>

#include <kneser/errors.hpp>

namespace kneser {

namespace {

constexpr int kDimensionCap = 13;

int target(int i) { return i % 2 == 0 ? i : -i; }

int support_of_code(std::size_t c) {
    int s = 0;
    while (c) {
        if (c % 3) ++s;
        c /= 3;
    }
    return s;
}

template <typename F>
void for_each_down_cover(std::size_t c, int n, F&& f) {
    std::size_t rem = c;
    for (int i = 0; i < n; ++i) {
        std::size_t digit = rem % 3;
        rem /= 3;
        if (digit) f(c - digit * pow3(i));
    }
}

template <typename F>
void for_each_up_cover(std::size_t c, int n, F&& f) {
    std::size_t rem = c;
    for (int i = 0; i < n; ++i) {
        std::size_t digit = rem % 3;
        rem /= 3;
        if (digit == 0) {
            f(c + pow3(i));
            f(c + 2 * pow3(i));
        }
    }
}

void validate_labels(int n, const std::vector<int>& labels, int gamma) {
    if (n < 1) throw InvalidInput("dimension must be positive");
    if (n > kDimensionCap)
        throw CapExceeded("chain search supports dimension at most " +
                          std::to_string(kDimensionCap) + ", got " +
                          std::to_string(n));
    if (labels.size() != pow3(n))
        throw InvalidInput("label table has wrong size for dimension " +
                           std::to_string(n));
    if (gamma != 0 && (gamma < 1 || gamma > n))
        throw InvalidInput("gamma must lie in [1, n]");

    const std::size_t total = pow3(n);
    for (std::size_t c = 1; c < total; ++c) {
        int v = labels[c];
        if (v == 0 || std::abs(v) > n)
            throw InvalidInput("labels must be nonzero with magnitude at most n");
        if (labels[sv_negate_code(c, n)] != -v)
            throw InvalidInput("labels must be antipodal");
    }
    // Checking cover pairs suffices: the magnitude is nondecreasing along any
    // saturated chain, so a violation between distant comparable vectors
    // already shows up on some cover pair.
    for (std::size_t c = 1; c < total; ++c) {
        int vy = labels[c];
        for_each_down_cover(c, n, [&](std::size_t d) {
            if (d == 0) return;
            int vx = labels[d];
            if (vx != vy && std::abs(vx) >= std::abs(vy))
                throw InvalidInput("labels are not order-preserving");
            if (gamma != 0 && std::abs(vx) == gamma && std::abs(vy) == gamma)
                throw InvalidInput(
                    "comparable pair carries two labels of magnitude gamma");
        });
    }
}

struct AlignedChainTables {
    std::vector<std::uint64_t> down, up;

    AlignedChainTables(int n, const std::vector<int>& labels,
                       const std::vector<std::vector<std::size_t>>& by_support) {
        const std::size_t total = pow3(n);
        down.assign(total, 0);
        up.assign(total, 0);
        for (int k = 1; k <= n; ++k) {
            for (std::size_t c : by_support[k]) {
                if (labels[c] != target(k)) continue;
                if (k == 1) {
                    down[c] = 1;
                } else {
                    std::uint64_t sum = 0;
                    for_each_down_cover(c, n, [&](std::size_t d) { sum += down[d]; });
                    down[c] = sum;
                }
            }
        }
        for (int k = n; k >= 1; --k) {
            for (std::size_t c : by_support[k]) {
                if (labels[c] != target(k)) continue;
                if (k == n) {
                    up[c] = 1;
                } else {
                    std::uint64_t sum = 0;
                    for_each_up_cover(c, n, [&](std::size_t w) { sum += up[w]; });
                    up[c] = sum;
                }
            }
        }
    }

    std::uint64_t through(std::size_t c) const { return down[c] * up[c]; }

    // Chain through c with the aligned label pattern, smallest codes first at
    // every step. Assumes through(c) > 0.
    std::vector<std::size_t> extract(std::size_t c, int k, int n) const {
        std::vector<std::size_t> chain(n, 0);
        chain[k - 1] = c;
        std::size_t cur = c;
        for (int i = k - 1; i >= 1; --i) {
            std::size_t best = 0;
            for_each_down_cover(cur, n, [&](std::size_t d) {
                if (down[d] > 0 && (best == 0 || d < best)) best = d;
            });
            chain[i - 1] = best;
            cur = best;
        }
        cur = c;
        for (int i = k + 1; i <= n; ++i) {
            std::size_t best = 0;
            for_each_up_cover(cur, n, [&](std::size_t w) {
                if (up[w] > 0 && (best == 0 || w < best)) best = w;
            });
            chain[i - 1] = best;
            cur = best;
        }
        return chain;
    }
};

std::vector<std::vector<std::size_t>> codes_by_support(int n) {
    std::vector<std::vector<std::size_t>> by_support(n + 1);
    const std::size_t total = pow3(n);
    for (std::size_t c = 1; c < total; ++c)
        by_support[support_of_code(c)].push_back(c);
    return by_support;
}

} // namespace

ChainPair chen_chain_pair(int n, const std::vector<int>& labels, int gamma) {
    if (gamma < 1) throw InvalidInput("gamma must lie in [1, n]");
    validate_labels(n, labels, gamma);
    auto by_support = codes_by_support(n);

    AlignedChainTables first(n, labels, by_support);
    std::size_t z = 0;
    for (std::size_t c = 1; c < pow3(n); ++c) {
        if (std::abs(labels[c]) != gamma) continue;
        if (first.through(c) % 2 == 1) {
            z = c;
            break;
        }
    }
    if (z == 0)
        throw ClaimFailure(
            "no vector of magnitude gamma lies on an odd number of aligned chains");

    ChainPair cp;
    cp.gamma = gamma;
    cp.z = z;
    cp.xs = first.extract(z, gamma, n);

    std::size_t nz = sv_negate_code(z, n);
    std::vector<int> flipped = labels;
    flipped[z] = -labels[z];
    flipped[nz] = -labels[nz];
    AlignedChainTables second(n, flipped, by_support);
    if (second.through(nz) == 0)
        throw ClaimFailure("flipping the labels at the found pair removed every "
                           "aligned chain through its negation");
    cp.ys = second.extract(nz, gamma, n);
    return cp;
}

ChainPair chen_chain_pair(const FanLabeling& l, int gamma) {
    if (l.m != l.n)
        throw InvalidInput("the chain construction needs labels of magnitude "
                           "at most n, so m must equal n");
    return chen_chain_pair(l.n, l.label, gamma);
}

bool chain_pair_valid(int n, const std::vector<int>& labels, int gamma,
                      const ChainPair& cp) {
    if (n < 1 || labels.size() != pow3(n)) return false;
    if (gamma < 1 || gamma > n || cp.gamma != gamma) return false;
    if (cp.xs.size() != std::size_t(n) || cp.ys.size() != std::size_t(n))
        return false;
    if (cp.xs[gamma - 1] != cp.z) return false;
    if (cp.ys[gamma - 1] != sv_negate_code(cp.z, n)) return false;

    for (const auto* chain : {&cp.xs, &cp.ys}) {
        for (int i = 0; i < n; ++i) {
            std::size_t c = (*chain)[i];
            if (c == 0 || c >= pow3(n)) return false;
            if (support_of_code(c) != i + 1) return false;
            if (i > 0 && !sv_decode((*chain)[i - 1], n).below(sv_decode(c, n)))
                return false;
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (labels[cp.xs[i - 1]] != target(i)) return false;
        int want = i == gamma ? -target(i) : target(i);
        if (labels[cp.ys[i - 1]] != want) return false;
    }
    return true;
}

std::uint64_t count_aligned_chains(int n, const std::vector<int>& labels) {
    validate_labels(n, labels, 0);
    auto by_support = codes_by_support(n);
    AlignedChainTables tables(n, labels, by_support);
    std::uint64_t total = 0;
    for (std::size_t c : by_support[n]) total += tables.down[c];
    return total;
}

} // namespace kneser
