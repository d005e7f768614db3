#include "kneser/circular.hpp"

#include <bit>
#include <numeric>

#include "kneser/chromatic.hpp"
#include "kneser/errors.hpp"

namespace kneser {

Rational Rational::reduced(long long p, long long q) {
    if (p <= 0 || q <= 0) throw InvalidInput("Rational: needs positive p, q");
    long long g = std::gcd(p, q);
    return Rational{p / g, q / g};
}

std::string Rational::str() const {
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
}

namespace {

// Backtracking (p,q)-coloring. Domains are 64-bit masks over residues, so
// p <= 64; every candidate with chi <= 64 fits. Vertex 0 is pinned to color 0
// (circular colorings are closed under rotation).
class PqSearch {
  public:
    PqSearch(const Graph& g, int p, int q)
        : g_(g), p_(p), color_(g.m, -1), domain_(g.m) {
        std::uint64_t full = p == 64 ? ~0ULL : (1ULL << p) - 1;
        for (auto& d : domain_) d = full;
        // conflict_[c] = colors at circular distance < q from c
        conflict_.resize(p);
        for (int c = 0; c < p; ++c) {
            std::uint64_t m = 0;
            for (int d = 0; d < p; ++d) {
                int diff = (c - d + p) % p;
                diff = std::min(diff, p - diff);
                if (diff < q) m |= 1ULL << d;
            }
            conflict_[c] = m;
        }
    }

    bool run(std::vector<int>* out) {
        if (!assign(0, 0)) return false;
        if (!dfs(1)) return false;
        if (out) *out = color_;
        return true;
    }

  private:
    bool assign(int v, int c) {
        color_[v] = c;
        bool ok = true;
        g_.adj[v].for_each([&](int u) {
            if (color_[u] < 0) {
                domain_[u] &= ~conflict_[c];
                if (domain_[u] == 0) ok = false;
            }
        });
        return ok;
    }

    void unassign(int v, const std::vector<std::uint64_t>& saved) {
        color_[v] = -1;
        domain_ = saved;
    }

    bool dfs(int depth) {
        if (depth == g_.m) return true;
        // most-constrained uncolored vertex
        int v = -1;
        int best = p_ + 1;
        for (int u = 0; u < g_.m; ++u) {
            if (color_[u] >= 0) continue;
            int d = mask_count(domain_[u]);
            if (d < best) { best = d; v = u; }
        }
        std::uint64_t dom = domain_[v];
        while (dom) {
            int c = std::countr_zero(dom);
            dom &= dom - 1;
            auto saved = domain_;
            if (assign(v, c) && dfs(depth + 1)) return true;
            unassign(v, saved);
        }
        return false;
    }

    const Graph& g_;
    int p_;
    std::vector<int> color_;
    std::vector<std::uint64_t> domain_;
    std::vector<std::uint64_t> conflict_;
};

} // namespace

bool pq_colorable(const Graph& g, int p, int q, std::vector<int>* out) {
    if (p < 1 || q < 1) throw InvalidInput("pq_colorable: needs p, q >= 1");
    if (p > 64) throw CapExceeded("pq_colorable: p > 64 unsupported");
    if (p < 2 * q) return g.edge_count() == 0;
    return PqSearch(g, p, q).run(out);
}

CircularResult circular_chromatic_number(const Graph& g) {
    CircularResult res;
    if (g.m == 0) throw InvalidInput("circular_chromatic_number: empty graph");
    if (g.edge_count() == 0) {
        res.value = Rational{1, 1};
        res.witness.t = 1;
        res.witness.color.assign(g.m, 0);
        return res;
    }
    auto [chi, chi_witness] = chromatic_number(g);
    // chi-1 < chi_c <= chi, and chi_c = p/q in lowest terms has q <= |V|.
    Rational best{chi, 1};
    std::vector<int> best_colors(chi_witness.color);
    // The chi-coloring is a (chi,1)-coloring as is.
    Rational refuted{chi - 1, 1}; // largest value known not colorable
    for (long long q = 1; q <= g.m; ++q) {
        for (long long p = (chi - 1) * q + 1; p <= chi * q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational cand{p, q};
            if (!(cand < best)) continue;          // cannot improve
            if (!(refuted < cand)) continue;       // dominated by a refutation
            std::vector<int> colors;
            if (pq_colorable(g, static_cast<int>(p), static_cast<int>(q), &colors)) {
                best = cand;
                best_colors = std::move(colors);
            } else if (refuted < cand) {
                refuted = cand;
            }
        }
    }
    res.value = best;
    res.witness.t = static_cast<int>(best.p);
    res.witness.color = best_colors;
    return res;
}

} // namespace kneser
