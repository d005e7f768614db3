#include "kneser/alternation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

constexpr int kPermCap = 8;

void validate_perm(const Hypergraph& h, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != h.n)
        throw InvalidInput("alternation: permutation size mismatch");
    std::uint64_t seen = 0;
    for (int v : sigma) {
        if (v < 0 || v >= h.n || (seen >> v) & 1)
            throw InvalidInput("alternation: not a permutation");
        seen |= 1ULL << v;
    }
}

// Depth-first scan over sign vectors in sigma order. Supports are vertex
// masks; a branch dies the moment a support swallows an edge, which only
// needs the edges through the vertex just added.
class AltScan {
  public:
    AltScan(const Hypergraph& h, const std::vector<int>& sigma)
        : sigma_(sigma), n_(h.n) {
        edges_at_.resize(n_);
        for (std::uint64_t em : h.edges) {
            std::uint64_t m = em;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                edges_at_[v].push_back(em);
            }
        }
        x_.e.assign(n_, 0);
    }

    // Max alternation; stops once `abort_at` is reached (pass n+1 to disable).
    AltResult max_alt(int abort_at) {
        best_ = 0;
        witness_.e.assign(n_, 0);
        abort_at_ = abort_at;
        dfs_max(0, 0, 0, 0, 0);
        return {best_, witness_};
    }

    // First edge-free vector with alternation exactly `value` and support
    // bigger than `value`.
    std::optional<SignVector> oversized(int value) {
        target_ = value;
        found_.reset();
        dfs_over(0, 0, 0, 0, 0, 0);
        return found_;
    }

  private:
    bool gains_edge(std::uint64_t support, int v) const {
        for (std::uint64_t em : edges_at_[v])
            if ((em & ~support) == 0) return true;
        return false;
    }

    void dfs_max(int i, std::uint64_t pos, std::uint64_t neg, int alt, int last) {
        if (best_ >= abort_at_) return;
        if (alt + (n_ - i) <= best_) return;
        if (i == n_) {
            best_ = alt;
            witness_ = x_;
            return;
        }
        int v = sigma_[i];
        std::uint64_t b = 1ULL << v;
        // Opposite sign first: alternating vectors surface early, which makes
        // the abort threshold bite sooner.
        int first = last == 1 ? -1 : 1;
        for (int s : {first, -first}) {
            std::uint64_t ns = s == 1 ? pos | b : neg | b;
            if (gains_edge(ns, v)) continue;
            x_.e[i] = static_cast<std::int8_t>(s);
            dfs_max(i + 1, s == 1 ? ns : pos, s == 1 ? neg : ns,
                    last == s ? alt : alt + 1, s);
            x_.e[i] = 0;
        }
        dfs_max(i + 1, pos, neg, alt, last);
    }

    void dfs_over(int i, std::uint64_t pos, std::uint64_t neg, int alt,
                  int size, int last) {
        if (found_) return;
        if (alt > target_) return;
        if (alt + (n_ - i) < target_) return;
        if (size + (n_ - i) <= target_) return;
        if (i == n_) {
            if (alt == target_ && size > target_) found_ = x_;
            return;
        }
        int v = sigma_[i];
        std::uint64_t b = 1ULL << v;
        int first = last == 1 ? -1 : 1;
        for (int s : {first, -first}) {
            std::uint64_t ns = s == 1 ? pos | b : neg | b;
            if (gains_edge(ns, v)) continue;
            x_.e[i] = static_cast<std::int8_t>(s);
            dfs_over(i + 1, s == 1 ? ns : pos, s == 1 ? neg : ns,
                     last == s ? alt : alt + 1, size + 1, s);
            x_.e[i] = 0;
        }
        dfs_over(i + 1, pos, neg, alt, size, last);
    }

    const std::vector<int>& sigma_;
    int n_;
    std::vector<std::vector<std::uint64_t>> edges_at_;
    SignVector x_;
    SignVector witness_;
    std::optional<SignVector> found_;
    int best_ = 0;
    int abort_at_ = 0;
    int target_ = 0;
};

} // namespace

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

AltResult alt_sigma(const Hypergraph& h, const std::vector<int>& sigma) {
    validate_perm(h, sigma);
    return AltScan(h, sigma).max_alt(h.n + 1);
}

AltResult alt_identity(const Hypergraph& h) {
    return alt_sigma(h, identity_perm(h.n));
}

AltMinResult alt_min_exact(const Hypergraph& h) {
    if (h.n > kPermCap)
        throw CapExceeded("alt_min_exact: n = " + std::to_string(h.n) +
                          " exceeds the permutation-search cap " +
                          std::to_string(kPermCap));
    AltMinResult res;
    res.sigma = identity_perm(h.n);
    res.value = alt_identity(h).value;
    res.exact = true;
    std::vector<int> perm = identity_perm(h.n);
    while (std::next_permutation(perm.begin(), perm.end())) {
        AltScan scan(h, perm);
        auto r = scan.max_alt(res.value);
        if (r.value < res.value) {
            res.value = r.value;
            res.sigma = perm;
        }
    }
    return res;
}

AltMinResult alt_min_heuristic(const Hypergraph& h, int samples, Rng& rng) {
    AltMinResult res;
    res.sigma = identity_perm(h.n);
    res.value = alt_identity(h).value;
    res.exact = false;
    std::vector<int> perm = identity_perm(h.n);
    for (int i = 0; i < samples; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        AltScan scan(h, perm);
        auto r = scan.max_alt(res.value);
        if (r.value < res.value) {
            res.value = r.value;
            res.sigma = perm;
        }
    }
    return res;
}

bool is_nice_with(const Hypergraph& h, int chi, const std::vector<int>& sigma) {
    validate_perm(h, sigma);
    if (h.has_singleton()) return false;
    int target = h.n - chi;
    if (target < 0) return false;
    AltScan scan(h, sigma);
    if (scan.max_alt(target + 1).value != target) return false;
    return !scan.oversized(target).has_value();
}

NicenessResult check_nice(const Hypergraph& h, int chi) {
    NicenessResult res;
    if (h.has_singleton()) return res;
    auto id = identity_perm(h.n);
    if (is_nice_with(h, chi, id)) {
        res.nice = true;
        res.sigma = id;
        res.alt_value = h.n - chi;
        return res;
    }
    if (h.n > kPermCap)
        throw CapExceeded("check_nice: identity failed and n = " +
                          std::to_string(h.n) +
                          " exceeds the permutation-search cap " +
                          std::to_string(kPermCap));
    std::vector<int> perm = identity_perm(h.n);
    while (std::next_permutation(perm.begin(), perm.end())) {
        if (is_nice_with(h, chi, perm)) {
            res.nice = true;
            res.sigma = perm;
            res.alt_value = h.n - chi;
            return res;
        }
    }
    return res;
}

std::optional<SignVector> oversized_alt_vector(const Hypergraph& h,
                                               const std::vector<int>& sigma,
                                               int value) {
    validate_perm(h, sigma);
    return AltScan(h, sigma).oversized(value);
}

SignVector trim_to_alt(const SignVector& x) {
    SignVector out = x;
    int last = 0;
    for (auto& e : out.e) {
        if (e == 0) continue;
        if (e == last) {
            e = 0;
        } else {
            last = e;
        }
    }
    return out;
}

} // namespace kneser
