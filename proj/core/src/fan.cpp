#include <kneser/fan.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>

#include <kneser/errors.hpp>

namespace kneser {

namespace {

constexpr int kValidateCap = 8;
constexpr int kChainCap = 7;

void check_shape(const FanLabeling& l, int cap, const char* what) {
    if (l.n < 1)
        throw InvalidInput("labeling dimension must be positive");
    if (l.n > cap)
        throw CapExceeded(std::string(what) + " supports dimension at most " +
                          std::to_string(cap) + ", got " + std::to_string(l.n));
    if (l.m < 1)
        throw InvalidInput("label bound m must be positive");
    if (l.label.size() != pow3(l.n))
        throw InvalidInput("label table has wrong size for dimension " +
                           std::to_string(l.n));
}

// Sorted by magnitude, the labels must alternate in sign starting negative.
bool negative_alternating(std::vector<int>& labels) {
    std::sort(labels.begin(), labels.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0 && std::abs(labels[i]) == std::abs(labels[i - 1])) return false;
        if ((labels[i] < 0) != (i % 2 == 0)) return false;
    }
    return true;
}

// Calls f with the code of every vector strictly comparable with x: first the
// vectors below x (nonzero proper sub-support patterns), then those above
// (proper extensions of x by nonzero entries).
template <typename F>
void for_each_comparable(const SignVector& x, F&& f) {
    const int n = x.n();
    std::uint64_t supp = x.plus_mask() | x.minus_mask();
    std::size_t code = sv_encode(x);
    std::vector<std::size_t> contrib(n, 0);
    for (int i = 0; i < n; ++i)
        if (x.e[i] != 0) contrib[i] = std::size_t(x.e[i] == 1 ? 1 : 2) * pow3(i);

    for (std::uint64_t sub = (supp - 1) & supp; sub != 0; sub = (sub - 1) & supp) {
        std::size_t c = 0;
        for (std::uint64_t b = sub; b != 0; b &= b - 1) c += contrib[std::countr_zero(b)];
        f(c);
    }

    std::vector<int> zeros;
    for (int i = 0; i < n; ++i)
        if (x.e[i] == 0) zeros.push_back(i);
    // DFS over the zero positions; skip the empty extension (x itself).
    auto extend = [&](auto&& self, std::size_t z, std::size_t c, bool changed) -> void {
        if (z == zeros.size()) {
            if (changed) f(c);
            return;
        }
        std::size_t p = pow3(zeros[z]);
        self(self, z + 1, c, changed);
        self(self, z + 1, c + p, true);
        self(self, z + 1, c + 2 * p, true);
    };
    extend(extend, 0, code, false);
}

} // namespace

LabelingCheck validate_labeling(const FanLabeling& l) {
    check_shape(l, kValidateCap, "validate_labeling");
    const std::size_t total = pow3(l.n);
    LabelingCheck check;

    for (std::size_t c = 1; c < total; ++c) {
        int v = l.label[c];
        if (v == 0 || std::abs(v) > l.m) {
            check.ok = false;
            check.reason = "label out of range";
            check.x = sv_decode(c, l.n);
            return check;
        }
        SignVector x = sv_decode(c, l.n);
        if (l.label[sv_encode(x.negated())] != -v) {
            check.ok = false;
            check.reason = "labeling is not antipodal";
            check.x = x;
            check.y = x.negated();
            return check;
        }
    }

    for (std::size_t c = 1; c < total; ++c) {
        SignVector y = sv_decode(c, l.n);
        int vy = l.label[c];
        bool bad = false;
        for_each_comparable(y, [&](std::size_t other) {
            if (!bad && l.label[other] == -vy) {
                check.x = sv_decode(other, l.n);
                bad = true;
            }
        });
        if (bad) {
            check.ok = false;
            check.reason = "complementary labels on a comparable pair";
            check.y = y;
            if (!check.x.below(check.y)) std::swap(check.x, check.y);
            return check;
        }
    }
    return check;
}

FanLabeling first_sign_labeling(int n) {
    if (n < 1) throw InvalidInput("labeling dimension must be positive");
    FanLabeling l;
    l.n = n;
    l.m = n;
    l.label.assign(pow3(n), 0);
    for (std::size_t c = 1; c < l.label.size(); ++c) {
        SignVector x = sv_decode(c, n);
        int first = 0;
        for (int i = 0; i < n && first == 0; ++i) first = x.e[i];
        l.label[c] = first * x.support_size();
    }
    return l;
}

namespace {

struct ChainCounter {
    const FanLabeling& l;
    int n;
    std::uint64_t count = 0;
    SignVector x;
    std::vector<int> labels;
    std::uint64_t seen_magnitudes = 0;

    explicit ChainCounter(const FanLabeling& labeling)
        : l(labeling), n(labeling.n), x(labeling.n) {}

    void dfs(int depth, std::size_t code) {
        if (depth == n) {
            std::vector<int> copy = labels;
            if (negative_alternating(copy)) ++count;
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (x.e[i] != 0) continue;
            for (int s : {+1, -1}) {
                std::size_t next = code + std::size_t(s == 1 ? 1 : 2) * pow3(i);
                int v = l.label[next];
                std::uint64_t bit = 1ULL << std::abs(v);
                if (seen_magnitudes & bit) continue;
                x.e[i] = std::int8_t(s);
                seen_magnitudes |= bit;
                labels.push_back(v);
                dfs(depth + 1, next);
                labels.pop_back();
                seen_magnitudes &= ~bit;
                x.e[i] = 0;
            }
        }
    }
};

} // namespace

std::uint64_t count_negative_alternating_chains(const FanLabeling& l) {
    check_shape(l, kChainCap, "count_negative_alternating_chains");
    if (l.m > 63) throw CapExceeded("label bound m must be at most 63");
    ChainCounter counter(l);
    counter.dfs(0, 0);
    return counter.count;
}

FanLabeling random_valid_labeling(int n, int m, int changes, Rng& rng) {
    if (n < 1 || n > kValidateCap)
        throw InvalidInput("dimension must be between 1 and " +
                           std::to_string(kValidateCap));
    if (m < n)
        throw InvalidInput("label bound m must be at least the dimension");
    if (changes < 0) throw InvalidInput("number of changes must be nonnegative");

    FanLabeling l = first_sign_labeling(n);
    l.m = m;
    const std::size_t total = pow3(n);

    std::uniform_int_distribution<std::size_t> pick_code(1, total - 1);
    std::uniform_int_distribution<int> pick_mag(1, m);
    std::uniform_int_distribution<int> pick_sign(0, 1);

    for (int step = 0; step < changes; ++step) {
        std::size_t c = pick_code(rng);
        int v = pick_mag(rng) * (pick_sign(rng) == 0 ? 1 : -1);
        SignVector x = sv_decode(c, n);
        bool ok = true;
        for_each_comparable(x, [&](std::size_t other) {
            if (l.label[other] == -v) ok = false;
        });
        if (!ok) continue;
        l.label[c] = v;
        l.label[sv_encode(x.negated())] = -v;
    }
    return l;
}

} // namespace kneser
