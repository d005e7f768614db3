#include "kneser/colorful.hpp"

#include <algorithm>
#include <bit>

#include "kneser/errors.hpp"
#include "kneser/xind.hpp"

namespace kneser {

namespace {

bool is_partition(int t, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<bool> seen(t + 1, false);
    for (int c : a) {
        if (c < 1 || c > t || seen[c]) return false;
        seen[c] = true;
    }
    for (int c : b) {
        if (c < 1 || c > t || seen[c]) return false;
        seen[c] = true;
    }
    return std::all_of(seen.begin() + 1, seen.end(), [](bool x) { return x; });
}

// One vertex per color, drawn from the vertices whose mask bit is set.
std::vector<int> pick_per_color(const Coloring& c, std::uint64_t mask,
                                const std::vector<int>& colors) {
    std::vector<int> out;
    for (int want : colors) {
        int found = -1;
        std::uint64_t m = mask;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (c.color[v] == want) {
                found = v;
                break;
            }
        }
        if (found < 0)
            throw ClaimFailure("colorful_klm_extract: chain top misses a "
                               "color");
        out.push_back(found);
    }
    return out;
}

} // namespace

bool colorful_klm_valid(const Graph& g, const Coloring& c,
                        const std::vector<int>& color_side_i,
                        const std::vector<int>& color_side_j,
                        const ColorfulKlm& w) {
    if (!c.proper_on(g)) return false;
    if (w.side_a.size() != color_side_i.size() ||
        w.side_b.size() != color_side_j.size())
        return false;
    if (w.colors_a.size() != w.side_a.size() ||
        w.colors_b.size() != w.side_b.size())
        return false;
    std::vector<bool> used(g.m, false);
    for (int v : w.side_a) {
        if (v < 0 || v >= g.m || used[v]) return false;
        used[v] = true;
    }
    for (int v : w.side_b) {
        if (v < 0 || v >= g.m || used[v]) return false;
        used[v] = true;
    }
    for (std::size_t i = 0; i < w.side_a.size(); ++i)
        if (c.color[w.side_a[i]] != w.colors_a[i]) return false;
    for (std::size_t i = 0; i < w.side_b.size(); ++i)
        if (c.color[w.side_b[i]] != w.colors_b[i]) return false;
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(w.colors_a) != sorted(color_side_i)) return false;
    if (sorted(w.colors_b) != sorted(color_side_j)) return false;
    for (int a : w.side_a)
        for (int b : w.side_b)
            if (!g.adjacent(a, b)) return false;
    return true;
}

ColorfulKlm colorful_klm_extract(const Graph& g, const Coloring& c,
                                 const std::vector<int>& color_side_i,
                                 const std::vector<int>& color_side_j,
                                 const HomK2& hom) {
    int t = c.t;
    if (static_cast<int>(c.color.size()) != g.m)
        throw InvalidInput("colorful_klm_extract: coloring size mismatch");
    if (!c.proper_on(g))
        throw InvalidInput("colorful_klm_extract: coloring is not proper");
    if (!c.surjective())
        throw InvalidInput("colorful_klm_extract: coloring must use every "
                           "color");
    if (!is_partition(t, color_side_i, color_side_j))
        throw InvalidInput("colorful_klm_extract: sides must partition the "
                           "colors");

    std::vector<int> is = color_side_i, js = color_side_j;
    std::sort(is.begin(), is.end());
    std::sort(js.begin(), js.end());

    ColorfulKlm w;
    std::uint64_t all = (g.m == 64) ? ~0ULL : (1ULL << g.m) - 1;
    if (is.empty() || js.empty()) {
        const auto& full = is.empty() ? js : is;
        auto verts = pick_per_color(c, all, full);
        if (is.empty()) {
            w.side_b = verts;
            w.colors_b = full;
        } else {
            w.side_a = verts;
            w.colors_a = full;
        }
        return w;
    }

    // Rename colors to ladder levels so the smallest of I becomes 0 and the
    // smallest of J becomes 1; the chain lemma is stated for that
    // normalization.
    std::vector<int> rho(t + 1);
    {
        int next = 2;
        for (int col = 1; col <= t; ++col) {
            if (col == is[0]) rho[col] = 0;
            else if (col == js[0]) rho[col] = 1;
            else rho[col] = next++;
        }
    }
    std::vector<bool> in_i(t, false);
    for (int col : is) in_i[rho[col]] = true;

    LadderMap phi{t - 2, std::vector<int>(hom.poset.size)};
    for (int e = 0; e < hom.poset.size; ++e) {
        auto [a, b] = hom.elements[e];
        int maxcol = -1;
        bool on_a = false;
        for (std::uint64_t m = a | b; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int col = rho[c.color[v]];
            if (col > maxcol) {
                maxcol = col;
                on_a = (a >> v) & 1;
            }
        }
        phi.label[e] = on_a ? maxcol : -maxcol;
    }

    std::vector<int> eps(t - 1);
    for (int i = 1; i <= t - 1; ++i) eps[i - 1] = in_i[i] ? 1 : -1;

    auto chain = prescribed_alternating_chain(hom.poset, phi, eps);
    auto [atop, btop] = hom.elements[chain.back()];

    // The chain top must be colored by exactly I on the A side and J on the
    // B side (after renaming, but the renaming is a bijection).
    auto colors_of = [&](std::uint64_t mask) {
        std::vector<int> cols;
        for (std::uint64_t m = mask; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            cols.push_back(c.color[v]);
        }
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        return cols;
    };
    if (colors_of(atop) != is || colors_of(btop) != js)
        throw ClaimFailure("colorful_klm_extract: chain top does not split "
                           "the colors as prescribed");

    w.side_a = pick_per_color(c, atop, is);
    w.colors_a = is;
    w.side_b = pick_per_color(c, btop, js);
    w.colors_b = js;
    for (int e : chain) w.chain.push_back(hom.elements[e]);
    return w;
}

} // namespace kneser
