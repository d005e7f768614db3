#include <kneser/product_labeling.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

#include <kneser/alternation.hpp>
#include <kneser/chen.hpp>
#include <kneser/chromatic.hpp>
#include <kneser/errors.hpp>
#include <kneser/families.hpp>

namespace kneser {

namespace {

constexpr int kLabelDimensionCap = 13;

int first_edge_within(const Hypergraph& h, std::uint64_t mask) {
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        if ((h.edges[i] & mask) == h.edges[i]) return int(i);
    return -1;
}

// Per-factor lookup tables over the factor's own sign vectors. a_bits has
// bit 0 set when the + support contains an edge and bit 1 for the - support;
// free_alt is the best alternation of an edge-free vector below the index.
struct BlockTables {
    std::vector<std::uint8_t> a_bits;
    std::vector<std::int8_t> alt, support;
    std::vector<std::int8_t> free_alt;
    std::vector<std::uint64_t> plus, minus;
};

BlockTables make_block_tables(const Hypergraph& h) {
    const int nj = h.n;
    const std::size_t total = pow3(nj);
    BlockTables bt;
    bt.a_bits.assign(total, 0);
    bt.alt.assign(total, 0);
    bt.support.assign(total, 0);
    bt.free_alt.assign(total, 0);
    bt.plus.assign(total, 0);
    bt.minus.assign(total, 0);
    for (std::size_t c = 0; c < total; ++c) {
        SignVector x = sv_decode(c, nj);
        std::uint64_t p = x.plus_mask(), m = x.minus_mask();
        bt.plus[c] = p;
        bt.minus[c] = m;
        bt.alt[c] = std::int8_t(alt_of(x));
        bt.support[c] = std::int8_t(x.support_size());
        std::uint8_t a = 0;
        for (std::uint64_t e : h.edges) {
            if ((e & p) == e) a |= 1;
            if ((e & m) == e) a |= 2;
            if (a == 3) break;
        }
        bt.a_bits[c] = a;
        // Down covers have smaller indices, so one ascending pass suffices.
        int best = a == 0 ? bt.alt[c] : -1;
        std::size_t rem = c;
        for (int i = 0; i < nj; ++i) {
            std::size_t digit = rem % 3;
            rem /= 3;
            if (digit)
                best = std::max(best, int(bt.free_alt[c - digit * pow3(i)]));
        }
        bt.free_alt[c] = std::int8_t(best);
    }
    return bt;
}

struct LambdaEvaluator {
    const ProductLabelingContext& ctx;
    std::vector<BlockTables> bt;
    std::vector<std::size_t> block_div, block_size;
    std::vector<std::vector<std::uint64_t>> vmask; // per product vertex, per factor

    explicit LambdaEvaluator(const ProductLabelingContext& c) : ctx(c) {
        for (int j = 0; j < ctx.s; ++j) {
            bt.push_back(make_block_tables(ctx.hs[j]));
            block_div.push_back(pow3(ctx.offset[j]));
            block_size.push_back(pow3(ctx.hs[j].n));
        }
        vmask.resize(ctx.product.m);
        for (int v = 0; v < ctx.product.m; ++v) {
            const auto& tuple = ctx.product.tuple_labels[v];
            for (int j = 0; j < ctx.s; ++j)
                vmask[v].push_back(ctx.factors[j].edge_labels[tuple[j]]);
        }
    }

    std::size_t block_code(std::size_t code, int j) const {
        return (code / block_div[j]) % block_size[j];
    }

    int value(std::size_t code) const {
        std::uint8_t meet = 3;
        for (int j = 0; j < ctx.s; ++j) meet &= bt[j].a_bits[block_code(code, j)];
        return meet == 0 ? case_one(code) : case_two(code, meet);
    }

    int case_one(std::size_t code) const {
        int v = 0, one_sided_sign = 0;
        for (int j = 0; j < ctx.s; ++j) {
            std::size_t c = block_code(code, j);
            switch (bt[j].a_bits[c]) {
                case 0: v += bt[j].alt[c]; break;
                case 3: v += bt[j].support[c]; break;
                default:
                    v += 1 + bt[j].free_alt[c];
                    if (one_sided_sign == 0)
                        one_sided_sign = bt[j].a_bits[c] == 1 ? 1 : -1;
            }
        }
        int sign = one_sided_sign;
        if (sign == 0) {
            std::size_t rem = code;
            while (rem % 3 == 0) rem /= 3;
            sign = rem % 3 == 1 ? 1 : -1;
        }
        if (v > ctx.n - ctx.t)
            throw ClaimFailure("a vector without a common edge sign got a "
                               "magnitude above n - t");
        return sign * v;
    }

    int case_two(std::size_t code, std::uint8_t meet) const {
        int best_plus = -1, best_minus = -1;
        for (int v = 0; v < ctx.product.m; ++v) {
            bool okp = meet & 1, okm = meet & 2;
            for (int j = 0; j < ctx.s && (okp || okm); ++j) {
                std::uint64_t e = vmask[v][j];
                std::size_t c = block_code(code, j);
                if (okp && (e & ~bt[j].plus[c])) okp = false;
                if (okm && (e & ~bt[j].minus[c])) okm = false;
            }
            if (okp) best_plus = std::max(best_plus, ctx.coloring.color[v]);
            if (okm) best_minus = std::max(best_minus, ctx.coloring.color[v]);
        }
        if (((meet & 1) && best_plus < 1) || ((meet & 2) && best_minus < 1))
            throw ClaimFailure("per-block edges did not assemble into a "
                               "product vertex inside the common sign");
        if (best_plus == best_minus)
            throw ClaimFailure("both signs carry the same top color under a "
                               "proper coloring");
        int v = ctx.n - ctx.t + std::max(best_plus, best_minus);
        return best_plus > best_minus ? v : -v;
    }
};

void check_label_dimension(int n) {
    if (n > kLabelDimensionCap)
        throw CapExceeded("the labeling table supports dimension at most " +
                          std::to_string(kLabelDimensionCap) + ", got " +
                          std::to_string(n));
}

// Labels for every nonzero sign vector, negation mirrored so antipodality
// holds exactly and each value is computed once.
std::vector<int> fill_labels(const LambdaEvaluator& eval) {
    std::vector<int> label(pow3(eval.ctx.n), 0);
    for (std::size_t c = 1; c < label.size(); ++c) {
        std::size_t neg = sv_negate_code(c, eval.ctx.n);
        label[c] = neg < c ? -label[neg] : eval.value(c);
    }
    return label;
}

} // namespace

ProductLabelingContext ProductLabelingContext::build(
    std::vector<Hypergraph> hs, const std::optional<Coloring>& coloring) {
    if (hs.empty()) throw InvalidInput("the product needs at least one factor");
    ProductLabelingContext ctx;
    ctx.s = int(hs.size());
    for (int j = 0; j < ctx.s; ++j) {
        const Hypergraph& h = hs[j];
        if (h.empty())
            throw InvalidInput("factor " + std::to_string(j + 1) + " has no edges");
        Graph kg = kneser_graph(h);
        int chij = chromatic_number(kg).chi;
        if (!is_nice_with(h, chij, identity_perm(h.n)))
            throw InvalidInput("factor " + std::to_string(j + 1) +
                               " is not nice under its vertex order");
        ctx.chi.push_back(chij);
        ctx.alt.push_back(alt_identity(h).value);
        ctx.factors.push_back(std::move(kg));
    }
    ctx.t = *std::min_element(ctx.chi.begin(), ctx.chi.end());

    int total = 0;
    for (const Hypergraph& h : hs) total += h.n;
    if ((total - ctx.t) % 2 != 0) {
        hs[0].n += 1;
        if (!is_nice_with(hs[0], ctx.chi[0], identity_perm(hs[0].n)))
            throw ClaimFailure("appending a dummy vertex broke the first "
                               "factor's niceness");
        ctx.alt[0] = alt_identity(hs[0]).value;
        ctx.factors[0] = kneser_graph(hs[0]);
        total += 1;
    }
    ctx.n = total;
    ctx.offset.resize(ctx.s);
    for (int j = 1; j < ctx.s; ++j)
        ctx.offset[j] = ctx.offset[j - 1] + hs[j - 1].n;
    ctx.hs = std::move(hs);
    ctx.product = categorical_product(ctx.factors);

    if (coloring) {
        const Coloring& c = *coloring;
        if (c.t != ctx.t)
            throw InvalidInput("the coloring must use t = " +
                               std::to_string(ctx.t) + " colors");
        if (int(c.color.size()) != ctx.product.m)
            throw InvalidInput("the coloring does not match the product size");
        for (int v : c.color)
            if (v < 1 || v > ctx.t)
                throw InvalidInput("colors must lie in [1, t]");
        if (!c.proper_on(ctx.product))
            throw InvalidInput("the coloring is not proper on the product");
        ctx.coloring = c;
    } else {
        int jmin = int(std::min_element(ctx.chi.begin(), ctx.chi.end()) -
                       ctx.chi.begin());
        Coloring base = chromatic_number(ctx.factors[jmin]).witness;
        ctx.coloring.t = ctx.t;
        ctx.coloring.color.resize(ctx.product.m);
        for (int v = 0; v < ctx.product.m; ++v)
            ctx.coloring.color[v] = base.color[ctx.product.tuple_labels[v][jmin]];
    }
    if (!ctx.coloring.surjective())
        throw ClaimFailure("a proper coloring of the product misses a color, "
                           "contradicting the product's chromatic number");
    return ctx;
}

SignVector ProductLabelingContext::block(const SignVector& x, int j) const {
    SignVector b(hs[j].n);
    for (int i = 0; i < hs[j].n; ++i) b.e[i] = x.e[offset[j] + i];
    return b;
}

int ProductLabelingContext::vertex_id(const std::vector<int>& edge_indices) const {
    int id = 0;
    for (int j = 0; j < s; ++j) id = id * factors[j].m + edge_indices[j];
    return id;
}

Hypergraph normalize_nice(const Hypergraph& h) {
    int chi = chromatic_number(kneser_graph(h)).chi;
    NicenessResult res = check_nice(h, chi);
    if (!res.nice) throw InvalidInput("hypergraph is not nice");
    std::vector<std::uint64_t> masks;
    for (std::uint64_t e : h.edges) {
        std::uint64_t out = 0;
        for (int i = 0; i < h.n; ++i)
            if ((e >> res.sigma[i]) & 1) out |= std::uint64_t(1) << i;
        masks.push_back(out);
    }
    return Hypergraph::from_masks(h.n, masks);
}

FanLabeling lambda_from_context(const ProductLabelingContext& ctx) {
    if (ctx.t < 3)
        throw InvalidInput("the labeling needs at least three colors; smaller "
                           "cases use the direct routes");
    check_label_dimension(ctx.n);
    FanLabeling l;
    l.n = ctx.n;
    l.m = ctx.n;
    l.label = fill_labels(LambdaEvaluator(ctx));
    return l;
}

int lambda_value(const ProductLabelingContext& ctx, const SignVector& x) {
    if (ctx.t < 3)
        throw InvalidInput("the labeling needs at least three colors; smaller "
                           "cases use the direct routes");
    if (x.n() != ctx.n) throw InvalidInput("sign vector has the wrong dimension");
    if (x.is_zero()) throw InvalidInput("the zero vector carries no label");
    return LambdaEvaluator(ctx).value(sv_encode(x));
}

bool ktt_star_valid(const Graph& g, const Coloring& c, const KttStarWitness& w) {
    const int t = w.t;
    if (t < 1) return false;
    if (int(w.a_side.size()) != t || int(w.b_side.size()) != t) return false;
    std::vector<int> all;
    for (const auto* side : {&w.a_side, &w.b_side})
        for (int v : *side) {
            if (v < 0 || v >= g.m) return false;
            all.push_back(v);
        }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (int k = 0; k < t; ++k)
        if (c.color[w.a_side[k]] != k + 1 || c.color[w.b_side[k]] != k + 1)
            return false;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j && !g.adjacent(w.a_side[i], w.b_side[j])) return false;
    return true;
}

namespace {

KttStarWitness checked(const ProductLabelingContext& ctx, KttStarWitness w) {
    if (!ktt_star_valid(ctx.product, ctx.coloring, w))
        throw ClaimFailure("the assembled crossed bipartite witness failed "
                           "its replay");
    return w;
}

// An edge-free sign vector of the factor with as many nonzero entries as its
// alternation number; niceness makes the trimmed witness exactly that.
SignVector extremal_witness(const ProductLabelingContext& ctx, int jstar,
                            int expected_alt) {
    AltResult ar = alt_identity(ctx.hs[jstar]);
    SignVector x = trim_to_alt(ar.witness);
    if (ar.value != expected_alt || x.support_size() != expected_alt)
        throw ClaimFailure("the factor attaining t has no edge-free vector "
                           "with full alternation");
    return x;
}

KttStarWitness extract_t1(const ProductLabelingContext& ctx) {
    int jstar = int(std::find(ctx.chi.begin(), ctx.chi.end(), 1) -
                    ctx.chi.begin());
    const Hypergraph& h = ctx.hs[jstar];
    SignVector x = extremal_witness(ctx, jstar, h.n - 1);
    int z = -1;
    for (int i = 0; i < h.n; ++i)
        if (x.e[i] == 0) z = i;
    std::uint64_t zbit = std::uint64_t(1) << z;
    int eplus = first_edge_within(h, x.plus_mask() | zbit);
    int eminus = first_edge_within(h, x.minus_mask() | zbit);
    if (eplus < 0 || eminus < 0)
        throw ClaimFailure("filling the free coordinate created no edge on "
                           "one of the sides");
    if (eplus == eminus)
        throw ClaimFailure("the two edges through the free coordinate "
                           "coincide, which needs a singleton");
    std::vector<int> tuple(ctx.s, 0);
    tuple[jstar] = eplus;
    int a = ctx.vertex_id(tuple);
    tuple[jstar] = eminus;
    int b = ctx.vertex_id(tuple);
    KttStarWitness w;
    w.t = 1;
    w.a_side = {a};
    w.b_side = {b};
    return checked(ctx, std::move(w));
}

KttStarWitness extract_t2(const ProductLabelingContext& ctx) {
    int jstar = int(std::find(ctx.chi.begin(), ctx.chi.end(), 2) -
                    ctx.chi.begin());
    const Hypergraph& h = ctx.hs[jstar];
    SignVector x = extremal_witness(ctx, jstar, h.n - 2);
    std::vector<int> zeros;
    for (int i = 0; i < h.n; ++i)
        if (x.e[i] == 0) zeros.push_back(i);
    std::uint64_t z1 = std::uint64_t(1) << zeros[0];
    std::uint64_t z2 = std::uint64_t(1) << zeros[1];
    int a1 = first_edge_within(h, x.plus_mask() | z1);
    int a2 = first_edge_within(h, x.plus_mask() | z2);
    int b1 = first_edge_within(h, x.minus_mask() | z1);
    int b2 = first_edge_within(h, x.minus_mask() | z2);
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0)
        throw ClaimFailure("filling a free coordinate created no edge on one "
                           "of the sides");

    // One pair of disjoint edges per remaining factor: the a-vertices use
    // one, the b-vertices the other, so cross pairs stay adjacent there.
    std::vector<int> ga(ctx.s, 0), hb(ctx.s, 0);
    for (int j = 0; j < ctx.s; ++j) {
        if (j == jstar) continue;
        int g = -1, hh = -1;
        for (int u = 0; u < ctx.factors[j].m && g < 0; ++u) {
            int v = ctx.factors[j].adj[u].find_next(0);
            if (v >= 0) {
                g = u;
                hh = v;
            }
        }
        if (g < 0)
            throw ClaimFailure("a factor with two colors has no two disjoint "
                               "edges");
        ga[j] = g;
        hb[j] = hh;
    }
    auto vertex = [&](int je, bool aside) {
        std::vector<int> tuple = aside ? ga : hb;
        tuple[jstar] = je;
        return ctx.vertex_id(tuple);
    };
    int va1 = vertex(a1, true), va2 = vertex(a2, true);
    int vb1 = vertex(b1, false), vb2 = vertex(b2, false);

    // (va1, vb2) and (va2, vb1) are adjacent, hence bicolored; orient each
    // pair by color.
    const std::vector<int>& col = ctx.coloring.color;
    KttStarWitness w;
    w.t = 2;
    w.a_side = {col[va1] == 1 ? va1 : vb2, col[va2] == 2 ? va2 : vb1};
    w.b_side = {col[va2] == 1 ? va2 : vb1, col[va1] == 2 ? va1 : vb2};
    return checked(ctx, std::move(w));
}

KttStarWitness extract_pipeline(const ProductLabelingContext& ctx) {
    const int n = ctx.n, t = ctx.t, gamma = n - t;
    check_label_dimension(n);
    LambdaEvaluator eval(ctx);
    ChainPair cp = chen_chain_pair(n, fill_labels(eval), gamma);

    // The distinguished block of x_gamma: edge-free with full alternation,
    // while every other block is full with edges on both sides.
    std::size_t xg = cp.xs[gamma - 1];
    int j0 = -1;
    for (int j = 0; j < ctx.s; ++j) {
        std::size_t c = eval.block_code(xg, j);
        if (eval.bt[j].a_bits[c] == 0) {
            if (j0 >= 0)
                throw ClaimFailure("two blocks of the pivot vector are "
                                   "edge-free");
            j0 = j;
        }
    }
    if (j0 < 0)
        throw ClaimFailure("no block of the pivot vector is edge-free");
    {
        std::size_t c = eval.block_code(xg, j0);
        int nj = ctx.hs[j0].n;
        if (eval.bt[j0].alt[c] != nj - t || eval.bt[j0].support[c] != nj - t ||
            ctx.alt[j0] != nj - t)
            throw ClaimFailure("the edge-free block of the pivot vector is "
                               "not extremal");
        for (int j = 0; j < ctx.s; ++j) {
            if (j == j0) continue;
            std::size_t cj = eval.block_code(xg, j);
            if (eval.bt[j].a_bits[cj] != 3 ||
                eval.bt[j].support[cj] != ctx.hs[j].n)
                throw ClaimFailure("a non-distinguished block of the pivot "
                                   "vector is not full with edges on both "
                                   "sides");
        }
    }
    const std::uint64_t S = eval.bt[j0].plus[eval.block_code(xg, j0)];
    const std::uint64_t T = eval.bt[j0].minus[eval.block_code(xg, j0)];

    // New vertex signed at each chain step above gamma, for both chains.
    auto signed_vertices = [&](const std::vector<std::size_t>& chain) {
        std::vector<int> out;
        for (int i = gamma + 1; i <= n; ++i) {
            std::size_t prev = chain[i - 2], cur = chain[i - 1];
            for (int j = 0; j < ctx.s; ++j)
                if (j != j0 &&
                    eval.block_code(prev, j) != eval.block_code(cur, j))
                    throw ClaimFailure("a chain step changed a block other "
                                       "than the distinguished one");
            std::size_t pc = eval.block_code(prev, j0);
            std::size_t cc = eval.block_code(cur, j0);
            int added = -1;
            for (int i2 = 0; i2 < ctx.hs[j0].n; ++i2) {
                std::size_t pd = pc % 3, cd = cc % 3;
                pc /= 3;
                cc /= 3;
                if (pd == cd) continue;
                if (pd != 0 || added >= 0)
                    throw ClaimFailure("a chain step did not add exactly one "
                                       "signed coordinate");
                added = i2;
            }
            if (added < 0)
                throw ClaimFailure("a chain step did not change the "
                                   "distinguished block");
            out.push_back(added);
        }
        return out;
    };
    std::vector<int> as = signed_vertices(cp.xs), bs = signed_vertices(cp.ys);
    if (as != bs)
        throw ClaimFailure("the two chains signed different new vertices");
    {
        std::vector<int> sorted = as;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ClaimFailure("a chain signed the same vertex twice");
        for (int a : as)
            if ((S | T) & (std::uint64_t(1) << a))
                throw ClaimFailure("a newly signed vertex already lay in the "
                                   "pivot block's support");
    }

    // Fixed edges for the other blocks, and the crossed edges through each
    // new vertex for the distinguished one.
    std::vector<int> ej(ctx.s, -1), fj(ctx.s, -1);
    for (int j = 0; j < ctx.s; ++j) {
        if (j == j0) continue;
        std::size_t c = eval.block_code(xg, j);
        ej[j] = first_edge_within(ctx.hs[j], eval.bt[j].minus[c]);
        fj[j] = first_edge_within(ctx.hs[j], eval.bt[j].plus[c]);
        if (ej[j] < 0 || fj[j] < 0)
            throw ClaimFailure("a full block lost one of its promised edges");
    }
    KttStarWitness w;
    w.t = t;
    for (int k = 0; k < t; ++k) {
        std::uint64_t abit = std::uint64_t(1) << as[k];
        int ei = first_edge_within(ctx.hs[j0], T | abit);
        int fi = first_edge_within(ctx.hs[j0], S | abit);
        if (ei < 0 || fi < 0)
            throw ClaimFailure("niceness promised an edge through the newly "
                               "signed vertex");
        std::vector<int> ta = ej, tb = fj;
        ta[j0] = ei;
        tb[j0] = fi;
        int va = ctx.vertex_id(ta), vb = ctx.vertex_id(tb);
        if (ctx.coloring.color[va] != k + 1 || ctx.coloring.color[vb] != k + 1)
            throw ClaimFailure("a crossed vertex missed its prescribed color");
        w.a_side.push_back(va);
        w.b_side.push_back(vb);
    }
    return checked(ctx, std::move(w));
}

} // namespace

KttStarWitness extract_ktt_star(const ProductLabelingContext& ctx) {
    if (ctx.t < 1)
        throw InvalidInput("the product has no colors to work with");
    if (ctx.t == 1) return extract_t1(ctx);
    if (ctx.t == 2) return extract_t2(ctx);
    return extract_pipeline(ctx);
}

} // namespace kneser
