#pragma once

#include <optional>
#include <vector>

#include "kneser/hypergraph.hpp"
#include "kneser/rng.hpp"
#include "kneser/sign_vector.hpp"

namespace kneser {

std::vector<int> identity_perm(int n);

struct AltResult {
    int value = 0;
    SignVector witness; // entry i is the sign placed on vertex sigma[i]
};

// Maximum alternation over sign vectors whose positive and negative supports,
// read through sigma, each contain no edge of h. sigma[i] is the 0-based
// vertex sitting at position i. The zero vector (alt 0) is the fallback when
// no nonzero vector is edge-free.
AltResult alt_sigma(const Hypergraph& h, const std::vector<int>& sigma);

AltResult alt_identity(const Hypergraph& h);

struct AltMinResult {
    int value = 0;
    std::vector<int> sigma;
    bool exact = false;
};

// Exact minimum of alt_sigma over all n! permutations. Scans abort as soon
// as they match the best value found so far. Requires n <= 8.
AltMinResult alt_min_exact(const Hypergraph& h);

// Upper bound on the minimum from the identity plus `samples` random
// permutations.
AltMinResult alt_min_heuristic(const Hypergraph& h, int samples, Rng& rng);

struct NicenessResult {
    bool nice = false;
    std::vector<int> sigma; // witnessing permutation when nice
    int alt_value = 0;      // alt_sigma for that permutation
};

// A hypergraph without singleton edges is nice when some permutation sigma
// satisfies both
//   (a) chi == n - alt_sigma(h), and
//   (b) every edge-free vector with alternation alt_sigma(h) has exactly
//       alt_sigma(h) nonzero entries.
// chi must be the chromatic number of the Kneser graph of h. The identity is
// tried first; the full permutation search requires n <= 8.
NicenessResult check_nice(const Hypergraph& h, int chi);

bool is_nice_with(const Hypergraph& h, int chi, const std::vector<int>& sigma);

// First edge-free vector (in scan order) with the given alternation and more
// nonzero entries than that, if one exists. This is the vector whose absence
// niceness condition (b) demands.
std::optional<SignVector> oversized_alt_vector(const Hypergraph& h,
                                               const std::vector<int>& sigma,
                                               int value);

// Zeroes entries of x so that the support size drops to alt(x), keeping the
// first entry of each maximal run of equal signs. Alternation is unchanged
// and both supports only shrink.
SignVector trim_to_alt(const SignVector& x);

} // namespace kneser
