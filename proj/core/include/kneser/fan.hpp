#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <kneser/rng.hpp>
#include <kneser/sign_vector.hpp>

namespace kneser {

// Antipodal labeling of the nonzero sign vectors in {+,-,0}^n with values in
// {-m,...,-1,+1,...,+m}. `label` is indexed by sv_encode; the entry for the
// zero vector is unused and stays 0.
struct FanLabeling {
    int n = 0;
    int m = 0;
    std::vector<int> label;

    int at(const SignVector& x) const { return label[sv_encode(x)]; }
};

struct LabelingCheck {
    bool ok = true;
    std::string reason;
    SignVector x, y; // offending vector, or comparable pair, when !ok
};

// Checks that every label is nonzero with magnitude at most m, that
// label(-x) = -label(x), and that no comparable pair x < y carries
// complementary labels label(x) = -label(y). Scans all comparable pairs.
LabelingCheck validate_labeling(const FanLabeling& l);

// label(x) = (sign of the first nonzero entry of x) * |support(x)|.
// Valid for every n, with m = n.
FanLabeling first_sign_labeling(int n);

// Number of maximal chains x1 < ... < xn whose label set has the form
// {-j1, +j2, -j3, ...} with j1 < ... < jn. The guarantee under test is that
// this count is odd for every valid labeling.
std::uint64_t count_negative_alternating_chains(const FanLabeling& l);

// Starts from first_sign_labeling(n) and applies `changes` random antipodal
// relabeling attempts, keeping only those that stay valid against the
// comparability neighborhood of the changed vector. Requires m >= n.
FanLabeling random_valid_labeling(int n, int m, int changes, Rng& rng);

} // namespace kneser
