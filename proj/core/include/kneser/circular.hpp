#pragma once

#include <cstdint>
#include <string>

#include "kneser/graph.hpp"

namespace kneser {

// Reduced fraction p/q with p, q > 0.
struct Rational {
    long long p = 0;
    long long q = 1;

    static Rational reduced(long long p, long long q);
    bool operator==(const Rational& o) const { return p == o.p && q == o.q; }
    bool operator<(const Rational& o) const { return p * o.q < o.p * q; }
    std::string str() const;
};

struct CircularResult {
    Rational value;
    Coloring witness; // colors in 0..p-1; any two adjacent differ by q..p-q mod p
};

// Does g admit a (p,q)-coloring? Colors are residues mod p and adjacent
// vertices must be at circular distance at least q.
bool pq_colorable(const Graph& g, int p, int q, std::vector<int>* out = nullptr);

// Exact circular chromatic number. Candidates are the reduced fractions p/q
// with q <= |V| lying in (chi-1, chi], scanned by increasing denominator.
// Fractions dominated by an already-found colorable value, or by an already
// refuted one, are skipped.
CircularResult circular_chromatic_number(const Graph& g);

} // namespace kneser
