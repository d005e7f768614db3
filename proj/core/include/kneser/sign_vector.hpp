#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace kneser {

// Vector in {+,-,0}^n. Entries are stored as -1/0/+1. The string form uses
// one character per coordinate: "+-0+".
struct SignVector {
    std::vector<std::int8_t> e;

    SignVector() = default;
    explicit SignVector(int n) : e(n, 0) {}

    int n() const { return int(e.size()); }
    int support_size() const;
    bool is_zero() const;

    std::uint64_t plus_mask() const;  // bit i <-> coordinate i+1
    std::uint64_t minus_mask() const;

    SignVector negated() const;
    // x is below y when every nonzero entry of x equals the same entry of y.
    bool below(const SignVector& y) const;

    std::string str() const;
    static SignVector parse(const std::string& s);

    friend bool operator==(const SignVector&, const SignVector&) = default;
};

// Number of sign alternations along nonzero entries; 0 for the zero vector.
int alt_of(const SignVector& x);

// Dense index over {+,-,0}^n: digit 0/1/2 <-> 0/+/- at coordinate i,
// index = sum digit_i * 3^i. Used for labeling tables.
std::size_t sv_encode(const SignVector& x);
SignVector sv_decode(std::size_t index, int n);
std::size_t pow3(int n);

// Code of the negated vector, without decoding.
std::size_t sv_negate_code(std::size_t code, int n);

// Lexicographic order on the (-,0,+) encoding, used for deterministic
// tie-breaks when several sign vectors qualify.
bool sv_less(const SignVector& a, const SignVector& b);

} // namespace kneser
