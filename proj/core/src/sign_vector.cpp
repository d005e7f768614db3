#include "kneser/sign_vector.hpp"

#include "kneser/errors.hpp"

namespace kneser {

int SignVector::support_size() const {
    int c = 0;
    for (auto s : e) c += (s != 0);
    return c;
}

bool SignVector::is_zero() const { return support_size() == 0; }

std::uint64_t SignVector::plus_mask() const {
    std::uint64_t m = 0;
    for (int i = 0; i < n(); ++i)
        if (e[i] > 0) m |= std::uint64_t(1) << i;
    return m;
}

std::uint64_t SignVector::minus_mask() const {
    std::uint64_t m = 0;
    for (int i = 0; i < n(); ++i)
        if (e[i] < 0) m |= std::uint64_t(1) << i;
    return m;
}

SignVector SignVector::negated() const {
    SignVector y(n());
    for (int i = 0; i < n(); ++i) y.e[i] = -e[i];
    return y;
}

bool SignVector::below(const SignVector& y) const {
    if (n() != y.n()) return false;
    for (int i = 0; i < n(); ++i)
        if (e[i] != 0 && e[i] != y.e[i]) return false;
    return true;
}

std::string SignVector::str() const {
    std::string s(n(), '0');
    for (int i = 0; i < n(); ++i)
        if (e[i] > 0)
            s[i] = '+';
        else if (e[i] < 0)
            s[i] = '-';
    return s;
}

SignVector SignVector::parse(const std::string& s) {
    SignVector x(int(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case '+': x.e[i] = 1; break;
            case '-': x.e[i] = -1; break;
            case '0': x.e[i] = 0; break;
            default: throw InvalidInput("sign vector: characters must be one of +-0");
        }
    }
    return x;
}

int alt_of(const SignVector& x) {
    int alt = 0, last = 0;
    for (auto s : x.e) {
        if (s == 0) continue;
        if (last == 0)
            alt = 1;
        else if (s != last)
            ++alt;
        last = s;
    }
    return alt;
}

std::size_t pow3(int n) {
    std::size_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

std::size_t sv_encode(const SignVector& x) {
    std::size_t idx = 0, mul = 1;
    for (int i = 0; i < x.n(); ++i) {
        int digit = x.e[i] == 0 ? 0 : (x.e[i] > 0 ? 1 : 2);
        idx += mul * std::size_t(digit);
        mul *= 3;
    }
    return idx;
}

SignVector sv_decode(std::size_t index, int n) {
    SignVector x(n);
    for (int i = 0; i < n; ++i) {
        int digit = int(index % 3);
        index /= 3;
        x.e[i] = digit == 0 ? 0 : (digit == 1 ? 1 : -1);
    }
    return x;
}

std::size_t sv_negate_code(std::size_t code, int n) {
    std::size_t out = 0;
    for (int i = 0; i < n; ++i) {
        std::size_t digit = code % 3;
        code /= 3;
        if (digit) digit = 3 - digit;
        out += digit * pow3(i);
    }
    return out;
}

bool sv_less(const SignVector& a, const SignVector& b) {
    return a.e < b.e;
}

} // namespace kneser
