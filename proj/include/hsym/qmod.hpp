#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsym/integer.hpp"

namespace hsym {

// Element of (Q/Z)^n: reduced fractions with one shared denominator, so
// equality tests are exact. Invariant: den >= 1, 0 <= num[i] < den, and
// gcd(den, num_1, ..., num_n) == 1 (den == 1 for the zero vector).
struct TorusVec {
    std::int64_t den = 1;
    std::vector<std::int64_t> num;

    TorusVec() = default;
    TorusVec(int n, std::int64_t d) : den(d), num(static_cast<std::size_t>(n), 0) {}

    int size() const { return static_cast<int>(num.size()); }

    void reduce()
    {
        if (den < 0) throw std::invalid_argument("torus denominator must be positive");
        std::int64_t g = den;
        for (auto& x : num) {
            x = posmod64(x, den);
            g = gcd64(g, x);
        }
        if (g > 1) {
            den /= g;
            for (auto& x : num) x /= g;
        }
    }

    bool is_zero() const
    {
        for (auto x : num)
            if (x != 0) return false;
        return true;
    }

    // Order as a group element (reduced form: exactly the denominator).
    std::int64_t order() const { return den; }

    TorusVec plus(const TorusVec& o) const
    {
        TorusVec r(size(), lcm64(den, o.den));
        for (int i = 0; i < size(); ++i)
            r.num[i] = posmod64(mul64(num[i], r.den / den) + mul64(o.num[i], r.den / o.den), r.den);
        r.reduce();
        return r;
    }

    TorusVec scaled(std::int64_t k) const
    {
        TorusVec r(size(), den);
        for (int i = 0; i < size(); ++i) r.num[i] = posmod64(mul64(posmod64(k, den), num[i]), den);
        r.reduce();
        return r;
    }

    // Representative of the class modulo the diagonal line with last
    // coordinate zero. The class order is preserved by this choice.
    TorusVec canon_mod_diag() const
    {
        TorusVec r(size(), den);
        if (size() == 0) return r;
        std::int64_t last = num[static_cast<std::size_t>(size()) - 1];
        for (int i = 0; i < size(); ++i) r.num[i] = posmod64(num[i] - last, den);
        r.reduce();
        return r;
    }

    // alpha . v as a reduced fraction (p, q) with 0 <= p < q.
    std::pair<std::int64_t, std::int64_t> dot(const std::vector<int>& alpha) const
    {
        std::int64_t acc = 0;
        for (int i = 0; i < size(); ++i)
            acc = posmod64(add64(acc, mul64(alpha[static_cast<std::size_t>(i)], num[i])), den);
        std::int64_t g = gcd64(acc, den);
        if (g == 0) return {0, 1};
        return {acc / g, den / g};
    }

    bool operator==(const TorusVec& o) const { return den == o.den && num == o.num; }
    bool operator<(const TorusVec& o) const
    {
        if (den != o.den) return den < o.den;
        return num < o.num;
    }

    std::string str() const
    {
        std::string s = "(";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ",";
            s += std::to_string(num[i]) + "/" + std::to_string(den);
        }
        return s + ")";
    }
};

} // namespace hsym
