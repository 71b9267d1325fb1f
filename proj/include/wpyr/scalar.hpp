// Coefficient rings for the PBW engine.  IntRing is exact integers, reduced
// mod p when the characteristic is positive.  PolyRing is Z[t] (or F_p[t]),
// used to verify identities that must hold for every value of a parameter.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace wpyr {

using Zint = boost::multiprecision::cpp_int;

struct IntRing {
    long long p = 0; // 0 = characteristic zero

    using S = Zint;

    S norm(S v) const
    {
        if (p > 0) {
            v %= p;
            if (v < 0)
                v += p;
        }
        return v;
    }
    S add(const S& a, const S& b) const { return norm(a + b); }
    S mul(const S& a, const S& b) const { return norm(a * b); }
    S neg(const S& a) const { return norm(-a); }
    S from_long(long long v) const { return norm(S(v)); }
    bool zero(const S& a) const { return a == 0; }
    static std::string str(const S& a) { return a.str(); }
};

/// Dense polynomial in one indeterminate t with Zint coefficients,
/// coefficient k at c[k].  Always trimmed of trailing zeros.
struct TPoly {
    std::vector<Zint> c;

    bool operator==(const TPoly&) const = default;
    bool operator<(const TPoly& o) const { return c < o.c; }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

struct PolyRing {
    long long p = 0;

    using S = TPoly;

    S norm(S v) const
    {
        if (p > 0)
            for (auto& x : v.c) {
                x %= p;
                if (x < 0)
                    x += p;
            }
        while (!v.c.empty() && v.c.back() == 0)
            v.c.pop_back();
        return v;
    }
    S add(const S& a, const S& b) const
    {
        S r;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (size_t k = 0; k < a.c.size(); ++k)
            r.c[k] += a.c[k];
        for (size_t k = 0; k < b.c.size(); ++k)
            r.c[k] += b.c[k];
        return norm(std::move(r));
    }
    S mul(const S& a, const S& b) const
    {
        if (a.c.empty() || b.c.empty())
            return S{};
        S r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0)
                continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        }
        return norm(std::move(r));
    }
    S neg(S a) const
    {
        for (auto& x : a.c)
            x = -x;
        return norm(std::move(a));
    }
    S from_long(long long v) const { return norm(S{{Zint(v)}}); }
    static S variable() { return S{{Zint(0), Zint(1)}}; }
    bool zero(const S& a) const { return a.c.empty(); }
    static std::string str(const S& a)
    {
        if (a.c.empty())
            return "0";
        std::string s;
        for (size_t k = 0; k < a.c.size(); ++k) {
            if (a.c[k] == 0)
                continue;
            if (!s.empty())
                s += "+";
            s += a.c[k].str();
            if (k >= 1)
                s += "*t^" + std::to_string(k);
        }
        return s.empty() ? "0" : s;
    }
};

} // namespace wpyr
