// Exact linear algebra over prime fields and small extensions, plus a
// sparse rank routine modulo a 61-bit prime used to certify full-rank
// statements over Q.

#pragma once

#include "lie.hpp"

#include <cstdint>
#include <map>
#include <random>

namespace wpyr {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p)
{
    return powmod_u64(a % p, p - 2, p); // p prime
}

/// Dense matrix over F_p with entries stored as residues in [0, p).
struct FpMatrix {
    long long p = 0;
    int rows = 0, cols = 0;
    std::vector<std::uint32_t> a;

    FpMatrix() = default;
    FpMatrix(long long p_, int r, int c) : p(p_), rows(r), cols(c), a(size_t(r) * c, 0) {}

    std::uint32_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static FpMatrix identity(long long p, int n)
    {
        FpMatrix m(p, n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    bool is_zero() const
    {
        for (auto v : a)
            if (v)
                return false;
        return true;
    }

    bool operator==(const FpMatrix& o) const
    {
        return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
    }

    FpMatrix operator*(const FpMatrix& o) const
    {
        FpMatrix r(p, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const std::uint64_t v = at(i, k);
                if (!v)
                    continue;
                for (int j = 0; j < o.cols; ++j)
                    r.at(i, j) =
                        static_cast<std::uint32_t>((r.at(i, j) + v * o.at(k, j)) % p);
            }
        return r;
    }

    FpMatrix operator+(const FpMatrix& o) const
    {
        FpMatrix r(p, rows, cols);
        for (size_t k = 0; k < a.size(); ++k)
            r.a[k] = static_cast<std::uint32_t>((a[k] + std::uint64_t(o.a[k])) % p);
        return r;
    }

    FpMatrix operator-(const FpMatrix& o) const
    {
        FpMatrix r(p, rows, cols);
        for (size_t k = 0; k < a.size(); ++k)
            r.a[k] = static_cast<std::uint32_t>((a[k] + std::uint64_t(p) - o.a[k]) % p);
        return r;
    }

    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const
    {
        std::vector<std::uint32_t> out(rows, 0);
        for (int i = 0; i < rows; ++i) {
            std::uint64_t acc = 0;
            for (int j = 0; j < cols; ++j)
                acc += std::uint64_t(at(i, j)) * v[j] % p;
            out[i] = static_cast<std::uint32_t>(acc % p);
        }
        return out;
    }

    FpMatrix pow(long long e) const
    {
        FpMatrix r = identity(p, rows), b = *this;
        while (e) {
            if (e & 1)
                r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

/// Incremental row-echelon basis of a subspace of F_p^n.
class EchelonBasis {
public:
    EchelonBasis(long long p, int n) : p_(p), n_(n) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return n_; }
    long long p() const { return p_; }

    /// Reduce v against the basis; returns the residue.
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const
    {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const std::uint32_t c = v[pivots_[k]];
            if (c)
                sub_scaled(v, rows_[k], c);
        }
        return v;
    }

    /// Insert v; returns true if it enlarged the span.
    bool insert(std::vector<std::uint32_t> v)
    {
        v = reduce(std::move(v));
        int piv = -1;
        for (int i = 0; i < n_; ++i)
            if (v[i]) {
                piv = i;
                break;
            }
        if (piv < 0)
            return false;
        const std::uint64_t inv = invmod_u64(v[piv], p_);
        for (auto& x : v)
            x = static_cast<std::uint32_t>(x * inv % p_);
        // keep echelon shape: back-substitute into existing rows
        for (size_t k = 0; k < rows_.size(); ++k) {
            const std::uint32_t c = rows_[k][piv];
            if (c)
                sub_scaled(rows_[k], v, c);
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv)
            ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    bool contains(std::vector<std::uint32_t> v) const
    {
        v = reduce(std::move(v));
        for (auto x : v)
            if (x)
                return false;
        return true;
    }

    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    void sub_scaled(std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& w,
                    std::uint32_t c) const
    {
        for (int i = 0; i < n_; ++i)
            v[i] = static_cast<std::uint32_t>((v[i] + std::uint64_t(p_ - c) * w[i]) % p_);
    }

    long long p_;
    int n_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<int> pivots_;
};

inline int fp_rank(const FpMatrix& m)
{
    EchelonBasis basis(m.p, m.cols);
    for (int r = 0; r < m.rows; ++r) {
        std::vector<std::uint32_t> row(m.a.begin() + size_t(r) * m.cols,
                                       m.a.begin() + size_t(r + 1) * m.cols);
        basis.insert(std::move(row));
    }
    return basis.dim();
}

/// Basis of the right nullspace {v : Mv = 0}.
inline std::vector<std::vector<std::uint32_t>> fp_nullspace(const FpMatrix& m)
{
    // row-reduce a copy
    FpMatrix a = m;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < a.cols && rank < a.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < a.rows; ++r)
            if (a.at(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        for (int k = 0; k < a.cols; ++k)
            std::swap(a.at(rank, k), a.at(piv, k));
        const std::uint64_t inv = invmod_u64(a.at(rank, c), a.p);
        for (int k = 0; k < a.cols; ++k)
            a.at(rank, k) = static_cast<std::uint32_t>(a.at(rank, k) * inv % a.p);
        for (int r = 0; r < a.rows; ++r) {
            if (r == rank || !a.at(r, c))
                continue;
            const std::uint64_t f = a.at(r, c);
            for (int k = 0; k < a.cols; ++k)
                a.at(r, k) = static_cast<std::uint32_t>(
                    (a.at(r, k) + (a.p - f) * a.at(rank, k)) % a.p);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<char> is_pivot(a.cols, 0);
    for (int c : pivot_col)
        is_pivot[c] = 1;
    std::vector<std::vector<std::uint32_t>> out;
    for (int c = 0; c < a.cols; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<std::uint32_t> v(a.cols, 0);
        v[c] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] =
                static_cast<std::uint32_t>((a.p - a.at(r, c)) % a.p);
        out.push_back(std::move(v));
    }
    return out;
}

/// Sparse row elimination over F_q for a prime q < 2^61.  With q = kPrime
/// a full row-rank result certifies full row rank over Q; with q = p it is
/// the rank over F_p itself.
struct SparseRankSolver {
    static constexpr std::uint64_t kPrime = 2305843009213693951ull; // 2^61 - 1

    explicit SparseRankSolver(std::uint64_t q = kPrime) : q_(q) {}

    /// Insert a row (sorted by column); returns true if independent of the
    /// rows already inserted.
    bool insert(std::vector<std::pair<int, std::uint64_t>> row)
    {
        normalize_mod(row);
        while (true) {
            if (row.empty())
                return false;
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end())
                break;
            // stored pivot rows have unit leading entry
            row = axpy(row, it->second, q_ - row.front().second);
        }
        const std::uint64_t inv = invmod_u64(row.front().second, q_);
        for (auto& [c, v] : row)
            v = mulmod_u64(v, inv, q_);
        pivots_.emplace(row.front().first, std::move(row));
        return true;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    void normalize_mod(std::vector<std::pair<int, std::uint64_t>>& row) const
    {
        std::vector<std::pair<int, std::uint64_t>> out;
        out.reserve(row.size());
        for (auto& [c, v] : row) {
            const std::uint64_t r = v % q_;
            if (r)
                out.emplace_back(c, r);
        }
        row = std::move(out);
    }

    std::vector<std::pair<int, std::uint64_t>>
    axpy(const std::vector<std::pair<int, std::uint64_t>>& a,
         const std::vector<std::pair<int, std::uint64_t>>& b, std::uint64_t f) const
    {
        // a + f*b, both sorted by column
        std::vector<std::pair<int, std::uint64_t>> out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
                out.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first) {
                const std::uint64_t v = mulmod_u64(b[j].second, f, q_);
                if (v)
                    out.emplace_back(b[j].first, v);
                ++j;
            } else {
                const std::uint64_t v = (a[i].second + mulmod_u64(b[j].second, f, q_)) % q_;
                if (v)
                    out.emplace_back(a[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::uint64_t q_;
    std::map<int, std::vector<std::pair<int, std::uint64_t>>> pivots_;
};

/// Exact sparse elimination over Z (rank over Q); fallback when a modular
/// certificate is inconclusive.
struct SparseRankExact {
    bool insert(std::map<int, Zint> row)
    {
        while (true) {
            for (auto it = row.begin(); it != row.end();)
                it = (it->second == 0) ? row.erase(it) : std::next(it);
            if (row.empty())
                return false;
            auto it = pivots_.find(row.begin()->first);
            if (it == pivots_.end())
                break;
            const Zint a = row.begin()->second;
            const Zint b = it->second.begin()->second;
            std::map<int, Zint> next;
            for (auto& [c, v] : row)
                next[c] = v * b;
            for (auto& [c, v] : it->second)
                next[c] -= v * a;
            row = std::move(next);
        }
        pivots_.emplace(row.begin()->first, std::move(row));
        return true;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::map<int, std::map<int, Zint>> pivots_;
};

/// F_{p^k} for k <= 3, as F_p[x]/(f) with f monic irreducible (rootless
/// suffices for degree 2 and 3).  Elements are indices in [0, p^k) encoding
/// base-p digit vectors.
class SmallField {
public:
    SmallField(long long p, int k) : p_(p), k_(k)
    {
        if (k < 1 || k > 3)
            throw validation_error("SmallField supports degrees 1..3");
        size_ = 1;
        for (int t = 0; t < k; ++t)
            size_ *= p;
        if (k_ > 1)
            find_modulus();
    }

    long long p() const { return p_; }
    int degree() const { return k_; }
    long long size() const { return size_; }

    long long add(long long a, long long b) const
    {
        long long r = 0, mul = 1;
        for (int t = 0; t < k_; ++t) {
            r += ((a % p_ + b % p_) % p_) * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return r;
    }

    long long neg(long long a) const
    {
        long long r = 0, mul = 1;
        for (int t = 0; t < k_; ++t) {
            r += ((p_ - a % p_) % p_) * mul;
            a /= p_;
            mul *= p_;
        }
        return r;
    }

    long long sub(long long a, long long b) const { return add(a, neg(b)); }

    long long mul(long long a, long long b) const
    {
        std::vector<long long> prod(2 * k_ - 1, 0);
        std::vector<long long> da = digits(a), db = digits(b);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        // reduce by the monic modulus
        for (int d = 2 * k_ - 2; d >= k_; --d) {
            const long long c = prod[d];
            if (!c)
                continue;
            prod[d] = 0;
            for (int t = 0; t < k_; ++t)
                prod[d - k_ + t] = ((prod[d - k_ + t] - c * modulus_[t]) % p_ + p_) % p_;
        }
        long long r = 0, m = 1;
        for (int t = 0; t < k_; ++t) {
            r += prod[t] * m;
            m *= p_;
        }
        return r;
    }

    long long pow(long long a, long long e) const
    {
        long long r = 1;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Frobenius-fixed iff a lies in the prime field.
    bool in_prime_field(long long a) const { return pow(a, p_) == a; }

private:
    std::vector<long long> digits(long long a) const
    {
        std::vector<long long> d(k_);
        for (int t = 0; t < k_; ++t) {
            d[t] = a % p_;
            a /= p_;
        }
        return d;
    }

    void find_modulus()
    {
        // monic x^k + c_{k-1} x^{k-1} + ... + c_0, rootless over F_p
        std::vector<long long> c(k_, 0);
        while (true) {
            bool has_root = false;
            for (long long x = 0; x < p_ && !has_root; ++x) {
                long long v = 1; // leading coefficient
                for (int t = k_ - 1; t >= 0; --t)
                    v = (v * x + c[t]) % p_;
                has_root = (v == 0);
            }
            if (!has_root) {
                modulus_ = c;
                return;
            }
            int t = 0;
            while (t < k_ && c[t] == p_ - 1)
                c[t++] = 0;
            if (t == k_)
                throw std::logic_error("no irreducible polynomial found");
            ++c[t];
        }
    }

    long long p_;
    int k_;
    long long size_;
    std::vector<long long> modulus_; // coefficients c_0..c_{k-1}
};

/// Matrix over a SmallField, only what the nilpotency test needs.
struct FieldMatrix {
    const SmallField* F = nullptr;
    int n = 0;
    std::vector<long long> a;

    FieldMatrix(const SmallField& f, int n_) : F(&f), n(n_), a(size_t(n_) * n_, 0) {}

    long long& at(int r, int c) { return a[size_t(r) * n + c]; }
    long long at(int r, int c) const { return a[size_t(r) * n + c]; }

    FieldMatrix operator*(const FieldMatrix& o) const
    {
        FieldMatrix r(*F, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!at(i, k))
                    continue;
                for (int j = 0; j < n; ++j)
                    r.at(i, j) = F->add(r.at(i, j), F->mul(at(i, k), o.at(k, j)));
            }
        return r;
    }

    bool is_zero() const
    {
        for (long long v : a)
            if (v)
                return false;
        return true;
    }

    int rank() const
    {
        FieldMatrix m = *this;
        int rank = 0;
        for (int c = 0; c < n && rank < n; ++c) {
            int piv = -1;
            for (int r = rank; r < n; ++r)
                if (m.at(r, c)) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                continue;
            for (int k = 0; k < n; ++k)
                std::swap(m.at(rank, k), m.at(piv, k));
            for (int r = rank + 1; r < n; ++r) {
                if (!m.at(r, c))
                    continue;
                // scale row r by pivot and subtract: fraction-free enough at
                // this size, but use the inverse for clarity
                const long long inv = m.F->pow(m.at(rank, c), m.F->size() - 2);
                const long long f = m.F->mul(m.at(r, c), inv);
                for (int k = 0; k < n; ++k)
                    m.at(r, k) = m.F->sub(m.at(r, k), m.F->mul(f, m.at(rank, k)));
            }
            ++rank;
        }
        return rank;
    }
};

} // namespace wpyr
