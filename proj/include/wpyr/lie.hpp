// Lie-theoretic data attached to a pyramid: the nilpotent e, the good
// grading, the subalgebras p / h / m, the linear form chi, and the
// centralizer basis of e.

#pragma once

#include "pyramid.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace wpyr {

using Zint = boost::multiprecision::cpp_int;

/// Grading degree of the matrix unit e_{i,j}: col(j) - col(i).
inline int grading_degree(const Pyramid& py, int i, int j)
{
    return py.col(j) - py.col(i);
}

struct LieDatum {
    Pyramid pyramid;
    // e = sum of e_{i,j} over e_support
    std::vector<std::pair<int, int>> e_support;
    // chi(e_{i,j}) indexed by matrix-unit code (i-1)*N + (j-1)
    std::vector<int> chi;
    long long d_chi = 0;

    explicit LieDatum(Pyramid py) : pyramid(std::move(py))
    {
        const int N = pyramid.box_count();
        chi.assign(N * N, 0);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                if (pyramid.row(i) == pyramid.row(j) && pyramid.col(j) == pyramid.col(i) + 1)
                    e_support.emplace_back(i, j);
                if (grading_degree(pyramid, i, j) < 0)
                    ++d_chi;
            }
        // chi = trace pairing against e: chi(e_{i,j}) = 1 iff e_{j,i} is a summand of e
        for (auto [a, b] : e_support)
            chi[(b - 1) * N + (a - 1)] = 1;
    }

    int boxes() const { return pyramid.box_count(); }
    int degree(int i, int j) const { return grading_degree(pyramid, i, j); }
    bool in_p(int i, int j) const { return degree(i, j) >= 0; }
    bool in_h(int i, int j) const { return degree(i, j) == 0; }
    bool in_m(int i, int j) const { return degree(i, j) < 0; }
    int chi_of(int i, int j) const { return chi[(i - 1) * boxes() + (j - 1)]; }

    long long dim_g0() const
    {
        long long d = 0;
        for (int c = 1; c <= pyramid.columns(); ++c) {
            long long q = pyramid.column_height(c);
            d += q * q;
        }
        return d;
    }

    /// e as a dense 0/1 matrix (row-major, N x N).
    std::vector<Zint> e_matrix() const
    {
        const int N = boxes();
        std::vector<Zint> m(N * N, 0);
        for (auto [i, j] : e_support)
            m[(i - 1) * N + (j - 1)] = 1;
        return m;
    }
};

/// Exact rank of an integer matrix via fraction-free elimination.
inline int integer_matrix_rank(std::vector<Zint> a, int rows, int cols)
{
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r * cols + c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        for (int k = 0; k < cols; ++k)
            std::swap(a[rank * cols + k], a[piv * cols + k]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r * cols + c] == 0)
                continue;
            const Zint f1 = a[rank * cols + c], f2 = a[r * cols + c];
            for (int k = c; k < cols; ++k)
                a[r * cols + k] = a[r * cols + k] * f1 - a[rank * cols + k] * f2;
        }
        ++rank;
    }
    return rank;
}

/// Jordan block sizes of a nilpotent integer matrix, via ranks of powers.
inline std::vector<int> jordan_type_of_nilpotent(const std::vector<Zint>& m, int N)
{
    auto mul = [N](const std::vector<Zint>& a, const std::vector<Zint>& b) {
        std::vector<Zint> c(N * N, 0);
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                if (a[i * N + k] == 0)
                    continue;
                for (int j = 0; j < N; ++j)
                    c[i * N + j] += a[i * N + k] * b[k * N + j];
            }
        return c;
    };
    std::vector<int> rank_pow{N}; // rank of m^0
    std::vector<Zint> pw = m;
    for (int k = 1; k <= N; ++k) {
        rank_pow.push_back(integer_matrix_rank(pw, N, N));
        if (rank_pow.back() == 0)
            break;
        pw = mul(pw, m);
    }
    while (static_cast<int>(rank_pow.size()) <= N + 1)
        rank_pow.push_back(0);
    // multiplicity of block size k is r_{k-1} - 2 r_k + r_{k+1}
    std::vector<int> blocks;
    for (int k = 1; k <= N; ++k) {
        int mult = rank_pow[k - 1] - 2 * rank_pow[k] + rank_pow[k + 1];
        for (int t = 0; t < mult; ++t)
            blocks.push_back(k);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

/// One centralizer basis element c_{i,j}^{(r)}: the sum of the matrix units
/// e_{h,k} with row(h) = i, row(k) = j and col(k) - col(h) + 1 = r.
struct CentralizerElement {
    int i = 0, j = 0, r = 0;
    std::vector<std::pair<int, int>> support;
};

inline CentralizerElement centralizer_element(const Pyramid& py, int i, int j, int r)
{
    CentralizerElement ce{i, j, r, {}};
    for (int h = 1; h <= py.box_count(); ++h) {
        if (py.row(h) != i)
            continue;
        for (int k = 1; k <= py.box_count(); ++k)
            if (py.row(k) == j && py.col(k) - py.col(h) + 1 == r)
                ce.support.emplace_back(h, k);
    }
    return ce;
}

struct CentralizerBasis {
    std::vector<CentralizerElement> elements;
};

/// Basis of the centralizer of e: c_{i,j}^{(r)} for all 1 <= i,j <= n and
/// s_{i,j} < r <= s_{i,j} + p_{min(i,j)}.
inline CentralizerBasis centralizer_basis(const Pyramid& py)
{
    const ShiftMatrix sm = shift_matrix(py);
    CentralizerBasis basis;
    for (int i = 1; i <= py.rows(); ++i)
        for (int j = 1; j <= py.rows(); ++j) {
            const int pmin = py.row_length(std::min(i, j));
            for (int r = sm(i, j) + 1; r <= sm(i, j) + pmin; ++r)
                basis.elements.push_back(centralizer_element(py, i, j, r));
        }
    return basis;
}

/// Sparse N x N matrix as code -> coefficient, for bracket checks on sums
/// of matrix units.
inline std::vector<long long> unit_sum_matrix(const Pyramid& py,
                                              const std::vector<std::pair<int, int>>& support)
{
    const int N = py.box_count();
    std::vector<long long> m(N * N, 0);
    for (auto [i, j] : support)
        m[(i - 1) * N + (j - 1)] += 1;
    return m;
}

inline std::vector<long long> matrix_bracket(const std::vector<long long>& a,
                                             const std::vector<long long>& b, int N)
{
    std::vector<long long> c(N * N, 0);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            if (a[i * N + k] == 0)
                continue;
            for (int j = 0; j < N; ++j) {
                c[i * N + j] += a[i * N + k] * b[k * N + j];
            }
        }
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            if (b[i * N + k] == 0)
                continue;
            for (int j = 0; j < N; ++j)
                c[i * N + j] -= b[i * N + k] * a[k * N + j];
        }
    return c;
}

} // namespace wpyr
