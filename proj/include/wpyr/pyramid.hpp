// Pyramid combinatorics for nilpotent orbits in gl_N.
//
// A pyramid is a bottom-justified stack of box rows encoding a partition
// together with a choice of good grading.  Boxes are numbered 1..N along
// rows, top row first.  All downstream indexing (matrix units, gradings,
// weights) is derived from the box table built here.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpyr {

class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class guard_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Weakly increasing row lengths p_1 <= ... <= p_n summing to N.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    int rows() const { return static_cast<int>(parts.size()); }
    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    void validate() const
    {
        if (parts.empty())
            throw validation_error("partition must be nonempty");
        for (size_t k = 0; k < parts.size(); ++k) {
            if (parts[k] <= 0)
                throw validation_error("partition parts must be positive");
            if (k > 0 && parts[k - 1] > parts[k])
                throw validation_error("partition parts must be weakly increasing");
        }
    }

    bool operator==(const Partition&) const = default;
};

// Rows are numbered 1..n from top to bottom, columns 1..l from left to
// right.  offsets[i] is the left indentation of row i relative to the
// bottom row; offsets[n] = 0.
class Pyramid {
public:
    Pyramid(Partition partition, std::vector<int> offsets)
        : partition_(std::move(partition)), offsets_(std::move(offsets))
    {
        const int n = partition_.rows();
        if (static_cast<int>(offsets_.size()) != n)
            throw validation_error("offset count must equal row count");
        if (offsets_[n - 1] != 0)
            throw validation_error("bottom row offset must be 0");
        for (int i = 0; i < n; ++i) {
            if (offsets_[i] < 0)
                throw validation_error("offsets must be nonnegative");
            if (i + 1 < n) {
                if (offsets_[i] < offsets_[i + 1])
                    throw validation_error("row must not overhang on the left");
                if (offsets_[i] + partition_.parts[i] > offsets_[i + 1] + partition_.parts[i + 1])
                    throw validation_error("row must not overhang on the right");
            }
        }
        build_boxes();
    }

    const Partition& partition() const { return partition_; }
    const std::vector<int>& offsets() const { return offsets_; }

    int rows() const { return partition_.rows(); }
    int columns() const { return partition_.parts.back(); }
    int box_count() const { return n_boxes_; }

    /// Row of box i (1-based box index, 1-based row).
    int row(int box) const { return row_[box]; }
    /// Column of box i (1-based box index, 1-based column).
    int col(int box) const { return col_[box]; }

    /// Height q_c of column c (1-based).
    int column_height(int c) const { return qcol_[c]; }
    const std::vector<int>& column_heights() const { return qcol_; }

    /// Box index at (row, col), or 0 if that cell is empty.
    int box_at(int r, int c) const
    {
        if (r < 1 || r > rows() || c < 1 || c > columns())
            return 0;
        return at_[(r - 1) * columns() + (c - 1)];
    }

    /// Box directly below box i (same column, next row down), or 0.
    int box_below(int box) const { return box_at(row(box) + 1, col(box)); }

    /// Row length of row r (1-based).
    int row_length(int r) const { return partition_.parts[r - 1]; }
    int row_offset(int r) const { return offsets_[r - 1]; }

    /// Boxes of row r in increasing column order.
    std::vector<int> row_boxes(int r) const
    {
        std::vector<int> out;
        for (int c = row_offset(r) + 1; c <= row_offset(r) + row_length(r); ++c)
            out.push_back(box_at(r, c));
        return out;
    }

    bool operator==(const Pyramid& o) const
    {
        return partition_ == o.partition_ && offsets_ == o.offsets_;
    }

private:
    void build_boxes()
    {
        const int n = rows();
        const int l = columns();
        n_boxes_ = partition_.total();
        row_.assign(n_boxes_ + 1, 0);
        col_.assign(n_boxes_ + 1, 0);
        at_.assign(n * l, 0);
        qcol_.assign(l + 1, 0);
        int box = 1;
        for (int r = 1; r <= n; ++r) {
            for (int c = offsets_[r - 1] + 1; c <= offsets_[r - 1] + partition_.parts[r - 1]; ++c) {
                row_[box] = r;
                col_[box] = c;
                at_[(r - 1) * l + (c - 1)] = box;
                ++qcol_[c];
                ++box;
            }
        }
    }

    Partition partition_;
    std::vector<int> offsets_;
    int n_boxes_ = 0;
    std::vector<int> row_, col_, at_, qcol_;
};

/// All pyramids of a partition, in lexicographic offset order.
/// The count is prod_{i<n} (p_{i+1} - p_i + 1).
inline std::vector<Pyramid> enumerate_pyramids(const Partition& partition)
{
    partition.validate();
    const int n = partition.rows();
    std::vector<std::vector<int>> stack{{}};
    // Choose offsets top-down; row i may sit anywhere over row i+1.
    // Offsets are determined relative to the next row, so build bottom-up
    // and record the slack s_i = o_i - o_{i+1} in [0, p_{i+1} - p_i].
    std::vector<Pyramid> out;
    std::vector<int> slack(std::max(n - 1, 0), 0);
    while (true) {
        std::vector<int> offsets(n, 0);
        for (int i = n - 2; i >= 0; --i)
            offsets[i] = offsets[i + 1] + slack[i];
        out.emplace_back(partition, offsets);
        int k = n - 2;
        while (k >= 0 && slack[k] == partition.parts[k + 1] - partition.parts[k])
            slack[k--] = 0;
        if (k < 0)
            break;
        ++slack[k];
    }
    std::sort(out.begin(), out.end(), [](const Pyramid& a, const Pyramid& b) {
        return a.offsets() < b.offsets();
    });
    return out;
}

/// n x n shift matrix sigma of a pyramid: s[i][j] for 1 <= i,j <= n.
/// For i < j, s[j][i] is the left indentation of row i relative to row j
/// and s[i][j] the right indentation.
struct ShiftMatrix {
    int n = 0;
    std::vector<int> s; // row-major n*n

    int operator()(int i, int j) const { return s[(i - 1) * n + (j - 1)]; }
};

inline ShiftMatrix shift_matrix(const Pyramid& py)
{
    const int n = py.rows();
    ShiftMatrix sm;
    sm.n = n;
    sm.s.assign(n * n, 0);
    auto left = [&](int r) { return py.row_offset(r); };
    auto right = [&](int r) { return py.row_offset(r) + py.row_length(r); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i < j)
                sm.s[(i - 1) * n + (j - 1)] = right(j) - right(i);
            else if (i > j)
                sm.s[(i - 1) * n + (j - 1)] = left(j) - left(i);
        }
    return sm;
}

/// Integer weight vector in the epsilon basis of t^*; coordinate i is the
/// coefficient of eps_i.
struct WeightVector {
    std::vector<long long> c; // index 1..N, slot 0 unused

    explicit WeightVector(int N = 0) : c(N + 1, 0) {}
    int size() const { return static_cast<int>(c.size()) - 1; }
    long long& operator[](int i) { return c[i]; }
    long long operator[](int i) const { return c[i]; }

    WeightVector operator+(const WeightVector& o) const
    {
        WeightVector r(size());
        for (int i = 1; i <= size(); ++i)
            r[i] = c[i] + o[i];
        return r;
    }
    WeightVector operator-(const WeightVector& o) const
    {
        WeightVector r(size());
        for (int i = 1; i <= size(); ++i)
            r[i] = c[i] - o[i];
        return r;
    }
    bool operator==(const WeightVector&) const = default;
};

/// The named weights attached to a pyramid.  All are integral; rho and
/// rho_bar are stored via their resolved closed forms rather than as half
/// sums, so no division ever happens.
struct WeightTable {
    WeightVector rho;       // -sum i*eps_i
    WeightVector rho_bar;   // renormalized half sum for a Borel inside p
    WeightVector gamma;     // sum over Phi(-)_+, satisfies rho = rho_bar + gamma
    WeightVector eta;       // shift entering the W-algebra invariants
    WeightVector rho_levi;  // -sum row(i)*eps_i
    WeightVector beta;      // sum over Phi(-)
    WeightVector rho_tilde; // rho_bar + beta = eta + rho_levi
};

inline WeightTable weights(const Pyramid& py)
{
    const int N = py.box_count();
    const int n = py.rows();
    const int l = py.columns();
    WeightTable w{WeightVector(N), WeightVector(N), WeightVector(N), WeightVector(N),
                  WeightVector(N), WeightVector(N), WeightVector(N)};

    std::vector<long long> qpre(l + 2, 0); // qpre[c] = q_1 + ... + q_{c-1}
    for (int c = 1; c <= l + 1; ++c)
        qpre[c] = qpre[c - 1] + (c - 1 >= 1 ? py.column_height(c - 1) : 0);
    const long long qtot = qpre[l + 1];

    for (int i = 1; i <= N; ++i) {
        const int ci = py.col(i), ri = py.row(i);
        w.rho[i] = -i;
        w.rho_bar[i] = -(qpre[ci] + ri - (n - py.column_height(ci)));
        w.eta[i] = n - (qtot - qpre[ci]);
        w.rho_levi[i] = -ri;
        w.beta[i] = qpre[ci] - (qtot - qpre[ci] - py.column_height(ci));
    }
    // gamma = sum of eps_i - eps_j over col(i) > col(j), row(i) < row(j)
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (py.col(i) > py.col(j) && py.row(i) < py.row(j)) {
                ++w.gamma[i];
                --w.gamma[j];
            }
    w.rho_tilde = w.rho_bar + w.beta;
    return w;
}

/// All partitions of N, each weakly increasing, in a deterministic order.
inline std::vector<Partition> partitions_of(int N)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            std::vector<int> parts(cur.rbegin(), cur.rend());
            out.emplace_back(std::move(parts));
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, N, N);
    return out;
}

inline std::string to_string(const Partition& p)
{
    std::string s;
    for (size_t k = 0; k < p.parts.size(); ++k) {
        if (k)
            s += ",";
        s += std::to_string(p.parts[k]);
    }
    return s;
}

inline std::string to_string(const Pyramid& py)
{
    std::string s = "(" + to_string(py.partition()) + ")@[";
    for (size_t k = 0; k < py.offsets().size(); ++k) {
        if (k)
            s += ",";
        s += std::to_string(py.offsets()[k]);
    }
    return s + "]";
}

} // namespace wpyr
