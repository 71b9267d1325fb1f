// Tableaux on a pyramid: fillings, row equivalence, the column-connected
// predicate and the count c_pi of row classes containing a column-connected
// member.

#pragma once

#include "pyramid.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

namespace wpyr {

/// A filling of the pyramid's boxes.  Entries are exact integers; in
/// characteristic p they are residues in [0, p).
struct Tableau {
    const Pyramid* pyramid = nullptr;
    std::vector<long long> entries; // index 1..N, slot 0 unused

    Tableau() = default;
    Tableau(const Pyramid& py, std::vector<long long> vals) : pyramid(&py)
    {
        if (static_cast<int>(vals.size()) == py.box_count()) {
            entries.assign(1, 0);
            entries.insert(entries.end(), vals.begin(), vals.end());
        } else if (static_cast<int>(vals.size()) == py.box_count() + 1) {
            entries = std::move(vals);
        } else {
            throw validation_error("tableau entry count must equal box count");
        }
    }

    long long entry(int box) const { return entries[box]; }
    long long& entry(int box) { return entries[box]; }

    /// Entries of row r from left to right: a_{r,1}, ..., a_{r,p_r}.
    std::vector<long long> row_entries(int r) const
    {
        std::vector<long long> out;
        for (int b : pyramid->row_boxes(r))
            out.push_back(entries[b]);
        return out;
    }

    bool operator==(const Tableau& o) const { return entries == o.entries; }
    bool operator<(const Tableau& o) const { return entries < o.entries; }
};

/// True iff every box sits exactly one above the box directly below it:
/// a_i = a_j + 1 whenever box j is directly below box i.  In characteristic
/// p the comparison is taken mod p.
inline bool is_column_connected(const Tableau& A, long long p = 0)
{
    const Pyramid& py = *A.pyramid;
    for (int i = 1; i <= py.box_count(); ++i) {
        const int j = py.box_below(i);
        if (j == 0)
            continue;
        long long diff = A.entry(i) - A.entry(j) - 1;
        if (p > 0)
            diff %= p;
        if (diff != 0)
            return false;
    }
    return true;
}

/// Canonical representative of a row-equivalence class: each row's entries
/// sorted ascending (by the integer lift in characteristic p).
struct RowClass {
    Tableau canonical;

    bool operator==(const RowClass& o) const { return canonical == o.canonical; }
    bool operator<(const RowClass& o) const { return canonical < o.canonical; }
};

inline RowClass row_canonical(const Tableau& A)
{
    const Pyramid& py = *A.pyramid;
    Tableau out = A;
    for (int r = 1; r <= py.rows(); ++r) {
        auto boxes = py.row_boxes(r);
        std::vector<long long> vals;
        for (int b : boxes)
            vals.push_back(A.entry(b));
        std::sort(vals.begin(), vals.end());
        for (size_t k = 0; k < boxes.size(); ++k)
            out.entry(boxes[k]) = vals[k];
    }
    return RowClass{out};
}

/// lambda_A = sum a_i eps_i.
inline WeightVector lambda_weight(const Tableau& A)
{
    const int N = A.pyramid->box_count();
    WeightVector w(N);
    for (int i = 1; i <= N; ++i)
        w[i] = A.entry(i);
    return w;
}

/// Does the row class of A contain a column-connected member?  A
/// column-connected filling is forced by its bottom row (value at (r, c)
/// is bottom entry of column c plus n - r), so it suffices to search the
/// distinct permutations of the bottom-row multiset and compare the forced
/// upper rows against the given row multisets.
inline bool class_has_cc_member(const RowClass& cls, long long p)
{
    const Tableau& A = cls.canonical;
    const Pyramid& py = *A.pyramid;
    const int n = py.rows();
    auto norm = [p](long long v) {
        if (p > 0) {
            v %= p;
            if (v < 0)
                v += p;
        }
        return v;
    };

    std::vector<std::vector<long long>> row_sorted(n + 1);
    for (int r = 1; r <= n; ++r) {
        row_sorted[r] = A.row_entries(r);
        std::sort(row_sorted[r].begin(), row_sorted[r].end());
    }

    std::vector<long long> bottom = row_sorted[n];
    do {
        bool ok = true;
        for (int r = n - 1; r >= 1 && ok; --r) {
            std::vector<long long> forced;
            for (int c = py.row_offset(r) + 1; c <= py.row_offset(r) + py.row_length(r); ++c)
                forced.push_back(norm(bottom[c - 1] + (n - r)));
            std::sort(forced.begin(), forced.end());
            ok = forced == row_sorted[r];
        }
        if (ok)
            return true;
    } while (std::next_permutation(bottom.begin(), bottom.end()));
    return false;
}

/// A column-connected member of the class, when one exists.
inline std::optional<Tableau> cc_member_of_class(const RowClass& cls, long long p)
{
    const Tableau& A = cls.canonical;
    const Pyramid& py = *A.pyramid;
    const int n = py.rows();
    auto norm = [p](long long v) {
        if (p > 0) {
            v %= p;
            if (v < 0)
                v += p;
        }
        return v;
    };
    std::vector<std::vector<long long>> row_sorted(n + 1);
    for (int r = 1; r <= n; ++r) {
        row_sorted[r] = A.row_entries(r);
        std::sort(row_sorted[r].begin(), row_sorted[r].end());
    }
    std::vector<long long> bottom = row_sorted[n];
    do {
        bool ok = true;
        Tableau cand = A;
        for (int c = py.row_offset(n) + 1; c <= py.row_offset(n) + py.row_length(n); ++c)
            cand.entry(py.box_at(n, c)) = bottom[c - 1];
        for (int r = n - 1; r >= 1 && ok; --r) {
            std::vector<long long> forced;
            for (int c = py.row_offset(r) + 1; c <= py.row_offset(r) + py.row_length(r); ++c) {
                long long v = norm(bottom[c - 1] + (n - r));
                cand.entry(py.box_at(r, c)) = v;
                forced.push_back(v);
            }
            std::sort(forced.begin(), forced.end());
            ok = forced == row_sorted[r];
        }
        if (ok)
            return cand;
    } while (std::next_permutation(bottom.begin(), bottom.end()));
    return std::nullopt;
}

/// Enumerate the canonical representatives of all row classes of
/// Tab_{F_p}(pi), in lexicographic order of the canonical entry vector.
inline std::vector<RowClass> enumerate_row_classes(const Pyramid& py, long long p)
{
    std::vector<std::vector<std::vector<long long>>> per_row(py.rows() + 1);
    for (int r = 1; r <= py.rows(); ++r) {
        // weakly increasing sequences of length p_r over [0, p)
        std::vector<long long> cur(py.row_length(r), 0);
        while (true) {
            per_row[r].push_back(cur);
            int k = py.row_length(r) - 1;
            while (k >= 0 && cur[k] == p - 1)
                --k;
            if (k < 0)
                break;
            ++cur[k];
            for (int t = k + 1; t < py.row_length(r); ++t)
                cur[t] = cur[k];
        }
    }
    std::vector<RowClass> out;
    std::vector<size_t> pick(py.rows() + 1, 0);
    while (true) {
        Tableau t(py, std::vector<long long>(py.box_count(), 0));
        for (int r = 1; r <= py.rows(); ++r) {
            auto boxes = py.row_boxes(r);
            for (size_t k = 0; k < boxes.size(); ++k)
                t.entry(boxes[k]) = per_row[r][pick[r]][k];
        }
        out.push_back(RowClass{t});
        int r = py.rows();
        while (r >= 1 && pick[r] + 1 == per_row[r].size())
            pick[r--] = 0;
        if (r < 1)
            break;
        ++pick[r];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Row classes of Tab_{F_p}(pi) containing a column-connected member,
/// sorted; the count is c_pi.  Guarded: refuses when p^N is not desk scale.
inline std::vector<RowClass> enumerate_cc_classes(const Pyramid& py, long long p,
                                                  double guard_bits = 24.0)
{
    if (p < 2)
        throw validation_error("characteristic must be a prime >= 2");
    const double bits = py.box_count() * std::log2(static_cast<double>(p));
    if (bits > guard_bits)
        throw guard_exceeded("enumerate_cc_classes: N*log2(p) = " + std::to_string(bits) +
                             " exceeds guard " + std::to_string(guard_bits));
    std::vector<RowClass> out;
    for (const RowClass& cls : enumerate_row_classes(py, p))
        if (class_has_cc_member(cls, p))
            out.push_back(cls);
    return out;
}

inline long long count_cc_classes(const Pyramid& py, long long p)
{
    return static_cast<long long>(enumerate_cc_classes(py, p).size());
}

inline std::string to_string(const Tableau& A)
{
    std::string s = "[";
    for (int i = 1; i <= A.pyramid->box_count(); ++i) {
        if (i > 1)
            s += ",";
        s += std::to_string(A.entry(i));
    }
    return s + "]";
}

} // namespace wpyr
