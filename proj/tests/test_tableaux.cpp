#include <catch2/catch_amalgamated.hpp>

#include "wpyr/tableau.hpp"

#include <random>
#include <set>

using namespace wpyr;

namespace {

// Exhaustive oracle: enumerate all p^N fillings, keep the column-connected
// ones, and collect their canonical row classes.
std::set<RowClass> brute_force_cc_classes(const Pyramid& py, long long p)
{
    const int N = py.box_count();
    std::set<RowClass> out;
    std::vector<long long> entries(N, 0);
    while (true) {
        Tableau t(py, entries);
        if (is_column_connected(t, p))
            out.insert(row_canonical(t));
        int k = N - 1;
        while (k >= 0 && entries[k] == p - 1)
            entries[k--] = 0;
        if (k < 0)
            break;
        ++entries[k];
    }
    return out;
}

long long binomial(long long n, long long k)
{
    long long r = 1;
    for (long long t = 1; t <= k; ++t)
        r = r * (n - k + t) / t;
    return r;
}

} // namespace

TEST_CASE("column connected predicate")
{
    const Pyramid col2 = enumerate_pyramids(Partition({1, 1}))[0];
    CHECK(is_column_connected(Tableau(col2, {4, 3}), 7));
    CHECK_FALSE(is_column_connected(Tableau(col2, {0, 0}), 7));

    const Pyramid row3 = enumerate_pyramids(Partition({3}))[0];
    CHECK(is_column_connected(Tableau(row3, {5, 0, 2})));

    // shift symmetry: adding a constant preserves the predicate
    std::mt19937 rng(7);
    const Pyramid py = enumerate_pyramids(Partition({1, 2}))[0];
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long long> e(3);
        for (auto& v : e)
            v = rng() % 5;
        Tableau t(py, e);
        const bool cc = is_column_connected(t, 5);
        const long long shift = rng() % 5;
        for (auto& v : t.entries)
            v = (v + shift) % 5;
        CHECK(is_column_connected(t, 5) == cc);
    }
}

TEST_CASE("row canonical form")
{
    const Pyramid row3 = enumerate_pyramids(Partition({3}))[0];
    CHECK(row_canonical(Tableau(row3, {2, 0, 1})).canonical.entries ==
          Tableau(row3, {0, 1, 2}).entries);
    const Tableau sorted(row3, {0, 1, 2});
    CHECK(row_canonical(sorted).canonical == sorted);

    // random tableau vs a random row permutation of it
    std::mt19937 rng(11);
    const Pyramid py = enumerate_pyramids(Partition({2, 3}))[1];
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<long long> e(5);
        for (auto& v : e)
            v = rng() % 3;
        Tableau a(py, e);
        Tableau b = a;
        for (int r = 1; r <= py.rows(); ++r) {
            auto boxes = py.row_boxes(r);
            std::shuffle(boxes.begin(), boxes.end(), rng);
            auto orig = py.row_boxes(r);
            for (size_t k = 0; k < boxes.size(); ++k)
                b.entry(orig[k]) = a.entry(boxes[k]);
        }
        CHECK(row_canonical(a) == row_canonical(b));
        CHECK(row_canonical(b).canonical == row_canonical(row_canonical(b).canonical).canonical);
    }
}

TEST_CASE("lambda weight")
{
    const Pyramid py = enumerate_pyramids(Partition({2, 5}))[0];
    Tableau zero(py, std::vector<long long>(7, 0));
    CHECK(lambda_weight(zero) == WeightVector(7));

    const Pyramid one = enumerate_pyramids(Partition({1}))[0];
    Tableau t1(one, {5});
    CHECK(lambda_weight(t1)[1] == 5);

    Tableau seq(py, {1, 2, 3, 4, 5, 6, 7});
    for (int i = 1; i <= 7; ++i)
        CHECK(lambda_weight(seq)[i] == i);
}

TEST_CASE("column connected classes")
{
    // single column of height n: classes indexed by the top entry
    for (long long p : {2, 3, 5}) {
        const Pyramid col = enumerate_pyramids(Partition({1, 1, 1}))[0];
        auto classes = enumerate_cc_classes(col, p);
        CHECK(static_cast<long long>(classes.size()) == p);
        auto brute = brute_force_cc_classes(col, p);
        CHECK(std::set<RowClass>(classes.begin(), classes.end()) == brute);
    }

    // single row of length l: everything is vacuously column connected
    for (long long p : {2, 3})
        for (int l = 1; l <= 4; ++l) {
            const Pyramid row = enumerate_pyramids(Partition({l}))[0];
            auto classes = enumerate_cc_classes(row, p);
            CHECK(static_cast<long long>(classes.size()) == binomial(p + l - 1, l));
            CHECK(std::set<RowClass>(classes.begin(), classes.end()) ==
                  brute_force_cc_classes(row, p));
        }

    // golden value, frozen from the exhaustive oracle over F_2^3
    {
        const Pyramid py = enumerate_pyramids(Partition({1, 2}))[0];
        auto classes = enumerate_cc_classes(py, 2);
        CHECK(classes.size() == 4);
        CHECK(std::set<RowClass>(classes.begin(), classes.end()) == brute_force_cc_classes(py, 2));
    }

    // permutation search agrees with the exhaustive oracle at desk scale
    for (long long p : {2, 3})
        for (int N = 1; N <= 5; ++N)
            for (const Partition& part : partitions_of(N))
                for (const Pyramid& py : enumerate_pyramids(part)) {
                    if (N * std::log2(static_cast<double>(p)) > 10)
                        continue;
                    auto classes = enumerate_cc_classes(py, p);
                    CHECK(std::set<RowClass>(classes.begin(), classes.end()) ==
                          brute_force_cc_classes(py, p));
                    CHECK(std::is_sorted(classes.begin(), classes.end()));
                }

    // guard refusal
    const Pyramid big = enumerate_pyramids(Partition({13}))[0];
    CHECK_THROWS_AS(enumerate_cc_classes(big, 5), guard_exceeded);
}

TEST_CASE("rectangular pyramids: rows are shifted copies of the bottom row")
{
    // For all rows of equal length, the columns of a column-connected member
    // are ladders over the bottom entries, so a class contains one iff the
    // multiset of row i equals the bottom-row multiset shifted by n - i.
    for (long long p : {2, 3})
        for (const Partition& part : {Partition({1, 1}), Partition({2, 2}), Partition({3, 3}),
                                      Partition({2, 2, 2}), Partition({1, 1, 1, 1})}) {
            if (part.total() > 6)
                continue;
            const Pyramid py = enumerate_pyramids(part)[0];
            const int n = py.rows();
            for (const RowClass& cls : enumerate_row_classes(py, p)) {
                bool ladder = true;
                auto bottom = cls.canonical.row_entries(n);
                for (int r = 1; r < n && ladder; ++r) {
                    std::vector<long long> shifted;
                    for (long long v : bottom)
                        shifted.push_back((v + (n - r)) % p);
                    std::sort(shifted.begin(), shifted.end());
                    auto row = cls.canonical.row_entries(r);
                    std::sort(row.begin(), row.end());
                    ladder = (shifted == row);
                }
                CHECK(class_has_cc_member(cls, p) == ladder);
            }
        }
}
