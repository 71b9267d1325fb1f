#include <catch2/catch_amalgamated.hpp>

#include "wpyr/lie.hpp"
#include "wpyr/pyramid.hpp"

#include <functional>

using namespace wpyr;

namespace {

// Independent enumeration: try every offset vector with entries in [0, N]
// and keep those where each box of a non-bottom row sits directly above a
// box of the row below.
long long brute_force_pyramid_count(const Partition& p)
{
    const int n = p.rows();
    const int N = p.total();
    std::vector<int> off(n, 0);
    long long count = 0;
    auto valid = [&]() {
        if (off[n - 1] != 0)
            return false;
        for (int r = 0; r + 1 < n; ++r)
            for (int c = off[r] + 1; c <= off[r] + p.parts[r]; ++c)
                if (c <= off[r + 1] || c > off[r + 1] + p.parts[r + 1])
                    return false;
        return true;
    };
    while (true) {
        if (valid())
            ++count;
        int k = n - 1;
        while (k >= 0 && off[k] == N)
            off[k--] = 0;
        if (k < 0)
            break;
        ++off[k];
    }
    return count;
}

long long count_formula(const Partition& p)
{
    long long c = 1;
    for (int i = 0; i + 1 < p.rows(); ++i)
        c *= p.parts[i + 1] - p.parts[i] + 1;
    return c;
}

WeightVector root_sum(const Pyramid& py, const std::function<bool(int, int)>& in_set)
{
    WeightVector w(py.box_count());
    for (int i = 1; i <= py.box_count(); ++i)
        for (int j = 1; j <= py.box_count(); ++j) {
            if (i == j || !in_set(i, j))
                continue;
            ++w[i];
            --w[j];
        }
    return w;
}

} // namespace

TEST_CASE("pyramid enumeration matches the paper and brute force")
{
    auto pys = enumerate_pyramids(Partition({2, 5}));
    REQUIRE(pys.size() == 4);
    // lexicographic offset order: left-justified first
    CHECK(pys[0].offsets() == std::vector<int>{0, 0});
    CHECK(pys[1].offsets() == std::vector<int>{1, 0});
    CHECK(pys[2].offsets() == std::vector<int>{2, 0});
    CHECK(pys[3].offsets() == std::vector<int>{3, 0});

    CHECK(enumerate_pyramids(Partition({3, 3})).size() == 1);
    CHECK(enumerate_pyramids(Partition({3, 3}))[0].offsets() == std::vector<int>{0, 0});
    CHECK(enumerate_pyramids(Partition({1, 2, 4})).size() == 6);

    CHECK_THROWS_AS(Partition(std::vector<int>{}), validation_error);
    CHECK_THROWS_AS(Partition({3, 2}), validation_error);
    CHECK_THROWS_AS(Partition({0, 1}), validation_error);

    for (int N = 1; N <= 8; ++N)
        for (const Partition& p : partitions_of(N)) {
            const long long brute = brute_force_pyramid_count(p);
            CHECK(static_cast<long long>(enumerate_pyramids(p).size()) == brute);
            CHECK(count_formula(p) == brute);
        }
}

TEST_CASE("box table geometry")
{
    Pyramid py(Partition({2, 5}), {1, 0});
    REQUIRE(py.box_count() == 7);
    CHECK(py.row(1) == 1);
    CHECK(py.col(1) == 2);
    CHECK(py.col(2) == 3);
    CHECK(py.row(3) == 2);
    CHECK(py.col(3) == 1);
    CHECK(py.box_below(1) == 4);
    CHECK(py.box_below(3) == 0);
    CHECK(py.column_heights() == std::vector<int>{0, 1, 2, 2, 1, 1}); // slot 0 unused
    int total = 0;
    for (int c = 1; c <= py.columns(); ++c)
        total += py.column_height(c);
    CHECK(total == py.box_count());
}

TEST_CASE("shift matrices")
{
    auto pys = enumerate_pyramids(Partition({2, 5}));
    const ShiftMatrix first = shift_matrix(pys.front());
    CHECK(first(1, 1) == 0);
    CHECK(first(1, 2) == 3);
    CHECK(first(2, 1) == 0);
    CHECK(first(2, 2) == 0);
    const ShiftMatrix last = shift_matrix(pys.back());
    CHECK(last(1, 2) == 0);
    CHECK(last(2, 1) == 3);

    const ShiftMatrix middle = shift_matrix(pys[1]);
    CHECK(middle(1, 2) == 2);
    CHECK(middle(2, 1) == 1);

    CHECK(shift_matrix(enumerate_pyramids(Partition({5}))[0]).s == std::vector<int>{0});

    for (int N = 1; N <= 6; ++N)
        for (const Partition& p : partitions_of(N))
            for (const Pyramid& py : enumerate_pyramids(p)) {
                const ShiftMatrix sm = shift_matrix(py);
                for (int i = 1; i <= py.rows(); ++i)
                    for (int j = i; j <= py.rows(); ++j) {
                        CHECK(sm(i, j) >= 0);
                        CHECK(sm(j, i) >= 0);
                        CHECK(sm(i, j) + sm(j, i) == p.parts[j - 1] - p.parts[i - 1]);
                    }
            }
}

TEST_CASE("nilpotent element, grading and d_chi")
{
    for (const Pyramid& py : enumerate_pyramids(Partition({2, 5}))) {
        LieDatum lie(py);
        std::vector<std::pair<int, int>> expect{{1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
        CHECK(lie.e_support == expect);
    }

    LieDatum cols(enumerate_pyramids(Partition({1, 1, 1}))[0]);
    CHECK(cols.e_support.empty());
    CHECK(cols.d_chi == 0);

    for (int N = 1; N <= 6; ++N) {
        LieDatum row(enumerate_pyramids(Partition({N}))[0]);
        CHECK(row.d_chi == static_cast<long long>(N) * (N - 1) / 2);
        // cross-check via the orbit dimension N^2 - dim g^e
        const long long dim_ge =
            static_cast<long long>(centralizer_basis(row.pyramid).elements.size());
        CHECK(2 * row.d_chi == static_cast<long long>(N) * N - dim_ge);
    }

    // chi vanishes outside degree -1
    for (int N = 1; N <= 5; ++N)
        for (const Partition& p : partitions_of(N))
            for (const Pyramid& py : enumerate_pyramids(p)) {
                LieDatum lie(py);
                for (int i = 1; i <= N; ++i)
                    for (int j = 1; j <= N; ++j)
                        if (lie.chi_of(i, j) != 0)
                            CHECK(lie.degree(i, j) == -1);
            }
}

TEST_CASE("jordan type of e equals the partition")
{
    for (int N = 1; N <= 6; ++N)
        for (const Partition& p : partitions_of(N))
            for (const Pyramid& py : enumerate_pyramids(p)) {
                LieDatum lie(py);
                CHECK(jordan_type_of_nilpotent(lie.e_matrix(), N) == p.parts);
            }
}

TEST_CASE("centralizer basis")
{
    {
        auto basis = centralizer_basis(enumerate_pyramids(Partition({1}))[0]);
        REQUIRE(basis.elements.size() == 1);
        CHECK(basis.elements[0].support == std::vector<std::pair<int, int>>{{1, 1}});
    }
    {
        const Pyramid py = enumerate_pyramids(Partition({2, 5}))[0];
        const auto c11 = centralizer_element(py, 1, 1, 1);
        CHECK(c11.support == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});
    }

    for (int N = 1; N <= 5; ++N)
        for (const Partition& p : partitions_of(N))
            for (const Pyramid& py : enumerate_pyramids(p)) {
                LieDatum lie(py);
                const auto basis = centralizer_basis(py);
                CHECK(static_cast<long long>(basis.elements.size()) == lie.dim_g0());

                const auto e = unit_sum_matrix(py, lie.e_support);
                for (const auto& ce : basis.elements) {
                    const auto cm = unit_sum_matrix(py, ce.support);
                    const auto br = matrix_bracket(cm, e, N);
                    for (long long v : br)
                        CHECK(v == 0);
                }

                // [c_{i,j}^{(r)}, c_{k,l}^{(s)}] = d_{j,k} c_{i,l}^{(r+s-1)} - d_{i,l} c_{k,j}^{(r+s-1)}
                for (const auto& x : basis.elements)
                    for (const auto& y : basis.elements) {
                        auto lhs = matrix_bracket(unit_sum_matrix(py, x.support),
                                                  unit_sum_matrix(py, y.support), N);
                        std::vector<long long> rhs(N * N, 0);
                        if (x.j == y.i) {
                            auto c = centralizer_element(py, x.i, y.j, x.r + y.r - 1);
                            auto m = unit_sum_matrix(py, c.support);
                            for (int t = 0; t < N * N; ++t)
                                rhs[t] += m[t];
                        }
                        if (x.i == y.j) {
                            auto c = centralizer_element(py, y.i, x.j, x.r + y.r - 1);
                            auto m = unit_sum_matrix(py, c.support);
                            for (int t = 0; t < N * N; ++t)
                                rhs[t] -= m[t];
                        }
                        CHECK(lhs == rhs);
                    }
            }
}

TEST_CASE("weights and their identities")
{
    // rho is -i in coordinate i for every pyramid
    for (const Pyramid& py : enumerate_pyramids(Partition({1, 2, 4}))) {
        const WeightTable w = weights(py);
        for (int i = 1; i <= py.box_count(); ++i)
            CHECK(w.rho[i] == -i);
    }

    {
        const WeightTable w = weights(enumerate_pyramids(Partition({1}))[0]);
        CHECK(w.gamma == WeightVector(1));
        CHECK(w.beta == WeightVector(1));
        CHECK(w.rho == w.rho_bar);
        CHECK(w.rho == w.rho_tilde);
    }

    {
        const Pyramid py = enumerate_pyramids(Partition({2, 5}))[0];
        const WeightTable w = weights(py);
        CHECK((w.rho_bar + w.gamma - w.rho) == WeightVector(7));
    }

    for (int N = 1; N <= 6; ++N)
        for (const Partition& p : partitions_of(N))
            for (const Pyramid& py : enumerate_pyramids(p)) {
                const WeightTable w = weights(py);
                CHECK(w.rho == w.rho_bar + w.gamma);
                CHECK(w.rho_tilde == w.rho_bar + w.beta);
                CHECK(w.rho_tilde == w.eta + w.rho_levi);

                // gamma and beta against their root-set definitions
                auto cmin_plus = root_sum(py, [&](int i, int j) {
                    return py.col(i) > py.col(j) && py.row(i) < py.row(j);
                });
                CHECK(w.gamma == cmin_plus);
                auto cmin = root_sum(py, [&](int i, int j) { return py.col(i) > py.col(j); });
                CHECK(w.beta == cmin);

                // doubled half-sum oracles (delta = (N+1)/2 * sum eps_i)
                auto b_pos = root_sum(py, [&](int i, int j) {
                    return py.row(i) < py.row(j) ||
                           (py.row(i) == py.row(j) && py.col(i) < py.col(j));
                });
                auto p_pos = root_sum(py, [&](int i, int j) {
                    return py.col(i) < py.col(j) ||
                           (py.col(i) == py.col(j) && py.row(i) < py.row(j));
                });
                for (int i = 1; i <= N; ++i) {
                    CHECK(2 * w.rho[i] == b_pos[i] - (N + 1));
                    CHECK(2 * w.rho_bar[i] == p_pos[i] - (N + 1));
                }
            }
}
