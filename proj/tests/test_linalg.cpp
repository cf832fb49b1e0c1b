#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hall2p/matrix.hpp"

using namespace hall2p;

namespace {

FqMatrix make(const FqField* F, size_t r, size_t c, std::initializer_list<int> e)
{
    FqMatrix m(F, r, c);
    size_t i = 0;
    for (int v : e) {
        m.at(i / c, i % c) = static_cast<Fq>(v);
        ++i;
    }
    return m;
}

FqMatrix random_matrix(const FqField* F, size_t r, size_t c, std::mt19937& rng)
{
    FqMatrix m(F, r, c);
    std::uniform_int_distribution<int> d(0, static_cast<int>(F->q()) - 1);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
            m.at(i, j) = static_cast<Fq>(d(rng));
    return m;
}

} // namespace

TEST_CASE("field axioms hold for every supported q")
{
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        FqField F(q);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(F.add(static_cast<Fq>(a), 0) == a);
            CHECK(F.mul(static_cast<Fq>(a), 1) == a);
            CHECK(F.add(static_cast<Fq>(a), F.neg(static_cast<Fq>(a))) == 0);
            if (a != 0)
                CHECK(F.mul(static_cast<Fq>(a), F.inv(static_cast<Fq>(a))) == 1);
            for (unsigned b = 0; b < q; ++b) {
                CHECK(F.add(static_cast<Fq>(a), static_cast<Fq>(b)) ==
                      F.add(static_cast<Fq>(b), static_cast<Fq>(a)));
                CHECK(F.mul(static_cast<Fq>(a), static_cast<Fq>(b)) ==
                      F.mul(static_cast<Fq>(b), static_cast<Fq>(a)));
                for (unsigned c = 0; c < q; ++c) {
                    Fq fa = static_cast<Fq>(a), fb = static_cast<Fq>(b),
                       fc = static_cast<Fq>(c);
                    CHECK(F.mul(fa, F.add(fb, fc)) ==
                          F.add(F.mul(fa, fb), F.mul(fa, fc)));
                    CHECK(F.mul(F.mul(fa, fb), fc) == F.mul(fa, F.mul(fb, fc)));
                    CHECK(F.add(F.add(fa, fb), fc) == F.add(fa, F.add(fb, fc)));
                }
            }
        }
    }
    CHECK_THROWS_AS(FqField(6), ConfigError);
    CHECK_THROWS_AS(FqField(11), ConfigError);
}

TEST_CASE("extension field tables match polynomial arithmetic")
{
    // F_4 = F_2[x]/(x^2+x+1): x * x = x + 1, i.e. 2 * 2 = 3
    FqField F4(4);
    CHECK(F4.mul(2, 2) == 3);
    CHECK(F4.mul(2, 3) == 1);
    // F_9 = F_3[x]/(x^2+1): x * x = -1 = 2
    FqField F9(9);
    CHECK(F9.mul(3, 3) == 2);
    // F_8 = F_2[x]/(x^3+x+1): x^3 = x + 1
    FqField F8(8);
    CHECK(F8.mul(2, 4) == 3);
}

TEST_CASE("rref on pinned examples")
{
    FqField F3(3);
    FqMatrix id = FqMatrix::identity(&F3, 2);
    RrefResult r = rref(id);
    CHECK(r.mat == id);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<size_t>{0, 1});

    FqMatrix z(&F3, 3, 3);
    RrefResult rz = rref(z);
    CHECK(rz.mat == z);
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());

    FqField F5(5);
    FqMatrix m = make(&F5, 2, 2, {1, 2, 2, 4}); // row 2 = 2 * row 1
    CHECK(rank(m) == 1);
}

TEST_CASE("rref is idempotent and deterministic")
{
    std::mt19937 rng(99);
    for (unsigned q : {2u, 4u, 5u, 9u}) {
        FqField F(q);
        for (int it = 0; it < 30; ++it) {
            FqMatrix m = random_matrix(&F, 4, 6, rng);
            RrefResult r1 = rref(m);
            RrefResult r2 = rref(r1.mat);
            CHECK(r1.mat == r2.mat);
            CHECK(r1.pivots == r2.pivots);
            RrefResult again = rref(m);
            CHECK(again.mat == r1.mat);
        }
    }
}

TEST_CASE("rank-nullity")
{
    std::mt19937 rng(1234);
    for (unsigned q : {2u, 3u, 4u, 8u}) {
        FqField F(q);
        for (int it = 0; it < 40; ++it) {
            size_t r = 1 + it % 5, c = 1 + (it * 7) % 6;
            FqMatrix m = random_matrix(&F, r, c, rng);
            FqMatrix k = kernel_rows(m);
            CHECK(rank(m) + k.rows() == c);
            // kernel rows really are in the kernel
            for (size_t i = 0; i < k.rows(); ++i) {
                std::vector<Fq> x(c);
                for (size_t j = 0; j < c; ++j)
                    x[j] = k.at(i, j);
                for (size_t row = 0; row < r; ++row) {
                    Fq acc = 0;
                    for (size_t j = 0; j < c; ++j)
                        acc = F.add(acc, F.mul(m.at(row, j), x[j]));
                    CHECK(acc == 0);
                }
            }
        }
    }
}

TEST_CASE("solve_affine")
{
    FqField F2(2);
    FqMatrix id = FqMatrix::identity(&F2, 3);
    auto s = solve_affine(id, {1, 0, 1});
    REQUIRE(s.has_value());
    CHECK(s->particular == std::vector<Fq>{1, 0, 1});
    CHECK(s->kernel.rows() == 0);

    FqMatrix z(&F2, 2, 3);
    auto sz = solve_affine(z, {0, 0});
    REQUIRE(sz.has_value());
    CHECK(sz->kernel.rows() == 3);

    // A = [[1,1]] over F_2, b = [1]: 2 solutions
    FqMatrix a = make(&F2, 1, 2, {1, 1});
    auto sa = solve_affine(a, {1});
    REQUIRE(sa.has_value());
    CHECK(sa->kernel.rows() == 1);
    // cross-check by enumerating all 4 vectors
    int count = 0;
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
            if ((x0 + x1) % 2 == 1)
                ++count;
    CHECK(count == 2);

    auto none = solve_affine(z, {1, 0});
    CHECK_FALSE(none.has_value());
}

TEST_CASE("space enumeration")
{
    FqField F3(3);
    SpaceEnumerator e0(&F3, 0);
    CHECK(e0.size() == 1);
    CHECK(e0.coefficients(0).empty());

    SpaceEnumerator e1(&F3, 1);
    CHECK(e1.size() == 3);

    FqField F5(5);
    SpaceEnumerator e4(&F5, 4);
    CHECK(e4.size() == 625);
    // each element exactly once, lexicographic order
    CHECK(e4.coefficients(0) == std::vector<Fq>{0, 0, 0, 0});
    CHECK(e4.coefficients(1) == std::vector<Fq>{0, 0, 0, 1});
    CHECK(e4.coefficients(624) == std::vector<Fq>{4, 4, 4, 4});

    CHECK_THROWS_AS(SpaceEnumerator(&F5, 30), GuardExceeded);
    try {
        SpaceEnumerator big(&F5, 30);
    } catch (const GuardExceeded& g) {
        CHECK(g.size == int_pow(5, 30));
    }
}

TEST_CASE("LinSolver answers many right-hand sides")
{
    std::mt19937 rng(5);
    FqField F(7);
    FqMatrix a = random_matrix(&F, 4, 5, rng);
    LinSolver solver(a);
    for (int it = 0; it < 20; ++it) {
        std::vector<Fq> x(5);
        std::uniform_int_distribution<int> d(0, 6);
        for (auto& v : x)
            v = static_cast<Fq>(d(rng));
        std::vector<Fq> b(4, 0);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 5; ++j)
                b[i] = F.add(b[i], F.mul(a.at(i, j), x[j]));
        auto sol = solver.solve(b);
        REQUIRE(sol.has_value());
        // a * sol == b
        for (size_t i = 0; i < 4; ++i) {
            Fq acc = 0;
            for (size_t j = 0; j < 5; ++j)
                acc = F.add(acc, F.mul(a.at(i, j), (*sol)[j]));
            CHECK(acc == b[i]);
        }
    }
}
