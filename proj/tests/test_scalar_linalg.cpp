#include <random>

#include "doctest.h"
#include "koszul/linalg.hpp"

using namespace koszul;

namespace {

Matrix dense(const Field& k, int cols, const std::vector<std::vector<long>>& entries) {
    Matrix m(static_cast<int>(entries.size()), cols);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (int j = 0; j < cols; ++j) {
            m.set(static_cast<int>(i), j, k.integer(entries[i][j]));
        }
    }
    return m;
}

SVec unit(const Field& k, int i) { return {{i, k.one()}}; }

SVec vec(const Field& k, const std::vector<long>& entries) {
    SVec v;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] != 0) v.emplace_back(static_cast<int>(i), k.integer(entries[i]));
    }
    return v;
}

std::vector<SVec> random_rows(const Field& k, std::mt19937& rng, int count, int ambient) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<SVec> rows(count);
    for (auto& r : rows) {
        for (int j = 0; j < ambient; ++j) {
            Scalar e = k.integer(entry(rng));
            if (!e.is_zero()) r.emplace_back(j, e);
        }
    }
    return rows;
}

}  // namespace

TEST_CASE("field construction and parsing") {
    Field q;
    CHECK(q.is_rational());
    CHECK(q.parse("3/6") == q.fraction(1, 2));
    CHECK(q.parse("-4/2") == q.integer(-2));
    CHECK_THROWS_AS(q.parse("1/0"), Error);
    CHECK_THROWS_AS(q.parse("x"), ValidationError);
    CHECK_THROWS_AS(Field(6), ValidationError);
    CHECK_THROWS_AS(Field(1), ValidationError);

    Field f5(5);
    CHECK(f5.parse("1/2") == f5.integer(3));  // 2 * 3 = 6 = 1 mod 5
    CHECK(f5.parse("-1") == f5.integer(4));
    CHECK_THROWS_AS(f5.parse("1/5"), Error);
    CHECK(f5.integer(7) * f5.integer(4) == f5.integer(3));
    CHECK(f5.integer(2).inverse() == f5.integer(3));
}

TEST_CASE("scalar characteristic mixing is an error") {
    Field q;
    Field f3(3);
    CHECK_THROWS_AS(q.one() + f3.one(), FieldMismatchError);
    CHECK_THROWS_AS((void)(q.one() == f3.one()), FieldMismatchError);
}

TEST_CASE("rref of proportional rows") {
    Field q;
    auto r = rref(dense(q, 2, {{2, 4}, {1, 2}}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<int>{0});
    CHECK(svec_equal(r.mat.row(0), vec(q, {1, 2})));
}

TEST_CASE("rref of the identity") {
    Field q;
    Matrix id = dense(q, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto r = rref(id);
    CHECK(r.rank == 3);
    CHECK(r.mat == id);
}

TEST_CASE("rref collapses over F_2") {
    Field f2(2);
    auto r = rref(dense(f2, 2, {{1, 1}, {1, -1}}));
    CHECK(r.rank == 1);
    CHECK(svec_equal(r.mat.row(0), vec(f2, {1, 1})));
}

TEST_CASE("subspace intersection basics") {
    Field q;
    auto span = [&](std::vector<SVec> rows) { return Subspace::from_rows(3, std::move(rows)); };
    Subspace a = span({unit(q, 0), unit(q, 1)});
    Subspace b = span({unit(q, 1), unit(q, 2)});
    Subspace meet = intersect(a, b);
    CHECK(meet.dim() == 1);
    CHECK(svec_equal(meet.basis()[0], unit(q, 1)));

    CHECK(intersect(a, a) == a);

    Subspace e1 = span({unit(q, 0)});
    Subspace e2 = span({unit(q, 1)});
    CHECK(intersect(e1, e2).dim() == 0);

    Subspace other = Subspace::from_rows(4, {unit(q, 0)});
    CHECK_THROWS_AS(intersect(a, other), ValidationError);
}

TEST_CASE("solve_in_span") {
    Field q;
    SVec e1 = unit(q, 0);
    SVec e2 = unit(q, 1);
    SVec e1e2 = vec(q, {1, 1});

    auto sol = solve_in_span(q, {e1e2, e2}, e1);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == q.one());
    CHECK((*sol)[1] == q.integer(-1));

    auto empty = solve_in_span(q, {}, {});
    REQUIRE(empty.has_value());
    CHECK(empty->empty());

    CHECK_FALSE(solve_in_span(q, {e1}, e2).has_value());
}

TEST_CASE("rref is idempotent and preserves the row space") {
    std::mt19937 rng(12345);
    for (const Field& k : {Field(), Field(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            int ambient = 5;
            auto rows = random_rows(k, rng, 4, ambient);
            Matrix m = Matrix::from_rows(ambient, rows);
            auto r1 = rref(m);
            auto r2 = rref(r1.mat);
            CHECK(r1.mat == r2.mat);
            CHECK(r1.rank == r2.rank);
            // mutual containment via solve_in_span
            for (int i = 0; i < r1.mat.rows(); ++i) {
                CHECK(solve_in_span(k, rows, r1.mat.row(i)).has_value());
            }
            for (const auto& row : rows) {
                CHECK(solve_in_span(k, r1.mat.row_data(), row).has_value());
            }
        }
    }
}

TEST_CASE("dimension formula for sums and intersections") {
    std::mt19937 rng(99);
    for (const Field& k : {Field(), Field(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            int ambient = 6;
            Subspace a = Subspace::from_rows(ambient, random_rows(k, rng, 3, ambient));
            Subspace b = Subspace::from_rows(ambient, random_rows(k, rng, 3, ambient));
            Subspace meet = intersect(a, b);
            Subspace join = subspace_sum(a, b);
            CHECK(meet.dim() + join.dim() == a.dim() + b.dim());
            CHECK(a.contains(meet));
            CHECK(b.contains(meet));
            CHECK(join.contains(a));
            CHECK(join.contains(b));
        }
    }
}

TEST_CASE("solve_in_span recombination is exact") {
    std::mt19937 rng(7);
    Field k;
    for (int trial = 0; trial < 25; ++trial) {
        int ambient = 6;
        auto rows = random_rows(k, rng, 4, ambient);
        std::uniform_int_distribution<int> coeff(-2, 2);
        SVec target;
        for (const auto& r : rows) target = svec_axpy(target, k.integer(coeff(rng)), r);
        auto sol = solve_in_span(k, rows, target);
        REQUIRE(sol.has_value());
        SVec back;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            back = svec_axpy(back, (*sol)[i], rows[i]);
        }
        CHECK(svec_equal(back, target));
    }
}

TEST_CASE("left kernel spans exactly the combinations that vanish") {
    std::mt19937 rng(31);
    for (const Field& k : {Field(), Field(7)}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto rows = random_rows(k, rng, 5, 4);
            auto kernel = left_kernel(k, rows, 4);
            Subspace row_space = Subspace::from_rows(4, rows);
            CHECK(static_cast<int>(kernel.size()) == 5 - row_space.dim());
            for (const auto& combo : kernel) {
                SVec sum;
                for (const auto& [i, c] : combo) sum = svec_axpy(sum, c, rows[i]);
                CHECK(sum.empty());
            }
        }
    }
}
