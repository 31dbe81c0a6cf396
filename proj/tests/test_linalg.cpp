#include <doctest.h>

#include "operadic/catalog.hpp"
#include "operadic/linalg.hpp"
#include "operadic/transform.hpp"
#include "test_util.hpp"

using namespace operadic;

namespace {
Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar(n, d); }
}

TEST_SUITE("linalg") {
    TEST_CASE("rref basics") {
        auto rr = rref(Mat{{q(1), q(2)}, {q(2), q(4)}});
        CHECK(rr.pivots == std::vector<std::size_t>{0});
        CHECK(rr.m.row(0) == Vec{q(1), q(2)});
        CHECK(rr.m.row(1).is_zero());

        auto id = rref(Mat::identity(3));
        CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
        CHECK(id.m == Mat::identity(3));

        auto perm = rref(Mat{{q(0), q(1)}, {q(1), q(0)}});
        CHECK(perm.m == Mat::identity(2));
        CHECK(perm.pivots == std::vector<std::size_t>{0, 1});
    }

    TEST_CASE("rref is idempotent on seeded matrices") {
        testutil::Rng rng(11);
        for (int it = 0; it < 40; ++it) {
            Mat m = testutil::random_mat(rng, 1 + rng.below(5), 1 + rng.below(6));
            auto r1 = rref(m);
            auto r2 = rref(r1.m);
            CHECK(r1.m == r2.m);
        }
    }

    TEST_CASE("solve_affine examples") {
        auto s1 = solve_affine(Mat::identity(2), Vec{q(1), q(2)});
        REQUIRE(s1.has_value());
        CHECK(s1->particular == Vec{q(1), q(2)});
        CHECK(s1->homogeneous.dim() == 0);

        auto s2 = solve_affine(Mat{{q(1), q(1)}}, Vec{q(1)});
        REQUIRE(s2.has_value());
        CHECK(s2->particular == Vec{q(1), q(0)});
        CHECK(s2->homogeneous.dim() == 1);
        CHECK(s2->homogeneous.member(Vec{q(1), q(-1)}));

        auto s3 = solve_affine(Mat{{q(1)}, {q(1)}}, Vec{q(1), q(2)});
        CHECK(!s3.has_value());
    }

    TEST_CASE("solution sets actually solve on seeded systems") {
        testutil::Rng rng(13);
        for (int it = 0; it < 40; ++it) {
            std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(5);
            Mat a = testutil::random_mat(rng, rows, cols);
            Vec x = testutil::random_vec(rng, cols);
            Vec b = a * x;
            auto s = solve_affine(a, b);
            REQUIRE(s.has_value());
            CHECK(a * s->particular == b);
            for (std::size_t i = 0; i < s->homogeneous.dim(); ++i)
                CHECK((a * s->homogeneous.basis().row(i)).is_zero());
            CHECK(s->homogeneous.member(x - s->particular));
        }
    }

    TEST_CASE("membership") {
        Subspace s = Subspace::from_rows(2, Mat{{q(1), q(0)}});
        CHECK(s.member(Vec{q(2), q(0)}));
        CHECK(!s.member(Vec{q(0), q(1)}));
        CHECK(Subspace::full(3).member(Vec{q(5), q(-7), q(1, 3)}));
        CHECK_THROWS(s.member(Vec{q(1), q(0), q(0)}));
    }

    TEST_CASE("member agrees with a rank oracle on seeded subspaces") {
        testutil::Rng rng(17);
        for (int it = 0; it < 60; ++it) {
            std::size_t dim = 2 + rng.below(5);
            Mat rows = testutil::random_mat(rng, 1 + rng.below(4), dim);
            Subspace s = Subspace::from_rows(dim, rows);
            Vec v = testutil::random_vec(rng, dim);
            Mat with_v = rows;
            with_v.append_row(v);
            bool rank_same = rref(with_v).pivots.size() == rref(rows).pivots.size();
            CHECK(s.member(v) == rank_same);
        }
    }

    TEST_CASE("subspace canonical form equality") {
        // Same span presented with different generating sets.
        Subspace a = Subspace::from_rows(3, Mat{{q(1), q(1), q(0)}, {q(0), q(0), q(1)}});
        Subspace b = Subspace::from_rows(3, Mat{{q(2), q(2), q(2)}, {q(0), q(0), q(-5)},
                                                {q(1), q(1), q(1)}});
        CHECK(a == b);
        CHECK(a.dim() == 2);
    }

    TEST_CASE("intersection and sum") {
        Subspace a = Subspace::from_rows(3, Mat{{q(1), q(0), q(0)}, {q(0), q(1), q(0)}});
        Subspace b = Subspace::from_rows(3, Mat{{q(0), q(1), q(0)}, {q(0), q(0), q(1)}});
        Subspace i = intersect(a, b);
        CHECK(i.dim() == 1);
        CHECK(i.member(Vec{q(0), q(1), q(0)}));
        CHECK(sum(a, b) == Subspace::full(3));

        testutil::Rng rng(19);
        for (int it = 0; it < 30; ++it) {
            std::size_t dim = 2 + rng.below(5);
            Subspace s = Subspace::from_rows(dim, testutil::random_mat(rng, 1 + rng.below(4), dim));
            Subspace t = Subspace::from_rows(dim, testutil::random_mat(rng, 1 + rng.below(4), dim));
            Subspace i2 = intersect(s, t);
            CHECK(s.contains(i2));
            CHECK(t.contains(i2));
            CHECK(i2.dim() + sum(s, t).dim() == s.dim() + t.dim());
        }
    }

    TEST_CASE("annihilator dimensions") {
        Mat id = Mat::identity(4);
        CHECK(Subspace(4).annihilator(id) == Subspace::full(4));
        CHECK(Subspace::full(4).annihilator(id).dim() == 0);
    }

    TEST_CASE("annihilator of dendriform relations under the signed pairing") {
        OperadPresentation dend = catalog("dend");
        Subspace r = relation_subspace(dend);
        REQUIRE(r.dim() == 3);
        Subspace ann = r.annihilator(dual_pairing(2));
        CHECK(ann.dim() == 5);
        Subspace ad = relation_subspace(catalog("assocdialg"));
        CHECK(ann == ad);
    }

    TEST_CASE("double annihilator with transposed pairing on seeded data") {
        testutil::Rng rng(23);
        for (int it = 0; it < 20; ++it) {
            std::size_t dim = 2 + rng.below(17);  // ambient up to 18
            Mat pairing = testutil::random_invertible(rng, dim);
            Subspace s = Subspace::from_rows(dim, testutil::random_mat(rng, 1 + rng.below(dim), dim));
            Subspace back = s.annihilator(pairing).annihilator(pairing.transpose());
            CHECK(back == s);
            CHECK(s.annihilator(pairing).dim() == dim - s.dim());
        }
    }

    TEST_CASE("matrix inverse") {
        Mat a{{q(2), q(1)}, {q(1), q(1)}};
        CHECK(inverse(a) * a == Mat::identity(2));
        CHECK_THROWS(inverse(Mat{{q(1), q(2)}, {q(2), q(4)}}));
    }
}
