#include <doctest.h>

#include <random>

#include "alckit/alcove.hpp"
#include "alckit/root_system.hpp"

using namespace alckit;

namespace {

Root simple(const RootSystem& rs, int i) {
    std::vector<long long> e((std::size_t)rs.rank, 0);
    e[(std::size_t)(i - 1)] = 1;
    return Root{e};
}

} // namespace

TEST_CASE("vertex pairing matrix is delta_ij/n_i, rank <= 8") {
    for (const LieType& t : all_types_up_to_rank(8)) {
        RootSystem rs = build_root_system(t);
        std::vector<Coweight> v = alcove_vertices(rs);
        REQUIRE((int)v.size() == rs.rank + 1);
        CHECK(v[0].is_zero());
        for (int i = 1; i <= rs.rank; ++i)
            for (int j = 1; j <= rs.rank; ++j) {
                Rat expect = i == j ? Rat(1, rs.marks[(std::size_t)(i - 1)]) : Rat(0);
                CHECK(pairing(simple(rs, i), v[(std::size_t)j], rs) == expect);
            }
        for (int j = 1; j <= rs.rank; ++j)
            CHECK(pairing(rs.highest_root, v[(std::size_t)j], rs) == Rat(1));
        CHECK(pairing(rs.highest_root, v[0], rs) == Rat(0));
    }
}

TEST_CASE("A1 vertex is alpha^v/2") {
    RootSystem rs = build_root_system(LieType::parse("A1"));
    CHECK(alcove_vertices(rs)[1].coeffs[0] == Rat(1, 2));
}

TEST_CASE("orders: k_0 = 1, A1 and G2 values, brute-force minimality") {
    RootSystem a1 = build_root_system(LieType::parse("A1"));
    AlcoveOrders o1 = alcove_orders(a1);
    CHECK(o1.k_each == std::vector<long long>{1, 2});
    CHECK(o1.k_g == 2);

    RootSystem g2 = build_root_system(LieType::parse("G2"));
    AlcoveOrders o2 = alcove_orders(g2);
    CHECK(o2.k_each == std::vector<long long>{1, 3, 2});
    CHECK(o2.k_g == 6);

    // brute-force minimality of every k_i, types rank <= 4
    for (const LieType& t : all_types_up_to_rank(4)) {
        RootSystem rs = build_root_system(t);
        AlcoveOrders o = alcove_orders(rs);
        std::vector<Coweight> v = alcove_vertices(rs);
        CHECK(o.k_each[0] == 1);
        for (int i = 0; i <= rs.rank; ++i) {
            long long k = o.k_each[(std::size_t)i];
            CHECK(v[(std::size_t)i].scaled(Rat(k)).is_integral());
            for (long long m = 1; m < k; ++m)
                CHECK(!v[(std::size_t)i].scaled(Rat(m)).is_integral());
        }
    }
}

TEST_CASE("k_G * eta_i is coroot-integral and n_i | k_G, rank <= 8") {
    for (const LieType& t : all_types_up_to_rank(8)) {
        RootSystem rs = build_root_system(t);
        AlcoveOrders o = alcove_orders(rs);
        std::vector<Coweight> v = alcove_vertices(rs);
        INFO(t.name());
        for (int i = 0; i <= rs.rank; ++i)
            CHECK(v[(std::size_t)i].scaled(Rat(o.k_g)).is_integral());
        for (long long n : rs.marks)
            CHECK(o.k_g % n == 0);
    }
}

TEST_CASE("barycentric coordinates at and between vertices") {
    RootSystem rs = build_root_system(LieType::parse("A2"));
    std::vector<Coweight> v = alcove_vertices(rs);

    auto bary = [&](const Coweight& w) { return barycentric(rs, make_alcove_point(rs, w)); };

    CHECK(bary(v[0]) == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
    CHECK(bary(v[1]) == std::vector<Rat>{Rat(0), Rat(1), Rat(0)});
    CHECK(bary(v[2]) == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    Coweight mid = (v[1] + v[2]).scaled(Rat(1, 2));
    CHECK(bary(mid) == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("barycentric round-trips random alcove points, rank <= 4") {
    std::mt19937_64 rng(20240817);
    for (const LieType& t : all_types_up_to_rank(4)) {
        RootSystem rs = build_root_system(t);
        std::vector<Coweight> v = alcove_vertices(rs);
        for (int trial = 0; trial < 25; ++trial) {
            // random nonnegative rational weights with sum <= 1
            std::vector<Rat> a((std::size_t)rs.rank + 1, Rat(0));
            Rat remaining(1);
            for (int i = 1; i <= rs.rank; ++i) {
                long long num = (long long)(rng() % 4);
                Rat take = remaining * Rat(num, 8);
                a[(std::size_t)i] = take;
                remaining -= take;
            }
            a[0] = remaining;
            Coweight p = Coweight::zero(rs.rank);
            for (int i = 1; i <= rs.rank; ++i)
                p = p + v[(std::size_t)i].scaled(a[(std::size_t)i]);
            CHECK(barycentric(rs, make_alcove_point(rs, p)) == a);
        }
    }
}

TEST_CASE("points outside the alcove are rejected with the violated inequality") {
    RootSystem rs = build_root_system(LieType::parse("A2"));
    Coweight bad = Coweight::zero(2);
    bad.coeffs[0] = Rat(-1);
    CHECK_THROWS_WITH_AS(make_alcove_point(rs, bad),
                         doctest::Contains("<alpha_"), std::domain_error);
    Coweight far = Coweight::zero(2);
    far.coeffs[0] = Rat(5);
    far.coeffs[1] = Rat(5);
    CHECK_THROWS_WITH_AS(make_alcove_point(rs, far), doctest::Contains("<theta"),
                         std::domain_error);
}

TEST_CASE("face_of and is_exotic") {
    RootSystem rs = build_root_system(LieType::parse("A2"));
    std::vector<Coweight> v = alcove_vertices(rs);
    CHECK(face_of(rs, make_alcove_point(rs, v[0])).support == std::vector<int>{0});
    for (int j = 1; j <= rs.rank; ++j) {
        FaceLabel f = face_of(rs, make_alcove_point(rs, v[(std::size_t)j]));
        CHECK(f.support == std::vector<int>{j});
        CHECK(is_exotic(f));
    }
    CHECK(!is_exotic(FaceLabel::make({0}, 2)));
    CHECK(!is_exotic(FaceLabel::make({0, 1}, 2)));
    Coweight mid = (v[1] + v[2]).scaled(Rat(1, 2));
    CHECK(face_of(rs, make_alcove_point(rs, mid)).support == std::vector<int>{1, 2});
}

TEST_CASE("eta_I sums the face vertices") {
    RootSystem a1 = build_root_system(LieType::parse("A1"));
    CHECK(eta_of_face(a1, FaceLabel::make({0}, 1)).is_zero());
    CHECK(eta_of_face(a1, FaceLabel::make({1}, 1)).coeffs[0] == Rat(1, 2));

    RootSystem a2 = build_root_system(LieType::parse("A2"));
    std::vector<Coweight> omega = fundamental_coweights(a2);
    CHECK(eta_of_face(a2, FaceLabel::make({1, 2}, 2)) == omega[0] + omega[1]);
}

TEST_CASE("face of the rescaled eta_I is exactly I, rank <= 3") {
    for (const LieType& t : all_types_up_to_rank(3)) {
        RootSystem rs = build_root_system(t);
        int n = rs.rank + 1;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> I;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i))
                    I.push_back(i);
            FaceLabel f = FaceLabel::make(I, rs.rank);
            AlcovePoint p = face_barycenter(rs, f);
            CHECK(face_of(rs, p) == f);
        }
    }
}
