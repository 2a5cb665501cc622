#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "blockfuse/gf.hpp"
#include "blockfuse/matrix.hpp"
#include "blockfuse/poly.hpp"

using namespace blockfuse;

namespace {

Poly random_test_poly(const FieldSpec& k, int max_deg, std::mt19937_64& rng) {
    Poly f;
    int deg = 1 + static_cast<int>(rng() % max_deg);
    f.c.resize(deg + 1, fe_zero(k));
    for (auto& x : f.c) x = fe_from_index(k, rng() % k.card());
    f.c[deg] = fe_one(k);  // keep it nonzero
    return poly_trim(std::move(f));
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    FieldSpec f2 = make_field(2, 1);
    CHECK(fe_is_zero(fe_add(f2, fe_one(f2), fe_one(f2))));
    FieldSpec f3 = make_field(3, 1);
    CHECK(fe_mul(f3, fe_from_int(f3, 2), fe_from_int(f3, 2)) == fe_one(f3));
}

TEST_CASE("GF(4) multiplication reduces by the modulus") {
    FieldSpec f4 = make_field(2, 2);
    CHECK(f4.modulus == std::vector<unsigned>{1, 1, 1});  // t^2 + t + 1
    FieldElement t{{0, 1}};
    FieldElement t_plus_1{{1, 1}};
    CHECK(fe_mul(f4, t, t) == t_plus_1);
}

TEST_CASE("field axioms and Frobenius") {
    std::mt19937_64 rng(5);
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned m : {1u, 2u}) {
            FieldSpec k = make_field(p, m);
            for (int trial = 0; trial < 40; ++trial) {
                FieldElement a = fe_from_index(k, rng() % k.card());
                FieldElement b = fe_from_index(k, rng() % k.card());
                FieldElement c = fe_from_index(k, rng() % k.card());
                CHECK(fe_add(k, a, b) == fe_add(k, b, a));
                CHECK(fe_mul(k, a, fe_add(k, b, c)) ==
                      fe_add(k, fe_mul(k, a, b), fe_mul(k, a, c)));
                // characteristic p
                FieldElement pa = fe_scale(k, a, p);
                CHECK(fe_is_zero(pa));
                // Freshman's dream
                CHECK(fe_pow(k, fe_add(k, a, b), p) ==
                      fe_add(k, fe_pow(k, a, p), fe_pow(k, b, p)));
            }
        }
    }
}

TEST_CASE("x^(p^m) = x over the whole field") {
    for (unsigned p : {2u, 3u}) {
        for (unsigned m : {1u, 2u, 3u}) {
            FieldSpec k = make_field(p, m);
            for (std::uint64_t i = 0; i < k.card(); ++i) {
                FieldElement x = fe_from_index(k, i);
                CHECK(fe_pow(k, x, k.card()) == x);
            }
        }
    }
}

TEST_CASE("inverses") {
    for (unsigned p : {2u, 3u}) {
        FieldSpec k = make_field(p, 3);
        for (std::uint64_t i = 1; i < k.card(); ++i) {
            FieldElement x = fe_from_index(k, i);
            CHECK(fe_mul(k, x, fe_inv(k, x)) == fe_one(k));
        }
        CHECK_THROWS_AS(fe_inv(k, fe_zero(k)), std::invalid_argument);
    }
}

TEST_CASE("element text form") {
    FieldSpec k = make_field(3, 2);
    FieldElement x{{2, 1}};
    CHECK(fe_format(x) == "2,1");
    CHECK(fe_parse(k, "2,1") == x);
}

TEST_CASE("deterministic irreducible moduli") {
    CHECK(find_irreducible(3, 1).c.size() == 2);  // t
    CHECK(make_field(3, 1).modulus == std::vector<unsigned>{0, 1});
    CHECK(make_field(2, 2).modulus == std::vector<unsigned>{1, 1, 1});    // t^2+t+1
    CHECK(make_field(2, 3).modulus == std::vector<unsigned>{1, 1, 0, 1});  // t^3+t+1
}

TEST_CASE("polynomial division and gcd") {
    FieldSpec k = make_field(3, 1);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Poly a = random_test_poly(k, 6, rng);
        Poly b = random_test_poly(k, 4, rng);
        auto [q, r] = poly_divmod(k, a, b);
        CHECK(poly_add(k, poly_mul(k, q, b), r) == a);
        CHECK(r.degree() < b.degree());
        Poly g = poly_gcd(k, a, b);
        CHECK(poly_mod(k, a, g).is_zero());
        CHECK(poly_mod(k, b, g).is_zero());
    }
}

TEST_CASE("factorization golden cases") {
    SECTION("t^2 - 1 over GF(3) splits into visible roots") {
        FieldSpec k = make_field(3, 1);
        Poly f{{fe_from_int(k, -1), fe_zero(k), fe_one(k)}};
        FactorResult res = factor(k, f, 42);
        REQUIRE(res.factors.size() == 2);
        CHECK(res.factors[0].first == Poly{{fe_from_int(k, 1), fe_one(k)}});  // t + 1
        CHECK(res.factors[1].first == Poly{{fe_from_int(k, 2), fe_one(k)}});  // t + 2
        CHECK(res.factors[0].second == 1);
        CHECK(res.factors[1].second == 1);
    }
    SECTION("t^2 + 1 over GF(3) stays irreducible") {
        FieldSpec k = make_field(3, 1);
        Poly f{{fe_one(k), fe_zero(k), fe_one(k)}};
        FactorResult res = factor(k, f, 42);
        REQUIRE(res.factors.size() == 1);
        CHECK(res.factors[0].first == f);
        CHECK(res.factors[0].second == 1);
    }
    SECTION("t^4 + t^2 over GF(2) is t^2 (t+1)^2") {
        FieldSpec k = make_field(2, 1);
        Poly f{{fe_zero(k), fe_zero(k), fe_one(k), fe_zero(k), fe_one(k)}};
        FactorResult res = factor(k, f, 42);
        REQUIRE(res.factors.size() == 2);
        CHECK(res.factors[0].first == poly_x(k));
        CHECK(res.factors[0].second == 2);
        CHECK(res.factors[1].first == Poly{{fe_one(k), fe_one(k)}});
        CHECK(res.factors[1].second == 2);
    }
}

TEST_CASE("factorization re-multiplies to its input") {
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned m : {1u, 2u}) {
            FieldSpec k = make_field(p, m);
            std::mt19937_64 rng(1000 * p + m);
            for (int trial = 0; trial < 200; ++trial) {
                Poly f = random_test_poly(k, 8, rng);
                if (f.degree() < 1) continue;
                FactorResult res = factor(k, f, 99 + trial);
                Poly prod = poly_const(k, res.unit);
                for (const auto& [g, mult] : res.factors) {
                    CHECK(g.c.back() == fe_one(k));  // monic
                    for (unsigned t = 0; t < mult; ++t) prod = poly_mul(k, prod, g);
                }
                CHECK(prod == f);
            }
        }
    }
}

TEST_CASE("factorization rejects zero and is seed-stable") {
    FieldSpec k = make_field(2, 1);
    CHECK_THROWS_AS(factor(k, Poly{}, 1), std::invalid_argument);
    std::mt19937_64 rng(3);
    Poly f = random_test_poly(k, 10, rng);
    FactorResult a = factor(k, f, 7);
    FactorResult b = factor(k, f, 7);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].first == b.factors[i].first);
        CHECK(a.factors[i].second == b.factors[i].second);
    }
}

TEST_CASE("minimal polynomials of matrices") {
    FieldSpec k = make_field(2, 1);
    SECTION("zero matrix") {
        Matrix m = Matrix::zero(k, 3, 3);
        CHECK(min_poly(k, m) == poly_x(k));
    }
    SECTION("identity matrix") {
        Matrix m = Matrix::zero(k, 3, 3);
        for (int i = 0; i < 3; ++i) m.at(i, i) = fe_one(k);
        CHECK(min_poly(k, m) == Poly{{fe_one(k), fe_one(k)}});  // t - 1 = t + 1
    }
    SECTION("nilpotent Jordan block") {
        Matrix m = Matrix::zero(k, 2, 2);
        m.at(0, 1) = fe_one(k);
        Poly t2{{fe_zero(k), fe_zero(k), fe_one(k)}};
        CHECK(min_poly(k, m) == t2);
    }
    SECTION("annihilation over GF(9)") {
        FieldSpec k9 = make_field(3, 2);
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            Matrix m = Matrix::zero(k9, 4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) m.at(r, c) = fe_from_index(k9, rng() % k9.card());
            Poly mu = min_poly(k9, m);
            CHECK(mu.degree() >= 1);
            CHECK(mu.degree() <= 4);
            // evaluate mu at m on each basis vector
            for (int start = 0; start < 4; ++start) {
                std::vector<FieldElement> v(4, fe_zero(k9));
                v[start] = fe_one(k9);
                std::vector<FieldElement> acc(4, fe_zero(k9));
                for (int d = mu.degree(); d >= 0; --d) {
                    acc = mat_vec(k9, m, acc);
                    for (int i = 0; i < 4; ++i)
                        acc[i] = fe_add(k9, acc[i], fe_mul(k9, mu.c[d], v[i]));
                }
                for (int i = 0; i < 4; ++i) CHECK(fe_is_zero(acc[i]));
            }
        }
    }
}

TEST_CASE("row space tracks coordinates") {
    FieldSpec k = make_field(5, 1);
    RowSpace space(k, 3);
    CHECK(space.insert({fe_from_int(k, 1), fe_from_int(k, 2), fe_from_int(k, 0)}));
    CHECK(space.insert({fe_from_int(k, 0), fe_from_int(k, 1), fe_from_int(k, 3)}));
    CHECK(space.rank() == 2);
    // 2*(1,2,0) + 1*(0,1,3) = (2,5,3) = (2,0,3)
    auto coords = space.coordinates({fe_from_int(k, 2), fe_from_int(k, 0), fe_from_int(k, 3)});
    REQUIRE(coords.has_value());
    CHECK_FALSE(space.coordinates({fe_from_int(k, 0), fe_from_int(k, 0), fe_from_int(k, 1)}).has_value());
}
