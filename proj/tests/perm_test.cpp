#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "blockfuse/perm_group.hpp"
#include "blockfuse/permutation.hpp"
#include "blockfuse/sylow.hpp"

using namespace blockfuse;

namespace {

Permutation P(const std::string& text, int n) { return parse_cycles(text, n); }

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("composition convention: left factor applies first") {
    Permutation id = Permutation::identity(3);
    Permutation t12 = P("(1 2)", 3);
    Permutation t13 = P("(1 3)", 3);

    CHECK(id * t12 == t12);
    CHECK(t12 * t12 == id);

    // (1 2)(1 3) maps 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
    Permutation prod = t12 * t13;
    CHECK(prod(0) == 1);
    CHECK(prod(1) == 2);
    CHECK(prod(2) == 0);
    CHECK(prod == P("(1 2 3)", 3));
}

TEST_CASE("conjugation g^h relabels the points of g by h") {
    Permutation g = P("(1 2 3)", 4);
    Permutation h = P("(1 4)", 4);
    CHECK(g.conjugated(h) == h.inverse() * g * h);
    CHECK(g.conjugated(h) == P("(4 2 3)", 4));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> a(6), b(6);
        for (int i = 0; i < 6; ++i) a[i] = b[i] = i;
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        Permutation x{std::vector<int>(a)};
        Permutation y{std::vector<int>(b)};
        CHECK(cycle_type(x.conjugated(y)) == cycle_type(x));
    }
}

TEST_CASE("cycle types") {
    CHECK(format_cycle_type(cycle_type(Permutation::identity(4))) == "1^4");
    CHECK(format_cycle_type(cycle_type(P("(1 2 3)(4 5)", 5))) == "3^1 2^1");
    CycleType t = cycle_type(P("(1 2 3)(4 5)", 5));
    CHECK(t.total() == 5);
    CHECK(t.multiplicity_of(3) == 1);
    CHECK(t.multiplicity_of(1) == 0);
}

TEST_CASE("parity") {
    CHECK(Permutation::identity(5).is_even());
    CHECK_FALSE(P("(1 2)", 5).is_even());
    CHECK_FALSE(P("(1 2)(3 4)(5 6)", 6).is_even());
    CHECK(P("(1 2)(3 4)", 6).is_even());
}

TEST_CASE("cycle notation round trip") {
    CHECK(format_cycles(Permutation::identity(4)) == "()");
    CHECK(parse_cycles("()", 4) == Permutation::identity(4));
    Permutation p = P("(1 2 3)(4 5)", 6);
    CHECK(parse_cycles(format_cycles(p), 6) == p);
    CHECK_THROWS_AS(parse_cycles("(1 1)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1 9)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), std::invalid_argument);
}

TEST_CASE("degree mismatch is rejected") {
    CHECK_THROWS_AS(P("(1 2)", 3) * P("(1 2)", 4), std::invalid_argument);
}

TEST_CASE("order and powers") {
    Permutation g = P("(1 2 3 4 5 6)", 6);
    CHECK(g.order() == 6);
    CHECK(g.pow(6).is_identity());
    CHECK(g.pow(-1) == g.inverse());
    CHECK(g.pow(601) == g.pow(1));
    CHECK(g.pow_p_power(2, 3) == g.pow(8));
}

TEST_CASE("p-parts") {
    SECTION("p-regular element: trivial p-part") {
        Permutation g = P("(1 2 3)", 3);
        auto [gp, gpp] = p_parts(g, 2);
        CHECK(gp.is_identity());
        CHECK(gpp == g);
    }
    SECTION("p-element: trivial p'-part") {
        Permutation g = P("(1 2)", 2);
        auto [gp, gpp] = p_parts(g, 2);
        CHECK(gp == g);
        CHECK(gpp.is_identity());
    }
    SECTION("6-cycle at p = 2 splits as g^3 * g^4") {
        Permutation g = P("(1 2 3 4 5 6)", 6);
        auto [gp, gpp] = p_parts(g, 2);
        CHECK(gp == g.pow(3));
        CHECK(gpp == g.pow(4));
        CHECK(gp.order() == 2);
        CHECK(gpp.order() == 3);
        CHECK(gp * gpp == g);
        CHECK(gpp * gp == g);
    }
    SECTION("uniqueness against an exhaustive scan in S_4") {
        PermGroup s4 = PermGroup::symmetric(4);
        for (unsigned p : {2u, 3u}) {
            for (const auto& g : s4.elements()) {
                auto [gp, gpp] = p_parts(g, p);
                int count = 0;
                for (const auto& u : s4.elements()) {
                    if (!is_p_element(u, p)) continue;
                    Permutation v = u.inverse() * g;
                    if (!is_p_regular(v, p)) continue;
                    if (u * v != v * u) continue;
                    ++count;
                    CHECK(u == gp);
                    CHECK(v == gpp);
                }
                CHECK(count == 1);
            }
        }
    }
}

TEST_CASE("p-regular exponents") {
    CHECK(p_regular_exponent(6, 2).value() == 4);
    CHECK(p_regular_exponent(24, 2).value() == 16);
    CHECK(p_regular_exponent(24, 3).value() == 9);
    CHECK(p_regular_exponent(1, 2).value() == 1);

    // g^q = g_p' across a whole group
    PermGroup s5 = PermGroup::symmetric(5);
    for (unsigned p : {2u, 3u, 5u}) {
        PPower q = p_regular_exponent(s5.order(), p);
        for (const auto& g : s5.elements())
            CHECK(g.pow_p_power(q.prime, q.exp) == p_parts(g, p).second);
    }
}

TEST_CASE("enumeration") {
    CHECK(PermGroup::symmetric(3).order() == 6);
    CHECK(PermGroup::alternating(4).order() == 12);
    CHECK(PermGroup::symmetric(1).order() == 1);
    CHECK(PermGroup::alternating(2).order() == 1);

    SECTION("Klein closure by hand") {
        PermGroup v(4, {P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)});
        std::vector<Permutation> expect = {Permutation::identity(4), P("(1 2)(3 4)", 4),
                                           P("(1 3)(2 4)", 4), P("(1 4)(2 3)", 4)};
        std::sort(expect.begin(), expect.end());
        CHECK(v.elements() == expect);
    }
    SECTION("deterministic lexicographic order") {
        PermGroup s4 = PermGroup::symmetric(4);
        const auto& elems = s4.elements();
        CHECK(std::is_sorted(elems.begin(), elems.end()));
        CHECK(elems.front().is_identity());
    }
    SECTION("cap is enforced") {
        PermGroup big(8, {P("(1 2)", 8), P("(1 2 3 4 5 6 7 8)", 8)}, GroupKind::generic, 100);
        CHECK_THROWS_AS(big.elements(), cap_exceeded);
    }
}

TEST_CASE("centralizers") {
    PermGroup s5 = PermGroup::symmetric(5);
    CHECK(centralizer_in(s5, P("(1 2 3 4 5)", 5)).order() == 5);
    PermGroup s4 = PermGroup::symmetric(4);
    CHECK(centralizer_in(s4, P("(1 2)(3 4)", 4)).order() == 8);
    CHECK(centralizer_in(s4, Permutation::identity(4)).order() == s4.order());
}

TEST_CASE("structural centralizer decomposition") {
    SECTION("two 3-cycles") {
        Permutation a = P("(1 2 3)(4 5 6)", 6);
        CentralizerStructure cs = centralizer_structure(a, 6);
        REQUIRE(cs.factors.size() == 1);
        const WreathFactor& f = cs.factors[0];
        CHECK(f.length == 3);
        CHECK(f.multiplicity == 2);
        REQUIRE(f.rotations.size() == 2);
        CHECK(f.rotations[0] == P("(1 2 3)", 6));
        CHECK(f.rotations[1] == P("(4 5 6)", 6));
        REQUIRE(f.block_gens.size() == 1);
        CHECK(f.block_gens[0] == P("(1 4)(2 5)(3 6)", 6));
        for (const auto& g : cs.generators()) CHECK(g * a == a * g);
        CHECK(cs.predicted_order() == 18);
    }
    SECTION("identity gives the full symmetric factor") {
        CentralizerStructure cs = centralizer_structure(Permutation::identity(4), 4);
        REQUIRE(cs.factors.size() == 1);
        CHECK(cs.factors[0].length == 1);
        CHECK(cs.factors[0].multiplicity == 4);
        CHECK(structural_centralizer(Permutation::identity(4), 4).order() == 24);
    }
    SECTION("structural equals brute force for all of S_5") {
        PermGroup s5 = PermGroup::symmetric(5);
        for (const auto& g : s5.elements()) {
            PermGroup structural = structural_centralizer(g, 5);
            PermGroup brute = s5.centralizer(g);
            CHECK(structural.elements() == brute.elements());
        }
    }
}

TEST_CASE("symmetric sylow subgroups") {
    CHECK(sylow_symmetric(4, 2).order() == 8);
    CHECK(sylow_symmetric(6, 2).order() == 16);
    CHECK(sylow_symmetric(3, 5).order() == 1);

    for (int n = 1; n <= 10; ++n)
        for (unsigned p : {2u, 3u, 5u, 7u})
            CHECK(sylow_symmetric(n, p).order() == p_power_value(p, p_valuation(factorial(n), p)));

    SECTION("each wreath factor has one nontrivial orbit of p-power size") {
        PermGroup w = sylow_symmetric(6, 2);
        // orbits: {1,2,3,4} from W_2 and {5,6} from W_1
        std::set<int> moved(w.moved_points().begin(), w.moved_points().end());
        CHECK(moved == std::set<int>{0, 1, 2, 3, 4, 5});
    }
}

TEST_CASE("alternating sylow subgroups") {
    CHECK(sylow_alternating(4, 2).order() == 4);
    CHECK(sylow_alternating(5, 2).order() == 4);
    CHECK(sylow_alternating(6, 3).order() == sylow_symmetric(6, 3).order());

    SECTION("index two and equal orbits for n >= 4 at p = 2") {
        for (int n = 4; n <= 8; ++n) {
            PermGroup w = sylow_symmetric(n, 2);
            PermGroup wa = sylow_alternating(n, 2);
            CHECK(w.order() == 2 * wa.order());
            // orbit partition of points must agree
            auto orbit_of = [n](const PermGroup& g, int pt) {
                std::set<int> orb = {pt};
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (int x : std::set<int>(orb))
                        for (const auto& gen : g.generators())
                            if (orb.insert(gen(x)).second) grew = true;
                }
                return orb;
            };
            for (int pt = 0; pt < n; ++pt) CHECK(orbit_of(w, pt) == orbit_of(wa, pt));
        }
    }
}

TEST_CASE("conjugacy classes") {
    SECTION("S_4: one class per cycle type, ascending type order") {
        auto classes = PermGroup::symmetric(4).classes();
        std::vector<std::uint64_t> sizes;
        for (const auto& c : classes) sizes.push_back(c.size);
        CHECK(sizes == std::vector<std::uint64_t>{1, 6, 3, 8, 6});
        CHECK(classes[0].rep.is_identity());
        CHECK(classes[0].label() == "1^4");
        CHECK(classes[1].label() == "2^1 1^2");
    }
    SECTION("A_4: the 3-cycles split") {
        auto classes = PermGroup::alternating(4).classes();
        std::vector<std::uint64_t> sizes;
        for (const auto& c : classes) sizes.push_back(c.size);
        CHECK(sizes == std::vector<std::uint64_t>{1, 3, 4, 4});
        CHECK(classes[2].tag == SplitTag::plus);
        CHECK(classes[3].tag == SplitTag::minus);
        CHECK(classes[2].rep < classes[3].rep);
    }
    SECTION("A_5: the 5-cycles split") {
        PermGroup a5 = PermGroup::alternating(5);
        auto classes = a5.classes();
        std::vector<std::uint64_t> sizes;
        for (const auto& c : classes) sizes.push_back(c.size);
        CHECK(sizes == std::vector<std::uint64_t>{1, 15, 20, 12, 12});
        for (const auto& c : classes)
            CHECK(c.size * a5.centralizer(c.rep).order() == a5.order());
    }
    SECTION("classes partition the group") {
        PermGroup a5 = PermGroup::alternating(5);
        std::uint64_t total = 0;
        for (const auto& c : a5.classes()) total += c.size;
        CHECK(total == a5.order());
        for (const auto& g : a5.elements()) {
            int idx = a5.class_index_of(g);
            CHECK(cycle_type(g) == a5.classes()[idx].type);
        }
    }
}

TEST_CASE("normalizers") {
    PermGroup s3 = PermGroup::symmetric(3);
    CHECK(s3.normalizer(s3).order() == 6);
    PermGroup c3 = generated_subgroup(s3, {P("(1 2 3)", 3)});
    CHECK(s3.normalizer(c3).order() == 6);

    PermGroup s4 = PermGroup::symmetric(4);
    PermGroup t = generated_subgroup(s4, {P("(1 2)", 4)});
    PermGroup n = s4.normalizer(t);
    CHECK(n.order() == 4);
    CHECK(n.contains(P("(3 4)", 4)));
}

TEST_CASE("generic sylow construction") {
    PermGroup s4 = PermGroup::symmetric(4);
    CHECK(s4.sylow(2).order() == 8);
    CHECK(s4.sylow(3).order() == 3);
    PermGroup a5 = PermGroup::alternating(5);
    CHECK(a5.sylow(2).order() == 4);
    CHECK(a5.sylow(5).order() == 5);
}

TEST_CASE("conjugation product identity") {
    // prod_{i=0}^{n-1} a^(b^-i) = (ab)^n * b^-n
    std::mt19937 rng(11);
    PermGroup s5 = PermGroup::symmetric(5);
    const auto& elems = s5.elements();
    for (int trial = 0; trial < 60; ++trial) {
        const Permutation& a = elems[rng() % elems.size()];
        const Permutation& b = elems[rng() % elems.size()];
        for (int n = 1; n <= 8; ++n) {
            Permutation prod = Permutation::identity(5);
            for (int i = 0; i < n; ++i) prod = prod * a.conjugated(b.pow(-i));
            CHECK(prod == (a * b).pow(n) * b.pow(-n));
        }
    }
}
