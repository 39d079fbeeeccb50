#include <catch2/catch_amalgamated.hpp>

#include "matrix_oracle.hpp"
#include "oracles.hpp"
#include "orbitcalc/orbit.hpp"

using namespace orbitcalc;

TEST_CASE("algebra bookkeeping") {
    const Algebra c6 = parseAlgebra("C6");
    CHECK(c6.family() == Family::C);
    CHECK(c6.rank() == 6);
    CHECK(c6.naturalDim() == 12);
    CHECK(c6.dim() == 78);
    CHECK(c6.epsilon() == Epsilon::symplectic);
    CHECK(parseAlgebra("sp12") == c6);
    CHECK(parseAlgebra("so13") == Algebra(Family::B, 6));
    CHECK(parseAlgebra("so8") == Algebra(Family::D, 4));
    CHECK(parseAlgebra("sl4") == Algebra(Family::A, 3));
    CHECK(parseAlgebra("A3").naturalDim() == 4);
    CHECK(parseAlgebra("B3").dim() == 21);
    CHECK(parseAlgebra("D4").dim() == 28);
    CHECK_THROWS_AS(parseAlgebra("so2"), std::invalid_argument);   // D1 below minimal rank
    CHECK_THROWS_AS(parseAlgebra("sp13"), std::invalid_argument);  // odd symplectic dim
    CHECK_THROWS_AS(parseAlgebra("E8"), std::invalid_argument);
    CHECK_THROWS_AS(parseAlgebra("D1"), std::invalid_argument);
    CHECK_THROWS_AS(parseAlgebra(""), std::invalid_argument);
}

TEST_CASE("orbit construction guards") {
    const Algebra c2(Family::C, 2);
    CHECK_NOTHROW(NilpotentOrbit(c2, Partition({2, 1, 1})));
    CHECK_THROWS_AS(NilpotentOrbit(c2, Partition({2, 1})), std::invalid_argument);   // wrong total
    CHECK_THROWS_AS(NilpotentOrbit(c2, Partition({3, 1})), std::invalid_argument);   // inadmissible
    const Algebra d4(Family::D, 4);
    CHECK_THROWS_AS(NilpotentOrbit(d4, Partition({4, 4})), std::invalid_argument);   // label missing
    CHECK_NOTHROW(NilpotentOrbit(d4, Partition({4, 4}), VeryEvenLabel::I));
    CHECK_THROWS_AS(NilpotentOrbit(d4, Partition({5, 3}), VeryEvenLabel::I),
                    std::invalid_argument);  // label not allowed
}

TEST_CASE("orbit enumeration") {
    CHECK(enumerateOrbits(Algebra(Family::C, 2)).size() == 4);
    CHECK(enumerateOrbits(Algebra(Family::A, 2)).size() == 3);
    const auto d4 = enumerateOrbits(Algebra(Family::D, 4));
    CHECK(d4.size() == 12);  // 10 partitions, [4,4] and [2,2,2,2] doubled
    int labelled = 0;
    for (const auto& o : d4) {
        if (o.veryEvenLabel()) ++labelled;
    }
    CHECK(labelled == 4);
}

TEST_CASE("orbit dimension closed form") {
    CHECK(orbitDimension(NilpotentOrbit(Algebra(Family::C, 2), Partition({2, 1, 1}))) == 4);
    CHECK(orbitDimension(NilpotentOrbit(Algebra(Family::C, 6), Partition({6, 3, 3}))) == 62);
    CHECK(orbitDimension(Family::C, Partition({1, 1, 1, 1})) == 0);
    CHECK(orbitDimension(Family::B, Partition(std::vector<int>(9, 1))) == 0);
}

TEST_CASE("orbit dimension agrees with the centralizer-rank oracle, m <= 10") {
    for (const Algebra& a : oracle::classicalAlgebras(10)) {
        const Epsilon eps = *a.epsilon();
        for (const Partition& d : enumerateAdmissible(a.naturalDim(), eps)) {
            const int viaFormula = orbitDimension(a.family(), d);
            const int viaMatrices = matrix_oracle::orbitDimFromMatrices(eps, d);
            INFO(a.name() << " [" << d.str() << "]");
            CHECK(viaFormula == viaMatrices);
        }
    }
    for (int m = 2; m <= 7; ++m) {
        for (const auto& p : oracle::allPartitions(m)) {
            const Partition d(p);
            CHECK(orbitDimension(Family::A, d) == matrix_oracle::orbitDimFromMatricesA(d));
        }
    }
}

TEST_CASE("oracle representatives have the right Jordan type") {
    for (const Algebra& a : oracle::classicalAlgebras(9)) {
        for (const Partition& d : enumerateAdmissible(a.naturalDim(), *a.epsilon())) {
            const auto rep = matrix_oracle::standardRepresentative(*a.epsilon(), d);
            CHECK(matrix_oracle::jordanTypeOf(rep.z) == d);
        }
    }
}

TEST_CASE("weighted Dynkin diagram of the regular and zero orbits") {
    const auto reg = weightedDynkin(NilpotentOrbit(Algebra(Family::C, 1), Partition({2})));
    CHECK(reg.labels == std::vector<int>{2});
    const auto sub = weightedDynkin(NilpotentOrbit(Algebra(Family::C, 2), Partition({2, 1, 1})));
    CHECK(sub.labels == std::vector<int>{1, 0});
    const auto zero =
        weightedDynkin(NilpotentOrbit(Algebra(Family::D, 4), Partition({1, 1, 1, 1, 1, 1, 1, 1})));
    CHECK(zero.labels == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("hand-built sl2 triples confirm the frozen label examples") {
    // sp(2), x = [[0,1],[0,0]], h = diag(1,-1): the long root 2e_1 reads 2.
    {
        matrix_oracle::IntMat x{{0, 1}, {0, 0}}, y{{0, 0}, {1, 0}}, h{{1, 0}, {0, -1}};
        auto rep = matrix_oracle::standardRepresentative(Epsilon::symplectic, Partition({2}));
        CHECK(matrix_oracle::inAlgebra(x, rep.phi));
        CHECK(matrix_oracle::inAlgebra(y, rep.phi));
        CHECK(matrix_oracle::inAlgebra(h, rep.phi));
        using matrix_oracle::mul;
        using matrix_oracle::sub;
        // [h,x] = 2x, [x,y] = h
        matrix_oracle::IntMat hx = sub(mul(h, x), mul(x, h));
        matrix_oracle::IntMat two = x;
        for (auto& row : two)
            for (auto& v : row) v *= 2;
        CHECK(matrix_oracle::isZero(sub(hx, two)));
        matrix_oracle::IntMat xy = sub(mul(x, y), mul(y, x));
        CHECK(matrix_oracle::isZero(sub(xy, h)));
        CHECK(2 * h[0][0] == 2);  // label at the long node
    }
    // sp(4), d = [2,1,1]: h = diag(1,0,0,-1) gives labels (e1-e2, 2e2) = (1,0).
    {
        const std::vector<int> h = exponentSequence(Partition({2, 1, 1}));
        CHECK(h == std::vector<int>{1, 0, 0, -1});
        CHECK(h[0] - h[1] == 1);
        CHECK(2 * h[1] == 0);
    }
}

TEST_CASE("sl2 triple solvability and weight agreement, m <= 10") {
    for (const Algebra& a : oracle::classicalAlgebras(10)) {
        const Epsilon eps = *a.epsilon();
        for (const Partition& d : enumerateAdmissible(a.naturalDim(), eps)) {
            INFO(a.name() << " [" << d.str() << "]");
            CHECK(matrix_oracle::sl2TripleExists(eps, d));
            CHECK(matrix_oracle::sortedWeights(eps, d) == exponentSequence(d));
        }
    }
}

TEST_CASE("weighted Dynkin labels always land in {0,1,2}, m <= 12") {
    auto checkAll = [](const Algebra& a) {
        for (const NilpotentOrbit& o : enumerateOrbits(a)) {
            for (int l : weightedDynkin(o).labels) {
                CHECK(l >= 0);
                CHECK(l <= 2);
            }
        }
    };
    for (const Algebra& a : oracle::classicalAlgebras(12)) checkAll(a);
    for (int n = 1; n <= 11; ++n) checkAll(Algebra(Family::A, n));
}

TEST_CASE("Jacobson-Morozov flag types") {
    const Algebra c2(Family::C, 2);
    CHECK(jmFlagType(NilpotentOrbit(c2, Partition({2, 1, 1}))).blocks ==
          std::vector<int>{1, 2, 1});
    CHECK(jmFlagType(NilpotentOrbit(Algebra(Family::D, 3), Partition({2, 2, 1, 1}))).blocks ==
          std::vector<int>{2, 2, 2});
    CHECK(jmFlagType(NilpotentOrbit(Algebra(Family::C, 6), Partition({6, 3, 3}))).blocks ==
          std::vector<int>{1, 1, 2, 1, 2, 1, 2, 1, 1});
    for (const Algebra& a : oracle::classicalAlgebras(12)) {
        for (const NilpotentOrbit& o : enumerateOrbits(a)) {
            const FlagType f = jmFlagType(o);
            CHECK(f.total() == a.naturalDim());
            CHECK(f.isPalindromic());
        }
    }
}

TEST_CASE("JM Picard numbers") {
    CHECK(jmPicardNumber(NilpotentOrbit(Algebra(Family::C, 2), Partition({2, 1, 1}))) == 1);
    CHECK(jmPicardNumber(NilpotentOrbit(Algebra(Family::D, 3), Partition({2, 2, 1, 1}))) == 2);
    // the D-family middle-2 shape with a 3: flag (1,2,2,2,1), b2 = k = 3
    CHECK(jmPicardNumber(NilpotentOrbit(Algebra(Family::D, 4), Partition({3, 2, 2, 1}))) == 3);
    // B-family full members with k = 3
    CHECK(jmPicardNumber(NilpotentOrbit(Algebra(Family::B, 4), Partition({3, 2, 2, 1, 1}))) == 2);
    // [3,2,2] lacks the member 1, so the rule does not apply
    CHECK_THROWS_AS(jmPicardNumber(NilpotentOrbit(Algebra(Family::B, 3), Partition({3, 2, 2}))),
                    std::invalid_argument);
}

TEST_CASE("orbit dimension is strictly monotone along dominance, m <= 12") {
    for (const Algebra& a : oracle::classicalAlgebras(12)) {
        const auto parts = enumerateAdmissible(a.naturalDim(), *a.epsilon());
        for (const auto& d : parts) {
            for (const auto& f : parts) {
                if (d != f && dominates(d, f))
                    CHECK(orbitDimension(a.family(), d) > orbitDimension(a.family(), f));
            }
        }
    }
}
