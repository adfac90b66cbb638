#include <doctest.h>

#include "compcurve/cyclo.hpp"
#include "compcurve/quad.hpp"
#include "compcurve/rng.hpp"
#include "compcurve/scalar.hpp"

using namespace compcurve;

namespace {
QuadElem rand_quad(Rng& rng, QuadAlgebra alg, long height) {
    return {alg, rng.rational(height), rng.rational(height)};
}
}  // namespace

TEST_CASE("quadratic algebra multiplication: units and defining relations") {
    const QuadElem one = QuadElem::one(QuadAlgebra::Gaussian);
    const QuadElem i(QuadAlgebra::Gaussian, Rational(0), Rational(1));
    CHECK(one * i == i);
    CHECK(i * i == QuadElem(QuadAlgebra::Gaussian, Rational(-1), Rational(0)));  // i^2 = -1

    const QuadElem w(QuadAlgebra::Eisenstein, Rational(1), Rational(1));
    CHECK(QuadElem::one(QuadAlgebra::Eisenstein) * w == w);
    CHECK(w.norm() == Rational(3));
    CHECK((w * w).norm() == Rational(9));  // norm multiplicativity on (1,1)^2

    CHECK_THROWS_AS(w * i, FieldMismatchError);
}

TEST_CASE("quadratic inverses via conjugate over norm") {
    CHECK(QuadElem::one(QuadAlgebra::Eisenstein).inv() == QuadElem::one(QuadAlgebra::Eisenstein));
    const QuadElem i(QuadAlgebra::Gaussian, Rational(0), Rational(1));
    CHECK(i.inv() == QuadElem(QuadAlgebra::Gaussian, Rational(0), Rational(-1)));  // 1/i = -i
    const QuadElem w(QuadAlgebra::Eisenstein, Rational(1), Rational(1));
    CHECK(w.inv() == QuadElem(QuadAlgebra::Eisenstein, Rational(2, 3), Rational(-1, 3)));
    CHECK(w * w.inv() == QuadElem::one(QuadAlgebra::Eisenstein));
    CHECK_THROWS_AS(QuadElem::zero(QuadAlgebra::Gaussian).inv(), SingularError);
}

TEST_CASE("norm is multiplicative on random pairs, both algebras") {
    Rng rng(101);
    for (QuadAlgebra alg : {QuadAlgebra::Eisenstein, QuadAlgebra::Gaussian}) {
        for (int it = 0; it < 1000; ++it) {
            QuadElem x = rand_quad(rng, alg, 50);
            QuadElem y = rand_quad(rng, alg, 50);
            CHECK((x * y).norm() == x.norm() * y.norm());
        }
    }
}

TEST_CASE("norm_one_param lands on the norm-one torus exactly") {
    CHECK(norm_one_param(Rational(0), QuadAlgebra::Eisenstein) ==
          QuadElem::one(QuadAlgebra::Eisenstein));
    CHECK(norm_one_param(Rational(1), QuadAlgebra::Eisenstein) ==
          QuadElem(QuadAlgebra::Eisenstein, Rational(0), Rational(1)));
    CHECK(norm_one_param(Rational(1), QuadAlgebra::Gaussian) ==
          QuadElem(QuadAlgebra::Gaussian, Rational(0), Rational(1)));
    Rng rng(7);
    for (QuadAlgebra alg : {QuadAlgebra::Eisenstein, QuadAlgebra::Gaussian})
        for (int it = 0; it < 1000; ++it)
            CHECK(norm_one_param(rng.rational(10000), alg).norm() == Rational(1));
}

TEST_CASE("cyclotomic identities: zeta^p = 1 and vanishing power sum") {
    for (long p : {3L, 5L, 7L, 11L}) {
        const CycloElem zeta = CycloElem::zeta(p);
        const CycloElem one = CycloElem::from_rational(p, Rational(1));
        CHECK(zeta.pow(p) == one);
        CycloElem sum = CycloElem::zero(p);
        CycloElem acc = one;
        for (long j = 0; j < p; ++j) {
            sum = sum + acc;
            acc = acc * zeta;
        }
        CHECK(sum.is_zero());
        // zeta * zeta^{p-1} = 1
        CHECK(zeta * zeta.pow(p - 1) == one);
    }
    // p = 3: zeta^2 = -1 - zeta
    const CycloElem z3 = CycloElem::zeta(3);
    CHECK(z3 * z3 == CycloElem(3, Poly<Rational>(std::vector<Rational>{Rational(-1), Rational(-1)})));
    CHECK_THROWS_AS(CycloElem::zeta(4), PreconditionError);
    CHECK_THROWS_AS(CycloElem::zeta(9), PreconditionError);
}

TEST_CASE("cyclotomic inverses via the extended gcd with Phi_p") {
    const CycloElem one5 = CycloElem::from_rational(5, Rational(1));
    CycloElem x = one5 + CycloElem::zeta(5);  // 1 + zeta
    CHECK(x * x.inv() == one5);
    CHECK_THROWS_AS(CycloElem::zero(5).inv(), SingularError);

    Rng rng(13);
    for (long p : {3L, 5L, 7L, 11L}) {
        for (int it = 0; it < 25; ++it) {
            std::vector<Rational> rep;
            for (long k = 0; k < p - 1; ++k) rep.push_back(rng.rational(20));
            CycloElem e(p, Poly<Rational>(std::move(rep)));
            if (e.is_zero()) continue;
            CHECK(e * e.inv() == CycloElem::from_rational(p, Rational(1)));
        }
    }
}

TEST_CASE("cyclotomic arithmetic reduces eagerly mod Phi_p") {
    for (long p : {3L, 5L, 7L}) {
        Rng rng(p);
        for (int it = 0; it < 20; ++it) {
            std::vector<Rational> r1, r2;
            for (long k = 0; k < p - 1; ++k) {
                r1.push_back(rng.rational(9));
                r2.push_back(rng.rational(9));
            }
            CycloElem a(p, Poly<Rational>(std::move(r1)));
            CycloElem b(p, Poly<Rational>(std::move(r2)));
            CycloElem prod = a * b;
            CHECK((prod.is_zero() || prod.rep().degree() <= p - 2));
        }
    }
    CHECK_THROWS_AS(CycloElem::zeta(3) * CycloElem::zeta(5), FieldMismatchError);
}

TEST_CASE("scalar promotion between Q and Q(zeta_p)") {
    Scalar r(Rational(2, 3));
    Scalar z(CycloElem::zeta(5));
    Scalar sum = r + z;
    CHECK_FALSE(sum.is_rational());
    CHECK(sum - z == Scalar(CycloElem::from_rational(5, Rational(2, 3))));
    CHECK(Scalar(Rational(7)) == Scalar(CycloElem::from_rational(5, Rational(7))));
    CHECK(Scalar::from_string(z.to_string()) == z);
    CHECK(Scalar::from_string(r.to_string()) == r);
    // polynomial evaluation promotes coefficients
    Poly<Rational> f(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});  // x^2 + 1
    Scalar got = eval_scalar(f, z);
    CHECK(got == z * z + Scalar(Rational(1)));
}
