#include <doctest.h>

#include "compcurve/igusa.hpp"
#include "compcurve/rng.hpp"

using namespace compcurve;

namespace {
Poly<Rational> P(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly<Rational>(std::move(c));
}

BinaryForm random_sextic(Rng& rng, long height) {
    std::vector<Rational> c;
    for (int i = 0; i < 6; ++i) c.push_back(rng.rational(height));
    c.push_back(rng.nonzero_rational(height));
    return homogenize(Poly<Rational>(std::move(c)), 6);
}
}  // namespace

TEST_CASE("homogenize: low-degree polynomials pad with z powers") {
    BinaryForm F = homogenize(P({1, 0, 1}), 2);  // x^2 + 1 -> x^2 + z^2
    CHECK(F.b == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    BinaryForm G = homogenize(P({0, 1}), 2);  // x -> xz
    CHECK(G.b == std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
    CHECK_THROWS_AS(homogenize(P({1, 1, 1, 1}), 2), PreconditionError);
}

TEST_CASE("gl2 action: identity, swap, degree preservation") {
    Rng rng(3);
    BinaryForm F = random_sextic(rng, 9);
    std::array<Rational, 4> id = {Rational(1), Rational(0), Rational(0), Rational(1)};
    CHECK(gl2_act(id, F) == F);

    // swap on x^2 z gives x z^2
    BinaryForm x2z = homogenize(P({0, 0, 1}), 3);
    std::array<Rational, 4> swap_m = {Rational(0), Rational(1), Rational(1), Rational(0)};
    BinaryForm swapped = gl2_act(swap_m, x2z);
    CHECK(swapped.b == std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(0)});

    std::array<Rational, 4> sing = {Rational(1), Rational(2), Rational(2), Rational(4)};
    CHECK_THROWS_AS(gl2_act(sing, F), SingularError);

    for (int it = 0; it < 10; ++it) {
        std::array<Rational, 4> m = {rng.rational(5), rng.rational(5), rng.rational(5),
                                     rng.rational(5)};
        if ((m[0] * m[3] - m[1] * m[2]).is_zero()) continue;
        CHECK(gl2_act(m, F).degree == 6);
    }
}

TEST_CASE("igusa_clebsch reproduces the two pinned tuples exactly") {
    // x^6 + 2x^4 + x^2 + l0 at l0 = 1 and l0 = 2
    IgusaTuple t1 = igusa_clebsch(homogenize(P({1, 0, 1, 0, 2, 0, 1}), 6));
    CHECK(t1.I2 == Rational(-272));
    CHECK(t1.I4 == Rational(1060));
    CHECK(t1.I6 == Rational(-80792));
    CHECK(t1.I10 == Rational(-33856));

    IgusaTuple t2 = igusa_clebsch(homogenize(P({2, 0, 1, 0, 2, 0, 1}), 6));
    CHECK(t2.I2 == Rational(-512));
    CHECK(t2.I4 == Rational(5296));
    CHECK(t2.I6 == Rational(-799232));
    CHECK(t2.I10 == Rational(-1280000));

    CHECK_FALSE(weighted_equivalent(t1, t2));  // the two specializations differ
    CHECK_THROWS_AS(igusa_clebsch(homogenize(P({1, 1}), 4)), PreconditionError);
}

TEST_CASE("I10 is the discriminant: dual route and squarefree bridge") {
    Rng rng(5);
    for (int it = 0; it < 25; ++it) {
        Poly<Rational> f;
        if (it % 3 == 0) {
            // engineered repeated factor
            std::vector<Rational> c;
            for (int i = 0; i < 2; ++i) c.push_back(rng.rational(6));
            c.push_back(rng.nonzero_rational(6));
            Poly<Rational> quad(std::move(c));
            f = quad * quad * Poly<Rational>(std::vector<Rational>{rng.rational(6), Rational(0),
                                                                   rng.nonzero_rational(6)});
        } else {
            std::vector<Rational> c;
            for (int i = 0; i < 6; ++i) c.push_back(rng.rational(9));
            c.push_back(rng.nonzero_rational(9));
            f = Poly<Rational>(std::move(c));
        }
        if (f.degree() != 6) continue;
        IgusaTuple t = igusa_clebsch(homogenize(f, 6));
        CHECK(t.I10 == discriminant(f));  // table route vs resultant route
        CHECK(t.I10.is_zero() == !is_squarefree(f));
    }
}

TEST_CASE("weighted equivalence: constructed scalings and covariance") {
    IgusaTuple t = igusa_clebsch(homogenize(P({1, 0, 1, 0, 2, 0, 1}), 6));
    CHECK(weighted_equivalent(t, t));  // r = 1

    // scaled by r = 2: I_{2i} -> 2^{2i} I_{2i}
    auto scale = [&](const IgusaTuple& s, const Rational& q) {
        IgusaTuple r;
        r.I2 = s.I2 * q;
        r.I4 = s.I4 * q.pow(2);
        r.I6 = s.I6 * q.pow(3);
        r.I10 = s.I10 * q.pow(5);
        return r;
    };
    CHECK(weighted_equivalent(t, scale(t, Rational(4))));       // q = r^2 with r = 2
    CHECK(weighted_equivalent(t, scale(t, Rational(9, 4))));    // r = 3/2
    CHECK_FALSE(weighted_equivalent(t, scale(t, Rational(2)))); // r = sqrt(2) is irrational

    IgusaTuple zero;
    zero.I2 = zero.I4 = zero.I6 = zero.I10 = Rational(0);
    CHECK_THROWS_AS(weighted_equivalent(zero, zero), PreconditionError);
    CHECK_FALSE(weighted_equivalent(zero, t));  // zero patterns differ

    Rng rng(7);
    for (int it = 0; it < 12; ++it) {
        BinaryForm F = random_sextic(rng, 6);
        std::array<Rational, 4> m = {rng.rational(4), rng.rational(4), rng.rational(4),
                                     rng.rational(4)};
        if ((m[0] * m[3] - m[1] * m[2]).is_zero()) continue;
        IgusaTuple a = igusa_clebsch(F);
        IgusaTuple b = igusa_clebsch(gl2_act(m, F));
        if (a.I2.is_zero() && a.I4.is_zero() && a.I6.is_zero() && a.I10.is_zero()) continue;
        CHECK(weighted_equivalent(a, b));  // GL2-covariance at the invariant level
        // scaling the form by c multiplies I_{2i} by c^{2i}
        BinaryForm scaled = F;
        Rational cmul = rng.nonzero_rational(5);
        for (auto& coeff : scaled.b) coeff *= cmul;
        CHECK(weighted_equivalent(a, igusa_clebsch(scaled)));
    }
}

TEST_CASE("degree-5 curve models homogenize with a simple root at infinity") {
    // deg f = 5 genus-2 models: the sextic form gains z as a simple factor,
    // so I10 stays nonzero exactly when f is squarefree.
    Rng rng(11);
    for (int it = 0; it < 10; ++it) {
        std::vector<Rational> c;
        for (int i = 0; i < 5; ++i) c.push_back(rng.rational(8));
        c.push_back(rng.nonzero_rational(8));
        Poly<Rational> f(std::move(c));
        if (f.degree() != 5) continue;
        IgusaTuple t = igusa_clebsch(homogenize(f, 6));
        CHECK(t.I10.is_zero() == !is_squarefree(f));
    }
}
