#ifndef COMPCURVE_IGUSA_HPP
#define COMPCURVE_IGUSA_HPP

#include <array>
#include <vector>

#include "compcurve/poly.hpp"
#include "compcurve/rational.hpp"

namespace compcurve {

/* Binary form of degree n over Q: sum b_i x^i z^{n-i}, stored as the
 * coefficient vector b_0..b_n. */
struct BinaryForm {
    int degree = 0;
    std::vector<Rational> b;  // length degree + 1

    friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
        return f.degree == g.degree && f.b == g.b;
    }
};

// z^n f(x/z); requires deg f <= n.
BinaryForm homogenize(const Poly<Rational>& f, int n);

// Substitution action of m = [a b; c d]: F(ax + bz, cx + dz). det m != 0.
BinaryForm gl2_act(const std::array<Rational, 4>& m, const BinaryForm& F);

/* Igusa-Clebsch invariants of a binary sextic, in the classical
 * normalization (the one Sage's igusa_clebsch_invariants uses): I2, I4, I6
 * are the symmetric root-difference sums of degrees 2, 4, 6 in the
 * coefficients, and I10 is the discriminant of the form. I10 = 0 exactly
 * when the sextic has a repeated (projective) root. */
struct IgusaTuple {
    Rational I2, I4, I6, I10;

    friend bool operator==(const IgusaTuple& s, const IgusaTuple& t) {
        return s.I2 == t.I2 && s.I4 == t.I4 && s.I6 == t.I6 && s.I10 == t.I10;
    }
};

IgusaTuple igusa_clebsch(const BinaryForm& F);  // degree 6 only

/* Decides whether some rational r != 0 satisfies t2.I_{2i} = r^{2i} t1.I_{2i}
 * for i in {1,2,3,5}, i.e. whether the tuples agree in the weighted
 * projective space. Pure rational arithmetic: multiplicative cross-ratio
 * screens, then an exact root extraction on a Bezout combination. Throws
 * PreconditionError when both tuples are identically zero (indeterminate). */
bool weighted_equivalent(const IgusaTuple& t1, const IgusaTuple& t2);

}  // namespace compcurve

#endif
