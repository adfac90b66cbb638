#ifndef COMPCURVE_QUAD_HPP
#define COMPCURVE_QUAD_HPP

#include <iosfwd>
#include <string>

#include "compcurve/rational.hpp"

namespace compcurve {

/* Element of one of the two quadratic etale algebras over Q used by the
 * parametrizers:
 *   EISENSTEIN: Q[w]/(w^2+w+1), element a - b*w (basis {1, -w}), with
 *               norm a^2 + ab + b^2 -- the coordinates then match the
 *               (T_i1, T_i2) torus presentation of the family-B tuples
 *               on the nose.
 *   GAUSSIAN:   Q[i]/(i^2+1), element a + b*i, norm a^2 + b^2.
 * Both norm forms are positive definite over Q, so an element is
 * invertible iff it is nonzero. */
enum class QuadAlgebra { Eisenstein, Gaussian };

std::string algebra_name(QuadAlgebra alg);              // "eisenstein" / "gaussian"
QuadAlgebra algebra_from_name(const std::string& name);  // throws ParseError

class QuadElem {
   public:
    QuadElem(QuadAlgebra alg, Rational a, Rational b)
        : alg_(alg), a_(std::move(a)), b_(std::move(b)) {}

    static QuadElem zero(QuadAlgebra alg) { return {alg, Rational(0), Rational(0)}; }
    static QuadElem one(QuadAlgebra alg) { return {alg, Rational(1), Rational(0)}; }

    QuadAlgebra algebra() const { return alg_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    Rational norm() const;
    QuadElem conj() const;
    QuadElem inv() const;  // conj / norm; throws SingularError on zero norm

    QuadElem operator-() const { return {alg_, -a_, -b_}; }
    friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
    friend bool operator==(const QuadElem& x, const QuadElem& y);
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const QuadElem& x);

   private:
    QuadAlgebra alg_;
    Rational a_, b_;
};

/* Rational point of the norm-one torus: a conic parametrization hitting
 * norm exactly 1 for every rational t (the denominators 1+t+t^2 and 1+t^2
 * never vanish over Q).
 *   EISENSTEIN: ((1-t^2)/(1+t+t^2), t(2+t)/(1+t+t^2))
 *   GAUSSIAN:   ((1-t^2)/(1+t^2),   2t/(1+t^2))        */
QuadElem norm_one_param(const Rational& t, QuadAlgebra alg);

inline QuadElem zero_like(const QuadElem& w) { return QuadElem::zero(w.algebra()); }
inline QuadElem one_like(const QuadElem& w) { return QuadElem::one(w.algebra()); }
inline bool same_field(const QuadElem& x, const QuadElem& y) { return x.algebra() == y.algebra(); }
inline bool is_zero(const QuadElem& x) { return x.is_zero(); }

}  // namespace compcurve

#endif
