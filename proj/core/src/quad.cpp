#include "compcurve/quad.hpp"

#include <ostream>

namespace compcurve {

std::string algebra_name(QuadAlgebra alg) {
    return alg == QuadAlgebra::Eisenstein ? "eisenstein" : "gaussian";
}

QuadAlgebra algebra_from_name(const std::string& name) {
    if (name == "eisenstein") return QuadAlgebra::Eisenstein;
    if (name == "gaussian") return QuadAlgebra::Gaussian;
    throw ParseError("unknown quadratic algebra \"" + name + "\"");
}

namespace {
void require_same(const QuadElem& x, const QuadElem& y) {
    if (x.algebra() != y.algebra())
        throw FieldMismatchError("mixed quadratic algebras (eisenstein vs gaussian)");
}
}  // namespace

Rational QuadElem::norm() const {
    if (alg_ == QuadAlgebra::Eisenstein) return a_ * a_ + a_ * b_ + b_ * b_;
    return a_ * a_ + b_ * b_;
}

QuadElem QuadElem::conj() const {
    // Eisenstein: w -> w^2 = -1-w sends a - b*w to (a+b) - (-b)*w.
    if (alg_ == QuadAlgebra::Eisenstein) return {alg_, a_ + b_, -b_};
    return {alg_, a_, -b_};
}

QuadElem QuadElem::inv() const {
    Rational n = norm();
    if (n.is_zero()) throw SingularError("inverse of zero-norm quadratic element");
    QuadElem c = conj();
    Rational ninv = n.inv();
    return {alg_, c.a() * ninv, c.b() * ninv};
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    require_same(x, y);
    return {x.alg_, x.a_ + y.a_, x.b_ + y.b_};
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    require_same(x, y);
    return {x.alg_, x.a_ - y.a_, x.b_ - y.b_};
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    require_same(x, y);
    if (x.alg_ == QuadAlgebra::Eisenstein) {
        // (a - bw)(c - dw) with w^2 = -1-w
        return {x.alg_, x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
    }
    return {x.alg_, x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.alg_ == y.alg_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
    return os << algebra_name(x.algebra()) << "(" << x.a() << ", " << x.b() << ")";
}

QuadElem norm_one_param(const Rational& t, QuadAlgebra alg) {
    Rational t2 = t * t;
    if (alg == QuadAlgebra::Eisenstein) {
        Rational den = Rational(1) + t + t2;
        Rational dinv = den.inv();
        return {alg, (Rational(1) - t2) * dinv, t * (Rational(2) + t) * dinv};
    }
    Rational den = Rational(1) + t2;
    Rational dinv = den.inv();
    return {alg, (Rational(1) - t2) * dinv, Rational(2) * t * dinv};
}

}  // namespace compcurve
