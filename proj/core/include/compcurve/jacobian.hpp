#ifndef COMPCURVE_JACOBIAN_HPP
#define COMPCURVE_JACOBIAN_HPP

#include <memory>
#include <vector>

#include "compcurve/curve.hpp"
#include "compcurve/fp.hpp"
#include "compcurve/poly.hpp"

namespace compcurve {

/* Odd-degree hyperelliptic curve y^2 = f(x) over F_p, deg f = 2g+1,
 * f squarefree. One ramified point at infinity, so every degree-0 class
 * has a unique reduced Mumford representative (u, v) with u monic,
 * deg u <= g, deg v < deg u, u | v^2 - f. */
class JacobianCurve {
   public:
    JacobianCurve(std::shared_ptr<const FpField> field, Poly<FpElem> f);

    const FpField& field() const { return *field_; }
    const std::shared_ptr<const FpField>& field_ptr() const { return field_; }
    const Poly<FpElem>& f() const { return f_; }
    int genus() const { return genus_; }

    friend bool operator==(const JacobianCurve& a, const JacobianCurve& b) {
        return a.field_->p() == b.field_->p() && a.f_ == b.f_;
    }

   private:
    std::shared_ptr<const FpField> field_;
    Poly<FpElem> f_;
    int genus_;
};

/* Reduced divisor-class representative. Holds a non-owning pointer to its
 * curve; the curve must outlive every divisor derived from it. */
struct MumfordDivisor {
    const JacobianCurve* curve = nullptr;
    Poly<FpElem> u, v;

    bool is_identity() const { return u.degree() == 0; }
    friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b);
    friend bool operator!=(const MumfordDivisor& a, const MumfordDivisor& b) { return !(a == b); }
};

MumfordDivisor jac_identity(const JacobianCurve& c);
// Validates the Mumford invariants (u monic, deg u <= g, deg v < deg u, u | v^2 - f).
MumfordDivisor make_divisor(const JacobianCurve& c, Poly<FpElem> u, Poly<FpElem> v);

/* Cantor composition followed by reduction; returns the unique reduced
 * representative of [D1 + D2]. */
MumfordDivisor jac_add(const MumfordDivisor& d1, const MumfordDivisor& d2);
MumfordDivisor jac_neg(const MumfordDivisor& d);
MumfordDivisor jac_scalar_mul(long n, const MumfordDivisor& d);

/* Reduction of a curve over Q at a good prime. Conditions checked: odd
 * model degree, p odd prime, p coprime to every coefficient and point
 * denominator, leading coefficient nonzero mod p, f squarefree mod p.
 * Violations raise BadReductionError naming the condition. */
JacobianCurve reduce_curve(const CurveSpec& c, std::uint64_t p);

// Mumford form of [P - infinity]; the identity for the point at infinity.
MumfordDivisor reduce_point_class(const CurvePoint& p, const JacobianCurve& c);
// eps(P) = [2P - D_inf] = 2 [P - inf] on odd-degree models.
MumfordDivisor eps_class(const CurvePoint& p, const JacobianCurve& c);
// r(P) = [P - D0] with base point D0 = (0,0).
MumfordDivisor r_class(const CurvePoint& p, const CurvePoint& d0, const JacobianCurve& c);

bool is_good_prime(const CurveSpec& c, std::uint64_t p);
// The smallest `count` good primes >= minimum.
std::vector<std::uint64_t> find_good_primes(const CurveSpec& c, int count, std::uint64_t minimum);

}  // namespace compcurve

#endif
