#ifndef COMPCURVE_SCALAR_HPP
#define COMPCURVE_SCALAR_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "compcurve/cyclo.hpp"
#include "compcurve/rational.hpp"

namespace compcurve {

/* Base-field value: either rational or cyclotomic. One representation
 * serves every curve family, so point coordinates, witness roots and PTE
 * blocks share code paths. Mixed rational/cyclotomic arithmetic promotes
 * the rational side along Q -> Q(zeta_p); distinct cyclotomic levels are a
 * field mismatch. String form: "num/den", or "zeta<p>:c0,c1,..." with
 * rational coefficients of the residue representative. */
class Scalar {
   public:
    Scalar() : v_(Rational(0)) {}
    Scalar(Rational r) : v_(std::move(r)) {}    // NOLINT: implicit embedding
    Scalar(CycloElem c) : v_(std::move(c)) {}   // NOLINT

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const;
    const CycloElem& cyclo() const;

    bool is_zero() const;
    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    Scalar inv() const;

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    std::string to_string() const;
    static Scalar from_string(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

   private:
    std::variant<Rational, CycloElem> v_;
};

Scalar zero_like(const Scalar& s);
Scalar one_like(const Scalar& s);
bool same_field(const Scalar& x, const Scalar& y);
inline bool is_zero(const Scalar& s) { return s.is_zero(); }

// Horner evaluation of a rational polynomial at a Scalar point (coefficients
// promoted into Q(zeta_p) when the point is cyclotomic).
Scalar eval_scalar(const Poly<Rational>& f, const Scalar& a);

}  // namespace compcurve

#endif
