#include "compcurve/scalar.hpp"

#include <ostream>
#include <sstream>

namespace compcurve {

const Rational& Scalar::rational() const {
    if (!is_rational()) throw PreconditionError("scalar is not rational");
    return std::get<Rational>(v_);
}

const CycloElem& Scalar::cyclo() const {
    if (is_rational()) throw PreconditionError("scalar is not cyclotomic");
    return std::get<CycloElem>(v_);
}

bool Scalar::is_zero() const {
    return is_rational() ? rational().is_zero() : cyclo().is_zero();
}

Scalar Scalar::operator-() const {
    return is_rational() ? Scalar(-rational()) : Scalar(-cyclo());
}

namespace {
// Promote both operands to a common field; mixed cyclotomic levels throw.
std::pair<CycloElem, CycloElem> promote(const Scalar& x, const Scalar& y) {
    long p = x.is_rational() ? y.cyclo().p() : x.cyclo().p();
    CycloElem a = x.is_rational() ? CycloElem::from_rational(p, x.rational()) : x.cyclo();
    CycloElem b = y.is_rational() ? CycloElem::from_rational(p, y.rational()) : y.cyclo();
    return {a, b};
}
}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return x.rational() + y.rational();
    auto [a, b] = promote(x, y);
    return a + b;
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return x.rational() - y.rational();
    auto [a, b] = promote(x, y);
    return a - b;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return x.rational() * y.rational();
    auto [a, b] = promote(x, y);
    return a * b;
}

Scalar Scalar::inv() const {
    return is_rational() ? Scalar(rational().inv()) : Scalar(cyclo().inv());
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return x.rational() == y.rational();
    auto [a, b] = promote(x, y);
    return a == b;
}

std::string Scalar::to_string() const {
    if (is_rational()) return rational().to_string();
    const CycloElem& c = cyclo();
    std::ostringstream os;
    os << "zeta" << c.p() << ":";
    int top = c.rep().is_zero_poly() ? 0 : c.rep().degree();
    for (int i = 0; i <= top; ++i) {
        if (i) os << ",";
        os << c.rep().coeff_or_zero(static_cast<std::size_t>(i), Rational(0)).to_string();
    }
    return os.str();
}

Scalar Scalar::from_string(const std::string& s) {
    if (s.rfind("zeta", 0) != 0) return Scalar(Rational::from_string(s));
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("malformed cyclotomic scalar \"" + s + "\"");
    long p = 0;
    try {
        p = std::stol(s.substr(4, colon - 4));
    } catch (const std::exception&) {
        throw ParseError("malformed cyclotomic level in \"" + s + "\"");
    }
    std::vector<Rational> coeffs;
    std::string rest = s.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        coeffs.push_back(Rational::from_string(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Scalar(CycloElem(p, Poly<Rational>(std::move(coeffs))));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar zero_like(const Scalar& s) {
    return s.is_rational() ? Scalar(Rational(0)) : Scalar(CycloElem::zero(s.cyclo().p()));
}

Scalar one_like(const Scalar& s) {
    return s.is_rational() ? Scalar(Rational(1))
                           : Scalar(CycloElem::from_rational(s.cyclo().p(), Rational(1)));
}

bool same_field(const Scalar& x, const Scalar& y) {
    if (x.is_rational() || y.is_rational()) return true;  // Q embeds everywhere
    return x.cyclo().p() == y.cyclo().p();
}

Scalar eval_scalar(const Poly<Rational>& f, const Scalar& a) {
    if (a.is_rational()) return Scalar(f(a.rational()));
    long p = a.cyclo().p();
    Scalar acc = zero_like(a);
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * a + Scalar(CycloElem::from_rational(p, f.coeffs()[i]));
    return acc;
}

}  // namespace compcurve
