#ifndef COMPCURVE_TESTS_BRUTE_FORCE_HPP
#define COMPCURVE_TESTS_BRUTE_FORCE_HPP

/* Test-only oracles for the Jacobian group law: exhaustive enumeration of
 * reduced Mumford pairs on small genus-2 curves, full group-table checks,
 * and chord/tangent constructions independent of Cantor composition.
 * Kept out of the library on purpose -- these must stay an independent
 * route from the code they check. */

#include <map>
#include <string>
#include <vector>

#include "compcurve/jacobian.hpp"

namespace compcurve::testsupport {

inline Poly<FpElem> fp_poly(const FpField& f, std::vector<long> coeffs) {
    std::vector<FpElem> c;
    for (long v : coeffs) c.push_back(FpElem::from_int(f, v));
    return Poly<FpElem>(std::move(c));
}

// Every reduced pair (u monic, deg u <= 2, deg v < deg u, u | v^2 - f).
inline std::vector<MumfordDivisor> enumerate_reduced_genus2(const JacobianCurve& c) {
    const FpField& F = c.field();
    const std::uint64_t p = F.p();
    std::vector<MumfordDivisor> all;
    all.push_back(jac_identity(c));
    auto elem = [&](std::uint64_t v) { return FpElem::from_int(F, static_cast<long>(v)); };
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            Poly<FpElem> u(std::vector<FpElem>{-elem(a), one_like(elem(0))});
            Poly<FpElem> v = Poly<FpElem>::constant(elem(b));
            if (poly_mod(v * v - c.f(), u).is_zero_poly()) all.push_back(make_divisor(c, u, v));
        }
    for (std::uint64_t c1 = 0; c1 < p; ++c1)
        for (std::uint64_t c0 = 0; c0 < p; ++c0) {
            Poly<FpElem> u(std::vector<FpElem>{elem(c0), elem(c1), one_like(elem(0))});
            for (std::uint64_t v1 = 0; v1 < p; ++v1)
                for (std::uint64_t v0 = 0; v0 < p; ++v0) {
                    Poly<FpElem> v(std::vector<FpElem>{elem(v0), elem(v1)});
                    if (poly_mod(v * v - c.f(), u).is_zero_poly())
                        all.push_back(make_divisor(c, u, v));
                }
        }
    return all;
}

inline std::string divisor_key(const MumfordDivisor& d) {
    std::string k = "u";
    for (const auto& c : d.u.coeffs()) k += ":" + std::to_string(c.value());
    k += "|v";
    for (const auto& c : d.v.coeffs()) k += ":" + std::to_string(c.value());
    return k;
}

/* Complete group-table audit: closure onto the enumerated classes,
 * identity, commutativity, inverses, associativity over all triples,
 * Lagrange at the zeta-predicted order, and agreement of degree-1 sums
 * with the direct chord/tangent divisor. Returns false on first failure. */
inline bool full_group_table_check(const JacobianCurve& curve, long expected_order,
                                   std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<MumfordDivisor> all = enumerate_reduced_genus2(curve);
    if (static_cast<long>(all.size()) != expected_order)
        return fail("enumerated " + std::to_string(all.size()) + " classes, zeta says " +
                    std::to_string(expected_order));

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[divisor_key(all[i])] = static_cast<int>(i);
    const int n = static_cast<int>(all.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = index.find(divisor_key(jac_add(all[static_cast<std::size_t>(i)],
                                                     all[static_cast<std::size_t>(j)])));
            if (it == index.end()) return fail("sum left the enumerated class set");
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
        }
    const int id = index.at(divisor_key(jac_identity(curve)));
    for (int i = 0; i < n; ++i) {
        if (t[static_cast<std::size_t>(id)][static_cast<std::size_t>(i)] != i)
            return fail("identity row broken");
        if (t[static_cast<std::size_t>(i)]
             [static_cast<std::size_t>(index.at(divisor_key(jac_neg(all[static_cast<std::size_t>(i)]))))] != id)
            return fail("negation is not the inverse");
        for (int j = 0; j < n; ++j)
            if (t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                return fail("commutativity broken");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (t[static_cast<std::size_t>(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])]
                     [static_cast<std::size_t>(k)] !=
                    t[static_cast<std::size_t>(i)]
                     [static_cast<std::size_t>(t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])])
                    return fail("associativity broken");
    for (int i = 0; i < n; ++i)
        if (!jac_scalar_mul(expected_order, all[static_cast<std::size_t>(i)]).is_identity())
            return fail("Lagrange failed at the zeta order");

    const FpField& F = curve.field();
    const FpElem two = FpElem::from_int(F, 2);
    std::vector<MumfordDivisor> deg1;
    for (const auto& d : all)
        if (!d.is_identity() && d.u.degree() == 1) deg1.push_back(d);
    for (const auto& P : deg1)
        for (const auto& Q : deg1) {
            FpElem x1 = -P.u.coeff_or_zero(0, two), y1 = P.v.coeff_or_zero(0, two);
            FpElem x2 = -Q.u.coeff_or_zero(0, two), y2 = Q.v.coeff_or_zero(0, two);
            Poly<FpElem> v_line;
            if (!(x1 == x2)) {
                FpElem slope = (y2 - y1) * (x2 - x1).inv();
                v_line = Poly<FpElem>(std::vector<FpElem>{y1 - slope * x1, slope});
            } else if (y1 == y2 && !is_zero(y1)) {
                FpElem slope = eval(curve.f().derivative(), x1) * (two * y1).inv();
                v_line = Poly<FpElem>(std::vector<FpElem>{y1 - slope * x1, slope});
            } else {
                continue;
            }
            Poly<FpElem> u = P.u * Q.u;
            if (!poly_mod(v_line * v_line - curve.f(), u).is_zero_poly()) continue;
            MumfordDivisor direct = make_divisor(curve, u.monic(), poly_mod(v_line, u));
            if (!(jac_add(P, Q) == direct)) return fail("chord/tangent oracle disagreed");
        }
    if (why) why->clear();
    return true;
}

}  // namespace compcurve::testsupport

#endif
