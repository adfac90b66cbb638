#include "compcurve/igusa.hpp"

#include <numeric>

namespace compcurve {

BinaryForm homogenize(const Poly<Rational>& f, int n) {
    if (!f.is_zero_poly() && f.degree() > n)
        throw PreconditionError("homogenize: polynomial degree exceeds the form degree");
    BinaryForm F;
    F.degree = n;
    F.b.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) F.b[i] = f.coeffs()[i];
    return F;
}

BinaryForm gl2_act(const std::array<Rational, 4>& m, const BinaryForm& F) {
    const Rational& a = m[0];
    const Rational& b = m[1];
    const Rational& c = m[2];
    const Rational& d = m[3];
    if ((a * d - b * c).is_zero()) throw SingularError("gl2_act: singular matrix");
    const int n = F.degree;

    // Powers of the two linear forms ax + bz and cx + dz, as coefficient
    // vectors indexed by the x-exponent.
    auto powers = [&](const Rational& px, const Rational& pz) {
        std::vector<std::vector<Rational>> pw(static_cast<std::size_t>(n) + 1);
        pw[0] = {Rational(1)};
        for (int k = 1; k <= n; ++k) {
            const auto& prev = pw[static_cast<std::size_t>(k - 1)];
            std::vector<Rational> cur(static_cast<std::size_t>(k) + 1, Rational(0));
            for (int j = 0; j < k; ++j) {
                cur[static_cast<std::size_t>(j + 1)] += prev[static_cast<std::size_t>(j)] * px;
                cur[static_cast<std::size_t>(j)] += prev[static_cast<std::size_t>(j)] * pz;
            }
            pw[static_cast<std::size_t>(k)] = std::move(cur);
        }
        return pw;
    };
    const auto pow_ab = powers(a, b);
    const auto pow_cd = powers(c, d);

    BinaryForm G;
    G.degree = n;
    G.b.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (F.b[static_cast<std::size_t>(i)].is_zero()) continue;
        const auto& u = pow_ab[static_cast<std::size_t>(i)];
        const auto& v = pow_cd[static_cast<std::size_t>(n - i)];
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (u[j].is_zero()) continue;
            for (std::size_t k = 0; k < v.size(); ++k)
                G.b[j + k] += F.b[static_cast<std::size_t>(i)] * u[j] * v[k];
        }
    }
    return G;
}

namespace {

struct IgusaTerm {
    long long c;
    unsigned char e[7];  // exponents of b_0..b_6
};

#include "igusa_tables.inc"

template <std::size_t N>
Rational eval_table(const IgusaTerm (&terms)[N], const std::vector<Rational>& b) {
    Rational sum(0);
    for (const auto& t : terms) {
        Rational prod{static_cast<long>(t.c)};
        for (int j = 0; j < 7; ++j)
            for (int k = 0; k < t.e[j]; ++k) prod *= b[static_cast<std::size_t>(j)];
        sum += prod;
    }
    return sum;
}

}  // namespace

IgusaTuple igusa_clebsch(const BinaryForm& F) {
    if (F.degree != 6) throw PreconditionError("igusa_clebsch: form must have degree 6");
    IgusaTuple t;
    t.I2 = eval_table(kIgusaI2, F.b);
    t.I4 = eval_table(kIgusaI4, F.b);
    t.I6 = eval_table(kIgusaI6, F.b);
    t.I10 = eval_table(kIgusaI10, F.b);
    return t;
}

namespace {

// Exact rational n-th root; returns false if none exists.
bool rational_nth_root(const Rational& x, int n, Rational* out) {
    if (x.is_zero()) {
        *out = Rational(0);
        return true;
    }
    if (n % 2 == 0 && x.sign() < 0) return false;
    mpz_class num = x.num(), den = x.den();
    mpz_class rn, rd;
    int exact_num = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
    int exact_den = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
    if (!exact_num || !exact_den) return false;
    *out = Rational(rn, rd);
    return true;
}

bool is_rational_square(const Rational& x) {
    if (x.sign() < 0) return false;
    return mpz_perfect_square_p(x.num().get_mpz_t()) && mpz_perfect_square_p(x.den().get_mpz_t());
}

}  // namespace

bool weighted_equivalent(const IgusaTuple& t1, const IgusaTuple& t2) {
    // I_{2i} scales by r^{2i} = q^i with q = r^2; the weights i are 1,2,3,5.
    const std::array<const Rational*, 4> v1 = {&t1.I2, &t1.I4, &t1.I6, &t1.I10};
    const std::array<const Rational*, 4> v2 = {&t2.I2, &t2.I4, &t2.I6, &t2.I10};
    const std::array<int, 4> weight = {1, 2, 3, 5};

    bool any1 = false, any2 = false;
    for (int k = 0; k < 4; ++k) {
        any1 = any1 || !v1[static_cast<std::size_t>(k)]->is_zero();
        any2 = any2 || !v2[static_cast<std::size_t>(k)]->is_zero();
    }
    if (!any1 && !any2)
        throw PreconditionError("weighted_equivalent: both tuples vanish, equivalence indeterminate");
    std::vector<int> live;
    for (int k = 0; k < 4; ++k) {
        const bool z1 = v1[static_cast<std::size_t>(k)]->is_zero();
        const bool z2 = v2[static_cast<std::size_t>(k)]->is_zero();
        if (z1 != z2) return false;
        if (!z1) live.push_back(k);
    }

    std::vector<Rational> rho;
    rho.reserve(live.size());
    for (int k : live)
        rho.push_back(*v2[static_cast<std::size_t>(k)] / *v1[static_cast<std::size_t>(k)]);

    // Cross-ratio screen: rho_i^j = rho_j^i for all live pairs.
    for (std::size_t s = 0; s < live.size(); ++s)
        for (std::size_t t = s + 1; t < live.size(); ++t) {
            const int wi = weight[static_cast<std::size_t>(live[s])];
            const int wj = weight[static_cast<std::size_t>(live[t])];
            if (rho[s].pow(wj) != rho[t].pow(wi)) return false;
        }

    // Bezout combination: q^{g} = prod rho_i^{c_i} with g = gcd of live weights.
    long g = 0;
    for (int k : live) g = std::gcd(g, static_cast<long>(weight[static_cast<std::size_t>(k)]));
    // Solve sum c_i w_i = g greedily via the extended Euclid over the list.
    std::vector<long> coeff(live.size(), 0);
    {
        long acc = 0;
        std::vector<long> acc_coeff(live.size(), 0);
        for (std::size_t s = 0; s < live.size(); ++s) {
            const long w = weight[static_cast<std::size_t>(live[s])];
            if (acc == 0) {
                acc = w;
                acc_coeff.assign(live.size(), 0);
                acc_coeff[s] = 1;
                continue;
            }
            // extended gcd of (acc, w)
            long old_r = acc, r = w, old_s = 1, ss = 0;
            while (r != 0) {
                long q = old_r / r;
                long tmp = old_r - q * r;
                old_r = r;
                r = tmp;
                tmp = old_s - q * ss;
                old_s = ss;
                ss = tmp;
            }
            // old_r = gcd, old_s * acc + t * w = old_r with t = (old_r - old_s*acc)/w
            long t = (old_r - old_s * acc) / w;
            for (auto& cc : acc_coeff) cc *= old_s;
            acc_coeff[s] = t;
            acc = old_r;
        }
        if (acc < 0) {
            acc = -acc;
            for (auto& cc : acc_coeff) cc = -cc;
        }
        if (acc != g) throw Error("internal: Bezout combination failed");
        coeff = acc_coeff;
    }
    Rational sigma(1);
    for (std::size_t s = 0; s < live.size(); ++s) sigma *= rho[s].pow(coeff[s]);

    Rational q;
    if (!rational_nth_root(sigma, static_cast<int>(g), &q)) return false;
    // q = r^2 must itself be a rational square.
    if (!is_rational_square(q)) return false;
    for (std::size_t s = 0; s < live.size(); ++s)
        if (rho[s] != q.pow(weight[static_cast<std::size_t>(live[s])])) return false;
    return true;
}

}  // namespace compcurve
