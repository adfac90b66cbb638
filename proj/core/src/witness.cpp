#include "compcurve/witness.hpp"

#include <array>

#include <algorithm>

namespace compcurve {

std::string witness_family_name(WitnessFamily f) {
    switch (f) {
        case WitnessFamily::B: return "B";
        case WitnessFamily::Z: return "Z";
        case WitnessFamily::Kummer: return "kummer";
        case WitnessFamily::Baseline: return "baseline";
    }
    throw Error("unreachable witness family");
}

WitnessFamily witness_family_from_name(const std::string& name) {
    if (name == "B") return WitnessFamily::B;
    if (name == "Z") return WitnessFamily::Z;
    if (name == "kummer") return WitnessFamily::Kummer;
    if (name == "baseline") return WitnessFamily::Baseline;
    throw ParseError("unknown witness family \"" + name + "\"");
}

bool CompositeWitness::has_aux(const std::string& key) const {
    for (const auto& [k, v] : aux)
        if (k == key) return true;
    return false;
}

const Rational& CompositeWitness::aux_value(const std::string& key) const {
    for (const auto& [k, v] : aux)
        if (k == key) return v;
    throw PreconditionError("witness aux value \"" + key + "\" missing");
}

namespace {

std::string idx(const std::string& base, int i) { return base + "." + std::to_string(i); }
std::string idx(const std::string& base, int i, int j) {
    return base + "." + std::to_string(i) + "." + std::to_string(j);
}

void require_distinct(const std::vector<Rational>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) throw DegeneracyError(std::string("repeated ") + what);
}

void check_identity_postcondition(const CompositeWitness& w) {
    if (!witness_identity_holds(w))
        throw Error("composite witness postcondition violated: prod(x - a_i) != outer(inner)");
}

}  // namespace

CompositeWitness param_B(int n, const QuadElem& w, const std::vector<Rational>& s) {
    if (n < 2) throw PreconditionError("param_B: n >= 2 required");
    if (w.algebra() != QuadAlgebra::Eisenstein)
        throw PreconditionError("param_B: w must be Eisenstein");
    if (static_cast<int>(s.size()) != n - 1)
        throw PreconditionError("param_B: need n-1 norm-one parameters");
    if (w.norm().is_zero()) throw SingularError("param_B: w has norm zero");

    const QuadElem z1 = w.inv();
    std::vector<QuadElem> z;
    z.reserve(static_cast<std::size_t>(n));
    z.push_back(z1);
    for (int i = 1; i < n; ++i)
        z.push_back(norm_one_param(s[static_cast<std::size_t>(i - 1)], QuadAlgebra::Eisenstein) * z1);

    const Rational b = -z1.norm();
    if (b.is_zero()) throw DegeneracyError("b = 0");

    CompositeWitness cw;
    cw.family = WitnessFamily::B;
    cw.n = n;
    cw.aux.emplace_back("b", b);

    std::vector<Rational> t(static_cast<std::size_t>(n)), u(static_cast<std::size_t>(n));
    std::vector<std::array<Rational, 3>> T;
    T.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::array<Rational, 3> row = {z[static_cast<std::size_t>(i)].a(),
                                       z[static_cast<std::size_t>(i)].b(),
                                       -(z[static_cast<std::size_t>(i)].a() + z[static_cast<std::size_t>(i)].b())};
        for (const auto& v : row)
            if (v.is_zero()) throw DegeneracyError("T[i][j] = 0");
        t[static_cast<std::size_t>(i)] = row[0] * row[1] * row[2];
        u[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(i)];
        T.push_back(std::move(row));
    }
    require_distinct(u, "u_i");

    for (int i = 0; i < n; ++i) cw.aux.emplace_back(idx("t", i + 1), t[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i) cw.aux.emplace_back(idx("u", i + 1), u[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j)
            cw.aux.emplace_back(idx("T", i + 1, j + 1), T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j) {
            const Rational& Tij = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            cw.aux.emplace_back(idx("U", i + 1, j + 1), Tij * Tij);
        }

    cw.outer = product_of_linear(u);
    // (x (x^2 + b))^2 = x^6 + 2b x^4 + b^2 x^2
    cw.inner = Poly<Rational>(std::vector<Rational>{Rational(0), Rational(0), b * b, Rational(0),
                                                    Rational(2) * b, Rational(0), Rational(1)});
    cw.roots.reserve(static_cast<std::size_t>(6 * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j) {
            const Rational& Tij = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            cw.roots.emplace_back(Tij);
            cw.roots.emplace_back(-Tij);
        }
    check_identity_postcondition(cw);
    return cw;
}

CompositeWitness param_Z(int n, const QuadElem& w, const std::vector<Rational>& s) {
    if (n < 2) throw PreconditionError("param_Z: n >= 2 required");
    if (w.algebra() != QuadAlgebra::Gaussian)
        throw PreconditionError("param_Z: w must be Gaussian");
    if (static_cast<int>(s.size()) != n - 1)
        throw PreconditionError("param_Z: need n-1 norm-one parameters");
    if (w.norm().is_zero()) throw SingularError("param_Z: w has norm zero");

    const QuadElem z1 = w.inv();
    std::vector<QuadElem> z;
    z.reserve(static_cast<std::size_t>(n));
    z.push_back(z1);
    for (int i = 1; i < n; ++i)
        z.push_back(norm_one_param(s[static_cast<std::size_t>(i - 1)], QuadAlgebra::Gaussian) * z1);

    const Rational b = z1.norm();
    // The Gaussian norm is positive definite, so b = 0 would force w = 0,
    // which was already rejected.
    if (b.is_zero()) throw Error("param_Z: internal, b = 0 with nonzero w");

    CompositeWitness cw;
    cw.family = WitnessFamily::Z;
    cw.n = n;
    cw.aux.emplace_back("b", b);

    std::vector<Rational> u(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Rational& zi1 = z[static_cast<std::size_t>(i)].a();
        const Rational& zi2 = z[static_cast<std::size_t>(i)].b();
        if (zi1.is_zero() || zi2.is_zero()) throw DegeneracyError("z[i][j] = 0");
        Rational prod = zi1 * zi2;
        u[static_cast<std::size_t>(i)] = -(prod * prod);
    }
    require_distinct(u, "u_i");

    for (int i = 0; i < n; ++i) {
        cw.aux.emplace_back(idx("z", i + 1, 1), z[static_cast<std::size_t>(i)].a());
        cw.aux.emplace_back(idx("z", i + 1, 2), z[static_cast<std::size_t>(i)].b());
    }
    for (int i = 0; i < n; ++i) {
        const Rational& zi1 = z[static_cast<std::size_t>(i)].a();
        const Rational& zi2 = z[static_cast<std::size_t>(i)].b();
        cw.aux.emplace_back(idx("t", i + 1, 1), zi1 * zi1);
        cw.aux.emplace_back(idx("t", i + 1, 2), zi2 * zi2);
    }
    for (int i = 0; i < n; ++i) cw.aux.emplace_back(idx("u", i + 1), u[static_cast<std::size_t>(i)]);

    cw.outer = product_of_linear(u);
    // g(x^2) with g = x^2 - bx:  x^4 - b x^2
    cw.inner = Poly<Rational>(
        std::vector<Rational>{Rational(0), Rational(0), -b, Rational(0), Rational(1)});
    cw.roots.reserve(static_cast<std::size_t>(4 * n));
    for (int i = 0; i < n; ++i) {
        const Rational& zi1 = z[static_cast<std::size_t>(i)].a();
        const Rational& zi2 = z[static_cast<std::size_t>(i)].b();
        cw.roots.emplace_back(zi1);
        cw.roots.emplace_back(-zi1);
        cw.roots.emplace_back(zi2);
        cw.roots.emplace_back(-zi2);
    }
    check_identity_postcondition(cw);
    return cw;
}

CompositeWitness kummer_tuple(long p, const std::vector<Rational>& t) {
    if (!is_odd_prime(p)) throw PreconditionError("kummer_tuple: p must be an odd prime");
    if (t.size() != 6) throw PreconditionError("kummer_tuple: need exactly 6 parameters");
    for (const auto& ti : t)
        if (ti.is_zero()) throw DegeneracyError("t_i = 0");
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (t[i] == t[j]) throw DegeneracyError("repeated t_i");

    std::vector<Rational> u;
    u.reserve(6);
    for (const auto& ti : t) u.push_back(ti.pow(p));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (u[i] == u[j]) throw DegeneracyError("t_i^p = t_j^p");

    CompositeWitness cw;
    cw.family = WitnessFamily::Kummer;
    cw.n = 6;
    cw.p = p;
    for (int i = 0; i < 6; ++i) cw.aux.emplace_back(idx("t", i + 1), t[static_cast<std::size_t>(i)]);
    for (int i = 0; i < 6; ++i) cw.aux.emplace_back(idx("u", i + 1), u[static_cast<std::size_t>(i)]);
    cw.outer = product_of_linear(u);
    cw.inner = Poly<Rational>::monomial(Rational(1), static_cast<int>(p));

    const CycloElem zeta = CycloElem::zeta(p);
    std::vector<CycloElem> zpow;
    zpow.reserve(static_cast<std::size_t>(p));
    CycloElem acc = CycloElem::from_rational(p, Rational(1));
    for (long j = 0; j < p; ++j) {
        zpow.push_back(acc);
        acc = acc * zeta;
    }
    cw.roots.reserve(static_cast<std::size_t>(6 * p));
    for (int i = 0; i < 6; ++i) {
        CycloElem ti = CycloElem::from_rational(p, t[static_cast<std::size_t>(i)]);
        for (long j = 0; j < p; ++j) cw.roots.emplace_back(zpow[static_cast<std::size_t>(j)] * ti);
    }
    check_identity_postcondition(cw);
    return cw;
}

CompositeWitness baseline_tuple(int d, const std::vector<Rational>& u) {
    if (d < 2) throw PreconditionError("baseline_tuple: d >= 2 required");
    if (static_cast<int>(u.size()) != 2 * d)
        throw PreconditionError("baseline_tuple: need exactly 2d values");
    require_distinct(u, "u_i");
    CompositeWitness cw;
    cw.family = WitnessFamily::Baseline;
    cw.n = 2 * d;
    for (int i = 0; i < 2 * d; ++i) cw.aux.emplace_back(idx("u", i + 1), u[static_cast<std::size_t>(i)]);
    cw.outer = product_of_linear(u);
    cw.inner = Poly<Rational>::monomial(Rational(1), 1);
    cw.roots.assign(u.begin(), u.end());
    check_identity_postcondition(cw);
    return cw;
}

bool check_pte(const std::vector<std::vector<Scalar>>& blocks) {
    if (blocks.empty()) throw PreconditionError("check_pte: no blocks");
    const std::size_t e = blocks.front().size();
    if (e == 0) throw PreconditionError("check_pte: empty blocks");
    for (const auto& blk : blocks)
        if (blk.size() != e) throw PreconditionError("check_pte: ragged blocks");

    // Running powers per block entry; compare power sums of orders 1..e-1.
    std::vector<std::vector<Scalar>> pw = blocks;
    for (std::size_t order = 1; order + 1 <= e; ++order) {
        Scalar ref = zero_like(blocks[0][0]);
        bool first = true;
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            Scalar sum = zero_like(blocks[bi][0]);
            for (std::size_t k = 0; k < e; ++k) sum = sum + pw[bi][k];
            if (first) {
                ref = sum;
                first = false;
            } else if (!(sum == ref)) {
                return false;
            }
        }
        if (order + 2 <= e)
            for (std::size_t bi = 0; bi < blocks.size(); ++bi)
                for (std::size_t k = 0; k < e; ++k) pw[bi][k] = pw[bi][k] * blocks[bi][k];
    }
    return true;
}

std::vector<std::vector<Scalar>> pte_blocks(const CompositeWitness& w) {
    const int e = w.block_size();
    if (e <= 0) throw PreconditionError("witness has constant inner polynomial");
    std::vector<std::vector<Scalar>> blocks;
    blocks.reserve(static_cast<std::size_t>(w.n));
    for (std::size_t off = 0; off < w.roots.size(); off += static_cast<std::size_t>(e))
        blocks.emplace_back(w.roots.begin() + static_cast<long>(off),
                            w.roots.begin() + static_cast<long>(off + static_cast<std::size_t>(e)));
    return blocks;
}

bool witness_identity_holds(const CompositeWitness& w) {
    if (w.roots.empty()) return false;
    const Poly<Rational> composed = compose(w.outer, w.inner);
    bool all_rational = true;
    for (const auto& r : w.roots)
        if (!r.is_rational()) {
            all_rational = false;
            break;
        }
    if (all_rational) {
        std::vector<Rational> rs;
        rs.reserve(w.roots.size());
        for (const auto& r : w.roots) rs.push_back(r.rational());
        return product_of_linear(rs) == composed;
    }
    // Cyclotomic roots: expand over Q(zeta_p) and compare against the lift
    // of outer(inner); the zeta-parts must cancel.
    long p = 0;
    for (const auto& r : w.roots)
        if (!r.is_rational()) {
            p = r.cyclo().p();
            break;
        }
    std::vector<CycloElem> rs;
    rs.reserve(w.roots.size());
    for (const auto& r : w.roots)
        rs.push_back(r.is_rational() ? CycloElem::from_rational(p, r.rational()) : r.cyclo());
    Poly<CycloElem> lhs = product_of_linear(rs);
    std::vector<CycloElem> lifted;
    lifted.reserve(composed.coeffs().size());
    for (const auto& c : composed.coeffs()) lifted.push_back(CycloElem::from_rational(p, c));
    return lhs == Poly<CycloElem>(std::move(lifted));
}

CompositeWitness sample_witness(WitnessFamily fam, int size, Rng& rng, long height) {
    switch (fam) {
        case WitnessFamily::B:
        case WitnessFamily::Z: {
            QuadAlgebra alg =
                fam == WitnessFamily::B ? QuadAlgebra::Eisenstein : QuadAlgebra::Gaussian;
            QuadElem w = QuadElem::zero(alg);
            for (int guard = 0; w.is_zero(); ++guard) {
                if (guard > 100) throw DegeneracyError("could not sample nonzero w");
                w = QuadElem(alg, rng.rational(height), rng.rational(height));
            }
            std::vector<Rational> s;
            s.reserve(static_cast<std::size_t>(size - 1));
            for (int i = 1; i < size; ++i) s.push_back(rng.rational(height));
            return fam == WitnessFamily::B ? param_B(size, w, s) : param_Z(size, w, s);
        }
        case WitnessFamily::Kummer: {
            std::vector<Rational> t;
            t.reserve(6);
            for (int i = 0; i < 6; ++i) t.push_back(rng.nonzero_rational(height));
            return kummer_tuple(size, t);
        }
        case WitnessFamily::Baseline: {
            std::vector<Rational> u;
            u.reserve(static_cast<std::size_t>(2 * size));
            for (int i = 0; i < 2 * size; ++i) u.push_back(rng.rational(height));
            return baseline_tuple(size, u);
        }
    }
    throw Error("unreachable witness family");
}

CompositeWitness sample_witness_retrying(WitnessFamily fam, int size, std::uint64_t seed,
                                         long height, int max_retries) {
    Rng rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        try {
            CompositeWitness w = sample_witness(fam, size, rng, height);
            w.seed = seed;
            return w;
        } catch (const DegeneracyError&) {
        } catch (const SingularError&) {
        }
    }
    throw DegeneracyError("sampling aborted after " + std::to_string(max_retries) +
                          " attempts (family=" + witness_family_name(fam) +
                          ", seed=" + std::to_string(seed) + ")");
}

}  // namespace compcurve
