#ifndef COMPCURVE_WITNESS_HPP
#define COMPCURVE_WITNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "compcurve/poly.hpp"
#include "compcurve/quad.hpp"
#include "compcurve/rng.hpp"
#include "compcurve/scalar.hpp"

namespace compcurve {

enum class WitnessFamily { B, Z, Kummer, Baseline };

std::string witness_family_name(WitnessFamily f);
WitnessFamily witness_family_from_name(const std::string& name);

/* A certified composite tuple: roots a_i together with monic polynomials
 * (inner G, outer M) satisfying prod (x - a_i) = M(G(x)) exactly. Roots are
 * stored block-major with block size deg G, so the PTE blocks are just
 * consecutive chunks. aux holds the named scalars the curve builder reads
 * (b, t_i, u_i, T_ij / z_ij / t_ij), stored rather than recomputed so the
 * builder and the verifier agree bit for bit. */
struct CompositeWitness {
    WitnessFamily family = WitnessFamily::Baseline;
    int n = 0;     // number of blocks = deg(outer)
    long p = 0;    // cyclotomic level (kummer only)
    std::vector<Scalar> roots;
    Poly<Rational> inner, outer;
    std::vector<std::pair<std::string, Rational>> aux;
    std::uint64_t seed = 0;

    int block_size() const { return inner.degree(); }
    bool has_aux(const std::string& key) const;
    const Rational& aux_value(const std::string& key) const;
};

/* Family B: n triples T_i1,T_i2,T_i3 with zero row sums and a common
 * second symmetric value b, doubled into a (6,n)-composite tuple {+-T_ij}
 * with inner g(x)^2 = (x(x^2+b))^2 and outer m = prod (x-u_i). The triple
 * rows form a torus that the Eisenstein algebra parametrizes rationally:
 * z_1 = w^{-1}, z_i = norm_one(s_i) w^{-1}, (T_i1, T_i2) = coords of z_i.
 * w must have nonzero norm; s supplies the n-1 norm-one parameters. */
CompositeWitness param_B(int n, const QuadElem& w, const std::vector<Rational>& s);

/* Family Z: n pairs z_i1, z_i2 with a common sum of squares b, giving a
 * (4,n)-composite tuple {+-z_ij} with inner x^4 - b x^2 and outer
 * m = prod (x-u_i), u_i = -(z_i1 z_i2)^2. Same torus construction through
 * the Gaussian algebra; w Gaussian and nonzero. */
CompositeWitness param_Z(int n, const QuadElem& w, const std::vector<Rational>& s);

/* Kummer locus points over Q(zeta_p): u_i = t_i^p, inner x^p, outer
 * m = prod (x - u_i), roots zeta^j t_i (6p cyclotomic values). */
CompositeWitness kummer_tuple(long p, const std::vector<Rational>& t);

// The free 2d-tuple of the baseline construction: inner x, outer prod (x-u_i).
CompositeWitness baseline_tuple(int d, const std::vector<Rational>& u);

/* PTE certificate: power sums of orders 1..e-1 agree across all blocks
 * (e = block size). Exact arithmetic, zero tolerance. */
bool check_pte(const std::vector<std::vector<Scalar>>& blocks);

std::vector<std::vector<Scalar>> pte_blocks(const CompositeWitness& w);

// prod (x - roots) == outer(inner(x)), checked by exact expansion.
bool witness_identity_holds(const CompositeWitness& w);

/* One sampling attempt; throws DegeneracyError / SingularError when the
 * drawn parameters land in the thin degeneracy locus. `size` is n for B/Z,
 * p for kummer and d for baseline. */
CompositeWitness sample_witness(WitnessFamily fam, int size, Rng& rng, long height);

// Resampling driver: retries up to max_retries, then reports the seed.
CompositeWitness sample_witness_retrying(WitnessFamily fam, int size, std::uint64_t seed,
                                         long height, int max_retries);

}  // namespace compcurve

#endif
