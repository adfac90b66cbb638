#ifndef COMPCURVE_CURVE_HPP
#define COMPCURVE_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "compcurve/witness.hpp"

namespace compcurve {

/* The specialized hyperelliptic families. The first six arise from
 * family-B witnesses, the lambda trio from family-Z witnesses, kummer
 * from the cyclotomic locus, baseline from the free tuple. Writing (h, l)
 * for the square-root decomposition of the witness outer polynomial:
 *   gamma1  y^2 = l(x)           gamma2  y^2 = x l(x)        gamma~ y^2 = l(x^2)
 *   theta1  y^2 = l(ghat(x))     theta2  y^2 = x l(ghat(x))  theta~ y^2 = l(ghat(x^2))
 *   lambda1 y^2 = l(g(x))        lambda2 y^2 = x l(g(x))     lambda~ y^2 = l(g(x^2))
 *   kummer  y^2 = l(x^p)         baseline y^2 = l(x)
 * with ghat = x(x+b)^2 and g = x^2 - bx. */
enum class CurveFamily {
    Gamma1,
    Gamma2,
    GammaTilde,
    Theta1,
    Theta2,
    ThetaTilde,
    Lambda1,
    Lambda2,
    LambdaTilde,
    Kummer,
    Baseline,
};

std::string family_name(CurveFamily f);                 // "theta-tilde", ...
CurveFamily family_from_name(const std::string& name);  // throws ParseError
WitnessFamily witness_family_for(CurveFamily f);
// Smallest d with positive genus (kummer: smallest odd prime).
int family_min_d(CurveFamily f);

struct CurvePoint {
    enum class Kind { Affine, Infinity };
    Kind kind = Kind::Affine;
    Scalar x, y;       // affine only
    int inf_sign = 1;  // infinity branch tag; odd-degree models have one point, "+"

    static CurvePoint affine(Scalar px, Scalar py);
    static CurvePoint infinity(int sign = 1);
    friend bool operator==(const CurvePoint& a, const CurvePoint& b);
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
};

// Expected (genus, N, R) from the tabulated family formulas. R is carried
// as provenance metadata: a paper lower bound, not machine-certified.
struct Expected {
    int genus = 0;
    long points = 0;
    long rank = 0;
};

Expected expected_counts(CurveFamily f, int d);  // throws UnsupportedError

struct CurveSpec {
    CurveFamily family = CurveFamily::Baseline;
    int d = 0;  // = p for kummer
    Poly<Rational> f;
    int genus = 0;
    std::vector<CurvePoint> points;
    CompositeWitness witness;
    std::optional<Expected> expected;
};

/* Full table inventory construction: f, the affine points of both branches,
 * (0,0) on the x-twisted families, and the rational point at infinity for
 * odd-degree models. Degenerate specializations (dropped remainder degree,
 * non-squarefree f, coincident points) throw DegeneracyError so the driver
 * can resample; the builder never silently drops points. */
CurveSpec build_curve(CurveFamily f, const CompositeWitness& w);

// The polynomial q with f = l(q(x)) (times x on twisted families).
Poly<Rational> family_inner_poly(CurveFamily f, const CompositeWitness& w);

// The canonical table points of the positive branch, with labels, in the
// deterministic order used everywhere (i-major, j-minor, + before -).
struct LabeledPoint {
    std::string label;
    CurvePoint point;
};
std::vector<LabeledPoint> canonical_positive_points(CurveFamily f, const CompositeWitness& w);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    bool all_pass = false;
    std::vector<CheckResult> checks;
    std::vector<bool> point_on_curve;  // one verdict per listed point
    long point_count = 0;
    long expected_points = 0;
    long expected_rank = 0;
    std::string rank_note;
};

/* Per-point on-curve booleans, distinctness, count vs expected, squarefree
 * and genus checks. Failures are report entries, never exceptions. */
VerificationReport verify_points(const CurveSpec& c);

struct WitnessReport {
    bool pass = false;
    bool identity_pass = false;
    bool points_pass = false;
    int offending_coeff = -1;  // first mismatching coefficient index, identity failure
    std::string detail;
};

/* Certifies the divisor of y - h(q(x)): (i) h(q(x))^2 - l(q(x)) splits
 * exactly into prod (x - x_i) over the positive-branch x-coordinates, and
 * (ii) every positive-branch point satisfies y = h(q(x)). Together these
 * witness the single epsilon-relation of the family. */
WitnessReport relation_witness(const CurveSpec& c);
bool relation_witness_supported(CurveFamily f);

/* true iff f(0) = 0 and x | f exactly once: (0,0) is then a rational
 * Weierstrass point distinct from the odd-degree point at infinity, so
 * [(0,0) - inf] is 2-torsion. Only the x-twisted odd-degree models. */
bool two_torsion_witness(const CurveSpec& c);
bool two_torsion_supported(const CurveSpec& c);

// Sample/build/retry loop, deterministic in the seed.
CurveSpec forge_curve(CurveFamily f, int d_or_p, std::uint64_t seed, long height = 50,
                      int max_retries = 32);

}  // namespace compcurve

#endif
