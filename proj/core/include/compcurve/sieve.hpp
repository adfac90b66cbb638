#ifndef COMPCURVE_SIEVE_HPP
#define COMPCURVE_SIEVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "compcurve/jacobian.hpp"

namespace compcurve {

struct SieveParams {
    int prime_count = 5;
    std::uint64_t prime_min = 1000;
    int bound = 10;    // infinity-norm bound B on coefficient vectors
    int support = 3;   // max number of nonzero entries s
    std::uint64_t op_budget = 100'000'000;  // Jacobian group operations
    int jobs = 1;
};

enum class ClassKind { Eps, R };
std::string class_kind_name(ClassKind k);
ClassKind class_kind_from_name(const std::string& name);

/* Bounded relation search among divisor classes, reduced at several good
 * primes. A rational relation sum a_i [D_i] = 0 survives reduction at every
 * good prime, so vectors that die at any prime are certified non-relations;
 * survivors of all primes are reported. The scope is exactly: no relation
 * with support <= s and |coefficients| <= B beyond those listed. Rank is
 * never certified. */
struct RelationReport {
    std::vector<std::string> class_labels;
    std::vector<std::uint64_t> primes;
    int bound = 0;
    int support = 0;
    // Primitive, sign-normalized coefficient vectors (full length), sorted.
    std::vector<std::vector<long>> found;
    std::vector<std::vector<long>> claimed;
    bool pass = false;  // found == claimed
    std::uint64_t ops = 0;
    std::string scope_note;
    std::string verdict() const { return pass ? "PASS" : "FAIL"; }
};

/* Sieve the eps- or r-classes of a forged curve. Only odd-degree models
 * reduce; r-classes additionally need the (0,0) base point of the twisted
 * families. Throws UnsupportedError otherwise, BudgetExceededError when the
 * enumeration would exceed op_budget. */
RelationReport relation_sieve(const CurveSpec& c, ClassKind kind, const SieveParams& params);

// The relations the construction proves, filtered to the enumeration window.
std::vector<std::vector<long>> claimed_relations(CurveFamily family, int d, ClassKind kind,
                                                 int n_classes, int bound, int support);

/* Lower-level entry point: one vector of reduced classes per prime (same
 * order and length). Used by the injection tests. */
RelationReport sieve_classes(const std::vector<std::vector<MumfordDivisor>>& classes_per_prime,
                             const std::vector<std::uint64_t>& primes,
                             const std::vector<std::string>& labels,
                             const std::vector<std::vector<long>>& claimed,
                             const SieveParams& params);

}  // namespace compcurve

#endif
