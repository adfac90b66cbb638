#include "compcurve/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

namespace compcurve {

std::string class_kind_name(ClassKind k) { return k == ClassKind::Eps ? "eps" : "r"; }

ClassKind class_kind_from_name(const std::string& name) {
    if (name == "eps") return ClassKind::Eps;
    if (name == "r") return ClassKind::R;
    throw ParseError("unknown class kind \"" + name + "\" (want eps or r)");
}

namespace {

long vec_gcd(const std::vector<long>& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    return g;
}

struct OpCounter {
    std::atomic<std::uint64_t> ops{0};
    std::uint64_t budget;
    explicit OpCounter(std::uint64_t b) : budget(b) {}
    void bump(std::uint64_t k = 1) {
        if (ops.fetch_add(k, std::memory_order_relaxed) + k > budget)
            throw BudgetExceededError("sieve exceeded the operation budget of " +
                                      std::to_string(budget));
    }
};

MumfordDivisor counted_add(const MumfordDivisor& a, const MumfordDivisor& b, OpCounter& ctr) {
    ctr.bump();
    return jac_add(a, b);
}

MumfordDivisor counted_smul(long n, const MumfordDivisor& d, OpCounter& ctr) {
    std::uint64_t bits = 1;
    for (long m = std::abs(n); m > 1; m >>= 1) bits += 2;
    ctr.bump(bits);
    return jac_scalar_mul(n, d);
}

// Sum of a sparse vector over one prime's classes, by the scalar-multiple
// route (independent of the table-driven enumeration path).
MumfordDivisor sparse_sum(const std::vector<std::pair<int, long>>& terms,
                          const std::vector<MumfordDivisor>& classes, OpCounter& ctr,
                          bool reverse) {
    MumfordDivisor acc = jac_identity(*classes.front().curve);
    if (!reverse) {
        for (const auto& [i, a] : terms)
            acc = counted_add(acc, counted_smul(a, classes[static_cast<std::size_t>(i)], ctr), ctr);
    } else {
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
            acc = counted_add(counted_smul(it->second, classes[static_cast<std::size_t>(it->first)], ctr),
                              acc, ctr);
    }
    return acc;
}

std::vector<long> to_full_vector(const std::vector<std::pair<int, long>>& terms, int n) {
    std::vector<long> v(static_cast<std::size_t>(n), 0);
    for (const auto& [i, a] : terms) v[static_cast<std::size_t>(i)] = a;
    return v;
}

/* Depth-first enumeration over index combinations i_1 < ... < i_m (m <= s)
 * and coefficients, sharing partial sums along the prefix. The first
 * nonzero coefficient is kept positive (vectors counted up to sign). */
void enumerate_candidates(const std::vector<MumfordDivisor>& classes,
                          const std::vector<std::vector<MumfordDivisor>>& mult, int bound,
                          int support, int first_index, OpCounter& ctr,
                          std::vector<std::vector<std::pair<int, long>>>& out) {
    const int n = static_cast<int>(classes.size());
    const MumfordDivisor ident = jac_identity(*classes.front().curve);
    std::vector<std::pair<int, long>> stack;

    std::function<void(int, int, const MumfordDivisor&)> rec = [&](int start, int remaining,
                                                                   const MumfordDivisor& partial) {
        const int last = (start == 0 && first_index >= 0) ? first_index + 1 : n;
        for (int i = (start == 0 && first_index >= 0) ? first_index : start; i < last; ++i) {
            for (long mag = 1; mag <= bound; ++mag) {
                const MumfordDivisor& pos = mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(mag - 1)];
                for (int sign = 0; sign < 2; ++sign) {
                    if (stack.empty() && sign == 1) continue;  // leading coefficient positive
                    MumfordDivisor term = sign == 0 ? pos : jac_neg(pos);
                    MumfordDivisor sum = counted_add(partial, term, ctr);
                    stack.emplace_back(i, sign == 0 ? mag : -mag);
                    if (sum.is_identity()) out.push_back(stack);
                    if (remaining > 1) rec(i + 1, remaining - 1, sum);
                    stack.pop_back();
                }
            }
        }
    };
    rec(0, support, ident);
}

}  // namespace

std::vector<std::vector<long>> claimed_relations(CurveFamily family, int d, ClassKind kind,
                                                 int n_classes, int bound, int support) {
    std::vector<std::vector<long>> out;
    if (kind != ClassKind::Eps) return out;  // the r-classes are claimed independent

    // Basis of the relation lattice among the eps classes, as blocks of
    // consecutive indices carrying coefficient 1.
    std::vector<std::vector<int>> basis_blocks;
    if (family == CurveFamily::Gamma1 || family == CurveFamily::Baseline) {
        std::vector<int> all(static_cast<std::size_t>(n_classes));
        std::iota(all.begin(), all.end(), 0);
        basis_blocks.push_back(std::move(all));
    } else if (family == CurveFamily::Theta1) {
        if (d <= 3) {
            for (int i = 0; i < n_classes / 3; ++i)
                basis_blocks.push_back({3 * i, 3 * i + 1, 3 * i + 2});
        } else {
            std::vector<int> all(static_cast<std::size_t>(n_classes));
            std::iota(all.begin(), all.end(), 0);
            basis_blocks.push_back(std::move(all));
        }
    } else {
        return out;
    }

    // Integer combinations of the (disjoint-support) basis blocks that fit
    // the enumeration window, reported primitively and up to sign.
    const int nb = static_cast<int>(basis_blocks.size());
    std::vector<long> combo(static_cast<std::size_t>(nb), 0);
    std::function<void(int, int, bool)> rec = [&](int idx, int used_support, bool any) {
        if (idx == nb) {
            if (!any) return;
            std::vector<long> c(combo.begin(), combo.end());
            if (vec_gcd(c) != 1) return;
            bool leading_ok = true;
            for (long x : c)
                if (x != 0) {
                    leading_ok = x > 0;
                    break;
                }
            if (!leading_ok) return;
            std::vector<long> v(static_cast<std::size_t>(n_classes), 0);
            for (int bidx = 0; bidx < nb; ++bidx)
                for (int pos : basis_blocks[static_cast<std::size_t>(bidx)])
                    v[static_cast<std::size_t>(pos)] = combo[static_cast<std::size_t>(bidx)];
            out.push_back(std::move(v));
            return;
        }
        const int blk = static_cast<int>(basis_blocks[static_cast<std::size_t>(idx)].size());
        for (long c = -bound; c <= bound; ++c) {
            if (c != 0 && used_support + blk > support) continue;
            combo[static_cast<std::size_t>(idx)] = c;
            rec(idx + 1, used_support + (c != 0 ? blk : 0), any || c != 0);
        }
        combo[static_cast<std::size_t>(idx)] = 0;
    };
    rec(0, 0, false);
    std::sort(out.begin(), out.end());
    return out;
}

RelationReport sieve_classes(const std::vector<std::vector<MumfordDivisor>>& classes_per_prime,
                             const std::vector<std::uint64_t>& primes,
                             const std::vector<std::string>& labels,
                             const std::vector<std::vector<long>>& claimed,
                             const SieveParams& params) {
    if (classes_per_prime.empty() || classes_per_prime.front().empty())
        throw PreconditionError("sieve needs at least one prime and one class");
    const int n = static_cast<int>(classes_per_prime.front().size());
    if (params.support < 1 || params.support > n)
        throw PreconditionError("sieve support must lie in [1, #classes]");
    if (params.bound < 1) throw PreconditionError("sieve bound must be >= 1");

    RelationReport rep;
    rep.class_labels = labels;
    rep.primes = primes;
    rep.bound = params.bound;
    rep.support = params.support;
    rep.claimed = claimed;
    rep.scope_note =
        "certifies only the absence of relations with support <= " + std::to_string(params.support) +
        " and |coefficients| <= " + std::to_string(params.bound) +
        " beyond those listed; rank itself is not certified";

    OpCounter ctr(params.op_budget);

    // Small multiples 1..B of every class at the first prime.
    const auto& classes0 = classes_per_prime.front();
    std::vector<std::vector<MumfordDivisor>> mult(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = mult[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(params.bound));
        row.push_back(classes0[static_cast<std::size_t>(i)]);
        for (long a = 2; a <= params.bound; ++a)
            row.push_back(counted_add(row.back(), classes0[static_cast<std::size_t>(i)], ctr));
    }

    // Full enumeration at the first prime (optionally split over threads by
    // leading index), lazy re-testing of survivors at the rest.
    std::vector<std::vector<std::pair<int, long>>> candidates;
    if (params.jobs <= 1) {
        enumerate_candidates(classes0, mult, params.bound, params.support, -1, ctr, candidates);
    } else {
        std::vector<std::vector<std::vector<std::pair<int, long>>>> per_thread(
            static_cast<std::size_t>(n));
        std::atomic<int> next{0};
        std::exception_ptr err;
        std::mutex err_mutex;
        auto worker = [&]() {
            try {
                for (;;) {
                    int i = next.fetch_add(1);
                    if (i >= n) return;
                    enumerate_candidates(classes0, mult, params.bound, params.support, i, ctr,
                                         per_thread[static_cast<std::size_t>(i)]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mutex);
                if (!err) err = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < params.jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
        for (auto& lst : per_thread)
            for (auto& cand : lst) candidates.push_back(std::move(cand));
    }

    // Keep primitive vectors that vanish at every remaining prime.
    for (const auto& cand : candidates) {
        std::vector<long> full = to_full_vector(cand, n);
        if (vec_gcd(full) != 1) continue;
        bool survives = true;
        for (std::size_t k = 1; k < classes_per_prime.size() && survives; ++k)
            survives = sparse_sum(cand, classes_per_prime[k], ctr, false).is_identity();
        if (survives) rep.found.push_back(std::move(full));
    }
    std::sort(rep.found.begin(), rep.found.end());
    rep.found.erase(std::unique(rep.found.begin(), rep.found.end()), rep.found.end());

    // Soundness re-verification: recompute every survivor at every prime by
    // the scalar-multiple route with reversed fold order.
    for (const auto& v : rep.found) {
        std::vector<std::pair<int, long>> terms;
        for (int i = 0; i < n; ++i)
            if (v[static_cast<std::size_t>(i)] != 0) terms.emplace_back(i, v[static_cast<std::size_t>(i)]);
        for (const auto& classes : classes_per_prime)
            if (!sparse_sum(terms, classes, ctr, true).is_identity())
                throw Error("sieve soundness recheck failed: reported survivor is not a relation");
    }

    std::vector<std::vector<long>> claimed_sorted = rep.claimed;
    std::sort(claimed_sorted.begin(), claimed_sorted.end());
    rep.pass = rep.found == claimed_sorted;
    rep.ops = ctr.ops.load();
    return rep;
}

RelationReport relation_sieve(const CurveSpec& c, ClassKind kind, const SieveParams& params) {
    if (c.f.is_zero_poly() || c.f.degree() % 2 == 0)
        throw UnsupportedError("relation sieve needs an odd-degree model (single point at infinity)");
    const bool twist =
        c.family == CurveFamily::Gamma2 || c.family == CurveFamily::Theta2 || c.family == CurveFamily::Lambda2;
    if (kind == ClassKind::R && !twist)
        throw UnsupportedError("r-classes need the (0,0) base point of the x-twisted families");

    std::vector<LabeledPoint> pos = canonical_positive_points(c.family, c.witness);
    std::vector<std::string> labels;
    labels.reserve(pos.size());
    for (const auto& lp : pos)
        labels.push_back(class_kind_name(kind) + "(" + lp.label + ")");

    std::vector<std::uint64_t> primes = find_good_primes(c, params.prime_count, params.prime_min);
    std::vector<std::unique_ptr<JacobianCurve>> curves;
    std::vector<std::vector<MumfordDivisor>> classes_per_prime;
    CurvePoint base = CurvePoint::affine(Scalar(Rational(0)), Scalar(Rational(0)));
    for (std::uint64_t p : primes) {
        curves.push_back(std::make_unique<JacobianCurve>(reduce_curve(c, p)));
        const JacobianCurve& jc = *curves.back();
        std::vector<MumfordDivisor> classes;
        classes.reserve(pos.size());
        for (const auto& lp : pos)
            classes.push_back(kind == ClassKind::Eps ? eps_class(lp.point, jc)
                                                     : r_class(lp.point, base, jc));
        classes_per_prime.push_back(std::move(classes));
    }

    auto claimed = claimed_relations(c.family, c.d, kind, static_cast<int>(pos.size()),
                                     params.bound, params.support);
    return sieve_classes(classes_per_prime, primes, labels, claimed, params);
}

}  // namespace compcurve
