#ifndef COMPCURVE_ERRORS_HPP
#define COMPCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace compcurve {

/* Error taxonomy. The CLI maps these onto exit codes:
 *   check failure -> 1, degenerate/unsupported -> 2, I/O or parse -> 3. */

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Operands live over different coefficient fields (F_p with distinct p,
// Eisenstein vs Gaussian, distinct cyclotomic levels, ...).
class FieldMismatchError : public Error {
   public:
    using Error::Error;
};

// A stated precondition of an operation was violated by the caller.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

// Inversion of a non-invertible element (zero, zero norm, ...).
class SingularError : public Error {
   public:
    using Error::Error;
};

// A sampled parameter point fell into the thin degeneracy locus (repeated
// roots, vanishing coordinates, coincident curve points, dropped degree).
// Carries the condition that failed so drivers can log before resampling.
class DegeneracyError : public Error {
   public:
    explicit DegeneracyError(const std::string& condition)
        : Error("degeneracy: " + condition), condition_(condition) {}
    const std::string& condition() const { return condition_; }

   private:
    std::string condition_;
};

// Requested (family, d) outside the supported table range (genus 0, ...).
class UnsupportedError : public Error {
   public:
    using Error::Error;
};

// A prime fails one of the good-reduction conditions; message names it.
class BadReductionError : public Error {
   public:
    using Error::Error;
};

// The sieve enumeration exceeded its configured operation budget.
class BudgetExceededError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace compcurve

#endif
