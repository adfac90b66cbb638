#ifndef COMPCURVE_JSON_IO_HPP
#define COMPCURVE_JSON_IO_HPP

#include <filesystem>
#include <string>

#include "compcurve/curve.hpp"
#include "compcurve/igusa.hpp"
#include "compcurve/sieve.hpp"

namespace compcurve {

/* JSON wire formats. Scalars serialize as strings ("num/den", or
 * "zeta<p>:c0,c1,..." for cyclotomic values); polynomials as arrays of
 * coefficient strings, index = degree. Key order is fixed, so identical
 * inputs serialize byte-identically. */

// {"a":"num/den","b":"num/den","alg":"eisenstein"|"gaussian"}
std::string quad_to_json(const QuadElem& x);
QuadElem quad_from_json(const std::string& text);

// {"p":p,"rep":["num/den",...]}
std::string cyclo_to_json(const CycloElem& x);
CycloElem cyclo_from_json(const std::string& text);

std::string witness_to_json(const CompositeWitness& w);
CompositeWitness witness_from_json(const std::string& text);

std::string curve_to_json(const CurveSpec& c);
CurveSpec curve_from_json(const std::string& text);

std::string verification_report_to_json(const CurveSpec& c, const VerificationReport& rep);
std::string witness_report_to_json(const WitnessReport& rep);
std::string relation_report_to_json(const RelationReport& rep);
std::string igusa_to_json(const IgusaTuple& t);

std::string read_text_file(const std::filesystem::path& path);          // IoError
void write_text_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace compcurve

#endif
