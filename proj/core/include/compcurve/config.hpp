#ifndef COMPCURVE_CONFIG_HPP
#define COMPCURVE_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "compcurve/sieve.hpp"

namespace compcurve {

/* Run configuration. Defaults follow the module design decisions: sampling
 * height 50, 32 resampling attempts, sieve with the 5 smallest good primes
 * >= 1000, bound 10, support 3, 1e8 group-operation budget. Flags override
 * file values. */
struct Config {
    std::uint64_t seed = 1;
    long height = 50;
    int max_retries = 32;
    SieveParams sieve;
    std::string out;
    int jobs = 1;

    void validate() const;  // throws PreconditionError on nonpositive bounds
};

Config config_from_json(const std::string& text);
Config load_config(const std::filesystem::path& path);
std::string config_to_json(const Config& cfg);

}  // namespace compcurve

#endif
