#include "compcurve/config.hpp"

#include <fstream>

#include <json.hpp>

#include "compcurve/json_io.hpp"

namespace compcurve {

void Config::validate() const {
    if (height < 1) throw PreconditionError("config: height must be >= 1");
    if (max_retries < 1) throw PreconditionError("config: max_retries must be >= 1");
    if (jobs < 1) throw PreconditionError("config: jobs must be >= 1");
    if (sieve.prime_count < 1) throw PreconditionError("config: sieve.prime_count must be >= 1");
    if (sieve.prime_min < 3) throw PreconditionError("config: sieve.prime_min must be >= 3");
    if (sieve.bound < 1) throw PreconditionError("config: sieve.bound must be >= 1");
    if (sieve.support < 1) throw PreconditionError("config: sieve.support must be >= 1");
    if (sieve.op_budget < 1) throw PreconditionError("config: sieve.op_budget must be >= 1");
}

Config config_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("config JSON parse error: ") + e.what());
    }
    Config cfg;
    try {
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("height")) cfg.height = j.at("height").get<long>();
        if (j.contains("max_retries")) cfg.max_retries = j.at("max_retries").get<int>();
        if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
        if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
        if (j.contains("sieve")) {
            const auto& s = j.at("sieve");
            if (s.contains("prime_count")) cfg.sieve.prime_count = s.at("prime_count").get<int>();
            if (s.contains("prime_min")) cfg.sieve.prime_min = s.at("prime_min").get<std::uint64_t>();
            if (s.contains("bound")) cfg.sieve.bound = s.at("bound").get<int>();
            if (s.contains("support")) cfg.sieve.support = s.at("support").get<int>();
            if (s.contains("op_budget")) cfg.sieve.op_budget = s.at("op_budget").get<std::uint64_t>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad config field: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    return config_from_json(read_text_file(path));
}

std::string config_to_json(const Config& cfg) {
    nlohmann::ordered_json j;
    j["seed"] = cfg.seed;
    j["height"] = cfg.height;
    j["max_retries"] = cfg.max_retries;
    nlohmann::ordered_json s;
    s["prime_count"] = cfg.sieve.prime_count;
    s["prime_min"] = cfg.sieve.prime_min;
    s["bound"] = cfg.sieve.bound;
    s["support"] = cfg.sieve.support;
    s["op_budget"] = cfg.sieve.op_budget;
    j["sieve"] = std::move(s);
    if (!cfg.out.empty()) j["out"] = cfg.out;
    j["jobs"] = cfg.jobs;
    return j.dump(2) + "\n";
}

}  // namespace compcurve
