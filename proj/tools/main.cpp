/* compcurve: construct the composite-tuple hyperelliptic families, verify
 * their point inventories and divisor relations, reduce them mod good
 * primes and probe for small relations, and compute genus-2 invariants.
 *
 * Subcommands: forge, verify, sieve, pte, invariants.
 * Exit codes: 0 all checks pass, 1 a check failed, 2 degenerate or
 * unsupported input, 3 I/O or parse error. Human-readable summaries go to
 * stderr; machine JSON goes to --out (or stdout), never mixed. */

#include <CLI11.hpp>
#include <atomic>
#include <iostream>
#include <thread>

#include "compcurve/config.hpp"
#include "compcurve/json_io.hpp"

using namespace compcurve;

namespace {

void emit(const std::string& json, const std::string& out_path) {
    if (out_path.empty())
        std::cout << json;
    else
        write_text_file_atomic(out_path, json);
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DegeneracyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadReductionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SingularError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

struct CommonOpts {
    std::string config_path;
    Config cfg;

    void finish(std::uint64_t* seed_flag, long* height_flag, int* jobs_flag,
                std::string* out_flag) {
        if (!config_path.empty()) cfg = load_config(config_path);
        if (seed_flag) cfg.seed = *seed_flag;
        if (height_flag) cfg.height = *height_flag;
        if (jobs_flag) cfg.jobs = *jobs_flag;
        if (out_flag) cfg.out = *out_flag;
        cfg.validate();
    }
};

std::uint64_t derived_seed(std::uint64_t base, std::uint64_t index) {
    return Rng(base).fork(index).seed();
}

int cmd_forge(const std::string& family_str, int d, long p, const CommonOpts& opts, long count) {
    CurveFamily family = family_from_name(family_str);
    int size = d;
    if (family == CurveFamily::Kummer) size = p > 0 ? static_cast<int>(p) : d;
    if (size <= 0)
        throw PreconditionError("forge: provide --d (or --p for the kummer family)");
    if (family == CurveFamily::Kummer && size > 31)
        std::cerr << "note: p > 31 is outside the tested cyclotomic range; expect slow exact arithmetic\n";

    const Config& cfg = opts.cfg;
    if (count <= 1) {
        CurveSpec c = forge_curve(family, size, cfg.seed, cfg.height, cfg.max_retries);
        emit(curve_to_json(c), cfg.out);
        std::cerr << "forged " << family_name(family) << " d=" << c.d << " genus=" << c.genus
                  << " points=" << c.points.size() << " seed=" << cfg.seed
                  << (cfg.out.empty() ? "" : " -> " + cfg.out) << "\n";
        return 0;
    }

    // Batch mode: one curve per file plus a manifest indexing the outputs.
    if (cfg.out.empty())
        throw PreconditionError("forge --count needs --out <directory>");
    std::filesystem::create_directories(cfg.out);
    struct Item {
        std::uint64_t seed;
        std::string file;
        int genus = 0;
        long points = 0;
        bool ok = false;
        std::string error;
    };
    std::vector<Item> items(static_cast<std::size_t>(count));
    std::atomic<long> next{0};
    auto worker = [&]() {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= count) return;
            Item& it = items[static_cast<std::size_t>(i)];
            it.seed = derived_seed(cfg.seed, static_cast<std::uint64_t>(i));
            char name[32];
            std::snprintf(name, sizeof(name), "curve_%04ld.json", i);
            it.file = name;
            try {
                CurveSpec c = forge_curve(family, size, it.seed, cfg.height, cfg.max_retries);
                write_text_file_atomic(std::filesystem::path(cfg.out) / it.file, curve_to_json(c));
                it.genus = c.genus;
                it.points = static_cast<long>(c.points.size());
                it.ok = true;
            } catch (const Error& e) {
                it.error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::string manifest = "{\n  \"family\": \"" + family_name(family) + "\",\n  \"d\": " +
                           std::to_string(size) + ",\n  \"base_seed\": " + std::to_string(cfg.seed) +
                           ",\n  \"curves\": [\n";
    long failures = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Item& it = items[i];
        manifest += "    {\"file\": \"" + it.file + "\", \"seed\": " + std::to_string(it.seed) +
                    ", \"ok\": " + (it.ok ? "true" : "false");
        if (it.ok)
            manifest += ", \"genus\": " + std::to_string(it.genus) +
                        ", \"points\": " + std::to_string(it.points);
        else
            manifest += ", \"error\": \"" + it.error + "\"";
        manifest += std::string("}") + (i + 1 < items.size() ? "," : "") + "\n";
        failures += it.ok ? 0 : 1;
    }
    manifest += "  ]\n}\n";
    write_text_file_atomic(std::filesystem::path(cfg.out) / "manifest.json", manifest);
    std::cerr << "forged " << (count - failures) << "/" << count << " curves into " << cfg.out
              << "\n";
    return failures == 0 ? 0 : 2;
}

int cmd_verify(const std::string& curve_path, const CommonOpts& opts) {
    CurveSpec c = curve_from_json(read_text_file(curve_path));
    VerificationReport vrep = verify_points(c);
    bool witness_ok = witness_identity_holds(c.witness);

    bool relation_ok = true;
    std::string relation_json = "null";
    if (relation_witness_supported(c.family)) {
        WitnessReport wrep = relation_witness(c);
        relation_ok = wrep.pass;
        relation_json = witness_report_to_json(wrep);
        // strip trailing newline for embedding
        while (!relation_json.empty() && relation_json.back() == '\n') relation_json.pop_back();
    }
    bool torsion_ok = true;
    std::string torsion_json = "null";
    if (two_torsion_supported(c)) {
        torsion_ok = two_torsion_witness(c);
        torsion_json = torsion_ok ? "true" : "false";
    }

    const bool all = vrep.all_pass && witness_ok && relation_ok && torsion_ok;
    std::string vjson = verification_report_to_json(c, vrep);
    while (!vjson.empty() && vjson.back() == '\n') vjson.pop_back();
    std::string json = std::string("{\n  \"all_pass\": ") + (all ? "true" : "false") +
                       ",\n  \"witness_identity\": " + (witness_ok ? "true" : "false") +
                       ",\n  \"verification\": " + vjson + ",\n  \"relation_witness\": " +
                       relation_json + ",\n  \"two_torsion\": " + torsion_json + "\n}\n";
    emit(json, opts.cfg.out);

    std::cerr << family_name(c.family) << " d=" << c.d << ": " << (all ? "all checks pass" : "FAILED");
    if (!all) {
        for (const auto& ck : vrep.checks)
            if (!ck.pass) std::cerr << " [" << ck.name << "]";
        if (!witness_ok) std::cerr << " [witness_identity]";
        if (!relation_ok) std::cerr << " [relation_witness]";
        if (!torsion_ok) std::cerr << " [two_torsion]";
    }
    std::cerr << "\n";
    return all ? 0 : 1;
}

int cmd_sieve(const std::string& curve_path, const std::string& classes, const CommonOpts& opts) {
    CurveSpec c = curve_from_json(read_text_file(curve_path));
    SieveParams params = opts.cfg.sieve;
    params.jobs = opts.cfg.jobs;
    RelationReport rep = relation_sieve(c, class_kind_from_name(classes), params);
    emit(relation_report_to_json(rep), opts.cfg.out);
    std::cerr << "sieve " << family_name(c.family) << " d=" << c.d << " classes=" << classes
              << " primes=" << rep.primes.size() << " B=" << rep.bound << " s=" << rep.support
              << ": " << rep.verdict() << " (" << rep.found.size() << " survivors, "
              << rep.claimed.size() << " claimed, " << rep.ops << " ops)\n";
    return rep.pass ? 0 : 1;
}

int cmd_pte(const std::string& family_str, int n, const CommonOpts& opts) {
    WitnessFamily fam = witness_family_from_name(family_str);
    if (n <= 0) throw PreconditionError("pte: provide --n (blocks; p for kummer, d for baseline)");
    const Config& cfg = opts.cfg;
    CompositeWitness w = sample_witness_retrying(fam, n, cfg.seed, cfg.height, cfg.max_retries);
    if (!witness_identity_holds(w)) throw Error("internal: emitted witness fails its identity");
    if (!check_pte(pte_blocks(w))) throw Error("internal: emitted witness fails the PTE check");
    emit(witness_to_json(w), cfg.out);
    std::cerr << "pte witness family=" << witness_family_name(fam) << " n=" << w.n
              << " blocks of " << w.block_size() << ", identity and power sums verified\n";
    return 0;
}

IgusaTuple igusa_of_curve_file(const std::string& path) {
    CurveSpec c = curve_from_json(read_text_file(path));
    if (c.genus != 2)
        throw UnsupportedError("invariants: genus-2 curves only (got genus " +
                               std::to_string(c.genus) + ")");
    return igusa_clebsch(homogenize(c.f, 6));
}

int cmd_invariants(const std::string& path, const std::string& compare_a,
                   const std::string& compare_b, const CommonOpts& opts) {
    if (!compare_a.empty()) {
        IgusaTuple a = igusa_of_curve_file(compare_a);
        IgusaTuple b = igusa_of_curve_file(compare_b);
        bool eq = weighted_equivalent(a, b);
        std::string ja = igusa_to_json(a), jb = igusa_to_json(b);
        while (!ja.empty() && ja.back() == '\n') ja.pop_back();
        while (!jb.empty() && jb.back() == '\n') jb.pop_back();
        std::string json = std::string("{\n  \"equivalent\": ") + (eq ? "true" : "false") +
                           ",\n  \"a\": " + ja + ",\n  \"b\": " + jb + "\n}\n";
        emit(json, opts.cfg.out);
        std::cerr << "invariant tuples " << (eq ? "equivalent" : "NOT equivalent")
                  << " under the weighted scaling action\n";
        return eq ? 0 : 1;
    }
    IgusaTuple t = igusa_of_curve_file(path);
    emit(igusa_to_json(t), opts.cfg.out);
    std::cerr << "I2=" << t.I2 << " I4=" << t.I4 << " I6=" << t.I6 << " I10=" << t.I10 << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"composite-tuple hyperelliptic curve toolkit"};
    app.require_subcommand(1);

    // forge
    auto* forge = app.add_subcommand("forge", "sample a witness and build a curve file");
    std::string forge_family;
    int forge_d = 0;
    long forge_p = 0;
    long forge_count = 1;
    std::uint64_t forge_seed = 1;
    long forge_height = 50;
    int forge_jobs = 1;
    std::string forge_out, forge_config;
    forge->add_option("--family", forge_family, "curve family")->required();
    forge->add_option("--d", forge_d, "family parameter d");
    forge->add_option("--p", forge_p, "cyclotomic level (kummer)");
    forge->add_option("--seed", forge_seed, "PRNG seed");
    forge->add_option("--height", forge_height, "sampling height H");
    forge->add_option("--count", forge_count, "batch size (writes a manifest)");
    forge->add_option("--jobs", forge_jobs, "parallel workers for batch mode");
    forge->add_option("--out", forge_out, "output path (file, or directory in batch mode)");
    forge->add_option("--config", forge_config, "config JSON path");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a curve file");
    std::string verify_file, verify_out, verify_config;
    verify->add_option("file", verify_file, "curve JSON")->required();
    verify->add_option("--out", verify_out, "report path");
    verify->add_option("--config", verify_config, "config JSON path");

    // sieve
    auto* sieve = app.add_subcommand("sieve", "bounded relation search mod good primes");
    std::string sieve_file, sieve_classes = "r", sieve_out, sieve_config;
    int sieve_primes = 5, sieve_bound = 10, sieve_support = 3, sieve_jobs = 1;
    std::uint64_t sieve_prime_min = 1000, sieve_budget = 100000000ULL;
    sieve->add_option("file", sieve_file, "curve JSON")->required();
    sieve->add_option("--classes", sieve_classes, "eps or r");
    sieve->add_option("--primes", sieve_primes, "number of good primes");
    sieve->add_option("--prime-min", sieve_prime_min, "smallest prime considered");
    sieve->add_option("--bound", sieve_bound, "coefficient bound B");
    sieve->add_option("--support", sieve_support, "support bound s");
    sieve->add_option("--budget", sieve_budget, "group-operation budget");
    sieve->add_option("--jobs", sieve_jobs, "parallel workers");
    sieve->add_option("--out", sieve_out, "report path");
    sieve->add_option("--config", sieve_config, "config JSON path");

    // pte
    auto* pte = app.add_subcommand("pte", "emit a certified composite-tuple witness");
    std::string pte_family, pte_out, pte_config;
    int pte_n = 0;
    std::uint64_t pte_seed = 1;
    long pte_height = 50;
    pte->add_option("--family", pte_family, "B, Z, kummer or baseline")->required();
    pte->add_option("--n", pte_n, "blocks (p for kummer, d for baseline)");
    pte->add_option("--seed", pte_seed, "PRNG seed");
    pte->add_option("--height", pte_height, "sampling height H");
    pte->add_option("--out", pte_out, "output path");
    pte->add_option("--config", pte_config, "config JSON path");

    // invariants
    auto* inv = app.add_subcommand("invariants", "Igusa-Clebsch invariants of genus-2 curves");
    std::string inv_file, inv_out, inv_config;
    std::vector<std::string> inv_compare;
    inv->add_option("file", inv_file, "curve JSON");
    inv->add_option("--compare", inv_compare, "two curve JSON files")->expected(2);
    inv->add_option("--out", inv_out, "output path");
    inv->add_option("--config", inv_config, "config JSON path");

    CLI11_PARSE(app, argc, argv);

    return guarded([&]() -> int {
        if (forge->parsed()) {
            CommonOpts opts;
            opts.config_path = forge_config;
            std::uint64_t seed = forge_seed;
            long height = forge_height;
            int jobs = forge_jobs;
            opts.finish(forge->count("--seed") ? &seed : nullptr,
                        forge->count("--height") ? &height : nullptr,
                        forge->count("--jobs") ? &jobs : nullptr,
                        forge->count("--out") ? &forge_out : nullptr);
            return cmd_forge(forge_family, forge_d, forge_p, opts, forge_count);
        }
        if (verify->parsed()) {
            CommonOpts opts;
            opts.config_path = verify_config;
            opts.finish(nullptr, nullptr, nullptr, verify->count("--out") ? &verify_out : nullptr);
            return cmd_verify(verify_file, opts);
        }
        if (sieve->parsed()) {
            CommonOpts opts;
            opts.config_path = sieve_config;
            opts.finish(nullptr, nullptr, sieve->count("--jobs") ? &sieve_jobs : nullptr,
                        sieve->count("--out") ? &sieve_out : nullptr);
            if (sieve->count("--primes")) opts.cfg.sieve.prime_count = sieve_primes;
            if (sieve->count("--prime-min")) opts.cfg.sieve.prime_min = sieve_prime_min;
            if (sieve->count("--bound")) opts.cfg.sieve.bound = sieve_bound;
            if (sieve->count("--support")) opts.cfg.sieve.support = sieve_support;
            if (sieve->count("--budget")) opts.cfg.sieve.op_budget = sieve_budget;
            opts.cfg.validate();
            return cmd_sieve(sieve_file, sieve_classes, opts);
        }
        if (pte->parsed()) {
            CommonOpts opts;
            opts.config_path = pte_config;
            std::uint64_t seed = pte_seed;
            long height = pte_height;
            opts.finish(pte->count("--seed") ? &seed : nullptr,
                        pte->count("--height") ? &height : nullptr, nullptr,
                        pte->count("--out") ? &pte_out : nullptr);
            return cmd_pte(pte_family, pte_n, opts);
        }
        if (inv->parsed()) {
            CommonOpts opts;
            opts.config_path = inv_config;
            opts.finish(nullptr, nullptr, nullptr, inv->count("--out") ? &inv_out : nullptr);
            std::string a = inv_compare.size() == 2 ? inv_compare[0] : "";
            std::string b = inv_compare.size() == 2 ? inv_compare[1] : "";
            if (a.empty() && inv_file.empty())
                throw PreconditionError("invariants: provide a curve file or --compare a b");
            return cmd_invariants(inv_file, a, b, opts);
        }
        return 3;
    });
}
