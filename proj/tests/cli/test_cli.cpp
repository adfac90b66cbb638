/* End-to-end checks of the installed CLI surface: exit codes, file
 * round-trips, determinism. Drives the real binary (argv[1]) through
 * /bin/sh. */

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "compcurve/json_io.hpp"

namespace fs = std::filesystem;
using namespace compcurve;

namespace {

std::string g_bin;
fs::path g_dir;
int g_failures = 0;

void check(bool cond, const std::string& what) {
    if (cond) {
        std::printf("[ok] %s\n", what.c_str());
    } else {
        std::printf("[FAIL] %s\n", what.c_str());
        ++g_failures;
    }
}

int run(const std::string& args) {
    std::string cmd = g_bin + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -2;
}

std::string path(const std::string& name) { return (g_dir / name).string(); }

bool same_bytes(const std::string& a, const std::string& b) {
    return read_text_file(a) == read_text_file(b);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <compcurve binary>\n");
        return 2;
    }
    g_bin = argv[1];
    g_dir = fs::temp_directory_path() / ("compcurve_cli_" + std::to_string(::getpid()));
    fs::create_directories(g_dir);

    check(run("forge --family theta-tilde --d 4 --seed 42 --out " + path("tt4.json")) == 0,
          "forge theta-tilde d=4 exits 0");
    CurveSpec c = curve_from_json(read_text_file(path("tt4.json")));
    check(c.genus == 8 && c.points.size() == 96, "forged file has genus 8 and 96 points");

    check(run("forge --family theta-tilde --d 4 --seed 42 --out " + path("tt4b.json")) == 0,
          "second forge run exits 0");
    check(same_bytes(path("tt4.json"), path("tt4b.json")), "same seed gives byte-identical output");
    check(run("forge --family theta-tilde --d 4 --seed 43 --out " + path("tt4c.json")) == 0,
          "third forge run exits 0");
    check(!same_bytes(path("tt4.json"), path("tt4c.json")), "different seed changes the output");

    check(run("verify " + path("tt4.json") + " --out " + path("rep.json")) == 0,
          "verify on a forge output exits 0");

    // hand-corrupted point -> exit 1
    CurveSpec bad = c;
    bad.points[0].y = bad.points[0].y + Scalar(Rational(1));
    write_text_file_atomic(path("bad.json"), curve_to_json(bad));
    check(run("verify " + path("bad.json")) == 1, "verify on a corrupted point exits 1");

    check(run("forge --family gamma1 --d 2 --out " + path("g.json")) == 2,
          "forge gamma1 d=2 is unsupported (genus 0), exit 2");
    check(run("verify " + path("missing.json")) == 3, "verify on a missing file exits 3");
    write_text_file_atomic(path("junk.json"), "{not json");
    check(run("verify " + path("junk.json")) == 3, "verify on malformed JSON exits 3");

    check(run("pte --family B --n 4 --seed 7 --out " + path("w.json")) == 0,
          "pte emits a witness, exit 0");
    CompositeWitness w = witness_from_json(read_text_file(path("w.json")));
    check(w.n == 4 && w.roots.size() == 24 && check_pte(pte_blocks(w)),
          "emitted witness is a certified (6,4)-composite tuple");

    check(run("forge --family lambda2 --d 2 --seed 9 --out " + path("l2.json")) == 0,
          "forge lambda2 d=2 exits 0");
    check(run("sieve " + path("l2.json") + " --classes r --primes 2 --bound 2 --support 2 --out " +
              path("sieve.json")) == 0,
          "sieve lambda2 reports PASS, exit 0");
    check(run("sieve " + path("l2.json") + " --classes r --primes 2 --bound 2 --support 2 --out " +
              path("sieve2.json")) == 0,
          "second sieve run exits 0");
    check(same_bytes(path("sieve.json"), path("sieve2.json")),
          "sieve reports are byte-identical across runs");

    // eps-class control: the four row relations of theta1 at d=2 survive
    check(run("forge --family theta1 --d 2 --seed 11 --out " + path("t1.json")) == 0,
          "forge theta1 d=2 exits 0");
    check(run("sieve " + path("t1.json") + " --classes eps --primes 3 --bound 1 --support 3 --out " +
              path("eps.json")) == 0,
          "eps sieve recovers exactly the claimed row relations, exit 0");
    {
        nlohmann::json rep = nlohmann::json::parse(read_text_file(path("eps.json")));
        std::vector<long> row0 = {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0};
        check(rep.at("verdict") == "PASS" && rep.at("found_relations").size() == 4 &&
                  rep.at("found_relations").back().get<std::vector<long>>() == row0,
              "eps sieve report lists the four row relations");
    }

    // genus-2 with an odd-degree (deg 5) model still has invariants
    check(run("forge --family lambda2 --d 3 --seed 12 --out " + path("l23.json")) == 0,
          "forge lambda2 d=3 (genus 2, degree 5) exits 0");
    check(run("invariants " + path("l23.json")) == 0, "invariants on a degree-5 model exits 0");

    check(run("forge --family theta-tilde --d 2 --seed 5 --out " + path("tt2a.json")) == 0,
          "forge a genus-2 curve");
    check(run("forge --family theta-tilde --d 2 --seed 6 --out " + path("tt2b.json")) == 0,
          "forge a second genus-2 curve");
    check(run("invariants " + path("tt2a.json") + " --out " + path("inv.json")) == 0,
          "invariants on a genus-2 curve exits 0");
    check(run("invariants --compare " + path("tt2a.json") + " " + path("tt2a.json")) == 0,
          "a curve is equivalent to itself, exit 0");
    check(run("invariants --compare " + path("tt2a.json") + " " + path("tt2b.json")) == 1,
          "independently sampled curves are not equivalent, exit 1");
    check(run("invariants " + path("tt4.json")) == 2, "invariants on genus 8 exits 2");

    // config file supplies defaults; explicit flags override it
    write_text_file_atomic(path("cfg.json"), "{\"seed\": 42, \"height\": 50}\n");
    check(run("forge --family theta-tilde --d 4 --config " + path("cfg.json") + " --out " +
              path("cfg_forge.json")) == 0,
          "forge with --config exits 0");
    check(same_bytes(path("tt4.json"), path("cfg_forge.json")),
          "config-file seed matches the equivalent --seed run");
    check(run("forge --family theta-tilde --d 4 --config " + path("cfg.json") +
              " --seed 43 --out " + path("cfg_override.json")) == 0,
          "forge with --config and --seed exits 0");
    check(same_bytes(path("tt4c.json"), path("cfg_override.json")),
          "explicit --seed overrides the config file");

    // batch mode writes a manifest and per-curve files
    check(run("forge --family lambda2 --d 3 --seed 77 --count 3 --jobs 2 --out " +
              path("batch")) == 0,
          "batch forge exits 0");
    check(fs::exists(path("batch/manifest.json")) && fs::exists(path("batch/curve_0000.json")) &&
              fs::exists(path("batch/curve_0002.json")),
          "batch mode writes curves and a manifest");
    check(run("verify " + path("batch/curve_0001.json")) == 0, "batch curve verifies");
    check(run("forge --family lambda2 --d 3 --seed 77 --count 3 --jobs 1 --out " +
              path("batch1")) == 0,
          "serial batch forge exits 0");
    check(same_bytes(path("batch/curve_0002.json"), path("batch1/curve_0002.json")) &&
              same_bytes(path("batch/manifest.json"), path("batch1/manifest.json")),
          "batch outputs are independent of the worker count");

    fs::remove_all(g_dir);
    std::printf("%s: %d failure(s)\n", g_failures == 0 ? "ALL OK" : "FAILED", g_failures);
    return g_failures == 0 ? 0 : 1;
}
