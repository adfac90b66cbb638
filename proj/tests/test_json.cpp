#include <doctest.h>

#include "compcurve/config.hpp"
#include "compcurve/json_io.hpp"

using namespace compcurve;

namespace {
void check_witness_equal(const CompositeWitness& a, const CompositeWitness& b) {
    CHECK(a.family == b.family);
    CHECK(a.n == b.n);
    CHECK(a.p == b.p);
    CHECK(a.inner == b.inner);
    CHECK(a.outer == b.outer);
    CHECK(a.seed == b.seed);
    REQUIRE(a.roots.size() == b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) CHECK(a.roots[i] == b.roots[i]);
    REQUIRE(a.aux.size() == b.aux.size());
    for (std::size_t i = 0; i < a.aux.size(); ++i) {
        CHECK(a.aux[i].first == b.aux[i].first);
        CHECK(a.aux[i].second == b.aux[i].second);
    }
}
}  // namespace

TEST_CASE("quadratic and cyclotomic element wire formats") {
    QuadElem w(QuadAlgebra::Eisenstein, Rational(2, 3), Rational(-5));
    std::string jw = quad_to_json(w);
    CHECK(jw.find("\"alg\": \"eisenstein\"") != std::string::npos);
    CHECK(quad_from_json(jw) == w);
    QuadElem g(QuadAlgebra::Gaussian, Rational(0), Rational(1));
    CHECK(quad_from_json(quad_to_json(g)) == g);
    CHECK_THROWS_AS(quad_from_json(R"({"a":"1/1","b":"2/1","alg":"split"})"), ParseError);

    CycloElem z = CycloElem::zeta(7) + CycloElem::from_rational(7, Rational(1, 2));
    std::string jz = cyclo_to_json(z);
    CHECK(jz.find("\"p\": 7") != std::string::npos);
    CHECK(cyclo_from_json(jz) == z);
    CHECK(cyclo_from_json(cyclo_to_json(CycloElem::zero(5))) == CycloElem::zero(5));
    CHECK_THROWS_AS(cyclo_from_json(R"({"p":6,"rep":["1/1"]})"), PreconditionError);
}

TEST_CASE("witness JSON round trip, rational and cyclotomic") {
    for (auto [fam, size] : {std::pair<WitnessFamily, int>{WitnessFamily::B, 4},
                             {WitnessFamily::Z, 4},
                             {WitnessFamily::Kummer, 5},
                             {WitnessFamily::Baseline, 3}}) {
        CompositeWitness w = sample_witness_retrying(fam, size, 999, 20, 32);
        std::string text = witness_to_json(w);
        CompositeWitness back = witness_from_json(text);
        check_witness_equal(w, back);
        CHECK(witness_to_json(back) == text);  // byte-identical re-serialization
    }
}

TEST_CASE("curve JSON round trip preserves everything") {
    for (auto [fam, d, seed] : {std::tuple<CurveFamily, int, std::uint64_t>{CurveFamily::ThetaTilde, 3, 1},
                                {CurveFamily::Lambda2, 3, 2},
                                {CurveFamily::Kummer, 3, 3},
                                {CurveFamily::Gamma2, 5, 4}}) {
        CurveSpec c = forge_curve(fam, d, seed);
        std::string text = curve_to_json(c);
        CurveSpec back = curve_from_json(text);
        CHECK(back.family == c.family);
        CHECK(back.d == c.d);
        CHECK(back.f == c.f);
        CHECK(back.genus == c.genus);
        REQUIRE(back.points.size() == c.points.size());
        for (std::size_t i = 0; i < c.points.size(); ++i) CHECK(back.points[i] == c.points[i]);
        REQUIRE(back.expected.has_value());
        CHECK(back.expected->points == c.expected->points);
        CHECK(back.expected->rank == c.expected->rank);
        check_witness_equal(back.witness, c.witness);
        CHECK(curve_to_json(back) == text);
        // a parsed curve still verifies
        CHECK(verify_points(back).all_pass);
    }
}

TEST_CASE("malformed JSON raises ParseError") {
    CHECK_THROWS_AS(curve_from_json("{"), ParseError);
    CHECK_THROWS_AS(curve_from_json("{}"), ParseError);
    CHECK_THROWS_AS(witness_from_json("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(witness_from_json(R"({"family":"Q","n":2})"), ParseError);
    CurveSpec c = forge_curve(CurveFamily::Lambda2, 2, 5);
    std::string text = curve_to_json(c);
    // corrupt a rational string
    auto pos = text.find("/1");
    text.replace(pos, 2, "/x");
    CHECK_THROWS_AS(curve_from_json(text), ParseError);
}

TEST_CASE("report serializers emit the documented keys") {
    CurveSpec c = forge_curve(CurveFamily::Theta1, 2, 6);
    std::string v = verification_report_to_json(c, verify_points(c));
    for (const char* key : {"\"all_pass\"", "\"checks\"", "\"point_count\"", "\"expected\"",
                            "\"rank_note\""})
        CHECK(v.find(key) != std::string::npos);
    std::string w = witness_report_to_json(relation_witness(c));
    CHECK(w.find("\"identity_pass\"") != std::string::npos);
    SieveParams sp;
    sp.prime_count = 2;
    sp.bound = 1;
    sp.support = 2;
    std::string r = relation_report_to_json(relation_sieve(c, ClassKind::Eps, sp));
    for (const char* key : {"\"classes\"", "\"primes\"", "\"found_relations\"",
                            "\"claimed_relations\"", "\"verdict\"", "\"scope_note\""})
        CHECK(r.find(key) != std::string::npos);
}

TEST_CASE("config: defaults, file parsing, validation") {
    Config def;
    CHECK(def.height == 50);
    CHECK(def.max_retries == 32);
    CHECK(def.sieve.prime_count == 5);
    CHECK(def.sieve.prime_min == 1000);
    CHECK(def.sieve.bound == 10);
    CHECK(def.sieve.support == 3);
    CHECK(def.sieve.op_budget == 100000000ULL);

    Config cfg = config_from_json(R"({"seed": 12, "height": 9, "sieve": {"bound": 4}})");
    CHECK(cfg.seed == 12);
    CHECK(cfg.height == 9);
    CHECK(cfg.sieve.bound == 4);
    CHECK(cfg.sieve.support == 3);  // untouched default

    CHECK_THROWS_AS(config_from_json(R"({"height": 0})"), PreconditionError);
    CHECK_THROWS_AS(config_from_json(R"({"height": )"), ParseError);
    // round trip
    Config back = config_from_json(config_to_json(cfg));
    CHECK(back.seed == cfg.seed);
    CHECK(back.sieve.bound == cfg.sieve.bound);
}

TEST_CASE("atomic file write and read back") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "compcurve_test_io.json";
    write_text_file_atomic(tmp, "{\"x\": 1}\n");
    CHECK(read_text_file(tmp) == "{\"x\": 1}\n");
    write_text_file_atomic(tmp, "{\"x\": 2}\n");
    CHECK(read_text_file(tmp) == "{\"x\": 2}\n");
    fs::remove(tmp);
    CHECK_THROWS_AS(read_text_file(tmp), IoError);
}
