#include "compcurve/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace compcurve {

namespace {

using Json = nlohmann::ordered_json;

Json poly_to_json(const Poly<Rational>& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(c.to_string());
    return arr;
}

Poly<Rational> poly_from_json(const Json& arr) {
    if (!arr.is_array()) throw ParseError("polynomial must be an array of coefficient strings");
    std::vector<Rational> c;
    c.reserve(arr.size());
    for (const auto& v : arr) c.push_back(Rational::from_string(v.get<std::string>()));
    return Poly<Rational>(std::move(c));
}

Json parse_or_throw(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
}

template <class T>
T field_as(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing JSON field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON field \"") + key + "\": " + e.what());
    }
}

}  // namespace

std::string quad_to_json(const QuadElem& x) {
    Json j;
    j["a"] = x.a().to_string();
    j["b"] = x.b().to_string();
    j["alg"] = algebra_name(x.algebra());
    return j.dump(2) + "\n";
}

QuadElem quad_from_json(const std::string& text) {
    Json j = parse_or_throw(text);
    return QuadElem(algebra_from_name(field_as<std::string>(j, "alg")),
                    Rational::from_string(field_as<std::string>(j, "a")),
                    Rational::from_string(field_as<std::string>(j, "b")));
}

std::string cyclo_to_json(const CycloElem& x) {
    Json j;
    j["p"] = x.p();
    Json rep = Json::array();
    const int top = x.rep().is_zero_poly() ? -1 : x.rep().degree();
    for (int i = 0; i <= top; ++i) rep.push_back(x.rep()[static_cast<std::size_t>(i)].to_string());
    j["rep"] = std::move(rep);
    return j.dump(2) + "\n";
}

CycloElem cyclo_from_json(const std::string& text) {
    Json j = parse_or_throw(text);
    long p = field_as<long>(j, "p");
    if (!j.contains("rep") || !j.at("rep").is_array())
        throw ParseError("cyclotomic element is missing the rep array");
    return CycloElem(p, poly_from_json(j.at("rep")));
}

std::string witness_to_json(const CompositeWitness& w) {
    Json j;
    j["family"] = witness_family_name(w.family);
    j["n"] = w.n;
    if (w.family == WitnessFamily::Kummer) j["p"] = w.p;
    Json roots = Json::array();
    for (const auto& r : w.roots) roots.push_back(r.to_string());
    j["roots"] = std::move(roots);
    j["inner"] = poly_to_json(w.inner);
    j["outer"] = poly_to_json(w.outer);
    Json aux = Json::object();
    for (const auto& [k, v] : w.aux) aux[k] = v.to_string();
    j["aux"] = std::move(aux);
    j["seed"] = w.seed;
    return j.dump(2) + "\n";
}

namespace {
CompositeWitness witness_from_jsonobj(const Json& j) {
    CompositeWitness w;
    w.family = witness_family_from_name(field_as<std::string>(j, "family"));
    w.n = field_as<int>(j, "n");
    if (w.family == WitnessFamily::Kummer) w.p = field_as<long>(j, "p");
    if (!j.contains("roots") || !j.at("roots").is_array())
        throw ParseError("witness is missing the roots array");
    for (const auto& r : j.at("roots")) w.roots.push_back(Scalar::from_string(r.get<std::string>()));
    w.inner = poly_from_json(j.at("inner"));
    w.outer = poly_from_json(j.at("outer"));
    if (!j.contains("aux") || !j.at("aux").is_object())
        throw ParseError("witness is missing the aux object");
    for (const auto& [k, v] : j.at("aux").items())
        w.aux.emplace_back(k, Rational::from_string(v.get<std::string>()));
    w.seed = field_as<std::uint64_t>(j, "seed");
    return w;
}
}  // namespace

CompositeWitness witness_from_json(const std::string& text) {
    return witness_from_jsonobj(parse_or_throw(text));
}

std::string curve_to_json(const CurveSpec& c) {
    Json j;
    j["family"] = family_name(c.family);
    j["d"] = c.d;
    j["f"] = poly_to_json(c.f);
    j["genus"] = c.genus;
    Json pts = Json::array();
    for (const auto& p : c.points) {
        if (p.kind == CurvePoint::Kind::Infinity)
            pts.push_back(Json::array({"inf", p.inf_sign >= 0 ? "+" : "-"}));
        else
            pts.push_back(Json::array({p.x.to_string(), p.y.to_string()}));
    }
    j["points"] = std::move(pts);
    if (c.expected) {
        Json e;
        e["N"] = c.expected->points;
        e["R"] = c.expected->rank;
        j["expected"] = std::move(e);
    }
    j["witness"] = parse_or_throw(witness_to_json(c.witness));
    return j.dump(2) + "\n";
}

CurveSpec curve_from_json(const std::string& text) {
    Json j = parse_or_throw(text);
    CurveSpec c;
    c.family = family_from_name(field_as<std::string>(j, "family"));
    c.d = field_as<int>(j, "d");
    c.f = poly_from_json(j.at("f"));
    c.genus = field_as<int>(j, "genus");
    if (!j.contains("points") || !j.at("points").is_array())
        throw ParseError("curve is missing the points array");
    for (const auto& p : j.at("points")) {
        if (!p.is_array() || p.size() != 2) throw ParseError("curve point must be a pair");
        std::string x = p.at(0).get<std::string>();
        std::string y = p.at(1).get<std::string>();
        if (x == "inf")
            c.points.push_back(CurvePoint::infinity(y == "-" ? -1 : 1));
        else
            c.points.push_back(CurvePoint::affine(Scalar::from_string(x), Scalar::from_string(y)));
    }
    if (j.contains("expected")) {
        Expected e;
        e.points = field_as<long>(j.at("expected"), "N");
        e.rank = field_as<long>(j.at("expected"), "R");
        e.genus = c.genus;
        c.expected = e;
    }
    if (!j.contains("witness")) throw ParseError("curve is missing the witness object");
    c.witness = witness_from_jsonobj(j.at("witness"));
    return c;
}

std::string verification_report_to_json(const CurveSpec& c, const VerificationReport& rep) {
    Json j;
    j["family"] = family_name(c.family);
    j["d"] = c.d;
    j["all_pass"] = rep.all_pass;
    Json checks = Json::array();
    for (const auto& ck : rep.checks) {
        Json e;
        e["name"] = ck.name;
        e["pass"] = ck.pass;
        if (!ck.detail.empty()) e["detail"] = ck.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    Json per_point = Json::array();
    for (bool ok : rep.point_on_curve) per_point.push_back(ok);
    j["point_on_curve"] = std::move(per_point);
    j["point_count"] = rep.point_count;
    Json exp;
    exp["N"] = rep.expected_points;
    exp["R"] = rep.expected_rank;
    j["expected"] = std::move(exp);
    j["rank_note"] = rep.rank_note;
    return j.dump(2) + "\n";
}

std::string witness_report_to_json(const WitnessReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["identity_pass"] = rep.identity_pass;
    j["points_pass"] = rep.points_pass;
    if (rep.offending_coeff >= 0) j["offending_coeff"] = rep.offending_coeff;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j.dump(2) + "\n";
}

std::string relation_report_to_json(const RelationReport& rep) {
    Json j;
    j["classes"] = rep.class_labels;
    j["primes"] = rep.primes;
    j["bound"] = rep.bound;
    j["support"] = rep.support;
    j["found_relations"] = rep.found;
    j["claimed_relations"] = rep.claimed;
    j["verdict"] = rep.verdict();
    j["ops"] = rep.ops;
    j["scope_note"] = rep.scope_note;
    return j.dump(2) + "\n";
}

std::string igusa_to_json(const IgusaTuple& t) {
    Json j;
    j["I2"] = t.I2.to_string();
    j["I4"] = t.I4.to_string();
    j["I6"] = t.I6.to_string();
    j["I10"] = t.I10.to_string();
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failure on " + path.string());
    return text;
}

void write_text_file_atomic(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::path dir = path.parent_path();
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << text;
        out.flush();
        if (!out) throw IoError("write failure on " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("atomic rename to " + path.string() + " failed: " + ec.message());
}

}  // namespace compcurve
