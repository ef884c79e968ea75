#include "vperiod/report_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vperiod {

Json cycnum_to_json(const CycNum& a) {
    Json j;
    j["m"] = a.modulus();
    Json coeffs = Json::array();
    for (const Rat& x : a.coeffs()) coeffs.push_back(rat_to_string(x));
    j["coeffs"] = std::move(coeffs);
    return j;
}

CycNum cycnum_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
        throw std::invalid_argument("CycNum: expected {\"m\":..., \"coeffs\":[...]}");
    const std::uint64_t m = j.at("m").get<std::uint64_t>();
    std::vector<Rat> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(rat_from_string(s.get<std::string>()));
    return CycNum::from_coeffs(m, std::move(coeffs));
}

Json subfield_to_json(const SubfieldDesc& d) {
    Json j;
    j["m"] = d.m;
    j["H"] = d.H;
    j["degree"] = d.degree;
    return j;
}

Json bound_to_json(const BoundReport& b) {
    Json j;
    j["m"] = b.m;
    j["n"] = b.n;
    j["R"] = int_to_string(b.R);
    Json factors = Json::object();
    for (const auto& [p, e] : b.factors) factors[std::to_string(p)] = e;
    j["factors"] = std::move(factors);
    return j;
}

Json period_to_json(const PeriodReport& p) {
    Json j;
    j["found"] = p.found;
    if (p.found) {
        j["N"] = p.N;
        j["r"] = p.r;
    }
    j["K"] = p.K;
    j["certification"] = to_string(p.certification);
    if (p.R) j["R"] = int_to_string(*p.R);
    if (p.s_ell) j["s_ell"] = int_to_string(*p.s_ell);
    if (p.ell) j["ell"] = *p.ell;
    if (p.bound_violation) j["bound_violation"] = true;
    return j;
}

Json zeroset_to_json(const ZeroSetDecomposition& z) {
    Json j;
    Json progs = Json::array();
    for (const auto& [start, step] : z.progressions) progs.push_back(Json::array({start, step}));
    j["progressions"] = std::move(progs);
    j["exceptional"] = z.exceptional;
    j["s"] = z.s;
    j["K"] = z.K;
    return j;
}

Json lrs_to_json(const Lrs& L) {
    Json j;
    j["version"] = 1;
    j["m"] = L.modulus();
    Json coeffs = Json::array(), initial = Json::array();
    for (const CycNum& c : L.coeffs()) coeffs.push_back(cycnum_to_json(c));
    for (const CycNum& a : L.initial()) initial.push_back(cycnum_to_json(a));
    j["coeffs"] = std::move(coeffs);
    j["initial"] = std::move(initial);
    return j;
}

Lrs lrs_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("Lrs: expected an object");
    if (!j.contains("version") || j.at("version").get<int>() != 1)
        throw std::invalid_argument("Lrs: unsupported or missing version (expected 1)");
    const std::uint64_t m = j.at("m").get<std::uint64_t>();
    std::vector<CycNum> coeffs, initial;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(cycnum_from_json(c));
        if (coeffs.back().modulus() != m)
            throw std::invalid_argument("Lrs: coefficient modulus differs from file modulus");
    }
    for (const auto& a : j.at("initial")) {
        initial.push_back(cycnum_from_json(a));
        if (initial.back().modulus() != m)
            throw std::invalid_argument("Lrs: initial-term modulus differs from file modulus");
    }
    return Lrs(m, std::move(coeffs), std::move(initial));
}

Lrs lrs_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open Lrs file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("Lrs file is not valid JSON: ") + e.what());
    }
    return lrs_from_json(j);
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [key, val] : j.items())
            flatten(val, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& val : j) flatten(val, prefix + "." + std::to_string(i++), out);
    } else if (j.is_string()) {
        out << prefix << "," << j.get<std::string>() << "\n";
    } else {
        out << prefix << "," << j.dump() << "\n";
    }
}

}  // namespace

std::string json_to_csv(const Json& payload) {
    std::ostringstream out;
    flatten(payload, "", out);
    return out.str();
}

}  // namespace vperiod
