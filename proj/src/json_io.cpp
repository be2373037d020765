#include "cycseq/json_io.hpp"

namespace cycseq {

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(c.get_str());
    return arr;
}

IntPoly poly_from_json(const json& j) {
    if (!j.is_array())
        throw Error("polynomial JSON must be an array of coefficients");
    std::vector<Int> c;
    c.reserve(j.size());
    for (const auto& v : j) {
        if (v.is_string())
            c.emplace_back(v.get<std::string>());
        else if (v.is_number_integer())
            c.emplace_back(static_cast<long>(v.get<long long>()));
        else
            throw Error("polynomial coefficients must be integers or strings");
    }
    return IntPoly(std::move(c));
}

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
    if (j.is_string())
        return rat_from_string(j.get<std::string>());
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<long long>()));
    throw Error("rational JSON must be a string or integer");
}

json increments_to_json(const IncrementSeq& s) {
    json j;
    j["exponents"] = s.exponents;
    j["modulus"] = s.modulus ? json(*s.modulus) : json(nullptr);
    j["cyclic"] = s.cyclic;
    return j;
}

IncrementSeq increments_from_json(const json& j) {
    IncrementSeq s;
    if (!j.is_object() || !j.contains("exponents"))
        throw Error("increment JSON must contain \"exponents\"");
    s.exponents = j.at("exponents").get<std::vector<long>>();
    if (j.contains("modulus") && !j.at("modulus").is_null())
        s.modulus = j.at("modulus").get<unsigned>();
    s.cyclic = j.value("cyclic", true);
    return s;
}

json cyc_to_json(const CycElement& e) {
    json j;
    j["n"] = e.modulus();
    j["residue"] = poly_to_json(e.residue());
    return j;
}

bool values_all_rational(const json& j) {
    if (!j.is_array())
        throw Error("values JSON must be an array");
    for (const auto& v : j)
        if (!(v.is_string() || v.is_number_integer()))
            return false;
    return true;
}

std::vector<Rat> values_rat_from_json(const json& j) {
    if (!j.is_array())
        throw Error("values JSON must be an array");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& v : j)
        out.push_back(rat_from_json(v));
    return out;
}

std::vector<std::complex<double>> values_complex_from_json(const json& j) {
    if (!j.is_array())
        throw Error("values JSON must be an array");
    std::vector<std::complex<double>> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (v.is_array()) {
            if (v.size() != 2)
                throw Error("complex entries are [re, im] pairs");
            out.emplace_back(v[0].get<double>(), v[1].get<double>());
        } else if (v.is_number()) {
            out.emplace_back(v.get<double>(), 0.0);
        } else if (v.is_string()) {
            out.emplace_back(rat_from_string(v.get<std::string>()).get_d(), 0.0);
        } else {
            throw Error("unsupported value entry in sequence");
        }
    }
    return out;
}

json values_to_json(const std::vector<Rat>& values) {
    json arr = json::array();
    for (const auto& v : values)
        arr.push_back(rat_to_string(v));
    return arr;
}

json values_to_json(const std::vector<Int>& values) {
    json arr = json::array();
    for (const auto& v : values)
        arr.push_back(v.get_str());
    return arr;
}

} // namespace cycseq
