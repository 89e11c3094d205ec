#include "igusa/machine_io.hpp"

#include <json.hpp>

#include "igusa/errors.hpp"

namespace igusa {

using nlohmann::json;

std::string to_machine(const ZetaFunction& z) {
    if (!z.normalized) throw Error("machine output requires a normalized zeta function");
    json doc;
    doc["prime"] = z.prime.get_str();
    doc["prefactor"] = z.prefactor_exponent;
    json atoms = json::array();
    for (const auto& a : z.atoms) {
        atoms.push_back({{"num", a.coeff_num.get_str()},
                         {"den_exp", a.coeff_den_exp},
                         {"t_power", a.t_power},
                         {"geom_weight", a.geom_weight}});
    }
    doc["atoms"] = std::move(atoms);
    json num = json::array(), den = json::array();
    for (const auto& c : z.normalized->num) num.push_back(c.get_str());
    for (const auto& c : z.normalized->den) den.push_back(c.get_str());
    doc["numerator"] = std::move(num);
    doc["denominator"] = std::move(den);
    doc["scale"] = z.normalized->scale_exp;
    return doc.dump(2) + "\n";
}

ZetaFunction from_machine(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("bad machine document: ") + e.what());
    }
    try {
        ZetaFunction z;
        z.prime = BigInt(doc.at("prime").get<std::string>());
        z.prefactor_exponent = doc.at("prefactor").get<unsigned long>();
        for (const auto& a : doc.at("atoms")) {
            ZetaAtom atom;
            atom.coeff_num = BigInt(a.at("num").get<std::string>());
            atom.coeff_den_exp = a.at("den_exp").get<unsigned long>();
            atom.t_power = a.at("t_power").get<unsigned long>();
            atom.geom_weight = a.at("geom_weight").get<unsigned long>();
            z.atoms.push_back(std::move(atom));
        }
        NormalizedFraction f;
        for (const auto& c : doc.at("numerator")) f.num.emplace_back(c.get<std::string>());
        for (const auto& c : doc.at("denominator")) f.den.emplace_back(c.get<std::string>());
        f.scale_exp = doc.at("scale").get<unsigned long>();
        z.normalized = std::move(f);
        return z;
    } catch (const json::exception& e) {
        throw Error(std::string("bad machine document: ") + e.what());
    }
}

}  // namespace igusa
