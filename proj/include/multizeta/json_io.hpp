#pragma once

#include <complex>

#include "json.hpp"
#include "multizeta/cyclotomic.hpp"
#include "multizeta/padic.hpp"
#include "multizeta/rational.hpp"

namespace mz {

using json = nlohmann::json;

inline json to_json(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

inline Rational rational_from_json(const json& j) {
    Rational q(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
    q.canonicalize();
    return q;
}

inline json to_json(const CycNum& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
    return {{"N", x.field().N()}, {"coeffs", coeffs}};
}

inline CycNum cyc_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& e : j.at("coeffs")) c.push_back(rational_from_json(e));
    return CycNum(CycField::get(j.at("N").get<int>()), std::move(c));
}

inline json to_json(const PadicInt& x) {
    return {{"p", x.p()}, {"precision", x.precision()}, {"residue", std::to_string(x.residue())}, {"shift", x.shift()}};
}

inline PadicInt padic_from_json(const json& j) {
    return PadicInt(j.at("p").get<u64>(), j.at("precision").get<int>(), std::stoull(j.at("residue").get<std::string>()),
                    j.at("shift").get<int>());
}

inline json to_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace mz
