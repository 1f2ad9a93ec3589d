#ifndef DIAGALG_IO_HPP
#define DIAGALG_IO_HPP

#include "diagalg/bipoly.hpp"
#include "diagalg/holonomic.hpp"
#include "diagalg/series.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace diagalg {

using Json = nlohmann::ordered_json;

// Canonical text form: ordered list of [i, j, "num/den"] triples, exponents
// ascending lexicographically.
inline Json bipoly_to_triples(const BiPoly& p)
{
    Json arr = Json::array();
    for (int i = 0; i <= p.degree1(); ++i)
        for (int j = 0; j <= p.degree2(); ++j) {
            Rational c = p.coeff(i, j);
            if (c != 0) arr.push_back(Json::array({i, j, rat_to_string(c)}));
        }
    return arr;
}

inline BiPoly bipoly_from_triples(const Json& arr, Var v1, Var v2)
{
    BiPoly p = BiPoly::zero(v1, v2);
    for (const auto& triple : arr) {
        int i = triple.at(0).get<int>();
        int j = triple.at(1).get<int>();
        Rational c = rat_from_string(triple.at(2).get<std::string>());
        p = p + BiPoly::monomial(v1, v2, i, j, c);
    }
    return p;
}

inline Json series_to_json(const TruncSeries& s)
{
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rat_to_string(c));
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline Json unipoly_to_coeff_list(const UniPoly& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(rat_to_string(c));
    return out;
}

inline UniPoly unipoly_from_coeff_list(const Json& arr, Var v)
{
    std::vector<Rational> cs;
    for (const auto& c : arr) {
        if (c.is_string())
            cs.push_back(rat_from_string(c.get<std::string>()));
        else
            cs.push_back(Rational(Int(c.get<long long>())));
    }
    return UniPoly(v, std::move(cs));
}

inline Json shift_operator_to_json(const ShiftOperator& rec)
{
    Json coeffs = Json::array();
    for (const auto& c : rec.coeffs) coeffs.push_back(unipoly_to_coeff_list(c));
    return Json{{"convention", "backward"}, {"offset", rec.offset}, {"coeffs", coeffs}};
}

// Accepts both backward and forward conventions; forward input is converted
// to the backward normal form on load.
inline ShiftOperator shift_operator_from_json(const Json& j)
{
    std::string conv = j.at("convention").get<std::string>();
    long offset = j.at("offset").get<long>();
    std::vector<UniPoly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(unipoly_from_coeff_list(c, Var::n));
    if (coeffs.empty()) throw std::invalid_argument("recurrence file has no coefficients");
    if (conv == "backward") return ShiftOperator{std::move(coeffs), offset};
    if (conv == "forward") return forward_to_backward(coeffs, offset);
    throw std::invalid_argument("unknown recurrence convention: " + conv);
}

inline Json diff_operator_to_json(const DiffOperator& op)
{
    Json coeffs = Json::array();
    for (const auto& c : op.coeffs) coeffs.push_back(unipoly_to_coeff_list(c));
    return Json{{"var", "t"}, {"order", op.order()}, {"coeffs", coeffs}};
}

inline DiffOperator diff_operator_from_json(const Json& j)
{
    std::vector<UniPoly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(unipoly_from_coeff_list(c, Var::t));
    if (coeffs.empty() || coeffs.back().is_zero())
        throw std::invalid_argument("differential operator needs a nonzero leading coefficient");
    return DiffOperator{std::move(coeffs)};
}

} // namespace diagalg

#endif
