#pragma once

#include <json.hpp>

#include "hsym/classifier.hpp"

namespace hsym {

using Json = nlohmann::ordered_json;

inline Json to_json(const AbelianPresentation& p)
{
    Json j = Json::array();
    for (auto f : p.factors) j.push_back(f);
    return j;
}

inline Json to_json(const Character& c)
{
    Json j = Json::array();
    for (auto x : c.c) j.push_back(x);
    return j;
}

inline Json to_json(const ActionData& I)
{
    Json j;
    j["degree"] = I.d;
    j["variables"] = I.n;
    j["invariant_factors"] = to_json(I.pres);
    Json w = Json::array();
    for (const auto& ch : I.weights) w.push_back(to_json(ch));
    j["weights"] = w;
    j["target"] = to_json(I.target);
    return j;
}

inline ActionData action_from_json(const Json& j)
{
    int d = j.at("degree").get<int>();
    int n = j.at("variables").get<int>();
    std::vector<std::int64_t> factors = j.at("invariant_factors").get<std::vector<std::int64_t>>();
    std::vector<Character> weights;
    for (const auto& w : j.at("weights")) weights.push_back(Character{w.get<std::vector<std::int64_t>>()});
    Character target{j.at("target").get<std::vector<std::int64_t>>()};
    return make_action_data(d, n, AbelianPresentation{factors}, std::move(weights), std::move(target));
}

inline Json monomial_to_json(const Monomial& m, int n)
{
    Json j = Json::array();
    for (int i = 0; i < n; ++i) j.push_back(static_cast<int>(m.e[static_cast<std::size_t>(i)]));
    return j;
}

inline Json to_json(const Support& s)
{
    Json j = Json::array();
    for (const auto& m : s.mons) j.push_back(monomial_to_json(m, s.n));
    return j;
}

// Accepts exponent arrays or strings like "x1^2*x2".
inline Support support_from_json(int d, int n, const Json& j)
{
    std::vector<Monomial> ms;
    for (const auto& e : j) {
        if (e.is_string()) {
            ms.push_back(parse_monomial(e.get<std::string>(), n));
        } else {
            Monomial m;
            auto v = e.get<std::vector<int>>();
            if (static_cast<int>(v.size()) != n) throw std::invalid_argument("exponent array length != variables");
            for (int i = 0; i < n; ++i) m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v[static_cast<std::size_t>(i)]);
            ms.push_back(m);
        }
    }
    return Support::of(d, n, std::move(ms));
}

inline Json to_json(const SmoothnessCertificate& c, const Support& s)
{
    Json j;
    j["prime"] = c.prime;
    Json coeffs;
    for (int i = 0; i < s.size(); ++i)
        coeffs[monomial_to_string(s.mons[static_cast<std::size_t>(i)], s.n)] = c.coefficients[static_cast<std::size_t>(i)];
    j["coefficients"] = coeffs;
    Json pp;
    for (int i = 0; i < s.n; ++i)
        if (c.pure_powers[static_cast<std::size_t>(i)])
            pp["x" + std::to_string(i + 1)] = *c.pure_powers[static_cast<std::size_t>(i)];
    j["pure_powers"] = pp;
    return j;
}

inline SparsePoly sparse_poly_from_json(const Json& j)
{
    int d = j.at("degree").get<int>();
    int n = j.at("variables").get<int>();
    std::vector<std::pair<Monomial, std::int64_t>> ts;
    for (const auto& [k, v] : j.at("terms").items())
        ts.emplace_back(parse_monomial(k, n), v.get<std::int64_t>());
    return SparsePoly::of(d, n, std::move(ts));
}

inline Json to_json(const SparsePoly& p)
{
    Json j;
    j["degree"] = p.d;
    j["variables"] = p.n;
    Json terms;
    for (const auto& [m, c] : p.terms) terms[monomial_to_string(m, p.n)] = c;
    j["terms"] = terms;
    return j;
}

inline Json to_json(const SimpleDecomposition& dec)
{
    Json blocks = Json::array();
    for (const auto& b : dec.blocks) {
        Json jb;
        jb["type"] = std::string(1, b.type);
        Json vars = Json::array();
        for (int v : b.vars) vars.push_back(v + 1);
        jb["vars"] = vars;
        if (b.type == 'Y') {
            jb["a"] = b.a;
            jb["b"] = b.b;
        }
        blocks.push_back(jb);
    }
    return Json{{"blocks", blocks}};
}

inline Json to_json(const ChainInvariants& ci)
{
    Json j;
    j["s"] = ci.s;
    j["c"] = ci.c;
    Json w = Json::array();
    for (int v : ci.witness) w.push_back(v + 1);
    j["witness"] = w;
    return j;
}

inline Json to_json(const ClassificationRecord& r)
{
    Json j;
    j["key"] = r.key;
    j["structure"] = to_json(r.structure);
    j["order"] = r.structure.order();
    j["action"] = to_json(r.data);
    j["support"] = to_json(r.support);
    Json ss = Json::array();
    for (const auto& m : r.support.mons) ss.push_back(monomial_to_string(m, r.support.n));
    j["support_str"] = ss;
    j["certificate"] = to_json(r.certificate, r.support);
    j["simple"] = r.simple ? to_json(*r.simple) : Json(nullptr);
    j["chain"] = to_json(r.chain);
    j["maximal"] = r.maximality == MaximalityResult::Verdict::Maximal;
    return j;
}

inline Json to_json(const VerifyReport& rep, const Support& s)
{
    Json j;
    j["label"] = rep.label;
    j["structure"] = to_json(rep.structure);
    j["support_size"] = rep.support_size;
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["pass"] = rep.all_pass();
    if (rep.certificate) j["certificate"] = to_json(*rep.certificate, s);
    j["chain"] = to_json(rep.chain);
    return j;
}

} // namespace hsym
