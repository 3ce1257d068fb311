// Command-line surface: catalog verification, full classification runs,
// smoothness checks, and invariant reports. Exit codes: 0 success,
// 1 verified-negative, 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hsym/serialize.hpp"
#include "hsym/version.hpp"

using namespace hsym;

namespace {

Json base_report(const std::string& command, std::uint64_t seed)
{
    Json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["seed"] = seed;
    return j;
}

void emit(const Json& j, const std::string& out_path)
{
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

std::string factors_str(const AbelianPresentation& p)
{
    if (p.factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) s += " x ";
        s += "C" + std::to_string(p.factors[i]);
    }
    return s;
}

int cmd_verify(const std::string& label, const std::string& in_path, std::vector<int> primes, int trials,
               std::uint64_t seed, const std::string& out_path)
{
    VerifySpec spec;
    try {
        if (!label.empty()) {
            const CatalogCase& c = catalog_case(label);
            spec.label = label;
            spec.data = catalog_action(c);
            spec.claimed_structure = normalize_claimed_structure(c.claimed_orders);
            spec.claimed_support = parse_support(catalog_degree(c), spec.data.n, c.claimed_support);
        } else {
            std::ifstream f(in_path);
            if (!f) throw std::invalid_argument("cannot open " + in_path);
            Json j = Json::parse(f);
            spec.label = j.value("label", in_path);
            int d = j.at("degree").get<int>();
            int n = j.at("variables").get<int>();
            if (j.contains("claimed_support"))
                spec.claimed_support = support_from_json(d, n, j.at("claimed_support"));
            if (j.contains("action")) {
                spec.data = action_from_json(j.at("action"));
            } else if (j.contains("generators")) {
                if (!spec.claimed_support)
                    throw std::invalid_argument("generator input needs claimed_support to fix the target weight");
                spec.data = action_from_generators(d, parse_generator_string(j.at("generators").get<std::string>()),
                                                   *spec.claimed_support);
            } else {
                throw std::invalid_argument("file needs either \"action\" or \"generators\"");
            }
            if (j.contains("claimed_structure"))
                spec.claimed_structure =
                    normalize_claimed_structure(j.at("claimed_structure").get<std::vector<std::int64_t>>());
        }
    } catch (const std::exception& e) {
        std::cerr << "hsym verify: " << e.what() << "\n";
        return 2;
    }

    VerifyReport rep = run_verification(spec, primes, trials, {101, 211, 307}, seed);
    Support s = invariant_monomials(spec.data);

    Json j = base_report("verify", seed);
    j["primes"] = primes;
    j["trials"] = trials;
    j["report"] = to_json(rep, s);
    emit(j, out_path);

    std::cerr << rep.label << ": structure " << factors_str(rep.structure) << ", |S|=" << rep.support_size << "\n";
    for (const auto& c : rep.checks)
        std::cerr << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
    return rep.all_pass() ? 0 : 1;
}

int cmd_classify(int d, int n, std::vector<int> primes, int trials, std::uint64_t seed, int jobs, bool audit,
                 const std::string& out_path)
{
    const bool acceptance_grade = (d == 3 && n == 6) || (d == 4 && n == 4);
    if (!acceptance_grade)
        std::cerr << "warning: (d, n) = (" << d << ", " << n
                  << ") is outside the verified targets (3,6) and (4,4); results carry a bounded-search caveat\n";

    ClassifyConfig cfg;
    cfg.d = d;
    cfg.n = n;
    cfg.primes = primes;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.jobs = jobs;
    cfg.audit = audit;

    ClassifyResult res;
    try {
        res = classify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "hsym classify: " << e.what() << "\n";
        return 2;
    }

    Json j = base_report("classify", seed);
    // worker count deliberately not echoed: identical inputs and seed give
    // byte-identical reports regardless of it
    j["config"] = Json{{"degree", d},       {"variables", n}, {"primes", primes}, {"trials", trials},
                       {"audit", audit},    {"smooth_primes", Json{101, 211, 307}},
                       {"acceptance_grade", acceptance_grade}};
    Json recs = Json::array();
    for (const auto& r : res.records) recs.push_back(to_json(r));
    j["records"] = recs;
    Json inc = Json::array();
    for (const auto& s : res.inconclusive) inc.push_back(to_json(s));
    j["side_report"] = Json{{"inconclusive", inc}, {"unresolved", res.unresolved}};
    j["audit"] = Json{{"checks", res.audit.checks}, {"violations", res.audit.violations}};
    j["stats"] = Json{{"states_visited", res.states_visited}, {"large_candidates", res.large_candidates}};
    emit(j, out_path);

    int non_simple = 0;
    for (const auto& r : res.records)
        if (!r.simple) ++non_simple;
    std::cerr << "classify d=" << d << " n=" << n << ": " << res.records.size() << " maximal classes, " << non_simple
              << " non-simple\n";
    std::cerr << "  #   order  structure               |S|  (s,c)  simple\n";
    int k = 0;
    for (const auto& r : res.records) {
        std::string row = "  " + std::to_string(++k);
        row.resize(4, ' ');
        std::string ord = std::to_string(r.structure.order());
        row += "  " + std::string(5 - std::min<std::size_t>(5, ord.size()), ' ') + ord;
        std::string st = factors_str(r.structure);
        if (st.size() < 22) st.resize(22, ' ');
        row += "  " + st;
        row += "  " + std::to_string(r.support.size());
        row += "   (" + std::to_string(r.chain.s) + "," + std::to_string(r.chain.c) + ")";
        row += r.simple ? "   yes" : "   no";
        std::cerr << row << "\n";
    }
    if (!res.audit.violations.empty()) {
        std::cerr << "AUDIT VIOLATIONS:\n";
        for (const auto& v : res.audit.violations) std::cerr << "  " << v << "\n";
    }
    return res.inconclusive.empty() && res.unresolved.empty() ? 0 : 1;
}

int cmd_smooth(const std::string& in_path, std::vector<std::uint32_t> primes, const std::string& out_path,
               std::uint64_t seed)
{
    SparsePoly p;
    try {
        std::ifstream f(in_path);
        if (!f) throw std::invalid_argument("cannot open " + in_path);
        p = sparse_poly_from_json(Json::parse(f));
    } catch (const std::exception& e) {
        std::cerr << "hsym smooth: " << e.what() << "\n";
        return 2;
    }

    Json j = base_report("smooth", seed);
    Json jp = Json::array();
    for (auto prime : primes) jp.push_back(prime);
    j["primes"] = jp;
    j["input"] = to_json(p);
    Json attempts = Json::array();
    bool smooth = false;
    std::uint32_t used = 0;
    SmoothnessReport rep;
    for (std::uint32_t prime : primes) {
        Json a;
        a["prime"] = prime;
        try {
            rep = is_smooth_modp(p, prime);
            a["smooth"] = rep.smooth;
            if (rep.smooth) {
                smooth = true;
                used = prime;
            }
        } catch (const std::exception& e) {
            a["error"] = e.what();
        }
        attempts.push_back(a);
        if (smooth) break;
    }
    j["attempts"] = attempts;
    j["smooth"] = smooth;
    if (smooth) {
        SmoothnessCertificate cert;
        cert.prime = used;
        for (const auto& [m, c] : p.terms) cert.coefficients.push_back(c);
        cert.pure_powers = rep.pure_powers;
        j["certificate"] = to_json(cert, p.support());
    }
    emit(j, out_path);
    std::cerr << (smooth ? "smooth (certificate mod " + std::to_string(used) + ")" : "no certificate") << "\n";
    return smooth ? 0 : 1;
}

int cmd_invariants(const std::string& in_path, const std::vector<std::string>& mset_queries,
                   const std::string& out_path, std::uint64_t seed)
{
    ActionData I;
    try {
        std::ifstream f(in_path);
        if (!f) throw std::invalid_argument("cannot open " + in_path);
        Json j = Json::parse(f);
        if (j.contains("action")) I = action_from_json(j.at("action"));
        else I = action_from_json(j);
    } catch (const std::exception& e) {
        std::cerr << "hsym invariants: " << e.what() << "\n";
        return 2;
    }

    Support s = invariant_monomials(I);
    DirectedGraph e = edge_graph(s);

    Json j = base_report("invariants", seed);
    j["action"] = to_json(I);
    j["support"] = to_json(s);
    Json ss = Json::array();
    for (const auto& m : s.mons) ss.push_back(monomial_to_string(m, s.n));
    j["support_str"] = ss;
    Json arrows = Json::array();
    for (const auto& [a, b] : e.arrows) arrows.push_back(Json{a + 1, b + 1});
    j["arrows"] = arrows;
    try {
        j["chain"] = to_json(chain_invariants_core(e, lambda_classes(I)));
    } catch (const NoFrameEdgeError& err) {
        j["chain"] = Json{{"error", err.what()}};
    }

    Json msets = Json::array();
    for (const auto& q : mset_queries) {
        auto semi = q.find(';');
        auto parse_list = [&](const std::string& part) {
            std::vector<int> v;
            std::string cur;
            for (char c : part + ",") {
                if (c == ',') {
                    if (!cur.empty()) v.push_back(std::stoi(cur) - 1);
                    cur.clear();
                } else
                    cur += c;
            }
            return v;
        };
        std::vector<int> a = parse_list(q.substr(0, semi));
        std::vector<int> b = semi == std::string::npos ? std::vector<int>{} : parse_list(q.substr(semi + 1));
        Json one;
        one["query"] = q;
        try {
            Support hits = m_set(s, a, b);
            one["monomials"] = to_json(hits);
            one["empty"] = hits.empty();
        } catch (const std::exception& err) {
            one["error"] = err.what();
        }
        msets.push_back(one);
    }
    j["msets"] = msets;
    emit(j, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact classification engine for diagonal abelian symmetry groups of smooth hypersurfaces"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string label, in_path, out_path;
    std::vector<int> primes = {2, 3, 5, 7, 11, 13};
    std::vector<std::uint32_t> smooth_primes = {101, 211, 307};
    int trials = kDefaultTrials;
    std::uint64_t seed = 0;
    int d = 3, n = 6, jobs = 1;
    bool no_audit = false;
    std::vector<std::string> mset_queries;

    auto* verify = app.add_subcommand("verify", "verify a catalog case or a data file");
    verify->add_option("label", label, "catalog label (main-1..main-8, main2-1..main2-5)");
    verify->add_option("--in", in_path, "data file (JSON)");
    verify->add_option("--primes", primes, "maximality prime bound");
    verify->add_option("--trials", trials, "sampling trials per prime");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--out", out_path, "write the JSON report here");

    auto* classify_cmd = app.add_subcommand("classify", "re-derive the maximal classes for (d, n)");
    classify_cmd->add_option("-d,--degree", d, "degree")->required();
    classify_cmd->add_option("-n,--vars", n, "number of variables")->required();
    classify_cmd->add_option("--primes", primes, "maximality prime bound");
    classify_cmd->add_option("--trials", trials, "sampling trials per prime");
    classify_cmd->add_option("--seed", seed, "RNG seed");
    classify_cmd->add_option("--jobs", jobs, "worker threads");
    classify_cmd->add_flag("--no-audit", no_audit, "skip the structural audit");
    classify_cmd->add_option("--out", out_path, "write the JSON report here");

    auto* smooth = app.add_subcommand("smooth", "smoothness certificate for a polynomial file");
    smooth->add_option("--in", in_path, "polynomial file (JSON)")->required();
    smooth->add_option("--primes", smooth_primes, "primes to try");
    smooth->add_option("--out", out_path, "write the JSON report here");

    auto* invariants = app.add_subcommand("invariants", "support, arrows, chain invariants, M-set queries");
    invariants->add_option("--in", in_path, "action data file (JSON)")->required();
    invariants->add_option("--mset", mset_queries, "M-set query \"a1,a2;b1\" (1-based)");
    invariants->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (label.empty() && in_path.empty()) {
                std::cerr << "hsym verify: need a catalog label or --in file\n";
                return 2;
            }
            return cmd_verify(label, in_path, primes, trials, seed, out_path);
        }
        if (classify_cmd->parsed()) return cmd_classify(d, n, primes, trials, seed, jobs, !no_audit, out_path);
        if (smooth->parsed()) return cmd_smooth(in_path, smooth_primes, out_path, seed);
        if (invariants->parsed()) return cmd_invariants(in_path, mset_queries, out_path, seed);
    } catch (const std::exception& e) {
        std::cerr << "hsym: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
