#pragma once

#include <condition_variable>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "hsym/catalog.hpp"
#include "hsym/chains.hpp"
#include "hsym/closure.hpp"
#include "hsym/audits.hpp"
#include "hsym/simplicity.hpp"
#include "hsym/smooth.hpp"

namespace hsym {

// Shared, seeded, thread-safe memo for largeness verdicts. The per-support
// seed is derived from the global seed and the support bytes, so verdicts do
// not depend on discovery order or worker count.
class CertifyCache {
  public:
    CertifyCache(int trials, std::vector<std::uint32_t> primes, std::uint64_t seed)
        : trials_(trials), primes_(std::move(primes)), seed_(seed)
    {
    }

    LargenessVerdict get(const Support& s)
    {
        std::string k = s.key();
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = memo_.find(k);
            if (it != memo_.end()) return it->second;
        }
        LargenessVerdict v = certify_large(s, trials_, primes_, seed_);
        std::lock_guard<std::mutex> lk(mu_);
        return memo_.emplace(std::move(k), std::move(v)).first->second;
    }

    int trials() const { return trials_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }
    std::uint64_t seed() const { return seed_; }

  private:
    int trials_;
    std::vector<std::uint32_t> primes_;
    std::uint64_t seed_;
    std::mutex mu_;
    std::unordered_map<std::string, LargenessVerdict> memo_;
};

// ---------------------------------------------------------------------------
// Maximality
// ---------------------------------------------------------------------------

struct MaximalityResult {
    enum class Verdict { Maximal, NonMaximal, Unresolved } verdict = Verdict::Maximal;

    struct Witness {
        int prime = 0;
        TorusVec extension;     // h with prime*h in G, h not in G
        Support large_class;    // the large h-weight class of S_I
        std::int64_t extended_order = 0;
    };
    std::optional<Witness> witness;
    std::vector<Support> unresolved_classes;

    bool maximal() const { return verdict == Verdict::Maximal; }
};

namespace detail {

inline TorusVec image_of(const ActionData& I, const std::vector<std::int64_t>& g)
{
    std::int64_t den = 1;
    for (auto f : I.pres.factors) den = lcm64(den, f);
    TorusVec v(I.n, den);
    for (int i = 0; i < I.n; ++i) {
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < I.pres.factors.size(); ++k)
            acc = posmod64(add64(acc, mul64(mul64(I.weights[static_cast<std::size_t>(i)].c[k], g[k]),
                                            den / I.pres.factors[k])),
                           den);
        v.num[static_cast<std::size_t>(i)] = acc;
    }
    return v.canon_mod_diag();
}

inline std::set<TorusVec> image_elements(const ActionData& I)
{
    std::set<TorusVec> out;
    if (I.pres.rank() == 0) {
        out.insert(TorusVec(I.n, 1));
        return out;
    }
    for_each_tuple(I.pres, [&](const std::vector<std::int64_t>& g) { out.insert(image_of(I, g)); });
    return out;
}

// h-weight partition of S: classes keyed by the reduced fraction of m . h.
inline std::vector<Support> weight_classes(const Support& s, const TorusVec& h)
{
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Monomial>> cls;
    std::vector<int> alpha(static_cast<std::size_t>(s.n));
    for (const auto& m : s.mons) {
        for (int i = 0; i < s.n; ++i) alpha[static_cast<std::size_t>(i)] = m.e[static_cast<std::size_t>(i)];
        cls[h.dot(alpha)].push_back(m);
    }
    std::vector<Support> out;
    for (auto& [w, ms] : cls) out.push_back(Support::of(s.d, s.n, std::move(ms)));
    return out;
}

inline bool every_vertex_has_out_arrow(const Support& s)
{
    DirectedGraph e = edge_graph(s);
    for (int i = 0; i < s.n; ++i)
        if (e.outdeg(i) == 0) return false;
    return true;
}

// Weight-equality classes of the coordinates under the group extended by h.
inline std::vector<int> lambda_classes_extended(const ActionData& I, const TorusVec& h)
{
    std::vector<int> base = lambda_classes(I);
    std::vector<int> ids(static_cast<std::size_t>(I.n), -1);
    int next = 0;
    for (int i = 0; i < I.n; ++i) {
        if (ids[static_cast<std::size_t>(i)] >= 0) continue;
        ids[static_cast<std::size_t>(i)] = next;
        for (int j = i + 1; j < I.n; ++j)
            if (ids[static_cast<std::size_t>(j)] < 0 && base[static_cast<std::size_t>(i)] == base[static_cast<std::size_t>(j)] &&
                h.num[static_cast<std::size_t>(i)] == h.num[static_cast<std::size_t>(j)])
                ids[static_cast<std::size_t>(j)] = next;
        ++next;
    }
    return ids;
}

} // namespace detail

enum class MaximalityPath { Auto, Frames, Division };

// Prime-index extension test. Candidates h satisfy p*h in G, h not in G for
// a prime p from the bound; for each, S_I splits into h-weight classes and a
// certified-Large class witnesses non-maximality. Classes missing a full set
// of out-arrows are provably small (M({i};0) empty) and are skipped.
//
// Enumeration path: over the stabilizer groups of the frames contained in
// E_{S_I} when those are few (a large class always contains a frame, so any
// witness h fixes one), otherwise directly over the |G| * p^{n-1} division
// points. Both paths yield identical verdicts.
inline MaximalityResult is_maximal(const ActionData& I, const std::vector<int>& primes, CertifyCache& certify,
                                   StructuralAudit* audit = nullptr, MaximalityPath path = MaximalityPath::Auto)
{
    Support s = invariant_monomials(I);
    if (!certify.get(s).large())
        throw std::invalid_argument("is_maximal: support is not certified large");

    std::set<TorusVec> members = detail::image_elements(I);
    const std::int64_t gorder = I.group_order();

    MaximalityResult res;

    auto handle_candidate = [&](const TorusVec& h, int prime) -> bool {
        for (const Support& cls : detail::weight_classes(s, h)) {
            if (!detail::every_vertex_has_out_arrow(cls)) continue;
            LargenessVerdict v = certify.get(cls);
            if (v.large()) {
                if (audit) audit_large_instance(cls, detail::lambda_classes_extended(I, h), *audit);
                res.verdict = MaximalityResult::Verdict::NonMaximal;
                res.witness = MaximalityResult::Witness{prime, h, cls, mul64(gorder, prime)};
                return true;
            }
            if (v.kind == LargenessVerdict::Kind::Inconclusive) res.unresolved_classes.push_back(cls);
        }
        return false;
    };

    DirectedGraph e = edge_graph(s);
    std::int64_t frame_count = 1;
    bool frames_ok = true;
    for (int i = 0; i < I.n && frames_ok; ++i) {
        int od = e.outdeg(i);
        if (od == 0) { frames_ok = false; break; }
        frame_count *= od;
        if (frame_count > 4096) frames_ok = false;
    }
    if (path == MaximalityPath::Division) frames_ok = false;
    if (path == MaximalityPath::Frames && !frames_ok)
        throw std::invalid_argument("frame path not available for this instance");

    if (frames_ok) {
        // Candidates from frame stabilizers, deduplicated and sorted.
        std::map<TorusVec, int> cands; // h -> prime index over G
        std::vector<int> pick(static_cast<std::size_t>(I.n), 0);
        std::vector<std::vector<int>> outs(static_cast<std::size_t>(I.n));
        for (int i = 0; i < I.n; ++i) outs[static_cast<std::size_t>(i)] = e.out(i);
        for (;;) {
            std::vector<Monomial> fm;
            for (int i = 0; i < I.n; ++i)
                fm.push_back(arrow_monomial(i, outs[static_cast<std::size_t>(i)][static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])], s.d));
            StabilizerResult st = equal_weight_stabilizer(Support::of(s.d, s.n, fm));
            for (const TorusVec& h : st.group.elements()) {
                if (members.count(h)) continue;
                // order of h modulo G
                int k = 1;
                TorusVec acc = h;
                while (!members.count(acc)) {
                    acc = acc.plus(h).canon_mod_diag();
                    ++k;
                }
                if (std::find(primes.begin(), primes.end(), k) != primes.end()) {
                    auto it = cands.find(h);
                    if (it == cands.end()) cands.emplace(h, k);
                }
            }
            int i = 0;
            while (i < I.n) {
                if (++pick[static_cast<std::size_t>(i)] < static_cast<int>(outs[static_cast<std::size_t>(i)].size())) break;
                pick[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == I.n) break;
        }
        for (const auto& [h, p] : cands)
            if (handle_candidate(h, p)) return res;
    } else {
        std::vector<TorusVec> mem_sorted(members.begin(), members.end());
        for (int p : primes) {
            for (const TorusVec& g : mem_sorted) {
                // h = (g + z)/p over integer vectors z with last coordinate 0.
                std::vector<std::int64_t> z(static_cast<std::size_t>(I.n), 0);
                for (;;) {
                    TorusVec h(I.n, mul64(g.den, p));
                    for (int i = 0; i < I.n; ++i)
                        h.num[static_cast<std::size_t>(i)] =
                            posmod64(add64(g.num[static_cast<std::size_t>(i)], mul64(z[static_cast<std::size_t>(i)], g.den)), h.den);
                    h.reduce();
                    h = h.canon_mod_diag();
                    if (!members.count(h) && handle_candidate(h, p)) return res;
                    int i = 0;
                    while (i < I.n - 1) {
                        if (++z[static_cast<std::size_t>(i)] < p) break;
                        z[static_cast<std::size_t>(i)] = 0;
                        ++i;
                    }
                    if (i == I.n - 1) break;
                }
            }
        }
    }

    res.verdict = res.unresolved_classes.empty() ? MaximalityResult::Verdict::Maximal
                                                 : MaximalityResult::Verdict::Unresolved;
    return res;
}

// ---------------------------------------------------------------------------
// Classification search
// ---------------------------------------------------------------------------

struct ClassifyConfig {
    int d = 3;
    int n = 6;
    std::vector<int> primes = {2, 3, 5, 7, 11, 13};
    int trials = kDefaultTrials;
    std::vector<std::uint32_t> smooth_primes = {kDefaultSmoothPrimes[0], kDefaultSmoothPrimes[1], kDefaultSmoothPrimes[2]};
    std::uint64_t seed = 0;
    int jobs = 1;
    bool audit = true;
    std::uint64_t frame_order_seed = 0;  // test hook: permutes seed order only
    bool frames_up_to_conjugacy = true;  // false: seed all n^n frames (validation)
};

struct ClassificationRecord {
    std::string key;
    ActionData data;
    Support support;
    AbelianPresentation structure;
    SmoothnessCertificate certificate;
    std::optional<SimpleDecomposition> simple;
    ChainInvariants chain;
    MaximalityResult::Verdict maximality = MaximalityResult::Verdict::Maximal;
};

struct ClassifyResult {
    std::vector<ClassificationRecord> records;      // maximal classes, key-sorted
    std::vector<Support> inconclusive;              // supports with Inconclusive largeness
    std::vector<std::string> unresolved;            // canonical keys with unresolved maximality
    StructuralAudit audit;
    long long states_visited = 0;
    long long large_candidates = 0;                 // distinct large closed pairs seen
    std::vector<std::pair<std::string, Support>> all_large; // key of closed large pairs (for tests)
};

inline ClassifyResult classify(const ClassifyConfig& cfg)
{
    const std::vector<Monomial> universe = enumerate_monomials(cfg.d, cfg.n);
    CertifyCache certify(cfg.trials, cfg.smooth_primes, cfg.seed);

    std::vector<std::vector<int>> frames = enumerate_frames(cfg.d, cfg.n, cfg.frames_up_to_conjugacy);
    if (cfg.frame_order_seed != 0) {
        SplitMix64 rng(cfg.frame_order_seed);
        for (std::size_t i = frames.size(); i > 1; --i)
            std::swap(frames[i - 1], frames[static_cast<std::size_t>(rng.next() % i)]);
    }

    std::mutex mu;
    std::condition_variable cv;
    std::deque<ClosedPair> queue;
    std::unordered_set<std::string> seen;
    std::vector<ClosedPair> large_pairs;
    std::vector<Support> inconclusive;
    long long visited = 0;
    int active = 0;
    bool done = false;

    {
        std::lock_guard<std::mutex> lk(mu);
        for (const auto& f : frames) {
            ClosedPair p = close_support(frame_support(f, cfg.d, cfg.n), universe);
            if (seen.insert(p.key()).second) queue.push_back(std::move(p));
        }
    }

    auto worker = [&]() {
        std::unique_lock<std::mutex> lk(mu);
        for (;;) {
            cv.wait(lk, [&] { return !queue.empty() || done || (queue.empty() && active == 0); });
            if (queue.empty()) {
                if (active == 0) {
                    done = true;
                    cv.notify_all();
                    return;
                }
                continue;
            }
            ClosedPair p = std::move(queue.front());
            queue.pop_front();
            ++active;
            ++visited;
            lk.unlock();

            LargenessVerdict v = certify.get(p.support);
            std::vector<ClosedPair> children;
            bool is_large = v.large();
            if (!is_large && p.support.size() < static_cast<int>(universe.size())) {
                for (const auto& m : universe)
                    if (!p.support.contains(m)) children.push_back(extend_pair(p, m, universe));
            }

            lk.lock();
            if (is_large) {
                large_pairs.push_back(p);
            } else {
                if (v.kind == LargenessVerdict::Kind::Inconclusive) inconclusive.push_back(p.support);
                for (auto& c : children)
                    if (seen.insert(c.key()).second) queue.push_back(std::move(c));
            }
            --active;
            cv.notify_all();
        }
    };

    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Deterministic post-pass: sort by support key, deduplicate by canonical
    // class key, then decide maximality once per class.
    std::sort(large_pairs.begin(), large_pairs.end(),
              [](const ClosedPair& a, const ClosedPair& b) { return a.key() < b.key(); });

    ClassifyResult out;
    out.states_visited = visited;
    out.inconclusive = std::move(inconclusive);
    std::sort(out.inconclusive.begin(), out.inconclusive.end(),
              [](const Support& a, const Support& b) { return a.key() < b.key(); });

    std::map<std::string, ClosedPair> by_class;
    for (const auto& p : large_pairs) {
        ClosureOutcome co = closure_outcome(p);
        std::string key = canonical_form(co.data);
        out.all_large.emplace_back(key, p.support);
        if (cfg.audit) audit_large_instance(co.data, out.audit);
        by_class.emplace(key, p); // first (smallest support key) representative wins
    }
    out.large_candidates = static_cast<long long>(by_class.size());

    for (const auto& [key, pair] : by_class) {
        ClosureOutcome co = closure_outcome(pair);
        MaximalityResult mr = is_maximal(co.data, cfg.primes, certify, cfg.audit ? &out.audit : nullptr);
        if (mr.verdict == MaximalityResult::Verdict::Unresolved) {
            out.unresolved.push_back(key);
            continue;
        }
        if (mr.verdict != MaximalityResult::Verdict::Maximal) continue;

        ClassificationRecord rec;
        rec.key = key;
        rec.data = co.data;
        rec.support = co.support;
        rec.structure = group_structure(co.data);
        LargenessVerdict v = certify.get(co.support);
        if (v.certificate) rec.certificate = *v.certificate;
        rec.simple = find_simple_decomposition(co.support);
        rec.chain = chain_invariants_core(edge_graph(co.support), lambda_classes(co.data));
        rec.maximality = mr.verdict;
        out.records.push_back(std::move(rec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog verification
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string label;
    std::vector<CheckResult> checks;
    std::optional<SmoothnessCertificate> certificate;
    ChainInvariants chain;
    AbelianPresentation structure;
    int support_size = 0;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifySpec {
    ActionData data;
    std::optional<AbelianPresentation> claimed_structure;
    std::optional<Support> claimed_support;
    std::string label;
};

inline VerifyReport run_verification(const VerifySpec& spec, const std::vector<int>& primes, int trials,
                                     const std::vector<std::uint32_t>& smooth_primes, std::uint64_t seed)
{
    VerifyReport rep;
    rep.label = spec.label;
    CertifyCache certify(trials, smooth_primes, seed);
    const ActionData& I = spec.data;

    AbelianPresentation st = group_structure(I);
    rep.structure = st;
    if (spec.claimed_structure) {
        bool ok = st == *spec.claimed_structure;
        std::string want, got;
        for (auto f : spec.claimed_structure->factors) want += std::to_string(f) + " ";
        for (auto f : st.factors) got += std::to_string(f) + " ";
        rep.checks.push_back({"structure", ok, ok ? got : "want " + want + "got " + got});
    }

    Support s = invariant_monomials(I);
    rep.support_size = s.size();
    if (spec.claimed_support) {
        bool ok = s == *spec.claimed_support;
        rep.checks.push_back({"S match", ok, ok ? std::to_string(s.size()) + " monomials" : "S mismatch"});
    }

    LargenessVerdict v = certify.get(s);
    rep.checks.push_back({"large", v.large(), v.large() ? "certified over p=" + std::to_string(v.certificate->prime)
                                                        : "no certificate"});
    if (v.certificate) rep.certificate = v.certificate;

    auto simple = find_simple_decomposition(s);
    rep.checks.push_back({"non-simple", !simple.has_value(), simple ? "decomposition found" : "no decomposition"});

    // Closedness: the stabilizer of S_I is exactly the group.
    StabilizerResult stab = equal_weight_stabilizer(s);
    bool closed = stab.free_rank == 0 && stab.group.structure == I.pres;
    rep.checks.push_back({"closed", closed, closed ? "stabilizer equals G" : "stabilizer differs"});

    if (v.large()) {
        MaximalityResult mr = is_maximal(I, primes, certify);
        bool ok = mr.verdict == MaximalityResult::Verdict::Maximal;
        std::string det = ok ? "no large prime extension"
                             : (mr.verdict == MaximalityResult::Verdict::NonMaximal
                                    ? "extension of order " + std::to_string(mr.witness->extended_order)
                                    : "unresolved");
        rep.checks.push_back({"maximal", ok, det});
    } else {
        rep.checks.push_back({"maximal", false, "skipped: support not large"});
    }

    try {
        rep.chain = chain_invariants_core(edge_graph(s), lambda_classes(I));
        rep.checks.push_back({"chain invariants", true,
                              "(s,c)=(" + std::to_string(rep.chain.s) + "," + std::to_string(rep.chain.c) + ")"});
    } catch (const NoFrameEdgeError& e) {
        rep.checks.push_back({"chain invariants", false, e.what()});
    }
    return rep;
}

inline VerifyReport verify_catalog(const std::string& label, const std::vector<int>& primes = {2, 3, 5, 7, 11, 13},
                                   int trials = kDefaultTrials,
                                   std::vector<std::uint32_t> smooth_primes = {kDefaultSmoothPrimes[0],
                                                                               kDefaultSmoothPrimes[1],
                                                                               kDefaultSmoothPrimes[2]},
                                   std::uint64_t seed = 0)
{
    const CatalogCase& c = catalog_case(label);
    VerifySpec spec;
    spec.label = label;
    spec.data = catalog_action(c);
    spec.claimed_structure = normalize_claimed_structure(c.claimed_orders);
    spec.claimed_support = parse_support(catalog_degree(c), spec.data.n, c.claimed_support);
    return run_verification(spec, primes, trials, smooth_primes, seed);
}

} // namespace hsym
