#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blockfuse/blocks.hpp"
#include "blockfuse/fusion.hpp"
#include "blockfuse/idempotents.hpp"
#include "blockfuse/vanishing.hpp"

namespace blockfuse {

struct SuiteResult {
    std::string name;
    long cases = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double wall_ms = 0;

    bool passed() const { return failures.empty(); }

    void fail(const std::string& witness) { failures.push_back(witness); }
};

struct VerifyOptions {
    int max_degree = 0;                    // 0: per-suite default ranges
    std::optional<unsigned> prime;         // restrict to one prime
    std::optional<GroupKind> kind;         // restrict to s or a
    std::uint64_t seed = 1;
    SessionConfig session;
};

namespace detail {

inline std::vector<std::pair<GroupKind, int>> group_range(const VerifyOptions& opt, int lo, int hi) {
    if (opt.max_degree > 0) hi = std::min(hi, opt.max_degree);
    std::vector<std::pair<GroupKind, int>> out;
    for (int n = lo; n <= hi; ++n) {
        if (!opt.kind || *opt.kind == GroupKind::symmetric) out.push_back({GroupKind::symmetric, n});
        if (!opt.kind || *opt.kind == GroupKind::alternating) out.push_back({GroupKind::alternating, n});
    }
    return out;
}

inline std::vector<unsigned> prime_range(const VerifyOptions& opt, std::vector<unsigned> defaults) {
    if (!opt.prime) return defaults;
    return {*opt.prime};
}

inline PermGroup build_group(GroupKind kind, int n, std::uint64_t cap) {
    return kind == GroupKind::symmetric ? PermGroup::symmetric(n, cap) : PermGroup::alternating(n, cap);
}

inline std::string group_name(GroupKind kind, int n) {
    return (kind == GroupKind::symmetric ? "S_" : "A_") + std::to_string(n);
}

inline std::uint64_t p_part(std::uint64_t n, unsigned p) { return p_power_value(p, p_valuation(n, p)); }

template <class F>
SuiteResult timed_suite(const std::string& name, F&& body) {
    SuiteResult res;
    res.name = name;
    auto t0 = std::chrono::steady_clock::now();
    body(res);
    auto t1 = std::chrono::steady_clock::now();
    res.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return res;
}

}  // namespace detail

// Block axioms and the exhaustive e^2 = e cross-check (with the GF(2)S_3
// golden case): primitive idempotents square to themselves, annihilate each
// other, sum to 1, and for centers of dimension <= 12 coincide with the
// brute-force list of primitive solutions.
inline SuiteResult verify_blocks_suite(const VerifyOptions& opt) {
    return detail::timed_suite("blocks", [&](SuiteResult& res) {
        for (auto [kind, n] : detail::group_range(opt, 1, 6)) {
            for (unsigned p : detail::prime_range(opt, {2, 3, 5})) {
                BlockSession session(detail::build_group(kind, n, opt.session.order_cap), p, opt.session);
                session.run([&] {
                    const auto& blocks = session.blocks();
                    const AlgebraContext& ctx = session.context();
                    std::string tag = detail::group_name(kind, n) + " p=" + std::to_string(p);
                    ++res.cases;
                    std::vector<CentralElement> es;
                    for (const auto& b : blocks) {
                        es.push_back(b.idempotent);
                        if (b.residue_degree != 1 && opt.session.forced_field_degree == 0)
                            res.fail(tag + ": residue degree " + std::to_string(b.residue_degree) +
                                     " after escalation");
                    }
                    std::string bad = check_decomposition(ctx, es);
                    if (!bad.empty()) res.fail(tag + ": " + bad);
                    if (ctx.dim() <= 12) {
                        ++res.cases;
                        auto brute = brute_force_primitive_idempotents(ctx);
                        if (!brute) {
                            res.fail(tag + ": brute-force enumeration over budget");
                        } else {
                            std::vector<CentralElement> sorted = es;
                            std::sort(sorted.begin(), sorted.end(),
                                      [](const CentralElement& a, const CentralElement& b) {
                                          return a.coeff < b.coeff;
                                      });
                            if (sorted != *brute)
                                res.fail(tag + ": decomposition disagrees with the exhaustive e^2=e scan (" +
                                         std::to_string(sorted.size()) + " vs " + std::to_string(brute->size()) +
                                         ")");
                        }
                    }
                    if (kind == GroupKind::symmetric && n == 3 && p == 2) {
                        // golden case: exactly {1 + sum C3, sum C3} with defect C_2 / trivial
                        ++res.cases;
                        if (blocks.size() != 2) res.fail("GF(2)S_3 golden: expected 2 blocks");
                        const auto& bd = session.blocks_with_defect();
                        for (const auto& b : bd) {
                            CentralElement c3 = ctx.class_sum(2);
                            CentralElement principal = ctx.add(ctx.one(), c3);
                            if (b.idempotent == principal && b.defect->order() != 2)
                                res.fail("GF(2)S_3 golden: principal block defect is not C_2");
                            if (b.idempotent == c3 && b.defect->order() != 1)
                                res.fail("GF(2)S_3 golden: sum C3 block defect is not trivial");
                            if (b.idempotent != principal && b.idempotent != c3)
                                res.fail("GF(2)S_3 golden: unexpected idempotent");
                        }
                    }
                    return 0;
                });
            }
        }
    });
}

// The coefficient formula and its vanishing refinement: the counted value,
// reduced into the field, must match the coefficient of a in (sum C)^q; a
// class with a zero witness must vanish in every class-sum power.
inline SuiteResult verify_expcoef_suite(const VerifyOptions& opt) {
    return detail::timed_suite("expcoef", [&](SuiteResult& res) {
        for (auto [kind, n] : detail::group_range(opt, 1, 5)) {
            for (unsigned p : detail::prime_range(opt, {2, 3})) {
                BlockSession session(detail::build_group(kind, n, opt.session.order_cap), p, opt.session);
                const AlgebraContext& ctx = session.context();
                std::string tag = detail::group_name(kind, n) + " p=" + std::to_string(p);
                const auto& classes = ctx.group().classes();

                std::vector<CentralElement> powers;
                for (int l = 0; l < ctx.dim(); ++l) powers.push_back(ctx.pow(ctx.class_sum(l), ctx.q()));

                // micro oracle for tiny groups: naive q-fold sparse products
                if (ctx.group().order() <= 24 && ctx.q().value() <= 16) {
                    for (int l = 0; l < ctx.dim(); ++l) {
                        ++res.cases;
                        AlgebraElement naive = sparse_pow(ctx.field(), ctx.group().degree(),
                                                          ctx.expand(ctx.class_sum(l)), ctx.q().value());
                        if (ctx.expand(powers[l]) != naive)
                            res.fail(tag + ": repeated-squaring power of class " + classes[l].label() +
                                     " disagrees with the naive product");
                    }
                }

                for (const auto& acls : classes) {
                    const Permutation& a = acls.rep;
                    std::optional<PElementPool> pool;
                    if (is_p_regular(a, p)) pool = p_element_pool(ctx, a);
                    for (int l = 0; l < ctx.dim(); ++l) {
                        ++res.cases;
                        std::int64_t count =
                            pool ? predicted_coefficient_count(ctx, *pool, a, l) : 0;
                        FieldElement predicted = fe_from_int(ctx.field(), count);
                        FieldElement oracle = ctx.coefficient_of(powers[l], a);
                        if (predicted != oracle)
                            res.fail(tag + ": a in " + acls.label() + ", C = " + classes[l].label() +
                                     ": formula gives " + fe_format(predicted) + ", oracle " + fe_format(oracle));
                    }
                    if (pool) {
                        if (auto w = zero_hypothesis(ctx, a, opt.session.sylow_cap)) {
                            for (int l = 0; l < ctx.dim(); ++l) {
                                ++res.cases;
                                if (!fe_is_zero(ctx.coefficient_of(powers[l], a)))
                                    res.fail(tag + ": witness-bearing class " + acls.label() +
                                             " has nonzero coefficient in (sum " + classes[l].label() + ")^q");
                            }
                        }
                    }
                }
            }
        }
    });
}

// Criterion-based vanishing in block idempotents, plus the criterion ->
// witness linkage on symmetric groups.
inline SuiteResult verify_vanishing_suite(const VerifyOptions& opt) {
    return detail::timed_suite("vanishing", [&](SuiteResult& res) {
        for (auto [kind, n] : detail::group_range(opt, 1, 7)) {
            for (unsigned p : detail::prime_range(opt, {2, 3})) {
                BlockSession session(detail::build_group(kind, n, opt.session.order_cap), p, opt.session);
                std::string tag = detail::group_name(kind, n) + " p=" + std::to_string(p);
                VanishingReport rep = session.run([&] { return verify_vanishing(session); });
                res.cases += rep.classes_checked;
                for (const auto& f : rep.failures) res.fail(tag + ": " + f);

                if (kind == GroupKind::symmetric && n <= 6) {
                    const AlgebraContext& ctx = session.context();
                    for (const auto& cls : ctx.group().classes()) {
                        if (!is_p_regular(cls.rep, p)) continue;
                        if (!vanishing_criterion(GroupKind::symmetric, cls.type, p)) continue;
                        ++res.cases;
                        if (!zero_hypothesis(ctx, cls.rep, opt.session.sylow_cap))
                            res.fail(tag + ": class " + cls.label() +
                                     " meets the criterion but carries no zero witness");
                    }
                }
            }
        }
    });
}

// Defect groups: Sylow shape over the moved set, the centralizer-Sylow
// cross-check, Brauer positivity at the defect group and vanishing above it,
// and p-regular support of every block idempotent.
inline SuiteResult verify_defect_suite(const VerifyOptions& opt) {
    return detail::timed_suite("defect", [&](SuiteResult& res) {
        for (auto [kind, n] : detail::group_range(opt, 1, 6)) {
            for (unsigned p : detail::prime_range(opt, {2, 3})) {
                BlockSession session(detail::build_group(kind, n, opt.session.order_cap), p, opt.session);
                session.run([&] {
                    const auto& blocks = session.blocks_with_defect();
                    const AlgebraContext& ctx = session.context();
                    std::string tag = detail::group_name(kind, n) + " p=" + std::to_string(p);
                    for (const auto& b : blocks) {
                        ++res.cases;
                        std::string btag = tag + " block " + std::to_string(b.index);
                        const PermGroup& defect = *b.defect;

                        // p-regular support
                        for (const auto& cls : ctx.group().classes())
                            if (!fe_is_zero(b.idempotent.coeff[cls.index]) && !is_p_regular(cls.rep, p))
                                res.fail(btag + ": support meets the p-singular class " + cls.label());

                        // Sylow of S_M resp. A_M over the moved set
                        std::uint64_t want;
                        if (kind == GroupKind::symmetric) {
                            std::uint64_t fact = 1;
                            for (std::size_t i = 2; i <= b.moved_set.size(); ++i) fact *= i;
                            want = detail::p_part(fact, p);
                        } else {
                            std::uint64_t fact = 1;
                            for (std::size_t i = 2; i <= b.moved_set.size(); ++i) fact *= i;
                            want = detail::p_part(b.moved_set.size() >= 2 ? fact / 2 : fact, p);
                        }
                        if (defect.order() != want)
                            res.fail(btag + ": defect order " + std::to_string(defect.order()) +
                                     " is not the full p-part " + std::to_string(want) + " over its moved set");

                        // def-syl: some supported element has Sylow_p(C_G(a)) conjugate
                        bool found = false;
                        for (const auto& cls : ctx.group().classes()) {
                            if (fe_is_zero(b.idempotent.coeff[cls.index])) continue;
                            PermGroup cga = centralizer_in(ctx.group(), cls.rep);
                            if (detail::p_part(cga.order(), p) != defect.order()) continue;
                            PermGroup s = cga.sylow(p);
                            if (conjugating_element(ctx.group(), s, defect)) {
                                found = true;
                                break;
                            }
                        }
                        if (!found)
                            res.fail(btag + ": no supported class has a centralizer Sylow conjugate to the defect");

                        // Br positivity at the defect, vanishing strictly above it
                        if (!session.brauer_nonzero(b, defect)) res.fail(btag + ": Br vanishes at the defect group");
                        const SubgroupCatalog& cat = session.catalog();
                        for (const auto& q : cat.subgroups) {
                            if (q.order() <= defect.order()) continue;
                            bool contains = defect.is_subgroup_of(q);
                            if (contains && session.brauer_nonzero(b, q))
                                res.fail(btag + ": Br does not vanish above the defect group");
                        }
                    }
                    return 0;
                });
            }
        }
    });
}

inline int kind_max_degree(const VerifyOptions& opt, int hard_max) {
    return opt.max_degree > 0 ? std::min(hard_max, opt.max_degree) : hard_max;
}

// the alternating two-pair swap rule: g in N_{A_n}(Q) swaps the two pairs
// exactly when its restriction to the fixed points of the defect group is odd
inline void verify_parity_swap(BlockSession& session, const Block& b,
                               const std::vector<CentricSubgroup>& centrics, const std::string& btag,
                               SuiteResult& res) {
    const PermGroup& g_group = session.group();
    std::vector<char> moved(g_group.degree(), 0);
    for (int x : b.moved_set) moved[x] = 1;
    for (const auto& c : centrics) {
        const AlgebraContext& ctx = session.centralizer_context(c.q);
        CentralElement br = session.brauer_from_main(b.idempotent, c.q);
        std::vector<CentralElement> pair;
        for (const auto& f : session.centralizer_blocks(c.q))
            if (ctx.mul(br, f.idempotent) == f.idempotent) pair.push_back(f.idempotent);
        if (pair.size() != 2) continue;
        for (const auto& g : g_group.elements()) {
            bool norm = true;
            for (const auto& x : c.q.generators())
                if (!c.q.contains(x.conjugated(g))) {
                    norm = false;
                    break;
                }
            if (!norm) continue;
            ++res.cases;
            CentralElement img = session.conjugate_central(ctx, pair[0], g);
            bool swaps = img == pair[1];
            if (!swaps && img != pair[0]) {
                res.fail(btag + ": conjugation maps a pair outside the two pairs at <" + c.gens_label + ">");
                continue;
            }
            // parity of g on the fixed points of the defect group
            int transpositions = 0;
            std::vector<char> seen(g_group.degree(), 0);
            for (int pt = 0; pt < g_group.degree(); ++pt) {
                if (moved[pt] || seen[pt]) continue;
                int len = 0, cur = pt;
                while (!seen[cur]) {
                    seen[cur] = 1;
                    cur = g(cur);
                    ++len;
                }
                transpositions += len - 1;
            }
            bool odd_on_fixed = transpositions % 2 == 1;
            if (swaps != odd_on_fixed)
                res.fail(btag + ": swap/parity mismatch at <" + c.gens_label + "> for g = " + format_cycles(g));
        }
    }
}

// Centric-subgroup structure and Brauer pair counts: fixed-point-freeness
// and p-group centralizers over the moved block, one pair per centric
// subgroup for symmetric groups, one or two (constant per block, with the
// parity swap rule) for alternating groups.
inline SuiteResult verify_brauer_pairs_suite(const VerifyOptions& opt) {
    return detail::timed_suite("brauer-pairs", [&](SuiteResult& res) {
        // fully-moved Sylow subgroups: no centric fixed points, p-group centralizer
        struct CentricCase {
            GroupKind kind;
            int n;
            unsigned p;
        };
        std::vector<CentricCase> centric_cases = {{GroupKind::symmetric, 4, 2},
                                                  {GroupKind::symmetric, 6, 2},
                                                  {GroupKind::alternating, 6, 2},
                                                  {GroupKind::symmetric, 6, 3},
                                                  {GroupKind::alternating, 6, 3}};
        for (const auto& cc : centric_cases) {
            if (opt.max_degree > 0 && cc.n > opt.max_degree) continue;
            if (opt.prime && *opt.prime != cc.p) continue;
            if (opt.kind && *opt.kind != cc.kind) continue;
            PermGroup p_group = cc.kind == GroupKind::symmetric ? sylow_symmetric(cc.n, cc.p)
                                                                : sylow_alternating(cc.n, cc.p);
            PermGroup ambient = PermGroup::symmetric(cc.n, opt.session.order_cap);
            SubgroupCatalog cat = subgroup_catalog(p_group, cc.p, opt.session.sylow_cap);
            std::string tag = "Sylow(" + detail::group_name(cc.kind, cc.n) + ", p=" + std::to_string(cc.p) + ")";
            for (const auto& q : cat.subgroups) {
                if (!is_centric(p_group, q)) continue;
                ++res.cases;
                if (static_cast<int>(q.moved_points().size()) != cc.n)
                    res.fail(tag + ": centric <" + generator_label(q) + "> has fixed points");
                PermGroup cent = ambient.centralizer_of(q);
                if (detail::p_part(cent.order(), cc.p) != cent.order())
                    res.fail(tag + ": centralizer of centric <" + generator_label(q) + "> is not a p-group");
            }
        }

        // pair counts at centric subgroups of each defect group
        int max_alt = 7;  // the two-pair scan range at p = 2
        for (auto [kind, n] : detail::group_range(opt, 1, kind_max_degree(opt, max_alt))) {
            for (unsigned p : detail::prime_range(opt, {2, 3})) {
                if (kind == GroupKind::symmetric && n > 6) continue;
                if (kind == GroupKind::alternating && n > 6 && !(p == 2 && n <= max_alt)) continue;
                BlockSession session(detail::build_group(kind, n, opt.session.order_cap), p, opt.session);
                session.run([&] {
                    const auto& blocks = session.blocks_with_defect();
                    std::string tag = detail::group_name(kind, n) + " p=" + std::to_string(p);
                    for (const auto& b : blocks) {
                        auto centrics =
                            centric_subgroups(*b.defect, p, opt.session.sylow_cap);
                        std::vector<int> counts;
                        for (const auto& c : centrics) counts.push_back(session.count_pairs_at(c.q, b));
                        std::string btag = tag + " block " + std::to_string(b.index);
                        for (std::size_t i = 0; i < centrics.size(); ++i) {
                            ++res.cases;
                            if (kind == GroupKind::symmetric) {
                                if (counts[i] != 1)
                                    res.fail(btag + ": " + std::to_string(counts[i]) + " pairs at centric <" +
                                             centrics[i].gens_label + ">");
                            } else {
                                if (counts[i] != counts[0] || counts[i] < 1 || counts[i] > 2)
                                    res.fail(btag + ": pair count " + std::to_string(counts[i]) +
                                             " at centric <" + centrics[i].gens_label +
                                             "> (first count " + std::to_string(counts[0]) + ")");
                            }
                        }
                        if (kind == GroupKind::alternating && !counts.empty() && counts[0] == 2) {
                            res.notes.push_back(btag + ": two-pair case at defect order " +
                                                std::to_string(b.defect->order()));
                            verify_parity_swap(session, b, centrics, btag, res);
                        }
                    }
                    return 0;
                });
            }
        }
    });
}

// Fusion identification: S_M verdicts on symmetric blocks, A_M at p = 2 on
// alternating ones, A_M or a validated A_L at odd p.
inline SuiteResult verify_fusion_suite(const VerifyOptions& opt) {
    return detail::timed_suite("fusion", [&](SuiteResult& res) {
        for (auto [kind, n] : detail::group_range(opt, 1, 6)) {
            for (unsigned p : detail::prime_range(opt, {2, 3})) {
                if (kind == GroupKind::symmetric && n > 5) continue;
                BlockSession session(detail::build_group(kind, n, opt.session.order_cap), p, opt.session);
                session.run([&] {
                    const auto& blocks = session.blocks_with_defect();
                    std::string tag = detail::group_name(kind, n) + " p=" + std::to_string(p);
                    for (const auto& b : blocks) {
                        ++res.cases;
                        IdentifyResult idr = identify(session, b);
                        std::string btag = tag + " block " + std::to_string(b.index);
                        if (idr.verdict == FusionVerdict::falsified) {
                            res.fail(btag + ": " + idr.witness);
                            continue;
                        }
                        if (kind == GroupKind::symmetric && idr.verdict != FusionVerdict::S_M)
                            res.fail(btag + ": expected an S_M verdict, got " + verdict_name(idr.verdict));
                        if (kind == GroupKind::alternating && p == 2 && idr.verdict != FusionVerdict::A_M)
                            res.fail(btag + ": expected A_M at p = 2, got " + verdict_name(idr.verdict));
                        if (idr.verdict == FusionVerdict::A_L)
                            res.notes.push_back(btag + ": A_L reconstruction on " +
                                                std::to_string(idr.extended_set.size()) + " points");
                    }
                    return 0;
                });
            }
        }
    });
}

// The preliminary-lemma property suite; at least a thousand seeded cases.
inline SuiteResult verify_props_suite(const VerifyOptions& opt) {
    return detail::timed_suite("props", [&](SuiteResult& res) {
        std::mt19937_64 rng(opt.seed);

        // conjugation product identity
        for (int n : {4, 5, 6}) {
            PermGroup g = PermGroup::symmetric(n, opt.session.order_cap);
            const auto& elems = g.elements();
            for (int trial = 0; trial < 40; ++trial) {
                Permutation a = elems[rng() % elems.size()];
                Permutation b = elems[rng() % elems.size()];
                for (int len = 1; len <= 8; ++len) {
                    ++res.cases;
                    Permutation prod = Permutation::identity(n);
                    for (int i = 0; i < len; ++i) prod = prod * a.conjugated(b.pow(-i));
                    if (prod != (a * b).pow(len) * b.pow(-len))
                        res.fail("conjugation product identity fails for a=" + format_cycles(a) +
                                 " b=" + format_cycles(b) + " n=" + std::to_string(len));
                }
            }
        }

        // Sylow conjugates generate a subgroup containing every p-element
        {
            std::vector<std::pair<GroupKind, int>> gs = {{GroupKind::symmetric, 4},
                                                         {GroupKind::symmetric, 5},
                                                         {GroupKind::alternating, 5}};
            for (auto [kind, n] : gs) {
                PermGroup g = detail::build_group(kind, n, opt.session.order_cap);
                for (unsigned p : {2u, 3u, 5u}) {
                    PermGroup s = g.sylow(p);
                    for (const auto& a : g.elements()) {
                        if (!is_p_element(a, p)) continue;
                        ++res.cases;
                        std::vector<Permutation> gens;
                        for (std::uint64_t k = 0; k < a.order(); ++k) {
                            Permutation ak = a.pow(static_cast<std::int64_t>(k));
                            for (const auto& x : s.generators()) gens.push_back(x.conjugated(ak));
                        }
                        auto closure = PermGroup::close_under_product(n, gens, opt.session.order_cap);
                        if (!std::binary_search(closure.begin(), closure.end(), a))
                            res.fail("sylow conjugate closure misses " + format_cycles(a) + " in " +
                                     detail::group_name(kind, n) + " p=" + std::to_string(p));
                    }
                }
            }
        }

        // centralizer elements permute the orbits of the centralized subgroup
        {
            PermGroup g = PermGroup::symmetric(5, opt.session.order_cap);
            const auto& elems = g.elements();
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<Permutation> hgens = {elems[rng() % elems.size()]};
                if (trial % 2 == 0) hgens.push_back(elems[rng() % elems.size()]);
                PermGroup h = generated_subgroup(g, hgens);
                // orbit labels per point
                std::vector<int> orbit(5, -1);
                int norb = 0;
                for (int pt = 0; pt < 5; ++pt) {
                    if (orbit[pt] != -1) continue;
                    std::vector<int> stack = {pt};
                    orbit[pt] = norb;
                    while (!stack.empty()) {
                        int cur = stack.back();
                        stack.pop_back();
                        for (const auto& x : h.generators())
                            if (orbit[x(cur)] == -1) {
                                orbit[x(cur)] = norb;
                                stack.push_back(x(cur));
                            }
                    }
                    ++norb;
                }
                for (const auto& c : g.centralizer_of(h).elements()) {
                    ++res.cases;
                    bool ok = true;
                    // the image of an orbit must again be a single orbit
                    for (int o = 0; o < norb && ok; ++o) {
                        int target = -1;
                        for (int pt = 0; pt < 5; ++pt) {
                            if (orbit[pt] != o) continue;
                            if (target == -1) target = orbit[c(pt)];
                            else if (orbit[c(pt)] != target) ok = false;
                        }
                    }
                    if (!ok) res.fail("centralizer element " + format_cycles(c) + " tears an orbit");
                }
            }
        }

        // p-regular exponents across whole groups
        for (auto [kind, n] : detail::group_range(opt, 1, 6)) {
            PermGroup g = detail::build_group(kind, n, opt.session.order_cap);
            for (unsigned p : detail::prime_range(opt, {2, 3, 5})) {
                PPower q = p_regular_exponent(g.order(), p);
                for (const auto& x : g.elements()) {
                    ++res.cases;
                    if (x.pow_p_power(q.prime, q.exp) != p_parts(x, p).second)
                        res.fail("x^q != x_p' for " + format_cycles(x) + " in " + detail::group_name(kind, n) +
                                 " p=" + std::to_string(p));
                }
            }
        }

        // uniqueness of the commuting p-part factorization, exhaustively
        for (int n : {4, 5}) {
            PermGroup g = PermGroup::symmetric(n, opt.session.order_cap);
            for (unsigned p : {2u, 3u}) {
                for (const auto& x : g.elements()) {
                    ++res.cases;
                    auto [xp, xpp] = p_parts(x, p);
                    int hits = 0;
                    for (const auto& u : g.centralizer(x).elements()) {
                        if (!is_p_element(u, p)) continue;
                        Permutation v = u.inverse() * x;
                        if (u * v == v * u && is_p_regular(v, p)) {
                            ++hits;
                            if (u != xp || v != xpp) {
                                res.fail("second commuting factorization for " + format_cycles(x));
                                break;
                            }
                        }
                    }
                    if (hits != 1) res.fail("expected exactly one factorization for " + format_cycles(x));
                }
            }
        }

        // saturation: |Aut_P(P)| is the p-part of |Aut_F(P)| for block fusion
        {
            std::vector<std::pair<GroupKind, int>> gs = {{GroupKind::symmetric, 3},
                                                         {GroupKind::symmetric, 4},
                                                         {GroupKind::alternating, 4},
                                                         {GroupKind::alternating, 5}};
            for (auto [kind, n] : gs) {
                for (unsigned p : detail::prime_range(opt, {2, 3})) {
                    BlockSession session(detail::build_group(kind, n, opt.session.order_cap), p, opt.session);
                    session.run([&] {
                        for (const auto& b : session.blocks_with_defect()) {
                            ++res.cases;
                            const PermGroup& defect = *b.defect;
                            BrauerPair maximal = session.maximal_pair(b);
                            CentricSubgroup top{defect, generator_label(defect)};
                            AutSet aut_f = aut_block(session, maximal, top);
                            AutSet aut_p = aut_in(defect, defect);
                            if (detail::p_part(aut_f.size(), p) != aut_p.size())
                                res.fail("saturation p-part fails for " + detail::group_name(kind, n) + " p=" +
                                         std::to_string(p) + " block " + std::to_string(b.index));
                        }
                        return 0;
                    });
                }
            }
        }
    });
}

inline std::vector<std::string> suite_names() {
    return {"blocks", "expcoef", "vanishing", "defect", "brauer-pairs", "fusion", "props"};
}

inline SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "blocks") return verify_blocks_suite(opt);
    if (name == "expcoef") return verify_expcoef_suite(opt);
    if (name == "vanishing") return verify_vanishing_suite(opt);
    if (name == "defect") return verify_defect_suite(opt);
    if (name == "brauer-pairs") return verify_brauer_pairs_suite(opt);
    if (name == "fusion") return verify_fusion_suite(opt);
    if (name == "props") return verify_props_suite(opt);
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace blockfuse
