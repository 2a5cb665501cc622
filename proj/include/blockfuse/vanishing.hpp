#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "blockfuse/algebra.hpp"
#include "blockfuse/blocks.hpp"
#include "blockfuse/fusion.hpp"
#include "blockfuse/subgroups.hpp"
#include "blockfuse/sylow.hpp"

namespace blockfuse {

// The counting formula for the coefficient of a in (sum C)^q next to the
// structure-constant oracle value.
struct CoefReport {
    Permutation a;
    int class_index = 0;
    PPower q;
    bool a_p_regular = true;
    std::int64_t predicted_count = 0;  // |{h in H : a*h in C}|, 0 when a is not p-regular
    FieldElement predicted_value;
    FieldElement oracle_value;
    bool agree = false;
};

// Sylow subgroup S of C_G(a) and the p-elements H of C_G(S)
struct PElementPool {
    PermGroup s;
    std::vector<Permutation> h;
};

inline PElementPool p_element_pool(const AlgebraContext& ctx, const Permutation& a) {
    PElementPool pool;
    PermGroup cga = centralizer_in(ctx.group(), a);
    pool.s = cga.sylow(ctx.prime());
    PermGroup cgs = ctx.group().centralizer_of(pool.s);
    for (const auto& h : cgs.elements())
        if (is_p_element(h, ctx.prime())) pool.h.push_back(h);
    return pool;
}

inline std::int64_t predicted_coefficient_count(const AlgebraContext& ctx, const PElementPool& pool,
                                                const Permutation& a, int class_index) {
    std::int64_t count = 0;
    for (const auto& h : pool.h)
        if (ctx.group().class_index_of(a * h) == class_index) ++count;
    return count;
}

inline CoefReport coef_formula(const AlgebraContext& ctx, const Permutation& a, int class_index) {
    CoefReport rep;
    rep.a = a;
    rep.class_index = class_index;
    rep.q = ctx.q();
    rep.a_p_regular = is_p_regular(a, ctx.prime());
    if (rep.a_p_regular) {
        PElementPool pool = p_element_pool(ctx, a);
        rep.predicted_count = predicted_coefficient_count(ctx, pool, a, class_index);
    }
    rep.predicted_value = fe_from_int(ctx.field(), rep.predicted_count);
    CentralElement power = ctx.pow(ctx.class_sum(class_index), ctx.q());
    rep.oracle_value = ctx.coefficient_of(power, a);
    rep.agree = rep.predicted_value == rep.oracle_value;
    return rep;
}

// A normal abelian p-subgroup of C_G(S) that a fails to centralize; its
// existence forces the coefficient of a to vanish in every (sum C)^q.
struct ZeroWitness {
    Permutation a;
    PermGroup s;            // Sylow p-subgroup of C_G(a)
    PermGroup p_subgroup;   // the witness
    Permutation moved;      // element of the witness moved by conjugation with a
};

inline std::optional<ZeroWitness> zero_hypothesis(const AlgebraContext& ctx, const Permutation& a,
                                                  std::uint64_t sylow_cap = kDefaultSylowCap) {
    unsigned p = ctx.prime();
    if (!is_p_regular(a, p)) throw std::invalid_argument("zero_hypothesis needs a p-regular element");
    PermGroup cga = centralizer_in(ctx.group(), a);
    PermGroup s = cga.sylow(p);
    PermGroup cgs = ctx.group().centralizer_of(s);
    PermGroup t = cgs.sylow(p);
    SubgroupCatalog cat = subgroup_catalog(t, p, sylow_cap);

    // witness search order: subgroup order descending, then generator label
    std::vector<int> order(cat.subgroups.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::vector<std::string> labels;
    for (const auto& q : cat.subgroups) labels.push_back(generator_label(q));
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (cat.subgroups[x].order() != cat.subgroups[y].order())
            return cat.subgroups[x].order() > cat.subgroups[y].order();
        return labels[x] < labels[y];
    });

    for (int idx : order) {
        const PermGroup& cand = cat.subgroups[idx];
        if (cand.order() == 1) continue;
        if (!cand.is_abelian()) continue;
        bool normal = true;
        for (const auto& g : cgs.generators()) {
            for (const auto& x : cand.generators())
                if (!cand.contains(x.conjugated(g))) {
                    normal = false;
                    break;
                }
            if (!normal) break;
        }
        if (!normal) continue;
        for (const auto& x : cand.elements()) {
            if (x.conjugated(a) != x) {
                ZeroWitness w;
                w.a = a;
                w.s = s;
                w.p_subgroup = cand;
                w.moved = x;
                return w;
            }
        }
    }
    return std::nullopt;
}

// The cycle-type vanishing test: a p-regular type with at least p cycles of
// a common length c > 1; alternating groups at p = 2 additionally need four
// c-cycles or a second repeated length (fixed points count as length 1 when
// fixed_points_qualify is set).
inline bool vanishing_criterion(GroupKind kind, const CycleType& type, unsigned p,
                                bool fixed_points_qualify = true) {
    if (kind != GroupKind::symmetric && kind != GroupKind::alternating)
        throw std::invalid_argument("vanishing_criterion applies to symmetric or alternating kinds");
    for (auto [c, m] : type.parts)
        if (c % p == 0) throw std::invalid_argument("vanishing_criterion needs a p-regular cycle type");

    bool base = false;
    for (auto [c, m] : type.parts)
        if (c > 1 && m >= static_cast<int>(p)) base = true;
    if (!base) return false;
    if (kind == GroupKind::symmetric || p != 2) return true;

    for (auto [c, m] : type.parts)
        if (c > 1 && m >= 4) return true;
    for (auto [c, m] : type.parts) {
        if (c <= 1 || m < 2) continue;
        for (auto [d, md] : type.parts) {
            if (d == c || md < 2) continue;
            if (d == 1 && !fixed_points_qualify) continue;
            return true;
        }
    }
    return false;
}

struct VanishingReport {
    int classes_checked = 0;
    int criterion_hits = 0;
    int witness_hits = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

// Sweep over the class representatives of the session group: every class
// meeting the criterion must have coefficient zero in every block, and every
// class with a zero witness must vanish in every (sum C)^q.
inline VanishingReport verify_vanishing(BlockSession& session, bool fixed_points_qualify = true) {
    VanishingReport rep;
    const AlgebraContext& ctx = session.context();
    const auto& blocks = session.blocks();
    const auto& classes = ctx.group().classes();

    std::vector<std::optional<CentralElement>> powers(classes.size());
    for (const auto& cls : classes) {
        ++rep.classes_checked;
        const Permutation& a = cls.rep;
        if (!is_p_regular(a, session.prime())) continue;

        if (vanishing_criterion(ctx.group().kind(), cls.type, session.prime(), fixed_points_qualify)) {
            ++rep.criterion_hits;
            for (const auto& b : blocks) {
                if (!fe_is_zero(ctx.coefficient_of(b.idempotent, a))) {
                    std::ostringstream os;
                    os << "class " << cls.label() << " meets the vanishing criterion but has coefficient "
                       << fe_format(ctx.coefficient_of(b.idempotent, a)) << " in block " << b.index;
                    rep.failures.push_back(os.str());
                }
            }
        }

        if (auto w = zero_hypothesis(ctx, a, session.config().sylow_cap)) {
            ++rep.witness_hits;
            for (std::size_t l = 0; l < classes.size(); ++l) {
                if (!powers[l]) powers[l] = ctx.pow(ctx.class_sum(static_cast<int>(l)), ctx.q());
                if (!fe_is_zero(ctx.coefficient_of(*powers[l], a))) {
                    std::ostringstream os;
                    os << "class " << cls.label() << " has a zero witness <" << generator_label(w->p_subgroup)
                       << "> but coefficient " << fe_format(ctx.coefficient_of(*powers[l], a))
                       << " in (sum " << classes[l].label() << ")^q";
                    rep.failures.push_back(os.str());
                }
            }
        }
    }
    return rep;
}

}  // namespace blockfuse
