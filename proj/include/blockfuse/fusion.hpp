#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blockfuse/blocks.hpp"
#include "blockfuse/perm_group.hpp"
#include "blockfuse/subgroups.hpp"

namespace blockfuse {

// Automorphisms of a subgroup Q, each stored as the permutation it induces
// on Q's sorted element list. Two automorphism sets over the same Q compare
// as plain sets.
struct AutSet {
    std::vector<Permutation> domain;
    std::set<std::vector<int>> maps;

    std::size_t size() const { return maps.size(); }

    bool operator==(const AutSet&) const = default;
};

namespace detail {

inline std::vector<int> induced_map(const std::vector<Permutation>& domain, const Permutation& g) {
    std::vector<int> map(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
        Permutation conj = domain[i].conjugated(g);
        auto it = std::lower_bound(domain.begin(), domain.end(), conj);
        if (it == domain.end() || *it != conj) throw internal_error("conjugation left the subgroup");
        map[i] = static_cast<int>(it - domain.begin());
    }
    return map;
}

inline bool normalizes(const PermGroup& q, const Permutation& g) {
    for (const auto& x : q.generators())
        if (!q.contains(x.conjugated(g))) return false;
    return true;
}

}  // namespace detail

// automorphisms of Q induced by conjugation with elements of H
inline AutSet aut_in(const PermGroup& h, const PermGroup& q) {
    AutSet out;
    out.domain = q.elements();
    for (const auto& g : h.elements())
        if (detail::normalizes(q, g)) out.maps.insert(detail::induced_map(out.domain, g));
    return out;
}

// centric in P: C_P(Q) = Z(Q)
inline bool is_centric(const PermGroup& p_group, const PermGroup& q) {
    std::vector<Permutation> center;
    for (const auto& x : q.elements()) {
        bool commutes = true;
        for (const auto& y : q.generators())
            if (x * y != y * x) {
                commutes = false;
                break;
            }
        if (commutes) center.push_back(x);
    }
    std::vector<Permutation> cp;
    for (const auto& x : p_group.elements()) {
        bool commutes = true;
        for (const auto& y : q.generators())
            if (x * y != y * x) {
                commutes = false;
                break;
            }
        if (commutes) cp.push_back(x);
    }
    return center == cp;
}

struct CentricSubgroup {
    PermGroup q;
    std::string gens_label;
};

inline std::string generator_label(const PermGroup& g) {
    std::ostringstream os;
    const auto& gens = g.generators();
    if (gens.empty()) return "()";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ' ';
        os << format_cycles(gens[i]);
    }
    return os.str();
}

// centric subgroups of P up to P-conjugacy, ordered by descending order and
// then by generator label
inline std::vector<CentricSubgroup> centric_subgroups(const PermGroup& p_group, unsigned p,
                                                      std::uint64_t sylow_cap = kDefaultSylowCap) {
    SubgroupCatalog cat = subgroup_catalog(p_group, p, sylow_cap);
    mark_conjugacy(cat, p_group);
    std::vector<CentricSubgroup> out;
    for (std::size_t i = 0; i < cat.subgroups.size(); ++i) {
        if (!cat.is_rep[i]) continue;
        if (!is_centric(p_group, cat.subgroups[i])) continue;
        out.push_back(CentricSubgroup{cat.subgroups[i], generator_label(cat.subgroups[i])});
    }
    std::sort(out.begin(), out.end(), [](const CentricSubgroup& a, const CentricSubgroup& b) {
        if (a.q.order() != b.q.order()) return a.q.order() > b.q.order();
        return a.gens_label < b.gens_label;
    });
    return out;
}

// the per-centric-subgroup automorphism data that pins a fusion system down
struct FusionFingerprint {
    std::vector<CentricSubgroup> centrics;
    std::vector<AutSet> auts;

    bool operator==(const FusionFingerprint& rhs) const { return auts == rhs.auts; }
};

// fusion system of a group H on P: Aut_H(Q) at each centric representative
inline FusionFingerprint fingerprint_group(const PermGroup& h, const std::vector<CentricSubgroup>& centrics) {
    FusionFingerprint fp;
    fp.centrics = centrics;
    for (const auto& c : centrics) fp.auts.push_back(aut_in(h, c.q));
    return fp;
}

// block fusion system: automorphisms induced by elements that normalize Q
// and fix the unique subpair (Q, f) below the maximal pair
inline AutSet aut_block(BlockSession& session, const BrauerPair& maximal, const CentricSubgroup& c) {
    BrauerPair sub = session.restrict_pair(maximal.q, maximal.f, c.q);
    const AlgebraContext& ctx = session.centralizer_context(c.q);
    AutSet out;
    out.domain = c.q.elements();
    for (const auto& g : session.group().elements()) {
        if (!detail::normalizes(c.q, g)) continue;
        if (session.conjugate_central(ctx, sub.f, g) != sub.f) continue;
        out.maps.insert(detail::induced_map(out.domain, g));
    }
    return out;
}

inline FusionFingerprint fingerprint_block(BlockSession& session, const Block& e,
                                           const std::vector<CentricSubgroup>& centrics) {
    BrauerPair maximal = session.maximal_pair(e);
    FusionFingerprint fp;
    fp.centrics = centrics;
    for (const auto& c : centrics) fp.auts.push_back(aut_block(session, maximal, c));
    return fp;
}

enum class FusionVerdict { S_M, A_M, A_L, falsified };

inline std::string verdict_name(FusionVerdict v) {
    switch (v) {
        case FusionVerdict::S_M: return "S_M";
        case FusionVerdict::A_M: return "A_M";
        case FusionVerdict::A_L: return "A_L";
        default: return "FALSIFIED";
    }
}

struct IdentifyResult {
    FusionVerdict verdict = FusionVerdict::falsified;
    std::vector<int> moved_set;           // M, 0-based
    std::vector<int> extended_set;        // L, 0-based; only for an A_L verdict
    std::vector<int> pairs_per_centric;
    std::string witness;                  // mismatch description on falsification
    FusionFingerprint block_fp;
    FusionFingerprint group_fp;           // the fingerprint that matched (or S_M on falsification)
};

namespace detail {

inline std::string describe_mismatch(const FusionFingerprint& a, const FusionFingerprint& b) {
    for (std::size_t i = 0; i < a.auts.size(); ++i) {
        if (a.auts[i] == b.auts[i]) continue;
        std::ostringstream os;
        os << "Aut mismatch at Q = <" << a.centrics[i].gens_label << ">: block has " << a.auts[i].size()
           << " maps, group has " << b.auts[i].size();
        return os.str();
    }
    return "fingerprints agree";
}

}  // namespace detail

// Matches the block fusion system against the group fusion systems of the
// symmetric / alternating groups on the points moved by the defect group.
// Symmetric contexts must match S_M; alternating ones match A_M (always, at
// p = 2) or S_M, and an S_M match is re-derived as A_L on two extra points.
inline IdentifyResult identify(BlockSession& session, const Block& e) {
    if (!e.defect) throw std::invalid_argument("identify needs a computed defect group");
    const PermGroup& g = session.group();
    if (g.kind() != GroupKind::symmetric && g.kind() != GroupKind::alternating)
        throw std::invalid_argument("identify applies to symmetric and alternating contexts");

    const PermGroup& p_group = *e.defect;
    int n = g.degree();
    IdentifyResult res;
    res.moved_set = e.moved_set;

    auto centrics = centric_subgroups(p_group, session.prime(), session.config().sylow_cap);
    res.block_fp = fingerprint_block(session, e, centrics);
    for (const auto& c : centrics) {
        Block probe = e;
        res.pairs_per_centric.push_back(session.count_pairs_at(c.q, probe));
    }

    FusionFingerprint sm_fp = fingerprint_group(PermGroup::symmetric_on(e.moved_set, n), centrics);

    if (g.kind() == GroupKind::symmetric) {
        if (res.block_fp == sm_fp) {
            res.verdict = FusionVerdict::S_M;
            res.group_fp = std::move(sm_fp);
        } else {
            res.verdict = FusionVerdict::falsified;
            res.witness = detail::describe_mismatch(res.block_fp, sm_fp);
            res.group_fp = std::move(sm_fp);
        }
        return res;
    }

    FusionFingerprint am_fp = fingerprint_group(PermGroup::alternating_on(e.moved_set, n), centrics);
    if (res.block_fp == am_fp) {
        res.verdict = FusionVerdict::A_M;
        res.group_fp = std::move(am_fp);
        return res;
    }
    if (session.prime() == 2) {
        res.verdict = FusionVerdict::falsified;
        res.witness = "p = 2 alternating block does not match A_M: " +
                      detail::describe_mismatch(res.block_fp, am_fp);
        res.group_fp = std::move(am_fp);
        return res;
    }
    if (res.block_fp == sm_fp) {
        // rebuild as an alternating fusion system on M plus two spare points
        std::vector<char> in_m(n, 0);
        for (int x : e.moved_set) in_m[x] = 1;
        std::vector<int> l_set = e.moved_set;
        for (int x = 0; x < n && l_set.size() < e.moved_set.size() + 2; ++x)
            if (!in_m[x]) l_set.push_back(x);
        std::sort(l_set.begin(), l_set.end());
        if (l_set.size() != e.moved_set.size() + 2)
            throw internal_error("identify: no two spare points available for the A_L construction");
        FusionFingerprint al_fp = fingerprint_group(PermGroup::alternating_on(l_set, n), centrics);
        if (res.block_fp == al_fp) {
            res.verdict = FusionVerdict::A_L;
            res.extended_set = std::move(l_set);
            res.group_fp = std::move(al_fp);
        } else {
            res.verdict = FusionVerdict::falsified;
            res.witness = "S_M matched but A_L did not: " + detail::describe_mismatch(res.block_fp, al_fp);
            res.group_fp = std::move(al_fp);
        }
        return res;
    }
    res.verdict = FusionVerdict::falsified;
    res.witness = "block fusion system matches neither A_M nor S_M: " +
                  detail::describe_mismatch(res.block_fp, am_fp);
    res.group_fp = std::move(am_fp);
    return res;
}

}  // namespace blockfuse
