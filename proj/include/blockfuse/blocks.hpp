#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "blockfuse/algebra.hpp"
#include "blockfuse/idempotents.hpp"
#include "blockfuse/perm_group.hpp"
#include "blockfuse/subgroups.hpp"
#include "blockfuse/sylow.hpp"

namespace blockfuse {

struct Block {
    int index = 0;
    CentralElement idempotent;
    unsigned residue_degree = 1;
    // filled on demand by defect-group computation
    std::optional<PermGroup> defect;
    std::vector<int> moved_set;  // M: points moved by the defect group, 0-based
};

struct BrauerPair {
    PermGroup q;
    CentralElement f;  // block idempotent of kC_G(Q), in the centralizer's context
};

// control-flow signal: the current field does not split some context
struct escalate_field {
    unsigned new_m;
};

struct SessionConfig {
    std::uint64_t seed = 1;
    unsigned forced_field_degree = 0;  // 0 = automatic escalation
    std::uint64_t order_cap = kDefaultOrderCap;
    std::uint64_t sylow_cap = kDefaultSylowCap;
};

// One (G, p) computation: the group algebra context of G, the contexts of
// the centralizers kC_G(Q) that Brauer machinery touches, their block
// decompositions, and one shared coefficient field. Whenever a decomposition
// reports a residue degree above 1, the session escalates the field to the
// lcm and recomputes; run() wraps a computation in that retry loop.
//
// Group-structure data (class tables, integer structure constants, subgroup
// catalogs) is field-independent and survives escalation.
class BlockSession {
public:
    BlockSession(PermGroup g, unsigned p, SessionConfig cfg = {})
        : g_(std::move(g)), p_(p), cfg_(cfg) {
        if (!is_prime(p)) throw std::invalid_argument("p must be prime");
        field_m_ = cfg_.forced_field_degree ? cfg_.forced_field_degree : 1;
        field_ = make_field(p_, field_m_);
    }

    const PermGroup& group() const { return g_; }
    unsigned prime() const { return p_; }
    const FieldSpec& field() const { return field_; }
    unsigned field_degree() const { return field_m_; }
    std::uint64_t seed() const { return cfg_.seed; }
    const SessionConfig& config() const { return cfg_; }

    template <class F>
    auto run(F&& f) {
        for (;;) {
            try {
                return f();
            } catch (const escalate_field& e) {
                set_field_degree(e.new_m);
            }
        }
    }

    const AlgebraContext& context() {
        if (!main_) main_ = std::make_shared<AlgebraContext>(g_, p_, field_);
        return *main_;
    }

    AlgebraContext& mutable_context() {
        context();
        return *main_;
    }

    // block idempotents of kG over the session field
    const std::vector<Block>& blocks() {
        if (!blocks_) blocks_ = decompose(context());
        return *blocks_;
    }

    // structural Sylow subgroup of G for the canonical kinds, generic otherwise
    const PermGroup& sylow_subgroup() {
        if (!sylow_) {
            switch (g_.kind()) {
                case GroupKind::symmetric: sylow_ = sylow_symmetric(g_.degree(), p_, cfg_.order_cap); break;
                case GroupKind::alternating: sylow_ = sylow_alternating(g_.degree(), p_, cfg_.order_cap); break;
                default: sylow_ = g_.sylow(p_); break;
            }
        }
        return *sylow_;
    }

    const SubgroupCatalog& catalog() {
        if (!catalog_) {
            catalog_ = subgroup_catalog(sylow_subgroup(), p_, cfg_.sylow_cap);
            mark_conjugacy(*catalog_, g_);
        }
        return *catalog_;
    }

    const PermGroup& centralizer_of(const PermGroup& q) {
        auto key = q.elements();
        auto it = cent_groups_.find(key);
        if (it == cent_groups_.end())
            it = cent_groups_.emplace(std::move(key), g_.centralizer_of(q)).first;
        return it->second;
    }

    const AlgebraContext& centralizer_context(const PermGroup& q) {
        return centralizer_entry(q).ctx();
    }

    const std::vector<Block>& centralizer_blocks(const PermGroup& q) {
        auto& e = centralizer_entry(q);
        if (!e.blocks) e.blocks = decompose(e.ctx());
        return *e.blocks;
    }

    // Brauer truncation Br_P: restrict the support of an element of kC_G(Q)
    // to C_G(P). The source must contain the target centralizer, i.e. the
    // element must live over a subgroup of P.
    CentralElement brauer(const AlgebraContext& source, const CentralElement& u, const PermGroup& p_sub) {
        const AlgebraContext& target = centralizer_context(p_sub);
        const auto& pgens = p_sub.generators();
        AlgebraElement truncated;
        for (int l = 0; l < source.dim(); ++l) {
            if (fe_is_zero(u.coeff[l])) continue;
            for (const auto& g : source.group().class_elements(l)) {
                bool central = true;
                for (const auto& x : pgens)
                    if (g * x != x * g) {
                        central = false;
                        break;
                    }
                if (central) truncated[g] = u.coeff[l];
            }
        }
        return target.contract(truncated);
    }

    CentralElement brauer_from_main(const CentralElement& u, const PermGroup& p_sub) {
        return brauer(context(), u, p_sub);
    }

    // f^x inside kC_G(Q), for x normalizing Q
    CentralElement conjugate_central(const AlgebraContext& ctx, const CentralElement& f, const Permutation& x) {
        CentralElement out = ctx.zero();
        for (int l = 0; l < ctx.dim(); ++l) {
            if (fe_is_zero(f.coeff[l])) continue;
            int lx = ctx.group().class_index_of(ctx.group().classes()[l].rep.conjugated(x));
            out.coeff[lx] = fe_add(ctx.field(), out.coeff[lx], f.coeff[l]);
        }
        return out;
    }

    // f in (kC_G(Q))^P: invariance under the generators of P; Q must be
    // normal in P
    bool p_stable(const CentralElement& f, const PermGroup& q, const PermGroup& p_sub) {
        for (const auto& x : p_sub.generators())
            for (const auto& qg : q.generators())
                if (!q.contains(qg.conjugated(x)))
                    throw std::invalid_argument("p_stable: Q is not normal in P");
        const AlgebraContext& ctx = centralizer_context(q);
        for (const auto& x : p_sub.generators())
            if (conjugate_central(ctx, f, x) != f) return false;
        return true;
    }

    // (Q, f) is associated to the block e iff f appears in the block
    // decomposition of Br_Q(e), i.e. Br_Q(e) * f = f
    bool associated(const PermGroup& q, const CentralElement& f, const Block& e) {
        const AlgebraContext& ctx = centralizer_context(q);
        CentralElement br = brauer_from_main(e.idempotent, q);
        return ctx.mul(br, f) == f;
    }

    int count_pairs_at(const PermGroup& q, const Block& e) {
        const AlgebraContext& ctx = centralizer_context(q);
        CentralElement br = brauer_from_main(e.idempotent, q);
        int count = 0;
        for (const auto& f : centralizer_blocks(q))
            if (ctx.mul(br, f.idempotent) == f.idempotent) ++count;
        return count;
    }

    // unique subpair (Q, f) <= (P, e_P), found by descending the normalizer
    // chain Q <| N_P(Q) <| ... <| P and selecting at each step the one block
    // that is stable and maps onto the pair above
    BrauerPair restrict_pair(const PermGroup& p_sub, const CentralElement& e_p, const PermGroup& q) {
        if (!q.is_subgroup_of(p_sub)) throw std::invalid_argument("restrict_pair: Q must lie in P");
        std::vector<PermGroup> chain = {q};
        while (chain.back().order() < p_sub.order()) chain.push_back(p_sub.normalizer(chain.back()));

        CentralElement cur = e_p;
        for (int step = static_cast<int>(chain.size()) - 2; step >= 0; --step) {
            const PermGroup& q_low = chain[step];
            const PermGroup& p_high = chain[step + 1];
            const AlgebraContext& high_ctx = centralizer_context(p_high);
            std::optional<CentralElement> pick;
            for (const auto& f : centralizer_blocks(q_low)) {
                if (!p_stable(f.idempotent, q_low, p_high)) continue;
                CentralElement br = brauer(centralizer_context(q_low), f.idempotent, p_high);
                if (high_ctx.mul(br, cur) == cur) {
                    if (pick) throw internal_error("restrict_pair: two blocks both restrict onto the pair");
                    pick = f.idempotent;
                }
            }
            if (!pick) throw internal_error("restrict_pair: no block restricts onto the pair");
            cur = std::move(*pick);
        }
        return BrauerPair{q, cur};
    }

    // Br_Q(e) != 0, decided on the support without building kC_G(Q)
    bool brauer_nonzero(const Block& e, const PermGroup& q) {
        const AlgebraContext& ctx = context();
        const auto& qgens = q.generators();
        for (int l = 0; l < ctx.dim(); ++l) {
            if (fe_is_zero(e.idempotent.coeff[l])) continue;
            for (const auto& g : ctx.group().class_elements(l)) {
                bool central = true;
                for (const auto& x : qgens)
                    if (g * x != x * g) {
                        central = false;
                        break;
                    }
                if (central) return true;
            }
        }
        return false;
    }

    // Defect group: a maximal member of the catalog with Br_Q(e) != 0. All
    // maximal members must be conjugate; the representative returned is the
    // one with the least element list, and e.moved_set records its support.
    void fill_defect(Block& e) {
        const SubgroupCatalog& cat = catalog();
        std::vector<int> alive;
        for (std::size_t i = 0; i < cat.subgroups.size(); ++i)
            if (brauer_nonzero(e, cat.subgroups[i])) alive.push_back(static_cast<int>(i));
        std::vector<int> maximal;
        for (int i : alive) {
            bool top = true;
            for (int j : alive) {
                if (i == j) continue;
                if (cat.subgroups[j].order() > cat.subgroups[i].order() &&
                    cat.subgroups[i].is_subgroup_of(cat.subgroups[j])) {
                    top = false;
                    break;
                }
            }
            if (top) maximal.push_back(i);
        }
        if (maximal.empty()) throw internal_error("defect: no subgroup with nonzero Brauer image");
        for (std::size_t t = 1; t < maximal.size(); ++t)
            if (!conjugating_element(g_, cat.subgroups[maximal[0]], cat.subgroups[maximal[t]]))
                throw internal_error("defect: maximal Brauer-positive subgroups are not all conjugate (block " +
                                     std::to_string(e.index) + ")");
        int best = maximal[0];
        for (int i : maximal)
            if (cat.subgroups[i].elements() < cat.subgroups[best].elements()) best = i;
        e.defect = cat.subgroups[best];
        e.moved_set = e.defect->moved_points();
    }

    const std::vector<Block>& blocks_with_defect() {
        blocks();
        if (!defect_filled_) {
            for (auto& b : *blocks_) fill_defect(b);
            defect_filled_ = true;
        }
        return *blocks_;
    }

    // maximal Brauer pair over a block: (P, e_P) with P the defect group
    BrauerPair maximal_pair(const Block& e) {
        if (!e.defect) throw std::invalid_argument("maximal_pair needs a computed defect group");
        const PermGroup& p_sub = *e.defect;
        const AlgebraContext& ctx = centralizer_context(p_sub);
        CentralElement br = brauer_from_main(e.idempotent, p_sub);
        for (const auto& f : centralizer_blocks(p_sub))
            if (ctx.mul(br, f.idempotent) == f.idempotent) return BrauerPair{p_sub, f.idempotent};
        throw internal_error("maximal_pair: Brauer image contains no block of the centralizer");
    }

private:
    struct CtxEntry {
        std::shared_ptr<AlgebraContext> context;
        std::optional<std::vector<Block>> blocks;

        const AlgebraContext& ctx() const { return *context; }
    };

    void set_field_degree(unsigned m) {
        field_m_ = m;
        field_ = make_field(p_, m);
        // keep integer structure constants; rebuild the field-dependent parts
        std::map<std::vector<Permutation>, CtxEntry> fresh;
        for (auto& [key, entry] : sub_entries_) {
            auto ctx = std::make_shared<AlgebraContext>(entry.context->group(), p_, field_);
            if (entry.context->constants_ready()) ctx->install_constants(entry.context->constants());
            fresh.emplace(key, CtxEntry{std::move(ctx), std::nullopt});
        }
        sub_entries_ = std::move(fresh);
        if (main_) {
            auto ctx = std::make_shared<AlgebraContext>(main_->group(), p_, field_);
            if (main_->constants_ready()) ctx->install_constants(main_->constants());
            main_ = std::move(ctx);
        }
        blocks_.reset();
        defect_filled_ = false;
    }

    std::vector<Block> decompose(const AlgebraContext& ctx) {
        IdempotentDecomposition dec = primitive_idempotents(ctx, cfg_.seed);
        if (cfg_.forced_field_degree == 0) {
            unsigned need = 1;
            for (unsigned d : dec.residue_degrees) need = std::lcm(need, d);
            if (need > 1) throw escalate_field{field_m_ * need};
        }
        std::vector<Block> out;
        for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
            Block b;
            b.index = static_cast<int>(i);
            b.idempotent = dec.idempotents[i];
            b.residue_degree = dec.residue_degrees[i];
            out.push_back(std::move(b));
        }
        return out;
    }

    CtxEntry& centralizer_entry(const PermGroup& q) {
        auto key = q.elements();
        auto it = sub_entries_.find(key);
        if (it == sub_entries_.end()) {
            const PermGroup& c = centralizer_of(q);
            auto ctx = std::make_shared<AlgebraContext>(c, p_, field_);
            it = sub_entries_.emplace(std::move(key), CtxEntry{std::move(ctx), std::nullopt}).first;
        }
        return it->second;
    }

    PermGroup g_;
    unsigned p_;
    SessionConfig cfg_;
    unsigned field_m_ = 1;
    FieldSpec field_;

    std::shared_ptr<AlgebraContext> main_;
    std::optional<std::vector<Block>> blocks_;
    bool defect_filled_ = false;
    std::optional<PermGroup> sylow_;
    std::optional<SubgroupCatalog> catalog_;
    std::map<std::vector<Permutation>, PermGroup> cent_groups_;
    std::map<std::vector<Permutation>, CtxEntry> sub_entries_;
};

}  // namespace blockfuse
