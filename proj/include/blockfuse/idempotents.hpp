#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <vector>

#include "blockfuse/algebra.hpp"
#include "blockfuse/matrix.hpp"
#include "blockfuse/poly.hpp"

namespace blockfuse {

struct IdempotentDecomposition {
    std::vector<CentralElement> idempotents;
    std::vector<unsigned> residue_degrees;  // over the context field, per idempotent
    bool primitive_certified = false;
};

namespace detail {

struct Component {
    CentralElement identity;
    std::vector<CentralElement> basis;
};

inline bool central_less(const CentralElement& a, const CentralElement& b) { return a.coeff < b.coeff; }

// h(z) * e evaluated in the center by Horner
inline CentralElement eval_at(const AlgebraContext& ctx, const Poly& h, const CentralElement& z,
                              const CentralElement& e) {
    CentralElement acc = ctx.zero();
    for (int d = h.degree(); d >= 0; --d) {
        acc = ctx.mul(acc, z);
        acc = ctx.add(acc, ctx.scale(e, h.c[d]));
    }
    return acc;
}

inline std::vector<CentralElement> ideal_basis(const AlgebraContext& ctx, const CentralElement& e) {
    RowSpace space(ctx.field(), ctx.dim());
    std::vector<CentralElement> basis;
    for (int l = 0; l < ctx.dim(); ++l) {
        CentralElement prod = ctx.mul(e, ctx.class_sum(l));
        if (space.insert(prod.coeff)) basis.push_back(std::move(prod));
    }
    return basis;
}

}  // namespace detail

// Decomposition of Z(kG) into primitive idempotents. Each component is split
// along the factored minimal polynomial of a basis element acting on it,
// using the CRT element that is one modulo a primary factor and zero modulo
// the rest; a component on which every basis element has a prime-power
// minimal polynomial is local and its identity is primitive. The residue
// degree of a local component is the lcm of the irreducible degrees seen.
inline IdempotentDecomposition primitive_idempotents(const AlgebraContext& ctx, std::uint64_t seed = 1,
                                                     const std::vector<int>* visit_order = nullptr) {
    const FieldSpec& k = ctx.field();
    int dim = ctx.dim();
    std::vector<int> order(dim);
    for (int i = 0; i < dim; ++i) order[i] = i;
    if (visit_order) order = *visit_order;

    std::deque<detail::Component> queue;
    {
        detail::Component whole;
        whole.identity = ctx.one();
        whole.basis.reserve(dim);
        for (int l = 0; l < dim; ++l) whole.basis.push_back(ctx.class_sum(l));
        queue.push_back(std::move(whole));
    }

    IdempotentDecomposition out;
    while (!queue.empty()) {
        detail::Component comp = std::move(queue.front());
        queue.pop_front();
        int cdim = static_cast<int>(comp.basis.size());

        RowSpace coords(k, dim);
        for (const auto& b : comp.basis) coords.insert(b.coeff);

        bool split_done = false;
        unsigned residue = 1;
        for (int z_idx : order) {
            CentralElement z = ctx.class_sum(z_idx);
            Matrix action = Matrix::zero(k, cdim, cdim);
            for (int j = 0; j < cdim; ++j) {
                CentralElement prod = ctx.mul(z, comp.basis[j]);
                auto c = coords.coordinates(prod.coeff);
                if (!c) throw internal_error("component is not closed under central multiplication");
                for (int r = 0; r < cdim; ++r) action.at(r, j) = (*c)[r];
            }
            Poly mu = min_poly(k, action);
            FactorResult fac = factor(k, mu, seed);
            if (fac.factors.size() == 1) {
                residue = std::lcm(residue, static_cast<unsigned>(fac.factors[0].first.degree()));
                continue;
            }
            // split along the primary decomposition of mu
            for (const auto& [f, mult] : fac.factors) {
                Poly primary = poly_one(k);
                for (unsigned t = 0; t < mult; ++t) primary = poly_mul(k, primary, f);
                Poly rest = poly_div(k, mu, primary);
                auto [g, u, v] = poly_xgcd(k, primary, rest);
                if (!poly_is_one(k, g)) throw internal_error("primary factors are not coprime");
                Poly h = poly_mod(k, poly_mul(k, v, rest), mu);  // 1 mod primary, 0 mod rest
                CentralElement e_i = detail::eval_at(ctx, h, z, comp.identity);
                if (ctx.is_zero(e_i)) throw internal_error("split produced a zero idempotent");
                detail::Component child;
                child.identity = e_i;
                RowSpace childspace(k, dim);
                for (const auto& b : comp.basis) {
                    CentralElement prod = ctx.mul(e_i, b);
                    if (childspace.insert(prod.coeff)) child.basis.push_back(std::move(prod));
                }
                queue.push_back(std::move(child));
            }
            split_done = true;
            break;
        }
        if (!split_done) {
            out.idempotents.push_back(comp.identity);
            out.residue_degrees.push_back(residue);
        }
    }

    // deterministic order: first supported class, then the coefficients
    std::vector<int> perm(out.idempotents.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    auto first_support = [&](const CentralElement& e) {
        for (int l = 0; l < dim; ++l)
            if (!fe_is_zero(e.coeff[l])) return l;
        return dim;
    };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        int fa = first_support(out.idempotents[a]);
        int fb = first_support(out.idempotents[b]);
        if (fa != fb) return fa < fb;
        return detail::central_less(out.idempotents[a], out.idempotents[b]);
    });
    IdempotentDecomposition sorted;
    for (int i : perm) {
        sorted.idempotents.push_back(std::move(out.idempotents[i]));
        sorted.residue_degrees.push_back(out.residue_degrees[i]);
    }
    sorted.primitive_certified = true;
    return sorted;
}

// orthogonality, completeness and idempotency of a decomposition; returns an
// empty string on success and a witness otherwise
inline std::string check_decomposition(const AlgebraContext& ctx, const std::vector<CentralElement>& es) {
    CentralElement sum = ctx.zero();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (ctx.is_zero(es[i])) return "idempotent " + std::to_string(i) + " is zero";
        if (ctx.mul(es[i], es[i]) != es[i]) return "e_" + std::to_string(i) + " is not idempotent";
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!ctx.is_zero(ctx.mul(es[i], es[j])))
                return "e_" + std::to_string(i) + " * e_" + std::to_string(j) + " != 0";
        sum = ctx.add(sum, es[i]);
    }
    if (sum != ctx.one()) return "idempotents do not sum to 1";
    return "";
}

// Exhaustive search for the primitive solutions of e^2 = e. When the center
// is too large to scan directly, the scan runs inside the image of the
// iterated Frobenius x -> x^(p^T) with p^T >= dim: every idempotent satisfies
// e = e^(p^T), so the image subspace still contains them all.
inline std::optional<std::vector<CentralElement>> brute_force_primitive_idempotents(
    const AlgebraContext& ctx, std::uint64_t budget = std::uint64_t(1) << 22) {
    const FieldSpec& k = ctx.field();
    int dim = ctx.dim();
    std::vector<std::vector<FieldElement>> basis;

    auto card_pow = [&](int e) -> std::optional<std::uint64_t> {
        std::uint64_t v = 1;
        for (int i = 0; i < e; ++i) {
            if (v > budget) return std::nullopt;
            v *= k.card();
        }
        if (v > budget) return std::nullopt;
        return v;
    };

    if (auto total = card_pow(dim)) {
        for (int l = 0; l < dim; ++l) basis.push_back(ctx.class_sum(l).coeff);
    } else {
        unsigned t = 0;
        while (p_power_value(k.p, t) < static_cast<std::uint64_t>(dim)) ++t;
        std::uint64_t frob = p_power_value(k.p, t);
        RowSpace space(k, dim);
        for (int l = 0; l < dim; ++l) {
            CentralElement img = ctx.pow(ctx.class_sum(l), frob);
            if (space.insert(img.coeff)) basis.push_back(img.coeff);
        }
        if (!card_pow(static_cast<int>(basis.size()))) return std::nullopt;
    }

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= k.card();

    std::vector<CentralElement> idempotents;
    for (std::uint64_t code = 0; code < total; ++code) {
        CentralElement e = ctx.zero();
        std::uint64_t v = code;
        for (const auto& b : basis) {
            FieldElement s = fe_from_index(k, v % k.card());
            v /= k.card();
            if (!fe_is_zero(s))
                for (int l = 0; l < dim; ++l) e.coeff[l] = fe_add(k, e.coeff[l], fe_mul(k, s, b[l]));
        }
        if (ctx.mul(e, e) == e) idempotents.push_back(std::move(e));
    }

    std::vector<CentralElement> primitive;
    for (const auto& e : idempotents) {
        if (ctx.is_zero(e)) continue;
        bool prim = true;
        for (const auto& f : idempotents) {
            if (ctx.is_zero(f) || f == e) continue;
            if (ctx.mul(e, f) == f) {
                prim = false;
                break;
            }
        }
        if (prim) primitive.push_back(e);
    }
    std::sort(primitive.begin(), primitive.end(), detail::central_less);
    return primitive;
}

}  // namespace blockfuse
