#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "blockfuse/gf.hpp"
#include "blockfuse/perm_group.hpp"
#include "blockfuse/permutation.hpp"

namespace blockfuse {

// element of Z(kG) on the class-sum basis
struct CentralElement {
    std::vector<FieldElement> coeff;

    bool operator==(const CentralElement&) const = default;
};

// sparse element of kG; absent permutations have coefficient zero
using AlgebraElement = std::map<Permutation, FieldElement>;

// The group algebra kG of one group over one field at one prime: the class
// table, the q = p-regular exponent, and the integer structure constants
// N_ij^l with sum_C_i * sum_C_j = sum_l N_ij^l * sum_C_l. The constants are
// exact integers, computed once and reduced into whatever field is in play.
class AlgebraContext {
public:
    AlgebraContext(PermGroup group, unsigned p, FieldSpec field)
        : group_(std::move(group)), p_(p), field_(std::move(field)) {
        if (!is_prime(p_)) throw std::invalid_argument("p must be prime");
        if (field_.p != p_) throw std::invalid_argument("field characteristic must equal p");
        q_ = p_regular_exponent(group_.order(), p_);
    }

    const PermGroup& group() const { return group_; }
    unsigned prime() const { return p_; }
    const FieldSpec& field() const { return field_; }
    PPower q() const { return q_; }
    int dim() const { return static_cast<int>(group_.classes().size()); }

    CentralElement zero() const { return CentralElement{std::vector<FieldElement>(dim(), fe_zero(field_))}; }

    CentralElement class_sum(int class_index) const {
        CentralElement e = zero();
        e.coeff.at(class_index) = fe_one(field_);
        return e;
    }

    CentralElement one() const {
        if (!group_.classes()[0].rep.is_identity()) throw internal_error("identity class is not first");
        return class_sum(0);
    }

    CentralElement add(const CentralElement& a, const CentralElement& b) const {
        CentralElement r = a;
        for (int i = 0; i < dim(); ++i) r.coeff[i] = fe_add(field_, r.coeff[i], b.coeff[i]);
        return r;
    }

    CentralElement sub(const CentralElement& a, const CentralElement& b) const {
        CentralElement r = a;
        for (int i = 0; i < dim(); ++i) r.coeff[i] = fe_sub(field_, r.coeff[i], b.coeff[i]);
        return r;
    }

    CentralElement scale(const CentralElement& a, const FieldElement& s) const {
        CentralElement r = a;
        for (auto& x : r.coeff) x = fe_mul(field_, x, s);
        return r;
    }

    bool is_zero(const CentralElement& a) const {
        for (const auto& x : a.coeff)
            if (!fe_is_zero(x)) return false;
        return true;
    }

    // exact integer count N_ij^l
    std::int64_t structure_constant(int i, int j, int l) const {
        ensure_constants();
        return cube_[(static_cast<std::size_t>(i) * dim() + j) * dim() + l];
    }

    CentralElement mul(const CentralElement& u, const CentralElement& v) const {
        ensure_constants();
        int d = dim();
        CentralElement w = zero();
        for (int i = 0; i < d; ++i) {
            if (fe_is_zero(u.coeff[i])) continue;
            for (int j = 0; j < d; ++j) {
                if (fe_is_zero(v.coeff[j])) continue;
                FieldElement uv = fe_mul(field_, u.coeff[i], v.coeff[j]);
                const std::int64_t* row = &cube_[(static_cast<std::size_t>(i) * d + j) * d];
                for (int l = 0; l < d; ++l) {
                    std::int64_t n = row[l];
                    if (n % p_ == 0) continue;
                    w.coeff[l] = fe_add(field_, w.coeff[l], fe_scale(field_, uv, static_cast<std::uint64_t>(n % p_)));
                }
            }
        }
        return w;
    }

    CentralElement pow(CentralElement base, std::uint64_t e) const {
        CentralElement acc = one();
        while (e != 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    CentralElement pow(const CentralElement& base, PPower q) const { return pow(base, q.value()); }

    FieldElement coefficient_of(const CentralElement& u, const Permutation& g) const {
        return u.coeff[group_.class_index_of(g)];
    }

    AlgebraElement expand(const CentralElement& u) const {
        AlgebraElement out;
        for (int l = 0; l < dim(); ++l) {
            if (fe_is_zero(u.coeff[l])) continue;
            for (const auto& g : group_.class_elements(l)) out[g] = u.coeff[l];
        }
        return out;
    }

    // inverse of expand; rejects non-central input
    CentralElement contract(const AlgebraElement& a) const {
        CentralElement u = zero();
        std::vector<std::size_t> hits(dim(), 0);
        for (const auto& [g, c] : a) {
            int l = group_.class_index_of(g);
            if (hits[l] == 0) {
                u.coeff[l] = c;
            } else if (u.coeff[l] != c) {
                throw internal_error("contract: element is not constant on classes");
            }
            ++hits[l];
        }
        for (int l = 0; l < dim(); ++l)
            if (hits[l] != 0 && hits[l] != group_.class_elements(l).size())
                throw internal_error("contract: class support is incomplete");
        return u;
    }

    // class labels, disambiguated when a cycle type repeats (generic groups)
    std::vector<std::string> class_labels() const {
        const auto& cls = group_.classes();
        std::vector<std::string> labels;
        std::map<std::string, int> used;
        for (const auto& c : cls) {
            std::string base = c.label();
            int n = ++used[base];
            labels.push_back(n == 1 ? base : base + "#" + std::to_string(n));
        }
        return labels;
    }

    bool constants_ready() const { return have_cube_; }

    const std::vector<std::int64_t>& constants() const {
        ensure_constants();
        return cube_;
    }

    // install externally cached constants (validated by shape only; the
    // cache layer checks the key)
    void install_constants(std::vector<std::int64_t> cube) {
        std::size_t d = static_cast<std::size_t>(dim());
        if (cube.size() != d * d * d) throw std::invalid_argument("structure constant cube has wrong size");
        cube_ = std::move(cube);
        have_cube_ = true;
    }

private:
    void ensure_constants() const {
        if (have_cube_) return;
        int d = dim();
        cube_.assign(static_cast<std::size_t>(d) * d * d, 0);
        const auto& elems = group_.elements();
        for (int l = 0; l < d; ++l) {
            const Permutation& z = group_.classes()[l].rep;
            for (const auto& x : elems) {
                int i = group_.class_index_of(x);
                int j = group_.class_index_of(x.inverse() * z);
                cube_[(static_cast<std::size_t>(i) * d + j) * d + l] += 1;
            }
        }
        have_cube_ = true;
    }

    PermGroup group_;
    unsigned p_;
    FieldSpec field_;
    PPower q_;
    mutable bool have_cube_ = false;
    mutable std::vector<std::int64_t> cube_;
};

// direct sparse product in kG; the oracle route for central multiplication
inline AlgebraElement sparse_mul(const FieldSpec& k, const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [g, cg] : a) {
        for (const auto& [h, ch] : b) {
            Permutation gh = g * h;
            FieldElement c = fe_mul(k, cg, ch);
            auto it = out.find(gh);
            if (it == out.end())
                out.emplace(std::move(gh), std::move(c));
            else
                it->second = fe_add(k, it->second, c);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (fe_is_zero(it->second))
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

// plain e-fold product, deliberately naive
inline AlgebraElement sparse_pow(const FieldSpec& k, int degree, const AlgebraElement& a, std::uint64_t e) {
    AlgebraElement acc = {{Permutation::identity(degree), fe_one(k)}};
    for (std::uint64_t i = 0; i < e; ++i) acc = sparse_mul(k, acc, a);
    return acc;
}

}  // namespace blockfuse
