#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "blockfuse/common.hpp"
#include "blockfuse/perm_group.hpp"

namespace blockfuse {

struct SubgroupCatalog {
    std::vector<PermGroup> subgroups;  // order ascending, then by element list
    std::vector<int> conj_class;       // partition under ambient-group conjugacy (-1 if unmarked)
    std::vector<char> is_rep;

    int find(const std::vector<Permutation>& elements) const {
        for (std::size_t i = 0; i < subgroups.size(); ++i)
            if (subgroups[i].elements() == elements) return static_cast<int>(i);
        return -1;
    }
};

// All subgroups of a p-group S by cyclic extension: every subgroup Q grows by
// adjoining some x in N_S(Q) with x^p in Q, so a breadth-first sweep from the
// trivial group reaches everything.
inline SubgroupCatalog subgroup_catalog(const PermGroup& s, unsigned p,
                                        std::uint64_t sylow_cap = kDefaultSylowCap) {
    if (s.order() > sylow_cap) throw cap_exceeded("subgroup catalog: group exceeds the sylow cap");
    for (const auto& g : s.elements())
        if (!is_p_element(g, p)) throw std::invalid_argument("subgroup catalog needs a p-group");

    std::map<std::vector<Permutation>, int> seen;
    std::vector<PermGroup> found;
    std::deque<int> todo;

    PermGroup triv = PermGroup::from_elements(s.degree(), {Permutation::identity(s.degree())});
    seen.emplace(triv.elements(), 0);
    found.push_back(std::move(triv));
    todo.push_back(0);

    while (!todo.empty()) {
        int qi = todo.front();
        todo.pop_front();
        PermGroup q = found[qi];
        PermGroup norm = s.normalizer(q);
        for (const auto& x : norm.elements()) {
            if (q.contains(x)) continue;
            if (!q.contains(x.pow(static_cast<std::int64_t>(p)))) continue;
            std::vector<Permutation> gens = q.generators();
            gens.push_back(x);
            auto elems = PermGroup::close_under_product(s.degree(), gens, s.order());
            auto it = seen.find(elems);
            if (it == seen.end()) {
                int idx = static_cast<int>(found.size());
                seen.emplace(elems, idx);
                found.push_back(PermGroup::from_elements(s.degree(), std::move(elems)));
                todo.push_back(idx);
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });

    SubgroupCatalog cat;
    cat.subgroups = std::move(found);
    cat.conj_class.assign(cat.subgroups.size(), -1);
    cat.is_rep.assign(cat.subgroups.size(), 0);
    return cat;
}

// partition the catalog under conjugation by an ambient group; the least
// catalog index of each class is its representative
inline void mark_conjugacy(SubgroupCatalog& cat, const PermGroup& ambient) {
    std::map<std::vector<Permutation>, int> index;
    for (std::size_t i = 0; i < cat.subgroups.size(); ++i) index.emplace(cat.subgroups[i].elements(), i);
    int next = 0;
    for (std::size_t i = 0; i < cat.subgroups.size(); ++i) {
        if (cat.conj_class[i] != -1) continue;
        int cls = next++;
        cat.conj_class[i] = cls;
        cat.is_rep[i] = 1;
        for (const auto& g : ambient.elements()) {
            std::vector<Permutation> conj;
            conj.reserve(cat.subgroups[i].elements().size());
            for (const auto& x : cat.subgroups[i].elements()) conj.push_back(x.conjugated(g));
            std::sort(conj.begin(), conj.end());
            auto it = index.find(conj);
            if (it != index.end() && cat.conj_class[it->second] == -1) cat.conj_class[it->second] = cls;
        }
    }
}

// some g in ambient with Q^g = R, if one exists
inline std::optional<Permutation> conjugating_element(const PermGroup& ambient, const PermGroup& q,
                                                      const PermGroup& r) {
    if (q.order() != r.order()) return std::nullopt;
    for (const auto& g : ambient.elements()) {
        bool all = true;
        for (const auto& x : q.generators())
            if (!r.contains(x.conjugated(g))) {
                all = false;
                break;
            }
        if (all) return g;
    }
    return std::nullopt;
}

}  // namespace blockfuse
