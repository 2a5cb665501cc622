#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "blockfuse/perm_group.hpp"
#include "blockfuse/permutation.hpp"

namespace blockfuse {

namespace detail {

// generators of the iterated wreath product W_i on the p^i points
// [base, base + p^i): W_1 is a p-cycle, W_i = W_{i-1} wr C_p generated by a
// first-block copy of W_{i-1} plus the block shift
inline void wreath_tower_generators(int degree, unsigned p, unsigned i, int base,
                                    std::vector<Permutation>& out) {
    if (i == 0) return;
    std::int64_t block = 1;
    for (unsigned t = 0; t + 1 < i; ++t) block *= p;  // p^(i-1)
    std::int64_t span = block * p;                    // p^i
    if (i > 1) wreath_tower_generators(degree, p, i - 1, base, out);
    std::vector<int> shift(degree);
    for (int pt = 0; pt < degree; ++pt) shift[pt] = pt;
    for (std::int64_t j = 0; j < span; ++j)
        shift[base + j] = base + static_cast<int>((j + block) % span);
    out.push_back(Permutation(std::move(shift)));
}

}  // namespace detail

// Sylow p-subgroup of S_n as a direct product of iterated wreath products,
// one factor W_i per unit of the base-p digit d_i of n, on disjoint blocks
// of p^i points. Blocks are allocated largest first; the d_0 leftover points
// are fixed.
inline PermGroup sylow_symmetric(int n, unsigned p, std::uint64_t cap = kDefaultOrderCap) {
    std::vector<unsigned> digits;
    {
        int rest = n;
        while (rest > 0) {
            digits.push_back(static_cast<unsigned>(rest % static_cast<int>(p)));
            rest /= static_cast<int>(p);
        }
    }
    std::vector<Permutation> gens;
    int base = 0;
    for (int i = static_cast<int>(digits.size()) - 1; i >= 1; --i) {
        std::int64_t span = 1;
        for (int t = 0; t < i; ++t) span *= p;
        for (unsigned copy = 0; copy < digits[i]; ++copy) {
            detail::wreath_tower_generators(n, p, static_cast<unsigned>(i), base, gens);
            base += static_cast<int>(span);
        }
    }
    return PermGroup(n, std::move(gens), GroupKind::generic, cap);
}

// Sylow p-subgroup of A_n: for odd p the symmetric construction is already
// even; for p = 2 it is the even half W' = W n A_n of the symmetric Sylow W.
inline PermGroup sylow_alternating(int n, unsigned p, std::uint64_t cap = kDefaultOrderCap) {
    PermGroup w = sylow_symmetric(n, p, cap);
    if (p != 2) return w;
    std::vector<Permutation> even;
    for (const auto& g : w.elements())
        if (g.is_even()) even.push_back(g);
    return PermGroup::from_elements(n, std::move(even), GroupKind::generic, cap);
}

// One factor C_c wr S_m of the centralizer of a permutation, attached to the
// cycles of one common length.
struct WreathFactor {
    int length = 1;
    int multiplicity = 0;
    // cycle_points[x][y]: the point written (x, y) by the relabeling, i.e.
    // g^y applied to the least point of the x-th cycle of this length
    std::vector<std::vector<int>> cycle_points;
    std::vector<Permutation> rotations;   // a_x, one per cycle of length > 1
    std::vector<Permutation> block_gens;  // lifted adjacent transpositions of S_m
};

struct CentralizerStructure {
    int degree = 0;
    std::vector<WreathFactor> factors;

    std::uint64_t predicted_order() const {
        std::uint64_t ord = 1;
        for (const auto& f : factors) {
            for (int x = 0; x < f.multiplicity; ++x)
                ord *= static_cast<std::uint64_t>(f.length) * static_cast<std::uint64_t>(x + 1);
        }
        return ord;
    }

    std::vector<Permutation> generators() const {
        std::vector<Permutation> gens;
        for (const auto& f : factors) {
            gens.insert(gens.end(), f.rotations.begin(), f.rotations.end());
            gens.insert(gens.end(), f.block_gens.begin(), f.block_gens.end());
        }
        return gens;
    }
};

// The wreath decomposition of C_{S_n}(g): per cycle length c with
// multiplicity m, the m per-cycle rotations and the block permutations that
// realize C_c wr S_m on the points moved by those cycles.
inline CentralizerStructure centralizer_structure(const Permutation& g, int n) {
    if (g.degree() != n) throw std::invalid_argument("degree mismatch");
    std::map<int, std::vector<std::vector<int>>> by_length;
    for (auto& cyc : g.cycles(true)) {
        // rotate so the least point leads; successive entries are g-images
        auto min_it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), min_it, cyc.end());
        by_length[static_cast<int>(cyc.size())].push_back(cyc);
    }
    CentralizerStructure cs;
    cs.degree = n;
    for (auto& [len, cycles] : by_length) {
        std::sort(cycles.begin(), cycles.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
        WreathFactor f;
        f.length = len;
        f.multiplicity = static_cast<int>(cycles.size());
        f.cycle_points = cycles;
        if (len > 1)
            for (const auto& cyc : cycles) f.rotations.push_back(Permutation::from_cycles(n, {cyc}));
        for (std::size_t x = 0; x + 1 < cycles.size(); ++x) {
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[i] = i;
            for (int y = 0; y < len; ++y) {
                img[cycles[x][y]] = cycles[x + 1][y];
                img[cycles[x + 1][y]] = cycles[x][y];
            }
            f.block_gens.push_back(Permutation(std::move(img)));
        }
        cs.factors.push_back(std::move(f));
    }
    return cs;
}

inline PermGroup structural_centralizer(const Permutation& g, int n, std::uint64_t cap = kDefaultOrderCap) {
    return PermGroup(n, centralizer_structure(g, n).generators(), GroupKind::generic, cap);
}

// Centralizer of an element: the structural wreath construction for full
// symmetric groups, a plain scan otherwise.
inline PermGroup centralizer_in(const PermGroup& g_group, const Permutation& x) {
    if (!g_group.contains(x)) throw std::invalid_argument("centralizer: element not in group");
    if (g_group.kind() == GroupKind::symmetric)
        return structural_centralizer(x, g_group.degree(), g_group.order_cap());
    return g_group.centralizer(x);
}

}  // namespace blockfuse
