#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "blockfuse/common.hpp"
#include "blockfuse/permutation.hpp"

namespace blockfuse {

enum class GroupKind { symmetric, alternating, generic };

enum class SplitTag { whole, plus, minus };

inline std::string split_suffix(SplitTag tag) {
    switch (tag) {
        case SplitTag::plus: return "+";
        case SplitTag::minus: return "-";
        default: return "";
    }
}

struct ConjClass {
    int index = 0;
    Permutation rep;          // lexicographically least element
    std::uint64_t size = 0;
    CycleType type;
    SplitTag tag = SplitTag::whole;

    // cycle-type string plus split tag
    std::string label() const { return format_cycle_type(type) + split_suffix(tag); }
};

// A finite permutation group given by generators, enumerable at desk scale.
// Immutable after construction; the element list, index map and class table
// are built once on first use and shared between copies.
class PermGroup {
public:
    PermGroup() : degree_(1), kind_(GroupKind::generic) {}

    PermGroup(int degree, std::vector<Permutation> generators, GroupKind kind = GroupKind::generic,
              std::uint64_t order_cap = kDefaultOrderCap)
        : degree_(degree), kind_(kind), cap_(order_cap) {
        for (auto& g : generators) {
            if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
            if (kind == GroupKind::alternating && !g.is_even())
                throw std::invalid_argument("odd generator in alternating group");
            if (!g.is_identity()) gens_.push_back(std::move(g));
        }
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        box_ = std::make_shared<Box>();
    }

    static PermGroup symmetric(int n, std::uint64_t cap = kDefaultOrderCap) {
        std::vector<Permutation> gens;
        if (n >= 2) gens.push_back(Permutation::transposition(n, 0, 1));
        if (n >= 3) {
            std::vector<int> cyc(n);
            for (int i = 0; i < n; ++i) cyc[i] = i;
            gens.push_back(Permutation::from_cycles(n, {cyc}));
        }
        return PermGroup(n, std::move(gens), GroupKind::symmetric, cap);
    }

    static PermGroup alternating(int n, std::uint64_t cap = kDefaultOrderCap) {
        std::vector<Permutation> gens;
        if (n >= 3) gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
        if (n >= 4) {
            std::vector<int> cyc;
            if (n % 2 == 1) {
                for (int i = 0; i < n; ++i) cyc.push_back(i);
            } else {
                for (int i = 1; i < n; ++i) cyc.push_back(i);
            }
            gens.push_back(Permutation::from_cycles(n, {cyc}));
        }
        return PermGroup(n, std::move(gens), GroupKind::alternating, cap);
    }

    static PermGroup trivial(int n) { return PermGroup(n, {}, GroupKind::generic); }

    // full symmetric group on a point subset, embedded at degree n
    static PermGroup symmetric_on(const std::vector<int>& points, int n, std::uint64_t cap = kDefaultOrderCap) {
        std::vector<int> pts = points;
        std::sort(pts.begin(), pts.end());
        std::vector<Permutation> gens;
        if (pts.size() >= 2) gens.push_back(Permutation::transposition(n, pts[0], pts[1]));
        if (pts.size() >= 3) gens.push_back(Permutation::from_cycles(n, {pts}));
        return PermGroup(n, std::move(gens), GroupKind::generic, cap);
    }

    static PermGroup alternating_on(const std::vector<int>& points, int n, std::uint64_t cap = kDefaultOrderCap) {
        std::vector<int> pts = points;
        std::sort(pts.begin(), pts.end());
        std::vector<Permutation> gens;
        if (pts.size() >= 3) gens.push_back(Permutation::from_cycles(n, {{pts[0], pts[1], pts[2]}}));
        if (pts.size() >= 4) {
            std::vector<int> cyc;
            if (pts.size() % 2 == 1) {
                cyc = pts;
            } else {
                cyc.assign(pts.begin() + 1, pts.end());
            }
            gens.push_back(Permutation::from_cycles(n, {cyc}));
        }
        return PermGroup(n, std::move(gens), GroupKind::generic, cap);
    }

    // wrap an already-enumerated element set (generators are re-extracted)
    static PermGroup from_elements(int degree, std::vector<Permutation> elements,
                                   GroupKind kind = GroupKind::generic, std::uint64_t cap = kDefaultOrderCap) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        std::vector<Permutation> gens = small_generating_set(degree, elements);
        PermGroup g(degree, std::move(gens), kind, cap);
        g.box_->elements = std::move(elements);
        g.box_->have_elements = true;
        return g;
    }

    int degree() const { return degree_; }
    GroupKind kind() const { return kind_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    std::uint64_t order_cap() const { return cap_; }

    const std::vector<Permutation>& elements() const {
        ensure_elements();
        return box_->elements;
    }

    std::uint64_t order() const { return static_cast<std::uint64_t>(elements().size()); }

    bool contains(const Permutation& g) const {
        if (g.degree() != degree_) return false;
        ensure_elements();
        return std::binary_search(box_->elements.begin(), box_->elements.end(), g);
    }

    // position in the sorted element list
    int element_index(const Permutation& g) const {
        ensure_elements();
        auto it = std::lower_bound(box_->elements.begin(), box_->elements.end(), g);
        if (it == box_->elements.end() || *it != g) throw std::invalid_argument("element not in group");
        return static_cast<int>(it - box_->elements.begin());
    }

    bool is_subgroup_of(const PermGroup& super) const {
        for (const auto& g : gens_)
            if (!super.contains(g)) return false;
        return true;
    }

    const std::vector<ConjClass>& classes() const {
        ensure_classes();
        return box_->classes;
    }

    int class_index_of(const Permutation& g) const {
        ensure_classes();
        return box_->class_of[element_index(g)];
    }

    const std::vector<Permutation>& class_elements(int class_index) const {
        ensure_classes();
        return box_->class_members[class_index];
    }

    std::vector<int> moved_points() const {
        std::vector<char> moved(degree_, 0);
        for (const auto& g : gens_)
            for (int i = 0; i < degree_; ++i)
                if (g(i) != i) moved[i] = 1;
        std::vector<int> out;
        for (int i = 0; i < degree_; ++i)
            if (moved[i]) out.push_back(i);
        return out;
    }

    std::vector<int> fixed_points() const {
        std::vector<char> moved(degree_, 0);
        for (const auto& g : gens_)
            for (int i = 0; i < degree_; ++i)
                if (g(i) != i) moved[i] = 1;
        std::vector<int> out;
        for (int i = 0; i < degree_; ++i)
            if (!moved[i]) out.push_back(i);
        return out;
    }

    bool is_abelian() const {
        for (const auto& a : gens_)
            for (const auto& b : gens_)
                if (a * b != b * a) return false;
        return true;
    }

    // {g in G : g commutes with x}
    PermGroup centralizer(const Permutation& x) const {
        if (!contains(x)) throw std::invalid_argument("centralizer: element not in group");
        std::vector<Permutation> elems;
        for (const auto& g : elements())
            if (g * x == x * g) elems.push_back(g);
        return from_elements(degree_, std::move(elems), GroupKind::generic, cap_);
    }

    // {g in G : g commutes with every generator of H}
    PermGroup centralizer_of(const PermGroup& h) const {
        std::vector<Permutation> elems;
        for (const auto& g : elements()) {
            bool ok = true;
            for (const auto& x : h.generators())
                if (g * x != x * g) {
                    ok = false;
                    break;
                }
            if (ok) elems.push_back(g);
        }
        return from_elements(degree_, std::move(elems), GroupKind::generic, cap_);
    }

    // {g in G : Q^g = Q}
    PermGroup normalizer(const PermGroup& q) const {
        std::vector<Permutation> elems;
        for (const auto& g : elements()) {
            bool ok = true;
            for (const auto& x : q.generators())
                if (!q.contains(x.conjugated(g))) {
                    ok = false;
                    break;
                }
            if (ok) elems.push_back(g);
        }
        return from_elements(degree_, std::move(elems), GroupKind::generic, cap_);
    }

    PermGroup conjugated_group(const Permutation& g) const {
        std::vector<Permutation> gens;
        gens.reserve(gens_.size());
        for (const auto& x : gens_) gens.push_back(x.conjugated(g));
        PermGroup out(degree_, std::move(gens), GroupKind::generic, cap_);
        if (box_->have_elements) {
            std::vector<Permutation> elems;
            elems.reserve(box_->elements.size());
            for (const auto& x : box_->elements) elems.push_back(x.conjugated(g));
            std::sort(elems.begin(), elems.end());
            out.box_->elements = std::move(elems);
            out.box_->have_elements = true;
        }
        return out;
    }

    // Sylow p-subgroup by greedy extension: adjoin p-elements that normalize
    // the current p-subgroup until the order reaches the full p-part.
    PermGroup sylow(unsigned p) const {
        std::uint64_t target = p_power_value(p, p_valuation(order(), p));
        std::vector<Permutation> selems = {Permutation::identity(degree_)};
        std::vector<Permutation> sgens;
        while (static_cast<std::uint64_t>(selems.size()) < target) {
            bool grew = false;
            for (const auto& x : elements()) {
                if (!is_p_element(x, p)) continue;
                if (std::binary_search(selems.begin(), selems.end(), x)) continue;
                bool normalizes = true;
                for (const auto& s : sgens)
                    if (!std::binary_search(selems.begin(), selems.end(), s.conjugated(x))) {
                        normalizes = false;
                        break;
                    }
                if (!normalizes) continue;
                sgens.push_back(x);
                selems = close_under_product(degree_, sgens, cap_);
                grew = true;
                break;
            }
            if (!grew) throw internal_error("sylow: no extending p-element found");
        }
        return from_elements(degree_, std::move(selems), GroupKind::generic, cap_);
    }

    // closure of a generator list, sorted; throws cap_exceeded beyond cap
    static std::vector<Permutation> close_under_product(int degree, const std::vector<Permutation>& gens,
                                                        std::uint64_t cap = kDefaultOrderCap) {
        std::unordered_set<Permutation, PermutationHash> seen;
        std::deque<Permutation> todo;
        Permutation id = Permutation::identity(degree);
        seen.insert(id);
        todo.push_back(id);
        while (!todo.empty()) {
            Permutation cur = std::move(todo.front());
            todo.pop_front();
            for (const auto& g : gens) {
                Permutation next = cur * g;
                if (seen.insert(next).second) {
                    if (seen.size() > cap) throw cap_exceeded("group enumeration exceeds cap");
                    todo.push_back(std::move(next));
                }
            }
        }
        std::vector<Permutation> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    // greedy generating set extracted from a full sorted element list
    static std::vector<Permutation> small_generating_set(int degree, const std::vector<Permutation>& elements) {
        std::vector<Permutation> gens;
        std::vector<Permutation> span = {Permutation::identity(degree)};
        for (const auto& g : elements) {
            if (std::binary_search(span.begin(), span.end(), g)) continue;
            gens.push_back(g);
            span = close_under_product(degree, gens);
            if (span.size() == elements.size()) break;
        }
        return gens;
    }

private:
    struct Box {
        bool have_elements = false;
        std::vector<Permutation> elements;
        bool have_classes = false;
        std::vector<ConjClass> classes;
        std::vector<int> class_of;                        // element index -> class index
        std::vector<std::vector<Permutation>> class_members;
    };

    void ensure_elements() const {
        if (box_->have_elements) return;
        if (kind_ == GroupKind::symmetric || kind_ == GroupKind::alternating) {
            std::uint64_t fact = 1;
            for (int i = 2; i <= degree_; ++i) {
                fact *= static_cast<std::uint64_t>(i);
                if (fact > cap_ * 2) throw cap_exceeded("group enumeration exceeds cap");
            }
            std::uint64_t projected = kind_ == GroupKind::symmetric ? fact : (degree_ >= 2 ? fact / 2 : 1);
            if (projected > cap_) throw cap_exceeded("group enumeration exceeds cap");
        }
        box_->elements = close_under_product(degree_, gens_, cap_);
        box_->have_elements = true;
    }

    // Conjugacy classes by orbit computation: conjugate by generators until
    // closure. Classes are ordered by cycle type (identity first), then by
    // least representative; in alternating groups an even type that falls in
    // two orbits is tagged plus/minus, plus holding the least representative.
    void ensure_classes() const {
        if (box_->have_classes) return;
        ensure_elements();
        const auto& elems = box_->elements;
        int n_elems = static_cast<int>(elems.size());
        std::vector<int> class_of(n_elems, -1);
        std::vector<std::vector<Permutation>> members;

        for (int i = 0; i < n_elems; ++i) {
            if (class_of[i] != -1) continue;
            int cls = static_cast<int>(members.size());
            std::vector<Permutation> orbit;
            std::deque<int> todo;
            class_of[i] = cls;
            todo.push_back(i);
            orbit.push_back(elems[i]);
            while (!todo.empty()) {
                int cur = todo.front();
                todo.pop_front();
                for (const auto& g : gens_) {
                    Permutation conj = elems[cur].conjugated(g);
                    auto it = std::lower_bound(elems.begin(), elems.end(), conj);
                    int idx = static_cast<int>(it - elems.begin());
                    if (class_of[idx] == -1) {
                        class_of[idx] = cls;
                        todo.push_back(idx);
                        orbit.push_back(conj);
                    }
                }
            }
            std::sort(orbit.begin(), orbit.end());
            members.push_back(std::move(orbit));
        }

        // deterministic class order: cycle-type key, then least representative
        int n_classes = static_cast<int>(members.size());
        std::vector<int> perm(n_classes);
        for (int i = 0; i < n_classes; ++i) perm[i] = i;
        std::vector<std::vector<int>> keys(n_classes);
        for (int i = 0; i < n_classes; ++i) keys[i] = cycle_type(members[i][0]).sort_key();
        std::sort(perm.begin(), perm.end(), [&](int a, int b) {
            if (keys[a] != keys[b]) return keys[a] < keys[b];
            return members[a][0] < members[b][0];
        });

        std::vector<int> new_index(n_classes);
        for (int pos = 0; pos < n_classes; ++pos) new_index[perm[pos]] = pos;

        std::vector<ConjClass> classes(n_classes);
        std::vector<std::vector<Permutation>> ordered(n_classes);
        for (int pos = 0; pos < n_classes; ++pos) {
            int src = perm[pos];
            ConjClass c;
            c.index = pos;
            c.rep = members[src][0];
            c.size = members[src].size();
            c.type = cycle_type(c.rep);
            c.tag = SplitTag::whole;
            ordered[pos] = std::move(members[src]);
            classes[pos] = std::move(c);
        }
        if (kind_ == GroupKind::alternating) {
            // a type shared by exactly two classes is a split pair
            for (int i = 0; i + 1 < n_classes; ++i) {
                if (classes[i].type == classes[i + 1].type) {
                    classes[i].tag = SplitTag::plus;
                    classes[i + 1].tag = SplitTag::minus;
                    ++i;
                }
            }
        }
        for (int e = 0; e < n_elems; ++e) class_of[e] = new_index[class_of[e]];

        box_->classes = std::move(classes);
        box_->class_of = std::move(class_of);
        box_->class_members = std::move(ordered);
        box_->have_classes = true;
    }

    int degree_;
    std::vector<Permutation> gens_;
    GroupKind kind_;
    std::uint64_t cap_ = kDefaultOrderCap;
    std::shared_ptr<Box> box_ = std::make_shared<Box>();
};

// subgroup generated inside a parent group (degree taken from the parent)
inline PermGroup generated_subgroup(const PermGroup& parent, const std::vector<Permutation>& gens) {
    auto elems = PermGroup::close_under_product(parent.degree(), gens, parent.order_cap());
    return PermGroup::from_elements(parent.degree(), std::move(elems), GroupKind::generic, parent.order_cap());
}

// canonical key for subgroup identity tests: the sorted element list
inline std::vector<Permutation> element_key(const PermGroup& g) { return g.elements(); }

inline bool same_subgroup(const PermGroup& a, const PermGroup& b) {
    return a.degree() == b.degree() && a.elements() == b.elements();
}

}  // namespace blockfuse
