#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "blockfuse/common.hpp"

namespace blockfuse {

// A permutation of {0..n-1}, stored as its image table. Points are 0-based
// internally and 1-based in all text I/O.
//
// Products read left to right: (p*q)(i) = q(p(i)), so conjugation
// g^h = h^-1 * g * h relabels the points of g by h.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("image table is not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int degree) {
        std::vector<int> img(degree);
        for (int i = 0; i < degree; ++i) img[i] = i;
        return Permutation(std::move(img));
    }

    static Permutation transposition(int degree, int a, int b) {
        Permutation p = identity(degree);
        p.img_.at(a) = b;
        p.img_.at(b) = a;
        return p;
    }

    // cycles given on 0-based points
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
        Permutation p = identity(degree);
        std::vector<char> used(degree, 0);
        for (const auto& cyc : cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i];
                int to = cyc[(i + 1) % cyc.size()];
                if (from < 0 || from >= degree) throw std::invalid_argument("cycle point out of range");
                if (used[from]) throw std::invalid_argument("repeated point in cycles");
                used[from] = 1;
                p.img_[from] = to;
            }
        }
        // re-validate bijectivity after stitching
        return Permutation(std::move(p.img_));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int point) const { return img_[point]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // (p*q)(i) = q(p(i)); apply the left factor first
    Permutation operator*(const Permutation& rhs) const {
        if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in composition");
        std::vector<int> img(img_.size());
        for (int i = 0; i < degree(); ++i) img[i] = rhs.img_[img_[i]];
        Permutation out;
        out.img_ = std::move(img);
        return out;
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
        Permutation out;
        out.img_ = std::move(img);
        return out;
    }

    // g.conjugated(h) = h^-1 * g * h
    Permutation conjugated(const Permutation& h) const {
        if (degree() != h.degree()) throw std::invalid_argument("degree mismatch in conjugation");
        std::vector<int> img(img_.size());
        for (int i = 0; i < degree(); ++i) img[h.img_[i]] = h.img_[img_[i]];
        Permutation out;
        out.img_ = std::move(img);
        return out;
    }

    std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(img_.size(), 0);
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            int j = i;
            while (!seen[j]) {
                seen[j] = 1;
                cyc.push_back(j);
                j = img_[j];
            }
            if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
        }
        return out;
    }

    std::uint64_t order() const {
        std::uint64_t ord = 1;
        for (const auto& cyc : cycles(true)) ord = std::lcm(ord, static_cast<std::uint64_t>(cyc.size()));
        return ord;
    }

    bool is_even() const {
        int transpositions = 0;
        for (const auto& cyc : cycles()) transpositions += static_cast<int>(cyc.size()) - 1;
        return transpositions % 2 == 0;
    }

    Permutation pow(std::int64_t e) const {
        std::uint64_t n = order();
        std::int64_t r = e % static_cast<std::int64_t>(n);
        if (r < 0) r += static_cast<std::int64_t>(n);
        Permutation acc = identity(degree());
        Permutation base = *this;
        std::uint64_t k = static_cast<std::uint64_t>(r);
        while (k != 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    // g^(p^e) without forming p^e
    Permutation pow_p_power(unsigned p, unsigned e) const {
        Permutation acc = *this;
        for (unsigned i = 0; i < e; ++i) acc = acc.pow(static_cast<std::int64_t>(p));
        return acc;
    }

    bool operator==(const Permutation& rhs) const = default;
    auto operator<=>(const Permutation& rhs) const = default;

private:
    std::vector<int> img_;
};

inline std::size_t hash_value(const Permutation& p) {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const { return hash_value(p); }
};

// Multiset of cycle lengths in canonical form: (length, multiplicity) with
// lengths strictly decreasing, fixed points included as length 1.
struct CycleType {
    std::vector<std::pair<int, int>> parts;

    int total() const {
        int t = 0;
        for (auto [c, m] : parts) t += c * m;
        return t;
    }

    int multiplicity_of(int length) const {
        for (auto [c, m] : parts)
            if (c == length) return m;
        return 0;
    }

    // lengths with repetition, descending; cycle types of equal degree
    // compare lexicographically on this key (identity first)
    std::vector<int> sort_key() const {
        std::vector<int> key;
        for (auto [c, m] : parts) key.insert(key.end(), m, c);
        return key;
    }

    bool operator==(const CycleType&) const = default;
};

inline CycleType cycle_type(const Permutation& p) {
    std::vector<int> counts(p.degree() + 1, 0);
    for (const auto& cyc : p.cycles(true)) counts[cyc.size()]++;
    CycleType t;
    for (int c = p.degree(); c >= 1; --c)
        if (counts[c] > 0) t.parts.push_back({c, counts[c]});
    return t;
}

inline std::string format_cycle_type(const CycleType& t) {
    std::ostringstream os;
    bool first = true;
    for (auto [c, m] : t.parts) {
        if (!first) os << ' ';
        os << c << '^' << m;
        first = false;
    }
    if (first) os << "1^0";
    return os.str();
}

// "(1 2 3)(4 5)" with 1-based points; identity prints "()"
inline std::string format_cycles(const Permutation& p) {
    auto cycs = p.cycles();
    if (cycs.empty()) return "()";
    std::ostringstream os;
    for (const auto& cyc : cycs) {
        os << '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << ' ';
            os << cyc[i] + 1;
        }
        os << ')';
    }
    return os.str();
}

inline Permutation parse_cycles(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle string: " + text);
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("expected point in cycle string: " + text);
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v < 1 || v > degree) throw std::invalid_argument("point out of range in cycle string: " + text);
            cyc.push_back(v - 1);
            skip_ws();
        }
        if (i >= text.size()) throw std::invalid_argument("unterminated cycle in: " + text);
        ++i;  // ')'
        if (cyc.size() >= 1) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    // from_cycles rejects repeated points
    return Permutation::from_cycles(degree, cycles);
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << format_cycles(p); }

inline bool is_p_element(const Permutation& g, unsigned p) {
    std::uint64_t n = g.order();
    while (n % p == 0) n /= p;
    return n == 1;
}

inline bool is_p_regular(const Permutation& g, unsigned p) { return g.order() % p != 0; }

// unique commuting factorization g = g_p * g_p' into a p-element and a
// p-regular element, via g_p = g^(x*m), g_p' = g^(y*p^k) with x*m + y*p^k = 1
inline std::pair<Permutation, Permutation> p_parts(const Permutation& g, unsigned p) {
    std::int64_t ord = static_cast<std::int64_t>(g.order());
    std::int64_t pk = 1;
    std::int64_t m = ord;
    while (m % p == 0) {
        m /= p;
        pk *= p;
    }
    // extended gcd: x*m + y*pk == 1
    std::int64_t old_r = m, r = pk;
    std::int64_t old_x = 1, x = 0;
    while (r != 0) {
        std::int64_t qt = old_r / r;
        std::tie(old_r, r) = std::pair(r, old_r - qt * r);
        std::tie(old_x, x) = std::pair(x, old_x - qt * x);
    }
    std::int64_t xm = old_x * m;     // g_p exponent
    std::int64_t ypk = 1 - xm;       // g_p' exponent
    return {g.pow(xm), g.pow(ypk)};
}

// A p-power value p^n together with its exponent; used where forming the
// plain integer could overflow.
struct PPower {
    unsigned prime = 2;
    unsigned exp = 0;

    std::uint64_t value() const { return p_power_value(prime, exp); }
};

// smallest q = p^n with n >= v_p(order) and p^n = 1 mod (order / p^v)
inline PPower p_regular_exponent(std::uint64_t order, unsigned p) {
    if (order == 0) throw std::invalid_argument("order must be positive");
    unsigned k = 0;
    std::uint64_t m = order;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    unsigned n = k;
    std::uint64_t pn_mod = 1;
    for (unsigned i = 0; i < k; ++i) pn_mod = (pn_mod * p) % m;
    while (pn_mod % m != 1 % m) {
        pn_mod = (pn_mod * p) % m;
        ++n;
    }
    return PPower{p, n};
}

}  // namespace blockfuse
