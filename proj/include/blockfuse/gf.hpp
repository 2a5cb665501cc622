#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "blockfuse/common.hpp"

namespace blockfuse {

// GF(p^m) as GF(p)[t] / (modulus). The modulus is monic of degree m,
// little-endian; for m = 1 the convention is modulus = t and elements are
// plain residues mod p. Elements do not carry their spec: every operation
// takes it explicitly.
struct FieldSpec {
    unsigned p = 2;
    unsigned m = 1;
    std::vector<unsigned> modulus = {0, 1};

    std::uint64_t card() const { return p_power_value(p, m); }

    bool operator==(const FieldSpec&) const = default;
};

struct FieldElement {
    std::vector<unsigned> c;  // length m, reduced mod p

    bool operator==(const FieldElement&) const = default;
    auto operator<=>(const FieldElement&) const = default;
};

inline FieldElement fe_zero(const FieldSpec& k) { return FieldElement{std::vector<unsigned>(k.m, 0)}; }

inline FieldElement fe_from_int(const FieldSpec& k, std::int64_t v) {
    FieldElement e = fe_zero(k);
    std::int64_t r = v % static_cast<std::int64_t>(k.p);
    if (r < 0) r += k.p;
    e.c[0] = static_cast<unsigned>(r);
    return e;
}

inline FieldElement fe_one(const FieldSpec& k) { return fe_from_int(k, 1); }

inline bool fe_is_zero(const FieldElement& a) {
    for (unsigned v : a.c)
        if (v != 0) return false;
    return true;
}

inline bool fe_is_one(const FieldSpec& k, const FieldElement& a) { return a == fe_one(k); }

inline void fe_check(const FieldSpec& k, const FieldElement& a) {
    if (a.c.size() != k.m) throw std::invalid_argument("field element has wrong extension degree");
}

inline FieldElement fe_add(const FieldSpec& k, const FieldElement& a, const FieldElement& b) {
    fe_check(k, a);
    fe_check(k, b);
    FieldElement r = a;
    for (unsigned i = 0; i < k.m; ++i) r.c[i] = (r.c[i] + b.c[i]) % k.p;
    return r;
}

inline FieldElement fe_neg(const FieldSpec& k, const FieldElement& a) {
    fe_check(k, a);
    FieldElement r = a;
    for (unsigned i = 0; i < k.m; ++i) r.c[i] = (k.p - r.c[i]) % k.p;
    return r;
}

inline FieldElement fe_sub(const FieldSpec& k, const FieldElement& a, const FieldElement& b) {
    return fe_add(k, a, fe_neg(k, b));
}

inline FieldElement fe_mul(const FieldSpec& k, const FieldElement& a, const FieldElement& b) {
    fe_check(k, a);
    fe_check(k, b);
    std::vector<std::uint64_t> buf(2 * k.m, 0);
    for (unsigned i = 0; i < k.m; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < k.m; ++j) buf[i + j] += static_cast<std::uint64_t>(a.c[i]) * b.c[j];
    }
    // reduce by the monic modulus
    for (unsigned i = 2 * k.m - 1; i >= k.m; --i) {
        std::uint64_t t = buf[i] % k.p;
        buf[i] = 0;
        if (t == 0) continue;
        for (unsigned j = 0; j < k.m; ++j)
            buf[i - k.m + j] += t * (k.p - k.modulus[j] % k.p);
    }
    FieldElement r = fe_zero(k);
    for (unsigned i = 0; i < k.m; ++i) r.c[i] = static_cast<unsigned>(buf[i] % k.p);
    return r;
}

inline FieldElement fe_scale(const FieldSpec& k, const FieldElement& a, std::uint64_t n) {
    FieldElement r = a;
    unsigned s = static_cast<unsigned>(n % k.p);
    for (unsigned i = 0; i < k.m; ++i) r.c[i] = (r.c[i] * s) % k.p;
    return r;
}

inline FieldElement fe_pow(const FieldSpec& k, FieldElement base, std::uint64_t e) {
    FieldElement acc = fe_one(k);
    while (e != 0) {
        if (e & 1) acc = fe_mul(k, acc, base);
        base = fe_mul(k, base, base);
        e >>= 1;
    }
    return acc;
}

inline FieldElement fe_inv(const FieldSpec& k, const FieldElement& a) {
    if (fe_is_zero(a)) throw std::invalid_argument("inverse of zero field element");
    return fe_pow(k, a, k.card() - 2);
}

inline FieldElement fe_frobenius(const FieldSpec& k, const FieldElement& a) { return fe_pow(k, a, k.p); }

// "c0,c1,..." little-endian
inline std::string fe_format(const FieldElement& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) os << ',';
        os << a.c[i];
    }
    return os.str();
}

inline FieldElement fe_parse(const FieldSpec& k, const std::string& text) {
    FieldElement e = fe_zero(k);
    std::istringstream is(text);
    std::string part;
    unsigned i = 0;
    while (std::getline(is, part, ',')) {
        if (i >= k.m) throw std::invalid_argument("too many coefficients for field element");
        e.c[i++] = static_cast<unsigned>(std::stoul(part)) % k.p;
    }
    return e;
}

// index <-> element bijection in base-p digit order, for exhaustive scans
inline FieldElement fe_from_index(const FieldSpec& k, std::uint64_t idx) {
    FieldElement e = fe_zero(k);
    for (unsigned i = 0; i < k.m && idx != 0; ++i) {
        e.c[i] = static_cast<unsigned>(idx % k.p);
        idx /= k.p;
    }
    return e;
}

}  // namespace blockfuse
