#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "blockfuse/gf.hpp"

namespace blockfuse {

// Polynomial over GF(p^m), little-endian coefficients, no trailing zeros.
// degree() of the zero polynomial is -1.
struct Poly {
    std::vector<FieldElement> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    bool operator==(const Poly&) const = default;
};

inline Poly poly_trim(Poly f) {
    while (!f.c.empty() && fe_is_zero(f.c.back())) f.c.pop_back();
    return f;
}

inline Poly poly_zero() { return Poly{}; }

inline Poly poly_const(const FieldSpec& k, const FieldElement& a) {
    if (fe_is_zero(a)) return Poly{};
    return Poly{{a}};
}

inline Poly poly_one(const FieldSpec& k) { return poly_const(k, fe_one(k)); }

inline Poly poly_x(const FieldSpec& k) { return Poly{{fe_zero(k), fe_one(k)}}; }

inline bool poly_is_one(const FieldSpec& k, const Poly& f) {
    return f.degree() == 0 && fe_is_one(k, f.c[0]);
}

inline Poly poly_add(const FieldSpec& k, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), fe_zero(k));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = fe_add(k, r.c[i], b.c[i]);
    return poly_trim(std::move(r));
}

inline Poly poly_neg(const FieldSpec& k, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = fe_neg(k, x);
    return r;
}

inline Poly poly_sub(const FieldSpec& k, const Poly& a, const Poly& b) { return poly_add(k, a, poly_neg(k, b)); }

inline Poly poly_mul(const FieldSpec& k, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, fe_zero(k));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (fe_is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = fe_add(k, r.c[i + j], fe_mul(k, a.c[i], b.c[j]));
    }
    return poly_trim(std::move(r));
}

inline Poly poly_scale(const FieldSpec& k, const Poly& a, const FieldElement& s) {
    Poly r = a;
    for (auto& x : r.c) x = fe_mul(k, x, s);
    return poly_trim(std::move(r));
}

// quotient and remainder; the divisor must be nonzero
inline std::pair<Poly, Poly> poly_divmod(const FieldSpec& k, Poly a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly q;
    if (a.degree() < b.degree()) return {Poly{}, std::move(a)};
    q.c.assign(a.degree() - b.degree() + 1, fe_zero(k));
    FieldElement lead_inv = fe_inv(k, b.c.back());
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (static_cast<int>(a.c.size()) <= i || fe_is_zero(a.c[i])) continue;
        FieldElement f = fe_mul(k, a.c[i], lead_inv);
        q.c[i - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j)
            a.c[i - b.degree() + j] = fe_sub(k, a.c[i - b.degree() + j], fe_mul(k, f, b.c[j]));
    }
    return {poly_trim(std::move(q)), poly_trim(std::move(a))};
}

inline Poly poly_mod(const FieldSpec& k, const Poly& a, const Poly& b) { return poly_divmod(k, a, b).second; }
inline Poly poly_div(const FieldSpec& k, const Poly& a, const Poly& b) { return poly_divmod(k, a, b).first; }

inline Poly poly_monic(const FieldSpec& k, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(k, a, fe_inv(k, a.c.back()));
}

inline Poly poly_gcd(const FieldSpec& k, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(k, a);
}

inline Poly poly_derivative(const FieldSpec& k, const Poly& a) {
    Poly r;
    if (a.degree() < 1) return r;
    r.c.resize(a.c.size() - 1, fe_zero(k));
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = fe_scale(k, a.c[i], i);
    return poly_trim(std::move(r));
}

inline Poly poly_mulmod(const FieldSpec& k, const Poly& a, const Poly& b, const Poly& mod) {
    return poly_mod(k, poly_mul(k, a, b), mod);
}

inline Poly poly_powmod(const FieldSpec& k, Poly base, std::uint64_t e, const Poly& mod) {
    Poly acc = poly_mod(k, poly_one(k), mod);
    base = poly_mod(k, base, mod);
    while (e != 0) {
        if (e & 1) acc = poly_mulmod(k, acc, base, mod);
        base = poly_mulmod(k, base, base, mod);
        e >>= 1;
    }
    return acc;
}

// extended euclid: returns (g, u, v) monic g = gcd with u*a + v*b = g
inline std::tuple<Poly, Poly, Poly> poly_xgcd(const FieldSpec& k, Poly a, Poly b) {
    Poly old_r = std::move(a), r = std::move(b);
    Poly old_u = poly_one(k), u = Poly{};
    Poly old_v = Poly{}, v = poly_one(k);
    while (!r.is_zero()) {
        auto [q, rem] = poly_divmod(k, old_r, r);
        old_r = std::move(r);
        r = std::move(rem);
        Poly nu = poly_sub(k, old_u, poly_mul(k, q, u));
        old_u = std::move(u);
        u = std::move(nu);
        Poly nv = poly_sub(k, old_v, poly_mul(k, q, v));
        old_v = std::move(v);
        v = std::move(nv);
    }
    if (old_r.is_zero()) return {Poly{}, Poly{}, Poly{}};
    FieldElement s = fe_inv(k, old_r.c.back());
    return {poly_scale(k, old_r, s), poly_scale(k, old_u, s), poly_scale(k, old_v, s)};
}

inline std::string poly_format(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        if (fe_is_zero(f.c[i])) continue;
        if (!out.empty()) out += " + ";
        std::string coeff = fe_format(f.c[i]);
        if (i == 0) {
            out += coeff;
        } else {
            bool unit = true;
            for (std::size_t j = 0; j < f.c[i].c.size(); ++j)
                if (f.c[i].c[j] != (j == 0 ? 1u : 0u)) unit = false;
            if (!unit) out += "(" + coeff + ")";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// canonical order used for deterministic factor lists
inline bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

namespace detail {

// coefficientwise p-th root: f must have nonzero terms only at multiples of p
inline Poly poly_pth_root(const FieldSpec& k, const Poly& f) {
    Poly r;
    r.c.resize(f.c.size() / k.p + 1, fe_zero(k));
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (fe_is_zero(f.c[i])) continue;
        if (i % k.p != 0) throw internal_error("pth root of a polynomial that is not a p-th power");
        // inverse Frobenius: x -> x^(p^(m-1))
        r.c[i / k.p] = fe_pow(k, f.c[i], p_power_value(k.p, k.m >= 1 ? k.m - 1 : 0));
    }
    return poly_trim(std::move(r));
}

// squarefree decomposition in characteristic p; appends (g, multiplicity)
inline void squarefree_decompose(const FieldSpec& k, Poly f, unsigned scale,
                                 std::vector<std::pair<Poly, unsigned>>& out) {
    Poly d = poly_derivative(k, f);
    if (d.is_zero()) {
        // f = h(t^p) = (pth_root h)^p
        squarefree_decompose(k, poly_pth_root(k, f), scale * k.p, out);
        return;
    }
    Poly c = poly_gcd(k, f, d);
    Poly w = poly_div(k, f, c);
    unsigned i = 1;
    while (!poly_is_one(k, w)) {
        Poly y = poly_gcd(k, w, c);
        Poly z = poly_div(k, w, y);
        if (!poly_is_one(k, z)) out.push_back({poly_monic(k, z), i * scale});
        ++i;
        w = std::move(y);
        c = poly_div(k, c, w);
    }
    if (!poly_is_one(k, c)) squarefree_decompose(k, c, scale * k.p, out);
}

// random polynomial of degree < n with coefficients drawn from the rng
inline Poly random_poly(const FieldSpec& k, int n, std::mt19937_64& rng) {
    Poly r;
    r.c.resize(n, fe_zero(k));
    for (auto& x : r.c) x = fe_from_index(k, rng() % k.card());
    return poly_trim(std::move(r));
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
inline void equal_degree_split(const FieldSpec& k, const Poly& f, int d, std::mt19937_64& rng,
                               std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(poly_monic(k, f));
        return;
    }
    std::uint64_t q = k.card();
    Poly g;
    while (true) {
        Poly r = random_poly(k, f.degree(), rng);
        if (r.degree() < 1) continue;
        if (k.p == 2) {
            // trace map over GF(2): sum of r^(2^i), i < d*m
            Poly s = poly_mod(k, r, f);
            Poly acc = s;
            for (unsigned i = 1; i < static_cast<unsigned>(d) * k.m; ++i) {
                s = poly_mulmod(k, s, s, f);
                acc = poly_add(k, acc, s);
            }
            g = poly_gcd(k, acc, f);
        } else {
            // r^((q^d-1)/2) via r^(1+q+...+q^(d-1)) then ^((q-1)/2)
            Poly norm = poly_mod(k, r, f);
            for (int i = 1; i < d; ++i)
                norm = poly_mulmod(k, poly_powmod(k, norm, q, f), r, f);
            Poly s = poly_powmod(k, norm, (q - 1) / 2, f);
            g = poly_gcd(k, poly_sub(k, s, poly_one(k)), f);
            if (poly_is_one(k, g) || g.degree() == f.degree()) g = poly_gcd(k, s, f);
        }
        if (!poly_is_one(k, g) && g.degree() != f.degree()) break;
    }
    equal_degree_split(k, g, d, rng, out);
    equal_degree_split(k, poly_div(k, f, g), d, rng, out);
}

}  // namespace detail

struct FactorResult {
    FieldElement unit;                             // leading coefficient of the input
    std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, multiplicity
};

// Factorization over GF(p^m): squarefree part by gcd with the derivative,
// distinct-degree splitting, then randomized equal-degree splitting. The rng
// seed makes the run reproducible.
inline FactorResult factor(const FieldSpec& k, const Poly& f, std::uint64_t seed = 1) {
    if (f.is_zero()) throw std::invalid_argument("factor of zero polynomial");
    FactorResult res;
    res.unit = f.c.back();
    if (f.degree() == 0) return res;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, unsigned>> squarefree;
    detail::squarefree_decompose(k, poly_monic(k, f), 1, squarefree);

    std::map<std::vector<std::vector<unsigned>>, std::pair<Poly, unsigned>> acc;  // keyed canonically
    std::uint64_t q = k.card();
    for (auto& [g0, mult] : squarefree) {
        Poly g = g0;
        Poly h = poly_mod(k, poly_x(k), g);
        std::vector<std::pair<Poly, int>> stages;  // product of same-degree irreducibles
        for (int d = 1; 2 * d <= g.degree(); ++d) {
            h = poly_powmod(k, h, q, g);
            Poly gd = poly_gcd(k, poly_sub(k, h, poly_x(k)), g);
            if (!poly_is_one(k, gd)) {
                stages.push_back({gd, d});
                g = poly_div(k, g, gd);
                h = poly_mod(k, h, g);
            }
        }
        if (g.degree() > 0) stages.push_back({g, g.degree()});
        for (auto& [prod, d] : stages) {
            std::vector<Poly> irr;
            detail::equal_degree_split(k, prod, d, rng, irr);
            for (auto& fac : irr) {
                std::vector<std::vector<unsigned>> key;
                for (const auto& fe : fac.c) key.push_back(fe.c);
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(std::move(key), std::pair{fac, mult});
                else
                    it->second.second += mult;
            }
        }
    }
    for (auto& [key, fm] : acc) res.factors.push_back(std::move(fm));
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return res;
}

// Deterministic smallest monic irreducible of degree m over GF(p), smallest
// meaning least base-p encoding of the non-leading coefficients.
inline Poly find_irreducible(unsigned p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (m == 0) throw std::invalid_argument("extension degree must be at least 1");
    FieldSpec base{p, 1, {0, 1}};
    if (m == 1) return poly_x(base);
    std::vector<unsigned> mprimes;
    {
        unsigned rest = m;
        for (unsigned d = 2; d <= rest; ++d)
            while (rest % d == 0) {
                if (mprimes.empty() || mprimes.back() != d) mprimes.push_back(d);
                rest /= d;
            }
    }
    std::uint64_t total = p_power_value(p, m);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Poly f;
        f.c.assign(m + 1, fe_zero(base));
        std::uint64_t v = idx;
        for (unsigned i = 0; i < m; ++i) {
            f.c[i] = fe_from_int(base, static_cast<std::int64_t>(v % p));
            v /= p;
        }
        f.c[m] = fe_one(base);
        // irreducible iff x^(p^m) = x mod f and gcd(x^(p^(m/r)) - x, f) = 1
        Poly x = poly_x(base);
        Poly xq = x;
        for (unsigned i = 0; i < m; ++i) xq = poly_powmod(base, xq, p, f);
        if (!poly_mod(base, poly_sub(base, xq, x), f).is_zero()) continue;
        bool ok = true;
        for (unsigned r : mprimes) {
            Poly xr = x;
            for (unsigned i = 0; i < m / r; ++i) xr = poly_powmod(base, xr, p, f);
            if (!poly_is_one(base, poly_gcd(base, poly_sub(base, xr, x), f))) {
                ok = false;
                break;
            }
        }
        if (ok) return f;
    }
    throw internal_error("no irreducible polynomial found");  // unreachable
}

// field spec with the deterministic modulus choice
inline FieldSpec make_field(unsigned p, unsigned m) {
    FieldSpec k;
    k.p = p;
    k.m = m;
    if (m == 1) {
        k.modulus = {0, 1};
    } else {
        Poly f = find_irreducible(p, m);
        k.modulus.clear();
        for (const auto& fe : f.c) k.modulus.push_back(fe.c[0]);
    }
    return k;
}

}  // namespace blockfuse
