#pragma once

#include <optional>
#include <vector>

#include "blockfuse/gf.hpp"
#include "blockfuse/poly.hpp"

namespace blockfuse {

// dense row-major matrix over GF(p^m)
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<FieldElement> a;

    static Matrix zero(const FieldSpec& k, int r, int c) {
        Matrix m;
        m.rows = r;
        m.cols = c;
        m.a.assign(static_cast<std::size_t>(r) * c, fe_zero(k));
        return m;
    }

    FieldElement& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const FieldElement& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

inline std::vector<FieldElement> mat_vec(const FieldSpec& k, const Matrix& m,
                                         const std::vector<FieldElement>& v) {
    std::vector<FieldElement> out(m.rows, fe_zero(k));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (!fe_is_zero(m.at(r, c)) && !fe_is_zero(v[c]))
                out[r] = fe_add(k, out[r], fe_mul(k, m.at(r, c), v[c]));
    return out;
}

// Incremental row space in reduced echelon form. insert() reduces a vector
// against the rows collected so far; if a nonzero residue remains it joins
// the basis. Optional combination tracking records how each stored row was
// formed from the inserted vectors.
class RowSpace {
public:
    RowSpace(const FieldSpec& k, int width, bool track = false) : k_(k), width_(width), track_(track) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    // returns true when v was independent; combo (if tracking) receives the
    // coefficients expressing the reduced residue in terms of inserted rows
    bool insert(std::vector<FieldElement> v) {
        std::vector<FieldElement> combo;
        if (track_) {
            combo.assign(inserted_ + 1, fe_zero(k_));
            combo[inserted_] = fe_one(k_);
        }
        ++inserted_;
        reduce(v, combo);
        for (int c = 0; c < width_; ++c) {
            if (!fe_is_zero(v[c])) {
                FieldElement inv = fe_inv(k_, v[c]);
                for (auto& x : v) x = fe_mul(k_, x, inv);
                if (track_)
                    for (auto& x : combo) x = fe_mul(k_, x, inv);
                // back-substitute into existing rows
                for (std::size_t r = 0; r < rows_.size(); ++r) {
                    FieldElement f = rows_[r][c];
                    if (fe_is_zero(f)) continue;
                    for (int j = 0; j < width_; ++j)
                        rows_[r][j] = fe_sub(k_, rows_[r][j], fe_mul(k_, f, v[j]));
                    if (track_) {
                        combos_[r].resize(inserted_, fe_zero(k_));
                        for (std::size_t j = 0; j < combo.size(); ++j)
                            combos_[r][j] = fe_sub(k_, combos_[r][j], fe_mul(k_, f, combo[j]));
                    }
                }
                pivots_.push_back(c);
                rows_.push_back(std::move(v));
                if (track_) combos_.push_back(std::move(combo));
                return true;
            }
        }
        last_dependent_combo_ = std::move(combo);
        return false;
    }

    // coordinates of v in terms of the stored rows, if v lies in the span
    std::optional<std::vector<FieldElement>> coordinates(std::vector<FieldElement> v) const {
        std::vector<FieldElement> coords(rows_.size(), fe_zero(k_));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            FieldElement f = v[pivots_[r]];
            if (fe_is_zero(f)) continue;
            coords[r] = f;
            for (int j = 0; j < width_; ++j) v[j] = fe_sub(k_, v[j], fe_mul(k_, f, rows_[r][j]));
        }
        for (const auto& x : v)
            if (!fe_is_zero(x)) return std::nullopt;
        return coords;
    }

    bool contains(const std::vector<FieldElement>& v) const { return coordinates(v).has_value(); }

    // after a dependent insert (with tracking): coefficients over the
    // inserted vectors whose combination is zero
    const std::vector<FieldElement>& dependency() const { return last_dependent_combo_; }

    const std::vector<std::vector<FieldElement>>& rows() const { return rows_; }

private:
    void reduce(std::vector<FieldElement>& v, std::vector<FieldElement>& combo) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            FieldElement f = v[pivots_[r]];
            if (fe_is_zero(f)) continue;
            for (int j = 0; j < width_; ++j) v[j] = fe_sub(k_, v[j], fe_mul(k_, f, rows_[r][j]));
            if (track_) {
                combo.resize(std::max(combo.size(), combos_[r].size()), fe_zero(k_));
                for (std::size_t j = 0; j < combos_[r].size(); ++j)
                    combo[j] = fe_sub(k_, combo[j], fe_mul(k_, f, combos_[r][j]));
            }
        }
    }

    FieldSpec k_;
    int width_;
    bool track_;
    int inserted_ = 0;
    std::vector<std::vector<FieldElement>> rows_;
    std::vector<std::vector<FieldElement>> combos_;
    std::vector<int> pivots_;
    std::vector<FieldElement> last_dependent_combo_;
};

// Minimal polynomial of a square matrix: the lcm over basis vectors of the
// annihilator found when the Krylov sequence e, Me, M^2 e, ... first becomes
// dependent.
inline Poly min_poly(const FieldSpec& k, const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("min_poly needs a square matrix");
    int n = m.rows;
    if (n == 0) return poly_one(k);
    Poly overall = poly_one(k);
    for (int start = 0; start < n; ++start) {
        RowSpace space(k, n, /*track=*/true);
        std::vector<FieldElement> v(n, fe_zero(k));
        v[start] = fe_one(k);
        while (space.insert(v)) v = mat_vec(k, m, v);
        Poly local;
        local.c = space.dependency();
        local = poly_monic(k, poly_trim(std::move(local)));
        Poly g = poly_gcd(k, overall, local);
        overall = poly_mul(k, poly_div(k, overall, g), local);
        if (overall.degree() >= n) break;
    }
    return poly_monic(k, overall);
}

}  // namespace blockfuse
