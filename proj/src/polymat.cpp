#include "splitq/polymat.hpp"

#include <algorithm>
#include <stdexcept>

#include "splitq/errors.hpp"
#include "splitq/text.hpp"

namespace splitq {

namespace {

void require_attached(const Fq* f) {
    if (!f) throw std::invalid_argument("use of a default-constructed PolyMatrix");
}

}  // namespace

PolyMatrix::PolyMatrix(const Fq& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, Poly::zero(f)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix dimensions");
}

const Fq& PolyMatrix::field() const {
    require_attached(field_);
    return *field_;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
    require_attached(field_);
    require_same_field(p.field(), *field_);
    data_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::identity(const Fq& f, std::size_t n) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Poly::one(f));
    return m;
}

PolyMatrix PolyMatrix::diagonal(const Fq& f, std::size_t rows, std::size_t cols,
                                const std::vector<Poly>& entries) {
    if (entries.size() != std::min(rows, cols))
        throw std::invalid_argument("diagonal length must be min(rows, cols)");
    PolyMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
    return m;
}

PolyMatrix PolyMatrix::parse(const Fq& f, const std::string& text) {
    auto row_texts = detail::split_trim(text, ';');
    if (row_texts.empty()) throw parse_error("empty matrix text");
    std::vector<std::vector<Poly>> rows;
    for (const auto& rt : row_texts) {
        auto cells = detail::split_trim(rt, ',');
        if (cells.empty()) throw parse_error("empty matrix row");
        std::vector<Poly> row;
        for (const auto& c : cells) row.push_back(Poly::parse(f, c));
        if (!rows.empty() && row.size() != rows[0].size())
            throw parse_error("ragged matrix rows");
        rows.push_back(std::move(row));
    }
    PolyMatrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    return m;
}

PolyMatrix PolyMatrix::char_matrix(const FqMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_matrix needs a square matrix");
    return degree_shaped(a.field(), a.rows(), a.cols(), {-a});
}

PolyMatrix PolyMatrix::degree_shaped(const Fq& f, std::size_t rows, std::size_t cols,
                                     const std::vector<FqMat>& coeffs) {
    const unsigned d = static_cast<unsigned>(coeffs.size());
    if (d == 0) throw std::invalid_argument("degree shape needs at least one coefficient");
    PolyMatrix m(f, rows, cols);
    for (const auto& c : coeffs) {
        require_same_field(c.field(), f);
        if (c.rows() != rows || c.cols() != cols)
            throw std::invalid_argument("coefficient matrix dimension mismatch");
    }
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<elem> codes(d + 1, 0);
            for (unsigned t = 0; t < d; ++t) codes[t] = coeffs[t].at(i, j);
            if (i == j) codes[d] = 1;
            m.set(i, j, Poly(f, std::move(codes)));
        }
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    require_attached(field_);
    require_same_field(*field_, o.field());
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix r(*field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            const Poly& a = at(i, t);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.set(i, j, r.at(i, j) + a * o.at(t, j));
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    require_attached(field_);
    require_same_field(*field_, o.field());
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix r(*field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    require_attached(field_);
    require_same_field(*field_, o.field());
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix r(*field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

bool PolyMatrix::is_degree_shaped(unsigned d) const {
    require_attached(field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Poly& p = at(i, j);
            if (i == j && i < std::min(rows_, cols_)) {
                if (!p.is_monic() || p.degree() != static_cast<int>(d)) return false;
            } else if (p.degree() >= static_cast<int>(d)) {
                return false;
            }
        }
    return true;
}

std::string PolyMatrix::to_string() const {
    require_attached(field_);
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out += ";";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ",";
            out += at(i, j).to_string();
        }
    }
    return out;
}

namespace {

// Mutable SNF state: M plus optional witnesses with left * P * right = M.
struct SnfState {
    PolyMatrix m;
    std::optional<PolyMatrix> left, right;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Poly t = m.at(a, j);
            m.set(a, j, m.at(b, j));
            m.set(b, j, t);
        }
        if (left)
            for (std::size_t j = 0; j < left->cols(); ++j) {
                Poly t = left->at(a, j);
                left->set(a, j, left->at(b, j));
                left->set(b, j, t);
            }
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Poly t = m.at(i, a);
            m.set(i, a, m.at(i, b));
            m.set(i, b, t);
        }
        if (right)
            for (std::size_t i = 0; i < right->rows(); ++i) {
                Poly t = right->at(i, a);
                right->set(i, a, right->at(i, b));
                right->set(i, b, t);
            }
    }

    // row dst += c * row src
    void add_row(std::size_t dst, std::size_t src, const Poly& c) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.set(dst, j, m.at(dst, j) + c * m.at(src, j));
        if (left)
            for (std::size_t j = 0; j < left->cols(); ++j)
                left->set(dst, j, left->at(dst, j) + c * left->at(src, j));
    }

    // col dst += c * col src
    void add_col(std::size_t dst, std::size_t src, const Poly& c) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            m.set(i, dst, m.at(i, dst) + c * m.at(i, src));
        if (right)
            for (std::size_t i = 0; i < right->rows(); ++i)
                right->set(i, dst, right->at(i, dst) + c * right->at(i, src));
    }

    void scale_col(std::size_t j, elem s) {
        for (std::size_t i = 0; i < m.rows(); ++i) m.set(i, j, m.at(i, j).scaled(s));
        if (right)
            for (std::size_t i = 0; i < right->rows(); ++i)
                right->set(i, j, right->at(i, j).scaled(s));
    }
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& p, bool want_witnesses) {
    const Fq& f = p.field();
    const std::size_t n = p.rows(), k = p.cols(), steps = std::min(n, k);

    SnfState st;
    st.m = p;
    if (want_witnesses) {
        st.left = PolyMatrix::identity(f, n);
        st.right = PolyMatrix::identity(f, k);
    }

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // minimal-degree nonzero entry of the trailing block, ties row-major
            std::size_t bi = 0, bj = 0;
            int best = -1;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < k; ++j) {
                    const Poly& e = st.m.at(i, j);
                    if (e.is_zero()) continue;
                    if (best < 0 || e.degree() < best) {
                        best = e.degree();
                        bi = i;
                        bj = j;
                    }
                }
            if (best < 0) {
                t = steps;  // trailing block zero: remaining diagonal stays 0
                break;
            }
            st.swap_rows(t, bi);
            st.swap_cols(t, bj);
            const Poly pivot = st.m.at(t, t);

            bool dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (st.m.at(i, t).is_zero()) continue;
                auto [quot, rem] = Poly::divrem(st.m.at(i, t), pivot);
                st.add_row(i, t, -quot);
                if (!rem.is_zero()) dirty = true;
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                if (st.m.at(t, j).is_zero()) continue;
                auto [quot, rem] = Poly::divrem(st.m.at(t, j), pivot);
                st.add_col(j, t, -quot);
                if (!rem.is_zero()) dirty = true;
            }
            if (dirty) continue;  // a remainder of smaller degree exists; re-pivot

            // divisibility sweep: pull a non-multiple into the pivot row
            bool fixed = true;
            for (std::size_t i = t + 1; i < n && fixed; ++i)
                for (std::size_t j = t + 1; j < k; ++j)
                    if (!pivot.divides(st.m.at(i, j))) {
                        st.add_row(t, i, Poly::one(f));
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
        if (t == steps) break;
    }

    for (std::size_t t = 0; t < steps; ++t) {
        const Poly& d = st.m.at(t, t);
        if (!d.is_zero() && d.leading() != 1) st.scale_col(t, f.inv(d.leading()));
    }

    SmithForm out;
    out.diagonal.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(st.m.at(t, t));
    out.left = std::move(st.left);
    out.right = std::move(st.right);
    return out;
}

std::vector<Poly> invariant_factors(const PolyMatrix& p) {
    return smith_normal_form(p).diagonal;
}

namespace {

Poly det_laplace(const PolyMatrix& p, std::vector<std::size_t> row_idx,
                 std::vector<std::size_t> col_idx) {
    const Fq& f = p.field();
    const std::size_t sz = row_idx.size();
    if (sz == 1) return p.at(row_idx[0], col_idx[0]);
    Poly acc = Poly::zero(f);
    std::vector<std::size_t> sub_rows(row_idx.begin() + 1, row_idx.end());
    for (std::size_t c = 0; c < sz; ++c) {
        const Poly& e = p.at(row_idx[0], col_idx[c]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(sz - 1);
        for (std::size_t t = 0; t < sz; ++t)
            if (t != c) sub_cols.push_back(col_idx[t]);
        Poly term = e * det_laplace(p, sub_rows, sub_cols);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t bound) {
    const std::size_t r = idx.size();
    for (std::size_t pos = r; pos-- > 0;) {
        if (idx[pos] + (r - pos) < bound) {
            ++idx[pos];
            for (std::size_t t = pos + 1; t < r; ++t) idx[t] = idx[t - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Poly poly_det(const PolyMatrix& p) {
    if (p.rows() != p.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<std::size_t> idx(p.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return det_laplace(p, idx, idx);
}

Poly determinantal_divisor(const PolyMatrix& p, unsigned i) {
    const Fq& f = p.field();
    if (i == 0) return Poly::one(f);
    if (i > std::min(p.rows(), p.cols()))
        throw std::invalid_argument("determinantal divisor index out of range");

    if (std::min(p.rows(), p.cols()) <= 4) {
        Poly g = Poly::zero(f);
        std::vector<std::size_t> rsel(i), csel0(i);
        for (unsigned t = 0; t < i; ++t) rsel[t] = csel0[t] = t;
        bool more_rows = true;
        while (more_rows) {
            std::vector<std::size_t> csel = csel0;
            bool more_cols = true;
            while (more_cols) {
                g = Poly::gcd(g, det_laplace(p, rsel, csel));
                if (g.is_one()) return g;
                more_cols = next_combination(csel, p.cols());
            }
            more_rows = next_combination(rsel, p.rows());
        }
        return g;  // monic by gcd normalization, or zero
    }

    std::vector<Poly> diag = invariant_factors(p);
    Poly g = Poly::one(f);
    for (unsigned t = 0; t < i; ++t) {
        if (diag[t].is_zero()) return Poly::zero(f);
        g = g * diag[t];
    }
    return g;
}

bool is_unimodular(const PolyMatrix& p) {
    for (const Poly& d : invariant_factors(p))
        if (!d.is_one()) return false;
    return true;
}

FqMat block_companion(const std::vector<FqMat>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("block_companion needs d >= 1 blocks");
    const Fq& f = coeffs[0].field();
    const std::size_t m = coeffs[0].rows();
    const std::size_t d = coeffs.size();
    for (const auto& c : coeffs) {
        require_same_field(c.field(), f);
        if (c.rows() != m || c.cols() != m)
            throw std::invalid_argument("block_companion blocks must be square of equal size");
    }
    FqMat a(f, m * d, m * d);
    for (std::size_t blk = 0; blk + 1 < d; ++blk)
        for (std::size_t t = 0; t < m; ++t) a.set((blk + 1) * m + t, blk * m + t, 1);
    for (std::size_t blk = 0; blk < d; ++blk)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                a.set(blk * m + r, (d - 1) * m + c, f.neg(coeffs[blk].at(r, c)));
    return a;
}

FqMat companion(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
    const Fq& k = f.field();
    std::vector<FqMat> coeffs;
    for (int i = 0; i < f.degree(); ++i) {
        FqMat c(k, 1, 1);
        c.set(0, 0, f.coeff(i));
        coeffs.push_back(c);
    }
    return block_companion(coeffs);
}

}  // namespace splitq
