#include "splitq/fqmat.hpp"

#include <stdexcept>

namespace splitq {

namespace {

void require_attached(const Fq* f) {
    if (!f) throw std::invalid_argument("use of a default-constructed FqMat");
}

void require_same(const FqMat& a, const FqMat& b) {
    require_same_field(a.field(), b.field());
}

}  // namespace

FqMat::FqMat(const Fq& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix dimensions");
}

const Fq& FqMat::field() const {
    require_attached(field_);
    return *field_;
}

FqMat FqMat::identity(const Fq& f, std::size_t n) {
    FqMat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMat FqMat::from_rank(const Fq& f, std::size_t rows, std::size_t cols,
                       std::uint64_t rank) {
    FqMat m(f, rows, cols);
    for (auto& v : m.data_) {
        v = static_cast<elem>(rank % f.q());
        rank /= f.q();
    }
    if (rank != 0) throw std::invalid_argument("matrix rank index out of range");
    return m;
}

FqMat FqMat::from_rows(const Fq& f, const std::vector<std::vector<elem>>& rows) {
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("empty matrix dimensions");
    FqMat m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) {
            f.check(rows[i][j]);
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

FqMat FqMat::operator+(const FqMat& o) const {
    require_same(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    FqMat r(*field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = field_->add(data_[i], o.data_[i]);
    return r;
}

FqMat FqMat::operator-(const FqMat& o) const { return *this + (-o); }

FqMat FqMat::operator-() const {
    require_attached(field_);
    FqMat r(*field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->neg(data_[i]);
    return r;
}

FqMat FqMat::operator*(const FqMat& o) const {
    require_same(*this, o);
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    FqMat r(*field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            elem a = at(i, t);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.set(i, j, field_->add(r.at(i, j), field_->mul(a, o.at(t, j))));
        }
    return r;
}

std::vector<elem> FqMat::mul_vec(const std::vector<elem>& v) const {
    require_attached(field_);
    if (v.size() != cols_) throw std::invalid_argument("vector dimension mismatch");
    std::vector<elem> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] = field_->add(r[i], field_->mul(at(i, j), v[j]));
    return r;
}

FqMat FqMat::transposed() const {
    require_attached(field_);
    FqMat r(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool FqMat::is_zero() const {
    for (elem v : data_)
        if (v != 0) return false;
    return true;
}

FqMat FqMat::rref(std::vector<std::size_t>* pivots) const {
    require_attached(field_);
    const Fq& f = *field_;
    FqMat m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && m.at(pivot, c) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t j = c; j < cols_; ++j) {
                elem t = m.at(r, j);
                m.set(r, j, m.at(pivot, j));
                m.set(pivot, j, t);
            }
        elem s = f.inv(m.at(r, c));
        for (std::size_t j = c; j < cols_; ++j) m.set(r, j, f.mul(s, m.at(r, j)));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            elem factor = m.at(i, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols_; ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

std::size_t FqMat::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::vector<std::vector<elem>> FqMat::nullspace() const {
    require_attached(field_);
    const Fq& f = *field_;
    std::vector<std::size_t> pivots;
    FqMat m = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<elem>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<elem> v(cols_, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f.neg(m.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace splitq
