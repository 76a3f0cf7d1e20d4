#pragma once

#include <cstdint>
#include <vector>

#include "splitq/fq.hpp"

namespace splitq {

// Dense matrix over F_q, row-major.  Value type; dimensions fixed after
// construction but entries assignable.
class FqMat {
public:
    FqMat() = default;  // detached; assign before use
    FqMat(const Fq& f, std::size_t rows, std::size_t cols);  // zero-filled

    static FqMat identity(const Fq& f, std::size_t n);
    // Entries are the base-q digits of rank in row-major order, entry (0,0)
    // least significant; rank in [0, q^(rows*cols)).
    static FqMat from_rank(const Fq& f, std::size_t rows, std::size_t cols,
                           std::uint64_t rank);
    static FqMat from_rows(const Fq& f, const std::vector<std::vector<elem>>& rows);

    const Fq& field() const;
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, elem v) { data_[i * cols_ + j] = v; }

    FqMat operator+(const FqMat& o) const;
    FqMat operator-(const FqMat& o) const;
    FqMat operator-() const;
    FqMat operator*(const FqMat& o) const;
    std::vector<elem> mul_vec(const std::vector<elem>& v) const;
    FqMat transposed() const;

    bool operator==(const FqMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const FqMat& o) const { return !(*this == o); }
    bool is_zero() const;

    std::size_t rank() const;
    // Reduced row echelon form; pivot column indices appended to *pivots when
    // non-null.
    FqMat rref(std::vector<std::size_t>* pivots = nullptr) const;
    // Basis of the right kernel {v : Av = 0}, one vector per free column of
    // the RREF.
    std::vector<std::vector<elem>> nullspace() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

private:
    const Fq* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<elem> data_;
};

}  // namespace splitq
