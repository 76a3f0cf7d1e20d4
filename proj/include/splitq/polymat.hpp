#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitq/fqmat.hpp"
#include "splitq/poly.hpp"

namespace splitq {

// Dense matrix over F_q[x], row-major.  Value type.
class PolyMatrix {
public:
    PolyMatrix() = default;  // detached; assign before use
    PolyMatrix(const Fq& f, std::size_t rows, std::size_t cols);  // zero entries

    static PolyMatrix identity(const Fq& f, std::size_t n);
    // Rectangular diagonal: entry (i,i) = entries[i], rest zero.
    static PolyMatrix diagonal(const Fq& f, std::size_t rows, std::size_t cols,
                               const std::vector<Poly>& entries);
    // Text format: rows separated by ";", entries by ",", each entry in the
    // polynomial term grammar.
    static PolyMatrix parse(const Fq& f, const std::string& text);
    // xI - A for a square scalar matrix A.
    static PolyMatrix char_matrix(const FqMat& a);
    // x^d E + sum_j x^j C_j where E has ones on the main diagonal and
    // d = coeffs.size(); the space of these is M_q(rows, cols, d).
    static PolyMatrix degree_shaped(const Fq& f, std::size_t rows, std::size_t cols,
                                    const std::vector<FqMat>& coeffs);

    const Fq& field() const;
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Poly p);

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    // Degree-shape membership test for M_q(rows, cols, d).
    bool is_degree_shaped(unsigned d) const;

    std::string to_string() const;

private:
    const Fq* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> data_;
};

// Diagonal of the Smith Normal Form plus optional unimodular witnesses with
// left * P * right = diagonal matrix exactly.
struct SmithForm {
    std::vector<Poly> diagonal;  // length min(rows, cols); monic or zero;
                                 // each entry divides the next, zeros last
    std::optional<PolyMatrix> left;   // rows x rows
    std::optional<PolyMatrix> right;  // cols x cols
};

SmithForm smith_normal_form(const PolyMatrix& p, bool want_witnesses = false);

// The SNF diagonal alone.
std::vector<Poly> invariant_factors(const PolyMatrix& p);

// Monic gcd of all i x i minors (zero if all vanish); i = 0 gives 1.  Uses
// explicit minor expansion for min(rows, cols) <= 4, the SNF product above
// that.
Poly determinantal_divisor(const PolyMatrix& p, unsigned i);

// True iff all invariant factors are 1 (gcd of maximal minors is 1).
bool is_unimodular(const PolyMatrix& p);

// Determinant of a square polynomial matrix by Laplace expansion.
Poly poly_det(const PolyMatrix& p);

// The md x md block matrix with identity blocks on the subdiagonal and last
// block column -C_0, ..., -C_{d-1}; linearizes x^d I + sum x^j C_j.
FqMat block_companion(const std::vector<FqMat>& coeffs);

// Companion matrix of a monic polynomial of degree >= 1.
FqMat companion(const Poly& f);

}  // namespace splitq
