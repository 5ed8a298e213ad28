#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "y2p/field.hpp"

namespace y2p {

// Flat coefficient storage: one entry of F_{p^m} occupies m consecutive words.
using RowVec = std::vector<uint32_t>;

namespace rowops {

// dst += src, componentwise (valid for any m: addition is coefficientwise)
void add(const FieldSpec& f, uint32_t* dst, const uint32_t* src, size_t words);
void sub(const FieldSpec& f, uint32_t* dst, const uint32_t* src, size_t words);
// dst += c * src over n entries; uses the SIMD kernels when c lies in the
// prime subfield, the schoolbook extension product otherwise
void axpy(const FieldSpec& f, uint32_t* dst, const uint32_t* src, const FieldScalar& c,
          size_t entries);
void scale(const FieldSpec& f, uint32_t* dst, const FieldScalar& c, size_t entries);
bool is_zero(const uint32_t* a, size_t words);

} // namespace rowops

struct Echelon;

// Dense matrix over F_{p^m}.  Values are immutable in spirit: the mutating
// setters are for construction; algorithms return fresh matrices.
class Matrix {
public:
    Matrix() : Matrix(FieldSpec::prime_field(2), 0, 0) {}
    Matrix(const FieldSpec& f, size_t rows, size_t cols);
    static Matrix identity(const FieldSpec& f, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldSpec& spec() const { return spec_; }
    size_t wpe() const { return spec_.m; } // words per entry

    FieldScalar get(size_t r, size_t c) const;
    void set(size_t r, size_t c, const FieldScalar& v);
    void set_int(size_t r, size_t c, int64_t v);

    uint32_t* row(size_t r) { return data_.data() + r * cols_ * spec_.m; }
    const uint32_t* row(size_t r) const { return data_.data() + r * cols_ * spec_.m; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const FieldScalar& c) const;
    Matrix transpose() const;
    Matrix kron(const Matrix& o) const;
    Matrix pow(uint64_t e) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    // y = A x, x given as a flat column vector of length cols
    RowVec apply(const RowVec& x) const;

    Echelon echelon() const;
    size_t rank() const;

    // Rows form a basis of {v : A v = 0}; rank-nullity gives rows() == cols - rank(A).
    Matrix kernel_basis() const;

    Matrix inverse() const; // throws Error when singular

    static Matrix vstack(const std::vector<Matrix>& parts);

private:
    FieldSpec spec_;
    size_t rows_, cols_;
    std::vector<uint32_t> data_;
};

struct Echelon {
    Matrix rref;
    std::vector<size_t> pivots;
    size_t rank = 0;
};

// Invertible X with X a_k = b_k X for all k, if one can be found at desk
// scale (kernel of the intertwiner system, scanned for an invertible point).
std::optional<Matrix> find_intertwiner(const std::vector<Matrix>& a,
                                       const std::vector<Matrix>& b, uint64_t seed = 1);

} // namespace y2p
