#include "y2p/matrix.hpp"

#include <algorithm>
#include <random>

#include "y2p/kernels.hpp"

namespace y2p {

namespace rowops {

void add(const FieldSpec& f, uint32_t* dst, const uint32_t* src, size_t words) {
    kern::ops().add(dst, src, words, f.p);
}

void sub(const FieldSpec& f, uint32_t* dst, const uint32_t* src, size_t words) {
    kern::ops().sub(dst, src, words, f.p);
}

void axpy(const FieldSpec& f, uint32_t* dst, const uint32_t* src, const FieldScalar& c,
          size_t entries) {
    if (c.is_zero()) return;
    const auto& cc = c.coeffs();
    const bool prime_scalar =
        std::all_of(cc.begin() + 1, cc.end(), [](uint32_t x) { return x == 0; });
    if (prime_scalar) {
        kern::ops().axpy(dst, src, cc[0], entries * f.m, f.p);
        return;
    }
    for (size_t e = 0; e < entries; ++e) {
        std::vector<uint32_t> s(src + e * f.m, src + (e + 1) * f.m);
        FieldScalar prod = FieldScalar::from_coeffs(f, std::move(s)) * c;
        kern::ops().add(dst + e * f.m, prod.coeffs().data(), f.m, f.p);
    }
}

void scale(const FieldSpec& f, uint32_t* dst, const FieldScalar& c, size_t entries) {
    const auto& cc = c.coeffs();
    const bool prime_scalar =
        std::all_of(cc.begin() + 1, cc.end(), [](uint32_t x) { return x == 0; });
    if (prime_scalar) {
        kern::ops().scale(dst, cc[0], entries * f.m, f.p);
        return;
    }
    for (size_t e = 0; e < entries; ++e) {
        std::vector<uint32_t> s(dst + e * f.m, dst + (e + 1) * f.m);
        FieldScalar prod = FieldScalar::from_coeffs(f, std::move(s)) * c;
        std::copy(prod.coeffs().begin(), prod.coeffs().end(), dst + e * f.m);
    }
}

bool is_zero(const uint32_t* a, size_t words) {
    for (size_t i = 0; i < words; ++i)
        if (a[i]) return false;
    return true;
}

} // namespace rowops

Matrix::Matrix(const FieldSpec& f, size_t rows, size_t cols)
    : spec_(f), rows_(rows), cols_(cols), data_(rows * cols * f.m, 0) {}

Matrix Matrix::identity(const FieldSpec& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

FieldScalar Matrix::get(size_t r, size_t c) const {
    const uint32_t* e = row(r) + c * spec_.m;
    return FieldScalar::from_coeffs(spec_, std::vector<uint32_t>(e, e + spec_.m));
}

void Matrix::set(size_t r, size_t c, const FieldScalar& v) {
    if (v.spec() != spec_) throw Error("matrix/scalar field mismatch");
    std::copy(v.coeffs().begin(), v.coeffs().end(), row(r) + c * spec_.m);
}

void Matrix::set_int(size_t r, size_t c, int64_t v) {
    set(r, c, FieldScalar::from_int(spec_, v));
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (spec_ != o.spec_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix shape/field mismatch in +");
    Matrix r = *this;
    rowops::add(spec_, r.data_.data(), o.data_.data(), data_.size());
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (spec_ != o.spec_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix shape/field mismatch in -");
    Matrix r = *this;
    rowops::sub(spec_, r.data_.data(), o.data_.data(), data_.size());
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (spec_ != o.spec_ || cols_ != o.rows_) throw Error("matrix shape/field mismatch in *");
    Matrix r(spec_, rows_, o.cols_);
    if (spec_.m == 1) {
        for (size_t i = 0; i < rows_; ++i) {
            uint32_t* ri = r.row(i);
            const uint32_t* ai = row(i);
            for (size_t k = 0; k < cols_; ++k)
                if (ai[k]) kern::ops().axpy(ri, o.row(k), ai[k], o.cols_, spec_.p);
        }
        return r;
    }
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            FieldScalar a = get(i, k);
            if (!a.is_zero()) rowops::axpy(spec_, r.row(i), o.row(k), a, o.cols_);
        }
    return r;
}

Matrix Matrix::scaled(const FieldScalar& c) const {
    Matrix r = *this;
    rowops::scale(spec_, r.data_.data(), c, rows_ * cols_);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(spec_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            std::copy(row(i) + j * spec_.m, row(i) + (j + 1) * spec_.m,
                      r.row(j) + i * spec_.m);
    return r;
}

Matrix Matrix::kron(const Matrix& o) const {
    if (spec_ != o.spec_) throw Error("field mismatch in kron");
    Matrix r(spec_, rows_ * o.rows_, cols_ * o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            FieldScalar a = get(i, j);
            if (a.is_zero()) continue;
            for (size_t k = 0; k < o.rows_; ++k) {
                uint32_t* dst = r.row(i * o.rows_ + k) + j * o.cols_ * spec_.m;
                rowops::axpy(spec_, dst, o.row(k), a, o.cols_);
            }
        }
    return r;
}

Matrix Matrix::pow(uint64_t e) const {
    if (rows_ != cols_) throw Error("pow of non-square matrix");
    Matrix r = identity(spec_, rows_);
    Matrix b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const { return rowops::is_zero(data_.data(), data_.size()); }

size_t Matrix::rank() const { return echelon().rank; }

bool Matrix::is_identity() const {
    return rows_ == cols_ && *this == identity(spec_, rows_);
}

RowVec Matrix::apply(const RowVec& x) const {
    if (x.size() != cols_ * spec_.m) throw Error("apply: vector length mismatch");
    RowVec y(rows_ * spec_.m, 0);
    if (spec_.m == 1) {
        for (size_t i = 0; i < rows_; ++i) {
            const uint32_t* ai = row(i);
            uint64_t acc = 0;
            for (size_t j = 0; j < cols_; ++j) {
                acc += static_cast<uint64_t>(ai[j]) * x[j];
                if ((j & 63) == 63) acc %= spec_.p;
            }
            y[i] = static_cast<uint32_t>(acc % spec_.p);
        }
        return y;
    }
    for (size_t i = 0; i < rows_; ++i) {
        FieldScalar acc = FieldScalar::zero(spec_);
        for (size_t j = 0; j < cols_; ++j) {
            std::vector<uint32_t> xe(x.begin() + j * spec_.m, x.begin() + (j + 1) * spec_.m);
            acc = acc + get(i, j) * FieldScalar::from_coeffs(spec_, std::move(xe));
        }
        std::copy(acc.coeffs().begin(), acc.coeffs().end(), y.data() + i * spec_.m);
    }
    return y;
}

Echelon Matrix::echelon() const {
    Echelon e{*this, {}, 0};
    Matrix& a = e.rref;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t pivot = rows_;
        for (size_t i = r; i < rows_; ++i)
            if (!rowops::is_zero(a.row(i) + c * spec_.m, spec_.m)) {
                pivot = i;
                break;
            }
        if (pivot == rows_) continue;
        if (pivot != r)
            std::swap_ranges(a.row(r), a.row(r) + cols_ * spec_.m, a.row(pivot));
        FieldScalar inv = a.get(r, c).inverse();
        if (!inv.is_one()) rowops::scale(spec_, a.row(r), inv, cols_);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            FieldScalar f = a.get(i, c);
            if (f.is_zero()) continue;
            rowops::axpy(spec_, a.row(i), a.row(r), -f, cols_);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

Matrix Matrix::kernel_basis() const {
    Echelon e = echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : e.pivots) is_pivot[c] = true;
    size_t nfree = cols_ - e.rank;
    Matrix basis(spec_, nfree, cols_);
    size_t bi = 0;
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        basis.set_int(bi, c, 1);
        for (size_t r = 0; r < e.rank; ++r) {
            FieldScalar v = e.rref.get(r, c);
            if (!v.is_zero()) basis.set(bi, e.pivots[r], -v);
        }
        ++bi;
    }
    return basis;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    // eliminate on [A | I]
    Matrix aug(spec_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        std::copy(row(i), row(i) + cols_ * spec_.m, aug.row(i));
        aug.set_int(i, cols_ + i, 1);
    }
    Echelon e = aug.echelon();
    for (size_t i = 0; i < rows_; ++i)
        if (i >= e.pivots.size() || e.pivots[i] != i) throw Error("matrix is singular");
    Matrix inv(spec_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        std::copy(e.rref.row(i) + cols_ * spec_.m, e.rref.row(i) + 2 * cols_ * spec_.m,
                  inv.row(i));
    return inv;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw Error("vstack of nothing");
    size_t total = 0;
    for (const auto& m : parts) {
        if (m.spec() != parts[0].spec() || m.cols() != parts[0].cols())
            throw Error("vstack shape/field mismatch");
        total += m.rows();
    }
    Matrix r(parts[0].spec(), total, parts[0].cols());
    size_t at = 0;
    for (const auto& m : parts)
        for (size_t i = 0; i < m.rows(); ++i, ++at)
            std::copy(m.row(i), m.row(i) + m.cols() * m.wpe(), r.row(at));
    return r;
}

std::optional<Matrix> find_intertwiner(const std::vector<Matrix>& a,
                                       const std::vector<Matrix>& b, uint64_t seed) {
    if (a.size() != b.size() || a.empty()) throw Error("intertwiner: operator lists mismatch");
    const FieldSpec f = a[0].spec();
    const size_t n = a[0].rows();
    if (b[0].rows() != n) return std::nullopt;
    // X a_k - b_k X = 0 reads (I (x) a_k^T - b_k (x) I) vec(X) = 0 when
    // vec stacks X row-major
    std::vector<Matrix> blocks;
    const Matrix id = Matrix::identity(f, n);
    for (size_t k = 0; k < a.size(); ++k)
        blocks.push_back(id.kron(a[k].transpose()) - b[k].kron(id));
    Matrix ker = Matrix::vstack(blocks).kernel_basis();
    if (ker.rows() == 0) return std::nullopt;

    auto unvec = [&](const RowVec& v) {
        Matrix x(f, n, n);
        std::copy(v.begin(), v.end(), x.row(0));
        return x;
    };
    auto invertible = [&](const Matrix& x) { return x.rank() == n; };

    for (size_t i = 0; i < ker.rows(); ++i) {
        Matrix x = unvec(RowVec(ker.row(i), ker.row(i) + n * n * f.m));
        if (invertible(x)) return x;
    }
    // random combinations of the kernel basis
    std::mt19937_64 rng(seed);
    auto elems = all_elements(f);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Matrix x(f, n, n);
        for (size_t i = 0; i < ker.rows(); ++i) {
            FieldScalar c = elems[rng() % elems.size()];
            rowops::axpy(f, x.row(0), ker.row(i), c, n * n);
        }
        if (invertible(x)) return x;
    }
    return std::nullopt;
}

} // namespace y2p
