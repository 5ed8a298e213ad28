#include "y2p/spin.hpp"

#include <algorithm>
#include <random>

namespace y2p {

SpanBasis::SpanBasis(const FieldSpec& f, size_t dim) : f_(f), dim_(dim) {}

void SpanBasis::reduce(RowVec& v) const {
    const uint32_t m = f_.m;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const size_t p = pivots_[r];
        if (rowops::is_zero(v.data() + p * m, m)) continue;
        std::vector<uint32_t> c(v.begin() + p * m, v.begin() + (p + 1) * m);
        rowops::axpy(f_, v.data(), rows_[r].data(), -FieldScalar::from_coeffs(f_, c), dim_);
    }
}

bool SpanBasis::insert(RowVec v) {
    if (v.size() != dim_ * f_.m) throw Error("SpanBasis: vector length mismatch");
    reduce(v);
    const uint32_t m = f_.m;
    size_t pivot = dim_;
    for (size_t e = 0; e < dim_; ++e)
        if (!rowops::is_zero(v.data() + e * m, m)) {
            pivot = e;
            break;
        }
    if (pivot == dim_) return false;
    std::vector<uint32_t> c(v.begin() + pivot * m, v.begin() + (pivot + 1) * m);
    rowops::scale(f_, v.data(), FieldScalar::from_coeffs(f_, c).inverse(), dim_);
    // keep earlier rows reduced against the new pivot
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rowops::is_zero(rows_[r].data() + pivot * m, m)) continue;
        std::vector<uint32_t> rc(rows_[r].begin() + pivot * m,
                                 rows_[r].begin() + (pivot + 1) * m);
        rowops::axpy(f_, rows_[r].data(), v.data(), -FieldScalar::from_coeffs(f_, rc), dim_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool SpanBasis::contains(RowVec v) const {
    reduce(v);
    return rowops::is_zero(v.data(), v.size());
}

Matrix SpanBasis::as_matrix() const {
    // rows sorted by pivot for a canonical result
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivots_[a] < pivots_[b]; });
    Matrix out(f_, rows_.size(), dim_);
    for (size_t i = 0; i < order.size(); ++i)
        std::copy(rows_[order[i]].begin(), rows_[order[i]].end(), out.row(i));
    return out;
}

SpanBasis spin_closure(const std::vector<Matrix>& ops, const RowVec& v) {
    if (ops.empty()) throw Error("spin_closure: no operators");
    const FieldSpec& f = ops[0].spec();
    const size_t dim = ops[0].rows();
    SpanBasis basis(f, dim);
    std::vector<RowVec> frontier;
    if (basis.insert(v)) frontier.push_back(v);
    while (!frontier.empty() && !basis.full()) {
        std::vector<RowVec> next;
        for (const auto& x : frontier) {
            for (const auto& op : ops) {
                RowVec y = op.apply(x);
                if (basis.insert(y)) {
                    if (basis.full()) return basis;
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return basis;
}

void for_each_projective_point(const FieldSpec& f, size_t dim,
                               const std::function<bool(const RowVec&)>& fn) {
    const auto elems = all_elements(f);
    const uint32_t m = f.m;
    // leading coordinate (the first nonzero one) fixed to 1
    for (size_t lead = 0; lead < dim; ++lead) {
        const size_t tail = dim - lead - 1;
        std::vector<size_t> idx(tail, 0);
        while (true) {
            RowVec v(dim * m, 0);
            v[lead * m] = 1 % f.p;
            for (size_t t = 0; t < tail; ++t) {
                const auto& c = elems[idx[t]].coeffs();
                std::copy(c.begin(), c.end(), v.begin() + (lead + 1 + t) * m);
            }
            if (!fn(v)) return;
            size_t t = 0;
            for (; t < tail; ++t) {
                if (++idx[t] < elems.size()) break;
                idx[t] = 0;
            }
            if (t == tail) break;
        }
    }
}

RowVec random_nonzero_vector(const FieldSpec& f, size_t dim, std::mt19937_64& rng) {
    RowVec v(dim * f.m, 0);
    while (rowops::is_zero(v.data(), v.size()))
        for (auto& x : v) x = static_cast<uint32_t>(rng() % f.p);
    return v;
}

bool is_invariant_subspace(const std::vector<Matrix>& ops, const Matrix& rows) {
    SpanBasis basis(rows.spec(), rows.cols());
    for (size_t i = 0; i < rows.rows(); ++i)
        basis.insert(RowVec(rows.row(i), rows.row(i) + rows.cols() * rows.wpe()));
    for (const auto& op : ops)
        for (size_t i = 0; i < rows.rows(); ++i)
            if (!basis.contains(op.apply(
                    RowVec(rows.row(i), rows.row(i) + rows.cols() * rows.wpe()))))
                return false;
    return true;
}

IrrResult irreducibility(const std::vector<Matrix>& ops, uint64_t seed,
                         const SpinBudget& budget) {
    if (ops.empty()) throw Error("irreducibility: no operators");
    const FieldSpec& f = ops[0].spec();
    const size_t dim = ops[0].rows();
    if (dim == 0) throw Error("irreducibility: zero module");
    if (dim == 1) return {IrrVerdict::Irreducible, std::nullopt};

    // q^dim against the exhaustive budget, saturating
    uint64_t points = 1;
    bool exhaustive = true;
    for (size_t i = 0; i < dim; ++i) {
        points *= f.order();
        if (points > budget.exhaustive_points) {
            exhaustive = false;
            break;
        }
    }

    if (exhaustive) {
        std::optional<Matrix> witness;
        for_each_projective_point(f, dim, [&](const RowVec& v) {
            SpanBasis s = spin_closure(ops, v);
            if (!s.full()) {
                witness = s.as_matrix();
                return false;
            }
            return true;
        });
        if (witness) return {IrrVerdict::Reducible, witness};
        return {IrrVerdict::Irreducible, std::nullopt};
    }

    std::mt19937_64 rng(seed);
    for (int t = 0; t < budget.random_spins; ++t) {
        SpanBasis s = spin_closure(ops, random_nonzero_vector(f, dim, rng));
        if (!s.full()) return {IrrVerdict::Reducible, s.as_matrix()};
    }
    // transpose side: a proper closure under the transposed operators
    // orthocomplements to a proper nonzero submodule
    std::vector<Matrix> tops;
    tops.reserve(ops.size());
    for (const auto& op : ops) tops.push_back(op.transpose());
    for (int t = 0; t < budget.random_spins; ++t) {
        SpanBasis s = spin_closure(tops, random_nonzero_vector(f, dim, rng));
        if (!s.full()) {
            Matrix complement = s.as_matrix().kernel_basis();
            if (!is_invariant_subspace(ops, complement))
                throw Error("internal: orthocomplement of a transpose closure not invariant");
            return {IrrVerdict::Reducible, complement};
        }
    }
    return {IrrVerdict::IrreducibleProbabilistic, std::nullopt};
}

} // namespace y2p
