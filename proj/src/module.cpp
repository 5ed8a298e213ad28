#include "y2p/module.hpp"

#include <algorithm>
#include <json.hpp>

namespace y2p {

Matrix MatrixModule::op(int i, int j, uint32_t r) const {
    if (i < 1 || i > 2 || j < 1 || j > 2) throw Error("module op: bad indices");
    if (r == 0) {
        Matrix m(spec_, dim_, dim_);
        return i == j ? Matrix::identity(spec_, dim_) : m;
    }
    auto it = actions_.find({i, j, r});
    return it != actions_.end() ? it->second : Matrix(spec_, dim_, dim_);
}

void MatrixModule::set_op(int i, int j, uint32_t r, Matrix m) {
    if (r == 0) throw Error("module op: the r=0 action is fixed by convention");
    if (m.rows() != dim_ || m.cols() != dim_ || m.spec() != spec_)
        throw Error("module op: shape/field mismatch");
    if (m.is_zero()) {
        actions_.erase({i, j, r});
    } else {
        actions_.insert_or_assign({i, j, r}, std::move(m));
        support_ = std::max(support_, r);
    }
}

std::vector<Matrix> MatrixModule::action_list() const {
    std::vector<Matrix> out;
    out.reserve(actions_.size());
    for (const auto& [k, m] : actions_) out.push_back(m);
    return out;
}

MatrixModule evaluation_module(const FieldSpec& f, const FieldScalar& alpha,
                               const FieldScalar& beta) {
    if (!frobenius_fix(alpha) || !frobenius_fix(beta))
        throw Error("evaluation_module: parameters must lie in F_p");
    const uint32_t span = bracket(alpha - beta); // [alpha - beta]
    const size_t dim = span + 1;
    Matrix e11(f, dim, dim), e12(f, dim, dim), e21(f, dim, dim), e22(f, dim, dim);
    for (size_t k = 0; k < dim; ++k) {
        FieldScalar kk = FieldScalar::from_int(f, static_cast<int64_t>(k));
        e11.set(k, k, alpha - kk);
        e22.set(k, k, beta + kk);
        if (k + 1 < dim) e21.set(k + 1, k, FieldScalar::one(f)); // v_k -> v_{k+1}
        if (k >= 1) {
            // e_{1,2} v_k = k (alpha - beta - k + 1) v_{k-1}
            FieldScalar c = kk * (alpha - beta - kk + FieldScalar::one(f));
            e12.set(k - 1, k, c);
        }
    }
    return gl2_module(e11, e12, e21, e22);
}

MatrixModule gl2_module(const Matrix& e11, const Matrix& e12, const Matrix& e21,
                        const Matrix& e22) {
    MatrixModule m(e11.spec(), e11.rows());
    m.set_op(1, 1, 1, e11);
    m.set_op(1, 2, 1, e12);
    m.set_op(2, 1, 1, e21);
    m.set_op(2, 2, 1, e22);
    return m;
}

MatrixModule tensor(const MatrixModule& a, const MatrixModule& b) {
    if (a.spec() != b.spec()) throw Error("tensor: field mismatch");
    const FieldSpec& f = a.spec();
    MatrixModule out(f, a.dim() * b.dim());
    const uint32_t bound = a.level_support() + b.level_support();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (uint32_t r = 1; r <= bound; ++r) {
                Matrix acc(f, out.dim(), out.dim());
                for (int k = 1; k <= 2; ++k)
                    for (uint32_t s = 0; s <= r; ++s) {
                        if (s > a.level_support() || r - s > b.level_support()) continue;
                        if (s == 0 && i != k) continue;
                        if (s == r && k != j) continue;
                        acc = acc + a.op(i, k, s).kron(b.op(k, j, r - s));
                    }
                out.set_op(i, j, r, std::move(acc));
            }
    return out;
}

MatrixModule tensor_evaluations(
    const FieldSpec& f, const std::vector<std::pair<FieldScalar, FieldScalar>>& params) {
    if (params.empty()) {
        // the trivial module: every t^(r>=1) acts as zero on one dimension
        return MatrixModule(f, 1);
    }
    MatrixModule m = evaluation_module(f, params[0].first, params[0].second);
    for (size_t i = 1; i < params.size(); ++i)
        m = tensor(m, evaluation_module(f, params[i].first, params[i].second));
    return m;
}

MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b) {
    if (a.spec() != b.spec()) throw Error("direct_sum: field mismatch");
    const FieldSpec& f = a.spec();
    MatrixModule out(f, a.dim() + b.dim());
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (uint32_t r = 1; r <= std::max(a.level_support(), b.level_support()); ++r) {
                Matrix am = a.op(i, j, r), bm = b.op(i, j, r);
                if (am.is_zero() && bm.is_zero()) continue;
                Matrix m(f, out.dim(), out.dim());
                for (size_t x = 0; x < a.dim(); ++x)
                    for (size_t y = 0; y < a.dim(); ++y) m.set(x, y, am.get(x, y));
                for (size_t x = 0; x < b.dim(); ++x)
                    for (size_t y = 0; y < b.dim(); ++y)
                        m.set(a.dim() + x, a.dim() + y, bm.get(x, y));
                out.set_op(i, j, r, std::move(m));
            }
    return out;
}

MatrixModule twist(const MatrixModule& m, const LowerSeries& f, bool require_restricted) {
    if (m.spec() != f.spec()) throw Error("twist: field mismatch");
    if (require_restricted && !is_restricted(f))
        throw Error("twist: series is not restricted; the twisted action leaves Y2^[p]-mod");
    MatrixModule out(m.spec(), m.dim());
    const uint32_t bound = m.level_support() + static_cast<uint32_t>(f.degree());
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (uint32_t r = 1; r <= bound; ++r) {
                Matrix acc(m.spec(), m.dim(), m.dim());
                for (uint32_t s = 0; s <= std::min<uint32_t>(r, f.degree()); ++s) {
                    Matrix term = m.op(i, j, r - s);
                    if (term.is_zero()) continue;
                    acc = acc + term.scaled(f.coeff(s));
                }
                out.set_op(i, j, r, std::move(acc));
            }
    return out;
}

namespace {

// coordinates of y in the row space of basis (independent rows)
RowVec coords_in_rowspace(const Matrix& basis, const RowVec& y) {
    const FieldSpec& f = basis.spec();
    // solve basis^T c = y
    Matrix bt = basis.transpose();
    Matrix aug(f, bt.rows(), bt.cols() + 1);
    for (size_t i = 0; i < bt.rows(); ++i) {
        std::copy(bt.row(i), bt.row(i) + bt.cols() * f.m, aug.row(i));
        std::copy(y.begin() + i * f.m, y.begin() + (i + 1) * f.m,
                  aug.row(i) + bt.cols() * f.m);
    }
    Echelon e = aug.echelon();
    RowVec c(bt.cols() * f.m, 0);
    for (size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == bt.cols()) throw Error("vector is not in the row space");
        const uint32_t* src = e.rref.row(r) + bt.cols() * f.m;
        std::copy(src, src + f.m, c.data() + e.pivots[r] * f.m);
    }
    return c;
}

} // namespace

std::vector<HighestWeightData> highest_weight_vectors(const MatrixModule& m) {
    const FieldSpec& f = m.spec();
    if (m.dim() == 0) throw Error("highest_weight_vectors: zero module");

    // joint kernel of all t_{1,2}^(r)
    std::vector<Matrix> stack;
    for (uint32_t r = 1; r <= m.level_support(); ++r) {
        Matrix t = m.op(1, 2, r);
        if (!t.is_zero()) stack.push_back(std::move(t));
    }
    Matrix kernel = stack.empty() ? Matrix::identity(f, m.dim())
                                  : Matrix::vstack(stack).kernel_basis();
    if (kernel.rows() == 0) throw Error("internal: empty joint kernel of t_{1,2}");

    // refine into joint eigenspaces of the diagonal operators (they commute
    // on the kernel)
    std::vector<Matrix> spaces{kernel};
    const auto elems = all_elements(f);
    for (int i = 1; i <= 2; ++i)
        for (uint32_t r = 1; r <= m.level_support(); ++r) {
            const Matrix op = m.op(i, i, r);
            std::vector<Matrix> refined;
            bool any_split = false;
            for (const Matrix& s : spaces) {
                // restriction of op in s-coordinates: row b holds the
                // coordinates of op(basis row b)
                Matrix rop(f, s.rows(), s.rows());
                for (size_t b = 0; b < s.rows(); ++b) {
                    RowVec y = op.apply(RowVec(s.row(b), s.row(b) + s.cols() * f.m));
                    RowVec c = coords_in_rowspace(s, y);
                    std::copy(c.begin(), c.end(), rop.row(b));
                }
                // coordinate rows map by x -> x rop, i.e. columns transform
                // by rop^T; eigenvectors are kernels of rop^T - c
                Matrix ropt = rop.transpose();
                size_t found = 0;
                std::vector<Matrix> parts;
                for (const auto& ev : elems) {
                    Matrix shifted = ropt - Matrix::identity(f, s.rows()).scaled(ev);
                    Matrix ker = shifted.kernel_basis();
                    if (ker.rows() == 0) continue;
                    found += ker.rows();
                    parts.push_back(ker * s);
                }
                if (found == s.rows()) {
                    any_split = true;
                    for (auto& part : parts) refined.push_back(std::move(part));
                } else {
                    // not diagonalizable over the ambient field: keep intact
                    refined.push_back(s);
                }
            }
            if (any_split) spaces = std::move(refined);
        }

    std::vector<HighestWeightData> out;
    for (const Matrix& s : spaces) {
        for (size_t b = 0; b < s.rows(); ++b) {
            RowVec v(s.row(b), s.row(b) + s.cols() * f.m);
            std::vector<FieldScalar> coeffs[2];
            coeffs[0].assign(m.level_support() + 1, FieldScalar::zero(f));
            coeffs[1].assign(m.level_support() + 1, FieldScalar::zero(f));
            coeffs[0][0] = coeffs[1][0] = FieldScalar::one(f);
            size_t lead = 0;
            while (lead < v.size() && rowops::is_zero(v.data() + lead, f.m)) lead += f.m;
            FieldScalar vc = FieldScalar::from_coeffs(
                f, std::vector<uint32_t>(v.begin() + lead, v.begin() + lead + f.m));
            bool eigen = true;
            for (uint32_t r = 1; r <= m.level_support() && eigen; ++r)
                for (int i = 1; i <= 2 && eigen; ++i) {
                    RowVec y = m.op(i, i, r).apply(v);
                    FieldScalar yc = FieldScalar::from_coeffs(
                        f, std::vector<uint32_t>(y.begin() + lead, y.begin() + lead + f.m));
                    FieldScalar lambda = yc / vc;
                    RowVec check = v;
                    rowops::scale(f, check.data(), lambda, m.dim());
                    rowops::sub(f, check.data(), y.data(), check.size());
                    if (!rowops::is_zero(check.data(), check.size())) eigen = false;
                    coeffs[i - 1][r] = lambda;
                }
            if (!eigen) continue; // split "where possible"
            out.push_back(HighestWeightData{
                std::move(v), LowerSeries::from_coeffs(f, std::move(coeffs[0])),
                LowerSeries::from_coeffs(f, std::move(coeffs[1]))});
        }
    }
    return out;
}

std::vector<RowVec> spin(const MatrixModule& m, const RowVec& v) {
    if (v.size() != m.dim() * m.spec().m) throw Error("spin: vector length mismatch");
    if (rowops::is_zero(v.data(), v.size())) return {};
    SpanBasis b(m.spec(), m.dim());
    auto ops = m.action_list();
    if (ops.empty()) {
        b.insert(v);
    } else {
        b = spin_closure(ops, v);
    }
    Matrix rows = b.as_matrix();
    std::vector<RowVec> out;
    for (size_t i = 0; i < rows.rows(); ++i)
        out.emplace_back(rows.row(i), rows.row(i) + rows.cols() * rows.wpe());
    return out;
}

IrrResult is_irreducible(const MatrixModule& m, uint64_t seed, const SpinBudget& budget) {
    if (m.dim() == 0) throw Error("is_irreducible: zero module");
    if (m.dim() == 1) return {IrrVerdict::Irreducible, std::nullopt};
    auto ops = m.action_list();
    if (ops.empty()) {
        // all generators act as zero, so any line is a submodule
        Matrix line(m.spec(), 1, m.dim());
        line.set_int(0, 0, 1);
        return {IrrVerdict::Reducible, line};
    }
    return irreducibility(ops, seed, budget);
}

MatrixModule quotient_module(const MatrixModule& m, const Matrix& sub) {
    const FieldSpec& f = m.spec();
    const size_t dim = m.dim(), k = sub.rows();
    if (sub.cols() != dim) throw Error("quotient_module: subspace shape mismatch");
    if (k > 0 && !is_invariant_subspace(m.action_list(), sub))
        throw Error("quotient_module: subspace is not invariant");
    // columns of B: the subspace basis, then complementary standard vectors
    Echelon e = sub.echelon();
    std::vector<bool> is_pivot(dim, false);
    for (size_t c : e.pivots) is_pivot[c] = true;
    Matrix bcols(f, dim, dim);
    for (size_t i = 0; i < k; ++i)
        for (size_t c = 0; c < dim; ++c) bcols.set(c, i, e.rref.get(i, c));
    size_t at = k;
    for (size_t c = 0; c < dim; ++c)
        if (!is_pivot[c]) bcols.set(c, at++, FieldScalar::one(f));
    Matrix binv = bcols.inverse();

    MatrixModule out(f, dim - k);
    for (const auto& [key, mat] : m.actions()) {
        Matrix conj = binv * mat * bcols;
        Matrix block(f, dim - k, dim - k);
        for (size_t i = 0; i < dim - k; ++i)
            for (size_t j = 0; j < dim - k; ++j) block.set(i, j, conj.get(k + i, k + j));
        auto [ii, jj, rr] = key;
        if (!block.is_zero()) out.set_op(ii, jj, rr, std::move(block));
    }
    return out;
}

MatrixModule simple_head(const MatrixModule& m, const RowVec& v, uint64_t seed,
                         const SpinBudget& budget) {
    const FieldSpec& f = m.spec();
    const size_t dim = m.dim();
    auto ops = m.action_list();
    if (ops.empty() ? dim != 1 : !spin_closure(ops, v).full())
        throw Error("simple_head: vector is not cyclic");
    if (ops.empty()) return m; // one-dimensional with trivial action

    uint64_t points = 1;
    bool exhaustive = true;
    for (size_t i = 0; i < dim; ++i) {
        points *= f.order();
        if (points > budget.exhaustive_points) {
            exhaustive = false;
            break;
        }
    }

    SpanBasis radical(f, dim);
    auto feed = [&](const RowVec& w) {
        SpanBasis s = spin_closure(ops, w);
        if (s.size() < dim && !s.contains(v)) {
            Matrix rows = s.as_matrix();
            for (size_t i = 0; i < rows.rows(); ++i)
                radical.insert(RowVec(rows.row(i), rows.row(i) + dim * f.m));
        }
    };

    if (exhaustive) {
        for_each_projective_point(f, dim, [&](const RowVec& w) {
            feed(w);
            return true;
        });
        return quotient_module(m, radical.as_matrix());
    }

    // randomized superset, then certify the quotient
    std::mt19937_64 rng(seed);
    for (int t = 0; t < budget.random_spins * 4; ++t)
        feed(random_nonzero_vector(f, dim, rng));
    MatrixModule head = quotient_module(m, radical.as_matrix());
    IrrResult check = is_irreducible(head, seed + 1, budget);
    if (check.verdict == IrrVerdict::Reducible)
        throw BudgetError("simple_head: randomized radical superset missed a submodule");
    return head;
}

DrinfeldOperators drinfeld_operators(const MatrixModule& m, uint32_t level_bound) {
    const FieldSpec& f = m.spec();
    const Matrix id = Matrix::identity(f, m.dim());
    const Matrix zero(f, m.dim(), m.dim());
    DrinfeldOperators d;
    d.d1.push_back(id);
    d.d1_inv.push_back(id);
    d.d2.push_back(id);
    d.e.push_back(zero);
    d.f.push_back(zero);
    for (uint32_t r = 1; r <= level_bound; ++r) {
        d.d1.push_back(m.op(1, 1, r));
        Matrix inv = zero;
        for (uint32_t t = 1; t <= r; ++t) inv = inv - d.d1[t] * d.d1_inv[r - t];
        d.d1_inv.push_back(std::move(inv));
        Matrix e_r = zero;
        for (uint32_t t = 0; t < r; ++t) e_r = e_r + d.d1_inv[t] * m.op(1, 2, r - t);
        d.e.push_back(std::move(e_r));
        Matrix f_r = zero;
        for (uint32_t t = 1; t <= r; ++t) f_r = f_r + m.op(2, 1, t) * d.d1_inv[r - t];
        d.f.push_back(std::move(f_r));
        // d2 = t22 - f d1 e, coefficientwise
        Matrix d2_r = m.op(2, 2, r);
        for (uint32_t a = 1; a < r; ++a)
            for (uint32_t b = 0; a + b < r; ++b)
                d2_r = d2_r - d.f[a] * d.d1[b] * d.e[r - a - b];
        d.d2.push_back(std::move(d2_r));
    }
    return d;
}

ModuleReport verify_module(const MatrixModule& m, uint32_t level_bound) {
    const FieldSpec& f = m.spec();
    const uint32_t p = f.p;
    const uint32_t support = m.level_support();
    const uint32_t n = level_bound ? level_bound : p * (support + 1);
    ModuleReport report;

    // cached operator products keyed by ((i,j,r),(k,l,s))
    std::map<std::pair<MatrixModule::Key, MatrixModule::Key>, Matrix> cache;
    auto prod = [&](int i, int j, uint32_t r, int k, int l, uint32_t s) -> const Matrix& {
        std::pair<MatrixModule::Key, MatrixModule::Key> key{{i, j, r}, {k, l, s}};
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache.emplace(key, m.op(i, j, r) * m.op(k, l, s)).first->second;
    };
    auto op_zero = [&](int i, int j, uint32_t r) {
        if (r == 0) return i != j;
        return r > support || m.op(i, j, r).is_zero();
    };

    // (1) RTT relations
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    for (uint32_t r = 1; r <= n; ++r)
                        for (uint32_t s = 1; s <= n; ++s) {
                            bool lhs_zero = op_zero(i, j, r) || op_zero(k, l, s);
                            bool rhs_zero = true;
                            for (uint32_t t = 0; t < std::min(r, s) && rhs_zero; ++t) {
                                if (!(op_zero(k, j, t) || op_zero(i, l, r + s - 1 - t)))
                                    rhs_zero = false;
                                if (!(op_zero(k, j, r + s - 1 - t) || op_zero(i, l, t)))
                                    rhs_zero = false;
                            }
                            if (lhs_zero && rhs_zero) continue;
                            Matrix lhs = prod(i, j, r, k, l, s) - prod(k, l, s, i, j, r);
                            Matrix rhs(f, m.dim(), m.dim());
                            for (uint32_t t = 0; t < std::min(r, s); ++t) {
                                rhs = rhs + prod(k, j, t, i, l, r + s - 1 - t);
                                rhs = rhs - prod(k, j, r + s - 1 - t, i, l, t);
                            }
                            if (lhs != rhs)
                                report.fail("RTT identity violated at (i,j,k,l,r,s)=(" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            "," + std::to_string(k) + "," +
                                            std::to_string(l) + "," + std::to_string(r) +
                                            "," + std::to_string(s) + ")");
                        }

    // binomials mod p for the series shifts
    std::vector<std::vector<uint32_t>> binom(n + 1, std::vector<uint32_t>(n + 1, 0));
    for (uint32_t a = 0; a <= n; ++a) {
        binom[a][0] = 1 % p;
        for (uint32_t b = 1; b <= a; ++b)
            binom[a][b] = (binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0)) % p;
    }

    // (2) s_{i,j}(u) = t_{i,j}(u) t_{i,j}(u-1) ... t_{i,j}(u-p+1),
    // coefficient by coefficient through u^{-n}
    const Matrix id = Matrix::identity(f, m.dim());
    const Matrix zero(f, m.dim(), m.dim());
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            auto shifted_coeff = [&](uint32_t c, uint32_t k) -> Matrix {
                if (k == 0) return i == j ? id : zero;
                Matrix acc = zero;
                for (uint32_t r = 1; r <= std::min(k, support); ++r) {
                    FieldScalar w = FieldScalar::from_int(f, binom[k - 1][k - r]) *
                                    FieldScalar::from_int(f, c).pow(k - r);
                    if (w.is_zero()) continue;
                    Matrix t = m.op(i, j, r);
                    if (t.is_zero()) continue;
                    acc = acc + t.scaled(w);
                }
                return acc;
            };
            std::vector<Matrix> s_series;
            s_series.reserve(n + 1);
            for (uint32_t k = 0; k <= n; ++k) s_series.push_back(shifted_coeff(0, k));
            for (uint32_t c = 1; c < p; ++c) {
                std::vector<Matrix> next(n + 1, zero);
                for (uint32_t a = 0; a <= n; ++a) {
                    if (s_series[a].is_zero()) continue;
                    for (uint32_t b = 0; a + b <= n; ++b) {
                        Matrix fc = shifted_coeff(c, b);
                        if (fc.is_zero()) continue;
                        next[a + b] = next[a + b] + s_series[a] * fc;
                    }
                }
                s_series = std::move(next);
            }
            for (uint32_t k = 0; k <= n; ++k) {
                const Matrix& expected = (i == j && k == 0) ? id : zero;
                if (s_series[k] != expected)
                    report.fail("restrictedness failed: s_{" + std::to_string(i) + "," +
                                std::to_string(j) + "}^(" + std::to_string(k) + ") is not " +
                                (i == j && k == 0 ? "identity" : "zero"));
            }
        }

    // (3) p-th powers of the Gauss-decomposed e and f operators vanish
    DrinfeldOperators d = drinfeld_operators(m, n);
    for (uint32_t r = 1; r <= n; ++r) {
        if (!d.e[r].pow(p).is_zero())
            report.fail("(e^(" + std::to_string(r) + "))^p is not zero");
        if (!d.f[r].pow(p).is_zero())
            report.fail("(f^(" + std::to_string(r) + "))^p is not zero");
    }
    return report;
}

std::string module_to_json(const MatrixModule& m) {
    nlohmann::json j;
    j["schema"] = 1;
    j["field"] = {{"p", m.spec().p}, {"m", m.spec().m}, {"modulus", m.spec().modulus}};
    j["dim"] = m.dim();
    nlohmann::json actions = nlohmann::json::array();
    for (const auto& [key, mat] : m.actions()) {
        auto [i, jj, r] = key;
        nlohmann::json entries = nlohmann::json::array();
        for (size_t a = 0; a < mat.rows(); ++a) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t b = 0; b < mat.cols(); ++b) {
                if (m.spec().m == 1)
                    row.push_back(mat.get(a, b).coeffs()[0]);
                else
                    row.push_back(mat.get(a, b).coeffs());
            }
            entries.push_back(std::move(row));
        }
        actions.push_back(
            {{"i", i}, {"j", jj}, {"r", r}, {"entries", std::move(entries)}});
    }
    j["actions"] = std::move(actions);
    return j.dump(2);
}

MatrixModule module_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("schema").get<int>() != 1) throw Error("unsupported module schema");
    uint32_t p = j.at("field").at("p").get<uint32_t>();
    uint32_t m = j.at("field").at("m").get<uint32_t>();
    FieldSpec f = m == 1 ? FieldSpec::prime_field(p) : FieldSpec::extension(p, m);
    if (j.at("field").contains("modulus") &&
        j.at("field").at("modulus").get<std::vector<uint32_t>>() != f.modulus)
        throw Error("module file uses a different defining polynomial");
    MatrixModule mod(f, j.at("dim").get<size_t>());
    for (const auto& a : j.at("actions")) {
        Matrix mat(f, mod.dim(), mod.dim());
        const auto& entries = a.at("entries");
        for (size_t r = 0; r < mod.dim(); ++r)
            for (size_t c = 0; c < mod.dim(); ++c) {
                if (f.m == 1)
                    mat.set(r, c, FieldScalar::from_int(f, entries.at(r).at(c).get<int64_t>()));
                else
                    mat.set(r, c, FieldScalar::from_coeffs(
                                      f, entries.at(r).at(c).get<std::vector<uint32_t>>()));
            }
        mod.set_op(a.at("i").get<int>(), a.at("j").get<int>(), a.at("r").get<uint32_t>(),
                   std::move(mat));
    }
    return mod;
}

} // namespace y2p
