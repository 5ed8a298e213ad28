#include "y2p/walgebra.hpp"

#include <algorithm>
#include <functional>

namespace y2p {

Pyramid Pyramid::build(uint32_t n) {
    if (n < 1) throw Error("pyramid needs at least one column");
    return Pyramid{n};
}

Matrix rectangular_nilpotent(const FieldSpec& f, uint32_t n) {
    Matrix e(f, 2 * n, 2 * n);
    for (uint32_t i = 1; i + 1 <= n; ++i) {
        e.set_int(i - 1, i, 1);         // e_{i,i+1}
        e.set_int(n + i - 1, n + i, 1); // e_{i',(i+1)'}
    }
    return e;
}

UPElement dir_element(const FieldSpec& f, int i, uint32_t r, const Pyramid& pyr) {
    if (i != 1 && i != 2) throw Error("dir_element: i must be 1 or 2");
    if (r < 1) throw Error("dir_element: r must be positive");
    UPElement out{f, pyr, {}};
    const int boxes = pyr.boxes();

    for (uint32_t s = 1; s <= r; ++s) {
        const int target = static_cast<int>(r - s); // total column gap
        std::vector<std::pair<int, int>> chain;
        // depth-first over factors (i_t, j_t)
        std::function<void(int, int, int)> walk = [&](int t, int i_t, int used) {
            for (int j_t = 1; j_t <= boxes; ++j_t) {
                const int gap = grading_degree(pyr, i_t, j_t);
                if (gap < 0 || used + gap > target) continue; // (b) and (a) pruning
                chain.emplace_back(i_t, j_t);
                if (t == static_cast<int>(s)) {
                    if (used + gap == target && pyr.row(j_t) == i) {
                        // (a) and (e) complete; sign counts low rows in the chain
                        int low_rows = 0;
                        for (size_t k = 0; k + 1 < chain.size(); ++k)
                            if (pyr.row(chain[k].second) <= i - 1) ++low_rows;
                        int64_t sign = (((r - s) + low_rows) % 2 == 0) ? 1 : -1;
                        out.terms.push_back(
                            {UPMonomial{chain}, FieldScalar::from_int(f, sign)});
                    }
                } else {
                    // (f) fixes the row of i_{t+1}; (c)/(d) constrain its column
                    for (int nxt = 1; nxt <= boxes; ++nxt) {
                        if (pyr.row(nxt) != pyr.row(j_t)) continue;
                        if (pyr.row(j_t) >= i) {
                            if (!(pyr.col(j_t) < pyr.col(nxt))) continue; // (c)
                        } else {
                            if (!(pyr.col(j_t) >= pyr.col(nxt))) continue; // (d)
                        }
                        walk(t + 1, nxt, used + gap);
                    }
                }
                chain.pop_back();
            }
        };
        for (int first = 1; first <= boxes; ++first)
            if (pyr.row(first) == i) walk(1, first, 0);
    }
    return out;
}

LeviModule LeviModule::baby_verma(const FieldSpec& f, const std::vector<FieldScalar>& alpha,
                                  const std::vector<FieldScalar>& beta) {
    if (alpha.size() != beta.size() || alpha.empty())
        throw Error("levi module: tuples must be nonempty of equal length");
    const uint32_t n = static_cast<uint32_t>(alpha.size());
    std::vector<size_t> dims(n, f.p);
    std::vector<FieldScalar> aw, bw;
    for (uint32_t c = 1; c <= n; ++c) {
        FieldScalar shift = FieldScalar::from_int(f, 2 * (static_cast<int64_t>(n) - c));
        aw.push_back(alpha[c - 1] + shift);
        bw.push_back(beta[c - 1] + shift);
    }
    return LeviModule(f, Pyramid::build(n), std::move(dims), std::move(aw), std::move(bw));
}

LeviModule LeviModule::simple(const FieldSpec& f, const std::vector<FieldScalar>& alpha,
                              const std::vector<FieldScalar>& beta) {
    if (alpha.size() != beta.size() || alpha.empty())
        throw Error("levi module: tuples must be nonempty of equal length");
    const uint32_t n = static_cast<uint32_t>(alpha.size());
    std::vector<size_t> dims;
    std::vector<FieldScalar> aw, bw;
    for (uint32_t c = 1; c <= n; ++c) {
        dims.push_back(bracket(alpha[c - 1] - beta[c - 1]) + 1);
        FieldScalar shift = FieldScalar::from_int(f, 2 * (static_cast<int64_t>(n) - c));
        aw.push_back(alpha[c - 1] + shift);
        bw.push_back(beta[c - 1] + shift);
    }
    return LeviModule(f, Pyramid::build(n), std::move(dims), std::move(aw), std::move(bw));
}

size_t LeviModule::dim() const {
    size_t d = 1;
    for (size_t b : dims_) d *= b;
    return d;
}

RowVec LeviModule::distinguished() const {
    RowVec v(dim() * spec_.m, 0);
    v[0] = 1 % spec_.p; // index 0 = w_0 (x) ... (x) w_0
    return v;
}

RowVec LeviModule::apply_unit(int a, int b, const RowVec& v) const {
    const Pyramid& pyr = pyr_;
    if (pyr.col(a) != pyr.col(b))
        throw Error("apply_unit: e_{a,b} is not in the Levi subalgebra");
    const uint32_t c = static_cast<uint32_t>(pyr.col(a));
    const int ra = pyr.row(a), rb = pyr.row(b);
    const size_t d = dim();
    if (v.size() != d * spec_.m) throw Error("apply_unit: vector length mismatch");

    // index = sum_k idx_k * stride_k with block 1 slowest
    size_t stride = 1;
    for (uint32_t k = blocks(); k > c; --k) stride *= dims_[k - 1];
    const size_t bd = dims_[c - 1];
    const FieldScalar a_c = aw_[c - 1], b_c = bw_[c - 1];
    const FieldScalar one = FieldScalar::one(spec_);

    RowVec out(d * spec_.m, 0);
    for (size_t idx = 0; idx < d; ++idx) {
        if (rowops::is_zero(v.data() + idx * spec_.m, spec_.m)) continue;
        const size_t k = (idx / stride) % bd; // block-c coordinate
        FieldScalar val = FieldScalar::from_coeffs(
            spec_, std::vector<uint32_t>(v.begin() + idx * spec_.m,
                                         v.begin() + (idx + 1) * spec_.m));
        FieldScalar kk = FieldScalar::from_int(spec_, static_cast<int64_t>(k));
        if (ra == 1 && rb == 1) {
            FieldScalar c2 = (a_c - kk) * val;
            rowops::add(spec_, out.data() + idx * spec_.m, c2.coeffs().data(), spec_.m);
        } else if (ra == 2 && rb == 2) {
            FieldScalar c2 = (b_c + kk) * val;
            rowops::add(spec_, out.data() + idx * spec_.m, c2.coeffs().data(), spec_.m);
        } else if (ra == 1 && rb == 2) {
            // E: w_k -> k (a - b - k + 1) w_{k-1}
            if (k >= 1) {
                FieldScalar c2 = kk * (a_c - b_c - kk + one) * val;
                rowops::add(spec_, out.data() + (idx - stride) * spec_.m,
                            c2.coeffs().data(), spec_.m);
            }
        } else {
            // F: w_k -> w_{k+1}
            if (k + 1 < bd)
                rowops::add(spec_, out.data() + (idx + stride) * spec_.m,
                            val.coeffs().data(), spec_.m);
        }
    }
    return out;
}

Matrix LeviModule::unit_action(int a, int b) const {
    const size_t d = dim();
    Matrix out(spec_, d, d);
    RowVec basis(d * spec_.m, 0);
    for (size_t j = 0; j < d; ++j) {
        basis.assign(d * spec_.m, 0);
        basis[j * spec_.m] = 1 % spec_.p;
        RowVec col = apply_unit(a, b, basis);
        for (size_t i = 0; i < d; ++i)
            for (uint32_t w = 0; w < spec_.m; ++w)
                out.row(i)[j * spec_.m + w] = col[i * spec_.m + w];
    }
    return out;
}

RowVec act_up_vector(const UPElement& x, const LeviModule& m, const RowVec& v) {
    if (x.field != m.spec()) throw Error("act_up: field mismatch");
    const FieldSpec& f = m.spec();
    const Pyramid& pyr = m.pyramid();
    RowVec acc(m.dim() * f.m, 0);
    for (const auto& [mono, coeff] : x.terms) {
        RowVec cur = v;
        bool dead = false;
        // rightmost factor acts first
        for (auto it = mono.factors.rbegin(); it != mono.factors.rend(); ++it) {
            auto [a, b] = *it;
            const int deg = grading_degree(pyr, a, b);
            if (deg > 0) {
                dead = true; // nilradical acts trivially on the inflation
                break;
            }
            if (deg < 0) throw Error("act_up: factor outside U(p)");
            RowVec next = m.apply_unit(a, b, cur);
            if (a == b) {
                FieldScalar sh = FieldScalar::from_int(f, eta_shift(pyr, a));
                rowops::axpy(f, next.data(), cur.data(), sh, m.dim());
            }
            cur = std::move(next);
        }
        if (dead) continue;
        rowops::axpy(f, acc.data(), cur.data(), coeff, m.dim());
    }
    return acc;
}

Matrix act_up(const UPElement& x, const LeviModule& m) {
    const size_t d = m.dim();
    const FieldSpec& f = m.spec();
    Matrix out(f, d, d);
    RowVec basis(d * f.m, 0);
    for (size_t j = 0; j < d; ++j) {
        basis.assign(d * f.m, 0);
        basis[j * f.m] = 1 % f.p;
        RowVec col = act_up_vector(x, m, basis);
        for (size_t i = 0; i < d; ++i)
            for (uint32_t w = 0; w < f.m; ++w)
                out.row(i)[j * f.m + w] = col[i * f.m + w];
    }
    return out;
}

ErLemmaReport verify_er_lemma(const FieldSpec& f, uint32_t n,
                              const std::vector<FieldScalar>& alpha,
                              const std::vector<FieldScalar>& beta, uint32_t r_max) {
    if (alpha.size() != n || beta.size() != n)
        throw Error("verify_er_lemma: tuple length must equal n");
    ErLemmaReport report;
    const Pyramid pyr = Pyramid::build(n);
    LeviModule z = LeviModule::baby_verma(f, alpha, beta);
    const RowVec zbar = z.distinguished();
    const LowerSeries e_alpha = elementary_symmetric_series(f, alpha);
    const LowerSeries e_beta = elementary_symmetric_series(f, beta);
    for (int i = 1; i <= 2; ++i) {
        const LowerSeries& es = i == 1 ? e_alpha : e_beta;
        for (uint32_t r = 1; r <= r_max; ++r) {
            UPElement d = dir_element(f, i, r, pyr);
            RowVec got = act_up_vector(d, z, zbar);
            RowVec expect = zbar;
            rowops::scale(f, expect.data(), es.coeff(r), z.dim());
            if (got != expect)
                report.failures.push_back(
                    "d_" + std::to_string(i) + "^(" + std::to_string(r) +
                    ") is not scalar e_r on the distinguished vector");
        }
    }
    report.ok = report.failures.empty();
    return report;
}

CrossCheckReport cross_check_theorem(const FieldSpec& f,
                                     const std::vector<FieldScalar>& alpha,
                                     const std::vector<FieldScalar>& beta) {
    if (alpha.size() != beta.size() || alpha.empty())
        throw Error("cross_check: tuples must be nonempty of equal length");
    const uint32_t n = static_cast<uint32_t>(alpha.size());
    // the minimality ordering of the identification theorem
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t l = i; l < n; ++l)
                if (bracket(alpha[i] - beta[i]) > bracket(alpha[j] - beta[l]))
                    throw Error("cross_check: ordering condition violated at i=" +
                                std::to_string(i + 1));

    CrossCheckReport rep{true, 0, 0, LowerSeries::one(f), LowerSeries::one(f), {}};
    const Pyramid pyr = Pyramid::build(n);

    // W side
    LeviModule ls = LeviModule::simple(f, alpha, beta);
    rep.dim_w = ls.dim();
    const RowVec top = ls.distinguished();
    std::vector<FieldScalar> ca{FieldScalar::one(f)}, cb{FieldScalar::one(f)};
    for (int i = 1; i <= 2; ++i)
        for (uint32_t r = 1; r <= n; ++r) {
            UPElement d = dir_element(f, i, r, pyr);
            RowVec got = act_up_vector(d, ls, top);
            // must be a scalar multiple of the distinguished vector
            FieldScalar scalar = FieldScalar::from_coeffs(
                f, std::vector<uint32_t>(got.begin(), got.begin() + f.m));
            RowVec expect = top;
            rowops::scale(f, expect.data(), scalar, ls.dim());
            if (got != expect) {
                rep.failures.push_back("W-side d-action is not scalar on the top vector");
                continue;
            }
            (i == 1 ? ca : cb).push_back(scalar);
        }
    rep.lambda_alpha = LowerSeries::from_coeffs(f, ca);
    rep.lambda_beta = LowerSeries::from_coeffs(f, cb);

    // Yangian side
    std::vector<std::pair<FieldScalar, FieldScalar>> params;
    for (size_t i = 0; i < n; ++i) params.push_back({alpha[i], beta[i]});
    MatrixModule t = tensor_evaluations(f, params);
    rep.dim_yangian = t.dim();

    if (rep.dim_w != rep.dim_yangian) rep.failures.push_back("dimension mismatch");
    const LowerSeries la = elementary_symmetric_series(f, alpha);
    const LowerSeries lb = elementary_symmetric_series(f, beta);
    if (rep.lambda_alpha != la || rep.lambda_beta != lb)
        rep.failures.push_back("W-side eigenvalue series differ from lambda_(alpha,beta)");
    bool found = false;
    for (const auto& h : highest_weight_vectors(t))
        if (h.lambda1 == la && h.lambda2 == lb) found = true;
    if (!found)
        rep.failures.push_back(
            "Yangian-side highest weight does not match lambda_(alpha,beta)");
    rep.ok = rep.failures.empty();
    return rep;
}

} // namespace y2p
