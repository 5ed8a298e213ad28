#include "y2p/redenv.hpp"

#include <algorithm>
#include <tuple>

namespace y2p {

FieldScalar ChiForm::operator()(int a, int b) const {
    // trace(e * e_{a,b}) = entry (b, a) of e: 1 exactly when a sits one
    // column right of b in the same row
    const bool hit = (pyr.row(a) == pyr.row(b)) && (pyr.col(a) == pyr.col(b) + 1);
    return hit ? FieldScalar::one(field) : FieldScalar::zero(field);
}

ChiForm chi_of(const FieldSpec& f, uint32_t n) { return ChiForm{f, Pyramid::build(n)}; }

UChiContext::UChiContext(const FieldSpec& f, uint32_t n)
    : field_(f), pyr_(Pyramid::build(n)), chi_(chi_of(f, n)) {
    for (int a = 1; a <= pyr_.boxes(); ++a)
        for (int b = 1; b <= pyr_.boxes(); ++b)
            if (pyr_.col(b) < pyr_.col(a)) m_units_.emplace_back(a, b);
    std::sort(m_units_.begin(), m_units_.end(), [&](auto x, auto y) {
        return unit_key(x.first, x.second) < unit_key(y.first, y.second);
    });
}

uint64_t UChiContext::unit_key(int a, int b) const {
    const int drop = pyr_.col(a) - pyr_.col(b); // positive on m
    uint64_t block, inner;
    if (drop > 0) {
        block = 0; // m-block first, steepest drop first, then row-lex
        inner = static_cast<uint64_t>(((64 - drop) << 16) | (pyr_.row(a) << 12) |
                                      (pyr_.row(b) << 8) | (pyr_.col(a) << 4) | pyr_.col(b));
    } else if (drop == 0) {
        // inside a Levi block the lowering unit e_{i',i} sorts before the
        // raising unit e_{i,i'}
        block = 1;
        inner = static_cast<uint64_t>((pyr_.col(a) << 8) | (pyr_.row(b) << 4) | pyr_.row(a));
    } else {
        block = 2;
        inner = static_cast<uint64_t>(((64 + drop) << 16) | (pyr_.row(a) << 12) |
                                      (pyr_.row(b) << 8) | (pyr_.col(a) << 4) | pyr_.col(b));
    }
    return (block << 32) | inner;
}

std::map<UWord, FieldScalar> UChiContext::straighten(const UWord& word,
                                                     const FieldScalar& coeff) const {
    const uint32_t p = field_.p;
    auto inversions = [&](const UWord& w) {
        uint32_t inv = 0;
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                if (unit_key(w[i].first, w[i].second) > unit_key(w[j].first, w[j].second))
                    ++inv;
        return inv;
    };
    // largest (length, inversions) first: every rewrite strictly descends,
    // so no word is processed twice
    using QKey = std::tuple<size_t, uint32_t, UWord>;
    std::map<QKey, FieldScalar, std::greater<QKey>> pending;
    std::map<UWord, FieldScalar> result;

    auto push = [&](UWord w, const FieldScalar& c) {
        if (c.is_zero()) return;
        QKey k{w.size(), inversions(w), std::move(w)};
        auto it = pending.find(k);
        if (it == pending.end()) {
            pending.emplace(std::move(k), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) pending.erase(it);
        }
    };
    push(word, coeff);

    while (!pending.empty()) {
        auto it = pending.begin();
        UWord w = std::get<2>(it->first);
        FieldScalar c = it->second;
        pending.erase(it);

        // p consecutive identical units reduce by x^p = x^{[p]} + chi(x)^p
        bool reduced = false;
        if (w.size() >= p) {
            for (size_t i = 0; i + p <= w.size(); ++i) {
                bool run = true;
                for (uint32_t k = 1; k < p; ++k)
                    if (w[i + k] != w[i]) {
                        run = false;
                        break;
                    }
                if (!run) continue;
                auto [a, b] = w[i];
                UWord rest(w.begin(), w.begin() + i);
                if (a == b) rest.emplace_back(a, b); // e_{a,a}^p = e_{a,a}
                rest.insert(rest.end(), w.begin() + i + p, w.end());
                if (a == b) {
                    push(std::move(rest), c);
                } else {
                    FieldScalar scalar = chi_(a, b).pow(p);
                    if (!scalar.is_zero()) push(std::move(rest), c * scalar);
                }
                reduced = true;
                break;
            }
        }
        if (reduced) continue;

        size_t pos = w.size();
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (unit_key(w[i].first, w[i].second) >
                unit_key(w[i + 1].first, w[i + 1].second)) {
                pos = i;
                break;
            }
        if (pos == w.size()) {
            auto rit = result.find(w);
            if (rit == result.end()) {
                result.emplace(std::move(w), c);
            } else {
                rit->second = rit->second + c;
                if (rit->second.is_zero()) result.erase(rit);
            }
            continue;
        }
        // [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb
        auto [a, b] = w[pos];
        auto [cc, dd] = w[pos + 1];
        UWord swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        push(std::move(swapped), c);
        if (b == cc) {
            UWord t(w.begin(), w.begin() + pos);
            t.emplace_back(a, dd);
            t.insert(t.end(), w.begin() + pos + 2, w.end());
            push(std::move(t), c);
        }
        if (dd == a) {
            UWord t(w.begin(), w.begin() + pos);
            t.emplace_back(cc, b);
            t.insert(t.end(), w.begin() + pos + 2, w.end());
            push(std::move(t), -c);
        }
    }
    return result;
}

InducedModule InducedModule::induce(const LeviModule& seed, uint64_t dim_budget) {
    const FieldSpec& f = seed.spec();
    UChiContext ctx(f, seed.blocks());
    const auto units = ctx.m_units();
    const uint32_t p = f.p;

    uint64_t mdim = 1;
    for (size_t i = 0; i < units.size(); ++i) {
        mdim *= p;
        if (mdim * seed.dim() > dim_budget)
            throw BudgetError("induce: dimension " + std::to_string(mdim * seed.dim()) +
                              "+ exceeds the budget " + std::to_string(dim_budget));
    }
    const size_t dim = mdim * seed.dim();
    InducedModule out(std::move(ctx), dim, seed.dim());
    const UChiContext& c = out.ctx_;
    const Pyramid& pyr = c.pyramid();

    // exponent vector of the m-part from a flat index, unit 0 slowest
    auto exps_of = [&](size_t idx) {
        std::vector<uint32_t> e(units.size());
        for (size_t u = units.size(); u-- > 0;) {
            e[u] = static_cast<uint32_t>(idx % p);
            idx /= p;
        }
        return e;
    };
    auto index_of = [&](const std::vector<uint32_t>& e) {
        size_t idx = 0;
        for (size_t u = 0; u < units.size(); ++u) idx = idx * p + e[u];
        return idx;
    };

    std::vector<RowVec> seed_basis;
    for (size_t k = 0; k < seed.dim(); ++k) {
        RowVec v(seed.dim() * f.m, 0);
        v[k * f.m] = 1 % f.p;
        seed_basis.push_back(std::move(v));
    }

    for (int a = 1; a <= pyr.boxes(); ++a)
        for (int b = 1; b <= pyr.boxes(); ++b) {
            Matrix op(f, dim, dim);
            for (size_t mi = 0; mi < mdim; ++mi) {
                auto exps = exps_of(mi);
                UWord word{{a, b}};
                for (size_t u = 0; u < units.size(); ++u)
                    for (uint32_t k = 0; k < exps[u]; ++k) word.push_back(units[u]);
                auto terms = c.straighten(word, FieldScalar::one(f));
                for (const auto& [nw, coeff] : terms) {
                    // normal words start with the m-part
                    size_t split = 0;
                    std::vector<uint32_t> nexps(units.size(), 0);
                    while (split < nw.size()) {
                        auto [x, y] = nw[split];
                        if (pyr.col(y) >= pyr.col(x)) break;
                        auto uit = std::find(units.begin(), units.end(), std::pair{x, y});
                        ++nexps[static_cast<size_t>(uit - units.begin())];
                        ++split;
                    }
                    const size_t mrow = index_of(nexps);
                    for (size_t k = 0; k < seed.dim(); ++k) {
                        RowVec cur = seed_basis[k];
                        bool dead = false;
                        for (size_t t = nw.size(); t-- > split;) {
                            auto [x, y] = nw[t];
                            if (pyr.col(y) > pyr.col(x)) {
                                dead = true; // nilradical kills the inflated seed
                                break;
                            }
                            cur = seed.apply_unit(x, y, cur);
                            if (rowops::is_zero(cur.data(), cur.size())) break;
                        }
                        if (dead) continue;
                        const size_t colidx = mi * seed.dim() + k;
                        for (size_t s = 0; s < seed.dim(); ++s) {
                            std::vector<uint32_t> entry(cur.begin() + s * f.m,
                                                        cur.begin() + (s + 1) * f.m);
                            FieldScalar val =
                                FieldScalar::from_coeffs(f, std::move(entry)) * coeff;
                            if (val.is_zero()) continue;
                            const size_t rowidx = mrow * seed.dim() + s;
                            op.set(rowidx, colidx, op.get(rowidx, colidx) + val);
                        }
                    }
                }
            }
            out.ops_.emplace(std::pair{a, b}, std::move(op));
        }
    return out;
}

const Matrix& InducedModule::unit_op(int a, int b) const {
    auto it = ops_.find({a, b});
    if (it == ops_.end()) throw Error("unit_op: no such generator");
    return it->second;
}

std::vector<Matrix> InducedModule::all_unit_ops() const {
    std::vector<Matrix> out;
    out.reserve(ops_.size());
    for (const auto& [k, m] : ops_) out.push_back(m);
    return out;
}

Matrix m_chi_invariants(const InducedModule& v) {
    const FieldSpec& f = v.spec();
    std::vector<Matrix> stack;
    for (const auto& [a, b] : v.context().m_units()) {
        Matrix shifted =
            v.unit_op(a, b) - Matrix::identity(f, v.dim()).scaled(v.context().chi()(a, b));
        stack.push_back(std::move(shifted));
    }
    if (stack.empty()) return Matrix::identity(f, v.dim()); // n = 1: m = 0
    return Matrix::vstack(stack).kernel_basis();
}

IrrResult simplicity_check(const InducedModule& v, uint64_t seed, const SpinBudget& budget) {
    if (v.dim() == 1) return {IrrVerdict::Irreducible, std::nullopt};
    const FieldSpec& f = v.spec();
    auto ops = v.all_unit_ops();

    // Proper submodules pulled through the equivalence meet V^{m_chi}, and
    // their closures stay proper; uniform random vectors almost never land in
    // a small-codimension submodule, so spin the invariant subspace first.
    Matrix inv = m_chi_invariants(v);
    const size_t k = inv.rows();
    std::vector<RowVec> starts;
    uint64_t proj = 1;
    bool all = true;
    for (size_t i = 0; i < k; ++i) {
        proj *= f.order();
        if (proj > 4096) {
            all = false;
            break;
        }
    }
    if (all && k > 0) {
        for_each_projective_point(f, k, [&](const RowVec& c) {
            RowVec x(v.dim() * f.m, 0);
            for (size_t i = 0; i < k; ++i) {
                std::vector<uint32_t> ci(c.begin() + i * f.m, c.begin() + (i + 1) * f.m);
                rowops::axpy(f, x.data(), inv.row(i), FieldScalar::from_coeffs(f, ci),
                             v.dim());
            }
            starts.push_back(std::move(x));
            return true;
        });
    } else {
        for (size_t i = 0; i < k; ++i)
            starts.emplace_back(inv.row(i), inv.row(i) + v.dim() * f.m);
    }
    for (const auto& x : starts) {
        if (rowops::is_zero(x.data(), x.size())) continue;
        SpanBasis s = spin_closure(ops, x);
        if (!s.full()) {
            Matrix witness = s.as_matrix();
            if (!is_invariant_subspace(ops, witness))
                throw Error("internal: spin closure not invariant");
            return {IrrVerdict::Reducible, witness};
        }
    }
    return irreducibility(ops, seed, budget);
}

} // namespace y2p
