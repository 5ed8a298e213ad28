#include "y2p/presentation.hpp"

#include <algorithm>

namespace y2p {

std::string gen_str(Gen g) {
    static const char* names[] = {"f", "d1", "d2", "e"};
    return std::string(names[static_cast<uint32_t>(gen_fam(g))]) + "(" +
           std::to_string(gen_level(g)) + ")";
}

NCPoly NCPoly::scalar(const FieldScalar& c) {
    NCPoly r(c.spec());
    r.add_term({}, c);
    return r;
}

NCPoly NCPoly::monomial(const FieldSpec& f, Word w, const FieldScalar& c) {
    NCPoly r(f);
    r.add_term(w, c);
    return r;
}

NCPoly NCPoly::generator(const FieldSpec& f, Fam fam, uint32_t level) {
    return monomial(f, {make_gen(fam, level)}, FieldScalar::one(f));
}

void NCPoly::add_term(const Word& w, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r(spec_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

NCPoly NCPoly::scaled(const FieldScalar& c) const {
    NCPoly r(spec_);
    for (const auto& [w, k] : terms_) r.add_term(w, k * c);
    return r;
}

uint32_t NCPoly::total_degree() const {
    uint32_t best = 0;
    for (const auto& [w, c] : terms_) {
        uint32_t s = 0;
        for (Gen g : w) s += gen_level(g);
        best = std::max(best, s);
    }
    return best;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string cs = c.str();
        if (w.empty()) {
            s += cs;
            continue;
        }
        if (!c.is_one()) s += cs + "*";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += "*";
            s += gen_str(w[i]);
        }
    }
    return s;
}

PBWMonomial PBWMonomial::from_word(const Word& w) {
    PBWMonomial m;
    for (Gen g : w) {
        switch (gen_fam(g)) {
            case Fam::F: m.f[gen_level(g)]++; break;
            case Fam::D1: m.d1[gen_level(g)]++; break;
            case Fam::D2: m.d2[gen_level(g)]++; break;
            case Fam::E: m.e[gen_level(g)]++; break;
        }
    }
    return m;
}

Word PBWMonomial::to_word() const {
    Word w;
    auto emit = [&](Fam fam, const std::map<uint32_t, uint32_t>& block) {
        for (const auto& [level, exp] : block)
            for (uint32_t i = 0; i < exp; ++i) w.push_back(make_gen(fam, level));
    };
    emit(Fam::F, f);
    emit(Fam::D1, d1);
    emit(Fam::D2, d2);
    emit(Fam::E, e);
    return w;
}

bool PBWMonomial::has_high_d_exponent(uint32_t p) const {
    for (const auto& [lvl, exp] : d1)
        if (exp >= p) return true;
    for (const auto& [lvl, exp] : d2)
        if (exp >= p) return true;
    return false;
}

namespace {

// words containing p equal adjacent e- or f-generators vanish in Y2^[p]
bool killed_restricted(const Word& w, uint32_t p) {
    uint32_t run = 1;
    for (size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1]) {
            Fam fam = gen_fam(w[i]);
            if (fam == Fam::E || fam == Fam::F) {
                if (++run >= p) return true;
            }
        } else {
            run = 1;
        }
    }
    return false;
}

// the expansion of [x, y] for adjacent out-of-order x y (x > y in the
// normal order), as pairs (replacement word, coefficient)
void commutator_terms(const FieldSpec& fs, Gen x, Gen y,
                      std::vector<std::pair<Word, FieldScalar>>& out) {
    out.clear();
    const Fam fx = gen_fam(x), fy = gen_fam(y);
    const uint32_t r = gen_level(x), s = gen_level(y);
    const FieldScalar plus = FieldScalar::one(fs);
    const FieldScalar minus = -plus;

    auto is_d = [](Fam f) { return f == Fam::D1 || f == Fam::D2; };

    if (is_d(fx) && is_d(fy)) return; // d's commute

    if (is_d(fx) && fy == Fam::F) {
        // [d_i^(r), f^(s)] = (delta_{i2}-delta_{i1}) sum_t f^(r+s-1-t) d_i^(t)
        const FieldScalar sign = fx == Fam::D1 ? minus : plus;
        for (uint32_t t = 0; t < r; ++t) {
            Word w{make_gen(Fam::F, r + s - 1 - t)};
            if (t > 0) w.push_back(make_gen(fx, t));
            out.emplace_back(std::move(w), sign);
        }
        return;
    }

    if (fx == Fam::E && is_d(fy)) {
        // [e^(r'), d_i^(s')] = -(delta_{i1}-delta_{i2}) sum_t d_i^(t) e^(r'+s'-1-t)
        const FieldScalar sign = fy == Fam::D1 ? minus : plus;
        for (uint32_t t = 0; t < s; ++t) {
            Word w;
            if (t > 0) w.push_back(make_gen(fy, t));
            w.push_back(make_gen(Fam::E, r + s - 1 - t));
            out.emplace_back(std::move(w), sign);
        }
        return;
    }

    if (fx == Fam::E && fy == Fam::F) {
        // [e^(r), f^(s)] = -sum_{t=0}^{r+s-1} d1'^(t) d2^(r+s-1-t)
        for (uint32_t t = 0; t <= r + s - 1; ++t) {
            NCPoly dp = dprime_expand(fs, 1, t);
            for (const auto& [dw, c] : dp.terms()) {
                Word w = dw;
                if (r + s - 1 - t > 0) w.push_back(make_gen(Fam::D2, r + s - 1 - t));
                out.emplace_back(std::move(w), -c);
            }
        }
        return;
    }

    if (fx == fy && (fx == Fam::F || fx == Fam::E)) {
        // telescoped same-family relation; r > s here
        // [f^(r), f^(s)] =  sum_{t=s}^{r-1} f^(t) f^(r+s-1-t)
        // [e^(r), e^(s)] = -sum_{t=s}^{r-1} e^(t) e^(r+s-1-t)
        const FieldScalar sign = fx == Fam::F ? plus : minus;
        for (uint32_t t = s; t < r; ++t)
            out.emplace_back(Word{make_gen(fx, t), make_gen(fx, r + s - 1 - t)}, sign);
        return;
    }

    throw Error("commutator_terms: unreachable pair " + gen_str(x) + "," + gen_str(y));
}

} // namespace

NCPoly dprime_expand(const FieldSpec& f, int i, uint32_t r) {
    if (i != 1 && i != 2) throw Error("dprime_expand: i must be 1 or 2");
    const Fam fam = i == 1 ? Fam::D1 : Fam::D2;
    std::vector<NCPoly> dp;
    dp.push_back(NCPoly::scalar(FieldScalar::one(f))); // d'^(0) = 1
    for (uint32_t k = 1; k <= r; ++k) {
        NCPoly acc = NCPoly::zero(f);
        for (uint32_t t = 1; t <= k; ++t)
            acc = acc - NCPoly::generator(f, fam, t) * dp[k - t];
        // d-generators commute; keep words sorted for canonical output
        NCPoly sorted = NCPoly::zero(f);
        for (const auto& [w, c] : acc.terms()) {
            Word sw = w;
            std::sort(sw.begin(), sw.end());
            sorted.add_term(sw, c);
        }
        dp.push_back(std::move(sorted));
    }
    return dp[r];
}

namespace {

uint32_t level_sum(const Word& w) {
    uint32_t s = 0;
    for (Gen g : w) s += gen_level(g);
    return s;
}

uint32_t inversions(const Word& w) {
    uint32_t inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

// Every rewrite step strictly lowers (level sum, inversions): the swap term
// keeps the sum and removes one inversion, the commutator terms lower the
// sum.  Processing pending words from the largest key down therefore visits
// each distinct word at most once, after all of its coefficients merged.
using QueueKey = std::tuple<uint32_t, uint32_t, Word>;

QueueKey queue_key(const Word& w) { return {level_sum(w), inversions(w), w}; }

} // namespace

NCPoly straighten(const NCPoly& x, const StraightenOpts& opts) {
    const FieldSpec& fs = x.spec();
    const uint32_t p = fs.p;

    for (const auto& [w, c] : x.terms())
        for (Gen g : w)
            if (gen_level(g) > opts.level_bound)
                throw Error("straighten: generator level " + std::to_string(gen_level(g)) +
                            " exceeds the configured bound " +
                            std::to_string(opts.level_bound));
    // the relations never raise the total level sum, so this bounds every
    // generator produced during rewriting
    const uint32_t sum_bound = x.total_degree();

    std::map<QueueKey, FieldScalar, std::greater<QueueKey>> pending;
    for (const auto& [w, c] : x.terms()) pending.emplace(queue_key(w), c);
    NCPoly result(fs);
    std::vector<std::pair<Word, FieldScalar>> comm;

    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = std::get<2>(it->first);
        FieldScalar c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;
        if (opts.mode == StraightenMode::Restricted && killed_restricted(w, p)) continue;

        // locate an out-of-order adjacent pair
        size_t pos = w.size();
        if (!opts.rightmost) {
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) {
                    pos = i;
                    break;
                }
        } else {
            for (size_t i = w.size(); i >= 2; --i)
                if (w[i - 2] > w[i - 1]) {
                    pos = i - 2;
                    break;
                }
        }
        if (pos == w.size()) {
            result.add_term(w, c);
            continue;
        }

        const Gen gx = w[pos], gy = w[pos + 1];
        // swap term
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        auto add_pending = [&](Word nw, const FieldScalar& nc) {
            if (nc.is_zero()) return;
            for (Gen g : nw)
                if (gen_level(g) > sum_bound)
                    throw Error("straighten: internal level bound violated");
            auto [iter, inserted] = pending.emplace(queue_key(nw), nc);
            if (!inserted) {
                iter->second = iter->second + nc;
                if (iter->second.is_zero()) pending.erase(iter);
            }
        };
        add_pending(std::move(swapped), c);

        commutator_terms(fs, gx, gy, comm);
        for (auto& [repl, k] : comm) {
            Word nw;
            nw.reserve(w.size() - 2 + repl.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), repl.begin(), repl.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            add_pending(std::move(nw), c * k);
        }
    }

    if (opts.mode == StraightenMode::Restricted) {
        NCPoly filtered(fs);
        for (const auto& [w, c] : result.terms())
            if (!killed_restricted(w, p)) filtered.add_term(w, c);
        return filtered;
    }
    return result;
}

NCPoly rtt_to_drinfeld(const FieldSpec& f, int i, int j, uint32_t r) {
    if (i < 1 || i > 2 || j < 1 || j > 2) throw Error("rtt_to_drinfeld: bad indices");
    if (r == 0) {
        return i == j ? NCPoly::scalar(FieldScalar::one(f)) : NCPoly::zero(f);
    }
    NCPoly out = NCPoly::zero(f);
    const FieldScalar one = FieldScalar::one(f);
    if (i == 1 && j == 1) { // d1(u)
        out.add_term({make_gen(Fam::D1, r)}, one);
    } else if (i == 1 && j == 2) { // d1(u) e(u)
        for (uint32_t t = 0; t < r; ++t) {
            Word w;
            if (t > 0) w.push_back(make_gen(Fam::D1, t));
            w.push_back(make_gen(Fam::E, r - t));
            out.add_term(w, one);
        }
    } else if (i == 2 && j == 1) { // f(u) d1(u)
        for (uint32_t t = 1; t <= r; ++t) {
            Word w{make_gen(Fam::F, t)};
            if (r - t > 0) w.push_back(make_gen(Fam::D1, r - t));
            out.add_term(w, one);
        }
    } else { // f(u) d1(u) e(u) + d2(u)
        out.add_term({make_gen(Fam::D2, r)}, one);
        for (uint32_t a = 1; a < r; ++a)
            for (uint32_t b = 0; a + b < r; ++b) {
                uint32_t c = r - a - b;
                Word w{make_gen(Fam::F, a)};
                if (b > 0) w.push_back(make_gen(Fam::D1, b));
                w.push_back(make_gen(Fam::E, c));
                out.add_term(w, one);
            }
    }
    return out;
}

bool verify_rtt_relation(const FieldSpec& f, uint32_t r, uint32_t s, int i, int j, int k,
                         int l, const StraightenOpts& opts) {
    auto t = [&](int a, int b, uint32_t lvl) { return rtt_to_drinfeld(f, a, b, lvl); };
    NCPoly lhs = t(i, j, r) * t(k, l, s) - t(k, l, s) * t(i, j, r);
    NCPoly rhs = NCPoly::zero(f);
    for (uint32_t tt = 0; tt < std::min(r, s); ++tt) {
        rhs = rhs + t(k, j, tt) * t(i, l, r + s - 1 - tt);
        rhs = rhs - t(k, j, r + s - 1 - tt) * t(i, l, tt);
    }
    StraightenOpts o = opts;
    o.level_bound = std::max<uint32_t>(o.level_bound, r + s);
    return straighten(lhs, o) == straighten(rhs, o);
}

NCPoly p_center_b(const FieldSpec& f, int i, uint32_t n) {
    if (i != 1 && i != 2) throw Error("p_center_b: i must be 1 or 2");
    const Fam fam = i == 1 ? Fam::D1 : Fam::D2;
    const uint32_t p = f.p;

    // binomial table mod p
    std::vector<std::vector<uint32_t>> binom(n + 1, std::vector<uint32_t>(n + 1, 0));
    for (uint32_t a = 0; a <= n; ++a) {
        binom[a][0] = 1 % p;
        for (uint32_t b = 1; b <= a; ++b)
            binom[a][b] = (binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0)) % p;
    }

    // series coefficients of d_i(u - j), truncated at u^{-n}:
    // coeff_k = sum_{r=1..k} C(k-1, k-r) j^{k-r} d_i^(r)   (k >= 1), coeff_0 = 1
    auto shifted_series = [&](uint32_t j) {
        std::vector<NCPoly> coeffs;
        coeffs.push_back(NCPoly::scalar(FieldScalar::one(f)));
        for (uint32_t k = 1; k <= n; ++k) {
            NCPoly acc = NCPoly::zero(f);
            for (uint32_t r = 1; r <= k; ++r) {
                FieldScalar c =
                    FieldScalar::from_int(f, binom[k - 1][k - r]) *
                    FieldScalar::from_int(f, j).pow(k - r);
                acc = acc + NCPoly::generator(f, fam, r).scaled(c);
            }
            coeffs.push_back(std::move(acc));
        }
        return coeffs;
    };

    std::vector<NCPoly> prod;
    prod.push_back(NCPoly::scalar(FieldScalar::one(f)));
    for (uint32_t k = 1; k <= n; ++k) prod.push_back(NCPoly::zero(f));
    for (uint32_t j = 0; j < p; ++j) {
        auto fac = shifted_series(j);
        std::vector<NCPoly> next(n + 1, NCPoly::zero(f));
        for (uint32_t a = 0; a <= n; ++a) {
            if (prod[a].is_zero()) continue;
            for (uint32_t b = 0; a + b <= n; ++b)
                next[a + b] = next[a + b] + prod[a] * fac[b];
        }
        prod = std::move(next);
    }

    // canonical commutative form: sort the d-words
    NCPoly out(f);
    for (const auto& [w, c] : prod[n].terms()) {
        Word sw = w;
        std::sort(sw.begin(), sw.end());
        out.add_term(sw, c);
    }
    return out;
}

uint32_t nilpotency_witness(const NCPoly& x, uint32_t cap) {
    const FieldSpec& f = x.spec();
    uint32_t lo = UINT32_MAX, hi = 0;
    for (const auto& [w, c] : x.terms()) {
        if (w.empty()) throw Error("nilpotency_witness: element must be in the augmentation ideal");
        for (Gen g : w) {
            if (gen_fam(g) != Fam::F)
                throw Error("nilpotency_witness: element must lie in the f-subalgebra");
            lo = std::min(lo, gen_level(g));
            hi = std::max(hi, gen_level(g));
        }
    }
    if (x.is_zero()) return 1;
    if (cap == 0) cap = (hi - lo + 1) * (f.p - 1) + 1;

    StraightenOpts opts;
    opts.mode = StraightenMode::Restricted;
    opts.level_bound = 0xFFFFFF; // levels cannot grow for f-only words
    NCPoly acc = straighten(x, opts);
    uint32_t n = 1;
    while (n <= cap) {
        if (acc.is_zero()) return n;
        acc = straighten(acc * x, opts);
        ++n;
    }
    throw Error("nilpotency_witness: cap " + std::to_string(cap) +
                " exceeded (should not happen for valid input)");
}

} // namespace y2p
