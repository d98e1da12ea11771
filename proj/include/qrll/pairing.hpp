#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrll/freealg.hpp"
#include "qrll/rmatrix.hpp"

namespace qrll {

enum class pairing_kind : uint8_t { sigma_r, sigma_tilde_r, dj };

// Skew pairing given by base values on letter pairs; words are evaluated by
// the structural recursion (a, bb') = (Delta^op(a), b (x) b') with the sign
// convention (a (x) a', b (x) b') = (-1)^{|a'||b|} (a,b)(a',b').
class pairing_spec {
  public:
    pairing_spec(free_context &ctx, pairing_kind kind, std::string name)
        : ctx_(&ctx), kind_(kind), name_(std::move(name)) {}
    pairing_spec(pairing_spec &&) = default;
    pairing_spec &operator=(pairing_spec &&) = default;

    free_context &ctx() const { return *ctx_; }
    pairing_kind kind() const { return kind_; }
    const std::string &name() const { return name_; }

    void set_base(uint32_t la, uint32_t lb, const qrat &v) {
        if (!v.is_zero()) base_[pack(la, lb)] = v;
    }
    void set_diag_base(int i, int j, const qrat &v) { diag_[{i, j}] = v; }

    // Letter-letter base value, including the group-like extension: formal
    // inverses of diagonal letters pair reciprocally, forced by (x, k^{-1}k) = eps(x).
    qrat base(uint32_t la, uint32_t lb) const {
        const letter &a = ctx_->l(la);
        const letter &b = ctx_->l(lb);
        if (kind_ == pairing_kind::dj) {
            if (a.kind == letter_kind::dj_cartan && b.kind == letter_kind::dj_cartan) {
                long f = ctx_->datum().h_form(expand(a.hvec), expand(b.hvec));
                return qrat::q_pow(-f);
            }
            if (a.kind == letter_kind::dj_f && b.kind == letter_kind::dj_e && a.i == b.i) {
                int par = ctx_->letter_z2(la) & ctx_->letter_z2(lb);
                // (f_i, e_i) = (-1)^{|f_i||e_i|} / (q^{-1} - q)
                return qrat(par ? -1 : 1) / (qrat::q_pow(-1) - qrat::q_pow(1));
            }
            return 0;
        }
        bool ga = ctx_->grouplike(la), gb = ctx_->grouplike(lb);
        if (ga && gb) {
            auto it = diag_.find({a.i, b.i});
            if (it == diag_.end() || it->second.is_zero())
                throw freealg_error(name_ + ": group-like extension rules insufficient for (" +
                                    word_str(*ctx_, ctx_->word_of(la)) + ", " +
                                    word_str(*ctx_, ctx_->word_of(lb)) + ")");
            int e = (a.inv ? -1 : 1) * (b.inv ? -1 : 1);
            return e > 0 ? it->second : it->second.inverse();
        }
        if (ga || gb) return 0;
        auto it = base_.find(pack(la, lb));
        return it == base_.end() ? qrat(0) : it->second;
    }

    mutable std::unordered_map<uint64_t, qrat> memo;
    mutable std::unique_ptr<std::mutex> memo_mutex = std::make_unique<std::mutex>();

  private:
    free_context *ctx_;
    pairing_kind kind_;
    std::string name_;
    std::unordered_map<uint64_t, qrat> base_;
    std::map<std::pair<int, int>, qrat> diag_;

    static uint64_t pack(uint32_t a, uint32_t b) { return (uint64_t(a) << 32) | b; }
    std::vector<int> expand(const std::vector<int16_t> &h) const {
        std::vector<int> v(ctx_->datum().hdim(), 0);
        for (size_t k = 0; k < h.size() && k < v.size(); ++k) v[k] = h[k];
        return v;
    }
};

// sigma_R on U^+(R) x U^-(R): base values unpacked from
// sum (-1)^{(i+j)(k+l)} (l+_ij, l-_kl) E_ij (x) E_kl = R.
inline pairing_spec make_sigma_r(free_context &ctx, const rmatrix_bundle &b) {
    pairing_spec s(ctx, pairing_kind::sigma_r, "sigma_R");
    const root_datum &d = *b.d;
    for (const auto &[key, v] : b.R.entries()) {
        int i = b.R.row(key, 0), j = b.R.col(key, 0);
        int k = b.R.row(key, 1), l = b.R.col(key, 1);
        if (i > j || k < l) continue;  // outside the triangular letter support
        int sgn = ((d.parity(i) + d.parity(j)) & (d.parity(k) + d.parity(l)) & 1) ? -1 : 1;
        if (i == j && k == l)
            s.set_diag_base(i, k, v);
        else
            s.set_base(ctx.rtt(+1, i, j), ctx.rtt(-1, k, l), v * qrat(sgn));
    }
    return s;
}

// Transposed inverse sigma~_R on U^-(R) x U^+(R), with base matrix R^{-1}_21.
inline pairing_spec make_sigma_tilde_r(free_context &ctx, const rmatrix_bundle &b) {
    pairing_spec s(ctx, pairing_kind::sigma_tilde_r, "sigma_tilde_R");
    const root_datum &d = *b.d;
    int slots21[2] = {2, 1};
    qmat rinv21 = b.R_inv.embed(2, slots21);
    for (const auto &[key, v] : rinv21.entries()) {
        int i = rinv21.row(key, 0), j = rinv21.col(key, 0);
        int k = rinv21.row(key, 1), l = rinv21.col(key, 1);
        if (i < j || k > l) continue;  // left letters are l^-, right letters l^+
        int sgn = ((d.parity(i) + d.parity(j)) & (d.parity(k) + d.parity(l)) & 1) ? -1 : 1;
        if (i == j && k == l)
            s.set_diag_base(i, k, v);
        else
            s.set_base(ctx.rtt(-1, i, j), ctx.rtt(+1, k, l), v * qrat(sgn));
    }
    return s;
}

// (.,.)_DJ on U^<= x U^>=; base values live in pairing_spec::base directly.
inline pairing_spec make_sigma_dj(free_context &ctx, const root_datum &) {
    return pairing_spec(ctx, pairing_kind::dj, "sigma_DJ");
}

namespace detail {

inline qrat pair_words_rec(const pairing_spec &s, uint32_t wa, uint32_t wb);

// (w, m) for a single right letter m: split w = x u and apply
// (xu, m) = sum (-1)^{|u||m1|} (x, m1)(u, m2) over Delta(m).
inline qrat pair_word_letter(const pairing_spec &s, uint32_t wa, uint32_t m) {
    free_context &ctx = s.ctx();
    const auto &ls = ctx.w(wa);
    uint32_t x = ls.front();
    std::vector<uint32_t> tail(ls.begin() + 1, ls.end());
    uint32_t u = ctx.wid(tail);
    int zu = ctx.word_z2(u);
    qrat acc;
    for (const auto &[p, c] : ctx.letter_coproduct(m).t) {
        const auto &m1w = ctx.w(p.first);
        qrat left;
        if (m1w.empty())
            left = ctx.letter_counit(x);
        else if (m1w.size() == 1)
            left = s.base(x, m1w[0]);
        else
            throw freealg_error("letter coproduct with non-letter component");
        if (left.is_zero()) continue;
        qrat right = pair_words_rec(s, u, p.second);
        if (right.is_zero()) continue;
        int sgn = (zu & ctx.word_z2(p.first)) ? -1 : 1;
        acc += c * left * right * qrat(sgn);
    }
    return acc;
}

inline qrat pair_words_rec(const pairing_spec &s, uint32_t wa, uint32_t wb) {
    free_context &ctx = s.ctx();
    if (!qdeg_is_zero(qdeg_add(ctx.word_qdeg(wa), ctx.word_qdeg(wb)))) return 0;
    if (ctx.w(wa).empty()) return ctx.word_counit(wb);
    if (ctx.w(wb).empty()) return ctx.word_counit(wa);
    if (ctx.w(wa).size() == 1 && ctx.w(wb).size() == 1)
        return s.base(ctx.w(wa)[0], ctx.w(wb)[0]);

    uint64_t key = (uint64_t(wa) << 32) | wb;
    {
        std::lock_guard<std::mutex> lk(*s.memo_mutex);
        auto it = s.memo.find(key);
        if (it != s.memo.end()) return it->second;
    }
    qrat acc;
    if (ctx.w(wb).size() == 1) {
        acc = pair_word_letter(s, wa, ctx.w(wb)[0]);
    } else {
        // (w, m v') = sum (-1)^{|w1||w2| + |w1||m|} (w2, m)(w1, v') over Delta(w).
        uint32_t m = ctx.w(wb)[0];
        std::vector<uint32_t> tail(ctx.w(wb).begin() + 1, ctx.w(wb).end());
        uint32_t v2 = ctx.wid(tail);
        qdeg mdeg = ctx.letter_qdeg(m);
        int zm = ctx.letter_z2(m);
        for (const auto &[p, c] : ctx.word_coproduct(wa).t) {
            if (!qdeg_is_zero(qdeg_add(ctx.word_qdeg(p.second), mdeg))) continue;
            qrat mid = pair_words_rec(s, p.second, ctx.word_of(m));
            if (mid.is_zero()) continue;
            qrat rest = pair_words_rec(s, p.first, v2);
            if (rest.is_zero()) continue;
            int z1 = ctx.word_z2(p.first);
            int sgn = (z1 & (ctx.word_z2(p.second) ^ zm)) ? -1 : 1;
            acc += c * mid * rest * qrat(sgn);
        }
    }
    std::lock_guard<std::mutex> lk(*s.memo_mutex);
    s.memo.emplace(key, acc);
    return acc;
}

}  // namespace detail

inline qrat pair_words(const pairing_spec &s, uint32_t left_word, uint32_t right_word) {
    return detail::pair_words_rec(s, left_word, right_word);
}

inline qrat pair(const pairing_spec &s, const alg_elem &a, const alg_elem &b) {
    qrat acc;
    for (const auto &[wa, ca] : a.t)
        for (const auto &[wb, cb] : b.t) {
            qrat v = pair_words(s, wa, wb);
            if (!v.is_zero()) acc += ca * cb * v;
        }
    return acc;
}

// Independent evaluation route used as a test oracle: peels the LAST letter of
// the right word and expands the full word coproduct of the left argument.
// No memoization.
inline qrat brute_pair_words(const pairing_spec &s, uint32_t wa, uint32_t wb) {
    free_context &ctx = s.ctx();
    if (!qdeg_is_zero(qdeg_add(ctx.word_qdeg(wa), ctx.word_qdeg(wb)))) return 0;
    if (ctx.w(wa).empty()) return ctx.word_counit(wb);
    if (ctx.w(wb).empty()) return ctx.word_counit(wa);
    if (ctx.w(wa).size() == 1 && ctx.w(wb).size() == 1)
        return s.base(ctx.w(wa)[0], ctx.w(wb)[0]);
    if (ctx.w(wb).size() == 1) return detail::pair_word_letter(s, wa, ctx.w(wb)[0]);
    std::vector<uint32_t> head(ctx.w(wb).begin(), ctx.w(wb).end() - 1);
    uint32_t n = ctx.w(wb).back();
    uint32_t v1 = ctx.wid(head);
    int zv1 = ctx.word_z2(v1);
    qrat acc;
    for (const auto &[p, c] : ctx.word_coproduct(wa).t) {
        qrat left = brute_pair_words(s, p.second, v1);
        if (left.is_zero()) continue;
        qrat right = brute_pair_words(s, p.first, ctx.word_of(n));
        if (right.is_zero()) continue;
        int z1 = ctx.word_z2(p.first);
        int sgn = (z1 & (ctx.word_z2(p.second) ^ zv1)) ? -1 : 1;
        acc += c * left * right * qrat(sgn);
    }
    return acc;
}

// Convolution-inverse identity between sigma and its transposed inverse:
// sum (-1)^{|a2||b1|} (a1,b1)(a2,b2)' = eps(a) eps(b) (and with the primes on
// the first factor), where (x,y)' = (-1)^{|x||y|} sigma~(y,x).
inline std::vector<check_entry> verify_convolution(pairing_spec &sig, pairing_spec &sigt,
                                                   int max_len) {
    free_context &ctx = sig.ctx();
    const root_datum &d = ctx.datum();
    std::vector<uint32_t> left_letters, right_letters;
    for (int i = 1; i <= d.N(); ++i)
        for (int j = i; j <= d.N(); ++j) {
            left_letters.push_back(ctx.rtt(+1, i, j));
            right_letters.push_back(ctx.rtt(-1, j, i));
        }
    auto words_up_to = [&](const std::vector<uint32_t> &pool, int len) {
        std::vector<uint32_t> out{0};
        std::vector<std::vector<uint32_t>> cur{{}};
        for (int l = 1; l <= len; ++l) {
            std::vector<std::vector<uint32_t>> next;
            for (const auto &wd : cur)
                for (uint32_t lt : pool) {
                    auto nw = wd;
                    nw.push_back(lt);
                    out.push_back(ctx.wid(nw));
                    next.push_back(std::move(nw));
                }
            cur = std::move(next);
        }
        return out;
    };
    auto lefts = words_up_to(left_letters, max_len);
    auto rights = words_up_to(right_letters, max_len);

    std::map<qdeg, std::vector<uint32_t>> rights_by_deg;
    for (uint32_t wb : rights) rights_by_deg[ctx.word_qdeg(wb)].push_back(wb);

    auto sigma_prime = [&](uint32_t x, uint32_t y) {
        qrat v = pair_words(sigt, y, x);
        if (v.is_zero()) return v;
        int sgn = (ctx.word_z2(x) & ctx.word_z2(y)) ? -1 : 1;
        return v * qrat(sgn);
    };

    long checked = 0;
    std::string bad;
    for (uint32_t wa : lefts) {
        auto it = rights_by_deg.find(qdeg_neg(ctx.word_qdeg(wa)));
        if (it == rights_by_deg.end()) continue;
        const auto &ca = ctx.word_coproduct(wa);
        for (uint32_t wb : it->second) {
            const auto &cb = ctx.word_coproduct(wb);
            qrat s1, s2;
            for (const auto &[pa, va] : ca.t)
                for (const auto &[pb, vb] : cb.t) {
                    int sgn = (ctx.word_z2(pa.second) & ctx.word_z2(pb.first)) ? -1 : 1;
                    qrat c = va * vb * qrat(sgn);
                    qrat f1 = pair_words(sig, pa.first, pb.first);
                    if (!f1.is_zero()) {
                        qrat g1 = sigma_prime(pa.second, pb.second);
                        if (!g1.is_zero()) s1 += c * f1 * g1;
                    }
                    qrat f2 = sigma_prime(pa.first, pb.first);
                    if (!f2.is_zero()) {
                        qrat g2 = pair_words(sig, pa.second, pb.second);
                        if (!g2.is_zero()) s2 += c * f2 * g2;
                    }
                }
            qrat expect = ctx.word_counit(wa) * ctx.word_counit(wb);
            ++checked;
            if ((s1 != expect || s2 != expect) && bad.empty())
                bad = "(" + word_str(ctx, wa) + " ; " + word_str(ctx, wb) + ")";
        }
    }
    std::vector<check_entry> out;
    out.push_back(bad.empty() ? check_entry::pass("convolution_identity[" +
                                                  std::to_string(checked) + " pairs]")
                              : check_entry::fail("convolution_identity", bad));
    return out;
}

}  // namespace qrll
