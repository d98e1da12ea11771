#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrll/gmatrix.hpp"
#include "qrll/qrat.hpp"
#include "qrll/rootdata.hpp"

namespace qrll {

struct freealg_error : std::runtime_error {
    explicit freealg_error(const std::string &msg) : std::runtime_error(msg) {}
};

enum class letter_kind : uint8_t { rtt, dj_e, dj_f, dj_cartan };

struct letter {
    letter_kind kind = letter_kind::rtt;
    int8_t side = 0;  // rtt only: +1 or -1
    int8_t inv = 0;   // rtt diagonal only: formal group-like inverse
    int16_t i = 0, j = 0;
    std::vector<int16_t> hvec;  // dj_cartan: q^{sum_k hvec_k H(~)_k}
    friend bool operator==(const letter &a, const letter &b) = default;
};

struct letter_hasher {
    size_t operator()(const letter &l) const {
        size_t h = (size_t(l.kind) << 1) ^ (size_t(l.side + 2) << 3) ^ (size_t(l.inv) << 6) ^
                   (size_t(uint16_t(l.i)) << 8) ^ (size_t(uint16_t(l.j)) << 24);
        for (int16_t v : l.hvec) h = h * 1000003u + size_t(uint16_t(v)) + 17;
        return h;
    }
};

class free_context;

// Noncommutative polynomial: sparse map from interned words to coefficients.
struct alg_elem {
    free_context *ctx = nullptr;
    std::map<uint32_t, qrat> t;
    bool is_zero() const { return t.empty(); }
    friend bool operator==(const alg_elem &a, const alg_elem &b) { return a.t == b.t; }
};

// Element of T (x) T; Koszul signs of the tensor-square multiplication are
// baked into the coefficients at construction time.
struct tensor_elem {
    free_context *ctx = nullptr;
    std::map<std::pair<uint32_t, uint32_t>, qrat> t;
    bool is_zero() const { return t.empty(); }
};

struct word_hasher {
    size_t operator()(const std::vector<uint32_t> &w) const {
        size_t h = 1469598103u;
        for (uint32_t x : w) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

// Interned alphabet + word table for one root datum; hosts both the RTT and
// the DJ alphabets, with cached degrees, counits, and coproducts.
class free_context {
  public:
    explicit free_context(const root_datum &d) : d_(&d) {
        words_.push_back({});  // word id 0 = empty word
        word_ids_.emplace(std::vector<uint32_t>{}, 0u);
    }
    free_context(const free_context &) = delete;

    const root_datum &datum() const { return *d_; }

    uint32_t lid(const letter &l) {
        auto it = letter_ids_.find(l);
        if (it != letter_ids_.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(letters_.size());
        letters_.push_back(l);
        letter_ids_.emplace(l, id);
        letter_qdeg_.push_back(compute_letter_qdeg(l));
        letter_z2_.push_back(d_->z2_of(letter_qdeg_.back()));
        return id;
    }
    const letter &l(uint32_t id) const { return letters_[id]; }

    uint32_t rtt(int side, int i, int j) {
        if (side > 0 ? i > j : i < j) throw freealg_error("rtt letter outside triangle");
        letter x;
        x.kind = letter_kind::rtt;
        x.side = static_cast<int8_t>(side);
        x.i = static_cast<int16_t>(i);
        x.j = static_cast<int16_t>(j);
        return lid(x);
    }
    uint32_t rtt_diag_inv(int side, int i) {
        letter x;
        x.kind = letter_kind::rtt;
        x.side = static_cast<int8_t>(side);
        x.inv = 1;
        x.i = x.j = static_cast<int16_t>(i);
        return lid(x);
    }
    uint32_t dj_e(int i) {
        letter x;
        x.kind = letter_kind::dj_e;
        x.i = static_cast<int16_t>(i);
        return lid(x);
    }
    uint32_t dj_f(int i) {
        letter x;
        x.kind = letter_kind::dj_f;
        x.i = static_cast<int16_t>(i);
        return lid(x);
    }
    uint32_t dj_cartan(const std::vector<int> &hvec) {
        letter x;
        x.kind = letter_kind::dj_cartan;
        x.hvec.assign(hvec.begin(), hvec.end());
        return lid(x);
    }
    uint32_t dj_qh(int i, int sgn) {
        std::vector<int> v = d_->h_vec(i);
        if (sgn < 0)
            for (auto &c : v) c = -c;
        return dj_cartan(v);
    }

    bool grouplike(uint32_t id) const {
        const letter &x = letters_[id];
        return x.kind == letter_kind::dj_cartan ||
               (x.kind == letter_kind::rtt && x.i == x.j);
    }
    qrat letter_counit(uint32_t id) const {
        const letter &x = letters_[id];
        if (x.kind == letter_kind::dj_cartan) return 1;
        if (x.kind == letter_kind::rtt) return x.i == x.j ? qrat(1) : qrat(0);
        return 0;
    }
    const qdeg &letter_qdeg(uint32_t id) const { return letter_qdeg_[id]; }
    int letter_z2(uint32_t id) const { return letter_z2_[id]; }

    uint32_t wid(const std::vector<uint32_t> &ls) {
        auto it = word_ids_.find(ls);
        if (it != word_ids_.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(words_.size());
        words_.push_back(ls);
        word_ids_.emplace(ls, id);
        return id;
    }
    const std::vector<uint32_t> &w(uint32_t id) const { return words_[id]; }
    uint32_t word_of(uint32_t letter_id) { return wid({letter_id}); }
    uint32_t concat(uint32_t a, uint32_t b) {
        std::vector<uint32_t> ls = words_[a];
        const auto &wb = words_[b];
        ls.insert(ls.end(), wb.begin(), wb.end());
        return wid(ls);
    }

    qdeg word_qdeg(uint32_t id) const {
        qdeg v(d_->qdim(), 0);
        for (uint32_t lt : words_[id]) v = qdeg_add(v, letter_qdeg_[lt]);
        return v;
    }
    int word_z2(uint32_t id) const {
        int p = 0;
        for (uint32_t lt : words_[id]) p ^= letter_z2_[lt];
        return p;
    }
    qrat word_counit(uint32_t id) const {
        qrat r = 1;
        for (uint32_t lt : words_[id]) {
            r = r * letter_counit(lt);
            if (r.is_zero()) break;
        }
        return r;
    }

    // --- algebra / tensor-square arithmetic -------------------------------

    alg_elem zero() { return alg_elem{this, {}}; }
    alg_elem one() { return from_word(0); }
    alg_elem from_word(uint32_t wd, const qrat &c = 1) {
        alg_elem a{this, {}};
        if (!c.is_zero()) a.t.emplace(wd, c);
        return a;
    }
    alg_elem from_letter(uint32_t lt, const qrat &c = 1) { return from_word(word_of(lt), c); }

    static void add_term(alg_elem &a, uint32_t wd, const qrat &c) {
        if (c.is_zero()) return;
        auto it = a.t.find(wd);
        if (it == a.t.end()) {
            a.t.emplace(wd, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) a.t.erase(it);
        }
    }
    alg_elem add(const alg_elem &a, const alg_elem &b) {
        alg_elem r = a.ctx ? a : zero();
        if (!r.ctx) r.ctx = this;
        for (const auto &[wd, c] : b.t) add_term(r, wd, c);
        return r;
    }
    alg_elem scale(const alg_elem &a, const qrat &s) {
        alg_elem r{this, {}};
        if (s.is_zero()) return r;
        for (const auto &[wd, c] : a.t) r.t.emplace(wd, c * s);
        return r;
    }
    alg_elem neg(const alg_elem &a) { return scale(a, -1); }
    // Free-superalgebra product: plain concatenation, no Koszul signs.
    alg_elem mul(const alg_elem &a, const alg_elem &b) {
        alg_elem r{this, {}};
        for (const auto &[wa, ca] : a.t)
            for (const auto &[wb, cb] : b.t) add_term(r, concat(wa, wb), ca * cb);
        return r;
    }

    int z2(const alg_elem &a) const {
        int p = -1;
        for (const auto &[wd, c] : a.t) {
            int q = word_z2(wd);
            if (p < 0) p = q;
            if (p != q) throw freealg_error("alg_elem is not Z2-homogeneous");
        }
        return p < 0 ? 0 : p;
    }
    qdeg qdeg_of(const alg_elem &a) const {
        qdeg v(d_->qdim(), 0);
        bool first = true;
        for (const auto &[wd, c] : a.t) {
            qdeg u = word_qdeg(wd);
            if (first) {
                v = u;
                first = false;
            } else if (u != v) {
                throw freealg_error("alg_elem is not Q-homogeneous");
            }
        }
        return v;
    }
    qrat counit(const alg_elem &a) const {
        qrat r;
        for (const auto &[wd, c] : a.t) r += c * word_counit(wd);
        return r;
    }

    static void te_add_term(tensor_elem &a, uint32_t w1, uint32_t w2, const qrat &c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(w1, w2);
        auto it = a.t.find(key);
        if (it == a.t.end()) {
            a.t.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) a.t.erase(it);
        }
    }
    // (u (x) v)(x (x) y) = (-1)^{|v||x|} ux (x) vy.
    tensor_elem te_mul(const tensor_elem &a, const tensor_elem &b) {
        tensor_elem r{this, {}};
        for (const auto &[pa, ca] : a.t)
            for (const auto &[pb, cb] : b.t) {
                int sgn = (word_z2(pa.second) & word_z2(pb.first)) ? -1 : 1;
                te_add_term(r, concat(pa.first, pb.first), concat(pa.second, pb.second),
                            ca * cb * qrat(sgn));
            }
        return r;
    }

    // --- coproducts --------------------------------------------------------

    const tensor_elem &letter_coproduct(uint32_t id) {
        auto it = letter_cop_.find(id);
        if (it != letter_cop_.end()) return it->second;
        tensor_elem r{this, {}};
        const letter x = letters_[id];  // by value: interning below may reallocate
        switch (x.kind) {
            case letter_kind::rtt: {
                if (x.i == x.j) {  // group-like, including formal inverses
                    uint32_t wd = word_of(id);
                    te_add_term(r, wd, wd, 1);
                    break;
                }
                int lo = std::min<int>(x.i, x.j), hi = std::max<int>(x.i, x.j);
                for (int k = lo; k <= hi; ++k) {
                    int sgn = ((d_->parity(x.i) + d_->parity(k)) &
                               (d_->parity(k) + d_->parity(x.j)) & 1)
                                  ? -1
                                  : 1;
                    te_add_term(r, word_of(rtt(x.side, x.i, k)),
                                word_of(rtt(x.side, k, x.j)), qrat(sgn));
                }
                break;
            }
            case letter_kind::dj_e:
                te_add_term(r, word_of(dj_qh(x.i, 1)), word_of(id), 1);
                te_add_term(r, word_of(id), 0, 1);
                break;
            case letter_kind::dj_f:
                te_add_term(r, 0, word_of(id), 1);
                te_add_term(r, word_of(id), word_of(dj_qh(x.i, -1)), 1);
                break;
            case letter_kind::dj_cartan: {
                uint32_t wd = word_of(id);
                te_add_term(r, wd, wd, 1);
                break;
            }
        }
        return letter_cop_.emplace(id, std::move(r)).first->second;
    }

    const tensor_elem &word_coproduct(uint32_t wd) {
        auto it = word_cop_.find(wd);
        if (it != word_cop_.end()) return it->second;
        tensor_elem r{this, {}};
        te_add_term(r, 0, 0, 1);
        const std::vector<uint32_t> ls = words_[wd];  // by value: te_mul interns words
        for (uint32_t lt : ls) r = te_mul(r, letter_coproduct(lt));
        return word_cop_.emplace(wd, std::move(r)).first->second;
    }

  private:
    const root_datum *d_;
    std::vector<letter> letters_;
    std::unordered_map<letter, uint32_t, letter_hasher> letter_ids_;
    std::vector<qdeg> letter_qdeg_;
    std::vector<int> letter_z2_;
    std::vector<std::vector<uint32_t>> words_;
    std::unordered_map<std::vector<uint32_t>, uint32_t, word_hasher> word_ids_;
    std::unordered_map<uint32_t, tensor_elem> letter_cop_;
    std::unordered_map<uint32_t, tensor_elem> word_cop_;

    qdeg compute_letter_qdeg(const letter &x) const {
        switch (x.kind) {
            case letter_kind::rtt:
                return qdeg_sub(d_->eps(x.i), d_->eps(x.j));
            case letter_kind::dj_e:
                return d_->alpha(x.i);
            case letter_kind::dj_f:
                return qdeg_neg(d_->alpha(x.i));
            case letter_kind::dj_cartan:
                return qdeg(d_->qdim(), 0);
        }
        return qdeg(d_->qdim(), 0);
    }
};

inline std::string word_str(const free_context &ctx, uint32_t wd) {
    if (ctx.w(wd).empty()) return "1";
    std::string s;
    for (uint32_t id : ctx.w(wd)) {
        if (!s.empty()) s += " ";
        const letter &x = ctx.l(id);
        switch (x.kind) {
            case letter_kind::rtt:
                s += std::string("l") + (x.side > 0 ? "+" : "-") + ":" + std::to_string(x.i) +
                     "," + std::to_string(x.j);
                if (x.inv) s += ":inv";
                break;
            case letter_kind::dj_e: s += "e:" + std::to_string(x.i); break;
            case letter_kind::dj_f: s += "f:" + std::to_string(x.i); break;
            case letter_kind::dj_cartan: {
                s += "qH:[";
                for (size_t k = 0; k < x.hvec.size(); ++k) {
                    if (k) s += ",";
                    s += std::to_string(x.hvec[k]);
                }
                s += "]";
                break;
            }
        }
    }
    return s;
}

inline std::string alg_str(const free_context &ctx, const alg_elem &a) {
    if (a.t.empty()) return "0";
    std::string s;
    for (const auto &[wd, c] : a.t) {
        if (!s.empty()) s += "  +  ";
        s += "(" + c.str() + ")*" + word_str(ctx, wd);
    }
    return s;
}

// Coefficients for formal matrices over the free superalgebra.
template <>
struct coeff_traits<alg_elem> {
    static bool is_zero(const alg_elem &a) { return a.is_zero(); }
    static alg_elem add(const alg_elem &a, const alg_elem &b) {
        free_context *c = a.ctx ? a.ctx : b.ctx;
        if (!c) return a;
        return c->add(a, b);
    }
    static alg_elem mul(const alg_elem &a, const alg_elem &b) {
        if (!a.ctx || !b.ctx) return alg_elem{};
        return a.ctx->mul(a, b);
    }
    static alg_elem neg(const alg_elem &a) {
        if (!a.ctx) return a;
        return a.ctx->neg(a);
    }
    static alg_elem scale(const alg_elem &a, const qrat &s) {
        if (!a.ctx) return a;
        return a.ctx->scale(a, s);
    }
    static int z2(const alg_elem &a) { return a.ctx ? a.ctx->z2(a) : 0; }
    static std::optional<alg_elem> inverse(const alg_elem &) { return std::nullopt; }
    static std::string str(const alg_elem &a) {
        return a.ctx ? alg_str(*a.ctx, a) : std::string("0");
    }
};

}  // namespace qrll
