#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrll/grading.hpp"
#include "qrll/qrat.hpp"
#include "qrll/rootdata.hpp"

namespace qrll {

struct gmatrix_error : std::runtime_error {
    explicit gmatrix_error(const std::string &msg) : std::runtime_error(msg) {}
};

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<qrat> {
    static bool is_zero(const qrat &a) { return a.is_zero(); }
    static qrat add(const qrat &a, const qrat &b) { return a + b; }
    static qrat mul(const qrat &a, const qrat &b) { return a * b; }
    static qrat neg(const qrat &a) { return -a; }
    static qrat scale(const qrat &a, const qrat &s) { return a * s; }
    static int z2(const qrat &) { return 0; }
    static std::optional<qrat> inverse(const qrat &a) {
        if (a.is_zero()) return std::nullopt;
        return a.inverse();
    }
    static std::string str(const qrat &a) { return a.str(); }
};

// Sparse square matrix over C spanning `legs` tensor factors of End(V_q).
// Entries are keyed by the packed multi-index ((i1,j1),...,(iL,jL)); matrix
// parities come from the ambient parity sequence of the root datum.
template <class C>
class gmatrix {
  public:
    static constexpr int max_legs = 5;

    gmatrix() = default;
    gmatrix(const root_datum *d, int legs) : d_(d), legs_(legs) {
        if (legs < 1 || legs > max_legs) throw gmatrix_error("unsupported leg count");
    }

    static gmatrix identity(const root_datum &d, int legs, const C &unit) {
        gmatrix m(&d, legs);
        std::vector<int> idx(legs, 1);
        while (true) {
            std::vector<std::pair<int, int>> rc(legs);
            for (int l = 0; l < legs; ++l) rc[l] = {idx[l], idx[l]};
            m.add_at(pack(rc), unit);
            int l = legs - 1;
            while (l >= 0 && ++idx[l] > d.N()) idx[l--] = 1;
            if (l < 0) break;
        }
        return m;
    }

    const root_datum *datum() const { return d_; }
    int legs() const { return legs_; }
    int dim() const { return d_ ? d_->N() : 0; }
    bool is_null() const { return d_ == nullptr; }
    bool is_zero() const { return e_.empty(); }
    size_t entry_count() const { return e_.size(); }
    const std::map<uint64_t, C> &entries() const { return e_; }

    static uint64_t pack(std::span<const std::pair<int, int>> rc) {
        uint64_t key = 0;
        for (const auto &[r, c] : rc) key = (key << 12) | (uint64_t(r) << 6) | uint64_t(c);
        return key;
    }
    int row(uint64_t key, int leg) const { return int(key >> (12 * (legs_ - 1 - leg) + 6)) & 63; }
    int col(uint64_t key, int leg) const { return int(key >> (12 * (legs_ - 1 - leg))) & 63; }

    int leg_parity(uint64_t key, int leg) const {
        return (d_->parity(row(key, leg)) + d_->parity(col(key, leg))) & 1;
    }
    int matrix_parity(uint64_t key) const {
        int p = 0;
        for (int l = 0; l < legs_; ++l) p += leg_parity(key, l);
        return p & 1;
    }

    void add_at(uint64_t key, const C &v) {
        if (coeff_traits<C>::is_zero(v)) return;
        auto it = e_.find(key);
        if (it == e_.end()) {
            e_.emplace(key, v);
        } else {
            it->second = coeff_traits<C>::add(it->second, v);
            if (coeff_traits<C>::is_zero(it->second)) e_.erase(it);
        }
    }
    void set(std::span<const std::pair<int, int>> rc, const C &v) { add_at(pack(rc), v); }
    void set1(int i, int j, const C &v) {
        std::pair<int, int> rc[1] = {{i, j}};
        set(rc, v);
    }
    void set2(int i, int j, int k, int l, const C &v) {
        std::pair<int, int> rc[2] = {{i, j}, {k, l}};
        set(rc, v);
    }
    C at1(int i, int j) const {
        std::pair<int, int> rc[1] = {{i, j}};
        auto it = e_.find(pack(rc));
        return it == e_.end() ? C{} : it->second;
    }
    C at2(int i, int j, int k, int l) const {
        std::pair<int, int> rc[2] = {{i, j}, {k, l}};
        auto it = e_.find(pack(rc));
        return it == e_.end() ? C{} : it->second;
    }

    friend gmatrix operator+(const gmatrix &a, const gmatrix &b) {
        if (a.is_null()) return b;
        if (b.is_null()) return a;
        a.check_shape(b);
        gmatrix r = a;
        for (const auto &[k, v] : b.e_) r.add_at(k, v);
        return r;
    }
    friend gmatrix operator-(const gmatrix &a, const gmatrix &b) {
        if (b.is_null()) return a;
        gmatrix nb = b;
        for (auto &[k, v] : nb.e_) v = coeff_traits<C>::neg(v);
        return a + nb;
    }
    gmatrix scaled(const qrat &s) const {
        gmatrix r(d_, legs_);
        if (s.is_zero()) return r;
        for (const auto &[k, v] : e_) r.add_at(k, coeff_traits<C>::scale(v, s));
        return r;
    }
    friend bool operator==(const gmatrix &a, const gmatrix &b) {
        if (a.is_null() && b.is_null()) return true;
        if (a.is_null()) return b.is_zero();
        if (b.is_null()) return a.is_zero();
        a.check_shape(b);
        return a.e_ == b.e_;
    }
    friend bool operator!=(const gmatrix &a, const gmatrix &b) { return !(a == b); }

    // Product in A_coeff (x)^beta End(V)^(x legs): Koszul signs arise between the
    // matrix legs of the two factors, and between the left factor's matrix legs
    // and the right factor's coefficient under the chosen braiding.
    friend gmatrix matmul(const gmatrix &a, const gmatrix &b, const bicharacter &bc) {
        if (a.is_null() || b.is_null()) return gmatrix();
        a.check_shape(b);
        std::unordered_map<uint64_t, std::vector<std::pair<uint64_t, const C *>>> by_rows;
        for (const auto &[k, v] : b.e_) by_rows[b.rows_key(k)].push_back({k, &v});
        gmatrix r(a.d_, a.legs_);
        for (const auto &[ka, va] : a.e_) {
            auto it = by_rows.find(a.cols_key(ka));
            if (it == by_rows.end()) continue;
            int par_a_total = a.matrix_parity(ka);
            for (const auto &[kb, vb] : it->second) {
                int sgn = 1;
                for (int l = 0; l < a.legs_; ++l) {
                    int pb = b.leg_parity(kb, l);
                    if (!pb) continue;
                    for (int m2 = l + 1; m2 < a.legs_; ++m2)
                        if (a.leg_parity(ka, m2)) sgn = -sgn;
                }
                sgn *= koszul_sign({0, par_a_total}, {coeff_traits<C>::z2(*vb), 0}, bc);
                C prod = coeff_traits<C>::mul(va, *vb);
                if (sgn < 0) prod = coeff_traits<C>::neg(prod);
                r.add_at(a.merge_keys(ka, kb), prod);
            }
        }
        return r;
    }

    // Tensor product as element formation (no Koszul signs): legs concatenate.
    gmatrix tensor_with(const gmatrix &other) const {
        if (is_null() || other.is_null()) return gmatrix();
        if (d_ != other.d_) throw gmatrix_error("tensor_with: datum mismatch");
        gmatrix r(d_, legs_ + other.legs_);
        for (const auto &[ka, va] : e_)
            for (const auto &[kb, vb] : other.e_)
                r.add_at((ka << (12 * other.legs_)) | kb, coeff_traits<C>::mul(va, vb));
        return r;
    }

    // Leg-numbering embedding M_{slots} into `total` legs, identity elsewhere;
    // unordered slot sequences pick up the tau^sigma sign per entry.
    gmatrix embed(int total, std::span<const int> slots) const {
        if (is_null()) return gmatrix();
        if (static_cast<int>(slots.size()) != legs_)
            throw gmatrix_error("embed: slot count must equal leg count");
        std::vector<int> sorted(slots.begin(), slots.end());
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1]) throw gmatrix_error("embed: duplicate slot");
        if (sorted.front() < 1 || sorted.back() > total)
            throw gmatrix_error("embed: slot out of range");
        std::vector<int> rank(legs_);
        for (int l = 0; l < legs_; ++l)
            rank[l] = int(std::lower_bound(sorted.begin(), sorted.end(), slots[l]) -
                          sorted.begin());

        std::vector<int> free_slots;
        for (int t = 1; t <= total; ++t)
            if (std::find(slots.begin(), slots.end(), t) == slots.end()) free_slots.push_back(t);

        gmatrix r(d_, total);
        for (const auto &[k, v] : e_) {
            int sgn = 1;
            for (int l = 0; l < legs_; ++l)
                for (int m2 = l + 1; m2 < legs_; ++m2)
                    if (rank[l] > rank[m2] && leg_parity(k, l) && leg_parity(k, m2)) sgn = -sgn;
            C val = sgn < 0 ? coeff_traits<C>::neg(v) : v;
            std::vector<std::pair<int, int>> rc(total, {0, 0});
            for (int l = 0; l < legs_; ++l) rc[slots[l] - 1] = {row(k, l), col(k, l)};
            std::vector<int> idx(free_slots.size(), 1);
            while (true) {
                for (size_t f = 0; f < free_slots.size(); ++f)
                    rc[free_slots[f] - 1] = {idx[f], idx[f]};
                r.add_at(pack(rc), val);
                if (free_slots.empty()) break;
                int f = static_cast<int>(free_slots.size()) - 1;
                while (f >= 0 && ++idx[f] > d_->N()) idx[f--] = 1;
                if (f < 0) break;
            }
        }
        return r;
    }

    // X^st on one leg: x_{ij} E_ij -> (-1)^{j(i+j)} x_{ij} E_ji.
    gmatrix supertranspose(int leg) const {
        gmatrix r(d_, legs_);
        for (const auto &[k, v] : e_) {
            int i = row(k, leg), j = col(k, leg);
            int sgn = (d_->parity(j) & ((d_->parity(i) + d_->parity(j)) & 1)) ? -1 : 1;
            std::vector<std::pair<int, int>> rc(legs_);
            for (int l = 0; l < legs_; ++l) rc[l] = {row(k, l), col(k, l)};
            std::swap(rc[leg].first, rc[leg].second);
            r.add_at(pack(rc), sgn < 0 ? coeff_traits<C>::neg(v) : v);
        }
        return r;
    }
    gmatrix supertranspose_all() const {
        gmatrix r = *this;
        for (int l = 0; l < legs_; ++l) r = r.supertranspose(l);
        return r;
    }

    bool is_upper_triangular() const {
        for (const auto &[k, v] : e_)
            if (row(k, 0) > col(k, 0)) return false;
        return true;
    }
    bool is_lower_triangular() const {
        for (const auto &[k, v] : e_)
            if (row(k, 0) < col(k, 0)) return false;
        return true;
    }

    // Gauss decomposition of a triangular one-leg matrix: upper L = D * U,
    // lower L = W * D, with unit-diagonal unipotent part and exact reconstruction.
    std::pair<std::vector<C>, gmatrix> gauss(bool upper, const C &unit) const {
        if (legs_ != 1) throw gmatrix_error("gauss: one-leg matrices only");
        if (upper ? !is_upper_triangular() : !is_lower_triangular())
            throw gmatrix_error("gauss: matrix is not triangular of the requested side");
        int N = d_->N();
        std::vector<C> diag(N);
        std::vector<C> diag_inv(N);
        for (int i = 1; i <= N; ++i) {
            C di = at1(i, i);
            auto inv = coeff_traits<C>::inverse(di);
            if (!inv)
                throw gmatrix_error("gauss: diagonal entry not invertible at index " +
                                    std::to_string(i));
            diag[i - 1] = di;
            diag_inv[i - 1] = *inv;
        }
        gmatrix uni(d_, 1);
        for (int i = 1; i <= N; ++i) uni.set1(i, i, unit);
        for (const auto &[k, v] : e_) {
            int i = row(k, 0), j = col(k, 0);
            if (i == j) continue;
            C w = upper ? coeff_traits<C>::mul(diag_inv[i - 1], v)
                        : coeff_traits<C>::mul(v, diag_inv[j - 1]);
            uni.set1(i, j, w);
        }
        return {diag, uni};
    }

  private:
    const root_datum *d_ = nullptr;
    int legs_ = 0;
    std::map<uint64_t, C> e_;

    void check_shape(const gmatrix &o) const {
        if (d_ != o.d_ || legs_ != o.legs_) throw gmatrix_error("shape mismatch");
    }
    uint64_t rows_key(uint64_t k) const {
        uint64_t r = 0;
        for (int l = 0; l < legs_; ++l) r = (r << 6) | uint64_t(row(k, l));
        return r;
    }
    uint64_t cols_key(uint64_t k) const {
        uint64_t r = 0;
        for (int l = 0; l < legs_; ++l) r = (r << 6) | uint64_t(col(k, l));
        return r;
    }
    uint64_t merge_keys(uint64_t ka, uint64_t kb) const {
        uint64_t r = 0;
        for (int l = 0; l < legs_; ++l)
            r = (r << 12) | (uint64_t(row(ka, l)) << 6) | uint64_t(col(kb, l));
        return r;
    }
};

// End(V_q)-valued coefficients (one-leg matrices over qrat), used when slicing
// two-leg R-matrices into N x N matrices over the representation algebra.
template <>
struct coeff_traits<gmatrix<qrat>> {
    using M = gmatrix<qrat>;
    static bool is_zero(const M &a) { return a.is_null() || a.is_zero(); }
    static M add(const M &a, const M &b) { return a + b; }
    static M mul(const M &a, const M &b) {
        if (is_zero(a) || is_zero(b)) return M();
        return matmul(a, b, bicharacter::standard());
    }
    static M neg(const M &a) { return M() - a; }
    static M scale(const M &a, const qrat &s) { return a.scaled(s); }
    static int z2(const M &a) {
        if (is_zero(a)) return 0;
        int p = -1;
        for (const auto &[k, v] : a.entries()) {
            int q = a.matrix_parity(k);
            if (p < 0) p = q;
            if (p != q) throw gmatrix_error("coefficient matrix is not Z2-homogeneous");
        }
        return p;
    }
    // Inverse of a diagonal matrix (the only case arising: q^{±H} blocks).
    static std::optional<M> inverse(const M &a) {
        if (is_zero(a)) return std::nullopt;
        M r(a.datum(), 1);
        size_t diag_count = 0;
        for (const auto &[k, v] : a.entries()) {
            int i = a.row(k, 0), j = a.col(k, 0);
            if (i != j) return std::nullopt;
            if (v.is_zero()) return std::nullopt;
            r.set1(i, i, v.inverse());
            ++diag_count;
        }
        if (diag_count != static_cast<size_t>(a.dim())) return std::nullopt;
        return r;
    }
    static std::string str(const M &a) {
        std::string s = "[";
        for (const auto &[k, v] : a.entries()) {
            s += "E(" + std::to_string(a.row(k, 0)) + "," + std::to_string(a.col(k, 0)) +
                 "): " + v.str() + "; ";
        }
        return s + "]";
    }
};

}  // namespace qrll
