#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrll/qrat.hpp"

namespace qrll {

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string &msg) : std::runtime_error(msg) {}
};

enum class algebra_mode : uint8_t { gl, osp };
enum class type_tag : uint8_t { A, B, C, D };

inline const char *type_name(type_tag t) {
    switch (t) {
        case type_tag::A: return "A";
        case type_tag::B: return "B";
        case type_tag::C: return "C";
        case type_tag::D: return "D";
    }
    return "?";
}

// gamma_{ij} = eps_i - eps_j with 1-based indices; the long roots of C/D types
// use j = i', so the convex order is plain lexicographic comparison of pairs.
struct root_label {
    int i = 0, j = 0;
    friend bool operator==(root_label a, root_label b) { return a.i == b.i && a.j == b.j; }
    friend bool operator<(root_label a, root_label b) {
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

using qdeg = std::vector<int>;  // Q-degree over the reduced eps basis

inline qdeg qdeg_add(const qdeg &a, const qdeg &b) {
    qdeg r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}
inline qdeg qdeg_sub(const qdeg &a, const qdeg &b) {
    qdeg r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}
inline qdeg qdeg_neg(const qdeg &a) {
    qdeg r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
    return r;
}
inline bool qdeg_is_zero(const qdeg &a) {
    return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
}

// Root and weight data of gl(V) or gosp(V) for a fixed parity sequence.
class root_datum {
  public:
    static root_datum build_gl(const std::string &parity) {
        root_datum d;
        d.mode_ = algebra_mode::gl;
        d.parse_parity(parity);
        if (d.N_ < 2) throw validation_error("gl datum needs parity length N >= 2");
        d.type_ = type_tag::A;
        d.s_ = d.N_;  // reduced eps basis = full eps basis in gl mode
        d.theta_.assign(d.N_ + 1, 1);
        for (int i = 1; i < d.N_; ++i)
            for (int j = i + 1; j <= d.N_; ++j) d.positive_.push_back({i, j});
        d.reduced_positive_ = d.positive_;
        for (int i = 1; i < d.N_; ++i) d.simple_.push_back({i, i + 1});
        d.finish();
        return d;
    }

    static root_datum build_osp(const std::string &parity, const std::string &theta = "") {
        root_datum d;
        d.mode_ = algebra_mode::osp;
        d.parse_parity(parity);
        if (d.N_ < 2) throw validation_error("osp datum needs parity length N >= 2");
        for (int i = 1; i <= d.N_; ++i)
            if (d.parity(i) != d.parity(d.conj(i)))
                throw validation_error("osp parity must satisfy entries[i] == entries[i'] (i = " +
                                       std::to_string(i) + ")");
        if (d.n_ % 2 != 0)
            throw validation_error("osp parity needs an even number of odd entries, got n = " +
                                   std::to_string(d.n_));
        d.s_ = d.N_ / 2;
        if (d.N_ % 2 == 1 && d.parity(d.s_ + 1) != 0)
            throw validation_error("osp parity with odd N needs an even middle entry");
        d.parse_theta(theta);
        if (d.m_ % 2 == 1)
            d.type_ = type_tag::B;
        else
            d.type_ = d.parity(d.s_) == 1 ? type_tag::C : type_tag::D;

        for (int a = 1; a <= d.N_; ++a)
            for (int b = a + 1; b < d.conj(a); ++b) d.positive_.push_back({a, b});
        for (int a = 1; a <= d.s_; ++a)
            if (d.parity(a) == 1) d.positive_.push_back({a, d.conj(a)});

        for (int a = 1; a <= d.s_; ++a)
            for (int b = a + 1; b < d.conj(a); ++b) d.reduced_positive_.push_back({a, b});
        if (d.type_ != type_tag::B)
            for (int a = 1; a <= d.s_; ++a)
                if (d.parity(a) == 1) d.reduced_positive_.push_back({a, d.conj(a)});
        std::sort(d.reduced_positive_.begin(), d.reduced_positive_.end(),
                  [&d](root_label x, root_label y) { return d.convex_less(x, y); });

        for (int i = 1; i < d.s_; ++i) d.simple_.push_back({i, i + 1});
        switch (d.type_) {
            case type_tag::B: d.simple_.push_back({d.s_, d.s_ + 1}); break;
            case type_tag::C: d.simple_.push_back({d.s_, d.conj(d.s_)}); break;
            case type_tag::D: d.simple_.push_back({d.s_ - 1, d.conj(d.s_)}); break;
            case type_tag::A: break;
        }
        d.finish();
        return d;
    }

    algebra_mode mode() const { return mode_; }
    type_tag type() const { return type_; }
    int N() const { return N_; }
    int s() const { return s_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int rank() const { return static_cast<int>(simple_.size()); }
    int conj(int i) const { return N_ + 1 - i; }
    int parity(int i) const { return parity_[i]; }
    int theta(int i) const { return theta_[i]; }
    const std::string &parity_string() const { return parity_str_; }
    std::string theta_string() const {
        if (mode_ == algebra_mode::gl) return "";
        std::string s;
        for (int i = 1; i <= N_; ++i) s += theta_[i] > 0 ? '+' : '-';
        return s;
    }

    // Dimension of the reduced eps basis: N for gl, s for osp.
    int qdim() const { return mode_ == algebra_mode::gl ? N_ : s_; }

    // eps_i as a vector over the reduced basis; eps_{i'} = -eps_i, middle = 0.
    qdeg eps(int i) const {
        qdeg v(qdim(), 0);
        if (mode_ == algebra_mode::gl) {
            v[i - 1] = 1;
        } else if (i <= s_) {
            v[i - 1] = 1;
        } else if (conj(i) >= 1 && conj(i) <= s_) {
            v[conj(i) - 1] = -1;
        }
        return v;
    }

    qdeg root_vec(root_label g) const { return qdeg_sub(eps(g.i), eps(g.j)); }
    qdeg alpha(int k) const { return root_vec(simple_[k - 1]); }
    root_label simple_label(int k) const { return simple_[k - 1]; }

    // Bilinear form on reduced-basis vectors: diagonal with (-1)^{parity}.
    long form(const qdeg &a, const qdeg &b) const {
        long r = 0;
        for (int k = 0; k < qdim(); ++k) r += static_cast<long>(a[k]) * b[k] * sign_of(k + 1);
        return r;
    }
    long eps_form(int i, int j) const { return form(eps(i), eps(j)); }
    // (eps~_i, eps~_j) = (eps_i, eps_j) + 1; osp only.
    long eps_tilde_form(int i, int j) const { return eps_form(i, j) + 1; }

    mpq_class rho_pair(const qdeg &v) const {
        mpq_class r(0);
        for (int k = 0; k < qdim(); ++k) r += rho_[k] * v[k] * sign_of(k + 1);
        return r;
    }
    mpq_class rho_pair_eps(int k) const { return rho_pair(eps(k)); }

    int z2_of(const qdeg &v) const {
        int p = 0;
        for (int k = 0; k < qdim(); ++k) p += v[k] * parity(k + 1);
        return p & 1;
    }
    int root_parity(root_label g) const { return (parity(g.i) + parity(g.j)) & 1; }
    bool is_isotropic(root_label g) const {
        qdeg v = root_vec(g);
        return root_parity(g) == 1 && form(v, v) == 0;
    }

    const std::vector<root_label> &positive_roots() const { return positive_; }
    const std::vector<root_label> &reduced_positive_roots() const { return reduced_positive_; }
    const std::vector<root_label> &simple_roots() const { return simple_; }

    // Convex order on reduced positive roots: lexicographic on the index pairs,
    // except that a C/D long root gamma_{ii'} sits between gamma_{i,s} and
    // gamma_{i,s+1} (the order induced by lexicographic dominant Lyndon words;
    // plain pair order would break convexity at gamma_{ii'} = gamma_{ij} + gamma_{ij'}).
    bool convex_less(root_label a, root_label b) const {
        if (a.i != b.i) return a.i < b.i;
        auto rank = [this](root_label g) {
            if (mode_ == algebra_mode::osp && g.j == conj(g.i)) return 2 * s_ + 1;
            return 2 * g.j;
        };
        return rank(a) < rank(b);
    }

    bool is_positive_root(const qdeg &v) const {
        for (const auto &g : positive_)
            if (root_vec(g) == v) return true;
        return false;
    }
    std::optional<root_label> reduced_label_of(const qdeg &v) const {
        for (const auto &g : reduced_positive_)
            if (root_vec(g) == v) return g;
        return std::nullopt;
    }

    // Cartan lattice basis dimension: H_1..H_N for gl, H~_1..H~_{s+1} for osp.
    int hdim() const { return mode_ == algebra_mode::gl ? N_ : s_ + 1; }
    long h_form(const std::vector<int> &u, const std::vector<int> &v) const {
        long r = 0;
        for (int k = 1; k <= hdim(); ++k)
            for (int l = 1; l <= hdim(); ++l) {
                if (u[k - 1] == 0 || v[l - 1] == 0) continue;
                long f = mode_ == algebra_mode::gl ? eps_form(k, l) : eps_tilde_form(k, l);
                r += static_cast<long>(u[k - 1]) * v[l - 1] * f;
            }
        return r;
    }
    // H-vector of h_i (the coroot Cartan element entering Delta and [e_i, f_i]).
    std::vector<int> h_vec(int i) const {
        std::vector<int> v(hdim(), 0);
        if (mode_ == algebra_mode::gl) {
            v[i - 1] = 1;
            v[i] = -1;
            return v;
        }
        if (i < s_) {
            v[i - 1] = 1;
            v[i] = -1;
        } else {
            switch (type_) {
                case type_tag::B:
                case type_tag::C:
                    v[s_ - 1] = 1;
                    v[s_] = -1;
                    break;
                case type_tag::D:
                    v[s_ - 2] = 1;
                    v[s_] = -1;
                    break;
                case type_tag::A: break;
            }
        }
        return v;
    }

  private:
    algebra_mode mode_ = algebra_mode::gl;
    type_tag type_ = type_tag::A;
    int N_ = 0, s_ = 0, m_ = 0, n_ = 0;
    std::string parity_str_;
    std::vector<int> parity_;  // 1-based
    std::vector<int> theta_;   // 1-based
    std::vector<root_label> positive_, reduced_positive_, simple_;
    std::vector<mpq_class> rho_;  // Weyl vector over the reduced basis

    int sign_of(int i) const { return parity(i) == 0 ? 1 : -1; }

    void parse_parity(const std::string &p) {
        parity_str_ = p;
        N_ = static_cast<int>(p.size());
        parity_.assign(N_ + 1, 0);
        for (int i = 1; i <= N_; ++i) {
            if (p[i - 1] == '0')
                parity_[i] = 0;
            else if (p[i - 1] == '1')
                parity_[i] = 1;
            else
                throw validation_error("parity string must consist of '0'/'1'");
        }
        m_ = 0;
        n_ = 0;
        for (int i = 1; i <= N_; ++i) (parity_[i] == 0 ? m_ : n_)++;
    }

    void parse_theta(const std::string &t) {
        theta_.assign(N_ + 1, 0);
        if (t.empty()) {
            int half = (N_ + 1) / 2;
            for (int i = 1; i <= half; ++i) theta_[i] = 1;
            for (int i = half + 1; i <= N_; ++i)
                theta_[i] = parity_[i] == 1 ? -theta_[conj(i)] : 1;
        } else {
            if (static_cast<int>(t.size()) != N_)
                throw validation_error("theta string length must equal parity length");
            for (int i = 1; i <= N_; ++i) {
                if (t[i - 1] == '+')
                    theta_[i] = 1;
                else if (t[i - 1] == '-')
                    theta_[i] = -1;
                else
                    throw validation_error("theta string must consist of '+'/'-'");
            }
        }
        for (int i = 1; i <= N_; ++i) {
            if (parity_[i] == 0 && theta_[i] != 1)
                throw validation_error("theta[i] must be +1 for even index i = " +
                                       std::to_string(i));
            if (parity_[i] == 1 && theta_[i] != -theta_[conj(i)])
                throw validation_error("theta[i] == -theta[i'] violated at i = " +
                                       std::to_string(i));
        }
    }

    void finish() {
        std::sort(positive_.begin(), positive_.end());
        rho_.assign(qdim(), mpq_class(0));
        for (const auto &g : positive_) {
            qdeg v = root_vec(g);
            mpq_class half(1, 2);
            if (root_parity(g) == 1) half = -half;
            for (int k = 0; k < qdim(); ++k) rho_[k] += half * v[k];
        }
    }
};

}  // namespace qrll
