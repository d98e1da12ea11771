#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrll/gmatrix.hpp"
#include "qrll/grading.hpp"
#include "qrll/qrat.hpp"
#include "qrll/rootdata.hpp"

namespace qrll {

struct check_entry {
    std::string name;
    std::string status;  // pass / fail / skipped / unspecified
    std::string witness;

    static check_entry pass(std::string n) { return {std::move(n), "pass", ""}; }
    static check_entry fail(std::string n, std::string w) {
        return {std::move(n), "fail", std::move(w)};
    }
    static check_entry skipped(std::string n, std::string w) {
        return {std::move(n), "skipped", std::move(w)};
    }
    static check_entry unspecified(std::string n, std::string w) {
        return {std::move(n), "unspecified", std::move(w)};
    }
    bool ok() const { return status != "fail"; }
};

using qmat = gmatrix<qrat>;

namespace detail {

inline std::string key_str(const qmat &m, uint64_t key) {
    std::string s = "(";
    for (int l = 0; l < m.legs(); ++l) {
        if (l) s += ",";
        s += "E" + std::to_string(m.row(key, l)) + std::to_string(m.col(key, l));
    }
    return s + ")";
}

inline std::string first_difference(const qmat &a, const qmat &b) {
    for (const auto &[k, v] : a.entries()) {
        qrat w;
        auto it = b.entries().find(k);
        if (it != b.entries().end()) w = it->second;
        if (v != w) return key_str(a, k) + ": " + v.str() + " vs " + w.str();
    }
    for (const auto &[k, w] : b.entries())
        if (a.entries().find(k) == a.entries().end())
            return key_str(b, k) + ": 0 vs " + w.str();
    return "";
}

inline check_entry compare(std::string name, const qmat &a, const qmat &b) {
    if (a == b) return check_entry::pass(std::move(name));
    return check_entry::fail(std::move(name), first_difference(a, b));
}

// q-exponent arriving as an exact rational; the osp entries must combine to
// integers (a violation is surfaced as an error rather than extending the
// scalar field by q^{1/2}).
inline qrat q_pow_exact(const mpq_class &e, const char *what) {
    if (e.get_den() != 1)
        throw validation_error(std::string("non-integer q-exponent in ") + what + ": " +
                               e.get_str());
    return qrat::q_pow(e.get_num().get_si());
}

}  // namespace detail

// First fundamental representation on V_q.
class fund_rep {
  public:
    explicit fund_rep(const root_datum &d) : d_(&d) {}

    const root_datum &datum() const { return *d_; }

    qmat e(int i) const {
        const root_datum &d = *d_;
        if (d.mode() == algebra_mode::gl) return unit(i, i + 1);
        int s = d.s();
        switch (d.type()) {
            case type_tag::B: return x_mat(i, i + 1);
            case type_tag::C: return i < s ? x_mat(i, i + 1) : unit(s, d.conj(s));
            case type_tag::D: return i < s ? x_mat(i, i + 1) : x_mat(s - 1, d.conj(s));
            case type_tag::A: break;
        }
        throw validation_error("fund_rep::e: bad type");
    }

    qrat kappa(int i) const {
        if (d_->mode() == algebra_mode::osp && d_->type() == type_tag::C && i == d_->s())
            return (qrat::q_pow(1) + qrat::q_pow(-1)) * qrat(mpq_class(1, 2));
        return 1;
    }

    qmat f(int i) const {
        const root_datum &d = *d_;
        if (d.mode() == algebra_mode::gl)
            return unit(i + 1, i).scaled(d.parity(i) ? -1 : 1);
        int s = d.s();
        qmat base;
        switch (d.type()) {
            case type_tag::B:
                base = x_mat(i + 1, i).scaled(d.parity(i) ? -1 : 1);
                break;
            case type_tag::C:
                base = i < s ? x_mat(i + 1, i).scaled(d.parity(i) ? -1 : 1)
                             : unit(d.conj(s), s).scaled(-2);
                break;
            case type_tag::D:
                base = i < s ? x_mat(i + 1, i).scaled(d.parity(i) ? -1 : 1)
                             : x_mat(d.conj(s), s - 1).scaled(d.parity(s - 1) ? -1 : 1);
                break;
            case type_tag::A: throw validation_error("fund_rep::f: bad type");
        }
        return base.scaled(kappa(i));
    }

    // rho(q^{±H_k}) for gl, rho(q^{±H~_k}) = q^{±(H_k + I)} for osp.
    qmat cartan(int k, int sgn) const {
        const root_datum &d = *d_;
        qmat r(d_, 1);
        for (int a = 1; a <= d.N(); ++a)
            r.set1(a, a, qrat::q_pow(sgn * cartan_exponent(k, a)));
        return r;
    }
    // rho(q^{sgn * sum_k v_k H(~)_k}), v over the Cartan lattice basis.
    qmat q_cartan(const std::vector<int> &v, int sgn = 1) const {
        const root_datum &d = *d_;
        qmat r(d_, 1);
        for (int a = 1; a <= d.N(); ++a) {
            long e = 0;
            for (int k = 1; k <= d.hdim(); ++k) e += v[k - 1] * cartan_exponent(k, a);
            r.set1(a, a, qrat::q_pow(sgn * e));
        }
        return r;
    }
    qmat q_h(int i, int sgn) const { return q_cartan(d_->h_vec(i), sgn); }

    qmat identity() const { return qmat::identity(*d_, 1, 1); }

    qmat unit(int i, int j) const {
        qmat r(d_, 1);
        r.set1(i, j, 1);
        return r;
    }
    // X_{ij} = E_ij - (-1)^{i(i+j)} theta_i theta_j E_{j'i'}.
    qmat x_mat(int i, int j) const {
        const root_datum &d = *d_;
        qmat r(d_, 1);
        r.set1(i, j, 1);
        int sgn = (d.parity(i) & ((d.parity(i) + d.parity(j)) & 1)) ? -1 : 1;
        r.set1(d.conj(j), d.conj(i), qrat(-sgn * d.theta(i) * d.theta(j)));
        return r;
    }

  private:
    const root_datum *d_;

    long cartan_exponent(int k, int a) const {
        const root_datum &d = *d_;
        if (d.mode() == algebra_mode::gl) return (a == k) ? (d.parity(k) ? -1 : 1) : 0;
        long e = 1;  // the +I shift of H~_k
        if (a == k && d.conj(k) != k) e += d.parity(k) ? -1 : 1;
        if (a == d.conj(k) && d.conj(k) != k) e -= d.parity(k) ? -1 : 1;
        return e;
    }
};

struct rmatrix_bundle {
    const root_datum *d = nullptr;
    qmat R, R_inv, R_s, R_u;
};

inline rmatrix_bundle build_r(const root_datum &d) {
    rmatrix_bundle b;
    b.d = &d;
    qrat qq = q_minus_qinv();
    qmat R(&d, 2), Rinv(&d, 2), Rs(&d, 2), Ru = qmat::identity(d, 2, 1);
    bool osp = d.mode() == algebra_mode::osp;
    long cshift = osp ? 1 : 0;  // (eps~_C, eps~_C)
    for (int i = 1; i <= d.N(); ++i)
        for (int j = 1; j <= d.N(); ++j) {
            long f = d.eps_form(i, j) + cshift;
            Rs.set2(i, i, j, j, qrat::q_pow(-f));
            R.set2(i, i, j, j, qrat::q_pow(-f));
            Rinv.set2(i, i, j, j, qrat::q_pow(f));
        }
    for (int i = 1; i <= d.N(); ++i)
        for (int j = i + 1; j <= d.N(); ++j) {
            qrat sj(d.parity(j) ? -1 : 1);
            R.set2(i, j, j, i, qrat(-1) * qq * sj * qrat::q_pow(-cshift));
            Rinv.set2(i, j, j, i, qq * sj * qrat::q_pow(cshift));
            Ru.set2(i, j, j, i,
                    qrat(-1) * qq * sj * (osp ? qrat::q_pow(d.eps_form(i, j)) : qrat(1)));
            if (!osp) continue;
            int mirror = ((d.parity(j) & ((d.parity(i) + d.parity(j)) & 1)) ? -1 : 1) *
                         d.theta(i) * d.theta(j);
            mpq_class rho_e = d.rho_pair(qdeg_sub(d.eps(i), d.eps(j)));
            mpq_class half_i(d.eps_form(i, i), 2), half_j(d.eps_form(j, j), 2);
            half_i.canonicalize();
            half_j.canonicalize();
            qrat mr = detail::q_pow_exact(rho_e - half_i + half_j, "osp R entry");
            qrat mri = detail::q_pow_exact(-rho_e - half_i + half_j, "osp R^{-1} entry");
            qrat mu = detail::q_pow_exact(rho_e - half_i - half_j, "osp R_u entry");
            R.set2(i, j, d.conj(i), d.conj(j),
                   qq * sj * qrat::q_pow(-cshift) * mr * qrat(mirror));
            Rinv.set2(i, j, d.conj(i), d.conj(j),
                      qrat(-1) * qq * sj * qrat::q_pow(cshift) * mri * qrat(mirror));
            Ru.set2(i, j, d.conj(i), d.conj(j), qq * sj * mu * qrat(mirror));
        }
    b.R = R;
    b.R_inv = Rinv;
    b.R_s = Rs;
    b.R_u = Ru;
    return b;
}

// tau_{VV} as an element of End(V)^{x2}: sum (-1)^{a} E_ba (x) E_ab.
inline qmat braiding_permutation(const root_datum &d) {
    qmat p(&d, 2);
    for (int a = 1; a <= d.N(); ++a)
        for (int b = 1; b <= d.N(); ++b) p.set2(b, a, a, b, qrat(d.parity(a) ? -1 : 1));
    return p;
}

inline std::vector<check_entry> check_structure(const rmatrix_bundle &b, const fund_rep &rep) {
    const root_datum &d = *b.d;
    const bicharacter bc = bicharacter::standard();
    std::vector<check_entry> out;
    auto emb = [&](const qmat &m, int s1, int s2) {
        int slots[2] = {s1, s2};
        return m.embed(3, slots);
    };

    qmat r12 = emb(b.R, 1, 2), r13 = emb(b.R, 1, 3), r23 = emb(b.R, 2, 3);
    out.push_back(detail::compare("ybe", matmul(matmul(r12, r13, bc), r23, bc),
                                  matmul(matmul(r23, r13, bc), r12, bc)));

    qmat rhat = matmul(braiding_permutation(d), b.R, bc);
    qmat h12 = emb(rhat, 1, 2), h23 = emb(rhat, 2, 3);
    out.push_back(detail::compare("braid", matmul(matmul(h12, h23, bc), h12, bc),
                                  matmul(matmul(h23, h12, bc), h23, bc)));

    out.push_back(
        detail::compare("inverse", matmul(b.R, b.R_inv, bc), qmat::identity(d, 2, 1)));

    int slots21[2] = {2, 1};
    out.push_back(
        detail::compare("supertranspose", b.R.supertranspose_all(), b.R.embed(2, slots21)));
    // Diagnostic companion: the identity that does hold in general is
    // (R_12)^st = R_s R_21 R_s^{-1}; it coincides with R_21 whenever R_s
    // commutes with tau(R_u) (gl always; osp only without mixed-parity
    // mirror entries).
    {
        qmat rs_inv(b.d, 2);
        for (const auto &[k, v] : b.R_s.entries()) rs_inv.add_at(k, v.inverse());
        qmat conj = matmul(matmul(b.R_s, b.R.embed(2, slots21), bc), rs_inv, bc);
        out.push_back(
            detail::compare("supertranspose_rs_conjugated", b.R.supertranspose_all(), conj));
    }

    out.push_back(detail::compare("ru_rs_product", matmul(b.R_u, b.R_s, bc), b.R));

    qmat r21 = emb(b.R.embed(2, slots21), 1, 2);
    qmat r31 = emb(b.R.embed(2, slots21), 1, 3);
    qmat rinv12 = emb(b.R_inv, 1, 2), rinv13 = emb(b.R_inv, 1, 3);
    out.push_back(detail::compare("ybe_variant_1", matmul(matmul(r23, r21, bc), r31, bc),
                                  matmul(matmul(r31, r21, bc), r23, bc)));
    out.push_back(detail::compare("ybe_variant_2",
                                  matmul(matmul(r23, rinv12, bc), rinv13, bc),
                                  matmul(matmul(rinv13, rinv12, bc), r23, bc)));

    // Intertwiner: R-hat commutes with (rho x rho) Delta(g) for every generator.
    std::string bad;
    auto check_comm = [&](const qmat &x, const std::string &who) {
        if (matmul(rhat, x, bc) != matmul(x, rhat, bc) && bad.empty()) bad = who;
    };
    for (int i = 1; i <= d.rank(); ++i) {
        qmat de =
            rep.q_h(i, 1).tensor_with(rep.e(i)) + rep.e(i).tensor_with(rep.identity());
        qmat df =
            rep.identity().tensor_with(rep.f(i)) + rep.f(i).tensor_with(rep.q_h(i, -1));
        check_comm(de, "Delta(e_" + std::to_string(i) + ")");
        check_comm(df, "Delta(f_" + std::to_string(i) + ")");
    }
    for (int k = 1; k <= d.hdim(); ++k)
        for (int sgn : {1, -1})
            check_comm(rep.cartan(k, sgn).tensor_with(rep.cartan(k, sgn)),
                       "Delta(qH_" + std::to_string(sgn * k) + ")");
    out.push_back(bad.empty() ? check_entry::pass("intertwiner")
                              : check_entry::fail("intertwiner", bad));
    return out;
}

// Representation-model element: matrix image plus its tracked Q-degree and
// Z2-parity, the data the q-superbracket exponents depend on.
struct rep_elem {
    qmat m;
    qdeg deg;
    int par = 0;
};

inline rep_elem re_mul(const rep_elem &a, const rep_elem &b) {
    return {matmul(a.m, b.m, bicharacter::standard()), qdeg_add(a.deg, b.deg),
            (a.par + b.par) & 1};
}
inline rep_elem re_scale(const rep_elem &a, const qrat &s) { return {a.m.scaled(s), a.deg, a.par}; }
inline rep_elem re_add(const rep_elem &a, const rep_elem &b) {
    return {a.m + b.m, a.deg, a.par};
}
inline rep_elem re_sub(const rep_elem &a, const rep_elem &b) {
    return {a.m - b.m, a.deg, a.par};
}
// [[a, b]] = ab - (-1)^{|a||b|} q^{(deg a, deg b)} ba.
inline rep_elem re_qbracket(const root_datum &d, const rep_elem &a, const rep_elem &b) {
    qrat c = qrat::q_pow(d.form(a.deg, b.deg));
    if (a.par & b.par) c = -c;
    return re_sub(re_mul(a, b), re_scale(re_mul(b, a), c));
}
// Supercommutator [a, b] = ab - (-1)^{|a||b|} ba.
inline rep_elem re_scommutator(const rep_elem &a, const rep_elem &b) {
    rep_elem ba = re_mul(b, a);
    if (a.par & b.par) return re_add(re_mul(a, b), ba);
    return re_sub(re_mul(a, b), ba);
}

inline rep_elem rep_e(const fund_rep &rep, int i) {
    const root_datum &d = rep.datum();
    return {rep.e(i), d.alpha(i), d.z2_of(d.alpha(i))};
}
inline rep_elem rep_f(const fund_rep &rep, int i) {
    const root_datum &d = rep.datum();
    return {rep.f(i), qdeg_neg(d.alpha(i)), d.z2_of(d.alpha(i))};
}

// The full Serre-relation catalogs, evaluated as matrices under rho:
// the gl list for A-type; the standard list plus the B/C/D tails for osp.
inline std::vector<check_entry> check_serre(const fund_rep &rep) {
    const root_datum &d = rep.datum();
    std::vector<check_entry> out;
    int r = d.rank();
    auto emit = [&](const std::string &name, const rep_elem &x) {
        out.push_back(x.m.is_zero() ? check_entry::pass(name)
                                    : check_entry::fail(name, "nonzero matrix"));
    };
    auto br = [&](const rep_elem &a, const rep_elem &b) { return re_qbracket(d, a, b); };
    auto E = [&](int i) { return rep_e(rep, i); };
    auto F = [&](int i) { return rep_f(rep, i); };
    auto tag = [&](const char *fam, int i, const char *side) {
        return std::string(fam) + "[" + side + ",i=" + std::to_string(i) + "]";
    };

    // [[x_i, x_j]] = 0 whenever (alpha_i, alpha_j) = 0, including i = j.
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            if (d.form(d.alpha(i), d.alpha(j)) != 0) continue;
            std::string nm = "serre1[" + std::to_string(i) + "," + std::to_string(j);
            emit(nm + ",e]", br(E(i), E(j)));
            emit(nm + ",f]", br(F(i), F(j)));
        }

    bool osp = d.mode() == algebra_mode::osp;
    int top = osp ? d.s() : r + 1;  // indices strictly below `top` follow the gl list
    for (int i = 1; i <= r; ++i) {
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > r) continue;
            if (osp && (i >= top || j >= top)) continue;
            if (d.z2_of(d.alpha(i)) != 0) continue;
            emit(tag("serre2", i, "e") + "j=" + std::to_string(j),
                 br(E(i), br(E(i), E(j))));
            emit(tag("serre2", i, "f") + "j=" + std::to_string(j),
                 br(F(i), br(F(i), F(j))));
        }
        if (i >= 2 && i + 1 <= r && d.z2_of(d.alpha(i)) == 1 &&
            !(osp && i + 1 >= top)) {
            emit(tag("serre3", i, "e"), br(br(br(E(i - 1), E(i)), E(i + 1)), E(i)));
            emit(tag("serre3", i, "f"), br(br(br(F(i - 1), F(i)), F(i + 1)), F(i)));
        }
    }
    if (!osp) return out;

    int s = d.s();
    auto even_alpha = [&](int i) { return d.z2_of(d.alpha(i)) == 0; };
    switch (d.type()) {
        case type_tag::B:
            if (s >= 2 && even_alpha(s - 1)) {
                emit("serreB1[e]", br(E(s - 1), br(E(s - 1), E(s))));
                emit("serreB1[f]", br(F(s - 1), br(F(s - 1), F(s))));
            }
            if (s >= 2 && even_alpha(s)) {
                emit("serreB2[e]", br(br(br(E(s - 1), E(s)), E(s)), E(s)));
                emit("serreB2[f]", br(br(br(F(s - 1), F(s)), F(s)), F(s)));
            }
            if (s >= 3 && !even_alpha(s - 1)) {
                emit("serreB3[e]", br(br(br(E(s - 2), E(s - 1)), E(s)), E(s - 1)));
                emit("serreB3[f]", br(br(br(F(s - 2), F(s - 1)), F(s)), F(s - 1)));
            }
            break;
        case type_tag::C:
            if (s >= 2 && even_alpha(s - 1)) {
                emit("serreC1[e]", br(E(s - 1), br(E(s - 1), br(E(s - 1), E(s)))));
                emit("serreC1[f]", br(F(s - 1), br(F(s - 1), br(F(s - 1), F(s)))));
            }
            if (s >= 2) {
                emit("serreC2[e]", br(br(E(s - 1), E(s)), E(s)));
                emit("serreC2[f]", br(br(F(s - 1), F(s)), F(s)));
            }
            if (s >= 3 && !even_alpha(s - 2) && !even_alpha(s - 1)) {
                emit("serreC3[e]",
                     br(br(br(br(E(s - 2), E(s - 1)), E(s)), br(E(s - 2), E(s - 1))),
                        E(s - 1)));
                emit("serreC3[f]",
                     br(br(br(br(F(s - 2), F(s - 1)), F(s)), br(F(s - 2), F(s - 1))),
                        F(s - 1)));
            }
            if (s >= 4 && even_alpha(s - 2) && !even_alpha(s - 1)) {
                emit("serreC4[e]",
                     br(br(br(br(br(br(E(s - 3), E(s - 2)), E(s - 1)), E(s)), E(s - 1)),
                           E(s - 2)),
                        E(s - 1)));
                emit("serreC4[f]",
                     br(br(br(br(br(br(F(s - 3), F(s - 2)), F(s - 1)), F(s)), F(s - 1)),
                           F(s - 2)),
                        F(s - 1)));
            }
            break;
        case type_tag::D:
            if (s >= 3 && even_alpha(s - 2)) {
                emit("serreD1[e]", br(E(s - 2), br(E(s - 2), E(s))));
                emit("serreD1[f]", br(F(s - 2), br(F(s - 2), F(s))));
            }
            if (s >= 3 && even_alpha(s)) {
                emit("serreD2[e]", br(br(E(s - 2), E(s)), E(s)));
                emit("serreD2[f]", br(br(F(s - 2), F(s)), F(s)));
            }
            if (s >= 4 && !even_alpha(s - 2)) {
                emit("serreD3[e]", br(br(br(E(s - 3), E(s - 2)), E(s)), E(s - 2)));
                emit("serreD3[f]", br(br(br(F(s - 3), F(s - 2)), F(s)), F(s - 2)));
            }
            if (s >= 3 && !even_alpha(s)) {
                emit("serreD4[e]",
                     re_sub(br(br(E(s - 2), E(s - 1)), E(s)), br(br(E(s - 2), E(s)), E(s - 1))));
                emit("serreD4[f]",
                     re_sub(br(br(F(s - 2), F(s - 1)), F(s)), br(br(F(s - 2), F(s)), F(s - 1))));
            }
            break;
        case type_tag::A: break;
    }
    return out;
}

// Chevalley-type relations of the fundamental representation.
inline std::vector<check_entry> check_rep_relations(const fund_rep &rep) {
    const root_datum &d = rep.datum();
    std::vector<check_entry> out;
    for (int k = 1; k <= d.hdim(); ++k) {
        bool ok = matmul(rep.cartan(k, 1), rep.cartan(k, -1), bicharacter::standard()) ==
                  rep.identity();
        out.push_back(ok ? check_entry::pass("cartan_inverse[k=" + std::to_string(k) + "]")
                         : check_entry::fail("cartan_inverse[k=" + std::to_string(k) + "]", ""));
    }
    qrat denom = q_minus_qinv();
    for (int i = 1; i <= d.rank(); ++i)
        for (int j = 1; j <= d.rank(); ++j) {
            rep_elem lhs = re_scommutator(rep_e(rep, i), rep_f(rep, j));
            qmat rhs(&d, 1);
            if (i == j) rhs = (rep.q_h(i, 1) - rep.q_h(i, -1)).scaled(denom.inverse());
            std::string nm =
                "chevalley_ef[" + std::to_string(i) + "," + std::to_string(j) + "]";
            out.push_back(lhs.m == rhs ? check_entry::pass(nm)
                                       : check_entry::fail(nm, detail::first_difference(lhs.m, rhs)));
        }
    return out;
}

// N x N matrices over End(V_q) obtained by slicing R_21 (for L^+) and R^{-1}
// (for L^-) along the second leg; the rho-evaluated images of the DF morphism.
struct evaluated_l {
    gmatrix<qmat> lplus, lminus;
};

inline evaluated_l build_evaluated_l(const rmatrix_bundle &b) {
    const root_datum &d = *b.d;
    int slots21[2] = {2, 1};
    qmat r21 = b.R.embed(2, slots21);
    evaluated_l out;
    out.lplus = gmatrix<qmat>(&d, 1);
    out.lminus = gmatrix<qmat>(&d, 1);
    auto slice = [&](const qmat &src, gmatrix<qmat> &dst) {
        std::map<std::pair<int, int>, qmat> cells;
        for (const auto &[k, v] : src.entries()) {
            int a = src.row(k, 0), bb = src.col(k, 0);
            int i = src.row(k, 1), j = src.col(k, 1);
            auto &cell = cells[{i, j}];
            if (cell.is_null()) cell = qmat(&d, 1);
            cell.set1(a, bb, v);
        }
        for (auto &[ij, m] : cells) dst.set1(ij.first, ij.second, m);
    };
    slice(r21, out.lplus);
    slice(b.R_inv, out.lminus);
    if (!out.lplus.is_upper_triangular())
        throw validation_error("evaluated L^+ is not upper triangular (build_r bug)");
    if (!out.lminus.is_lower_triangular())
        throw validation_error("evaluated L^- is not lower triangular (build_r bug)");
    return out;
}

}  // namespace qrll
