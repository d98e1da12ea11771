#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrll/freealg.hpp"
#include "qrll/pairing.hpp"
#include "qrll/rmatrix.hpp"
#include "qrll/rootvectors.hpp"

namespace qrll {

// Quadratic relations indexed by the matrix component (E_ij (x) E_kl).
struct relation_set {
    std::map<uint64_t, alg_elem> rel;

    static uint64_t key(int i, int j, int k, int l) {
        return (uint64_t(i) << 18) | (uint64_t(j) << 12) | (uint64_t(k) << 6) | uint64_t(l);
    }
    static std::string key_str(uint64_t kk) {
        auto part = [&](int shift) { return std::to_string(int(kk >> shift) & 63); };
        return "(E" + part(18) + part(12) + ",E" + part(6) + part(0) + ")";
    }
};

inline gmatrix<alg_elem> formal_l(free_context &ctx, int side) {
    const root_datum &d = ctx.datum();
    gmatrix<alg_elem> l(&d, 1);
    for (int i = 1; i <= d.N(); ++i)
        for (int j = 1; j <= d.N(); ++j) {
            if (side > 0 ? i > j : i < j) continue;  // triangularity convention
            l.set1(i, j, ctx.from_letter(ctx.rtt(side, i, j)));
        }
    return l;
}

// Component-wise coefficients of R_12 L1 L2 - L2 L1 R_12 under the chosen braiding.
inline relation_set extract_rll(free_context &ctx, const rmatrix_bundle &b, int nu, int eta,
                                const bicharacter &bc) {
    const root_datum &d = ctx.datum();
    gmatrix<alg_elem> r12(&d, 2);
    for (const auto &[k, v] : b.R.entries()) r12.add_at(k, ctx.from_word(0, v));
    int s1[1] = {1}, s2[1] = {2};
    gmatrix<alg_elem> l1 = formal_l(ctx, nu).embed(2, s1);
    gmatrix<alg_elem> l2 = formal_l(ctx, eta).embed(2, s2);
    gmatrix<alg_elem> lhs = matmul(matmul(r12, l1, bc), l2, bc);
    gmatrix<alg_elem> rhs = matmul(matmul(l2, l1, bc), r12, bc);
    gmatrix<alg_elem> diff = lhs - rhs;
    relation_set out;
    for (const auto &[k, v] : diff.entries()) {
        uint64_t kk = relation_set::key(diff.row(k, 0), diff.col(k, 0), diff.row(k, 1),
                                        diff.col(k, 1));
        out.rel.emplace(kk, v);
    }
    return out;
}

// The zeta-twist of a quadratic relation: each length-2 word picks up
// zeta(|x|, |y|) on its coefficient.
inline alg_elem zeta_twist(free_context &ctx, const alg_elem &a) {
    alg_elem r{&ctx, {}};
    for (const auto &[wd, c] : a.t) {
        const auto &ls = ctx.w(wd);
        int sgn = 1;
        if (ls.size() == 2 && (ctx.letter_z2(ls[0]) & ctx.letter_z2(ls[1]))) sgn = -1;
        free_context::add_term(r, wd, sgn < 0 ? -c : c);
    }
    return r;
}

// Prop. twist equivalence: relations extracted under the twisted braiding equal
// the zeta-twist of the relations extracted under the standard braiding,
// component by component, for all three sign pairs.
inline std::vector<check_entry> twist_equivalence(free_context &ctx, const rmatrix_bundle &b) {
    std::vector<check_entry> out;
    const std::pair<int, int> signs[3] = {{1, 1}, {-1, -1}, {1, -1}};
    for (auto [nu, eta] : signs) {
        relation_set std_rel = extract_rll(ctx, b, nu, eta, bicharacter::standard());
        relation_set tw_rel = extract_rll(ctx, b, nu, eta, bicharacter::twisted());
        std::string name = std::string("twist(") + (nu > 0 ? "+" : "-") +
                           (eta > 0 ? "+" : "-") + ")";
        std::string bad;
        auto keys = std_rel.rel;
        for (const auto &[k, v] : tw_rel.rel)
            if (!keys.count(k)) keys.emplace(k, alg_elem{&ctx, {}});
        for (const auto &[k, v] : keys) {
            alg_elem lhs{&ctx, {}};
            auto it = tw_rel.rel.find(k);
            if (it != tw_rel.rel.end()) lhs = it->second;
            alg_elem rhs{&ctx, {}};
            auto jt = std_rel.rel.find(k);
            if (jt != std_rel.rel.end()) rhs = zeta_twist(ctx, jt->second);
            if (!(lhs == rhs)) {
                bad = relation_set::key_str(k);
                break;
            }
        }
        out.push_back(bad.empty() ? check_entry::pass(name) : check_entry::fail(name, bad));
    }
    return out;
}

// Generalized-double cross-relations u_{a,b} for generator pairs, assembled per
// matrix component: u_{a,b} = sum (-1)^{|b2||a|} { (-1)^{|a1||b1|} (a1,b1) a2 b2
// - (a2,b2) b1 a1 }.
inline relation_set cross_relations(free_context &ctx, const pairing_spec &sigma) {
    const root_datum &d = ctx.datum();
    relation_set out;
    for (int i = 1; i <= d.N(); ++i)
        for (int j = i; j <= d.N(); ++j)
            for (int k = 1; k <= d.N(); ++k)
                for (int l = 1; l <= k; ++l) {
                    uint32_t a = ctx.rtt(+1, i, j);
                    uint32_t b = ctx.rtt(-1, k, l);
                    int za = ctx.letter_z2(a);
                    alg_elem u{&ctx, {}};
                    for (const auto &[pa, ca] : ctx.letter_coproduct(a).t)
                        for (const auto &[pb, cb] : ctx.letter_coproduct(b).t) {
                            qrat c = ca * cb;
                            if (ctx.word_z2(pb.second) & za) c = -c;
                            qrat left = pair_words(sigma, pa.first, pb.first);
                            if (!left.is_zero()) {
                                qrat cc = c * left;
                                if (ctx.word_z2(pa.first) & ctx.word_z2(pb.first)) cc = -cc;
                                free_context::add_term(u, ctx.concat(pa.second, pb.second), cc);
                            }
                            qrat right = pair_words(sigma, pa.second, pb.second);
                            if (!right.is_zero())
                                free_context::add_term(u, ctx.concat(pb.first, pa.first),
                                                       -(c * right));
                        }
                    if (!u.is_zero()) out.rel.emplace(relation_set::key(i, j, k, l), u);
                }
    return out;
}

// Double compatibility: the u-relations coincide with the mixed RLL relations.
inline std::vector<check_entry> cross_check(free_context &ctx, const rmatrix_bundle &b,
                                            const pairing_spec &sigma) {
    relation_set u = cross_relations(ctx, sigma);
    relation_set mixed = extract_rll(ctx, b, +1, -1, bicharacter::standard());
    std::string bad;
    auto keys = u.rel;
    for (const auto &[k, v] : mixed.rel)
        if (!keys.count(k)) keys.emplace(k, alg_elem{&ctx, {}});
    for (const auto &[k, v] : keys) {
        alg_elem lhs{&ctx, {}}, rhs{&ctx, {}};
        auto it = u.rel.find(k);
        if (it != u.rel.end()) lhs = it->second;
        auto jt = mixed.rel.find(k);
        if (jt != mixed.rel.end()) rhs = jt->second;
        if (!(lhs == rhs)) {
            for (const auto &[wd, c] : rhs.t) {
                qrat cl;
                auto ct = lhs.t.find(wd);
                if (ct != lhs.t.end()) cl = ct->second;
                if (cl != c) {
                    bad = relation_set::key_str(k) + " word " + word_str(ctx, wd) + ": " +
                          cl.str() + " vs " + c.str();
                    break;
                }
            }
            if (bad.empty()) bad = relation_set::key_str(k);
            break;
        }
    }
    std::vector<check_entry> out;
    out.push_back(bad.empty() ? check_entry::pass("cross_relations")
                              : check_entry::fail("cross_relations", bad));
    return out;
}

// Oracle: the evaluated L-matrices model U(R), so every extracted relation must
// evaluate to the zero matrix under the slice assignment l_ij -> L_ij.
inline std::vector<check_entry> rep_validate_relations(free_context &ctx,
                                                       const rmatrix_bundle &b,
                                                       const rv_engine &rv) {
    const root_datum &d = ctx.datum();
    const bicharacter bc = bicharacter::standard();
    auto letter_img = [&](uint32_t lt) -> qmat {
        const letter &x = ctx.l(lt);
        const gmatrix<qmat> &l = x.side > 0 ? rv.lrep().lplus : rv.lrep().lminus;
        if (x.inv) return *coeff_traits<qmat>::inverse(l.at1(x.i, x.i));
        qmat cell = l.at1(x.i, x.j);
        return cell.is_null() ? qmat(&d, 1) : cell;
    };
    std::vector<check_entry> out;
    const std::pair<int, int> signs[3] = {{1, 1}, {-1, -1}, {1, -1}};
    for (auto [nu, eta] : signs) {
        relation_set rels = extract_rll(ctx, b, nu, eta, bicharacter::standard());
        std::string bad;
        for (const auto &[k, relation] : rels.rel) {
            qmat acc(&d, 1);
            for (const auto &[wd, c] : relation.t) {
                qmat m = rv.rep().identity();
                for (uint32_t lt : ctx.w(wd)) m = matmul(m, letter_img(lt), bc);
                acc = acc + m.scaled(c);
            }
            if (!acc.is_zero()) {
                bad = relation_set::key_str(k);
                break;
            }
        }
        std::string name = std::string("rep_validate(") + (nu > 0 ? "+" : "-") +
                           (eta > 0 ? "+" : "-") + ")";
        out.push_back(bad.empty() ? check_entry::pass(name) : check_entry::fail(name, bad));
    }
    return out;
}

}  // namespace qrll
