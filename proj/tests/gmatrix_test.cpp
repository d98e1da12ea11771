#include "qrll/gmatrix.hpp"

#include <gtest/gtest.h>

#include "qrll/freealg.hpp"
#include "qrll/rmatrix.hpp"

using namespace qrll;

namespace {

struct xorshift {
    uint64_t s;
    explicit xorshift(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int range(int lo, int hi) { return lo + int(next() % uint64_t(hi - lo + 1)); }
};

// Sparse random matrix with single-letter alg_elem entries (mixed parities).
gmatrix<alg_elem> random_alg_matrix(const root_datum &d, free_context &ctx, xorshift &rng,
                                    int legs, int fill) {
    gmatrix<alg_elem> m(&d, legs);
    for (int t = 0; t < fill; ++t) {
        std::vector<std::pair<int, int>> rc(legs);
        for (int l = 0; l < legs; ++l) rc[l] = {rng.range(1, d.N()), rng.range(1, d.N())};
        int i = rng.range(1, d.N());
        int j = rng.range(i, d.N());
        alg_elem c = ctx.from_letter(ctx.rtt(+1, i, j), qrat(rng.range(1, 3)));
        m.set(rc, c);
    }
    return m;
}

qmat random_qmat(const root_datum &d, xorshift &rng, int legs, int fill) {
    qmat m(&d, legs);
    for (int t = 0; t < fill; ++t) {
        std::vector<std::pair<int, int>> rc(legs);
        for (int l = 0; l < legs; ++l) rc[l] = {rng.range(1, d.N()), rng.range(1, d.N())};
        m.set(rc, qrat::q_pow(rng.range(-2, 2)) * qrat(rng.range(-3, 3)));
    }
    return m;
}

// Restriction of a random matrix to one homogeneous Z2 component.
qmat homogeneous_part(const qmat &m, int par) {
    qmat r(m.datum(), m.legs());
    for (const auto &[k, v] : m.entries())
        if (m.matrix_parity(k) == par) r.add_at(k, v);
    return r;
}

// Test-only triangular inverse by back substitution.
qmat upper_triangular_inverse(const qmat &m) {
    const root_datum &d = *m.datum();
    int N = d.N();
    qmat inv(&d, 1);
    for (int j = 1; j <= N; ++j) {
        // solve m * x = e_j column by column
        std::vector<qrat> x(N + 1);
        for (int i = N; i >= 1; --i) {
            qrat rhs = (i == j) ? qrat(1) : qrat(0);
            for (int k = i + 1; k <= N; ++k) rhs -= m.at1(i, k) * x[k];
            x[i] = rhs / m.at1(i, i);
        }
        for (int i = 1; i <= N; ++i) inv.set1(i, j, x[i]);
    }
    return inv;
}

}  // namespace

TEST(gmatrix, koszul_signs_in_products) {
    root_datum d = root_datum::build_gl("01");
    free_context ctx(d);
    alg_elem c = ctx.from_letter(ctx.rtt(+1, 1, 2));   // odd letter
    alg_elem cp = ctx.from_letter(ctx.rtt(+1, 1, 2));  // odd letter
    gmatrix<alg_elem> a(&d, 1), b(&d, 1);
    a.set1(1, 2, c);
    b.set1(2, 1, cp);
    auto tw = matmul(a, b, bicharacter::twisted());
    auto st = matmul(a, b, bicharacter::standard());
    alg_elem prod = ctx.mul(c, cp);
    EXPECT_EQ(tw.at1(1, 1), prod);
    EXPECT_EQ(st.at1(1, 1), ctx.neg(prod));
}

TEST(gmatrix, triangular_inverse_over_scalars) {
    root_datum d = root_datum::build_gl("011");
    qmat l(&d, 1);
    l.set1(1, 1, qrat::q_pow(2));
    l.set1(2, 2, qrat::q_pow(-1));
    l.set1(3, 3, qrat(5));
    l.set1(1, 2, q_minus_qinv());
    l.set1(2, 3, qrat(7));
    qmat inv = upper_triangular_inverse(l);
    EXPECT_EQ(matmul(l, inv, bicharacter::standard()), qmat::identity(d, 1, 1));
}

TEST(gmatrix, matmul_associative_both_braidings) {
    root_datum d = root_datum::build_gl("0110");
    free_context ctx(d);
    xorshift rng(4242);
    for (const auto &bc : {bicharacter::standard(), bicharacter::twisted()}) {
        for (int trial = 0; trial < 12; ++trial) {
            auto a = random_alg_matrix(d, ctx, rng, 2, 6);
            auto b = random_alg_matrix(d, ctx, rng, 2, 6);
            auto c = random_alg_matrix(d, ctx, rng, 2, 6);
            EXPECT_EQ(matmul(matmul(a, b, bc), c, bc), matmul(a, matmul(b, c, bc), bc));
        }
    }
}

TEST(gmatrix, embed_identity_and_slots) {
    root_datum d = root_datum::build_gl("011");
    qmat id = qmat::identity(d, 1, 1);
    int slot2[1] = {2};
    EXPECT_EQ(id.embed(3, slot2), qmat::identity(d, 3, 1));

    rmatrix_bundle b = build_r(d);
    int s12[2] = {1, 2}, s13[2] = {1, 3}, s23[2] = {2, 3};
    auto r12 = b.R.embed(3, s12), r13 = b.R.embed(3, s13), r23 = b.R.embed(3, s23);
    EXPECT_EQ(r12.entry_count(), b.R.entry_count() * 3);
    EXPECT_EQ(r13.entry_count(), b.R.entry_count() * 3);
    EXPECT_EQ(r23.entry_count(), b.R.entry_count() * 3);
}

TEST(gmatrix, embed_permuted_slots_matches_oracle) {
    // R_21 for the gl R-matrix: diagonal part unchanged; the off-diagonal part
    // becomes -(q-q^{-1}) (-1)^{par(i)} E_ji (x) E_ij, by hand Koszul expansion.
    root_datum d = root_datum::build_gl("0110");
    rmatrix_bundle b = build_r(d);
    int s21[2] = {2, 1};
    qmat r21 = b.R.embed(2, s21);
    qmat oracle(&d, 2);
    for (int i = 1; i <= d.N(); ++i)
        for (int j = 1; j <= d.N(); ++j)
            oracle.set2(i, i, j, j, qrat::q_pow(-d.eps_form(i, j)));
    for (int i = 1; i <= d.N(); ++i)
        for (int j = i + 1; j <= d.N(); ++j)
            oracle.set2(j, i, i, j, qrat(-1) * q_minus_qinv() * qrat(d.parity(i) ? -1 : 1));
    EXPECT_EQ(r21, oracle);
}

TEST(gmatrix, embed_rejects_duplicates) {
    root_datum d = root_datum::build_gl("01");
    rmatrix_bundle b = build_r(d);
    int bad[2] = {1, 1};
    EXPECT_THROW(b.R.embed(3, bad), gmatrix_error);
}

TEST(gmatrix, embed_composition_law) {
    root_datum d = root_datum::build_gl("011");
    rmatrix_bundle b = build_r(d);
    xorshift rng(17);
    qmat m = random_qmat(d, rng, 2, 8);
    int first[2] = {3, 1};
    int second[3] = {2, 3, 4};
    // slots of the original legs after both embeddings: second[first[l]-1]
    int net[2] = {second[first[0] - 1], second[first[1] - 1]};
    EXPECT_EQ(m.embed(3, first).embed(4, second), m.embed(4, net));
}

TEST(gmatrix, supertranspose_involution_on_even) {
    root_datum d = root_datum::build_gl("00");
    xorshift rng(5);
    qmat m = random_qmat(d, rng, 1, 4);
    EXPECT_EQ(m.supertranspose(0).supertranspose(0), m);
}

TEST(gmatrix, partial_supertransposes_commute) {
    root_datum d = root_datum::build_gl("0110");
    xorshift rng(6);
    for (int t = 0; t < 10; ++t) {
        qmat m = random_qmat(d, rng, 2, 10);
        EXPECT_EQ(m.supertranspose(0).supertranspose(1), m.supertranspose(1).supertranspose(0));
    }
}

TEST(gmatrix, supertranspose_product_rule) {
    // (XY)^st = (-1)^{|X||Y|} Y^st X^st for homogeneous scalar-coefficient matrices.
    root_datum d = root_datum::build_gl("0110");
    xorshift rng(7);
    for (int t = 0; t < 20; ++t) {
        qmat x = homogeneous_part(random_qmat(d, rng, 1, 8), t % 2);
        qmat y = homogeneous_part(random_qmat(d, rng, 1, 8), (t / 2) % 2);
        if (x.is_zero() || y.is_zero()) continue;
        int px = t % 2, py = (t / 2) % 2;
        qmat lhs = matmul(x, y, bicharacter::standard()).supertranspose(0);
        qmat rhs = matmul(y.supertranspose(0), x.supertranspose(0), bicharacter::standard());
        if (px && py) rhs = qmat(&d, 1) - rhs;
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(gmatrix, full_supertranspose_commutes_with_leg_swap) {
    root_datum d = root_datum::build_gl("011");
    xorshift rng(8);
    int s21[2] = {2, 1};
    for (int t = 0; t < 10; ++t) {
        qmat m = random_qmat(d, rng, 2, 10);
        EXPECT_EQ(m.supertranspose_all().embed(2, s21), m.embed(2, s21).supertranspose_all());
    }
}

TEST(gmatrix, gauss_identity) {
    root_datum d = root_datum::build_gl("011");
    qmat id = qmat::identity(d, 1, 1);
    auto [diag, uni] = id.gauss(true, 1);
    for (const auto &v : diag) EXPECT_TRUE(v.is_one());
    EXPECT_EQ(uni, id);
}

TEST(gmatrix, gauss_hand_example) {
    root_datum d = root_datum::build_gl("01");
    qmat l(&d, 1);
    qrat a = qrat::q_pow(1), b = q_minus_qinv(), c = qrat(3);
    l.set1(1, 1, a);
    l.set1(1, 2, b);
    l.set1(2, 2, c);
    auto [diag, uni] = l.gauss(true, 1);
    EXPECT_EQ(diag[0], a);
    EXPECT_EQ(diag[1], c);
    EXPECT_EQ(uni.at1(1, 2), a.inverse() * b);
    EXPECT_EQ(uni.at1(1, 1), qrat(1));
    // exact reconstruction: L = D U
    qmat dd(&d, 1);
    dd.set1(1, 1, diag[0]);
    dd.set1(2, 2, diag[1]);
    EXPECT_EQ(matmul(dd, uni, bicharacter::standard()), l);

    // lower side: L = W D
    qmat lo(&d, 1);
    lo.set1(1, 1, a);
    lo.set1(2, 1, b);
    lo.set1(2, 2, c);
    auto [diag2, w] = lo.gauss(false, 1);
    EXPECT_EQ(w.at1(2, 1), b * a.inverse());
    qmat dd2(&d, 1);
    dd2.set1(1, 1, diag2[0]);
    dd2.set1(2, 2, diag2[1]);
    EXPECT_EQ(matmul(w, dd2, bicharacter::standard()), lo);
}

TEST(gmatrix, gauss_errors_name_index) {
    root_datum d = root_datum::build_gl("01");
    qmat l(&d, 1);
    l.set1(1, 1, 1);  // missing (2,2) diagonal entry
    l.set1(1, 2, 1);
    try {
        l.gauss(true, 1);
        FAIL() << "expected gmatrix_error";
    } catch (const gmatrix_error &e) {
        EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos);
    }
    qmat nt(&d, 1);
    nt.set1(2, 1, 1);
    EXPECT_THROW(nt.gauss(true, 1), gmatrix_error);
}

TEST(gmatrix, entry_degree_additivity) {
    root_datum d = root_datum::build_gl("01");
    free_context ctx(d);
    gmatrix<alg_elem> m(&d, 2);
    alg_elem c = ctx.from_letter(ctx.rtt(+1, 1, 2));
    m.set2(1, 2, 2, 2, c);
    for (const auto &[k, v] : m.entries()) {
        EXPECT_EQ(coeff_traits<alg_elem>::z2(v), 1);
        EXPECT_EQ(m.matrix_parity(k), 1);
    }
}

TEST(gmatrix, nested_matrix_coefficients) {
    root_datum d = root_datum::build_gl("01");
    fund_rep rep(d);
    gmatrix<qmat> l(&d, 1);
    l.set1(1, 1, rep.cartan(1, -1));
    l.set1(2, 2, rep.cartan(2, -1));
    l.set1(1, 2, rep.f(1).scaled(q_minus_qinv()));
    auto [diag, uni] = l.gauss(true, rep.identity());
    EXPECT_EQ(uni.at1(1, 2),
              matmul(rep.cartan(1, 1), rep.f(1).scaled(q_minus_qinv()),
                     bicharacter::standard()));
}
