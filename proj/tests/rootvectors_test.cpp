#include "qrll/rootvectors.hpp"

#include <gtest/gtest.h>

using namespace qrll;

namespace {

struct fixture {
    root_datum d;
    free_context ctx;
    rmatrix_bundle b;
    rv_engine rv;
    explicit fixture(const char *parity, bool osp = false, const char *theta = "")
        : d(osp ? root_datum::build_osp(parity, theta) : root_datum::build_gl(parity)),
          ctx(d),
          b(build_r(d)),
          rv(d, ctx, b) {}
};

void expect_all(const std::vector<check_entry> &entries, const std::string &who) {
    for (const auto &e : entries)
        EXPECT_NE(e.status, "fail") << who << " " << e.name << " : " << e.witness;
}

// Support of a one-leg matrix: set of (eps_a - eps_b) over the nonzero entries.
bool supported_on(const root_datum &d, const qmat &m, const qdeg &want) {
    for (const auto &[k, v] : m.entries()) {
        qdeg got = qdeg_sub(d.eps(m.row(k, 0)), d.eps(m.col(k, 0)));
        if (got != want) return false;
    }
    return !m.is_zero();
}

}  // namespace

TEST(rootvectors, simple_roots_are_single_letters) {
    fixture f("011");
    for (int idx = 1; idx <= f.d.rank(); ++idx) {
        root_label g = f.d.simple_label(idx);
        const alg_elem &w = f.rv.dj_word(g, true);
        ASSERT_EQ(w.t.size(), 1u);
        EXPECT_EQ(f.ctx.w(w.t.begin()->first).size(), 1u);
    }
}

TEST(rootvectors, gl_iterated_bracket_expansion) {
    fixture f("011");
    root_label g{1, 3};
    const alg_elem &w = f.rv.dj_word(g, true);
    // e_{13} = e1 e2 - (-1)^{|e1||e2|} q^{(a1,a2)} e2 e1
    uint32_t e1 = f.ctx.dj_e(1), e2 = f.ctx.dj_e(2);
    uint32_t w12 = f.ctx.wid({e1, e2}), w21 = f.ctx.wid({e2, e1});
    long a12 = f.d.form(f.d.alpha(1), f.d.alpha(2));
    qrat c = qrat::q_pow(a12);
    if (f.d.z2_of(f.d.alpha(1)) & f.d.z2_of(f.d.alpha(2))) c = -c;
    ASSERT_EQ(w.t.size(), 2u);
    EXPECT_EQ(w.t.at(w12), qrat(1));
    EXPECT_EQ(w.t.at(w21), -c);
}

TEST(rootvectors, costandard_exceptions) {
    fixture c("0110", true);
    auto [a1, b1] = c.rv.costandard({1, 4});  // C-type long root 2 eps_1
    EXPECT_EQ(a1, (root_label{1, 2}));
    EXPECT_EQ(b1, (root_label{1, 3}));

    fixture dd("010010", true);
    auto [a2, b2] = dd.rv.costandard({2, 5});  // D-type long root 2 eps_2
    EXPECT_EQ(a2, (root_label{2, 3}));
    EXPECT_EQ(b2, (root_label{2, 4}));
    auto [a3, b3] = dd.rv.costandard({1, 4});  // D-type gamma_{1,s'}
    EXPECT_EQ(a3, (root_label{1, 2}));
    EXPECT_EQ(b3, (root_label{2, 4}));
}

TEST(rootvectors, word_degree_and_rep_support) {
    for (const char *p : {"011", "0110"}) {
        fixture f(p);
        for (const auto &g : f.d.reduced_positive_roots()) {
            qdeg root = f.d.root_vec(g);
            EXPECT_EQ(f.ctx.qdeg_of(f.rv.dj_word(g, true)), root);
            EXPECT_EQ(f.ctx.qdeg_of(f.rv.dj_word(g, false)), qdeg_neg(root));
            EXPECT_EQ(f.ctx.qdeg_of(f.rv.rtt_e_word(g.i, g.j)), root);
            EXPECT_EQ(f.ctx.qdeg_of(f.rv.rtt_f_word(g.j, g.i)), qdeg_neg(root));
            // DJ rep raises along +root; the pi-model Gauss slice lowers.
            EXPECT_TRUE(supported_on(f.d, f.rv.dj_rep(g, true), root));
            EXPECT_TRUE(supported_on(f.d, f.rv.rtt_e_rep(g.i, g.j), qdeg_neg(root)));
        }
    }
}

TEST(rootvectors, gl11_bold_e_normalization) {
    fixture f("01");
    alg_elem w = f.rv.rtt_e_word(1, 2);
    ASSERT_EQ(w.t.size(), 1u);
    EXPECT_EQ(w.t.begin()->second, qrat::q_pow(1) * q_minus_qinv().inverse());
}

TEST(rootvectors, d_type_vanishing_slice) {
    fixture f("010010", true);
    int s = f.d.s();
    EXPECT_TRUE(f.rv.rtt_e_rep(s, f.d.conj(s)).is_zero());
}

TEST(rootvectors, heights) {
    fixture f("010010", true);
    EXPECT_EQ(f.rv.height({1, 2}), 1);
    EXPECT_EQ(f.rv.height({2, 4}), 1);  // eps_2 + eps_3 = alpha_3 (D-type)
    EXPECT_EQ(f.rv.height({2, 5}), 2);  // 2 eps_2
    EXPECT_EQ(f.rv.height({1, 5}), 3);  // eps_1 + eps_2
}

TEST(rootvectors, pbw_enumeration_caps) {
    {
        fixture f("01");
        auto mono = pbw_enumerate(f.rv, 2);
        EXPECT_EQ(mono.size(), 2u);  // odd isotropic root capped at 1
    }
    {
        fixture f("00");
        auto mono = pbw_enumerate(f.rv, 2);
        EXPECT_EQ(mono.size(), 3u);  // 1, e, e^2
    }
    {
        fixture f("101", true);
        auto mono = pbw_enumerate(f.rv, 2);
        EXPECT_EQ(mono.size(), 3u);  // eps_1 odd but non-isotropic: e^2 admitted
    }
}

TEST(rootvectors, gram_scalar_examples) {
    fixture f("00");
    root_label g{1, 2};  // even root with (g,g) = 2
    EXPECT_EQ(gram_c_scalar(f.d, g, 1), qrat(1));
    EXPECT_EQ(gram_c_scalar(f.d, g, 2), qrat(1) + qrat::q_pow(2));
    pbw_monomial m{{1}};
    EXPECT_EQ(gram_chi(f.d, m), 0);
}

TEST(rootvectors, gram_check_small_data) {
    {
        fixture f("01");
        pairing_spec sigt = make_sigma_tilde_r(f.ctx, f.b);
        expect_all(gram_check(f.rv, sigt, 4), "gl01");
    }
    {
        fixture f("011");
        pairing_spec sigt = make_sigma_tilde_r(f.ctx, f.b);
        expect_all(gram_check(f.rv, sigt, 4), "gl011");
    }
    {
        fixture f("101", true);
        pairing_spec sigt = make_sigma_tilde_r(f.ctx, f.b);
        expect_all(gram_check(f.rv, sigt, 4), "osp101");
    }
    {
        fixture f("0110", true);
        pairing_spec sigt = make_sigma_tilde_r(f.ctx, f.b);
        expect_all(gram_check(f.rv, sigt, 3), "osp0110");
    }
}

TEST(rootvectors, ru_factorization_small_data) {
    {
        fixture f("01");
        pairing_spec dj = make_sigma_dj(f.ctx, f.d);
        expect_all(verify_ru_factorization(f.rv, dj, f.b), "gl01");
    }
    {
        fixture f("101", true);
        pairing_spec dj = make_sigma_dj(f.ctx, f.d);
        expect_all(verify_ru_factorization(f.rv, dj, f.b), "osp101");
    }
    {
        fixture f("0110", true);
        pairing_spec dj = make_sigma_dj(f.ctx, f.d);
        expect_all(verify_ru_factorization(f.rv, dj, f.b), "osp0110");
    }
}

TEST(rootvectors, correspondence_small_data) {
    {
        fixture f("01");
        pairing_spec sig = make_sigma_r(f.ctx, f.b);
        expect_all(correspondence_check(f.rv, sig), "gl01");
    }
    {
        fixture f("011");
        pairing_spec sig = make_sigma_r(f.ctx, f.b);
        expect_all(correspondence_check(f.rv, sig), "gl011");
    }
    {
        fixture f("101", true);
        pairing_spec sig = make_sigma_r(f.ctx, f.b);
        expect_all(correspondence_check(f.rv, sig), "osp101");
    }
    {
        fixture f("0110", true);
        pairing_spec sig = make_sigma_r(f.ctx, f.b);
        expect_all(correspondence_check(f.rv, sig), "osp0110");
    }
}

TEST(rootvectors, correspondence_d_type_reports_unspecified_long_roots) {
    fixture f("010010", true);
    pairing_spec sig = make_sigma_r(f.ctx, f.b);
    auto entries = correspondence_check(f.rv, sig);
    expect_all(entries, "osp010010");
    bool saw_unspecified = false;
    for (const auto &e : entries)
        if (e.status == "unspecified") saw_unspecified = true;
    EXPECT_TRUE(saw_unspecified);
}

TEST(rootvectors, nondefault_theta_still_consistent) {
    fixture f("101", true, "-++");
    pairing_spec sig = make_sigma_r(f.ctx, f.b);
    pairing_spec dj = make_sigma_dj(f.ctx, f.d);
    expect_all(correspondence_check(f.rv, sig), "osp101 theta=-++");
    expect_all(verify_ru_factorization(f.rv, dj, f.b), "osp101 theta=-++");
}
