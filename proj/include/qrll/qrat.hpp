#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrll {

struct qrat_error : std::runtime_error {
    explicit qrat_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Dense polynomial in q with arbitrary-precision integer coefficients.
// Invariant: no trailing zero coefficient (zero polynomial has empty storage).
class zpoly {
  public:
    zpoly() = default;
    explicit zpoly(const mpz_class &c) {
        if (c != 0) c_.push_back(c);
    }
    static zpoly monomial(const mpz_class &c, int k) {
        zpoly p;
        if (c != 0) {
            p.c_.assign(k + 1, mpz_class(0));
            p.c_[k] = c;
        }
        return p;
    }
    static zpoly one() { return zpoly(mpz_class(1)); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class &coeff(int k) const {
        static const mpz_class z0(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return z0;
        return c_[k];
    }
    const mpz_class &leading() const {
        if (is_zero()) throw qrat_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    friend zpoly operator+(const zpoly &a, const zpoly &b) {
        zpoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(k) + b.coeff(k);
        r.trim();
        return r;
    }
    friend zpoly operator-(const zpoly &a, const zpoly &b) {
        zpoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(k) - b.coeff(k);
        r.trim();
        return r;
    }
    friend zpoly operator-(const zpoly &a) {
        zpoly r = a;
        for (auto &c : r.c_) c = -c;
        return r;
    }
    friend zpoly operator*(const zpoly &a, const zpoly &b) {
        if (a.is_zero() || b.is_zero()) return zpoly();
        zpoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend bool operator==(const zpoly &a, const zpoly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const zpoly &a, const zpoly &b) { return !(a == b); }
    friend bool operator<(const zpoly &a, const zpoly &b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (size_t k = a.c_.size(); k-- > 0;)
            if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
        return false;
    }

    mpz_class content() const {
        mpz_class g(0);
        for (const auto &c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        return g;  // 0 for the zero polynomial
    }

    // Exact division; throws if the division leaves a remainder.
    zpoly divexact(const zpoly &d) const {
        if (d.is_zero()) throw qrat_error("zpoly division by zero");
        if (is_zero()) return zpoly();
        if (degree() < d.degree()) throw qrat_error("zpoly divexact: degree mismatch");
        zpoly rem = *this;
        zpoly quo;
        quo.c_.assign(degree() - d.degree() + 1, mpz_class(0));
        for (int k = degree() - d.degree(); k >= 0; --k) {
            mpz_class top = rem.coeff(k + d.degree());
            if (top == 0) continue;
            mpz_class qc, qr;
            mpz_tdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
            if (qr != 0) throw qrat_error("zpoly divexact: inexact leading division");
            quo.c_[k] = qc;
            for (int m = 0; m <= d.degree(); ++m) rem.c_[k + m] -= qc * d.coeff(m);
        }
        rem.trim();
        if (!rem.is_zero()) throw qrat_error("zpoly divexact: nonzero remainder");
        quo.trim();
        return quo;
    }

    // Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a  mod b.
    static zpoly prem(zpoly a, const zpoly &b) {
        if (b.is_zero()) throw qrat_error("prem by zero");
        const mpz_class &lb = b.leading();
        int db = b.degree();
        while (!a.is_zero() && a.degree() >= db) {
            int shift = a.degree() - db;
            mpz_class la = a.leading();
            zpoly t;
            t.c_.assign(a.c_.size(), mpz_class(0));
            for (size_t k = 0; k < a.c_.size(); ++k) t.c_[k] = a.c_[k] * lb;
            for (int m = 0; m <= db; ++m) t.c_[shift + m] -= la * b.coeff(m);
            t.trim();
            a = t;
        }
        return a;
    }

    // Full integer-polynomial gcd (content included), leading coefficient positive.
    static zpoly gcd(zpoly a, zpoly b) {
        if (a.is_zero()) return b.positive_leading();
        if (b.is_zero()) return a.positive_leading();
        mpz_class ca = a.content(), cb = b.content(), cg;
        mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        a = a.div_content(ca);
        b = b.div_content(cb);
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            zpoly r = prem(a, b);
            a = b;
            b = r.primitive_part();
        }
        zpoly g = a.positive_leading();
        for (auto &c : g.c_) c *= cg;
        return g;
    }

    mpq_class eval(const mpq_class &t) const {
        mpq_class r(0);
        for (size_t k = c_.size(); k-- > 0;) r = r * t + mpq_class(c_[k]);
        r.canonicalize();
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const mpz_class &c = c_[k];
            if (c == 0) continue;
            mpz_class a = abs(c);
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += (c < 0) ? " - " : " + ";
            }
            bool unit = (a == 1);
            if (k == 0) {
                out += a.get_str();
            } else {
                if (!unit) out += a.get_str() + "*";
                out += "q";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

  private:
    std::vector<mpz_class> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    zpoly positive_leading() const {
        if (!is_zero() && leading() < 0) return -*this;
        return *this;
    }
    zpoly div_content(const mpz_class &c) const {
        zpoly r = *this;
        for (auto &x : r.c_) {
            mpz_class qd, qr;
            mpz_tdiv_qr(qd.get_mpz_t(), qr.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            x = qd;
        }
        return r;
    }

  public:
    zpoly primitive_part() const {
        if (is_zero()) return zpoly();
        mpz_class c = content();
        if (leading() < 0) c = -c;
        return div_content(c);
    }
};

// Element of the rational-function field Q(q), kept in canonical form:
// gcd(num, den) = 1 over Z[q] and the denominator has positive leading coefficient.
class qrat {
  public:
    qrat() : num_(), den_(zpoly::one()) {}
    qrat(int v) : num_(mpz_class(v)), den_(zpoly::one()) {}  // NOLINT: implicit by design
    explicit qrat(const mpz_class &v) : num_(v), den_(zpoly::one()) {}
    explicit qrat(const mpq_class &v)
        : num_(v.get_num()), den_(v.get_den()) {}
    qrat(zpoly num, zpoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static qrat q_pow(long k) {
        if (k >= 0) return qrat(zpoly::monomial(1, static_cast<int>(k)), zpoly::one());
        return qrat(zpoly::one(), zpoly::monomial(1, static_cast<int>(-k)));
    }
    static qrat q() { return q_pow(1); }

    const zpoly &num() const { return num_; }
    const zpoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend qrat operator+(const qrat &a, const qrat &b) {
        return qrat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend qrat operator-(const qrat &a, const qrat &b) {
        return qrat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend qrat operator-(const qrat &a) {
        qrat r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend qrat operator*(const qrat &a, const qrat &b) {
        return qrat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend qrat operator/(const qrat &a, const qrat &b) {
        if (b.is_zero()) throw qrat_error("qrat division by zero");
        return qrat(a.num_ * b.den_, a.den_ * b.num_);
    }
    qrat &operator+=(const qrat &o) { return *this = *this + o; }
    qrat &operator-=(const qrat &o) { return *this = *this - o; }
    qrat &operator*=(const qrat &o) { return *this = *this * o; }
    qrat &operator/=(const qrat &o) { return *this = *this / o; }

    qrat inverse() const {
        if (is_zero()) throw qrat_error("qrat inverse of zero");
        return qrat(den_, num_);
    }
    qrat pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        qrat r = 1, base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const qrat &a, const qrat &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const qrat &a, const qrat &b) { return !(a == b); }
    friend bool operator<(const qrat &a, const qrat &b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    // Exact evaluation at a rational point; throws on a pole.
    mpq_class eval_at(const mpq_class &t) const {
        mpq_class d = den_.eval(t);
        if (d == 0) throw qrat_error("qrat eval_at: pole at t = " + t.get_str());
        mpq_class r = num_.eval(t) / d;
        r.canonicalize();
        return r;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    zpoly num_, den_;

    void normalize() {
        if (den_.is_zero()) throw qrat_error("qrat with zero denominator");
        if (num_.is_zero()) {
            den_ = zpoly::one();
            return;
        }
        zpoly g = zpoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

// q - q^-1, ubiquitous below.
inline qrat q_minus_qinv() { return qrat::q_pow(1) - qrat::q_pow(-1); }

namespace detail {

class qrat_parser {
  public:
    explicit qrat_parser(std::string_view s) : s_(s) {}

    qrat parse() {
        zpoly num = parse_poly();
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            zpoly den = parse_poly();
            skip_ws();
            if (!eof()) throw qrat_error("qrat parse: trailing input");
            return qrat(num, den);
        }
        if (!eof()) throw qrat_error("qrat parse: trailing input");
        return qrat(num, zpoly::one());
    }

  private:
    std::string_view s_;
    size_t pos_ = 0;

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    zpoly parse_poly() {
        skip_ws();
        bool paren = false;
        if (!eof() && peek() == '(') {
            paren = true;
            ++pos_;
        }
        zpoly acc;
        int sign = 1;
        bool expect_term = true;
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == ')') {
                if (!paren) throw qrat_error("qrat parse: unexpected ')'");
                ++pos_;
                paren = false;
                break;
            }
            if (c == '+' || c == '-') {
                sign = (c == '-') ? -sign : sign;
                ++pos_;
                expect_term = true;
                continue;
            }
            if (c == '/' && !paren) break;
            if (!expect_term) throw qrat_error("qrat parse: expected operator");
            acc = acc + parse_term(sign);
            sign = 1;
            expect_term = false;
        }
        if (paren) throw qrat_error("qrat parse: missing ')'");
        return acc;
    }

    zpoly parse_term(int sign) {
        skip_ws();
        mpz_class coeff(1);
        bool has_coeff = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_int();
            has_coeff = true;
        }
        skip_ws();
        if (!eof() && peek() == '*') {
            ++pos_;
            skip_ws();
        }
        int expo = 0;
        if (!eof() && peek() == 'q') {
            ++pos_;
            expo = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                skip_ws();
                expo = static_cast<int>(parse_int().get_si());
            }
        } else if (!has_coeff) {
            throw qrat_error("qrat parse: expected term");
        }
        if (sign < 0) coeff = -coeff;
        return zpoly::monomial(coeff, expo);
    }

    mpz_class parse_int() {
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw qrat_error("qrat parse: expected integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
    }
};

}  // namespace detail

// Parses the format produced by qrat::str(): "3*q^2 - 1" or "(p) / (r)".
inline qrat parse_qrat(std::string_view s) { return detail::qrat_parser(s).parse(); }

}  // namespace qrll
