#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxeuler {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Dense univariate polynomial in t with exact rational coefficients.
// coeffs_[k] is the coefficient of t^k; the highest stored coefficient is
// nonzero, and the zero polynomial stores an empty vector.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(const Rat& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }
    explicit Polynomial(long constant) : Polynomial(Rat(constant)) {}
    explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial from_ints(std::initializer_list<long> coeffs) {
        std::vector<Rat> c;
        c.reserve(coeffs.size());
        for (long v : coeffs) c.emplace_back(v);
        return Polynomial(std::move(c));
    }

    static Polynomial from_decimal_strings(const std::vector<std::string>& coeffs) {
        std::vector<Rat> c;
        c.reserve(coeffs.size());
        for (const std::string& s : coeffs) c.emplace_back(Int(s));
        return Polynomial(std::move(c));
    }

    // c * t^k
    static Polynomial monomial(int k, const Rat& c = Rat(1)) {
        if (k < 0) throw std::invalid_argument("monomial: negative exponent");
        if (c == 0) return Polynomial();
        std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
        v.back() = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Rat coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(coeffs_.size())) return Rat(0);
        return coeffs_[static_cast<size_t>(k)];
    }

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (Rat& c : r.coeffs_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(prod));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Rat& s, const Polynomial& p) {
        if (s == 0) return Polynomial();
        Polynomial r = p;
        for (Rat& c : r.coeffs_) c *= s;
        return r;
    }
    friend Polynomial operator*(const Polynomial& p, const Rat& s) { return s * p; }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<Rat> d(coeffs_.size() - 1);
        for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rat(static_cast<long>(k)) * coeffs_[k];
        return Polynomial(std::move(d));
    }

    // t^n * p(1/t): coefficient of t^k in the result is coeff(n-k) of p.
    Polynomial reverse(long n) const {
        if (n < degree()) throw std::invalid_argument("reverse: n below degree");
        std::vector<Rat> r(static_cast<size_t>(n) + 1, Rat(0));
        for (size_t k = 0; k < coeffs_.size(); ++k) r[static_cast<size_t>(n) - k] = coeffs_[k];
        return Polynomial(std::move(r));
    }

    // p / t^a; the a lowest coefficients must vanish.
    Polynomial exact_div_t(long a) const {
        if (a < 0) throw std::invalid_argument("exact_div_t: negative power");
        if (a == 0) return *this;
        if (is_zero()) return Polynomial();
        for (long k = 0; k < a; ++k)
            if (coeff(k) != 0) throw std::domain_error("exact_div_t: inexact division");
        if (static_cast<long>(coeffs_.size()) <= a) return Polynomial();
        return Polynomial(std::vector<Rat>(coeffs_.begin() + a, coeffs_.end()));
    }

    // p * t^a
    Polynomial mul_t(long a) const {
        if (a < 0) throw std::invalid_argument("mul_t: negative power");
        if (is_zero() || a == 0) return *this;
        std::vector<Rat> r(static_cast<size_t>(a), Rat(0));
        r.insert(r.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
        return acc;
    }

    bool is_integral() const {
        for (const Rat& c : coeffs_)
            if (c.get_den() != 1) return false;
        return true;
    }

    // Coefficients 0..degree as decimal strings; requires integral coefficients.
    std::vector<std::string> to_decimal_strings() const {
        std::vector<std::string> out;
        if (is_zero()) {
            out.push_back("0");
            return out;
        }
        out.reserve(coeffs_.size());
        for (const Rat& c : coeffs_) {
            if (c.get_den() != 1) throw std::domain_error("to_decimal_strings: non-integer coefficient");
            out.push_back(c.get_num().get_str());
        }
        return out;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            const Rat& c = coeffs_[k];
            if (c == 0) continue;
            Rat a = abs(c);
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += (c < 0) ? " - " : " + ";
            }
            bool unit = (a == 1) && k > 0;
            if (!unit) out += a.get_str();
            if (k >= 1) out += "t";
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

    // Division with remainder over the rationals: a = q*b + r, deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
        Polynomial r = a;
        std::vector<Rat> q;
        long db = b.degree();
        if (r.degree() >= db) q.assign(static_cast<size_t>(r.degree() - db) + 1, Rat(0));
        const Rat& lead = b.coeffs_.back();
        while (!r.is_zero() && r.degree() >= db) {
            long shift = r.degree() - db;
            Rat f = r.coeffs_.back() / lead;
            q[static_cast<size_t>(shift)] = f;
            for (long k = 0; k <= db; ++k)
                r.coeffs_[static_cast<size_t>(k + shift)] -= f * b.coeffs_[static_cast<size_t>(k)];
            r.trim();
        }
        return {Polynomial(std::move(q)), std::move(r)};
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

inline Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }
inline Polynomial poly_reverse(const Polynomial& p, long n) { return p.reverse(n); }
inline Polynomial poly_exact_div_t(const Polynomial& p, long a) { return p.exact_div_t(a); }

}  // namespace coxeuler
