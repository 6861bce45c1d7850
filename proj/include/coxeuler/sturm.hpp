#pragma once

#include <stdexcept>
#include <vector>

#include "coxeuler/polynomial.hpp"

namespace coxeuler {

struct SturmResult {
    long distinct_real_roots = 0;
    long degree_of_squarefree_part = 0;
    bool all_real = false;  // distinct_real_roots == degree_of_squarefree_part
};

// Monic gcd over the rationals.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = Polynomial::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rat inv_lead = Rat(1) / a.coeffs().back();
    return a * inv_lead;
}

inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    Polynomial g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    auto [q, r] = Polynomial::divmod(p, g);
    if (!r.is_zero()) throw std::logic_error("squarefree_part: inexact division by gcd");
    return q;
}

namespace detail {

inline int sign_of(const Rat& x) { return sgn(x); }

// Sign variations in a sequence of nonzero signs.
inline long variations(const std::vector<int>& signs) {
    long v = 0;
    for (size_t i = 1; i < signs.size(); ++i)
        if (signs[i] != signs[i - 1]) ++v;
    return v;
}

}  // namespace detail

// Distinct real roots of p, by Sturm's theorem on the square-free part of p
// over the whole line.  The signs at -inf/+inf come from leading coefficients
// alone; every step of the remainder chain is exact rational arithmetic.
inline SturmResult sturm_real_root_count(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_real_root_count: zero polynomial");

    Polynomial q = squarefree_part(p);
    SturmResult res;
    res.degree_of_squarefree_part = q.degree();
    if (q.degree() == 0) {
        res.distinct_real_roots = 0;
        res.all_real = true;
        return res;
    }

    // Signed remainder chain, each element scaled by a positive constant
    // (1/|lead|) to keep coefficients small; positive scaling preserves the
    // sign-variation count.
    std::vector<Polynomial> chain;
    chain.push_back(q);
    chain.push_back(q.derivative());
    while (!chain.back().is_zero()) {
        const Polynomial& a = chain[chain.size() - 2];
        const Polynomial& b = chain.back();
        Polynomial r = -Polynomial::divmod(a, b).second;
        if (!r.is_zero()) {
            Rat abs_lead = abs(r.coeffs().back());
            Rat inv = Rat(1) / abs_lead;
            r = r * inv;
        }
        chain.push_back(std::move(r));
    }
    chain.pop_back();  // drop the final zero

    std::vector<int> at_pos, at_neg;
    for (const Polynomial& f : chain) {
        int lead = detail::sign_of(f.coeffs().back());
        at_pos.push_back(lead);
        at_neg.push_back(f.degree() % 2 == 0 ? lead : -lead);
    }

    res.distinct_real_roots = detail::variations(at_neg) - detail::variations(at_pos);
    res.all_real = res.distinct_real_roots == res.degree_of_squarefree_part;
    return res;
}

}  // namespace coxeuler
