#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coxeuler/descent_tables.hpp"
#include "coxeuler/polynomial.hpp"

namespace coxeuler {

// Two published transcriptions of the late recurrences differ in one sign
// and one factor; both are kept callable so the discrepancy stays
// demonstrable.  `corrected` is the form that matches the exhaustive census.
enum class Form { corrected, printed };

enum class Method { partition, theorem };

struct EulerianLadder {
    Family family = Family::D;
    std::vector<Polynomial> rows;  // indexed by rank from 0
};

namespace detail {

inline Rat g(const Polynomial& p, long k) { return p.coeff(k); }

inline const Polynomial& t_poly() {
    static const Polynomial t = Polynomial::monomial(1);
    return t;
}

inline const Polynomial& one_minus_t() {
    static const Polynomial p = Polynomial::from_ints({1, -1});
    return p;
}

}  // namespace detail

// The rank-2 base row (t, t^2, 1, t), taken from the four-element census so
// no table constant lives inside the library.
inline SubTableRow base_sub_row() { return brute_force_sub_row(2); }

// Coefficient-wise recurrence: rank prev.n+1 sub-Eulerian numbers from the
// rank prev.n ones.  Out-of-range lookups contribute zero.
inline SubTableRow sub_numbers_step(const SubTableRow& prev) {
    if (prev.n < 2) throw std::invalid_argument("sub_numbers_step: rank below 2");
    const long n = prev.n + 1;
    using detail::g;
    const Polynomial &p1 = prev.p1, &p01 = prev.p01, &pge2 = prev.pge2, &p0ge2 = prev.p0ge2;

    std::vector<Rat> c1(static_cast<size_t>(n) + 1), c01(static_cast<size_t>(n) + 1),
        cge2(static_cast<size_t>(n) + 1), c0ge2(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        c1[static_cast<size_t>(k)] = Rat(2 * k - 1) * g(p1, k) + Rat(2 * (n - k)) * g(p1, k - 1) +
                                     g(p01, k) + g(pge2, k - 1) + g(p0ge2, k);
        c01[static_cast<size_t>(k)] = Rat(2 * k - 2) * g(p01, k) + Rat(2 * n - 2 * k + 1) * g(p01, k - 1) +
                                      g(p1, k - 1) + g(pge2, k - 2) + g(p0ge2, k - 1);
        cge2[static_cast<size_t>(k)] = Rat(2 * k + 1) * g(pge2, k) + Rat(2 * (n - k - 1)) * g(pge2, k - 1) +
                                       g(p1, k) + g(p01, k + 1) + g(p0ge2, k);
        c0ge2[static_cast<size_t>(k)] = Rat(2 * k) * g(p0ge2, k) + Rat(2 * n - 2 * k - 1) * g(p0ge2, k - 1) +
                                        g(p1, k - 1) + g(p01, k) + g(pge2, k - 1);
    }
    SubTableRow next;
    next.n = prev.n + 1;
    next.p1 = Polynomial(std::move(c1));
    next.p01 = Polynomial(std::move(c01));
    next.pge2 = Polynomial(std::move(cge2));
    next.p0ge2 = Polynomial(std::move(c0ge2));
    return next;
}

// Difference-differential recurrence: the same step at polynomial level,
// using derivatives and one exact division by t.
inline SubTableRow sub_polys_step(const SubTableRow& prev) {
    if (prev.n < 2) throw std::invalid_argument("sub_polys_step: rank below 2");
    const long n = prev.n + 1;
    const Polynomial& t = detail::t_poly();
    const Polynomial tt = Rat(2) * t * detail::one_minus_t();  // 2t(1-t)
    const Polynomial &a = prev.p1, &b = prev.p01, &c = prev.pge2, &d = prev.p0ge2;

    SubTableRow next;
    next.n = prev.n + 1;
    next.p1 = (Rat(2 * (n - 1)) * t - Polynomial(1)) * a + tt * a.derivative() + b + t * c + d;
    next.p01 = (Rat(2 * n - 1) * t - Polynomial(2)) * b + tt * b.derivative() + t * a + t * t * c + t * d;
    next.pge2 = (Rat(2 * (n - 2)) * t + Polynomial(1)) * c + tt * c.derivative() + a + b.exact_div_t(1) + d;
    next.p0ge2 = Rat(2 * n - 3) * t * d + tt * d.derivative() + t * a + b + t * c;
    return next;
}

// One ladder step for the classical families: rank n from rank n-1.
inline Polynomial eulerian_step(Family family, const Polynomial& prev, int n) {
    if (n < 1) throw std::invalid_argument("eulerian_step: rank below 1");
    const Polynomial& t = detail::t_poly();
    const Polynomial tv = t * detail::one_minus_t();  // t(1-t)
    if (family == Family::A)
        return (Rat(n - 1) * t + Polynomial(1)) * prev + tv * prev.derivative();
    if (family == Family::B)
        return (Rat(2 * n - 1) * t + Polynomial(1)) * prev + Rat(2) * tv * prev.derivative();
    throw std::invalid_argument("eulerian_step: family must be A or B");
}

// Rank row.n+1 Eulerian polynomial from the class partition, in the compact
// form: the type-B step plus the (1-t)[p01/t - t*pge2] correction.
inline Polynomial d_poly_via_partition(const SubTableRow& row) {
    if (row.n < 2) throw std::invalid_argument("d_poly_via_partition: rank below 2");
    const long n = row.n + 1;
    const Polynomial& t = detail::t_poly();
    const Polynomial prev = row.eulerian();
    Polynomial out = (Rat(2 * n - 1) * t + Polynomial(1)) * prev +
                     Rat(2) * t * detail::one_minus_t() * prev.derivative();
    out += detail::one_minus_t() * (row.p01.exact_div_t(1) - t * row.pge2);
    return out;
}

// The same rank row.n+1 polynomial as the explicit sum over the class
// partition; kept as a cross-check against the compact form.
inline Polynomial d_poly_via_class_sum(const SubTableRow& row) {
    if (row.n < 2) throw std::invalid_argument("d_poly_via_class_sum: rank below 2");
    const long n = row.n + 1;
    const Polynomial& t = detail::t_poly();
    const Polynomial& omt = detail::one_minus_t();
    const Polynomial prev = row.eulerian();
    Polynomial out = Rat(2 * n) * t * prev + Rat(2) * t * omt * prev.derivative();
    out += row.p01.exact_div_t(1) - t * row.p01;  // (1/t - t) * p01
    out += omt * omt * row.pge2;
    out += Rat(2) * omt * row.p0ge2;
    return out;
}

// Rank n+2 Eulerian polynomial from the three previous rows, via the
// derivative-only eight-term recurrence.  Form::corrected flips the sign of
// the 4n(n-1)(n-2)t^2(1+t) part to plus, which is what the census demands
// (and what the recurrence's own derivation display carries); the printed
// transcription has minus there and is kept for demonstration.
inline Polynomial d_poly_via_theorem(const Polynomial& d_np1, const Polynomial& d_n,
                                     const Polynomial& d_nm1, int n, Form form = Form::corrected) {
    if (n < 1) throw std::invalid_argument("d_poly_via_theorem: n below 1");
    const long N = n;
    const long sg = form == Form::corrected ? 1 : -1;
    const Polynomial& t = detail::t_poly();
    const Polynomial& omt = detail::one_minus_t();
    const Polynomial omt2 = omt * omt;

    const Polynomial c1 = Rat(N) * Polynomial::from_ints({1, 5}) + Polynomial::from_ints({0, 4});
    const Polynomial c2 = Rat(4) * t * omt;
    const Polynomial c3 = omt2 - Rat(N) * Polynomial::from_ints({1, 3}) * Polynomial::from_ints({1, 3}) -
                          Rat(4 * N * (N - 1)) * t * Polynomial::from_ints({1, 2});
    const Polynomial c4 =
        -(Rat(4 * N) * t * omt * Polynomial::from_ints({1, 3}) + Rat(4) * t * omt2);
    const Polynomial c5 = -(Rat(4) * t * t * omt2);
    const Polynomial c6 = Rat(2 * N * (N - 1)) * t * Polynomial::from_ints({3, 2, 3}) +
                          Rat(sg * 4 * N * (N - 1) * (N - 2)) * t * t * Polynomial::from_ints({1, 1});
    const Polynomial c7 = Rat(2 * N) * t * omt2 * Polynomial::from_ints({3, 1}) +
                          Rat(8 * N * (N - 1)) * t * t * omt * Polynomial::from_ints({1, 1});
    const Polynomial c8 = Rat(4 * N) * t * t * omt2 * Polynomial::from_ints({1, 1});

    return c1 * d_np1 + c2 * d_np1.derivative() + c3 * d_n + c4 * d_n.derivative() +
           c5 * d_n.derivative().derivative() + c6 * d_nm1 + c7 * d_nm1.derivative() +
           c8 * d_nm1.derivative().derivative();
}

// One Eulerian number of rank n+2 from the three previous coefficient rows,
// via the nine-term coefficient recurrence.  Form::corrected restores the
// factor k on the -4(1+n) part of the D_{n,k} bracket; the printed
// transcription lacks it and is kept for demonstration.
inline Int d_numbers_via_corollary(const Polynomial& d_np1, const Polynomial& d_n,
                                   const Polynomial& d_nm1, int n, long k,
                                   Form form = Form::corrected) {
    if (n < 1) throw std::invalid_argument("d_numbers_via_corollary: n below 1");
    if (k < 0 || k > n + 2) throw std::invalid_argument("d_numbers_via_corollary: k out of range");
    using detail::g;
    const long N = n;
    const long k_factor = form == Form::corrected ? k : 1;

    Rat acc(0);
    acc += Rat(N + 4 * k) * g(d_np1, k);
    acc += Rat(5 * N - 4 * k + 8) * g(d_np1, k - 1);
    acc += Rat((1 - N) - 4 * (1 + N) * k_factor - 4 * k * (k - 1)) * g(d_n, k);
    acc += Rat(-2 * (1 + N + 2 * N * N) + 8 * (1 - N) * (k - 1) + 8 * (k - 1) * (k - 2)) * g(d_n, k - 1);
    acc += Rat((1 - N - 8 * N * N) - 4 * (1 - 3 * N) * (k - 2) - 4 * (k - 2) * (k - 3)) * g(d_n, k - 2);
    acc += Rat(6 * N * k + 4 * N * k * (k - 1)) * g(d_nm1, k);
    acc += Rat(6 * N * (N - 1) + 2 * N * (4 * N - 9) * (k - 1) - 4 * N * (k - 1) * (k - 2)) * g(d_nm1, k - 1);
    acc += Rat(4 * N * (N - 1) * (N - 1) + 2 * N * (k - 2) - 4 * N * (k - 2) * (k - 3)) * g(d_nm1, k - 2);
    acc += Rat(2 * N * (1 - 3 * N + 2 * N * N) + 2 * N * (5 - 4 * N) * (k - 3) + 4 * N * (k - 3) * (k - 4)) *
           g(d_nm1, k - 3);

    if (acc.get_den() != 1) throw std::logic_error("d_numbers_via_corollary: non-integer result");
    return acc.get_num();
}

// Chain of sub-Eulerian rows 2..max_rank (vector indexed by rank; slots 0
// and 1 are empty placeholders).
inline std::vector<SubTableRow> build_sub_ladder(int max_rank, bool via_numbers = false) {
    if (max_rank < 2) throw std::invalid_argument("build_sub_ladder: max_rank below 2");
    std::vector<SubTableRow> rows(static_cast<size_t>(max_rank) + 1);
    rows[2] = base_sub_row();
    for (int r = 3; r <= max_rank; ++r)
        rows[static_cast<size_t>(r)] =
            via_numbers ? sub_numbers_step(rows[static_cast<size_t>(r - 1)]) : sub_polys_step(rows[static_cast<size_t>(r - 1)]);
    return rows;
}

inline EulerianLadder build_ladder(Family family, int max_rank, Method method = Method::partition) {
    if (max_rank < 0) throw std::invalid_argument("build_ladder: negative max_rank");
    if (family == Family::B_minus_D) throw std::invalid_argument("build_ladder: family must be A, B or D");
    EulerianLadder ladder;
    ladder.family = family;
    ladder.rows.assign(static_cast<size_t>(max_rank) + 1, Polynomial(1));
    if (family != Family::D) {
        for (int n = 1; n <= max_rank; ++n)
            ladder.rows[static_cast<size_t>(n)] = eulerian_step(family, ladder.rows[static_cast<size_t>(n - 1)], n);
        return ladder;
    }
    if (max_rank < 2) return ladder;  // ranks 0 and 1 are the constant 1
    SubTableRow sub = base_sub_row();
    ladder.rows[2] = sub.eulerian();
    if (method == Method::partition) {
        for (int r = 3; r <= max_rank; ++r) {
            ladder.rows[static_cast<size_t>(r)] = d_poly_via_partition(sub);
            sub = sub_polys_step(sub);
        }
    } else {
        for (int r = 3; r <= max_rank; ++r)
            ladder.rows[static_cast<size_t>(r)] =
                d_poly_via_theorem(ladder.rows[static_cast<size_t>(r - 1)], ladder.rows[static_cast<size_t>(r - 2)],
                                   ladder.rows[static_cast<size_t>(r - 3)], r - 2);
    }
    return ladder;
}

struct RankDivergence {
    int rank = 0;
    long power = 0;
    Int printed;
    Int truth;
};

// First rank/power where the printed eight-term transcription disagrees with
// the verified ladder, feeding it verified history rows at every step.
inline std::optional<RankDivergence> theorem_printed_first_divergence(int max_rank) {
    EulerianLadder truth = build_ladder(Family::D, max_rank, Method::partition);
    for (int r = 3; r <= max_rank; ++r) {
        Polynomial printed =
            d_poly_via_theorem(truth.rows[static_cast<size_t>(r - 1)], truth.rows[static_cast<size_t>(r - 2)],
                               truth.rows[static_cast<size_t>(r - 3)], r - 2, Form::printed);
        const Polynomial& want = truth.rows[static_cast<size_t>(r)];
        if (printed == want) continue;
        long deg = std::max(printed.degree(), want.degree());
        for (long k = 0; k <= deg; ++k)
            if (printed.coeff(k) != want.coeff(k))
                return RankDivergence{r, k, printed.coeff(k).get_num(), want.coeff(k).get_num()};
    }
    return std::nullopt;
}

struct CoefficientDivergence {
    int n = 0;
    long k = 0;
    Int printed;
    Int truth;
};

// First (n, k) in lexicographic order, scanning the descent range k >= 1,
// where the printed nine-term transcription disagrees with the ladder.  The
// k = 0 column is excluded here because the printed bracket is off by the
// constant -4(1+n) at every single rank there (see the errata suite, which
// checks that column separately).
inline std::optional<CoefficientDivergence> corollary_printed_first_divergence(int max_n) {
    EulerianLadder truth = build_ladder(Family::D, max_n + 2, Method::partition);
    for (int n = 1; n <= max_n; ++n) {
        for (long k = 1; k <= n + 2; ++k) {
            Int printed = d_numbers_via_corollary(truth.rows[static_cast<size_t>(n + 1)],
                                                  truth.rows[static_cast<size_t>(n)],
                                                  truth.rows[static_cast<size_t>(n - 1)], n, k, Form::printed);
            Rat want = truth.rows[static_cast<size_t>(n + 2)].coeff(k);
            if (Rat(printed) != want) return CoefficientDivergence{n, k, printed, want.get_num()};
        }
    }
    return std::nullopt;
}

}  // namespace coxeuler
