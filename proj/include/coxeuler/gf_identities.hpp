#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxeuler/check_report.hpp"
#include "coxeuler/descent_tables.hpp"
#include "coxeuler/recurrences.hpp"
#include "coxeuler/series.hpp"

namespace coxeuler {

enum class GfKind { sub1, sub01, subge2, sub0ge2, D, A, B };

// The ten series identities checked at truncation order: the four class-wise
// first-order PDEs, the classical type A and B PDEs, the two closed forms of
// the operator images of the full EGF, the expansion of the squared
// operator, and the second-order PDE the full EGF satisfies.
enum class PdeKind {
    sub1,
    sub01,
    subge2,
    sub0ge2,
    type_a,
    type_b,
    operator_image,
    operator_square_image,
    operator_expansion,
    second_order
};

enum class WorpitzkyKind { sub0ge2, subge2, sub01 };

enum class Source { oracle, recurrence };

// Exponential generating functions of all the descent statistics, truncated
// at one common order: slot n stores P_n(t)/n!.
struct EgfBundle {
    int order = 0;
    TruncatedSeries s1{0}, s01{0}, sge2{0}, s0ge2{0}, sD{0}, sA{0}, sB{0};
};

inline const char* to_string(GfKind k) {
    switch (k) {
        case GfKind::sub1: return "sub1";
        case GfKind::sub01: return "sub01";
        case GfKind::subge2: return "subge2";
        case GfKind::sub0ge2: return "sub0ge2";
        case GfKind::D: return "D";
        case GfKind::A: return "A";
        case GfKind::B: return "B";
    }
    return "?";
}

inline const char* to_string(PdeKind k) {
    switch (k) {
        case PdeKind::sub1: return "sub1";
        case PdeKind::sub01: return "sub01";
        case PdeKind::subge2: return "subge2";
        case PdeKind::sub0ge2: return "sub0ge2";
        case PdeKind::type_a: return "type_a";
        case PdeKind::type_b: return "type_b";
        case PdeKind::operator_image: return "operator_image";
        case PdeKind::operator_square_image: return "operator_square_image";
        case PdeKind::operator_expansion: return "operator_expansion";
        case PdeKind::second_order: return "second_order";
    }
    return "?";
}

inline const char* to_string(WorpitzkyKind k) {
    switch (k) {
        case WorpitzkyKind::sub0ge2: return "sub0ge2";
        case WorpitzkyKind::subge2: return "subge2";
        case WorpitzkyKind::sub01: return "sub01";
    }
    return "?";
}

namespace detail {

inline Rat inv_factorial(int n) { return Rat(Int(1), factorial(static_cast<unsigned long>(n))); }

inline CheckReport compare_series(const std::string& context, const TruncatedSeries& lhs,
                                  const TruncatedSeries& rhs) {
    auto mismatch = first_mismatch(lhs, rhs);
    if (!mismatch) return CheckReport::pass(context);
    return CheckReport::fail(context,
                             "slot " + std::to_string(mismatch->slot) + ", t^" + std::to_string(mismatch->power),
                             mismatch->rhs.get_str(), mismatch->lhs.get_str());
}

// 2t(t-1) d/dt + (1-2xt) d/dx, the operator every class series is fed to.
inline TruncatedSeries class_operator(const TruncatedSeries& s) {
    const Polynomial two_t_tm1 = Polynomial::from_ints({0, -2, 2});  // 2t(t-1)
    TruncatedSeries dx = s.partial_x();
    return s.partial_t().scale(two_t_tm1) + dx - dx.mul_x().scale(Polynomial::from_ints({0, 2}));
}

}  // namespace detail

// All EGFs at the given truncation order.  Source oracle fills slots up to
// the enumeration bound by exhaustive census and continues with the
// recurrences; source recurrence uses the recurrences throughout.
inline EgfBundle build_bundle(int order, Source source) {
    if (order < 0) throw std::invalid_argument("build_bundle: negative order");
    const int oracle_top = std::min(order, 8);

    EgfBundle b;
    b.order = order;
    b.s1 = TruncatedSeries(order);
    b.s01 = TruncatedSeries(order);
    b.sge2 = TruncatedSeries(order);
    b.s0ge2 = TruncatedSeries(order);
    b.sD = TruncatedSeries(order);
    b.sA = TruncatedSeries(order);
    b.sB = TruncatedSeries(order);

    // Sub-Eulerian rows exist from rank 2; ranks 0 and 1 contribute zero to
    // the class series and the constant 1 to the full series.
    if (order >= 2) {
        SubTableRow row;
        for (int n = 2; n <= order; ++n) {
            if (source == Source::oracle && n <= oracle_top)
                row = brute_force_sub_row(n);
            else
                row = n == 2 ? base_sub_row() : sub_polys_step(row);
            const Rat f = detail::inv_factorial(n);
            b.s1.set_slot(n, row.p1 * f);
            b.s01.set_slot(n, row.p01 * f);
            b.sge2.set_slot(n, row.pge2 * f);
            b.s0ge2.set_slot(n, row.p0ge2 * f);
            b.sD.set_slot(n, row.eulerian() * f);
        }
    }
    b.sD.set_slot(0, Polynomial(1));
    if (order >= 1) b.sD.set_slot(1, Polynomial(1));

    Polynomial a_row(1), b_row(1);
    b.sA.set_slot(0, a_row);
    b.sB.set_slot(0, b_row);
    for (int n = 1; n <= order; ++n) {
        if (source == Source::oracle && n <= oracle_top) {
            a_row = brute_force_eulerian(n, Family::A);
            b_row = brute_force_eulerian(n, Family::B);
        } else {
            a_row = eulerian_step(Family::A, a_row, n);
            b_row = eulerian_step(Family::B, b_row, n);
        }
        const Rat f = detail::inv_factorial(n);
        b.sA.set_slot(n, a_row * f);
        b.sB.set_slot(n, b_row * f);
    }
    return b;
}

// Denominator-cleared closed-form check: the rational closed form N/Q for
// the chosen series S is verified as Q*S = N in truncated arithmetic.
inline CheckReport check_closed_form(GfKind kind, const EgfBundle& bundle) {
    const int N = bundle.order;
    const std::string ctx = std::string("closed form: ") + to_string(kind);
    const Polynomial t = Polynomial::monomial(1);
    const Polynomial omt = Polynomial::from_ints({1, -1});  // 1-t
    const TruncatedSeries one = TruncatedSeries::constant(Polynomial(1), N);
    const TruncatedSeries x = TruncatedSeries::x(N);
    const TruncatedSeries E = exp_linear(omt, N);
    const TruncatedSeries E2 = exp_linear(Rat(2) * omt, N);
    const TruncatedSeries qD = one - E2.scale(t);  // 1 - t e^{2x(1-t)}
    const TruncatedSeries qA = one - E.scale(t);   // 1 - t e^{x(1-t)}

    TruncatedSeries lhs(N), rhs(N);
    switch (kind) {
        case GfKind::sub1:
        case GfKind::sub0ge2: {
            const TruncatedSeries& s = kind == GfKind::sub1 ? bundle.s1 : bundle.s0ge2;
            lhs = (qD * s).scale(Rat(2) * omt);
            TruncatedSeries em1 = E - one;
            rhs = (em1 * em1).scale(t);
            break;
        }
        case GfKind::subge2:
            lhs = (qD * bundle.sge2).scale(omt);
            rhs = E - one - x.scale(omt);
            break;
        case GfKind::sub01:
            lhs = (qD * bundle.s01).scale(omt);
            rhs = E.scale(t * t) - ((one - x.scale(omt)) * E2).scale(t * t);
            break;
        case GfKind::D:
            lhs = qD * bundle.sD;
            rhs = E.scale(omt) - (x * E2).scale(t * omt);
            break;
        case GfKind::A:
            lhs = qA * bundle.sA;
            rhs = E.scale(omt);
            break;
        case GfKind::B:
            lhs = qD * bundle.sB;
            rhs = E.scale(omt);
            break;
    }
    return detail::compare_series(ctx, lhs, rhs);
}

// The ten series identities, verified slotwise on trustworthy slots.
inline CheckReport check_pde(PdeKind kind, const EgfBundle& bundle) {
    const int N = bundle.order;
    const std::string ctx = std::string("series identity: ") + to_string(kind);
    const Polynomial t = Polynomial::monomial(1);
    const Polynomial omt = Polynomial::from_ints({1, -1});
    const Polynomial opt = Polynomial::from_ints({1, 1});  // 1+t
    const TruncatedSeries one = TruncatedSeries::constant(Polynomial(1), N);
    const TruncatedSeries x = TruncatedSeries::x(N);

    switch (kind) {
        case PdeKind::sub1: {
            TruncatedSeries lhs = detail::class_operator(bundle.s1);
            TruncatedSeries rhs =
                bundle.s01 + bundle.sge2.scale(t) + bundle.s0ge2 + x.scale(t) - bundle.s1;
            return detail::compare_series(ctx, lhs, rhs);
        }
        case PdeKind::sub01: {
            TruncatedSeries lhs = detail::class_operator(bundle.s01);
            TruncatedSeries rhs = bundle.s1.scale(t) + bundle.s01.scale(Polynomial::from_ints({-2, 1})) +
                                  bundle.sge2.scale(t * t) + bundle.s0ge2.scale(t) + x.scale(t * t);
            return detail::compare_series(ctx, lhs, rhs);
        }
        case PdeKind::subge2: {
            TruncatedSeries lhs = detail::class_operator(bundle.sge2);
            TruncatedSeries rhs = bundle.s1 + bundle.s01.div_t() +
                                  bundle.sge2.scale(Polynomial::from_ints({1, -2})) + bundle.s0ge2 + x;
            return detail::compare_series(ctx, lhs, rhs);
        }
        case PdeKind::sub0ge2: {
            TruncatedSeries lhs = detail::class_operator(bundle.s0ge2);
            TruncatedSeries rhs = bundle.s1.scale(t) + bundle.s01 + bundle.sge2.scale(t) -
                                  bundle.s0ge2.scale(t) + x.scale(t);
            return detail::compare_series(ctx, lhs, rhs);
        }
        case PdeKind::type_a: {
            TruncatedSeries dx = bundle.sA.partial_x();
            TruncatedSeries lhs = bundle.sA.partial_t().scale(Polynomial::from_ints({0, -1, 1})) + dx -
                                  dx.mul_x().scale(t);
            return detail::compare_series(ctx, lhs, bundle.sA);
        }
        case PdeKind::type_b: {
            TruncatedSeries lhs = detail::class_operator(bundle.sB);
            return detail::compare_series(ctx, lhs, bundle.sB.scale(opt));
        }
        case PdeKind::operator_image: {
            const TruncatedSeries E = exp_linear(omt, N);
            const TruncatedSeries E2 = exp_linear(Rat(2) * omt, N);
            TruncatedSeries lhs = (one - E2.scale(t)) * detail::class_operator(bundle.sD);
            TruncatedSeries rhs = E.scale(omt * opt) - E2.scale(omt * t);
            return detail::compare_series(ctx, lhs, rhs);
        }
        case PdeKind::operator_square_image: {
            const TruncatedSeries E = exp_linear(omt, N);
            const TruncatedSeries E2 = exp_linear(Rat(2) * omt, N);
            TruncatedSeries lhs =
                (one - E2.scale(t)) * detail::class_operator(detail::class_operator(bundle.sD));
            TruncatedSeries rhs =
                E.scale(omt * Polynomial::from_ints({1, 0, 3})) - E2.scale(Rat(2) * t * t * omt);
            return detail::compare_series(ctx, lhs, rhs);
        }
        case PdeKind::operator_expansion: {
            // The squared operator expanded into pure partials of the series.
            TruncatedSeries lhs = detail::class_operator(detail::class_operator(bundle.sD));
            TruncatedSeries dt = bundle.sD.partial_t();
            TruncatedSeries dx = bundle.sD.partial_x();
            TruncatedSeries dtt = dt.partial_t();
            TruncatedSeries dxt = dx.partial_t();
            TruncatedSeries dxx = dx.partial_x();
            const Polynomial t_omt = t * omt;
            TruncatedSeries rhs = dtt.scale(Rat(4) * t_omt * t_omt);
            rhs = rhs + dxt.mul_x().scale(Rat(8) * t * t_omt) - dxt.scale(Rat(4) * t_omt);
            rhs = rhs + dxx - dxx.mul_x().scale(Rat(4) * t) + dxx.mul_x().mul_x().scale(Rat(4) * t * t);
            rhs = rhs + dx.mul_x().scale(Rat(4) * t) - dx.scale(Rat(2) * t);
            rhs = rhs + dt.scale(Rat(4) * t_omt * Polynomial::from_ints({1, -2}));
            return detail::compare_series(ctx, lhs, rhs);
        }
        case PdeKind::second_order: {
            // Second-order PDE for the full EGF, all coefficients polynomial
            // in x and t; x-multiplications are realized by slot shifts.
            TruncatedSeries dt = bundle.sD.partial_t();
            TruncatedSeries dx = bundle.sD.partial_x();
            TruncatedSeries dtt = dt.partial_t();
            TruncatedSeries dxt = dx.partial_t();
            TruncatedSeries dxx = dx.partial_x();
            const Polynomial t_omt = t * omt;

            TruncatedSeries u1 = dtt.mul_x().scale(opt) - dtt;  // [x(1+t)-1] dtt
            TruncatedSeries term1 = u1.scale(Rat(4) * t_omt * t_omt);

            TruncatedSeries u2 = dxt.mul_x().scale(opt) - dxt;
            TruncatedSeries v2 = u2 - u2.mul_x().scale(Rat(2) * t);  // (1-2xt)[x(1+t)-1] dxt
            TruncatedSeries term2 = TruncatedSeries(N) - v2.scale(Rat(4) * t_omt);

            TruncatedSeries u3 = dxx.mul_x().scale(opt) - dxx;
            TruncatedSeries term3 =
                u3 - u3.mul_x().scale(Rat(4) * t) + u3.mul_x().mul_x().scale(Rat(4) * t * t);

            TruncatedSeries term4 =
                (dt.mul_x().scale(Polynomial::from_ints({3, 1})) - dt.scale(Rat(2))).scale(Rat(2) * t * omt * omt);

            TruncatedSeries term5 = dx.scale(Rat(4) * t) -
                                    dx.mul_x().scale(Polynomial::from_ints({1, 3}) * Polynomial::from_ints({1, 3})) +
                                    dx.mul_x().mul_x().scale(Rat(2) * t * Polynomial::from_ints({3, 2, 3}));

            TruncatedSeries term6 = bundle.sD.scale(omt * omt);

            TruncatedSeries lhs = term1 + term2 + term3 + term4 + term5 + term6;
            return detail::compare_series(ctx, lhs, TruncatedSeries(N));
        }
    }
    throw std::logic_error("check_pde: bad kind");
}

// Expansion of target/(t^v (1-t)^{n-1}) as an exact t-series, compared
// termwise against the closed per-power coefficient.  The rank-n rows come
// from the recurrence chain (equal to the census on the oracle range).
inline CheckReport check_worpitzky(WorpitzkyKind kind, int n, int t_degree, Form form = Form::corrected) {
    if (n < 2) throw std::invalid_argument("check_worpitzky: n below 2");
    if (t_degree < n + 2) throw std::invalid_argument("check_worpitzky: t_degree below n+2");
    std::string ctx = std::string("worpitzky: ") + to_string(kind) + " rank " + std::to_string(n) +
                      (form == Form::printed ? " (printed)" : "");

    const SubTableRow row = build_sub_ladder(n)[static_cast<size_t>(n)];
    const unsigned long un = static_cast<unsigned long>(n);

    // Divided-space expansion: q = target / t^v, then multiply the
    // coefficient stream by the binomial expansion of (1-t)^{-(n-1)}.
    auto expand = [&](const Polynomial& target, long v) {
        Polynomial q = target.exact_div_t(v);
        std::vector<Rat> series(static_cast<size_t>(t_degree) + 1, Rat(0));
        for (int j = 0; j <= t_degree; ++j) {
            Rat acc(0);
            for (long i = 0; i <= std::min<long>(j, q.degree()); ++i)
                acc += q.coeff(i) * Rat(binomial(un - 2 + static_cast<unsigned long>(j - i),
                                                 static_cast<unsigned long>(j - i)));
            series[static_cast<size_t>(j)] = acc;
        }
        return series;
    };

    auto closed = [&](long k) -> Int {
        const Int k1 = Int(k + 1), kk = Int(k), twok = Int(2 * k), twok1 = Int(2 * k + 1);
        switch (kind) {
            case WorpitzkyKind::sub0ge2:
                return int_pow(Int(2), un - 1) * (int_pow(k1, un) + int_pow(kk, un)) - int_pow(twok1, un);
            case WorpitzkyKind::subge2:
                if (form == Form::printed) return int_pow(twok1, un) - Int(n + 1) * int_pow(twok, un);
                return int_pow(twok1, un) - int_pow(twok, un) - Int(n) * int_pow(twok, un - 1);
            case WorpitzkyKind::sub01:
                return int_pow(twok1, un) - int_pow(Int(2), un) * int_pow(k1, un) +
                       Int(n) * int_pow(Int(2), un - 1) * int_pow(k1, un - 1);
        }
        throw std::logic_error("check_worpitzky: bad kind");
    };

    std::vector<std::pair<std::string, std::vector<Rat>>> targets;
    switch (kind) {
        case WorpitzkyKind::sub0ge2:
            // The identity names both equal statistics; check both rows.
            targets.emplace_back("sub1", expand(row.p1, 1));
            targets.emplace_back("sub0ge2", expand(row.p0ge2, 1));
            break;
        case WorpitzkyKind::subge2:
            targets.emplace_back("subge2", expand(row.pge2, 0));
            break;
        case WorpitzkyKind::sub01:
            targets.emplace_back("sub01", expand(row.p01, 2));
            break;
    }

    for (const auto& [name, series] : targets) {
        for (long j = 0; j <= t_degree; ++j) {
            Rat want = series[static_cast<size_t>(j)];
            Rat got = Rat(closed(j));
            if (want != got)
                return CheckReport::fail(ctx, name + " at t^" + std::to_string(j), want.get_str(),
                                         got.get_str());
        }
    }
    return CheckReport::pass(ctx);
}

// The five reflectional symmetries of one rank's sub-Eulerian rows.
inline CheckReport check_symmetries(const SubTableRow& row) {
    const std::string ctx = "symmetry: rank " + std::to_string(row.n);
    const long n = row.n;
    auto clause = [&](const char* name, const Polynomial& lhs, const Polynomial& rhs) {
        return lhs == rhs ? CheckReport::pass(ctx)
                          : CheckReport::fail(ctx, name, rhs.to_string(), lhs.to_string());
    };
    CheckReport r = clause("clause (i): sub1 = sub0ge2", row.p1, row.p0ge2);
    if (!r.passed) return r;
    r = clause("clause (ii): sub01 = reverse(subge2)", row.p01, row.pge2.reverse(n));
    if (!r.passed) return r;
    r = clause("clause (iii): subge2 = reverse(sub01)", row.pge2, row.p01.reverse(n));
    if (!r.passed) return r;
    r = clause("clause (iv): sub0ge2 palindromic", row.p0ge2, row.p0ge2.reverse(n));
    if (!r.passed) return r;
    r = clause("clause (v): sub1 palindromic", row.p1, row.p1.reverse(n));
    if (!r.passed) return r;
    return CheckReport::pass(ctx);
}

}  // namespace coxeuler
