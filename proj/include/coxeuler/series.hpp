#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxeuler/polynomial.hpp"

namespace coxeuler {

enum class Axis { x, t };

// Bivariate formal series truncated in x: slot n holds the plain coefficient
// of x^n, a Polynomial in t.  The physical truncation order is fixed at
// construction (exactly order+1 slots, always); differentiating along x
// loses the top slot's information, so the highest *trustworthy* slot is
// tracked separately and comparisons look only at trustworthy slots.
class TruncatedSeries {
   public:
    explicit TruncatedSeries(int order)
        : order_(order), effective_(order), slots_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }

    static TruncatedSeries constant(const Polynomial& p, int order) {
        TruncatedSeries s(order);
        s.slots_[0] = p;
        return s;
    }

    static TruncatedSeries x(int order) {
        TruncatedSeries s(order);
        if (order >= 1) s.slots_[1] = Polynomial(1);
        return s;
    }

    // Truncation of e^{x*u(t)}: slot n = u^n / n!.
    static TruncatedSeries exp_linear(const Polynomial& u, int order) {
        TruncatedSeries s(order);
        Polynomial pow(1);
        s.slots_[0] = pow;
        for (int n = 1; n <= order; ++n) {
            pow *= u;
            s.slots_[static_cast<size_t>(n)] = pow * Rat(Int(1), factorial(static_cast<unsigned long>(n)));
        }
        return s;
    }

    int order() const { return order_; }
    int effective_order() const { return effective_; }

    const Polynomial& slot(int n) const {
        if (n < 0 || n > order_) throw std::out_of_range("TruncatedSeries::slot");
        return slots_[static_cast<size_t>(n)];
    }

    void set_slot(int n, Polynomial p) {
        if (n < 0 || n > order_) throw std::out_of_range("TruncatedSeries::set_slot");
        slots_[static_cast<size_t>(n)] = std::move(p);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_order(a, b);
        TruncatedSeries r(a.order_);
        for (int n = 0; n <= a.order_; ++n) r.slots_[static_cast<size_t>(n)] = a.slots_[static_cast<size_t>(n)] + b.slots_[static_cast<size_t>(n)];
        r.effective_ = std::min(a.effective_, b.effective_);
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_order(a, b);
        TruncatedSeries r(a.order_);
        for (int n = 0; n <= a.order_; ++n) r.slots_[static_cast<size_t>(n)] = a.slots_[static_cast<size_t>(n)] - b.slots_[static_cast<size_t>(n)];
        r.effective_ = std::min(a.effective_, b.effective_);
        return r;
    }

    // Cauchy product truncated at the common physical order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_order(a, b);
        TruncatedSeries r(a.order_);
        for (int n = 0; n <= a.order_; ++n) {
            Polynomial acc;
            for (int i = 0; i <= n; ++i) acc += a.slots_[static_cast<size_t>(i)] * b.slots_[static_cast<size_t>(n - i)];
            r.slots_[static_cast<size_t>(n)] = std::move(acc);
        }
        r.effective_ = std::min(a.effective_, b.effective_);
        return r;
    }

    TruncatedSeries scale(const Polynomial& p) const {
        TruncatedSeries r(order_);
        for (int n = 0; n <= order_; ++n) r.slots_[static_cast<size_t>(n)] = slots_[static_cast<size_t>(n)] * p;
        r.effective_ = effective_;
        return r;
    }

    TruncatedSeries scale(const Rat& s) const { return scale(Polynomial(s)); }

    // Multiplication by x: slots shift up, slot 0 becomes zero.
    TruncatedSeries mul_x() const {
        TruncatedSeries r(order_);
        for (int n = order_; n >= 1; --n) r.slots_[static_cast<size_t>(n)] = slots_[static_cast<size_t>(n - 1)];
        r.effective_ = std::min(effective_ + 1, order_);
        return r;
    }

    TruncatedSeries partial(Axis axis) const { return axis == Axis::x ? partial_x() : partial_t(); }

    TruncatedSeries partial_x() const {
        TruncatedSeries r(order_);
        for (int n = 0; n < order_; ++n)
            r.slots_[static_cast<size_t>(n)] = Rat(n + 1) * slots_[static_cast<size_t>(n + 1)];
        r.effective_ = std::min(effective_, order_) - 1;
        return r;
    }

    TruncatedSeries partial_t() const {
        TruncatedSeries r(order_);
        for (int n = 0; n <= order_; ++n) r.slots_[static_cast<size_t>(n)] = slots_[static_cast<size_t>(n)].derivative();
        r.effective_ = effective_;
        return r;
    }

    // Slotwise division by t; slots above the effective order are cleared so a
    // stale untrustworthy slot can never raise a spurious inexactness error.
    TruncatedSeries div_t() const {
        TruncatedSeries r(order_);
        for (int n = 0; n <= order_; ++n) {
            if (n > effective_) break;
            r.slots_[static_cast<size_t>(n)] = slots_[static_cast<size_t>(n)].exact_div_t(1);
        }
        r.effective_ = effective_;
        return r;
    }

   private:
    static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order_ != b.order_) throw std::invalid_argument("TruncatedSeries: order mismatch");
    }

    int order_;
    int effective_;
    std::vector<Polynomial> slots_;
};

inline TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
inline TruncatedSeries series_partial(const TruncatedSeries& s, Axis axis) { return s.partial(axis); }
inline TruncatedSeries exp_linear(const Polynomial& u, int order) { return TruncatedSeries::exp_linear(u, order); }

struct SeriesMismatch {
    int slot = 0;
    long power = 0;
    Rat lhs;
    Rat rhs;
};

// First difference between two series on their common trustworthy slots.
inline std::optional<SeriesMismatch> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("first_mismatch: order mismatch");
    int top = std::min(a.effective_order(), b.effective_order());
    for (int n = 0; n <= top; ++n) {
        const Polynomial& pa = a.slot(n);
        const Polynomial& pb = b.slot(n);
        if (pa == pb) continue;
        long deg = std::max(pa.degree(), pb.degree());
        for (long k = 0; k <= deg; ++k)
            if (pa.coeff(k) != pb.coeff(k)) return SeriesMismatch{n, k, pa.coeff(k), pb.coeff(k)};
    }
    return std::nullopt;
}

}  // namespace coxeuler
