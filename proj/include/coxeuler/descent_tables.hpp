#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coxeuler/check_report.hpp"
#include "coxeuler/polynomial.hpp"
#include "coxeuler/signed_permutation.hpp"

namespace coxeuler {

// The four sub-Eulerian polynomials of one rank: descent-count generating
// polynomials of the four descent classes of D_n.
struct SubTableRow {
    int n = 0;
    Polynomial p1, p01, pge2, p0ge2;

    const Polynomial& by_class(DescentClass c) const {
        switch (c) {
            case DescentClass::c1: return p1;
            case DescentClass::c01: return p01;
            case DescentClass::cge2: return pge2;
            case DescentClass::c0ge2: return p0ge2;
        }
        throw std::logic_error("by_class: bad tag");
    }

    Polynomial& by_class(DescentClass c) {
        return const_cast<Polynomial&>(static_cast<const SubTableRow&>(*this).by_class(c));
    }

    // The full Eulerian polynomial is the sum over the class partition.
    Polynomial eulerian() const { return p1 + p01 + pge2 + p0ge2; }

    bool operator==(const SubTableRow& o) const {
        return n == o.n && p1 == o.p1 && p01 == o.p01 && pge2 == o.pge2 && p0ge2 == o.p0ge2;
    }
};

namespace detail {

inline Polynomial counts_to_poly(const std::vector<unsigned long long>& counts) {
    std::vector<Rat> c;
    c.reserve(counts.size());
    for (unsigned long long v : counts) c.emplace_back(Int(static_cast<unsigned long>(v)));
    return Polynomial(std::move(c));
}

inline unsigned long long group_order(int n, Family family) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    switch (family) {
        case Family::A: return f;
        case Family::B: return f << n;
        default: return n == 0 ? f : f << (n - 1);
    }
}

}  // namespace detail

// Exhaustive census of D_n split by descent class.
inline SubTableRow brute_force_sub_row(int n) {
    if (n < 2 || n > kMaxEnumerationRank) throw std::out_of_range("brute_force_sub_row: rank out of range");
    std::array<std::vector<unsigned long long>, 4> counts;
    for (auto& c : counts) c.assign(static_cast<size_t>(n) + 1, 0);
    enumerate(n, Family::D, [&](const SignedPermutation& w) {
        ++counts[static_cast<size_t>(descent_class(w))][static_cast<size_t>(descent_count(w, Convention::D))];
    });
    SubTableRow row;
    row.n = n;
    row.p1 = detail::counts_to_poly(counts[static_cast<size_t>(DescentClass::c1)]);
    row.p01 = detail::counts_to_poly(counts[static_cast<size_t>(DescentClass::c01)]);
    row.pge2 = detail::counts_to_poly(counts[static_cast<size_t>(DescentClass::cge2)]);
    row.p0ge2 = detail::counts_to_poly(counts[static_cast<size_t>(DescentClass::c0ge2)]);
    return row;
}

// Exhaustive census of the whole family's descent counts.  Ranks 0 and 1
// are the constant 1 for every family (no descent positions exist for D).
inline Polynomial brute_force_eulerian(int n, Family family) {
    if (family == Family::B_minus_D) throw std::invalid_argument("brute_force_eulerian: family must be A, B or D");
    if (n < 0 || n > kMaxEnumerationRank) throw std::out_of_range("brute_force_eulerian: rank out of range");
    if (n == 0 || (family == Family::D && n == 1)) return Polynomial(1);
    Convention conv = family == Family::A   ? Convention::A
                      : family == Family::B ? Convention::B
                                            : Convention::D;
    std::vector<unsigned long long> counts(static_cast<size_t>(n) + 1, 0);
    enumerate(n, family, [&](const SignedPermutation& w) { ++counts[static_cast<size_t>(descent_count(w, conv))]; });
    return detail::counts_to_poly(counts);
}

// Exhaustive check that negating the first letter maps D_n onto its
// complement in B_n, preserving the descent count and permuting the four
// descent classes in the expected involutive way.
inline CheckReport verify_hat_lemma(int n) {
    if (n < 2 || n > kMaxEnumerationRank) throw std::out_of_range("verify_hat_lemma: rank out of range");
    std::string ctx = "hat bijection: rank " + std::to_string(n);
    CheckReport failure = CheckReport::pass(ctx);
    bool failed = false;
    unsigned long long seen = 0;
    enumerate(n, Family::D, [&](const SignedPermutation& w) {
        if (failed) return;
        ++seen;
        SignedPermutation h = hat(w);
        if (is_even_signed(h)) {
            failure = CheckReport::fail(ctx, w.to_string(), "odd-signed image", "even-signed " + h.to_string());
            failed = true;
            return;
        }
        int kw = descent_count(w, Convention::D);
        int kh = descent_count(h, Convention::D);
        if (kw != kh) {
            failure = CheckReport::fail(ctx, w.to_string(), "descent count " + std::to_string(kw),
                                        "descent count " + std::to_string(kh));
            failed = true;
            return;
        }
        DescentClass expect = hat_class_image(descent_class(w));
        DescentClass got = descent_class(h);
        if (expect != got) {
            failure = CheckReport::fail(ctx, w.to_string(), to_string(expect), to_string(got));
            failed = true;
        }
    });
    if (failed) return failure;
    unsigned long long want = detail::group_order(n, Family::D);
    if (seen != want)
        return CheckReport::fail(ctx, "element count", std::to_string(want), std::to_string(seen));
    return CheckReport::pass(ctx + ": " + std::to_string(seen) + " elements, count preserved, classes permuted (c1<->c0ge2)");
}

namespace detail {

// Expected (class, descent count) after inserting the new largest letter at
// `position` with `sign`, given the source's class, descent count, and
// descent-position mask.  This is the rule table the insertion verifier
// replays; the verifier compares it against direct recomputation.
inline std::pair<DescentClass, int> predict_insertion(DescentClass cls, int k,
                                                      const std::vector<bool>& source_descents,
                                                      int position, Sign sign, int n) {
    const bool at_descent =
        position < static_cast<int>(source_descents.size()) && source_descents[static_cast<size_t>(position)];
    if (sign == Sign::plus) {
        if (position == 0)
            return {DescentClass::c1, (cls == DescentClass::c1 || cls == DescentClass::cge2) ? k + 1 : k};
        if (position == 1) {
            if (cls == DescentClass::cge2) return {DescentClass::cge2, k + 1};
            if (cls == DescentClass::c01) return {DescentClass::cge2, k - 1};
            return {DescentClass::cge2, k};
        }
        if (position == n - 1) return {cls, k};
        return {cls, at_descent ? k : k + 1};
    }
    if (position == 0)
        return {DescentClass::c0ge2, (cls == DescentClass::cge2 || cls == DescentClass::c0ge2) ? k + 1 : k};
    if (position == 1) {
        if (cls == DescentClass::c01) return {DescentClass::c01, k};
        if (cls == DescentClass::cge2) return {DescentClass::c01, k + 2};
        return {DescentClass::c01, k + 1};
    }
    if (position == n - 1) return {hat_class_image(cls), k + 1};
    return {hat_class_image(cls), at_descent ? k : k + 1};
}

// Pack a window of rank <= 12 into 5 bits per letter for the dedupe set.
inline std::uint64_t encode_word(const std::vector<int>& v) {
    std::uint64_t code = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        std::uint64_t letter = static_cast<std::uint64_t>(std::abs(v[i])) | (v[i] < 0 ? 16u : 0u);
        code |= letter << (5 * i);
    }
    return code;
}

}  // namespace detail

struct InsertionCensus {
    CheckReport report;
    unsigned long long products = 0;
    unsigned long long down_transitions = 0;       // descent count drops by one
    unsigned long long double_up_transitions = 0;  // descent count jumps by two
};

// Core of the insertion verifier, over an arbitrary stream of rank n-1
// source words (tests inject doctored streams; verify_insertion streams the
// honest enumeration).  Checks that every product lands where the rule table
// says, is even-signed, and that the 2*n*|sources| products are pairwise
// distinct and exactly fill the rank-n group.
template <class SourceStream>
InsertionCensus insertion_census_stream(SourceStream&& for_each_source, int n) {
    if (n < 3 || n > kMaxEnumerationRank) throw std::out_of_range("insertion census: rank out of range");
    std::string ctx = "insertion: rank " + std::to_string(n);
    InsertionCensus res;
    res.report = CheckReport::pass(ctx);
    bool failed = false;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(2 * detail::group_order(n, Family::D));

    for_each_source([&](const SignedPermutation& src) {
        if (failed) return;
        const DescentClass cls = descent_class(src);
        const int k = descent_count(src, Convention::D);
        std::vector<bool> des(static_cast<size_t>(src.size()), false);
        for (int pos : descent_set(src, Convention::D)) des[static_cast<size_t>(pos)] = true;

        for (Sign sign : {Sign::plus, Sign::minus}) {
            for (int position = 0; position < n; ++position) {
                SignedPermutation out = insert_letter(src, position, sign);
                ++res.products;
                if (!is_even_signed(out)) {
                    res.report = CheckReport::fail(ctx, out.to_string(), "even-signed product", "odd-signed");
                    failed = true;
                    return;
                }
                auto [want_cls, want_k] = detail::predict_insertion(cls, k, des, position, sign, n);
                DescentClass got_cls = descent_class(out);
                int got_k = descent_count(out, Convention::D);
                if (got_cls != want_cls || got_k != want_k) {
                    res.report = CheckReport::fail(
                        ctx, src.to_string() + " @" + std::to_string(position) + (sign == Sign::plus ? "+" : "-"),
                        std::string(to_string(want_cls)) + ",k=" + std::to_string(want_k),
                        std::string(to_string(got_cls)) + ",k=" + std::to_string(got_k));
                    failed = true;
                    return;
                }
                if (!seen.insert(detail::encode_word(out.window())).second) {
                    res.report = CheckReport::fail(ctx, "duplicate product", "each word once", out.to_string());
                    failed = true;
                    return;
                }
                if (got_k == k - 1) ++res.down_transitions;
                if (got_k == k + 2) ++res.double_up_transitions;
            }
        }
    });
    if (failed) return res;

    const unsigned long long want = detail::group_order(n, Family::D);
    if (res.products != want) {
        res.report = CheckReport::fail(ctx, "product count", std::to_string(want), std::to_string(res.products));
        return res;
    }
    res.report = CheckReport::pass(ctx + ": " + std::to_string(res.products) +
                                   " products cover the group once; k-1 transitions " +
                                   std::to_string(res.down_transitions) + ", k+2 transitions " +
                                   std::to_string(res.double_up_transitions));
    return res;
}

inline InsertionCensus insertion_census(const std::vector<SignedPermutation>& sources, int n) {
    return insertion_census_stream(
        [&](auto&& visit) {
            for (const SignedPermutation& w : sources) visit(w);
        },
        n);
}

inline InsertionCensus insertion_census(int n) {
    return insertion_census_stream([&](auto&& visit) { enumerate(n - 1, Family::D, visit); }, n);
}

inline CheckReport verify_insertion(int n) { return insertion_census(n).report; }

}  // namespace coxeuler
