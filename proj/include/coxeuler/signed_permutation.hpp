#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxeuler {

enum class Family { A, B, D, B_minus_D };
enum class Convention { A, B, D };
enum class DescentClass { c1, c01, cge2, c0ge2 };
enum class Sign { plus, minus };

// Largest rank the exhaustive enumerators accept.  |B_9| = 185,794,560 still
// fits easily in 64-bit census counters; beyond that, use the recurrences.
inline constexpr int kMaxEnumerationRank = 9;

inline const char* to_string(DescentClass c) {
    switch (c) {
        case DescentClass::c1: return "c1";
        case DescentClass::c01: return "c01";
        case DescentClass::cge2: return "cge2";
        case DescentClass::c0ge2: return "c0ge2";
    }
    return "?";
}

// A signed permutation in window notation: the sequence of values on 1..n,
// signs included.  Absolute values are exactly {1..n}.
class SignedPermutation {
   public:
    explicit SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
        const int n = static_cast<int>(window_.size());
        if (n > 16) throw std::invalid_argument("SignedPermutation: rank too large");
        std::array<bool, 17> seen{};
        for (int v : window_) {
            int a = std::abs(v);
            if (a < 1 || a > n || seen[static_cast<size_t>(a)])
                throw std::invalid_argument("SignedPermutation: window is not a signed arrangement of 1..n");
            seen[static_cast<size_t>(a)] = true;
        }
    }

    // Caller guarantees the window is valid; used by the enumerators' inner
    // loops where validity holds by construction.
    static SignedPermutation unchecked(std::vector<int> window) {
        return SignedPermutation(Trusted{}, std::move(window));
    }

    int size() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }

    bool operator==(const SignedPermutation& o) const { return window_ == o.window_; }
    bool operator!=(const SignedPermutation& o) const { return !(*this == o); }
    bool operator<(const SignedPermutation& o) const { return window_ < o.window_; }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < window_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(window_[i]);
        }
        return s + ")";
    }

   private:
    struct Trusted {};
    SignedPermutation(Trusted, std::vector<int> window) : window_(std::move(window)) {}

    std::vector<int> window_;
};

inline bool is_even_signed(const SignedPermutation& w) {
    int negs = 0;
    for (int v : w.window()) negs += v < 0;
    return negs % 2 == 0;
}

namespace detail {

// The virtual value sitting in front of the window: 0 for convention B, the
// negation of the second entry for convention D.
inline int virtual_front(const std::vector<int>& v, Convention c) {
    return c == Convention::B ? 0 : -v[1];
}

}  // namespace detail

// Descent positions of w.  Convention A uses positions 1..n-1 only;
// conventions B and D add position 0, read against the virtual front value.
inline std::vector<int> descent_set(const SignedPermutation& w, Convention convention) {
    const std::vector<int>& v = w.window();
    const int n = w.size();
    if (convention == Convention::D && n < 2)
        throw std::invalid_argument("descent_set: convention D needs n >= 2");
    std::vector<int> out;
    if (convention != Convention::A && n >= 1 && detail::virtual_front(v, convention) > v[0])
        out.push_back(0);
    for (int i = 1; i < n; ++i)
        if (v[i - 1] > v[i]) out.push_back(i);
    return out;
}

inline int descent_count(const SignedPermutation& w, Convention convention) {
    const std::vector<int>& v = w.window();
    const int n = w.size();
    if (convention == Convention::D && n < 2)
        throw std::invalid_argument("descent_count: convention D needs n >= 2");
    int k = 0;
    if (convention != Convention::A && n >= 1 && detail::virtual_front(v, convention) > v[0]) ++k;
    for (int i = 1; i < n; ++i) k += v[i - 1] > v[i];
    return k;
}

// Negate the first window entry.  An involution; flips sign parity.
inline SignedPermutation hat(const SignedPermutation& w) {
    if (w.size() < 1) throw std::invalid_argument("hat: empty window");
    std::vector<int> v = w.window();
    v[0] = -v[0];
    return SignedPermutation::unchecked(std::move(v));
}

// Four-way split by which of positions 0 and 1 are descents (convention D).
inline DescentClass descent_class(const SignedPermutation& w) {
    const std::vector<int>& v = w.window();
    if (w.size() < 2) throw std::invalid_argument("descent_class: needs n >= 2");
    bool at0 = -v[1] > v[0];
    bool at1 = v[0] > v[1];
    if (at0 && at1) return DescentClass::c01;
    if (at1) return DescentClass::c1;
    if (at0) return DescentClass::c0ge2;
    return DescentClass::cge2;
}

// How the hat map permutes the four descent classes.
inline DescentClass hat_class_image(DescentClass c) {
    switch (c) {
        case DescentClass::c1: return DescentClass::c0ge2;
        case DescentClass::c0ge2: return DescentClass::c1;
        default: return c;
    }
}

// Visit each element of the family exactly once, in the documented order:
// absolute-value permutations lexicographically, and for each permutation the
// sign masks as an ascending binary counter (bit i negates entry i).
template <class Visitor>
void enumerate(int n, Family family, Visitor&& visit) {
    if (n < 1 || n > kMaxEnumerationRank) throw std::out_of_range("enumerate: rank out of range");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> window(static_cast<size_t>(n));
    const unsigned long mask_end = family == Family::A ? 1ul : (1ul << n);
    do {
        for (unsigned long mask = 0; mask < mask_end; ++mask) {
            const int negs = std::popcount(mask);
            if (family == Family::D && (negs & 1)) continue;
            if (family == Family::B_minus_D && !(negs & 1)) continue;
            for (int i = 0; i < n; ++i)
                window[static_cast<size_t>(i)] = (mask >> i) & 1 ? -perm[static_cast<size_t>(i)] : perm[static_cast<size_t>(i)];
            visit(SignedPermutation::unchecked(window));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::vector<SignedPermutation> enumerate_collect(int n, Family family) {
    std::vector<SignedPermutation> out;
    enumerate(n, family, [&](const SignedPermutation& w) { out.push_back(w); });
    return out;
}

// Grow an (n-1)-letter word to n letters: sign plus places +n after slot
// `position` of w itself; sign minus places -n at the same position of
// hat(w).  Position 0 is the front, position n-1 the back.  Together the two
// branches over all positions list each element of D_n exactly once when w
// ranges over D_{n-1}.
inline SignedPermutation insert_letter(const SignedPermutation& w, int position, Sign sign) {
    const int n = w.size() + 1;
    if (position < 0 || position >= n) throw std::out_of_range("insert_letter: position out of range");
    std::vector<int> v = w.window();
    if (sign == Sign::minus && !v.empty()) v[0] = -v[0];
    v.insert(v.begin() + position, sign == Sign::plus ? n : -n);
    return SignedPermutation::unchecked(std::move(v));
}

}  // namespace coxeuler
