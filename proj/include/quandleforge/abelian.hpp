#pragma once

// Arithmetic in the coefficient groups (Z_2)^s (+) Z^t.
//
// Elements are stored as s mod-2 entries ("alphas") followed by t integer
// entries ("betas"). Z entries are 64-bit and every operation detects
// overflow instead of wrapping.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "quandleforge/errors.hpp"

namespace qf {

struct AbelianSignature {
    int s = 0;  // number of Z_2 summands
    int t = 0;  // number of Z summands

    bool operator==(const AbelianSignature&) const = default;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("abelian element: Z entry overflow in addition");
    return r;
}

inline std::int64_t checked_negate(std::int64_t a) {
    std::int64_t r;
    if (__builtin_sub_overflow(std::int64_t{0}, a, &r))
        throw std::overflow_error("abelian element: Z entry overflow in negation");
    return r;
}

}  // namespace detail

class AbelianElement {
public:
    AbelianElement() = default;

    explicit AbelianElement(AbelianSignature sig)
        : sig_(sig), alphas_(static_cast<std::size_t>(sig.s), 0),
          betas_(static_cast<std::size_t>(sig.t), 0) {
        if (sig.s < 0 || sig.t < 0) throw input_error("abelian signature: s and t must be >= 0");
    }

    AbelianElement(AbelianSignature sig, std::vector<int> alphas, std::vector<std::int64_t> betas)
        : sig_(sig), alphas_(std::move(alphas)), betas_(std::move(betas)) {
        if (sig.s < 0 || sig.t < 0) throw input_error("abelian signature: s and t must be >= 0");
        if (alphas_.size() != static_cast<std::size_t>(sig.s))
            throw input_error("abelian element: alphas length does not match signature");
        if (betas_.size() != static_cast<std::size_t>(sig.t))
            throw input_error("abelian element: betas length does not match signature");
        for (int a : alphas_)
            if (a != 0 && a != 1) throw input_error("abelian element: alpha entries must be 0 or 1");
    }

    static AbelianElement zero(AbelianSignature sig) { return AbelianElement(sig); }

    // Unit in Z_2 slot i, 0-based.
    static AbelianElement p(AbelianSignature sig, int i) {
        AbelianElement e(sig);
        e.alphas_.at(static_cast<std::size_t>(i)) = 1;
        return e;
    }

    // Unit in Z slot j, 0-based.
    static AbelianElement q(AbelianSignature sig, int j) {
        AbelianElement e(sig);
        e.betas_.at(static_cast<std::size_t>(j)) = 1;
        return e;
    }

    const AbelianSignature& signature() const { return sig_; }
    const std::vector<int>& alphas() const { return alphas_; }
    const std::vector<std::int64_t>& betas() const { return betas_; }

    bool is_zero() const {
        for (int a : alphas_)
            if (a != 0) return false;
        for (std::int64_t b : betas_)
            if (b != 0) return false;
        return true;
    }

    bool operator==(const AbelianElement&) const = default;

    friend AbelianElement operator+(const AbelianElement& a, const AbelianElement& b) {
        if (a.sig_ != b.sig_)
            throw input_error("abelian addition: signature mismatch");
        AbelianElement r(a.sig_);
        for (std::size_t i = 0; i < a.alphas_.size(); ++i)
            r.alphas_[i] = (a.alphas_[i] + b.alphas_[i]) & 1;
        for (std::size_t j = 0; j < a.betas_.size(); ++j)
            r.betas_[j] = detail::checked_add(a.betas_[j], b.betas_[j]);
        return r;
    }

    friend AbelianElement operator-(const AbelianElement& a) {
        AbelianElement r = a;  // Z_2 entries are self-inverse
        for (auto& b : r.betas_) b = detail::checked_negate(b);
        return r;
    }

    friend AbelianElement operator-(const AbelianElement& a, const AbelianElement& b) {
        return a + (-b);
    }

    AbelianElement& operator+=(const AbelianElement& b) { return *this = *this + b; }

private:
    AbelianSignature sig_;
    std::vector<int> alphas_;
    std::vector<std::int64_t> betas_;
};

// Lemma-style norm: sum of the Z_2 entries (as 0/1 integers) plus the sum of
// absolute values of the Z entries.
inline std::int64_t bound_norm(const AbelianElement& a) {
    std::int64_t n = 0;
    for (int al : a.alphas()) n = detail::checked_add(n, al);
    for (std::int64_t b : a.betas())
        n = detail::checked_add(n, b < 0 ? detail::checked_negate(b) : b);
    return n;
}

// "a1(+)...(+)as(+)b1(+)...(+)bt", e.g. "0⊕2" for signature (1,1).
inline std::string to_display_string(const AbelianElement& a) {
    std::ostringstream os;
    bool first = true;
    for (int al : a.alphas()) {
        if (!first) os << "⊕";
        os << al;
        first = false;
    }
    for (std::int64_t b : a.betas()) {
        if (!first) os << "⊕";
        os << b;
        first = false;
    }
    if (first) os << "0";  // signature (0,0)
    return os.str();
}

}  // namespace qf
