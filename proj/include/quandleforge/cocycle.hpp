#pragma once

// Symmetric quandle 3-cocycles with values in (Z_2)^s (+) Z^t.
//
// A map phi : X^3 -> A is a symmetric 3-cocycle of (X, rho) when
//   (i)   phi(a,c,d) - phi(a^b,c,d) - phi(a,b,d) + phi(a^c,b^c,d)
//           + phi(a,b,c) - phi(a^d,b^d,c^d) = 0          for all (a,b,c,d)
//   (ii)  phi(a,a,b) = 0 and phi(a,b,b) = 0              for all (a,b)
//   (iii) phi(a,b,c) + phi(rho(a),b,c) = 0
//         phi(a,b,c) + phi(a^b,rho(b),c) = 0
//         phi(a,b,c) + phi(a^c,b^c,rho(c)) = 0           for all (a,b,c)
//
// Values are stored sparsely; absent triples are zero.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quandleforge/abelian.hpp"
#include "quandleforge/quandle.hpp"

namespace qf {

using Triple = std::array<Element, 3>;

class Cocycle3;
struct CocycleCheck;
inline CocycleCheck verify_cocycle3(const SymmetricQuandle& sq, const AbelianSignature& sig,
                                    const std::map<Triple, AbelianElement>& values);

class Cocycle3 {
public:
    const SymmetricQuandle& sq() const { return sq_; }
    const AbelianSignature& signature() const { return sig_; }
    const std::map<Triple, AbelianElement>& values() const { return values_; }

    AbelianElement at(Element a, Element b, Element c) const {
        auto it = values_.find(Triple{a, b, c});
        return it == values_.end() ? AbelianElement::zero(sig_) : it->second;
    }
    AbelianElement at(const Triple& t) const { return at(t[0], t[1], t[2]); }

private:
    friend struct CocycleCheck;
    friend CocycleCheck verify_cocycle3(const SymmetricQuandle&, const AbelianSignature&,
                                        const std::map<Triple, AbelianElement>&);

    Cocycle3(SymmetricQuandle sq, AbelianSignature sig, std::map<Triple, AbelianElement> values)
        : sq_(std::move(sq)), sig_(sig), values_(std::move(values)) {}

    SymmetricQuandle sq_;
    AbelianSignature sig_;
    std::map<Triple, AbelianElement> values_;
};

struct CocycleViolation {
    int condition;                   // 1, 2 or 3
    int variant;                     // condition 2: 0 = phi(a,a,b), 1 = phi(a,b,b)
                                     // condition 3: 0,1,2 = the three identities in order
    std::array<Element, 4> witness;  // condition 1: {a,b,c,d}; 2: {a,b,-,-}; 3: {a,b,c,-}
    std::string detail;
};

struct CocycleCheck {
    std::optional<Cocycle3> cocycle;
    std::vector<CocycleViolation> violations;
    bool truncated = false;  // more violations existed than the report cap

    bool ok() const { return cocycle.has_value(); }
};

inline constexpr std::size_t kCocycleViolationCap = 100;

// Exhaustively checks conditions (i)-(iii). Values with a signature other
// than `sig` or triples outside the quandle raise input_error.
inline CocycleCheck verify_cocycle3(const SymmetricQuandle& sq, const AbelianSignature& sig,
                                    const std::map<Triple, AbelianElement>& values) {
    const Quandle& q = sq.quandle;
    const int n = q.size();
    for (const auto& [t, v] : values) {
        for (Element e : t)
            if (e < 0 || e >= n) throw input_error("cocycle: triple entry out of range");
        if (v.signature() != sig)
            throw input_error("cocycle: value signature does not match declared signature");
    }

    CocycleCheck check;
    auto phi = [&](Element a, Element b, Element c) -> AbelianElement {
        auto it = values.find(Triple{a, b, c});
        return it == values.end() ? AbelianElement::zero(sig) : it->second;
    };
    auto report = [&](CocycleViolation v) {
        if (check.violations.size() < kCocycleViolationCap)
            check.violations.push_back(std::move(v));
        else
            check.truncated = true;
    };

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                for (Element d = 0; d < n; ++d) {
                    AbelianElement sum = phi(a, c, d) - phi(q.op(a, b), c, d) - phi(a, b, d) +
                                         phi(q.op(a, c), q.op(b, c), d) + phi(a, b, c) -
                                         phi(q.op(a, d), q.op(b, d), q.op(c, d));
                    if (!sum.is_zero()) {
                        std::ostringstream os;
                        os << "condition (i) fails at (a,b,c,d)=(" << a << "," << b << "," << c
                           << "," << d << "): sum = " << to_display_string(sum);
                        report({1, 0, {a, b, c, d}, os.str()});
                    }
                }

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (!phi(a, a, b).is_zero()) {
                std::ostringstream os;
                os << "condition (ii) fails: phi(" << a << "," << a << "," << b
                   << ") = " << to_display_string(phi(a, a, b));
                report({2, 0, {a, b, 0, 0}, os.str()});
            }
            if (!phi(a, b, b).is_zero()) {
                std::ostringstream os;
                os << "condition (ii) fails: phi(" << a << "," << b << "," << b
                   << ") = " << to_display_string(phi(a, b, b));
                report({2, 1, {a, b, 0, 0}, os.str()});
            }
        }

    const GoodInvolution& rho = sq.rho;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c) {
                const AbelianElement base = phi(a, b, c);
                const std::array<AbelianElement, 3> partners = {
                    phi(rho(a), b, c),
                    phi(q.op(a, b), rho(b), c),
                    phi(q.op(a, c), q.op(b, c), rho(c)),
                };
                for (int k = 0; k < 3; ++k) {
                    AbelianElement sum = base + partners[static_cast<std::size_t>(k)];
                    if (!sum.is_zero()) {
                        std::ostringstream os;
                        os << "condition (iii." << k + 1 << ") fails at (" << a << "," << b << ","
                           << c << "): sum = " << to_display_string(sum);
                        report({3, k, {a, b, c, 0}, os.str()});
                    }
                }
            }

    if (check.violations.empty())
        check.cocycle = Cocycle3(sq, sig, values);
    return check;
}

// The concrete cocycle theta on (P_3, [0,2,1]) with signature (1,1):
//   1(+)0  on (0,1,0), (0,2,0)
//   0(+)1  on (1,0,2), (2,0,1)
//   0(+)-1 on (1,0,1), (2,0,2)
//   0 elsewhere
inline Cocycle3 make_theta() {
    SymmetricQuandle sq = make_p3_symmetric();
    AbelianSignature sig{1, 1};
    std::map<Triple, AbelianElement> values;
    values[{0, 1, 0}] = AbelianElement(sig, {1}, {0});
    values[{0, 2, 0}] = AbelianElement(sig, {1}, {0});
    values[{1, 0, 2}] = AbelianElement(sig, {0}, {1});
    values[{2, 0, 1}] = AbelianElement(sig, {0}, {1});
    values[{1, 0, 1}] = AbelianElement(sig, {0}, {-1});
    values[{2, 0, 2}] = AbelianElement(sig, {0}, {-1});
    CocycleCheck c = verify_cocycle3(sq, sig, values);
    if (!c.ok()) throw constraint_error("theta failed cocycle verification (internal error)");
    return *std::move(c.cocycle);
}

struct LemmaAdmissibility {
    bool admissible = true;
    std::vector<Triple> offenders;  // triples whose value is outside {0, p_i, +-q_j}
};

// The lower-bound lemma requires every value to be 0, some p_i, or some
// +-q_j.
inline LemmaAdmissibility check_lemma_admissible(const Cocycle3& phi) {
    LemmaAdmissibility result;
    for (const auto& [t, v] : phi.values()) {
        int ones = 0;
        for (int a : v.alphas()) ones += a;
        int units = 0;
        bool bad_beta = false;
        for (std::int64_t b : v.betas()) {
            if (b == 1 || b == -1)
                ++units;
            else if (b != 0)
                bad_beta = true;
        }
        const bool is_zero = ones == 0 && units == 0 && !bad_beta;
        const bool is_p = ones == 1 && units == 0 && !bad_beta;
        const bool is_q = ones == 0 && units == 1 && !bad_beta;
        if (!(is_zero || is_p || is_q)) {
            result.admissible = false;
            result.offenders.push_back(t);
        }
    }
    return result;
}

}  // namespace qf
