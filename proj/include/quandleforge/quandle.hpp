#pragma once

// Finite quandles and good involutions.
//
// A quandle is a set {0..n-1} with a binary operation x^y satisfying
//   (i)   x^x = x
//   (ii)  for each y, the map x -> x^y is a bijection
//   (iii) (x^y)^z = (x^z)^(y^z)
// A good involution rho is an involution with rho(x^y) = rho(x)^y and
// x^rho(y) = x^(y^-1), where x^(y^-1) is the unique z with z^y = x.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quandleforge/errors.hpp"

namespace qf {

using Element = int;
using Table = std::vector<std::vector<Element>>;

class Quandle;
struct QuandleCheck;
inline QuandleCheck verify_quandle(const Table& table);

class Quandle {
public:
    Quandle() : Quandle(1, {0}, {{0}}) {}  // the one-element trivial quandle

    int size() const { return n_; }

    Element op(Element x, Element y) const { return table_[idx(x, y)]; }

    // The unique z with z^y = x (total by axiom (ii)).
    Element inverse_op(Element x, Element y) const { return inv_[idx(x, y)]; }

    const Table& table() const { return rows_; }

    bool operator==(const Quandle& o) const { return n_ == o.n_ && table_ == o.table_; }

    static Quandle from_table(const Table& table);  // defined after verify_quandle

private:
    friend struct QuandleCheck;
    friend QuandleCheck verify_quandle(const Table&);

    Quandle(int n, std::vector<Element> flat, Table rows)
        : n_(n), table_(std::move(flat)), rows_(std::move(rows)) {
        // column-wise inverse: inv[x][y] = z with table[z][y] = x
        inv_.assign(table_.size(), 0);
        for (Element y = 0; y < n_; ++y)
            for (Element z = 0; z < n_; ++z) inv_[idx(table_[idx(z, y)], y)] = z;
    }

    std::size_t idx(Element x, Element y) const {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(y);
    }

    int n_ = 0;
    std::vector<Element> table_;  // row-major, table_[x*n+y] = x^y
    std::vector<Element> inv_;
    Table rows_;
};

struct AxiomViolation {
    int axiom;                       // 1, 2 or 3
    std::array<Element, 3> witness;  // axiom 1: {x,0,0}; axiom 2: {y,x1,x2}; axiom 3: {x,y,z}
    std::string detail;
};

struct QuandleCheck {
    std::optional<Quandle> quandle;  // set iff no axiom is violated
    std::vector<AxiomViolation> violations;

    bool ok() const { return quandle.has_value(); }
};

// Checks all three axioms exhaustively. Malformed tables (non-square,
// out-of-range entries) raise input_error; axiom failures are reported with
// witness tuples.
inline QuandleCheck verify_quandle(const Table& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw input_error("quandle table: empty");
    std::vector<Element> flat;
    flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(table[x].size()) != n) {
            std::ostringstream os;
            os << "quandle table: row " << x << " has " << table[x].size()
               << " entries, expected " << n;
            throw input_error(os.str());
        }
        for (int y = 0; y < n; ++y) {
            Element v = table[x][y];
            if (v < 0 || v >= n) {
                std::ostringstream os;
                os << "quandle table: entry (" << x << "," << y << ") = " << v
                   << " out of range 0.." << n - 1;
                throw input_error(os.str());
            }
            flat.push_back(v);
        }
    }

    QuandleCheck check;
    auto op = [&](Element x, Element y) { return flat[static_cast<std::size_t>(x) * n + y]; };

    for (Element x = 0; x < n; ++x) {
        if (op(x, x) != x) {
            std::ostringstream os;
            os << "axiom (i): " << x << "^" << x << " = " << op(x, x) << " != " << x;
            check.violations.push_back({1, {x, 0, 0}, os.str()});
        }
    }
    for (Element y = 0; y < n; ++y) {
        std::vector<Element> seen(static_cast<std::size_t>(n), -1);
        for (Element x = 0; x < n; ++x) {
            Element v = op(x, y);
            if (seen[static_cast<std::size_t>(v)] >= 0) {
                std::ostringstream os;
                os << "axiom (ii): column " << y << " is not a bijection: " << seen[v] << "^" << y
                   << " = " << x << "^" << y << " = " << v;
                check.violations.push_back({2, {y, seen[static_cast<std::size_t>(v)], x}, os.str()});
            } else {
                seen[static_cast<std::size_t>(v)] = x;
            }
        }
    }
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (op(op(x, y), z) != op(op(x, z), op(y, z))) {
                    std::ostringstream os;
                    os << "axiom (iii): (" << x << "^" << y << ")^" << z << " = "
                       << op(op(x, y), z) << " but (" << x << "^" << z << ")^(" << y << "^" << z
                       << ") = " << op(op(x, z), op(y, z));
                    check.violations.push_back({3, {x, y, z}, os.str()});
                }

    if (check.violations.empty()) check.quandle = Quandle(n, std::move(flat), table);
    return check;
}

inline Quandle Quandle::from_table(const Table& table) {
    QuandleCheck c = verify_quandle(table);
    if (!c.ok()) throw constraint_error("quandle axioms violated: " + c.violations.front().detail);
    return *std::move(c.quandle);
}

// --- named quandles ---------------------------------------------------------

// Table 1 quandle on {0,1,2}: rows [0,0,0],[2,1,1],[1,2,2].
inline Quandle make_p3() {
    return Quandle::from_table({{0, 0, 0}, {2, 1, 1}, {1, 2, 2}});
}

// Trivial quandle T_n: x^y = x.
inline Quandle trivial_quandle(int n) {
    if (n < 1) throw input_error("trivial quandle: n must be >= 1");
    Table t(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = x;
    return Quandle::from_table(t);
}

// Dihedral quandle R_n: x^y = (2y - x) mod n.
inline Quandle dihedral_quandle(int n) {
    if (n < 1) throw input_error("dihedral quandle: n must be >= 1");
    Table t(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = ((2 * y - x) % n + n) % n;
    return Quandle::from_table(t);
}

// --- good involutions -------------------------------------------------------

class GoodInvolution;
struct InvolutionCheck;
inline InvolutionCheck verify_good_involution(const Quandle& q, const std::vector<Element>& rho);

class GoodInvolution {
public:
    GoodInvolution() : rho_{0} {}  // identity on the one-element quandle

    const std::vector<Element>& perm() const { return rho_; }
    Element operator()(Element x) const { return rho_[static_cast<std::size_t>(x)]; }
    int size() const { return static_cast<int>(rho_.size()); }

    bool operator==(const GoodInvolution&) const = default;

private:
    friend struct InvolutionCheck;
    friend InvolutionCheck verify_good_involution(const Quandle&, const std::vector<Element>&);
    explicit GoodInvolution(std::vector<Element> rho) : rho_(std::move(rho)) {}
    std::vector<Element> rho_;
};

struct InvolutionViolation {
    int condition;                   // 0: not an involution, 1: rho(x^y) != rho(x)^y,
                                     // 2: x^rho(y) != x^(y^-1)
    std::array<Element, 2> witness;  // condition 0: {x,0}; conditions 1,2: {x,y}
    std::string detail;
};

struct InvolutionCheck {
    std::optional<GoodInvolution> involution;
    std::vector<InvolutionViolation> violations;

    bool ok() const { return involution.has_value(); }
};

inline InvolutionCheck verify_good_involution(const Quandle& q, const std::vector<Element>& rho) {
    const int n = q.size();
    if (static_cast<int>(rho.size()) != n)
        throw input_error("good involution: permutation length does not match quandle size");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (Element v : rho) {
        if (v < 0 || v >= n) throw input_error("good involution: entry out of range");
        if (hit[static_cast<std::size_t>(v)])
            throw input_error("good involution: array is not a permutation");
        hit[static_cast<std::size_t>(v)] = true;
    }

    InvolutionCheck check;
    auto r = [&](Element x) { return rho[static_cast<std::size_t>(x)]; };
    for (Element x = 0; x < n; ++x)
        if (r(r(x)) != x) {
            std::ostringstream os;
            os << "rho(rho(" << x << ")) = " << r(r(x)) << " != " << x;
            check.violations.push_back({0, {x, 0}, os.str()});
        }
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (r(q.op(x, y)) != q.op(r(x), y)) {
                std::ostringstream os;
                os << "rho(" << x << "^" << y << ") = " << r(q.op(x, y)) << " but rho(" << x
                   << ")^" << y << " = " << q.op(r(x), y);
                check.violations.push_back({1, {x, y}, os.str()});
            }
            if (q.op(x, r(y)) != q.inverse_op(x, y)) {
                std::ostringstream os;
                os << x << "^rho(" << y << ") = " << q.op(x, r(y)) << " but " << x << "^(" << y
                   << "^-1) = " << q.inverse_op(x, y);
                check.violations.push_back({2, {x, y}, os.str()});
            }
        }

    if (check.violations.empty()) check.involution = GoodInvolution(rho);
    return check;
}

// All good involutions, lexicographically ordered by permutation array.
// May legitimately be empty (e.g. non-involutory quandles with no
// column-inverting symmetry).
inline std::vector<GoodInvolution> enumerate_good_involutions(const Quandle& q) {
    const int n = q.size();
    std::vector<GoodInvolution> out;
    std::vector<Element> perm(static_cast<std::size_t>(n), -1);

    // generate involutions only: each element is fixed or paired with a later one
    auto emit = [&]() {
        InvolutionCheck c = verify_good_involution(q, perm);
        if (c.ok()) out.push_back(*std::move(c.involution));
    };
    auto rec = [&](auto&& self, int i) -> void {
        while (i < n && perm[static_cast<std::size_t>(i)] >= 0) ++i;
        if (i == n) {
            emit();
            return;
        }
        perm[static_cast<std::size_t>(i)] = i;
        self(self, i + 1);
        perm[static_cast<std::size_t>(i)] = -1;
        for (int j = i + 1; j < n; ++j) {
            if (perm[static_cast<std::size_t>(j)] >= 0) continue;
            perm[static_cast<std::size_t>(i)] = j;
            perm[static_cast<std::size_t>(j)] = i;
            self(self, i + 1);
            perm[static_cast<std::size_t>(i)] = -1;
            perm[static_cast<std::size_t>(j)] = -1;
        }
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end(),
              [](const GoodInvolution& a, const GoodInvolution& b) { return a.perm() < b.perm(); });
    return out;
}

struct SymmetricQuandle {
    Quandle quandle;
    GoodInvolution rho;

    int size() const { return quandle.size(); }

    bool operator==(const SymmetricQuandle&) const = default;
};

inline SymmetricQuandle make_symmetric_quandle(const Quandle& q, const std::vector<Element>& rho) {
    InvolutionCheck c = verify_good_involution(q, rho);
    if (!c.ok())
        throw constraint_error("not a good involution: " + c.violations.front().detail);
    return SymmetricQuandle{q, *std::move(c.involution)};
}

// (P_3, rho) with rho = [0,2,1].
inline SymmetricQuandle make_p3_symmetric() {
    return make_symmetric_quandle(make_p3(), {0, 2, 1});
}

}  // namespace qf
