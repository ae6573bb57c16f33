#pragma once

// Kernel of the symmetric 3-cocycle conditions over a prime field.
//
// Conditions (i)-(iii) are linear in the values phi(a,b,c), so the Z_p-valued
// cocycles of (X, rho) form the null space of one big condition matrix with
// |X|^3 variables. Solved by exact Gaussian elimination mod p.

#include <cstddef>
#include <numeric>
#include <vector>

#include "quandleforge/cocycle.hpp"
#include "quandleforge/errors.hpp"
#include "quandleforge/quandle.hpp"

namespace qf {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Size guard: the condition matrix has ~|X|^4 rows.
inline constexpr int kKernelSizeGuard = 12;

struct FieldCocycleSpace {
    SymmetricQuandle sq;
    int p = 2;
    // Basis of the solution space; each vector has length n^3, indexed
    // lexicographically: value at (a,b,c) sits at a*n^2 + b*n + c.
    std::vector<std::vector<int>> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

namespace detail {

inline int mod_p(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// All condition instances as sparse rows over the n^3 variables.
inline std::vector<std::vector<std::pair<int, int>>> cocycle_condition_rows(
    const SymmetricQuandle& sq, int p) {
    const Quandle& q = sq.quandle;
    const GoodInvolution& rho = sq.rho;
    const int n = q.size();
    auto var = [n](Element a, Element b, Element c) { return (a * n + b) * n + c; };

    std::vector<std::vector<std::pair<int, int>>> rows;
    auto add_row = [&](std::initializer_list<std::pair<int, int>> terms) {
        std::vector<int> coef(static_cast<std::size_t>(n) * n * n, 0);
        std::vector<std::pair<int, int>> row;
        for (auto [v, c] : terms) coef[static_cast<std::size_t>(v)] += c;
        for (int v = 0; v < n * n * n; ++v) {
            int c = mod_p(coef[static_cast<std::size_t>(v)], p);
            if (c != 0) row.emplace_back(v, c);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    };

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                for (Element d = 0; d < n; ++d)
                    add_row({{var(a, c, d), 1},
                             {var(q.op(a, b), c, d), -1},
                             {var(a, b, d), -1},
                             {var(q.op(a, c), q.op(b, c), d), 1},
                             {var(a, b, c), 1},
                             {var(q.op(a, d), q.op(b, d), q.op(c, d)), -1}});
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            add_row({{var(a, a, b), 1}});
            add_row({{var(a, b, b), 1}});
        }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c) {
                add_row({{var(a, b, c), 1}, {var(rho(a), b, c), 1}});
                add_row({{var(a, b, c), 1}, {var(q.op(a, b), rho(b), c), 1}});
                add_row({{var(a, b, c), 1}, {var(q.op(a, c), q.op(b, c), rho(c)), 1}});
            }
    return rows;
}

inline int inverse_mod_p(int a, int p) {  // p prime, a != 0 mod p
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {  // a^(p-2)
        if (e & 1) r = static_cast<int>(static_cast<long long>(r) * a % p);
        a = static_cast<int>(static_cast<long long>(a) * a % p);
    }
    return r;
}

// Incremental reduced row echelon form over Z_p. Rows are inserted one at a
// time; `pivot_of` maps column -> index into `rows` (or -1).
struct RrefAccumulator {
    int p;
    int cols;
    std::vector<std::vector<int>> rows;
    std::vector<int> pivot_of;

    RrefAccumulator(int p_, int cols_) : p(p_), cols(cols_), pivot_of(static_cast<std::size_t>(cols_), -1) {}

    void insert(std::vector<int> row) {
        for (int c = 0; c < cols; ++c) {
            if (row[static_cast<std::size_t>(c)] == 0) continue;
            int pr = pivot_of[static_cast<std::size_t>(c)];
            if (pr < 0) {
                // normalize and back-eliminate this column from earlier rows
                int inv = inverse_mod_p(row[static_cast<std::size_t>(c)], p);
                for (auto& v : row) v = static_cast<int>(static_cast<long long>(v) * inv % p);
                for (auto& existing : rows) {
                    int f = existing[static_cast<std::size_t>(c)];
                    if (f == 0) continue;
                    for (int j = 0; j < cols; ++j)
                        existing[static_cast<std::size_t>(j)] =
                            mod_p(existing[static_cast<std::size_t>(j)] -
                                      static_cast<long long>(f) * row[static_cast<std::size_t>(j)],
                                  p);
                }
                pivot_of[static_cast<std::size_t>(c)] = static_cast<int>(rows.size());
                rows.push_back(std::move(row));
                return;
            }
            int f = row[static_cast<std::size_t>(c)];
            const auto& pivot_row = rows[static_cast<std::size_t>(pr)];
            for (int j = 0; j < cols; ++j)
                row[static_cast<std::size_t>(j)] =
                    mod_p(row[static_cast<std::size_t>(j)] -
                              static_cast<long long>(f) * pivot_row[static_cast<std::size_t>(j)],
                          p);
        }
        // fully reduced to zero: dependent row, dropped
    }
};

}  // namespace detail

// Kernel basis with an explicit variable elimination order: `var_order` is a
// permutation of 0..n^3-1; earlier entries become pivot candidates first.
// The returned basis is expressed in the canonical lexicographic indexing.
inline FieldCocycleSpace cocycle_kernel_basis_ordered(const SymmetricQuandle& sq, int p,
                                                      const std::vector<int>& var_order) {
    const int n = sq.quandle.size();
    if (!is_prime(p)) throw input_error("cocycle kernel: p must be prime");
    if (n > kKernelSizeGuard)
        throw input_error("cocycle kernel: quandle too large (guard |X| <= 12)");
    const int nvars = n * n * n;
    if (static_cast<int>(var_order.size()) != nvars)
        throw input_error("cocycle kernel: variable order must be a permutation of 0..n^3-1");

    // position of each original variable in the working (permuted) coordinates
    std::vector<int> pos(static_cast<std::size_t>(nvars), -1);
    for (int j = 0; j < nvars; ++j) {
        int v = var_order[static_cast<std::size_t>(j)];
        if (v < 0 || v >= nvars || pos[static_cast<std::size_t>(v)] != -1)
            throw input_error("cocycle kernel: variable order must be a permutation of 0..n^3-1");
        pos[static_cast<std::size_t>(v)] = j;
    }

    detail::RrefAccumulator rref(p, nvars);
    for (const auto& sparse : detail::cocycle_condition_rows(sq, p)) {
        std::vector<int> row(static_cast<std::size_t>(nvars), 0);
        for (auto [v, c] : sparse) row[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = c;
        rref.insert(std::move(row));
    }

    FieldCocycleSpace space{sq, p, {}};
    for (int c = 0; c < nvars; ++c) {
        if (rref.pivot_of[static_cast<std::size_t>(c)] >= 0) continue;  // pivot: bound variable
        std::vector<int> vec(static_cast<std::size_t>(nvars), 0);
        vec[static_cast<std::size_t>(var_order[static_cast<std::size_t>(c)])] = 1;
        for (int pc = 0; pc < nvars; ++pc) {
            int pr = rref.pivot_of[static_cast<std::size_t>(pc)];
            if (pr < 0) continue;
            int coef = rref.rows[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c)];
            if (coef != 0)
                vec[static_cast<std::size_t>(var_order[static_cast<std::size_t>(pc)])] =
                    detail::mod_p(-coef, p);
        }
        space.basis.push_back(std::move(vec));
    }
    return space;
}

// Deterministic basis with the canonical lexicographic variable order on
// (a,b,c).
inline FieldCocycleSpace cocycle_kernel_basis(const SymmetricQuandle& sq, int p) {
    std::vector<int> order(static_cast<std::size_t>(sq.quandle.size()) * sq.quandle.size() *
                           sq.quandle.size());
    std::iota(order.begin(), order.end(), 0);
    return cocycle_kernel_basis_ordered(sq, p, order);
}

// Mod-p variant of the cocycle checker for a dense value table (length n^3,
// lexicographic indexing). Returns the violated condition instances.
inline std::vector<CocycleViolation> verify_cocycle3_modp(const SymmetricQuandle& sq, int p,
                                                          const std::vector<int>& values) {
    const int n = sq.quandle.size();
    if (static_cast<int>(values.size()) != n * n * n)
        throw input_error("mod-p cocycle check: value table has wrong length");
    std::vector<CocycleViolation> violations;
    for (const auto& sparse : detail::cocycle_condition_rows(sq, p)) {
        long long sum = 0;
        for (auto [v, c] : sparse) sum += static_cast<long long>(c) * values[static_cast<std::size_t>(v)];
        if (detail::mod_p(sum, p) != 0 && violations.size() < kCocycleViolationCap)
            violations.push_back({0, 0, {0, 0, 0, 0}, "mod-p condition row violated"});
    }
    return violations;
}

// Membership of a dense vector in the span of the basis, by elimination.
inline bool in_span(const FieldCocycleSpace& space, const std::vector<int>& vec) {
    const int nvars = static_cast<int>(vec.size());
    detail::RrefAccumulator rref(space.p, nvars);
    for (const auto& b : space.basis) {
        if (static_cast<int>(b.size()) != nvars) throw input_error("in_span: length mismatch");
        rref.insert(b);
    }
    std::size_t rank_before = rref.rows.size();
    std::vector<int> reduced(vec.size());
    for (std::size_t i = 0; i < vec.size(); ++i) reduced[i] = detail::mod_p(vec[i], space.p);
    rref.insert(std::move(reduced));
    return rref.rows.size() == rank_before;
}

// Coordinate projections of an A_{s,t}-valued cocycle to dense Z_p tables:
// first the s alpha coordinates, then the t beta coordinates reduced mod p.
inline std::vector<std::vector<int>> flatten_mod_p(const Cocycle3& phi, int p) {
    const int n = phi.sq().quandle.size();
    const AbelianSignature sig = phi.signature();
    std::vector<std::vector<int>> coords(
        static_cast<std::size_t>(sig.s + sig.t),
        std::vector<int>(static_cast<std::size_t>(n) * n * n, 0));
    for (const auto& [t, v] : phi.values()) {
        std::size_t var = static_cast<std::size_t>((t[0] * n + t[1]) * n + t[2]);
        for (int i = 0; i < sig.s; ++i)
            coords[static_cast<std::size_t>(i)][var] = detail::mod_p(v.alphas()[static_cast<std::size_t>(i)], p);
        for (int j = 0; j < sig.t; ++j)
            coords[static_cast<std::size_t>(sig.s + j)][var] =
                detail::mod_p(v.betas()[static_cast<std::size_t>(j)], p);
    }
    return coords;
}

}  // namespace qf
