#pragma once

#include <cstddef>
#include <vector>

#include "linkhom/homology.hpp"
#include "linkhom/int_types.hpp"
#include "linkhom/weights.hpp"

namespace linkhom {

// Default caps on the Milnor number mu = prod(a_i - 1). Matrix work is
// O(mu^3); the equivalence sweep stays smaller than plain construction.
inline constexpr long long kDefaultMatrixCap = 4096;
inline constexpr long long kDefaultSweepCap = 1000;

/// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    static IntMatrix identity(std::size_t n);
};

/// Integral monodromy h_* of a Brieskorn-Pham Milnor fiber on the Pham
/// basis: the Kronecker product of the companion matrices of
/// 1 + t + ... + t^{a_i - 1}, kept in factored form (mu x mu dense
/// expansion on demand).
class MonodromyMatrix {
public:
    std::size_t size() const { return size_; }
    const std::vector<Int>& exponents() const { return exponents_; }

    /// Block for exponent a_i: (a_i - 1) x (a_i - 1), entries in {-1,0,1}.
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// Full mu x mu matrix, entries in {-1,0,1}.
    IntMatrix dense() const;

    /// Same expansion, raw row-major entries.
    std::vector<int> dense_entries() const;

    /// lcm of the exponents; the order of h_* divides it.
    Int order_bound() const;

    /// Exact check of h_*^power = identity via the factored blocks.
    bool power_is_identity(const Int& power) const;

private:
    friend MonodromyMatrix pham_monodromy(const std::vector<Int>&, const Int&);
    MonodromyMatrix() = default;

    std::vector<Int> exponents_;
    std::vector<std::vector<int>> blocks_;
    std::size_t size_ = 0;
};

MonodromyMatrix pham_monodromy(const std::vector<Int>& exponents,
                               const Int& cap = kDefaultMatrixCap);

/// Multiplicity of eigenvalue 1 of the monodromy: the number of tuples
/// (j_0,...,j_n) with 1 <= j_i <= a_i - 1 and sum j_i/a_i integral,
/// counted by full enumeration. Equals the middle Betti number of the link.
Int eigen1_count(const std::vector<Int>& exponents, const Int& cap = kDefaultMatrixCap);

/// Invariant factors s_1 | s_2 | ..., nonzero entries first in
/// divisibility order, one trailing zero per unit of cokernel free rank.
struct SnfResult {
    std::vector<Int> invariant_factors;
};

/// Smith normal form by elimination, pivoting on the entry of minimum
/// nonzero absolute value. Exact arbitrary-precision arithmetic;
/// deterministic for a given input.
SnfResult smith_normal_form(IntMatrix m);

/// Canonical weights of a Brieskorn-Pham exponent list: d = lcm(a_i),
/// w_i = d/a_i, reduced to a primitive vector.
LinkDescriptor bp_link(const std::vector<Int>& exponents);

/// Independent homology of the Brieskorn-Pham link via
/// H_{n-1}(L) = coker(I - h_*): Betti number from the zero invariant
/// factors (cross-checked against eigen1_count), torsion from the nonunit
/// ones, reported largest first. Requires n >= 2.
HomologyResult oracle_homology(const std::vector<Int>& exponents,
                               const Int& cap = kDefaultMatrixCap);

namespace detail {

/// Elimination backend of oracle_homology, exposed for direct testing.
/// Computes the invariant factors of coker(m) for a square matrix whose
/// cokernel torsion is annihilated by modulus/2; entries stay bounded by
/// the modulus throughout. Nonunit factors largest-first; `free_rank`
/// receives the cokernel's free rank.
std::vector<long long> bounded_cokernel_factors(std::vector<long long> m, std::size_t mu,
                                                long long modulus, std::size_t& free_rank);

}  // namespace detail

}  // namespace linkhom
