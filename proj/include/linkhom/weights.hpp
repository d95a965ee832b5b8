#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linkhom/int_types.hpp"

namespace linkhom {

/// Weights (w_0,...,w_n) of a weighted C* action on C^{n+1}.
/// Invariants: every w_i >= 1, gcd(w_0,...,w_n) = 1, at least two entries.
class WeightVector {
public:
    const std::vector<Int>& weights() const { return weights_; }
    const Int& operator[](std::size_t i) const { return weights_[i]; }
    std::size_t size() const { return weights_.size(); }

    /// n, where the link has dimension 2n-1.
    std::size_t dim_parameter() const { return weights_.size() - 1; }

    Int sum() const;

    /// Reorders the weights by `perm` (perm[i] = index of the weight that
    /// moves to slot i). The invariants are permutation-stable.
    WeightVector permuted(const std::vector<std::size_t>& perm) const;

    bool operator==(const WeightVector& other) const = default;

private:
    friend WeightVector validate_weights(std::vector<Int> raw);
    explicit WeightVector(std::vector<Int> w) : weights_(std::move(w)) {}

    std::vector<Int> weights_;
};

/// Checks positivity and primitivity (gcd 1) of a raw weight list.
/// Throws NonPositiveWeight or NonPrimitive; input order is preserved.
WeightVector validate_weights(std::vector<Int> raw);

/// Weight vector plus degree of homogeneity, with the reduced pairs
/// u_i = d/gcd(d,w_i), v_i = w_i/gcd(d,w_i) that all homology formulas
/// consume. Requires w_i < d for every i.
struct LinkDescriptor {
    WeightVector weights;
    Int degree;
    std::vector<Int> u;
    std::vector<Int> v;

    std::size_t size() const { return weights.size(); }
    std::size_t dim_parameter() const { return weights.dim_parameter(); }
};

LinkDescriptor link_descriptor(const WeightVector& w, const Int& degree);

/// Degree convention for Fano hypersurface catalogs: d = (sum of weights) - 1.
Int fano_degree(const WeightVector& w);

enum class PolynomialVariant {
    BrieskornPham,  // z_0^{a_0} + ... + z_n^{a_n}
    OrlikChain,     // z_0^{a_0} + z_0 z_1^{a_1} + ... + z_{n-1} z_n^{a_n}
};

/// Witness that a weight/degree pair is realized by one of the two
/// polynomial shapes. `ordering` re-indexes the weights (identity for
/// BrieskornPham); `exponents` are relative to that order.
struct PolynomialForm {
    PolynomialVariant variant = PolynomialVariant::BrieskornPham;
    std::vector<Int> exponents;
    std::vector<std::size_t> ordering;
    // Chain slots with a_i = 1; formally valid but the smoothness of the
    // corresponding link is not checked, so callers get a warning marker.
    std::vector<std::size_t> unit_exponents;

    bool operator==(const PolynomialForm& other) const = default;
};

/// Re-checks the defining constraints of `form` against (w, d).
bool form_is_valid(const PolynomialForm& form, const WeightVector& w, const Int& degree);

/// Brieskorn-Pham test: a_i = d/w_i must be an integer >= 2 for every i.
/// Non-representability is an ordinary empty result.
std::optional<PolynomialForm> bp_exponents(const WeightVector& w, const Int& degree);

/// Chain test in the given weight order: a_0 w_0 = d and
/// w_{i-1} + a_i w_i = d with every a_i >= 1. Empty when no such
/// exponents exist.
std::optional<PolynomialForm> chain_exponents(const WeightVector& w, const Int& degree);

/// Brute-force sweep over all (n+1)! orderings of w, collecting every one
/// that admits chain exponents. Orderings that produce the same weight
/// sequence (tied weights) are reported once, under the lexicographically
/// smallest permutation; the result is sorted by permutation, so the
/// first entry is the canonical representative.
std::vector<PolynomialForm> find_chain_orderings(const WeightVector& w, const Int& degree);

/// Milnor number of a Brieskorn-Pham form: product of (a_i - 1).
Int milnor_number(const PolynomialForm& form);

}  // namespace linkhom
