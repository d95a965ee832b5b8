#include "linkhom/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

std::string join(const std::vector<Int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ",";
        out << xs[i];
    }
    return out.str();
}

}  // namespace

Int WeightVector::sum() const {
    Int total = 0;
    for (const Int& w : weights_) total += w;
    return total;
}

WeightVector WeightVector::permuted(const std::vector<std::size_t>& perm) const {
    std::vector<Int> out(weights_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out[i] = weights_[perm[i]];
    return WeightVector(std::move(out));
}

WeightVector validate_weights(std::vector<Int> raw) {
    if (raw.size() < 2)
        throw InvalidInput("need at least two weights, got " + std::to_string(raw.size()));
    for (const Int& w : raw) {
        if (w <= 0)
            throw NonPositiveWeight("weights must be positive: (" + join(raw) + ")");
    }
    Int g = gcd_all(raw);
    if (g != 1)
        throw NonPrimitive("weights (" + join(raw) + ") have common factor " + g.str());
    return WeightVector(std::move(raw));
}

LinkDescriptor link_descriptor(const WeightVector& w, const Int& degree) {
    for (const Int& wi : w.weights()) {
        if (wi >= degree)
            throw WeightExceedsDegree("weight " + wi.str() + " >= degree " + degree.str());
    }
    LinkDescriptor link{w, degree, {}, {}};
    link.u.reserve(w.size());
    link.v.reserve(w.size());
    for (const Int& wi : w.weights()) {
        Int g = gcd(degree, wi);
        link.u.push_back(degree / g);
        link.v.push_back(wi / g);
    }
    return link;
}

Int fano_degree(const WeightVector& w) {
    return w.sum() - 1;
}

bool form_is_valid(const PolynomialForm& form, const WeightVector& w, const Int& degree) {
    const std::size_t m = w.size();
    if (form.exponents.size() != m || form.ordering.size() != m) return false;
    std::vector<bool> seen(m, false);
    for (std::size_t i : form.ordering) {
        if (i >= m || seen[i]) return false;
        seen[i] = true;
    }
    std::vector<Int> ordered(m);
    for (std::size_t i = 0; i < m; ++i) ordered[i] = w[form.ordering[i]];

    if (form.variant == PolynomialVariant::BrieskornPham) {
        for (std::size_t i = 0; i < m; ++i) {
            if (form.ordering[i] != i) return false;
            if (form.exponents[i] < 2) return false;
            if (form.exponents[i] * ordered[i] != degree) return false;
        }
        return true;
    }
    if (form.exponents[0] * ordered[0] != degree) return false;
    for (std::size_t i = 1; i < m; ++i) {
        if (form.exponents[i] < 1) return false;
        if (ordered[i - 1] + form.exponents[i] * ordered[i] != degree) return false;
    }
    return true;
}

std::optional<PolynomialForm> bp_exponents(const WeightVector& w, const Int& degree) {
    link_descriptor(w, degree);  // enforce w_i < degree
    PolynomialForm form;
    form.variant = PolynomialVariant::BrieskornPham;
    form.exponents.reserve(w.size());
    form.ordering.resize(w.size());
    std::iota(form.ordering.begin(), form.ordering.end(), std::size_t{0});
    for (const Int& wi : w.weights()) {
        if (degree % wi != 0) return std::nullopt;
        Int a = degree / wi;
        // a >= 2 follows from w_i < d once the division is exact
        form.exponents.push_back(std::move(a));
    }
    return form;
}

namespace {

// Chain solve in the given order; shared by the single test and the
// permutation sweep.
std::optional<PolynomialForm> chain_solve(const std::vector<Int>& w, const Int& degree,
                                          std::vector<std::size_t> ordering) {
    PolynomialForm form;
    form.variant = PolynomialVariant::OrlikChain;
    form.ordering = std::move(ordering);
    form.exponents.reserve(w.size());

    if (degree % w[0] != 0) return std::nullopt;
    form.exponents.push_back(degree / w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
        Int rem = degree - w[i - 1];
        if (rem < w[i] || rem % w[i] != 0) return std::nullopt;
        Int a = rem / w[i];
        if (a == 1) form.unit_exponents.push_back(i);
        form.exponents.push_back(std::move(a));
    }
    return form;
}

}  // namespace

std::optional<PolynomialForm> chain_exponents(const WeightVector& w, const Int& degree) {
    link_descriptor(w, degree);
    std::vector<std::size_t> identity(w.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return chain_solve(w.weights(), degree, std::move(identity));
}

std::vector<PolynomialForm> find_chain_orderings(const WeightVector& w, const Int& degree) {
    link_descriptor(w, degree);
    const std::size_t m = w.size();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    std::vector<PolynomialForm> out;
    std::set<std::vector<Int>> seen;  // tied weights: one report per weight sequence
    std::vector<Int> ordered(m);
    do {
        for (std::size_t i = 0; i < m; ++i) ordered[i] = w[perm[i]];
        if (!seen.insert(ordered).second) continue;
        if (auto form = chain_solve(ordered, degree, perm)) out.push_back(std::move(*form));
    } while (std::next_permutation(perm.begin(), perm.end()));
    // next_permutation visits permutations in lexicographic order, so `out`
    // is already sorted by permutation.
    return out;
}

Int milnor_number(const PolynomialForm& form) {
    if (form.variant != PolynomialVariant::BrieskornPham)
        throw WrongVariant("milnor_number needs a Brieskorn-Pham form");
    Int mu = 1;
    for (const Int& a : form.exponents) mu *= a - 1;
    return mu;
}

}  // namespace linkhom
