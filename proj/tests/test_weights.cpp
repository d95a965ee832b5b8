#include <algorithm>

#include "doctest.h"
#include "linkhom/errors.hpp"
#include "linkhom/weights.hpp"
#include "test_support.hpp"

using namespace linkhom;

TEST_CASE("validate_weights accepts catalog rows and preserves order") {
    WeightVector w = validate_weights({75, 10, 163, 331, 247});
    CHECK(w.size() == 5);
    CHECK(w.dim_parameter() == 4);
    CHECK(w[0] == 75);
    CHECK(w[4] == 247);

    CHECK(validate_weights({1, 1, 1, 1, 1}).sum() == 5);
}

TEST_CASE("validate_weights rejects malformed input") {
    CHECK_THROWS_AS(validate_weights({2, 4, 6}), NonPrimitive);
    CHECK_THROWS_AS(validate_weights({0, 1}), NonPositiveWeight);
    CHECK_THROWS_AS(validate_weights({-3, 5}), NonPositiveWeight);
    CHECK_THROWS_AS(validate_weights({7}), InvalidInput);
}

TEST_CASE("link_descriptor reduces degree/weight pairs") {
    LinkDescriptor link = link_descriptor(validate_weights({62, 124, 155, 9, 85}), 434);
    CHECK(link.u == std::vector<Int>{7, 7, 14, 434, 434});
    CHECK(link.v == std::vector<Int>{1, 2, 5, 9, 85});

    LinkDescriptor ones = link_descriptor(validate_weights({1, 1, 1}), 5);
    CHECK(ones.u == std::vector<Int>{5, 5, 5});
    CHECK(ones.v == std::vector<Int>{1, 1, 1});

    CHECK_THROWS_AS(link_descriptor(validate_weights({1, 1, 1}), 1), WeightExceedsDegree);
}

TEST_CASE("link_descriptor identities hold on random inputs") {
    std::mt19937_64 gen(101);
    for (int it = 0; it < 200; ++it) {
        std::size_t count = 2 + gen() % 5;
        LinkDescriptor link = test::random_link(gen, count);
        Int u_lcm = lcm_all(link.u);
        CHECK(link.degree % u_lcm == 0);
        for (std::size_t i = 0; i < link.size(); ++i) {
            Int g = gcd(link.degree, link.weights[i]);
            CHECK(link.u[i] * g == link.degree);
            CHECK(link.v[i] * g == link.weights[i]);
            CHECK(gcd(link.u[i], link.v[i]) == 1);
            CHECK(link.u[i] * link.v[i] * g * g == link.degree * link.weights[i]);
        }
    }
}

TEST_CASE("fano_degree is sum minus one") {
    CHECK(fano_degree(validate_weights({75, 10, 163, 331, 247})) == 825);
    CHECK(fano_degree(validate_weights({45, 36, 27, 11, 107})) == 225);
    CHECK(fano_degree(validate_weights({1, 1})) == 1);
}

TEST_CASE("bp_exponents") {
    auto uniform = bp_exponents(validate_weights({1, 1, 1, 1, 1}), 5);
    REQUIRE(uniform.has_value());
    CHECK(uniform->variant == PolynomialVariant::BrieskornPham);
    CHECK(uniform->exponents == std::vector<Int>{5, 5, 5, 5, 5});
    CHECK(form_is_valid(*uniform, validate_weights({1, 1, 1, 1, 1}), 5));

    // 163 is prime and does not divide 825
    CHECK(!bp_exponents(validate_weights({75, 10, 163, 331, 247}), 825).has_value());

    auto w235 = bp_exponents(validate_weights({2, 3, 5}), 30);
    REQUIRE(w235.has_value());
    CHECK(w235->exponents == std::vector<Int>{15, 10, 6});
}

TEST_CASE("chain_exponents in the given order") {
    auto row1 = chain_exponents(validate_weights({75, 10, 163, 331, 247}), 825);
    REQUIRE(row1.has_value());
    CHECK(row1->exponents == std::vector<Int>{11, 75, 5, 2, 2});
    CHECK(row1->unit_exponents.empty());
    CHECK(form_is_valid(*row1, validate_weights({75, 10, 163, 331, 247}), 825));

    auto row5 = chain_exponents(validate_weights({100, 350, 9, 113, 229}), 800);
    REQUIRE(row5.has_value());
    CHECK(row5->exponents == std::vector<Int>{8, 2, 50, 7, 3});

    // 825 - 10 = 815 is not divisible by 75
    CHECK(!chain_exponents(validate_weights({10, 75, 163, 247, 331}), 825).has_value());
}

TEST_CASE("chain exponent a_i = 1 is accepted with a warning marker") {
    auto form = chain_exponents(validate_weights({1, 1}), 2);
    REQUIRE(form.has_value());
    CHECK(form->exponents == std::vector<Int>{2, 1});
    CHECK(form->unit_exponents == std::vector<std::size_t>{1});
}

TEST_CASE("find_chain_orderings recovers the chain order of catalog rows") {
    WeightVector ascending = validate_weights({10, 75, 163, 247, 331});
    std::vector<PolynomialForm> forms = find_chain_orderings(ascending, 825);
    REQUIRE(!forms.empty());

    bool found = false;
    for (const PolynomialForm& form : forms) {
        std::vector<Int> order;
        for (std::size_t i : form.ordering) order.push_back(ascending[i]);
        if (order == std::vector<Int>{75, 10, 163, 331, 247}) {
            found = true;
            CHECK(form.exponents == std::vector<Int>{11, 75, 5, 2, 2});
        }
    }
    CHECK(found);

    WeightVector row3 = validate_weights({9, 174, 277, 467, 649});
    std::vector<PolynomialForm> forms3 = find_chain_orderings(row3, 1575);
    bool found3 = false;
    for (const PolynomialForm& form : forms3) {
        std::vector<Int> order;
        for (std::size_t i : form.ordering) order.push_back(row3[i]);
        if (order == std::vector<Int>{9, 174, 467, 277, 649}) {
            found3 = true;
            CHECK(form.exponents == std::vector<Int>{175, 9, 3, 4, 2});
        }
    }
    CHECK(found3);
}

TEST_CASE("find_chain_orderings reports tied weights once") {
    std::vector<PolynomialForm> forms = find_chain_orderings(validate_weights({1, 1}), 2);
    REQUIRE(forms.size() == 1);
    CHECK(forms[0].exponents == std::vector<Int>{2, 1});
    CHECK(forms[0].unit_exponents == std::vector<std::size_t>{1});
}

TEST_CASE("find_chain_orderings contains the identity-order solution and is perm-sorted") {
    std::mt19937_64 gen(202);
    for (int it = 0; it < 50; ++it) {
        LinkDescriptor link = test::random_link(gen, 2 + gen() % 3, 12);
        std::vector<PolynomialForm> forms = find_chain_orderings(link.weights, link.degree);
        CHECK(std::is_sorted(forms.begin(), forms.end(),
                             [](const PolynomialForm& a, const PolynomialForm& b) {
                                 return a.ordering < b.ordering;
                             }));
        for (const PolynomialForm& form : forms) {
            CHECK(form_is_valid(form, link.weights, link.degree));
        }
        if (auto direct = chain_exponents(link.weights, link.degree)) {
            bool found = false;
            for (const PolynomialForm& form : forms) {
                std::vector<Int> order;
                for (std::size_t i : form.ordering) order.push_back(link.weights[i]);
                if (order == link.weights.weights() && form.exponents == direct->exponents)
                    found = true;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("milnor_number") {
    auto bp = [](std::vector<Int> a) {
        PolynomialForm form;
        form.variant = PolynomialVariant::BrieskornPham;
        form.exponents = std::move(a);
        return form;
    };
    CHECK(milnor_number(bp({2, 3, 5})) == 8);
    CHECK(milnor_number(bp({2, 2, 2})) == 1);
    CHECK(milnor_number(bp({3, 3, 3})) == 8);

    PolynomialForm chain;
    chain.variant = PolynomialVariant::OrlikChain;
    chain.exponents = {2, 1};
    CHECK_THROWS_AS(milnor_number(chain), WrongVariant);
}

TEST_CASE("operations are pure") {
    WeightVector w = validate_weights({10, 75, 163, 247, 331});
    CHECK(find_chain_orderings(w, 825) == find_chain_orderings(w, 825));
    CHECK(bp_exponents(w, 825) == bp_exponents(w, 825));
}
