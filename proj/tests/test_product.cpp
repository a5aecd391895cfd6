#include "doctest.h"
#include "oracle.hpp"
#include "unimod/errors.hpp"
#include "unimod/product.hpp"

using namespace unimod;

namespace {

const Polynomial kB1{1, 1, 1, 1, 1, 2, 2, 2, 1, 1, 1, 1, 1};

Polynomial from_oracle(const oracle::Coeffs& c) { return Polynomial(std::vector<BigInt>(c.begin(), c.end())); }

BigInt pow4(unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 4, e);
    return r;
}

}  // namespace

TEST_CASE("build_product main family examples") {
    CHECK(build_product(MainFamily{0}) == Polynomial{1, 1, 1, 1});
    CHECK(build_product(MainFamily{1}) == kB1);
    CHECK(coeff(kB1, 6) == 2);
}

TEST_CASE("build_product general family") {
    GeneralFamily g{{{Sign::minus, 1}, {Sign::minus, 2}}};
    CHECK(build_product(g) == Polynomial{1, -1, -1, 1});
    CHECK(build_product(GeneralFamily{}) == Polynomial::one());
    CHECK_THROWS_AS((void)build_product(GeneralFamily{{{Sign::plus, 0}}}), std::invalid_argument);
}

TEST_CASE("main family matches the naive oracle and has degree 3(n+1)^2") {
    for (std::size_t n = 0; n <= 8; ++n) {
        const Polynomial b = build_product(MainFamily{n});
        CHECK(b.degree() == main_degree(n));
        CHECK(b == from_oracle(oracle::expand_main(n)));
        for (const auto& c : b.coeffs()) CHECK(c > 0);
    }
}

TEST_CASE("recurrence_step examples") {
    const Polynomial b0 = build_product(MainFamily{0});
    const Polynomial b1 = recurrence_step(b0, 1);
    CHECK(b1 == kB1);
    CHECK(coeff(b1, 0) == 1);
    CHECK(coeff(b1, 5) == 2);
    CHECK_THROWS_AS((void)recurrence_step(kB1, 1), DegreeMismatch);
    CHECK_THROWS_AS((void)recurrence_step(b0, 0), std::invalid_argument);
}

TEST_CASE("recurrence chain equals direct build") {
    Polynomial chain = build_product(MainFamily{0});
    for (std::size_t n = 1; n <= 25; ++n) {
        chain = recurrence_step(chain, n);
        REQUIRE(chain == build_product(MainFamily{n}));
    }
}

TEST_CASE("mass at q = 1 and q = -1") {
    CHECK(evaluate_at_one(kB1) == 16);
    CHECK(evaluate_at_minus_one(kB1) == 0);
    Polynomial b = build_product(MainFamily{0});
    for (unsigned n = 0; n <= 30; ++n) {
        if (n > 0) b = recurrence_step(b, n);
        CHECK(evaluate_at_one(b) == pow4(n + 1));
        CHECK(evaluate_at_minus_one(b) == 0);
    }
}

TEST_CASE("almkvist quotient: degree and integrality") {
    for (std::size_t r : {2u, 3u, 4u, 5u}) {
        for (std::size_t n : {1u, 2u, 5u, 11u}) {
            const Polynomial p = build_product(AlmkvistFamily{r, n});
            CHECK(p.degree() == (r - 1) * n * (n + 1) / 2);
            for (const auto& c : p.coeffs()) CHECK(c >= 0);
            // Value at q = 1 is prod_k r = r^n.
            BigInt rn;
            mpz_ui_pow_ui(rn.get_mpz_t(), r, n);
            CHECK(evaluate_at_one(p) == rn);
        }
    }
}

TEST_CASE("almkvist r = 2 is the distinct-parts product prod (1 + q^k)") {
    for (std::size_t n = 1; n <= 12; ++n) {
        GeneralFamily g;
        for (std::size_t k = 1; k <= n; ++k) g.factors.push_back({Sign::plus, k});
        CHECK(build_product(AlmkvistFamily{2, n}) == build_product(g));
    }
}

TEST_CASE("almkvist validation") {
    CHECK_THROWS_AS((void)build_product(AlmkvistFamily{1, 3}), std::invalid_argument);
    CHECK_THROWS_AS((void)build_product(AlmkvistFamily{3, 0}), std::invalid_argument);
}

TEST_CASE("family keys") {
    CHECK(family_key(MainFamily{12}) == "main_12");
    CHECK(family_key(AlmkvistFamily{3, 20}) == "almkvist_r3_n20");
    CHECK(family_key(borwein_family(3)) == family_key(borwein_family(3)));
    CHECK(family_key(borwein_family(3)) != family_key(borwein_family(4)));
    CHECK(family_key(borwein_family(3)).rfind("general_", 0) == 0);
}
