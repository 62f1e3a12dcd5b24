/*
   Copyright 2026 The idealab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "idealab/int_ideals.hpp"
#include "idealab/rings.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace idealab;

namespace {
RingElement el(const Domain& d, long v) { return RingElement(d, v); }
}  // namespace

TEST_CASE("domain descriptors") {
    CHECK(Domain::parse("q") == Domain::rationals());
    CHECK(Domain::parse("z") == Domain::integers());
    CHECK(Domain::parse("fp:5") == Domain::prime_field(5));
    CHECK(Domain::parse("zn:6") == Domain::mod_ring(6));
    CHECK(Domain::prime_field(5).name() == "F_5");
    CHECK(Domain::mod_ring(6).name() == "Z/6");
    CHECK(Domain::mod_ring(1).one_equals_zero());
    CHECK_FALSE(Domain::prime_field(2).one_equals_zero());
    CHECK(error_kind([] { Domain::prime_field(4); }) == ErrorKind::InvalidDomain);
    CHECK(error_kind([] { Domain::mod_ring(0); }) == ErrorKind::InvalidDomain);
    CHECK(error_kind([] { Domain::parse("fp:x"); }) == ErrorKind::InvalidDomain);
    CHECK(error_kind([] { Domain::parse("r"); }) == ErrorKind::InvalidDomain);
}

TEST_CASE("canonical values") {
    const Domain z6 = Domain::mod_ring(6);
    CHECK(el(z6, -1).value() == 5);
    CHECK(el(z6, 13).value() == 1);
    const RingElement half(Domain::rationals(), mpq_class(2, 4));
    CHECK(half.value().get_num() == 1);
    CHECK(half.value().get_den() == 2);
    CHECK(RingElement(Domain::rationals(), mpq_class(3, -6)).to_string() == "-1/2");
    // 1/2 in F_5 is 3.
    CHECK(RingElement(Domain::prime_field(5), mpq_class(1, 2)).value() == 3);
    CHECK(error_kind([] { RingElement(Domain::integers(), mpq_class(1, 2)); }) == ErrorKind::BadCoefficient);
    CHECK(error_kind([] { RingElement(Domain::mod_ring(6), mpq_class(1, 2)); }) == ErrorKind::BadCoefficient);
}

TEST_CASE("ring operations") {
    const Domain f5 = Domain::prime_field(5);
    CHECK(inv(el(f5, 2)) == el(f5, 3));
    CHECK(oracle::inverse_search(2, 5) == std::vector<long long>{3});
    CHECK(mul(el(Domain::mod_ring(6), 5), el(Domain::mod_ring(6), 5)) == el(Domain::mod_ring(6), 1));
    for (const Domain& d : {Domain::integers(), Domain::rationals(), Domain::mod_ring(6), Domain::prime_field(7)})
        for (long r : {-3L, 0L, 4L}) CHECK(add(RingElement::zero(d), el(d, r)) == el(d, r));
    CHECK(inv(RingElement(Domain::rationals(), mpq_class(-2, 3))).value() == mpq_class(-3, 2));
    CHECK(pow(el(Domain::integers(), 3), 40).value() == mpq_class(mpz_class("12157665459056928801")));

    CHECK(error_kind([] { add(el(Domain::integers(), 1), el(Domain::rationals(), 1)); }) == ErrorKind::DomainMismatch);
    CHECK(error_kind([&] { inv(el(f5, 0)); }) == ErrorKind::DivisionByZero);
    CHECK(error_kind([] { inv(el(Domain::integers(), 2)); }) == ErrorKind::NoInverse);
    CHECK(error_kind([] { inv(el(Domain::mod_ring(6), 2)); }) == ErrorKind::NoInverse);
    CHECK(inv(el(Domain::integers(), -1)) == el(Domain::integers(), -1));
    CHECK(inv(el(Domain::mod_ring(1), 0)) == el(Domain::mod_ring(1), 0));
}

TEST_CASE("no silent overflow") {
    const Domain q = Domain::rationals();
    RingElement big(q, mpq_class(mpz_class("340282366920938463463374607431768211457"), 3));
    RingElement sq = mul(big, big);
    CHECK(sq.value().get_den() == 9);
    CHECK(sq.value().get_num() == mpz_class("340282366920938463463374607431768211457") * mpz_class("340282366920938463463374607431768211457"));
}

TEST_CASE("ring axioms on finite domains") {
    for (const Domain& d : {Domain::mod_ring(6), Domain::prime_field(5), Domain::mod_ring(1)}) {
        auto triples = all_triples(d);
        const auto n = d.modulus().get_ui();
        CHECK(triples.size() == n * n * n);
        auto report = check_ring_axioms(d, triples);
        CHECK(report.passed());
        CHECK(report.axioms.size() == 9);
        for (const auto& a : report.axioms) CHECK(a.checked == triples.size());
    }
    CHECK(check_ring_axioms(Domain::mod_ring(1), all_triples(Domain::mod_ring(1))).one_equals_zero);
    auto f5 = check_ring_axioms(Domain::prime_field(5), all_triples(Domain::prime_field(5)));
    REQUIRE(f5.nonzero_invertible.has_value());
    CHECK(*f5.nonzero_invertible);
    CHECK_FALSE(check_ring_axioms(Domain::mod_ring(6), all_triples(Domain::mod_ring(6))).nonzero_invertible.has_value());
}

TEST_CASE("ring axioms on random rationals") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 50);
    const Domain q = Domain::rationals();
    auto draw = [&] { return RingElement(q, mpq_class(num(rng), den(rng))); };
    std::vector<ElementTriple> samples;
    for (int i = 0; i < 2000; ++i) samples.push_back({draw(), draw(), draw()});
    auto report = check_ring_axioms(q, samples);
    CHECK(report.passed());
    REQUIRE(report.nonzero_invertible.has_value());
    CHECK(*report.nonzero_invertible);
}

TEST_CASE("units of Z/n match gcd and inverse search") {
    CHECK(units_of(Domain::mod_ring(6)) == std::vector<RingElement>{el(Domain::mod_ring(6), 1), el(Domain::mod_ring(6), 5)});
    CHECK(units_of(Domain::mod_ring(1)) == std::vector<RingElement>{el(Domain::mod_ring(1), 0)});
    CHECK(units_of(Domain::prime_field(7)).size() == 6);
    for (long n = 1; n <= 30; ++n) {
        const Domain d = Domain::mod_ring(n);
        std::vector<RingElement> expected;
        for (long u = 0; u < n; ++u)
            if (oracle::euclid_gcd(u, n) == 1 && !oracle::inverse_search(u, n).empty()) expected.push_back(el(d, u));
        if (n == 1) expected = {el(d, 0)};
        CHECK(units_of(d) == expected);
        if (n >= 2) CHECK((units_of(d).size() == static_cast<std::size_t>(n - 1)) == oracle::is_prime_trial(n));
    }
}

TEST_CASE("every nonzero residue invertible exactly for prime moduli") {
    for (long n = 2; n <= 30; ++n) {
        bool all_invertible = true;
        for (long a = 1; a < n; ++a) all_invertible &= !oracle::inverse_search(a, n).empty();
        CHECK(all_invertible == oracle::is_prime_trial(n));
        CHECK(all_invertible == (units_of(Domain::mod_ring(n)).size() == static_cast<std::size_t>(n - 1)));
    }
}

TEST_CASE("quotient rings of Z") {
    auto q3 = quotient_ring(IntIdeal(3));
    CHECK(q3.domain == Domain::mod_ring(3));
    CHECK(q3.projection(6).is_zero());
    auto q0 = quotient_ring(IntIdeal(0));
    CHECK(q0.domain == Domain::integers());
    CHECK(q0.projection(-17) == el(Domain::integers(), -17));
    auto q1 = quotient_ring(IntIdeal(1));
    CHECK(q1.domain == Domain::mod_ring(1));
    for (long r = -5; r <= 5; ++r) CHECK(q1.projection(r).is_zero());
    CHECK(ModHomomorphism(5)(7) == el(Domain::mod_ring(5), 2));

    for (long n = 0; n <= 30; ++n) {
        auto qr = quotient_ring(IntIdeal(n));
        for (long z = -100; z <= 100; ++z) {
            const bool divides = n == 0 ? z == 0 : z % n == 0;
            CHECK(qr.projection.in_kernel(z) == divides);
            CHECK(qr.projection(z).is_zero() == divides);
        }
    }
}

TEST_CASE("mod homomorphism laws") {
    std::vector<std::pair<mpz_class, mpz_class>> pairs;
    for (long a = -10; a <= 10; ++a)
        for (long b = -10; b <= 10; ++b) pairs.emplace_back(a, b);
    for (long n : {0L, 1L, 3L, 5L, 12L}) {
        auto report = hom_check(ModHomomorphism(n), pairs);
        CHECK(report.passed());
        CHECK(report.samples == pairs.size());
    }
    CHECK(error_kind([] { ModHomomorphism(-2); }) == ErrorKind::OutOfRange);
}
