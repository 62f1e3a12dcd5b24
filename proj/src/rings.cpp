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

#include "idealab/rings.hpp"

#include "idealab/int_ideals.hpp"

namespace idealab {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NoInverse: return "NoInverse";
        case ErrorKind::InvalidDomain: return "InvalidDomain";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::InvalidIdeal: return "InvalidIdeal";
        case ErrorKind::NotAChain: return "NotAChain";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::NotUnivariate: return "NotUnivariate";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::BadCoefficient: return "BadCoefficient";
        case ErrorKind::UnsupportedDomain: return "UnsupportedDomain";
        case ErrorKind::InseparableCase: return "InseparableCase";
        case ErrorKind::NotEnoughVariables: return "NotEnoughVariables";
        case ErrorKind::ZeroIdeal: return "ZeroIdeal";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::DegenerateWindow: return "DegenerateWindow";
        case ErrorKind::NotBivariate: return "NotBivariate";
    }
    return "Unknown";
}

bool is_prime_number(const mpz_class& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (mpz_class d = 3; d * d <= n; d += 2)
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

namespace {

mpz_class residue(const mpz_class& z, const mpz_class& n) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), n.get_mpz_t());
    return r;
}

mpz_class parse_positive(std::string_view text, std::string_view what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
        throw Error(ErrorKind::InvalidDomain, "bad " + std::string(what) + " '" + std::string(text) + "'");
    return mpz_class(std::string(text));
}

}  // namespace

Domain Domain::integers() { return Domain(DomainKind::Integers, 0); }
Domain Domain::rationals() { return Domain(DomainKind::Rationals, 0); }

Domain Domain::mod_ring(const mpz_class& n) {
    if (n < 1) throw Error(ErrorKind::InvalidDomain, "modulus must be positive, got " + n.get_str());
    return Domain(DomainKind::ModRing, n);
}

Domain Domain::prime_field(const mpz_class& p) {
    if (!is_prime_number(p)) throw Error(ErrorKind::InvalidDomain, p.get_str() + " is not prime");
    return Domain(DomainKind::PrimeField, p);
}

Domain Domain::parse(std::string_view d) {
    if (d == "z") return integers();
    if (d == "q") return rationals();
    if (d.starts_with("fp:")) return prime_field(parse_positive(d.substr(3), "prime"));
    if (d.starts_with("zn:")) return mod_ring(parse_positive(d.substr(3), "modulus"));
    throw Error(ErrorKind::InvalidDomain, "unknown field '" + std::string(d) + "' (expected q|z|fp:<p>|zn:<n>)");
}

std::string Domain::name() const {
    switch (kind_) {
        case DomainKind::Integers: return "Z";
        case DomainKind::Rationals: return "Q";
        case DomainKind::ModRing: return "Z/" + modulus_.get_str();
        case DomainKind::PrimeField: return "F_" + modulus_.get_str();
    }
    return {};
}

std::string Domain::descriptor() const {
    switch (kind_) {
        case DomainKind::Integers: return "z";
        case DomainKind::Rationals: return "q";
        case DomainKind::ModRing: return "zn:" + modulus_.get_str();
        case DomainKind::PrimeField: return "fp:" + modulus_.get_str();
    }
    return {};
}

mpq_class Domain::reduce(const mpz_class& value) const {
    if (is_finite()) return mpq_class(residue(value, modulus_));
    return mpq_class(value);
}

mpq_class Domain::reduce(const mpq_class& value) const {
    switch (kind_) {
        case DomainKind::Rationals: {
            mpq_class v = value;
            v.canonicalize();
            return v;
        }
        case DomainKind::Integers: {
            mpq_class v = value;
            v.canonicalize();
            if (v.get_den() != 1)
                throw Error(ErrorKind::BadCoefficient, v.get_str() + " is not an integer");
            return v;
        }
        case DomainKind::ModRing:
        case DomainKind::PrimeField: {
            mpq_class v = value;
            v.canonicalize();
            mpz_class num = residue(v.get_num(), modulus_);
            if (v.get_den() == 1) return mpq_class(num);
            mpz_class den_inv;
            mpz_class den = residue(v.get_den(), modulus_);
            if (modulus_ == 1) return mpq_class(0);
            if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0)
                throw Error(ErrorKind::BadCoefficient,
                            "denominator " + v.get_den().get_str() + " is not invertible in " + name());
            return mpq_class(residue(num * den_inv, modulus_));
        }
    }
    return value;
}

mpq_class Domain::add(const mpq_class& a, const mpq_class& b) const {
    mpq_class s = a + b;
    if (is_finite() && s >= modulus_) s -= modulus_;
    return s;
}

mpq_class Domain::sub(const mpq_class& a, const mpq_class& b) const {
    mpq_class s = a - b;
    if (is_finite() && sgn(s) < 0) s += modulus_;
    return s;
}

mpq_class Domain::mul(const mpq_class& a, const mpq_class& b) const {
    if (is_finite()) return mpq_class(residue(a.get_num() * b.get_num(), modulus_));
    return a * b;
}

mpq_class Domain::neg(const mpq_class& a) const {
    if (is_finite()) return sgn(a) == 0 ? a : mpq_class(modulus_ - a.get_num());
    return -a;
}

mpq_class Domain::inv(const mpq_class& a) const {
    if (one_equals_zero()) return a;
    if (sgn(a) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in " + name());
    switch (kind_) {
        case DomainKind::Rationals: return 1 / a;
        case DomainKind::Integers:
            if (abs(a) != 1) throw Error(ErrorKind::NoInverse, a.get_str() + " has no inverse in Z");
            return a;
        case DomainKind::ModRing:
        case DomainKind::PrimeField: {
            mpz_class r;
            if (mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t()) == 0)
                throw Error(ErrorKind::NoInverse, a.get_str() + " has no inverse in " + name());
            return mpq_class(r);
        }
    }
    return a;
}

std::vector<mpq_class> Domain::elements() const {
    if (!is_finite()) throw Error(ErrorKind::InvalidDomain, name() + " is infinite");
    std::vector<mpq_class> out;
    for (mpz_class r = 0; r < modulus_; ++r) out.emplace_back(r);
    return out;
}

RingElement::RingElement(Domain domain, const mpq_class& value) : domain_(std::move(domain)), value_(domain_.reduce(value)) {}

std::string RingElement::to_string() const { return value_.get_str(); }

namespace {
void require_same(const RingElement& a, const RingElement& b) {
    if (!(a.domain() == b.domain()))
        throw Error(ErrorKind::DomainMismatch, "operands in " + a.domain().name() + " and " + b.domain().name());
}
}  // namespace

RingElement add(const RingElement& a, const RingElement& b) {
    require_same(a, b);
    return RingElement(a.domain_, a.domain_.add(a.value_, b.value_), RingElement::Canonical{});
}

RingElement sub(const RingElement& a, const RingElement& b) {
    require_same(a, b);
    return RingElement(a.domain_, a.domain_.sub(a.value_, b.value_), RingElement::Canonical{});
}

RingElement mul(const RingElement& a, const RingElement& b) {
    require_same(a, b);
    return RingElement(a.domain_, a.domain_.mul(a.value_, b.value_), RingElement::Canonical{});
}

RingElement neg(const RingElement& a) { return RingElement(a.domain_, a.domain_.neg(a.value_), RingElement::Canonical{}); }

RingElement inv(const RingElement& a) { return RingElement(a.domain_, a.domain_.inv(a.value_), RingElement::Canonical{}); }

RingElement pow(const RingElement& a, unsigned long exponent) {
    RingElement result = RingElement::one(a.domain());
    RingElement base = a;
    while (exponent > 0) {
        if (exponent & 1) result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

bool AxiomReport::passed() const noexcept {
    for (const auto& a : axioms)
        if (!a.passed()) return false;
    return nonzero_invertible.value_or(true);
}

AxiomReport check_ring_axioms(const Domain& domain, std::span<const ElementTriple> samples) {
    const RingElement zero = RingElement::zero(domain);
    const RingElement one = RingElement::one(domain);

    AxiomReport report{domain, {}, domain.one_equals_zero() || zero == one, std::nullopt};
    auto check = [&](std::string name, auto&& law) {
        AxiomResult r{std::move(name)};
        for (const auto& [a, b, c] : samples) {
            ++r.checked;
            if (!law(a, b, c)) ++r.failures;
        }
        report.axioms.push_back(std::move(r));
    };

    check("additive associativity", [](auto& a, auto& b, auto& c) { return (a + b) + c == a + (b + c); });
    check("additive commutativity", [](auto& a, auto& b, auto&) { return a + b == b + a; });
    check("additive identity", [&](auto& a, auto&, auto&) { return a + zero == a && zero + a == a; });
    check("additive inverse", [&](auto& a, auto&, auto&) { return a + (-a) == zero; });
    check("multiplicative associativity", [](auto& a, auto& b, auto& c) { return (a * b) * c == a * (b * c); });
    check("multiplicative identity", [&](auto& a, auto&, auto&) { return a * one == a && one * a == a; });
    check("left distributivity", [](auto& a, auto& b, auto& c) { return a * (b + c) == a * b + a * c; });
    check("right distributivity", [](auto& a, auto& b, auto& c) { return (a + b) * c == a * c + b * c; });
    check("multiplicative commutativity", [](auto& a, auto& b, auto&) { return a * b == b * a; });

    if (domain.is_field()) {
        bool ok = !report.one_equals_zero;
        for (const auto& t : samples) {
            for (const RingElement* e : {&t.a, &t.b, &t.c}) {
                if (e->is_zero()) continue;
                try {
                    if (!(*e * inv(*e) == one)) ok = false;
                } catch (const Error&) {
                    ok = false;
                }
            }
        }
        report.nonzero_invertible = ok;
    }
    return report;
}

std::vector<ElementTriple> all_triples(const Domain& domain) {
    auto elems = domain.elements();
    std::vector<ElementTriple> out;
    out.reserve(elems.size() * elems.size() * elems.size());
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) out.push_back({RingElement(domain, a), RingElement(domain, b), RingElement(domain, c)});
    return out;
}

std::vector<RingElement> units_of(const Domain& domain) {
    const auto elems = domain.elements();
    const RingElement one = RingElement::one(domain);
    std::vector<RingElement> units;
    for (const auto& u : elems) {
        RingElement ue(domain, u);
        for (const auto& v : elems) {
            if (ue * RingElement(domain, v) == one) {
                units.push_back(ue);
                break;
            }
        }
    }
    return units;
}

ModHomomorphism::ModHomomorphism(mpz_class modulus) : modulus_(std::move(modulus)) {
    if (modulus_ < 0) throw Error(ErrorKind::OutOfRange, "negative modulus " + modulus_.get_str());
}

Domain ModHomomorphism::target() const {
    return modulus_ == 0 ? Domain::integers() : Domain::mod_ring(modulus_);
}

RingElement ModHomomorphism::operator()(const mpz_class& r) const { return RingElement(target(), mpq_class(r)); }

bool ModHomomorphism::in_kernel(const mpz_class& r) const { return (*this)(r).is_zero(); }

QuotientRing quotient_ring(const IntIdeal& ideal) {
    ModHomomorphism phi(ideal.generator());
    return {phi.target(), phi};
}

HomReport hom_check(const ModHomomorphism& phi, std::span<const std::pair<mpz_class, mpz_class>> samples) {
    HomReport report;
    report.unital = phi(1) == RingElement::one(phi.target());
    for (const auto& [a, b] : samples) {
        ++report.samples;
        if (!(phi(a + b) == phi(a) + phi(b))) report.additive = false;
        if (!(phi(a * b) == phi(a) * phi(b))) report.multiplicative = false;
    }
    return report;
}

}  // namespace idealab
