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

#ifndef IDEALAB_RINGS_HPP
#define IDEALAB_RINGS_HPP

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealab/error.hpp"

namespace idealab {

enum class DomainKind { Integers, Rationals, ModRing, PrimeField };

/// A commutative coefficient domain: Z, Q, Z/n or F_p.
///
/// Values of a domain are carried as `mpq_class`. For Z, Z/n and F_p the
/// denominator is always 1; residues live in [0, n). Rationals are kept in
/// lowest terms with a positive denominator (GMP canonical form).
class Domain {
   public:
    static Domain integers();
    static Domain rationals();
    /// Z/n for n >= 1. ModRing(1) is the one-element ring where 1 = 0.
    static Domain mod_ring(const mpz_class& n);
    /// F_p; p is checked for primality by trial division.
    static Domain prime_field(const mpz_class& p);
    /// Accepts the CLI descriptor syntax: "z", "q", "zn:<n>", "fp:<p>".
    static Domain parse(std::string_view descriptor);

    DomainKind kind() const noexcept { return kind_; }
    /// n for Z/n and F_p, 0 otherwise.
    const mpz_class& modulus() const noexcept { return modulus_; }

    bool is_field() const noexcept { return kind_ == DomainKind::Rationals || kind_ == DomainKind::PrimeField; }
    bool is_finite() const noexcept { return kind_ == DomainKind::ModRing || kind_ == DomainKind::PrimeField; }
    bool one_equals_zero() const noexcept { return is_finite() && modulus_ == 1; }

    /// Human-readable name, e.g. "Z/6" or "F_5".
    std::string name() const;
    /// Round-trips through parse(), e.g. "zn:6" or "fp:5".
    std::string descriptor() const;

    /// Maps an arbitrary rational into canonical form for this domain.
    /// Over Z the value must be integral; over Z/n the denominator must be a
    /// unit. Throws BadCoefficient otherwise.
    mpq_class reduce(const mpq_class& value) const;
    mpq_class reduce(const mpz_class& value) const;

    // Value-level arithmetic on canonical values.
    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    /// Multiplicative inverse. DivisionByZero for 0 (unless 1 = 0),
    /// NoInverse for non-units of Z and Z/n.
    mpq_class inv(const mpq_class& a) const;
    bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }

    /// Every element of a finite domain, in residue order.
    std::vector<mpq_class> elements() const;

    friend bool operator==(const Domain& a, const Domain& b) noexcept {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }

   private:
    Domain(DomainKind kind, mpz_class modulus) : kind_(kind), modulus_(std::move(modulus)) {}

    DomainKind kind_;
    mpz_class modulus_;
};

/// Trial division. Used for PrimeField validation and ideal primality.
bool is_prime_number(const mpz_class& n);

class RingElement {
   public:
    /// `value` is reduced into canonical form for `domain`.
    RingElement(Domain domain, const mpq_class& value);
    RingElement(Domain domain, long value) : RingElement(std::move(domain), mpq_class(value)) {}

    static RingElement zero(const Domain& d) { return RingElement(d, 0L); }
    static RingElement one(const Domain& d) { return RingElement(d, 1L); }

    const Domain& domain() const noexcept { return domain_; }
    const mpq_class& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return sgn(value_) == 0; }

    std::string to_string() const;

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.domain_ == b.domain_ && a.value_ == b.value_;
    }

   private:
    struct Canonical {};
    RingElement(Domain domain, mpq_class value, Canonical) : domain_(std::move(domain)), value_(std::move(value)) {}

    friend RingElement add(const RingElement&, const RingElement&);
    friend RingElement sub(const RingElement&, const RingElement&);
    friend RingElement mul(const RingElement&, const RingElement&);
    friend RingElement neg(const RingElement&);
    friend RingElement inv(const RingElement&);

    Domain domain_;
    mpq_class value_;
};

// Throw DomainMismatch when the operands live in different domains.
RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement neg(const RingElement& a);
RingElement inv(const RingElement& a);
RingElement pow(const RingElement& a, unsigned long exponent);

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return sub(a, b); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
inline RingElement operator-(const RingElement& a) { return neg(a); }

struct ElementTriple {
    RingElement a, b, c;
};

struct AxiomResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    bool passed() const noexcept { return failures == 0; }
};

struct AxiomReport {
    Domain domain;
    std::vector<AxiomResult> axioms;
    /// True for the one-element ring.
    bool one_equals_zero = false;
    /// Only populated for field domains: every sampled nonzero element had an inverse.
    std::optional<bool> nonzero_invertible;

    bool passed() const noexcept;
};

/// Checks the commutative ring axioms on every sample, exactly.
AxiomReport check_ring_axioms(const Domain& domain, std::span<const ElementTriple> samples);

/// All n^3 triples of a finite domain.
std::vector<ElementTriple> all_triples(const Domain& domain);

/// Units of Z/n or F_p by exhaustive search for u*v = 1.
std::vector<RingElement> units_of(const Domain& domain);

/// phi: Z -> Z/n, r |-> r mod n. Modulus 0 is the identity map onto Z.
class ModHomomorphism {
   public:
    explicit ModHomomorphism(mpz_class modulus);

    const mpz_class& modulus() const noexcept { return modulus_; }
    Domain target() const;
    RingElement operator()(const mpz_class& r) const;
    bool in_kernel(const mpz_class& r) const;

   private:
    mpz_class modulus_;
};

class IntIdeal;

struct QuotientRing {
    Domain domain;
    ModHomomorphism projection;
};

/// Z/(n) together with its canonical projection. (0) gives Z and the identity.
QuotientRing quotient_ring(const IntIdeal& ideal);

struct HomReport {
    std::size_t samples = 0;
    bool additive = true;
    bool multiplicative = true;
    bool unital = true;
    bool passed() const noexcept { return additive && multiplicative && unital; }
};

HomReport hom_check(const ModHomomorphism& phi, std::span<const std::pair<mpz_class, mpz_class>> samples);

}  // namespace idealab

#endif
