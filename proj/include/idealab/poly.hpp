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

#ifndef IDEALAB_POLY_HPP
#define IDEALAB_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealab/rings.hpp"

namespace idealab {

/// Exponent vector X^a = X_1^a_1 ... X_n^a_n.
using Monomial = std::vector<std::uint32_t>;

enum class MonomialOrder { Lexicographic, GradedLexicographic };

/// Total order on monomials of equal length. Lex compares exponents of the
/// first declared variable first.
std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order = MonomialOrder::Lexicographic);

std::uint64_t total_degree(const Monomial& m);

/// Coefficient domain plus an ordered list of distinct variable names.
class PolyRing {
   public:
    PolyRing(Domain domain, std::vector<std::string> variables);

    const Domain& domain() const noexcept { return domain_; }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t arity() const noexcept { return variables_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const PolyRing&, const PolyRing&) = default;

   private:
    Domain domain_;
    std::vector<std::string> variables_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_ring(Domain domain, std::vector<std::string> variables);

/// Degree of a univariate polynomial; the zero polynomial has degree -infinity.
class Degree {
   public:
    static Degree neg_infinity() noexcept { return Degree(); }
    explicit Degree(std::uint64_t value) noexcept : value_(value) {}

    bool is_neg_infinity() const noexcept { return !value_.has_value(); }
    /// Precondition: finite.
    std::uint64_t value() const { return value_.value(); }
    std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

    friend Degree operator+(Degree a, Degree b) noexcept {
        if (a.is_neg_infinity() || b.is_neg_infinity()) return neg_infinity();
        return Degree(*a.value_ + *b.value_);
    }
    friend bool operator==(const Degree&, const Degree&) = default;
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
        if (a.is_neg_infinity() || b.is_neg_infinity()) return b.is_neg_infinity() <=> a.is_neg_infinity();
        return *a.value_ <=> *b.value_;
    }

   private:
    Degree() = default;
    std::optional<std::uint64_t> value_;
};

struct Term {
    Monomial exponents;
    mpq_class coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms with nonzero canonical coefficients, sorted by
/// descending lex order. The zero polynomial has no terms.
class Polynomial {
   public:
    explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

    /// Coefficients are reduced into the ring's domain, like monomials are
    /// merged, and zeros dropped.
    static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);
    static Polynomial constant(PolyRingPtr ring, const mpq_class& c);
    static Polynomial variable(PolyRingPtr ring, std::size_t index);
    static Polynomial monomial(PolyRingPtr ring, Monomial exponents, const mpq_class& c = 1);

    const PolyRingPtr& ring() const noexcept { return ring_; }
    const Domain& domain() const noexcept { return ring_->domain(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    RingElement coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial scaled(const mpq_class& c) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// Structural equality; polynomials over different rings are unequal.
    friend bool operator==(const Polynomial& a, const Polynomial& b);

   private:
    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& f, const Polynomial& g);
bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b);

Polynomial pow(const Polynomial& f, std::uint64_t exponent);

/// Exact value at a point. Coordinates must be in the coefficient domain; for
/// integer polynomials rational coordinates are also accepted.
RingElement evaluate(const Polynomial& f, std::span<const RingElement> point);

/// Fast path for Z/n and F_p with n < 2^32: residues in, residue out.
std::uint64_t evaluate_residues(const Polynomial& f, std::span<const std::uint64_t> point);

Degree total_degree(const Polynomial& f);
/// Throws NotUnivariate when the ring has more than one variable.
Degree degree_univariate(const Polynomial& f);

/// Order-maximal monomial. Throws ZeroPolynomial.
const Term& leading_term(const Polynomial& f, MonomialOrder order = MonomialOrder::Lexicographic);
RingElement leading_coefficient(const Polynomial& f, MonomialOrder order = MonomialOrder::Lexicographic);

/// Formal partial derivative. Throws UnknownVariable.
Polynomial derivative(const Polynomial& f, std::string_view variable);

/// Substitutes `value` for one variable, leaving the ring unchanged.
Polynomial substitute(const Polynomial& f, std::size_t index, const mpq_class& value);

/// Parses the polynomial expression grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := '-'? base ('^' nat)?
///   base   := coeff | var | '(' expr ')'
///   coeff  := nat ('/' posnat)?
///
/// Whitespace is ignored. Over Z/n and F_p, a/b means a times the inverse of b.
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring);

/// Canonical text form, terms in descending `order`; "0" for zero.
std::string format(const Polynomial& f, MonomialOrder order = MonomialOrder::Lexicographic);

/// Identifiers appearing in `text`, in order of first appearance.
std::vector<std::string> identifiers_in(std::string_view text);

// Univariate arithmetic over a field (Q or F_p).

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

DivMod divmod(const Polynomial& f, const Polynomial& g);
/// Scales to leading coefficient 1; zero stays zero.
Polynomial make_monic(const Polynomial& f);
/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

}  // namespace idealab

#endif
