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

#include "idealab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace idealab {

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::GradedLexicographic) {
        if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
    }
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return a.size() <=> b.size();
}

std::uint64_t total_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

namespace {

bool valid_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

using TermMap = std::map<Monomial, mpq_class, LexGreater>;

std::vector<Term> drain(TermMap& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) out.push_back({m, std::move(c)});
    return out;
}

}  // namespace

PolyRing::PolyRing(Domain domain, std::vector<std::string> variables)
    : domain_(std::move(domain)), variables_(std::move(variables)) {
    if (variables_.empty()) throw Error(ErrorKind::UnknownVariable, "a polynomial ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (!valid_identifier(v)) throw Error(ErrorKind::UnknownVariable, "invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw Error(ErrorKind::UnknownVariable, "duplicate variable '" + v + "'");
    }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return i;
    return std::nullopt;
}

PolyRingPtr make_ring(Domain domain, std::vector<std::string> variables) {
    return std::make_shared<const PolyRing>(std::move(domain), std::move(variables));
}

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) { return a == b || *a == *b; }

void require_same_ring(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring(), g.ring())) throw Error(ErrorKind::RingMismatch, "polynomials live in different rings");
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
    const Domain& d = ring->domain();
    TermMap acc;
    for (auto& t : terms) {
        if (t.exponents.size() != ring->arity())
            throw Error(ErrorKind::RingMismatch, "exponent vector has wrong length");
        auto [it, inserted] = acc.try_emplace(std::move(t.exponents), d.reduce(t.coeff));
        if (!inserted) it->second = d.add(it->second, d.reduce(t.coeff));
    }
    Polynomial p(std::move(ring));
    p.terms_ = drain(acc);
    return p;
}

Polynomial Polynomial::constant(PolyRingPtr ring, const mpq_class& c) {
    return monomial(ring, Monomial(ring->arity(), 0), c);
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
    Monomial m(ring->arity(), 0);
    m.at(index) = 1;
    return monomial(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, Monomial exponents, const mpq_class& c) {
    return from_terms(std::move(ring), {Term{std::move(exponents), c}});
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.front().exponents) == 0);
}

RingElement Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.exponents == m) return RingElement(domain(), t.coeff);
    return RingElement::zero(domain());
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.exponents, domain().neg(t.coeff)});
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_ring(*this, rhs);
    const Domain& d = domain();
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && compare(a->exponents, b->exponents) > 0)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || compare(a->exponents, b->exponents) < 0) {
            merged.push_back(*b++);
        } else {
            mpq_class c = d.add(a->coeff, b->coeff);
            if (sgn(c) != 0) merged.push_back({std::move(a->exponents), std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    const Domain& d = a.domain();
    TermMap acc;
    Monomial m(a.ring()->arity());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ta.exponents[i] + tb.exponents[i];
            mpq_class c = d.mul(ta.coeff, tb.coeff);
            auto [it, inserted] = acc.try_emplace(m, c);
            if (!inserted) it->second = d.add(it->second, c);
        }
    }
    Polynomial p(a.ring());
    p.terms_ = drain(acc);
    return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial Polynomial::scaled(const mpq_class& c) const {
    const mpq_class k = domain().reduce(c);
    Polynomial out(ring_);
    for (const auto& t : terms_) {
        mpq_class v = domain().mul(t.coeff, k);
        if (sgn(v) != 0) out.terms_.push_back({t.exponents, std::move(v)});
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_; }

Polynomial pow(const Polynomial& f, std::uint64_t exponent) {
    Polynomial result = Polynomial::constant(f.ring(), 1);
    Polynomial base = f;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

RingElement evaluate(const Polynomial& f, std::span<const RingElement> point) {
    const Domain& rd = f.domain();
    if (point.size() != f.ring()->arity())
        throw Error(ErrorKind::DomainMismatch, "point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                                   std::to_string(f.ring()->arity()) + " variables");
    Domain target = rd;
    for (const auto& x : point) {
        if (x.domain() == rd) continue;
        if (rd.kind() == DomainKind::Integers && x.domain().kind() == DomainKind::Rationals) {
            target = Domain::rationals();
            continue;
        }
        throw Error(ErrorKind::DomainMismatch, "coordinate in " + x.domain().name() + ", polynomial over " + rd.name());
    }
    std::vector<RingElement> coords;
    for (const auto& x : point) coords.emplace_back(target, x.value());

    RingElement sum = RingElement::zero(target);
    for (const auto& t : f.terms()) {
        RingElement v(target, t.coeff);
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (t.exponents[i]) v = v * pow(coords[i], t.exponents[i]);
        sum = sum + v;
    }
    return sum;
}

std::uint64_t evaluate_residues(const Polynomial& f, std::span<const std::uint64_t> point) {
    const Domain& d = f.domain();
    if (!d.is_finite() || d.modulus() >= (mpz_class(1) << 32))
        throw Error(ErrorKind::UnsupportedDomain, "residue evaluation needs Z/n with n < 2^32, got " + d.name());
    if (point.size() != f.ring()->arity()) throw Error(ErrorKind::DomainMismatch, "point arity mismatch");
    const std::uint64_t n = d.modulus().get_ui();
    std::uint64_t sum = 0;
    for (const auto& t : f.terms()) {
        std::uint64_t v = t.coeff.get_num().get_ui();
        for (std::size_t i = 0; i < point.size() && v; ++i) {
            std::uint64_t base = point[i] % n, r = 1;
            for (std::uint32_t e = t.exponents[i]; e; e >>= 1) {
                if (e & 1) r = r * base % n;
                base = base * base % n;
            }
            v = v * r % n;
        }
        sum = (sum + v) % n;
    }
    return sum;
}

Degree total_degree(const Polynomial& f) {
    if (f.is_zero()) return Degree::neg_infinity();
    std::uint64_t d = 0;
    for (const auto& t : f.terms()) d = std::max(d, total_degree(t.exponents));
    return Degree(d);
}

Degree degree_univariate(const Polynomial& f) {
    if (f.ring()->arity() != 1) throw Error(ErrorKind::NotUnivariate, "polynomial ring has several variables");
    if (f.is_zero()) return Degree::neg_infinity();
    return Degree(f.terms().front().exponents[0]);
}

const Term& leading_term(const Polynomial& f, MonomialOrder order) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no leading term");
    const auto& ts = f.terms();
    return *std::max_element(ts.begin(), ts.end(),
                             [&](const Term& a, const Term& b) { return compare(a.exponents, b.exponents, order) < 0; });
}

RingElement leading_coefficient(const Polynomial& f, MonomialOrder order) {
    return RingElement(f.domain(), leading_term(f, order).coeff);
}

Polynomial derivative(const Polynomial& f, std::string_view variable) {
    auto idx = f.ring()->index_of(variable);
    if (!idx) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(variable) + "'");
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        std::uint32_t e = t.exponents[*idx];
        if (e == 0) continue;
        Term d{t.exponents, f.domain().mul(t.coeff, f.domain().reduce(mpz_class(e)))};
        --d.exponents[*idx];
        out.push_back(std::move(d));
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial substitute(const Polynomial& f, std::size_t index, const mpq_class& value) {
    const Domain& d = f.domain();
    const mpq_class v = d.reduce(value);
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        mpq_class c = t.coeff;
        for (std::uint32_t k = 0; k < t.exponents[index]; ++k) c = d.mul(c, v);
        Term s{t.exponents, std::move(c)};
        s.exponents[index] = 0;
        out.push_back(std::move(s));
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(c)) {
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw Error(ErrorKind::SyntaxError,
                            "unexpected character '" + std::string(1, s[i]) + "' at position " + std::to_string(i), i);
        }
        out.push_back({k, std::string(1, s[i]), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

constexpr unsigned long kMaxExponent = 1000000;

class Parser {
   public:
    Parser(std::string_view text, const PolyRingPtr& ring) : ring_(ring) {
        for (Token& t : tokenize(text)) {
            if (t.kind == Tok::Ident && !ring_->index_of(t.text)) {
                if (auto parts = split_juxtaposed(t.text)) {
                    std::size_t offset = 0;
                    for (auto& part : *parts) {
                        const std::size_t len = part.size();
                        tokens_.push_back({Tok::Ident, std::move(part), t.pos + offset});
                        offset += len;
                    }
                    continue;
                }
            }
            tokens_.push_back(std::move(t));
        }
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (peek().kind != Tok::End) unexpected();
        return p;
    }

   private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    [[noreturn]] void unexpected() const {
        const Token& t = peek();
        if (t.kind == Tok::End)
            throw Error(ErrorKind::SyntaxError, "unexpected end of input at position " + std::to_string(t.pos), t.pos);
        throw Error(ErrorKind::SyntaxError, "unexpected token '" + t.text + "' at position " + std::to_string(t.pos), t.pos);
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = next().kind == Tok::Minus;
            Polynomial t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    // "xy" with variables x and y reads as x*y; longest names are tried first.
    std::optional<std::vector<std::string>> split_juxtaposed(std::string_view word) const {
        if (word.empty()) return std::vector<std::string>{};
        if (word.size() > 64) return std::nullopt;
        for (std::size_t len = word.size(); len >= 1; --len) {
            if (!ring_->index_of(std::string(word.substr(0, len)))) continue;
            if (auto rest = split_juxtaposed(word.substr(len))) {
                rest->insert(rest->begin(), std::string(word.substr(0, len)));
                return rest;
            }
        }
        return std::nullopt;
    }

    static bool starts_base(Tok k) { return k == Tok::Number || k == Tok::Ident || k == Tok::LParen; }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            if (peek().kind == Tok::Star) {
                next();
                acc *= factor();
            } else if (starts_base(peek().kind)) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        bool negate = false;
        if (peek().kind == Tok::Minus) {
            next();
            negate = true;
        }
        Polynomial b = base();
        if (peek().kind == Tok::Caret) {
            next();
            const Token& e = peek();
            if (e.kind != Tok::Number) unexpected();
            next();
            mpz_class n(e.text);
            if (n > kMaxExponent)
                throw Error(ErrorKind::SyntaxError, "exponent " + e.text + " too large at position " + std::to_string(e.pos), e.pos);
            b = pow(b, n.get_ui());
        }
        return negate ? -b : b;
    }

    Polynomial base() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: return coeff();
            case Tok::Ident: {
                next();
                auto idx = ring_->index_of(t.text);
                if (!idx)
                    throw Error(ErrorKind::UnknownVariable,
                                "unknown variable '" + t.text + "' at position " + std::to_string(t.pos), t.pos);
                return Polynomial::variable(ring_, *idx);
            }
            case Tok::LParen: {
                next();
                Polynomial inner = expr();
                if (peek().kind != Tok::RParen) unexpected();
                next();
                return inner;
            }
            default: unexpected();
        }
    }

    Polynomial coeff() {
        const Token& num = next();
        mpz_class numerator(num.text);
        mpz_class denominator = 1;
        if (peek().kind == Tok::Slash) {
            next();
            const Token& den = peek();
            if (den.kind != Tok::Number) unexpected();
            next();
            denominator = mpz_class(den.text);
            if (denominator == 0)
                throw Error(ErrorKind::BadCoefficient, "zero denominator at position " + std::to_string(den.pos), den.pos);
        }
        try {
            return Polynomial::constant(ring_, mpq_class(numerator, denominator));
        } catch (const Error& e) {
            throw Error(e.kind(), std::string(e.what()) + " at position " + std::to_string(num.pos), num.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const PolyRingPtr& ring_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring) { return Parser(text, ring).parse(); }

std::vector<std::string> identifiers_in(std::string_view text) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < text.size();) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
            std::string id(text.substr(i, j - i));
            if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(std::move(id));
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        } else {
            ++i;
        }
    }
    return out;
}

std::string format(const Polynomial& f, MonomialOrder order) {
    if (f.is_zero()) return "0";
    std::vector<const Term*> ts;
    for (const auto& t : f.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](const Term* a, const Term* b) { return compare(a->exponents, b->exponents, order) > 0; });

    const auto& vars = f.ring()->variables();
    std::string out;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const Term& t = *ts[k];
        const bool negative = sgn(t.coeff) < 0;
        if (k == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";

        std::string mono;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (t.exponents[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
        }
        const mpq_class mag = abs(t.coeff);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Univariate over a field

namespace {
void require_univariate_field(const Polynomial& f) {
    if (f.ring()->arity() != 1) throw Error(ErrorKind::NotUnivariate, "expected a univariate polynomial");
    if (!f.domain().is_field())
        throw Error(ErrorKind::UnsupportedDomain, "univariate division needs field coefficients, got " + f.domain().name());
}
}  // namespace

DivMod divmod(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    require_univariate_field(f);
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    const Domain& d = f.domain();
    const Term& lead = g.terms().front();
    const mpq_class lead_inv = d.inv(lead.coeff);
    const std::uint32_t dg = lead.exponents[0];

    Polynomial q(f.ring());
    Polynomial r = f;
    while (!r.is_zero() && r.terms().front().exponents[0] >= dg) {
        const Term& rt = r.terms().front();
        Polynomial step = Polynomial::monomial(f.ring(), {rt.exponents[0] - dg}, d.mul(rt.coeff, lead_inv));
        q += step;
        r -= step * g;
    }
    return {std::move(q), std::move(r)};
}

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.domain().inv(f.terms().front().coeff));
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    require_univariate_field(f);
    Polynomial a = f;
    Polynomial b = g;
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

}  // namespace idealab
