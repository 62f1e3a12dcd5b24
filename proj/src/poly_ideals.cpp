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

#include "idealab/poly_ideals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "idealab/linalg.hpp"

namespace idealab {

IdealPresentation::IdealPresentation(PolyRingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
        if (!same_ring(g.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "generator lives in a different ring");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

namespace {

constexpr std::size_t kMaxSystemEntries = 50'000'000;
constexpr std::uint64_t kMaxWitnessPoints = 1'000'000;
constexpr long kRationalGrid = 5;

void monomials_up_to(std::size_t n, std::uint64_t bound, Monomial& cur, std::size_t i, std::uint64_t used,
                     std::vector<Monomial>& out) {
    if (i == n) {
        out.push_back(cur);
        return;
    }
    for (std::uint64_t e = 0; used + e <= bound; ++e) {
        cur[i] = static_cast<std::uint32_t>(e);
        monomials_up_to(n, bound, cur, i + 1, used + e, out);
    }
    cur[i] = 0;
}

std::vector<Monomial> monomials_up_to(std::size_t n, std::uint64_t bound) {
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    monomials_up_to(n, bound, cur, 0, 0, out);
    return out;
}

// Points of the search space for non-membership witnesses, visited in order
// until `visit` returns true. Returns false when the space is too large.
template <class Visit>
bool for_each_witness_candidate(const PolyRingPtr& ring, Visit&& visit) {
    const Domain& d = ring->domain();
    const std::size_t n = ring->arity();
    std::uint64_t base;
    long offset;
    if (d.kind() == DomainKind::PrimeField) {
        if (!d.modulus().fits_ulong_p()) return false;
        base = d.modulus().get_ui();
        offset = 0;
    } else {
        base = 2 * kRationalGrid + 1;
        offset = -kRationalGrid;
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > kMaxWitnessPoints / base) return false;
        total *= base;
    }
    std::vector<RingElement> point(n, RingElement::zero(d));
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = n; i-- > 0;) {
            point[i] = RingElement(d, static_cast<long>(c % base) + offset);
            c /= base;
        }
        if (visit(point)) return true;
    }
    return true;
}

std::optional<std::vector<RingElement>> find_witness(const Polynomial& f, const IdealPresentation& ideal) {
    std::optional<std::vector<RingElement>> found;
    for_each_witness_candidate(ideal.ring(), [&](const std::vector<RingElement>& pt) {
        for (const auto& g : ideal.generators())
            if (!evaluate(g, pt).is_zero()) return false;
        if (evaluate(f, pt).is_zero()) return false;
        found = pt;
        return true;
    });
    return found;
}

}  // namespace

bool verify(const MembershipCertificate& cert, const Polynomial& f, const IdealPresentation& ideal) {
    if (const auto* m = std::get_if<Member>(&cert.verdict)) {
        if (m->cofactors.size() != ideal.generators().size()) return false;
        Polynomial sum(ideal.ring());
        for (std::size_t i = 0; i < m->cofactors.size(); ++i) sum += m->cofactors[i] * ideal.generators()[i];
        return sum == f;
    }
    if (const auto* nm = std::get_if<NonMember>(&cert.verdict)) {
        for (const auto& g : ideal.generators())
            if (!evaluate(g, nm->witness).is_zero()) return false;
        return !evaluate(f, nm->witness).is_zero();
    }
    return true;
}

MembershipCertificate membership_bounded(const Polynomial& f, const IdealPresentation& ideal, std::uint64_t bound) {
    if (!same_ring(f.ring(), ideal.ring())) throw Error(ErrorKind::RingMismatch, "f and the ideal live in different rings");
    const Domain& d = ideal.ring()->domain();
    if (!d.is_field())
        throw Error(ErrorKind::UnsupportedDomain, "membership needs field coefficients (Q or F_p), got " + d.name());

    const auto& gens = ideal.generators();
    const auto shifts = monomials_up_to(ideal.ring()->arity(), bound);

    // Rows are the monomials of f and of every shifted generator.
    std::map<Monomial, std::size_t> row_of;
    for (const auto& t : f.terms()) row_of.emplace(t.exponents, 0);
    Monomial prod(ideal.ring()->arity());
    for (const auto& g : gens)
        for (const auto& s : shifts)
            for (const auto& t : g.terms()) {
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = s[i] + t.exponents[i];
                row_of.emplace(prod, 0);
            }
    std::size_t next = 0;
    for (auto& [m, r] : row_of) r = next++;

    const std::size_t cols = gens.size() * shifts.size();
    if (cols != 0 && row_of.size() > kMaxSystemEntries / cols)
        throw Error(ErrorKind::TooLarge, "membership system with " + std::to_string(row_of.size()) + " x " +
                                             std::to_string(cols) + " entries exceeds the desk-scale limit");

    Matrix a(row_of.size(), cols);
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (std::size_t si = 0; si < shifts.size(); ++si)
            for (const auto& t : gens[gi].terms()) {
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = shifts[si][i] + t.exponents[i];
                a(row_of.at(prod), gi * shifts.size() + si) = t.coeff;
            }
    std::vector<mpq_class> b(row_of.size());
    for (const auto& t : f.terms()) b[row_of.at(t.exponents)] = t.coeff;

    if (auto x = solve(d, a, b)) {
        Member m;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            std::vector<Term> terms;
            for (std::size_t si = 0; si < shifts.size(); ++si) {
                const mpq_class& c = (*x)[gi * shifts.size() + si];
                if (sgn(c) != 0) terms.push_back({shifts[si], c});
            }
            m.cofactors.push_back(Polynomial::from_terms(ideal.ring(), std::move(terms)));
        }
        MembershipCertificate cert{std::move(m)};
        if (!verify(cert, f, ideal)) throw std::logic_error("membership solution failed re-verification");
        return cert;
    }
    if (auto w = find_witness(f, ideal)) return {NonMember{std::move(*w)}};
    return {Unknown{bound}};
}

IdealComparison ideal_equal_bounded(const IdealPresentation& left, const IdealPresentation& right, std::uint64_t bound) {
    if (!same_ring(left.ring(), right.ring())) throw Error(ErrorKind::RingMismatch, "ideals live in different rings");
    bool unknown = false;
    auto check = [&](const IdealPresentation& from, const IdealPresentation& into,
                     Comparison failure) -> std::optional<IdealComparison> {
        for (const auto& g : from.generators()) {
            auto cert = membership_bounded(g, into, bound);
            if (auto* nm = std::get_if<NonMember>(&cert.verdict)) return IdealComparison{failure, g, nm->witness};
            if (cert.is_unknown()) unknown = true;
        }
        return std::nullopt;
    };
    if (auto r = check(left, right, Comparison::LeftNotInRight)) return *r;
    if (auto r = check(right, left, Comparison::RightNotInLeft)) return *r;
    return {unknown ? Comparison::Unknown : Comparison::EqualWithinBound, std::nullopt, {}};
}

Polynomial radical_univariate(const Polynomial& f) {
    if (f.ring()->arity() != 1) throw Error(ErrorKind::NotUnivariate, "radical_univariate needs one variable");
    if (!f.domain().is_field())
        throw Error(ErrorKind::UnsupportedDomain, "radical needs field coefficients, got " + f.domain().name());
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the radical of (0) is not computed here");
    if (f.is_constant()) return Polynomial::constant(f.ring(), 1);

    const Polynomial df = derivative(f, f.ring()->variables()[0]);
    if (df.is_zero()) throw Error(ErrorKind::InseparableCase, "f' = 0 for nonconstant f = " + format(f));
    const Polynomial r = make_monic(divmod(f, gcd(f, df)).quotient);

    if (f.domain().kind() == DomainKind::PrimeField) {
        // r generates the radical iff every irreducible factor of f divides r,
        // i.e. iff f divides r^deg(f).
        const std::uint64_t deg = degree_univariate(f).value();
        Polynomial acc = Polynomial::constant(f.ring(), 1);
        bool covers = false;
        for (std::uint64_t k = 0; k < deg && !covers; ++k) {
            acc = divmod(acc * r, f).remainder;
            covers = acc.is_zero();
        }
        if (!covers)
            throw Error(ErrorKind::InseparableCase,
                        "squarefree part " + format(r) + " misses a factor of multiplicity divisible by p");
    }
    return r;
}

std::vector<ChainStep> strict_chain_demo(std::size_t k, const PolyRingPtr& ring) {
    if (ring->arity() < k + 1)
        throw Error(ErrorKind::NotEnoughVariables, "a chain of length " + std::to_string(k) + " needs " +
                                                       std::to_string(k + 1) + " variables, ring has " +
                                                       std::to_string(ring->arity()));
    const Domain& d = ring->domain();
    if (d.one_equals_zero()) throw Error(ErrorKind::UnsupportedDomain, "the one-element ring has no strict inclusions");

    std::vector<ChainStep> log;
    for (std::size_t i = 1; i <= k; ++i) {
        ChainStep step{{}, Polynomial::variable(ring, i), std::vector<RingElement>(ring->arity(), RingElement::zero(d)), true};
        for (std::size_t j = 0; j < i; ++j) step.generators.push_back(Polynomial::variable(ring, j));
        step.witness[i] = RingElement::one(d);
        IdealPresentation ideal(ring, step.generators);
        step.verified = verify({NonMember{step.witness}}, step.candidate, ideal);
        log.push_back(std::move(step));
    }
    return log;
}

HbtExtraction hbt_extract_univariate(const IdealPresentation& ideal) {
    const PolyRingPtr& ring = ideal.ring();
    if (ring->arity() != 1) throw Error(ErrorKind::NotUnivariate, "hbt_extract_univariate needs one variable");
    if (!ring->domain().is_field())
        throw Error(ErrorKind::UnsupportedDomain, "needs field coefficients, got " + ring->domain().name());
    if (ideal.generators().empty()) throw Error(ErrorKind::ZeroIdeal, "the zero ideal has no nonzero generator");

    Polynomial g(ring);
    std::uint64_t max_deg = 0;
    for (const auto& h : ideal.generators()) {
        g = gcd(g, h);
        max_deg = std::max(max_deg, degree_univariate(h).value());
    }
    const std::uint64_t dg = degree_univariate(g).value();

    HbtExtraction out{{}, g, {}};
    for (std::uint64_t i = 0; i <= std::max(max_deg, dg); ++i) out.j_profile.push_back({i, i < dg});
    out.check = ideal_equal_bounded(IdealPresentation(ring, {g}), ideal, max_deg);
    return out;
}

}  // namespace idealab
