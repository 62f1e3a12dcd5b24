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

// Acceptance gate: runs every criterion at its stated scale and tolerance and
// prints one PASS/FAIL line each. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "idealab/cli.hpp"
#include "idealab/int_ideals.hpp"
#include "idealab/poly_ideals.hpp"
#include "idealab/raster.hpp"
#include "idealab/varieties.hpp"
#include "oracles.hpp"

using namespace idealab;

namespace {

// Failure counter with the first few messages kept for the report.
struct Tally {
    std::size_t checks = 0, failures = 0;
    std::string first;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
};

Polynomial f2_poly(const PolyRingPtr& ring, unsigned mask) {
    static const Monomial monos[6] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    std::vector<Term> ts;
    for (int m = 0; m < 6; ++m)
        if (mask >> m & 1) ts.push_back({monos[m], 1});
    return Polynomial::from_terms(ring, ts);
}

PointSet f2_points(unsigned mask) {
    std::vector<Point> pts;
    for (std::uint64_t x = 0; x < 2; ++x)
        for (std::uint64_t y = 0; y < 2; ++y)
            if (mask >> (2 * x + y) & 1) pts.push_back({x, y});
    return PointSet(2, 2, pts);
}

unsigned f2_mask(const PointSet& s) {
    unsigned m = 0;
    for (const auto& p : s.points()) m |= 1u << (2 * p[0] + p[1]);
    return m;
}

unsigned truth_table(const Polynomial& f) {
    unsigned t = 0;
    for (std::uint64_t x = 0; x < 2; ++x)
        for (std::uint64_t y = 0; y < 2; ++y) {
            std::vector<std::uint64_t> pt{x, y};
            if (evaluate_residues(f, pt)) t |= 1u << (2 * x + y);
        }
    return t;
}

// All F_2-linear combinations of a set of truth tables, as a 16-bit set.
std::uint32_t span_of(const std::vector<unsigned>& tables) {
    std::uint32_t s = 1;  // the zero function
    for (auto t : tables) {
        std::uint32_t next = s;
        for (unsigned v = 0; v < 16; ++v)
            if (s >> v & 1) next |= 1u << (v ^ t);
        s = next;
    }
    return s;
}

std::vector<PointSet> corpus_f2_and_f3(std::size_t random_f3) {
    std::vector<PointSet> out;
    for (unsigned m = 0; m < 16; ++m) out.push_back(f2_points(m));
    std::mt19937 rng(2024);
    const PointSet space = PointSet::all(3, 2);
    for (std::size_t i = 0; i < random_f3; ++i) {
        std::vector<Point> pts;
        for (const auto& p : space.points())
            if (rng() % 2) pts.push_back(p);
        out.emplace_back(3, 2, pts);
    }
    return out;
}

// Sum of cofactor * generator, computed afresh.
bool cofactors_reproduce(const MembershipCertificate& c, const Polynomial& f, const IdealPresentation& I) {
    const auto* m = std::get_if<Member>(&c.verdict);
    if (!m || m->cofactors.size() != I.generators().size()) return false;
    Polynomial acc(f.ring());
    for (std::size_t i = 0; i < m->cofactors.size(); ++i) acc += m->cofactors[i] * I.generators()[i];
    return acc == f;
}

bool witness_separates(const MembershipCertificate& c, const Polynomial& f, const IdealPresentation& I) {
    const auto* w = std::get_if<NonMember>(&c.verdict);
    if (!w) return false;
    for (const auto& g : I.generators())
        if (!evaluate(g, w->witness).is_zero()) return false;
    return !evaluate(f, w->witness).is_zero();
}

Polynomial random_poly(std::mt19937& rng, const PolyRingPtr& ring, std::uint32_t max_deg, int terms) {
    const bool finite = ring->domain().is_finite();
    const long hi = finite ? ring->domain().modulus().get_si() - 1 : 4;
    std::uniform_int_distribution<long> c(finite ? 0 : -4, hi);
    std::uniform_int_distribution<std::uint32_t> e(0, max_deg);
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Monomial m(ring->arity());
        std::uint32_t budget = max_deg;
        for (auto& x : m) {
            x = std::min(e(rng), budget);
            budget -= x;
        }
        ts.push_back({m, c(rng)});
    }
    return Polynomial::from_terms(ring, ts);
}

// ---------------------------------------------------------------------------

void ring_axioms(Tally& t) {
    for (const Domain& d : {Domain::mod_ring(6), Domain::prime_field(5), Domain::mod_ring(1)}) {
        auto triples = all_triples(d);
        const auto n = d.modulus().get_ui();
        t.expect(triples.size() == n * n * n, d.name() + " triple count");
        auto report = check_ring_axioms(d, triples);
        t.expect(report.passed(), d.name() + " axioms");
        for (const auto& a : report.axioms) t.expect(a.checked == triples.size(), d.name() + " " + a.name + " coverage");
        if (d.is_field()) t.expect(report.nonzero_invertible.value_or(false), d.name() + " inverses");
    }
    t.expect(check_ring_axioms(Domain::mod_ring(1), all_triples(Domain::mod_ring(1))).one_equals_zero, "Z/1 flags 1 = 0");

    std::mt19937 rng(1);
    std::uniform_int_distribution<long> num(-10000, 10000), den(1, 1000);
    const Domain q = Domain::rationals();
    auto draw = [&] { return RingElement(q, mpq_class(num(rng), den(rng))); };
    std::vector<ElementTriple> samples;
    for (int i = 0; i < 10000; ++i) samples.push_back({draw(), draw(), draw()});
    auto report = check_ring_axioms(q, samples);
    t.expect(report.passed(), "Q axioms");
    for (const auto& a : report.axioms) t.expect(a.checked == samples.size(), "Q " + a.name + " coverage");
}

void ideals_mod_n(Tally& t) {
    for (std::uint64_t n = 1; n <= 30; ++n) {
        auto ideals = enumerate_ideals_mod_n(n);
        t.expect(ideals.size() == oracle::divisor_count(n), "count for n = " + std::to_string(n));
        t.expect((ideals.size() == 2) == oracle::is_prime_trial(n), "two ideals iff prime, n = " + std::to_string(n));
        if (n > 12) continue;
        std::vector<std::vector<std::uint64_t>> ours;
        for (const auto& I : ideals) ours.push_back(I.elements());
        auto filtered = oracle::ideals_by_subset_filter(n);
        std::sort(ours.begin(), ours.end());
        std::sort(filtered.begin(), filtered.end());
        t.expect(ours == filtered, "subset filter for n = " + std::to_string(n));
    }
}

void prime_definitions(Tally& t) {
    for (std::uint64_t n = 1; n <= 30; ++n)
        for (const auto& J : enumerate_ideals_mod_n(n)) {
            auto v = prime_defs_agree(n, J);
            t.expect(v.def_direct == v.def_quotient, "mismatch at n = " + std::to_string(n));
            t.expect(v.def_direct == oracle::zn_ideal_is_prime(n, J.elements()), "oracle at n = " + std::to_string(n));
        }
}

void z_primality(Tally& t) {
    for (long g : {0L, 2L, 3L, 5L, 7L, 11L, 13L}) t.expect(IntIdeal(g).is_prime(), "(" + std::to_string(g) + ") prime");
    for (long g : {1L, 4L, 6L, 8L, 9L, 10L, 12L}) {
        t.expect(!IntIdeal(g).is_prime(), "(" + std::to_string(g) + ") not prime");
        if (auto w = non_prime_witness(IntIdeal(g)))
            t.expect(w->first * w->second == g && !IntIdeal(g).contains(w->first) && !IntIdeal(g).contains(w->second),
                     "witness for " + std::to_string(g));
        else
            t.expect(g == 1, "witness for " + std::to_string(g));
    }
}

void galois_suite(Tally& t) {
    const PolyRingPtr R = point_ring(2, 2);
    std::vector<Polynomial> quad;
    for (unsigned m = 0; m < 64; ++m) quad.push_back(f2_poly(R, m));

    // Generator sets: all subsets of size <= 2 of the 64 quadrics.
    std::vector<std::vector<unsigned>> sets{{}};
    for (unsigned a = 0; a < 64; ++a) {
        sets.push_back({a});
        for (unsigned b = a + 1; b < 64; ++b) sets.push_back({a, b});
    }
    auto V = [&](const std::vector<unsigned>& s) {
        std::vector<Polynomial> g;
        for (auto i : s) g.push_back(quad[i]);
        return variety(IdealPresentation(R, g));
    };
    auto V_oracle = [&](const std::vector<unsigned>& s) {
        std::vector<unsigned> tables;
        for (auto i : s) tables.push_back(oracle::f2_table(i));
        return oracle::f2_zero_set(tables);
    };
    std::vector<unsigned> vmask(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        vmask[i] = f2_mask(V(sets[i]));
        t.expect(vmask[i] == V_oracle(sets[i]), "V against truth tables");
    }

    // Antitonicity of V: S ⊆ T implies V(T) ⊆ V(S). Each size-2 set has two
    // size-1 subsets and the empty subset.
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& T = sets[i];
        t.expect((vmask[i] & ~vmask[0]) == 0, "V(T) within V(empty)");
        for (auto a : T) t.expect((vmask[i] & ~f2_mask(V({a}))) == 0, "V(T) within V(S)");
    }

    // I on all 16 point sets: closure and antitonicity.
    std::vector<std::uint32_t> ispan(16);
    for (unsigned x = 0; x < 16; ++x) {
        const PointSet X = f2_points(x);
        auto I = vanishing_ideal(X, R);
        t.expect(variety(I.presentation(R)) == X, "V(I(X)) = X");
        std::vector<unsigned> tables;
        for (const auto& g : I.generators) tables.push_back(truth_table(g));
        ispan[x] = span_of(tables);
        // The span is exactly the functions vanishing on X.
        std::uint32_t expected = 0;
        for (unsigned fn = 0; fn < 16; ++fn)
            if ((fn & x) == 0) expected |= 1u << fn;
        t.expect(ispan[x] == expected, "I(X) spans the functions vanishing on X");
    }
    for (unsigned x = 0; x < 16; ++x)
        for (unsigned y = 0; y < 16; ++y)
            if ((x & ~y) == 0) t.expect((ispan[y] & ~ispan[x]) == 0, "X ⊆ Y implies I(Y) ⊆ I(X)");

    // S ⊆ I(V(S)), with membership certificates.
    for (const auto& s : sets) {
        std::vector<Polynomial> g;
        for (auto i : s) g.push_back(quad[i]);
        IdealPresentation S(R, g);
        auto viv = viv_closure(S);
        const PointSet vs = variety(S);
        const IdealPresentation closure = viv.ideal.presentation(R);
        for (std::size_t k = 0; k < S.generators().size(); ++k) {
            t.expect(vanishes_on(S.generators()[k], vs), "f vanishes on V(S)");
            t.expect(cofactors_reproduce(viv.inclusion[k], S.generators()[k], closure), "S ⊆ I(V(S)) certificate");
        }
    }

    // Products and pairs.
    for (unsigned a = 0; a < 64; ++a)
        for (unsigned b = 0; b < 64; ++b) {
            const PointSet va = V({a}), vb = V({b});
            t.expect(variety(IdealPresentation(R, {quad[a] * quad[b]})) == va.unite(vb), "V(fg) = V(f) ∪ V(g)");
            t.expect(variety(IdealPresentation(R, {quad[a], quad[b]})) == va.intersect(vb), "V(f, g) = V(f) ∩ V(g)");
        }

    // X ∪ Y = V(ST) for X = V(S), Y = V(T): all pairs of sets of size <= 1,
    // plus sampled pairs of larger sets.
    auto check_union = [&](std::size_t i, std::size_t j) {
        std::vector<Polynomial> st;
        for (auto a : sets[i])
            for (auto b : sets[j]) st.push_back(quad[a] * quad[b]);
        const unsigned lhs = vmask[i] | vmask[j];
        t.expect(f2_mask(variety(IdealPresentation(R, st))) == lhs, "X ∪ Y = V(ST)");
    };
    std::vector<std::size_t> small;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].size() <= 1) small.push_back(i);
    for (auto i : small)
        for (auto j : small) check_union(i, j);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
    for (int k = 0; k < 20000; ++k) check_union(pick(rng), pick(rng));

    // Arbitrary intersections: ∩ V(S_i) = V(∪ S_i) on sampled families.
    for (int k = 0; k < 2000; ++k) {
        unsigned inter = 0xF;
        std::vector<unsigned> all;
        for (int f = 0; f < 4; ++f) {
            const auto i = pick(rng);
            inter &= vmask[i];
            all.insert(all.end(), sets[i].begin(), sets[i].end());
        }
        t.expect(f2_mask(V(all)) == inter, "∩ V(S_i) = V(∪ S_i)");
    }
}

void hypersurfaces(Tally& t) {
    for (const auto& X : corpus_f2_and_f3(100)) {
        auto ring = point_ring(X.prime(), X.dimension());
        auto I = vanishing_ideal(X, ring);
        PointSet acc = PointSet::all(X.prime(), X.dimension());
        for (const auto& g : I.generators) acc = acc.intersect(variety(IdealPresentation(ring, {g})));
        t.expect(acc == X, "X = ∩ V(g_i)");
    }
}

void decomposition(Tally& t) {
    for (const auto& X : corpus_f2_and_f3(100)) {
        auto parts = decompose(X);
        PointSet u = PointSet::empty(X.prime(), X.dimension());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            t.expect(is_irreducible(parts[i]), "component irreducible");
            t.expect(parts[i].subset_of(X), "component within X");
            u = u.unite(parts[i]);
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (i != j) t.expect(!parts[i].subset_of(parts[j]), "no component contains another");
        }
        t.expect(u == X, "union of components is X");
    }
}

void irreducible_prime(Tally& t) {
    for (const auto& X : corpus_f2_and_f3(100)) {
        auto r = is_prime_vanishing_ideal(X);
        t.expect(r.prime == is_irreducible(X), "irreducible iff prime");
        t.expect(r.prime == (X.size() == 1), "prime iff singleton");
        if (X.size() < 2) continue;
        if (!r.witnesses) {
            t.expect(false, "missing witnesses");
            continue;
        }
        const auto& [f, g] = *r.witnesses;
        bool fg_vanishes = true, f_vanishes = true, g_vanishes = true;
        for (const auto& pt : X.points()) {
            const auto fv = evaluate_residues(f, pt), gv = evaluate_residues(g, pt);
            fg_vanishes &= (fv * gv) % X.prime() == 0;
            f_vanishes &= fv == 0;
            g_vanishes &= gv == 0;
        }
        t.expect(fg_vanishes && !f_vanishes && !g_vanishes, "witness pair re-verifies");
    }
}

void membership(Tally& t) {
    std::mt19937 rng(9);
    const PolyRingPtr rings[] = {make_ring(Domain::rationals(), {"x", "y"}), make_ring(Domain::prime_field(5), {"x", "y"}),
                                 make_ring(Domain::prime_field(3), {"x", "y", "z"})};
    std::size_t members = 0;
    while (members < 500) {
        const auto& R = rings[members % 3];
        std::vector<Polynomial> gens{random_poly(rng, R, 2, 3), random_poly(rng, R, 2, 2)};
        IdealPresentation I(R, gens);
        if (I.generators().empty()) continue;
        Polynomial f(R);
        for (const auto& g : I.generators()) f += random_poly(rng, R, 1, 3) * g;
        auto c = membership_bounded(f, I, 1);
        t.expect(c.is_member(), "constructed member found at its bound");
        t.expect(cofactors_reproduce(c, f, I) && verify(c, f, I), "member certificate re-verifies");
        ++members;
    }

    std::size_t non_members = 0;
    while (non_members < 500) {
        const auto& R = rings[1 + non_members % 2];
        const std::uint64_t p = R->domain().modulus().get_ui();
        // Generators forced to vanish at a, f forced not to.
        std::vector<RingElement> a;
        for (std::size_t i = 0; i < R->arity(); ++i) a.emplace_back(R->domain(), static_cast<long>(rng() % p));
        std::vector<Polynomial> gens;
        for (int k = 0; k < 2; ++k) {
            Polynomial g = random_poly(rng, R, 2, 3);
            g -= Polynomial::constant(R, evaluate(g, a).value());
            gens.push_back(g);
        }
        IdealPresentation I(R, gens);
        Polynomial f = random_poly(rng, R, 2, 3);
        const auto fa = evaluate(f, a);
        if (fa.is_zero()) f += Polynomial::constant(R, 1);
        auto c = membership_bounded(f, I, 1);
        t.expect(c.is_non_member(), "separated instance gets a witness");
        t.expect(witness_separates(c, f, I) && verify(c, f, I), "witness re-verifies");
        ++non_members;
    }

    std::size_t mono = 0;
    while (mono < 100) {
        const auto& R = rings[mono % 2];
        std::vector<Polynomial> gens{random_poly(rng, R, 2, 2), random_poly(rng, R, 1, 2)};
        IdealPresentation I(R, gens);
        if (I.generators().empty()) continue;
        Polynomial f = random_poly(rng, R, 3, 4);
        if (mono % 2 == 0) f = random_poly(rng, R, 2, 2) * I.generators().front();
        bool seen = false;
        for (std::uint64_t d = 0; d <= 3; ++d) {
            const bool m = membership_bounded(f, I, d).is_member();
            if (seen) t.expect(m, "membership monotone in the bound");
            seen |= m;
        }
        ++mono;
    }
}

void chains_and_extraction(Tally& t) {
    for (const Domain& d : {Domain::prime_field(2), Domain::rationals()})
        for (std::size_t k = 0; k <= 6; ++k) {
            std::vector<std::string> vars;
            for (std::size_t i = 1; i <= k + 1; ++i) vars.push_back("x" + std::to_string(i));
            auto R = make_ring(d, vars);
            auto log = strict_chain_demo(k, R);
            t.expect(log.size() == k, "one certificate per step");
            for (std::size_t i = 0; i < log.size(); ++i) {
                const auto& s = log[i];
                bool sound = s.verified && s.generators.size() == i + 1 && s.candidate == Polynomial::variable(R, i + 1);
                for (const auto& g : s.generators) sound &= evaluate(g, s.witness).is_zero();
                sound &= !evaluate(s.candidate, s.witness).is_zero();
                t.expect(sound, "strict inclusion witness");
            }
        }

    const auto F5 = make_ring(Domain::prime_field(5), {"x"});
    auto lift = [&](const oracle::UPoly& u) {
        std::vector<Term> ts;
        for (std::uint32_t i = 0; i < u.size(); ++i) ts.push_back({{i}, mpq_class(static_cast<long>(u[i]))});
        return Polynomial::from_terms(F5, ts);
    };
    std::mt19937 rng(10);
    std::size_t pairs = 0;
    while (pairs < 200) {
        auto a = oracle::random_upoly(rng, 6, 5), b = oracle::random_upoly(rng, 6, 5);
        if (a.empty() && b.empty()) continue;
        auto r = hbt_extract_univariate(IdealPresentation(F5, {lift(a), lift(b)}));
        t.expect(r.extracted == lift(oracle::upoly_gcd(a, b, 5)), "extracted generator equals Euclid oracle");
        t.expect(r.check.outcome == Comparison::EqualWithinBound, "extracted generator presents the ideal");
        ++pairs;
    }
}

void radical_examples(Tally& t) {
    const auto Qx = make_ring(Domain::rationals(), {"x"});
    t.expect(radical_univariate(parse_polynomial("x^2", Qx)) == parse_polynomial("x", Qx), "radical of (x^2) is (x)");
    const auto sq = parse_polynomial("x^2 + 1", Qx);
    for (long den = 1; den <= 12; ++den)
        for (long num = -60; num <= 60; ++num) {
            std::vector<RingElement> pt{RingElement(Domain::rationals(), mpq_class(num, den))};
            t.expect(!evaluate(sq, pt).is_zero(), "x^2 + 1 has no zero on the rational grid");
        }
    t.expect(membership_bounded(parse_polynomial("1", Qx), IdealPresentation(Qx, {sq}), 3).is_unknown(),
             "no grid witness separates (x^2 + 1) from 1");
    const auto F5 = make_ring(Domain::prime_field(5), {"x"});
    t.expect(variety(IdealPresentation(F5, {parse_polynomial("x^2 + 1", F5)})) == PointSet(5, 1, {{2}, {3}}),
             "x^2 + 1 over F_5 vanishes at {2, 3}");
}

void nodal_cubic_plot(Tally& t) {
    std::ostringstream out, err;
    const int code = cli::run({"plot", "--window", "-2:2,-2:2", "--res", "64", "y^2 - x^2*(x+1)"}, out, err);
    t.expect(code == 0, "plot exits 0");
    std::ifstream golden(std::string(IDEALAB_GOLDEN_DIR) + "/nodal_cubic_64.txt");
    std::stringstream g;
    g << golden.rdbuf();
    t.expect(!g.str().empty() && out.str() == g.str(), "ASCII matches the golden file");

    const auto R = make_ring(Domain::rationals(), {"x", "y"});
    auto grid = raster_plane_curve(parse_polynomial("y^2 - x^2*(x+1)", R), Window::parse("-2:2,-2:2"), 64, 64);
    auto origin = grid.cells_containing(0, 0), node = grid.cells_containing(-1, 0);
    for (auto [r, c] : origin) t.expect(grid.marked(r, c), "cell at (0, 0) marked");
    for (auto [r, c] : node) t.expect(grid.marked(r, c), "cell at (-1, 0) marked");

    // 4-connected component of marked cells through the origin.
    std::vector<std::vector<bool>> seen(64, std::vector<bool>(64));
    std::queue<std::pair<std::size_t, std::size_t>> q;
    q.push(origin.front());
    seen[origin.front().first][origin.front().second] = true;
    bool top = false, bottom = false;
    while (!q.empty()) {
        auto [r, c] = q.front();
        q.pop();
        top |= r == 0;
        bottom |= r == 63;
        const int dr[] = {1, -1, 0, 0}, dc[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const long nr = static_cast<long>(r) + dr[k], nc = static_cast<long>(c) + dc[k];
            if (nr < 0 || nc < 0 || nr >= 64 || nc >= 64 || seen[nr][nc] || !grid.marked(nr, nc)) continue;
            seen[nr][nc] = true;
            q.push({nr, nc});
        }
    }
    bool reaches_node = false;
    for (auto [r, c] : node) reaches_node |= seen[r][c];
    t.expect(reaches_node, "loop through (-1, 0) joins the origin component");
    t.expect(top && bottom, "both branches through the node reach the window edge");
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 = no runtime bound
    std::function<void(Tally&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "ring-axiom suite", 5, ring_axioms},
        {2, "ideals of Z/n", 10, ideals_mod_n},
        {3, "prime-definition equivalence", 0, prime_definitions},
        {4, "Z primality table", 0, z_primality},
        {5, "Galois-connection suite over F_2^2", 60, galois_suite},
        {6, "hypersurface intersection", 0, hypersurfaces},
        {7, "decomposition", 0, decomposition},
        {8, "irreducible iff prime", 0, irreducible_prime},
        {9, "membership certificates", 0, membership},
        {10, "non-Noetherian chain and generator extraction", 0, chains_and_extraction},
        {11, "motivating radical examples", 0, radical_examples},
        {12, "nodal cubic plot", 0, nodal_cubic_plot},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        std::string error;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
        const bool pass = error.empty() && t.failures == 0 && t.checks > 0 && in_time;
        failed += !pass;
        std::printf("%s  %2d  %-48s %8zu checks  %7.2f s", pass ? "PASS" : "FAIL", c.id, c.name, t.checks, secs);
        if (c.limit_seconds > 0) std::printf(" (limit %.0f s)", c.limit_seconds);
        if (!error.empty()) std::printf("  exception: %s", error.c_str());
        if (t.failures) std::printf("  %zu failed, first: %s", t.failures, t.first.c_str());
        std::printf("\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
