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

#include "idealab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "idealab/int_ideals.hpp"
#include "idealab/json_io.hpp"
#include "idealab/poly.hpp"
#include "idealab/poly_ideals.hpp"
#include "idealab/raster.hpp"
#include "idealab/varieties.hpp"

namespace idealab::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "text";
    std::string vars;
    std::string field = "q";
    std::uint64_t bound = 3;
};

struct Payload {
    std::string text;
    json data;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::vector<std::string> split_letters(const std::string& s) {
    std::vector<std::string> out;
    for (char c : s) out.emplace_back(1, c);
    return out;
}

// --vars when given; otherwise "x,y,z" truncated to the highest of those
// names used by the expressions (at least `min_arity`).
PolyRingPtr resolve_ring(const Options& opt, const std::vector<std::string>& exprs, std::size_t min_arity = 1) {
    Domain domain = Domain::parse(opt.field);
    if (!opt.vars.empty()) return make_ring(std::move(domain), split(opt.vars, ','));
    const std::vector<std::string> defaults{"x", "y", "z"};
    std::size_t arity = min_arity;
    for (const auto& e : exprs)
        for (const auto& id : identifiers_in(e)) {
            // Juxtaposed names such as "xy" count letter by letter.
            const bool juxtaposed = id.find_first_not_of("xyz") == std::string::npos;
            for (const auto& name : juxtaposed ? split_letters(id) : std::vector<std::string>{id}) {
                auto it = std::find(defaults.begin(), defaults.end(), name);
                if (it != defaults.end()) arity = std::max<std::size_t>(arity, it - defaults.begin() + 1);
            }
        }
    std::vector<std::string> vars(defaults.begin(), defaults.begin() + std::min<std::size_t>(arity, 3));
    return make_ring(std::move(domain), std::move(vars));
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& exprs, const PolyRingPtr& ring) {
    std::vector<Polynomial> out;
    for (const auto& e : exprs) out.push_back(parse_polynomial(e, ring));
    return out;
}

std::uint64_t prime_of(const PolyRingPtr& ring) {
    if (ring->domain().kind() != DomainKind::PrimeField)
        throw Error(ErrorKind::UnsupportedDomain, "this command needs --field fp:<p>, got " + ring->domain().name());
    return ring->domain().modulus().get_ui();
}

Point parse_point(const std::string& text, std::size_t n) {
    Point pt;
    for (const auto& c : split(text, ',')) {
        if (c.empty() || c.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::SyntaxError, "bad point coordinate '" + c + "' in '" + text + "'");
        pt.push_back(std::stoull(c));
    }
    if (pt.size() != n)
        throw Error(ErrorKind::SyntaxError, "point '" + text + "' has " + std::to_string(pt.size()) + " coordinates, expected " +
                                                std::to_string(n));
    return pt;
}

std::string point_text(const Point& x) {
    std::vector<std::string> parts;
    for (auto c : x) parts.push_back(std::to_string(c));
    return "(" + join(parts, ", ") + ")";
}

std::string point_text(const std::vector<RingElement>& x) {
    std::vector<std::string> parts;
    for (const auto& c : x) parts.push_back(c.to_string());
    return "(" + join(parts, ", ") + ")";
}

json elements_json(const std::vector<RingElement>& x) {
    json out = json::array();
    for (const auto& c : x) out.push_back(c.to_string());
    return out;
}

std::string points_text(const PointSet& x) {
    if (x.is_empty()) return "(empty)\n";
    std::string out;
    for (const auto& pt : x.points()) out += point_text(pt) + "\n";
    return out;
}

json polys_json(const std::vector<Polynomial>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(to_json(p));
    return out;
}

std::string polys_text(const std::vector<Polynomial>& ps, const std::string& indent = "  ") {
    std::string out;
    for (const auto& p : ps) out += indent + format(p) + "\n";
    return out;
}

PointSet parse_points(const std::vector<std::string>& texts, const Options& opt) {
    std::size_t n = 0;
    if (!opt.vars.empty())
        n = split(opt.vars, ',').size();
    else if (!texts.empty())
        n = split(texts.front(), ',').size();
    else
        n = 1;
    PolyRingPtr ring = resolve_ring(opt, {}, n);
    std::vector<Point> pts;
    for (const auto& t : texts) pts.push_back(parse_point(t, ring->arity()));
    return PointSet(prime_of(ring), ring->arity(), std::move(pts));
}

PolyRingPtr ring_for_points(const PointSet& x, const Options& opt) {
    PolyRingPtr ring = resolve_ring(opt, {}, x.dimension());
    if (ring->arity() != x.dimension()) return point_ring(x.prime(), x.dimension());
    return ring;
}

std::pair<std::string, json> certificate_payload(const MembershipCertificate& cert) {
    if (const auto* m = std::get_if<Member>(&cert.verdict)) {
        std::vector<std::string> parts;
        for (const auto& h : m->cofactors) parts.push_back(format(h));
        return {"member: cofactors [" + join(parts, ", ") + "]", {{"verdict", "member"}, {"cofactors", polys_json(m->cofactors)}}};
    }
    if (const auto* nm = std::get_if<NonMember>(&cert.verdict))
        return {"non-member: witness " + point_text(nm->witness),
                {{"verdict", "non-member"}, {"witness", elements_json(nm->witness)}}};
    const auto& u = std::get<Unknown>(cert.verdict);
    return {"unknown: no certificate with cofactor degree <= " + std::to_string(u.bound),
            {{"verdict", "unknown"}, {"bound", u.bound}}};
}

Payload vanishing_payload(const VanishingIdealResult& r) {
    return {"generators:\n" + polys_text(r.generators) + "field equations:\n" + polys_text(r.field_equations),
            {{"generators", polys_json(r.generators)}, {"field_equations", polys_json(r.field_equations)}}};
}

std::string comparison_name(Comparison c) {
    switch (c) {
        case Comparison::EqualWithinBound: return "equal-within-bound";
        case Comparison::LeftNotInRight: return "left-not-in-right";
        case Comparison::RightNotInLeft: return "right-not-in-left";
        case Comparison::Unknown: return "unknown";
    }
    return {};
}

Payload comparison_payload(const IdealComparison& c) {
    json j{{"outcome", comparison_name(c.outcome)}};
    std::string text = comparison_name(c.outcome);
    if (c.separating) {
        j["separating"] = to_json(*c.separating);
        j["witness"] = elements_json(c.witness);
        text += ": " + format(*c.separating) + " fails at " + point_text(c.witness);
    }
    return {text + "\n", j};
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError:
        case ErrorKind::UnknownVariable:
        case ErrorKind::BadCoefficient:
        case ErrorKind::InvalidDomain:
        case ErrorKind::DegenerateWindow: return Usage;
        case ErrorKind::TooLarge: return ResourceLimit;
        default: return DomainError;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"idealab: exact commutative algebra at desk scale", "idealab"};
    app.fallthrough();
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--vars", opt.vars, "Comma-separated variable names (default x,y,z truncated to the needed arity)");
    app.add_option("--field", opt.field, "Coefficient domain: q | z | fp:<p> | zn:<n>");
    app.add_option("--bound", opt.bound, "Cofactor degree bound for membership searches");

    std::function<Payload()> action;
    auto bind = [&](CLI::App* sub, std::function<Payload()> fn) { sub->callback([&action, fn] { action = fn; }); };

    std::string expr;
    std::vector<std::string> exprs, points, left, right, ints;
    std::size_t k = 0;
    std::uint64_t n = 0;

    auto* parse_cmd = app.add_subcommand("parse", "Parse and print a polynomial in canonical form");
    parse_cmd->add_option("expr", expr)->required();
    bind(parse_cmd, [&] {
        auto f = parse_polynomial(expr, resolve_ring(opt, {expr}));
        return Payload{format(f) + "\n", to_json(f)};
    });

    auto* variety_cmd = app.add_subcommand("variety", "Common zeros over F_p of the given polynomials");
    variety_cmd->add_option("exprs", exprs);
    bind(variety_cmd, [&] {
        auto ring = resolve_ring(opt, exprs);
        prime_of(ring);
        auto x = variety(IdealPresentation(ring, parse_all(exprs, ring)));
        return Payload{points_text(x), {{"points", to_json(x)}}};
    });

    auto* videal_cmd = app.add_subcommand("videal", "Vanishing ideal of a set of points, e.g. 0,0 1,1");
    videal_cmd->add_option("points", points);
    bind(videal_cmd, [&] {
        auto x = parse_points(points, opt);
        return vanishing_payload(vanishing_ideal(x, ring_for_points(x, opt)));
    });

    auto* viv_cmd = app.add_subcommand("viv", "I(V(S)) with certificates that S is contained in it");
    viv_cmd->add_option("exprs", exprs);
    bind(viv_cmd, [&] {
        auto ring = resolve_ring(opt, exprs);
        prime_of(ring);
        auto gens = parse_all(exprs, ring);
        IdealPresentation s(ring, gens);
        auto r = viv_closure(s);
        Payload p = vanishing_payload(r.ideal);
        p.text += "inclusion:\n";
        json incl = json::array();
        for (std::size_t i = 0; i < r.inclusion.size(); ++i) {
            auto [t, j] = certificate_payload(r.inclusion[i]);
            p.text += "  " + format(s.generators()[i]) + " -> " + t + "\n";
            incl.push_back(j);
        }
        p.data["inclusion"] = incl;
        return p;
    });

    auto* decompose_cmd = app.add_subcommand("decompose", "Irreducible components of a point set");
    decompose_cmd->add_option("points", points);
    bind(decompose_cmd, [&] {
        auto parts = decompose(parse_points(points, opt));
        Payload p{"", {{"components", json::array()}}};
        if (parts.empty()) p.text = "(no components)\n";
        for (const auto& c : parts) {
            p.text += "{" + point_text(c.points().front()) + "}\n";
            p.data["components"].push_back(to_json(c));
        }
        return p;
    });

    auto* prime_cmd = app.add_subcommand("prime-check", "Whether I(X) is prime, with a witness pair when it is not");
    prime_cmd->add_option("points", points);
    bind(prime_cmd, [&] {
        auto x = parse_points(points, opt);
        auto r = is_prime_vanishing_ideal(x, ring_for_points(x, opt));
        Payload p{r.prime ? "prime\n" : "not prime\n", {{"prime", r.prime}}};
        if (x.is_empty()) p.text = "not prime: I(empty set) is the whole ring\n";
        if (r.witnesses) {
            p.text = "not prime: f*g vanishes on X with\n  f = " + format(r.witnesses->first) +
                     "\n  g = " + format(r.witnesses->second) + "\n";
            p.data["witnesses"] = json::array({to_json(r.witnesses->first), to_json(r.witnesses->second)});
        }
        return p;
    });

    auto* member_cmd = app.add_subcommand("member", "Bounded ideal membership: f g1 g2 ...");
    member_cmd->add_option("f", expr)->required();
    member_cmd->add_option("generators", exprs);
    bind(member_cmd, [&] {
        std::vector<std::string> all = exprs;
        all.push_back(expr);
        auto ring = resolve_ring(opt, all);
        auto cert = membership_bounded(parse_polynomial(expr, ring), IdealPresentation(ring, parse_all(exprs, ring)), opt.bound);
        auto [t, j] = certificate_payload(cert);
        return Payload{t + "\n", j};
    });

    auto* eq_cmd = app.add_subcommand("ideal-eq", "Compare two ideals by bounded mutual membership");
    eq_cmd->add_option("--left", left, "Generator of the left ideal (repeatable)");
    eq_cmd->add_option("--right", right, "Generator of the right ideal (repeatable)");
    bind(eq_cmd, [&] {
        std::vector<std::string> all = left;
        all.insert(all.end(), right.begin(), right.end());
        auto ring = resolve_ring(opt, all);
        return comparison_payload(ideal_equal_bounded(IdealPresentation(ring, parse_all(left, ring)),
                                                      IdealPresentation(ring, parse_all(right, ring)), opt.bound));
    });

    auto* radical_cmd = app.add_subcommand("radical", "Squarefree part of a univariate polynomial");
    radical_cmd->add_option("expr", expr)->required();
    bind(radical_cmd, [&] {
        auto r = radical_univariate(parse_polynomial(expr, resolve_ring(opt, {expr})));
        return Payload{format(r) + "\n", to_json(r)};
    });

    auto* chain_cmd = app.add_subcommand("chain-demo", "Certify (X1) < (X1,X2) < ... for k steps");
    chain_cmd->add_option("k", k)->required();
    bind(chain_cmd, [&] {
        std::vector<std::string> vars;
        if (opt.vars.empty())
            for (std::size_t i = 1; i <= k + 1; ++i) vars.push_back("x" + std::to_string(i));
        else
            vars = split(opt.vars, ',');
        auto ring = make_ring(Domain::parse(opt.field), vars);
        auto log = strict_chain_demo(k, ring);
        Payload p{"", {{"steps", json::array()}}};
        for (const auto& s : log) {
            std::vector<std::string> g;
            for (const auto& x : s.generators) g.push_back(format(x));
            p.text += format(s.candidate) + " not in (" + join(g, ", ") + "): witness " + point_text(s.witness) +
                      (s.verified ? "" : " [NOT VERIFIED]") + "\n";
            p.data["steps"].push_back({{"generators", polys_json(s.generators)},
                                       {"candidate", to_json(s.candidate)},
                                       {"witness", elements_json(s.witness)},
                                       {"verified", s.verified}});
        }
        if (log.empty()) p.text = "(empty chain)\n";
        return p;
    });

    auto* hbt_cmd = app.add_subcommand("hbt", "Extract the generator of a univariate ideal over a field");
    hbt_cmd->add_option("generators", exprs);
    bind(hbt_cmd, [&] {
        auto ring = resolve_ring(opt, exprs);
        auto r = hbt_extract_univariate(IdealPresentation(ring, parse_all(exprs, ring)));
        json profile = json::array();
        std::string text = "extracted: " + format(r.extracted) + "\nleading coefficients by degree:\n";
        for (const auto& lvl : r.j_profile) {
            text += "  deg <= " + std::to_string(lvl.degree) + ": " + (lvl.zero ? "(0)" : ring->domain().name()) + "\n";
            profile.push_back({{"degree", lvl.degree}, {"zero", lvl.zero}});
        }
        auto cmp = comparison_payload(r.check);
        text += "check: " + cmp.text;
        return Payload{text, {{"extracted", to_json(r.extracted)}, {"j_profile", profile}, {"check", cmp.data}}};
    });

    auto* zideal_cmd = app.add_subcommand("zideal", "Ideals of Z");
    zideal_cmd->require_subcommand(1);
    auto* zgens = zideal_cmd->add_subcommand("gens", "Principal form of the ideal generated by integers");
    zgens->add_option("ints", ints);
    auto to_mpz = [](const std::string& s) {
        try {
            return mpz_class(s);
        } catch (const std::invalid_argument&) {
            throw Error(ErrorKind::SyntaxError, "bad integer '" + s + "'");
        }
    };
    auto to_mpzs = [&] {
        std::vector<mpz_class> v;
        for (const auto& s : ints) v.push_back(to_mpz(s));
        return v;
    };
    bind(zgens, [&] {
        auto I = IntIdeal::from_generators(to_mpzs());
        return Payload{I.to_string() + "\n", {{"generator", I.generator().get_str()}}};
    });
    auto* zprime = zideal_cmd->add_subcommand("prime", "Primality of (n)");
    zprime->add_option("n", expr)->required();
    bind(zprime, [&] {
        IntIdeal I(to_mpz(expr));
        json j{{"ideal", I.to_string()}, {"prime", I.is_prime()}};
        std::string text;
        if (I.is_prime()) {
            text = "prime: " + I.to_string();
        } else if (auto w = non_prime_witness(I)) {
            const std::string g = I.generator().get_str(), a = w->first.get_str(), b = w->second.get_str();
            text = "not prime: " + g + " = " + a + "*" + b + " with " + a + "," + b + " not in " + I.to_string();
            j["witness"] = {a, b};
        } else {
            text = "not prime: " + I.to_string() + " is the whole ring";
        }
        return Payload{text + "\n", j};
    });
    auto* zcontains = zideal_cmd->add_subcommand("contains", "Whether z lies in (g): g z");
    zcontains->add_option("ints", ints)->expected(2)->required();
    bind(zcontains, [&] {
        IntIdeal I(to_mpz(ints.at(0)));
        const bool in = I.contains(to_mpz(ints.at(1)));
        return Payload{std::string(in ? "true" : "false") + "\n",
                       {{"ideal", I.to_string()}, {"element", ints.at(1)}, {"contains", in}}};
    });

    auto* mod_cmd = app.add_subcommand("ideals-mod", "All ideals of Z/n");
    mod_cmd->add_option("n", n)->required();
    bind(mod_cmd, [&] {
        Payload p{"", {{"modulus", n}, {"ideals", json::array()}}};
        std::uint64_t d = 0;
        for (const auto& I : enumerate_ideals_mod_n(n)) {
            do ++d;
            while (n % d);
            std::vector<std::string> elems;
            for (auto e : I.elements()) elems.push_back(std::to_string(e));
            p.text += "(" + std::to_string(d % n) + "): {" + join(elems, ", ") + "}\n";
            p.data["ideals"].push_back({{"generator", std::to_string(d % n)}, {"elements", elems}});
        }
        return p;
    });

    std::string window = "-2:2,-2:2";
    std::string res = "64";
    bool as_svg = false;
    auto* plot_cmd = app.add_subcommand("plot", "Rasterise the real plane curve f(x, y) = 0");
    plot_cmd->add_option("expr", expr)->required();
    plot_cmd->add_option("--window", window, "xmin:xmax,ymin:ymax");
    plot_cmd->add_option("--res", res, "Resolution N or COLSxROWS");
    plot_cmd->add_flag("--svg", as_svg, "Emit SVG instead of ASCII");
    bind(plot_cmd, [&] {
        Options o = opt;
        if (o.vars.empty()) o.vars = "x,y";
        auto ring = resolve_ring(o, {expr});
        std::size_t cols, rows;
        try {
            auto parts = split(res, 'x');
            if (parts.size() == 1) parts.push_back(parts[0]);
            if (parts.size() != 2) throw std::invalid_argument(res);
            cols = std::stoul(parts[0]);
            rows = std::stoul(parts[1]);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::DegenerateWindow, "bad resolution '" + res + "'");
        }
        const Window w = Window::parse(window);
        auto grid = raster_plane_curve(parse_polynomial(expr, ring), w, cols, rows);
        json j{{"window", {{"xmin", w.xmin.get_str()}, {"xmax", w.xmax.get_str()}, {"ymin", w.ymin.get_str()}, {"ymax", w.ymax.get_str()}}},
               {"res", {cols, rows}},
               {"rows", grid.ascii_rows()}};
        return Payload{as_svg ? grid.svg() : grid.ascii(), j};
    });

    std::vector<const char*> argv{"idealab"};
    // The only short flag is -h, so "-x^2" or "-2:2,-2:2" is a value. A leading
    // space keeps CLI11 from reading it as an option; every consumer skips whitespace.
    std::vector<std::string> shielded;
    shielded.reserve(args.size());
    for (const auto& a : args)
        shielded.push_back(a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h" ? " " + a : a);
    for (const auto& a : shielded) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }

    try {
        Payload p = action();
        if (opt.format == "json" && !(plot_cmd->parsed() && as_svg))
            out << p.data.dump(2) << "\n";
        else
            out << p.text;
        out.flush();
        return Ok;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

}  // namespace idealab::cli
