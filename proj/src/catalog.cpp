#include "chern/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "chern/errors.hpp"

namespace chern {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

RingPtr point_ring() {
    RingDescription d;
    d.dimension = 0;
    d.basis = {{"1", 0}};
    d.top = "1";
    return RingPresentation::create(d);
}

RingPtr projective_space_ring(int n) {
    if (n < 1)
        throw PreconditionError("projective_space_ring: n >= 1");
    RingDescription d;
    d.dimension = n;
    d.basis.push_back({"1", 0});
    for (int i = 1; i <= n; ++i)
        d.basis.push_back({i == 1 ? "h" : "h" + std::to_string(i), 2 * i});
    auto name = [&](int i) { return d.basis[static_cast<size_t>(i)].name; };
    d.top = name(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; i + j <= n; ++j)
            d.products.push_back({name(i), name(j), {{name(i + j), Rational(1)}}});
    return RingPresentation::create(d);
}

ChernData projective_space_tangent(const RingPtr& ring, int n) {
    std::vector<RingElement> classes;
    for (int i = 1; i <= n; ++i) {
        // c(P^n) = (1+h)^(n+1)
        RingElement c = ring_symbol(ring, i == 1 ? "h" : "h" + std::to_string(i));
        c *= Rational(binomial(n + 1, i));
        classes.push_back(c);
    }
    return ChernData(ring, n, std::move(classes));
}

RingPtr curve_ring() {
    RingDescription d;
    d.dimension = 1;
    d.basis = {{"1", 0}, {"F", 2}};
    d.top = "F";
    return RingPresentation::create(d);
}

ChernData curve_tangent(const RingPtr& ring, int genus) {
    RingElement c1 = ring_symbol(ring, "F");
    c1 *= Rational(2 - 2 * genus);
    return ChernData(ring, 1, {c1});
}

RingPtr abelian_surface_ring(const Rational& polarization) {
    RingDescription d;
    d.dimension = 2;
    d.basis = {{"1", 0}, {"theta", 2}, {"pt", 4}};
    d.top = "pt";
    d.products.push_back({"theta", "theta", {{"pt", polarization}}});
    return RingPresentation::create(d);
}

ChernData abelian_surface_tangent(const RingPtr& ring) {
    // trivial tangent bundle: c_1 = c_2 = 0
    return ChernData(ring, 2, {ring_zero(ring), ring_zero(ring)});
}

RingPtr dolgachev_subring(const Rational& w, const Rational& t) {
    RingDescription d;
    d.dimension = 2;
    d.basis = {{"1", 0}, {"omega", 2}, {"G", 2}, {"pt", 4}};
    d.top = "pt";
    d.products.push_back({"omega", "omega", {{"pt", w}}});
    d.products.push_back({"omega", "G", {{"pt", t}}});
    // G*G = 0 is the default for unlisted pairs
    return RingPresentation::create(d);
}

namespace {

RingPtr catalog_atom(const std::string& raw) {
    std::string name = trim(raw);
    std::string args;
    size_t paren = name.find('(');
    if (paren != std::string::npos) {
        if (name.back() != ')')
            throw ParseError("bad catalog name '" + raw + "'");
        args = name.substr(paren + 1, name.size() - paren - 2);
        name = trim(name.substr(0, paren));
    }

    auto split_args = [&]() {
        std::vector<std::string> out;
        std::istringstream in(args);
        std::string tok;
        while (std::getline(in, tok, ','))
            out.push_back(trim(tok));
        return out;
    };

    if (name == "point") {
        return point_ring();
    }
    if (name.rfind("pp", 0) == 0 && name.size() > 2 &&
        std::all_of(name.begin() + 2, name.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        return projective_space_ring(std::stoi(name.substr(2)));
    }
    if (name == "curve") {
        return curve_ring();  // the even part does not depend on the genus
    }
    if (name == "abelian") {
        Rational d = 2;
        if (!args.empty()) {
            auto a = split_args();
            if (a.size() != 1)
                throw ParseError("abelian takes one argument");
            d = parse_rational(a[0]);
        }
        return abelian_surface_ring(d);
    }
    if (name == "dolgachev") {
        Rational w = 1, t = 1;
        if (!args.empty()) {
            auto a = split_args();
            if (a.size() != 2)
                throw ParseError("dolgachev takes two arguments (w, t)");
            w = parse_rational(a[0]);
            t = parse_rational(a[1]);
        }
        return dolgachev_subring(w, t);
    }
    throw ParseError("unknown catalog ring '" + raw + "'");
}

}  // namespace

RingPtr catalog_ring(const std::string& name) {
    // split on "x" tokens that stand alone (surrounded by separators)
    std::vector<std::string> factors;
    std::string current;
    std::istringstream in(name);
    std::string word;
    while (in >> word) {
        if (word == "x") {
            if (current.empty())
                throw ParseError("bad catalog product '" + name + "'");
            factors.push_back(current);
            current.clear();
        } else {
            if (!current.empty())
                current += " ";
            current += word;
        }
    }
    if (current.empty())
        throw ParseError("empty catalog name");
    factors.push_back(current);

    RingPtr result = catalog_atom(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i)
        result = product_ring(result, catalog_atom(factors[i]));
    return result;
}

bool is_catalog_name(const std::string& name) {
    try {
        catalog_ring(name);
        return true;
    } catch (const ParseError&) {
        return false;
    } catch (const PreconditionError&) {
        return false;
    }
}

}  // namespace chern
