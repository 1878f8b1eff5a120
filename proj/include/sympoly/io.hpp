#ifndef SYMPOLY_IO_HPP
#define SYMPOLY_IO_HPP

// JSON and text serialization. Needs nlohmann/json on the include path;
// the computational headers do not depend on this one.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flows.hpp"
#include "graph.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"

namespace sympoly::io {

using json = nlohmann::ordered_json;

/// Integers beyond 2^53 become decimal strings so JSON stays lossless.
inline json number(const Integer& x)
{
    static const Integer limit = Integer(1) << 53;
    if (x < limit && x > -limit)
        return static_cast<std::int64_t>(x);
    return x.str();
}

/// Integral rationals as numbers, others as "p/q".
inline json number(const Rational& x)
{
    if (denominator(x) == 1)
        return number(numerator(x));
    return x.str();
}

template <class T>
json numbers(const std::vector<T>& xs)
{
    json out = json::array();
    for (const auto& x : xs)
        out.push_back(number(x));
    return out;
}

/// Coefficients, lowest degree first.
template <class T>
json polynomial(const Polynomial<T>& p)
{
    return numbers(p.coeffs());
}

inline json rational_function(const RationalFunction& f)
{
    return {{"num", polynomial(f.num())}, {"den", polynomial(f.den())}};
}

inline Integer parse_integer(const json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos)
            return Integer(s);
    }
    throw Error(ErrorKind::InvalidArgument, "expected an integer, got " + j.dump());
}

inline Rational parse_rational(const json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (const auto slash = s.find('/'); slash != std::string::npos) {
            const Integer den = parse_integer(s.substr(slash + 1));
            if (den == 0)
                throw Error(ErrorKind::InvalidArgument, "zero denominator in " + s);
            return Rational(parse_integer(s.substr(0, slash)), den);
        }
    }
    return Rational(parse_integer(j));
}

inline RatPolynomial parse_polynomial(const json& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::InvalidArgument, "polynomial must be a coefficient array");
    std::vector<Rational> c;
    for (const auto& x : j)
        c.push_back(parse_rational(x));
    return RatPolynomial(std::move(c));
}

inline RationalFunction parse_rational_function(const json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw Error(ErrorKind::InvalidArgument, "rational function needs \"num\" and \"den\"");
    const RatPolynomial den = parse_polynomial(j.at("den"));
    if (den.is_zero())
        throw Error(ErrorKind::DivisionByZeroPolynomial, "zero denominator");
    return RationalFunction(parse_polynomial(j.at("num")), den);
}

namespace detail {

struct RawEdges {
    std::size_t n = 0;
    std::vector<Edge> edges;
};

inline RawEdges raw_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error(ErrorKind::InvalidGraph, "graph JSON needs \"n\" and \"edges\"");
    const auto& n = j.at("n");
    if (!n.is_number_integer() || n.get<std::int64_t>() < 0)
        throw Error(ErrorKind::InvalidGraph, "\"n\" must be a nonnegative integer");
    RawEdges raw{static_cast<std::size_t>(n.get<std::int64_t>()), {}};
    if (!j.at("edges").is_array())
        throw Error(ErrorKind::InvalidGraph, "\"edges\" must be an array");
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw Error(ErrorKind::InvalidGraph, "edge must be a pair of integers: " + e.dump());
        raw.edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return raw;
}

/// "u v" per line; '#' starts a comment; n is one more than the largest label.
inline RawEdges raw_from_text(const std::string& text)
{
    RawEdges raw;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        long u = 0, v = 0;
        if (!(ls >> u)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            throw Error(ErrorKind::InvalidGraph, "line " + std::to_string(lineno) + " is not \"u v\"");
        }
        std::string rest;
        if (!(ls >> v) || (ls >> rest))
            throw Error(ErrorKind::InvalidGraph, "line " + std::to_string(lineno) + " is not \"u v\"");
        if (u < 0 || v < 0)
            throw Error(ErrorKind::InvalidGraph, "negative vertex label on line " + std::to_string(lineno));
        raw.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        raw.n = std::max<std::size_t>(raw.n, static_cast<std::size_t>(std::max(u, v)) + 1);
    }
    return raw;
}

inline RawEdges raw_from_string(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::InvalidGraph, std::string("malformed JSON: ") + e.what());
        }
        return raw_from_json(j);
    }
    return raw_from_text(text);
}

} // namespace detail

inline Graph graph_from_json(const json& j)
{
    auto raw = detail::raw_from_json(j);
    return Graph(raw.n, std::move(raw.edges));
}

/// Graph JSON if the text starts with '{', otherwise an edge list.
inline Graph parse_graph(const std::string& text)
{
    auto raw = detail::raw_from_string(text);
    return Graph(raw.n, std::move(raw.edges));
}

/// Same formats as parse_graph; repeated pairs are kept as parallel edges.
inline Multigraph parse_multigraph(const std::string& text)
{
    auto raw = detail::raw_from_string(text);
    return Multigraph(raw.n, std::move(raw.edges));
}

inline json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

inline json multigraph_to_json(const Multigraph& g)
{
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

} // namespace sympoly::io

#endif
