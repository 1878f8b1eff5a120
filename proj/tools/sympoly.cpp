// sympoly: command-line front end. Every subcommand prints one JSON object
// on stdout (a key/value table with --pretty). Usage errors exit 2, domain
// errors exit 1; both print {"error": kind, "detail": text}.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sympoly/io.hpp"
#include "sympoly/sympoly.hpp"

namespace {

using sympoly::io::json;
namespace io = sympoly::io;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

template <class T>
std::vector<T> split_list(const std::string& text, const std::string& what)
{
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::istringstream is(item);
        T value{};
        std::string rest;
        if (!(is >> value) || (is >> rest))
            throw UsageError(what + ": '" + item + "' is not an integer");
        out.push_back(value);
    }
    return out;
}

json labeling(const sympoly::FacetLabeling& f) { return f.values; }

// Edge ranks of a simplex, 1-based, negated when the edge runs against its
// stored orientation.
json signed_simplex(const sympoly::Graph& g, const sympoly::FacetLabeling& f, const sympoly::EdgeSet& simplex)
{
    json out = json::array();
    for (std::size_t r : simplex) {
        const auto& e = g.edge(r);
        const long rank = static_cast<long>(r) + 1;
        out.push_back(f[e.v] - f[e.u] == 1 ? rank : -rank);
    }
    return out;
}

std::string polynomial_text(const json& coeffs)
{
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::string c = coeffs[i].is_string() ? coeffs[i].get<std::string>() : coeffs[i].dump();
        if (c == "0")
            continue;
        const bool negative = c[0] == '-';
        if (negative)
            c.erase(0, 1);
        s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (i == 0 || c != "1")
            s += c;
        if (i > 0)
            s += (c != "1" ? "*" : "") + std::string("s") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s.empty() ? "0" : s;
}

std::string cell(const json& v)
{
    if (v.is_object() && v.contains("num") && v.contains("den"))
        return "(" + polynomial_text(v["num"]) + ") / (" + polynomial_text(v["den"]) + ")";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
        std::string s;
        for (const auto& x : v)
            s += (s.empty() ? "" : " ") + cell(x);
        return s.empty() ? "-" : s;
    }
    return v.dump();
}

void print_pretty(const json& out)
{
    if (out.contains("criteria")) {
        for (const auto& c : out["criteria"]) {
            std::cout << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << std::setw(2) << c["id"].get<int>()
                      << "  " << c["name"].get<std::string>() << '\n';
            for (const auto& f : c["failures"])
                std::cout << "          failed: " << f.get<std::string>() << '\n';
            for (const auto& n : c["notes"])
                std::cout << "          note: " << n.get<std::string>() << '\n';
        }
        return;
    }
    std::size_t width = 0;
    for (const auto& [key, value] : out.items())
        width = std::max(width, key.size());
    for (const auto& [key, value] : out.items()) {
        if (value.is_array() && !value.empty() && value[0].is_array()) {
            std::cout << std::left << std::setw(static_cast<int>(width)) << key << '\n';
            for (const auto& row : value)
                std::cout << "  " << cell(row) << '\n';
        } else {
            std::cout << std::left << std::setw(static_cast<int>(width)) << key << "  " << cell(value) << '\n';
        }
    }
}

json cmd_facets(const sympoly::Graph& g, bool count_only, bool with_fvector)
{
    json out;
    const auto facets = sympoly::enumerate_facets(g);
    out["count"] = facets.size();
    if (!count_only) {
        json list = json::array();
        for (const auto& f : facets)
            list.push_back(labeling(f));
        out["facets"] = list;
    }
    if (with_fvector)
        out["fvector"] = io::numbers(sympoly::fvector(g));
    return out;
}

json cmd_volume(const sympoly::Graph& g, const std::string& triangulation_path)
{
    if (triangulation_path.empty())
        return {{"volume", io::number(sympoly::normalized_volume(g))}};
    const auto tri = sympoly::triangulation(g);
    sympoly::Integer total = 0;
    json doc = json::array();
    for (const auto& piece : tri) {
        json simplices = json::array();
        for (const auto& s : piece.simplices)
            simplices.push_back(signed_simplex(g, piece.facet, s));
        doc.push_back({{"facet", labeling(piece.facet)}, {"simplices", simplices}});
        total += piece.simplices.size();
    }
    std::ofstream file(triangulation_path);
    if (!file)
        throw UsageError("cannot write " + triangulation_path);
    file << doc.dump() << '\n';
    return {{"volume", io::number(total)}, {"triangulation", triangulation_path}};
}

json cmd_hstar(const sympoly::Graph& g)
{
    const auto data = sympoly::h_star(g);
    return {{"ehrhart", io::polynomial(data.ehrhart)},
            {"hstar", io::polynomial(data.hstar)},
            {"gamma", io::numbers(data.gamma)},
            {"volume", io::number(sympoly::ehrhart_volume(data))}};
}

json cmd_gj(int alphabet, const std::string& bad, bool cyclic, std::size_t orders)
{
    if (alphabet < 1)
        throw UsageError("--alphabet must be positive");
    // Symbols are single characters numbered by first appearance.
    std::string symbols;
    sympoly::BadWordSet b{alphabet, {}};
    std::stringstream ss(bad);
    std::string item;
    while (std::getline(ss, item, ',')) {
        sympoly::Word w;
        for (char ch : item) {
            auto pos = symbols.find(ch);
            if (pos == std::string::npos) {
                pos = symbols.size();
                symbols.push_back(ch);
            }
            w.push_back(static_cast<int>(pos));
        }
        b.words.push_back(std::move(w));
    }
    sympoly::validate(b);
    const sympoly::RationalFunction f = cyclic ? sympoly::gj_cyclic(b).genfun : sympoly::gj_linear(b);
    json symbol_map = json::object();
    for (std::size_t i = 0; i < symbols.size(); ++i)
        symbol_map[std::string(1, symbols[i])] = i;
    return {{"genfun", io::rational_function(f)},
            {"series", io::numbers(sympoly::series_coefficients(f, orders))},
            {"symbols", symbol_map}};
}

json cmd_family(const std::string& name, long k, long n, long i, long j, const std::string& a, long s, long t)
{
    auto need = [](long value, const char* flag) {
        if (value < 0)
            throw UsageError(std::string("this family needs ") + flag);
        return value;
    };
    if (name == "cycle") {
        const auto inv = sympoly::cycle_invariants(need(k, "--k"));
        return {{"facets", io::number(inv.facets)}, {"volume", io::number(inv.volume)}, {"fvector", io::numbers(inv.fvector)}};
    }
    if (name == "tree") {
        const auto inv = sympoly::tree_invariants(need(n, "--n"));
        return {{"facets", io::number(inv.facets)}, {"volume", io::number(inv.volume)}, {"hstar", io::polynomial(inv.hstar)}};
    }
    if (name == "wheel") {
        need(n, "--n");
        return {{"facets", io::number(sympoly::wheel_facets(n))}, {"volume", io::number(sympoly::wheel_volume(n))}};
    }
    if (name == "complete")
        return {{"facets", io::number(sympoly::complete_graph_facets(need(n, "--n")))}};
    if (name == "join-odd")
        return {{"volume", io::number(sympoly::odd_cycles_edge_join_volume(need(i, "--i"), need(j, "--j")))}};
    if (name == "outerplanar") {
        if (a.empty())
            throw UsageError("outerplanar needs --a");
        const auto inv = sympoly::outerplanar_bipartite(split_list<long>(a, "--a"), need(s, "--s"), need(t, "--t"));
        return {{"facets", io::number(inv.facets)}, {"volume", io::number(inv.volume)}};
    }
    throw UsageError("unknown family '" + name + "'");
}

json point(const sympoly::RationalPoint& p) { return io::numbers(p); }

json cmd_kr(const sympoly::Graph& g, const std::string& subset, bool verify)
{
    const auto v1 = split_list<sympoly::Vertex>(subset, "--subset");
    const auto kr = sympoly::kr_generators(g, v1);
    json gens = json::array(), verts = json::array();
    for (const auto& p : kr.points)
        gens.push_back(point(p));
    for (const auto& p : sympoly::section_vertices(g, v1))
        verts.push_back(point(p));
    json out{{"generators", gens}, {"section_vertices", verts}};
    if (verify)
        out["equal"] = sympoly::verify_section_equality(g, v1);
    return out;
}

json cmd_verify(const std::string& suite)
{
    if (suite != "paper")
        throw UsageError("unknown suite '" + suite + "'");
    json criteria = json::array();
    bool all = true;
    for (const auto& c : sympoly::verify::reproduction_suite()) {
        const auto o = sympoly::verify::run(c);
        all = all && o.pass;
        criteria.push_back({{"id", c.id}, {"name", c.name}, {"pass", o.pass}, {"failures", o.failures}, {"notes", o.notes}});
    }
    return {{"suite", suite}, {"pass", all}, {"criteria", criteria}};
}

int emit_error(const std::string& kind, const std::string& detail, int code)
{
    std::cout << json{{"error", kind}, {"detail", detail}}.dump() << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symmetric edge polytope invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Print a key/value table instead of JSON");

    std::string graph_path;
    auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "Graph JSON or edge list ('-' for stdin)")->required(); };

    auto* facets = app.add_subcommand("facets", "Facet-defining labelings");
    add_graph(facets);
    bool count_only = false, with_fvector = false;
    facets->add_flag("--count-only", count_only, "Only the number of facets");
    facets->add_flag("--fvector", with_fvector, "Add the f-vector");

    auto* volume = app.add_subcommand("volume", "Normalized volume");
    add_graph(volume);
    std::string triangulation_path;
    volume->add_option("--triangulation", triangulation_path, "Write the unimodular triangulation here");

    auto* hstar = app.add_subcommand("hstar", "Ehrhart polynomial, h* and gamma vectors");
    add_graph(hstar);
    auto* dualpoints = app.add_subcommand("dualpoints", "Lattice points of the polar dual");
    add_graph(dualpoints);
    auto* dualmobius = app.add_subcommand("dualpoints-mobius", "Polar-dual points via contractions");
    add_graph(dualmobius);

    auto* flows = app.add_subcommand("flows", "Nowhere-zero k-flows of a multigraph");
    add_graph(flows);
    int k_flow = 2;
    flows->add_option("--k", k_flow, "Flow bound k (values 1..k-1 in absolute value)")->check(CLI::Range(2, 64));

    auto* gj = app.add_subcommand("gj", "Goulden-Jackson generating function");
    int alphabet = 0;
    std::string bad;
    bool cyclic = false;
    std::size_t orders = 10;
    gj->add_option("--alphabet", alphabet, "Alphabet size")->required();
    gj->add_option("--bad", bad, "Comma-separated bad words")->required();
    gj->add_flag("--cyclic", cyclic, "Count cyclic words");
    gj->add_option("--orders", orders, "Series coefficients up to this order");

    auto* family = app.add_subcommand("family", "Closed formulas for graph families");
    std::string family_name, family_a;
    long fk = -1, fn = -1, fi = -1, fj = -1, fs = -1, ft = -1;
    family->add_option("name", family_name, "cycle | tree | wheel | complete | join-odd | outerplanar")->required();
    family->add_option("--k", fk, "Half-length of the even cycle");
    family->add_option("--n", fn, "Vertex count or rim length");
    family->add_option("--i", fi, "First odd cycle has 2i+1 vertices");
    family->add_option("--j", fj, "Second odd cycle has 2j+1 vertices");
    family->add_option("--a", family_a, "Region half-lengths, comma-separated");
    family->add_option("--s", fs, "Edges shared by two regions");
    family->add_option("--t", ft, "Bridges");

    auto* kr = app.add_subcommand("kr", "Kantorovich-Rubinstein section");
    add_graph(kr);
    std::string subset;
    bool kr_verify = false;
    kr->add_option("--subset", subset, "Comma-separated marked vertices")->required();
    kr->add_flag("--verify", kr_verify, "Check the section equals the KR polytope");

    auto* verify = app.add_subcommand("verify", "Run a reproduction suite");
    std::string suite = "paper";
    verify->add_option("--suite", suite, "Suite name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("UsageError", e.what(), 2);
    }

    try {
        json out;
        int code = 0;
        if (*facets)
            out = cmd_facets(io::parse_graph(read_input(graph_path)), count_only, with_fvector);
        else if (*volume)
            out = cmd_volume(io::parse_graph(read_input(graph_path)), triangulation_path);
        else if (*hstar)
            out = cmd_hstar(io::parse_graph(read_input(graph_path)));
        else if (*dualpoints)
            out = {{"count", io::number(sympoly::polar_dual_points(io::parse_graph(read_input(graph_path))))}};
        else if (*dualmobius)
            out = {{"count", io::number(sympoly::dual_points_via_mobius(io::parse_graph(read_input(graph_path))))}};
        else if (*flows)
            out = {{"k", k_flow},
                   {"count", io::number(sympoly::nowhere_zero_flows(io::parse_multigraph(read_input(graph_path)), k_flow))}};
        else if (*gj)
            out = cmd_gj(alphabet, bad, cyclic, orders);
        else if (*family)
            out = cmd_family(family_name, fk, fn, fi, fj, family_a, fs, ft);
        else if (*kr)
            out = cmd_kr(io::parse_graph(read_input(graph_path)), subset, kr_verify);
        else if (*verify) {
            out = cmd_verify(suite);
            code = out["pass"].get<bool>() ? 0 : 1;
        }
        if (pretty)
            print_pretty(out);
        else
            std::cout << out.dump() << '\n';
        return code;
    } catch (const UsageError& e) {
        return emit_error("UsageError", e.what(), 2);
    } catch (const sympoly::Error& e) {
        return emit_error(std::string(sympoly::to_string(e.kind())), e.detail(), 1);
    }
}
