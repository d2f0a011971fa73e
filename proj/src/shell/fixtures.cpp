#include "shell/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "exactalg/exprparse.hpp"

namespace dahazeta::shell {

std::string data_dir() {
    if (const char* env = std::getenv("DAHAZETA_DATA")) return env;
    return DAHAZETA_DATA_DIR;
}

std::string load_text(const std::string& relpath) {
    std::ifstream f(data_dir() + "/" + relpath);
    if (!f) throw std::runtime_error("fixture file not found: " + relpath);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

LaurentPoly load_poly(const std::string& name, const std::vector<std::string>& vars) {
    return exactalg::parse_poly(load_text("fixtures/" + name), vars);
}

linkcalc::LinkPair torus_knot(long r, long s, const rootdata::YoungDiagram& color) {
    linkcalc::LinkPair p;
    p.name = "T(" + std::to_string(r) + "," + std::to_string(s) + ")";
    p.graph = linkcalc::single_knot({{r, s}}, color);
    return p;
}

linkcalc::LinkPair torus_multi(long r, long s, const std::vector<rootdata::YoungDiagram>& colors) {
    linkcalc::LinkPair p;
    p.name = std::to_string(colors.size()) + "T(" + std::to_string(r) + "," + std::to_string(s) + ")";
    p.graph = linkcalc::cable_bundle({{r, s}}, colors);
    return p;
}

linkcalc::LinkPair cable(long r1, long s1, long r2, long s2, const rootdata::YoungDiagram& color) {
    linkcalc::LinkPair p;
    p.name = "Cab[" + std::to_string(r1) + "," + std::to_string(s1) + ";" + std::to_string(r2) +
             "," + std::to_string(s2) + "]";
    p.graph = linkcalc::single_knot({{r1, s1}, {r2, s2}}, color);
    return p;
}

linkcalc::LinkPair with_meridian(const linkcalc::LinkPair& base,
                                 const rootdata::YoungDiagram& color) {
    linkcalc::LinkPair p = base;
    p.name = base.name + "+meridian";
    linkcalc::LinkGraph arrow;
    arrow.paths.push_back({{}, color});
    arrow.incidence = {{0}};
    p.prime = arrow;
    return p;
}

linkcalc::LinkPair two_graphs(const std::vector<std::pair<long, long>>& a,
                              const std::vector<std::pair<long, long>>& b) {
    linkcalc::LinkPair p;
    p.name = "pair";
    p.graph = linkcalc::single_knot(a);
    p.prime = linkcalc::single_knot(b);
    return p;
}

const std::vector<Fixture>& fixture_registry() {
    static const std::vector<Fixture> reg = [] {
        std::vector<Fixture> v;
        auto arrow_pair = [] {  // Hopf 2-link: two meridian arrows
            linkcalc::LinkPair p;
            p.name = "hopf";
            linkcalc::LinkGraph arrow;
            arrow.paths.push_back({{}, {1}});
            arrow.incidence = {{0}};
            p.graph = arrow;
            p.prime = arrow;
            return p;
        }();
        v.push_back({"trefoil", torus_knot(3, 2), "trefoil.H"});
        v.push_back({"t52", torus_knot(5, 2), "t52.H"});
        v.push_back({"hopf", arrow_pair, "hopf.H"});
        v.push_back({"t42", torus_multi(2, 1, {{1}, {1}}), "t42.H"});
        v.push_back({"h1_23", with_meridian(torus_knot(2, 3)), "h1_23.H"});
        v.push_back({"h1_32", with_meridian(torus_knot(3, 2)), "h1_32.H"});
        v.push_back({"h32_23", two_graphs({{2, 3}}, {{2, 3}}), "h32_23.H"});
        v.push_back({"cab32c", cable(3, 2, 2, -9), "cab32_c.H"});
        v.push_back({"cab92", cable(3, 2, 2, -3), "cab92.H"});
        v.push_back({"cab13", cable(3, 2, 2, 1), ""});
        v.push_back({"trefoil_col11", torus_knot(3, 2, {1, 1}), "trefoil_col11.H"});
        {
            linkcalc::LinkPair p;
            p.name = "x5y3x3y5";
            p.graph.paths.push_back({{{1, 1}, {3, 2}}, {1}});
            p.graph.paths.push_back({{{1, 1}, {3, 2}}, {1}});
            p.graph.incidence = {{2, 1}, {1, 2}};
            v.push_back({"x5y3x3y5", p, "x5y3x3y5.H"});
        }
        v.push_back({"threeT43", torus_multi(4, 3, {{1}, {1}, {1}}), ""});
        v.push_back({"twoT53", torus_multi(5, 3, {{1}, {1}}), ""});
        v.push_back({"g21_11_2", torus_multi(2, 1, {{1, 1}, {2}}), ""});
        v.push_back({"g32_2_11", torus_multi(3, 2, {{2}, {1, 1}}), ""});
        v.push_back({"tref_col222", torus_knot(3, 2, {2, 2, 2}), ""});
        {
            linkcalc::LinkPair p;
            p.name = "g11_g21_g32";
            p.graph.paths.push_back({{{1, 1}, {2, 1}}, {1}});
            p.graph.paths.push_back({{{1, 1}, {3, 2}}, {1}});
            p.graph.incidence = {{2, 1}, {1, 2}};
            v.push_back({"g11_g21_g32", p, ""});
        }
        v.push_back({"h34_23", two_graphs({{2, 3}}, {{3, 4}}), ""});
        return v;
    }();
    return reg;
}

linkcalc::LinkPair link_by_name(const std::string& name) {
    for (const auto& f : fixture_registry())
        if (f.name == name) return f.pair;
    throw std::invalid_argument("unknown link name: " + name);
}

}  // namespace dahazeta::shell
