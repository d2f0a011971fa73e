#pragma once

// Registry of regression fixtures: printed superpolynomials, zeta values,
// limit-invariant catalogs and reference numerics, loaded from data/fixtures
// and compared by exact polynomial identity.

#include <map>
#include <string>

#include "linkcalc/linkcalc.hpp"

namespace dahazeta::shell {

using exactalg::LaurentPoly;

std::string data_dir();

// parse a fixture file (plain polynomial expression) over the given variables
LaurentPoly load_poly(const std::string& name, const std::vector<std::string>& vars);
std::string load_text(const std::string& relpath);

struct Fixture {
    std::string name;
    linkcalc::LinkPair pair;
    std::string hfile;  // expected superpolynomial (empty if none printed)
};

// the registry of links wired to their printed expectations
const std::vector<Fixture>& fixture_registry();
linkcalc::LinkPair link_by_name(const std::string& name);

// common graph builders used by the registry and the CLI
linkcalc::LinkPair torus_knot(long r, long s, const rootdata::YoungDiagram& color = {1});
linkcalc::LinkPair torus_multi(long r, long s, const std::vector<rootdata::YoungDiagram>& colors);
linkcalc::LinkPair cable(long r1, long s1, long r2, long s2,
                         const rootdata::YoungDiagram& color = {1});
// pair {L, 'L} with 'L a pure arrow (meridian) of the given color
linkcalc::LinkPair with_meridian(const linkcalc::LinkPair& base,
                                 const rootdata::YoungDiagram& color = {1});
// pair of two single-path graphs
linkcalc::LinkPair two_graphs(const std::vector<std::pair<long, long>>& a,
                              const std::vector<std::pair<long, long>>& b);

}  // namespace dahazeta::shell
