#pragma once

// Labeled link graphs for iterated torus links, Newton <-> cable parameter
// conversion, the pre-polynomial recursion over the shared-prefix forest,
// and DAHA-Jones polynomials under the minimal (LCM) normalization.

#include <optional>
#include <string>

#include "macdonald/macdonald.hpp"

namespace dahazeta::linkcalc {

using rootdata::YoungDiagram;

struct LinkPath {
    std::vector<std::pair<long, long>> labels;  // [r_i, s_i] along the path
    YoungDiagram color;                         // arrowhead color; {1} if uncolored
};

struct LinkGraph {
    std::vector<LinkPath> paths;
    std::vector<std::vector<int>> incidence;  // shared-prefix lengths, diag = length

    void validate() const;
    bool positive() const;  // all labels strictly positive
};

struct LinkPair {
    std::string name;
    LinkGraph graph;
    std::optional<LinkGraph> prime;

    void validate() const;
    bool algebraic() const;  // positive pair condition
    size_t components() const;
    std::vector<YoungDiagram> all_colors() const;
    bool colors_transpose_closed() const;
    LinkPair transposed_colors() const;
};

// convenience constructors
LinkGraph single_knot(const std::vector<std::pair<long, long>>& labels,
                      const YoungDiagram& color = {1});
// kappa paths sharing every vertex, individually colored
LinkGraph cable_bundle(const std::vector<std::pair<long, long>>& labels,
                       const std::vector<YoungDiagram>& colors);

// JSON schema round trip
LinkPair pair_from_json(const std::string& text);
std::string pair_to_json(const LinkPair& p);

// cable parameters: a_1 = s_1, a_i = a_{i-1} r_{i-1} r_i + s_i
std::vector<long> newton_to_cable(const std::vector<long>& r, const std::vector<long>& s);

enum class Norm { Min, J0, None };

struct JonesResult {
    exactalg::LaurentPoly poly;    // hat-normalized, integer coefficients
    exactalg::LaurentPoly factor;  // monomial (and scale) removed
    int sign = 1;
    int rank = 0;
    Norm norm = Norm::Min;
};

// pre-polynomial of a single graph (the product over its subtree forest)
daharep::XPoly prepolynomial(const LinkGraph& g, macdonald::Engine& eng);

JonesResult daha_jones(const LinkPair& pair, int rank, Norm norm = Norm::Min, int j0_index = 0);

struct Q1Report {
    bool ok = false;
    exactalg::LaurentPoly lhs, rhs;  // both sides of the product identity at q=1
};

// specialization q=1: the LCM-corrected minimal polynomial against the
// product of per-component, per-fundamental-weight knot polynomials
Q1Report q1_specialization_check(const LinkPair& pair, int rank);

}  // namespace dahazeta::linkcalc
