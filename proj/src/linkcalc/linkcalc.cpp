#include "linkcalc/linkcalc.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace dahazeta::linkcalc {

using daharep::XPoly;
using exactalg::LaurentPoly;

void LinkGraph::validate() const {
    const size_t k = paths.size();
    if (k == 0) throw std::invalid_argument("LinkGraph: no paths");
    if (incidence.size() != k) throw std::invalid_argument("LinkGraph: incidence size");
    for (size_t j = 0; j < k; ++j) {
        if (incidence[j].size() != k) throw std::invalid_argument("LinkGraph: incidence row size");
        if (incidence[j][j] != static_cast<int>(paths[j].labels.size()))
            throw std::invalid_argument("LinkGraph: diagonal must equal path length");
        for (const auto& [r, s] : paths[j].labels) {
            if (r == 0 && s == 0) throw std::invalid_argument("LinkGraph: zero label");
            if (std::gcd(std::abs(r), std::abs(s)) > 1)
                throw std::invalid_argument("LinkGraph: non-coprime label");
        }
        if (paths[j].color.empty()) throw std::invalid_argument("LinkGraph: empty color");
    }
    for (size_t j = 0; j < k; ++j)
        for (size_t l = 0; l < k; ++l) {
            int u = incidence[j][l];
            if (u != incidence[l][j]) throw std::invalid_argument("LinkGraph: incidence not symmetric");
            if (j == l) continue;
            if (u < 0 || u > std::min(incidence[j][j], incidence[l][l]))
                throw std::invalid_argument("LinkGraph: incidence out of range");
            for (int i = 0; i < u; ++i)
                if (paths[j].labels[i] != paths[l].labels[i])
                    throw std::invalid_argument("LinkGraph: shared prefix labels disagree");
        }
}

bool LinkGraph::positive() const {
    for (const auto& p : paths)
        for (const auto& [r, s] : p.labels)
            if (r <= 0 || s <= 0) return false;
    return true;
}

void LinkPair::validate() const {
    graph.validate();
    if (prime) prime->validate();
}

bool LinkPair::algebraic() const {
    if (!graph.positive()) return false;
    if (!prime) return true;
    if (!prime->positive()) return false;
    // first-vertex condition 's1 s1 > 'r1 r1 with the (0,1) convention
    auto first = [](const LinkGraph& g, size_t j) -> std::pair<long, long> {
        if (g.paths[j].labels.empty()) return {0, 1};
        auto [r, s] = g.paths[j].labels[0];
        if (r == 1) return {0, 1};
        return {r, s};
    };
    for (size_t j = 0; j < graph.paths.size(); ++j)
        for (size_t l = 0; l < prime->paths.size(); ++l) {
            auto [r, s] = first(graph, j);
            auto [rp, sp] = first(*prime, l);
            if (!(sp * s > rp * r)) return false;
        }
    return true;
}

size_t LinkPair::components() const {
    return graph.paths.size() + (prime ? prime->paths.size() : 0);
}

std::vector<YoungDiagram> LinkPair::all_colors() const {
    std::vector<YoungDiagram> out;
    for (const auto& p : graph.paths) out.push_back(p.color);
    if (prime)
        for (const auto& p : prime->paths) out.push_back(p.color);
    return out;
}

bool LinkPair::colors_transpose_closed() const {
    auto cs = all_colors();
    auto sorted = cs;
    std::sort(sorted.begin(), sorted.end());
    auto tr = cs;
    for (auto& l : tr) l = rootdata::diagram_transpose(l);
    std::sort(tr.begin(), tr.end());
    return sorted == tr;
}

LinkPair LinkPair::transposed_colors() const {
    LinkPair p = *this;
    for (auto& path : p.graph.paths) path.color = rootdata::diagram_transpose(path.color);
    if (p.prime)
        for (auto& path : p.prime->paths) path.color = rootdata::diagram_transpose(path.color);
    p.name += "-tr";
    return p;
}

LinkGraph single_knot(const std::vector<std::pair<long, long>>& labels, const YoungDiagram& color) {
    LinkGraph g;
    g.paths.push_back({labels, color});
    g.incidence = {{static_cast<int>(labels.size())}};
    return g;
}

LinkGraph cable_bundle(const std::vector<std::pair<long, long>>& labels,
                       const std::vector<YoungDiagram>& colors) {
    LinkGraph g;
    for (const auto& c : colors) g.paths.push_back({labels, c});
    const int len = static_cast<int>(labels.size());
    g.incidence.assign(colors.size(), std::vector<int>(colors.size(), len));
    return g;
}

std::vector<long> newton_to_cable(const std::vector<long>& r, const std::vector<long>& s) {
    if (r.size() != s.size() || r.empty()) throw std::invalid_argument("newton_to_cable: arity");
    for (size_t i = 0; i < r.size(); ++i)
        if (std::gcd(std::abs(r[i]), std::abs(s[i])) != 1)
            throw std::invalid_argument("newton_to_cable: non-coprime pair");
    std::vector<long> a(r.size());
    a[0] = s[0];
    for (size_t i = 1; i < r.size(); ++i) a[i] = a[i - 1] * r[i - 1] * r[i] + s[i];
    return a;
}

namespace {

LinkGraph graph_from_json(const nlohmann::json& j) {
    LinkGraph g;
    for (const auto& pj : j.at("paths")) {
        LinkPath p;
        for (const auto& lab : pj.at("labels"))
            p.labels.emplace_back(lab.at(0).get<long>(), lab.at(1).get<long>());
        p.color = pj.value("color", std::vector<int>{1});
        g.paths.push_back(std::move(p));
    }
    if (j.contains("incidence")) {
        g.incidence = j.at("incidence").get<std::vector<std::vector<int>>>();
    } else if (g.paths.size() == 1) {
        g.incidence = {{static_cast<int>(g.paths[0].labels.size())}};
    } else {
        throw std::invalid_argument("link JSON: incidence required for multi-path graphs");
    }
    return g;
}

nlohmann::json graph_to_json(const LinkGraph& g) {
    nlohmann::json j;
    j["paths"] = nlohmann::json::array();
    for (const auto& p : g.paths) {
        nlohmann::json pj;
        pj["labels"] = nlohmann::json::array();
        for (const auto& [r, s] : p.labels) pj["labels"].push_back({r, s});
        pj["color"] = p.color;
        j["paths"].push_back(pj);
    }
    j["incidence"] = g.incidence;
    return j;
}

}  // namespace

LinkPair pair_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LinkPair p;
    p.name = j.value("name", "");
    p.graph = graph_from_json(j);
    if (j.contains("prime")) p.prime = graph_from_json(j.at("prime"));
    p.validate();
    return p;
}

std::string pair_to_json(const LinkPair& p) {
    nlohmann::json j = graph_to_json(p.graph);
    j["name"] = p.name;
    if (p.prime) j["prime"] = graph_to_json(*p.prime);
    return j.dump(2);
}

namespace {

XPoly eval_class(const LinkGraph& g, macdonald::Engine& eng, const std::vector<int>& subset,
                 int depth) {
    XPoly val = XPoly::one();
    std::vector<int> deeper;
    for (int j : subset) {
        if (static_cast<int>(g.paths[j].labels.size()) == depth)
            val = val * eng.J(g.paths[j].color);
        else
            deeper.push_back(j);
    }
    // group the continuing paths by shared prefix of length depth+1
    std::vector<bool> used(deeper.size(), false);
    for (size_t a = 0; a < deeper.size(); ++a) {
        if (used[a]) continue;
        std::vector<int> cls{deeper[a]};
        used[a] = true;
        for (size_t b2 = a + 1; b2 < deeper.size(); ++b2) {
            if (used[b2]) continue;
            if (g.incidence[deeper[a]][deeper[b2]] >= depth + 1) {
                cls.push_back(deeper[b2]);
                used[b2] = true;
            }
        }
        XPoly sub = eval_class(g, eng, cls, depth + 1);
        auto [r, s] = g.paths[cls[0]].labels[depth];
        if (r == 0 && s == 1) {  // trivial cable: identity vertex
            val = val * sub;
            continue;
        }
        daharep::TauWord w = daharep::gamma_lift(r, s);
        XPoly img = daharep::gamma_apply(eng.ctx(), w, sub, &eng.ebasis());
        val = val * img;
    }
    return val;
}

}  // namespace

XPoly prepolynomial(const LinkGraph& g, macdonald::Engine& eng) {
    g.validate();
    std::vector<int> all(g.paths.size());
    std::iota(all.begin(), all.end(), 0);
    return eval_class(g, eng, all, 0);
}

namespace {

// shift so that every variable has minimal exponent 0
LaurentPoly shift_nonneg(const LaurentPoly& p) {
    exactalg::ExpVec mins;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) { mins = e; first = false; continue; }
        for (size_t i = 0; i < e.size(); ++i) mins[i] = std::min(mins[i], e[i]);
    }
    LaurentPoly r(p.vars());
    exactalg::ExpVec e2;
    for (const auto& [e, c] : p.terms()) {
        e2 = e;
        for (size_t i = 0; i < e.size(); ++i) e2[i] -= mins[i];
        r.add_term(e2, c);
    }
    return r;
}

}  // namespace

JonesResult daha_jones(const LinkPair& pair, int rank, Norm norm, int j0_index) {
    pair.validate();
    auto& eng = macdonald::engine(rank);
    XPoly p = prepolynomial(pair.graph, eng);
    XPoly m = p;
    if (pair.prime) {
        XPoly pp = prepolynomial(*pair.prime, eng);
        m = daharep::phi_iota_Y(eng.ctx(), pp, p);
    }
    LaurentPoly ev = coinvariant(eng.ctx(), m);

    LaurentPoly divisor({"q", "t"}, 1);
    if (norm == Norm::Min) {
        divisor = eng.lcm_evaluations(pair.all_colors()).expand();
    } else if (norm == Norm::J0) {
        auto colors = pair.all_colors();
        macdonald::Factored f = eng.j_eval(colors.at(j0_index));
        f.mono = LaurentPoly({"q", "t"}, 1);  // monomials are irrelevant after the hat
        divisor = f.expand();
    }
    LaurentPoly num = shift_nonneg(ev);
    auto quot = num.divide_exact(divisor);
    if (!quot)
        throw std::logic_error("daha_jones: evaluation not divisible by the normalization");
    auto hn = exactalg::hat_normalize(*quot);
    JonesResult out;
    out.poly = std::move(hn.poly);
    out.factor = std::move(hn.factor);
    out.sign = hn.sign;
    out.rank = rank;
    out.norm = norm;
    return out;
}

Q1Report q1_specialization_check(const LinkPair& pair, int rank) {
    auto& eng = macdonald::engine(rank);
    JonesResult jd = daha_jones(pair, rank, Norm::Min);

    // correction factor LCM(all)/prod(per-color LCMs), as factored data
    auto colors = pair.all_colors();
    macdonald::Factored numf = eng.lcm_evaluations(colors);
    macdonald::Factored denf = macdonald::Factored::one();
    for (const auto& c : colors) denf = denf * eng.lcm_evaluations({c});

    auto at_q1 = [&](const macdonald::Factored& f) {
        LaurentPoly r({"t"}, 1);
        for (const auto& [k, mult] : f.factors) {
            LaurentPoly fac({"t"}, 1);
            fac.add_term({Rat(k.second)}, -1);  // 1 - t^b at q = 1
            for (long i = 0; i < mult; ++i) r = r * fac;
        }
        return r;
    };

    LaurentPoly jd1 = substitute(jd.poly, "q", Rat(1)).with_vars({"t"});

    // right-hand side: per-path knot polynomials at q=1, as exact ratios
    LaurentPoly rhs_num({"t"}, 1), rhs_den({"t"}, 1);
    auto add_paths = [&](const LinkGraph& g) {
        for (const auto& path : g.paths) {
            rootdata::Weight b = rootdata::diagram_weight(path.color, rank);
            for (int pfund = 1; pfund <= rank; ++pfund) {
                if (b[pfund - 1] == 0) continue;
                rootdata::Weight w(rank, 0);
                w[pfund - 1] = 1;
                const auto& mp = eng.P(w);
                XPoly chain = mp.value.num;
                for (auto it = path.labels.rbegin(); it != path.labels.rend(); ++it) {
                    if (it->first == 0 && it->second == 1) continue;
                    chain = daharep::gamma_apply(eng.ctx(), daharep::gamma_lift(it->first, it->second),
                                                 chain, &eng.ebasis());
                }
                LaurentPoly A = coinvariant(eng.ctx(), chain);
                LaurentPoly B = coinvariant(eng.ctx(), mp.value.num);
                LaurentPoly A1 = substitute(shift_nonneg(A), "q", Rat(1)).with_vars({"t"});
                LaurentPoly B1 = substitute(shift_nonneg(B), "q", Rat(1)).with_vars({"t"});
                for (int e = 0; e < b[pfund - 1]; ++e) {
                    rhs_num = rhs_num * A1;
                    rhs_den = rhs_den * B1;
                }
            }
        }
    };
    add_paths(pair.graph);
    if (pair.prime) add_paths(*pair.prime);

    // cross-multiplied identity: corr * jd1 * rhs_den == rhs_num
    Q1Report rep;
    rep.lhs = at_q1(numf) * jd1 * rhs_den;
    rep.rhs = at_q1(denf) * rhs_num;
    auto l = exactalg::hat_normalize(rep.lhs, "t");
    auto r = exactalg::hat_normalize(rep.rhs, "t");
    rep.ok = l.poly == r.poly;
    rep.lhs = l.poly;
    rep.rhs = r.poly;
    return rep;
}

}  // namespace dahazeta::linkcalc
