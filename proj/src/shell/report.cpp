#include "shell/report.hpp"

#include <sstream>

#include "json.hpp"

namespace dahazeta::shell {

ReportRow rh_report(const stabilize::Superpolynomial& H, double tol) {
    ReportRow row;
    row.name = H.source.name;
    row.adeg = static_cast<int>(H.adeg);
    auto coeffs = rhscan::rh_coefficients(H);
    bool knot = H.source.components() == 1;
    bool fail0 = false;
    double vmax = 0;
    for (const auto& c : coeffs) {
        int allowed = (c.i == 0 && !knot) ? static_cast<int>(H.source.components()) - 1 : 0;
        auto v = rhscan::varpi(c, allowed, tol);
        if (c.i == 0) {
            row.nz0 = rat_to_long(c.hatH.max_exp("t"), "deg");
            row.varpi0 = v.varpi;
            row.pairs_at_varpi = v.pairs_at_top;
            row.stable_pairs = v.stable_pairs;
        }
        if (!v.conclusive) {
            if (c.i == 0) fail0 = true;
            break;
        }
        row.holds_through = c.i;
        if (c.i > 0) vmax = std::max(vmax, v.varpi);
    }
    row.varpi_max_rest = vmax;
    if (fail0)
        row.status = "FAILS";
    else if (row.holds_through == static_cast<int>(H.adeg))
        row.status = "HOLDS";
    else
        row.status = "OK a=0";
    return row;
}

std::string row_text(const ReportRow& r) {
    std::ostringstream os;
    os << r.name << "  " << r.status << "  Nz0=" << r.nz0 << "  varpi0=" << r.varpi0
       << "  varpi_max=" << r.varpi_max_rest << "  pairs={" << r.pairs_at_varpi << "}-"
       << r.stable_pairs << "  dega=" << r.adeg;
    if (r.status == "OK a=0") os << "  holds<=a^" << r.holds_through;
    return os.str();
}

std::string row_json(const ReportRow& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["status"] = r.status;
    j["Nz0"] = r.nz0;
    j["varpi0"] = r.varpi0;
    j["varpi_max"] = r.varpi_max_rest;
    j["pairs_at_varpi"] = r.pairs_at_varpi;
    j["stable_pairs"] = r.stable_pairs;
    j["deg_a"] = r.adeg;
    j["holds_through"] = r.holds_through;
    return j.dump();
}

std::string roots_csv(const rhscan::RHCoefficient& c, const Rat& omega) {
    auto rep = rhscan::classify_zeros(c, omega);
    std::ostringstream os;
    os << "re,im,mult\n";
    for (const auto& r : rep.roots.roots)
        os << r.z.real() << "," << r.z.imag() << "," << r.multiplicity << "\n";
    return os.str();
}

}  // namespace dahazeta::shell
