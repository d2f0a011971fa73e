#pragma once

// Table-style reporting: per-link Weak-RH status rows in the three-way
// HOLDS / FAILS / OK a=0 convention, plus JSON output and root dumps.

#include "rhscan/rhscan.hpp"

namespace dahazeta::shell {

struct ReportRow {
    std::string name;
    std::string status;           // HOLDS | FAILS | OK a=0
    long nz0 = 0;                 // t-degree of hatH^0
    double varpi0 = 0;
    double varpi_max_rest = 0;    // max of varpi_1.. until the first failure
    int pairs_at_varpi = 0;
    int stable_pairs = 0;
    int adeg = 0;
    int holds_through = -1;       // last i with Weak RH holding
};

ReportRow rh_report(const stabilize::Superpolynomial& H, double tol = 1e-9);
std::string row_text(const ReportRow& r);
std::string row_json(const ReportRow& r);
// CSV dump of the zeros of hatH^i at a given omega
std::string roots_csv(const rhscan::RHCoefficient& c, const Rat& omega);

}  // namespace dahazeta::shell
