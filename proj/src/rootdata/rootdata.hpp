#pragma once

// Type-A root-system combinatorics: weights in the fundamental-weight basis,
// Young diagrams, the symmetric-group action, exact pairings, dominance
// order, and diagram operations.

#include <vector>

#include "base/numbers.hpp"

namespace dahazeta::rootdata {

// Weight of A_n in fundamental-weight coordinates (b_1..b_n).
using Weight = std::vector<int>;
// Partition: weakly decreasing positive rows.
using YoungDiagram = std::vector<int>;
// Permutation of {0..n} in one-line notation: p[i] = image of i.
using Perm = std::vector<int>;

struct RankContext {
    int n;  // A_n, Weyl group S_{n+1}
    explicit RankContext(int rank);
};

// epsilon-coordinates: v_i = b_i + ... + b_n for i <= n, v_{n+1} = 0.
// Any representative modulo the diagonal works for the projected pairings.
std::vector<int> eps_vector(const Weight& b);
Weight weight_from_eps(const std::vector<int>& v);

bool is_dominant(const Weight& b);
Weight dominant_rep(const Weight& b);

YoungDiagram weight_diagram(const Weight& b);              // requires dominant
Weight diagram_weight(const YoungDiagram& l, int n);       // rows <= n

// exact inner products, normalized so roots have squared length 2
Rat pairing(const Weight& b, const Weight& c);
Rat pairing_root(const Weight& b, int i, int j);           // (b, eps_i - eps_j), 1-based
Rat rho_pairing(const Weight& b);                          // (b, rho)
Rat norm2(const Weight& b);
Rat omega_pairing(int r, const Weight& b, int n);          // (omega_r, b)
Rat omega_norm2(int r, int n);                             // (omega_r, omega_r)
Rat rho_pairing_two_ways(const Weight& b);                 // sum over positive roots

// dominance: returns true iff c - b is a nonnegative sum of simple roots
bool dominance_leq(const Weight& b, const Weight& c);

// all dominant weights c <= b (including b) in dominance order
std::vector<Weight> dominance_cone(const Weight& b);

// full Weyl orbit of a dominant weight
std::vector<Weight> weyl_orbit(const Weight& b);

Weight apply_perm(const Perm& w, const Weight& b);
Weight simple_reflect(int i, const Weight& b);             // s_i, 1-based
Weight iota(const Weight& b);                              // -w0(b): coordinate reversal

Perm longest_element(int n);                               // w0 in S_{n+1}
Perm u_r_perm(int r, int n);                               // w0 * w0^{(r)}
std::vector<int> reduced_word(const Perm& w);              // s_{i1}...s_{ik}, 1-based letters
Perm perm_inverse(const Perm& w);
int perm_length(const Perm& w);                            // inversion count

// diagram operations
YoungDiagram diagram_union(const YoungDiagram& a, const YoungDiagram& b);
YoungDiagram diagram_transpose(const YoungDiagram& a);
long diagram_size(const YoungDiagram& a);
int arm(const YoungDiagram& l, int row, int col);          // 0-based box
int leg(const YoungDiagram& l, int row, int col);

}  // namespace dahazeta::rootdata
