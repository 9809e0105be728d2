#pragma once

// Exact root-system data for the simple Dynkin types, in fixed rational
// coordinate realizations:
//
//   A_n  ambient R^{n+1},  alpha_i = e_i - e_{i+1}
//   B_n  ambient R^n,      alpha_i = e_i - e_{i+1}, alpha_n = e_n
//   C_n  ambient R^n,      alpha_i = e_i - e_{i+1}, alpha_n = 2 e_n
//   D_n  ambient R^n,      alpha_i = e_i - e_{i+1}, alpha_n = e_{n-1} + e_n
//   E6/E7/E8 ambient R^8   (E6, E7 sit inside the E8 lattice)
//   F4   ambient R^4
//   G2   ambient R^3       (sum of coordinates zero)
//
// Node numbering for E/F/G follows the conventions in docs/conventions.md;
// for E-series, node 1 is the half-integer simple root, node 2 is e_1 + e_2,
// and node i >= 3 is e_{i-1} - e_{i-2}.  All arithmetic is exact rational.

#include <string>
#include <string_view>
#include <vector>

#include "acm/rational.hpp"

namespace acm {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
    Series series = Series::A;
    int rank = 1;

    // Throws std::invalid_argument naming the violated rank constraint.
    void validate() const;
    std::string str() const;
    static DynkinType parse(std::string_view token);

    bool operator==(const DynkinType&) const = default;
};

using AmbientVector = std::vector<Rational>;

Rational pairing(const AmbientVector& u, const AmbientVector& v);
AmbientVector operator+(const AmbientVector& u, const AmbientVector& v);
AmbientVector operator-(const AmbientVector& u, const AmbientVector& v);
AmbientVector operator*(const Rational& c, const AmbientVector& v);

// A weight written in the fundamental-weight basis.
struct WeightCoeffs {
    DynkinType dynkin;
    std::vector<long long> a;  // length == rank

    bool operator==(const WeightCoeffs&) const = default;
};

struct RootSystem {
    DynkinType dynkin;
    int ambient_dim = 0;
    std::vector<AmbientVector> simple_roots;        // alpha_1 .. alpha_n
    std::vector<AmbientVector> positive_roots;      // sorted lexicographically
    std::vector<std::vector<long long>> positive_root_coords;  // in simple-root basis
    std::vector<AmbientVector> fundamental_weights;  // w_1 .. w_n
    AmbientVector rho;                               // sum of fundamental weights

    int rank() const { return dynkin.rank; }
};

// Builds the full datum and checks the defining invariants
// (2(w_i,a_j)/(a_j,a_j) = delta_ij, positive-root count, rho pairings).
RootSystem build_root_system(DynkinType type);

// Expected |Phi^+| for each series (closed forms; E/F/G fixed values).
long long positive_root_count(DynkinType type);

AmbientVector to_ambient(const RootSystem& rs, const WeightCoeffs& w);

// Inverse of to_ambient on the span of the simple roots: coefficients are the
// coroot pairings 2(v,a_i)/(a_i,a_i).  Throws if any of them is non-integral.
WeightCoeffs to_weight_coeffs(const RootSystem& rs, const AmbientVector& v);

AmbientVector reflect_simple(const RootSystem& rs, int i, const AmbientVector& v);

// Singular / regular-of-index-p classification against Phi^+.
struct ChamberIndex {
    bool singular = false;
    int index = 0;  // #{a in Phi^+ : (v,a) < 0}; meaningful when regular
};

ChamberIndex chamber_index(const RootSystem& rs, const AmbientVector& v);

struct ChamberClass {
    bool singular = false;
    int index = 0;
    AmbientVector dominant_rep;  // strongly dominant representative, when regular
    int reflection_count = 0;    // always equals index
};

// Full classification.  The dominant representative is found by repeatedly
// reflecting in the lowest-index simple root with negative pairing; the
// number of steps is checked against the negative-pairing count.
ChamberClass classify_chamber(const RootSystem& rs, const AmbientVector& v);

// Raised on violated internal invariants (never on value-level outcomes).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace acm
