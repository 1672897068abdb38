#pragma once

#include <optional>
#include <string>

#include "grconv/laurent.hpp"
#include "grconv/polymatrix.hpp"

namespace grconv {

/// Convolutional code built from a unit pair f(z) g(z) = z^t over a group
/// ring embedded into |G| x |G| matrices. G is the selected rows of the
/// embedded f; H is the complementary columns of g / z^t and may contain
/// negative exponents, in which case H_poly = H z^(h_shift) is the
/// equivalent polynomial control matrix.
struct ConvCode {
    int n = 0;
    int k = 0;
    FieldPtr field;
    PolyMatrix G;       // k x n
    PolyMatrix H;       // n x (n-k), exponents possibly negative
    PolyMatrix H_poly;  // z-cleared H
    int h_shift = 0;

    // full n x n embedded matrices of the unit pair, when built from one
    std::optional<PolyMatrix> full_f;
    std::optional<PolyMatrix> full_g;

    std::vector<int> rows;  // row selection into full_f
    int t = 0;              // unit position: f*g = z^t
    std::string provenance;
    std::optional<long long> specialization_prime;  // for characteristic-0 codes
};

/// Builds the code from a verified unit pair. Throws if f*g is not a
/// monomial unit or the row set is out of range.
ConvCode from_unit_pair(const LaurentPoly& f, const LaurentPoly& g, std::vector<int> rows,
                        std::string provenance = "");

/// Direct construction from a generator matrix (tests, toy codes). No
/// control matrix is attached unless given.
ConvCode from_generator(PolyMatrix G, std::optional<PolyMatrix> H = std::nullopt,
                        std::string provenance = "");

struct DualityReport {
    bool f1g1_is_identity = false;
    bool f1g2_is_zero = false;
    bool f2g1_is_zero = false;
    bool f2g2_is_identity = false;
    bool checked = false;  // false when the code has no stored unit pair
    bool all() const { return f1g1_is_identity && f1g2_is_zero && f2g1_is_zero && f2g2_is_identity; }
};

/// Checks the four block identities of the unit pair split along the
/// selected rows.
DualityReport verify_duality(const ConvCode& code);

/// Max degree over the k x k minors of G (z-cleared first if needed).
int code_degree(const ConvCode& code);

struct NoncatResult {
    bool yes = false;
    ScalarPoly gcd;           // gcd of the full-size minors
    bool right_inverse = false;  // finite-support right inverse verified
    std::string detail;
};

/// Two routes: a finite-support right inverse from the unit pair (when
/// stored), and the structural test that the gcd of the k x k minors is a
/// monomial. When both are computable they must agree.
NoncatResult is_noncatastrophic(const ConvCode& code);

/// u * G for a length-k vector of polynomials.
std::vector<ScalarPoly> encode(const ConvCode& code, const std::vector<ScalarPoly>& u);

struct SystematicForm {
    PolyMatrix generator;              // (I_k | *) after the column permutation
    std::vector<int> column_order;     // new position -> original column
};

/// Optional post-processing: permute columns and row-reduce with
/// polynomial-unimodular operations so the generator starts with I_k.
/// Possible exactly when some k x k minor of G is a nonzero constant;
/// returns nullopt otherwise. Not applied by default anywhere.
std::optional<SystematicForm> systematic_form(const ConvCode& code);

/// Total Hamming weight of a codeword (all coordinates, all exponents).
int codeword_weight(const std::vector<ScalarPoly>& w);

}  // namespace grconv
