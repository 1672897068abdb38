#pragma once

#include <functional>

#include "grconv/code.hpp"
#include "grconv/distance.hpp"

namespace grconv {

struct invalid_ingredients_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The (4,2) code over GF(2)C4 from w = a0 + a1 z + a2 z^2 with
/// a0 = a+a^2+a^3, a1 = 1+a^2, a2 = a+a^3, rows {0,1}.
ConvCode prototype_4_2();

/// Characteristic-2 word w = sum_i c_i z^i with c_t = square_one (an
/// element squaring to 1), c_i = delta[i] * square_zero otherwise, so that
/// w^2 = z^(2t). Code from (w, w / z^(2t)) on the given rows.
ConvCode nilpotent_char2_word(const FieldPtr& field, const GroupPtr& group,
                              const std::vector<int>& delta, const GroupRingElem& square_one,
                              const GroupRingElem& square_zero, int t, std::vector<int> rows);

struct CyclicSeedInfo {
    int n = 0, k = 0;
    int d1 = 0, d2 = 0;
    int d = 0;  // min(d1, d2)
};

/// Generator matrix of the cyclic code <gen mod x^n - 1>: k = n - deg gcd
/// rows of cyclic shifts of the gcd.
Mat cyclic_generator_matrix(const std::vector<int>& gen, int n);
CyclicSeedInfo cyclic_seed_info(const std::vector<int>& gen, int n);

/// (2,1) code over GF(2)C2 mimicking a binary cyclic generator polynomial:
/// coefficient i becomes gen[i] * (1+a), except position t which becomes 1.
/// boundary_warning (if given) is set when t sits at an end position.
ConvCode two_one_from_cyclic(const std::vector<int>& gen, int t, bool* boundary_warning = nullptr);

/// (2m,1) code over GF(2)C_{2m}, m odd: the all-ones element at delta
/// positions and the even-power sum at position t, first row.
ConvCode rate_2m_1(int m, const std::vector<int>& delta, int t);

/// (4,3) code over GF(2)C4 from alpha = 1+a (alpha^4 = 0): word with 1 at
/// position t, alpha at delta positions; pair (w, w^3 / z^(4t)), rows {0,1,2}.
ConvCode rate_three_quarters(const std::vector<int>& delta, int t, bool* low_t_warning = nullptr);

/// (8,4) code over GF(2)(C4xC2) with a0 = 1+h(1+a^2) at position t and
/// a = 1+h(a+a^2+a^3) at delta positions, rows {0..3}.
ConvCode hamming_type(const std::vector<int>& delta, int t);

/// Characteristic-p word: alpha^p = 0 at delta positions, alpha0^p = 1 at
/// position t; code from (w, w^(p-1) / z^(pt)). Empty rows defaults to the
/// first rank(alpha) rows.
ConvCode char_p_word(long long p, const GroupPtr& group, const GroupRingElem& alpha,
                     const GroupRingElem& alpha0, const std::vector<int>& delta, int t,
                     std::vector<int> rows = {});

/// f(z) = sum signs[i] * es[i] * z^(exps[i]) for a complete orthogonal
/// family; control side from f(z^-1).
ConvCode idempotent_code(const std::vector<GroupRingElem>& es, const std::vector<int>& signs,
                         const std::vector<int>& exps, std::vector<int> rows);

/// The n square-zero generators w_i = g^i + g^(n+i) of GF(2)C_{2n}.
std::vector<GroupRingElem> nilpotent_generators_c2n(int n);

/// beta * (1 + s) in F(C2 x G) where s generates the new outer C2 factor;
/// square-zero by construction (verified).
GroupRingElem direct_product_nilpotent(const GroupRingElem& beta,
                                       const std::string& outer_gen = "s");

/// (8,4) code from u = a0 + (1+g^4)z + (1+g^2)z^2 + (1+g)z^3 over GF(2)C8
/// with a0^8 = 1 (default a0 = 1+g+g^3); pair (u, u^7), rows {0..3}.
ConvCode z2c8_chain(std::optional<GroupRingElem> alpha0 = std::nullopt);

/// Rate-1/2 code over GF(2)C14 from p = w0 + w1 z + w2 z^2 with p^2 = 1.
ConvCode fc14_rate_half();

/// Word over GF(2^n)C2 with w0 = omega + omega^n a at position t and
/// w_i = omega^i (1+a) elsewhere; pattern[j] gives the omega exponent at
/// position j (0 for no term). Requires x^n + x + 1 irreducible.
LaurentPoly gf2n_c2_word(int n, const std::vector<int>& pattern, int t);

/// The (2,1) code over GF(4)C2 with G = (w,w^2) + (w,w)z + (w^2,w^2)z^2.
ConvCode gf4_mds_code();

/// (8,6) codes over GF(2)C8 from alpha = a+a^7 (alpha^4 = 0) and a chosen
/// alpha0 with alpha0^4 = 1; pair (w, w^3 / z^(4t)), rows {0..5}.
enum class EightSixUnit { one, one_a_a3, one_a_a7 };
ConvCode higher_nilpotent_86(const std::vector<int>& delta, int t,
                             EightSixUnit alpha0_choice = EightSixUnit::one_a_a3);

/// A named, rebuildable construction plus the distance the construction
/// is expected to achieve. Hedged claims are measured and recorded, never
/// asserted.
struct Recipe {
    std::string name;
    std::string summary;
    std::function<ConvCode()> build;
    std::optional<int> claimed_distance;
    bool hedged = false;
    std::optional<int> claimed_degree;
    std::optional<long long> specialize_prime;  // distance measured after specialization
};

const std::vector<Recipe>& catalog();
const Recipe* find_recipe(const std::string& name);

}  // namespace grconv
