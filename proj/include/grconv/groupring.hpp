#pragma once

#include <optional>
#include <vector>

#include "grconv/field.hpp"
#include "grconv/group.hpp"
#include "grconv/matrix.hpp"

namespace grconv {

/// Element of the group ring FG: a coefficient for every listing index.
/// Stored dense (|G| <= 64 throughout); zero coefficients simply compare
/// as zero, so the representation is canonical.
class GroupRingElem {
public:
    GroupRingElem() = default;
    GroupRingElem(GroupPtr group, FieldPtr field);

    static GroupRingElem zero(const GroupPtr& g, const FieldPtr& f) { return {g, f}; }
    static GroupRingElem one(const GroupPtr& g, const FieldPtr& f);
    /// coeff * listing[index]
    static GroupRingElem monomial(const GroupPtr& g, const FieldPtr& f, int index,
                                  const FieldElement& coeff);
    static GroupRingElem from_coeffs(const GroupPtr& g, const FieldPtr& f,
                                     std::vector<FieldElement> coeffs);

    const GroupPtr& group() const { return g_; }
    const FieldPtr& field() const { return f_; }
    const FieldElement& coeff(int i) const { return c_[i]; }
    void set_coeff(int i, const FieldElement& v) { c_[i] = v; }

    bool is_zero() const;
    bool is_one() const;
    std::vector<int> support() const;

    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator*(const FieldElement& c, const GroupRingElem& a);
    GroupRingElem operator-() const;
    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b);
    friend bool operator!=(const GroupRingElem& a, const GroupRingElem& b) { return !(a == b); }

    std::string str() const;

private:
    GroupPtr g_;
    FieldPtr f_;
    std::vector<FieldElement> c_;
};

GroupRingElem gr_pow(const GroupRingElem& u, long long e);

/// The |G| x |G| matrix with M[i][j] = coeff of listing[i]^-1 * listing[j].
/// Row 0 is the coefficient vector of u; for cyclic groups the result is
/// the circulant of that vector.
Mat embed_matrix(const GroupRingElem& u);

/// Rank of embed_matrix(u) by exact elimination.
int gr_rank(const GroupRingElem& u);

/// Inverse in FG, read off the first row of the inverted matrix and
/// verified by multiplication. nullopt for zero divisors.
std::optional<GroupRingElem> gr_inverse(const GroupRingElem& u);

/// Least e <= cap with u^e = 0, if any.
std::optional<int> nilpotency_index(const GroupRingElem& u, int cap);

/// The n idempotents e_j = (1/n) sum_k zeta^(jk) a^k of F C_n, in the
/// order that puts the all-ones idempotent first. Requires an order-n
/// root of unity and n invertible in the field.
std::vector<GroupRingElem> cyclic_idempotents(int n, const FieldPtr& field);

/// Merges e_j with e_{n-j} (j != 0, n/2) so all coefficients become
/// rational/real; output is again a complete orthogonal family.
std::vector<GroupRingElem> combine_conjugate_idempotents(const std::vector<GroupRingElem>& es);

/// Built-in complete orthogonal idempotent families (S3 and C2xC2).
std::vector<GroupRingElem> builtin_idempotents(const GroupPtr& group, const FieldPtr& field);

/// e_i != 0, e_i^2 = e_i, e_i e_j = 0 (i != j), sum e_i = 1.
bool is_complete_orthogonal_family(const std::vector<GroupRingElem>& es);

/// Pairwise commutation check over the actual elements.
bool elements_commute(const std::vector<GroupRingElem>& es);

}  // namespace grconv
