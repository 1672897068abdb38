#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "grconv/rational.hpp"

namespace grconv {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

struct field_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct division_by_zero_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct unsupported_order_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct specialization_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class FieldKind { finite, cyclotomic };

/// Exact field of scalars: either GF(p^m) with an explicit irreducible
/// modulus, or the cyclotomic rationals Q(zeta_n) represented modulo the
/// n-th cyclotomic polynomial. All arithmetic is exact; there is no
/// floating point anywhere in the library.
///
/// Fields are immutable and shared by pointer. Element equality requires
/// structurally identical fields (same kind, characteristic, modulus or
/// conductor).
class Field : public std::enable_shared_from_this<Field> {
public:
    /// GF(p^m). An empty modulus selects the default: the monic irreducible
    /// polynomial of degree m over GF(p) with the smallest integer encoding
    /// sum c_i p^i. For p = 2 this is x^m + x + 1 whenever that trinomial is
    /// irreducible. A user-supplied modulus (constant term first, monic) is
    /// validated for irreducibility.
    static FieldPtr finite(long long p, int m = 1, std::vector<long long> modulus = {});
    /// GF(q) for prime power q, default modulus.
    static FieldPtr gf(long long q);
    /// Q(zeta_n), elements reduced modulo the n-th cyclotomic polynomial.
    static FieldPtr cyclotomic(int conductor);
    /// Plain rationals, i.e. Q(zeta_1).
    static FieldPtr rationals();
    /// Accepts "GF(4)", "GF(2^3)", "Q(zeta_4)", "Q".
    static FieldPtr parse(const std::string& text, std::vector<long long> modulus = {});

    FieldKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == FieldKind::finite; }
    long long characteristic() const { return p_; }
    int extension_degree() const { return m_; }
    int conductor() const { return conductor_; }
    /// Length of the canonical coefficient vector (m, or deg Phi_n).
    int degree() const { return deg_; }
    long long order() const;  // q = p^m, finite fields only
    const std::vector<long long>& modulus() const { return modulus_; }
    const std::vector<long long>& cyclo_modulus() const { return cyclo_modulus_; }

    bool same(const Field& other) const;
    std::string name() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long long v) const;
    /// The canonical generator: the class of x for GF(p^m) with m > 1,
    /// zeta_n for cyclotomic fields. Throws for prime fields and Q.
    FieldElement generator() const;
    FieldElement from_coeffs(std::vector<long long> coeffs) const;      // finite
    FieldElement from_rationals(std::vector<Rational> coeffs) const;    // cyclotomic
    /// Enumeration of a finite field: index = sum coeffs[i] * p^i.
    FieldElement element_at(long long index) const;
    long long index_of(const FieldElement& x) const;

    static bool is_prime(long long p);
    /// Irreducibility over GF(p) by trial division (desk scale).
    static bool is_irreducible(const std::vector<long long>& poly, long long p);
    /// Integer coefficients of the n-th cyclotomic polynomial, monic.
    static std::vector<long long> cyclotomic_polynomial(int n);

private:
    friend class FieldElement;
    Field() = default;

    FieldKind kind_ = FieldKind::finite;
    long long p_ = 0;       // characteristic (0 for cyclotomic)
    int m_ = 1;             // extension degree (finite)
    int conductor_ = 0;     // cyclotomic
    int deg_ = 1;           // reduction degree
    std::vector<long long> modulus_;        // finite: degree-m monic, constant first
    std::vector<long long> cyclo_modulus_;  // Phi_n, constant first
};

/// Element of a Field, stored as a fully reduced coefficient vector of
/// length Field::degree(). Equality is coefficient-wise.
class FieldElement {
public:
    FieldElement() = default;

    const FieldPtr& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;
    const std::vector<long long>& coeffs() const { return fc_; }
    const std::vector<Rational>& rational_coeffs() const { return cc_; }

    /// Value as an integer for prime-field elements.
    long long as_integer() const;
    /// Constant rational value; throws if the element is not rational.
    Rational as_rational() const;

    std::string str() const;          // human form, e.g. "w^2+1", "1/4"
    std::string machine_str() const;  // coefficient vector, constant first

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    friend class Field;
    friend FieldElement field_inv(const FieldElement&);
    friend FieldElement specialize_cyclotomic(const FieldElement&, const FieldPtr&);

    FieldPtr f_;
    std::vector<long long> fc_;  // finite coefficients, 0 <= c < p
    std::vector<Rational> cc_;   // cyclotomic coefficients
};

FieldElement field_inv(const FieldElement& a);
FieldElement field_pow(const FieldElement& a, long long e);

/// Multiplicative order of a nonzero element of a finite field.
long long multiplicative_order(const FieldElement& a);

/// An element of exact multiplicative order n. For finite fields n must
/// divide q-1 and the element returned is the one with the smallest
/// enumeration index; for Q(zeta_m) n must divide m and zeta_m^(m/n) is
/// returned. Throws unsupported_order_error otherwise.
FieldElement root_of_unity(const FieldPtr& field, long long n);

/// Ring homomorphism Q(zeta_n) -> GF(p): denominators are inverted mod p
/// and zeta_n maps to root_of_unity(GF(p), n). Requires p prime to n and
/// to every denominator, and n | p-1.
FieldElement specialize_cyclotomic(const FieldElement& x, const FieldPtr& gfp);

}  // namespace grconv
