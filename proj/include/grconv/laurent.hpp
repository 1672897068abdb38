#pragma once

#include <map>
#include <optional>

#include "grconv/groupring.hpp"

namespace grconv {

/// Laurent polynomial with group ring coefficients: finitely many terms
/// c_e z^e, e any integer. Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(GroupPtr group, FieldPtr field);

    static LaurentPoly zero(const GroupPtr& g, const FieldPtr& f) { return {g, f}; }
    static LaurentPoly one(const GroupPtr& g, const FieldPtr& f);
    static LaurentPoly term(const GroupRingElem& c, int exponent);

    const GroupPtr& group() const { return g_; }
    const FieldPtr& field() const { return f_; }
    const std::map<int, GroupRingElem>& terms() const { return t_; }
    GroupRingElem coeff(int e) const;
    void set_coeff(int e, const GroupRingElem& c);

    bool is_zero() const { return t_.empty(); }
    int min_exp() const;  // throws on zero
    int max_exp() const;
    std::vector<int> support() const;

    /// Multiply by z^s.
    LaurentPoly shifted(int s) const;
    /// Substitute z -> z^-1.
    LaurentPoly reversed() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str() const;

private:
    GroupPtr g_;
    FieldPtr f_;
    std::map<int, GroupRingElem> t_;
};

LaurentPoly lp_pow(const LaurentPoly& f, long long e);

/// t such that f*g = z^t (the coefficient being the group ring identity),
/// or nullopt if the product is not a monomial unit.
std::optional<int> is_unit_pair(const LaurentPoly& f, const LaurentPoly& g);

/// g / z^t, so that a pair with f*g = z^t becomes a true inverse pair.
LaurentPoly shift_normalize(const LaurentPoly& g, int t);

enum class SquareClass { identity_square, shifted_square, neither };
struct SquareClassification {
    SquareClass cls = SquareClass::neither;
    int t = 0;  // w^2 = z^(2t) when cls != neither
};

/// Characteristic-2 classification of w^2, computed both by direct
/// squaring and by the coefficient criterion (exactly one coefficient
/// squares to 1, all others to 0); the two routes must agree, which is
/// checked on every call. Requires commuting coefficients.
SquareClassification char2_square_classify(const LaurentPoly& w);

struct PthPowerClassification {
    bool is_pth_power = false;
    int t = 0;
    FieldElement gamma;  // w^p = gamma^p z^(pt)
};

/// Characteristic-p analogue: w^p = gamma^p z^(pt) iff exactly one
/// coefficient has p-th power a nonzero scalar and all others are
/// nilpotent of index <= p. Both routes computed and checked. gamma is
/// the unique p-th root of the scalar (Frobenius is bijective).
PthPowerClassification charp_power_classify(const LaurentPoly& w, long long p);

}  // namespace grconv
