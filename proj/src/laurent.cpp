#include "grconv/laurent.hpp"

#include <stdexcept>

namespace grconv {

namespace {

void require_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
    if (!a.group() || !b.group()) throw std::invalid_argument("uninitialized laurent polynomial");
    if (!a.group()->same(*b.group()) || !a.field()->same(*b.field()))
        throw std::invalid_argument("laurent polynomials over distinct rings");
}

std::vector<GroupRingElem> coefficients_of(const LaurentPoly& w) {
    std::vector<GroupRingElem> cs;
    for (const auto& [e, c] : w.terms()) cs.push_back(c);
    return cs;
}

}  // namespace

LaurentPoly::LaurentPoly(GroupPtr group, FieldPtr field)
    : g_(std::move(group)), f_(std::move(field)) {}

LaurentPoly LaurentPoly::one(const GroupPtr& g, const FieldPtr& f) {
    LaurentPoly p(g, f);
    p.t_[0] = GroupRingElem::one(g, f);
    return p;
}

LaurentPoly LaurentPoly::term(const GroupRingElem& c, int exponent) {
    LaurentPoly p(c.group(), c.field());
    if (!c.is_zero()) p.t_[exponent] = c;
    return p;
}

GroupRingElem LaurentPoly::coeff(int e) const {
    auto it = t_.find(e);
    if (it != t_.end()) return it->second;
    return GroupRingElem::zero(g_, f_);
}

void LaurentPoly::set_coeff(int e, const GroupRingElem& c) {
    if (c.is_zero())
        t_.erase(e);
    else
        t_[e] = c;
}

int LaurentPoly::min_exp() const {
    if (t_.empty()) throw std::invalid_argument("min_exp of zero");
    return t_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (t_.empty()) throw std::invalid_argument("max_exp of zero");
    return t_.rbegin()->first;
}

std::vector<int> LaurentPoly::support() const {
    std::vector<int> s;
    for (const auto& [e, c] : t_) s.push_back(e);
    return s;
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly p(g_, f_);
    for (const auto& [e, c] : t_) p.t_[e + s] = c;
    return p;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly p(g_, f_);
    for (const auto& [e, c] : t_) p.t_[-e] = c;
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_ring(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.t_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_ring(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.t_) r.set_coeff(e, r.coeff(e) - c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_ring(a, b);
    LaurentPoly r(a.g_, a.f_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            GroupRingElem prod = ca * cb;
            if (prod.is_zero()) continue;
            r.set_coeff(ea + eb, r.coeff(ea + eb) + prod);
        }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (!a.g_ || !b.g_) return !a.g_ && !b.g_;
    if (!a.g_->same(*b.g_) || !a.f_->same(*b.f_)) return false;
    if (a.t_.size() != b.t_.size()) return false;
    for (const auto& [e, c] : a.t_) {
        auto it = b.t_.find(e);
        if (it == b.t_.end() || !(it->second == c)) return false;
    }
    return true;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : t_) {
        std::string cs = c.str();
        bool compound = cs.find('+') != std::string::npos || cs.find(' ') != std::string::npos;
        std::string t = compound ? "(" + cs + ")" : cs;
        if (e != 0) {
            if (t == "1")
                t = "";
            else
                t += "*";
            t += "z";
            if (e != 1) t += "^" + std::to_string(e);
        }
        if (!out.empty()) out += " + ";
        out += t;
    }
    return out;
}

LaurentPoly lp_pow(const LaurentPoly& f, long long e) {
    if (e < 0) throw std::invalid_argument("lp_pow wants e >= 0");
    LaurentPoly r = LaurentPoly::one(f.group(), f.field());
    LaurentPoly base = f;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::optional<int> is_unit_pair(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly prod = f * g;
    if (prod.terms().size() != 1) return std::nullopt;
    const auto& [e, c] = *prod.terms().begin();
    if (!c.is_one()) return std::nullopt;
    return e;
}

LaurentPoly shift_normalize(const LaurentPoly& g, int t) { return g.shifted(-t); }

SquareClassification char2_square_classify(const LaurentPoly& w) {
    if (w.field()->characteristic() != 2)
        throw std::invalid_argument("char2_square_classify requires characteristic 2");
    if (!elements_commute(coefficients_of(w)))
        throw std::invalid_argument("coefficients do not commute");

    // direct route
    LaurentPoly sq = w * w;
    bool direct_hit = sq.terms().size() == 1 && sq.terms().begin()->second.is_one() &&
                      sq.terms().begin()->first % 2 == 0;
    int direct_t = direct_hit ? sq.terms().begin()->first / 2 : 0;

    // coefficient criterion: alpha_t^2 = 1 for exactly one t, others square to zero
    int crit_t = 0;
    int unit_count = 0;
    bool crit_ok = true;
    for (const auto& [e, c] : w.terms()) {
        GroupRingElem csq = c * c;
        if (csq.is_one()) {
            crit_t = e;
            ++unit_count;
        } else if (!csq.is_zero()) {
            crit_ok = false;
        }
    }
    crit_ok = crit_ok && unit_count == 1;

    if (direct_hit != crit_ok || (direct_hit && direct_t != crit_t))
        throw std::logic_error("square classification routes disagree");

    SquareClassification out;
    if (!direct_hit) return out;
    out.t = direct_t;
    out.cls = direct_t == 0 ? SquareClass::identity_square : SquareClass::shifted_square;
    return out;
}

PthPowerClassification charp_power_classify(const LaurentPoly& w, long long p) {
    const auto& field = w.field();
    if (!field->is_finite() || field->characteristic() != p)
        throw std::invalid_argument("charp_power_classify requires a finite field of characteristic p");
    if (!elements_commute(coefficients_of(w)))
        throw std::invalid_argument("coefficients do not commute");

    auto scalar_of = [&](const GroupRingElem& u) -> std::optional<FieldElement> {
        for (int i = 1; i < u.group()->order(); ++i)
            if (!u.coeff(i).is_zero()) return std::nullopt;
        return u.coeff(0);
    };

    // direct route: w^p must be a scalar multiple of z^(pt)
    LaurentPoly wp = lp_pow(w, p);
    bool direct_hit = false;
    int direct_t = 0;
    FieldElement direct_scalar = field->zero();
    if (wp.terms().size() == 1) {
        const auto& [e, c] = *wp.terms().begin();
        auto s = scalar_of(c);
        if (s && !s->is_zero() && e % (int)p == 0) {
            direct_hit = true;
            direct_t = e / (int)p;
            direct_scalar = *s;
        }
    }

    // criterion: alpha_t^p = 1 for exactly one t (up to scalar), others vanish
    int crit_t = 0;
    int unit_count = 0;
    bool crit_ok = true;
    FieldElement crit_scalar = field->zero();
    for (const auto& [e, c] : w.terms()) {
        GroupRingElem cp = gr_pow(c, p);
        auto s = scalar_of(cp);
        if (s && s->is_zero()) continue;
        if (s && !s->is_zero()) {
            crit_t = e;
            crit_scalar = *s;
            ++unit_count;
        } else {
            crit_ok = false;
        }
    }
    crit_ok = crit_ok && unit_count == 1;

    if (direct_hit != crit_ok ||
        (direct_hit && (direct_t != crit_t || direct_scalar != crit_scalar)))
        throw std::logic_error("p-th power classification routes disagree");

    PthPowerClassification out;
    out.gamma = field->zero();
    if (!direct_hit) return out;
    out.is_pth_power = true;
    out.t = direct_t;
    // unique p-th root via Frobenius: x -> x^p is an automorphism, and its
    // inverse is x -> x^(p^(m-1))
    long long inv_exp = 1;
    for (int i = 0; i + 1 < field->extension_degree(); ++i) inv_exp *= p;
    out.gamma = field_pow(direct_scalar, inv_exp);
    return out;
}

}  // namespace grconv
