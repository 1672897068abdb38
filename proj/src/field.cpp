#include "grconv/field.hpp"

#include <algorithm>
#include <sstream>

namespace grconv {

namespace {

long long mod_ll(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

long long mod_inv(long long a, long long p) {
    a = mod_ll(a, p);
    if (a == 0) throw division_by_zero_error("inverse of zero mod " + std::to_string(p));
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    return mod_ll(t, p);
}

using Poly = std::vector<long long>;

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_ll(r[i + j] + (__int128)a[i] * b[j] % p, p);
    }
    ptrim(r);
    return r;
}

// remainder of a by monic-normalizable divisor d, both over GF(p)
Poly pmod(Poly a, const Poly& d, long long p) {
    ptrim(a);
    long long lead_inv = mod_inv(d.back(), p);
    while (a.size() >= d.size() && !a.empty()) {
        long long c = (__int128)a.back() * lead_inv % p;
        size_t shift = a.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i)
            a[shift + i] = mod_ll(a[shift + i] - (__int128)c * d[i] % p, p);
        ptrim(a);
    }
    return a;
}

// extended euclid: returns g, u with u*a == g (mod m), g = gcd(a, m)
std::pair<Poly, Poly> pgcd_inverse(const Poly& a, const Poly& m, long long p) {
    Poly r0 = m, r1 = a, s0 = {}, s1 = {1};
    ptrim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q;
        Poly rem = r0;
        long long lead_inv = mod_inv(r1.back(), p);
        ptrim(rem);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            long long c = (__int128)rem.back() * lead_inv % p;
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = mod_ll(rem[shift + i] - (__int128)c * r1[i] % p, p);
            ptrim(rem);
        }
        Poly s2 = s0;  // s0 - q*s1
        Poly qs = pmul(q, s1, p);
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = mod_ll(s2[i] - qs[i], p);
        ptrim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    return {r0, s0};
}

using QPoly = std::vector<Rational>;

void qtrim(QPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qtrim(r);
    return r;
}

QPoly qmod(QPoly a, const QPoly& d) {
    qtrim(a);
    Rational lead_inv = d.back().inverse();
    while (a.size() >= d.size() && !a.empty()) {
        Rational c = a.back() * lead_inv;
        size_t shift = a.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= c * d[i];
        qtrim(a);
    }
    return a;
}

std::pair<QPoly, QPoly> qgcd_inverse(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
    qtrim(r1);
    while (!r1.empty()) {
        QPoly q;
        QPoly rem = r0;
        Rational lead_inv = r1.back().inverse();
        qtrim(rem);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Rational(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() * lead_inv;
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            qtrim(rem);
        }
        QPoly s2 = s0;
        QPoly qs = qmul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qtrim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    return {r0, s0};
}

std::vector<long long> factor_distinct_primes(long long n) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool Field::is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool Field::is_irreducible(const std::vector<long long>& poly, long long p) {
    Poly f = poly;
    for (auto& c : f) c = mod_ll(c, p);
    ptrim(f);
    if (f.size() < 2) return false;
    int m = (int)f.size() - 1;
    if (m == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // trial division by all monic polynomials of degree 1 .. m/2
    for (int d = 1; 2 * d <= m; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly cand(d + 1, 0);
            long long v = idx;
            for (int i = 0; i < d; ++i) {
                cand[i] = v % p;
                v /= p;
            }
            cand[d] = 1;
            if (pmod(f, cand, p).empty()) return false;
        }
    }
    return true;
}

std::vector<long long> Field::cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic conductor must be >= 1");
    if (n == 1) return {-1, 1};
    // (x^n - 1) / prod_{d | n, d < n} Phi_d, exact integer division
    std::vector<long long> f(n + 1, 0);
    f[0] = -1;
    f[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<long long> phi = cyclotomic_polynomial(d);
        std::vector<long long> q(f.size() - phi.size() + 1, 0);
        std::vector<long long> rem = f;
        for (int i = (int)q.size() - 1; i >= 0; --i) {
            long long c = rem[i + phi.size() - 1];  // phi is monic
            q[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < phi.size(); ++j) rem[i + j] -= c * phi[j];
        }
        f = q;
    }
    return f;
}

FieldPtr Field::finite(long long p, int m, std::vector<long long> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::finite;
    f->p_ = p;
    f->m_ = m;
    f->deg_ = m;
    if (m == 1) {
        f->modulus_ = {0, 1};  // x
        return f;
    }
    if (modulus.empty()) {
        // smallest monic irreducible of degree m by integer encoding
        long long count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly cand(m + 1, 0);
            long long v = idx;
            for (int i = 0; i < m; ++i) {
                cand[i] = v % p;
                v /= p;
            }
            cand[m] = 1;
            if (is_irreducible(cand, p)) {
                modulus = cand;
                break;
            }
        }
    } else {
        for (auto& c : modulus) c = mod_ll(c, p);
        if ((int)modulus.size() != m + 1 || modulus.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree " + std::to_string(m));
        if (!is_irreducible(modulus, p))
            throw std::invalid_argument("modulus is not irreducible over GF(" + std::to_string(p) + ")");
    }
    f->modulus_ = modulus;
    return f;
}

FieldPtr Field::gf(long long q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    long long p = q;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int m = 0;
    long long t = q;
    while (t > 1) {
        if (t % p != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        t /= p;
        ++m;
    }
    return finite(p, m);
}

FieldPtr Field::cyclotomic(int conductor) {
    if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::cyclotomic;
    f->p_ = 0;
    f->conductor_ = conductor;
    f->cyclo_modulus_ = cyclotomic_polynomial(conductor);
    f->deg_ = (int)f->cyclo_modulus_.size() - 1;
    return f;
}

FieldPtr Field::rationals() { return cyclotomic(1); }

FieldPtr Field::parse(const std::string& text, std::vector<long long> modulus) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s.push_back(c);
    if (s == "Q") return rationals();
    if (s.rfind("Q(zeta_", 0) == 0 && s.back() == ')') {
        int n = std::stoi(s.substr(7, s.size() - 8));
        return cyclotomic(n);
    }
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        std::string body = s.substr(3, s.size() - 4);
        auto caret = body.find('^');
        if (caret != std::string::npos) {
            long long p = std::stoll(body.substr(0, caret));
            int m = std::stoi(body.substr(caret + 1));
            return finite(p, m, std::move(modulus));
        }
        long long q = std::stoll(body);
        if (modulus.empty()) return gf(q);
        long long p = q;
        for (long long d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        int m = 0;
        long long t = q;
        while (t > 1) {
            t /= p;
            ++m;
        }
        return finite(p, m, std::move(modulus));
    }
    throw std::invalid_argument("unrecognized field spec: " + text);
}

long long Field::order() const {
    if (!is_finite()) throw std::invalid_argument("order() of an infinite field");
    long long q = 1;
    for (int i = 0; i < m_; ++i) q *= p_;
    return q;
}

bool Field::same(const Field& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == FieldKind::finite) return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    return conductor_ == o.conductor_;
}

std::string Field::name() const {
    if (is_finite()) {
        if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
        return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
    }
    if (conductor_ == 1) return "Q";
    return "Q(zeta_" + std::to_string(conductor_) + ")";
}

FieldElement Field::zero() const {
    FieldElement e;
    e.f_ = shared_from_this();
    if (is_finite())
        e.fc_.assign(deg_, 0);
    else
        e.cc_.assign(deg_, Rational(0));
    return e;
}

FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long long v) const {
    FieldElement e = zero();
    if (is_finite())
        e.fc_[0] = mod_ll(v, p_);
    else
        e.cc_[0] = Rational(v);
    return e;
}

FieldElement Field::generator() const {
    if (is_finite()) {
        if (m_ == 1) throw std::invalid_argument("prime field has no canonical generator element");
        std::vector<long long> c(deg_, 0);
        c[1] = 1;
        return from_coeffs(std::move(c));
    }
    // zeta_n = class of x, reduced (n = 1 gives 1, n = 2 gives -1)
    QPoly x = {Rational(0), Rational(1)};
    QPoly mod(cyclo_modulus_.begin(), cyclo_modulus_.end());
    QPoly r = qmod(x, mod);
    std::vector<Rational> c(deg_, Rational(0));
    for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
    return from_rationals(std::move(c));
}

FieldElement Field::from_coeffs(std::vector<long long> coeffs) const {
    if (!is_finite()) throw std::invalid_argument("from_coeffs on a cyclotomic field");
    if ((int)coeffs.size() > deg_) {
        Poly mod = modulus_;
        for (auto& c : coeffs) c = mod_ll(c, p_);
        coeffs = pmod(coeffs, mod, p_);
    }
    FieldElement e = zero();
    for (size_t i = 0; i < coeffs.size(); ++i) e.fc_[i] = mod_ll(coeffs[i], p_);
    return e;
}

FieldElement Field::from_rationals(std::vector<Rational> coeffs) const {
    if (is_finite()) throw std::invalid_argument("from_rationals on a finite field");
    if ((int)coeffs.size() > deg_) {
        QPoly mod(cyclo_modulus_.begin(), cyclo_modulus_.end());
        coeffs = qmod(coeffs, mod);
    }
    FieldElement e = zero();
    for (size_t i = 0; i < coeffs.size(); ++i) e.cc_[i] = coeffs[i];
    return e;
}

FieldElement Field::element_at(long long index) const {
    if (!is_finite()) throw std::invalid_argument("element_at on an infinite field");
    std::vector<long long> c(deg_, 0);
    for (int i = 0; i < deg_; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    return from_coeffs(std::move(c));
}

long long Field::index_of(const FieldElement& x) const {
    if (!is_finite()) throw std::invalid_argument("index_of on an infinite field");
    long long idx = 0;
    for (int i = deg_ - 1; i >= 0; --i) idx = idx * p_ + x.coeffs()[i];
    return idx;
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || !b.field()) throw field_mismatch_error("uninitialized field element");
    if (a.field().get() == b.field().get()) return;
    if (!a.field()->same(*b.field()))
        throw field_mismatch_error("elements of distinct fields: " + a.field()->name() + " vs " +
                                   b.field()->name());
}

}  // namespace

bool FieldElement::is_zero() const {
    for (auto c : fc_)
        if (c != 0) return false;
    for (auto& c : cc_)
        if (!c.is_zero()) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (!f_) return false;
    return *this == f_->one();
}

long long FieldElement::as_integer() const {
    if (!f_->is_finite()) throw std::invalid_argument("as_integer on a cyclotomic element");
    for (size_t i = 1; i < fc_.size(); ++i)
        if (fc_[i] != 0) throw std::invalid_argument("element is not in the prime field");
    return fc_[0];
}

Rational FieldElement::as_rational() const {
    if (f_->is_finite()) throw std::invalid_argument("as_rational on a finite-field element");
    for (size_t i = 1; i < cc_.size(); ++i)
        if (!cc_[i].is_zero()) throw std::invalid_argument("element is not rational");
    return cc_[0];
}

std::string FieldElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    auto append = [&out](const std::string& term) {
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += term;
        } else {
            out += "+" + term;
        }
    };
    if (f_->is_finite()) {
        for (size_t i = 0; i < fc_.size(); ++i) {
            if (fc_[i] == 0) continue;
            std::string t;
            if (i == 0) {
                t = std::to_string(fc_[i]);
            } else {
                if (fc_[i] != 1) t = std::to_string(fc_[i]) + "*";
                t += "w";
                if (i > 1) t += "^" + std::to_string(i);
            }
            append(t);
        }
    } else {
        for (size_t i = 0; i < cc_.size(); ++i) {
            if (cc_[i].is_zero()) continue;
            std::string t;
            if (i == 0) {
                t = cc_[i].str();
            } else {
                if (!cc_[i].is_one()) t = cc_[i].str() + "*";
                t += "zeta";
                if (i > 1) t += "^" + std::to_string(i);
            }
            append(t);
        }
    }
    return out;
}

std::string FieldElement::machine_str() const {
    std::string out;
    if (f_->is_finite()) {
        for (size_t i = 0; i < fc_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(fc_[i]);
        }
    } else {
        for (size_t i = 0; i < cc_.size(); ++i) {
            if (i) out += ",";
            out += cc_[i].str();
        }
    }
    return out;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    FieldElement r = a;
    if (a.f_->is_finite()) {
        long long p = a.f_->characteristic();
        for (size_t i = 0; i < r.fc_.size(); ++i) r.fc_[i] = mod_ll(r.fc_[i] + b.fc_[i], p);
    } else {
        for (size_t i = 0; i < r.cc_.size(); ++i) r.cc_[i] += b.cc_[i];
    }
    return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    if (f_->is_finite()) {
        long long p = f_->characteristic();
        for (auto& c : r.fc_) c = mod_ll(-c, p);
    } else {
        for (auto& c : r.cc_) c = -c;
    }
    return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    if (a.f_->is_finite()) {
        long long p = a.f_->characteristic();
        if (a.f_->extension_degree() == 1) {
            FieldElement r = a;
            r.fc_[0] = (__int128)a.fc_[0] * b.fc_[0] % p;
            return r;
        }
        Poly prod = pmul(a.fc_, b.fc_, p);
        prod = pmod(prod, a.f_->modulus(), p);
        FieldElement r = a.f_->zero();
        for (size_t i = 0; i < prod.size(); ++i) r.fc_[i] = prod[i];
        return r;
    }
    QPoly prod = qmul(a.cc_, b.cc_);
    QPoly mod(a.f_->cyclo_modulus().begin(), a.f_->cyclo_modulus().end());
    prod = qmod(prod, mod);
    FieldElement r = a.f_->zero();
    for (size_t i = 0; i < prod.size(); ++i) r.cc_[i] = prod[i];
    return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.f_ || !b.f_) return !a.f_ && !b.f_;
    if (!a.f_->same(*b.f_)) return false;
    return a.fc_ == b.fc_ && a.cc_ == b.cc_;
}

FieldElement field_inv(const FieldElement& a) {
    if (a.is_zero()) throw division_by_zero_error("field inverse of zero");
    const auto& f = a.field();
    if (f->is_finite()) {
        long long p = f->characteristic();
        if (f->extension_degree() == 1) return f->from_integer(mod_inv(a.coeffs()[0], p));
        auto [g, u] = pgcd_inverse(a.coeffs(), f->modulus(), p);
        // g is a nonzero constant since the modulus is irreducible
        long long scale = mod_inv(g[0], p);
        Poly inv = u;
        for (auto& c : inv) c = (__int128)c * scale % p;
        inv = pmod(inv, f->modulus(), p);
        return f->from_coeffs(inv);
    }
    QPoly mod(f->cyclo_modulus().begin(), f->cyclo_modulus().end());
    auto [g, u] = qgcd_inverse(a.rational_coeffs(), mod);
    Rational scale = g[0].inverse();
    QPoly inv = u;
    for (auto& c : inv) c = c * scale;
    inv = qmod(inv, mod);
    std::vector<Rational> cs(f->degree(), Rational(0));
    for (size_t i = 0; i < inv.size(); ++i) cs[i] = inv[i];
    return f->from_rationals(std::move(cs));
}

FieldElement field_pow(const FieldElement& a, long long e) {
    FieldElement base = a;
    if (e < 0) {
        base = field_inv(a);
        e = -e;
    }
    FieldElement r = a.field()->one();
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

long long multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) throw division_by_zero_error("order of zero");
    const auto& f = a.field();
    if (!f->is_finite()) throw std::invalid_argument("multiplicative_order requires a finite field");
    long long n = f->order() - 1;
    for (long long q : factor_distinct_primes(n)) {
        while (n % q == 0 && field_pow(a, n / q).is_one()) n /= q;
    }
    return n;
}

FieldElement root_of_unity(const FieldPtr& field, long long n) {
    if (n < 1) throw unsupported_order_error("root of unity order must be >= 1");
    if (field->is_finite()) {
        long long q = field->order();
        if ((q - 1) % n != 0)
            throw unsupported_order_error("no order-" + std::to_string(n) + " element in " + field->name());
        if (n == 1) return field->one();
        for (long long idx = 1; idx < q; ++idx) {
            FieldElement e = field->element_at(idx);
            if (multiplicative_order(e) == n) return e;
        }
        throw unsupported_order_error("no order-" + std::to_string(n) + " element found");
    }
    if (n == 1) return field->one();
    long long m = field->conductor();
    if (m % n == 0) return field_pow(field->generator(), m / n);
    // the roots of unity in Q(zeta_m) form a cyclic group of order
    // lcm(2, m); for odd m the element -zeta_m generates it
    long long torsion = m % 2 == 0 ? m : 2 * m;
    if (torsion % n != 0)
        throw unsupported_order_error("conductor " + std::to_string(m) + " has no order-" +
                                      std::to_string(n) + " root");
    return field_pow(-field->generator(), torsion / n);
}

FieldElement specialize_cyclotomic(const FieldElement& x, const FieldPtr& gfp) {
    const auto& src = x.field();
    if (src->is_finite()) throw specialization_error("specialization source must be cyclotomic");
    if (!gfp->is_finite() || gfp->extension_degree() != 1)
        throw specialization_error("specialization target must be a prime field");
    long long p = gfp->characteristic();
    long long n = src->conductor();
    if (n % p == 0) throw specialization_error("p divides the conductor");
    if ((p - 1) % n != 0)
        throw specialization_error("GF(" + std::to_string(p) + ") has no order-" + std::to_string(n) +
                                   " element");
    for (const auto& c : x.rational_coeffs())
        if (c.den() % p == 0) throw specialization_error("p divides a coefficient denominator");
    FieldElement zeta = root_of_unity(gfp, n);
    FieldElement acc = gfp->zero();
    FieldElement zpow = gfp->one();
    for (const auto& c : x.rational_coeffs()) {
        long long v = (__int128)mod_ll(c.num(), p) * mod_inv(c.den(), p) % p;
        acc = acc + gfp->from_integer(v) * zpow;
        zpow = zpow * zeta;
    }
    return acc;
}

}  // namespace grconv
