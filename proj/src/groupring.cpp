#include "grconv/groupring.hpp"

#include <stdexcept>

namespace grconv {

namespace {

void require_same_ring(const GroupRingElem& a, const GroupRingElem& b) {
    if (!a.group() || !b.group()) throw std::invalid_argument("uninitialized group ring element");
    if (!a.group()->same(*b.group())) throw group_mismatch_error("elements of distinct group rings");
    if (!a.field()->same(*b.field()))
        throw field_mismatch_error("group ring elements over distinct fields");
}

}  // namespace

GroupRingElem::GroupRingElem(GroupPtr group, FieldPtr field)
    : g_(std::move(group)), f_(std::move(field)) {
    c_.assign(g_->order(), f_->zero());
}

GroupRingElem GroupRingElem::one(const GroupPtr& g, const FieldPtr& f) {
    GroupRingElem e(g, f);
    e.c_[0] = f->one();
    return e;
}

GroupRingElem GroupRingElem::monomial(const GroupPtr& g, const FieldPtr& f, int index,
                                      const FieldElement& coeff) {
    GroupRingElem e(g, f);
    e.c_[index] = coeff;
    return e;
}

GroupRingElem GroupRingElem::from_coeffs(const GroupPtr& g, const FieldPtr& f,
                                         std::vector<FieldElement> coeffs) {
    if ((int)coeffs.size() != g->order())
        throw std::invalid_argument("coefficient vector length must equal |G|");
    GroupRingElem e(g, f);
    e.c_ = std::move(coeffs);
    return e;
}

bool GroupRingElem::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool GroupRingElem::is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

std::vector<int> GroupRingElem::support() const {
    std::vector<int> s;
    for (int i = 0; i < (int)c_.size(); ++i)
        if (!c_[i].is_zero()) s.push_back(i);
    return s;
}

GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    require_same_ring(a, b);
    GroupRingElem r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) { return a + (-b); }

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    require_same_ring(a, b);
    GroupRingElem r(a.g_, a.f_);
    int n = a.g_->order();
    for (int i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            int k = a.g_->mul(i, j);
            r.c_[k] = r.c_[k] + a.c_[i] * b.c_[j];
        }
    }
    return r;
}

GroupRingElem operator*(const FieldElement& c, const GroupRingElem& a) {
    GroupRingElem r = a;
    for (auto& x : r.c_) x = c * x;
    return r;
}

bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    if (!a.g_ || !b.g_) return !a.g_ && !b.g_;
    if (!a.g_->same(*b.g_) || !a.f_->same(*b.f_)) return false;
    return a.c_ == b.c_;
}

std::string GroupRingElem::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i < (int)c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string t;
        const std::string& nm = g_->element_name(i);
        std::string cs = c_[i].str();
        if (i == 0) {
            t = cs;
        } else if (c_[i].is_one()) {
            t = nm;
        } else {
            bool compound = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
            t = (compound ? "(" + cs + ")" : cs) + "*" + nm;
        }
        if (out.empty()) {
            out = t;
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

GroupRingElem gr_pow(const GroupRingElem& u, long long e) {
    if (e < 0) throw std::invalid_argument("gr_pow wants e >= 0");
    GroupRingElem r = GroupRingElem::one(u.group(), u.field());
    GroupRingElem base = u;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Mat embed_matrix(const GroupRingElem& u) {
    int n = u.group()->order();
    Mat m(u.field(), n, n);
    for (int i = 0; i < n; ++i) {
        int ii = u.group()->inverse(i);
        for (int j = 0; j < n; ++j) m.at(i, j) = u.coeff(u.group()->mul(ii, j));
    }
    return m;
}

int gr_rank(const GroupRingElem& u) { return embed_matrix(u).rank(); }

std::optional<GroupRingElem> gr_inverse(const GroupRingElem& u) {
    auto inv = embed_matrix(u).inverse();
    if (!inv) return std::nullopt;
    std::vector<FieldElement> coeffs;
    coeffs.reserve(u.group()->order());
    for (int j = 0; j < u.group()->order(); ++j) coeffs.push_back(inv->at(0, j));
    GroupRingElem v = GroupRingElem::from_coeffs(u.group(), u.field(), std::move(coeffs));
    if (!(u * v).is_one()) return std::nullopt;
    return v;
}

std::optional<int> nilpotency_index(const GroupRingElem& u, int cap) {
    if (cap < 1) throw std::invalid_argument("nilpotency cap must be >= 1");
    GroupRingElem p = GroupRingElem::one(u.group(), u.field());
    for (int e = 1; e <= cap; ++e) {
        p = p * u;
        if (p.is_zero()) return e;
    }
    return std::nullopt;
}

std::vector<GroupRingElem> cyclic_idempotents(int n, const FieldPtr& field) {
    GroupPtr g = Group::cyclic(n);
    FieldElement n_inv = field_inv(field->from_integer(n));  // throws if n not invertible
    FieldElement zeta = root_of_unity(field, n);
    std::vector<GroupRingElem> es;
    for (int j = 0; j < n; ++j) {
        GroupRingElem e(g, field);
        for (int k = 0; k < n; ++k)
            e.set_coeff(k, n_inv * field_pow(zeta, (long long)j * k % n));
        es.push_back(std::move(e));
    }
    return es;
}

std::vector<GroupRingElem> combine_conjugate_idempotents(const std::vector<GroupRingElem>& es) {
    int n = (int)es.size();
    std::vector<GroupRingElem> out;
    for (int j = 0; j <= n / 2; ++j) {
        if (j == 0 || 2 * j == n)
            out.push_back(es[j]);
        else
            out.push_back(es[j] + es[n - j]);
    }
    return out;
}

std::vector<GroupRingElem> builtin_idempotents(const GroupPtr& group, const FieldPtr& field) {
    auto from_named = [&](std::initializer_list<std::pair<const char*, long long>> terms,
                          long long denom) {
        GroupRingElem e(group, field);
        FieldElement scale = field_inv(field->from_integer(denom));
        for (auto& [nm, c] : terms) {
            int idx = -1;
            for (int i = 0; i < group->order(); ++i)
                if (group->element_name(i) == nm) {
                    idx = i;
                    break;
                }
            if (idx < 0) throw std::logic_error(std::string("element not found: ") + nm);
            e.set_coeff(idx, scale * field->from_integer(c));
        }
        return e;
    };

    if (group->name() == "S3") {
        auto e1 = from_named({{"1", 1}, {"(12)", 1}, {"(13)", 1}, {"(23)", 1}, {"(123)", 1}, {"(132)", 1}}, 6);
        auto e2 = from_named({{"1", 1}, {"(12)", -1}, {"(13)", -1}, {"(23)", -1}, {"(123)", 1}, {"(132)", 1}}, 6);
        auto e3 = from_named({{"1", 2}, {"(123)", -1}, {"(132)", -1}}, 3);
        return {e1, e2, e3};
    }
    if (group->name() == "C2xC2") {
        auto e1 = from_named({{"1", 1}, {"a", 1}, {"b", 1}, {"ba", 1}}, 4);
        auto e2 = from_named({{"1", 1}, {"a", -1}, {"b", 1}, {"ba", -1}}, 4);
        auto e3 = from_named({{"1", 1}, {"a", -1}, {"b", -1}, {"ba", 1}}, 4);
        auto e4 = from_named({{"1", 1}, {"a", 1}, {"b", -1}, {"ba", -1}}, 4);
        return {e1, e2, e3, e4};
    }
    throw std::invalid_argument("no built-in idempotents for " + group->name());
}

bool is_complete_orthogonal_family(const std::vector<GroupRingElem>& es) {
    if (es.empty()) return false;
    GroupRingElem sum = GroupRingElem::zero(es[0].group(), es[0].field());
    for (size_t i = 0; i < es.size(); ++i) {
        if (es[i].is_zero()) return false;
        if (es[i] * es[i] != es[i]) return false;
        for (size_t j = 0; j < es.size(); ++j)
            if (i != j && !(es[i] * es[j]).is_zero()) return false;
        sum = sum + es[i];
    }
    return sum.is_one();
}

bool elements_commute(const std::vector<GroupRingElem>& es) {
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
            if (es[i] * es[j] != es[j] * es[i]) return false;
    return true;
}

}  // namespace grconv
