#include "grconv/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace grconv {

namespace {

std::string power_name(const std::string& gen, int e) {
    if (e == 0) return "";
    if (e == 1) return gen;
    return gen + "^" + std::to_string(e);
}

std::string cycle_notation(const std::vector<int>& perm) {
    // one-line image vector (0-based) -> cycle string with 1-based points
    int n = (int)perm.size();
    std::vector<bool> seen(n, false);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || perm[i] == i) continue;
        std::string cyc = "(" + std::to_string(i + 1);
        seen[i] = true;
        for (int j = perm[i]; j != i; j = perm[j]) {
            seen[j] = true;
            cyc += std::to_string(j + 1);
        }
        cyc += ")";
        out += cyc;
    }
    return out.empty() ? "1" : out;
}

}  // namespace

void Group::build_inverses() {
    inv_.assign(order_, 0);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j)
            if (mul(i, j) == 0) inv_[i] = j;
}

GroupPtr Group::cyclic(int n, std::string generator_name) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    auto g = std::shared_ptr<Group>(new Group());
    g->order_ = n;
    g->name_ = "C" + std::to_string(n);
    g->mul_.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g->mul_[i * n + j] = (i + j) % n;
    g->names_.resize(n);
    for (int i = 0; i < n; ++i) g->names_[i] = i == 0 ? "1" : power_name(generator_name, i);
    if (n > 1) g->gens_[generator_name] = 1;
    g->build_inverses();
    return g;
}

GroupPtr Group::symmetric(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("symmetric groups supported up to S4");
    std::vector<std::vector<int>> perms;
    if (n == 3) {
        // fixed listing: 1, (12), (13), (23), (123), (132)
        perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    } else {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()))
            perms.push_back(p);
    }
    int order = (int)perms.size();
    auto g = std::shared_ptr<Group>(new Group());
    g->order_ = order;
    g->name_ = "S" + std::to_string(n);
    g->mul_.resize(order * order);
    auto find = [&perms](const std::vector<int>& q) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == q) return (int)i;
        throw std::logic_error("permutation not in listing");
    };
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            // (x*y)(p) = x(y(p))
            std::vector<int> comp(n);
            for (int p = 0; p < n; ++p) comp[p] = perms[i][perms[j][p]];
            g->mul_[i * order + j] = find(comp);
        }
    }
    g->names_.resize(order);
    for (int i = 0; i < order; ++i) g->names_[i] = cycle_notation(perms[i]);
    g->build_inverses();
    return g;
}

GroupPtr Group::product(std::vector<GroupPtr> factors) {
    if (factors.empty()) throw std::invalid_argument("empty direct product");
    if (factors.size() == 1) return factors[0];
    auto g = std::shared_ptr<Group>(new Group());
    int order = 1;
    for (const auto& f : factors) order *= f->order();
    g->order_ = order;
    // factors[0] varies slowest
    std::vector<int> stride(factors.size());
    int s = 1;
    for (int i = (int)factors.size() - 1; i >= 0; --i) {
        stride[i] = s;
        s *= factors[i]->order();
    }
    auto decompose = [&](int idx) {
        std::vector<int> parts(factors.size());
        for (size_t f = 0; f < factors.size(); ++f) {
            parts[f] = idx / stride[f];
            idx %= stride[f];
        }
        return parts;
    };
    g->mul_.resize(order * order);
    for (int i = 0; i < order; ++i) {
        auto pi = decompose(i);
        for (int j = 0; j < order; ++j) {
            auto pj = decompose(j);
            int idx = 0;
            for (size_t f = 0; f < factors.size(); ++f)
                idx += factors[f]->mul(pi[f], pj[f]) * stride[f];
            g->mul_[i * order + j] = idx;
        }
    }
    g->names_.resize(order);
    for (int i = 0; i < order; ++i) {
        auto pi = decompose(i);
        std::string nm;
        for (size_t f = 0; f < factors.size(); ++f) {
            const std::string& part = factors[f]->element_name(pi[f]);
            if (part != "1") nm += part;
        }
        g->names_[i] = nm.empty() ? "1" : nm;
    }
    for (size_t f = 0; f < factors.size(); ++f)
        for (const auto& [nm, idx] : factors[f]->generators())
            g->gens_[nm] = idx * stride[f];
    g->name_ = factors[0]->name();
    for (size_t f = 1; f < factors.size(); ++f) g->name_ += "x" + factors[f]->name();
    g->build_inverses();
    return g;
}

GroupPtr Group::parse(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : name) {
        if (c == 'x' || c == 'X') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace((unsigned char)c)) {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);

    auto parse_atom = [](const std::string& s, const std::string& gen) -> GroupPtr {
        if (s.size() < 2) throw std::invalid_argument("unrecognized group: " + s);
        if (s[0] == 'C' || s[0] == 'c') return cyclic(std::stoi(s.substr(1)), gen);
        if (s[0] == 'S' || s[0] == 's') return symmetric(std::stoi(s.substr(1)));
        throw std::invalid_argument("unrecognized group: " + s);
    };

    if (parts.size() == 1) return parse_atom(parts[0], "a");

    // generator names per named position (leftmost first)
    std::vector<std::string> gen_names;
    bool all_c2 = true;
    for (const auto& p : parts)
        if (p != "C2" && p != "c2") all_c2 = false;
    if (parts.size() == 2 && (parts[0] == "C3" || parts[0] == "c3") &&
        (parts[1] == "C3" || parts[1] == "c3")) {
        gen_names = {"g", "h"};
    } else if (all_c2) {
        static const char* ltrs[] = {"a", "b", "c", "d"};
        for (size_t i = 0; i < parts.size() && i < 4; ++i) gen_names.push_back(ltrs[i]);
    } else {
        static const char* ltrs[] = {"a", "h", "k", "l"};
        for (size_t i = 0; i < parts.size() && i < 4; ++i) gen_names.push_back(ltrs[i]);
    }
    if (gen_names.size() != parts.size())
        throw std::invalid_argument("too many direct factors: " + name);

    // rightmost-named factor is the slowest index
    std::vector<GroupPtr> factors;
    for (int i = (int)parts.size() - 1; i >= 0; --i)
        factors.push_back(parse_atom(parts[i], gen_names[i]));
    auto g = product(std::move(factors));
    // keep the user-facing name
    auto mutable_g = std::const_pointer_cast<Group>(g);
    std::string nm = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) nm += "x" + parts[i];
    mutable_g->name_ = nm;
    return g;
}

bool Group::is_abelian() const {
    for (int i = 0; i < order_; ++i)
        for (int j = i + 1; j < order_; ++j)
            if (mul(i, j) != mul(j, i)) return false;
    return true;
}

bool Group::same(const Group& o) const {
    return order_ == o.order_ && mul_ == o.mul_ && names_ == o.names_;
}

GroupElement g_mul(const GroupElement& x, const GroupElement& y) {
    if (!x.group || !y.group || !x.group->same(*y.group))
        throw group_mismatch_error("elements of distinct groups");
    return {x.group, x.group->mul(x.index, y.index)};
}

GroupElement g_inv(const GroupElement& x) { return {x.group, x.group->inverse(x.index)}; }

std::vector<GroupElement> listing(const GroupPtr& group) {
    std::vector<GroupElement> out;
    out.reserve(group->order());
    for (int i = 0; i < group->order(); ++i) out.push_back({group, i});
    return out;
}

}  // namespace grconv
