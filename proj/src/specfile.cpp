#include "grconv/specfile.hpp"

#include <fstream>
#include <sstream>

namespace grconv {

namespace {

// ---------------------------------------------------------------------
// expression parser over LaurentPoly values
// ---------------------------------------------------------------------

struct Token {
    enum Kind { number, ident, op, end } kind = end;
    std::string text;
    long long value = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && isspace((unsigned char)s_[pos_])) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::end, "", 0};
            return;
        }
        char c = s_[pos_];
        if (isdigit((unsigned char)c)) {
            size_t start = pos_;
            while (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) ++pos_;
            tok_ = {Token::number, s_.substr(start, pos_ - start), 0};
            tok_.value = std::stoll(tok_.text);
            return;
        }
        if (isalpha((unsigned char)c) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) ++pos_;
            tok_ = {Token::ident, s_.substr(start, pos_ - start), 0};
            return;
        }
        tok_ = {Token::op, std::string(1, c), 0};
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    Token tok_;
};

class ExprParser {
public:
    ExprParser(const std::string& text, const GroupPtr& g, const FieldPtr& f,
               const std::vector<std::pair<std::string, GroupRingElem>>& elements,
               const LaurentPoly* word, const std::string& word_name)
        : lex_(text), g_(g), f_(f), elements_(elements), word_(word), word_name_(word_name) {}

    LaurentPoly parse() {
        LaurentPoly v = expr();
        if (lex_.peek().kind != Token::end) fail("trailing input starting at '" + lex_.peek().text + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

    LaurentPoly expr() {
        LaurentPoly v = term();
        while (lex_.peek().kind == Token::op && (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            std::string op = lex_.take().text;
            LaurentPoly rhs = term();
            v = op == "+" ? v + rhs : v - rhs;
        }
        return v;
    }

    bool starts_factor() const {
        const Token& t = lex_.peek();
        return t.kind == Token::number || t.kind == Token::ident ||
               (t.kind == Token::op && t.text == "(");
    }

    LaurentPoly term() {
        LaurentPoly v = factor();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::op && (t.text == "*" || t.text == "/")) {
                std::string op = lex_.take().text;
                LaurentPoly rhs = factor();
                v = op == "*" ? v * rhs : divide(v, rhs);
            } else if (starts_factor()) {
                v = v * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return v;
    }

    LaurentPoly divide(const LaurentPoly& a, const LaurentPoly& b) {
        // only division by a nonzero scalar constant
        if (b.is_zero()) fail("division by zero");
        if (b.terms().size() != 1 || b.terms().begin()->first != 0)
            fail("division only by constant scalars");
        const GroupRingElem& c = b.terms().begin()->second;
        for (int i = 1; i < g_->order(); ++i)
            if (!c.coeff(i).is_zero()) fail("division only by constant scalars");
        FieldElement inv = field_inv(c.coeff(0));
        LaurentPoly out(a.group(), a.field());
        for (const auto& [e, ce] : a.terms()) out.set_coeff(e, inv * ce);
        return out;
    }

    LaurentPoly factor() {
        LaurentPoly v = primary();
        while (lex_.peek().kind == Token::op && lex_.peek().text == "^") {
            lex_.take();
            long long e = exponent();
            v = power(v, e);
        }
        return v;
    }

    long long exponent() {
        bool neg = false;
        bool paren = false;
        if (lex_.peek().kind == Token::op && lex_.peek().text == "(") {
            lex_.take();
            paren = true;
        }
        if (lex_.peek().kind == Token::op && lex_.peek().text == "-") {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Token::number) fail("expected integer exponent");
        long long e = lex_.take().value;
        if (paren) {
            if (!(lex_.peek().kind == Token::op && lex_.peek().text == ")")) fail("expected ')'");
            lex_.take();
        }
        return neg ? -e : e;
    }

    LaurentPoly power(const LaurentPoly& v, long long e) {
        if (e >= 0) return lp_pow(v, e);
        // negative powers: invertible monomials only (z^k, group elements,
        // nonzero scalars and their products)
        if (v.terms().size() != 1) fail("negative power of a non-monomial");
        int exp = v.terms().begin()->first;
        const GroupRingElem& c = v.terms().begin()->second;
        auto support = c.support();
        if (support.size() != 1) fail("negative power of a non-monomial");
        int gi = support[0];
        FieldElement coeff = c.coeff(gi);
        GroupRingElem cinv =
            GroupRingElem::monomial(g_, f_, g_->inverse(gi), field_inv(coeff));
        LaurentPoly inv = LaurentPoly::term(cinv, -exp);
        return lp_pow(inv, -e);
    }

    LaurentPoly constant(const FieldElement& c) {
        return LaurentPoly::term(GroupRingElem::monomial(g_, f_, 0, c), 0);
    }

    LaurentPoly primary() {
        Token t = lex_.take();
        if (t.kind == Token::number) return constant(f_->from_integer(t.value));
        if (t.kind == Token::op && t.text == "(") {
            LaurentPoly v = expr();
            if (!(lex_.peek().kind == Token::op && lex_.peek().text == ")")) fail("expected ')'");
            lex_.take();
            return v;
        }
        if (t.kind == Token::op && t.text == "-") return LaurentPoly::zero(g_, f_) - factor();
        if (t.kind != Token::ident) fail("unexpected token '" + t.text + "'");

        // resolution order: declared names, word, group generators, field
        // generator aliases, the Laurent variable z
        for (const auto& [nm, el] : elements_)
            if (nm == t.text) return LaurentPoly::term(el, 0);
        if (word_ && t.text == word_name_) return *word_;
        auto git = g_->generators().find(t.text);
        if (git != g_->generators().end())
            return LaurentPoly::term(GroupRingElem::monomial(g_, f_, git->second, f_->one()), 0);
        if (t.text == "omega" || t.text == "zeta" ||
            (t.text == "w" && f_->is_finite() && f_->extension_degree() > 1))
            return constant(f_->generator());
        if (t.text == "z")
            return LaurentPoly::term(GroupRingElem::one(g_, f_), 1);
        fail("unknown name '" + t.text + "'");
    }

    Lexer lex_;
    GroupPtr g_;
    FieldPtr f_;
    const std::vector<std::pair<std::string, GroupRingElem>>& elements_;
    const LaurentPoly* word_;
    std::string word_name_;
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(std::stoi(cur));
            cur.clear();
        }
    };
    for (char c : s) {
        if (c == ',' || isspace((unsigned char)c))
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return out;
}

std::vector<std::string> parse_name_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    };
    for (char c : s) {
        if (c == ',' || isspace((unsigned char)c))
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return out;
}

bool is_coeff_list(const std::string& s) {
    // "0,1,1,1" style: digits, fractions, signs and commas only
    bool has_comma = false;
    for (char c : s) {
        if (c == ',') has_comma = true;
        if (!(isdigit((unsigned char)c) || c == ',' || c == '-' || c == '/' ||
              isspace((unsigned char)c)))
            return false;
    }
    return has_comma;
}

GroupRingElem element_from_coeff_list(const GroupPtr& g, const FieldPtr& f, const std::string& s) {
    std::vector<std::string> parts;  // split on commas, entries may be fractions
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace((unsigned char)c)) {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if ((int)parts.size() != g->order())
        throw std::invalid_argument("coefficient list length " + std::to_string(parts.size()) +
                                    " != |G| = " + std::to_string(g->order()));
    GroupRingElem e(g, f);
    for (int i = 0; i < g->order(); ++i) {
        const std::string& p = parts[i];
        auto slash = p.find('/');
        FieldElement v;
        if (slash == std::string::npos) {
            v = f->from_integer(std::stoll(p));
        } else {
            if (f->is_finite()) {
                v = f->from_integer(std::stoll(p.substr(0, slash))) *
                    field_inv(f->from_integer(std::stoll(p.substr(slash + 1))));
            } else {
                v = f->from_rationals(
                    {Rational(std::stoll(p.substr(0, slash)), std::stoll(p.substr(slash + 1)))});
            }
        }
        e.set_coeff(i, v);
    }
    return e;
}

}  // namespace

const GroupRingElem* CodeSpecFile::element(const std::string& name) const {
    for (const auto& [nm, el] : elements)
        if (nm == name) return &el;
    return nullptr;
}

LaurentPoly eval_expression(const std::string& text, const GroupPtr& group, const FieldPtr& field,
                            const std::vector<std::pair<std::string, GroupRingElem>>& elements,
                            const LaurentPoly* word, const std::string& word_name) {
    ExprParser p(text, group, field, elements, word, word_name);
    return p.parse();
}

CodeSpecFile parse_spec_text(const std::string& text, const std::string& source_name) {
    CodeSpecFile spec;
    spec.source_name = source_name;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    std::vector<long long> modulus;
    std::string pending_field;
    std::string pair_value;

    auto need_ring = [&](int ln) {
        if (!spec.field || !spec.group)
            throw spec_parse_error(source_name, ln, "field and group must be declared first");
    };

    while (std::getline(is, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // trim
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos) throw spec_parse_error(source_name, line_no, "expected key = value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [](std::string s) {
            size_t b2 = s.find_first_not_of(" \t\"");
            if (b2 == std::string::npos) return std::string();
            size_t e2 = s.find_last_not_of(" \t\"");
            return s.substr(b2, e2 - b2 + 1);
        };
        key = trim(key);
        value = trim(value);
        try {
            if (key == "field") {
                pending_field = value;
            } else if (key == "modulus") {
                std::string v = value;
                for (char& c : v)
                    if (c == '[' || c == ']') c = ' ';
                for (int x : parse_int_list(v)) modulus.push_back(x);
            } else if (key == "group") {
                spec.group = Group::parse(value);
            } else if (key == "rows") {
                spec.rows = parse_int_list(value);
            } else if (key == "t") {
                spec.declared_t = std::stoi(value);
            } else if (key == "specialize") {
                spec.specialize = std::stoll(value);
            } else if (key == "check_family") {
                spec.family_check = parse_name_list(value);
            } else if (key == "analyses") {
                spec.analyses = parse_name_list(value);
            } else if (key == "pair") {
                pair_value = value;
            } else if (key == "w") {
                if (!spec.field && !pending_field.empty()) spec.field = Field::parse(pending_field, modulus);
                need_ring(line_no);
                if (spec.has_word) throw spec_parse_error(source_name, line_no, "duplicate word definition");
                spec.word = eval_expression(value, spec.group, spec.field, spec.elements);
                spec.has_word = true;
            } else {
                // element definition
                if (!spec.field && !pending_field.empty()) spec.field = Field::parse(pending_field, modulus);
                need_ring(line_no);
                if (spec.element(key))
                    throw spec_parse_error(source_name, line_no, "duplicate element '" + key + "'");
                GroupRingElem el(spec.group, spec.field);
                if (is_coeff_list(value)) {
                    el = element_from_coeff_list(spec.group, spec.field, value);
                } else {
                    LaurentPoly v = eval_expression(value, spec.group, spec.field, spec.elements);
                    for (const auto& [ex, c] : v.terms())
                        if (ex != 0)
                            throw spec_parse_error(source_name, line_no,
                                                   "element '" + key + "' must not involve z");
                    el = v.coeff(0);
                }
                spec.elements.emplace_back(key, el);
            }
        } catch (const spec_parse_error&) {
            throw;
        } catch (const std::exception& ex) {
            throw spec_parse_error(source_name, line_no, ex.what());
        }
    }

    if (!spec.field && !pending_field.empty()) spec.field = Field::parse(pending_field, modulus);
    if (!spec.field) throw spec_parse_error(source_name, line_no, "missing field declaration");
    if (!spec.group) throw spec_parse_error(source_name, line_no, "missing group declaration");
    if (!spec.has_word && spec.family_check.empty())
        throw spec_parse_error(source_name, line_no, "missing word definition (key 'w')");

    if (spec.has_word) {
        if (pair_value.empty() || pair_value == "self") {
            spec.pair = spec.word;
            spec.pair_rule = "self";
        } else if (pair_value == "reverse") {
            spec.pair = spec.word.reversed();
            spec.pair_rule = "reverse";
        } else if (pair_value.rfind("power", 0) == 0) {
            long long e = std::stoll(pair_value.substr(5));
            spec.pair = lp_pow(spec.word, e);
            spec.pair_rule = pair_value;
        } else {
            spec.pair =
                eval_expression(pair_value, spec.group, spec.field, spec.elements, &spec.word, "w");
            spec.pair_rule = pair_value;
        }
    }
    return spec;
}

CodeSpecFile parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str(), path);
}

ConvCode build_from_spec(const CodeSpecFile& spec) {
    if (!spec.has_word) throw std::invalid_argument("spec file has no word definition");
    if (spec.rows.empty()) throw std::invalid_argument("spec file has no row set");
    auto t = is_unit_pair(spec.word, spec.pair);
    if (!t) {
        LaurentPoly residue = spec.word * spec.pair;
        throw std::invalid_argument("unit verification failed: w * pair = " + residue.str());
    }
    if (spec.declared_t && *spec.declared_t != *t)
        throw std::invalid_argument("declared unit position t=" + std::to_string(*spec.declared_t) +
                                    " but the product is z^" + std::to_string(*t));
    ConvCode code = from_unit_pair(spec.word, spec.pair, spec.rows, spec.source_name);
    code.specialization_prime = spec.specialize;
    return code;
}

}  // namespace grconv
