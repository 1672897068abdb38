#include "grconv/serialize.hpp"

#include <sstream>

namespace grconv {

namespace {

void write_poly_matrix(std::ostream& os, const std::string& tag, const PolyMatrix& m) {
    os << tag << " exps";
    for (const auto& [e, mat] : m.terms()) os << " " << e;
    os << "\n";
    for (const auto& [e, mat] : m.terms()) {
        os << tag << " " << e << "\n";
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                if (j) os << " ";
                os << mat.at(i, j).machine_str();
            }
            os << "\n";
        }
    }
}

FieldElement parse_element(const FieldPtr& f, const std::string& tok) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : tok) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (f->is_finite()) {
        std::vector<long long> cs;
        for (const auto& p : parts) cs.push_back(std::stoll(p));
        return f->from_coeffs(std::move(cs));
    }
    std::vector<Rational> cs;
    for (const auto& p : parts) {
        auto slash = p.find('/');
        if (slash == std::string::npos)
            cs.push_back(Rational(std::stoll(p)));
        else
            cs.push_back(Rational(std::stoll(p.substr(0, slash)), std::stoll(p.substr(slash + 1))));
    }
    return f->from_rationals(std::move(cs));
}

}  // namespace

std::string serialize_code(const ConvCode& code) {
    std::ostringstream os;
    os << "grconv-code 1\n";
    os << "n " << code.n << "\n";
    os << "k " << code.k << "\n";
    os << "hcols " << code.H.cols() << "\n";
    os << "field " << code.field->name() << "\n";
    if (code.field->is_finite() && code.field->extension_degree() > 1) {
        os << "modulus";
        for (long long c : code.field->modulus()) os << " " << c;
        os << "\n";
    }
    os << "t " << code.t << "\n";
    os << "h_shift " << code.h_shift << "\n";
    os << "rows";
    for (int r : code.rows) os << " " << r;
    os << "\n";
    if (code.specialization_prime) os << "specialize " << *code.specialization_prime << "\n";
    if (!code.provenance.empty()) os << "provenance " << code.provenance << "\n";
    write_poly_matrix(os, "G", code.G);
    write_poly_matrix(os, "H", code.H);
    os << "end\n";
    return os.str();
}

ConvCode parse_code(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    ConvCode code;
    std::vector<long long> modulus;
    std::string field_name;
    int hcols = -1;
    int pending_rows = 0, pending_cols = 0;

    auto ensure_field = [&]() {
        if (!code.field) {
            code.field = Field::parse(field_name, modulus);
        }
    };

    PolyMatrix* target = nullptr;
    int target_exp = 0;
    int row_fill = 0;

    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (target && row_fill < pending_rows && key != "end") {
            // row of matrix coefficients; first token already consumed
            Mat m = target->coeff(target_exp);
            std::vector<std::string> toks = {key};
            std::string tok;
            while (ls >> tok) toks.push_back(tok);
            if ((int)toks.size() != pending_cols) throw std::invalid_argument("bad matrix row width");
            for (int j = 0; j < pending_cols; ++j) m.at(row_fill, j) = parse_element(code.field, toks[j]);
            target->set_coeff(target_exp, m);
            if (++row_fill == pending_rows) target = nullptr;
            continue;
        }
        if (key == "grconv-code") {
            continue;
        } else if (key == "n") {
            ls >> code.n;
        } else if (key == "k") {
            ls >> code.k;
        } else if (key == "hcols") {
            ls >> hcols;
        } else if (key == "field") {
            ls >> field_name;
        } else if (key == "modulus") {
            long long c;
            while (ls >> c) modulus.push_back(c);
        } else if (key == "t") {
            ls >> code.t;
        } else if (key == "h_shift") {
            ls >> code.h_shift;
        } else if (key == "rows") {
            int r;
            while (ls >> r) code.rows.push_back(r);
        } else if (key == "specialize") {
            long long p;
            ls >> p;
            code.specialization_prime = p;
        } else if (key == "provenance") {
            std::string rest;
            std::getline(ls, rest);
            code.provenance = rest.empty() ? "" : rest.substr(1);
        } else if (key == "G" || key == "H") {
            ensure_field();
            std::string sub;
            ls >> sub;
            if (sub == "exps") {
                if (key == "G")
                    code.G = PolyMatrix(code.field, code.k, code.n);
                else
                    code.H = PolyMatrix(code.field, code.n,
                                        hcols >= 0 ? hcols : code.n - code.k);
                continue;
            }
            target = key == "G" ? &code.G : &code.H;
            target_exp = std::stoi(sub);
            pending_rows = target->rows();
            pending_cols = target->cols();
            row_fill = 0;
        } else if (key == "end") {
            break;
        } else {
            throw std::invalid_argument("unrecognized machine-format key: " + key);
        }
    }
    code.H_poly = code.H.shifted(code.h_shift);
    return code;
}

bool codes_equal(const ConvCode& a, const ConvCode& b) {
    return a.n == b.n && a.k == b.k && a.field->same(*b.field) && a.t == b.t &&
           a.h_shift == b.h_shift && a.rows == b.rows && a.G == b.G && a.H == b.H &&
           a.specialization_prime == b.specialization_prime;
}

}  // namespace grconv
