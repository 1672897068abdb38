#pragma once

#include "grconv/code.hpp"

namespace grconv {

struct spec_parse_error : std::runtime_error {
    spec_parse_error(const std::string& file, int line, const std::string& msg)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg), line_no(line) {}
    int line_no;
};

/// Parsed code-spec file: field and group declarations, named group ring
/// elements, one word definition, a pairing rule, a row set, and optional
/// analysis hints. Names must be declared before use.
struct CodeSpecFile {
    FieldPtr field;
    GroupPtr group;
    std::vector<std::pair<std::string, GroupRingElem>> elements;
    LaurentPoly word;
    bool has_word = false;
    LaurentPoly pair;  // resolved partner g(z)
    std::string pair_rule = "self";
    std::vector<int> rows;
    std::optional<int> declared_t;
    std::optional<long long> specialize;
    std::vector<std::string> family_check;  // names to verify as an orthogonal family
    std::vector<std::string> analyses;
    std::string source_name;

    const GroupRingElem* element(const std::string& name) const;
};

CodeSpecFile parse_spec_text(const std::string& text, const std::string& source_name = "<memory>");
CodeSpecFile parse_spec_file(const std::string& path);

/// from_unit_pair on the spec's word, pair and rows; checks declared t.
ConvCode build_from_spec(const CodeSpecFile& spec);

/// Expression evaluator used by the spec parser: sums, products, powers,
/// fractions of declared names, group generators, the field generator
/// (omega / zeta / w when unshadowed) and the Laurent variable z.
LaurentPoly eval_expression(const std::string& text, const GroupPtr& group, const FieldPtr& field,
                            const std::vector<std::pair<std::string, GroupRingElem>>& elements,
                            const LaurentPoly* word = nullptr, const std::string& word_name = "w");

}  // namespace grconv
