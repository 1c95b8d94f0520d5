#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tp3/classification.hpp"

namespace tp3 {

struct Document {
    TriBracket bracket;
    std::optional<CommProduct> product;
    std::map<std::string, std::string> meta;

    friend bool operator==(const Document&, const Document&) = default;
};

// Throws ParseError naming the offending field or the JSON position.
Document parse_document(std::string_view text);

// Canonical form: sorted keys, no whitespace, reduced rationals, zero
// entries omitted, entries ordered by their index keys.
std::string serialize_document(const Document& doc);
std::string serialize_document(const TriBracket& b, const std::optional<CommProduct>& p = std::nullopt);

Matrix parse_matrix(std::string_view text);
std::string serialize_matrix(const Matrix& m);

std::string serialize_certificate(const Certificate& c);

}  // namespace tp3
