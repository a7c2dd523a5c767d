#ifndef MTC_IO_HPP
#define MTC_IO_HPP

#include <json.hpp>

#include <fstream>
#include <string>

#include "mtc/modular_data.hpp"

namespace mtc {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& require_field(const json& doc, const char* field) {
    if (!doc.contains(field))
        throw ParseError(std::string("missing field \"") + field + "\"");
    return doc.at(field);
}

inline double parse_decimal(const json& node, const std::string& where) {
    if (node.is_number())
        return node.get<double>();
    if (node.is_string()) {
        try {
            size_t used = 0;
            const std::string text = node.get<std::string>();
            const double v = std::stod(text, &used);
            if (used != text.size())
                throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception& e) {
            throw ParseError("bad decimal at " + where + ": " + e.what());
        }
    }
    throw ParseError("expected decimal string at " + where);
}

} // namespace detail

/// Document schema:
///   { "name": str, "labels": [str], "theta": ["p/q", ...],
///     "S": [[[re, im], ...]], "tol": number (optional) }
/// Row/column order follows "labels"; label 0 must be the unit.
inline ModularData load_modular_data(const json& doc) {
    if (!doc.is_object())
        throw ParseError("modular data document must be a JSON object");
    ModularData md;
    md.name = detail::require_field(doc, "name").get<std::string>();

    const json& labels = detail::require_field(doc, "labels");
    if (!labels.is_array() || labels.empty())
        throw ParseError("field \"labels\" must be a non-empty array");
    for (const auto& l : labels)
        md.labels.push_back(l.get<std::string>());
    const int n = md.size();

    const json& theta = detail::require_field(doc, "theta");
    if (!theta.is_array() || static_cast<int>(theta.size()) != n)
        throw ParseError("field \"theta\" must list one exponent per label");
    for (int i = 0; i < n; ++i) {
        try {
            md.theta.push_back(RootOfUnity::parse(theta[static_cast<size_t>(i)].get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError("field \"theta\"[" + std::to_string(i) + "]: " + e.what());
        }
    }

    const json& s = detail::require_field(doc, "S");
    if (!s.is_array() || static_cast<int>(s.size()) != n)
        throw ParseError("field \"S\" must be an " + std::to_string(n) + "-row matrix");
    md.s.resize(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = s[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("field \"S\" row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j) {
            const json& cell = row[static_cast<size_t>(j)];
            const std::string where =
                "\"S\"[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            if (!cell.is_array() || cell.size() != 2)
                throw ParseError(where + " must be a [re, im] pair");
            md.s(i, j) = {detail::parse_decimal(cell[0], where),
                          detail::parse_decimal(cell[1], where)};
        }
    }

    if (doc.contains("tol")) {
        md.tol = doc.at("tol").get<double>();
        if (!(md.tol > 0))
            throw ParseError("field \"tol\" must be positive");
    }

    if (!md.theta[0].is_one())
        throw DataError("unit twist violated: theta_0 = " + md.theta[0].str() +
                        " but the tensor unit must have trivial twist");
    return md;
}

inline json save_modular_data(const ModularData& md) {
    md.require_consistent_shape();
    json doc;
    doc["name"] = md.name;
    doc["labels"] = md.labels;
    json theta = json::array();
    for (const auto& t : md.theta)
        theta.push_back(t.str());
    doc["theta"] = std::move(theta);
    json s = json::array();
    for (int i = 0; i < md.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < md.size(); ++j)
            row.push_back(json::array({format_decimal(md.s(i, j).real()),
                                       format_decimal(md.s(i, j).imag())}));
        s.push_back(std::move(row));
    }
    doc["S"] = std::move(s);
    doc["tol"] = md.tol;
    return doc;
}

inline ModularData load_modular_data_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return load_modular_data(doc);
}

inline void save_modular_data_file(const ModularData& md, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << save_modular_data(md).dump(2) << '\n';
}

} // namespace mtc

#endif
