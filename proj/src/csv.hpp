#pragma once

// Minimal RFC-4180 style reader/writer: comma separator, optional double
// quotes, "" escapes, CRLF or LF line ends. Blank lines and lines starting
// with '#' are skipped. Unquoted fields are trimmed.

#include <string>
#include <string_view>
#include <vector>

#include "fleetopt/error.hpp"

namespace fleetopt::csv {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::vector<std::string>> parse(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::size_t i = 0;
    std::size_t line_no = 1;
    if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
    while (i < text.size()) {
        // skip blank and comment lines
        std::size_t eol = text.find('\n', i);
        std::string_view line = text.substr(i, eol == std::string_view::npos ? text.size() - i : eol - i);
        std::string t = trim(line);
        if (t.empty() || t == "\r" || t[0] == '#') {
            if (eol == std::string_view::npos) break;
            i = eol + 1;
            ++line_no;
            continue;
        }
        std::vector<std::string> row;
        std::string field;
        bool quoted = false, was_quoted = false;
        for (;;) {
            if (i >= text.size()) {
                if (quoted) throw ParseError("csv: unterminated quote starting on line " + std::to_string(line_no));
                row.push_back(was_quoted ? field : trim(field));
                break;
            }
            char c = text[i++];
            if (quoted) {
                if (c == '"') {
                    if (i < text.size() && text[i] == '"') {
                        field.push_back('"');
                        ++i;
                    } else {
                        quoted = false;
                    }
                } else {
                    if (c == '\n') ++line_no;
                    field.push_back(c);
                }
                continue;
            }
            if (c == '"' && trim(field).empty()) {
                quoted = true;
                was_quoted = true;
                field.clear();
            } else if (c == ',') {
                row.push_back(was_quoted ? field : trim(field));
                field.clear();
                was_quoted = false;
            } else if (c == '\n' || c == '\r') {
                if (c == '\r' && i < text.size() && text[i] == '\n') ++i;
                row.push_back(was_quoted ? field : trim(field));
                ++line_no;
                break;
            } else {
                field.push_back(c);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string escape(const std::string& f) {
    if (f.find_first_of(",\"\n\r") == std::string::npos) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string write(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out.push_back(',');
            out += escape(row[j]);
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace fleetopt::csv
