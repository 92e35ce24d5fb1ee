#include "sfd/emit.hpp"

#include <sstream>

namespace sfd {

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "md") return OutputFormat::md;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw Error("unknown format '" + s + "' (expected md, csv or json)");
}

std::string polynomial_str(const IntPolynomial& p) { return p.str(); }

std::string emit_table(const FakeDegreeTable& table, OutputFormat fmt, bool half) {
    int top = half ? table.n_reflections / 2 : table.n_reflections;
    std::ostringstream out;
    switch (fmt) {
        case OutputFormat::csv: {
            for (size_t c = 0; c < table.rows.size(); ++c) {
                if (c) out << ',';
                out << csv_quote(table.rows[c].label);
            }
            out << '\n';
            for (int k = 0; k <= top; ++k) {
                for (size_t c = 0; c < table.rows.size(); ++c) {
                    if (c) out << ',';
                    out << table.rows[c].P.coeff(k).get_str();
                }
                out << '\n';
            }
            break;
        }
        case OutputFormat::md: {
            out << "| deg |";
            for (const auto& row : table.rows) out << ' ' << row.label << " |";
            out << "\n|---|";
            for (size_t c = 0; c < table.rows.size(); ++c) out << "---|";
            out << '\n';
            for (int k = 0; k <= top; ++k) {
                out << "| " << k << " |";
                for (const auto& row : table.rows) out << ' ' << row.P.coeff(k).get_str() << " |";
                out << '\n';
            }
            break;
        }
        case OutputFormat::json: {
            out << "{\n  \"type\": " << json_quote(table.type.str());
            out << ",\n  \"N\": " << table.n_reflections;
            out << ",\n  \"degrees\": [";
            for (size_t i = 0; i < table.degrees.size(); ++i)
                out << (i ? ", " : "") << table.degrees[i];
            out << "]";
            out << ",\n  \"half\": " << (half ? "true" : "false");
            out << ",\n  \"q_factor\": " << json_quote(table.q_factor.get_str());
            out << ",\n  \"characters\": [";
            for (size_t c = 0; c < table.rows.size(); ++c) {
                const auto& row = table.rows[c];
                out << (c ? ",\n    {" : "\n    {");
                out << "\"label\": " << json_quote(row.label);
                out << ", \"type\": " << json_quote(std::string(1, row.type));
                out << ", \"degree\": " << row.degree;
                out << ", \"coefficients\": [";
                for (int k = 0; k <= top; ++k)
                    out << (k ? ", " : "") << row.P.coeff(k).get_str();
                out << "]}";
            }
            out << "\n  ]\n}\n";
            break;
        }
    }
    return out.str();
}

std::string emit_molien(const FakeDegreeTable& table, OutputFormat fmt) {
    std::ostringstream out;
    int top = table.n_reflections + 1;
    switch (fmt) {
        case OutputFormat::csv: {
            for (size_t c = 0; c < table.rows.size(); ++c) {
                if (c) out << ',';
                out << csv_quote(table.rows[c].label);
            }
            out << '\n';
            for (int k = 0; k <= top; ++k) {
                for (size_t c = 0; c < table.rows.size(); ++c) {
                    if (c) out << ',';
                    out << table.rows[c].H[k].get_str();
                }
                out << '\n';
            }
            break;
        }
        case OutputFormat::md: {
            out << "| deg |";
            for (const auto& row : table.rows) out << ' ' << row.label << " |";
            out << "\n|---|";
            for (size_t c = 0; c < table.rows.size(); ++c) out << "---|";
            out << '\n';
            for (int k = 0; k <= top; ++k) {
                out << "| " << k << " |";
                for (const auto& row : table.rows) out << ' ' << row.H[k].get_str() << " |";
                out << '\n';
            }
            break;
        }
        case OutputFormat::json: {
            out << "{\n  \"type\": " << json_quote(table.type.str());
            out << ",\n  \"order\": " << top;
            out << ",\n  \"characters\": [";
            for (size_t c = 0; c < table.rows.size(); ++c) {
                const auto& row = table.rows[c];
                out << (c ? ",\n    {" : "\n    {");
                out << "\"label\": " << json_quote(row.label);
                out << ", \"H\": [";
                for (int k = 0; k <= top; ++k) out << (k ? ", " : "") << row.H[k].get_str();
                out << "]}";
            }
            out << "\n  ]\n}\n";
            break;
        }
    }
    return out.str();
}

std::string emit_chartable(const SpinCharacterTable& st, const Classes& classes,
                           const FakeDegreeTable& fd, OutputFormat fmt) {
    std::ostringstream out;
    auto class_name = [&](int s) {
        int wc = s < static_cast<int>(st.even_split.size())
                     ? st.even_split[s]
                     : st.odd_split[s - st.even_split.size()];
        std::string tag = classes.list[wc].parity > 0 ? "even" : "odd";
        return "c" + std::to_string(wc) + ":" + tag;
    };
    int ns = st.num_split();
    switch (fmt) {
        case OutputFormat::csv: {
            out << "label,type";
            for (int s = 0; s < ns; ++s) out << ',' << csv_quote(class_name(s));
            out << '\n';
            for (const auto& row : fd.rows) {
                const auto& src = st.rows[row.spin_row];
                out << csv_quote(row.label) << ',' << src.type;
                for (int s = 0; s < ns; ++s) out << ',' << csv_quote(field_literal(src.values[s]));
                out << '\n';
            }
            break;
        }
        case OutputFormat::md: {
            out << "| label | type |";
            for (int s = 0; s < ns; ++s) out << ' ' << class_name(s) << " |";
            out << "\n|---|---|";
            for (int s = 0; s < ns; ++s) out << "---|";
            out << '\n';
            for (const auto& row : fd.rows) {
                const auto& src = st.rows[row.spin_row];
                out << "| " << row.label << " | " << src.type << " |";
                for (int s = 0; s < ns; ++s) out << ' ' << field_literal(src.values[s]) << " |";
                out << '\n';
            }
            break;
        }
        case OutputFormat::json: {
            out << "{\n  \"type\": " << json_quote(fd.type.str());
            out << ",\n  \"classes\": [";
            for (int s = 0; s < ns; ++s) out << (s ? ", " : "") << json_quote(class_name(s));
            out << "]";
            out << ",\n  \"characters\": [";
            for (size_t c = 0; c < fd.rows.size(); ++c) {
                const auto& row = fd.rows[c];
                const auto& src = st.rows[row.spin_row];
                out << (c ? ",\n    {" : "\n    {");
                out << "\"label\": " << json_quote(row.label);
                out << ", \"type\": " << json_quote(std::string(1, src.type));
                out << ", \"values\": [";
                for (int s = 0; s < ns; ++s)
                    out << (s ? ", " : "") << json_quote(field_literal(src.values[s]));
                out << "]}";
            }
            out << "\n  ]\n}\n";
            break;
        }
    }
    return out.str();
}

}  // namespace sfd
