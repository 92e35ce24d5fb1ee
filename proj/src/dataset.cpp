#include "sfd/dataset.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "sfd/clifford.hpp"

namespace sfd {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// key=value with the value possibly empty
std::pair<std::string, std::string> kv(const std::string& tok, int lineno) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": expected key=value, got '" + tok +
                         "'");
    return {tok.substr(0, eq), tok.substr(eq + 1)};
}

std::vector<int> parse_word(const std::string& s, int rank, int lineno) {
    std::vector<int> letters;
    if (s.empty()) return letters;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": bad word entry '" + part + "'");
        int letter = std::stoi(part);
        if (letter < 1 || letter > rank)
            throw ParseError("line " + std::to_string(lineno) + ": generator index " + part +
                             " out of range 1.." + std::to_string(rank));
        letters.push_back(letter - 1);
    }
    return letters;
}

long permutation_order(const RootSystem& rs, const std::vector<int>& word) {
    int nroots = rs.num_roots();
    std::vector<int> perm(nroots);
    for (int r = 0; r < nroots; ++r) perm[r] = r;
    for (int i : word) {
        const auto& sp = rs.simple_perm(i);
        std::vector<int> next(nroots);
        for (int r = 0; r < nroots; ++r) next[r] = perm[sp[r]];
        perm = std::move(next);
    }
    std::vector<char> seen(nroots, 0);
    long order = 1;
    for (int r = 0; r < nroots; ++r) {
        if (seen[r]) continue;
        long len = 0;
        int c = r;
        while (!seen[c]) {
            seen[c] = 1;
            c = perm[c];
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

}  // namespace

int carter_node_count(const std::string& label) {
    if (label.empty() || label == "e" || label == "0" || label == "1") return 0;
    int total = 0;
    std::istringstream in(label);
    std::string comp;
    while (std::getline(in, comp, '+')) {
        size_t i = 0;
        int mult = 0;
        while (i < comp.size() && std::isdigit((unsigned char)comp[i]))
            mult = mult * 10 + (comp[i++] - '0');
        if (mult == 0) mult = 1;
        if (i >= comp.size() || comp[i] < 'A' || comp[i] > 'G')
            throw ParseError("bad Carter label component: '" + comp + "'");
        ++i;
        int rank = 0;
        while (i < comp.size() && std::isdigit((unsigned char)comp[i]))
            rank = rank * 10 + (comp[i++] - '0');
        if (rank == 0) throw ParseError("bad Carter label component: '" + comp + "'");
        // an optional suffix like (a1) names a different class, same node count
        total += mult * rank;
    }
    return total;
}

const ClassRecord* ClassDataset::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

ClassDataset parse_class_dataset(const std::string& text, const RootSystem& rs) {
    ClassDataset ds;
    ds.type = rs.type();
    bool have_type = false, have_order = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "weyl_type") {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": bad weyl_type record");
            CartanType t = CartanType::parse(toks[1]);
            if (!(t == rs.type()))
                throw ParseError("line " + std::to_string(lineno) + ": dataset type " + toks[1] +
                                 " does not match " + rs.type().str());
            have_type = true;
        } else if (toks[0] == "order") {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": bad order record");
            ds.group_order = Integer(toks[1]);
            have_order = true;
        } else if (toks[0] == "class") {
            ClassRecord rec;
            bool have_size = false, have_word = false, have_parity = false, have_split = false;
            for (size_t k = 1; k < toks.size(); ++k) {
                auto [key, value] = kv(toks[k], lineno);
                if (key == "name") {
                    rec.name = value;
                } else if (key == "size") {
                    rec.size = std::stol(value);
                    have_size = true;
                } else if (key == "word") {
                    rec.word = parse_word(value, rs.rank(), lineno);
                    have_word = true;
                } else if (key == "parity") {
                    if (value != "even" && value != "odd")
                        throw ParseError("line " + std::to_string(lineno) + ": bad parity '" +
                                         value + "'");
                    rec.parity = value == "even" ? 1 : -1;
                    have_parity = true;
                } else if (key == "split") {
                    if (value != "yes" && value != "no")
                        throw ParseError("line " + std::to_string(lineno) + ": bad split '" +
                                         value + "'");
                    rec.split = value == "yes";
                    have_split = true;
                } else if (key == "carter") {
                    rec.carter = value;
                } else {
                    throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key +
                                     "'");
                }
            }
            if (rec.name.empty() || !have_size || !have_word || !have_parity || !have_split)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": class record needs name, size, word, parity, split");
            ds.entries.push_back(std::move(rec));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + toks[0] +
                             "'");
        }
    }
    if (!have_type || !have_order) throw ParseError("dataset lacks weyl_type or order record");

    // semantic validation
    Integer size_sum = 0;
    std::map<std::string, int> names;
    for (auto& rec : ds.entries) {
        if (++names[rec.name] > 1) throw Error("duplicate class name " + rec.name);
        size_sum += rec.size;
        int word_parity = rec.word.size() % 2 ? -1 : 1;
        if (word_parity != rec.parity)
            throw Error("class " + rec.name + ": word of length " +
                        std::to_string(rec.word.size()) + " declared " +
                        (rec.parity > 0 ? "even" : "odd"));
        rec.charpoly = reflection_charpoly(rs, word_matrix(rs, rec.word));
        rec.order = permutation_order(rs, rec.word);
        Integer det_1px = rec.charpoly.eval(Integer(-1));
        if (rec.parity > 0 && !rec.split && det_1px != 0)
            throw Error("class " + rec.name +
                        " is declared even non-split but det(1+x) = " + det_1px.get_str());
        // word-level trace consistency: tr_B^2 = det(1+x), doubled in odd rank
        QuadField tr = basic_spin_trace_of(rs, lift_word(rs, rec.word));
        Rational expect(det_1px);
        if (rs.rank() % 2) expect *= 2;
        if (!(tr * tr == QuadField(expect)))
            throw Error("class " + rec.name + ": basic spin trace squared differs from det(1+x)");
        if (!rec.carter.empty()) {
            int nodes = carter_node_count(rec.carter);
            if ((nodes % 2 ? -1 : 1) != rec.parity)
                throw Error("class " + rec.name + ": Carter label " + rec.carter + " has " +
                            std::to_string(nodes) + " nodes but parity is " +
                            (rec.parity > 0 ? "even" : "odd"));
        }
    }
    if (ds.group_order != group_order(rs))
        throw Error("declared order " + ds.group_order.get_str() + " differs from |W| = " +
                    group_order(rs).get_str());
    if (size_sum != ds.group_order)
        throw Error("class sizes sum to " + size_sum.get_str() + ", expected " +
                    ds.group_order.get_str() + " (deficit " +
                    Integer(ds.group_order - size_sum).get_str() + ")");
    return ds;
}

ClassDataset load_class_dataset(const std::string& path, const RootSystem& rs) {
    std::ifstream in(path);
    if (!in) throw MissingDataset("dataset not found: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_class_dataset(buf.str(), rs);
}

SpinTableDataset parse_spin_table(const std::string& text) {
    SpinTableDataset ds;
    bool have_type = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "weyl_type") {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": bad weyl_type record");
            ds.type = CartanType::parse(toks[1]);
            have_type = true;
        } else if (toks[0] == "classes") {
            for (size_t k = 1; k < toks.size(); ++k) {
                size_t colon = toks[k].find(':');
                if (colon == std::string::npos)
                    throw ParseError("line " + std::to_string(lineno) + ": expected name:parity");
                std::string parity = toks[k].substr(colon + 1);
                if (parity != "even" && parity != "odd")
                    throw ParseError("line " + std::to_string(lineno) + ": bad parity tag '" +
                                     parity + "'");
                ds.class_names.push_back(toks[k].substr(0, colon));
                ds.class_parity.push_back(parity == "even" ? 1 : -1);
            }
        } else if (toks[0] == "char") {
            SpinTableRow row;
            std::string values;
            for (size_t k = 1; k < toks.size(); ++k) {
                auto [key, value] = kv(toks[k], lineno);
                if (key == "label") {
                    row.label = value;
                } else if (key == "type") {
                    if (value != "M" && value != "Q")
                        throw ParseError("line " + std::to_string(lineno) + ": bad type '" +
                                         value + "'");
                    row.type = value[0];
                } else if (key == "values") {
                    values = value;
                } else {
                    throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key +
                                     "'");
                }
            }
            if (row.label.empty() || values.empty())
                throw ParseError("line " + std::to_string(lineno) +
                                 ": char record needs label, type, values");
            std::istringstream vin(values);
            std::string lit;
            while (std::getline(vin, lit, ';')) row.values.push_back(parse_field_literal(lit));
            if (row.values.size() != ds.class_names.size())
                throw ParseError("line " + std::to_string(lineno) + ": " +
                                 std::to_string(row.values.size()) + " values for " +
                                 std::to_string(ds.class_names.size()) + " classes");
            ds.rows.push_back(std::move(row));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + toks[0] +
                             "'");
        }
    }
    if (!have_type || ds.class_names.empty()) throw ParseError("spin table lacks header records");
    return ds;
}

SpinTableDataset load_spin_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingDataset("dataset not found: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spin_table(buf.str());
}

std::string ValidationReport::str() const {
    if (findings.empty()) return "valid";
    std::string out;
    for (const auto& f : findings) out += f + "\n";
    return out;
}

ValidationReport validate_spin_table(const SpinTableDataset& ds, const ClassDataset& cds) {
    ValidationReport rep;
    if (!(ds.type == cds.type)) {
        rep.findings.push_back("type mismatch: spin table " + ds.type.str() + " vs classes " +
                               cds.type.str());
        return rep;
    }
    size_t n_even = 0, n_odd = 0;
    std::vector<const ClassRecord*> recs;
    for (size_t k = 0; k < ds.class_names.size(); ++k) {
        const ClassRecord* rec = cds.find(ds.class_names[k]);
        recs.push_back(rec);
        if (!rec) {
            rep.findings.push_back("unknown class name " + ds.class_names[k]);
            continue;
        }
        if (!rec->split)
            rep.findings.push_back("class " + rec->name + " is listed but not split");
        if (rec->parity != ds.class_parity[k])
            rep.findings.push_back("class " + rec->name + " parity tag mismatch");
        (ds.class_parity[k] > 0 ? n_even : n_odd)++;
    }
    for (const auto& rec : cds.entries)
        if (rec.split) {
            bool listed = false;
            for (const auto& n : ds.class_names) listed = listed || n == rec.name;
            if (!listed)
                rep.findings.push_back("split class " + rec.name + " missing from the table");
        }

    size_t nq = 0;
    for (const auto& row : ds.rows)
        if (row.type == 'Q') ++nq;
    if (ds.rows.size() != n_even)
        rep.findings.push_back("count recipe: " + std::to_string(ds.rows.size()) +
                               " rows for " + std::to_string(n_even) + " even split classes");
    if (nq != n_odd)
        rep.findings.push_back("count recipe: " + std::to_string(nq) + " type Q rows for " +
                               std::to_string(n_odd) + " odd split classes");

    for (const auto& row : ds.rows)
        for (size_t k = 0; k < row.values.size(); ++k)
            if (ds.class_parity[k] < 0 && !row.values[k].is_zero())
                rep.findings.push_back("row " + row.label + " has nonzero value on odd split class " +
                                       ds.class_names[k]);

    // Gram matrix with class-size weights: delta * (1 for M, 2 for Q)
    bool weights_ok = true;
    for (const auto* rec : recs) weights_ok = weights_ok && rec;
    if (weights_ok) {
        Rational order(cds.group_order);
        for (size_t a = 0; a < ds.rows.size(); ++a)
            for (size_t b = a; b < ds.rows.size(); ++b) {
                Cyclotomic acc(1);
                for (size_t k = 0; k < ds.class_names.size(); ++k) {
                    Rational weight = Rational(recs[k]->size) / order;
                    acc += ds.rows[a].values[k] * ds.rows[b].values[k].conj() *
                           Cyclotomic::from_rational(1, weight);
                }
                Rational expect = 0;
                if (a == b) expect = ds.rows[a].type == 'Q' ? 2 : 1;
                if (!(acc == Cyclotomic::from_rational(1, expect)))
                    rep.findings.push_back("orthogonality failed for rows (" + ds.rows[a].label +
                                           ", " + ds.rows[b].label + ")");
            }
    }
    return rep;
}

FakeDegreeTable fake_degrees_from_dataset(const SpinTableDataset& ds, const ClassDataset& cds,
                                          const RootSystem& rs) {
    ValidationReport rep = validate_spin_table(ds, cds);
    if (!rep.ok()) throw Error("spin table failed validation:\n" + rep.str());

    long w_order = mpz_get_si(cds.group_order.get_mpz_t());
    int n = rs.num_positive();
    int order = n + 1;

    // even split classes in table order, with traces from the class words
    std::vector<size_t> even_cols;
    std::vector<QuadField> traces;
    std::vector<const ClassRecord*> even_recs;
    for (size_t k = 0; k < ds.class_names.size(); ++k) {
        if (ds.class_parity[k] < 0) continue;
        const ClassRecord* rec = cds.find(ds.class_names[k]);
        even_cols.push_back(k);
        even_recs.push_back(rec);
        traces.push_back(basic_spin_trace_of(rs, lift_word(rs, rec->word)));
    }

    FakeDegreeTable table;
    table.type = rs.type();
    table.n_reflections = n;
    table.degrees = rs.degrees();

    int basic_pre = -1;
    for (size_t r = 0; r < ds.rows.size(); ++r) {
        const auto& src = ds.rows[r];
        std::vector<MolienTerm> terms;
        bool is_basic = true;
        for (size_t e = 0; e < even_cols.size(); ++e) {
            MolienTerm t;
            t.trace = traces[e];
            t.chi = real_chi_for_molien(src.values[even_cols[e]], t.trace);
            t.centralizer = w_order / even_recs[e]->size;
            t.det1mtx = even_recs[e]->charpoly;
            is_basic = is_basic &&
                       (src.values[even_cols[e]] == Cyclotomic::from_quadfield(t.trace));
            terms.push_back(std::move(t));
        }
        if (is_basic) {
            if (basic_pre >= 0) throw Error("two rows match the basic spin traces");
            basic_pre = static_cast<int>(r);
        }
        FakeDegreeRow row;
        row.label = src.label;
        row.type = src.type;
        try {
            auto h = molien_series(terms, order);
            row.P = fake_degree_from_series(h, table.degrees, n);
            row.H.assign(h.coeffs().begin(), h.coeffs().end());
        } catch (const Error& err) {
            throw Error("character " + src.label + ": " + err.what());
        }
        if (!palindrome_check(row.P, n))
            throw Error("character " + src.label + ": palindromicity failure");
        // graded degree = value at the identity class (the class of size 1)
        for (size_t e = 0; e < even_cols.size(); ++e)
            if (even_recs[e]->size == 1 && even_recs[e]->word.empty())
                row.degree =
                    to_integer(src.values[even_cols[e]].rational_part_checked()).get_si();
        row.ungraded_degree_a = row.type == 'Q' ? row.degree / 2 : row.degree;
        row.ungraded_degree_b = row.type == 'Q' ? row.degree - row.degree / 2 : -1;
        table.rows.push_back(std::move(row));
    }
    if (basic_pre < 0) throw Error("no row matches the basic spin traces");

    apply_layout(table, rs, basic_pre, /*relabel_canonical=*/false);
    return table;
}

std::string export_class_dataset(const Classes& classes, const ElementStore& store) {
    const RootSystem& rs = store.root_system();
    std::ostringstream out;
    out << "# conjugacy class dataset, generated\n";
    out << "weyl_type " << rs.type().str() << "\n";
    out << "order " << store.size() << "\n";
    for (size_t c = 0; c < classes.list.size(); ++c) {
        const auto& cls = classes.list[c];
        out << "class name=c" << c << " size=" << cls.size << " word=";
        auto word = store.word(cls.rep);
        for (size_t i = 0; i < word.size(); ++i) {
            if (i) out << ',';
            out << word[i] + 1;
        }
        out << " parity=" << (cls.parity > 0 ? "even" : "odd");
        if (!cls.split.has_value()) throw Error("splitness not computed before export");
        out << " split=" << (cls.split.value() ? "yes" : "no");
        if (cls.carter_label.has_value()) out << " carter=" << *cls.carter_label;
        out << "\n";
    }
    return out.str();
}

std::string export_spin_table(const SpinCharacterTable& st, const Classes& classes,
                              const FakeDegreeTable& fd) {
    std::ostringstream out;
    out << "# graded spin character table, generated\n";
    out << "weyl_type " << fd.type.str() << "\n";
    out << "classes";
    for (int wc : st.even_split) out << " c" << wc << ":even";
    for (int wc : st.odd_split) out << " c" << wc << ":odd";
    out << "\n";
    (void)classes;
    for (const auto& row : fd.rows) {
        if (row.spin_row < 0) throw Error("spin table export needs pipeline rows");
        const auto& src = st.rows[row.spin_row];
        out << "char label=" << row.label << " type=" << src.type << " values=";
        for (size_t k = 0; k < src.values.size(); ++k) {
            if (k) out << ';';
            out << field_literal(src.values[k]);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace sfd
