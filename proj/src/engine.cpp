#include "sfd/engine.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace sfd {

namespace {

std::vector<Integer> full_p(const IntPolynomial& p, int n) {
    std::vector<Integer> v(n + 1);
    for (int k = 0; k <= n; ++k) v[k] = p.coeff(k);
    return v;
}

bool halve_row(FakeDegreeRow& row) {
    for (int k = 0; k <= row.P.degree(); ++k)
        if (row.P.coeff(k) % 2 != 0) return false;
    for (const auto& h : row.H)
        if (h % 2 != 0) return false;
    std::vector<Integer> pc(row.P.coeffs());
    for (auto& c : pc) c /= 2;
    row.P = IntPolynomial(std::move(pc));
    for (auto& h : row.H) h /= 2;
    return true;
}

long label_degree(const std::string& label) {
    size_t us = label.find('_');
    if (us == std::string::npos || label.empty() || !std::isdigit((unsigned char)label[0]))
        return -1;
    return std::stol(label.substr(0, us));
}

// Attempts to reorder/relabel the rows to the bundled reference layout.
// Returns false when the reference disagrees with any computed column.
bool try_reference_layout(FakeDegreeTable& table, const GoldenTable& golden) {
    int n = table.n_reflections;
    size_t ncols = golden.labels.size();
    if (table.rows.size() != ncols) return false;
    std::vector<int> assignment(ncols, -1);
    std::vector<char> used(table.rows.size(), 0);
    for (size_t col = 0; col < ncols; ++col) {
        auto want = golden.full_column(static_cast<int>(col));
        for (size_t r = 0; r < table.rows.size(); ++r) {
            if (used[r]) continue;
            auto have = full_p(table.rows[r].P, n);
            bool eq = true;
            for (int k = 0; k <= n && eq; ++k) eq = (have[k] == Integer(want[k]));
            if (eq) {
                assignment[col] = static_cast<int>(r);
                used[r] = 1;
                break;
            }
        }
        if (assignment[col] < 0) return false;
    }
    std::vector<FakeDegreeRow> ordered;
    ordered.reserve(ncols);
    for (size_t col = 0; col < ncols; ++col) {
        FakeDegreeRow row = std::move(table.rows[assignment[col]]);
        row.label = golden.labels[col];
        // exceptional labels name the graded degree
        char fam = table.type.family;
        if (fam == 'E' || fam == 'F' || fam == 'G') {
            long ld = label_degree(row.label);
            if (ld >= 0 && ld != row.degree)
                throw Error("reference label " + row.label + " does not match computed degree " +
                            std::to_string(row.degree));
        }
        ordered.push_back(std::move(row));
    }
    // flag columns whose P coincides with another column
    for (size_t a = 0; a < ordered.size(); ++a)
        for (size_t b = a + 1; b < ordered.size(); ++b)
            if (ordered[a].P == ordered[b].P) {
                ordered[a].label_equivalent = ordered[b].label_equivalent = true;
            }
    table.rows = std::move(ordered);
    table.matched_reference = true;
    return true;
}

void canonical_layout(FakeDegreeTable& table, int basic_spin_row) {
    // basic spin first, the rest by (degree, P lexicographic)
    std::vector<int> idx(table.rows.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    int n = table.n_reflections;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (a == basic_spin_row || b == basic_spin_row) return a == basic_spin_row && b != basic_spin_row;
        const auto& ra = table.rows[a];
        const auto& rb = table.rows[b];
        if (ra.degree != rb.degree) return ra.degree < rb.degree;
        for (int k = 0; k <= n; ++k) {
            if (ra.P.coeff(k) != rb.P.coeff(k)) return ra.P.coeff(k) < rb.P.coeff(k);
        }
        return false;
    });
    std::vector<FakeDegreeRow> ordered;
    for (int i : idx) ordered.push_back(std::move(table.rows[i]));
    // subscripts per degree in final order
    std::map<long, int> seen;
    for (auto& row : ordered) {
        int k = ++seen[row.degree];
        row.label = std::to_string(row.degree) + "_" + std::string(k, 's');
        if (row.type == 'Q') row.label += "^Q";
    }
    for (size_t a = 0; a < ordered.size(); ++a)
        for (size_t b = a + 1; b < ordered.size(); ++b)
            if (ordered[a].P == ordered[b].P)
                ordered[a].label_equivalent = ordered[b].label_equivalent = true;
    table.rows = std::move(ordered);
}

}  // namespace

FakeDegreeTable assemble_fake_degrees(const MolienContext& mc) {
    const RootSystem& rs = *mc.rs;
    int n = rs.num_positive();
    int order = n + 1;

    FakeDegreeTable table;
    table.type = rs.type();
    table.n_reflections = n;
    table.degrees = rs.degrees();

    int nrows = static_cast<int>(mc.table->rows.size());
    for (int r = 0; r < nrows; ++r) {
        const GradedRow& src = mc.table->rows[r];
        FakeDegreeRow row;
        row.type = src.type;
        row.degree = src.degree;
        row.spin_row = r;
        auto h = spin_molien_H(mc, r, order);
        row.P = fake_degree_from_series(h, table.degrees, n);
        row.H.assign(h.coeffs().begin(), h.coeffs().end());
        if (!palindrome_check(row.P, n))
            throw Error("fake degree fails palindromicity for a degree-" +
                        std::to_string(row.degree) + " character of " + rs.type().str());
        row.ungraded_degree_a = src.degree_a;
        row.ungraded_degree_b = src.degree_b;
        table.rows.push_back(std::move(row));
    }

    int basic_spin_row = identify_basic_spin(*mc.table, *mc.cov, *mc.classes);
    apply_layout(table, rs, basic_spin_row, /*relabel_canonical=*/true);
    return table;
}

void apply_layout(FakeDegreeTable& table, const RootSystem& rs, int basic_pre_index,
                  bool relabel_canonical) {
    // tag rows by their pre-layout position so the basic row survives reorders
    for (size_t i = 0; i < table.rows.size(); ++i)
        if (table.rows[i].spin_row < 0) table.rows[i].spin_row = static_cast<int>(i);
    int basic_tag = table.rows[basic_pre_index].spin_row;

    const GoldenTable* golden = golden_table(rs.type());
    bool classical = rs.type().family == 'A' || rs.type().family == 'B' || rs.type().family == 'D';

    if (golden) {
        bool matched = try_reference_layout(table, *golden);
        if (!matched && classical) {
            // retry with type Q rows halved (Hom-multiplicity convention of
            // the classical reference tables)
            FakeDegreeTable halved = table;
            bool can = true;
            for (auto& row : halved.rows)
                if (row.type == 'Q' && !halve_row(row)) { can = false; break; }
            if (can && try_reference_layout(halved, *golden)) {
                halved.q_factor = Rational(1, 2);
                halved.notes.push_back(
                    "type Q columns use the 1/2 Hom-multiplicity normalization of the "
                    "reference layout");
                table = std::move(halved);
                matched = true;
            }
        }
        if (!matched)
            throw Error("computed fake degrees disagree with the reference table for " +
                        rs.type().str());
        if (table.q_factor == 1 && classical) {
            bool has_q = false;
            for (const auto& row : table.rows) has_q = has_q || row.type == 'Q';
            if (has_q)
                table.notes.push_back("type Q columns use the full pair-sum normalization "
                                      "(factor 1) and match the reference layout");
        }
    } else if (relabel_canonical) {
        int basic_pos = -1;
        for (size_t i = 0; i < table.rows.size(); ++i)
            if (table.rows[i].spin_row == basic_tag) basic_pos = static_cast<int>(i);
        canonical_layout(table, basic_pos);
        table.notes.push_back("no reference layout bundled for " + rs.type().str() +
                              "; columns in canonical order (basic spin first)");
    } else {
        table.notes.push_back("no reference layout bundled for " + rs.type().str() +
                              "; columns kept in dataset order");
    }

    table.basic_row = -1;
    for (size_t i = 0; i < table.rows.size(); ++i)
        if (table.rows[i].spin_row == basic_tag) table.basic_row = static_cast<int>(i);
    if (table.basic_row < 0) throw Error("basic spin row lost during layout (bug)");

    IntPolynomial closed = basic_spin_closed_form(rs);
    if (!(table.rows[table.basic_row].P == closed))
        throw Error("basic spin fake degree differs from the closed form for " + rs.type().str());

    for (const auto& row : table.rows)
        if (row.label_equivalent) {
            table.notes.push_back("columns sharing a fake degree polynomial are "
                                  "label-equivalent; their order among themselves is canonical");
            break;
        }
}

Engine::TypeData& Engine::data(CartanType t) { return cache_[t]; }

const RootSystem& Engine::root_system(CartanType t) {
    auto& d = data(t);
    if (!d.rs) d.rs = std::make_unique<RootSystem>(t);
    return *d.rs;
}

Integer Engine::order(CartanType t) {
    auto& d = data(t);
    if (!d.order) {
        Integer o = group_order(root_system(t));
        Integer prod = 1;
        for (long deg : root_system(t).degrees()) prod *= deg;
        if (o != prod)
            throw Error("degree product differs from the group order for " + t.str());
        d.order = o;
    }
    return *d.order;
}

const ElementStore& Engine::store(CartanType t) {
    auto& d = data(t);
    if (!d.store) {
        order(t);  // validates prod(degrees) = |W| first
        d.store = std::make_unique<ElementStore>(root_system(t), budget_);
    }
    return *d.store;
}

const Classes& Engine::classes(CartanType t) {
    auto& d = data(t);
    if (!d.classes) {
        d.classes = conjugacy_classes(store(t));
        long total = 0;
        for (const auto& c : d.classes->list) total += c.size;
        if (total != store(t).size())
            throw Error("class sizes do not sum to the group order (bug)");
        // Poincare-series validation of the invariant degrees runs whenever
        // the enumerated pipeline is constructed.
        if (!d.poincare_ok) {
            const RootSystem& rs = root_system(t);
            if (!poincare_identity_check(*d.classes, store(t).size(), rs.degrees(),
                                         rs.num_positive()))
                throw Error("Poincare identity fails for the tabulated degrees of " + t.str());
            d.poincare_ok = true;
        }
    }
    return *d.classes;
}

const CoverContext& Engine::cover(CartanType t) {
    auto& d = data(t);
    if (!d.cover) d.cover = std::make_unique<CoverContext>(root_system(t), store(t));
    return *d.cover;
}

const CoverClassData& Engine::cover_classes(CartanType t) {
    auto& d = data(t);
    if (!d.covcls) {
        classes(t);
        d.covcls = std::make_unique<CoverClassData>(cover(t), *d.classes);
    }
    return *d.covcls;
}

const CycloCharTable& Engine::char_table(CartanType t) {
    auto& d = data(t);
    if (!d.chartab) d.chartab = character_table(cover_classes(t));
    return *d.chartab;
}

const SpinCharacterTable& Engine::spin_table(CartanType t) {
    auto& d = data(t);
    if (!d.spintab) d.spintab = classify_and_pair(char_table(t), cover_classes(t), classes(t));
    return *d.spintab;
}

MolienContext Engine::molien_context(CartanType t) {
    MolienContext mc;
    mc.rs = &root_system(t);
    mc.classes = &classes(t);
    mc.cov = &cover_classes(t);
    mc.table = &spin_table(t);
    mc.group_order = store(t).size();
    return mc;
}

const FakeDegreeTable& Engine::fake_degrees(CartanType t) {
    auto& d = data(t);
    if (!d.fdtab) d.fdtab = assemble_fake_degrees(molien_context(t));
    return *d.fdtab;
}

VerifyReport Engine::verify(CartanType t, bool deep) {
    VerifyReport rep;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back({name, ok, detail});
    };

    const RootSystem& rs = root_system(t);
    add("spin-relations", spin_relations_hold(rs),
        "(t_i t_j)^m_ij = (-1)^(m_ij+1) for all generator pairs");

    const Classes& cls = classes(t);
    long w_order = store(t).size();
    add("poincare", poincare_identity_check(cls, w_order, rs.degrees(), rs.num_positive()),
        "coinvariant Poincare series matches prod 1/(1-t^d_i)");

    const CoverClassData& cov = cover_classes(t);
    const SpinCharacterTable& st = spin_table(t);
    {
        std::string detail = std::to_string(st.even_split.size()) + " even split, " +
                             std::to_string(st.odd_split.size()) + " odd split";
        add("split-classes", true, detail);
        size_t nq = 0;
        for (const auto& row : st.rows)
            if (row.type == 'Q') ++nq;
        bool ok = st.rows.size() == st.even_split.size() && nq == st.odd_split.size();
        add("type-census", ok,
            std::to_string(st.rows.size() - nq) + " type M + " + std::to_string(nq) + " type Q");
    }

    // trace identity: trace^2 = det(1+x) (even rank) or 2 det(1+x) (odd)
    {
        bool ok = true;
        for (const auto& c : cls.list) {
            QuadField tr = cover(t).basic_spin_trace(CoverElt{c.rep, 0});
            Rational det_1px(c.charpoly.eval(Integer(-1)));  // det(1 - (-1) x) = det(1+x)
            QuadField sq = tr * tr;
            Rational expect = rs.rank() % 2 == 0 ? det_1px : 2 * det_1px;
            if (!(sq == QuadField(expect))) { ok = false; break; }
            if (c.parity > 0 && c.split.has_value() && !c.split.value() && det_1px != 0) ok = false;
        }
        add("trace-identity", ok,
            "tr_B(x~)^2 = det(1+x) (even rank; doubled for odd), and det(1+x) = 0 "
            "on even non-split classes");
    }

    // graded rows vanish away from even split cover classes
    {
        const CycloCharTable& ct = char_table(t);
        bool ok = true;
        for (const auto& row : st.rows) {
            for (int cc = 0; cc < cov.num_classes() && ok; ++cc) {
                bool even_split_cc = false;
                for (size_t s = 0; s < st.even_split.size(); ++s) {
                    int base = st.canonical_cover_class[s];
                    if (cc == base || cc == cov.cls(base).partner) even_split_cc = true;
                }
                if (even_split_cc) continue;
                Cyclotomic v = ct.rows[row.ungraded_a][cc];
                if (row.ungraded_b >= 0) v += ct.rows[row.ungraded_b][cc];
                ok = v.is_zero();
            }
            if (!ok) break;
        }
        add("vanishing", ok, "graded characters vanish off the even split classes");
    }

    // graded-row orthogonality: <chi_i, chi_j> = delta * (1 for M, 2 for Q)
    {
        bool ok = true;
        int ns = st.num_split();
        for (size_t a = 0; a < st.rows.size() && ok; ++a)
            for (size_t b = a; b < st.rows.size() && ok; ++b) {
                Cyclotomic acc(1);
                for (int s = 0; s < ns; ++s) {
                    long wc = s < static_cast<int>(st.even_split.size())
                                  ? st.even_split[s]
                                  : st.odd_split[s - st.even_split.size()];
                    Rational weight = Rational(cls.list[wc].size) / Rational(w_order);
                    Cyclotomic term = st.rows[a].values[s] * st.rows[b].values[s].conj();
                    acc += term * Cyclotomic::from_rational(1, weight);
                }
                Rational expect = 0;
                if (a == b) expect = st.rows[a].type == 'Q' ? 2 : 1;
                ok = (acc == Cyclotomic::from_rational(1, expect));
            }
        add("orthogonality", ok, "graded rows are orthogonal with class-size weights");
    }

    const FakeDegreeTable& fd = fake_degrees(t);
    {
        bool ok = true;
        for (const auto& row : fd.rows) ok = ok && palindrome_check(row.P, fd.n_reflections);
        add("palindromicity", ok, "P(t) = t^N P(1/t) for every character");
        bool okh = true;
        for (const auto& row : fd.rows)
            for (const auto& h : row.H) okh = okh && h >= 0;
        add("integrality", okh, "all P and H coefficients are non-negative integers");
        add("basic-closed-form",
            fd.rows[fd.basic_row].P == basic_spin_closed_form(rs),
            "basic spin column equals m*prod(1+t^(d_i-1))");
    }

    // mass identity (asserted for all-M tables, reported otherwise)
    {
        Integer lhs = 0;
        for (const auto& row : fd.rows) {
            Integer p1 = row.P.eval(Integer(1));
            lhs += Integer(row.degree) * p1;
        }
        Integer rhs = Integer(1) << (rs.rank() / 2);
        rhs *= w_order;
        bool all_m = true;
        for (const auto& row : fd.rows) all_m = all_m && row.type == 'M';
        std::string detail = "sum deg(chi) P(1) = " + lhs.get_str() + ", dim(B)|W| = " + rhs.get_str();
        add("mass-identity", all_m ? lhs == rhs : true, detail);
    }

    if (deep) {
        MolienContext mc = molien_context(t);
        auto oracle = full_cover_oracle_H(mc, mc.truncation_order());
        bool ok = true;
        for (size_t r = 0; r < st.rows.size() && ok; ++r) {
            auto h = spin_molien_H(mc, static_cast<int>(r), mc.truncation_order());
            ok = (h == oracle[r]);
        }
        add("full-cover-oracle", ok,
            "class-restricted Molien sum equals the 2|W|-element average exactly");

        bool split_ok = true;
        for (int c = 0; c < static_cast<int>(cls.list.size()) && split_ok; ++c)
            split_ok = (cover(t).is_split(cls, c) == cls.list[c].split.value());
        add("split-scan", split_ok,
            "centralizer sign scan agrees with the cover orbit splitting");
    }
    return rep;
}

}  // namespace sfd
