#include "sfd/molien.hpp"

namespace sfd {

TruncatedSeries<Integer> molien_series(const std::vector<MolienTerm>& terms, int order) {
    QuadSeries acc(order);
    for (const auto& term : terms) {
        if (term.chi.is_zero()) continue;
        QuadField scalar = term.chi * term.trace;
        if (scalar.is_zero()) continue;
        scalar = QuadField(Rational(1, term.centralizer)) * scalar;
        RatSeries inv = reciprocal_series(term.det1mtx, order);
        for (int k = 0; k <= order; ++k) {
            if (inv.coeff(k) == 0) continue;
            acc.coeff(k) += QuadField(inv.coeff(k)) * scalar;
        }
    }
    TruncatedSeries<Integer> out(order);
    for (int k = 0; k <= order; ++k) {
        Rational q = quad_to_rational(acc.coeff(k));  // the rationality gate
        Integer v = to_integer(q);
        if (v < 0)
            throw Error("Molien series has a negative coefficient at t^" + std::to_string(k));
        out.coeff(k) = v;
    }
    return out;
}

IntPolynomial degree_product(const std::vector<long>& degrees) {
    IntPolynomial prod = IntPolynomial::one();
    for (long d : degrees) {
        IntPolynomial f = IntPolynomial::one() - IntPolynomial::monomial(Integer(1), int(d));
        prod = prod * f;
    }
    return prod;
}

IntPolynomial fake_degree_from_series(const TruncatedSeries<Integer>& h,
                                      const std::vector<long>& degrees, int n_reflections) {
    IntPolynomial dp = degree_product(degrees);
    int order = h.order();
    std::vector<Integer> coeffs(order + 1);
    for (int k = 0; k <= order; ++k) {
        Integer acc = 0;
        for (int i = 0; i <= k && i <= dp.degree(); ++i) acc += dp.coeff(i) * h.coeff(k - i);
        coeffs[k] = acc;
    }
    for (int k = n_reflections + 1; k <= order; ++k)
        if (coeffs[k] != 0)
            throw Error("fake degree exceeds the reflection count bound");
    coeffs.resize(n_reflections + 1);
    IntPolynomial p{std::move(coeffs)};
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) < 0)
            throw Error("fake degree has a negative coefficient at t^" + std::to_string(k));
    return p;
}

IntPolynomial basic_spin_closed_form(const RootSystem& rs) {
    long m = rs.rank() % 2 == 0 ? 1 : 2;
    IntPolynomial prod = IntPolynomial({Integer(m)});
    for (long d : rs.degrees()) {
        IntPolynomial f = IntPolynomial::one() + IntPolynomial::monomial(Integer(1), int(d - 1));
        prod = prod * f;
    }
    return prod;
}

bool poincare_identity_check(const Classes& classes, long group_order,
                             const std::vector<long>& degrees, int order) {
    RatSeries lhs(order);
    for (const auto& c : classes.list) {
        RatSeries inv = reciprocal_series(c.charpoly, order);
        for (int k = 0; k <= order; ++k) lhs.coeff(k) += Rational(c.size) * inv.coeff(k);
    }
    for (int k = 0; k <= order; ++k) lhs.coeff(k) /= group_order;
    RatSeries rhs = reciprocal_series(degree_product(degrees), order);
    return lhs == rhs;
}

std::vector<MolienTerm> MolienContext::terms_for_row(int row) const {
    std::vector<MolienTerm> terms;
    const auto& r = table->rows[row];
    for (size_t s = 0; s < table->even_split.size(); ++s) {
        const auto& wc = classes->list[table->even_split[s]];
        MolienTerm t;
        t.trace = cov->context().basic_spin_trace(CoverElt{wc.rep, 0});
        t.chi = real_chi_for_molien(r.values[s], t.trace);
        t.centralizer = group_order / wc.size;
        t.det1mtx = wc.charpoly;
        terms.push_back(std::move(t));
    }
    return terms;
}

TruncatedSeries<Integer> spin_molien_H(const MolienContext& mc, int row, int order) {
    return molien_series(mc.terms_for_row(row), order);
}

IntPolynomial spin_fake_degree(const MolienContext& mc, int row) {
    int order = mc.truncation_order();
    auto h = spin_molien_H(mc, row, order);
    return fake_degree_from_series(h, mc.rs->degrees(), mc.rs->num_positive());
}

QuadField real_chi_for_molien(const Cyclotomic& chi, const QuadField& trace) {
    // A complex character value is only admissible against a vanishing
    // basic spin trace (its Molien term is then zero); see the D4 pair.
    auto [re, im] = to_quadfield_pair(chi);
    if (im.is_zero()) return re;
    if (!trace.is_zero())
        throw Error("complex character value " + chi.str() + " against a nonzero trace");
    return QuadField();
}

std::vector<TruncatedSeries<Integer>> full_cover_oracle_H(const MolienContext& mc, int order) {
    const ElementStore& store = mc.cov->context().store();
    const RootSystem& rs = *mc.rs;
    long size = store.size();
    int nrows = static_cast<int>(mc.table->rows.size());

    // Graded character value of each row on every cover class; zero away
    // from the even split classes.
    int ncc = mc.cov->num_classes();
    std::vector<std::vector<QuadField>> chi_cc(nrows, std::vector<QuadField>(ncc));
    std::vector<char> any_nonzero(ncc, 0);
    for (int row = 0; row < nrows; ++row) {
        for (size_t s = 0; s < mc.table->even_split.size(); ++s) {
            int cc = mc.table->canonical_cover_class[s];
            const auto& wc = mc.classes->list[mc.table->even_split[s]];
            QuadField trace = mc.cov->context().basic_spin_trace(CoverElt{wc.rep, 0});
            QuadField v = real_chi_for_molien(mc.table->rows[row].values[s], trace);
            chi_cc[row][cc] = v;
            int pc = mc.cov->cls(cc).partner;
            if (pc != cc) chi_cc[row][pc] = -v;
            if (!v.is_zero()) {
                any_nonzero[cc] = 1;
                if (pc != cc) any_nonzero[pc] = 1;
            }
        }
    }

    std::vector<QuadSeries> acc(nrows, QuadSeries(order));

    // Walk the BFS tree keeping each element's lift and ambient matrix only
    // while descendants still need them.
    std::vector<uint32_t> pending(size, 0);
    for (long w = 1; w < size; ++w) pending[store.parent(uint32_t(w))]++;
    std::vector<PackedLift> lifts(size);
    std::vector<RatMatrix> mats(size);
    lifts[0] = PackedLift::one(rs.ambient_dim());
    mats[0] = RatMatrix::identity(rs.ambient_dim());

    auto release = [&](uint32_t w) {
        lifts[w].clear();
        mats[w] = RatMatrix();
    };

    for (long wi = 0; wi < size; ++wi) {
        uint32_t w = static_cast<uint32_t>(wi);
        if (w != 0) {
            uint32_t p = store.parent(w);
            lifts[w] = lift_mul_simple(rs, lifts[p], store.letter(w));
            mats[w] = mats[p] * rs.simple_matrix(store.letter(w));
            if (--pending[p] == 0) release(p);
        }
        int cc0 = mc.cov->class_of(CoverElt{w, 0});
        int cc1 = mc.cov->class_of(CoverElt{w, 1});
        if (any_nonzero[cc0] || any_nonzero[cc1]) {
            // the element's own lift trace and characteristic polynomial
            int n = rs.rank();
            long factor = (n % 2 == 0) ? (1L << (n / 2)) : (1L << ((n + 1) / 2));
            QuadField trace0 = QuadField(Rational(factor)) * lifts[w].scalar_value();
            IntPolynomial det = reflection_charpoly(rs, mats[w]);
            RatSeries inv = reciprocal_series(det, order);
            for (int sign = 0; sign < 2; ++sign) {
                int cc = sign ? cc1 : cc0;
                if (!any_nonzero[cc]) continue;
                QuadField trace = sign ? -trace0 : trace0;
                for (int row = 0; row < nrows; ++row) {
                    const QuadField& chi = chi_cc[row][cc];
                    if (chi.is_zero()) continue;
                    QuadField scalar = chi * trace;
                    for (int k = 0; k <= order; ++k) {
                        if (inv.coeff(k) == 0) continue;
                        acc[row].coeff(k) += QuadField(inv.coeff(k)) * scalar;
                    }
                }
            }
        }
        if (pending[w] == 0) release(w);
    }

    std::vector<TruncatedSeries<Integer>> out;
    Rational norm = Rational(1) / Rational(Integer(2 * size));
    for (int row = 0; row < nrows; ++row) {
        TruncatedSeries<Integer> series(order);
        for (int k = 0; k <= order; ++k) {
            Rational q = quad_to_rational(acc[row].coeff(k)) * norm;
            series.coeff(k) = to_integer(q);
        }
        out.push_back(std::move(series));
    }
    return out;
}

}  // namespace sfd
