#include "sfd/clifford.hpp"

#include <bit>

namespace sfd {

int clifford_basis_sign(uint32_t s, uint32_t t) {
    // Move each factor of e_T (ascending) left through the factors of the
    // evolving e_S that have larger index; e_i^2 = +1 absorbs duplicates.
    int swaps = 0;
    uint32_t cur = s;
    uint32_t rest = t;
    while (rest) {
        int k = std::countr_zero(rest);
        rest &= rest - 1;
        swaps += std::popcount(cur >> (k + 1));
        cur ^= (1u << k);
    }
    return (swaps & 1) ? -1 : 1;
}

CliffordElement CliffordElement::scalar(int dim, const QuadField& v) {
    CliffordElement e(dim);
    e.add(0, v);
    return e;
}

CliffordElement CliffordElement::from_vector(int dim, const std::vector<QuadField>& coords) {
    CliffordElement e(dim);
    for (int k = 0; k < dim; ++k) e.add(1u << k, coords[k]);
    return e;
}

CliffordElement CliffordElement::basis_term(int dim, uint32_t mask, const QuadField& v) {
    CliffordElement e(dim);
    e.add(mask, v);
    return e;
}

QuadField CliffordElement::coeff(uint32_t mask) const {
    auto it = c_.find(mask);
    return it == c_.end() ? QuadField() : it->second;
}

int CliffordElement::homogeneity() const {
    bool even = false, odd = false;
    for (const auto& [m, v] : c_) (std::popcount(m) % 2 ? odd : even) = true;
    if (even && odd) return 0;
    return odd ? -1 : 1;
}

void CliffordElement::add(uint32_t mask, const QuadField& v) {
    if (v.is_zero()) return;
    auto it = c_.find(mask);
    if (it == c_.end()) {
        c_.emplace(mask, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    CliffordElement r = *this;
    for (const auto& [m, v] : o.c_) r.add(m, v);
    return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    CliffordElement r = *this;
    for (const auto& [m, v] : o.c_) r.add(m, -v);
    return r;
}

CliffordElement CliffordElement::operator-() const {
    CliffordElement r(dim_);
    for (const auto& [m, v] : c_) r.c_.emplace(m, -v);
    return r;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
    CliffordElement r(dim_);
    for (const auto& [ma, va] : c_)
        for (const auto& [mb, vb] : o.c_) {
            QuadField v = va * vb;
            if (clifford_basis_sign(ma, mb) < 0) v = -v;
            r.add(ma ^ mb, v);
        }
    return r;
}

CliffordElement CliffordElement::scaled(const QuadField& v) const {
    CliffordElement r(dim_);
    for (const auto& [m, w] : c_) {
        QuadField p = w * v;
        if (!p.is_zero()) r.c_.emplace(m, p);
    }
    return r;
}

CliffordElement CliffordElement::reversed() const {
    CliffordElement r(dim_);
    for (const auto& [m, v] : c_) {
        int k = std::popcount(m);
        bool flip = (k * (k - 1) / 2) % 2;
        r.c_.emplace(m, flip ? -v : v);
    }
    return r;
}

CliffordElement lift_word(const RootSystem& rs, const std::vector<int>& letters) {
    int dim = rs.ambient_dim();
    CliffordElement acc = CliffordElement::scalar(dim, QuadField(1));
    for (int i : letters) {
        int ri = rs.simple_root_index(i);
        const auto& alpha = rs.root(ri);
        Rational n2 = rs.norm2(ri);
        // alpha / sqrt((alpha,alpha)): 1/sqrt(k) = rk / k.
        QuadField inv_norm = QuadField::sqrt_of(static_cast<int>(n2.get_num().get_si()));
        inv_norm = QuadField(Rational(1, n2.get_num())) * inv_norm;
        std::vector<QuadField> coords(dim);
        for (int k = 0; k < dim; ++k) coords[k] = QuadField(alpha[k]) * inv_norm;
        acc = acc * CliffordElement::from_vector(dim, coords);
    }
    return acc;
}

PackedLift PackedLift::one(int dim) {
    PackedLift x;
    x.c.assign(size_t(1) << dim, Rational(0));
    x.c[0] = 1;
    return x;
}

QuadField PackedLift::value(uint32_t mask) const {
    // prefactor (1/r2)^sq2 (1/r6)^sq6 with exponents in {0,1}
    QuadField f(Rational(1));
    if (sq2) f = f * (QuadField(Rational(1, 2)) * QuadField::sqrt_of(2));
    if (sq6) f = f * (QuadField(Rational(1, 6)) * QuadField::sqrt_of(6));
    return QuadField(c[mask]) * f;
}

PackedLift lift_mul_simple(const RootSystem& rs, const PackedLift& x, int i) {
    int ri = rs.simple_root_index(i);
    const auto& alpha = rs.root(ri);
    int dim = rs.ambient_dim();
    PackedLift r;
    r.c.assign(x.c.size(), Rational(0));
    r.sq2 = x.sq2;
    r.sq6 = x.sq6;
    for (uint32_t s = 0; s < x.c.size(); ++s) {
        if (x.c[s] == 0) continue;
        for (int k = 0; k < dim; ++k) {
            if (alpha[k] == 0) continue;
            int swaps = std::popcount(s >> (k + 1));
            if (swaps & 1)
                r.c[s ^ (1u << k)] -= x.c[s] * alpha[k];
            else
                r.c[s ^ (1u << k)] += x.c[s] * alpha[k];
        }
    }
    // Fold the normalization 1/sqrt((a,a)): keep prefactor exponents in {0,1}.
    long n2 = rs.norm2(ri).get_num().get_si();
    if (n2 == 2) {
        if (r.sq2) {
            r.sq2 = 0;
            for (auto& v : r.c) v /= 2;
        } else {
            r.sq2 = 1;
        }
    } else if (n2 == 6) {
        if (r.sq6) {
            r.sq6 = 0;
            for (auto& v : r.c) v /= 6;
        } else {
            r.sq6 = 1;
        }
    } else if (n2 != 1) {
        throw Error("unsupported root norm in lift (bug)");
    }
    return r;
}

int lift_compare_sign(const PackedLift& a, const PackedLift& b) {
    if (a.sq2 != b.sq2 || a.sq6 != b.sq6 || a.c.size() != b.c.size())
        throw Error("lifts of the same element have mismatched prefactors (bug)");
    int sign = -1;  // undetermined
    for (size_t s = 0; s < a.c.size(); ++s) {
        if (a.c[s] == 0 && b.c[s] == 0) continue;
        int here;
        if (a.c[s] == b.c[s]) here = 0;
        else if (a.c[s] == -b.c[s]) here = 1;
        else throw Error("lifts of the same element differ by a non-sign factor (bug)");
        if (sign < 0) sign = here;
        else if (sign != here)
            throw Error("lift comparison produced an inconsistent sign (bug)");
    }
    if (sign < 0) throw Error("zero lift encountered (bug)");
    return sign;
}

CliffordElement to_element(const RootSystem& rs, const PackedLift& x) {
    CliffordElement r(rs.ambient_dim());
    for (uint32_t s = 0; s < x.c.size(); ++s) {
        if (x.c[s] == 0) continue;
        r = r + CliffordElement::basis_term(rs.ambient_dim(), s, x.value(s));
    }
    return r;
}

QuadField basic_spin_trace_of(const RootSystem& rs, const CliffordElement& lift) {
    int n = rs.rank();
    long factor = (n % 2 == 0) ? (1L << (n / 2)) : (1L << ((n + 1) / 2));
    return QuadField(Rational(factor)) * lift.scalar_part();
}

}  // namespace sfd
