#pragma once

// The distinguished double cover of an enumerated Weyl group, realized by
// Clifford lifts of canonical words.
//
// Cover elements are pairs (w, sign) standing for (-1)^sign * lift(w),
// where lift(w) is the Clifford product t_{j1}...t_{jk} over the canonical
// (BFS) word of w. Multiplication reduces to table lookups through the sign
// table gamma(w, i) defined by lift(w) * t_i = (-1)^gamma * lift(w s_i);
// gamma is computed once by a breadth-first sweep whose full Clifford lifts
// live only on the frontier.

#include <cstdint>
#include <vector>

#include "sfd/clifford.hpp"
#include "sfd/weyl.hpp"

namespace sfd {

struct CoverElt {
    uint32_t idx = 0;
    uint8_t sign = 0;  // 0 -> +lift, 1 -> -lift

    bool operator==(const CoverElt& o) const { return idx == o.idx && sign == o.sign; }
};

class CoverContext {
public:
    CoverContext(const RootSystem& rs, const ElementStore& store);

    const ElementStore& store() const { return *store_; }
    const RootSystem& root_system() const { return *rs_; }

    int gamma(uint32_t w, int i) const { return gamma_[size_t(w) * n_ + i]; }
    int lambda(int i, uint32_t w) const { return lambda_[size_t(w) * n_ + i]; }

    CoverElt identity() const { return {0, 0}; }
    CoverElt central_z() const { return {0, 1}; }

    CoverElt mul_gen(CoverElt a, int i) const {
        return {store_->mul_gen(a.idx, i),
                static_cast<uint8_t>(a.sign ^ gamma(a.idx, i))};
    }
    CoverElt gen_mul(int i, CoverElt a) const {
        return {store_->gen_mul(i, a.idx),
                static_cast<uint8_t>(a.sign ^ lambda(i, a.idx))};
    }
    // a * lift(b): walks the canonical word of b.
    CoverElt mul_elem(CoverElt a, uint32_t b) const;
    CoverElt mul(CoverElt a, CoverElt b) const {
        CoverElt r = mul_elem(a, b.idx);
        r.sign ^= b.sign;
        return r;
    }
    CoverElt inverse(CoverElt a) const {
        return {store_->inverse(a.idx),
                static_cast<uint8_t>(a.sign ^ invsign_[a.idx])};
    }
    CoverElt conjugate_by_gen(int i, CoverElt a) const {
        return mul_gen(gen_mul(i, a), i);  // t_i a t_i, and t_i^2 = 1
    }
    CoverElt power(CoverElt a, long k) const;
    long order(CoverElt a) const;

    // Canonical Clifford lift of an element (product over its word).
    CliffordElement lift(uint32_t w) const { return lift_word(*rs_, store_->word(w)); }
    // Basic spin trace of (-1)^sign lift(w).
    QuadField basic_spin_trace(CoverElt a) const;

    // Conjugation sign: for w with w x w^{-1} = x in W, the scalar s with
    // lift(w) x~ lift(w)^{-1} = s * x~ (independent of the lift of w).
    // Throws if w does not centralize x.
    int sign_cocycle(uint32_t w, CoverElt x) const;

    // Split test by full centralizer scan: true iff no centralizer element
    // of the class representative reverses the lift sign.
    bool is_split(const Classes& classes, int cls) const;

private:
    const RootSystem* rs_;
    const ElementStore* store_;
    int n_;
    std::vector<uint8_t> gamma_;    // |W| x n
    std::vector<uint8_t> lambda_;   // |W| x n
    std::vector<uint8_t> invsign_;  // |W|
};

// Conjugacy classes of the cover, aligned with the W-classes.
struct CoverClass {
    CoverElt rep;
    long size = 0;
    int wclass = 0;       // index into Classes.list
    int partner = -1;     // the z-translate class when split, else itself
    int inv_class = 0;
    long rep_order = 0;
    std::vector<int> power_class;  // class of rep^l, l = 0..rep_order-1
};

class CoverClassData {
public:
    // Builds cover classes and writes splitness back into `classes`.
    CoverClassData(const CoverContext& ctx, Classes& classes);

    const CoverContext& context() const { return *ctx_; }
    long group_order2() const { return 2 * ctx_->store().size(); }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    const CoverClass& cls(int k) const { return classes_[k]; }
    int class_of(CoverElt a) const {
        return class_of_[size_t(a.sign) * ctx_->store().size() + a.idx];
    }
    long exponent() const { return exponent_; }
    // Members of a cover class (element indices with sign bit packed).
    const std::vector<CoverElt>& members(int k) const { return members_[k]; }
    int identity_class() const { return 0; }
    int z_class() const { return z_class_; }

private:
    const CoverContext* ctx_;
    std::vector<CoverClass> classes_;
    std::vector<std::vector<CoverElt>> members_;
    std::vector<int32_t> class_of_;
    long exponent_ = 1;
    int z_class_ = -1;
};

// Defining-relations check: for all generator pairs, the lift of
// (t_i t_j)^{m_ij} equals the scalar (-1)^{m_ij + 1}.
bool spin_relations_hold(const RootSystem& rs);

}  // namespace sfd
