#include "sfd/cover.hpp"

#include <numeric>

namespace sfd {

CoverContext::CoverContext(const RootSystem& rs, const ElementStore& store)
    : rs_(&rs), store_(&store), n_(rs.rank()) {
    long size = store.size();
    gamma_.assign(size_t(size) * n_, 0);
    lambda_.assign(size_t(size) * n_, 0);
    invsign_.assign(size, 0);

    // Breadth-first sweep computing gamma. Right multiplication by a
    // generator changes length by +-1; downward edges mirror the upward
    // edge from the shorter element, so full lifts are only ever compared
    // against frontier residents.
    std::vector<PackedLift> lifts(size);
    lifts[0] = PackedLift::one(rs.ambient_dim());
    for (uint32_t head = 0; head < static_cast<uint32_t>(size); ++head) {
        if (!lifts[head].engaged()) throw Error("cover sweep lost a lift (bug)");
        for (int i = 0; i < n_; ++i) {
            uint32_t w = store.mul_gen(head, i);
            if (store.length(w) < store.length(head)) {
                gamma_[size_t(head) * n_ + i] = gamma_[size_t(w) * n_ + i];
                continue;
            }
            PackedLift cand = lift_mul_simple(rs, lifts[head], i);
            if (store.parent(w) == head && store.letter(w) == i) {
                gamma_[size_t(head) * n_ + i] = 0;
                lifts[w] = std::move(cand);
            } else {
                gamma_[size_t(head) * n_ + i] =
                    static_cast<uint8_t>(lift_compare_sign(cand, lifts[w]));
            }
        }
        lifts[head].clear();
    }

    // lambda by tree recursion: t_i lift(p s_j) = (t_i lift(p)) t_j.
    for (int i = 0; i < n_; ++i) lambda_[size_t(0) * n_ + i] = 0;
    for (uint32_t w = 1; w < static_cast<uint32_t>(size); ++w) {
        uint32_t p = store.parent(w);
        int j = store.letter(w);
        for (int i = 0; i < n_; ++i) {
            uint32_t sip = store.gen_mul(i, p);
            lambda_[size_t(w) * n_ + i] =
                lambda_[size_t(p) * n_ + i] ^ gamma_[size_t(sip) * n_ + j];
        }
    }

    // Inverse signs: lift(w) * lift(w^{-1}) = +-1.
    for (uint32_t w = 1; w < static_cast<uint32_t>(size); ++w) {
        CoverElt a{w, 0};
        CoverElt prod = mul_elem(a, store.inverse(w));
        if (prod.idx != 0) throw Error("inverse table broken (bug)");
        invsign_[w] = prod.sign;
    }
}

CoverElt CoverContext::mul_elem(CoverElt a, uint32_t b) const {
    // Walk the canonical word of b without materializing it (root-to-leaf
    // order requires recursion; collect letters instead).
    for (int i : store_->word(b)) a = mul_gen(a, i);
    return a;
}

CoverElt CoverContext::power(CoverElt a, long k) const {
    CoverElt r = identity();
    for (long t = 0; t < k; ++t) r = mul(r, a);
    return r;
}

long CoverContext::order(CoverElt a) const {
    CoverElt x = a;
    long k = 1;
    while (!(x == identity())) {
        x = mul(x, a);
        ++k;
        if (k > 2 * store_->size()) throw Error("cover order runaway (bug)");
    }
    return k;
}

QuadField CoverContext::basic_spin_trace(CoverElt a) const {
    QuadField t = basic_spin_trace_of(*rs_, lift(a.idx));
    return a.sign ? -t : t;
}

int CoverContext::sign_cocycle(uint32_t w, CoverElt x) const {
    CoverElt cw{w, 0};
    CoverElt conj = mul(mul(cw, x), inverse(cw));
    if (conj.idx != x.idx)
        throw Error("sign_cocycle: the given element does not centralize x");
    return (conj.sign ^ x.sign) ? -1 : 1;
}

bool CoverContext::is_split(const Classes& classes, int cls) const {
    const auto& cc = classes.list[cls];
    CoverElt x{cc.rep, 0};
    long size = store_->size();
    for (uint32_t w = 0; w < static_cast<uint32_t>(size); ++w) {
        // centralizer scan over the whole group
        uint32_t conj = store_->mul(store_->mul(w, cc.rep), store_->inverse(w));
        if (conj != cc.rep) continue;
        if (sign_cocycle(w, x) < 0) return false;
    }
    return true;
}

CoverClassData::CoverClassData(const CoverContext& ctx, Classes& classes) : ctx_(&ctx) {
    const auto& store = ctx.store();
    long size = store.size();
    class_of_.assign(2 * size, -1);

    auto slot = [size](CoverElt a) { return size_t(a.sign) * size + a.idx; };

    for (int wc = 0; wc < static_cast<int>(classes.list.size()); ++wc) {
        auto& base = classes.list[wc];
        CoverElt seed{base.rep, 0};
        int id_a = static_cast<int>(classes_.size());

        std::vector<CoverElt> orbit{seed};
        class_of_[slot(seed)] = id_a;
        bool split = true;
        for (size_t head = 0; head < orbit.size(); ++head) {
            CoverElt cur = orbit[head];
            for (int i = 0; i < ctx.store().num_generators(); ++i) {
                CoverElt img = ctx.conjugate_by_gen(i, cur);
                if (class_of_[slot(img)] >= 0) continue;
                class_of_[slot(img)] = id_a;
                orbit.push_back(img);
                if (img.idx == base.rep && img.sign == 1) split = false;
            }
        }
        base.split = split;

        CoverClass a;
        a.rep = seed;
        a.size = static_cast<long>(orbit.size());
        a.wclass = wc;
        if (split) {
            if (a.size != base.size)
                throw Error("split cover class has unexpected size (bug)");
            int id_b = id_a + 1;
            a.partner = id_b;
            CoverClass b;
            b.rep = CoverElt{base.rep, 1};
            b.size = a.size;
            b.wclass = wc;
            b.partner = id_a;
            std::vector<CoverElt> orbit_b(orbit.size());
            for (size_t k = 0; k < orbit.size(); ++k) {
                CoverElt z{orbit[k].idx, static_cast<uint8_t>(orbit[k].sign ^ 1)};
                orbit_b[k] = z;
                class_of_[slot(z)] = id_b;
            }
            classes_.push_back(a);
            classes_.push_back(b);
            members_.push_back(std::move(orbit));
            members_.push_back(std::move(orbit_b));
        } else {
            if (a.size != 2 * base.size)
                throw Error("non-split cover class has unexpected size (bug)");
            a.partner = id_a;
            classes_.push_back(a);
            members_.push_back(std::move(orbit));
        }
    }

    long total = 0;
    for (const auto& c : classes_) total += c.size;
    if (total != 2 * size) throw Error("cover class sizes do not sum to 2|W| (bug)");

    // Identity cover class is first; z's class must be its split partner.
    if (classes_.empty() || classes_[0].rep.idx != 0 || classes_[0].size != 1)
        throw Error("identity cover class misplaced (bug)");
    z_class_ = class_of(CoverElt{0, 1});
    if (classes_[z_class_].size != 1)
        throw Error("central element class is not a singleton (bug)");

    // Orders, exponent, power maps, inverse classes.
    exponent_ = 1;
    for (auto& c : classes_) {
        c.rep_order = ctx.order(c.rep);
        exponent_ = std::lcm(exponent_, c.rep_order);
        c.power_class.resize(c.rep_order);
        CoverElt x = ctx.identity();
        for (long l = 0; l < c.rep_order; ++l) {
            c.power_class[l] = class_of(x);
            x = ctx.mul(x, c.rep);
        }
        c.inv_class = class_of(ctx.inverse(c.rep));
    }
}

bool spin_relations_hold(const RootSystem& rs) {
    int n = rs.rank();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int m = rs.coxeter(i, j);
            std::vector<int> word;
            for (int k = 0; k < m; ++k) {
                word.push_back(i);
                word.push_back(j);
            }
            CliffordElement prod = lift_word(rs, word);
            int scalar_sign = (m + 1) % 2 ? -1 : 1;  // (-1)^{m+1}
            QuadField expect{Rational(scalar_sign)};
            CliffordElement target = CliffordElement::scalar(rs.ambient_dim(), expect);
            if (!(prod == target)) return false;
        }
    }
    return true;
}

}  // namespace sfd
