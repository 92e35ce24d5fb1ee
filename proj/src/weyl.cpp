#include "sfd/weyl.hpp"

#include <algorithm>
#include <unordered_map>

namespace sfd {

namespace {

using Perm = std::vector<uint16_t>;

Perm identity_perm(int npoints) {
    Perm p(npoints);
    for (int i = 0; i < npoints; ++i) p[i] = static_cast<uint16_t>(i);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse_perm(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<uint16_t>(i);
    return r;
}

bool is_identity(const Perm& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != i) return false;
    return true;
}

// Deterministic Schreier-Sims stabilizer chain on <= 2^16 points.
class StabilizerChain {
public:
    explicit StabilizerChain(int npoints) : npoints_(npoints) {}

    void add_generator(const Perm& g) { insert(0, g); }

    Integer order() const {
        Integer n = 1;
        for (const auto& lv : levels_) n *= static_cast<long>(lv.orbit.size());
        return n;
    }

private:
    struct Level {
        int base = 0;
        std::vector<Perm> gens;               // strong generators active here
        std::vector<int> orbit;               // discovered points in BFS order
        std::vector<int> where;               // point -> orbit position or -1
        std::vector<Perm> transversal;        // aligned with orbit
        size_t done_orbit = 0, done_gens = 0; // Schreier pairs already checked
    };

    // Divides g by transversal elements starting at the given level.
    // Returns the level where the residue sticks (it moves that base point
    // to a point outside the orbit, or the chain ran out), or -1 when the
    // residue is the identity. g is replaced by its residue.
    int sift_from(size_t start, Perm& g) {
        for (size_t l = start; l < levels_.size(); ++l) {
            if (is_identity(g)) return -1;
            auto& lv = levels_[l];
            int p = g[lv.base];
            if (p == lv.base) continue;
            if (lv.where[p] < 0) return static_cast<int>(l);
            g = compose(inverse_perm(lv.transversal[lv.where[p]]), g);
        }
        return is_identity(g) ? -1 : static_cast<int>(levels_.size());
    }

    void insert(int level, Perm g) {
        struct Task { int level; Perm g; };
        std::vector<Task> todo{{level, std::move(g)}};
        while (!todo.empty()) {
            Task t = std::move(todo.back());
            todo.pop_back();
            Perm h = std::move(t.g);
            int stick = sift_from(t.level, h);
            if (stick < 0) continue;
            if (stick == static_cast<int>(levels_.size())) {
                Level lv;
                int moved = -1;
                for (int i = 0; i < npoints_; ++i)
                    if (h[i] != i) { moved = i; break; }
                lv.base = moved;
                lv.where.assign(npoints_, -1);
                lv.orbit = {moved};
                lv.where[moved] = 0;
                lv.transversal = {identity_perm(npoints_)};
                levels_.push_back(std::move(lv));
            }
            // The residue fixes the first `stick` base points, so it is a
            // strong generator for every level 0..stick.
            for (int j = 0; j <= stick; ++j) {
                levels_[j].gens.push_back(h);
                extend_orbit(j);
            }
            // Check the not-yet-processed Schreier generators of the
            // affected levels; queue any nontrivial residues.
            for (int l = stick; l >= 0; --l) {
                auto& L = levels_[l];
                size_t no = L.orbit.size(), ng = L.gens.size();
                for (size_t oi = 0; oi < no; ++oi) {
                    for (size_t gi = 0; gi < ng; ++gi) {
                        if (oi < L.done_orbit && gi < L.done_gens) continue;
                        const Perm& s = L.gens[gi];
                        int p = L.orbit[oi];
                        int q = s[p];
                        Perm schreier = compose(inverse_perm(L.transversal[L.where[q]]),
                                                compose(s, L.transversal[oi]));
                        int st = sift_from(l + 1, schreier);
                        if (st >= 0) todo.push_back({st, std::move(schreier)});
                    }
                }
                L.done_orbit = no;
                L.done_gens = ng;
            }
        }
    }

    void extend_orbit(int level) {
        auto& lv = levels_[level];
        for (size_t head = 0; head < lv.orbit.size(); ++head) {
            int p = lv.orbit[head];
            for (const auto& s : lv.gens) {
                int q = s[p];
                if (lv.where[q] >= 0) continue;
                lv.where[q] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(q);
                lv.transversal.push_back(compose(s, lv.transversal[head]));
            }
        }
    }

    int npoints_;
    std::vector<Level> levels_;
};

}  // namespace

Integer group_order(const RootSystem& rs) {
    StabilizerChain chain(rs.num_roots());
    for (int i = 0; i < rs.rank(); ++i) {
        Perm p(rs.simple_perm(i).begin(), rs.simple_perm(i).end());
        chain.add_generator(p);
    }
    return chain.order();
}

ElementStore::ElementStore(const RootSystem& rs, long budget) : rs_(&rs), n_(rs.rank()) {
    Integer order = group_order(rs);
    if (order > budget)
        throw BudgetExceeded(
            "group " + rs.type().str() + " has order " + order.get_str() +
            " which exceeds the enumeration budget " + std::to_string(budget) +
            "; rerun with a larger --budget (extended mode)");
    long size = order.get_si();
    int nroots = rs.num_roots();

    // Key = images of the simple roots (they determine the element).
    struct KeyHash {
        size_t operator()(const std::vector<uint16_t>& v) const {
            size_t h = 1469598103934665603ull;
            for (uint16_t x : v) {
                h ^= x;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    auto key_of = [&](const Perm& p) {
        std::vector<uint16_t> k(n_);
        for (int i = 0; i < n_; ++i) k[i] = p[rs.simple_root_index(i)];
        return k;
    };

    cayley_.assign(size_t(size) * n_, 0);
    left_.assign(size_t(size) * n_, 0);
    parent_.assign(size, 0);
    inv_.assign(size, 0);
    letter_.assign(size, 0);
    length_.assign(size, 0);

    std::unordered_map<std::vector<uint16_t>, uint32_t, KeyHash> index;
    index.reserve(size_t(size) * 2);
    std::vector<Perm> frontier(size);  // perms freed once processed

    frontier[0] = identity_perm(nroots);
    index.emplace(key_of(frontier[0]), 0);
    uint32_t next = 1;

    for (uint32_t head = 0; head < next; ++head) {
        Perm cur = std::move(frontier[head]);
        for (int i = 0; i < n_; ++i) {
            // (w s_i)(r) = w(s_i(r))
            const auto& sp = rs.simple_perm(i);
            Perm child(nroots);
            for (int r = 0; r < nroots; ++r) child[r] = cur[sp[r]];
            auto key = key_of(child);
            auto [it, fresh] = index.emplace(key, next);
            uint32_t w;
            if (fresh) {
                w = next++;
                if (w >= static_cast<uint32_t>(size))
                    throw Error("enumeration overflow (bug)");
                parent_[w] = head;
                letter_[w] = static_cast<uint8_t>(i);
                length_[w] = static_cast<uint16_t>(length_[head] + 1);
                frontier[w] = std::move(child);
            } else {
                w = it->second;
            }
            cayley_[size_t(head) * n_ + i] = w;
        }
    }
    if (next != static_cast<uint32_t>(size))
        throw Error("enumeration found " + std::to_string(next) + " elements, expected " +
                    std::to_string(size) + " (bug)");

    // Left multiplication by generators: s_i * (p s_j) = (s_i p) s_j.
    for (int i = 0; i < n_; ++i) left_[size_t(0) * n_ + i] = cayley_[size_t(0) * n_ + i];
    for (uint32_t w = 1; w < next; ++w) {
        uint32_t p = parent_[w];
        int j = letter_[w];
        for (int i = 0; i < n_; ++i)
            left_[size_t(w) * n_ + i] = cayley_[size_t(left_[size_t(p) * n_ + i]) * n_ + j];
    }
    // Inverses: (p s_j)^{-1} = s_j p^{-1}.
    inv_[0] = 0;
    for (uint32_t w = 1; w < next; ++w)
        inv_[w] = left_[size_t(inv_[parent_[w]]) * n_ + letter_[w]];
}

std::vector<int> ElementStore::word(uint32_t w) const {
    std::vector<int> letters;
    while (w != 0) {
        letters.push_back(letter_[w]);
        w = parent_[w];
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

uint32_t ElementStore::mul_word(uint32_t w, const std::vector<int>& letters) const {
    for (int i : letters) w = mul_gen(w, i);
    return w;
}

uint32_t ElementStore::element_of_word(const std::vector<int>& letters) const {
    return mul_word(0, letters);
}

long ElementStore::element_order(uint32_t w) const {
    long k = 1;
    uint32_t x = w;
    while (x != 0) {
        x = mul_word(x, word(w));
        ++k;
        if (k > size()) throw Error("element order runaway (bug)");
    }
    return k;
}

RatMatrix ElementStore::matrix(uint32_t w) const { return word_matrix(*rs_, word(w)); }

std::vector<uint16_t> ElementStore::permutation(uint32_t w) const {
    int nroots = rs_->num_roots();
    Perm p = identity_perm(nroots);
    for (int i : word(w)) {
        const auto& sp = rs_->simple_perm(i);
        Perm q(nroots);
        for (int r = 0; r < nroots; ++r) q[r] = p[sp[r]];
        p = std::move(q);
    }
    return p;
}

RatMatrix word_matrix(const RootSystem& rs, const std::vector<int>& letters) {
    RatMatrix m = RatMatrix::identity(rs.ambient_dim());
    for (int i : letters) m = m * rs.simple_matrix(i);
    return m;
}

IntPolynomial reflection_charpoly(const RootSystem& rs, const RatMatrix& ambient_matrix) {
    IntPolynomial ambient = charpoly_reciprocal(ambient_matrix);
    int extra = rs.ambient_dim() - rs.rank();
    if (extra == 0) return ambient;
    IntPolynomial one_minus_t({Integer(1), Integer(-1)});
    for (int k = 0; k < extra; ++k) ambient = ambient.divide_exact(one_minus_t);
    return ambient;
}

Classes conjugacy_classes(const ElementStore& store) {
    long size = store.size();
    int n = store.num_generators();
    Classes out;
    out.class_of.assign(size, -1);
    std::vector<uint32_t> orbit;
    for (long seed = 0; seed < size; ++seed) {
        if (out.class_of[seed] >= 0) continue;
        int32_t cls = static_cast<int32_t>(out.list.size());
        orbit.clear();
        orbit.push_back(static_cast<uint32_t>(seed));
        out.class_of[seed] = cls;
        for (size_t head = 0; head < orbit.size(); ++head) {
            uint32_t w = orbit[head];
            for (int i = 0; i < n; ++i) {
                uint32_t c = store.conjugate_by_gen(i, w);
                if (out.class_of[c] < 0) {
                    out.class_of[c] = cls;
                    orbit.push_back(c);
                }
            }
        }
        ConjugacyClass cc;
        cc.rep = static_cast<uint32_t>(seed);  // smallest index = lex-least word
        cc.size = static_cast<long>(orbit.size());
        cc.parity = store.parity(cc.rep);
        cc.charpoly =
            reflection_charpoly(store.root_system(), store.matrix(cc.rep));
        out.list.push_back(std::move(cc));
    }
    return out;
}

ElementStore enumerate_group(const RootSystem& rs, long budget) {
    return ElementStore(rs, budget);
}

}  // namespace sfd
