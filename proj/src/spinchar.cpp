#include "sfd/spinchar.hpp"

#include <algorithm>
#include <cmath>

namespace sfd {

namespace {

// ---- arithmetic mod a word-sized prime ----

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((__uint128_t)a * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Tonelli-Shanks square root mod an odd prime; returns p on failure.
uint64_t sqrtmod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (powmod(a, (p - 1) / 2, p) != 1) return p;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    uint64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        uint64_t b = powmod(c, uint64_t(1) << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

uint64_t primitive_root(uint64_t p) {
    std::vector<uint64_t> primes;
    uint64_t m = p - 1;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        primes.push_back(d);
        while (m % d == 0) m /= d;
    }
    if (m > 1) primes.push_back(m);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t q : primes)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw Error("no primitive root found (bug)");
}

using Vec = std::vector<uint64_t>;
using Mat = std::vector<Vec>;

// Characteristic polynomial mod p via Hessenberg reduction.
Vec charpoly_modp(Mat a, uint64_t p) {
    int n = static_cast<int>(a.size());
    // reduce to upper Hessenberg form
    for (int col = 0; col + 2 < n + 1 && col < n - 2 + 1; ++col) {
        int piv = -1;
        for (int r = col + 1; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != col + 1) {
            std::swap(a[piv], a[col + 1]);
            for (int r = 0; r < n; ++r) std::swap(a[r][piv], a[r][col + 1]);
        }
        uint64_t inv = invmod(a[col + 1][col], p);
        for (int r = col + 2; r < n; ++r) {
            if (a[r][col] == 0) continue;
            uint64_t f = mulmod(a[r][col], inv, p);
            // row r -= f * row col+1
            for (int c = 0; c < n; ++c) {
                uint64_t sub = mulmod(f, a[col + 1][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
            // column col+1 += f * column r
            for (int r2 = 0; r2 < n; ++r2) {
                uint64_t add = mulmod(f, a[r2][r], p);
                a[r2][col + 1] = (a[r2][col + 1] + add) % p;
            }
        }
    }
    // recurrences for the leading principal charpolys of the Hessenberg form
    std::vector<Vec> cp(n + 1);
    cp[0] = {1};
    for (int k = 1; k <= n; ++k) {
        // cp_k(x) = (x - a[k-1][k-1]) cp_{k-1}(x) - sum_{i<k-1} a[i][k-1] *
        //           (prod of subdiagonal) * cp_i(x)
        Vec cur(k + 1, 0);
        for (int d = 0; d < k; ++d) {
            cur[d + 1] = (cur[d + 1] + cp[k - 1][d]) % p;
            uint64_t sub = mulmod(a[k - 1][k - 1] % p, cp[k - 1][d], p);
            cur[d] = (cur[d] + p - sub) % p;
        }
        uint64_t beta = 1;
        for (int i = k - 2; i >= 0; --i) {
            beta = mulmod(beta, a[i + 1][i], p);
            uint64_t f = mulmod(beta, a[i][k - 1] % p, p);
            if (f == 0) continue;
            for (int d = 0; d <= i; ++d) {
                uint64_t sub = mulmod(f, cp[i][d], p);
                cur[d] = (cur[d] + p - sub) % p;
            }
        }
        cp[k] = std::move(cur);
    }
    return cp[n];
}

Vec mat_apply(const Mat& m, const Vec& v, uint64_t p) {
    int n = static_cast<int>(m.size());
    Vec r(n, 0);
    for (int i = 0; i < n; ++i) {
        uint64_t acc = 0;
        for (int j = 0; j < n; ++j) {
            if (m[i][j] == 0 || v[j] == 0) continue;
            acc = (acc + mulmod(m[i][j], v[j], p)) % p;
        }
        r[i] = acc;
    }
    return r;
}

// Basis of the kernel of m (rows x cols) over F_p.
std::vector<Vec> kernel_basis(Mat m, uint64_t p) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        uint64_t inv = invmod(m[r][c], p);
        for (int j = 0; j < cols; ++j) m[r][j] = mulmod(m[r][j], inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            uint64_t f = m[i][c];
            for (int j = 0; j < cols; ++j) {
                uint64_t sub = mulmod(f, m[r][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<Vec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols, 0);
        v[c] = 1;
        for (int i = 0; i < r; ++i) {
            // pivot_col[i] coordinate = -m[i][c]
            if (m[i][c]) v[pivot_col[i]] = p - m[i][c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

CycloCharTable character_table(const CoverClassData& cov) {
    const CoverContext& ctx = cov.context();
    const ElementStore& store = ctx.store();
    int r = cov.num_classes();
    long g2 = cov.group_order2();

    // --- prime selection: p = 1 (mod exponent), p > max(2 sqrt|G|, max class size)
    long maxh = 0;
    for (int k = 0; k < r; ++k) maxh = std::max(maxh, cov.cls(k).size);
    uint64_t lower = std::max<uint64_t>(
        {static_cast<uint64_t>(2.0 * std::sqrt(double(g2))) + 1,
         static_cast<uint64_t>(maxh), static_cast<uint64_t>(r) + 1, 7});
    uint64_t e = static_cast<uint64_t>(cov.exponent());
    uint64_t p = (lower / e + 1) * e + 1;
    while (!is_prime(p)) p += e;

    // --- class-algebra matrices a_{ijk} = #{x in C_i : x^{-1} g_k in C_j}
    std::vector<std::vector<int>> rep_words(r);
    std::vector<uint8_t> rep_signs(r);
    for (int k = 0; k < r; ++k) {
        rep_words[k] = store.word(cov.cls(k).rep.idx);
        rep_signs[k] = cov.cls(k).rep.sign;
    }
    std::vector<Mat> cmat(r, Mat(r, Vec(r, 0)));
    for (int i = 0; i < r; ++i) {
        for (const CoverElt& x : cov.members(i)) {
            CoverElt xi = ctx.inverse(x);
            for (int k = 0; k < r; ++k) {
                CoverElt z = xi;
                for (int letter : rep_words[k]) z = ctx.mul_gen(z, letter);
                z.sign ^= rep_signs[k];
                cmat[i][cov.class_of(z)][k] += 1;
            }
        }
    }
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            uint64_t sum = 0;
            for (int j = 0; j < r; ++j) sum += cmat[i][j][k];
            if (sum != static_cast<uint64_t>(cov.cls(i).size))
                throw Error("class matrix column sum mismatch (bug)");
        }
    for (auto& m : cmat)
        for (auto& row : m)
            for (auto& v : row) v %= p;

    // --- split the common eigenspaces
    std::vector<std::vector<Vec>> subspaces;
    {
        std::vector<Vec> full;
        for (int k = 0; k < r; ++k) {
            Vec e_k(r, 0);
            e_k[k] = 1;
            full.push_back(std::move(e_k));
        }
        subspaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        bool all_one = true;
        for (const auto& u : subspaces)
            if (u.size() > 1) all_one = false;
        if (all_one) break;

        // eigenvalues of cmat[i] from its characteristic polynomial
        Vec cp = charpoly_modp(cmat[i], p);
        std::vector<uint64_t> roots;
        for (uint64_t lam = 0; lam < p; ++lam) {
            uint64_t acc = 0;
            for (int d = static_cast<int>(cp.size()) - 1; d >= 0; --d)
                acc = (mulmod(acc, lam, p) + cp[d]) % p;
            if (acc == 0) roots.push_back(lam);
        }

        std::vector<std::vector<Vec>> next;
        for (auto& u : subspaces) {
            int d = static_cast<int>(u.size());
            if (d == 1) {
                next.push_back(std::move(u));
                continue;
            }
            // matrix of cmat[i] on the subspace: solve through an RREF copy
            // of the basis
            Mat basis(d, Vec(r));
            for (int t = 0; t < d; ++t) basis[t] = u[t];
            // column-reduce basis to get pivot coordinates
            std::vector<int> pivots(d, -1);
            Mat red = basis;
            for (int t = 0; t < d; ++t) {
                int pc = -1;
                for (int c = 0; c < r; ++c)
                    if (red[t][c] != 0) { pc = c; break; }
                if (pc < 0) throw Error("degenerate subspace basis (bug)");
                uint64_t inv = invmod(red[t][pc], p);
                for (int c = 0; c < r; ++c) red[t][c] = mulmod(red[t][c], inv, p);
                for (int t2 = 0; t2 < d; ++t2) {
                    if (t2 == t || red[t2][pc] == 0) continue;
                    uint64_t f = red[t2][pc];
                    for (int c = 0; c < r; ++c) {
                        uint64_t sub = mulmod(f, red[t][c], p);
                        red[t2][c] = (red[t2][c] + p - sub) % p;
                    }
                }
                pivots[t] = pc;
            }
            // express B*u_k in the reduced basis
            auto coords_of = [&](Vec w) {
                Vec coord(d, 0);
                for (int t = 0; t < d; ++t) {
                    uint64_t f = w[pivots[t]];
                    coord[t] = f;
                    if (f == 0) continue;
                    for (int c = 0; c < r; ++c) {
                        uint64_t sub = mulmod(f, red[t][c], p);
                        w[c] = (w[c] + p - sub) % p;
                    }
                }
                for (int c = 0; c < r; ++c)
                    if (w[c] != 0) throw Error("subspace not invariant (bug)");
                return coord;
            };
            // change of basis: red rows = R, u rows in terms of red: u_t = sum S[t][s] red_s
            // we work directly in red coordinates: action matrix on red basis
            Mat action(d, Vec(d, 0));
            for (int t = 0; t < d; ++t) {
                Vec img = mat_apply(cmat[i], red[t], p);
                Vec coord = coords_of(std::move(img));
                for (int s = 0; s < d; ++s) action[s][t] = coord[s];
            }
            bool split_any = false;
            std::vector<std::vector<Vec>> pieces;
            int covered = 0;
            for (uint64_t lam : roots) {
                Mat shifted = action;
                for (int t = 0; t < d; ++t) shifted[t][t] = (shifted[t][t] + p - lam % p) % p;
                auto ker = kernel_basis(shifted, p);
                if (ker.empty()) continue;
                std::vector<Vec> piece;
                for (auto& kv : ker) {
                    Vec w(r, 0);
                    for (int t = 0; t < d; ++t) {
                        if (kv[t] == 0) continue;
                        for (int c = 0; c < r; ++c)
                            w[c] = (w[c] + mulmod(kv[t], red[t][c], p)) % p;
                    }
                    piece.push_back(std::move(w));
                }
                covered += static_cast<int>(piece.size());
                if (static_cast<int>(piece.size()) < d) split_any = true;
                pieces.push_back(std::move(piece));
            }
            if (covered != d) throw Error("class matrix is not diagonalizable (bug)");
            if (!split_any) {
                next.push_back(std::move(u));
            } else {
                for (auto& piece : pieces) next.push_back(std::move(piece));
            }
        }
        subspaces = std::move(next);
    }
    if (static_cast<int>(subspaces.size()) != r)
        throw Error("eigenspace splitting incomplete: " + std::to_string(subspaces.size()) +
                    " of " + std::to_string(r));

    // --- normalize central-character vectors: omega(identity) = 1
    std::vector<Vec> omega(r);
    for (int t = 0; t < r; ++t) {
        Vec v = subspaces[t][0];
        if (v[0] == 0) throw Error("central character vanishes at the identity (bug)");
        uint64_t inv = invmod(v[0], p);
        for (auto& x : v) x = mulmod(x, inv, p);
        omega[t] = std::move(v);
    }
    // deterministic row order: sort by the omega vectors
    std::sort(omega.begin(), omega.end());

    // --- degrees from the first orthogonality relation
    std::vector<long> degrees(r);
    std::vector<Vec> valm(r, Vec(r, 0));
    uint64_t g2m = static_cast<uint64_t>(g2) % p;
    for (int t = 0; t < r; ++t) {
        uint64_t s = 0;
        for (int j = 0; j < r; ++j) {
            uint64_t term = mulmod(omega[t][j], omega[t][cov.cls(j).inv_class], p);
            s = (s + mulmod(term, invmod(static_cast<uint64_t>(cov.cls(j).size) % p, p), p)) % p;
        }
        uint64_t d2 = mulmod(g2m, invmod(s, p), p);
        uint64_t d = sqrtmod(d2, p);
        if (d == p) throw Error("degree is not a quadratic residue (bug)");
        if (d > p - d) d = p - d;
        degrees[t] = static_cast<long>(d);
        uint64_t dm = d % p;
        for (int j = 0; j < r; ++j) {
            uint64_t hjinv = invmod(static_cast<uint64_t>(cov.cls(j).size) % p, p);
            valm[t][j] = mulmod(mulmod(dm, omega[t][j], p), hjinv, p);
        }
    }
    {
        Integer burnside = 0;
        for (int t = 0; t < r; ++t) burnside += Integer(degrees[t]) * Integer(degrees[t]);
        if (burnside != Integer(g2))
            throw Error("sum of squared degrees differs from |cover| (bug)");
    }

    // --- exact cyclotomic lift through the power maps
    uint64_t groot = primitive_root(p);
    CycloCharTable out;
    out.dixon_prime = p;
    out.degrees = degrees;
    out.rows.assign(r, std::vector<Cyclotomic>(r, Cyclotomic(1)));
    for (int j = 0; j < r; ++j) {
        long m = cov.cls(j).rep_order;
        uint64_t zeta = powmod(groot, (p - 1) / static_cast<uint64_t>(m), p);
        uint64_t minv = invmod(static_cast<uint64_t>(m) % p, p);
        std::vector<uint64_t> zpow(m);
        zpow[0] = 1;
        for (long l = 1; l < m; ++l) zpow[l] = mulmod(zpow[l - 1], zeta, p);
        for (int t = 0; t < r; ++t) {
            Cyclotomic val(1);
            for (long i = 0; i < m; ++i) {
                uint64_t ci = 0;
                for (long l = 0; l < m; ++l) {
                    int jl = cov.cls(j).power_class[l];
                    uint64_t ze = zpow[(m - (i * l) % m) % m];  // zeta^{-il}
                    ci = (ci + mulmod(valm[t][jl], ze, p)) % p;
                }
                ci = mulmod(ci, minv, p);
                if (ci == 0) continue;
                if (ci > static_cast<uint64_t>(degrees[t]))
                    throw Error("eigenvalue multiplicity exceeds the degree (bug)");
                val += Cyclotomic::zeta_power(m, i, Rational(static_cast<long>(ci)));
            }
            out.rows[t][j] = std::move(val);
        }
    }
    for (int t = 0; t < r; ++t) {
        if (out.rows[t][0] != Cyclotomic::from_rational(1, Rational(degrees[t])))
            throw Error("lifted identity value differs from the degree (bug)");
    }

    // --- exact row orthogonality
    for (int t = 0; t < r; ++t)
        for (int u = t; u < r; ++u) {
            Cyclotomic acc(1);
            for (int j = 0; j < r; ++j) {
                Cyclotomic term = out.rows[t][j] * out.rows[u][cov.cls(j).inv_class];
                acc += term * Cyclotomic::from_rational(1, Rational(cov.cls(j).size));
            }
            Cyclotomic expect = Cyclotomic::from_rational(1, Rational(t == u ? g2 : 0));
            if (acc != expect)
                throw Error("character table fails orthogonality (bug) at rows " +
                            std::to_string(t) + "," + std::to_string(u));
        }

    return out;
}

std::vector<int> extract_spin(const CycloCharTable& table, const CoverClassData& cov) {
    std::vector<int> spin;
    int z = cov.z_class();
    for (int t = 0; t < static_cast<int>(table.rows.size()); ++t) {
        Cyclotomic neg = -table.rows[t][0];
        if (table.rows[t][z] == neg) spin.push_back(t);
    }
    return spin;
}

SpinCharacterTable classify_and_pair(const CycloCharTable& table, const CoverClassData& cov,
                                     const Classes& classes) {
    SpinCharacterTable out;
    for (int wc = 0; wc < static_cast<int>(classes.list.size()); ++wc) {
        if (!classes.list[wc].split.value()) continue;
        if (classes.list[wc].parity > 0)
            out.even_split.push_back(wc);
        else
            out.odd_split.push_back(wc);
    }
    auto canonical_cover = [&](int wc) {
        return cov.class_of(CoverElt{classes.list[wc].rep, 0});
    };
    for (int wc : out.even_split) out.canonical_cover_class.push_back(canonical_cover(wc));
    for (int wc : out.odd_split) out.canonical_cover_class.push_back(canonical_cover(wc));

    std::vector<int> spin = extract_spin(table, cov);
    if (spin.size() != out.even_split.size() + out.odd_split.size())
        throw Error("spin character count differs from the split class count");

    int ne = static_cast<int>(out.even_split.size());
    int ns = static_cast<int>(out.canonical_cover_class.size());

    std::vector<int> partner(spin.size(), -1);
    for (size_t a = 0; a < spin.size(); ++a) {
        bool vanishes = true;
        for (int s = ne; s < ns && vanishes; ++s)
            vanishes = table.rows[spin[a]][out.canonical_cover_class[s]].is_zero();
        if (vanishes) continue;  // type M
        for (size_t b = 0; b < spin.size(); ++b) {
            if (b == a) continue;
            bool match = true;
            for (int s = 0; s < ns && match; ++s) {
                const Cyclotomic& va = table.rows[spin[a]][out.canonical_cover_class[s]];
                const Cyclotomic& vb = table.rows[spin[b]][out.canonical_cover_class[s]];
                match = (s < ne) ? (va == vb) : (va == -vb);
            }
            if (match) {
                if (partner[a] >= 0) throw Error("type Q pairing is ambiguous (bug)");
                partner[a] = static_cast<int>(b);
            }
        }
        if (partner[a] < 0)
            throw Error("no type Q partner found; the table is corrupted");
    }
    for (size_t a = 0; a < spin.size(); ++a)
        if (partner[a] >= 0 && partner[partner[a]] != static_cast<int>(a))
            throw Error("type Q pairing is not involutive (bug)");

    std::vector<char> used(spin.size(), 0);
    for (size_t a = 0; a < spin.size(); ++a) {
        if (used[a]) continue;
        GradedRow row;
        if (partner[a] < 0) {
            used[a] = 1;
            row.type = 'M';
            row.ungraded_a = spin[a];
            row.degree = table.degrees[spin[a]];
            row.degree_a = table.degrees[spin[a]];
            for (int s = 0; s < ns; ++s)
                row.values.push_back(table.rows[spin[a]][out.canonical_cover_class[s]]);
        } else {
            size_t b = partner[a];
            used[a] = used[b] = 1;
            row.type = 'Q';
            row.ungraded_a = spin[a];
            row.ungraded_b = spin[b];
            row.degree_a = table.degrees[spin[a]];
            row.degree_b = table.degrees[spin[b]];
            row.degree = table.degrees[spin[a]] + table.degrees[spin[b]];
            for (int s = 0; s < ns; ++s)
                row.values.push_back(table.rows[spin[a]][out.canonical_cover_class[s]] +
                                     table.rows[spin[b]][out.canonical_cover_class[s]]);
        }
        out.rows.push_back(std::move(row));
    }

    if (out.rows.size() != out.even_split.size())
        throw Error("graded simple count differs from the even split class count");
    size_t nq = 0;
    for (const auto& row : out.rows)
        if (row.type == 'Q') ++nq;
    if (nq != out.odd_split.size())
        throw Error("type Q count differs from the odd split class count");

    // Deterministic row order before labeling: by degree, then values.
    std::sort(out.rows.begin(), out.rows.end(), [](const GradedRow& x, const GradedRow& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        for (size_t s = 0; s < x.values.size(); ++s) {
            const auto& tx = x.values[s].terms();
            const auto& ty = y.values[s].terms();
            if (tx != ty) return std::lexicographical_compare(
                tx.begin(), tx.end(), ty.begin(), ty.end());
        }
        return false;
    });
    return out;
}

int identify_basic_spin(const SpinCharacterTable& table, const CoverClassData& cov,
                        const Classes& classes) {
    int ne = static_cast<int>(table.even_split.size());
    std::vector<Cyclotomic> traces(ne);
    for (int s = 0; s < ne; ++s) {
        CoverElt lift{classes.list[table.even_split[s]].rep, 0};
        traces[s] = Cyclotomic::from_quadfield(cov.context().basic_spin_trace(lift));
    }
    int found = -1;
    for (int t = 0; t < static_cast<int>(table.rows.size()); ++t) {
        bool match = true;
        for (int s = 0; s < ne && match; ++s) match = (table.rows[t].values[s] == traces[s]);
        if (!match) continue;
        if (found >= 0) throw Error("basic spin character is not unique (bug)");
        found = t;
    }
    if (found < 0) throw Error("no row matches the basic spin traces");
    return found;
}

}  // namespace sfd
