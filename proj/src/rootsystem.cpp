#include "sfd/rootsystem.hpp"

#include <algorithm>
#include <map>

namespace sfd {

CartanType CartanType::parse(const std::string& s) {
    if (s.size() < 2) throw Error("bad Cartan type: " + s);
    CartanType t;
    t.family = s[0];
    try {
        t.rank = std::stoi(s.substr(1));
    } catch (...) {
        throw Error("bad Cartan type: " + s);
    }
    bool ok = false;
    switch (t.family) {
        case 'A': ok = t.rank >= 1 && t.rank <= 7; break;
        case 'B': ok = t.rank >= 2 && t.rank <= 4; break;
        case 'D': ok = t.rank == 4; break;
        case 'G': ok = t.rank == 2; break;
        case 'F': ok = t.rank == 4; break;
        case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
        default: ok = false;
    }
    if (!ok) throw Error("unsupported Cartan type: " + s);
    return t;
}

std::vector<long> degree_table(CartanType t) {
    std::vector<long> d;
    switch (t.family) {
        case 'A':
            for (int i = 2; i <= t.rank + 1; ++i) d.push_back(i);
            break;
        case 'B':
            for (int i = 1; i <= t.rank; ++i) d.push_back(2 * i);
            break;
        case 'D':
            for (int i = 1; i < t.rank; ++i) d.push_back(2 * i);
            d.push_back(t.rank);
            break;
        case 'G': d = {2, 6}; break;
        case 'F': d = {2, 6, 8, 12}; break;
        case 'E':
            if (t.rank == 6) d = {2, 5, 6, 8, 9, 12};
            else if (t.rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
            else d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        default: throw Error("unsupported Cartan type");
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

std::vector<std::vector<Rational>> simple_roots(CartanType t, int& ambient) {
    std::vector<std::vector<Rational>> s;
    auto basis = [&](int i) {
        std::vector<Rational> v(ambient);
        v[i] = 1;
        return v;
    };
    switch (t.family) {
        case 'A': {
            ambient = t.rank + 1;
            for (int i = 0; i < t.rank; ++i) {
                auto v = basis(i);
                v[i + 1] = -1;
                s.push_back(v);
            }
            break;
        }
        case 'B': {
            ambient = t.rank;
            for (int i = 0; i + 1 < t.rank; ++i) {
                auto v = basis(i);
                v[i + 1] = -1;
                s.push_back(v);
            }
            s.push_back(basis(t.rank - 1));
            break;
        }
        case 'D': {
            ambient = t.rank;
            for (int i = 0; i + 1 < t.rank; ++i) {
                auto v = basis(i);
                v[i + 1] = -1;
                s.push_back(v);
            }
            auto v = basis(t.rank - 2);
            v[t.rank - 1] = 1;
            s.push_back(v);
            break;
        }
        case 'G': {
            ambient = 3;
            auto a1 = basis(0);
            a1[1] = -1;
            std::vector<Rational> a2(3);
            a2[0] = -2;
            a2[1] = 1;
            a2[2] = 1;
            s = {a1, a2};
            break;
        }
        case 'F': {
            ambient = 4;
            auto a1 = basis(1); a1[2] = -1;
            auto a2 = basis(2); a2[3] = -1;
            auto a3 = basis(3);
            std::vector<Rational> a4(4, Rational(-1, 2));
            a4[0] = Rational(1, 2);
            s = {a1, a2, a3, a4};
            break;
        }
        case 'E': {
            ambient = 8;
            std::vector<Rational> a1(8, Rational(-1, 2));
            a1[0] = Rational(1, 2);
            a1[7] = Rational(1, 2);
            auto a2 = basis(0); a2[1] = 1;
            s = {a1, a2};
            for (int i = 0; i + 2 < t.rank; ++i) {
                auto v = basis(i + 1);
                v[i] = -1;
                s.push_back(v);
            }
            break;
        }
        default: throw Error("unsupported Cartan type");
    }
    return s;
}

}  // namespace

Rational RootSystem::dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational r;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

std::vector<Rational> RootSystem::reflect(int r, const std::vector<Rational>& v) const {
    const auto& alpha = roots_[r];
    Rational f = 2 * dot(alpha, v) / norm2_[r];
    std::vector<Rational> out = v;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= f * alpha[i];
    return out;
}

int RootSystem::root_index(const std::vector<Rational>& v) const {
    auto it = std::lower_bound(roots_.begin(), roots_.end(), v);
    if (it == roots_.end() || *it != v) return -1;
    return static_cast<int>(it - roots_.begin());
}

RootSystem::RootSystem(CartanType type) : type_(type) { build(); }

void RootSystem::build() {
    auto simples = simple_roots(type_, ambient_);
    int n = type_.rank;

    // Close the simple roots under all simple reflections.
    std::map<std::vector<Rational>, int> seen;
    std::vector<std::vector<Rational>> work = simples;
    for (auto& v : work) seen.emplace(v, 0);
    for (size_t head = 0; head < work.size(); ++head) {
        auto cur = work[head];
        for (int i = 0; i < n; ++i) {
            const auto& alpha = simples[i];
            Rational f = 2 * dot(alpha, cur) / dot(alpha, alpha);
            auto img = cur;
            for (size_t k = 0; k < img.size(); ++k) img[k] -= f * alpha[k];
            if (seen.emplace(img, 0).second) work.push_back(img);
        }
    }
    roots_.assign(work.begin(), work.end());
    std::sort(roots_.begin(), roots_.end());

    norm2_.resize(roots_.size());
    for (size_t i = 0; i < roots_.size(); ++i) {
        norm2_[i] = dot(roots_[i], roots_[i]);
        if (norm2_[i] != 1 && norm2_[i] != 2 && norm2_[i] != 6)
            throw Error("unexpected root length in " + type_.str());
    }

    simple_.resize(n);
    for (int i = 0; i < n; ++i) {
        simple_[i] = root_index(simples[i]);
        if (simple_[i] < 0) throw Error("simple root lost during closure (bug)");
    }

    // Permutations of the root set and ambient reflection matrices.
    simple_perm_.assign(n, std::vector<int>(roots_.size()));
    simple_mat_.assign(n, RatMatrix());
    for (int i = 0; i < n; ++i) {
        int ri = simple_[i];
        for (size_t r = 0; r < roots_.size(); ++r) {
            int img = root_index(reflect(ri, roots_[r]));
            if (img < 0) throw Error("root set not closed under reflection (bug)");
            simple_perm_[i][r] = img;
        }
        // Bijectivity check.
        std::vector<char> hit(roots_.size(), 0);
        for (int img : simple_perm_[i]) {
            if (hit[img]) throw Error("simple reflection is not a bijection on roots (bug)");
            hit[img] = 1;
        }
        RatMatrix m = RatMatrix::identity(ambient_);
        const auto& alpha = roots_[ri];
        for (int a = 0; a < ambient_; ++a)
            for (int b = 0; b < ambient_; ++b)
                m.at(a, b) -= 2 * alpha[a] * alpha[b] / norm2_[ri];
        // The reflection must preserve the bilinear form: M^T M = I.
        RatMatrix mt(ambient_, ambient_);
        for (int a = 0; a < ambient_; ++a)
            for (int b = 0; b < ambient_; ++b) mt.at(a, b) = m.at(b, a);
        if (!(mt * m == RatMatrix::identity(ambient_)))
            throw Error("reflection does not preserve the form (bug)");
        simple_mat_[i] = std::move(m);
    }

    // Coxeter matrix from the geometry: order of s_i s_j on the root set.
    coxeter_.assign(n, std::vector<int>(n, 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) { coxeter_[i][j] = 1; continue; }
            std::vector<int> cur(roots_.size());
            for (size_t r = 0; r < roots_.size(); ++r) cur[r] = static_cast<int>(r);
            int order = 0;
            while (true) {
                for (auto& r : cur) r = simple_perm_[i][simple_perm_[j][r]];
                ++order;
                bool ident = true;
                for (size_t r = 0; r < roots_.size() && ident; ++r)
                    ident = cur[r] == static_cast<int>(r);
                if (ident) break;
                if (order > 6) throw Error("Coxeter entry above 6 (bug)");
            }
            if (order != 2 && order != 3 && order != 4 && order != 6)
                throw Error("non-crystallographic Coxeter entry (bug)");
            coxeter_[i][j] = order;
        }
    }

    degrees_ = degree_table(type_);
    long sum = 0;
    for (long d : degrees_) sum += d - 1;
    if (sum != num_positive())
        throw Error("degree table inconsistent with root count for " + type_.str());
}

}  // namespace sfd
