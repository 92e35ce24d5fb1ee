#include "sfd/cyclotomic.hpp"

#include <array>
#include <numeric>

namespace sfd {

namespace {

long gcd_l(long a, long b) { return std::gcd(a, b); }

struct PrimePower {
    long p, q;       // p^a = q
    long crt_unit;   // e_q mod n: 1 mod q, 0 mod n/q
};

std::vector<std::pair<long, long>> factorize(long n) {
    std::vector<std::pair<long, long>> f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        long q = 1;
        while (n % p == 0) { n /= p; q *= p; }
        f.push_back({p, q});
    }
    if (n > 1) f.push_back({n, n});
    return f;
}

long mod_inverse(long a, long m) {
    long t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        long qt = r / nr;
        std::swap(t -= qt * nt, nt);
        std::swap(r -= qt * nr, nr);
    }
    if (r != 1) throw Error("mod_inverse: arguments are not coprime");
    return t < 0 ? t + m : t;
}

std::vector<PrimePower> prime_powers(long n) {
    std::vector<PrimePower> out;
    for (auto [p, q] : factorize(n)) {
        PrimePower pp{p, q, 0};
        if (q == n) {
            pp.crt_unit = 1 % n;
        } else {
            long m = n / q;  // coprime to q
            pp.crt_unit = (m % n) * mod_inverse(m % q, q) % n;
        }
        out.push_back(pp);
    }
    return out;
}

}  // namespace

Cyclotomic::Cyclotomic(long conductor) : n_(conductor) {
    if (conductor <= 0) throw Error("cyclotomic conductor must be positive");
}

Cyclotomic Cyclotomic::zeta_power(long n, long k, const Rational& c) {
    Cyclotomic x(n);
    x.add_term(((k % n) + n) % n, c);
    x.reduce();
    return x;
}

Cyclotomic Cyclotomic::from_rational(long n, const Rational& c) {
    return zeta_power(n, 0, c);
}

bool Cyclotomic::is_rational() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rational Cyclotomic::rational_part_checked() const {
    if (c_.empty()) return Rational(0);
    if (!is_rational()) throw Error("cyclotomic value is irrational: " + str());
    return c_.begin()->second;
}

Cyclotomic Cyclotomic::embedded(long m) const {
    if (m % n_) throw Error("embedded: new conductor must be a multiple");
    long f = m / n_;
    Cyclotomic out(m);
    for (const auto& [e, c] : c_) out.add_term(e * f, c);
    out.reduce();
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long m = std::lcm(n_, o.n_);
    Cyclotomic a = embedded(m), b = o.embedded(m);
    for (const auto& [e, c] : b.c_) a.add_term(e, c);
    a.reduce();
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(n_);
    for (const auto& [e, c] : c_) out.c_[e] = -c;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long m = std::lcm(n_, o.n_);
    Cyclotomic a = embedded(m), b = o.embedded(m);
    Cyclotomic out(m);
    for (const auto& [e1, c1] : a.c_)
        for (const auto& [e2, c2] : b.c_) out.add_term((e1 + e2) % m, c1 * c2);
    out.reduce();
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    long m = std::lcm(n_, o.n_);
    return embedded(m).c_ == o.embedded(m).c_;
}

Cyclotomic Cyclotomic::galois(long j) const {
    j = ((j % n_) + n_) % n_;
    if (gcd_l(j, n_) != 1) throw Error("galois: exponent not coprime to conductor");
    Cyclotomic out(n_);
    for (const auto& [e, c] : c_) out.add_term(e * j % n_, c);
    out.reduce();
    return out;
}

void Cyclotomic::add_term(long e, const Rational& c) {
    if (c == 0) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

void Cyclotomic::reduce() {
    if (n_ == 1) return;
    static thread_local std::map<long, std::vector<PrimePower>> cache;
    auto itc = cache.find(n_);
    if (itc == cache.end()) itc = cache.emplace(n_, prime_powers(n_)).first;
    const auto& pps = itc->second;

    // add_term can erase cancelled entries anywhere in the map, so restart
    // the scan after every rewrite instead of holding iterators across it.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = c_.begin(); it != c_.end(); ++it) {
            long e = it->first;
            const PrimePower* hit = nullptr;
            for (const auto& pp : pps) {
                long digit = (e % pp.q) / (pp.q / pp.p);
                if (digit == pp.p - 1) { hit = &pp; break; }
            }
            if (!hit) continue;
            // zeta_q^r = -sum_{i<p-1} zeta_q^{r - (digit-i)*step}; splice the
            // replacement into the full exponent through the CRT unit.
            long step = hit->q / hit->p;
            long digit = (e % hit->q) / step;
            Rational c = it->second;
            c_.erase(it);
            for (long i = 0; i < hit->p - 1; ++i) {
                long delta = (i - digit) * step;  // negative
                long e2 = (e + ((delta % n_) + n_) % n_ * (hit->crt_unit % n_)) % n_;
                add_term(((e2 % n_) + n_) % n_, -c);
            }
            changed = true;
            break;
        }
    }
}

std::string Cyclotomic::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : c_) {
        if (!out.empty()) out += " + ";
        out += c.get_str();
        if (e > 0) out += "*z" + std::to_string(n_) + "^" + std::to_string(e);
    }
    return out;
}

std::pair<QuadField, QuadField> to_quadfield_pair(const Cyclotomic& v) {
    if (v.is_rational()) return {QuadField(v.rational_part_checked()), QuadField()};
    Cyclotomic conj = v.conj();
    Cyclotomic twice_re = v + conj;
    Cyclotomic minus_i = Cyclotomic::zeta_power(4, 3);
    Cyclotomic twice_im = (v - conj) * minus_i;
    QuadField a = twice_re.to_quadfield();
    QuadField b = twice_im.to_quadfield();
    Rational half(1, 2);
    QuadField ha, hb;
    for (int m = 0; m < 8; ++m) {
        ha.coeff(m) = a.coeff(m) * half;
        hb.coeff(m) = b.coeff(m) * half;
    }
    return {ha, hb};
}

std::string field_literal(const Cyclotomic& v) {
    auto [re, im] = to_quadfield_pair(v);
    if (im.is_zero()) return re.str();
    std::string ims = im.str();
    // suffix every term of the imaginary literal with 'i'
    std::string out;
    for (size_t k = 0; k < ims.size(); ++k) {
        if ((ims[k] == '+' || ims[k] == '-') && k > 0) out += 'i';
        out += ims[k];
    }
    out += 'i';
    if (!re.is_zero()) {
        std::string res = re.str();
        if (out[0] != '-' && out[0] != '+') res += '+';
        out = res + out;
    }
    return out;
}

Cyclotomic parse_field_literal(const std::string& text) {
    if (text.empty()) throw ParseError("empty field literal");
    // split into top-level signed terms, peel trailing 'i' markers
    std::string real_part, imag_part;
    size_t i = 0;
    while (i < text.size()) {
        size_t start = i;
        if (text[i] == '+' || text[i] == '-') ++i;
        while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
        std::string term = text.substr(start, i - start);
        bool imaginary = !term.empty() && term.back() == 'i';
        if (imaginary) term.pop_back();
        std::string& dst = imaginary ? imag_part : real_part;
        if (term.empty() || term == "+" || term == "-") term += "1";
        if (!dst.empty() && term[0] != '+' && term[0] != '-') dst += '+';
        dst += term;
    }
    QuadField re = real_part.empty() ? QuadField() : QuadField::parse(real_part);
    QuadField im = imag_part.empty() ? QuadField() : QuadField::parse(imag_part);
    Cyclotomic out = Cyclotomic::from_quadfield(re);
    if (!im.is_zero())
        out += Cyclotomic::zeta_power(4, 1) * Cyclotomic::from_quadfield(im);
    return out;
}

Cyclotomic Cyclotomic::from_quadfield(const QuadField& x) {
    // sqrt2 = z8 + z8^-1, sqrt3 = z12 + z12^-1, sqrt5 = 2(z5 + z5^-1) + 1.
    auto sqrt_prime = [](int p) -> Cyclotomic {
        switch (p) {
            case 2: return zeta_power(8, 1) + zeta_power(8, 7);
            case 3: return zeta_power(12, 1) + zeta_power(12, 11);
            case 5: {
                Cyclotomic t = zeta_power(5, 1) + zeta_power(5, 4);
                return t + t + from_rational(1, 1);
            }
            default: throw Error("sqrt_prime: bad prime");
        }
    };
    Cyclotomic out(1);
    for (int m = 0; m < 8; ++m) {
        if (x.coeff(m) == 0) continue;
        Cyclotomic term = from_rational(1, x.coeff(m));
        for (int b = 0; b < 3; ++b)
            if (m & (1 << b)) term = term * sqrt_prime(b == 0 ? 2 : (b == 1 ? 3 : 5));
        out += term;
    }
    return out;
}

QuadField Cyclotomic::to_quadfield() const {
    if (is_rational()) return QuadField(rational_part_checked());
    long lc = std::lcm(n_, 120L);
    Cyclotomic y = embedded(lc);
    // Embeddings of sqrt2, sqrt3, sqrt5 at conductor lc.
    Cyclotomic roots[3] = {
        from_quadfield(QuadField::sqrt_of(2)).embedded(lc),
        from_quadfield(QuadField::sqrt_of(3)).embedded(lc),
        from_quadfield(QuadField::sqrt_of(5)).embedded(lc),
    };
    // For each sign pattern on (sqrt2,sqrt3,sqrt5) find a Galois element of
    // Q(zeta_lc) realizing it; average with characters to project onto each
    // basis coordinate.
    static thread_local std::map<long, std::array<long, 8>> js_cache;
    auto jit = js_cache.find(lc);
    if (jit == js_cache.end()) {
        std::array<long, 8> js{};
        for (int eps = 0; eps < 8; ++eps) {
            long found = -1;
            for (long j = 1; j < lc && found < 0; ++j) {
                if (gcd_l(j, lc) != 1) continue;
                bool ok = true;
                for (int b = 0; b < 3 && ok; ++b) {
                    Cyclotomic img = roots[b].galois(j);
                    bool flip = (eps >> b) & 1;
                    ok = (img == (flip ? -roots[b] : roots[b]));
                }
                if (ok) found = j;
            }
            if (found < 0) throw Error("to_quadfield: Galois pattern not realizable (bug)");
            js[eps] = found;
        }
        jit = js_cache.emplace(lc, js).first;
    }
    const auto& js = jit->second;
    std::array<Cyclotomic, 8> imgs{Cyclotomic(lc), Cyclotomic(lc), Cyclotomic(lc), Cyclotomic(lc),
                                   Cyclotomic(lc), Cyclotomic(lc), Cyclotomic(lc), Cyclotomic(lc)};
    for (int eps = 0; eps < 8; ++eps) imgs[eps] = y.galois(js[eps]);
    QuadField result;
    for (int m = 0; m < 8; ++m) {
        // The character average projects onto the q_m * basis(m) component;
        // dividing by the embedded basis element (square = radicand) gives q_m.
        Cyclotomic acc(lc);
        for (int eps = 0; eps < 8; ++eps) {
            // character chi_m(eps) = (-1)^{popcount(m & eps)}
            int par = __builtin_popcount(unsigned(m & eps)) & 1;
            acc += par ? -imgs[eps] : imgs[eps];
        }
        long radicand = 1;
        if (m != 0) {
            Cyclotomic b = from_quadfield(QuadField::basis(m)).embedded(lc);
            acc = acc * b;
            const int primes[3] = {2, 3, 5};
            for (int bbit = 0; bbit < 3; ++bbit)
                if (m & (1 << bbit)) radicand *= primes[bbit];
        }
        if (!acc.is_rational())
            throw Error("cyclotomic value does not lie in Q(r2,r3,r5): " + str());
        result.coeff(m) = acc.rational_part_checked() / (8 * radicand);
    }
    // Verify the reconstruction; catches values in larger real fields.
    if (from_quadfield(result).embedded(lc) != y)
        throw Error("cyclotomic value does not lie in Q(r2,r3,r5): " + str());
    return result;
}

}  // namespace sfd
