#include "wzpi/polynomial.hpp"

#include "wzpi/errors.hpp"

#include <algorithm>
#include <utility>

namespace wzpi {

namespace {

const Exponents kZeroExponents{};

BigInt abs_big(const BigInt& x) { return abs(x); }

} // namespace

Polynomial::Polynomial(const BigRational& c) {
    if (c != 0) terms_.emplace(kZeroExponents, c);
}

Polynomial Polynomial::variable(Var v) {
    Exponents e{};
    e[slot(v)] = 1;
    return monomial(1, e);
}

Polynomial Polynomial::monomial(const BigRational& c, const Exponents& e) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

Polynomial Polynomial::linear(Var v, const BigRational& c1, const BigRational& c0) {
    Polynomial p(c0);
    Exponents e{};
    e[slot(v)] = 1;
    p.add_term(e, c1);
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExponents);
}

BigRational Polynomial::constant_value() const {
    if (!is_constant()) throw UsageError("constant_value of a non-constant polynomial");
    return terms_.empty() ? BigRational(0) : terms_.begin()->second;
}

BigRational Polynomial::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
}

int Polynomial::degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[slot(v)]);
    return d;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

VarMask Polynomial::vars() const {
    VarMask m = 0;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (e[i] != 0) m = static_cast<VarMask>(m | (1u << i));
    return m;
}

BigRational Polynomial::leading_coefficient() const {
    return terms_.empty() ? BigRational(0) : terms_.begin()->second;
}

const Exponents& Polynomial::leading_exponents() const {
    return terms_.empty() ? kZeroExponents : terms_.begin()->first;
}

std::vector<Polynomial> Polynomial::coefficients(Var v) const {
    std::vector<Polynomial> out(static_cast<std::size_t>(std::max(0, degree(v) + 1)));
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        const auto power = rest[slot(v)];
        rest[slot(v)] = 0;
        out[power].terms_.emplace(rest, c);
    }
    return out;
}

Polynomial Polynomial::from_coefficients(Var v, const std::vector<Polynomial>& coeffs) {
    Polynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (const auto& [e, c] : coeffs[i].terms_) {
            Exponents shifted = e;
            shifted[slot(v)] = static_cast<std::uint16_t>(shifted[slot(v)] + i);
            p.add_term(shifted, c);
        }
    }
    return p;
}

Polynomial Polynomial::leading_coefficient_in(Var v) const {
    if (terms_.empty()) return {};
    return coefficients(v).back();
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
    if (!involves(v)) return *this;
    const auto coeffs = coefficients(v);
    Polynomial r = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        r *= value;
        r += coeffs[i];
    }
    return r;
}

Polynomial Polynomial::shift(Var v, const BigRational& c) const {
    if (c == 0) return *this;
    return substitute(v, linear(v, 1, c));
}

Polynomial Polynomial::evaluate(Var v, const BigRational& value) const {
    return substitute(v, Polynomial(value));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e != 0) base *= base;
    }
    return result;
}

std::pair<BigRational, Polynomial> Polynomial::unit_normal() const {
    if (terms_.empty()) return {BigRational(1), Polynomial()};
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    BigRational unit = rational(num_gcd, den_lcm);
    if (leading_coefficient() < 0) unit = -unit;
    Polynomial q = *this;
    const BigRational inv = 1 / unit;
    q *= inv;
    return {unit, std::move(q)};
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

void Polynomial::add_term(const Exponents& e, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    if (b.is_constant()) {
        r = a;
        r *= b.constant_value();
        return r;
    }
    if (a.is_constant()) {
        r = b;
        r *= a.constant_value();
        return r;
    }
    // Multiply over Z with common denominators, then rescale once per term.
    auto common_denominator = [](const Polynomial& p) {
        BigInt d = 1;
        for (const auto& [e, c] : p.terms_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
        return d;
    };
    auto scaled = [](const Polynomial& p, const BigInt& d) {
        std::vector<std::pair<Exponents, BigInt>> out;
        out.reserve(p.terms_.size());
        for (const auto& [e, c] : p.terms_) out.emplace_back(e, c.get_num() * (d / c.get_den()));
        return out;
    };
    const BigInt da = common_denominator(a), db = common_denominator(b);
    const auto sa = scaled(a, da), sb = scaled(b, db);
    std::map<Exponents, BigInt, std::greater<>> acc;
    for (const auto& [ea, ca] : sa) {
        for (const auto& [eb, cb] : sb) {
            Exponents e;
            for (std::size_t i = 0; i < kVarCount; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            auto [it, inserted] = acc.try_emplace(e);
            mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    const BigInt den = da * db;
    for (const auto& [e, c] : acc) {
        if (c == 0) continue;
        BigRational q(c, den);
        q.canonicalize();
        r.terms_.emplace_hint(r.terms_.end(), e, std::move(q));
    }
    return r;
}

std::string Polynomial::to_string(const VarNames& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const BigRational mag = abs(c);
        std::string piece;
        if (mono.empty()) piece = wzpi::to_string(mag);
        else if (mag == 1) piece = mono;
        else piece = wzpi::to_string(mag) + "*" + mono;
        if (first) out += (c < 0 ? "-" : "") + piece;
        else out += (c < 0 ? "-" : "+") + piece;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------- algorithms

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.is_zero()) return Polynomial();
    if (b.is_constant()) {
        Polynomial q = a;
        q *= 1 / b.constant_value();
        return q;
    }
    std::array<int, kVarCount> max_quot{};
    for (std::size_t i = 0; i < kVarCount; ++i) {
        const Var v = static_cast<Var>(i);
        max_quot[i] = a.degree(v) - b.degree(v);
        if (max_quot[i] < 0) return std::nullopt;
    }
    const Exponents& lb = b.leading_exponents();
    const BigRational lcb = b.leading_coefficient();
    Polynomial q;
    Polynomial r = a;
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        Exponents diff;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            const int d = static_cast<int>(lr[i]) - static_cast<int>(lb[i]);
            if (d < 0 || d > max_quot[i]) return std::nullopt;
            diff[i] = static_cast<std::uint16_t>(d);
        }
        const Polynomial t = Polynomial::monomial(r.leading_coefficient() / lcb, diff);
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw UsageError("inexact polynomial division");
    return *std::move(q);
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var x) {
    if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
    auto A = a.coefficients(x);
    const auto B = b.coefficients(x);
    const std::size_t db = B.size() - 1;
    const Polynomial& lcb = B.back();
    auto trim = [&A] {
        while (!A.empty() && A.back().is_zero()) A.pop_back();
    };
    trim();
    while (!A.empty() && A.size() - 1 >= db) {
        const std::size_t da = A.size() - 1;
        const Polynomial lca = A.back();
        for (auto& c : A) c *= lcb;
        for (std::size_t j = 0; j <= db; ++j) A[da - db + j] -= lca * B[j];
        trim();
    }
    return Polynomial::from_coefficients(x, A);
}

Polynomial content_in(const Polynomial& p, Var x) {
    Polynomial g;
    for (const auto& c : p.coefficients(x)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

namespace {

Polynomial primitive_part(const Polynomial& p, Var x) {
    if (p.is_zero()) return p;
    return exact_quotient(p, content_in(p, x));
}

Var first_var(VarMask m) {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (m & (1u << i)) return static_cast<Var>(i);
    throw UsageError("empty variable mask");
}

} // namespace

namespace {

BigInt max_norm(const Polynomial& p) {
    BigInt m = 0;
    for (const auto& [e, c] : p.terms()) {
        const BigInt v = abs(c.get_num());
        if (v > m) m = v;
    }
    return m;
}

BigInt integer_content(const Polynomial& p) {
    BigInt g = 0;
    for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    return g;
}

// Symmetric residue of every coefficient modulo m.
Polynomial symmetric_mod(const Polynomial& h, const BigInt& m) {
    Polynomial out;
    const BigInt half = m / 2;
    for (const auto& [e, c] : h.terms()) {
        BigInt r = c.get_num() % m;
        if (r < 0) r += m;
        if (r > half) r -= m;
        if (r != 0) out += Polynomial::monomial(BigRational(r), e);
    }
    return out;
}

std::optional<Polynomial> heuristic_gcd(const Polynomial& f, const Polynomial& g);

// Heuristic gcd (Char, Geddes, Gonnet) of primitive integer polynomials:
// evaluate the main variable at a large integer, recurse, rebuild the
// candidate xi-adically and accept it only if it divides both inputs.
std::optional<Polynomial> heuristic_gcd_primitive(const Polynomial& f, const Polynomial& g) {
    const VarMask vars = static_cast<VarMask>(f.vars() | g.vars());
    if (vars == 0) return Polynomial(1);
    Var x = Var::N;
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (vars & (1u << i)) {
            x = static_cast<Var>(i);
            break;
        }
    const BigInt bound = std::min(max_norm(f), max_norm(g));
    BigInt xi = 2 * bound + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const Polynomial fe = f.evaluate(x, BigRational(xi));
        const Polynomial ge = g.evaluate(x, BigRational(xi));
        if (!fe.is_zero() && !ge.is_zero()) {
            const auto h = heuristic_gcd(fe, ge);
            if (!h) return std::nullopt;
            Polynomial rest = *h;
            Polynomial candidate;
            Polynomial xpow(1);
            const Polynomial xv = Polynomial::variable(x);
            while (!rest.is_zero()) {
                const Polynomial digit = symmetric_mod(rest, xi);
                candidate += digit * xpow;
                rest -= digit;
                rest *= BigRational(1) / BigRational(xi);
                xpow *= xv;
            }
            if (!candidate.is_zero()) {
                candidate = candidate.unit_normal().second;
                if (divide_exact(f, candidate) && divide_exact(g, candidate)) return candidate;
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

// Integer-content-aware gcd over Z[vars].
std::optional<Polynomial> heuristic_gcd(const Polynomial& f, const Polynomial& g) {
    const BigInt cf = integer_content(f);
    const BigInt cg = integer_content(g);
    BigInt c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    Polynomial pf = f;
    Polynomial pg = g;
    pf *= BigRational(1) / BigRational(cf);
    pg *= BigRational(1) / BigRational(cg);
    if (pf.leading_coefficient() < 0) pf = -pf;
    if (pg.leading_coefficient() < 0) pg = -pg;
    auto h = heuristic_gcd_primitive(pf, pg);
    if (!h) return std::nullopt;
    *h *= BigRational(c);
    return h;
}

Polynomial prs_gcd(const Polynomial& a, const Polynomial& b);

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.unit_normal().second;
    if (b.is_zero()) return a.unit_normal().second;
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return a.unit_normal().second;
    const Polynomial pa = a.unit_normal().second;
    const Polynomial pb = b.unit_normal().second;
    if (auto h = heuristic_gcd_primitive(pa, pb)) return h->unit_normal().second;
    return prs_gcd(pa, pb);
}

namespace {

Polynomial prs_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.unit_normal().second;
    if (b.is_zero()) return a.unit_normal().second;
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return a.unit_normal().second;

    const Var x = first_var(static_cast<VarMask>(a.vars() | b.vars()));
    if (!a.involves(x)) return poly_gcd(a, content_in(b, x));
    if (!b.involves(x)) return poly_gcd(content_in(a, x), b);

    const Polynomial ca = content_in(a, x);
    const Polynomial cb = content_in(b, x);
    const Polynomial g = poly_gcd(ca, cb);
    Polynomial p = exact_quotient(a, ca);
    Polynomial q = exact_quotient(b, cb);
    if (p.degree(x) < q.degree(x)) std::swap(p, q);
    // Primitive polynomial remainder sequence.
    while (!q.is_zero() && q.degree(x) > 0) {
        Polynomial r = pseudo_remainder(p, q, x);
        p = std::move(q);
        q = primitive_part(r, x);
    }
    const Polynomial h = q.is_zero() ? primitive_part(p, x) : Polynomial(1);
    return (g * h).unit_normal().second;
}

} // namespace

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return (exact_quotient(a, poly_gcd(a, b)) * b).unit_normal().second;
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, Var x) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto A = a.coefficients(x);
    const auto B = b.coefficients(x);
    const std::size_t m = A.size() - 1;
    const std::size_t n = B.size() - 1;
    if (m == 0 && n == 0) return Polynomial(1);
    if (m == 0) return A[0].pow(static_cast<unsigned>(n));
    if (n == 0) return B[0].pow(static_cast<unsigned>(m));

    const std::size_t size = m + n;
    std::vector<std::vector<Polynomial>> M(size, std::vector<Polynomial>(size));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) M[i][i + j] = A[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) M[n + i][i + j] = B[n - j];

    // Fraction-free (Bareiss) determinant.
    int sign = 1;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < size && M[pivot][k].is_zero()) ++pivot;
            if (pivot == size) return {};
            std::swap(M[k], M[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                M[i][j] = exact_quotient(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = Polynomial();
        }
        prev = M[k][k];
    }
    Polynomial det = M[size - 1][size - 1];
    if (sign < 0) det = -det;
    return det;
}

namespace {

BigInt horner(const std::vector<BigInt>& c, const BigInt& x) {
    BigInt r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

// Positive divisors of |n| up to `limit`, from trial-division factorization.
BigInt horner_mod(const std::vector<BigInt>& c, const BigInt& x, const BigInt& m) {
    BigInt r = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        r = r * x + c[i];
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    }
    return r;
}

std::vector<BigInt> derivative(const std::vector<BigInt>& c) {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
    return d;
}

// Integer roots of a square-free integer polynomial with |root| <= bound:
// roots modulo a small prime at which every root is simple, lifted by
// Newton iteration until the modulus exceeds 2 * bound.
std::optional<std::vector<BigInt>> hensel_integer_roots(const std::vector<BigInt>& c, const BigInt& bound) {
    const auto dc = derivative(c);
    BigInt prime = 1009;
    for (int attempt = 0; attempt < 40; ++attempt, mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t())) {
        if (c.back() % prime == 0) continue;
        std::vector<BigInt> residues;
        bool simple = true;
        const unsigned long pl = prime.get_ui();
        for (unsigned long r = 0; r < pl && simple; ++r) {
            const BigInt br(r);
            if (horner_mod(c, br, prime) != 0) continue;
            if (horner_mod(dc, br, prime) == 0) simple = false;
            residues.push_back(br);
        }
        if (!simple) continue;
        std::vector<BigInt> roots;
        const BigInt target = 2 * bound + 1;
        for (BigInt r : residues) {
            BigInt m = prime;
            while (m <= target) {
                m *= m;
                const BigInt fr = horner_mod(c, r, m);
                BigInt inv;
                const BigInt dr = horner_mod(dc, r, m);
                if (mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), m.get_mpz_t()) == 0) break;
                r = r - fr * inv;
                mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
            }
            if (r > m / 2) r -= m;
            if (horner(c, r) == 0) roots.push_back(r);
        }
        return roots;
    }
    return std::nullopt;
}


} // namespace

std::vector<BigInt> integer_roots(const Polynomial& p, Var x) {
    if (p.is_zero()) throw DomainError("integer_roots of the zero polynomial");
    // Group by the monomial in the other variables; a root must annihilate every group.
    std::map<Exponents, Polynomial, std::greater<>> groups;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        Exponents xe{};
        xe[slot(x)] = e[slot(x)];
        rest[slot(x)] = 0;
        groups[rest] += Polynomial::monomial(c, xe);
    }
    Polynomial f;
    for (const auto& [e, g] : groups) f = poly_gcd(f, g);
    std::vector<BigInt> roots;
    if (f.is_constant()) return roots;

    const auto coeffs_poly = f.coefficients(x);
    std::vector<BigInt> c;
    c.reserve(coeffs_poly.size());
    for (const auto& q : coeffs_poly) c.push_back(q.constant_value().get_num()); // f is integer-primitive
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (c.size() == 1) return roots;

    const BigInt lead = abs_big(c.back());
    BigInt max_ratio = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        BigInt q;
        mpz_cdiv_q(q.get_mpz_t(), abs_big(c[i]).get_mpz_t(), lead.get_mpz_t());
        max_ratio = std::max(max_ratio, q);
    }
    const BigInt bound = max_ratio + 1;
    const BigInt& a0 = c.front();

    auto test = [&](const BigInt& r) {
        if (horner(c, r) == 0) roots.push_back(r);
    };
    if (bound <= 2000) {
        for (long r = 1; r <= bound.get_si(); ++r) {
            if (mpz_divisible_ui_p(a0.get_mpz_t(), static_cast<unsigned long>(r)) == 0) continue;
            test(BigInt(r));
            test(BigInt(-r));
        }
    } else {
        // Work with the square-free part so every root is simple.
        const Polynomial fx = Polynomial::from_coefficients(x, [&] {
            std::vector<Polynomial> v;
            for (const auto& q : c) v.emplace_back(BigRational(q));
            return v;
        }());
        std::vector<Polynomial> dv;
        for (std::size_t i = 1; i < c.size(); ++i) dv.emplace_back(BigRational(c[i] * static_cast<unsigned long>(i)));
        const Polynomial sf = exact_quotient(fx, poly_gcd(fx, Polynomial::from_coefficients(x, dv))).unit_normal().second;
        std::vector<BigInt> sc;
        for (const auto& q : sf.coefficients(x)) sc.push_back(q.constant_value().get_num());
        const auto found = hensel_integer_roots(sc, bound);
        if (!found) throw DomainError("integer root search found no suitable prime");
        for (const auto& r : *found)
            if (r != 0) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::set<long> dispersion_set(const Polynomial& p, const Polynomial& q, Var n) {
    if (p.is_zero() || q.is_zero()) throw DomainError("dispersion_set of a zero polynomial");
    std::set<long> out;
    if (p.degree(n) <= 0 || q.degree(n) <= 0) return out;
    const Polynomial shifted = q.substitute(n, Polynomial::variable(n) + Polynomial::variable(Var::J));
    const Polynomial res = resultant(p, shifted, n);
    if (res.is_zero()) throw UsageError("dispersion resultant vanished identically");
    for (const auto& r : integer_roots(res, Var::J))
        if (r >= 0) out.insert(r.get_si());
    return out;
}

} // namespace wzpi
