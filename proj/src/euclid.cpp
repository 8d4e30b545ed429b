#include "graded/euclid.hpp"

#include <stdexcept>

namespace graded::euclid {

std::string GaussianInt::to_string() const {
    std::string s = re.str();
    if (im != 0) {
        s += (im > 0 ? "+" : "-");
        Int a = im < 0 ? Int(-im) : im;
        if (a != 1) s += a.str();
        s += "i";
    }
    return s;
}

Int norm(const GaussianInt& a) { return a.re * a.re + a.im * a.im; }
GaussianInt conj(const GaussianInt& a) { return {a.re, -a.im}; }
GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re + b.re, a.im + b.im};
}
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
}
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool gi_is_unit(const GaussianInt& a) { return norm(a) == 1; }

GaussianInt canonical_associate(const GaussianInt& a) {
    if (a.is_zero()) return a;
    GaussianInt z = a;
    for (int k = 0; k < 4; ++k) {
        if (z.re > 0 && z.im >= 0) return z;
        z = GaussianInt(-z.im, z.re); // multiply by i
    }
    throw std::logic_error("no canonical associate found");
}

namespace {

// round(num/den) for den > 0, exact
Int nearest_div(const Int& num, const Int& den) {
    Int two_num = 2 * num + den;
    Int q = two_num / (2 * den);
    if (two_num < 0 && two_num % (2 * den) != 0) --q; // floor for negatives
    return q;
}

} // namespace

std::pair<GaussianInt, GaussianInt> gi_divmod(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::invalid_argument("gaussian division by zero");
    Int n = norm(b);
    GaussianInt t = a * conj(b);
    GaussianInt q{nearest_div(t.re, n), nearest_div(t.im, n)};
    GaussianInt r = a - q * b;
    return {q, r};
}

bool gi_divides(const GaussianInt& a, const GaussianInt& b) {
    if (a.is_zero()) throw std::invalid_argument("gi_divides: divisor is zero");
    return gi_divmod(b, a).second.is_zero();
}

GaussianInt gi_gcd(GaussianInt a, GaussianInt b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gi_gcd: both arguments zero");
    while (!b.is_zero()) {
        GaussianInt r = gi_divmod(a, b).second;
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

std::vector<std::pair<Int, int>> int_factor(Int n) {
    if (n <= 0) throw std::invalid_argument("int_factor: argument must be positive");
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::pair<GaussianInt, int>> gi_factor(const GaussianInt& a) {
    if (a.is_zero()) throw std::invalid_argument("gi_factor: argument is zero");
    std::vector<GaussianInt> candidates;
    for (auto& [p, e] : int_factor(norm(a))) {
        if (p == 2) {
            candidates.push_back(GaussianInt(1, 1));
        } else if (p % 4 == 3) {
            candidates.push_back(GaussianInt(Int(p), Int(0)));
        } else {
            // split prime: find k with k^2 = -1 mod p, then gcd(p, k+i)
            Int k = 0;
            for (Int t = 2; t < p; ++t)
                if ((t * t) % p == p - 1) {
                    k = t;
                    break;
                }
            GaussianInt pi = gi_gcd(GaussianInt(Int(p), Int(0)), GaussianInt(k, Int(1)));
            candidates.push_back(pi);
            candidates.push_back(canonical_associate(conj(pi)));
        }
    }
    std::vector<std::pair<GaussianInt, int>> out;
    GaussianInt rest = a;
    for (const GaussianInt& pi : candidates) {
        int e = 0;
        while (gi_divides(pi, rest)) {
            rest = gi_divmod(rest, pi).first;
            ++e;
        }
        if (e) out.emplace_back(pi, e);
    }
    if (!gi_is_unit(rest)) throw std::logic_error("gi_factor: factorization incomplete");
    // multiply-back audit
    GaussianInt check = rest;
    for (auto& [pi, e] : out)
        for (int i = 0; i < e; ++i) check = check * pi;
    if (!(check == a)) throw std::logic_error("gi_factor: product check failed");
    return out;
}

bool gi_member(const GaussianInt& x, const GaussianInt& c) {
    if (c.is_zero()) return x.is_zero();
    return gi_divides(c, x);
}

GaussianInt gi_stable_colon(GaussianInt c, const GaussianInt& t) {
    if (c.is_zero() || t.is_zero())
        throw std::invalid_argument("gi_stable_colon: zero argument");
    for (;;) {
        GaussianInt g = gi_gcd(c, t);
        if (gi_is_unit(g)) break;
        c = gi_divmod(c, g).first;
    }
    return canonical_associate(c);
}

bool gi_rad_member(const GaussianInt& x, const GaussianInt& c) {
    for (auto& [pi, e] : gi_factor(c))
        if (!gi_divides(pi, x)) return false;
    return true;
}

IntPoly::IntPoly(std::vector<Int> c) : coeffs(std::move(c)) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPoly IntPoly::monomial(Int a, int deg) {
    if (a == 0) return IntPoly();
    std::vector<Int> c(deg + 1, Int(0));
    c[deg] = std::move(a);
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        if (coeffs[d] == 0) continue;
        if (!s.empty()) s += coeffs[d] > 0 ? "+" : "";
        if (d == 0 || (coeffs[d] != 1 && coeffs[d] != -1))
            s += coeffs[d].str();
        else if (coeffs[d] == -1)
            s += "-";
        if (d >= 1) s += "X";
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntPoly(std::move(c));
}

bool poly_member(const IntPoly& f, const Int& c, int d) {
    if (c == 0) throw std::invalid_argument("poly_member: zero coefficient generator");
    if (f.is_zero()) return true;
    for (int i = 0; i < d; ++i)
        if (f.coeff(i) != 0) return false;
    for (const Int& a : f.coeffs)
        if (a % c != 0) return false;
    return true;
}

bool poly_homog_grad_member(const Int& a, int m, const Int& c, int d) {
    if (c == 0) throw std::invalid_argument("poly_homog_grad_member: zero generator");
    if (a == 0) return true;
    if (d > 0 && m < 1) return false;
    Int ca = c < 0 ? Int(-c) : c;
    Int aa = a < 0 ? Int(-a) : a;
    for (auto& [p, e] : int_factor(ca))
        if (aa % p != 0) return false;
    return true;
}

std::vector<WitnessFact> verify_witness_facts() {
    std::vector<WitnessFact> out;
    auto fact = [&](std::string desc, bool holds) {
        out.push_back(WitnessFact{std::move(desc), holds});
    };

    const GaussianInt ten(10, 0);
    const GaussianInt two(2, 0);
    const GaussianInt seven_minus_i(7, -1);
    const GaussianInt seven_plus_i(7, 1);

    GaussianInt prod = seven_minus_i * seven_plus_i;
    fact("(7-i)(7+i) = 50 is nonzero and lies in (10) in Z[i]",
         !prod.is_zero() && gi_member(prod, ten));

    GaussianInt stable = gi_stable_colon(ten, two);
    fact("7-i lies outside ((10) : 2^inf) in Z[i]", !gi_divides(stable, seven_minus_i));

    // rad((10)) is generated by the product of the distinct primes of 10
    GaussianInt radgen(1, 0);
    for (auto& [pi, e] : gi_factor(ten)) radgen = radgen * pi;
    GaussianInt rad_stable = gi_stable_colon(radgen, two);
    fact("7+i lies outside (rad((10)) : 2^inf) in Z[i]",
         !gi_divides(rad_stable, seven_plus_i));

    fact("18X lies in (9X) in Z[X]", poly_member(IntPoly::monomial(18, 1), 9, 1));
    fact("18 lies outside (9X) in Z[X]", !poly_member(IntPoly::monomial(18, 0), 9, 1));
    fact("X lies outside Grad((9X)) for the degree grading of Z[X]",
         !poly_homog_grad_member(1, 1, 9, 1));
    fact("27X lies in (9X) in Z[X]", poly_member(IntPoly::monomial(27, 1), 9, 1));
    fact("27 lies outside (9X) in Z[X]", !poly_member(IntPoly::monomial(27, 0), 9, 1));
    return out;
}

} // namespace graded::euclid
