#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graded::euclid {

using Int = boost::multiprecision::cpp_int;

/// Exact Gaussian integer.  Results of gcd/factor are normalized to the
/// canonical associate with positive real part and nonnegative imaginary
/// part (units normalize to 1).
struct GaussianInt {
    Int re{0};
    Int im{0};

    GaussianInt() = default;
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r, long i) : re(r), im(i) {}

    bool operator==(const GaussianInt& o) const = default;
    bool is_zero() const { return re == 0 && im == 0; }
    std::string to_string() const;
};

Int norm(const GaussianInt& a);
GaussianInt conj(const GaussianInt& a);
GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

bool gi_is_unit(const GaussianInt& a);
GaussianInt canonical_associate(const GaussianInt& a);

/// Euclidean division: a = q*b + r with N(r) <= N(b)/2.
std::pair<GaussianInt, GaussianInt> gi_divmod(const GaussianInt& a, const GaussianInt& b);

bool gi_divides(const GaussianInt& a, const GaussianInt& b); // a | b, a != 0
GaussianInt gi_gcd(GaussianInt a, GaussianInt b);            // canonical associate

/// Gaussian prime factorization via factorization of the norm; the product
/// of the returned powers equals the input up to a unit (verified).
std::vector<std::pair<GaussianInt, int>> gi_factor(const GaussianInt& a);

/// x in (c) in Z[i]; c = 0 reads as membership in {0}.
bool gi_member(const GaussianInt& x, const GaussianInt& c);

/// Generator of the stabilized colon ((c) : t^inf): divide out gcd(c, t)
/// until coprime.  x lies in the stabilized colon iff the result divides x.
GaussianInt gi_stable_colon(GaussianInt c, const GaussianInt& t);

/// x in rad((c)): every prime factor of c divides x.
bool gi_rad_member(const GaussianInt& x, const GaussianInt& c);

/// Z[X] with arbitrary-precision coefficients, lowest degree first; the
/// canonical form carries no trailing zero coefficients.
struct IntPoly {
    std::vector<Int> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c);
    static IntPoly monomial(Int a, int deg);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs.empty(); }
    Int coeff(int d) const { return d <= degree() ? coeffs[d] : Int(0); }
    bool operator==(const IntPoly& o) const = default;
    std::string to_string() const;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

/// f in (c * X^d) in Z[X]: coefficients below degree d vanish and c divides
/// every coefficient.
bool poly_member(const IntPoly& f, const Int& c, int d);

/// a*X^m in Grad((c*X^d)) under the grading by monomial degree: some power
/// a^n X^{mn} lands in the ideal, i.e. (d = 0 or m >= 1) and every prime of
/// c divides a.
bool poly_homog_grad_member(const Int& a, int m, const Int& c, int d);

/// Prime factorization of a positive integer by trial division.
std::vector<std::pair<Int, int>> int_factor(Int n);

struct WitnessFact {
    std::string description;
    bool holds = false;
};

/// The fixed fact list backing the worked examples over Z[i] and Z[X]:
///   50 in (10);  7-i outside ((10):2^inf);  7+i outside (rad((10)):2^inf);
///   18X in (9X);  18 outside (9X);  X outside Grad((9X));
///   27X in (9X);  27 outside (9X).
std::vector<WitnessFact> verify_witness_facts();

} // namespace graded::euclid
