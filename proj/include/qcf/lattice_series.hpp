#ifndef QCF_LATTICE_SERIES_HPP
#define QCF_LATTICE_SERIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qcf {

using Integer = mpz_class;
using Exponent = std::int64_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live on different exponent lattices.
class LatticeMismatch : public Error {
public:
    using Error::Error;
};

/// A coefficient was requested beyond the exact window.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// An operation's precondition on its arguments failed.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Signed monomial sign * q^(num/denom).
struct Monomial {
    int sign = 1;
    Exponent num = 0;
    Exponent denom = 1;

    /// Numerator of the exponent on a lattice with denominator `lattice`.
    /// Throws LatticeMismatch if denom does not divide lattice.
    Exponent on_lattice(Exponent lattice) const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial inverse(const Monomial& m);
Monomial pow(const Monomial& m, int k);
/// Exponent reduced to lowest terms; compares a.num/a.denom with b.num/b.denom.
int compare_exponents(const Monomial& a, const Monomial& b);

/// Truncated Laurent series sum_{e} c_e q^{e/denom}, exact for every exponent
/// numerator e <= order and unknown beyond. Coefficients below floor are zero.
///
/// The zero series on a window ending at `order` is stored with
/// floor == order + 1 and no coefficients; with that convention the product
/// truncation rule min(o1 + f2, o2 + f1) stays correct for zero operands.
class LatticeSeries {
public:
    /// coeffs[i] is the coefficient of q^{(floor+i)/denom}. Entries past
    /// `order` are dropped and leading zeros are stripped.
    LatticeSeries(Exponent denom, Exponent floor, Exponent order, std::vector<Integer> coeffs);

    static LatticeSeries zero(Exponent denom, Exponent order);
    static LatticeSeries one(Exponent denom, Exponent order);
    static LatticeSeries monomial(const Monomial& m, Exponent denom, Exponent order);
    /// A polynomial given as (exponent numerator, coefficient) pairs; exact to `order`.
    static LatticeSeries polynomial(Exponent denom, Exponent order,
                                    std::span<const std::pair<Exponent, long>> terms);

    Exponent denom() const { return denom_; }
    Exponent floor() const { return floor_; }
    Exponent order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const Integer> coeffs() const { return coeffs_; }
    const Integer& leading() const;

    /// Exact coefficient of q^{e_num/denom}; zero below floor.
    /// Throws TruncationError for e_num > order.
    Integer coefficient(Exponent e_num) const;

    /// Same series with a smaller (or equal) exact window.
    LatticeSeries truncated(Exponent order) const;

    bool operator==(const LatticeSeries&) const = default;

private:
    void normalize();

    Exponent denom_;
    Exponent floor_;
    Exponent order_;
    std::vector<Integer> coeffs_;
};

LatticeSeries add(const LatticeSeries& a, const LatticeSeries& b);
LatticeSeries sub(const LatticeSeries& a, const LatticeSeries& b);
LatticeSeries negate(const LatticeSeries& a);
LatticeSeries mul(const LatticeSeries& a, const LatticeSeries& b);
LatticeSeries scale(const LatticeSeries& a, const Integer& c);
/// Multiply by q^{k/denom}; exact, the window moves with the series.
LatticeSeries shift(const LatticeSeries& a, Exponent k);
/// Inverse of a series whose leading coefficient is +1 or -1.
LatticeSeries reciprocal(const LatticeSeries& s);
LatticeSeries divide(const LatticeSeries& a, const LatticeSeries& b);
/// a^n for n >= 0; negative n goes through reciprocal.
LatticeSeries power(const LatticeSeries& a, int n);

/// q -> q^k, and additionally q -> -q when negate is set.
/// Negation is only defined on the integer lattice (denom == 1).
LatticeSeries substitute(const LatticeSeries& s, Exponent k, bool negate);

/// The same series viewed on the finer lattice denom * factor.
LatticeSeries refine(const LatticeSeries& s, Exponent factor);
/// The same series on the coarser lattice denom / factor. Every nonzero
/// exponent must be a multiple of factor; the window is rounded down.
LatticeSeries coarsen(const LatticeSeries& s, Exponent factor);

inline LatticeSeries operator+(const LatticeSeries& a, const LatticeSeries& b) { return add(a, b); }
inline LatticeSeries operator-(const LatticeSeries& a, const LatticeSeries& b) { return sub(a, b); }
inline LatticeSeries operator-(const LatticeSeries& a) { return negate(a); }
inline LatticeSeries operator*(const LatticeSeries& a, const LatticeSeries& b) { return mul(a, b); }

struct Mismatch {
    Exponent exp_num;
    Integer lhs;
    Integer rhs;
};

/// Comparison of two series on their common exact window.
struct WindowComparison {
    Exponent denom;
    Exponent window;  ///< largest exponent numerator compared
    std::optional<Mismatch> first_mismatch;

    bool equal() const { return !first_mismatch.has_value(); }
};

WindowComparison compare(const LatticeSeries& a, const LatticeSeries& b);

/// Human-readable rendering such as "1 - q^(1/4) + 2*q^2 + O(q^(13/4))".
std::string to_string(const LatticeSeries& s, std::size_t max_terms = 12);

}  // namespace qcf

#endif
