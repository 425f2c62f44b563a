#ifndef QCF_THETA_FACTORY_HPP
#define QCF_THETA_FACTORY_HPP

#include <string>
#include <vector>

#include "qcf/lattice_series.hpp"

namespace qcf {

/// One factor (sign * q^{a/d}; base_sign * q^{m/d})_inf ^ power.
/// `a` may be zero or negative; m must be positive.
struct ProductFactor {
    Exponent a = 0;
    Exponent m = 1;
    int power = 1;
    int sign = 1;
    int base_sign = 1;

    friend bool operator==(const ProductFactor&, const ProductFactor&) = default;
};

/// A formal product of q-Pochhammer symbols on the lattice (1/denom)Z.
struct ProductSpec {
    Exponent denom = 1;
    std::vector<ProductFactor> factors;

    /// (q^{n1}, q^{n2}, ...; q^mod)_inf / (q^{d1}, ...; q^mod)_inf
    static ProductSpec quotient(const std::vector<Exponent>& num, const std::vector<Exponent>& den, Exponent mod,
                                Exponent denom = 1);

    ProductSpec inverted() const;
    ProductSpec times(const ProductSpec& other) const;
    /// Lifted to a finer lattice; exponents scale by lattice / denom.
    ProductSpec on_lattice(Exponent lattice) const;
    void validate() const;
    std::string to_string() const;

    friend bool operator==(const ProductSpec&, const ProductSpec&) = default;
};

/// Arguments of Ramanujan's f(a, b); requires exponent(a) + exponent(b) > 0.
struct ThetaSpec {
    Monomial a;
    Monomial b;

    void validate() const;
    std::string to_string() const;

    friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;
};

/// Expands the product exactly through exponent numerator `order`.
/// Negative-exponent factors produce a negative floor; a (1;.) factor gives zero.
LatticeSeries pochhammer(const ProductSpec& spec, Exponent order);
LatticeSeries pochhammer(const ProductSpec& spec, Exponent lattice, Exponent order);

/// Bilateral sum route: sum over n of a^{n(n+1)/2} b^{n(n-1)/2}.
LatticeSeries theta_sum(const ThetaSpec& spec, Exponent lattice, Exponent order);
/// Triple product route: (-a, -b, ab; ab)_inf.
LatticeSeries theta_product(const ThetaSpec& spec, Exponent lattice, Exponent order);
ProductSpec triple_product_spec(const ThetaSpec& spec, Exponent lattice);

ThetaSpec phi_spec(const Monomial& x);    ///< phi(x) = f(x, x)
ThetaSpec psi_spec(const Monomial& x);    ///< psi(x) = f(x, x^3)
ThetaSpec fminus_spec(const Monomial& x); ///< f(-x) = f(-x, -x^2)
/// chi(q) = (-q; q^2)_inf
ProductSpec chi_spec();

struct SeriesIdentity {
    std::string name;
    LatticeSeries lhs;
    LatticeSeries rhs;
    WindowComparison comparison;

    bool holds() const { return comparison.equal(); }
};

/// f(a,b) = f(a^3 b, a b^3) + a f(b/a, a^5 b^3).
struct Entry30Split {
    ThetaSpec whole;
    ThetaSpec first;
    ThetaSpec second;
    Monomial multiplier;  ///< the `a` in front of the second theta
    LatticeSeries whole_series;
    LatticeSeries first_series;
    LatticeSeries second_series;
    SeriesIdentity identity;
};

Entry30Split entry30_split(const Monomial& a, const Monomial& b, Exponent lattice, Exponent order);

/// The three product identities
///   f(a,ab^2) f(b,a^2b) = f(a,b) psi(ab)
///   f(a,b) f(-a,-b)     = f(-a^2,-b^2) phi(-ab)
///   f(a,b)^2            = f(a^2,b^2) phi(ab) + 2a f(b/a,a^3b) psi(a^2b^2)
/// each evaluated by theta_sum on both sides.
std::vector<SeriesIdentity> entry30_products(const Monomial& a, const Monomial& b, Exponent lattice, Exponent order);

/// a * s for a monomial a, exact.
LatticeSeries times_monomial(const LatticeSeries& s, const Monomial& a);

}  // namespace qcf

#endif
