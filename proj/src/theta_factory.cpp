#include "qcf/theta_factory.hpp"

#include <numeric>
#include <sstream>

namespace qcf {

namespace {

struct LinearFactor {
    Exponent e;  // > 0
    int c;       // +-1, factor is (1 - c q^e)
    int power;
};

void apply(std::vector<Integer>& r, const LinearFactor& f) {
    const auto n = static_cast<Exponent>(r.size());
    const Exponent e = f.e;
    if (e >= n) return;
    if (f.power > 0) {
        for (int p = 0; p < f.power; ++p)
            for (Exponent k = n - 1; k >= e; --k) {
                mpz_ptr dst = r[static_cast<std::size_t>(k)].get_mpz_t();
                mpz_srcptr src = r[static_cast<std::size_t>(k - e)].get_mpz_t();
                if (f.c > 0)
                    mpz_sub(dst, dst, src);
                else
                    mpz_add(dst, dst, src);
            }
    } else {
        for (int p = 0; p < -f.power; ++p)
            for (Exponent k = e; k < n; ++k) {
                mpz_ptr dst = r[static_cast<std::size_t>(k)].get_mpz_t();
                mpz_srcptr src = r[static_cast<std::size_t>(k - e)].get_mpz_t();
                if (f.c > 0)
                    mpz_add(dst, dst, src);
                else
                    mpz_sub(dst, dst, src);
            }
    }
}

int sign_pow(int s, Exponent n) { return (s < 0 && (n % 2 != 0)) ? -1 : 1; }

Exponent triangular(Exponent n) { return n * (n + 1) / 2; }

}  // namespace

ProductSpec ProductSpec::quotient(const std::vector<Exponent>& num, const std::vector<Exponent>& den, Exponent mod,
                                  Exponent denom) {
    ProductSpec spec{denom, {}};
    for (Exponent a : num) spec.factors.push_back({a, mod, 1});
    for (Exponent a : den) spec.factors.push_back({a, mod, -1});
    return spec;
}

ProductSpec ProductSpec::inverted() const {
    ProductSpec out = *this;
    for (auto& f : out.factors) f.power = -f.power;
    return out;
}

ProductSpec ProductSpec::times(const ProductSpec& other) const {
    if (other.denom != denom) return on_lattice(std::lcm(denom, other.denom)).times(other.on_lattice(std::lcm(denom, other.denom)));
    ProductSpec out = *this;
    out.factors.insert(out.factors.end(), other.factors.begin(), other.factors.end());
    return out;
}

ProductSpec ProductSpec::on_lattice(Exponent lattice) const {
    if (lattice % denom != 0) throw LatticeMismatch("product spec cannot be moved to lattice 1/" + std::to_string(lattice));
    Exponent k = lattice / denom;
    ProductSpec out{lattice, factors};
    for (auto& f : out.factors) {
        f.a *= k;
        f.m *= k;
    }
    return out;
}

void ProductSpec::validate() const {
    if (denom <= 0) throw DomainError("product spec: lattice denominator must be positive");
    for (const auto& f : factors) {
        if (f.m <= 0) throw DomainError("product spec: modulus must be positive");
        if (f.power == 0) throw DomainError("product spec: factor power must be nonzero");
        if ((f.sign != 1 && f.sign != -1) || (f.base_sign != 1 && f.base_sign != -1))
            throw DomainError("product spec: signs must be +1 or -1");
    }
}

std::string ProductSpec::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& f : factors) {
        if (!first) out << " * ";
        first = false;
        out << '(' << Monomial{f.sign, f.a, denom}.to_string() << "; " << Monomial{f.base_sign, f.m, denom}.to_string()
            << ")_inf";
        if (f.power != 1) out << '^' << f.power;
    }
    if (first) out << '1';
    return out.str();
}

LatticeSeries pochhammer(const ProductSpec& spec, Exponent order) {
    spec.validate();
    Exponent shift_total = 0;
    int sign_total = 1;
    Integer constant = 1;
    bool vanishes = false;
    std::vector<LinearFactor> linear;

    // Factors with a nonpositive exponent: (1 - c q^e) = -c q^e (1 - c q^{-e}).
    for (const auto& f : spec.factors) {
        for (Exponent n = 0; f.a + n * f.m <= 0; ++n) {
            Exponent e = f.a + n * f.m;
            int c = f.sign * sign_pow(f.base_sign, n);
            if (e == 0) {
                if (c == 1) {
                    if (f.power < 0) throw DomainError("pochhammer: division by a (1; q)_inf factor");
                    vanishes = true;
                } else if (f.power > 0) {
                    Integer two = 2;
                    mpz_pow_ui(two.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(f.power));
                    constant *= two;
                } else {
                    throw DomainError("pochhammer: dividing by (-1; q)_inf leaves a non-unit constant");
                }
                continue;
            }
            shift_total += e * f.power;
            sign_total *= sign_pow(-c, f.power);
            linear.push_back({-e, c, f.power});
        }
    }
    if (vanishes) return LatticeSeries::zero(spec.denom, order);

    Exponent rel = order - shift_total;
    if (rel < 0) return LatticeSeries::zero(spec.denom, order);
    for (const auto& f : spec.factors) {
        Exponent n0 = 0;
        if (f.a <= 0) n0 = (-f.a) / f.m + 1;
        for (Exponent n = n0; f.a + n * f.m <= rel; ++n)
            linear.push_back({f.a + n * f.m, f.sign * sign_pow(f.base_sign, n), f.power});
    }

    std::vector<Integer> r(static_cast<std::size_t>(rel + 1));
    r[0] = 1;
    for (const auto& lf : linear) apply(r, lf);
    if (sign_total < 0) constant = -constant;
    if (constant != 1)
        for (auto& x : r) x *= constant;
    return {spec.denom, shift_total, order, std::move(r)};
}

LatticeSeries pochhammer(const ProductSpec& spec, Exponent lattice, Exponent order) {
    return pochhammer(spec.on_lattice(lattice), order);
}

void ThetaSpec::validate() const {
    Exponent l = std::lcm(a.denom, b.denom);
    if (a.on_lattice(l) + b.on_lattice(l) <= 0)
        throw DomainError("theta " + to_string() + ": exponent(a) + exponent(b) must be positive");
}

std::string ThetaSpec::to_string() const { return "f(" + a.to_string() + ", " + b.to_string() + ")"; }

LatticeSeries theta_sum(const ThetaSpec& spec, Exponent lattice, Exponent order) {
    spec.validate();
    const Exponent ea = spec.a.on_lattice(lattice), eb = spec.b.on_lattice(lattice);
    auto exponent = [&](Exponent n) { return triangular(n) * ea + triangular(n - 1) * eb; };
    auto sign = [&](Exponent n) { return sign_pow(spec.a.sign, triangular(n)) * sign_pow(spec.b.sign, triangular(n - 1)); };

    // E(n) is a convex quadratic; walk away from its vertex in both directions.
    const Exponent vertex = (eb - ea) / (2 * (ea + eb));
    std::vector<std::pair<Exponent, long>> terms;
    for (Exponent n = vertex + 1; exponent(n) <= order || n <= vertex + 2; ++n)
        if (exponent(n) <= order) terms.emplace_back(exponent(n), sign(n));
    for (Exponent n = vertex; exponent(n) <= order || n >= vertex - 1; --n)
        if (exponent(n) <= order) terms.emplace_back(exponent(n), sign(n));
    return LatticeSeries::polynomial(lattice, order, terms);
}

ProductSpec triple_product_spec(const ThetaSpec& spec, Exponent lattice) {
    spec.validate();
    const Exponent ea = spec.a.on_lattice(lattice), eb = spec.b.on_lattice(lattice);
    const int sab = spec.a.sign * spec.b.sign;
    const Exponent eab = ea + eb;
    return ProductSpec{lattice,
                       {{ea, eab, 1, -spec.a.sign, sab}, {eb, eab, 1, -spec.b.sign, sab}, {eab, eab, 1, sab, sab}}};
}

LatticeSeries theta_product(const ThetaSpec& spec, Exponent lattice, Exponent order) {
    return pochhammer(triple_product_spec(spec, lattice), order);
}

ThetaSpec phi_spec(const Monomial& x) { return {x, x}; }
ThetaSpec psi_spec(const Monomial& x) { return {x, pow(x, 3)}; }
ThetaSpec fminus_spec(const Monomial& x) {
    return {Monomial{-x.sign, x.num, x.denom}, Monomial{-1, 2 * x.num, x.denom}};
}
ProductSpec chi_spec() { return ProductSpec{1, {{1, 2, 1, -1, 1}}}; }

LatticeSeries times_monomial(const LatticeSeries& s, const Monomial& a) {
    return shift(a.sign < 0 ? negate(s) : s, a.on_lattice(s.denom()));
}

namespace {

SeriesIdentity make_identity(std::string name, LatticeSeries lhs, LatticeSeries rhs) {
    auto cmp = compare(lhs, rhs);
    return {std::move(name), std::move(lhs), std::move(rhs), cmp};
}

Monomial neg(const Monomial& m) { return {-m.sign, m.num, m.denom}; }

}  // namespace

Entry30Split entry30_split(const Monomial& a, const Monomial& b, Exponent lattice, Exponent order) {
    ThetaSpec whole{a, b};
    ThetaSpec first{pow(a, 3) * b, a * pow(b, 3)};
    ThetaSpec second{b * inverse(a), pow(a, 5) * pow(b, 3)};
    whole.validate();
    first.validate();
    second.validate();
    auto w = theta_sum(whole, lattice, order);
    auto f1 = theta_sum(first, lattice, order);
    auto f2 = theta_sum(second, lattice, order);
    auto rhs = add(f1, times_monomial(f2, a));
    auto ident = make_identity("f(a,b) = f(a^3b,ab^3) + a f(b/a,a^5b^3)", w, rhs);
    return {whole, first, second, a, std::move(w), std::move(f1), std::move(f2), std::move(ident)};
}

std::vector<SeriesIdentity> entry30_products(const Monomial& a, const Monomial& b, Exponent lattice, Exponent order) {
    auto f = [&](const Monomial& x, const Monomial& y) { return theta_sum(ThetaSpec{x, y}, lattice, order); };
    auto psi = [&](const Monomial& x) { return theta_sum(psi_spec(x), lattice, order); };
    auto phi = [&](const Monomial& x) { return theta_sum(phi_spec(x), lattice, order); };
    const Monomial ab = a * b;

    std::vector<SeriesIdentity> out;
    out.push_back(make_identity("f(a,ab^2) f(b,a^2b) = f(a,b) psi(ab)", mul(f(a, a * pow(b, 2)), f(b, pow(a, 2) * b)),
                                mul(f(a, b), psi(ab))));
    out.push_back(make_identity("f(a,b) f(-a,-b) = f(-a^2,-b^2) phi(-ab)", mul(f(a, b), f(neg(a), neg(b))),
                                mul(f(neg(pow(a, 2)), neg(pow(b, 2))), phi(neg(ab)))));
    auto second = times_monomial(mul(f(b * inverse(a), pow(a, 3) * b), psi(pow(ab, 2))), a);
    out.push_back(make_identity("f(a,b)^2 = f(a^2,b^2) phi(ab) + 2a f(b/a,a^3b) psi(a^2b^2)", power(f(a, b), 2),
                                add(mul(f(pow(a, 2), pow(b, 2)), phi(ab)), scale(second, 2))));
    return out;
}

}  // namespace qcf
