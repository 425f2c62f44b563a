#include "qcf/cf_engine.hpp"

#include <algorithm>

namespace qcf {

void CFSpec::validate() const {
    if (denom <= 0) throw DomainError("cf spec: lattice denominator must be positive");
    if (gamma_num <= 0) throw DomainError("cf spec: base exponent must be positive");
    if (alpha_num + beta_num <= 0) throw DomainError("cf spec: alpha + beta must be positive");
    if (depth < 0) throw DomainError("cf spec: depth must be nonnegative");
}

LatticeSeries cf_convergent(const CFSpec& spec, Exponent order) {
    spec.validate();
    const Exponent d = spec.denom, al = spec.alpha_num, be = spec.beta_num, ga = spec.gamma_num;
    // Enough room for Laurent floors of the partial numerators.
    const Exponent work = order + std::max<Exponent>(0, -2 * std::min(al, be));

    auto poly = [&](std::initializer_list<std::pair<Exponent, long>> terms) {
        std::vector<std::pair<Exponent, long>> t(terms);
        return LatticeSeries::polynomial(d, work, t);
    };
    const auto one_minus_ab = poly({{0, 1}, {-(al + be), 0}, {al + be, -1}});
    auto partial_den = [&](int k) {
        if (k == 0) return one_minus_ab;
        return mul(one_minus_ab, poly({{0, 1}, {2 * k * ga, 1}}));
    };
    auto partial_num = [&](int k) {
        const Exponent s = (2 * k - 1) * ga;
        return mul(poly({{al, 1}, {be + s, -1}}), poly({{be, 1}, {al + s, -1}}));
    };

    // value_k = p_k / q_k with value_k = den_k + num_{k+1} / value_{k+1}.
    LatticeSeries p = partial_den(spec.depth);
    LatticeSeries q = LatticeSeries::one(d, work);
    for (int k = spec.depth; k >= 1; --k) {
        LatticeSeries next_p = add(mul(partial_den(k - 1), p), mul(partial_num(k), q));
        q = std::move(p);
        p = std::move(next_p);
    }
    if (p.is_zero() || (p.leading() != 1 && p.leading() != -1))
        throw DomainError("cf_convergent: denominator series is not invertible at depth " +
                          std::to_string(spec.depth));
    return divide(q, p).truncated(std::min(order, divide(q, p).order()));
}

ProductSpec cf_limit_product(const CFSpec& spec) {
    spec.validate();
    const Exponent al = spec.alpha_num, be = spec.beta_num, ga = spec.gamma_num;
    return ProductSpec::quotient({2 * al + 3 * ga, 2 * be + 3 * ga}, {2 * al + ga, 2 * be + ga}, 4 * ga, spec.denom);
}

ProductSpec NamedCF::starred() const { return ProductSpec::quotient(num, den, modulus, 1); }

ProductSpec NamedCF::product() const { return starred().on_lattice(lattice()); }

ThetaSpec NamedCF::theta_numerator() const { return {{-1, num[0], 1}, {-1, num[1], 1}}; }

ThetaSpec NamedCF::theta_denominator() const { return {{-1, den[0], 1}, {-1, den[1], 1}}; }

namespace {

std::vector<NamedCF> build_catalogue() {
    // Closed forms as tabulated for the order-34 and order-68 fractions.
    struct Row {
        std::vector<Exponent> num, den;
    };
    const Row xs[8] = {{{8, 26}, {9, 25}},  {{7, 27}, {10, 24}}, {{6, 28}, {11, 23}}, {{5, 29}, {12, 22}},
                       {{4, 30}, {13, 21}}, {{3, 31}, {14, 20}}, {{2, 32}, {15, 19}}, {{1, 33}, {16, 18}}};
    const Row ys[8] = {{{15, 53}, {19, 49}}, {{13, 55}, {21, 47}}, {{11, 57}, {23, 45}}, {{9, 59}, {25, 43}},
                       {{7, 61}, {27, 41}},  {{5, 63}, {29, 39}},  {{3, 65}, {31, 37}},  {{1, 67}, {33, 35}}};
    const Exponent x_shift[8] = {8, 7, 6, 5, 4, 3, 2, 1};
    const Exponent y_shift[8] = {15, 13, 11, 9, 7, 5, 3, 1};

    std::vector<NamedCF> out;
    for (int i = 1; i <= 8; ++i) {
        // q -> q^{17/2}, a = q^{(2i-1)/4}, b = q^{(35-2i)/4}, on the quarter lattice.
        CFSpec cf{2 * i - 1, 35 - 2 * i, 34, 0, 4};
        out.push_back({"X" + std::to_string(i), Family::X, i, Monomial{1, 2 * i - 1, 4}, xs[i - 1].num,
                       xs[i - 1].den, 34, cf, x_shift[i - 1]});
    }
    for (int i = 1; i <= 8; ++i) {
        // q -> q^17, a = q^i, b = q^{17-i}.
        CFSpec cf{i, 17 - i, 17, 0, 1};
        out.push_back({"Y" + std::to_string(i), Family::Y, i, Monomial{1, i, 1}, ys[i - 1].num, ys[i - 1].den, 68,
                       cf, y_shift[i - 1]});
    }
    return out;
}

}  // namespace

const std::vector<NamedCF>& named_cfs() {
    static const std::vector<NamedCF> catalogue = build_catalogue();
    return catalogue;
}

const NamedCF& named_cf(std::string_view id) {
    for (const auto& cf : named_cfs())
        if (cf.id == id) return cf;
    throw DomainError("unknown continued fraction id '" + std::string(id) + "' (expected X1..X8 or Y1..Y8)");
}

LatticeSeries named_cf_product(const NamedCF& cf, Exponent order) {
    const Exponent pre = cf.prefactor.on_lattice(cf.lattice());
    return shift(pochhammer(cf.product(), order - pre), pre);
}

LatticeSeries named_cf_product(std::string_view id, Exponent order) { return named_cf_product(named_cf(id), order); }

LatticeSeries named_cf_theta_quotient(const NamedCF& cf, Exponent order) {
    const Exponent d = cf.lattice();
    const Exponent pre = cf.prefactor.on_lattice(d);
    auto ratio = divide(theta_sum(cf.theta_numerator(), d, order - pre), theta_sum(cf.theta_denominator(), d, order - pre));
    return shift(ratio, pre);
}

LatticeSeries named_cf_convergent(const NamedCF& cf, int depth, Exponent order) {
    const Exponent d = cf.lattice();
    const Exponent pre = cf.prefactor.on_lattice(d);
    CFSpec spec = cf.cf;
    spec.depth = depth;
    const std::pair<Exponent, long> shift_terms[] = {{0, 1}, {cf.shift * d, -1}};
    auto factor = LatticeSeries::polynomial(d, order - pre, shift_terms);
    return shift(mul(factor, cf_convergent(spec, order - pre)), pre);
}

CFCertificate certify_cf(const NamedCF& cf, Exponent order, int max_depth) {
    CFCertificate cert{cf.id, order, cf.lattice(), std::nullopt, false, std::nullopt, {}};
    const auto target = named_cf_product(cf, order);
    for (int depth = 0; depth <= max_depth; ++depth) {
        auto cmp = compare(named_cf_convergent(cf, depth, order), target);
        cert.agreement.push_back(cmp.equal() ? order + 1 : cmp.first_mismatch->exp_num);
        if (cmp.equal()) {
            cert.depth = depth;
            cert.certified = true;
            return cert;
        }
        cert.first_mismatch = cmp.first_mismatch;
    }
    return cert;
}

CFCertificate certify_cf(std::string_view id, Exponent order, int max_depth) {
    return certify_cf(named_cf(id), order, max_depth);
}

}  // namespace qcf
