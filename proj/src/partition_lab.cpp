#include "qcf/partition_lab.hpp"

#include <algorithm>
#include <sstream>

namespace qcf {

ColoredPartitionSpec ColoredPartitionSpec::from_pm(Exponent modulus, const std::vector<std::pair<Exponent, int>>& pm,
                                                   SelfPairedPolicy policy) {
    if (modulus <= 0) throw DomainError("partition spec: modulus must be positive");
    ColoredPartitionSpec spec{modulus, {}};
    auto put = [&](Exponent residue, int colors) {
        for (const auto& c : spec.classes)
            if (c.residue == residue)
                throw DomainError("partition spec: residue " + std::to_string(residue) + " listed twice");
        spec.classes.push_back({residue, colors});
    };
    for (auto [s, r] : pm) {
        if (s <= 0 || s >= modulus)
            throw DomainError("partition spec: +-" + std::to_string(s) + " needs 0 < s < " + std::to_string(modulus));
        if (2 * s == modulus) {
            put(s, policy == SelfPairedPolicy::Doubled ? 2 * r : r);
        } else {
            put(s, r);
            put(modulus - s, r);
        }
    }
    std::sort(spec.classes.begin(), spec.classes.end(),
              [](const ColorClass& a, const ColorClass& b) { return a.residue < b.residue; });
    spec.validate();
    return spec;
}

ColoredPartitionSpec ColoredPartitionSpec::all_parts(int colors) {
    ColoredPartitionSpec spec{1, {{1, colors}}};
    spec.validate();
    return spec;
}

void ColoredPartitionSpec::validate() const {
    if (modulus <= 0) throw DomainError("partition spec: modulus must be positive");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        if (c.residue < 1 || c.residue > modulus)
            throw DomainError("partition spec: residue " + std::to_string(c.residue) + " outside 1.." +
                              std::to_string(modulus));
        if (c.colors < 1) throw DomainError("partition spec: colors must be at least 1");
        for (std::size_t k = 0; k < i; ++k)
            if (classes[k].residue == c.residue) throw DomainError("partition spec: duplicate residue");
    }
}

ProductSpec ColoredPartitionSpec::generating_function() const {
    ProductSpec gf{1, {}};
    for (const auto& c : classes) gf.factors.push_back({c.residue, modulus, -c.colors});
    return gf;
}

int ColoredPartitionSpec::colors_of(Exponent part) const {
    if (part <= 0) return 0;
    const Exponent r = (part - 1) % modulus + 1;
    for (const auto& c : classes)
        if (c.residue == r) return c.colors;
    return 0;
}

std::string ColoredPartitionSpec::to_string() const {
    std::ostringstream out;
    out << "mod " << modulus << ":";
    for (const auto& c : classes) out << ' ' << c.residue << 'x' << c.colors;
    return out.str();
}

std::vector<Integer> count_gf(const ColoredPartitionSpec& spec, Exponent n_max) {
    if (n_max < 0) throw DomainError("count_gf: n_max must be nonnegative");
    spec.validate();
    const auto series = pochhammer(spec.generating_function(), n_max);
    std::vector<Integer> out;
    for (Exponent n = 0; n <= n_max; ++n) out.push_back(series.coefficient(n));
    return out;
}

namespace {

struct Kind {
    Exponent part;
    int color;
};

std::vector<Kind> kinds_up_to(const ColoredPartitionSpec& spec, Exponent n_max) {
    std::vector<Kind> kinds;
    for (Exponent p = n_max; p >= 1; --p)
        for (int c = 0; c < spec.colors_of(p); ++c) kinds.push_back({p, c});
    return kinds;
}

// Visits every multiset of kinds with total <= limit, kinds taken in
// nonincreasing index order so each multiset is produced once.
template <typename Visit>
void walk(const std::vector<Kind>& kinds, Exponent limit, Visit&& visit) {
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start, Exponent total) -> void {
        visit(chosen, total);
        for (std::size_t k = start; k < kinds.size(); ++k) {
            if (total + kinds[k].part > limit) continue;
            chosen.push_back(k);
            self(self, k, total + kinds[k].part);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<Integer> count_enumerate(const ColoredPartitionSpec& spec, Exponent n_max, std::size_t leaf_budget) {
    spec.validate();
    if (n_max < 0 || n_max > kEnumerationLimit)
        throw DomainError("count_enumerate: n_max must lie in 0.." + std::to_string(kEnumerationLimit));
    std::vector<unsigned long long> counts(static_cast<std::size_t>(n_max + 1), 0);
    std::size_t leaves = 0;
    walk(kinds_up_to(spec, n_max), n_max, [&](const std::vector<std::size_t>&, Exponent total) {
        if (++leaves > leaf_budget)
            throw DomainError("count_enumerate: more than " + std::to_string(leaf_budget) + " partitions");
        ++counts[static_cast<std::size_t>(total)];
    });
    std::vector<Integer> out;
    for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

std::vector<std::string> list_partitions(const ColoredPartitionSpec& spec, Exponent n,
                                         const std::vector<std::string>& color_names) {
    spec.validate();
    if (n < 0 || n > kEnumerationLimit)
        throw DomainError("list_partitions: n must lie in 0.." + std::to_string(kEnumerationLimit));
    const auto kinds = kinds_up_to(spec, n);
    std::vector<std::string> out;
    walk(kinds, n, [&](const std::vector<std::size_t>& chosen, Exponent total) {
        if (total != n) return;
        std::string s;
        for (std::size_t k : chosen) {
            if (!s.empty()) s += '+';
            const int c = kinds[k].color;
            s += std::to_string(kinds[k].part) + '_' +
                 (c < static_cast<int>(color_names.size()) ? color_names[static_cast<std::size_t>(c)]
                                                           : "c" + std::to_string(c + 1));
        }
        out.push_back(s);
    });
    return out;
}

namespace {

// (q^{r+-}; q^m)^power for each r, expanded literally as (q^r, q^{m-r}; q^m).
ProductSpec pm(Exponent m, std::initializer_list<Exponent> residues, int power) {
    ProductSpec s{1, {}};
    for (Exponent r : residues) {
        s.factors.push_back({r, m, power});
        s.factors.push_back({m - r, m, power});
    }
    return s;
}

ProductSpec plain(Exponent a, Exponent m, int power) { return ProductSpec{1, {{a, m, power}}}; }

Expr P(const ProductSpec& s) { return Expr::product(s); }

IdentityCase integer_case(std::string id, Expr lhs, Expr rhs) {
    return {std::move(id), std::move(lhs), std::move(rhs), 1, default_order_for(1)};
}

Expr qpow(Exponent e) { return Expr::mono({1, e, 1}); }

std::vector<IdentityCase> first_theorem_series(const std::vector<PartitionTerm>& terms) {
    const Expr zero = Expr::constant(0);
    // Quotients built from the Y8 closed form and the minus-sign theta identity for Y8.
    const Expr A = P(pm(68, {33}, 1).times(pm(68, {1}, -1))) / qpow(8);
    const Expr B = qpow(8) * P(pm(68, {1}, 1).times(pm(68, {33}, -1)));
    const Expr C = P(pm(34, {16}, 1).times(plain(34, 34, 6)).times(pm(34, {1}, -1)).times(plain(17, 17, -2)).times(
                       plain(68, 68, -4))) /
                   qpow(8);
    const Expr A68 = P(pm(68, {33}, 1).times(pm(68, {1}, -1)));
    const Expr B68 = P(pm(68, {1}, 1).times(pm(68, {33}, -1)));
    const Expr C68 = P(pm(68, {16, 18}, 1).times(pm(68, {34}, 2)).times(pm(68, {1, 33}, -1)).times(pm(68, {17}, -2)));
    const Expr T1 = P(pm(68, {16, 18}, -1).times(pm(68, {1, 34}, -2)));
    const Expr T2 = P(pm(68, {16, 18}, -1).times(pm(68, {33, 34}, -2)));
    const Expr T3 = P(pm(68, {1, 17, 33}, -2));
    const Expr divisor = P(pm(68, {1, 16, 18, 33}, 1).times(pm(68, {34}, 2)));
    const auto& rhs_p = theorem_case("T2.2-p").rhs;
    const Expr Y8 = Expr::named("Y8");

    std::vector<IdentityCase> out;
    out.push_back(integer_case("three-quotient relation", A - B - C, zero));
    out.push_back(integer_case("third quotient on base q^68", qpow(8) * C, C68));
    out.push_back(integer_case("relation on base q^68", A68 - qpow(16) * B68 - C68, zero));
    out.push_back(integer_case("reciprocal-product relation", T1 - qpow(16) * T2 - T3, zero));
    out.push_back(integer_case("first term times divisor", T1 * divisor, A68));
    out.push_back(integer_case("second term times divisor", T2 * divisor, B68));
    out.push_back(integer_case("third term times divisor", T3 * divisor, C68));
    out.push_back(integer_case("bridge: first two quotients are 1/Y8 - Y8", A - B, Expr::constant(1) / Y8 - Y8));
    out.push_back(integer_case("bridge: third quotient is the theta side for 1/Y8 - Y8", C, rhs_p));
    const Expr reciprocal_terms[] = {T1, T2, T3};
    for (std::size_t k = 0; k < terms.size() && k < 3; ++k)
        out.push_back(integer_case("generating function of " + terms[k].name, P(terms[k].spec.generating_function()),
                                   reciprocal_terms[k]));
    return out;
}

std::vector<IdentityCase> second_theorem_series(const std::vector<PartitionTerm>& terms) {
    const Expr T1 = P(pm(68, {32, 34}, -1).times(pm(68, {1, 17}, -2)));
    const Expr T2 = P(pm(68, {32, 34}, -1).times(pm(68, {17, 33}, -2)));
    const Expr T3 = P(pm(68, {16, 18}, -1).times(pm(68, {1, 33}, -2)));
    const Expr D = P(pm(68, {1, 33, 32, 34}, 1).times(pm(68, {17}, 2)));
    const auto& rhs_o = theorem_case("T2.2-o").rhs;
    const Expr Y8 = Expr::named("Y8");

    std::vector<IdentityCase> out;
    out.push_back(integer_case("reciprocal-product relation", T1 + qpow(16) * T2, T3));
    out.push_back(integer_case("bridge: left side times D is q^8 (1/Y8 + Y8)", D * (T1 + qpow(16) * T2),
                               qpow(8) * (Expr::constant(1) / Y8 + Y8)));
    out.push_back(integer_case("bridge: right side times D is q^8 times the theta side for 1/Y8 + Y8", D * T3,
                               qpow(8) * rhs_o));
    const Expr reciprocal_terms[] = {T1, T2, T3};
    for (std::size_t k = 0; k < terms.size() && k < 3; ++k)
        out.push_back(integer_case("generating function of " + terms[k].name, P(terms[k].spec.generating_function()),
                                   reciprocal_terms[k]));
    return out;
}

}  // namespace

PartitionIdentity partition_theorem(int which, SelfPairedPolicy policy) {
    auto spec = [&](std::vector<std::pair<Exponent, int>> pm_classes) {
        return ColoredPartitionSpec::from_pm(68, pm_classes, policy);
    };
    if (which == 1) {
        std::vector<PartitionTerm> terms{
            {1, 0, "D1", spec({{1, 2}, {16, 1}, {18, 1}, {34, 2}})},
            {-1, 16, "D2", spec({{16, 1}, {18, 1}, {33, 2}, {34, 2}})},
            {-1, 0, "D3", spec({{1, 2}, {17, 2}, {33, 2}})},
        };
        auto series = first_theorem_series(terms);
        return {"D1(n) - D2(n-16) - D3(n) = 0", std::move(terms), 16, std::move(series)};
    }
    if (which == 2) {
        std::vector<PartitionTerm> terms{
            {1, 0, "K1", spec({{1, 2}, {17, 2}, {32, 1}, {34, 1}})},
            {1, 16, "K2", spec({{17, 2}, {32, 1}, {33, 2}, {34, 1}})},
            {-1, 0, "K3", spec({{1, 2}, {16, 1}, {18, 1}, {33, 2}})},
        };
        auto series = second_theorem_series(terms);
        return {"K1(n) + K2(n-16) = K3(n)", std::move(terms), 16, std::move(series)};
    }
    throw DomainError("partition_theorem: expected 1 or 2");
}

bool PartitionReport::holds() const {
    if (!failures.empty()) return false;
    return std::all_of(series.begin(), series.end(), [](const IdentityReport& r) { return r.holds(); });
}

PartitionReport verify_partition_identity(const PartitionIdentity& identity, Exponent n_max) {
    PartitionReport report{identity.name, n_max, identity.threshold, {}, {}, {}};
    std::vector<std::vector<Integer>> seqs;
    for (const auto& t : identity.terms) seqs.push_back(count_gf(t.spec, n_max));
    for (Exponent n = 0; n <= n_max; ++n) {
        PartitionMismatch row{n, {}, 0};
        for (std::size_t k = 0; k < identity.terms.size(); ++k) {
            const Exponent at = n - identity.terms[k].shift;
            Integer c = at >= 0 ? seqs[k][static_cast<std::size_t>(at)] : Integer(0);
            row.signed_sum += identity.terms[k].sign * c;
            row.counts.push_back(std::move(c));
        }
        if (row.signed_sum != 0) (n >= identity.threshold ? report.failures : report.below_threshold).push_back(row);
    }
    for (const auto& c : identity.series_checks) report.series.push_back(verify_identity(c, n_max));
    return report;
}

}  // namespace qcf
