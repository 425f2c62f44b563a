#include "qcf/dissection_scanner.hpp"

#include <algorithm>
#include <numeric>

#include "qcf/cf_engine.hpp"

namespace qcf {

namespace {

constexpr std::size_t kMaxViolations = 8;

Exponent mod_pos(Exponent a, Exponent m) { return ((a % m) + m) % m; }

}  // namespace

void DissectionSpec::validate() const {
    if (x <= 0 || y <= 0 || z <= 0 || w <= 0) throw DomainError("dissection: x, y, z, w must be positive");
    if (y >= x || z >= x) throw DomainError("dissection: y and z must be smaller than x");
    if (std::gcd(y, w) != 1) throw DomainError("dissection: gcd(y, w) must be 1");
    for (Exponent j = 0; j < w; ++j) {
        const Exponent exps[] = {w * x, w * y + z + j * x, (w - j) * x - w * y - z, j * x + z, (w - j) * x - z,
                                 w * y, (x - y) * w};
        for (Exponent e : exps)
            if (e % w != 0)
                throw DomainError("dissection: term j=" + std::to_string(j) + " has exponent " + std::to_string(e) +
                                  " which is not a multiple of w=" + std::to_string(w));
    }
}

ProductSpec dissection_lhs(const DissectionSpec& s) {
    s.validate();
    return ProductSpec::quotient({s.x, s.x, s.y + s.z, s.x - s.y - s.z}, {s.z, s.x - s.z, s.y, s.x - s.y}, s.x);
}

std::vector<DissectionTerm> dissection_terms(const DissectionSpec& s) {
    s.validate();
    std::vector<DissectionTerm> out;
    const Exponent M = s.w * s.x;
    for (Exponent j = 0; j < s.w; ++j) {
        const Exponent zero_candidate = (s.w - j) * s.x - s.w * s.y - s.z;
        auto product = ProductSpec::quotient({M, M, s.w * s.y + s.z + j * s.x, zero_candidate},
                                             {j * s.x + s.z, (s.w - j) * s.x - s.z, s.w * s.y, (s.x - s.y) * s.w}, M);
        // (q^0; q^M) in the numerator, and likewise any 0 mod M exponent reached by the shifts.
        const bool vanishes = zero_candidate <= 0 && mod_pos(zero_candidate, M) == 0;
        out.push_back({static_cast<int>(j), j * s.y, std::move(product), vanishes});
    }
    return out;
}

Dissection dissect(const DissectionSpec& spec, Exponent order) {
    Dissection d{spec, dissection_lhs(spec), dissection_terms(spec), LatticeSeries::zero(1, order), {}, {1, order, {}}};
    d.lhs = pochhammer(d.lhs_spec, order);
    auto sum = LatticeSeries::zero(1, order);
    for (const auto& t : d.terms) {
        auto term = t.vanishes ? LatticeSeries::zero(1, order) : shift(pochhammer(t.product, order - t.shift), t.shift);
        sum = add(sum, term);
        d.rhs_terms.push_back(std::move(term));
    }
    d.identity = compare(d.lhs, sum);
    return d;
}

std::optional<DissectionSpec> per_term_spec(const ProductSpec& series) {
    std::vector<Exponent> num, den;
    Exponent x = 0;
    for (const auto& f : series.factors) {
        if (f.sign != 1 || f.base_sign != 1 || (f.power != 1 && f.power != -1)) return std::nullopt;
        if (x != 0 && f.m != x) return std::nullopt;
        x = f.m;
        (f.power > 0 ? num : den).push_back(f.a);
    }
    if (series.denom != 1 || num.size() != 2 || den.size() != 2 || x % 2 != 0) return std::nullopt;
    const Exponent z = x / 2;
    for (Exponent y : den) {
        DissectionSpec s{x, y, z, z};
        const std::vector<Exponent> want_num{y + z, x - y - z}, want_den{y, x - y};
        if (!std::is_permutation(num.begin(), num.end(), want_num.begin()) ||
            !std::is_permutation(den.begin(), den.end(), want_den.begin()))
            continue;
        try {
            s.validate();
        } catch (const DomainError&) {
            continue;
        }
        return s;
    }
    return std::nullopt;
}

bool VanishingReport::consistent() const {
    if (!per_term) return true;
    return per_term->sum_matches_raw.equal() && per_term->terms_vanish_on_progression == vanishes();
}

namespace {

PerTermRoute run_per_term(const DissectionSpec& spec, const VanishingClaim& claim, const LatticeSeries& raw) {
    const Exponent bound = claim.bound;
    const ProductSpec multiplier{1, {{spec.z, spec.x, 2}, {spec.x, spec.x, -2}}};
    PerTermRoute route{spec, {}, true, {1, bound, {}}};
    auto sum = LatticeSeries::zero(1, bound);
    for (const auto& t : dissection_terms(spec)) {
        if (t.vanishes) continue;
        auto term = shift(pochhammer(t.product.times(multiplier), bound - t.shift), t.shift);
        if (mod_pos(t.shift, spec.w) == mod_pos(claim.residue, spec.w)) route.contributing_terms.push_back(t.j);
        for (Exponent e = claim.residue; e <= bound; e += claim.modulus)
            if (term.coefficient(e) != 0) route.terms_vanish_on_progression = false;
        sum = add(sum, term);
    }
    route.sum_matches_raw = compare(sum, raw);
    return route;
}

}  // namespace

VanishingReport scan_vanishing(const VanishingClaim& claim, bool with_per_term) {
    claim.series.validate();
    if (claim.series.denom != 1) throw DomainError("vanishing claims live on the integer lattice");
    if (claim.modulus <= 0) throw DomainError("vanishing claim: modulus must be positive");
    if (claim.residue < 0 || claim.residue >= claim.modulus)
        throw DomainError("vanishing claim: residue must lie in [0, modulus)");
    if (claim.bound + 1 < claim.modulus)
        throw DomainError("vanishing claim: bound " + std::to_string(claim.bound) +
                          " covers less than one period of " + std::to_string(claim.modulus));

    VanishingReport r{claim, 0, {}, std::nullopt};
    const auto raw = pochhammer(claim.series, claim.bound);
    for (Exponent n = 0, e = claim.residue; e <= claim.bound; ++n, e += claim.modulus) {
        ++r.checked;
        Integer c = raw.coefficient(e);
        if (c != 0 && r.violations.size() < kMaxViolations) r.violations.push_back({n, e, c});
    }
    if (with_per_term)
        if (auto spec = per_term_spec(claim.series); spec && spec->w % claim.modulus == 0)
            r.per_term = run_per_term(*spec, claim, raw);
    return r;
}

bool RowReport::passed() const {
    if (!vanishing_orientation) return false;
    const auto& v = *vanishing_orientation == Orientation::Displayed ? displayed : reciprocal;
    return v.consistent();
}

namespace {

TableRow make_row(bool reciprocal_label, const std::string& cf, Exponent modulus, Exponent residue) {
    const auto& named = named_cf(cf);
    std::string label = (reciprocal_label ? "1/" : "") + cf + "*";
    return {label, cf, reciprocal_label, named.starred(), modulus, residue};
}

}  // namespace

std::vector<TableRow> table_rows(Table which) {
    // Every printed row displays the quotient of the starred series itself.
    if (which == Table::X)
        return {make_row(true, "X2", 17, 6),  make_row(false, "X3", 17, 2), make_row(true, "X4", 17, 2),
                make_row(false, "X5", 17, 11), make_row(true, "X6", 17, 11), make_row(false, "X7", 17, 16),
                make_row(true, "X8", 17, 16)};
    return {make_row(false, "Y1", 34, 14), make_row(true, "Y1", 34, 16), make_row(false, "Y2", 34, 7),
            make_row(true, "Y2", 34, 11),  make_row(false, "Y3", 34, 30), make_row(true, "Y3", 34, 2),
            make_row(false, "Y4", 34, 15), make_row(true, "Y4", 34, 23), make_row(false, "Y5", 34, 30),
            make_row(true, "Y5", 34, 6),   make_row(false, "Y6", 34, 7),  make_row(true, "Y6", 34, 19),
            make_row(false, "Y7", 34, 14), make_row(false, "Y8", 34, 17), make_row(true, "Y8", 34, 33)};
}

std::vector<TableRow> theorem_rows() { return {make_row(false, "X1", 17, 6), make_row(true, "Y7", 34, 28)}; }

RowReport verify_row(const TableRow& row, Exponent bound) {
    VanishingClaim shown{row.label + " as displayed", row.displayed, row.modulus, row.residue, bound};
    VanishingClaim flipped{row.label + " reciprocal of displayed", row.displayed.inverted(), row.modulus, row.residue,
                           bound};
    RowReport r{row, scan_vanishing(shown), scan_vanishing(flipped), std::nullopt, false, "refuted-as-printed"};
    if (r.displayed.vanishes()) {
        r.vanishing_orientation = Orientation::Displayed;
        r.status = "holds-as-printed";
    } else if (r.reciprocal.vanishes()) {
        r.vanishing_orientation = Orientation::Reciprocal;
        r.status = "holds-for-reciprocal";
    }
    if (r.vanishing_orientation) {
        // The displayed quotient is always the starred series, so a
        // reciprocal label names the reciprocal orientation.
        const bool names_reciprocal = row.label_is_reciprocal;
        r.label_consistent = (*r.vanishing_orientation == Orientation::Reciprocal) == names_reciprocal;
    }
    return r;
}

std::vector<RowReport> verify_table(Table which, Exponent bound) {
    std::vector<RowReport> out;
    for (const auto& row : table_rows(which)) out.push_back(verify_row(row, bound));
    return out;
}

}  // namespace qcf
