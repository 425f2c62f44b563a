#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qcf/cf_engine.hpp"
#include "qcf/dissection_scanner.hpp"

using namespace qcf;

namespace {

// Oracle: (num; mod) / (den; mod) on a plain mpz vector, multiplying by
// (1 - q^a) and dividing by (1 - q^b) one factor at a time.
std::vector<Integer> naive_quotient(const std::vector<Exponent>& num, const std::vector<Exponent>& den, Exponent mod,
                                    Exponent n) {
    std::vector<Integer> c(n + 1, 0);
    c[0] = 1;
    for (Exponent a : num)
        for (Exponent p = a; p <= n; p += mod)
            for (Exponent e = n; e >= p; --e) c[e] -= c[e - p];
    for (Exponent b : den)
        for (Exponent p = b; p <= n; p += mod)
            for (Exponent e = p; e <= n; ++e) c[e] += c[e - p];
    return c;
}

}  // namespace

TEST_CASE("order-34 dissection into 17 terms") {
    auto d = dissect({34, 9, 17, 17}, 300);
    CHECK(d.terms.size() == 17);
    CHECK(d.identity.equal());
    CHECK(d.identity.window == 300);
    for (const auto& t : d.terms) {
        CHECK(t.shift == 9 * t.j);
        CHECK(t.vanishes == (t.j == 12));
    }
    CHECK(d.terms.back().shift == 144);
}

TEST_CASE("order-68 dissection into 34 terms with the vanishing q^96 term") {
    auto d = dissect({68, 3, 34, 34}, 300);
    CHECK(d.terms.size() == 34);
    CHECK(d.identity.equal());
    int vanishing = 0;
    for (const auto& t : d.terms)
        if (t.vanishes) {
            ++vanishing;
            CHECK(t.shift == 96);
        }
    CHECK(vanishing == 1);
}

TEST_CASE("w = 1 is a single term equal to the left side") {
    auto d = dissect({34, 9, 17, 1}, 200);
    REQUIRE(d.terms.size() == 1);
    CHECK(d.identity.equal());
    CHECK(compare(d.rhs_terms[0], d.lhs).equal());
}

TEST_CASE("dissection parameters are validated") {
    CHECK_THROWS_AS(DissectionSpec({34, 34, 17, 17}).validate(), DomainError);
    CHECK_THROWS_AS(DissectionSpec({34, 17, 9, 17}).validate(), DomainError);  // gcd(y, w) = 17
    CHECK_THROWS_AS(DissectionSpec({34, 9, 17, 0}).validate(), DomainError);
}

TEST_CASE("X1* vanishes on 17n + 6, checked against a naive expansion") {
    auto naive = naive_quotient({8, 26}, {9, 25}, 34, 600);
    for (Exponent e = 6; e <= 600; e += 17) CHECK(naive[e] == 0);

    VanishingClaim claim{"X1*", ProductSpec::quotient({8, 26}, {9, 25}, 34), 17, 6, 600};
    auto r = scan_vanishing(claim);
    CHECK(r.vanishes());
    CHECK(r.checked == 35);
    REQUIRE(r.per_term);
    CHECK(r.per_term->terms_vanish_on_progression);
    CHECK(r.per_term->sum_matches_raw.equal());
    CHECK(r.consistent());
}

TEST_CASE("X1* on 17n + 5 does not vanish") {
    auto naive = naive_quotient({8, 26}, {9, 25}, 34, 600);
    Exponent first = -1;
    for (Exponent e = 5; e <= 600 && first < 0; e += 17)
        if (naive[e] != 0) first = e;
    REQUIRE(first >= 0);

    auto r = scan_vanishing({"X1*", ProductSpec::quotient({8, 26}, {9, 25}, 34), 17, 5, 600});
    REQUIRE_FALSE(r.vanishes());
    CHECK(r.violations.front().exponent == first);
    CHECK(r.violations.front().coefficient == naive[first]);
}

TEST_CASE("1/Y7* vanishes on 34n + 28") {
    auto naive = naive_quotient({31, 37}, {3, 65}, 68, 600);
    for (Exponent e = 28; e <= 600; e += 34) CHECK(naive[e] == 0);
    auto r = scan_vanishing({"1/Y7*", ProductSpec::quotient({31, 37}, {3, 65}, 68), 34, 28, 600});
    CHECK(r.vanishes());
    CHECK(r.consistent());
}

TEST_CASE("scan windows shorter than one period are rejected") {
    CHECK_THROWS_AS(scan_vanishing({"short", ProductSpec::quotient({8, 26}, {9, 25}, 34), 17, 6, 10}), DomainError);
}

TEST_CASE("theorem rows") {
    auto rows = theorem_rows();
    REQUIRE(rows.size() == 2);
    auto x1 = verify_row(rows[0], 600);
    CHECK(x1.status == "holds-as-printed");
    auto y7 = verify_row(rows[1], 600);
    CHECK(y7.row.label == "1/Y7*");
    CHECK(y7.passed());
    CHECK(y7.label_consistent);
}

TEST_CASE("table rows: orientation follows the label") {
    auto x = verify_table(Table::X, 600);
    auto y = verify_table(Table::Y, 600);
    CHECK(x.size() == 7);
    CHECK(y.size() == 15);
    for (const auto* table : {&x, &y})
        for (const auto& r : *table) {
            CAPTURE(r.row.label);
            CHECK(r.passed());
            CHECK(r.label_consistent);
            REQUIRE(r.vanishing_orientation);
            CHECK((*r.vanishing_orientation == Orientation::Reciprocal) == r.row.label_is_reciprocal);
            // The labelled series, expanded naively, vanishes on the progression.
            const auto& cf = named_cf(r.row.cf);
            auto naive = r.row.label_is_reciprocal ? naive_quotient(cf.den, cf.num, cf.modulus, 600)
                                                   : naive_quotient(cf.num, cf.den, cf.modulus, 600);
            for (Exponent e = r.row.residue; e <= 600; e += r.row.modulus) CHECK(naive[e] == 0);
        }
    // X3* row: the displayed product vanishes on 17n + 2.
    auto x3 = naive_quotient({6, 28}, {11, 23}, 34, 600);
    for (Exponent e = 2; e <= 600; e += 17) CHECK(x3[e] == 0);
}
