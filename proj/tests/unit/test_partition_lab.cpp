#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "qcf/partition_lab.hpp"

using namespace qcf;

namespace {

ColoredPartitionSpec spec_from(Exponent m, std::vector<std::pair<Exponent, int>> pm) {
    return ColoredPartitionSpec::from_pm(m, pm);
}

// The six specs, read off the statements of the two identities.
ColoredPartitionSpec D1() { return spec_from(68, {{1, 2}, {16, 1}, {18, 1}, {34, 2}}); }
ColoredPartitionSpec D2() { return spec_from(68, {{16, 1}, {18, 1}, {33, 2}, {34, 2}}); }
ColoredPartitionSpec D3() { return spec_from(68, {{1, 2}, {17, 2}, {33, 2}}); }
ColoredPartitionSpec K1() { return spec_from(68, {{1, 2}, {17, 2}, {32, 1}, {34, 1}}); }
ColoredPartitionSpec K2() { return spec_from(68, {{17, 2}, {32, 1}, {33, 2}, {34, 1}}); }
ColoredPartitionSpec K3() { return spec_from(68, {{1, 2}, {16, 1}, {18, 1}, {33, 2}}); }

// Oracle: one geometric-series pass per colored part, driven by colors_of.
std::vector<Integer> dp_count(const ColoredPartitionSpec& s, Exponent n) {
    std::vector<Integer> c(n + 1, 0);
    c[0] = 1;
    for (Exponent part = 1; part <= n; ++part)
        for (int color = 0; color < s.colors_of(part); ++color)
            for (Exponent e = part; e <= n; ++e) c[e] += c[e - part];
    return c;
}

}  // namespace

TEST_CASE("2-color partitions of 3") {
    auto two = ColoredPartitionSpec::all_parts(2);
    CHECK(count_gf(two, 3)[3] == 10);
    const std::vector<std::string> printed = {"3_p",     "3_g",     "2_p+1_p",     "2_p+1_g",     "2_g+1_p",
                                              "2_g+1_g", "1_p+1_p+1_p", "1_p+1_p+1_g", "1_p+1_g+1_g", "1_g+1_g+1_g"};
    CHECK(list_partitions(two, 3) == printed);
}

TEST_CASE("empty spec counts only the empty partition") {
    ColoredPartitionSpec empty{7, {}};
    auto c = count_gf(empty, 10);
    CHECK(c[0] == 1);
    for (int n = 1; n <= 10; ++n) CHECK(c[n] == 0);
}

TEST_CASE("+- expansion") {
    auto d3 = D3();
    CHECK(d3.colors_of(1) == 2);
    CHECK(d3.colors_of(67) == 2);
    CHECK(d3.colors_of(17) == 2);
    CHECK(d3.colors_of(51) == 2);
    CHECK(d3.colors_of(35) == 2);
    CHECK(d3.colors_of(2) == 0);
    // 34 = 68 - 34: the product lists (q^34; q^68) twice.
    CHECK(D1().colors_of(34) == 4);
    CHECK(ColoredPartitionSpec::from_pm(68, {{34, 2}}, SelfPairedPolicy::Single).colors_of(34) == 2);
}

TEST_CASE("worked examples") {
    CHECK(count_gf(D1(), 16)[16] == 18);
    CHECK(count_gf(D2(), 0)[0] == 1);
    CHECK(count_gf(D3(), 16)[16] == 17);
    CHECK(count_gf(K1(), 18)[18] == 23);
    CHECK(count_gf(K2(), 2)[2] == 0);
    CHECK(count_gf(K3(), 18)[18] == 23);
    CHECK(count_enumerate(D1(), 16)[16] == 18);
    CHECK(count_enumerate(K1(), 18)[18] == 23);
}

TEST_CASE("generating function, enumeration and a DP oracle agree") {
    for (const auto& s : {D1(), D2(), D3(), K1(), K2(), K3(), ColoredPartitionSpec::all_parts(2)}) {
        CAPTURE(s.to_string());
        auto gf = count_gf(s, 40);
        CHECK(gf == count_enumerate(s, 40));
        CHECK(gf == dp_count(s, 40));
    }
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        const Exponent m = std::uniform_int_distribution<Exponent>(2, 12)(rng);
        std::vector<std::pair<Exponent, int>> pm;
        for (Exponent s = 1; s <= m / 2; ++s)
            if (rng() % 2) pm.push_back({s, static_cast<int>(rng() % 3) + 1});
        auto spec = ColoredPartitionSpec::from_pm(m, pm);
        CAPTURE(spec.to_string());
        auto gf = count_gf(spec, 25);
        CHECK(gf == count_enumerate(spec, 25));
        CHECK(gf == dp_count(spec, 25));
    }
}

TEST_CASE("enumeration budget") { CHECK_THROWS_AS(count_enumerate(D1(), kEnumerationLimit + 1), DomainError); }

TEST_CASE("both identities hold to n = 200") {
    auto d = verify_partition_identity(partition_theorem(1), 200);
    CHECK(d.holds());
    CHECK(d.threshold == 16);
    CHECK(d.failures.empty());
    for (const auto& s : d.series) {
        CAPTURE(s.id);
        CHECK(s.holds());
    }
    auto k = verify_partition_identity(partition_theorem(2), 200);
    CHECK(k.holds());
    for (const auto& s : k.series) {
        CAPTURE(s.id);
        CHECK(s.holds());
    }
}

TEST_CASE("identity counts agree with the oracle") {
    auto c1 = dp_count(D1(), 200), c2 = dp_count(D2(), 200), c3 = dp_count(D3(), 200);
    for (int n = 16; n <= 200; ++n) CHECK(c1[n] - c2[n - 16] - c3[n] == 0);
    auto k1 = dp_count(K1(), 200), k2 = dp_count(K2(), 200), k3 = dp_count(K3(), 200);
    for (int n = 16; n <= 200; ++n) CHECK(k1[n] + k2[n - 16] - k3[n] == 0);
}

TEST_CASE("counting self-paired classes once breaks the identity") {
    auto r = verify_partition_identity(partition_theorem(1, SelfPairedPolicy::Single), 200);
    CHECK_FALSE(r.holds());
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failures.front().n == 34);
}
