#ifndef QCF_PARTITION_LAB_HPP
#define QCF_PARTITION_LAB_HPP

#include <string>
#include <utility>
#include <vector>

#include "qcf/identity_lab.hpp"
#include "qcf/lattice_series.hpp"
#include "qcf/theta_factory.hpp"

namespace qcf {

/// How a class "parts = +-s (mod m)" with 2s = m is expanded. The product
/// shorthand (q^{s+-}; q^m) = (q^s, q^{m-s}; q^m) lists the factor twice
/// when s = m - s, so Doubled gives such a class twice the stated colors.
enum class SelfPairedPolicy { Doubled, Single };

struct ColorClass {
    Exponent residue;  ///< 1..modulus; parts congruent to it
    int colors;

    friend bool operator==(const ColorClass&, const ColorClass&) = default;
};

struct ColoredPartitionSpec {
    Exponent modulus = 1;
    std::vector<ColorClass> classes;  ///< distinct residues, sorted

    /// Expands "+-s with r colors" entries into explicit residues.
    static ColoredPartitionSpec from_pm(Exponent modulus, const std::vector<std::pair<Exponent, int>>& pm,
                                        SelfPairedPolicy policy = SelfPairedPolicy::Doubled);
    /// Every positive part allowed, each with `colors` colors.
    static ColoredPartitionSpec all_parts(int colors);

    void validate() const;
    /// prod over classes of 1 / (q^s; q^m)^colors
    ProductSpec generating_function() const;
    int colors_of(Exponent part) const;  ///< 0 if the part is not admitted
    std::string to_string() const;
};

/// Counts for n = 0..n_max from the generating function.
std::vector<Integer> count_gf(const ColoredPartitionSpec& spec, Exponent n_max);

constexpr Exponent kEnumerationLimit = 60;

/// Counts for n = 0..n_max by listing every colored multiset of parts.
/// Throws DomainError above kEnumerationLimit or when `leaf_budget` partitions are exceeded.
std::vector<Integer> count_enumerate(const ColoredPartitionSpec& spec, Exponent n_max,
                                     std::size_t leaf_budget = 50'000'000);

/// Every colored partition of n, largest part first, written like "2_p+1_g".
/// Colors are named by `color_names`, falling back to c1, c2, ... .
std::vector<std::string> list_partitions(const ColoredPartitionSpec& spec, Exponent n,
                                         const std::vector<std::string>& color_names = {"p", "g"});

struct PartitionTerm {
    int sign;
    Exponent shift;
    std::string name;
    ColoredPartitionSpec spec;
};

/// Claim: sum of sign * count(n - shift) over the terms is zero for n >= threshold.
struct PartitionIdentity {
    std::string name;
    std::vector<PartitionTerm> terms;
    Exponent threshold;
    /// Series statements behind the identity, checked as exact series.
    std::vector<IdentityCase> series_checks;
};

PartitionIdentity partition_theorem(int which, SelfPairedPolicy policy = SelfPairedPolicy::Doubled);

struct PartitionMismatch {
    Exponent n;
    std::vector<Integer> counts;  ///< per term, at n - shift
    Integer signed_sum;
};

struct PartitionReport {
    std::string name;
    Exponent n_max;
    Exponent threshold;
    std::vector<PartitionMismatch> failures;      ///< n >= threshold
    std::vector<PartitionMismatch> below_threshold;  ///< documented, not failures
    std::vector<IdentityReport> series;

    bool holds() const;
};

PartitionReport verify_partition_identity(const PartitionIdentity& identity, Exponent n_max);

}  // namespace qcf

#endif
