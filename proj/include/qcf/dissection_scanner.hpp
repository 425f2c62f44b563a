#ifndef QCF_DISSECTION_SCANNER_HPP
#define QCF_DISSECTION_SCANNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcf/lattice_series.hpp"
#include "qcf/theta_factory.hpp"

namespace qcf {

// Andrews-Bressoud w-dissection of
//   (q^x, q^x, q^{y+z}, q^{x-y-z}; q^x) / (q^z, q^{x-z}, q^y, q^{x-y}; q^x)
// into w terms q^{jy} * P_j(q), each P_j a product in powers of q^w.

struct DissectionSpec {
    Exponent x = 0, y = 0, z = 0, w = 0;

    /// Rejects gcd(y, w) != 1, y or z outside (0, x), and any right-hand
    /// product exponent that is not a multiple of w.
    void validate() const;
};

struct DissectionTerm {
    int j;
    Exponent shift;       ///< j * y
    ProductSpec product;  ///< P_j on the integer lattice
    bool vanishes;        ///< contains a (q^0; .) numerator factor
};

ProductSpec dissection_lhs(const DissectionSpec& spec);
std::vector<DissectionTerm> dissection_terms(const DissectionSpec& spec);

struct Dissection {
    DissectionSpec spec;
    ProductSpec lhs_spec;
    std::vector<DissectionTerm> terms;
    LatticeSeries lhs;
    std::vector<LatticeSeries> rhs_terms;  ///< q^{jy} P_j, zero for vanishing terms
    WindowComparison identity;             ///< lhs against the sum of the terms
};

Dissection dissect(const DissectionSpec& spec, Exponent order);

struct VanishingClaim {
    std::string label;
    ProductSpec series;  ///< integer lattice
    Exponent modulus = 1;
    Exponent residue = 0;
    Exponent bound = 600;
};

struct Violation {
    Exponent n;
    Exponent exponent;
    Integer coefficient;
};

/// Structured second route, available when the series is
/// (q^{y+z}, q^{x-y-z}; q^x) / (q^y, q^{x-y}; q^x) with z = w = x/2: the
/// series is the dissection left side times (q^z; q^x)^2 / (q^x; q^x)^2, and
/// every multiplied term lives on a single residue class mod w.
struct PerTermRoute {
    DissectionSpec spec;
    std::vector<int> contributing_terms;  ///< j with jy = residue mod w
    bool terms_vanish_on_progression;     ///< every multiplied term is zero there
    WindowComparison sum_matches_raw;     ///< sum of multiplied terms against raw expansion
};

struct VanishingReport {
    VanishingClaim claim;
    Exponent checked;                     ///< number of progression positions scanned
    std::vector<Violation> violations;    ///< first few only
    std::optional<PerTermRoute> per_term;

    bool vanishes() const { return violations.empty(); }
    /// Raw route vanishes and, if present, the per-term route agrees.
    bool consistent() const;
};

/// Throws DomainError when the window holds less than one full period.
VanishingReport scan_vanishing(const VanishingClaim& claim, bool with_per_term = true);

/// The dissection parameters fitting a two-by-two quotient, if any.
std::optional<DissectionSpec> per_term_spec(const ProductSpec& series);

enum class Orientation { Displayed, Reciprocal };

/// One printed vanishing statement: a label (the starred series or its
/// reciprocal), the displayed quotient, and a progression.
struct TableRow {
    std::string label;         ///< e.g. "X1*" or "1/Y7*"
    std::string cf;            ///< X1..Y8
    bool label_is_reciprocal;
    ProductSpec displayed;
    Exponent modulus;
    Exponent residue;
};

struct RowReport {
    TableRow row;
    VanishingReport displayed;
    VanishingReport reciprocal;
    std::optional<Orientation> vanishing_orientation;  ///< displayed wins if both vanish
    bool label_consistent;  ///< the vanishing orientation is the one the label names
    /// "holds-as-printed", "holds-for-reciprocal" or "refuted-as-printed".
    std::string status;

    bool passed() const;
};

enum class Table { X, Y };

std::vector<TableRow> table_rows(Table which);
/// The two theorem statements: X1* mod 17 residue 6 and 1/Y7* mod 34 residue 28.
std::vector<TableRow> theorem_rows();

RowReport verify_row(const TableRow& row, Exponent bound);
std::vector<RowReport> verify_table(Table which, Exponent bound);

}  // namespace qcf

#endif
