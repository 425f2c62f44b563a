#ifndef QCF_IDENTITY_LAB_HPP
#define QCF_IDENTITY_LAB_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcf/cf_engine.hpp"
#include "qcf/lattice_series.hpp"
#include "qcf/theta_factory.hpp"

namespace qcf {

/// Immutable expression tree over named q-objects. Printing gives the exact
/// formula being checked; evaluation pads its working order until the
/// requested window is exact.
class Expr {
public:
    static Expr theta(const ThetaSpec& spec, std::string label = {});
    static Expr phi(const Monomial& x);
    static Expr psi(const Monomial& x);
    static Expr product(const ProductSpec& spec, std::string label = {});
    /// Closed-form product of X1..Y8, prefactor included.
    static Expr named(std::string_view id);
    static Expr mono(const Monomial& m);
    static Expr constant(long c);

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    Expr pow(int n) const;

    std::string to_string() const;
    /// Smallest lattice on which every leaf lives.
    Exponent natural_lattice() const;
    /// Every theta leaf, phi and psi included, in first-appearance order without repeats.
    std::vector<ThetaSpec> theta_leaves() const;
    /// Series exact through exponent numerator `order` on `lattice`.
    LatticeSeries evaluate(Exponent lattice, Exponent order) const;

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    LatticeSeries evaluate_raw(Exponent lattice, Exponent order) const;
    std::shared_ptr<const Node> node_;
};

struct IdentityCase {
    std::string id;
    Expr lhs;
    Expr rhs;
    Exponent lattice;
    Exponent default_order;  ///< exponent numerator on `lattice`
};

struct IdentityReport {
    std::string id;
    std::string lhs_text;
    std::string rhs_text;
    Exponent lattice;
    Exponent order;
    WindowComparison comparison;  ///< first nonzero coefficient of lhs - rhs, if any
    std::optional<std::string> error;

    bool holds() const { return !error && comparison.equal(); }
};

/// Default window for a lattice: q^60 on the quarter lattice, q^120 on the
/// integer lattice; QCF_DEFAULT_ORDER (whole powers of q) overrides both.
Exponent default_order_for(Exponent lattice);

IdentityReport verify_identity(const IdentityCase& c, Exponent order);
IdentityReport verify_identity(const IdentityCase& c);

/// The 32 printed two-sided identities for 1/X_i +- X_i and 1/Y_i +- Y_i,
/// ids T2.1-a..T2.1-p and T2.2-a..T2.2-p.
const std::vector<IdentityCase>& theorem_cases();
const IdentityCase& theorem_case(std::string_view id);
/// Same case with the sign of phi's argument flipped; must fail.
IdentityCase negative_control(std::string_view id);

/// Square-root-free proof steps for every X_i and Y_i: the two splits, the
/// product of the square-root identities, the three product evaluations,
/// the squared rearrangement, and the consistency of the +/- statements.
std::vector<IdentityCase> proof_step_cases();
std::vector<IdentityReport> verify_proof_steps(std::optional<Exponent> order_override = std::nullopt);

struct ModularReport {
    Family family;
    int index;
    int n;
    Exponent order;
    int stated_sign;   ///< sign claimed by the statement
    int derived_sign;  ///< from the monomial prefactors
    bool sign_matches;
    /// g^n(q) g^n(-q) against g^n(q^2) for the starred series g.
    WindowComparison series;
    /// X family only: g(q) * g~(q) against g(q^2), where g~ negates every
    /// theta argument of g. Shows which pairing the product identities give.
    std::optional<WindowComparison> negated_argument_check;

    bool holds() const { return sign_matches && series.equal(); }
};

/// Throws DomainError for the X family unless n is a nonnegative multiple of 4.
ModularReport verify_modular_relation(Family family, int index, int n, Exponent order);

}  // namespace qcf

#endif
