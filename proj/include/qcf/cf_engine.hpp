#ifndef QCF_CF_ENGINE_HPP
#define QCF_CF_ENGINE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcf/lattice_series.hpp"
#include "qcf/theta_factory.hpp"

namespace qcf {

/// Ramanujan's general continued fraction
///
///   1 / (1 - ab + (a - bq)(b - aq) / ((1 - ab)(q^2 + 1) + (a - bq^3)(b - aq^3) / ((1 - ab)(q^4 + 1) + ...)))
///
/// with a = q^alpha, b = q^beta and q replaced by q^gamma, all exponents as
/// numerators over `denom`. `depth` is the number of partial quotients kept
/// below the top row.
struct CFSpec {
    Exponent alpha_num = 0;
    Exponent beta_num = 0;
    Exponent gamma_num = 1;
    int depth = 0;
    Exponent denom = 1;

    void validate() const;
};

/// Finite convergent as an exact series, evaluated bottom-up as a
/// numerator/denominator pair with a single reciprocal at the end.
LatticeSeries cf_convergent(const CFSpec& spec, Exponent order);

/// The infinite product the fraction converges to:
/// (a^2 q^3, b^2 q^3; q^4)_inf / (a^2 q, b^2 q; q^4)_inf under q -> q^gamma.
ProductSpec cf_limit_product(const CFSpec& spec);

enum class Family { X, Y };

/// One of X1..X8 (order 34, lattice 1/4) or Y1..Y8 (order 68, integer lattice).
struct NamedCF {
    std::string id;
    Family family;
    int index;
    Monomial prefactor;  ///< q^{(2i-1)/4} for X_i, q^i for Y_i
    /// Integer exponents of the tabulated closed form (q^n1, q^n2; q^mod) / (q^d1, q^d2; q^mod).
    std::vector<Exponent> num;
    std::vector<Exponent> den;
    Exponent modulus;
    CFSpec cf;           ///< depth left at 0; callers choose
    /// Exponent s (in q units) of the (1 - q^s) factor that turns the limit
    /// product into the tabulated closed form.
    Exponent shift;

    Exponent lattice() const { return cf.denom; }
    /// Closed form without prefactor, on the integer lattice.
    ProductSpec starred() const;
    /// Closed form without prefactor, on lattice().
    ProductSpec product() const;
    ThetaSpec theta_numerator() const;    ///< f(-q^n1, -q^n2)
    ThetaSpec theta_denominator() const;  ///< f(-q^d1, -q^d2)
};

const std::vector<NamedCF>& named_cfs();
/// Throws DomainError for an unknown id.
const NamedCF& named_cf(std::string_view id);

/// prefactor * closed-form product, on the CF's lattice.
LatticeSeries named_cf_product(const NamedCF& cf, Exponent order);
LatticeSeries named_cf_product(std::string_view id, Exponent order);
/// prefactor * f(num) / f(den), via theta sums.
LatticeSeries named_cf_theta_quotient(const NamedCF& cf, Exponent order);
/// prefactor * (1 - q^shift) * convergent at the given depth.
LatticeSeries named_cf_convergent(const NamedCF& cf, int depth, Exponent order);

struct CFCertificate {
    std::string id;
    Exponent order;  ///< lattice numerator
    Exponent denom;
    std::optional<int> depth;  ///< smallest certifying depth
    bool certified = false;
    std::optional<Mismatch> first_mismatch;  ///< at the deepest depth tried, on failure
    /// agreement[D]: first exponent numerator where depth D disagrees, or order + 1.
    std::vector<Exponent> agreement;
};

CFCertificate certify_cf(const NamedCF& cf, Exponent order, int max_depth);
CFCertificate certify_cf(std::string_view id, Exponent order, int max_depth);

}  // namespace qcf

#endif
