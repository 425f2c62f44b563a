#ifndef QCF_JSON_IO_HPP
#define QCF_JSON_IO_HPP

#include <json.hpp>

#include "qcf/cf_engine.hpp"
#include "qcf/dissection_scanner.hpp"
#include "qcf/identity_lab.hpp"
#include "qcf/lattice_series.hpp"
#include "qcf/partition_lab.hpp"
#include "qcf/theta_factory.hpp"

namespace qcf {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

// Coefficients and mismatch values are decimal strings throughout.
Json to_json(const LatticeSeries& s);
LatticeSeries series_from_json(const Json& j);

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);
Json to_json(const ProductSpec& p);
ProductSpec product_from_json(const Json& j);
Json to_json(const ThetaSpec& t);
ThetaSpec theta_from_json(const Json& j);

Json to_json(const std::optional<Mismatch>& m);
Json to_json(const WindowComparison& c);
Json to_json(const CFCertificate& c);
Json to_json(const IdentityReport& r);
Json to_json(const ModularReport& r);
Json to_json(const Dissection& d, bool with_terms);
Json to_json(const VanishingReport& r);
Json to_json(const RowReport& r);
Json to_json(const ColoredPartitionSpec& s);
Json to_json(const PartitionReport& r);

}  // namespace qcf

#endif
