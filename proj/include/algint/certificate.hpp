#ifndef ALGINT_CERTIFICATE_HPP
#define ALGINT_CERTIFICATE_HPP

#include "algint/constructor.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace algint {

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json integer_to_json(const Integer& value);
Integer integer_from_json(const nlohmann::json& value);

nlohmann::ordered_json certificate_to_json(const ConstructionCertificate& cert);

struct AuditReport {
    std::vector<std::string> mismatches;
    std::size_t checks_verified = 0;

    bool ok() const { return mismatches.empty(); }
};

/// Re-derives every stored value of a certificate from its JSON alone and
/// lists each disagreement. Shares no state with the producer.
AuditReport audit_certificate(const nlohmann::json& doc);

} // namespace algint

#endif
