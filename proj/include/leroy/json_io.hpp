#ifndef LEROY_JSON_IO_HPP
#define LEROY_JSON_IO_HPP

#include <string>

#include "leroy/criteria.hpp"
#include "leroy/disk_verify.hpp"
#include "leroy/series.hpp"

namespace leroy {

/// Canonical JSON: fixed key order, floats at 17 significant digits, so
/// parse-then-reserialize is byte-identical.
std::string format_double(double value);

std::string to_json(const SeriesValue& value);
std::string to_json(const Clause& clause);
std::string to_json(const Certificate& certificate);
std::string to_json(const VerificationReport& report);
std::string to_json(const AgreementRecord& record);

Certificate certificate_from_json(const std::string& text);
VerificationReport report_from_json(const std::string& text);

}  // namespace leroy

#endif  // LEROY_JSON_IO_HPP
