#ifndef CGT_JSON_IO_HPP
#define CGT_JSON_IO_HPP

#include <json.hpp>

#include "cgt/suite.hpp"

namespace cgt {

/// Insertion-ordered JSON keeps reports byte-stable across runs.
using ojson = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "0.1.0";

/// Abelian groups always serialize as {free_rank, invariant_factors}.
ojson json_of(const AbelianGroup& a);
ojson json_of(const IsoFingerprint& f);
ojson json_of(const InstanceReport& r);
ojson json_of(const SuiteReport& r);

/// Top-level report schema: {command, inputs, results, diagnostics, version}.
ojson make_report(const std::string& command, ojson inputs, ojson results, ojson diagnostics);

}  // namespace cgt

#endif
