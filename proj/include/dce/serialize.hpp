#ifndef DCE_SERIALIZE_HPP
#define DCE_SERIALIZE_HPP

/// @file serialize.hpp
/// Serialization of bench results: shortest round-trip number formatting,
/// CSV and JSON emission with stable ordering, payload hashing, and the run
/// manifest. Data payloads are byte-identical for identical inputs; the only
/// timestamp lives in the manifest, which is excluded from hashing.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dce/design_bench.hpp"
#include "dce/discrimination.hpp"
#include "dce/superradiance.hpp"

namespace dce {

inline constexpr const char* kToolVersion = "0.1.0";

/// Name of the manifest file inside an output directory; every JSON payload
/// references it and it lists every payload with its hash.
inline constexpr const char* kManifestName = "manifest.json";

using ordered_json = nlohmann::ordered_json;

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

/// FNV-1a 64-bit hash of a byte string, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

/// Writes one CSV row, joining cells with commas. Cells must not contain
/// commas, quotes or newlines (none of the bench's values do).
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

/// JSON views of the result types (stable key order, full precision).
ordered_json to_json(const ScenarioRecord& record);
ordered_json to_json(const ConstraintReport& report);
ordered_json to_json(const DiscriminationReport& report);
ordered_json to_json(const BorderlineScan& scan);
ordered_json to_json(const DelayDistribution& dist);
ordered_json to_json(const Table1Result& result);

/// One output file registered in a manifest.
struct ManifestOutput {
    std::string path;      ///< relative to the manifest's directory
    std::string fnv1a64;   ///< payload hash
};

/// Builds the manifest document: command, tool version, config hash, seed
/// (null when the command uses no randomness), UTC timestamp, output list.
ordered_json make_manifest(const std::string& command, const std::string& config_hash,
                           std::optional<std::uint64_t> rng_seed,
                           const std::vector<ManifestOutput>& outputs);

/// Serializes a JSON payload: 2-space indentation and a trailing newline.
std::string dump_payload(const ordered_json& payload);

}  // namespace dce

#endif  // DCE_SERIALIZE_HPP
