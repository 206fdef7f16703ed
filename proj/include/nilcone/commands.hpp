#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nilcone/partitions.hpp"

namespace nilcone::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, budget_exceeded = 3 };

enum class TableFormat { table, json, csv };
TableFormat parse_table_format(const std::string& s);

/// Columns: label, enh_dim, exo_dim, rigid.
std::string cmd_orbits(int n, TableFormat format, TextStyle style = TextStyle::compact);
/// Columns: label, lambda, enh_dim, exo_dim, nilcone_orbit.
std::string cmd_classes(int n, TableFormat format, TextStyle style = TextStyle::compact);
/// Columns: lambda, choice, enh_dim, exo_dim, nilpotent_orbit.
std::string cmd_sheets(int n, TableFormat format, TextStyle style = TextStyle::compact);

struct InduceRequest {
    std::string levi;
    /// '|'-separated labels, one per Levi block; empty together with rigid_prefix.
    std::string bipartitions;
    std::optional<int> rigid_prefix;
    bool representative = false;
    TextStyle style = TextStyle::compact;
};
/// The induced label on one line, then the representative document when asked.
std::string cmd_induce(const InduceRequest& req);

enum class IdentifyLevel { orbit, klass };
std::string cmd_identify_text(const std::string& document, IdentifyLevel level, TextStyle style = TextStyle::compact);
std::string cmd_identify_file(const std::string& path, IdentifyLevel level, TextStyle style = TextStyle::compact);

enum class HasseKind { orbits, classes, sheets };
/// DOT text.
std::string cmd_hasse(int n, HasseKind kind, TextStyle style = TextStyle::compact);

struct VerifyRequest {
    std::string suite;
    int n = 3;
    std::uint32_t p = 2;
    std::uint64_t seed = 20240601;
    bool parallel = false;
};
/// The JSON report and whether every check passed.
std::pair<std::string, bool> cmd_verify(const VerifyRequest& req);

/// Full command-line entry point (arguments exclude the program name).
/// Output is assembled first and written once.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcone::cli
