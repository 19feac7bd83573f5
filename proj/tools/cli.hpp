#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace isoclass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitDomainError = 3;
inline constexpr int kExitIoError = 4;

enum class Format
{
    csv,
    json,
};

/// One printed value. Rationals travel as their "num/den" string.
using Cell = std::variant<std::int64_t, double, std::string, bool>;
using Fields = std::vector<std::pair<std::string, Cell>>;

/// Everything a subcommand writes: parameters, a fixed-schema table, and
/// derived summary values.
struct Document
{
    std::string command;
    Fields params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    Fields summary;
};

/// 12 significant digits; "nan"/"inf" spelled out for CSV.
std::string format_number(double value);

std::string to_csv(const Document& doc);
std::string to_json(const Document& doc);

/// Parses argv (argv[0] is the program name), runs the command and writes
/// the output. Returns one of the kExit* codes; diagnostics go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace isoclass::cli
