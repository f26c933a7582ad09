#pragma once

#include "snfpart/errors.hpp"
#include "snfpart/json_io.hpp"
#include "snfpart/partition.hpp"

#include <optional>
#include <string>
#include <utility>

namespace snfpart {

enum class Naming { letters, coords };
enum class AlgorithmChoice { recurrence, inductive, both };

// Inconsistent command options (exit code 1).
class UsageError : public Error { public: using Error::Error; };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/**
 * Output of one CLI command. `envelope` is
 * {"command": name, "input": {...}, "result": {...}, "verified": bool?};
 * `text` is the human-readable rendering of the same data.
 */
struct CommandOutput {
    json envelope;
    std::string text;
    int exit_code = kExitOk;
};

CommandOutput cmd_weights(const Partition& lambda, Naming naming);

// `rect` is only accepted with AlgorithmChoice::inductive.
CommandOutput cmd_snf(const Partition& lambda, AlgorithmChoice algorithm,
                      std::optional<std::pair<int, int>> rect, Naming naming);

// `column` selects a single j; nullopt runs every j in 1..rho+1.
CommandOutput cmd_recurrence(const Partition& lambda, std::optional<int> column, Naming naming);

CommandOutput cmd_qcatalan(int n_max);

CommandOutput cmd_selftest(int max_size);

} // namespace snfpart
