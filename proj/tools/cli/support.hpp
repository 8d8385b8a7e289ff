#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "frobkit/frobkit.hpp"

namespace frobkit::cli {

using json = nlohmann::ordered_json;

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kVerificationFailed = 2;

// Raised when a command's own check fails; maps to kVerificationFailed.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

struct Artifact {
  std::string path;
  std::string content;
};

struct Outcome {
  Outcome() = default;
  Outcome(std::uint64_t p_, std::vector<std::string> vars_, json result_ = json::object())
      : p(p_), vars(std::move(vars_)), result(std::move(result_)) {}

  std::uint64_t p = 0;
  std::vector<std::string> vars;
  json result = json::object();
  std::string text;
  std::vector<Artifact> artifacts;
  json budgets = json::object();
  bool verified = true;
};

std::vector<std::string> split(std::string_view s, char sep);
std::string hex64(std::uint64_t v);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Identifiers in the expressions, sorted, after the given leading names.
std::vector<std::string> infer_vars(const std::vector<std::string>& exprs,
                                    const std::vector<std::string>& leading = {});

// "EXPR:NUM/DEN", split at the last colon.
std::pair<std::string, Rational> parse_pair(std::string_view spec);

json basis_json(const Ideal& ideal);
std::string basis_text(const Ideal& ideal);

}  // namespace frobkit::cli
