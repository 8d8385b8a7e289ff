#pragma once

#include <CLI11.hpp>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

namespace frobkit::cli {

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string manifest;
};

struct Command {
  CLI::App* app = nullptr;
  std::function<Outcome()> run;
};

std::vector<Command> register_commands(CLI::App& app, const Globals& globals);

}  // namespace frobkit::cli
