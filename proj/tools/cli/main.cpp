#include <chrono>
#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace fc = frobkit::cli;

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw frobkit::InvalidArgument("cannot write '" + path + "'");
  out << content;
}

std::string command_line(int argc, char** argv) {
  std::vector<std::string> parts(argv, argv + argc);
  return fc::join(parts, " ");
}

int run(int argc, char** argv) {
  CLI::App app{"frobkit: Frobenius and Cartier computations over F_p"};
  app.require_subcommand(1);
  fc::Globals g;
  app.add_flag("--json", g.json, "print a JSON document instead of text");
  app.add_option("--seed", g.seed, "RNG seed for randomised checks");
  app.add_option("--jobs", g.jobs, "worker threads (0 = all cores)");
  app.add_option("--manifest", g.manifest, "write a run manifest to this path");
  auto commands = fc::register_commands(app, g);
  for (auto& cmd : commands) cmd.app->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? fc::kOk : fc::kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  for (const auto& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    fc::Outcome out = cmd.run();
    const std::string name = cmd.app->get_name();
    for (const auto& a : out.artifacts) write_file(a.path, a.content);

    const auto result_hash = fc::hex64(frobkit::content_hash(out.result.dump()));
    std::string printed;
    if (g.json) {
      fc::json doc{{"p", out.p}, {"vars", out.vars}, {"command", name}, {"result", out.result},
                   {"hash", result_hash}};
      printed = doc.dump(2) + "\n";
    } else {
      printed = out.text;
    }
    std::cout << printed << std::flush;

    if (!g.manifest.empty()) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
      fc::json artifacts = fc::json::array();
      for (const auto& a : out.artifacts) {
        artifacts.push_back({{"path", a.path}, {"hash", fc::hex64(frobkit::content_hash(a.content))}});
      }
      fc::json manifest{{"command_line", command_line(argc, argv)},
                        {"command", name},
                        {"p", out.p},
                        {"ring", out.vars},
                        {"seed", g.seed},
                        {"jobs", g.jobs},
                        {"budgets", out.budgets},
                        {"artifacts", artifacts},
                        {"result_hash", result_hash},
                        {"output_hash", fc::hex64(frobkit::content_hash(printed))},
                        {"verified", out.verified},
                        {"wall_clock_ms", ms}};
      write_file(g.manifest, manifest.dump(2) + "\n");
    }
    return out.verified ? fc::kOk : fc::kVerificationFailed;
  }
  return fc::kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fc::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return fc::kVerificationFailed;
  } catch (const frobkit::InternalError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return fc::kVerificationFailed;
  } catch (const frobkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fc::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fc::kUsage;
  }
}
