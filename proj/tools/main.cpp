#include <iostream>

#include <vortex/errors.hpp>

#include "vortexsol/commands.hpp"
#include "vortexsol/config.hpp"

int main(int argc, char** argv) {
  auto parsed = vortexsol::parse_command_line(argc, argv);
  if (parsed.exit_code) {
    (*parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message;
    return *parsed.exit_code;
  }
  try {
    return vortexsol::dispatch(parsed.config, std::cout);
  } catch (const vortex::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const vortex::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const vortex::IntervalError& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const vortex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return vortexsol::kExitConfig;
}
