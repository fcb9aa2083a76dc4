#ifndef MULTIREG_CLI_SUPPORT_HPP
#define MULTIREG_CLI_SUPPORT_HPP

#include "multireg/region.hpp"
#include "multireg/ring.hpp"

#include <string>
#include <vector>

namespace multireg_cli {

// Compact one-line region report: "generators: ... [exact]" or the
// limiting-window note.
std::string region_line(const multireg::Region& R);

// The four documented walkthrough scenarios; each returns a full text
// report, deterministic and golden-file diffable.
std::string scenario_classical(const std::string& data_dir);
std::string scenario_weighted(const std::string& data_dir);
std::string scenario_products(const std::string& data_dir);
std::string scenario_hirzebruch(const std::string& data_dir);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Cross-module invariant battery (fixed seeds, deterministic).
std::vector<Check> run_selftest(const std::string& data_dir);

} // namespace multireg_cli

#endif
