#pragma once

#include <istream>
#include <vector>

#include "bwlv/types.hpp"

namespace bwlv {

/// Association-wide constants shared by every scenario row.
struct global_constants {
    double beta_p = 0.006456;
    double beta_d = 0.006456;  // not independently known; defaults to beta_p
    double alpha_pd = 0.05;
    double nu = 0.05;
    double phi = 0.4;
    double eps_p = 0.34;   // preys per month
    double eps_d = 0.294;  // predators per month
    int gamma = 3;
    double n_p0 = 3.0;  // observed densities per km^2
    double n_d0 = 1.1;
};

/// Built-in Serengeti constants (identical to data/serengeti.params).
global_constants serengeti_constants();

/// Built-in scenario table (identical to data/table1.csv), merged with the
/// Serengeti constants.
std::vector<interaction_params> bundled_scenario_table();

/// Parses the scenario file format: header
///   alpha_pp,alpha_dd,lambda1,lambda2,xi_p,xi_d
/// then one comma-separated row per scenario. Each row is merged with the
/// supplied global constants; order is preserved. An empty stream yields an
/// empty list. Throws parse_error with the offending line number.
std::vector<interaction_params> load_scenario_table(std::istream& source,
                                                    const global_constants& globals);

/// Parses a `key = value` constants file ('#' starts a comment). Unknown keys
/// are an error. Keys not present keep their default.
global_constants load_params_file(std::istream& source);

}  // namespace bwlv
