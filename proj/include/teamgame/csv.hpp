#pragma once

// Flat-file formats. Strategy files carry the header `index,value` (discrete)
// or `x,value` (sampled); lines starting with '#' are comments.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "teamgame/strategy.hpp"

namespace teamgame {

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form.
std::string format_number(double value);

struct StrategyFile {
  bool sampled = false;
  Eigen::VectorXd values;
  std::vector<std::string> comments;  ///< without the leading '#'
};

void write_strategy_csv(std::ostream& out, const Strategy& y,
                        const std::vector<std::string>& comments = {});
void write_strategy_csv(std::ostream& out, const SampledStrategy& f,
                        const std::vector<std::string>& comments = {});

StrategyFile read_strategy_csv(std::istream& in);
StrategyFile read_strategy_csv_file(const std::string& path);

}  // namespace teamgame
