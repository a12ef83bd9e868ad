#include "teamgame/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace teamgame {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& field, int line_no) {
  const std::string t = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw CsvError("line " + std::to_string(line_no) + ": cannot parse number '" + t + "'");
  }
  return value;
}

void write_comments(std::ostream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << '#' << c << '\n';
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void write_strategy_csv(std::ostream& out, const Strategy& y, const std::vector<std::string>& comments) {
  write_comments(out, comments);
  out << "index,value\n";
  for (Eigen::Index k = 0; k < y.size(); ++k) out << k << ',' << format_number(y[k]) << '\n';
}

void write_strategy_csv(std::ostream& out, const SampledStrategy& f,
                        const std::vector<std::string>& comments) {
  write_comments(out, comments);
  out << "x,value\n";
  for (Eigen::Index j = 0; j < f.size(); ++j) {
    out << format_number(f.x(j)) << ',' << format_number(f[j]) << '\n';
  }
}

StrategyFile read_strategy_csv(std::istream& in) {
  StrategyFile file;
  std::vector<double> keys;
  std::vector<double> values;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      file.comments.push_back(t.substr(1));
      continue;
    }
    const auto comma = t.find(',');
    if (comma == std::string::npos) throw CsvError("line " + std::to_string(line_no) + ": expected two fields");
    const std::string a = trim(t.substr(0, comma));
    const std::string b = trim(t.substr(comma + 1));
    if (!have_header) {
      if (b != "value" || (a != "index" && a != "x")) {
        throw CsvError("expected header 'index,value' or 'x,value', got '" + t + "'");
      }
      file.sampled = a == "x";
      have_header = true;
      continue;
    }
    keys.push_back(parse_double(a, line_no));
    values.push_back(parse_double(b, line_no));
  }
  if (!have_header) throw CsvError("missing header line");
  if (values.size() < 2) throw CsvError("strategy file needs at least two rows");

  const auto n = static_cast<Eigen::Index>(values.size());
  const double N = static_cast<double>(n - 1);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double expected = file.sampled ? k / N : static_cast<double>(k);
    if (std::abs(keys[k] - expected) > 1e-9) {
      throw CsvError("row " + std::to_string(k) + ": grid key " + format_number(keys[k]) +
                     " does not match the uniform grid (expected " + format_number(expected) + ")");
    }
  }
  file.values = Eigen::Map<const Eigen::VectorXd>(values.data(), n);
  return file;
}

StrategyFile read_strategy_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  return read_strategy_csv(in);
}

}  // namespace teamgame
