#include "uppart/bfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace uppart {

BFile parse_bfile(std::istream& in) {
  BFile file;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::int64_t index = 0;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": expected '<n> <a(n)>'");
    }
    BigInt parsed;
    try {
      parsed = BigInt(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": bad value '" + value + "'");
    }
    if (!file.entries.empty() && index <= file.entries.back().index) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": indices must increase");
    }
    file.entries.push_back({index, std::move(parsed)});
  }
  return file;
}

BFile read_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open b-file " + path.string());
  return parse_bfile(in);
}

}  // namespace uppart
