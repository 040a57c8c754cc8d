#pragma once

// CSV output: a "# cmd: ..." comment line, a header, then rows. Reals use 17
// significant digits, fields are quoted per RFC 4180 when needed, lines end
// in LF.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pidft {

/// "%.17g"
std::string format_real(double v);

std::string csv_escape(std::string_view field);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::string& command_line,
            const std::vector<std::string>& header);

  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

/// Writes `content` to `path`, replacing the file. Throws std::runtime_error
/// when the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pidft
