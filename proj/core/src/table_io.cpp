#include "loopkit/table_io.hpp"

#include <fstream>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {

// next non-comment, non-blank line; false at EOF
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

FiniteLoop read_table(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) throw BadTable("missing order line");
  int n = 0;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n) || n <= 0) throw BadTable("line " + std::to_string(lineno) + ": bad order");
    if (ls >> extra) throw BadTable("line " + std::to_string(lineno) + ": trailing tokens after order");
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!next_line(in, line, lineno))
      throw BadTable("unexpected end of file: expected " + std::to_string(n) + " rows");
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) {
      if (v < 0 || v >= n)
        throw BadTable("line " + std::to_string(lineno) + ", column " + std::to_string(row.size() + 1) +
                       ": entry " + std::to_string(v) + " out of range");
      row.push_back(v);
    }
    if (!ls.eof())
      throw BadTable("line " + std::to_string(lineno) + ": non-numeric token");
    if (static_cast<int>(row.size()) != n)
      throw BadTable("line " + std::to_string(lineno) + ": ragged row (" + std::to_string(row.size()) +
                     " entries, expected " + std::to_string(n) + ")");
    rows.push_back(std::move(row));
  }
  return FiniteLoop::from_table(rows);
}

FiniteLoop read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BadTable("cannot open " + path.string());
  try {
    return read_table(in);
  } catch (const BadTable& e) {
    throw BadTable(path.string() + ": " + e.what());
  }
}

void write_table(std::ostream& out, const FiniteLoop& q, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << q.size() << '\n';
  for (int i = 0; i < q.size(); ++i) {
    for (int j = 0; j < q.size(); ++j) {
      if (j) out << ' ';
      out << q.mul(i, j);
    }
    out << '\n';
  }
}

void write_table_file(const std::filesystem::path& path, const FiniteLoop& q,
                      const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw BadTable("cannot open " + path.string() + " for writing");
  write_table(out, q, comment);
}

}  // namespace loopkit
