#include "propo/table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace propo {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '\'';
    if (!ok) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  Int value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

struct PendingTerm {
  std::int64_t coefficient;
  int q_power;
  std::string target;
};

struct PendingRow {
  std::size_t line;
  std::string source;
  std::vector<PendingTerm> terms;
};

PendingRow parse_chev(std::size_t line, std::string_view rest) {
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos)
    throw ParseError(line, "expected 'chev SRC : C qD TGT, ...'");
  PendingRow row{line, std::string(trim(rest.substr(0, colon))), {}};
  if (!is_identifier(row.source))
    throw ParseError(line, "invalid source name '" + row.source + "'");

  std::string_view body = trim(rest.substr(colon + 1));
  if (body.empty()) return row;  // explicitly empty row
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    const auto fields = split_ws(trim(body.substr(start, comma - start)));
    if (fields.size() != 3)
      throw ParseError(line, "term must have the form 'C qD TARGET'");
    const auto coefficient = to_int<std::int64_t>(fields[0]);
    if (!coefficient || *coefficient <= 0)
      throw ParseError(line, "coefficient must be a positive integer, got '" +
                                 std::string(fields[0]) + "'");
    if (fields[1].size() < 2 || fields[1][0] != 'q')
      throw ParseError(line, "q-power must look like q0, q1, ..., got '" +
                                 std::string(fields[1]) + "'");
    const auto power = to_int<int>(fields[1].substr(1));
    if (!power || *power < 0)
      throw ParseError(line, "q-power must be a nonnegative integer, got '" +
                                 std::string(fields[1]) + "'");
    if (!is_identifier(fields[2]))
      throw ParseError(line, "invalid target name '" + std::string(fields[2]) + "'");
    row.terms.push_back({*coefficient, *power, std::string(fields[2])});
    start = comma + 1;
  }
  return row;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : TableError(line ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

ChevalleyTable::ChevalleyTable(std::string name, std::vector<BasisElement> basis,
                               int fano_index, int anticanonical_multiple,
                               std::vector<std::vector<QTerm>> rows)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      fano_index_(fano_index),
      multiple_(anticanonical_multiple),
      rows_(std::move(rows)) {
  if (fano_index_ <= 0) throw TableError("fano_index must be positive");
  if (multiple_ <= 0) throw TableError("c1_multiple must be positive");
  if (rows_.size() != basis_.size())
    throw TableError("row count does not match basis size");

  std::set<std::string_view> seen;
  std::optional<std::size_t> identity, hyperplane;
  std::size_t degree_zero = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    if (!is_identifier(b.name)) throw TableError("invalid basis name '" + b.name + "'");
    if (b.degree < 0) throw TableError("negative degree for '" + b.name + "'");
    if (!seen.insert(b.name).second) throw TableError("duplicate basis name '" + b.name + "'");
    if (b.degree == 0) ++degree_zero;
    if (b.name == "one") identity = i;
    if (b.name == "h") hyperplane = i;
  }
  if (!identity || basis_[*identity].degree != 0)
    throw TableError("basis must contain the identity 'one' in degree 0");
  if (degree_zero != 1) throw TableError("exactly one basis element may have degree 0");
  if (!hyperplane || basis_[*hyperplane].degree != 1)
    throw TableError("basis must contain the hyperplane 'h' in degree 1");
  identity_ = *identity;
  hyperplane_ = *hyperplane;

  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::set<std::size_t> targets;
    for (const auto& t : rows_[i]) {
      if (t.coefficient <= 0)
        throw TableError("non-positive coefficient in row '" + basis_[i].name + "'");
      if (t.q_power < 0)
        throw TableError("negative q-power in row '" + basis_[i].name + "'");
      if (t.target >= basis_.size())
        throw TableError("target out of range in row '" + basis_[i].name + "'");
      if (!targets.insert(t.target).second)
        throw TableError("row '" + basis_[i].name + "' lists target '" +
                         basis_[t.target].name + "' twice");
    }
  }
}

std::optional<std::size_t> ChevalleyTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

ChevalleyTable ChevalleyTable::with_fano_index(int fano_index) const {
  return ChevalleyTable(name_, basis_, fano_index, multiple_, rows_);
}

ChevalleyTable parse_table(std::istream& in) {
  std::string name = "unnamed";
  std::optional<int> fano_index, multiple;
  std::vector<BasisElement> basis;
  std::vector<std::size_t> basis_line;
  std::vector<PendingRow> pending;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos)
      text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;

    const auto fields = split_ws(text);
    const std::string_view key = fields[0];
    if (key == "chev") {
      pending.push_back(parse_chev(line, text.substr(4)));
      continue;
    }
    if (key == "name") {
      if (fields.size() != 2) throw ParseError(line, "expected 'name NAME'");
      name = std::string(fields[1]);
    } else if (key == "fano_index" || key == "c1_multiple") {
      if (fields.size() != 2) throw ParseError(line, "expected '" + std::string(key) + " N'");
      const auto v = to_int<int>(fields[1]);
      if (!v || *v <= 0)
        throw ParseError(line, std::string(key) + " must be a positive integer");
      (key == "fano_index" ? fano_index : multiple) = *v;
    } else if (key == "basis") {
      if (fields.size() != 3) throw ParseError(line, "expected 'basis NAME DEGREE'");
      if (!is_identifier(fields[1]))
        throw ParseError(line, "invalid basis name '" + std::string(fields[1]) + "'");
      const auto deg = to_int<int>(fields[2]);
      if (!deg || *deg < 0) throw ParseError(line, "degree must be a nonnegative integer");
      for (const auto& b : basis)
        if (b.name == fields[1])
          throw ParseError(line, "duplicate basis name '" + b.name + "'");
      basis.push_back({std::string(fields[1]), *deg});
      basis_line.push_back(line);
    } else {
      throw ParseError(line, "unknown directive '" + std::string(key) + "'");
    }
  }

  if (!fano_index) throw ParseError(0, "missing fano_index");
  if (!multiple) throw ParseError(0, "missing c1_multiple");
  if (basis.empty()) throw ParseError(0, "no basis elements declared");
  const bool has_degree0 = std::any_of(basis.begin(), basis.end(), [](auto& b) { return b.degree == 0; });
  const bool has_degree1 = std::any_of(basis.begin(), basis.end(), [](auto& b) { return b.degree == 1; });
  if (!has_degree0) throw ParseError(0, "no basis element of degree 0");
  if (!has_degree1) throw ParseError(0, "no basis element of degree 1");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].name, i);

  std::vector<std::vector<QTerm>> rows(basis.size());
  std::vector<std::size_t> row_line(basis.size(), 0);
  for (const auto& p : pending) {
    const auto src = index.find(p.source);
    if (src == index.end())
      throw ParseError(p.line, "unknown source name '" + p.source + "'");
    if (row_line[src->second])
      throw ParseError(p.line, "second row for '" + p.source + "' (first on line " +
                                   std::to_string(row_line[src->second]) + ")");
    row_line[src->second] = p.line;
    for (const auto& t : p.terms) {
      const auto tgt = index.find(t.target);
      if (tgt == index.end())
        throw ParseError(p.line, "unknown target name '" + t.target + "'");
      for (const auto& existing : rows[src->second])
        if (existing.target == tgt->second)
          throw ParseError(p.line, "target '" + t.target + "' listed twice");
      rows[src->second].push_back({t.coefficient, t.q_power, tgt->second});
    }
  }

  try {
    return ChevalleyTable(std::move(name), std::move(basis), *fano_index, *multiple,
                          std::move(rows));
  } catch (const ParseError&) {
    throw;
  } catch (const TableError& e) {
    throw ParseError(0, e.what());
  }
}

ChevalleyTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_table(in);
}

ChevalleyTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open '" + path + "'");
  return parse_table(in);
}

std::string serialize_table(const ChevalleyTable& table) {
  std::ostringstream out;
  out << "name        " << table.name() << '\n'
      << "fano_index  " << table.fano_index() << '\n'
      << "c1_multiple " << table.anticanonical_multiple() << '\n';
  for (const auto& b : table.basis()) out << "basis " << b.name << ' ' << b.degree << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << "chev " << table.basis()[i].name << " :";
    const auto& row = table.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << (k ? ", " : " ") << row[k].coefficient << " q" << row[k].q_power << ' '
          << table.basis()[row[k].target].name;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::size_t> empty_rows(const ChevalleyTable& table) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.row(i).empty()) out.push_back(i);
  return out;
}

}  // namespace propo
