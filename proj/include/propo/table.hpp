#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace propo {

/// One class of the graded basis. `degree` is the complex cohomological
/// degree; the identity `one` sits in degree 0 and the hyperplane `h` in 1.
struct BasisElement {
  std::string name;
  int degree = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// A single term `coefficient * q^q_power * basis[target]` of some h*alpha.
struct QTerm {
  std::int64_t coefficient = 0;
  int q_power = 0;
  std::size_t target = 0;

  friend bool operator==(const QTerm&, const QTerm&) = default;
};

class TableError : public std::runtime_error {
 public:
  explicit TableError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public TableError {
 public:
  ParseError(std::size_t line, const std::string& message);

  /// 1-based line of the offending input, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Quantum Chevalley multiplication table: the graded basis, the Fano
/// index r, the anticanonical multiple m (c1 = m*h) and one row h*alpha per
/// basis element. Immutable once constructed; basis order is file order.
class ChevalleyTable {
 public:
  /// Checks structural invariants (unique names, `one` of degree 0 as the
  /// only degree-0 class, `h` of degree 1, row targets in range, positive
  /// coefficients, nonnegative q-powers). Grading is checked separately.
  ChevalleyTable(std::string name, std::vector<BasisElement> basis,
                 int fano_index, int anticanonical_multiple,
                 std::vector<std::vector<QTerm>> rows);

  const std::string& name() const noexcept { return name_; }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  int fano_index() const noexcept { return fano_index_; }
  int anticanonical_multiple() const noexcept { return multiple_; }

  /// Terms of h * basis[source].
  const std::vector<QTerm>& row(std::size_t source) const { return rows_.at(source); }
  const std::vector<std::vector<QTerm>>& rows() const noexcept { return rows_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t identity_index() const noexcept { return identity_; }
  std::size_t hyperplane_index() const noexcept { return hyperplane_; }

  /// Copy with a different Fano index and unchanged rows. Used to build
  /// negative controls; the result usually fails grading.
  ChevalleyTable with_fano_index(int fano_index) const;

  friend bool operator==(const ChevalleyTable&, const ChevalleyTable&) = default;

 private:
  std::string name_;
  std::vector<BasisElement> basis_;
  int fano_index_;
  int multiple_;
  std::vector<std::vector<QTerm>> rows_;
  std::size_t identity_ = 0;
  std::size_t hyperplane_ = 0;
};

ChevalleyTable parse_table(std::istream& in);
ChevalleyTable parse_table(std::string_view text);
ChevalleyTable load_table(const std::string& path);

/// Canonical text form; parse_table(serialize_table(t)) == t.
std::string serialize_table(const ChevalleyTable& table);

/// Indices of basis elements whose row h*alpha is empty.
std::vector<std::size_t> empty_rows(const ChevalleyTable& table);

}  // namespace propo
