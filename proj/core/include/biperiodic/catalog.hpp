#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biperiodic/rational.hpp"
#include "biperiodic/sequence.hpp"

namespace biperiodic {

/// A classical sequence expressed as a member of the family.
struct NamedSequence {
  std::string name;          // catalog key, e.g. "pell"
  std::string display_name;  // e.g. "Pell sequence"
  Params params;
  SequenceKind kind;
};

/// One catalog row. Rows with parameters are templates instantiated at
/// lookup time; `pattern` shows the row as w(w0,w1;a,b,c).
struct CatalogEntry {
  std::string key;
  std::string symbol;        // e.g. "{P_n}"
  std::string display_name;
  std::string pattern;       // e.g. "w(0,1;2,2,1)" or "w(0,1;k,k,1)"
  std::vector<std::string> arguments;
  SequenceKind kind;
  bool from_table;           // false for entries added beyond the classical table

  bool is_template() const { return !arguments.empty(); }
  /// Throws LookupError on arity mismatch, InvalidParameterError when an
  /// argument makes a, b or c zero.
  NamedSequence instantiate(std::span<const Rational> args) const;
};

/// Every row in table order, followed by extras.
const std::vector<CatalogEntry>& catalog_list();

/// Number of rows that come from the classical table (the rest are extras).
std::size_t catalog_table_rows();

/// Looks up "name" or "name(arg,arg,...)" with rational literal arguments.
/// Throws LookupError (listing valid keys) for unknown names or bad arity.
NamedSequence lookup(std::string_view key);
NamedSequence lookup(std::string_view name, std::span<const Rational> args);

}  // namespace biperiodic
