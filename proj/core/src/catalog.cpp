#include "biperiodic/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "biperiodic/errors.hpp"

namespace biperiodic {
namespace {

struct Row {
  CatalogEntry entry;
  // Builds (w0, w1, a, b, c) from the template arguments.
  Params (*make)(std::span<const Rational>);
};

const std::vector<Row>& rows() {
  using Args = std::span<const Rational>;
  using K = SequenceKind;
  static const std::vector<Row> table = {
      {{"generalized-biperiodic-fibonacci", "{u_n}", "generalized bi-periodic Fibonacci sequence",
        "w(0,1;a,b,c)", {"a", "b", "c"}, K::u, true},
       [](Args x) { return Params(x[0], x[1], x[2], 0, 1); }},
      {{"generalized-biperiodic-lucas", "{v_n}", "generalized bi-periodic Lucas sequence",
        "w(2,b;a,b,c)", {"a", "b", "c"}, K::v, true},
       [](Args x) { return Params(x[0], x[1], x[2], 2, x[1]); }},
      {{"biperiodic-fibonacci", "{q_n}", "bi-periodic Fibonacci sequence", "w(0,1;a,b,1)",
        {"a", "b"}, K::w, true},
       [](Args x) { return Params(x[0], x[1], 1, 0, 1); }},
      // Slots as tabulated: a and b trade places relative to {q_n}.
      {{"biperiodic-lucas", "{p_n}", "bi-periodic Lucas sequence", "w(2,a;b,a,1)", {"a", "b"},
        K::w, true},
       [](Args x) { return Params(x[1], x[0], 1, 2, x[0]); }},
      {{"biperiodic-horadam", "{W_n}", "bi-periodic Horadam sequence", "w(w0,w1;a,b,1)",
        {"w0", "w1", "a", "b"}, K::w, true},
       [](Args x) { return Params(x[2], x[3], 1, x[0], x[1]); }},
      {{"horadam", "{H_n}", "Horadam sequence", "w(w0,w1;p,p,-q)", {"w0", "w1", "p", "q"}, K::w,
        true},
       [](Args x) { return Params(x[2], x[2], -x[3], x[0], x[1]); }},
      {{"fibonacci", "{F_n}", "Fibonacci sequence", "w(0,1;1,1,1)", {}, K::w, true},
       [](Args) { return Params(1, 1, 1, 0, 1); }},
      {{"lucas", "{L_n}", "Lucas sequence", "w(2,1;1,1,1)", {}, K::w, true},
       [](Args) { return Params(1, 1, 1, 2, 1); }},
      {{"k-fibonacci", "{F_k,n}", "k-Fibonacci sequence", "w(0,1;k,k,1)", {"k"}, K::w, true},
       [](Args x) { return Params(x[0], x[0], 1, 0, 1); }},
      // Initials (0, k) as tabulated; this is k times the k-Fibonacci sequence.
      {{"k-lucas", "{L_k,n}", "k-Lucas sequence", "w(0,k;k,k,1)", {"k"}, K::w, true},
       [](Args x) { return Params(x[0], x[0], 1, 0, x[0]); }},
      {{"pell", "{P_n}", "Pell sequence", "w(0,1;2,2,1)", {}, K::w, true},
       [](Args) { return Params(2, 2, 1, 0, 1); }},
      {{"pell-lucas", "{PL_n}", "Pell-Lucas sequence", "w(2,2;2,2,1)", {}, K::w, true},
       [](Args) { return Params(2, 2, 1, 2, 2); }},
      {{"jacobsthal", "{J_n}", "Jacobsthal sequence", "w(0,1;1,1,2)", {}, K::w, true},
       [](Args) { return Params(1, 1, 2, 0, 1); }},
      {{"jacobsthal-lucas", "{JL_n}", "Jacobsthal-Lucas sequence", "w(2,1;1,1,2)", {}, K::w,
        true},
       [](Args) { return Params(1, 1, 2, 2, 1); }},
      {{"k-lucas-classical", "{L_k,n}", "k-Lucas sequence with initials (2, k)", "w(2,k;k,k,1)",
        {"k"}, K::w, false},
       [](Args x) { return Params(x[0], x[0], 1, 2, x[0]); }},
  };
  return table;
}

std::string valid_keys() {
  std::ostringstream os;
  bool first = true;
  for (const auto& row : rows()) {
    os << (first ? "" : ", ") << row.entry.key;
    if (row.entry.is_template()) {
      os << "(";
      for (std::size_t i = 0; i < row.entry.arguments.size(); ++i) {
        os << (i ? "," : "") << row.entry.arguments[i];
      }
      os << ")";
    }
    first = false;
  }
  return os.str();
}

const Row& find_row(std::string_view name) {
  const auto& table = rows();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const Row& row) { return row.entry.key == name; });
  if (it == table.end()) {
    throw LookupError("unknown sequence '" + std::string(name) + "'; valid keys: " + valid_keys());
  }
  return *it;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

NamedSequence CatalogEntry::instantiate(std::span<const Rational> args) const {
  if (args.size() != arguments.size()) {
    throw LookupError("'" + key + "' takes " + std::to_string(arguments.size()) +
                      " argument(s), got " + std::to_string(args.size()));
  }
  const Row& row = find_row(key);
  return {key, display_name, row.make(args), kind};
}

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& row : rows()) out.push_back(row.entry);
    return out;
  }();
  return entries;
}

std::size_t catalog_table_rows() {
  const auto& entries = catalog_list();
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const CatalogEntry& e) { return e.from_table; }));
}

NamedSequence lookup(std::string_view name, std::span<const Rational> args) {
  return find_row(name).entry.instantiate(args);
}

NamedSequence lookup(std::string_view key) {
  key = trim(key);
  const auto open = key.find('(');
  if (open == std::string_view::npos) return lookup(key, {});
  if (key.back() != ')') {
    throw LookupError("malformed sequence key '" + std::string(key) + "'");
  }
  const std::string_view name = trim(key.substr(0, open));
  std::string_view body = key.substr(open + 1, key.size() - open - 2);
  std::vector<Rational> args;
  if (!trim(body).empty()) {
    while (true) {
      const auto comma = body.find(',');
      args.push_back(Rational::parse(trim(body.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  }
  return lookup(name, args);
}

}  // namespace biperiodic
