#include "hooktab/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "hooktab/errors.hpp"

namespace hooktab {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw PreconditionViolation("malformed json, " + what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    malformed(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_vector(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array()) malformed(std::string("\"") + key + "\" must be an array");
  std::vector<int> v;
  v.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_number_integer()) malformed(std::string("\"") + key + "\" must hold integers");
    v.push_back(e.get<int>());
  }
  return v;
}

std::vector<std::vector<int>> int_grid(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array()) malformed(std::string("\"") + key + "\" must be an array");
  std::vector<std::vector<int>> g;
  g.reserve(arr.size());
  for (const auto& row : arr) {
    if (!row.is_array()) malformed(std::string("\"") + key + "\" must hold arrays");
    std::vector<int> r;
    r.reserve(row.size());
    for (const auto& e : row) {
      if (!e.is_number_integer())
        malformed(std::string("\"") + key + "\" must hold integers");
      r.push_back(e.get<int>());
    }
    g.push_back(std::move(r));
  }
  return g;
}

// m and n may come from the payload, the caller, or both; both present and
// disagreeing is an error, neither present is too.
int resolve_dim(const json& j, const char* key, std::optional<int> given) {
  if (j.is_object() && j.contains(key)) {
    const json& v = j.at(key);
    if (!v.is_number_integer()) malformed(std::string("\"") + key + "\" must be an integer");
    const int stored = v.get<int>();
    if (given && *given != stored)
      throw PreconditionViolation(std::string("\"") + key + "\" in payload contradicts caller");
    return stored;
  }
  if (!given)
    throw PreconditionViolation(std::string("\"") + key + "\" absent from payload and caller");
  return *given;
}

// Renders the hook grid as text lines: the m above-line rows, then the
// below-line region transposed into rows (depth d lists every column that
// reaches depth d).  Inner boxes print ".", everything else comes from the
// callback.  The dashed line separating the regions is as wide as the
// widest line and appears only when something lives below.
template <typename TextFn>
std::string render_grid(const HookShape& shape, const std::vector<int>& inner_rows,
                        const std::vector<int>& inner_cols, TextFn&& text) {
  const std::vector<int> rows = shape.row_lengths();
  const std::vector<int> cols = shape.column_heights_below();
  std::vector<std::string> above;
  for (int i = 1; i <= shape.m(); ++i) {
    if (rows[i - 1] == 0) continue;
    std::string line;
    for (int j = 1; j <= rows[i - 1]; ++j) {
      if (j > 1) line += ' ';
      line += j <= inner_rows[i - 1] ? std::string(".") : text(i, j);
    }
    above.push_back(std::move(line));
  }
  std::vector<std::string> below;
  const int depth = cols.empty() ? 0 : *std::max_element(cols.begin(), cols.end());
  for (int d = 1; d <= depth; ++d) {
    std::string line;
    for (int j = 1; j <= static_cast<int>(cols.size()); ++j) {
      if (cols[j - 1] < d) continue;
      if (!line.empty()) line += ' ';
      line += d <= inner_cols[j - 1] ? std::string(".") : text(shape.m() + d, j);
    }
    below.push_back(std::move(line));
  }
  if (above.empty() && below.empty()) return "(empty)\n";
  std::size_t width = 0;
  for (const auto& l : above) width = std::max(width, l.size());
  for (const auto& l : below) width = std::max(width, l.size());
  std::string out;
  for (const auto& l : above) out += l + "\n";
  if (!below.empty()) out += std::string(width, '-') + "\n";
  for (const auto& l : below) out += l + "\n";
  return out;
}

}  // namespace

namespace {
// GMP quietly maps malformed strings like "" to 0, so shapes are checked
// up front: an optional sign followed by at least one digit.
bool looks_like_integer(const std::string& s) {
  std::size_t k = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (k >= s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}
}  // namespace

Rational rational_from_string(const std::string& text) {
  // GMP aborts the process on q/0, so the parts are parsed as integers and
  // the denominator is checked before any rational is formed.
  const std::size_t slash = text.find('/');
  const std::string top = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string bottom = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!looks_like_integer(top) || !looks_like_integer(bottom))
    throw PreconditionViolation("cannot parse rational \"" + text + "\"");
  try {
    const BigInt num(top);
    const BigInt den(bottom);
    if (den == 0) throw PreconditionViolation("zero denominator in \"" + text + "\"");
    return Rational(num) / Rational(den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw PreconditionViolation("cannot parse rational \"" + text + "\"");
  }
}

json shape_to_json(const HookShape& s) {
  json j;
  j["m"] = s.m();
  j["n"] = s.n();
  j["a"] = s.a();
  j["a_prime"] = s.a_prime();
  return j;
}

HookShape shape_from_json(const json& j, std::optional<int> m, std::optional<int> n) {
  if (!j.is_object()) malformed("shape must be an object");
  const int mm = resolve_dim(j, "m", m);
  const int nn = resolve_dim(j, "n", n);
  return HookShape(mm, nn, int_vector(j, "a"), int_vector(j, "a_prime"));
}

json tableau_to_json(const HookTableau& t) {
  json j;
  j["shape"] = shape_to_json(t.shape());
  j["plus"] = t.plus();
  j["minus"] = t.minus();
  return j;
}

HookTableau tableau_from_json(const json& j, std::optional<int> m, std::optional<int> n) {
  HookShape shape = shape_from_json(field(j, "shape"), m, n);
  return HookTableau(std::move(shape), int_grid(j, "plus"), int_grid(j, "minus"));
}

json pair_to_json(const TrivialPair& p) {
  json j;
  j["b"] = p.b;
  j["b_prime"] = p.b_prime;
  return j;
}

TrivialPair pair_from_json(const json& j, int m, int n) {
  TrivialPair p{int_vector(j, "b"), int_vector(j, "b_prime")};
  if (static_cast<int>(p.b.size()) != m)
    throw LengthMismatch("pair b has " + std::to_string(p.b.size()) +
                         " entries, expected " + std::to_string(m));
  if (static_cast<int>(p.b_prime.size()) != n - 1)
    throw LengthMismatch("pair b_prime has " + std::to_string(p.b_prime.size()) +
                         " entries, expected " + std::to_string(n - 1));
  return p;
}

json skew_to_json(const SkewTableau& s) {
  json j;
  j["shape"] = shape_to_json(s.lambda());
  j["inner"] = pair_to_json(s.inner());
  j["plus"] = s.plus();
  j["minus"] = s.minus();
  return j;
}

SkewTableau skew_from_json(const json& j, std::optional<int> m, std::optional<int> n) {
  HookShape shape = shape_from_json(field(j, "shape"), m, n);
  TrivialPair inner = pair_from_json(field(j, "inner"), shape.m(), shape.n());
  return SkewTableau(std::move(shape), std::move(inner), int_grid(j, "plus"),
                     int_grid(j, "minus"));
}

json combination_to_json(const FormalCombination& c) {
  json j = json::array();
  for (const auto& [t, coeff] : c.terms()) {
    json term;
    term["coeff"] = rational_to_string(coeff);
    term["tableau"] = tableau_to_json(t);
    j.push_back(std::move(term));
  }
  return j;
}

FormalCombination combination_from_json(const json& j, std::optional<int> m,
                                        std::optional<int> n) {
  if (!j.is_array()) malformed("combination must be an array");
  FormalCombination c;
  for (const auto& term : j) {
    const json& coeff = field(term, "coeff");
    if (!coeff.is_string()) malformed("\"coeff\" must be a string");
    c.add(tableau_from_json(field(term, "tableau"), m, n),
          rational_from_string(coeff.get<std::string>()));
  }
  return c;
}

json bijection_report_to_json(const BijectionReport& r) {
  json j;
  j["shape"] = shape_to_json(r.shape);
  j["ss_count"] = r.ss_count;
  j["pass"] = r.pass;
  json counts = json::array();
  for (const auto& [mu, hit] : r.qs_counts) {
    json e;
    e["shape"] = shape_to_json(mu);
    e["count"] = hit;
    counts.push_back(std::move(e));
  }
  j["qs_counts"] = std::move(counts);
  return j;
}

std::string pretty_shape(const HookShape& s) {
  const std::vector<int> no_rows(s.m(), 0);
  const std::vector<int> no_cols(std::max(s.n() - 1, 0), 0);
  return render_grid(s, no_rows, no_cols, [](int, int) { return std::string("#"); });
}

std::string pretty_tableau(const HookTableau& t) {
  const HookShape& s = t.shape();
  const std::vector<int> no_rows(s.m(), 0);
  const std::vector<int> no_cols(std::max(s.n() - 1, 0), 0);
  return render_grid(s, no_rows, no_cols,
                     [&](int i, int j) { return std::to_string(t.entry(i, j)); });
}

std::string pretty_skew(const SkewTableau& s) {
  return render_grid(s.lambda(), s.inner().row_lengths(),
                     s.inner().column_heights_below(),
                     [&](int i, int j) { return std::to_string(s.entry(i, j)); });
}

std::string pretty_combination(const FormalCombination& c) {
  if (c.is_zero()) return "0\n";
  std::string out;
  for (const auto& [t, coeff] : c.terms())
    out += rational_to_string(coeff) + " * " + reading_word_text(t) + "\n";
  return out;
}

}  // namespace hooktab
