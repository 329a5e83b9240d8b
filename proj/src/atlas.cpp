#include "permsolv/atlas.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "permsolv/numth.hpp"
#include "permsolv/structure.hpp"

namespace permsolv {

namespace {

std::string cycle(std::size_t from, std::size_t to) {
  std::string out = "(";
  for (std::size_t i = from; i <= to; ++i) {
    if (i > from)
      out += ',';
    out += std::to_string(i);
  }
  return out + ")";
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    if (__builtin_mul_overflow(f, i, &f))
      throw CatalogError("group order exceeds 64-bit range");
  return f;
}

std::vector<CatalogEntry> fixed_entries() {
  return {
      {"Q8", 8, {"(1,2,5,6)(3,8,7,4)", "(1,3,5,7)(2,4,6,8)"}, 8, true, true},
      {"PSL(2,7)", 8, {"(1,2,3,4,5,6,7)", "(1,8)(2,7)(3,4)(5,6)"}, 168, false,
       false},
      {"M11", 11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}, 7920,
       false, false},
      {"M12",
       12,
       {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
        "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"},
       95040,
       false,
       false},
  };
}

CatalogEntry family_entry(char family, std::uint64_t n, std::string key) {
  CatalogEntry e;
  e.key = std::move(key);
  switch (family) {
  case 'A':
    e.degree = n;
    e.expected_order = n < 2 ? 1 : factorial(n) / 2;
    e.expected_solvable = n <= 4;
    e.expected_nilpotent = n <= 3;
    if (n < 3)
      e.generators = {""};
    else if (n == 3)
      e.generators = {"(1,2,3)"};
    else if (n % 2 == 1)
      e.generators = {cycle(1, n), cycle(n - 2, n)};
    else
      e.generators = {cycle(2, n), "(1,2,3)"};
    break;
  case 'S':
    e.degree = n;
    e.expected_order = factorial(n);
    e.expected_solvable = n <= 4;
    e.expected_nilpotent = n <= 2;
    e.generators = n < 2 ? std::vector<std::string>{""}
                         : std::vector<std::string>{cycle(1, n), "(1,2)"};
    break;
  case 'Z':
    e.degree = n;
    e.expected_order = n;
    e.expected_solvable = e.expected_nilpotent = true;
    e.generators = {n < 2 ? std::string() : cycle(1, n)};
    break;
  case 'D': {
    if (n % 2 != 0)
      throw CatalogError("dihedral key needs an even order: " + e.key);
    const std::uint64_t m = n / 2;
    e.expected_order = n;
    e.expected_solvable = true;
    e.expected_nilpotent = (m & (m - 1)) == 0;
    if (m == 1) {
      e.degree = 2;
      e.generators = {"(1,2)"};
    } else if (m == 2) {
      e.degree = 4;
      e.generators = {"(1,2)(3,4)", "(1,3)(2,4)"};
    } else {
      e.degree = m;
      std::string reflection;
      for (std::uint64_t i = 1; i < m + 1 - i; ++i)
        reflection += "(" + std::to_string(i) + "," +
                      std::to_string(m + 1 - i) + ")";
      e.generators = {cycle(1, m), reflection};
    }
    break;
  }
  default:
    throw CatalogError("unknown catalog key: " + e.key);
  }
  return e;
}

std::vector<std::string> split_product(std::string_view key) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : key) {
    if (c == '(')
      ++depth;
    if (c == ')')
      --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

CatalogEntry single_entry(std::string_view key) {
  for (auto &e : fixed_entries())
    if (e.key == key)
      return e;
  if (key.size() >= 2 && std::string_view("ASZD").find(key[0]) !=
                             std::string_view::npos) {
    const auto digits = key.substr(1);
    bool numeric = digits.size() <= 6 && digits[0] != '0';
    for (char c : digits)
      numeric = numeric && std::isdigit(static_cast<unsigned char>(c));
    if (numeric) {
      const auto n = std::stoull(std::string(digits));
      if (n >= 1 && n <= Permutation::point_type(-1))
        return family_entry(key[0], n, std::string(key));
    }
  }
  throw CatalogError("unknown catalog key: " + std::string(key));
}

std::string trim(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
    --e;
  return std::string(text.substr(b, e - b));
}

} // namespace

std::vector<std::string> fixed_catalog_keys() {
  std::vector<std::string> keys;
  for (const auto &e : fixed_entries())
    keys.push_back(e.key);
  return keys;
}

CatalogEntry catalog_entry(std::string_view key) {
  const auto parts = split_product(key);
  if (parts.size() == 1)
    return single_entry(key);
  CatalogEntry product = single_entry(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const CatalogEntry factor = single_entry(parts[i]);
    const std::size_t shift = product.degree;
    if (shift + factor.degree > kMaxProductDegree)
      throw CatalogError("direct product degree above " +
                         std::to_string(kMaxProductDegree));
    for (const auto &g : factor.generators) {
      // Shift the factor's points past the ones already used.
      const Permutation p = parse_cycles(g, factor.degree);
      std::vector<Permutation::point_type> images(shift + factor.degree);
      for (std::size_t k = 0; k < shift; ++k)
        images[k] = static_cast<Permutation::point_type>(k);
      for (std::size_t k = 0; k < factor.degree; ++k)
        images[shift + k] = static_cast<Permutation::point_type>(shift + p[k]);
      product.generators.push_back(to_cycle_string(Permutation(images)));
    }
    product.degree += factor.degree;
    if (__builtin_mul_overflow(product.expected_order, factor.expected_order,
                               &product.expected_order))
      throw CatalogError("group order exceeds 64-bit range");
    product.expected_solvable =
        product.expected_solvable && factor.expected_solvable;
    product.expected_nilpotent =
        product.expected_nilpotent && factor.expected_nilpotent;
  }
  product.key = std::string(key);
  // Cycle strings parsed at the smaller degree still read correctly at the
  // combined degree.
  return product;
}

GroupHandle build_catalog_entry(const CatalogEntry &entry) {
  return build_group_from_cycles(entry.key, entry.degree, entry.generators);
}

void validate_catalog_group(const GroupHandle &group, const CatalogEntry &entry) {
  if (group.order() != entry.expected_order)
    throw EngineError("catalog entry " + entry.key + " has order " +
                      std::to_string(group.order()) + ", expected " +
                      std::to_string(entry.expected_order));
  if (is_solvable(group).solvable != entry.expected_solvable)
    throw EngineError("catalog entry " + entry.key +
                      " disagrees with its solvable flag");
  if (group.order() <= limits().enum_cap &&
      is_nilpotent(group) != entry.expected_nilpotent)
    throw EngineError("catalog entry " + entry.key +
                      " disagrees with its nilpotent flag");
}

GroupHandle catalog_lookup(std::string_view key) {
  const CatalogEntry entry = catalog_entry(key);
  GroupHandle group = build_catalog_entry(entry);
  validate_catalog_group(group, entry);
  return group;
}

GroupHandle direct_product(const GroupHandle &g, const GroupHandle &h) {
  const std::size_t degree = g.degree() + h.degree();
  if (degree > kMaxProductDegree)
    throw std::invalid_argument("direct product degree " +
                                std::to_string(degree) + " above " +
                                std::to_string(kMaxProductDegree));
  std::vector<Permutation> gens;
  for (const auto &s : g.generators()) {
    std::vector<Permutation::point_type> images(degree);
    for (std::size_t k = 0; k < degree; ++k)
      images[k] = k < g.degree() ? s[k] : static_cast<Permutation::point_type>(k);
    gens.emplace_back(std::move(images));
  }
  for (const auto &s : h.generators()) {
    std::vector<Permutation::point_type> images(degree);
    for (std::size_t k = 0; k < degree; ++k)
      images[k] = k < g.degree()
                      ? static_cast<Permutation::point_type>(k)
                      : static_cast<Permutation::point_type>(
                            g.degree() + s[k - g.degree()]);
    gens.emplace_back(std::move(images));
  }
  return build_group(g.name() + "x" + h.name(), degree, std::move(gens));
}

GroupFileError::GroupFileError(const std::string &what, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

GroupHandle parse_group_file(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty())
      continue;
    const auto space = line.find_first_of(" \t");
    const std::string keyword = line.substr(0, space);
    const std::string value =
        space == std::string::npos ? std::string() : trim(line.substr(space));
    if (keyword == "name") {
      if (name)
        throw GroupFileError("duplicate name", line_no);
      if (value.empty())
        throw GroupFileError("empty name", line_no);
      name = value;
    } else if (keyword == "degree") {
      if (degree)
        throw GroupFileError("duplicate degree", line_no);
      std::size_t used = 0;
      unsigned long long n = 0;
      try {
        n = std::stoull(value, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used == 0 || used != value.size() || n == 0 || value[0] == '-' ||
          n > Permutation::point_type(-1))
        throw GroupFileError("degree must be a positive integer", line_no);
      degree = n;
    } else if (keyword == "gen") {
      if (!degree)
        throw GroupFileError("gen before degree", line_no);
      try {
        gens.push_back(parse_cycles(value, *degree));
      } catch (const ParseError &e) {
        throw GroupFileError(e.what(), line_no);
      }
    } else {
      throw GroupFileError("unknown keyword '" + keyword + "'", line_no);
    }
  }
  if (!name)
    throw GroupFileError("missing name", line_no);
  if (!degree)
    throw GroupFileError("missing degree", line_no);
  if (gens.empty())
    throw GroupFileError("no generators", line_no);
  return build_group(*name, *degree, std::move(gens));
}

GroupHandle read_group_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open group file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_file(buffer.str());
}

std::string format_group_file(const GroupHandle &group) {
  std::string out = "name " + group.name() + "\n";
  out += "degree " + std::to_string(group.degree()) + "\n";
  for (const auto &g : group.generators())
    out += "gen " + to_cycle_string(g) + "\n";
  return out;
}

GroupHandle resolve_group_argument(std::string_view argument) {
  constexpr std::string_view prefix = "catalog:";
  if (argument.starts_with(prefix))
    return catalog_lookup(argument.substr(prefix.size()));
  return read_group_file(std::filesystem::path(std::string(argument)));
}

} // namespace permsolv
