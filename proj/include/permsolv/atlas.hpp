#ifndef PERMSOLV_ATLAS_HPP
#define PERMSOLV_ATLAS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permsolv/group.hpp"

namespace permsolv {

/// A stored or generated group together with the facts it must reproduce.
struct CatalogEntry {
  std::string key;
  std::size_t degree = 0;
  std::vector<std::string> generators; ///< 1-based cycle strings
  std::uint64_t expected_order = 0;
  bool expected_solvable = false;
  bool expected_nilpotent = false;
};

/// Unknown catalog key, or a malformed family parameter.
class CatalogError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Keys of the fixed (non-family) entries: Q8, PSL(2,7), M11, M12.
std::vector<std::string> fixed_catalog_keys();

/// Entry for a fixed key or a family member A<n>, S<n>, Z<n>, D<2n>; direct
/// products are written "GxH" (for instance "Z6xA5"). Throws CatalogError.
CatalogEntry catalog_entry(std::string_view key);

/// Builds and validates a catalog group: the order must equal the expected
/// order, and the solvable and nilpotent flags must match the computed ones
/// (nilpotency is checked when the group is within the enumeration cap).
/// A mismatch throws EngineError.
GroupHandle catalog_lookup(std::string_view key);

GroupHandle build_catalog_entry(const CatalogEntry &entry);

/// Recomputes the entry's facts against an already built group.
void validate_catalog_group(const GroupHandle &group, const CatalogEntry &entry);

inline constexpr std::size_t kMaxProductDegree = 1024;

/// G acting on points 1..deg G, H on the next deg H points. Throws
/// std::invalid_argument beyond kMaxProductDegree.
GroupHandle direct_product(const GroupHandle &g, const GroupHandle &h);

/// Malformed group file; line() is 1-based.
class GroupFileError : public std::runtime_error {
public:
  GroupFileError(const std::string &what, std::size_t line);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Parses the line format: `name <text>`, `degree <n>`, then one
/// `gen <cycles>` line per generator; `#` starts a comment.
GroupHandle parse_group_file(std::string_view text);
GroupHandle read_group_file(const std::filesystem::path &path);

/// Normalized file text: name, degree, then generators in canonical cycle
/// notation. parse_group_file(format_group_file(G)) reproduces G's generators.
std::string format_group_file(const GroupHandle &group);

/// "catalog:<key>" or a path to a group file.
GroupHandle resolve_group_argument(std::string_view argument);

} // namespace permsolv

#endif
