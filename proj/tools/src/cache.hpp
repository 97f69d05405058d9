#ifndef ARITHMORSE_TOOLS_CACHE_HPP
#define ARITHMORSE_TOOLS_CACHE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>

#include "arithmorse/morse.hpp"

namespace arithmorse::cli {

/**
 * Append-only JSON-lines cache of checkpoint records. A record is reused only
 * when its tool version and field prime match. A corrupt last line (an
 * interrupted append) is cut off with a warning; corruption elsewhere is an
 * error.
 */
class JsonlCache : public CheckpointStore {
 public:
  JsonlCache(std::string path, std::string tool_version, std::ostream& warnings);

  std::optional<CheckpointRecord> lookup(GraphFamily family, std::int64_t n,
                                         std::uint32_t field_prime) override;
  void store(const CheckpointRecord& record) override;

  std::size_t size() const { return records_.size(); }
  std::size_t hits() const { return hits_; }

 private:
  using Key = std::tuple<int, std::int64_t, std::uint32_t>;
  std::string path_;
  std::string version_;
  std::map<Key, CheckpointRecord> records_;
  std::size_t hits_ = 0;
};

std::string record_to_json(const CheckpointRecord& r, const std::string& tool_version);

}  // namespace arithmorse::cli

#endif  // ARITHMORSE_TOOLS_CACHE_HPP
