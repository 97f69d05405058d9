#include "cache.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace arithmorse::cli {

using nlohmann::ordered_json;

std::string record_to_json(const CheckpointRecord& r, const std::string& tool_version) {
  ordered_json j;
  j["kind"] = family_name(r.family);
  j["n"] = r.n;
  j["tool_version"] = tool_version;
  j["field_prime"] = r.field_prime;
  j["fvector"] = r.f_vector;
  j["betti"] = r.betti;
  j["chi"] = r.chi;
  j["mertens"] = r.mertens;
  j["c"] = r.c;
  return j.dump();
}

JsonlCache::JsonlCache(std::string path, std::string tool_version, std::ostream& warnings)
    : path_(std::move(path)), version_(std::move(tool_version)) {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;  // a missing file is an empty cache
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();

  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    const bool terminated = end != std::string::npos;
    const std::string line = text.substr(pos, terminated ? end - pos : std::string::npos);
    const std::size_t next = terminated ? end + 1 : text.size();
    ++line_no;
    if (line.empty()) {
      pos = next;
      continue;
    }
    try {
      const auto j = ordered_json::parse(line);
      CheckpointRecord r;
      r.family = parse_family(j.at("kind").get<std::string>());
      r.n = j.at("n").get<std::int64_t>();
      r.field_prime = j.at("field_prime").get<std::uint32_t>();
      r.f_vector = j.at("fvector").get<std::vector<std::size_t>>();
      r.betti = j.at("betti").get<std::vector<std::int64_t>>();
      r.chi = j.at("chi").get<std::int64_t>();
      r.mertens = j.at("mertens").get<std::int64_t>();
      r.c = j.at("c").get<std::vector<std::int64_t>>();
      if (!terminated) throw std::runtime_error("unterminated record");
      if (j.at("tool_version").get<std::string>() == version_)
        records_[{static_cast<int>(r.family), r.n, r.field_prime}] = std::move(r);
    } catch (const std::exception& e) {
      if (next < text.size())
        throw std::runtime_error("cache " + path_ + " is corrupt at line " + std::to_string(line_no));
      warnings << "warning: dropping corrupt trailing line " << line_no << " of cache " << path_ << "\n";
      std::filesystem::resize_file(path_, pos);
      break;
    }
    pos = next;
  }
}

std::optional<CheckpointRecord> JsonlCache::lookup(GraphFamily family, std::int64_t n, std::uint32_t field_prime) {
  auto it = records_.find({static_cast<int>(family), n, field_prime});
  if (it == records_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void JsonlCache::store(const CheckpointRecord& record) {
  std::ofstream outf(path_, std::ios::app | std::ios::binary);
  if (!outf) throw std::runtime_error("cannot write cache " + path_);
  outf << record_to_json(record, version_) << '\n';
  if (!outf.flush()) throw std::runtime_error("cannot write cache " + path_);
  records_[{static_cast<int>(record.family), record.n, record.field_prime}] = record;
}

}  // namespace arithmorse::cli
