#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qwc/json_io.hpp"

namespace qwc {

/// On-disk cache for expensive rational series, addressed by (target,
/// quantity, order).  One file per (target, quantity); the stored payload
/// records the order it was computed to.  A lookup is served, truncated,
/// when the stored order covers the request, and is a miss when the request
/// is deeper: truncation never extrapolates, so a miss means recompute, and
/// the following put extends the entry.  Writes go through a temp file and
/// an atomic rename.  Corrupt entries are reported on stderr and treated as
/// misses; the next put overwrites them.
class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_))
      fail(ErrorKind::Cache, "cache directory " + dir_.string() + " is unusable");
  }

  /// Directory from the QWC_CACHE_DIR environment variable, if set.
  static std::optional<std::filesystem::path> env_dir() {
    if (const char* p = std::getenv("QWC_CACHE_DIR"); p && *p)
      return std::filesystem::path(p);
    return std::nullopt;
  }

  std::optional<RatSeries> get(const CompleteIntersection& X,
                               const std::string& quantity, int order) const {
    std::optional<RatSeries> stored = read_entry(X, quantity);
    if (!stored || stored->order() < order) return std::nullopt;
    return stored->truncate(order);
  }

  void put(const CompleteIntersection& X, const std::string& quantity,
           const RatSeries& s) const {
    // Keep the deeper entry if one exists; a shallower put must not degrade it.
    if (std::optional<RatSeries> stored = read_entry(X, quantity);
        stored && stored->order() >= s.order())
      return;
    Json j;
    j["quantity"] = quantity;
    j["series"] = series_to_json(s);
    j["target"] = target_to_json(X);
    std::filesystem::path file = entry_path(X, quantity);
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) fail(ErrorKind::Cache, "cannot write " + tmp.string());
      out << canonical_dump(j);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, file, ec);
    if (ec) fail(ErrorKind::Cache, "cannot publish cache entry " + file.string());
  }

  /// Compute-through helper: serve from cache when possible, otherwise run
  /// `make`, store, and return.
  template <class Fn>
  RatSeries get_or_compute(const CompleteIntersection& X,
                           const std::string& quantity, int order,
                           Fn&& make) const {
    if (auto hit = get(X, quantity, order)) return *hit;
    RatSeries s = make();
    put(X, quantity, s);
    return s;
  }

  const std::filesystem::path& dir() const { return dir_; }

 private:
  /// The stored series at full depth, or nullopt for absent/corrupt entries
  /// (the latter with a warning).
  std::optional<RatSeries> read_entry(const CompleteIntersection& X,
                                      const std::string& quantity) const {
    std::filesystem::path file = entry_path(X, quantity);
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      Json j = parse_json_text(buf.str());
      if (!j.is_object() || j.value("quantity", "") != quantity ||
          !j.contains("series") || !j.contains("target") ||
          !(target_from_json(j["target"]) == X))
        bad_payload("cache entry does not match its address");
      return series_from_json(j["series"]);
    } catch (const Error& e) {
      std::cerr << "warning: discarding corrupt cache entry " << file.string()
                << " (" << e.what() << ")\n";
      return std::nullopt;
    }
  }

  std::filesystem::path entry_path(const CompleteIntersection& X,
                                   const std::string& quantity) const {
    std::string name = quantity + "-n" + std::to_string(X.n) + "l";
    for (size_t i = 0; i < X.degrees.size(); ++i) {
      if (i) name += "_";
      name += std::to_string(X.degrees[i]);
    }
    for (char& c : name)
      if (c == '/' || c == '\\' || c == ':') c = '_';
    return dir_ / (name + ".json");
  }

  std::filesystem::path dir_;
};

}  // namespace qwc
