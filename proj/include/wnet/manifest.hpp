#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wnet/core.hpp"
#include "wnet/io.hpp"
#include "wnet/types.hpp"

namespace wnet {

enum class Split { train, val, test };

inline const char* split_name(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::val: return "val";
    default: return "test";
  }
}

inline Split split_from_string(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "val") return Split::val;
  if (s == "test") return Split::test;
  throw ValidationError("unknown split \"" + s + "\" (expected train/val/test)");
}

struct ManifestEntry {
  std::string id;
  std::string patient;
  std::string rf_path;     // relative to the manifest's directory
  std::string grey_path;
  std::string label_path;
  int native_rows = 0;
  Split split = Split::train;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
};

inline void save_manifest(const DatasetManifest& m, const std::string& path) {
  nlohmann::ordered_json root;
  root["samples"] = nlohmann::ordered_json::array();
  for (const auto& e : m.entries) {
    nlohmann::ordered_json j;
    j["id"] = e.id;
    j["patient"] = e.patient;
    j["rf"] = e.rf_path;
    j["grey"] = e.grey_path;
    j["label"] = e.label_path;
    j["native_rows"] = e.native_rows;
    j["split"] = split_name(e.split);
    root["samples"].push_back(std::move(j));
  }
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << root.dump(2) << "\n";
}

inline DatasetManifest load_manifest(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  nlohmann::json root;
  try {
    f >> root;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
  if (!root.contains("samples") || !root["samples"].is_array())
    throw ParseError(path + ": missing \"samples\" array");
  DatasetManifest m;
  for (const auto& j : root["samples"]) {
    ManifestEntry e;
    try {
      e.id = j.at("id").get<std::string>();
      e.patient = j.value("patient", std::string("unknown"));
      e.rf_path = j.at("rf").get<std::string>();
      e.grey_path = j.at("grey").get<std::string>();
      e.label_path = j.at("label").get<std::string>();
      e.native_rows = j.at("native_rows").get<int>();
      e.split = split_from_string(j.at("split").get<std::string>());
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(path + ": bad sample entry: " + ex.what());
    }
    m.entries.push_back(std::move(e));
  }
  return m;
}

struct Dataset {
  std::vector<Sample> train;
  std::vector<Sample> val;
  std::vector<Sample> test;

  const std::vector<Sample>& split(Split s) const {
    switch (s) {
      case Split::train: return train;
      case Split::val: return val;
      default: return test;
    }
  }

  std::size_t total() const { return train.size() + val.size() + test.size(); }

  const Sample* find(const std::string& id) const {
    for (const auto* list : {&train, &val, &test})
      for (const auto& s : *list)
        if (s.id == id) return &s;
    return nullptr;
  }
};

// Loads every referenced file and validates per-sample shape agreement.
// Samples appear in manifest order within their split.
inline Dataset load_dataset(const std::string& manifest_path) {
  const DatasetManifest m = load_manifest(manifest_path);
  const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
  Dataset ds;
  for (const auto& e : m.entries) {
    Sample s;
    s.id = e.id;
    s.patient = e.patient;
    s.rf = read_rf_binary((base / e.rf_path).string());
    s.grey = read_grey_pgm((base / e.grey_path).string());
    s.label = read_label_pgm((base / e.label_path).string());
    s.native_rows = e.native_rows;
    validate_sample(s);
    switch (e.split) {
      case Split::train: ds.train.push_back(std::move(s)); break;
      case Split::val: ds.val.push_back(std::move(s)); break;
      case Split::test: ds.test.push_back(std::move(s)); break;
    }
  }
  return ds;
}

}  // namespace wnet
