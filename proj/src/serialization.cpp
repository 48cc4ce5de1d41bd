#include "fvlt/serialization.hpp"

#include <cstdint>
#include <cstdio>

#include "json.hpp"

#include "fvlt/errors.hpp"

namespace fvlt {

namespace {

using nlohmann::json;

json path_payload(const RawPathSpec& spec, double horizon) {
  json jumps = json::array();
  for (const auto& [index, size] : spec.jumps) {
    jumps.push_back({{"index", index}, {"size", size}});
  }
  return json{{"horizon", horizon},
              {"breakpoints", spec.breakpoints},
              {"segments", spec.segments},
              {"jumps", std::move(jumps)}};
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

PathDocument make_document(const FvPath& path, std::map<std::string, std::string> metadata) {
  PathDocument doc;
  doc.horizon = path.horizon();
  doc.path = path.raw();
  doc.metadata = std::move(metadata);
  return doc;
}

std::string document_to_json_text(const PathDocument& doc) {
  json j = path_payload(doc.path, doc.horizon);
  j["schema_version"] = kSchemaVersion;
  j["metadata"] = doc.metadata;
  return j.dump(2) + "\n";
}

PathDocument parse_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidDocument(std::string("document: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidDocument("document: top level must be an object");

  auto require = [&](const char* field) -> const json& {
    const auto it = j.find(field);
    if (it == j.end()) throw InvalidDocument(std::string("document: missing field '") + field + "'");
    return *it;
  };

  const json& version = require("schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    throw InvalidDocument("schema_version: expected " + std::to_string(kSchemaVersion));
  }

  PathDocument doc;
  const json& horizon = require("horizon");
  if (!horizon.is_number()) throw InvalidDocument("horizon: expected a number");
  doc.horizon = horizon.get<double>();

  const json& breakpoints = require("breakpoints");
  if (!breakpoints.is_array()) throw InvalidDocument("breakpoints: expected an array");
  for (const json& b : breakpoints) {
    if (!b.is_number()) throw InvalidDocument("breakpoints: expected numbers");
    doc.path.breakpoints.push_back(b.get<double>());
  }

  const json& segments = require("segments");
  if (!segments.is_array()) throw InvalidDocument("segments: expected an array of arrays");
  for (const json& seg : segments) {
    if (!seg.is_array()) throw InvalidDocument("segments: expected an array of arrays");
    std::vector<double> coeffs;
    for (const json& c : seg) {
      if (!c.is_number()) throw InvalidDocument("segments: coefficients must be numbers");
      coeffs.push_back(c.get<double>());
    }
    doc.path.segments.push_back(std::move(coeffs));
  }

  const json& jumps = require("jumps");
  if (!jumps.is_array()) throw InvalidDocument("jumps: expected an array");
  for (const json& entry : jumps) {
    if (!entry.is_object() || !entry.contains("index") || !entry.contains("size") ||
        !entry["index"].is_number_unsigned() || !entry["size"].is_number()) {
      throw InvalidDocument("jumps: entries must be {index: unsigned, size: number}");
    }
    const auto index = entry["index"].get<std::size_t>();
    if (!doc.path.jumps.emplace(index, entry["size"].get<double>()).second) {
      throw InvalidDocument("jumps: duplicate index " + std::to_string(index));
    }
  }

  if (const auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) throw InvalidDocument("metadata: expected an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) throw InvalidDocument("metadata: values must be strings");
      doc.metadata[key] = value.get<std::string>();
    }
  }

  if (doc.path.breakpoints.empty() || doc.horizon != doc.path.breakpoints.back()) {
    throw InvalidDocument("horizon: must equal the last breakpoint");
  }
  return doc;
}

FvPath load_path(const PathDocument& doc) { return FvPath::validate(doc.path); }

std::string path_identity_hash(const FvPath& path) {
  const std::string canonical = path_payload(path.raw(), path.horizon()).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string profile_to_csv(const LocalTimeProfile& profile) {
  std::string out = "x_left,x_right,ell,lambda,N\n";
  for (std::size_t j = 0; j < profile.cells.size(); ++j) {
    out += format_full(profile.cell_boundaries[j]);
    out += ',';
    out += format_full(profile.cell_boundaries[j + 1]);
    out += ',';
    out += std::to_string(profile.cells[j].net_passages);
    out += ',';
    out += std::to_string(profile.cells[j].abs_passages);
    out += ',';
    out += std::to_string(profile.cells[j].crossings);
    out += '\n';
  }
  return out;
}

}  // namespace fvlt
