#pragma once

#include <map>
#include <string>

#include "fvlt/path.hpp"
#include "fvlt/profile.hpp"

namespace fvlt {

inline constexpr int kSchemaVersion = 1;

// On-disk path description. Doubles round-trip losslessly through the JSON
// form (shortest-round-trip rendering), so fixtures double as golden files.
struct PathDocument {
  double horizon = 0.0;
  RawPathSpec path;
  std::map<std::string, std::string> metadata;
};

PathDocument make_document(const FvPath& path,
                           std::map<std::string, std::string> metadata = {});

std::string document_to_json_text(const PathDocument& doc);

// Throws InvalidDocument with the offending field named.
PathDocument parse_document(const std::string& json_text);

// Validates and returns the path described by the document.
FvPath load_path(const PathDocument& doc);

// FNV-1a over the canonical serialized path data (metadata excluded).
std::string path_identity_hash(const FvPath& path);

// CSV rows x_left,x_right,ell,lambda,N with 17-significant-digit reals.
std::string profile_to_csv(const LocalTimeProfile& profile);

}  // namespace fvlt
