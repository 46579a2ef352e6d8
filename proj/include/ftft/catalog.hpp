#pragma once
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ftft/io.hpp"

namespace ftft {

using FixtureParams = std::map<std::string, std::string>;

struct CatalogEntry {
    std::string name;
    std::string help;
    FixtureParams defaults;  // every accepted parameter, with its default
    std::function<Document(const FixtureParams&)> make;
};

const std::vector<CatalogEntry>& fixture_catalog();
// Unknown names and parameters throw UnsupportedInput; bad values StructuralError.
Document make_fixture(const std::string& name, const FixtureParams& params = {});
// Parameter sets covering each entry, used for round-trip checks.
std::vector<std::pair<std::string, FixtureParams>> catalog_samples();

}  // namespace ftft
