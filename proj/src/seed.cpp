#include "penta/seed.hpp"

namespace penta {

std::string SeedCheck::kind_name() const {
  switch (kind) {
    case Kind::Ok: return "Ok";
    case Kind::BadRange: return "BadRange";
    case Kind::NotConvex: return "NotConvex";
    case Kind::BNotInterior: return "BNotInterior";
  }
  return "Unknown";
}

}  // namespace penta
