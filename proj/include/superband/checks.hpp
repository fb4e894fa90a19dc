#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace superband {

  /// Outcome of verifying one named identity.
  struct Check {
    std::string id;
    std::string statement;
    bool        pass = false;
  };

  /// Ordered list of checks with lookup by id.
  class CheckList {
   public:
    void add(std::string id, std::string statement, bool pass) {
      checks_.push_back({std::move(id), std::move(statement), pass});
    }

    [[nodiscard]] bool all() const {
      for (auto const& c : checks_) {
        if (!c.pass) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] bool at(std::string const& id) const {
      for (auto const& c : checks_) {
        if (c.id == id) {
          return c.pass;
        }
      }
      throw ConfigError("no check named '" + id + "'");
    }

    [[nodiscard]] std::vector<Check> const& checks() const noexcept {
      return checks_;
    }

    [[nodiscard]] std::vector<std::string> failures() const {
      std::vector<std::string> out;
      for (auto const& c : checks_) {
        if (!c.pass) {
          out.push_back(c.id);
        }
      }
      return out;
    }

   private:
    std::vector<Check> checks_;
  };

}  // namespace superband
