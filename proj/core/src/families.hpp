#pragma once

#include <torvo/verifier.hpp>

#include <memory>
#include <string>
#include <vector>

namespace torvo::detail {

enum class Status { pass, fail, adjudicated };

struct Outcome {
  std::string clause;
  Status status = Status::pass;
  nlohmann::json detail;  // only filled when the status is not pass
};

class Family {
 public:
  virtual ~Family() = default;
  virtual std::vector<std::string> clauses() const = 0;
  virtual std::size_t size() const = 0;
  virtual nlohmann::json item(std::size_t index) const = 0;
  virtual std::vector<Outcome> evaluate(const nlohmann::json& item) const = 0;
  virtual std::string adjudication(const std::string& /*clause*/) const { return {}; }
};

std::unique_ptr<Family> make_family(const std::string& id, const CheckConfig& cfg);

std::uint64_t stream_id(const std::string& family, std::uint64_t a, std::uint64_t b = 0);

}  // namespace torvo::detail
