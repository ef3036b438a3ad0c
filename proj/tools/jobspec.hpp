#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/cyclo.h"
#include "json.hpp"

namespace cli {

using json = nlohmann::ordered_json;

struct GroupDeleter {
  void operator()(cyclo_group* g) const { cyclo_group_destroy(g); }
};
struct MarkedDeleter {
  void operator()(cyclo_marked* m) const { cyclo_marked_destroy(m); }
};
using GroupPtr = std::unique_ptr<cyclo_group, GroupDeleter>;
using MarkedPtr = std::unique_ptr<cyclo_marked, MarkedDeleter>;

/// Bad input, with the JSON pointer of the offending node.
class InputError : public std::runtime_error {
 public:
  InputError(std::string pointer, const std::string& message)
      : std::runtime_error(message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// Failure reported by the library through a status code.
class LibraryError : public std::runtime_error {
 public:
  LibraryError(cyclo_status status, const std::string& where);
  cyclo_status status() const noexcept { return status_; }

 private:
  cyclo_status status_;
};

/// Throws LibraryError unless `s` is CYCLO_OK.
void check(cyclo_status s, const std::string& where);

using Word = std::vector<std::pair<std::string, int>>;

/// Owns the letters a cyclo_word points into.
struct WordBuffer {
  std::vector<std::vector<cyclo_letter>> letters;
  std::vector<cyclo_word> words;
  void assign(const std::vector<Word>& ws);
};

struct VerifyConfig {
  double convergence_tolerance = 0.1;
  std::uint32_t convergence_radius = 10;
  std::uint32_t girth_horizon = 8;
};

struct SchreierJob {
  GroupPtr target;
  std::vector<Word> images;
};

struct Job {
  GroupPtr group;
  MarkedPtr marked;
  std::optional<SchreierJob> schreier;
  VerifyConfig verify;
};

Job parse_job(const json& doc);

}  // namespace cli
