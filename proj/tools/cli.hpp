#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qpadic::cli {

// Every field is a config key; the key is the long flag name.
struct RunConfig {
  std::int64_t p = 5;
  std::string q = "1+p";
  std::string chi = "1:0";  // modulus:index, or modulus:k1,k2,... with --chi-images
  bool chi_images = false;
  int precision = 10;
  int truncation = 1000;
  std::uint64_t seed = 0;
  std::string format = "json";

  // bernoulli
  int n = 0;
  int n_max = -1;
  std::string x;
  bool exact = false;

  // lfunction
  std::vector<std::string> s = {"0"};
  std::vector<std::string> t = {"0"};
  int s_near_one = 0;
  std::int64_t F = 0;
  long twist = 0;
  std::string variant = "corrected";
  bool classical = false;
  int extra_terms = 0;

  // verify
  std::vector<std::string> suite = {"all"};
  bool serial = false;

  // characters
  std::int64_t modulus = 1;
};

/// key=value lines in a fixed key order; parse_config reads them back.
std::string serialize(const RunConfig& c);
/// Applies key=value lines ('#' starts a comment) on top of `base`.
RunConfig parse_config(const std::string& text, RunConfig base);

/// Default precision from QPADIC_PRECISION, else 10.
int default_precision();

/// Exit codes: 0 success, 1 internal failure or failed verification,
/// 2 domain or usage error, 3 precision shortfall.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpadic::cli
