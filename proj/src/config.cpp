#include "cocseg/config.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "cocseg/errors.hpp"

namespace cocseg {

namespace {

Rational normalized(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0)
    throw InputError("rational must be non-negative with positive denominator");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

std::int64_t parse_int64(const std::string& text) {
  size_t pos = 0;
  std::int64_t value = std::stoll(text, &pos);
  if (pos != text.size()) throw std::invalid_argument(text);
  return value;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      return normalized(parse_int64(text.substr(0, slash)),
                        parse_int64(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string frac = text.substr(dot + 1);
      std::int64_t den = 1;
      for (size_t i = 0; i < frac.size(); ++i) den *= 10;
      std::int64_t whole = dot == 0 ? 0 : parse_int64(text.substr(0, dot));
      std::int64_t low = frac.empty() ? 0 : parse_int64(frac);
      return normalized(whole * den + low, den);
    }
    return normalized(parse_int64(text), 1);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("cannot parse rational: '" + text + "'");
  }
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::int64_t Rational::ceil_times(std::int64_t count) const {
  return (count * num + den - 1) / den;
}

void PipelineConfig::validate() const {
  if (min_pair_freq < 1) throw InputError("min_pair_freq must be >= 1");
  if (window < 1) throw InputError("window must be >= 1");
  if (term_fraction.num <= 0 || term_fraction.num > term_fraction.den)
    throw InputError("term_fraction must be in (0, 1]");
  if (k < 1) throw InputError("k must be >= 1");
  if (max_iter < 1) throw InputError("max_iter must be >= 1");
  if (min_share.num > min_share.den) throw InputError("min_share must be <= 1");
}

std::string PipelineConfig::to_key_values() const {
  std::ostringstream out;
  out << "min_pair_freq=" << min_pair_freq << '\n'
      << "window=" << window << '\n'
      << "term_fraction=" << term_fraction.str() << '\n'
      << "k=" << k << '\n'
      << "max_iter=" << max_iter << '\n'
      << "min_share=" << min_share.str() << '\n';
  if (seed) out << "seed=" << *seed << '\n';
  out << "input=" << input_path << '\n'
      << "out_dir=" << out_dir << '\n';
  return out.str();
}

PipelineConfig PipelineConfig::from_key_values(const std::string& text,
                                               const std::string& source_name) {
  PipelineConfig config;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw FormatError(source_name + " line " + std::to_string(line_number) +
                        ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    try {
      if (key == "min_pair_freq")
        config.min_pair_freq = static_cast<int>(parse_int64(value));
      else if (key == "window")
        config.window = static_cast<int>(parse_int64(value));
      else if (key == "term_fraction")
        config.term_fraction = Rational::parse(value);
      else if (key == "k")
        config.k = static_cast<int>(parse_int64(value));
      else if (key == "max_iter")
        config.max_iter = static_cast<int>(parse_int64(value));
      else if (key == "min_share")
        config.min_share = Rational::parse(value);
      else if (key == "seed")
        config.seed = static_cast<std::uint32_t>(parse_int64(value));
      else if (key == "input")
        config.input_path = value;
      else if (key == "out_dir")
        config.out_dir = value;
      else
        throw FormatError(source_name + " line " + std::to_string(line_number) +
                          ": unknown key '" + key + "'");
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception&) {
      throw FormatError(source_name + " line " + std::to_string(line_number) +
                        ": bad value for '" + key + "'");
    }
  }
  config.validate();
  return config;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_key_values(buffer.str(), path);
}

void PipelineConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << to_key_values();
}

}  // namespace cocseg
