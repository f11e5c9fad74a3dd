#pragma once

// Flat output records rendered as JSON or CSV. Exact rationals are JSON
// strings; reals are printed with enough digits to round-trip a long double.

#include <cstdio>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dedekind/exact_arith.hpp"

namespace dedekind::cli {

enum class Format { text, json, csv };

class Record {
 public:
  Record& add(std::string key, std::int64_t v) { return raw(std::move(key), std::to_string(v), std::to_string(v)); }
  Record& add(std::string key, int v) { return add(std::move(key), static_cast<std::int64_t>(v)); }
  Record& add(std::string key, std::size_t v) { return add(std::move(key), static_cast<std::int64_t>(v)); }
  Record& add(std::string key, bool v) { return raw(std::move(key), v ? "true" : "false", v ? "true" : "false"); }
  Record& add(std::string key, const Rational& v) { return raw(std::move(key), quote(v.to_string()), v.to_string()); }
  Record& add(std::string key, const std::string& v) { return raw(std::move(key), quote(v), v); }
  Record& add(std::string key, const char* v) { return add(std::move(key), std::string(v)); }
  Record& add(std::string key, Real v) {
    const std::string s = format_real(v);
    return raw(std::move(key), s, s);
  }

  void write_json(std::ostream& os) const {
    os << '{';
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) os << ", ";
      os << quote(fields_[i].key) << ": " << fields_[i].json;
    }
    os << '}';
  }

  void write_csv_header(std::ostream& os) const {
    for (std::size_t i = 0; i < fields_.size(); ++i) os << (i ? "," : "") << fields_[i].key;
    os << '\n';
  }

  void write_csv_row(std::ostream& os) const {
    for (std::size_t i = 0; i < fields_.size(); ++i) os << (i ? "," : "") << fields_[i].csv;
    os << '\n';
  }

  static std::string format_real(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", v);
    return buf;
  }

 private:
  struct Field {
    std::string key;
    std::string json;
    std::string csv;
  };

  Record& raw(std::string key, std::string json, std::string csv) {
    fields_.push_back({std::move(key), std::move(json), std::move(csv)});
    return *this;
  }

  static std::string quote(const std::string& s) { return '"' + s + '"'; }

  std::vector<Field> fields_;
};

inline void write_record(std::ostream& os, const Record& r, Format f) {
  if (f == Format::csv) {
    r.write_csv_header(os);
    r.write_csv_row(os);
  } else {
    r.write_json(os);
    os << '\n';
  }
}

inline void write_records(std::ostream& os, const std::vector<Record>& rows, Format f) {
  if (f == Format::csv) {
    if (!rows.empty()) rows.front().write_csv_header(os);
    for (const auto& r : rows) r.write_csv_row(os);
    return;
  }
  os << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << (i ? ",\n " : "");
    rows[i].write_json(os);
  }
  os << "]\n";
}

}  // namespace dedekind::cli
