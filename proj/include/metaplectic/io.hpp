#pragma once

// Text and JSON forms of matrices and coordinates.
//
// Matrix literals: "1,0,0;4,1,0;4,4,1" (rows separated by ';', entries by
// ','; entries may be rationals p/q), or a JSON array of three arrays whose
// entries are integers or strings holding integers or rationals.

#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "json.hpp"
#include "metaplectic/errors.hpp"
#include "metaplectic/exactnum.hpp"
#include "metaplectic/sl3group.hpp"

namespace metaplectic {

namespace detail {

struct ParsedMatrix {
  Mat3Q m;
  std::array<std::array<std::size_t, 3>, 3> pos{};
};

class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view s) : s_(s) {}

  ParsedMatrix matrix() {
    ParsedMatrix out;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        skip_space();
        out.pos[i][j] = i_;
        out.m(i, j) = rational();
        skip_space();
        if (j < 2) expect(',', "expected ',' between entries");
      }
      if (i < 2) expect(';', "expected ';' between rows");
    }
    skip_space();
    if (i_ != s_.size()) throw ParseError("trailing input", i_);
    return out;
  }

  Rat rational() {
    Int num = integer();
    Int den = 1;
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      const std::size_t den_pos = i_;
      den = integer();
      if (sgn(den) <= 0) throw ParseError("denominator must be positive", den_pos);
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

 private:
  Int integer() {
    const std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) throw ParseError("expected an integer", start);
    std::string text(s_.substr(start, i_ - start));
    if (text[0] == '+') text.erase(0, 1);
    return Int(text);
  }

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  void expect(char c, const char* msg) {
    skip_space();
    if (i_ >= s_.size() || s_[i_] != c) throw ParseError(msg, i_);
    ++i_;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

inline ParsedMatrix parse_json_matrix(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  if (!j.is_array() || j.size() != 3) {
    throw ParseError("JSON matrix must be an array of 3 rows", 0);
  }
  ParsedMatrix out;
  for (int r = 0; r < 3; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != 3) {
      throw ParseError("JSON row " + std::to_string(r + 1) + " must have 3 entries", 0);
    }
    for (int c = 0; c < 3; ++c) {
      const auto& x = row[c];
      std::string text;
      if (x.is_number_integer()) text = x.dump();
      else if (x.is_string()) text = x.get<std::string>();
      else {
        throw ParseError("JSON entry (" + std::to_string(r + 1) + "," +
                             std::to_string(c + 1) + ") is not an integer or string",
                         0);
      }
      LiteralScanner sc(text);
      out.m(r, c) = sc.rational();
    }
  }
  return out;
}

inline ParsedMatrix parse_any(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s[first] == '[') return parse_json_matrix(s);
  return LiteralScanner(s).matrix();
}

}  // namespace detail

inline Mat3Q parse_matrix_q(const std::string& s) {
  return detail::parse_any(s).m;
}

inline Mat3 parse_matrix(const std::string& s) {
  const detail::ParsedMatrix p = detail::parse_any(s);
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (p.m(i, j).get_den() != 1) {
        throw ParseError("entry must be an integer", p.pos[i][j]);
      }
      out(i, j) = p.m(i, j).get_num();
    }
  return out;
}

template <class T>
std::string format_matrix(const Matrix3<T>& g) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += ';';
    for (int j = 0; j < 3; ++j) {
      if (j) s += ',';
      s += g(i, j).get_str();
    }
  }
  return s;
}

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline nlohmann::json to_json(const Int& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return n.get_si();
  return n.get_str();
}

inline nlohmann::json to_json(const Rat& q) {
  if (q.get_den() == 1) return to_json(q.get_num());
  return q.get_str();
}

template <class T>
nlohmann::json to_json(const Matrix3<T>& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 3; ++j) row.push_back(to_json(g(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class T>
nlohmann::json to_json(const Plucker<T>& p) {
  return {to_json(p.A1), to_json(p.B1), to_json(p.C1),
          to_json(p.A2), to_json(p.B2), to_json(p.C2)};
}

inline nlohmann::json to_json(const ScaledPlucker& p) {
  return {to_json(p.A1), to_json(p.B1), to_json(p.C1),
          to_json(p.A2), to_json(p.B2), to_json(p.C2)};
}

}  // namespace metaplectic
