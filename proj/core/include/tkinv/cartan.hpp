// cartan.hpp -- classification labels for the simple Lie algebras.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tkinv {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanLabel {
  Series series = Series::A;
  int rank = 1;

  // Admissible: A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E_6..E_8, F_4, G_2.
  bool admissible() const {
    switch (series) {
      case Series::A: return rank >= 1;
      case Series::B: return rank >= 2;
      case Series::C: return rank >= 2;
      case Series::D: return rank >= 4;
      case Series::E: return rank >= 6 && rank <= 8;
      case Series::F: return rank == 4;
      case Series::G: return rank == 2;
    }
    return false;
  }

  bool operator==(const CartanLabel&) const = default;
};

inline std::string to_string(const CartanLabel& l) {
  return std::string(1, static_cast<char>(l.series)) + std::to_string(l.rank);
}

// Parses "A1", "G2", "E8", ...  Throws on malformed or inadmissible labels.
inline CartanLabel parse_label(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("cartan label too short: '" + s + "'");
  char c = s[0];
  if (c < 'A' || c > 'G') throw std::invalid_argument("unknown series in label '" + s + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rank in label '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 512) throw std::invalid_argument("rank out of range in label '" + s + "'");
  }
  CartanLabel l{static_cast<Series>(c), rank};
  if (!l.admissible())
    throw std::invalid_argument("inadmissible cartan label '" + s + "'");
  return l;
}

}  // namespace tkinv
