#pragma once

// Triangular fuzzy numbers and the linguistic comparison scale.

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace mcdm {

// Triangular fuzzy number (l, m, u) with l <= m <= u.
struct Tfn {
  double l = 0.0;
  double m = 0.0;
  double u = 0.0;

  constexpr Tfn() = default;
  constexpr Tfn(double lower, double modal, double upper) : l(lower), m(modal), u(upper) {}

  static Tfn crisp(double x) { return {x, x, x}; }

  bool ordered() const noexcept { return l <= m && m <= u; }
  bool positive() const noexcept { return l > 0.0; }

  friend bool operator==(const Tfn&, const Tfn&) = default;
};

Tfn tfn_add(const Tfn& a, const Tfn& b);
Tfn tfn_mul(const Tfn& a, const Tfn& b);
// (1/u, 1/m, 1/l); throws Domain when a.l <= 0.
Tfn tfn_invert(const Tfn& a);
// Componentwise n-th root; throws Domain for non-positive components or n == 0.
Tfn tfn_nth_root(const Tfn& a, unsigned n);
// Center of gravity (l + m + u) / 3.
double defuzzify_centroid(const Tfn& a);

inline Tfn operator+(const Tfn& a, const Tfn& b) { return tfn_add(a, b); }
inline Tfn operator*(const Tfn& a, const Tfn& b) { return tfn_mul(a, b); }

enum class LinguisticLabel {
  Equal,
  Moderate,
  Strong,
  VeryStrong,
  Extreme,
  EqualToModerate,
  ModerateToStrong,
  StrongToVeryStrong,
  VeryStrongToExtreme,
};

inline constexpr std::array<LinguisticLabel, 9> kAllLabels = {
    LinguisticLabel::Equal,           LinguisticLabel::Moderate,
    LinguisticLabel::Strong,          LinguisticLabel::VeryStrong,
    LinguisticLabel::Extreme,         LinguisticLabel::EqualToModerate,
    LinguisticLabel::ModerateToStrong, LinguisticLabel::StrongToVeryStrong,
    LinguisticLabel::VeryStrongToExtreme,
};

// Table entry for a label. Reciprocal judgments (the column criterion dominates)
// are stored as the inverse of the entry.
Tfn linguistic_to_tfn(LinguisticLabel label, bool reciprocal = false);

// Stable key used in files, e.g. "moderate_strong".
std::string_view label_key(LinguisticLabel label);
// Human-readable phrase as shown on the comparison menu.
std::string_view label_phrase(LinguisticLabel label);
// Accepts a key or a phrase (case-insensitive); throws Input on anything else.
LinguisticLabel parse_label(std::string_view text);
std::optional<LinguisticLabel> try_parse_label(std::string_view text);

}  // namespace mcdm
