#ifndef IZETA_PROFILE_HPP
#define IZETA_PROFILE_HPP

#include <string>
#include <string_view>

namespace izeta {

enum class ProfileFamily { Exponential, Gaussian, Lorentzian };

/// Percolation profile phi(t) = a * shape(t) with 0 < a < 1.
///
/// Every family is even, strictly decreasing on t >= 0 and bounded by a < 1,
/// and has a closed-form integral over the real line (the mean degree phi1).
class Profile {
 public:
  Profile(ProfileFamily family, double amplitude);

  ProfileFamily family() const { return family_; }
  double amplitude() const { return amplitude_; }

  double operator()(double t) const;

  /// Exact integral of phi over the real line.
  double phi1() const { return phi1_; }

  std::string name() const;

 private:
  ProfileFamily family_;
  double amplitude_;
  double phi1_;
};

/// Accepts "exp", "gauss", "lorentz" (and the full family names).
ProfileFamily parse_profile_family(std::string_view text);
std::string to_string(ProfileFamily family);

}  // namespace izeta

#endif  // IZETA_PROFILE_HPP
