#include "izeta/profile.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <stdexcept>

namespace izeta {

namespace {

double closed_form_phi1(ProfileFamily family, double a) {
  using boost::math::double_constants::pi;
  using boost::math::double_constants::root_pi;
  switch (family) {
    case ProfileFamily::Exponential:
      return 2.0 * a;
    case ProfileFamily::Gaussian:
      return a * root_pi;
    case ProfileFamily::Lorentzian:
      return a * pi;
  }
  throw std::invalid_argument("unknown profile family");
}

}  // namespace

Profile::Profile(ProfileFamily family, double amplitude)
    : family_(family), amplitude_(amplitude), phi1_(0.0) {
  if (!(amplitude > 0.0 && amplitude < 1.0)) {
    throw std::invalid_argument("profile amplitude must lie in (0,1)");
  }
  phi1_ = closed_form_phi1(family, amplitude);
}

double Profile::operator()(double t) const {
  switch (family_) {
    case ProfileFamily::Exponential:
      return amplitude_ * std::exp(-std::abs(t));
    case ProfileFamily::Gaussian:
      return amplitude_ * std::exp(-t * t);
    case ProfileFamily::Lorentzian:
      return amplitude_ / (1.0 + t * t);
  }
  return 0.0;
}

std::string Profile::name() const { return to_string(family_); }

ProfileFamily parse_profile_family(std::string_view text) {
  if (text == "exp" || text == "exponential") return ProfileFamily::Exponential;
  if (text == "gauss" || text == "gaussian") return ProfileFamily::Gaussian;
  if (text == "lorentz" || text == "lorentzian") return ProfileFamily::Lorentzian;
  throw std::invalid_argument("unknown profile family: " + std::string(text));
}

std::string to_string(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::Exponential:
      return "exp";
    case ProfileFamily::Gaussian:
      return "gauss";
    case ProfileFamily::Lorentzian:
      return "lorentz";
  }
  return "unknown";
}

}  // namespace izeta
