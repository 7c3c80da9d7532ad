#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kinkbench {

// Admissible illumination profiles. mu is even, f = -mu'/2 is odd.
struct GaussianSpec {
  double chi = 0.5;  // chi in (0,1)
};
struct DonutSpec {
  double chi = 0.2;  // chi in (0, 4 e^-2)
};
struct DoubleGaussianSpec {
  double a = 1.2;  // a > 1/sqrt(2)
  double chi = 0.05;
};
struct PeriodicCosineSpec {
  double period = 6.283185307179586;
  double mean = 1.0;
  double amplitude = 0.5;
};
struct TabulatedSpec {
  // strictly increasing in x, at least 4 points
  std::vector<std::pair<double, double>> samples;
};

using ProfileSpec = std::variant<GaussianSpec, DonutSpec, DoubleGaussianSpec,
                                 PeriodicCosineSpec, TabulatedSpec>;

std::string spec_kind(const ProfileSpec& spec);

class Profile {
 public:
  explicit Profile(ProfileSpec spec);

  double mu(double x) const;
  double f(double x) const;  // f = -mu'/2
  bool periodic() const { return periodic_; }
  double period() const { return period_; }
  const ProfileSpec& spec() const { return spec_; }

 private:
  ProfileSpec spec_;
  bool periodic_ = false;
  double period_ = 0.0;
  // tabulated profiles: symmetrized monotone cubic interpolant
  std::vector<double> tab_x_, tab_mu_, tab_d_;
  double tab_fd_step_ = 1e-6;

  double tabulated_mu(double x) const;
};

enum class ProfileCase { A, B };

// Geometric landmarks of the profile. For periodic profiles zeta = 0 (mu is
// maximal there per the periodic hypotheses), the inner extremum sits at T/2,
// and xi is the zero of mu in (0, T/2) when the profile is case B.
struct LandmarkSet {
  double zeta = 0.0;                // location of the positive maximum of mu
  double xi = 0.0;                  // zero of mu beyond zeta (or in (0,T/2))
  std::optional<double> xi_prime;   // zero of mu in (0, zeta), case B only
  ProfileCase profile_case = ProfileCase::A;
  double mu_at_zeta = 0.0;   // value at the maximum
  double mu_at_inner = 0.0;  // value at the inner extremum (x=0, or T/2)
  double inner_point = 0.0;  // 0 for two-bump profiles, T/2 for periodic
  bool periodic = false;
  double period = 0.0;
  double x_search_max = 0.0;  // bound used for the xi search (line profiles)

  bool case_a() const { return profile_case == ProfileCase::A; }
};

// Closed-form threshold constants of the regime diagram.
struct Thresholds {
  double alpha_star = 1.4142135623730951;  // sqrt(2), profile independent
  std::optional<double> alpha_double_star;  // case A only
  std::optional<double> alpha_odd;          // two-bump case A only
  double K = 0.0;  // integral of |f| sqrt(mu) over {mu > 0}
};

Profile make_profile(const ProfileSpec& spec);
LandmarkSet landmarks(const Profile& p);
Thresholds thresholds(const Profile& p, const LandmarkSet& lm);

// adaptive Simpson quadrature; shared by the K cross-check and tests
double integrate_adaptive(const std::function<double(double)>& fn, double a,
                          double b, double tol);

}  // namespace kinkbench
