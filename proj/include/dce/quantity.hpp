#ifndef DCE_QUANTITY_HPP
#define DCE_QUANTITY_HPP

/// @file quantity.hpp
/// Dimensioned scalar arithmetic over the seven SI base dimensions, plus the
/// fixed table of physical constants used by every formula in the bench.
///
/// Every physics routine in this project builds its result with Quantity
/// arithmetic and extracts the raw value only after the dimension has been
/// checked. A mistyped formula therefore fails at run time with a
/// dimension_error instead of silently producing a wrong number.

#include <cmath>
#include <stdexcept>
#include <string>

namespace dce {

/// Exponents of the seven SI base dimensions. Equal iff all exponents equal.
struct Dimension {
    int length = 0;       ///< m
    int mass = 0;         ///< kg
    int time = 0;         ///< s
    int current = 0;      ///< A
    int temperature = 0;  ///< K
    int amount = 0;       ///< mol
    int luminosity = 0;   ///< cd

    friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

    constexpr Dimension operator*(const Dimension& o) const {
        return {length + o.length, mass + o.mass,     time + o.time,
                current + o.current, temperature + o.temperature,
                amount + o.amount,   luminosity + o.luminosity};
    }
    constexpr Dimension operator/(const Dimension& o) const {
        return {length - o.length, mass - o.mass,     time - o.time,
                current - o.current, temperature - o.temperature,
                amount - o.amount,   luminosity - o.luminosity};
    }
    constexpr Dimension pow(int n) const {
        return {length * n, mass * n,  time * n,  current * n,
                temperature * n, amount * n, luminosity * n};
    }
};

/// Compact human-readable form, e.g. "kg m^2 s^-3" or "1" for dimensionless.
std::string to_string(const Dimension& d);

namespace dims {
inline constexpr Dimension dimensionless{};
inline constexpr Dimension length{.length = 1};
inline constexpr Dimension mass{.mass = 1};
inline constexpr Dimension time{.time = 1};
inline constexpr Dimension current{.current = 1};
inline constexpr Dimension temperature{.temperature = 1};

inline constexpr Dimension area = length * length;
inline constexpr Dimension volume = area * length;
inline constexpr Dimension frequency = dimensionless / time;  // Hz and rad/s
inline constexpr Dimension velocity = length / time;
inline constexpr Dimension mass_density = mass / volume;
inline constexpr Dimension energy = mass * area / time.pow(2);  // J
inline constexpr Dimension power = energy / time;               // W
inline constexpr Dimension action = energy * time;              // J s
inline constexpr Dimension magnetic_flux_density = mass / (time.pow(2) * current);  // T
inline constexpr Dimension magnetic_moment = energy / magnetic_flux_density;        // J/T
inline constexpr Dimension permittivity = current.pow(2) * time.pow(4) / (mass * volume);  // F/m
inline constexpr Dimension entropy = energy / temperature;      // J/K
}  // namespace dims

/// Dimension mismatch between an expected and an actual quantity.
class dimension_error : public std::runtime_error {
  public:
    dimension_error(const Dimension& expected, const Dimension& actual,
                    const std::string& context);
    Dimension expected;
    Dimension actual;
};

/// Arithmetic produced a non-finite value (overflow, 0/0, ...).
class quantity_error : public std::runtime_error {
  public:
    explicit quantity_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A finite real value tagged with its physical dimension.
///
/// Addition and subtraction require equal dimensions; multiplication and
/// division compose dimensions by exponent arithmetic. Construction and every
/// operation reject non-finite values.
class Quantity {
  public:
    constexpr Quantity() = default;  // zero, dimensionless

    Quantity(double value, const Dimension& dim) : value_(value), dim_(dim) {
        if (!std::isfinite(value_)) {
            throw quantity_error("non-finite quantity value [" + to_string(dim_) + "]");
        }
    }

    double value() const { return value_; }
    const Dimension& dim() const { return dim_; }

    /// Checked extraction: throws dimension_error unless dim() == expected.
    double value_in(const Dimension& expected, const std::string& context = {}) const;

    Quantity operator-() const { return Quantity(-value_, dim_); }

    friend Quantity operator*(const Quantity& a, const Quantity& b) {
        return Quantity(a.value_ * b.value_, a.dim_ * b.dim_);
    }
    friend Quantity operator/(const Quantity& a, const Quantity& b);
    friend Quantity operator*(double s, const Quantity& q) {
        return Quantity(s * q.value_, q.dim_);
    }
    friend Quantity operator*(const Quantity& q, double s) { return s * q; }
    friend Quantity operator/(const Quantity& q, double s);
    friend Quantity operator+(const Quantity& a, const Quantity& b);
    friend Quantity operator-(const Quantity& a, const Quantity& b);

    friend bool operator==(const Quantity& a, const Quantity& b) {
        return a.value_ == b.value_ && a.dim_ == b.dim_;
    }

  private:
    double value_ = 0.0;
    Dimension dim_{};
};

/// Integer power (no fractional dimensions are needed in this project).
Quantity pow(const Quantity& q, int n);

/// Succeeds iff q.dim() == expected, else throws dimension_error carrying both.
void assert_dim(const Quantity& q, const Dimension& expected,
                const std::string& context = {});

/// Construction helpers for the units that actually appear in the formulas.
namespace units {
inline Quantity scalar(double v) { return {v, dims::dimensionless}; }
inline Quantity meters(double v) { return {v, dims::length}; }
inline Quantity square_meters(double v) { return {v, dims::area}; }
inline Quantity seconds(double v) { return {v, dims::time}; }
inline Quantity hertz(double v) { return {v, dims::frequency}; }
inline Quantity rad_per_sec(double v) { return {v, dims::frequency}; }
inline Quantity meters_per_sec(double v) { return {v, dims::velocity}; }
inline Quantity kg_per_m3(double v) { return {v, dims::mass_density}; }
inline Quantity kelvin(double v) { return {v, dims::temperature}; }
inline Quantity joules(double v) { return {v, dims::energy}; }
inline Quantity watts(double v) { return {v, dims::power}; }
}  // namespace units

/// Physical constants, CODATA values frozen at six or more significant
/// digits. Immutable after construction; reachable as dimensioned quantities
/// through si() or as raw doubles through constants::raw.
struct Constants {
    Quantity hbar;    ///< reduced Planck constant, J s
    Quantity c;       ///< speed of light, m/s
    Quantity mu_b;    ///< Bohr magneton, J/T
    Quantity eps0;    ///< vacuum permittivity, F/m
    Quantity k_b;     ///< Boltzmann constant, J/K
    Quantity h;       ///< Planck constant, J s
    double euler_gamma;

    static const Constants& si();
};

namespace constants::raw {
inline constexpr double hbar = 1.054572e-34;
inline constexpr double c = 2.99792458e8;
inline constexpr double mu_b = 9.274010e-24;
inline constexpr double eps0 = 8.854188e-12;
inline constexpr double k_b = 1.380649e-23;
inline constexpr double h = 6.62607015e-34;
inline constexpr double euler_gamma = 0.5772156649015329;
inline constexpr double pi = 3.14159265358979323846;
}  // namespace constants::raw

}  // namespace dce

#endif  // DCE_QUANTITY_HPP
