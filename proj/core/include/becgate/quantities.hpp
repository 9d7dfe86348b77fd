#pragma once

#include <string>
#include <string_view>

#include "becgate/errors.hpp"

namespace becgate {

/// Fixed physical constants. All formulas in the library are evaluated in SI
/// with these values; nothing is looked up at runtime.
struct Constants {
    double hbar = 1.054571817e-34;       // J s (CODATA 2018)
    double atom_mass = 1.443160648e-25;  // kg, 87Rb
    std::string reference_isotope = "Rb-87";

    void validate() const;
};

namespace units {

enum class Dimension {
    Length,
    AngularFrequency,
    Time,
    Energy,
    Density,
    InteractionStrength,  // J m^3
    Dimensionless,
};

std::string_view dimension_name(Dimension d);

/// A named scale for one dimension. `to_si` multiplies a value in this unit
/// into the SI base of its dimension (m, rad/s, s, J, m^-3, J*m^3, 1).
/// Ordinary frequency in Hz carries to_si = 2*pi: frequencies are angular
/// internally, and "10 Hz" means the angular frequency 2*pi*10 rad/s.
struct Unit {
    std::string_view symbol;
    Dimension dimension;
    double to_si;
};

/// Look up a unit by symbol ("nm", "Hz", "rad/s", ...). Throws ConfigError
/// for unknown symbols.
const Unit& unit(std::string_view symbol);

/// SI base unit of a dimension.
const Unit& base_unit(Dimension d);

/// A scalar with a unit. Arithmetic across dimensions is rejected;
/// conversion preserves the dimension exactly.
class Quantity {
public:
    Quantity() : value_(0.0), unit_(&base_unit(Dimension::Dimensionless)) {}
    Quantity(double value, const Unit& u) : value_(value), unit_(&u) {}
    Quantity(double value, std::string_view unit_symbol);

    /// Value in SI base units of this quantity's dimension.
    double si() const { return value_ * unit_->to_si; }
    double value() const { return value_; }
    const Unit& unit() const { return *unit_; }
    Dimension dimension() const { return unit_->dimension; }

    /// Express the same quantity in another unit of the same dimension.
    Quantity to(const Unit& target) const;
    Quantity to(std::string_view target_symbol) const;

    Quantity operator+(const Quantity& rhs) const;
    Quantity operator-(const Quantity& rhs) const;
    Quantity operator-() const { return {-value_, *unit_}; }
    Quantity operator*(double k) const { return {value_ * k, *unit_}; }
    Quantity operator/(double k) const { return {value_ / k, *unit_}; }

    bool operator<(const Quantity& rhs) const;
    bool operator>(const Quantity& rhs) const;

private:
    double value_;
    const Unit* unit_;
};

/// convert(q, "m"): same operation as Quantity::to, spelled as a free
/// function for symmetry with the rest of the library.
Quantity convert(const Quantity& q, std::string_view target_symbol);

/// Parse "5.39 nm", "5Hz", "2pi*10 Hz", "0.14s", "1e5" (dimensionless).
/// The "2pi*" prefix is the angular-frequency writing convention: "2pi*10 Hz"
/// and "10 Hz" denote the same angular frequency 2*pi*10 rad/s.
Quantity parse_quantity(std::string_view text);

/// Parse and check the dimension in one step; error messages name `field`.
double parse_si(std::string_view text, Dimension expected, std::string_view field);

/// Render an angular frequency (rad/s) in the report convention "2pi*<f> Hz".
std::string format_angular_frequency(double omega_rad_per_s);

}  // namespace units
}  // namespace becgate
