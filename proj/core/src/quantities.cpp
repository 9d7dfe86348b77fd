#include "becgate/quantities.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace becgate {

void Constants::validate() const {
    if (!(hbar > 0.0) || !(atom_mass > 0.0)) {
        throw ConfigError("physical constants must be positive");
    }
}

namespace units {

std::string_view dimension_name(Dimension d) {
    switch (d) {
        case Dimension::Length: return "length";
        case Dimension::AngularFrequency: return "angular frequency";
        case Dimension::Time: return "time";
        case Dimension::Energy: return "energy";
        case Dimension::Density: return "density";
        case Dimension::InteractionStrength: return "interaction strength";
        case Dimension::Dimensionless: return "dimensionless";
    }
    return "?";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr std::array kUnits = {
    Unit{"m", Dimension::Length, 1.0},
    Unit{"cm", Dimension::Length, 1e-2},
    Unit{"mm", Dimension::Length, 1e-3},
    Unit{"um", Dimension::Length, 1e-6},
    Unit{"nm", Dimension::Length, 1e-9},
    Unit{"rad/s", Dimension::AngularFrequency, 1.0},
    Unit{"Hz", Dimension::AngularFrequency, kTwoPi},
    Unit{"kHz", Dimension::AngularFrequency, kTwoPi * 1e3},
    Unit{"s", Dimension::Time, 1.0},
    Unit{"ms", Dimension::Time, 1e-3},
    Unit{"us", Dimension::Time, 1e-6},
    Unit{"min", Dimension::Time, 60.0},
    Unit{"J", Dimension::Energy, 1.0},
    Unit{"m^-3", Dimension::Density, 1.0},
    Unit{"cm^-3", Dimension::Density, 1e6},
    Unit{"J*m^3", Dimension::InteractionStrength, 1.0},
    Unit{"", Dimension::Dimensionless, 1.0},
    Unit{"1", Dimension::Dimensionless, 1.0},
    Unit{"rad", Dimension::Dimensionless, 1.0},
};

}  // namespace

const Unit& unit(std::string_view symbol) {
    for (const Unit& u : kUnits) {
        if (u.symbol == symbol) return u;
    }
    throw ConfigError("unknown unit '" + std::string(symbol) + "'");
}

const Unit& base_unit(Dimension d) {
    for (const Unit& u : kUnits) {
        if (u.dimension == d && u.to_si == 1.0) return u;
    }
    throw ConfigError("no base unit registered");  // unreachable
}

Quantity::Quantity(double value, std::string_view unit_symbol)
    : value_(value), unit_(&units::unit(unit_symbol)) {}

Quantity Quantity::to(std::string_view target_symbol) const {
    return to(units::unit(target_symbol));
}

Quantity Quantity::to(const Unit& target) const {
    if (target.dimension != unit_->dimension) {
        throw DimensionError(
            "cannot convert " + std::string(dimension_name(unit_->dimension)) + " ('" +
                std::string(unit_->symbol) + "') to " +
                std::string(dimension_name(target.dimension)) + " ('" +
                std::string(target.symbol) + "')",
            std::string(dimension_name(unit_->dimension)),
            std::string(dimension_name(target.dimension)));
    }
    return {value_ * (unit_->to_si / target.to_si), target};
}

namespace {

void require_same_dimension(const Quantity& a, const Quantity& b, const char* op) {
    if (a.dimension() != b.dimension()) {
        throw DimensionError(
            std::string("cannot ") + op + " " + std::string(dimension_name(a.dimension())) +
                " and " + std::string(dimension_name(b.dimension())),
            std::string(dimension_name(a.dimension())),
            std::string(dimension_name(b.dimension())));
    }
}

}  // namespace

Quantity Quantity::operator+(const Quantity& rhs) const {
    require_same_dimension(*this, rhs, "add");
    return {value_ + rhs.to(*unit_).value(), *unit_};
}

Quantity Quantity::operator-(const Quantity& rhs) const {
    require_same_dimension(*this, rhs, "subtract");
    return {value_ - rhs.to(*unit_).value(), *unit_};
}

bool Quantity::operator<(const Quantity& rhs) const {
    require_same_dimension(*this, rhs, "compare");
    return si() < rhs.si();
}

bool Quantity::operator>(const Quantity& rhs) const {
    require_same_dimension(*this, rhs, "compare");
    return si() > rhs.si();
}

Quantity convert(const Quantity& q, std::string_view target_symbol) {
    return q.to(target_symbol);
}

Quantity parse_quantity(std::string_view text) {
    std::string t;
    t.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    }
    if (t.empty()) throw ConfigError("empty quantity");

    double prefactor = 1.0;
    if (t.rfind("2pi*", 0) == 0) {
        prefactor = kTwoPi;
        t.erase(0, 4);
    }

    size_t pos = 0;
    double number = 0.0;
    try {
        number = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse quantity '" + std::string(text) + "'");
    }
    std::string symbol = t.substr(pos);

    if (prefactor != 1.0) {
        // "2pi*10 Hz" is the angular frequency 2*pi*10 rad/s, i.e. the same
        // quantity as "10 Hz" under the Hz-means-ordinary-frequency rule.
        if (symbol != "Hz" && symbol != "kHz") {
            throw ConfigError("the 2pi* prefix applies to frequencies, got '" +
                              std::string(text) + "'");
        }
    }
    return {number, unit(symbol)};
}

double parse_si(std::string_view text, Dimension expected, std::string_view field) {
    Quantity q = parse_quantity(text);
    if (q.dimension() == Dimension::Dimensionless && expected != Dimension::Dimensionless &&
        q.value() == 0.0) {
        return 0.0;  // a bare 0 is unambiguous in any dimension
    }
    if (q.dimension() != expected) {
        throw ConfigError(std::string(field) + ": expected " +
                          std::string(dimension_name(expected)) + ", got " +
                          std::string(dimension_name(q.dimension())) + " ('" +
                          std::string(text) + "')");
    }
    return q.si();
}

std::string format_angular_frequency(double omega_rad_per_s) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "2pi*%.6g Hz", omega_rad_per_s / kTwoPi);
    return buf;
}

}  // namespace units
}  // namespace becgate
