#include "dce/quantity.hpp"

namespace dce {

namespace {

void append_unit(std::string& out, const char* symbol, int exp) {
    if (exp == 0) return;
    if (!out.empty()) out += ' ';
    out += symbol;
    if (exp != 1) out += "^" + std::to_string(exp);
}

}  // namespace

std::string to_string(const Dimension& d) {
    std::string out;
    append_unit(out, "m", d.length);
    append_unit(out, "kg", d.mass);
    append_unit(out, "s", d.time);
    append_unit(out, "A", d.current);
    append_unit(out, "K", d.temperature);
    append_unit(out, "mol", d.amount);
    append_unit(out, "cd", d.luminosity);
    return out.empty() ? "1" : out;
}

dimension_error::dimension_error(const Dimension& expected_, const Dimension& actual_,
                                 const std::string& context)
    : std::runtime_error((context.empty() ? std::string("dimension mismatch")
                                          : "dimension mismatch in " + context) +
                         ": expected [" + to_string(expected_) + "], got [" +
                         to_string(actual_) + "]"),
      expected(expected_),
      actual(actual_) {}

double Quantity::value_in(const Dimension& expected, const std::string& context) const {
    assert_dim(*this, expected, context);
    return value_;
}

Quantity operator/(const Quantity& a, const Quantity& b) {
    if (b.value_ == 0.0) {
        throw quantity_error("division by zero quantity [" + to_string(b.dim_) + "]");
    }
    return Quantity(a.value_ / b.value_, a.dim_ / b.dim_);
}

Quantity operator/(const Quantity& q, double s) {
    if (s == 0.0) throw quantity_error("division of quantity by zero scalar");
    return Quantity(q.value_ / s, q.dim_);
}

Quantity operator+(const Quantity& a, const Quantity& b) {
    if (!(a.dim_ == b.dim_)) throw dimension_error(a.dim_, b.dim_, "addition");
    return Quantity(a.value_ + b.value_, a.dim_);
}

Quantity operator-(const Quantity& a, const Quantity& b) {
    if (!(a.dim_ == b.dim_)) throw dimension_error(a.dim_, b.dim_, "subtraction");
    return Quantity(a.value_ - b.value_, a.dim_);
}

Quantity pow(const Quantity& q, int n) {
    return Quantity(std::pow(q.value(), n), q.dim().pow(n));
}

void assert_dim(const Quantity& q, const Dimension& expected, const std::string& context) {
    if (!(q.dim() == expected)) throw dimension_error(expected, q.dim(), context);
}

const Constants& Constants::si() {
    static const Constants table{
        Quantity(constants::raw::hbar, dims::action),
        Quantity(constants::raw::c, dims::velocity),
        Quantity(constants::raw::mu_b, dims::magnetic_moment),
        Quantity(constants::raw::eps0, dims::permittivity),
        Quantity(constants::raw::k_b, dims::entropy),
        Quantity(constants::raw::h, dims::action),
        constants::raw::euler_gamma,
    };
    return table;
}

}  // namespace dce
