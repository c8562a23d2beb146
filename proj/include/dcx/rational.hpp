#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dcx {

// expression templates off: every arithmetic result is a concrete value, so
// deduced return types and std::min/std::max never capture dangling temporaries
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct scale_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact rational extended with +infinity. -infinity never occurs as a value.
class ExtVal {
public:
    ExtVal() : inf_(true) {}
    ExtVal(Rat v) : inf_(false), v_(std::move(v)) {}
    ExtVal(long v) : inf_(false), v_(v) {}
    ExtVal(int v) : inf_(false), v_(v) {}

    static ExtVal infinity() { return ExtVal(); }

    bool is_inf() const { return inf_; }
    bool finite() const { return !inf_; }

    const Rat& value() const {
        if (inf_) throw domain_error("ExtVal: value() on +inf");
        return v_;
    }

    ExtVal operator+(const ExtVal& o) const {
        if (inf_ || o.inf_) return infinity();
        return ExtVal(v_ + o.v_);
    }

    // total order with +inf greater than every rational
    bool operator<(const ExtVal& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator>(const ExtVal& o) const { return o < *this; }
    bool operator==(const ExtVal& o) const {
        if (inf_ != o.inf_) return false;
        return inf_ || v_ == o.v_;
    }
    bool operator!=(const ExtVal& o) const { return !(*this == o); }
    bool operator<=(const ExtVal& o) const { return !(o < *this); }
    bool operator>=(const ExtVal& o) const { return !(*this < o); }

private:
    bool inf_;
    Rat v_;
};

/// Serialize as "p" or "p/q" (canonical, q > 0).
std::string rat_to_string(const Rat& r);

/// Parse "p" or "p/q" decimal strings; rejects q == 0 and junk.
Rat rat_from_string(const std::string& s);

} // namespace dcx
