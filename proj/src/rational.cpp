#include "combsim/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "combsim/errors.hpp"

namespace combsim {

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        fail(ErrorKind::ParseError, "rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    const auto digits = [&]() {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        return std::string(text.substr(start, pos - start));
    };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::string num_digits = digits();
    if (num_digits.empty()) {
        fail(ErrorKind::ParseError, "expected rational, got '" + std::string(text) + "'");
    }
    Integer num(num_digits);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::string den_digits = digits();
        if (den_digits.empty()) {
            fail(ErrorKind::ParseError, "missing denominator in '" + std::string(text) + "'");
        }
        den = Integer(den_digits);
        if (den == 0) {
            fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
        }
    }
    if (pos != text.size()) {
        fail(ErrorKind::ParseError, "trailing characters in rational '" + std::string(text) + "'");
    }
    if (negative) {
        num = -num;
    }
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += "/";
        out += den_.str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NegativeDistance: return "NegativeDistance";
        case ErrorKind::NonZeroDiagonal: return "NonZeroDiagonal";
        case ErrorKind::Asymmetric: return "Asymmetric";
        case ErrorKind::TriangleViolation: return "TriangleViolation";
        case ErrorKind::EmptySpace: return "EmptySpace";
        case ErrorKind::ValueNotInRange: return "ValueNotInRange";
        case ErrorKind::EmptySubset: return "EmptySubset";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::InvalidPartition: return "InvalidPartition";
        case ErrorKind::NotAnEquivalence: return "NotAnEquivalence";
        case ErrorKind::GroundMismatch: return "GroundMismatch";
        case ErrorKind::WrongBlockCount: return "WrongBlockCount";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::NotABijection: return "NotABijection";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::PointSetMismatch: return "PointSetMismatch";
        case ErrorKind::BadSize: return "BadSize";
        case ErrorKind::BadSample: return "BadSample";
        case ErrorKind::ClosureViolation: return "ClosureViolation";
        case ErrorKind::InternalCheck: return "InternalCheck";
    }
    return "Error";
}

}  // namespace combsim
