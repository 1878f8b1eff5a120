#ifndef SYMPOLY_TYPES_HPP
#define SYMPOLY_TYPES_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sympoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind {
    InvalidGraph,
    DisconnectedGraph,
    CycleBudgetExceeded,
    SizeBudgetExceeded,
    DivisionByZeroPolynomial,
    NonDivisible,
    SingularSystem,
    PoleAtOrigin,
    DuplicatePoints,
    NotAFacet,
    NonPalindromicHStar,
    InvalidBadWordSet,
    NotAFacetWord,
    NonIntegralResult,
    LoopsUnsupported,
    InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::CycleBudgetExceeded: return "CycleBudgetExceeded";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::NonPalindromicHStar: return "NonPalindromicHStar";
    case ErrorKind::InvalidBadWordSet: return "InvalidBadWordSet";
    case ErrorKind::NotAFacetWord: return "NotAFacetWord";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::LoopsUnsupported: return "LoopsUnsupported";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every domain failure in the library is reported through this type; the
/// kind is machine-readable and is what the CLI emits as "error".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
          kind_(kind),
          detail_(detail)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace sympoly

#endif
