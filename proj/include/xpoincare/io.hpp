#pragma once

// Text formats shared by the command-line tool and the tests.
//
// Element documents are JSON objects
//   {"alpha": x, "a": [4], "omega": [4], "u": [3], "theta": [3]}
// with every field optional (default zero). Numbers are printed with 17
// significant digits so that parse(print(x)) == x.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xpoincare/algebra.hpp"
#include "xpoincare/poincare.hpp"

namespace xpoincare::io {

/// Throws ParseError (with a byte offset where one is known).
GroupParams parse_element(std::string_view text);
std::string format_element(const GroupParams& g);

/// "%.17g", with -0 printed as 0 and non-finite values as null.
std::string format_number(double x);

enum class MatrixFormat { Json, Csv };

/// Row-major dump. With labels, JSON becomes
/// {"rows": [...], "columns": [...], "matrix": [[...]]} and CSV gains a header
/// row and a leading name column. Entries with mask false print as null
/// (JSON) or an empty field (CSV).
std::string format_matrix(const Eigen::MatrixXd& m, MatrixFormat format,
                          const std::vector<std::string>& labels = {},
                          const Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>* mask = nullptr);

std::vector<std::string> generator_labels();

/// Input of `decompose`: a 4x4 Lorentz matrix, a 5x5 extended-Lorentz
/// matrix, or an affine element (object {"M": 5x5, "t": [5]} or 6x6 array).
using MatrixDoc = std::variant<Mat4, Mat5, AffineRep>;
MatrixDoc parse_matrix(std::string_view text);

/// CSV with header a,b,c,f and one row per nonzero entry.
std::string format_constants_csv(const StructureConstants& f, bool both_orders);
std::string format_constants_json(const StructureConstants& f, bool both_orders);

/// Reads the CSV written by format_constants_csv. Rows are stored as given;
/// an entry (a, b, c) whose mirror (b, a, c) is not listed gets -f there.
StructureConstants parse_constants_csv(std::string_view text);

/// Exact rationals print as "p" or "p/q".
std::string format_rational(const Rational& r);

}  // namespace xpoincare::io
