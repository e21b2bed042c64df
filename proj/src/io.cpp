#include "xpoincare/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "xpoincare/errors.hpp"

namespace xpoincare::io {

namespace {

using nlohmann::json;

std::size_t key_position(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  return pos == std::string_view::npos ? ParseError::npos : pos;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  } catch (const json::out_of_range& e) {
    throw ParseError(std::string("invalid number: ") + e.what(), ParseError::npos);
  }
}

double finite_number(const json& v, std::string_view text, std::string_view key) {
  if (!v.is_number()) {
    throw ParseError("field \"" + std::string(key) + "\" must contain numbers",
                     key_position(text, key));
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ParseError("field \"" + std::string(key) + "\" is not finite", key_position(text, key));
  }
  return x;
}

template <int N>
Eigen::Matrix<double, N, 1> fixed_array(const json& v, std::string_view text, std::string_view key) {
  if (!v.is_array() || v.size() != static_cast<std::size_t>(N)) {
    std::ostringstream msg;
    msg << "field \"" << key << "\" must be an array of " << N << " numbers";
    throw ParseError(msg.str(), key_position(text, key));
  }
  Eigen::Matrix<double, N, 1> out;
  for (int i = 0; i < N; ++i) out[i] = finite_number(v[static_cast<std::size_t>(i)], text, key);
  return out;
}

Eigen::MatrixXd square_matrix(const json& v, std::string_view text, std::string_view key) {
  const auto where = key.empty() ? std::size_t{0} : key_position(text, key);
  if (!v.is_array() || v.empty()) throw ParseError("matrix must be a non-empty array of rows", where);
  const auto n = v.size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != n) {
      std::ostringstream msg;
      msg << "matrix row " << i << " must have " << n << " entries";
      throw ParseError(msg.str(), where);
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          finite_number(row[j], text, key.empty() ? std::string_view("matrix") : key);
    }
  }
  return m;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Rational parse_rational(const std::string& s, std::size_t where) {
  try {
    std::size_t used = 0;
    const auto slash = s.find('/');
    const long long num = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
    long long den = 1;
    if (slash != std::string::npos) {
      const std::string tail = s.substr(slash + 1);
      den = std::stoll(tail, &used);
      if (used != tail.size() || den == 0) throw std::invalid_argument(s);
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("invalid rational \"" + s + "\"", where);
  }
}

}  // namespace

GroupParams parse_element(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("element document must be a JSON object", 0);

  GroupParams g;
  Vec4 omega = Vec4::Zero();
  Vec3 u = Vec3::Zero();
  Vec3 theta = Vec3::Zero();
  for (const auto& [key, value] : doc.items()) {
    if (key == "alpha") {
      g.alpha = finite_number(value, text, key);
    } else if (key == "a") {
      g.a = fixed_array<4>(value, text, key);
    } else if (key == "omega") {
      omega = fixed_array<4>(value, text, key);
    } else if (key == "u") {
      u = fixed_array<3>(value, text, key);
    } else if (key == "theta") {
      theta = fixed_array<3>(value, text, key);
    } else {
      throw ParseError("unknown field \"" + key + "\"", key_position(text, key));
    }
  }
  g.xl = {OmegaVector(omega), FourVelocity(u), RotationVector(theta)};
  return g;
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

template <typename V>
std::string format_array(const V& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_number(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string format_element(const GroupParams& g) {
  return "{\"alpha\":" + format_number(g.alpha) + ",\"a\":" + format_array(g.a) +
         ",\"omega\":" + format_array(g.xl.omega.lower()) + ",\"u\":" + format_array(g.xl.u.spatial()) +
         ",\"theta\":" + format_array(g.xl.theta.vector()) + "}";
}

std::vector<std::string> generator_labels() {
  std::vector<std::string> out;
  for (Generator g : all_generators()) out.emplace_back(name(g));
  return out;
}

std::string format_matrix(const Eigen::MatrixXd& m, MatrixFormat format,
                          const std::vector<std::string>& labels,
                          const Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>* mask) {
  const bool labelled = !labels.empty();
  auto entry = [&](Eigen::Index i, Eigen::Index j, const char* missing) -> std::string {
    if (mask && !(*mask)(i, j)) return missing;
    return format_number(m(i, j));
  };

  std::string out;
  if (format == MatrixFormat::Csv) {
    if (labelled) {
      for (const auto& l : labels) out += "," + l;
      out += "\n";
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (labelled) out += labels[static_cast<std::size_t>(i)] + ",";
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (j) out += ",";
        out += entry(i, j, "");
      }
      out += "\n";
    }
    return out;
  }

  std::string rows = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) rows += ",";
    rows += "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) rows += ",";
      rows += entry(i, j, "null");
    }
    rows += "]";
  }
  rows += "]";
  if (!labelled) return rows + "\n";

  std::string names = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) names += (i ? ",\"" : "\"") + labels[i] + "\"";
  names += "]";
  return "{\"rows\":" + names + ",\"columns\":" + names + ",\"matrix\":" + rows + "}\n";
}

MatrixDoc parse_matrix(std::string_view text) {
  const json doc = parse_json(text);
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) {
      if (key != "M" && key != "t") throw ParseError("unknown field \"" + key + "\"", key_position(text, key));
    }
    if (!doc.contains("M") || !doc.contains("t")) throw ParseError("affine document needs \"M\" and \"t\"", 0);
    const Eigen::MatrixXd m = square_matrix(doc["M"], text, "M");
    if (m.rows() != 5) throw ParseError("\"M\" must be 5x5", key_position(text, "M"));
    return AffineRep{Mat5(m), fixed_array<5>(doc["t"], text, "t")};
  }

  const Eigen::MatrixXd m = square_matrix(doc, text, "");
  switch (m.rows()) {
    case 4:
      return Mat4(m);
    case 5:
      return Mat5(m);
    case 6: {
      const Mat6 full(m);
      Eigen::Matrix<double, 1, 6> last = Eigen::Matrix<double, 1, 6>::Zero();
      last[5] = 1.0;
      if (full.row(5) != last) throw ParseError("6x6 affine matrix must end with row (0,0,0,0,0,1)", 0);
      const Mat5 inv_t = full.topLeftCorner<5, 5>();
      // [[M^-T, t], [0, 1]] with M^-T = B M B for B-preserving M.
      return AffineRep{form_matrix() * inv_t * form_matrix(), full.topRightCorner<5, 1>()};
    }
    default:
      throw ParseError("matrix must be 4x4, 5x5 or 6x6", 0);
  }
}

std::string format_rational(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

std::string format_constants_csv(const StructureConstants& f, bool both_orders) {
  std::string out = "a,b,c,f\n";
  for (const auto& e : f.entries(!both_orders)) {
    out += std::string(name(e.a)) + "," + std::string(name(e.b)) + "," + std::string(name(e.c)) +
           "," + format_rational(e.f) + "\n";
  }
  return out;
}

std::string format_constants_json(const StructureConstants& f, bool both_orders) {
  std::string out = "[";
  bool first = true;
  for (const auto& e : f.entries(!both_orders)) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "  {\"a\":\"" + std::string(name(e.a)) + "\",\"b\":\"" + std::string(name(e.b)) +
           "\",\"c\":\"" + std::string(name(e.c)) + "\",\"f\":" + format_rational(e.f) + "}";
  }
  return out + "\n]\n";
}

StructureConstants parse_constants_csv(std::string_view text) {
  StructureConstants f;
  std::set<std::tuple<int, int, int>> listed;
  std::size_t offset = 0;
  bool first_line = true;
  while (offset <= text.size()) {
    auto end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(offset, end - offset));
    const std::size_t where = offset;
    offset = end + 1;
    if (line.empty() || line[0] == '#') continue;
    if (first_line) {
      first_line = false;
      if (line == "a,b,c,f") continue;
    }

    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string field; std::getline(ss, field, ',');) fields.push_back(trim(field));
    if (fields.size() != 4) throw ParseError("constants row must have 4 fields: " + line, where);

    Generator g[3];
    for (int i = 0; i < 3; ++i) {
      const auto parsed = parse_generator(fields[static_cast<std::size_t>(i)]);
      if (!parsed) throw ParseError("unknown generator \"" + fields[static_cast<std::size_t>(i)] + "\"", where);
      g[i] = *parsed;
    }
    const auto key = std::make_tuple(ordinal(g[0]), ordinal(g[1]), ordinal(g[2]));
    if (!listed.insert(key).second) throw ParseError("duplicate constants row: " + line, where);
    f.set_raw(g[0], g[1], g[2], parse_rational(fields[3], where));
  }

  for (const auto& [a, b, c] : listed) {
    if (!listed.count({b, a, c})) {
      f.set_raw(generator_at(b), generator_at(a), generator_at(c), -f.at(a, b, c));
    }
  }
  return f;
}

}  // namespace xpoincare::io
