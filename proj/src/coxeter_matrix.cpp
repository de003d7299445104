#include "coxperc/coxeter_matrix.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coxperc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("coxeter input: " + msg); }

// Exact rank-3 criterion: all finite and 1/m12 + 1/m13 + 1/m23 > 1.
bool spherical_triple(int m12, int m13, int m23) {
  if (m12 == CoxeterMatrix::kInfinity || m13 == CoxeterMatrix::kInfinity ||
      m23 == CoxeterMatrix::kInfinity)
    return false;
  const std::int64_t a = m12, b = m13, c = m23;
  return b * c + a * c + a * b > a * b * c;
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(Eigen::MatrixXi orders, ClassFlags flags)
    : orders_(std::move(orders)), flags_(flags) {
  const int k = static_cast<int>(orders_.rows());
  if (k < 1) fail("rank must be >= 1");
  if (orders_.cols() != k) fail("orders matrix must be square");
  for (int s = 0; s < k; ++s) {
    if (orders_(s, s) != 1) fail("diagonal orders must be 1");
    for (int t = s + 1; t < k; ++t) {
      if (orders_(s, t) != orders_(t, s)) {
        std::ostringstream os;
        os << "asymmetric orders at (" << s << "," << t << "): " << orders_(s, t)
           << " vs " << orders_(t, s);
        fail(os.str());
      }
      const int m = orders_(s, t);
      if (m != kInfinity && m < 2) fail("off-diagonal orders must be >= 2 or infinite");
      if (flags_.right_angled && m != kInfinity && m != 2) {
        std::ostringstream os;
        os << "right_angled flag set but order(" << s << "," << t << ") = " << m;
        fail(os.str());
      }
    }
  }
}

bool CoxeterMatrix::exact_backend_available() const {
  for (int s = 0; s < rank(); ++s)
    for (int t = s + 1; t < rank(); ++t) {
      const int m = orders_(s, t);
      if (m != kInfinity && (m < 2 || m > 6)) return false;
    }
  return true;
}

Eigen::MatrixXd CoxeterMatrix::cosine_matrix(const std::vector<int>& sub) const {
  const int n = static_cast<int>(sub.size());
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int m = orders_(sub[static_cast<std::size_t>(i)], sub[static_cast<std::size_t>(j)]);
      g(i, j) = (m == kInfinity) ? -1.0 : -std::cos(std::numbers::pi / m);
    }
  return g;
}

CoxeterMatrix parse_coxeter_input(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top-level document must be an object");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) fail("missing integer field 'rank'");
  const int k = doc["rank"].get<int>();
  if (k < 1) fail("rank must be >= 1");

  std::string inf_token = "inf";
  if (doc.contains("infinity_token")) {
    if (!doc["infinity_token"].is_string()) fail("'infinity_token' must be a string");
    inf_token = doc["infinity_token"].get<std::string>();
  }

  if (!doc.contains("orders") || !doc["orders"].is_array()) fail("missing array field 'orders'");
  const auto& rows = doc["orders"];
  if (static_cast<int>(rows.size()) != k) fail("'orders' must have exactly 'rank' rows");

  Eigen::MatrixXi orders(k, k);
  for (int s = 0; s < k; ++s) {
    const auto& row = rows[static_cast<std::size_t>(s)];
    if (!row.is_array() || static_cast<int>(row.size()) != k)
      fail("'orders' rows must each have exactly 'rank' entries");
    for (int t = 0; t < k; ++t) {
      const auto& cell = row[static_cast<std::size_t>(t)];
      if (cell.is_string()) {
        if (cell.get<std::string>() != inf_token) fail("unknown order token '" + cell.get<std::string>() + "'");
        orders(s, t) = CoxeterMatrix::kInfinity;
      } else if (cell.is_number_integer()) {
        const int m = cell.get<int>();
        if (m < 1) fail("integer orders must be >= 1");
        orders(s, t) = m;
      } else {
        fail("order entries must be integers or the infinity token");
      }
    }
  }

  ClassFlags flags;
  if (doc.contains("flags")) {
    const auto& f = doc["flags"];
    if (!f.is_object()) fail("'flags' must be an object");
    auto get_flag = [&](const char* name) {
      if (!f.contains(name)) return false;
      if (!f[name].is_boolean()) fail(std::string("flag '") + name + "' must be boolean");
      return f[name].get<bool>();
    };
    flags.hyperbolic_polyhedral = get_flag("hyperbolic_polyhedral");
    flags.right_angled = get_flag("right_angled");
    flags.compact = get_flag("compact");
  }

  return CoxeterMatrix(std::move(orders), flags);
}

std::string coxeter_input_json(const CoxeterMatrix& m, int indent) {
  nlohmann::json doc;
  doc["rank"] = m.rank();
  doc["infinity_token"] = "inf";
  nlohmann::json rows = nlohmann::json::array();
  for (int s = 0; s < m.rank(); ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 0; t < m.rank(); ++t) {
      if (m.is_infinite_order(s, t))
        row.push_back("inf");
      else
        row.push_back(m.order(s, t));
    }
    rows.push_back(std::move(row));
  }
  doc["orders"] = std::move(rows);
  doc["flags"] = {{"hyperbolic_polyhedral", m.flags().hyperbolic_polyhedral},
                  {"right_angled", m.flags().right_angled},
                  {"compact", m.flags().compact}};
  return doc.dump(indent);
}

bool is_spherical(const CoxeterMatrix& m, const std::vector<int>& sub) {
  const std::size_t n = sub.size();
  if (n == 0) throw std::invalid_argument("is_spherical: empty generating subset");
  for (int s : sub)
    if (s < 0 || s >= m.rank()) throw std::invalid_argument("is_spherical: generator index out of range");
  if (n == 1) return true;
  if (n == 2) return !m.is_infinite_order(sub[0], sub[1]);
  if (n == 3)
    return spherical_triple(m.order(sub[0], sub[1]), m.order(sub[0], sub[2]),
                            m.order(sub[1], sub[2]));

  // rank >= 4: exact sub-triple screen first (a spherical group's standard
  // parabolics are spherical), then positive-definiteness of the cosine matrix
  // via leading principal minors.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        if (!spherical_triple(m.order(sub[i], sub[j]), m.order(sub[i], sub[l]),
                              m.order(sub[j], sub[l])))
          return false;

  const Eigen::MatrixXd g = m.cosine_matrix(sub);
  constexpr double kMinorTol = 1e-9;
  for (int d = 1; d <= static_cast<int>(n); ++d) {
    if (g.topLeftCorner(d, d).determinant() <= kMinorTol) return false;
  }
  return true;
}

}  // namespace coxperc
