#include "coxperc/cayley_ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "coxperc/algebraic_int.hpp"

namespace coxperc {

namespace {

inline void put_varint_zigzag(std::string& out, std::int64_t v) {
  std::uint64_t u = (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
  while (u >= 0x80) {
    out.push_back(static_cast<char>(u | 0x80));
    u >>= 7;
  }
  out.push_back(static_cast<char>(u));
}

// --- scalar backends --------------------------------------------------------
//
// The generator matrix rho(s) is the identity outside row s; row s holds the
// couplings 2cos(pi/m(s,t)) off the diagonal and -1 on it.  Right-multiplying
// an element matrix A by rho(s) therefore touches only columns with a nonzero
// row-s coupling:  col_j += c_sj * col_s (j != s),  col_s = -col_s.

// Integer couplings: every finite order in {2,3} (coupling 0 or 1), infinity
// coupling 2.  Covers all right-angled inputs and order-3 polyhedra; by far
// the fastest path.
struct IntBackend {
  using Scalar = std::int64_t;
  using Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  static constexpr bool audited = false;
  static constexpr const char* name = "int";
  // One generator application multiplies the max entry by at most 1 + 2k
  // (k <= 64), so entries below 2^54 cannot overflow on the next step.
  static constexpr std::int64_t kEntryLimit = 1ll << 54;

  static Scalar coupling(const CoxeterMatrix& m, int s, int t) {
    switch (m.order(s, t)) {
      case CoxeterMatrix::kInfinity: return 2;
      case 2: return 0;
      case 3: return 1;
      default: throw std::invalid_argument("integer backend: unsupported order");
    }
  }
  static void serialize(const Matrix& a, std::string& out) {
    out.clear();
    const auto* p = a.data();
    const std::size_t total = static_cast<std::size_t>(a.size());
    for (std::size_t i = 0; i < total; ++i) {
      if (p[i] > kEntryLimit || p[i] < -kEntryLimit)
        throw std::overflow_error("integer backend: entry growth exceeded guard");
      put_varint_zigzag(out, p[i]);
    }
  }
};

struct ExactBackend {
  using Scalar = AlgebraicInt;
  using Matrix = ExactMatrix;
  static constexpr bool audited = false;
  static constexpr const char* name = "exact";

  static Scalar coupling(const CoxeterMatrix& m, int s, int t) {
    AlgebraicInt c;
    if (!AlgebraicInt::two_cos_pi_over(m.order(s, t), c))
      throw std::invalid_argument("exact backend: unsupported order");
    return c;
  }
  static void serialize(const Matrix& a, std::string& out) {
    out.clear();
    const int k = static_cast<int>(a.rows());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a(i, j).serialize_to(out);
  }
};

struct FloatBackend {
  using Scalar = double;
  using Matrix = Eigen::MatrixXd;
  static constexpr bool audited = true;
  static constexpr const char* name = "float";
  static constexpr double kQuantum = 1e-9;  // per-entry rounding tolerance

  static Scalar coupling(const CoxeterMatrix& m, int s, int t) {
    const int ord = m.order(s, t);
    return ord == CoxeterMatrix::kInfinity ? 2.0 : 2.0 * std::cos(std::numbers::pi / ord);
  }
  static void serialize(const Matrix& a, std::string& out) {
    out.clear();
    const int k = static_cast<int>(a.rows());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const double x = a(i, j) / kQuantum;
        if (std::abs(x) > 9.0e15)
          throw std::overflow_error("float backend: entry too large to quantize");
        put_varint_zigzag(out, std::llround(x));
      }
  }
};

template <class Scalar>
struct GeneratorTable {
  // updates[s] = list of (j, c_sj) with j != s and c_sj != 0
  std::vector<std::vector<std::pair<int, Scalar>>> updates;
};

template <class Backend>
GeneratorTable<typename Backend::Scalar> make_generators(const CoxeterMatrix& m) {
  GeneratorTable<typename Backend::Scalar> table;
  table.updates.resize(static_cast<std::size_t>(m.rank()));
  for (int s = 0; s < m.rank(); ++s)
    for (int t = 0; t < m.rank(); ++t) {
      if (t == s) continue;
      auto c = Backend::coupling(m, s, t);
      if (!(c == typename Backend::Scalar(0)))
        table.updates[static_cast<std::size_t>(s)].emplace_back(t, c);
    }
  return table;
}

template <class Matrix, class Scalar>
void apply_generator(Matrix& a, int s, const std::vector<std::pair<int, Scalar>>& updates) {
  for (const auto& [j, c] : updates) a.col(j) += a.col(s) * c;
  a.col(s) = -a.col(s);
}

template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> identity_matrix(int k) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = Scalar(i == j ? 1 : 0);
  return m;
}

// --- BFS --------------------------------------------------------------------
//
// Per round n, only the matrices of S(n) and the keys of S(n+1)-so-far are
// live.  A child v*s at word length n-1 is recognized without any matrix work:
// that generator already appears as an inbound edge of v (recorded when the
// shorter element was expanded), which is complete by induction.  Children are
// therefore only ever deduplicated against their own sphere — except in the
// audited float backend, where the previous sphere's keys are also consulted
// to trip the cross-length collision audit.

template <class Backend>
CayleyBall build_ball_impl(const CoxeterMatrix& cox, const BallOptions& opt) {
  using Matrix = typename Backend::Matrix;
  const int k = cox.rank();
  const auto gens = make_generators<Backend>(cox);

  CayleyBall ball;
  ball.k = k;
  ball.radius = opt.radius;
  ball.backend = Backend::name;

  using KeyMap = std::unordered_map<std::string, std::uint32_t>;

  std::vector<Matrix> level_mats;  // matrices of the current sphere S(n)
  level_mats.push_back(identity_matrix<typename Backend::Scalar>(k));
  std::vector<std::uint32_t> level_ids{0};

  ball.lengths.push_back(0);
  ball.parent.push_back(0);
  ball.parent_gen.push_back(0);
  std::vector<std::uint64_t> inbound_mask{0};  // generators already known to shorten
  std::string key;
  if (opt.keep_keys || Backend::audited) Backend::serialize(level_mats[0], key);
  if (opt.keep_keys) ball.keys.push_back(key);

  KeyMap audit_below;  // float backend: keys of S(n-1)
  KeyMap prev_keys;    // float backend: keys of S(n), next round's audit map
  if constexpr (Backend::audited) prev_keys.emplace(key, 0);

  ball.sphere_sizes.push_back(1);

  for (int n = 0; n < opt.radius; ++n) {
    if (level_ids.empty()) break;
    const bool keep_child_mats = (n + 1 < opt.radius);
    KeyMap next_keys;
    std::vector<Matrix> next_mats;
    std::vector<std::uint32_t> next_ids;
    Matrix child;

    for (std::size_t pos = 0; pos < level_ids.size(); ++pos) {
      const std::uint32_t v = level_ids[pos];
      for (int s = 0; s < k; ++s) {
        if (inbound_mask[v] & (1ull << s)) continue;  // v*s is the shorter neighbor
        child = level_mats[pos];
        apply_generator(child, s, gens.updates[static_cast<std::size_t>(s)]);
        Backend::serialize(child, key);

        auto it = next_keys.find(key);
        if (it != next_keys.end()) {
          const std::uint32_t head = it->second;
          ball.edges.push_back({v, head, static_cast<std::uint8_t>(s)});
          inbound_mask[head] |= (1ull << s);
          continue;
        }
        if constexpr (Backend::audited) {
          // No inbound edge marked this generator as shortening, so the word
          // length of v*s must be n+1.  A key hit one sphere below means two
          // elements whose matrices agree within tolerance carry different
          // reduced word lengths: hard error.
          if (audit_below.count(key))
            throw std::runtime_error(
                "float backend collision audit: matrices agree within tolerance "
                "but reduced word lengths differ (lengths " +
                std::to_string(n - 1) + " and " + std::to_string(n + 1) + ")");
        }
        if (ball.lengths.size() >= opt.max_vertices)
          throw BallCapExceeded("ball size cap " + std::to_string(opt.max_vertices) +
                                    " exceeded while expanding radius " + std::to_string(n + 1) +
                                    "; last completed radius " + std::to_string(n),
                                n);
        const auto idx = static_cast<std::uint32_t>(ball.lengths.size());
        ball.lengths.push_back(static_cast<std::uint16_t>(n + 1));
        ball.parent.push_back(v);
        ball.parent_gen.push_back(static_cast<std::uint8_t>(s));
        inbound_mask.push_back(1ull << s);
        ball.edges.push_back({v, idx, static_cast<std::uint8_t>(s)});
        next_keys.emplace(key, idx);
        next_ids.push_back(idx);
        if (keep_child_mats) next_mats.push_back(child);
        if (opt.keep_keys) ball.keys.push_back(key);
      }
    }

    if (next_ids.empty()) {
      ball.saturated = true;
      break;
    }
    ball.radius_reached = n + 1;
    ball.sphere_sizes.push_back(next_ids.size());
    level_mats = std::move(next_mats);
    level_ids = std::move(next_ids);
    if constexpr (Backend::audited) {
      audit_below = std::move(prev_keys);
      prev_keys = std::move(next_keys);
    }
  }

  return ball;
}

bool integer_couplings(const CoxeterMatrix& m) {
  for (int s = 0; s < m.rank(); ++s)
    for (int t = s + 1; t < m.rank(); ++t) {
      const int ord = m.order(s, t);
      if (ord != CoxeterMatrix::kInfinity && ord != 2 && ord != 3) return false;
    }
  return true;
}

}  // namespace

std::vector<int> CayleyBall::reduced_word(std::uint32_t v) const {
  std::vector<int> word;
  while (v != 0) {
    word.push_back(parent_gen[v]);
    v = parent[v];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

CayleyBall build_ball(const CoxeterMatrix& m, const BallOptions& options) {
  if (options.radius < 0) throw std::invalid_argument("build_ball: radius must be >= 0");
  if (m.rank() > 64) throw std::invalid_argument("build_ball: rank > 64 not supported");
  if (integer_couplings(m)) return build_ball_impl<IntBackend>(m, options);
  if (m.exact_backend_available()) return build_ball_impl<ExactBackend>(m, options);
  return build_ball_impl<FloatBackend>(m, options);
}

OrientationStats orientation_stats(const CayleyBall& ball) {
  OrientationStats st;
  const std::size_t n = ball.num_vertices();
  st.k = ball.k;
  st.r.assign(n, 0);
  st.q_.assign(n * static_cast<std::size_t>(ball.k + 1), 0);
  st.interior_flag.assign(n, 0);

  for (const auto& e : ball.edges) ++st.r[e.head];
  for (const auto& e : ball.edges)
    ++st.q_[static_cast<std::size_t>(e.tail) * static_cast<std::size_t>(ball.k + 1) + st.r[e.head]];
  for (std::uint32_t v = 0; v < n; ++v) {
    if (ball.interior(v)) {
      st.interior_flag[v] = 1;
      ++st.num_interior;
    }
  }
  return st;
}

}  // namespace coxperc
