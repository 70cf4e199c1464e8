#include "wtoric/root_system.hpp"

#include <algorithm>
#include <map>

namespace wtoric {

const int kDefaultRankCap = 4;

namespace {

// Gram matrices use the normalization: long roots have squared norm 2 and
// the short/long ratios are the standard ones for B, C, F, G. For I2(5) and
// H3 all roots have squared norm 2 and off-diagonal entries involve sqrt(5).
Matrix gram_entries(const std::string& family, int n) {
  Matrix g = Matrix::Constant(n, n, Scalar(0));
  auto chain = [&](const Scalar& offdiag) {
    for (int i = 0; i + 1 < n; ++i) {
      g(i, i + 1) = offdiag;
      g(i + 1, i) = offdiag;
    }
  };
  if (family == "A") {
    for (int i = 0; i < n; ++i) g(i, i) = Scalar(2);
    chain(Scalar(-1));
  } else if (family == "B") {
    // alpha_n short
    for (int i = 0; i < n; ++i) g(i, i) = (i == n - 1) ? Scalar(1) : Scalar(2);
    chain(Scalar(-1));
  } else if (family == "C") {
    // alpha_n long
    for (int i = 0; i < n; ++i) g(i, i) = (i == n - 1) ? Scalar(2) : Scalar(1);
    chain(Scalar(Rational(-1, 2)));
    g(n - 2, n - 1) = Scalar(-1);
    g(n - 1, n - 2) = Scalar(-1);
  } else if (family == "D") {
    for (int i = 0; i < n; ++i) g(i, i) = Scalar(2);
    // node 2 is the branch point: edges (1,2),(2,3),(2,4)
    auto link = [&](int i, int j) { g(i, j) = Scalar(-1); g(j, i) = Scalar(-1); };
    link(0, 1);
    link(1, 2);
    link(1, 3);
  } else if (family == "F") {
    g(0, 0) = Scalar(2); g(1, 1) = Scalar(2); g(2, 2) = Scalar(1); g(3, 3) = Scalar(1);
    g(0, 1) = g(1, 0) = Scalar(-1);
    g(1, 2) = g(2, 1) = Scalar(-1);
    g(2, 3) = g(3, 2) = Scalar(Rational(-1, 2));
  } else if (family == "G") {
    // alpha_1 short, alpha_2 long
    g(0, 0) = Scalar(Rational(2, 3));
    g(1, 1) = Scalar(2);
    g(0, 1) = g(1, 0) = Scalar(-1);
  } else if (family == "I5") {
    const Scalar c(Rational(-1, 2), Rational(-1, 2), 5);  // -2 cos(pi/5)
    g(0, 0) = Scalar(2); g(1, 1) = Scalar(2);
    g(0, 1) = g(1, 0) = c;
  } else if (family == "H3") {
    const Scalar c(Rational(-1, 2), Rational(-1, 2), 5);
    for (int i = 0; i < 3; ++i) g(i, i) = Scalar(2);
    g(0, 1) = g(1, 0) = c;
    g(1, 2) = g(2, 1) = Scalar(-1);
  } else {
    throw Error("unknown family: " + family);
  }
  return g;
}

struct ParsedLabel {
  std::string family;
  int rank;
};

ParsedLabel parse_label(const std::string& label) {
  if (label == "I2(5)" || label == "I25") return {"I5", 2};
  if (label == "H3") return {"H3", 3};
  if (label.size() >= 2) {
    const char f = label[0];
    if (f == 'A' || f == 'B' || f == 'C' || f == 'D' || f == 'F' || f == 'G') {
      try {
        const int n = std::stoi(label.substr(1));
        return {std::string(1, f), n};
      } catch (const std::exception&) {
      }
    }
  }
  throw Error("unsupported root system label: '" + label + "'");
}

void check_supported(const std::string& family, int rank, int rank_cap) {
  auto ok = [&]() {
    if (family == "A") return rank >= 1 && rank <= 4;
    if (family == "B") return rank >= 2 && rank <= 4;
    if (family == "C") return rank >= 3 && rank <= 4;
    if (family == "D") return rank == 4;
    if (family == "F") return rank == 4;
    if (family == "G") return rank == 2;
    if (family == "I5") return rank == 2;
    if (family == "H3") return rank == 3;
    return false;
  }();
  if (!ok) throw Error("unsupported type/rank: " + family + std::to_string(rank));
  if (rank > rank_cap) {
    throw Error("rank " + std::to_string(rank) + " exceeds cap " + std::to_string(rank_cap));
  }
}

Matrix simple_reflection_matrix(const GramForm& gram, int i) {
  const int n = gram.rank();
  Matrix m = Matrix::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    m(i, j) -= Scalar(2) * gram.g(i, j) / gram.g(i, i);
  }
  return m;
}

} // namespace

RootSystem build_root_system(const std::string& label, int rank_cap) {
  const ParsedLabel p = parse_label(label);
  check_supported(p.family, p.rank, rank_cap);

  RootSystem rs;
  rs.label = label;
  rs.rank = p.rank;
  rs.crystallographic = (p.family != "I5" && p.family != "H3");
  rs.disc = rs.crystallographic ? 1 : 5;
  rs.gram = GramForm(gram_entries(p.family, p.rank));

  for (int i = 0; i < p.rank; ++i) {
    Vector e = Vector::Constant(p.rank, Scalar(0));
    e(i) = Scalar(1);
    rs.simple_roots.push_back(std::move(e));
  }
  for (int i = 0; i < p.rank; ++i) {
    rs.simple_reflections.push_back(simple_reflection_matrix(rs.gram, i));
  }

  // Close the simple system under the simple reflections.
  std::map<Vector, int, VecLexLess> seen;
  for (const Vector& a : rs.simple_roots) {
    seen.emplace(a, static_cast<int>(rs.roots.size()));
    rs.roots.push_back(a);
  }
  for (size_t head = 0; head < rs.roots.size(); ++head) {
    const Vector cur = rs.roots[head];
    for (int i = 0; i < p.rank; ++i) {
      Vector img = rs.simple_reflections[i] * cur;
      if (seen.emplace(img, static_cast<int>(rs.roots.size())).second) {
        rs.roots.push_back(std::move(img));
      }
    }
  }
  return rs;
}

Matrix reflection(const RootSystem& rs, const Vector& alpha) {
  if (root_index(rs, alpha) < 0) throw Error("reflection: vector is not a root");
  const int n = rs.rank;
  const Scalar norm2 = inner_product(alpha, alpha, rs.gram);
  const Vector pair = rs.gram.g * alpha;  // <alpha, e_j> for each j
  Matrix m = Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    if (alpha(i).is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (pair(j).is_zero()) continue;
      m(i, j) -= Scalar(2) * alpha(i) * pair(j) / norm2;
    }
  }
  return m;
}

int root_index(const RootSystem& rs, const Vector& v) {
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    if (vec_eq(rs.roots[i], v)) return static_cast<int>(i);
  }
  return -1;
}

Vector pairings(const RootSystem& rs, const Vector& v) {
  return rs.gram.g * v;
}

bool is_dominant(const RootSystem& rs, const Vector& v) {
  const Vector p = pairings(rs, v);
  for (int i = 0; i < rs.rank; ++i) {
    if (p(i).sign() < 0) return false;
  }
  return true;
}

bool is_strictly_dominant(const RootSystem& rs, const Vector& v) {
  const Vector p = pairings(rs, v);
  for (int i = 0; i < rs.rank; ++i) {
    if (p(i).sign() <= 0) return false;
  }
  return true;
}

Vector weight_coords_to_root_coords(const RootSystem& rs, const std::vector<Scalar>& c) {
  if (static_cast<int>(c.size()) != rs.rank) throw Error("weight coordinates: wrong length");
  Vector rhs(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    rhs(i) = c[i] * rs.gram.g(i, i) / Scalar(2);
  }
  auto x = solve(rs.gram.g, rhs);
  if (!x) throw Error("weight coordinates: Gram system inconsistent");
  return *x;
}

} // namespace wtoric
