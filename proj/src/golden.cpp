#include "rootposet/golden.hpp"

#include <cassert>
#include <sstream>

namespace rootposet::golden {

namespace {

std::string tuple_str(const Coeffs& c) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

std::string row(int a, int ap, const Coeffs& eta, const Coeffs& eta_prime) {
  std::ostringstream os;
  os << "a" << a << " a" << ap << " | " << tuple_str(eta) << " " << tuple_str(eta_prime)
     << "\n";
  return os.str();
}

}  // namespace

Coeffs d_eps_minus(int n, int i, int j) {
  assert(1 <= i && i < j && j <= n);
  Coeffs c(static_cast<size_t>(n), 0);
  for (int k = i; k <= j - 1; ++k) c[static_cast<size_t>(k) - 1] = 1;
  return c;
}

Coeffs d_eps_plus(int n, int i, int j) {
  assert(1 <= i && i < j && j <= n);
  Coeffs c(static_cast<size_t>(n), 0);
  if (j == n) {
    for (int k = i; k <= n - 2; ++k) c[static_cast<size_t>(k) - 1] = 1;
    c[static_cast<size_t>(n) - 1] = 1;
    return c;
  }
  for (int k = i; k <= j - 1; ++k) c[static_cast<size_t>(k) - 1] = 1;
  for (int k = j; k <= n - 2; ++k) c[static_cast<size_t>(k) - 1] = 2;
  c[static_cast<size_t>(n) - 2] = 1;
  c[static_cast<size_t>(n) - 1] = 1;
  return c;
}

Coeffs b_eps_minus(int n, int i, int j) {
  assert(1 <= i && i < j && j <= n + 1);
  Coeffs c(static_cast<size_t>(n), 0);
  for (int k = i; k <= std::min(j - 1, n); ++k) c[static_cast<size_t>(k) - 1] = 1;
  return c;
}

Coeffs b_eps_plus(int n, int i, int j) {
  assert(1 <= i && i < j && j <= n);
  Coeffs c(static_cast<size_t>(n), 0);
  for (int k = i; k <= j - 1; ++k) c[static_cast<size_t>(k) - 1] = 1;
  for (int k = j; k <= n; ++k) c[static_cast<size_t>(k) - 1] = 2;
  return c;
}

Coeffs c_eps_minus(int n, int i, int j) {
  assert(1 <= i && i < j && j <= n);
  Coeffs c(static_cast<size_t>(n), 0);
  for (int k = i; k <= j - 1; ++k) c[static_cast<size_t>(k) - 1] = 1;
  return c;
}

Coeffs c_eps_plus(int n, int i, [[maybe_unused]] int j) {
  assert(1 <= i && i < j && j == n);
  Coeffs c(static_cast<size_t>(n), 0);
  for (int k = i; k <= n - 1; ++k) c[static_cast<size_t>(k) - 1] = 1;
  c[static_cast<size_t>(n) - 1] += 1;
  return c;
}

std::optional<std::string> glorious_expected(const RootSystemSpec& spec) {
  int n = spec.rank;
  if (spec.family == Family::D && n >= 4 && n <= 8) {
    std::string out;
    for (int i = 1; i <= n - 3; ++i)
      out += row(i, i + 1, d_eps_minus(n, 1, i + 2), d_eps_plus(n, 2, i + 2));
    out += row(n - 2, n - 1, d_eps_plus(n, 1, n), d_eps_minus(n, 2, n));
    out += row(n - 2, n, d_eps_minus(n, 1, n), d_eps_plus(n, 2, n));
    return out;
  }
  if (spec.family == Family::B && n >= 3 && n <= 8) {
    std::string out;
    for (int i = 1; i <= n - 2; ++i)
      out += row(i, i + 1, b_eps_minus(n, 1, i + 2), b_eps_plus(n, 2, i + 2));
    return out;
  }
  if (spec.family == Family::E && n == 6) {
    return std::string() +
           "a1 a2 | (1,1,1,0,0,1) (0,1,2,2,1,1)\n" +
           "a2 a3 | (1,1,1,1,0,1) (0,1,2,1,1,1)\n" +
           "a3 a4 | (1,1,2,1,0,1) (0,1,1,1,1,1)\n" +
           "a3 a6 | (1,1,1,1,1,1) (0,1,2,1,0,1)\n" +
           "a4 a5 | (1,2,2,1,0,1) (0,0,1,1,1,1)\n";
  }
  if (spec.family == Family::E && n == 7) {
    return std::string() +
           "a1 a2 | (1,1,1,1,1,1,0) (0,1,2,3,2,1,2)\n" +
           "a2 a3 | (1,1,1,1,1,1,1) (0,1,2,3,2,1,1)\n" +
           "a3 a4 | (1,1,1,2,1,1,1) (0,1,2,2,2,1,1)\n" +
           "a4 a5 | (1,1,2,2,1,1,1) (0,1,1,2,2,1,1)\n" +
           "a4 a7 | (1,1,1,2,2,1,1) (0,1,2,2,1,1,1)\n" +
           "a5 a6 | (1,2,2,2,1,1,1) (0,0,1,2,2,1,1)\n";
  }
  if (spec.family == Family::E && n == 8) {
    return std::string() +
           "a1 a2 | (1,2,2,2,2,1,0,1) (1,1,2,3,4,3,2,2)\n" +
           "a2 a3 | (1,2,2,2,2,1,1,1) (1,1,2,3,4,3,1,2)\n" +
           "a3 a4 | (1,2,2,2,2,2,1,1) (1,1,2,3,4,2,1,2)\n" +
           "a4 a5 | (1,2,2,2,3,2,1,1) (1,1,2,3,3,2,1,2)\n" +
           "a5 a6 | (1,2,2,3,3,2,1,1) (1,1,2,2,3,2,1,2)\n" +
           "a5 a8 | (1,2,2,2,3,2,1,2) (1,1,2,3,3,2,1,1)\n" +
           "a6 a7 | (1,2,3,3,3,2,1,1) (1,1,1,2,3,2,1,2)\n";
  }
  if (spec.family == Family::F) return std::string("a3 a4 | 2211 0221\n");
  return std::nullopt;
}

std::optional<std::string> minmax_expected(const RootSystemSpec& spec) {
  if (spec.family != Family::E || spec.rank != 6) return std::nullopt;
  return std::string() +
         "a1 | (1,1,1,0,0,1) | (0,1,2,2,1,1)\n" +
         "a2 | (1,1,1,1,0,1) (0,1,2,2,1,1) | (0,1,2,1,1,1) (1,1,1,0,0,1)\n" +
         "a3 | (0,1,2,1,1,1) (1,1,1,1,1,1) (1,1,2,1,0,1) | (1,1,1,1,0,1) (0,1,2,1,0,1) "
         "(0,1,1,1,1,1)\n" +
         "a4 | (0,1,1,1,1,1) (1,2,2,1,0,1) | (1,1,2,1,0,1) (0,0,1,1,1,1)\n" +
         "a5 | (0,0,1,1,1,1) | (1,2,2,1,0,1)\n" +
         "a6 | (0,1,2,1,0,1) | (1,1,1,1,1,1)\n";
}

std::optional<std::string> semi_glorious_expected(const RootSystemSpec& spec) {
  int n = spec.rank;
  std::ostringstream os;
  if (spec.family == Family::B && n >= 2 && n <= 8) {
    // alpha = a_{n-1}, alpha' = a_n, eta = eps_1, eta' = eps_2, diff = a_1.
    os << "B" << n << " | a" << (n - 1) << " a" << n << " | "
       << tuple_str(b_eps_minus(n, 1, n + 1)) << " " << tuple_str(b_eps_minus(n, 2, n + 1))
       << " | a1 long\n";
    return os.str();
  }
  if (spec.family == Family::C && n >= 2 && n <= 8) {
    os << "C" << n << " | a" << n << " a" << (n - 1) << " | "
       << tuple_str(c_eps_plus(n, 1, n)) << " " << tuple_str(c_eps_minus(n, 1, n))
       << " | a" << n << " long\n";
    return os.str();
  }
  if (spec.family == Family::F) return std::string("F4 | a3 a2 | 1221 1211 | a3 long\n");
  if (spec.family == Family::G) return std::string("G2 | a2 a1 | 21 11 | a1 short\n");
  return std::nullopt;
}

std::optional<std::string> tails_expected(const RootSystemSpec& spec) {
  int n = spec.rank;
  if (spec.family == Family::D && n >= 4 && n <= 8) {
    std::ostringstream os;
    os << "D" << n << " | b1=a1 b2=a" << (n - 1) << " b3=a" << n << " | branch=a" << (n - 2)
       << "\n";
    return os.str();
  }
  if (spec.family == Family::E && n == 6)
    return std::string("E6 | b1=a1 b2=a5 b3=a3 | branch=a3\n");
  if (spec.family == Family::E && n == 7)
    return std::string("E7 | b1=a1 b2=a5 b3=a3 | branch=a4\n");
  if (spec.family == Family::E && n == 8)
    return std::string("E8 | b1=a2 b2=a8 b3=a4 | branch=a5\n");
  return std::nullopt;
}

std::optional<std::string> transitions_expected(const RootSystemSpec& spec) {
  if (spec.family == Family::E && spec.rank == 6) {
    return std::string() +
           "(a1,a2)+(a2,a3) -> a4\n" +
           "(a2,a3)+(a3,a4) -> a3\n" +
           "(a2,a3)+(a3,a6) -> a5\n" +
           "(a3,a4)+(a3,a6) -> a1\n" +
           "(a3,a4)+(a4,a5) -> a2\n";
  }
  if (spec.family == Family::E && spec.rank == 7) {
    return std::string() +
           "(a1,a2)+(a2,a3) -> a7\n" +
           "(a2,a3)+(a3,a4) -> a4\n" +
           "(a3,a4)+(a4,a5) -> a3\n" +
           "(a3,a4)+(a4,a7) -> a5\n" +
           "(a4,a5)+(a4,a7) -> a1\n" +
           "(a4,a5)+(a5,a6) -> a2\n";
  }
  if (spec.family == Family::E && spec.rank == 8) {
    return std::string() +
           "(a1,a2)+(a2,a3) -> a7\n" +
           "(a2,a3)+(a3,a4) -> a6\n" +
           "(a3,a4)+(a4,a5) -> a5\n" +
           "(a4,a5)+(a5,a6) -> a4\n" +
           "(a4,a5)+(a5,a8) -> a8\n" +
           "(a5,a6)+(a5,a8) -> a2\n" +
           "(a5,a6)+(a6,a7) -> a3\n";
  }
  if (spec.family == Family::D && spec.rank == 8) {
    return std::string() +
           "(a1,a2)+(a2,a3) -> a3\n" +
           "(a2,a3)+(a3,a4) -> a4\n" +
           "(a3,a4)+(a4,a5) -> a5\n" +
           "(a4,a5)+(a5,a6) -> a6\n" +
           "(a5,a6)+(a6,a7) -> a8\n" +
           "(a5,a6)+(a6,a8) -> a7\n" +
           "(a6,a7)+(a6,a8) -> a1\n";
  }
  return std::nullopt;
}

}  // namespace rootposet::golden
