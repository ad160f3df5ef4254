#include "rcm/funcs.hpp"

#include <cmath>
#include <climits>
#include <sstream>

namespace rcm {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// d^m/dz^m of a polynomial via Horner on the shifted coefficients.
cplx poly_derivative(const std::vector<cplx>& c, int m, cplx z) {
  const int deg = static_cast<int>(c.size()) - 1;
  if (m > deg) return 0.0;
  cplx acc = 0.0;
  for (int k = deg; k >= m; --k) {
    double fall = 1.0;
    for (int i = 0; i < m; ++i) fall *= k - i;
    acc = acc * z + c[static_cast<std::size_t>(k)] * fall;
  }
  return acc;
}

// Exact z^e for integer e >= 0; std::pow(cplx, double) is NaN at 0^0.
cplx ipow(cplx z, long long e) {
  cplx r = 1.0;
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

double parse_number(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParameterError(std::string("cannot parse ") + what + ": '" + s + "'");
  }
}

// "a", "a+bi", "a-bi"
cplx parse_complex(const std::string& s) {
  std::size_t pos = s.find_first_of("+-", 1);
  // Skip exponent signs like 1e-3.
  while (pos != std::string::npos &&
         (s[pos - 1] == 'e' || s[pos - 1] == 'E')) {
    pos = s.find_first_of("+-", pos + 1);
  }
  if (pos == std::string::npos || s.back() != 'i')
    return {parse_number(s, "complex number"), 0.0};
  double re = parse_number(s.substr(0, pos), "complex real part");
  std::string imtxt = s.substr(pos, s.size() - pos - 1);
  if (imtxt == "+" || imtxt == "-") imtxt += "1";
  double im = parse_number(imtxt, "complex imaginary part");
  return {re, im};
}

std::vector<std::pair<std::string, std::string>> parse_kv(
    const std::string& body) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParameterError("function DSL: expected key=value, got '" + item +
                           "'");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return out;
}
}  // namespace

HoloFunction HoloFunction::taylor(std::vector<cplx> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  return HoloFunction(Poly{std::move(coeffs)});
}

HoloFunction HoloFunction::kernel_power(cplx lambda, int l) {
  if (std::abs(lambda) >= 1.0)
    throw ParameterError("kernel_power: |lambda| must be < 1");
  if (l <= 0) throw ParameterError("kernel_power: l must be positive");
  return HoloFunction(Kernel{lambda, l});
}

HoloFunction HoloFunction::fejer(int n, double phi) {
  if (n <= 0) throw ParameterError("fejer: n must be positive");
  std::vector<cplx> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
  for (int j = 1; j <= n; ++j) {
    double arg = (n - j + 1) * phi;
    coeffs[static_cast<std::size_t>(j)] =
        cplx(std::cos(arg), std::sin(arg)) / static_cast<double>(n - j + 1);
  }
  return HoloFunction(Fejer{n, phi, std::move(coeffs)});
}

HoloFunction HoloFunction::lacunary(double q, int n_trunc) {
  if (!(q >= 1.0 && q < 2.0))
    throw ParameterError("lacunary: q must lie in [1,2)");
  if (n_trunc <= 0 || n_trunc > 30)
    throw ParameterError("lacunary: truncation N must lie in [1,30]");
  return HoloFunction(Lacunary{q, n_trunc});
}

HoloFunction HoloFunction::blaschke(int n) {
  if (n <= 0) throw ParameterError("blaschke: n must be positive");
  if (n > 24) throw ParameterError("blaschke: n too large (max 24)");
  return HoloFunction(Blaschke{n, 1.0 - 1.0 / n});
}

HoloFunction HoloFunction::monomial(int n) {
  if (n < 0) throw ParameterError("monomial: n must be nonnegative");
  return HoloFunction(Monomial{n});
}

HoloFunction HoloFunction::scaled_by(cplx c) const {
  HoloFunction f = *this;
  f.scale_ *= c;
  return f;
}

int HoloFunction::max_derivative_order() const {
  if (std::holds_alternative<Lacunary>(rep_) ||
      std::holds_alternative<Blaschke>(rep_))
    return 1;
  return INT_MAX;
}

cplx HoloFunction::derivative(int m, cplx z) const {
  if (m < 0) throw ParameterError("derivative order must be >= 0");
  if (m > max_derivative_order())
    throw ParameterError("derivative order " + std::to_string(m) +
                         " unsupported for " + describe());
  cplx v;
  if (const auto* p = std::get_if<Poly>(&rep_)) {
    v = poly_derivative(p->coeffs, m, z);
  } else if (const auto* k = std::get_if<Kernel>(&rep_)) {
    // d^m (1 - conj(lambda) z)^{-l} =
    //   conj(lambda)^m l(l+1)...(l+m-1) (1 - conj(lambda) z)^{-l-m}
    cplx lb = std::conj(k->lambda);
    double rising = 1.0;
    for (int i = 0; i < m; ++i) rising *= k->l + i;
    v = ipow(lb, m) * rising *
        std::pow(1.0 - lb * z, static_cast<double>(-k->l - m));
  } else if (const auto* f = std::get_if<Fejer>(&rep_)) {
    v = poly_derivative(f->coeffs, m, z);
  } else if (const auto* lac = std::get_if<Lacunary>(&rep_)) {
    v = 0.0;
    cplx w = z;  // z^{2^0}; squared up to z^{2^n}
    for (int n = 1; n <= lac->n_trunc; ++n) {
      w *= w;
      double a = std::pow(static_cast<double>(n), -1.0 / lac->q);
      if (m == 0) {
        v += a * w;
      } else {
        // 2^n z^{2^n - 1}; avoid dividing by z at the origin.
        long long e = 1LL << n;
        v += a * static_cast<double>(e) * ipow(z, e - 1);
      }
    }
  } else if (const auto* b = std::get_if<Blaschke>(&rep_)) {
    const int n = b->n;
    const double a = b->a;
    std::vector<cplx> fac(static_cast<std::size_t>(n)),
        dfac(static_cast<std::size_t>(n));
    cplx w = z, dw = 1.0;  // w = z^{2^k}, dw = d/dz z^{2^k}
    // |z| within a few ulps of 1 is a boundary point; snapping it keeps
    // the huge boundary derivative from amplifying the rounding of |z|.
    double abs_z = std::abs(z);
    if (std::abs(abs_z - 1.0) < 1e-13) abs_z = 1.0;
    double rw = abs_z;  // |z|^{2^k}, squared alongside w
    for (int k = 1; k <= n; ++k) {
      dw = 2.0 * w * dw;
      w = w * w;
      rw *= rw;
      // Squaring doubles the phase-space rounding of |w| each step; pin
      // the modulus so boundary values stay unimodular.
      double cur = std::norm(w);
      if (cur > 0.0 && rw > 0.0) w *= rw / std::sqrt(cur);
      cplx denom = 1.0 - a * w;
      fac[static_cast<std::size_t>(k - 1)] = (w - a) / denom;
      dfac[static_cast<std::size_t>(k - 1)] =
          (1.0 - a * a) / (denom * denom) * dw;
    }
    if (m == 0) {
      v = 1.0;
      for (const auto& f : fac) v *= f;
    } else {
      // Product rule with prefix/suffix products; the logarithmic form
      // is singular at interior zeros of the factors.
      std::vector<cplx> prefix(static_cast<std::size_t>(n) + 1, 1.0),
          suffix(static_cast<std::size_t>(n) + 1, 1.0);
      for (int k = 0; k < n; ++k)
        prefix[static_cast<std::size_t>(k + 1)] =
            prefix[static_cast<std::size_t>(k)] *
            fac[static_cast<std::size_t>(k)];
      for (int k = n - 1; k >= 0; --k)
        suffix[static_cast<std::size_t>(k)] =
            suffix[static_cast<std::size_t>(k + 1)] *
            fac[static_cast<std::size_t>(k)];
      v = 0.0;
      for (int k = 0; k < n; ++k)
        v += prefix[static_cast<std::size_t>(k)] *
             dfac[static_cast<std::size_t>(k)] *
             suffix[static_cast<std::size_t>(k + 1)];
    }
  } else {
    const auto& mono = std::get<Monomial>(rep_);
    if (m > mono.n) {
      v = 0.0;
    } else {
      double fall = 1.0;
      for (int i = 0; i < m; ++i) fall *= mono.n - i;
      v = fall * ipow(z, mono.n - m);
    }
  }
  return scale_ * v;
}

std::vector<cplx> HoloFunction::boundary_samples(int n) const {
  if (n <= 0) throw ParameterError("boundary_samples: N must be positive");
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double t = static_cast<double>(j) / n;
    out[static_cast<std::size_t>(j)] =
        derivative(0, cplx(std::cos(kTwoPi * t), std::sin(kTwoPi * t)));
  }
  return out;
}

std::string HoloFunction::describe() const {
  std::ostringstream os;
  if (const auto* p = std::get_if<Poly>(&rep_)) {
    os << "poly(degree " << p->coeffs.size() - 1 << ")";
  } else if (const auto* k = std::get_if<Kernel>(&rep_)) {
    os << "kernel(lambda=" << k->lambda.real() << "+" << k->lambda.imag()
       << "i, l=" << k->l << ")";
  } else if (const auto* f = std::get_if<Fejer>(&rep_)) {
    os << "fejer(n=" << f->n << ", phi=" << f->phi << ")";
  } else if (const auto* lac = std::get_if<Lacunary>(&rep_)) {
    os << "lacunary(q=" << lac->q << ", N=" << lac->n_trunc << ")";
  } else if (const auto* b = std::get_if<Blaschke>(&rep_)) {
    os << "blaschke(n=" << b->n << ")";
  } else {
    os << "monomial(n=" << std::get<Monomial>(rep_).n << ")";
  }
  return os.str();
}

HoloFunction HoloFunction::parse(const std::string& dsl) {
  auto colon = dsl.find(':');
  if (colon == std::string::npos)
    throw ParameterError("function DSL: expected 'variant:params', got '" +
                         dsl + "'");
  std::string kind = dsl.substr(0, colon);
  std::string body = dsl.substr(colon + 1);
  if (kind == "poly") {
    std::vector<cplx> coeffs;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
      coeffs.push_back(parse_complex(item));
    if (coeffs.empty()) throw ParameterError("poly: no coefficients");
    return taylor(std::move(coeffs));
  }
  auto kv = parse_kv(body);
  auto get = [&](const std::string& key) -> const std::string& {
    for (const auto& [k, v] : kv)
      if (k == key) return v;
    throw ParameterError("function DSL: missing parameter '" + key +
                         "' for variant " + kind);
  };
  if (kind == "kernel")
    return kernel_power(parse_complex(get("lambda")),
                        static_cast<int>(parse_number(get("l"), "l")));
  if (kind == "fejer")
    return fejer(static_cast<int>(parse_number(get("n"), "n")),
                 parse_number(get("phi"), "phi"));
  if (kind == "lacunary")
    return lacunary(parse_number(get("q"), "q"),
                    static_cast<int>(parse_number(get("N"), "N")));
  if (kind == "blaschke")
    return blaschke(static_cast<int>(parse_number(get("n"), "n")));
  if (kind == "monomial")
    return monomial(static_cast<int>(parse_number(get("n"), "n")));
  throw ParameterError("function DSL: unknown variant '" + kind + "'");
}

}  // namespace rcm
