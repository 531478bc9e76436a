#pragma once

#include "groupeq/bigint.hpp"
#include "groupeq/cyclic.hpp"
#include "groupeq/laurent.hpp"
#include "groupeq/prime_field.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace groupeq {

/// Ring homomorphisms out of Z[A] (Laurent) or Z[y]/(y^m - 1) (cyclic).
///  - augmentation: every group element goes to 1, target Z;
///  - cyclic quotient: exponents folded mod m, target Z[y]/(y^m - 1);
///  - evaluation: every variable goes to `image` in F_p, target F_p.
struct RingHom {
  enum class Kind { augmentation, cyclic_quotient, evaluation };

  Kind kind = Kind::augmentation;
  std::size_t modulus = 1;  // cyclic_quotient
  std::int64_t prime = 2;   // evaluation
  std::int64_t image = 1;   // evaluation

  static RingHom augmentation() { return {}; }
  static RingHom cyclic_quotient(std::size_t m) {
    if (m == 0) throw std::invalid_argument("cyclic modulus must be at least 1");
    return {Kind::cyclic_quotient, m, 2, 1};
  }
  static RingHom evaluation(std::int64_t p, std::int64_t image) {
    PrimeFieldElem img(p, image);
    if (img.is_zero()) throw std::domain_error("evaluation image must be a unit of F_p");
    return {Kind::evaluation, 1, p, img.value()};
  }
};

using RingValue = std::variant<Integer, CyclicPoly, PrimeFieldElem>;

inline RingValue apply_hom(const RingHom& h, const LaurentPoly& a) {
  switch (h.kind) {
    case RingHom::Kind::augmentation:
      return a.augmentation();
    case RingHom::Kind::cyclic_quotient:
      return cyclic_project(a, h.modulus);
    case RingHom::Kind::evaluation: {
      PrimeFieldElem img(h.prime, h.image), sum(h.prime, 0);
      for (const auto& [e, c] : a.terms()) {
        PrimeFieldElem term(h.prime, Integer(c % h.prime).convert_to<std::int64_t>());
        for (auto k : e) term *= img.pow(k);
        sum += term;
      }
      return sum;
    }
  }
  throw std::logic_error("unreachable ring hom kind");
}

inline RingValue apply_hom(const RingHom& h, const CyclicPoly& a) {
  switch (h.kind) {
    case RingHom::Kind::augmentation:
      return a.augmentation();
    case RingHom::Kind::cyclic_quotient: {
      if (a.modulus() % h.modulus != 0)
        throw std::domain_error("cyclic quotient modulus must divide the source modulus");
      CyclicPoly out(h.modulus);
      for (std::size_t i = 0; i < a.modulus(); ++i)
        out += CyclicPoly::monomial(h.modulus, static_cast<std::int64_t>(i), a[i]);
      return out;
    }
    case RingHom::Kind::evaluation: {
      PrimeFieldElem img(h.prime, h.image);
      if (!(img.pow(static_cast<std::int64_t>(a.modulus())) == 1))
        throw std::domain_error("evaluation image must satisfy y^m = 1 on a cyclic source");
      LaurentPoly lp = LaurentPoly::univariate(a.coeffs());
      return apply_hom(h, lp);
    }
  }
  throw std::logic_error("unreachable ring hom kind");
}

inline bool is_zero(const RingValue& v) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer>)
          return x == 0;
        else
          return x.is_zero();
      },
      v);
}

inline std::string to_string(const RingValue& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

}  // namespace groupeq
