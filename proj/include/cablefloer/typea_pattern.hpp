#pragma once

// CFA^-(p,1): the type A module of the (p,1)-cable pattern in the solid
// torus. Generators a, b_1, ..., b_{2p-2}. The A-infinity operations come in
// six families, two of which are infinite (they repeat rho_23); those are
// matched by shape instead of being stored.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cablefloer/errors.hpp"
#include "cablefloer/grading_group.hpp"
#include "cablefloer/typed_complement.hpp"

namespace cablefloer {

struct AGenerator {
  std::string name;
  /// Idempotent of the type D generators this one pairs with.
  Idempotent pairs_with = Idempotent::iota0;
  GradingElement grading;  // left-coset representative modulo <g>
};

/// m_{1+|inputs|}(source, inputs...) = U^u_power * target
struct AOperation {
  std::size_t source = 0;
  std::vector<Chord> inputs;
  std::int64_t u_power = 0;
  std::size_t target = 0;

  friend bool operator==(const AOperation&, const AOperation&) = default;
};

class TypeAModule {
 public:
  explicit TypeAModule(std::int64_t p) : p_(p) {
    if (p <= 1) throw InputError("cable parameter p must be > 1, got " + std::to_string(p));
    generators_.push_back({"a", Idempotent::iota0, GradingElement::identity()});
    for (std::int64_t k = 1; k <= 2 * p - 2; ++k) {
      GradingElement gr;
      if (k <= p - 1) {
        gr = GradingElement::doubled(1, 2 * k - 1, -1, 2 * (k - p));  // (1/2; k-1/2, -1/2; k-p)
      } else {
        const auto i = 2 * p - 2 - k;
        gr = GradingElement::doubled(-1, 2 * i + 1, -1, 0);  // (-1/2; i+1/2, -1/2; 0)
      }
      generators_.push_back({"b" + std::to_string(k), Idempotent::iota1, gr});
    }
  }

  std::int64_t p() const { return p_; }
  const std::vector<AGenerator>& generators() const { return generators_; }

  /// g = (-1/2; 0, 1; p)
  GradingElement g() const { return GradingElement::doubled(-1, 0, 2, 2 * p_); }

  static constexpr std::size_t a_index() { return 0; }
  static constexpr std::size_t b_index(std::int64_t k) { return static_cast<std::size_t>(k); }

  /// Longest input sequence among the U-power-zero operations.
  std::size_t max_hat_arity() const { return static_cast<std::size_t>(p_ - 1); }

  /// The operation on `source` with exactly these algebra inputs, if any.
  std::optional<AOperation> find(std::size_t source, std::span<const Chord> seq) const {
    const auto p = p_;
    auto make = [&](std::int64_t u, std::size_t target) {
      return AOperation{source, std::vector<Chord>(seq.begin(), seq.end()), u, target};
    };
    std::size_t pos = 0;
    auto run = [&](Chord c) {
      std::int64_t r = 0;
      while (pos < seq.size() && seq[pos] == c) ++pos, ++r;
      return r;
    };
    auto take = [&](Chord c) {
      if (pos < seq.size() && seq[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    };
    if (source == a_index()) {
      if (seq.empty()) return std::nullopt;
      if (seq.front() != Chord::rho3) {
        // m_{2+i}(a, rho12^i, rho1) = b_{2p-i-2}
        const auto i = run(Chord::rho12);
        if (take(Chord::rho1) && pos == seq.size() && i <= p - 2) return make(0, b_index(2 * p - i - 2));
        return std::nullopt;
      }
      take(Chord::rho3);
      const auto j = run(Chord::rho23);
      if (!take(Chord::rho2)) return std::nullopt;
      // m_{3+j}(a, rho3, rho23^j, rho2) = U^{p(j+1)} a
      if (pos == seq.size()) return make(p * (j + 1), a_index());
      // m_{4+i+j}(a, rho3, rho23^j, rho2, rho12^i, rho1) = U^{pj+i+1} b_{i+1}
      const auto i = run(Chord::rho12);
      if (take(Chord::rho1) && pos == seq.size() && i <= p - 2) return make(p * j + i + 1, b_index(i + 1));
      return std::nullopt;
    }

    const auto k = static_cast<std::int64_t>(source);
    if (k < 1 || k > 2 * p - 2) return std::nullopt;
    if (seq.empty()) {
      // m_1(b_k) = U^{p-k} b_{2p-k-1}
      if (k <= p - 1) return make(p - k, b_index(2 * p - k - 1));
      return std::nullopt;
    }
    if (!take(Chord::rho2)) return std::nullopt;
    const auto i = run(Chord::rho12);
    if (!take(Chord::rho1) || pos != seq.size()) return std::nullopt;
    // m_{3+i}(b_k, rho2, rho12^i, rho1)
    if (k >= 1 && k <= p - 2 && i <= p - k - 2) return make(i + 1, b_index(k + i + 1));
    if (k >= p + 1 && i <= k - 1 - p) return make(0, b_index(k - i - 1));
    return std::nullopt;
  }

  /// Every operation with at most `max_inputs` algebra inputs.
  std::vector<AOperation> operations(std::size_t max_inputs) const {
    const auto p = p_;
    const auto bound = static_cast<std::int64_t>(max_inputs);
    std::vector<AOperation> out;
    auto rep = [](std::vector<Chord>& v, Chord c, std::int64_t times) {
      for (std::int64_t t = 0; t < times; ++t) v.push_back(c);
    };
    for (std::int64_t k = 1; k <= p - 1; ++k) out.push_back({b_index(k), {}, p - k, b_index(2 * p - k - 1)});
    for (std::int64_t k = 1; k <= 2 * p - 2; ++k) {
      if (k == p) continue;
      const auto imax = k <= p - 2 ? p - k - 2 : k - 1 - p;
      for (std::int64_t i = 0; i <= imax && i + 2 <= bound; ++i) {
        std::vector<Chord> in{Chord::rho2};
        rep(in, Chord::rho12, i);
        in.push_back(Chord::rho1);
        if (k <= p - 2)
          out.push_back({b_index(k), in, i + 1, b_index(k + i + 1)});
        else
          out.push_back({b_index(k), in, 0, b_index(k - i - 1)});
      }
    }
    for (std::int64_t i = 0; i <= p - 2 && i + 1 <= bound; ++i) {
      std::vector<Chord> in;
      rep(in, Chord::rho12, i);
      in.push_back(Chord::rho1);
      out.push_back({a_index(), in, 0, b_index(2 * p - i - 2)});
    }
    for (std::int64_t j = 0; j + 2 <= bound; ++j) {
      std::vector<Chord> head{Chord::rho3};
      rep(head, Chord::rho23, j);
      head.push_back(Chord::rho2);
      out.push_back({a_index(), head, p * (j + 1), a_index()});
      for (std::int64_t i = 0; i <= p - 2 && j + i + 3 <= bound; ++i) {
        auto in = head;
        rep(in, Chord::rho12, i);
        in.push_back(Chord::rho1);
        out.push_back({a_index(), in, p * j + i + 1, b_index(i + 1)});
      }
    }
    return out;
  }

  /// CFA-hat: the U = 0 truncation.
  std::vector<AOperation> hat_operations() const {
    std::vector<AOperation> out;
    for (auto& op : operations(max_hat_arity()))
      if (op.u_power == 0) out.push_back(std::move(op));
    return out;
  }

 private:
  std::int64_t p_;
  std::vector<AGenerator> generators_;
};

inline TypeAModule build_typeA_minus(std::int64_t p) { return TypeAModule(p); }

inline std::vector<AOperation> hat_operations(const TypeAModule& m) { return m.hat_operations(); }

}  // namespace cablefloer
