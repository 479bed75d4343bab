#include <algorithm>

#include "checker/witness.hpp"
#include "gk/exact_arith.hpp"

namespace gk {

using detail::str;
using detail::witness;

namespace {

constexpr unsigned kRankLimit = 1u << 16;

struct Probe {
  BigInt q;
  BigInt value;  // numerator at q
};

class Search {
 public:
  Search(const ComponentExpr& e, u64 p, SolveResult& out) : e_(e), m_(detail::mersenne(p)), out_(out) {}

  void run() {
    if (!e_.ranks.present) {
      solve_rank(0);
      return;
    }
    const BigInt q_min = e_.qs.smallest();
    for (unsigned n = e_.ranks.min; n < kRankLimit; ++n) {
      if (!e_.ranks.contains(n)) continue;
      const auto dens = denominator_candidates(e_.kind, n);
      const BigInt cap = *std::max_element(dens.begin(), dens.end()) * m_;
      const BigInt low = expr_numerator(e_.kind, q_min, n);
      if (low > cap) {
        out_.witnesses.push_back(witness(WitnessKind::Less, Strategy::BoundedSearchEmpty,
                                         label(n) + ": at q = " + str(q_min) + " the value already exceeds " +
                                             str(cap) + ", so no larger rank can reach 2^p-1",
                                         {cap, low}));
        return;
      }
      solve_rank(n);
    }
    fail(ErrorCode::BoundTooSmall, "rank search for " + e_.describe() + " did not terminate");
  }

 private:
  std::string label(unsigned n) const {
    std::string s(expr_text(e_.kind));
    if (e_.ranks.present) s += " [n=" + std::to_string(n) + "]";
    return s;
  }

  BigInt num(const BigInt& q, unsigned n) const { return expr_numerator(e_.kind, q, n); }

  // Largest domain q with numerator <= target, and its successor in the
  // domain's natural order.
  void locate(unsigned n, const BigInt& target, std::optional<Probe>& below, std::optional<Probe>& above) const {
    using Shape = QDomain::Shape;
    const QDomain& d = e_.qs;
    switch (d.shape) {
      case Shape::Values:
        for (unsigned v : d.values) {
          BigInt value = num(v, n);
          if (value <= target) {
            below = Probe{v, value};
          } else {
            above = Probe{v, value};
            return;
          }
        }
        return;
      case Shape::PowersOf:
      case Shape::OddPowersOf: {
        const unsigned step = d.shape == Shape::OddPowersOf ? 2 : 1;
        for (unsigned k = d.min_exponent;; k += step) {
          const BigInt q = pow(BigInt(d.base), k);
          BigInt value = num(q, n);
          if (value <= target) {
            below = Probe{q, value};
          } else {
            above = Probe{q, value};
            return;
          }
        }
      }
      case Shape::AnyPrimePower: {
        // The numerator is increasing in q over the integers, so bisection
        // brackets every integer root.
        BigInt lo = d.min_q;
        BigInt lo_value = num(lo, n);
        if (lo_value > target) {
          above = Probe{lo, lo_value};
          return;
        }
        BigInt hi = target + 2;
        while (num(hi, n) <= target) hi *= 2;
        while (hi - lo > 1) {
          const BigInt mid = (lo + hi) / 2;
          if (num(mid, n) <= target) lo = mid;
          else hi = mid;
        }
        below = Probe{lo, num(lo, n)};
        above = Probe{hi, num(hi, n)};
        return;
      }
    }
  }

  void solve_rank(unsigned n) {
    for (const BigInt& d : denominator_candidates(e_.kind, n)) {
      const BigInt target = d * m_;
      std::optional<Probe> below, above;
      locate(n, target, below, above);
      if (below) out_.required_bound = std::max(out_.required_bound, below->q);
      if (below && below->value == target) {
        accept(n, d, below->q);
        continue;
      }
      const std::string what = label(n) + " numerator = " + str(d) + "*(2^p-1)";
      if (below && above) {
        out_.witnesses.push_back(witness(WitnessKind::Bracket, Strategy::BoundedSearchEmpty,
                                         what + " falls strictly between q = " + str(below->q) + " and q = " +
                                             str(above->q),
                                         {below->value, target, above->value}));
      } else if (above) {
        out_.witnesses.push_back(witness(WitnessKind::Less, Strategy::BoundedSearchEmpty,
                                         what + " is below the value at the smallest q = " + str(above->q),
                                         {target, above->value}));
      } else if (below) {
        out_.witnesses.push_back(witness(WitnessKind::Less, Strategy::BoundedSearchEmpty,
                                         what + " exceeds the value at the largest admissible q = " + str(below->q),
                                         {below->value, target}));
      }
    }
  }

  void accept(unsigned n, const BigInt& d, const BigInt& q) {
    const std::string at = label(n) + " at q = " + str(q);
    if (!as_prime_power(q)) {
      out_.witnesses.push_back(witness(WitnessKind::NotPrimePower, Strategy::BoundedSearchEmpty,
                                       at + " hits the target but q is not a prime power", {q}));
      return;
    }
    if (!e_.qs.contains(q) || (e_.side && !e_.side(q, n))) {
      out_.witnesses.push_back(detail::note(Strategy::BoundedSearchEmpty,
                                            at + " hits the target outside the case's conditions (" +
                                                e_.qs.describe() + (e_.side_text.empty() ? "" : ", " + e_.side_text) +
                                                ")"));
      return;
    }
    const BigInt actual = expr_denominator(e_.kind, q, n);
    if (actual != d) {
      out_.witnesses.push_back(witness(WitnessKind::Unequal, Strategy::BoundedSearchEmpty,
                                       at + ": the numerator matches divisor " + str(d) + " but the gcd there is " +
                                           str(actual),
                                       {actual, d}));
      return;
    }
    Solution s{q, n, d, e_.group_at(q, n)};
    out_.witnesses.push_back(witness(WitnessKind::Equal, Strategy::BoundedSearchEmpty,
                                     at + " solves the equation: " + s.group.label(),
                                     {num(q, n) / d, m_}));
    out_.solutions.push_back(std::move(s));
  }

  const ComponentExpr& e_;
  BigInt m_;
  SolveResult& out_;
};

}  // namespace

SolveResult solve_component_equation(const ComponentExpr& expr, u64 p, const BigInt& q_bound) {
  SolveResult out;
  Search(expr, p, out).run();
  if (q_bound > 0 && out.required_bound > q_bound)
    fail(ErrorCode::BoundTooSmall, std::string(expr_text(expr.kind)) + ": the exhaustive range reaches q = " +
                                       out.required_bound.str() + " but the bound is " + q_bound.str());
  return out;
}

}  // namespace gk
