#include <functional>

#include "checker/witness.hpp"
#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"

namespace gk {

using detail::str;
using detail::witness;

Factorization lemma8_product(unsigned n) {
  Factorization b;
  for (unsigned i = 1; i <= n; ++i) b *= factor_power_minus_one(2, 2 * i);
  return b;
}

bool check_lemma8_bound(unsigned n, const BigInt& t) {
  if (!is_prime(t)) fail(ErrorCode::InvalidArgument, t.str() + " is not prime");
  const BigInt part = lemma8_product(n).part(t);
  if (part >= pow2(3 * n)) return false;
  return t < 5 || part < pow2(2 * n);
}

bool check_lemma4(const BigInt& m_other, const BigInt& subgroup_order) {
  if (m_other < 2 || subgroup_order < 1) fail(ErrorCode::InvalidArgument, "check_lemma4 needs m >= 2 and |H| >= 1");
  return (subgroup_order - 1) % m_other == 0;
}

TwoPartCheck check_two_part_overflow(const Factorization& candidate_order, u64 p) {
  TwoPartCheck c;
  c.v_candidate = candidate_order.exponent_of(2);
  c.v_group = p * p;
  c.overflow = c.v_candidate > c.v_group;
  return c;
}

TwoPartCheck check_two_part_overflow_alternating(const BigInt& n, u64 p) {
  TwoPartCheck c;
  c.v_candidate = static_cast<u64>(legendre_valuation(n, 2)) - 1;
  c.v_group = p * p;
  c.overflow = c.v_candidate > c.v_group;
  return c;
}

namespace {

using S = Strategy;
using K = WitnessKind;

class Replay {
 public:
  explicit Replay(u64 p)
      : p_(p), pu_(static_cast<unsigned>(p)), m_(detail::mersenne(p)), r_(m_ - 1),
        order_(group_order(GroupSpec::lie(Family::C, pu_, 2))) {}

  ArgumentCheck run(ArgumentId id);

 private:
  void add(K k, S s, std::string text, std::vector<BigInt> v) { out_.witnesses.push_back(witness(k, s, std::move(text), std::move(v))); }
  void note(S s, std::string text) { out_.witnesses.push_back(detail::note(s, std::move(text))); }

  void expect(bool ok, const std::string& what) {
    if (!ok && out_.consistent) {
      out_.consistent = false;
      out_.diagnostic = what;
    }
  }

  void residue(S s, const std::string& text, const BigInt& x, unsigned m, unsigned expected) {
    const BigInt r = x % m;
    expect(r == expected, text + ": expected residue " + std::to_string(expected) + " mod " + std::to_string(m) +
                              ", computed " + str(r));
    add(K::Residue, s, text, {x, m, r});
  }

  void valuation(S s, const std::string& text, const BigInt& x, const BigInt& t, u64 expected) {
    const u64 v = gk::valuation(x, t);
    expect(v == expected, text + ": expected valuation " + std::to_string(expected) + ", computed " + std::to_string(v));
    add(K::Valuation, s, text, {x, t, v});
  }

  void not_divides(S s, const std::string& text, const BigInt& a, const BigInt& b) {
    expect(b % a != 0, text + ": " + str(a) + " divides " + str(b));
    add(K::NotDivides, s, text, {a, b});
  }

  void less(S s, const std::string& text, const BigInt& a, const BigInt& b) {
    expect(a < b, text + ": " + str(a) + " is not below " + str(b));
    add(K::Less, s, text, {a, b});
  }

  void not_power(S s, const std::string& text, const BigInt& x, const BigInt& b) {
    expect(!(x == 1 || exact_log(x, b)), text + ": " + str(x) + " is a power of " + str(b));
    add(K::NotPower, s, text, {x, b});
  }

  // |G|_t < 2^k for every prime t >= t_min of |G|.
  void t_parts_below(unsigned t_min, unsigned k, const std::string& why) {
    for (const auto& term : order_.terms()) {
      if (term.prime < t_min) continue;
      const BigInt part = pow(term.prime, static_cast<unsigned>(term.exponent));
      expect(part < pow2(k), "t-part bound fails at t = " + str(term.prime));
      add(K::TPartBelow, S::TPartBound, why + ": |G|_" + str(term.prime) + " = " + str(part) + " < 2^" + std::to_string(k),
          {term.prime, k});
    }
  }

  // Checks a polynomial identity or congruence over sample q values.
  void identity(const std::string& what, const std::vector<BigInt>& qs, const std::function<bool(const BigInt&)>& holds) {
    for (const BigInt& q : qs)
      if (!holds(q)) {
        expect(false, what + " fails at q = " + str(q));
        return;
      }
    note(S::ModContradiction, "identity checked for " + std::to_string(qs.size()) + " sample q: " + what);
  }

  static std::vector<BigInt> range(unsigned lo, unsigned hi, unsigned step = 1) {
    std::vector<BigInt> v;
    for (unsigned q = lo; q <= hi; q += step) v.emplace_back(q);
    return v;
  }

  void sylow_two(const std::string& label, std::initializer_list<unsigned> offsets) {
    for (unsigned off : offsets) {
      const unsigned e = pu_ * pu_ - off;
      not_divides(S::Lemma4Divisibility, label + ": 2^p-1 does not divide 2^" + std::to_string(e) + "-1", m_, pow2(e) - 1);
    }
  }

  void catalan_three() {
    const BigInt x = pow2(pu_ + 1) - 1;
    not_power(S::CatalanNoSolution, "2^(p+1) - 3^r = 1 needs 2^(p+1)-1 = " + str(x) + " to be a power of 3", x, 3);
    // The oracle over all prime bases up to 3 must agree: only 3^2 - 2^3 = 1.
    const auto sols = catalan_solutions(3, p_ + 1);
    const bool only_classic = sols.size() == 1 && sols[0] == CatalanSolution{3, 2, 2, 3};
    expect(only_classic, "Catalan oracle disagrees with the direct check");
    note(S::CatalanNoSolution,
         "Catalan oracle with bases <= 3 and exponents <= p+1 returns only 3^2 - 2^3 = 1");
  }

  u64 p_;
  unsigned pu_;
  BigInt m_, r_;  // 2^p - 1 and 2^p - 2
  Factorization order_;
  ArgumentCheck out_;
};

ArgumentCheck Replay::run(ArgumentId id) {
  using A = ArgumentId;
  const BigInt two_p1 = pow2(pu_ + 1);
  const BigInt half_a = pow2((pu_ - 1) / 2) - 1;  // 2^((p-1)/2) - 1
  const BigInt half_b = half_a + 2;               // 2^((p-1)/2) + 1
  auto qp = [](const BigInt& q, unsigned k) { return pow(q, k); };

  switch (id) {
    case A::TwistedE6TwoAdic:
      identity("(q^6-+q^3+1) - 1 = q^3(q^3-+1)", range(2, 60), [&](const BigInt& q) {
        return qp(q, 6) - qp(q, 3) == qp(q, 3) * (qp(q, 3) - 1) && qp(q, 6) + qp(q, 3) == qp(q, 3) * (qp(q, 3) + 1);
      });
      t_parts_below(3, 3 * pu_, "odd characteristic needs q^36 <= |G|_t while q^9 > 2^p");
      valuation(S::ModContradiction, "q = 2^f, divisor 1: 2^(3f)(2^(3f)-+1) = 2^p-2 forces 3f = v_2(2^p-2)", r_, 2, 1);
      not_divides(S::ModContradiction, "3f = 1 is impossible", 3, 1);
      valuation(S::ModContradiction, "q = 2^f, divisor 3: 2^(3f)(2^(3f)-+1) = 3(2^p-1)-1 forces 3f = v_2", 3 * m_ - 1, 2, 2);
      not_divides(S::ModContradiction, "3f = 2 is impossible", 3, 2);
      break;
    case A::OddF4Mod4:
      identity("q odd: q^4-q^2 = q^2(q^2-1) = 0 mod 4", range(3, 99, 2), [&](const BigInt& q) {
        const BigInt lhs = qp(q, 4) - qp(q, 2);
        return lhs == qp(q, 2) * (qp(q, 2) - 1) && lhs % 4 == 0;
      });
      residue(S::ModContradiction, "2(2^(p-1)-1) mod 4", r_, 4, 2);
      break;
    case A::ThreeD4Mod4:
      identity("q^2(q^2-1) = 0 mod 4 for every q", range(2, 99), [&](const BigInt& q) {
        return (qp(q, 4) - qp(q, 2)) % 4 == 0;
      });
      residue(S::ModContradiction, "2(2^(p-1)-1) mod 4", r_, 4, 2);
      break;
    case A::SuzukiTwoAdic:
      identity("q = 2^(2m+1): q -+ sqrt(2q) = 2^(m+1)(2^m -+ 1)", range(1, 20), [&](const BigInt& m) {
        const unsigned mm = static_cast<unsigned>(m);
        const BigInt q = pow2(2 * mm + 1), root = pow2(mm + 1);
        return q - root == root * (pow2(mm) - 1) && q + root == root * (pow2(mm) + 1);
      });
      valuation(S::ModContradiction, "v_2(2^p-2) = 1 while v_2(2^(m+1)(2^m-+1)) = m+1 >= 2", r_, 2, 1);
      break;
    case A::E8Phi24Mod16:
      identity("q^8-q^4 = q^4(q-1)(q+1)(q^2+1) = 0 mod 16", range(2, 80), [&](const BigInt& q) {
        const BigInt lhs = qp(q, 8) - qp(q, 4);
        return lhs == qp(q, 4) * (q - 1) * (q + 1) * (qp(q, 2) + 1) && lhs % 16 == 0;
      });
      residue(S::ModContradiction, "2(2^(p-1)-1) mod 16", r_, 16, 14);
      break;
    case A::E8Phi15:
    case A::E8Phi30: {
      const bool plus = id == A::E8Phi30;
      const unsigned k = plus ? 30 : 15;
      const std::string cubic = plus ? "q^3+q^2-1" : "q^3-q^2+1";
      identity("Phi_" + std::to_string(k) + "(q) - 1 = q(q^4-1)(" + cubic + "), 0 mod 16 for odd q, v_2 = v_2(q) for even q",
               range(2, 80), [&](const BigInt& q) {
                 const BigInt c = plus ? qp(q, 3) + qp(q, 2) - 1 : qp(q, 3) - qp(q, 2) + 1;
                 const BigInt lhs = cyclotomic_value(q, k) - 1;
                 if (lhs != q * (qp(q, 4) - 1) * c) return false;
                 return q % 2 == 1 ? lhs % 16 == 0 : gk::valuation(lhs, 2) == gk::valuation(q, 2);
               });
      residue(S::ModContradiction, "odd q: 2(2^(p-1)-1) mod 16", r_, 16, 14);
      valuation(S::ModContradiction, "even q: v_2(q) = v_2(2^p-2) = 1 forces q = 2", r_, 2, 1);
      const BigInt at_two = (cyclotomic_value(2, k) - 1) / 2 + 1;  // 2^(p-1) would equal this
      not_power(S::ModContradiction,
                "q = 2: Phi_" + std::to_string(k) + "(2) = " + str(cyclotomic_value(2, k)) + " gives 2^(p-1) = " + str(at_two),
                at_two, 2);
      break;
    }
    case A::E8Phi20Mod4:
      identity("Phi_20(q) - 1 = q^2(q^2-1)(q^4+1) = 0 mod 4", range(2, 80), [&](const BigInt& q) {
        const BigInt lhs = cyclotomic_value(q, 20) - 1;
        return lhs == qp(q, 2) * (qp(q, 2) - 1) * (qp(q, 4) + 1) && lhs % 4 == 0;
      });
      residue(S::ModContradiction, "2(2^(p-1)-1) mod 4", r_, 4, 2);
      break;
    case A::ReeTitsTwoAdic:
      identity("q = 2^(2m+1): component - 1 = 2^(m+1) * odd", range(1, 15), [&](const BigInt& m) {
        const unsigned mm = static_cast<unsigned>(m);
        const BigInt q = pow2(2 * mm + 1), r = pow2(mm + 1);
        const BigInt plus = qp(q, 2) + q * r + q + r, minus = qp(q, 2) - q * r + q - r;
        return gk::valuation(plus, 2) == mm + 1 && gk::valuation(minus, 2) == mm + 1;
      });
      valuation(S::ModContradiction, "v_2(2^p-2) = 1 while the left side has v_2 = m+1 >= 2", r_, 2, 1);
      break;
    case A::EvenF4TwoAdic:
      identity("q = 2^m: q^4 and q^2(q^2-1) are divisible by 4", range(1, 30), [&](const BigInt& m) {
        const BigInt q = pow2(static_cast<unsigned>(m));
        return qp(q, 4) % 4 == 0 && (qp(q, 4) - qp(q, 2)) % 4 == 0;
      });
      residue(S::ModContradiction, "2(2^(p-1)-1) mod 4", r_, 4, 2);
      break;
    case A::ReeMinusLemma8:
      identity("q - sqrt(3q) + 1 = 2^p-1 forces q > 2^p, so q^3 > 2^(3p)", range(1, 25), [&](const BigInt& m) {
        const unsigned mm = static_cast<unsigned>(m);
        const BigInt q = pow(BigInt(3), 2 * mm + 1);
        return q - pow(BigInt(3), mm + 1) + 1 < q - 1;  // component < q - 1, so q > 2^p
      });
      t_parts_below(3, 3 * pu_, "|2G2(q)|_3 = q^3 <= |G|_3");
      break;
    case A::ReePlusSubcases: {
      add(K::Equal, S::ModContradiction, "2^p - 2 = 2(2^((p-1)/2)-1)(2^((p-1)/2)+1)", {2 * half_a * half_b, r_});
      expect(2 * half_a * half_b == r_, "factorisation of 2^p-2");
      add(K::Equal, S::ModContradiction, "the two factors are coprime", {gcd(half_a, half_b), 1});
      expect(gcd(half_a, half_b) == 1, "coprimality of the factors");
      const u64 va = gk::valuation(half_a, 3), vb = gk::valuation(half_b, 3);
      add(K::Valuation, S::ModContradiction, "3-adic valuation of 2^((p-1)/2)-1", {half_a, 3, va});
      add(K::Valuation, S::ModContradiction, "3-adic valuation of 2^((p-1)/2)+1", {half_b, 3, vb});
      // (i) 3^(m+1) | A with m >= 1.
      for (u64 m = 1; m + 1 <= va; ++m) {
        const BigInt lhs = pow(BigInt(3), static_cast<unsigned>(m + 1)) * (pow(BigInt(3), static_cast<unsigned>(m)) + 1);
        less(S::ModContradiction, "subcase 3^(m+1) | A at m = " + std::to_string(m) + ": 3^(m+1)(3^m+1) < 2AB", lhs,
             2 * half_a * half_b);
      }
      less(S::ModContradiction, "subcase 3^(m+1) | A: 3^m+1 < 3^(m+1) <= A < B", half_a, half_b);
      // (ii) 3^(m+1) | B forces 2^((p+1)/2)-1 <= 3^m < B.
      less(S::ModContradiction, "subcase 3^(m+1) | B: B < 2^((p+1)/2)-1", half_b, pow2((pu_ + 1) / 2) - 1);
      break;
    }
    case A::G2ThreeLemma8:
      t_parts_below(3, 3 * pu_, "q^2-q+1 = 2^p-1 gives q^6 > 2^(3p) while q^6 <= |G|_3");
      break;
    case A::G2ThreeMod8:
      identity("q = 3^m: q(q+1) = 2 mod 8 for even m and 4 mod 8 for odd m", range(1, 40), [&](const BigInt& m) {
        const BigInt q = pow(BigInt(3), static_cast<unsigned>(m));
        return q * (q + 1) % 8 == (m % 2 == 0 ? 2 : 4);
      });
      residue(S::ModContradiction, "2^p-2 mod 8", r_, 8, 6);
      break;
    case A::TwistedDFermatThree:
    case A::TwistedDPrevThree:
      identity("(3^(n-1)+1)/2 + 1 = 3(3^(n-2)+1)/2", range(3, 40), [&](const BigInt& n) {
        const unsigned k = static_cast<unsigned>(n);
        return 2 * ((pow(BigInt(3), k - 1) + 1) / 2 + 1) == 3 * (pow(BigInt(3), k - 2) + 1);
      });
      residue(S::ModContradiction, "3(3^(n-2)+1) = 2^(p+1) needs 3 | 2^(p+1)", two_p1, 3, 1);
      break;
    case A::TwistedDQuarterLemma8:
      t_parts_below(3, 3 * pu_, "(3^r+1)/4 = 2^p-1 gives 3^(r(r-1)) > 2^(4(p+1)) while 3^(r(r-1)) <= |G|_3");
      break;
    case A::BnOddLemma8:
    case A::CnLemma8:
      residue(S::TPartBound, "q^n = 2^(p+1)-3 is prime to 3", two_p1 - 3, 3, 1);
      t_parts_below(5, 2 * pu_, "q^(n^2) > 2^(3p) while q^(n^2) <= |G|_t");
      break;
    case A::CatalanPowerOfThree:
      catalan_three();
      break;
    case A::G2CoprimeLemma8:
      valuation(S::ModContradiction, "q(q+1) = 2^p-2 has v_2 = 1, so q > 2 is not a power of 2", r_, 2, 1);
      t_parts_below(5, 2 * pu_, "q^6 > 2^(2p) while q^6 <= |G|_t");
      break;
    case A::TwistedDTwo:
      valuation(S::ModContradiction, "2^(n-1)+1 = 2^p-1 gives 2^(n-1) = 2^p-2 with v_2 = 1 < n-1", r_, 2, 1);
      residue(S::ModContradiction, "read as 2^(n-1)-1 = 2^p-1: n-1 = p = 2^m needs p even", p_, 2, 1);
      break;
    case A::TwistedDnEven:
      valuation(S::ModContradiction, "q even: q^n = 2^p-2 has v_2 = 1 < n", r_, 2, 1);
      break;
    case A::TwistedDnOddLemma8:
      residue(S::TPartBound, "q^n = 2^(p+1)-3 is odd", two_p1 - 3, 2, 1);
      t_parts_below(3, 3 * pu_, "q^(n(n-1)) >= q^(3n) > 2^(3p) while q^(n(n-1)) <= |G|_t");
      break;
    case A::DrFiveLemma8:
      t_parts_below(5, 2 * pu_, "(5^r-1)/4 = 2^p-1 gives 5^(r(r-1)) > 2^(4(p+1)) while 5^(r(r-1)) <= |G|_5");
      break;
    case A::CnEvenTwoAdic:
      valuation(S::ModContradiction, "q even: q^n = 2^p-2 has v_2 = 1 < n", r_, 2, 1);
      break;
    case A::CTwoMod8:
      identity("q odd: (q-1)(q+1) = 0 mod 8", range(3, 99, 2), [](const BigInt& q) { return (q * q - 1) % 8 == 0; });
      residue(S::ModContradiction, "n = 2: (q-1)(q+1) = 4(2^(p-1)-1) mod 8", two_p1 - 4, 8, 4);
      break;
    case A::AOnePlusOne:
      not_power(S::ModContradiction, "q+1 = 2^p-1 gives q = 2^p-2", r_, 2);
      break;
    case A::AOneSquareRootMod8:
      identity("t odd: (t^(f/2)-1)(t^(f/2)+1) = 0 mod 8", range(3, 99, 2), [](const BigInt& t) { return (t * t - 1) % 8 == 0; });
      residue(S::ModContradiction, "f even: 4(2^(p-1)-1) mod 8", two_p1 - 4, 8, 4);
      break;
    case A::AOneTwoSylow:
      sylow_two("q = 2^(p+1)-3, |S_2| in {2^(p^2-2), 2^(p^2-3)}", {2, 3});
      note(S::Lemma4Divisibility,
           "q = 2^p-1: the 2-Sylow route leaves |S_2| = 2^(p^2-p) with 2^p-1 | 2^(p^2-p)-1, so that branch is closed "
           "by the per-solution check over the remaining primes");
      break;
    case A::AOneMinusCatalan: {
      const BigInt q = two_p1 - 1;
      residue(S::CatalanNoSolution, "(q-1)/2 = 2^p-1 gives q = 2^(p+1)-1, divisible by 3 as p+1 is even", q, 3, 0);
      add(K::Composite, S::CatalanNoSolution, "2^(p+1)-1 is not prime", {q});
      expect(!is_prime(q), "2^(p+1)-1 prime");
      break;
    }
    case A::ArLemma8:
    case A::UnitaryLemma8:
      t_parts_below(3, 3 * pu_, "rank >= 7 gives q^(r(r+1)/2) > 2^(3(p+1)) in odd characteristic while it is <= |G|_t");
      break;
    case A::ArFiveOddMod4:
      identity("q odd: q(q+1)(q^2+1) = 0 mod 4", range(3, 99, 2), [&](const BigInt& q) {
        return q * (q + 1) * (q * q + 1) % 4 == 0;
      });
      residue(S::ModContradiction, "2^p-2 mod 4", r_, 4, 2);
      break;
    case A::ArThreeSubcases: {
      add(K::Equal, S::ModContradiction, "2^p-2 = 2AB with A = 2^((p-1)/2)-1, B = A+2", {2 * half_a * half_b, r_});
      expect(2 * half_a * half_b == r_, "2^p-2 = 2AB");
      less(S::ModContradiction, "q | A: q(q+1) <= A(A+1) < 2AB", half_a * (half_a + 1), 2 * half_a * half_b);
      less(S::ModContradiction, "q | B with k >= 2: 2(2^((p+1)/2)-2)-1 <= q < B is impossible", half_b,
           2 * (pow2((pu_ + 1) / 2) - 2) - 1);
      if (p_ == 5) {
        add(K::Equal, S::ModContradiction, "q | B with k = 1: q = B = 5 and q+1 = 2A, so p = q = 5", {half_b + 1, 2 * half_a});
        note(S::ModContradiction, "the q = 5 solution is refuted by its order below");
      } else {
        add(K::Unequal, S::ModContradiction, "q | B with k = 1 needs B+1 = 2A, which only p = 5 satisfies",
            {half_b + 1, 2 * half_a});
        expect(half_b + 1 != 2 * half_a, "k = 1 branch");
      }
      break;
    }
    case A::ArMinusFiveMod4:
      identity("q odd: q(q+1)(q^2+1) = 0 mod 4", range(3, 99, 2), [&](const BigInt& q) {
        return q * (q + 1) * (q * q + 1) % 4 == 0;
      });
      residue(S::ModContradiction, "(5, q-1) = 1: 2^p-2 mod 4", r_, 4, 2);
      residue(S::ModContradiction, "(5, q-1) = 5: 5*2^p-6 mod 4", 5 * pow2(pu_) - 6, 4, 2);
      break;
    case A::ArMinusFiveEven:
    {
      const BigInt q = 2;
      const BigInt lhs = (q - 1) * (q * q * q + 2 * q * q + 3 * q + 4);
      add(K::Equal, S::ModContradiction, "q = 2: (q-1)(q^3+2q^2+3q+4) = 26", {lhs, BigInt(26)});
      expect(lhs == 26, "value at q = 2");
    }
      not_divides(S::ModContradiction, "26 = 10(2^(p-1)-1) needs 5 | 13", 5, 13);
      break;
    case A::ArMinusThreeTwoSylow: {
      sylow_two("(3, q-1) = 3, |S_2| = 2^(p^2-4)", {4});
      const unsigned e = pu_ * pu_ - 5;
      if ((pow2(e) - 1) % m_ != 0) {
        sylow_two("(3, q-1) = 3, |S_2| = 2^(p^2-5)", {5});
      } else {
        expect(p_ == 5, "2^p-1 | 2^(p^2-5)-1 away from p = 5");
        const BigInt target = 4 * (3 * pow2(pu_ - 2) - 1);
        const BigInt x = integer_root(target, 2);
        const BigInt lo = x * (x + 1) <= target ? x : x - 1;
        add(K::Bracket, S::ModContradiction,
            "p = 5 leaves q(q+1) = 4(3*2^(p-2)-1) = " + str(target) + ", between consecutive products",
            {lo * (lo + 1), target, (lo + 1) * (lo + 2)});
        expect(lo * (lo + 1) < target && target < (lo + 1) * (lo + 2), "q(q+1) bracket");
      }
      break;
    }
    case A::UnitaryMinusFiveMod4:
      identity("q odd: q(q-1)(q^2+1) = 0 mod 4", range(3, 99, 2), [&](const BigInt& q) {
        return q * (q - 1) * (q * q + 1) % 4 == 0;
      });
      residue(S::ModContradiction, "(5, q+1) = 1: 2^p-2 mod 4", r_, 4, 2);
      residue(S::ModContradiction, "(5, q+1) = 5: 5(2^p-1)-1 mod 4", 5 * m_ - 1, 4, 2);
      break;
    case A::UnitaryMinusThreeTwoSylow:
      sylow_two("(3, q+1) = 3, |S_2| = 2^(p^2-4)", {4});
      break;
  }
  return out_;
}

}  // namespace

ArgumentCheck check_mod_contradiction(ArgumentId id, u64 p) {
  if (!mersenne_check(p) || p < 5)
    fail(ErrorCode::InvalidExponent, "p = " + std::to_string(p) + " does not give a Mersenne prime 2^p-1 > 7");
  return Replay(p).run(id);
}

}  // namespace gk
