#include <algorithm>
#include <cctype>
#include <limits>

#include "gk/exact_arith.hpp"
#include "gk/factorization.hpp"

namespace gk {

namespace {

const char* const kDot = "\xC2\xB7";  // U+00B7

void sort_and_merge(std::vector<Factorization::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
  std::vector<Factorization::Term> merged;
  for (auto& t : terms) {
    if (t.exponent == 0) continue;
    if (!merged.empty() && merged.back().prime == t.prime)
      merged.back().exponent += t.exponent;
    else
      merged.push_back(std::move(t));
  }
  terms = std::move(merged);
}

}  // namespace

Factorization Factorization::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].exponent == 0) fail(ErrorCode::InvalidArgument, "factorization: zero exponent");
    if (!is_prime(terms[i].prime))
      fail(ErrorCode::InvalidArgument, "factorization: " + terms[i].prime.str() + " is not prime");
    if (i > 0 && !(terms[i - 1].prime < terms[i].prime))
      fail(ErrorCode::InvalidArgument, "factorization: primes must be strictly ascending");
  }
  Factorization f;
  f.terms_ = std::move(terms);
  return f;
}

Factorization Factorization::prime_power(const BigInt& prime, u64 exponent) {
  if (exponent == 0) return {};
  return from_terms({{prime, exponent}});
}

Factorization Factorization::collect(std::vector<Term> terms) {
  sort_and_merge(terms);
  Factorization f;
  f.terms_ = std::move(terms);
  return f;
}

Factorization Factorization::parse(std::string_view text) {
  std::string s(text);
  for (std::size_t pos; (pos = s.find(kDot)) != std::string::npos;) s.replace(pos, 2, "*");
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s == "1") return {};
  if (s.empty()) fail(ErrorCode::Parse, "factorization: empty text");
  std::vector<Term> terms;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find('*', start), s.size());
    const std::string item = s.substr(start, end - start);
    const std::size_t caret = item.find('^');
    Term t;
    t.prime = parse_natural(item.substr(0, caret));
    if (caret == std::string::npos) {
      t.exponent = 1;
    } else {
      const BigInt e = parse_natural(item.substr(caret + 1));
      if (e < 1 || e > BigInt(std::numeric_limits<u64>::max()))
        fail(ErrorCode::Parse, "factorization: bad exponent in '" + item + "'");
      t.exponent = static_cast<u64>(e);
    }
    terms.push_back(std::move(t));
    start = end + 1;
  }
  return from_terms(std::move(terms));
}

std::vector<BigInt> Factorization::primes() const {
  std::vector<BigInt> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.prime);
  return out;
}

u64 Factorization::exponent_of(const BigInt& prime) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), prime,
                             [](const Term& t, const BigInt& p) { return t.prime < p; });
  return it != terms_.end() && it->prime == prime ? it->exponent : 0;
}

BigInt Factorization::part(const BigInt& prime) const {
  return pow(prime, static_cast<unsigned>(exponent_of(prime)));
}

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& t : terms_) v *= pow(t.prime, static_cast<unsigned>(t.exponent));
  return v;
}

bool Factorization::divides(const Factorization& other) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return other.exponent_of(t.prime) >= t.exponent; });
}

bool Factorization::coprime_to(const Factorization& other) const {
  return std::none_of(terms_.begin(), terms_.end(),
                      [&](const Term& t) { return other.exponent_of(t.prime) > 0; });
}

Factorization Factorization::quotient(const Factorization& divisor) const {
  if (!divisor.divides(*this))
    fail(ErrorCode::Domain, divisor.to_string() + " does not divide " + to_string());
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const u64 e = t.exponent - divisor.exponent_of(t.prime);
    if (e > 0) out.push_back({t.prime, e});
  }
  Factorization f;
  f.terms_ = std::move(out);
  return f;
}

Factorization Factorization::restricted_to(const std::vector<BigInt>& primes) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (std::find(primes.begin(), primes.end(), t.prime) != primes.end()) out.push_back(t);
  Factorization f;
  f.terms_ = std::move(out);
  return f;
}

Factorization& Factorization::operator*=(const Factorization& other) {
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  sort_and_merge(all);
  terms_ = std::move(all);
  return *this;
}

std::string Factorization::to_string() const {
  if (terms_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += kDot;
    out += terms_[i].prime.str();
    if (terms_[i].exponent > 1) out += "^" + std::to_string(terms_[i].exponent);
  }
  return out;
}

}  // namespace gk
