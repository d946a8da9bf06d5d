#include "symeq/sequences.hpp"

#include <mpfr.h>

#include <cmath>
#include <memory>
#include <stdexcept>

namespace symeq {

namespace {

// Appends the next term and extends S, Q and the running product.
void push_term(SequenceTable& table, const Natural& term) {
  const Ratio inv(Natural(1), term);
  if (table.values.empty()) {
    table.partial_sum_S.push_back(inv);
    table.partial_sum_Q.push_back(Ratio(0));
    table.partial_product.push_back(term);
  } else {
    const Ratio& s_prev = table.partial_sum_S.back();
    table.partial_sum_Q.push_back(table.partial_sum_Q.back() + inv * s_prev);
    table.partial_sum_S.push_back(s_prev + inv);
    table.partial_product.push_back(table.partial_product.back() * term);
  }
  table.values.push_back(term);
}

Natural next_by_definition(const SequenceTable& t) {
  const Ratio denom = Ratio(1) - t.partial_sum_Q.back();
  if (sgn(denom) <= 0) throw std::logic_error("v_sequence: Q_n >= 1");
  const Ratio next = Ratio(1) + t.partial_sum_S.back() / denom;
  if (next.get_den() != 1) throw std::logic_error("v_sequence: definition produced a non-integer");
  return next.get_num();
}

Natural next_rec1(const SequenceTable& t) {
  const std::size_t n = t.size();
  const Natural& a = t.values[n - 1];
  const Natural& b = t.values[n - 2];
  return a * a + a * b + b * b - b * b * b - a - b + 1;
}

Natural next_rec2(const SequenceTable& t) {
  const std::size_t n = t.size();
  const Natural& a = t.values[n - 1];
  return a * a - a + 1 + t.partial_product[n - 2];
}

class MpfrValue {
 public:
  explicit MpfrValue(unsigned long bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// a^(1/2^n) with every step rounded in direction rnd.
void root_power_of_two(MpfrValue& out, const Natural& a, std::size_t n, mpfr_rnd_t rnd) {
  mpfr_set_z(out.get(), a.get_mpz_t(), rnd);
  mpfr_log(out.get(), out.get(), rnd);
  mpfr_div_2ui(out.get(), out.get(), n, rnd);
  mpfr_exp(out.get(), out.get(), rnd);
}

std::string render(MpfrValue& v, unsigned digits, mpfr_rnd_t rnd) {
  const char* fmt = rnd == MPFR_RNDU ? "%.*RUf" : rnd == MPFR_RNDD ? "%.*RDf" : "%.*RNf";
  const int len = mpfr_snprintf(nullptr, 0, fmt, static_cast<int>(digits), v.get());
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), fmt, static_cast<int>(digits), v.get());
  out.resize(static_cast<std::size_t>(len));
  return out;
}

}  // namespace

SequenceTable sylvester_u(std::size_t count) {
  if (count < 1) throw std::invalid_argument("sylvester_u: count must be >= 1");
  SequenceTable t;
  t.kind = SequenceKind::U;
  push_term(t, 2);
  while (t.size() < count) {
    const Natural& u = t.values.back();
    push_term(t, u * u - u + 1);
  }
  return t;
}

SequenceTable v_sequence(std::size_t count, VMethod method) {
  if (count < 2) throw std::invalid_argument("v_sequence: count must be >= 2");
  SequenceTable t;
  t.kind = SequenceKind::V;
  push_term(t, 1);
  push_term(t, 2);
  // sum_i prod_{j != i} v_j over the current terms, for Rec3.
  Natural cofactor_sum = 3;
  while (t.size() < count) {
    Natural next;
    switch (method) {
      case VMethod::Definition:
        next = next_by_definition(t);
        break;
      case VMethod::Rec1:
        // Rec1 needs two earlier terms that it was derived for; v_3 comes from Rec2.
        next = t.size() < 3 ? next_rec2(t) : next_rec1(t);
        break;
      case VMethod::Rec2:
        next = next_rec2(t);
        break;
      case VMethod::Rec3:
        next = 1 + cofactor_sum;
        break;
    }
    cofactor_sum = cofactor_sum * next + t.partial_product.back();
    push_term(t, next);
  }
  return t;
}

Ratio defect_identity_check(const SequenceTable& table, std::size_t n) {
  if (table.kind != SequenceKind::V) throw std::invalid_argument("defect_identity_check: needs a v table");
  if (n < 2 || n > table.size()) throw std::invalid_argument("defect_identity_check: n out of range");
  return Ratio(1) - table.Q(n) - Ratio(Natural(1), table.product(n));
}

LimitEstimate limit_constant(SequenceKind kind, std::size_t terms, unsigned long precision_bits,
                             unsigned digits) {
  if (terms < 8) throw std::invalid_argument("limit_constant: terms must be >= 8");
  const auto needed = static_cast<unsigned long>(std::ceil(digits * 3.3219280948873623)) + 16;
  if (precision_bits < needed) {
    throw std::invalid_argument("limit_constant: " + std::to_string(precision_bits) +
                                " bits cannot carry " + std::to_string(digits) +
                                " decimals (need >= " + std::to_string(needed) + ")");
  }
  const SequenceTable table = kind == SequenceKind::U ? sylvester_u(terms) : v_sequence(terms);
  const Natural& a = table.at(terms);

  MpfrValue value(precision_bits), upper(precision_bits), lower(precision_bits), width(precision_bits);
  root_power_of_two(value, a, terms, MPFR_RNDN);
  root_power_of_two(upper, a, terms, MPFR_RNDU);
  root_power_of_two(lower, Natural(a - 1), terms, MPFR_RNDD);
  mpfr_sub(width.get(), upper.get(), lower.get(), MPFR_RNDU);

  LimitEstimate out;
  out.kind = kind;
  out.terms = terms;
  out.value = render(value, digits, MPFR_RNDN);
  out.lower = render(lower, digits, MPFR_RNDD);
  out.upper = render(upper, digits, MPFR_RNDU);
  out.error_bound = mpfr_get_d(width.get(), MPFR_RNDU);
  out.value_ld = mpfr_get_ld(value.get(), MPFR_RNDN);
  return out;
}

std::string to_string(SequenceKind kind) { return kind == SequenceKind::U ? "u" : "v"; }

std::string to_string(VMethod method) {
  switch (method) {
    case VMethod::Definition: return "definition";
    case VMethod::Rec1: return "rec1";
    case VMethod::Rec2: return "rec2";
    case VMethod::Rec3: return "rec3";
  }
  return "?";
}

}  // namespace symeq
