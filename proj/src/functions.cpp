#include "majorder/errors.hpp"
#include "majorder/monotone.hpp"

namespace majorder {

namespace {

PowerProduct nat(std::uint64_t n) { return PowerProduct::integer(static_cast<unsigned long>(n)); }

BigRat inv(std::uint64_t n) { return BigRat(1, static_cast<unsigned long>(n)); }

// ((x-1)!)^(1/(x-1)) for x >= 2.
PowerProduct root_of_prev_factorial(std::uint64_t x) {
  return PowerProduct::factorial(x - 1).pow(inv(x - 1));
}

PowerProduct evaluate(FunctionTag tag, std::uint64_t x) {
  switch (tag) {
    case FunctionTag::Factorial:
      return PowerProduct::factorial(x);
    case FunctionTag::FactOverSelfPower:
      if (x == 0) return {};
      return PowerProduct::factorial(x) / nat(x).pow(BigRat(static_cast<unsigned long>(x)));
    case FunctionTag::RatioRoot:
      if (x == 0) return {};
      if (x == 1) return PowerProduct::rational(BigRat(3, 2));
      return nat(x) / root_of_prev_factorial(x);
    case FunctionTag::RatioRootPower:
      if (x == 0) return {};
      if (x == 1) return nat(2);
      return nat(x).pow(BigRat(static_cast<unsigned long>(x + 1))) / root_of_prev_factorial(x);
    case FunctionTag::F1:
      return PowerProduct::factorial(x + 1).pow(inv(x + 2));
    case FunctionTag::F2:
      return PowerProduct::factorial(x + 2).pow(inv(x + 2));
    case FunctionTag::FibEvenIndex:
      return PowerProduct::integer(fib(2 * x));
    case FunctionTag::FibOddIndex:
      return PowerProduct::integer(fib(2 * x + 1));
    case FunctionTag::Recurrence:
    case FunctionTag::Custom:
      break;
  }
  throw Error("no fixed definition for this function tag");
}

}  // namespace

const std::vector<FunctionTag>& catalog_tags() {
  static const std::vector<FunctionTag> tags = {
      FunctionTag::Factorial, FunctionTag::FactOverSelfPower, FunctionTag::RatioRoot,
      FunctionTag::RatioRootPower, FunctionTag::F1, FunctionTag::F2,
      FunctionTag::FibEvenIndex, FunctionTag::FibOddIndex};
  return tags;
}

const char* to_string(FunctionTag tag) {
  switch (tag) {
    case FunctionTag::Factorial: return "factorial";
    case FunctionTag::FactOverSelfPower: return "fact-over-self-power";
    case FunctionTag::RatioRoot: return "ratio-root";
    case FunctionTag::RatioRootPower: return "ratio-root-power";
    case FunctionTag::F1: return "f1";
    case FunctionTag::F2: return "f2";
    case FunctionTag::FibEvenIndex: return "fib-even";
    case FunctionTag::FibOddIndex: return "fib-odd";
    case FunctionTag::Recurrence: return "recurrence";
    case FunctionTag::Custom: return "custom";
  }
  return "?";
}

BuiltinF BuiltinF::of(FunctionTag tag) {
  if (tag == FunctionTag::Recurrence || tag == FunctionTag::Custom) {
    throw Error("use BuiltinF::recurrence or BuiltinF::custom for this tag");
  }
  return BuiltinF(tag, to_string(tag), [tag](std::uint64_t x) { return evaluate(tag, x); });
}

BuiltinF BuiltinF::recurrence(const RecurrenceSpec& spec) {
  recurrence_terms(spec, 1);  // validates the hypotheses
  BuiltinF f(FunctionTag::Recurrence, "recurrence(" + spec.to_string() + ")",
             [spec](std::uint64_t x) { return PowerProduct::integer(recurrence_terms(spec, x)[x]); });
  f.spec_ = spec;
  return f;
}

BuiltinF BuiltinF::custom(std::string name, Evaluator eval) {
  return BuiltinF(FunctionTag::Custom, std::move(name), std::move(eval));
}

BuiltinF BuiltinF::parse(const std::string& name) {
  for (FunctionTag tag : catalog_tags()) {
    if (name == to_string(tag)) return of(tag);
  }
  throw Error("unknown function '" + name + "'");
}

PowerProduct BuiltinF::operator()(std::uint64_t x) const { return eval_(x); }

std::vector<PowerProduct> BuiltinF::table(std::uint64_t x_max) const {
  std::vector<PowerProduct> out;
  out.reserve(x_max + 1);
  if (spec_) {
    for (const auto& t : recurrence_terms(*spec_, x_max)) {
      if (t == 0) throw PreconditionUnmet("recurrence term is 0; values must be positive");
      out.push_back(PowerProduct::integer(t));
    }
    return out;
  }
  for (std::uint64_t x = 0; x <= x_max; ++x) out.push_back(eval_(x));
  return out;
}

}  // namespace majorder
