#include "esum/verify.hpp"

#include <sstream>

#include "esum/error.hpp"

namespace esum {

namespace {

std::string desc_euler(const EulerSumSpec& s) {
  std::ostringstream o;
  o << "euler p=" << s.p << " order=" << s.order << " r=" << s.r;
  return o.str();
}

std::string desc_binom(const BinomSeriesSpec& s) {
  std::ostringstream o;
  o << "binom p=" << s.p << " q=" << s.q << " m=" << s.m << " l=" << s.l;
  return o.str();
}

VerifyReport assemble(std::string desc, const ZExpr& symbolic, const DirectSum& direct,
                      mpfr_prec_t prec, const BigFloat& tolerance) {
  EvalResult sym = eval_zexpr_bounded(symbolic, prec);
  VerifyReport rep;
  rep.spec_desc = std::move(desc);
  rep.symbolic = symbolic;
  rep.symbolic_numeric = sym.value;
  rep.direct_sum = direct.value;
  rep.tail_bound = direct.tail_bound + sym.error_bound;
  rep.abs_diff = (sym.value - direct.value).abs();
  rep.passed = rep.abs_diff <= tolerance + rep.tail_bound;
  rep.terms_used = direct.terms;
  return rep;
}

VerifyReport error_report(std::string desc, const std::string& why) {
  VerifyReport rep;
  rep.spec_desc = std::move(desc);
  rep.passed = false;
  rep.error = why;
  return rep;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

VerifyReport verify_euler(const EulerSumSpec& spec, long N, mpfr_prec_t prec,
                          const BigFloat& tolerance) {
  try {
    ZExpr symbolic = hyper_reduce(spec);
    DirectSum direct = euler_sum_direct(spec, N, prec);
    return assemble(desc_euler(spec), symbolic, direct, prec, tolerance);
  } catch (const PreconditionError& e) {
    return error_report(desc_euler(spec), e.what());
  }
}

VerifyReport verify_binom(const BinomSeriesSpec& spec, long N, mpfr_prec_t prec,
                          const BigFloat& tolerance) {
  try {
    ZExpr symbolic = binom_series(spec);
    DirectSum direct = binom_direct_numeric(spec, N, prec);
    return assemble(desc_binom(spec), symbolic, direct, prec, tolerance);
  } catch (const PreconditionError& e) {
    return error_report(desc_binom(spec), e.what());
  }
}

std::string VerifyReport::to_json() const {
  std::ostringstream o;
  o << "{\"spec\":\"" << json_escape(spec_desc) << "\"";
  if (error) {
    o << ",\"error\":\"" << json_escape(*error) << "\",\"passed\":false}";
    return o.str();
  }
  size_t digits = static_cast<size_t>(static_cast<double>(symbolic_numeric.precision()) * 0.30103) + 1;
  o << ",\"symbolic\":" << symbolic->render_json();
  o << ",\"numeric\":\"" << symbolic_numeric.str(digits) << "\"";
  o << ",\"direct\":\"" << direct_sum.str(digits) << "\"";
  o << ",\"tail_bound\":\"" << tail_bound.str() << "\"";
  o << ",\"abs_diff\":\"" << abs_diff.str() << "\"";
  o << ",\"passed\":" << (passed ? "true" : "false");
  o << ",\"terms\":" << terms_used << "}";
  return o.str();
}

}  // namespace esum
