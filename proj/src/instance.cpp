#include "pbm/instance.hpp"

#include <string>

namespace pbm {

namespace {

std::string at(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_shape(const ExtMatrix& x, const char* name, int m, int n) {
  if (!x.same_shape(m, n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(name) + " is " + std::to_string(x.rows()) + "x" +
                    std::to_string(x.cols()) + ", expected " + std::to_string(m) + "x" +
                    std::to_string(n));
  }
}

void check_lower(const ExtMatrix& x, const char* name) {
  for (int i = 1; i <= x.rows(); ++i) {
    for (int j = 1; j <= x.cols(); ++j) {
      if (x(i, j).is_pos_inf()) {
        throw Error(ErrorCode::kIllegalInfinity,
                    std::string("lower bound ") + name + " is +inf at " + at(i, j));
      }
    }
  }
}

void check_upper(const ExtMatrix& x, const char* name) {
  for (int i = 1; i <= x.rows(); ++i) {
    for (int j = 1; j <= x.cols(); ++j) {
      if (x(i, j).is_neg_inf()) {
        throw Error(ErrorCode::kIllegalInfinity,
                    std::string("upper bound ") + name + " is -inf at " + at(i, j));
      }
    }
  }
}

void check_order(const ExtMatrix& lo, const ExtMatrix& hi, const char* lo_name,
                 const char* hi_name) {
  for (int i = 1; i <= lo.rows(); ++i) {
    for (int j = 1; j <= lo.cols(); ++j) {
      if (lo(i, j) > hi(i, j)) {
        throw Error(ErrorCode::kBoundOrderViolation,
                    std::string(lo_name) + " > " + hi_name + " at " + at(i, j));
      }
    }
  }
}

}  // namespace

PbmInstance make_pbm(ExtMatrix phi1, ExtMatrix gamma1, ExtMatrix phi2, ExtMatrix gamma2) {
  PbmInstance inst;
  inst.m = phi1.rows();
  inst.n = phi1.cols();
  inst.phi1 = std::move(phi1);
  inst.gamma1 = std::move(gamma1);
  inst.phi2 = std::move(phi2);
  inst.gamma2 = std::move(gamma2);
  inst.f = ExtMatrix(inst.m, inst.n, ExtInt::neg_inf());
  inst.g = ExtMatrix(inst.m, inst.n, ExtInt::pos_inf());
  return inst;
}

PbmInstance validate_instance(const PbmInstance& raw) {
  if (raw.m <= 0 || raw.n <= 0) {
    throw Error(ErrorCode::kDimensionMismatch, "dimensions must be positive");
  }
  check_shape(raw.phi1, "phi1", raw.m, raw.n);
  check_shape(raw.gamma1, "gamma1", raw.m, raw.n);
  check_shape(raw.phi2, "phi2", raw.m, raw.n);
  check_shape(raw.gamma2, "gamma2", raw.m, raw.n);
  check_shape(raw.f, "f", raw.m, raw.n);
  check_shape(raw.g, "g", raw.m, raw.n);

  check_lower(raw.phi1, "phi1");
  check_lower(raw.phi2, "phi2");
  check_lower(raw.f, "f");
  check_upper(raw.gamma1, "gamma1");
  check_upper(raw.gamma2, "gamma2");
  check_upper(raw.g, "g");
  if (raw.alpha.is_pos_inf()) throw Error(ErrorCode::kIllegalInfinity, "alpha is +inf");
  if (raw.beta.is_neg_inf()) throw Error(ErrorCode::kIllegalInfinity, "beta is -inf");

  check_order(raw.phi1, raw.gamma1, "phi1", "gamma1");
  check_order(raw.phi2, raw.gamma2, "phi2", "gamma2");
  check_order(raw.f, raw.g, "f", "g");
  if (raw.alpha > raw.beta) throw Error(ErrorCode::kBoundOrderViolation, "alpha > beta");
  return raw;
}

bool satisfies(const PbmInstance& inst, const IntMatrix& a) {
  if (!a.same_shape(inst.m, inst.n)) return false;
  long long total = 0;
  for (int i = 1; i <= inst.m; ++i) {
    long long s = 0;
    for (int j = 1; j <= inst.n; ++j) {
      ExtInt x = a(i, j);
      if (x < inst.f(i, j) || x > inst.g(i, j)) return false;
      s = checked_add(s, a(i, j));
      if (ExtInt(s) < inst.phi1(i, j) || ExtInt(s) > inst.gamma1(i, j)) return false;
    }
    total = checked_add(total, s);
  }
  for (int j = 1; j <= inst.n; ++j) {
    long long s = 0;
    for (int i = 1; i <= inst.m; ++i) {
      s = checked_add(s, a(i, j));
      if (ExtInt(s) < inst.phi2(i, j) || ExtInt(s) > inst.gamma2(i, j)) return false;
    }
  }
  return inst.alpha <= ExtInt(total) && ExtInt(total) <= inst.beta;
}

}  // namespace pbm
