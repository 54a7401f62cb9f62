#include "loewner_lab/params.hpp"

#include <cmath>

#include "loewner_lab/errors.hpp"

namespace loewner_lab {

namespace {

void require_ordered(const ParamValue& s, const ParamValue& t) {
  if (!std::isfinite(s.value()) || !std::isfinite(t.value())) {
    throw BadParameters("chain parameters must be finite");
  }
  const ParamValue zero(0);
  if (!(compare(s, zero) > 0 && s.value() > 0.0)) throw BadParameters("chain parameters need s > 0");
  if (!(t.value() > s.value()) || compare(t, s) <= 0) throw BadParameters("chain parameters need t > s");
}

}  // namespace

ChainParams::ChainParams(ParamValue s, ParamValue t, std::variant<GrandN, PVersion> v)
    : s_(s), t_(t), variant_(std::move(v)) {}

ChainParams ChainParams::grand(ParamValue s, ParamValue t, int n) {
  require_ordered(s, t);
  if (n < 2) throw BadParameters("GrandN chain needs n >= 2");
  return ChainParams(s, t, GrandN{n});
}

ChainParams ChainParams::p_version(ParamValue s, ParamValue t, ParamValue p) {
  require_ordered(s, t);
  if (!std::isfinite(p.value()) || !(p.value() > 0.0)) {
    throw BadParameters("PVersion chain needs p > 0");
  }
  return ChainParams(s, t, PVersion{p});
}

int ChainParams::repetitions() const noexcept {
  if (const auto* g = std::get_if<GrandN>(&variant_)) return g->n;
  return 2;
}

ParamValue ChainParams::denominator() const {
  if (const auto* g = std::get_if<GrandN>(&variant_)) return ParamValue(g->n);
  return std::get<PVersion>(variant_).p;
}

ParamValue ChainParams::outer_denominator() const {
  if (const auto* g = std::get_if<GrandN>(&variant_)) {
    return ParamValue(g->n + 2) * s_ + ParamValue(g->n - 2) * t_;
  }
  return ParamValue(4) * s_;
}

ParamValue ChainParams::total_exponent() const { return outer_denominator() / denominator(); }

ParamValue ChainParams::b_exponent() const {
  const int m = repetitions();
  return (ParamValue(2) * s_ + ParamValue(2 * (m - 1)) * t_) / denominator();
}

ParamValue ChainParams::a_exponent() const {
  return ParamValue(repetitions()) * (s_ - t_) / denominator();
}

const char* ChainParams::variant_name() const noexcept { return is_grand() ? "n" : "p"; }

std::string ChainParams::variant_value() const {
  if (const auto* g = std::get_if<GrandN>(&variant_)) return std::to_string(g->n);
  return std::get<PVersion>(variant_).p.to_string();
}

std::string ChainParams::describe() const {
  return "s=" + s_.to_string() + " t=" + t_.to_string() + " " + variant_name() + "=" +
         variant_value();
}

double exponent_total(const ChainParams& params) { return params.total_exponent().value(); }

}  // namespace loewner_lab
