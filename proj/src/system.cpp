// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/system.hpp"

#include "entangle/error.hpp"

#include <charconv>

namespace entangle {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty())
    throw ValidationError("system: expected an integer for " + std::string(what) + ", got '" +
                          std::string(s) + "'");
  return v;
}

[[noreturn]] void bad_system(std::string_view text) {
  throw ValidationError("unknown system '" + std::string(text) +
                        "'; use spin:<two_s>, local:<d1>x<d2>[x...], sym:<d>^<n> or wedge:<d>^<n>");
}

}  // namespace

std::vector<int> SystemSpec::state_dims() const {
  switch (kind) {
    case Kind::spin:
      return {two_s + 1};
    case Kind::local:
      return dims;
    case Kind::symmetric:
      return {static_cast<int>(binomial(base_dim + power - 1, power))};
    case Kind::antisymmetric:
      return {static_cast<int>(binomial(base_dim, power))};
  }
  return {};
}

SystemSpec parse_system(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) bad_system(text);
  const std::string_view family = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  SystemSpec spec;
  spec.text = std::string(text);
  if (family == "spin") {
    spec.kind = SystemSpec::Kind::spin;
    spec.two_s = parse_int(rest, "two_s");
    if (spec.two_s < 0) throw ValidationError("system: two_s must be nonnegative");
  } else if (family == "local") {
    spec.kind = SystemSpec::Kind::local;
    std::string_view r = rest;
    while (true) {
      const auto x = r.find('x');
      spec.dims.push_back(parse_int(r.substr(0, x), "factor dimension"));
      if (x == std::string_view::npos) break;
      r = r.substr(x + 1);
    }
  } else if (family == "sym" || family == "wedge") {
    spec.kind = family == "sym" ? SystemSpec::Kind::symmetric : SystemSpec::Kind::antisymmetric;
    const auto caret = rest.find('^');
    if (caret == std::string_view::npos) bad_system(text);
    spec.base_dim = parse_int(rest.substr(0, caret), "base dimension");
    spec.power = parse_int(rest.substr(caret + 1), "power");
    if (spec.base_dim < 2 || spec.power < 1)
      throw ValidationError("system: need base dimension >= 2 and power >= 1");
  } else {
    bad_system(text);
  }
  return spec;
}

OperatorBasis build_system(const SystemSpec& spec, std::size_t dimension_cap) {
  switch (spec.kind) {
    case SystemSpec::Kind::spin: {
      if (static_cast<std::size_t>(spec.two_s) + 1 > dimension_cap)
        throw ValidationError("dimension cap exceeded for spin system");
      return spin_generators(SpinLabel(spec.two_s));
    }
    case SystemSpec::Kind::local:
      return local_algebra(spec.dims, dimension_cap);
    case SystemSpec::Kind::symmetric:
    case SystemSpec::Kind::antisymmetric: {
      const std::vector<int> base_dims{spec.base_dim};
      const OperatorBasis base = local_algebra(base_dims, dimension_cap);
      const PowerKind kind = spec.kind == SystemSpec::Kind::symmetric ? PowerKind::symmetric
                                                                      : PowerKind::antisymmetric;
      OperatorBasis out = power_algebra(base, spec.power, kind, dimension_cap);
      out.label = spec.text;
      return out;
    }
  }
  bad_system(spec.text);
}

}  // namespace entangle
