#pragma once

// JSON and CSV rendering of every command's result. Counts and exact
// integers go out as decimal strings; rows are sorted by (twoA, twoB) and
// weights ascending, so output bytes depend only on the inputs.

#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "seqspectra/charsum.hpp"
#include "seqspectra/code.hpp"
#include "seqspectra/expsum.hpp"
#include "seqspectra/gf.hpp"
#include "seqspectra/seqfam.hpp"
#include "seqspectra/verify.hpp"

namespace seqspectra::report {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv };

/// Rendered output plus whether every comparison in it held.
struct Rendered {
  std::string text;
  bool ok = true;
};

inline std::string str(std::uint64_t v) { return std::to_string(v); }
inline std::string str(std::int64_t v) { return std::to_string(v); }
inline std::string str(int128_t v) { return detail::to_string(v); }

inline std::string fixed(double x) {
  if (x == 0) x = 0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

template <class Int>
json quad_json(const BasicQuadValue<Int>& v) {
  return json{{"twoA", str(static_cast<int128_t>(v.twoA))}, {"twoB", str(static_cast<int128_t>(v.twoB))}};
}

inline json params_json(const FieldParams& fp) {
  return json{{"p", fp.p}, {"n", fp.n}, {"k", fp.k}};
}

inline std::string finish_json(const json& j) { return j.dump(2) + "\n"; }

// field-info

inline Rendered field_info(const FieldCtx& ctx, Format fmt) {
  const auto& fp = ctx.params();
  const std::uint64_t g = detail::gcd(fp.d, fp.period);
  const bool congruence = detail::mulmod(fp.d % fp.period, (fp.qk + 1) % fp.period, fp.period) == 2 % fp.period;
  std::string modulus;
  json mod = json::array();
  for (std::size_t i = 0; i < ctx.modulus().size(); ++i) {
    mod.push_back(ctx.modulus()[i]);
    modulus += (i ? " " : "") + std::to_string(ctx.modulus()[i]);
  }
  Rendered out;
  out.ok = g == 2 && congruence;
  if (fmt == Format::Json) {
    json j{{"command", "field-info"}};
    j.update(params_json(fp));
    j["e"] = fp.e;
    j["q"] = str(fp.q);
    j["N"] = str(fp.period);
    j["d"] = str(fp.d);
    j["modulus"] = mod;
    j["primitiveElement"] = ctx.alpha().code;
    j["gcdDN"] = str(g);
    j["congruenceHolds"] = congruence;
    out.text = finish_json(j);
  } else {
    std::ostringstream os;
    os << "key,value\n"
       << "p," << fp.p << "\nn," << fp.n << "\nk," << fp.k << "\ne," << fp.e << "\nq," << fp.q << "\nN," << fp.period
       << "\nd," << fp.d << "\nmodulus," << modulus << "\nprimitiveElement," << ctx.alpha().code << "\ngcdDN," << g
       << "\ncongruenceHolds," << (congruence ? "true" : "false") << "\n";
    out.text = os.str();
  }
  return out;
}

// vdist

inline constexpr const char* kVdistHeader = "twoA,twoB,re,im,count_bruteforce,count_closedform,match";

inline Rendered vdist(const FieldCtx& ctx, const ValueDistribution& brute, const ValueDistribution& closed,
                      Format fmt) {
  const std::uint32_t p = ctx.p();
  std::set<QuadValue> keys;
  for (const auto& [v, c] : brute.entries) keys.insert(v);
  for (const auto& [v, c] : closed.entries) keys.insert(v);
  const MomentReport m = moment_checks(brute, ctx);

  Rendered out;
  bool rows_match = true;
  for (const auto& v : keys) rows_match = rows_match && brute.count(v) == closed.count(v);
  out.ok = rows_match && m.all_pass();

  if (fmt == Format::Json) {
    json rows = json::array();
    for (const auto& v : keys) {
      const auto z = to_complex(v, p);
      json r = quad_json(v);
      r["re"] = z.real();
      r["im"] = z.imag();
      r["countBruteforce"] = str(brute.count(v));
      r["countClosedform"] = str(closed.count(v));
      r["match"] = brute.count(v) == closed.count(v);
      rows.push_back(std::move(r));
    }
    json j{{"command", "vdist"}};
    j.update(params_json(ctx.params()));
    j["rows"] = std::move(rows);
    j["moments"] = json{
        {"count", {{"value", str(m.count)}, {"expected", str(m.expected.twoA / 2)}, {"pass", m.count_ok}}},
        {"first", {{"value", quad_json(m.first)}, {"expected", quad_json(m.expected)}, {"pass", m.first_ok}}},
        {"second", {{"value", quad_json(m.second)}, {"expected", quad_json(m.expected)}, {"pass", m.second_ok}}},
    };
    j["allMatch"] = out.ok;
    out.text = finish_json(j);
  } else {
    std::ostringstream os;
    os << kVdistHeader << "\n";
    for (const auto& v : keys) {
      const auto z = to_complex(v, p);
      os << v.twoA << "," << v.twoB << "," << fixed(z.real()) << "," << fixed(z.imag()) << "," << brute.count(v)
         << "," << closed.count(v) << "," << (brute.count(v) == closed.count(v) ? "true" : "false") << "\n";
    }
    os << "# moment count " << str(m.count) << " expected " << str(m.expected.twoA / 2) << " "
       << (m.count_ok ? "pass" : "fail") << "\n";
    os << "# moment first (" << str(m.first.twoA) << "," << str(m.first.twoB) << ")/2 expected ("
       << str(m.expected.twoA) << "," << str(m.expected.twoB) << ")/2 " << (m.first_ok ? "pass" : "fail") << "\n";
    os << "# moment second (" << str(m.second.twoA) << "," << str(m.second.twoB) << ")/2 expected ("
       << str(m.expected.twoA) << "," << str(m.expected.twoB) << ")/2 " << (m.second_ok ? "pass" : "fail") << "\n";
    out.text = os.str();
  }
  return out;
}

// family

inline constexpr const char* kFamilyHeader = "twoA,twoB,re,im,count,normTimes4";

inline Rendered family(const FieldCtx& ctx, const CorrelationSpectrum& sp, Format fmt) {
  const std::uint32_t p = ctx.p();
  Rendered out;
  out.ok = sp.within_bound();
  if (fmt == Format::Json) {
    json rows = json::array();
    for (const auto& [v, c] : sp.values.entries) {
      if (!c) continue;
      const auto z = to_complex(v, p);
      json r = quad_json(v);
      r["re"] = z.real();
      r["im"] = z.imag();
      r["count"] = str(c);
      r["normTimes4"] = str(norm_times4(v, p));
      rows.push_back(std::move(r));
    }
    json j{{"command", "family"}};
    j.update(params_json(ctx.params()));
    j["scope"] = std::string(scope_name(sp.scope));
    j["rows"] = std::move(rows);
    j["total"] = str(sp.values.total());
    j["boundSquaredTimes4"] = str(sp.bound_times4);
    j["maxObservedSquaredTimes4"] = str(sp.max_observed_times4);
    j["withinBound"] = out.ok;
    out.text = finish_json(j);
  } else {
    std::ostringstream os;
    os << kFamilyHeader << "\n";
    for (const auto& [v, c] : sp.values.entries) {
      if (!c) continue;
      const auto z = to_complex(v, p);
      os << v.twoA << "," << v.twoB << "," << fixed(z.real()) << "," << fixed(z.imag()) << "," << c << ","
         << str(norm_times4(v, p)) << "\n";
    }
    os << "# scope " << scope_name(sp.scope) << "\n"
       << "# boundSquaredTimes4 " << str(sp.bound_times4) << "\n"
       << "# maxObservedSquaredTimes4 " << str(sp.max_observed_times4) << " " << (out.ok ? "pass" : "fail") << "\n";
    out.text = os.str();
  }
  return out;
}

// code-weights

inline constexpr const char* kWeightsHeader = "weight,count_enumerated,count_closedform,match";

inline Rendered code_weights(const FieldCtx& ctx, const WeightDistribution& enumerated,
                             const WeightDistribution& closed, std::size_t dimension, Format fmt) {
  const bool dimension_ok = dimension == 2 * ctx.params().n;
  std::set<std::uint64_t> keys;
  for (const auto& [w, c] : enumerated.entries) keys.insert(w);
  for (const auto& [w, c] : closed.entries) keys.insert(w);
  const std::uint64_t q = ctx.size();
  const bool total_ok = enumerated.total() == q * q;
  Rendered out;
  out.ok = enumerated == closed && total_ok && dimension_ok;
  if (fmt == Format::Json) {
    json rows = json::array();
    for (auto w : keys)
      rows.push_back(json{{"weight", str(w)},
                          {"countEnumerated", str(enumerated.count(w))},
                          {"countClosedform", str(closed.count(w))},
                          {"match", enumerated.count(w) == closed.count(w)}});
    json j{{"command", "code-weights"}};
    j.update(params_json(ctx.params()));
    j["length"] = str(ctx.order());
    j["rows"] = std::move(rows);
    j["total"] = str(enumerated.total());
    j["totalExpected"] = str(q * q);
    j["dimension"] = str(dimension);
    j["dimensionExpected"] = str(std::uint64_t{2} * ctx.params().n);
    j["dimensionOk"] = dimension_ok;
    j["allMatch"] = out.ok;
    out.text = finish_json(j);
  } else {
    std::ostringstream os;
    os << kWeightsHeader << "\n";
    for (auto w : keys)
      os << w << "," << enumerated.count(w) << "," << closed.count(w) << ","
         << (enumerated.count(w) == closed.count(w) ? "true" : "false") << "\n";
    os << "# total " << enumerated.total() << " expected " << q * q << " " << (total_ok ? "pass" : "fail") << "\n";
    os << "# dimension " << dimension << " expected " << 2 * ctx.params().n << " " << (dimension_ok ? "pass" : "fail")
       << "\n";
    out.text = os.str();
  }
  return out;
}

// verify

inline constexpr const char* kVerifyHeader = "check,pass,exhaustive,cases,failures,detail";

inline Rendered verify(const FieldCtx& ctx, const VerifyReport& rep, Format fmt) {
  Rendered out;
  out.ok = rep.all_pass();
  if (fmt == Format::Json) {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back(json{{"name", c.name},
                            {"pass", c.pass},
                            {"exhaustive", c.exhaustive},
                            {"cases", str(c.cases)},
                            {"failures", str(c.failures)},
                            {"detail", c.detail}});
    json j{{"command", "verify"}};
    j.update(params_json(ctx.params()));
    j["checks"] = std::move(checks);
    j["allPass"] = out.ok;
    out.text = finish_json(j);
  } else {
    std::ostringstream os;
    os << kVerifyHeader << "\n";
    for (const auto& c : rep.checks)
      os << c.name << "," << (c.pass ? "true" : "false") << "," << (c.exhaustive ? "true" : "false") << ","
         << c.cases << "," << c.failures << ",\"" << c.detail << "\"\n";
    out.text = os.str();
  }
  return out;
}

}  // namespace seqspectra::report
