// seqspectra <field-info|vdist|family|code-weights|verify> --p P --n N --k K
//   [--format json|csv] [--threads T] [--cap C] [--out PATH]
// Exit codes: 0 ok, 2 invalid input, 3 verification mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "seqspectra/report.hpp"
#include "seqspectra/seqspectra.hpp"

namespace {

using namespace seqspectra;

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kMismatch = 3;

struct RunConfig {
  std::uint64_t p = 0, n = 0, k = 0;
  std::string format = "json";
  unsigned threads = default_threads();
  std::uint64_t cap = kDefaultTableCap;
  std::string out;
  std::optional<std::uint64_t> d;
  std::string scope = "all-shifts";
  std::uint64_t seed = 1;
  std::uint64_t samples = 10000;
};

int emit(const RunConfig& cfg, const report::Rendered& r) {
  if (cfg.out.empty()) {
    std::cout << r.text << std::flush;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << cfg.out << "\n";
      return kInvalid;
    }
    f << r.text;
  }
  return r.ok ? kOk : kMismatch;
}

FieldCtx make_ctx(const RunConfig& cfg) {
  FieldParams fp = FieldParams::make(cfg.p, cfg.n, cfg.k, cfg.cap);
  if (cfg.d) {
    fp.d = *cfg.d;
    fp.validate();
  }
  return FieldCtx(fp);
}

int run(const std::string& cmd, const RunConfig& cfg) {
  const auto fmt = cfg.format == "csv" ? report::Format::Csv : report::Format::Json;
  std::optional<Scope> scope;
  if (cmd == "family") {
    scope = parse_scope(cfg.scope);
    if (!scope) {
      std::cerr << "error: unknown scope '" << cfg.scope
                << "' (expected all-shifts, distinct-pairs or out-of-phase-auto)\n";
      return kInvalid;
    }
  }
  const FieldCtx ctx = make_ctx(cfg);

  if (cmd == "field-info") return emit(cfg, report::field_info(ctx, fmt));
  if (cmd == "vdist") {
    const auto brute = value_distribution_bruteforce(ctx, cfg.threads);
    return emit(cfg, report::vdist(ctx, brute, closed_form_distribution(ctx), fmt));
  }
  if (cmd == "family") return emit(cfg, report::family(ctx, family_spectrum(ctx, *scope, cfg.threads), fmt));
  if (cmd == "code-weights") {
    const auto enumerated = weights_from_values(ctx, value_distribution_bruteforce(ctx, cfg.threads));
    return emit(cfg, report::code_weights(ctx, enumerated, closed_form_weight_distribution(ctx), code_dimension(ctx), fmt));
  }
  VerifyOptions opt;
  opt.threads = cfg.threads;
  opt.seed = cfg.seed;
  opt.samples = cfg.samples;
  return emit(cfg, report::verify(ctx, run_verify(ctx, opt), fmt));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact exponential sums, correlation spectra and code weights for the decimation d"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--p", cfg.p, "characteristic, prime with p = 3 mod 4")->required();
  app.add_option("--n", cfg.n, "extension degree, odd")->required();
  app.add_option("--k", cfg.k, "subfield degree, divides n")->required();
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", cfg.threads, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
  app.add_option("--cap", cfg.cap, "largest admissible p^n");
  app.add_option("--out", cfg.out, "write output here instead of stdout");
  app.add_option("--d", cfg.d, "expected decimation; rejected unless it matches");

  app.add_subcommand("field-info", "field parameters and decimation checks");
  app.add_subcommand("vdist", "value distribution of S(a,b): brute force vs closed form");
  auto* family = app.add_subcommand("family", "correlation spectrum of the sequence family");
  family->add_option("--scope", cfg.scope, "all-shifts, distinct-pairs or out-of-phase-auto");
  app.add_subcommand("code-weights", "weight distribution of the cyclic code");
  auto* verify = app.add_subcommand("verify", "run the full property suite");
  verify->add_option("--seed", cfg.seed, "seed for sampled checks");
  verify->add_option("--samples", cfg.samples, "pairs per sampled check")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), cfg);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    const bool bad_input = err.code() == Errc::InvalidParams || err.code() == Errc::CapExceeded;
    return bad_input ? kInvalid : kMismatch;
  }
}
