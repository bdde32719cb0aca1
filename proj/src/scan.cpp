#include "steppot/scan.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <memory>
#include <ostream>

#include "steppot/bounds.hpp"
#include "steppot/fd_oracle.hpp"
#include "steppot/operator_model.hpp"
#include "steppot/pseudomode.hpp"

namespace steppot {

Quantity parse_quantity(const std::string& name) {
  if (name == "bracket_lower") return Quantity::bracket_lower;
  if (name == "bracket_upper") return Quantity::bracket_upper;
  if (name == "asymptotic") return Quantity::asymptotic;
  if (name == "quotient_exact") return Quantity::quotient_exact;
  if (name == "oracle") return Quantity::oracle;
  if (name == "omega_membership") return Quantity::omega_membership;
  if (name == "spectrum_distance") return Quantity::spectrum_distance;
  throw ConfigError("unknown quantity: " + name);
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::bracket_lower: return "bracket_lower";
    case Quantity::bracket_upper: return "bracket_upper";
    case Quantity::asymptotic: return "asymptotic";
    case Quantity::quotient_exact: return "quotient_exact";
    case Quantity::oracle: return "oracle";
    case Quantity::omega_membership: return "omega_membership";
    default: return "spectrum_distance";
  }
}

namespace {

void validate(const ScanConfig& c) {
  if (c.nx < 2 || c.ny < 2) throw ConfigError("resolution: nx and ny must be >= 2");
  if (!(c.re_min < c.re_max)) throw ConfigError("window: re_min must be < re_max");
  if (!(c.im_min < c.im_max)) throw ConfigError("window: im_min must be < im_max");
  for (double e : c.epsilons)
    if (!(e > 0.0)) throw ConfigError("eps: level-curve values must be positive");
  if (c.quantity == Quantity::oracle) {
    if (c.oracle_half_width <= 0.0 || c.oracle_h <= 0.0 || c.oracle_h > c.oracle_half_width)
      throw ConfigError("oracle: need 0 < h <= L");
    if (c.oracle_max_iterations < 1) throw ConfigError("oracle: max iterations must be >= 1");
  }
}

struct NodeEvaluator {
  const ScanConfig& config;
  std::unique_ptr<Discretization> disc;  // shared, immutable after build

  explicit NodeEvaluator(const ScanConfig& c) : config(c) {
    if (c.quantity == Quantity::oracle)
      disc = std::make_unique<Discretization>(build_discretization(
          c.potential, c.interaction, c.oracle_half_width, c.oracle_h));
  }

  ScanRecord eval(double re, double im) const {
    const SpectralPoint z{re, im};
    try {
      switch (config.quantity) {
        case Quantity::bracket_lower:
        case Quantity::bracket_upper: {
          const NormBracket b = resolvent_norm_bracket(config.potential, config.interaction, z);
          const double v = config.quantity == Quantity::bracket_lower ? b.lower : b.upper;
          return {re, im, v, regime_name(b.regime)};
        }
        case Quantity::asymptotic:
          return {re, im, resolvent_norm_asymptotic(config.potential, config.interaction, z),
                  "asymptotic"};
        case Quantity::quotient_exact:
          return {re, im, pseudomode_quotient_exact(config.potential, config.interaction, z),
                  "exact"};
        case Quantity::oracle:
          return {re, im,
                  oracle_resolvent_norm(*disc, z, config.oracle_max_iterations,
                                        config.oracle_rel_tol),
                  "oracle"};
        case Quantity::omega_membership:
          return {re, im,
                  in_omega(config.potential, Interaction{cplx{re, im}}) ? 1.0 : 0.0, "omega"};
        default:
          return {re, im, spectrum_distance(config.potential, z), "distance"};
      }
    } catch (const SpectrumPointError&) {
      return {re, im, std::numeric_limits<double>::quiet_NaN(), "spectrum_point"};
    } catch (const EigenvalueHitError&) {
      return {re, im, std::numeric_limits<double>::quiet_NaN(), "eigenvalue_hit"};
    } catch (const DeltaOutsideStripError&) {
      return {re, im, std::numeric_limits<double>::quiet_NaN(), "outside_strip"};
    } catch (const DegenerateImVError&) {
      return {re, im, std::numeric_limits<double>::quiet_NaN(), "degenerate_im_v"};
    } catch (const NoConvergenceError&) {
      return {re, im, std::numeric_limits<double>::quiet_NaN(), "no_convergence"};
    } catch (const Error&) {
      return {re, im, std::numeric_limits<double>::quiet_NaN(), "undefined"};
    }
  }
};

template <bool Parallel>
std::vector<ScanRecord> run_scan(const ScanConfig& config) {
  validate(config);
  const NodeEvaluator evaluator(config);
  const int nx = config.nx, ny = config.ny;
  const double dre = (config.re_max - config.re_min) / (nx - 1);
  const double dim = (config.im_max - config.im_min) / (ny - 1);
  std::vector<ScanRecord> records(static_cast<std::size_t>(nx) * ny);
  const auto total = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const int iy = static_cast<int>(idx) / nx;
    const int ix = static_cast<int>(idx) % nx;
    records[static_cast<std::size_t>(idx)] =
        evaluator.eval(config.re_min + ix * dre, config.im_min + iy * dim);
  }
  return records;
}

}  // namespace

std::vector<ScanRecord> scan(const ScanConfig& config) { return run_scan<true>(config); }
std::vector<ScanRecord> scan_serial(const ScanConfig& config) { return run_scan<false>(config); }

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void emit(const std::vector<ScanRecord>& records, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv) {
    out << "re,im,value,regime\n";
    for (const ScanRecord& r : records) {
      out << format_double(r.re) << ',' << format_double(r.im) << ',';
      if (!std::isnan(r.value)) out << format_double(r.value);
      out << ',' << r.regime << '\n';
    }
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      const ScanRecord& r = records[i];
      out << "  {\"re\": " << format_double(r.re) << ", \"im\": " << format_double(r.im)
          << ", \"value\": " << (std::isnan(r.value) ? std::string("null") : format_double(r.value))
          << ", \"regime\": \"" << r.regime << "\"}";
      if (i + 1 < records.size()) out << ',';
      out << '\n';
    }
    out << "]\n";
  }
  if (!out) throw IoError("emit: write failed");
}

void emit_to_file(const std::vector<ScanRecord>& records, OutputFormat format,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("emit: cannot open " + path);
  emit(records, format, out);
}

cplx parse_complex(const std::string& text) {
  const char* s = text.c_str();
  char* end = nullptr;
  const double first = std::strtod(s, &end);
  if (end == s) throw ConfigError("bad complex literal: " + text);
  if (*end == '\0') return {first, 0.0};  // bare real
  if (*end != '+' && *end != '-') throw ConfigError("bad complex literal: " + text);
  const char* imag_begin = end;
  const double second = std::strtod(imag_begin, &end);
  if (end == imag_begin || *end != 'i' || *(end + 1) != '\0')
    throw ConfigError("bad complex literal: " + text);
  return {first, second};
}

}  // namespace steppot
