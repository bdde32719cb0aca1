#ifndef STEPPOT_SCAN_HPP
#define STEPPOT_SCAN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "steppot/types.hpp"

namespace steppot {

enum class Quantity {
  bracket_lower,
  bracket_upper,
  asymptotic,
  quotient_exact,
  oracle,
  omega_membership,
  spectrum_distance,
};

enum class OutputFormat { csv, json };

// Grid scan over a complex-plane window.  For omega_membership the grid point
// is the coupling alpha; for every other quantity it is the spectral point z.
struct ScanConfig {
  StepPotential potential;
  Interaction interaction;
  double re_min{0.0}, re_max{1.0};
  double im_min{0.0}, im_max{1.0};
  int nx{2}, ny{2};
  Quantity quantity{Quantity::spectrum_distance};
  std::vector<double> epsilons;  // level-curve values 1/eps, carried for consumers
  double oracle_half_width{30.0};
  double oracle_h{0.01};
  int oracle_max_iterations{500};
  double oracle_rel_tol{1e-10};
};

// One grid node.  Spectrum/eigenvalue hits (and other per-node failures)
// carry value = NaN and a diagnostic regime tag; they never abort a scan.
struct ScanRecord {
  double re;
  double im;
  double value;
  std::string regime;
};

Quantity parse_quantity(const std::string& name);
const char* quantity_name(Quantity q);

// Row-major evaluation: im varies over rows, re varies fastest.  The parallel
// and serial versions produce identical records.
std::vector<ScanRecord> scan(const ScanConfig& config);
std::vector<ScanRecord> scan_serial(const ScanConfig& config);

// CSV: header re,im,value,regime; 17 significant digits; LF line endings;
// NaN emitted as an empty value field.  JSON: array of records with the same
// field names and null for NaN.  Byte-stable for identical inputs.
void emit(const std::vector<ScanRecord>& records, OutputFormat format, std::ostream& out);
void emit_to_file(const std::vector<ScanRecord>& records, OutputFormat format,
                  const std::string& path);

// Shortest-width 17-significant-digit formatting used by all emitters.
std::string format_double(double value);

// Complex literal of the form <float><+|-><float>i (no whitespace); a bare
// <float> is accepted as purely real.
cplx parse_complex(const std::string& text);

}  // namespace steppot

#endif
