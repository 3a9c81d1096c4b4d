#include "povmqm/wavefunction.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "povmqm/io.hpp"
#include "povmqm/simd/ops.hpp"

namespace povmqm {

WaveState::WaveState(MomentumGrid grid, std::vector<cplx> amplitudes, double time)
    : grid_(grid), amp_(std::move(amplitudes)), time_(time) {
  if (amp_.size() != grid_.size())
    throw ValidationError("amplitude buffer does not match grid size");
}

double WaveState::norm_squared() const {
  const cplx s = simd::cdotc(amp_.data(), amp_.data(), amp_.size());
  double w = 1.0;
  for (int a = 0; a < grid_.dim(); ++a) w *= grid_.dp();
  return s.real() * w;
}

void WaveState::normalize() {
  const double n2 = norm_squared();
  if (n2 <= 0) throw ValidationError("cannot normalize a zero state");
  simd::cscale_inplace(amp_.data(), 1.0 / std::sqrt(n2), amp_.size());
}

double WaveState::boundary_decay_ratio() const {
  const std::size_t n = grid_.points_per_axis();
  double max_all = 0.0, max_shell = 0.0;
  for (std::size_t m = 0; m < amp_.size(); ++m) {
    const double a = std::abs(amp_[m]);
    max_all = std::max(max_all, a);
    for (int ax = 0; ax < grid_.dim(); ++ax) {
      const std::size_t j = grid_.axis_index(m, ax);
      if (j == 0 || j == n - 1) {
        max_shell = std::max(max_shell, a);
        break;
      }
    }
  }
  return max_all > 0 ? max_shell / max_all : 0.0;
}

WaveState make_gaussian_state(const MomentumGrid& grid, std::span<const double> x0,
                              std::span<const double> p0, double sigma_x) {
  const int d = grid.dim();
  if (x0.size() != std::size_t(d) || p0.size() != std::size_t(d))
    throw ValidationError("x0/p0 dimension mismatch");
  if (sigma_x <= 0) throw ValidationError("sigma_x must be positive");
  if (grid.dx() > sigma_x / 3.0)
    throw ResolutionError("position grid too coarse for sigma_x (need dx <= sigma_x/3)");
  const double hbar = grid.hbar();
  const double sigma_p = hbar / (2.0 * sigma_x);
  if (sigma_p > grid.momentum_cutoff() / 3.0)
    throw ResolutionError(
        "momentum cutoff too small for sigma_x (need hbar/(2 sigma_x) <= cutoff/3)");

  std::vector<cplx> amp(grid.size());
  for (std::size_t m = 0; m < amp.size(); ++m) {
    double arg = 0.0, phase = 0.0;
    for (int a = 0; a < d; ++a) {
      const double p = grid.momentum(grid.axis_index(m, a));
      const double dpp = p - p0[a];
      arg += dpp * dpp;
      phase += p * x0[a];
    }
    const double mag = std::exp(-sigma_x * sigma_x * arg / (hbar * hbar));
    amp[m] = std::polar(mag, -phase / hbar);
  }
  WaveState s(grid, std::move(amp));
  s.normalize();
  return s;
}

WaveState make_gaussian_state(const MomentumGrid& grid, double x0, double p0,
                              double sigma_x) {
  if (grid.dim() != 1)
    throw ValidationError("scalar x0/p0 overload requires a 1-d grid");
  return make_gaussian_state(grid, std::span<const double>(&x0, 1),
                             std::span<const double>(&p0, 1), sigma_x);
}

std::vector<cplx> to_position_amplitudes(const WaveState& state) {
  FourierEngine engine(state.grid());
  return engine.to_position(state.amplitudes());
}

cplx overlap(const WaveState& a, const WaveState& b) {
  if (!(a.grid() == b.grid())) throw ValidationError("overlap: grid mismatch");
  cplx s = simd::cdotc(a.amplitudes().data(), b.amplitudes().data(),
                       a.amplitudes().size());
  double w = 1.0;
  for (int ax = 0; ax < a.grid().dim(); ++ax) w *= a.grid().dp();
  return s * w;
}

void save_state_csv(const WaveState& state, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path.string() + " for writing");
  const auto& g = state.grid();
  out << "# wavestate d=" << g.dim() << " n=" << g.points_per_axis()
      << " dp=" << io::fmt17(g.dp()) << " hbar=" << io::fmt17(g.hbar())
      << " time=" << io::fmt17(state.time()) << "\n";
  out << "re,im\n";
  for (const cplx& a : state.amplitudes())
    out << io::fmt17(a.real()) << ',' << io::fmt17(a.imag()) << "\n";
  if (!out) throw ValidationError("write failed: " + path.string());
}

WaveState load_state_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::string header;
  std::getline(in, header);
  int d = 0;
  std::size_t n = 0;
  double dp = 0, hbar = 0, time = 0;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("d=", 0) == 0) d = std::stoi(tok.substr(2));
      else if (tok.rfind("n=", 0) == 0) n = std::stoul(tok.substr(2));
      else if (tok.rfind("dp=", 0) == 0) dp = std::stod(tok.substr(3));
      else if (tok.rfind("hbar=", 0) == 0) hbar = std::stod(tok.substr(5));
      else if (tok.rfind("time=", 0) == 0) time = std::stod(tok.substr(5));
    }
  }
  if (d == 0 || n == 0 || dp == 0 || hbar == 0)
    throw ValidationError("malformed wavestate header in " + path.string());
  std::string line;
  std::getline(in, line);  // column names
  MomentumGrid grid(d, n, dp, hbar);
  std::vector<cplx> amp;
  amp.reserve(grid.size());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ValidationError("malformed wavestate row in " + path.string());
    amp.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  if (amp.size() != grid.size())
    throw ValidationError("wavestate row count does not match grid in " + path.string());
  return WaveState(grid, std::move(amp), time);
}

}  // namespace povmqm
