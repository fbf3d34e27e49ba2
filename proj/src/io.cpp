#include "zenon/io.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

namespace zenon {

Json matrix_to_json(const CMatrix& m) {
  const Eigen::Index n = m.rows();
  std::vector<double> re, im;
  re.reserve(static_cast<std::size_t>(n * n));
  im.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  return Json{{"dim", n}, {"re", re}, {"im", im}};
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im")) {
    throw Error(ErrorCode::ParseError, "matrix must be an object with dim, re and im");
  }
  try {
    const auto dim = j.at("dim").get<long>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    return from_row_major<double>(dim, re, im);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad matrix field: ") + e.what());
  }
}

Json effective_to_json(const EffectiveHamiltonian& eff) {
  return Json{{"h0", matrix_to_json(eff.h0)}, {"gamma", matrix_to_json(eff.gamma)}, {"tau", eff.tau}};
}

EffectiveHamiltonian effective_from_json(const Json& j) {
  try {
    EffectiveHamiltonian eff{matrix_from_json(j.at("h0")), matrix_from_json(j.at("gamma")), j.at("tau").get<double>()};
    eff.validate();
    return eff;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad effective Hamiltonian: ") + e.what());
  }
}

Json dilation_to_json(const DilationResult& d) {
  return Json{{"H", matrix_to_json(d.h)}, {"tau", d.tau}, {"c", d.c}, {"f", d.f}, {"M", d.m}};
}

DilationResult dilation_from_json(const Json& j) {
  try {
    DilationResult d;
    d.h = matrix_from_json(j.at("H"));
    d.tau = j.at("tau").get<double>();
    d.c = j.at("c").get<double>();
    d.f = j.at("f").get<double>();
    d.m = j.at("M").get<double>();
    return d;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad dilation result: ") + e.what());
  }
}

Json roundtrip_to_json(const RoundTripReport& r) {
  return Json{{"hermitian_residual", r.hermitian_residual},
              {"gamma_residual", r.gamma_residual},
              {"traceless_residual", r.traceless_residual},
              {"recovered_shift", r.recovered_shift},
              {"tau", r.tau},
              {"c", r.c}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(const std::vector<double>& values) {
  if (values.size() != header_.size()) throw Error(ErrorCode::InvalidArgument, "CSV row width does not match header");
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += format_double(values[i]);
  }
  rows_.push_back(std::move(line));
}

std::string CsvTable::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
  os << '\n';
  for (const auto& r : rows_) os << r << '\n';
  return os.str();
}

std::vector<std::string> basis_labels(Eigen::Index dim) {
  std::vector<std::string> out;
  const auto udim = static_cast<unsigned long>(dim);
  const bool qubits = dim > 1 && std::has_single_bit(udim);
  const int n = qubits ? std::countr_zero(udim) : 0;
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (!qubits) {
      out.push_back(std::to_string(k));
      continue;
    }
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int b = 0; b < n; ++b)
      if ((k >> (n - 1 - b)) & 1) bits[static_cast<std::size_t>(b)] = '1';
    out.push_back(bits);
  }
  return out;
}

CsvTable time_series_table(const std::vector<GridSample>& samples, Eigen::Index coh_row, Eigen::Index coh_col) {
  const Eigen::Index dim = samples.empty() ? 0 : samples.front().rho.rows();
  std::vector<std::string> header{"t", "p"};
  for (const auto& l : basis_labels(dim)) header.push_back("pop_" + l);
  header.insert(header.end(), {"re_coh", "im_coh", "purity"});
  CsvTable table(std::move(header));
  for (const auto& s : samples) {
    std::vector<double> row{s.t, std::exp(s.log_p)};
    for (Eigen::Index k = 0; k < dim; ++k) row.push_back(s.rho(k, k).real());
    const Complex coh = s.rho(coh_row, coh_col);
    row.push_back(coh.real());
    row.push_back(coh.imag());
    row.push_back((s.rho * s.rho).trace().real());
    table.add_row(row);
  }
  return table;
}

CsvTable ensemble_table(const TrajectoryEnsemble& ens, const std::vector<double>& p_exact) {
  CsvTable table({"step", "survivors", "p_exact", "p_empirical"});
  for (std::size_t k = 0; k < ens.survival_counts.size(); ++k) {
    const double survivors = ens.survival_counts[k];
    table.add_row({static_cast<double>(k + 1), survivors, k < p_exact.size() ? p_exact[k] : std::nan(""),
                   survivors / ens.n_traj});
  }
  return table;
}

}  // namespace zenon
