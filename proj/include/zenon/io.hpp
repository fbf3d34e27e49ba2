#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zenon/dilation.hpp"
#include "zenon/dynamics.hpp"
#include "zenon/effective.hpp"
#include "zenon/linalg.hpp"
#include "zenon/protocol.hpp"

namespace zenon {

using Json = nlohmann::json;

// CMatrix <-> {"dim": n, "re": [...], "im": [...]} (row-major)
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json effective_to_json(const EffectiveHamiltonian& eff);
EffectiveHamiltonian effective_from_json(const Json& j);

Json dilation_to_json(const DilationResult& d);
DilationResult dilation_from_json(const Json& j);

Json roundtrip_to_json(const RoundTripReport& r);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

/// Comma-separated rows with a fixed header.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(const std::vector<double>& values);
  std::string str() const;
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::string> rows_;
};

/// Basis labels: bit strings for qubit registers, plain indices otherwise.
std::vector<std::string> basis_labels(Eigen::Index dim);

/// `t,p,pop_<basis>...,re_coh,im_coh,purity`; p is exp(log_p).
CsvTable time_series_table(const std::vector<GridSample>& samples, Eigen::Index coh_row, Eigen::Index coh_col);

/// `step,survivors,p_exact,p_empirical`.
CsvTable ensemble_table(const TrajectoryEnsemble& ens, const std::vector<double>& p_exact);

}  // namespace zenon
