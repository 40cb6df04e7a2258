#include "mlur/state_spec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mlur/error.hpp"

namespace mlur {

namespace {

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw InputError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

// "p=0.5,base=phi+" -> p and base
DensityMatrix parse_mixture(NoiseKind noise, std::string_view args) {
  std::optional<double> p;
  BellKind base = BellKind::PsiMinus;
  while (!args.empty()) {
    const std::size_t comma = args.find(',');
    const std::string_view item = args.substr(0, comma);
    args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);

    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("expected key=value in '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "p") {
      p = parse_double(value);
    } else if (key == "base") {
      const auto kind = parse_bell_kind(value);
      if (!kind) throw InputError("unknown Bell state '" + std::string(value) + "'");
      base = *kind;
    } else {
      throw InputError("unknown mixture parameter '" + std::string(key) + "'");
    }
  }
  if (!p) throw InputError("mixture spec needs p=<float>");
  return noise_mixture(*p, noise, base);
}

}  // namespace

std::optional<BellKind> parse_bell_kind(std::string_view name) {
  if (name == "singlet" || name == "psi-") return BellKind::PsiMinus;
  if (name == "psi+") return BellKind::PsiPlus;
  if (name == "phi+") return BellKind::PhiPlus;
  if (name == "phi-") return BellKind::PhiMinus;
  return std::nullopt;
}

std::optional<NoiseKind> parse_noise_kind(std::string_view name) {
  if (name == "werner") return NoiseKind::Werner;
  if (name == "polarized") return NoiseKind::MaxPolarized;
  return std::nullopt;
}

DensityMatrix parse_state_spec(std::string_view spec) {
  if (const auto kind = parse_bell_kind(spec)) return density_from_pure(bell_state(*kind));

  const auto transformed = [](SpecialUnitary which) {
    return density_from_pure(apply_local_unitary(special_unitary(which), bell_state(BellKind::PsiMinus)));
  };
  if (spec == "u1-singlet") return transformed(SpecialUnitary::U1);
  if (spec == "u2-singlet") return transformed(SpecialUnitary::U2);
  if (spec == "u3-singlet") return transformed(SpecialUnitary::U3);

  const std::size_t colon = spec.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view head = spec.substr(0, colon);
    const std::string_view tail = spec.substr(colon + 1);
    if (head == "file") return load_density_file(std::filesystem::path(std::string(tail)));
    if (const auto noise = parse_noise_kind(head)) return parse_mixture(*noise, tail);
  }
  throw InputError("unrecognized state spec '" + std::string(spec) + "'");
}

DensityMatrix density_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("density matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("re") || !doc.contains("im")) {
    throw InputError("density matrix JSON needs \"re\" and \"im\" arrays");
  }
  if (doc.contains("dim") && doc["dim"] != 4) throw InputError("density matrix JSON: dim must be 4");

  ComplexMatrix m(4);
  const auto& re = doc["re"];
  const auto& im = doc["im"];
  const auto is_4x4 = [](const nlohmann::json& rows) {
    if (!rows.is_array() || rows.size() != 4) return false;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != 4) return false;
      for (const auto& v : row) {
        if (!v.is_number()) return false;
      }
    }
    return true;
  };
  if (!is_4x4(re) || !is_4x4(im)) throw InputError("density matrix JSON: re/im must be 4x4 numeric arrays");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = Complex{re[i][j].get<double>(), im[i][j].get<double>()};
  }
  if (!m.is_finite()) throw InputError("density matrix JSON: non-finite entry");
  return DensityMatrix(m);
}

DensityMatrix load_density_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open density matrix file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return density_from_json(buffer.str());
}

std::string density_to_json(const DensityMatrix& rho) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (std::size_t j = 0; j < 4; ++j) {
      re_row.push_back(rho.matrix()(i, j).real());
      im_row.push_back(rho.matrix()(i, j).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  return nlohmann::json{{"dim", 4}, {"re", re}, {"im", im}}.dump();
}

}  // namespace mlur
