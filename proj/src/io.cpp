#include "strata/io.hpp"

#include <fstream>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

namespace {

json qvec_to_json(const QVec& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(rat_to_string(c));
  return arr;
}

json level_to_json(const Group& g, const std::vector<int>& level) {
  if (static_cast<int>(level.size()) == g.datum().num_simple()) return "G";
  json arr = json::array();
  for (int i : level) arr.push_back(i + 1);
  return arr;
}

}  // namespace

json class_to_json(const Group& g, const SigmaClass& b) {
  json j;
  j["nu"] = qvec_to_json(b.nu);
  j["kappa"] = b.kappa.canon;
  j["level"] = level_to_json(g, b.level);
  return j;
}

json cert_to_json(const Group& g, const AlcoveCertificate& cert) {
  json j;
  json jj = json::array();
  for (int i : cert.j) jj.push_back(i + 1);
  j["J"] = jj;
  j["w"] = print_weyl(g.datum(), cert.w);
  j["normalized"] = cert.normalized;
  j["tilde_x"] = print_elt(g.datum(), cert.tilde_x);
  return j;
}

json reduction_to_json(const Group& g, const ReductionResult& r) {
  json rows = json::array();
  for (const auto& [cls, dim] : r) {
    json row = class_to_json(g, cls);
    row["dim"] = dim;
    rows.push_back(row);
  }
  return rows;
}

json table_to_json(const Group& g, const StrataTable& t) {
  json j;
  j["x"] = print_elt(g.datum(), t.x);
  j["length"] = t.len;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r;
    r["class_nu"] = qvec_to_json(row.cls.nu);
    r["class_kappa"] = row.cls.kappa.canon;
    r["dim"] = row.dim;
    r["vdim"] = rat_to_string(row.vdim);
    r["delta"] = rat_to_string(row.delta);
    r["codim"] = row.codim;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["has_unique_min"] = t.has_unique_min;
  j["saturated"] = t.saturated;
  j["cordial_candidate"] = t.cordial_candidate;
  j["equidimensional"] = "unknown";
  return j;
}

std::string table_to_csv(const Group& g, const StrataTable& t) {
  (void)g;
  std::ostringstream os;
  os << "class_nu,class_kappa,dim,vdim,delta,codim\n";
  for (const auto& row : t.rows) {
    os << "(";
    for (size_t i = 0; i < row.cls.nu.size(); ++i) {
      if (i) os << " ";
      os << rat_to_string(row.cls.nu[i]);
    }
    os << "),(";
    for (size_t i = 0; i < row.cls.kappa.canon.size(); ++i) {
      if (i) os << " ";
      os << row.cls.kappa.canon[i];
    }
    os << ")," << row.dim << "," << rat_to_string(row.vdim) << ","
       << rat_to_string(row.delta) << "," << row.codim << "\n";
  }
  return os.str();
}

std::shared_ptr<const RootDatum> datum_from_json(const json& j) {
  if (j.contains("type")) {
    std::string type = j.at("type").get<std::string>();
    int rank = j.at("rank").get<int>();
    return RootDatum::builtin(type + ":" + std::to_string(rank));
  }
  RootDatum::Spec spec;
  spec.name = j.value("name", "custom");
  spec.ambient_rank = j.at("ambient_rank").get<int>();
  for (const auto& row : j.at("simple_roots"))
    spec.simple_roots.push_back(row.get<IVec>());
  for (const auto& row : j.at("simple_coroots"))
    spec.simple_coroots.push_back(row.get<IVec>());
  if (j.contains("cochar_basis"))
    for (const auto& row : j.at("cochar_basis"))
      spec.cochar_basis.push_back(row.get<IVec>());
  if (j.contains("delta")) {
    const auto& d = j.at("delta");
    if (d.contains("perm")) {
      for (int i : d.at("perm").get<std::vector<int>>())
        spec.delta_perm.push_back(i - 1);
    }
    if (d.contains("matrix"))
      for (const auto& row : d.at("matrix"))
        spec.delta_matrix.push_back(row.get<IVec>());
  }
  return RootDatum::build(spec);
}

std::shared_ptr<const RootDatum> datum_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidDatum("cannot open datum file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidDatum("bad datum JSON: " + std::string(e.what()));
  }
  return datum_from_json(j);
}

namespace {

// Flip on an A-chain: negated coordinate reversal.
IMat negated_reversal(int d) {
  IMat m(d, IVec(d, 0));
  for (int i = 0; i < d; ++i) m[i][d - 1 - i] = -1;
  return m;
}

}  // namespace

std::shared_ptr<const RootDatum> datum_from_cli(const std::string& group,
                                                const std::string& delta) {
  std::shared_ptr<const RootDatum> rd;
  if (group.rfind("file:", 0) == 0) {
    rd = datum_from_file(group.substr(5));
  } else {
    rd = RootDatum::builtin(group);
  }
  if (delta.empty() || delta == "id") return rd;
  if (delta.rfind("perm:", 0) != 0)
    throw InvalidDatum("bad --delta (use 'id' or 'perm:i1,i2,...')");
  std::vector<int> perm;
  {
    std::istringstream ss(delta.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ',')) perm.push_back(std::stoi(tok) - 1);
  }
  int r = rd->num_simple();
  if (static_cast<int>(perm.size()) != r)
    throw InvalidDatum("--delta permutation has wrong length");
  bool is_id = true, is_flip = true;
  for (int i = 0; i < r; ++i) {
    if (perm[i] != i) is_id = false;
    if (perm[i] != r - 1 - i) is_flip = false;
  }
  if (is_id) return rd;

  RootDatum::Spec spec;
  spec.name = rd->name() + "+delta";
  spec.ambient_rank = rd->ambient_rank();
  spec.simple_roots = rd->simple_roots();
  spec.simple_coroots = rd->simple_coroots();
  spec.cochar_basis = rd->cochar_basis();
  spec.delta_perm = perm;
  if (is_flip && (group.rfind("GL:", 0) == 0 || group.rfind("SL:", 0) == 0)) {
    spec.delta_matrix = negated_reversal(rd->ambient_rank());
  } else {
    throw InvalidDatum(
        "--delta perm: only the A-chain flip is built in; supply the lattice "
        "matrix via file:");
  }
  return RootDatum::build(spec);
}

}  // namespace strata
