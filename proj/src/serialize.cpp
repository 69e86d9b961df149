#include "serialize.hpp"

#include <json.hpp>
#include <sstream>

namespace bihom {

using json = nlohmann::json;

namespace {

json scalar_json(const R& r) { return scalar_to_string(r); }

R scalar_from(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": scalar must be a \"p/q\" string");
  try {
    return scalar_parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json vec_json(const Vec<R>& v) {
  json a = json::array();
  for (const R& x : v) a.push_back(scalar_json(x));
  return a;
}

Vec<R> vec_from(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  Vec<R> v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(scalar_from(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

json mat_json(const Mat<R>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat<R> mat_from(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError(path + ": expected a non-empty matrix");
  size_t cols = 0;
  for (size_t i = 0; i < j.size(); ++i) {
    const json& row = j[i];
    std::string rp = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw ParseError(rp + ": expected a row array");
    if (i == 0)
      cols = row.size();
    else if (row.size() != cols)
      throw ParseError(rp + ": ragged matrix (row length " + std::to_string(row.size()) +
                       " vs " + std::to_string(cols) + ")");
  }
  Mat<R> m(int(j.size()), int(cols));
  for (size_t i = 0; i < j.size(); ++i)
    for (size_t c = 0; c < cols; ++c)
      m(int(i), int(c)) = scalar_from(j[i][c], path + "[" + std::to_string(i) + "][" +
                                                   std::to_string(c) + "]");
  return m;
}

json tensor_json(const Tensor3<R>& t) {
  json a = json::array();
  for (int x = 0; x < t.dim1(); ++x) {
    json b = json::array();
    for (int y = 0; y < t.dim2(); ++y) {
      json c = json::array();
      for (int z = 0; z < t.dim3(); ++z) c.push_back(scalar_json(t(x, y, z)));
      b.push_back(std::move(c));
    }
    a.push_back(std::move(b));
  }
  return a;
}

Tensor3<R> tensor_from(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError(path + ": expected a 3-index tensor");
  size_t d2 = 0, d3 = 0;
  for (size_t x = 0; x < j.size(); ++x) {
    const json& plane = j[x];
    std::string pp = path + "[" + std::to_string(x) + "]";
    if (!plane.is_array()) throw ParseError(pp + ": expected an array");
    if (x == 0) d2 = plane.size();
    if (plane.size() != d2) throw ParseError(pp + ": ragged tensor");
    for (size_t y = 0; y < plane.size(); ++y) {
      const json& row = plane[y];
      std::string rp = pp + "[" + std::to_string(y) + "]";
      if (!row.is_array()) throw ParseError(rp + ": expected an array");
      if (x == 0 && y == 0) d3 = row.size();
      if (row.size() != d3) throw ParseError(rp + ": ragged tensor");
    }
  }
  Tensor3<R> t(int(j.size()), int(d2), int(d3));
  for (size_t x = 0; x < j.size(); ++x)
    for (size_t y = 0; y < d2; ++y)
      for (size_t z = 0; z < d3; ++z)
        t(int(x), int(y), int(z)) =
            scalar_from(j[x][y][z], path + "[" + std::to_string(x) + "][" +
                                        std::to_string(y) + "][" + std::to_string(z) + "]");
  return t;
}

int dim_from(const json& j, const std::string& path) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError(path + ".dim: expected an integer");
  int d = j["dim"].get<int>();
  if (d <= 0) throw ParseError(path + ".dim: must be positive");
  return d;
}

int mdim_from(const json& j, const std::string& path) {
  if (!j.contains("mdim") || !j["mdim"].is_number_integer())
    throw ParseError(path + ".mdim: expected an integer");
  int d = j["mdim"].get<int>();
  if (d <= 0) throw ParseError(path + ".mdim: must be positive");
  return d;
}

const json& field(const json& j, const char* name, const std::string& path) {
  if (!j.contains(name)) throw ParseError(path + ": missing field '" + name + "'");
  return j[name];
}

// --- per-kind encoders / decoders ------------------------------------------

json algebra_json(const BiHomAlgebra<R>& a) {
  json j;
  j["dim"] = a.dim;
  j["mu"] = tensor_json(a.mu);
  j["alpha"] = mat_json(a.alpha);
  j["beta"] = mat_json(a.beta);
  if (a.unit) j["unit"] = vec_json(*a.unit);
  return j;
}

BiHomAlgebra<R> algebra_from(const json& j, const std::string& path) {
  BiHomAlgebra<R> a;
  a.dim = dim_from(j, path);
  a.mu = tensor_from(field(j, "mu", path), path + ".mu");
  a.alpha = mat_from(field(j, "alpha", path), path + ".alpha");
  a.beta = mat_from(field(j, "beta", path), path + ".beta");
  if (j.contains("unit")) a.unit = vec_from(j["unit"], path + ".unit");
  return a;
}

json coalgebra_json(const BiHomCoalgebra<R>& c) {
  json j;
  j["dim"] = c.dim;
  j["delta"] = tensor_json(c.delta);
  j["psi"] = mat_json(c.psi);
  j["omega"] = mat_json(c.omega);
  if (c.counit) j["counit"] = vec_json(*c.counit);
  return j;
}

BiHomCoalgebra<R> coalgebra_from(const json& j, const std::string& path) {
  BiHomCoalgebra<R> c;
  c.dim = dim_from(j, path);
  c.delta = tensor_from(field(j, "delta", path), path + ".delta");
  c.psi = mat_from(field(j, "psi", path), path + ".psi");
  c.omega = mat_from(field(j, "omega", path), path + ".omega");
  if (j.contains("counit")) c.counit = vec_from(j["counit"], path + ".counit");
  return c;
}

json bialgebra_json(const InfBialgebra<R>& b) {
  json j;
  j["dim"] = b.dim;
  j["lambda"] = scalar_json(b.lambda);
  j["mu"] = tensor_json(b.mu);
  j["delta"] = tensor_json(b.delta);
  j["alpha"] = mat_json(b.alpha);
  j["beta"] = mat_json(b.beta);
  j["psi"] = mat_json(b.psi);
  j["omega"] = mat_json(b.omega);
  if (b.unit) j["unit"] = vec_json(*b.unit);
  if (b.counit) j["counit"] = vec_json(*b.counit);
  return j;
}

InfBialgebra<R> bialgebra_from(const json& j, const std::string& path) {
  InfBialgebra<R> b;
  b.dim = dim_from(j, path);
  b.lambda = scalar_from(field(j, "lambda", path), path + ".lambda");
  b.mu = tensor_from(field(j, "mu", path), path + ".mu");
  b.delta = tensor_from(field(j, "delta", path), path + ".delta");
  b.alpha = mat_from(field(j, "alpha", path), path + ".alpha");
  b.beta = mat_from(field(j, "beta", path), path + ".beta");
  b.psi = mat_from(field(j, "psi", path), path + ".psi");
  b.omega = mat_from(field(j, "omega", path), path + ".omega");
  if (j.contains("unit")) b.unit = vec_from(j["unit"], path + ".unit");
  if (j.contains("counit")) b.counit = vec_from(j["counit"], path + ".counit");
  return b;
}

}  // namespace

std::string serialize(const Record& rec) {
  json j;
  j["format_version"] = 1;
  j["kind"] = rec.kind;
  const std::string& k = rec.kind;
  if (k == "algebra") {
    j.update(algebra_json(std::get<BiHomAlgebra<R>>(rec.value)));
  } else if (k == "coalgebra") {
    j.update(coalgebra_json(std::get<BiHomCoalgebra<R>>(rec.value)));
  } else if (k == "bialgebra") {
    j.update(bialgebra_json(std::get<InfBialgebra<R>>(rec.value)));
  } else if (k == "module") {
    const auto& m = std::get<BimoduleData<R>>(rec.value);
    j["algebra"] = algebra_json(m.algebra);
    j["mdim"] = m.mdim;
    if (m.left) j["left"] = tensor_json(*m.left);
    if (m.right) j["right"] = tensor_json(*m.right);
    if (m.muM) j["muM"] = tensor_json(*m.muM);
    j["alphaM"] = mat_json(m.alphaM);
    j["betaM"] = mat_json(m.betaM);
    if (m.psiM) j["psiM"] = mat_json(*m.psiM);
    if (m.omegaM) j["omegaM"] = mat_json(*m.omegaM);
  } else if (k == "comodule") {
    const auto& m = std::get<BicomoduleData<R>>(rec.value);
    j["coalgebra"] = coalgebra_json(m.coalgebra);
    j["mdim"] = m.mdim;
    if (m.rho) j["rho"] = tensor_json(*m.rho);
    if (m.phi) j["phi"] = tensor_json(*m.phi);
    if (m.deltaM) j["deltaM"] = tensor_json(*m.deltaM);
    j["psiM"] = mat_json(m.psiM);
    j["omegaM"] = mat_json(m.omegaM);
    if (m.alphaM) j["alphaM"] = mat_json(*m.alphaM);
    if (m.betaM) j["betaM"] = mat_json(*m.betaM);
  } else if (k == "left-hopf-module") {
    const auto& h = std::get<LeftHopfModule<R>>(rec.value);
    j["bialgebra"] = bialgebra_json(h.bialgebra);
    j["mdim"] = h.mdim;
    j["left"] = tensor_json(h.left);
    j["rho"] = tensor_json(h.rho);
    j["alphaM"] = mat_json(h.alphaM);
    j["betaM"] = mat_json(h.betaM);
    j["psiM"] = mat_json(h.psiM);
    j["omegaM"] = mat_json(h.omegaM);
  } else if (k == "right-hopf-module") {
    const auto& h = std::get<RightHopfModule<R>>(rec.value);
    j["bialgebra"] = bialgebra_json(h.bialgebra);
    j["mdim"] = h.mdim;
    j["right"] = tensor_json(h.right);
    j["phi"] = tensor_json(h.phi);
    j["alphaM"] = mat_json(h.alphaM);
    j["betaM"] = mat_json(h.betaM);
    j["psiM"] = mat_json(h.psiM);
    j["omegaM"] = mat_json(h.omegaM);
  } else if (k == "hopf-bimodule") {
    const auto& h = std::get<HopfBimodule<R>>(rec.value);
    j["bialgebra"] = bialgebra_json(h.bialgebra);
    j["mdim"] = h.mdim;
    j["left"] = tensor_json(h.left);
    j["right"] = tensor_json(h.right);
    j["rho"] = tensor_json(h.rho);
    j["phi"] = tensor_json(h.phi);
    j["alphaM"] = mat_json(h.alphaM);
    j["betaM"] = mat_json(h.betaM);
    j["psiM"] = mat_json(h.psiM);
    j["omegaM"] = mat_json(h.omegaM);
    if (h.muM) j["muM"] = tensor_json(*h.muM);
    if (h.deltaM) j["deltaM"] = tensor_json(*h.deltaM);
  } else if (k == "rota-baxter") {
    const auto& rb = std::get<RotaBaxterData<R>>(rec.value);
    j["algebra"] = algebra_json(rb.algebra);
    j["lambda"] = scalar_json(rb.lambda);
    j["RA"] = mat_json(rb.RA);
    if (rb.module) {
      json m;
      m["mdim"] = rb.module->mdim;
      m["left"] = tensor_json(rb.module->left);
      m["right"] = tensor_json(rb.module->right);
      m["alphaM"] = mat_json(rb.module->alphaM);
      m["betaM"] = mat_json(rb.module->betaM);
      m["RM"] = mat_json(rb.module->RM);
      j["module"] = std::move(m);
    }
  } else if (k == "dendriform") {
    const auto& d = std::get<DendriformAlgebra<R>>(rec.value);
    j["dim"] = d.dim;
    j["prec"] = tensor_json(d.prec);
    j["succ"] = tensor_json(d.succ);
    j["alpha"] = mat_json(d.alpha);
    j["beta"] = mat_json(d.beta);
  } else if (k == "dendriform-bimodule") {
    const auto& d = std::get<DendriformBimodule<R>>(rec.value);
    json alg;
    alg["dim"] = d.algebra.dim;
    alg["prec"] = tensor_json(d.algebra.prec);
    alg["succ"] = tensor_json(d.algebra.succ);
    alg["alpha"] = mat_json(d.algebra.alpha);
    alg["beta"] = mat_json(d.algebra.beta);
    j["dendriform"] = std::move(alg);
    j["mdim"] = d.mdim;
    j["prec_am"] = tensor_json(d.prec_am);
    j["succ_am"] = tensor_json(d.succ_am);
    j["prec_ma"] = tensor_json(d.prec_ma);
    j["succ_ma"] = tensor_json(d.succ_ma);
    j["alphaM"] = mat_json(d.alphaM);
    j["betaM"] = mat_json(d.betaM);
  } else if (k == "prelie" || k == "novikov") {
    const auto& p = std::get<PreLieAlgebra<R>>(rec.value);
    j["dim"] = p.dim;
    j["circ"] = tensor_json(p.circ);
    j["alpha"] = mat_json(p.alpha);
    j["beta"] = mat_json(p.beta);
  } else if (k == "prelie-bimodule") {
    const auto& p = std::get<PreLieBimodule<R>>(rec.value);
    json alg;
    alg["dim"] = p.algebra.dim;
    alg["circ"] = tensor_json(p.algebra.circ);
    alg["alpha"] = mat_json(p.algebra.alpha);
    alg["beta"] = mat_json(p.algebra.beta);
    j["prelie"] = std::move(alg);
    j["mdim"] = p.mdim;
    j["circL"] = tensor_json(p.circL);
    j["circR"] = tensor_json(p.circR);
    j["alphaM"] = mat_json(p.alphaM);
    j["betaM"] = mat_json(p.betaM);
  } else if (k == "novikov-poisson") {
    const auto& n = std::get<NovikovPoissonData<R>>(rec.value);
    j["dim"] = n.dim;
    j["dot"] = tensor_json(n.dot);
    j["star"] = tensor_json(n.star);
    j["alpha"] = mat_json(n.alpha);
    j["beta"] = mat_json(n.beta);
  } else if (k == "qt") {
    const auto& q = std::get<QtStructure<R>>(rec.value);
    j["algebra"] = algebra_json(q.base);
    j["psi"] = mat_json(q.psi);
    j["omega"] = mat_json(q.omega);
    j["r"] = mat_json(q.r);
    j["lambda"] = scalar_json(q.lambda);
    j["qt_kind"] = to_string(q.kind);
  } else if (k == "coqt") {
    const auto& c = std::get<CoqtStructure<R>>(rec.value);
    j["coalgebra"] = coalgebra_json(c.base);
    j["alpha"] = mat_json(c.alpha);
    j["beta"] = mat_json(c.beta);
    j["sigma"] = mat_json(c.sigma);
    j["lambda"] = scalar_json(c.lambda);
    j["qt_kind"] = to_string(c.kind);
  } else if (k == "twist-data") {
    const auto& t = std::get<TwistData<R>>(rec.value);
    j["algebra"] = algebra_json(t.algebra);
    j["alpha"] = mat_json(t.alpha);
    j["beta"] = mat_json(t.beta);
  } else if (k == "hopf-twist-data") {
    const auto& t = std::get<HopfTwistData<R>>(rec.value);
    Record inner{"hopf-bimodule", t.hopf};
    j["hopf_bimodule"] = json::parse(serialize(inner));
    j["hopf_bimodule"].erase("format_version");
    j["hopf_bimodule"].erase("kind");
    j["alphaA"] = mat_json(t.alphaA);
    j["betaA"] = mat_json(t.betaA);
    j["psiA"] = mat_json(t.psiA);
    j["omegaA"] = mat_json(t.omegaA);
    j["alphaM"] = mat_json(t.alphaM);
    j["betaM"] = mat_json(t.betaM);
    j["psiM"] = mat_json(t.psiM);
    j["omegaM"] = mat_json(t.omegaM);
  } else if (k == "gd-data") {
    const auto& g = std::get<DerivationData<R>>(rec.value);
    j["algebra"] = algebra_json(g.algebra);
    j["lambda"] = scalar_json(g.lambda);
    j["D"] = mat_json(g.D);
    j["xi"] = mat_json(g.xi);
    if (g.zeta) j["zeta"] = mat_json(*g.zeta);
    if (g.iota) j["iota"] = mat_json(*g.iota);
    j["kappa"] = scalar_json(g.kappa);
  } else {
    throw UnknownKindError("serialize: unknown record kind '" + k + "'");
  }
  return j.dump(2) + "\n";
}

namespace {

HopfBimodule<R> hopf_bimodule_from(const json& j, const std::string& path) {
  HopfBimodule<R> h;
  h.bialgebra = bialgebra_from(field(j, "bialgebra", path), path + ".bialgebra");
  h.mdim = mdim_from(j, path);
  h.left = tensor_from(field(j, "left", path), path + ".left");
  h.right = tensor_from(field(j, "right", path), path + ".right");
  h.rho = tensor_from(field(j, "rho", path), path + ".rho");
  h.phi = tensor_from(field(j, "phi", path), path + ".phi");
  h.alphaM = mat_from(field(j, "alphaM", path), path + ".alphaM");
  h.betaM = mat_from(field(j, "betaM", path), path + ".betaM");
  h.psiM = mat_from(field(j, "psiM", path), path + ".psiM");
  h.omegaM = mat_from(field(j, "omegaM", path), path + ".omegaM");
  if (j.contains("muM")) h.muM = tensor_from(j["muM"], path + ".muM");
  if (j.contains("deltaM")) h.deltaM = tensor_from(j["deltaM"], path + ".deltaM");
  return h;
}

}  // namespace

Record deserialize(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("$: expected a JSON object");
  if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
      j["format_version"].get<int>() != 1)
    throw ParseError("$.format_version: expected the integer 1");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("$.kind: expected a string");
  const std::string k = j["kind"].get<std::string>();
  const std::string path = "$";

  Record rec;
  rec.kind = k;
  if (k == "algebra") {
    rec.value = algebra_from(j, path);
  } else if (k == "coalgebra") {
    rec.value = coalgebra_from(j, path);
  } else if (k == "bialgebra") {
    rec.value = bialgebra_from(j, path);
  } else if (k == "module") {
    BimoduleData<R> m;
    m.algebra = algebra_from(field(j, "algebra", path), path + ".algebra");
    m.mdim = mdim_from(j, path);
    if (j.contains("left")) m.left = tensor_from(j["left"], path + ".left");
    if (j.contains("right")) m.right = tensor_from(j["right"], path + ".right");
    if (j.contains("muM")) m.muM = tensor_from(j["muM"], path + ".muM");
    m.alphaM = mat_from(field(j, "alphaM", path), path + ".alphaM");
    m.betaM = mat_from(field(j, "betaM", path), path + ".betaM");
    if (j.contains("psiM")) m.psiM = mat_from(j["psiM"], path + ".psiM");
    if (j.contains("omegaM")) m.omegaM = mat_from(j["omegaM"], path + ".omegaM");
    rec.value = std::move(m);
  } else if (k == "comodule") {
    BicomoduleData<R> m;
    m.coalgebra = coalgebra_from(field(j, "coalgebra", path), path + ".coalgebra");
    m.mdim = mdim_from(j, path);
    if (j.contains("rho")) m.rho = tensor_from(j["rho"], path + ".rho");
    if (j.contains("phi")) m.phi = tensor_from(j["phi"], path + ".phi");
    if (j.contains("deltaM")) m.deltaM = tensor_from(j["deltaM"], path + ".deltaM");
    m.psiM = mat_from(field(j, "psiM", path), path + ".psiM");
    m.omegaM = mat_from(field(j, "omegaM", path), path + ".omegaM");
    if (j.contains("alphaM")) m.alphaM = mat_from(j["alphaM"], path + ".alphaM");
    if (j.contains("betaM")) m.betaM = mat_from(j["betaM"], path + ".betaM");
    rec.value = std::move(m);
  } else if (k == "left-hopf-module") {
    LeftHopfModule<R> h;
    h.bialgebra = bialgebra_from(field(j, "bialgebra", path), path + ".bialgebra");
    h.mdim = mdim_from(j, path);
    h.left = tensor_from(field(j, "left", path), path + ".left");
    h.rho = tensor_from(field(j, "rho", path), path + ".rho");
    h.alphaM = mat_from(field(j, "alphaM", path), path + ".alphaM");
    h.betaM = mat_from(field(j, "betaM", path), path + ".betaM");
    h.psiM = mat_from(field(j, "psiM", path), path + ".psiM");
    h.omegaM = mat_from(field(j, "omegaM", path), path + ".omegaM");
    rec.value = std::move(h);
  } else if (k == "right-hopf-module") {
    RightHopfModule<R> h;
    h.bialgebra = bialgebra_from(field(j, "bialgebra", path), path + ".bialgebra");
    h.mdim = mdim_from(j, path);
    h.right = tensor_from(field(j, "right", path), path + ".right");
    h.phi = tensor_from(field(j, "phi", path), path + ".phi");
    h.alphaM = mat_from(field(j, "alphaM", path), path + ".alphaM");
    h.betaM = mat_from(field(j, "betaM", path), path + ".betaM");
    h.psiM = mat_from(field(j, "psiM", path), path + ".psiM");
    h.omegaM = mat_from(field(j, "omegaM", path), path + ".omegaM");
    rec.value = std::move(h);
  } else if (k == "hopf-bimodule") {
    rec.value = hopf_bimodule_from(j, path);
  } else if (k == "rota-baxter") {
    RotaBaxterData<R> rb;
    rb.algebra = algebra_from(field(j, "algebra", path), path + ".algebra");
    rb.lambda = scalar_from(field(j, "lambda", path), path + ".lambda");
    rb.RA = mat_from(field(j, "RA", path), path + ".RA");
    if (j.contains("module")) {
      const json& m = j["module"];
      std::string mp = path + ".module";
      RotaBaxterModule<R> mod;
      mod.mdim = mdim_from(m, mp);
      mod.left = tensor_from(field(m, "left", mp), mp + ".left");
      mod.right = tensor_from(field(m, "right", mp), mp + ".right");
      mod.alphaM = mat_from(field(m, "alphaM", mp), mp + ".alphaM");
      mod.betaM = mat_from(field(m, "betaM", mp), mp + ".betaM");
      mod.RM = mat_from(field(m, "RM", mp), mp + ".RM");
      rb.module = std::move(mod);
    }
    rec.value = std::move(rb);
  } else if (k == "dendriform") {
    DendriformAlgebra<R> d;
    d.dim = dim_from(j, path);
    d.prec = tensor_from(field(j, "prec", path), path + ".prec");
    d.succ = tensor_from(field(j, "succ", path), path + ".succ");
    d.alpha = mat_from(field(j, "alpha", path), path + ".alpha");
    d.beta = mat_from(field(j, "beta", path), path + ".beta");
    rec.value = std::move(d);
  } else if (k == "dendriform-bimodule") {
    DendriformBimodule<R> d;
    const json& alg = field(j, "dendriform", path);
    std::string ap = path + ".dendriform";
    d.algebra.dim = dim_from(alg, ap);
    d.algebra.prec = tensor_from(field(alg, "prec", ap), ap + ".prec");
    d.algebra.succ = tensor_from(field(alg, "succ", ap), ap + ".succ");
    d.algebra.alpha = mat_from(field(alg, "alpha", ap), ap + ".alpha");
    d.algebra.beta = mat_from(field(alg, "beta", ap), ap + ".beta");
    d.mdim = mdim_from(j, path);
    d.prec_am = tensor_from(field(j, "prec_am", path), path + ".prec_am");
    d.succ_am = tensor_from(field(j, "succ_am", path), path + ".succ_am");
    d.prec_ma = tensor_from(field(j, "prec_ma", path), path + ".prec_ma");
    d.succ_ma = tensor_from(field(j, "succ_ma", path), path + ".succ_ma");
    d.alphaM = mat_from(field(j, "alphaM", path), path + ".alphaM");
    d.betaM = mat_from(field(j, "betaM", path), path + ".betaM");
    rec.value = std::move(d);
  } else if (k == "prelie" || k == "novikov") {
    PreLieAlgebra<R> p;
    p.dim = dim_from(j, path);
    p.circ = tensor_from(field(j, "circ", path), path + ".circ");
    p.alpha = mat_from(field(j, "alpha", path), path + ".alpha");
    p.beta = mat_from(field(j, "beta", path), path + ".beta");
    rec.value = std::move(p);
  } else if (k == "prelie-bimodule") {
    PreLieBimodule<R> p;
    const json& alg = field(j, "prelie", path);
    std::string ap = path + ".prelie";
    p.algebra.dim = dim_from(alg, ap);
    p.algebra.circ = tensor_from(field(alg, "circ", ap), ap + ".circ");
    p.algebra.alpha = mat_from(field(alg, "alpha", ap), ap + ".alpha");
    p.algebra.beta = mat_from(field(alg, "beta", ap), ap + ".beta");
    p.mdim = mdim_from(j, path);
    p.circL = tensor_from(field(j, "circL", path), path + ".circL");
    p.circR = tensor_from(field(j, "circR", path), path + ".circR");
    p.alphaM = mat_from(field(j, "alphaM", path), path + ".alphaM");
    p.betaM = mat_from(field(j, "betaM", path), path + ".betaM");
    rec.value = std::move(p);
  } else if (k == "novikov-poisson") {
    NovikovPoissonData<R> n;
    n.dim = dim_from(j, path);
    n.dot = tensor_from(field(j, "dot", path), path + ".dot");
    n.star = tensor_from(field(j, "star", path), path + ".star");
    n.alpha = mat_from(field(j, "alpha", path), path + ".alpha");
    n.beta = mat_from(field(j, "beta", path), path + ".beta");
    rec.value = std::move(n);
  } else if (k == "qt" || k == "coqt") {
    const json& kindj = field(j, "qt_kind", path);
    if (!kindj.is_string() ||
        (kindj.get<std::string>() != "quasi" && kindj.get<std::string>() != "anti"))
      throw ParseError(path + ".qt_kind: expected \"quasi\" or \"anti\"");
    QtKind qk = kindj.get<std::string>() == "quasi" ? QtKind::quasi : QtKind::anti;
    if (k == "qt") {
      QtStructure<R> q;
      q.base = algebra_from(field(j, "algebra", path), path + ".algebra");
      q.psi = mat_from(field(j, "psi", path), path + ".psi");
      q.omega = mat_from(field(j, "omega", path), path + ".omega");
      q.r = mat_from(field(j, "r", path), path + ".r");
      q.lambda = scalar_from(field(j, "lambda", path), path + ".lambda");
      q.kind = qk;
      rec.value = std::move(q);
    } else {
      CoqtStructure<R> c;
      c.base = coalgebra_from(field(j, "coalgebra", path), path + ".coalgebra");
      c.alpha = mat_from(field(j, "alpha", path), path + ".alpha");
      c.beta = mat_from(field(j, "beta", path), path + ".beta");
      c.sigma = mat_from(field(j, "sigma", path), path + ".sigma");
      c.lambda = scalar_from(field(j, "lambda", path), path + ".lambda");
      c.kind = qk;
      rec.value = std::move(c);
    }
  } else if (k == "twist-data") {
    TwistData<R> t;
    t.algebra = algebra_from(field(j, "algebra", path), path + ".algebra");
    t.alpha = mat_from(field(j, "alpha", path), path + ".alpha");
    t.beta = mat_from(field(j, "beta", path), path + ".beta");
    rec.value = std::move(t);
  } else if (k == "hopf-twist-data") {
    HopfTwistData<R> t;
    t.hopf = hopf_bimodule_from(field(j, "hopf_bimodule", path), path + ".hopf_bimodule");
    t.alphaA = mat_from(field(j, "alphaA", path), path + ".alphaA");
    t.betaA = mat_from(field(j, "betaA", path), path + ".betaA");
    t.psiA = mat_from(field(j, "psiA", path), path + ".psiA");
    t.omegaA = mat_from(field(j, "omegaA", path), path + ".omegaA");
    t.alphaM = mat_from(field(j, "alphaM", path), path + ".alphaM");
    t.betaM = mat_from(field(j, "betaM", path), path + ".betaM");
    t.psiM = mat_from(field(j, "psiM", path), path + ".psiM");
    t.omegaM = mat_from(field(j, "omegaM", path), path + ".omegaM");
    rec.value = std::move(t);
  } else if (k == "gd-data") {
    DerivationData<R> g;
    g.algebra = algebra_from(field(j, "algebra", path), path + ".algebra");
    g.lambda = scalar_from(field(j, "lambda", path), path + ".lambda");
    g.D = mat_from(field(j, "D", path), path + ".D");
    g.xi = mat_from(field(j, "xi", path), path + ".xi");
    if (j.contains("zeta")) g.zeta = mat_from(j["zeta"], path + ".zeta");
    if (j.contains("iota")) g.iota = mat_from(j["iota"], path + ".iota");
    g.kappa = j.contains("kappa") ? scalar_from(j["kappa"], path + ".kappa") : R(0);
    rec.value = std::move(g);
  } else {
    throw UnknownKindError("unknown record kind '" + k + "'");
  }
  return rec;
}

std::string report_to_json(const ViolationReport<R>& rep) {
  json j;
  j["passed"] = rep.passed();
  j["total_violations"] = rep.total_violations();
  json axioms = json::array();
  for (const auto& a : rep.axioms) {
    json aj;
    aj["axiom_id"] = a.axiom_id;
    aj["passed"] = a.passed();
    aj["total_violations"] = a.total_violations;
    json ws = json::array();
    for (const auto& w : a.witnesses) {
      json wj;
      wj["index"] = w.index;
      wj["lhs"] = vec_json(w.lhs);
      wj["rhs"] = vec_json(w.rhs);
      wj["residual"] = vec_json(w.residual);
      ws.push_back(std::move(wj));
    }
    aj["witnesses"] = std::move(ws);
    axioms.push_back(std::move(aj));
  }
  j["axioms"] = std::move(axioms);
  return j.dump(2) + "\n";
}

std::string report_to_text(const ViolationReport<R>& rep) {
  std::ostringstream os;
  for (const auto& a : rep.axioms) {
    os << (a.passed() ? "PASS" : "FAIL") << "  " << a.axiom_id;
    if (!a.passed()) {
      os << "  (" << a.total_violations << " violating basis tuple"
         << (a.total_violations == 1 ? "" : "s") << ")";
      for (const auto& w : a.witnesses) {
        os << "\n      at (";
        for (size_t i = 0; i < w.index.size(); ++i)
          os << (i ? "," : "") << w.index[i];
        os << ") residual [";
        for (size_t i = 0; i < w.residual.size(); ++i)
          os << (i ? ", " : "") << scalar_to_string(w.residual[i]);
        os << "]";
      }
    }
    os << "\n";
  }
  os << (rep.passed() ? "OK" : "VIOLATIONS") << ": " << rep.axioms.size()
     << " axiom(s) checked, " << rep.total_violations() << " total violation(s)\n";
  return os.str();
}

std::string residual_to_json(const Vec<R>& residual, int dim) {
  json j;
  j["dim"] = dim;
  bool zero = true;
  for (const R& x : residual)
    if (!(x == R(0))) {
      zero = false;
      break;
    }
  j["zero"] = zero;
  json entries = json::array();
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) {
        const R& v = residual[(size_t(a) * dim + b) * dim + c];
        if (v == R(0)) continue;
        json e;
        e["index"] = {a, b, c};
        e["value"] = scalar_to_string(v);
        entries.push_back(std::move(e));
      }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

}  // namespace bihom
