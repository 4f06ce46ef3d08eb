#include "wlab/background.hpp"

#include "wlab/errors.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace wlab {

namespace {

double kron(int a, int b) { return a == b ? 1.0 : 0.0; }

void check_symmetric(const Mat3& m, const char* what) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + m.cwiseAbs().maxCoeff()))
    throw ValidationError(std::string(what) + " must be symmetric");
}

void check_dric_symmetric(const Ten3& d) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (std::abs(d[a][b][c] - d[b][a][c]) > 1e-12)
          throw ValidationError("dric must be symmetric in its first two slots");
}

}  // namespace

Ten4 riemann_from_ricci(const Mat3& ric, double scal) {
  check_symmetric(ric, "ric");
  if (std::abs(ric.trace() - scal) > 1e-10 * (1.0 + ric.cwiseAbs().maxCoeff()))
    throw ValidationError("scal must equal the trace of ric");
  Ten4 r = zero_ten4();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int e = 0; e < 3; ++e)
          r[a][b][c][e] = kron(a, c) * ric(b, e) - kron(a, e) * ric(b, c) +
                          kron(b, e) * ric(a, c) - kron(b, c) * ric(a, e) +
                          0.5 * scal * (kron(a, e) * kron(b, c) - kron(a, c) * kron(b, e));
  return r;
}

Ten5 driemann_from_dricci(const Ten3& dric, const Vec3& dscal) {
  check_dric_symmetric(dric);
  Ten5 dr = zero_ten5();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int e = 0; e < 3; ++e)
          for (int f = 0; f < 3; ++f)
            dr[a][b][c][e][f] =
                kron(a, c) * dric[b][e][f] - kron(a, e) * dric[b][c][f] +
                kron(b, e) * dric[a][c][f] - kron(b, c) * dric[a][e][f] +
                0.5 * dscal[f] * (kron(a, e) * kron(b, c) - kron(a, c) * kron(b, e));
  return dr;
}

double riemann_symmetry_defect(const Ten4& r) {
  double worst = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int e = 0; e < 3; ++e) {
          worst = std::max(worst, std::abs(r[a][b][c][e] + r[b][a][c][e]));
          worst = std::max(worst, std::abs(r[a][b][c][e] + r[a][b][e][c]));
          worst = std::max(worst, std::abs(r[a][b][c][e] - r[c][e][a][b]));
          // first Bianchi: R_a[bce] cyclic sum
          worst = std::max(worst,
                           std::abs(r[a][b][c][e] + r[a][c][e][b] + r[a][e][b][c]));
        }
  return worst;
}

CurvatureBackground CurvatureBackground::from_ricci(const Mat3& ric, const Ten3& dric) {
  CurvatureBackground bg;
  check_symmetric(ric, "ric");
  check_dric_symmetric(dric);
  bg.ric = 0.5 * (ric + ric.transpose());
  bg.dric = dric;
  bg.scal = bg.ric.trace();
  for (int c = 0; c < 3; ++c) {
    double t = 0.0;
    for (int a = 0; a < 3; ++a) t += dric[a][a][c];
    bg.dscal[c] = t;
  }
  bg.riemann = riemann_from_ricci(bg.ric, bg.scal);
  bg.driemann = driemann_from_dricci(bg.dric, bg.dscal);
  return bg;
}

CurvatureBackground CurvatureBackground::flat() {
  return CurvatureBackground{};
}

CurvatureBackground CurvatureBackground::space_form(double k) {
  return from_ricci(2.0 * k * Mat3::Identity(), zero_ten3());
}

CurvatureBackground CurvatureBackground::gradient(const Vec3& s) {
  // dric = (3/10) d_ab s_c + (1/20)(d_ac s_b + d_bc s_a):
  // trace over (a,b) gives s, and div Ric = s/2 (contracted Bianchi).
  Ten3 d = zero_ten3();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        d[a][b][c] = 0.3 * kron(a, b) * s[c] +
                     0.05 * (kron(a, c) * s[b] + kron(b, c) * s[a]);
  return from_ricci(Mat3::Zero(), d);
}

bool CurvatureBackground::is_flat() const {
  double m = ric.cwiseAbs().maxCoeff();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) m = std::max(m, std::abs(dric[a][b][c]));
  return m == 0.0;
}

namespace {

std::map<std::string, std::vector<double>> parse_kv(std::istream& in,
                                                    std::string* preset) {
  std::map<std::string, std::vector<double>> kv;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    std::istringstream rest(line.substr(eq + 1));
    if (key == "preset") {
      rest >> *preset;
      continue;
    }
    std::vector<double> vals;
    double v;
    while (rest >> v) vals.push_back(v);
    kv[key] = vals;
  }
  return kv;
}

}  // namespace

CurvatureBackground parse_background(std::istream& in) {
  std::string preset;
  auto kv = parse_kv(in, &preset);

  if (preset == "flat") return CurvatureBackground::flat();
  if (preset == "space_form") {
    auto it = kv.find("k");
    if (it == kv.end() || it->second.size() != 1)
      throw ValidationError("space_form preset needs k = <number>");
    return CurvatureBackground::space_form(it->second[0]);
  }
  if (preset == "gradient") {
    auto it = kv.find("s");
    if (it == kv.end() || it->second.size() != 3)
      throw ValidationError("gradient preset needs s = <s1> <s2> <s3>");
    return CurvatureBackground::gradient(Vec3(it->second[0], it->second[1], it->second[2]));
  }
  if (!preset.empty())
    throw ValidationError("unknown background preset '" + preset + "'");

  auto rit = kv.find("ric");
  if (rit == kv.end() || rit->second.size() != 6)
    throw ValidationError("background needs ric = <6 upper-triangle values>");
  const auto& rv = rit->second;
  Mat3 ric;
  ric << rv[0], rv[1], rv[2],
         rv[1], rv[3], rv[4],
         rv[2], rv[4], rv[5];

  Ten3 dric = zero_ten3();
  auto dit = kv.find("dric");
  if (dit != kv.end()) {
    if (dit->second.size() != 18)
      throw ValidationError("dric needs 18 values (6 upper-triangle blocks x 3)");
    int k = 0;
    for (int c = 0; c < 3; ++c) {
      static const int ia[6] = {0, 0, 0, 1, 1, 2};
      static const int ib[6] = {0, 1, 2, 1, 2, 2};
      for (int u = 0; u < 6; ++u, ++k) {
        dric[ia[u]][ib[u]][c] = dit->second[k];
        dric[ib[u]][ia[u]][c] = dit->second[k];
      }
    }
  }

  auto bg = CurvatureBackground::from_ricci(ric, dric);
  auto sit = kv.find("scal_check");
  if (sit != kv.end() && sit->second.size() == 1) {
    if (std::abs(bg.scal - sit->second[0]) > 1e-9 * (1.0 + std::abs(bg.scal)))
      throw ValidationError("scal_check does not match trace(ric)");
  }
  return bg;
}

CurvatureBackground load_background(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open background file: " + path);
  return parse_background(in);
}

}  // namespace wlab
