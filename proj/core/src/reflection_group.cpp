#include "bipoly/reflection_group.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <queue>
#include <regex>

namespace bipoly {
namespace {

Eigen::MatrixXi irreducible_coxeter(const std::string& token) {
  static const std::regex dihedral(R"(I2\((\d+)\))");
  std::smatch m;
  if (token == "I1") return Eigen::MatrixXi::Ones(1, 1);
  if (std::regex_match(token, m, dihedral)) {
    const int k = std::stoi(m[1].str());
    if (k < 2) throw std::invalid_argument("I2(k) requires k >= 2");
    Eigen::MatrixXi c(2, 2);
    c << 1, k, k, 1;
    return c;
  }
  int m12 = 0;
  if (token == "A3") m12 = 3;
  else if (token == "B3") m12 = 4;
  else if (token == "H3") m12 = 5;
  else throw std::invalid_argument("unknown reflection group '" + token + "'");
  Eigen::MatrixXi c(3, 3);
  c << 1, m12, 2,
       m12, 1, 3,
       2, 3, 1;
  return c;
}

struct MatrixKeyLess {
  bool operator()(const std::vector<long long>& a, const std::vector<long long>& b) const { return a < b; }
};

std::vector<long long> key_of(const Eigen::MatrixXd& m) {
  std::vector<long long> k(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i) k[static_cast<std::size_t>(i)] = std::llround(m(i) * 1e6);
  return k;
}

}  // namespace

GroupDescriptor parse_group(const std::string& name) {
  std::vector<Eigen::MatrixXi> blocks;
  std::size_t start = 0;
  while (true) {
    const auto plus = name.find('+', start);
    const std::string token = name.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (token.empty()) throw std::invalid_argument("malformed group name '" + name + "'");
    blocks.push_back(irreducible_coxeter(token));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  int rank = 0;
  for (const auto& b : blocks) rank += static_cast<int>(b.rows());
  Eigen::MatrixXi cox = Eigen::MatrixXi::Constant(rank, rank, 2);
  int off = 0;
  for (const auto& b : blocks) {
    const auto r = b.rows();
    cox.block(off, off, r, r) = b;
    off += static_cast<int>(r);
  }
  Eigen::MatrixXd gram(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) gram(i, j) = i == j ? 1.0 : -std::cos(std::numbers::pi / cox(i, j));
  }
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("group '" + name + "' is not finite");
  const Eigen::MatrixXd L = llt.matrixL();
  GroupDescriptor g{name, rank, {}, cox};
  for (int i = 0; i < rank; ++i) g.roots.emplace_back(L.row(i).transpose());
  return g;
}

Eigen::MatrixXd reflection(const Point& root) {
  return Eigen::MatrixXd::Identity(root.size(), root.size()) - 2.0 * root * root.transpose();
}

std::vector<Eigen::MatrixXd> group_elements(const GroupDescriptor& g, std::size_t cap) {
  std::vector<Eigen::MatrixXd> gens;
  for (const auto& r : g.roots) gens.push_back(reflection(r));
  std::vector<Eigen::MatrixXd> elements{Eigen::MatrixXd::Identity(g.rank, g.rank)};
  std::map<std::vector<long long>, std::size_t, MatrixKeyLess> seen{{key_of(elements[0]), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      Eigen::MatrixXd next = s * elements[head];
      if (seen.emplace(key_of(next), elements.size()).second) {
        if (elements.size() >= cap) {
          throw GroupTooLargeError("group " + g.name + " exceeds " + std::to_string(cap) + " elements");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

Point default_seed(const GroupDescriptor& g) {
  Eigen::MatrixXd R(g.rank, g.rank);
  for (int i = 0; i < g.rank; ++i) R.row(i) = g.roots[static_cast<std::size_t>(i)].transpose();
  return R.fullPivLu().solve(Eigen::VectorXd::Ones(g.rank));
}

}  // namespace bipoly
