#include "toroidal/rootdata.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace toroidal {

void RankParams::validate() const {
  if (m < 1) throw std::invalid_argument("invalid rank: m must be >= 1 (got " + std::to_string(m) + ")");
  if (n < 1) throw std::invalid_argument("invalid rank: n must be >= 1 (got " + std::to_string(n) + ")");
  if (m == n)
    throw std::invalid_argument("invalid rank: A(m,n) requires m != n (got m = n = " + std::to_string(m) + ")");
}

LatticeVector LatticeVector::unit(int rank, int i, int sign) {
  if (i < 1 || i > rank) throw std::out_of_range("lattice index out of range");
  LatticeVector v = zero(rank);
  v.coords[i - 1] = sign;
  return v;
}

bool LatticeVector::is_zero() const {
  for (int c : coords)
    if (c != 0) return false;
  return true;
}

int LatticeVector::dot(const LatticeVector& o) const {
  if (o.coords.size() != coords.size()) throw std::invalid_argument("lattice rank mismatch");
  int s = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) s += coords[k] * o.coords[k];
  return s;
}

int LatticeVector::height() const {
  int h = 0;
  for (int c : coords) h += std::abs(c);
  return h;
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  if (o.coords.size() != coords.size()) throw std::invalid_argument("lattice rank mismatch");
  LatticeVector r = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] += o.coords[k];
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const { return *this + (-o); }

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

std::string LatticeVector::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(coords[k]);
  }
  return s + "]";
}

AmbientVector AmbientVector::zero(const RankParams& p) {
  return {std::vector<int>(p.m + 1, 0), std::vector<int>(p.n + 1, 0), 0};
}

AmbientVector AmbientVector::epsilon(const RankParams& p, int i) {
  if (i < 1 || i > p.m + 1) throw std::out_of_range("epsilon index out of range");
  AmbientVector v = zero(p);
  v.eps[i - 1] = 1;
  return v;
}

AmbientVector AmbientVector::delta_vec(const RankParams& p, int i) {
  if (i < 1 || i > p.n + 1) throw std::out_of_range("delta index out of range");
  AmbientVector v = zero(p);
  v.delta[i - 1] = 1;
  return v;
}

AmbientVector AmbientVector::null_vec(const RankParams& p) {
  AmbientVector v = zero(p);
  v.cbar = 1;
  return v;
}

AmbientVector AmbientVector::beta(const RankParams& p) { return delta_vec(p, p.n + 1) + null_vec(p); }

AmbientVector AmbientVector::operator+(const AmbientVector& o) const {
  if (o.eps.size() != eps.size() || o.delta.size() != delta.size())
    throw std::invalid_argument("ambient rank mismatch");
  AmbientVector r = *this;
  for (std::size_t k = 0; k < eps.size(); ++k) r.eps[k] += o.eps[k];
  for (std::size_t k = 0; k < delta.size(); ++k) r.delta[k] += o.delta[k];
  r.cbar += o.cbar;
  return r;
}

AmbientVector AmbientVector::operator-(const AmbientVector& o) const { return *this + (-o); }

AmbientVector AmbientVector::operator-() const {
  AmbientVector r = *this;
  for (int& c : r.eps) c = -c;
  for (int& c : r.delta) c = -c;
  r.cbar = -r.cbar;
  return r;
}

std::string AmbientVector::to_string() const {
  std::string s;
  auto term = [&s](int c, const std::string& name) {
    if (c == 0) return;
    if (s.empty()) {
      if (c == -1) s += "-";
      else if (c != 1) s += std::to_string(c) + "*";
    } else {
      s += c < 0 ? " - " : " + ";
      if (std::abs(c) != 1) s += std::to_string(std::abs(c)) + "*";
    }
    s += name;
  };
  for (std::size_t k = 0; k < eps.size(); ++k) term(eps[k], "eps" + std::to_string(k + 1));
  for (std::size_t k = 0; k < delta.size(); ++k) term(delta[k], "delta" + std::to_string(k + 1));
  term(cbar, "cbar");
  return s.empty() ? "0" : s;
}

int ambient_form(const AmbientVector& u, const AmbientVector& v) {
  if (u.eps.size() != v.eps.size() || u.delta.size() != v.delta.size())
    throw std::invalid_argument("ambient rank mismatch");
  int s = 0;
  for (std::size_t k = 0; k < u.eps.size(); ++k) s += u.eps[k] * v.eps[k];
  for (std::size_t k = 0; k < u.delta.size(); ++k) s -= u.delta[k] * v.delta[k];
  return s;
}

AmbientVector simple_root(const RankParams& p, int i) {
  if (i < 0 || i > p.m + p.n + 1) throw std::out_of_range("simple root index out of range");
  if (i == 0) return AmbientVector::beta(p) - AmbientVector::epsilon(p, 1);
  if (i <= p.m) return AmbientVector::epsilon(p, i) - AmbientVector::epsilon(p, i + 1);
  if (i == p.m + 1) return AmbientVector::epsilon(p, p.m + 1) - AmbientVector::delta_vec(p, 1);
  const int k = i - p.m - 1;
  return AmbientVector::delta_vec(p, k) - AmbientVector::delta_vec(p, k + 1);
}

int cartan_pairing(const RankParams& p, int i, int j) {
  return ambient_form(simple_root(p, i), simple_root(p, j));
}

int symmetrizer(const RankParams& p, int i) {
  if (i < 0 || i > p.m + p.n + 1) throw std::out_of_range("node index out of range");
  return i <= p.m ? 1 : -1;
}

int cartan_entry(const RankParams& p, int i, int j) {
  return cartan_pairing(p, i, j) * symmetrizer(p, i);
}

bool is_odd_node(const RankParams& p, int i) { return i == 0 || i == p.m + 1; }

int cocycle(const LatticeVector& a, const LatticeVector& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("lattice rank mismatch");
  long parity = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) parity += static_cast<long>(a.coords[i]) * b.coords[j];
  return (parity & 1) ? -1 : 1;
}

BosonLabel BosonLabel::from_code(int code) {
  const bool dual = code >= 1024;
  const int rest = code - (dual ? 1024 : 0);
  return {rest == 1023 ? 0 : rest, dual};
}

std::string BosonLabel::to_string() const {
  std::string s = is_cbar() ? "cbar" : "d" + std::to_string(base);
  return dual ? s + "*" : s;
}

int weyl_pairing(const BosonLabel& u, const BosonLabel& v) {
  if (u.dual == v.dual) return 0;
  // Only delta_k has a nonzero square; cbar pairs trivially with everything.
  if (u.is_cbar() || v.is_cbar() || u.base != v.base) return 0;
  const int form = -1;  // (delta_k, delta_k)
  return u.dual ? form : -form;
}

std::string rootdata_dump(const RankParams& p) {
  p.validate();
  std::ostringstream out;
  const int N = p.num_nodes();
  out << "A(" << p.m << "," << p.n << ")^(1) distinguished simple roots\n";
  for (int i = 0; i < N; ++i)
    out << "  alpha" << i << " = " << simple_root(p, i).to_string() << (is_odd_node(p, i) ? "   (odd)" : "")
        << "\n";
  auto table = [&](const char* title, int size, auto&& f) {
    out << title << "\n";
    for (int i = 0; i < size; ++i) {
      out << " ";
      for (int j = 0; j < size; ++j) {
        std::string c = std::to_string(f(i, j));
        out << std::string(4 - c.size(), ' ') << c;
      }
      out << "\n";
    }
  };
  table("symmetrized form (alpha_i, alpha_j)", N, [&](int i, int j) { return cartan_pairing(p, i, j); });
  out << "symmetrizer d = (";
  for (int i = 0; i < N; ++i) out << (i ? "," : "") << symmetrizer(p, i);
  out << ")\n";
  table("Cartan matrix a_ij = (alpha_i, alpha_j)/d_i", N, [&](int i, int j) { return cartan_entry(p, i, j); });
  const int r = p.lattice_rank();
  table("cocycle F(eps_i, eps_j)", r, [&](int i, int j) {
    return cocycle(LatticeVector::unit(r, i + 1), LatticeVector::unit(r, j + 1));
  });
  return out.str();
}

}  // namespace toroidal
