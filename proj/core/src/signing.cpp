#include "cubesign/signing.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubesign/group.hpp"

namespace cubesign {

std::string UnitEntry::str() const {
  switch (k_) {
    case 0: return "+1";
    case 1: return "+i";
    case 2: return "-1";
    default: return "-i";
  }
}

UnitEntry UnitEntry::parse(const std::string& s) {
  if (s == "+1") return UnitEntry(0);
  if (s == "+i") return UnitEntry(1);
  if (s == "-1") return UnitEntry(2);
  if (s == "-i") return UnitEntry(3);
  throw std::invalid_argument("UnitEntry: unrecognized entry '" + s + "'");
}

namespace {

auto find_col(auto& row, std::uint32_t v) {
  return std::find_if(row.begin(), row.end(),
                      [v](const auto& p) { return p.first == v; });
}

}  // namespace

void SigningMatrix::set_entry(std::uint32_t u, std::uint32_t v, UnitEntry e) {
  if (u == v) throw std::invalid_argument("SigningMatrix: diagonal entry");
  auto put = [this](std::uint32_t r, std::uint32_t c, UnitEntry val) {
    auto& row = rows_[r];
    auto it = find_col(row, c);
    if (it != row.end()) {
      it->second = val;
    } else {
      row.emplace_back(c, val);
    }
  };
  put(u, v, e);
  put(v, u, e.conj());
}

void SigningMatrix::add_entry(std::uint32_t u, std::uint32_t v, UnitEntry e) {
  if (u == v) throw std::invalid_argument("SigningMatrix: diagonal entry");
  auto acc = [this](std::uint32_t r, std::uint32_t c, UnitEntry val) {
    auto& row = rows_[r];
    auto it = find_col(row, c);
    if (it == row.end()) {
      row.emplace_back(c, val);
      return;
    }
    Gaussian sum = it->second.to_gaussian() + val.to_gaussian();
    if (sum.is_zero()) {
      row.erase(it);
      return;
    }
    throw std::invalid_argument(
        "SigningMatrix: overlapping entries do not stay on the unit set");
  };
  acc(u, v, e);
  acc(v, u, e.conj());
}

bool SigningMatrix::has_entry(std::uint32_t u, std::uint32_t v) const {
  return find_col(rows_[u], v) != rows_[u].end();
}

UnitEntry SigningMatrix::entry(std::uint32_t u, std::uint32_t v) const {
  auto it = find_col(rows_[u], v);
  if (it == rows_[u].end()) {
    throw std::out_of_range("SigningMatrix: entry not present");
  }
  return it->second;
}

std::size_t SigningMatrix::nonzero_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

bool SigningMatrix::all_real() const {
  for (const auto& row : rows_) {
    for (const auto& [col, e] : row) {
      (void)col;
      if (!e.is_real()) return false;
    }
  }
  return true;
}

void SigningMatrix::sort_rows() {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
}

std::string SigningReport::eigenvalue_statement() const {
  if (!pass() || degree == 0) return "";
  return "eigenvalues are +-sqrt(" + std::to_string(degree) +
         "), each with multiplicity 2^" + std::to_string(dim - 1);
}

SigningReport verify_unitary_signing(const SigningMatrix& m,
                                     const CubelikeGraph& g) {
  SigningReport rep;
  rep.dim = g.n;
  rep.degree = g.degree();
  if (m.dim() != g.n) {
    rep.witness = "dimension mismatch between matrix and graph";
    return rep;
  }

  std::uint32_t nverts = std::uint32_t{1} << g.n;

  // (a) support equals the edge set, (b) entries are unit by representation
  // (every stored entry is a fourth root of unity), (c) Hermitian.
  rep.entries_unit = true;
  rep.support_ok = true;
  rep.hermitian_ok = true;
  for (std::uint32_t u = 0; u < nverts && rep.support_ok && rep.hermitian_ok;
       ++u) {
    if (m.row(u).size() != static_cast<std::size_t>(g.degree())) {
      rep.support_ok = false;
      rep.witness = "row " + std::to_string(u) + " has " +
                    std::to_string(m.row(u).size()) + " entries, expected d";
      break;
    }
    for (const auto& [v, e] : m.row(u)) {
      std::uint32_t diff = u ^ v;
      bool is_edge = false;
      for (const auto& s : g.s.gens) {
        if (s.bits == diff) {
          is_edge = true;
          break;
        }
      }
      if (!is_edge || u == v) {
        rep.support_ok = false;
        rep.witness = "entry (" + std::to_string(u) + "," + std::to_string(v) +
                      ") lies outside the edge set";
        break;
      }
      if (!m.has_entry(v, u) || !(m.entry(v, u) == e.conj())) {
        rep.hermitian_ok = false;
        rep.witness = "entries (" + std::to_string(u) + "," +
                      std::to_string(v) + ") and transpose are not conjugate";
        break;
      }
    }
  }
  if (!rep.support_ok || !rep.hermitian_ok) return rep;

  // (d) M^2 = dI, exact sparse Gaussian-integer multiplication.
  rep.square_ok = true;
  std::vector<Gaussian> acc(nverts);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t u = 0; u < nverts && rep.square_ok; ++u) {
    touched.clear();
    for (const auto& [w, a] : m.row(u)) {
      for (const auto& [v, b] : m.row(w)) {
        if (acc[v].is_zero()) touched.push_back(v);
        acc[v] = acc[v] + a.to_gaussian() * b.to_gaussian();
      }
    }
    for (std::uint32_t v : touched) {
      Gaussian want = (v == u) ? Gaussian{g.degree(), 0} : Gaussian{0, 0};
      if (!(acc[v] == want)) {
        rep.square_ok = false;
        rep.witness = "rows " + std::to_string(u) + " and " +
                      std::to_string(v) + " are not orthogonal";
        break;
      }
      acc[v] = Gaussian{};
    }
    if (!rep.square_ok) {
      for (std::uint32_t v : touched) acc[v] = Gaussian{};
    }
    // diagonal may be untouched only when the row is empty (d = 0)
    if (rep.square_ok && g.degree() > 0 &&
        std::find(touched.begin(), touched.end(), u) == touched.end()) {
      rep.square_ok = false;
      rep.witness = "row " + std::to_string(u) + " has zero norm";
    }
  }
  rep.all_real = m.all_real();
  return rep;
}

bool matrices_anticommute(const SigningMatrix& a, const SigningMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matrices_anticommute: dimension mismatch");
  }
  std::uint32_t nverts = std::uint32_t{1} << a.dim();
  std::vector<Gaussian> acc(nverts);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t u = 0; u < nverts; ++u) {
    touched.clear();
    auto accumulate = [&](const SigningMatrix& x, const SigningMatrix& y) {
      for (const auto& [w, p] : x.row(u)) {
        for (const auto& [v, q] : y.row(w)) {
          if (acc[v].is_zero()) touched.push_back(v);
          acc[v] = acc[v] + p.to_gaussian() * q.to_gaussian();
        }
      }
    };
    accumulate(a, b);
    accumulate(b, a);
    bool ok = true;
    for (std::uint32_t v : touched) {
      if (!acc[v].is_zero()) ok = false;
      acc[v] = Gaussian{};
    }
    if (!ok) return false;
  }
  return true;
}

CubelikeGraph tensor_graph(const CubelikeGraph& g1, const CubelikeGraph& g2) {
  int n = g1.n + g2.n;
  std::vector<GroupVector> gens;
  for (const auto& s1 : g1.s.gens) {
    for (const auto& s2 : g2.s.gens) {
      gens.emplace_back((s1.bits << g2.n) | s2.bits, n);
    }
  }
  return CubelikeGraph(n, GeneratorSet(n, std::move(gens)));
}

SigningMatrix tensor_signing(const SigningMatrix& m1, const CubelikeGraph& g1,
                             const SigningMatrix& m2, const CubelikeGraph& g2) {
  if (!verify_unitary_signing(m1, g1).pass() ||
      !verify_unitary_signing(m2, g2).pass()) {
    throw std::invalid_argument(
        "tensor_signing: inputs must be verified unitary signings");
  }
  SigningMatrix out(g1.n + g2.n);
  std::uint32_t n1 = std::uint32_t{1} << g1.n;
  std::uint32_t n2 = std::uint32_t{1} << g2.n;
  for (std::uint32_t u1 = 0; u1 < n1; ++u1) {
    for (const auto& [v1, e1] : m1.row(u1)) {
      for (std::uint32_t u2 = 0; u2 < n2; ++u2) {
        for (const auto& [v2, e2] : m2.row(u2)) {
          std::uint32_t u = (u1 << g2.n) | u2;
          std::uint32_t v = (v1 << g2.n) | v2;
          if (u < v) out.set_entry(u, v, e1 * e2);
        }
      }
    }
  }
  out.sort_rows();
  return out;
}

}  // namespace cubesign
