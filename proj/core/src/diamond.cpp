#include "balflip/diamond.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "balflip/errors.hpp"
#include "balflip/moves.hpp"

namespace balflip {

namespace {

void check_index_set(int d, const IndexSet& I) {
  if (I.empty()) throw Error(ErrorKind::EmptyIndexSet, "index set is empty");
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 0 || I[k] > d + 1)
      throw Error(ErrorKind::BadParams, "index " + std::to_string(I[k]) + " outside 0.." + std::to_string(d + 1));
    if (k && I[k] <= I[k - 1]) throw Error(ErrorKind::BadParams, "index set must be sorted and distinct");
  }
}

IndexSet normalized(IndexSet I) {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  return I;
}

// Vertex of f at position j (Base(j) or Sub(j)).
Vertex at_position(const Face& f, int j) {
  for (const auto& v : f)
    if (v.kind() == Vertex::Kind::Indexed && v.index() == j) return v;
  throw Error(ErrorKind::BadParams, "no vertex at position " + std::to_string(j) + " in " + face_to_string(f));
}

void check_sequence(int d, const std::vector<int>& seq) {
  if (seq.empty()) throw Error(ErrorKind::InvalidSequence, "empty sequence");
  std::set<int> seen;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] < 0 || seq[k] > d + 1 || !seen.insert(seq[k]).second)
      throw Error(ErrorKind::InvalidSequence, "entries must be distinct and in 0..d+1");
    if (k >= 2 && seq[k] <= seq[k - 1])
      throw Error(ErrorKind::InvalidSequence, "i_2 < ... < i_k required");
  }
}

Face base_range(int from, int to) {  // {from, ..., to-1}
  Face f;
  for (int j = from; j < to; ++j) f.push_back(Vertex::base(j));
  return f;
}

}  // namespace

std::string index_set_to_string(const IndexSet& I) {
  std::string s;
  for (std::size_t k = 0; k < I.size(); ++k) s += (k ? "," : "") + std::to_string(I[k]);
  return s;
}

IndexSet parse_index_set(std::string_view s) {
  IndexSet I;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    auto tok = s.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      int x = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw Error(ErrorKind::ParseError, "bad index '" + std::string(tok) + "'");
      I.push_back(x);
    }
    start = end + 1;
  }
  return normalized(I);
}

Complex cross_polytope(int d) {
  if (d < 0) throw Error(ErrorKind::BadParams, "dimension must be >= 0");
  std::vector<Face> fs;
  for (unsigned long mask = 0; mask < (1ul << (d + 1)); ++mask) {
    Face f;
    for (int i = 0; i <= d; ++i) f.push_back((mask >> i) & 1 ? Vertex::sub(i) : Vertex::base(i));
    fs.push_back(std::move(f));
  }
  return Complex::from_facets(std::move(fs));
}

Complex simplex_boundary(int d) {
  if (d < 0) throw Error(ErrorKind::BadParams, "dimension must be >= 0");
  std::vector<Face> fs;
  for (int i = 0; i <= d + 1; ++i) {
    Face f = base_range(0, d + 2);
    f.erase(f.begin() + i);
    fs.push_back(std::move(f));
  }
  return Complex::from_facets(std::move(fs));
}

Complex gamma(int d, const IndexSet& I) {
  const IndexSet J = normalized(I);
  check_index_set(d, J);
  std::vector<Face> fs;
  for (int i : J) {
    Face f = base_range(0, d + 2);
    f.erase(f.begin() + i);
    fs.push_back(std::move(f));
  }
  return Complex::from_facets(std::move(fs));
}

Complex diamond(const Complex& c, int d) {
  const Complex sphere = simplex_boundary(d);
  if (c.is_empty() || !c.is_pure() || c.dim() != d)
    throw Error(ErrorKind::NotSubcomplexOfSimplexBoundary, "expected a pure d-dimensional complex");
  for (const auto& f : c.facets())
    if (!sphere.has_facet(f))
      throw Error(ErrorKind::NotSubcomplexOfSimplexBoundary, face_to_string(f) + " is not a facet of the simplex boundary");
  Complex cur = c;
  for (int i = 0; i <= d; ++i) {
    const Face fi = base_range(i + 1, d + 2);
    if (cur.contains(fi)) cur = stellar_subdivide(cur, fi, Vertex::sub(i));
  }
  return cur;
}

Complex diamond_closed_form(int d, const IndexSet& I) {
  const IndexSet J = normalized(I);
  check_index_set(d, J);
  std::vector<Face> fs;
  for (int i : J) {
    if (i == d + 1) {
      fs.push_back(base_range(0, d + 1));
      continue;
    }
    Face prefix = base_range(0, i);
    prefix.push_back(Vertex::sub(i));
    const int free = d - i;
    for (unsigned long mask = 0; mask < (1ul << free); ++mask) {
      Face f = prefix;
      for (int j = 0; j < free; ++j)
        f.push_back((mask >> j) & 1 ? Vertex::sub(i + 1 + j) : Vertex::base(i + 1 + j));
      fs.push_back(std::move(f));
    }
  }
  return Complex::from_facets(std::move(fs));
}

IndexSet canonicalize(int d, const IndexSet& I) {
  IndexSet J = normalized(I);
  check_index_set(d, J);
  if (static_cast<int>(J.size()) == d + 2) return J;
  if (J.back() != d + 1) return J;
  int start = d + 1;
  while (std::binary_search(J.begin(), J.end(), start - 1)) --start;
  const int ell = start - 1;
  J.erase(std::lower_bound(J.begin(), J.end(), start), J.end());
  J.push_back(ell);
  return normalized(J);
}

IndexSet complement_index(int d, const IndexSet& I) {
  const IndexSet J = normalized(I);
  check_index_set(d, J);
  IndexSet rest;
  for (int i = 0; i <= d + 1; ++i)
    if (!std::binary_search(J.begin(), J.end(), i)) rest.push_back(i);
  if (rest.empty()) throw Error(ErrorKind::EmptyIndexSet, "complement of the full index set is empty");
  return canonicalize(d, rest);
}

Face DiamondFacet::expand() const {
  if (ell == d + 1) return base_range(0, d + 1);
  Face f = base_range(0, ell);
  f.push_back(Vertex::sub(ell));
  for (int j = 0; j < d - ell; ++j)
    f.push_back(sub[j] ? Vertex::sub(ell + 1 + j) : Vertex::base(ell + 1 + j));
  return make_face(std::move(f));
}

DiamondFacet DiamondFacet::from_face(int d, const Face& f) {
  DiamondFacet out;
  out.d = d;
  if (static_cast<int>(f.size()) != d + 1) throw Error(ErrorKind::BadParams, face_to_string(f) + " is not a diamond facet");
  out.ell = d + 1;
  for (int j = 0; j <= d; ++j)
    if (at_position(f, j).is_sub()) {
      out.ell = j;
      break;
    }
  for (int j = out.ell + 1; j <= d; ++j) out.sub.push_back(at_position(f, j).is_sub());
  if (out.expand() != f) throw Error(ErrorKind::BadParams, face_to_string(f) + " is not a diamond facet");
  return out;
}

CharVector char_vector(const DiamondFacet& base, const DiamondFacet& g) {
  if (base.d != g.d || base.ell != g.ell)
    throw Error(ErrorKind::MismatchedGamma, "facets belong to different blocks");
  CharVector cv;
  for (std::size_t j = 0; j < base.sub.size(); ++j) {
    cv.bits.push_back(base.sub[j] == g.sub[j] ? 0 : 1);
    cv.degree += cv.bits.back();
  }
  return cv;
}

bool deg_lex_less(const DiamondFacet& base, const DiamondFacet& a, const DiamondFacet& b) {
  const auto ca = char_vector(base, a);
  const auto cb = char_vector(base, b);
  if (ca.degree != cb.degree) return ca.degree < cb.degree;
  return ca.bits < cb.bits;
}

std::vector<DiamondFacet> deg_lex_order(const DiamondFacet& base) {
  std::vector<DiamondFacet> out;
  const int free = static_cast<int>(base.sub.size());
  for (unsigned long mask = 0; mask < (1ul << free); ++mask) {
    DiamondFacet g = base;
    for (int j = 0; j < free; ++j) g.sub[j] = (mask >> j) & 1;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [&](const DiamondFacet& a, const DiamondFacet& b) { return deg_lex_less(base, a, b); });
  return out;
}

namespace {

// m(ℓ): the earlier index i_j (j < ℓ) that is the smallest one above i_ℓ,
// or i_ℓ itself when no earlier index is larger.
int m_value(const std::vector<int>& seq, int ell) {
  const int il = seq[ell - 1];
  int best = il;
  bool found = false;
  for (int j = 0; j < ell - 1; ++j)
    if (seq[j] > il && (!found || seq[j] < best)) {
      best = seq[j];
      found = true;
    }
  return best;
}

DiamondFacet formula_initial_facet(int d, const std::vector<int>& seq, int ell) {
  const int il = seq[ell - 1];
  if (il == d + 1) return DiamondFacet{d, d + 1, {}};
  const int im = m_value(seq, ell);
  DiamondFacet f{d, il, std::vector<bool>(d - il, false)};
  // Positions il+1 .. im-1 are Base, im .. d are Sub.
  for (int j = il + 1; j <= d; ++j) f.sub[j - il - 1] = (j >= im);
  return f;
}

}  // namespace

DiamondFacet initial_facet(int d, const std::vector<int>& seq, int ell, const std::optional<Face>& hint) {
  check_sequence(d, seq);
  if (ell < 1 || ell > static_cast<int>(seq.size()))
    throw Error(ErrorKind::InvalidSequence, "block number out of range");
  if (ell == 1) {
    if (!hint) throw Error(ErrorKind::HintMissing, "the first block needs its entry facet");
    if (!diamond_closed_form(d, {seq[0]}).has_facet(*hint))
      throw Error(ErrorKind::HintNotAFacet, face_to_string(*hint) + " is not a facet of the first block");
    return DiamondFacet::from_face(d, *hint);
  }
  return formula_initial_facet(d, seq, ell);
}

ShellingCertificate relative_shelling_order(int d, const std::vector<int>& seq, const Face& boundary_face) {
  check_sequence(d, seq);
  const int k = static_cast<int>(seq.size());
  const int i1 = seq[0];
  std::optional<Face> entry;
  const Complex first_block = diamond_closed_form(d, {i1});
  for (const auto& g : first_block.facets())
    if (is_subset(boundary_face, g)) {
      if (entry) throw Error(ErrorKind::HintNotAFacet, "boundary face lies in several first-block facets");
      entry = g;
    }
  if (!entry || static_cast<int>(boundary_face.size()) != d)
    throw Error(ErrorKind::HintNotAFacet, face_to_string(boundary_face) + " is not a ridge of a first-block facet");

  std::vector<std::vector<Face>> block_facets(k), block_restr(k);
  for (int ell = 1; ell <= k; ++ell) {
    const int il = seq[ell - 1];
    const DiamondFacet f0 = initial_facet(d, seq, ell, entry);
    const auto order = deg_lex_order(f0);
    std::set<int> smaller;  // A′ = {i_j : j < ℓ, i_j < i_ℓ}
    bool larger_before = false;
    for (int j = 0; j < ell - 1; ++j) {
      if (seq[j] < il) smaller.insert(seq[j]);
      if (seq[j] > il) larger_before = true;
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Face fi = order[i].expand();
      const auto cv = char_vector(f0, order[i]);
      Face agree;
      for (std::size_t j = 0; j < cv.bits.size(); ++j)
        if (cv.bits[j] == 0) agree.push_back(at_position(fi, il + 1 + static_cast<int>(j)));
      Face r;
      if (i == 0) {
        if (ell == 1) {
          r = boundary_face;
        } else {
          Face a0;
          for (int x : smaller) a0.push_back(Vertex::base(x));
          if (larger_before) a0.push_back(Vertex::sub(il));
          r = face_difference(fi, make_face(a0));
        }
      } else if (ell == 1) {
        r = base_range(0, il);
        r.push_back(Vertex::sub(il));
        r = face_union(make_face(r), make_face(agree));
      } else {
        int t = -1;
        for (std::size_t j = 0; j < cv.bits.size(); ++j)
          if (cv.bits[j] == 1) {
            t = il + 1 + static_cast<int>(j);
            break;
          }
        // The sub vertex drops out only when the first two blocks run downwards,
        // the first difference lies above i_1 and the block itself sits below i_1.
        const bool drop_sub = k >= 2 && seq[0] > seq[1] && t > i1 && il < i1;
        Face base;
        for (int j = 0; j < il; ++j)
          if (!smaller.count(j)) base.push_back(Vertex::base(j));
        if (!drop_sub) base.push_back(Vertex::sub(il));
        r = face_union(make_face(base), make_face(agree));
      }
      block_facets[ell - 1].push_back(fi);
      block_restr[ell - 1].push_back(make_face(r));
    }
  }
  ShellingCertificate cert;
  for (int b = k - 1; b >= 0; --b)
    for (std::size_t i = block_facets[b].size(); i-- > 0;) {
      cert.order.push_back(block_facets[b][i]);
      cert.restrictions.push_back(block_restr[b][i]);
    }
  return cert;
}

ShellingCertificate absolute_shelling_order(int d, const IndexSet& I) {
  const IndexSet J = normalized(I);
  check_index_set(d, J);
  ShellingCertificate cert;
  for (std::size_t ell = 1; ell <= J.size(); ++ell) {
    const DiamondFacet f0 = formula_initial_facet(d, J, static_cast<int>(ell));
    for (const auto& g : deg_lex_order(f0)) {
      const Face fi = g.expand();
      const auto cv = char_vector(f0, g);
      Face r;
      for (std::size_t j = 0; j + 1 < ell; ++j) r.push_back(Vertex::base(J[j]));
      for (std::size_t j = 0; j < cv.bits.size(); ++j)
        if (cv.bits[j] == 1) r.push_back(at_position(fi, f0.ell + 1 + static_cast<int>(j)));
      cert.order.push_back(fi);
      cert.restrictions.push_back(make_face(std::move(r)));
    }
  }
  return cert;
}

std::vector<long long> h_vector_formula(int d, const IndexSet& I) {
  const IndexSet J = normalized(I);
  check_index_set(d, J);
  std::vector<long long> h(d + 2, 0);
  for (int ell = 0; ell <= d + 1; ++ell)
    for (std::size_t j = 1; j <= J.size(); ++j) {
      const int top = d - J[j - 1];
      const int k = ell - static_cast<int>(j) + 1;
      // C(-1, 0) = 1 covers the single facet {0,...,d} of ⋄(Γ_{d+1}).
      h[ell] += (k == 0) ? 1 : binomial(top, k);
    }
  return h;
}

VertexMap rho_map(int d) {
  VertexMap m;
  for (int i = 0; i <= d; ++i) {
    const int j = (i + d) % (d + 1);
    m[Vertex::base(i)] = Vertex::base(j);
    m[Vertex::sub(i)] = Vertex::sub(j);
  }
  return m;
}

VertexMap sigma_map(int d) {
  VertexMap m = rho_map(d);
  for (auto& [from, to] : m)
    if (to.kind() == Vertex::Kind::Indexed && to.index() == d) to = to.partner();
  return m;
}

IndexSet shift_index_set(const IndexSet& I, int by) {
  IndexSet out;
  for (int i : I) out.push_back(i + by);
  return out;
}

RhoSigmaDecomposition decompose_rho_sigma(int d, const IndexSet& I) {
  const IndexSet J = normalized(I);
  if (d < 1 || J.empty() || J.front() < 0 || J.back() >= d)
    throw Error(ErrorKind::IndexSetViolatesPrecondition, "need d >= 1 and nonempty I ⊆ {0,...,d-1}");
  const Complex lifted = diamond_closed_form(d, shift_index_set(J, 1));
  RhoSigmaDecomposition out;
  out.rho = rho_map(d);
  out.sigma = sigma_map(d);
  out.rho_part = map_complex(lifted, out.rho);
  out.sigma_part = map_complex(lifted, out.sigma);
  out.intersection = diamond_closed_form(d - 1, J);
  return out;
}

ZeroDecomposition decompose_zero(int d, const IndexSet& I) {
  const IndexSet J = normalized(I);
  if (d < 1 || J.empty() || J.front() != 0 || J.back() > d)
    throw Error(ErrorKind::IndexSetViolatesPrecondition, "need d >= 1 and 0 ∈ I ⊆ {0,...,d}");
  ZeroDecomposition out;
  for (int i = 0; i < d; ++i) {
    out.pi[Vertex::base(i)] = Vertex::base(i + 1);
    out.pi[Vertex::sub(i)] = Vertex::sub(i + 1);
  }
  const IndexSet rest(J.begin() + 1, J.end());
  out.zero_part = diamond_closed_form(d, {0});
  if (!rest.empty()) {
    out.rest = diamond_closed_form(d, rest);
    out.intersection = map_complex(diamond_closed_form(d - 1, shift_index_set(rest, -1)), out.pi);
  }
  return out;
}

}  // namespace balflip
