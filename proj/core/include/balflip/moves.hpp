#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "balflip/coloring.hpp"
#include "balflip/complex.hpp"
#include "balflip/diamond.hpp"
#include "balflip/isomorphism.hpp"

namespace balflip {

// Smallest k such that w<k> is unused in c.
int next_fresh_index(const Complex& c);

// (c ∖ F) ∪ (⟨v⟩ ∗ ∂F ∗ lk(F)). The one-argument form uses the next fresh vertex.
Complex stellar_subdivide(const Complex& c, const Face& f);
Complex stellar_subdivide(const Complex& c, const Face& f, const Vertex& v);
// Inverse of a subdivision: lk(v) must split as ∂F′ ∗ L with F′ ∉ c.
// Without a hint F′ must be the only candidate inside V(lk(v)).
Complex stellar_weld(const Complex& c, const Vertex& v, const std::optional<Face>& hint = std::nullopt);

struct BistellarFlip {
  Face a;
  Face b;
  friend bool operator==(const BistellarFlip&, const BistellarFlip&) = default;
};

bool is_bistellar_applicable(const Complex& c, const BistellarFlip& flip);
Complex apply_bistellar(const Complex& c, const BistellarFlip& flip);
// Faces A with lk(A) = ∂B, B ∉ c, |B| <= d+1; facets pair with a fresh vertex.
std::vector<BistellarFlip> list_bistellar(const Complex& c);

// F = A ∪ R, A ∩ R = ∅.
struct ShellingMove {
  Face facet;
  Face a;
  Face r;
};

// Removes facet F after checking (1) the decomposition, (2) A interior,
// (3) ∂A ∗ ⟨R⟩ ⊆ ∂c. Throws ConditionViolated(i).
Complex shelling_move(const Complex& c, const ShellingMove& m);
// Adds F and checks the same conditions on the result.
Complex inverse_shelling(const Complex& c, const ShellingMove& m);

// Pattern ⋄(Γ_I) ⊆ 𝒞_d placed into an ambient complex by a vertex map.
struct CrossFlip {
  int d = 0;
  IndexSet index;
  VertexMap embedding;  // V(⋄(Γ_I)) -> V(ambient)
};

struct CrossFlipResult {
  Complex complex;
  // Embedding extended to all of V(𝒞_d); complement-only vertices get fresh labels.
  VertexMap extended;
  // Whether the glued-in 𝒞_d∖D is induced in the result.
  bool complement_induced = false;
  std::optional<Coloring> coloring;
};

// Image of ⋄(Γ_I) under the embedding.
Complex cross_flip_image(const CrossFlip& flip);
CrossFlipResult apply_cross_flip(const Complex& c, const CrossFlip& flip,
                                 const std::optional<Coloring>& kappa = std::nullopt);
// Color-consistent induced embeddings of ⋄(Γ_I), one per image, in facet order.
std::vector<CrossFlip> find_cross_flip_sites(const Complex& c, const Coloring& kappa, const IndexSet& I);
// Sites of several classes, concatenated in the given class order.
std::vector<CrossFlip> find_cross_flip_sites(const Complex& c, const Coloring& kappa,
                                             const std::vector<IndexSet>& classes);
// Every induced embedding, any anchor bijection, deduplicated by the map.
std::vector<CrossFlip> find_all_cross_flip_embeddings(const Complex& c, const IndexSet& I);
// Embedding fixed by the images of the anchor facet, i.e. the first facet
// of absolute_shelling_order(d, I): its k-th vertex in canonical order goes
// to anchor_image[k]. nullopt when the pattern does not extend to an
// induced copy from there.
std::optional<CrossFlip> embed_by_anchor(const Complex& c, int d, const IndexSet& I,
                                         const std::vector<Vertex>& anchor_image);
Face pattern_anchor(int d, const IndexSet& I);

// find_cross_flip_sites(c, kappa, classes), kept current across moves by
// recomputing only the anchors whose search touched a changed vertex.
class CrossFlipSiteCache {
 public:
  CrossFlipSiteCache(const Complex& c, const Coloring& kappa, std::vector<IndexSet> classes);
  CrossFlipSiteCache(CrossFlipSiteCache&&) noexcept = default;
  CrossFlipSiteCache& operator=(CrossFlipSiteCache&&) noexcept = default;
  ~CrossFlipSiteCache();

  // kappa must keep the colors of surviving vertices.
  void update(const Complex& c, const Coloring& kappa);
  const std::vector<CrossFlip>& sites() const { return sites_; }

 private:
  struct State;
  void rebuild();
  std::unique_ptr<State> state_;
  std::vector<CrossFlip> sites_;
};

bool preserves_balancedness(const Complex& c, const Coloring& kappa, const ShellingMove& forward_shelling);
bool preserves_balancedness_inverse(const Complex& c, const Coloring& kappa, const ShellingMove& inverse);
bool preserves_balancedness(const Complex& c, const Coloring& kappa, const BistellarFlip& flip);
bool preserves_balancedness(const Complex& c, const Coloring& kappa, const CrossFlip& flip);

// Adds or removes the facet A ∪ B so that the boundary undergoes χ_{A,B}.
Complex boundary_bistellar_realization(const Complex& c, const Face& a, const Face& b);

}  // namespace balflip
