//! Homogeneous ideals in the polynomial model of `H^•(G,k)`: support
//! ideals, annihilators of `Ext`, block support and the representation
//! type read off the dimension.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cohomology::{ideal_generators, CohomologyRing};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::mat::Subspace;
use crate::module::ModuleRep;
use crate::mpoly::{proj_connected, Connectivity, Ctx, LinearPrime, Poly, PolyRing};

/// A homogeneous ideal known degreewise up to `top`: `pieces[d]` is the
/// full degree-`d` part (coefficients over the ring's degree-`d`
/// monomials).
#[derive(Clone, Debug)]
pub struct PolyIdeal {
    pub ring: PolyRing,
    pub field: Field,
    pub top: usize,
    pub pieces: BTreeMap<usize, Vec<Vec<Fe>>>,
    pub gens: Vec<Poly>,
}

impl PolyIdeal {
    pub fn from_pieces(ring: &PolyRing, field: &Field, top: usize, pieces: BTreeMap<usize, Vec<Vec<Fe>>>) -> PolyIdeal {
        let gens = ideal_generators(ring, field, &pieces);
        PolyIdeal { ring: ring.clone(), field: field.clone(), top, pieces, gens }
    }

    /// The ideal of all positive-degree elements (up to `top`).
    pub fn irrelevant(ring: &PolyRing, field: &Field, top: usize) -> PolyIdeal {
        let mut pieces = BTreeMap::new();
        for d in 1..=top {
            let n = ring.monomials(d).len();
            if n > 0 {
                pieces.insert(d, Subspace::full(field, n).basis().to_vec());
            }
        }
        Self::from_pieces(ring, field, top, pieces)
    }

    pub fn zero(ring: &PolyRing, field: &Field, top: usize) -> PolyIdeal {
        Self::from_pieces(ring, field, top, BTreeMap::new())
    }

    pub fn ctx(&self) -> Ctx<'_> {
        Ctx { ring: &self.ring, field: &self.field }
    }

    /// Krull dimension of the quotient of the polynomial model.
    pub fn dim(&self) -> usize {
        self.ctx().krull_dim(&self.gens).unwrap_or(0)
    }

    pub fn groebner(&self) -> Vec<Poly> {
        self.ctx().groebner(&self.gens)
    }

    pub fn radical_equal(&self, other: &PolyIdeal) -> bool {
        self.ctx().radical_equal(&self.gens, &other.gens)
    }

    /// `√other ⊆ √self`, i.e. `V(self) ⊆ V(other)`.
    pub fn radical_contains(&self, other: &PolyIdeal) -> bool {
        self.ctx().radical_contains(&self.gens, &other.gens)
    }

    /// Zero locus is the origin.
    pub fn is_irrelevant_up_to_radical(&self) -> bool {
        let n = self.ring.nvars();
        let vars: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
        self.ctx().radical_contains(&self.gens, &vars)
    }

    /// Degreewise intersection (exact up to `min(top)`).
    pub fn intersect(&self, other: &PolyIdeal) -> PolyIdeal {
        let top = self.top.min(other.top);
        let mut pieces = BTreeMap::new();
        for d in 1..=top {
            let n = self.ring.monomials(d).len();
            let a = span(&self.field, n, self.pieces.get(&d));
            let b = span(&self.field, n, other.pieces.get(&d));
            let c = a.intersect(&b);
            if c.dim() > 0 {
                pieces.insert(d, c.basis().to_vec());
            }
        }
        Self::from_pieces(&self.ring, &self.field, top, pieces)
    }

    pub fn formatted_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.format(&self.ring, &self.field)).collect()
    }

    /// Whether a homogeneous polynomial lies in the ideal (degreewise).
    pub fn contains(&self, p: &Poly) -> bool {
        let gb = self.groebner();
        self.ctx().reduce(p, &gb).is_zero()
    }
}

fn span(f: &Field, n: usize, vecs: Option<&Vec<Vec<Fe>>>) -> Subspace {
    let mut s = Subspace::new(f, n);
    if let Some(v) = vecs {
        for x in v {
            s.insert(x);
        }
    }
    s
}

/// `I_G(M)`: kernel of `H^•(G,k) → Ext^*(M,M) = H^*(G, End M)`, computed
/// degreewise up to the cap.
pub fn support_ideal(ring: &CohomologyRing, m: &ModuleRep) -> Result<PolyIdeal> {
    let h = ring.hopf();
    let w = ModuleRep::hom_module(h, m, m);
    let mut id = vec![0; w.dim()];
    for i in 0..m.dim() {
        id[i * m.dim() + i] = 1;
    }
    coefficient_kernel(ring, &w, &id)
}

/// Kernel of `H^•(G,k) → H^•(G,W)` induced by `k → W, 1 ↦ w0` for a
/// fixed vector `w0`.
pub fn coefficient_kernel(ring: &CohomologyRing, w: &ModuleRep, w0: &[Fe]) -> Result<PolyIdeal> {
    let cap = ring.cap;
    if w.dim() == 0 {
        return Ok(PolyIdeal::irrelevant(&ring.ring, ring.field(), cap));
    }
    let ext = ring.ext(w, cap)?;
    let gamma = ring.fixed_cochain(&ext.cochains, w0);
    let pieces = ring.annihilating_pieces(&ext, &[(0, gamma)], cap, cap);
    Ok(PolyIdeal::from_pieces(&ring.ring, ring.field(), cap, pieces))
}

/// Default annihilator window: `Ext` degrees `0..=cap/2` are tested
/// against ring degrees up to `cap − window`.
pub fn default_window(cap: usize) -> usize {
    cap / 2
}

/// `I_G(k, W)`: annihilator of `H^*(G,W)` under the cup product, tested on
/// basis classes in degrees `≤ window`; ideal degrees run to `cap − window`.
pub fn relative_ideal(ring: &CohomologyRing, w: &ModuleRep, window: usize) -> Result<PolyIdeal> {
    let cap = ring.cap;
    if window >= cap {
        return Err(Error::Inconclusive(format!("window {window} leaves no ring degrees below cap {cap}")));
    }
    let top = cap - window;
    if w.dim() == 0 {
        return Ok(PolyIdeal::irrelevant(&ring.ring, ring.field(), top));
    }
    let ext = ring.ext(w, cap)?;
    let mut gammas = Vec::new();
    for b in 0..=window {
        for coords in &ext.basis[b] {
            gammas.push((b, ext.cochains.values(ring.resolution(), b, coords)));
        }
    }
    let pieces = ring.annihilating_pieces(&ext, &gammas, top, cap);
    Ok(PolyIdeal::from_pieces(&ring.ring, ring.field(), top, pieces))
}

/// `I_G(M,N)`: annihilator of `Ext^*(M,N) = H^*(G, Hom(M,N))`.
pub fn annihilator_ideal(ring: &CohomologyRing, m: &ModuleRep, n: &ModuleRep, window: usize) -> Result<PolyIdeal> {
    let w = ModuleRep::hom_module(ring.hopf(), m, n);
    relative_ideal(ring, &w, window)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepType {
    SimpleAlgebra,
    UnknownSmall,
    InfiniteType,
    Wild,
}

pub fn rep_type_classify(dim: usize) -> RepType {
    match dim {
        0 => RepType::SimpleAlgebra,
        1 => RepType::UnknownSmall,
        2 => RepType::InfiniteType,
        _ => RepType::Wild,
    }
}

#[derive(Clone, Debug)]
pub struct SupportVariety {
    pub ideal: PolyIdeal,
    pub dim: usize,
    pub components: Option<Vec<LinearPrime>>,
    pub connectivity: Connectivity,
}

#[derive(Clone, Debug, Serialize)]
pub struct VarietySummary {
    pub generators: Vec<String>,
    pub dim: usize,
    pub components: Option<Vec<Vec<String>>>,
    pub connectivity: Connectivity,
    pub rep_type: RepType,
    pub top_degree: usize,
}

impl SupportVariety {
    pub fn new(ideal: PolyIdeal) -> SupportVariety {
        let dim = ideal.dim();
        let (connectivity, components) = proj_connected(&ideal.ctx(), &ideal.gens);
        SupportVariety { ideal, dim, components, connectivity }
    }

    pub fn rep_type(&self) -> RepType {
        rep_type_classify(self.dim)
    }

    pub fn summary(&self) -> VarietySummary {
        let i = &self.ideal;
        VarietySummary {
            generators: i.formatted_gens(),
            dim: self.dim,
            components: self.components.as_ref().map(|cs| {
                cs.iter()
                    .map(|p| p.polys(&i.ring).iter().map(|q| q.format(&i.ring, &i.field)).collect())
                    .collect()
            }),
            connectivity: self.connectivity,
            rep_type: self.rep_type(),
            top_degree: i.top,
        }
    }
}

/// `V_G(𝓑)`: the ideal `∩ I_G(S)` over the simple modules of the block.
pub fn block_support(ring: &CohomologyRing, simples: &[&ModuleRep]) -> Result<SupportVariety> {
    let mut acc: Option<PolyIdeal> = None;
    for s in simples {
        let i = support_ideal(ring, s)?;
        acc = Some(match acc {
            None => i,
            Some(a) => a.intersect(&i),
        });
    }
    let ideal = acc.unwrap_or_else(|| PolyIdeal::irrelevant(&ring.ring, ring.field(), ring.cap));
    Ok(SupportVariety::new(ideal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::BlockDecomposition;
    use crate::hopf::builtin;

    #[test]
    fn trivial_module_gives_relations() {
        let h = builtin("kD8@p2").unwrap();
        let r = CohomologyRing::compute(&h, 6, 0).unwrap();
        let k = ModuleRep::trivial(&h);
        let i = support_ideal(&r, &k).unwrap();
        assert_eq!(i.dim(), 2);
        let rel = PolyIdeal { gens: r.relations.clone(), ..i.clone() };
        assert!(i.radical_equal(&rel));
    }

    #[test]
    fn projective_module_has_irrelevant_ideal() {
        let h = builtin("kS3@p2").unwrap();
        let r = CohomologyRing::compute(&h, 6, 0).unwrap();
        let st = r.structure().clone();
        let d = BlockDecomposition::for_hopf(&h, &st, 0).unwrap();
        let dims: Vec<usize> = (0..d.len())
            .map(|b| {
                let ss: Vec<&ModuleRep> = d.blocks[b].simples.iter().map(|&t| &st.simples[t]).collect();
                block_support(&r, &ss).unwrap().dim
            })
            .collect();
        assert_eq!(dims, vec![1, 0]);
    }

    #[test]
    fn relative_matches_support_for_an_algebra() {
        let h = builtin("kZ4@p2").unwrap();
        let r = CohomologyRing::compute(&h, 8, 0).unwrap();
        let reg = ModuleRep::regular(h.algebra());
        let a = relative_ideal(&r, &reg, 3).unwrap();
        assert!(a.is_irrelevant_up_to_radical());
    }
}
