//! Indecomposable projectives of an algebra, packaged with the action data
//! that minimal resolutions need: idempotents, radical generators and PIM
//! basis elements, each with its action on every PIM.

use std::sync::OnceLock;

use crate::algebra::Algebra;
use crate::field::{Fe, Field};
use crate::mat::{Mat, Subspace};
use crate::structure::Structure;

#[derive(Clone, Debug)]
pub struct PimType {
    pub dim: usize,
    pub simple_dim: usize,
    /// Coordinates of the primitive idempotent inside its PIM.
    pub top: Vec<Fe>,
}

/// Which ambient algebra the PIMs belong to.
#[derive(Clone, Debug)]
enum Ambient {
    Small { alg: Algebra, spaces: Vec<Subspace> },
    /// `A ⊗ C` with PIMs `A ε_s ⊗ C ε'_t`.
    Tensor { a: Algebra, a_spaces: Vec<Subspace>, c: Algebra, c_spaces: Vec<Subspace> },
}

#[derive(Debug)]
pub struct PimData {
    field: Field,
    ambient: Ambient,
    pub types: Vec<PimType>,
    /// Element index of `ε_t`.
    pub idem: Vec<usize>,
    /// Element indices of the PIM basis vectors of each type.
    pub pim_basis: Vec<Vec<usize>>,
    /// Element indices of right-ideal generators of the radical.
    pub rad: Vec<usize>,
    /// Elements as vectors in the ambient algebra.
    pub elems: Vec<Vec<Fe>>,
    /// `mats[x][u]` is the action of element `x` on PIM `u`.
    mats: Vec<Vec<Mat>>,
    full: OnceLock<Vec<Vec<Mat>>>,
}

fn restricted_left(alg: &Algebra, z: &[Fe], b: &Subspace) -> Mat {
    let cols: Vec<Vec<Fe>> = b.basis().iter().map(|v| b.coords(&alg.mul(z, v))).collect();
    Mat::from_cols(alg.field(), b.dim(), &cols)
}

fn kron_vec(a: &[Fe], b: &[Fe], f: &Field) -> Vec<Fe> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(f.mul(x, y));
        }
    }
    out
}

impl PimData {
    pub fn small(alg: &Algebra, st: &Structure) -> PimData {
        let f = alg.field().clone();
        let spaces = st.pims.clone();
        let mut elems = Vec::new();
        let mut idem = Vec::new();
        let mut pim_basis = Vec::new();
        let mut types = Vec::new();
        for (t, e) in st.idempotents.iter().enumerate() {
            idem.push(elems.len());
            elems.push(e.clone());
            types.push(PimType { dim: spaces[t].dim(), simple_dim: st.simples[t].dim(), top: spaces[t].coords(e) });
        }
        for s in &spaces {
            let mut ids = Vec::new();
            for v in s.basis() {
                ids.push(elems.len());
                elems.push(v.clone());
            }
            pim_basis.push(ids);
        }
        let mut rad = Vec::new();
        for r in &st.rad_right_gens {
            rad.push(elems.len());
            elems.push(r.clone());
        }
        let mats = elems.iter().map(|x| spaces.iter().map(|s| restricted_left(alg, x, s)).collect()).collect();
        PimData {
            field: f,
            ambient: Ambient::Small { alg: alg.clone(), spaces },
            types,
            idem,
            pim_basis,
            rad,
            elems,
            mats,
            full: OnceLock::new(),
        }
    }

    /// PIMs of `A ⊗ C` from the structures of the factors; type `(s, t)`
    /// has index `s * (#types of C) + t`.
    pub fn tensor(a: &Algebra, sa: &Structure, c: &Algebra, sc: &Structure) -> PimData {
        let f = a.field().clone();
        let (na, nc) = (sa.idempotents.len(), sc.idempotents.len());
        // pure tensors x ⊗ y, tracked as pairs
        let mut pairs: Vec<(Vec<Fe>, Vec<Fe>)> = Vec::new();
        let mut idem = Vec::new();
        let mut types = Vec::new();
        for s in 0..na {
            for t in 0..nc {
                idem.push(pairs.len());
                pairs.push((sa.idempotents[s].clone(), sc.idempotents[t].clone()));
                types.push(PimType {
                    dim: sa.pims[s].dim() * sc.pims[t].dim(),
                    simple_dim: sa.simples[s].dim() * sc.simples[t].dim(),
                    top: kron_vec(&sa.pims[s].coords(&sa.idempotents[s]), &sc.pims[t].coords(&sc.idempotents[t]), &f),
                });
            }
        }
        let mut pim_basis = Vec::new();
        for s in 0..na {
            for t in 0..nc {
                let mut ids = Vec::new();
                for v in sa.pims[s].basis() {
                    for w in sc.pims[t].basis() {
                        ids.push(pairs.len());
                        pairs.push((v.clone(), w.clone()));
                    }
                }
                pim_basis.push(ids);
            }
        }
        let mut rad = Vec::new();
        for r in &sa.rad_right_gens {
            rad.push(pairs.len());
            pairs.push((r.clone(), c.unit().to_vec()));
        }
        for r in &sc.rad_right_gens {
            rad.push(pairs.len());
            pairs.push((a.unit().to_vec(), r.clone()));
        }
        // factor actions on factor PIMs, cached per distinct vector
        let mats = pairs
            .iter()
            .map(|(x, y)| {
                let xa: Vec<Mat> = sa.pims.iter().map(|s| restricted_left(a, x, s)).collect();
                let yc: Vec<Mat> = sc.pims.iter().map(|s| restricted_left(c, y, s)).collect();
                let mut per = Vec::with_capacity(na * nc);
                for xs in &xa {
                    for yt in &yc {
                        per.push(xs.kron(yt));
                    }
                }
                per
            })
            .collect();
        let elems = pairs.iter().map(|(x, y)| kron_vec(x, y, &f)).collect();
        PimData {
            field: f,
            ambient: Ambient::Tensor { a: a.clone(), a_spaces: sa.pims.clone(), c: c.clone(), c_spaces: sc.pims.clone() },
            types,
            idem,
            pim_basis,
            rad,
            elems,
            mats,
            full: OnceLock::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn num_types(&self) -> usize {
        self.types.len()
    }

    pub fn alg_dim(&self) -> usize {
        match &self.ambient {
            Ambient::Small { alg, .. } => alg.dim(),
            Ambient::Tensor { a, c, .. } => a.dim() * c.dim(),
        }
    }

    /// Action of element `x` on PIM `u`.
    pub fn mat(&self, x: usize, u: usize) -> &Mat {
        &self.mats[x][u]
    }

    /// Actions of every ambient basis element on every PIM: `[u][i]`.
    pub fn full_actions(&self) -> &Vec<Vec<Mat>> {
        self.full.get_or_init(|| match &self.ambient {
            Ambient::Small { alg, spaces } => spaces
                .iter()
                .map(|s| (0..alg.dim()).map(|i| restricted_left(alg, &alg.basis(i), s)).collect())
                .collect(),
            Ambient::Tensor { a, a_spaces, c, c_spaces } => {
                let mut out = Vec::new();
                for sa in a_spaces {
                    let xa: Vec<Mat> = (0..a.dim()).map(|i| restricted_left(a, &a.basis(i), sa)).collect();
                    for sc in c_spaces {
                        let yc: Vec<Mat> = (0..c.dim()).map(|j| restricted_left(c, &c.basis(j), sc)).collect();
                        let mut per = Vec::with_capacity(a.dim() * c.dim());
                        for x in &xa {
                            for y in &yc {
                                per.push(x.kron(y));
                            }
                        }
                        out.push(per);
                    }
                }
                out
            }
        })
    }

    /// Index of the type whose simple module is one-dimensional with the
    /// given action (used to find the trivial module's type).
    pub fn type_of_character(&self, chi: &[Fe]) -> Option<usize> {
        (0..self.num_types()).find(|&t| {
            if self.types[t].simple_dim != 1 {
                return false;
            }
            // ε_t acts as 1 on the character iff χ(ε_t) = 1
            self.field.dot(chi, &self.elems[self.idem[t]]) == 1
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;

    #[test]
    fn tensor_pims_cover_enveloping_algebra() {
        let h = builtin("kS3@p2").unwrap();
        let a = h.algebra();
        let st = Structure::compute(a, 1).unwrap();
        let op = a.opposite();
        let sop = Structure::compute(&op, 1).unwrap();
        let pd = PimData::tensor(a, &st, &op, &sop);
        let total: usize = pd.types.iter().map(|t| t.dim * t.simple_dim).sum();
        assert_eq!(total, 36);
        // element matrices agree with full actions on pure tensors
        let env = a.tensor(&op).unwrap();
        let full = pd.full_actions();
        for (x, v) in pd.elems.iter().enumerate().take(6) {
            for u in 0..pd.num_types() {
                let mut m = Mat::zeros(pd.field(), pd.types[u].dim, pd.types[u].dim);
                for (i, &c) in v.iter().enumerate() {
                    if c != 0 {
                        m.add_scaled(c, &full[u][i]);
                    }
                }
                assert_eq!(&m, pd.mat(x, u));
            }
        }
        assert_eq!(env.dim(), pd.alg_dim());
    }
}
