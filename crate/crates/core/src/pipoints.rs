//! Flat maps `k[t]/(t^p) → A`, Jordan types, p-point factorization,
//! restriction kernels in cohomology, equivalence on a module family and
//! flat-point classes of blocks.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::cohomology::CohomologyRing;
use crate::error::{Error, Result};
use crate::field::{extend_field, Extension, Fe, Field};
use crate::group::{GroupTable, Subgroup};
use crate::hopf::HopfAlgebra;
use crate::mat::{Mat, Subspace};
use crate::module::{jordan_type, ModuleRep};
use crate::mpoly::Poly;
use crate::resolution::Resolution;
use crate::varieties::{support_ideal, PolyIdeal};
use crate::verify::{Analysis, Check, Status};

/// Search spaces up to this size are enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 1 << 20;
/// Sampling stops after this many flat hits without a new class.
pub const STABILIZATION: usize = 200;
pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Clone, Debug, Serialize)]
pub struct FlatMap {
    /// Image of `t`.
    pub u: Vec<Fe>,
    /// Block sizes of left multiplication by `u`, largest first.
    pub jordan_type: Vec<usize>,
    pub flat: bool,
    /// `rank(L_u) = dim·(p−1)/p`.
    pub rank_criterion: bool,
    /// `rank(L_u^{p−1}) = dim/p`.
    pub power_criterion: bool,
}

impl FlatMap {
    pub fn criteria_agree(&self) -> bool {
        self.flat == self.rank_criterion && self.flat == self.power_criterion
    }

    /// The algebra map as a `dim A × p` matrix sending `t^i ↦ u^i`, with
    /// `unit` the image of 1.
    pub fn algebra_map(&self, alg: &Algebra, unit: &[Fe]) -> Mat {
        let p = alg.field().p() as usize;
        let mut cols = vec![unit.to_vec()];
        let mut pw = unit.to_vec();
        for _ in 1..p {
            pw = alg.mul(&pw, &self.u);
            cols.push(pw.clone());
        }
        Mat::from_cols(alg.field(), alg.dim(), &cols)
    }
}

fn is_zero(v: &[Fe]) -> bool {
    v.iter().all(|&c| c == 0)
}

pub fn flat_test(alg: &Algebra, u: &[Fe]) -> Result<FlatMap> {
    let p = alg.field().p() as usize;
    if !is_zero(&alg.pow(u, p)) {
        return Err(Error::Precondition("element is not p-nilpotent".into()));
    }
    let n = alg.dim();
    let l = alg.left_mat(u);
    let jt = jordan_type(&l);
    let flat = n > 0 && jt.iter().all(|&s| s == p);
    let divisible = n > 0 && n.is_multiple_of(p);
    let rank_criterion = divisible && l.rank() == n / p * (p - 1);
    let power_criterion = divisible && l.pow(p as u32 - 1).rank() == n / p;
    Ok(FlatMap { u: u.to_vec(), jordan_type: jt, flat, rank_criterion, power_criterion })
}

/// `k[t]/(t^p)` over the given field.
pub fn truncated_algebra(f: &Field) -> Algebra {
    HopfAlgebra::truncated_poly(f, "C").algebra().clone()
}

/// Whether `M` restricted along `t ↦ u` is projective over `k[t]/(t^p)`.
pub fn projective_along(m: &ModuleRep, u: &[Fe]) -> bool {
    let p = m.field().p() as usize;
    let d = m.dim();
    d.is_multiple_of(p) && m.act(u).rank() == d / p * (p - 1)
}

/// `Hom_C(A, k)` for `C = k[t]/(t^p)` acting on `A` by left multiplication
/// with `u`; `A` acts by `(x·f)(a) = f(a x)`.
pub fn coinduce(alg: &Algebra, fm: &FlatMap) -> Result<ModuleRep> {
    if !fm.flat {
        return Err(Error::Precondition("coinduction needs a flat map".into()));
    }
    let f = alg.field();
    let n = alg.dim();
    let w = Subspace::from_rows(&alg.left_mat(&fm.u).transpose().kernel_basis());
    let actions = (0..n).map(|x| alg.right_mat(&alg.basis(x)).transpose()).collect();
    let full = ModuleRep::new(f, n, actions);
    if !full.is_submodule(&w) {
        return Err(Error::Internal("coinduced space is not a submodule".into()));
    }
    Ok(full.submodule(&w))
}

/// Carlson module `L_ζ`: the kernel of `Ω^d(k) → k` representing `ζ`.
pub fn carlson_module(ring: &CohomologyRing, zeta: &Poly) -> Result<ModuleRep> {
    let (d, coords) =
        ring.evaluate(zeta).ok_or_else(|| Error::Invalid("class is not homogeneous within the cap".into()))?;
    if d == 0 {
        return Err(Error::Invalid("Carlson modules need a class of positive degree".into()));
    }
    if is_zero(&coords) {
        return Err(Error::Invalid("zero class".into()));
    }
    let f = ring.field();
    let res = ring.resolution();
    let tc = ring.trivial_cochains();
    let z = tc.full_map(res, d, &tc.values(res, d, &coords));
    let omega = Subspace::from_rows(&res.diff(d - 1).kernel_basis());
    let mut vals = Vec::with_capacity(omega.dim());
    for y in omega.basis() {
        let x = res.solver(d).solve(y).ok_or_else(|| Error::Internal("resolution is not exact".into()))?;
        vals.push(z.mul_vec(&x)[0]);
    }
    let kern = Mat::from_rows(f, omega.dim(), &[vals]).kernel_basis();
    let mut l = Subspace::new(f, res.term(d - 1).dim);
    for row in kern.row_vecs() {
        let mut v = vec![0; res.term(d - 1).dim];
        for (c, b) in row.iter().zip(omega.basis()) {
            f.axpy(&mut v, *c, b);
        }
        l.insert(&v);
    }
    Ok(res.term_module(d - 1).submodule(&l))
}

/// `ker(α^•: H^•(G,k) → H^•(k[t]/(t^p), k))` degreewise up to the cap.
/// Restricting the minimal resolution along a flat `α` gives a projective
/// resolution over `k[t]/(t^p)`, so a class dies iff its cochain is a
/// coboundary there.
pub fn induced_kernel(ring: &CohomologyRing, fm: &FlatMap) -> Result<PolyIdeal> {
    if !fm.flat {
        return Err(Error::Precondition("restriction kernels need a flat map".into()));
    }
    let f = ring.field();
    let res = ring.resolution();
    let tc = ring.trivial_cochains();
    let mut pieces = BTreeMap::new();
    for d in ring.degrees() {
        if d == 0 || d > ring.cap {
            continue;
        }
        let nm = ring.monomials(d).len();
        if nm == 0 {
            continue;
        }
        let pd = res.term(d).dim;
        let u_prev = res.term_module(d - 1).act(&fm.u);
        let phis = u_prev.transpose().kernel_basis();
        let ev = ring.eval_matrix(d);
        let mut cols: Vec<Vec<Fe>> = (0..nm)
            .map(|j| tc.full_map(res, d, &tc.values(res, d, &ev.col(j))).row(0).to_vec())
            .collect();
        if phis.rows() > 0 {
            cols.extend(phis.mul(res.diff(d)).row_vecs());
        }
        let ker = Mat::from_cols(f, pd, &cols).kernel_basis();
        let mut piece = Subspace::new(f, nm);
        for v in ker.row_vecs() {
            piece.insert(&v[..nm]);
        }
        if piece.dim() > 0 {
            pieces.insert(d, piece.basis().to_vec());
        }
    }
    Ok(PolyIdeal::from_pieces(&ring.ring, f, ring.cap, pieces))
}

/// Some positive ring degree survives restriction.
pub fn kernel_is_proper(ring: &CohomologyRing, k: &PolyIdeal) -> bool {
    ring.degrees()
        .into_iter()
        .filter(|&d| d > 0 && d <= k.top)
        .any(|d| k.pieces.get(&d).map_or(0, |v| v.len()) < ring.monomials(d).len())
}

fn is_p_power(mut n: usize, p: usize) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Nontrivial abelian p-subgroups, smallest first.
pub fn abelian_p_subgroups(g: &GroupTable, p: usize) -> Vec<Subgroup> {
    g.subgroups().into_iter().filter(|h| h.len() > 1 && is_p_power(h.len(), p) && g.is_abelian_subgroup(h)).collect()
}

fn maximal_subgroups(subs: &[Subgroup]) -> Vec<Subgroup> {
    subs.iter()
        .filter(|h| !subs.iter().any(|k| k.len() > h.len() && h.iter().all(|x| k.binary_search(x).is_ok())))
        .cloned()
        .collect()
}

fn support(u: &[Fe]) -> Vec<usize> {
    u.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PPointVerdict {
    pub is_p_point: bool,
    /// Element names of the smallest abelian p-subgroup containing `u`.
    pub witness: Option<Vec<String>>,
    pub subgroups_tested: usize,
}

/// Factorization through an abelian p-subgroup, by exhaustive search of
/// the subgroup lattice. Commutative non-group targets count when flat.
pub fn is_p_point(h: &HopfAlgebra, fm: &FlatMap) -> Result<PPointVerdict> {
    let Some(g) = h.group() else {
        if h.algebra().is_commutative() {
            return Ok(PPointVerdict { is_p_point: fm.flat, witness: None, subgroups_tested: 0 });
        }
        return Err(Error::Unsupported("p-point factorization needs a group algebra".into()));
    };
    let subs = abelian_p_subgroups(g, h.field().p() as usize);
    if !fm.flat {
        return Ok(PPointVerdict { is_p_point: false, witness: None, subgroups_tested: 0 });
    }
    let supp = support(&fm.u);
    for a in &subs {
        if supp.iter().all(|x| a.binary_search(x).is_ok()) {
            let names = a.iter().map(|&x| g.names()[x].clone()).collect();
            return Ok(PPointVerdict { is_p_point: true, witness: Some(names), subgroups_tested: subs.len() });
        }
    }
    Ok(PPointVerdict { is_p_point: false, witness: None, subgroups_tested: subs.len() })
}

/// Modules whose projectivity along flat maps is compared.
#[derive(Clone, Debug, Default)]
pub struct Family {
    pub names: Vec<String>,
    pub modules: Vec<ModuleRep>,
}

impl Family {
    fn push(&mut self, name: String, m: ModuleRep) {
        if m.dim() > 0 {
            self.names.push(name);
            self.modules.push(m);
        }
    }

    /// `true` where the restriction is projective.
    pub fn verdicts(&self, u: &[Fe]) -> Vec<bool> {
        self.modules.iter().map(|m| projective_along(m, u)).collect()
    }

    pub fn extended(&self, extra: Vec<(String, ModuleRep)>) -> Family {
        let mut out = self.clone();
        for (n, m) in extra {
            out.push(n, m);
        }
        out
    }
}

/// `P` for projective, `N` otherwise.
pub fn verdict_string(v: &[bool]) -> String {
    v.iter().map(|&b| if b { 'P' } else { 'N' }).collect()
}

/// Classes of degree ≤ 2 spanned by ring generators of one degree, one per
/// projective point, at most 64 in total.
pub fn carlson_classes(ring: &CohomologyRing) -> Vec<Poly> {
    let f = ring.field();
    let q = f.order();
    let n = ring.ring.nvars();
    let mut out = Vec::new();
    for d in 1..=2usize {
        let idx: Vec<usize> = (0..n).filter(|&i| ring.generators[i].degree == d).collect();
        let k = idx.len();
        if k == 0 {
            continue;
        }
        let total = q.pow(k as u32);
        for code in 1..total {
            let mut c = vec![0 as Fe; k];
            let mut x = code;
            for slot in c.iter_mut() {
                *slot = (x % q) as Fe;
                x /= q;
            }
            if c.iter().find(|&&a| a != 0) != Some(&1) {
                continue;
            }
            let mut p = Poly::zero();
            let ctx = ring.ctx();
            for (j, &i) in idx.iter().enumerate() {
                if c[j] != 0 {
                    p = ctx.add(&p, &ctx.scale(&Poly::var(n, i), c[j]));
                }
            }
            out.push(p);
            if out.len() >= 64 {
                return out;
            }
        }
    }
    out
}

fn image_of(m: &ModuleRep, e: &[Fe]) -> ModuleRep {
    let s = Subspace::from_rows(&m.act(e).transpose().row_space());
    m.submodule(&s)
}

fn block_ambient(space: &Subspace, coords: &[Fe]) -> Vec<Fe> {
    let f = space.field();
    let mut v = vec![0; space.ambient()];
    for (c, b) in coords.iter().zip(space.basis()) {
        f.axpy(&mut v, *c, b);
    }
    v
}

/// One equivalence class of flat maps found by enumeration.
#[derive(Clone, Debug)]
pub struct FlatClass {
    pub rep: FlatMap,
    /// Image of `t` in the ambient algebra.
    pub ambient: Vec<Fe>,
    pub kernel: Option<PolyIdeal>,
    pub verdicts: Vec<bool>,
    pub witness: Option<Vec<String>>,
    pub hits: usize,
}

#[derive(Clone, Debug, Default)]
pub struct PiSupportSample {
    pub family: Vec<String>,
    pub classes: Vec<FlatClass>,
    pub exhaustive: bool,
    pub stabilized: bool,
    pub candidates: usize,
    pub p_nilpotent: usize,
    pub flat_hits: usize,
    pub criteria_disagreements: usize,
    /// Pairs of classes with equal verdicts but different kernels.
    pub verdict_coincidences: Vec<(usize, usize)>,
}

impl PiSupportSample {
    pub fn summary(&self, alg: &Algebra) -> Value {
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|c| {
                json!({
                    "representative": alg.format_element(&c.ambient),
                    "jordan_type": c.rep.jordan_type,
                    "kernel": c.kernel.as_ref().map(|k| k.formatted_gens()),
                    "verdicts": verdict_string(&c.verdicts),
                    "p_point_witness": c.witness,
                    "hits": c.hits,
                })
            })
            .collect();
        json!({
            "family": self.family,
            "classes": classes,
            "exhaustive": self.exhaustive,
            "stabilized": self.stabilized,
            "candidates": self.candidates,
            "p_nilpotent": self.p_nilpotent,
            "flat_hits": self.flat_hits,
            "criteria_disagreements": self.criteria_disagreements,
            "verdict_coincidences": self.verdict_coincidences,
        })
    }

    fn subset(&self, keep: &[usize]) -> PiSupportSample {
        PiSupportSample {
            classes: keep.iter().map(|&i| self.classes[i].clone()).collect(),
            verdict_coincidences: Vec::new(),
            ..self.clone()
        }
    }
}

/// Candidate vectors of length `n`: all of `F_q^n` when small enough,
/// otherwise `budget` seeded random draws.
struct Candidates {
    q: usize,
    n: usize,
    next: usize,
    total: Option<usize>,
    budget: usize,
    rng: ChaCha8Rng,
}

impl Candidates {
    fn new(q: usize, n: usize, budget: usize, seed: u64) -> Candidates {
        let total = u32::try_from(n).ok().and_then(|n| q.checked_pow(n)).filter(|&t| t <= EXHAUSTIVE_LIMIT);
        Candidates { q, n, next: 0, total, budget, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn exhaustive(&self) -> bool {
        self.total.is_some()
    }
}

impl Iterator for Candidates {
    type Item = Vec<Fe>;
    fn next(&mut self) -> Option<Vec<Fe>> {
        match self.total {
            Some(t) => {
                if self.next >= t {
                    return None;
                }
                let mut x = self.next;
                self.next += 1;
                Some(
                    (0..self.n)
                        .map(|_| {
                            let c = (x % self.q) as Fe;
                            x /= self.q;
                            c
                        })
                        .collect(),
                )
            }
            None => {
                if self.next >= self.budget {
                    return None;
                }
                self.next += 1;
                Some((0..self.n).map(|_| self.rng.gen_range(0..self.q) as Fe).collect())
            }
        }
    }
}

/// A p-nilpotent element derived from `y`: strip the semisimple part
/// `y^{q^k}` and raise the nilpotent rest to `p`-th powers until its
/// `p`-th power vanishes. `None` if this does not produce a nonzero
/// element.
pub fn p_nilpotent_part(alg: &Algebra, y: &[Fe]) -> Option<Vec<Fe>> {
    let f = alg.field();
    let (p, q) = (f.p() as usize, f.order());
    let mut s = y.to_vec();
    let mut qk = 1;
    while qk < alg.dim().max(2) {
        s = alg.pow(&s, q);
        qk *= q;
    }
    let mut x = alg.sub(y, &s);
    if is_zero(&x) || !alg.is_nilpotent(&x) {
        return None;
    }
    loop {
        let xp = alg.pow(&x, p);
        if is_zero(&xp) {
            return Some(x);
        }
        x = xp;
    }
}

/// Seeded p-nilpotent samples, checking both flatness criteria on each.
/// Returns `(tested, disagreements)`.
pub fn flatness_criteria_sample(alg: &Algebra, count: usize, seed: u64) -> (usize, usize) {
    let mut cands = Candidates::new(alg.field().order(), alg.dim(), usize::MAX, seed);
    cands.total = None;
    let (mut tested, mut bad) = (0, 0);
    for (draws, y) in cands.enumerate() {
        if tested >= count || draws >= 200 * count {
            break;
        }
        if let Some(u) = p_nilpotent_part(alg, &y) {
            if let Ok(fm) = flat_test(alg, &u) {
                tested += 1;
                if !fm.criteria_agree() {
                    bad += 1;
                }
            }
        }
    }
    (tested, bad)
}

/// The default equivalence family, restricted to a block (or the whole
/// algebra): simples, their syzygies up to degree 4, projective covers
/// and `e·(L_ζ ⊗ S)` for Carlson modules of low-degree classes.
fn build_family(an: &Analysis, block: Option<usize>) -> Result<Family> {
    let h = &an.hopf;
    let st = &an.structure;
    let types: Vec<usize> = match block {
        Some(i) => an.blocks.blocks[i].simples.clone(),
        None => (0..st.simples.len()).collect(),
    };
    let e: Option<Vec<Fe>> = block.map(|i| an.blocks.blocks[i].idempotent.clone());
    let mut fam = Family::default();
    let pims = an.ring.resolution().pims().clone();
    for &t in &types {
        fam.push(format!("S{t}"), st.simples[t].clone());
        let mut res = Resolution::new(pims.clone(), st.simples[t].clone());
        for n in 1..=4 {
            fam.push(format!("Omega{n}(S{t})"), res.syzygy(n)?);
        }
    }
    let reg = ModuleRep::regular(h.algebra());
    for &t in &types {
        fam.push(format!("P{t}"), reg.submodule(&st.pims[t]));
    }
    let ring = &an.ring;
    for z in carlson_classes(ring) {
        let name = z.format(&ring.ring, ring.field());
        let l = carlson_module(ring, &z)?;
        match &e {
            None => fam.push(format!("L({name})"), l),
            Some(e) => {
                for &t in &types {
                    let lt = ModuleRep::tensor_diagonal(h, &l, &st.simples[t]);
                    fam.push(format!("e(L({name})⊗S{t})"), image_of(&lt, e));
                }
            }
        }
    }
    Ok(fam)
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceVerdict {
    pub family: Vec<String>,
    pub verdicts_a: String,
    pub verdicts_b: String,
    pub equivalent_on_family: bool,
    pub kernel_a: Vec<String>,
    pub kernel_b: Vec<String>,
    pub kernels_equal: bool,
}

/// Everything the flat-point checks share, computed lazily.
pub struct PiAnalysis<'a> {
    pub an: &'a Analysis,
    pub budget: usize,
    family: OnceLock<Family>,
    block_families: Vec<OnceLock<Family>>,
    p_points: OnceLock<PiSupportSample>,
    flat_whole: OnceLock<PiSupportSample>,
    flat_blocks: Vec<OnceLock<PiSupportSample>>,
}

macro_rules! cached {
    ($cell:expr, $init:expr) => {{
        if let Some(v) = $cell.get() {
            return Ok(v);
        }
        let v = $init;
        let _ = $cell.set(v);
        Ok($cell.get().unwrap())
    }};
}

impl<'a> PiAnalysis<'a> {
    pub fn new(an: &'a Analysis, budget: usize) -> PiAnalysis<'a> {
        let nb = an.blocks.len();
        PiAnalysis {
            an,
            budget: budget.max(1),
            family: OnceLock::new(),
            block_families: (0..nb).map(|_| OnceLock::new()).collect(),
            p_points: OnceLock::new(),
            flat_whole: OnceLock::new(),
            flat_blocks: (0..nb).map(|_| OnceLock::new()).collect(),
        }
    }

    fn alg(&self) -> &Algebra {
        self.an.hopf.algebra()
    }

    pub fn family(&self) -> Result<&Family> {
        cached!(self.family, build_family(self.an, None)?)
    }

    pub fn block_family(&self, i: usize) -> Result<&Family> {
        cached!(self.block_families[i], build_family(self.an, Some(i))?)
    }

    pub fn kernel(&self, fm: &FlatMap) -> Result<PolyIdeal> {
        induced_kernel(&self.an.ring, fm)
    }

    /// Flat p-points up to kernel equality, through maximal abelian
    /// p-subgroups.
    pub fn p_point_classes(&self) -> Result<&PiSupportSample> {
        cached!(self.p_points, self.enumerate_p_points()?)
    }

    fn enumerate_p_points(&self) -> Result<PiSupportSample> {
        let h = &self.an.hopf;
        let g = h.group().ok_or_else(|| Error::Unsupported("p-points need a group algebra".into()))?;
        let f = h.field();
        let p = f.p() as usize;
        let alg = self.alg();
        let fam = self.family()?;
        let mut out = PiSupportSample { family: fam.names.clone(), exhaustive: true, stabilized: true, ..Default::default() };
        let subs = maximal_subgroups(&abelian_p_subgroups(g, p));
        let mut seen = BTreeSet::new();
        for (si, a) in subs.iter().enumerate() {
            let cands = Candidates::new(f.order(), a.len(), self.budget, self.an.seed ^ si as u64);
            out.exhaustive &= cands.exhaustive();
            let sampled = !cands.exhaustive();
            let mut since_new = 0;
            let mut stable = !sampled;
            for c in cands {
                out.candidates += 1;
                let mut u = vec![0; alg.dim()];
                for (&x, &cx) in a.iter().zip(&c) {
                    u[x] = cx;
                }
                if is_zero(&u) || !is_zero(&alg.pow(&u, p)) || !seen.insert(u.clone()) {
                    continue;
                }
                out.p_nilpotent += 1;
                let fm = flat_test(alg, &u)?;
                if !fm.criteria_agree() {
                    out.criteria_disagreements += 1;
                }
                if !fm.flat {
                    continue;
                }
                out.flat_hits += 1;
                let k = self.kernel(&fm)?;
                match out.classes.iter_mut().find(|cl| cl.kernel.as_ref().unwrap().radical_equal(&k)) {
                    Some(cl) => {
                        cl.hits += 1;
                        since_new += 1;
                    }
                    None => {
                        let witness = is_p_point(h, &fm)?.witness;
                        out.classes.push(FlatClass {
                            verdicts: fam.verdicts(&u),
                            ambient: u,
                            rep: fm,
                            kernel: Some(k),
                            witness,
                            hits: 1,
                        });
                        since_new = 0;
                    }
                }
                if sampled && since_new >= STABILIZATION {
                    stable = true;
                    break;
                }
            }
            out.stabilized &= stable;
        }
        out.verdict_coincidences = coincidences(&out.classes);
        Ok(out)
    }

    /// p-point classes lying in `P(G)_𝓑`: some simple of the block
    /// restricts non-projectively.
    pub fn block_pi_support(&self, i: usize) -> Result<PiSupportSample> {
        let all = self.p_point_classes()?;
        let simples = self.an.block_simples(i);
        let keep: Vec<usize> = (0..all.classes.len())
            .filter(|&c| simples.iter().any(|s| !projective_along(s, &all.classes[c].ambient)))
            .collect();
        Ok(all.subset(&keep))
    }

    /// Flat maps into the whole algebra, classified by the default family,
    /// with kernels of their representatives.
    pub fn flat_points_whole(&self) -> Result<&PiSupportSample> {
        cached!(self.flat_whole, {
            let full = Subspace::full(self.alg().field(), self.alg().dim());
            let mut s = self.enumerate_flat(self.alg(), &full, self.family()?, u64::MAX)?;
            for c in &mut s.classes {
                c.kernel = Some(self.kernel(&c.rep)?);
                c.witness = is_p_point(&self.an.hopf, &c.rep).ok().and_then(|v| v.witness);
            }
            s
        })
    }

    /// `F(B)`: flat maps into block `i` detecting some non-projective
    /// module of the block family, classified by verdict vectors.
    pub fn flat_points_of_block(&self, i: usize) -> Result<&PiSupportSample> {
        cached!(self.flat_blocks[i], {
            let b = &self.an.blocks.blocks[i];
            let balg = b.algebra(self.alg(), "b")?;
            self.enumerate_flat(&balg, &b.space, self.block_family(i)?, i as u64)?
        })
    }

    fn enumerate_flat(&self, target: &Algebra, space: &Subspace, fam: &Family, salt: u64) -> Result<PiSupportSample> {
        let f = target.field();
        let p = f.p() as usize;
        let cands = Candidates::new(f.order(), target.dim(), self.budget, self.an.seed ^ salt.rotate_left(17));
        let sampled = !cands.exhaustive();
        let mut out = PiSupportSample {
            family: fam.names.clone(),
            exhaustive: !sampled,
            stabilized: !sampled,
            ..Default::default()
        };
        let mut seen = BTreeSet::new();
        let mut since_new = 0;
        for y in cands {
            out.candidates += 1;
            let u = if sampled {
                match p_nilpotent_part(target, &y) {
                    Some(u) => u,
                    None => continue,
                }
            } else {
                if is_zero(&y) || !is_zero(&target.pow(&y, p)) {
                    continue;
                }
                y
            };
            if !seen.insert(u.clone()) {
                continue;
            }
            out.p_nilpotent += 1;
            let fm = flat_test(target, &u)?;
            if !fm.criteria_agree() {
                out.criteria_disagreements += 1;
            }
            if !fm.flat {
                continue;
            }
            out.flat_hits += 1;
            let amb = block_ambient(space, &u);
            let v = fam.verdicts(&amb);
            if v.iter().all(|&b| b) {
                continue;
            }
            match out.classes.iter_mut().find(|c| c.verdicts == v) {
                Some(c) => {
                    c.hits += 1;
                    since_new += 1;
                }
                None => {
                    out.classes.push(FlatClass { rep: fm, ambient: amb, kernel: None, verdicts: v, witness: None, hits: 1 });
                    since_new = 0;
                }
            }
            if sampled && since_new >= STABILIZATION {
                out.stabilized = true;
                break;
            }
        }
        Ok(out)
    }

    /// `ρ∘α`: the image `e·u` as a flat map into block `i` (block coordinates).
    pub fn rho_star(&self, fm: &FlatMap, i: usize) -> Result<FlatMap> {
        let b = &self.an.blocks.blocks[i];
        let alg = self.alg();
        let eu = alg.mul(&b.idempotent, &fm.u);
        let balg = b.algebra(alg, "b")?;
        flat_test(&balg, &b.space.coords(&eu))
    }

    pub fn equivalent(&self, a: &FlatMap, b: &FlatMap, fam: &Family) -> Result<EquivalenceVerdict> {
        let (va, vb) = (fam.verdicts(&a.u), fam.verdicts(&b.u));
        let (ka, kb) = (self.kernel(a)?, self.kernel(b)?);
        Ok(EquivalenceVerdict {
            family: fam.names.clone(),
            verdicts_a: verdict_string(&va),
            verdicts_b: verdict_string(&vb),
            equivalent_on_family: va == vb,
            kernel_a: ka.formatted_gens(),
            kernel_b: kb.formatted_gens(),
            kernels_equal: ka.radical_equal(&kb),
        })
    }

    /// A B-module separating two kernel classes: `e·(L_ζ ⊗ S)` with `ζ` in
    /// one kernel and outside the radical of the other.
    fn separating_witness(&self, i: usize, a: &FlatClass, b: &FlatClass) -> Result<Option<String>> {
        let ring = &self.an.ring;
        let st = &self.an.structure;
        let blk = &self.an.blocks.blocks[i];
        let alg = self.alg();
        let (ea, eb) = (alg.mul(&blk.idempotent, &a.ambient), alg.mul(&blk.idempotent, &b.ambient));
        for (k1, k2) in [(&a.kernel, &b.kernel), (&b.kernel, &a.kernel)] {
            let (Some(k1), Some(k2)) = (k1, k2) else { continue };
            for (&d, vecs) in &k1.pieces {
                for v in vecs {
                    let z = ring.poly_from(d, v);
                    if z.is_zero() || ring.ctx().radical_contains(&k2.gens, std::slice::from_ref(&z)) {
                        continue;
                    }
                    let Ok(l) = carlson_module(ring, &z) else { continue };
                    for &t in &blk.simples {
                        let w = image_of(&ModuleRep::tensor_diagonal(&self.an.hopf, &l, &st.simples[t]), &blk.idempotent);
                        if projective_along(&w, &ea) != projective_along(&w, &eb) {
                            return Ok(Some(format!("e(L({})⊗S{t})", z.format(&ring.ring, ring.field()))));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Index of the p-point class with the same kernel radical.
    pub fn find_p_class(&self, k: &PolyIdeal) -> Result<Option<usize>> {
        let classes = self.p_point_classes()?;
        Ok(classes.classes.iter().position(|c| c.kernel.as_ref().unwrap().radical_equal(k)))
    }

    /// Runs `f` on the same algebra over a quadratic extension.
    pub fn with_extension<R>(&self, f: impl FnOnce(&PiAnalysis, &Extension) -> Result<R>) -> Result<R> {
        let ext = extend_field(self.an.hopf.field(), 2)?;
        let h2 = self.an.hopf.extend_scalars(&ext);
        let an2 = Analysis::new(&h2, self.an.cap, self.an.seed)?;
        let pi2 = PiAnalysis::new(&an2, self.budget);
        f(&pi2, &ext)
    }
}

/// Pairs of classes with equal verdict vectors (kernels differ by construction).
fn coincidences(classes: &[FlatClass]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            if classes[i].verdicts == classes[j].verdicts {
                out.push((i, j));
            }
        }
    }
    out
}

/// `x + N` with `x = 1 − g₁` for a central `g₁` of order `p` and `N` the
/// group sum: flat, and outside every proper subgroup algebra.
pub fn example_xn(h: &HopfAlgebra) -> Result<(FlatMap, usize, usize, String)> {
    let g = h.group().ok_or_else(|| Error::Unsupported("the x+N example needs a group algebra".into()))?;
    let f = h.field();
    let p = f.p() as usize;
    if g.is_abelian() || !g.is_p_group(p) {
        return Err(Error::Precondition("the x+N example needs a nonabelian p-group".into()));
    }
    let center = g.center();
    let g1 = *center
        .iter()
        .find(|&&c| c != g.identity() && g.elem_order(c) == p)
        .ok_or_else(|| Error::Precondition("no central element of order p".into()))?;
    let mut u = vec![1 as Fe; g.order()];
    u[g.identity()] = f.add(u[g.identity()], 1);
    u[g1] = f.sub(u[g1], 1);
    let fm = flat_test(h.algebra(), &u)?;
    let supp = support(&u);
    let proper: Vec<Subgroup> = g.subgroups().into_iter().filter(|s| s.len() < g.order()).collect();
    let excluded = proper.iter().filter(|s| !supp.iter().all(|x| s.binary_search(x).is_ok())).count();
    Ok((fm, proper.len(), excluded, g.names()[g1].clone()))
}

pub fn verify_xn_example(an: &Analysis) -> Result<Check> {
    let name = "xN-example";
    Check::from_result(name, (|| {
        let (fm, proper, excluded, g1) = example_xn(&an.hopf)?;
        let pp = is_p_point(&an.hopf, &fm)?;
        let ok = fm.flat && fm.criteria_agree() && proper == excluded && !pp.is_p_point;
        Ok(Check::new(
            name,
            ok,
            json!({ "central_element": g1, "element": an.hopf.algebra().format_element(&fm.u),
                    "jordan_type": fm.jordan_type, "flat": fm.flat, "proper_subgroups": proper,
                    "memberships_failed": excluded, "is_p_point": pp.is_p_point }),
        ))
    })())
}

/// Every discovered flat class has a proper restriction kernel.
pub fn verify_kernel_lemma(pi: &PiAnalysis) -> Result<Check> {
    let name = "kernel-lemma";
    let ring = &pi.an.ring;
    let mut rows = Vec::new();
    let mut ok = true;
    let mut sources: Vec<(&str, &PiSupportSample)> = Vec::new();
    match pi.p_point_classes() {
        Ok(s) => sources.push(("p_points", s)),
        Err(Error::Unsupported(_)) => {}
        Err(e) => return Err(e),
    }
    sources.push(("flat_points", pi.flat_points_whole()?));
    for (src, s) in sources {
        for c in &s.classes {
            let k = c.kernel.as_ref().expect("kernels computed");
            let proper = kernel_is_proper(ring, k);
            let radical_proper = !k.is_irrelevant_up_to_radical();
            ok &= proper && radical_proper;
            rows.push(json!({ "source": src, "representative": pi.alg().format_element(&c.ambient),
                              "kernel": k.formatted_gens(), "proper": proper, "radical_proper": radical_proper }));
        }
    }
    Ok(Check::new(name, ok, json!({ "classes": rows, "cap": ring.cap })))
}

/// Every flat map into a local group algebra is equivalent to a p-point
/// with the same restriction kernel.
pub fn verify_equiv(pi: &PiAnalysis) -> Result<Check> {
    Check::from_result("equiv", verify_equiv_inner(pi))
}

fn verify_equiv_inner(pi: &PiAnalysis) -> Result<Check> {
    let name = "equiv";
    let an = pi.an;
    if an.hopf.group().is_none() {
        return Err(Error::Unsupported("equivalence to p-points needs a group algebra".into()));
    }
    if an.structure.simples.len() != 1 || an.structure.simples[0].dim() != 1 {
        return Err(Error::Unsupported("target is not local".into()));
    }
    let mut maps: Vec<(String, FlatMap)> = Vec::new();
    if let Ok((fm, ..)) = example_xn(&an.hopf) {
        maps.push(("x+N".into(), fm));
    }
    for (j, c) in pi.flat_points_whole()?.classes.iter().enumerate() {
        maps.push((format!("flat class {j}"), c.rep.clone()));
    }
    let mut ok = true;
    let mut rows = Vec::new();
    let mut pending = Vec::new();
    for (label, fm) in maps {
        match equiv_row(pi, &label, &fm)? {
            Some((r_ok, row)) => {
                ok &= r_ok;
                rows.push(row);
            }
            None => pending.push((label, fm)),
        }
    }
    if !pending.is_empty() {
        pi.with_extension(|pi2, ext| {
            for (label, fm) in &pending {
                let fm2 = flat_test(pi2.alg(), &ext.embed_slice(&fm.u))?;
                match equiv_row(pi2, label, &fm2)? {
                    Some((r_ok, mut row)) => {
                        ok &= r_ok;
                        row["field_order"] = json!(ext.field.order());
                        rows.push(row);
                    }
                    None => {
                        ok = false;
                        rows.push(json!({ "map": label, "match": null, "field_order": ext.field.order() }));
                    }
                }
            }
            Ok(())
        })?;
    }
    let p_classes = pi.p_point_classes()?;
    Ok(Check::new(
        name,
        ok,
        json!({ "maps": rows, "p_point_classes": p_classes.classes.len(),
                "verdict_coincidences": p_classes.verdict_coincidences }),
    ))
}

/// Kernel, matching p-point, family equivalence and the coinduced-module
/// checks for one flat map; `None` when no p-point over the current field
/// has the same kernel.
fn equiv_row(pi: &PiAnalysis, label: &str, fm: &FlatMap) -> Result<Option<(bool, Value)>> {
    let alg = pi.alg();
    let ring = &pi.an.ring;
    let k = pi.kernel(fm)?;
    let Some(j) = pi.find_p_class(&k)? else { return Ok(None) };
    let beta_class = &pi.p_point_classes()?.classes[j];
    let beta = &beta_class.rep;
    let lemma = kernel_is_proper(ring, &k);
    let ca = coinduce(alg, fm)?;
    let cb = coinduce(alg, beta)?;
    let fam = pi.family()?.extended(vec![("coind(a)".into(), ca.clone()), ("coind(b)".into(), cb)]);
    let eq = pi.equivalent(fm, beta, &fam)?;
    let mechanism = support_ideal(ring, &ca)?.radical_equal(&k);
    let shapiro = ring.ext(&ca, ring.cap)?.dims.iter().all(|&d| d == 1);
    let ok = lemma && eq.equivalent_on_family && eq.kernels_equal && mechanism && shapiro;
    Ok(Some((
        ok,
        json!({ "map": label, "element": alg.format_element(&fm.u), "kernel": k.formatted_gens(),
                "kernel_lemma": lemma,
                "match": { "class": j, "representative": alg.format_element(&beta_class.ambient),
                           "witness": beta_class.witness },
                "equivalence": eq, "coinduced_dim": ca.dim(),
                "coinduced_support_matches_kernel": mechanism, "coinduced_ext_dims_one": shapiro }),
    )))
}

/// `ρ_*: P(G)_𝓑 → F(B)` is injective: images stay flat, verdicts on block
/// modules are preserved, and inequivalent classes are separated.
pub fn verify_injective(pi: &PiAnalysis) -> Result<Check> {
    Check::from_result("injective", (|| {
        let mut ok = true;
        let mut blocks = Vec::new();
        for i in 0..pi.an.blocks.len() {
            let (b_ok, ev) = injective_block(pi, i)?;
            ok &= b_ok;
            blocks.push(ev);
        }
        Ok(Check::new("injective", ok, json!({ "blocks": blocks })))
    })())
}

fn injective_block(pi: &PiAnalysis, i: usize) -> Result<(bool, Value)> {
    let sup = pi.block_pi_support(i)?;
    let fam = pi.block_family(i)?;
    let fb = pi.flat_points_of_block(i)?;
    let e = &pi.an.blocks.blocks[i].idempotent;
    let alg = pi.alg();
    let mut ok = true;
    let mut images = Vec::new();
    for c in &sup.classes {
        let r = pi.rho_star(&c.rep, i)?;
        let eu = alg.mul(e, &c.ambient);
        let preserved = fam.verdicts(&c.ambient) == fam.verdicts(&eu);
        let target = fb.classes.iter().position(|f| f.verdicts == fam.verdicts(&eu));
        ok &= r.flat && preserved;
        images.push(json!({ "flat": r.flat, "verdicts_preserved": preserved, "f_class": target,
                            "jordan_type": r.jordan_type }));
    }
    let mut pairs = Vec::new();
    for a in 0..sup.classes.len() {
        for b in a + 1..sup.classes.len() {
            let (ca, cb) = (&sup.classes[a], &sup.classes[b]);
            let eua = alg.mul(e, &ca.ambient);
            let eub = alg.mul(e, &cb.ambient);
            let (va, vb) = (fam.verdicts(&eua), fam.verdicts(&eub));
            let witness = match va.iter().zip(&vb).position(|(x, y)| x != y) {
                Some(j) => Some(fam.names[j].clone()),
                None => pi.separating_witness(i, ca, cb)?,
            };
            ok &= witness.is_some();
            pairs.push(json!({ "classes": [a, b], "witness": witness }));
        }
    }
    Ok((
        ok,
        json!({ "block": i, "p_classes": sup.classes.len(), "f_classes": fb.classes.len(),
                "images": images, "pairs": pairs, "f_sample_stabilized": fb.stabilized }),
    ))
}

/// For a local principal block, `ρ₀_*` is a bijection between the class
/// sets and closed-set memberships agree on the family.
pub fn verify_homeo_local(pi: &PiAnalysis) -> Result<Check> {
    Check::from_result("homeo-local", verify_homeo_inner(pi))
}

fn verify_homeo_inner(pi: &PiAnalysis) -> Result<Check> {
    let an = pi.an;
    if !an.principal_is_local() {
        return Err(Error::Unsupported("principal block is not local".into()));
    }
    let i = an.blocks.principal;
    let sup = pi.block_pi_support(i)?;
    let fam = pi.block_family(i)?;
    let fb = pi.flat_points_of_block(i)?;
    let e = &an.blocks.blocks[i].idempotent;
    let alg = pi.alg();
    let image: Vec<Option<usize>> = sup
        .classes
        .iter()
        .map(|c| {
            let v = fam.verdicts(&alg.mul(e, &c.ambient));
            fb.classes.iter().position(|f| f.verdicts == v)
        })
        .collect();
    let hit: BTreeSet<usize> = image.iter().flatten().copied().collect();
    let injective = image.iter().all(|x| x.is_some()) && hit.len() == image.len();
    // F-classes not reached by rational p-points: over the whole algebra,
    // look for a p-point of equal kernel after a quadratic extension
    let unhit: Vec<usize> = (0..fb.classes.len()).filter(|f| !hit.contains(f)).collect();
    let mut extended = Vec::new();
    if !unhit.is_empty() && an.blocks.len() == 1 {
        pi.with_extension(|pi2, ext| {
            for &f in &unhit {
                let fm2 = flat_test(pi2.alg(), &ext.embed_slice(&fb.classes[f].rep.u))?;
                let k2 = pi2.kernel(&fm2)?;
                if let Some(j) = pi2.find_p_class(&k2)? {
                    extended.push(json!({ "f_class": f, "p_class": j, "field_order": ext.field.order(),
                                          "kernel": k2.formatted_gens() }));
                }
            }
            Ok(())
        })?;
    }
    let surjective = hit.len() + extended.len() == fb.classes.len();
    let mut closed_ok = true;
    for j in 0..fam.modules.len() {
        let p_side: BTreeSet<usize> =
            (0..sup.classes.len()).filter(|&c| image[c].is_some_and(|f| !fb.classes[f].verdicts[j])).collect();
        let f_side: BTreeSet<usize> = (0..fb.classes.len()).filter(|&f| !fb.classes[f].verdicts[j]).collect();
        let pulled: BTreeSet<usize> =
            (0..sup.classes.len()).filter(|&c| image[c].is_some_and(|f| f_side.contains(&f))).collect();
        closed_ok &= p_side == pulled;
    }
    let kernels: Vec<Value> =
        sup.classes.iter().map(|c| json!(c.kernel.as_ref().map(|k| k.formatted_gens()))).collect();
    let ok = injective && surjective && closed_ok;
    let status = if ok || fb.stabilized { if ok { Status::Pass } else { Status::Fail } } else { Status::Inconclusive };
    Ok(Check::with_status(
        "homeo-local",
        status,
        json!({ "p_classes": sup.classes.len(), "f_classes": fb.classes.len(), "image": image,
                "kernels": kernels, "injective": injective, "surjective": surjective,
                "closed_sets_correspond": closed_ok, "f_sample_exhaustive": fb.exhaustive,
                "extended_matches": extended }),
    ))
}

/// `P(G)_𝓑` is the image of the defect group's p-points: Sylow for the
/// principal block and for direct products `P × H`, trivial for simple blocks.
pub fn verify_defect(pi: &PiAnalysis, i: usize) -> Result<Check> {
    Check::from_result("defect", (|| {
        let an = pi.an;
        let g = an.hopf.group().ok_or_else(|| Error::Unsupported("defect groups need a group algebra".into()))?;
        let p = an.hopf.field().p() as usize;
        let sup = pi.block_pi_support(i)?;
        let sylow = g.sylow(p);
        // G = P × O_p'(G): every block has the Sylow subgroup as defect group
        let direct = g.is_normal(&sylow)
            && (0..g.order())
                .filter(|&x| g.elem_order(x) % p != 0)
                .all(|x| sylow.iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
        let defect: Subgroup = if i == an.blocks.principal || direct {
            sylow
        } else if an.block_is_simple(i) {
            vec![g.identity()]
        } else {
            return Err(Error::Unsupported("defect group outside the principal and simple cases".into()));
        };
        let all = pi.p_point_classes()?;
        // classes realised by some flat element supported on an abelian subgroup of D
        let inside: Vec<usize> = abelian_p_subgroups(g, p)
            .iter()
            .filter(|a| a.iter().all(|x| defect.binary_search(x).is_ok()))
            .flat_map(|a| {
                let a = a.clone();
                let alg = pi.alg();
                let f = an.hopf.field().clone();
                let budget = pi.budget;
                Candidates::new(f.order(), a.len(), budget, an.seed)
                    .filter_map(move |c| {
                        let mut u = vec![0; alg.dim()];
                        for (&x, &cx) in a.iter().zip(&c) {
                            u[x] = cx;
                        }
                        flat_test(alg, &u).ok().filter(|fm| fm.flat)
                    })
                    .collect::<Vec<_>>()
            })
            .filter_map(|fm| {
                let k = pi.kernel(&fm).ok()?;
                all.classes.iter().position(|c| c.kernel.as_ref().unwrap().radical_equal(&k))
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let block_side: Vec<usize> = sup
            .classes
            .iter()
            .filter_map(|c| all.classes.iter().position(|a| a.ambient == c.ambient))
            .collect();
        let ok = inside == block_side;
        Ok(Check::new(
            "defect",
            ok,
            json!({ "block": i, "defect_group": defect.iter().map(|&x| g.names()[x].clone()).collect::<Vec<_>>(),
                    "image_of_defect_classes": inside, "block_classes": block_side }),
        ))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;

    fn elem(h: &HopfAlgebra, terms: &[(usize, Fe)]) -> Vec<Fe> {
        let mut u = vec![0; h.dim()];
        for &(i, c) in terms {
            u[i] = c;
        }
        u
    }

    #[test]
    fn flat_basics() {
        let f = Field::prime(3).unwrap();
        let c = truncated_algebra(&f);
        let fm = flat_test(&c, &c.basis(1)).unwrap();
        assert_eq!(fm.jordan_type, vec![3]);
        assert!(fm.flat && fm.criteria_agree());
        let zero = flat_test(&c, &c.zero()).unwrap();
        assert_eq!(zero.jordan_type, vec![1, 1, 1]);
        assert!(!zero.flat && zero.criteria_agree());
        assert!(flat_test(&c, c.unit()).is_err());
        let z4 = builtin("kZ4@p2").unwrap();
        let u = elem(&z4, &[(0, 1), (2, 1)]);
        let fm = flat_test(z4.algebra(), &u).unwrap();
        assert_eq!(fm.jordan_type, vec![2, 2]);
        assert!(fm.flat);
    }

    #[test]
    fn restriction_along_flat_map_is_free() {
        let h = builtin("kZ2xZ2@p2").unwrap();
        let u = elem(&h, &[(0, 1), (1, 1)]);
        let fm = flat_test(h.algebra(), &u).unwrap();
        let c = truncated_algebra(h.field());
        let phi = fm.algebra_map(h.algebra(), h.algebra().unit());
        let r = ModuleRep::regular(h.algebra()).restrict(&phi, &c, h.algebra()).unwrap();
        assert_eq!(jordan_type(r.basis_action(1)), vec![2, 2]);
        let co = coinduce(h.algebra(), &fm).unwrap();
        assert_eq!(co.dim(), 2);
    }

    #[test]
    fn carlson_dimensions() {
        let h = builtin("kZ2xZ2@p2").unwrap();
        let r = CohomologyRing::compute(&h, 4, 0).unwrap();
        let n = r.ring.nvars();
        assert_eq!(carlson_module(&r, &Poly::var(n, 0)).unwrap().dim(), 2);
        let z2 = builtin("kZ2@p2").unwrap();
        let r = CohomologyRing::compute(&z2, 4, 0).unwrap();
        assert_eq!(carlson_module(&r, &Poly::var(1, 0)).unwrap().dim(), 0);
        assert!(carlson_module(&r, &Poly::zero()).is_err());
    }

    #[test]
    fn kernels_on_small_groups() {
        let z2 = builtin("kZ2@p2").unwrap();
        let r = CohomologyRing::compute(&z2, 6, 0).unwrap();
        let fm = flat_test(z2.algebra(), &elem(&z2, &[(0, 1), (1, 1)])).unwrap();
        let k = induced_kernel(&r, &fm).unwrap();
        assert!(k.gens.is_empty());
        let e = builtin("kZ2xZ2@p2").unwrap();
        let r = CohomologyRing::compute(&e, 6, 0).unwrap();
        let fm = flat_test(e.algebra(), &elem(&e, &[(0, 1), (1, 1)])).unwrap();
        let k = induced_kernel(&r, &fm).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.gens.len(), 1);
        assert!(kernel_is_proper(&r, &k));
    }

    #[test]
    fn klein_four_has_three_classes() {
        let h = builtin("kZ2xZ2@p2").unwrap();
        let an = Analysis::new(&h, 6, 0).unwrap();
        let pi = PiAnalysis::new(&an, 1000);
        let classes = pi.p_point_classes().unwrap();
        assert_eq!(classes.classes.len(), 3);
        let mut kernels: Vec<String> =
            classes.classes.iter().map(|c| c.kernel.as_ref().unwrap().formatted_gens().join(",")).collect();
        kernels.sort();
        assert_eq!(kernels, vec!["x", "x + y", "y"]);
        assert!(verify_homeo_local(&pi).unwrap().passed());
    }

    #[test]
    fn dihedral_example() {
        let h = builtin("kD8@p2").unwrap();
        let (fm, proper, excluded, _) = example_xn(&h).unwrap();
        assert!(fm.flat);
        assert_eq!(fm.jordan_type, vec![2; 4]);
        assert_eq!((proper, excluded), (9, 9));
        assert!(!is_p_point(&h, &fm).unwrap().is_p_point);
        assert!(example_xn(&builtin("kZ4@p2").unwrap()).is_err());
    }
}
