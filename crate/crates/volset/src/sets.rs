//! Set-valued objects and counters over point sets of F_q^d: volume sets,
//! starred determinant sets, the wedge-image counter, cross-product sets,
//! dot-product sets, and incidence count tables.
//!
//! Starred sets (D*, F*, B*) strip their zero per definition; volume sets and
//! dot-product sets keep it. All counting is exact; enumerations are capped
//! by a [`Budget`] and may stop early only when the result set is provably
//! complete (a volume set can never exceed the q field values).

use std::collections::{BTreeMap, BTreeSet};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gf::{Elt, Field};
use crate::grassmann::{enumerate_subspaces, Subspace};
use crate::linalg::{self, BilinearForm, Vector};
use crate::par::par_map;

/// A deduplicated, sorted set of points of F_q^d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    d: usize,
    points: Vec<Vector>,
}

impl PointSet {
    pub fn new(f: &Field, d: usize, mut points: Vec<Vector>) -> Result<PointSet> {
        for p in &points {
            if p.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: p.len() });
            }
            for &c in p {
                f.check(c)?;
            }
        }
        points.sort();
        points.dedup();
        Ok(PointSet { d, points })
    }

    /// All q^d points of the space.
    pub fn full_space(f: &Field, d: usize) -> PointSet {
        let total = (f.q() as u128).pow(d as u32);
        let points = (0..total).map(|i| decode_point(f, d, i as u64)).collect();
        PointSet { d, points }
    }

    /// Builds a set from point indices (base-q digits, coordinate 0 least
    /// significant), as drawn by the seeded samplers.
    pub fn from_indices(f: &Field, d: usize, indices: &[u64]) -> PointSet {
        let mut points: Vec<Vector> = indices.iter().map(|&i| decode_point(f, d, i)).collect();
        points.sort();
        points.dedup();
        PointSet { d, points }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn contains(&self, p: &[Elt]) -> bool {
        self.points.binary_search_by(|x| x.as_slice().cmp(p)).is_ok()
    }

    /// The subset lying inside the subspace.
    pub fn intersect(&self, f: &Field, h: &Subspace) -> PointSet {
        let points = self.points.iter().filter(|p| h.contains(f, p)).cloned().collect();
        PointSet { d: self.d, points }
    }

    /// The set without the zero point.
    pub fn without_zero(&self) -> PointSet {
        let points = self.points.iter().filter(|p| p.iter().any(|&c| c != 0)).cloned().collect();
        PointSet { d: self.d, points }
    }
}

pub fn decode_point(f: &Field, d: usize, mut index: u64) -> Vector {
    let q = f.q();
    let mut p = Vec::with_capacity(d);
    for _ in 0..d {
        p.push(index % q);
        index /= q;
    }
    p
}

/// A set of field elements, flagged when a starred definition removed zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarSet {
    pub elements: BTreeSet<Elt>,
    pub zero_stripped: bool,
}

impl ScalarSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, t: Elt) -> bool {
        self.elements.contains(&t)
    }
}

/// A set of vectors (the cross-product set F*_E; zero is never a member).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VectorSet {
    pub vectors: BTreeSet<Vector>,
}

impl VectorSet {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Exact multiplicity map g_E: wedge value -> number of ordered (d-1)-tuples
/// from E realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeCounter {
    pub counts: BTreeMap<Vector, u64>,
}

impl WedgeCounter {
    pub fn get(&self, x: &[Elt]) -> u64 {
        self.counts.get(x).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Exact incidence counts nu_t for every t, with the deviation from the
/// |E||F|/q main term kept as the integer q*nu_t - |E||F|.
#[derive(Debug, Clone)]
pub struct CountTable {
    pub form: BilinearForm,
    pub q: u64,
    pub e_size: u64,
    pub f_size: u64,
    counts: Vec<u64>,
}

impl CountTable {
    pub fn nu(&self, t: Elt) -> u64 {
        self.counts[t as usize]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// q*nu_t - |E||F|, the deviation scaled by q to stay integral.
    pub fn deviation_scaled(&self, t: Elt) -> i128 {
        self.q as i128 * self.nu(t) as i128 - self.e_size as i128 * self.f_size as i128
    }

    /// Exact form of the incidence bound for t != 0:
    /// (q*nu_t - |E||F|)^2 <= |E||F| q^(d+1).
    pub fn bound_holds(&self, t: Elt, d: usize) -> bool {
        let dev = self.deviation_scaled(t);
        let rhs = self.e_size as i128 * self.f_size as i128 * (self.q as i128).pow(d as u32 + 1);
        dev * dev <= rhs
    }
}

/// How to materialize a volume set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VolumeMode {
    /// All |E|^d ordered tuples through the determinant.
    Naive,
    /// Wedge images of E^(d-1) dotted against E.
    Wedge,
    /// Hyperplane decomposition: E . F*_E, plus zero.
    Decomposed,
}

/// How to materialize the cross-product set F*_E.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossMode {
    /// Enumerate all |E|^(d-1) wedge tuples.
    Enumerated,
    /// Per-hyperplane starred determinant sets scaled onto each normal line.
    Decomposed,
}

/// Odometer over k indices into 0..n, first index fastest.
pub(crate) struct Tuples {
    idx: Vec<usize>,
    n: usize,
    started: bool,
}

impl Tuples {
    pub(crate) fn new(n: usize, k: usize) -> Tuples {
        Tuples { idx: vec![0; k], n, started: false }
    }

    pub(crate) fn next(&mut self) -> Option<&[usize]> {
        if !self.started {
            self.started = true;
            if self.n == 0 && !self.idx.is_empty() {
                return None;
            }
            return Some(&self.idx);
        }
        let mut i = 0;
        while i < self.idx.len() {
            self.idx[i] += 1;
            if self.idx[i] < self.n {
                return Some(&self.idx);
            }
            self.idx[i] = 0;
            i += 1;
        }
        None
    }
}

/// vol(E) = {vol(x^1, ..., x^d) : x^j in E}; all three modes agree exactly.
pub fn volume_set(f: &Field, e: &PointSet, mode: VolumeMode, budget: &Budget) -> Result<ScalarSet> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let d = e.dim();
    if d < 2 {
        return Err(Error::WrongAmbientDim { expected: 2, got: d });
    }
    let q = f.q() as usize;
    let mut elements = BTreeSet::new();
    match mode {
        VolumeMode::Naive => {
            let mut scratch: Vec<Vector> = vec![vec![0; d]; d];
            let mut tuples = Tuples::new(e.len(), d);
            while let Some(idx) = tuples.next() {
                budget.charge(1)?;
                for (row, &i) in scratch.iter_mut().zip(idx) {
                    row.copy_from_slice(&e.points()[i]);
                }
                elements.insert(linalg::det_in_place(f, &mut scratch)?);
                if elements.len() == q {
                    break;
                }
            }
        }
        VolumeMode::Wedge => {
            let mut seen: BTreeSet<Vector> = BTreeSet::new();
            let mut minor: Vec<Vector> = vec![vec![0; d - 1]; d - 1];
            let mut w = vec![0; d];
            let mut rows: Vec<Vector> = vec![vec![0; d]; d - 1];
            let mut tuples = Tuples::new(e.len(), d - 1);
            'outer: while let Some(idx) = tuples.next() {
                budget.charge(1)?;
                for (row, &i) in rows.iter_mut().zip(idx) {
                    row.copy_from_slice(&e.points()[i]);
                }
                linalg::wedge_into(f, &rows, &mut minor, &mut w)?;
                if !seen.insert(w.clone()) {
                    continue;
                }
                if w.iter().all(|&c| c == 0) {
                    elements.insert(0);
                } else {
                    budget.charge(e.len() as u64)?;
                    for x in e.points() {
                        elements.insert(linalg::dot(f, x, &w)?);
                    }
                }
                if elements.len() == q {
                    break 'outer;
                }
            }
        }
        VolumeMode::Decomposed => {
            let cross = cross_product_set(f, e, CrossMode::Decomposed, budget)?;
            // A repeated row always exists once E is nonempty, so 0 is a volume.
            elements.insert(0);
            'outer: for w in &cross.vectors {
                budget.charge(e.len() as u64)?;
                for x in e.points() {
                    elements.insert(linalg::dot(f, x, w)?);
                    if elements.len() == q {
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(ScalarSet { elements, zero_stripped: false })
}

/// D*: nonzero determinants of all k x k coordinate matrices with rows drawn
/// from the points of `pts`, written in the canonical basis of `h`.
pub fn determinant_set_star(
    f: &Field,
    h: &Subspace,
    pts: &PointSet,
    budget: &Budget,
) -> Result<ScalarSet> {
    let coords: Result<Vec<Vector>> = pts
        .points()
        .iter()
        .map(|p| h.coordinates(f, p).ok_or(Error::PointOutsideSubspace))
        .collect();
    det_star_of_coords(f, &coords?, h.dim_k(), budget)
}

/// D* relative to an arbitrary independent basis of the carrier subspace.
/// The cardinality is basis-invariant: a change of basis scales every
/// determinant by the same nonzero constant.
pub fn determinant_set_star_with_basis(
    f: &Field,
    basis: &[Vector],
    pts: &PointSet,
    budget: &Budget,
) -> Result<ScalarSet> {
    let coords: Result<Vec<Vector>> = pts
        .points()
        .iter()
        .map(|p| {
            crate::grassmann::coordinates_with_basis(f, basis, p).ok_or(Error::PointOutsideSubspace)
        })
        .collect();
    det_star_of_coords(f, &coords?, basis.len(), budget)
}

fn det_star_of_coords(f: &Field, coords: &[Vector], k: usize, budget: &Budget) -> Result<ScalarSet> {
    let max = f.q() as usize - 1;
    let mut elements = BTreeSet::new();
    let mut scratch: Vec<Vector> = vec![vec![0; k]; k];
    let mut tuples = Tuples::new(coords.len(), k);
    while let Some(idx) = tuples.next() {
        budget.charge(1)?;
        for (row, &i) in scratch.iter_mut().zip(idx) {
            row.copy_from_slice(&coords[i]);
        }
        let det = linalg::det_in_place(f, &mut scratch)?;
        if det != 0 {
            elements.insert(det);
            if elements.len() == max {
                break;
            }
        }
    }
    Ok(ScalarSet { elements, zero_stripped: true })
}

/// g_E: exact multiplicities of every wedge value over the ordered
/// (d-1)-tuples of E.
pub fn wedge_counter(f: &Field, e: &PointSet, budget: &Budget) -> Result<WedgeCounter> {
    let d = e.dim();
    if d < 2 {
        return Err(Error::WrongAmbientDim { expected: 2, got: d });
    }
    let mut counts: BTreeMap<Vector, u64> = BTreeMap::new();
    let mut minor: Vec<Vector> = vec![vec![0; d - 1]; d - 1];
    let mut w = vec![0; d];
    let mut rows: Vec<Vector> = vec![vec![0; d]; d - 1];
    let mut tuples = Tuples::new(e.len(), d - 1);
    while let Some(idx) = tuples.next() {
        budget.charge(1)?;
        for (row, &i) in rows.iter_mut().zip(idx) {
            row.copy_from_slice(&e.points()[i]);
        }
        linalg::wedge_into(f, &rows, &mut minor, &mut w)?;
        *counts.entry(w.clone()).or_insert(0) += 1;
    }
    Ok(WedgeCounter { counts })
}

/// F*_E: the nonzero wedge values of E^(d-1).
///
/// The decomposed mode applies the hyperplane identity: for each H in
/// G(d-1, d) the wedge values of tuples inside H are exactly
/// { delta * w_H : delta in D*_{E cap H} } where w_H is the wedge of H's
/// canonical basis, and distinct hyperplanes contribute disjoint lines.
pub fn cross_product_set(
    f: &Field,
    e: &PointSet,
    mode: CrossMode,
    budget: &Budget,
) -> Result<VectorSet> {
    let d = e.dim();
    if d < 2 {
        return Err(Error::WrongAmbientDim { expected: 2, got: d });
    }
    let mut vectors = BTreeSet::new();
    match mode {
        CrossMode::Enumerated => {
            let mut minor: Vec<Vector> = vec![vec![0; d - 1]; d - 1];
            let mut w = vec![0; d];
            let mut rows: Vec<Vector> = vec![vec![0; d]; d - 1];
            let mut tuples = Tuples::new(e.len(), d - 1);
            while let Some(idx) = tuples.next() {
                budget.charge(1)?;
                for (row, &i) in rows.iter_mut().zip(idx) {
                    row.copy_from_slice(&e.points()[i]);
                }
                linalg::wedge_into(f, &rows, &mut minor, &mut w)?;
                if w.iter().any(|&c| c != 0) {
                    vectors.insert(w.clone());
                }
            }
        }
        CrossMode::Decomposed => {
            let family = enumerate_subspaces(f, d - 1, d)?;
            budget.charge(family.members.len() as u64)?;
            let per_h: Vec<Result<Vec<Vector>>> = par_map(family.members.len(), |i| {
                let h = &family.members[i];
                let inside = e.intersect(f, h);
                let dstar = determinant_set_star(f, h, &inside, budget)?;
                if dstar.is_empty() {
                    return Ok(Vec::new());
                }
                let w_h = linalg::wedge(f, h.basis())?;
                Ok(dstar
                    .elements
                    .iter()
                    .map(|&delta| w_h.iter().map(|&c| f.mul(delta, c)).collect())
                    .collect())
            });
            for r in per_h {
                vectors.extend(r?);
            }
        }
    }
    Ok(VectorSet { vectors })
}

/// E . F = {u . v : u in E, v in F}.
pub fn dot_product_set(f: &Field, e: &PointSet, g: &PointSet) -> Result<ScalarSet> {
    if e.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: e.dim(), got: g.dim() });
    }
    let q = f.q() as usize;
    let mut elements = BTreeSet::new();
    'outer: for u in e.points() {
        for v in g.points() {
            elements.insert(linalg::dot(f, u, v)?);
            if elements.len() == q {
                break 'outer;
            }
        }
    }
    Ok(ScalarSet { elements, zero_stripped: false })
}

/// nu_t = #{(x, y) in E x F : B(x, y) = t} for every t in F_q.
pub fn incidence_count(
    f: &Field,
    e: &PointSet,
    g: &PointSet,
    form: &BilinearForm,
) -> Result<CountTable> {
    if e.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: e.dim(), got: g.dim() });
    }
    if form.dim() != e.dim() {
        return Err(Error::DimensionMismatch { expected: form.dim(), got: e.dim() });
    }
    let mut counts = vec![0u64; f.q() as usize];
    for x in e.points() {
        for y in g.points() {
            counts[form.eval(f, x, y)? as usize] += 1;
        }
    }
    Ok(CountTable {
        form: form.clone(),
        q: f.q(),
        e_size: e.len() as u64,
        f_size: g.len() as u64,
        counts,
    })
}

/// B*(E) = {B(x, y) : x, y in E} \ {0}, for planar sets only.
pub fn bstar(f: &Field, e: &PointSet, form: &BilinearForm) -> Result<ScalarSet> {
    if e.dim() != 2 {
        return Err(Error::WrongAmbientDim { expected: 2, got: e.dim() });
    }
    if form.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: form.dim() });
    }
    let max = f.q() as usize - 1;
    let mut elements = BTreeSet::new();
    'outer: for x in e.points() {
        for y in e.points() {
            let v = form.eval(f, x, y)?;
            if v != 0 {
                elements.insert(v);
                if elements.len() == max {
                    break 'outer;
                }
            }
        }
    }
    Ok(ScalarSet { elements, zero_stripped: true })
}

/// Exact check of |B*(E)| >= q (1 - (q + q^(3/2)) / (|E| + q^(3/2))), i.e.
/// |B*| (|E| + q^(3/2)) >= q (|E| - q). The irrational q^(3/2) is eliminated
/// by moving it to one side and squaring, all in integers.
pub fn cor24_bound_holds(q: u64, e_size: u64, bstar_size: u64) -> bool {
    let (q, n, b) = (q as i128, e_size as i128, bstar_size as i128);
    // b * q^(3/2) >= q*n - q^2 - b*n ?
    let rhs = q * n - q * q - b * n;
    if rhs <= 0 {
        return true;
    }
    b * b * q * q * q >= rhs * rhs
}
