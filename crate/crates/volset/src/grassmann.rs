//! Subspaces of F_q^d in canonical reduced-row-echelon bases, Grassmannian
//! enumeration, orthogonal hyperplanes, and coordinates relative to a basis.
//!
//! The canonical RREF basis makes subspace equality syntactic: two subspaces
//! are equal exactly when their basis matrices are equal componentwise.

use crate::error::{Error, Result};
use crate::gf::{Elt, Field};
use crate::linalg::Vector;

/// A k-dimensional subspace of F_q^d, held as its unique RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    d: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    /// Canonicalizes any spanning set into the RREF basis of its span.
    pub fn from_spanning(f: &Field, vectors: &[Vector]) -> Result<Subspace> {
        let d = match vectors.first() {
            Some(v) => v.len(),
            None => return Err(Error::DependentBasis),
        };
        for v in vectors {
            if v.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: v.len() });
            }
        }
        let basis = rref(f, vectors.to_vec());
        Ok(Subspace { d, basis })
    }

    /// The zero subspace of F_q^d.
    pub fn zero(d: usize) -> Subspace {
        Subspace { d, basis: Vec::new() }
    }

    pub fn dim_k(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.d
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Column index of each row's leading 1.
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r.iter().position(|&c| c != 0).expect("basis rows are nonzero")).collect()
    }

    pub fn contains(&self, f: &Field, point: &[Elt]) -> bool {
        self.coordinates(f, point).is_some()
    }

    /// Coordinates of `point` with respect to the RREF basis, or None when
    /// the point lies outside the subspace. Since each basis row has a 1 in
    /// its pivot column and zeros in the others, the candidate coordinates
    /// are just the point's pivot-column entries; reconstruction checks them.
    pub fn coordinates(&self, f: &Field, point: &[Elt]) -> Option<Vector> {
        if point.len() != self.d {
            return None;
        }
        let pivots = self.pivot_cols();
        let coords: Vector = pivots.iter().map(|&c| point[c]).collect();
        let mut recon = vec![0; self.d];
        for (ci, row) in coords.iter().zip(&self.basis) {
            for (r, &v) in recon.iter_mut().zip(row) {
                *r = f.add(*r, f.mul(*ci, v));
            }
        }
        if recon == point {
            Some(coords)
        } else {
            None
        }
    }

    /// All q^k points of the subspace, in coefficient-odometer order.
    pub fn points(&self, f: &Field) -> Vec<Vector> {
        let k = self.basis.len();
        let q = f.q();
        let mut out = Vec::new();
        let mut coeffs = vec![0u64; k];
        loop {
            let mut pt = vec![0; self.d];
            for (c, row) in coeffs.iter().zip(&self.basis) {
                if *c != 0 {
                    for (p, &v) in pt.iter_mut().zip(row) {
                        *p = f.add(*p, f.mul(*c, v));
                    }
                }
            }
            out.push(pt);
            let mut i = 0;
            while i < k {
                coeffs[i] += 1;
                if coeffs[i] < q {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
        out
    }
}

/// Reduced row echelon form; returns the nonzero rows.
#[allow(clippy::needless_range_loop)]
pub fn rref(f: &Field, mut rows: Vec<Vector>) -> Vec<Vector> {
    if rows.is_empty() {
        return rows;
    }
    let d = rows[0].len();
    let mut lead = 0;
    let mut r = 0;
    while r < rows.len() && lead < d {
        let pivot_row = match (r..rows.len()).find(|&i| rows[i][lead] != 0) {
            Some(i) => i,
            None => {
                lead += 1;
                continue;
            }
        };
        rows.swap(r, pivot_row);
        let inv = f.inv(rows[r][lead]).expect("pivot is nonzero");
        for c in 0..d {
            rows[r][c] = f.mul(rows[r][c], inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][lead] != 0 {
                let factor = rows[i][lead];
                for c in 0..d {
                    let t = f.mul(factor, rows[r][c]);
                    rows[i][c] = f.sub(rows[i][c], t);
                }
            }
        }
        r += 1;
        lead += 1;
    }
    rows.retain(|row| row.iter().any(|&c| c != 0));
    rows
}

/// Basis of {y : My = 0} for the row matrix M, canonicalized to RREF.
pub fn null_space(f: &Field, rows: &[Vector]) -> Vec<Vector> {
    let d = rows[0].len();
    let r = rref(f, rows.to_vec());
    let pivots: Vec<usize> =
        r.iter().map(|row| row.iter().position(|&c| c != 0).expect("rref rows are nonzero")).collect();
    let mut basis = Vec::new();
    for j in 0..d {
        if pivots.contains(&j) {
            continue;
        }
        let mut v = vec![0; d];
        v[j] = 1;
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = f.neg(row[j]);
        }
        basis.push(v);
    }
    rref(f, basis)
}

/// Coordinates of `point` relative to an arbitrary independent basis, by
/// solving the linear system; None when the point is outside the span.
pub fn coordinates_with_basis(f: &Field, basis: &[Vector], point: &[Elt]) -> Option<Vector> {
    let k = basis.len();
    let d = point.len();
    // Augmented system: columns are the basis vectors, last column the point.
    let mut aug: Vec<Vector> = (0..d)
        .map(|row| {
            let mut line: Vector = basis.iter().map(|b| b[row]).collect();
            line.push(point[row]);
            line
        })
        .collect();
    aug = rref(f, aug);
    let mut coords = vec![0; k];
    for row in &aug {
        let lead = row.iter().position(|&c| c != 0)?;
        if lead == k {
            return None; // inconsistent: 0 = nonzero
        }
        coords[lead] = row[k];
    }
    Some(coords)
}

/// The Gaussian binomial coefficient: the number of k-dimensional subspaces
/// of a d-dimensional space over F_q.
pub fn gaussian_binomial(k: usize, d: usize, q: u64) -> Result<u128> {
    if k > d {
        return Err(Error::SubspaceDimOutOfRange { k, d });
    }
    // Pascal-style recurrence [n, k] = [n-1, k-1] + q^k [n-1, k].
    let mut table = vec![vec![0u128; d + 1]; d + 1];
    for n in 0..=d {
        table[n][0] = 1;
        for j in 1..=n {
            let qk = (0..j).try_fold(1u128, |acc, _| acc.checked_mul(q as u128));
            let qk = qk.expect("q^k fits in u128 at desk scale");
            let carry = table[n - 1][j].checked_mul(qk).expect("gaussian binomial fits in u128");
            table[n][j] =
                table[n - 1][j - 1].checked_add(carry).expect("gaussian binomial fits in u128");
        }
    }
    Ok(table[d][k])
}

/// The complete family G(k, d) over F_q.
#[derive(Debug, Clone)]
pub struct SubspaceFamily {
    pub k: usize,
    pub d: usize,
    pub members: Vec<Subspace>,
}

/// Enumerates every k-dimensional subspace of F_q^d exactly once by RREF
/// pivot-pattern generation: choose the pivot columns, then run an odometer
/// over the free entries. Output is sorted for a schedule-independent order.
pub fn enumerate_subspaces(f: &Field, k: usize, d: usize) -> Result<SubspaceFamily> {
    if k > d {
        return Err(Error::SubspaceDimOutOfRange { k, d });
    }
    let q = f.q();
    let mut members = Vec::new();
    if k == 0 {
        members.push(Subspace::zero(d));
        return Ok(SubspaceFamily { k, d, members });
    }
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // Free positions, in row-major order.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &pc) in pivots.iter().enumerate() {
            for j in pc + 1..d {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let mut values = vec![0u64; free.len()];
        loop {
            let mut basis = vec![vec![0; d]; k];
            for (i, &pc) in pivots.iter().enumerate() {
                basis[i][pc] = 1;
            }
            for (&(i, j), &v) in free.iter().zip(&values) {
                basis[i][j] = v;
            }
            members.push(Subspace { d, basis });
            let mut idx = 0;
            while idx < values.len() {
                values[idx] += 1;
                if values[idx] < q {
                    break;
                }
                values[idx] = 0;
                idx += 1;
            }
            if idx == values.len() {
                break;
            }
        }
        // Next k-combination of {0..d-1} in lex order.
        let mut i = k;
        loop {
            if i == 0 {
                pivots.clear();
                break;
            }
            i -= 1;
            if pivots[i] < d - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
        if pivots.is_empty() {
            break;
        }
    }
    members.sort();
    Ok(SubspaceFamily { k, d, members })
}

/// The hyperplane x-perp = {y : x . y = 0} for nonzero x, in canonical basis.
pub fn hyperplane_of(f: &Field, x: &[Elt]) -> Result<Subspace> {
    if x.iter().all(|&c| c == 0) {
        return Err(Error::ZeroVector);
    }
    let basis = null_space(f, &[x.to_vec()]);
    Ok(Subspace { d: x.len(), basis })
}

/// A nonzero normal vector of a (d-1)-dimensional subspace.
pub fn normal_of(f: &Field, h: &Subspace) -> Result<Vector> {
    if h.dim_k() + 1 != h.ambient_dim() {
        return Err(Error::SubspaceDimOutOfRange { k: h.dim_k(), d: h.ambient_dim() });
    }
    let ns = null_space(f, h.basis());
    Ok(ns.into_iter().next().expect("a hyperplane has a one-dimensional orthogonal complement"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{dot, unit};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(2, 3, 3).unwrap(), 13);
        assert_eq!(gaussian_binomial(1, 3, 3).unwrap(), 13);
        assert_eq!(gaussian_binomial(1, 2, 5).unwrap(), 6);
        assert_eq!(gaussian_binomial(0, 4, 3).unwrap(), 1);
        assert_eq!(gaussian_binomial(4, 4, 3).unwrap(), 1);
        assert!(gaussian_binomial(5, 4, 3).is_err());
    }

    #[test]
    fn enumeration_matches_gaussian_binomial() {
        let f = Field::new(3, 1, None).unwrap();
        for d in 1..=4 {
            for k in 0..=d {
                let fam = enumerate_subspaces(&f, k, d).unwrap();
                assert_eq!(fam.members.len() as u128, gaussian_binomial(k, d, 3).unwrap());
                // RREF canonical form makes duplicates syntactic.
                let mut dedup = fam.members.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), fam.members.len());
            }
        }
    }

    #[test]
    fn four_lines_in_f3_plane() {
        let f = Field::new(3, 1, None).unwrap();
        let fam = enumerate_subspaces(&f, 1, 2).unwrap();
        assert_eq!(fam.members.len(), 4);
    }

    #[test]
    fn full_space_is_the_only_member_of_top_grassmannian() {
        let f = Field::new(5, 1, None).unwrap();
        let fam = enumerate_subspaces(&f, 3, 3).unwrap();
        assert_eq!(fam.members.len(), 1);
        let full = &fam.members[0];
        assert_eq!(full.basis(), &[unit(3, 0), unit(3, 1), unit(3, 2)]);
    }

    #[test]
    fn hyperplane_of_unit_vector() {
        let f = Field::new(7, 1, None).unwrap();
        let h = hyperplane_of(&f, &unit(3, 0)).unwrap();
        assert_eq!(h.basis(), &[unit(3, 1), unit(3, 2)]);
        assert_eq!(h.points(&f).len(), 49);
    }

    #[test]
    fn hyperplane_of_ones_in_f3() {
        let f = Field::new(3, 1, None).unwrap();
        let h = hyperplane_of(&f, &[1, 1]).unwrap();
        assert_eq!(h.basis(), &[vec![1, 2]]);
    }

    #[test]
    fn hyperplane_membership_is_orthogonality() {
        let f = Field::new(3, 1, None).unwrap();
        let x = vec![1, 2, 1];
        let h = hyperplane_of(&f, &x).unwrap();
        let mut count = 0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let y = vec![a, b, c];
                    let is_orth = dot(&f, &x, &y).unwrap() == 0;
                    assert_eq!(h.contains(&f, &y), is_orth);
                    count += u64::from(is_orth);
                }
            }
        }
        assert_eq!(count, 9);
    }

    #[test]
    fn hyperplane_is_scale_invariant() {
        let f = Field::new(5, 1, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let x: Vector = (0..3).map(|_| rng.gen_range(0..5)).collect();
            if x.iter().all(|&c| c == 0) {
                continue;
            }
            for lam in 1..5 {
                let lx: Vector = x.iter().map(|&c| f.mul(lam, c)).collect();
                assert_eq!(hyperplane_of(&f, &x).unwrap(), hyperplane_of(&f, &lx).unwrap());
            }
        }
    }

    #[test]
    fn zero_vector_has_no_hyperplane() {
        let f = Field::new(3, 1, None).unwrap();
        assert_eq!(hyperplane_of(&f, &[0, 0, 0]).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn every_nonzero_vector_lies_in_the_expected_number_of_hyperplanes() {
        // (q^(d-1) - 1)/(q - 1) members of G(d-1, d), exhaustively at q = 3.
        let f = Field::new(3, 1, None).unwrap();
        for d in [3usize, 4] {
            let fam = enumerate_subspaces(&f, d - 1, d).unwrap();
            let expected = (3u64.pow(d as u32 - 1) - 1) / 2;
            let total = 3u64.pow(d as u32);
            for idx in 1..total {
                let mut v = Vec::with_capacity(d);
                let mut rest = idx;
                for _ in 0..d {
                    v.push(rest % 3);
                    rest /= 3;
                }
                let count = fam.members.iter().filter(|h| h.contains(&f, &v)).count() as u64;
                assert_eq!(count, expected);
            }
        }
    }

    #[test]
    fn coordinates_in_coordinate_plane() {
        let f = Field::new(5, 1, None).unwrap();
        let h = Subspace::from_spanning(&f, &[unit(3, 0), unit(3, 1)]).unwrap();
        assert_eq!(h.coordinates(&f, &[2, 3, 0]).unwrap(), vec![2, 3]);
        assert!(h.coordinates(&f, &[2, 3, 1]).is_none());
    }

    #[test]
    fn coordinates_reconstruct_and_are_injective() {
        let f = Field::new(3, 1, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let rows: Vec<Vector> = (0..3).map(|_| (0..4).map(|_| rng.gen_range(0..3)).collect()).collect();
            let h = Subspace::from_spanning(&f, &rows).unwrap();
            let pts = h.points(&f);
            let mut seen = std::collections::BTreeSet::new();
            for p in &pts {
                let coords = h.coordinates(&f, p).expect("own point is inside");
                // Reconstruction is checked inside coordinates; injectivity here.
                assert!(seen.insert(coords));
            }
            assert_eq!(seen.len(), pts.len());
        }
    }

    #[test]
    fn coordinates_with_arbitrary_basis_agree_on_membership() {
        let f = Field::new(3, 1, None).unwrap();
        let basis = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let point = vec![1, 2, 1]; // basis[0] + basis[1]
        assert_eq!(coordinates_with_basis(&f, &basis, &point).unwrap(), vec![1, 1]);
        assert!(coordinates_with_basis(&f, &basis, &[1, 0, 0]).is_none());
    }

    #[test]
    fn normal_of_recovers_defining_vector_direction() {
        let f = Field::new(5, 1, None).unwrap();
        let x = vec![2, 0, 3];
        let h = hyperplane_of(&f, &x).unwrap();
        let n = normal_of(&f, &h).unwrap();
        // n spans the same line as x.
        assert_eq!(hyperplane_of(&f, &n).unwrap(), h);
    }
}
