//! Vectors and matrices over F_q: dot product, determinant, generalized
//! wedge product, bilinear forms, and the volume function.

use crate::error::{Error, Result};
use crate::gf::{Elt, Field};

/// A vector of F_q^d, as element indices.
pub type Vector = Vec<Elt>;

/// Sum of coordinate products u_1 v_1 + ... + u_d v_d.
pub fn dot(f: &Field, u: &[Elt], v: &[Elt]) -> Result<Elt> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch { expected: u.len(), got: v.len() });
    }
    let mut acc = 0;
    for (&x, &y) in u.iter().zip(v) {
        acc = f.add(acc, f.mul(x, y));
    }
    Ok(acc)
}

/// Exact determinant by Gaussian elimination: each column takes the first
/// nonzero pivot top-down (no magnitude ordering exists in F_q), swaps track
/// the sign, and the result is the signed product of pivots.
pub fn det(f: &Field, rows: &[Vector]) -> Result<Elt> {
    let n = rows.len();
    for r in rows {
        if r.len() != n {
            return Err(Error::NotSquare { rows: n, cols: r.len() });
        }
    }
    let mut m: Vec<Vector> = rows.to_vec();
    det_in_place(f, &mut m)
}

/// Elimination on a scratch matrix the caller owns; used by the hot loops.
/// Orders up to 3 take the direct cofactor formulas, which need no division.
#[allow(clippy::needless_range_loop)]
pub(crate) fn det_in_place(f: &Field, m: &mut [Vector]) -> Result<Elt> {
    let n = m.len();
    match n {
        0 => return Ok(1),
        1 => return Ok(m[0][0]),
        2 => return Ok(f.sub(f.mul(m[0][0], m[1][1]), f.mul(m[0][1], m[1][0]))),
        3 => {
            let c0 = f.mul(m[0][0], f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1])));
            let c1 = f.mul(m[0][1], f.sub(f.mul(m[1][0], m[2][2]), f.mul(m[1][2], m[2][0])));
            let c2 = f.mul(m[0][2], f.sub(f.mul(m[1][0], m[2][1]), f.mul(m[1][1], m[2][0])));
            return Ok(f.add(f.sub(c0, c1), c2));
        }
        _ => {}
    }
    let mut sign_flip = false;
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| m[r][col] != 0) {
            Some(r) => r,
            None => return Ok(0),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            sign_flip = !sign_flip;
        }
        let pivot = m[col][col];
        let pivot_inv = f.inv(pivot)?;
        for r in col + 1..n {
            let factor = f.mul(m[r][col], pivot_inv);
            if factor == 0 {
                continue;
            }
            for c in col..n {
                let t = f.mul(factor, m[col][c]);
                m[r][c] = f.sub(m[r][c], t);
            }
        }
    }
    let mut acc = 1;
    for (i, row) in m.iter().enumerate() {
        acc = f.mul(acc, row[i]);
    }
    Ok(if sign_flip { f.neg(acc) } else { acc })
}

/// Generalized cross product of d-1 vectors in F_q^d: the j-th coordinate is
/// (-1)^(1+j) times the minor that deletes column j from the (d-1) x d matrix
/// of the inputs.
pub fn wedge(f: &Field, rows: &[Vector]) -> Result<Vector> {
    let d = match rows.first() {
        Some(r) => r.len(),
        None => return Err(Error::WrongVectorCount { expected: 1, got: 0 }),
    };
    if rows.len() != d - 1 {
        return Err(Error::WrongVectorCount { expected: d - 1, got: rows.len() });
    }
    for r in rows {
        if r.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: r.len() });
        }
    }
    let mut out = vec![0; d];
    let mut minor: Vec<Vector> = vec![vec![0; d - 1]; d - 1];
    wedge_into(f, rows, &mut minor, &mut out)?;
    Ok(out)
}

/// Wedge with caller-owned scratch, for enumeration loops. `minor` must be
/// (d-1) x (d-1) and `out` of length d.
#[allow(clippy::needless_range_loop)]
pub(crate) fn wedge_into(
    f: &Field,
    rows: &[Vector],
    minor: &mut [Vector],
    out: &mut [Elt],
) -> Result<()> {
    let d = rows.len() + 1;
    for j in 0..d {
        for (mr, r) in minor.iter_mut().zip(rows) {
            let mut c = 0;
            for (col, &v) in r.iter().enumerate() {
                if col != j {
                    mr[c] = v;
                    c += 1;
                }
            }
        }
        let m = det_in_place(f, minor)?;
        // (-1)^(1+j) with j one-based: even zero-based columns keep the sign.
        out[j] = if j % 2 == 0 { m } else { f.neg(m) };
    }
    Ok(())
}

/// vol(x^1, ..., x^d) = x^1 . (x^2 ^ ... ^ x^d); equal to the determinant of
/// the matrix with rows x^j, which serves as its cross-check.
pub fn vol(f: &Field, rows: &[Vector]) -> Result<Elt> {
    if rows.is_empty() {
        return Err(Error::WrongVectorCount { expected: 1, got: 0 });
    }
    let d = rows[0].len();
    if rows.len() != d {
        return Err(Error::WrongVectorCount { expected: d, got: rows.len() });
    }
    let w = wedge(f, &rows[1..])?;
    dot(f, &rows[0], &w)
}

/// A non-degenerate bilinear form B(x, y) = x^T M y; construction rejects a
/// singular Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Vec<Vector>,
    is_identity: bool,
}

impl BilinearForm {
    pub fn new(f: &Field, gram: Vec<Vector>) -> Result<BilinearForm> {
        let d = gram.len();
        for r in &gram {
            if r.len() != d {
                return Err(Error::NotSquare { rows: d, cols: r.len() });
            }
        }
        if det(f, &gram)? == 0 {
            return Err(Error::SingularForm);
        }
        let is_identity =
            gram.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == u64::from(i == j)));
        Ok(BilinearForm { gram, is_identity })
    }

    /// The standard dot product, B = identity.
    pub fn dot_form(d: usize) -> BilinearForm {
        let gram = (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect();
        BilinearForm { gram, is_identity: true }
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vector] {
        &self.gram
    }

    pub fn eval(&self, f: &Field, x: &[Elt], y: &[Elt]) -> Result<Elt> {
        let d = self.gram.len();
        if x.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: x.len() });
        }
        if y.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: y.len() });
        }
        if self.is_identity {
            return dot(f, x, y);
        }
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let mut row = 0;
            for (j, &yj) in y.iter().enumerate() {
                row = f.add(row, f.mul(self.gram[i][j], yj));
            }
            acc = f.add(acc, f.mul(xi, row));
        }
        Ok(acc)
    }
}

/// Unit vector e_i (zero-based index) of dimension d.
pub fn unit(d: usize, i: usize) -> Vector {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// Independent Laplace (cofactor) expansion oracle for det.
    fn laplace_det(f: &Field, rows: &[Vector]) -> Elt {
        let n = rows.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return rows[0][0];
        }
        let mut acc = 0;
        for j in 0..n {
            if rows[0][j] == 0 {
                continue;
            }
            let minor: Vec<Vector> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                .collect();
            let term = f.mul(rows[0][j], laplace_det(f, &minor));
            acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
        }
        acc
    }

    fn rand_vec(f: &Field, d: usize, rng: &mut ChaCha8Rng) -> Vector {
        (0..d).map(|_| rng.gen_range(0..f.q())).collect()
    }

    #[test]
    fn dot_examples() {
        let f5 = Field::new(5, 1, None).unwrap();
        assert_eq!(dot(&f5, &[1, 2, 3], &[1, 1, 1]).unwrap(), 1);
        assert_eq!(dot(&f5, &unit(4, 0), &unit(4, 1)).unwrap(), 0);
        let f3 = Field::new(3, 1, None).unwrap();
        assert_eq!(dot(&f3, &[2, 2], &[2, 1]).unwrap(), 0);
        assert!(dot(&f3, &[1, 2], &[1, 2, 3]).is_err());
    }

    #[test]
    fn det_examples() {
        let f5 = Field::new(5, 1, None).unwrap();
        let id3: Vec<Vector> = (0..3).map(|i| unit(3, i)).collect();
        assert_eq!(det(&f5, &id3).unwrap(), 1);
        let f3 = Field::new(3, 1, None).unwrap();
        assert_eq!(det(&f3, &[vec![1, 1], vec![1, 2]]).unwrap(), 1);
        assert!(matches!(
            det(&f3, &[vec![1, 1, 0], vec![1, 2, 0]]).unwrap_err(),
            Error::NotSquare { .. }
        ));
    }

    #[test]
    fn det_matches_laplace_oracle_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &(p, d) in &[(3u64, 2usize), (3, 3), (3, 4), (5, 2), (5, 3), (5, 4)] {
            let f = Field::new(p, 1, None).unwrap();
            for _ in 0..100 {
                let rows: Vec<Vector> = (0..d).map(|_| rand_vec(&f, d, &mut rng)).collect();
                assert_eq!(det(&f, &rows).unwrap(), laplace_det(&f, &rows));
            }
        }
    }

    #[test]
    fn wedge_examples() {
        let f5 = Field::new(5, 1, None).unwrap();
        // Classical cross product at d = 3.
        assert_eq!(wedge(&f5, &[unit(3, 0), unit(3, 1)]).unwrap(), unit(3, 2));
        // d = 4: e_2 ^ e_3 ^ e_4 = e_1.
        assert_eq!(wedge(&f5, &[unit(4, 1), unit(4, 2), unit(4, 3)]).unwrap(), unit(4, 0));
        // Repeated row.
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let u = rand_vec(&f5, 3, &mut rng);
            assert_eq!(wedge(&f5, &[u.clone(), u.clone()]).unwrap(), vec![0, 0, 0]);
        }
    }

    #[test]
    fn wedge_is_orthogonal_to_its_arguments() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for &(p, d) in &[(3u64, 3usize), (5, 3), (5, 4)] {
            let f = Field::new(p, 1, None).unwrap();
            for _ in 0..50 {
                let rows: Vec<Vector> = (0..d - 1).map(|_| rand_vec(&f, d, &mut rng)).collect();
                let w = wedge(&f, &rows).unwrap();
                for r in &rows {
                    assert_eq!(dot(&f, r, &w).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn wedge_is_linear_in_each_argument() {
        let f = Field::new(5, 1, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = rand_vec(&f, 4, &mut rng);
            let b = rand_vec(&f, 4, &mut rng);
            let u = rand_vec(&f, 4, &mut rng);
            let v = rand_vec(&f, 4, &mut rng);
            let lam = rng.gen_range(0..5);
            // First slot: wedge(a + lam*b, u, v) = wedge(a,u,v) + lam*wedge(b,u,v).
            let lhs_arg: Vector = a.iter().zip(&b).map(|(&x, &y)| f.add(x, f.mul(lam, y))).collect();
            let lhs = wedge(&f, &[lhs_arg, u.clone(), v.clone()]).unwrap();
            let wa = wedge(&f, &[a.clone(), u.clone(), v.clone()]).unwrap();
            let wb = wedge(&f, &[b.clone(), u.clone(), v.clone()]).unwrap();
            let rhs: Vector = wa.iter().zip(&wb).map(|(&x, &y)| f.add(x, f.mul(lam, y))).collect();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn wedge_of_dependent_family_is_zero() {
        let f = Field::new(3, 1, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let u = rand_vec(&f, 4, &mut rng);
            let v = rand_vec(&f, 4, &mut rng);
            let (lu, lv) = (rng.gen_range(0..3), rng.gen_range(0..3));
            let w: Vector = u.iter().zip(&v).map(|(&x, &y)| f.add(f.mul(lu, x), f.mul(lv, y))).collect();
            assert_eq!(wedge(&f, &[u, v, w]).unwrap(), vec![0, 0, 0, 0]);
        }
    }

    #[test]
    fn vol_equals_det_of_row_matrix() {
        let f7 = Field::new(7, 1, None).unwrap();
        let id3: Vec<Vector> = (0..3).map(|i| unit(3, i)).collect();
        assert_eq!(vol(&f7, &id3).unwrap(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for &(p, d) in &[(3u64, 3usize), (3, 4), (5, 3), (5, 4)] {
            let f = Field::new(p, 1, None).unwrap();
            for _ in 0..250 {
                let rows: Vec<Vector> = (0..d).map(|_| rand_vec(&f, d, &mut rng)).collect();
                assert_eq!(vol(&f, &rows).unwrap(), det(&f, &rows).unwrap());
            }
        }
    }

    #[test]
    fn repeated_row_gives_zero_volume() {
        let f = Field::new(5, 1, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let u = rand_vec(&f, 3, &mut rng);
            let v = rand_vec(&f, 3, &mut rng);
            assert_eq!(vol(&f, &[u.clone(), v, u.clone()]).unwrap(), 0);
        }
    }

    #[test]
    fn row_swap_negates_det() {
        let f7 = Field::new(7, 1, None).unwrap();
        // det 3 becomes 4 = -3 after one swap.
        let m = vec![vec![3, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(det(&f7, &m).unwrap(), 3);
        let swapped = vec![m[1].clone(), m[0].clone(), m[2].clone()];
        assert_eq!(det(&f7, &swapped).unwrap(), 4);
    }

    #[test]
    fn det_is_multilinear_in_rows() {
        let f = Field::new(5, 1, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let a = rand_vec(&f, 3, &mut rng);
            let b = rand_vec(&f, 3, &mut rng);
            let u = rand_vec(&f, 3, &mut rng);
            let v = rand_vec(&f, 3, &mut rng);
            let lam = rng.gen_range(0..5);
            let mixed: Vector = a.iter().zip(&b).map(|(&x, &y)| f.add(x, f.mul(lam, y))).collect();
            let lhs = det(&f, &[mixed, u.clone(), v.clone()]).unwrap();
            let da = det(&f, &[a, u.clone(), v.clone()]).unwrap();
            let db = det(&f, &[b, u, v]).unwrap();
            assert_eq!(lhs, f.add(da, f.mul(lam, db)));
        }
    }

    #[test]
    fn bilinear_form_examples() {
        let f3 = Field::new(3, 1, None).unwrap();
        let swap = BilinearForm::new(&f3, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(swap.eval(&f3, &[1, 0], &[1, 0]).unwrap(), 0);
        assert_eq!(swap.eval(&f3, &[1, 0], &[0, 1]).unwrap(), 1);
        // Rank-1 Gram matrix is rejected.
        assert_eq!(
            BilinearForm::new(&f3, vec![vec![1, 1], vec![1, 1]]).unwrap_err(),
            Error::SingularForm
        );
    }

    #[test]
    fn identity_form_equals_dot() {
        let f = Field::new(7, 1, None).unwrap();
        let form = BilinearForm::dot_form(3);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let x = rand_vec(&f, 3, &mut rng);
            let y = rand_vec(&f, 3, &mut rng);
            assert_eq!(form.eval(&f, &x, &y).unwrap(), dot(&f, &x, &y).unwrap());
        }
    }
}
