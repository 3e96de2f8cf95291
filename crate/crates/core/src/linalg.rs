//! Dense matrices over Q(q) and an exact fraction-free linear solver.

use std::fmt;

use crate::coeffs::{LaurentPoly, RationalFunction};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalFunction>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![RationalFunction::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RationalFunction::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RationalFunction] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not compose");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| {
                let v = self.get(i, j);
                if i == j { v.is_one() } else { v.is_zero() }
            }))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    RankDeficient { rank: usize },
    Inconsistent,
}

fn lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let g = a.gcd(b);
    &a.div_exact(&g).unwrap() * b
}

/// Solves `coef * X = rhs` for `X`, where `coef` has full column rank and
/// the system may be overdetermined; extra equations must be satisfied
/// exactly.
///
/// Rows with a single unknown are used first, substituting each solved
/// unknown into the remaining rows. Whatever is left goes to [`bareiss`].
pub fn solve(coef: &Matrix, rhs: &Matrix) -> Result<Matrix, SolveError> {
    assert_eq!(coef.rows, rhs.rows);
    let (m, n, k) = (coef.rows, coef.cols, rhs.cols);
    let mut unknowns: Vec<Vec<usize>> =
        (0..m).map(|i| (0..n).filter(|&j| !coef.get(i, j).is_zero()).collect()).collect();
    let mut rows_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, u) in unknowns.iter().enumerate() {
        for &j in u {
            rows_of[j].push(i);
        }
    }
    let mut b: Vec<Vec<RationalFunction>> = (0..m).map(|i| rhs.row(i).to_vec()).collect();
    let mut x: Vec<Option<Vec<RationalFunction>>> = vec![None; n];
    let mut queue: Vec<usize> = (0..m).filter(|&i| unknowns[i].len() == 1).collect();
    while let Some(r) = queue.pop() {
        if unknowns[r].len() != 1 {
            continue;
        }
        let j = unknowns[r][0];
        let pivot = coef.get(r, j);
        let xj: Vec<RationalFunction> = b[r].iter().map(|v| if v.is_zero() { v.clone() } else { v / pivot }).collect();
        for &i in &rows_of[j] {
            let Some(pos) = unknowns[i].iter().position(|&u| u == j) else { continue };
            unknowns[i].swap_remove(pos);
            let c = coef.get(i, j);
            for (v, xv) in b[i].iter_mut().zip(&xj) {
                if !xv.is_zero() {
                    *v = &*v - &(c * xv);
                }
            }
            if unknowns[i].len() == 1 {
                queue.push(i);
            }
        }
        x[j] = Some(xj);
    }
    let solved = x.iter().filter(|v| v.is_some()).count();
    let rest_cols: Vec<usize> = (0..n).filter(|&j| x[j].is_none()).collect();
    let mut rest_rows = Vec::new();
    for i in 0..m {
        if unknowns[i].is_empty() {
            if b[i].iter().any(|v| !v.is_zero()) {
                return Err(SolveError::Inconsistent);
            }
        } else {
            rest_rows.push(i);
        }
    }
    if !rest_cols.is_empty() {
        let mut sub = Matrix::zeros(rest_rows.len(), rest_cols.len());
        let mut sub_rhs = Matrix::zeros(rest_rows.len(), k);
        for (a, &i) in rest_rows.iter().enumerate() {
            for (c, &j) in rest_cols.iter().enumerate() {
                sub.set(a, c, coef.get(i, j).clone());
            }
            for (c, v) in b[i].iter_mut().enumerate() {
                sub_rhs.set(a, c, std::mem::take(v));
            }
        }
        let y = bareiss(&sub, &sub_rhs).map_err(|e| match e {
            SolveError::RankDeficient { rank } => SolveError::RankDeficient { rank: solved + rank },
            e => e,
        })?;
        for (c, &j) in rest_cols.iter().enumerate() {
            x[j] = Some(y.row(c).to_vec());
        }
    }
    let mut out = Matrix::zeros(n, k);
    for (j, row) in x.into_iter().enumerate() {
        for (c, v) in row.expect("every unknown solved").into_iter().enumerate() {
            out.set(j, c, v);
        }
    }
    Ok(out)
}

/// Dense solve of the same kind of system.
///
/// Rows are first cleared of denominators, then reduced by one-step
/// fraction-free (Bareiss) elimination over `Z[q, q^-1]`, taking as pivot the
/// first nonzero entry in row order. Back-substitution runs over `Q(q)`.
fn bareiss(coef: &Matrix, rhs: &Matrix) -> Result<Matrix, SolveError> {
    let (m, n, k) = (coef.rows, coef.cols, rhs.cols);
    let width = n + k;
    let mut p: Vec<Vec<LaurentPoly>> = (0..m)
        .map(|i| {
            let entries: Vec<&RationalFunction> = coef.row(i).iter().chain(rhs.row(i)).collect();
            let l = entries.iter().fold(LaurentPoly::one(), |acc, e| lcm(&acc, e.den()));
            entries
                .iter()
                .map(|e| {
                    if e.is_zero() {
                        LaurentPoly::zero()
                    } else {
                        &l.div_exact(e.den()).unwrap() * e.num()
                    }
                })
                .collect()
        })
        .collect();

    let mut prev = LaurentPoly::one();
    for j in 0..n {
        let Some(piv) = (j..m).find(|&r| !p[r][j].is_zero()) else {
            return Err(SolveError::RankDeficient { rank: j });
        };
        p.swap(j, piv);
        let (top, rest) = p.split_at_mut(j + 1);
        let pr = &top[j];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[j]);
            for c in j + 1..width {
                let mut v = &pr[j] * &row[c];
                if !factor.is_zero() && !pr[c].is_zero() {
                    v = &v - &(&factor * &pr[c]);
                }
                row[c] = if prev.is_one() { v } else { v.div_exact(&prev).expect("Bareiss division is exact") };
            }
        }
        prev = p[j][j].clone();
    }
    if p[n..].iter().any(|row| row[n..].iter().any(|v| !v.is_zero())) {
        return Err(SolveError::Inconsistent);
    }

    let mut x = Matrix::zeros(n, k);
    for c in 0..k {
        for i in (0..n).rev() {
            let mut acc = RationalFunction::from_poly(p[i][n + c].clone());
            for (j, pij) in p[i].iter().enumerate().take(n).skip(i + 1) {
                if !pij.is_zero() && !x.get(j, c).is_zero() {
                    acc = &acc - &x.get(j, c).mul_poly(pij);
                }
            }
            let v = if acc.is_zero() {
                acc
            } else {
                &acc / &RationalFunction::from_poly(p[i][i].clone())
            };
            x.set(i, c, v);
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[&str]]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), rows[0].len());
        for (i, r) in rows.iter().enumerate() {
            for (j, s) in r.iter().enumerate() {
                m.set(i, j, rf(s));
            }
        }
        m
    }

    #[test]
    fn solves_square_system() {
        let a = mat(&[&["q", "1"], &["1", "(1)/(1 - q^2)"]]);
        let x = mat(&[&["1 + q"], &["q^-2"]]);
        let b = a.mul(&x);
        assert_eq!(solve(&a, &b).unwrap(), x);
    }

    #[test]
    fn overdetermined_with_pivoting() {
        let a = mat(&[&["0", "1"], &["0", "q"], &["2", "0"]]);
        let x = mat(&[&["q^3", "1"], &["-1", "q"]]);
        let b = a.mul(&x);
        assert_eq!(solve(&a, &b).unwrap(), x);
        let mut bad = b.clone();
        bad.set(1, 0, rf("7"));
        assert_eq!(solve(&a, &bad), Err(SolveError::Inconsistent));
    }

    #[test]
    fn rank_deficiency_is_reported() {
        let a = mat(&[&["1", "q"], &["q", "q^2"]]);
        let b = mat(&[&["1"], &["q"]]);
        assert_eq!(solve(&a, &b), Err(SolveError::RankDeficient { rank: 1 }));
    }

    fn arb_rf() -> impl Strategy<Value = RationalFunction> {
        (prop::collection::vec((-2i64..3, -3i64..4), 0..3), prop::collection::vec((0i64..3, -2i64..3), 0..3))
            .prop_map(|(n, d)| {
                let d = LaurentPoly::from_terms(d);
                let d = if d.is_zero() { LaurentPoly::one() } else { d };
                RationalFunction::new(LaurentPoly::from_terms(n), d)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn peeling_agrees_with_dense(
            entries in prop::collection::vec(prop_oneof![Just(RationalFunction::zero()), arb_rf()], 20),
            xs in prop::collection::vec(arb_rf(), 8),
        ) {
            let mut a = Matrix::zeros(5, 4);
            for (i, e) in entries.into_iter().enumerate() {
                a.set(i / 4, i % 4, e);
            }
            let mut x = Matrix::zeros(4, 2);
            for (i, e) in xs.into_iter().enumerate() {
                x.set(i / 2, i % 2, e);
            }
            let b = a.mul(&x);
            let dense = bareiss(&a, &b);
            match solve(&a, &b) {
                Ok(sol) => {
                    prop_assert_eq!(&sol, &x);
                    prop_assert_eq!(dense, Ok(sol));
                }
                Err(SolveError::RankDeficient { .. }) => prop_assert!(dense.is_err()),
                Err(e) => prop_assert!(false, "{:?}", e),
            }
        }

        #[test]
        fn recovers_random_solutions(entries in prop::collection::vec(arb_rf(), 9), xs in prop::collection::vec(arb_rf(), 3)) {
            let mut a = Matrix::zeros(3, 3);
            for (i, e) in entries.into_iter().enumerate() {
                a.set(i / 3, i % 3, e);
            }
            let mut x = Matrix::zeros(3, 1);
            for (i, e) in xs.into_iter().enumerate() {
                x.set(i, 0, e);
            }
            let b = a.mul(&x);
            match solve(&a, &b) {
                Ok(sol) => prop_assert_eq!(sol, x),
                Err(SolveError::RankDeficient { .. }) => {}
                Err(e) => prop_assert!(false, "{:?}", e),
            }
        }
    }
}
