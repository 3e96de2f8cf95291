//! Tensor-product representations `pi_{i_1} (x) ... (x) pi_{i_l}` and the
//! operators `sigma_i`, `sigma_i e_i` and `xi_i`.

use super::{FockOp, FockVector, Modes};
use crate::coeffs::{qnum, LaurentPoly, RationalFunction};
use crate::error::{Error, Result};
use crate::presets::{AlgebraId, Preset, TPoly, WordLabel};
use crate::tuple::Tuple;

pub struct TensorRep {
    preset: &'static Preset,
    word: Vec<u8>,
    bases: Vec<u32>,
    /// `pi(t_jk)` at `gens[j * dim + k]` (0-based).
    gens: Vec<FockOp>,
}

impl TensorRep {
    pub fn new(id: AlgebraId, word: &[u8]) -> Self {
        let preset = id.preset();
        let n = preset.dim;
        let bases: Vec<u32> = word.iter().map(|&i| preset.d[i as usize - 1]).collect();
        let slot_gens = |slot: usize| -> Vec<FockOp> {
            let pi = &preset.pi[word[slot] as usize - 1];
            (0..n * n).map(|jk| FockOp::entry(&bases, slot, &pi[jk / n][jk % n])).collect()
        };
        // Coproduct: pi(t_jk) = sum_r pi_{<slot}(t_jr) (x) pi_slot(t_rk).
        let mut gens = (0..n * n)
            .map(|jk| if jk / n == jk % n { FockOp::identity(&bases) } else { FockOp::zero(&bases) })
            .collect::<Vec<_>>();
        for slot in 0..word.len() {
            let local = slot_gens(slot);
            let mut next = vec![FockOp::zero(&bases); n * n];
            for j in 0..n {
                for r in 0..n {
                    let left = &gens[j * n + r];
                    if left.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        let right = &local[r * n + k];
                        if !right.is_zero() {
                            next[j * n + k].add_assign(&left.compose(right));
                        }
                    }
                }
            }
            gens = next;
        }
        Self { preset, word: word.to_vec(), bases, gens }
    }

    pub fn for_word(id: AlgebraId, w: WordLabel) -> Self {
        Self::new(id, id.preset().word(w))
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn bases(&self) -> &[u32] {
        &self.bases
    }

    pub fn dim(&self) -> usize {
        self.preset.dim
    }

    /// `pi(t_jk)` with 1-based indices.
    pub fn generator(&self, j: usize, k: usize) -> Result<&FockOp> {
        let n = self.preset.dim;
        if j == 0 || k == 0 || j > n || k > n {
            return Err(Error::GeneratorIndex { row: j, col: k, size: n });
        }
        Ok(&self.gens[(j - 1) * n + (k - 1)])
    }

    pub fn eval(&self, p: &TPoly) -> Result<FockOp> {
        let mut out = FockOp::zero(&self.bases);
        for (c, mono) in p {
            let mut term = FockOp::scalar(&self.bases, c.clone());
            for &(j, k) in mono {
                term = term.compose(self.generator(j, k)?);
            }
            out.add_assign(&term);
        }
        Ok(out)
    }

    pub fn sigma(&self, node: u8) -> Result<FockOp> {
        self.eval(&self.preset.sigma[node as usize - 1].sigma)
    }

    pub fn sigma_e(&self, node: u8) -> Result<FockOp> {
        self.eval(&self.preset.sigma[node as usize - 1].sigma_e)
    }

    /// `sigma_i` as `(+-q^n, exponents of k)`.
    pub fn sigma_diagonal(&self, node: u8) -> Result<(LaurentPoly, Modes)> {
        let s = self.sigma(node)?;
        s.as_diagonal_monomial()
            .ok_or_else(|| Error::SigmaNotDiagonal(format!("{} word {:?} sigma_{node}: {s:?}", self.preset.id, self.word)))
    }

    /// `xi_i = lambda_i (sigma_i e_i) sigma_i^{-1}`.
    pub fn xi(&self, node: u8) -> Result<Xi> {
        let s = self.sigma(node)?;
        let inv = s.inverse_diagonal().ok_or_else(|| {
            Error::SigmaNotDiagonal(format!("{} word {:?} sigma_{node}: {s:?}", self.preset.id, self.word))
        })?;
        Ok(Xi {
            op: self.sigma_e(node)?.compose(&inv),
            lambda: qnum::lambda(self.preset.d[node as usize - 1]),
        })
    }
}

/// `lambda * op`, kept apart so the operator stays over Laurent polynomials.
#[derive(Clone, Debug)]
pub struct Xi {
    pub op: FockOp,
    pub lambda: RationalFunction,
}

impl Xi {
    /// Action on a rescaled ket.
    pub fn apply_tilde(&self, m: &[i32]) -> Vec<(Tuple, RationalFunction)> {
        self.op
            .apply_tilde(m)
            .into_iter()
            .map(|(t, c)| (t, &c * &self.lambda))
            .collect()
    }

    /// Action on a vector whose coordinates are taken on rescaled kets.
    pub fn apply_tilde_vec(&self, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero(v.bases());
        for (m, c) in v.iter() {
            for (t, x) in self.apply_tilde(m) {
                out.add_term(t, &x * c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::Osc;
    use crate::tuple::cube;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    fn t(v: &[i32]) -> Tuple {
        Tuple::from_slice(v)
    }

    #[test]
    fn single_slot_generators() {
        let r = TensorRep::new(AlgebraId::A2, &[1]);
        assert_eq!(r.generator(3, 3).unwrap(), &FockOp::identity(&[1]));
        assert!(r.generator(3, 1).unwrap().is_zero());
        assert!(r.generator(0, 1).is_err());
        assert!(r.generator(1, 4).is_err());
        let c = TensorRep::new(AlgebraId::C2, &[2]);
        assert_eq!(c.bases(), &[2]);
        assert_eq!(c.generator(2, 3).unwrap(), &FockOp::letter(&[2], 0, Osc::K));
    }

    #[test]
    fn a2_sigma_on_vacuum() {
        let r = TensorRep::for_word(AlgebraId::A2, WordLabel::One);
        let vac = r.generator(1, 3).unwrap().apply_ket(&[0, 0, 0]);
        assert_eq!(vac, vec![(t(&[0, 0, 0]), LaurentPoly::one())]);
    }

    #[test]
    fn sigma_diagonals() {
        // The G2 sigma_2 evaluates to -q times the displayed diagonal; sigma_2 e_2
        // carries the same factor, so xi_2 is unaffected.
        let cases: [(AlgebraId, WordLabel, u8, &str, &[i32]); 12] = [
            (AlgebraId::A2, WordLabel::One, 1, "1", &[1, 1, 0]),
            (AlgebraId::A2, WordLabel::One, 2, "1", &[0, 1, 1]),
            (AlgebraId::C2, WordLabel::One, 1, "-1", &[1, 1, 1, 0]),
            (AlgebraId::C2, WordLabel::One, 2, "-1", &[0, 1, 2, 1]),
            (AlgebraId::C2, WordLabel::Two, 1, "-1", &[0, 1, 1, 1]),
            (AlgebraId::C2, WordLabel::Two, 2, "-1", &[1, 2, 1, 0]),
            (AlgebraId::G2, WordLabel::One, 1, "1", &[1, 1, 2, 1, 1, 0]),
            (AlgebraId::G2, WordLabel::One, 2, "-q", &[0, 1, 3, 2, 3, 1]),
            (AlgebraId::G2, WordLabel::Two, 1, "1", &[0, 1, 1, 2, 1, 1]),
            (AlgebraId::G2, WordLabel::Two, 2, "-q", &[1, 3, 2, 3, 1, 0]),
            (AlgebraId::A2, WordLabel::Two, 1, "1", &[0, 1, 1]),
            (AlgebraId::A2, WordLabel::Two, 2, "1", &[1, 1, 0]),
        ];
        for (id, w, node, c0, exps) in cases {
            let r = TensorRep::for_word(id, w);
            let (c, e) = r.sigma_diagonal(node).unwrap();
            assert_eq!((c, e.to_vec()), (c0.parse::<LaurentPoly>().unwrap(), exps.to_vec()), "{id} word {w} sigma_{node}");
        }
    }

    #[test]
    fn c2_sigma_e_word2() {
        // -A+_1 k_2^2 K_3
        let r = TensorRep::for_word(AlgebraId::C2, WordLabel::Two);
        let b = r.bases().to_vec();
        let expect = FockOp::letter(&b, 0, Osc::Raise)
            .compose(&FockOp::letter(&b, 1, Osc::K))
            .compose(&FockOp::letter(&b, 1, Osc::K))
            .compose(&FockOp::letter(&b, 2, Osc::K))
            .scale(&-LaurentPoly::one());
        assert_eq!(r.sigma_e(2).unwrap(), expect);
    }

    #[test]
    fn a2_xi_word1() {
        let r = TensorRep::for_word(AlgebraId::A2, WordLabel::One);
        let x1 = r.xi(1).unwrap();
        let x2 = r.xi(2).unwrap();
        for m in cube(3, 3) {
            let (a, b, c) = (m[0], m[1], m[2]);
            assert_eq!(x1.apply_tilde(&m), vec![(t(&[a + 1, b, c]), RationalFunction::one())]);
            let mut expect = vec![];
            if a > 0 {
                expect.push((t(&[a - 1, b + 1, c]), qnum::q_int(a as i64, 1)));
            }
            expect.push((t(&[a, b, c + 1]), RationalFunction::q_pow((a - b) as i64)));
            assert_eq!(x2.apply_tilde(&m), expect, "{m:?}");
        }
    }

    #[test]
    fn xi_on_vacuum_raises_one_slot() {
        for id in AlgebraId::ALL {
            for w in [WordLabel::One, WordLabel::Two] {
                let r = TensorRep::for_word(id, w);
                let l = r.word().len();
                for node in [1u8, 2] {
                    let out = r.xi(node).unwrap().apply_tilde(&vec![0; l]);
                    assert_eq!(out.len(), 1, "{id} {w} {node}");
                    assert_eq!(out[0].1, rf("1"));
                    assert_eq!(out[0].0.iter().sum::<i32>(), 1);
                    let p = id.preset();
                    assert_eq!(p.weight(w, &out[0].0), crate::tuple::Weight::simple(node));
                }
            }
        }
    }
}
