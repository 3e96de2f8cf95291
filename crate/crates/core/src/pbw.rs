//! Normal-ordered arithmetic in `U_q^+` on the PBW basis of word 2.
//!
//! A basis monomial `B[a_1, ..., a_l] = b_1^{a_1} ... b_l^{a_l}` is indexed
//! by its exponent tuple. Word-1 monomials are expanded in this basis by
//! multiplying out `chi`-reversed root vectors letter by letter.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::coeffs::{qnum, RationalFunction};
use crate::linalg::Matrix;
use crate::presets::{AlgebraId, Preset, Side, WordExpr, WordLabel};
use crate::tuple::{reversed, Tuple, Weight};
use crate::error::{Error, Result};

/// A finite linear combination of word-2 PBW monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PbwVector {
    terms: BTreeMap<Tuple, RationalFunction>,
}

impl PbwVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(t: &[i32]) -> Self {
        let mut v = Self::zero();
        v.add_term(t.into(), RationalFunction::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, t: &[i32]) -> RationalFunction {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tuple, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, t: Tuple, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    e.insert(v);
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &PbwVector, c: &RationalFunction) {
        for (t, x) in &other.terms {
            self.add_term(t.clone(), x * c);
        }
    }
}

impl std::fmt::Debug for PbwVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(t, c)| (t.to_vec(), c))).finish()
    }
}

/// Transition coefficients between the two PBW bases on one weight block.
#[derive(Clone, Debug)]
pub struct TransitionBlock {
    pub weight: Weight,
    /// Word of the expanded monomials; `cols` are tuples of the other word.
    pub from: WordLabel,
    pub rows: Vec<Tuple>,
    pub cols: Vec<Tuple>,
    /// Coefficients for plain powers of root vectors.
    pub tilde: Matrix,
    /// Coefficients for divided powers.
    pub divided: Matrix,
}

pub struct PbwEngine {
    preset: &'static Preset,
    word1_cache: RwLock<HashMap<Tuple, Arc<PbwVector>>>,
}

impl PbwEngine {
    pub fn new(id: AlgebraId) -> Self {
        Self {
            preset: id.preset(),
            word1_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn preset(&self) -> &'static Preset {
        self.preset
    }

    pub fn mul_letter(&self, v: &PbwVector, letter: u8, side: Side) -> PbwVector {
        let mut out = PbwVector::zero();
        for (t, c) in v.iter() {
            for (u, x) in self.preset.mul_rule(letter, side, t) {
                out.add_term(u, c * &x);
            }
        }
        out
    }

    /// `v * w` for a word `w`.
    pub fn right_word(&self, v: &PbwVector, w: &[u8]) -> PbwVector {
        w.iter().fold(v.clone(), |acc, &i| self.mul_letter(&acc, i, Side::Right))
    }

    /// `w * v` for a word `w`.
    pub fn left_word(&self, w: &[u8], v: &PbwVector) -> PbwVector {
        w.iter().rev().fold(v.clone(), |acc, &i| self.mul_letter(&acc, i, Side::Left))
    }

    pub fn right_expr(&self, v: &PbwVector, x: &WordExpr) -> PbwVector {
        let mut out = PbwVector::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.right_word(v, w), c);
        }
        out
    }

    pub fn left_expr(&self, x: &WordExpr, v: &PbwVector) -> PbwVector {
        let mut out = PbwVector::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.left_word(w, v), c);
        }
        out
    }

    /// The image of a word expression in the PBW basis, built left to right
    /// with the right-multiplication rules.
    pub fn normal_order(&self, x: &WordExpr) -> PbwVector {
        self.right_expr(&PbwVector::basis(&vec![0; self.preset.len()]), x)
    }

    /// The same image built right to left with the left-multiplication rules.
    pub fn normal_order_left(&self, x: &WordExpr) -> PbwVector {
        self.left_expr(x, &PbwVector::basis(&vec![0; self.preset.len()]))
    }

    /// `b_1^{a_1} ... b_l^{a_l}` as a word expression.
    pub fn monomial_expr(&self, t: &[i32]) -> WordExpr {
        t.iter().enumerate().fold(WordExpr::word(vec![], RationalFunction::one()), |acc, (r, &a)| {
            acc.mul(&self.preset.root_vectors[r].pow(a as u32))
        })
    }

    /// The product `u v` of two normal-ordered elements, computed by
    /// expanding `u` into words and applying the left-multiplication rules.
    pub fn product(&self, u: &PbwVector, v: &PbwVector) -> PbwVector {
        let mut out = PbwVector::zero();
        for (t, c) in u.iter() {
            out.add_scaled(&self.left_expr(&self.monomial_expr(t), v), c);
        }
        out
    }

    /// The plain-power PBW monomial of the given word, in the word-2 basis.
    pub fn build_pbw(&self, w: WordLabel, t: &[i32]) -> Arc<PbwVector> {
        match w {
            WordLabel::Two => Arc::new(PbwVector::basis(t)),
            WordLabel::One => self.word1(t),
        }
    }

    fn word1(&self, t: &[i32]) -> Arc<PbwVector> {
        if let Some(v) = self.word1_cache.read().unwrap().get(t) {
            return v.clone();
        }
        let v = match t.iter().rposition(|&a| a > 0) {
            None => PbwVector::basis(t),
            Some(k) => {
                let mut prev: Tuple = t.into();
                prev[k] -= 1;
                let prefix = self.word1(&prev);
                self.right_expr(&prefix, &self.preset.root_vector(WordLabel::One, k))
            }
        };
        let v = Arc::new(v);
        self.word1_cache.write().unwrap().insert(t.into(), v.clone());
        v
    }

    /// `e_letter * E^A` for a monomial of the given word, as coefficients on
    /// that word's monomials. For word 1 this is the `chi` image of right
    /// multiplication on word 2.
    pub fn rho_apply(&self, w: WordLabel, letter: u8, t: &[i32]) -> Vec<(Tuple, RationalFunction)> {
        match w {
            WordLabel::Two => self.preset.mul_rule(letter, Side::Left, t),
            WordLabel::One => self
                .preset
                .mul_rule(letter, Side::Right, &reversed(t))
                .into_iter()
                .map(|(u, c)| (reversed(&u), c))
                .collect(),
        }
    }

    /// Matrix of left multiplication by `e_letter` from the source block to
    /// the block of weight `source + alpha_letter`: rows are target tuples.
    pub fn rho_matrix(&self, w: WordLabel, letter: u8, source: Weight) -> (Vec<Tuple>, Vec<Tuple>, Matrix) {
        let cols = self.preset.block_tuples(w, source);
        let rows = self.preset.block_tuples(w, source + Weight::simple(letter));
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (j, a) in cols.iter().enumerate() {
            for (b, c) in self.rho_apply(w, letter, a) {
                let i = rows.binary_search(&b).expect("left multiplication leaves the weight block");
                let v = m.get(i, j) + &c;
                m.set(i, j, v);
            }
        }
        (rows, cols, m)
    }

    /// `E^A_from = sum_B gamma^A_B E^B_other` on one weight block.
    pub fn transition_block(&self, from: WordLabel, weight: Weight) -> Result<TransitionBlock> {
        let p = self.preset;
        let rows = p.block_tuples(from, weight);
        if rows.is_empty() {
            return Err(Error::EmptyBlock((weight.0, weight.1)));
        }
        let to = from.other();
        let cols = p.block_tuples(to, weight);
        let mut tilde = Matrix::zeros(rows.len(), cols.len());
        for (i, a) in rows.iter().enumerate() {
            // E^A_2 = chi(E^{rev A}_1), so both directions come from the
            // word-1 expansion.
            let (src, flip) = match from {
                WordLabel::One => (a.clone(), false),
                WordLabel::Two => (reversed(a), true),
            };
            for (b, c) in self.word1(&src).iter() {
                let b = if flip { reversed(b) } else { b.clone() };
                let j = cols.binary_search(&b).expect("expansion leaves the weight block");
                tilde.set(i, j, c.clone());
            }
        }
        let fact = |w: WordLabel, t: &[i32]| {
            p.slot_bases(w)
                .iter()
                .zip(t)
                .fold(RationalFunction::one(), |acc, (&d, &a)| &acc * &qnum::q_factorial(a as u32, d))
        };
        let mut divided = Matrix::zeros(rows.len(), cols.len());
        for (i, a) in rows.iter().enumerate() {
            let fa = fact(from, a);
            for (j, b) in cols.iter().enumerate() {
                let g = tilde.get(i, j);
                if !g.is_zero() {
                    divided.set(i, j, &(g * &fact(to, b)) / &fa);
                }
            }
        }
        Ok(TransitionBlock { weight, from, rows, cols, tilde, divided })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuple::cube;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    fn vec_of(pairs: &[(&[i32], &str)]) -> PbwVector {
        let mut v = PbwVector::zero();
        for (t, c) in pairs {
            v.add_term((*t).into(), rf(c));
        }
        v
    }

    #[test]
    fn a2_letter_rules() {
        let e = PbwEngine::new(AlgebraId::A2);
        let one = PbwVector::basis(&[0, 0, 0]);
        assert_eq!(e.mul_letter(&one, 1, Side::Right), PbwVector::basis(&[0, 0, 1]));
        let x = e.mul_letter(&PbwVector::basis(&[0, 0, 1]), 2, Side::Right);
        assert_eq!(x, vec_of(&[(&[1, 0, 1], "q"), (&[0, 1, 0], "1")]));
    }

    #[test]
    fn c2_left_e2_prepends_b1() {
        let e = PbwEngine::new(AlgebraId::C2);
        let x = e.mul_letter(&PbwVector::basis(&[0, 2, 1, 3]), 2, Side::Left);
        assert_eq!(x, PbwVector::basis(&[1, 2, 1, 3]));
    }

    #[test]
    fn a2_normal_order_examples() {
        let e = PbwEngine::new(AlgebraId::A2);
        let w = |letters: &[u8]| WordExpr::word(letters.to_vec(), RationalFunction::one());
        assert_eq!(e.normal_order(&w(&[1, 2])), vec_of(&[(&[1, 0, 1], "q"), (&[0, 1, 0], "1")]));
        assert_eq!(e.normal_order(&w(&[2, 1])), PbwVector::basis(&[1, 0, 1]));
    }

    #[test]
    fn a2_word1_monomials() {
        let e = PbwEngine::new(AlgebraId::A2);
        assert_eq!(*e.build_pbw(WordLabel::Two, &[1, 2, 0]), PbwVector::basis(&[1, 2, 0]));
        assert_eq!(
            *e.build_pbw(WordLabel::One, &[0, 1, 0]),
            vec_of(&[(&[1, 0, 1], "1 - q^2"), (&[0, 1, 0], "-q")])
        );
        assert_eq!(*e.build_pbw(WordLabel::One, &[1, 0, 0]), PbwVector::basis(&[0, 0, 1]));
    }

    #[test]
    fn root_vectors_are_basis_elements() {
        for id in AlgebraId::ALL {
            let e = PbwEngine::new(id);
            let l = e.preset().len();
            for r in 0..l {
                let mut unit = vec![0; l];
                unit[r] = 1;
                let x = &e.preset().root_vectors[r];
                assert_eq!(e.normal_order(x), PbwVector::basis(&unit), "{id} b_{}", r + 1);
                assert_eq!(e.normal_order_left(x), PbwVector::basis(&unit), "{id} b_{} (left)", r + 1);
            }
        }
    }

    #[test]
    fn serre_sums_vanish() {
        for id in AlgebraId::ALL {
            let e = PbwEngine::new(id);
            for rel in e.preset().serre_relations() {
                let mut x = WordExpr::zero();
                for (w, c) in rel {
                    x = x.add(&WordExpr::word(w, c));
                }
                assert!(e.normal_order(&x).is_zero(), "{id}");
                assert!(e.normal_order_left(&x).is_zero(), "{id} (left)");
            }
        }
    }

    #[test]
    fn a2_rho_word1() {
        let e = PbwEngine::new(AlgebraId::A2);
        let r = e.rho_apply(WordLabel::One, 1, &[0, 0, 0]);
        assert_eq!(r, vec![(Tuple::from_slice(&[1, 0, 0]), RationalFunction::one())]);
        let mut r = e.rho_apply(WordLabel::One, 2, &[1, 0, 0]);
        r.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(
            r,
            vec![(Tuple::from_slice(&[0, 1, 0]), RationalFunction::one()), (Tuple::from_slice(&[1, 0, 1]), rf("q"))]
        );
    }

    #[test]
    fn rho_word1_matches_direct_left_multiplication() {
        for id in AlgebraId::ALL {
            let e = PbwEngine::new(id);
            let l = e.preset().len();
            for t in cube(l, 1) {
                for letter in [1, 2] {
                    let lhs = e.left_word(&[letter], &e.build_pbw(WordLabel::One, &t));
                    let mut rhs = PbwVector::zero();
                    for (b, c) in e.rho_apply(WordLabel::One, letter, &t) {
                        rhs.add_scaled(&e.build_pbw(WordLabel::One, &b), &c);
                    }
                    assert_eq!(lhs, rhs, "{id} e{letter} on {t:?}");
                }
            }
        }
    }

    #[test]
    fn a2_transition_block() {
        let e = PbwEngine::new(AlgebraId::A2);
        let b = e.transition_block(WordLabel::One, Weight(1, 1)).unwrap();
        assert_eq!(b.rows.iter().map(|t| t.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1, 0], vec![1, 0, 1]]);
        assert_eq!(b.cols.iter().map(|t| t.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1, 0], vec![1, 0, 1]]);
        assert_eq!(b.tilde.get(0, 0), &rf("-q"));
        assert_eq!(b.tilde.get(0, 1), &rf("1 - q^2"));
        let z = e.transition_block(WordLabel::One, Weight(0, 0)).unwrap();
        assert!(z.divided.is_identity());
        assert!(e.transition_block(WordLabel::One, Weight(-1, 0)).is_err());
    }
}
