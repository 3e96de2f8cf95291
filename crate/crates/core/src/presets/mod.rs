//! All rank-2 data: reduced words, root vectors, the PBW multiplication
//! rules, the sigma elements and the fundamental representations.

mod a2;
mod c2;
mod g2;
mod rules;
mod words;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::coeffs::{qnum, LaurentPoly, RationalFunction};
use crate::error::{Error, Result};
use crate::tuple::{Tuple, Weight};

pub use rules::RuleTerms;
pub use words::WordExpr;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum AlgebraId {
    A2,
    C2,
    G2,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 3] = [AlgebraId::A2, AlgebraId::C2, AlgebraId::G2];

    pub fn preset(self) -> &'static Preset {
        static CELLS: [OnceLock<Preset>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        CELLS[self as usize].get_or_init(|| Preset::build(self))
    }

    /// Name of the checked intertwiner for this algebra.
    pub fn checked_kind(self) -> &'static str {
        match self {
            AlgebraId::A2 => "R",
            AlgebraId::C2 => "K",
            AlgebraId::G2 => "F",
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraId::A2 => "A2",
            AlgebraId::C2 => "C2",
            AlgebraId::G2 => "G2",
        })
    }
}

impl FromStr for AlgebraId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A2" => Ok(AlgebraId::A2),
            "C2" => Ok(AlgebraId::C2),
            "G2" => Ok(AlgebraId::G2),
            _ => Err(Error::UnknownAlgebra(s.to_string())),
        }
    }
}

/// Which of the two reduced words of the longest element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum WordLabel {
    One,
    Two,
}

impl WordLabel {
    pub fn other(self) -> WordLabel {
        match self {
            WordLabel::One => WordLabel::Two,
            WordLabel::Two => WordLabel::One,
        }
    }

    pub fn index(self) -> usize {
        match self {
            WordLabel::One => 0,
            WordLabel::Two => 1,
        }
    }

    pub fn from_number(n: u8) -> Option<WordLabel> {
        match n {
            1 => Some(WordLabel::One),
            2 => Some(WordLabel::Two),
            _ => None,
        }
    }
}

impl fmt::Display for WordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordLabel::One => "1",
            WordLabel::Two => "2",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A letter of a single-mode oscillator word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Osc {
    Raise,
    Lower,
    K,
}

/// `coeff * letters[0] letters[1] ...`; the rightmost letter acts first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OscWord {
    pub coeff: LaurentPoly,
    pub letters: Vec<Osc>,
}

/// One entry of `pi_i(T)`: a sum of oscillator words; empty means zero.
pub type PiEntry = Vec<OscWord>;

/// A polynomial in the generators `t_jk` (1-based indices).
pub type TPoly = Vec<(LaurentPoly, Vec<(usize, usize)>)>;

pub struct SigmaDef {
    pub sigma: TPoly,
    pub sigma_e: TPoly,
}

pub struct Preset {
    pub id: AlgebraId,
    /// `a_ij = <h_i, alpha_j>`.
    pub cartan: [[i32; 2]; 2],
    /// `q_i = q^{d_i}`.
    pub d: [u32; 2],
    pub words: [Vec<u8>; 2],
    /// Positive roots attached to each word, in word order.
    pub roots: [Vec<Weight>; 2],
    /// Size of the matrix `T` of generators.
    pub dim: usize,
    /// Root vectors `b_r` of word 2 expanded into words in `e1`, `e2`.
    pub root_vectors: Vec<WordExpr>,
    pub sigma: [SigmaDef; 2],
    /// `pi_1(T)` and `pi_2(T)` with all gauge parameters equal to 1.
    pub pi: [Vec<Vec<PiEntry>>; 2],
}

impl Preset {
    fn build(id: AlgebraId) -> Preset {
        let (cartan, d, word2): ([[i32; 2]; 2], [u32; 2], Vec<u8>) = match id {
            AlgebraId::A2 => ([[2, -1], [-1, 2]], [1, 1], vec![2, 1, 2]),
            AlgebraId::C2 => ([[2, -2], [-1, 2]], [1, 2], vec![2, 1, 2, 1]),
            AlgebraId::G2 => ([[2, -3], [-1, 2]], [1, 3], vec![2, 1, 2, 1, 2, 1]),
        };
        let word1: Vec<u8> = word2.iter().map(|&i| 3 - i).collect();
        let roots = [roots_of(&cartan, &word1), roots_of(&cartan, &word2)];
        let (root_vectors, sigma, pi) = match id {
            AlgebraId::A2 => (a2::root_vectors(), a2::sigma(), a2::pi()),
            AlgebraId::C2 => (c2::root_vectors(), c2::sigma(), c2::pi()),
            AlgebraId::G2 => (g2::root_vectors(), g2::sigma(), g2::pi()),
        };
        let dim = pi[0].len();
        Preset {
            id,
            cartan,
            d,
            words: [word1, word2],
            roots,
            dim,
            root_vectors,
            sigma,
            pi,
        }
    }

    /// Length of the longest element.
    pub fn len(&self) -> usize {
        self.words[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self, w: WordLabel) -> &[u8] {
        &self.words[w.index()]
    }

    /// `d` of the node in each tensor slot of the word.
    pub fn slot_bases(&self, w: WordLabel) -> Vec<u32> {
        self.word(w).iter().map(|&i| self.d[i as usize - 1]).collect()
    }

    pub fn weight(&self, w: WordLabel, t: &[i32]) -> Weight {
        self.roots[w.index()]
            .iter()
            .zip(t)
            .fold(Weight::default(), |acc, (r, &a)| acc + a * *r)
    }

    /// The two conserved quantities in the form the checked intertwiners are
    /// usually quoted: for a word-2 tuple (or a reversed word-1 tuple) this is
    /// `(a+b, b+c)` for A2, `(a+b+c, b+2c+d)` for C2 and
    /// `(a+b+2c+d+e, b+3c+2d+3e+f)` for G2.
    pub fn conserved(&self, t: &[i32]) -> (i32, i32) {
        let w = self.weight(WordLabel::Two, t);
        (w.1, w.0)
    }

    /// Word-2 root vectors: `b_r`. Word-1 root vectors: `chi(b_{l+1-r})`.
    pub fn root_vector(&self, w: WordLabel, r: usize) -> WordExpr {
        match w {
            WordLabel::Two => self.root_vectors[r].clone(),
            WordLabel::One => self.root_vectors[self.len() - 1 - r].chi(),
        }
    }

    /// The q-Serre sums `sum_r (-1)^(n-r) [n choose r]_i e_i^r e_j e_i^(n-r)`
    /// with `n = 1 - a_ij`, for `(i, j) = (1, 2)` and `(2, 1)`. Terms are
    /// listed from `r = n` down to `r = 0`.
    pub fn serre_relations(&self) -> Vec<Vec<(Vec<u8>, RationalFunction)>> {
        [(1u8, 2u8), (2, 1)]
            .iter()
            .map(|&(i, j)| {
                let n = (1 - self.cartan[i as usize - 1][j as usize - 1]) as u32;
                let di = self.d[i as usize - 1];
                (0..=n)
                    .rev()
                    .map(|r| {
                        let mut w = vec![i; r as usize];
                        w.push(j);
                        w.extend(std::iter::repeat_n(i, (n - r) as usize));
                        let c = qnum::q_binomial(n, r, di);
                        let c = if (n - r) % 2 == 1 { -c } else { c };
                        (w, RationalFunction::from_poly(c))
                    })
                    .collect()
            })
            .collect()
    }

    /// PBW multiplication rule on a word-2 tuple: `B * e_letter` (right) or
    /// `e_letter * B` (left).
    pub fn mul_rule(&self, letter: u8, side: Side, t: &[i32]) -> RuleTerms {
        match self.id {
            AlgebraId::A2 => a2::mul_rule(letter, side, t),
            AlgebraId::C2 => c2::mul_rule(letter, side, t),
            AlgebraId::G2 => g2::mul_rule(letter, side, t),
        }
    }

    /// Tuples of the word with the given weight, in lexicographic order.
    pub fn block_tuples(&self, w: WordLabel, weight: Weight) -> Vec<Tuple> {
        let roots = &self.roots[w.index()];
        let mut out = Vec::new();
        let mut cur = Tuple::new();
        enumerate_block(roots, weight, &mut cur, &mut out);
        out
    }
}

fn enumerate_block(roots: &[Weight], rest: Weight, cur: &mut Tuple, out: &mut Vec<Tuple>) {
    let k = cur.len();
    if k == roots.len() {
        if rest == Weight::default() {
            out.push(cur.clone());
        }
        return;
    }
    let r = roots[k];
    let mut a = 0;
    loop {
        let left = rest - a * r;
        if !left.is_nonnegative() {
            break;
        }
        cur.push(a);
        enumerate_block(roots, left, cur, out);
        cur.pop();
        a += 1;
    }
}

fn roots_of(cartan: &[[i32; 2]; 2], word: &[u8]) -> Vec<Weight> {
    let reflect = |i: u8, w: Weight| {
        let i = i as usize - 1;
        let pairing = cartan[i][0] * w.0 + cartan[i][1] * w.1;
        w - pairing * Weight::simple(i as u8 + 1)
    };
    (0..word.len())
        .map(|k| {
            word[..k]
                .iter()
                .rev()
                .fold(Weight::simple(word[k]), |w, &i| reflect(i, w))
        })
        .collect()
}

/// Shorthand used by the data files.
pub(crate) fn osc(c: LaurentPoly, letters: &[Osc]) -> PiEntry {
    vec![OscWord { coeff: c, letters: letters.to_vec() }]
}

pub(crate) fn tpoly(terms: &[(LaurentPoly, &[(usize, usize)])]) -> TPoly {
    terms.iter().map(|(c, m)| (c.clone(), m.to_vec())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_bases() {
        let a2 = AlgebraId::A2.preset();
        assert_eq!(a2.len(), 3);
        assert_eq!(a2.word(WordLabel::One), &[1, 2, 1]);
        assert_eq!(a2.word(WordLabel::Two), &[2, 1, 2]);
        assert_eq!(a2.d, [1, 1]);
        assert_eq!(AlgebraId::C2.preset().d, [1, 2]);
        assert_eq!(AlgebraId::G2.preset().word(WordLabel::One), &[1, 2, 1, 2, 1, 2]);
        assert_eq!(AlgebraId::G2.preset().slot_bases(WordLabel::Two), vec![3, 1, 3, 1, 3, 1]);
    }

    #[test]
    fn roots_match_root_vector_weights() {
        let g2 = AlgebraId::G2.preset();
        let expected = [Weight(0, 1), Weight(1, 1), Weight(3, 2), Weight(2, 1), Weight(3, 1), Weight(1, 0)];
        assert_eq!(g2.roots[1], expected);
        for id in AlgebraId::ALL {
            let p = id.preset();
            let mut rev = p.roots[1].clone();
            rev.reverse();
            assert_eq!(p.roots[0], rev, "{id}");
            for w in [WordLabel::One, WordLabel::Two] {
                for r in 0..p.len() {
                    let rv = p.root_vector(w, r);
                    for (word, _) in rv.terms() {
                        let wt = word.iter().fold(Weight::default(), |acc, &i| acc + Weight::simple(i));
                        assert_eq!(wt, p.roots[w.index()][r], "{id} word {w} root {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn conservation_functional() {
        let c2 = AlgebraId::C2.preset();
        assert_eq!(c2.conserved(&[2, 1, 1, 0]), (4, 3));
        let a2 = AlgebraId::A2.preset();
        assert_eq!(a2.conserved(&[3, 1, 4]), (4, 5));
        let g2 = AlgebraId::G2.preset();
        assert_eq!(g2.conserved(&[0, 1, 0, 1, 0, 1]), (2, 4));
    }

    #[test]
    fn chi_of_g2_root_vector() {
        let g2 = AlgebraId::G2.preset();
        // Word-1 root vector 5 is chi(b_2).
        let got = g2.root_vector(WordLabel::One, 4);
        let want = WordExpr::word(vec![2, 1], RationalFunction::one())
            .add(&WordExpr::word(vec![1, 2], RationalFunction::q_pow(3).scale_int(&(-1).into())));
        assert_eq!(got, want);
        for r in 0..6 {
            assert_eq!(g2.root_vectors[r].chi().chi(), g2.root_vectors[r]);
        }
    }

    #[test]
    fn serre_sums() {
        let a2 = AlgebraId::A2.preset().serre_relations();
        assert_eq!(a2.len(), 2);
        let two = RationalFunction::from_poly(qnum::q_int_poly(2, 1));
        for rel in &a2 {
            let coeffs: Vec<_> = rel.iter().map(|t| t.1.clone()).collect();
            assert_eq!(coeffs, vec![RationalFunction::one(), -two.clone(), RationalFunction::one()]);
        }
        let c2 = AlgebraId::C2.preset().serre_relations();
        let three = RationalFunction::from_poly(qnum::q_int_poly(3, 1));
        let coeffs: Vec<_> = c2[0].iter().map(|t| t.1.clone()).collect();
        assert_eq!(coeffs, vec![RationalFunction::one(), -three.clone(), three, RationalFunction::from_int(-1)]);
        assert_eq!(c2[0][1].0, vec![1, 1, 2, 1]);
        let g2 = AlgebraId::G2.preset().serre_relations();
        assert_eq!(g2[0].len(), 5);
        let mid = &(&qnum::q_int(4, 1) * &qnum::q_int(3, 1)) / &qnum::q_int(2, 1);
        assert_eq!(g2[0][2].1, mid);
        assert_eq!(g2[1].len(), 3);
    }

    #[test]
    fn block_enumeration() {
        let a2 = AlgebraId::A2.preset();
        let blk = a2.block_tuples(WordLabel::Two, Weight(1, 1));
        assert_eq!(blk.iter().map(|t| t.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1, 0], vec![1, 0, 1]]);
        let w = a2.weight(WordLabel::Two, &[4, 1, 3]);
        assert_eq!(a2.block_tuples(WordLabel::Two, w).len(), 5);
        for id in AlgebraId::ALL {
            let p = id.preset();
            for t in crate::tuple::cube(p.len(), 2) {
                for wl in [WordLabel::One, WordLabel::Two] {
                    let blk = p.block_tuples(wl, p.weight(wl, &t));
                    assert!(blk.contains(&t));
                    assert!(blk.windows(2).all(|x| x[0] < x[1]));
                }
            }
        }
    }

    #[test]
    fn unknown_algebra() {
        assert!("E8".parse::<AlgebraId>().is_err());
        assert_eq!("g2".parse::<AlgebraId>().unwrap(), AlgebraId::G2);
    }
}
