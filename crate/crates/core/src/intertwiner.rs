//! The intertwiner between the two tensor-product representations, computed
//! block by block from the Fock side alone, and the checked tables built
//! from it.
//!
//! On rescaled kets the operators `pi(xi_i)` raise the weight by `alpha_i`,
//! and every ket of nonzero weight is reached from lower blocks. So with
//! `Phi |0>> = |0>>`, each block of `Phi` is the unique solution of
//! `Phi pi_s(xi_i) |A>> = pi_t(xi_i) Phi |A>>` over all `A` one step below.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::coeffs::{qnum, RationalFunction};
use crate::error::{Error, Result};
use crate::fock::{TensorRep, Xi};
use crate::linalg::{solve, Matrix, SolveError};
use crate::pbw::PbwEngine;
use crate::presets::{AlgebraId, Preset, WordLabel};
use crate::tuple::{reversed, Tuple, Weight};

/// One weight block of `Phi: F_source -> F_target`.
#[derive(Clone, Debug)]
pub struct PhiBlock {
    pub weight: Weight,
    pub source: WordLabel,
    /// Source tuples (columns).
    pub src: Vec<Tuple>,
    /// Target tuples (rows).
    pub tgt: Vec<Tuple>,
    /// Coefficients on rescaled kets: `Phi |B>> = sum_C tilde[C][B] |C>>`.
    pub tilde: Matrix,
    /// Coefficients on plain kets.
    pub divided: Matrix,
}

fn d_product(bases: &[u32], t: &[i32]) -> RationalFunction {
    bases
        .iter()
        .zip(t)
        .fold(RationalFunction::one(), |acc, (&d, &a)| &acc * &qnum::d_norm(a as u32, d))
}

pub struct PhiSolver {
    preset: &'static Preset,
    source: WordLabel,
    xi_src: [Xi; 2],
    xi_tgt: [Xi; 2],
    cache: RwLock<HashMap<Weight, Arc<PhiBlock>>>,
}

impl PhiSolver {
    pub fn new(id: AlgebraId, source: WordLabel) -> Result<Self> {
        let s = TensorRep::for_word(id, source);
        let t = TensorRep::for_word(id, source.other());
        Ok(Self {
            preset: id.preset(),
            source,
            xi_src: [s.xi(1)?, s.xi(2)?],
            xi_tgt: [t.xi(1)?, t.xi(2)?],
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn source(&self) -> WordLabel {
        self.source
    }

    pub fn preset(&self) -> &'static Preset {
        self.preset
    }

    /// The block of the given weight, solving every block below it first.
    pub fn block(&self, weight: Weight) -> Result<Arc<PhiBlock>> {
        if !weight.is_nonnegative() {
            return Err(Error::EmptyBlock((weight.0, weight.1)));
        }
        if let Some(b) = self.cache.read().unwrap().get(&weight) {
            return Ok(b.clone());
        }
        let below: Vec<Weight> = (0..=weight.0)
            .flat_map(|a| (0..=weight.1).map(move |b| Weight(a, b)))
            .collect();
        self.fill(below)?;
        Ok(self.cache.read().unwrap()[&weight].clone())
    }

    /// All blocks of height at most `max_height`, ordered by weight.
    pub fn blocks_up_to(&self, max_height: i32) -> Result<Vec<Arc<PhiBlock>>> {
        let all: Vec<Weight> = (0..=max_height)
            .flat_map(|h| (0..=h).map(move |a| Weight(a, h - a)))
            .collect();
        self.fill(all.clone())?;
        let cache = self.cache.read().unwrap();
        let mut out: Vec<_> = all.iter().map(|w| cache[w].clone()).collect();
        out.sort_by_key(|b| b.weight);
        Ok(out)
    }

    /// Solves the given down-closed set of weights level by level.
    fn fill(&self, weights: Vec<Weight>) -> Result<()> {
        let mut by_height: Vec<Vec<Weight>> = Vec::new();
        {
            let cache = self.cache.read().unwrap();
            for w in weights {
                if cache.contains_key(&w) {
                    continue;
                }
                let h = w.height() as usize;
                if by_height.len() <= h {
                    by_height.resize(h + 1, Vec::new());
                }
                by_height[h].push(w);
            }
        }
        for level in by_height {
            let solved: Vec<PhiBlock> = level.par_iter().map(|&w| self.solve_block(w)).collect::<Result<_>>()?;
            let mut cache = self.cache.write().unwrap();
            for b in solved {
                cache.insert(b.weight, Arc::new(b));
            }
        }
        Ok(())
    }

    fn solve_block(&self, weight: Weight) -> Result<PhiBlock> {
        let p = self.preset;
        let target = self.source.other();
        let src = p.block_tuples(self.source, weight);
        let tgt = p.block_tuples(target, weight);
        let key = (weight.0, weight.1);
        if src.is_empty() || tgt.is_empty() {
            return Err(Error::EmptyBlock(key));
        }
        let tilde = if weight == Weight::default() {
            Matrix::identity(1)
        } else {
            let mut coef_rows: Vec<Vec<RationalFunction>> = Vec::new();
            let mut rhs_rows: Vec<Vec<RationalFunction>> = Vec::new();
            let cache = self.cache.read().unwrap();
            for node in [1u8, 2] {
                let lower = weight - Weight::simple(node);
                if !lower.is_nonnegative() {
                    continue;
                }
                let prev = cache.get(&lower).expect("lower block solved first");
                let (xs, xt) = (&self.xi_src[node as usize - 1], &self.xi_tgt[node as usize - 1]);
                for (a, ta) in prev.src.iter().enumerate() {
                    let mut coef = vec![RationalFunction::zero(); src.len()];
                    for (u, c) in xs.apply_tilde(ta) {
                        let j = src.binary_search(&u).map_err(|_| {
                            Error::Mismatch(format!("xi_{node} leaves block {weight} at {u:?}"))
                        })?;
                        coef[j] = &coef[j] + &c;
                    }
                    let mut rhs = vec![RationalFunction::zero(); tgt.len()];
                    for (c_idx, tc) in prev.tgt.iter().enumerate() {
                        let x = prev.tilde.get(c_idx, a);
                        if x.is_zero() {
                            continue;
                        }
                        for (u, c) in xt.apply_tilde(tc) {
                            let j = tgt.binary_search(&u).map_err(|_| {
                                Error::Mismatch(format!("xi_{node} leaves block {weight} at {u:?}"))
                            })?;
                            rhs[j] = &rhs[j] + &(&c * x);
                        }
                    }
                    coef_rows.push(coef);
                    rhs_rows.push(rhs);
                }
            }
            drop(cache);
            let mut coef = Matrix::zeros(coef_rows.len(), src.len());
            let mut rhs = Matrix::zeros(rhs_rows.len(), tgt.len());
            for (i, (c, r)) in coef_rows.into_iter().zip(rhs_rows).enumerate() {
                for (j, v) in c.into_iter().enumerate() {
                    coef.set(i, j, v);
                }
                for (j, v) in r.into_iter().enumerate() {
                    rhs.set(i, j, v);
                }
            }
            let y = solve(&coef, &rhs).map_err(|e| match e {
                SolveError::RankDeficient { rank } => Error::RankDeficient { block: key, rank, cols: src.len() },
                SolveError::Inconsistent => Error::Inconsistent { block: key },
            })?;
            y.transpose()
        };
        let sb = p.slot_bases(self.source);
        let tb = p.slot_bases(target);
        let ds: Vec<_> = src.iter().map(|t| d_product(&sb, t)).collect();
        let mut divided = Matrix::zeros(tgt.len(), src.len());
        for (i, c) in tgt.iter().enumerate() {
            let dc = d_product(&tb, c);
            for (j, d) in ds.iter().enumerate() {
                let x = tilde.get(i, j);
                if !x.is_zero() {
                    divided.set(i, j, &(x * &dc) / d);
                }
            }
        }
        Ok(PhiBlock { weight, source: self.source, src, tgt, tilde, divided })
    }
}

/// One block of the checked intertwiner: `Phi` composed with the reversal
/// of tensor slots. Inputs and outputs range over the same tuples.
#[derive(Clone, Debug)]
pub struct CheckedBlock {
    pub weight: Weight,
    pub tuples: Vec<Tuple>,
    /// `matrix[out][in]`.
    pub matrix: Matrix,
}

impl CheckedBlock {
    pub fn get(&self, out: &[i32], input: &[i32]) -> RationalFunction {
        match (self.tuples.binary_search_by(|t| t.as_slice().cmp(out)), self.tuples.binary_search_by(|t| t.as_slice().cmp(input))) {
            (Ok(i), Ok(j)) => self.matrix.get(i, j).clone(),
            _ => RationalFunction::zero(),
        }
    }

    /// Nonzero entries of one input column, ordered by output tuple.
    pub fn column(&self, input: &[i32]) -> Vec<(Tuple, RationalFunction)> {
        let Ok(j) = self.tuples.binary_search_by(|t| t.as_slice().cmp(input)) else {
            return Vec::new();
        };
        self.tuples
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.matrix.get(*i, j).is_zero())
            .map(|(i, t)| (t.clone(), self.matrix.get(i, j).clone()))
            .collect()
    }
}

/// `E^A = sum_in X^A_in E^{reversed in}` for the checked table `X`, checked
/// against the PBW normal form.
#[derive(Clone, Debug)]
pub struct ExpansionIdentity {
    pub word: WordLabel,
    pub tuple: Tuple,
    pub terms: Vec<(Tuple, RationalFunction)>,
}

/// Both intertwiners of one algebra with their checked tables.
pub struct Intertwiner {
    id: AlgebraId,
    solvers: [PhiSolver; 2],
}

impl Intertwiner {
    pub fn new(id: AlgebraId) -> Result<Self> {
        Ok(Self { id, solvers: [PhiSolver::new(id, WordLabel::One)?, PhiSolver::new(id, WordLabel::Two)?] })
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn solver(&self, source: WordLabel) -> &PhiSolver {
        &self.solvers[source.index()]
    }

    pub fn phi_block(&self, source: WordLabel, weight: Weight) -> Result<Arc<PhiBlock>> {
        self.solver(source).block(weight)
    }

    pub fn checked_source(&self) -> WordLabel {
        checked_source(self.id)
    }

    pub fn checked_weight(&self, input: &[i32]) -> Weight {
        checked_weight(self.id, input)
    }

    pub fn checked_block(&self, weight: Weight) -> Result<CheckedBlock> {
        Ok(checked_table(&*self.phi_block(self.checked_source(), weight)?))
    }

    /// Nonzero entries `X^{out}_{input}` for one input tuple.
    pub fn checked_column(&self, input: &[i32]) -> Result<Vec<(Tuple, RationalFunction)>> {
        let p = self.id.preset();
        if input.len() != p.len() {
            return Err(Error::TupleLength { tuple: input.to_vec(), len: input.len(), expected: p.len() });
        }
        Ok(self.checked_block(self.checked_weight(input))?.column(input))
    }

    /// Checks the PBW expansion of `E^A` (divided powers, in the target word
    /// of the checked table) in the other word's basis.
    pub fn pbw_expansion_identity(&self, engine: &PbwEngine, a: &[i32]) -> Result<ExpansionIdentity> {
        let p = self.id.preset();
        let word = self.checked_source().other();
        let other = word.other();
        let fact = |w: WordLabel, t: &[i32]| {
            p.slot_bases(w)
                .iter()
                .zip(t)
                .fold(RationalFunction::one(), |acc, (&d, &x)| &acc * &qnum::q_factorial(x as u32, d))
        };
        let weight = p.weight(word, a);
        let block = self.checked_block(weight)?;
        let Ok(row) = block.tuples.binary_search_by(|t| t.as_slice().cmp(a)) else {
            return Err(Error::EmptyBlock((weight.0, weight.1)));
        };
        let mut terms = Vec::new();
        let mut rhs = crate::pbw::PbwVector::zero();
        for (j, input) in block.tuples.iter().enumerate() {
            let x = block.matrix.get(row, j);
            if x.is_zero() {
                continue;
            }
            let b = reversed(input);
            rhs.add_scaled(&engine.build_pbw(other, &b), &(x / &fact(other, &b)));
            terms.push((input.clone(), x.clone()));
        }
        let mut lhs = crate::pbw::PbwVector::zero();
        lhs.add_scaled(&engine.build_pbw(word, a), &(&RationalFunction::one() / &fact(word, a)));
        if lhs != rhs {
            return Err(Error::Mismatch(format!("{} expansion of E^{a:?} in word {word}", self.id)));
        }
        Ok(ExpansionIdentity { word, tuple: a.into(), terms })
    }
}

/// Source word of the `Phi` underlying the checked table: `R` reverses word 2
/// into word 1; `K` and `F` reverse word 1 into word 2.
pub fn checked_source(id: AlgebraId) -> WordLabel {
    match id {
        AlgebraId::A2 => WordLabel::Two,
        AlgebraId::C2 | AlgebraId::G2 => WordLabel::One,
    }
}

/// Weight of the block holding a checked-table input tuple.
pub fn checked_weight(id: AlgebraId, input: &[i32]) -> Weight {
    id.preset().weight(checked_source(id), &reversed(input))
}

/// `X^{out}_{in} = Phi^{out}_{reversed in}` on plain kets.
pub fn checked_table(phi: &PhiBlock) -> CheckedBlock {
    let tuples = phi.tgt.clone();
    let n = tuples.len();
    let mut matrix = Matrix::zeros(n, n);
    for (j, s) in phi.src.iter().enumerate() {
        let input = reversed(s);
        let col = tuples.binary_search(&input).expect("reversed source tuples span the target block");
        for i in 0..n {
            matrix.set(i, col, phi.divided.get(i, j).clone());
        }
    }
    CheckedBlock { weight: phi.weight, tuples, matrix }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn vacuum_block() {
        for id in AlgebraId::ALL {
            let s = PhiSolver::new(id, WordLabel::One).unwrap();
            let b = s.block(Weight(0, 0)).unwrap();
            assert!(b.tilde.is_identity());
            assert!(b.divided.is_identity());
        }
        assert!(PhiSolver::new(AlgebraId::A2, WordLabel::One).unwrap().block(Weight(-1, 2)).is_err());
    }

    #[test]
    fn a2_block_matches_pbw() {
        let s = PhiSolver::new(AlgebraId::A2, WordLabel::One).unwrap();
        let b = s.block(Weight(1, 1)).unwrap();
        let e = PbwEngine::new(AlgebraId::A2);
        let g = e.transition_block(WordLabel::One, Weight(1, 1)).unwrap();
        // gamma~^A_B (word 1 -> 2) = Phi~^B_A (word 1 -> 2)
        assert_eq!(g.tilde, b.tilde.transpose());
        assert_eq!(b.tilde.get(0, 0), &rf("-q"));
    }

    #[test]
    fn r_example_column() {
        let x = Intertwiner::new(AlgebraId::A2).unwrap();
        let col = x.checked_column(&[3, 1, 4]).unwrap();
        let outs: Vec<Vec<i32>> = col.iter().map(|(t, _)| t.to_vec()).collect();
        assert_eq!(outs, vec![vec![0, 4, 1], vec![1, 3, 2], vec![2, 2, 3], vec![3, 1, 4], vec![4, 0, 5]]);
        assert_eq!(col[4].1, rf("q^12"));
    }

    #[test]
    fn expansion_identity_small() {
        let x = Intertwiner::new(AlgebraId::A2).unwrap();
        let e = PbwEngine::new(AlgebraId::A2);
        let id = x.pbw_expansion_identity(&e, &[0, 0, 0]).unwrap();
        assert_eq!(id.terms, vec![(Tuple::from_slice(&[0, 0, 0]), RationalFunction::one())]);
        let id = x.pbw_expansion_identity(&e, &[3, 1, 4]).unwrap();
        assert_eq!(id.terms.len(), 5);
        let c = Intertwiner::new(AlgebraId::C2).unwrap();
        let id = c.pbw_expansion_identity(&PbwEngine::new(AlgebraId::C2), &[2, 1, 1, 0]).unwrap();
        assert_eq!(id.terms.len(), 6);
    }
}
