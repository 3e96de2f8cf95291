use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::Report;
use crate::coeffs::{qnum, RationalFunction};
use crate::error::Result;
use crate::fock::{FockVector, TensorRep, Xi};
use crate::pbw::PbwEngine;
use crate::presets::{AlgebraId, WordExpr, WordLabel};
use crate::tuple::{cube, fmt_tuple, Tuple};

fn collect(terms: impl IntoIterator<Item = (Tuple, RationalFunction)>) -> BTreeMap<Tuple, RationalFunction> {
    let mut out: BTreeMap<Tuple, RationalFunction> = BTreeMap::new();
    for (t, c) in terms {
        let v = &out.remove(&t).unwrap_or_default() + &c;
        if !v.is_zero() {
            out.insert(t, v);
        }
    }
    out
}

fn show(m: &BTreeMap<Tuple, RationalFunction>) -> String {
    let parts: Vec<String> = m.iter().map(|(t, c)| format!("[{}]: {c}", fmt_tuple(t))).collect();
    format!("{{{}}}", parts.join(", "))
}

/// `pi(xi_i)` on rescaled kets against left multiplication by `e_i` on the
/// plain-power PBW basis, for all tuples with entries at most `max_entry`.
pub fn verify_xi_left_multiplication(id: AlgebraId, max_entry: i32) -> Result<Report> {
    let start = Instant::now();
    let engine = PbwEngine::new(id);
    let mut report = Report::new(format!("xi vs left multiplication {id}"));
    for w in [WordLabel::One, WordLabel::Two] {
        let rep = TensorRep::for_word(id, w);
        for node in [1u8, 2] {
            let xi = rep.xi(node)?;
            let tuples = cube(rep.word().len(), max_entry);
            let witness = tuples.par_iter().find_map_first(|t| {
                let lhs = collect(xi.apply_tilde(t));
                let rhs = collect(engine.rho_apply(w, node, t));
                (lhs != rhs).then(|| format!("A={}: xi gives {}, e_{node} gives {}", fmt_tuple(t), show(&lhs), show(&rhs)))
            });
            report.record(format!("word {w} e{node} ({} kets)", tuples.len()), witness);
        }
    }
    report.duration = start.elapsed();
    Ok(report)
}

/// `sum_r (-1)^r xi_i^(r) xi_j xi_i^(n-r) |m>>` with divided powers, summed
/// in Horner form over `r`.
fn serre_on_ket(xi_i: &Xi, xi_j: &Xi, n: u32, d: u32, bases: &[u32], m: &[i32]) -> FockVector {
    let mut powers = vec![FockVector::ket(bases, m)];
    for k in 0..n as usize {
        let next = xi_i.apply_tilde_vec(&powers[k]);
        powers.push(next);
    }
    let coeff = |r: u32| {
        let c = &RationalFunction::one() / &(&qnum::q_factorial(r, d) * &qnum::q_factorial(n - r, d));
        if r % 2 == 1 { -c } else { c }
    };
    let mut acc = FockVector::zero(bases);
    for r in (0..=n).rev() {
        if r < n {
            acc = xi_i.apply_tilde_vec(&acc);
        }
        acc.add_scaled(&xi_j.apply_tilde_vec(&powers[(n - r) as usize]), &coeff(r));
    }
    acc
}

/// The q-Serre relations: symbolically in the PBW normal form, and for the
/// operators `pi(xi_i)` on rescaled kets with entries at most `max_entry`.
pub fn verify_serre(id: AlgebraId, max_entry: i32) -> Result<Report> {
    let start = Instant::now();
    let p = id.preset();
    let engine = PbwEngine::new(id);
    let mut report = Report::new(format!("serre {id}"));
    for (k, rel) in p.serre_relations().into_iter().enumerate() {
        let mut x = WordExpr::zero();
        for (w, c) in rel {
            x = x.add(&WordExpr::word(w, c));
        }
        let right = engine.normal_order(&x);
        let left = engine.normal_order_left(&x);
        let witness = (!right.is_zero() || !left.is_zero()).then(|| format!("normal form {right:?} / {left:?}"));
        report.record(format!("pbw relation {}", k + 1), witness);
    }
    for w in [WordLabel::One, WordLabel::Two] {
        let rep = TensorRep::for_word(id, w);
        let xis = [rep.xi(1)?, rep.xi(2)?];
        for (i, j) in [(1usize, 2usize), (2, 1)] {
            let n = (1 - p.cartan[i - 1][j - 1]) as u32;
            let d = p.d[i - 1];
            let tuples = cube(rep.word().len(), max_entry);
            let witness = tuples.par_iter().find_map_first(|m| {
                let v = serre_on_ket(&xis[i - 1], &xis[j - 1], n, d, rep.bases(), m);
                (!v.is_zero()).then(|| format!("ket {}: {v:?}", fmt_tuple(m)))
            });
            report.record(format!("word {w} xi relation ({i},{j}) ({} kets)", tuples.len()), witness);
        }
    }
    report.duration = start.elapsed();
    Ok(report)
}
