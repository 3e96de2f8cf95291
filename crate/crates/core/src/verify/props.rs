use std::time::Instant;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{verify_serre, verify_xi_left_multiplication, Report};
use crate::coeffs::{qnum, RationalFunction};
use crate::error::Result;
use crate::intertwiner::{CheckedBlock, Intertwiner};
use crate::linalg::Matrix;
use crate::pbw::PbwEngine;
use crate::presets::{AlgebraId, WordLabel};
use crate::tuple::{fmt_tuple, reversed, Tuple, Weight};

fn weights_up_to(h: i32) -> Vec<Weight> {
    (0..=h).flat_map(|n| (0..=n).map(move |a| Weight(a, n - a))).collect()
}

fn pos(y: i32) -> i32 {
    y.max(0)
}

/// Output tuple selected at `q = 0` by a given input of the A2 table.
pub(crate) fn r_crystal(abc: &[i32]) -> Tuple {
    let (a, b, c) = (abc[0], abc[1], abc[2]);
    Tuple::from_slice(&[b + pos(a - c), a.min(c), b + pos(c - a)])
}

/// The same for the C2 table.
pub(crate) fn k_crystal(abcd: &[i32]) -> Tuple {
    let (a, b, c, d) = (abcd[0], abcd[1], abcd[2], abcd[3]);
    let x = pos(c - a + pos(d - b));
    Tuple::from_slice(&[x + a + b - d, c + d - x - a.min(c + x), a.min(c + x), b + pos(c - a + x)])
}

fn pochhammer_product(bases: &[u32], t: &[i32]) -> RationalFunction {
    bases
        .iter()
        .zip(t)
        .fold(RationalFunction::one(), |acc, (&d, &a)| &acc * &qnum::q_pochhammer(a as u32, d))
}

fn involution(b: &CheckedBlock) -> Option<String> {
    let sq: Matrix = b.matrix.mul(&b.matrix);
    (!sq.is_identity()).then(|| format!("square of block {} is not the identity", b.weight))
}

fn transpose_ratio(b: &CheckedBlock, bases: &[u32]) -> Option<String> {
    let p: Vec<_> = b.tuples.iter().map(|t| pochhammer_product(bases, t)).collect();
    for (i, out) in b.tuples.iter().enumerate() {
        for (j, input) in b.tuples.iter().enumerate() {
            let lhs = b.matrix.get(i, j) * &p[i];
            let rhs = b.matrix.get(j, i) * &p[j];
            if lhs != rhs {
                return Some(format!(
                    "out={} in={}: {} vs transpose {}",
                    fmt_tuple(out),
                    fmt_tuple(input),
                    b.matrix.get(i, j),
                    b.matrix.get(j, i)
                ));
            }
        }
    }
    None
}

fn conservation(id: AlgebraId, b: &CheckedBlock) -> Option<String> {
    let p = id.preset();
    for (i, out) in b.tuples.iter().enumerate() {
        for (j, input) in b.tuples.iter().enumerate() {
            if !b.matrix.get(i, j).is_zero() && p.conserved(out) != p.conserved(input) {
                return Some(format!("nonzero entry out={} in={}", fmt_tuple(out), fmt_tuple(input)));
            }
        }
    }
    None
}

fn integrality(b: &CheckedBlock) -> Option<String> {
    for (i, out) in b.tuples.iter().enumerate() {
        for (j, input) in b.tuples.iter().enumerate() {
            let x = b.matrix.get(i, j);
            if !x.is_integral_polynomial() {
                return Some(format!("out={} in={}: {x}", fmt_tuple(out), fmt_tuple(input)));
            }
        }
    }
    None
}

fn crystal_limit(b: &CheckedBlock, rule: fn(&[i32]) -> Tuple) -> Option<String> {
    for (i, out) in b.tuples.iter().enumerate() {
        let selected = rule(out);
        for (j, input) in b.tuples.iter().enumerate() {
            let x = b.matrix.get(i, j);
            let want = if *input == selected { BigRational::one() } else { BigRational::zero() };
            match x.specialize_q0() {
                Ok(v) if v == want => {}
                Ok(v) => {
                    return Some(format!("out={} in={}: value {v} at q=0, expected {want}", fmt_tuple(out), fmt_tuple(input)))
                }
                Err(e) => return Some(format!("out={} in={}: {e}", fmt_tuple(out), fmt_tuple(input))),
            }
        }
    }
    None
}

fn reversal_symmetry(b: &CheckedBlock, mirror: &CheckedBlock) -> Option<String> {
    for (i, out) in b.tuples.iter().enumerate() {
        for (j, input) in b.tuples.iter().enumerate() {
            let x = b.matrix.get(i, j);
            let y = mirror.get(&reversed(out), &reversed(input));
            if *x != y {
                return Some(format!("out={} in={}: {x} vs {y}", fmt_tuple(out), fmt_tuple(input)));
            }
        }
    }
    None
}

/// Structural properties of the checked table on every block up to
/// `max_height`, integrality of the PBW transition coefficients, and the
/// generator-level checks relating both sides.
pub fn verify_properties(id: AlgebraId, max_height: i32) -> Result<Report> {
    let start = Instant::now();
    let mut report = verify_table_properties(id, max_height)?;
    report.extend(verify_xi_left_multiplication(id, 4)?);
    report.extend(verify_serre(id, 3)?);
    report.duration = start.elapsed();
    Ok(report)
}

/// The block-wise part of [`verify_properties`].
pub fn verify_table_properties(id: AlgebraId, max_height: i32) -> Result<Report> {
    let start = Instant::now();
    let x = Intertwiner::new(id)?;
    let engine = PbwEngine::new(id);
    let p = id.preset();
    x.solver(x.checked_source()).blocks_up_to(max_height)?;
    let target_bases = p.slot_bases(x.checked_source().other());
    let kind = id.checked_kind();
    let results: Vec<Vec<(String, Option<String>)>> = weights_up_to(max_height)
        .par_iter()
        .map(|&w| -> Result<Vec<(String, Option<String>)>> {
            let b = x.checked_block(w)?;
            let mut out = vec![
                (format!("{kind} involution {w}"), involution(&b)),
                (format!("{kind} transpose ratio {w}"), transpose_ratio(&b, &target_bases)),
                (format!("{kind} conservation {w}"), conservation(id, &b)),
                (format!("{kind} integrality {w}"), integrality(&b)),
            ];
            match id {
                AlgebraId::A2 => {
                    let mirror = x.checked_block(Weight(w.1, w.0))?;
                    out.push((format!("R reversal {w}"), reversal_symmetry(&b, &mirror)));
                    out.push((format!("R at q=0 {w}"), crystal_limit(&b, r_crystal)));
                }
                AlgebraId::C2 => out.push((format!("K at q=0 {w}"), crystal_limit(&b, k_crystal))),
                AlgebraId::G2 => {}
            }
            for word in [WordLabel::One, WordLabel::Two] {
                let g = engine.transition_block(word, w)?;
                let bad = g.rows.iter().enumerate().find_map(|(i, a)| {
                    g.cols.iter().enumerate().find_map(|(j, c)| {
                        let v = g.divided.get(i, j);
                        (!v.is_integral_polynomial()).then(|| format!("A={} B={}: {v}", fmt_tuple(a), fmt_tuple(c)))
                    })
                });
                out.push((format!("gamma{word} integrality {w}"), bad));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut report = Report::new(format!("properties {id}"));
    for (c, w) in results.into_iter().flatten() {
        report.record(c, w);
    }
    report.sort();
    report.duration = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crystal_rules_on_examples() {
        assert_eq!(r_crystal(&[1, 3, 2]).as_slice(), &[3, 1, 4]);
        assert_eq!(k_crystal(&[3, 0, 1, 1]).as_slice(), &[2, 1, 1, 0]);
    }
}
