use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::Report;
use crate::coeffs::RationalFunction;
use crate::error::Result;
use crate::fock::{FockOp, TensorRep};
use crate::intertwiner::PhiSolver;
use crate::presets::{AlgebraId, WordLabel};
use crate::tuple::{fmt_tuple, simplex, Tuple};

type Vector = BTreeMap<Tuple, RationalFunction>;

fn add(v: &mut Vector, t: Tuple, c: RationalFunction) {
    let s = &v.remove(&t).unwrap_or_default() + &c;
    if !s.is_zero() {
        v.insert(t, s);
    }
}

fn apply_op(op: &FockOp, v: &Vector) -> Vector {
    let mut out = Vector::new();
    for (m, c) in v {
        for (t, x) in op.apply_ket(m) {
            add(&mut out, t, c * &RationalFunction::from_poly(x));
        }
    }
    out
}

/// `Phi` on plain kets, block by block.
fn apply_phi(solver: &PhiSolver, v: &Vector) -> Result<Vector> {
    let p = solver.preset();
    let mut out = Vector::new();
    for (m, c) in v {
        let block = solver.block(p.weight(solver.source(), m))?;
        let j = block.src.binary_search(m).expect("ket lies in its weight block");
        for (i, t) in block.tgt.iter().enumerate() {
            let x = block.divided.get(i, j);
            if !x.is_zero() {
                add(&mut out, t.clone(), c * x);
            }
        }
    }
    Ok(out)
}

/// `pi_t(t_jk) Phi |A> = Phi pi_s(t_jk) |A>` for every generator `t_jk` of
/// the quantized function algebra, on plain kets with entry sum at most
/// `max_sum`, in both directions between the two words.
pub fn verify_t_intertwining(id: AlgebraId, max_sum: i32) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new(format!("t-intertwining {id}"));
    for source in [WordLabel::One, WordLabel::Two] {
        let solver = PhiSolver::new(id, source)?;
        let rs = TensorRep::for_word(id, source);
        let rt = TensorRep::for_word(id, source.other());
        let n = rs.dim();
        let kets = simplex(rs.word().len(), max_sum);
        let gens: Vec<(usize, usize)> = (1..=n).flat_map(|j| (1..=n).map(move |k| (j, k))).collect();
        let results = gens
            .par_iter()
            .map(|&(j, k)| -> Result<(String, Option<String>)> {
                let (gs, gt) = (rs.generator(j, k)?, rt.generator(j, k)?);
                for a in &kets {
                    let ket: Vector = [(a.clone(), RationalFunction::one())].into_iter().collect();
                    let lhs = apply_op(gt, &apply_phi(&solver, &ket)?);
                    let rhs = apply_phi(&solver, &apply_op(gs, &ket))?;
                    if lhs != rhs {
                        let diff = lhs
                            .keys()
                            .chain(rhs.keys())
                            .find(|t| lhs.get(*t) != rhs.get(*t))
                            .map(|t| format!("coefficient of |{}>: {:?} vs {:?}", fmt_tuple(t), lhs.get(t), rhs.get(t)))
                            .unwrap_or_default();
                        return Ok((format!("word {source} -> {} t{j}{k}", source.other()), Some(format!("A={}: {diff}", fmt_tuple(a)))));
                    }
                }
                Ok((format!("word {source} -> {} t{j}{k}", source.other()), None))
            })
            .collect::<Result<Vec<_>>>()?;
        for (c, w) in results {
            report.record(c, w);
        }
    }
    report.note(format!("kets with entry sum <= {max_sum}"));
    report.duration = start.elapsed();
    Ok(report)
}
